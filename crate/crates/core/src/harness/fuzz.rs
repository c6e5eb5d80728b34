//! Seeded random programs, formulas and HT belief interpretations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::faeel::{HtBeliefInterpretation, HtBeliefView};
use crate::ht::{HtPair, Interpretation};
use crate::syntax::{Atom, Formula, Literal, Negation, ObjectiveLiteral, Program, Rule, Signature, SubjectiveLiteral};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Default,
    /// Subjective literals always carry at least one outer negation.
    NegatedModalOnly,
}

fn objective(rng: &mut impl Rng, atom: Atom, negated: bool) -> ObjectiveLiteral {
    let negation = if negated {
        if rng.gen_bool(0.7) {
            Negation::Single
        } else {
            Negation::Double
        }
    } else {
        Negation::None
    };
    ObjectiveLiteral::new(atom, negation)
}

fn inner_literal(rng: &mut impl Rng, atom: Atom) -> ObjectiveLiteral {
    let negation = match rng.gen_range(0..10) {
        0..=6 => Negation::None,
        7..=8 => Negation::Single,
        _ => Negation::Double,
    };
    ObjectiveLiteral::new(atom, negation)
}

fn literal(rng: &mut impl Rng, atoms: &[Atom], profile: Profile) -> Literal {
    let atom = *atoms.choose(rng).expect("nonempty signature");
    let roll = rng.gen_range(0..100);
    let outer_negated = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(0.75) {
            Negation::Single
        } else {
            Negation::Double
        }
    };
    match roll {
        0..=39 => Literal::Objective(objective(rng, atom, false)),
        40..=59 => Literal::Objective(objective(rng, atom, true)),
        60..=84 if profile == Profile::Default => {
            Literal::Subjective(SubjectiveLiteral::new(inner_literal(rng, atom), Negation::None))
        }
        _ => {
            let inner = inner_literal(rng, atom);
            Literal::Subjective(SubjectiveLiteral::new(inner, outer_negated(rng)))
        }
    }
}

fn rule(rng: &mut impl Rng, atoms: &[Atom], profile: Profile) -> Rule {
    loop {
        let n = rng.gen_range(0..=2usize.min(atoms.len()));
        let m = rng.gen_range(0..=3usize);
        if n + m == 0 {
            continue;
        }
        let head: Vec<Atom> = atoms.choose_multiple(rng, n).copied().collect();
        let body: Vec<Literal> = (0..m).map(|_| literal(rng, atoms, profile)).collect();
        return Rule::new(head, body).expect("nonempty rule");
    }
}

/// A program over `sig` with between one and `max_rules` rules.
/// Deterministic in its arguments.
pub fn random_program(seed: u64, sig: &Signature, max_rules: usize, profile: Profile) -> Program {
    assert!(max_rules >= 1, "max_rules must be positive");
    assert!(!sig.is_empty(), "signature must not be empty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms: Vec<Atom> = sig.atoms().collect();
    let count = rng.gen_range(1..=max_rules);
    let rules = (0..count).map(|_| rule(&mut rng, &atoms, profile)).collect();
    Program::new(rules, sig.clone())
}

/// A formula over the first `n_atoms` atoms with nesting at most `depth`.
pub fn random_formula(rng: &mut impl Rng, n_atoms: usize, depth: usize) -> Formula {
    let leaf = |rng: &mut dyn rand::RngCore| {
        if n_atoms == 0 || rng.gen_bool(0.1) {
            Formula::Bottom
        } else {
            Formula::atom(Atom::new(rng.gen_range(0..n_atoms)))
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..7) {
        0 => leaf(rng),
        1 => Formula::and(random_formula(rng, n_atoms, depth - 1), random_formula(rng, n_atoms, depth - 1)),
        2 => Formula::or(random_formula(rng, n_atoms, depth - 1), random_formula(rng, n_atoms, depth - 1)),
        3 | 4 => Formula::implies(random_formula(rng, n_atoms, depth - 1), random_formula(rng, n_atoms, depth - 1)),
        5 => Formula::not(random_formula(rng, n_atoms, depth - 1)),
        _ => Formula::know(random_formula(rng, n_atoms, depth - 1)),
    }
}

fn random_pair(rng: &mut impl Rng, n_atoms: usize) -> HtPair {
    let there = rng.gen_range(0..1u64 << n_atoms);
    let here = there & rng.gen::<u64>();
    HtPair::new(Interpretation::from_bits(here), Interpretation::from_bits(there)).expect("here within there")
}

/// A real-world pair and a view of one to four pairs over `n_atoms` atoms.
pub fn random_ht_belief_interpretation(rng: &mut impl Rng, n_atoms: usize) -> HtBeliefInterpretation {
    let size = rng.gen_range(1..=4);
    let view = HtBeliefView::new((0..size).map(|_| random_pair(rng, n_atoms))).expect("nonempty");
    HtBeliefInterpretation::new(random_pair(rng, n_atoms), view)
}
