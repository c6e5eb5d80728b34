//! Formula and program syntax.
//!
//! Formulas are built from `⊥`, atoms, `∧`, `∨`, `→` and the belief operator
//! `K` (written `L` in the literature). Negation and `⊤` are not separate
//! node kinds: `¬φ` is stored as `φ → ⊥` and `⊤` as `⊥ → ⊥`, so structural
//! equality already accounts for the derived connectives.

mod parser;

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Position, Result};

pub use parser::{parse_program, parse_program_with, parse_theory};

/// Hard limit imposed by the `u64` bit-set representation of interpretations.
pub const MAX_ATOMS: usize = 64;

/// Largest signature any exhaustive enumeration accepts, whatever the cap says.
pub const MAX_ENUMERABLE_ATOMS: usize = 24;

/// An atom, identified by its position in a [`Signature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(u32);

impl Atom {
    pub fn new(index: usize) -> Self {
        Atom(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// Ordered set of atom names plus the exhaustive-enumeration cap.
///
/// First-mention order is the canonical order used for every sorted output.
#[derive(Debug, Clone)]
pub struct Signature {
    names: IndexSet<String>,
    enumeration_cap: usize,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Signature {}

impl Default for Signature {
    fn default() -> Self {
        Signature { names: IndexSet::new(), enumeration_cap: Self::DEFAULT_CAP }
    }
}

impl Signature {
    pub const DEFAULT_CAP: usize = 4;

    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut sig = Signature::new();
        for n in names {
            sig.intern(n);
        }
        sig
    }

    /// Returns the atom for `name`, adding it at the end if it is new.
    pub fn intern(&mut self, name: impl Into<String>) -> Atom {
        let (idx, _) = self.names.insert_full(name.into());
        Atom::new(idx)
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.names.get_index_of(name).map(Atom::new)
    }

    pub fn name(&self, atom: Atom) -> &str {
        self.names.get_index(atom.index()).map(String::as_str).unwrap_or("?")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len()).map(Atom::new)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.names.iter().map(String::as_str)
    }

    pub fn enumeration_cap(&self) -> usize {
        self.enumeration_cap
    }

    pub fn set_enumeration_cap(&mut self, cap: usize) {
        self.enumeration_cap = cap;
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.enumeration_cap = cap;
        self
    }

    /// Bit mask with one bit per atom of the signature.
    pub fn full_mask(&self) -> u64 {
        match self.len() {
            0 => 0,
            n if n >= 64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Fails with [`Error::CapExceeded`] when exhaustive enumeration over
    /// this signature is not allowed.
    pub fn check_cap(&self) -> Result<()> {
        let cap = self.enumeration_cap.min(MAX_ENUMERABLE_ATOMS);
        if self.len() > cap {
            return Err(Error::CapExceeded { atoms: self.len(), cap });
        }
        Ok(())
    }

    /// True if `self` keeps every atom of `other` at the same index.
    pub fn extends(&self, other: &Signature) -> bool {
        other.len() <= self.len() && other.names.iter().zip(self.names.iter()).all(|(a, b)| a == b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Bottom,
    Atom(Atom),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Know(Box<Formula>),
}

impl Formula {
    pub fn top() -> Self {
        Formula::implies(Formula::Bottom, Formula::Bottom)
    }

    pub fn atom(a: Atom) -> Self {
        Formula::Atom(a)
    }

    pub fn not(f: Formula) -> Self {
        Formula::implies(f, Formula::Bottom)
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::and(Formula::implies(l.clone(), r.clone()), Formula::implies(r, l))
    }

    pub fn know(f: Formula) -> Self {
        Formula::Know(Box::new(f))
    }

    /// Left-folded conjunction; `⊤` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or_else(Formula::top)
    }

    /// Left-folded disjunction; `⊥` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bottom)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Implies(l, r) if **l == Formula::Bottom && **r == Formula::Bottom)
    }

    /// If `self` is `¬φ` (other than `⊤`), returns `φ`.
    pub fn negated(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(l, r) if **r == Formula::Bottom && !self.is_top() => Some(l),
            _ => None,
        }
    }

    pub fn is_modal_free(&self) -> bool {
        match self {
            Formula::Bottom | Formula::Atom(_) => true,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.is_modal_free() && r.is_modal_free()
            }
            Formula::Know(_) => false,
        }
    }

    /// Bit mask of the atoms occurring in the formula.
    pub fn atom_mask(&self) -> u64 {
        match self {
            Formula::Bottom => 0,
            Formula::Atom(a) => a.bit(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.atom_mask() | r.atom_mask()
            }
            Formula::Know(f) => f.atom_mask(),
        }
    }

    pub fn max_atom_index(&self) -> Option<usize> {
        let m = self.atom_mask();
        (m != 0).then(|| 63 - m.leading_zeros() as usize)
    }

    /// Pushes every `K`-subformula not nested inside another one, without
    /// structural duplicates, in left-to-right order.
    pub fn collect_maximal_modal(&self, out: &mut Vec<Formula>) {
        match self {
            Formula::Bottom | Formula::Atom(_) => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_maximal_modal(out);
                r.collect_maximal_modal(out);
            }
            Formula::Know(_) => {
                if !out.contains(self) {
                    out.push(self.clone());
                }
            }
        }
    }

    /// Pushes every `K`-subformula (nested ones included), innermost first.
    pub fn collect_all_modal(&self, out: &mut Vec<Formula>) {
        match self {
            Formula::Bottom | Formula::Atom(_) => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_all_modal(out);
                r.collect_all_modal(out);
            }
            Formula::Know(inner) => {
                inner.collect_all_modal(out);
                if !out.contains(self) {
                    out.push(self.clone());
                }
            }
        }
    }

    /// Rebuilds the formula with every maximal `K`-subformula replaced by
    /// `replace(subformula)`.
    pub fn map_maximal_modal(&self, replace: &mut impl FnMut(&Formula) -> Formula) -> Formula {
        match self {
            Formula::Bottom | Formula::Atom(_) => self.clone(),
            Formula::And(l, r) => {
                Formula::and(l.map_maximal_modal(replace), r.map_maximal_modal(replace))
            }
            Formula::Or(l, r) => Formula::or(l.map_maximal_modal(replace), r.map_maximal_modal(replace)),
            Formula::Implies(l, r) => {
                Formula::implies(l.map_maximal_modal(replace), r.map_maximal_modal(replace))
            }
            Formula::Know(_) => replace(self),
        }
    }

    /// True if every `K` occurrence lies inside the scope of some negation.
    pub fn modal_only_under_negation(&self) -> bool {
        fn walk(f: &Formula, negated: bool) -> bool {
            match f {
                Formula::Bottom | Formula::Atom(_) => true,
                Formula::Know(inner) => negated && walk(inner, negated),
                Formula::And(l, r) | Formula::Or(l, r) => walk(l, negated) && walk(r, negated),
                Formula::Implies(l, r) => {
                    if **r == Formula::Bottom {
                        walk(l, true)
                    } else {
                        walk(l, negated) && walk(r, negated)
                    }
                }
            }
        }
        walk(self, false)
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> FormulaDisplay<'a> {
        FormulaDisplay { formula: self, sig }
    }
}

/// Printer producing text that `parse_theory` reads back to the same AST.
pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    sig: &'a Signature,
}

impl FormulaDisplay<'_> {
    // 1: ->, 2: |, 3: &, 4: prefix operators and atoms
    fn write(&self, f: &mut fmt::Formatter<'_>, node: &Formula, min_level: u8) -> fmt::Result {
        let level = match node {
            Formula::And(..) => 3,
            Formula::Or(..) => 2,
            Formula::Implies(..) if node.is_top() || node.negated().is_some() => 4,
            Formula::Implies(..) => 1,
            _ => 4,
        };
        let paren = level < min_level;
        if paren {
            f.write_str("(")?;
        }
        match node {
            Formula::Bottom => f.write_str("#bot")?,
            Formula::Atom(a) => f.write_str(self.sig.name(*a))?,
            Formula::Know(inner) => {
                f.write_str("K ")?;
                self.write(f, inner, 4)?;
            }
            Formula::And(l, r) => {
                self.write(f, l, 3)?;
                f.write_str(" & ")?;
                self.write(f, r, 4)?;
            }
            Formula::Or(l, r) => {
                self.write(f, l, 2)?;
                f.write_str(" | ")?;
                self.write(f, r, 3)?;
            }
            Formula::Implies(..) if node.is_top() => f.write_str("#top")?,
            Formula::Implies(l, r) => match node.negated() {
                Some(inner) => {
                    f.write_str("not ")?;
                    self.write(f, inner, 4)?;
                }
                None => {
                    self.write(f, l, 2)?;
                    f.write_str(" -> ")?;
                    self.write(f, r, 1)?;
                }
            },
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.formula, 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaClass {
    Objective,
    Subjective,
    Mixed,
    Atomless,
}

pub fn classify_formula(f: &Formula) -> FormulaClass {
    // (atom outside K, atom under K, K occurs)
    fn scan(f: &Formula, under: bool, acc: &mut (bool, bool, bool)) {
        match f {
            Formula::Bottom => {}
            Formula::Atom(_) => {
                if under {
                    acc.1 = true;
                } else {
                    acc.0 = true;
                }
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                scan(l, under, acc);
                scan(r, under, acc);
            }
            Formula::Know(inner) => {
                acc.2 = true;
                scan(inner, true, acc);
            }
        }
    }
    let mut acc = (false, false, false);
    scan(f, false, &mut acc);
    match acc {
        (false, false, _) => FormulaClass::Atomless,
        (_, _, false) => FormulaClass::Objective,
        (false, true, true) => FormulaClass::Subjective,
        _ => FormulaClass::Mixed,
    }
}

/// A finite set of formulas over a signature.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Theory {
    pub formulas: Vec<Formula>,
    pub signature: Signature,
}

impl Theory {
    pub fn new(formulas: Vec<Formula>, signature: Signature) -> Self {
        debug_assert!(formulas
            .iter()
            .all(|f| f.max_atom_index().map_or(true, |i| i < signature.len())));
        Theory { formulas, signature }
    }

    pub fn is_modal_free(&self) -> bool {
        self.formulas.iter().all(Formula::is_modal_free)
    }

    /// Distinct maximal `K`-subformulas of all formulas, in order of appearance.
    pub fn maximal_modal_subformulas(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        for f in &self.formulas {
            f.collect_maximal_modal(&mut out);
        }
        out
    }

    pub fn all_modal_subformulas(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        for f in &self.formulas {
            f.collect_all_modal(&mut out);
        }
        out
    }

    pub fn modal_only_under_negation(&self) -> bool {
        self.formulas.iter().all(Formula::modal_only_under_negation)
    }

    /// The same theory plus `a ∨ ¬a` for every atom of the signature.
    pub fn with_excluded_middle(&self) -> Theory {
        let mut formulas = self.formulas.clone();
        formulas.extend(
            self.signature
                .atoms()
                .map(|a| Formula::or(Formula::atom(a), Formula::not(Formula::atom(a)))),
        );
        Theory { formulas, signature: self.signature.clone() }
    }

    pub fn with_formula(&self, f: Formula) -> Theory {
        let mut t = self.clone();
        t.formulas.push(f);
        t
    }

    /// Appends atoms that do not occur in any formula to the signature.
    pub fn extend_signature<I, S>(&mut self, names: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for n in names {
            self.signature.intern(n);
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for formula in &self.formulas {
            writeln!(f, "{}.", formula.display(&self.signature))?;
        }
        Ok(())
    }
}

/// Zero, one or two leading negations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Negation {
    None,
    Single,
    Double,
}

impl Negation {
    pub fn from_count(n: usize) -> Option<Self> {
        match n {
            0 => Some(Negation::None),
            1 => Some(Negation::Single),
            2 => Some(Negation::Double),
            _ => None,
        }
    }

    pub fn count(self) -> usize {
        self as usize
    }

    fn wrap(self, f: Formula) -> Formula {
        (0..self.count()).fold(f, |acc, _| Formula::not(acc))
    }

    /// Classical value of the negated expression given the value underneath.
    fn apply(self, value: bool) -> bool {
        match self {
            Negation::Single => !value,
            _ => value,
        }
    }

    fn prefix(self) -> &'static str {
        ["", "not ", "not not "][self.count()]
    }
}

/// `a`, `¬a` or `¬¬a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ObjectiveLiteral {
    pub atom: Atom,
    pub negation: Negation,
}

impl ObjectiveLiteral {
    pub fn new(atom: Atom, negation: Negation) -> Self {
        ObjectiveLiteral { atom, negation }
    }

    pub fn to_formula(self) -> Formula {
        self.negation.wrap(Formula::atom(self.atom))
    }

    /// Classical truth in the world given as an atom bit mask.
    pub fn holds(self, world: u64) -> bool {
        self.negation.apply(world & self.atom.bit() != 0)
    }
}

/// `K l`, `¬K l` or `¬¬K l` for an objective literal `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubjectiveLiteral {
    pub inner: ObjectiveLiteral,
    pub negation: Negation,
}

impl SubjectiveLiteral {
    pub fn new(inner: ObjectiveLiteral, negation: Negation) -> Self {
        SubjectiveLiteral { inner, negation }
    }

    pub fn to_formula(self) -> Formula {
        self.negation.wrap(Formula::know(self.inner.to_formula()))
    }

    /// Truth under a belief view given as world bit masks.
    pub fn holds(self, worlds: &[u64]) -> bool {
        self.negation.apply(worlds.iter().all(|&w| self.inner.holds(w)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Literal {
    Objective(ObjectiveLiteral),
    Subjective(SubjectiveLiteral),
}

impl Literal {
    pub fn atom(a: Atom) -> Self {
        Literal::Objective(ObjectiveLiteral::new(a, Negation::None))
    }

    pub fn know(a: Atom) -> Self {
        Literal::Subjective(SubjectiveLiteral::new(
            ObjectiveLiteral::new(a, Negation::None),
            Negation::None,
        ))
    }

    pub fn to_formula(self) -> Formula {
        match self {
            Literal::Objective(l) => l.to_formula(),
            Literal::Subjective(l) => l.to_formula(),
        }
    }

    /// Belief-interpretation truth at real world `world` under `worlds`.
    pub fn holds(self, world: u64, worlds: &[u64]) -> bool {
        match self {
            Literal::Objective(l) => l.holds(world),
            Literal::Subjective(l) => l.holds(worlds),
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            Literal::Objective(l) => l.negation == Negation::None,
            Literal::Subjective(l) => {
                l.negation == Negation::None && l.inner.negation == Negation::None
            }
        }
    }

    /// Recognises a formula of literal shape.
    pub fn from_formula(f: &Formula) -> Option<Literal> {
        let (outer, core) = strip_negations(f);
        match core {
            Formula::Atom(a) => {
                Some(Literal::Objective(ObjectiveLiteral::new(*a, Negation::from_count(outer)?)))
            }
            Formula::Know(inner) => {
                let (n, core) = strip_negations(inner);
                match core {
                    Formula::Atom(a) => Some(Literal::Subjective(SubjectiveLiteral::new(
                        ObjectiveLiteral::new(*a, Negation::from_count(n)?),
                        Negation::from_count(outer)?,
                    ))),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn write(self, f: &mut fmt::Formatter<'_>, sig: &Signature) -> fmt::Result {
        match self {
            Literal::Objective(l) => write!(f, "{}{}", l.negation.prefix(), sig.name(l.atom)),
            Literal::Subjective(l) => write!(
                f,
                "{}K {}{}",
                l.negation.prefix(),
                l.inner.negation.prefix(),
                sig.name(l.inner.atom)
            ),
        }
    }
}

fn strip_negations(mut f: &Formula) -> (usize, &Formula) {
    let mut n = 0;
    while let Some(inner) = f.negated() {
        n += 1;
        f = inner;
    }
    (n, f)
}

/// `a_1 ∨ … ∨ a_n ← B_1 ∧ … ∧ B_m` with `n + m > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    head: Vec<Atom>,
    body: Vec<Literal>,
}

impl Rule {
    pub fn new(head: Vec<Atom>, body: Vec<Literal>) -> Result<Self> {
        let mut dedup = Vec::with_capacity(head.len());
        for a in head {
            if !dedup.contains(&a) {
                dedup.push(a);
            }
        }
        if dedup.is_empty() && body.is_empty() {
            return Err(Error::PreconditionViolation(
                "a rule needs a head atom or a body literal".into(),
            ));
        }
        Ok(Rule { head: dedup, body })
    }

    pub fn constraint(body: Vec<Literal>) -> Result<Self> {
        Rule::new(Vec::new(), body)
    }

    pub fn head(&self) -> &[Atom] {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }

    pub fn head_mask(&self) -> u64 {
        self.head.iter().fold(0, |m, a| m | a.bit())
    }

    /// Atoms of positive objective body literals.
    pub fn body_pos_objective(&self) -> u64 {
        self.body.iter().fold(0, |m, l| match l {
            Literal::Objective(o) if o.negation == Negation::None => m | o.atom.bit(),
            _ => m,
        })
    }

    /// Atoms of positive subjective body literals (`K a`).
    pub fn body_pos_subjective(&self) -> u64 {
        self.body.iter().fold(0, |m, l| match l {
            Literal::Subjective(s) if l.is_positive() => m | s.inner.atom.bit(),
            _ => m,
        })
    }

    pub fn body_holds(&self, world: u64, worlds: &[u64]) -> bool {
        self.body.iter().all(|l| l.holds(world, worlds))
    }

    /// `Body → Head`, with `⊤` for an empty body and `⊥` for an empty head.
    pub fn to_formula(&self) -> Formula {
        let body = Formula::conjunction(self.body.iter().map(|l| l.to_formula()));
        let head = Formula::disjunction(self.head.iter().map(|a| Formula::atom(*a)));
        Formula::implies(body, head)
    }

    /// Recognises a formula of rule shape: `Body → Head` or a bare head.
    pub fn from_formula(f: &Formula) -> Option<Rule> {
        fn head_atoms(f: &Formula, out: &mut Vec<Atom>) -> bool {
            match f {
                Formula::Bottom => true,
                Formula::Atom(a) => {
                    out.push(*a);
                    true
                }
                Formula::Or(l, r) => head_atoms(l, out) && head_atoms(r, out),
                _ => false,
            }
        }
        fn body_literals(f: &Formula, out: &mut Vec<Literal>) -> bool {
            if f.is_top() {
                return true;
            }
            match f {
                Formula::And(l, r) => body_literals(l, out) && body_literals(r, out),
                _ => match Literal::from_formula(f) {
                    Some(l) => {
                        out.push(l);
                        true
                    }
                    None => false,
                },
            }
        }

        let mut head = Vec::new();
        let mut body = Vec::new();
        let shaped = match f {
            Formula::Implies(b, h) if !f.is_top() => {
                head_atoms(h, &mut head) && body_literals(b, &mut body)
            }
            _ => head_atoms(f, &mut head) && !head.is_empty(),
        };
        if !shaped {
            return None;
        }
        Rule::new(head, body).ok()
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> RuleDisplay<'a> {
        RuleDisplay { rule: self, sig }
    }
}

pub struct RuleDisplay<'a> {
    rule: &'a Rule,
    sig: &'a Signature,
}

impl fmt::Display for RuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.rule.head.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            f.write_str(self.sig.name(*a))?;
        }
        if !self.rule.body.is_empty() {
            if self.rule.head.is_empty() {
                f.write_str(":- ")?;
            } else {
                f.write_str(" :- ")?;
            }
            for (i, l) in self.rule.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                l.write(f, self.sig)?;
            }
        }
        f.write_str(".")
    }
}

/// An epistemic specification: a finite set of rules.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub rules: Vec<Rule>,
    pub signature: Signature,
}

impl Program {
    pub fn new(rules: Vec<Rule>, signature: Signature) -> Self {
        Program { rules, signature }
    }

    pub fn to_theory(&self) -> Theory {
        Theory::new(self.rules.iter().map(Rule::to_formula).collect(), self.signature.clone())
    }

    /// Reads a theory back as a program when every formula has rule shape.
    pub fn from_theory(theory: &Theory) -> Result<Program> {
        let rules = theory
            .formulas
            .iter()
            .enumerate()
            .map(|(i, f)| {
                Rule::from_formula(f).ok_or_else(|| Error::FragmentViolation {
                    pos: Position { line: i + 1, column: 1 },
                    message: format!("formula `{}` is not a rule", f.display(&theory.signature)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Program { rules, signature: theory.signature.clone() })
    }

    pub fn with_rule(&self, rule: Rule) -> Program {
        let mut p = self.clone();
        p.rules.push(rule);
        p
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{}", r.display(&self.signature))?;
        }
        Ok(())
    }
}
