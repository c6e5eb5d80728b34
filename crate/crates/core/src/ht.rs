//! Classical and here-and-there satisfaction, classical models and stable
//! (equilibrium) models of modal-free theories.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Atom, Formula, Signature, Theory};
use crate::views::{all_worlds, submasks};

/// A set of atoms, stored as a bit set over signature indices.
///
/// Ordering is canonical: by cardinality, then lexicographically by the
/// sorted atom indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Interpretation(u64);

impl Interpretation {
    pub fn empty() -> Self {
        Interpretation(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        Interpretation(bits)
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Interpretation(atoms.into_iter().fold(0, |m, a| m | a.bit()))
    }

    /// Looks up each name in `sig`; `None` if any is unknown.
    pub fn from_names<'a>(sig: &Signature, names: impl IntoIterator<Item = &'a str>) -> Option<Self> {
        names
            .into_iter()
            .map(|n| sig.lookup(n))
            .collect::<Option<Vec<_>>>()
            .map(Interpretation::from_atoms)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, a: Atom) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Interpretation) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Interpretation) -> Self {
        Interpretation(self.0 | other.0)
    }

    pub fn intersection(self, other: Interpretation) -> Self {
        Interpretation(self.0 & other.0)
    }

    pub fn difference(self, other: Interpretation) -> Self {
        Interpretation(self.0 & !other.0)
    }

    pub fn atoms(self) -> impl Iterator<Item = Atom> {
        (0..64).filter(move |i| self.0 >> i & 1 == 1).map(Atom::new)
    }

    pub fn atom_names(self, sig: &Signature) -> Vec<String> {
        self.atoms().map(|a| sig.name(a).to_string()).collect()
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> InterpretationDisplay<'a> {
        InterpretationDisplay { interp: *self, sig }
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the lowest differing atom belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct InterpretationDisplay<'a> {
    interp: Interpretation,
    sig: &'a Signature,
}

impl fmt::Display for InterpretationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.interp.atoms().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.sig.name(a))?;
        }
        f.write_str("}")
    }
}

/// A here-and-there interpretation `⟨H, T⟩` with `H ⊆ T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HtPair {
    here: Interpretation,
    there: Interpretation,
}

impl HtPair {
    pub fn new(here: Interpretation, there: Interpretation) -> Result<Self> {
        if !here.is_subset(there) {
            return Err(Error::PreconditionViolation(
                "here component must be a subset of there component".into(),
            ));
        }
        Ok(HtPair { here, there })
    }

    pub fn total(t: Interpretation) -> Self {
        HtPair { here: t, there: t }
    }

    pub fn here(self) -> Interpretation {
        self.here
    }

    pub fn there(self) -> Interpretation {
        self.there
    }

    pub fn is_total(self) -> bool {
        self.here == self.there
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        struct D<'a>(HtPair, &'a Signature);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "<{},{}>", self.0.here.display(self.1), self.0.there.display(self.1))
            }
        }
        D(*self, sig)
    }
}

impl Ord for HtPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.there.cmp(&other.there).then_with(|| self.here.cmp(&other.here))
    }
}

impl PartialOrd for HtPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn eval_classical(world: u64, f: &Formula) -> Result<bool> {
    Ok(match f {
        Formula::Bottom => false,
        Formula::Atom(a) => world & a.bit() != 0,
        Formula::And(l, r) => eval_classical(world, l)? && eval_classical(world, r)?,
        Formula::Or(l, r) => eval_classical(world, l)? || eval_classical(world, r)?,
        Formula::Implies(l, r) => !eval_classical(world, l)? || eval_classical(world, r)?,
        Formula::Know(_) => return Err(Error::ModalInClassicalContext),
    })
}

pub(crate) fn eval_ht(here: u64, there: u64, f: &Formula) -> Result<bool> {
    Ok(match f {
        Formula::Bottom => false,
        Formula::Atom(a) => here & a.bit() != 0,
        Formula::And(l, r) => eval_ht(here, there, l)? && eval_ht(here, there, r)?,
        Formula::Or(l, r) => eval_ht(here, there, l)? || eval_ht(here, there, r)?,
        Formula::Implies(l, r) => {
            eval_classical(there, f)? && (!eval_ht(here, there, l)? || eval_ht(here, there, r)?)
        }
        Formula::Know(_) => return Err(Error::ModalInClassicalContext),
    })
}

pub fn classical_sat(t: Interpretation, f: &Formula) -> Result<bool> {
    eval_classical(t.bits(), f)
}

pub fn ht_sat(p: HtPair, f: &Formula) -> Result<bool> {
    eval_ht(p.here.bits(), p.there.bits(), f)
}

fn require_modal_free(theory: &Theory) -> Result<()> {
    if theory.is_modal_free() {
        Ok(())
    } else {
        Err(Error::ModalInClassicalContext)
    }
}

pub(crate) fn is_classical_model(world: u64, formulas: &[Formula]) -> Result<bool> {
    for f in formulas {
        if !eval_classical(world, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn is_ht_model(here: u64, there: u64, formulas: &[Formula]) -> Result<bool> {
    for f in formulas {
        if !eval_ht(here, there, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T` is stable for `formulas` if it is a classical model and no proper
/// subset `H ⊂ T` gives an HT model `⟨H, T⟩`.
pub(crate) fn is_stable(world: u64, formulas: &[Formula]) -> Result<bool> {
    if !is_classical_model(world, formulas)? {
        return Ok(false);
    }
    for here in submasks(world).skip(1) {
        if is_ht_model(here, world, formulas)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All classical models over the theory's signature, canonically sorted.
pub fn classical_models(theory: &Theory) -> Result<Vec<Interpretation>> {
    theory.signature.check_cap()?;
    require_modal_free(theory)?;
    let mut out = Vec::new();
    for w in all_worlds(theory.signature.len()) {
        if is_classical_model(w, &theory.formulas)? {
            out.push(Interpretation(w));
        }
    }
    out.sort();
    Ok(out)
}

/// All stable models over the theory's signature, canonically sorted.
pub fn stable_models(theory: &Theory) -> Result<Vec<Interpretation>> {
    theory.signature.check_cap()?;
    require_modal_free(theory)?;
    let mut out = Vec::new();
    for w in all_worlds(theory.signature.len()) {
        if is_stable(w, &theory.formulas)? {
            out.push(Interpretation(w));
        }
    }
    out.sort();
    Ok(out)
}
