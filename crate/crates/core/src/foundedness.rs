//! Unfounded sets of epistemic programs and foundedness of world views.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ht::Interpretation;
use crate::kd45::BeliefView;
use crate::syntax::{Program, Rule, Signature};
use crate::views::submasks;

/// A pair `⟨X, I⟩` of an atom set and a belief set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnfoundedPair {
    pub x: Interpretation,
    pub i: Interpretation,
}

impl UnfoundedPair {
    pub fn new(x: Interpretation, i: Interpretation) -> Self {
        UnfoundedPair { x, i }
    }
}

/// A nonempty set of `⟨X, I⟩` pairs, sorted by `X` then `I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnfoundedSet {
    pairs: Vec<UnfoundedPair>,
}

impl UnfoundedSet {
    pub fn new(pairs: impl IntoIterator<Item = UnfoundedPair>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort();
        pairs.dedup();
        if pairs.is_empty() {
            return Err(Error::InvalidView("an unfounded set must be nonempty".into()));
        }
        Ok(UnfoundedSet { pairs })
    }

    pub fn pairs(&self) -> &[UnfoundedPair] {
        &self.pairs
    }

    /// Union of all `X` components.
    pub fn y(&self) -> Interpretation {
        self.pairs.iter().fold(Interpretation::empty(), |acc, p| acc.union(p.x))
    }

    pub fn to_json(&self, sig: &Signature) -> Vec<WitnessPairJson> {
        self.pairs
            .iter()
            .map(|p| WitnessPairJson { x: p.x.atom_names(sig), i: p.i.atom_names(sig) })
            .collect()
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        struct D<'a>(&'a UnfoundedSet, &'a Signature);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (k, p) in self.0.pairs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "<{},{}>", p.x.display(self.1), p.i.display(self.1))?;
                }
                f.write_str("}")
            }
        }
        D(self, sig)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPairJson {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundednessVerdict {
    pub founded: bool,
    pub witness: Option<UnfoundedSet>,
}

/// Which `⟨X, I⟩` pairs the witness search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessSearch {
    /// Any nonempty `X` meeting `I`.
    #[default]
    Full,
    /// Only `X ⊆ I`.
    WithinWorlds,
}

fn justifies(rule: &Rule, x: u64, i: u64, y: u64, worlds: &[u64]) -> bool {
    rule.head_mask() & x != 0
        && rule.body_holds(i, worlds)
        && rule.body_pos_objective() & x == 0
        && rule.head_mask() & !x & i == 0
        && rule.body_pos_subjective() & y == 0
}

fn pairs_unfounded(p: &Program, pairs: &[(u64, u64)], worlds: &[u64]) -> bool {
    let y = pairs.iter().fold(0, |acc, &(x, _)| acc | x);
    pairs
        .iter()
        .all(|&(x, i)| !p.rules.iter().any(|r| justifies(r, x, i, y, worlds)))
}

pub fn is_unfounded_set(u: &UnfoundedSet, p: &Program, w: &BeliefView) -> bool {
    let pairs: Vec<(u64, u64)> = u.pairs.iter().map(|q| (q.x.bits(), q.i.bits())).collect();
    pairs_unfounded(p, &pairs, &w.bits())
}

/// Whether `u` satisfies the anchoring conditions: `I ∈ w` and `X ∩ I ≠ ∅`.
pub fn is_anchored(u: &UnfoundedSet, w: &BeliefView) -> bool {
    u.pairs.iter().all(|q| w.contains(q.i) && !q.x.intersection(q.i).is_empty())
}

fn universe(p: &Program, worlds: &[u64], mode: WitnessSearch) -> Vec<(u64, u64)> {
    let full = p.signature.full_mask();
    let mut out = Vec::new();
    for &i in worlds {
        let range = match mode {
            WitnessSearch::Full => full,
            WitnessSearch::WithinWorlds => i,
        };
        for x in submasks(range) {
            if x & i != 0 {
                out.push((x, i));
            }
        }
    }
    out
}

fn to_set(pairs: &[(u64, u64)]) -> UnfoundedSet {
    UnfoundedSet::new(
        pairs
            .iter()
            .map(|&(x, i)| UnfoundedPair::new(Interpretation::from_bits(x), Interpretation::from_bits(i))),
    )
    .expect("nonempty witness")
}

/// An anchored unfounded set for `w`, if one exists.
///
/// The largest anchored unfounded set is computed by discarding justified
/// pairs until none remain, then pairs are dropped while the rest stays
/// unfounded, widest `X` first.
pub fn unfounded_witness(p: &Program, w: &BeliefView) -> Result<Option<UnfoundedSet>> {
    unfounded_witness_in(p, w, WitnessSearch::Full)
}

pub fn unfounded_witness_in(p: &Program, w: &BeliefView, mode: WitnessSearch) -> Result<Option<UnfoundedSet>> {
    p.signature.check_cap()?;
    let worlds = w.bits();
    let mut current = universe(p, &worlds, mode);
    loop {
        let y = current.iter().fold(0, |acc, &(x, _)| acc | x);
        let before = current.len();
        current.retain(|&(x, i)| !p.rules.iter().any(|r| justifies(r, x, i, y, &worlds)));
        if current.len() == before {
            break;
        }
    }
    if current.is_empty() {
        return Ok(None);
    }
    current.sort_by(|a, b| {
        let (xa, xb) = (Interpretation::from_bits(a.0), Interpretation::from_bits(b.0));
        xb.len()
            .cmp(&xa.len())
            .then_with(|| xb.cmp(&xa))
            .then_with(|| Interpretation::from_bits(b.1).cmp(&Interpretation::from_bits(a.1)))
    });
    let mut changed = true;
    while changed {
        changed = false;
        let mut k = 0;
        while k < current.len() {
            if current.len() > 1 {
                let mut rest = current.clone();
                rest.remove(k);
                if pairs_unfounded(p, &rest, &worlds) {
                    current = rest;
                    changed = true;
                    continue;
                }
            }
            k += 1;
        }
    }
    let witness = to_set(&current);
    debug_assert!(is_unfounded_set(&witness, p, w) && is_anchored(&witness, w));
    Ok(Some(witness))
}

pub fn is_founded(p: &Program, w: &BeliefView) -> Result<FoundednessVerdict> {
    let witness = unfounded_witness(p, w)?;
    Ok(FoundednessVerdict { founded: witness.is_none(), witness })
}
