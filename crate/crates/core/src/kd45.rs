//! Belief views, KD45 satisfaction, the subjective reduct, and the G91 and
//! AEL world-view fixpoints.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ht::{is_classical_model, is_stable, Interpretation};
use crate::syntax::{Formula, Signature, Theory};
use crate::views::all_worlds;

/// A nonempty set of belief sets, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BeliefView {
    worlds: Vec<Interpretation>,
}

impl BeliefView {
    pub fn new(worlds: impl IntoIterator<Item = Interpretation>) -> Result<Self> {
        let mut worlds: Vec<_> = worlds.into_iter().collect();
        worlds.sort();
        worlds.dedup();
        if worlds.is_empty() {
            return Err(Error::InvalidView("a belief view must contain at least one world".into()));
        }
        Ok(BeliefView { worlds })
    }

    pub fn singleton(world: Interpretation) -> Self {
        BeliefView { worlds: vec![world] }
    }

    pub(crate) fn from_bits(bits: impl IntoIterator<Item = u64>) -> Result<Self> {
        BeliefView::new(bits.into_iter().map(Interpretation::from_bits))
    }

    /// Parses `[{a,b},{}]`-style text against `sig`.
    pub fn parse(text: &str, sig: &Signature) -> Result<Self> {
        let bad = |why: &str| Error::InvalidView(format!("{why} in view `{text}`"));
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("expected surrounding brackets"))?;
        let mut worlds = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let inner_end = rest.find('}').ok_or_else(|| bad("unclosed brace"))?;
            let inner = rest[..inner_end]
                .trim()
                .strip_prefix('{')
                .ok_or_else(|| bad("expected `{`"))?;
            let mut world = Interpretation::empty();
            for name in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let atom = sig.lookup(name).ok_or_else(|| bad(&format!("unknown atom `{name}`")))?;
                world = world.union(Interpretation::from_atoms([atom]));
            }
            worlds.push(world);
            rest = rest[inner_end + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(bad("trailing comma"));
                }
            } else if !rest.is_empty() {
                return Err(bad("expected `,` between belief sets"));
            }
        }
        BeliefView::new(worlds)
    }

    pub fn worlds(&self) -> &[Interpretation] {
        &self.worlds
    }

    pub(crate) fn bits(&self) -> Vec<u64> {
        self.worlds.iter().map(|w| w.bits()).collect()
    }

    pub fn contains(&self, t: Interpretation) -> bool {
        self.worlds.binary_search(&t).is_ok()
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_names(&self, sig: &Signature) -> Vec<Vec<String>> {
        self.worlds.iter().map(|w| w.atom_names(sig)).collect()
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> BeliefViewDisplay<'a> {
        BeliefViewDisplay { view: self, sig }
    }
}

impl Ord for BeliefView {
    fn cmp(&self, other: &Self) -> Ordering {
        self.worlds.len().cmp(&other.worlds.len()).then_with(|| self.worlds.cmp(&other.worlds))
    }
}

impl PartialOrd for BeliefView {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct BeliefViewDisplay<'a> {
    view: &'a BeliefView,
    sig: &'a Signature,
}

impl fmt::Display for BeliefViewDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.view.worlds.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", w.display(self.sig))?;
        }
        f.write_str("]")
    }
}

/// A real world together with a belief view; the real world may lie
/// outside the view.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BeliefInterpretation {
    pub real_world: Interpretation,
    pub view: BeliefView,
}

impl BeliefInterpretation {
    pub fn new(real_world: Interpretation, view: BeliefView) -> Self {
        BeliefInterpretation { real_world, view }
    }
}

pub(crate) fn eval_kd45(world: u64, worlds: &[u64], f: &Formula) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(a) => world & a.bit() != 0,
        Formula::And(l, r) => eval_kd45(world, worlds, l) && eval_kd45(world, worlds, r),
        Formula::Or(l, r) => eval_kd45(world, worlds, l) || eval_kd45(world, worlds, r),
        Formula::Implies(l, r) => !eval_kd45(world, worlds, l) || eval_kd45(world, worlds, r),
        Formula::Know(inner) => worlds.iter().all(|&j| eval_kd45(j, worlds, inner)),
    }
}

pub(crate) fn kd45_model(world: u64, worlds: &[u64], formulas: &[Formula]) -> bool {
    formulas.iter().all(|f| eval_kd45(world, worlds, f))
}

pub fn kd45_sat(bi: &BeliefInterpretation, f: &Formula) -> bool {
    eval_kd45(bi.real_world.bits(), &bi.view.bits(), f)
}

pub fn is_belief_model(bi: &BeliefInterpretation, g: &Theory) -> bool {
    let worlds = bi.view.bits();
    kd45_model(bi.real_world.bits(), &worlds, &g.formulas)
        && worlds.iter().all(|&j| kd45_model(j, &worlds, &g.formulas))
}

pub fn is_epistemic_model(w: &BeliefView, g: &Theory) -> bool {
    let worlds = w.bits();
    worlds.iter().all(|&j| kd45_model(j, &worlds, &g.formulas))
}

pub(crate) fn reduct_with(formulas: &[Formula], truth: &mut impl FnMut(&Formula) -> bool) -> Vec<Formula> {
    formulas
        .iter()
        .map(|f| {
            f.map_maximal_modal(&mut |m| if truth(m) { Formula::top() } else { Formula::Bottom })
        })
        .collect()
}

/// Replaces each maximal `K φ` by `⊤` when every world of `w` satisfies `φ`
/// and by `⊥` otherwise.
pub fn subjective_reduct(g: &Theory, w: &BeliefView) -> Theory {
    let worlds = w.bits();
    let formulas = reduct_with(&g.formulas, &mut |m| eval_kd45(0, &worlds, m));
    Theory::new(formulas, g.signature.clone())
}

#[derive(Clone, Copy)]
enum Fixpoint {
    Stable,
    Classical,
}

fn fixpoints(g: &Theory, kind: Fixpoint) -> Result<Vec<BeliefView>> {
    g.signature.check_cap()?;
    let modal = g.maximal_modal_subformulas();
    let k = modal.len();
    if k >= 31 {
        return Err(Error::PreconditionViolation(format!(
            "{k} distinct modal subformulas exceed the guess limit"
        )));
    }
    let mut out = Vec::new();
    for guess in 0u64..(1 << k) {
        let reduct = reduct_with(&g.formulas, &mut |m| {
            let i = modal.iter().position(|x| x == m).expect("collected modal subformula");
            guess >> i & 1 == 1
        });
        let mut worlds = Vec::new();
        for t in all_worlds(g.signature.len()) {
            let keep = match kind {
                Fixpoint::Stable => is_stable(t, &reduct)?,
                Fixpoint::Classical => is_classical_model(t, &reduct)?,
            };
            if keep {
                worlds.push(t);
            }
        }
        if worlds.is_empty() {
            continue;
        }
        let consistent = modal
            .iter()
            .enumerate()
            .all(|(i, m)| eval_kd45(0, &worlds, m) == (guess >> i & 1 == 1));
        if consistent {
            out.push(BeliefView::from_bits(worlds)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Nonempty views `W` with `W = SM[Γ^W]`.
pub fn g91_world_views(g: &Theory) -> Result<Vec<BeliefView>> {
    fixpoints(g, Fixpoint::Stable)
}

/// Nonempty views `W` with `W = CL[Γ^W]`.
pub fn ael_world_views(g: &Theory) -> Result<Vec<BeliefView>> {
    fixpoints(g, Fixpoint::Classical)
}

/// AEL world views computed as G91 world views of `Γ ∪ {a ∨ ¬a}`.
pub fn ael_world_views_via_excluded_middle(g: &Theory) -> Result<Vec<BeliefView>> {
    g91_world_views(&g.with_excluded_middle())
}
