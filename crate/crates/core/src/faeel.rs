//! Satisfaction over here-and-there belief views, the information order on
//! belief interpretations, equilibrium belief models and equilibrium world
//! views.

use std::fmt;

use crate::error::{Error, Result};
use crate::foundedness::is_founded;
use crate::ht::{HtPair, Interpretation};
use crate::kd45::{eval_kd45, g91_world_views, kd45_model, BeliefView};
use crate::minimize::{smaller_belief_model_exists, Strategy};
use crate::syntax::{Formula, Program, Signature, Theory};
use crate::views::{all_views, all_worlds, submasks, MAX_VIEW_ENUM_ATOMS};

/// A nonempty set of HT pairs, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HtBeliefView {
    pairs: Vec<HtPair>,
}

impl HtBeliefView {
    pub fn new(pairs: impl IntoIterator<Item = HtPair>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort();
        pairs.dedup();
        if pairs.is_empty() {
            return Err(Error::InvalidView("an HT belief view must contain at least one pair".into()));
        }
        Ok(HtBeliefView { pairs })
    }

    pub fn total(view: &BeliefView) -> Self {
        HtBeliefView { pairs: view.worlds().iter().map(|&t| HtPair::total(t)).collect() }
    }

    pub fn pairs(&self) -> &[HtPair] {
        &self.pairs
    }

    pub fn is_total(&self) -> bool {
        self.pairs.iter().all(|p| p.is_total())
    }

    /// The there-components `{T_i}`.
    pub fn projection(&self) -> BeliefView {
        BeliefView::new(self.pairs.iter().map(|p| p.there())).expect("nonempty")
    }

    pub fn to_belief_view(&self) -> Option<BeliefView> {
        self.is_total().then(|| self.projection())
    }

    pub(crate) fn raw(&self) -> Vec<(u64, u64)> {
        self.pairs.iter().map(|p| (p.here().bits(), p.there().bits())).collect()
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        struct D<'a>(&'a HtBeliefView, &'a Signature);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[")?;
                for (i, p) in self.0.pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", p.display(self.1))?;
                }
                f.write_str("]")
            }
        }
        D(self, sig)
    }
}

/// A real-world HT pair together with an HT belief view.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HtBeliefInterpretation {
    pub real_world: HtPair,
    pub view: HtBeliefView,
}

impl HtBeliefInterpretation {
    pub fn new(real_world: HtPair, view: HtBeliefView) -> Self {
        HtBeliefInterpretation { real_world, view }
    }

    pub fn total(t: Interpretation, view: &BeliefView) -> Self {
        HtBeliefInterpretation { real_world: HtPair::total(t), view: HtBeliefView::total(view) }
    }

    pub fn is_total(&self) -> bool {
        self.real_world.is_total() && self.view.is_total()
    }
}

/// Evaluation context: view pairs plus their there-projection.
pub(crate) struct HtView<'a> {
    pub pairs: &'a [(u64, u64)],
    pub worlds: &'a [u64],
}

pub(crate) fn projection_bits(pairs: &[(u64, u64)]) -> Vec<u64> {
    let mut worlds: Vec<u64> = pairs.iter().map(|&(_, t)| t).collect();
    worlds.sort_unstable();
    worlds.dedup();
    worlds
}

pub(crate) fn eval_faeel(here: u64, there: u64, view: &HtView<'_>, f: &Formula) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(a) => here & a.bit() != 0,
        Formula::And(l, r) => eval_faeel(here, there, view, l) && eval_faeel(here, there, view, r),
        Formula::Or(l, r) => eval_faeel(here, there, view, l) || eval_faeel(here, there, view, r),
        Formula::Implies(l, r) => {
            (!eval_faeel(here, there, view, l) || eval_faeel(here, there, view, r))
                && eval_kd45(there, view.worlds, f)
        }
        Formula::Know(inner) => view.pairs.iter().all(|&(h, t)| eval_faeel(h, t, view, inner)),
    }
}

pub(crate) fn faeel_model(here: u64, there: u64, view: &HtView<'_>, formulas: &[Formula]) -> bool {
    formulas.iter().all(|f| eval_faeel(here, there, view, f))
}

pub fn faeel_sat(bi: &HtBeliefInterpretation, f: &Formula) -> bool {
    let pairs = bi.view.raw();
    let worlds = projection_bits(&pairs);
    let view = HtView { pairs: &pairs, worlds: &worlds };
    eval_faeel(bi.real_world.here().bits(), bi.real_world.there().bits(), &view, f)
}

pub fn is_ht_belief_model(bi: &HtBeliefInterpretation, g: &Theory) -> bool {
    let pairs = bi.view.raw();
    let worlds = projection_bits(&pairs);
    let view = HtView { pairs: &pairs, worlds: &worlds };
    let (h, t) = (bi.real_world.here().bits(), bi.real_world.there().bits());
    faeel_model(h, t, &view, &g.formulas)
        && pairs.iter().all(|&(h, t)| faeel_model(h, t, &view, &g.formulas))
}

/// Mutual there-matched domination between two sets of HT pairs.
pub(crate) fn pairs_leq(lower: &[(u64, u64)], upper: &[(u64, u64)]) -> bool {
    let below = |&(h1, t1): &(u64, u64), &(h2, t2): &(u64, u64)| t1 == t2 && h1 & !h2 == 0;
    upper.iter().all(|p2| lower.iter().any(|p1| below(p1, p2)))
        && lower.iter().all(|p1| upper.iter().any(|p2| below(p1, p2)))
}

/// `i1 ≼ i2`.
pub fn leq(i1: &HtBeliefInterpretation, i2: &HtBeliefInterpretation) -> bool {
    i1.real_world.there() == i2.real_world.there()
        && i1.real_world.here().is_subset(i2.real_world.here())
        && pairs_leq(&i1.view.raw(), &i2.view.raw())
}

/// `i1 ≺ i2`.
pub fn strictly_below(i1: &HtBeliefInterpretation, i2: &HtBeliefInterpretation) -> bool {
    leq(i1, i2) && i1 != i2
}

/// No `H ⊂ T` gives a model `⟨H, T⟩` under the total view `worlds`.
pub(crate) fn weakly_minimal(t: u64, worlds: &[u64], formulas: &[Formula]) -> bool {
    let pairs: Vec<(u64, u64)> = worlds.iter().map(|&w| (w, w)).collect();
    let view = HtView { pairs: &pairs, worlds };
    submasks(t).skip(1).all(|h| !faeel_model(h, t, &view, formulas))
}

pub(crate) fn is_eqb(t: u64, worlds: &[u64], formulas: &[Formula], strategy: Strategy) -> bool {
    kd45_model(t, worlds, formulas)
        && worlds.iter().all(|&j| kd45_model(j, worlds, formulas))
        && weakly_minimal(t, worlds, formulas)
        && !smaller_belief_model_exists(formulas, worlds, Some(t), strategy)
}

/// All `T` such that `⟨T, w⟩` is an equilibrium belief model of `g`.
pub fn eqb_members(g: &Theory, w: &BeliefView) -> Result<Vec<Interpretation>> {
    g.signature.check_cap()?;
    let worlds = w.bits();
    let mut out: Vec<Interpretation> = all_worlds(g.signature.len())
        .filter(|&t| is_eqb(t, &worlds, &g.formulas, Strategy::Decomposed))
        .map(Interpretation::from_bits)
        .collect();
    out.sort();
    Ok(out)
}

fn is_world_view(worlds: &[u64], n: usize, formulas: &[Formula], strategy: Strategy) -> bool {
    if !worlds.iter().all(|&j| kd45_model(j, worlds, formulas)) {
        return false;
    }
    if !worlds.iter().all(|&t| weakly_minimal(t, worlds, formulas)) {
        return false;
    }
    if worlds.iter().any(|&t| smaller_belief_model_exists(formulas, worlds, Some(t), strategy)) {
        return false;
    }
    all_worlds(n)
        .filter(|t| worlds.binary_search(t).is_err())
        .all(|t| !is_eqb(t, worlds, formulas, strategy))
}

/// Equilibrium world views by direct enumeration of every candidate view.
pub fn faeel_world_views(g: &Theory) -> Result<Vec<BeliefView>> {
    faeel_world_views_using(g, Strategy::Decomposed)
}

pub fn faeel_world_views_using(g: &Theory, strategy: Strategy) -> Result<Vec<BeliefView>> {
    g.signature.check_cap()?;
    let n = g.signature.len();
    if n > MAX_VIEW_ENUM_ATOMS {
        return Err(Error::CapExceeded { atoms: n, cap: MAX_VIEW_ENUM_ATOMS });
    }
    let mut out = Vec::new();
    for mut cand in all_views(n) {
        cand.sort_unstable();
        if is_world_view(&cand, n, &g.formulas, strategy) {
            out.push(BeliefView::from_bits(cand)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Equilibrium world views of a program as its founded G91 world views.
pub fn faeel_world_views_program(p: &Program) -> Result<Vec<BeliefView>> {
    let mut out = Vec::new();
    for w in g91_world_views(&p.to_theory())? {
        if is_founded(p, &w)?.founded {
            out.push(w);
        }
    }
    Ok(out)
}
