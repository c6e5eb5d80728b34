//! S5-HT models and S5-equilibrium models, semi-total interpretations, weak
//! equilibrium belief models, and weak autoepistemic world views.

use crate::error::{Error, Result};
use crate::faeel::{faeel_model, pairs_leq, projection_bits, weakly_minimal, HtBeliefInterpretation, HtBeliefView, HtView};
use crate::ht::Interpretation;
use crate::kd45::{kd45_model, BeliefView};
use crate::minimize::{smaller_belief_model_exists, Strategy};
use crate::syntax::Theory;
use crate::views::{all_views, all_worlds, MAX_VIEW_ENUM_ATOMS};

/// A set of HT pairs read as an S5-HT interpretation.
pub type S5HtView = HtBeliefView;

/// Every pair of `w` satisfies every formula of `g` under `w`.
pub fn s5ht_is_model(w: &S5HtView, g: &Theory) -> bool {
    let pairs = w.raw();
    let worlds = projection_bits(&pairs);
    let view = HtView { pairs: &pairs, worlds: &worlds };
    pairs.iter().all(|&(h, t)| faeel_model(h, t, &view, &g.formulas))
}

/// `w1 ≼ w2` on S5-HT interpretations.
pub fn s5_view_order(w1: &S5HtView, w2: &S5HtView) -> bool {
    pairs_leq(&w1.raw(), &w2.raw())
}

fn check_enumerable(g: &Theory) -> Result<usize> {
    g.signature.check_cap()?;
    let n = g.signature.len();
    if n > MAX_VIEW_ENUM_ATOMS {
        return Err(Error::CapExceeded { atoms: n, cap: MAX_VIEW_ENUM_ATOMS });
    }
    Ok(n)
}

/// Whether the total view `w` is an S5-equilibrium model of `g`.
pub fn is_s5_equilibrium_model(w: &BeliefView, g: &Theory) -> bool {
    let worlds = w.bits();
    worlds.iter().all(|&j| kd45_model(j, &worlds, &g.formulas))
        && !smaller_belief_model_exists(&g.formulas, &worlds, None, Strategy::Decomposed)
}

/// Total S5-HT models with no strictly smaller S5-HT model.
pub fn s5_equilibrium_models(g: &Theory) -> Result<Vec<BeliefView>> {
    let n = check_enumerable(g)?;
    let mut out = Vec::new();
    for cand in all_views(n) {
        let w = BeliefView::from_bits(cand)?;
        if is_s5_equilibrium_model(&w, g) {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// Every pair of the view is total; the real world may not be.
pub fn is_semi_total(bi: &HtBeliefInterpretation) -> bool {
    bi.view.is_total()
}

/// `⟨t, w⟩` is a belief model with no strictly smaller semi-total model.
pub fn is_weak_eqb(t: Interpretation, w: &BeliefView, g: &Theory) -> bool {
    let worlds = w.bits();
    kd45_model(t.bits(), &worlds, &g.formulas)
        && worlds.iter().all(|&j| kd45_model(j, &worlds, &g.formulas))
        && weakly_minimal(t.bits(), &worlds, &g.formulas)
}

/// Views whose members are exactly the `T` with `⟨T, w⟩` weakly in
/// equilibrium.
pub fn weak_world_views(g: &Theory) -> Result<Vec<BeliefView>> {
    let n = check_enumerable(g)?;
    let mut out = Vec::new();
    for cand in all_views(n) {
        let w = BeliefView::from_bits(cand)?;
        let mut members: Vec<Interpretation> = all_worlds(n)
            .map(Interpretation::from_bits)
            .filter(|&t| is_weak_eqb(t, &w, g))
            .collect();
        members.sort();
        if members == w.worlds() {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faeel::{faeel_world_views, leq};
    use crate::ht::HtPair;
    use crate::kd45::g91_world_views;
    use crate::syntax::{parse_program, parse_theory, Signature};

    fn pair(sig: &Signature, h: &[&str], t: &[&str]) -> HtPair {
        HtPair::new(
            Interpretation::from_names(sig, h.iter().copied()).unwrap(),
            Interpretation::from_names(sig, t.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn shown(views: &[BeliefView], sig: &Signature) -> Vec<String> {
        views.iter().map(|v| v.display(sig).to_string()).collect()
    }

    #[test]
    fn s5ht_models() {
        let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap().to_theory();
        let sig = &p1.signature;
        let w = HtBeliefView::new([pair(sig, &["a"], &["a"]), pair(sig, &["b"], &["b"])]).unwrap();
        assert!(s5ht_is_model(&w, &p1));

        let fact = parse_theory("a.", None).unwrap();
        let w = HtBeliefView::new([pair(&fact.signature, &[], &["a"])]).unwrap();
        assert!(!s5ht_is_model(&w, &fact));

        let empty = Theory::new(vec![], Signature::from_names(["a"]));
        let w = HtBeliefView::new([pair(&empty.signature, &[], &[])]).unwrap();
        assert!(s5ht_is_model(&w, &empty));
    }

    #[test]
    fn view_order() {
        let sig = Signature::from_names(["a", "b"]);
        let upper = HtBeliefView::new([pair(&sig, &["a"], &["a"]), pair(&sig, &["b"], &["b"])]).unwrap();
        let lower = HtBeliefView::new([pair(&sig, &[], &["a"]), pair(&sig, &[], &["b"])]).unwrap();
        assert!(s5_view_order(&upper, &upper));
        assert!(s5_view_order(&lower, &upper));
        assert!(!s5_view_order(&upper, &lower));
        let other = HtBeliefView::new([pair(&sig, &["a"], &["a"])]).unwrap();
        assert!(!s5_view_order(&other, &upper));
    }

    #[test]
    fn s5_equilibrium_examples() {
        let g = parse_theory("K a.", None).unwrap();
        assert_eq!(shown(&s5_equilibrium_models(&g).unwrap(), &g.signature), ["[{a}]"]);

        let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap().to_theory();
        let ab = BeliefView::parse("[{a,b}]", &p1.signature).unwrap();
        assert!(!s5_equilibrium_models(&p1).unwrap().contains(&ab));

        let empty = Theory::new(vec![], Signature::from_names(["a"]));
        assert_eq!(shown(&s5_equilibrium_models(&empty).unwrap(), &empty.signature), ["[{}]"]);

        let g = parse_theory("K a. not not a.", None).unwrap();
        assert!(s5_equilibrium_models(&g).unwrap().contains(&BeliefView::parse("[{a}]", &g.signature).unwrap()));
        assert!(faeel_world_views(&g).unwrap().is_empty());
    }

    #[test]
    fn weak_examples() {
        let g3 = parse_theory("K a -> a.", None).unwrap();
        let sig = &g3.signature;
        let a = Interpretation::from_names(sig, ["a"]).unwrap();
        let av = BeliefView::parse("[{a}]", sig).unwrap();
        assert!(is_weak_eqb(a, &av, &g3));
        assert!(crate::faeel::eqb_members(&g3, &av).unwrap().is_empty());
        let empty = Theory::new(vec![], Signature::new());
        assert!(is_weak_eqb(Interpretation::empty(), &BeliefView::singleton(Interpretation::empty()), &empty));

        assert_eq!(shown(&weak_world_views(&g3).unwrap(), sig), ["[{}]", "[{a}]"]);
        assert_eq!(weak_world_views(&g3).unwrap(), g91_world_views(&g3).unwrap());

        let nested = parse_theory("not not a & K (not not a -> a) -> a.", None).unwrap();
        let both = BeliefView::parse("[{},{a}]", &nested.signature).unwrap();
        assert!(weak_world_views(&nested).unwrap().contains(&both));

        let p3 = parse_program("a | b. c :- K a. :- not c.").unwrap().to_theory();
        assert!(weak_world_views(&p3).unwrap().is_empty());
    }

    #[test]
    fn semi_total_flag() {
        let sig = Signature::from_names(["a"]);
        let view = HtBeliefView::new([pair(&sig, &["a"], &["a"])]).unwrap();
        let semi = HtBeliefInterpretation::new(pair(&sig, &[], &["a"]), view.clone());
        assert!(is_semi_total(&semi));
        let total = HtBeliefInterpretation::new(pair(&sig, &["a"], &["a"]), view);
        assert!(is_semi_total(&total) && leq(&semi, &total));
        let not_semi = HtBeliefInterpretation::new(
            pair(&sig, &["a"], &["a"]),
            HtBeliefView::new([pair(&sig, &[], &["a"])]).unwrap(),
        );
        assert!(!is_semi_total(&not_semi));
    }
}
