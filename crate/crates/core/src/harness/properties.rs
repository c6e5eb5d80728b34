//! Semantics dispatch and the sanity properties every world-view semantics
//! is expected to have.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characterizations::{s5_equilibrium_models, weak_world_views};
use crate::error::{Error, Result};
use crate::faeel::{faeel_sat, faeel_world_views, faeel_world_views_program, HtBeliefInterpretation};
use crate::ht::stable_models;
use crate::kd45::{ael_world_views, eval_kd45, g91_world_views, is_epistemic_model, kd45_sat, BeliefInterpretation, BeliefView};
use crate::syntax::{classify_formula, Formula, FormulaClass, Program, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    G91,
    Ael,
    Weak,
    S5eq,
    Faeel,
}

impl Semantics {
    pub const ALL: [Semantics; 5] =
        [Semantics::G91, Semantics::Ael, Semantics::Weak, Semantics::S5eq, Semantics::Faeel];

    pub fn tag(self) -> &'static str {
        match self {
            Semantics::G91 => "g91",
            Semantics::Ael => "ael",
            Semantics::Weak => "weak",
            Semantics::S5eq => "s5eq",
            Semantics::Faeel => "faeel",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semantics::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::PreconditionViolation(format!("unknown semantics `{s}`")))
    }
}

/// World views of `g`; FAEEL uses direct enumeration.
pub fn world_views(g: &Theory, semantics: Semantics) -> Result<Vec<BeliefView>> {
    world_views_with(g, semantics, false)
}

/// Like [`world_views`], but with `fast_path` FAEEL views of rule programs
/// are taken to be their founded G91 views.
pub fn world_views_with(g: &Theory, semantics: Semantics, fast_path: bool) -> Result<Vec<BeliefView>> {
    match semantics {
        Semantics::G91 => g91_world_views(g),
        Semantics::Ael => ael_world_views(g),
        Semantics::Weak => weak_world_views(g),
        Semantics::S5eq => s5_equilibrium_models(g),
        Semantics::Faeel => match Program::from_theory(g) {
            Ok(p) if fast_path => faeel_world_views_program(&p),
            _ => faeel_world_views(g),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl PropertyVerdict {
    fn new(property: &str, counterexample: Option<String>) -> Self {
        PropertyVerdict { property: property.to_string(), holds: counterexample.is_none(), counterexample }
    }
}

fn render(views: &[BeliefView], g: &Theory) -> String {
    let shown: Vec<String> = views.iter().map(|v| v.display(&g.signature).to_string()).collect();
    format!("{{{}}}", shown.join(", "))
}

/// For a theory without `K`: a unique world view equal to its stable models
/// when it has any, and no world view otherwise.
pub fn check_supra_asp(g: &Theory, semantics: Semantics) -> Result<PropertyVerdict> {
    if !g.is_modal_free() {
        return Err(Error::PreconditionViolation("supra-ASP applies to theories without K".into()));
    }
    let sm = stable_models(g)?;
    let views = world_views(g, semantics)?;
    let expected: Vec<BeliefView> = BeliefView::new(sm).into_iter().collect();
    let cex = (views != expected).then(|| {
        format!("expected {} but got {}", render(&expected, g), render(&views, g))
    });
    Ok(PropertyVerdict::new("supra-asp", cex))
}

/// Every world view is an epistemic model.
pub fn check_supra_s5(g: &Theory, semantics: Semantics) -> Result<PropertyVerdict> {
    let views = world_views(g, semantics)?;
    let cex = views
        .iter()
        .find(|w| !is_epistemic_model(w, g))
        .map(|w| format!("{} is not an epistemic model", w.display(&g.signature)));
    Ok(PropertyVerdict::new("supra-s5", cex))
}

/// Adding the constraint `⊥ ← φ` for subjective `φ` removes exactly the
/// world views satisfying `φ`.
pub fn check_constraint_monotonicity(g: &Theory, body: &Formula, semantics: Semantics) -> Result<PropertyVerdict> {
    match classify_formula(body) {
        FormulaClass::Subjective | FormulaClass::Atomless => {}
        other => {
            return Err(Error::PreconditionViolation(format!(
                "constraint body must be subjective, found {other:?}"
            )))
        }
    }
    let before = world_views(g, semantics)?;
    let after = world_views(&g.with_formula(Formula::not(body.clone())), semantics)?;
    let expected: Vec<BeliefView> = before
        .into_iter()
        .filter(|w| !eval_kd45(0, &w.bits(), body))
        .collect();
    let cex = (after != expected).then(|| {
        format!("expected {} but got {}", render(&expected, g), render(&after, g))
    });
    Ok(PropertyVerdict::new("constraint-monotonicity", cex))
}

fn total_projection(bi: &HtBeliefInterpretation) -> BeliefInterpretation {
    BeliefInterpretation::new(bi.real_world.there(), bi.view.projection())
}

/// Satisfaction persists to the there-world of the total projection.
pub fn check_persistence(bi: &HtBeliefInterpretation, f: &Formula) -> bool {
    !faeel_sat(bi, f) || kd45_sat(&total_projection(bi), f)
}

/// `¬φ` holds iff `φ` fails at the there-world of the total projection.
pub fn check_negation_there(bi: &HtBeliefInterpretation, f: &Formula) -> bool {
    faeel_sat(bi, &Formula::not(f.clone())) == !kd45_sat(&total_projection(bi), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_program, parse_theory, Signature};

    #[test]
    fn semantics_tags_round_trip() {
        for s in Semantics::ALL {
            assert_eq!(s.tag().parse::<Semantics>().unwrap(), s);
        }
        assert!("k15".parse::<Semantics>().is_err());
    }

    #[test]
    fn supra_asp_examples() {
        let g = parse_theory("a | b.", None).unwrap();
        assert!(check_supra_asp(&g, Semantics::Faeel).unwrap().holds);
        let g = parse_theory("a. not a.", None).unwrap();
        assert!(check_supra_asp(&g, Semantics::Faeel).unwrap().holds);
        assert!(world_views(&g, Semantics::Faeel).unwrap().is_empty());
        let g = parse_theory("not not a -> a.", None).unwrap();
        assert!(check_supra_asp(&g, Semantics::G91).unwrap().holds);
        assert_eq!(world_views(&g, Semantics::G91).unwrap()[0].len(), 2);
        let modal = parse_theory("K a.", None).unwrap();
        assert!(matches!(check_supra_asp(&modal, Semantics::G91), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn supra_s5_examples() {
        let sig = Signature::from_names(["a", "b"]);
        let g1 = parse_theory("not K b -> a.", Some(&sig)).unwrap();
        assert!(check_supra_s5(&g1, Semantics::Faeel).unwrap().holds);
        let g3 = parse_theory("K a -> a.", None).unwrap();
        assert!(check_supra_s5(&g3, Semantics::G91).unwrap().holds);
    }

    #[test]
    fn constraint_monotonicity_examples() {
        let p4 = parse_program("a | b. c :- K a.").unwrap().to_theory();
        let body = parse_theory("not K c.", Some(&p4.signature)).unwrap().formulas[0].clone();
        let v = check_constraint_monotonicity(&p4, &body, Semantics::Faeel).unwrap();
        assert!(v.holds, "{v:?}");
        assert!(world_views(&p4.with_formula(Formula::not(body)), Semantics::Faeel).unwrap().is_empty());

        let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap().to_theory();
        let not_ka = Formula::not(Formula::know(Formula::atom(p1.signature.lookup("a").unwrap())));
        assert!(check_constraint_monotonicity(&p1, &not_ka, Semantics::G91).unwrap().holds);
        let kept = world_views(&p1.with_formula(Formula::not(not_ka)), Semantics::G91).unwrap();
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].display(&p1.signature).to_string(), "[{a,b}]");

        assert!(check_constraint_monotonicity(&p1, &Formula::Bottom, Semantics::Faeel).unwrap().holds);
        let objective = Formula::atom(p1.signature.lookup("a").unwrap());
        assert!(check_constraint_monotonicity(&p1, &objective, Semantics::G91).is_err());
    }
}
