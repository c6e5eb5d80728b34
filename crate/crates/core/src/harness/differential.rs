//! Runs every semantics on one input and checks the expected relations
//! between their results.

use serde::Serialize;
use serde_json::{json, Value};

use crate::characterizations::{s5_equilibrium_models, weak_world_views};
use crate::error::Result;
use crate::faeel::{faeel_world_views, faeel_world_views_program};
use crate::foundedness::is_founded;
use crate::kd45::{ael_world_views, ael_world_views_via_excluded_middle, g91_world_views, is_epistemic_model, BeliefView};
use crate::syntax::{Program, Signature, Theory};
use crate::views::all_views;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct DifferentialReport {
    pub input: String,
    pub signature: Signature,
    pub is_program: bool,
    pub g91: Vec<BeliefView>,
    pub ael: Vec<BeliefView>,
    pub ael_via_excluded_middle: Vec<BeliefView>,
    pub weak: Vec<BeliefView>,
    pub s5eq: Vec<BeliefView>,
    pub faeel: Vec<BeliefView>,
    /// Founded G91 views; programs only.
    pub faeel_fast: Option<Vec<BeliefView>>,
    /// Foundedness of each G91 view; programs only.
    pub g91_founded: Option<Vec<bool>>,
    pub checks: Vec<TheoremCheck>,
}

impl DifferentialReport {
    pub fn violations(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn names(&self, views: &[BeliefView]) -> Value {
        json!(views.iter().map(|v| v.to_names(&self.signature)).collect::<Vec<_>>())
    }

    fn show(&self, views: &[BeliefView]) -> String {
        if views.is_empty() {
            return "none".into();
        }
        views.iter().map(|v| v.display(&self.signature).to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Named rows of world views in display order.
    pub fn rows(&self) -> Vec<(&'static str, &[BeliefView])> {
        let mut rows: Vec<(&'static str, &[BeliefView])> = vec![
            ("g91", &self.g91),
            ("ael", &self.ael),
            ("ael(em)", &self.ael_via_excluded_middle),
            ("weak", &self.weak),
            ("s5eq", &self.s5eq),
            ("faeel", &self.faeel),
        ];
        if let Some(fast) = &self.faeel_fast {
            rows.push(("faeel(fast)", fast));
        }
        rows
    }

    pub fn to_json(&self) -> Value {
        let mut views = serde_json::Map::new();
        for (name, vs) in self.rows() {
            views.insert(name.to_string(), self.names(vs));
        }
        json!({
            "input": self.input,
            "atoms": self.signature.names().collect::<Vec<_>>(),
            "program": self.is_program,
            "world_views": views,
            "g91_founded": self.g91_founded,
            "checks": self.checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (name, vs) in self.rows() {
            out.push_str(&format!("{name:<12} {}\n", self.show(vs)));
        }
        if let Some(flags) = &self.g91_founded {
            for (w, founded) in self.g91.iter().zip(flags) {
                let verdict = if *founded { "founded" } else { "unfounded" };
                out.push_str(&format!("g91 view {} is {verdict}\n", w.display(&self.signature)));
            }
        }
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "VIOLATED" };
            out.push_str(&format!("{:<26} {mark}", c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!("  ({d})"));
            }
            out.push('\n');
        }
        out
    }
}

fn subset(a: &[BeliefView], b: &[BeliefView]) -> bool {
    a.iter().all(|w| b.contains(w))
}

/// Computes all semantics for `g` and checks how they relate. Program-only
/// relations are checked when `g` is a rule program.
pub fn differential_report(g: &Theory) -> Result<DifferentialReport> {
    let program = Program::from_theory(g).ok();
    let g91 = g91_world_views(g)?;
    let ael = ael_world_views(g)?;
    let ael_em = ael_world_views_via_excluded_middle(g)?;
    let weak = weak_world_views(g)?;
    let s5eq = s5_equilibrium_models(g)?;
    let faeel = faeel_world_views(g)?;

    let mut report = DifferentialReport {
        input: g.to_string(),
        signature: g.signature.clone(),
        is_program: program.is_some(),
        g91,
        ael,
        ael_via_excluded_middle: ael_em,
        weak,
        s5eq,
        faeel,
        faeel_fast: None,
        g91_founded: None,
        checks: Vec::new(),
    };
    let mut checks = Vec::new();
    let mut add = |name: &'static str, holds: bool, detail: Option<String>| {
        checks.push(TheoremCheck { name, holds, detail: if holds { None } else { detail } })
    };

    add(
        "ael-excluded-middle",
        report.ael == report.ael_via_excluded_middle,
        Some(format!("ael {} vs {}", report.show(&report.ael), report.show(&report.ael_via_excluded_middle))),
    );
    add(
        "faeel-within-g91",
        subset(&report.faeel, &report.g91),
        Some(format!("faeel {} not within g91 {}", report.show(&report.faeel), report.show(&report.g91))),
    );
    add(
        "weak-equals-g91",
        report.weak == report.g91,
        Some(format!("weak {} vs g91 {}", report.show(&report.weak), report.show(&report.g91))),
    );
    add(
        "faeel-within-s5eq",
        subset(&report.faeel, &report.s5eq),
        Some(format!("faeel {} not within s5eq {}", report.show(&report.faeel), report.show(&report.s5eq))),
    );
    let not_s5 = report.faeel.iter().chain(&report.g91).find(|w| !is_epistemic_model(w, g));
    add(
        "supra-s5",
        not_s5.is_none(),
        not_s5.map(|w| format!("{} is not an epistemic model", w.display(&g.signature))),
    );
    if g.modal_only_under_negation() {
        add(
            "negated-beliefs-agree",
            report.faeel == report.g91,
            Some(format!("faeel {} vs g91 {}", report.show(&report.faeel), report.show(&report.g91))),
        );
    }

    if let Some(p) = &program {
        let mut flags = Vec::with_capacity(report.g91.len());
        for w in &report.g91 {
            flags.push(is_founded(p, w)?.founded);
        }
        let fast = faeel_world_views_program(p)?;
        let unfounded: Vec<&BeliefView> = report
            .faeel
            .iter()
            .filter(|w| is_founded(p, w).map(|v| !v.founded).unwrap_or(true))
            .collect();
        add(
            "faeel-founded",
            unfounded.is_empty(),
            unfounded.first().map(|w| format!("{} is unfounded", w.display(&g.signature))),
        );
        add(
            "faeel-equals-founded-g91",
            fast == report.faeel,
            Some(format!("faeel {} vs founded g91 {}", report.show(&report.faeel), report.show(&fast))),
        );
        let mut founded_s5 = Vec::new();
        for cand in all_views(g.signature.len()) {
            let w = BeliefView::from_bits(cand)?;
            if is_epistemic_model(&w, g) && is_founded(p, &w)?.founded {
                founded_s5.push(w);
            }
        }
        founded_s5.sort();
        add(
            "s5eq-equals-founded-s5",
            founded_s5 == report.s5eq,
            Some(format!("s5eq {} vs founded s5 {}", report.show(&report.s5eq), report.show(&founded_s5))),
        );
        report.faeel_fast = Some(fast);
        report.g91_founded = Some(flags);
    }
    report.checks = checks;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;

    fn shown(r: &DifferentialReport, views: &[BeliefView]) -> String {
        r.show(views)
    }

    #[test]
    fn disjunction_with_mutual_support() {
        let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap();
        let r = differential_report(&p1.to_theory()).unwrap();
        assert_eq!(shown(&r, &r.g91), "[{a,b}] [{a},{b}]");
        assert_eq!(shown(&r, &r.faeel), "[{a},{b}]");
        assert_eq!(shown(&r, r.faeel_fast.as_ref().unwrap()), "[{a},{b}]");
        assert_eq!(r.g91_founded, Some(vec![false, true]));
        assert!(r.is_clean(), "{}", r.render_text());
    }

    #[test]
    fn negated_belief_rows_agree() {
        let p = parse_program("a :- not K not a.").unwrap();
        let r = differential_report(&p.to_theory()).unwrap();
        assert_eq!(shown(&r, &r.g91), "[{}] [{a}]");
        assert_eq!(r.faeel, r.g91);
        assert!(r.check("negated-beliefs-agree").unwrap().holds);
        assert!(r.is_clean());
    }

    #[test]
    fn self_support_is_dropped() {
        let p = parse_program("a :- K a.").unwrap();
        let r = differential_report(&p.to_theory()).unwrap();
        assert_eq!(shown(&r, &r.g91), "[{}] [{a}]");
        assert_eq!(shown(&r, &r.faeel), "[{}]");
        assert!(r.is_clean());
        let js = r.to_json();
        assert_eq!(js["world_views"]["faeel"], json!([[[]]]));
    }
}
