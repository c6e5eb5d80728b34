//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use epiview::faeel::faeel_world_views_program;
use epiview::foundedness::is_founded;
use epiview::harness::corpus::{load_corpus, run_entry};
use epiview::harness::differential::differential_report;
use epiview::harness::fuzz::{random_formula, random_ht_belief_interpretation, random_program, Profile};
use epiview::harness::properties::{check_negation_there, check_persistence, world_views, Semantics};
use epiview::harness::bundled_corpus_dir;
use epiview::kd45::g91_world_views;
use epiview::{parse_program, parse_theory, BeliefView, Program, Signature, Theory, UnfoundedSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn shown(views: &[BeliefView], sig: &Signature) -> Vec<String> {
    views.iter().map(|v| v.display(sig).to_string()).collect()
}

fn views_eq(out: &mut Outcome, label: &str, g: &Theory, sem: Semantics, want: &[&str]) {
    match world_views(g, sem) {
        Ok(vs) => {
            let got = shown(&vs, &g.signature);
            out.expect(got == want, || format!("{label} {sem}: expected {want:?}, got {got:?}"));
        }
        Err(e) => out.failures.push(format!("{label} {sem}: {e}")),
    }
}

fn program_views_eq(out: &mut Outcome, label: &str, p: &Program, want: &[&str]) {
    let g = p.to_theory();
    views_eq(out, label, &g, Semantics::Faeel, want);
    let fast = faeel_world_views_program(p).map(|vs| shown(&vs, &p.signature));
    out.expect(fast.as_deref().ok() == Some(&want.iter().map(|s| s.to_string()).collect::<Vec<_>>()[..]), || {
        format!("{label} faeel(fast): expected {want:?}, got {fast:?}")
    });
}

fn worked_examples() -> Outcome {
    let mut out = Outcome::new();
    let ab = Signature::from_names(["a", "b"]);
    let g1 = parse_theory("not K b -> a.", Some(&ab)).unwrap();
    views_eq(&mut out, "Γ1", &g1, Semantics::G91, &["[{a}]"]);
    views_eq(&mut out, "Γ1", &g1, Semantics::Ael, &["[{a},{a,b}]"]);

    let g3 = parse_theory("K a -> a.", None).unwrap();
    views_eq(&mut out, "Γ3", &g3, Semantics::G91, &["[{}]", "[{a}]"]);
    views_eq(&mut out, "Γ3", &g3, Semantics::Ael, &["[{a}]", "[{},{a}]"]);
    views_eq(&mut out, "Γ3", &g3, Semantics::Faeel, &["[{}]"]);

    let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap();
    views_eq(&mut out, "Π1", &p1.to_theory(), Semantics::G91, &["[{a,b}]", "[{a},{b}]"]);
    program_views_eq(&mut out, "Π1", &p1, &["[{a},{b}]"]);

    let p2 = parse_program("a | b. a :- K b. b :- K a. :- not K a.").unwrap();
    program_views_eq(&mut out, "Π2", &p2, &[]);

    let p3 = parse_program("a | b. c :- K a. :- not c.").unwrap();
    views_eq(&mut out, "Π3", &p3.to_theory(), Semantics::G91, &[]);
    program_views_eq(&mut out, "Π3", &p3, &[]);

    let p4 = parse_program("a | b. c :- K a.").unwrap();
    views_eq(&mut out, "Π4", &p4.to_theory(), Semantics::G91, &["[{a},{b}]"]);
    program_views_eq(&mut out, "Π4", &p4, &["[{a},{b}]"]);

    let p5 = parse_program("a | b. c :- K a. :- not K c.").unwrap();
    views_eq(&mut out, "Π5", &p5.to_theory(), Semantics::G91, &[]);
    program_views_eq(&mut out, "Π5", &p5, &[]);
    out
}

fn figure_corpus() -> Outcome {
    let mut out = Outcome::new();
    let entries = load_corpus(&bundled_corpus_dir()).expect("bundled corpus");
    let figure: Vec<_> = entries.iter().filter(|e| e.id.starts_with("fig")).collect();
    let left = figure.iter().filter(|e| e.id.starts_with("fig1-left")).count();
    let right = figure.iter().filter(|e| e.id.starts_with("fig1-right")).count();
    let second = figure.iter().filter(|e| e.id.starts_with("fig2")).count();
    out.expect((left, right, second) == (6, 5, 3), || {
        format!("expected 6/5/3 figure rows, found {left}/{right}/{second}")
    });
    for e in figure {
        for tag in ["g91", "faeel"] {
            out.expect(e.expected.contains_key(tag) && e.is_asserted(tag), || format!("{} lacks an asserted {tag} column", e.id));
        }
        match run_entry(e) {
            Ok(rows) => {
                for r in rows.iter().filter(|r| r.asserted && !r.passed) {
                    out.failures.push(format!("{} {}: expected {:?}, got {:?} {:?}", r.id, r.semantics, r.expected, r.actual, r.error));
                }
            }
            Err(err) => out.failures.push(format!("{}: {err}", e.id)),
        }
    }
    out
}

fn witness(p: &Program, text: &str) -> Option<UnfoundedSet> {
    let w = BeliefView::parse(text, &p.signature).unwrap();
    is_founded(p, &w).unwrap().witness
}

fn witnesses() -> Outcome {
    let mut out = Outcome::new();
    let selfsup = parse_program("a :- K a.").unwrap();
    let sig = &selfsup.signature;
    let got = witness(&selfsup, "[{a}]").map(|u| u.display(sig).to_string());
    out.expect(got.as_deref() == Some("{<{a},{a}>}"), || format!("self-support witness: {got:?}"));
    out.expect(witness(&selfsup, "[{}]").is_none(), || "[{}] should be founded".into());

    let p1 = parse_program("a | b. a :- K b. b :- K a.").unwrap();
    let got = witness(&p1, "[{a,b}]").map(|u| u.display(&p1.signature).to_string());
    out.expect(got.as_deref() == Some("{<{a},{a,b}>,<{b},{a,b}>}"), || format!("Π1 witness: {got:?}"));
    out.expect(witness(&p1, "[{a},{b}]").is_none(), || "Π1 [{a},{b}] should be founded".into());

    let p2 = parse_program("a | b. a :- K b. b :- K a. :- not K a.").unwrap();
    let got = witness(&p2, "[{a,b}]").map(|u| u.display(&p2.signature).to_string());
    out.expect(got.as_deref() == Some("{<{a},{a,b}>,<{b},{a,b}>}"), || format!("Π2 witness: {got:?}"));

    let disj = parse_program("a | b.").unwrap();
    out.expect(witness(&disj, "[{a},{b}]").is_none(), || "a | b with [{a},{b}] should be founded".into());
    out
}

fn fuzz_theorems() -> Outcome {
    let mut out = Outcome::new();
    let sigs = [
        Signature::from_names(["a"]),
        Signature::from_names(["a", "b"]),
        Signature::from_names(["a", "b", "c"]),
    ];
    for seed in 0..500u64 {
        let sig = &sigs[if seed % 5 == 0 { (seed / 5 % 2) as usize } else { 2 }];
        let p = random_program(seed, sig, 4, Profile::Default);
        match differential_report(&p.to_theory()) {
            Ok(r) => {
                for c in r.violations() {
                    out.failures.push(format!("seed {seed} `{}`: {} {:?}", p.to_string().replace('\n', " "), c.name, c.detail));
                }
            }
            Err(e) => out.failures.push(format!("seed {seed}: {e}")),
        }
    }
    for seed in 0..500u64 {
        let p = random_program(10_000 + seed, &sigs[2], 4, Profile::NegatedModalOnly);
        let g = p.to_theory();
        let (g91, faeel) = (g91_world_views(&g).unwrap(), world_views(&g, Semantics::Faeel).unwrap());
        out.expect(g91 == faeel, || format!("negated profile seed {seed}: g91 {g91:?} vs faeel {faeel:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..10_000 {
        let bi = random_ht_belief_interpretation(&mut rng, 3);
        let f = random_formula(&mut rng, 3, 4);
        out.expect(check_persistence(&bi, &f), || format!("persistence sample {k}: {bi:?} {f:?}"));
        out.expect(check_negation_there(&bi, &f), || format!("negation sample {k}: {bi:?} {f:?}"));
    }
    out
}

fn nested_implication() -> Outcome {
    let mut out = Outcome::new();
    let g = parse_theory("not not a & K (not not a -> a) -> a.", None).unwrap();
    let target = BeliefView::parse("[{},{a}]", &g.signature).unwrap();
    for sem in [Semantics::G91, Semantics::Faeel] {
        let vs = world_views(&g, sem).unwrap();
        out.expect(vs.contains(&target), || format!("{sem} lacks [{{}},{{a}}]: {:?}", shown(&vs, &g.signature)));
    }
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 5] = [
        ("1 worked examples", worked_examples, Duration::from_secs(5)),
        ("2 figure corpus", figure_corpus, Duration::from_secs(30)),
        ("3 unfounded-set witnesses", witnesses, Duration::from_secs(5)),
        ("4 seeded fuzz invariants", fuzz_theorems, Duration::from_secs(600)),
        ("5 nested implication", nested_implication, Duration::from_secs(5)),
    ];
    let mut all_ok = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome.failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let ok = outcome.failures.is_empty();
        all_ok &= ok;
        println!("criterion {name}: {} ({elapsed:.2?})", if ok { "PASS" } else { "FAIL" });
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if outcome.failures.len() > 10 {
            println!("    ... {} more", outcome.failures.len() - 10);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
