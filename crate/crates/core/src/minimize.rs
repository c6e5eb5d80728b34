//! Search for belief models strictly below a total one.
//!
//! A strictly smaller model keeps the there-projection of the view, so only
//! here-components vary. Two strategies decide whether one exists:
//!
//! * `Exhaustive` enumerates every family of here-sets per world.
//! * `Decomposed` guesses the truth of each modal subformula, collects for
//!   every world the here-sets compatible with that guess, and confirms the
//!   guess against the largest compatible view.

use crate::faeel::{faeel_model, HtView};
use crate::kd45::eval_kd45;
use crate::syntax::Formula;
use crate::views::submasks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Decomposed,
    Exhaustive,
}

/// Whether a belief model strictly below the total `⟨T, worlds⟩` exists.
/// With `real_world = None` the search is over views alone (S5-HT models).
pub(crate) fn smaller_belief_model_exists(
    formulas: &[Formula],
    worlds: &[u64],
    real_world: Option<u64>,
    strategy: Strategy,
) -> bool {
    match strategy {
        Strategy::Decomposed => Decomposed::new(formulas, worlds).search(real_world),
        Strategy::Exhaustive => exhaustive(formulas, worlds, real_world),
    }
}

struct Decomposed<'a> {
    formulas: &'a [Formula],
    worlds: &'a [u64],
    modal: Vec<Formula>,
}

impl<'a> Decomposed<'a> {
    fn new(formulas: &'a [Formula], worlds: &'a [u64]) -> Self {
        let mut modal = Vec::new();
        for f in formulas {
            f.collect_all_modal(&mut modal);
        }
        let mut distinct: Vec<Formula> = Vec::with_capacity(modal.len());
        for m in modal {
            if !distinct.contains(&m) {
                distinct.push(m);
            }
        }
        Decomposed { formulas, worlds, modal: distinct }
    }

    fn index(&self, m: &Formula) -> usize {
        self.modal.iter().position(|x| x == m).expect("collected modal subformula")
    }

    fn inner(m: &Formula) -> &Formula {
        match m {
            Formula::Know(inner) => inner,
            _ => unreachable!("modal list holds only K nodes"),
        }
    }

    fn eval(&self, here: u64, there: u64, guess: u64, f: &Formula) -> bool {
        match f {
            Formula::Bottom => false,
            Formula::Atom(a) => here & a.bit() != 0,
            Formula::And(l, r) => self.eval(here, there, guess, l) && self.eval(here, there, guess, r),
            Formula::Or(l, r) => self.eval(here, there, guess, l) || self.eval(here, there, guess, r),
            Formula::Implies(l, r) => {
                (!self.eval(here, there, guess, l) || self.eval(here, there, guess, r))
                    && eval_kd45(there, self.worlds, f)
            }
            Formula::Know(_) => guess >> self.index(f) & 1 == 1,
        }
    }

    fn model(&self, here: u64, there: u64, guess: u64) -> bool {
        self.formulas.iter().all(|f| self.eval(here, there, guess, f))
    }

    fn search(&self, real_world: Option<u64>) -> bool {
        let k = self.modal.len();
        assert!(k < 64, "too many modal subformulas");
        let all: u64 = if k == 0 { 0 } else { u64::MAX >> (64 - k) };
        // A known formula must hold at every there-world, so only
        // formulas true under the total view can be guessed true.
        let free = (0..k)
            .filter(|&i| eval_kd45(0, self.worlds, &self.modal[i]))
            .fold(0u64, |m, i| m | 1 << i);
        'guess: for guess in submasks(free) {
            let false_mask = all & !guess;
            let mut falsified = 0u64;
            let mut nontotal = false;
            for &t in self.worlds {
                let mut any = false;
                for h in submasks(t) {
                    if !self.model(h, t, guess) {
                        continue;
                    }
                    let compatible = (0..k)
                        .filter(|&i| guess >> i & 1 == 1)
                        .all(|i| self.eval(h, t, guess, Self::inner(&self.modal[i])));
                    if !compatible {
                        continue;
                    }
                    any = true;
                    nontotal |= h != t;
                    for i in 0..k {
                        let pending = false_mask & !falsified;
                        if pending >> i & 1 == 1 && !self.eval(h, t, guess, Self::inner(&self.modal[i])) {
                            falsified |= 1 << i;
                        }
                    }
                }
                if !any {
                    continue 'guess;
                }
            }
            if falsified != false_mask {
                continue;
            }
            let found = match real_world {
                None => nontotal,
                Some(t) => {
                    let strict = submasks(t).skip(1).any(|h| self.model(h, t, guess));
                    strict || (nontotal && self.model(t, t, guess))
                }
            };
            if found {
                return true;
            }
        }
        false
    }
}

/// Every nonempty family of here-sets per world, as lists of pairs.
fn families(worlds: &[u64]) -> Vec<Vec<(u64, u64)>> {
    let mut acc: Vec<Vec<(u64, u64)>> = vec![Vec::new()];
    for &t in worlds {
        let heres: Vec<u64> = submasks(t).collect();
        let mut next = Vec::new();
        for pick in 1u64..(1 << heres.len()) {
            let chosen: Vec<(u64, u64)> = heres
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &h)| (h, t))
                .collect();
            for prefix in &acc {
                let mut v = prefix.clone();
                v.extend_from_slice(&chosen);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn exhaustive(formulas: &[Formula], worlds: &[u64], real_world: Option<u64>) -> bool {
    for pairs in families(worlds) {
        let view = HtView { pairs: &pairs, worlds };
        if !pairs.iter().all(|&(h, t)| faeel_model(h, t, &view, formulas)) {
            continue;
        }
        let view_total = pairs.iter().all(|&(h, t)| h == t);
        match real_world {
            None => {
                if !view_total {
                    return true;
                }
            }
            Some(t) => {
                for h in submasks(t) {
                    if (h != t || !view_total) && faeel_model(h, t, &view, formulas) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
