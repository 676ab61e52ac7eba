//! Two independent decision procedures for intuitionistic sequents.
//!
//! [`decide_i`] runs a contraction-free calculus in which the left
//! implication rule is split by the shape of the implication's antecedent,
//! so backward search terminates without loop checking. [`search_i`]
//! searches the checker's own rules with loop checking and returns a
//! derivation.

use std::collections::BTreeSet;

use super::tactic;
use super::{int_premises_of, IntProof, IntRule};
use crate::formula::{Formula, IntSequent};

fn letter_or_bot_closes(ante: &[Formula], goal: &Formula) -> bool {
    ante.contains(&Formula::Bot) || (goal.is_letter() && ante.contains(goal))
}

fn g4(mut ante: Vec<Formula>, goal: &Formula) -> bool {
    if letter_or_bot_closes(&ante, goal) {
        return true;
    }
    // Invertible left rules.
    for i in 0..ante.len() {
        match ante[i].clone() {
            Formula::And(a, b) => {
                ante.swap_remove(i);
                ante.push((*a).clone());
                ante.push((*b).clone());
                return g4(ante, goal);
            }
            Formula::Or(a, b) => {
                ante.swap_remove(i);
                let mut other = ante.clone();
                ante.push((*a).clone());
                other.push((*b).clone());
                return g4(ante, goal) && g4(other, goal);
            }
            Formula::Imp(x, b) => match &*x {
                Formula::Bot => {
                    ante.swap_remove(i);
                    return g4(ante, goal);
                }
                l if l.is_letter() && ante.contains(l) => {
                    ante[i] = (*b).clone();
                    return g4(ante, goal);
                }
                Formula::And(c, d) => {
                    ante[i] = Formula::imp((**c).clone(), Formula::imp((**d).clone(), (*b).clone()));
                    return g4(ante, goal);
                }
                Formula::Or(c, d) => {
                    ante[i] = Formula::imp((**c).clone(), (*b).clone());
                    ante.push(Formula::imp((**d).clone(), (*b).clone()));
                    return g4(ante, goal);
                }
                _ => {}
            },
            _ => {}
        }
    }
    // Invertible right rules.
    match goal {
        Formula::And(a, b) => return g4(ante.clone(), a) && g4(ante, b),
        Formula::Imp(a, b) => {
            ante.push((**a).clone());
            return g4(ante, b);
        }
        _ => {}
    }
    // Choices.
    if let Formula::Or(a, b) = goal {
        if g4(ante.clone(), a) || g4(ante.clone(), b) {
            return true;
        }
    }
    for i in 0..ante.len() {
        if let Formula::Imp(x, b) = &ante[i] {
            if let Formula::Imp(c, d) = &**x {
                let mut rest = ante.clone();
                rest.swap_remove(i);
                let mut left = rest.clone();
                left.push(Formula::imp((**d).clone(), (**b).clone()));
                if !g4(left, &Formula::imp((**c).clone(), (**d).clone())) {
                    continue;
                }
                rest.push((**b).clone());
                if g4(rest, goal) {
                    return true;
                }
            }
        }
    }
    false
}

/// Intuitionistic derivability. `*` is treated as an ordinary letter.
pub fn decide_i(s: &IntSequent) -> bool {
    g4(s.ante.iter().cloned().collect(), &s.succ)
}

type Seen = Vec<(BTreeSet<Formula>, Formula)>;

fn search(s: &IntSequent, seen: &mut Seen) -> Option<IntProof> {
    if s.succ.is_letter() && s.ante.contains(&s.succ) {
        return Some(tactic::ax(s));
    }
    if s.ante.contains(&Formula::Bot) {
        return Some(tactic::lbot(s));
    }
    let key = (s.ante.iter().cloned().collect::<BTreeSet<_>>(), s.succ.clone());
    if seen.contains(&key) {
        return None;
    }
    seen.push(key);
    let out = search_step(s, seen);
    seen.pop();
    out
}

fn attempt(s: &IntSequent, rule: IntRule, principal: &Formula, seen: &mut Seen) -> Option<IntProof> {
    let goals = int_premises_of(s, rule, principal)?;
    let mut premises = Vec::with_capacity(goals.len());
    for g in &goals {
        premises.push(search(g, seen)?);
    }
    Some(IntProof::node(s.clone(), rule, Some(principal.clone()), premises))
}

fn search_step(s: &IntSequent, seen: &mut Seen) -> Option<IntProof> {
    // LAnd, LOr, RAnd and RImp are invertible: apply the first and commit.
    if let Some(f) = s
        .ante
        .iter()
        .find(|f| matches!(f, Formula::And(..) | Formula::Or(..)))
    {
        let rule = if matches!(f, Formula::And(..)) { IntRule::LAnd } else { IntRule::LOr };
        return attempt(s, rule, &f.clone(), seen);
    }
    match &s.succ {
        Formula::And(..) => return attempt(s, IntRule::RAnd, &s.succ.clone(), seen),
        Formula::Imp(..) => return attempt(s, IntRule::RImp, &s.succ.clone(), seen),
        Formula::Or(..) => {
            for rule in [IntRule::ROr1, IntRule::ROr2] {
                if let Some(p) = attempt(s, rule, &s.succ.clone(), seen) {
                    return Some(p);
                }
            }
        }
        _ => {}
    }
    let imps: BTreeSet<Formula> = s
        .ante
        .iter()
        .filter(|f| matches!(f, Formula::Imp(..)))
        .cloned()
        .collect();
    imps.iter()
        .find_map(|f| attempt(s, IntRule::LImp, f, seen))
}

/// Exhaustive backward search over the pure rules, pruning a branch when a
/// sequent repeats (as a set) below itself. Returns a derivation when one
/// exists.
pub fn search_i(s: &IntSequent) -> Option<IntProof> {
    search(s, &mut Vec::new())
}
