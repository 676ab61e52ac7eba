//! Backward proof construction for fixed derivation templates.
//!
//! Each function takes the goal sequent, applies one rule backwards and
//! hands the premise goals to continuations. A rule that does not apply is
//! a bug in the calling template, so these panic instead of returning errors.

use super::{int_premises_of, IntProof, IntRule};
use crate::formula::{Formula, IntSequent};

type K<'a> = Box<dyn FnOnce(&IntSequent) -> IntProof + 'a>;

fn by(s: &IntSequent, rule: IntRule, principal: &Formula, ks: Vec<K<'_>>) -> IntProof {
    let goals = int_premises_of(s, rule, principal)
        .unwrap_or_else(|| panic!("{rule} on `{principal}` does not apply to `{s}`"));
    debug_assert_eq!(goals.len(), ks.len());
    let premises = goals.iter().zip(ks).map(|(g, k)| k(g)).collect();
    IntProof::node(s.clone(), rule, Some(principal.clone()), premises)
}

pub(crate) fn ax(s: &IntSequent) -> IntProof {
    by(s, IntRule::Ax, &s.succ, vec![])
}

pub(crate) fn lbot(s: &IntSequent) -> IntProof {
    by(s, IntRule::LBot, &Formula::Bot, vec![])
}

pub(crate) fn land<'a>(
    s: &IntSequent,
    p: &Formula,
    k: impl FnOnce(&IntSequent) -> IntProof + 'a,
) -> IntProof {
    by(s, IntRule::LAnd, p, vec![Box::new(k)])
}

pub(crate) fn lor<'a>(
    s: &IntSequent,
    p: &Formula,
    k1: impl FnOnce(&IntSequent) -> IntProof + 'a,
    k2: impl FnOnce(&IntSequent) -> IntProof + 'a,
) -> IntProof {
    by(s, IntRule::LOr, p, vec![Box::new(k1), Box::new(k2)])
}

pub(crate) fn limp<'a>(
    s: &IntSequent,
    p: &Formula,
    k1: impl FnOnce(&IntSequent) -> IntProof + 'a,
    k2: impl FnOnce(&IntSequent) -> IntProof + 'a,
) -> IntProof {
    by(s, IntRule::LImp, p, vec![Box::new(k1), Box::new(k2)])
}

pub(crate) fn rand<'a>(
    s: &IntSequent,
    k1: impl FnOnce(&IntSequent) -> IntProof + 'a,
    k2: impl FnOnce(&IntSequent) -> IntProof + 'a,
) -> IntProof {
    let p = s.succ.clone();
    by(s, IntRule::RAnd, &p, vec![Box::new(k1), Box::new(k2)])
}

pub(crate) fn ror1<'a>(s: &IntSequent, k: impl FnOnce(&IntSequent) -> IntProof + 'a) -> IntProof {
    let p = s.succ.clone();
    by(s, IntRule::ROr1, &p, vec![Box::new(k)])
}

pub(crate) fn ror2<'a>(s: &IntSequent, k: impl FnOnce(&IntSequent) -> IntProof + 'a) -> IntProof {
    let p = s.succ.clone();
    by(s, IntRule::ROr2, &p, vec![Box::new(k)])
}

pub(crate) fn rimp<'a>(s: &IntSequent, k: impl FnOnce(&IntSequent) -> IntProof + 'a) -> IntProof {
    let p = s.succ.clone();
    by(s, IntRule::RImp, &p, vec![Box::new(k)])
}

/// `A, Γ ⇒ A` for any `A` in the antecedent.
pub(crate) fn id(s: &IntSequent) -> IntProof {
    assert!(
        s.ante.contains(&s.succ),
        "identity needs `{}` in the antecedent of `{s}`",
        s.succ
    );
    let a = s.succ.clone();
    match &a {
        Formula::Atom(_) | Formula::Star => ax(s),
        Formula::Bot => lbot(s),
        Formula::And(_, _) => land(s, &a, |g| rand(g, id, id)),
        Formula::Or(_, _) => lor(s, &a, |g| ror1(g, id), |g| ror2(g, id)),
        Formula::Imp(_, _) => rimp(s, |g| limp(g, &a, id, id)),
    }
}
