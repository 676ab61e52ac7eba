//! Weakening, contraction and cut: explicit node constructors and their
//! elimination from derivations.
//!
//! Weakening threads the extra formulas through every node. Contraction
//! follows the height-preserving argument: contract in the premises, and
//! where the duplicated formula is principal, invert the other copy and
//! contract its components. Cut elimination is the usual double induction
//! on the weight of the cut formula and the heights of the premises,
//! applied to the topmost cuts first.

use super::{IntProof, IntRule};
use crate::error::ProofError;
use crate::formula::{Formula, IntSequent, Multiset};

fn leaf(conclusion: IntSequent, rule: IntRule, principal: Formula) -> IntProof {
    IntProof::node(conclusion, rule, Some(principal), Vec::new())
}

/// Adds `extra` to the antecedent of every sequent; for a `Cut` node only
/// the left premise carries the extra formulas.
fn weaken_in(mut p: IntProof, extra: &Multiset) -> IntProof {
    if extra.is_empty() {
        return p;
    }
    p.conclusion.ante = p.conclusion.ante.sum(extra);
    let cut = p.rule == IntRule::Cut;
    p.premises = std::mem::take(&mut p.premises)
        .into_iter()
        .enumerate()
        .map(|(i, q)| if cut && i == 1 { q } else { weaken_in(q, extra) })
        .collect();
    p
}

/// Depth-preserving weakening: a proof of `Γ, extra ⇒ C` from one of `Γ ⇒ C`.
pub fn weaken(p: &IntProof, extra: &Multiset) -> IntProof {
    weaken_in(p.clone(), extra)
}

#[derive(Clone, Copy)]
enum Inversion {
    And,
    OrLeft,
    OrRight,
    ImpRight,
}

impl Inversion {
    fn rule(self) -> IntRule {
        match self {
            Inversion::And => IntRule::LAnd,
            Inversion::OrLeft | Inversion::OrRight => IntRule::LOr,
            Inversion::ImpRight => IntRule::LImp,
        }
    }

    fn premise(self) -> usize {
        match self {
            Inversion::And | Inversion::OrLeft => 0,
            Inversion::OrRight | Inversion::ImpRight => 1,
        }
    }

    fn components(self, a: &Formula) -> Vec<Formula> {
        match (self, a) {
            (Inversion::And, Formula::And(b, c)) => vec![(**b).clone(), (**c).clone()],
            (Inversion::OrLeft, Formula::Or(b, _)) => vec![(**b).clone()],
            (Inversion::OrRight, Formula::Or(_, c)) => vec![(**c).clone()],
            (Inversion::ImpRight, Formula::Imp(_, c)) => vec![(**c).clone()],
            _ => unreachable!("inversion does not match `{a}`"),
        }
    }
}

/// Height-preserving inversion of a left rule: replaces one antecedent
/// occurrence of `a` by its components.
fn invert(p: IntProof, a: &Formula, kind: Inversion) -> IntProof {
    let IntProof {
        mut conclusion,
        rule,
        principal,
        premises,
        ..
    } = p;
    if rule == kind.rule() && principal.as_ref() == Some(a) {
        return premises
            .into_iter()
            .nth(kind.premise())
            .expect("left rule has the inverted premise");
    }
    let removed = conclusion.ante.remove_one(a);
    debug_assert!(removed, "inverted formula must occur in the antecedent");
    for c in kind.components(a) {
        conclusion.ante.insert(c);
    }
    let premises = premises.into_iter().map(|q| invert(q, a, kind)).collect();
    IntProof::node(conclusion, rule, principal, premises)
}

fn contract_in(p: IntProof, a: &Formula) -> IntProof {
    let IntProof {
        mut conclusion,
        rule,
        principal,
        premises,
        ..
    } = p;
    debug_assert!(conclusion.ante.count(a) >= 2);
    conclusion.ante.remove_one(a);
    let premises = if rule.is_left() && principal.as_ref() == Some(a) {
        let mut it = premises.into_iter();
        match (rule, a) {
            (IntRule::LAnd, Formula::And(b, c)) => {
                let q = invert(it.next().unwrap(), a, Inversion::And);
                vec![contract_in(contract_in(q, b), c)]
            }
            (IntRule::LOr, Formula::Or(b, c)) => {
                let q1 = invert(it.next().unwrap(), a, Inversion::OrLeft);
                let q2 = invert(it.next().unwrap(), a, Inversion::OrRight);
                vec![contract_in(q1, b), contract_in(q2, c)]
            }
            (IntRule::LImp, Formula::Imp(_, c)) => {
                let q1 = it.next().unwrap();
                let q2 = invert(it.next().unwrap(), a, Inversion::ImpRight);
                vec![contract_in(q1, a), contract_in(q2, c)]
            }
            _ => unreachable!("principal formula shape matches its rule"),
        }
    } else {
        premises.into_iter().map(|q| contract_in(q, a)).collect()
    };
    IntProof::node(conclusion, rule, principal, premises)
}

fn contract_all(mut p: IntProof, m: &Multiset) -> IntProof {
    for f in m {
        p = contract_in(p, f);
    }
    p
}

/// Height-preserving contraction: from a pure proof of `A, A, Γ ⇒ C` to
/// one of `A, Γ ⇒ C`. The result is never deeper than the input.
pub fn contract(p: &IntProof, dup: &Formula) -> Result<IntProof, ProofError> {
    if !p.is_pure() {
        return Err(ProofError::Precondition(
            "contraction needs a proof without structural rules".into(),
        ));
    }
    let n = p.ante().count(dup);
    if n < 2 {
        return Err(ProofError::Precondition(format!(
            "`{dup}` occurs {n} time(s) in `{}`, contraction needs two",
            p.conclusion
        )));
    }
    Ok(contract_in(p.clone(), dup))
}

/// An explicit `LW` node.
pub fn lw(p: IntProof, extra: &Multiset) -> IntProof {
    let conclusion = IntSequent::new(p.ante().sum(extra), p.succ().clone());
    IntProof::node(conclusion, IntRule::LW, None, vec![p])
}

/// An explicit `LC` node.
pub fn lc(p: IntProof, a: &Formula) -> Result<IntProof, ProofError> {
    let n = p.ante().count(a);
    if n < 2 {
        return Err(ProofError::Precondition(format!(
            "`{a}` occurs {n} time(s) in `{}`, contraction needs two",
            p.conclusion
        )));
    }
    let conclusion = IntSequent::new(p.ante().without(a).unwrap(), p.succ().clone());
    Ok(IntProof::node(conclusion, IntRule::LC, Some(a.clone()), vec![p]))
}

/// An explicit `Cut` node: from `Γ ⇒ A` and `A, Γ' ⇒ C` to `Γ, Γ' ⇒ C`.
pub fn cut(left: IntProof, right: IntProof, a: &Formula) -> Result<IntProof, ProofError> {
    if left.succ() != a {
        return Err(ProofError::Shape(format!(
            "left premise `{}` does not conclude the cut formula `{a}`",
            left.conclusion
        )));
    }
    let rest = right.ante().without(a).ok_or_else(|| {
        ProofError::Shape(format!(
            "right premise `{}` lacks the cut formula `{a}`",
            right.conclusion
        ))
    })?;
    let conclusion = IntSequent::new(left.ante().sum(&rest), right.succ().clone());
    Ok(IntProof {
        conclusion,
        rule: IntRule::Cut,
        principal: None,
        cut_formula: Some(a.clone()),
        premises: vec![left, right],
    })
}

/// Cut for premises sharing their context: from `Γ ⇒ A` and `A, Γ ⇒ C` to
/// `Γ ⇒ C`, as a `Cut` followed by one `LC` per element of `Γ`.
pub fn cut_shared(left: IntProof, right: IntProof, a: &Formula) -> Result<IntProof, ProofError> {
    let gamma = left.ante().clone();
    if right.ante().without(a).as_ref() != Some(&gamma) {
        return Err(ProofError::Shape(format!(
            "contexts of `{}` and `{}` are not shared",
            left.conclusion, right.conclusion
        )));
    }
    let mut p = cut(left, right, a)?;
    for f in &gamma {
        p = lc(p, f)?;
    }
    Ok(p)
}

fn needs(p: &IntProof, a: &Formula) -> bool {
    let uses = match p.rule {
        IntRule::LBot => *a == Formula::Bot,
        IntRule::Ax => p.principal.as_ref() == Some(a),
        rule => rule.is_left() && p.principal.as_ref() == Some(a),
    };
    (uses && p.ante().count(a) == 1) || p.premises.iter().any(|q| needs(q, a))
}

fn drop_one(p: &IntProof, a: &Formula) -> IntProof {
    let conclusion = IntSequent::new(p.ante().without(a).expect("occurrence to drop"), p.succ().clone());
    let premises = p.premises.iter().map(|q| drop_one(q, a)).collect();
    IntProof::node(conclusion, p.rule, p.principal.clone(), premises)
}

/// Removes one occurrence of `a` from every antecedent of a pure proof,
/// provided no node needs that occurrence.
fn strengthen(p: &IntProof, a: &Formula) -> Option<IntProof> {
    (!needs(p, a)).then(|| drop_one(p, a))
}

/// A derivation without premises when the sequent is an identity or has
/// `bot` on the left.
fn immediate(s: &IntSequent) -> Option<IntProof> {
    if s.ante.contains(&Formula::Bot) {
        Some(leaf(s.clone(), IntRule::LBot, Formula::Bot))
    } else if s.ante.contains(&s.succ) {
        Some(super::tactic::id(s))
    } else {
        None
    }
}

fn cut_pure(l: IntProof, r: IntProof, a: &Formula) -> IntProof {
    debug_assert_eq!(l.succ(), a);
    let delta = r.ante().without(a).expect("right premise holds the cut formula");
    let target = IntSequent::new(l.ante().sum(&delta), r.succ().clone());

    // Generalized axiom cases: the left premise is an identity in
    // disguise, or the conclusion closes at once.
    if let Some(rest) = l.ante().without(a) {
        return weaken_in(r, &rest);
    }
    if let Some(p) = immediate(&target) {
        return p;
    }
    if let Some(s) = strengthen(&r, a) {
        return weaken_in(s, l.ante());
    }
    match r.rule {
        IntRule::Ax => {
            let w = r.principal.clone().expect("axiom has a witness");
            return if delta.contains(&w) {
                leaf(target, IntRule::Ax, w)
            } else {
                weaken_in(l, &delta)
            };
        }
        IntRule::LBot if delta.contains(&Formula::Bot) => {
            return leaf(target, IntRule::LBot, Formula::Bot)
        }
        _ => {}
    }

    if l.rule.is_left() {
        // The cut formula is not principal on the left: move the cut up
        // into the left derivation.
        let IntProof {
            rule,
            principal,
            premises,
            ..
        } = l;
        let premises = if rule == IntRule::LImp {
            let mut it = premises.into_iter();
            let q1 = it.next().unwrap();
            let q2 = it.next().unwrap();
            vec![weaken_in(q1, &delta), cut_pure(q2, r, a)]
        } else {
            let mut r = Some(r);
            let mut out = Vec::with_capacity(premises.len());
            let mut it = premises.into_iter().peekable();
            while let Some(q) = it.next() {
                let rq = if it.peek().is_some() {
                    r.clone().unwrap()
                } else {
                    r.take().unwrap()
                };
                out.push(cut_pure(q, rq, a));
            }
            out
        };
        return IntProof::node(target, rule, principal, premises);
    }

    if r.rule.is_left() && r.principal.as_ref() == Some(a) {
        return principal_reduction(l, r, a);
    }

    // Cut formula principal on the left only: move the cut into the right.
    let IntProof {
        rule,
        principal,
        premises,
        ..
    } = r;
    let premises = premises
        .into_iter()
        .map(|q| cut_pure(l.clone(), q, a))
        .collect();
    IntProof::node(target, rule, principal, premises)
}

fn principal_reduction(l: IntProof, r: IntProof, a: &Formula) -> IntProof {
    let gamma = l.ante().clone();
    let delta = r.ante().without(a).unwrap();
    match a {
        Formula::And(b, c) => {
            let mut lp = l.premises.into_iter();
            let (l1, l2) = (lp.next().unwrap(), lp.next().unwrap());
            let r1 = r.premises.into_iter().next().unwrap();
            let x = cut_pure(l2, r1, c);
            let y = cut_pure(l1, x, b);
            contract_all(y, &gamma)
        }
        Formula::Or(b, c) => {
            let (side, cf) = match l.rule {
                IntRule::ROr1 => (0, b),
                IntRule::ROr2 => (1, c),
                other => unreachable!("{other} cannot conclude a disjunction"),
            };
            let l1 = l.premises.into_iter().next().unwrap();
            let rq = r.premises.into_iter().nth(side).unwrap();
            cut_pure(l1, rq, cf)
        }
        Formula::Imp(b, c) => {
            let l1 = l.premises[0].clone();
            let mut rp = r.premises.into_iter();
            let (r1, r2) = (rp.next().unwrap(), rp.next().unwrap());
            let s1 = cut_pure(l, r1, a);
            let s2 = cut_pure(s1, l1, b);
            let s3 = cut_pure(s2, r2, c);
            contract_all(s3, &gamma.sum(&delta))
        }
        _ => unreachable!("atomic cut formulas are handled by the axiom cases"),
    }
}

/// Removes every `LW`, `LC` and `Cut` node, keeping the conclusion.
pub fn eliminate_structural(p: &IntProof) -> IntProof {
    if p.is_pure() {
        return p.clone();
    }
    if let Some(q) = immediate(&p.conclusion) {
        return q;
    }
    let premises: Vec<IntProof> = p.premises.iter().map(eliminate_structural).collect();
    match p.rule {
        IntRule::LW => {
            let q = premises.into_iter().next().unwrap();
            let extra = p
                .ante()
                .minus(q.ante())
                .expect("checked LW premise is a sub-multiset");
            weaken_in(q, &extra)
        }
        IntRule::LC => {
            let q = premises.into_iter().next().unwrap();
            contract_in(q, p.principal.as_ref().expect("LC names its formula"))
        }
        IntRule::Cut => {
            let mut it = premises.into_iter();
            let (l, r) = (it.next().unwrap(), it.next().unwrap());
            cut_pure(l, r, p.cut_formula.as_ref().expect("Cut names its formula"))
        }
        rule => IntProof::node(p.conclusion.clone(), rule, p.principal.clone(), premises),
    }
}
