//! Classical derivations in, intuitionistic derivations out.
//!
//! The antecedent of every classical sequent `Γ, Δ ⇒ Σ` is split into a
//! Γ-part kept as is and a Δ-part that is read under `¬*¬`. A classical
//! derivation is translated, node by node, into a derivation of
//!
//! ```text
//! Π_V, Γ, ¬*¬Δ, ¬*Σ ⇒ *
//! ```
//!
//! with `LW` and `Cut` recorded as explicit nodes. [`translate_theorem`]
//! then substitutes the goal for `*` and removes the structural nodes.

use std::fmt;

use thiserror::Error;

use crate::error::{CheckError, ProofError};
use crate::formula::{ClassicalSequent, Formula, IntSequent, Multiset};
use crate::g3cp::{check_c, search_c, ClassicalProof, ClassicalRule, SearchOutcome};
use crate::g3ip::tactic::{ax, id, lbot, limp, rimp};
use crate::g3ip::{cut, eliminate_structural, lw, IntProof, IntRule};
use crate::lemmas::{build_lemma, curry_star, dne_star, subst_star_proof, uncurry_star, LemmaId};
use crate::polarity::{em_set, em_set_general, pi_multiset, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionTag {
    GammaPart,
    DeltaPart,
}

impl PartitionTag {
    pub fn name(self) -> &'static str {
        match self {
            PartitionTag::GammaPart => "gamma",
            PartitionTag::DeltaPart => "delta",
        }
    }
}

/// A split of an antecedent into its Γ-part and Δ-part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    pub gamma: Multiset,
    pub delta: Multiset,
}

impl Partition {
    pub fn new(gamma: Multiset, delta: Multiset) -> Partition {
        Partition { gamma, delta }
    }

    /// Every occurrence gets the same tag.
    pub fn uniform(ante: &Multiset, tag: PartitionTag) -> Partition {
        match tag {
            PartitionTag::GammaPart => Partition::new(ante.clone(), Multiset::new()),
            PartitionTag::DeltaPart => Partition::new(Multiset::new(), ante.clone()),
        }
    }

    /// The tag of some occurrence of `f`, preferring the Γ-part.
    pub fn tag_of(&self, f: &Formula) -> Option<PartitionTag> {
        if self.gamma.contains(f) {
            Some(PartitionTag::GammaPart)
        } else if self.delta.contains(f) {
            Some(PartitionTag::DeltaPart)
        } else {
            None
        }
    }

    pub fn antecedent(&self) -> Multiset {
        self.gamma.sum(&self.delta)
    }

    fn part_mut(&mut self, tag: PartitionTag) -> &mut Multiset {
        match tag {
            PartitionTag::GammaPart => &mut self.gamma,
            PartitionTag::DeltaPart => &mut self.delta,
        }
    }

    fn replace(&self, tag: PartitionTag, old: &Formula, new: &[Formula]) -> Partition {
        let mut out = self.clone();
        let part = out.part_mut(tag);
        let removed = part.remove_one(old);
        debug_assert!(removed);
        for f in new {
            part.insert(f.clone());
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma {:?}, delta {:?}", self.gamma, self.delta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("classical derivation does not check: {0}")]
    Check(#[from] CheckError),
    #[error("partition ({partition}) does not split the antecedent of `{sequent}`")]
    Partition { partition: String, sequent: String },
    #[error("V lacks {missing:?} needed at `{sequent}`")]
    InsufficientV { missing: Vec<String>, sequent: String },
    #[error("succedent must be a single formula, got {0}")]
    NotSingleton(usize),
    #[error("`*` is reserved and may not occur in the input")]
    ReservedStar,
    #[error("not classically valid")]
    NotValid,
    #[error("internal construction failed: {0}")]
    Proof(#[from] ProofError),
}

/// How the antecedent of each premise is split, given the split of the
/// conclusion. Side formulas take the principal's tag; the antecedent of
/// a right implication goes to the Δ-part.
pub fn premise_partitions(cp: &ClassicalProof, part: &Partition) -> Vec<Partition> {
    let p = &cp.principal;
    let tag = || part.tag_of(p).expect("principal formula in the antecedent");
    match (cp.rule, p) {
        (ClassicalRule::Ax | ClassicalRule::LBot, _) => vec![],
        (ClassicalRule::LAnd, Formula::And(a, b)) => {
            vec![part.replace(tag(), p, &[(**a).clone(), (**b).clone()])]
        }
        (ClassicalRule::LOr, Formula::Or(a, b)) => vec![
            part.replace(tag(), p, &[(**a).clone()]),
            part.replace(tag(), p, &[(**b).clone()]),
        ],
        (ClassicalRule::LImp, Formula::Imp(_, b)) => {
            let t = tag();
            vec![part.replace(t, p, &[]), part.replace(t, p, &[(**b).clone()])]
        }
        (ClassicalRule::RAnd, _) => vec![part.clone(), part.clone()],
        (ClassicalRule::ROr, _) => vec![part.clone()],
        (ClassicalRule::RImp, Formula::Imp(a, _)) => {
            let mut q = part.clone();
            q.delta.insert((**a).clone());
            vec![q]
        }
        (rule, _) => panic!("{rule} with principal `{p}`"),
    }
}

fn ns(a: &Formula) -> Formula {
    Formula::not_star(a.clone())
}

fn nsn(a: &Formula) -> Formula {
    Formula::not_star_not(a.clone())
}

fn nn(a: &Formula) -> Formula {
    Formula::dn_star(a.clone())
}

/// The antecedent `Π_V, Γ, ¬*¬Δ, ¬*Σ`.
fn context(pi: &Multiset, part: &Partition, sigma: &Multiset) -> Multiset {
    pi.sum(&part.gamma)
        .sum(&part.delta.map(nsn))
        .sum(&sigma.map(ns))
}

/// The sequent [`translate_prop`] derives for this split and `V`.
pub fn prop_target(s: &ClassicalSequent, part: &Partition, v: &VarSet) -> IntSequent {
    IntSequent::new(context(&pi_multiset(v), part, &s.succ), Formula::Star)
}

/// Translates a classical derivation of `Γ, Δ ⇒ Σ` into an intuitionistic
/// derivation of `Π_V, Γ, ¬*¬Δ, ¬*Σ ⇒ *`. `V` must contain the excluded
/// middle set of every node under the propagated split.
pub fn translate_prop(
    cp: &ClassicalProof,
    part: &Partition,
    v: &VarSet,
) -> Result<IntProof, TranslateError> {
    check_c(cp)?;
    if part.antecedent() != cp.conclusion.ante {
        return Err(TranslateError::Partition {
            partition: part.to_string(),
            sequent: cp.conclusion.to_string(),
        });
    }
    go(cp, part, v, &pi_multiset(v))
}

fn go(
    cp: &ClassicalProof,
    part: &Partition,
    v: &VarSet,
    pi: &Multiset,
) -> Result<IntProof, TranslateError> {
    let sigma = &cp.conclusion.succ;
    let need = em_set_general(&part.gamma, &part.delta, sigma);
    if !need.is_subset(v) {
        return Err(TranslateError::InsufficientV {
            missing: need.iter().filter(|x| !v.contains(x)).map(String::from).collect(),
            sequent: cp.conclusion.to_string(),
        });
    }
    let ctx = context(pi, part, sigma);
    let goal = IntSequent::new(ctx.clone(), Formula::Star);
    let p = &cp.principal;
    let subs = premise_partitions(cp, part);
    let ih = |i: usize| go(&cp.premises[i], &subs[i], v, pi);
    let node = |ante: Multiset, rule, principal: &Formula, premises| {
        IntProof::node(IntSequent::new(ante, Formula::Star), rule, Some(principal.clone()), premises)
    };
    let drop = |f: &Formula| ctx.without(f).expect("formula in the translated context");

    use ClassicalRule as C;
    use PartitionTag::{DeltaPart, GammaPart};
    let left_tag = if cp.rule.is_left() { part.tag_of(p) } else { None };
    let out = match (cp.rule, left_tag, p) {
        (C::Ax, Some(GammaPart), _) => limp(&goal, &ns(p), ax, ax),
        (C::Ax, Some(DeltaPart), _) => {
            let gamma = drop(&Formula::excluded_middle(p.clone()))
                .without(&nsn(p))
                .and_then(|m| m.without(&ns(p)))
                .expect("lemma 1 context");
            build_lemma(&LemmaId::ExcludedMiddle { var: p.clone(), gamma })
        }
        (C::LBot, Some(GammaPart), _) => lbot(&goal),
        (C::LBot, Some(DeltaPart), _) => build_lemma(&LemmaId::Bottom { gamma: drop(&nsn(p)) }),

        (C::LAnd, Some(GammaPart), _) => node(ctx, IntRule::LAnd, p, vec![ih(0)?]),
        (C::LAnd, Some(DeltaPart), Formula::And(d, d2)) => {
            let conj = Formula::and(nsn(d), nsn(d2));
            let l = node(drop(&nsn(p)).with(conj.clone()), IntRule::LAnd, &conj, vec![ih(0)?]);
            let lemma = build_lemma(&LemmaId::NegAnd { d: (**d).clone(), d2: (**d2).clone() });
            cut(lemma, l, &conj)?
        }

        (C::LOr, Some(GammaPart), _) => node(ctx, IntRule::LOr, p, vec![ih(0)?, ih(1)?]),
        (C::LOr, Some(DeltaPart), Formula::Or(d, d2)) => {
            let e = Formula::or(nsn(d), nsn(d2));
            let l = node(drop(&nsn(p)).with(e.clone()), IntRule::LOr, &e, vec![ih(0)?, ih(1)?]);
            let lemma = build_lemma(&LemmaId::NegOr { d: (**d).clone(), d2: (**d2).clone() });
            cut(lemma, dne_star(l, &e)?, &nn(&e))?
        }

        (C::LImp, Some(tag), Formula::Imp(s, b)) => {
            let (s, b) = ((**s).clone(), (**b).clone());
            let rest = match tag {
                GammaPart => drop(p),
                DeltaPart => drop(&nsn(p)),
            };
            let major = curry_star(ih(0)?, &ns(&s))?;
            let (minor, k, lemma) = match tag {
                GammaPart => (
                    dne_star(ih(1)?, &b)?,
                    Formula::imp(nn(&s), nn(&b)),
                    LemmaId::Imp { s, b },
                ),
                DeltaPart => (
                    ih(1)?,
                    Formula::imp(nn(&s), nsn(&b)),
                    LemmaId::NegImp { s, b },
                ),
            };
            let major = lw(major, &vec![k.clone()].into());
            let l = node(rest.with(k.clone()), IntRule::LImp, &k, vec![major, minor]);
            cut(build_lemma(&lemma), l, &k)?
        }

        (C::RAnd, _, Formula::And(s, s2)) => {
            let rest = drop(&ns(p));
            let conj = Formula::and(nn(s), nn(s2));
            let r = IntProof::node(
                IntSequent::new(rest, conj.clone()),
                IntRule::RAnd,
                Some(conj.clone()),
                vec![curry_star(ih(0)?, &ns(s))?, curry_star(ih(1)?, &ns(s2))?],
            );
            let lemma = build_lemma(&LemmaId::DnAnd { s: (**s).clone(), s2: (**s2).clone() });
            uncurry_star(cut(r, lemma, &conj)?)?
        }
        (C::ROr, _, Formula::Or(s, s2)) => {
            let rest = drop(&ns(p));
            let conj = Formula::and(ns(s), ns(s2));
            let l = node(rest.with(conj.clone()), IntRule::LAnd, &conj, vec![ih(0)?]);
            let lemma = build_lemma(&LemmaId::DnOr { s: (**s).clone(), s2: (**s2).clone() });
            uncurry_star(cut(curry_star(l, &conj)?, lemma, &ns(&conj))?)?
        }
        (C::RImp, _, Formula::Imp(a, s)) => {
            let rest = drop(&ns(p));
            let k = Formula::imp(nsn(a), nn(s));
            let r = IntProof::node(
                IntSequent::new(rest, k.clone()),
                IntRule::RImp,
                Some(k.clone()),
                vec![curry_star(ih(0)?, &ns(s))?],
            );
            let lemma = build_lemma(&LemmaId::DnImp { a: (**a).clone(), s: (**s).clone() });
            uncurry_star(cut(r, lemma, &k)?)?
        }
        (rule, tag, _) => {
            return Err(ProofError::Shape(format!("{rule} on `{p}` tagged {tag:?}")).into())
        }
    };
    debug_assert_eq!(out.conclusion, goal);
    Ok(out)
}

/// A translated derivation of `Π_V, Γ ⇒ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationResult {
    pub v: VarSet,
    /// With `LW`, `LC` and `Cut` nodes.
    pub proof: IntProof,
    /// The same conclusion with the structural nodes eliminated.
    pub pure_proof: IntProof,
}

/// Translates a classical derivation of `Γ ⇒ A` into an intuitionistic
/// derivation of `Π_V, Γ ⇒ A` with `V = em_set(Γ, A)`.
pub fn translate_theorem(cp: &ClassicalProof) -> Result<TranslationResult, TranslateError> {
    check_c(cp)?;
    let s = &cp.conclusion;
    let a = match s.succ.as_slice() {
        [a] => a.clone(),
        other => return Err(TranslateError::NotSingleton(other.len())),
    };
    if s.contains_star() {
        return Err(TranslateError::ReservedStar);
    }
    let v = em_set(&s.ante, &a);
    let prop = go(cp, &Partition::uniform(&s.ante, PartitionTag::GammaPart), &v, &pi_multiset(&v))?;
    // Π_V, Γ, A -> A ⇒ A, then discharge A -> A.
    let aa = Formula::imp(a.clone(), a.clone());
    let trivial = rimp(&IntSequent::new(Multiset::new(), aa.clone()), id);
    let proof = cut(trivial.clone(), subst_star_proof(&prop, &a), &aa)?;
    // Substitution keeps a proof pure, so eliminating before it is cheaper
    // and leaves a single cut to remove afterwards.
    let pure_prop = subst_star_proof(&eliminate_structural(&prop), &a);
    let pure_proof = eliminate_structural(&cut(trivial, pure_prop, &aa)?);
    debug_assert_eq!(pure_proof.conclusion, proof.conclusion);
    Ok(TranslationResult { v, proof, pure_proof })
}

/// Decides `s` classically and translates the derivation found.
pub fn translate_sequent(s: &ClassicalSequent) -> Result<TranslationResult, TranslateError> {
    if s.contains_star() {
        return Err(TranslateError::ReservedStar);
    }
    if s.succ.len() != 1 {
        return Err(TranslateError::NotSingleton(s.succ.len()));
    }
    match search_c(s) {
        SearchOutcome::Proof(cp) => translate_theorem(&cp),
        SearchOutcome::Countermodel(_) => Err(TranslateError::NotValid),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotApplicable {
    NotClassicallyValid,
    VNonempty(VarSet),
    ReservedStar,
}

impl NotApplicable {
    pub fn reason(&self) -> &'static str {
        match self {
            NotApplicable::NotClassicallyValid => "not classically valid",
            NotApplicable::VNonempty(_) => "V nonempty",
            NotApplicable::ReservedStar => "input contains `*`",
        }
    }
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.reason())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorollaryOutcome {
    Proof(IntProof),
    NotApplicable(NotApplicable),
}

/// An intuitionistic derivation of `Γ ⇒ A` when `Γ ⇒ A` is classically
/// valid and its excluded middle set is empty. The condition is only
/// sufficient: `NotApplicable` says nothing about intuitionistic validity.
pub fn corollary_check(gamma: &Multiset, a: &Formula) -> CorollaryOutcome {
    let s = ClassicalSequent::new(gamma.clone(), vec![a.clone()]);
    if s.contains_star() {
        return CorollaryOutcome::NotApplicable(NotApplicable::ReservedStar);
    }
    let v = em_set(gamma, a);
    if !v.is_empty() {
        return CorollaryOutcome::NotApplicable(NotApplicable::VNonempty(v));
    }
    match search_c(&s) {
        SearchOutcome::Countermodel(_) => {
            CorollaryOutcome::NotApplicable(NotApplicable::NotClassicallyValid)
        }
        SearchOutcome::Proof(cp) => {
            let r = translate_theorem(&cp).expect("translation of a checked derivation");
            CorollaryOutcome::Proof(r.pure_proof)
        }
    }
}
