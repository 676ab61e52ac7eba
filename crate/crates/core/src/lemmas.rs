//! Derivations built around the placeholder letter `*`.
//!
//! Notation in comments: `¬*A` is `A -> *`, `¬A` is `A -> bot`.
//!
//! The nine schemas of [`LemmaId`] are built from fixed templates, not by
//! search. Items 3 to 9 have no side context; callers weaken as needed.

use std::fmt;

use crate::error::ProofError;
use crate::formula::{Formula, IntSequent, Multiset};
use crate::g3ip::tactic::{ax, id, land, lbot, limp, lor, rand, rimp, ror1, ror2};
use crate::g3ip::{cut, identity_proof, lw, weaken, IntProof, IntRule};

fn not(a: &Formula) -> Formula {
    Formula::not(a.clone())
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

/// From `Γ ⇒ A` to `Γ, ¬*A ⇒ *` by one `LImp` on `¬*A`.
pub fn star_refute(p: IntProof) -> IntProof {
    let a = p.succ().clone();
    let h = ns(&a);
    let extra: Multiset = vec![h.clone()].into();
    let ctx = p.ante().clone();
    let left = if p.is_pure() { weaken(&p, &extra) } else { lw(p, &extra) };
    let right = ax(&IntSequent::new(ctx.with(Formula::Star), Formula::Star));
    IntProof::node(
        IntSequent::new(ctx.with(h.clone()), Formula::Star),
        IntRule::LImp,
        Some(h),
        vec![left, right],
    )
}

/// From `Γ, A ⇒ *` to `Γ ⇒ ¬*A` by `RImp`.
pub fn curry_star(p: IntProof, a: &Formula) -> Result<IntProof, ProofError> {
    if *p.succ() != Formula::Star {
        return Err(ProofError::Shape(format!(
            "`{}` does not conclude `*`",
            p.conclusion
        )));
    }
    let rest = p.ante().without(a).ok_or_else(|| {
        ProofError::Shape(format!("`{a}` is not in the antecedent of `{}`", p.conclusion))
    })?;
    let h = ns(a);
    Ok(IntProof::node(
        IntSequent::new(rest, h.clone()),
        IntRule::RImp,
        Some(h),
        vec![p],
    ))
}

/// From `Γ ⇒ ¬*A` to `Γ, A ⇒ *`: a cut against `¬*A, A ⇒ *`.
pub fn uncurry_star(p: IntProof) -> Result<IntProof, ProofError> {
    let a = match p.succ() {
        Formula::Imp(a, b) if **b == Formula::Star => (**a).clone(),
        other => {
            return Err(ProofError::Shape(format!(
                "`{other}` is not of the form `A -> *`"
            )))
        }
    };
    let h = ns(&a);
    let apply = limp(
        &IntSequent::new(vec![h.clone(), a], Formula::Star),
        &h,
        id,
        ax,
    );
    cut(p, apply, &h)
}

/// From `Γ, A ⇒ *` to `Γ, ¬*¬*A ⇒ *`.
pub fn dne_star(p: IntProof, a: &Formula) -> Result<IntProof, ProofError> {
    Ok(star_refute(curry_star(p, a)?))
}

/// One of the nine schemas, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaId {
    /// 1: `Γ, p | ~p, ¬*¬p, ¬*p ⇒ *`
    ExcludedMiddle { var: Formula, gamma: Multiset },
    /// 2: `Γ, ¬*¬bot ⇒ *`
    Bottom { gamma: Multiset },
    /// 3: `¬*¬(D & D') ⇒ ¬*¬D & ¬*¬D'`
    NegAnd { d: Formula, d2: Formula },
    /// 4: `¬*¬*S & ¬*¬*S' ⇒ ¬*¬*(S & S')`
    DnAnd { s: Formula, s2: Formula },
    /// 5: `¬*¬(D | D') ⇒ ¬*¬*(¬*¬D | ¬*¬D')`
    NegOr { d: Formula, d2: Formula },
    /// 6: `¬*(¬*S & ¬*S') ⇒ ¬*¬*(S | S')`
    DnOr { s: Formula, s2: Formula },
    /// 7: `¬*¬(S -> B) ⇒ ¬*¬*S -> ¬*¬B`
    NegImp { s: Formula, b: Formula },
    /// 8: `S -> B ⇒ ¬*¬*S -> ¬*¬*B`
    Imp { s: Formula, b: Formula },
    /// 9: `¬*¬A -> ¬*¬*S ⇒ ¬*¬*(A -> S)`
    DnImp { a: Formula, s: Formula },
}

impl LemmaId {
    pub fn index(&self) -> u8 {
        match self {
            LemmaId::ExcludedMiddle { .. } => 1,
            LemmaId::Bottom { .. } => 2,
            LemmaId::NegAnd { .. } => 3,
            LemmaId::DnAnd { .. } => 4,
            LemmaId::NegOr { .. } => 5,
            LemmaId::DnOr { .. } => 6,
            LemmaId::NegImp { .. } => 7,
            LemmaId::Imp { .. } => 8,
            LemmaId::DnImp { .. } => 9,
        }
    }

    /// Builds the id from its index and parameters. Item 1 takes the
    /// variable followed by the context, item 2 the context, the others
    /// exactly two formulas.
    pub fn from_params(index: u8, params: Vec<Formula>) -> Result<LemmaId, ProofError> {
        let pair = |params: Vec<Formula>| -> Result<(Formula, Formula), ProofError> {
            match <[Formula; 2]>::try_from(params) {
                Ok([x, y]) => Ok((x, y)),
                Err(v) => Err(ProofError::Precondition(format!(
                    "lemma {index} takes two formulas, got {}",
                    v.len()
                ))),
            }
        };
        Ok(match index {
            1 => {
                let mut it = params.into_iter();
                let var = it.next().ok_or_else(|| {
                    ProofError::Precondition("lemma 1 needs a propositional variable".into())
                })?;
                if !matches!(var, Formula::Atom(_)) {
                    return Err(ProofError::Precondition(format!(
                        "lemma 1 needs a propositional variable, got `{var}`"
                    )));
                }
                LemmaId::ExcludedMiddle {
                    var,
                    gamma: it.collect(),
                }
            }
            2 => LemmaId::Bottom {
                gamma: params.into(),
            },
            3 => {
                let (d, d2) = pair(params)?;
                LemmaId::NegAnd { d, d2 }
            }
            4 => {
                let (s, s2) = pair(params)?;
                LemmaId::DnAnd { s, s2 }
            }
            5 => {
                let (d, d2) = pair(params)?;
                LemmaId::NegOr { d, d2 }
            }
            6 => {
                let (s, s2) = pair(params)?;
                LemmaId::DnOr { s, s2 }
            }
            7 => {
                let (s, b) = pair(params)?;
                LemmaId::NegImp { s, b }
            }
            8 => {
                let (s, b) = pair(params)?;
                LemmaId::Imp { s, b }
            }
            9 => {
                let (a, s) = pair(params)?;
                LemmaId::DnImp { a, s }
            }
            n => {
                return Err(ProofError::Precondition(format!(
                    "no lemma with index {n}; expected 1 to 9"
                )))
            }
        })
    }

    /// The instantiated schema.
    pub fn statement(&self) -> IntSequent {
        let one = |a: Formula, c: Formula| IntSequent::new(vec![a], c);
        match self {
            LemmaId::ExcludedMiddle { var, gamma } => IntSequent::new(
                gamma
                    .with(Formula::excluded_middle(var.clone()))
                    .with(nsn(var))
                    .with(ns(var)),
                Formula::Star,
            ),
            LemmaId::Bottom { gamma } => {
                IntSequent::new(gamma.with(nsn(&Formula::Bot)), Formula::Star)
            }
            LemmaId::NegAnd { d, d2 } => one(
                nsn(&Formula::and(d.clone(), d2.clone())),
                Formula::and(nsn(d), nsn(d2)),
            ),
            LemmaId::DnAnd { s, s2 } => one(
                Formula::and(nn(s), nn(s2)),
                nn(&Formula::and(s.clone(), s2.clone())),
            ),
            LemmaId::NegOr { d, d2 } => one(
                nsn(&Formula::or(d.clone(), d2.clone())),
                nn(&Formula::or(nsn(d), nsn(d2))),
            ),
            LemmaId::DnOr { s, s2 } => one(
                ns(&Formula::and(ns(s), ns(s2))),
                nn(&Formula::or(s.clone(), s2.clone())),
            ),
            LemmaId::NegImp { s, b } => one(
                nsn(&Formula::imp(s.clone(), b.clone())),
                Formula::imp(nn(s), nsn(b)),
            ),
            LemmaId::Imp { s, b } => one(Formula::imp(s.clone(), b.clone()), Formula::imp(nn(s), nn(b))),
            LemmaId::DnImp { a, s } => one(
                Formula::imp(nsn(a), nn(s)),
                nn(&Formula::imp(a.clone(), s.clone())),
            ),
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lemma {}: {}", self.index(), self.statement())
    }
}

/// A derivation of [`LemmaId::statement`].
pub fn build_lemma(lemma: &LemmaId) -> IntProof {
    let goal = lemma.statement();
    match lemma {
        LemmaId::ExcludedMiddle { var: p, .. } => {
            // Case on p | ~p; each side refutes the matching ¬*-hypothesis.
            lor(
                &goal,
                &Formula::excluded_middle(p.clone()),
                |g| limp(g, &ns(p), ax, ax),
                |g| limp(g, &nsn(p), id, ax),
            )
        }
        LemmaId::Bottom { .. } => limp(&goal, &nsn(&Formula::Bot), |g| rimp(g, lbot), ax),
        LemmaId::NegAnd { d, d2 } => {
            let conj = Formula::and(d.clone(), d2.clone());
            let h = nsn(&conj);
            let half = |x: &Formula| {
                let nx = not(x);
                let (h, conj) = (h.clone(), conj.clone());
                move |g: &IntSequent| {
                    rimp(g, |g| {
                        limp(
                            g,
                            &h,
                            |g| rimp(g, |g| land(g, &conj, |g| limp(g, &nx, id, lbot))),
                            ax,
                        )
                    })
                }
            };
            rand(&goal, half(d), half(d2))
        }
        LemmaId::DnAnd { s, s2 } => {
            let x = ns(&Formula::and(s.clone(), s2.clone()));
            let conj = Formula::and(nn(s), nn(s2));
            land(&goal, &conj, |g| {
                rimp(g, |g| {
                    limp(
                        g,
                        &nn(s),
                        |g| {
                            rimp(g, |g| {
                                limp(
                                    g,
                                    &nn(s2),
                                    |g| rimp(g, |g| limp(g, &x, |g| rand(g, id, id), ax)),
                                    ax,
                                )
                            })
                        },
                        ax,
                    )
                })
            })
        }
        LemmaId::NegOr { d, d2 } => {
            // Use ¬*E twice, once per disjunct of E, then refute ¬(D | D').
            let h = nsn(&Formula::or(d.clone(), d2.clone()));
            let e = Formula::or(nsn(d), nsn(d2));
            let ne = ns(&e);
            let disj = Formula::or(d.clone(), d2.clone());
            rimp(&goal, |g| {
                limp(
                    g,
                    &ne,
                    |g| {
                        ror2(g, |g| {
                            rimp(g, |g| {
                                limp(
                                    g,
                                    &ne,
                                    |g| {
                                        ror1(g, |g| {
                                            rimp(g, |g| {
                                                limp(
                                                    g,
                                                    &h,
                                                    |g| {
                                                        rimp(g, |g| {
                                                            lor(
                                                                g,
                                                                &disj,
                                                                |g| limp(g, &not(d), id, lbot),
                                                                |g| limp(g, &not(d2), id, lbot),
                                                            )
                                                        })
                                                    },
                                                    ax,
                                                )
                                            })
                                        })
                                    },
                                    ax,
                                )
                            })
                        })
                    },
                    ax,
                )
            })
        }
        LemmaId::DnOr { s, s2 } => {
            let h = ns(&Formula::and(ns(s), ns(s2)));
            let x = ns(&Formula::or(s.clone(), s2.clone()));
            rimp(&goal, |g| {
                limp(
                    g,
                    &h,
                    |g| {
                        rand(
                            g,
                            |g| rimp(g, |g| limp(g, &x, |g| ror1(g, id), ax)),
                            |g| rimp(g, |g| limp(g, &x, |g| ror2(g, id), ax)),
                        )
                    },
                    ax,
                )
            })
        }
        LemmaId::NegImp { s, b } => {
            let sb = Formula::imp(s.clone(), b.clone());
            let h = nsn(&sb);
            rimp(&goal, |g| {
                rimp(g, |g| {
                    limp(
                        g,
                        &nn(s),
                        |g| {
                            rimp(g, |g| {
                                limp(
                                    g,
                                    &h,
                                    |g| rimp(g, |g| limp(g, &not(b), |g| limp(g, &sb, id, id), lbot)),
                                    ax,
                                )
                            })
                        },
                        ax,
                    )
                })
            })
        }
        LemmaId::Imp { s, b } => {
            let sb = Formula::imp(s.clone(), b.clone());
            rimp(&goal, |g| {
                rimp(g, |g| {
                    limp(
                        g,
                        &nn(s),
                        |g| rimp(g, |g| limp(g, &ns(b), |g| limp(g, &sb, id, id), ax)),
                        ax,
                    )
                })
            })
        }
        LemmaId::DnImp { a, s } => {
            let h = Formula::imp(nsn(a), nn(s));
            let x = ns(&Formula::imp(a.clone(), s.clone()));
            rimp(&goal, |g| {
                limp(
                    g,
                    &h,
                    |g| rimp(g, |g| limp(g, &x, |g| rimp(g, |g| limp(g, &not(a), id, lbot)), ax)),
                    |g| {
                        limp(
                            g,
                            &nn(s),
                            |g| rimp(g, |g| limp(g, &x, |g| rimp(g, id), ax)),
                            ax,
                        )
                    },
                )
            })
        }
    }
}

/// Substitutes `c` for `*` throughout a derivation. Axioms on `*` become
/// identity derivations of `c`; every other node keeps its rule.
pub fn subst_star_proof(p: &IntProof, c: &Formula) -> IntProof {
    if *c == Formula::Star {
        return p.clone();
    }
    let conclusion = p.conclusion.subst_star(c);
    if p.rule == IntRule::Ax && p.principal.as_ref() == Some(&Formula::Star) {
        return identity_proof(c, &conclusion.ante.without(c).expect("substituted witness"));
    }
    IntProof {
        conclusion,
        rule: p.rule,
        principal: p.principal.as_ref().map(|f| f.subst_star(c)),
        cut_formula: p.cut_formula.as_ref().map(|f| f.subst_star(c)),
        premises: p.premises.iter().map(|q| subst_star_proof(q, c)).collect(),
    }
}
