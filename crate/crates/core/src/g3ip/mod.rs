//! The intuitionistic single-succedent calculus, optionally extended with
//! explicit weakening (`LW`), contraction (`LC`) and `Cut` nodes.

mod admissible;
mod decide;
pub(crate) mod tactic;

use std::fmt;

use crate::error::{CheckError, ProofError};
use crate::formula::{Formula, IntSequent, Multiset};

pub use admissible::{contract, cut, cut_shared, eliminate_structural, lc, lw, weaken};
pub use decide::{decide_i, search_i};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntRule {
    Ax,
    LBot,
    LAnd,
    RAnd,
    LOr,
    ROr1,
    ROr2,
    LImp,
    RImp,
    LW,
    LC,
    Cut,
}

impl IntRule {
    pub const ALL: [IntRule; 12] = [
        IntRule::Ax,
        IntRule::LBot,
        IntRule::LAnd,
        IntRule::RAnd,
        IntRule::LOr,
        IntRule::ROr1,
        IntRule::ROr2,
        IntRule::LImp,
        IntRule::RImp,
        IntRule::LW,
        IntRule::LC,
        IntRule::Cut,
    ];

    pub fn arity(self) -> usize {
        use IntRule::*;
        match self {
            Ax | LBot => 0,
            LAnd | ROr1 | ROr2 | RImp | LW | LC => 1,
            RAnd | LOr | LImp | Cut => 2,
        }
    }

    pub fn is_structural(self) -> bool {
        matches!(self, IntRule::LW | IntRule::LC | IntRule::Cut)
    }

    pub fn is_left(self) -> bool {
        use IntRule::*;
        matches!(self, LAnd | LOr | LImp)
    }

    pub fn is_right(self) -> bool {
        use IntRule::*;
        matches!(self, RAnd | ROr1 | ROr2 | RImp)
    }

    pub fn name(self) -> &'static str {
        use IntRule::*;
        match self {
            Ax => "Ax",
            LBot => "LBot",
            LAnd => "LAnd",
            RAnd => "RAnd",
            LOr => "LOr",
            ROr1 => "ROr1",
            ROr2 => "ROr2",
            LImp => "LImp",
            RImp => "RImp",
            LW => "LW",
            LC => "LC",
            Cut => "Cut",
        }
    }

    pub fn from_name(s: &str) -> Option<IntRule> {
        IntRule::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for IntRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation tree node.
///
/// `principal` holds the decomposed formula for logical rules, the witness
/// letter for `Ax`, `bot` for `LBot` and the contracted formula for `LC`.
/// `cut_formula` is set only on `Cut`. `LW` carries neither; the added
/// formulas are the difference between conclusion and premise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntProof {
    pub conclusion: IntSequent,
    pub rule: IntRule,
    pub principal: Option<Formula>,
    pub cut_formula: Option<Formula>,
    pub premises: Vec<IntProof>,
}

impl IntProof {
    pub fn node(
        conclusion: IntSequent,
        rule: IntRule,
        principal: Option<Formula>,
        premises: Vec<IntProof>,
    ) -> IntProof {
        IntProof {
            conclusion,
            rule,
            principal,
            cut_formula: None,
            premises,
        }
    }

    pub fn ante(&self) -> &Multiset {
        &self.conclusion.ante
    }

    pub fn succ(&self) -> &Formula {
        &self.conclusion.succ
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(IntProof::size).sum::<usize>()
    }

    /// Height of the tree; a leaf has depth 0.
    pub fn depth(&self) -> usize {
        self.premises.iter().map(IntProof::depth).max().map_or(0, |d| d + 1)
    }

    /// No `LW`, `LC` or `Cut` node anywhere.
    pub fn is_pure(&self) -> bool {
        !self.rule.is_structural() && self.premises.iter().all(IntProof::is_pure)
    }

    pub fn count_rule(&self, rule: IntRule) -> usize {
        usize::from(self.rule == rule)
            + self.premises.iter().map(|p| p.count_rule(rule)).sum::<usize>()
    }

    pub fn contains_star(&self) -> bool {
        self.conclusion.ante.contains_star()
            || self.conclusion.succ.contains_star()
            || self.premises.iter().any(IntProof::contains_star)
    }
}

/// Premise sequents of a logical rule applied backwards to `conclusion`
/// with principal formula `principal`. `None` if the rule does not apply.
pub fn int_premises_of(
    conclusion: &IntSequent,
    rule: IntRule,
    principal: &Formula,
) -> Option<Vec<IntSequent>> {
    use IntRule::*;
    let c = &conclusion.succ;
    let seq = |ante: Multiset, succ: &Formula| IntSequent::new(ante, succ.clone());
    let rest = || conclusion.ante.without(principal);
    match (rule, principal) {
        (Ax, p) if p.is_letter() => (conclusion.ante.contains(p) && c == p).then(Vec::new),
        (LBot, Formula::Bot) => conclusion.ante.contains(principal).then(Vec::new),
        (LAnd, Formula::And(a, b)) => {
            let g = rest()?;
            Some(vec![seq(g.with((**a).clone()).with((**b).clone()), c)])
        }
        (LOr, Formula::Or(a, b)) => {
            let g = rest()?;
            Some(vec![
                seq(g.with((**a).clone()), c),
                seq(g.with((**b).clone()), c),
            ])
        }
        (LImp, Formula::Imp(a, b)) => {
            let g = rest()?;
            Some(vec![
                seq(conclusion.ante.clone(), a),
                seq(g.with((**b).clone()), c),
            ])
        }
        (RAnd, Formula::And(a, b)) if c == principal => Some(vec![
            seq(conclusion.ante.clone(), a),
            seq(conclusion.ante.clone(), b),
        ]),
        (ROr1, Formula::Or(a, _)) if c == principal => Some(vec![seq(conclusion.ante.clone(), a)]),
        (ROr2, Formula::Or(_, b)) if c == principal => Some(vec![seq(conclusion.ante.clone(), b)]),
        (RImp, Formula::Imp(a, b)) if c == principal => {
            Some(vec![seq(conclusion.ante.with((**a).clone()), b)])
        }
        _ => None,
    }
}

fn check_node(p: &IntProof, allow_structural: bool) -> Result<(), CheckError> {
    if p.rule.is_structural() && !allow_structural {
        return Err(CheckError::new(format!(
            "structural rule present: {}",
            p.rule
        )));
    }
    if p.premises.len() != p.rule.arity() {
        return Err(CheckError::new(format!(
            "{} expects {} premises, found {}",
            p.rule,
            p.rule.arity(),
            p.premises.len()
        )));
    }
    if p.rule != IntRule::Cut && p.cut_formula.is_some() {
        return Err(CheckError::new(format!("{} carries a cut formula", p.rule)));
    }
    let concl = &p.conclusion;
    match p.rule {
        IntRule::LW => {
            let prem = &p.premises[0].conclusion;
            if prem.succ != concl.succ || !prem.ante.is_submultiset(&concl.ante) {
                return Err(CheckError::new(format!(
                    "LW cannot derive `{concl}` from `{prem}`"
                )));
            }
        }
        IntRule::LC => {
            let a = p
                .principal
                .as_ref()
                .ok_or_else(|| CheckError::new("LC without a contracted formula"))?;
            let prem = &p.premises[0].conclusion;
            if !concl.ante.contains(a) || prem.ante != concl.ante.with(a.clone()) || prem.succ != concl.succ {
                return Err(CheckError::new(format!(
                    "LC on `{a}` cannot derive `{concl}` from `{prem}`"
                )));
            }
        }
        IntRule::Cut => {
            let a = p
                .cut_formula
                .as_ref()
                .ok_or_else(|| CheckError::new("Cut without a cut formula"))?;
            let (l, r) = (&p.premises[0].conclusion, &p.premises[1].conclusion);
            let ok = l.succ == *a
                && r.succ == concl.succ
                && r
                    .ante
                    .without(a)
                    .is_some_and(|rest| l.ante.sum(&rest) == concl.ante);
            if !ok {
                return Err(CheckError::new(format!(
                    "Cut on `{a}` cannot derive `{concl}` from `{l}` and `{r}`"
                )));
            }
        }
        rule => {
            let principal = p
                .principal
                .as_ref()
                .ok_or_else(|| CheckError::new(format!("{rule} without a principal formula")))?;
            let expected = int_premises_of(concl, rule, principal).ok_or_else(|| {
                CheckError::new(match rule {
                    IntRule::Ax if !principal.is_letter() => format!(
                        "Ax requires a propositional variable or `*`, found `{principal}`"
                    ),
                    _ => format!("{rule} cannot decompose `{principal}` in `{concl}`"),
                })
            })?;
            for (i, (prem, want)) in p.premises.iter().zip(&expected).enumerate() {
                if prem.conclusion != *want {
                    return Err(CheckError::new(format!(
                        "{rule} premise {i} should conclude `{want}`, found `{}`",
                        prem.conclusion
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks every node against its schema. With `allow_structural` false any
/// `LW`, `LC` or `Cut` node is rejected.
pub fn check_i(p: &IntProof, allow_structural: bool) -> Result<(), CheckError> {
    check_node(p, allow_structural)?;
    for (i, prem) in p.premises.iter().enumerate() {
        check_i(prem, allow_structural).map_err(|e| e.under(i))?;
    }
    Ok(())
}

/// A pure proof of `A, Γ ⇒ A`, by expansion on the shape of `A`.
pub fn identity_proof(a: &Formula, gamma: &Multiset) -> IntProof {
    tactic::id(&IntSequent::new(gamma.with(a.clone()), a.clone()))
}

/// Logical rule applied forwards: builds the node after checking that the
/// premises are exactly what the rule requires for `conclusion`.
pub fn apply_rule(
    conclusion: IntSequent,
    rule: IntRule,
    principal: Formula,
    premises: Vec<IntProof>,
) -> Result<IntProof, ProofError> {
    let node = IntProof::node(conclusion, rule, Some(principal), premises);
    check_node(&node, false).map_err(|e| ProofError::Shape(e.message))?;
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_int_sequent};

    fn seq(s: &str) -> IntSequent {
        parse_int_sequent(s).unwrap()
    }

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn leaf(s: &str, rule: IntRule, principal: &str) -> IntProof {
        IntProof::node(seq(s), rule, Some(f(principal)), vec![])
    }

    #[test]
    fn axiom_with_context() {
        check_i(&leaf("p, q => p", IntRule::Ax, "p"), false).unwrap();
        let e = check_i(&leaf("p & q => p & q", IntRule::Ax, "p & q"), false).unwrap_err();
        assert!(e.message.contains("propositional variable"));
    }

    #[test]
    fn left_implication_keeps_principal() {
        let p = IntProof::node(
            seq("p->q, p => q"),
            IntRule::LImp,
            Some(f("p -> q")),
            vec![leaf("p->q, p => p", IntRule::Ax, "p"), leaf("q, p => q", IntRule::Ax, "q")],
        );
        check_i(&p, false).unwrap();
        let wrong = IntProof::node(
            seq("p->q, p => q"),
            IntRule::LImp,
            Some(f("p -> q")),
            vec![leaf("p => p", IntRule::Ax, "p"), leaf("q, p => q", IntRule::Ax, "q")],
        );
        assert_eq!(check_i(&wrong, false).unwrap_err().path, Vec::<usize>::new());
    }

    #[test]
    fn right_disjunction_sides() {
        let p = IntProof::node(
            seq("q => p | q"),
            IntRule::ROr1,
            Some(f("p | q")),
            vec![leaf("q => q", IntRule::Ax, "q")],
        );
        assert!(check_i(&p, false).is_err());
        let p = IntProof { rule: IntRule::ROr2, ..p };
        check_i(&p, false).unwrap();
    }

    #[test]
    fn structural_nodes_need_permission() {
        let base = leaf("p => p", IntRule::Ax, "p");
        let w = lw(base, &vec![f("q")].into());
        check_i(&w, true).unwrap();
        let e = check_i(&w, false).unwrap_err();
        assert!(e.message.contains("structural rule present"));
    }

    #[test]
    fn identity_examples() {
        let p = identity_proof(&f("p"), &Multiset::new());
        assert_eq!(p, leaf("p => p", IntRule::Ax, "p"));
        let p = identity_proof(&f("p & q"), &Multiset::new());
        assert_eq!(p.conclusion, seq("p & q => p & q"));
        check_i(&p, false).unwrap();
        let p = identity_proof(&Formula::Bot, &vec![f("r")].into());
        assert_eq!(p, leaf("bot, r => bot", IntRule::LBot, "bot"));
        for s in ["(p -> q) -> r | ~p", "(p | q) & (q -> bot)", "((p -> q) -> p) -> p"] {
            let p = identity_proof(&f(s), &vec![f("r")].into());
            check_i(&p, false).unwrap();
        }
    }
}
