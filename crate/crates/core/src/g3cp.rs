//! The classical multi-succedent calculus: proof trees, a checker, a
//! backtracking-free decision procedure and a truth-table oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CheckError;
use crate::formula::{ClassicalSequent, Formula, Multiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalRule {
    Ax,
    LBot,
    LAnd,
    RAnd,
    LOr,
    ROr,
    LImp,
    RImp,
}

impl ClassicalRule {
    pub const ALL: [ClassicalRule; 8] = [
        ClassicalRule::Ax,
        ClassicalRule::LBot,
        ClassicalRule::LAnd,
        ClassicalRule::RAnd,
        ClassicalRule::LOr,
        ClassicalRule::ROr,
        ClassicalRule::LImp,
        ClassicalRule::RImp,
    ];

    pub fn arity(self) -> usize {
        use ClassicalRule::*;
        match self {
            Ax | LBot => 0,
            LAnd | ROr | RImp => 1,
            RAnd | LOr | LImp => 2,
        }
    }

    pub fn name(self) -> &'static str {
        use ClassicalRule::*;
        match self {
            Ax => "Ax",
            LBot => "LBot",
            LAnd => "LAnd",
            RAnd => "RAnd",
            LOr => "LOr",
            ROr => "ROr",
            LImp => "LImp",
            RImp => "RImp",
        }
    }

    pub fn from_name(s: &str) -> Option<ClassicalRule> {
        ClassicalRule::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn is_left(self) -> bool {
        use ClassicalRule::*;
        matches!(self, Ax | LBot | LAnd | LOr | LImp)
    }
}

impl fmt::Display for ClassicalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation tree. `principal` is the decomposed formula; for `Ax` it is
/// the shared atom and for `LBot` it is `bot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalProof {
    pub conclusion: ClassicalSequent,
    pub rule: ClassicalRule,
    pub principal: Formula,
    pub premises: Vec<ClassicalProof>,
}

impl ClassicalProof {
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ClassicalProof::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.premises.iter().map(ClassicalProof::depth).max().map_or(0, |d| d + 1)
    }
}

/// The premise sequents a rule produces from `conclusion` when `principal`
/// is decomposed. `None` if the principal formula is absent or has the
/// wrong shape.
pub fn premises_of(
    conclusion: &ClassicalSequent,
    rule: ClassicalRule,
    principal: &Formula,
) -> Option<Vec<ClassicalSequent>> {
    use ClassicalRule::*;
    let left = |s: &ClassicalSequent| s.ante.without(principal);
    let right = |s: &ClassicalSequent| s.succ.without(principal);
    let seq = |ante: Multiset, succ: Multiset| ClassicalSequent { ante, succ };
    match (rule, principal) {
        (Ax, Formula::Atom(_)) => {
            (conclusion.ante.contains(principal) && conclusion.succ.contains(principal))
                .then(Vec::new)
        }
        (LBot, Formula::Bot) => conclusion.ante.contains(principal).then(Vec::new),
        (LAnd, Formula::And(a, b)) => {
            let g = left(conclusion)?;
            Some(vec![seq(
                g.with((**a).clone()).with((**b).clone()),
                conclusion.succ.clone(),
            )])
        }
        (RAnd, Formula::And(a, b)) => {
            let d = right(conclusion)?;
            Some(vec![
                seq(conclusion.ante.clone(), d.with((**a).clone())),
                seq(conclusion.ante.clone(), d.with((**b).clone())),
            ])
        }
        (LOr, Formula::Or(a, b)) => {
            let g = left(conclusion)?;
            Some(vec![
                seq(g.with((**a).clone()), conclusion.succ.clone()),
                seq(g.with((**b).clone()), conclusion.succ.clone()),
            ])
        }
        (ROr, Formula::Or(a, b)) => {
            let d = right(conclusion)?;
            Some(vec![seq(
                conclusion.ante.clone(),
                d.with((**a).clone()).with((**b).clone()),
            )])
        }
        (LImp, Formula::Imp(a, b)) => {
            let g = left(conclusion)?;
            Some(vec![
                seq(g.clone(), conclusion.succ.with((**a).clone())),
                seq(g.with((**b).clone()), conclusion.succ.clone()),
            ])
        }
        (RImp, Formula::Imp(a, b)) => {
            let d = right(conclusion)?;
            Some(vec![seq(
                conclusion.ante.with((**a).clone()),
                d.with((**b).clone()),
            )])
        }
        _ => None,
    }
}

/// Checks that every node instantiates its rule schema.
pub fn check_c(p: &ClassicalProof) -> Result<(), CheckError> {
    if p.premises.len() != p.rule.arity() {
        return Err(CheckError::new(format!(
            "{} expects {} premises, found {}",
            p.rule,
            p.rule.arity(),
            p.premises.len()
        )));
    }
    let expected = premises_of(&p.conclusion, p.rule, &p.principal).ok_or_else(|| {
        CheckError::new(match p.rule {
            ClassicalRule::Ax if !matches!(p.principal, Formula::Atom(_)) => format!(
                "Ax requires a propositional variable, found `{}`",
                p.principal
            ),
            _ => format!(
                "{} cannot decompose `{}` in `{}`",
                p.rule, p.principal, p.conclusion
            ),
        })
    })?;
    for (i, (prem, want)) in p.premises.iter().zip(&expected).enumerate() {
        if prem.conclusion != *want {
            return Err(CheckError::new(format!(
                "{} premise {i} should conclude `{want}`, found `{}`",
                p.rule, prem.conclusion
            )));
        }
        check_c(prem).map_err(|e| e.under(i))?;
    }
    Ok(())
}

/// An assignment of truth values to variable names. `*` is keyed as "*".
pub type Valuation = BTreeMap<String, bool>;

pub fn eval(f: &Formula, v: &Valuation) -> bool {
    match f {
        Formula::Atom(p) => v.get(&**p).copied().unwrap_or(false),
        Formula::Star => v.get("*").copied().unwrap_or(false),
        Formula::Bot => false,
        Formula::And(a, b) => eval(a, v) && eval(b, v),
        Formula::Or(a, b) => eval(a, v) || eval(b, v),
        Formula::Imp(a, b) => !eval(a, v) || eval(b, v),
    }
}

/// True iff `v` makes the whole antecedent true and every succedent false.
pub fn falsifies(s: &ClassicalSequent, v: &Valuation) -> bool {
    s.ante.iter().all(|f| eval(f, v)) && !s.succ.iter().any(|f| eval(f, v))
}

/// Truth-table validity, with `*` read as one more variable.
pub fn taut_oracle(s: &ClassicalSequent) -> bool {
    let mut names: Vec<String> = s.atoms().iter().map(|a| a.to_string()).collect();
    if s.contains_star() {
        names.push("*".into());
    }
    assert!(names.len() < 24, "too many variables for a truth table");
    (0u32..1 << names.len()).all(|bits| {
        let v: Valuation = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), bits >> i & 1 == 1))
            .collect();
        !falsifies(s, &v)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Proof(ClassicalProof),
    Countermodel(Valuation),
}

impl SearchOutcome {
    pub fn proof(self) -> Option<ClassicalProof> {
        match self {
            SearchOutcome::Proof(p) => Some(p),
            SearchOutcome::Countermodel(_) => None,
        }
    }

    pub fn is_proof(&self) -> bool {
        matches!(self, SearchOutcome::Proof(_))
    }
}

fn rule_for(f: &Formula, left: bool) -> ClassicalRule {
    use ClassicalRule::*;
    match (f, left) {
        (Formula::And(..), true) => LAnd,
        (Formula::And(..), false) => RAnd,
        (Formula::Or(..), true) => LOr,
        (Formula::Or(..), false) => ROr,
        (Formula::Imp(..), true) => LImp,
        (Formula::Imp(..), false) => RImp,
        _ => unreachable!("atomic formulas have no logical rule"),
    }
}

// Err carries the atoms true at a failed leaf.
fn search(s: &ClassicalSequent) -> Result<ClassicalProof, Vec<Formula>> {
    let leaf = |rule, principal| ClassicalProof {
        conclusion: s.clone(),
        rule,
        principal,
        premises: Vec::new(),
    };
    if let Some(p) = s
        .ante
        .iter()
        .find(|f| matches!(f, Formula::Atom(_)) && s.succ.contains(f))
    {
        return Ok(leaf(ClassicalRule::Ax, p.clone()));
    }
    if s.ante.contains(&Formula::Bot) {
        return Ok(leaf(ClassicalRule::LBot, Formula::Bot));
    }
    let pick = s
        .ante
        .iter()
        .find(|f| !f.is_atomic())
        .map(|f| (f, true))
        .or_else(|| s.succ.iter().find(|f| !f.is_atomic()).map(|f| (f, false)));
    let Some((principal, left)) = pick else {
        return Err(s.ante.iter().cloned().collect());
    };
    let rule = rule_for(principal, left);
    let subgoals = premises_of(s, rule, principal).expect("principal is present");
    let mut premises = Vec::with_capacity(subgoals.len());
    for g in &subgoals {
        debug_assert!(g.weight() < s.weight(), "rule application must shrink the sequent");
        premises.push(search(g)?);
    }
    Ok(ClassicalProof {
        conclusion: s.clone(),
        rule,
        principal: principal.clone(),
        premises,
    })
}

/// Decides a sequent by decomposing the leftmost compound formula,
/// antecedent first. Every rule is invertible, so no backtracking is
/// needed; a failed branch yields a falsifying valuation of the root.
///
/// The sequent must not contain `*`.
pub fn search_c(s: &ClassicalSequent) -> SearchOutcome {
    assert!(!s.contains_star(), "search_c expects a sequent without `*`");
    match search(s) {
        Ok(p) => SearchOutcome::Proof(p),
        Err(true_atoms) => {
            let mut v: Valuation = s.atoms().iter().map(|a| (a.to_string(), false)).collect();
            for a in true_atoms {
                if let Formula::Atom(n) = a {
                    v.insert(n.to_string(), true);
                }
            }
            SearchOutcome::Countermodel(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_classical_sequent;

    fn seq(s: &str) -> ClassicalSequent {
        parse_classical_sequent(s).unwrap()
    }

    fn atom(s: &str) -> Formula {
        Formula::atom(s)
    }

    #[test]
    fn axiom_with_context() {
        let p = ClassicalProof {
            conclusion: seq("p, q => q, p"),
            rule: ClassicalRule::Ax,
            principal: atom("p"),
            premises: vec![],
        };
        assert!(check_c(&p).is_ok());
    }

    #[test]
    fn right_implication() {
        let leaf = ClassicalProof {
            conclusion: seq("p => p"),
            rule: ClassicalRule::Ax,
            principal: atom("p"),
            premises: vec![],
        };
        let p = ClassicalProof {
            conclusion: seq("=> p -> p"),
            rule: ClassicalRule::RImp,
            principal: Formula::imp(atom("p"), atom("p")),
            premises: vec![leaf],
        };
        assert!(check_c(&p).is_ok());
    }

    #[test]
    fn compound_axiom_rejected() {
        let pq = Formula::and(atom("p"), atom("q"));
        let p = ClassicalProof {
            conclusion: seq("p & q => p & q"),
            rule: ClassicalRule::Ax,
            principal: pq,
            premises: vec![],
        };
        let e = check_c(&p).unwrap_err();
        assert!(e.message.contains("propositional variable"), "{e}");
    }

    #[test]
    fn bad_premise_reports_path() {
        let bad_leaf = ClassicalProof {
            conclusion: seq("p => q"),
            rule: ClassicalRule::Ax,
            principal: atom("p"),
            premises: vec![],
        };
        let p = ClassicalProof {
            conclusion: seq("=> p -> q"),
            rule: ClassicalRule::RImp,
            principal: Formula::imp(atom("p"), atom("q")),
            premises: vec![bad_leaf],
        };
        let e = check_c(&p).unwrap_err();
        assert_eq!(e.path, vec![0]);
    }

    #[test]
    fn search_examples() {
        for s in ["(p->q)->p => p", "p -> q | r => (p->q) | (p->r)", "=> p | ~p"] {
            let out = search_c(&seq(s));
            let p = out.proof().unwrap_or_else(|| panic!("{s} should be provable"));
            check_c(&p).unwrap();
        }
        match search_c(&seq("p => q")) {
            SearchOutcome::Countermodel(v) => {
                assert_eq!(v, Valuation::from([("p".into(), true), ("q".into(), false)]))
            }
            SearchOutcome::Proof(_) => panic!("p => q is not valid"),
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(taut_oracle(&seq("=> p | ~p")));
        assert!(!taut_oracle(&seq("p => q")));
        assert!(taut_oracle(&seq("(p->q)->p => p")));
        assert!(taut_oracle(&seq("bot =>")));
        assert!(!taut_oracle(&seq("=>")));
    }
}
