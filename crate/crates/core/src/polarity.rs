//! Polarity of variable occurrences and the excluded-middle set.
//!
//! For a formula `A`, `vpos(A)` and `vneg(A)` are the variables occurring
//! positively and negatively, and `vpos_ns(A)` those occurring non-strictly
//! positively (positively, but inside the antecedent of some implication).
//! The placeholder `*` and `bot` contribute nothing.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::formula::{Formula, Multiset};

/// A finite set of variable names, iterated in sorted order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VarSet(BTreeSet<Arc<str>>);

impl VarSet {
    pub fn new() -> VarSet {
        VarSet::default()
    }

    pub fn singleton(name: &str) -> VarSet {
        let mut s = VarSet::new();
        s.insert(name);
        s
    }

    pub fn insert(&mut self, name: &str) {
        self.0.insert(name.into());
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|s| &**s)
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        VarSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.0.is_subset(&other.0)
    }

    fn extend(&mut self, other: &VarSet) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.iter().map(str::to_owned).collect()
    }
}

impl<S: AsRef<str>> FromIterator<S> for VarSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        VarSet(iter.into_iter().map(|s| Arc::from(s.as_ref())).collect())
    }
}

impl From<BTreeSet<Arc<str>>> for VarSet {
    fn from(s: BTreeSet<Arc<str>>) -> Self {
        VarSet(s)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct PolarityReport {
    pub vpos: VarSet,
    pub vneg: VarSet,
    pub vpos_ns: VarSet,
}

impl PolarityReport {
    fn merge(&mut self, other: &PolarityReport) {
        self.vpos.extend(&other.vpos);
        self.vneg.extend(&other.vneg);
        self.vpos_ns.extend(&other.vpos_ns);
    }
}

/// The three occurrence sets, computed by one simultaneous recursion.
pub fn polarity(f: &Formula) -> PolarityReport {
    match f {
        Formula::Atom(p) => PolarityReport {
            vpos: VarSet(BTreeSet::from([p.clone()])),
            ..Default::default()
        },
        Formula::Star | Formula::Bot => PolarityReport::default(),
        Formula::And(a, b) | Formula::Or(a, b) => {
            let mut r = polarity(a);
            r.merge(&polarity(b));
            r
        }
        Formula::Imp(a, b) => {
            let ra = polarity(a);
            let rb = polarity(b);
            PolarityReport {
                vpos: ra.vneg.union(&rb.vpos),
                vneg: ra.vpos.union(&rb.vneg),
                vpos_ns: ra.vneg.union(&rb.vpos_ns),
            }
        }
    }
}

pub fn polarity_multiset<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> PolarityReport {
    let mut r = PolarityReport::default();
    for f in fs {
        r.merge(&polarity(f));
    }
    r
}

/// `(vneg(Γ) ∪ vpos(A)) ∩ (vpos_ns(Γ) ∪ vneg(A))`: the variables whose
/// excluded middle suffices to move `Γ ⇒ A` from classical to
/// intuitionistic derivability.
pub fn em_set(gamma: &Multiset, a: &Formula) -> VarSet {
    let g = polarity_multiset(gamma);
    let r = polarity(a);
    g.vneg.union(&r.vpos).intersection(&g.vpos_ns.union(&r.vneg))
}

/// `(vneg(Γ, Δ) ∪ vpos(Σ)) ∩ (vpos_ns(Γ) ∪ vpos(Δ) ∪ vneg(Σ))` for a
/// sequent `Γ, Δ ⇒ Σ` whose antecedent is split into `Γ` and `Δ`.
pub fn em_set_general(gamma: &Multiset, delta: &Multiset, sigma: &Multiset) -> VarSet {
    let g = polarity_multiset(gamma);
    let d = polarity_multiset(delta);
    let s = polarity_multiset(sigma);
    let left = g.vneg.union(&d.vneg).union(&s.vpos);
    let right = g.vpos_ns.union(&d.vpos).union(&s.vneg);
    left.intersection(&right)
}

/// `{ p | ~p : p ∈ V }`, in variable-name order.
pub fn pi(v: &VarSet) -> Vec<Formula> {
    v.iter()
        .map(|p| Formula::excluded_middle(Formula::atom(p)))
        .collect()
}

pub fn pi_multiset(v: &VarSet) -> Multiset {
    pi(v).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, render, Style};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn vs(names: &[&str]) -> VarSet {
        names.iter().collect()
    }

    fn ms(items: &[&str]) -> Multiset {
        items.iter().map(|s| f(s)).collect()
    }

    #[test]
    fn leaves() {
        let r = polarity(&f("p"));
        assert_eq!((r.vpos, r.vneg, r.vpos_ns), (vs(&["p"]), vs(&[]), vs(&[])));
        assert_eq!(polarity(&Formula::Bot), PolarityReport::default());
        assert_eq!(polarity(&Formula::Star), PolarityReport::default());
    }

    #[test]
    fn peirce_antecedent() {
        let r = polarity(&f("(p->q)->p"));
        assert_eq!(r.vpos, vs(&["p"]));
        assert_eq!(r.vneg, vs(&["q"]));
        assert_eq!(r.vpos_ns, vs(&["p"]));
    }

    #[test]
    fn multisets() {
        assert_eq!(polarity_multiset(&ms(&[])), PolarityReport::default());
        let r = polarity_multiset(&ms(&["p", "~q"]));
        assert_eq!((r.vpos, r.vneg, r.vpos_ns), (vs(&["p"]), vs(&["q"]), vs(&[])));
        assert_eq!(polarity_multiset(&ms(&["p", "p"])).vpos, vs(&["p"]));
    }

    #[test]
    fn em_set_examples() {
        assert_eq!(em_set(&ms(&["(p->q)->p"]), &f("p")), vs(&["p"]));
        assert_eq!(em_set(&ms(&["p->q|r"]), &f("(p->q)|(p->r)")), vs(&["p"]));
        assert_eq!(em_set(&ms(&[]), &f("bot->p")), vs(&[]));
    }

    #[test]
    fn em_set_general_examples() {
        assert_eq!(em_set_general(&ms(&[]), &ms(&[]), &ms(&["p"])), vs(&[]));
        assert_eq!(em_set_general(&ms(&[]), &ms(&["p"]), &ms(&["p"])), vs(&["p"]));
        assert_eq!(
            em_set_general(&ms(&["(p->q)->p"]), &ms(&[]), &ms(&["p"])),
            vs(&["p"])
        );
    }

    #[test]
    fn pi_examples() {
        assert!(pi(&vs(&[])).is_empty());
        let r: Vec<String> = pi(&vs(&["q", "p"]))
            .iter()
            .map(|f| render(f, Style::Ascii))
            .collect();
        assert_eq!(r, ["p | ~p", "q | ~q"]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb() -> impl Strategy<Value = Formula> {
            let leaf = prop_oneof![
                Just(Formula::atom("p")),
                Just(Formula::atom("q")),
                Just(Formula::atom("r")),
                Just(Formula::Bot),
                Just(Formula::Star),
            ];
            leaf.prop_recursive(5, 32, 2, |inner| {
                prop_oneof![
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                    (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
                ]
            })
        }

        proptest! {
            #[test]
            fn ns_positive_is_positive(a in arb()) {
                let r = polarity(&a);
                prop_assert!(r.vpos_ns.is_subset(&r.vpos));
            }

            #[test]
            fn em_set_is_general_case(g in proptest::collection::vec(arb(), 0..3), a in arb()) {
                let gamma: Multiset = g.into();
                prop_assert_eq!(
                    em_set(&gamma, &a),
                    em_set_general(&gamma, &Multiset::new(), &vec![a.clone()].into())
                );
            }
        }
    }
}
