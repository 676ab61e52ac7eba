//! Propositional formulas, multiset contexts and sequents.
//!
//! Formulas are built from atoms, the placeholder letter `*`, `bot` and the
//! binary connectives `&`, `|`, `->`. Negation is not a constructor: `~A` is
//! stored as `A -> bot`.

mod parse;
mod render;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use parse::{
    parse, parse_classical_sequent, parse_formula, parse_int_sequent, ParseError, ParseErrorKind,
    Parsed, Parser,
};
pub use render::{render, render_classical, render_sequent, Style};

// Equality is structural (pointer equality is only a shortcut), so the
// derived hash agrees with it.
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, Hash)]
pub enum Formula {
    /// Propositional variable. The name is never `*`.
    Atom(Arc<str>),
    /// The placeholder letter `*`.
    Star,
    Bot,
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
}

use Formula::*;

// Subformulas are shared, so equal children are often the same allocation.
fn same(x: &Arc<Formula>, y: &Arc<Formula>) -> bool {
    Arc::ptr_eq(x, y) || **x == **y
}

fn order(x: &Arc<Formula>, y: &Arc<Formula>) -> Ordering {
    if Arc::ptr_eq(x, y) {
        Ordering::Equal
    } else {
        (**x).cmp(&**y)
    }
}

impl Formula {
    fn rank(&self) -> u8 {
        match self {
            Atom(_) => 0,
            Star => 1,
            Bot => 2,
            And(..) => 3,
            Or(..) => 4,
            Imp(..) => 5,
        }
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Formula) -> bool {
        match (self, other) {
            (Atom(a), Atom(b)) => a == b,
            (Star, Star) | (Bot, Bot) => true,
            (And(a, b), And(c, d)) | (Or(a, b), Or(c, d)) | (Imp(a, b), Imp(c, d)) => {
                same(a, c) && same(b, d)
            }
            _ => false,
        }
    }
}

impl Eq for Formula {}

impl Ord for Formula {
    fn cmp(&self, other: &Formula) -> Ordering {
        match (self, other) {
            (Atom(a), Atom(b)) => a.cmp(b),
            (And(a, b), And(c, d)) | (Or(a, b), Or(c, d)) | (Imp(a, b), Imp(c, d)) => {
                order(a, c).then_with(|| order(b, d))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Formula) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Formula {
    /// Panics on an empty name or on `*`; use the parser for untrusted input.
    pub fn atom(name: &str) -> Formula {
        assert!(
            !name.is_empty() && name != "*",
            "invalid atom name {name:?}"
        );
        Atom(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Or(Arc::new(a), Arc::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Imp(Arc::new(a), Arc::new(b))
    }

    /// `~A`, i.e. `A -> bot`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Bot)
    }

    /// `A -> *`.
    pub fn not_star(a: Formula) -> Formula {
        Formula::imp(a, Star)
    }

    /// `(A -> *) -> *`.
    pub fn dn_star(a: Formula) -> Formula {
        Formula::not_star(Formula::not_star(a))
    }

    /// `(A -> bot) -> *`.
    pub fn not_star_not(a: Formula) -> Formula {
        Formula::not_star(Formula::not(a))
    }

    /// `p | ~p`.
    pub fn excluded_middle(p: Formula) -> Formula {
        Formula::or(p.clone(), Formula::not(p))
    }

    /// Atoms, `*` and `bot`.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Atom(_) | Star | Bot)
    }

    /// A letter that may witness an intuitionistic axiom: an atom or `*`.
    pub fn is_letter(&self) -> bool {
        matches!(self, Atom(_) | Star)
    }

    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Size of the formula tree: leaves weigh 1, each connective adds 1.
    pub fn weight(&self) -> usize {
        match self {
            Atom(_) | Star | Bot => 1,
            And(a, b) | Or(a, b) | Imp(a, b) => 1 + a.weight() + b.weight(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Atom(_) | Star | Bot => 0,
            And(a, b) | Or(a, b) | Imp(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn contains_star(&self) -> bool {
        match self {
            Star => true,
            Atom(_) | Bot => false,
            And(a, b) | Or(a, b) | Imp(a, b) => a.contains_star() || b.contains_star(),
        }
    }

    /// Replaces every occurrence of `*` with `c`.
    pub fn subst_star(&self, c: &Formula) -> Formula {
        self.subst_changed(c).unwrap_or_else(|| self.clone())
    }

    /// `None` when the formula has no `*`, so unchanged subtrees stay shared.
    fn subst_changed(&self, c: &Formula) -> Option<Formula> {
        let pair = |a: &Arc<Formula>, b: &Arc<Formula>| match (a.subst_changed(c), b.subst_changed(c)) {
            (None, None) => None,
            (x, y) => Some((
                x.map_or_else(|| a.clone(), Arc::new),
                y.map_or_else(|| b.clone(), Arc::new),
            )),
        };
        match self {
            Star => Some(c.clone()),
            Atom(_) | Bot => None,
            And(a, b) => pair(a, b).map(|(a, b)| And(a, b)),
            Or(a, b) => pair(a, b).map(|(a, b)| Or(a, b)),
            Imp(a, b) => pair(a, b).map(|(a, b)| Imp(a, b)),
        }
    }

    /// Names of the propositional variables occurring in the formula.
    pub fn atoms(&self) -> std::collections::BTreeSet<Arc<str>> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut std::collections::BTreeSet<Arc<str>>) {
        match self {
            Atom(p) => {
                out.insert(p.clone());
            }
            Star | Bot => {}
            And(a, b) | Or(a, b) | Imp(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Style::Ascii))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// A finite multiset of formulas.
///
/// Elements are kept sorted, so derived equality and hashing are multiset
/// equality and hashing.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset(Vec<Formula>);

impl Multiset {
    pub fn new() -> Multiset {
        Multiset(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Formula] {
        &self.0
    }

    pub fn insert(&mut self, f: Formula) {
        let at = match self.0.binary_search(&f) {
            Ok(i) | Err(i) => i,
        };
        self.0.insert(at, f);
    }

    pub fn with(&self, f: Formula) -> Multiset {
        let mut m = self.clone();
        m.insert(f);
        m
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.binary_search(f).is_ok()
    }

    pub fn count(&self, f: &Formula) -> usize {
        self.0.iter().filter(|g| *g == f).count()
    }

    /// Removes one occurrence of `f`; returns false if there was none.
    pub fn remove_one(&mut self, f: &Formula) -> bool {
        match self.0.binary_search(f) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    /// A copy with one occurrence of `f` removed.
    pub fn without(&self, f: &Formula) -> Option<Multiset> {
        let mut m = self.clone();
        m.remove_one(f).then_some(m)
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Multiset) -> Multiset {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        Multiset(v)
    }

    /// Multiset difference `self - other`, or `None` unless `other` is a
    /// sub-multiset of `self`.
    pub fn minus(&self, other: &Multiset) -> Option<Multiset> {
        let mut m = self.clone();
        for f in other.iter() {
            if !m.remove_one(f) {
                return None;
            }
        }
        Some(m)
    }

    pub fn is_submultiset(&self, other: &Multiset) -> bool {
        other.minus(self).is_some()
    }

    pub fn map(&self, f: impl FnMut(&Formula) -> Formula) -> Multiset {
        self.0.iter().map(f).collect()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Formula::weight).sum()
    }

    pub fn contains_star(&self) -> bool {
        self.0.iter().any(Formula::contains_star)
    }

    /// Elements in serialization order: sorted by rendered ASCII text.
    pub fn rendered_sorted(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.iter().map(|f| render(f, Style::Ascii)).collect();
        v.sort();
        v
    }
}

impl FromIterator<Formula> for Multiset {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut v: Vec<Formula> = iter.into_iter().collect();
        v.sort();
        Multiset(v)
    }
}

impl From<Vec<Formula>> for Multiset {
    fn from(v: Vec<Formula>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a Multiset {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for Multiset {
    type Item = Formula;
    type IntoIter = std::vec::IntoIter<Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.rendered_sorted().join(", "))
    }
}

/// `Γ ⇒ Δ` with multisets on both sides.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassicalSequent {
    pub ante: Multiset,
    pub succ: Multiset,
}

impl ClassicalSequent {
    pub fn new(ante: impl Into<Multiset>, succ: impl Into<Multiset>) -> Self {
        ClassicalSequent {
            ante: ante.into(),
            succ: succ.into(),
        }
    }

    pub fn weight(&self) -> usize {
        self.ante.weight() + self.succ.weight()
    }

    pub fn contains_star(&self) -> bool {
        self.ante.contains_star() || self.succ.contains_star()
    }

    /// The intuitionistic reading, defined when the succedent is a singleton.
    pub fn to_intuitionistic(&self) -> Option<IntSequent> {
        match self.succ.as_slice() {
            [a] => Some(IntSequent::new(self.ante.clone(), a.clone())),
            _ => None,
        }
    }

    pub fn atoms(&self) -> std::collections::BTreeSet<Arc<str>> {
        let mut out = std::collections::BTreeSet::new();
        for f in self.ante.iter().chain(self.succ.iter()) {
            f.collect_atoms(&mut out);
        }
        out
    }
}

impl fmt::Display for ClassicalSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_classical(self, Style::Ascii))
    }
}

/// `Γ ⇒ A` with a single succedent formula.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntSequent {
    pub ante: Multiset,
    pub succ: Formula,
}

impl IntSequent {
    pub fn new(ante: impl Into<Multiset>, succ: Formula) -> Self {
        IntSequent {
            ante: ante.into(),
            succ,
        }
    }

    pub fn weight(&self) -> usize {
        self.ante.weight() + self.succ.weight()
    }

    pub fn subst_star(&self, c: &Formula) -> IntSequent {
        IntSequent {
            ante: self.ante.map(|f| f.subst_star(c)),
            succ: self.succ.subst_star(c),
        }
    }

    pub fn to_classical(&self) -> ClassicalSequent {
        ClassicalSequent::new(self.ante.clone(), vec![self.succ.clone()])
    }
}

impl fmt::Display for IntSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sequent(self, Style::Ascii))
    }
}
