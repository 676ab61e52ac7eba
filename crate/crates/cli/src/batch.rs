//! Runs the whole pipeline over an enumerated domain.

use decvar_core::g3cp::{search_c, SearchOutcome};
use decvar_core::g3ip::{check_i, decide_i};
use decvar_core::polarity::{em_set, pi_multiset};
use decvar_core::translate::translate_theorem;
use decvar_core::{ClassicalSequent, IntSequent};
use serde::Serialize;

use crate::enumerate::{enumerate, EnumError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchRow {
    pub sequent: String,
    pub valid: bool,
    /// `|V|` for the sequent.
    pub v: usize,
    /// Number of distinct atoms in the sequent, the naive bound on `|V|`.
    pub atoms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extended_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_size: Option<usize>,
}

impl BatchRow {
    /// False only when a produced proof failed a check.
    pub fn is_ok(&self) -> bool {
        !self.valid || (self.check.as_deref() == Some("ok") && self.oracle.as_deref() == Some("ok"))
    }
}

/// Decides, translates and cross-checks one single-succedent sequent.
pub fn process(s: &ClassicalSequent) -> BatchRow {
    let a = &s.succ.as_slice()[0];
    let v = em_set(&s.ante, a);
    let mut row = BatchRow {
        sequent: s.to_string(),
        valid: false,
        v: v.len(),
        atoms: s.atoms().len(),
        check: None,
        oracle: None,
        extended_size: None,
        pure_size: None,
    };
    let cp = match search_c(s) {
        SearchOutcome::Proof(cp) => cp,
        SearchOutcome::Countermodel(_) => return row,
    };
    row.valid = true;
    let target = IntSequent::new(pi_multiset(&v).sum(&s.ante), a.clone());
    row.oracle = Some(if decide_i(&target) { "ok" } else { "fail" }.to_string());
    row.check = Some(match translate_theorem(&cp) {
        Err(e) => format!("translation failed: {e}"),
        Ok(r) => {
            row.extended_size = Some(r.proof.size());
            row.pure_size = Some(r.pure_proof.size());
            if r.v != v || r.proof.conclusion != target || r.pure_proof.conclusion != target {
                "wrong conclusion".to_string()
            } else if let Err(e) = check_i(&r.proof, true) {
                format!("extended proof: {e}")
            } else if let Err(e) = check_i(&r.pure_proof, false) {
                format!("pure proof: {e}")
            } else {
                "ok".to_string()
            }
        }
    });
    row
}

/// Rows in enumeration order.
pub fn run_batch(
    atoms: &[&str],
    max_weight: usize,
) -> Result<impl Iterator<Item = BatchRow>, EnumError> {
    Ok(enumerate(atoms, max_weight)?.map(|s| process(&s)))
}
