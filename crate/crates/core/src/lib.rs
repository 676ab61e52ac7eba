//! Classical and intuitionistic propositional sequent calculi, and a
//! constructive translation of classical derivations into intuitionistic
//! ones that assume excluded middle only for a computed set of variables.
//!
//! A classical derivation of `Γ ⇒ A` becomes an intuitionistic derivation
//! of `Π_V, Γ ⇒ A`, where `Π_V` holds `p | ~p` for each `p` in
//! `V = (vneg(Γ) ∪ vpos(A)) ∩ (vpos_ns(Γ) ∪ vneg(A))`.

pub mod error;
pub mod formula;
pub mod g3cp;
pub mod g3ip;
pub mod lemmas;
pub mod polarity;
pub mod translate;

pub use error::{CheckError, ProofError};
pub use formula::{ClassicalSequent, Formula, IntSequent, Multiset};
