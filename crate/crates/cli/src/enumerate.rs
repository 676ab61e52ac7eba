//! Exhaustive enumeration of small sequents.

use std::sync::Arc;

use decvar_core::{ClassicalSequent, Formula, Multiset};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("at least one atom is required")]
    NoAtoms,
    #[error("max weight must be at least 2, got {0}")]
    WeightTooSmall(usize),
    #[error("`{0}` is not a valid atom name")]
    BadAtom(String),
}

/// Every formula over `atoms` and `bot` of weight at most `max`, grouped
/// by weight. `by_weight[w]` holds the formulas of weight exactly `w`.
pub fn formulas_by_weight(atoms: &[Formula], max: usize) -> Vec<Vec<Formula>> {
    let mut by_weight: Vec<Vec<Formula>> = vec![Vec::new(); max + 1];
    if max >= 1 {
        by_weight[1] = atoms.iter().cloned().chain([Formula::Bot]).collect();
    }
    for w in 2..=max {
        let mut out = Vec::new();
        for wl in 1..w - 1 {
            let wr = w - 1 - wl;
            for l in &by_weight[wl] {
                for r in &by_weight[wr] {
                    out.push(Formula::and(l.clone(), r.clone()));
                    out.push(Formula::or(l.clone(), r.clone()));
                    out.push(Formula::imp(l.clone(), r.clone()));
                }
            }
        }
        by_weight[w] = out;
    }
    by_weight
}

fn atoms_of(names: &[&str]) -> Result<Vec<Formula>, EnumError> {
    let mut out: Vec<Formula> = Vec::new();
    for n in names {
        let f: Formula = n.parse().map_err(|_| EnumError::BadAtom(n.to_string()))?;
        if !matches!(f, Formula::Atom(_)) {
            return Err(EnumError::BadAtom(n.to_string()));
        }
        if !out.contains(&f) {
            out.push(f);
        }
    }
    if out.is_empty() {
        return Err(EnumError::NoAtoms);
    }
    Ok(out)
}

/// All sequents `Γ ⇒ A` with at most two antecedent formulas whose total
/// weight is at most `max_weight`. Each multiset sequent appears once;
/// the order is fixed by the order of `atoms`.
pub fn enumerate(
    atoms: &[&str],
    max_weight: usize,
) -> Result<impl Iterator<Item = ClassicalSequent>, EnumError> {
    if max_weight < 2 {
        return Err(EnumError::WeightTooSmall(max_weight));
    }
    let atoms = atoms_of(atoms)?;
    // Sorted by weight, so every bound below is a prefix.
    let all: Arc<Vec<(usize, Formula)>> = Arc::new(
        formulas_by_weight(&atoms, max_weight)
            .into_iter()
            .enumerate()
            .flat_map(|(w, fs)| fs.into_iter().map(move |f| (w, f)))
            .collect(),
    );
    let n = all.len();
    let outer = all.clone();
    Ok((0..n).flat_map(move |s| {
        let all = outer.clone();
        let budget = max_weight - all[s].0;
        let fits = {
            let all = all.clone();
            move |i: &usize| all[*i].0 <= budget
        };
        let pairs = (0..n).take_while(fits.clone()).flat_map({
            let all = all.clone();
            move |i| {
                let all = all.clone();
                (i..n)
                    .take_while(move |&j| all[i].0 + all[j].0 <= budget)
                    .map(move |j| vec![i, j])
            }
        });
        std::iter::once(vec![])
            .chain((0..n).take_while(fits).map(|i| vec![i]))
            .chain(pairs)
            .map(move |ix| {
                let ante: Multiset = ix.iter().map(|&i| all[i].1.clone()).collect();
                ClassicalSequent::new(ante, vec![all[s].1.clone()])
            })
    }))
}
