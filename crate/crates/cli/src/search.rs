//! Exhaustive search for a distinguished set whose bubbling weights give the
//! Grothendieck support.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use schubkit::bubbling::enumerate_sbd_bounded;
use schubkit::diagram::rothe;
use schubkit::polynomial::grothendieck;
use schubkit::{Cell, Permutation};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

pub const DEFAULT_SEARCH_BOUND: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub permutation: Permutation,
    pub candidates: usize,
    pub candidates_tried: usize,
    pub witness: Option<BTreeSet<Cell>>,
}

/// Subsets with at most one cell per column, largest first, then
/// lexicographic on the sorted cell list.
pub fn candidates(columns: &[Vec<Cell>], bound: usize) -> CliResult<Vec<Vec<Cell>>> {
    let count = columns.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len() + 1)).unwrap_or(usize::MAX);
    if count > bound {
        return Err(schubkit::Error::BoundExceeded { what: "search-a candidates".into(), bound }.into());
    }
    let mut all: Vec<Vec<Cell>> = vec![Vec::new()];
    for col in columns {
        let mut next = Vec::with_capacity(all.len() * (col.len() + 1));
        for partial in &all {
            next.push(partial.clone());
            for &c in col {
                let mut v = partial.clone();
                v.push(c);
                next.push(v);
            }
        }
        all = next;
    }
    for a in &mut all {
        a.sort();
    }
    all.sort_by(|a, b| Reverse(a.len()).cmp(&Reverse(b.len())).then_with(|| a.cmp(b)));
    Ok(all)
}

pub fn search_a(w: &Permutation, sbd_bound: usize, search_bound: usize) -> CliResult<SearchOutcome> {
    let d = rothe(w);
    let columns: Vec<Vec<Cell>> = (1..=d.n_cols)
        .map(|j| d.column(j).into_iter().map(|i| (i, j)).collect::<Vec<Cell>>())
        .filter(|c| !c.is_empty())
        .collect();
    let all = candidates(&columns, search_bound)?;
    let target: BTreeSet<Vec<usize>> =
        grothendieck(w).support().into_iter().map(|e| e.into_iter().map(|a| a as usize).collect()).collect();
    let mut outcome = SearchOutcome { permutation: w.clone(), candidates: all.len(), candidates_tried: 0, witness: None };
    for a in all {
        outcome.candidates_tried += 1;
        let a: BTreeSet<Cell> = a.into_iter().collect();
        let weights: BTreeSet<Vec<usize>> = enumerate_sbd_bounded(&d, &a, sbd_bound)?.iter().map(|s| s.weight()).collect();
        if weights == target {
            outcome.witness = Some(a);
            break;
        }
    }
    Ok(outcome)
}
