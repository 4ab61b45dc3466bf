//! Finite cell diagrams and the constructions built on them: Rothe and
//! skyline diagrams, the column order, %-avoidance, upward closure, packed
//! columns, dark clouds, snow diagrams and `D_top`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A grid cell `(row, col)`, 1-indexed, rows growing downward.
pub type Cell = (usize, usize);

/// A weak composition `(alpha_1, ..., alpha_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    entries: Vec<usize>,
}

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] >= p[1])
    }

    /// Positive entries are pairwise distinct.
    pub fn is_snowy(&self) -> bool {
        let mut positive: Vec<usize> = self.entries.iter().copied().filter(|&a| a > 0).collect();
        let k = positive.len();
        positive.sort_unstable();
        positive.dedup();
        positive.len() == k
    }

    /// `s_i alpha`: swap entries `i` and `i + 1` (1-indexed).
    pub fn swap(&self, i: usize) -> WeakComposition {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        WeakComposition { entries }
    }

    /// All weak compositions of length `len` with entry sum at most `max_total`.
    pub fn all_bounded(len: usize, max_total: usize) -> Vec<WeakComposition> {
        fn rec(len: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if cur.len() == len {
                out.push(WeakComposition::new(cur.clone()));
                return;
            }
            for a in 0..=budget {
                cur.push(a);
                rec(len, budget - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, max_total, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        trimmed
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeakComposition::new)
            .map_err(|e| Error::Parse(format!("weak composition {s:?}: {e}")))
    }
}

/// A set of cells inside an `n_rows x n_cols` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    pub n_rows: usize,
    pub n_cols: usize,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn empty(n_rows: usize, n_cols: usize) -> Self {
        Diagram { n_rows, n_cols, cells: BTreeSet::new() }
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(n_rows: usize, n_cols: usize, cells: I) -> Result<Self> {
        let mut d = Diagram::empty(n_rows, n_cols);
        for c in cells {
            if c.0 == 0 || c.1 == 0 || c.0 > n_rows || c.1 > n_cols {
                return Err(Error::Precondition(format!("cell {c:?} outside {n_rows}x{n_cols} grid")));
            }
            d.cells.insert(c);
        }
        Ok(d)
    }

    /// Smallest grid containing every cell (at least 1x1).
    pub fn bounded<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let n_rows = cells.iter().map(|c| c.0).max().unwrap_or(1).max(1);
        let n_cols = cells.iter().map(|c| c.1).max().unwrap_or(1).max(1);
        Diagram { n_rows, n_cols, cells }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Inserts a cell, growing the grid when needed.
    pub fn insert(&mut self, cell: Cell) {
        self.n_rows = self.n_rows.max(cell.0);
        self.n_cols = self.n_cols.max(cell.1);
        self.cells.insert(cell);
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.cells.remove(&cell)
    }

    /// Same cells in a (weakly) larger grid.
    pub fn resized(&self, n_rows: usize, n_cols: usize) -> Result<Diagram> {
        Diagram::from_cells(n_rows, n_cols, self.cells.iter().copied())
    }

    /// Rows occupied in column `j`, ascending.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.cells.iter().filter(|c| c.1 == j).map(|c| c.0).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.n_cols];
        for &(i, j) in &self.cells {
            cols[j - 1].push(i);
        }
        cols
    }

    /// Nonempty columns as a sorted multiset of row sets.
    pub fn column_multiset(&self) -> Vec<Vec<usize>> {
        let mut cols: Vec<Vec<usize>> = self.columns().into_iter().filter(|c| !c.is_empty()).collect();
        cols.sort();
        cols
    }

    /// Row counts, one entry per grid row.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.n_rows];
        for &(i, _) in &self.cells {
            wt[i - 1] += 1;
        }
        wt
    }

    /// Builds a diagram from per-column row sets.
    pub fn from_columns(n_rows: usize, columns: &[Vec<usize>]) -> Result<Diagram> {
        let cells = columns
            .iter()
            .enumerate()
            .flat_map(|(j, rows)| rows.iter().map(move |&i| (i, j + 1)));
        Diagram::from_cells(n_rows, columns.len(), cells)
    }

    /// Reorders columns: column `j` of the result is column `order[j - 1]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Result<Diagram> {
        if order.len() != self.n_cols {
            return Err(Error::Precondition("column order has wrong length".into()));
        }
        let cols = self.columns();
        let permuted: Vec<Vec<usize>> = order.iter().map(|&j| cols[j - 1].clone()).collect();
        Diagram::from_columns(self.n_rows, &permuted)
    }

    /// True iff for all `(i, j), (i', j')` with `i < i'` and `j' < j`, one of
    /// `(i, j')`, `(i', j)` is present.
    pub fn is_percent_avoiding(&self) -> bool {
        for &(i, j) in &self.cells {
            for &(i2, j2) in &self.cells {
                if i < i2 && j2 < j && !self.contains((i, j2)) && !self.contains((i2, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Each occupied column filled from row 1 down to its lowest cell.
    pub fn upward_closure(&self) -> Diagram {
        let mut out = Diagram::empty(self.n_rows, self.n_cols);
        for (j, rows) in self.columns().iter().enumerate() {
            if let Some(&low) = rows.last() {
                for i in 1..=low {
                    out.cells.insert((i, j + 1));
                }
            }
        }
        out
    }

    /// Empty cells sitting directly above an occupied cell.
    pub fn missing_teeth(&self) -> BTreeSet<Cell> {
        self.cells
            .iter()
            .filter(|&&(i, j)| i > 1 && !self.contains((i - 1, j)))
            .map(|&(i, j)| (i - 1, j))
            .collect()
    }

    /// Nonempty columns without missing teeth (occupying rows `1..=k`).
    pub fn packed_columns(&self) -> BTreeSet<usize> {
        self.columns()
            .iter()
            .enumerate()
            .filter(|(_, rows)| !rows.is_empty() && is_top_justified(rows))
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// Packed columns replaced by empty columns.
    pub fn strip_packed(&self) -> Diagram {
        let packed = self.packed_columns();
        let cells = self.cells.iter().copied().filter(|c| !packed.contains(&c.1)).collect();
        Diagram { n_rows: self.n_rows, n_cols: self.n_cols, cells }
    }

    /// If the nonempty columns are totally ordered by inclusion, `self` is a
    /// column permutation of the skyline of its own weight; returns that weight.
    pub fn column_perm_of_skyline(&self) -> Option<WeakComposition> {
        let mut cols: Vec<BTreeSet<usize>> = self
            .columns()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.into_iter().collect())
            .collect();
        cols.sort_by_key(|c| std::cmp::Reverse(c.len()));
        if cols.windows(2).all(|p| p[1].is_subset(&p[0])) {
            Some(WeakComposition::new(self.weight()))
        } else {
            None
        }
    }

    /// Scan rows bottom to top; in each row take the rightmost cell whose
    /// column holds no previously chosen cell.
    pub fn dark_cloud(&self) -> Diagram {
        let mut dark = Diagram::empty(self.n_rows, self.n_cols);
        let mut used_cols = BTreeSet::new();
        for i in (1..=self.n_rows).rev() {
            let pick = self
                .cells
                .range((i, 0)..=(i, usize::MAX))
                .rev()
                .find(|c| !used_cols.contains(&c.1))
                .copied();
            if let Some(c) = pick {
                used_cols.insert(c.1);
                dark.cells.insert(c);
            }
        }
        dark
    }

    /// `self` plus every cell weakly above a dark-cloud cell.
    pub fn snow(&self) -> Diagram {
        let mut out = self.clone();
        for &(i, j) in self.dark_cloud().cells() {
            for r in 1..=i {
                out.cells.insert((r, j));
            }
        }
        out
    }

    /// `self` plus every cell strictly above a cell of `a`.
    ///
    /// `a` must lie in `self` with at most one cell per column.
    pub fn d_top(&self, a: &BTreeSet<Cell>) -> Result<Diagram> {
        check_distinguished(self, a)?;
        let mut out = self.clone();
        for &(i, j) in a {
            for r in 1..i {
                out.cells.insert((r, j));
            }
        }
        Ok(out)
    }

    /// Appends columns after the last one.
    pub fn with_appended_columns(&self, columns: &[Vec<usize>]) -> Result<Diagram> {
        let mut cols = self.columns();
        cols.extend_from_slice(columns);
        let n_rows = cols.iter().flatten().copied().max().unwrap_or(0).max(self.n_rows);
        Diagram::from_columns(n_rows, &cols)
    }

    /// `□` for cells, `·` elsewhere.
    pub fn render(&self) -> String {
        self.render_with(|c| if self.contains(c) { '□' } else { '·' })
    }

    pub fn render_with<F: Fn(Cell) -> char>(&self, glyph: F) -> String {
        let mut s = String::new();
        for i in 1..=self.n_rows {
            let row: String = (1..=self.n_cols).map(|j| glyph((i, j))).collect();
            s.push_str(&row);
            s.push('\n');
        }
        s
    }
}

pub(crate) fn check_distinguished(d: &Diagram, a: &BTreeSet<Cell>) -> Result<()> {
    if let Some(c) = a.iter().find(|c| !d.contains(**c)) {
        return Err(Error::Precondition(format!("distinguished cell {c:?} not in diagram")));
    }
    let cols: BTreeSet<usize> = a.iter().map(|c| c.1).collect();
    if cols.len() != a.len() {
        return Err(Error::Precondition("more than one distinguished cell in a column".into()));
    }
    Ok(())
}

fn is_top_justified(rows: &[usize]) -> bool {
    rows.iter().enumerate().all(|(k, &r)| r == k + 1)
}

/// `D(w) = {(i, j) : i < w^{-1}(j), j < w(i)}` in the `n x n` grid.
pub fn rothe(w: &Permutation) -> Diagram {
    let n = w.size();
    let inv = w.inverse();
    let cells = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| i < inv.at(j) && j < w.at(i))
        .collect();
    Diagram { n_rows: n, n_cols: n, cells }
}

/// Number of permutation dots strictly northwest of `cell`.
pub fn rank(w: &Permutation, cell: Cell) -> Result<usize> {
    let (i, j) = cell;
    if !rothe(w).contains(cell) {
        return Err(Error::Precondition(format!("{cell:?} is not in D({w})")));
    }
    Ok((1..i).filter(|&k| w.at(k) < j).count())
}

/// Left-justified rows of lengths `alpha_i`; the grid is
/// `len(alpha) x max(alpha)` (at least one column).
pub fn skyline(alpha: &WeakComposition) -> Diagram {
    let n_rows = alpha.len().max(1);
    let n_cols = alpha.entries().iter().copied().max().unwrap_or(0).max(1);
    let cells = alpha
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| (1..=a).map(move |j| (i + 1, j)))
        .collect();
    Diagram { n_rows, n_cols, cells }
}

/// `R <= S`: equal sizes and the k-th smallest of `R` is at most the k-th
/// smallest of `S` for every `k`.
pub fn column_leq(r: &BTreeSet<usize>, s: &BTreeSet<usize>) -> bool {
    r.len() == s.len() && r.iter().zip(s.iter()).all(|(a, b)| a <= b)
}

/// Columnwise `C_j <= D_j`.
pub fn diagram_leq(c: &Diagram, d: &Diagram) -> bool {
    let n_cols = c.n_cols.max(d.n_cols);
    let cc = c.resized(c.n_rows, n_cols).expect("grow");
    let dd = d.resized(d.n_rows, n_cols).expect("grow");
    cc.columns().iter().zip(dd.columns().iter()).all(|(a, b)| {
        column_leq(&a.iter().copied().collect(), &b.iter().copied().collect())
    })
}
