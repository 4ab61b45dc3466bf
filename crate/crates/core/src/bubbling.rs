//! Dead square diagrams, bubbling and K-bubbling moves, streamlined bubbling
//! diagram closures and the distinguished-square constructions.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::convexity::PointSet;
use crate::diagram::{check_distinguished, rank, rothe, Cell, Diagram};
use crate::error::{Error, Result};
use crate::permutation::{BlockKind, ChainWitness, Permutation};

pub const DEFAULT_CLOSURE_BOUND: usize = 2_000_000;

/// `(D, F, A)`: a diagram, its dead cells and its distinguished live cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeadSquareDiagram {
    pub n_rows: usize,
    pub n_cols: usize,
    #[serde(rename = "D")]
    pub cells: BTreeSet<Cell>,
    #[serde(rename = "F")]
    pub dead: BTreeSet<Cell>,
    #[serde(rename = "A")]
    pub distinguished: BTreeSet<Cell>,
}

impl DeadSquareDiagram {
    pub fn new(d: &Diagram, dead: BTreeSet<Cell>, distinguished: BTreeSet<Cell>) -> Self {
        DeadSquareDiagram { n_rows: d.n_rows, n_cols: d.n_cols, cells: d.cells().clone(), dead, distinguished }
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::from_cells(self.n_rows, self.n_cols, self.cells.iter().copied()).expect("cells fit the grid")
    }

    pub fn is_live(&self, c: Cell) -> bool {
        self.cells.contains(&c) && !self.dead.contains(&c)
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.n_rows];
        for &(i, _) in &self.cells {
            wt[i - 1] += 1;
        }
        wt
    }

    pub fn excess(&self) -> usize {
        self.dead.len()
    }

    /// Checks `F ⊆ D`, `A ⊆ D \ F`, and that every dead cell has a
    /// distinguished cell above it with no live cell in between.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if let Some(c) = self.dead.iter().find(|c| !self.cells.contains(c)) {
            return Err(format!("dead cell {c:?} not in D"));
        }
        if let Some(c) = self.distinguished.iter().find(|c| !self.is_live(**c)) {
            return Err(format!("distinguished cell {c:?} is not live"));
        }
        for &(i, j) in &self.dead {
            let ok = self.distinguished.iter().any(|&(i2, j2)| {
                j2 == j && i2 < i && (i2 + 1..i).all(|r| !self.is_live((r, j)))
            });
            if !ok {
                return Err(format!("dead cell {:?} has no distinguished cell above it", (i, j)));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn check_move(&self, (i, j): Cell) -> Result<()> {
        if !self.is_live((i, j)) {
            return Err(Error::Precondition(format!("{:?} is not live", (i, j))));
        }
        if i < 2 || self.cells.contains(&(i - 1, j)) {
            return Err(Error::Precondition(format!("no empty cell above {:?}", (i, j))));
        }
        Ok(())
    }

    /// Moves a live cell up one row, carrying its distinguished mark.
    pub fn bubble_move(&self, cell: Cell) -> Result<Self> {
        self.check_move(cell)?;
        let up = (cell.0 - 1, cell.1);
        let mut out = self.clone();
        out.cells.remove(&cell);
        out.cells.insert(up);
        if out.distinguished.remove(&cell) {
            out.distinguished.insert(up);
        }
        Ok(out)
    }

    /// Moves a distinguished cell up one row and leaves a dead copy behind.
    pub fn k_bubble_move(&self, cell: Cell) -> Result<Self> {
        self.check_move(cell)?;
        if !self.distinguished.contains(&cell) {
            return Err(Error::Precondition(format!("{cell:?} is not distinguished")));
        }
        let up = (cell.0 - 1, cell.1);
        let mut out = self.clone();
        out.cells.insert(up);
        out.dead.insert(cell);
        out.distinguished.remove(&cell);
        out.distinguished.insert(up);
        Ok(out)
    }

    /// `□` live, `■` dead, `◆` distinguished, `·` empty.
    pub fn render(&self) -> String {
        self.diagram().render_with(|c| {
            if self.distinguished.contains(&c) {
                '◆'
            } else if self.dead.contains(&c) {
                '■'
            } else if self.cells.contains(&c) {
                '□'
            } else {
                '·'
            }
        })
    }
}

/// Bitmask encoding of cells of a fixed grid.
#[derive(Clone, Copy)]
struct Grid {
    rows: usize,
    cols: usize,
}

impl Grid {
    fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows * cols > 128 {
            return Err(Error::BoundExceeded { what: format!("{rows}x{cols} bubbling grid"), bound: 128 });
        }
        Ok(Grid { rows, cols })
    }

    fn bit(&self, (i, j): Cell) -> u128 {
        1u128 << ((i - 1) * self.cols + (j - 1))
    }

    fn mask<'a, I: IntoIterator<Item = &'a Cell>>(&self, cells: I) -> u128 {
        cells.into_iter().fold(0, |m, &c| m | self.bit(c))
    }

    fn cells(&self, mut m: u128) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out.insert((b / self.cols + 1, b % self.cols + 1));
            m &= m - 1;
        }
        out
    }

    fn weight(&self, m: u128) -> Vec<usize> {
        let row = (1u128 << self.cols) - 1;
        (0..self.rows).map(|r| ((m >> (r * self.cols)) & row).count_ones() as usize).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    d: u128,
    f: u128,
    a: u128,
}

/// Breadth-first closure of `(D, ∅, A)` under both moves.
fn closure(d: &Diagram, a: &BTreeSet<Cell>, bound: usize) -> Result<(Grid, Vec<State>)> {
    check_distinguished(d, a)?;
    let g = Grid::new(d.n_rows, d.n_cols)?;
    let start = State { d: g.mask(d.cells()), f: 0, a: g.mask(a) };
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(start);
    let mut order = vec![start];
    let mut head = 0;
    let stride = g.cols as u32;
    while head < order.len() {
        let s = order[head];
        head += 1;
        // live cells whose upper neighbour is empty
        let mut movable = (s.d & !s.f) >> stride & !s.d;
        while movable != 0 {
            let up = movable & movable.wrapping_neg();
            movable &= movable - 1;
            let cell = up << stride;
            let mut next = vec![State {
                d: s.d & !cell | up,
                f: s.f,
                a: if s.a & cell != 0 { s.a & !cell | up } else { s.a },
            }];
            if s.a & cell != 0 {
                next.push(State { d: s.d | up, f: s.f | cell, a: s.a & !cell | up });
            }
            for t in next {
                if seen.insert(t) {
                    if seen.len() > bound {
                        return Err(Error::BoundExceeded { what: "bubbling closure".into(), bound });
                    }
                    order.push(t);
                }
            }
        }
    }
    Ok((g, order))
}

/// Every streamlined bubbling diagram reachable from `(D, ∅, A)`.
pub fn enumerate_sbd(d: &Diagram, a: &BTreeSet<Cell>) -> Result<Vec<DeadSquareDiagram>> {
    enumerate_sbd_bounded(d, a, DEFAULT_CLOSURE_BOUND)
}

pub fn enumerate_sbd_bounded(d: &Diagram, a: &BTreeSet<Cell>, bound: usize) -> Result<Vec<DeadSquareDiagram>> {
    let (g, states) = closure(d, a, bound)?;
    Ok(states
        .into_iter()
        .map(|s| DeadSquareDiagram {
            n_rows: d.n_rows,
            n_cols: d.n_cols,
            cells: g.cells(s.d),
            dead: g.cells(s.f),
            distinguished: g.cells(s.a),
        })
        .collect())
}

/// `{wt(𝒟)}` over the closure of `(D, ∅, A)`.
pub fn sbd_weights(d: &Diagram, a: &BTreeSet<Cell>) -> Result<BTreeSet<Vec<usize>>> {
    let (g, states) = closure(d, a, DEFAULT_CLOSURE_BOUND)?;
    Ok(states.iter().map(|s| g.weight(s.d)).collect())
}

/// The live-diagram components `D` occurring in the closure.
pub fn sbd_diagrams(d: &Diagram, a: &BTreeSet<Cell>) -> Result<BTreeSet<BTreeSet<Cell>>> {
    let (g, states) = closure(d, a, DEFAULT_CLOSURE_BOUND)?;
    let masks: BTreeSet<u128> = states.iter().map(|s| s.d).collect();
    Ok(masks.into_iter().map(|m| g.cells(m)).collect())
}

/// Each state's weight extended by `m - ex`, where `m` is the largest excess.
pub fn weights_with_excess(sbds: &[DeadSquareDiagram]) -> PointSet {
    let m = sbds.iter().map(|s| s.excess()).max().unwrap_or(0);
    sbds.iter()
        .map(|s| {
            let mut p: Vec<i64> = s.weight().into_iter().map(|x| x as i64).collect();
            p.push((m - s.excess()) as i64);
            p
        })
        .collect()
}

fn require_vexillary(w: &Permutation) -> Result<()> {
    if w.is_vexillary() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{w} is not vexillary")))
    }
}

/// Classes of `D(w)` keyed by `i - r(i, j)`, in increasing key order.
pub fn linking_classes(w: &Permutation) -> Result<Vec<BTreeSet<Cell>>> {
    require_vexillary(w)?;
    let mut classes: BTreeMap<i64, BTreeSet<Cell>> = BTreeMap::new();
    for &c in rothe(w).cells() {
        let key = c.0 as i64 - rank(w, c)? as i64;
        classes.entry(key).or_default().insert(c);
    }
    Ok(classes.into_values().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Row descending, then fewer cells below, then column ascending (left) or
/// descending (right).
pub fn order_cells(d: &Diagram, side: Side) -> Vec<Cell> {
    let below = |(i, j): Cell| d.cells().iter().filter(|&&(r, c)| c == j && r > i).count();
    let mut cells: Vec<Cell> = d.cells().iter().copied().collect();
    cells.sort_by(|&x, &y| {
        y.0.cmp(&x.0).then(below(x).cmp(&below(y))).then(match side {
            Side::Left => x.1.cmp(&y.1),
            Side::Right => y.1.cmp(&x.1),
        })
    });
    cells
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AVariant {
    Left,
    Right,
    New,
    RightPrime,
    Southmost,
}

impl std::str::FromStr for AVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(AVariant::Left),
            "right" => Ok(AVariant::Right),
            "new" => Ok(AVariant::New),
            "right_prime" | "right-prime" => Ok(AVariant::RightPrime),
            "southmost" => Ok(AVariant::Southmost),
            _ => Err(Error::Parse(format!("unknown distinguished-set variant {s:?}"))),
        }
    }
}

fn greedy_by_class(w: &Permutation, side: Side) -> Result<BTreeSet<Cell>> {
    let classes = linking_classes(w)?;
    let class_of = |c: Cell| classes.iter().position(|k| k.contains(&c)).expect("cell has a class");
    let mut cols = BTreeSet::new();
    let mut used = BTreeSet::new();
    let mut out = BTreeSet::new();
    for c in order_cells(&rothe(w), side) {
        let k = class_of(c);
        if !cols.contains(&c.1) && !used.contains(&k) {
            cols.insert(c.1);
            used.insert(k);
            out.insert(c);
        }
    }
    Ok(out)
}

fn a_new(w: &Permutation) -> Result<BTreeSet<Cell>> {
    require_vexillary(w)?;
    let d = rothe(w);
    let order = order_cells(&d, Side::Right);
    let mut out: BTreeSet<Cell> = BTreeSet::new();
    for i in (1..=w.size()).rev() {
        let pick = order
            .iter()
            .filter(|c| c.0 == i)
            .find(|&&(_, j)| !out.iter().any(|&(r, c)| c == j && r > i))
            .copied();
        if let Some(c) = pick {
            out.insert(c);
        }
    }
    Ok(out)
}

fn a_right_prime(w: &Permutation) -> Result<BTreeSet<Cell>> {
    let d = rothe(w);
    let mut a = greedy_by_class(w, Side::Right)?;
    for i in (1..=w.size()).rev() {
        let row: Vec<Cell> = a.iter().filter(|c| c.0 == i).copied().collect();
        if row.len() <= 1 {
            continue;
        }
        if i == 1 {
            return Err(Error::Consistency(format!("pushing distinguished cells of {w} out of row 1")));
        }
        let mut sorted = row;
        let below = |(r, j): Cell| d.cells().iter().filter(|&&(r2, c)| c == j && r2 > r).count();
        sorted.sort_by(|&x, &y| below(x).cmp(&below(y)).then(y.1.cmp(&x.1)));
        for &c in &sorted[1..] {
            a.remove(&c);
            a.insert((i - 1, c.1));
        }
    }
    Ok(a)
}

/// The lowest cell of each column of `D(w)`.
fn southmost(w: &Permutation) -> BTreeSet<Cell> {
    let d = rothe(w);
    d.columns()
        .iter()
        .enumerate()
        .filter_map(|(j, rows)| rows.last().map(|&i| (i, j + 1)))
        .collect()
}

pub fn build_a(w: &Permutation, variant: AVariant) -> Result<BTreeSet<Cell>> {
    match variant {
        AVariant::Left => greedy_by_class(w, Side::Left),
        AVariant::Right => greedy_by_class(w, Side::Right),
        AVariant::New => a_new(w),
        AVariant::RightPrime => {
            require_vexillary(w)?;
            a_right_prime(w)
        }
        AVariant::Southmost => {
            if !w.is_fireworks() {
                return Err(Error::Precondition(format!("{w} is not fireworks")));
            }
            Ok(southmost(w))
        }
    }
}

/// Union of the per-block distinguished sets, each placed at the block's row
/// offset and at the column offset given by the block's smallest value.
pub fn build_a_chain(w: &Permutation, witness: &ChainWitness) -> Result<BTreeSet<Cell>> {
    witness.validate(w)?;
    let mut out = BTreeSet::new();
    for b in 0..witness.num_blocks() {
        let range = witness.block_range(b);
        let block = Permutation::flatten(&w.images()[range.start - 1..range.end - 1])?;
        let local = match witness.block_kinds[b] {
            BlockKind::Vexillary => build_a(&block, AVariant::Left)?,
            BlockKind::Fireworks => build_a(&block, AVariant::Southmost)?,
        };
        let (dr, dc) = (range.start - 1, witness.block_minima[b] - 1);
        out.extend(local.into_iter().map(|(i, j)| (i + dr, j + dc)));
    }
    check_distinguished(&rothe(w), &out)?;
    Ok(out)
}
