//! Bumpless pipe dreams, droop moves, marked BPDs and the Grothendieck
//! polynomial they produce.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polynomial::MultiPolynomial;

pub const DEFAULT_MAX_N: usize = 5;

const N: u8 = 1;
const S: u8 = 2;
const E: u8 = 4;
const W: u8 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tile {
    Blank,
    Cross,
    Vertical,
    Horizontal,
    /// `┘`: joins the west and north edges.
    ElbowLeftTop,
    /// `┌`: joins the south and east edges.
    ElbowBottomRight,
}

impl Tile {
    fn edges(self) -> u8 {
        match self {
            Tile::Blank => 0,
            Tile::Cross => N | S | E | W,
            Tile::Vertical => N | S,
            Tile::Horizontal => E | W,
            Tile::ElbowLeftTop => W | N,
            Tile::ElbowBottomRight => S | E,
        }
    }

    /// The tile with the given edge set, reading four edges as a crossing.
    fn from_edges(e: u8) -> Option<Tile> {
        match e {
            0 => Some(Tile::Blank),
            15 => Some(Tile::Cross),
            3 => Some(Tile::Vertical),
            12 => Some(Tile::Horizontal),
            9 => Some(Tile::ElbowLeftTop),
            6 => Some(Tile::ElbowBottomRight),
            _ => None,
        }
    }

    fn is_elbow(self) -> bool {
        matches!(self, Tile::ElbowLeftTop | Tile::ElbowBottomRight)
    }

    pub fn glyph(self) -> char {
        match self {
            Tile::Blank => '·',
            Tile::Cross => '┼',
            Tile::Vertical => '│',
            Tile::Horizontal => '─',
            Tile::ElbowLeftTop => '┘',
            Tile::ElbowBottomRight => '┌',
        }
    }
}

/// A tiling of the `n x n` grid; rows top to bottom, 1-indexed accessors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Tile>>", into = "Vec<Vec<Tile>>")]
pub struct Bpd {
    tiles: Vec<Vec<Tile>>,
}

impl Bpd {
    pub fn new(tiles: Vec<Vec<Tile>>) -> Result<Self> {
        let n = tiles.len();
        if n == 0 || tiles.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("BPD tiling must be a nonempty square grid".into()));
        }
        let p = Bpd { tiles };
        p.check()?;
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.tiles.len()
    }

    pub fn tile(&self, (i, j): Cell) -> Tile {
        self.tiles[i - 1][j - 1]
    }

    pub fn tiles(&self) -> &[Vec<Tile>] {
        &self.tiles
    }

    fn cells_where(&self, t: Tile) -> BTreeSet<Cell> {
        let n = self.size();
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&c| self.tile(c) == t)
            .collect()
    }

    /// `D(P)`.
    pub fn blanks(&self) -> BTreeSet<Cell> {
        self.cells_where(Tile::Blank)
    }

    /// `U(P)`: the `┘` tiles.
    pub fn upper_elbows(&self) -> BTreeSet<Cell> {
        self.cells_where(Tile::ElbowLeftTop)
    }

    pub fn blank_diagram(&self) -> Diagram {
        Diagram::from_cells(self.size(), self.size(), self.blanks()).expect("cells inside the grid")
    }

    /// Edge matching between neighbours and the boundary conditions.
    fn check(&self) -> Result<()> {
        let n = self.size();
        let bad = |msg: String| Err(Error::Precondition(format!("invalid BPD: {msg}")));
        for i in 1..=n {
            for j in 1..=n {
                let e = self.tile((i, j)).edges();
                let north = if i == 1 { false } else { self.tile((i - 1, j)).edges() & S != 0 };
                let west = if j == 1 { false } else { self.tile((i, j - 1)).edges() & E != 0 };
                if (e & N != 0) != north || (e & W != 0) != west {
                    return bad(format!("edge mismatch at {:?}", (i, j)));
                }
                if i == n && e & S == 0 {
                    return bad(format!("no pipe enters column {j}"));
                }
                if j == n && e & E == 0 {
                    return bad(format!("no pipe leaves row {i}"));
                }
            }
        }
        Ok(())
    }

    /// Right-edge labels with pipes numbered by bottom column; any crossing
    /// of a pair after their first is read as a bump.
    pub fn permutation_of(&self) -> Permutation {
        self.trace().0
    }

    pub fn is_reduced(&self) -> bool {
        !self.trace().1
    }

    fn trace(&self) -> (Permutation, bool) {
        let n = self.size();
        let mut from_below: Vec<usize> = (1..=n).collect();
        let mut images = vec![0; n];
        let mut crossed: HashSet<(usize, usize)> = HashSet::new();
        let mut repeated = false;
        for i in (1..=n).rev() {
            let mut from_left = 0;
            for j in 1..=n {
                let below = from_below[j - 1];
                let (up, right) = match self.tile((i, j)) {
                    Tile::Blank => (0, 0),
                    Tile::Vertical => (below, 0),
                    Tile::Horizontal => (0, from_left),
                    Tile::ElbowLeftTop => (from_left, 0),
                    Tile::ElbowBottomRight => (0, below),
                    Tile::Cross => {
                        let pair = (below.min(from_left), below.max(from_left));
                        if crossed.insert(pair) {
                            (below, from_left)
                        } else {
                            repeated = true;
                            (from_left, below)
                        }
                    }
                };
                from_below[j - 1] = up;
                from_left = right;
            }
            images[i - 1] = from_left;
        }
        (Permutation::new(images).expect("a valid tiling routes pipes bijectively"), repeated)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for row in &self.tiles {
            s.extend(row.iter().map(|t| t.glyph()));
            s.push('\n');
        }
        s
    }
}

impl TryFrom<Vec<Vec<Tile>>> for Bpd {
    type Error = Error;

    fn try_from(tiles: Vec<Vec<Tile>>) -> Result<Self> {
        Bpd::new(tiles)
    }
}

impl From<Bpd> for Vec<Vec<Tile>> {
    fn from(p: Bpd) -> Self {
        p.tiles
    }
}

impl fmt::Display for Bpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The BPD whose blank tiles are `D(w)`: pipe `w(i)` rises in its column to
/// row `i` and turns east.
pub fn rothe_bpd(w: &Permutation) -> Bpd {
    let n = w.size();
    let inv = w.inverse();
    let tiles = (1..=n)
        .map(|r| {
            (1..=n)
                .map(|c| {
                    let vertical = r > inv.at(c);
                    let horizontal = c > w.at(r);
                    match (vertical, horizontal) {
                        _ if c == w.at(r) => Tile::ElbowBottomRight,
                        (true, true) => Tile::Cross,
                        (true, false) => Tile::Vertical,
                        (false, true) => Tile::Horizontal,
                        (false, false) => Tile::Blank,
                    }
                })
                .collect()
        })
        .collect();
    Bpd { tiles }
}

type Tilings = Arc<HashMap<Permutation, Vec<Bpd>>>;

fn tiling_cache() -> &'static Mutex<HashMap<usize, Tilings>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Tilings>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Every valid `n x n` tiling, grouped by permutation.
fn all_tilings(n: usize) -> Tilings {
    if let Some(t) = tiling_cache().lock().expect("cache lock").get(&n) {
        return t.clone();
    }
    let mut grid = vec![vec![Tile::Blank; n]; n];
    let mut out: HashMap<Permutation, Vec<Bpd>> = HashMap::new();
    fill(&mut grid, 0, &mut out);
    let t = Arc::new(out);
    tiling_cache().lock().expect("cache lock").insert(n, t.clone());
    t
}

fn fill(grid: &mut Vec<Vec<Tile>>, k: usize, out: &mut HashMap<Permutation, Vec<Bpd>>) {
    let n = grid.len();
    if k == n * n {
        let p = Bpd { tiles: grid.clone() };
        out.entry(p.permutation_of()).or_default().push(p);
        return;
    }
    let (i, j) = (k / n, k % n);
    let north = i > 0 && grid[i - 1][j].edges() & S != 0;
    let west = j > 0 && grid[i][j - 1].edges() & E != 0;
    let options: &[Tile] = match (north, west) {
        (false, false) => &[Tile::Blank, Tile::ElbowBottomRight],
        (true, false) => &[Tile::Vertical],
        (false, true) => &[Tile::Horizontal],
        (true, true) => &[Tile::Cross, Tile::ElbowLeftTop],
    };
    for &t in options {
        let e = t.edges();
        if j == n - 1 && e & E == 0 {
            continue;
        }
        if i == n - 1 && e & S == 0 {
            continue;
        }
        grid[i][j] = t;
        fill(grid, k + 1, out);
    }
}

fn check_bound(w: &Permutation, max_n: usize) -> Result<()> {
    if w.size() > max_n {
        return Err(Error::BoundExceeded { what: format!("BPD enumeration for n = {}", w.size()), bound: max_n });
    }
    Ok(())
}

/// `BPD(w)` by exhaustive search over edge-matched tilings.
pub fn enumerate_bpds(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    enumerate_bpds_bounded(w, DEFAULT_MAX_N)
}

pub fn enumerate_bpds_bounded(w: &Permutation, max_n: usize) -> Result<BTreeSet<Bpd>> {
    check_bound(w, max_n)?;
    let all = all_tilings(w.size());
    Ok(all.get(w).map(|v| v.iter().cloned().collect()).unwrap_or_default())
}

/// Moves the pipe through the `┌` at `(a, b)` so that it turns at row `c`
/// and column `e` instead; `None` if a tile would become illegal.
fn droop_edges(p: &Bpd, (a, b): Cell, (c, e): Cell) -> Option<Bpd> {
    let mut edges: Vec<Vec<u8>> = p.tiles.iter().map(|r| r.iter().map(|t| t.edges()).collect()).collect();
    let mut change = |cell: Cell, remove: u8, add: u8| -> bool {
        let x = &mut edges[cell.0 - 1][cell.1 - 1];
        if *x & remove != remove || (*x & !remove) & add != 0 {
            return false;
        }
        *x = (*x & !remove) | add;
        true
    };
    let mut ok = true;
    // old route: up column b from row c to a, then east along row a to e
    for r in a + 1..=c {
        ok &= change((r, b), N | if r == c { 0 } else { S }, 0);
    }
    ok &= change((a, b), S | E, 0);
    for k in b + 1..e {
        ok &= change((a, k), W | E, 0);
    }
    ok &= change((a, e), W, 0);
    // new route: east along row c from b to e, then up column e to a
    ok &= change((c, b), 0, E);
    for k in b + 1..e {
        ok &= change((c, k), 0, W | E);
    }
    ok &= change((c, e), 0, W | N);
    for r in a + 1..c {
        ok &= change((r, e), 0, N | S);
    }
    ok &= change((a, e), 0, S);
    if !ok {
        return None;
    }
    let tiles: Option<Vec<Vec<Tile>>> =
        edges.iter().map(|r| r.iter().map(|&x| Tile::from_edges(x)).collect()).collect();
    let q = Bpd { tiles: tiles? };
    q.check().ok()?;
    Some(q)
}

fn elbows_in(p: &Bpd, rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> Vec<Cell> {
    rows.flat_map(|i| cols.clone().map(move |j| (i, j))).filter(|&c| p.tile(c).is_elbow()).collect()
}

fn only_elbows(p: &Bpd, rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>, allowed: &[Cell]) -> bool {
    elbows_in(p, rows, cols).iter().all(|c| allowed.contains(c))
}

/// Ordinary droops from `p`.
pub fn droops(p: &Bpd) -> Vec<Bpd> {
    let n = p.size();
    let mut out = Vec::new();
    for (a, b) in p.cells_where(Tile::ElbowBottomRight) {
        for c in a + 1..=n {
            for e in b + 1..=n {
                if p.tile((c, e)) == Tile::Blank && only_elbows(p, a..=c, b..=e, &[(a, b)]) {
                    out.extend(droop_edges(p, (a, b), (c, e)));
                }
            }
        }
    }
    out
}

/// K-theoretic droops from `p`, in both shapes.
pub fn k_droops(p: &Bpd) -> Vec<Bpd> {
    let n = p.size();
    let mut out = Vec::new();
    for (a, b) in p.cells_where(Tile::ElbowBottomRight) {
        for c in a + 1..=n {
            for e in b + 1..=n {
                if p.tile((c, e)) != Tile::ElbowBottomRight {
                    continue;
                }
                // the target's pipe runs east to a `┘` at (c, d), then north
                // through a crossing with row a
                let mut d = e + 1;
                while d <= n && matches!(p.tile((c, d)), Tile::Horizontal | Tile::Cross) {
                    d += 1;
                }
                if d <= n
                    && p.tile((c, d)) == Tile::ElbowLeftTop
                    && (a + 1..c).all(|r| matches!(p.tile((r, d)), Tile::Vertical | Tile::Cross))
                    && p.tile((a, d)) == Tile::Cross
                    && only_elbows(p, a..=c, b..=d, &[(a, b), (c, e), (c, d)])
                {
                    out.extend(droop_edges(p, (a, b), (c, e)));
                }
                // the target sits directly above a `┘`
                if c < n
                    && p.tile((c + 1, e)) == Tile::ElbowLeftTop
                    && a < c
                    && only_elbows(p, a..=c + 1, b..=e, &[(a, b), (c, e), (c + 1, e)])
                {
                    out.extend(droop_edges(p, (a, b), (c, e)));
                }
            }
        }
    }
    out
}

fn closure<F: Fn(&Bpd) -> Vec<Bpd>>(w: &Permutation, max_n: usize, step: F) -> Result<BTreeSet<Bpd>> {
    check_bound(w, max_n)?;
    let start = rothe_bpd(w);
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for q in step(&p) {
            if q.permutation_of() == *w && seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

/// Closure of the Rothe BPD under droops and K-theoretic droops.
pub fn droop_closure(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    closure(w, DEFAULT_MAX_N, |p| {
        let mut v = droops(p);
        v.extend(k_droops(p));
        v
    })
}

/// Closure of the Rothe BPD under ordinary droops only.
pub fn reduced_droop_closure(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    closure(w, DEFAULT_MAX_N, droops)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedBpd {
    pub bpd: Bpd,
    pub marks: BTreeSet<Cell>,
}

impl MarkedBpd {
    pub fn new(bpd: Bpd, marks: BTreeSet<Cell>) -> Result<Self> {
        if let Some(c) = marks.iter().find(|&&c| bpd.tile(c) != Tile::ElbowLeftTop) {
            return Err(Error::Precondition(format!("mark at {c:?} is not on a ┘ tile")));
        }
        Ok(MarkedBpd { bpd, marks })
    }
}

/// Per-row counts of blank tiles and marks.
pub fn mbpd_weight(m: &MarkedBpd) -> Vec<usize> {
    let mut wt = vec![0; m.bpd.size()];
    for (i, _) in m.bpd.blanks().into_iter().chain(m.marks.iter().copied()) {
        wt[i - 1] += 1;
    }
    wt
}

/// Every marking of every BPD of `w`.
pub fn marked_bpds(w: &Permutation) -> Result<Vec<MarkedBpd>> {
    let mut out = Vec::new();
    for p in enumerate_bpds(w)? {
        let u: Vec<Cell> = p.upper_elbows().into_iter().collect();
        for mask in 0u32..(1 << u.len()) {
            let marks = u.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect();
            out.push(MarkedBpd { bpd: p.clone(), marks });
        }
    }
    Ok(out)
}

/// Signed sum of `x^wt` over marked BPDs.
pub fn grothendieck_via_bpd(w: &Permutation) -> Result<MultiPolynomial> {
    let n = w.size();
    let len = w.length() as i64;
    let mut f = MultiPolynomial::zero(n);
    for m in marked_bpds(w)? {
        let size = (m.bpd.blanks().len() + m.marks.len()) as i64;
        let sign = if (size - len).rem_euclid(2) == 0 { 1 } else { -1 };
        let exp = mbpd_weight(&m).into_iter().map(|x| x as u32).collect();
        f = &f + &MultiPolynomial::monomial(exp, BigInt::from(sign));
    }
    Ok(f)
}
