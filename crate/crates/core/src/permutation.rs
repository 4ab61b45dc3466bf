//! Permutations in one-line notation and the permutation classes used
//! throughout the crate (dominant, vexillary, fireworks, almost vexillary,
//! dominant fireworks-vexillary chains).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{self, WeakComposition};
use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
///
/// `images[i - 1] == w(i)`; all accessors are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of S_0");
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "longest element of S_0");
        Permutation { images: (1..=n).rev().collect() }
    }

    /// Standardize a sequence of distinct integers to a permutation of
    /// `1..=len` with the same relative order.
    pub fn flatten(values: &[usize]) -> Result<Self> {
        let mut sorted: Vec<usize> = values.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != values.len() {
            return Err(Error::InvalidPermutation(format!("{values:?} has repeated entries")));
        }
        let images = values
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Permutation::new(images)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `w s_i`: swap the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Positions `i` with `w(i) < w(i + 1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.at(i) < self.at(i + 1)).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Entry `i` counts the later positions holding smaller values.
    pub fn lehmer_code(&self) -> WeakComposition {
        let n = self.size();
        let entries = (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[j] < self.images[i]).count())
            .collect();
        WeakComposition::new(entries)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.size();
        if k > self.size() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.extend_match(pattern, 0, &mut chosen)
    }

    fn extend_match(&self, pattern: &Permutation, start: usize, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == pattern.size() {
            return true;
        }
        let remaining = pattern.size() - depth;
        for pos in start..=self.size() - remaining {
            let v = self.images[pos];
            let consistent = chosen.iter().enumerate().all(|(t, &prev)| {
                (self.images[prev] < v) == (pattern.images[t] < pattern.images[depth])
            });
            if consistent {
                chosen.push(pos);
                if self.extend_match(pattern, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn avoids(&self, pattern: &str) -> bool {
        !self.contains_pattern(&pattern.parse().expect("static pattern"))
    }

    /// 132-avoiding.
    pub fn is_dominant(&self) -> bool {
        self.avoids("132")
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        self.avoids("2143")
    }

    /// The initial terms of the maximal decreasing runs increase.
    pub fn is_fireworks(&self) -> bool {
        let initials = self.decreasing_run_initials();
        initials.windows(2).all(|p| p[0] < p[1])
    }

    pub fn decreasing_run_initials(&self) -> Vec<usize> {
        let mut initials = vec![self.images[0]];
        for p in self.images.windows(2) {
            if p[1] > p[0] {
                initials.push(p[1]);
            }
        }
        initials
    }

    /// Avoids 13254, 315264 and 316254.
    pub fn is_almost_vexillary_by_patterns(&self) -> bool {
        ["13254", "315264", "316254"].iter().all(|p| self.avoids(p))
    }

    /// The Rothe diagram with its packed columns emptied is a column
    /// permutation of a skyline diagram.
    pub fn is_almost_vexillary_by_diagram(&self) -> bool {
        let stripped = diagram::rothe(self).strip_packed();
        stripped.column_perm_of_skyline().is_some()
    }

    /// Both characterizations are evaluated; disagreement is reported as a
    /// consistency error.
    pub fn is_almost_vexillary(&self) -> Result<bool> {
        let by_pattern = self.is_almost_vexillary_by_patterns();
        let by_diagram = self.is_almost_vexillary_by_diagram();
        if by_pattern != by_diagram {
            return Err(Error::Consistency(format!(
                "almost vexillary tests disagree on {self}: patterns={by_pattern}, diagram={by_diagram}"
            )));
        }
        Ok(by_pattern)
    }

    /// Search for a segmentation into consecutive-value blocks, each
    /// vexillary or fireworks after flattening, whose block minima avoid 132.
    ///
    /// Longer leading blocks are tried first, so a vexillary permutation comes
    /// back as a single block.
    pub fn chain_decomposition(&self) -> Option<ChainWitness> {
        let mut cuts = vec![1];
        let mut kinds = Vec::new();
        let mut minima = Vec::new();
        if self.search_chain(1, &mut cuts, &mut kinds, &mut minima) {
            Some(ChainWitness { cut_points: cuts, block_kinds: kinds, block_minima: minima })
        } else {
            None
        }
    }

    fn search_chain(
        &self,
        start: usize,
        cuts: &mut Vec<usize>,
        kinds: &mut Vec<BlockKind>,
        minima: &mut Vec<usize>,
    ) -> bool {
        let n = self.size();
        if start == n + 1 {
            return true;
        }
        for end in (start..=n).rev() {
            let block = &self.images[start - 1..end];
            let Some(kind) = classify_block(block) else { continue };
            let min = *block.iter().min().unwrap();
            minima.push(min);
            if contains_132(minima) {
                minima.pop();
                continue;
            }
            cuts.push(end + 1);
            kinds.push(kind);
            if self.search_chain(end + 1, cuts, kinds, minima) {
                return true;
            }
            cuts.pop();
            kinds.pop();
            minima.pop();
        }
        false
    }

    pub fn is_fireworks_vexillary_chain(&self) -> bool {
        self.chain_decomposition().is_some()
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn contains_132(seq: &[usize]) -> bool {
    let n = seq.len();
    for a in 0..n {
        for b in a + 1..n {
            if seq[b] <= seq[a] {
                continue;
            }
            for c in b + 1..n {
                if seq[a] < seq[c] && seq[c] < seq[b] {
                    return true;
                }
            }
        }
    }
    false
}

fn classify_block(block: &[usize]) -> Option<BlockKind> {
    let min = *block.iter().min()?;
    let max = *block.iter().max()?;
    if max - min + 1 != block.len() {
        return None;
    }
    let flat = Permutation::flatten(block).ok()?;
    if flat.is_vexillary() {
        Some(BlockKind::Vexillary)
    } else if flat.is_fireworks() {
        Some(BlockKind::Fireworks)
    } else {
        None
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`"2143"`) for `n <= 9`, comma-separated otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let images = images.ok_or_else(|| Error::Parse(format!("not a permutation: {s:?}")))?;
        Permutation::new(images)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Vexillary,
    Fireworks,
}

/// Witness that a permutation is a dominant fireworks-vexillary chain.
///
/// `cut_points` runs `1 = i_0 < i_1 < ... < i_{k} = n + 1`; block `b` covers
/// positions `cut_points[b] .. cut_points[b + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainWitness {
    pub cut_points: Vec<usize>,
    pub block_kinds: Vec<BlockKind>,
    pub block_minima: Vec<usize>,
}

impl ChainWitness {
    pub fn num_blocks(&self) -> usize {
        self.block_kinds.len()
    }

    /// Positions (1-indexed, inclusive start, exclusive end) of block `b`.
    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        self.cut_points[b]..self.cut_points[b + 1]
    }

    /// Checks the witness against `w`.
    pub fn validate(&self, w: &Permutation) -> Result<()> {
        let n = w.size();
        let k = self.num_blocks();
        let bad = |msg: String| Err(Error::Precondition(format!("invalid chain witness for {w}: {msg}")));
        if self.cut_points.len() != k + 1 || self.block_minima.len() != k {
            return bad("inconsistent lengths".into());
        }
        if self.cut_points.first() != Some(&1) || self.cut_points.last() != Some(&(n + 1)) {
            return bad("cut points must start at 1 and end at n+1".into());
        }
        if self.cut_points.windows(2).any(|p| p[0] >= p[1]) {
            return bad("cut points must increase".into());
        }
        for b in 0..k {
            let block = &w.images()[self.cut_points[b] - 1..self.cut_points[b + 1] - 1];
            let min = *block.iter().min().unwrap();
            if min != self.block_minima[b] {
                return bad(format!("block {b} minimum is {min}"));
            }
            let max = *block.iter().max().unwrap();
            if max - min + 1 != block.len() {
                return bad(format!("block {b} is not a set of consecutive values"));
            }
            let flat = Permutation::flatten(block)?;
            let ok = match self.block_kinds[b] {
                BlockKind::Vexillary => flat.is_vexillary(),
                BlockKind::Fireworks => flat.is_fireworks(),
            };
            if !ok {
                return bad(format!("block {b} is not {:?}", self.block_kinds[b]));
            }
        }
        if contains_132(&self.block_minima) {
            return bad("block minima contain 132".into());
        }
        Ok(())
    }
}
