//! Diagrams dominated by a diagram, dual characters of their flagged Weyl
//! modules, and schubitope lattice points.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::convexity::{hull_lattice_points, PointSet};
use crate::diagram::{column_leq, skyline, Diagram, WeakComposition};
use crate::error::{Error, Result};
use crate::polynomial::MultiPolynomial;

pub const DEFAULT_DOMINATED_BOUND: usize = 50_000;

/// Every row set `S` with `S <= col`.
pub fn dominated_columns(col: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let target: Vec<usize> = col.iter().copied().collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(target.len());
    fn go(target: &[usize], cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        let k = cur.len();
        if k == target.len() {
            out.push(cur.iter().copied().collect());
            return;
        }
        let lo = cur.last().map_or(1, |&r| r + 1);
        for r in lo..=target[k] {
            cur.push(r);
            go(target, cur, out);
            cur.pop();
        }
    }
    go(&target, &mut cur, &mut out);
    debug_assert!(out.iter().all(|s| column_leq(s, col)));
    out
}

fn column_sets(d: &Diagram) -> Vec<BTreeSet<usize>> {
    d.columns().into_iter().map(|c| c.into_iter().collect()).collect()
}

fn dominated_count(d: &Diagram) -> usize {
    column_sets(d)
        .iter()
        .map(|c| dominated_columns(c).len())
        .fold(1usize, |acc, k| acc.saturating_mul(k))
}

/// Every `C <= D`, in the same grid as `D`.
pub fn enumerate_dominated(d: &Diagram) -> Result<Vec<Diagram>> {
    enumerate_dominated_bounded(d, DEFAULT_DOMINATED_BOUND)
}

pub fn enumerate_dominated_bounded(d: &Diagram, bound: usize) -> Result<Vec<Diagram>> {
    if dominated_count(d) > bound {
        return Err(Error::BoundExceeded { what: "number of dominated diagrams".into(), bound });
    }
    let choices: Vec<Vec<BTreeSet<usize>>> = column_sets(d).iter().map(dominated_columns).collect();
    let mut out = vec![Vec::new()];
    for options in &choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for partial in &out {
            for o in options {
                let mut p: Vec<Vec<usize>> = partial.clone();
                p.push(o.iter().copied().collect());
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(|cols| Diagram::from_columns(d.n_rows, &cols)).collect()
}

/// `{wt(C) : C <= D}`, built column by column.
pub fn chi_support(d: &Diagram) -> PointSet {
    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; d.n_rows]]);
    for col in column_sets(d) {
        if col.is_empty() {
            continue;
        }
        let options = dominated_columns(&col);
        let mut next = BTreeSet::new();
        for s in &sums {
            for o in &options {
                let mut v = s.clone();
                for &r in o {
                    v[r - 1] += 1;
                }
                next.insert(v);
            }
        }
        sums = next;
    }
    sums
}

/// Symbolic minors of the upper triangular matrix `Y = (y_ij)_{i <= j}`,
/// with `y_ij` stored as a variable of a [`MultiPolynomial`].
struct Minors {
    n: usize,
    memo: HashMap<(Vec<usize>, Vec<usize>), MultiPolynomial>,
}

impl Minors {
    fn new(n: usize) -> Self {
        Minors { n, memo: HashMap::new() }
    }

    fn num_vars(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    fn var_index(&self, i: usize, j: usize) -> usize {
        // row-major over i <= j
        (i - 1) * (2 * self.n + 2 - i) / 2 + (j - i)
    }

    /// `det Y[rows, cols]` by cofactor expansion along the first row.
    fn det(&mut self, rows: &[usize], cols: &[usize]) -> MultiPolynomial {
        let nv = self.num_vars();
        if rows.is_empty() {
            return MultiPolynomial::one(nv);
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(f) = self.memo.get(&key) {
            return f.clone();
        }
        let r0 = rows[0];
        let mut total = MultiPolynomial::zero(nv);
        for (k, &c) in cols.iter().enumerate() {
            if r0 > c {
                continue;
            }
            let rest: Vec<usize> = cols.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &x)| x).collect();
            let sub = self.det(&rows[1..], &rest);
            if sub.is_zero() {
                continue;
            }
            let term = &MultiPolynomial::var(nv, self.var_index(r0, c) + 1) * &sub;
            total = if k % 2 == 0 { &total + &term } else { &total - &term };
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Rank of an integer matrix by fraction-free elimination.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `chi_D = sum_mu m_mu x^mu`, where `m_mu` is the dimension of the span of
/// the minor products of weight `mu`.
pub fn dual_character(d: &Diagram) -> Result<MultiPolynomial> {
    dual_character_bounded(d, DEFAULT_DOMINATED_BOUND)
}

pub fn dual_character_bounded(d: &Diagram, bound: usize) -> Result<MultiPolynomial> {
    let n = d.n_rows;
    let cols: Vec<Vec<usize>> = d.columns().into_iter().filter(|c| !c.is_empty()).collect();
    if dominated_count(d) > bound {
        return Err(Error::BoundExceeded { what: "number of dominated diagrams".into(), bound });
    }
    let mut minors = Minors::new(n.max(1));
    let nv = minors.num_vars();
    let options: Vec<Vec<Vec<usize>>> = cols
        .iter()
        .map(|c| dominated_columns(&c.iter().copied().collect()).into_iter().map(|s| s.into_iter().collect()).collect())
        .collect();
    let mut by_weight: BTreeMap<Vec<u32>, Vec<MultiPolynomial>> = BTreeMap::new();
    let mut partial: Vec<(Vec<u32>, MultiPolynomial)> = vec![(vec![0; n], MultiPolynomial::one(nv))];
    for (j, col) in cols.iter().enumerate() {
        let mut next = Vec::with_capacity(partial.len() * options[j].len());
        for (wt, f) in &partial {
            for rows in &options[j] {
                let m = minors.det(rows, col);
                let mut w = wt.clone();
                for &r in rows {
                    w[r - 1] += 1;
                }
                next.push((w, f * &m));
            }
        }
        partial = next;
    }
    for (w, f) in partial {
        by_weight.entry(w).or_default().push(f);
    }
    let mut chi = MultiPolynomial::zero(n);
    for (w, products) in by_weight {
        let monomials: BTreeSet<&Vec<u32>> = products.iter().flat_map(|f| f.terms().map(|(e, _)| e)).collect();
        let index: BTreeMap<&Vec<u32>, usize> = monomials.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let matrix: Vec<Vec<BigInt>> = products
            .iter()
            .map(|f| {
                let mut row = vec![BigInt::zero(); index.len()];
                for (e, c) in f.terms() {
                    row[index[e]] = c.clone();
                }
                row
            })
            .collect();
        let rank = bareiss_rank(matrix);
        if rank == 0 {
            return Err(Error::Consistency(format!("weight {w:?} has rank zero")));
        }
        chi = &chi + &MultiPolynomial::monomial(w, BigInt::from(rank));
    }
    Ok(chi)
}

/// Lattice points of the schubitope of `D`.
pub fn schubitope_lattice_points(d: &Diagram) -> Result<PointSet> {
    hull_lattice_points(&chi_support(d))
}

/// `Some(c)` when `f = c * chi_D` coefficientwise.
pub fn is_scalar_multiple_of_chi(f: &MultiPolynomial, d: &Diagram) -> Result<Option<BigInt>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chi = dual_character(d)?;
    Ok(scalar_multiple(f, &chi))
}

/// `Some(c)` when `f = c * g`, comparing after padding to a common number of
/// variables.
pub fn scalar_multiple(f: &MultiPolynomial, g: &MultiPolynomial) -> Option<BigInt> {
    let n = f.num_vars().max(g.num_vars());
    let f = f.with_num_vars(n).ok()?;
    let g = g.with_num_vars(n).ok()?;
    if f.len() != g.len() || g.is_zero() {
        return None;
    }
    let (e, c0) = f.terms().next()?;
    let g0 = g.coefficient(e);
    if g0.is_zero() || !(c0 % &g0).is_zero() {
        return None;
    }
    let c = c0 / &g0;
    let ok = f.terms().all(|(e, a)| g.coefficient(e) * &c == *a);
    ok.then_some(c)
}

/// The unique snowy `gamma` with `snow(skyline(gamma)) = snow(skyline(alpha))`.
pub fn find_snowy_equivalent(alpha: &WeakComposition) -> Result<WeakComposition> {
    let target = skyline(alpha).snow();
    let len = alpha.len();
    let max = target.n_cols;
    let mut found = Vec::new();
    let mut cur = Vec::with_capacity(len);
    search_snowy(len, max, &mut cur, &mut |gamma| {
        let g = WeakComposition::new(gamma.to_vec());
        if skyline(&g).snow().cells() == target.cells() {
            found.push(g);
        }
    });
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        0 => Err(Error::Consistency(format!("no snowy composition shares the snow diagram of {alpha}"))),
        _ => Err(Error::Consistency(format!("several snowy compositions share the snow diagram of {alpha}: {found:?}"))),
    }
}

fn search_snowy<F: FnMut(&[usize])>(len: usize, max: usize, cur: &mut Vec<usize>, f: &mut F) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for v in 0..=max {
        if v > 0 && cur.contains(&v) {
            continue;
        }
        cur.push(v);
        search_snowy(len, max, cur, f);
        cur.pop();
    }
}

/// Coefficients of `f` are all positive.
pub fn is_positive(f: &MultiPolynomial) -> bool {
    f.terms().all(|(_, c)| c.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bubbling::{build_a, AVariant};
    use crate::convexity::support_points;
    use crate::diagram::rothe;
    use crate::permutation::Permutation;
    use crate::polynomial::{castelnuovo_mumford, lascoux};

    fn rows(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn pts(v: &[&[i64]]) -> PointSet {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn dominated_column_examples() {
        assert_eq!(dominated_columns(&rows(&[1, 3])), vec![rows(&[1, 2]), rows(&[1, 3])]);
        assert_eq!(dominated_columns(&rows(&[1])), vec![rows(&[1])]);
        assert_eq!(dominated_columns(&rows(&[2, 3])), vec![rows(&[1, 2]), rows(&[1, 3]), rows(&[2, 3])]);
        assert_eq!(dominated_columns(&rows(&[])), vec![rows(&[])]);
    }

    #[test]
    fn dominated_diagram_examples() {
        let single = Diagram::from_cells(2, 1, [(2, 1)]).unwrap();
        let got = enumerate_dominated(&single).unwrap();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&Diagram::from_cells(2, 1, [(1, 1)]).unwrap()));
        let forced = Diagram::from_cells(2, 1, [(1, 1), (2, 1)]).unwrap();
        assert_eq!(enumerate_dominated(&forced).unwrap(), vec![forced.clone()]);
        assert_eq!(enumerate_dominated(&rothe(&"132".parse().unwrap())).unwrap().len(), 2);
        let big = Diagram::bounded((1..=8).map(|j| (8, j)));
        assert!(matches!(enumerate_dominated_bounded(&big, 1000), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn support_examples() {
        let single = Diagram::from_cells(2, 1, [(2, 1)]).unwrap();
        assert_eq!(chi_support(&single), pts(&[&[1, 0], &[0, 1]]));
        assert_eq!(schubitope_lattice_points(&single).unwrap(), pts(&[&[1, 0], &[0, 1]]));
        assert_eq!(chi_support(&Diagram::empty(2, 2)), pts(&[&[0, 0]]));
        assert_eq!(schubitope_lattice_points(&Diagram::empty(2, 2)).unwrap(), pts(&[&[0, 0]]));
    }

    #[test]
    fn dual_character_examples() {
        assert_eq!(dual_character(&Diagram::bounded([(1, 1)])).unwrap().to_string(), "x1");
        let single = Diagram::from_cells(2, 1, [(2, 1)]).unwrap();
        assert_eq!(dual_character(&single).unwrap().to_string(), "x1 + x2");
        let packed = Diagram::from_cells(2, 1, [(1, 1), (2, 1)]).unwrap();
        assert_eq!(dual_character(&packed).unwrap().to_string(), "x1*x2");
        assert_eq!(dual_character(&Diagram::empty(2, 2)).unwrap(), MultiPolynomial::one(2));
        // two identical columns {2}: Sym^2 of the standard flag piece
        let twice = Diagram::from_cells(2, 2, [(2, 1), (2, 2)]).unwrap();
        assert_eq!(dual_character(&twice).unwrap().to_string(), "x1^2 + x1*x2 + x2^2");
        // a column {1,3}: minors y11*y23 - y13*y21 style, rank 1 in each weight
        let gap = Diagram::from_cells(3, 1, [(1, 1), (3, 1)]).unwrap();
        assert_eq!(dual_character(&gap).unwrap().to_string(), "x1*x2 + x1*x3");
    }

    #[test]
    fn packed_columns_give_monomials() {
        let shape = Diagram::from_columns(2, &[vec![1, 2], vec![1]]).unwrap();
        assert_eq!(dual_character(&shape).unwrap().to_string(), "x1^2*x2");
        let flag = Diagram::from_columns(3, &[vec![2, 3], vec![3]]).unwrap();
        let chi = dual_character(&flag).unwrap();
        assert!(is_positive(&chi));
        assert_eq!(support_points(&chi), chi_support(&flag));
    }

    #[test]
    fn scalar_multiple_examples() {
        let single = Diagram::from_cells(2, 1, [(2, 1)]).unwrap();
        let f = &MultiPolynomial::var(2, 1) + &MultiPolynomial::var(2, 2);
        assert_eq!(is_scalar_multiple_of_chi(&f, &single).unwrap(), Some(BigInt::one()));
        let g = f.scale(&BigInt::from(-2));
        assert_eq!(is_scalar_multiple_of_chi(&g, &single).unwrap(), Some(BigInt::from(-2)));
        assert_eq!(is_scalar_multiple_of_chi(&MultiPolynomial::var(2, 1), &single).unwrap(), None);
        assert_eq!(is_scalar_multiple_of_chi(&MultiPolynomial::zero(2), &single), Err(Error::ZeroPolynomial));

        let w: Permutation = "1624735".parse().unwrap();
        let top = rothe(&w).d_top(&build_a(&w, AVariant::Left).unwrap()).unwrap();
        let c = is_scalar_multiple_of_chi(&castelnuovo_mumford(&w), &top).unwrap().unwrap();
        assert!(c.abs() >= BigInt::one());
        assert_eq!(chi_support(&top), support_points(&castelnuovo_mumford(&w)));
        assert_eq!(schubitope_lattice_points(&top).unwrap(), chi_support(&top));
    }

    #[test]
    fn snowy_equivalents() {
        let a = WeakComposition::new(vec![0, 6, 0, 4, 0, 1, 1, 0]);
        let g = find_snowy_equivalent(&a).unwrap();
        assert!(g.is_snowy());
        assert_eq!(skyline(&g).snow().cells(), skyline(&a).snow().cells());
        let snowy = WeakComposition::new(vec![2, 0, 1]);
        assert_eq!(find_snowy_equivalent(&snowy).unwrap(), snowy);
        let b = WeakComposition::new(vec![1, 1]);
        let gb = find_snowy_equivalent(&b).unwrap();
        let lb = lascoux(&b).top_component().unwrap();
        let lg = lascoux(&gb).top_component().unwrap();
        assert!(scalar_multiple(&lb, &lg).is_some());
    }

    #[test]
    fn support_matches_character_small() {
        // every diagram in a 3x3 grid with at most 5 cells
        let cells: Vec<(usize, usize)> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << 9) {
            if mask.count_ones() > 5 {
                continue;
            }
            let d = Diagram::from_cells(3, 3, cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c)).unwrap();
            let chi = dual_character(&d).unwrap();
            assert!(is_positive(&chi));
            assert_eq!(support_points(&chi), chi_support(&d), "{d:?}");
        }
    }
}
