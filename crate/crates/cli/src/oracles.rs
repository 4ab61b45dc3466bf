//! Slow reference implementations used to cross-check the convexity code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use schubkit::convexity::PointSet;

fn subset_sum(x: &[i64], mask: usize) -> i64 {
    x.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).sum()
}

/// A finite set is M-convex exactly when it is the set of integer points of
/// the base polytope of the submodular function `f(X) = max_{x in S} x(X)`.
pub fn is_m_convex_by_base_polytope(s: &PointSet) -> bool {
    let Some(first) = s.iter().next() else { return true };
    let dim = first.len();
    let full = (1usize << dim) - 1;
    let f: Vec<i64> = (0..=full).map(|m| s.iter().map(|x| subset_sum(x, m)).max().unwrap()).collect();
    for a in 0..=full {
        for b in 0..=full {
            if f[a] + f[b] < f[a | b] + f[a & b] {
                return false;
            }
        }
    }
    if s.iter().any(|x| subset_sum(x, full) != f[full]) {
        return false;
    }
    let lo: Vec<i64> = (0..dim).map(|i| f[full] - f[full & !(1 << i)]).collect();
    let hi: Vec<i64> = (0..dim).map(|i| f[1 << i]).collect();
    let mut base = PointSet::new();
    for_box(&lo, &hi, &mut |x| {
        if subset_sum(x, full) == f[full] && (1..full).all(|m| subset_sum(x, m) <= f[m]) {
            base.insert(x.to_vec());
        }
    });
    base == *s
}

fn for_box<F: FnMut(&[i64])>(lo: &[i64], hi: &[i64], f: &mut F) {
    fn rec<F: FnMut(&[i64])>(lo: &[i64], hi: &[i64], cur: &mut Vec<i64>, f: &mut F) {
        let k = cur.len();
        if k == lo.len() {
            f(cur);
            return;
        }
        for v in lo[k]..=hi[k] {
            cur.push(v);
            rec(lo, hi, cur, f);
            cur.pop();
        }
    }
    rec(lo, hi, &mut Vec::new(), f)
}

/// Unique solution of `m * lambda = rhs` when `m` has full column rank and
/// the system is consistent.
fn solve_full_rank(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>, cols: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    for (r, c) in (0..cols).enumerate() {
        let pivot = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, pivot);
        rhs.swap(r, pivot);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] / &m[r][c];
                let pivot_row = m[r].clone();
                for (k, v) in pivot_row.iter().enumerate().skip(c) {
                    m[i][k] -= &factor * v;
                }
                let delta = &factor * &rhs[r];
                rhs[i] -= delta;
            }
        }
    }
    if rhs[cols..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| &rhs[c] / &m[c][c]).collect())
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn is_convex_combination(points: &[&Vec<i64>], p: &[i64]) -> bool {
    let dim = p.len();
    let k = points.len();
    let mut m: Vec<Vec<BigRational>> = (0..dim).map(|r| points.iter().map(|v| rat(v[r])).collect()).collect();
    m.push(vec![rat(1); k]);
    let mut rhs: Vec<BigRational> = p.iter().map(|&v| rat(v)).collect();
    rhs.push(rat(1));
    match solve_full_rank(m, rhs, k) {
        Some(lambda) => lambda.iter().all(|l| !l.is_negative()),
        None => false,
    }
}

fn subsets_up_to<T: Clone>(items: &[T], max: usize, f: &mut impl FnMut(&[T]) -> bool) -> bool {
    fn rec<T: Clone>(items: &[T], start: usize, max: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T]) -> bool) -> bool {
        if !cur.is_empty() && f(cur) {
            return true;
        }
        if cur.len() == max {
            return false;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            if rec(items, i + 1, max, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, 0, max, &mut Vec::new(), f)
}

/// Integer points of the bounding box that are convex combinations of some
/// affinely independent subset of `s` (at most `dim + 1` points suffice).
pub fn hull_points_by_caratheodory(s: &PointSet) -> PointSet {
    let Some(first) = s.iter().next() else { return PointSet::new() };
    let dim = first.len();
    let lo: Vec<i64> = (0..dim).map(|k| s.iter().map(|v| v[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..dim).map(|k| s.iter().map(|v| v[k]).max().unwrap()).collect();
    let pts: Vec<&Vec<i64>> = s.iter().collect();
    let mut out = PointSet::new();
    for_box(&lo, &hi, &mut |p| {
        if subsets_up_to(&pts, dim + 1, &mut |sub| is_convex_combination(sub, p)) {
            out.insert(p.to_vec());
        }
    });
    out
}

/// `1..=6` random points with coordinates in `-2..=3`.
pub fn random_point_set(rng: &mut StdRng, dim: usize) -> PointSet {
    let count = rng.gen_range(1..=6);
    (0..count).map(|_| (0..dim).map(|_| rng.gen_range(-2..=3)).collect()).collect()
}

fn compositions(total: i64, dim: usize) -> Vec<Vec<i64>> {
    if dim == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, dim - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn minkowski(a: &PointSet, b: &PointSet) -> PointSet {
    a.iter().flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(u, v)| u + v).collect())).collect()
}

/// A mix of arbitrary equal-sum sets, Minkowski sums of coordinate simplices
/// (always M-convex), and such sums with one point removed.
pub fn random_test_set(rng: &mut StdRng, dim: usize) -> PointSet {
    match rng.gen_range(0..4) {
        0 => {
            let total = rng.gen_range(0..=3);
            let pool = compositions(total, dim);
            let count = rng.gen_range(1..=pool.len().min(6));
            pool.choose_multiple(rng, count).cloned().collect()
        }
        1 => random_point_set(rng, dim),
        kind => {
            let mut s: PointSet = [vec![0; dim]].into();
            for _ in 0..rng.gen_range(1..=3) {
                let mut simplex = PointSet::new();
                while simplex.is_empty() {
                    for i in 0..dim {
                        if rng.gen_bool(0.5) {
                            let mut e = vec![0; dim];
                            e[i] = 1;
                            simplex.insert(e);
                        }
                    }
                }
                s = minkowski(&s, &simplex);
            }
            if kind == 3 && s.len() > 1 {
                let v: Vec<Vec<i64>> = s.iter().cloned().collect();
                s.remove(v.choose(rng).unwrap());
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ps(points: &[&[i64]]) -> PointSet {
        points.iter().map(|p| p.to_vec()).collect::<BTreeSet<_>>()
    }

    #[test]
    fn base_polytope_examples() {
        assert!(is_m_convex_by_base_polytope(&ps(&[&[1, 0], &[0, 1]])));
        assert!(!is_m_convex_by_base_polytope(&ps(&[&[2, 0], &[0, 2]])));
        assert!(is_m_convex_by_base_polytope(&ps(&[&[2, 0], &[1, 1], &[0, 2]])));
        assert!(!is_m_convex_by_base_polytope(&ps(&[&[1, 0], &[0, 2]])));
        assert!(!is_m_convex_by_base_polytope(&ps(&[&[1, 1, 0], &[0, 0, 2]])));
        assert!(is_m_convex_by_base_polytope(&ps(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])));
    }

    #[test]
    fn caratheodory_examples() {
        let tri = ps(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(hull_points_by_caratheodory(&tri).len(), 6);
        let seg = ps(&[&[0, 0, 0], &[2, 2, 2]]);
        assert_eq!(hull_points_by_caratheodory(&seg), ps(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]]));
        assert_eq!(hull_points_by_caratheodory(&ps(&[&[3]])), ps(&[&[3]]));
    }
}
