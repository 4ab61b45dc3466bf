//! M-convexity, exact lattice points of convex hulls, and saturated Newton
//! polytopes.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::MultiPolynomial;

/// A finite set of integer vectors of a common dimension.
pub type PointSet = BTreeSet<Vec<i64>>;

pub fn support_points(f: &MultiPolynomial) -> PointSet {
    f.terms().map(|(e, _)| e.iter().map(|&a| a as i64).collect()).collect()
}

/// Why a set failed the exchange axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MConvexWitness {
    /// Two points with different coordinate sums.
    UnequalSums { x: Vec<i64>, y: Vec<i64> },
    /// `x_i > y_i` but no `j` completes the exchange (`i` is 1-indexed).
    Exchange { x: Vec<i64>, y: Vec<i64>, i: usize },
}

/// Checks the symmetric exchange axiom for every pair and index.
pub fn m_convexity(s: &PointSet) -> std::result::Result<(), MConvexWitness> {
    let mut iter = s.iter();
    if let Some(first) = iter.next() {
        let sum: i64 = first.iter().sum();
        if let Some(other) = s.iter().find(|p| p.iter().sum::<i64>() != sum) {
            return Err(MConvexWitness::UnequalSums { x: first.clone(), y: other.clone() });
        }
    }
    let lookup: HashSet<&[i64]> = s.iter().map(|p| p.as_slice()).collect();
    let mut scratch_a = Vec::new();
    let mut scratch_b = Vec::new();
    for x in s.iter().rev() {
        for y in s.iter().rev() {
            for i in 0..x.len() {
                if x[i] <= y[i] {
                    continue;
                }
                let ok = (0..x.len()).any(|j| {
                    if x[j] >= y[j] {
                        return false;
                    }
                    scratch_a.clear();
                    scratch_a.extend_from_slice(x);
                    scratch_a[i] -= 1;
                    scratch_a[j] += 1;
                    scratch_b.clear();
                    scratch_b.extend_from_slice(y);
                    scratch_b[j] -= 1;
                    scratch_b[i] += 1;
                    lookup.contains(scratch_a.as_slice()) && lookup.contains(scratch_b.as_slice())
                });
                if !ok {
                    return Err(MConvexWitness::Exchange { x: x.clone(), y: y.clone(), i: i + 1 });
                }
            }
        }
    }
    Ok(())
}

pub fn is_m_convex(s: &PointSet) -> bool {
    m_convexity(s).is_ok()
}

/// Decides `p in conv(points)` exactly.
pub fn in_convex_hull(points: &[Vec<i64>], p: &[i64]) -> bool {
    if points.iter().any(|v| v.as_slice() == p) {
        return true;
    }
    // Restrict to the smallest face containing p: if p attains the minimum
    // (or maximum) of a coordinate over the candidates, only candidates
    // attaining it can carry weight.
    let mut cand: Vec<&Vec<i64>> = points.iter().collect();
    loop {
        if cand.is_empty() {
            return false;
        }
        let before = cand.len();
        for k in 0..p.len() {
            let lo = cand.iter().map(|v| v[k]).min().unwrap();
            let hi = cand.iter().map(|v| v[k]).max().unwrap();
            if p[k] < lo || p[k] > hi {
                return false;
            }
            if p[k] == lo {
                cand.retain(|v| v[k] == lo);
            } else if p[k] == hi {
                cand.retain(|v| v[k] == hi);
            }
        }
        if cand.len() == before {
            break;
        }
    }
    if cand.len() == 1 {
        return cand[0].as_slice() == p;
    }
    lp_feasible(&cand, p)
}

/// Phase-one simplex over the rationals with Bland's rule for
/// `sum lambda_v v = p, sum lambda_v = 1, lambda >= 0`.
fn lp_feasible(points: &[&Vec<i64>], p: &[i64]) -> bool {
    let d = p.len();
    let m = d + 1;
    let nv = points.len();
    let width = nv + m + 1;
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for r in 0..m {
        let (mut row, rhs): (Vec<BigRational>, i64) = if r < d {
            (points.iter().map(|v| rat(v[r])).collect(), p[r])
        } else {
            (vec![BigRational::one(); nv], 1)
        };
        let flip = rhs < 0;
        if flip {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row.extend((0..m).map(|a| if a == r { BigRational::one() } else { BigRational::zero() }));
        row.push(rat(if flip { -rhs } else { rhs }));
        tab.push(row);
    }
    // objective: minimize sum of artificials, stored as reduced costs
    let mut obj = vec![BigRational::zero(); width];
    for row in tab.iter() {
        for c in 0..nv {
            obj[c] -= &row[c];
        }
        obj[width - 1] -= &row[width - 1];
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    loop {
        let Some(enter) = (0..nv + m).find(|&c| tab[m][c].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][width - 1] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else { break };
        let pivot = tab[pr][enter].clone();
        for c in 0..width {
            tab[pr][c] = &tab[pr][c] / &pivot;
        }
        let pivot_row = tab[pr].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for c in 0..width {
                if !pivot_row[c].is_zero() {
                    row[c] -= &factor * &pivot_row[c];
                }
            }
        }
        basis[pr] = enter;
    }
    tab[m][width - 1].is_zero()
}

/// All integer points of `conv(s)`; candidates come from the bounding box
/// restricted to the range of coordinate sums.
pub fn hull_lattice_points(s: &PointSet) -> Result<PointSet> {
    let first = s.iter().next().ok_or_else(|| Error::Precondition("empty point set".into()))?;
    let dim = first.len();
    let lo: Vec<i64> = (0..dim).map(|k| s.iter().map(|v| v[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..dim).map(|k| s.iter().map(|v| v[k]).max().unwrap()).collect();
    let sum_lo = s.iter().map(|v| v.iter().sum::<i64>()).min().unwrap();
    let sum_hi = s.iter().map(|v| v.iter().sum::<i64>()).max().unwrap();
    let points: Vec<Vec<i64>> = s.iter().cloned().collect();
    let mut out = PointSet::new();
    let mut cur = Vec::with_capacity(dim);
    box_points(&lo, &hi, sum_lo, sum_hi, &mut cur, &mut |p| {
        if s.contains(p) || in_convex_hull(&points, p) {
            out.insert(p.to_vec());
        }
    });
    Ok(out)
}

fn box_points<F: FnMut(&[i64])>(lo: &[i64], hi: &[i64], sum_lo: i64, sum_hi: i64, cur: &mut Vec<i64>, f: &mut F) {
    let k = cur.len();
    if k == lo.len() {
        f(cur);
        return;
    }
    let partial: i64 = cur.iter().sum();
    let rest_lo: i64 = lo[k + 1..].iter().sum();
    let rest_hi: i64 = hi[k + 1..].iter().sum();
    for v in lo[k]..=hi[k] {
        let total_lo = partial + v + rest_lo;
        let total_hi = partial + v + rest_hi;
        if total_hi < sum_lo || total_lo > sum_hi {
            continue;
        }
        cur.push(v);
        box_points(lo, hi, sum_lo, sum_hi, cur, f);
        cur.pop();
    }
}

/// `supp(f)` equals the lattice points of its Newton polytope.
pub fn is_snp(f: &MultiPolynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let supp = support_points(f);
    Ok(hull_lattice_points(&supp)? == supp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Permutation;
    use crate::polynomial::{grothendieck, homogenized_grothendieck};

    fn ps(points: &[&[i64]]) -> PointSet {
        points.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn m_convex_examples() {
        assert!(is_m_convex(&ps(&[&[1, 0], &[0, 1]])));
        assert_eq!(
            m_convexity(&ps(&[&[2, 0], &[0, 2]])),
            Err(MConvexWitness::Exchange { x: vec![2, 0], y: vec![0, 2], i: 1 })
        );
        let h = homogenized_grothendieck(&"132".parse::<Permutation>().unwrap()).unwrap();
        let supp = support_points(&h);
        assert_eq!(supp, ps(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[1, 1, 0, 0]]));
        assert!(is_m_convex(&supp));
        assert!(matches!(m_convexity(&ps(&[&[1, 0], &[1, 1]])), Err(MConvexWitness::UnequalSums { .. })));
    }

    #[test]
    fn hull_examples() {
        assert_eq!(hull_lattice_points(&ps(&[&[0, 0], &[2, 0]])).unwrap(), ps(&[&[0, 0], &[1, 0], &[2, 0]]));
        assert_eq!(hull_lattice_points(&ps(&[&[1, 0], &[0, 1]])).unwrap(), ps(&[&[1, 0], &[0, 1]]));
        let tri = hull_lattice_points(&ps(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(tri, ps(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
        assert!(hull_lattice_points(&PointSet::new()).is_err());
    }

    #[test]
    fn hull_detects_interior_points() {
        // the square's centre is reachable only through the LP
        let sq = ps(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(hull_lattice_points(&sq).unwrap().len(), 9);
        let skinny = ps(&[&[0, 0], &[3, 1]]);
        assert_eq!(hull_lattice_points(&skinny).unwrap(), skinny);
        assert!(in_convex_hull(&[vec![0, 0, 0], vec![2, 2, 0], vec![0, 2, 2]], &[1, 2, 1]));
        assert!(!in_convex_hull(&[vec![0, 0, 0], vec![2, 2, 0], vec![0, 2, 2]], &[1, 1, 1]));
    }

    #[test]
    fn snp_examples() {
        let x1_plus_x2 = MultiPolynomial::from_terms(2, [(vec![1, 0], BigInt::one()), (vec![0, 1], BigInt::one())]).unwrap();
        assert!(is_snp(&x1_plus_x2).unwrap());
        let squares = MultiPolynomial::from_terms(2, [(vec![2, 0], BigInt::one()), (vec![0, 2], BigInt::one())]).unwrap();
        assert!(!is_snp(&squares).unwrap());
        assert!(is_snp(&grothendieck(&"132".parse().unwrap())).unwrap());
        assert_eq!(is_snp(&MultiPolynomial::zero(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn single_points_are_trivial() {
        let s = ps(&[&[3, 1, 4]]);
        assert!(is_m_convex(&s));
        assert_eq!(hull_lattice_points(&s).unwrap(), s);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        /// Closure of a seed set under single exchange steps inside a box,
        /// then filtered to an M-convex set by repeated exchange completion.
        fn exchange_closure(seed: &PointSet, bound: i64) -> PointSet {
            let mut set = seed.clone();
            loop {
                let mut added = Vec::new();
                for x in &set {
                    for y in &set {
                        for i in 0..x.len() {
                            if x[i] <= y[i] {
                                continue;
                            }
                            for j in 0..x.len() {
                                if x[j] < y[j] {
                                    let mut a = x.clone();
                                    a[i] -= 1;
                                    a[j] += 1;
                                    let mut b = y.clone();
                                    b[j] -= 1;
                                    b[i] += 1;
                                    for c in [a, b] {
                                        if c.iter().all(|&t| t >= 0 && t <= bound) && !set.contains(&c) {
                                            added.push(c);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if added.is_empty() {
                    return set;
                }
                set.extend(added);
            }
        }

        fn seed() -> impl Strategy<Value = PointSet> {
            (2i64..5).prop_flat_map(|sum| {
                proptest::collection::btree_set(
                    proptest::collection::vec(0i64..=sum, 3).prop_filter_map("slice", move |mut v| {
                        let partial = v[0] + v[1];
                        if partial > sum {
                            return None;
                        }
                        v[2] = sum - partial;
                        Some(v)
                    }),
                    1..4,
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn m_convex_sets_have_snp(s in seed()) {
                let closed = exchange_closure(&s, 4);
                if is_m_convex(&closed) {
                    let indicator = MultiPolynomial::indicator(
                        3,
                        closed.iter().map(|p| p.iter().map(|&a| a as u32).collect()),
                    ).unwrap();
                    prop_assert!(is_snp(&indicator).unwrap());
                }
            }

            #[test]
            fn hull_is_idempotent_and_contains(s in seed()) {
                let h = hull_lattice_points(&s).unwrap();
                prop_assert!(s.is_subset(&h));
                prop_assert_eq!(hull_lattice_points(&h).unwrap(), h);
            }
        }
    }
}
