//! The orthodontic sequence of a %-avoiding diagram and the polynomial it
//! produces.

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::polynomial::MultiPolynomial;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthodonticSequence {
    /// Rows whose swap with the row below fixes a missing tooth.
    pub i_seq: Vec<usize>,
    /// `k_vec[a - 1]` counts packed columns of the input with `a` cells.
    pub k_vec: Vec<usize>,
    /// Nonempty packed columns right after each swap.
    pub m_seq: Vec<usize>,
}

fn swap_rows(d: &Diagram, i: usize) -> Diagram {
    let cells = d.cells().iter().map(|&(r, c)| {
        if r == i {
            (i + 1, c)
        } else if r == i + 1 {
            (i, c)
        } else {
            (r, c)
        }
    });
    Diagram::from_cells(d.n_rows, d.n_cols, cells).expect("row swap stays in the grid")
}

pub fn orthodontic_sequence(d: &Diagram) -> Result<OrthodonticSequence> {
    if !d.is_percent_avoiding() {
        return Err(Error::NotPercentAvoiding);
    }
    let n = d.n_rows;
    let mut k_vec = vec![0; n];
    for j in d.packed_columns() {
        k_vec[d.column(j).len() - 1] += 1;
    }
    let skyline_like = d.column_perm_of_skyline().is_some();
    let mut seq = OrthodonticSequence { i_seq: Vec::new(), k_vec, m_seq: Vec::new() };
    let guard = n * n * d.n_cols.max(1) + 1;
    let mut cur = d.strip_packed();
    while !cur.is_empty() {
        if seq.i_seq.len() > guard {
            return Err(Error::Consistency(format!("orthodontia did not terminate on {d:?}")));
        }
        let j = cur.cells().iter().map(|c| c.1).min().expect("nonempty");
        let rows = cur.column(j);
        let i = (1..rows[rows.len() - 1])
            .find(|&r| !rows.contains(&r) && rows.contains(&(r + 1)))
            .expect("a non-packed column has a missing tooth");
        let swapped = swap_rows(&cur, i);
        if skyline_like && swapped.column_perm_of_skyline().is_none() {
            return Err(Error::Consistency("swap left the column-permuted skyline class".into()));
        }
        seq.i_seq.push(i);
        seq.m_seq.push(swapped.packed_columns().len());
        cur = swapped.strip_packed();
    }
    Ok(seq)
}

fn omega_power(n: usize, a: usize, k: usize) -> MultiPolynomial {
    MultiPolynomial::omega(n, a).pow(k as u32)
}

/// `omega^k pi_{i_1}(omega_{i_1}^{m_1} pi_{i_2}(...))` in `n_rows` variables.
pub fn eval_orthodontia(d: &Diagram) -> Result<MultiPolynomial> {
    let seq = orthodontic_sequence(d)?;
    let n = d.n_rows.max(1);
    let mut f = MultiPolynomial::one(n);
    for (&i, &m) in seq.i_seq.iter().zip(&seq.m_seq).rev() {
        f = (&omega_power(n, i, m) * &f).demazure_lascoux(i)?;
    }
    for (a, &k) in seq.k_vec.iter().enumerate() {
        f = &omega_power(n, a + 1, k) * &f;
    }
    Ok(f)
}

/// Every omega factor gathered innermost; valid for column permutations of
/// skyline diagrams.
pub fn eval_orthodontia_flat(d: &Diagram) -> Result<MultiPolynomial> {
    if d.column_perm_of_skyline().is_none() {
        return Err(Error::Precondition("diagram is not a column permutation of a skyline".into()));
    }
    let seq = orthodontic_sequence(d)?;
    let n = d.n_rows.max(1);
    let mut f = MultiPolynomial::one(n);
    for (a, &k) in seq.k_vec.iter().enumerate() {
        f = &omega_power(n, a + 1, k) * &f;
    }
    for (&i, &m) in seq.i_seq.iter().zip(&seq.m_seq) {
        f = &omega_power(n, i, m) * &f;
    }
    for &i in seq.i_seq.iter().rev() {
        f = f.demazure_lascoux(i)?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{rothe, skyline, WeakComposition};
    use crate::permutation::Permutation;
    use crate::polynomial::{grothendieck, lascoux};

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn sequence_examples() {
        let d132 = rothe(&"132".parse().unwrap());
        let s = orthodontic_sequence(&d132).unwrap();
        assert_eq!((s.i_seq, s.m_seq), (vec![1], vec![1]));
        assert!(s.k_vec.iter().all(|&k| k == 0));

        let s = orthodontic_sequence(&skyline(&comp(&[2, 1]))).unwrap();
        assert!(s.i_seq.is_empty() && s.m_seq.is_empty());
        assert_eq!(s.k_vec, vec![1, 1]);

        let s = orthodontic_sequence(&Diagram::empty(3, 3)).unwrap();
        assert_eq!(s, OrthodonticSequence { k_vec: vec![0; 3], ..Default::default() });

        let bad = Diagram::bounded([(1, 2), (2, 1)]);
        assert_eq!(orthodontic_sequence(&bad), Err(Error::NotPercentAvoiding));
    }

    #[test]
    fn eval_examples() {
        let p132: Permutation = "132".parse().unwrap();
        assert_eq!(eval_orthodontia(&rothe(&p132)).unwrap(), grothendieck(&p132));
        assert_eq!(eval_orthodontia(&rothe(&p132)).unwrap().to_string(), "x1 + x2 - x1*x2");
        assert_eq!(eval_orthodontia(&skyline(&comp(&[2, 1]))).unwrap().to_string(), "x1^2*x2");
        assert_eq!(eval_orthodontia(&Diagram::empty(2, 2)).unwrap(), MultiPolynomial::one(2));
        assert_eq!(eval_orthodontia_flat(&skyline(&comp(&[0, 1]))).unwrap().to_string(), "x1 + x2 - x1*x2");
        assert_eq!(eval_orthodontia_flat(&skyline(&comp(&[2, 1]))).unwrap().to_string(), "x1^2*x2");
        assert!(eval_orthodontia_flat(&Diagram::bounded([(2, 1), (1, 2)])).is_err());
    }

    #[test]
    fn matches_grothendieck_on_s5() {
        for w in Permutation::all(5) {
            assert_eq!(eval_orthodontia(&rothe(&w)).unwrap(), grothendieck(&w), "{w}");
        }
    }

    #[test]
    fn matches_lascoux_small() {
        for a in WeakComposition::all_bounded(3, 4) {
            let sky = skyline(&a);
            assert_eq!(eval_orthodontia(&sky).unwrap(), lascoux(&a), "{a}");
            assert_eq!(eval_orthodontia_flat(&sky).unwrap(), lascoux(&a), "{a}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]

            #[test]
            fn column_shuffles_of_skylines_agree(
                entries in proptest::collection::vec(0usize..4, 1..4),
                seed in any::<u64>(),
            ) {
                use rand::{seq::SliceRandom, SeedableRng};
                let a = WeakComposition::new(entries);
                let sky = skyline(&a);
                let mut order: Vec<usize> = (1..=sky.n_cols).collect();
                order.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
                let shuffled = sky.permute_columns(&order).unwrap();
                let expected = lascoux(&a);
                prop_assert_eq!(&eval_orthodontia(&shuffled).unwrap(), &expected);
                prop_assert_eq!(&eval_orthodontia_flat(&shuffled).unwrap(), &expected);
            }
        }
    }
}
