//! Sparse multivariate polynomials over the integers, divided differences,
//! Demazure-Lascoux operators, and the Grothendieck / Schubert / Lascoux
//! recursions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::WeakComposition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub type ExponentVector = Vec<u32>;

/// Integer polynomial in `num_vars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPolynomial {
    num_vars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl MultiPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        MultiPolynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::monomial(vec![0; num_vars], BigInt::one())
    }

    pub fn monomial(exp: ExponentVector, coef: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        if !coef.is_zero() {
            p.terms.insert(exp, coef);
        }
        p
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut exp = vec![0; num_vars];
        exp[i - 1] = 1;
        Self::monomial(exp, BigInt::one())
    }

    /// `omega_i = x_1 x_2 ... x_i`.
    pub fn omega(num_vars: usize, i: usize) -> Self {
        let exp = (0..num_vars).map(|k| u32::from(k < i)).collect();
        Self::monomial(exp, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, BigInt)>>(num_vars: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        for (exp, c) in terms {
            if exp.len() != num_vars {
                return Err(Error::Precondition(format!("exponent {exp:?} has length != {num_vars}")));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial viewed in `n` variables; fails if a dropped variable occurs.
    pub fn with_num_vars(&self, n: usize) -> Result<Self> {
        let mut out = Self::zero(n);
        for (exp, c) in &self.terms {
            if exp.iter().skip(n).any(|&e| e > 0) {
                return Err(Error::Precondition(format!("cannot drop variables in use from {exp:?}")));
            }
            let mut e: ExponentVector = exp.iter().take(n).copied().collect();
            e.resize(n, 0);
            out.terms.insert(e, c.clone());
        }
        Ok(out)
    }

    fn padded(&self, n: usize) -> Self {
        if n == self.num_vars {
            self.clone()
        } else {
            self.with_num_vars(n).expect("padding never drops variables")
        }
    }

    /// Renames `x_k` to `x_{k + offset}` inside a polynomial in `total` variables.
    pub fn shift_vars(&self, offset: usize, total: usize) -> Result<Self> {
        let mut out = Self::zero(total);
        for (exp, c) in &self.terms {
            let mut e = vec![0; total];
            for (k, &a) in exp.iter().enumerate() {
                if a > 0 {
                    if k + offset >= total {
                        return Err(Error::Precondition("shift exceeds variable count".into()));
                    }
                    e[k + offset] = a;
                }
            }
            out.terms.insert(e, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        MultiPolynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &[u32]) -> Self {
        let n = self.num_vars.max(exp.len());
        let base = self.padded(n);
        let terms = base
            .terms
            .into_iter()
            .map(|(mut e, c)| {
                for (k, &a) in exp.iter().enumerate() {
                    e[k] += a;
                }
                (e, c)
            })
            .collect();
        MultiPolynomial { num_vars: n, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Restriction to terms of total degree `k`.
    pub fn homogeneous_component(&self, k: u32) -> Self {
        MultiPolynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest-degree homogeneous component.
    pub fn top_component(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    /// Lowest-degree homogeneous component.
    pub fn lowest_component(&self) -> Result<Self> {
        let d = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// `s_i f`: swap `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        MultiPolynomial { num_vars: self.num_vars, terms }
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        i < self.num_vars && self.swap_vars(i) == *self
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
    ///
    /// For `x_i^p x_{i+1}^q` with `p > q` the quotient is
    /// `(x_i x_{i+1})^q (x_i^{p-q-1} + x_i^{p-q-2} x_{i+1} + ... + x_{i+1}^{p-q-1})`;
    /// `p < q` gives the negative of the mirrored sum.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.num_vars {
            return Err(Error::Precondition(format!("divided difference index {i} out of range 1..{}", self.num_vars)));
        }
        let (a, b) = (i - 1, i);
        let mut out = Self::zero(self.num_vars);
        for (exp, c) in &self.terms {
            let (p, q) = (exp[a], exp[b]);
            if p == q {
                continue;
            }
            let (hi, lo, sign) = if p > q { (p, q, c.clone()) } else { (q, p, -c.clone()) };
            let gap = hi - lo;
            for k in 0..gap {
                let mut e = exp.clone();
                e[a] = lo + gap - 1 - k;
                e[b] = lo + k;
                out.add_term(e, sign.clone());
            }
        }
        Ok(out)
    }

    /// `pi_i(f) = partial_i(x_i (1 - x_{i+1}) f)`.
    pub fn demazure_lascoux(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.num_vars {
            return Err(Error::Precondition(format!("operator index {i} out of range 1..{}", self.num_vars)));
        }
        let n = self.num_vars;
        let xi = Self::var(n, i);
        let factor = &xi - &(&xi * &Self::var(n, i + 1));
        (&factor * self).divided_difference(i)
    }

    /// Canonical term order: increasing total degree, then lexicographically
    /// decreasing exponent (so `x1` precedes `x2`).
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| graded_key(a).cmp(&graded_key(b)).then_with(|| b.cmp(a)));
        v
    }

    /// Leading term in graded lex order (highest degree, then lex largest with `x1 > x2 > ...`).
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().max_by(|(a, _), (b, _)| graded_key(a).cmp(&graded_key(b)).then_with(|| a.cmp(b)))
    }

    /// Polynomial with every coefficient replaced by 1 (indicator of the support).
    pub fn indicator<I: IntoIterator<Item = ExponentVector>>(num_vars: usize, support: I) -> Result<Self> {
        Self::from_terms(num_vars, support.into_iter().map(|e| (e, BigInt::one())))
    }

    /// Renders with variable names `x1, x2, ...`; when `z_last` is set the last
    /// variable prints as `z`.
    pub fn to_text(&self, z_last: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (exp, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(v, &a)| {
                    let name = if z_last && v + 1 == self.num_vars { "z".to_string() } else { format!("x{}", v + 1) };
                    if a == 1 {
                        name
                    } else {
                        format!("{name}^{a}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

fn graded_key(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let n = self.num_vars.max(rhs.num_vars);
        let mut out = self.padded(n);
        for (e, c) in rhs.padded(n).terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn neg(self) -> MultiPolynomial {
        MultiPolynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let n = self.num_vars.max(rhs.num_vars);
        let (a, b) = (self.padded(n), rhs.padded(n));
        let mut out = MultiPolynomial::zero(n);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: ExponentVector,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    num_vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermRepr { exp: e.clone(), coef: c.to_string() })
            .collect();
        PolyRepr { num_vars: self.num_vars, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: BigInt = t.coef.parse().map_err(D::Error::custom)?;
            terms.push((t.exp, c));
        }
        MultiPolynomial::from_terms(repr.num_vars, terms).map_err(D::Error::custom)
    }
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}` in `n` variables.
pub fn staircase(n: usize) -> MultiPolynomial {
    let exp = (0..n).map(|k| (n - 1 - k) as u32).collect();
    MultiPolynomial::monomial(exp, BigInt::one())
}

fn groth_cache() -> &'static RwLock<HashMap<Permutation, MultiPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, MultiPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn schub_cache() -> &'static RwLock<HashMap<Permutation, MultiPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, MultiPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Walks up from `w` to the longest element through smallest ascents, then
/// applies `step(i, f)` back down. Intermediate values are memoized.
fn descend_from_top<F>(
    w: &Permutation,
    cache: &RwLock<HashMap<Permutation, MultiPolynomial>>,
    step: F,
) -> MultiPolynomial
where
    F: Fn(usize, &MultiPolynomial) -> MultiPolynomial,
{
    let n = w.size();
    let mut chain = Vec::new();
    let mut current = w.clone();
    let mut value = loop {
        if let Some(v) = cache.read().unwrap().get(&current) {
            break v.clone();
        }
        match current.ascents().first() {
            None => break staircase(n),
            Some(&i) => {
                chain.push((current.clone(), i));
                current = current.swap_positions(i);
            }
        }
    };
    for (perm, i) in chain.into_iter().rev() {
        value = step(i, &value);
        cache.write().unwrap().insert(perm, value.clone());
    }
    value
}

fn grothendieck_step(n: usize, i: usize, f: &MultiPolynomial) -> MultiPolynomial {
    let factor = &MultiPolynomial::one(n) - &MultiPolynomial::var(n, i + 1);
    (&factor * f).divided_difference(i).expect("ascent index is in range")
}

/// Grothendieck polynomial in `n` variables, recursing on the smallest ascent.
pub fn grothendieck(w: &Permutation) -> MultiPolynomial {
    let n = w.size();
    if n == 1 {
        return MultiPolynomial::one(1);
    }
    descend_from_top(w, groth_cache(), |i, f| grothendieck_step(n, i, f))
}

/// Grothendieck recursion with a caller-chosen ascent at each step; uncached.
pub fn grothendieck_with_ascent_choice<F>(w: &Permutation, choose: &F) -> MultiPolynomial
where
    F: Fn(&Permutation) -> usize,
{
    let n = w.size();
    if n == 1 {
        return MultiPolynomial::one(1);
    }
    if w.ascents().is_empty() {
        return staircase(n);
    }
    let i = choose(w);
    assert!(w.at(i) < w.at(i + 1), "chosen index {i} is not an ascent of {w}");
    let below = grothendieck_with_ascent_choice(&w.swap_positions(i), choose);
    grothendieck_step(n, i, &below)
}

/// Schubert polynomial via the classical divided-difference recursion.
pub fn schubert(w: &Permutation) -> MultiPolynomial {
    let n = w.size();
    if n == 1 {
        return MultiPolynomial::one(1);
    }
    descend_from_top(w, schub_cache(), |i, f| f.divided_difference(i).expect("ascent index is in range"))
}

/// Lascoux polynomial in `len(alpha)` variables.
pub fn lascoux(alpha: &WeakComposition) -> MultiPolynomial {
    let n = alpha.len().max(1);
    if alpha.is_weakly_decreasing() {
        let exp = alpha.entries().iter().map(|&a| a as u32).collect::<Vec<_>>();
        let mut exp = exp;
        exp.resize(n, 0);
        return MultiPolynomial::monomial(exp, BigInt::one());
    }
    let i = (1..alpha.len())
        .find(|&i| alpha.entries()[i - 1] < alpha.entries()[i])
        .expect("not weakly decreasing");
    lascoux(&alpha.swap(i)).demazure_lascoux(i).expect("index in range")
}

/// Top (Castelnuovo-Mumford) component of the Grothendieck polynomial.
pub fn castelnuovo_mumford(w: &Permutation) -> MultiPolynomial {
    grothendieck(w).top_component().expect("Grothendieck polynomials are nonzero")
}

/// `sum_k (-1)^{k - deg S_w} G_w^{(k)} z^{deg G_w - k}` in `n + 1` variables,
/// the last being `z`. Every coefficient must come out positive.
pub fn homogenized_grothendieck(w: &Permutation) -> Result<MultiPolynomial> {
    let g = grothendieck(w);
    homogenize_signed(&g)
}

/// Signed homogenization of an arbitrary nonzero polynomial, appending `z`.
pub fn homogenize_signed(g: &MultiPolynomial) -> Result<MultiPolynomial> {
    let n = g.num_vars();
    let low = g.min_degree().ok_or(Error::ZeroPolynomial)?;
    let high = g.degree().unwrap();
    let mut out = MultiPolynomial::zero(n + 1);
    for (exp, c) in g.terms() {
        let k: u32 = exp.iter().sum();
        let mut e = exp.clone();
        e.push(high - k);
        let signed = if (k - low).is_multiple_of(2) { c.clone() } else { -c.clone() };
        if !signed.is_positive() {
            return Err(Error::Consistency(format!("sign alternation fails at x^{exp:?} (coefficient {c})")));
        }
        out.add_term(e, signed);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> MultiPolynomial {
        MultiPolynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c)))).unwrap()
    }

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn divided_difference_examples() {
        let x1 = MultiPolynomial::var(2, 1);
        assert_eq!(x1.divided_difference(1).unwrap(), MultiPolynomial::one(2));
        let f = poly(2, &[(&[2, 1], 1)]);
        assert_eq!(f.divided_difference(1).unwrap(), poly(2, &[(&[1, 1], 1)]));
        let sym = poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[2, 2, 1], 5)]);
        assert!(sym.divided_difference(1).unwrap().is_zero());
        assert!(f.divided_difference(2).is_err());
    }

    #[test]
    fn divided_difference_agrees_with_quotient() {
        // (x_i - x_{i+1}) * d_i(f) == f - s_i f
        let f = poly(3, &[(&[3, 0, 1], 2), (&[0, 4, 0], -1), (&[1, 2, 2], 7), (&[0, 0, 0], 3)]);
        for i in 1..=2 {
            let diff = &MultiPolynomial::var(3, i) - &MultiPolynomial::var(3, i + 1);
            let lhs = &diff * &f.divided_difference(i).unwrap();
            assert_eq!(lhs, &f - &f.swap_vars(i));
        }
    }

    #[test]
    fn demazure_lascoux_examples() {
        let x1 = MultiPolynomial::var(2, 1);
        assert_eq!(x1.demazure_lascoux(1).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], -1)]));
        assert_eq!(MultiPolynomial::one(2).demazure_lascoux(1).unwrap(), MultiPolynomial::one(2));
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck(&p("21")), poly(2, &[(&[1, 0], 1)]));
        assert_eq!(grothendieck(&p("321")), poly(3, &[(&[2, 1, 0], 1)]));
        assert_eq!(grothendieck(&p("132")), poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[1, 1, 0], -1)]));
        assert_eq!(grothendieck(&Permutation::identity(4)), MultiPolynomial::one(4));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&p("21")), poly(2, &[(&[1, 0], 1)]));
        assert_eq!(schubert(&p("132")), poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]));
        assert_eq!(schubert(&Permutation::identity(3)), MultiPolynomial::one(3));
    }

    #[test]
    fn lascoux_examples() {
        assert_eq!(lascoux(&comp(&[2, 1])), poly(2, &[(&[2, 1], 1)]));
        assert_eq!(lascoux(&comp(&[0, 1])), poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], -1)]));
        assert_eq!(lascoux(&comp(&[0, 0, 0])), MultiPolynomial::one(3));
    }

    #[test]
    fn component_examples() {
        let g = grothendieck(&p("132"));
        assert_eq!(g.top_component().unwrap(), poly(3, &[(&[1, 1, 0], -1)]));
        assert_eq!(g.homogeneous_component(1), schubert(&p("132")));
        let m = poly(2, &[(&[3, 1], 4)]);
        assert_eq!(m.top_component().unwrap(), m);
        assert_eq!(MultiPolynomial::zero(2).top_component(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogenized_examples() {
        assert_eq!(homogenized_grothendieck(&p("21")).unwrap(), poly(3, &[(&[1, 0, 0], 1)]));
        assert_eq!(
            homogenized_grothendieck(&p("132")).unwrap(),
            poly(4, &[(&[1, 0, 0, 1], 1), (&[0, 1, 0, 1], 1), (&[1, 1, 0, 0], 1)])
        );
        assert_eq!(homogenized_grothendieck(&Permutation::identity(3)).unwrap(), MultiPolynomial::one(4));
        let h = homogenized_grothendieck(&p("1432")).unwrap();
        assert!(h.is_homogeneous());
    }

    #[test]
    fn support_and_symmetry_examples() {
        let supp = grothendieck(&p("132")).support();
        let expected: BTreeSet<ExponentVector> = [vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]].into_iter().collect();
        assert_eq!(supp, expected);
        assert!(poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).is_symmetric_in(1));
        assert!(!MultiPolynomial::var(2, 1).is_symmetric_in(1));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(grothendieck(&p("132")).to_string(), "x1 + x2 - x1*x2");
        assert_eq!(castelnuovo_mumford(&p("132")).to_string(), "-x1*x2");
        assert_eq!(lascoux(&comp(&[2, 1])).to_string(), "x1^2*x2");
        assert_eq!(homogenized_grothendieck(&p("132")).unwrap().to_text(true), "x1*x2 + x1*z + x2*z");
        assert_eq!(poly(1, &[(&[0], -3)]).to_string(), "-3");
    }

    #[test]
    fn json_is_canonical_and_round_trips() {
        let g = grothendieck(&p("132"));
        let json = serde_json::to_value(&g).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"num_vars": 3, "terms": [
                {"exp": [1, 0, 0], "coef": "1"},
                {"exp": [0, 1, 0], "coef": "1"},
                {"exp": [1, 1, 0], "coef": "-1"}
            ]})
        );
        let back: MultiPolynomial = serde_json::from_value(json).unwrap();
        assert_eq!(back, g);
        let huge = poly(1, &[(&[1], 1)]).scale(&"123456789012345678901234567890".parse().unwrap());
        let s = serde_json::to_string(&huge).unwrap();
        assert_eq!(serde_json::from_str::<MultiPolynomial>(&s).unwrap(), huge);
    }

    #[test]
    fn path_independence_s5() {
        let largest = |w: &Permutation| *w.ascents().last().unwrap();
        let middle = |w: &Permutation| {
            let a = w.ascents();
            a[a.len() / 2]
        };
        for w in Permutation::all(5) {
            let g = grothendieck(&w);
            assert_eq!(grothendieck_with_ascent_choice(&w, &largest), g, "{w}");
            assert_eq!(grothendieck_with_ascent_choice(&w, &middle), g, "{w}");
        }
    }

    #[test]
    fn lowest_component_is_schubert_s6() {
        for w in Permutation::all(6) {
            let g = grothendieck(&w);
            let s = schubert(&w);
            assert_eq!(g.lowest_component().unwrap(), s, "{w}");
            assert_eq!(s.degree(), Some(w.length() as u32));
        }
    }

    #[test]
    fn sign_alternation_s5() {
        for w in Permutation::all(5) {
            let g = grothendieck(&w);
            let l = w.length() as u32;
            for (e, c) in g.terms() {
                let k: u32 = e.iter().sum();
                let signed = if (k - l).is_multiple_of(2) { c.clone() } else { -c.clone() };
                assert!(signed.is_positive(), "{w} {e:?}");
            }
        }
    }

    #[test]
    fn vexillary_grothendieck_is_lascoux_of_code_s6() {
        for w in Permutation::all(6).into_iter().filter(|w| w.is_vexillary()) {
            assert_eq!(grothendieck(&w), lascoux(&w.lehmer_code()), "{w}");
        }
    }

    #[test]
    fn fixed_prefix_gives_symmetry_s6() {
        for w in Permutation::all(6) {
            let m = (1..=w.size()).take_while(|&i| w.at(i) == i).count();
            if m == 0 || m >= w.size() {
                continue;
            }
            let g = grothendieck(&w);
            for k in 1..=m {
                assert!(g.is_symmetric_in(k), "{w} not symmetric in x{k}, x{}", k + 1);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly(n: usize) -> impl Strategy<Value = MultiPolynomial> {
            proptest::collection::vec((proptest::collection::vec(0u32..3, n), -3i64..4), 0..6)
                .prop_map(move |terms| {
                    MultiPolynomial::from_terms(n, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn pi_commute_far_apart(f in small_poly(4)) {
                let a = f.demazure_lascoux(1).unwrap().demazure_lascoux(3).unwrap();
                let b = f.demazure_lascoux(3).unwrap().demazure_lascoux(1).unwrap();
                prop_assert_eq!(a, b);
            }

            #[test]
            fn pi_braid_relation(f in small_poly(3)) {
                let a = f.demazure_lascoux(1).unwrap().demazure_lascoux(2).unwrap().demazure_lascoux(1).unwrap();
                let b = f.demazure_lascoux(2).unwrap().demazure_lascoux(1).unwrap().demazure_lascoux(2).unwrap();
                prop_assert_eq!(a, b);
            }

            #[test]
            fn json_round_trip(f in small_poly(3)) {
                let s = serde_json::to_string(&f).unwrap();
                prop_assert_eq!(serde_json::from_str::<MultiPolynomial>(&s).unwrap(), f);
            }
        }
    }
}
