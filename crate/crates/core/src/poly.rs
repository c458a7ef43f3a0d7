//! Sparse multivariate polynomials over an abstract scalar ring.
//!
//! The same representation carries the two symbol flavours used throughout:
//! [`PolySymbol`] with exact ħ-graded Gaussian-rational scalars, and
//! [`CPoly`] with complex floating scalars (Gaussian prefactors, Taylor
//! truncations, grid work).

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::rational::GaussianRational;

/// Scalar ring required by the polynomial layer.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Numeric value; `hbar` is consumed only by graded scalars.
    fn to_c64(&self, hbar: f64) -> Complex64;
}

impl Scalar for Coeff {
    fn zero() -> Self {
        Coeff::zero()
    }
    fn one() -> Self {
        Coeff::one()
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn from_int(n: i64) -> Self {
        Coeff::from_int(n)
    }
    fn to_c64(&self, hbar: f64) -> Complex64 {
        self.eval(hbar)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn to_c64(&self, _hbar: f64) -> Complex64 {
        *self
    }
}

/// Sparse polynomial in `dim` variables; no zero coefficients are stored,
/// so structural equality is semantic equality.
#[derive(Clone, PartialEq)]
pub struct SparsePoly<C: Scalar> {
    dim: usize,
    terms: BTreeMap<MultiIndex, C>,
}

/// Exact symbol: ħ-graded Gaussian-rational coefficients.
pub type PolySymbol = SparsePoly<Coeff>;

/// Floating symbol: complex f64 coefficients.
pub type CPoly = SparsePoly<Complex64>;

impl<C: Scalar> SparsePoly<C> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: C) -> Self {
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zero(dim), c);
        }
        p
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, C::one())
    }

    /// The coordinate monomial x_j.
    pub fn variable(dim: usize, j: usize) -> Self {
        assert!(j < dim, "variable index out of range");
        let mut p = Self::zero(dim);
        p.terms.insert(MultiIndex::unit(dim, j), C::one());
        p
    }

    pub fn monomial(dim: usize, exps: &[u32], c: C) -> Self {
        assert_eq!(exps.len(), dim);
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(MultiIndex(exps.to_vec()), c);
        }
        p
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (k, c) in terms {
            if k.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: k.dim(),
                });
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &MultiIndex) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|k| k.order() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn add_term(&mut self, k: MultiIndex, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            Some(old) => {
                let s = old.add_ref(&c);
                if !s.is_zero() {
                    self.terms.insert(k, s);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = Self::zero(self.dim);
        for (k, v) in self.terms.iter() {
            out.add_term(k.clone(), v.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let mut out = Self::zero(self.dim);
        for (ka, ca) in self.terms.iter() {
            for (kb, cb) in rhs.terms.iter() {
                out.add_term(ka.add(kb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    /// Exact partial derivative ∂^κ.
    pub fn derive(&self, kappa: &MultiIndex) -> Result<Self> {
        if kappa.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: kappa.dim(),
            });
        }
        let mut out = Self::zero(self.dim);
        'term: for (k, c) in self.terms.iter() {
            let mut exps = k.0.clone();
            let mut factor = C::one();
            for j in 0..self.dim {
                let kj = kappa.0[j];
                if exps[j] < kj {
                    continue 'term;
                }
                // falling factorial e·(e−1)···(e−k+1)
                for step in 0..kj {
                    factor = factor.mul_ref(&C::from_int((exps[j] - step) as i64));
                }
                exps[j] -= kj;
            }
            out.add_term(MultiIndex(exps), c.mul_ref(&factor));
        }
        Ok(out)
    }

    /// First-order derivative ∂_j.
    pub fn derive_var(&self, j: usize) -> Self {
        self.derive(&MultiIndex::unit(self.dim, j))
            .expect("unit index has the right dimension")
    }

    /// Numeric evaluation at a complex point, substituting `hbar` into
    /// graded scalars. Terms are accumulated in the fixed lexicographic
    /// term order, so the result is deterministic.
    pub fn eval(&self, x: &[Complex64], hbar: f64) -> Result<Complex64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.terms.iter() {
            let mut mono = c.to_c64(hbar);
            for (j, &e) in k.0.iter().enumerate() {
                if e > 0 {
                    mono *= x[j].powu(e);
                }
            }
            acc += mono;
        }
        Ok(acc)
    }

    /// Drops every monomial of total degree above `max_degree`.
    pub fn truncate_degree(&self, max_degree: u32) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.order() <= max_degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        let mut out = SparsePoly::zero(self.dim);
        for (k, c) in self.terms.iter() {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl PolySymbol {
    /// Substitutes a numeric ħ into every coefficient.
    pub fn to_cpoly(&self, hbar: f64) -> CPoly {
        self.map_coefficients(|c| c.eval(hbar))
    }

    /// The symbol formed by the coefficients of ħ^m (the grade is removed).
    pub fn hbar_part(&self, m: usize) -> PolySymbol {
        let mut out = PolySymbol::zero(self.dim);
        for (k, c) in self.terms.iter() {
            out.add_term(k.clone(), Coeff::constant(c.hbar_coefficient(m)));
        }
        out
    }

    /// Highest ħ-power appearing in any coefficient.
    pub fn hbar_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(Coeff::hbar_degree).max()
    }

    pub fn scale_rational(&self, c: &GaussianRational) -> Self {
        self.scale(&Coeff::constant(c.clone()))
    }
}

/// Names phase-space variables (p_1…p_n, q_1…q_n) when d is even, x_j
/// otherwise.
pub fn variable_name(dim: usize, j: usize) -> String {
    if dim == 2 {
        return if j == 0 { "p".into() } else { "q".into() };
    }
    if dim % 2 == 0 {
        let n = dim / 2;
        if j < n {
            return format!("p{}", j + 1);
        }
        return format!("q{}", j - n + 1);
    }
    format!("x{}", j + 1)
}

impl<C: Scalar> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            for (j, &e) in k.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "·{}", variable_name(self.dim, j))?,
                    _ => write!(f, "·{}^{}", variable_name(self.dim, j), e)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> PolySymbol {
        PolySymbol::variable(2, 0)
    }

    fn q() -> PolySymbol {
        PolySymbol::variable(2, 1)
    }

    #[test]
    fn monomial_first_derivative() {
        // ∂_p(pq) = q
        let pq = p().mul(&q()).unwrap();
        let d = pq.derive(&MultiIndex(vec![1, 0])).unwrap();
        assert_eq!(d, q());
    }

    #[test]
    fn mixed_second_derivative() {
        // ∂_p ∂_q (p²q) = 2p
        let f = PolySymbol::monomial(2, &[2, 1], Coeff::one());
        let d = f.derive(&MultiIndex(vec![1, 1])).unwrap();
        assert_eq!(d, p().scale(&Coeff::from_int(2)));
    }

    #[test]
    fn derivative_past_degree_vanishes() {
        // ∂_p³(p²q) = 0
        let f = PolySymbol::monomial(2, &[2, 1], Coeff::one());
        let d = f.derive(&MultiIndex(vec![3, 0])).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.degree(), -1);
    }

    #[test]
    fn ring_ops_examples() {
        // p·q = pq, (p+q) + (p−q) = 2p
        assert_eq!(
            p().mul(&q()).unwrap(),
            PolySymbol::monomial(2, &[1, 1], Coeff::one())
        );
        let s = p().add(&q()).unwrap().add(&p().sub(&q()).unwrap()).unwrap();
        assert_eq!(s, p().scale(&Coeff::from_int(2)));
    }

    #[test]
    fn scale_by_i_hbar_raises_grade() {
        let ih = Coeff::graded(GaussianRational::i(), 1);
        let f = p().scale(&ih);
        let c = f.coefficient(&MultiIndex(vec![1, 0]));
        assert_eq!(c.hbar_degree(), Some(1));
        assert_eq!(c.hbar_coefficient(1), GaussianRational::i());
    }

    #[test]
    fn eval_monomial() {
        // p²q at (2,3) = 12
        let f = PolySymbol::monomial(2, &[2, 1], Coeff::one());
        let v = f
            .eval(&[Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)], 1.0)
            .unwrap();
        assert_eq!(v, Complex64::new(12.0, 0.0));
    }

    #[test]
    fn eval_graded_symbol() {
        // pq − i·ħ at (1,1), ħ = 0.5 → 1 − 0.5i
        let f = p()
            .mul(&q())
            .unwrap()
            .sub(&PolySymbol::constant(
                2,
                Coeff::graded(GaussianRational::i(), 1),
            ))
            .unwrap();
        let v = f
            .eval(&[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)], 0.5)
            .unwrap();
        assert_eq!(v, Complex64::new(1.0, -0.5));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let f = p();
        let g = PolySymbol::variable(4, 0);
        assert!(matches!(
            f.add(&g),
            Err(Error::DimensionMismatch { expected: 2, found: 4 })
        ));
        assert!(f.derive(&MultiIndex(vec![1])).is_err());
    }

    #[test]
    fn mul_degree_adds() {
        let f = PolySymbol::monomial(2, &[2, 1], Coeff::from_int(3));
        let g = PolySymbol::monomial(2, &[0, 2], Coeff::from_ratio(1, 2));
        assert_eq!(f.mul(&g).unwrap().degree(), f.degree() + g.degree());
    }
}
