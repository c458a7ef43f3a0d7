//! Coefficients of exact symbols: Gaussian-rational polynomials in the
//! formal deformation parameter ħ.
//!
//! ħ is kept as a grading variable so that star-product identities can be
//! checked order by order with exact arithmetic; a numeric value for ħ is
//! substituted only when a symbol is evaluated or turned into an operator.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::rational::GaussianRational;

/// Exact scalar `Σ_m c_m ħ^m` with Gaussian-rational `c_m`.
///
/// Invariant: the coefficient list carries no trailing zeros, so the zero
/// scalar is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    terms: Vec<GaussianRational>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    /// ħ-free scalar.
    pub fn constant(c: GaussianRational) -> Self {
        Self { terms: vec![c] }.normalized()
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(num, den))
    }

    /// `c · ħ^power`.
    pub fn graded(c: GaussianRational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms = vec![GaussianRational::zero(); power + 1];
        terms[power] = c;
        Self { terms }
    }

    /// The formal variable ħ itself.
    pub fn hbar() -> Self {
        Self::graded(GaussianRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest ħ-power present, or None for zero.
    pub fn hbar_degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// Coefficient of ħ^m.
    pub fn hbar_coefficient(&self, m: usize) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn hbar_terms(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.terms.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Multiplies by ħ^k (raises every grade).
    pub fn shift_grade(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut terms = vec![GaussianRational::zero(); k];
        terms.extend(self.terms.iter().cloned());
        Self { terms }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            terms: self.terms.iter().map(|t| t * c).collect(),
        }
        .normalized()
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Substitutes a numeric ħ.
    pub fn eval(&self, hbar: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        // Horner over the grade.
        for c in self.terms.iter().rev() {
            acc = acc * hbar + c.to_c64();
        }
        acc
    }

    fn normalized(mut self) -> Self {
        while self.terms.last().map_or(false, GaussianRational::is_zero) {
            self.terms.pop();
        }
        self
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: Self) -> Coeff {
        let n = self.terms.len().max(rhs.terms.len());
        let mut terms = Vec::with_capacity(n);
        for m in 0..n {
            let mut c = self.terms.get(m).cloned().unwrap_or_default();
            if let Some(r) = rhs.terms.get(m) {
                c += r.clone();
            }
            terms.push(c);
        }
        Coeff { terms }.normalized()
    }
}

impl AddAssign for Coeff {
    fn add_assign(&mut self, rhs: Coeff) {
        *self = &*self + &rhs;
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self + &(-rhs)
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            terms: self.terms.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Self) -> Coeff {
        if self.is_zero() || rhs.is_zero() {
            return Coeff::zero();
        }
        let mut terms =
            vec![GaussianRational::zero(); self.terms.len() + rhs.terms.len() - 1];
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                terms[i + j] += a * b;
            }
        }
        Coeff { terms }.normalized()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.hbar_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·ħ")?,
                _ => write!(f, "({c})·ħ^{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_tracks_products() {
        // (i·ħ)·(i·ħ) = -ħ²
        let ih = Coeff::graded(GaussianRational::i(), 1);
        let sq = &ih * &ih;
        assert_eq!(sq.hbar_degree(), Some(2));
        assert_eq!(sq.hbar_coefficient(2), -GaussianRational::one());
        assert!(sq.hbar_coefficient(1).is_zero());
    }

    #[test]
    fn eval_substitutes_hbar() {
        // 1 - i·ħ at ħ = 0.5 → 1 - 0.5i
        let c = Coeff::one() - Coeff::graded(GaussianRational::i(), 1);
        let v = c.eval(0.5);
        assert_eq!(v, Complex64::new(1.0, -0.5));
    }

    #[test]
    fn zero_forms_normalize() {
        let z = Coeff::hbar() - Coeff::hbar();
        assert!(z.is_zero());
        assert_eq!(z.hbar_degree(), None);
    }
}
