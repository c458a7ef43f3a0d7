//! Gaussian symbols: polynomial prefactor times exp(x·Mx + v·x + c).
//!
//! This class is closed under partial derivatives and under the partial
//! sums of star-product series, which is what the numeric convergence
//! experiments run on. Coefficients are floating complex numbers; products
//! of Gaussians leave the rational field, so no exactness is claimed here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::CPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianSymbol {
    dim: usize,
    prefactor: CPoly,
    /// Upper triangle of the symmetric matrix M, row by row
    /// (entries (j,k) with j ≤ k).
    m_upper: Vec<Complex64>,
    v: Vec<Complex64>,
    c: Complex64,
}

fn upper_len(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

fn upper_index(dim: usize, j: usize, k: usize) -> usize {
    let (j, k) = if j <= k { (j, k) } else { (k, j) };
    // offset of row j in the packed upper triangle
    j * dim - j * (j + 1) / 2 + k
}

impl GaussianSymbol {
    /// Builds from the packed upper triangle of M; symmetry holds by
    /// construction.
    pub fn new(
        dim: usize,
        prefactor: CPoly,
        m_upper: Vec<Complex64>,
        v: Vec<Complex64>,
        c: Complex64,
    ) -> Result<Self> {
        if prefactor.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: prefactor.dim(),
            });
        }
        if m_upper.len() != upper_len(dim) {
            return Err(Error::InvalidParameter(format!(
                "packed upper triangle needs {} entries, got {}",
                upper_len(dim),
                m_upper.len()
            )));
        }
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        Ok(Self {
            dim,
            prefactor,
            m_upper,
            v,
            c,
        })
    }

    /// Builds from a full matrix, which must be symmetric entry for entry.
    pub fn from_matrix(
        dim: usize,
        prefactor: CPoly,
        m: &[Vec<Complex64>],
        v: Vec<Complex64>,
        c: Complex64,
    ) -> Result<Self> {
        if m.len() != dim || m.iter().any(|row| row.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.len(),
            });
        }
        for j in 0..dim {
            for k in (j + 1)..dim {
                if m[j][k] != m[k][j] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        let mut m_upper = Vec::with_capacity(upper_len(dim));
        for j in 0..dim {
            for k in j..dim {
                m_upper.push(m[j][k]);
            }
        }
        Self::new(dim, prefactor, m_upper, v, c)
    }

    /// exp(Σ m_j x_j²) with a unit prefactor.
    pub fn diagonal_exp(m_diag: &[f64]) -> Self {
        let dim = m_diag.len();
        let mut m_upper = vec![Complex64::new(0.0, 0.0); upper_len(dim)];
        for (j, &mj) in m_diag.iter().enumerate() {
            m_upper[upper_index(dim, j, j)] = Complex64::new(mj, 0.0);
        }
        Self {
            dim,
            prefactor: CPoly::one(dim),
            m_upper,
            v: vec![Complex64::new(0.0, 0.0); dim],
            c: Complex64::new(0.0, 0.0),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prefactor(&self) -> &CPoly {
        &self.prefactor
    }

    pub fn m(&self, j: usize, k: usize) -> Complex64 {
        self.m_upper[upper_index(self.dim, j, k)]
    }

    pub fn m_upper(&self) -> &[Complex64] {
        &self.m_upper
    }

    pub fn v(&self) -> &[Complex64] {
        &self.v
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// max_{j,k} |M_{jk}|.
    pub fn m_norm(&self) -> f64 {
        self.m_upper.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// The quadratic exponent x·Mx + v·x + c as a polynomial.
    pub fn exponent_poly(&self) -> CPoly {
        let mut e = CPoly::constant(self.dim, self.c);
        for j in 0..self.dim {
            if !crate::poly::Scalar::is_zero(&self.v[j]) {
                let mut exps = vec![0u32; self.dim];
                exps[j] = 1;
                e = e
                    .add(&CPoly::monomial(self.dim, &exps, self.v[j]))
                    .expect("same dimension");
            }
        }
        for j in 0..self.dim {
            for k in j..self.dim {
                let m = self.m(j, k);
                if crate::poly::Scalar::is_zero(&m) {
                    continue;
                }
                let mut exps = vec![0u32; self.dim];
                exps[j] += 1;
                exps[k] += 1;
                let coeff = if j == k { m } else { 2.0 * m };
                e = e
                    .add(&CPoly::monomial(self.dim, &exps, coeff))
                    .expect("same dimension");
            }
        }
        e
    }

    /// ∂_j of the exponent: the linear polynomial 2(Mx)_j + v_j.
    pub fn exponent_gradient(&self, j: usize) -> CPoly {
        let mut g = CPoly::constant(self.dim, self.v[j]);
        for k in 0..self.dim {
            let m = self.m(j, k);
            if crate::poly::Scalar::is_zero(&m) {
                continue;
            }
            let mut exps = vec![0u32; self.dim];
            exps[k] = 1;
            g = g
                .add(&CPoly::monomial(self.dim, &exps, 2.0 * m))
                .expect("same dimension");
        }
        g
    }

    /// ∂_j, staying inside the class: the exponent is unchanged and the
    /// prefactor becomes ∂_jP + P·(2(Mx)_j + v_j).
    pub fn derive_var(&self, j: usize) -> Self {
        let bumped = self
            .prefactor
            .derive_var(j)
            .add(&self.prefactor.mul(&self.exponent_gradient(j)).expect("dim"))
            .expect("dim");
        Self {
            dim: self.dim,
            prefactor: bumped,
            m_upper: self.m_upper.clone(),
            v: self.v.clone(),
            c: self.c,
        }
    }

    pub fn eval(&self, x: &[Complex64]) -> Result<Complex64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let pre = self.prefactor.eval(x, 0.0)?;
        let expo = self.exponent_poly().eval(x, 0.0)?;
        Ok(pre * expo.exp())
    }

    /// Replaces the prefactor, keeping the exponent.
    pub fn with_prefactor(&self, prefactor: CPoly) -> Result<Self> {
        Self::new(
            self.dim,
            prefactor,
            self.m_upper.clone(),
            self.v.clone(),
            self.c,
        )
    }

    /// True when the two symbols share the same exponent data exactly.
    pub fn same_exponent(&self, rhs: &Self) -> bool {
        self.dim == rhs.dim && self.m_upper == rhs.m_upper && self.v == rhs.v && self.c == rhs.c
    }

    /// Sum of two symbols with identical exponents.
    pub fn add_same_exponent(&self, rhs: &Self) -> Result<Self> {
        if !self.same_exponent(rhs) {
            return Err(Error::GridMismatch("exponents differ"));
        }
        self.with_prefactor(self.prefactor.add(&rhs.prefactor)?)
    }

    /// Taylor polynomial of total degree ≤ `max_degree` about the origin.
    pub fn taylor_truncate(&self, max_degree: u32) -> CPoly {
        // exp(c)·Σ_k (x·Mx + v·x)^k / k!, truncated on the fly; the k-th
        // power has minimal degree k, so the series stops at k = max_degree.
        let mut linear_quadratic = self.exponent_poly();
        linear_quadratic = linear_quadratic
            .sub(&CPoly::constant(self.dim, self.c))
            .expect("same dimension");
        let scale = self.c.exp();
        let mut series = CPoly::one(self.dim);
        let mut power = CPoly::one(self.dim);
        let mut factorial = 1.0f64;
        for k in 1..=max_degree as u64 {
            factorial *= k as f64;
            power = power
                .mul(&linear_quadratic)
                .expect("same dimension")
                .truncate_degree(max_degree);
            if power.is_zero() {
                break;
            }
            series = series
                .add(&power.scale(&Complex64::new(1.0 / factorial, 0.0)))
                .expect("same dimension");
        }
        self.prefactor
            .mul(&series)
            .expect("same dimension")
            .truncate_degree(max_degree)
            .scale(&scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn unit_gaussian_evaluates_to_one() {
        let g = GaussianSymbol::diagonal_exp(&[0.0, 0.0]);
        let v = g.eval(&[c(0.3), c(-1.2)]).unwrap();
        assert!((v - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn taylor_of_exp_x() {
        // exp(x): 1 + x + x²/2
        let g = GaussianSymbol::new(
            1,
            CPoly::one(1),
            vec![c(0.0)],
            vec![c(1.0)],
            c(0.0),
        )
        .unwrap();
        let t = g.taylor_truncate(2);
        assert!((t.coefficient(&crate::multi_index::MultiIndex(vec![0])) - c(1.0)).norm() < 1e-15);
        assert!((t.coefficient(&crate::multi_index::MultiIndex(vec![1])) - c(1.0)).norm() < 1e-15);
        assert!((t.coefficient(&crate::multi_index::MultiIndex(vec![2])) - c(0.5)).norm() < 1e-15);
    }

    #[test]
    fn taylor_of_exp_x_squared_drops_odd_terms() {
        // exp(x²) to degree 3 is 1 + x²
        let g = GaussianSymbol::diagonal_exp(&[1.0]);
        let t = g.taylor_truncate(3);
        assert_eq!(t.num_terms(), 2);
        assert!((t.coefficient(&crate::multi_index::MultiIndex(vec![0])) - c(1.0)).norm() < 1e-15);
        assert!((t.coefficient(&crate::multi_index::MultiIndex(vec![2])) - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn derivative_stays_in_class() {
        // ∂_x exp(−x²) = −2x·exp(−x²)
        let g = GaussianSymbol::diagonal_exp(&[-1.0]);
        let d = g.derive_var(0);
        let x = [c(0.7)];
        let expected = -2.0 * x[0] * (-x[0] * x[0]).exp();
        assert!((d.eval(&x).unwrap() - expected).norm() < 1e-14);
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let m = vec![
            vec![c(1.0), c(2.0)],
            vec![c(3.0), c(1.0)],
        ];
        let r = GaussianSymbol::from_matrix(
            2,
            CPoly::one(2),
            &m,
            vec![c(0.0), c(0.0)],
            c(0.0),
        );
        assert!(matches!(r, Err(Error::NotSymmetric)));
    }
}
