use std::fmt;

/// Exponent vector κ = (κ_1, …, κ_d) of a monomial x^κ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// Unit index e_j.
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut e = vec![0; dim];
        e[j] = 1;
        Self(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// |κ| = Σ_j κ_j.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn bumped(&self, j: usize) -> Self {
        let mut e = self.0.clone();
        e[j] += 1;
        Self(e)
    }

    /// κ! = Π_j κ_j! as f64.
    pub fn factorial_f64(&self) -> f64 {
        self.0
            .iter()
            .map(|&k| (1..=k as u64).map(|v| v as f64).product::<f64>())
            .product()
    }

    /// κ^κ with the 0⁰ = 1 convention, as f64.
    pub fn self_power_f64(&self) -> f64 {
        self.0
            .iter()
            .map(|&k| if k == 0 { 1.0 } else { (k as f64).powi(k as i32) })
            .product()
    }

    /// ln κ! summed over components, stable for large orders.
    pub fn ln_factorial(&self) -> f64 {
        self.0
            .iter()
            .map(|&k| (2..=k as u64).map(|v| (v as f64).ln()).sum::<f64>())
            .sum()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_factorial() {
        let k = MultiIndex(vec![2, 0, 3]);
        assert_eq!(k.order(), 5);
        assert_eq!(k.factorial_f64(), 12.0);
        assert_eq!(k.self_power_f64(), 4.0 * 27.0);
    }

    #[test]
    fn lexicographic_map_order_is_stable() {
        let a = MultiIndex(vec![0, 2]);
        let b = MultiIndex(vec![1, 0]);
        assert!(a < b);
    }
}
