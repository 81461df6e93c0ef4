//! Truncated power series in t with polynomial coefficients in x.

use super::intpoly::IntPoly;
use num_bigint::BigInt;
use std::fmt;

/// A power series in t truncated at a fixed order; coefficient `n` is a
/// polynomial in the marking variable x.
#[derive(Clone, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<IntPoly>,
}

impl TSeries {
    /// Zero series of the given truncation order (holds N+1 coefficients).
    pub fn zero(order: usize) -> Self {
        TSeries { coeffs: vec![IntPoly::zero(); order + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<IntPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the t^0 coefficient");
        TSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: IntPoly) {
        self.coeffs[n] = c;
    }

    /// Operations on series of unequal order truncate to the minimum.
    pub fn add(&self, other: &TSeries) -> TSeries {
        let n = self.order().min(other.order());
        TSeries::from_coeffs((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![IntPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        TSeries::from_coeffs(coeffs)
    }

    /// The sequence of coefficients at x = 0 (statistic value zero).
    pub fn at_x_zero(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.constant_term()).collect()
    }

    pub fn at_x_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(&1.into())).collect()
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| format!("({})t^{n}", c.display_in("x")))
            .collect();
        write!(f, "TSeries[{}]", terms.join(" + "))
    }
}
