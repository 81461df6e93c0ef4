//! Denominator-to-recurrence extraction for rational generating functions.

use super::intpoly::IntPoly;
use super::rational::RationalT;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A linear recurrence b_n = sum c_i b_{n-i}, valid for n > valid_from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub coeffs: Vec<BigInt>,
    pub valid_from: usize,
}

impl Recurrence {
    /// Check the recurrence against a sequence prefix, for every index above
    /// valid_from that has enough history available.
    pub fn holds_for(&self, seq: &[BigInt]) -> bool {
        let d = self.coeffs.len();
        for n in (self.valid_from + 1).max(d)..seq.len() {
            let mut acc = BigInt::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                acc += c * &seq[n - 1 - i];
            }
            if acc != seq[n] {
                return false;
            }
        }
        true
    }
}

/// Read the recurrence off the denominator: if den = 1 - sum c_i t^i after
/// normalization, the series coefficients satisfy b_n = sum c_i b_{n-i} for
/// all n > deg(num).
///
/// Panics if the denominator's constant term is not a unit (every generating
/// function produced in this crate normalizes to constant term 1).
pub fn recurrence_from_gf(gf: &RationalT) -> Recurrence {
    let den = normalize_unit_constant(gf.den());
    let d = den.degree().unwrap_or(0);
    let coeffs = (1..=d).map(|i| -den.coeff(i)).collect();
    Recurrence {
        coeffs,
        valid_from: gf.num().degree().unwrap_or(0),
    }
}

fn normalize_unit_constant(den: &IntPoly) -> IntPoly {
    let c0 = den.constant_term();
    assert!(
        c0.clone().abs() == BigInt::one(),
        "denominator constant term must be a unit, got {c0}"
    );
    if c0 == BigInt::one() {
        den.clone()
    } else {
        -den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn fibonacci_defining_recurrence() {
        let gf = RationalT::new(IntPoly::one(), IntPoly::from_ints(&[1, -1, -1]));
        let rec = recurrence_from_gf(&gf);
        assert_eq!(rec.coeffs, ints(&[1, 1]));
        assert_eq!(rec.valid_from, 0);
        assert!(rec.holds_for(&ints(&[1, 1, 2, 3, 5, 8, 13, 21])));
    }

    #[test]
    fn recurrence_reproduces_series() {
        let gf = RationalT::new(
            IntPoly::from_ints(&[1, 2, 0, -1]),
            IntPoly::from_ints(&[1, -2, 0, 3]),
        );
        let rec = recurrence_from_gf(&gf);
        let seq = gf.series(rec.valid_from + 21).unwrap();
        assert!(rec.holds_for(&seq));
    }
}
