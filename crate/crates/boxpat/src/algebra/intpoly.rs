//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate integer polynomial, dense, lowest degree first.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient list. The indeterminate is abstract; callers decide
/// whether it means `x` or `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * v^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Multiply by `v^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Truncated product: drop every term of degree > `order`.
    pub fn mul_trunc(&self, other: &Self, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > order || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// GCD of all coefficients, non-negative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division; `None` if `other` does not divide `self` in Z[v].
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = other.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = other.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn exact_div_int(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::from_coeffs(out))
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.exact_div_int(&c).unwrap()
    }

    /// Polynomial gcd over Z via the primitive pseudo-remainder sequence.
    /// The result has positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs_lead();
        }
        if other.is_zero() {
            return self.abs_lead();
        }
        let cont = self.content().gcd(&other.content());
        let (mut p, mut q) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !q.is_zero() {
            let r = p.pseudo_rem(&q).primitive_part();
            p = q;
            q = r;
        }
        p.abs_lead().scale(&cont)
    }

    fn abs_lead(&self) -> Self {
        if self.leading_coeff().is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// lc(q)^(deg p - deg q + 1) * p  mod  q, the pseudo-remainder.
    fn pseudo_rem(&self, q: &Self) -> Self {
        let dq = q.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let lead = q.leading_coeff();
        while let Some(dr) = rem.degree() {
            if dr < dq {
                break;
            }
            let top = rem.leading_coeff();
            let shifted = q.shift_up(dr - dq).scale(&top);
            rem = &rem.scale(&lead) - &shifted;
            // guard: the subtraction must strictly lower the degree
            debug_assert!(rem.degree().map_or(true, |d| d < dr));
        }
        rem
    }

    /// Decimal coefficient strings, lowest degree first (the wire format).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strs: &[String]) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(strs.len());
        for s in strs {
            coeffs.push(s.parse::<BigInt>().ok()?);
        }
        Some(IntPoly::from_coeffs(coeffs))
    }

    /// Render as e.g. `2+7x` or `4t+2t^2` with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.display_in("v"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let p = IntPoly::from_ints(&[1, 1]);
        let q = IntPoly::from_ints(&[1, -1]);
        assert_eq!(&p * &q, IntPoly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn additive_identity() {
        let p = IntPoly::from_ints(&[3, 0, -2]);
        assert_eq!(&IntPoly::zero() + &p, p);
    }

    #[test]
    fn multiplicative_identity() {
        let p = IntPoly::from_ints(&[2, 7]);
        assert_eq!(&p * &IntPoly::one(), p);
    }

    #[test]
    fn canonical_trailing_zeros() {
        let p = IntPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        let z = IntPoly::from_ints(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_ints(&[-1, 0, 1]); // v^2 - 1
        let d = IntPoly::from_ints(&[-1, 1]); // v - 1
        assert_eq!(p.exact_div(&d), Some(IntPoly::from_ints(&[1, 1])));
        let bad = IntPoly::from_ints(&[1, 1, 1]);
        assert_eq!(bad.exact_div(&d), None);
    }

    #[test]
    fn gcd_simple() {
        let p = IntPoly::from_ints(&[-1, 0, 1]); // (v-1)(v+1)
        let q = IntPoly::from_ints(&[-2, 2]); // 2(v-1)
        assert_eq!(p.gcd(&q), IntPoly::from_ints(&[-1, 1]));
        assert_eq!(IntPoly::from_ints(&[6]).gcd(&IntPoly::from_ints(&[4])), IntPoly::from_ints(&[2]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_ints(&[2, 7]).display_in("x"), "2+7x");
        assert_eq!(IntPoly::from_ints(&[0, 4, 2]).display_in("t"), "4t+2t^2");
        assert_eq!(IntPoly::from_ints(&[1, -1]).display_in("x"), "1-x");
        assert_eq!(IntPoly::zero().display_in("x"), "0");
    }
}
