//! Bivariate integer polynomials in the marking variable `x` and the
//! length variable `t`, stored t-major: `tc[b]` is the coefficient of
//! `t^b` as an [`IntPoly`] in `x`.

use super::intpoly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    tc: Vec<IntPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { tc: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly { tc: vec![IntPoly::one()] }
    }

    pub fn from_t_coeffs(mut tc: Vec<IntPoly>) -> Self {
        while tc.last().is_some_and(|c| c.is_zero()) {
            tc.pop();
        }
        BiPoly { tc }
    }

    /// `c * x^a * t^b`.
    pub fn monomial(c: BigInt, a: usize, b: usize) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut tc = vec![IntPoly::zero(); b + 1];
        tc[b] = IntPoly::monomial(c, a);
        BiPoly { tc }
    }

    /// Sum of `c * x^a * t^b` terms, a convenience for transcribing closed forms.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        let mut acc = BiPoly::zero();
        for &(c, a, b) in terms {
            acc = &acc + &BiPoly::monomial(BigInt::from(c), a, b);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.tc.is_empty()
    }

    /// Degree in t, or `None` if zero.
    pub fn t_degree(&self) -> Option<usize> {
        self.tc.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.tc.iter().filter_map(|c| c.degree()).max()
    }

    /// Coefficient of `t^b`, a polynomial in x.
    pub fn t_coeff(&self, b: usize) -> IntPoly {
        self.tc.get(b).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn t_coeffs(&self) -> &[IntPoly] {
        &self.tc
    }

    /// Value at x = 0, t = 0.
    pub fn constant_term(&self) -> BigInt {
        self.t_coeff(0).constant_term()
    }

    /// Restriction to x = 0, as a polynomial in t.
    pub fn at_x_zero(&self) -> IntPoly {
        IntPoly::from_coeffs(self.tc.iter().map(|c| c.constant_term()).collect())
    }

    /// Restriction to x = 1, as a polynomial in t.
    pub fn at_x_one(&self) -> IntPoly {
        IntPoly::from_coeffs(self.tc.iter().map(|c| c.eval(&BigInt::one())).collect())
    }

    /// Smallest power of x appearing, or `None` if zero.
    pub fn x_valuation(&self) -> Option<usize> {
        self.tc
            .iter()
            .filter_map(|c| c.coeffs().iter().position(|a| !a.is_zero()))
            .min()
    }

    /// Multiply by `x^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        BiPoly { tc: self.tc.iter().map(|c| c.shift_up(k)).collect() }
    }

    /// Exact division by `x^k`; `None` if some term has x-degree below k.
    pub fn unshift_x(&self, k: usize) -> Option<Self> {
        if k == 0 {
            return Some(self.clone());
        }
        let mut tc = Vec::with_capacity(self.tc.len());
        for c in &self.tc {
            let cs = c.coeffs();
            if cs.iter().take(k.min(cs.len())).any(|a| !a.is_zero()) {
                return None;
            }
            if cs.len() <= k {
                tc.push(IntPoly::zero());
            } else {
                tc.push(IntPoly::from_coeffs(cs[k..].to_vec()));
            }
        }
        Some(BiPoly::from_t_coeffs(tc))
    }

    /// Coefficient extraction: the part with x-degree exactly `a`, as a
    /// polynomial in t.
    pub fn x_slice(&self, a: usize) -> IntPoly {
        IntPoly::from_coeffs(self.tc.iter().map(|c| c.coeff(a)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BiPoly::from_t_coeffs(self.tc.iter().map(|p| p.scale(c)).collect())
    }

    /// GCD of all integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.tc {
            g = g.gcd(&c.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn exact_div_int(&self, c: &BigInt) -> Option<Self> {
        let mut tc = Vec::with_capacity(self.tc.len());
        for p in &self.tc {
            tc.push(p.exact_div_int(c)?);
        }
        Some(BiPoly::from_t_coeffs(tc))
    }

    /// Exact division in Z[x,t]: long division in t with exact coefficient
    /// divisions in Z[x]. `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let dd = other.t_degree().unwrap();
        let nd = self.t_degree()?;
        if nd < dd {
            return None;
        }
        let lead = &other.tc[dd];
        let mut rem = self.tc.clone();
        rem.resize(nd + 1, IntPoly::zero());
        let mut quot = vec![IntPoly::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead)?;
            for (j, c) in other.tc.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&q * c);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(BiPoly::from_t_coeffs(quot))
    }

    /// The substitution x -> 1/x, t -> x t, cleared to a genuine polynomial:
    /// returns `(p, m)` with `p = x^m * self(1/x, x t)`. A monomial
    /// `x^a t^b` maps to `x^(b-a) t^b`, so `m` is the clearing shift.
    pub fn maxstat_substitute(&self) -> (BiPoly, usize) {
        let mut shift = 0usize;
        for (b, c) in self.tc.iter().enumerate() {
            if let Some(d) = c.degree() {
                if d > b {
                    shift = shift.max(d - b);
                }
            }
        }
        let mut tc = Vec::with_capacity(self.tc.len());
        for (b, c) in self.tc.iter().enumerate() {
            let mut coeffs = vec![BigInt::zero(); b + shift + 1];
            for (a, v) in c.coeffs().iter().enumerate() {
                // x^a t^b -> x^(b - a + shift) t^b
                coeffs[b + shift - a] = v.clone();
            }
            tc.push(IntPoly::from_coeffs(coeffs));
        }
        (BiPoly::from_t_coeffs(tc), shift)
    }

    /// Render with explicit variables, e.g. `1-t-2xt-x^2t^2+xt^2`.
    pub fn display_xt(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (b, c) in self.tc.iter().enumerate() {
            for (a, v) in c.coeffs().iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mag = v.abs();
                if out.is_empty() {
                    if v.is_negative() {
                        out.push('-');
                    }
                } else if v.is_negative() {
                    out.push('-');
                } else {
                    out.push('+');
                }
                if (!mag.is_one()) || (a == 0 && b == 0) {
                    out.push_str(&mag.to_string());
                }
                if a > 0 {
                    out.push('x');
                    if a > 1 {
                        out.push_str(&format!("^{a}"));
                    }
                }
                if b > 0 {
                    out.push('t');
                    if b > 1 {
                        out.push_str(&format!("^{b}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.display_xt())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, other: &BiPoly) -> BiPoly {
        let n = self.tc.len().max(other.tc.len());
        let mut tc = Vec::with_capacity(n);
        for i in 0..n {
            tc.push(&self.t_coeff(i) + &other.t_coeff(i));
        }
        BiPoly::from_t_coeffs(tc)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, other: &BiPoly) -> BiPoly {
        let n = self.tc.len().max(other.tc.len());
        let mut tc = Vec::with_capacity(n);
        for i in 0..n {
            tc.push(&self.t_coeff(i) - &other.t_coeff(i));
        }
        BiPoly::from_t_coeffs(tc)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut tc = vec![IntPoly::zero(); self.tc.len() + other.tc.len() - 1];
        for (i, a) in self.tc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.tc.iter().enumerate() {
                tc[i + j] = &tc[i + j] + &(a * b);
            }
        }
        BiPoly::from_t_coeffs(tc)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { tc: self.tc.iter().map(|c| -c).collect() }
    }
}
