//! Rational generating functions: bivariate num/den pairs in (x, t) and
//! univariate pairs in t.

use super::bipoly::BiPoly;
use super::intpoly::IntPoly;
use super::series::TSeries;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A closed-form generating function num/den with bivariate integer
/// polynomial parts.
///
/// Normalization removes the joint integer content of (num, den) and flips
/// signs so that den(0,0) is positive (it is +1 for every system in this
/// crate). No multivariate gcd reduction is attempted; equality is decided
/// by cross-multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalGF {
    num: BiPoly,
    den: BiPoly,
}

impl RationalGF {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        let mut gf = RationalGF { num, den };
        gf.normalize();
        gf
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    fn normalize(&mut self) {
        let c = self.num.content().gcd(&self.den.content());
        if c > BigInt::one() {
            self.num = self.num.exact_div_int(&c).unwrap();
            self.den = self.den.exact_div_int(&c).unwrap();
        }
        let lead_sign = if self.den.constant_term().is_zero() {
            self.den
                .t_coeffs()
                .iter()
                .find(|p| !p.is_zero())
                .map(|p| p.coeffs().iter().find(|a| !a.is_zero()).unwrap().sign())
                .unwrap_or(num_bigint::Sign::Plus)
        } else {
            self.den.constant_term().sign()
        };
        if lead_sign == num_bigint::Sign::Minus {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    /// Equality as rational functions: a.num * b.den == b.num * a.den.
    pub fn gf_equal(&self, other: &RationalGF) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The unique series S with den * S = num through t^order.
    ///
    /// Coefficients are extracted in t; each must come out as an exact
    /// polynomial in x (true for every generating function in this crate).
    pub fn series(&self, order: usize) -> Result<TSeries> {
        if self.den.constant_term().is_zero() {
            return Err(Error::NotExpandable);
        }
        let den0 = self.den.t_coeff(0);
        let mut out = TSeries::zero(order);
        for n in 0..=order {
            let mut acc = self.num.t_coeff(n);
            for i in 1..=n {
                let di = self.den.t_coeff(i);
                if di.is_zero() {
                    continue;
                }
                acc = &acc - &(&di * out.coeff(n - i));
            }
            let c = acc.exact_div(&den0).ok_or(Error::NotExpandable)?;
            out.set_coeff(n, c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        RationalGF::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num.display_xt(), self.den.display_xt())
    }
}

/// A univariate rational function in t.
///
/// Unlike [`RationalGF`], this type is reduced: num and den are divided by
/// their polynomial gcd and the sign is fixed so the reduced form is unique,
/// which lets closed forms be compared against printed ones verbatim.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalT {
    num: IntPoly,
    den: IntPoly,
}

impl RationalT {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalT { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalT { num: p, den: IntPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RationalT::from_poly(IntPoly::from_ints(&[c]))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        let sign_ref = if self.den.constant_term().is_zero() {
            self.den.leading_coeff()
        } else {
            self.den.constant_term()
        };
        if sign_ref.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn add(&self, other: &RationalT) -> RationalT {
        RationalT::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RationalT) -> RationalT {
        RationalT::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &RationalT) -> RationalT {
        RationalT::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RationalT) -> RationalT {
        assert!(!other.num.is_zero(), "division by the zero rational function");
        RationalT::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// Series coefficients through t^order; requires den(0) != 0.
    pub fn series(&self, order: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for i in 1..=n {
                acc -= self.den.coeff(i) * &out[n - i];
            }
            let (q, r) = num_integer::Integer::div_rem(&acc, &d0);
            if !r.is_zero() {
                return Err(Error::NotExpandable);
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num.display_in("t"), self.den.display_in("t"))
    }
}
