//! Classical sequences tied to the bond statistic on permutations.

use crate::algebra::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Mutex;

/// An append-only memo table for an integer sequence. Entries never change
/// once computed; concurrent fillers compute identical values, so whichever
/// writer lands is equivalent.
pub struct SeqTable {
    name: &'static str,
    values: Mutex<Vec<BigInt>>,
}

impl SeqTable {
    pub const fn new(name: &'static str) -> Self {
        SeqTable {
            name,
            values: Mutex::new(Vec::new()),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Value at index n, extending the table with `step(prefix, i)` as
    /// needed. `step` sees all values below i.
    pub fn get(&self, n: usize, step: impl Fn(&[BigInt], usize) -> BigInt) -> BigInt {
        let mut values = self.values.lock().unwrap();
        while values.len() <= n {
            let i = values.len();
            let v = step(&values, i);
            values.push(v);
        }
        values[n].clone()
    }

    pub fn prefix(&self, upto: usize, step: impl Fn(&[BigInt], usize) -> BigInt) -> Vec<BigInt> {
        self.get(upto, step);
        self.values.lock().unwrap()[..=upto].to_vec()
    }
}

static HERTZSPRUNG: SeqTable = SeqTable::new("hertzsprung");

fn hertzsprung_step(a: &[BigInt], n: usize) -> BigInt {
    match n {
        0 | 1 => BigInt::one(),
        2 | 3 => BigInt::zero(),
        _ => {
            let m = n as i64;
            BigInt::from(m + 1) * &a[n - 1] - BigInt::from(m - 2) * &a[n - 2]
                - BigInt::from(m - 5) * &a[n - 3]
                + BigInt::from(m - 3) * &a[n - 4]
        }
    }
}

/// Number of permutations of n with no bond (no two adjacent entries with
/// values differing by 1): 1, 1, 0, 0, 2, 14, 90, 646, ...
///
/// Computed by the four-term recurrence
/// a_n = (n+1) a_{n-1} - (n-2) a_{n-2} - (n-5) a_{n-3} + (n-3) a_{n-4}.
pub fn hertzsprung_numbers(upto: usize) -> Vec<BigInt> {
    HERTZSPRUNG.prefix(upto, hertzsprung_step)
}

pub fn hertzsprung_count(n: usize) -> BigInt {
    HERTZSPRUNG.get(n, hertzsprung_step)
}

/// Distribution of the bond statistic over S_n as a polynomial in t:
/// S_n(t) = sum over permutations of t^bond. Satisfies the polynomial
/// refinement of the Hertzsprung recurrence,
/// S_n = (n+1-t) S_{n-1} - (1-t)(n-2+3t) S_{n-2}
///       - (1-t)^2 (n-5+t) S_{n-3} + (1-t)^3 (n-3) S_{n-4},
/// so S_n(0) recovers the no-bond numbers and S_n(1) = n!.
pub fn bond_distribution_polys(upto: usize) -> Vec<IntPoly> {
    let t = IntPoly::from_ints(&[0, 1]);
    let one_minus_t = IntPoly::from_ints(&[1, -1]);
    let sq = &one_minus_t * &one_minus_t;
    let cube = &sq * &one_minus_t;
    let mut s: Vec<IntPoly> = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let v = match n {
            0 | 1 => IntPoly::one(),
            2 => IntPoly::from_ints(&[0, 2]),
            3 => IntPoly::from_ints(&[0, 4, 2]),
            _ => {
                let c1 = &IntPoly::from_ints(&[n as i64 + 1]) - &t;
                let c2 = &one_minus_t * &IntPoly::from_ints(&[n as i64 - 2, 3]);
                let c3 = &sq * &IntPoly::from_ints(&[n as i64 - 5, 1]);
                let c4 = cube.scale(&BigInt::from(n as i64 - 3));
                &(&(&c1 * &s[n - 1]) - &(&c2 * &s[n - 2])) - &(&(&c3 * &s[n - 3]) - &(&c4 * &s[n - 4]))
            }
        };
        s.push(v);
    }
    s
}

pub fn bond_distribution_poly(n: usize) -> IntPoly {
    bond_distribution_polys(n).pop().unwrap()
}

/// Coefficients through x^order of the formal sum
/// sum_{n >= 0} n! x^n (1-x)^n / (1+x)^n.
///
/// The sum diverges as a function but is a perfectly good formal power
/// series: the n-th summand has valuation n, so only terms n <= order
/// contribute. Its coefficients are the no-bond numbers.
pub fn flajolet_series(order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    let mut factorial = BigInt::one();
    for n in 0..=order {
        if n > 0 {
            factorial *= n;
        }
        // x^n (1-x)^n (1+x)^{-n} truncated at x^order
        let mut term = vec![BigInt::zero(); order + 1];
        term[n] = BigInt::one();
        let term = mul_trunc(&term, &binomial_pow(-1, n, order), order);
        let term = mul_trunc(&term, &neg_binomial_pow(n, order), order);
        for (o, c) in out.iter_mut().zip(&term) {
            *o += c * &factorial;
        }
    }
    out
}

/// Coefficients of (1 + s x)^n through x^order.
fn binomial_pow(s: i64, n: usize, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    let mut binom = BigInt::one();
    for j in 0..=order.min(n) {
        let mut v = binom.clone();
        if s < 0 && j % 2 == 1 {
            v = -v;
        }
        c[j] = v;
        binom = binom * (n - j) / (j + 1);
    }
    c
}

/// Coefficients of (1 + x)^{-n} through x^order:
/// [x^j] = (-1)^j C(n+j-1, j).
fn neg_binomial_pow(n: usize, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    let mut binom = BigInt::one();
    for j in 0..=order {
        c[j] = if j % 2 == 1 { -&binom } else { binom.clone() };
        if n == 0 {
            break; // (1+x)^0 = 1
        }
        binom = binom * (n + j) / (j + 1);
    }
    c
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}
