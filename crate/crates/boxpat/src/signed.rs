//! Signed permutations (hyperoctahedral group B_n), bad pairs, the avoider
//! recurrence, the max-occurrence count, and the basis-permutation
//! decomposition.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sequences::SeqTable;
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// An element of B_n: a permutation of 1..n with each entry optionally
/// barred. Bars are a parallel boolean vector so the consecutiveness checks
/// stay plain value arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    values: Vec<u32>,
    bars: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(values: Vec<u32>, bars: Vec<bool>) -> Result<Self> {
        if values.len() != bars.len() {
            return Err(Error::Parse(format!(
                "{} values but {} bars",
                values.len(),
                bars.len()
            )));
        }
        Permutation::new(values.clone())?;
        Ok(SignedPermutation { values, bars })
    }

    /// Comma-separated tokens; a bar is a leading minus sign or a trailing
    /// apostrophe ("-2,1,3,-4" or "2',1,3,4'").
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation { values: Vec::new(), bars: Vec::new() });
        }
        let mut values = Vec::new();
        let mut bars = Vec::new();
        for tok in s.split(',') {
            let mut tok = tok.trim();
            let mut bar = false;
            if let Some(rest) = tok.strip_prefix('-') {
                bar = true;
                tok = rest;
            }
            if let Some(rest) = tok.strip_suffix('\'') {
                bar = true;
                tok = rest;
            }
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad token '{tok}'")))?;
            values.push(v);
            bars.push(bar);
        }
        SignedPermutation::new(values, bars)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn bars(&self) -> &[bool] {
        &self.bars
    }

    /// All 2^n n! elements of B_n.
    pub fn all(n: usize) -> impl Iterator<Item = SignedPermutation> {
        Permutation::all(n).flat_map(move |p| {
            (0..1u32 << n).map(move |mask| SignedPermutation {
                values: p.values().to_vec(),
                bars: (0..n).map(|i| mask >> i & 1 == 1).collect(),
            })
        })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .values
            .iter()
            .zip(&self.bars)
            .map(|(v, &b)| if b { format!("-{v}") } else { v.to_string() })
            .collect();
        write!(f, "{}", toks.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of bad pairs: adjacent factors j(j+1) with both entries unbarred,
/// or (j+1)bar jbar with both entries barred.
pub fn bad_pair_count(pi: &SignedPermutation) -> usize {
    let v = pi.values();
    let b = pi.bars();
    (1..v.len())
        .filter(|&i| {
            (!b[i - 1] && !b[i] && v[i] == v[i - 1] + 1)
                || (b[i - 1] && b[i] && v[i - 1] == v[i] + 1)
        })
        .count()
}

static AVOIDERS: SeqTable = SeqTable::new("signed-avoiders");

fn avoider_step(a: &[BigInt], n: usize) -> BigInt {
    match n {
        0 => BigInt::one(),
        1 => BigInt::from(2),
        _ => {
            let m = n as i64;
            BigInt::from(2 * m - 1) * &a[n - 1] + BigInt::from(2 * (m - 2)) * &a[n - 2]
        }
    }
}

/// a_n: number of elements of B_n with no bad pair, by the recurrence
/// a_n = (2n-1) a_{n-1} + 2(n-2) a_{n-2}, a_0 = 1, a_1 = 2.
pub fn avoider_count(n: usize) -> BigInt {
    AVOIDERS.get(n, avoider_step)
}

pub fn avoider_numbers(upto: usize) -> Vec<BigInt> {
    AVOIDERS.prefix(upto, avoider_step)
}

/// b_n = (n-1) a_{n-1}: number of elements of B_n with exactly one bad pair.
pub fn one_bad_pair_count(n: usize) -> BigInt {
    assert!(n >= 1);
    BigInt::from(n as i64 - 1) * avoider_count(n - 1)
}

/// Coefficient form of the ODE A''(t)(1-2t) = (2t+3)A'(t) satisfied by the
/// EGF of a_n: checks a_{n+2} = (2n+3) a_{n+1} + 2n a_n for 0 <= n <= N-2.
pub fn egf_ode_check(n_max: usize) -> bool {
    assert!(n_max >= 2);
    let a = avoider_numbers(n_max);
    (0..=n_max - 2).all(|n| {
        a[n + 2] == BigInt::from(2 * n as i64 + 3) * &a[n + 1] + BigInt::from(2 * n as i64) * &a[n]
    })
}

/// Number of permutations of n attaining the maximal 1-box count n:
/// sum_{j=1}^{floor(n/2)} C(n-j-1, j-1) a_j, with the value 1 for n = 0, 1.
pub fn max_box_count(n: usize) -> BigInt {
    if n <= 1 {
        return BigInt::one();
    }
    let mut total = BigInt::from(0);
    for j in 1..=n / 2 {
        total += binomial(n - j - 1, j - 1) * avoider_count(j);
    }
    total
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut b = BigInt::one();
    for j in 0..k {
        b = b * (n - j) / (j + 1);
    }
    b
}

/// Decompose a max-attaining permutation into maximal runs of consecutive
/// values (each necessarily monotone) and encode the runs as a signed
/// permutation: runs ranked by their value intervals get labels 1, 2, ...,
/// barred when the run is decreasing.
pub fn basis_permutation(sigma: &Permutation) -> Result<SignedPermutation> {
    basis_blocks(sigma).map(|(basis, _)| basis)
}

/// [`basis_permutation`] together with the block lengths in position order;
/// the pair determines the original permutation.
pub fn basis_blocks(sigma: &Permutation) -> Result<(SignedPermutation, Vec<usize>)> {
    let v = sigma.values();
    let n = v.len();
    // split into maximal runs with |difference| = 1 and constant direction
    let mut runs: Vec<(usize, usize)> = Vec::new(); // [start, end) in 0-based positions
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        if end < n && v[end].abs_diff(v[start]) == 1 {
            let step = v[end] as i64 - v[start] as i64;
            while end < n && v[end] as i64 - v[end - 1] as i64 == step {
                end += 1;
            }
        }
        if end - start == 1 {
            return Err(Error::NotMaximal { position: start + 1 });
        }
        runs.push((start, end));
        start = end;
    }
    // rank runs by minimum value; the intervals partition 1..n, so the
    // minimum determines the order
    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by_key(|&r| v[runs[r].0..runs[r].1].iter().min().copied());
    let mut label = vec![0u32; runs.len()];
    for (rank, &r) in order.iter().enumerate() {
        label[r] = rank as u32 + 1;
    }
    let bars = runs.iter().map(|&(s, e)| v[e - 1] < v[s]).collect();
    let lengths = runs.iter().map(|&(s, e)| e - s).collect();
    Ok((SignedPermutation::new(label, bars)?, lengths))
}

/// Inverse of [`basis_blocks`]: rebuild the permutation whose i-th block
/// (in position order) has the given length and whose basis is `basis`.
pub fn from_basis(basis: &SignedPermutation, lengths: &[usize]) -> Result<Permutation> {
    if basis.len() != lengths.len() {
        return Err(Error::Parse(format!(
            "{} blocks but {} lengths",
            basis.len(),
            lengths.len()
        )));
    }
    // the block labeled r occupies the r-th value interval
    let mut start_of_label = vec![0u32; basis.len() + 1];
    let mut acc = 1u32;
    for label in 1..=basis.len() as u32 {
        start_of_label[label as usize] = acc;
        let pos = basis.values().iter().position(|&v| v == label).unwrap();
        acc += lengths[pos] as u32;
    }
    let mut values = Vec::new();
    for ((&label, &barred), &len) in basis.values().iter().zip(basis.bars()).zip(lengths) {
        let lo = start_of_label[label as usize];
        let hi = lo + len as u32 - 1;
        if barred {
            values.extend((lo..=hi).rev());
        } else {
            values.extend(lo..=hi);
        }
    }
    Permutation::new(values)
}
