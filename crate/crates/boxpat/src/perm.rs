//! Permutations in one-line notation and their rectangle/box/bond statistics.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A permutation of 1..n in one-line notation. Positions and values are
/// both 1-based, matching the usual convention for the graph {(i, s_i)}.
/// The empty permutation (n = 0) is legal with all statistics 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v as usize > n {
                return Err(Error::Parse(format!("value {v} out of range 1..{n}")));
            }
            if seen[v as usize - 1] {
                return Err(Error::Parse(format!("value {v} repeated")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// Parse the text format: either concatenated digits ("471569283",
    /// n <= 9) or comma-separated integers, auto-detected by the comma.
    pub fn parse(s: &str) -> Result<Self> {
        let values = parse_one_line(s)?;
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access: value at position i.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { values: self.values.iter().rev().cloned().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.values.len() as u32;
        Permutation { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    /// All permutations of S_n in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        LexPerms::new(n)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_one_line(&self.values))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_one_line(&self.values))
    }
}

pub(crate) fn parse_one_line(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad token '{}'", tok.trim())))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad token '{c}'")))
            })
            .collect()
    }
}

pub(crate) fn format_one_line(values: &[u32]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Positions whose point has another point of the graph within the
/// 2a x 2b rectangle centered on it:
/// { i : exists j, 0 < |i-j| <= a and |s_i - s_j| <= b }.
pub fn box_match_set(sigma: &Permutation, a: u32, b: u32) -> BTreeSet<usize> {
    assert!(a >= 1 && b >= 1);
    let n = sigma.len();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let lo = i.saturating_sub(a as usize).max(1);
        let hi = (i + a as usize).min(n);
        for j in lo..=hi {
            if j != i && sigma.at(i).abs_diff(sigma.at(j)) <= b {
                out.insert(i);
                break;
            }
        }
    }
    out
}

/// The 1-box statistic bx: positions adjacent (in position) to a value
/// within distance 1.
pub fn box1_count(sigma: &Permutation) -> usize {
    box_match_set(sigma, 1, 1).len()
}

/// Number of adjacent pairs with values differing by exactly 1.
pub fn bond_count(sigma: &Permutation) -> usize {
    sigma
        .values()
        .windows(2)
        .filter(|w| w[0].abs_diff(w[1]) == 1)
        .count()
}

/// General (a,b)-rectangle count: |box_match_set|.
pub fn rect_count(sigma: &Permutation, a: u32, b: u32) -> usize {
    box_match_set(sigma, a, b).len()
}

struct LexPerms {
    next: Option<Vec<u32>>,
}

impl LexPerms {
    fn new(n: usize) -> Self {
        LexPerms { next: Some((1..=n as u32).collect()) }
    }
}

impl Iterator for LexPerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let out = Permutation { values: cur.clone() };
        let mut v = cur;
        // standard next-permutation step
        let n = v.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && v[i - 1] >= v[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while v[j] <= v[i - 1] {
                    j -= 1;
                }
                v.swap(i - 1, j);
                v[i..].reverse();
                self.next = Some(v);
            }
        }
        Some(out)
    }
}
