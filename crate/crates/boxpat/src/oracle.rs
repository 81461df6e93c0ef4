//! Brute-force enumerators. These are the ground truth that the transfer
//! systems and closed formulas are checked against: every oracle is a plain
//! exhaustive scan with no shared machinery beyond the statistics itself.

use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::lego::{enumerate_row_configs, LegoWall};
use crate::perm::{bond_count, box1_count, rect_count, Permutation};
use crate::signed::{bad_pair_count, SignedPermutation};
use crate::word::{box1_count_word, k_bond_count, rect_count_word, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Statistic selector for permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermStat {
    Box1,
    Bond,
    Rect { a: u32, b: u32 },
}

/// Statistic selector for words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordStat {
    KBond(u32),
    Box1,
    Rect { a: u32, b: u32 },
}

/// A statistic distribution: coefficient of x^m counts objects with
/// statistic value m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub n: usize,
    pub poly: IntPoly,
}

/// Enumeration ceilings. Scans refuse to start past these rather than
/// silently taking hours.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub perm_n: usize,
    pub signed_n: usize,
    pub word_evals: u64,
    pub wall_evals: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            perm_n: 9,
            signed_n: 7,
            word_evals: 100_000_000,
            wall_evals: 100_000_000,
        }
    }
}

fn tally(values: impl Iterator<Item = usize>, total_expected: Option<&BigInt>) -> IntPoly {
    let mut counts: Vec<BigInt> = Vec::new();
    let mut total = BigInt::zero();
    for v in values {
        if counts.len() <= v {
            counts.resize(v + 1, BigInt::zero());
        }
        counts[v] += 1;
        total += 1;
    }
    if counts.is_empty() {
        counts.push(BigInt::one()); // the single empty object, statistic 0
        total += 1;
    }
    let poly = IntPoly::from_coeffs(counts);
    if let Some(expect) = total_expected {
        assert_eq!(&total, expect, "oracle normalization check failed");
        assert_eq!(&poly.eval(&BigInt::one()), expect);
    }
    poly
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Distribution of a statistic over S_n by exhaustive scan.
pub fn perm_distribution(n: usize, stat: PermStat, bounds: &Bounds) -> Result<Distribution> {
    if n > bounds.perm_n {
        return Err(Error::BoundExceeded(format!(
            "S_{n} scan exceeds the bound n <= {}",
            bounds.perm_n
        )));
    }
    let eval = |p: &Permutation| match stat {
        PermStat::Box1 => box1_count(p),
        PermStat::Bond => bond_count(p),
        PermStat::Rect { a, b } => rect_count(p, a, b),
    };
    let poly = tally(Permutation::all(n).map(|p| eval(&p)), Some(&factorial(n)));
    Ok(Distribution { n, poly })
}

/// Distribution of bad pairs over B_n by exhaustive scan.
pub fn signed_distribution(n: usize, bounds: &Bounds) -> Result<Distribution> {
    if n > bounds.signed_n {
        return Err(Error::BoundExceeded(format!(
            "B_{n} scan exceeds the bound n <= {}",
            bounds.signed_n
        )));
    }
    let total = factorial(n) << n;
    let poly = tally(
        SignedPermutation::all(n).map(|p| bad_pair_count(&p)),
        Some(&total),
    );
    Ok(Distribution { n, poly })
}

/// Distribution of a word statistic over [l]^n by exhaustive scan.
pub fn word_distribution(l: u32, n: usize, stat: WordStat, bounds: &Bounds) -> Result<Distribution> {
    let evals = (l as u64).checked_pow(n as u32);
    if evals.is_none() || evals.unwrap() > bounds.word_evals {
        return Err(Error::BoundExceeded(format!(
            "{l}^{n} word scan exceeds the bound {} evaluations",
            bounds.word_evals
        )));
    }
    let eval = |w: &Word| match stat {
        WordStat::KBond(k) => k_bond_count(w, k),
        WordStat::Box1 => box1_count_word(w),
        WordStat::Rect { a, b } => rect_count_word(w, a, b),
    };
    let total = BigInt::from(l).pow(n as u32);
    let poly = tally(Word::all(n, l).map(|w| eval(&w)), Some(&total));
    Ok(Distribution { n, poly })
}

/// Number of stable walls by explicit construction of every candidate stack
/// (validates the DP in the bijections module).
pub fn wall_distribution(
    width: u32,
    brick_set: &[u32],
    height: usize,
    bounds: &Bounds,
) -> Result<BigInt> {
    let configs = enumerate_row_configs(width, brick_set);
    let m = configs.len() as u64;
    let evals = m.checked_pow(height as u32);
    if evals.is_none() || evals.unwrap() > bounds.wall_evals {
        return Err(Error::BoundExceeded(format!(
            "{m}^{height} wall scan exceeds the bound {} evaluations",
            bounds.wall_evals
        )));
    }
    let mut count = BigInt::zero();
    let mut stack = vec![0usize; height];
    loop {
        let rows = stack.iter().map(|&i| configs[i].clone()).collect();
        let wall = LegoWall::new(width, rows).expect("configs have the right width");
        if wall.is_stable() {
            count += 1;
        }
        // odometer increment
        let mut pos = height;
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            stack[pos] += 1;
            if stack[pos] < configs.len() {
                break;
            }
            stack[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{bond_distribution_poly, hertzsprung_count};
    use crate::signed::{avoider_count, one_bad_pair_count};

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn s3_bond() {
        let d = perm_distribution(3, PermStat::Bond, &b()).unwrap();
        assert_eq!(d.poly, IntPoly::from_ints(&[0, 4, 2]));
    }

    #[test]
    fn s4_box1() {
        let d = perm_distribution(4, PermStat::Box1, &b()).unwrap();
        assert_eq!(d.poly, IntPoly::from_ints(&[2, 0, 10, 4, 8]));
    }

    #[test]
    fn empty_objects() {
        assert_eq!(
            perm_distribution(0, PermStat::Bond, &b()).unwrap().poly,
            IntPoly::one()
        );
        assert_eq!(
            word_distribution(4, 0, WordStat::Box1, &b()).unwrap().poly,
            IntPoly::one()
        );
    }

    #[test]
    fn bond_matches_riordan() {
        for n in 0..=7 {
            let d = perm_distribution(n, PermStat::Bond, &b()).unwrap();
            assert_eq!(d.poly, bond_distribution_poly(n), "n = {n}");
            assert_eq!(d.poly.constant_term(), hertzsprung_count(n));
        }
    }

    #[test]
    fn signed_counts() {
        for n in 0..=5 {
            let d = signed_distribution(n, &b()).unwrap();
            assert_eq!(d.poly.constant_term(), avoider_count(n), "n = {n}");
            if n >= 1 {
                assert_eq!(d.poly.coeff(1), one_bad_pair_count(n), "n = {n}");
            }
        }
    }

    #[test]
    fn word_small_tables() {
        let d = word_distribution(3, 2, WordStat::KBond(1), &b()).unwrap();
        assert_eq!(d.poly, IntPoly::from_ints(&[2, 7]));
        let d = word_distribution(4, 3, WordStat::Box1, &b()).unwrap();
        assert_eq!(d.poly, IntPoly::from_ints(&[10, 0, 28, 26]));
        let d = word_distribution(5, 2, WordStat::Rect { a: 1, b: 2 }, &b()).unwrap();
        assert_eq!(d.poly, IntPoly::from_ints(&[6, 0, 19]));
    }

    #[test]
    fn walls_match_dp() {
        use crate::lego::count_stable_walls;
        for h in 0..=5 {
            assert_eq!(
                wall_distribution(7, &[2, 3, 4], h, &b()).unwrap(),
                count_stable_walls(7, &[2, 3, 4], h),
                "height {h}"
            );
        }
        assert_eq!(wall_distribution(4, &[2, 3, 4], 2, &b()).unwrap(), BigInt::from(3));
    }

    #[test]
    fn bounds_enforced() {
        assert!(matches!(
            perm_distribution(10, PermStat::Bond, &b()),
            Err(Error::BoundExceeded(_))
        ));
        let tight = Bounds { word_evals: 10, ..b() };
        assert!(word_distribution(5, 3, WordStat::Box1, &tight).is_err());
    }
}
