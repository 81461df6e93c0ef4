//! Fraction-free linear solving over Z[x, t].

use super::bipoly::BiPoly;
use super::rational::RationalGF;
use crate::error::{Error, Result};

/// Solve M y = rhs exactly over the fraction field of Z[x, t].
///
/// Fraction-free Gauss-Jordan elimination (Bareiss/Montante): every
/// intermediate entry is a minor of the augmented matrix, and each step's
/// division by the previous pivot is exact. After n steps the diagonal holds
/// the determinant and the augmented column holds det * y_i, so each solution
/// component is returned as the normalized rational det*y_i / det.
pub fn solve_polyring_system(matrix: &[Vec<BiPoly>], rhs: &[BiPoly]) -> Result<Vec<RationalGF>> {
    let (nums, det) = solve_polyring_system_raw(matrix, rhs)?;
    Ok(nums
        .into_iter()
        .map(|n| RationalGF::new(n, det.clone()))
        .collect())
}

/// Like [`solve_polyring_system`], but returns the unnormalized pair
/// (det * y_i, det) so callers can combine components over the shared
/// denominator before normalizing.
pub fn solve_polyring_system_raw(
    matrix: &[Vec<BiPoly>],
    rhs: &[BiPoly],
) -> Result<(Vec<BiPoly>, BiPoly)> {
    let n = matrix.len();
    assert!(n > 0, "empty system");
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<BiPoly>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut prev = BiPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::SingularSystem)?;
            a.swap(k, swap);
        }
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..=n {
                let t = &(&pivot * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact by construction");
            }
        }
        prev = pivot;
    }

    let det = a[n - 1][n - 1].clone();
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    debug_assert!(a.iter().enumerate().all(|(i, row)| row[i] == det));
    Ok((a.into_iter().map(|mut row| row.pop().unwrap()).collect(), det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mono(c: i64, a: usize, b: usize) -> BiPoly {
        BiPoly::monomial(BigInt::from(c), a, b)
    }

    #[test]
    fn identity_system() {
        let id = vec![
            vec![BiPoly::one(), BiPoly::zero()],
            vec![BiPoly::zero(), BiPoly::one()],
        ];
        let rhs = vec![mono(3, 1, 0), mono(-2, 0, 2)];
        let sol = solve_polyring_system(&id, &rhs).unwrap();
        for (s, b) in sol.iter().zip(&rhs) {
            assert!(s.gf_equal(&RationalGF::new(b.clone(), BiPoly::one())));
        }
    }

    #[test]
    fn singular_detected() {
        let m = vec![
            vec![BiPoly::one(), BiPoly::one()],
            vec![BiPoly::one(), BiPoly::one()],
        ];
        let rhs = vec![BiPoly::one(), BiPoly::one()];
        assert_eq!(solve_polyring_system(&m, &rhs).unwrap_err(), Error::SingularSystem);
    }

    #[test]
    fn pivoting_handles_zero_diagonal() {
        let m = vec![
            vec![BiPoly::zero(), BiPoly::one()],
            vec![BiPoly::one(), BiPoly::zero()],
        ];
        let rhs = vec![mono(5, 0, 0), mono(7, 0, 0)];
        let sol = solve_polyring_system(&m, &rhs).unwrap();
        assert!(sol[0].gf_equal(&RationalGF::new(mono(7, 0, 0), BiPoly::one())));
        assert!(sol[1].gf_equal(&RationalGF::new(mono(5, 0, 0), BiPoly::one())));
    }

    #[test]
    fn solution_satisfies_system() {
        // 2x2 polynomial system with a generic-looking matrix.
        let m = vec![
            vec![BiPoly::from_terms(&[(1, 0, 0), (1, 1, 1)]), mono(2, 0, 1)],
            vec![mono(1, 1, 0), BiPoly::from_terms(&[(1, 0, 0), (-1, 0, 2)])],
        ];
        let rhs = vec![mono(1, 0, 1), mono(3, 1, 1)];
        let sol = solve_polyring_system(&m, &rhs).unwrap();
        // check M * sol = rhs by cross-multiplication per row
        for (row, b) in m.iter().zip(&rhs) {
            let mut acc = RationalGF::new(BiPoly::zero(), BiPoly::one());
            for (entry, s) in row.iter().zip(&sol) {
                acc = acc.add(&RationalGF::new(entry * s.num(), s.den().clone()));
            }
            assert!(acc.gf_equal(&RationalGF::new(b.clone(), BiPoly::one())));
        }
    }
}
