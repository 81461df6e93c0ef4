//! Chebyshev polynomials of the second kind, evaluated at rational-function
//! arguments.

use super::rational::RationalT;

/// U_r at the given argument, by the recurrence
/// U_0 = 1, U_1 = 2t, U_r = 2t U_{r-1} - U_{r-2}.
pub fn chebyshev_u(r: usize, arg: &RationalT) -> RationalT {
    let two_arg = arg.mul(&RationalT::from_int(2));
    let mut prev = RationalT::from_int(1);
    if r == 0 {
        return prev;
    }
    let mut cur = two_arg.clone();
    for _ in 2..=r {
        let next = two_arg.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;

    fn y() -> RationalT {
        RationalT::from_poly(IntPoly::from_ints(&[0, 1]))
    }

    #[test]
    fn u0_is_one() {
        let arbitrary = RationalT::new(IntPoly::from_ints(&[3, 1]), IntPoly::from_ints(&[0, 2]));
        assert_eq!(chebyshev_u(0, &arbitrary), RationalT::from_int(1));
    }

    #[test]
    fn u2_at_polynomial_argument() {
        // U_2(y) = 4y^2 - 1
        assert_eq!(chebyshev_u(2, &y()), RationalT::from_poly(IntPoly::from_ints(&[-1, 0, 4])));
    }

    #[test]
    fn u3_at_polynomial_argument() {
        // one recurrence step by hand: 2y(4y^2 - 1) - 2y = 8y^3 - 4y
        assert_eq!(chebyshev_u(3, &y()), RationalT::from_poly(IntPoly::from_ints(&[0, -4, 0, 8])));
    }
}
