//! Embedded reference data: closed-form generating functions, printed series
//! expansions, and integer-sequence prefixes that the engine must reproduce
//! exactly.
//!
//! Everything here is a transcription of published tables (several carry OEIS
//! identifiers); nothing is recomputed. The verification layer and the
//! acceptance suite compare engine output against these values at exact
//! equality.

use crate::algebra::{BiPoly, IntPoly, RationalGF, RationalT, TSeries};

/// A named reference sequence prefix.
pub struct GoldenTable {
    pub id: &'static str,
    pub terms: &'static [i64],
    pub source: &'static str,
}

fn gf(num: &[(i64, usize, usize)], den: &[(i64, usize, usize)]) -> RationalGF {
    RationalGF::new(BiPoly::from_terms(num), BiPoly::from_terms(den))
}

fn rt(num: &[i64], den: &[i64]) -> RationalT {
    RationalT::new(IntPoly::from_ints(num), IntPoly::from_ints(den))
}

/// Build a [`TSeries`] from rows of x-coefficients, row n = coefficient of t^n.
pub fn expansion_series(rows: &[&[i64]]) -> TSeries {
    let mut s = TSeries::zero(rows.len() - 1);
    for (n, row) in rows.iter().enumerate() {
        s.set_coeff(n, IntPoly::from_ints(row));
    }
    s
}

// ---------------------------------------------------------------------------
// k-bond distribution closed forms (ell-letter alphabet), k = 1 and k = 2.
// ---------------------------------------------------------------------------

/// Published closed form for the k-bond distribution over `[ell]^*`.
pub fn kbond_gf(ell: u32, k: u32) -> Option<RationalGF> {
    Some(match (ell, k) {
        // (1-2(x-1)t-(x-1)^2 t^2) / (1-t-2xt-x(x-1)t^2)
        (3, 1) => gf(
            &[(1, 0, 0), (2, 0, 1), (-2, 1, 1), (-1, 0, 2), (2, 1, 2), (-1, 2, 2)],
            &[(1, 0, 0), (-1, 0, 1), (-2, 1, 1), (1, 1, 2), (-1, 2, 2)],
        ),
        // (1-3(x-1)t+(x-1)^2 t^2) / (1-(3x+1)t+(x^2-1)t^2)
        (4, 1) => gf(
            &[(1, 0, 0), (3, 0, 1), (-3, 1, 1), (1, 0, 2), (-2, 1, 2), (1, 2, 2)],
            &[(1, 0, 0), (-1, 0, 1), (-3, 1, 1), (-1, 0, 2), (1, 2, 2)],
        ),
        // (1-3(x-1)t+2(x-1)^3 t^3) / (1-(3x+2)t+2(x-1)t^2+2(x+1)(x-1)^2 t^3)
        (5, 1) => gf(
            &[
                (1, 0, 0),
                (3, 0, 1),
                (-3, 1, 1),
                (-2, 0, 3),
                (6, 1, 3),
                (-6, 2, 3),
                (2, 3, 3),
            ],
            &[
                (1, 0, 0),
                (-2, 0, 1),
                (-3, 1, 1),
                (-2, 0, 2),
                (2, 1, 2),
                (2, 0, 3),
                (-2, 1, 3),
                (-2, 2, 3),
                (2, 3, 3),
            ],
        ),
        // (1-4(x-1)t+3(x-1)^2 t^2+(x-1)^3 t^3)
        //   / (1-2(2x+1)t+(3x^2+2x-5)t^2+(x+1)(x-1)^2 t^3)
        (6, 1) => gf(
            &[
                (1, 0, 0),
                (4, 0, 1),
                (-4, 1, 1),
                (3, 0, 2),
                (-6, 1, 2),
                (3, 2, 2),
                (-1, 0, 3),
                (3, 1, 3),
                (-3, 2, 3),
                (1, 3, 3),
            ],
            &[
                (1, 0, 0),
                (-2, 0, 1),
                (-4, 1, 1),
                (-5, 0, 2),
                (2, 1, 2),
                (3, 2, 2),
                (1, 0, 3),
                (-1, 1, 3),
                (-1, 2, 3),
                (1, 3, 3),
            ],
        ),
        // (1-4(x-1)t+2(x-1)^2 t^2+4(x-1)^3 t^3-(x-1)^4 t^4)
        //   / (1-(4x+3)t-(7-5x-2x^2)t^2+(4x+5)(x-1)^2 t^3-(x+2)(x-1)^3 t^4)
        (7, 1) => gf(
            &[
                (1, 0, 0),
                (4, 0, 1),
                (-4, 1, 1),
                (2, 0, 2),
                (-4, 1, 2),
                (2, 2, 2),
                (-4, 0, 3),
                (12, 1, 3),
                (-12, 2, 3),
                (4, 3, 3),
                (-1, 0, 4),
                (4, 1, 4),
                (-6, 2, 4),
                (4, 3, 4),
                (-1, 4, 4),
            ],
            &[
                (1, 0, 0),
                (-3, 0, 1),
                (-4, 1, 1),
                (-7, 0, 2),
                (5, 1, 2),
                (2, 2, 2),
                (5, 0, 3),
                (-6, 1, 3),
                (-3, 2, 3),
                (4, 3, 3),
                (2, 0, 4),
                (-5, 1, 4),
                (3, 2, 4),
                (1, 3, 4),
                (-1, 4, 4),
            ],
        ),
        // (1-3t(-1+x)-2t^2(-1+x)^2) / (1-t-3tx-2t^2(-1+x)x)
        (4, 2) => gf(
            &[(1, 0, 0), (3, 0, 1), (-3, 1, 1), (-2, 0, 2), (4, 1, 2), (-2, 2, 2)],
            &[(1, 0, 0), (-1, 0, 1), (-3, 1, 1), (2, 1, 2), (-2, 2, 2)],
        ),
        // (1-4t(-1+x)+t^3(-1+x)^3) / (1+t^2(-1+x)+t^3(-1+x)^2 x-t(1+4x))
        (5, 2) => gf(
            &[
                (1, 0, 0),
                (4, 0, 1),
                (-4, 1, 1),
                (-1, 0, 3),
                (3, 1, 3),
                (-3, 2, 3),
                (1, 3, 3),
            ],
            &[
                (1, 0, 0),
                (-1, 0, 1),
                (-4, 1, 1),
                (-1, 0, 2),
                (1, 1, 2),
                (1, 1, 3),
                (-2, 2, 3),
                (1, 3, 3),
            ],
        ),
        // (1-4t(-1+x)-t^2(-1+x)^2+t^3(-1+x)^3)
        //   / (1-t^2(-1+x)^2+t^3(-1+x)^2(1+x)-2t(1+2x))
        (6, 2) => gf(
            &[
                (1, 0, 0),
                (4, 0, 1),
                (-4, 1, 1),
                (-1, 0, 2),
                (2, 1, 2),
                (-1, 2, 2),
                (-1, 0, 3),
                (3, 1, 3),
                (-3, 2, 3),
                (1, 3, 3),
            ],
            &[
                (1, 0, 0),
                (-2, 0, 1),
                (-4, 1, 1),
                (-1, 0, 2),
                (2, 1, 2),
                (-1, 2, 2),
                (1, 0, 3),
                (-1, 1, 3),
                (-1, 2, 3),
                (1, 3, 3),
            ],
        ),
        // (1-5t(-1+x)+2t^2(-1+x)^2+4t^3(-1+x)^3-2t^4(-1+x)^4)
        //   / (1-2t^4(-1+x)^3(1+x)+2t^3(-1+x)^2(1+2x)-t(2+5x)+2t^2(-2+x+x^2))
        (7, 2) => gf(
            &[
                (1, 0, 0),
                (5, 0, 1),
                (-5, 1, 1),
                (2, 0, 2),
                (-4, 1, 2),
                (2, 2, 2),
                (-4, 0, 3),
                (12, 1, 3),
                (-12, 2, 3),
                (4, 3, 3),
                (-2, 0, 4),
                (8, 1, 4),
                (-12, 2, 4),
                (8, 3, 4),
                (-2, 4, 4),
            ],
            &[
                (1, 0, 0),
                (-2, 0, 1),
                (-5, 1, 1),
                (-4, 0, 2),
                (2, 1, 2),
                (2, 2, 2),
                (2, 0, 3),
                (-6, 2, 3),
                (4, 3, 3),
                (2, 0, 4),
                (-4, 1, 4),
                (4, 3, 4),
                (-2, 4, 4),
            ],
        ),
        _ => return None,
    })
}

/// Printed expansion (through t^8) of the k-bond distribution.
/// Row n holds the x-coefficients of the t^n term.
pub fn kbond_expansion(ell: u32, k: u32) -> Option<&'static [&'static [i64]]> {
    const A31: &[&[i64]] = &[
        &[1],
        &[3],
        &[2, 7],
        &[2, 8, 17],
        &[2, 10, 28, 41],
        &[2, 12, 42, 88, 99],
        &[2, 14, 58, 154, 262, 239],
        &[2, 16, 76, 240, 524, 752, 577],
        &[2, 18, 96, 348, 908, 1692, 2104, 1393],
    ];
    const A41: &[&[i64]] = &[
        &[1],
        &[4],
        &[6, 10],
        &[10, 28, 26],
        &[16, 68, 104, 68],
        &[26, 144, 324, 352, 178],
        &[42, 290, 844, 1324, 1130, 466],
        &[68, 560, 2012, 4064, 4956, 3504, 1220],
        &[110, 1054, 4494, 11134, 17434, 17514, 10602, 3194],
    ];
    const A51: &[&[i64]] = &[
        &[1],
        &[5],
        &[12, 13],
        &[30, 60, 35],
        &[74, 222, 234, 95],
        &[184, 724, 1134, 824, 259],
        &[456, 2236, 4574, 4902, 2750, 707],
        &[1132, 6624, 16800, 23480, 19290, 8868, 1931],
        &[2808, 19124, 57696, 99716, 106666, 71418, 27922, 5275],
    ];
    const A61: &[&[i64]] = &[
        &[1],
        &[6],
        &[20, 16],
        &[68, 104, 44],
        &[230, 526, 418, 122],
        &[780, 2360, 2784, 1512, 340],
        &[2642, 9974, 15484, 12436, 5170, 950],
        &[8954, 40460, 78062, 82312, 50422, 17068, 2658],
        &[30338, 159742, 367866, 481014, 386214, 191994, 55006, 7442],
    ];
    const A71: &[&[i64]] = &[
        &[1],
        &[7],
        &[30, 19],
        &[130, 160, 53],
        &[562, 1034, 656, 149],
        &[2432, 5940, 5598, 2416, 421],
        &[10520, 32068, 39942, 25526, 8400, 1193],
        &[45514, 166236, 257634, 217088, 105512, 28172, 3387],
        &[196898, 838274, 1553178, 1625554, 1039904, 409176, 92190, 9627],
    ];
    const A42: &[&[i64]] = &[
        &[1],
        &[4],
        &[2, 14],
        &[2, 12, 50],
        &[2, 14, 62, 178],
        &[2, 16, 84, 288, 634],
        &[2, 18, 108, 444, 1266, 2258],
        &[2, 20, 134, 632, 2190, 5364, 8042],
        &[2, 22, 162, 854, 3414, 10290, 22150, 28642],
    ];
    const A52: &[&[i64]] = &[
        &[1],
        &[5],
        &[6, 19],
        &[10, 40, 75],
        &[16, 88, 226, 295],
        &[26, 176, 606, 1156, 1161],
        &[42, 342, 1428, 3644, 5600, 4569],
        &[68, 644, 3170, 9840, 20250, 26172, 17981],
        &[110, 1190, 6708, 24456, 61446, 106686, 119266, 70763],
    ];
    const A62: &[&[i64]] = &[
        &[1],
        &[6],
        &[12, 24],
        &[28, 88, 100],
        &[62, 294, 522, 418],
        &[140, 856, 2208, 2824, 1748],
        &[314, 2382, 7852, 14308, 14490, 7310],
        &[706, 6364, 25702, 59624, 85166, 71804, 30570],
        &[1586, 16590, 79050, 223142, 404982, 479274, 347150, 127842],
    ];
    const A72: &[&[i64]] = &[
        &[1],
        &[7],
        &[20, 29],
        &[62, 156, 125],
        &[186, 710, 962, 543],
        &[566, 2820, 5658, 5400, 2363],
        &[1712, 10648, 27710, 38526, 28766, 10287],
        &[5192, 38520, 124086, 222928, 239930, 148100, 44787],
        &[15728, 135852, 519888, 1149548, 1594738, 1409754, 744298, 194995],
    ];
    Some(match (ell, k) {
        (3, 1) => A31,
        (4, 1) => A41,
        (5, 1) => A51,
        (6, 1) => A61,
        (7, 1) => A71,
        (4, 2) => A42,
        (5, 2) => A52,
        (6, 2) => A62,
        (7, 2) => A72,
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// (1,k)-rectangle distribution closed forms and expansions.
// ---------------------------------------------------------------------------

/// Published closed form for the (1,k)-rectangle distribution over `[ell]^*`.
pub fn rect1k_gf(ell: u32, k: u32) -> Option<RationalGF> {
    Some(match (ell, k) {
        // (1+2(1-x)t-(1+4x-5x^2)t^2+2x(1-x)^2 t^3+x^2(1-x)^2 t^4)
        //   / (1-(1+2x)t+2x(1-x)t^2+x^2(1-x)t^3)
        (3, 1) => gf(
            &[
                (1, 0, 0),
                (2, 0, 1),
                (-2, 1, 1),
                (-1, 0, 2),
                (-4, 1, 2),
                (5, 2, 2),
                (2, 1, 3),
                (-4, 2, 3),
                (2, 3, 3),
                (1, 2, 4),
                (-2, 3, 4),
                (1, 4, 4),
            ],
            &[
                (1, 0, 0),
                (-1, 0, 1),
                (-2, 1, 1),
                (2, 1, 2),
                (-2, 2, 2),
                (1, 2, 3),
                (-1, 3, 3),
            ],
        ),
        // (1+3(1-x)t+(1-9x+8x^2)t^2-3x(1-x)^2 t^3+x^2(1-x)^2 t^4)
        //   / (1-(1+3x)t-(1-3x+2x^2)t^2+x(3-4x+x^2)t^3-x^2(1-x)^2 t^4)
        // The published display carries a minus sign on the t^3 denominator
        // term; with that sign the display contradicts its own printed
        // expansion from t^3 on. Flipping it (done here) makes the closed
        // form agree with the printed expansion, the transfer engine, and
        // brute force. See B41_DEN_T3_SIGN_AS_PUBLISHED.
        (4, 1) => gf(
            &[
                (1, 0, 0),
                (3, 0, 1),
                (-3, 1, 1),
                (1, 0, 2),
                (-9, 1, 2),
                (8, 2, 2),
                (-3, 1, 3),
                (6, 2, 3),
                (-3, 3, 3),
                (1, 2, 4),
                (-2, 3, 4),
                (1, 4, 4),
            ],
            &[
                (1, 0, 0),
                (-1, 0, 1),
                (-3, 1, 1),
                (-1, 0, 2),
                (3, 1, 2),
                (-2, 2, 2),
                (3, 1, 3),
                (-4, 2, 3),
                (1, 3, 3),
                (-1, 2, 4),
                (2, 3, 4),
                (-1, 4, 4),
            ],
        ),
        // f = 1+3(1-x)t-9x(1-x)t^2-2(1-x)^2(1+2x)t^3+6x(1-x)^2(1+x)t^4
        //       -4(1-x)^3 x^3 t^6
        // g = 1-(2+3x)t-(2-6x+4x^2)t^2-(-2-6x+8x^2)t^3-6(1-x)^2 x(1+x)t^4
        //       -4(1-x)^2 x^3 t^5+4(1-x)^3 x^3 t^6
        // The published display writes the t^2 numerator term with a plus
        // sign; that contradicts the printed expansion (already at t^2),
        // the transfer engine, and brute force, all of which require the
        // minus sign used here. The denominator is as published.
        (5, 1) => gf(
            &[
                (1, 0, 0),
                (3, 0, 1),
                (-3, 1, 1),
                (-9, 1, 2),
                (9, 2, 2),
                (-2, 0, 3),
                (6, 2, 3),
                (-4, 3, 3),
                (6, 1, 4),
                (-6, 2, 4),
                (-6, 3, 4),
                (6, 4, 4),
                (-4, 3, 6),
                (12, 4, 6),
                (-12, 5, 6),
                (4, 6, 6),
            ],
            &[
                (1, 0, 0),
                (-2, 0, 1),
                (-3, 1, 1),
                (-2, 0, 2),
                (6, 1, 2),
                (-4, 2, 2),
                (2, 0, 3),
                (6, 1, 3),
                (-8, 2, 3),
                (-6, 1, 4),
                (6, 2, 4),
                (6, 3, 4),
                (-6, 4, 4),
                (-4, 3, 5),
                (8, 4, 5),
                (-4, 5, 5),
                (4, 3, 6),
                (-12, 4, 6),
                (12, 5, 6),
                (-4, 6, 6),
            ],
        ),
        // (1-3t(-1+x)+6t^3(-1+x)^2 x+4t^4(-1+x)^2 x^2-t^2(2+9x-11x^2))
        //   / (1-t-3tx-3t^2(-1+x)x-2t^3(-1+x)x^2)
        // The published display has the t^2 numerator term and the t^3
        // denominator term with opposite signs; as printed it contradicts
        // its own expansion at t^2. The signs used here agree with the
        // printed expansion, the transfer engine, and brute force.
        (4, 2) => gf(
            &[
                (1, 0, 0),
                (3, 0, 1),
                (-3, 1, 1),
                (-2, 0, 2),
                (-9, 1, 2),
                (11, 2, 2),
                (6, 1, 3),
                (-12, 2, 3),
                (6, 3, 3),
                (4, 2, 4),
                (-8, 3, 4),
                (4, 4, 4),
            ],
            &[
                (1, 0, 0),
                (-1, 0, 1),
                (-3, 1, 1),
                (3, 1, 2),
                (-3, 2, 2),
                (2, 2, 3),
                (-2, 3, 3),
            ],
        ),
        // Fully expanded form of the published nested expression.
        (5, 2) => gf(
            &[
                (1, 0, 0),
                (4, 0, 1),
                (-4, 1, 1),
                (-16, 1, 2),
                (16, 2, 2),
                (-1, 0, 3),
                (3, 2, 3),
                (-2, 3, 3),
                (4, 1, 4),
                (-4, 2, 4),
                (-4, 3, 4),
                (4, 4, 4),
                (-1, 3, 6),
                (3, 4, 6),
                (-3, 5, 6),
                (1, 6, 6),
            ],
            &[
                (1, 0, 0),
                (-1, 0, 1),
                (-4, 1, 1),
                (-1, 0, 2),
                (4, 1, 2),
                (-3, 2, 2),
                (4, 1, 3),
                (-3, 2, 3),
                (-1, 3, 3),
                (-1, 3, 5),
                (2, 4, 5),
                (-1, 5, 5),
            ],
        ),
        _ => return None,
    })
}

/// Printed expansion (through t^8) of the (1,k)-rectangle distribution.
pub fn rect1k_expansion(ell: u32, k: u32) -> Option<&'static [&'static [i64]]> {
    const B31: &[&[i64]] = &[
        &[1],
        &[3],
        &[2, 0, 7],
        &[2, 0, 8, 17],
        &[2, 0, 10, 20, 49],
        &[2, 0, 12, 26, 64, 139],
        &[2, 0, 14, 32, 88, 200, 393],
        &[2, 0, 16, 38, 114, 290, 614, 1113],
        &[2, 0, 18, 44, 142, 392, 932, 1880, 3151],
    ];
    const B41: &[&[i64]] = &[
        &[1],
        &[4],
        &[6, 0, 10],
        &[10, 0, 28, 26],
        &[16, 0, 68, 72, 100],
        &[26, 0, 144, 174, 338, 342],
        &[42, 0, 290, 368, 930, 1256, 1210],
        &[68, 0, 560, 740, 2232, 3612, 4932, 4240],
        &[110, 0, 1054, 1428, 4996, 8984, 15246, 18820, 14898],
    ];
    const B51: &[&[i64]] = &[
        &[1],
        &[5],
        &[12, 0, 13],
        &[30, 0, 60, 35],
        &[74, 0, 222, 160, 169],
        &[184, 0, 724, 592, 974, 651],
        &[456, 0, 2236, 1932, 4238, 4048, 2715],
        &[1132, 0, 6624, 5968, 16036, 18372, 18982, 11011],
        &[2808, 0, 19124, 17688, 56072, 71724, 94282, 83828, 45099],
    ];
    const B42: &[&[i64]] = &[
        &[1],
        &[4],
        &[2, 0, 14],
        &[2, 0, 12, 50],
        &[2, 0, 14, 44, 196],
        &[2, 0, 16, 54, 186, 766],
        &[2, 0, 18, 64, 234, 792, 2986],
        &[2, 0, 20, 74, 284, 1038, 3318, 11648],
        &[2, 0, 22, 84, 336, 1304, 4494, 13860, 45434],
    ];
    const B52: &[&[i64]] = &[
        &[1],
        &[5],
        &[6, 0, 19],
        &[10, 0, 40, 75],
        &[16, 0, 88, 160, 361],
        &[26, 0, 176, 358, 876, 1689],
        &[42, 0, 342, 724, 2106, 4496, 7915],
        &[68, 0, 644, 1416, 4586, 11328, 22976, 37107],
        &[110, 0, 1190, 2680, 9562, 25712, 60762, 116672, 173937],
    ];
    Some(match (ell, k) {
        (3, 1) => B31,
        (4, 1) => B41,
        (5, 1) => B51,
        (4, 2) => B42,
        (5, 2) => B52,
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Avoidance: generating functions and table rows at x = 0.
// ---------------------------------------------------------------------------

/// Closed form for the number of `[ell]^n` words avoiding the (1,k)-rectangle
/// pattern (equivalently, with no k-bond).
pub fn avoidance_gf(ell: u32, k: u32) -> Option<RationalT> {
    Some(match (ell, k) {
        (3, 1) => rt(&[1, 2, -1], &[1, -1]),
        (4, 1) => rt(&[1, 3, 1], &[1, -1, -1]),
        (5, 1) => rt(&[1, 3, 0, -2], &[1, -2, -2, 2]),
        (6, 1) => rt(&[1, 4, 3, -1], &[1, -2, -5, 1]),
        (7, 1) => rt(&[1, 4, 2, -4, -1], &[1, -3, -7, 5, 2]),
        (4, 2) => rt(&[1, 3, -2], &[1, -1]),
        (5, 2) => rt(&[1, 4, 0, -1], &[1, -1, -1]),
        (6, 2) => rt(&[1, 4, -1, -1], &[1, -2, -1, 1]),
        (7, 2) => rt(&[1, 5, 2, -4, -2], &[1, -2, -4, 2, 2]),
        _ => return None,
    })
}

/// Published avoidance-count rows (lengths 0..=9).
pub fn avoidance_row(ell: u32, k: u32) -> Option<&'static [i64]> {
    Some(match (ell, k) {
        (3, 1) => &[1, 3, 2, 2, 2, 2, 2, 2, 2, 2],
        (4, 1) => &[1, 4, 6, 10, 16, 26, 42, 68, 110, 178],
        (5, 1) => &[1, 5, 12, 30, 74, 184, 456, 1132, 2808, 6968],
        (6, 1) => &[1, 6, 20, 68, 230, 780, 2642, 8954, 30338, 102804],
        (7, 1) => &[1, 7, 30, 130, 562, 2432, 10520, 45514, 196898, 851828],
        (4, 2) => &[1, 4, 2, 2, 2, 2, 2, 2, 2, 2],
        (5, 2) => &[1, 5, 6, 10, 16, 26, 42, 68, 110, 178],
        (6, 2) => &[1, 6, 12, 28, 62, 140, 314, 706, 1586, 3564],
        // The published table prints 47688 as the final entry; the published
        // closed form, the transfer DP, and an exhaustive scan of all 7^9
        // words give 47668. See RECT12_AVOID_L7_N9_AS_PUBLISHED.
        (7, 2) => &[1, 7, 20, 62, 186, 566, 1712, 5192, 15728, 47668],
        _ => return None,
    })
}

/// Published (typo'd) final entry of the ell = 7, k = 2 avoidance row; every
/// independent computation gives 47668 instead.
pub const RECT12_AVOID_L7_N9_AS_PUBLISHED: i64 = 47688;

// ---------------------------------------------------------------------------
// Max-statistic (every letter matches) reference data.
// ---------------------------------------------------------------------------

/// Closed form for words over `[ell]` in which every letter matches the 1-box
/// pattern, ell = 3, 4, 5 (the three Hardin sequences A221591, A221569,
/// A221592).
pub fn maxstat_box1_gf(ell: u32) -> Option<RationalT> {
    Some(match ell {
        3 => rt(&[1, -2, 5, 2, 1], &[1, -2, -2, -1]),
        4 => rt(&[1, -3, 8, -3, 1], &[1, -3, -2, 1, -1]),
        5 => rt(&[1, -3, 9, -4, 6, 0, 4], &[1, -3, -4, 0, -6, -4, -4]),
        _ => return None,
    })
}

/// Published initial terms of the three Hardin sequences.
pub fn maxstat_box1_terms(ell: u32) -> Option<&'static [i64]> {
    Some(match ell {
        3 => &[1, 0, 7, 17, 49, 139, 393, 1113, 3151, 8921],
        4 => &[1, 0, 10, 26, 100, 342, 1210, 4240, 14898, 52306],
        5 => &[1, 0, 13, 35, 169, 651, 2715, 11011, 45099, 184063],
        _ => return None,
    })
}

/// The recurrences Hardin conjectured, as published: coefficients c with
/// b_n = sum c_i b_{n-i}, and the first index they are claimed for.
pub fn hardin_recurrence_as_published(ell: u32) -> Option<(&'static [i64], usize)> {
    Some(match ell {
        3 => (&[2, 2, 1], 5),
        4 => (&[3, 2, -1, 1], 6),
        // The published coefficient list (3,4,0,6,6,5) is inconsistent with
        // the published generating function, whose denominator yields
        // (3,4,0,6,4,4); the verifier reports this as a documented finding.
        5 => (&[3, 4, 0, 6, 6, 5], 7),
        _ => return None,
    })
}

/// Max-statistic reference for the (1,2)-rectangle: closed form is published
/// only for ell = 4; for ell = 5 only the terms are published (the displayed
/// formula there repeats the ell = 5, k = 1 one and is superseded by the
/// printed terms, which we derive independently).
pub fn maxstat_rect12_gf4() -> RationalT {
    rt(&[1, -3, 11, 6, 4], &[1, -3, -3, -2])
}

pub fn maxstat_rect12_terms(ell: u32) -> Option<&'static [i64]> {
    Some(match ell {
        // The published list prints 44343 at n = 8; the published closed
        // form, the matching t^8 expansion coefficient 2*22717 = 45434, the
        // transfer DP, and brute force all give 45434. See
        // MAXSTAT_RECT12_L4_N8_AS_PUBLISHED.
        4 => &[1, 0, 14, 50, 196, 766, 2986, 11648, 45434, 177218, 691252],
        5 => &[1, 0, 19, 75, 361, 1689, 7915, 37107, 173937, 815345],
        _ => return None,
    })
}

/// Published (typo'd) n = 8 entry of the ell = 4 (1,2) max-statistic list;
/// every independent computation gives 45434 instead.
pub const MAXSTAT_RECT12_L4_N8_AS_PUBLISHED: i64 = 44343;

// ---------------------------------------------------------------------------
// Smooth words (k-bond count = n-1), k = 2 closed forms and rows.
// ---------------------------------------------------------------------------

/// Closed form for the number of 2-smooth words over `[ell]`; the ell = 5
/// entry is the generating function conjectured by Barker (A126392).
pub fn smooth_gf_k2(ell: u32) -> Option<RationalT> {
    Some(match ell {
        4 => rt(&[1, 1], &[1, -3, -2]),
        5 => rt(&[1, 1, -1], &[1, -4, 0, 1]),
        6 => rt(&[1, 2, -1, -1], &[1, -4, -1, 1]),
        7 => rt(&[1, 2, -4, -2, 2], &[1, -5, 2, 4, -2]),
        _ => return None,
    })
}

/// Published 2-smooth count rows (lengths 0..=9): A055099, A126392, A126393,
/// A126394.
pub fn smooth_row_k2(ell: u32) -> Option<&'static [i64]> {
    Some(match ell {
        4 => &[1, 4, 14, 50, 178, 634, 2258, 8042, 28642, 102010],
        5 => &[1, 5, 19, 75, 295, 1161, 4569, 17981, 70763, 278483],
        6 => &[1, 6, 24, 100, 418, 1748, 7310, 30570, 127842, 534628],
        7 => &[1, 7, 29, 125, 543, 2363, 10287, 44787, 194995, 848979],
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// LEGO walls (Mathar's conjecture, A118649).
// ---------------------------------------------------------------------------

/// Mathar's conjectured generating function for stable width-7 walls with
/// bricks {2,3,4}, counted by height starting at 1.
pub fn mathar_gf() -> RationalT {
    rt(&[1, 3, 0, -2], &[1, -2, -2, 2])
}

/// Stable-wall counts for heights 1..=9.
pub const WALL_COUNTS: &[i64] = &[5, 12, 30, 74, 184, 456, 1132, 2808, 6968];

// ---------------------------------------------------------------------------
// Permutation / signed-permutation sequences.
// ---------------------------------------------------------------------------

/// Bond-free permutations (Hertzsprung's problem, A002464).
pub const HERTZSPRUNG: GoldenTable = GoldenTable {
    id: "A002464",
    terms: &[1, 1, 0, 0, 2, 14, 90, 646, 5242, 47622, 479306],
    source: "permutations with no bond; Riordan's recurrence",
};

/// Signed permutations avoiding bad pairs.
pub const SIGNED_AVOIDERS: GoldenTable = GoldenTable {
    id: "signed-avoiders",
    terms: &[1, 2, 6, 34, 262, 2562, 30278, 419234],
    source: "signed permutations with no bad pair; a_n=(2n-1)a_{n-1}+2(n-2)a_{n-2}",
};

/// Permutations attaining the maximum 1-box count n.
pub const MAXBOX: GoldenTable = GoldenTable {
    id: "maxbox",
    terms: &[1, 1, 2, 2, 8, 14, 54, 128, 498, 1426],
    source: "permutations with box count n; sum of C(n-j-1,j-1)a_j",
};

/// 1-box avoiders over a 4-letter alphabet (A006355 section): F_{n-1}+F_{n+2}.
pub const FIBONACCI_ROW: GoldenTable = GoldenTable {
    id: "A006355",
    terms: &[6, 10, 16, 26, 42, 68, 110, 178, 288],
    source: "1-box avoiders in [4]^n for n = 2..; equals F_{n-1}+F_{n+2}",
};

/// Initial bond-distribution polynomials S[n] over S_n (x-coefficient rows).
pub fn bond_poly_row(n: usize) -> Option<&'static [i64]> {
    Some(match n {
        0 | 1 => &[1],
        2 => &[0, 2],
        3 => &[0, 4, 2],
        4 => &[2, 10, 10, 2],
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Binary-encoding reference mappings.
// ---------------------------------------------------------------------------

/// The sixteen published sample mappings from 1-box-avoiding words over [4]
/// to singleton-free binary words.
pub const BINARY_MAP_TABLE: &[(&str, &str)] = &[
    ("13", "00011"),
    ("14", "00000"),
    ("24", "00111"),
    ("31", "11000"),
    ("41", "11111"),
    ("42", "11100"),
    ("131", "000111"),
    ("141", "000000"),
    ("142", "000011"),
    ("241", "001111"),
    ("242", "001100"),
    ("313", "110011"),
    ("314", "110000"),
    ("413", "111100"),
    ("414", "111111"),
    ("424", "111000"),
];

/// The published worked example of the raw binary image map. Note the input
/// contains the factor 34 and so is not itself a 1-box avoider; the checked
/// encoder rejects it, while the raw image map reproduces this output.
pub const BINARY_MAP_WORKED_EXAMPLE: (&str, &str) = ("3413142", "1100011100");
