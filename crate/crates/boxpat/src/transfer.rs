//! Transfer systems: weighted automata whose path weights enumerate words
//! by length (t) and statistic (x), with series extraction by dynamic
//! programming and closed forms by fraction-free elimination.

use crate::algebra::{
    solve_polyring_system_raw, BiPoly, IntPoly, RationalGF, RationalT, TSeries,
};
use crate::error::{Error, Result};
use crate::word::{rect_count_word, Word};
use num_bigint::BigInt;
use num_traits::One;

/// A finite-state system: every state is seeded with a monomial x^e t^s
/// (s = seed length) and every transition carries a monomial weight x^e t.
/// The generating function it describes is
/// short-terms + sum over states of the per-state series, where each
/// per-state series satisfies F(state) = seed + sum of weight * F(next).
pub struct TransferSystem {
    states: Vec<Vec<u32>>,
    seed_len: usize,
    seeds: Vec<u8>,
    trans: Vec<Vec<(usize, u8)>>,
    short: Vec<IntPoly>,
}

impl TransferSystem {
    pub fn states(&self) -> &[Vec<u32>] {
        &self.states
    }

    pub fn seed_len(&self) -> usize {
        self.seed_len
    }

    /// The seed vector as polynomials (x^e t^seed_len per state).
    pub fn seed_vector(&self) -> Vec<BiPoly> {
        self.seeds
            .iter()
            .map(|&e| BiPoly::monomial(BigInt::one(), e as usize, self.seed_len))
            .collect()
    }

    /// The system matrix W - I, where W holds the transition weights. The
    /// per-state series vector F satisfies (W - I) F = -seed.
    pub fn matrix(&self) -> Vec<Vec<BiPoly>> {
        let n = self.states.len();
        let mut m = vec![vec![BiPoly::zero(); n]; n];
        for (from, outs) in self.trans.iter().enumerate() {
            for &(to, e) in outs {
                m[from][to] = &m[from][to] + &BiPoly::monomial(BigInt::one(), e as usize, 1);
            }
            m[from][from] = &m[from][from] - &BiPoly::one();
        }
        m
    }

    /// Series through t^order by DP over states.
    pub fn series(&self, order: usize) -> TSeries {
        let mut out = TSeries::zero(order);
        for (b, c) in self.short.iter().enumerate().take(order + 1) {
            out.set_coeff(b, c.clone());
        }
        if order < self.seed_len {
            return out;
        }
        // level vector: coefficient of t^n in each per-state series
        let mut level: Vec<IntPoly> = self
            .seeds
            .iter()
            .map(|&e| IntPoly::monomial(BigInt::one(), e as usize))
            .collect();
        let mut total = IntPoly::zero();
        for p in &level {
            total = &total + p;
        }
        out.set_coeff(self.seed_len, total);
        for n in self.seed_len + 1..=order {
            let mut next = vec![IntPoly::zero(); level.len()];
            for (from, outs) in self.trans.iter().enumerate() {
                let mut acc = IntPoly::zero();
                for &(to, e) in outs {
                    acc = &acc + &level[to].shift_up(e as usize);
                }
                next[from] = acc;
            }
            level = next;
            let mut total = IntPoly::zero();
            for p in &level {
                total = &total + p;
            }
            out.set_coeff(n, total);
        }
        out
    }

    /// Exact closed form by fraction-free elimination on (W - I) F = -seed.
    pub fn gf(&self) -> Result<RationalGF> {
        let matrix = self.matrix();
        let rhs: Vec<BiPoly> = self.seed_vector().iter().map(|s| -s).collect();
        let (nums, det) = solve_polyring_system_raw(&matrix, &rhs)?;
        let mut short = BiPoly::zero();
        for (b, c) in self.short.iter().enumerate() {
            short = &short + &BiPoly::from_t_coeffs({
                let mut tc = vec![IntPoly::zero(); b];
                tc.push(c.clone());
                tc
            });
        }
        let mut num = &short * &det;
        for n in nums {
            num = &num + &n;
        }
        Ok(RationalGF::new(num, det))
    }
}

fn chi(c: bool) -> u8 {
    c as u8
}

/// The l-state k-bond system: state = last letter, transition weight
/// x^chi(|i-j|<=k) t, seed t per letter.
pub fn kbond_system(l: u32, k: u32) -> TransferSystem {
    assert!(l >= 1 && k >= 1);
    let states: Vec<Vec<u32>> = (1..=l).map(|i| vec![i]).collect();
    let trans = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| ((j - 1) as usize, chi(i.abs_diff(j) <= k)))
                .collect()
        })
        .collect();
    TransferSystem {
        states,
        seed_len: 1,
        seeds: vec![0; l as usize],
        trans,
        short: vec![IntPoly::one()],
    }
}

pub fn kbond_series(l: u32, k: u32, order: usize) -> TSeries {
    kbond_system(l, k).series(order)
}

pub fn kbond_gf(l: u32, k: u32) -> Result<RationalGF> {
    kbond_system(l, k).gf()
}

/// The l^2-state (1,k)-rectangle system: state = last two letters (i,j),
/// seed x^{2 chi(|i-j|<=k)} t^2, transition (i,j) -> (j,m) weighted t when
/// i is isolated from j, x t when both the j-match and the m-match keep j
/// matched, x^2 t when j matches only backwards.
pub fn rect1k_system(l: u32, k: u32) -> TransferSystem {
    assert!(l >= 2 && k >= 1);
    let ls = l as usize;
    let idx = |i: u32, j: u32| (i as usize - 1) * ls + (j as usize - 1);
    let mut states = Vec::with_capacity(ls * ls);
    let mut seeds = Vec::with_capacity(ls * ls);
    let mut trans = Vec::with_capacity(ls * ls);
    for i in 1..=l {
        for j in 1..=l {
            states.push(vec![i, j]);
            seeds.push(2 * chi(i.abs_diff(j) <= k));
            let near = i.abs_diff(j) <= k;
            trans.push(
                (1..=l)
                    .map(|m| {
                        let e = if !near {
                            0
                        } else if j.abs_diff(m) <= k {
                            1
                        } else {
                            2
                        };
                        (idx(j, m), e)
                    })
                    .collect(),
            );
        }
    }
    TransferSystem {
        states,
        seed_len: 2,
        seeds,
        trans,
        short: vec![IntPoly::one(), IntPoly::constant(BigInt::from(l))],
    }
}

pub fn rect1k_series(l: u32, k: u32, order: usize) -> TSeries {
    rect1k_system(l, k).series(order)
}

/// Closed form of the (1,k)-rectangle distribution, from a reduced 2l x 2l
/// system instead of the full l^2 x l^2 one.
///
/// With S_j = sum over m of F(j,m) and T_j = sum over m within k of j, each
/// per-state series is a linear combination of S_j and T_j:
/// F(i,j) = t^2 + t S_j when |i-j| > k, and
/// F(i,j) = x^2 t^2 + x^2 t S_j + (x t - x^2 t) T_j when |i-j| <= k.
/// Summing those identities over j (all j, and j within k) closes the
/// system in the 2l unknowns. The full-system equivalence is exercised in
/// tests via [`TransferSystem::gf`] on the l^2-state system.
pub fn rect1k_gf(l: u32, k: u32) -> Result<RationalGF> {
    assert!(l >= 2 && k >= 1);
    let ls = l as usize;
    let t = BiPoly::from_terms(&[(1, 0, 1)]);
    let t2 = BiPoly::from_terms(&[(1, 0, 2)]);
    let x2t = BiPoly::from_terms(&[(1, 2, 1)]);
    let x2t2 = BiPoly::from_terms(&[(1, 2, 2)]);
    let xt_minus_x2t = BiPoly::from_terms(&[(1, 1, 1), (-1, 2, 1)]);
    // unknowns: y = (S_1..S_l, T_1..T_l)
    let n = 2 * ls;
    let mut m = vec![vec![BiPoly::zero(); n]; n];
    let mut rhs = vec![BiPoly::zero(); n];
    for i in 1..=l {
        let d = (1..=l).filter(|j| i.abs_diff(*j) <= k).count();
        let far = ls - d;
        let si = (i - 1) as usize;
        let ti = ls + si;
        // S_i equation
        m[si][si] = &m[si][si] - &BiPoly::one();
        for j in 1..=l {
            let sj = (j - 1) as usize;
            let tj = ls + sj;
            if i.abs_diff(j) > k {
                m[si][sj] = &m[si][sj] + &t;
            } else {
                m[si][sj] = &m[si][sj] + &x2t;
                m[si][tj] = &m[si][tj] + &xt_minus_x2t;
                // T_i equation shares exactly the within-k terms
                m[ti][sj] = &m[ti][sj] + &x2t;
                m[ti][tj] = &m[ti][tj] + &xt_minus_x2t;
            }
        }
        m[ti][ti] = &m[ti][ti] - &BiPoly::one();
        rhs[si] = -&(&t2.scale(&BigInt::from(far as i64))
            + &x2t2.scale(&BigInt::from(d as i64)));
        rhs[ti] = -&x2t2.scale(&BigInt::from(d as i64));
    }
    let (nums, det) = solve_polyring_system_raw(&m, &rhs)?;
    let short = BiPoly::from_terms(&[(1, 0, 0), (l as i64, 0, 1)]);
    let mut num = &short * &det;
    for s in &nums[..ls] {
        num = &num + s;
    }
    Ok(RationalGF::new(num, det))
}

/// 2-box match test for the letter at `pos` (0-based) within a short word.
fn matches_2box(w: &[u32], pos: usize) -> bool {
    w.iter().enumerate().any(|(j, &c)| {
        j != pos && pos.abs_diff(j) <= 2 && c.abs_diff(w[pos]) <= 2
    })
}

/// The l^4-state 2-box system with the four-case transition weight:
/// dropping r from the window rstuv can newly match r itself (via s or t)
/// and retroactively match s and/or t, giving weight x^(new matches) t.
pub fn box2_system(l: u32) -> TransferSystem {
    assert!(l >= 1);
    let ls = l as usize;
    let idx = |w: &[u32]| -> usize {
        w.iter().fold(0, |acc, &c| acc * ls + (c as usize - 1))
    };
    let mut states = Vec::with_capacity(ls.pow(4));
    let mut seeds = Vec::with_capacity(ls.pow(4));
    let mut trans = Vec::with_capacity(ls.pow(4));
    for code in 0..ls.pow(4) {
        let tuple: Vec<u32> = (0..4)
            .rev()
            .map(|p| (code / ls.pow(p) % ls) as u32 + 1)
            .collect();
        let (r, s, t, u) = (tuple[0], tuple[1], tuple[2], tuple[3]);
        let word = Word::new(tuple.clone(), l).unwrap();
        seeds.push(rect_count_word(&word, 2, 2) as u8);
        let rs = r.abs_diff(s) <= 2;
        let rt = r.abs_diff(t) <= 2;
        let outs = (1..=l)
            .map(|v| {
                let stuv = [s, t, u, v];
                let e = match (rs, rt) {
                    (false, false) => 0,
                    (false, true) => {
                        // r matches via t; extra x if t matched only via r
                        1 + chi(!matches_2box(&stuv, 1))
                    }
                    (true, false) => {
                        // r matches via s; s's own window never reaches v
                        1 + chi(!matches_2box(&stuv, 0))
                    }
                    (true, true) => {
                        1 + chi(!matches_2box(&stuv, 0)) + chi(!matches_2box(&stuv, 1))
                    }
                };
                (idx(&stuv), e)
            })
            .collect();
        states.push(tuple);
        trans.push(outs);
    }
    let short = (0..4)
        .map(|n| {
            let mut acc = IntPoly::zero();
            for w in Word::all(n, l) {
                acc = &acc + &IntPoly::monomial(BigInt::one(), rect_count_word(&w, 2, 2));
            }
            acc
        })
        .collect();
    TransferSystem {
        states,
        seed_len: 4,
        seeds,
        trans,
        short,
    }
}

pub fn box2_series(l: u32, order: usize) -> TSeries {
    box2_system(l).series(order)
}

/// Avoidance counts: the x = 0 column of the k-bond distribution.
pub fn avoidance_series(l: u32, k: u32, order: usize) -> Vec<BigInt> {
    let s = kbond_series(l, k, order);
    (0..=order).map(|n| s.coeff(n).constant_term()).collect()
}

/// A bivariate closed form specialized at x = 0, as a univariate rational
/// function in t.
pub fn gf_at_x_zero(gf: &RationalGF) -> RationalT {
    RationalT::new(gf.num().at_x_zero(), gf.den().at_x_zero())
}

/// The max-statistic column of a distribution series: for each n, the
/// coefficient of x^n in the t^n coefficient (the count of objects whose
/// statistic attains the length). Errors if some coefficient has x-degree
/// above n, which would mean the series is not a distribution of a
/// statistic bounded by the length.
pub fn maxstat_series(series: &TSeries) -> Result<Vec<BigInt>> {
    (0..=series.order())
        .map(|n| {
            let c = series.coeff(n);
            match c.degree() {
                Some(d) if d > n => Err(Error::DegreeExceeded { order: n, degree: d }),
                _ => Ok(c.coeff(n)),
            }
        })
        .collect()
}

/// Common-shift maxstat substitution on a num/den pair: both parts are
/// mapped through x^a t^b -> x^(b-a+m) t^b with one shared clearing shift m.
fn maxstat_pair(gf: &RationalGF) -> (BiPoly, BiPoly) {
    let (nbar, ns) = gf.num().maxstat_substitute();
    let (dbar, ds) = gf.den().maxstat_substitute();
    let m = ns.max(ds);
    (nbar.shift_x(m - ns), dbar.shift_x(m - ds))
}

/// The closed form of the max-statistic generating function: x -> 1/x,
/// t -> x t, then x -> 0 on the rational function.
pub fn maxstat_gf(gf: &RationalGF) -> Result<RationalT> {
    let (nbar, dbar) = maxstat_pair(gf);
    let v = dbar.x_valuation().ok_or(Error::SubstitutionDegenerate)?;
    if nbar.x_valuation().is_some_and(|nv| nv < v) {
        return Err(Error::SubstitutionDegenerate);
    }
    Ok(RationalT::new(nbar.x_slice(v), dbar.x_slice(v)))
}

/// Counts of k-smooth words: the top coefficient x^(n-1) of the t^n
/// coefficient of the k-bond distribution, with 1 at n = 0.
pub fn smooth_series(l: u32, k: u32, order: usize) -> Vec<BigInt> {
    let s = kbond_series(l, k, order);
    (0..=order)
        .map(|n| {
            if n == 0 {
                BigInt::one()
            } else {
                s.coeff(n).coeff(n - 1)
            }
        })
        .collect()
}

/// Closed form of the k-smooth generating function
/// sm(t) = 1 + C(0,t) with C(x,t) = (A(1/x, xt) - 1)/x: after the common-
/// shift substitution the limit x -> 0 is the ratio of the x-slices just
/// above the denominator's x-valuation.
pub fn smooth_gf_from_system(l: u32, k: u32) -> Result<RationalT> {
    let gf = kbond_gf(l, k)?;
    let (nbar, dbar) = maxstat_pair(&gf);
    let v = dbar.x_valuation().ok_or(Error::SubstitutionDegenerate)?;
    // (A-bar - 1) must vanish at x -> 0, i.e. the x^v slices must agree
    if nbar.x_slice(v) != dbar.x_slice(v) {
        return Err(Error::SubstitutionDegenerate);
    }
    if let Some(nv) = (&nbar - &dbar).x_valuation() {
        if nv < v {
            return Err(Error::SubstitutionDegenerate);
        }
    }
    let diff = &nbar - &dbar;
    let c0 = RationalT::new(diff.x_slice(v + 1), dbar.x_slice(v));
    Ok(RationalT::from_int(1).add(&c0))
}

/// The Chebyshev closed form for 1-smooth words:
/// sm(t) = 1 + t(l - (3l+2)t)/(1-3t)^2
///           + 2t^2/(1-3t)^2 * (1 + U_{l-1}(y))/U_l(y),  y = (1-t)/(2t).
pub fn smooth_gf_chebyshev(l: u32) -> RationalT {
    use crate::algebra::chebyshev_u;
    let t = RationalT::from_poly(IntPoly::from_ints(&[0, 1]));
    let one = RationalT::from_int(1);
    let y = RationalT::new(IntPoly::from_ints(&[1, -1]), IntPoly::from_ints(&[0, 2]));
    let one_minus_3t_sq = {
        let p = IntPoly::from_ints(&[1, -3]);
        RationalT::from_poly(&p * &p)
    };
    let li = l as i64;
    let mid = RationalT::from_poly(IntPoly::from_ints(&[li, -(3 * li + 2)]))
        .mul(&t)
        .div(&one_minus_3t_sq);
    let last = RationalT::from_poly(IntPoly::from_ints(&[0, 0, 2]))
        .div(&one_minus_3t_sq)
        .mul(&one.add(&chebyshev_u(l as usize - 1, &y)).div(&chebyshev_u(l as usize, &y)));
    one.add(&mid).add(&last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{word_distribution, Bounds, WordStat};
    use num_traits::Zero;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn kbond_matrix_row() {
        // first row of the 3-letter bond matrix: (xt-1, xt, t)
        let m = kbond_system(3, 1).matrix();
        assert_eq!(m[0][0], BiPoly::from_terms(&[(1, 1, 1), (-1, 0, 0)]));
        assert_eq!(m[0][1], BiPoly::from_terms(&[(1, 1, 1)]));
        assert_eq!(m[0][2], BiPoly::from_terms(&[(1, 0, 1)]));
    }

    #[test]
    fn kbond_series_small() {
        let s = kbond_series(3, 1, 3);
        assert_eq!(s.coeff(0), &IntPoly::one());
        assert_eq!(s.coeff(1), &IntPoly::from_ints(&[3]));
        assert_eq!(s.coeff(2), &IntPoly::from_ints(&[2, 7]));
        assert_eq!(s.coeff(3), &IntPoly::from_ints(&[2, 8, 17]));
        assert_eq!(kbond_series(7, 1, 2).coeff(2), &IntPoly::from_ints(&[30, 19]));
        assert_eq!(kbond_series(5, 2, 2).coeff(2), &IntPoly::from_ints(&[6, 19]));
    }

    #[test]
    fn kbond_single_letter_gf() {
        // one letter: every word of length n has n-1 bonds
        let gf = kbond_gf(1, 1).unwrap();
        let expect = RationalGF::new(
            BiPoly::from_terms(&[(1, 0, 0), (1, 0, 1), (-1, 1, 1)]),
            BiPoly::from_terms(&[(1, 0, 0), (-1, 1, 1)]),
        );
        assert!(gf.gf_equal(&expect));
    }

    #[test]
    fn kbond_gf_matches_series() {
        for (l, k) in [(3, 1), (4, 1), (4, 2), (5, 2)] {
            let gf = kbond_gf(l, k).unwrap();
            let from_gf = gf.series(8).unwrap();
            let from_dp = kbond_series(l, k, 8);
            for n in 0..=8 {
                assert_eq!(from_gf.coeff(n), from_dp.coeff(n), "l={l} k={k} n={n}");
            }
        }
    }

    #[test]
    fn kbond_counts_all_words_at_x_one() {
        for (l, k) in [(3, 1), (5, 2), (7, 3)] {
            let s = kbond_series(l, k, 6);
            for n in 0..=6 {
                assert_eq!(
                    s.coeff(n).eval(&BigInt::one()),
                    BigInt::from(l).pow(n as u32),
                    "l={l} k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn rect1k_seed_vector() {
        let sys = rect1k_system(3, 1);
        let seeds: Vec<BiPoly> = sys.seed_vector();
        let x2t2 = BiPoly::from_terms(&[(1, 2, 2)]);
        let t2 = BiPoly::from_terms(&[(1, 0, 2)]);
        let expect = [
            &x2t2, &x2t2, &t2, &x2t2, &x2t2, &x2t2, &t2, &x2t2, &x2t2,
        ];
        assert_eq!(seeds.len(), 9);
        for (got, want) in seeds.iter().zip(expect) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn rect1k_series_small() {
        let s = rect1k_series(3, 1, 2);
        assert_eq!(s.coeff(2), &IntPoly::from_ints(&[2, 0, 7]));
        let s = rect1k_series(5, 1, 3);
        assert_eq!(s.coeff(3), &IntPoly::from_ints(&[30, 0, 60, 35]));
        let s = rect1k_series(5, 2, 4);
        assert_eq!(s.coeff(4), &IntPoly::from_ints(&[16, 0, 88, 160, 361]));
    }

    #[test]
    fn rect1k_matches_oracle() {
        let bounds = Bounds::default();
        for (l, k) in [(3u32, 1u32), (4, 1), (4, 2)] {
            let s = rect1k_series(l, k, 6);
            for n in 0..=6 {
                let d = word_distribution(l, n, WordStat::Rect { a: 1, b: k }, &bounds).unwrap();
                assert_eq!(s.coeff(n), &d.poly, "l={l} k={k} n={n}");
            }
        }
    }

    #[test]
    fn rect1k_reduced_equals_full_system() {
        for (l, k) in [(3u32, 1u32), (3, 2)] {
            let reduced = rect1k_gf(l, k).unwrap();
            let full = rect1k_system(l, k).gf().unwrap();
            assert!(reduced.gf_equal(&full), "l={l} k={k}");
        }
    }

    #[test]
    fn box2_trivial_alphabet() {
        // l = 3: every letter of every word of length >= 2 matches
        let s = box2_series(3, 6);
        assert_eq!(s.coeff(0), &IntPoly::one());
        assert_eq!(s.coeff(1), &IntPoly::from_ints(&[3]));
        for n in 2..=6 {
            assert_eq!(
                s.coeff(n),
                &IntPoly::monomial(BigInt::from(3).pow(n as u32), n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn box2_matches_oracle() {
        let bounds = Bounds::default();
        for l in [4u32, 5] {
            let s = box2_series(l, 7);
            for n in 0..=7 {
                let d = word_distribution(l, n, WordStat::Rect { a: 2, b: 2 }, &bounds).unwrap();
                assert_eq!(s.coeff(n), &d.poly, "l={l} n={n}");
            }
        }
    }

    #[test]
    fn avoidance_rows() {
        assert_eq!(
            avoidance_series(5, 1, 8),
            ints(&[1, 5, 12, 30, 74, 184, 456, 1132, 2808])
        );
        assert_eq!(avoidance_series(3, 1, 5), ints(&[1, 3, 2, 2, 2, 2]));
        assert_eq!(
            avoidance_series(6, 2, 7),
            ints(&[1, 6, 12, 28, 62, 140, 314, 706])
        );
    }

    #[test]
    fn maxstat_of_rect_series() {
        let s = rect1k_series(3, 1, 6);
        assert_eq!(maxstat_series(&s).unwrap(), ints(&[1, 0, 7, 17, 49, 139, 393]));
    }

    #[test]
    fn maxstat_degree_contract() {
        // the k-bond series has x-degree n-1 < n at t^n, so maxstat gives 0
        // everywhere past n = 0; the degree check must not trip
        let s = kbond_series(4, 1, 5);
        let m = maxstat_series(&s).unwrap();
        assert_eq!(m[0], BigInt::one());
        assert!(m[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn maxstat_gf_hardin3() {
        let gf = rect1k_gf(3, 1).unwrap();
        let bar = maxstat_gf(&gf).unwrap();
        let expect = RationalT::new(
            IntPoly::from_ints(&[1, -2, 5, 2, 1]),
            IntPoly::from_ints(&[1, -2, -2, -1]),
        );
        assert_eq!(bar, expect);
        assert_eq!(
            bar.series(9).unwrap(),
            ints(&[1, 0, 7, 17, 49, 139, 393, 1113, 3151, 8921])
        );
    }

    #[test]
    fn smooth_series_rows() {
        assert_eq!(
            smooth_series(4, 2, 5),
            ints(&[1, 4, 14, 50, 178, 634])
        );
        assert_eq!(
            smooth_series(5, 2, 6),
            ints(&[1, 5, 19, 75, 295, 1161, 4569])
        );
    }

    #[test]
    fn barker_gf() {
        let gf = smooth_gf_from_system(5, 2).unwrap();
        let expect = RationalT::new(
            IntPoly::from_ints(&[1, 1, -1]),
            IntPoly::from_ints(&[1, -4, 0, 1]),
        );
        assert_eq!(gf, expect);
    }

    #[test]
    fn smooth_gf_matches_series() {
        for (l, k) in [(3u32, 1u32), (4, 1), (4, 2), (6, 2)] {
            let gf = smooth_gf_from_system(l, k).unwrap();
            assert_eq!(
                gf.series(8).unwrap(),
                smooth_series(l, k, 8),
                "l={l} k={k}"
            );
        }
    }

    #[test]
    fn chebyshev_formula() {
        for l in 1..=6u32 {
            let gf = smooth_gf_chebyshev(l);
            assert_eq!(gf.series(8).unwrap(), smooth_series(l, 1, 8), "l = {l}");
        }
    }

    #[test]
    fn gf_at_x_zero_table2() {
        let a3 = gf_at_x_zero(&kbond_gf(3, 1).unwrap());
        let expect = RationalT::new(IntPoly::from_ints(&[1, 2, -1]), IntPoly::from_ints(&[1, -1]));
        assert_eq!(a3, expect);
    }
}
