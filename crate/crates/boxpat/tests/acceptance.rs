//! Acceptance gate: one test per published claim, exact equality throughout.
//!
//! Each test ends with a single `acceptance N PASS` line (visible with
//! `--nocapture`); an assertion failure is the corresponding FAIL. Where a
//! recomputed value contradicts a value as printed in the source tables, the
//! test passes on the oracle-confirmed value and prints a FINDING line — the
//! discrepancy is documented, never silently absorbed.

use boxpat::algebra::{recurrence_from_gf, IntPoly, RationalT, Recurrence};
use boxpat::binword::{
    binary_image, binary_to_word4, box1_avoider_count, fibonacci, no_singleton_count,
    rect12_avoider_count, word4_to_binary,
};
use boxpat::golden;
use boxpat::lego::{self, RowConfig};
use boxpat::oracle::{self, Bounds, PermStat, WordStat};
use boxpat::perm::{box1_count, Permutation};
use boxpat::sequences::{bond_distribution_poly, flajolet_series, hertzsprung_numbers};
use boxpat::signed::{
    avoider_numbers, basis_blocks, egf_ode_check, from_basis, max_box_count,
};
use boxpat::transfer;
use boxpat::word::Word;
use num_bigint::BigInt;
use num_traits::One;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

#[test]
fn criterion_01_hertzsprung_recurrence_oracle_and_flajolet() {
    let table = big(golden::HERTZSPRUNG.terms);
    assert_eq!(hertzsprung_numbers(10), table, "recurrence vs published list");

    let bounds = Bounds::default();
    for (n, want) in table.iter().enumerate().take(9) {
        let dist = oracle::perm_distribution(n, PermStat::Bond, &bounds).unwrap();
        assert_eq!(&dist.poly.coeff(0), want, "bond-free count in S_{n}");
    }

    assert_eq!(flajolet_series(10), table, "continued-fraction series through n=10");
    println!("acceptance 1 PASS: Hertzsprung recurrence, oracle, and Flajolet series agree");
}

#[test]
fn criterion_02_bond_distribution_polynomials() {
    for n in 0..=4 {
        let want = IntPoly::from_ints(golden::bond_poly_row(n).unwrap());
        assert_eq!(bond_distribution_poly(n), want, "published S[{n}]");
    }

    let bounds = Bounds::default();
    for n in 0..=8 {
        let poly = bond_distribution_poly(n);
        let dist = oracle::perm_distribution(n, PermStat::Bond, &bounds).unwrap();
        assert_eq!(poly, dist.poly, "S[{n}] vs oracle");
        assert_eq!(poly.eval(&BigInt::one()), factorial(n), "S[{n}](1) = {n}!");
    }

    // Shift property of the 1-box statistic: permutations of S_n with
    // statistic 2 are equinumerous with permutations of S_{n+1} with
    // statistic 3.
    for n in 2..=7 {
        let a = oracle::perm_distribution(n, PermStat::Box1, &bounds).unwrap();
        let b = oracle::perm_distribution(n + 1, PermStat::Box1, &bounds).unwrap();
        assert_eq!(a.poly.coeff(2), b.poly.coeff(3), "shift property at n={n}");
    }
    println!("acceptance 2 PASS: bond polynomials, normalization, and shift property hold");
}

#[test]
fn criterion_03_signed_avoiders() {
    let table = big(golden::SIGNED_AVOIDERS.terms);
    assert_eq!(avoider_numbers(7), table, "recurrence vs published list");

    let bounds = Bounds::default();
    for (n, want) in table.iter().enumerate().take(7) {
        let dist = oracle::signed_distribution(n, &bounds).unwrap();
        assert_eq!(&dist.poly.coeff(0), want, "oracle avoider count in B_{n}");
    }

    assert!(egf_ode_check(10), "exponential generating function identity through n=10");
    println!("acceptance 3 PASS: signed avoider counts match recurrence, oracle, and EGF identity");
}

#[test]
fn criterion_04_max_occurrence_theorem() {
    let table = big(golden::MAXBOX.terms);
    let formula: Vec<BigInt> = (0..table.len()).map(max_box_count).collect();
    assert_eq!(formula, table, "closed form vs published list");

    for n in 0..=8 {
        // Maximum of the 1-box statistic on S_n is n, except n = 1 where it
        // is 0 (a lone element has no neighbor to match).
        let max = if n == 1 { 0 } else { n };
        let attaining: Vec<Permutation> =
            Permutation::all(n).filter(|s| box1_count(s) == max).collect();
        assert_eq!(BigInt::from(attaining.len()), table[n], "oracle count in S_{n}");
        if n >= 2 {
            for sigma in &attaining {
                let (basis, lengths) = basis_blocks(sigma).unwrap();
                assert_eq!(&from_basis(&basis, &lengths).unwrap(), sigma, "round trip {sigma}");
            }
        }
    }
    println!("acceptance 4 PASS: max-occurrence counts and basis round trip verified through n=8");
}

#[test]
fn criterion_05_bond_generating_functions() {
    for (ell, k) in [(3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (4, 2), (5, 2), (6, 2), (7, 2)] {
        let engine = transfer::kbond_gf(ell, k).unwrap();
        let printed = golden::kbond_gf(ell, k).unwrap();
        assert!(engine.gf_equal(&printed), "closed form ({ell},{k})");

        let expansion = golden::expansion_series(golden::kbond_expansion(ell, k).unwrap());
        let series = transfer::kbond_series(ell, k, expansion.order());
        assert_eq!(series.coeffs(), expansion.coeffs(), "expansion ({ell},{k}) through t^8");
    }
    println!("acceptance 5 PASS: all nine bond generating functions and expansions match");
}

#[test]
fn criterion_06_rect1k_generating_functions() {
    for (ell, k) in [(3, 1), (4, 1), (5, 1), (4, 2), (5, 2)] {
        let engine = transfer::rect1k_gf(ell, k).unwrap();
        let printed = golden::rect1k_gf(ell, k).unwrap();
        assert!(engine.gf_equal(&printed), "closed form ({ell},{k})");

        let expansion = golden::expansion_series(golden::rect1k_expansion(ell, k).unwrap());
        let series = transfer::rect1k_series(ell, k, expansion.order());
        assert_eq!(series.coeffs(), expansion.coeffs(), "expansion ({ell},{k}) through t^8");
    }

    let bounds = Bounds::default();
    for ell in 3..=5u32 {
        for k in 1..=2u32 {
            let series = transfer::rect1k_series(ell, k, 8);
            for n in 0..=8 {
                let dist =
                    oracle::word_distribution(ell, n, WordStat::Rect { a: 1, b: k }, &bounds)
                        .unwrap();
                assert_eq!(series.coeff(n), &dist.poly, "oracle ({ell},{k}) at n={n}");
            }
        }
    }
    println!(
        "acceptance 6 PASS: (1,k)-rectangle closed forms, expansions, and oracle agree \
         (sign-corrected displays; see findings in the reference-data module)"
    );
    println!(
        "acceptance 6 FINDING: four sign typos in the printed closed forms for \
         (4,1), (5,1), and (4,2) — corrected values verified against the printed \
         expansions, the transfer engine, and exhaustive enumeration"
    );
}

#[test]
fn criterion_07_box2_dp() {
    let bounds = Bounds::default();
    for ell in [4u32, 5] {
        let series = transfer::box2_series(ell, 8);
        for n in 0..=8 {
            let dist =
                oracle::word_distribution(ell, n, WordStat::Rect { a: 2, b: 2 }, &bounds).unwrap();
            assert_eq!(series.coeff(n), &dist.poly, "2-box oracle ell={ell}, n={n}");
        }
    }

    // Three letters degenerate: every word of length >= 2 has every position
    // matched, so the t^n coefficient is 3^n x^n.
    let series = transfer::box2_series(3, 8);
    for n in 2..=8 {
        let want = IntPoly::monomial(BigInt::from(3).pow(n as u32), n);
        assert_eq!(series.coeff(n), &want, "degenerate 3-letter form at n={n}");
    }
    println!("acceptance 7 PASS: 2-box dynamic programming matches the oracle and degenerate form");
}

#[test]
fn criterion_08_avoidance_tables() {
    for (ell, k) in [(3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (4, 2), (5, 2), (6, 2), (7, 2)] {
        let row = big(golden::avoidance_row(ell, k).unwrap());
        let engine = transfer::avoidance_series(ell, k, row.len() - 1);
        assert_eq!(engine, row, "avoidance row ({ell},{k})");

        let gf = golden::avoidance_gf(ell, k).unwrap();
        assert_eq!(gf.series(row.len() - 1).unwrap(), row, "avoidance gf ({ell},{k})");
    }

    // The two rows published with sequence identifiers, verbatim.
    assert_eq!(
        golden::avoidance_row(5, 1).unwrap(),
        &[1, 5, 12, 30, 74, 184, 456, 1132, 2808, 6968]
    );
    assert_eq!(
        golden::avoidance_row(6, 2).unwrap(),
        &[1, 6, 12, 28, 62, 140, 314, 706, 1586, 3564]
    );

    let engine_72 = transfer::avoidance_series(7, 2, 9);
    assert_ne!(
        engine_72[9],
        BigInt::from(golden::RECT12_AVOID_L7_N9_AS_PUBLISHED),
        "printed (7,2) final entry is a typo"
    );
    println!("acceptance 8 PASS: all avoidance rows reproduced exactly");
    println!(
        "acceptance 8 FINDING: (7,2) row entry at n=9 is 47668 (generating function, \
         transfer DP, and exhaustive scan of all 7^9 words agree), not 47688 as printed"
    );
}

#[test]
fn criterion_09_hardin_conjectures() {
    // ell = 3 and 4: derived recurrences match the stated ones.
    for (ell, coeffs) in [(3u32, &[2i64, 2, 1][..]), (4, &[3, 2, -1, 1][..])] {
        let gf = transfer::maxstat_gf(&transfer::rect1k_gf(ell, 1).unwrap()).unwrap();
        let rec = recurrence_from_gf(&gf);
        assert_eq!(rec.coeffs, big(coeffs), "derived recurrence for ell={ell}");
        let terms = big(golden::maxstat_box1_terms(ell).unwrap());
        assert!(rec.holds_for(&terms), "recurrence reproduces the sequence for ell={ell}");
        let series = transfer::maxstat_series(&transfer::rect1k_series(ell, 1, terms.len() - 1))
            .unwrap();
        assert_eq!(series, terms, "sequence for ell={ell}");
    }

    // ell = 5: the sequence and the generating-function-derived recurrence
    // are verified; the published coefficients are flagged.
    let terms = big(golden::maxstat_box1_terms(5).unwrap());
    let series = transfer::maxstat_series(&transfer::rect1k_series(5, 1, terms.len() - 1)).unwrap();
    assert_eq!(series, terms, "sequence for ell=5");
    let gf = transfer::maxstat_gf(&transfer::rect1k_gf(5, 1).unwrap()).unwrap();
    let rec = recurrence_from_gf(&gf);
    assert_eq!(rec.coeffs, big(&[3, 4, 0, 6, 4, 4]), "derived coefficients for ell=5");
    assert!(rec.holds_for(&terms), "derived recurrence reproduces the sequence");

    let (printed, from) = golden::hardin_recurrence_as_published(5).unwrap();
    let printed_rec = Recurrence { coeffs: big(printed), valid_from: from };
    assert!(
        !printed_rec.holds_for(&terms),
        "published coefficients would be a real recurrence, not a typo"
    );
    println!("acceptance 9 PASS: recurrences verified for 3, 4, and 5 letters");
    println!(
        "acceptance 9 FINDING: the published 5-letter recursion coefficients (3,4,0,6,6,5) \
         do not reproduce the sequence; the generating function gives (3,4,0,6,4,4), which does"
    );
}

/// All stable walls of the given height over the given row alphabet.
fn all_walls(configs: &[RowConfig], height: usize) -> Vec<Vec<RowConfig>> {
    let mut out = Vec::new();
    let mut stack: Vec<RowConfig> = Vec::new();
    fn rec(configs: &[RowConfig], h: usize, stack: &mut Vec<RowConfig>, out: &mut Vec<Vec<RowConfig>>) {
        if stack.len() == h {
            out.push(stack.clone());
            return;
        }
        for c in configs {
            if stack.last().map_or(true, |top| top.stackable(c)) {
                stack.push(c.clone());
                rec(configs, h, stack, out);
                stack.pop();
            }
        }
    }
    rec(configs, height, &mut stack, &mut out);
    out
}

#[test]
fn criterion_10_mathar_walls_and_bijection() {
    let counts = big(&golden::WALL_COUNTS[..8]);
    let dp: Vec<BigInt> = (1..=8).map(|h| lego::count_stable_walls(7, &[2, 3, 4], h)).collect();
    assert_eq!(dp, counts, "wall counts heights 1..8");

    let bounds = Bounds::default();
    for h in 1..=5 {
        let oracle_count = oracle::wall_distribution(7, &[2, 3, 4], h, &bounds).unwrap();
        assert_eq!(oracle_count, counts[h - 1], "wall oracle at height {h}");
    }

    let gf = golden::mathar_gf();
    let series = gf.series(8).unwrap();
    assert_eq!(&series[1..], &counts[..], "generating function heights 1..8");

    // Exhaustive bijection round trip for heights up to 7.
    let configs = lego::enumerate_row_configs(7, &[2, 3, 4]);
    for h in 1..=7 {
        let walls = all_walls(&configs, h);
        assert_eq!(BigInt::from(walls.len()), counts[h - 1], "enumerated wall count");
        for rows in walls {
            let wall = lego::LegoWall::new(7, rows).unwrap();
            let w = lego::lego_decode(&wall).unwrap();
            assert_eq!(lego::lego_encode(&w).unwrap(), wall, "decode/encode at height {h}");
        }
    }
    println!("acceptance 10 PASS: wall counts, generating function, and bijection verified");
}

#[test]
fn criterion_11_barker() {
    let claimed = RationalT::new(IntPoly::from_ints(&[1, 1, -1]), IntPoly::from_ints(&[1, -4, 0, 1]));
    assert_eq!(transfer::smooth_gf_from_system(5, 2).unwrap(), claimed, "5-letter 2-smooth gf");

    for ell in 4..=7u32 {
        let row = big(golden::smooth_row_k2(ell).unwrap());
        assert_eq!(transfer::smooth_series(ell, 2, row.len() - 1), row, "2-smooth row ell={ell}");
    }
    println!("acceptance 11 PASS: the conjectured 2-smooth generating function and rows verified");
}

#[test]
fn criterion_12_chebyshev_smooth_formula() {
    for ell in 3..=7u32 {
        let formula = transfer::smooth_gf_chebyshev(ell).series(10).unwrap();
        let engine = transfer::smooth_series(ell, 1, 10);
        assert_eq!(formula, engine, "Chebyshev form vs transfer DP for ell={ell}");
    }
    println!("acceptance 12 PASS: Chebyshev smooth-word formula matches the transfer DP");
}

#[test]
fn criterion_13_fibonacci_proposition() {
    for n in 2..=10usize {
        let f = fibonacci(n - 1) + fibonacci(n + 2);
        assert_eq!(box1_avoider_count(4, n), f, "4-letter avoiders at n={n}");
        assert_eq!(rect12_avoider_count(5, n), f, "5-letter (1,2)-avoiders at n={n}");
        assert_eq!(no_singleton_count(n + 3), f, "no-singleton binaries at n={n}");
    }

    assert_eq!(golden::BINARY_MAP_TABLE.len(), 16);
    for (w, u) in golden::BINARY_MAP_TABLE {
        let word = Word::parse(w, 4).unwrap();
        let bits: Vec<u8> = u.bytes().map(|b| b - b'0').collect();
        assert_eq!(word4_to_binary(&word).unwrap(), bits, "{w} -> {u}");
        assert_eq!(binary_to_word4(&bits).unwrap(), word, "{u} -> {w}");
    }

    // The worked example contains the factor 34 and is therefore not an
    // avoider: the checked encoder rejects it, while the raw image map still
    // reproduces the published output.
    let (w, u) = golden::BINARY_MAP_WORKED_EXAMPLE;
    let word = Word::parse(w, 4).unwrap();
    let bits: Vec<u8> = u.bytes().map(|b| b - b'0').collect();
    assert_eq!(binary_image(&word).unwrap(), bits, "raw image of {w}");
    assert!(word4_to_binary(&word).is_err(), "checked encoder rejects {w}");
    println!("acceptance 13 PASS: Fibonacci counts, the sixteen mappings, and the worked example verified");
    println!(
        "acceptance 13 FINDING: the worked example 3413142 contains the factor 34, \
         so it is not itself an avoider; its published image 1100011100 is that of \
         the unrestricted encoding map"
    );
}

#[test]
fn criterion_14_unpublished_max_statistic_sequences() {
    for ell in [4u32, 5] {
        let terms = big(golden::maxstat_rect12_terms(ell).unwrap());
        let series =
            transfer::maxstat_series(&transfer::rect1k_series(ell, 2, terms.len() - 1)).unwrap();
        assert_eq!(series, terms, "max-statistic sequence for ell={ell}");
    }

    // Independent confirmation of the corrected 4-letter term at n=8.
    let bounds = Bounds::default();
    let dist = oracle::word_distribution(4, 8, WordStat::Rect { a: 1, b: 2 }, &bounds).unwrap();
    let max_attainers = dist.poly.coeff(8);
    assert_eq!(max_attainers, BigInt::from(45434), "exhaustive 4^8 scan");
    assert_ne!(
        max_attainers,
        BigInt::from(golden::MAXSTAT_RECT12_L4_N8_AS_PUBLISHED),
        "printed term is a typo"
    );
    println!("acceptance 14 PASS: both unpublished max-statistic sequences reproduced");
    println!(
        "acceptance 14 FINDING: the printed 4-letter term 44343 at n=8 is a digit scramble; \
         the generating function, its own printed expansion (2*22717), the transfer DP, \
         and the exhaustive scan all give 45434"
    );
}
