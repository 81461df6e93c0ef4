//! The encoding of 1-box-avoiding 4-ary words as singleton-free binary
//! words, and the Fibonacci count shared by three families: (1,2)-rectangle
//! avoiders in [5]^n, 1-box avoiders in [4]^n, and binary words of length
//! n+3 with no run of length 1.

use crate::error::{Error, Result};
use crate::word::Word;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Positions of singleton runs in a binary word (1-based), if any.
fn first_singleton(u: &[u8]) -> Option<usize> {
    let m = u.len();
    (0..m).find(|&i| (i == 0 || u[i - 1] != u[i]) && (i + 1 == m || u[i + 1] != u[i]))
        .map(|i| i + 1)
}

pub fn has_no_singleton(u: &[u8]) -> bool {
    first_singleton(u).is_none()
}

/// Encode a 1-box-avoiding word over [4] as a binary word of length n+3
/// with no singleton run: the first two bits come from w_1 (00 for 1 or 2,
/// 11 for 3 or 4); then bit u_{i+2} repeats u_{i+1} exactly when
/// w_i is an extreme letter (1 or 4); the last bit repeats its predecessor.
pub fn word4_to_binary(w: &Word) -> Result<Vec<u8>> {
    if let Some(&i) = crate::word::rect_match_set_word(w, 1, 1).first() {
        return Err(Error::NotAvoider { position: i });
    }
    let u = binary_image(w)?;
    debug_assert!(has_no_singleton(&u));
    Ok(u)
}

/// The raw encoding map, applied without the avoidance precondition. Only
/// avoiders are guaranteed a singleton-free image, but the map itself is
/// defined for every word over [4] of length >= 2.
pub fn binary_image(w: &Word) -> Result<Vec<u8>> {
    assert_eq!(w.alphabet(), 4, "the encoding is for words over [4]");
    let n = w.len();
    if n < 2 {
        return Err(Error::Parse(format!("need length >= 2, got {n}")));
    }
    let mut u = Vec::with_capacity(n + 3);
    let b0 = if w.at(1) <= 2 { 0 } else { 1 };
    u.push(b0);
    u.push(b0);
    for i in 1..=n {
        let prev = *u.last().unwrap();
        let same = w.at(i) == 1 || w.at(i) == 4;
        u.push(if same { prev } else { 1 - prev });
    }
    let last = *u.last().unwrap();
    u.push(last);
    Ok(u)
}

/// Letters allowed after `prev` in a 1-box avoider over [4].
fn allowed_after(prev: u32) -> &'static [u32] {
    match prev {
        1 => &[3, 4],
        2 => &[4],
        3 => &[1],
        4 => &[1, 2],
        _ => unreachable!(),
    }
}

/// Inverse of [`word4_to_binary`].
///
/// w_1 is read off u_1 u_2 (which block) and u_3 (whether the next bit
/// repeats); each later bit comparison determines whether w_i is extreme
/// ({1,4}) or middle ({2,3}), and the avoidance condition on w_{i-1} then
/// pins the letter uniquely.
pub fn binary_to_word4(u: &[u8]) -> Result<Word> {
    let m = u.len();
    if m < 5 {
        return Err(Error::Parse(format!("need length >= 5, got {m}")));
    }
    if let Some(i) = first_singleton(u) {
        return Err(Error::HasSingleton { position: i });
    }
    if u[0] != u[1] || u[m - 1] != u[m - 2] {
        // cannot happen for singleton-free input, but keep the contract clear
        return Err(Error::HasSingleton { position: 1 });
    }
    let n = m - 3;
    let mut letters = Vec::with_capacity(n);
    let first = match (u[0], u[2] == u[1]) {
        (0, true) => 1,
        (0, false) => 2,
        (1, false) => 3,
        (1, true) => 4,
        _ => unreachable!(),
    };
    letters.push(first);
    for i in 2..=n {
        let extreme = u[i + 1] == u[i]; // u_{i+2} = u_{i+1}, 0-based
        let class: &[u32] = if extreme { &[1, 4] } else { &[2, 3] };
        let prev = *letters.last().unwrap();
        let next = allowed_after(prev)
            .iter()
            .copied()
            .find(|c| class.contains(c))
            .expect("avoider constraint and parity class always intersect uniquely");
        letters.push(next);
    }
    Word::new(letters, 4)
}

/// Fibonacci numbers with F_0 = F_1 = 1.
pub fn fibonacci(n: usize) -> BigInt {
    let mut a = BigInt::one();
    let mut b = BigInt::one();
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Count of 1-box avoiders over [l]: words where no adjacent letters are
/// within 1. Walks of length n in the graph on [l] with edges |i-j| >= 2.
pub fn box1_avoider_count(l: u32, n: usize) -> BigInt {
    adjacency_walks(l, n, |i, j| i.abs_diff(j) >= 2)
}

/// Count of (1,2)-rectangle avoiders over [l]: no adjacent letters within 2.
pub fn rect12_avoider_count(l: u32, n: usize) -> BigInt {
    adjacency_walks(l, n, |i, j| i.abs_diff(j) >= 3)
}

/// Count of binary words of the given length with no singleton run, by DP
/// on (last bit, current run >= 2).
pub fn no_singleton_count(len: usize) -> BigInt {
    if len == 0 {
        return BigInt::one();
    }
    // state: run of the final bit is still length 1 (open) or already >= 2
    let mut open = BigInt::from(2); // "0", "1"
    let mut closed = BigInt::zero();
    for _ in 1..len {
        let new_open = closed.clone(); // flip the bit, starting a new run
        let new_closed = &open + &closed; // repeat the bit
        open = new_open;
        closed = new_closed;
    }
    closed
}

fn adjacency_walks(l: u32, n: usize, edge: impl Fn(u32, u32) -> bool) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut cur = vec![BigInt::one(); l as usize];
    for _ in 1..n {
        let next: Vec<BigInt> = (1..=l)
            .map(|j| {
                (1..=l)
                    .filter(|&i| edge(i, j))
                    .map(|i| &cur[i as usize - 1])
                    .sum()
            })
            .collect();
        cur = next;
    }
    cur.iter().sum()
}

/// The three-way equinumeration with the closed form F_{n-1} + F_{n+2}.
pub fn fibonacci_count_check(n: usize) -> bool {
    assert!(n >= 2);
    let expect = fibonacci(n - 1) + fibonacci(n + 2);
    box1_avoider_count(4, n) == expect
        && rect12_avoider_count(5, n) == expect
        && no_singleton_count(n + 3) == expect
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::box1_count_word;

    fn w4(s: &str) -> Word {
        Word::parse(s, 4).unwrap()
    }

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn table_mappings() {
        let table = [
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
        for (word, bin) in table {
            assert_eq!(word4_to_binary(&w4(word)).unwrap(), bits(bin), "{word}");
            assert_eq!(binary_to_word4(&bits(bin)).unwrap(), w4(word), "{bin}");
        }
    }

    #[test]
    fn worked_example() {
        // 3413142 contains the bond 34, so the checked encoder rejects it,
        // but the raw map still yields the stated image
        assert_eq!(binary_image(&w4("3413142")).unwrap(), bits("1100011100"));
        assert_eq!(
            word4_to_binary(&w4("3413142")).unwrap_err(),
            Error::NotAvoider { position: 1 }
        );
    }

    #[test]
    fn encode_rejects_non_avoiders() {
        assert_eq!(
            word4_to_binary(&w4("12")).unwrap_err(),
            Error::NotAvoider { position: 1 }
        );
    }

    #[test]
    fn decode_rejects_singletons() {
        assert_eq!(
            binary_to_word4(&bits("00100")).unwrap_err(),
            Error::HasSingleton { position: 3 }
        );
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 2..=8 {
            for w in Word::all(n, 4) {
                if box1_count_word(&w) != 0 {
                    continue;
                }
                let u = word4_to_binary(&w).unwrap();
                assert_eq!(u.len(), n + 3);
                assert!(has_no_singleton(&u));
                assert_eq!(binary_to_word4(&u).unwrap(), w);
            }
        }
        for m in 5..=9 {
            for code in 0u32..1 << m {
                let u: Vec<u8> = (0..m).map(|i| (code >> i & 1) as u8).collect();
                if !has_no_singleton(&u) {
                    continue;
                }
                let w = binary_to_word4(&u).unwrap();
                assert_eq!(word4_to_binary(&w).unwrap(), u);
            }
        }
    }

    #[test]
    fn fibonacci_convention() {
        let f: Vec<i64> = (0..8).map(|n| i64::try_from(fibonacci(n)).unwrap()).collect();
        assert_eq!(f, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn three_way_counts() {
        for n in 2..=12 {
            assert!(fibonacci_count_check(n), "n = {n}");
        }
        // spot values from the avoidance table
        assert_eq!(box1_avoider_count(4, 2), BigInt::from(6));
        assert_eq!(box1_avoider_count(4, 4), BigInt::from(16));
        assert_eq!(box1_avoider_count(4, 7), BigInt::from(68));
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=6 {
            let brute = Word::all(n, 4).filter(|w| box1_count_word(w) == 0).count();
            assert_eq!(BigInt::from(brute), box1_avoider_count(4, n));
            let brute5 = Word::all(n, 5)
                .filter(|w| crate::word::rect_count_word(w, 1, 2) == 0)
                .count();
            assert_eq!(BigInt::from(brute5), rect12_avoider_count(5, n));
        }
    }
}
