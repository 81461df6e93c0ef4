//! Words over the alphabet {1, ..., l} and their bond/box statistics.
//!
//! For words the "within distance b in value" tests are inclusive of equal
//! letters, so a bond between adjacent letters means |u - v| <= 1 and the
//! k-bond test is |u - v| <= k.

use crate::error::{Error, Result};
use std::fmt;

/// A word with its alphabet size carried explicitly: statistics and
/// avoidance counts depend on l, not just on the letters present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        for &c in &letters {
            if c < 1 || c > alphabet {
                return Err(Error::Parse(format!(
                    "letter {c} out of range 1..{alphabet}"
                )));
            }
        }
        Ok(Word { letters, alphabet })
    }

    /// Same text format as permutations: concatenated digits or
    /// comma-separated letters.
    pub fn parse(s: &str, alphabet: u32) -> Result<Self> {
        Word::new(crate::perm::parse_one_line(s)?, alphabet)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// 1-based access.
    pub fn at(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    /// All l^n words of length n, lexicographic.
    pub fn all(n: usize, alphabet: u32) -> impl Iterator<Item = Word> {
        assert!(alphabet >= 1);
        LexWords {
            next: Some(vec![1; n]),
            alphabet,
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::perm::format_one_line(&self.letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::perm::format_one_line(&self.letters))
    }
}

struct LexWords {
    next: Option<Vec<u32>>,
    alphabet: u32,
}

impl Iterator for LexWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.next.take()?;
        let out = Word {
            letters: cur.clone(),
            alphabet: self.alphabet,
        };
        let mut v = cur;
        let mut i = v.len();
        loop {
            if i == 0 {
                return Some(out); // exhausted
            }
            if v[i - 1] < self.alphabet {
                v[i - 1] += 1;
                for c in v[i..].iter_mut() {
                    *c = 1;
                }
                self.next = Some(v);
                return Some(out);
            }
            i -= 1;
        }
    }
}

/// Number of adjacent pairs with |u - v| <= k.
pub fn k_bond_count(w: &Word, k: u32) -> usize {
    w.letters()
        .windows(2)
        .filter(|p| p[0].abs_diff(p[1]) <= k)
        .count()
}

/// Positions with another letter at position distance <= a and letter
/// distance <= b.
pub fn rect_match_set_word(w: &Word, a: u32, b: u32) -> Vec<usize> {
    assert!(a >= 1);
    let n = w.len();
    let mut out = Vec::new();
    for i in 1..=n {
        let lo = i.saturating_sub(a as usize).max(1);
        let hi = (i + a as usize).min(n);
        if (lo..=hi).any(|j| j != i && w.at(i).abs_diff(w.at(j)) <= b) {
            out.push(i);
        }
    }
    out
}

/// (a,b)-rectangle count for words.
pub fn rect_count_word(w: &Word, a: u32, b: u32) -> usize {
    rect_match_set_word(w, a, b).len()
}

/// k-box count: (k,k)-rectangle count.
pub fn box_count_word(w: &Word, k: u32) -> usize {
    rect_count_word(w, k, k)
}

/// 1-box count, the word analogue of bx.
pub fn box1_count_word(w: &Word) -> usize {
    rect_count_word(w, 1, 1)
}

/// A word is k-smooth when every adjacent pair is within k, i.e. the k-bond
/// count is maximal (n - 1).
pub fn is_k_smooth(w: &Word, k: u32) -> bool {
    w.letters().windows(2).all(|p| p[0].abs_diff(p[1]) <= k)
}
