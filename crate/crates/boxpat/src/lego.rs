//! Stable LEGO walls and the bijection with 1-box-avoiding 5-ary words.
//!
//! A wall is a stack of rows of bricks of a fixed total width. It is stable
//! when no internal seam position repeats between adjacent rows. For width 7
//! with bricks {2,3,4} the seam-conflict graph of the five possible rows is
//! a path, so rows can be labeled 1..5 with two rows stackable exactly when
//! their labels differ by at least 2 — the 1-box avoidance condition.

use crate::error::{Error, Result};
use crate::word::{box1_count_word, Word};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// One row of a wall: an ordered list of brick lengths with the derived set
/// of internal seam positions (proper prefix sums).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RowConfig {
    bricks: Vec<u32>,
}

impl RowConfig {
    pub fn new(bricks: Vec<u32>) -> Self {
        assert!(!bricks.is_empty());
        RowConfig { bricks }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bricks: Vec<u32> = s
            .trim()
            .split('+')
            .map(|tok| {
                tok.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad brick '{}'", tok.trim())))
            })
            .collect::<Result<_>>()?;
        if bricks.is_empty() {
            return Err(Error::Parse("empty row".into()));
        }
        Ok(RowConfig::new(bricks))
    }

    pub fn bricks(&self) -> &[u32] {
        &self.bricks
    }

    pub fn width(&self) -> u32 {
        self.bricks.iter().sum()
    }

    /// Internal seam positions, strictly between 0 and the width.
    pub fn seams(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        self.bricks[..self.bricks.len() - 1]
            .iter()
            .map(|b| {
                acc += b;
                acc
            })
            .collect()
    }

    /// Two rows can sit on top of each other iff their seams are disjoint.
    pub fn stackable(&self, other: &RowConfig) -> bool {
        self.seams().is_disjoint(&other.seams())
    }

    /// The lowest seam shared with another row, if any.
    pub fn shared_seam(&self, other: &RowConfig) -> Option<u32> {
        self.seams().intersection(&other.seams()).next().copied()
    }
}

impl fmt::Display for RowConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.bricks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", toks.join("+"))
    }
}

impl fmt::Debug for RowConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A wall: rows listed bottom to top, all of the same width.
#[derive(Clone, PartialEq, Eq)]
pub struct LegoWall {
    width: u32,
    rows: Vec<RowConfig>,
}

impl LegoWall {
    pub fn new(width: u32, rows: Vec<RowConfig>) -> Result<Self> {
        for r in &rows {
            if r.width() != width {
                return Err(Error::Parse(format!(
                    "row {r} has width {}, wall has width {width}",
                    r.width()
                )));
            }
        }
        Ok(LegoWall { width, rows })
    }

    /// Rows bottom to top, one per line, bricks "+"-separated.
    pub fn parse(width: u32, s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(RowConfig::parse)
            .collect::<Result<Vec<_>>>()?;
        LegoWall::new(width, rows)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[RowConfig] {
        &self.rows
    }

    pub fn check_stable(&self) -> Result<()> {
        for (i, pair) in self.rows.windows(2).enumerate() {
            if let Some(seam) = pair[0].shared_seam(&pair[1]) {
                return Err(Error::NotStable {
                    lower: i + 1,
                    upper: i + 2,
                    seam,
                });
            }
        }
        Ok(())
    }

    pub fn is_stable(&self) -> bool {
        self.check_stable().is_ok()
    }
}

impl fmt::Debug for LegoWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Display for LegoWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All compositions of `width` into parts from `brick_set`, in canonical
/// label order: when the seam-conflict graph is a path, endpoints-to-
/// endpoints starting from the lexicographically smallest endpoint;
/// otherwise plain lexicographic order.
pub fn enumerate_row_configs(width: u32, brick_set: &[u32]) -> Vec<RowConfig> {
    let mut configs = Vec::new();
    let mut bricks: Vec<u32> = Vec::new();
    compositions(width, brick_set, &mut bricks, &mut configs);
    configs.sort();
    if let Some(order) = path_order(&configs) {
        order.into_iter().map(|i| configs[i].clone()).collect()
    } else {
        configs
    }
}

fn compositions(rem: u32, brick_set: &[u32], acc: &mut Vec<u32>, out: &mut Vec<RowConfig>) {
    if rem == 0 {
        if !acc.is_empty() {
            out.push(RowConfig::new(acc.clone()));
        }
        return;
    }
    for &b in brick_set {
        if b <= rem {
            acc.push(b);
            compositions(rem - b, brick_set, acc, out);
            acc.pop();
        }
    }
}

/// If the conflict graph (distinct configs sharing a seam) is a path
/// covering all vertices, return the vertex order along it, starting from
/// the lexicographically smaller endpoint.
fn path_order(configs: &[RowConfig]) -> Option<Vec<usize>> {
    let n = configs.len();
    if n < 2 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && configs[i].shared_seam(&configs[j]).is_some())
                .collect()
        })
        .collect();
    let ends: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 1).collect();
    if ends.len() != 2 || adj.iter().any(|a| a.len() > 2) {
        return None;
    }
    let start = *ends
        .iter()
        .min_by_key(|&&i| &configs[i])
        .unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *adj[cur].iter().find(|&&v| v != prev)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    // a cycle would revisit; a disconnected graph would run out via `?`
    Some(order)
}

/// Number of stable walls of the given height, by DP over row configs.
pub fn count_stable_walls(width: u32, brick_set: &[u32], height: usize) -> BigInt {
    let configs = enumerate_row_configs(width, brick_set);
    if height == 0 {
        return BigInt::one();
    }
    let m = configs.len();
    let ok: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| configs[i].stackable(&configs[j])).collect())
        .collect();
    let mut cur = vec![BigInt::one(); m];
    for _ in 1..height {
        let next: Vec<BigInt> = (0..m)
            .map(|j| (0..m).filter(|&i| ok[i][j]).map(|i| &cur[i]).sum())
            .collect();
        cur = next;
    }
    cur.iter().sum()
}

const LEGO_WIDTH: u32 = 7;
const LEGO_BRICKS: [u32; 3] = [2, 3, 4];

/// The five width-7 row configurations in label order 1..5.
pub fn lego_alphabet() -> Vec<RowConfig> {
    enumerate_row_configs(LEGO_WIDTH, &LEGO_BRICKS)
}

/// Map a 1-box-avoiding word over [5] to a stable width-7 wall, letter i
/// becoming row i (bottom to top).
pub fn lego_encode(w: &Word) -> Result<LegoWall> {
    assert_eq!(w.alphabet(), 5, "the LEGO bijection is for words over [5]");
    if let Some(&i) = crate::word::rect_match_set_word(w, 1, 1).first() {
        return Err(Error::NotAvoider { position: i });
    }
    let alphabet = lego_alphabet();
    let rows = w
        .letters()
        .iter()
        .map(|&c| alphabet[c as usize - 1].clone())
        .collect();
    LegoWall::new(LEGO_WIDTH, rows)
}

/// Inverse of [`lego_encode`]: read the row labels of a stable wall.
pub fn lego_decode(wall: &LegoWall) -> Result<Word> {
    wall.check_stable()?;
    let alphabet = lego_alphabet();
    let letters = wall
        .rows()
        .iter()
        .map(|r| {
            alphabet
                .iter()
                .position(|c| c == r)
                .map(|p| p as u32 + 1)
                .ok_or_else(|| Error::Parse(format!("row {r} is not a width-7 config")))
        })
        .collect::<Result<Vec<_>>>()?;
    let w = Word::new(letters, 5)?;
    debug_assert_eq!(box1_count_word(&w), 0);
    Ok(w)
}
