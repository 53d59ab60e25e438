//! Letters of `Z + Z'` and primed words.
//!
//! A letter is a half-integer: `k` (unprimed) or `k' = k - 1/2` (primed). All
//! letters are stored as doubled integers, so `k <-> 2k` and `k' <-> 2k - 1`;
//! comparisons in the total order `1' < 1 < 2' < 2 < ...` are integer
//! comparisons on the doubled encoding and nothing is floating point.

use crate::{Error, Result};
use std::fmt;

/// A letter in `Z + Z'`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    doubled: i32,
}

impl Letter {
    pub fn from_doubled(doubled: i32) -> Self {
        Letter { doubled }
    }

    /// The unprimed letter `k`.
    pub fn unprimed(k: i32) -> Self {
        Letter { doubled: 2 * k }
    }

    /// The primed letter `k' = k - 1/2`.
    pub fn primed(k: i32) -> Self {
        Letter { doubled: 2 * k - 1 }
    }

    pub fn doubled(self) -> i32 {
        self.doubled
    }

    pub fn is_primed(self) -> bool {
        self.doubled.rem_euclid(2) == 1
    }

    /// The ceiling: `k` for both `k` and `k'`.
    pub fn ceil(self) -> i32 {
        (self.doubled + 1).div_euclid(2)
    }

    pub fn floor(self) -> i32 {
        self.doubled.div_euclid(2)
    }

    /// Reverse the prime: `k <-> k'`. An involution.
    pub fn toggle_prime(self) -> Self {
        if self.is_primed() {
            Letter {
                doubled: self.doubled + 1,
            }
        } else {
            Letter {
                doubled: self.doubled - 1,
            }
        }
    }

    /// The negation `x* = -x - (ceil(x) - floor(x))`, so `k* = -k` and `(k')* = (-k)'`.
    pub fn star(self) -> Self {
        if self.is_primed() {
            Letter {
                doubled: -self.doubled - 2,
            }
        } else {
            Letter {
                doubled: -self.doubled,
            }
        }
    }
}

/// Swap the primes on a pair: reverse both primes if exactly one letter is
/// primed, otherwise leave the pair unchanged.
pub fn swap_primes(x: Letter, y: Letter) -> (Letter, Letter) {
    if x.is_primed() != y.is_primed() {
        (x.toggle_prime(), y.toggle_prime())
    } else {
        (x, y)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.ceil())
        } else {
            write!(f, "{}", self.ceil())
        }
    }
}

/// A finite sequence of letters. The empty word is permitted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PrimedWord {
    letters: Vec<Letter>,
}

impl PrimedWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        PrimedWord { letters }
    }

    pub fn empty() -> Self {
        PrimedWord {
            letters: Vec::new(),
        }
    }

    /// An unprimed word from integer letters.
    pub fn from_ints(values: &[i32]) -> Self {
        PrimedWord {
            letters: values.iter().map(|&v| Letter::unprimed(v)).collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letterwise ceiling.
    pub fn unprime(&self) -> PrimedWord {
        PrimedWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::unprimed(l.ceil()))
                .collect(),
        }
    }

    pub fn is_unprimed(&self) -> bool {
        self.letters.iter().all(|l| !l.is_primed())
    }

    /// Letterwise `x -> x*`; an involution on primed words.
    pub fn star(&self) -> PrimedWord {
        PrimedWord {
            letters: self.letters.iter().map(|l| l.star()).collect(),
        }
    }

    pub fn reversed(&self) -> PrimedWord {
        PrimedWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Strictly decreasing in the `1' < 1 < 2' < 2 < ...` order.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] < w[1])
    }

    /// The integer letters, erroring on any primed letter.
    pub fn as_ints(&self) -> Result<Vec<i32>> {
        self.letters
            .iter()
            .map(|l| {
                if l.is_primed() {
                    Err(Error::InvalidWord(format!(
                        "unexpected primed letter in {}",
                        self
                    )))
                } else {
                    Ok(l.ceil())
                }
            })
            .collect()
    }

    /// Parse from space-separated tokens like `3' 2 1`.
    pub fn parse(s: &str) -> Result<PrimedWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(parse_letter(tok)?);
        }
        Ok(PrimedWord { letters })
    }

    /// Parse compact single-digit notation like `5'421` (used in factorization
    /// labels). `·` or an empty string denotes the empty word.
    pub fn parse_compact(s: &str) -> Result<PrimedWord> {
        let s = s.trim();
        if s.is_empty() || s == "·" || s == "." || s == "-" {
            return Ok(PrimedWord::empty());
        }
        let mut letters: Vec<Letter> = Vec::new();
        for c in s.chars() {
            if c == '\'' || c == '′' {
                let last = letters
                    .last_mut()
                    .ok_or_else(|| Error::Parse(format!("dangling prime in {s:?}")))?;
                *last = last.toggle_prime();
            } else if let Some(d) = c.to_digit(10) {
                letters.push(Letter::unprimed(d as i32));
            } else {
                return Err(Error::Parse(format!("bad letter {c:?} in {s:?}")));
            }
        }
        Ok(PrimedWord { letters })
    }
}

pub fn parse_letter(tok: &str) -> Result<Letter> {
    let (body, primed) = match tok.strip_suffix('\'') {
        Some(b) => (b, true),
        None => (tok, false),
    };
    let k: i32 = body
        .parse()
        .map_err(|_| Error::Parse(format!("bad letter token {tok:?}")))?;
    Ok(if primed {
        Letter::primed(k)
    } else {
        Letter::unprimed(k)
    })
}

impl fmt::Display for PrimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PrimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl From<Vec<Letter>> for PrimedWord {
    fn from(letters: Vec<Letter>) -> Self {
        PrimedWord { letters }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_encoding() {
        assert_eq!(Letter::unprimed(3).doubled(), 6);
        assert_eq!(Letter::primed(3).doubled(), 5);
        assert_eq!(Letter::primed(3).ceil(), 3);
        assert_eq!(Letter::primed(-2).ceil(), -2);
        assert_eq!(Letter::from_doubled(-7).ceil(), -3);
        assert!(Letter::primed(1) < Letter::unprimed(1));
        assert!(Letter::unprimed(1) < Letter::primed(2));
    }

    #[test]
    fn star_examples() {
        // unprimed word 2 1 3 -> -2 -1 -3
        let w = PrimedWord::from_ints(&[2, 1, 3]);
        assert_eq!(w.star(), PrimedWord::from_ints(&[-2, -1, -3]));
        // 3' (doubled 5) -> (-3)' (doubled -7)
        assert_eq!(Letter::primed(3).star().doubled(), -7);
        // involution
        let v = PrimedWord::parse("1' 2").unwrap();
        assert_eq!(v.star().star(), v);
    }

    #[test]
    fn toggle_is_involution() {
        for d in -9..9 {
            let l = Letter::from_doubled(d);
            assert_eq!(l.toggle_prime().toggle_prime(), l);
        }
    }

    #[test]
    fn parse_roundtrip() {
        let w = PrimedWord::parse("3' 2 -1'").unwrap();
        assert_eq!(format!("{}", w), "3' 2 -1'");
        assert_eq!(
            PrimedWord::parse_compact("5'421").unwrap().to_string(),
            "5' 4 2 1"
        );
        assert_eq!(PrimedWord::parse_compact("·").unwrap(), PrimedWord::empty());
    }
}
