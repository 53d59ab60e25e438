//! Weak compositions, partitions, shifted shapes, and flags.

use crate::words::PrimedWord;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finitely-supported sequence of nonnegative integers. The canonical form
/// has no trailing zeros; all consumers treat it as an infinite zero-padded
/// sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition { parts }
    }

    pub fn empty() -> Self {
        WeakComposition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The 1-indexed part, zero beyond the stored window.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Index of the last nonzero part; 0 for the empty composition.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Swap parts `i` and `i+1` (1-indexed).
    pub fn swapped(&self, i: usize) -> WeakComposition {
        let n = self.parts.len().max(i + 1);
        let mut v: Vec<u32> = (1..=n).map(|j| self.part(j)).collect();
        v.swap(i - 1, i);
        WeakComposition::new(v)
    }

    /// The sorted-descending rearrangement.
    pub fn lambda(&self) -> Partition {
        let mut v = self.parts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted parts form a partition")
    }

    pub fn is_symmetric(&self) -> bool {
        self.lambda().is_symmetric()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        is_skew_symmetric(&self.lambda())
    }

    /// Parse from comma-separated integers, e.g. `3,0,1,4`.
    pub fn parse(s: &str) -> Result<WeakComposition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeakComposition::empty());
        }
        // Bare digit strings like "1021" are accepted as single-digit parts.
        if !s.contains(',') && s.len() > 1 && s.chars().all(|c| c.is_ascii_digit()) {
            return Ok(WeakComposition::new(
                s.chars().map(|c| c.to_digit(10).unwrap()).collect(),
            ));
        }
        let parts: Result<Vec<u32>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?}")))
            })
            .collect();
        Ok(WeakComposition::new(parts?))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(parts: &[u32]) -> Self {
        WeakComposition::new(parts.to_vec())
    }
}

/// The sorted-descending rearrangement of a weak composition.
pub fn lambda_of(alpha: &WeakComposition) -> Partition {
    alpha.lambda()
}

/// A weakly decreasing weak composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: WeakComposition,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("not weakly decreasing: {parts:?}")));
        }
        Ok(Partition {
            parts: WeakComposition::new(parts),
        })
    }

    pub fn from_parts(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("partition parts")
    }

    pub fn empty() -> Partition {
        Partition {
            parts: WeakComposition::empty(),
        }
    }

    pub fn as_composition(&self) -> &WeakComposition {
        &self.parts
    }

    pub fn parts(&self) -> &[u32] {
        self.parts.parts()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.part(i)
    }

    pub fn length(&self) -> usize {
        self.parts.length()
    }

    pub fn size(&self) -> u32 {
        self.parts.sum()
    }

    /// Column lengths.
    pub fn transpose(&self) -> Partition {
        let mut cols = Vec::new();
        let width = self.part(1) as usize;
        for j in 1..=width {
            cols.push(
                self.parts
                    .parts()
                    .iter()
                    .filter(|&&p| p as usize >= j)
                    .count() as u32,
            );
        }
        Partition::new(cols).expect("transpose is a partition")
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Nonzero parts pairwise distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.parts().windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col as u32 <= self.part(row)
    }

    /// The Young diagram as (row, col) pairs, 1-indexed.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.length() {
            for j in 1..=self.part(i) as usize {
                out.push((i, j));
            }
        }
        out
    }

    /// Cells of the shifted diagram `{(i, i+j-1)}` of a strict partition.
    pub fn shifted_cells(&self) -> Vec<(usize, usize)> {
        assert!(self.is_strict(), "shifted diagram needs a strict partition");
        let mut out = Vec::new();
        for i in 1..=self.length() {
            for j in i..i + self.part(i) as usize {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

/// The diagonal-toggle test: a symmetric partition is skew-symmetric when, for
/// the maximal `i` with `(i,i)` in the diagram, neither adding nor removing the
/// box `(i,i+1)` yields the diagram of a different partition.
pub fn is_skew_symmetric(lambda: &Partition) -> bool {
    if !lambda.is_symmetric() {
        return false;
    }
    let d = (1..=lambda.length())
        .filter(|&i| lambda.part(i) as usize >= i)
        .count();
    if d == 0 {
        return true; // the empty partition
    }
    // Adding (d, d+1): a partition diagram iff row d stays <= row d-1 and the
    // result is still left-justified, i.e. lambda_d == d (we would extend row d
    // to d+1) and (d == 1 or lambda_{d-1} >= d+1).
    if lambda.part(d) as usize == d && (d == 1 || lambda.part(d - 1) as usize > d) {
        return false;
    }
    // Removing (d, d+1): only meaningful if row d ends exactly at column d+1.
    if lambda.part(d) as usize == d + 1
        && (d >= lambda.length() || lambda.part(d + 1) as usize <= d)
    {
        return false;
    }
    true
}

/// The strict partition with nonzero parts `{ lambda_i - i }`.
pub fn half_lt(lambda: &Partition) -> Partition {
    let mut parts: Vec<u32> = Vec::new();
    for i in 1..=lambda.length() {
        let v = lambda.part(i) as i64 - i as i64;
        if v > 0 {
            parts.push(v as u32);
        }
    }
    Partition::new(parts).expect("half_lt parts strictly decrease")
}

/// The strict partition with nonzero parts `{ lambda_i - (i-1) }`.
pub fn half_le(lambda: &Partition) -> Partition {
    let mut parts: Vec<u32> = Vec::new();
    for i in 1..=lambda.length() {
        let v = lambda.part(i) as i64 - (i as i64 - 1);
        if v > 0 {
            parts.push(v as u32);
        }
    }
    Partition::new(parts).expect("half_le parts strictly decrease")
}

/// Build the symmetric partition with Frobenius arm lengths `arms` (legs equal
/// arms). `arms` must be strictly decreasing and nonnegative.
fn from_frobenius_arms(arms: &[i64]) -> Partition {
    let d = arms.len();
    let mut rows: Vec<u32> = Vec::new();
    for (i, &a) in arms.iter().enumerate() {
        rows.push((a + i as i64 + 1) as u32);
    }
    // Rows below the Durfee square mirror the columns above it.
    let mut i = d + 1;
    loop {
        let cnt = arms
            .iter()
            .enumerate()
            .filter(|&(j, &a)| a + j as i64 + 1 >= i as i64)
            .count();
        if cnt == 0 {
            break;
        }
        rows.push(cnt as u32);
        i += 1;
    }
    Partition::new(rows).expect("frobenius rows weakly decrease")
}

/// The unique skew-symmetric partition with `half_lt(lambda) == mu`.
pub fn half_lt_inverse(mu: &Partition) -> Result<Partition> {
    assert!(mu.is_strict());
    let arms: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    let mut with_zero = arms.clone();
    with_zero.push(0);
    for cand_arms in [arms.as_slice(), with_zero.as_slice()] {
        if cand_arms.last().is_none_or(|&a| a >= 0) {
            let cand = from_frobenius_arms(cand_arms);
            if is_skew_symmetric(&cand) && half_lt(&cand) == *mu {
                return Ok(cand);
            }
        }
    }
    Err(Error::TheoremViolation(format!(
        "no skew-symmetric preimage of {mu} under half_lt"
    )))
}

/// The unique symmetric partition with `half_le(lambda) == mu`.
pub fn half_le_inverse(mu: &Partition) -> Result<Partition> {
    assert!(mu.is_strict());
    let arms: Vec<i64> = mu.parts().iter().map(|&p| p as i64 - 1).collect();
    let cand = from_frobenius_arms(&arms);
    if cand.is_symmetric() && half_le(&cand) == *mu {
        Ok(cand)
    } else {
        Err(Error::TheoremViolation(format!(
            "no symmetric preimage of {mu} under half_le"
        )))
    }
}

/// A weakly increasing bound sequence with `i <= phi_i`, stored on a finite
/// window; beyond the window `phi_i = max(i, last stored)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Flag {
    window: Vec<usize>,
}

impl Flag {
    pub fn new(window: Vec<usize>) -> Result<Flag> {
        for (i, &b) in window.iter().enumerate() {
            if b < i + 1 {
                return Err(Error::Domain(format!(
                    "flag bound {} at position {} below index",
                    b,
                    i + 1
                )));
            }
        }
        if window.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!(
                "flag not weakly increasing: {window:?}"
            )));
        }
        Ok(Flag { window })
    }

    /// The standard flag `phi_i = i`.
    pub fn standard() -> Flag {
        Flag { window: Vec::new() }
    }

    /// The 1-indexed bound.
    pub fn bound(&self, i: usize) -> usize {
        assert!(i >= 1);
        match self.window.get(i - 1) {
            Some(&b) => b,
            None => i.max(self.window.last().copied().unwrap_or(0)),
        }
    }

    pub fn is_standard(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &b)| b == i + 1)
    }

    /// Largest index whose bound can exceed the standard one.
    pub fn window_len(&self) -> usize {
        self.window
            .len()
            .max(self.window.last().copied().unwrap_or(0))
    }

    /// Decrease the bound at position `i` by one (materializing the window).
    pub fn decremented(&self, i: usize) -> Result<Flag> {
        let len = self.window.len().max(i);
        let mut v: Vec<usize> = (1..=len).map(|j| self.bound(j)).collect();
        v[i - 1] -= 1;
        Flag::new(v)
    }

    /// The conjugate sequence `psi_i = min { m : i <= phi_m }`.
    pub fn conjugate_bound(&self, i: usize) -> usize {
        let mut m = 1;
        loop {
            if self.bound(m) >= i {
                return m;
            }
            m += 1;
        }
    }

    /// Parse from comma-separated bounds, e.g. `2,2,4,4`.
    pub fn parse(s: &str) -> Result<Flag> {
        let s = s.trim();
        if s.is_empty() || s == "standard" {
            return Ok(Flag::standard());
        }
        let v: Result<Vec<usize>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad bound {t:?}")))
            })
            .collect();
        Flag::new(v?)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "standard");
        }
        let strs: Vec<String> = self.window.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All partitions of `n`.
pub fn all_partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let hi = rem.min(max);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn all_partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(all_partitions_of).collect()
}

/// All weak compositions with the given sum bound and length bound.
pub fn all_weak_compositions(max_sum: u32, max_len: usize) -> Vec<WeakComposition> {
    fn rec(rem: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if len == 0 {
            out.push(WeakComposition::new(cur.clone()));
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            rec(rem - p, len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=max_sum {
        rec(total, max_len, &mut Vec::new(), &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Condition (1): every letter `m` of the `i`-th word is a positive integer
/// with `i <= phi_{ceil(m)}`.
pub fn is_bounded_cond1(factors: &[PrimedWord], phi: &Flag) -> bool {
    for (idx, word) in factors.iter().enumerate() {
        let i = idx + 1;
        for l in word.letters() {
            let m = l.ceil();
            if m < 1 || i > phi.bound(m as usize) {
                return false;
            }
        }
    }
    true
}

/// Condition (2): each `m` appears in the `i`-th word only if
/// `1 <= i <= phi_m`, with `phi_m = 0` for `m <= 0`.
pub fn is_bounded_cond2(factors: &[PrimedWord], phi: &Flag) -> bool {
    for (idx, word) in factors.iter().enumerate() {
        let i = idx + 1;
        for l in word.letters() {
            let m = l.ceil();
            let bound = if m <= 0 { 0 } else { phi.bound(m as usize) };
            if i > bound {
                return false;
            }
        }
    }
    true
}

/// Condition (3): with `psi_i = min { m : i <= phi_m }`, every nonempty `i`-th
/// word has its minimum letter at least `psi_i`.
pub fn is_bounded_cond3(factors: &[PrimedWord], phi: &Flag) -> bool {
    for (idx, word) in factors.iter().enumerate() {
        let i = idx + 1;
        if let Some(min) = word.letters().iter().map(|l| l.ceil()).min() {
            if min < 1 || (min as usize) < phi.conjugate_bound(i) {
                return false;
            }
        }
    }
    true
}

/// Boundedness of a factorization by a flag (condition (1) of the three
/// equivalent formulations; see also [`is_bounded_cond2`] and
/// [`is_bounded_cond3`]).
pub fn is_bounded(factors: &[PrimedWord], phi: &Flag) -> bool {
    is_bounded_cond1(factors, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[u32]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn lambda_of_examples() {
        assert_eq!(
            lambda_of(&WeakComposition::new(vec![3, 0, 1, 4, 0, 0, 3])),
            lam(&[4, 3, 3, 1])
        );
        assert_eq!(lambda_of(&WeakComposition::empty()), Partition::empty());
        assert_eq!(
            lambda_of(&WeakComposition::new(vec![1, 0, 2, 1])),
            lam(&[2, 1, 1])
        );
    }

    #[test]
    fn half_shapes() {
        assert_eq!(half_lt(&lam(&[4, 3, 3, 1])), lam(&[3, 1]));
        assert_eq!(half_le(&lam(&[4, 3, 3, 1])), lam(&[4, 2, 1]));
        assert_eq!(half_lt(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn skew_symmetric_examples() {
        assert!(is_skew_symmetric(&Partition::empty()));
        assert!(is_skew_symmetric(&lam(&[2, 2])));
        assert!(!is_skew_symmetric(&lam(&[1])));
        assert!(!is_skew_symmetric(&lam(&[2, 1])));
        assert!(is_skew_symmetric(&lam(&[4, 3, 3, 1])));
        assert!(is_skew_symmetric(&lam(&[5, 1, 1, 1, 1])));
        assert!(!is_skew_symmetric(&lam(&[4, 3, 2, 1])));
        assert!(is_skew_symmetric(&lam(&[3, 1, 1])));
    }

    #[test]
    fn half_inverses() {
        assert_eq!(half_lt_inverse(&lam(&[3, 1])).unwrap(), lam(&[4, 3, 3, 1]));
        assert_eq!(
            half_le_inverse(&lam(&[4, 2, 1])).unwrap(),
            lam(&[4, 3, 3, 1])
        );
        assert_eq!(half_lt_inverse(&lam(&[4])).unwrap(), lam(&[5, 1, 1, 1, 1]));
        assert_eq!(half_le_inverse(&lam(&[2, 1])).unwrap(), lam(&[2, 2]));
        assert_eq!(half_lt_inverse(&lam(&[1])).unwrap(), lam(&[2, 2]));
        // enumeration: injectivity in both directions at small sizes
        for size in 0..=12u32 {
            for lm in all_partitions_of(size) {
                if is_skew_symmetric(&lm) {
                    assert_eq!(half_lt_inverse(&half_lt(&lm)).unwrap(), lm);
                }
                if lm.is_symmetric() {
                    assert_eq!(half_le_inverse(&half_le(&lm)).unwrap(), lm);
                }
            }
        }
    }

    #[test]
    fn flags() {
        let phi = Flag::standard();
        assert_eq!(phi.bound(3), 3);
        let phi = Flag::new(vec![2, 2, 4, 4]).unwrap();
        assert_eq!(phi.bound(1), 2);
        assert_eq!(phi.bound(5), 5);
        assert_eq!(phi.conjugate_bound(2), 1);
        assert_eq!(phi.conjugate_bound(3), 3);
        assert!(Flag::new(vec![2, 1]).is_err());
        assert!(Flag::new(vec![0]).is_err());
    }

    #[test]
    fn boundedness_examples() {
        let phi = Flag::standard();
        let a = vec![
            PrimedWord::from_ints(&[3, 1]),
            PrimedWord::from_ints(&[4, 3]),
            PrimedWord::empty(),
        ];
        assert!(is_bounded(&a, &phi));
        let b = vec![
            PrimedWord::empty(),
            PrimedWord::from_ints(&[2, 1]),
            PrimedWord::empty(),
        ];
        assert!(!is_bounded(&b, &phi));
        assert!(is_bounded_cond2(&a, &phi) && !is_bounded_cond2(&b, &phi));
        assert!(is_bounded_cond3(&a, &phi) && !is_bounded_cond3(&b, &phi));
    }
}
