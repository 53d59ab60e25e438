//! Involutions and fixed-point-free involutions of `Z`, their word sets, and
//! atom sets.
//!
//! Involution words for `z` are built by the two-case recursion that appends a
//! letter `a` when `z_j(a) < z_j(a+1)`, multiplying when `z_j` fixes both `a`
//! and `a+1` and conjugating otherwise; a primed letter is allowed exactly in
//! the multiplication case. The fpf flavor conjugates `1_fpf` and admits only
//! unprimed letters.

use crate::perm::{from_word, Permutation};
use crate::shapes::{Partition, WeakComposition};
use crate::words::{Letter, PrimedWord};
use crate::{Error, Result, DEFAULT_LENGTH_CAP};
use std::collections::BTreeSet;
use std::fmt;

/// An involution of `Z` with finitely many non-fixed points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    perm: Permutation,
}

impl Involution {
    pub fn identity() -> Self {
        Involution {
            perm: Permutation::identity(),
        }
    }

    pub fn from_permutation(perm: Permutation) -> Result<Self> {
        if perm.compose(&perm) != Permutation::identity() {
            return Err(Error::Domain(format!("{perm} is not an involution")));
        }
        Ok(Involution { perm })
    }

    /// From a list of disjoint 2-cycles.
    pub fn from_cycles(cycles: &[(i32, i32)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in cycles {
            if a == b || !seen.insert(a) || !seen.insert(b) {
                return Err(Error::Domain(format!("cycles not disjoint: {cycles:?}")));
            }
        }
        let mut p = Permutation::identity();
        for &(a, b) in cycles {
            p = p.compose(&transposition(a, b));
        }
        Involution::from_permutation(p)
    }

    /// Parse cycle notation like `(1 5)(2 3)`; `()` or an empty string is the
    /// identity.
    pub fn parse(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        Involution::from_cycles(&cycles)
    }

    pub fn apply(&self, i: i32) -> i32 {
        self.perm.apply(i)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// The 2-cycles `(a, b)` with `a < b = z(a)`.
    pub fn cycles(&self) -> Vec<(i32, i32)> {
        let (lo, hi) = if self.perm.is_identity() {
            (1, 0)
        } else {
            self.perm.window()
        };
        (lo..=hi)
            .filter(|&a| self.apply(a) > a)
            .map(|a| (a, self.apply(a)))
            .collect()
    }

    pub fn descents(&self) -> Vec<i32> {
        self.perm.descents()
    }

    pub fn max_descent(&self) -> Option<i32> {
        self.perm.max_descent()
    }

    /// Involution length: the common length of all involution words.
    pub fn involution_length(&self) -> usize {
        (self.perm.length() + self.cycles().len()) / 2
    }

    /// The involution code `c^O_i(z) = #{ j > i : min(i, z(i)) >= z(j) }`.
    pub fn involution_code(&self) -> WeakComposition {
        let hi = self.perm.max_moved().max(0);
        let mut parts = Vec::new();
        for i in 1..=hi {
            let m = i.min(self.apply(i));
            let cnt = (i + 1..=hi + 1).filter(|&j| m >= self.apply(j)).count() as u32;
            parts.push(cnt);
        }
        WeakComposition::new(parts)
    }

    pub fn is_vexillary(&self) -> bool {
        self.perm.is_vexillary()
    }

    /// All primed involution words, by descent recursion.
    pub fn involution_words(&self) -> Result<Vec<PrimedWord>> {
        self.involution_words_capped(DEFAULT_LENGTH_CAP)
    }

    pub fn involution_words_capped(&self, cap: usize) -> Result<Vec<PrimedWord>> {
        if self.involution_length() > cap {
            return Err(Error::EnumerationTooLarge(format!(
                "involution length {} exceeds cap {}",
                self.involution_length(),
                cap
            )));
        }
        let mut out = Vec::new();
        let mut suffix: Vec<Letter> = Vec::new();
        rec_o_words(self, &mut suffix, &mut out, true);
        Ok(out)
    }

    /// The unprimed involution words only.
    pub fn unprimed_involution_words_capped(&self, cap: usize) -> Result<Vec<PrimedWord>> {
        if self.involution_length() > cap {
            return Err(Error::EnumerationTooLarge(format!(
                "involution length {} exceeds cap {}",
                self.involution_length(),
                cap
            )));
        }
        let mut out = Vec::new();
        let mut suffix: Vec<Letter> = Vec::new();
        rec_o_words(self, &mut suffix, &mut out, false);
        Ok(out)
    }

    /// The atom set: minimal-length `w` with `z = w^{-1} o w`, obtained by
    /// grouping unprimed involution words by the permutation they multiply to.
    pub fn atoms(&self) -> Result<Vec<Permutation>> {
        let words = self.unprimed_involution_words_capped(DEFAULT_LENGTH_CAP)?;
        let mut set = BTreeSet::new();
        for w in &words {
            set.insert(from_word(&w.as_ints()?));
        }
        Ok(set.into_iter().collect())
    }
}

fn rec_o_words(z: &Involution, suffix: &mut Vec<Letter>, out: &mut Vec<PrimedWord>, primes: bool) {
    if z.is_identity() {
        let mut word: Vec<Letter> = suffix.clone();
        word.reverse();
        out.push(PrimedWord::new(word));
        return;
    }
    for a in z.descents() {
        if z.apply(a) == a + 1 {
            // remove the 2-cycle (a, a+1); both primed and unprimed letters work
            let y = Involution {
                perm: z.perm.times_s(a),
            };
            suffix.push(Letter::unprimed(a));
            rec_o_words(&y, suffix, out, primes);
            suffix.pop();
            if primes {
                suffix.push(Letter::primed(a));
                rec_o_words(&y, suffix, out, primes);
                suffix.pop();
            }
        } else {
            let s = Permutation::s(a);
            let y = Involution {
                perm: s.compose(&z.perm).compose(&s),
            };
            suffix.push(Letter::unprimed(a));
            rec_o_words(&y, suffix, out, primes);
            suffix.pop();
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in cycles {
            write!(f, "({} {})", a, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn transposition(a: i32, b: i32) -> Permutation {
    let lo = a.min(b);
    let hi = a.max(b);
    let mut images: Vec<i32> = (lo..=hi).collect();
    images.swap(0, (hi - lo) as usize);
    Permutation::from_window(lo, images).expect("transposition window")
}

fn parse_cycles(s: &str) -> Result<Vec<(i32, i32)>> {
    let s = s.trim();
    if s.is_empty() || s == "()" || s == "id" || s == "1" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::Parse(format!("bad cycles {s:?}")))?;
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| Error::Parse(format!("bad cycles {s:?}")))?
            + open;
        let inner = &rest[open + 1..close];
        let nums: Result<Vec<i32>> = inner
            .split_whitespace()
            .flat_map(|t| t.split(','))
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
            })
            .collect();
        let nums = nums?;
        if nums.len() != 2 {
            return Err(Error::Parse(format!(
                "only 2-cycles allowed, got {inner:?}"
            )));
        }
        cycles.push((nums[0], nums[1]));
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// All involutions preserving `[1, n]`, in lexicographic cycle-notation order.
pub fn all_involutions(n: usize) -> Vec<Involution> {
    fn rec(points: &[i32], cur: &mut Vec<(i32, i32)>, out: &mut Vec<Vec<(i32, i32)>>) {
        match points.first() {
            None => out.push(cur.clone()),
            Some(&a) => {
                // a fixed
                rec(&points[1..], cur, out);
                // a paired with some later point
                for (k, &b) in points.iter().enumerate().skip(1) {
                    let mut rest: Vec<i32> = points[1..].to_vec();
                    rest.remove(k - 1);
                    cur.push((a, b));
                    rec(&rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let points: Vec<i32> = (1..=n as i32).collect();
    let mut raw = Vec::new();
    rec(&points, &mut Vec::new(), &mut raw);
    let mut out: Vec<Involution> = raw
        .into_iter()
        .map(|c| Involution::from_cycles(&c).expect("disjoint cycles"))
        .collect();
    out.sort_by_key(|z| z.cycles());
    out.dedup();
    out
}

/// A fixed-point-free involution of `Z` agreeing with
/// `1_fpf : i -> i - (-1)^i` outside a finite window.
///
/// The window is kept aligned to the pairs `(2k-1, 2k)` so that the tail
/// matches `1_fpf`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpfInvolution {
    window_lo: i32, // odd
    images: Vec<i32>,
}

/// The base point `1_fpf` applied to `i`.
pub fn one_fpf_apply(i: i32) -> i32 {
    if i.rem_euclid(2) == 0 {
        i - 1
    } else {
        i + 1
    }
}

impl FpfInvolution {
    pub fn one_fpf() -> Self {
        FpfInvolution {
            window_lo: 1,
            images: Vec::new(),
        }
    }

    pub fn apply(&self, i: i32) -> i32 {
        let idx = i - self.window_lo;
        if idx >= 0 && (idx as usize) < self.images.len() {
            self.images[idx as usize]
        } else {
            one_fpf_apply(i)
        }
    }

    fn canonicalize(&mut self) {
        debug_assert!(self.window_lo.rem_euclid(2) == 1);
        debug_assert!(self.images.len().is_multiple_of(2));
        while self.images.len() >= 2
            && self.images[0] == one_fpf_apply(self.window_lo)
            && self.images[1] == self.window_lo
        {
            self.images.drain(0..2);
            self.window_lo += 2;
        }
        while self.images.len() >= 2 {
            let n = self.images.len();
            let a = self.window_lo + n as i32 - 2;
            if self.images[n - 2] == a + 1 && self.images[n - 1] == a {
                self.images.truncate(n - 2);
            } else {
                break;
            }
        }
        if self.images.is_empty() {
            self.window_lo = 1;
        }
    }

    /// From disjoint 2-cycles covering an even-aligned window; points of the
    /// window not listed must pair as in `1_fpf`.
    pub fn from_cycles(cycles: &[(i32, i32)]) -> Result<Self> {
        if cycles.is_empty() {
            return Ok(FpfInvolution::one_fpf());
        }
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for &(a, b) in cycles {
            lo = lo.min(a.min(b));
            hi = hi.max(a.max(b));
        }
        if lo.rem_euclid(2) == 0 {
            lo -= 1;
        }
        if hi.rem_euclid(2) == 1 {
            hi += 1;
        }
        let mut images: Vec<i32> = (lo..=hi).map(one_fpf_apply).collect();
        let mut touched: Vec<bool> = vec![false; (hi - lo + 1) as usize];
        for &(a, b) in cycles {
            if a == b {
                return Err(Error::Domain("fixed point in fpf involution".into()));
            }
            for x in [a, b] {
                if touched[(x - lo) as usize] {
                    return Err(Error::Domain(format!("cycles not disjoint: {cycles:?}")));
                }
                touched[(x - lo) as usize] = true;
            }
        }
        // points untouched by the listed cycles keep their 1_fpf partner,
        // which must also be untouched
        for x in lo..=hi {
            if !touched[(x - lo) as usize] && touched[(one_fpf_apply(x) - lo) as usize] {
                return Err(Error::Domain(format!(
                    "point {x} left unpaired by cycles {cycles:?}"
                )));
            }
        }
        for &(a, b) in cycles {
            images[(a - lo) as usize] = b;
            images[(b - lo) as usize] = a;
        }
        let mut z = FpfInvolution {
            window_lo: lo,
            images,
        };
        z.canonicalize();
        Ok(z)
    }

    /// Parse cycle notation like `(1 5)(2 4)(3 6)`; `1fpf` is the base point.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1fpf" || s.is_empty() {
            return Ok(FpfInvolution::one_fpf());
        }
        FpfInvolution::from_cycles(&parse_cycles(s)?)
    }

    pub fn is_one_fpf(&self) -> bool {
        self.images.is_empty()
    }

    /// Window pairs `(a, b)` with `a < b = z(a)` that differ from `1_fpf`,
    /// plus the `1_fpf`-patterned pairs inside the canonical window.
    pub fn window_cycles(&self) -> Vec<(i32, i32)> {
        let lo = self.window_lo;
        let hi = lo + self.images.len() as i32 - 1;
        (lo..=hi)
            .filter(|&a| self.apply(a) > a)
            .map(|a| (a, self.apply(a)))
            .collect()
    }

    /// Conjugate by the simple transposition `s_i`.
    pub fn conjugate_s(&self, i: i32) -> FpfInvolution {
        let mut lo = self
            .window_lo
            .min(if i.rem_euclid(2) == 1 { i } else { i - 1 });
        let mut hi =
            (self.window_lo + self.images.len() as i32 - 1).max(if (i + 1).rem_euclid(2) == 0 {
                i + 1
            } else {
                i + 2
            });
        if lo.rem_euclid(2) == 0 {
            lo -= 1;
        }
        if hi.rem_euclid(2) == 1 {
            hi += 1;
        }
        let images: Vec<i32> = (lo..=hi)
            .map(|x| {
                let sx = if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                };
                let zx = self.apply(sx);
                if zx == i {
                    i + 1
                } else if zx == i + 1 {
                    i
                } else {
                    zx
                }
            })
            .collect();
        let mut z = FpfInvolution {
            window_lo: lo,
            images,
        };
        z.canonicalize();
        z
    }

    /// fpf-descents: `i` with `i+1 != z(i) > z(i+1) != i`.
    pub fn fpf_descents(&self) -> Vec<i32> {
        if self.is_one_fpf() {
            return Vec::new();
        }
        let lo = self.window_lo - 2;
        let hi = self.window_lo + self.images.len() as i32 + 1;
        (lo..=hi)
            .filter(|&i| {
                let zi = self.apply(i);
                let zi1 = self.apply(i + 1);
                zi != i + 1 && zi > zi1 && zi1 != i
            })
            .collect()
    }

    /// Ordinary descents `z(i) > z(i+1)` over the window (including the
    /// `1_fpf` pattern positions).
    pub fn descents_in_window(&self) -> Vec<i32> {
        let lo = self.window_lo;
        let hi = self.window_lo + self.images.len() as i32 - 1;
        (lo..hi)
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    pub fn max_fpf_descent(&self) -> Option<i32> {
        self.fpf_descents().into_iter().max()
    }

    /// fpf-involution length: the common length of all fpf-involution words.
    pub fn fpf_involution_length(&self) -> usize {
        let mut z = self.clone();
        let mut len = 0;
        loop {
            match z.fpf_descents().first() {
                None => return len,
                Some(&a) => {
                    z = z.conjugate_s(a);
                    len += 1;
                }
            }
        }
    }

    /// The fpf-involution code
    /// `c^Sp_i(z) = #{ j > i : min(i, z(i)) > z(j) }` on positive support.
    pub fn fpf_involution_code(&self) -> WeakComposition {
        let hi = (self.window_lo + self.images.len() as i32 + 1).max(2);
        let mut parts = Vec::new();
        for i in 1..=hi {
            let m = i.min(self.apply(i));
            let cnt = (i + 1..=hi + 2).filter(|&j| m > self.apply(j)).count() as u32;
            parts.push(cnt);
        }
        WeakComposition::new(parts)
    }

    /// All fpf-involution words (unprimed), by fpf-descent recursion.
    pub fn fpf_involution_words(&self) -> Result<Vec<PrimedWord>> {
        self.fpf_involution_words_capped(DEFAULT_LENGTH_CAP)
    }

    pub fn fpf_involution_words_capped(&self, cap: usize) -> Result<Vec<PrimedWord>> {
        if self.fpf_involution_length() > cap {
            return Err(Error::EnumerationTooLarge(format!(
                "fpf involution length {} exceeds cap {}",
                self.fpf_involution_length(),
                cap
            )));
        }
        fn rec(z: &FpfInvolution, suffix: &mut Vec<i32>, out: &mut Vec<PrimedWord>) {
            let descents = z.fpf_descents();
            if descents.is_empty() {
                let mut word = suffix.clone();
                word.reverse();
                out.push(PrimedWord::from_ints(&word));
                return;
            }
            for a in descents {
                suffix.push(a);
                rec(&z.conjugate_s(a), suffix, out);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, &mut Vec::new(), &mut out);
        Ok(out)
    }

    /// The atom set: minimal-length `w` with `z = w^{-1} 1_fpf w`.
    pub fn atoms(&self) -> Result<Vec<Permutation>> {
        let words = self.fpf_involution_words()?;
        let mut set = BTreeSet::new();
        for w in &words {
            set.insert(from_word(&w.as_ints()?));
        }
        Ok(set.into_iter().collect())
    }

    /// The off-diagonal Rothe diagram cells `(i, j)`, `i != j`, in the
    /// positive quadrant.
    pub fn off_diagonal_diagram(&self) -> Vec<(i32, i32)> {
        let hi = (self.window_lo + self.images.len() as i32 + 1).max(2);
        let mut cells = Vec::new();
        for i in 1..=hi {
            for j in 1..=hi {
                if i != j && self.apply(i) > j && self.apply(j) > i {
                    cells.push((i, j));
                }
            }
        }
        cells
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one_fpf() {
            return write!(f, "1fpf");
        }
        for (a, b) in self.window_cycles() {
            write!(f, "({} {})", a, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// All elements of the `S_infinity`-conjugacy class of `1_fpf` preserving
/// `[1, 2m]`, i.e. perfect matchings of `[1, 2m]`, in lexicographic
/// cycle-notation order.
pub fn all_fpf_involutions(two_m: usize) -> Vec<FpfInvolution> {
    assert!(
        two_m.is_multiple_of(2),
        "fpf involutions need an even window"
    );
    fn rec(points: &[i32], cur: &mut Vec<(i32, i32)>, out: &mut Vec<Vec<(i32, i32)>>) {
        match points.first() {
            None => out.push(cur.clone()),
            Some(&a) => {
                for (k, &b) in points.iter().enumerate().skip(1) {
                    let mut rest: Vec<i32> = points[1..].to_vec();
                    rest.remove(k - 1);
                    cur.push((a, b));
                    rec(&rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let points: Vec<i32> = (1..=two_m as i32).collect();
    let mut raw = Vec::new();
    rec(&points, &mut Vec::new(), &mut raw);
    let mut out: Vec<FpfInvolution> = raw
        .into_iter()
        .map(|c| FpfInvolution::from_cycles(&c).expect("matching"))
        .collect();
    out.sort_by_key(|z| z.window_cycles());
    out.dedup();
    out
}

/// The dominant fpf-involution of a skew-symmetric shape: the unique
/// `z` whose off-diagonal Rothe diagram is the off-diagonal part of
/// `D_lambda`. Constructed by greedy matching and verified against the
/// diagram equation.
pub fn dominant_of_shape_fpf(lambda: &Partition) -> Result<FpfInvolution> {
    if !crate::shapes::is_skew_symmetric(lambda) {
        return Err(Error::Domain(format!("{lambda} is not skew-symmetric")));
    }
    // pair each unpaired i, in increasing order, with the smallest unused
    // value exceeding max(lambda_i, i)
    let hi = (lambda.part(1) as i32 + lambda.length() as i32 + 2).max(4);
    let hi = if hi % 2 == 0 { hi } else { hi + 1 };
    let mut cycles: Vec<(i32, i32)> = Vec::new();
    let mut used: BTreeSet<i32> = BTreeSet::new();
    for i in 1..=hi {
        if used.contains(&i) {
            continue;
        }
        let floor = (lambda.part(i as usize) as i32).max(i);
        let b = (floor + 1..)
            .find(|x| !used.contains(x))
            .expect("unbounded range");
        used.insert(i);
        used.insert(b);
        cycles.push((i, b));
    }
    let z = FpfInvolution::from_cycles(&cycles)?;
    let mut diagram = z.off_diagonal_diagram();
    diagram.sort();
    let mut expected: Vec<(i32, i32)> = lambda
        .cells()
        .iter()
        .filter(|&&(i, j)| i != j)
        .map(|&(i, j)| (i as i32, j as i32))
        .collect();
    expected.sort();
    if diagram != expected {
        return Err(Error::TheoremViolation(format!(
            "greedy dominant fpf construction failed for {lambda}: got diagram {diagram:?}"
        )));
    }
    Ok(z)
}

/// The dominant involution of a symmetric shape, i.e. the dominant permutation
/// `w_lambda`, which is an involution exactly when `lambda` is symmetric.
pub fn dominant_of_shape_involution(lambda: &Partition) -> Result<Involution> {
    if !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric")));
    }
    Involution::from_permutation(crate::perm::dominant_of_shape_perm(lambda))
}

/// The marked inversions of a primed word whose ceiling is reduced:
/// `(a_j, b_j)` computed from the suffix products, collected over the primed
/// positions.
pub fn marked_inversions(word: &PrimedWord) -> Result<Vec<(i32, i32)>> {
    let ceils: Vec<i32> = word.letters().iter().map(|l| l.ceil()).collect();
    let w = from_word(&ceils);
    if w.length() != ceils.len() {
        return Err(Error::InvalidWord(format!("{word} is not reduced")));
    }
    let l = ceils.len();
    let mut out = BTreeSet::new();
    for j in 0..l {
        if !word.letters()[j].is_primed() {
            continue;
        }
        // suffix product s_{i_l} s_{i_{l-1}} ... s_{i_{j+1}} applied to
        // ceil(i_j) and ceil(i_j) + 1; the innermost factor acts first
        let mut a = ceils[j];
        let mut b = ceils[j] + 1;
        for &i in &ceils[j + 1..l] {
            a = if a == i {
                i + 1
            } else if a == i + 1 {
                i
            } else {
                a
            };
            b = if b == i {
                i + 1
            } else if b == i + 1 {
                i
            } else {
                b
            };
        }
        out.insert((a, b));
    }
    Ok(out.into_iter().collect())
}
