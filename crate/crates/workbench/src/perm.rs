//! Finitely-supported permutations of `Z`.
//!
//! A permutation is stored in one-line notation on the minimal window
//! containing its non-fixed points and acts as the identity outside it.

use crate::shapes::{Flag, Partition, WeakComposition};
use crate::words::PrimedWord;
use crate::{Error, Result, DEFAULT_LENGTH_CAP};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window_lo: i32,
    images: Vec<i32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            window_lo: 1,
            images: Vec::new(),
        }
    }

    /// The simple transposition `(i, i+1)`.
    pub fn s(i: i32) -> Self {
        Permutation {
            window_lo: i,
            images: vec![i + 1, i],
        }
    }

    /// From one-line notation on a window starting at `lo`.
    pub fn from_window(lo: i32, images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let idx = v - lo;
            if idx < 0 || idx as usize >= n || seen[idx as usize] {
                return Err(Error::Domain(format!(
                    "not a bijection of the window: {images:?}"
                )));
            }
            seen[idx as usize] = true;
        }
        let mut p = Permutation {
            window_lo: lo,
            images,
        };
        p.canonicalize();
        Ok(p)
    }

    /// From one-line notation on `[1, n]`, e.g. `[2,1,5,4,3]`.
    pub fn from_one_line(images: &[i32]) -> Result<Self> {
        Permutation::from_window(1, images.to_vec())
    }

    /// Parse one-line notation given as digits, e.g. `21543`.
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let digits: Option<Vec<i32>> = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as i32))
            .collect();
        match digits {
            Some(v) if !v.is_empty() => Permutation::from_one_line(&v),
            _ => Err(Error::Parse(format!("bad one-line notation {s:?}"))),
        }
    }

    fn canonicalize(&mut self) {
        while self.images.first().is_some_and(|&v| v == self.window_lo) {
            self.images.remove(0);
            self.window_lo += 1;
        }
        while self
            .images
            .last()
            .is_some_and(|&v| v == self.window_lo + self.images.len() as i32 - 1)
        {
            self.images.pop();
        }
        if self.images.is_empty() {
            self.window_lo = 1;
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: i32) -> i32 {
        let idx = i - self.window_lo;
        if idx >= 0 && (idx as usize) < self.images.len() {
            self.images[idx as usize]
        } else {
            i
        }
    }

    pub fn window(&self) -> (i32, i32) {
        (
            self.window_lo,
            self.window_lo + self.images.len() as i32 - 1,
        )
    }

    /// Whether all non-fixed points are positive.
    pub fn supported_on_positives(&self) -> bool {
        self.images.is_empty() || self.window_lo >= 1
    }

    /// Largest index moved; 0 for the identity.
    pub fn max_moved(&self) -> i32 {
        if self.images.is_empty() {
            0
        } else {
            self.window_lo + self.images.len() as i32 - 1
        }
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let lo = self.window_lo.min(other.window_lo);
        let hi = (self.window_lo + self.images.len() as i32)
            .max(other.window_lo + other.images.len() as i32)
            - 1;
        let images: Vec<i32> = (lo..=hi).map(|x| self.apply(other.apply(x))).collect();
        let mut p = Permutation {
            window_lo: lo,
            images,
        };
        p.canonicalize();
        p
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - self.window_lo) as usize] = self.window_lo + i as i32;
        }
        let mut p = Permutation {
            window_lo: self.window_lo,
            images,
        };
        p.canonicalize();
        p
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descents: `i` with `w(i) > w(i+1)`; always inside the window.
    pub fn descents(&self) -> Vec<i32> {
        let (lo, hi) = if self.images.is_empty() {
            return Vec::new();
        } else {
            self.window()
        };
        (lo..hi)
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    pub fn max_descent(&self) -> Option<i32> {
        self.descents().into_iter().max()
    }

    /// Multiply by `s_i` on the right.
    pub fn times_s(&self, i: i32) -> Permutation {
        self.compose(&Permutation::s(i))
    }

    /// One canonical reduced word (letters are window positions).
    pub fn reduced_word(&self) -> Vec<i32> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.descents().first() {
            word.push(i);
            w = w.times_s(i);
        }
        word.reverse();
        debug_assert_eq!(&from_word(&word), self);
        word
    }

    /// All reduced words, by descent recursion.
    pub fn reduced_words(&self) -> Result<Vec<Vec<i32>>> {
        self.reduced_words_capped(DEFAULT_LENGTH_CAP)
    }

    pub fn reduced_words_capped(&self, cap: usize) -> Result<Vec<Vec<i32>>> {
        if self.length() > cap {
            return Err(Error::EnumerationTooLarge(format!(
                "length {} exceeds cap {}",
                self.length(),
                cap
            )));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(w: &Permutation, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
            let descents = w.descents();
            if descents.is_empty() {
                let mut word = prefix.clone();
                word.reverse();
                out.push(word);
                return;
            }
            for i in descents {
                prefix.push(i);
                rec(&w.times_s(i), prefix, out);
                prefix.pop();
            }
        }
        rec(self, &mut prefix, &mut out);
        Ok(out)
    }

    /// Reduced words as unprimed [`PrimedWord`]s.
    pub fn reduced_words_as_words(&self) -> Result<Vec<PrimedWord>> {
        Ok(self
            .reduced_words()?
            .iter()
            .map(|w| PrimedWord::from_ints(w))
            .collect())
    }

    /// The Lehmer code `c_i(w) = #{ j > i : w(i) > w(j) }` on positive support.
    pub fn lehmer_code(&self) -> WeakComposition {
        let hi = self.max_moved().max(0);
        let mut parts = Vec::new();
        for i in 1..=hi {
            let wi = self.apply(i);
            let cnt = (i + 1..=hi + 1).filter(|&j| wi > self.apply(j)).count() as u32;
            parts.push(cnt);
        }
        WeakComposition::new(parts)
    }

    /// The Rothe diagram restricted to the positive quadrant.
    pub fn rothe_diagram(&self) -> Vec<(i32, i32)> {
        let hi = self.max_moved().max(0);
        let mut cells = Vec::new();
        for i in 1..=hi {
            for j in 1..=hi {
                if self.apply(i) > j && self.inverse().apply(j) > i {
                    cells.push((i, j));
                }
            }
        }
        cells
    }

    /// 2143-avoidance.
    pub fn is_vexillary(&self) -> bool {
        if self.images.len() < 4 {
            return true;
        }
        let v = &self.images;
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                if v[j] >= v[i] {
                    continue;
                }
                for k in j + 1..n {
                    if v[k] <= v[i] {
                        continue;
                    }
                    for l in k + 1..n {
                        if v[i] < v[l] && v[l] < v[k] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let (lo, hi) = self.window();
        if lo == 1 && hi <= 9 {
            for i in lo..=hi {
                write!(f, "{}", self.apply(i))?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = (lo..=hi).map(|i| self.apply(i).to_string()).collect();
            write!(f, "[{}@{}]", strs.join(","), lo)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Evaluate a word of simple-transposition letters as a product
/// `s_{i_1} s_{i_2} ... s_{i_l}`.
pub fn from_word(word: &[i32]) -> Permutation {
    let mut p = Permutation::identity();
    for &i in word {
        p = p.times_s(i);
    }
    p
}

/// The Demazure product `v o w`, absorbing a reduced word of `w` from the left.
pub fn demazure_product(v: &Permutation, w: &Permutation) -> Permutation {
    let mut u = v.clone();
    for &i in &w.reduced_word() {
        if u.apply(i) < u.apply(i + 1) {
            u = u.times_s(i);
        }
    }
    u
}

/// Demazure product of a letter sequence.
pub fn demazure_product_word(word: &[i32]) -> Permutation {
    let mut u = Permutation::identity();
    for &i in word {
        if u.apply(i) < u.apply(i + 1) {
            u = u.times_s(i);
        }
    }
    u
}

/// The `o`-action of `s_i` on weak compositions: identity when
/// `alpha_i <= alpha_{i+1}`, otherwise the swap.
pub fn circ_s(i: usize, alpha: &WeakComposition) -> WeakComposition {
    if alpha.part(i) <= alpha.part(i + 1) {
        alpha.clone()
    } else {
        alpha.swapped(i)
    }
}

/// The `o`-action of `w`, evaluated along any reduced word.
pub fn circ_action(w: &Permutation, alpha: &WeakComposition) -> WeakComposition {
    let word = w.reduced_word();
    let mut beta = alpha.clone();
    for &i in word.iter().rev() {
        assert!(i >= 1, "circ action needs letters in S_infinity");
        beta = circ_s(i as usize, &beta);
    }
    beta
}

/// The minimal-length permutation with `alpha = u o lambda(alpha)`, together
/// with a reduced word for it.
pub fn u_of_alpha(alpha: &WeakComposition) -> (Permutation, Vec<i32>) {
    let mut beta = alpha.clone();
    let mut word = Vec::new();
    'outer: loop {
        let len = beta.length();
        for i in 1..len {
            if beta.part(i) < beta.part(i + 1) {
                word.push(i as i32);
                beta = beta.swapped(i);
                continue 'outer;
            }
        }
        break;
    }
    let u = from_word(&word);
    debug_assert_eq!(&circ_action(&u, &beta.clone()), alpha);
    (u, word)
}

/// Image of `u(alpha)` under the monoid homomorphism `(S_inf, o) -> (S_n, o)`
/// deleting the letters outside `[n-1]`.
pub fn u_n(alpha: &WeakComposition, n: usize) -> Permutation {
    assert!(n >= 1);
    let (_, word) = u_of_alpha(alpha);
    let kept: Vec<i32> = word.into_iter().filter(|&i| (i as usize) < n).collect();
    demazure_product_word(&kept)
}

/// The flag transport permutation: the image in `(S_n, o)` of the Demazure
/// product of the staircase blocks `s_{phi_i - 1} ... s_{i+1} s_i` for
/// `i = 1..n`, keeping only letters in `[n-1]`.
pub fn delta_n(phi: &Flag, n: usize) -> Permutation {
    assert!(n >= 1);
    let mut word: Vec<i32> = Vec::new();
    for i in 1..=n {
        let b = phi.bound(i).min(n);
        let mut j = b as i32 - 1;
        while j >= i as i32 {
            word.push(j);
            j -= 1;
        }
    }
    demazure_product_word(&word)
}

/// The dominant permutation of shape `lambda`: the unique `w` with Rothe
/// diagram `D_lambda`; its Lehmer code is `lambda`.
pub fn dominant_of_shape_perm(lambda: &Partition) -> Permutation {
    let ell = lambda.length();
    let mut used: Vec<bool> = Vec::new();
    let mut images = Vec::new();
    let pick = |rank: usize, used: &mut Vec<bool>| -> i32 {
        let mut seen = 0;
        let mut v = 0;
        loop {
            if used.len() <= v {
                used.resize(v + 1, false);
            }
            if !used[v] {
                if seen == rank {
                    used[v] = true;
                    return v as i32 + 1;
                }
                seen += 1;
            }
            v += 1;
        }
    };
    for i in 1..=ell {
        images.push(pick(lambda.part(i) as usize, &mut used));
    }
    // Close the window with the remaining values in increasing order.
    let max_needed = images.iter().copied().max().unwrap_or(0).max(ell as i32);
    for _ in ell + 1..=max_needed as usize {
        images.push(pick(0, &mut used));
    }
    let w = Permutation::from_window(1, images).expect("dominant one-line is a bijection");
    debug_assert_eq!(w.lehmer_code(), *lambda.as_composition());
    w
}
