//! Crystal structures on decreasing factorizations.
//!
//! Vertices are tuples of `n` strictly decreasing primed words. The raising
//! and lowering operators for the index `i` in `[n-1]` use the pairing rule;
//! the barred index `b1` has a symplectic flavor (on unprimed fpf-involution
//! factorizations) and an orthogonal flavor (on primed involution
//! factorizations); `p1` toggles the prime on the leading letter of the first
//! factor. All remaining indices are sigma-conjugates of these and are
//! evaluated through a memoizing [`OpEngine`] so whole graphs can be built
//! and exported.

use crate::inv::{marked_inversions, FpfInvolution, Involution};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::shapes::{is_bounded, Flag, WeakComposition};
use crate::words::{swap_primes, Letter, PrimedWord};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CrystalKind {
    Gl,
    Q,
    QPlus,
}

impl CrystalKind {
    pub fn label(self) -> &'static str {
        match self {
            CrystalKind::Gl => "gl",
            CrystalKind::Q => "q",
            CrystalKind::QPlus => "q+",
        }
    }

    pub fn parse(s: &str) -> Result<CrystalKind> {
        match s {
            "gl" => Ok(CrystalKind::Gl),
            "q" | "sp" => Ok(CrystalKind::Q),
            "q+" | "qplus" | "o" => Ok(CrystalKind::QPlus),
            _ => Err(Error::Parse(format!("unknown crystal kind {s:?}"))),
        }
    }
}

/// An operator index: `i`, barred `i`, underlined `i`, or primed `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpIndex {
    Gl(u8),
    Bar(u8),
    Under(u8),
    Prime(u8),
}

impl OpIndex {
    pub fn label(self) -> String {
        match self {
            OpIndex::Gl(i) => format!("{i}"),
            OpIndex::Bar(i) => format!("b{i}"),
            OpIndex::Under(i) => format!("u{i}"),
            OpIndex::Prime(i) => format!("p{i}"),
        }
    }

    pub fn parse(s: &str) -> Result<OpIndex> {
        let (head, tail) = s.split_at(if s.starts_with(|c: char| c.is_ascii_digit()) {
            0
        } else {
            1
        });
        let i: u8 = tail
            .parse()
            .map_err(|_| Error::Parse(format!("bad index {s:?}")))?;
        match head {
            "" => Ok(OpIndex::Gl(i)),
            "b" => Ok(OpIndex::Bar(i)),
            "u" => Ok(OpIndex::Under(i)),
            "p" => Ok(OpIndex::Prime(i)),
            _ => Err(Error::Parse(format!("bad index {s:?}"))),
        }
    }
}

impl fmt::Display for OpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Debug for OpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All operator indices valid for a crystal kind at rank `n`, in the canonical
/// order used by exports and canonical forms.
pub fn valid_indices(kind: CrystalKind, n: usize) -> Vec<OpIndex> {
    let mut out: Vec<OpIndex> = (1..n as u8).map(OpIndex::Gl).collect();
    if kind != CrystalKind::Gl {
        out.extend((1..n as u8).map(OpIndex::Bar));
        out.extend((1..n as u8).map(OpIndex::Under));
    }
    if kind == CrystalKind::QPlus {
        out.extend((1..=n as u8).map(OpIndex::Prime));
    }
    out
}

/// The indices drawn by default in figures: `[n-1]`, `b1`, and `p1`.
pub fn default_draw_indices(kind: CrystalKind, n: usize) -> Vec<OpIndex> {
    let mut out: Vec<OpIndex> = (1..n as u8).map(OpIndex::Gl).collect();
    if kind != CrystalKind::Gl {
        out.push(OpIndex::Bar(1));
    }
    if kind == CrystalKind::QPlus {
        out.push(OpIndex::Prime(1));
    }
    out
}

/// A tuple of `n` strictly decreasing primed words; the crystal vertex type.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    factors: Vec<PrimedWord>,
}

impl Factorization {
    pub fn new(factors: Vec<PrimedWord>) -> Result<Self> {
        for f in &factors {
            if !f.is_strictly_decreasing() {
                return Err(Error::InvalidWord(format!(
                    "factor {f} is not strictly decreasing"
                )));
            }
        }
        Ok(Factorization { factors })
    }

    pub fn empty(n: usize) -> Self {
        Factorization {
            factors: vec![PrimedWord::empty(); n],
        }
    }

    pub fn factors(&self) -> &[PrimedWord] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &PrimedWord {
        &self.factors[i]
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// The weight `(len(a^1), ..., len(a^n))`.
    pub fn weight(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.len() as u32).collect()
    }

    pub fn weight_composition(&self) -> WeakComposition {
        WeakComposition::new(self.weight())
    }

    /// Concatenation of the factors.
    pub fn concat(&self) -> PrimedWord {
        let mut letters = Vec::new();
        for f in &self.factors {
            letters.extend_from_slice(f.letters());
        }
        PrimedWord::new(letters)
    }

    pub fn unprime(&self) -> Factorization {
        Factorization {
            factors: self.factors.iter().map(|f| f.unprime()).collect(),
        }
    }

    pub fn is_bounded(&self, phi: &Flag) -> bool {
        is_bounded(&self.factors, phi)
    }

    /// Parse from a label like `31/43/·`.
    pub fn parse(s: &str) -> Result<Self> {
        let factors: Result<Vec<PrimedWord>> = s
            .split('/')
            .map(|p| PrimedWord::parse_compact(p.trim()))
            .collect();
        Factorization::new(factors?)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.factors {
            if !first {
                write!(f, "/")?;
            }
            if w.is_empty() {
                write!(f, "·")?;
            } else {
                for l in w.letters() {
                    if l.is_primed() {
                        write!(f, "{}'", l.ceil())?;
                    } else {
                        write!(f, "{}", l.ceil())?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The pairing of two strictly decreasing primed words: iterate the right
/// word from its smallest letter, matching each to the largest unpaired left
/// letter whose ceiling is strictly smaller. Returns index pairs.
pub fn pair_indices(left: &[Letter], right: &[Letter]) -> Vec<(usize, usize)> {
    let mut paired = vec![false; left.len()];
    let mut pairs = Vec::new();
    for q in (0..right.len()).rev() {
        let cq = right[q].ceil();
        for (p, letter) in left.iter().enumerate() {
            if !paired[p] && letter.ceil() < cq {
                paired[p] = true;
                pairs.push((p, q));
                break;
            }
        }
    }
    pairs
}

/// The pairing as letter pairs, matching the displayed convention.
pub fn pair_letters(left: &PrimedWord, right: &PrimedWord) -> Vec<(Letter, Letter)> {
    let mut out: Vec<(Letter, Letter)> = pair_indices(left.letters(), right.letters())
        .into_iter()
        .map(|(p, q)| (left.letters()[p], right.letters()[q]))
        .collect();
    out.sort();
    out
}

fn insert_decreasing(word: &mut Vec<Letter>, x: Letter) {
    let pos = word.partition_point(|&l| l > x);
    debug_assert!(word.get(pos).is_none_or(|&l| l < x));
    word.insert(pos, x);
}

/// The lowering operator `f_i` of the pairing rule, acting on factors `i` and
/// `i+1` (1-indexed).
pub fn gl_f(i: usize, a: &Factorization) -> Option<Factorization> {
    assert!(1 <= i && i < a.n());
    let mut left: Vec<Letter> = a.factors[i - 1].letters().to_vec();
    let mut right: Vec<Letter> = a.factors[i].letters().to_vec();
    let pairs = pair_indices(&left, &right);
    let mut first_of_pair = vec![false; left.len()];
    for &(p, _) in &pairs {
        first_of_pair[p] = true;
    }
    // smallest unpaired letter of the left word: the last unpaired index
    let p_star = (0..left.len()).rev().find(|&p| !first_of_pair[p])?;
    let y = left[p_star];
    let right_ceils: BTreeSet<i32> = right.iter().map(|l| l.ceil()).collect();
    let mut q_shift = 0;
    while right_ceils.contains(&(y.ceil() - q_shift)) {
        q_shift += 1;
    }
    // swap primes on pairs (b, c) with ceil(y) > ceil(b) >= ceil(y) - q
    for &(p, q) in &pairs {
        let cb = left[p].ceil();
        if y.ceil() > cb && cb >= y.ceil() - q_shift {
            let (nb, nc) = swap_primes(left[p], right[q]);
            left[p] = nb;
            right[q] = nc;
        }
    }
    left.remove(p_star);
    insert_decreasing(&mut right, Letter::from_doubled(y.doubled() - 2 * q_shift));
    let mut factors = a.factors.clone();
    factors[i - 1] = PrimedWord::new(left);
    factors[i] = PrimedWord::new(right);
    debug_assert!(factors[i - 1].is_strictly_decreasing() && factors[i].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// The raising operator `e_i` of the pairing rule.
pub fn gl_e(i: usize, a: &Factorization) -> Option<Factorization> {
    assert!(1 <= i && i < a.n());
    let mut left: Vec<Letter> = a.factors[i - 1].letters().to_vec();
    let mut right: Vec<Letter> = a.factors[i].letters().to_vec();
    let pairs = pair_indices(&left, &right);
    let mut second_of_pair = vec![false; right.len()];
    for &(_, q) in &pairs {
        second_of_pair[q] = true;
    }
    // largest unpaired letter of the right word: the first unpaired index
    let q_star = (0..right.len()).find(|&q| !second_of_pair[q])?;
    let x = right[q_star];
    let left_ceils: BTreeSet<i32> = left.iter().map(|l| l.ceil()).collect();
    let mut q_shift = 0;
    while left_ceils.contains(&(x.ceil() + q_shift)) {
        q_shift += 1;
    }
    // swap primes on pairs (b, c) with ceil(x) + q >= ceil(c) > ceil(x)
    for &(p, q) in &pairs {
        let cc = right[q].ceil();
        if x.ceil() + q_shift >= cc && cc > x.ceil() {
            let (nb, nc) = swap_primes(left[p], right[q]);
            left[p] = nb;
            right[q] = nc;
        }
    }
    right.remove(q_star);
    insert_decreasing(&mut left, Letter::from_doubled(x.doubled() + 2 * q_shift));
    let mut factors = a.factors.clone();
    factors[i - 1] = PrimedWord::new(left);
    factors[i] = PrimedWord::new(right);
    debug_assert!(factors[i - 1].is_strictly_decreasing() && factors[i].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// The symplectic `f_b1` on unprimed fpf-involution factorizations.
pub fn sp_fbar1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let right = a.factors[1].letters();
    if left.is_empty() {
        return None;
    }
    let x = left[0];
    if let Some(&m) = right.first() {
        if x <= m {
            return None;
        }
    }
    let mut lf: Vec<Letter> = left.to_vec();
    let mut rf: Vec<Letter> = right.to_vec();
    let below = Letter::unprimed(x.ceil() - 1);
    if let Some(pos) = lf.iter().position(|&l| l == below) {
        // remove x-1, add x+1 to the start of the second factor
        lf.remove(pos);
        rf.insert(0, Letter::unprimed(x.ceil() + 1));
    } else {
        lf.remove(0);
        rf.insert(0, x);
    }
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    factors[1] = PrimedWord::new(rf);
    debug_assert!(factors[1].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// The symplectic `e_b1`.
pub fn sp_ebar1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let right = a.factors[1].letters();
    if right.is_empty() {
        return None;
    }
    let y = right[0];
    if let Some(&m) = left.first() {
        if y <= m {
            return None;
        }
    }
    let mut lf: Vec<Letter> = left.to_vec();
    let mut rf: Vec<Letter> = right.to_vec();
    rf.remove(0);
    if y.ceil().rem_euclid(2) == 0 {
        lf.insert(0, y);
    } else {
        // an odd maximum forces a nonempty first factor
        assert!(
            !lf.is_empty(),
            "symplectic e_b1 on an invalid factorization"
        );
        lf.insert(1, Letter::unprimed(y.ceil() - 2));
    }
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    factors[1] = PrimedWord::new(rf);
    debug_assert!(factors[0].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// The orthogonal `f_b1` on primed involution factorizations: move the top
/// letter of the first factor to the front of the second, then swap the
/// primes on the two new leading letters.
pub fn o_fbar1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let right = a.factors[1].letters();
    if left.is_empty() {
        return None;
    }
    if let Some(&m) = right.first() {
        if left[0].ceil() <= m.ceil() {
            return None;
        }
    }
    let mut lf: Vec<Letter> = left.to_vec();
    let mut rf: Vec<Letter> = right.to_vec();
    let x = lf.remove(0);
    rf.insert(0, x);
    if !lf.is_empty() {
        let (nl, nr) = swap_primes(lf[0], rf[0]);
        lf[0] = nl;
        rf[0] = nr;
    }
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    factors[1] = PrimedWord::new(rf);
    debug_assert!(factors[1].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// The orthogonal `e_b1`.
pub fn o_ebar1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let right = a.factors[1].letters();
    if right.is_empty() {
        return None;
    }
    if let Some(&m) = left.first() {
        if right[0].ceil() <= m.ceil() {
            return None;
        }
    }
    let was_empty = left.is_empty();
    let mut lf: Vec<Letter> = left.to_vec();
    let mut rf: Vec<Letter> = right.to_vec();
    let y = rf.remove(0);
    lf.insert(0, y);
    if !was_empty {
        let (n0, n1) = swap_primes(lf[0], lf[1]);
        lf[0] = n0;
        lf[1] = n1;
    }
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    factors[1] = PrimedWord::new(rf);
    debug_assert!(factors[0].is_strictly_decreasing());
    Some(Factorization { factors })
}

/// `f_p1`: add a prime to the leading letter of the first factor.
pub fn o_fprime1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let x = *left.first()?;
    if x.is_primed() {
        return None;
    }
    let mut lf = left.to_vec();
    lf[0] = x.toggle_prime();
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    Some(Factorization { factors })
}

/// `e_p1`: remove the prime on the leading letter of the first factor.
pub fn o_eprime1(a: &Factorization) -> Option<Factorization> {
    let left = a.factors[0].letters();
    let x = *left.first()?;
    if !x.is_primed() {
        return None;
    }
    let mut lf = left.to_vec();
    lf[0] = x.toggle_prime();
    let mut factors = a.factors.clone();
    factors[0] = PrimedWord::new(lf);
    Some(Factorization { factors })
}

/// A memoizing evaluator for all crystal operators of one kind and rank.
///
/// Every operator is a partial map on factorizations; the derived indices
/// (barred above 1, underlined, primed above 1) are sigma-conjugates whose
/// evaluation walks whole `i`-strings, so results are interned and cached.
/// The ambient vertex set is implicit: operators stay inside the relevant
/// word set by construction.
pub struct OpEngine {
    pub kind: CrystalKind,
    pub n: usize,
    verts: Vec<Factorization>,
    ids: HashMap<Factorization, u32>,
    f_cache: Vec<HashMap<u32, Option<u32>>>,
    e_cache: Vec<HashMap<u32, Option<u32>>>,
    sigma_cache: Vec<HashMap<u32, u32>>,
    w0_word: Vec<u8>,
}

impl OpEngine {
    pub fn new(kind: CrystalKind, n: usize) -> Self {
        assert!(n >= 1);
        if kind != CrystalKind::Gl {
            assert!(n >= 2, "queer crystals need n >= 2");
        }
        let slots = 4 * n + 4;
        let mut w0_word = Vec::new();
        for k in 1..n as u8 {
            for j in (1..=k).rev() {
                w0_word.push(j);
            }
        }
        OpEngine {
            kind,
            n,
            verts: Vec::new(),
            ids: HashMap::new(),
            f_cache: vec![HashMap::new(); slots],
            e_cache: vec![HashMap::new(); slots],
            sigma_cache: vec![HashMap::new(); n + 1],
            w0_word,
        }
    }

    pub fn intern(&mut self, a: Factorization) -> u32 {
        assert_eq!(a.n(), self.n, "factorization rank mismatch");
        if let Some(&id) = self.ids.get(&a) {
            return id;
        }
        let id = self.verts.len() as u32;
        self.verts.push(a.clone());
        self.ids.insert(a, id);
        id
    }

    pub fn get(&self, id: u32) -> &Factorization {
        &self.verts[id as usize]
    }

    fn slot(&self, idx: OpIndex) -> usize {
        let n = self.n;
        match idx {
            OpIndex::Gl(i) => i as usize - 1,
            OpIndex::Bar(i) => n + i as usize - 1,
            OpIndex::Under(i) => 2 * n + i as usize - 1,
            OpIndex::Prime(i) => 3 * n + i as usize - 1,
        }
    }

    fn check_index(&self, idx: OpIndex) {
        let ok = match idx {
            OpIndex::Gl(i) => i >= 1 && (i as usize) < self.n,
            OpIndex::Bar(i) | OpIndex::Under(i) => {
                self.kind != CrystalKind::Gl && i >= 1 && (i as usize) < self.n
            }
            OpIndex::Prime(i) => self.kind == CrystalKind::QPlus && i >= 1 && i as usize <= self.n,
        };
        assert!(
            ok,
            "index {idx} invalid for kind {:?} at n = {}",
            self.kind, self.n
        );
    }

    /// The lowering operator for any valid index.
    pub fn f(&mut self, idx: OpIndex, id: u32) -> Option<u32> {
        self.check_index(idx);
        let slot = self.slot(idx);
        if let Some(&r) = self.f_cache[slot].get(&id) {
            return r;
        }
        let r = self.compute_f(idx, id);
        self.f_cache[slot].insert(id, r);
        if let Some(t) = r {
            self.e_cache[slot].insert(t, Some(id));
        }
        r
    }

    /// The raising operator for any valid index.
    pub fn e(&mut self, idx: OpIndex, id: u32) -> Option<u32> {
        self.check_index(idx);
        let slot = self.slot(idx);
        if let Some(&r) = self.e_cache[slot].get(&id) {
            return r;
        }
        let r = self.compute_e(idx, id);
        self.e_cache[slot].insert(id, r);
        if let Some(t) = r {
            self.f_cache[slot].insert(t, Some(id));
        }
        r
    }

    fn compute_f(&mut self, idx: OpIndex, id: u32) -> Option<u32> {
        match idx {
            OpIndex::Gl(i) => {
                let r = gl_f(i as usize, self.get(id))?;
                Some(self.intern(r))
            }
            OpIndex::Bar(1) => {
                let r = match self.kind {
                    CrystalKind::Q => sp_fbar1(self.get(id))?,
                    CrystalKind::QPlus => o_fbar1(self.get(id))?,
                    CrystalKind::Gl => unreachable!(),
                };
                Some(self.intern(r))
            }
            OpIndex::Bar(i) => {
                // f_bi = sigma_{i-1} sigma_i f_b(i-1) sigma_i sigma_{i-1}
                let v = self.sigma(i - 1, id);
                let v = self.sigma(i, v);
                let v = self.f(OpIndex::Bar(i - 1), v)?;
                let v = self.sigma(i, v);
                Some(self.sigma(i - 1, v))
            }
            OpIndex::Under(i) => {
                // f_ui = sigma_w0 e_b(n-i) sigma_w0
                let v = self.sigma_w0(id);
                let v = self.e(OpIndex::Bar(self.n as u8 - i), v)?;
                Some(self.sigma_w0(v))
            }
            OpIndex::Prime(1) => {
                let r = o_fprime1(self.get(id))?;
                Some(self.intern(r))
            }
            OpIndex::Prime(i) => {
                // f_pi = sigma_{i-1} ... sigma_1 f_p1 sigma_1 ... sigma_{i-1}
                let mut v = id;
                for j in (1..i).rev() {
                    v = self.sigma(j, v);
                }
                let mut v = self.f(OpIndex::Prime(1), v)?;
                for j in 1..i {
                    v = self.sigma(j, v);
                }
                Some(v)
            }
        }
    }

    fn compute_e(&mut self, idx: OpIndex, id: u32) -> Option<u32> {
        match idx {
            OpIndex::Gl(i) => {
                let r = gl_e(i as usize, self.get(id))?;
                Some(self.intern(r))
            }
            OpIndex::Bar(1) => {
                let r = match self.kind {
                    CrystalKind::Q => sp_ebar1(self.get(id))?,
                    CrystalKind::QPlus => o_ebar1(self.get(id))?,
                    CrystalKind::Gl => unreachable!(),
                };
                Some(self.intern(r))
            }
            OpIndex::Bar(i) => {
                let v = self.sigma(i - 1, id);
                let v = self.sigma(i, v);
                let v = self.e(OpIndex::Bar(i - 1), v)?;
                let v = self.sigma(i, v);
                Some(self.sigma(i - 1, v))
            }
            OpIndex::Under(i) => {
                let v = self.sigma_w0(id);
                let v = self.f(OpIndex::Bar(self.n as u8 - i), v)?;
                Some(self.sigma_w0(v))
            }
            OpIndex::Prime(1) => {
                let r = o_eprime1(self.get(id))?;
                Some(self.intern(r))
            }
            OpIndex::Prime(i) => {
                let mut v = id;
                for j in (1..i).rev() {
                    v = self.sigma(j, v);
                }
                let mut v = self.e(OpIndex::Prime(1), v)?;
                for j in 1..i {
                    v = self.sigma(j, v);
                }
                Some(v)
            }
        }
    }

    /// The string-reversing involution for the index `i` in `[n-1]`.
    pub fn sigma(&mut self, i: u8, id: u32) -> u32 {
        assert!(i >= 1 && (i as usize) < self.n);
        if let Some(&r) = self.sigma_cache[i as usize].get(&id) {
            return r;
        }
        let wt = self.get(id).weight();
        let k = wt[i as usize - 1] as i64 - wt[i as usize] as i64;
        let mut v = id;
        if k >= 0 {
            for _ in 0..k {
                v = self
                    .f(OpIndex::Gl(i), v)
                    .unwrap_or_else(|| panic!("sigma_{i} string broke (context error)"));
            }
        } else {
            for _ in 0..-k {
                v = self
                    .e(OpIndex::Gl(i), v)
                    .unwrap_or_else(|| panic!("sigma_{i} string broke (context error)"));
            }
        }
        self.sigma_cache[i as usize].insert(id, v);
        self.sigma_cache[i as usize].insert(v, id);
        v
    }

    /// The longest-element action `sigma_{w_0}`.
    pub fn sigma_w0(&mut self, id: u32) -> u32 {
        let word = self.w0_word.clone();
        let mut v = id;
        for &i in word.iter().rev() {
            v = self.sigma(i, v);
        }
        v
    }
}

/// Generators for reduced factorization crystals.
#[derive(Clone, Debug)]
pub enum Generator {
    /// `RF+_n(w, A)`: primed factorizations of reduced words of `w` with
    /// marked inversion set `A`.
    Word {
        w: Permutation,
        marks: Vec<(i32, i32)>,
    },
    /// `RF^Sp_n(z)`: factorizations of fpf-involution words.
    Fpf(FpfInvolution),
    /// `RF^O_n(z)`: primed factorizations of involution words.
    Inv(Involution),
}

impl Generator {
    pub fn kind(&self) -> CrystalKind {
        match self {
            Generator::Word { .. } => CrystalKind::Gl,
            Generator::Fpf(_) => CrystalKind::Q,
            Generator::Inv(_) => CrystalKind::QPlus,
        }
    }

    /// The full word set of the generator.
    pub fn words(&self) -> Result<Vec<PrimedWord>> {
        match self {
            Generator::Word { w, marks } => {
                let mut out = Vec::new();
                for word in w.reduced_words_as_words()? {
                    out.push(prime_to_marks(&word, marks)?);
                }
                Ok(out)
            }
            Generator::Fpf(z) => z.fpf_involution_words(),
            Generator::Inv(z) => z.involution_words(),
        }
    }
}

/// The unique priming of an unprimed reduced word realizing the requested
/// marked inversion set.
pub fn prime_to_marks(word: &PrimedWord, marks: &[(i32, i32)]) -> Result<PrimedWord> {
    let target: BTreeSet<(i32, i32)> = marks.iter().copied().collect();
    let ceils: Vec<i32> = word.letters().iter().map(|l| l.ceil()).collect();
    let l = ceils.len();
    let mut letters: Vec<Letter> = word.unprime().letters().to_vec();
    let mut seen = BTreeSet::new();
    for j in 0..l {
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
        if target.contains(&(a, b)) {
            letters[j] = letters[j].toggle_prime();
            seen.insert((a, b));
        }
    }
    if seen.len() != target.len() {
        return Err(Error::Domain(format!(
            "marks {marks:?} are not inversions of the word {word}"
        )));
    }
    Ok(PrimedWord::new(letters))
}

/// All ways to split a word into `n` consecutive, possibly empty, strictly
/// decreasing factors.
pub fn decreasing_splits(word: &PrimedWord, n: usize) -> Vec<Factorization> {
    bounded_splits_filtered(word, n, None)
}

/// As [`decreasing_splits`], keeping only factorizations bounded by the flag.
pub fn bounded_decreasing_splits(word: &PrimedWord, n: usize, phi: &Flag) -> Vec<Factorization> {
    bounded_splits_filtered(word, n, Some(phi))
}

fn bounded_splits_filtered(word: &PrimedWord, n: usize, phi: Option<&Flag>) -> Vec<Factorization> {
    fn rec(
        letters: &[Letter],
        pos: usize,
        slot: usize,
        n: usize,
        phi: Option<&Flag>,
        cur: &mut Vec<Vec<Letter>>,
        out: &mut Vec<Factorization>,
    ) {
        if pos == letters.len() {
            out.push(Factorization {
                factors: cur.iter().map(|v| PrimedWord::new(v.clone())).collect(),
            });
            return;
        }
        if slot >= n {
            return;
        }
        let x = letters[pos];
        // bound prune: the letter cannot go in this slot or any later one
        if let Some(phi) = phi {
            let m = x.ceil();
            if m < 1 || slot + 1 > phi.bound(m as usize) {
                return;
            }
        }
        // place x in the current slot if it stays strictly decreasing
        if cur[slot].last().is_none_or(|&l| l > x) {
            cur[slot].push(x);
            rec(letters, pos + 1, slot, n, phi, cur, out);
            cur[slot].pop();
        }
        // or close the current slot
        rec(letters, pos, slot + 1, n, phi, cur, out);
    }
    let mut out = Vec::new();
    let mut cur: Vec<Vec<Letter>> = vec![Vec::new(); n];
    rec(word.letters(), 0, 0, n, phi, &mut cur, &mut out);
    out
}

/// An explicit crystal graph: a vertex set together with the restriction of
/// every valid operator to it.
pub struct CrystalGraph {
    pub kind: CrystalKind,
    pub n: usize,
    pub vertices: Vec<Factorization>,
    index: HashMap<Factorization, u32>,
    /// `f_adj[v]` lists `(idx, target)` in canonical index order.
    pub f_adj: Vec<Vec<(OpIndex, u32)>>,
    pub e_adj: Vec<Vec<(OpIndex, u32)>>,
}

impl CrystalGraph {
    /// Build the graph on a vertex set. With `ambient = true` every operator
    /// image must stay inside the set (a closure violation is an error);
    /// otherwise edges leaving the set are dropped, realizing the restricted
    /// subcrystal structure.
    pub fn from_vertices(
        kind: CrystalKind,
        n: usize,
        mut verts: Vec<Factorization>,
        ambient: bool,
    ) -> Result<CrystalGraph> {
        verts.sort();
        verts.dedup();
        let mut engine = OpEngine::new(kind, n);
        let ids: Vec<u32> = verts.iter().map(|v| engine.intern(v.clone())).collect();
        let member: HashMap<u32, u32> = ids
            .iter()
            .enumerate()
            .map(|(k, &id)| (id, k as u32))
            .collect();
        let indices = valid_indices(kind, n);
        let mut f_adj: Vec<Vec<(OpIndex, u32)>> = vec![Vec::new(); verts.len()];
        let mut e_adj: Vec<Vec<(OpIndex, u32)>> = vec![Vec::new(); verts.len()];
        for (k, &id) in ids.iter().enumerate() {
            for &idx in &indices {
                if let Some(t) = engine.f(idx, id) {
                    match member.get(&t) {
                        Some(&tk) => {
                            f_adj[k].push((idx, tk));
                            e_adj[tk as usize].push((idx, k as u32));
                        }
                        None if ambient => {
                            return Err(Error::Context(format!(
                                "operator f_{idx} leaves the ambient vertex set at {}",
                                engine.get(id)
                            )));
                        }
                        None => {}
                    }
                }
                if ambient {
                    if let Some(t) = engine.e(idx, id) {
                        if !member.contains_key(&t) {
                            return Err(Error::Context(format!(
                                "operator e_{idx} leaves the ambient vertex set at {}",
                                engine.get(id)
                            )));
                        }
                    }
                }
            }
        }
        for adj in e_adj.iter_mut() {
            adj.sort();
        }
        let index = verts
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k as u32))
            .collect();
        Ok(CrystalGraph {
            kind,
            n,
            vertices: verts,
            index,
            f_adj,
            e_adj,
        })
    }

    /// The full crystal of decreasing factorizations of a generator's word
    /// set into at most `n` factors.
    pub fn reduced_factorizations(gen: &Generator, n: usize) -> Result<CrystalGraph> {
        let kind = gen.kind();
        let mut verts = Vec::new();
        for word in gen.words()? {
            verts.extend(decreasing_splits(&word, n));
        }
        if verts.is_empty() {
            // empty crystal: the code criterion rules out every factorization
            return Ok(CrystalGraph {
                kind,
                n,
                vertices: Vec::new(),
                index: HashMap::new(),
                f_adj: Vec::new(),
                e_adj: Vec::new(),
            });
        }
        CrystalGraph::from_vertices(kind, n, verts, true)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_id(&self, v: &Factorization) -> Option<u32> {
        self.index.get(v).copied()
    }

    pub fn weight(&self, k: u32) -> Vec<u32> {
        self.vertices[k as usize].weight()
    }

    pub fn f_edge(&self, k: u32, idx: OpIndex) -> Option<u32> {
        self.f_adj[k as usize]
            .iter()
            .find(|(i, _)| *i == idx)
            .map(|&(_, t)| t)
    }

    pub fn e_edge(&self, k: u32, idx: OpIndex) -> Option<u32> {
        self.e_adj[k as usize]
            .iter()
            .find(|(i, _)| *i == idx)
            .map(|&(_, t)| t)
    }

    /// Weakly connected components over all stored edges, as sorted vertex id
    /// lists ordered by minimal vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut parent: Vec<u32> = (0..self.len() as u32).collect();
        fn find(parent: &mut [u32], x: u32) -> u32 {
            let mut r = x;
            while parent[r as usize] != r {
                r = parent[r as usize];
            }
            let mut c = x;
            while parent[c as usize] != r {
                let next = parent[c as usize];
                parent[c as usize] = r;
                c = next;
            }
            r
        }
        for (k, adj) in self.f_adj.iter().enumerate() {
            for &(_, t) in adj {
                let a = find(&mut parent, k as u32);
                let b = find(&mut parent, t);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let mut groups: HashMap<u32, Vec<u32>> = HashMap::new();
        for k in 0..self.len() as u32 {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(k);
        }
        let mut out: Vec<Vec<u32>> = groups.into_values().collect();
        for g in out.iter_mut() {
            g.sort();
        }
        out.sort();
        out
    }

    /// The full subcrystal on a component, as its own graph.
    pub fn component_graph(&self, comp: &[u32]) -> CrystalGraph {
        let verts: Vec<Factorization> = comp
            .iter()
            .map(|&k| self.vertices[k as usize].clone())
            .collect();
        CrystalGraph::from_vertices(self.kind, self.n, verts, false)
            .expect("restricted build cannot fail")
    }

    /// The character: the weight generating polynomial.
    pub fn character(&self) -> Polynomial {
        let mut f = Polynomial::zero();
        for v in &self.vertices {
            f.add_term(v.weight_composition(), BigInt::from(1));
        }
        f
    }

    /// Vertices with no incoming f-edge.
    pub fn sources(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&k| self.e_adj[k as usize].is_empty())
            .collect()
    }

    /// Vertices with no outgoing f-edge.
    pub fn sinks(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&k| self.f_adj[k as usize].is_empty())
            .collect()
    }

    /// Canonical encoding of one component: deterministic BFS from each
    /// source in canonical index order, taking the lexicographically least
    /// encoding of weights and labeled edges.
    fn component_canonical(&self, comp: &[u32]) -> Vec<u32> {
        let indices = valid_indices(self.kind, self.n);
        let sources: Vec<u32> = comp
            .iter()
            .copied()
            .filter(|&k| self.e_adj[k as usize].is_empty())
            .collect();
        let roots = if sources.is_empty() {
            comp.to_vec()
        } else {
            sources
        };
        let mut best: Option<Vec<u32>> = None;
        for &root in &roots {
            let mut order: HashMap<u32, u32> = HashMap::new();
            let mut queue = std::collections::VecDeque::new();
            order.insert(root, 0);
            queue.push_back(root);
            let mut disc: Vec<u32> = vec![root];
            while let Some(v) = queue.pop_front() {
                for &idx in &indices {
                    for t in [self.f_edge(v, idx), self.e_edge(v, idx)]
                        .into_iter()
                        .flatten()
                    {
                        if let std::collections::hash_map::Entry::Vacant(e) = order.entry(t) {
                            e.insert(disc.len() as u32);
                            disc.push(t);
                            queue.push_back(t);
                        }
                    }
                }
            }
            debug_assert_eq!(disc.len(), comp.len(), "component not weakly connected");
            let mut enc: Vec<u32> = Vec::with_capacity(comp.len() * (self.n + 2 * indices.len()));
            for &v in &disc {
                enc.extend(self.weight(v));
                for &idx in &indices {
                    enc.push(self.f_edge(v, idx).map_or(0, |t| order[&t] + 1));
                    enc.push(self.e_edge(v, idx).map_or(0, |t| order[&t] + 1));
                }
            }
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
        best.unwrap_or_default()
    }

    /// Canonical form: the sorted multiset of component encodings.
    pub fn canonical_form(&self) -> Vec<Vec<u32>> {
        let mut forms: Vec<Vec<u32>> = self
            .components()
            .iter()
            .map(|c| self.component_canonical(c))
            .collect();
        forms.sort();
        forms
    }

    /// Crystal isomorphism: equality of kind, rank, and canonical forms.
    pub fn is_isomorphic(&self, other: &CrystalGraph) -> bool {
        self.kind == other.kind
            && self.n == other.n
            && self.len() == other.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Graphviz DOT export. By default only the indices `[n-1]`, `b1`, `p1`
    /// are drawn; `all_edges` draws every stored index.
    pub fn to_dot(&self, all_edges: bool) -> String {
        let drawn: BTreeSet<OpIndex> = if all_edges {
            valid_indices(self.kind, self.n).into_iter().collect()
        } else {
            default_draw_indices(self.kind, self.n)
                .into_iter()
                .collect()
        };
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", k, v));
        }
        for (k, adj) in self.f_adj.iter().enumerate() {
            for &(idx, t) in adj {
                if drawn.contains(&idx) {
                    out.push_str(&format!(
                        "  v{} -> v{} [label=\"{}\"];\n",
                        k,
                        t,
                        idx.label()
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON export: `{kind, n, vertices, edges: [{src, dst, idx}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let mut edges = Vec::new();
        for (k, adj) in self.f_adj.iter().enumerate() {
            for &(idx, t) in adj {
                edges.push(serde_json::json!({
                    "src": k,
                    "dst": t,
                    "idx": idx.label(),
                }));
            }
        }
        serde_json::json!({
            "kind": self.kind.label(),
            "n": self.n,
            "vertices": vertices,
            "edges": edges,
        })
    }

    /// Check the crystal axioms on every vertex: weight steps for the `[n-1]`
    /// indices, the string identities for epsilon and phi, and the mutual
    /// inverse property of e and f.
    pub fn check_axioms(&self) -> Result<()> {
        let indices = valid_indices(self.kind, self.n);
        for k in 0..self.len() as u32 {
            for &idx in &indices {
                if let Some(t) = self.f_edge(k, idx) {
                    // axiom (5)
                    if self.e_edge(t, idx) != Some(k) {
                        return Err(Error::TheoremViolation(format!(
                            "axiom 5 fails at {} index {idx}",
                            self.vertices[k as usize]
                        )));
                    }
                    if let OpIndex::Gl(i) = idx {
                        // axiom (1) in lowering form
                        let mut wt = self.weight(k);
                        wt[i as usize - 1] -= 1;
                        wt[i as usize] += 1;
                        if wt != self.weight(t) {
                            return Err(Error::TheoremViolation(format!(
                                "axiom 1 fails at {} index {idx}",
                                self.vertices[k as usize]
                            )));
                        }
                    }
                    // axioms (3) and (4) along the string
                    let (eps, phi) = self.string_stats(k, idx);
                    let (eps_t, phi_t) = self.string_stats(t, idx);
                    if eps_t != eps + 1 || phi_t + 1 != phi {
                        return Err(Error::TheoremViolation(format!(
                            "axioms 3/4 fail at {} index {idx}",
                            self.vertices[k as usize]
                        )));
                    }
                }
                if let OpIndex::Gl(i) = idx {
                    // axiom (2)
                    let wt = self.weight(k);
                    let (eps, phi) = self.string_stats(k, idx);
                    if wt[i as usize - 1] as i64 - wt[i as usize] as i64 != phi - eps {
                        return Err(Error::TheoremViolation(format!(
                            "axiom 2 fails at {} index {idx}",
                            self.vertices[k as usize]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(epsilon_idx, phi_idx)` as string lengths inside this graph.
    pub fn string_stats(&self, k: u32, idx: OpIndex) -> (i64, i64) {
        let mut eps = 0;
        let mut v = k;
        while let Some(t) = self.e_edge(v, idx) {
            eps += 1;
            v = t;
        }
        let mut phi = 0;
        let mut v = k;
        while let Some(t) = self.f_edge(v, idx) {
            phi += 1;
            v = t;
        }
        (eps, phi)
    }
}

/// The marked inversion set of a factorization's concatenated word.
pub fn factorization_marks(a: &Factorization) -> Result<Vec<(i32, i32)>> {
    marked_inversions(&a.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(s: &str) -> Factorization {
        Factorization::parse(s).unwrap()
    }

    #[test]
    fn pairing_example() {
        let i = PrimedWord::parse("12' 11 10 9 6 4 3").unwrap();
        let j = PrimedWord::parse("12 8' 5 2' 1").unwrap();
        let pairs = pair_letters(&i, &j);
        let expected: Vec<(Letter, Letter)> = vec![
            (Letter::unprimed(4), Letter::unprimed(5)),
            (Letter::unprimed(6), Letter::primed(8)),
            (Letter::unprimed(11), Letter::unprimed(12)),
        ];
        assert_eq!(pairs, expected);
        assert!(pair_letters(&PrimedWord::empty(), &PrimedWord::empty()).is_empty());
    }

    #[test]
    fn gl_operator_examples() {
        // f1(97'651, 763') = (9651, 765'3')
        let a = fac("97'651/763'");
        assert_eq!(gl_f(1, &a), Some(fac("9651/765'3'")));
        // e1 of that returns the original
        assert_eq!(gl_e(1, &fac("9651/765'3'")), Some(a.clone()));
        // f1(976541, 76'52) = (965'41, 76542)
        assert_eq!(gl_f(1, &fac("976541/76'52")), Some(fac("965'41/76542")));
        // e1(97'651, 763') = 0 and f1(7'651, 9763') = 0
        assert_eq!(gl_e(1, &fac("97'651/763'")), None);
        assert_eq!(gl_f(1, &fac("7'651/9763'")), None);
    }

    #[test]
    fn sp_operator_examples() {
        assert_eq!(sp_fbar1(&fac("6421/53")), Some(fac("421/653")));
        assert_eq!(sp_fbar1(&fac("4321/32")), Some(fac("421/532")));
        assert_eq!(sp_ebar1(&fac("6421/53")), None);
        assert_eq!(sp_fbar1(&fac("421/532")), None);
        assert_eq!(sp_ebar1(&fac("421/653")), Some(fac("6421/53")));
        assert_eq!(sp_ebar1(&fac("421/532")), Some(fac("4321/32")));
    }

    #[test]
    fn o_operator_examples() {
        assert_eq!(o_fbar1(&fac("5'32/41")), Some(fac("3'2/541")));
        assert_eq!(o_fbar1(&fac("5'3'2/41")), Some(fac("3'2/5'41")));
        assert_eq!(o_ebar1(&fac("5'32/41")), None);
        assert_eq!(o_fbar1(&fac("3'2/5'41")), None);
        assert_eq!(o_ebar1(&fac("3'2/541")), Some(fac("5'32/41")));
        assert_eq!(o_ebar1(&fac("3'2/5'41")), Some(fac("5'3'2/41")));
        assert_eq!(o_eprime1(&fac("5'3'2/41")), Some(fac("53'2/41")));
        assert_eq!(o_fprime1(&fac("5'3'2/41")), None);
        assert_eq!(o_fprime1(&fac("53'2/41")), Some(fac("5'3'2/41")));
    }

    #[test]
    fn splits_count() {
        // R^Sp((1 4)(2 3)) = {21, 23}: 6 + 3 = 9 factorizations into <= 3 parts
        let z = FpfInvolution::parse("(1 4)(2 3)").unwrap();
        let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3).unwrap();
        assert_eq!(g.len(), 9);
        g.check_axioms().unwrap();
    }

    #[test]
    fn q3_figure_graph() {
        // the 9-vertex q3-crystal with all displayed labeled edges
        let z = FpfInvolution::parse("(1 4)(2 3)").unwrap();
        let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3).unwrap();
        let id = |s: &str| g.vertex_id(&fac(s)).unwrap();
        let edges: Vec<(&str, &str, &[OpIndex])> = vec![
            ("21/·/·", "2/3/·", &[OpIndex::Bar(1)]),
            ("21/·/·", "2/1/·", &[OpIndex::Gl(1), OpIndex::Under(1)]),
            (
                "2/3/·",
                "2/·/3",
                &[OpIndex::Gl(2), OpIndex::Bar(2), OpIndex::Under(2)],
            ),
            ("2/3/·", "·/21/·", &[OpIndex::Under(1)]),
            (
                "2/·/3",
                "·/2/3",
                &[OpIndex::Gl(1), OpIndex::Bar(1), OpIndex::Under(1)],
            ),
            ("2/1/·", "·/21/·", &[OpIndex::Gl(1), OpIndex::Bar(1)]),
            (
                "2/1/·",
                "2/·/1",
                &[OpIndex::Gl(2), OpIndex::Bar(2), OpIndex::Under(2)],
            ),
            ("·/21/·", "·/2/3", &[OpIndex::Bar(2)]),
            ("·/21/·", "·/2/1", &[OpIndex::Gl(2), OpIndex::Under(2)]),
            (
                "2/·/1",
                "·/2/1",
                &[OpIndex::Gl(1), OpIndex::Bar(1), OpIndex::Under(1)],
            ),
            ("·/2/1", "·/·/21", &[OpIndex::Gl(2), OpIndex::Bar(2)]),
            ("·/2/3", "·/·/21", &[OpIndex::Under(2)]),
        ];
        for (src, dst, idxs) in edges {
            for &idx in idxs {
                assert_eq!(
                    g.f_edge(id(src), idx),
                    Some(id(dst)),
                    "expected {src} -{idx}-> {dst}"
                );
            }
        }
        // and no f-edges beyond the displayed 24
        let total: usize = g.f_adj.iter().map(|a| a.len()).sum();
        assert_eq!(total, 24);
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn prime_marks_roundtrip() {
        let w = Permutation::parse_one_line("3412").unwrap();
        for word in w.reduced_words_as_words().unwrap() {
            let marks = vec![(2, 4), (2, 3)];
            let primed = prime_to_marks(&word, &marks).unwrap();
            let got = marked_inversions(&primed).unwrap();
            assert_eq!(got, vec![(2, 3), (2, 4)]);
        }
    }

    #[test]
    fn unprime_is_isomorphism() {
        // RF+_3(w, A) is isomorphic to RF_3(w) via unprime
        let w = Permutation::parse_one_line("21543").unwrap();
        let marks = vec![(1, 2), (3, 4), (3, 5)];
        let primed = CrystalGraph::reduced_factorizations(
            &Generator::Word {
                w: w.clone(),
                marks,
            },
            3,
        )
        .unwrap();
        let plain =
            CrystalGraph::reduced_factorizations(&Generator::Word { w, marks: vec![] }, 3).unwrap();
        assert_eq!(primed.len(), plain.len());
        assert!(primed.is_isomorphic(&plain));
        assert_eq!(primed.components().len(), 3);
        // unprime commutes with the operators
        for (k, adj) in primed.f_adj.iter().enumerate() {
            for &(idx, t) in adj {
                let a = primed.vertices[k].unprime();
                let b = primed.vertices[t as usize].unprime();
                let ka = plain.vertex_id(&a).unwrap();
                assert_eq!(plain.f_edge(ka, idx), plain.vertex_id(&b), "idx {idx}");
            }
        }
    }

    #[test]
    fn sigma_properties() {
        let w = Permutation::parse_one_line("21543").unwrap();
        let g = CrystalGraph::reduced_factorizations(
            &Generator::Word {
                w: w.clone(),
                marks: vec![],
            },
            3,
        )
        .unwrap();
        let mut engine = OpEngine::new(CrystalKind::Gl, 3);
        for v in &g.vertices {
            let id = engine.intern(v.clone());
            for i in 1..=2u8 {
                let s = engine.sigma(i, id);
                // involution, and wt(sigma_i a) = s_i wt(a)
                assert_eq!(engine.sigma(i, s), id);
                let mut wt = engine.get(id).weight();
                wt.swap(i as usize - 1, i as usize);
                assert_eq!(engine.get(s).weight(), wt);
            }
            // braid: sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
            let lhs = {
                let v = engine.sigma(1, id);
                let v = engine.sigma(2, v);
                engine.sigma(1, v)
            };
            let rhs = {
                let v = engine.sigma(2, id);
                let v = engine.sigma(1, v);
                engine.sigma(2, v)
            };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn canonical_form_reflexive() {
        let z = Involution::parse("(1 3)(2 4)").unwrap();
        let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z), 3).unwrap();
        assert!(g.is_isomorphic(&g));
        g.check_axioms().unwrap();
    }
}
