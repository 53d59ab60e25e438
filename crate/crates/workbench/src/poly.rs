//! Exact sparse polynomials in `x_1, x_2, ...` with integer coefficients, and
//! the divided-difference calculus on top of them: key, P-key, Q-key,
//! Schubert, and involution Schubert polynomials, plus expansion into the key
//! basis.

use crate::inv::{FpfInvolution, Involution};
use crate::perm::{u_of_alpha, Permutation};
use crate::shapes::{lambda_of, Partition, WeakComposition};
use crate::{Error, Result, DEFAULT_LENGTH_CAP};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A sparse polynomial: exponent vector -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<WeakComposition, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Polynomial::monomial(WeakComposition::empty(), BigInt::one())
    }

    pub fn monomial(exponent: WeakComposition, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Polynomial { terms }
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut parts = vec![0u32; i];
        parts[i - 1] = 1;
        Polynomial::monomial(WeakComposition::new(parts), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeakComposition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: &WeakComposition) -> BigInt {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponent: WeakComposition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Swap the variables `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            out.add_term(e.swapped(i), c.clone());
        }
        out
    }

    /// Evaluate at `x_1 = ... = 1` (the number of monomials with multiplicity).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Total degree of each term must be constant for graded uses; returns the
    /// maximum total degree.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.sum()).max().unwrap_or(0)
    }

    /// Coefficientwise comparison for polynomials with nonnegative terms.
    pub fn le_coefficientwise(&self, other: &Polynomial) -> bool {
        self.terms.iter().all(|(e, c)| c <= &other.coeff(e))
    }

    /// Drop all terms mentioning a variable beyond `x_n`.
    pub fn restrict_vars(&self, n: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.length() <= n)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`; the division is
    /// always exact, asserted at runtime.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        let mut g = self.clone() - self.swap_vars(i);
        let mut quotient = Polynomial::zero();
        // long division by (x_i - x_{i+1}), eliminating the term that is
        // maximal in (exponent of x_i, then lex) order at each step
        while let Some((e, c)) = g
            .terms
            .iter()
            .max_by(|(e1, _), (e2, _)| e1.part(i).cmp(&e2.part(i)).then_with(|| e1.cmp(e2)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let a = e.part(i);
            assert!(
                a > 0,
                "divided difference left a nonzero remainder (arithmetic bug)"
            );
            let mut q_exp: Vec<u32> = (1..=e.length()).map(|j| e.part(j)).collect();
            q_exp[i - 1] -= 1;
            let q_exp = WeakComposition::new(q_exp);
            quotient.add_term(q_exp.clone(), c.clone());
            // g -= c * x^q * (x_i - x_{i+1})
            g.add_term(e, -c.clone());
            let mut shifted: Vec<u32> = (1..=q_exp.length().max(i + 1))
                .map(|j| q_exp.part(j))
                .collect();
            shifted[i] += 1;
            g.add_term(WeakComposition::new(shifted), c);
        }
        quotient
    }

    /// The isobaric divided difference `pi_i f = d_i(x_i f)`.
    pub fn isobaric_dd(&self, i: usize) -> Polynomial {
        (Polynomial::var(i) * self.clone()).divided_difference(i)
    }

    /// Apply `pi_{i_1} ... pi_{i_l}` with the rightmost operator acting first.
    pub fn pi_word(&self, word: &[i32]) -> Polynomial {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = f.isobaric_dd(i as usize);
        }
        f
    }

    /// `pi_w` along any reduced word of `w`.
    pub fn pi_perm(&self, w: &Permutation) -> Polynomial {
        self.pi_word(&w.reduced_word())
    }

    /// Apply `d_{i_1} ... d_{i_l}` with the rightmost operator acting first.
    pub fn dd_word(&self, word: &[i32]) -> Polynomial {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = f.divided_difference(i as usize);
        }
        f
    }

    /// Human-readable rendering like `2*x^(2,1,1) + x^(1,2,1)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let body = if e.length() == 0 {
                c.to_string()
            } else if c.is_one() {
                format!("x^{e}")
            } else {
                format!("{c}*x^{e}")
            };
            parts.push(body);
        }
        parts.join(" + ")
    }

    /// JSON as a list of `{"exponent": [...], "coeff": n}` sorted by exponent.
    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "exponent": e.parts(),
                    "coeff": i64::try_from(c).expect("coefficient exceeds i64 in JSON export"),
                })
            })
            .collect();
        serde_json::Value::Array(list)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Polynomial> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON not a list".into()))?;
        let mut out = Polynomial::zero();
        for item in arr {
            let exp = item["exponent"]
                .as_array()
                .ok_or_else(|| Error::Parse("bad exponent".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::Parse("bad exponent".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            let coeff = item["coeff"]
                .as_i64()
                .ok_or_else(|| Error::Parse("bad coefficient".into()))?;
            out.add_term(WeakComposition::new(exp), BigInt::from(coeff));
        }
        Ok(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add under multiplication
    fn mul(self, rhs: Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let len = e1.length().max(e2.length());
                let parts: Vec<u32> = (1..=len).map(|j| e1.part(j) + e2.part(j)).collect();
                out.add_term(WeakComposition::new(parts), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `x^alpha`.
pub fn x_to(alpha: &WeakComposition) -> Polynomial {
    Polynomial::monomial(alpha.clone(), BigInt::one())
}

/// The key polynomial `kappa_alpha = pi_{u(alpha)} x^{lambda(alpha)}`.
pub fn key_polynomial(alpha: &WeakComposition) -> Polynomial {
    let (_, word) = u_of_alpha(alpha);
    x_to(lambda_of(alpha).as_composition()).pi_word(&word)
}

/// Product of `(x_i + x_j)` over the cells of `D_lambda` strictly below the
/// diagonal.
fn below_diagonal_product(lambda: &Partition) -> Polynomial {
    let mut f = Polynomial::one();
    for (i, j) in lambda.cells() {
        if i > j {
            f = f * (Polynomial::var(i) + Polynomial::var(j));
        }
    }
    f
}

/// Product over cells weakly below the diagonal; diagonal cells contribute
/// `2 x_i`.
fn weak_below_diagonal_product(lambda: &Partition) -> Polynomial {
    let mut f = below_diagonal_product(lambda);
    for (i, j) in lambda.cells() {
        if i == j {
            f = f * Polynomial::var(i).scale(&BigInt::from(2));
        }
    }
    f
}

/// The P-key polynomial of a symmetric weak composition: the `pi_{u(alpha)}`
/// image of the strictly-below-diagonal product of `D_{lambda(alpha)}`.
pub fn p_key(alpha: &WeakComposition) -> Result<Polynomial> {
    if !alpha.is_symmetric() {
        return Err(Error::Domain(format!("{alpha} is not symmetric")));
    }
    let (_, word) = u_of_alpha(alpha);
    Ok(below_diagonal_product(&lambda_of(alpha)).pi_word(&word))
}

/// The Q-key polynomial: as [`p_key`] but the product includes the diagonal
/// cells, each contributing `2 x_i`.
pub fn q_key(alpha: &WeakComposition) -> Result<Polynomial> {
    if !alpha.is_symmetric() {
        return Err(Error::Domain(format!("{alpha} is not symmetric")));
    }
    let (_, word) = u_of_alpha(alpha);
    Ok(weak_below_diagonal_product(&lambda_of(alpha)).pi_word(&word))
}

/// The Schubert polynomial, anchored as
/// `S_w = d_{w^{-1} w_0} x^{(n-1, ..., 1, 0)}` for `w` in `S_n`.
pub fn schubert(w: &Permutation) -> Result<Polynomial> {
    if !w.supported_on_positives() {
        return Err(Error::Domain(format!("{w} moves non-positive points")));
    }
    if w.is_identity() {
        return Ok(Polynomial::one());
    }
    let n = w.max_moved();
    let staircase = WeakComposition::new((0..n).map(|k| (n - 1 - k) as u32).collect());
    let w0 = Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>())?;
    let v = w.inverse().compose(&w0);
    Ok(x_to(&staircase).dd_word(&v.reduced_word()))
}

/// The orthogonal involution Schubert polynomial
/// `2^{|Cyc(z)|} sum over atoms of S_w`.
pub fn inv_schubert_o(z: &Involution) -> Result<Polynomial> {
    inv_schubert_o_capped(z, DEFAULT_LENGTH_CAP)
}

pub fn inv_schubert_o_capped(z: &Involution, cap: usize) -> Result<Polynomial> {
    if z.involution_length() > cap {
        return Err(Error::EnumerationTooLarge(format!(
            "involution length of {z} exceeds {cap}"
        )));
    }
    let mut f = Polynomial::zero();
    for w in z.atoms()? {
        f = f + schubert(&w)?;
    }
    let factor = BigInt::from(2).pow(z.cycles().len() as u32);
    Ok(f.scale(&factor))
}

/// The symplectic involution Schubert polynomial: sum over atoms of `S_w`.
pub fn inv_schubert_sp(z: &FpfInvolution) -> Result<Polynomial> {
    inv_schubert_sp_capped(z, DEFAULT_LENGTH_CAP)
}

pub fn inv_schubert_sp_capped(z: &FpfInvolution, cap: usize) -> Result<Polynomial> {
    if z.fpf_involution_length() > cap {
        return Err(Error::EnumerationTooLarge(format!(
            "fpf length of {z} exceeds {cap}"
        )));
    }
    let mut f = Polynomial::zero();
    for w in z.atoms()? {
        f = f + schubert(&w)?;
    }
    Ok(f)
}

/// The term order used by [`key_expand`]: compare total degree, then compare
/// the reversed zero-padded exponent sequences lexicographically.
pub fn key_order(a: &WeakComposition, b: &WeakComposition) -> std::cmp::Ordering {
    a.sum().cmp(&b.sum()).then_with(|| {
        let len = a.length().max(b.length());
        for i in (1..=len).rev() {
            match a.part(i).cmp(&b.part(i)) {
                std::cmp::Ordering::Equal => {}
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Expand `f` in the key basis: repeatedly subtract `c * kappa_alpha` for the
/// maximal exponent `alpha` under [`key_order`]. The maximum must strictly
/// decrease at every step; a violation signals that the chosen order is wrong
/// and panics rather than mis-expanding.
pub fn key_expand(f: &Polynomial) -> BTreeMap<WeakComposition, BigInt> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    let mut last_max: Option<WeakComposition> = None;
    while !rest.is_zero() {
        let (alpha, c) = rest
            .terms()
            .max_by(|(e1, _), (e2, _)| key_order(e1, e2))
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial has terms");
        if let Some(prev) = &last_max {
            assert!(
                key_order(&alpha, prev) == std::cmp::Ordering::Less,
                "key expansion order failed to decrease: {prev} then {alpha}"
            );
        }
        rest = rest - key_polynomial(&alpha).scale(&c);
        out.insert(alpha.clone(), c);
        last_max = Some(alpha);
    }
    out
}

/// Reassemble a key expansion into a polynomial.
pub fn key_assemble(expansion: &BTreeMap<WeakComposition, BigInt>) -> Polynomial {
    let mut f = Polynomial::zero();
    for (alpha, c) in expansion {
        f = f + key_polynomial(alpha).scale(c);
    }
    f
}
