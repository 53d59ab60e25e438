//! A small tensor-power oracle: the `gl(n)` crystal on words of length `m`
//! over `[n]`, with both the recursive tensor rule and the
//! bracket-cancellation signature rule. Used as an independent fixture for
//! Demazure character checks.

use crate::poly::Polynomial;
use crate::shapes::WeakComposition;
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeSet;

pub type TensorWord = Vec<u8>;

/// Statistics by string length under the recursive rule.
pub fn eps_recursive(n: u8, i: u8, b: &[u8]) -> usize {
    let mut k = 0;
    let mut cur = b.to_vec();
    while let Some(next) = e_recursive(n, i, &cur) {
        k += 1;
        cur = next;
    }
    k
}

pub fn phi_recursive(n: u8, i: u8, b: &[u8]) -> usize {
    let mut k = 0;
    let mut cur = b.to_vec();
    while let Some(next) = f_recursive(n, i, &cur) {
        k += 1;
        cur = next;
    }
    k
}

/// The recursive raising rule on `b_1 (x) (b_2 ... b_m)`.
pub fn e_recursive(n: u8, i: u8, b: &[u8]) -> Option<TensorWord> {
    assert!(i >= 1 && i < n);
    match b.len() {
        0 => None,
        1 => {
            if b[0] == i + 1 {
                Some(vec![i])
            } else {
                None
            }
        }
        _ => {
            let head = b[0];
            let tail = &b[1..];
            let eps_head = usize::from(head == i + 1);
            if eps_head <= phi_recursive(n, i, tail) {
                let t = e_recursive(n, i, tail)?;
                let mut out = vec![head];
                out.extend(t);
                Some(out)
            } else {
                let h = e_recursive(n, i, &[head])?;
                let mut out = h;
                out.extend_from_slice(tail);
                Some(out)
            }
        }
    }
}

/// The recursive lowering rule.
pub fn f_recursive(n: u8, i: u8, b: &[u8]) -> Option<TensorWord> {
    assert!(i >= 1 && i < n);
    match b.len() {
        0 => None,
        1 => {
            if b[0] == i {
                Some(vec![i + 1])
            } else {
                None
            }
        }
        _ => {
            let head = b[0];
            let tail = &b[1..];
            let eps_head = usize::from(head == i + 1);
            if eps_head < phi_recursive(n, i, tail) {
                let t = f_recursive(n, i, tail)?;
                let mut out = vec![head];
                out.extend(t);
                Some(out)
            } else {
                let h = f_recursive(n, i, &[head])?;
                let mut out = h;
                out.extend_from_slice(tail);
                Some(out)
            }
        }
    }
}

fn unmatched(i: u8, b: &[u8]) -> (Vec<usize>, Vec<usize>) {
    // ')' for boxes equal to i, '(' for boxes equal to i+1; cancel matched
    // pairs, returning (unmatched ')', unmatched '(') positions
    let mut open: Vec<usize> = Vec::new();
    let mut closed: Vec<usize> = Vec::new();
    for (pos, &x) in b.iter().enumerate() {
        if x == i + 1 {
            open.push(pos);
        } else if x == i {
            if open.is_empty() {
                closed.push(pos);
            } else {
                open.pop();
            }
        }
    }
    (closed, open)
}

/// The signature (bracket cancellation) raising rule.
pub fn e_signature(i: u8, b: &[u8]) -> Option<TensorWord> {
    let (_, open) = unmatched(i, b);
    let pos = *open.first()?;
    let mut out = b.to_vec();
    out[pos] = i;
    Some(out)
}

/// The signature lowering rule.
pub fn f_signature(i: u8, b: &[u8]) -> Option<TensorWord> {
    let (closed, _) = unmatched(i, b);
    let pos = *closed.last()?;
    let mut out = b.to_vec();
    out[pos] = i + 1;
    Some(out)
}

/// All words of length `m` over `[n]`.
pub fn all_tensor_words(n: u8, m: usize, cap: usize) -> Result<Vec<TensorWord>> {
    let total = (n as usize).checked_pow(m as u32).unwrap_or(usize::MAX);
    if total > cap {
        return Err(Error::EnumerationTooLarge(format!(
            "{n}^{m} tensor words exceed cap {cap}"
        )));
    }
    let mut out: Vec<TensorWord> = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(out.len() * n as usize);
        for w in &out {
            for x in 1..=n {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

pub fn weight(n: u8, b: &[u8]) -> WeakComposition {
    let mut parts = vec![0u32; n as usize];
    for &x in b {
        parts[x as usize - 1] += 1;
    }
    WeakComposition::new(parts)
}

/// Demazure operator in the full tensor power: close a subset under `f_i`.
pub fn demazure_op(n: u8, i: u8, set: &BTreeSet<TensorWord>) -> BTreeSet<TensorWord> {
    let mut out = set.clone();
    for b in set {
        let mut cur = b.clone();
        while let Some(next) = f_recursive(n, i, &cur) {
            out.insert(next.clone());
            cur = next;
        }
    }
    out
}

/// Apply a chain of Demazure operators, rightmost first.
pub fn demazure_word(n: u8, word: &[u8], seed: &BTreeSet<TensorWord>) -> BTreeSet<TensorWord> {
    let mut set = seed.clone();
    for &i in word.iter().rev() {
        set = demazure_op(n, i, &set);
    }
    set
}

pub fn character(n: u8, set: &BTreeSet<TensorWord>) -> Polynomial {
    let mut f = Polynomial::zero();
    for b in set {
        f.add_term(weight(n, b), BigInt::from(1));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::key_polynomial;

    #[test]
    fn standard_crystal_chain() {
        // B^{(x)1} is the chain 1 -> 2 -> ... -> n
        let n = 4;
        for j in 1..n {
            assert_eq!(f_recursive(n, j, &[j]), Some(vec![j + 1]));
            assert_eq!(e_recursive(n, j, &[j + 1]), Some(vec![j]));
        }
        assert_eq!(f_recursive(n, 2, &[1]), None);
    }

    #[test]
    fn rules_agree_exhaustively() {
        // recursive and signature rules agree on all of B_3^{(x)5}
        let n = 3;
        for b in all_tensor_words(n, 5, 1000).unwrap() {
            for i in 1..n {
                assert_eq!(f_recursive(n, i, &b), f_signature(i, &b), "f_{i} at {b:?}");
                assert_eq!(e_recursive(n, i, &b), e_signature(i, &b), "e_{i} at {b:?}");
            }
        }
    }

    #[test]
    fn demazure_tensor_example() {
        // D2 D1 D3 {3 (x) 2 (x) 1 (x) 1} has 8 vertices with character kappa_1021
        let n = 4;
        let seed: BTreeSet<TensorWord> = [vec![3, 2, 1, 1]].into_iter().collect();
        let set = demazure_word(n, &[2, 1, 3], &seed);
        assert_eq!(set.len(), 8);
        assert_eq!(
            character(n, &set),
            key_polynomial(&WeakComposition::new(vec![1, 0, 2, 1]))
        );
        let expected: BTreeSet<TensorWord> = [
            vec![3, 2, 1, 1],
            vec![3, 2, 1, 2],
            vec![4, 2, 1, 1],
            vec![4, 2, 1, 2],
            vec![3, 2, 1, 3],
            vec![4, 3, 1, 1],
            vec![4, 2, 1, 3],
            vec![4, 3, 1, 3],
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);
    }
}
