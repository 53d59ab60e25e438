//! Coxeter-Knuth relation families as local rewriting systems.
//!
//! Each family defines a symmetric neighbor relation on primed words of fixed
//! length: window moves for all families, plus initial-letter moves for the
//! symplectic and orthogonal flavors. Classes are computed by BFS closure,
//! never by normal forms.

use crate::words::{Letter, PrimedWord};
use crate::{Error, Result, DEFAULT_SIZE_CAP};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RelationFamily {
    /// Classical Coxeter-Knuth moves on unprimed words.
    Ordinary,
    /// The primed window moves; restricts to `Ordinary` on unprimed words.
    Primed,
    /// `Ordinary` plus the two initial moves of fpf-involution words.
    Symplectic,
    /// `Primed` plus the initial moves of primed involution words.
    Orthogonal,
}

impl RelationFamily {
    pub fn label(self) -> &'static str {
        match self {
            RelationFamily::Ordinary => "ordinary",
            RelationFamily::Primed => "primed",
            RelationFamily::Symplectic => "symplectic",
            RelationFamily::Orthogonal => "orthogonal",
        }
    }
}

/// An equivalence class: members closed under the family's neighbor relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivClass {
    pub family: RelationFamily,
    pub members: Vec<PrimedWord>,
}

impl EquivClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &PrimedWord) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} class of {} words",
            self.family.label(),
            self.members.len()
        )
    }
}

fn window_moves(letters: &[Letter], j: usize, out: &mut Vec<Vec<Letter>>) {
    let (x, y, z) = (letters[j], letters[j + 1], letters[j + 2]);
    let (cx, cy, cz) = (x.ceil(), y.ceil(), z.ceil());
    // swap the first two when the third ceiling lies strictly between
    if cx.min(cy) < cz && cz < cx.max(cy) {
        let mut w = letters.to_vec();
        w.swap(j, j + 1);
        out.push(w);
    }
    // swap the last two when the first ceiling lies strictly between
    if cy.min(cz) < cx && cx < cy.max(cz) {
        let mut w = letters.to_vec();
        w.swap(j + 1, j + 2);
        out.push(w);
    }
    // braid windows: equal outer ceilings at distance one from the middle;
    // the image reverses the prime pattern
    if cx == cz && (cx - cy).abs() == 1 {
        let mut w = letters.to_vec();
        let rebuild = |c: i32, primed: bool| {
            if primed {
                Letter::primed(c)
            } else {
                Letter::unprimed(c)
            }
        };
        w[j] = rebuild(cy, z.is_primed());
        w[j + 1] = rebuild(cx, y.is_primed());
        w[j + 2] = rebuild(cy, x.is_primed());
        out.push(w);
    }
}

fn symplectic_initial_moves(letters: &[Letter], out: &mut Vec<Vec<Letter>>) {
    if letters.len() < 2 {
        return;
    }
    let (x, y) = (letters[0].ceil(), letters[1].ceil());
    // a(a-1)... ~ a(a+1)...
    if y == x - 1 || y == x + 1 {
        let mut w = letters.to_vec();
        w[1] = Letter::unprimed(2 * x - y);
        out.push(w);
    }
    // ab... ~ ba... for a = b (mod 2)
    if (x - y).rem_euclid(2) == 0 {
        let mut w = letters.to_vec();
        w.swap(0, 1);
        out.push(w);
    }
}

fn orthogonal_initial_moves(letters: &[Letter], out: &mut Vec<Vec<Letter>>) {
    if letters.is_empty() {
        return;
    }
    // a... ~ a'...
    let mut w = letters.to_vec();
    w[0] = w[0].toggle_prime();
    out.push(w);
    // swap the first two ceilings, each position keeping its primedness
    if letters.len() >= 2 {
        let (x, y) = (letters[0], letters[1]);
        let rebuild = |c: i32, primed: bool| {
            if primed {
                Letter::primed(c)
            } else {
                Letter::unprimed(c)
            }
        };
        let mut w = letters.to_vec();
        w[0] = rebuild(y.ceil(), x.is_primed());
        w[1] = rebuild(x.ceil(), y.is_primed());
        out.push(w);
    }
}

/// All single-move images of a word under a relation family.
pub fn neighbors(word: &PrimedWord, family: RelationFamily) -> Vec<PrimedWord> {
    let letters = word.letters();
    debug_assert!(
        !matches!(
            family,
            RelationFamily::Ordinary | RelationFamily::Symplectic
        ) || word.is_unprimed(),
        "unprimed families applied to a primed word"
    );
    let mut raw: Vec<Vec<Letter>> = Vec::new();
    if letters.len() >= 3 {
        for j in 0..letters.len() - 2 {
            window_moves(letters, j, &mut raw);
        }
    }
    match family {
        RelationFamily::Ordinary | RelationFamily::Primed => {}
        RelationFamily::Symplectic => symplectic_initial_moves(letters, &mut raw),
        RelationFamily::Orthogonal => orthogonal_initial_moves(letters, &mut raw),
    }
    let mut out: Vec<PrimedWord> = raw.into_iter().map(PrimedWord::new).collect();
    out.sort();
    out.dedup();
    out.retain(|w| w != word);
    out
}

/// BFS closure of a seed word.
pub fn enumerate_class(seed: &PrimedWord, family: RelationFamily) -> Result<EquivClass> {
    enumerate_class_capped(seed, family, DEFAULT_SIZE_CAP)
}

pub fn enumerate_class_capped(
    seed: &PrimedWord,
    family: RelationFamily,
    cap: usize,
) -> Result<EquivClass> {
    let mut seen: BTreeSet<PrimedWord> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(w) = queue.pop_front() {
        for nb in neighbors(&w, family) {
            if seen.insert(nb.clone()) {
                if seen.len() > cap {
                    return Err(Error::EnumerationTooLarge(format!(
                        "class of {seed} exceeds cap {cap}"
                    )));
                }
                queue.push_back(nb);
            }
        }
    }
    Ok(EquivClass {
        family,
        members: seen.into_iter().collect(),
    })
}

/// Partition a word set into classes. The input must be closed under the
/// family's relation; a neighbor outside the set is an error.
pub fn partition_classes(words: &[PrimedWord], family: RelationFamily) -> Result<Vec<EquivClass>> {
    let index: std::collections::HashMap<&PrimedWord, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for (i, w) in words.iter().enumerate() {
        for nb in neighbors(w, family) {
            match index.get(&nb) {
                Some(&j) => {
                    let a = find(&mut parent, i);
                    let b = find(&mut parent, j);
                    if a != b {
                        parent[a] = b;
                    }
                }
                None => {
                    return Err(Error::NotClosed(format!(
                        "{} has neighbor {} outside the input set",
                        w, nb
                    )))
                }
            }
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<PrimedWord>> =
        std::collections::HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(w.clone());
    }
    let mut out: Vec<EquivClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            EquivClass { family, members }
        })
        .collect();
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inv::{all_fpf_involutions, all_involutions, marked_inversions, FpfInvolution};
    use crate::perm::Permutation;

    fn w(s: &str) -> PrimedWord {
        PrimedWord::parse_compact(s).unwrap()
    }

    #[test]
    fn classical_braid_move() {
        assert!(neighbors(&w("121"), RelationFamily::Ordinary).contains(&w("212")));
        assert!(neighbors(&w("212"), RelationFamily::Ordinary).contains(&w("121")));
    }

    #[test]
    fn primed_braid_move() {
        // a'ba ~ bab' with a=1, b=2
        assert!(neighbors(&w("1'21"), RelationFamily::Primed).contains(&w("212'")));
        assert!(neighbors(&w("212'"), RelationFamily::Primed).contains(&w("1'21")));
        // primed-letter count is invariant under primed moves
        for word in ["1'21", "2'13", "13'2", "12'1'"] {
            let word = w(word);
            let count = |v: &PrimedWord| v.letters().iter().filter(|l| l.is_primed()).count();
            for nb in neighbors(&word, RelationFamily::Primed) {
                assert_eq!(count(&nb), count(&word));
            }
        }
    }

    #[test]
    fn symplectic_initial_move() {
        let nbs = neighbors(&w("2143"), RelationFamily::Symplectic);
        assert!(nbs.contains(&w("2343")));
        let z = FpfInvolution::parse("(1 5)(2 4)(3 6)").unwrap();
        let words: BTreeSet<PrimedWord> = z.fpf_involution_words().unwrap().into_iter().collect();
        assert!(words.contains(&w("2143")) && words.contains(&w("2343")));
    }

    #[test]
    fn class_examples() {
        assert_eq!(
            enumerate_class(&PrimedWord::empty(), RelationFamily::Ordinary)
                .unwrap()
                .members,
            vec![PrimedWord::empty()]
        );
        // R(w_(2,2)) is a single ordinary class
        let wl =
            crate::perm::dominant_of_shape_perm(&crate::shapes::Partition::from_parts(&[2, 2]));
        let words = wl.reduced_words_as_words().unwrap();
        let class = enumerate_class(&words[0], RelationFamily::Ordinary).unwrap();
        let set: BTreeSet<PrimedWord> = words.into_iter().collect();
        assert_eq!(class.members.iter().cloned().collect::<BTreeSet<_>>(), set);
        // R^Sp(z^fpf_lambda) is a single symplectic class for lambda=(4,3,3,1)
        let z =
            crate::inv::dominant_of_shape_fpf(&crate::shapes::Partition::from_parts(&[4, 3, 3, 1]))
                .unwrap();
        let words = z.fpf_involution_words().unwrap();
        let class = enumerate_class(&words[0], RelationFamily::Symplectic).unwrap();
        assert_eq!(
            class.members.iter().cloned().collect::<BTreeSet<_>>(),
            words.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn partition_21543() {
        let wp = Permutation::parse_one_line("21543").unwrap();
        let words = wp.reduced_words_as_words().unwrap();
        let classes = partition_classes(&words, RelationFamily::Ordinary).unwrap();
        assert_eq!(classes.len(), 3);
        let single = vec![w("12")];
        assert_eq!(
            partition_classes(&single, RelationFamily::Ordinary)
                .unwrap()
                .len(),
            1
        );
        // not closed: a braid neighbor is missing
        assert!(partition_classes(&[w("121"), w("111")], RelationFamily::Ordinary).is_err());
    }

    #[test]
    fn closure_properties() {
        // R^Sp(z) closed and partitioned by symplectic classes, z in Ifpf_6
        for z in all_fpf_involutions(6) {
            let words = z.fpf_involution_words().unwrap();
            let set: BTreeSet<PrimedWord> = words.iter().cloned().collect();
            let classes = partition_classes(&words, RelationFamily::Symplectic).unwrap();
            let union: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(union, set.len());
        }
        // R^O(z) likewise for z in I_5, including prime moves
        for z in all_involutions(5) {
            let words = z.involution_words().unwrap();
            let classes = partition_classes(&words, RelationFamily::Orthogonal).unwrap();
            let union: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(union, words.len());
        }
    }

    #[test]
    fn marked_constant_on_primed_classes() {
        for z in all_involutions(4) {
            let words = z.involution_words().unwrap();
            // group by marked-inversion set: each group is primed-CK closed
            let mut by_marks: std::collections::BTreeMap<Vec<(i32, i32)>, Vec<PrimedWord>> =
                std::collections::BTreeMap::new();
            for word in words {
                by_marks
                    .entry(marked_inversions(&word).unwrap())
                    .or_default()
                    .push(word);
            }
            for (marks, group) in by_marks {
                let classes = partition_classes(&group, RelationFamily::Primed).unwrap();
                for class in classes {
                    for m in &class.members {
                        assert_eq!(marked_inversions(m).unwrap(), marks);
                    }
                }
            }
        }
    }
}
