//! Straight and shifted tableaux, reading words, and extraction of the unique
//! reduced tableau from a Coxeter-Knuth class.
//!
//! Reduced tableaux are found by scanning class members and segmenting the
//! designated reading word against shape and monotonicity constraints; the
//! underlying theorems guarantee existence and uniqueness, so finding zero or
//! several distinct tableaux is reported as an implementation bug.

use crate::ck::EquivClass;
use crate::crystal::CrystalKind;
use crate::shapes::{half_le, half_lt, is_skew_symmetric, Partition};
use crate::words::{Letter, PrimedWord};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A straight or shifted tableau; row `i` (1-indexed) of a shifted tableau
/// occupies columns `i ... i + len - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shifted: bool,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(shifted: bool, rows: Vec<Vec<Letter>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Domain("empty tableau row".into()));
        }
        for w in rows.windows(2) {
            let ok = if shifted {
                w[0].len() > w[1].len()
            } else {
                w[0].len() >= w[1].len()
            };
            if !ok {
                return Err(Error::Domain(
                    "row lengths do not form the required shape".into(),
                ));
            }
        }
        Ok(Tableau { shifted, rows })
    }

    pub fn empty(shifted: bool) -> Self {
        Tableau {
            shifted,
            rows: Vec::new(),
        }
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("tableau shape")
    }

    /// Entry at 1-indexed (row, col) in diagram coordinates.
    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        let r = self.rows.get(row - 1)?;
        let offset = if self.shifted { row } else { 1 };
        if col < offset {
            return None;
        }
        r.get(col - offset).copied()
    }

    /// Rows left to right, starting with the last row.
    pub fn row_word(&self) -> PrimedWord {
        let mut letters = Vec::new();
        for r in self.rows.iter().rev() {
            letters.extend_from_slice(r);
        }
        PrimedWord::new(letters)
    }

    pub fn revrow_word(&self) -> PrimedWord {
        self.row_word().reversed()
    }

    /// Columns left to right, each read bottom to top.
    pub fn col_word(&self) -> PrimedWord {
        let mut letters = Vec::new();
        let width = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.len() + if self.shifted { i } else { 0 })
            .max()
            .unwrap_or(0);
        for col in 1..=width {
            for row in (1..=self.rows.len()).rev() {
                if let Some(l) = self.entry(row, col) {
                    letters.push(l);
                }
            }
        }
        PrimedWord::new(letters)
    }

    pub fn unprime(&self) -> Tableau {
        Tableau {
            shifted: self.shifted,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|l| Letter::unprimed(l.ceil())).collect())
                .collect(),
        }
    }

    fn cmp_ok(&self, a: Letter, b: Letter, increasing: bool) -> bool {
        if increasing {
            a.ceil() < b.ceil()
        } else {
            a.ceil() > b.ceil()
        }
    }

    fn is_monotone(&self, increasing: bool) -> bool {
        for r in &self.rows {
            if !r.windows(2).all(|w| self.cmp_ok(w[0], w[1], increasing)) {
                return false;
            }
        }
        for (i, r) in self.rows.iter().enumerate().skip(1) {
            // compare row i+1 (0-indexed i) with the row above at equal columns
            let shift = if self.shifted { 1 } else { 0 };
            for (j, &below) in r.iter().enumerate() {
                let above = self.rows[i - 1][j + shift];
                if !self.cmp_ok(above, below, increasing) {
                    return false;
                }
            }
        }
        true
    }

    /// Strictly increasing rows and columns on ceilings.
    pub fn is_increasing(&self) -> bool {
        self.is_monotone(true)
    }

    pub fn is_decreasing(&self) -> bool {
        self.is_monotone(false)
    }

    /// No primed entries on the main diagonal (shifted tableaux only).
    pub fn has_unprimed_diagonal(&self) -> bool {
        self.rows.iter().all(|r| !r[0].is_primed())
    }

    pub fn is_unprimed(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|l| !l.is_primed()))
    }

    /// Parse compact rows separated by `/`, e.g. `653/42/1` or `54/3'1`.
    pub fn parse(shifted: bool, s: &str) -> Result<Tableau> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty(shifted));
        }
        let rows: Result<Vec<Vec<Letter>>> = s
            .split('/')
            .map(|r| PrimedWord::parse_compact(r.trim()).map(|w| w.letters().to_vec()))
            .collect();
        Tableau::new(shifted, rows?)
    }

    /// JSON: rows of letter tokens.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect())
            .collect();
        serde_json::json!({ "shifted": self.shifted, "rows": rows })
    }

    /// A pretty-printed grid.
    pub fn render_grid(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.rows.iter().enumerate() {
            if self.shifted {
                out.push_str(&"    ".repeat(i));
            }
            for l in r {
                out.push_str(&format!("{:<4}", l.to_string()));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                write!(f, "/")?;
            }
            for l in r {
                if l.is_primed() {
                    write!(f, "{}'", l.ceil())?;
                } else {
                    write!(f, "{}", l.ceil())?;
                }
            }
            first = false;
        }
        if self.rows.is_empty() {
            write!(f, "∅")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// The six reduced-tableau flavors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableauFlavor {
    GlIncreasing,
    GlDecreasing,
    SpIncreasing,
    SpDecreasing,
    OIncreasing,
    ODecreasing,
}

impl TableauFlavor {
    pub fn shifted(self) -> bool {
        !matches!(
            self,
            TableauFlavor::GlIncreasing | TableauFlavor::GlDecreasing
        )
    }

    pub fn increasing(self) -> bool {
        matches!(
            self,
            TableauFlavor::GlIncreasing | TableauFlavor::SpIncreasing | TableauFlavor::OIncreasing
        )
    }

    fn needs_unprimed_diagonal(self) -> bool {
        matches!(
            self,
            TableauFlavor::OIncreasing | TableauFlavor::ODecreasing
        )
    }

    /// The increasing flavor of a crystal kind.
    pub fn increasing_of(kind: CrystalKind) -> TableauFlavor {
        match kind {
            CrystalKind::Gl => TableauFlavor::GlIncreasing,
            CrystalKind::Q => TableauFlavor::SpIncreasing,
            CrystalKind::QPlus => TableauFlavor::OIncreasing,
        }
    }

    pub fn decreasing_of(kind: CrystalKind) -> TableauFlavor {
        match kind {
            CrystalKind::Gl => TableauFlavor::GlDecreasing,
            CrystalKind::Q => TableauFlavor::SpDecreasing,
            CrystalKind::QPlus => TableauFlavor::ODecreasing,
        }
    }
}

/// All tableaux of the flavor whose row reading word equals `word` (for the
/// gl-increasing flavor the caller passes the reversed word).
fn parse_row_word(word: &[Letter], shifted: bool, increasing: bool) -> Vec<Tableau> {
    // segments are rows read bottom-up
    fn rec(
        letters: &[Letter],
        pos: usize,
        rows_rev: &mut Vec<Vec<Letter>>,
        shifted: bool,
        increasing: bool,
        out: &mut Vec<Tableau>,
    ) {
        if pos == letters.len() {
            if rows_rev.last().is_none_or(|r| !r.is_empty()) {
                let rows: Vec<Vec<Letter>> = rows_rev.iter().rev().cloned().collect();
                if let Ok(t) = Tableau::new(shifted, rows) {
                    debug_assert!(if increasing {
                        t.is_increasing()
                    } else {
                        t.is_decreasing()
                    });
                    out.push(t);
                }
            }
            return;
        }
        let x = letters[pos];
        let cmp = |a: Letter, b: Letter| {
            if increasing {
                a.ceil() < b.ceil()
            } else {
                a.ceil() > b.ceil()
            }
        };
        // extend the current row
        let can_extend = rows_rev.last().is_some_and(|r| {
            if r.is_empty() {
                true
            } else {
                cmp(*r.last().unwrap(), x)
            }
        });
        if can_extend {
            // column constraint against the row below (the previous segment)
            let cur_len = rows_rev.last().unwrap().len();
            let ok = if rows_rev.len() < 2 {
                true
            } else {
                let below = &rows_rev[rows_rev.len() - 2];
                if shifted {
                    // row r gets entry at local index cur_len; the cell below
                    // it in the diagram is local index cur_len - 1 of the
                    // previous segment
                    if cur_len == 0 {
                        true
                    } else if cur_len - 1 < below.len() {
                        cmp(x, below[cur_len - 1])
                    } else {
                        true
                    }
                } else if cur_len < below.len() {
                    cmp(x, below[cur_len])
                } else {
                    true
                }
            };
            if ok {
                rows_rev.last_mut().unwrap().push(x);
                rec(letters, pos + 1, rows_rev, shifted, increasing, out);
                rows_rev.last_mut().unwrap().pop();
            }
        }
        // or start a new row (the one above), if the shape stays valid
        let shape_ok = match rows_rev.last() {
            None => true,
            Some(r) => !r.is_empty(),
        };
        if shape_ok {
            // the new row must end up strictly (shifted) or weakly (straight)
            // longer than the previous one; enforced at completion by
            // Tableau::new, pruned here cheaply
            rows_rev.push(Vec::new());
            rec(letters, pos, rows_rev, shifted, increasing, out);
            rows_rev.pop();
        }
    }
    if word.is_empty() {
        return vec![Tableau::empty(shifted)];
    }
    let mut out = Vec::new();
    let mut rows_rev: Vec<Vec<Letter>> = Vec::new();
    rec(word, 0, &mut rows_rev, shifted, increasing, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Scan a Coxeter-Knuth class for the unique reduced tableau of the flavor:
/// the tableau whose designated reading word (revrow for gl-increasing, row
/// otherwise) lies in the class. Zero or multiple matches is an error.
pub fn find_reduced_tableau(class: &EquivClass, flavor: TableauFlavor) -> Result<Tableau> {
    let mut found: BTreeSet<Tableau> = BTreeSet::new();
    for member in &class.members {
        let letters: Vec<Letter> = if flavor == TableauFlavor::GlIncreasing {
            member.letters().iter().rev().copied().collect()
        } else {
            member.letters().to_vec()
        };
        for t in parse_row_word(&letters, flavor.shifted(), flavor.increasing()) {
            if flavor.needs_unprimed_diagonal() && !t.has_unprimed_diagonal() {
                continue;
            }
            found.insert(t);
        }
    }
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        0 => Err(Error::TheoremViolation(format!(
            "no {flavor:?} reduced tableau in a class of {} words",
            class.members.len()
        ))),
        k => Err(Error::TheoremViolation(format!(
            "{k} distinct {flavor:?} reduced tableaux in one class: {:?}",
            found.into_iter().collect::<Vec<_>>()
        ))),
    }
}

/// The canonical dominant tableaux: `T_lambda` with entry `i+j-1` on the
/// straight diagram; the symplectic one with entry `i+j` on the shifted
/// diagram of `half_lt`; the orthogonal one with entry `i+j-1` on the shifted
/// diagram of `half_le`.
pub fn canonical_dominant(kind: CrystalKind, lambda: &Partition) -> Result<Tableau> {
    match kind {
        CrystalKind::Gl => {
            let rows = (1..=lambda.length())
                .map(|i| {
                    (1..=lambda.part(i) as usize)
                        .map(|j| Letter::unprimed((i + j - 1) as i32))
                        .collect()
                })
                .collect();
            Tableau::new(false, rows)
        }
        CrystalKind::Q => {
            if !is_skew_symmetric(lambda) {
                return Err(Error::Domain(format!("{lambda} is not skew-symmetric")));
            }
            let mu = half_lt(lambda);
            let rows = (1..=mu.length())
                .map(|i| {
                    (i..i + mu.part(i) as usize)
                        .map(|j| Letter::unprimed((i + j) as i32))
                        .collect()
                })
                .collect();
            Tableau::new(true, rows)
        }
        CrystalKind::QPlus => {
            if !lambda.is_symmetric() {
                return Err(Error::Domain(format!("{lambda} is not symmetric")));
            }
            let mu = half_le(lambda);
            let rows = (1..=mu.length())
                .map(|i| {
                    (i..i + mu.part(i) as usize)
                        .map(|j| Letter::unprimed((i + j - 1) as i32))
                        .collect()
                })
                .collect();
            Tableau::new(true, rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::{enumerate_class, partition_classes, RelationFamily};
    use crate::inv::dominant_of_shape_fpf;
    use crate::perm::Permutation;

    #[test]
    fn reading_words() {
        let t = Tableau::parse(false, "123/23").unwrap();
        assert_eq!(t.row_word().to_string(), "2 3 1 2 3");
        assert_eq!(t.revrow_word().to_string(), "3 2 1 3 2");
        assert_eq!(t.col_word().to_string(), "2 1 3 2 3");
        let single = Tableau::parse(false, "5").unwrap();
        assert_eq!(single.row_word().to_string(), "5");
        assert!(t.is_increasing());
    }

    #[test]
    fn dominant_tableaux() {
        let t = canonical_dominant(CrystalKind::Gl, &Partition::from_parts(&[2, 1])).unwrap();
        assert_eq!(t, Tableau::parse(false, "12/2").unwrap());
        let t = canonical_dominant(CrystalKind::Q, &Partition::from_parts(&[4, 3, 3, 1])).unwrap();
        assert_eq!(t, Tableau::parse(true, "234/4").unwrap());
        let t = canonical_dominant(CrystalKind::QPlus, &Partition::from_parts(&[2, 2])).unwrap();
        assert_eq!(t, Tableau::parse(true, "12/3").unwrap());
        assert!(canonical_dominant(CrystalKind::Q, &Partition::from_parts(&[2, 1])).is_err());
    }

    #[test]
    fn row_word_membership() {
        // row(T^Sp_lambda) is an fpf-involution word of the dominant z
        let lam = Partition::from_parts(&[4, 3, 3, 1]);
        let t = canonical_dominant(CrystalKind::Q, &lam).unwrap();
        let z = dominant_of_shape_fpf(&lam).unwrap();
        let words: std::collections::BTreeSet<_> =
            z.fpf_involution_words().unwrap().into_iter().collect();
        assert!(words.contains(&t.row_word()));
    }

    #[test]
    fn reduced_tableaux_for_21543() {
        let w = Permutation::parse_one_line("21543").unwrap();
        let words = w.reduced_words_as_words().unwrap();
        let classes = partition_classes(&words, RelationFamily::Ordinary).unwrap();
        assert_eq!(classes.len(), 3);
        let mut increasing: Vec<Tableau> = classes
            .iter()
            .map(|c| find_reduced_tableau(c, TableauFlavor::GlIncreasing).unwrap())
            .collect();
        increasing.sort();
        let mut expected = vec![
            Tableau::parse(false, "13/34").unwrap(),
            Tableau::parse(false, "134/4").unwrap(),
            Tableau::parse(false, "14/3/4").unwrap(),
        ];
        expected.sort();
        assert_eq!(increasing, expected);
        // decreasing flavors, same shapes
        for c in &classes {
            let u = find_reduced_tableau(c, TableauFlavor::GlIncreasing).unwrap();
            let v = find_reduced_tableau(c, TableauFlavor::GlDecreasing).unwrap();
            assert_eq!(u.shape(), v.shape());
        }
    }

    #[test]
    fn staircase_class() {
        let seed = PrimedWord::from_ints(&[1, 2, 1]);
        let class = enumerate_class(&seed, RelationFamily::Ordinary).unwrap();
        let t = find_reduced_tableau(&class, TableauFlavor::GlIncreasing).unwrap();
        assert_eq!(t, Tableau::parse(false, "12/2").unwrap());
    }

    #[test]
    fn sp_one_row_class() {
        // z = (1 5)(2 3)(4 6): increasing [2,3,4], decreasing [4,2,1]
        let z = crate::inv::FpfInvolution::parse("(1 5)(2 3)(4 6)").unwrap();
        let words = z.fpf_involution_words().unwrap();
        let classes = partition_classes(&words, RelationFamily::Symplectic).unwrap();
        assert_eq!(classes.len(), 1);
        let u = find_reduced_tableau(&classes[0], TableauFlavor::SpIncreasing).unwrap();
        assert_eq!(u, Tableau::parse(true, "234").unwrap());
        let v = find_reduced_tableau(&classes[0], TableauFlavor::SpDecreasing).unwrap();
        assert_eq!(v, Tableau::parse(true, "421").unwrap());
    }

    #[test]
    fn empty_class() {
        let class = enumerate_class(&PrimedWord::empty(), RelationFamily::Orthogonal).unwrap();
        let t = find_reduced_tableau(&class, TableauFlavor::OIncreasing).unwrap();
        assert_eq!(t, Tableau::empty(true));
    }

    #[test]
    fn primed_increasing_predicate() {
        // increasing iff unprime increasing: a row (3', 3) has equal ceilings
        let t = Tableau::new(true, vec![vec![Letter::primed(3), Letter::unprimed(3)]]).unwrap();
        assert!(!t.is_increasing());
        let t = Tableau::parse(true, "23'").unwrap();
        assert!(t.is_increasing());
        assert!(t.unprime().is_increasing());
    }
}
