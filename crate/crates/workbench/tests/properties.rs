//! Standalone property suites: crystal axioms on every built graph,
//! divided-difference operator laws, unprime commutation, reduced-tableau
//! existence and uniqueness, highest and lowest weight formulas, nonemptiness
//! code criteria, and the exhaustive flag recursion. Zero violations
//! tolerated.

use crystal_workbench::ck::{partition_classes, RelationFamily};
use crystal_workbench::crystal::{
    decreasing_splits, CrystalGraph, CrystalKind, Factorization, Generator, OpIndex,
};
use crystal_workbench::demazure::{bounded_set, decompose, MatchContext};
use crystal_workbench::inv::{all_fpf_involutions, all_involutions};
use crystal_workbench::perm::{from_word, Permutation};
use crystal_workbench::poly::{key_assemble, key_expand, key_polynomial, p_key, q_key, Polynomial};
use crystal_workbench::shapes::{
    all_weak_compositions, is_bounded_cond1, is_bounded_cond2, is_bounded_cond3, Flag,
    WeakComposition,
};
use crystal_workbench::tableau::{find_reduced_tableau, TableauFlavor};
use crystal_workbench::words::{Letter, PrimedWord};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn s_n(n: i32) -> Vec<Permutation> {
    let w0 = Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>()).unwrap();
    let mut elems = vec![Permutation::identity()];
    for word in w0.reduced_words().unwrap() {
        for k in 1..=word.len() {
            elems.push(from_word(&word[..k]));
        }
    }
    elems.sort();
    elems.dedup();
    elems
}

#[test]
fn crystal_axioms_on_every_built_graph() {
    for w in s_n(4) {
        let g =
            CrystalGraph::reduced_factorizations(&Generator::Word { w, marks: vec![] }, 3).unwrap();
        g.check_axioms().unwrap();
    }
    for z in all_fpf_involutions(6) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3).unwrap();
        g.check_axioms().unwrap();
    }
    for z in all_involutions(4) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z), 3).unwrap();
        g.check_axioms().unwrap();
    }
    println!("PASS properties: crystal axioms hold on every built graph");
}

fn random_polynomial(rng: &mut StdRng) -> Polynomial {
    let mut f = Polynomial::zero();
    for _ in 0..rng.gen_range(1..6) {
        let len = rng.gen_range(0..5);
        let parts: Vec<u32> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let coeff = rng.gen_range(-4i64..5);
        f.add_term(WeakComposition::new(parts), BigInt::from(coeff));
    }
    f
}

#[test]
fn divided_difference_operator_laws() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let f = random_polynomial(&mut rng);
        for i in 1..4usize {
            let d = f.divided_difference(i);
            assert!(d.divided_difference(i).is_zero(), "d_i^2 = 0");
            let p = f.isobaric_dd(i);
            assert_eq!(p.isobaric_dd(i), p, "pi_i^2 = pi_i");
        }
        // braid and commutation relations for both operator families
        assert_eq!(
            f.dd_word(&[1, 2, 1]),
            f.dd_word(&[2, 1, 2]),
            "divided differences braid"
        );
        assert_eq!(
            f.pi_word(&[1, 2, 1]),
            f.pi_word(&[2, 1, 2]),
            "isobaric braid"
        );
        assert_eq!(
            f.dd_word(&[1, 3]),
            f.dd_word(&[3, 1]),
            "commuting divided differences"
        );
        assert_eq!(f.pi_word(&[1, 3]), f.pi_word(&[3, 1]), "commuting isobaric");
    }
    println!("PASS properties: operator laws on 200 random polynomials");
}

#[test]
fn unprime_commutation() {
    // gl: unprime intertwines RF+(w, A) with RF(w)
    let w = Permutation::parse_one_line("3412").unwrap();
    for marks in [
        vec![],
        vec![(2, 4)],
        vec![(2, 4), (2, 3)],
        vec![(1, 3), (1, 4)],
    ] {
        let primed = CrystalGraph::reduced_factorizations(
            &Generator::Word {
                w: w.clone(),
                marks,
            },
            3,
        )
        .unwrap();
        let plain = CrystalGraph::reduced_factorizations(
            &Generator::Word {
                w: w.clone(),
                marks: vec![],
            },
            3,
        )
        .unwrap();
        for (k, adj) in primed.f_adj.iter().enumerate() {
            for &(idx, t) in adj {
                let a = primed.vertices[k].unprime();
                let b = primed.vertices[t as usize].unprime();
                let ka = plain.vertex_id(&a).unwrap();
                assert_eq!(plain.f_edge(ka, idx), plain.vertex_id(&b));
            }
        }
    }
    // q+: the primed indices fix the unprimed image; the base indices
    // commute with unprime through the matching local rules (the barred and
    // underlined indices above 1 are sigma-conjugates of these, so base-level
    // commutation is what the definitions supply)
    for z in all_involutions(4) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z.clone()), 3).unwrap();
        for (k, adj) in g.f_adj.iter().enumerate() {
            for &(idx, t) in adj {
                let a = g.vertices[k].unprime();
                let b = g.vertices[t as usize].unprime();
                match idx {
                    OpIndex::Prime(_) => assert_eq!(a, b, "prime indices fix unprime"),
                    OpIndex::Gl(i) => {
                        assert_eq!(
                            crystal_workbench::crystal::gl_f(i as usize, &a),
                            Some(b),
                            "index {idx}"
                        );
                    }
                    OpIndex::Bar(1) => {
                        assert_eq!(
                            crystal_workbench::crystal::o_fbar1(&a),
                            Some(b),
                            "orthogonal b1 on the unprimed image"
                        );
                    }
                    _ => {}
                }
            }
        }
    }
    println!("PASS properties: unprime commutation");
}

#[test]
fn reduced_tableau_existence_uniqueness() {
    // ordinary classes over S5 with length <= 8
    for w in s_n(5) {
        if w.length() > 8 {
            continue;
        }
        let words = w.reduced_words_as_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Ordinary).unwrap() {
            let u = find_reduced_tableau(&class, TableauFlavor::GlIncreasing).unwrap();
            let v = find_reduced_tableau(&class, TableauFlavor::GlDecreasing).unwrap();
            assert_eq!(u.shape(), v.shape(), "shapes agree for {w}");
        }
    }
    for z in all_fpf_involutions(6) {
        let words = z.fpf_involution_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Symplectic).unwrap() {
            let u = find_reduced_tableau(&class, TableauFlavor::SpIncreasing).unwrap();
            let v = find_reduced_tableau(&class, TableauFlavor::SpDecreasing).unwrap();
            assert_eq!(u.shape(), v.shape(), "shapes agree for {z}");
        }
    }
    for z in all_involutions(4) {
        let words = z.involution_words().unwrap();
        let classes = partition_classes(&words, RelationFamily::Orthogonal).unwrap();
        let mut tableaux = std::collections::BTreeSet::new();
        for class in &classes {
            let u = find_reduced_tableau(class, TableauFlavor::OIncreasing).unwrap();
            let v = find_reduced_tableau(class, TableauFlavor::ODecreasing).unwrap();
            assert_eq!(u.shape(), v.shape(), "shapes agree for {z}");
            tableaux.insert(u);
        }
        // classes biject with increasing O-reduced tableaux
        assert_eq!(tableaux.len(), classes.len());
    }
    println!("PASS properties: reduced tableaux exist uniquely per class");
}

#[test]
fn highest_and_lowest_weight_formulas() {
    // gl: sources are reversed rows of the increasing tableau, sinks are the
    // bottom-up rows of the decreasing tableau
    for w in s_n(4) {
        let words = w.reduced_words_as_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Ordinary).unwrap() {
            let n = 3;
            let u = find_reduced_tableau(&class, TableauFlavor::GlIncreasing).unwrap();
            if u.num_rows() > n {
                continue;
            }
            let mut verts = Vec::new();
            for word in &class.members {
                verts.extend(decreasing_splits(word, n));
            }
            let g = CrystalGraph::from_vertices(CrystalKind::Gl, n, verts, true).unwrap();
            let sources = g.sources();
            assert_eq!(sources.len(), 1, "unique source in RF_n(T)");
            let mut factors = Vec::new();
            for i in 0..n {
                match u.rows().get(i) {
                    Some(r) => factors.push(PrimedWord::new(r.iter().rev().copied().collect())),
                    None => factors.push(PrimedWord::empty()),
                }
            }
            assert_eq!(
                g.vertices[sources[0] as usize],
                Factorization::new(factors).unwrap(),
                "highest weight formula"
            );
            let v = find_reduced_tableau(&class, TableauFlavor::GlDecreasing).unwrap();
            let sinks = g.sinks();
            assert_eq!(sinks.len(), 1, "unique sink in RF_n(T)");
            let mut factors = Vec::new();
            for i in (0..n).rev() {
                match v.rows().get(i) {
                    Some(r) => factors.push(PrimedWord::new(r.clone())),
                    None => factors.push(PrimedWord::empty()),
                }
            }
            assert_eq!(
                g.vertices[sinks[0] as usize],
                Factorization::new(factors).unwrap(),
                "lowest weight formula"
            );
        }
    }
    // q: the lowest weight element lists the decreasing tableau rows bottom
    // up; the highest weight is the shape
    for z in all_fpf_involutions(6) {
        let words = z.fpf_involution_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Symplectic).unwrap() {
            let n = 3;
            let v = find_reduced_tableau(&class, TableauFlavor::SpDecreasing).unwrap();
            if v.num_rows() > n {
                continue;
            }
            let mut verts = Vec::new();
            for word in &class.members {
                verts.extend(decreasing_splits(word, n));
            }
            let g = CrystalGraph::from_vertices(CrystalKind::Q, n, verts, true).unwrap();
            let sinks = g.sinks();
            assert_eq!(sinks.len(), 1, "unique q-lowest element for {z}");
            let mut factors = Vec::new();
            for i in (0..n).rev() {
                match v.rows().get(i) {
                    Some(r) => factors.push(PrimedWord::new(r.clone())),
                    None => factors.push(PrimedWord::empty()),
                }
            }
            assert_eq!(
                g.vertices[sinks[0] as usize],
                Factorization::new(factors).unwrap()
            );
            let sources = g.sources();
            assert_eq!(sources.len(), 1);
            let mut shape = v.shape().parts().to_vec();
            shape.resize(n, 0);
            assert_eq!(g.weight(sources[0]), shape, "highest weight is the shape");
        }
    }
    // q+: as above with a prime on each leading letter
    for z in all_involutions(4) {
        let words = z.involution_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Orthogonal).unwrap() {
            let n = 3;
            let v = find_reduced_tableau(&class, TableauFlavor::ODecreasing).unwrap();
            if v.num_rows() > n {
                continue;
            }
            let mut verts = Vec::new();
            for word in &class.members {
                verts.extend(decreasing_splits(word, n));
            }
            let g = CrystalGraph::from_vertices(CrystalKind::QPlus, n, verts, true).unwrap();
            let sinks = g.sinks();
            assert_eq!(sinks.len(), 1, "unique q+-lowest element for {z}");
            let mut factors = Vec::new();
            for i in (0..n).rev() {
                match v.rows().get(i) {
                    Some(r) => {
                        let mut letters = r.clone();
                        letters[0] = if letters[0].is_primed() {
                            letters[0]
                        } else {
                            letters[0].toggle_prime()
                        };
                        factors.push(PrimedWord::new(letters));
                    }
                    None => factors.push(PrimedWord::empty()),
                }
            }
            assert_eq!(
                g.vertices[sinks[0] as usize],
                Factorization::new(factors).unwrap()
            );
            let sources = g.sources();
            assert_eq!(sources.len(), 1);
            let mut shape = v.shape().parts().to_vec();
            shape.resize(n, 0);
            assert_eq!(g.weight(sources[0]), shape, "highest weight is the shape");
        }
    }
    println!("PASS properties: highest and lowest weight formulas");
}

#[test]
fn nonemptiness_code_criteria() {
    // RF+_n(w, A) nonempty iff the code of the inverse stays within n
    for w in s_n(4) {
        for n in 1..=4usize {
            let nonempty = w
                .reduced_words_as_words()
                .unwrap()
                .iter()
                .any(|word| !decreasing_splits(word, n).is_empty());
            let code_ok = w
                .inverse()
                .lehmer_code()
                .parts()
                .iter()
                .all(|&c| c as usize <= n);
            assert_eq!(nonempty, code_ok, "w = {w}, n = {n}");
        }
    }
    for z in all_fpf_involutions(6) {
        for n in 2..=4usize {
            let nonempty = z
                .fpf_involution_words()
                .unwrap()
                .iter()
                .any(|word| !decreasing_splits(word, n).is_empty());
            let code_ok = z
                .fpf_involution_code()
                .parts()
                .iter()
                .all(|&c| c as usize <= n);
            assert_eq!(nonempty, code_ok, "z = {z}, n = {n}");
        }
    }
    for z in all_involutions(4) {
        for n in 1..=3usize {
            let nonempty = z
                .involution_words()
                .unwrap()
                .iter()
                .any(|word| !decreasing_splits(word, n).is_empty());
            let code_ok = z.involution_code().parts().iter().all(|&c| c as usize <= n);
            assert_eq!(nonempty, code_ok, "z = {z}, n = {n}");
        }
    }
    println!("PASS properties: nonemptiness code criteria");
}

fn all_flags_bounded_by(max: usize) -> Vec<Flag> {
    // weakly increasing windows of length `max` with i <= phi_i <= max
    fn rec(pos: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Flag>) {
        if pos > max {
            out.push(Flag::new(cur.clone()).unwrap());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(pos);
        for b in lo..=max {
            cur.push(b);
            rec(pos + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn flag_recursion_exhaustive_s4() {
    let flags = all_flags_bounded_by(4);
    for w in s_n(4) {
        for phi in &flags {
            for n in 2..=4usize {
                let check = crystal_workbench::demazure::flag_recursion_check(&w, phi, n).unwrap();
                assert!(
                    check.pass,
                    "w = {w}, phi = {phi}, n = {n}: {}",
                    check.detail
                );
            }
        }
    }
    println!(
        "PASS properties: flag recursion exhaustive over S4 ({} flags)",
        flags.len()
    );
}

#[test]
fn boundedness_formulations_agree() {
    let mut rng = StdRng::seed_from_u64(0xb0b);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4usize);
        let mut factors = Vec::new();
        for _ in 0..n {
            let len = rng.gen_range(0..4);
            let mut letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..=8)).collect();
            letters.sort_unstable_by(|a, b| b.cmp(a));
            letters.dedup();
            factors.push(PrimedWord::from_ints(&letters));
        }
        let window: Vec<usize> = (1..=6).map(|i| i + rng.gen_range(0..3)).collect();
        let mut phi = vec![window[0]];
        for &b in &window[1..] {
            phi.push(b.max(*phi.last().unwrap()));
        }
        let phi = Flag::new(phi).unwrap();
        let c1 = is_bounded_cond1(&factors, &phi);
        let c2 = is_bounded_cond2(&factors, &phi);
        let c3 = is_bounded_cond3(&factors, &phi);
        assert_eq!(c1, c2);
        assert_eq!(c1, c3);
    }
    println!("PASS properties: boundedness formulations agree on 1000 samples");
}

#[test]
fn gl_bounded_sets_are_demazure_sums() {
    // every bounded crystal of a permutation in S4 decomposes into Demazure
    // crystals, matched through character and isomorphism
    let ctx = MatchContext::new();
    for w in s_n(4) {
        let report = decompose(
            &Generator::Word {
                w: w.clone(),
                marks: vec![],
            },
            4,
            &ctx,
        )
        .unwrap();
        assert_eq!(report.unmatched, 0, "w = {w}");
    }
    println!("PASS properties: gl bounded crystals are sums of Demazure crystals over S4");
}

#[test]
fn isomorphic_components_have_equal_characters() {
    let mut graphs = Vec::new();
    for z in all_involutions(4) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z), 3).unwrap();
        for comp in g.components() {
            graphs.push(g.component_graph(&comp));
        }
    }
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if graphs[i].is_isomorphic(&graphs[j]) {
                assert_eq!(graphs[i].character(), graphs[j].character());
            }
        }
    }
    println!(
        "PASS properties: isomorphism implies equal characters ({} components)",
        graphs.len()
    );
}

#[test]
fn word_set_regeneration() {
    // R^Sp(z) is spanned by braid moves plus the initial-letter exchange
    fn braid_neighbors(word: &PrimedWord, initial_pm: bool, primed: bool) -> Vec<PrimedWord> {
        let letters = word.letters();
        let mut out = Vec::new();
        for j in 0..letters.len().saturating_sub(1) {
            let (a, b) = (letters[j], letters[j + 1]);
            if (a.ceil() - b.ceil()).abs() > 1 {
                let mut w = letters.to_vec();
                w.swap(j, j + 1);
                out.push(PrimedWord::new(w));
            }
        }
        for j in 0..letters.len().saturating_sub(2) {
            let (a, b, c) = (letters[j], letters[j + 1], letters[j + 2]);
            // aba -> bab and (primed) a'ba -> bab'
            if a.ceil() == c.ceil() && (a.ceil() - b.ceil()).abs() == 1 {
                if !a.is_primed() && !b.is_primed() && !c.is_primed() {
                    let mut w = letters.to_vec();
                    w[j] = b;
                    w[j + 1] = a;
                    w[j + 2] = b;
                    out.push(PrimedWord::new(w));
                } else if primed && a.is_primed() && !b.is_primed() && !c.is_primed() {
                    let mut w = letters.to_vec();
                    w[j] = b;
                    w[j + 1] = c;
                    w[j + 2] = b.toggle_prime();
                    out.push(PrimedWord::new(w));
                } else if primed && !a.is_primed() && !b.is_primed() && c.is_primed() {
                    let mut w = letters.to_vec();
                    w[j] = b.toggle_prime();
                    w[j + 1] = a;
                    w[j + 2] = b;
                    out.push(PrimedWord::new(w));
                }
            }
        }
        if initial_pm && letters.len() >= 2 {
            let (a, b) = (letters[0].ceil(), letters[1].ceil());
            if b == a - 1 || b == a + 1 {
                let mut w = letters.to_vec();
                w[1] = Letter::unprimed(2 * a - b);
                out.push(PrimedWord::new(w));
            }
        }
        if primed && !letters.is_empty() {
            // initial prime toggle and unprimed initial swap
            let mut w = letters.to_vec();
            w[0] = w[0].toggle_prime();
            out.push(PrimedWord::new(w));
            if letters.len() >= 2 && !letters[0].is_primed() && !letters[1].is_primed() {
                let mut w = letters.to_vec();
                w.swap(0, 1);
                out.push(PrimedWord::new(w));
            }
        }
        out
    }
    for z in all_fpf_involutions(6) {
        let words: std::collections::BTreeSet<PrimedWord> =
            z.fpf_involution_words().unwrap().into_iter().collect();
        let seed = words.iter().next().unwrap().clone();
        let mut closure = std::collections::BTreeSet::new();
        let mut queue = vec![seed.clone()];
        closure.insert(seed);
        while let Some(w) = queue.pop() {
            for nb in braid_neighbors(&w, true, false) {
                if closure.insert(nb.clone()) {
                    queue.push(nb);
                }
            }
        }
        assert_eq!(closure, words, "regeneration for {z}");
    }
    for z in all_involutions(5) {
        let words: std::collections::BTreeSet<PrimedWord> =
            z.involution_words().unwrap().into_iter().collect();
        let seed = words.iter().next().unwrap().clone();
        let mut closure = std::collections::BTreeSet::new();
        let mut queue = vec![seed.clone()];
        closure.insert(seed);
        while let Some(w) = queue.pop() {
            for nb in braid_neighbors(&w, false, true) {
                if closure.insert(nb.clone()) {
                    queue.push(nb);
                }
            }
        }
        assert_eq!(closure, words, "regeneration for {z}");
    }
    println!("PASS properties: word sets regenerate from single words");
}

#[test]
fn highest_weights_always_bounded() {
    // gl-highest weight elements stay inside the bounded subset for any flag
    let flags = [
        Flag::standard(),
        Flag::new(vec![2, 2, 3]).unwrap(),
        Flag::new(vec![1, 3, 3]).unwrap(),
    ];
    for z in all_fpf_involutions(6) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3).unwrap();
        for k in 0..g.len() as u32 {
            let gl_highest = (1..3u8).all(|i| g.e_edge(k, OpIndex::Gl(i)).is_none());
            if gl_highest {
                for phi in &flags {
                    assert!(g.vertices[k as usize].is_bounded(phi));
                }
            }
        }
    }
    for z in all_involutions(4) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z.clone()), 3).unwrap();
        for k in 0..g.len() as u32 {
            let gl_highest = (1..3u8).all(|i| g.e_edge(k, OpIndex::Gl(i)).is_none());
            if gl_highest {
                for phi in &flags {
                    assert!(g.vertices[k as usize].is_bounded(phi));
                }
            }
        }
        // primed operators preserve the bounded subset
        let bounded = bounded_set(&Generator::Inv(z), 3, &Flag::standard()).unwrap();
        for a in &bounded.members {
            let id = g.vertex_id(a).unwrap();
            for i in 1..=3u8 {
                for t in [
                    g.f_edge(id, OpIndex::Prime(i)),
                    g.e_edge(id, OpIndex::Prime(i)),
                ]
                .into_iter()
                .flatten()
                {
                    assert!(
                        g.vertices[t as usize].is_bounded(&Flag::standard()),
                        "prime operators preserve boundedness"
                    );
                }
            }
        }
    }
    println!("PASS properties: highest weight elements are bounded under every flag");
}

#[test]
fn key_basis_spans_and_roundtrips() {
    // a seeded-random round trip through the key basis
    let mut rng = StdRng::seed_from_u64(1729);
    for _ in 0..200 {
        let mut expansion = std::collections::BTreeMap::new();
        for _ in 0..rng.gen_range(1..4) {
            let len = rng.gen_range(0..4);
            let parts: Vec<u32> = (0..len).map(|_| rng.gen_range(0..4)).collect();
            expansion
                .entry(WeakComposition::new(parts))
                .and_modify(|c: &mut BigInt| *c += 1)
                .or_insert_with(|| BigInt::from(rng.gen_range(1..4)));
        }
        let f = key_assemble(&expansion);
        assert_eq!(key_expand(&f), expansion);
    }
    // keys of degree 3 in 3 variables expand every degree-3 monomial
    for alpha in all_weak_compositions(3, 3) {
        if alpha.sum() != 3 {
            continue;
        }
        let e = key_expand(&crystal_workbench::poly::x_to(&alpha));
        assert_eq!(key_assemble(&e), crystal_workbench::poly::x_to(&alpha));
        for beta in e.keys() {
            assert!(beta.sum() == 3 && beta.length() <= 3);
        }
    }
    // P- and Q-keys of symmetric compositions expand with natural coefficients
    for alpha in all_weak_compositions(8, 4) {
        if !alpha.is_symmetric() {
            continue;
        }
        for f in [p_key(&alpha).unwrap(), q_key(&alpha).unwrap()] {
            let e = key_expand(&f);
            assert!(e.values().all(|c| !c.is_negative()), "alpha = {alpha}");
            assert_eq!(key_assemble(&e), f);
        }
    }
    println!("PASS properties: key basis spans and round-trips");
}

#[test]
fn characters_of_full_crystals_are_symmetric() {
    for z in all_fpf_involutions(6) {
        let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3).unwrap();
        let ch = g.character();
        for i in 1..3usize {
            assert_eq!(ch.swap_vars(i), ch, "symmetric character");
        }
    }
    println!("PASS properties: full crystal characters are symmetric");
}

#[test]
fn single_row_orthogonal_formula_matches() {
    // the closed formula for one-row orthogonal tableaux agrees with the
    // crystal matcher on every one-row class over I_6
    use crystal_workbench::demazure::{alpha_single_row_o, stable_alpha};
    let ctx = MatchContext::new();
    let mut seen = 0;
    for z in all_involutions(6) {
        let words = z.involution_words().unwrap();
        for class in partition_classes(&words, RelationFamily::Orthogonal).unwrap() {
            let t = find_reduced_tableau(&class, TableauFlavor::OIncreasing).unwrap();
            if t.num_rows() != 1 {
                continue;
            }
            seen += 1;
            let formula = alpha_single_row_o(&t).unwrap();
            let matched = stable_alpha(CrystalKind::QPlus, &t, &ctx).unwrap();
            assert_eq!(matched.as_ref(), Some(&formula), "tableau {t}");
        }
    }
    assert!(seen > 10);
    println!("PASS properties: single-row orthogonal formula on {seen} classes");
}

#[test]
fn demazure_operator_idempotence_on_random_subsets() {
    use crystal_workbench::demazure::{demazure_op, DemazureSubset};
    let w = Permutation::parse_one_line("21543").unwrap();
    let g = CrystalGraph::reduced_factorizations(&Generator::Word { w, marks: vec![] }, 3).unwrap();
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..50 {
        let members: std::collections::BTreeSet<Factorization> =
            g.vertices.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
        if members.is_empty() {
            continue;
        }
        let x = DemazureSubset::new(CrystalKind::Gl, 3, members);
        for i in 1..3 {
            let once = demazure_op(i, &x);
            assert_eq!(demazure_op(i, &once), once, "idempotence");
            assert!(once.members.is_superset(&x.members));
        }
    }
    // on Demazure sums the character transforms by the isobaric operator:
    // checked over all Demazure subsets of the dominant crystal, |lambda| <= 4
    use crystal_workbench::demazure::{demazure_closure, dominant_bounded_seed};
    for lambda in crystal_workbench::shapes::all_partitions_up_to(4) {
        if lambda.length() > 4 {
            continue;
        }
        let seed = dominant_bounded_seed(CrystalKind::Gl, &lambda, 4).unwrap();
        for w in s_n(4) {
            let x = demazure_closure(&w, &seed, false).unwrap();
            for i in 1..4 {
                let once = demazure_op(i, &x);
                assert_eq!(once.character(), x.character().isobaric_dd(i), "pi character law");
            }
        }
    }
    println!("PASS properties: Demazure operator laws on subsets");
}

#[test]
fn marked_inversions_inside_cycles() {
    use crystal_workbench::inv::marked_inversions;
    for z in all_involutions(5) {
        let cyc: std::collections::BTreeSet<(i32, i32)> = z.cycles().into_iter().collect();
        for w in z.involution_words().unwrap() {
            for pair in marked_inversions(&w).unwrap() {
                assert!(cyc.contains(&pair), "Marked({w}) inside Cyc({z})");
            }
        }
    }
    println!("PASS properties: marked inversions lie in the cycle set");
}

proptest! {
    #[test]
    fn prop_toggle_and_star_are_involutions(doubled in -40i32..40) {
        let l = Letter::from_doubled(doubled);
        prop_assert_eq!(l.toggle_prime().toggle_prime(), l);
        prop_assert_eq!(l.star().star(), l);
        prop_assert_eq!(l.ceil(), (doubled + 1).div_euclid(2));
    }

    #[test]
    fn prop_word_display_parse_roundtrip(values in proptest::collection::vec((-9i32..10, any::<bool>()), 0..8)) {
        let letters: Vec<Letter> = values
            .iter()
            .map(|&(v, primed)| if primed { Letter::primed(v) } else { Letter::unprimed(v) })
            .collect();
        let w = PrimedWord::new(letters);
        let shown = w.to_string();
        prop_assert_eq!(PrimedWord::parse(&shown).unwrap(), w);
    }

    #[test]
    fn prop_composition_parse_roundtrip(parts in proptest::collection::vec(0u32..9, 0..7)) {
        let c = WeakComposition::new(parts);
        let shown: Vec<String> = c.parts().iter().map(|p| p.to_string()).collect();
        prop_assert_eq!(WeakComposition::parse(&shown.join(",")).unwrap(), c.clone());
        // sorting twice is idempotent
        prop_assert_eq!(c.lambda().as_composition().lambda(), c.lambda());
    }

    #[test]
    fn prop_key_polynomials_have_unit_leading_term(parts in proptest::collection::vec(0u32..4, 0..4)) {
        let alpha = WeakComposition::new(parts);
        let f = key_polynomial(&alpha);
        prop_assert_eq!(f.coeff(&alpha), BigInt::from(1));
        let e = key_expand(&f);
        prop_assert_eq!(e.len(), 1);
    }
}
