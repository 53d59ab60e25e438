//! The tensor-power oracle: words over [n] with both crystal-operator rules,
//! and a Demazure subset whose character is a key polynomial.
//!
//! Run with: cargo run --release --example tensor_demazure

use crystal_workbench::poly::key_polynomial;
use crystal_workbench::shapes::WeakComposition;
use crystal_workbench::tensor;
use std::collections::BTreeSet;

fn main() {
    let seed: BTreeSet<tensor::TensorWord> = [vec![3, 2, 1, 1]].into_iter().collect();
    let set = tensor::demazure_word(4, &[2, 1, 3], &seed);
    println!(
        "Demazure subset of the fourth tensor power ({} vertices):",
        set.len()
    );
    for b in &set {
        println!("  {:?}", b);
    }
    let ch = tensor::character(4, &set);
    assert_eq!(ch, key_polynomial(&WeakComposition::parse("1021").unwrap()));
    println!("character = {}", ch.render());
}
