//! Build the crystal of decreasing factorizations for each flavor and read
//! off components, characters, and highest weights.
//!
//! Run with: cargo run --release --example build_crystal

use crystal_workbench::crystal::{CrystalGraph, Generator};
use crystal_workbench::inv::{FpfInvolution, Involution};
use crystal_workbench::perm::Permutation;

fn main() -> crystal_workbench::Result<()> {
    // a gl crystal with marked inversions
    let w = Permutation::parse_one_line("21543")?;
    let marks = vec![(1, 2), (3, 4), (3, 5)];
    let g = CrystalGraph::reduced_factorizations(&Generator::Word { w, marks }, 3)?;
    println!(
        "gl crystal: {} vertices, {} components",
        g.len(),
        g.components().len()
    );
    g.check_axioms()?;

    // the queer crystal of a dominant fpf-involution
    let z = FpfInvolution::parse("(1 5)(2 3)(4 6)")?;
    let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 4)?;
    let sources = g.sources();
    println!(
        "\nq crystal: {} vertices, {} components, highest weight {:?}",
        g.len(),
        g.components().len(),
        g.weight(sources[0])
    );
    println!("character: {}", g.character().render());

    // the extended queer crystal of a dominant involution
    let z = Involution::parse("(1 3)(2 4)")?;
    let g = CrystalGraph::reduced_factorizations(&Generator::Inv(z), 3)?;
    println!(
        "\nq+ crystal: {} vertices, {} components",
        g.len(),
        g.components().len()
    );
    for &k in g.sources().iter() {
        println!("highest weight vertex: {}", g.vertices[k as usize]);
    }
    Ok(())
}
