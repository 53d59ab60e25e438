//! Demazure operators and the Demazure crystals indexed by weak
//! compositions; their characters are key, P-key, and Q-key polynomials.
//!
//! Run with: cargo run --release --example demazure_crystals

use crystal_workbench::crystal::CrystalKind;
use crystal_workbench::demazure::{brf_alpha, demazure_op, dominant_bounded_seed};
use crystal_workbench::poly::{key_polynomial, p_key};
use crystal_workbench::shapes::{Partition, WeakComposition};

fn main() -> crystal_workbench::Result<()> {
    // closing the highest-weight singleton under lowering operators
    let seed = dominant_bounded_seed(CrystalKind::Gl, &Partition::from_parts(&[2, 1]), 3)?;
    println!("seed: {:?}", seed.members);
    let once = demazure_op(2, &seed);
    println!(
        "after D_2: {} vertices, character {}",
        once.len(),
        once.character().render()
    );

    // a gl Demazure crystal and its key polynomial
    let alpha = WeakComposition::parse("1,0,2,1")?;
    let set = brf_alpha(CrystalKind::Gl, &alpha, 4)?;
    assert_eq!(set.character(), key_polynomial(&alpha).restrict_vars(4));
    println!("\ngl Demazure crystal of {alpha}: {} vertices", set.len());

    // a symplectic Demazure crystal and its P-key polynomial
    let alpha = WeakComposition::parse("4,3,3,1")?;
    let set = brf_alpha(CrystalKind::Q, &alpha, 3)?;
    println!("\nq Demazure crystal of {alpha}: {} vertices", set.len());
    for m in &set.members {
        println!("  {m}");
    }
    assert_eq!(set.character(), p_key(&alpha)?.restrict_vars(3));
    println!("character matches the restricted P-key polynomial");
    Ok(())
}
