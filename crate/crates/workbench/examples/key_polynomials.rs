//! Key, P-key, Q-key, Schubert, and involution Schubert polynomials, with
//! expansion into the key basis.
//!
//! Run with: cargo run --release --example key_polynomials

use crystal_workbench::inv::{FpfInvolution, Involution};
use crystal_workbench::perm::Permutation;
use crystal_workbench::poly::{
    inv_schubert_o, inv_schubert_sp, key_expand, key_polynomial, p_key, q_key, schubert,
};
use crystal_workbench::shapes::WeakComposition;

fn main() -> crystal_workbench::Result<()> {
    let alpha = WeakComposition::parse("1,0,2,1")?;
    println!("kappa_{alpha} = {}", key_polynomial(&alpha).render());

    let alpha = WeakComposition::parse("3,1,4,3")?;
    let p = p_key(&alpha)?;
    println!("\nP-key of {alpha} = {}", p.render());
    for (beta, c) in key_expand(&p) {
        println!("  key coefficient at {beta}: {c}");
    }

    let alpha = WeakComposition::parse("2,0,3,1")?;
    println!("\nQ-key of {alpha} = {}", q_key(&alpha)?.render());

    let w = Permutation::parse_one_line("21543")?;
    let s = schubert(&w)?;
    println!("\nSchubert polynomial of {w}: {} terms", s.num_terms());
    println!("restricted to 3 variables: {}", s.restrict_vars(3).render());

    let z = Involution::parse("(1 4)(3 6)")?;
    let f = inv_schubert_o(&z)?;
    println!(
        "\northogonal involution Schubert of {z}: {} terms",
        f.num_terms()
    );
    println!("restricted to 2 variables: {}", f.restrict_vars(2).render());

    let z = FpfInvolution::parse("(1 5)(2 3)(4 7)(6 8)")?;
    let f = inv_schubert_sp(&z)?;
    println!(
        "\nsymplectic involution Schubert of {z}: {} terms",
        f.num_terms()
    );
    Ok(())
}
