//! Flags: bounded subsets for arbitrary flags, the one-step flag recursion,
//! and transporting a stable composition to any rank and flag.
//!
//! Run with: cargo run --release --example flagged_crystals

use crystal_workbench::crystal::Generator;
use crystal_workbench::demazure::{alpha_transport, bounded_set, flag_recursion_check};
use crystal_workbench::perm::Permutation;
use crystal_workbench::shapes::{Flag, WeakComposition};

fn main() -> crystal_workbench::Result<()> {
    let w = Permutation::parse_one_line("21543")?;
    let gen = Generator::Word {
        w: w.clone(),
        marks: vec![],
    };

    for phi in [
        Flag::standard(),
        Flag::new(vec![2, 2, 3])?,
        Flag::new(vec![3, 3, 3])?,
    ] {
        let set = bounded_set(&gen, 3, &phi)?;
        println!(
            "flag {phi}: {} bounded factorizations, character {}",
            set.len(),
            set.character().render()
        );
        let check = flag_recursion_check(&w, &phi, 3)?;
        println!(
            "  recursion check: {} ({})",
            if check.pass { "pass" } else { "FAIL" },
            check.detail
        );
    }

    let alpha = WeakComposition::parse("2,0,2")?;
    let phi = Flag::new(vec![2, 2, 4, 4])?;
    for n in 2..=4 {
        println!(
            "alpha_{n} under flag {phi}: {}",
            alpha_transport(&alpha, n, &phi)
        );
    }
    Ok(())
}
