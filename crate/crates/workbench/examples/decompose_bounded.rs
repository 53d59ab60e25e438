//! Decompose a bounded factorization crystal into full subcrystals, match
//! each against a Demazure crystal, and emit the JSON report.
//!
//! Run with: cargo run --release --example decompose_bounded

use crystal_workbench::crystal::Generator;
use crystal_workbench::demazure::{decompose, MatchContext};
use crystal_workbench::inv::{FpfInvolution, Involution};

fn main() -> crystal_workbench::Result<()> {
    let ctx = MatchContext::new();

    let z = FpfInvolution::parse("(1 5)(2 3)(4 7)(6 8)")?;
    let report = decompose(&Generator::Fpf(z), 3, &ctx)?;
    println!("symplectic decomposition of {}:", report.involution);
    for c in &report.components {
        println!(
            "  tableau {} shape {:?} alpha {:?} ({} vertices)",
            c.tableau, c.shape, c.alpha, c.size
        );
    }

    let z = Involution::parse("(1 4)(2 5)(6 8)")?;
    let report = decompose(&Generator::Inv(z), 7, &ctx)?;
    println!("\northogonal decomposition of {}:", report.involution);
    for c in &report.components {
        println!(
            "  tableau {} alpha {:?} ({} vertices)",
            c.tableau, c.alpha, c.size
        );
    }
    println!(
        "\nfull JSON report:\n{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
    Ok(())
}
