//! Recompute rows of the printed alpha tables from their tableaux.
//!
//! Run with: cargo run --release --example figure_tables

use crystal_workbench::crystal::CrystalKind;
use crystal_workbench::demazure::MatchContext;
use crystal_workbench::figures::{check_row, O_TABLE, SP_TABLE};

fn main() -> crystal_workbench::Result<()> {
    let ctx = MatchContext::new();
    println!("symplectic rows:");
    for (t, a) in SP_TABLE.iter().take(8) {
        let row = check_row(CrystalKind::Q, t, a, &ctx)?;
        println!(
            "  [{}] -> {:?} (printed {}) {}",
            row.tableau,
            row.computed,
            row.expected,
            if row.pass { "ok" } else { "MISMATCH" }
        );
    }
    println!("orthogonal rows:");
    for (t, a) in O_TABLE.iter().take(8) {
        let row = check_row(CrystalKind::QPlus, t, a, &ctx)?;
        println!(
            "  [{}] -> {:?} (printed {}) {}",
            row.tableau,
            row.computed,
            row.expected,
            if row.pass { "ok" } else { "MISMATCH" }
        );
    }
    println!(
        "({} symplectic and {} orthogonal rows total)",
        SP_TABLE.len(),
        O_TABLE.len()
    );
    Ok(())
}
