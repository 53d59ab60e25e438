//! Small-scale decomposition conjecture campaigns; the full desk-scale tiers
//! run through the acceptance suite or the workbench CLI.
//!
//! Run with: cargo run --release --example verify_conjectures

use crystal_workbench::verify::{
    negative_control, verify_o_conjecture, verify_sp_conjecture, verify_vexillary,
};

fn main() -> crystal_workbench::Result<()> {
    for report in [
        verify_sp_conjecture(6, None, None)?,
        verify_o_conjecture(5, None, None)?,
        verify_vexillary(5, None)?,
    ] {
        println!(
            "{} over {}: {} inputs, {} failures ({} ms)",
            report.target,
            report.range,
            report.outcomes.len(),
            report.failures,
            report.total_millis
        );
    }
    let (pass, detail) = negative_control()?;
    println!(
        "negative control: {} ({detail})",
        if pass { "pass" } else { "FAIL" }
    );
    Ok(())
}
