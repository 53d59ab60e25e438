//! Export a crystal graph to Graphviz DOT and to JSON.
//!
//! Run with: cargo run --release --example export_graphviz

use crystal_workbench::crystal::{CrystalGraph, Generator};
use crystal_workbench::inv::FpfInvolution;

fn main() -> crystal_workbench::Result<()> {
    let z = FpfInvolution::parse("(1 4)(2 3)")?;
    let g = CrystalGraph::reduced_factorizations(&Generator::Fpf(z), 3)?;
    println!("// default edge subset (indices 1..n-1 and b1)");
    print!("{}", g.to_dot(false));
    println!("\n// JSON schema");
    println!("{}", serde_json::to_string_pretty(&g.to_json()).unwrap());
    Ok(())
}
