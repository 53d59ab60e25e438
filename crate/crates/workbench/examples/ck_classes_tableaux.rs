//! Coxeter-Knuth classes for all four relation families and extraction of
//! the unique reduced tableau of each class.
//!
//! Run with: cargo run --release --example ck_classes_tableaux

use crystal_workbench::ck::{enumerate_class, neighbors, partition_classes, RelationFamily};
use crystal_workbench::inv::FpfInvolution;
use crystal_workbench::perm::Permutation;
use crystal_workbench::tableau::{find_reduced_tableau, TableauFlavor};
use crystal_workbench::words::PrimedWord;

fn main() -> crystal_workbench::Result<()> {
    let word = PrimedWord::parse_compact("1'21")?;
    println!(
        "primed neighbors of {word}: {:?}",
        neighbors(&word, RelationFamily::Primed)
    );

    let w = Permutation::parse_one_line("21543")?;
    let classes = partition_classes(&w.reduced_words_as_words()?, RelationFamily::Ordinary)?;
    println!("\nR({w}) splits into {} ordinary classes:", classes.len());
    for class in &classes {
        let u = find_reduced_tableau(class, TableauFlavor::GlIncreasing)?;
        let v = find_reduced_tableau(class, TableauFlavor::GlDecreasing)?;
        println!(
            "  {} words; increasing [{u}], decreasing [{v}]",
            class.len()
        );
    }

    let z = FpfInvolution::parse("(1 5)(2 4)(3 6)")?;
    let words = z.fpf_involution_words()?;
    let class = enumerate_class(&words[0], RelationFamily::Symplectic)?;
    println!("\nR^Sp({z}) is a single class of {} words", class.len());
    let u = find_reduced_tableau(&class, TableauFlavor::SpIncreasing)?;
    println!("increasing shifted tableau:\n{}", u.render_grid());
    Ok(())
}
