//! Word enumeration for all three flavors: reduced words, fpf-involution
//! words, and primed involution words, plus atom sets and marked inversions.
//!
//! Run with: cargo run --release --example words_and_atoms

use crystal_workbench::inv::{marked_inversions, FpfInvolution, Involution};
use crystal_workbench::perm::Permutation;
use crystal_workbench::words::PrimedWord;

fn main() -> crystal_workbench::Result<()> {
    let w = Permutation::parse_one_line("21543")?;
    let words = w.reduced_words_as_words()?;
    println!("{} reduced words of {w}; first few:", words.len());
    for word in words.iter().take(4) {
        println!("  {word}");
    }

    let z = FpfInvolution::parse("(1 5)(2 4)(3 6)")?;
    println!("\nfpf-involution words of {z}:");
    for word in z.fpf_involution_words()? {
        println!("  {word}");
    }
    println!("atoms: {:?}", z.atoms()?);

    let z = Involution::parse("(1 4)(2 3)")?;
    let words = z.involution_words()?;
    println!("\n{} primed involution words of {z}; a few:", words.len());
    for word in words.iter().take(6) {
        println!(
            "  {word}   marked inversions {:?}",
            marked_inversions(word)?
        );
    }

    let i = PrimedWord::parse("2 3' 1 2'")?;
    println!("\nMarked({i}) = {:?}", marked_inversions(&i)?);
    Ok(())
}
