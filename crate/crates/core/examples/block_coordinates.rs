//! Block coordinates, genus, translation classes and modular decomposition.

use maya_ladder::{Glyphs, MayaDiagram};

fn main() -> maya_ladder::Result<()> {
    let m: MayaDiagram = "B:(2,3,5,7,10)".parse()?;
    let b = m.block_coordinates();
    println!("{b} is the diagram {m}");
    println!("  genus {}, index {}", m.genus(), m.index());
    println!("  {}", m.render(-3, 11, Glyphs::Unicode)?);
    println!(
        "  filled runs of lengths {:?}",
        b.filled_run_lengths().collect::<Vec<_>>()
    );
    println!(
        "  flipping B gives M+1: {}",
        m.flip_set(b.coords()) == m.translate(1)
    );
    println!("  Frobenius symbol {}", m.frobenius_symbol());

    let (base, shift) = m.canonical_unlabelled();
    println!("  unlabelled representative {base}, shifted by {shift}");

    for n in 1..=3 {
        let parts = m.modular_decompose(n)?;
        let genera: Vec<usize> = parts.iter().map(MayaDiagram::genus).collect();
        let names: Vec<String> = parts.iter().map(MayaDiagram::to_string).collect();
        println!(
            "  {n}-modular components {}, genera {genera:?}",
            names.join(" ")
        );
    }
    Ok(())
}
