//! Parse Maya diagrams in both text forms and draw them.
//!
//! Run with `cargo run --example render_diagram`.

use maya_ladder::{Glyphs, MayaDiagram};

fn main() -> maya_ladder::Result<()> {
    for text in ["K:{}", "K:{-2}", "K:{1,2}", "K:{-3,0,4}", "B:(2,3,5,7,10)"] {
        let m: MayaDiagram = text.parse()?;
        println!(
            "{text:>16}  {}  {}  index {:>2}",
            m.render(-6, 10, Glyphs::Unicode)?,
            m.render(-6, 10, Glyphs::Ascii)?,
            m.index()
        );
    }

    let m: MayaDiagram = "K:{-3,0,4}".parse()?;
    println!("\nflips on {m}:");
    for k in [-3, -1, 0, 5] {
        let f = m.flip(k);
        println!("  f_{k:<2} -> {f:<14} index {}", f.index());
    }
    let other: MayaDiagram = "K:{1,2}".parse()?;
    let edge = m.symmetric_difference(&other);
    println!(
        "edge {m} -> {other}: flip {edge:?}, lands on {}",
        m.flip_set(&edge)
    );
    Ok(())
}
