//! Syzygies: the n-th power of the elementary ladder against the n-ladder.

use maya_ladder::{syzygy, MayaDiagram};

fn main() -> maya_ladder::Result<()> {
    for m in [
        MayaDiagram::trivial(),
        MayaDiagram::single_hole(2),
        MayaDiagram::single_hole(3),
    ] {
        for n in 1..=3 {
            let s = syzygy(&m, n)?;
            println!("{:<8} n={n} multiset {}", m.to_string(), s.multiset);
            println!(
                "         odd part {:?}, even part {}",
                s.odd_part, s.even_part
            );
            println!(
                "         p(T) = {}, roots {:?}, identity holds: {}",
                s.polynomial(),
                s.polynomial_roots,
                s.identity_holds
            );
        }
    }
    Ok(())
}
