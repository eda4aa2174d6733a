//! Ladder operators and the order theorem.

use maya_ladder::algebra::integer;
use maya_ladder::{ladder, ladder_coefficient, ladder_order, schrodinger, MayaDiagram};

fn main() -> maya_ladder::Result<()> {
    for m in [
        MayaDiagram::trivial(),
        MayaDiagram::single_hole(2),
        "K:{1,2}".parse()?,
    ] {
        let t = schrodinger(&m);
        for n in [1, 2, -1] {
            let l = ladder(&m, n)?;
            let holds =
                l.operator.compose(&t) == t.plus_scalar(&integer(2 * n)).compose(&l.operator);
            println!(
                "{:<9} n={n:>2} flips {:<16} order {} (theorem {}) [L,T] = 2nL: {holds}",
                m.to_string(),
                format!("{:?}", l.flip_set),
                l.order,
                ladder_order(&m, n.abs())?
            );
        }
    }

    let m = MayaDiagram::single_hole(3);
    println!("\nL_1 on {m}: {}", ladder(&m, 1)?.operator);

    println!("\nladder coefficients on the trivial diagram, n = 2:");
    for k in 0..=5 {
        println!(
            "  C(2,{k}) = {}",
            ladder_coefficient(&MayaDiagram::trivial(), 2, k)?
        );
    }
    Ok(())
}
