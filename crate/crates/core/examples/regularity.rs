//! Compare the block-parity regularity test with a Sturm count of real zeros.

use maya_ladder::algebra::sturm_real_roots;
use maya_ladder::verify::subsets;
use maya_ladder::{is_regular, wronskian_polynomial, MayaDiagram};

fn main() -> maya_ladder::Result<()> {
    let mut agree = 0;
    let mut regular = Vec::new();
    let family = subsets(0, 6, 3);
    for set in &family {
        let m = MayaDiagram::from_index_set(set.clone())?;
        let zeros = sturm_real_roots(&wronskian_polynomial(&m)).expect("nonzero");
        if is_regular(&m) == (zeros == 0) {
            agree += 1;
        }
        if is_regular(&m) {
            regular.push(m.to_string());
        }
    }
    println!(
        "block parity and Sturm count agree on {agree}/{} diagrams",
        family.len()
    );
    println!("regular diagrams with index set in [0,6], at most 3 boxes:");
    for m in regular {
        println!("  {m}");
    }
    Ok(())
}
