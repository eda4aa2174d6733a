//! The rational extension of a diagram: potential, Hamiltonian and eigenfunctions.

use maya_ladder::algebra::integer;
use maya_ladder::{bound_states, exceptional_hermite, MayaDiagram, RationalExtension};

fn main() -> maya_ladder::Result<()> {
    let m: MayaDiagram = "K:{1,2}".parse()?;
    let ext = RationalExtension::new(&m);
    println!("diagram {m}, H = {}", ext.h);
    println!("potential U(x) = {}", ext.potential);
    println!("Hamiltonian T = {}", ext.hamiltonian);
    println!("bound states in [0, 8]: {:?}", bound_states(&m, 0, 8)?);
    for k in -2..=4 {
        let state = ext.eigenfunction(k);
        let holds =
            ext.hamiltonian.apply(&state.function) == state.function.scale(&integer(2 * k + 1));
        let kind = if state.bound {
            "bound"
        } else if state.epsilon > 0 {
            "virtual"
        } else {
            "not in spectrum"
        };
        println!(
            "  k={k:>2} eps={:>2} {kind:<15} T psi = {:>2} psi: {holds}",
            state.epsilon,
            2 * k + 1
        );
    }
    for k in [0, 3, 4] {
        println!(
            "exceptional polynomial at k={k}: {}",
            exceptional_hermite(&m, k)?
        );
    }
    Ok(())
}
