//! Intertwiners between extensions, their composition and first-order factorization.

use maya_ladder::intertwine::{ascending_factorization, chain_operator};
use maya_ladder::{
    compose_arrows, intertwiner, schrodinger, verify_functor, Arrow, IntegerMultiset, MayaDiagram,
};

fn main() -> maya_ladder::Result<()> {
    let m = MayaDiagram::trivial();
    let a = intertwiner(&m, &[1, 2])?;
    let target = m.flip_set(&[1, 2]);
    println!("A from {m} to {target}: {a}");
    let holds = a.compose(&schrodinger(&m)) == schrodinger(&target).compose(&a);
    println!("A T_M = T_target A: {holds}");

    let first = Arrow::new(m.clone(), IntegerMultiset::from_elements([1]));
    let second = Arrow::new(first.target(), IntegerMultiset::from_elements([2, 0]));
    let both = compose_arrows(&second, &first)?;
    println!("\n{second} after {first} is {both}");
    println!(
        "operator of the composite equals the composite of operators: {}",
        both.operator() == second.operator().compose(&first.operator())
    );

    let k1 = IntegerMultiset::from_elements([0, 1]);
    let k2 = IntegerMultiset::from_elements([1, -1]);
    println!(
        "functor law with overlapping flips {k1} then {k2}: {}",
        verify_functor(&m, &k1, &k2)
    );

    let chain = ascending_factorization(&m, &[-1, 1, 2])?;
    for arrow in &chain {
        println!("  step {arrow}");
    }
    println!(
        "chain reproduces the direct intertwiner: {}",
        chain_operator(&chain) == intertwiner(&m, &[-1, 1, 2])?
    );
    Ok(())
}
