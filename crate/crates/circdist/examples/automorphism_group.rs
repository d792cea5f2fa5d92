//! Enumerate automorphism groups and meet the structured automorphisms of
//! C(m,p): rotations, module permutations, and the band reflection.
//!
//! ```text
//! cargo run --example automorphism_group
//! ```

use circdist::{
    enumerate_automorphisms, is_automorphism, module_permutation, reflection, CmpSpec, Permutation,
    DEFAULT_AUT_CAP,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CmpSpec::new(2, 5)?;
    let graph = spec.build();
    let aut = enumerate_automorphisms(&graph, DEFAULT_AUT_CAP)?;
    println!("|Aut(C(2,5))| = {}", aut.order());
    println!("group axioms verified exhaustively: {}", aut.is_group());

    // Every permutation inside one module extends to an automorphism.
    let partition = spec.module_partition()?;
    let mut per_block = vec![Permutation::identity(2); 5];
    per_block[0] = Permutation::transposition(2, 0, 1);
    let swap = module_permutation(&partition, &per_block)?;
    println!(
        "\nswap of module M_0 = {swap} is an automorphism: {}",
        is_automorphism(&graph, &swap)
    );

    // So are the rotation and the band reflection.
    let rot = Permutation::rotation(10, 1);
    let psi = reflection(&spec)?;
    println!("rotation {rot} in Aut: {}", aut.contains(&rot));
    println!("reflection {psi} in Aut: {}", aut.contains(&psi));
    println!(
        "reflection is an involution: {}",
        psi.compose(&psi)?.is_identity()
    );

    // (m!)^p block permutations times the 2p dihedral symmetries of the
    // quotient cycle embed into the group; for C(2,5) that is all of it.
    println!("\n2^5 * 10 = 320 = |Aut|: {}", aut.order() == 320);

    // The cap turns oversized groups into an error instead of a hang.
    match enumerate_automorphisms(&graph, 100) {
        Err(err) => println!("with cap 100: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
