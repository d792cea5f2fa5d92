//! No labeling of C(m,p) with only m labels is distinguishing: this
//! example constructs the preserving automorphism explicitly instead of
//! searching for it.
//!
//! ```text
//! cargo run --example break_small_labelings
//! ```

use circdist::{break_labeling, is_automorphism, label_sort, reflection, CmpSpec, Labeling};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CmpSpec::new(2, 5)?;
    let graph = spec.build();

    // Case 1: two equal labels inside one module give a transposition.
    let constant = Labeling::constant(10);
    let sigma = break_labeling(&spec, &constant)?;
    println!("constant labeling broken by {sigma}");

    // Case 2: every module rainbow. Sort each module by label, reflect the
    // bands, unsort: the composite moves vertex 0 into the mirror module
    // while matching labels everywhere.
    let rainbow = Labeling::new(2, vec![1, 2, 2, 1, 2, 2, 1, 1, 2, 1])?;
    let delta = label_sort(&spec, &rainbow)?;
    let psi = reflection(&spec)?;
    let sigma = break_labeling(&spec, &rainbow)?;
    println!("\nrainbow labeling {:?}", rainbow.labels());
    println!("  sort  delta = {delta}");
    println!("  flip  psi   = {psi}");
    println!("  breaker delta^-1 . psi . delta = {sigma}");
    assert_eq!(sigma, delta.inverse().compose(&psi)?.compose(&delta)?);
    println!("  automorphism: {}", is_automorphism(&graph, &sigma));
    println!(
        "  preserves labels: {}",
        (0..10).all(|v| rainbow.get(sigma.apply(v)) == rainbow.get(v))
    );
    println!("  moves vertex 0 to {}", sigma.apply(0));

    // Both cases together cover every possible m-labeling.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let trials = 2000;
    let broken = (0..trials)
        .filter(|_| {
            let c = circdist::random_labeling(10, 2, &mut rng);
            let sigma = break_labeling(&spec, &c).expect("every 2-labeling breaks");
            !sigma.is_identity() && (0..10).all(|v| c.get(sigma.apply(v)) == c.get(v))
        })
        .count();
    println!("\nrandom 2-labelings broken: {broken}/{trials}");
    Ok(())
}
