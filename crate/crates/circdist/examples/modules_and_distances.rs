//! The module structure of C(m,p): p stable modules of size m, and the
//! cycle-like distance profile that survives the blow-up.
//!
//! ```text
//! cargo run --example modules_and_distances
//! ```

use circdist::CmpSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CmpSpec::new(3, 5)?;
    let graph = spec.build();
    let partition = spec.module_partition()?;

    println!(
        "C(3,5) on {} vertices splits into {} modules:",
        graph.n(),
        partition.block_count()
    );
    for (i, block) in partition.blocks().iter().enumerate() {
        println!(
            "  M_{i} = {:?}  stable: {}  module: {}",
            block,
            graph.is_stable(block),
            graph.is_module(block),
        );
    }

    // Vertices of one module are interchangeable: distance 2 apart and at
    // equal distance from everything outside.
    let m0 = partition.block(0);
    println!(
        "\nd(0,5) = {:?}, d(0,10) = {:?}",
        graph.distance(m0[0], m0[1]),
        graph.distance(m0[0], m0[2])
    );

    // Contracting the modules leaves a plain cycle, so distances from 0
    // ramp up to p/2 and back down.
    let dist = graph.bfs_distances(0);
    print!("distances from 0 to the first band:");
    for i in 0..spec.p() {
        print!(" d(0,{i})={}", dist[i].unwrap());
    }
    println!();

    // Arbitrary vertex sets are checked against the module predicate.
    println!("\nis_module({{0,1}}) = {}", graph.is_module(&[0, 1]));
    println!(
        "is_module({{2}})   = {} (singletons always are)",
        graph.is_module(&[2])
    );
    Ok(())
}
