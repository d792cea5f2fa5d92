//! Build circulant graphs, from (m, p) parameters or a raw generator set,
//! and inspect the result.
//!
//! ```text
//! cargo run --example construct_circulant
//! ```

use circdist::{CirculantSpec, CmpSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C(2,3): 6 vertices, generators {1,2,4,5} — the octahedron K_{2,2,2}.
    let spec = CmpSpec::new(2, 3)?;
    let generators = spec.generator_spec().expect("p >= 2");
    let graph = spec.build();
    println!(
        "C(2,3): n = {}, generators = {:?}",
        graph.n(),
        generators.generators()
    );
    println!("  degree of every vertex: {}", graph.degree(0));
    println!("  edges: {:?}", graph.edges());
    println!(
        "  complete multipartite parts: {:?}",
        graph.multipartite_part_sizes()
    );
    println!("  as JSON: {}", serde_json::to_string(&graph)?);

    // The same machinery takes any symmetric generator set.
    let pentagon = CirculantSpec::new(5, [1, 4])?.build();
    println!(
        "\ncirculant(5, {{1,4}}) is the 5-cycle: edges = {:?}",
        pentagon.edges()
    );

    // Generator sets are validated, not repaired; symmetrize on request.
    match CirculantSpec::new(8, [1, 2]) {
        Err(err) => println!("\nrejected {{1,2}} on 8 vertices: {err}"),
        Ok(_) => unreachable!(),
    }
    let repaired = CirculantSpec::symmetrize(8, [1, 2])?;
    println!("symmetrized closure: {:?}", repaired.generators());

    // Special shapes of the family: cliques, cycles, complete multipartite.
    for (m, p, name) in [(4, 1, "K_4"), (1, 8, "C_8"), (3, 2, "K_{3,3}")] {
        let g = CmpSpec::new(m, p)?.build();
        println!(
            "C({m},{p}) = {name}: n = {}, {} edges",
            g.n(),
            g.edge_count()
        );
    }
    Ok(())
}
