//! The explicit (m+1)-labeling that pins every vertex of C(m,p) in place,
//! and the neighborhood label profiles that make vertex 0 recognizable.
//!
//! ```text
//! cargo run --example explicit_labeling
//! ```

use circdist::{explicit_labeling, is_distinguishing, neighborhood_label_signature, CmpSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CmpSpec::new(3, 6)?;
    let graph = spec.build();
    let labeling = explicit_labeling(&spec)?;

    println!("C(3,6), n = {}:", graph.n());
    for band in 0..spec.m() {
        let row: Vec<usize> = (0..spec.p())
            .map(|i| labeling.get(band * spec.p() + i))
            .collect();
        println!("  band {band}: labels {row:?}");
    }
    println!("labels used: {} (= m + 1)", labeling.distinct_count());
    println!("distinguishing: {}", is_distinguishing(&graph, &labeling));

    // Vertex 0 is the only 1-labeled vertex with this neighborhood profile,
    // which anchors the whole rigidity argument.
    println!("\nneighborhood label profiles:");
    for v in [0, 1, spec.p() / 2, 2 * spec.p() - 1] {
        println!(
            "  vertex {v:>2} (label {}): {:?}",
            labeling.get(v),
            neighborhood_label_signature(&graph, &labeling, v)
        );
    }

    // p = 4 is genuinely different: C(m,4) collapses to K_{2m,2m} and no
    // (m+1)-labeling can work.
    match explicit_labeling(&CmpSpec::new(3, 4)?) {
        Err(err) => println!("\nC(3,4): {err}"),
        Ok(_) => unreachable!(),
    }

    // For p in {2,3} the graph is complete multipartite and each module
    // instead receives a distinct m-subset of the m+1 labels.
    let small = CmpSpec::new(3, 3)?;
    let witness = explicit_labeling(&small)?;
    println!(
        "\nC(3,3) witness: {:?} — distinguishing: {}",
        witness.labels(),
        is_distinguishing(&small.build(), &witness)
    );
    Ok(())
}
