//! Graphviz export with one color per module.
//!
//! ```text
//! cargo run --example dot_export > c23.dot && dot -Tsvg c23.dot -o c23.svg
//! ```

use circdist::{dot, CmpSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CmpSpec::new(2, 3)?;
    let graph = spec.build();
    let modules: Vec<usize> = (0..graph.n()).map(|v| v % spec.p()).collect();
    print!("{}", dot::to_dot(&graph, Some(&modules)));
    Ok(())
}
