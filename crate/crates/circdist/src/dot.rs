//! Graphviz DOT export.

use crate::graph::Graph;

/// Colors assigned to module indices, cycling when there are more modules
/// than names.
pub const MODULE_COLORS: [&str; 10] = [
    "black", "red", "green", "blue", "white", "orange", "purple", "cyan", "magenta", "gold",
];

/// Renders an undirected DOT document. Node ids are the vertex integers;
/// when `module_of` is given, each node gets a `color` attribute keyed by
/// its module index, so vertices of the same module share a color.
pub fn to_dot(g: &Graph, module_of: Option<&[usize]>) -> String {
    if let Some(modules) = module_of {
        assert_eq!(modules.len(), g.n(), "one module index per vertex");
    }
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        match module_of {
            Some(modules) => {
                let color = MODULE_COLORS[modules[v] % MODULE_COLORS.len()];
                out.push_str(&format!("  {v} [color={color}];\n"));
            }
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
