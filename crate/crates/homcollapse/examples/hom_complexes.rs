//! Build homomorphism complexes of small graphs into complete graphs and
//! print their shape: cell counts, vertex counts, maximal dimensions.
//!
//! A cell assigns a nonempty color set to every vertex of the source graph
//! so that any choice of one color per vertex is a proper coloring.

use homcollapse::graph::Graph;
use homcollapse::hom::hom_cells;

fn main() {
    for (name, colors) in [
        ("edge", 3),
        ("c4", 3),
        ("c5", 3),
        ("c5", 4),
        ("c5", 5),
        ("p4", 3),
        ("k3", 3),
    ] {
        let g = Graph::named(name).unwrap();
        let hom = hom_cells(&g, colors, 10_000_000).unwrap();
        println!(
            "Hom({name}, K{colors}): {} cells, {} vertices, maximal dims {:?}",
            hom.len(),
            hom.zero_cell_count(),
            hom.maximal_dims()
        );
    }

    // A multimorphism from an edge into K3 is two disjoint nonempty subsets
    // of the colors: six ordered pairs of singletons, six with a doubleton.
    let hom = hom_cells(&Graph::named("edge").unwrap(), 3, 1000).unwrap();
    println!("\nAll cells of Hom(edge, K3):");
    for line in hom.dump_lines() {
        println!("  {line}");
    }

    // The dump orders cells so that every face precedes its cofaces, which
    // makes the index order a linear extension of the face relation.
    let poset = hom.poset(100_000).unwrap();
    assert!(poset.is_linear_extension_order());
    println!("\ncell order is a linear extension of the face relation");
}
