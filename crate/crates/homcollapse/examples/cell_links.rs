//! Check every cell link in the poset K against its predicted shape, and
//! watch the same machinery flag a complex that is not a manifold.
//!
//! For a cell of K with disjoint first sets, the part of the link above
//! the cell is a join of sphere pairs with one of the disks F(k, l): each
//! color is inert, a free pair, a tilting pair, or a full square, and the
//! counts determine the shape. The part below is the boundary of the
//! cell seen as a product of simplices.

use homcollapse::graph::Graph;
use homcollapse::hom::hom_cells;
use homcollapse::links::{classify, upper_shape, verify_cell_links};
use homcollapse::mkls::{ArrayPoset, Family};

fn main() {
    let n = 3;
    let kp = ArrayPoset::build(n, Family::K, 100_000).unwrap();

    let mut checked = 0;
    for idx in 0..kp.len() {
        let failures = verify_cell_links(&kp, idx, 10_000_000).unwrap();
        assert!(failures.is_empty(), "cell {idx}: {failures:?}");
        checked += 1;
    }
    println!("all {checked} cell links of K at n = {n} match their predictions");

    // One cell spelled out: ({1}, {2}; {3}, {2}) leaves color handling
    // visible. Its rows are disjoint, A = {1} and C = {3} do not meet.
    let idx = kp
        .cells
        .iter()
        .position(|c| c.to_line() == "1|2|3|2")
        .expect("cell present");
    let cell = kp.cells[idx];
    let shape = classify(cell, n).unwrap();
    println!(
        "cell 1|2|3|2: {} free pairs, {} tilting pairs, {} squares",
        shape.free, shape.tilting, shape.squares
    );
    let upper = upper_shape(cell, n);
    println!(
        "upper link: S⁰ joined {} times with F({}, {})",
        upper.spheres, upper.k, upper.l
    );

    // Uniform links make K a manifold away from its boundary. Path
    // complexes are different: Hom(p4, K_n) mixes maximal dimensions,
    // so no such uniform description can exist.
    for colors in [3, 4] {
        let hom = hom_cells(&Graph::named("p4").unwrap(), colors, 1_000_000).unwrap();
        println!(
            "Hom(p4, K{colors}): maximal cells in dimensions {:?}, not pure",
            hom.maximal_dims()
        );
        assert!(hom.maximal_dims().len() > 1);
    }
}
