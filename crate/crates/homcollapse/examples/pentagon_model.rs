//! The pentagon with one vertex deleted, modeled two ways.
//!
//! Deleting vertex 3 from the 5-cycle leaves the path 2-1-5-4 plus a
//! constraint remembered from the deleted vertex: the labels of its old
//! neighbors 2 and 4 must not cover all colors, or no color would remain
//! for 3. `hom_i_cells` enumerates exactly these constrained cells.
//!
//! The same data can be written as a 2x2 array of color sets
//! (A, B; C, D) = (labels of 1, 2; labels of 5, 4). The constrained
//! pentagon complex then matches the array poset L (disjoint rows and
//! A disjoint from C), and the constrained open path 1-2-3-4-5 matches
//! the larger poset K (no condition across the rows).

use std::collections::BTreeSet;

use homcollapse::graph::Graph;
use homcollapse::hom::hom_i_cells;
use homcollapse::mkls::{ArrayPoset, Family};
use homcollapse::set::LabelSet;

fn main() {
    let n = 3;
    let c5 = Graph::named("c5").unwrap();
    let p4 = Graph::named("p4").unwrap();

    let pentagon = hom_i_cells(&c5, LabelSet::singleton(3), n, 100_000).unwrap();
    let path = hom_i_cells(&p4, LabelSet::singleton(3), n, 100_000).unwrap();
    println!("constrained pentagon: {} cells on vertices {:?}", pentagon.len(), pentagon.domain());
    println!("constrained path:     {} cells on vertices {:?}", path.len(), path.domain());

    let l = ArrayPoset::build(n, Family::L, 100_000).unwrap();
    let k = ArrayPoset::build(n, Family::K, 100_000).unwrap();
    assert_eq!(pentagon.len(), l.len());
    assert_eq!(path.len(), k.len());

    // The match is a bijection, not just a count: rewrite each constrained
    // cell (X1, X2, X4, X5) as the array (X1, X2; X5, X4) and compare.
    let rewrite = |lines: Vec<String>| -> BTreeSet<String> {
        lines
            .into_iter()
            .map(|line| {
                let parts: Vec<&str> = line.split('|').collect();
                let [x1, x2, x4, x5] = parts[..] else { panic!("four vertices") };
                format!("{x1}|{x2}|{x5}|{x4}")
            })
            .collect()
    };
    let pentagon_cells = rewrite(pentagon.dump_lines());
    let l_cells: BTreeSet<String> = l.dump_lines().into_iter().collect();
    assert_eq!(pentagon_cells, l_cells);
    println!("pentagon cells == L cells (as arrays)");

    let path_cells = rewrite(path.dump_lines());
    let k_cells: BTreeSet<String> = k.dump_lines().into_iter().collect();
    assert_eq!(path_cells, k_cells);
    println!("path cells     == K cells (as arrays)");

    // The mirror of the pentagon that fixes vertex 3 swaps 1 with 5 and
    // 2 with 4; on arrays it swaps the two rows. Both sides carry it, and
    // on L it acts freely: a fixed cell would need equal disjoint rows.
    let inv = pentagon.involution().unwrap();
    let fixed = inv.iter().enumerate().filter(|&(i, &j)| i == j).count();
    println!("mirror symmetry: {fixed} of {} pentagon cells fixed (free action)", pentagon.len());
    assert_eq!(fixed, 0);
    assert_eq!(l.fixed_ids().len(), 0);
}
