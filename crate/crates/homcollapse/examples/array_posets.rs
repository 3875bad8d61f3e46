//! The four nested array posets M, K, L, S and how they sit inside each
//! other.
//!
//! A cell is a 2x2 array of nonempty color sets (A, B; C, D) with each row
//! disjoint. M imposes nothing else. K asks that B and D leave some color
//! uncovered, L additionally makes A and C disjoint, and S is the diagonal
//! where the two rows agree. Swapping the rows is an order-preserving
//! involution of all four.

use homcollapse::mkls::{build_mkls, ArrayCell};
use homcollapse::set::LabelSet;

fn main() {
    for n in [3, 4] {
        let fam = build_mkls(n, 10_000_000).unwrap();
        println!(
            "n = {n}:  |M| = {:<6} |K| = {:<6} |L| = {:<6} |S| = {}",
            fam.m.len(),
            fam.k.len(),
            fam.l.len(),
            fam.s.len()
        );
    }

    let fam = build_mkls(3, 100_000).unwrap();

    // Containments: S and L sit inside K, K sits inside M. S and L are
    // disjoint, a diagonal cell has equal rows and L forbids that.
    for cell in &fam.s.cells {
        assert!(fam.k.index_of(*cell).is_some());
        assert!(fam.l.index_of(*cell).is_none());
    }
    for cell in &fam.l.cells {
        assert!(fam.k.index_of(*cell).is_some());
    }
    for cell in &fam.k.cells {
        assert!(fam.m.index_of(*cell).is_some());
    }
    println!("\nS ⊂ K ⊂ M,  L ⊂ K,  S ∩ L = ∅");

    // The fixed cells of the row swap in K are exactly the diagonal.
    let fixed = fam.k.fixed_ids();
    assert_eq!(fixed.len(), fam.s.len());
    assert!(fixed.iter().all(|&i| fam.k.cells[i].is_diagonal()));
    println!("row swap fixes exactly the {} diagonal cells of K", fixed.len());

    // K is pure: every maximal cell uses all colors in both rows.
    let full = LabelSet::full(3);
    let maximal = fam.k.maximal_ids();
    for &i in &maximal {
        let ArrayCell { a, b, c, d } = fam.k.cells[i];
        assert_eq!(a.union(b), full);
        assert_eq!(c.union(d), full);
    }
    let dims: Vec<u32> = maximal.iter().map(|&i| fam.k.cells[i].dim()).collect();
    println!("all {} maximal cells of K have dimension {}", maximal.len(), dims[0]);
    assert!(dims.iter().all(|&d| d == dims[0]));

    println!("\na few cells of S at n = 3:");
    for line in fam.s.dump_lines().iter().take(4) {
        println!("  {line}");
    }
}
