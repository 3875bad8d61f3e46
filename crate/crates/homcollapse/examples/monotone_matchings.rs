//! Turn a monotone self-map of a poset into a discrete Morse matching on
//! its order complex.
//!
//! Any order-preserving map h with h(x) ≥ x everywhere (or ≤ everywhere)
//! collapses the order complex onto the chains of its stabilization's
//! fixed set. The matching toggles the stabilized image of the last
//! unfixed element of a chain.

use std::collections::HashMap;

use homcollapse::morse::exhaustive_vpath_cycle;
use homcollapse::poset::Poset;
use homcollapse::stages::monotone_map_matching;

fn main() {
    // The poset of nonempty subsets of {0, 1, 2} ordered by inclusion,
    // with element i standing for the bitmask i + 1.
    let subsets = Poset::from_less(7, |x, y| {
        let (sx, sy) = (x + 1, y + 1);
        sx & sy == sx && sx != sy
    });
    let chains = subsets.order_complex(100_000).unwrap();
    println!("order complex of the subset poset: f = {:?}", chains.f_vector());

    // h adjoins the element 0 to a subset: a closure operator. Its fixed
    // sets are the four subsets containing 0.
    let adjoin_zero = |x: u32| ((x + 1) | 1) - 1;
    let m = monotone_map_matching(&subsets, &chains, adjoin_zero).unwrap();
    let (critical, empty_critical) = m.critical_cells(&chains);
    println!("{} matched pairs, {} critical chains", m.pairs().len(), critical.len());
    assert!(empty_critical, "the empty chain lies in the fixed part");

    // The critical chains are the chains inside the image of the closure:
    // a cone with apex {0}, so the barycentric subdivision of a triangle.
    let fixed: Vec<u32> = (0..7).filter(|&x| adjoin_zero(x) == x).collect();
    println!("fixed subsets (as ids): {fixed:?}");
    assert!(critical.iter().all(|c| c.iter().all(|v| fixed.contains(v))));

    // Matchings from monotone maps are always acyclic, so the collapse
    // really can be carried out step by step.
    assert!(!exhaustive_vpath_cycle(&m));
    let collapse = m.collapse_sequence(&chains).unwrap();
    println!(
        "collapsed {} free faces, residue f = {:?}",
        collapse.steps.len(),
        collapse.residue.f_vector()
    );
    assert_eq!(collapse.residue, chains.vertex_induced(|v| fixed.contains(&v)));

    // A deflationary companion: on the divisors of 12 ordered by
    // divisibility, taking the gcd with 4 moves every divisor down onto
    // the chain 1 | 2 | 4.
    let divisors = [1u32, 2, 3, 4, 6, 12];
    let divides = Poset::from_less(6, |x, y| {
        divisors[y as usize] % divisors[x as usize] == 0 && x != y
    });
    let divisor_chains = divides.order_complex(100_000).unwrap();
    let gcd_with_4 = |x: u32| {
        let g = match divisors[x as usize] {
            d if d % 4 == 0 => 4,
            d if d % 2 == 0 => 2,
            _ => 1,
        };
        divisors.iter().position(|&d| d == g).unwrap() as u32
    };
    let m = monotone_map_matching(&divides, &divisor_chains, gcd_with_4).unwrap();
    let (critical, _) = m.critical_cells(&divisor_chains);
    println!("deflationary companion on the divisors of 12: {} critical chains", critical.len());
    assert_eq!(critical.len(), 7);

    // An order-preserving map moving 6 up to 12 but 4 down to 2 is
    // rejected: the construction needs one consistent direction.
    let mixed = |x: u32| match divisors[x as usize] {
        6 => 5,
        4 => 1,
        _ => x,
    };
    let err = monotone_map_matching(&divides, &divisor_chains, mixed).unwrap_err();
    println!("mixed map rejected: {err}");

    // The row swap of the subset poset under the relabeling 1 <-> 2 is an
    // order automorphism; matchings built from swap-commuting maps are
    // equivariant. Here adjoining 0 commutes with swapping 1 and 2.
    let swap: HashMap<u32, u32> = (0..7u32)
        .map(|x| {
            let s = x + 1;
            let swapped = (s & 1) | ((s & 2) << 1) | ((s & 4) >> 1);
            (x, swapped - 1)
        })
        .collect();
    let m = monotone_map_matching(&subsets, &chains, adjoin_zero).unwrap();
    assert!(m.is_equivariant(&swap));
    println!("matching commutes with the 1 <-> 2 relabeling");
}
