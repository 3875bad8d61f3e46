//! Integral and mod 2 homology of the order complexes of L and S.
//!
//! ΔL is where the pentagon complex lives. At n = 3 it is a pair of
//! circles, the orthogonal group O(2). At n = 4 it is real projective
//! 3-space, which is SO(3), the rotations of a 2-sphere seen as the unit
//! tangent vectors: the Stiefel manifold of orthonormal 2-frames in R³.
//! ΔS is a sphere of dimension n − 2.

use homcollapse::homology::{betti_mod2, integral_homology, uct_consistent, HomologyGroup};
use homcollapse::mkls::{ArrayPoset, Family};

fn describe(group: &HomologyGroup) -> String {
    let mut parts = vec!["Z".to_string(); group.rank];
    parts.extend(group.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn report(name: &str, n: u32) {
    let family = if name == "L" { Family::L } else { Family::S };
    let poset = ArrayPoset::build(n, family, 1_000_000).unwrap();
    let chains = poset.poset.order_complex(10_000_000).unwrap();
    let groups = integral_homology(&chains).unwrap();
    let z2 = betti_mod2(&chains);
    assert!(uct_consistent(&z2, &groups));
    println!("Δ{name} at n = {n}: f = {:?}", chains.f_vector());
    for (d, g) in groups.iter().enumerate() {
        println!("  H{d} = {}", describe(g));
    }
    println!("  mod 2 betti numbers {z2:?} agree by universal coefficients");
}

fn main() {
    report("L", 3);
    let l3 = integral_homology(
        &ArrayPoset::build(3, Family::L, 100_000).unwrap().poset.order_complex(100_000).unwrap(),
    )
    .unwrap();
    assert_eq!(l3, vec![HomologyGroup::free(2), HomologyGroup::free(2)]);
    println!("  two disjoint circles: O(2)\n");

    report("L", 4);
    let l4 = integral_homology(
        &ArrayPoset::build(4, Family::L, 100_000).unwrap().poset.order_complex(100_000).unwrap(),
    )
    .unwrap();
    assert_eq!(
        l4,
        vec![
            HomologyGroup::free(1),
            HomologyGroup { rank: 0, torsion: vec![2] },
            HomologyGroup::free(0),
            HomologyGroup::free(1),
        ]
    );
    println!("  the torsion class in H1 marks real projective 3-space: SO(3)\n");

    for n in [3, 4] {
        let poset = ArrayPoset::build(n, Family::S, 100_000).unwrap();
        let chains = poset.poset.order_complex(100_000).unwrap();
        let groups = integral_homology(&chains).unwrap();
        let dim = (n - 2) as usize;
        let mut sphere = vec![HomologyGroup::free(0); dim + 1];
        sphere[0] = HomologyGroup::free(1);
        sphere[dim] = HomologyGroup {
            rank: sphere[dim].rank + 1,
            torsion: vec![],
        };
        assert_eq!(groups, sphere);
        println!("ΔS at n = {n} is a {dim}-sphere");
    }
}
