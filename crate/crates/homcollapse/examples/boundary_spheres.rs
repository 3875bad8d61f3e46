//! The order complex of K as a compact piece with boundary ΔL and core ΔS.
//!
//! ΔK is pure of dimension 2n − 4 and every codimension-one chain lies in
//! one or two top chains. The chains hit by exactly one top chain form
//! ΔL: the boundary of the piece. Inside, the diagonal chains form a
//! sphere of dimension n − 2, and the whole piece collapses onto it, so
//! their Euler characteristics agree.

use homcollapse::mkls::{ArrayPoset, Family};

fn main() {
    for n in [3, 4] {
        let kp = ArrayPoset::build(n, Family::K, 1_000_000).unwrap();
        let dk = kp.poset.order_complex(1_000_000).unwrap();
        let lp = ArrayPoset::build(n, Family::L, 1_000_000).unwrap();
        let dl = lp.poset.order_complex(1_000_000).unwrap();

        let boundary = dk.pseudomanifold_boundary().unwrap();
        let dl_in_k = dk.vertex_induced(|v| {
            let cell = kp.cells[v as usize];
            cell.a.is_disjoint(cell.c)
        });
        assert_eq!(boundary, dl_in_k);
        assert_eq!(boundary.f_vector(), dl.f_vector());
        println!(
            "n = {n}: ΔK is pure of dimension {}, boundary f = {:?}",
            dk.dim(),
            boundary.f_vector()
        );

        // The boundary itself is closed: every codimension-one chain of
        // ΔL lies in exactly two of its top chains.
        assert_eq!(boundary.pseudomanifold_boundary().unwrap().simplex_count(), 0);
        println!("       the boundary is a closed pseudomanifold");

        let ds = dk.vertex_induced(|v| kp.cells[v as usize].is_diagonal());
        let sphere_chi = 1 + i64::from((-1i32).pow(n));
        assert_eq!(dk.euler_characteristic(), ds.euler_characteristic());
        assert_eq!(ds.euler_characteristic(), sphere_chi);
        println!(
            "       χ(ΔK) = χ(ΔS) = {} = χ of an ({} − 2)-sphere",
            sphere_chi, n
        );
    }
}
