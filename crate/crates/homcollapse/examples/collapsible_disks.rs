//! The complexes F(k, l) and their perfect toggle matching.
//!
//! F(k, l) lives on k "squares" (two interchangeable plus/minus pairs)
//! and l plain plus/minus pairs. A simplex may pick at most one sign per
//! coordinate, and some coordinate must stay minus-free. Toggling the
//! distinguished plus vertex of the first minus-free coordinate pairs
//! every simplex, including the empty one, with no critical cell left.
//! Executing the geometric pairs collapses F(k, l) to the lone point
//! paired with the empty simplex, so F(k, l) is contractible.

use homcollapse::disk::{self, JoinShape};
use homcollapse::poset::{face_poset, poset_isomorphic};

fn main() {
    for (k, l) in [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (1, 2), (2, 1)] {
        let f = disk::build_f(k, l);
        println!("F({k}, {l}): f = {:?}, χ = {}", f.f_vector(), f.euler_characteristic());
        assert_eq!(f.euler_characteristic(), 1);

        let m = disk::matching_f(&f, k, l);
        let (critical, empty_critical) = m.critical_cells(&f);
        assert!(critical.is_empty());
        assert!(!empty_critical, "the empty simplex is paired too");

        // The toggle is an involution on every simplex.
        for s in f.iter() {
            let once = disk::toggle_f(s, k, l);
            assert_eq!(disk::toggle_f(&once, k, l), *s);
        }
        let collapse = m.collapse_sequence(&f).unwrap();
        assert_eq!(collapse.residue.simplex_count(), 1);
        assert_eq!(collapse.residue.dim(), 0);
        println!(
            "  perfect matching: {} pairs collapse to the point {:?}",
            m.len(),
            collapse.residue.maximal_simplices()[0]
        );
    }

    // Vertex links follow a uniform pattern. In F(2, 1):
    let (k, l) = (2, 1);
    let f = disk::build_f(k, l);
    for (v, label) in [
        (disk::a_plus(0), "first plus of a square"),
        (disk::a_minus(0), "first minus of a square"),
        (disk::s_plus(k, 0), "plus of a plain pair"),
        (disk::s_minus(k, 0), "minus of a plain pair"),
    ] {
        let predicted: JoinShape = disk::link_prediction(v, k, l);
        let link = f.link(&[v]);
        let expected = predicted.build();
        let (lp, _) = face_poset(&link);
        let (ep, _) = face_poset(&expected);
        assert!(poset_isomorphic(&lp, &ep, 10_000_000).unwrap().is_some());
        println!(
            "link of the {label}: S⁰ joined {} times with F({}, {})",
            predicted.spheres, predicted.k, predicted.l
        );
    }
}
