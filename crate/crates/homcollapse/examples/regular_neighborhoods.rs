//! Simplicial neighborhoods and derived subdivisions near a subcomplex.
//!
//! The closed star of a subcomplex L inside K is the union of all closed
//! cells touching L. After subdividing K near L (starring each simplex
//! that meets L without lying in it), that neighborhood deformation
//! retracts to L: it is a regular neighborhood. The machinery is exact,
//! so the retraction shows up as equal homology.

use homcollapse::homology::integral_homology;
use homcollapse::mkls::{ArrayPoset, Family};
use homcollapse::subdivision::{derived_subdivision_near, filtration_f, simplicial_neighborhood};
use homcollapse::SimplicialComplex;

fn main() {
    // Warm up on a circle: three edges, neighborhood of one vertex.
    let circle = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
    let core = SimplicialComplex::from_simplices([vec![1]], false);
    let (closed, frontier) = simplicial_neighborhood(&circle, &core).unwrap();
    println!("circle near one vertex: neighborhood f = {:?}", closed.f_vector());
    println!("frontier away from the core: f = {:?}", frontier.f_vector());

    let derived = derived_subdivision_near(&circle, &core).unwrap();
    println!(
        "subdividing first: {} new vertices starred, f = {:?}",
        derived.centers.len(),
        derived.complex.f_vector()
    );
    for (i, c) in derived.centers.iter().enumerate() {
        println!("  vertex {} is the barycenter of {:?}", derived.base + i as u32, c);
    }

    // The filtration distinguishing the core from the rest.
    println!("filtration: {:?}", filtration_f(&circle, &core).unwrap());

    // Now the real object: the chains of M near the chains of the
    // diagonal S. The diagonal is full in the order complex, so the
    // subdivision applies, and the regular neighborhood of a sphere
    // keeps the homology of that sphere.
    let n = 3;
    let mp = ArrayPoset::build(n, Family::M, 1_000_000).unwrap();
    let dm = mp.poset.order_complex(1_000_000).unwrap();
    let ds = dm.vertex_induced(|v| mp.cells[v as usize].is_diagonal());
    println!(
        "\nchains of M at n = {n}: {} simplices, diagonal chains: {}",
        dm.simplex_count(),
        ds.simplex_count()
    );

    let derived = derived_subdivision_near(&dm, &ds).unwrap();
    println!(
        "derived near the diagonal: {} simplices, {} starred",
        derived.complex.simplex_count(),
        derived.centers.len()
    );

    let (closed, frontier) = simplicial_neighborhood(&derived.complex, &ds).unwrap();
    let trim = |mut groups: Vec<homcollapse::homology::HomologyGroup>| {
        while groups.last().is_some_and(|g| g.is_trivial()) {
            groups.pop();
        }
        groups
    };
    let sphere = trim(integral_homology(&ds).unwrap());
    let neighborhood = trim(integral_homology(&closed).unwrap());
    println!("neighborhood homology {:?}", neighborhood);
    assert_eq!(sphere, neighborhood);
    println!("the regular neighborhood has the homology of the diagonal circle");
    println!("its frontier has f = {:?}", frontier.f_vector());
}
