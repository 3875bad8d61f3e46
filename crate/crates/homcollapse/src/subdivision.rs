//! Simplicial neighborhoods, derived subdivisions near a subcomplex, and
//! the two-level vertex filtration used to talk about regular
//! neighborhoods combinatorially.

use std::collections::HashSet;

use crate::complex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// The simplicial neighborhood N_K(L) and its frontier Ṅ_K(L).
///
/// N_K(L) consists of the simplices with a coface meeting the vertex set of
/// L (each simplex counting as a coface of itself); Ṅ_K(L) is the part of
/// N_K(L) whose simplices avoid L's vertices entirely.
pub fn simplicial_neighborhood(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<(SimplicialComplex, SimplicialComplex)> {
    if !k.contains_subcomplex(l) {
        return Err(Error::NotSubcomplex("neighborhood asked of a non-subcomplex".into()));
    }
    let l0: HashSet<u32> = l.vertices().into_iter().collect();
    let carriers: Vec<&Simplex> = k
        .maximal_simplices()
        .into_iter()
        .filter(|m| m.iter().any(|v| l0.contains(v)))
        .collect();
    let mut hood = Vec::new();
    let mut frontier = Vec::new();
    for s in k.iter() {
        if carriers.iter().any(|m| crate::complex::is_subset(s, m)) {
            hood.push(s.clone());
            if !s.iter().any(|v| l0.contains(v)) {
                frontier.push(s.clone());
            }
        }
    }
    let with_empty = k.includes_empty() && !carriers.is_empty();
    Ok((
        SimplicialComplex::from_simplices(hood, with_empty),
        SimplicialComplex::from_simplices(frontier, with_empty),
    ))
}

/// A derived subdivision of K near a full subcomplex L: every simplex of
/// K ∖ L meeting L's vertex set is starred from a fresh vertex.
pub struct DerivedSubdivision {
    pub complex: SimplicialComplex,
    /// First new vertex id; ids base, base+1, … follow `centers` in order.
    pub base: u32,
    /// centers[i] is the subdivided simplex starred by vertex base + i, in
    /// canonical (dimension, lexicographic) order.
    pub centers: Vec<Simplex>,
}

impl DerivedSubdivision {
    /// The simplex of K a derived vertex stars, if it is one.
    pub fn center_of(&self, v: u32) -> Option<&Simplex> {
        v.checked_sub(self.base).and_then(|i| self.centers.get(i as usize))
    }
}

/// Derived subdivision of K near L.
///
/// L must be full in K. New vertices star exactly the simplices of K ∖ L
/// meeting L's vertex set, and the simplices of the result are
/// σ ∪ {v_{τ₁}, …, v_{τ_m}} for chains τ₁ ⊊ … ⊊ τ_m of starred simplices
/// and faces σ ⊊ τ₁ that are not starred themselves (σ ∈ L or σ disjoint
/// from L's vertices, possibly empty), together with all unstarred
/// simplices of K.
pub fn derived_subdivision_near(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<DerivedSubdivision> {
    if !k.is_full_subcomplex(l)? {
        return Err(Error::NotFull("derived subdivision", "the core is not full".into()));
    }
    let l0: HashSet<u32> = l.vertices().into_iter().collect();
    let starred = |s: &[u32]| !l.contains(s) && s.iter().any(|v| l0.contains(v));
    let centers: Vec<Simplex> = k.iter().filter(|s| starred(s)).cloned().collect();
    let base = k.max_vertex().map_or(0, |v| v + 1);

    let mut sims: Vec<Simplex> = k.iter().filter(|s| !starred(s)).cloned().collect();
    // Ascending DFS over chains of starred simplices; each chain combines
    // with every unstarred proper face of its least element.
    let above: Vec<Vec<usize>> = centers
        .iter()
        .map(|t| {
            (0..centers.len())
                .filter(|&j| {
                    centers[j].len() > t.len() && crate::complex::is_subset(t, &centers[j])
                })
                .collect()
        })
        .collect();
    let mut stack: Vec<u32> = Vec::new();
    for i in 0..centers.len() {
        let mut bottoms: Vec<Simplex> = subsets_of(&centers[i])
            .into_iter()
            .filter(|s| s.len() < centers[i].len() && !starred(s))
            .collect();
        bottoms.push(Vec::new());
        extend_chains(i, &above, &mut stack, &bottoms, base, &mut sims);
    }
    let complex = SimplicialComplex::from_simplices(sims, k.includes_empty());
    debug_assert!(complex.contains_subcomplex(l));
    Ok(DerivedSubdivision { complex, base, centers })
}

fn extend_chains(
    i: usize,
    above: &[Vec<usize>],
    stack: &mut Vec<u32>,
    bottoms: &[Simplex],
    base: u32,
    sims: &mut Vec<Simplex>,
) {
    stack.push(base + i as u32);
    for s in bottoms {
        let mut out = s.clone();
        out.extend_from_slice(stack);
        sims.push(out);
    }
    for &j in &above[i] {
        extend_chains(j, above, stack, bottoms, base, sims);
    }
    stack.pop();
}

fn subsets_of(s: &[u32]) -> Vec<Simplex> {
    let mut out = vec![Vec::new()];
    for &v in s {
        let len = out.len();
        for i in 0..len {
            let mut next = out[i].clone();
            next.push(v);
            out.push(next);
        }
    }
    out
}

/// The two-level filtration on the vertices of K: 0 on L's vertices and 1
/// on the rest, in vertex order.
pub fn filtration_f(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Vec<(u32, u8)>> {
    if !k.contains_subcomplex(l) {
        return Err(Error::NotSubcomplex("filtration asked of a non-subcomplex".into()));
    }
    let l0: HashSet<u32> = l.vertices().into_iter().collect();
    Ok(k.vertices().into_iter().map(|v| (v, if l0.contains(&v) { 0 } else { 1 })).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_mod2;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::simplex_boundary(&[1, 2, 3])
    }

    fn point(v: u32) -> SimplicialComplex {
        SimplicialComplex::from_simplices([vec![v]], false)
    }

    #[test]
    fn neighborhood_of_a_vertex_in_the_circle() {
        let k = triangle_boundary();
        let (n, frontier) = simplicial_neighborhood(&k, &point(1)).unwrap();
        assert_eq!(n.f_vector(), vec![3, 2]);
        assert!(n.contains(&[1, 2]) && n.contains(&[1, 3]) && !n.contains(&[2, 3]));
        assert_eq!(frontier.f_vector(), vec![2]);
        assert!(frontier.contains(&[2]) && frontier.contains(&[3]));
    }

    #[test]
    fn neighborhood_of_the_whole_complex() {
        let k = triangle_boundary();
        let (n, frontier) = simplicial_neighborhood(&k, &k).unwrap();
        assert_eq!(n, k);
        assert_eq!(frontier.simplex_count(), 0);
        let bad = point(9);
        assert!(simplicial_neighborhood(&k, &bad).is_err());
    }

    #[test]
    fn circle_subdivided_near_a_vertex() {
        let k = triangle_boundary();
        let sd = derived_subdivision_near(&k, &point(1)).unwrap();
        assert_eq!(sd.base, 4);
        assert_eq!(sd.centers, vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(sd.complex.f_vector(), vec![5, 5]);
        assert!(sd.complex.contains(&[2, 3]));
        assert!(!sd.complex.contains(&[1, 2]));
        assert!(sd.complex.contains(&[1, 4]) && sd.complex.contains(&[2, 4]));
        assert_eq!(sd.complex.euler_characteristic(), k.euler_characteristic());
        assert_eq!(betti_mod2(&sd.complex), betti_mod2(&k));
        assert_eq!(sd.center_of(5), Some(&vec![1, 3]));
        assert_eq!(sd.center_of(3), None);
    }

    #[test]
    fn empty_core_leaves_the_complex_alone() {
        let k = triangle_boundary();
        let sd = derived_subdivision_near(&k, &SimplicialComplex::void()).unwrap();
        assert!(sd.centers.is_empty());
        assert_eq!(sd.complex, k);
    }

    #[test]
    fn solid_triangle_near_an_edge() {
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]);
        let edge = SimplicialComplex::from_facets([vec![1, 2]], false);
        let sd = derived_subdivision_near(&k, &edge).unwrap();
        assert_eq!(sd.centers, vec![vec![1, 3], vec![2, 3], vec![1, 2, 3]]);
        assert_eq!(sd.complex.f_vector(), vec![6, 10, 5]);
        assert_eq!(sd.complex.euler_characteristic(), 1);
        assert_eq!(betti_mod2(&sd.complex), vec![1, 0, 0]);
    }

    #[test]
    fn fullness_is_required() {
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]);
        let two_points = SimplicialComplex::from_simplices([vec![2], vec![3]], false);
        match derived_subdivision_near(&k, &two_points) {
            Err(Error::NotFull(..)) => {}
            other => panic!("expected NotFull, got {:?}", other.map(|s| s.complex)),
        }
    }

    #[test]
    fn filtration_levels() {
        let k = triangle_boundary();
        assert_eq!(filtration_f(&k, &point(1)).unwrap(), vec![(1, 0), (2, 1), (3, 1)]);
        assert_eq!(filtration_f(&k, &k).unwrap(), vec![(1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn neighborhood_in_the_subdivision_sees_only_core_vertices() {
        // After subdividing, a simplex lies in the neighborhood of the core
        // exactly when its original vertices all lie in the core.
        let k = triangle_boundary();
        let core = point(1);
        let sd = derived_subdivision_near(&k, &core).unwrap();
        let (n, _) = simplicial_neighborhood(&sd.complex, &core).unwrap();
        for s in sd.complex.iter() {
            let original_in_core = s.iter().all(|&v| v >= sd.base || v == 1);
            assert_eq!(n.contains(s), original_in_core, "simplex {s:?}");
        }
        // Maximal simplices of the neighborhood all meet the core.
        for m in n.maximal_simplices() {
            assert!(m.iter().any(|&v| v == 1));
        }
    }

    #[test]
    fn double_subdivision_keeps_homology() {
        let k = triangle_boundary();
        let core = point(1);
        let once = derived_subdivision_near(&k, &core).unwrap();
        let twice = derived_subdivision_near(&once.complex, &core).unwrap();
        assert_eq!(betti_mod2(&twice.complex), betti_mod2(&k));
        assert_eq!(twice.complex.euler_characteristic(), 0);
    }
}
