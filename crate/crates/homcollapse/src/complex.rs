//! Abstract simplicial complexes on `u32` vertex labels.
//!
//! A complex stores its nonempty simplices bucketed by dimension, each
//! simplex a strictly ascending vertex list, each bucket sorted
//! lexicographically so membership is a binary search and iteration order is
//! canonical. Whether the empty simplex belongs to the complex is tracked
//! explicitly: augmented Morse matchings pair a vertex with the empty
//! simplex, and the face poset of a complex deliberately excludes it, so the
//! distinction has to be kept straight rather than left implicit.

use std::collections::HashMap;

use crate::{Error, Result};

pub type Simplex = Vec<u32>;

/// Identifier of a simplex inside a fixed complex: dimension bucket and
/// position within it.
pub type SimplexId = (usize, usize);

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    includes_empty: bool,
}

fn normalize(mut s: Simplex) -> Simplex {
    s.sort_unstable();
    s.dedup();
    s
}

impl SimplicialComplex {
    /// Build from an explicit simplex list, which must be closed under
    /// taking faces (the empty face is governed by `includes_empty`).
    pub fn from_simplices<I>(simplices: I, includes_empty: bool) -> SimplicialComplex
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            let s = normalize(s);
            if s.is_empty() {
                continue;
            }
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for bucket in &mut by_dim {
            bucket.sort_unstable();
            bucket.dedup();
        }
        let cx = SimplicialComplex { by_dim, includes_empty };
        debug_assert!(cx.closure_violation().is_none(), "simplex set not closed under faces");
        cx
    }

    /// Downward closure of a generating set.
    pub fn from_facets<I>(generators: I, includes_empty: bool) -> SimplicialComplex
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut seen: Vec<Simplex> = Vec::new();
        let mut stack: Vec<Simplex> = generators.into_iter().map(normalize).collect();
        let mut known: std::collections::HashSet<Simplex> = stack.iter().cloned().collect();
        while let Some(s) = stack.pop() {
            if s.is_empty() {
                continue;
            }
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                if !f.is_empty() && known.insert(f.clone()) {
                    stack.push(f);
                }
            }
            seen.push(s);
        }
        SimplicialComplex::from_simplices(seen, includes_empty)
    }

    /// The complex with no simplices at all (not even the empty one).
    pub fn void() -> SimplicialComplex {
        SimplicialComplex { by_dim: Vec::new(), includes_empty: false }
    }

    /// The full simplex on the given vertices, including the empty face.
    pub fn full_simplex(vertices: &[u32]) -> SimplicialComplex {
        let v = normalize(vertices.to_vec());
        SimplicialComplex::from_facets([v], true)
    }

    /// Boundary of the full simplex: every proper subset of `vertices`.
    pub fn simplex_boundary(vertices: &[u32]) -> SimplicialComplex {
        let v = normalize(vertices.to_vec());
        let facets: Vec<Simplex> = (0..v.len())
            .map(|i| {
                let mut f = v.clone();
                f.remove(i);
                f
            })
            .collect();
        SimplicialComplex::from_facets(facets, true)
    }

    /// Two points, the 0-sphere, on the given labels.
    pub fn two_points(a: u32, b: u32) -> SimplicialComplex {
        SimplicialComplex::from_simplices([vec![a], vec![b]], true)
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }

    pub fn set_includes_empty(&mut self, flag: bool) {
        self.includes_empty = flag;
    }

    /// Dimension of the complex; −1 when there are no nonempty simplices.
    pub fn dim(&self) -> i32 {
        self.by_dim.len() as i32 - 1
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All nonempty simplices, dimension by dimension.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    /// Number of nonempty simplices.
    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        if simplex.is_empty() {
            return self.includes_empty;
        }
        let d = simplex.len() - 1;
        self.by_dim.get(d).is_some_and(|b| b.binary_search_by(|s| s.as_slice().cmp(simplex)).is_ok())
    }

    /// Position of a nonempty simplex, if present.
    pub fn id_of(&self, simplex: &[u32]) -> Option<SimplexId> {
        if simplex.is_empty() {
            return None;
        }
        let d = simplex.len() - 1;
        let bucket = self.by_dim.get(d)?;
        bucket.binary_search_by(|s| s.as_slice().cmp(simplex)).ok().map(|i| (d, i))
    }

    /// Number of nonempty simplices per dimension. The empty simplex is
    /// never counted.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Euler characteristic Σ (−1)^d f_d over nonempty simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, b)| if d % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.simplices(0).last().map(|s| s[0])
    }

    /// Simplices maximal under inclusion.
    pub fn maximal_simplices(&self) -> Vec<&Simplex> {
        let mut out = Vec::new();
        for (d, bucket) in self.by_dim.iter().enumerate() {
            for s in bucket {
                let has_coface = self
                    .simplices(d + 1)
                    .iter()
                    .any(|t| is_subset(s, t));
                if !has_coface {
                    out.push(s);
                }
            }
        }
        out
    }

    /// True when every maximal simplex has top dimension.
    pub fn is_pure(&self) -> bool {
        let top = self.dim();
        self.maximal_simplices().iter().all(|s| s.len() as i32 - 1 == top)
    }

    /// Link of a face: all simplices disjoint from `face` whose union with
    /// it lies in the complex. The result includes the empty simplex when
    /// `face` itself is present.
    pub fn link(&self, face: &[u32]) -> SimplicialComplex {
        let face = normalize(face.to_vec());
        let mut out = Vec::new();
        for s in self.iter() {
            if s.iter().any(|v| face.contains(v)) {
                continue;
            }
            let mut u = s.clone();
            u.extend_from_slice(&face);
            u.sort_unstable();
            if self.contains(&u) {
                out.push(s.clone());
            }
        }
        SimplicialComplex::from_simplices(out, self.contains(&face))
    }

    /// Join with another complex. Vertices of `other` are shifted above
    /// this complex's largest label to keep the two vertex sets disjoint;
    /// the shift applied is returned alongside the join.
    pub fn join(&self, other: &SimplicialComplex) -> (SimplicialComplex, u32) {
        let offset = self.max_vertex().map_or(0, |m| m + 1);
        let mut sims: Vec<Simplex> = Vec::new();
        let left: Vec<&Simplex> = self.iter().collect();
        let right: Vec<Simplex> =
            other.iter().map(|s| s.iter().map(|v| v + offset).collect()).collect();
        for l in &left {
            sims.push((*l).clone());
        }
        for r in &right {
            sims.push(r.clone());
            for l in &left {
                let mut u = (*l).clone();
                u.extend_from_slice(r);
                sims.push(u);
            }
        }
        (
            SimplicialComplex::from_simplices(sims, self.includes_empty && other.includes_empty),
            offset,
        )
    }

    /// True when every simplex of `other` is a simplex of `self`.
    pub fn contains_subcomplex(&self, other: &SimplicialComplex) -> bool {
        other.iter().all(|s| self.contains(s))
    }

    /// A subcomplex `L` is full when every simplex of `self` whose vertices
    /// all lie in `L` already belongs to `L`.
    pub fn is_full_subcomplex(&self, l: &SimplicialComplex) -> Result<bool> {
        if !self.contains_subcomplex(l) {
            return Err(Error::NotSubcomplex("fullness asked of a non-subcomplex".into()));
        }
        let lv: std::collections::HashSet<u32> = l.vertices().into_iter().collect();
        for s in self.iter() {
            if s.iter().all(|v| lv.contains(v)) && !l.contains(s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Boundary of a pure complex in the pseudomanifold sense: the
    /// subcomplex generated by the codimension-1 simplices lying in exactly
    /// one facet. Errors when the complex is not pure.
    pub fn pseudomanifold_boundary(&self) -> Result<SimplicialComplex> {
        if self.dim() < 0 {
            return Ok(SimplicialComplex::void());
        }
        if !self.is_pure() {
            let dims: Vec<i32> = {
                let mut ds: Vec<i32> =
                    self.maximal_simplices().iter().map(|s| s.len() as i32 - 1).collect();
                ds.sort_unstable();
                ds.dedup();
                ds
            };
            return Err(Error::NotPure(dims));
        }
        let d = self.dim() as usize;
        if d == 0 {
            return Ok(SimplicialComplex::void());
        }
        let mut counts: HashMap<&[u32], (u32, usize)> = HashMap::new();
        for (i, ridge) in self.simplices(d - 1).iter().enumerate() {
            counts.insert(ridge.as_slice(), (0, i));
        }
        let mut scratch: Simplex = Vec::with_capacity(d + 1);
        for facet in self.simplices(d) {
            for skip in 0..facet.len() {
                scratch.clear();
                scratch.extend(facet.iter().copied().take(skip));
                scratch.extend(facet.iter().copied().skip(skip + 1));
                if let Some(e) = counts.get_mut(scratch.as_slice()) {
                    e.0 += 1;
                }
            }
        }
        let boundary_ridges: Vec<Simplex> = {
            let mut idx: Vec<usize> =
                counts.values().filter(|(c, _)| *c == 1).map(|&(_, i)| i).collect();
            idx.sort_unstable();
            idx.iter().map(|&i| self.simplices(d - 1)[i].clone()).collect()
        };
        Ok(SimplicialComplex::from_facets(boundary_ridges, self.includes_empty))
    }

    /// First face-closure violation, if any: a simplex with a missing face.
    pub fn closure_violation(&self) -> Option<(Simplex, Simplex)> {
        for d in 1..self.by_dim.len() {
            for s in &self.by_dim[d] {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    if !self.contains(&f) {
                        return Some((s.clone(), f));
                    }
                }
            }
        }
        None
    }

    /// Subcomplex of simplices all of whose vertices satisfy `keep`.
    pub fn vertex_induced(&self, keep: impl Fn(u32) -> bool) -> SimplicialComplex {
        let sims: Vec<Simplex> =
            self.iter().filter(|s| s.iter().all(|&v| keep(v))).cloned().collect();
        SimplicialComplex::from_simplices(sims, self.includes_empty)
    }

    /// Relabel vertices through `map`, which must be injective on the
    /// vertex set and defined on all of it.
    pub fn relabel(&self, map: &HashMap<u32, u32>) -> SimplicialComplex {
        let sims: Vec<Simplex> =
            self.iter().map(|s| s.iter().map(|v| map[v]).collect()).collect();
        SimplicialComplex::from_simplices(sims, self.includes_empty)
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex(f = {:?}{})",
            self.f_vector(),
            if self.includes_empty { ", with empty simplex" } else { "" }
        )
    }
}

pub(crate) fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    'outer: for v in small {
        for w in it.by_ref() {
            match w.cmp(v) {
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => {}
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_test() {
        assert!(is_subset(&[1, 3], &[1, 2, 3]));
        assert!(is_subset(&[], &[1]));
        assert!(!is_subset(&[1, 4], &[1, 2, 3]));
        assert!(!is_subset(&[0], &[]));
    }

    #[test]
    fn triangle_boundary() {
        let b = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        assert_eq!(b.f_vector(), vec![3, 3]);
        assert_eq!(b.euler_characteristic(), 0);
        assert!(b.includes_empty());
        assert!(b.contains(&[1, 3]));
        assert!(!b.contains(&[1, 2, 3]));
        assert!(b.is_pure());
    }

    #[test]
    fn links() {
        // Link of a vertex in the boundary of a tetrahedron is a triangle
        // boundary (a circle).
        let s2 = SimplicialComplex::simplex_boundary(&[1, 2, 3, 4]);
        let lk = s2.link(&[4]);
        assert_eq!(lk.f_vector(), vec![3, 3]);
        // Link of an edge there is two points.
        let lk2 = s2.link(&[1, 2]);
        assert_eq!(lk2.f_vector(), vec![2]);
        // Link of a missing face has no empty simplex.
        assert!(!s2.link(&[5]).includes_empty());
    }

    #[test]
    fn joins() {
        // S⁰ ∗ S⁰ is a square.
        let s0 = SimplicialComplex::two_points(0, 1);
        let (sq, _) = s0.join(&s0);
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert_eq!(sq.euler_characteristic(), 0);
        // S⁰ ∗ S⁰ ∗ S⁰ is an octahedron.
        let (oct, _) = sq.join(&s0);
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert_eq!(oct.euler_characteristic(), 2);
        // Joining with the void complex changes nothing.
        let (same, _) = sq.join(&SimplicialComplex::void());
        assert_eq!(same.f_vector(), sq.f_vector());
    }

    #[test]
    fn pseudomanifold_boundaries() {
        // A full triangle's boundary is its edge circle.
        let t = SimplicialComplex::full_simplex(&[1, 2, 3]);
        let b = t.pseudomanifold_boundary().unwrap();
        assert_eq!(b.f_vector(), vec![3, 3]);
        // A sphere is closed.
        let s = SimplicialComplex::simplex_boundary(&[1, 2, 3, 4]);
        assert_eq!(s.pseudomanifold_boundary().unwrap().simplex_count(), 0);
        // Impure complexes are rejected.
        let bad = SimplicialComplex::from_facets([vec![1, 2, 3], vec![4, 5]], false);
        assert!(matches!(bad.pseudomanifold_boundary(), Err(Error::NotPure(_))));
    }

    #[test]
    fn fullness() {
        let k = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        // {1}, {2} alone is not full: the edge {1,2} has all vertices in it
        // but is missing.
        let l = SimplicialComplex::from_simplices([vec![1], vec![2]], true);
        assert!(!k.is_full_subcomplex(&l).unwrap());
        let l2 = SimplicialComplex::from_simplices([vec![1], vec![2], vec![1, 2]], true);
        assert!(k.is_full_subcomplex(&l2).unwrap());
        let not_sub = SimplicialComplex::from_simplices([vec![9]], true);
        assert!(k.is_full_subcomplex(&not_sub).is_err());
    }

    #[test]
    fn maximal_and_pure() {
        let cx = SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4]], false);
        let max: Vec<_> = cx.maximal_simplices().into_iter().cloned().collect();
        assert_eq!(max, vec![vec![3, 4], vec![1, 2, 3]]);
        assert!(!cx.is_pure());
    }
}
