//! Discrete Morse matchings: validation, acyclicity, height functions, and
//! elementary collapse sequences.
//!
//! A matching pairs simplices with facets (the empty simplex may be paired
//! with a vertex when the complex carries it). A matching is acyclic when no
//! nontrivial closed V-path σ₀ ⋖ τ₀ ⋗ σ₁ ⋖ τ₁ ⋗ … returns to σ₀. Acyclic
//! matchings whose unpaired cells form a subcomplex induce genuine collapse
//! sequences onto that subcomplex; [`Matching::collapse_sequence`] produces
//! one and re-validates every elementary step against coface counts as it
//! goes, so a bad matching cannot silently produce a bogus collapse.

use std::collections::{BinaryHeap, HashMap, HashSet};

use rand::Rng;

use crate::complex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// A set of facet pairs (σ, τ), |τ| = |σ| + 1, each simplex in at most one
/// pair. Stored with the lower simplex first, in canonical order.
#[derive(Clone, Debug)]
pub struct Matching {
    pairs: Vec<(Simplex, Simplex)>,
}

impl Matching {
    /// Normalize pair orientation by length and sort canonically.
    /// Length difference is checked here; everything else by `validate`.
    pub fn from_pairs<I: IntoIterator<Item = (Simplex, Simplex)>>(pairs: I) -> Result<Matching> {
        let mut out = Vec::new();
        for (x, y) in pairs {
            let (lo, hi) = if x.len() < y.len() { (x, y) } else { (y, x) };
            if hi.len() != lo.len() + 1 {
                return Err(Error::InvalidMatching(format!(
                    "pair ({lo:?}, {hi:?}) is not a facet pair"
                )));
            }
            out.push((lo, hi));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Matching { pairs: out })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Simplex, Simplex)] {
        &self.pairs
    }

    /// Check the matching against a complex: membership, the facet
    /// relation, and disjointness of the pairs.
    pub fn validate(&self, cx: &SimplicialComplex) -> Result<()> {
        let mut seen: HashSet<&[u32]> = HashSet::new();
        for (lo, hi) in &self.pairs {
            if !cx.contains(lo) {
                return Err(Error::InvalidMatching(format!("{lo:?} is not in the complex")));
            }
            if !cx.contains(hi) {
                return Err(Error::InvalidMatching(format!("{hi:?} is not in the complex")));
            }
            if !crate::complex::is_subset(lo, hi) {
                return Err(Error::InvalidMatching(format!("{lo:?} is not a facet of {hi:?}")));
            }
            for s in [lo.as_slice(), hi.as_slice()] {
                if !seen.insert(s) {
                    return Err(Error::InvalidMatching(format!("{s:?} occurs in two pairs")));
                }
            }
        }
        Ok(())
    }

    /// Unpaired simplices in canonical order, and whether the empty simplex
    /// is present and unpaired.
    pub fn critical_cells(&self, cx: &SimplicialComplex) -> (Vec<Simplex>, bool) {
        let paired: HashSet<&[u32]> = self
            .pairs
            .iter()
            .flat_map(|(lo, hi)| [lo.as_slice(), hi.as_slice()])
            .collect();
        let cells: Vec<Simplex> =
            cx.iter().filter(|s| !paired.contains(s.as_slice())).cloned().collect();
        let empty_critical = cx.includes_empty() && !paired.contains(&[] as &[u32]);
        (cells, empty_critical)
    }

    /// The vertex paired with the empty simplex, if any.
    pub fn empty_partner(&self) -> Option<&Simplex> {
        self.pairs.iter().find(|(lo, _)| lo.is_empty()).map(|(_, hi)| hi)
    }

    /// Search for a closed V-path; `None` means the matching is acyclic.
    /// The witness alternates lower and upper cells, starting and ending at
    /// the same lower cell.
    pub fn find_cycle(&self, cx: &SimplicialComplex) -> Result<Option<Vec<Simplex>>> {
        self.validate(cx)?;
        let c = Compiled::new(cx, self)?;
        // Per dimension, DFS over lower matched cells with edges through
        // the partner's other facets.
        let mut color: Vec<u8> = vec![0; c.total];
        let mut parent: Vec<u32> = vec![u32::MAX; c.total];
        for start in 0..c.total {
            if color[start] != 0 || !c.is_lower(start) {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            color[start] = 1;
            while let Some(&(v, ei)) = stack.last() {
                let nexts = c.lower_successors(v);
                if ei >= nexts.len() {
                    color[v] = 2;
                    stack.pop();
                    continue;
                }
                stack.last_mut().unwrap().1 += 1;
                let w = nexts[ei];
                match color[w] {
                    0 => {
                        color[w] = 1;
                        parent[w] = v as u32;
                        stack.push((w, 0));
                    }
                    1 => {
                        // Reconstruct the V-path w → … → v → w.
                        let mut lows = vec![v];
                        while *lows.last().unwrap() != w {
                            lows.push(parent[*lows.last().unwrap()] as usize);
                        }
                        lows.reverse();
                        lows.push(w);
                        let mut path = Vec::new();
                        for (i, &lo) in lows.iter().enumerate() {
                            path.push(c.simplex(lo));
                            if i + 1 < lows.len() {
                                path.push(c.simplex(c.partner[lo] as usize));
                            }
                        }
                        return Ok(Some(path));
                    }
                    _ => {}
                }
            }
        }
        Ok(None)
    }

    /// True when the pair set is stable under the vertex permutation
    /// (which must map simplices of the complex to simplices).
    pub fn is_equivariant(&self, perm: &HashMap<u32, u32>) -> bool {
        let set: HashSet<(Simplex, Simplex)> = self.pairs.iter().cloned().collect();
        self.pairs.iter().all(|(lo, hi)| {
            let map = |s: &Simplex| {
                let mut t: Simplex = s.iter().map(|v| perm[v]).collect();
                t.sort_unstable();
                t
            };
            set.contains(&(map(lo), map(hi)))
        })
    }

    /// Injective height function compatible with the matching: heights drop
    /// across matched covers and rise across unmatched ones. Errors when
    /// the matching has a cycle. Heights start at 1 and include the empty
    /// simplex when the complex carries it.
    pub fn height_function(&self, cx: &SimplicialComplex) -> Result<HeightFunction> {
        self.validate(cx)?;
        let c = Compiled::new(cx, self)?;
        // Edge u → v means h(u) > h(v). Matched σ ⋖ τ: σ → τ; unmatched
        // covers point the other way.
        let mut out_edges: Vec<Vec<u32>> = vec![Vec::new(); c.total];
        c.for_each_cover(|lo, hi| {
            let (from, to) = if c.partner[lo] == hi as u32 { (lo, hi) } else { (hi, lo) };
            out_edges[from].push(to as u32);
        });
        let mut out_deg: Vec<u32> = out_edges.iter().map(|e| e.len() as u32).collect();
        let mut incoming: Vec<Vec<u32>> = vec![Vec::new(); c.total];
        for (u, es) in out_edges.iter().enumerate() {
            for &v in es {
                incoming[v as usize].push(u as u32);
            }
        }
        // Sinks first: nodes with no outgoing edges get the smallest
        // heights; ties resolved by id for determinism.
        let mut heap: BinaryHeap<std::cmp::Reverse<usize>> = (0..c.total)
            .filter(|&v| out_deg[v] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut h: Vec<u64> = vec![0; c.total];
        let mut next = 1u64;
        while let Some(std::cmp::Reverse(v)) = heap.pop() {
            h[v] = next;
            next += 1;
            for &u in &incoming[v] {
                out_deg[u as usize] -= 1;
                if out_deg[u as usize] == 0 {
                    heap.push(std::cmp::Reverse(u as usize));
                }
            }
        }
        if h.iter().any(|&x| x == 0) {
            return Err(Error::CyclicMatching(h.iter().filter(|&&x| x == 0).count()));
        }
        Ok(HeightFunction { heights: h, compiled_empty: c.has_empty })
    }

    /// Collapse the complex along the matching. Requires the unpaired cells
    /// (together with the empty-simplex pair, which cannot be collapsed) to
    /// form a subcomplex; returns the elementary collapse steps in the order
    /// performed and the residual complex. Every step is verified to be a
    /// free-face removal at the moment it happens.
    pub fn collapse_sequence(&self, cx: &SimplicialComplex) -> Result<Collapse> {
        if let Some(cycle) = self.find_cycle(cx)? {
            return Err(Error::CyclicMatching(cycle.len() / 2));
        }
        let c = Compiled::new(cx, self)?;
        let h = self.height_function(cx)?;

        // Residue: unpaired cells plus the empty-pair cells.
        let mut in_residue: Vec<bool> = (0..c.total)
            .map(|v| c.partner[v] == u32::MAX)
            .collect();
        if c.has_empty && c.partner[0] != u32::MAX {
            in_residue[0] = true;
            in_residue[c.partner[0] as usize] = true;
        }
        // The residue must be downward closed.
        for v in 0..c.total {
            if !in_residue[v] {
                continue;
            }
            let s = c.simplex(v);
            for f in facets(&s) {
                if f.is_empty() && !c.has_empty {
                    continue;
                }
                let fid = c.id(&f).expect("closed complex");
                if !in_residue[fid] {
                    return Err(Error::InvalidMatching(format!(
                        "critical cells are not a subcomplex: {s:?} is critical, its facet {f:?} is paired"
                    )));
                }
            }
        }

        // Coface counts for the free-face checks.
        let mut cofaces: Vec<u32> = vec![0; c.total];
        for v in 0..c.total {
            for f in facets(&c.simplex(v)) {
                if f.is_empty() && !c.has_empty {
                    continue;
                }
                cofaces[c.id(&f).unwrap()] += 1;
            }
        }

        // Worklist of currently free pairs, preferring high upper cells.
        let mut alive: Vec<bool> = vec![true; c.total];
        let free = |lo: usize, hi: usize, cofaces: &[u32]| cofaces[lo] == 1 && cofaces[hi] == 0;
        let mut heap: BinaryHeap<(u64, usize)> = BinaryHeap::new();
        let mut pending = 0usize;
        for v in 0..c.total {
            let p = c.partner[v];
            if p != u32::MAX && c.is_lower(v) && !in_residue[v] {
                pending += 1;
                if free(v, p as usize, &cofaces) {
                    heap.push((h.heights[p as usize], v));
                }
            }
        }
        let mut steps: Vec<(Simplex, Simplex)> = Vec::new();
        let mut done: Vec<bool> = vec![false; c.total];
        while let Some((_, lo)) = heap.pop() {
            if done[lo] {
                continue;
            }
            let hi = c.partner[lo] as usize;
            debug_assert!(free(lo, hi, &cofaces) && alive[lo] && alive[hi]);
            done[lo] = true;
            alive[lo] = false;
            alive[hi] = false;
            pending -= 1;
            steps.push((c.simplex(lo), c.simplex(hi)));
            for v in [hi, lo] {
                for f in facets(&c.simplex(v)) {
                    if f.is_empty() && !c.has_empty {
                        continue;
                    }
                    let fid = c.id(&f).unwrap();
                    cofaces[fid] -= 1;
                    // The facet's pair may have become free.
                    let flo = if c.is_lower(fid) {
                        Some(fid)
                    } else if c.partner[fid] != u32::MAX {
                        Some(c.partner[fid] as usize)
                    } else {
                        None
                    };
                    if let Some(flo) = flo {
                        let fp = c.partner[flo];
                        if fp != u32::MAX
                            && !done[flo]
                            && !in_residue[flo]
                            && alive[flo]
                            && free(flo, fp as usize, &cofaces)
                        {
                            heap.push((h.heights[fp as usize], flo));
                        }
                    }
                }
            }
        }
        if pending > 0 {
            return Err(Error::InvalidMatching(format!(
                "collapse stalled with {pending} pairs never becoming free"
            )));
        }
        let residue = SimplicialComplex::from_simplices(
            (0..c.total).filter(|&v| alive[v]).map(|v| c.simplex(v)).filter(|s| !s.is_empty()),
            cx.includes_empty(),
        );
        Ok(Collapse { steps, residue })
    }
}

/// Heights per simplex produced by [`Matching::height_function`].
pub struct HeightFunction {
    heights: Vec<u64>,
    compiled_empty: bool,
}

impl HeightFunction {
    /// Height of a simplex by its compiled id; use [`HeightFunction::of`]
    /// for simplex access.
    pub fn by_id(&self, id: usize) -> u64 {
        self.heights[id]
    }

    pub fn of(&self, cx: &SimplicialComplex, s: &[u32]) -> Option<u64> {
        let c = CompiledIds::new(cx);
        debug_assert_eq!(c.has_empty, self.compiled_empty);
        c.id(s).map(|i| self.heights[i])
    }
}

/// An executed collapse: elementary steps in order, and what remains.
pub struct Collapse {
    pub steps: Vec<(Simplex, Simplex)>,
    pub residue: SimplicialComplex,
}

/// Build the matching induced by a height function: covers σ ⋖ τ with
/// h(σ) ≥ h(τ) are paired, after verifying that each simplex sees at most
/// one such inversion (counting both directions).
pub fn matching_from_height(
    cx: &SimplicialComplex,
    h: impl Fn(&[u32]) -> i64,
) -> Result<Matching> {
    let c = CompiledIds::new(cx);
    let mut inversions: Vec<u32> = vec![0; c.total];
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    c.for_each_cover(|lo, hi| {
        let slo = c.simplex(lo);
        let shi = c.simplex(hi);
        if h(&slo) >= h(&shi) {
            inversions[lo] += 1;
            inversions[hi] += 1;
            pairs.push((slo, shi));
        }
    });
    if let Some(v) = (0..c.total).find(|&v| inversions[v] > 1) {
        return Err(Error::InvalidMatching(format!(
            "height function has {} inversions at {:?}",
            inversions[v],
            c.simplex(v)
        )));
    }
    Matching::from_pairs(pairs)
}

/// Brute-force search for a closed V-path by walking every path. Quadratic
/// to exponential; meant as an independent cross-check on small complexes.
pub fn exhaustive_vpath_cycle(m: &Matching) -> bool {
    let partner: HashMap<&[u32], &Simplex> =
        m.pairs().iter().map(|(lo, hi)| (lo.as_slice(), hi)).collect();
    fn walk(
        partner: &HashMap<&[u32], &Simplex>,
        start: &[u32],
        cur: &[u32],
        visited: &mut Vec<Simplex>,
    ) -> bool {
        let Some(&hi) = partner.get(cur) else { return false };
        for f in facets(hi) {
            if f.as_slice() == cur {
                continue;
            }
            if f.as_slice() == start {
                return true;
            }
            if !partner.contains_key(f.as_slice()) || visited.contains(&f) {
                continue;
            }
            visited.push(f.clone());
            let found = walk(partner, start, &f, visited);
            visited.pop();
            if found {
                return true;
            }
        }
        false
    }
    partner.keys().any(|&start| {
        let mut visited = vec![start.to_vec()];
        walk(&partner, start, start, &mut visited)
    })
}

/// All facets of a simplex (the empty simplex has none).
pub fn facets(s: &[u32]) -> Vec<Simplex> {
    (0..s.len())
        .map(|i| {
            let mut f = s.to_vec();
            f.remove(i);
            f
        })
        .collect()
}

/// A small random complex for fuzzing: up to `max_vertices` vertices,
/// random facets of size at most 4, randomly augmented.
pub fn random_complex(rng: &mut impl Rng, max_vertices: u32) -> SimplicialComplex {
    let nv = rng.random_range(1..=max_vertices.max(1));
    let nfacets = rng.random_range(1..=(2 * nv).min(10));
    let mut facets: Vec<Simplex> = Vec::new();
    for _ in 0..nfacets {
        let size = rng.random_range(1..=4u32.min(nv));
        let mut f: Simplex = Vec::new();
        while (f.len() as u32) < size {
            let v = rng.random_range(1..=nv);
            if !f.contains(&v) {
                f.push(v);
            }
        }
        f.sort_unstable();
        facets.push(f);
    }
    SimplicialComplex::from_facets(facets, rng.random_bool(0.5))
}

/// Pair covers greedily in random order. The result is a valid partial
/// matching but frequently a cyclic one, which is the point: it exercises
/// the acyclicity checkers.
pub fn greedy_matching(cx: &SimplicialComplex, rng: &mut impl Rng) -> Matching {
    let mut covers: Vec<(Simplex, Simplex)> = Vec::new();
    if cx.includes_empty() {
        for v in cx.simplices(0) {
            covers.push((vec![], v.clone()));
        }
    }
    for s in cx.iter() {
        for f in facets(s) {
            if !f.is_empty() {
                covers.push((f, s.clone()));
            }
        }
    }
    // Fisher–Yates over the cover list.
    for i in (1..covers.len()).rev() {
        covers.swap(i, rng.random_range(0..=i));
    }
    let mut used: HashSet<Simplex> = HashSet::new();
    let mut pairs = Vec::new();
    for (lo, hi) in covers {
        if !used.contains(&lo) && !used.contains(&hi) {
            used.insert(lo.clone());
            used.insert(hi.clone());
            pairs.push((lo, hi));
        }
    }
    Matching::from_pairs(pairs).expect("covers are facet pairs")
}

/// Compiled ids for one complex: the empty simplex (when present) is id 0,
/// nonempty simplices follow in (dimension, lexicographic) order.
struct CompiledIds<'a> {
    cx: &'a SimplicialComplex,
    base: Vec<usize>,
    has_empty: bool,
    total: usize,
}

impl<'a> CompiledIds<'a> {
    fn new(cx: &'a SimplicialComplex) -> CompiledIds<'a> {
        let has_empty = cx.includes_empty();
        let mut base = Vec::new();
        let mut acc = has_empty as usize;
        let top = cx.dim().max(-1) as usize + 1;
        for d in 0..top {
            base.push(acc);
            acc += cx.simplices(d).len();
        }
        CompiledIds { cx, base, has_empty, total: acc }
    }

    fn id(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return self.has_empty.then_some(0);
        }
        self.cx.id_of(s).map(|(d, i)| self.base[d] + i)
    }

    fn simplex(&self, id: usize) -> Simplex {
        if self.has_empty && id == 0 {
            return vec![];
        }
        let d = match self.base.binary_search(&id) {
            Ok(mut d) => {
                // Empty buckets share a base; take the last dimension that
                // actually starts here.
                while d + 1 < self.base.len() && self.base[d + 1] == id {
                    d += 1;
                }
                d
            }
            Err(d) => d - 1,
        };
        self.cx.simplices(d)[id - self.base[d]].clone()
    }

    /// Visit every cover (facet, simplex) pair, the empty simplex included.
    fn for_each_cover(&self, mut visit: impl FnMut(usize, usize)) {
        if self.has_empty {
            for i in 0..self.cx.simplices(0).len() {
                visit(0, self.base[0] + i);
            }
        }
        for d in 1..=self.cx.dim().max(0) as usize {
            for (i, s) in self.cx.simplices(d).iter().enumerate() {
                let hi = self.base[d] + i;
                for f in facets(s) {
                    visit(self.id(&f).expect("closed complex"), hi);
                }
            }
        }
    }
}

/// Ids plus the partner array of a matching.
struct Compiled<'a> {
    ids: CompiledIds<'a>,
    partner: Vec<u32>,
}

impl<'a> std::ops::Deref for Compiled<'a> {
    type Target = CompiledIds<'a>;
    fn deref(&self) -> &CompiledIds<'a> {
        &self.ids
    }
}

impl<'a> Compiled<'a> {
    fn new(cx: &'a SimplicialComplex, m: &Matching) -> Result<Compiled<'a>> {
        let ids = CompiledIds::new(cx);
        let mut partner: Vec<u32> = vec![u32::MAX; ids.total];
        for (lo, hi) in m.pairs() {
            let l = ids
                .id(lo)
                .ok_or_else(|| Error::InvalidMatching(format!("{lo:?} not in the complex")))?;
            let h = ids
                .id(hi)
                .ok_or_else(|| Error::InvalidMatching(format!("{hi:?} not in the complex")))?;
            partner[l] = h as u32;
            partner[h] = l as u32;
        }
        Ok(Compiled { ids, partner })
    }

    /// True when the id is the lower half of a pair. Ids ascend with
    /// dimension, so the comparison is on ids.
    fn is_lower(&self, v: usize) -> bool {
        let p = self.partner[v];
        p != u32::MAX && p as usize > v
    }

    /// Lower matched cells reachable in one V-path step from `v`.
    fn lower_successors(&self, v: usize) -> Vec<usize> {
        let tau = self.partner[v] as usize;
        let mut out = Vec::new();
        for f in facets(&self.simplex(tau)) {
            let fid = self.id(&f).expect("closed complex");
            if fid != v && self.is_lower(fid) {
                out.push(fid);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex_star_matching(cx: &SimplicialComplex, v: u32) -> Matching {
        // Pair σ ∌ v with σ ∪ {v} whenever both lie in the complex; for a
        // cone with apex v this is a perfect matching.
        let mut pairs = Vec::new();
        if cx.includes_empty() && cx.contains(&[v]) {
            pairs.push((vec![], vec![v]));
        }
        for s in cx.iter() {
            if s.contains(&v) {
                continue;
            }
            let mut t = s.clone();
            t.push(v);
            t.sort_unstable();
            if cx.contains(&t) {
                pairs.push((s.clone(), t));
            }
        }
        Matching::from_pairs(pairs).unwrap()
    }

    #[test]
    fn full_triangle_collapses_to_a_point() {
        let cx = SimplicialComplex::full_simplex(&[1, 2, 3]);
        let m = vertex_star_matching(&cx, 1);
        m.validate(&cx).unwrap();
        assert!(m.find_cycle(&cx).unwrap().is_none());
        let (crit, empty_crit) = m.critical_cells(&cx);
        assert!(crit.is_empty() && !empty_crit);
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.steps.len(), 3);
        assert_eq!(collapse.residue.f_vector(), vec![1]);
        assert!(collapse.residue.contains(&[1]));
    }

    #[test]
    fn circle_matching_is_acyclic_but_not_a_collapse() {
        let cx = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        let m = vertex_star_matching(&cx, 1);
        m.validate(&cx).unwrap();
        assert!(m.find_cycle(&cx).unwrap().is_none());
        let (crit, _) = m.critical_cells(&cx);
        assert_eq!(crit, vec![vec![2, 3]]);
        // The critical edge's vertices are paired away, so the unpaired
        // cells are not a subcomplex and no collapse exists.
        assert!(matches!(m.collapse_sequence(&cx), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn rotating_matching_has_a_cycle() {
        let cx = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        let m = Matching::from_pairs([
            (vec![1], vec![1, 2]),
            (vec![2], vec![2, 3]),
            (vec![3], vec![1, 3]),
        ])
        .unwrap();
        m.validate(&cx).unwrap();
        let cycle = m.find_cycle(&cx).unwrap().unwrap();
        assert!(cycle.len() >= 6);
        assert_eq!(cycle.first(), cycle.last());
        assert!(exhaustive_vpath_cycle(&m));
        assert!(m.height_function(&cx).is_err());
        assert!(matches!(m.collapse_sequence(&cx), Err(Error::CyclicMatching(_))));
    }

    #[test]
    fn exhaustive_checker_agrees_on_acyclic() {
        let cx = SimplicialComplex::full_simplex(&[1, 2, 3]);
        let m = vertex_star_matching(&cx, 1);
        assert!(!exhaustive_vpath_cycle(&m));
    }

    #[test]
    fn height_function_round_trips() {
        let cx = SimplicialComplex::full_simplex(&[1, 2, 3, 4]);
        let m = vertex_star_matching(&cx, 2);
        let h = m.height_function(&cx).unwrap();
        // Heights are injective and induce the same matching back.
        let ids = CompiledIds::new(&cx);
        let mut seen: Vec<u64> = (0..ids.total).map(|v| h.by_id(v)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), ids.total);
        let m2 = matching_from_height(&cx, |s| {
            h.of(&cx, s).unwrap() as i64
        })
        .unwrap();
        assert_eq!(m.pairs(), m2.pairs());
    }

    #[test]
    fn constant_heights_are_rejected() {
        let cx = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        assert!(matches!(
            matching_from_height(&cx, |_| 0),
            Err(Error::InvalidMatching(_))
        ));
    }

    #[test]
    fn dimension_heights_give_the_empty_matching() {
        let cx = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        let m = matching_from_height(&cx, |s| s.len() as i64).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn equivariance_under_a_mirror() {
        // Square 1-2-3-4 with the mirror fixing 1 and 3.
        let mirror: HashMap<u32, u32> = [(1, 1), (2, 4), (3, 3), (4, 2)].into();
        let sym = Matching::from_pairs([
            (vec![], vec![1]),
            (vec![2], vec![1, 2]),
            (vec![4], vec![1, 4]),
        ])
        .unwrap();
        assert!(sym.is_equivariant(&mirror));
        let asym = Matching::from_pairs([(vec![2], vec![1, 2]), (vec![3], vec![2, 3])]).unwrap();
        assert!(!asym.is_equivariant(&mirror));
    }

    #[test]
    fn collapse_onto_a_subcomplex() {
        // Full triangle with a pendant edge {3,4}; collapse the triangle
        // part onto the edge {1,3} ∪ {3,4} path.
        let cx = SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4]], true);
        let m = Matching::from_pairs([
            (vec![2], vec![1, 2]),
            (vec![2, 3], vec![1, 2, 3]),
        ])
        .unwrap();
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.steps.len(), 2);
        assert_eq!(collapse.residue.f_vector(), vec![3, 2]);
        assert!(collapse.residue.contains(&[1, 3]) && collapse.residue.contains(&[3, 4]));
        // First step removes the top simplex: its lower cell frees up only
        // after nothing sits above it, and nothing sits above it from the
        // start.
        assert_eq!(collapse.steps[0], (vec![2, 3], vec![1, 2, 3]));
    }

    #[test]
    fn greedy_matchings_validate_and_checkers_agree() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let cx = random_complex(&mut rng, 6);
            let m = greedy_matching(&cx, &mut rng);
            m.validate(&cx).unwrap();
            let dfs = m.find_cycle(&cx).unwrap().is_some();
            let brute = exhaustive_vpath_cycle(&m);
            assert_eq!(dfs, brute, "checkers disagree on {cx:?}");
        }
    }

    #[test]
    fn collapse_without_the_empty_simplex() {
        // Vertices have no facets to count when the complex omits the
        // empty simplex; the collapse must not try to look it up.
        let cx = SimplicialComplex::from_facets([vec![1, 2, 3]], false);
        let m = Matching::from_pairs([
            (vec![2], vec![1, 2]),
            (vec![3], vec![1, 3]),
            (vec![2, 3], vec![1, 2, 3]),
        ])
        .unwrap();
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.steps.len(), 3);
        assert_eq!(collapse.residue.f_vector(), vec![1]);
        assert!(collapse.residue.contains(&[1]));
    }
}
