//! Finite posets with dense bitset comparability, plus order complexes.
//!
//! Elements are identified with `0..len`. Most constructors in this crate
//! hand elements over in a linear extension (smaller elements first); that
//! makes every chain an ascending id sequence, so chains double as canonical
//! simplices of the order complex with no extra bookkeeping. The struct does
//! not force that ordering on you (`opposite` breaks it on purpose), but
//! `order_complex` refuses to run without it.

use crate::complex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Poset {
    len: usize,
    blocks: usize,
    /// Row i: bit j set iff element j is strictly below element i.
    below: Vec<u64>,
}

impl Poset {
    /// Build from a strict-order predicate. `less(i, j)` must describe an
    /// irreflexive transitive relation; that is checked.
    pub fn from_less(len: usize, less: impl Fn(usize, usize) -> bool) -> Poset {
        let blocks = len.div_ceil(64).max(1);
        let mut below = vec![0u64; len * blocks];
        for i in 0..len {
            for j in 0..len {
                if i != j && less(j, i) {
                    below[i * blocks + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let p = Poset { len, blocks, below };
        debug_assert!(p.transitivity_violation().is_none(), "relation is not transitive");
        p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Strict order.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j * self.blocks + i / 64] >> (i % 64) & 1 == 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    /// Ids strictly below i, ascending.
    pub fn below(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let row = &self.below[i * self.blocks..(i + 1) * self.blocks];
        for (b, &word) in row.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(b * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// Ids strictly above i, ascending.
    pub fn above(&self, i: usize) -> Vec<usize> {
        (0..self.len).filter(|&j| self.less(i, j)).collect()
    }

    pub fn below_count(&self, i: usize) -> usize {
        self.below[i * self.blocks..(i + 1) * self.blocks]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Covering pairs (i, j) with i ⋖ j.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len {
            for i in self.below(j) {
                let between = (0..self.len).any(|m| self.less(i, m) && self.less(m, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Length of the longest chain strictly below i (0 for minimal
    /// elements). Requires linear-extension ids.
    pub fn heights(&self) -> Result<Vec<usize>> {
        self.require_linear_extension()?;
        let mut h = vec![0usize; self.len];
        for j in 0..self.len {
            for i in self.below(j) {
                h[j] = h[j].max(h[i] + 1);
            }
        }
        Ok(h)
    }

    /// True when id order is a linear extension: i < j whenever less(i, j).
    pub fn is_linear_extension_order(&self) -> bool {
        (0..self.len).all(|j| {
            let row = &self.below[j * self.blocks..(j + 1) * self.blocks];
            // All bits in row must sit strictly below position j.
            let (block, pos) = (j / 64, j % 64);
            row.iter().enumerate().all(|(b, &w)| match b.cmp(&block) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => w & !((1u64 << pos) - 1) == 0,
                std::cmp::Ordering::Greater => w == 0,
            })
        })
    }

    fn require_linear_extension(&self) -> Result<()> {
        if self.is_linear_extension_order() {
            Ok(())
        } else {
            Err(Error::NotLinearExtension)
        }
    }

    /// Number of nonempty chains, grouped by length (index d counts chains
    /// of d+1 elements). Cheap relative to materializing the chains.
    pub fn count_chains(&self) -> Result<Vec<u64>> {
        self.require_linear_extension()?;
        // ways[i][d] = chains of d+1 elements ending at i.
        let mut ways: Vec<Vec<u64>> = vec![vec![1]; self.len];
        for j in 0..self.len {
            let mut acc: Vec<u64> = vec![0];
            for i in self.below(j) {
                for (d, &c) in ways[i].iter().enumerate() {
                    if acc.len() <= d + 1 {
                        acc.resize(d + 2, 0);
                    }
                    acc[d + 1] += c;
                }
            }
            acc[0] = 1;
            ways[j] = acc;
        }
        let mut totals: Vec<u64> = Vec::new();
        for w in &ways {
            for (d, &c) in w.iter().enumerate() {
                if totals.len() <= d {
                    totals.resize(d + 1, 0);
                }
                totals[d] += c;
            }
        }
        Ok(totals)
    }

    /// Order complex: simplices are the chains, vertex i = element i. The
    /// empty chain is included as the empty simplex. `max_chains` caps the
    /// total number of nonempty chains; the count is checked before any
    /// chain is materialized.
    pub fn order_complex(&self, max_chains: u64) -> Result<SimplicialComplex> {
        let total: u64 = self.count_chains()?.iter().sum();
        if total > max_chains {
            return Err(Error::CapExceeded("chains", total, max_chains));
        }
        let up: Vec<Vec<u32>> =
            (0..self.len).map(|i| self.above(i).into_iter().map(|j| j as u32).collect()).collect();
        let mut sims: Vec<Simplex> = Vec::with_capacity(total as usize);
        let mut chain: Simplex = Vec::new();
        for start in 0..self.len {
            chain.push(start as u32);
            extend_chains(&up, &mut chain, &mut sims);
            chain.pop();
        }
        Ok(SimplicialComplex::from_simplices(sims, true))
    }

    /// The same poset with the order reversed. Ids keep their meaning but
    /// are no longer in linear-extension order.
    pub fn opposite(&self) -> Poset {
        let mut below = vec![0u64; self.len * self.blocks];
        for j in 0..self.len {
            for i in 0..self.len {
                if self.less(j, i) {
                    below[j * self.blocks + i / 64] |= 1 << (i % 64);
                }
            }
        }
        Poset { len: self.len, blocks: self.blocks, below }
    }

    /// Induced subposet on `ids` (ascending, deduped); new element k
    /// corresponds to old element ids[k].
    pub fn induced(&self, ids: &[usize]) -> Poset {
        Poset::from_less(ids.len(), |a, b| self.less(ids[a], ids[b]))
    }

    /// Open lower interval {x : x < i}, as ids into self.
    pub fn lower_ids(&self, i: usize) -> Vec<usize> {
        self.below(i)
    }

    /// Open upper interval {x : x > i}, as ids into self.
    pub fn upper_ids(&self, i: usize) -> Vec<usize> {
        self.above(i)
    }

    fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.len {
            if self.less(a, a) {
                return Some((a, a, a));
            }
            for b in self.above(a) {
                for c in self.above(b) {
                    if !self.less(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

fn extend_chains(up: &[Vec<u32>], chain: &mut Simplex, out: &mut Vec<Simplex>) {
    out.push(chain.clone());
    let last = *chain.last().unwrap() as usize;
    for &next in &up[last] {
        // Ascending ids are automatically above everything in the chain
        // only if they are above the last element; comparability with the
        // rest follows by transitivity.
        chain.push(next);
        extend_chains(up, chain, out);
        chain.pop();
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({} elements, {} relations)", self.len, {
            (0..self.len).map(|i| self.below_count(i)).sum::<usize>()
        })
    }
}

/// Decide whether two posets are isomorphic, returning a witness map
/// (p-id → q-id) when they are. The search is exact: classes are refined by
/// iterated neighborhood signatures, then a backtracking assignment runs
/// with `node_cap` bounding the number of search nodes.
pub fn poset_isomorphic(p: &Poset, q: &Poset, node_cap: u64) -> Result<Option<Vec<usize>>> {
    if p.len() != q.len() {
        return Ok(None);
    }
    let n = p.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let (pc, qc) = match refine_classes(p, q) {
        Some(pair) => pair,
        None => return Ok(None),
    };
    // Bucket q by class.
    let nclasses = pc.iter().chain(qc.iter()).max().unwrap() + 1;
    let mut q_by_class: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
    for (j, &c) in qc.iter().enumerate() {
        q_by_class[c].push(j);
    }
    let mut class_size = vec![0usize; nclasses];
    for &c in &pc {
        class_size[c] += 1;
    }
    // Assign rare classes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size[pc[i]], i));

    let mut map: Vec<usize> = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes: u64 = 0;
    if search(p, q, &pc, &q_by_class, &order, 0, &mut map, &mut used, &mut nodes, node_cap)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Iterated signature refinement shared across both posets so class ids
/// align. Returns None when the class distributions differ (not isomorphic).
fn refine_classes(p: &Poset, q: &Poset) -> Option<(Vec<usize>, Vec<usize>)> {
    use std::collections::HashMap;
    let n = p.len();
    let sig0 = |poset: &Poset, i: usize| (poset.below_count(i), poset.above(i).len());
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    let assign = |key: (usize, usize), table: &mut HashMap<(usize, usize), usize>| {
        let next = table.len();
        *table.entry(key).or_insert(next)
    };
    let mut pc: Vec<usize> = (0..n).map(|i| assign(sig0(p, i), &mut table)).collect();
    let mut qc: Vec<usize> = (0..n).map(|i| assign(sig0(q, i), &mut table)).collect();
    loop {
        if !same_distribution(&pc, &qc) {
            return None;
        }
        let old = pc.iter().chain(qc.iter()).max().unwrap() + 1;
        let sig = |poset: &Poset, classes: &[usize], i: usize| {
            let mut below: Vec<usize> = poset.below(i).iter().map(|&j| classes[j]).collect();
            let mut above: Vec<usize> = poset.above(i).iter().map(|&j| classes[j]).collect();
            below.sort_unstable();
            above.sort_unstable();
            (classes[i], below, above)
        };
        let mut table: HashMap<(usize, Vec<usize>, Vec<usize>), usize> = HashMap::new();
        let assign = |key: (usize, Vec<usize>, Vec<usize>),
                          table: &mut HashMap<(usize, Vec<usize>, Vec<usize>), usize>| {
            let next = table.len();
            *table.entry(key).or_insert(next)
        };
        let npc: Vec<usize> = (0..n).map(|i| assign(sig(p, &pc, i), &mut table)).collect();
        let nqc: Vec<usize> = (0..n).map(|i| assign(sig(q, &qc, i), &mut table)).collect();
        let new = npc.iter().chain(nqc.iter()).max().unwrap() + 1;
        pc = npc;
        qc = nqc;
        if new == old {
            break;
        }
    }
    if same_distribution(&pc, &qc) {
        Some((pc, qc))
    } else {
        None
    }
}

fn same_distribution(a: &[usize], b: &[usize]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &Poset,
    q: &Poset,
    pc: &[usize],
    q_by_class: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    nodes: &mut u64,
    node_cap: u64,
) -> Result<bool> {
    if depth == order.len() {
        return Ok(true);
    }
    let i = order[depth];
    for &j in &q_by_class[pc[i]] {
        if used[j] {
            continue;
        }
        *nodes += 1;
        if *nodes > node_cap {
            return Err(Error::SearchCapExceeded(node_cap));
        }
        let ok = order[..depth].iter().all(|&x| {
            let y = map[x];
            p.less(x, i) == q.less(y, j) && p.less(i, x) == q.less(j, y)
        });
        if !ok {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if search(p, q, pc, q_by_class, order, depth + 1, map, used, nodes, node_cap)? {
            return Ok(true);
        }
        map[i] = usize::MAX;
        used[j] = false;
    }
    Ok(false)
}

/// Face poset of a complex: one element per nonempty simplex, ordered by
/// inclusion, ids in (dimension, lexicographic) order. Returns the poset and
/// the simplex each id stands for.
pub fn face_poset(cx: &SimplicialComplex) -> (Poset, Vec<Simplex>) {
    let elems: Vec<Simplex> = cx.iter().cloned().collect();
    let p = Poset::from_less(elems.len(), |a, b| {
        elems[a].len() < elems[b].len() && crate::complex::is_subset(&elems[a], &elems[b])
    });
    (p, elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisibility(n: usize) -> Poset {
        // Divisors of n under divisibility, ascending, as a test fixture.
        let divs: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        Poset::from_less(divs.len(), |a, b| divs[b] != divs[a] && divs[b] % divs[a] == 0)
    }

    #[test]
    fn divisor_lattice() {
        let p = divisibility(12); // 1,2,3,4,6,12
        assert_eq!(p.len(), 6);
        assert!(p.less(0, 5) && !p.less(1, 2));
        assert_eq!(p.below(5), vec![0, 1, 2, 3, 4]);
        assert_eq!(p.covers().len(), 7);
        assert!(p.is_linear_extension_order());
        assert_eq!(p.heights().unwrap(), vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn chains_of_a_two_chain() {
        let p = Poset::from_less(2, |a, b| a == 0 && b == 1);
        assert_eq!(p.count_chains().unwrap(), vec![2, 1]);
        let cx = p.order_complex(100).unwrap();
        assert_eq!(cx.f_vector(), vec![2, 1]);
        assert!(cx.includes_empty());
    }

    #[test]
    fn order_complex_of_antichain() {
        let p = Poset::from_less(4, |_, _| false);
        let cx = p.order_complex(10).unwrap();
        assert_eq!(cx.f_vector(), vec![4]);
    }

    #[test]
    fn chain_cap() {
        let p = divisibility(12);
        assert!(matches!(p.order_complex(3), Err(Error::CapExceeded(_, _, 3))));
    }

    #[test]
    fn opposite_reverses() {
        let p = divisibility(12);
        let q = p.opposite();
        assert!(q.less(5, 0) && !q.less(0, 5));
        assert!(!q.is_linear_extension_order());
        assert!(q.order_complex(100).is_err());
        assert!(q.heights().is_err());
    }

    #[test]
    fn induced_subposet() {
        let p = divisibility(12);
        // Keep 1, 4, 6, 12: a diamond.
        let q = p.induced(&[0, 3, 4, 5]);
        assert_eq!(q.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn face_poset_of_edge() {
        let cx = SimplicialComplex::full_simplex(&[1, 2]);
        let (p, elems) = face_poset(&cx);
        assert_eq!(p.len(), 3);
        assert_eq!(elems[2], vec![1, 2]);
        assert_eq!(p.covers(), vec![(0, 2), (1, 2)]);
        // Its order complex is the barycentric subdivision: a path of two
        // edges.
        let bary = p.order_complex(100).unwrap();
        assert_eq!(bary.f_vector(), vec![3, 2]);
    }

    #[test]
    fn isomorphism_grids() {
        // Divisors of 12 (2²·3) and 20 (2²·5) are both 3×2 grids.
        let p = divisibility(12);
        let q = divisibility(20);
        let w = poset_isomorphic(&p, &q, 10_000).unwrap().unwrap();
        for a in 0..p.len() {
            for b in 0..p.len() {
                assert_eq!(p.less(a, b), q.less(w[a], w[b]));
            }
        }
        // A six-chain is not a grid.
        let chain = divisibility(32);
        assert!(poset_isomorphic(&p, &chain, 10_000).unwrap().is_none());
    }

    #[test]
    fn isomorphism_is_direction_sensitive() {
        // One bottom under two tops, versus its mirror image.
        let v = Poset::from_less(3, |a, b| a == 0 && b > 0);
        let cap = Poset::from_less(3, |a, b| b == 2 && a < 2);
        assert!(poset_isomorphic(&v, &cap, 1000).unwrap().is_none());
        assert!(poset_isomorphic(&v, &cap.opposite(), 1000).unwrap().is_some());
    }

    #[test]
    fn isomorphism_search_cap() {
        let p = divisibility(12);
        assert!(matches!(
            poset_isomorphic(&p, &p, 2),
            Err(Error::SearchCapExceeded(2))
        ));
    }

    #[test]
    fn face_poset_order_complex_counts() {
        // Barycentric subdivision of the triangle boundary: hexagon.
        let cx = SimplicialComplex::simplex_boundary(&[1, 2, 3]);
        let (p, _) = face_poset(&cx);
        let sd = p.order_complex(1000).unwrap();
        assert_eq!(sd.f_vector(), vec![6, 6]);
        assert_eq!(sd.euler_characteristic(), 0);
    }
}
