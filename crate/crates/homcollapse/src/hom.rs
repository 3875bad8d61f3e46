//! Cells of the multihomomorphism complex Hom(Γ, K_n).
//!
//! A cell assigns to every vertex of Γ a nonempty set of colors so that
//! adjacent vertices get disjoint sets; cells are ordered componentwise by
//! inclusion. `hom_cells` enumerates all of them. `hom_i_cells` is the
//! constrained variant: a set I of independent vertices is deleted from Γ,
//! and a cell on the rest survives only if every deleted vertex still has a
//! color available, i.e. the union of the sets on its neighbors is not the
//! whole palette.

use crate::graph::Graph;
use crate::poset::Poset;
use crate::set::LabelSet;
use crate::{Error, Result};

/// Cells of Hom(Γ, K_n) for a fixed graph and palette, in canonical order:
/// ascending total size, ties broken lexicographically on the per-vertex
/// sets. That order is a linear extension of the cell poset.
pub struct HomComplex {
    graph: Graph,
    domain: Vec<u32>,
    colors: u32,
    cells: Vec<Vec<LabelSet>>,
}

fn rank(cell: &[LabelSet]) -> u32 {
    cell.iter().map(|s| s.len()).sum()
}

fn cell_key<'a>(cell: &'a [LabelSet]) -> (u32, &'a [LabelSet]) {
    (rank(cell), cell)
}

impl HomComplex {
    /// All cells of Hom(Γ, K_n). Fails when the cell count would pass
    /// `max_cells`.
    pub fn build(graph: &Graph, colors: u32, max_cells: u64) -> Result<HomComplex> {
        let domain: Vec<u32> = graph.vertices().collect();
        Self::enumerate(graph.clone(), domain, colors, max_cells, |_| true)
    }

    /// Cells of Hom(Γ∖I, K_n) extendable over every vertex of I: for each
    /// u ∈ I the sets on the neighbors of u must not cover the palette.
    /// I must be independent in Γ.
    pub fn build_constrained(
        graph: &Graph,
        independent: LabelSet,
        colors: u32,
        max_cells: u64,
    ) -> Result<HomComplex> {
        for v in independent.iter() {
            if v > graph.vertex_count() {
                return Err(Error::InvalidParameter(format!("vertex {v} not in the graph")));
            }
        }
        if !graph.is_independent(independent) {
            return Err(Error::InvalidParameter("deleted set is not independent".into()));
        }
        let restricted = graph.delete_vertices(independent);
        let domain: Vec<u32> =
            graph.vertices().filter(|&v| !independent.contains(v)).collect();
        let neighbor_lists: Vec<Vec<usize>> = independent
            .iter()
            .map(|u| {
                graph
                    .neighbors(u)
                    .iter()
                    .map(|w| domain.binary_search(&w).expect("neighbor survives deletion"))
                    .collect()
            })
            .collect();
        let full = LabelSet::full(colors);
        Self::enumerate(restricted, domain, colors, max_cells, move |cell| {
            neighbor_lists.iter().all(|ns| {
                let mut union = LabelSet::EMPTY;
                for &k in ns {
                    union = union.union(cell[k]);
                }
                union != full
            })
        })
    }

    fn enumerate(
        graph: Graph,
        domain: Vec<u32>,
        colors: u32,
        max_cells: u64,
        keep: impl Fn(&[LabelSet]) -> bool,
    ) -> Result<HomComplex> {
        if colors == 0 || colors > crate::set::MAX_LABEL {
            return Err(Error::InvalidParameter(format!("palette size {colors} out of range")));
        }
        // Earlier-indexed neighbors of each domain position.
        let prior: Vec<Vec<usize>> = domain
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..i).filter(|&k| graph.has_edge(domain[k], v)).collect()
            })
            .collect();
        let mut cells: Vec<Vec<LabelSet>> = Vec::new();
        let mut cur: Vec<LabelSet> = Vec::with_capacity(domain.len());
        dfs(&prior, colors, max_cells, &keep, &mut cur, &mut cells)?;
        cells.sort_unstable_by(|a, b| cell_key(a).cmp(&cell_key(b)));
        Ok(HomComplex { graph, domain, colors, cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    /// Vertices the cells assign sets to, ascending.
    pub fn domain(&self) -> &[u32] {
        &self.domain
    }

    pub fn cell(&self, i: usize) -> &[LabelSet] {
        &self.cells[i]
    }

    pub fn cells(&self) -> impl Iterator<Item = &[LabelSet]> {
        self.cells.iter().map(Vec::as_slice)
    }

    /// Dimension of a cell: Σ (|set| − 1).
    pub fn dim(&self, i: usize) -> u32 {
        rank(&self.cells[i]) - self.domain.len() as u32
    }

    /// Number of 0-cells, i.e. cells whose sets are all singletons. These
    /// are exactly the graph homomorphisms (proper colorings).
    pub fn zero_cell_count(&self) -> u64 {
        self.cells.iter().filter(|c| rank(c) == self.domain.len() as u32).count() as u64
    }

    pub fn index_of(&self, cell: &[LabelSet]) -> Option<usize> {
        self.cells.binary_search_by(|c| cell_key(c).cmp(&cell_key(cell))).ok()
    }

    /// Componentwise inclusion of cells.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.cells[a].iter().zip(&self.cells[b]).all(|(x, y)| x.is_subset(*y))
    }

    /// True when no color can be added to any vertex without breaking a
    /// disjointness constraint. This is maximality in the unconstrained
    /// complex; constrained complexes can have smaller maximal cells.
    pub fn is_maximal(&self, i: usize) -> bool {
        let cell = &self.cells[i];
        for (k, &v) in self.domain.iter().enumerate() {
            let mut blocked = cell[k];
            for (k2, &w) in self.domain.iter().enumerate() {
                if self.graph.has_edge(v, w) {
                    blocked = blocked.union(cell[k2]);
                }
            }
            if blocked != LabelSet::full(self.colors) {
                return false;
            }
        }
        true
    }

    /// Sorted distinct dimensions of the maximal cells.
    pub fn maximal_dims(&self) -> Vec<u32> {
        let mut dims: Vec<u32> =
            (0..self.len()).filter(|&i| self.is_maximal(i)).map(|i| self.dim(i)).collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }

    /// The cell poset. Quadratic in the number of cells, so guarded.
    pub fn poset(&self, max_elements: usize) -> Result<Poset> {
        if self.len() > max_elements {
            return Err(Error::CapExceeded("poset elements", self.len() as u64, max_elements as u64));
        }
        Ok(Poset::from_less(self.len(), |a, b| a != b && self.leq(a, b)))
    }

    /// Permutation of cells induced by the graph's attached symmetry, when
    /// one is present and survives on the domain.
    pub fn involution(&self) -> Option<Vec<usize>> {
        let p = self.graph.involution()?;
        if self.domain.iter().any(|&v| !self.domain.contains(&p[v as usize])) {
            return None;
        }
        let mut out = Vec::with_capacity(self.len());
        let mut image: Vec<LabelSet> = vec![LabelSet::EMPTY; self.domain.len()];
        for cell in &self.cells {
            for (k, &v) in self.domain.iter().enumerate() {
                let target = self.domain.binary_search(&p[v as usize]).unwrap();
                image[target] = cell[k];
            }
            out.push(self.index_of(&image).expect("symmetry permutes the cells"));
        }
        Some(out)
    }

    /// One line per cell in canonical order: the per-vertex sets as digit
    /// strings joined with `|`, domain order.
    pub fn dump_lines(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|c| c.iter().map(|s| s.to_digits()).collect::<Vec<_>>().join("|"))
            .collect()
    }
}

fn dfs(
    prior: &[Vec<usize>],
    colors: u32,
    max_cells: u64,
    keep: &impl Fn(&[LabelSet]) -> bool,
    cur: &mut Vec<LabelSet>,
    out: &mut Vec<Vec<LabelSet>>,
) -> Result<()> {
    let idx = cur.len();
    if idx == prior.len() {
        if keep(cur) {
            if out.len() as u64 >= max_cells {
                return Err(Error::CapExceeded("cells", out.len() as u64 + 1, max_cells));
            }
            out.push(cur.clone());
        }
        return Ok(());
    }
    let mut banned = LabelSet::EMPTY;
    for &k in &prior[idx] {
        banned = banned.union(cur[k]);
    }
    let allowed = banned.complement(colors);
    for s in allowed.subsets() {
        if s.is_empty() {
            continue;
        }
        cur.push(s);
        dfs(prior, colors, max_cells, keep, cur, out)?;
        cur.pop();
    }
    Ok(())
}

/// Cells of Hom(Γ, K_n).
pub fn hom_cells(graph: &Graph, colors: u32, max_cells: u64) -> Result<HomComplex> {
    HomComplex::build(graph, colors, max_cells)
}

/// Cells of Hom(Γ∖I, K_n) extendable over I.
pub fn hom_i_cells(
    graph: &Graph,
    independent: LabelSet,
    colors: u32,
    max_cells: u64,
) -> Result<HomComplex> {
    HomComplex::build_constrained(graph, independent, colors, max_cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_cells() {
        let k2 = Graph::named("edge").unwrap();
        let h = hom_cells(&k2, 3, 1000).unwrap();
        // Ordered pairs of disjoint nonempty subsets of {1,2,3}.
        assert_eq!(h.len(), 12);
        assert_eq!(h.zero_cell_count(), 6);
        let dims: Vec<u32> = (0..h.len()).map(|i| h.dim(i)).collect();
        assert_eq!(dims.iter().filter(|&&d| d == 0).count(), 6);
        assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 6);
        assert_eq!(h.maximal_dims(), vec![1]);
    }

    #[test]
    fn pentagon_cells_match_coloring_counts() {
        let c5 = Graph::named("c5").unwrap();
        let h = hom_cells(&c5, 3, 100_000).unwrap();
        assert_eq!(h.len(), 60);
        assert_eq!(h.zero_cell_count(), c5.count_proper_colorings(3));
        assert_eq!(h.maximal_dims(), vec![1]);
    }

    #[test]
    fn path_cells() {
        let p4 = Graph::named("p4").unwrap();
        let h = hom_cells(&p4, 3, 100_000).unwrap();
        assert_eq!(h.len(), 174);
        assert_eq!(h.zero_cell_count(), 48);
        assert_eq!(h.maximal_dims(), vec![2, 3]);
    }

    #[test]
    fn cell_order_is_linear_extension() {
        let h = hom_cells(&Graph::named("c4").unwrap(), 3, 100_000).unwrap();
        let p = h.poset(10_000).unwrap();
        assert!(p.is_linear_extension_order());
    }

    #[test]
    fn constrained_pentagon() {
        let c5 = Graph::named("c5").unwrap();
        let h = hom_i_cells(&c5, LabelSet::singleton(3), 3, 100_000).unwrap();
        assert_eq!(h.len(), 48);
        assert_eq!(h.domain(), &[1, 2, 4, 5]);
        // The pentagon's mirror fixes 3, so the symmetry survives.
        let inv = h.involution().unwrap();
        for (i, &j) in inv.iter().enumerate() {
            assert_eq!(inv[j], i);
        }
    }

    #[test]
    fn constrained_path() {
        let p4 = Graph::named("p4").unwrap();
        let h = hom_i_cells(&p4, LabelSet::singleton(3), 3, 100_000).unwrap();
        assert_eq!(h.len(), 120);
    }

    #[test]
    fn deleted_set_must_be_independent() {
        let c5 = Graph::named("c5").unwrap();
        let bad = hom_i_cells(&c5, LabelSet::from_labels([1, 2]), 3, 1000);
        assert!(matches!(bad, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let c5 = Graph::named("c5").unwrap();
        assert!(matches!(
            hom_cells(&c5, 3, 10),
            Err(Error::CapExceeded("cells", 11, 10))
        ));
    }

    #[test]
    fn involution_is_a_poset_map() {
        let c5 = Graph::named("c5").unwrap();
        let h = hom_cells(&c5, 3, 100_000).unwrap();
        let inv = h.involution().unwrap();
        for a in 0..h.len() {
            for b in 0..h.len() {
                assert_eq!(h.leq(a, b), h.leq(inv[a], inv[b]));
            }
        }
    }
}
