//! Finite simple graphs on vertex set `{1, …, m}`, m ≤ 61.
//!
//! Graphs carry an optional involution (an order-2 automorphism) so that
//! complexes built from them inherit a Z/2 action. The named constructors
//! for paths and cycles attach the mirror symmetry `i ↦ m+2−i` where it is
//! an automorphism.

use crate::complex::{Simplex, SimplicialComplex};
use crate::set::LabelSet;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Graph {
    n: u32,
    adj: Vec<LabelSet>,
    involution: Option<Vec<u32>>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: u32) -> Graph {
        assert!(n <= crate::set::MAX_LABEL);
        Graph { n, adj: vec![LabelSet::EMPTY; n as usize + 1], involution: None }
    }

    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert!(u != v, "loops are not supported");
        assert!(u >= 1 && v >= 1 && u <= self.n && v <= self.n, "vertex out of range");
        self.adj[u as usize] = self.adj[u as usize].insert(v);
        self.adj[v as usize] = self.adj[v as usize].insert(u);
    }

    /// The cycle `1 − 2 − ⋯ − m − 1`, with no symmetry attached. See
    /// [`Graph::cycle_mirrored`] and [`Graph::pentagon`] for the mirrored
    /// versions.
    pub fn cycle(m: u32) -> Graph {
        assert!(m >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::empty(m);
        for v in 1..m {
            g.add_edge(v, v + 1);
        }
        g.add_edge(m, 1);
        g
    }

    /// The cycle on `1..=m` with the reflection `i ↦ m+2−i` (indices mod m,
    /// so `1 ↦ 1`) attached as its involution.
    pub fn cycle_mirrored(m: u32) -> Graph {
        let mut g = Graph::cycle(m);
        let perm: Vec<u32> = (0..=m).map(|i| if i == 0 { 0 } else { (m + 1 - i) % m + 1 }).collect();
        g.set_involution(perm).expect("cycle reflection is an automorphism");
        g
    }

    /// The path with `edges` edges on vertices `1..=edges+1`, with the
    /// mirror `i ↦ edges+2−i` attached. `Graph::path(4)` is the pentagon
    /// minus one edge: vertices 1..5, mirror `i ↦ 6−i` fixing vertex 3.
    pub fn path(edges: u32) -> Graph {
        assert!(edges >= 1);
        let m = edges + 1;
        let mut g = Graph::empty(m);
        for v in 1..m {
            g.add_edge(v, v + 1);
        }
        g.set_involution((0..=m).map(|i| if i == 0 { 0 } else { m + 1 - i }).collect())
            .expect("path mirror is an automorphism");
        g
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: u32) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The pentagon C5 with the reflection `i ↦ 6−i` (fixing vertex 3).
    pub fn pentagon() -> Graph {
        let mut g = Graph::cycle(5);
        g.set_involution(vec![0, 5, 4, 3, 2, 1]).expect("pentagon reflection");
        g
    }

    /// Look up a graph by the names accepted on the command line:
    /// `c<m>` (cycle), `p<e>` (path with e edges), `k<n>` (complete),
    /// `edge` (= k2).
    pub fn named(name: &str) -> Result<Graph> {
        let bad = || Error::InvalidParameter(format!("unknown graph name {name:?}"));
        if name == "edge" {
            return Ok(Graph::complete(2));
        }
        let (kind, num) = name.split_at(1);
        let m: u32 = num.parse().map_err(|_| bad())?;
        match kind {
            "c" if m == 5 => Ok(Graph::pentagon()),
            "c" if m >= 3 => Ok(Graph::cycle_mirrored(m)),
            "p" if m >= 1 => Ok(Graph::path(m)),
            "k" if m >= 1 => Ok(Graph::complete(m)),
            _ => Err(bad()),
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    pub fn neighbors(&self, v: u32) -> LabelSet {
        self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v)
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.adj[u as usize].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Attach an involution given as `perm[v] = image of v` (index 0 unused).
    /// Rejected unless it is an order-≤2 automorphism.
    pub fn set_involution(&mut self, perm: Vec<u32>) -> Result<()> {
        if perm.len() != self.n as usize + 1 {
            return Err(Error::InvalidParameter("involution has wrong length".into()));
        }
        for v in 1..=self.n {
            let w = perm[v as usize];
            if w < 1 || w > self.n || perm[w as usize] != v {
                return Err(Error::InvalidParameter(format!("not an involution at vertex {v}")));
            }
        }
        for (u, v) in self.edges() {
            if !self.has_edge(perm[u as usize], perm[v as usize]) {
                return Err(Error::InvalidParameter(format!(
                    "involution does not preserve edge ({u},{v})"
                )));
            }
        }
        self.involution = Some(perm);
        Ok(())
    }

    pub fn involution(&self) -> Option<&[u32]> {
        self.involution.as_deref()
    }

    /// Delete a set of vertices (and their edges); remaining vertices keep
    /// their labels. The involution survives only if it preserves the
    /// deleted set.
    pub fn delete_vertices(&self, del: LabelSet) -> Graph {
        let mut adj = vec![LabelSet::EMPTY; self.n as usize + 1];
        for v in 1..=self.n {
            if !del.contains(v) {
                adj[v as usize] = self.adj[v as usize].difference(del);
            }
        }
        let involution = self.involution.as_ref().and_then(|p| {
            let image = LabelSet::from_labels(del.iter().map(|v| p[v as usize]));
            (image == del).then(|| p.clone())
        });
        Graph { n: self.n, adj, involution }
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: LabelSet) -> bool {
        set.iter().all(|v| self.adj[v as usize].is_disjoint(set))
    }

    /// The independence complex: simplices are the independent vertex sets.
    /// Includes the empty simplex.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let mut simplices: Vec<Simplex> = Vec::new();
        let mut stack: Vec<(u32, Vec<u32>, LabelSet)> = vec![(1, Vec::new(), LabelSet::EMPTY)];
        while let Some((start, cur, used_nbrs)) = stack.pop() {
            if !cur.is_empty() {
                simplices.push(cur.clone());
            }
            for v in start..=self.n {
                if !used_nbrs.contains(v) {
                    let mut next = cur.clone();
                    next.push(v);
                    stack.push((v + 1, next, used_nbrs.union(self.adj[v as usize])));
                }
            }
        }
        SimplicialComplex::from_simplices(simplices, true)
    }

    /// Number of proper colorings with colors `{1, …, colors}`, by direct
    /// enumeration.
    pub fn count_proper_colorings(&self, colors: u32) -> u64 {
        fn rec(g: &Graph, v: u32, colors: u32, assigned: &mut [u32]) -> u64 {
            if v > g.n {
                return 1;
            }
            let mut total = 0;
            for c in 1..=colors {
                let ok = g.adj[v as usize].iter().all(|w| assigned[w as usize] != c);
                if ok {
                    assigned[v as usize] = c;
                    total += rec(g, v + 1, colors, assigned);
                    assigned[v as usize] = 0;
                }
            }
            total
        }
        let mut assigned = vec![0u32; self.n as usize + 1];
        rec(self, 1, colors, &mut assigned)
    }

    /// Serialize to the line format `vertices: 1..m` followed by one `u v`
    /// line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: 1..{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph text".into()))?;
        let n: u32 = header
            .trim()
            .strip_prefix("vertices: 1..")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let mut g = Graph::empty(n);
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = (it.next(), it.next());
            match (u.and_then(|s| s.parse().ok()), v.and_then(|s| s.parse().ok())) {
                (Some(u), Some(v)) if it.next().is_none() => {
                    if u == v || u < 1 || v < 1 || u > n || v > n {
                        return Err(Error::Parse(format!("bad edge line {line:?}")));
                    }
                    g.add_edge(u, v);
                }
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            }
        }
        Ok(g)
    }
}
