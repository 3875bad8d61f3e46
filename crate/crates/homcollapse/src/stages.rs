//! Matchings induced by monotone poset maps, and the staged collapse of the
//! chain complex of K onto the chain complex of the diagonal S.
//!
//! The engine behind stages 2 and 3 is a classical construction: a map
//! h : P → P that is order-preserving and uniformly inflationary (h(x) ≥ x)
//! or deflationary (h(x) ≤ x) induces an acyclic matching on the order
//! complex of P whose critical cells are exactly the chains inside the fixed
//! set of h. Stage 1 does not come from a single monotone map; its rule is
//! bespoke and pairs away every chain that meets K ∖ K₁.
//!
//! All three stages act on chains labelled by ids into one fixed copy of K,
//! so the intermediate complexes nest literally and residues can be compared
//! by equality rather than up to isomorphism:
//!
//! * stage 1 : ΔK  ↘ ΔK₁, K₁ = {A ∩ C ≠ ∅};
//! * stage 2 : ΔK₁ ↘ ΔK₂ via the deflationary (A, B; C, D) ↦ (A∩C, B; A∩C, D);
//! * stage 3 : ΔK₂ ↘ ΔS  via the inflationary (A, B; A, D) ↦ (A, B∪D; A, B∪D).

use std::collections::HashMap;

use crate::complex::{Simplex, SimplicialComplex};
use crate::mkls::{ArrayCell, ArrayPoset, Family};
use crate::morse::{Collapse, Matching};
use crate::poset::Poset;
use crate::{Error, Result};

/// Which way a monotone map moves elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Inflationary,
    Deflationary,
}

/// Matching on `cx` induced by the monotone map `h` on the ambient poset.
///
/// `cx` must be a subcomplex of the order complex of `p` whose vertices are
/// element ids; any set of chains closed under subchains qualifies. The map
/// is checked on the vertex set of `cx`: it must be order-preserving, stay
/// inside the vertex set, and be uniformly inflationary or deflationary.
/// Iterating h must stabilize, which monotonicity already guarantees here.
///
/// The critical cells are the chains contained in the fixed set of h. Every
/// other chain is paired by locating the extreme unfixed element x_k (the
/// largest for inflationary maps, the smallest for deflationary ones) and
/// toggling the stabilized image h*(x_k) next to it: insert it when absent,
/// delete the neighbor when it is already there.
pub fn monotone_map_matching(
    p: &Poset,
    cx: &SimplicialComplex,
    h: impl Fn(u32) -> u32,
) -> Result<Matching> {
    let verts = cx.vertices();
    let inside: HashMap<u32, u32> = verts.iter().map(|&v| (v, h(v))).collect();
    for (&v, &hv) in &inside {
        if hv as usize >= p.len() {
            return Err(Error::NotMonotone(format!("h({v}) = {hv} is outside the poset")));
        }
        if !inside.contains_key(&hv) {
            return Err(Error::NotMonotone(format!(
                "h({v}) = {hv} leaves the vertex set of the complex"
            )));
        }
    }
    for &u in &verts {
        for &v in &verts {
            if p.less(u as usize, v as usize)
                && !p.leq(inside[&u] as usize, inside[&v] as usize)
            {
                return Err(Error::NotMonotone(format!(
                    "h is not order-preserving at {u} < {v}"
                )));
            }
        }
    }
    let up = verts.iter().all(|&v| p.leq(v as usize, inside[&v] as usize));
    let down = verts.iter().all(|&v| p.leq(inside[&v] as usize, v as usize));
    let dir = match (up, down) {
        (true, _) => Direction::Inflationary,
        (_, true) => Direction::Deflationary,
        _ => {
            return Err(Error::NotMonotone(
                "h moves some elements up and others down".into(),
            ))
        }
    };
    // Stabilize pointwise. The orbit of v is a strictly monotone sequence
    // until it hits a fixed point, so this terminates.
    let mut stable: HashMap<u32, u32> = HashMap::new();
    for &v in &verts {
        let mut x = v;
        while inside[&x] != x {
            x = inside[&x];
        }
        stable.insert(v, x);
    }
    let fixed = |v: u32| inside[&v] == v;
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    for chain in cx.iter() {
        if let Some(partner) = toggle_partner(chain, dir, &fixed, &stable) {
            if partner.len() > chain.len() {
                pairs.push((chain.clone(), partner));
            }
        }
    }
    Matching::from_pairs(pairs)
}

/// Partner of a chain under the toggle rule, or `None` for critical chains.
fn toggle_partner(
    chain: &[u32],
    dir: Direction,
    fixed: &impl Fn(u32) -> bool,
    stable: &HashMap<u32, u32>,
) -> Option<Simplex> {
    let k = match dir {
        Direction::Inflationary => chain.iter().rposition(|&v| !fixed(v))?,
        Direction::Deflationary => chain.iter().position(|&v| !fixed(v))?,
    };
    let y = stable[&chain[k]];
    let mut out = chain.to_vec();
    match dir {
        Direction::Inflationary => {
            if k + 1 < out.len() && out[k + 1] == y {
                out.remove(k + 1);
            } else {
                out.insert(k + 1, y);
            }
        }
        Direction::Deflationary => {
            if k > 0 && out[k - 1] == y {
                out.remove(k - 1);
            } else {
                out.insert(k, y);
            }
        }
    }
    Some(out)
}

/// Stage 2 map on K: intersect the left column into both rows.
pub fn intersect_map(cell: ArrayCell) -> ArrayCell {
    let ac = cell.a.intersection(cell.c);
    ArrayCell::new(ac, cell.b, ac, cell.d)
}

/// Stage 3 map on K₂: spread the union of the right column over both rows.
pub fn union_map(cell: ArrayCell) -> ArrayCell {
    let bd = cell.b.union(cell.d);
    ArrayCell::new(cell.a, bd, cell.c, bd)
}

/// The stage 1 matching on the order complex of K.
///
/// A chain φ₀ < … < φ_m is critical iff every cell has A ∩ C ≠ ∅, so the
/// critical chains are exactly ΔK₁. Otherwise let k be the last index with
/// A_k ∩ C_k = ∅ and compare the (B, D) parts at k and m.
///
/// When they agree, pick E = complement of B_k ∪ D_k and let ψ_E adjoin E to
/// both rows; the partner toggles ψ_E(φ_j) next to φ_j at the largest index
/// j where ψ_E moves φ_j. When they differ at some first index l > k, the
/// partner toggles the mixed cell (A_l, B_{l−1}; C_l, D_{l−1}) between
/// φ_{l−1} and φ_l. Both rules are involutive and pair a chain with a facet
/// or cofacet, and the matching is acyclic and commutes with the row swap.
pub fn stage1_matching(kp: &ArrayPoset, cx: &SimplicialComplex) -> Result<Matching> {
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    for chain in cx.iter() {
        if let Some(partner) = stage1_partner(kp, chain) {
            if partner.len() > chain.len() {
                pairs.push((chain.clone(), partner));
            }
        }
    }
    Matching::from_pairs(pairs)
}

/// Partner of one chain under the stage 1 rule, or `None` when critical.
fn stage1_partner(kp: &ArrayPoset, chain: &[u32]) -> Option<Simplex> {
    let cells: Vec<ArrayCell> = chain.iter().map(|&v| kp.cells[v as usize]).collect();
    let k = cells.iter().rposition(|c| c.a.is_disjoint(c.c))?;
    let last = cells[cells.len() - 1];
    let mut out = chain.to_vec();
    if (last.b, last.d) == (cells[k].b, cells[k].d) {
        let e = cells[k].b.union(cells[k].d).complement(kp.n);
        let psi = |c: ArrayCell| ArrayCell::new(c.a.union(e), c.b, c.c.union(e), c.d);
        let j = cells
            .iter()
            .rposition(|&c| psi(c) != c)
            .expect("the cell at index k is moved by psi");
        let y = kp.index_of(psi(cells[j])).expect("psi stays inside K") as u32;
        if j + 1 < out.len() && out[j + 1] == y {
            out.remove(j + 1);
        } else {
            out.insert(j + 1, y);
        }
    } else {
        let l = (k + 1..cells.len())
            .find(|&i| (cells[i].b, cells[i].d) != (cells[k].b, cells[k].d))
            .expect("the last cell differs");
        let mixed = ArrayCell::new(cells[l].a, cells[l - 1].b, cells[l].c, cells[l - 1].d);
        let y = kp.index_of(mixed).expect("the mixed cell stays inside K") as u32;
        if out[l - 1] == y {
            out.remove(l - 1);
        } else {
            out.insert(l, y);
        }
    }
    Some(out)
}

/// One executed stage: its matching, collapse, and residue comparison.
pub struct Stage {
    pub name: &'static str,
    pub pairs: usize,
    pub steps: usize,
    pub equivariant: bool,
    pub residue_matches: bool,
}

/// Outcome of the full three-stage collapse ΔK ↘ ΔK₁ ↘ ΔK₂ ↘ ΔS.
pub struct StageOutcome {
    pub n: u32,
    /// Nonempty chain counts of ΔK, ΔK₁, ΔK₂, ΔS.
    pub chain_counts: [usize; 4],
    pub stages: Vec<Stage>,
    /// The final residue equals the relabelled order complex of the
    /// diagonal built independently from scratch.
    pub final_matches_diagonal: bool,
    pub failures: Vec<String>,
}

impl StageOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run all three stages and verify every residue along the way.
pub fn three_stage_collapse(n: u32, max_cells: u64, max_chains: u64) -> Result<StageOutcome> {
    let kp = ArrayPoset::build(n, Family::K, max_cells)?;
    let dk = kp.poset.order_complex(max_chains)?;
    let swap: HashMap<u32, u32> =
        kp.involution().iter().enumerate().map(|(i, &j)| (i as u32, j as u32)).collect();
    let in_k1 = |v: u32| {
        let c = kp.cells[v as usize];
        !c.a.is_disjoint(c.c)
    };
    let in_k2 = |v: u32| {
        let c = kp.cells[v as usize];
        c.a == c.c
    };
    let in_s = |v: u32| kp.cells[v as usize].is_diagonal();
    let dk1 = dk.vertex_induced(in_k1);
    let dk2 = dk.vertex_induced(in_k2);
    let ds = dk.vertex_induced(in_s);

    let mut failures = Vec::new();
    let mut stages = Vec::new();
    let mut run = |name: &'static str,
                   cx: &SimplicialComplex,
                   matching: Matching,
                   expected: &SimplicialComplex,
                   failures: &mut Vec<String>|
     -> Result<Collapse> {
        let collapse = matching.collapse_sequence(cx)?;
        let residue_matches = collapse.residue == *expected;
        if !residue_matches {
            failures.push(format!(
                "{name}: residue has {} cells, expected {}",
                collapse.residue.simplex_count(),
                expected.simplex_count()
            ));
        }
        let equivariant = matching.is_equivariant(&swap);
        if !equivariant {
            failures.push(format!("{name}: matching does not commute with the row swap"));
        }
        stages.push(Stage {
            name,
            pairs: matching.len(),
            steps: collapse.steps.len(),
            equivariant,
            residue_matches,
        });
        Ok(collapse)
    };

    let m1 = stage1_matching(&kp, &dk)?;
    run("stage 1", &dk, m1, &dk1, &mut failures)?;

    let h1 = |v: u32| {
        kp.index_of(intersect_map(kp.cells[v as usize])).expect("image lies in K") as u32
    };
    let m2 = monotone_map_matching(&kp.poset, &dk1, h1)?;
    run("stage 2", &dk1, m2, &dk2, &mut failures)?;

    let h2 = |v: u32| {
        kp.index_of(union_map(kp.cells[v as usize])).expect("image lies in K") as u32
    };
    let m3 = monotone_map_matching(&kp.poset, &dk2, h2)?;
    let last = run("stage 3", &dk2, m3, &ds, &mut failures)?;

    // Cross-check the end of the line against a diagonal complex built
    // independently, relabelled into K ids.
    let sp = ArrayPoset::build(n, Family::S, max_cells)?;
    let into_k: HashMap<u32, u32> = sp
        .cells
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            (i as u32, kp.index_of(c).expect("the diagonal embeds in K") as u32)
        })
        .collect();
    let ds_fresh = sp.poset.order_complex(max_chains)?.relabel(&into_k);
    let final_matches_diagonal = last.residue == ds_fresh;
    if !final_matches_diagonal {
        failures.push("final residue differs from the independently built diagonal".into());
    }

    Ok(StageOutcome {
        n,
        chain_counts: [
            dk.simplex_count(),
            dk1.simplex_count(),
            dk2.simplex_count(),
            ds.simplex_count(),
        ],
        stages,
        final_matches_diagonal,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn chain_poset(len: usize) -> Poset {
        Poset::from_less(len, |x, y| x < y)
    }

    #[test]
    fn inflationary_map_on_a_chain() {
        let p = chain_poset(3);
        let cx = p.order_complex(100).unwrap();
        let h = |v: u32| if v == 0 { 1 } else { v };
        let m = monotone_map_matching(&p, &cx, h).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.pairs().contains(&(vec![0], vec![0, 1])));
        assert!(m.pairs().contains(&(vec![0, 2], vec![0, 1, 2])));
        let (crit, empty_crit) = m.critical_cells(&cx);
        assert!(empty_crit);
        assert_eq!(crit, vec![vec![1], vec![2], vec![1, 2]]);
        assert!(m.find_cycle(&cx).unwrap().is_none());
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.residue, cx.vertex_induced(|v| v != 0));
    }

    #[test]
    fn deflationary_map_on_a_chain() {
        let p = chain_poset(3);
        let cx = p.order_complex(100).unwrap();
        let h = |v: u32| if v == 2 { 1 } else { v };
        let m = monotone_map_matching(&p, &cx, h).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.pairs().contains(&(vec![2], vec![1, 2])));
        assert!(m.pairs().contains(&(vec![0, 2], vec![0, 1, 2])));
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.residue, cx.vertex_induced(|v| v != 2));
    }

    #[test]
    fn mixed_directions_are_rejected() {
        let p = chain_poset(4);
        let cx = p.order_complex(100).unwrap();
        let h = |v: u32| match v {
            0 => 1,
            3 => 2,
            v => v,
        };
        match monotone_map_matching(&p, &cx, h) {
            Err(Error::NotMonotone(_)) => {}
            other => panic!("expected NotMonotone, got {other:?}"),
        }
    }

    #[test]
    fn map_must_preserve_order() {
        // On the wedge 0 < 2 > 1, sending the minimum 0 to the top is a
        // legitimate inflationary map even though 0 and 1 are incomparable.
        let p = Poset::from_less(3, |x, y| x < 2 && y == 2);
        let cx = p.order_complex(100).unwrap();
        let h = |v: u32| if v == 0 { 2 } else { v };
        let m = monotone_map_matching(&p, &cx, h).unwrap();
        assert_eq!(m.pairs(), &[(vec![0], vec![0, 2])]);
        // On the vee 1 > 0 < 2, sending 0 to 1 looks inflationary but breaks
        // order preservation along 0 < 2, because 1 and 2 are incomparable.
        let q = Poset::from_less(3, |x, y| x == 0 && y > 0);
        let cq = q.order_complex(100).unwrap();
        let g = |v: u32| if v == 0 { 1 } else { v };
        match monotone_map_matching(&q, &cq, g) {
            Err(Error::NotMonotone(_)) => {}
            other => panic!("expected NotMonotone, got {other:?}"),
        }
    }

    #[test]
    fn stabilization_chases_orbits_to_the_fixed_set() {
        let p = chain_poset(4);
        let cx = p.order_complex(100).unwrap();
        let h = |v: u32| if v < 3 { v + 1 } else { v };
        let m = monotone_map_matching(&p, &cx, h).unwrap();
        let (crit, empty_crit) = m.critical_cells(&cx);
        assert!(empty_crit);
        assert_eq!(crit, vec![vec![3]]);
        let collapse = m.collapse_sequence(&cx).unwrap();
        assert_eq!(collapse.residue.f_vector(), vec![1]);
    }

    #[test]
    fn three_stages_at_three_colors() {
        let out = three_stage_collapse(3, 1 << 20, 1 << 20).unwrap();
        assert!(out.passed(), "failures: {:?}", out.failures);
        assert_eq!(out.chain_counts, [624, 336, 108, 24]);
        assert_eq!(out.stages.len(), 3);
        assert_eq!(out.stages[0].pairs, 144);
        assert_eq!(out.stages[1].pairs, 114);
        assert_eq!(out.stages[2].pairs, 42);
        for s in &out.stages {
            assert!(s.equivariant);
            assert!(s.residue_matches);
            assert_eq!(s.steps, s.pairs);
        }
        assert!(out.final_matches_diagonal);
    }

    #[test]
    fn stage_one_matching_is_acyclic_and_equivariant() {
        let kp = ArrayPoset::build(3, Family::K, 1 << 20).unwrap();
        let dk = kp.poset.order_complex(1 << 20).unwrap();
        let m = stage1_matching(&kp, &dk).unwrap();
        m.validate(&dk).unwrap();
        assert!(m.find_cycle(&dk).unwrap().is_none());
        let swap: HashMap<u32, u32> =
            kp.involution().iter().enumerate().map(|(i, &j)| (i as u32, j as u32)).collect();
        assert!(m.is_equivariant(&swap));
    }
}
