//! Per-cell link structure in the poset K.
//!
//! For a cell φ = (A, B; C, D) both halves of the link are joins with known
//! factors:
//!
//! * below φ, the open interval is anti-isomorphic to the face poset of
//!   ∂Δ_A ∗ ∂Δ_B ∗ ∂Δ_C ∗ ∂Δ_D (delete a nonempty part from each slot);
//! * above φ, when A ∩ C ≠ ∅ the cover condition can never fire and the
//!   interval is the face poset of a join of free vertex pairs, one per
//!   color that can still enter each row;
//! * above φ, when A ∩ C = ∅ each color is inert, a free pair, a tilting
//!   pair (one safe move, one move toward covering), or fully untouched,
//!   and the interval is the face poset of (∗^m S⁰) ∗ F(k, l).
//!
//! `verify_cell_links` checks all of this for one cell with exact poset
//! isomorphism searches; the interval dimensions and the count identity
//! m + 2k + l = 2n − Σ|X| come along for free.

use crate::complex::SimplicialComplex;
use crate::disk::JoinShape;
use crate::mkls::{ArrayCell, ArrayPoset};
use crate::poset::{face_poset, poset_isomorphic, Poset};
use crate::set::LabelSet;
use crate::Result;

/// Role of one color in the upper link of a cell with A ∩ C = ∅.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroundType {
    /// In both rows; nothing can happen.
    Inert,
    /// In one row's second set; the other row accepts it freely.
    FreePair,
    /// In one row's first set; one move is free, the other covers.
    Tilting,
    /// In neither row; a full square of moves.
    Square,
}

/// Counts of the ground types: `free` free pairs, `tilting` tilting pairs,
/// `squares` untouched colors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub free: u32,
    pub tilting: u32,
    pub squares: u32,
}

/// Classify every color for a cell with disjoint first sets. Returns None
/// when A ∩ C ≠ ∅ (the classification only applies on that side).
pub fn classify(cell: ArrayCell, n: u32) -> Option<Classification> {
    if !cell.a.is_disjoint(cell.c) {
        return None;
    }
    let mut out = Classification { free: 0, tilting: 0, squares: 0 };
    for x in LabelSet::full(n).iter() {
        match ground_type(cell, x) {
            GroundType::Inert => {}
            GroundType::FreePair => out.free += 1,
            GroundType::Tilting => out.tilting += 1,
            GroundType::Square => out.squares += 1,
        }
    }
    Some(out)
}

/// Role of a single color; meaningful when A ∩ C = ∅.
pub fn ground_type(cell: ArrayCell, x: u32) -> GroundType {
    let row1 = cell.a.contains(x) || cell.b.contains(x);
    let row2 = cell.c.contains(x) || cell.d.contains(x);
    match (row1, row2) {
        (true, true) => GroundType::Inert,
        (false, false) => GroundType::Square,
        (true, false) => {
            if cell.a.contains(x) {
                GroundType::Tilting
            } else {
                GroundType::FreePair
            }
        }
        (false, true) => {
            if cell.c.contains(x) {
                GroundType::Tilting
            } else {
                GroundType::FreePair
            }
        }
    }
}

/// Predicted upper link shape for any cell of K.
pub fn upper_shape(cell: ArrayCell, n: u32) -> JoinShape {
    match classify(cell, n) {
        Some(c) => JoinShape { spheres: c.free, k: c.squares, l: c.tilting },
        None => {
            let row1 = cell.a.union(cell.b).complement(n).len();
            let row2 = cell.c.union(cell.d).complement(n).len();
            JoinShape { spheres: row1 + row2, k: 0, l: 0 }
        }
    }
}

/// Predicted lower link: the join of the four simplex boundaries, whose
/// face poset is anti-isomorphic to the open interval below the cell.
pub fn lower_shape(cell: ArrayCell) -> SimplicialComplex {
    let mut cx = boundary_of_size(cell.a.len());
    for size in [cell.b.len(), cell.c.len(), cell.d.len()] {
        (cx, _) = cx.join(&boundary_of_size(size));
    }
    cx
}

fn boundary_of_size(size: u32) -> SimplicialComplex {
    let vertices: Vec<u32> = (0..size).collect();
    SimplicialComplex::simplex_boundary(&vertices)
}

/// Longest-chain dimension of an induced subposet's order complex.
fn interval_dim(p: &Poset) -> i64 {
    match p.heights() {
        Ok(h) => h.into_iter().max().map_or(-1, |m| m as i64),
        Err(_) => unreachable!("induced intervals keep ascending ids"),
    }
}

/// Check every structural claim about one cell's link. Returns the list of
/// discrepancies, empty when the cell is clean.
pub fn verify_cell_links(kp: &ArrayPoset, idx: usize, iso_cap: u64) -> Result<Vec<String>> {
    let cell = kp.cells[idx];
    let n = kp.n;
    let total = cell.total() as i64;
    let mut failures: Vec<String> = Vec::new();

    let lower = kp.poset.induced(&kp.poset.lower_ids(idx));
    let upper = kp.poset.induced(&kp.poset.upper_ids(idx));

    if interval_dim(&lower) != total - 5 {
        failures.push(format!(
            "lower interval of {} has chain dimension {}, expected {}",
            cell.to_line(),
            interval_dim(&lower),
            total - 5
        ));
    }
    if interval_dim(&upper) != 2 * n as i64 - total - 1 {
        failures.push(format!(
            "upper interval of {} has chain dimension {}, expected {}",
            cell.to_line(),
            interval_dim(&upper),
            2 * n as i64 - total - 1
        ));
    }
    if let Some(c) = classify(cell, n) {
        if (c.free + 2 * c.squares + c.tilting) as i64 != 2 * n as i64 - total {
            failures.push(format!(
                "classification of {} violates m + 2k + l = 2n − Σ",
                cell.to_line()
            ));
        }
    }

    let (lower_fp, _) = face_poset(&lower_shape(cell));
    if poset_isomorphic(&lower.opposite(), &lower_fp, iso_cap)?.is_none() {
        failures.push(format!(
            "lower interval of {} is not dual to the boundary join",
            cell.to_line()
        ));
    }

    let (upper_fp, _) = face_poset(&upper_shape(cell, n).build());
    if poset_isomorphic(&upper, &upper_fp, iso_cap)?.is_none() {
        failures.push(format!(
            "upper interval of {} does not match its predicted join",
            cell.to_line()
        ));
    }

    Ok(failures)
}
