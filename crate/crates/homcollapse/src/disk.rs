//! The collapsible complexes F(k, l) and their canonical perfect matchings.
//!
//! F(k, l) lives inside the join of k squares (each a join of two vertex
//! pairs, a ±1 "a" copy and a ±1 "b" copy) and l plain ±1 vertex pairs. A
//! simplex belongs to F when at least one coordinate carries no −1 vertex;
//! a coordinate the simplex does not touch at all counts. These complexes
//! appear as upper links in the big collapse and are collapsible: pairing
//! every simplex across its first minus-free coordinate's distinguished +1
//! vertex matches everything, the empty simplex included, leaving a single
//! vertex after the collapse.
//!
//! Vertex ids: square i ∈ 0..k uses 4i (a+), 4i+1 (a−), 4i+2 (b+),
//! 4i+3 (b−); pair j ∈ 0..l uses 4k+2j (+) and 4k+2j+1 (−).

use crate::complex::{Simplex, SimplicialComplex};
use crate::morse::Matching;

pub fn a_plus(i: u32) -> u32 {
    4 * i
}
pub fn a_minus(i: u32) -> u32 {
    4 * i + 1
}
pub fn b_plus(i: u32) -> u32 {
    4 * i + 2
}
pub fn b_minus(i: u32) -> u32 {
    4 * i + 3
}
pub fn s_plus(k: u32, j: u32) -> u32 {
    4 * k + 2 * j
}
pub fn s_minus(k: u32, j: u32) -> u32 {
    4 * k + 2 * j + 1
}

/// Build F(k, l). F(0, 0) is the void complex.
pub fn build_f(k: u32, l: u32) -> SimplicialComplex {
    if k == 0 && l == 0 {
        return SimplicialComplex::void();
    }
    let mut sims: Vec<Simplex> = Vec::new();
    let mut cur: Simplex = Vec::new();
    enumerate(k, l, 0, false, &mut cur, &mut sims);
    SimplicialComplex::from_simplices(sims, true)
}

/// Walk coordinates in order, tracking whether some earlier coordinate is
/// already minus-free.
fn enumerate(k: u32, l: u32, coord: u32, open: bool, cur: &mut Simplex, out: &mut Vec<Simplex>) {
    if coord == k + l {
        if open {
            out.push(cur.clone());
        }
        return;
    }
    if coord < k {
        // Choices per copy: absent, plus, or minus.
        for a in 0..3u32 {
            for b in 0..3u32 {
                let minus = a == 2 || b == 2;
                let before = cur.len();
                match a {
                    1 => cur.push(a_plus(coord)),
                    2 => cur.push(a_minus(coord)),
                    _ => {}
                }
                match b {
                    1 => cur.push(b_plus(coord)),
                    2 => cur.push(b_minus(coord)),
                    _ => {}
                }
                enumerate(k, l, coord + 1, open || !minus, cur, out);
                cur.truncate(before);
            }
        }
    } else {
        let j = coord - k;
        for c in 0..3u32 {
            let minus = c == 2;
            let before = cur.len();
            match c {
                1 => cur.push(s_plus(k, j)),
                2 => cur.push(s_minus(k, j)),
                _ => {}
            }
            enumerate(k, l, coord + 1, open || !minus, cur, out);
            cur.truncate(before);
        }
    }
}

/// First coordinate of a simplex carrying no −1 vertex, or None when every
/// coordinate has one (such simplices are exactly the ones outside F).
pub fn first_open_coordinate(s: &[u32], k: u32, l: u32) -> Option<u32> {
    for i in 0..k {
        if !s.contains(&a_minus(i)) && !s.contains(&b_minus(i)) {
            return Some(i);
        }
    }
    for j in 0..l {
        if !s.contains(&s_minus(k, j)) {
            return Some(k + j);
        }
    }
    None
}

/// The distinguished +1 vertex of a coordinate: the a-copy for squares.
pub fn distinguished_plus(coord: u32, k: u32) -> u32 {
    if coord < k {
        a_plus(coord)
    } else {
        s_plus(k, coord - k)
    }
}

/// Partner of a simplex under the pairing rule: toggle the distinguished +1
/// of the first minus-free coordinate. Total on the augmented complex, and
/// an involution, because adding or removing a +1 never changes which
/// coordinate is the first without a minus.
pub fn toggle_f(s: &[u32], k: u32, l: u32) -> Simplex {
    let coord = first_open_coordinate(s, k, l).expect("simplices of F have an open coordinate");
    let t = distinguished_plus(coord, k);
    let mut out = s.to_vec();
    match out.binary_search(&t) {
        Ok(i) => {
            out.remove(i);
        }
        Err(i) => out.insert(i, t),
    }
    out
}

/// The canonical perfect matching on F(k, l): every simplex of the
/// augmented complex is paired with its toggle.
pub fn matching_f(f: &SimplicialComplex, k: u32, l: u32) -> Matching {
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    let mut consider = |s: &Simplex| {
        let hi = toggle_f(s, k, l);
        if hi.len() > s.len() {
            pairs.push((s.clone(), hi));
        }
    };
    if f.includes_empty() {
        consider(&vec![]);
    }
    for s in f.iter() {
        consider(s);
    }
    Matching::from_pairs(pairs).expect("toggle pairs are facet pairs")
}

/// Predicted shape of a vertex link in F(k, l): a join of `spheres` copies
/// of S⁰ with F(k, l) for the recorded parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct JoinShape {
    pub spheres: u32,
    pub k: u32,
    pub l: u32,
}

impl JoinShape {
    pub fn build(self) -> SimplicialComplex {
        let mut cx = build_f(self.k, self.l);
        for _ in 0..self.spheres {
            let s0 = SimplicialComplex::two_points(0, 1);
            (cx, _) = s0.join(&cx);
        }
        cx
    }
}

/// What the link of each vertex of F(k, l) must look like:
///
/// * a+ or b+ of a square: the square degenerates to its other copy, one
///   more plain pair: F(k−1, l+1);
/// * a− or b−: the coordinate is permanently closed, its other copy joins
///   freely: S⁰ ∗ F(k−1, l);
/// * + of a plain pair: the coordinate stays open forever, every other
///   coordinate is unrestricted: the full join of 2k+l−1 vertex pairs;
/// * − of a plain pair: the coordinate is closed and gone: F(k, l−1).
pub fn link_prediction(v: u32, k: u32, l: u32) -> JoinShape {
    if v < 4 * k {
        match v % 4 {
            0 | 2 => JoinShape { spheres: 0, k: k - 1, l: l + 1 },
            _ => JoinShape { spheres: 1, k: k - 1, l },
        }
    } else if (v - 4 * k) % 2 == 0 {
        JoinShape { spheres: 2 * k + l - 1, k: 0, l: 0 }
    } else {
        JoinShape { spheres: 0, k, l: l - 1 }
    }
}
