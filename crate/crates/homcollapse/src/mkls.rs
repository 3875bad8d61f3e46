//! The nested array posets M ⊇ K ⊇ L and the diagonal S.
//!
//! A cell is an array (A, B; C, D) of nonempty color sets. Membership:
//!
//! * M: A ∩ B = ∅ and C ∩ D = ∅;
//! * K: additionally B ∪ D ≠ [n];
//! * L: additionally A ∩ C = ∅;
//! * S: the diagonal A = C, B = D (automatically in K).
//!
//! All four are closed under the involution (A, B; C, D) ↦ (C, D; A, B),
//! whose fixed cells are exactly S. Cells are ordered componentwise by
//! inclusion and stored in canonical order (total size ascending, then the
//! four sets lexicographically), a linear extension.

use crate::poset::Poset;
use crate::set::LabelSet;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ArrayCell {
    pub a: LabelSet,
    pub b: LabelSet,
    pub c: LabelSet,
    pub d: LabelSet,
}

impl ArrayCell {
    pub fn new(a: LabelSet, b: LabelSet, c: LabelSet, d: LabelSet) -> ArrayCell {
        ArrayCell { a, b, c, d }
    }

    /// Total size Σ|X|; the cell's dimension is this minus 4.
    pub fn total(self) -> u32 {
        self.a.len() + self.b.len() + self.c.len() + self.d.len()
    }

    pub fn dim(self) -> u32 {
        self.total() - 4
    }

    /// Componentwise inclusion.
    pub fn leq(self, other: ArrayCell) -> bool {
        self.a.is_subset(other.a)
            && self.b.is_subset(other.b)
            && self.c.is_subset(other.c)
            && self.d.is_subset(other.d)
    }

    /// The involution swapping the two rows.
    pub fn swap(self) -> ArrayCell {
        ArrayCell { a: self.c, b: self.d, c: self.a, d: self.b }
    }

    pub fn is_diagonal(self) -> bool {
        self.a == self.c && self.b == self.d
    }

    pub fn key(self) -> (u32, LabelSet, LabelSet, LabelSet, LabelSet) {
        (self.total(), self.a, self.b, self.c, self.d)
    }

    pub fn to_line(self) -> String {
        format!(
            "{}|{}|{}|{}",
            self.a.to_digits(),
            self.b.to_digits(),
            self.c.to_digits(),
            self.d.to_digits()
        )
    }
}

/// Which member of the family to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    M,
    K,
    L,
    S,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::M => 'm',
            Family::K => 'k',
            Family::L => 'l',
            Family::S => 's',
        }
    }
}

/// One of the array posets, with its cells in canonical order.
pub struct ArrayPoset {
    pub n: u32,
    pub cells: Vec<ArrayCell>,
    pub poset: Poset,
}

impl ArrayPoset {
    pub fn build(n: u32, family: Family, max_cells: u64) -> Result<ArrayPoset> {
        if n == 0 || n > crate::set::MAX_LABEL {
            return Err(Error::InvalidParameter(format!("palette size {n} out of range")));
        }
        let full = LabelSet::full(n);
        let mut cells: Vec<ArrayCell> = Vec::new();
        for a in LabelSet::nonempty_subsets(n) {
            for b in nonempty_subsets_of(a.complement(n)) {
                match family {
                    Family::S => {
                        push_cell(&mut cells, ArrayCell::new(a, b, a, b), max_cells)?;
                    }
                    Family::M | Family::K => {
                        for c in LabelSet::nonempty_subsets(n) {
                            for d in nonempty_subsets_of(c.complement(n)) {
                                if family == Family::K && b.union(d) == full {
                                    continue;
                                }
                                push_cell(&mut cells, ArrayCell::new(a, b, c, d), max_cells)?;
                            }
                        }
                    }
                    Family::L => {
                        for c in nonempty_subsets_of(a.complement(n)) {
                            for d in nonempty_subsets_of(c.complement(n)) {
                                if b.union(d) == full {
                                    continue;
                                }
                                push_cell(&mut cells, ArrayCell::new(a, b, c, d), max_cells)?;
                            }
                        }
                    }
                }
            }
        }
        cells.sort_unstable_by_key(|c| c.key());
        let poset = Poset::from_less(cells.len(), |x, y| {
            cells[x] != cells[y] && cells[x].leq(cells[y])
        });
        Ok(ArrayPoset { n, cells, poset })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn index_of(&self, cell: ArrayCell) -> Option<usize> {
        self.cells.binary_search_by_key(&cell.key(), |c| c.key()).ok()
    }

    /// The row-swap involution as a permutation of cell ids.
    pub fn involution(&self) -> Vec<usize> {
        self.cells
            .iter()
            .map(|c| self.index_of(c.swap()).expect("family is closed under the swap"))
            .collect()
    }

    /// Ids of cells fixed by the swap (the diagonal).
    pub fn fixed_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.cells[i].is_diagonal()).collect()
    }

    /// Induced subposet on the cells satisfying `pred`, preserving order.
    pub fn filter(&self, pred: impl Fn(ArrayCell) -> bool) -> ArrayPoset {
        let cells: Vec<ArrayCell> = self.cells.iter().copied().filter(|&c| pred(c)).collect();
        let poset = Poset::from_less(cells.len(), |x, y| {
            cells[x] != cells[y] && cells[x].leq(cells[y])
        });
        ArrayPoset { n: self.n, cells, poset }
    }

    /// Ids of maximal cells.
    pub fn maximal_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.poset.upper_ids(i).is_empty()).collect()
    }

    pub fn dump_lines(&self) -> Vec<String> {
        self.cells.iter().map(|c| c.to_line()).collect()
    }
}

fn push_cell(cells: &mut Vec<ArrayCell>, cell: ArrayCell, max_cells: u64) -> Result<()> {
    if cells.len() as u64 >= max_cells {
        return Err(Error::CapExceeded("cells", cells.len() as u64 + 1, max_cells));
    }
    cells.push(cell);
    Ok(())
}

fn nonempty_subsets_of(mask: LabelSet) -> impl Iterator<Item = LabelSet> {
    mask.subsets().filter(|s| !s.is_empty())
}

/// All four posets for one palette size.
pub struct MklsFamily {
    pub m: ArrayPoset,
    pub k: ArrayPoset,
    pub l: ArrayPoset,
    pub s: ArrayPoset,
}

pub fn build_mkls(n: u32, max_cells: u64) -> Result<MklsFamily> {
    Ok(MklsFamily {
        m: ArrayPoset::build(n, Family::M, max_cells)?,
        k: ArrayPoset::build(n, Family::K, max_cells)?,
        l: ArrayPoset::build(n, Family::L, max_cells)?,
        s: ArrayPoset::build(n, Family::S, max_cells)?,
    })
}
