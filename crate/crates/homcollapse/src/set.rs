//! Small sets of labels (colors or vertices) as 64-bit masks.
//!
//! Labels are the integers `1..=61`; bit `i` of the mask holds label `i`.
//! Everything in the crate that stores a color set or a vertex set goes
//! through this type, so set algebra is branch-free and cells hash cheaply.

use std::fmt;

pub const MAX_LABEL: u32 = 61;

/// The characters used to render labels in dumps: label 1 → '1', …,
/// label 9 → '9', label 10 → 'a', …, label 35 → 'z', label 36 → 'A', ….
const DIGITS: &[u8; 61] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// An immutable set of labels drawn from `1..=61`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    /// The set `{1, …, n}`.
    pub fn full(n: u32) -> LabelSet {
        assert!(n <= MAX_LABEL, "label {n} out of range");
        LabelSet(((1u128 << (n + 1)) - 2) as u64)
    }

    pub fn singleton(label: u32) -> LabelSet {
        assert!((1..=MAX_LABEL).contains(&label), "label {label} out of range");
        LabelSet(1 << label)
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> LabelSet {
        labels.into_iter().fold(LabelSet::EMPTY, |s, l| s.insert(l))
    }

    #[must_use]
    pub fn insert(self, label: u32) -> LabelSet {
        LabelSet(self.0 | LabelSet::singleton(label).0)
    }

    #[must_use]
    pub fn remove(self, label: u32) -> LabelSet {
        LabelSet(self.0 & !LabelSet::singleton(label).0)
    }

    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1 << label) != 0
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    /// Complement inside `{1, …, n}`.
    pub fn complement(self, n: u32) -> LabelSet {
        LabelSet(LabelSet::full(n).0 & !self.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let l = bits.trailing_zeros();
                bits &= bits - 1;
                Some(l)
            }
        })
    }

    /// All nonempty subsets of `{1, …, n}`, ascending as bit patterns.
    pub fn nonempty_subsets(n: u32) -> impl Iterator<Item = LabelSet> {
        let full = LabelSet::full(n).0;
        (1..=full).filter(move |m| m & !full == 0 && m & 1 == 0).map(LabelSet)
    }

    /// All subsets of this set, including the empty one, ascending as bit
    /// patterns.
    pub fn subsets(self) -> impl Iterator<Item = LabelSet> {
        let mask = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = LabelSet(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }

    /// Render as the sorted digit string used in dump files, e.g. `{1,3}`
    /// becomes `13`. The empty set renders as `-`.
    pub fn to_digits(self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        self.iter().map(|l| DIGITS[(l - 1) as usize] as char).collect()
    }

    /// Parse the dump rendering produced by [`LabelSet::to_digits`].
    pub fn from_digits(s: &str) -> Result<LabelSet, String> {
        if s == "-" {
            return Ok(LabelSet::EMPTY);
        }
        let mut set = LabelSet::EMPTY;
        for ch in s.chars() {
            let pos = DIGITS
                .iter()
                .position(|&d| d as char == ch)
                .ok_or_else(|| format!("invalid label character {ch:?}"))?;
            set = set.insert(pos as u32 + 1);
        }
        Ok(set)
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digits())
    }
}
