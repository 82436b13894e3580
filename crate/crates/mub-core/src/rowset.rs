//! Fixed-universe bit sets over row indices.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const BITS: usize = u64::BITS as usize;

/// A set of row indices drawn from `0..universe`, stored as a bit vector.
///
/// The ordering is canonical for vertex numbering: smaller cardinality
/// first, ties broken by the lowest index where the sets differ (the set
/// containing that index sorts first). Containment is therefore always
/// directed from lower to higher rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RowSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl RowSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            blocks: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn from_rows(universe: usize, rows: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for r in rows {
            set.insert(r);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts a row index. Panics if the index is outside the universe.
    pub fn insert(&mut self, row: usize) {
        assert!(
            row < self.universe,
            "row {} out of range for universe {}",
            row,
            self.universe
        );
        self.blocks[row / BITS] |= 1 << (row % BITS);
    }

    pub fn contains(&self, row: usize) -> bool {
        row < self.universe && self.blocks[row / BITS] >> (row % BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Subset-or-equal test; sets must share a universe.
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks.iter().zip(&other.blocks).all(|(&a, &b)| a & b == a)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self.blocks != other.blocks
    }

    pub fn intersects(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks.iter().zip(&other.blocks).any(|(&a, &b)| a & b != 0)
    }

    pub fn union_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    /// Number of rows in `self` missing from `other`.
    pub fn difference_len(&self, other: &Self) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Ascending iterator over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            (0..BITS)
                .filter(move |j| block >> j & 1 == 1)
                .map(move |j| i * BITS + j)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for RowSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        self.len().cmp(&other.len()).then_with(|| {
            for (&a, &b) in self.blocks.iter().zip(&other.blocks) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for RowSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `{r1,r3}` with 1-based row names.
impl fmt::Display for RowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, r) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "r{}", r + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = RowSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        s.insert(69);
        assert_eq!(s.len(), 2);
        assert!(s.contains(0));
        assert!(s.contains(69));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 69]);
    }

    #[test]
    fn subset_relations() {
        let a = RowSet::from_rows(5, [0, 2]);
        let b = RowSet::from_rows(5, [0, 2, 4]);
        let c = RowSet::from_rows(5, [1, 2]);
        assert!(a.is_subset(&b));
        assert!(a.is_proper_subset(&b));
        assert!(!b.is_proper_subset(&a));
        assert!(!a.is_proper_subset(&a.clone()));
        assert!(!a.is_subset(&c));
        assert!(!c.is_subset(&a));
        assert!(a.intersects(&c));
        assert_eq!(b.difference_len(&a), 1);
        assert_eq!(a.difference_len(&b), 0);
    }

    #[test]
    fn union_accumulates() {
        let mut acc = RowSet::empty(4);
        acc.union_assign(&RowSet::from_rows(4, [1]));
        acc.union_assign(&RowSet::from_rows(4, [3]));
        assert_eq!(acc.to_vec(), vec![1, 3]);
    }

    #[test]
    fn canonical_order_by_size_then_lowest_difference() {
        let small = RowSet::from_rows(4, [3]);
        let big = RowSet::from_rows(4, [0, 1]);
        assert!(small < big);
        // Same size: the set holding the lowest differing row sorts first.
        let a = RowSet::from_rows(4, [0, 3]);
        let b = RowSet::from_rows(4, [1, 2]);
        assert!(a < b);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn display_row_names_are_one_based() {
        use alloc::string::ToString;
        let s = RowSet::from_rows(5, [0, 2]);
        assert_eq!(s.to_string(), "{r1,r3}");
        assert_eq!(RowSet::empty(3).to_string(), "{}");
    }
}
