//! Ground sets and point sets.
//!
//! A ground set is a fixed finite set `{0, …, n−1}` with `n ≤ 64`; subsets
//! are stored as `u64` bitmasks, so all set algebra is branch-free word
//! arithmetic. Every higher-level object (topology, set family, filtration)
//! carries its ground set and operations refuse to mix grounds.

use std::fmt;

use crate::error::{Error, Result};

/// The finite ground set `{0, …, n−1}`, `n ≤ 64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: u8,
}

impl GroundSet {
    pub const MAX_POINTS: usize = 64;

    pub fn new(n: usize) -> Result<Self> {
        if n > Self::MAX_POINTS {
            return Err(Error::GroundTooLarge(n));
        }
        Ok(GroundSet { n: n as u8 })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Bitmask of the whole ground set.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn points(&self) -> impl Iterator<Item = usize> {
        0..self.n as usize
    }

    /// Number of subsets, saturating at `usize::MAX` for large grounds.
    pub fn subset_count(&self) -> usize {
        1usize.checked_shl(self.n as u32).unwrap_or(usize::MAX)
    }
}

/// A subset of a ground set, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    ground: GroundSet,
    bits: u64,
}

impl PointSet {
    pub fn empty(ground: GroundSet) -> Self {
        PointSet { ground, bits: 0 }
    }

    pub fn full(ground: GroundSet) -> Self {
        PointSet {
            ground,
            bits: ground.full_mask(),
        }
    }

    pub fn from_bits(ground: GroundSet, bits: u64) -> Result<Self> {
        if bits & !ground.full_mask() != 0 {
            return Err(Error::SetOutOfRange { n: ground.n() });
        }
        Ok(PointSet { ground, bits })
    }

    pub fn from_points(ground: GroundSet, points: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in points {
            if p >= ground.n() {
                return Err(Error::PointOutOfRange {
                    point: p,
                    n: ground.n(),
                });
            }
            bits |= 1u64 << p;
        }
        Ok(PointSet { ground, bits })
    }

    pub fn singleton(ground: GroundSet, point: usize) -> Result<Self> {
        Self::from_points(ground, &[point])
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.ground.n() && self.bits >> point & 1 == 1
    }

    /// Panics if `other` lives on a different ground set.
    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.ground, other.ground, "ground mismatch");
        PointSet {
            ground: self.ground,
            bits: self.bits | other.bits,
        }
    }

    /// Panics if `other` lives on a different ground set.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ground, other.ground, "ground mismatch");
        PointSet {
            ground: self.ground,
            bits: self.bits & other.bits,
        }
    }

    /// Set difference `self ∖ other`. Panics on ground mismatch.
    pub fn difference(&self, other: &Self) -> Self {
        assert_eq!(self.ground, other.ground, "ground mismatch");
        PointSet {
            ground: self.ground,
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> Self {
        PointSet {
            ground: self.ground,
            bits: self.ground.full_mask() & !self.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bits & !other.bits == 0
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        self.ground
            .points()
            .filter(move |&p| self.bits >> p & 1 == 1)
    }

    /// Points of the set in increasing order.
    pub fn to_indices(&self) -> Vec<usize> {
        self.points().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet{{",)?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_bounds() {
        assert!(GroundSet::new(0).is_ok());
        assert!(GroundSet::new(64).is_ok());
        assert_eq!(GroundSet::new(65), Err(Error::GroundTooLarge(65)));
        assert_eq!(GroundSet::new(64).unwrap().full_mask(), !0u64);
        assert_eq!(GroundSet::new(3).unwrap().full_mask(), 0b111);
        assert_eq!(GroundSet::new(0).unwrap().full_mask(), 0);
    }

    #[test]
    fn set_construction_and_algebra() {
        let g = GroundSet::new(4).unwrap();
        let a = PointSet::from_points(g, &[0, 2]).unwrap();
        let b = PointSet::from_points(g, &[1, 2]).unwrap();
        assert_eq!(a.union(&b).to_indices(), vec![0, 1, 2]);
        assert_eq!(a.intersect(&b).to_indices(), vec![2]);
        assert_eq!(a.difference(&b).to_indices(), vec![0]);
        assert_eq!(a.complement().to_indices(), vec![1, 3]);
        assert!(a.intersect(&b).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert_eq!(
            PointSet::from_points(g, &[4]),
            Err(Error::PointOutOfRange { point: 4, n: 4 })
        );
        assert_eq!(
            PointSet::from_bits(g, 0b10000),
            Err(Error::SetOutOfRange { n: 4 })
        );
    }

    #[test]
    fn display_lists_points() {
        let g = GroundSet::new(3).unwrap();
        let a = PointSet::from_points(g, &[0, 2]).unwrap();
        assert_eq!(a.to_string(), "{0, 2}");
        assert_eq!(PointSet::empty(g).to_string(), "{}");
    }
}
