//! Finite topologies and set families.
//!
//! A topology on a ground set is stored as the canonical sorted list of its
//! open sets' bitmasks. On a finite ground set arbitrary unions collapse to
//! finite ones, so the axioms reduce to: contains `∅` and `X`, closed under
//! pairwise union and intersection. Interior and closure are single scans
//! over the open list, and the closure operator is implemented as the
//! complement of the interior of the complement.
//!
//! `SetFamily` is the same canonical representation without any closure
//! axioms; it is the currency for hierarchy levels, bases, and generators.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::space::{GroundSet, PointSet};

/// A finite family of subsets of a common ground set.
///
/// Members are kept sorted by bitmask and deduplicated, so equality of
/// families is structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<u64>,
}

impl SetFamily {
    pub fn empty(ground: GroundSet) -> Self {
        SetFamily {
            ground,
            members: Vec::new(),
        }
    }

    pub fn new(ground: GroundSet, sets: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let mut members = Vec::new();
        for s in sets {
            if s.ground() != ground {
                return Err(Error::GroundMismatch {
                    expected: ground.n(),
                    got: s.ground().n(),
                });
            }
            members.push(s.bits());
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { ground, members })
    }

    pub fn from_masks(ground: GroundSet, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let full = ground.full_mask();
        let mut members = Vec::new();
        for m in masks {
            if m & !full != 0 {
                return Err(Error::SetOutOfRange { n: ground.n() });
            }
            members.push(m);
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { ground, members })
    }

    pub(crate) fn from_sorted_masks_unchecked(ground: GroundSet, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m & !ground.full_mask() == 0));
        SetFamily { ground, members }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member bitmasks in increasing order.
    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.members
            .iter()
            .map(move |&m| PointSet::from_bits(self.ground, m).expect("members are in range"))
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        set.ground() == self.ground && self.contains_mask(set.bits())
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.ground == other.ground && self.members.iter().all(|m| other.contains_mask(*m))
    }

    /// Union of the two families as families (not pointwise).
    pub fn union_family(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.n(),
                got: other.ground.n(),
            });
        }
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily {
            ground: self.ground,
            members,
        })
    }

    /// Members as sorted point-index lists, the JSON interchange form.
    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.members.iter().map(|&m| mask_to_indices(m)).collect();
        lists.sort();
        lists
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, {{", self.ground.n())?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s = PointSet::from_bits(self.ground, *m).expect("in range");
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&p| mask >> p & 1 == 1).collect()
}

/// A topology on a finite ground set, as the sorted list of open bitmasks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Topology {
    ground: GroundSet,
    opens: Vec<u64>,
}

impl Topology {
    /// Builds a topology from the full list of its opens, validating the
    /// axioms: `∅` and `X` present, closed under pairwise union and
    /// intersection. Duplicates are tolerated and canonicalized away.
    pub fn from_opens(
        ground: GroundSet,
        opens: impl IntoIterator<Item = PointSet>,
    ) -> Result<Self> {
        let fam = SetFamily::new(ground, opens)?;
        Self::try_from_masks(ground, fam.members.clone())
    }

    pub fn try_from_masks(ground: GroundSet, masks: Vec<u64>) -> Result<Self> {
        let full = ground.full_mask();
        let mut opens = masks;
        for &m in &opens {
            if m & !full != 0 {
                return Err(Error::SetOutOfRange { n: ground.n() });
            }
        }
        opens.sort_unstable();
        opens.dedup();
        if opens.binary_search(&0).is_err() {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if opens.binary_search(&full).is_err() {
            return Err(Error::NotATopology("missing the whole space".into()));
        }
        for i in 0..opens.len() {
            for j in i + 1..opens.len() {
                let (u, v) = (opens[i], opens[j]);
                if opens.binary_search(&(u | v)).is_err() {
                    return Err(Error::NotATopology(format!(
                        "not closed under union: {:?} | {:?}",
                        mask_to_indices(u),
                        mask_to_indices(v)
                    )));
                }
                if opens.binary_search(&(u & v)).is_err() {
                    return Err(Error::NotATopology(format!(
                        "not closed under intersection: {:?} & {:?}",
                        mask_to_indices(u),
                        mask_to_indices(v)
                    )));
                }
            }
        }
        Ok(Topology { ground, opens })
    }

    /// Caller guarantees sorted, deduplicated, axiom-satisfying masks.
    pub(crate) fn from_sorted_masks_unchecked(ground: GroundSet, opens: Vec<u64>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(opens.binary_search(&0).is_ok());
        debug_assert!(opens.binary_search(&ground.full_mask()).is_ok());
        Topology { ground, opens }
    }

    pub fn indiscrete(ground: GroundSet) -> Self {
        let full = ground.full_mask();
        let opens = if full == 0 { vec![0] } else { vec![0, full] };
        Topology { ground, opens }
    }

    /// Materializes all `2^n` subsets; callers keep `n` small.
    pub fn discrete(ground: GroundSet) -> Self {
        assert!(
            ground.n() <= 25,
            "discrete topology on {} points is too large",
            ground.n()
        );
        let full = ground.full_mask();
        let opens = (0..=full).collect();
        Topology { ground, opens }
    }

    /// Smallest topology containing every member of `subbasis`: close the
    /// subbasis (plus `X`) under pairwise intersection, then everything
    /// (plus `∅`) under pairwise union.
    pub fn generate(ground: GroundSet, subbasis: &SetFamily) -> Result<Self> {
        if subbasis.ground() != ground {
            return Err(Error::GroundMismatch {
                expected: ground.n(),
                got: subbasis.ground().n(),
            });
        }
        let mut basis: BTreeSet<u64> = subbasis.masks().iter().copied().collect();
        basis.insert(ground.full_mask());
        close_under(&mut basis, |a, b| a & b);
        basis.insert(0);
        close_under(&mut basis, |a, b| a | b);
        Ok(Topology {
            ground,
            opens: basis.into_iter().collect(),
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn opens_count(&self) -> usize {
        self.opens.len()
    }

    /// Open bitmasks in increasing order.
    pub fn open_masks(&self) -> &[u64] {
        &self.opens
    }

    pub fn opens(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens
            .iter()
            .map(move |&m| PointSet::from_bits(self.ground, m).expect("opens are in range"))
    }

    pub fn open_family(&self) -> SetFamily {
        SetFamily {
            ground: self.ground,
            members: self.opens.clone(),
        }
    }

    /// Complements of the opens, sorted.
    pub fn closed_masks(&self) -> Vec<u64> {
        let full = self.ground.full_mask();
        let mut closed: Vec<u64> = self.opens.iter().map(|&m| full & !m).collect();
        closed.sort_unstable();
        closed
    }

    pub fn closed_family(&self) -> SetFamily {
        SetFamily {
            ground: self.ground,
            members: self.closed_masks(),
        }
    }

    pub fn contains_open_mask(&self, mask: u64) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    pub(crate) fn check_ground(&self, a: &PointSet) -> Result<()> {
        if a.ground() != self.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.n(),
                got: a.ground().n(),
            });
        }
        Ok(())
    }

    pub(crate) fn interior_mask(&self, a: u64) -> u64 {
        let mut int = 0u64;
        for &u in &self.opens {
            if u & !a == 0 {
                int |= u;
            }
        }
        int
    }

    pub(crate) fn closure_mask(&self, a: u64) -> u64 {
        let full = self.ground.full_mask();
        full & !self.interior_mask(full & !a)
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: &PointSet) -> Result<PointSet> {
        self.check_ground(a)?;
        PointSet::from_bits(self.ground, self.interior_mask(a.bits()))
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: &PointSet) -> Result<PointSet> {
        self.check_ground(a)?;
        PointSet::from_bits(self.ground, self.closure_mask(a.bits()))
    }

    pub fn is_open(&self, a: &PointSet) -> Result<bool> {
        self.check_ground(a)?;
        Ok(self.contains_open_mask(a.bits()))
    }

    pub fn is_closed(&self, a: &PointSet) -> Result<bool> {
        self.check_ground(a)?;
        Ok(self.contains_open_mask(self.ground.full_mask() & !a.bits()))
    }

    /// Whether every open of `self` is open in `other`. Topologies on
    /// different ground sets are never comparable.
    pub fn is_subtopology_of(&self, other: &Topology) -> bool {
        self.ground == other.ground && self.opens.iter().all(|m| other.contains_open_mask(*m))
    }

    /// The opens `U` with `int(cl(U)) = U`.
    pub fn regular_opens(&self) -> SetFamily {
        let members: Vec<u64> = self
            .opens
            .iter()
            .copied()
            .filter(|&u| self.interior_mask(self.closure_mask(u)) == u)
            .collect();
        SetFamily {
            ground: self.ground,
            members,
        }
    }

    /// Topology generated by the regular opens.
    pub fn semiregularization(&self) -> Topology {
        let fam = self.regular_opens();
        Topology::generate(self.ground, &fam).expect("same ground")
    }

    /// Whether the regular opens generate the topology back.
    pub fn is_semiregular(&self) -> bool {
        self.semiregularization() == *self
    }

    /// Whether every nonempty open contains a nonempty regular open.
    pub fn is_pi_semiregular(&self) -> bool {
        let regular = self.regular_opens();
        self.opens
            .iter()
            .all(|&b| b == 0 || regular.masks().iter().any(|&r| r != 0 && r & !b == 0))
    }

    /// Whether `fam` is a neighborhood basis: for every point `x` and open
    /// `B ∋ x` some member `A` has `x ∈ int(A)` and `A ⊆ B`. Members need
    /// not be open.
    pub fn is_neighborhood_basis(&self, fam: &SetFamily) -> Result<bool> {
        if fam.ground() != self.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.n(),
                got: fam.ground().n(),
            });
        }
        let interiors: Vec<u64> = fam.masks().iter().map(|&a| self.interior_mask(a)).collect();
        for x in self.ground.points() {
            let xbit = 1u64 << x;
            for &b in &self.opens {
                if b & xbit == 0 {
                    continue;
                }
                let ok = fam
                    .masks()
                    .iter()
                    .zip(&interiors)
                    .any(|(&a, &int_a)| int_a & xbit != 0 && a & !b == 0);
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `fam` is a neighborhood π-basis: every nonempty open `B`
    /// contains a member with nonempty interior.
    pub fn is_neighborhood_pi_basis(&self, fam: &SetFamily) -> Result<bool> {
        if fam.ground() != self.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.n(),
                got: fam.ground().n(),
            });
        }
        for &b in &self.opens {
            if b == 0 {
                continue;
            }
            let ok = fam
                .masks()
                .iter()
                .any(|&a| a & !b == 0 && self.interior_mask(a) != 0);
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology(n={}, {{", self.ground.n())?;
        for (i, m) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s = PointSet::from_bits(self.ground, *m).expect("in range");
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

fn close_under(set: &mut BTreeSet<u64>, op: impl Fn(u64, u64) -> u64) {
    loop {
        let elems: Vec<u64> = set.iter().copied().collect();
        let mut grew = false;
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if set.insert(op(elems[i], elems[j])) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
}

/// Smallest topology containing every listed topology. Errors on an empty
/// list or mixed ground sets.
pub fn join_topologies(topologies: &[Topology]) -> Result<Topology> {
    let first = topologies.first().ok_or(Error::EmptyJoin)?;
    let ground = first.ground();
    let mut masks = BTreeSet::new();
    for t in topologies {
        if t.ground() != ground {
            return Err(Error::GroundMismatch {
                expected: ground.n(),
                got: t.ground().n(),
            });
        }
        masks.extend(t.open_masks().iter().copied());
    }
    let fam = SetFamily {
        ground,
        members: masks.into_iter().collect(),
    };
    Topology::generate(ground, &fam)
}

/// JSON form: `{"n": 2, "opens": [[], [0], [0, 1]]}` with each open as its
/// sorted point list and the opens sorted lexicographically.
#[derive(Serialize, Deserialize)]
struct TopologyRepr {
    n: usize,
    opens: Vec<Vec<usize>>,
}

impl Serialize for Topology {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TopologyRepr {
            n: self.ground.n(),
            opens: self.open_family().to_index_lists(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Topology {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TopologyRepr::deserialize(deserializer)?;
        let ground = GroundSet::new(repr.n).map_err(D::Error::custom)?;
        let mut masks = Vec::with_capacity(repr.opens.len());
        for open in &repr.opens {
            let set = PointSet::from_points(ground, open).map_err(D::Error::custom)?;
            masks.push(set.bits());
        }
        Topology::try_from_masks(ground, masks).map_err(D::Error::custom)
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_index_lists().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn topo(n: usize, masks: &[u64]) -> Topology {
        Topology::try_from_masks(ground(n), masks.to_vec()).unwrap()
    }

    /// Sierpiński space on two points: {0} open, {1} not.
    fn sierpinski() -> Topology {
        topo(2, &[0b00, 0b01, 0b11])
    }

    #[test]
    fn axioms_are_checked() {
        let g = ground(2);
        assert!(matches!(
            Topology::try_from_masks(g, vec![0b01, 0b11]),
            Err(Error::NotATopology(_))
        ));
        assert!(matches!(
            Topology::try_from_masks(g, vec![0b00, 0b01]),
            Err(Error::NotATopology(_))
        ));
        // {∅, {0}, {1}, X} minus X fails union closure.
        assert!(matches!(
            Topology::try_from_masks(ground(3), vec![0b000, 0b001, 0b010, 0b111]),
            Err(Error::NotATopology(_))
        ));
        assert!(Topology::try_from_masks(g, vec![0b00, 0b01, 0b10, 0b11]).is_ok());
    }

    #[test]
    fn generate_from_subbasis() {
        // {{0,1},{1,2}} on 3 points generates {∅, {1}, {0,1}, {1,2}, X}.
        let g = ground(3);
        let fam = SetFamily::from_masks(g, [0b011u64, 0b110]).unwrap();
        let t = Topology::generate(g, &fam).unwrap();
        assert_eq!(t.open_masks(), &[0b000, 0b010, 0b011, 0b110, 0b111]);
    }

    #[test]
    fn generate_is_minimal_and_contains_subbasis() {
        let g = ground(3);
        let fam = SetFamily::from_masks(g, [0b101u64]).unwrap();
        let t = Topology::generate(g, &fam).unwrap();
        assert_eq!(t.open_masks(), &[0b000, 0b101, 0b111]);
    }

    #[test]
    fn interior_and_closure() {
        let s = sierpinski();
        let g = ground(2);
        let one = PointSet::from_points(g, &[1]).unwrap();
        let zero = PointSet::from_points(g, &[0]).unwrap();
        // {1} is closed with empty interior; {0} is open and dense.
        assert_eq!(s.interior(&one).unwrap().to_indices(), Vec::<usize>::new());
        assert_eq!(s.closure(&one).unwrap().to_indices(), vec![1]);
        assert_eq!(s.interior(&zero).unwrap().to_indices(), vec![0]);
        assert_eq!(s.closure(&zero).unwrap().to_indices(), vec![0, 1]);
        let h = ground(3);
        let wrong = PointSet::empty(h);
        assert_eq!(
            s.interior(&wrong),
            Err(Error::GroundMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn join_of_the_two_sierpinski_variants_is_discrete() {
        let a = topo(2, &[0b00, 0b01, 0b11]);
        let b = topo(2, &[0b00, 0b10, 0b11]);
        let j = join_topologies(&[a, b]).unwrap();
        assert_eq!(j, Topology::discrete(ground(2)));
        assert_eq!(join_topologies(&[]), Err(Error::EmptyJoin));
    }

    #[test]
    fn regular_opens_and_semiregularization() {
        let s = sierpinski();
        // cl({0}) = X, int(X) = X ≠ {0}: only ∅ and X are regular.
        assert_eq!(s.regular_opens().masks(), &[0b00, 0b11]);
        assert_eq!(s.semiregularization(), Topology::indiscrete(ground(2)));
        assert!(!s.is_semiregular());
        assert!(Topology::indiscrete(ground(2)).is_semiregular());
        assert!(Topology::discrete(ground(2)).is_semiregular());
        assert!(!s.is_pi_semiregular());
        assert!(Topology::discrete(ground(3)).is_pi_semiregular());
    }

    #[test]
    fn semiregular_implies_pi_semiregular_on_small_grounds() {
        for n in 0..=3 {
            for t in crate::enumerate::enumerate_topologies(n).unwrap() {
                if t.is_semiregular() {
                    assert!(t.is_pi_semiregular(), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn neighborhood_basis_examples() {
        let g = ground(2);
        let d = Topology::discrete(g);
        let opens = d.open_family();
        assert!(d.is_neighborhood_basis(&opens).unwrap());
        // {{0}, X} misses a small neighborhood of point 1.
        let partial = SetFamily::from_masks(g, [0b01u64, 0b11]).unwrap();
        assert!(!d.is_neighborhood_basis(&partial).unwrap());
        // Non-open members are allowed when their interiors work out.
        let s = sierpinski();
        let all = SetFamily::from_masks(g, [0b01u64, 0b10, 0b11]).unwrap();
        assert!(s.is_neighborhood_basis(&all).unwrap());
    }

    #[test]
    fn neighborhood_pi_basis_examples() {
        let s = sierpinski();
        let just_zero = SetFamily::from_masks(ground(2), [0b01u64]).unwrap();
        assert!(s.is_neighborhood_pi_basis(&just_zero).unwrap());
        let opens = s.open_family();
        assert!(s.is_neighborhood_pi_basis(&opens).unwrap());
        let d = Topology::discrete(ground(2));
        assert!(!d.is_neighborhood_pi_basis(&just_zero).unwrap());
    }

    #[test]
    fn json_round_trip_uses_lexicographic_open_order() {
        let s = sierpinski();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":2,"opens":[[],[0],[0,1]]}"#);
        let back: Topology = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        // Lexicographic index-list order differs from bitmask order: {1} < {0,1}
        // as masks (2 < 3) but [0,1] < [1] lexicographically.
        let d = Topology::discrete(ground(2));
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"n":2,"opens":[[],[0],[0,1],[1]]}"#
        );
        let bad: std::result::Result<Topology, _> =
            serde_json::from_str(r#"{"n":2,"opens":[[],[0]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn empty_ground_has_one_topology() {
        let g = ground(0);
        let t = Topology::indiscrete(g);
        assert_eq!(t, Topology::discrete(g));
        assert_eq!(t.opens_count(), 1);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"n":0,"opens":[[]]}"#
        );
    }
}
