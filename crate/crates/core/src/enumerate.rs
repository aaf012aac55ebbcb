//! Exhaustive enumeration of all topologies on small ground sets.
//!
//! Two independent enumerators with no shared search logic:
//!
//! * [`enumerate_topologies`] walks minimal-neighborhood assignments. A
//!   topology on a finite set is determined by the rows `r(x)` = smallest
//!   open set containing `x`, and a row table arises from a topology exactly
//!   when `x ∈ r(x)` and `y ∈ r(x) ⇒ r(y) ⊆ r(x)`; such row tables are the
//!   reflexive-transitive relations on the points. The walk feeds counting
//!   directly; for enumeration its output is sorted into canonical order.
//! * [`enumerate_topologies_direct`] decides subset membership value by
//!   value, propagating union/intersection closure and pruning contradicted
//!   branches. It exists to cross-check the first enumerator and shares no
//!   code with it.
//!
//! Canonical order is coarsest first: ascending by number of open sets,
//! ties broken lexicographically on the open-mask list. The order is a
//! property of the output, not of either search, both enumerators produce
//! it index for index, and it extends refinement: a strict subtopology
//! always precedes its refinements.
//!
//! Labeled counts for n = 0..6: 1, 1, 4, 29, 355, 6942, 209527.

use crate::error::{Error, Result};
use crate::space::GroundSet;
use crate::topology::Topology;

/// Largest ground size the harness sweeps exhaustively.
pub const MAX_EXHAUSTIVE_N: usize = 5;
/// Largest ground size either enumerator accepts.
pub const MAX_ENUMERATION_N: usize = 6;

/// Iterator over every topology on `{0, …, n−1}` in canonical order.
pub fn enumerate_topologies(n: usize) -> Result<TopologyIter> {
    let mut all: Vec<Topology> = row_walk(n)?.collect();
    all.sort_unstable_by(canonical_cmp);
    Ok(TopologyIter {
        inner: all.into_iter(),
    })
}

fn canonical_cmp(a: &Topology, b: &Topology) -> std::cmp::Ordering {
    (a.opens_count(), a.open_masks()).cmp(&(b.opens_count(), b.open_masks()))
}

/// Number of topologies on `{0, …, n−1}`; counts off the raw walk without
/// materializing the topologies.
pub fn count_topologies(n: usize) -> Result<u64> {
    Ok(row_walk(n)?.count() as u64)
}

pub struct TopologyIter {
    inner: std::vec::IntoIter<Topology>,
}

impl Iterator for TopologyIter {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for TopologyIter {}

fn row_walk(n: usize) -> Result<RowWalk> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationRange {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let ground = GroundSet::new(n)?;
    Ok(RowWalk {
        ground,
        rows: Vec::with_capacity(n),
        started: false,
        done: false,
    })
}

struct RowWalk {
    ground: GroundSet,
    /// Chosen minimal-neighborhood rows, one per decided point.
    rows: Vec<u64>,
    started: bool,
    done: bool,
}

impl RowWalk {
    /// Smallest consistent row for `depth` with bitmask at least `from`.
    fn find_candidate(&self, depth: usize, from: u64) -> Option<u64> {
        let full = self.ground.full_mask();
        let bit = 1u64 << depth;
        let mut m = from.max(bit);
        while m <= full {
            if m & bit != 0 && self.consistent(depth, m) {
                return Some(m);
            }
            m += 1;
        }
        None
    }

    fn consistent(&self, depth: usize, m: u64) -> bool {
        for (j, &r) in self.rows.iter().enumerate().take(depth) {
            // j ∈ m requires r(j) ⊆ m; depth ∈ r(j) requires m ⊆ r(j).
            if m >> j & 1 == 1 && r & !m != 0 {
                return false;
            }
            if r >> depth & 1 == 1 && m & !r != 0 {
                return false;
            }
        }
        true
    }

    /// Depth-first: extend to a full assignment, starting the search at
    /// `from` on the current depth. Returns false when exhausted.
    fn advance(&mut self, mut from: u64) -> bool {
        let n = self.ground.n();
        loop {
            let depth = self.rows.len();
            match self.find_candidate(depth, from) {
                Some(m) => {
                    self.rows.push(m);
                    if self.rows.len() == n {
                        return true;
                    }
                    from = 0;
                }
                None => match self.rows.pop() {
                    Some(prev) => from = prev + 1,
                    None => return false,
                },
            }
        }
    }

    fn emit(&self) -> Topology {
        let full = self.ground.full_mask();
        let opens: Vec<u64> = (0..=full)
            .filter(|&v| {
                self.rows
                    .iter()
                    .enumerate()
                    .all(|(x, &r)| v >> x & 1 == 0 || r & !v == 0)
            })
            .collect();
        Topology::from_sorted_masks_unchecked(self.ground, opens)
    }
}

impl Iterator for RowWalk {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        if self.done {
            return None;
        }
        if self.ground.n() == 0 {
            self.done = true;
            return Some(Topology::indiscrete(self.ground));
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(0)
        } else {
            let prev = self.rows.pop().expect("full assignment present");
            self.advance(prev + 1)
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(self.emit())
    }
}

/// Cross-check enumerator: all topologies on `{0, …, n−1}` by direct search
/// over set families, sorted into the canonical order.
pub fn enumerate_topologies_direct(n: usize) -> Result<Vec<Topology>> {
    let ground = direct_ground(n)?;
    let mut out = Vec::new();
    direct_dfs(
        initial_family(ground),
        1,
        ground.full_mask(),
        &mut |family| {
            let opens: Vec<u64> = (0..64).filter(|&v| family >> v & 1 == 1).collect();
            out.push(Topology::from_sorted_masks_unchecked(ground, opens));
        },
    );
    out.sort_unstable_by(canonical_cmp);
    Ok(out)
}

/// Number of topologies found by the cross-check enumerator.
pub fn count_topologies_direct(n: usize) -> Result<u64> {
    let ground = direct_ground(n)?;
    let mut count = 0u64;
    direct_dfs(initial_family(ground), 1, ground.full_mask(), &mut |_| {
        count += 1
    });
    Ok(count)
}

fn direct_ground(n: usize) -> Result<GroundSet> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationRange {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    GroundSet::new(n)
}

/// Families are bitsets over subset values: bit `v` set means the subset
/// with bitmask `v` belongs to the family. Needs `2^n ≤ 64`.
fn initial_family(ground: GroundSet) -> u64 {
    1u64 | 1u64 << ground.full_mask()
}

/// Values below `cursor` are decided: in the family or permanently out.
/// Branch on `cursor`, propagating union/intersection closure; a closure
/// consequence below the cursor that is not already a member contradicts an
/// earlier exclusion and prunes the branch.
fn direct_dfs(family: u64, cursor: u64, full_value: u64, out: &mut impl FnMut(u64)) {
    if cursor >= full_value {
        out(family);
        return;
    }
    if family >> cursor & 1 == 1 {
        direct_dfs(family, cursor + 1, full_value, out);
        return;
    }
    direct_dfs(family, cursor + 1, full_value, out);
    if let Some(closed) = close_with(family, cursor) {
        let below = (1u64 << cursor) - 1;
        if (closed ^ family) & below == 0 {
            direct_dfs(closed, cursor + 1, full_value, out);
        }
    }
}

/// Family closure of `family ∪ {v}` under union and intersection of subset
/// values. Always succeeds on ≤ 64 values; Option keeps room for the caller
/// to treat a failed closure as a prune.
fn close_with(family: u64, v: u64) -> Option<u64> {
    let mut closed = family | 1u64 << v;
    let mut work = vec![v];
    while let Some(w) = work.pop() {
        let mut rest = closed;
        while rest != 0 {
            let u = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            for t in [w | u, w & u] {
                if closed >> t & 1 == 0 {
                    closed |= 1u64 << t;
                    work.push(t);
                }
            }
        }
    }
    Some(closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_values_up_to_four() {
        let expected = [1u64, 1, 4, 29, 355];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(count_topologies(n).unwrap(), want, "n={n}");
            assert_eq!(count_topologies_direct(n).unwrap(), want, "direct n={n}");
        }
    }

    #[test]
    fn enumerators_agree_index_for_index_up_to_three() {
        for n in 0..=3usize {
            let walked: Vec<Topology> = enumerate_topologies(n).unwrap().collect();
            let direct = enumerate_topologies_direct(n).unwrap();
            assert_eq!(walked, direct, "n={n}");
        }
    }

    #[test]
    fn n_two_topologies_are_the_known_four() {
        let ts: Vec<Vec<u64>> = enumerate_topologies(2)
            .unwrap()
            .map(|t| t.open_masks().to_vec())
            .collect();
        assert_eq!(
            ts,
            vec![
                vec![0b00, 0b11],
                vec![0b00, 0b01, 0b11],
                vec![0b00, 0b10, 0b11],
                vec![0b00, 0b01, 0b10, 0b11],
            ]
        );
    }

    #[test]
    fn range_is_enforced() {
        assert_eq!(
            enumerate_topologies(7).err(),
            Some(Error::EnumerationRange { n: 7, max: 6 })
        );
        assert_eq!(
            count_topologies_direct(7).err(),
            Some(Error::EnumerationRange { n: 7, max: 6 })
        );
    }

    #[test]
    fn every_emitted_family_is_a_topology() {
        for n in 0..=3usize {
            for t in enumerate_topologies(n).unwrap() {
                let revalidated = Topology::try_from_masks(t.ground(), t.open_masks().to_vec());
                assert!(revalidated.is_ok(), "{t:?}");
            }
        }
    }
}
