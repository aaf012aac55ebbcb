//! The Borel hierarchy over a finite topology.
//!
//! `bor(ν)` is the least family containing the closed sets and closed under
//! complements and unions of at most ν members. The level families `P^ν_ξ`
//! (ξ ≤ ν) start from the closed sets; for ξ ≥ 1 a level consists of all
//! intersections of at most ν complements of sets from the union of the
//! earlier levels. `S^ν_ξ` is the dual tower built from unions.
//!
//! The Π/Σ classes are unions of `P^ν_ξ`/`S^ν_ξ` over all finite ν. On a
//! ground set with `2^n` subsets every intersection has a sub-intersection
//! of at most `2^n` distinct terms with the same value, so the union over
//! all ν is reached exactly at the saturating ν = max(ξ, 2^n); see
//! [`LevelIndex::saturating`].
//!
//! Indexing convention: this crate exposes the 0-based level index ξ
//! everywhere (level 0 = closed sets for Π, open sets for Σ). Classical
//! treatments number the same classes starting at 1, so the classical name
//! of level ξ is ξ+1.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::space::GroundSet;
use crate::topology::{SetFamily, Topology};

/// Index (ν, ξ) of a level family: ν ≥ 1 and ξ ≤ ν.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelIndex {
    nu: usize,
    xi: usize,
}

impl LevelIndex {
    pub fn new(nu: usize, xi: usize) -> Result<Self> {
        if nu == 0 {
            return Err(Error::ZeroNu);
        }
        if xi > nu {
            return Err(Error::LevelIndexOutOfRange { nu, xi });
        }
        Ok(LevelIndex { nu, xi })
    }

    /// The ν at which level ξ stops growing on this ground set: any
    /// union or intersection of subsets has at most `2^n` distinct terms.
    pub fn saturating(ground: GroundSet, xi: usize) -> Self {
        LevelIndex {
            nu: ground.subset_count().max(xi).max(1),
            xi,
        }
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn xi(&self) -> usize {
        self.xi
    }
}

/// Least family containing the closed sets of `t`, closed under complement
/// and unions of at most `nu` members, by fixpoint iteration. For finite
/// ν ≥ 2 the bounded-union closure coincides with closure under all finite
/// unions; for ν = 1 unions are no-ops and only complements act.
pub fn bor(t: &Topology, nu: usize) -> Result<SetFamily> {
    if nu == 0 {
        return Err(Error::ZeroNu);
    }
    let full = t.ground().full_mask();
    let mut family: BTreeSet<u64> = t.closed_masks().into_iter().collect();
    loop {
        let before = family.len();
        let elems: Vec<u64> = family.iter().copied().collect();
        for &a in &elems {
            family.insert(full & !a);
        }
        if nu >= 2 {
            let elems: Vec<u64> = family.iter().copied().collect();
            for i in 0..elems.len() {
                for j in i + 1..elems.len() {
                    family.insert(elems[i] | elems[j]);
                }
            }
        }
        if family.len() == before {
            break;
        }
    }
    Ok(SetFamily::from_sorted_masks_unchecked(
        t.ground(),
        family.into_iter().collect(),
    ))
}

/// All intersections of at most `nu` sets from `gens`, including the empty
/// intersection `full`. Breadth-first over intersection depth; values are
/// deduplicated, so the frontier empties once nothing new appears.
fn bounded_meets(gens: &[u64], nu: usize, full: u64) -> BTreeSet<u64> {
    let mut acc = BTreeSet::from([full]);
    let mut frontier = vec![full];
    for _ in 0..nu {
        let mut next = Vec::new();
        for &f in &frontier {
            for &g in gens {
                let v = f & g;
                if acc.insert(v) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    acc
}

/// Dual of [`bounded_meets`]: unions of at most `nu` sets from `gens`,
/// including the empty union `∅`.
fn bounded_joins(gens: &[u64], nu: usize) -> BTreeSet<u64> {
    let mut acc = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    for _ in 0..nu {
        let mut next = Vec::new();
        for &f in &frontier {
            for &g in gens {
                let v = f | g;
                if acc.insert(v) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    acc
}

/// Levels 0..=xi_max of the `P^ν` tower as mask sets.
fn p_levels_through(t: &Topology, nu: usize, xi_max: usize) -> Vec<BTreeSet<u64>> {
    let full = t.ground().full_mask();
    let closed: BTreeSet<u64> = t.closed_masks().into_iter().collect();
    let mut pool = closed.clone();
    let mut levels = vec![closed];
    for _ in 1..=xi_max {
        let gens: Vec<u64> = pool.iter().map(|&m| full & !m).collect();
        let level = bounded_meets(&gens, nu, full);
        pool.extend(level.iter().copied());
        levels.push(level);
    }
    levels
}

fn s_levels_through(t: &Topology, nu: usize, xi_max: usize) -> Vec<BTreeSet<u64>> {
    let full = t.ground().full_mask();
    let opens: BTreeSet<u64> = t.open_masks().iter().copied().collect();
    let mut pool = opens.clone();
    let mut levels = vec![opens];
    for _ in 1..=xi_max {
        let gens: Vec<u64> = pool.iter().map(|&m| full & !m).collect();
        let level = bounded_joins(&gens, nu);
        pool.extend(level.iter().copied());
        levels.push(level);
    }
    levels
}

fn family_from(ground: GroundSet, masks: BTreeSet<u64>) -> SetFamily {
    SetFamily::from_sorted_masks_unchecked(ground, masks.into_iter().collect())
}

/// The family `P^ν_ξ` over `t`: level 0 is the closed sets, level ξ ≥ 1 the
/// intersections of ≤ ν complements of sets from the earlier levels.
pub fn p_level(t: &Topology, idx: LevelIndex) -> SetFamily {
    let mut levels = p_levels_through(t, idx.nu, idx.xi);
    family_from(t.ground(), levels.pop().expect("levels nonempty"))
}

/// The family `S^ν_ξ`: dual of [`p_level`], built from the open sets by
/// bounded unions.
pub fn s_level(t: &Topology, idx: LevelIndex) -> SetFamily {
    let mut levels = s_levels_through(t, idx.nu, idx.xi);
    family_from(t.ground(), levels.pop().expect("levels nonempty"))
}

/// The class at level ξ of the Π side: the union of `P^ν_ξ` over all finite
/// ν, evaluated at the saturating ν.
pub fn pi_class(t: &Topology, xi: usize) -> SetFamily {
    p_level(t, LevelIndex::saturating(t.ground(), xi))
}

/// Dual of [`pi_class`] on the Σ side.
pub fn sigma_class(t: &Topology, xi: usize) -> SetFamily {
    s_level(t, LevelIndex::saturating(t.ground(), xi))
}

/// The algebra generated by the closed sets: closure under complement and
/// pairwise union. Independent of the level tower; used to cross-check it.
pub fn borel_algebra(t: &Topology) -> SetFamily {
    let full = t.ground().full_mask();
    let mut family: BTreeSet<u64> = t.closed_masks().into_iter().collect();
    loop {
        let before = family.len();
        let elems: Vec<u64> = family.iter().copied().collect();
        for &a in &elems {
            family.insert(full & !a);
        }
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                family.insert(elems[i] | elems[j]);
            }
        }
        if family.len() == before {
            break;
        }
    }
    family_from(t.ground(), family)
}

/// Memoized hierarchy of one topology: Π/Σ classes through stabilization,
/// the full Borel family, and the `P`/`S` levels for every ν ≤ `nu_max`.
#[derive(Clone, Debug)]
pub struct HierarchySnapshot {
    base: Topology,
    stabilization_xi: usize,
    pi_classes: Vec<SetFamily>,
    sigma_classes: Vec<SetFamily>,
    borel: SetFamily,
    p_levels: BTreeMap<(usize, usize), SetFamily>,
    s_levels: BTreeMap<(usize, usize), SetFamily>,
}

impl HierarchySnapshot {
    /// Computes classes until two consecutive ones coincide, then the
    /// `P`/`S` levels for ν in `1..=nu_max`, ξ ≤ ν.
    pub fn compute(t: &Topology, nu_max: usize) -> Self {
        let ground = t.ground();
        let full = ground.full_mask();
        let closed: BTreeSet<u64> = t.closed_masks().into_iter().collect();
        let opens: BTreeSet<u64> = t.open_masks().iter().copied().collect();

        // Saturated classes: any ν ≥ 2^n computes the union over all ν.
        let sat = ground.subset_count().max(1);
        let mut pi_sets = vec![closed.clone()];
        let mut pool = closed;
        loop {
            let gens: Vec<u64> = pool.iter().map(|&m| full & !m).collect();
            let next = bounded_meets(&gens, sat, full);
            if &next == pi_sets.last().expect("nonempty") {
                break;
            }
            pool.extend(next.iter().copied());
            pi_sets.push(next);
        }
        let borel = family_from(ground, pool);
        let stabilization_xi = pi_sets.len() - 1;

        let mut sigma_sets = vec![opens.clone()];
        let mut spool = opens;
        loop {
            let gens: Vec<u64> = spool.iter().map(|&m| full & !m).collect();
            let next = bounded_joins(&gens, sat);
            if &next == sigma_sets.last().expect("nonempty") {
                break;
            }
            spool.extend(next.iter().copied());
            sigma_sets.push(next);
        }

        let mut p_levels = BTreeMap::new();
        let mut s_levels = BTreeMap::new();
        for nu in 1..=nu_max {
            for (xi, level) in p_levels_through(t, nu, nu).into_iter().enumerate() {
                p_levels.insert((nu, xi), family_from(ground, level));
            }
            for (xi, level) in s_levels_through(t, nu, nu).into_iter().enumerate() {
                s_levels.insert((nu, xi), family_from(ground, level));
            }
        }

        let snapshot = HierarchySnapshot {
            base: t.clone(),
            stabilization_xi,
            pi_classes: pi_sets
                .into_iter()
                .map(|s| family_from(ground, s))
                .collect(),
            sigma_classes: sigma_sets
                .into_iter()
                .map(|s| family_from(ground, s))
                .collect(),
            borel,
            p_levels,
            s_levels,
        };
        debug_assert!(snapshot.all_within_borel());
        snapshot
    }

    fn all_within_borel(&self) -> bool {
        self.pi_classes
            .iter()
            .chain(self.sigma_classes.iter())
            .chain(self.p_levels.values())
            .chain(self.s_levels.values())
            .all(|fam| fam.is_subfamily_of(&self.borel))
    }

    pub fn base(&self) -> &Topology {
        &self.base
    }

    /// First ξ from which the Π classes are constant.
    pub fn stabilization_xi(&self) -> usize {
        self.stabilization_xi
    }

    /// Π class at ξ; indices beyond stabilization read the stable class.
    pub fn pi(&self, xi: usize) -> &SetFamily {
        &self.pi_classes[xi.min(self.pi_classes.len() - 1)]
    }

    /// Σ class at ξ; indices beyond its stabilization read the stable class.
    pub fn sigma(&self, xi: usize) -> &SetFamily {
        &self.sigma_classes[xi.min(self.sigma_classes.len() - 1)]
    }

    pub fn pi_classes(&self) -> &[SetFamily] {
        &self.pi_classes
    }

    pub fn sigma_classes(&self) -> &[SetFamily] {
        &self.sigma_classes
    }

    pub fn borel(&self) -> &SetFamily {
        &self.borel
    }

    pub fn p_level(&self, nu: usize, xi: usize) -> Option<&SetFamily> {
        self.p_levels.get(&(nu, xi))
    }

    pub fn s_level(&self, nu: usize, xi: usize) -> Option<&SetFamily> {
        self.s_levels.get(&(nu, xi))
    }
}

/// Least α ≥ 1 such that the union of the Π classes of `sigma` below α is a
/// neighborhood basis of `tau`; `None` when even the full Borel family is
/// not one. The search stops at stabilization + 1 because later classes add
/// nothing.
pub fn min_pi_basis_level(sigma: &Topology, tau: &Topology) -> Result<Option<usize>> {
    let snap = HierarchySnapshot::compute(sigma, 0);
    min_pi_basis_level_from(&snap, tau)
}

pub(crate) fn min_pi_basis_level_from(
    snap: &HierarchySnapshot,
    tau: &Topology,
) -> Result<Option<usize>> {
    let sigma = snap.base();
    if sigma.ground() != tau.ground() {
        return Err(Error::GroundMismatch {
            expected: sigma.ground().n(),
            got: tau.ground().n(),
        });
    }
    if !sigma.is_subtopology_of(tau) {
        return Err(Error::NotSubtopology);
    }
    let mut cumulative: BTreeSet<u64> = BTreeSet::new();
    for alpha in 1..=snap.stabilization_xi() + 1 {
        cumulative.extend(snap.pi(alpha - 1).masks().iter().copied());
        let fam = family_from(sigma.ground(), cumulative.clone());
        if tau.is_neighborhood_basis(&fam)? {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// Least α ≥ 1 such that the union of the Σ classes of `sigma` below α is a
/// neighborhood π-basis of `tau`; `None` when no level works.
pub fn min_sigma_pibasis_level(sigma: &Topology, tau: &Topology) -> Result<Option<usize>> {
    let snap = HierarchySnapshot::compute(sigma, 0);
    min_sigma_pibasis_level_from(&snap, tau)
}

pub(crate) fn min_sigma_pibasis_level_from(
    snap: &HierarchySnapshot,
    tau: &Topology,
) -> Result<Option<usize>> {
    let sigma = snap.base();
    if sigma.ground() != tau.ground() {
        return Err(Error::GroundMismatch {
            expected: sigma.ground().n(),
            got: tau.ground().n(),
        });
    }
    if !sigma.is_subtopology_of(tau) {
        return Err(Error::NotSubtopology);
    }
    let sigma_stab = snap.sigma_classes().len() - 1;
    let mut cumulative: BTreeSet<u64> = BTreeSet::new();
    for alpha in 1..=sigma_stab + 1 {
        cumulative.extend(snap.sigma(alpha - 1).masks().iter().copied());
        let fam = family_from(sigma.ground(), cumulative.clone());
        if tau.is_neighborhood_pi_basis(&fam)? {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}
