//! Slight sets along a weak filtration: the smallness notion that replaces
//! meagerness stage by stage.
//!
//! For a weak filtration with stages τ_0, …, τ_m and an arity bound ν ≥ 1,
//! the families are built in lockstep for ξ ≤ min(ν, m):
//!
//! * ξ₋-slight (`minus`): for ξ = 0 just {∅}; for ξ ≥ 1 the least family
//!   closed under subsets and unions of ≤ ν members that contains every
//!   γ₊-slight set for γ < ξ and every τ_ξ-closed set with empty
//!   τ-interior.
//! * ξ₊-slight (`plus`): the sets that are τ_ξ-locally ξ₋-slight, i.e.
//!   covered by τ_ξ-open sets on which their trace is ξ₋-slight.
//!
//! The core operator c_ξ(A) removes the locally slight part: the complement
//! of the union of all τ_ξ-open sets with ξ₋-slight trace on A. The
//! `verify_*` functions check the structural facts these families satisfy
//! (monotonicity, meagerness, closed approximation of lower-level sets,
//! closure excess, open envelopes) and report pass, fail with witness, or
//! vacuous when a hypothesis does not hold.

use std::collections::BTreeSet;

use crate::borel::{p_level, LevelIndex};
use crate::error::{Error, Result};
use crate::filtration::{is_filtration, is_weak_filtration, Filtration};
use crate::report::{CheckReport, Instance, Witness};
use crate::space::PointSet;
use crate::topology::{SetFamily, Topology};

/// Slight families are enumerated over all subsets, so the ground has to
/// stay small.
pub const MAX_SLIGHT_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlightFamilies {
    nu: usize,
    minus: Vec<SetFamily>,
    plus: Vec<SetFamily>,
}

impl SlightFamilies {
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Largest computed index, min(ν, m).
    pub fn max_xi(&self) -> usize {
        self.minus.len() - 1
    }

    pub fn minus(&self, xi: usize) -> Option<&SetFamily> {
        self.minus.get(xi)
    }

    pub fn plus(&self, xi: usize) -> Option<&SetFamily> {
        self.plus.get(xi)
    }

    pub fn minus_families(&self) -> &[SetFamily] {
        &self.minus
    }

    pub fn plus_families(&self) -> &[SetFamily] {
        &self.plus
    }
}

/// Builds the ξ₋- and ξ₊-slight families along `f` for all ξ ≤ min(ν, m).
pub fn compute_slight(f: &Filtration, nu: usize) -> Result<SlightFamilies> {
    if nu == 0 {
        return Err(Error::ZeroNu);
    }
    if !is_weak_filtration(f) {
        return Err(Error::NotWeakFiltration);
    }
    let ground = f.sigma().ground();
    if ground.n() > MAX_SLIGHT_N {
        return Err(Error::InvalidInput(format!(
            "slight families enumerate all subsets; n <= {MAX_SLIGHT_N} required, got n = {}",
            ground.n()
        )));
    }
    let xi_max = nu.min(f.last_index());
    let mut minus: Vec<BTreeSet<u64>> = Vec::with_capacity(xi_max + 1);
    let mut plus: Vec<BTreeSet<u64>> = Vec::with_capacity(xi_max + 1);
    minus.push(BTreeSet::from([0u64]));
    plus.push(locally_slight(&f.stages()[0], &minus[0]));
    for xi in 1..=xi_max {
        let stage = &f.stages()[xi];
        let mut gens: BTreeSet<u64> = BTreeSet::new();
        for earlier in plus.iter().take(xi) {
            gens.extend(earlier.iter().copied());
        }
        for &c in stage.closed_masks().iter() {
            if f.tau().interior_mask(c) == 0 {
                gens.insert(c);
            }
        }
        let m = slight_closure(gens, nu);
        plus.push(locally_slight(stage, &m));
        minus.push(m);
    }
    let to_family = |sets: Vec<BTreeSet<u64>>| -> Vec<SetFamily> {
        sets.into_iter()
            .map(|s| SetFamily::from_masks(ground, s).expect("masks lie in the ground"))
            .collect()
    };
    Ok(SlightFamilies {
        nu,
        minus: to_family(minus),
        plus: to_family(plus),
    })
}

/// Least family containing `gens` that is closed under subsets and unions
/// of at most `nu` members. Closure under unions of bounded arity ≥ 2 is a
/// fixpoint of pairwise unions; ν = 1 adds nothing.
fn slight_closure(gens: BTreeSet<u64>, nu: usize) -> BTreeSet<u64> {
    let mut fam = gens;
    fam.insert(0);
    loop {
        let mut add: Vec<u64> = Vec::new();
        for &m in &fam {
            let mut s = m;
            while s != 0 {
                s = (s - 1) & m;
                if !fam.contains(&s) {
                    add.push(s);
                }
            }
        }
        if nu >= 2 {
            let v: Vec<u64> = fam.iter().copied().collect();
            for i in 0..v.len() {
                for j in (i + 1)..v.len() {
                    let u = v[i] | v[j];
                    if !fam.contains(&u) {
                        add.push(u);
                    }
                }
            }
        }
        if add.is_empty() {
            return fam;
        }
        fam.extend(add);
    }
}

/// Sets covered by stage-open sets on which their trace is in `minus`.
fn locally_slight(stage: &Topology, minus: &BTreeSet<u64>) -> BTreeSet<u64> {
    let full = stage.ground().full_mask();
    let mut fam = BTreeSet::new();
    for a in 0..=full {
        let mut cover = 0u64;
        for &u in stage.open_masks() {
            if minus.contains(&(a & u)) {
                cover |= u;
            }
        }
        if a & !cover == 0 {
            fam.insert(a);
        }
    }
    fam
}

/// The core c_ξ(A): what remains of A after deleting every τ_ξ-open set on
/// which A's trace is ξ₋-slight.
pub fn slight_core(f: &Filtration, s: &SlightFamilies, xi: usize, a: PointSet) -> Result<PointSet> {
    let ground = f.sigma().ground();
    if a.ground() != ground {
        return Err(Error::GroundMismatch {
            expected: ground.n(),
            got: a.ground().n(),
        });
    }
    let minus = s.minus(xi).ok_or(Error::StageOutOfRange {
        got: xi,
        len: s.minus.len(),
    })?;
    let stage = f.stage(xi)?;
    let mut cover = 0u64;
    for &u in stage.open_masks() {
        if minus.contains_mask(a.bits() & u) {
            cover |= u;
        }
    }
    Ok(PointSet::from_bits(ground, ground.full_mask() & !cover).expect("mask lies in the ground"))
}

fn pair_instance(f: &Filtration, nu: usize) -> Instance {
    let mut i = Instance::for_pair(f.sigma(), f.tau());
    i.stage_count = Some(f.stages().len());
    i.nu = Some(nu);
    i
}

fn set_witness(ground: crate::space::GroundSet, mask: u64) -> Witness {
    Witness::Set {
        points: PointSet::from_bits(ground, mask)
            .expect("mask lies in the ground")
            .to_indices(),
    }
}

/// Checks that the core F = c_ξ(A) of a level-(ν, ξ) set A is τ_ξ-closed
/// and approximates A up to slight sets: A∖F is ξ₊-slight and F∖A is
/// ξ₋-slight.
pub fn verify_closed_approximation(
    f: &Filtration,
    s: &SlightFamilies,
    xi: usize,
    a: PointSet,
) -> CheckReport {
    match level_for(f, s, xi, "closed_approximation", &a, None) {
        Ok(level) => verify_closed_approximation_at(f, s, xi, a, &level),
        Err(report) => *report,
    }
}

pub(crate) fn verify_closed_approximation_at(
    f: &Filtration,
    s: &SlightFamilies,
    xi: usize,
    a: PointSet,
    level: &SetFamily,
) -> CheckReport {
    const CHECK: &str = "closed_approximation";
    let instance = instance_with(f, s.nu(), Some(xi), None, Some(&a), None);
    if xi > s.max_xi() {
        return CheckReport::vacuous(CHECK, instance, "xi exceeds the computed slight range");
    }
    if !level.contains_mask(a.bits()) {
        return CheckReport::vacuous(
            CHECK,
            instance,
            "set_a is not in the lower hierarchy level (nu, xi) of sigma",
        );
    }
    let ground = f.sigma().ground();
    let core = slight_core(f, s, xi, a)
        .expect("validated arguments")
        .bits();
    let stage = &f.stages()[xi];
    if !stage.closed_masks().contains(&core) {
        return CheckReport::fail(CHECK, instance, set_witness(ground, core))
            .with_reason("core is not closed in stage xi");
    }
    let removed = a.bits() & !core;
    if !s.plus[xi].contains_mask(removed) {
        return CheckReport::fail(CHECK, instance, set_witness(ground, removed))
            .with_reason("set_a minus its core is not xi-plus-slight");
    }
    let excess = core & !a.bits();
    if !s.minus[xi].contains_mask(excess) {
        return CheckReport::fail(CHECK, instance, set_witness(ground, excess))
            .with_reason("core minus set_a is not xi-minus-slight");
    }
    CheckReport::pass(CHECK, instance)
}

/// Checks the closure-excess bound: if B ⊆ A has no nonempty ξ₊-slight
/// trace on stage-ξ open sets, then cl_{τ_ξ}(B) ∖ A is ξ₋-slight.
pub fn verify_closure_excess(
    f: &Filtration,
    s: &SlightFamilies,
    xi: usize,
    a: PointSet,
    b: PointSet,
) -> CheckReport {
    match level_for(f, s, xi, "closure_excess", &a, Some(&b)) {
        Ok(level) => verify_closure_excess_at(f, s, xi, a, b, &level),
        Err(report) => *report,
    }
}

pub(crate) fn verify_closure_excess_at(
    f: &Filtration,
    s: &SlightFamilies,
    xi: usize,
    a: PointSet,
    b: PointSet,
    level: &SetFamily,
) -> CheckReport {
    const CHECK: &str = "closure_excess";
    let instance = instance_with(f, s.nu(), Some(xi), None, Some(&a), Some(&b));
    if xi > s.max_xi() {
        return CheckReport::vacuous(CHECK, instance, "xi exceeds the computed slight range");
    }
    if !level.contains_mask(a.bits()) {
        return CheckReport::vacuous(
            CHECK,
            instance,
            "set_a is not in the lower hierarchy level (nu, xi) of sigma",
        );
    }
    if !b.is_subset_of(&a) {
        return CheckReport::vacuous(CHECK, instance, "set_b is not contained in set_a");
    }
    let stage = &f.stages()[xi];
    for &u in stage.open_masks() {
        let trace = b.bits() & u;
        if trace != 0 && s.plus[xi].contains_mask(trace) {
            return CheckReport::vacuous(
                CHECK,
                instance,
                "set_b has a nonempty xi-plus-slight trace on a stage-xi open set",
            );
        }
    }
    let ground = f.sigma().ground();
    let excess = stage.closure_mask(b.bits()) & !a.bits();
    if s.minus[xi].contains_mask(excess) {
        CheckReport::pass(CHECK, instance)
    } else {
        CheckReport::fail(CHECK, instance, set_witness(ground, excess))
            .with_reason("stage-xi closure of set_b leaves set_a by a non-slight set")
    }
}

/// Checks the open-envelope fact: along a filtration, for γ < β ≤ ν, a
/// level-(ν, γ) set A and a τ-open B with B∖A meager, the stage-β interior
/// of the stage-γ closure of A∩B contains B and exceeds A only by a meager
/// set.
pub fn verify_open_envelope(
    f: &Filtration,
    nu: usize,
    gamma: usize,
    beta: usize,
    a: PointSet,
    b: PointSet,
) -> CheckReport {
    const CHECK: &str = "open_envelope";
    if nu == 0 || gamma > nu {
        let mut instance = pair_instance(f, nu);
        instance.gamma = Some(gamma);
        instance.beta = Some(beta);
        instance.set_a = Some(a.to_indices());
        instance.set_b = Some(b.to_indices());
        return CheckReport::vacuous(CHECK, instance, "gamma exceeds nu or nu is zero");
    }
    let level = p_level(
        f.sigma(),
        LevelIndex::new(nu, gamma).expect("validated level index"),
    );
    verify_open_envelope_at(f, nu, gamma, beta, a, b, &level)
}

pub(crate) fn verify_open_envelope_at(
    f: &Filtration,
    nu: usize,
    gamma: usize,
    beta: usize,
    a: PointSet,
    b: PointSet,
    level_gamma: &SetFamily,
) -> CheckReport {
    const CHECK: &str = "open_envelope";
    let mut instance = pair_instance(f, nu);
    instance.gamma = Some(gamma);
    instance.beta = Some(beta);
    instance.set_a = Some(a.to_indices());
    instance.set_b = Some(b.to_indices());
    if gamma >= beta {
        return CheckReport::vacuous(CHECK, instance, "gamma is not below beta");
    }
    if beta > nu {
        return CheckReport::vacuous(CHECK, instance, "beta exceeds nu");
    }
    if beta > f.last_index() {
        return CheckReport::vacuous(CHECK, instance, "beta exceeds the stage range");
    }
    if !is_filtration(f) {
        return CheckReport::vacuous(CHECK, instance, "stage sequence is not a filtration");
    }
    if !level_gamma.contains_mask(a.bits()) {
        return CheckReport::vacuous(
            CHECK,
            instance,
            "set_a is not in the lower hierarchy level (nu, gamma) of sigma",
        );
    }
    if !f.tau().contains_open_mask(b.bits()) {
        return CheckReport::vacuous(CHECK, instance, "set_b is not tau-open");
    }
    let tau = f.tau();
    let b_minus_a = b.bits() & !a.bits();
    if tau.interior_mask(tau.closure_mask(b_minus_a)) != 0 {
        return CheckReport::vacuous(CHECK, instance, "set_b minus set_a is not meager");
    }
    let ground = f.sigma().ground();
    let closure = f.stages()[gamma].closure_mask(a.bits() & b.bits());
    let envelope = f.stages()[beta].interior_mask(closure);
    if b.bits() & !envelope != 0 {
        return CheckReport::fail(CHECK, instance, set_witness(ground, envelope))
            .with_reason("envelope does not contain set_b");
    }
    let excess = envelope & !a.bits();
    if tau.interior_mask(tau.closure_mask(excess)) != 0 {
        return CheckReport::fail(CHECK, instance, set_witness(ground, excess))
            .with_reason("envelope exceeds set_a by a non-meager set");
    }
    CheckReport::pass(CHECK, instance)
}

/// Checks that slight families grow with ξ: for γ < ξ every γ₋- or
/// γ₊-slight set is both ξ₋- and ξ₊-slight.
pub fn verify_slight_monotone(f: &Filtration, s: &SlightFamilies) -> CheckReport {
    const CHECK: &str = "slight_monotone";
    let instance = pair_instance(f, s.nu());
    let ground = f.sigma().ground();
    for xi in 0..=s.max_xi() {
        for gamma in 0..xi {
            for &m in s.minus[gamma].masks().iter().chain(s.plus[gamma].masks()) {
                if !s.minus[xi].contains_mask(m) || !s.plus[xi].contains_mask(m) {
                    return CheckReport::fail(CHECK, instance, set_witness(ground, m)).with_reason(
                        format!("a gamma = {gamma} slight set is missing at xi = {xi}"),
                    );
                }
            }
        }
    }
    CheckReport::pass(CHECK, instance)
}

/// Checks that every slight set is meager with respect to τ.
pub fn verify_slight_meager(f: &Filtration, s: &SlightFamilies) -> CheckReport {
    const CHECK: &str = "slight_meager";
    let instance = pair_instance(f, s.nu());
    let ground = f.sigma().ground();
    let tau = f.tau();
    for xi in 0..=s.max_xi() {
        for &m in s.minus[xi].masks().iter().chain(s.plus[xi].masks()) {
            if tau.interior_mask(tau.closure_mask(m)) != 0 {
                return CheckReport::fail(CHECK, instance, set_witness(ground, m))
                    .with_reason(format!("a xi = {xi} slight set is not meager"));
            }
        }
    }
    CheckReport::pass(CHECK, instance)
}

fn instance_with(
    f: &Filtration,
    nu: usize,
    xi: Option<usize>,
    gamma: Option<usize>,
    a: Option<&PointSet>,
    b: Option<&PointSet>,
) -> Instance {
    let mut i = pair_instance(f, nu);
    i.xi = xi;
    i.gamma = gamma;
    i.set_a = a.map(PointSet::to_indices);
    i.set_b = b.map(PointSet::to_indices);
    i
}

/// The hierarchy level used as hypothesis by the per-set verifiers. A ξ
/// beyond the computed range cannot index a level (max_xi ≤ ν), so that
/// case is reported vacuous up front.
fn level_for(
    f: &Filtration,
    s: &SlightFamilies,
    xi: usize,
    check: &str,
    a: &PointSet,
    b: Option<&PointSet>,
) -> std::result::Result<SetFamily, Box<CheckReport>> {
    if xi > s.max_xi() {
        let instance = instance_with(f, s.nu(), Some(xi), None, Some(a), b);
        return Err(Box::new(CheckReport::vacuous(
            check,
            instance,
            "xi exceeds the computed slight range",
        )));
    }
    Ok(p_level(
        f.sigma(),
        LevelIndex::new(s.nu(), xi).expect("xi <= max_xi <= nu and nu >= 1"),
    ))
}
