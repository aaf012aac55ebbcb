//! Theorem sweeps and hypothesis-dropping searches over every comparable
//! pair of topologies on a small ground set.
//!
//! A sweep enumerates all topologies on n points, walks the pairs σ ⊆ τ,
//! runs the selected checks against the slowest filtration of each pair,
//! and emits one `CheckReport` per check (lemma checks are aggregated per
//! pair). Work is sharded across threads by pair index ranges and reports
//! are merged and sorted afterwards, so output is identical for every
//! parallelism degree.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crate::borel::{min_pi_basis_level_from, min_sigma_pibasis_level_from, HierarchySnapshot};
use crate::enumerate::{enumerate_topologies, MAX_EXHAUSTIVE_N};
use crate::error::{Error, Result};
use crate::filtration::{
    join_prefix, slowest_filtration, stabilization_ordinal, weak_filtrations_between, Filtration,
    StageOrdinal,
};
use crate::report::{CheckReport, Instance, SweepSummary, Verdict, Witness, XI_CONVENTION};
use crate::slight::{
    compute_slight, verify_closed_approximation_at, verify_closure_excess_at,
    verify_open_envelope_at, verify_slight_meager, verify_slight_monotone,
};
use crate::space::{GroundSet, PointSet};
use crate::topology::Topology;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremSelection {
    Stab2,
    Stab3,
    Lemmas,
    All,
}

impl TheoremSelection {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremSelection::Stab2 => "stab2",
            TheoremSelection::Stab3 => "stab3",
            TheoremSelection::Lemmas => "lemmas",
            TheoremSelection::All => "all",
        }
    }

    fn wants_stab2(&self) -> bool {
        matches!(self, TheoremSelection::Stab2 | TheoremSelection::All)
    }

    fn wants_stab3(&self) -> bool {
        matches!(self, TheoremSelection::Stab3 | TheoremSelection::All)
    }

    fn wants_lemmas(&self) -> bool {
        matches!(self, TheoremSelection::Lemmas | TheoremSelection::All)
    }
}

impl FromStr for TheoremSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stab2" => Ok(TheoremSelection::Stab2),
            "stab3" => Ok(TheoremSelection::Stab3),
            "lemmas" => Ok(TheoremSelection::Lemmas),
            "all" => Ok(TheoremSelection::All),
            other => Err(Error::InvalidInput(format!(
                "unknown theorem selection '{other}' (expected stab2|stab3|lemmas|all)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DroppedHypothesis {
    Semiregularity,
    PiSemiregularity,
    BasisLevel,
}

impl DroppedHypothesis {
    pub fn as_str(&self) -> &'static str {
        match self {
            DroppedHypothesis::Semiregularity => "semiregularity",
            DroppedHypothesis::PiSemiregularity => "pi-semiregularity",
            DroppedHypothesis::BasisLevel => "basis-level",
        }
    }
}

impl FromStr for DroppedHypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semiregularity" => Ok(DroppedHypothesis::Semiregularity),
            "pi-semiregularity" => Ok(DroppedHypothesis::PiSemiregularity),
            "basis-level" => Ok(DroppedHypothesis::BasisLevel),
            other => Err(Error::InvalidInput(format!(
                "unknown hypothesis '{other}' (expected semiregularity|pi-semiregularity|basis-level)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n: usize,
    pub selection: TheoremSelection,
    /// Union-arity bound for hierarchy levels and slight families.
    pub nu: usize,
    /// Worker threads; 0 is treated as 1.
    pub jobs: usize,
    /// Unlocks the long-running regimes (n = 5 sweeps, lemma sweeps at n ≥ 4).
    pub allow_slow: bool,
    /// Attach per-pair wall-clock micros to reports. Off by default so that
    /// report streams are byte-identical across runs.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(n: usize) -> Self {
        SweepConfig {
            n,
            selection: TheoremSelection::All,
            nu: 2,
            jobs: 1,
            allow_slow: false,
            timing: false,
        }
    }
}

pub struct SweepOutput {
    pub reports: Vec<CheckReport>,
    pub summary: SweepSummary,
}

/// Stage sequences per pair considered by the lemma sweep.
const LEMMA_MAX_STAGES: usize = 3;

const LEMMA_KINDS: [&str; 5] = [
    "closed_approximation",
    "closure_excess",
    "open_envelope",
    "slight_monotone",
    "slight_meager",
];

/// Stabilization check against a neighborhood basis drawn from the Π
/// classes: with τ semiregular and α the least basis level, the slowest
/// filtration reaches τ at stage α.
pub fn check_theorem_stab2(sigma: &Topology, tau: &Topology) -> Result<CheckReport> {
    let slowest = slowest_filtration(sigma, tau)?;
    let snap = HierarchySnapshot::compute(sigma, 0);
    Ok(stab2_outcome(sigma, tau, &snap, &slowest, None).0)
}

/// Density check against a neighborhood π-basis drawn from the Σ classes:
/// with τ π-semiregular and α the least π-basis level, every nonempty
/// τ-open set contains a nonempty open set of the stage join below α.
pub fn check_theorem_stab3(sigma: &Topology, tau: &Topology) -> Result<CheckReport> {
    let slowest = slowest_filtration(sigma, tau)?;
    let snap = HierarchySnapshot::compute(sigma, 0);
    Ok(stab3_outcome(sigma, tau, &snap, &slowest, None).0)
}

/// Runs the selected checks over all comparable pairs on `config.n` points.
pub fn sweep(config: &SweepConfig) -> Result<SweepOutput> {
    validate(config, config.selection.wants_lemmas())?;
    let topologies: Vec<Topology> = enumerate_topologies(config.n)?.collect();
    let nu_max = if config.selection.wants_lemmas() {
        config.nu
    } else {
        0
    };
    let snapshots: Vec<HierarchySnapshot> = topologies
        .iter()
        .map(|t| HierarchySnapshot::compute(t, nu_max))
        .collect();
    let pairs = comparable_pairs(&topologies);
    let (reports, stats) = run_sharded(config, &pairs, |si, ti, stats| {
        check_pair(config, si, ti, &topologies, &snapshots, stats)
    });
    let summary = summarize(
        "check",
        config.selection.as_str().to_string(),
        config,
        topologies.len(),
        pairs.len(),
        &reports,
        stats,
    );
    Ok(SweepOutput { reports, summary })
}

/// Drops one hypothesis of the stabilization theorems and reports every
/// pair where the remaining hypotheses hold but the conclusion fails. An
/// empty report list means no finite counterexample at this n.
pub fn search_counterexamples(
    config: &SweepConfig,
    dropped: DroppedHypothesis,
) -> Result<SweepOutput> {
    validate(config, false)?;
    let topologies: Vec<Topology> = enumerate_topologies(config.n)?.collect();
    let snapshots: Vec<HierarchySnapshot> = topologies
        .iter()
        .map(|t| HierarchySnapshot::compute(t, 0))
        .collect();
    let pairs = comparable_pairs(&topologies);
    let (reports, stats) = run_sharded(config, &pairs, |si, ti, stats| {
        search_pair(dropped, si, ti, &topologies, &snapshots, stats)
    });
    let summary = summarize(
        "search",
        format!("drop:{}", dropped.as_str()),
        config,
        topologies.len(),
        pairs.len(),
        &reports,
        stats,
    );
    Ok(SweepOutput { reports, summary })
}

fn validate(config: &SweepConfig, lemmas: bool) -> Result<()> {
    if config.nu == 0 {
        return Err(Error::ZeroNu);
    }
    if config.n > MAX_EXHAUSTIVE_N {
        return Err(Error::SweepRange {
            n: config.n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    if config.n == MAX_EXHAUSTIVE_N && !config.allow_slow {
        return Err(Error::InvalidInput(
            "sweeps at n = 5 cover 6942 topologies and run long; enable allow_slow".into(),
        ));
    }
    if lemmas && config.n >= 4 && !config.allow_slow {
        return Err(Error::InvalidInput(
            "lemma sweeps at n >= 4 run long; enable allow_slow".into(),
        ));
    }
    Ok(())
}

fn comparable_pairs(topologies: &[Topology]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for si in 0..topologies.len() {
        for ti in 0..topologies.len() {
            if topologies[si].is_subtopology_of(&topologies[ti]) {
                pairs.push((si, ti));
            }
        }
    }
    pairs
}

#[derive(Default)]
struct WorkerStats {
    max_stabilization: Option<usize>,
    never: usize,
    alpha_hist: BTreeMap<String, BTreeMap<String, usize>>,
}

#[derive(Clone, Copy)]
enum AlphaBucket {
    Level(usize),
    NoneFound,
    Unevaluated,
}

impl WorkerStats {
    fn observe_stabilization(&mut self, stab: Option<usize>) {
        match stab {
            Some(v) => {
                self.max_stabilization = Some(self.max_stabilization.map_or(v, |m| m.max(v)));
            }
            None => self.never += 1,
        }
    }

    fn observe_alpha(&mut self, check: &str, bucket: AlphaBucket) {
        let key = match bucket {
            AlphaBucket::Level(a) => a.to_string(),
            AlphaBucket::NoneFound => "none".to_string(),
            AlphaBucket::Unevaluated => "unevaluated".to_string(),
        };
        *self
            .alpha_hist
            .entry(check.to_string())
            .or_default()
            .entry(key)
            .or_default() += 1;
    }

    fn absorb(&mut self, other: WorkerStats) {
        match (self.max_stabilization, other.max_stabilization) {
            (Some(a), Some(b)) => self.max_stabilization = Some(a.max(b)),
            (None, Some(b)) => self.max_stabilization = Some(b),
            _ => {}
        }
        self.never += other.never;
        for (check, hist) in other.alpha_hist {
            let own = self.alpha_hist.entry(check).or_default();
            for (key, count) in hist {
                *own.entry(key).or_default() += count;
            }
        }
    }
}

/// Shards the pair list across `config.jobs` threads, merges the per-shard
/// results, and sorts reports into their canonical order.
fn run_sharded<F>(
    config: &SweepConfig,
    pairs: &[(usize, usize)],
    per_pair: F,
) -> (Vec<CheckReport>, WorkerStats)
where
    F: Fn(usize, usize, &mut WorkerStats) -> Vec<CheckReport> + Sync,
{
    let jobs = config.jobs.max(1);
    let chunk = pairs.len().div_ceil(jobs).max(1);
    let total = pairs.len();
    let announce = config.n >= MAX_EXHAUSTIVE_N;
    let progress = AtomicUsize::new(0);
    let shard_results: Vec<(Vec<CheckReport>, WorkerStats)> = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|shard| {
                let per_pair = &per_pair;
                let progress = &progress;
                scope.spawn(move || {
                    let mut reports = Vec::new();
                    let mut stats = WorkerStats::default();
                    for &(si, ti) in shard {
                        reports.extend(per_pair(si, ti, &mut stats));
                        let done = progress.fetch_add(1, Ordering::Relaxed) + 1;
                        if announce && done.is_multiple_of(500) {
                            eprintln!("processed {done}/{total} pairs");
                        }
                    }
                    (reports, stats)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut reports = Vec::new();
    let mut stats = WorkerStats::default();
    for (shard_reports, shard_stats) in shard_results {
        reports.extend(shard_reports);
        stats.absorb(shard_stats);
    }
    reports.sort_by_key(CheckReport::sort_key);
    (reports, stats)
}

fn check_pair(
    config: &SweepConfig,
    si: usize,
    ti: usize,
    topologies: &[Topology],
    snapshots: &[HierarchySnapshot],
    stats: &mut WorkerStats,
) -> Vec<CheckReport> {
    let sigma = &topologies[si];
    let tau = &topologies[ti];
    let started = config.timing.then(Instant::now);
    let slowest = slowest_filtration(sigma, tau).expect("pair is comparable");
    stats.observe_stabilization(stabilization_ordinal(&slowest));
    let snap = &snapshots[si];
    let mut out = Vec::new();
    if config.selection.wants_stab2() {
        let (report, bucket) = stab2_outcome(sigma, tau, snap, &slowest, Some((si, ti)));
        stats.observe_alpha("stab2", bucket);
        out.push(report);
    }
    if config.selection.wants_stab3() {
        let (report, bucket) = stab3_outcome(sigma, tau, snap, &slowest, Some((si, ti)));
        stats.observe_alpha("stab3", bucket);
        out.push(report);
    }
    if config.selection.wants_lemmas() {
        out.extend(lemma_pair_reports(
            config, si, ti, sigma, tau, topologies, snap,
        ));
    }
    if let Some(t0) = started {
        let micros = t0.elapsed().as_micros() as u64;
        for report in &mut out {
            report.timing_micros = Some(micros);
        }
    }
    out
}

fn indexed_instance(sigma: &Topology, tau: &Topology, indices: Option<(usize, usize)>) -> Instance {
    let mut instance = Instance::for_pair(sigma, tau);
    if let Some((si, ti)) = indices {
        instance.sigma_index = Some(si);
        instance.tau_index = Some(ti);
    }
    instance
}

fn stab2_outcome(
    sigma: &Topology,
    tau: &Topology,
    snap: &HierarchySnapshot,
    slowest: &Filtration,
    indices: Option<(usize, usize)>,
) -> (CheckReport, AlphaBucket) {
    const CHECK: &str = "stab2";
    let instance = indexed_instance(sigma, tau, indices);
    let stab = stabilization_ordinal(slowest);
    if !tau.is_semiregular() {
        let report = CheckReport::vacuous(CHECK, instance, "tau is not semiregular")
            .with_stabilization(stab);
        return (report, AlphaBucket::Unevaluated);
    }
    match min_pi_basis_level_from(snap, tau).expect("pair is comparable") {
        None => {
            let report = CheckReport::vacuous(
                CHECK,
                instance,
                "no neighborhood basis at any hierarchy level",
            )
            .with_alpha(None)
            .with_stabilization(stab);
            (report, AlphaBucket::NoneFound)
        }
        Some(alpha) => {
            let stage = slowest.stage_clamped(alpha);
            let report = if stage == tau {
                CheckReport::pass(CHECK, instance)
            } else {
                CheckReport::fail(
                    CHECK,
                    instance,
                    Witness::Stage {
                        xi: alpha,
                        topology: stage.clone(),
                    },
                )
                .with_reason("slowest filtration stage alpha differs from tau")
            };
            (
                report.with_alpha(Some(alpha)).with_stabilization(stab),
                AlphaBucket::Level(alpha),
            )
        }
    }
}

fn stab3_outcome(
    sigma: &Topology,
    tau: &Topology,
    snap: &HierarchySnapshot,
    slowest: &Filtration,
    indices: Option<(usize, usize)>,
) -> (CheckReport, AlphaBucket) {
    const CHECK: &str = "stab3";
    let instance = indexed_instance(sigma, tau, indices);
    let stab = stabilization_ordinal(slowest);
    if !tau.is_pi_semiregular() {
        let report = CheckReport::vacuous(CHECK, instance, "tau is not pi-semiregular")
            .with_stabilization(stab);
        return (report, AlphaBucket::Unevaluated);
    }
    match min_sigma_pibasis_level_from(snap, tau).expect("pair is comparable") {
        None => {
            let report = CheckReport::vacuous(
                CHECK,
                instance,
                "no neighborhood pi-basis at any hierarchy level",
            )
            .with_alpha(None)
            .with_stabilization(stab);
            (report, AlphaBucket::NoneFound)
        }
        Some(alpha) => {
            let report = match stab3_conclusion_violation(slowest, alpha) {
                None => CheckReport::pass(CHECK, instance),
                Some(open) => CheckReport::fail(
                    CHECK,
                    instance,
                    set_witness(sigma.ground(), open),
                )
                .with_reason(
                    "a nonempty tau-open set contains no nonempty open set of the stage join below alpha",
                ),
            };
            (
                report.with_alpha(Some(alpha)).with_stabilization(stab),
                AlphaBucket::Level(alpha),
            )
        }
    }
}

/// First nonempty τ-open set (if any) that contains no nonempty open set of
/// ⋁_{ξ<α} stages, checked both via the prefix join and via the clamped
/// stage α−1 (equal for the increasing slowest sequence).
fn stab3_conclusion_violation(slowest: &Filtration, alpha: usize) -> Option<u64> {
    let len = slowest.stages().len();
    let join = join_prefix(slowest, StageOrdinal::Finite(alpha.min(len))).expect("prefix in range");
    let refined = slowest.stage_clamped(alpha - 1);
    let tau = slowest.tau();
    tau.open_masks()
        .iter()
        .copied()
        .find(|&u| u != 0 && (join.interior_mask(u) == 0 || refined.interior_mask(u) == 0))
}

fn set_witness(ground: GroundSet, mask: u64) -> Witness {
    Witness::Set {
        points: PointSet::from_bits(ground, mask)
            .expect("mask lies in the ground")
            .to_indices(),
    }
}

#[derive(Default)]
struct Agg {
    instances: u64,
    pass: u64,
    fail: u64,
    vacuous: u64,
    first_fail: Option<(String, Witness)>,
}

impl Agg {
    fn fold(&mut self, report: CheckReport) {
        self.instances += 1;
        match report.verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Fail => {
                self.fail += 1;
                if self.first_fail.is_none() {
                    let detail = serde_json::to_string(&report.instance).unwrap_or_default();
                    let reason = match &report.reason {
                        Some(r) => format!("first failing instance: {detail}; {r}"),
                        None => format!("first failing instance: {detail}"),
                    };
                    let witness = report.witness.expect("fail reports carry a witness");
                    self.first_fail = Some((reason, witness));
                }
            }
        }
    }
}

/// Runs every lemma verifier over all weak filtrations of length ≤ 3
/// between the pair, aggregated into one report per verifier.
fn lemma_pair_reports(
    config: &SweepConfig,
    si: usize,
    ti: usize,
    sigma: &Topology,
    tau: &Topology,
    pool: &[Topology],
    snap: &HierarchySnapshot,
) -> Vec<CheckReport> {
    let nu = config.nu;
    let ground = sigma.ground();
    let point_set = |mask: u64| PointSet::from_bits(ground, mask).expect("mask lies in the ground");
    let weaks = weak_filtrations_between(sigma, tau, pool, LEMMA_MAX_STAGES);
    let mut aggs: BTreeMap<&'static str, Agg> =
        LEMMA_KINDS.iter().map(|&k| (k, Agg::default())).collect();
    for f in &weaks {
        let s = compute_slight(f, nu).expect("weak filtration and nu >= 1");
        aggs.get_mut("slight_monotone")
            .expect("known kind")
            .fold(verify_slight_monotone(f, &s));
        aggs.get_mut("slight_meager")
            .expect("known kind")
            .fold(verify_slight_meager(f, &s));
        for xi in 0..=s.max_xi() {
            let level = snap.p_level(nu, xi).expect("xi <= nu <= snapshot depth");
            for &a_mask in level.masks() {
                let a = point_set(a_mask);
                aggs.get_mut("closed_approximation")
                    .expect("known kind")
                    .fold(verify_closed_approximation_at(f, &s, xi, a, level));
                let excess = aggs.get_mut("closure_excess").expect("known kind");
                let mut b_mask = a_mask;
                loop {
                    excess.fold(verify_closure_excess_at(
                        f,
                        &s,
                        xi,
                        a,
                        point_set(b_mask),
                        level,
                    ));
                    if b_mask == 0 {
                        break;
                    }
                    b_mask = (b_mask - 1) & a_mask;
                }
            }
        }
        let envelope_beta_max = nu.min(f.last_index());
        for beta in 1..=envelope_beta_max {
            for gamma in 0..beta {
                let level = snap
                    .p_level(nu, gamma)
                    .expect("gamma <= nu <= snapshot depth");
                for &a_mask in level.masks() {
                    let a = point_set(a_mask);
                    for &b_mask in tau.open_masks() {
                        aggs.get_mut("open_envelope").expect("known kind").fold(
                            verify_open_envelope_at(
                                f,
                                nu,
                                gamma,
                                beta,
                                a,
                                point_set(b_mask),
                                level,
                            ),
                        );
                    }
                }
            }
        }
    }
    LEMMA_KINDS
        .iter()
        .map(|&kind| {
            let agg = &aggs[kind];
            let mut instance = indexed_instance(sigma, tau, Some((si, ti)));
            instance.nu = Some(nu);
            let mut counts: BTreeMap<String, u64> = BTreeMap::new();
            counts.insert("filtrations".into(), weaks.len() as u64);
            counts.insert("instances".into(), agg.instances);
            counts.insert("pass".into(), agg.pass);
            counts.insert("fail".into(), agg.fail);
            counts.insert("vacuous".into(), agg.vacuous);
            let check = format!("lemma:{kind}");
            match &agg.first_fail {
                None => CheckReport::pass(check, instance).with_counts(counts),
                Some((reason, witness)) => CheckReport::fail(check, instance, witness.clone())
                    .with_reason(reason.clone())
                    .with_counts(counts),
            }
        })
        .collect()
}

fn search_pair(
    dropped: DroppedHypothesis,
    si: usize,
    ti: usize,
    topologies: &[Topology],
    snapshots: &[HierarchySnapshot],
    stats: &mut WorkerStats,
) -> Vec<CheckReport> {
    let sigma = &topologies[si];
    let tau = &topologies[ti];
    let slowest = slowest_filtration(sigma, tau).expect("pair is comparable");
    let stab = stabilization_ordinal(&slowest);
    stats.observe_stabilization(stab);
    let instance = indexed_instance(sigma, tau, Some((si, ti)));
    match dropped {
        DroppedHypothesis::Semiregularity => {
            let check = "search:semiregularity";
            let Some(alpha) = min_pi_basis_level_from(&snapshots[si], tau).expect("comparable")
            else {
                return Vec::new();
            };
            stats.observe_alpha(check, AlphaBucket::Level(alpha));
            let stage = slowest.stage_clamped(alpha);
            if stage == tau {
                return Vec::new();
            }
            vec![CheckReport::fail(
                check,
                instance,
                Witness::Stage {
                    xi: alpha,
                    topology: stage.clone(),
                },
            )
            .with_reason("with semiregularity dropped, stage alpha differs from tau")
            .with_alpha(Some(alpha))
            .with_stabilization(stab)]
        }
        DroppedHypothesis::PiSemiregularity => {
            let check = "search:pi-semiregularity";
            let Some(alpha) =
                min_sigma_pibasis_level_from(&snapshots[si], tau).expect("comparable")
            else {
                return Vec::new();
            };
            stats.observe_alpha(check, AlphaBucket::Level(alpha));
            let Some(open) = stab3_conclusion_violation(&slowest, alpha) else {
                return Vec::new();
            };
            vec![CheckReport::fail(check, instance, set_witness(sigma.ground(), open))
                .with_reason(
                    "with pi-semiregularity dropped, a nonempty tau-open set contains no nonempty stage-join open set",
                )
                .with_alpha(Some(alpha))
                .with_stabilization(stab)]
        }
        DroppedHypothesis::BasisLevel => {
            let check = "search:basis-level";
            if !tau.is_semiregular() || stab.is_some() {
                return Vec::new();
            }
            vec![CheckReport::fail(
                check,
                instance,
                Witness::Stage {
                    xi: slowest.last_index(),
                    topology: slowest.limit_stage().clone(),
                },
            )
            .with_reason(
                "with the basis-level hypothesis dropped, the slowest filtration never reaches tau",
            )
            .with_stabilization(stab)]
        }
    }
}

fn summarize(
    command: &str,
    selection: String,
    config: &SweepConfig,
    topologies: usize,
    pairs: usize,
    reports: &[CheckReport],
    stats: WorkerStats,
) -> SweepSummary {
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut vacuous = 0usize;
    for report in reports {
        match report.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::Vacuous => vacuous += 1,
        }
    }
    SweepSummary {
        command: command.to_string(),
        n: config.n,
        selection,
        nu: config.nu,
        topologies,
        pairs,
        reports: reports.len(),
        pass,
        fail,
        vacuous,
        max_stabilization: stats.max_stabilization,
        never_stabilizing_pairs: stats.never,
        alpha_histogram: stats.alpha_hist,
        xi_convention: XI_CONVENTION.to_string(),
    }
}
