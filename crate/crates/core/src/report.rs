//! Check reports: the JSON-lines currency of the harness.
//!
//! Every verifier and sweep emits `CheckReport`s. A report's verdict is
//! `pass`, `fail` (with a witness exhibiting the failure), or `vacuous`
//! (with the failed hypothesis named). Sweeps append a `SweepSummary`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::topology::Topology;

/// Stated on every summary and hierarchy listing so consumers know how to
/// read level indices.
pub const XI_CONVENTION: &str = "xi is 0-based; the classical class number is xi+1";

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

/// Evidence attached to a fail verdict.
#[derive(Serialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A point set exhibiting the failure.
    Set { points: Vec<usize> },
    /// A filtration stage differing from the expected topology.
    Stage { xi: usize, topology: Topology },
    /// A topology exhibiting the failure.
    Topology { topology: Topology },
    /// Failure context that is not a single set or topology.
    Note { text: String },
}

/// What a report is about: the pair, the filtration shape, and the
/// per-instance parameters. Unused fields stay unserialized.
#[derive(Serialize, Clone, Debug, Default, PartialEq)]
pub struct Instance {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Topology>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<Topology>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_a: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_b: Option<Vec<usize>>,
}

impl Instance {
    pub fn bare(n: usize) -> Self {
        Instance {
            n,
            ..Default::default()
        }
    }

    pub fn for_pair(sigma: &Topology, tau: &Topology) -> Self {
        Instance {
            n: sigma.ground().n(),
            sigma: Some(sigma.clone()),
            tau: Some(tau.clone()),
            ..Default::default()
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub instance: Instance,
    pub verdict: Verdict,
    /// Basis level α where one was sought: `Some(None)` serializes as null
    /// (sought but absent or not evaluated), `None` omits the field.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Option<usize>>,
    /// Stabilization ordinal of the slowest filtration; inner `None` means
    /// the filtration never reaches τ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilization: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_micros: Option<u64>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>, instance: Instance) -> Self {
        CheckReport {
            check: check.into(),
            instance,
            verdict: Verdict::Pass,
            alpha: None,
            stabilization: None,
            witness: None,
            reason: None,
            counts: BTreeMap::new(),
            timing_micros: None,
        }
    }

    /// Fail verdicts must exhibit their failure, so the witness is part of
    /// the constructor.
    pub fn fail(check: impl Into<String>, instance: Instance, witness: Witness) -> Self {
        let mut r = Self::pass(check, instance);
        r.verdict = Verdict::Fail;
        r.witness = Some(witness);
        r
    }

    /// Vacuous verdicts must name the hypothesis that failed.
    pub fn vacuous(
        check: impl Into<String>,
        instance: Instance,
        reason: impl Into<String>,
    ) -> Self {
        let mut r = Self::pass(check, instance);
        r.verdict = Verdict::Vacuous;
        r.reason = Some(reason.into());
        r
    }

    pub fn with_alpha(mut self, alpha: Option<usize>) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_stabilization(mut self, stabilization: Option<usize>) -> Self {
        self.stabilization = Some(stabilization);
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn with_counts(mut self, counts: BTreeMap<String, u64>) -> Self {
        self.counts = counts;
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Stable total order for deterministic report streams: pair indices,
    /// then check name, then the instance parameters.
    pub fn sort_key(&self) -> impl Ord {
        (
            self.instance.sigma_index,
            self.instance.tau_index,
            self.check.clone(),
            self.instance.stage_count,
            self.instance.nu,
            self.instance.xi,
            self.instance.gamma,
            self.instance.beta,
            self.instance.set_a.clone(),
            self.instance.set_b.clone(),
        )
    }
}

/// End-of-stream aggregate for `check` and `search` runs.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub command: String,
    pub n: usize,
    pub selection: String,
    pub nu: usize,
    pub topologies: usize,
    pub pairs: usize,
    pub reports: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    /// Largest stabilization ordinal over all slowest filtrations seen.
    pub max_stabilization: Option<usize>,
    /// Pairs whose slowest filtration never reaches τ.
    pub never_stabilizing_pairs: usize,
    /// Per-check histogram of basis levels α; "none" counts pairs where no
    /// level exists, "unevaluated" pairs where the check skipped the search.
    pub alpha_histogram: BTreeMap<String, BTreeMap<String, usize>>,
    pub xi_convention: String,
}
