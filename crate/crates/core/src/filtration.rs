//! Filtrations between a pair of topologies σ ⊆ τ.
//!
//! A filtration is an increasing sequence of topologies starting at σ and
//! contained in τ whose stages interact with τ through interiors: for every
//! stage α and every set F closed in an earlier stage, the stage-α interior
//! of F already equals the τ-interior. The weak variant only asks that the
//! stage-α interior be τ-dense in the τ-interior.
//!
//! The slowest filtration grows each stage from the generators
//! U ∩ int_τ(F) with U open and F closed in earlier stages. It is the
//! stagewise-smallest filtration and the sequence every sweep walks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::topology::{join_topologies, SetFamily, Topology};

/// Stage index extended with a top element, for prefix joins over the whole
/// sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StageOrdinal {
    Finite(usize),
    Omega,
}

impl StageOrdinal {
    /// Successor that never leaves the index range: `Omega` is absorbing.
    pub fn saturating_successor(self) -> Self {
        match self {
            StageOrdinal::Finite(k) => StageOrdinal::Finite(k + 1),
            StageOrdinal::Omega => StageOrdinal::Omega,
        }
    }
}

/// An increasing stage sequence σ = τ_0 ⊆ τ_1 ⊆ … ⊆ τ_m ⊆ τ.
///
/// Construction validates only the shape (monotone, bracketed by σ and τ);
/// whether the sequence satisfies the interior condition is a property of
/// the values, tested by [`is_filtration`] and [`is_weak_filtration`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    sigma: Topology,
    tau: Topology,
    stages: Vec<Topology>,
}

impl Filtration {
    pub fn new(sigma: Topology, tau: Topology, stages: Vec<Topology>) -> Result<Self> {
        if sigma.ground() != tau.ground() {
            return Err(Error::GroundMismatch {
                expected: sigma.ground().n(),
                got: tau.ground().n(),
            });
        }
        if !sigma.is_subtopology_of(&tau) {
            return Err(Error::NotSubtopology);
        }
        if stages.is_empty() {
            return Err(Error::FiltrationInvariant {
                index: 0,
                reason: "stage sequence is empty".into(),
            });
        }
        if stages[0] != sigma {
            return Err(Error::FiltrationInvariant {
                index: 0,
                reason: "first stage differs from sigma".into(),
            });
        }
        for (i, stage) in stages.iter().enumerate() {
            if stage.ground() != sigma.ground() {
                return Err(Error::GroundMismatch {
                    expected: sigma.ground().n(),
                    got: stage.ground().n(),
                });
            }
            if !stage.is_subtopology_of(&tau) {
                return Err(Error::FiltrationInvariant {
                    index: i,
                    reason: "stage is not contained in tau".into(),
                });
            }
            if i > 0 && !stages[i - 1].is_subtopology_of(stage) {
                return Err(Error::FiltrationInvariant {
                    index: i,
                    reason: "stage does not contain its predecessor".into(),
                });
            }
        }
        Ok(Filtration { sigma, tau, stages })
    }

    /// The two-stage sequence (σ, τ, τ, …) with `stage_count` stages.
    pub fn trivial(sigma: Topology, tau: Topology, stage_count: usize) -> Result<Self> {
        if stage_count == 0 {
            return Err(Error::FiltrationInvariant {
                index: 0,
                reason: "stage sequence is empty".into(),
            });
        }
        let mut stages = vec![sigma.clone()];
        while stages.len() < stage_count {
            stages.push(tau.clone());
        }
        Filtration::new(sigma, tau, stages)
    }

    pub fn sigma(&self) -> &Topology {
        &self.sigma
    }

    pub fn tau(&self) -> &Topology {
        &self.tau
    }

    pub fn stages(&self) -> &[Topology] {
        &self.stages
    }

    /// Index of the last stage (the sequence is τ_0, …, τ_m).
    pub fn last_index(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn stage(&self, xi: usize) -> Result<&Topology> {
        self.stages.get(xi).ok_or(Error::StageOutOfRange {
            got: xi,
            len: self.stages.len(),
        })
    }

    /// Stage ξ under the padding convention: indices beyond the end read τ.
    pub fn padded_stage(&self, xi: usize) -> &Topology {
        self.stages.get(xi).unwrap_or(&self.tau)
    }

    /// Stage ξ clamped to the final stage. For sequences that end in a
    /// fixpoint (the slowest filtration does) later stages would repeat the
    /// last one, so clamping reads the value the sequence converges to.
    pub fn stage_clamped(&self, xi: usize) -> &Topology {
        self.stages.get(xi).unwrap_or(self.limit_stage())
    }

    pub fn limit_stage(&self) -> &Topology {
        self.stages.last().expect("stage sequence is nonempty")
    }

    /// Extends the sequence with copies of τ up to `len` stages.
    pub fn pad_to(&self, len: usize) -> Filtration {
        let mut stages = self.stages.clone();
        while stages.len() < len {
            stages.push(self.tau.clone());
        }
        Filtration {
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            stages,
        }
    }
}

/// Least stage index whose topology equals τ, if the sequence reaches it.
pub fn stabilization_ordinal(f: &Filtration) -> Option<usize> {
    f.stages.iter().position(|s| s == f.tau())
}

/// Join of the first stages: `Finite(a)` joins stages 0..a (so a ≥ 1 and
/// a ≤ stage count), `Omega` joins the whole sequence.
pub fn join_prefix(f: &Filtration, upto: StageOrdinal) -> Result<Topology> {
    let len = f.stages().len();
    let a = match upto {
        StageOrdinal::Omega => len,
        StageOrdinal::Finite(a) => {
            if a == 0 || a > len {
                return Err(Error::StageOutOfRange { got: a, len });
            }
            a
        }
    };
    join_topologies(&f.stages()[..a])
}

/// Interior condition: for every α ≤ m, every ξ < α, and every τ_ξ-closed F,
/// int_{τ_α}(F) = int_τ(F).
pub fn is_filtration(f: &Filtration) -> bool {
    stage_condition(f, |stage, tau, closed| {
        stage.interior_mask(closed) == tau.interior_mask(closed)
    })
}

/// Weak interior condition: int_{τ_α}(F) is τ-dense in int_τ(F), i.e.
/// cl_τ(int_{τ_α}(F)) ⊇ int_τ(F). Every filtration is weak.
pub fn is_weak_filtration(f: &Filtration) -> bool {
    stage_condition(f, |stage, tau, closed| {
        let inner = stage.interior_mask(closed);
        let target = tau.interior_mask(closed);
        target & !tau.closure_mask(inner) == 0
    })
}

fn stage_condition(f: &Filtration, ok: impl Fn(&Topology, &Topology, u64) -> bool) -> bool {
    for alpha in 1..f.stages().len() {
        for xi in 0..alpha {
            for &closed in f.stages()[xi].closed_masks().iter() {
                if !ok(&f.stages()[alpha], f.tau(), closed) {
                    return false;
                }
            }
        }
    }
    true
}

/// Which earlier stages feed the generators of the next slowest stage.
/// Generating from all earlier stages and from the last stage alone give
/// the same sequence because stages increase; both are kept so tests can
/// assert the equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum GeneratorRange {
    AllEarlier,
    #[cfg_attr(not(test), allow(dead_code))]
    LastOnly,
}

/// The slowest filtration from σ to τ: stage ξ+1 is generated by the sets
/// U ∩ int_τ(F) with U open and F closed in stages ≤ ξ. The sequence stops
/// when a stage equals τ, or at the first repeated stage when it converges
/// below τ (the repeat is kept so the fixpoint is visible).
pub fn slowest_filtration(sigma: &Topology, tau: &Topology) -> Result<Filtration> {
    slowest_filtration_with(sigma, tau, GeneratorRange::AllEarlier)
}

pub(crate) fn slowest_filtration_with(
    sigma: &Topology,
    tau: &Topology,
    range: GeneratorRange,
) -> Result<Filtration> {
    if sigma.ground() != tau.ground() {
        return Err(Error::GroundMismatch {
            expected: sigma.ground().n(),
            got: tau.ground().n(),
        });
    }
    if !sigma.is_subtopology_of(tau) {
        return Err(Error::NotSubtopology);
    }
    let mut stages = vec![sigma.clone()];
    if stages[0] != *tau {
        loop {
            let from = match range {
                GeneratorRange::AllEarlier => &stages[..],
                GeneratorRange::LastOnly => &stages[stages.len() - 1..],
            };
            let next = next_slowest_stage(from, tau);
            let reached_tau = next == *tau;
            let repeated = next == *stages.last().expect("nonempty");
            stages.push(next);
            if reached_tau || repeated {
                break;
            }
        }
    }
    Ok(Filtration {
        sigma: sigma.clone(),
        tau: tau.clone(),
        stages,
    })
}

/// All stage sequences of length ≤ `max_len` from σ to τ whose stages are
/// drawn from `pool` and satisfy the interior condition. Order is
/// deterministic: shorter sequences first extension point by extension
/// point, stages in pool order.
pub fn filtrations_between(
    sigma: &Topology,
    tau: &Topology,
    pool: &[Topology],
    max_len: usize,
) -> Vec<Filtration> {
    chains_between(sigma, tau, pool, max_len)
        .into_iter()
        .filter(is_filtration)
        .collect()
}

/// Like [`filtrations_between`] but for the weak interior condition.
pub fn weak_filtrations_between(
    sigma: &Topology,
    tau: &Topology,
    pool: &[Topology],
    max_len: usize,
) -> Vec<Filtration> {
    chains_between(sigma, tau, pool, max_len)
        .into_iter()
        .filter(is_weak_filtration)
        .collect()
}

/// All monotone stage sequences of length 1..=max_len bracketed by σ and τ,
/// with repeated stages allowed.
fn chains_between(
    sigma: &Topology,
    tau: &Topology,
    pool: &[Topology],
    max_len: usize,
) -> Vec<Filtration> {
    let mut out = Vec::new();
    if max_len == 0 || !sigma.is_subtopology_of(tau) || sigma.ground() != tau.ground() {
        return out;
    }
    let mut current = vec![sigma.clone()];
    extend_chain(sigma, tau, pool, max_len, &mut current, &mut out);
    out
}

fn extend_chain(
    sigma: &Topology,
    tau: &Topology,
    pool: &[Topology],
    max_len: usize,
    current: &mut Vec<Topology>,
    out: &mut Vec<Filtration>,
) {
    out.push(Filtration {
        sigma: sigma.clone(),
        tau: tau.clone(),
        stages: current.clone(),
    });
    if current.len() == max_len {
        return;
    }
    let last = current.last().expect("chain is nonempty").clone();
    for t in pool {
        if last.is_subtopology_of(t) && t.is_subtopology_of(tau) {
            current.push(t.clone());
            extend_chain(sigma, tau, pool, max_len, current, out);
            current.pop();
        }
    }
}

fn next_slowest_stage(earlier: &[Topology], tau: &Topology) -> Topology {
    let mut gens: BTreeSet<u64> = BTreeSet::new();
    for stage in earlier {
        // int_τ of each stage-closed set, computed once per stage.
        let interiors: Vec<u64> = stage
            .closed_masks()
            .iter()
            .map(|&c| tau.interior_mask(c))
            .collect();
        for &u in stage.open_masks() {
            for &f_int in &interiors {
                gens.insert(u & f_int);
            }
        }
    }
    let fam = SetFamily::from_masks(tau.ground(), gens).expect("generators lie in the ground");
    Topology::generate(tau.ground(), &fam).expect("subbasis ground matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_topologies;
    use crate::space::GroundSet;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn sierpinski() -> Topology {
        Topology::try_from_masks(g(2), vec![0b00, 0b01, 0b11]).unwrap()
    }

    #[test]
    fn new_rejects_malformed_sequences() {
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let i = Topology::indiscrete(g(2));
        assert!(matches!(
            Filtration::new(s.clone(), d.clone(), vec![]),
            Err(Error::FiltrationInvariant { index: 0, .. })
        ));
        assert!(matches!(
            Filtration::new(s.clone(), d.clone(), vec![d.clone()]),
            Err(Error::FiltrationInvariant { index: 0, .. })
        ));
        assert!(matches!(
            Filtration::new(s.clone(), d.clone(), vec![s.clone(), i.clone()]),
            Err(Error::FiltrationInvariant { index: 1, .. })
        ));
        assert!(matches!(
            Filtration::new(d.clone(), s.clone(), vec![d]),
            Err(Error::NotSubtopology)
        ));
    }

    #[test]
    fn padding_and_clamping_read_past_the_end() {
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let f = Filtration::new(s.clone(), d.clone(), vec![s.clone()]).unwrap();
        assert_eq!(f.padded_stage(0), &s);
        assert_eq!(f.padded_stage(5), &d);
        assert_eq!(f.stage_clamped(5), &s);
        assert!(f.stage(1).is_err());
        let padded = f.pad_to(3);
        assert_eq!(padded.stages().len(), 3);
        assert_eq!(padded.stages()[2], d);
    }

    #[test]
    fn trivial_filtration_stabilizes_at_one() {
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let f = Filtration::trivial(s, d, 3).unwrap();
        assert_eq!(f.stages().len(), 3);
        assert_eq!(stabilization_ordinal(&f), Some(1));
        assert!(is_filtration(&f));
    }

    #[test]
    fn interior_condition_detects_a_non_filtration() {
        // Repeating Sierpiński once under τ = discrete: F = {1} is closed in
        // stage 0, its stage-1 interior is empty but its τ-interior is {1}.
        // Under the discrete τ closure is the identity, so the weak
        // condition fails too.
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let f = Filtration::new(s.clone(), d, vec![s.clone(), s]).unwrap();
        assert!(!is_filtration(&f));
        assert!(!is_weak_filtration(&f));
    }

    #[test]
    fn every_filtration_is_weak_on_three_point_chains() {
        let ts: Vec<Topology> = enumerate_topologies(3).unwrap().collect();
        let mut filtrations = 0usize;
        let mut weak_only = 0usize;
        for tau in &ts {
            for sigma in ts.iter().filter(|s| s.is_subtopology_of(tau)) {
                for t1 in ts
                    .iter()
                    .filter(|t| sigma.is_subtopology_of(t) && t.is_subtopology_of(tau))
                {
                    for t2 in ts
                        .iter()
                        .filter(|t| t1.is_subtopology_of(t) && t.is_subtopology_of(tau))
                    {
                        let f = Filtration::new(
                            sigma.clone(),
                            tau.clone(),
                            vec![sigma.clone(), t1.clone(), t2.clone()],
                        )
                        .unwrap();
                        let strict = is_filtration(&f);
                        let weak = is_weak_filtration(&f);
                        assert!(!strict || weak, "filtration that is not weak");
                        filtrations += usize::from(strict);
                        weak_only += usize::from(weak && !strict);
                    }
                }
            }
        }
        assert!(filtrations > 0);
        // The weak condition is genuinely weaker already on 3 points.
        assert!(weak_only > 0, "no weak non-filtration found on 3 points");
    }

    #[test]
    fn slowest_from_sierpinski_to_discrete_takes_one_step() {
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let f = slowest_filtration(&s, &d).unwrap();
        assert_eq!(f.stages(), &[s, d]);
        assert_eq!(stabilization_ordinal(&f), Some(1));
    }

    #[test]
    fn slowest_from_indiscrete_to_discrete_freezes_below_tau() {
        let i = Topology::indiscrete(g(2));
        let d = Topology::discrete(g(2));
        let f = slowest_filtration(&i, &d).unwrap();
        assert_eq!(f.stages(), &[i.clone(), i]);
        assert_eq!(stabilization_ordinal(&f), None);
    }

    #[test]
    fn slowest_from_a_topology_to_itself_is_a_single_stage() {
        let s = sierpinski();
        let f = slowest_filtration(&s, &s).unwrap();
        assert_eq!(f.stages(), &[s]);
        assert_eq!(stabilization_ordinal(&f), Some(0));
    }

    #[test]
    fn slowest_is_always_a_filtration_and_weak() {
        for n in 0..=3u8 {
            let ts: Vec<Topology> = enumerate_topologies(n.into()).unwrap().collect();
            for sigma in &ts {
                for tau in &ts {
                    if !sigma.is_subtopology_of(tau) {
                        continue;
                    }
                    let f = slowest_filtration(sigma, tau).unwrap();
                    assert!(is_filtration(&f), "sigma {sigma:?} tau {tau:?}");
                    assert!(is_weak_filtration(&f));
                    for stage in f.stages() {
                        assert!(stage.is_subtopology_of(tau));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_range_does_not_change_the_slowest_sequence() {
        for n in 0..=3u8 {
            let ts: Vec<Topology> = enumerate_topologies(n.into()).unwrap().collect();
            for sigma in &ts {
                for tau in &ts {
                    if !sigma.is_subtopology_of(tau) {
                        continue;
                    }
                    let all =
                        slowest_filtration_with(sigma, tau, GeneratorRange::AllEarlier).unwrap();
                    let last =
                        slowest_filtration_with(sigma, tau, GeneratorRange::LastOnly).unwrap();
                    assert_eq!(all.stages(), last.stages());
                }
            }
        }
    }

    #[test]
    fn join_prefix_joins_the_requested_stages() {
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        let f = slowest_filtration(&s, &d).unwrap();
        assert_eq!(join_prefix(&f, StageOrdinal::Finite(1)).unwrap(), s);
        assert_eq!(join_prefix(&f, StageOrdinal::Finite(2)).unwrap(), d);
        assert_eq!(join_prefix(&f, StageOrdinal::Omega).unwrap(), d);
        assert!(matches!(
            join_prefix(&f, StageOrdinal::Finite(0)),
            Err(Error::StageOutOfRange { .. })
        ));
        assert!(matches!(
            join_prefix(&f, StageOrdinal::Finite(3)),
            Err(Error::StageOutOfRange { .. })
        ));
    }

    #[test]
    fn chain_enumeration_between_sierpinski_and_discrete() {
        let ts: Vec<Topology> = enumerate_topologies(2).unwrap().collect();
        let s = sierpinski();
        let d = Topology::discrete(g(2));
        // Chains: [S], [S,S], [S,D], [S,S,S], [S,S,D], [S,D,D]; the ones
        // repeating S under τ = discrete break the interior condition.
        let filts = filtrations_between(&s, &d, &ts, 3);
        let mut lens: Vec<usize> = filts.iter().map(|f| f.stages().len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2, 3]);
        let weaks = weak_filtrations_between(&s, &d, &ts, 3);
        assert_eq!(weaks.len(), filts.len());
        // Stagewise minimality of the slowest sequence.
        let slowest = slowest_filtration(&s, &d).unwrap();
        for f in &filts {
            for (xi, stage) in f.stages().iter().enumerate() {
                assert!(slowest.stage_clamped(xi).is_subtopology_of(stage));
            }
        }
        let self_chains = filtrations_between(&s, &s, &ts, 3);
        assert_eq!(self_chains.len(), 3);
    }

    #[test]
    fn stage_ordinal_successor_saturates() {
        assert_eq!(
            StageOrdinal::Finite(1).saturating_successor(),
            StageOrdinal::Finite(2)
        );
        assert_eq!(
            StageOrdinal::Omega.saturating_successor(),
            StageOrdinal::Omega
        );
        assert!(StageOrdinal::Finite(1000) < StageOrdinal::Omega);
    }

    #[test]
    fn padding_preserves_the_interior_condition() {
        for n in 0..=3u8 {
            let ts: Vec<Topology> = enumerate_topologies(n.into()).unwrap().collect();
            for sigma in &ts {
                for tau in &ts {
                    if !sigma.is_subtopology_of(tau) {
                        continue;
                    }
                    let f = Filtration::trivial(sigma.clone(), tau.clone(), 2).unwrap();
                    let padded = f.pad_to(4);
                    assert!(is_filtration(&padded));
                }
            }
        }
    }
}
