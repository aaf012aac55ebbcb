//! κ-meagerness and the κ-Baire property on finite models.
//!
//! On a finite space every union of nowhere dense sets is a finite union, so
//! for any infinite κ the κ-meager sets are exactly the nowhere dense sets
//! (nowhere dense sets are closed under subsets and, on a finite ground,
//! under the unions that matter). The κ parameter is therefore a single
//! symbolic value; it is kept in the signatures so call sites read like the
//! definitions they implement.

use crate::error::Result;
use crate::space::PointSet;
use crate::topology::Topology;

/// Symbolic infinite cardinal. Finite models cannot distinguish infinite
/// cardinals, so one value suffices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Kappa {
    #[default]
    Omega,
}

/// Whether `int(cl(a))` is empty in `t`.
pub fn is_nowhere_dense(t: &Topology, a: &PointSet, _kappa: Kappa) -> Result<bool> {
    let cl = t.closure(a)?;
    Ok(t.interior(&cl)?.is_empty())
}

/// κ-meager = union of fewer than κ nowhere dense sets; on a finite ground
/// this collapses to nowhere dense.
pub fn is_kappa_meager(t: &Topology, a: &PointSet, kappa: Kappa) -> Result<bool> {
    is_nowhere_dense(t, a, kappa)
}

/// Whether no nonempty open set is κ-meager.
pub fn is_kappa_baire(t: &Topology, kappa: Kappa) -> Result<bool> {
    for u in t.opens() {
        if !u.is_empty() && is_kappa_meager(t, &u, kappa)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `a` equals an open set modulo a κ-meager set: some open `U` has
/// both `a ∖ U` and `U ∖ a` κ-meager.
pub fn has_kappa_baire_property(t: &Topology, a: &PointSet, kappa: Kappa) -> Result<bool> {
    t.check_ground(a)?;
    for u in t.opens() {
        if is_kappa_meager(t, &a.difference(&u), kappa)?
            && is_kappa_meager(t, &u.difference(a), kappa)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}
