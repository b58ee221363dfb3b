//! The trichotomy: cyclic / p-quasi-elementary / not quasi-elementary,
//! the predicted coefficient ideal, and the end-to-end conformance check.

use crate::error::Result;
use crate::group::{prime_divisors, FiniteGroup};
use crate::relations::{is_brauer_relation, relation_lattice, solomon_relation};
use crate::subgroup::Subgroup;
use crate::character::FormalCombination;

/// A group is p-quasi-elementary iff it has a cyclic normal subgroup of
/// p-power index, equivalently iff its p-residual is cyclic. Cyclic
/// groups are reported as `Cyclic` (they satisfy the criterion for every
/// prime, so the check runs first).
#[derive(Clone, Debug)]
pub enum Classification {
    Cyclic,
    PQuasiElementary {
        p: usize,
        /// The cyclic normal p'-subgroup: the p-residual.
        core: Subgroup,
        /// A Sylow p-subgroup complementing it.
        sylow: Subgroup,
    },
    NotQuasiElementary,
}

impl Classification {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Classification::Cyclic => "cyclic",
            Classification::PQuasiElementary { .. } => "p-quasi-elementary",
            Classification::NotQuasiElementary => "not-quasi-elementary",
        }
    }

    pub fn prime(&self) -> Option<usize> {
        match self {
            Classification::PQuasiElementary { p, .. } => Some(*p),
            _ => None,
        }
    }
}

/// Cyclic first; otherwise the first prime (ascending) whose p-residual
/// is cyclic wins — for non-cyclic groups at most one prime can qualify.
pub fn classify(g: &FiniteGroup) -> Classification {
    if g.is_cyclic() {
        return Classification::Cyclic;
    }
    for p in prime_divisors(g.order()) {
        let core = g.p_residual(p);
        if core.is_cyclic(g) {
            let sylow = g.sylow_subgroup(p);
            return Classification::PQuasiElementary { p, core, sylow };
        }
    }
    Classification::NotQuasiElementary
}

/// The ideal the theorem predicts: `{0}` for cyclic, `pZ` for
/// p-quasi-elementary non-cyclic, `Z` otherwise.
pub fn predicted_ideal(c: &Classification) -> usize {
    match c {
        Classification::Cyclic => 0,
        Classification::PQuasiElementary { p, .. } => *p,
        Classification::NotQuasiElementary => 1,
    }
}

/// Outcome of checking one group against the theorem.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub label: String,
    pub order: usize,
    pub classification: Classification,
    pub predicted: usize,
    pub computed: usize,
    pub rank: usize,
    /// A relation achieving `|n_G| = d`, absent iff `d = 0`.
    pub witness: Option<FormalCombination>,
    pub pass: bool,
}

/// Classifies, computes the actual coefficient ideal from the relation
/// lattice, produces a witness where one must exist, and reports whether
/// everything agrees. Mismatches are reported, not raised; only
/// arithmetic failures error.
pub fn verify_theorem(g: &FiniteGroup) -> Result<TheoremReport> {
    let classification = classify(g);
    let predicted = predicted_ideal(&classification);
    let lattice = relation_lattice(g)?;
    let computed = lattice.coefficient_ideal();
    let rank = lattice.rank();

    let witness = if computed == 0 {
        None
    } else {
        match &classification {
            Classification::PQuasiElementary { .. } => solomon_relation(g).ok(),
            _ => lattice.with_group_coefficient(computed as i64).ok(),
        }
    };

    let mut pass = predicted == computed;
    if computed > 0 {
        match &witness {
            Some(w) => {
                pass = pass
                    && is_brauer_relation(g, w)?
                    && w.group_coefficient(g) == computed as i64;
            }
            None => pass = false,
        }
    } else {
        pass = pass && witness.is_none();
    }

    Ok(TheoremReport {
        label: g.label().to_string(),
        order: g.order(),
        classification,
        predicted,
        computed,
        rank,
        witness,
        pass,
    })
}
