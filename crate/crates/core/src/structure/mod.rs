//! Ideals, derived series, simplicity and semisimplicity verdicts, and
//! isomorphism obstructions.

mod derived;
mod iso;
mod operators;
mod verdict;

pub use derived::{
    derived_series, derived_step, derived_terms_ideal_check, solvability_equivalence_check,
    DerivedSeries, DerivedTermCheck, SolvabilityEquivalence,
};
pub use iso::{iso_obstruction, CandidateFailure, IsoCertificate, IsoReport, IsoVerdict};
pub use operators::{CandidateSource, EnvelopeAlgebra, OperatorSet, Reduction, Search};
pub use verdict::{Decomposition, Reason, Status, StructureVerdict};

use crate::algebra::{HomAlgebra, IdealViolation};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;

/// Default number of envelope passes and random envelope samples.
pub const DEFAULT_BUDGET: usize = 32;

pub fn operator_set(alg: &HomAlgebra) -> OperatorSet {
    OperatorSet::new(alg.dim(), alg.multiplication_operators()).expect("operators are n x n")
}

/// Smallest two-sided Hom-ideal containing `seed`.
pub fn hom_ideal_closure(alg: &HomAlgebra, seed: &Subspace) -> Result<Subspace> {
    if seed.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: seed.ambient_dim(),
        });
    }
    Ok(operator_set(alg).spin(seed.basis()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelIdeal {
    pub kernel: Subspace,
    pub violation: Option<IdealViolation>,
}

impl KernelIdeal {
    pub fn is_ideal(&self) -> bool {
        self.violation.is_none()
    }
}

/// `Ker(alpha)` and whether it is a two-sided Hom-ideal.
pub fn kernel_ideal(alg: &HomAlgebra) -> KernelIdeal {
    let kernel = alg.twist().kernel_subspace();
    let violation = alg.is_hom_ideal(&kernel).expect("kernel lives in the algebra");
    KernelIdeal { kernel, violation }
}

/// Envelope of `alpha` and all multiplication operators.
pub fn envelope(alg: &HomAlgebra, budget: usize) -> EnvelopeAlgebra {
    operator_set(alg).envelope(budget)
}

fn nontrivial_precheck(alg: &HomAlgebra) -> Option<StructureVerdict> {
    if alg.dim() == 0 {
        return Some(StructureVerdict::new(Status::CertifiedNo, Reason::ZeroSpace, "the algebra is {0}"));
    }
    if alg.twist().is_zero() {
        return Some(StructureVerdict::new(Status::CertifiedNo, Reason::ZeroTwist, "the twist is the zero map"));
    }
    if alg.square().is_zero() {
        return Some(StructureVerdict::new(Status::CertifiedNo, Reason::ZeroProduct, "mu(A, A) = 0"));
    }
    None
}

/// Three-valued simplicity: a proper nonzero ideal found by the candidate
/// catalog gives NO, a full operator envelope gives YES.
pub fn simplicity(alg: &HomAlgebra, seed: u64, budget: usize) -> StructureVerdict {
    if let Some(v) = nontrivial_precheck(alg) {
        return v;
    }
    let search = operator_set(alg).search(seed, budget);
    let env_dim = search.envelope_dim();
    match search.status {
        Status::CertifiedYes => StructureVerdict::new(
            Status::CertifiedYes,
            Reason::Burnside,
            format!("envelope dimension {} = {}^2", env_dim.unwrap_or(0), alg.dim()),
        )
        .with_envelope(env_dim),
        Status::CertifiedNo => {
            let source = search.source.as_ref().map(ToString::to_string).unwrap_or_default();
            StructureVerdict::new(Status::CertifiedNo, Reason::InvariantSubspace, format!("proper ideal from {source}"))
                .with_witness(search.witness.expect("NO carries a witness"))
                .with_envelope(env_dim)
        }
        Status::Undecided => StructureVerdict::new(
            Status::Undecided,
            Reason::Exhausted,
            format!(
                "envelope dimension {} < {}; no candidate spun to a proper ideal",
                env_dim.unwrap_or(0),
                alg.dim() * alg.dim()
            ),
        )
        .with_envelope(env_dim),
    }
}

/// Decomposition into simple two-sided Hom-ideals, when certifiable.
///
/// Cheap refutations run first: the nontriviality conditions, then for
/// multiplicative algebras `mu(A, A) != A` and a nonzero `Ker(alpha)`, both
/// of which are proper ideals that a direct sum of simple ideals cannot have.
pub fn semisimplicity(alg: &HomAlgebra, seed: u64, budget: usize) -> Decomposition {
    let no_split = |verdict| Decomposition {
        verdict,
        components: Vec::new(),
        complete: Status::CertifiedNo,
    };
    if let Some(v) = nontrivial_precheck(alg) {
        return no_split(v);
    }
    if alg.is_multiplicative() {
        let square = alg.square();
        if !square.is_full() && alg.is_hom_ideal(&square).ok().flatten().is_none() {
            return no_split(
                StructureVerdict::new(Status::CertifiedNo, Reason::DerivedTerm, "mu(A, A) is a proper ideal")
                    .with_witness(square),
            );
        }
        let ker = kernel_ideal(alg);
        if !ker.kernel.is_zero() && ker.is_ideal() {
            return no_split(
                StructureVerdict::new(Status::CertifiedNo, Reason::TwistKernel, "Ker(alpha) is a proper ideal")
                    .with_witness(ker.kernel),
            );
        }
    }
    let red = operator_set(alg).decompose(seed, budget);
    let env_dim = red.top.envelope_dim();
    let verdict = match red.status {
        Status::CertifiedYes => {
            let bad = red.components.iter().position(|c| {
                let part = alg.restrict(c).expect("invariant subspaces are subalgebras");
                part.square().is_zero() || part.twist().is_zero()
            });
            match bad {
                None if red.components.len() == 1 => StructureVerdict::new(
                    Status::CertifiedYes,
                    Reason::Burnside,
                    "simple: envelope is the full matrix algebra",
                ),
                None => StructureVerdict::new(
                    Status::CertifiedYes,
                    Reason::Decomposed,
                    format!("direct sum of {} simple ideals", red.components.len()),
                ),
                Some(i) => StructureVerdict::new(
                    Status::Undecided,
                    Reason::Exhausted,
                    format!("component {i} is irreducible but has zero product or zero twist"),
                ),
            }
        }
        Status::CertifiedNo => StructureVerdict::new(
            Status::CertifiedNo,
            Reason::Radical,
            "an ideal without complementary ideal exists",
        )
        .with_witness(red.obstruction.clone().expect("NO carries an obstruction")),
        Status::Undecided => StructureVerdict::new(
            Status::Undecided,
            Reason::Exhausted,
            "no certificate found for some summand",
        ),
    };
    let complete = verdict.status;
    Decomposition {
        verdict: verdict.with_envelope(env_dim),
        components: red.components,
        complete,
    }
}
