use std::fmt;

use crate::algebra::{is_morphism, HomAlgebra, MorphismViolation};
use crate::error::Result;
use crate::exactlin::{char_poly, rank_sequence, Matrix, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    Inconclusive,
}

impl IsoVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic => "ISOMORPHIC",
            IsoVerdict::NotIsomorphic => "NOT_ISOMORPHIC",
            IsoVerdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The invariant or check that decided an [`IsoReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCertificate {
    Dimension { left: usize, right: usize },
    CharPoly { left: Polynomial, right: Polynomial },
    RankSequence { eigenvalue: Rational, left: Vec<usize>, right: Vec<usize> },
    Candidate,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub verdict: IsoVerdict,
    pub certificate: IsoCertificate,
    /// Why a supplied candidate was rejected.
    pub candidate_failure: Option<CandidateFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateFailure {
    Singular,
    NotMorphism(MorphismViolation),
}

impl fmt::Display for CandidateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateFailure::Singular => f.write_str("candidate is singular"),
            CandidateFailure::NotMorphism(v) => write!(f, "candidate is not a morphism: {v}"),
        }
    }
}

/// Refutes isomorphism through similarity invariants of the twists, or
/// confirms it with a supplied invertible morphism. Never searches.
pub fn iso_obstruction(a: &HomAlgebra, b: &HomAlgebra, candidate: Option<&Matrix>) -> Result<IsoReport> {
    if let Some(c) = candidate {
        c.require_shape(b.dim(), a.dim())?;
    }
    let report = |verdict, certificate| IsoReport {
        verdict,
        certificate,
        candidate_failure: None,
    };
    if a.dim() != b.dim() {
        return Ok(report(
            IsoVerdict::NotIsomorphic,
            IsoCertificate::Dimension {
                left: a.dim(),
                right: b.dim(),
            },
        ));
    }
    let (pa, pb) = (char_poly(a.twist())?, char_poly(b.twist())?);
    if pa != pb {
        return Ok(report(
            IsoVerdict::NotIsomorphic,
            IsoCertificate::CharPoly { left: pa, right: pb },
        ));
    }
    for lambda in pa.rational_roots() {
        let (ra, rb) = (rank_sequence(a.twist(), &lambda)?, rank_sequence(b.twist(), &lambda)?);
        if ra != rb {
            return Ok(report(
                IsoVerdict::NotIsomorphic,
                IsoCertificate::RankSequence {
                    eigenvalue: lambda,
                    left: ra,
                    right: rb,
                },
            ));
        }
    }
    let Some(c) = candidate else {
        return Ok(report(IsoVerdict::Inconclusive, IsoCertificate::None));
    };
    let failure = if !c.is_invertible() {
        Some(CandidateFailure::Singular)
    } else {
        is_morphism(c, a, b)?.map(CandidateFailure::NotMorphism)
    };
    Ok(match failure {
        None => report(IsoVerdict::Isomorphic, IsoCertificate::Candidate),
        Some(f) => IsoReport {
            verdict: IsoVerdict::Inconclusive,
            certificate: IsoCertificate::None,
            candidate_failure: Some(f),
        },
    })
}
