use std::fmt;

use crate::exactlin::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    CertifiedYes,
    CertifiedNo,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::CertifiedYes => "CERTIFIED_YES",
            Status::CertifiedNo => "CERTIFIED_NO",
            Status::Undecided => "UNDECIDED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What settled a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// The space is `{0}`.
    ZeroSpace,
    /// The twist is the zero map.
    ZeroTwist,
    /// `mu(A, A) = 0`.
    ZeroProduct,
    /// `mu(A, A)` is a proper ideal.
    DerivedTerm,
    /// `Ker(alpha)` is a proper nonzero ideal of a multiplicative algebra.
    TwistKernel,
    /// A catalog candidate spun to a proper nonzero invariant subspace.
    InvariantSubspace,
    /// The operator envelope is the full matrix algebra.
    Burnside,
    /// A nonzero trace-form radical: the witness `rad . V` has no invariant complement.
    Radical,
    /// Split into certified components.
    Decomposed,
    /// Zero-dimensional module, irreducible by convention.
    Convention,
    /// Neither certificate applied within the catalog and budget.
    Exhausted,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::ZeroSpace => "zero-space",
            Reason::ZeroTwist => "zero-twist",
            Reason::ZeroProduct => "zero-product",
            Reason::DerivedTerm => "derived-term",
            Reason::TwistKernel => "twist-kernel",
            Reason::InvariantSubspace => "invariant-subspace",
            Reason::Burnside => "burnside",
            Reason::Radical => "radical",
            Reason::Decomposed => "decomposed",
            Reason::Convention => "convention",
            Reason::Exhausted => "exhausted",
        }
    }
}

/// Three-valued answer to a simplicity-type question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureVerdict {
    pub status: Status,
    pub reason: Reason,
    /// A proper nonzero invariant subspace backing a NO, when one exists.
    pub witness: Option<Subspace>,
    /// Dimension of the operator envelope when it was computed.
    pub envelope_dim: Option<usize>,
    pub note: String,
}

impl StructureVerdict {
    pub fn new(status: Status, reason: Reason, note: impl Into<String>) -> Self {
        Self {
            status,
            reason,
            witness: None,
            envelope_dim: None,
            note: note.into(),
        }
    }

    pub fn with_witness(mut self, witness: Subspace) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_envelope(mut self, dim: Option<usize>) -> Self {
        self.envelope_dim = dim;
        self
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::CertifiedYes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::CertifiedNo
    }
}

/// A verdict together with the invariant components found so far. For a YES
/// the components are irreducible and their direct sum is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub verdict: StructureVerdict,
    pub components: Vec<Subspace>,
    /// Whether `components` certify a direct sum of irreducibles.
    pub complete: Status,
}
