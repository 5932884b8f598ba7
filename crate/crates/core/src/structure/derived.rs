use crate::algebra::{HomAlgebra, IdealViolation};
use crate::constructions::untwist;
use crate::error::Result;
use crate::exactlin::{Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    /// `A^(0) = A, A^(1), ...`; ends at the zero term or repeats its last
    /// nonzero term once when the series stabilizes.
    pub terms: Vec<Subspace>,
    /// A nonzero term was reproduced.
    pub stabilized: bool,
    /// Some term is zero.
    pub solvable: bool,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Whether the series reached a fixed point within the step bound.
    pub fn is_settled(&self) -> bool {
        self.solvable || self.stabilized
    }
}

/// `span{mu(u, v) : u, v in basis(term)}`
pub fn derived_step(alg: &HomAlgebra, term: &Subspace) -> Subspace {
    let basis = term.basis();
    let products: Vec<Vector> = basis
        .iter()
        .flat_map(|u| basis.iter().map(move |v| alg.mul_raw(u, v)))
        .collect();
    Subspace::canonicalize(&products, alg.dim()).expect("products live in the algebra")
}

/// Runs the derived sequence for at most `max_steps` products. Terms descend,
/// so a repeated nonzero term proves the algebra is not solvable.
pub fn derived_series(alg: &HomAlgebra, max_steps: usize) -> DerivedSeries {
    let mut terms = vec![Subspace::full(alg.dim())];
    let mut stabilized = false;
    for _ in 0..max_steps.max(1) {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = derived_step(alg, last);
        let repeat = &next == last;
        terms.push(next);
        if repeat {
            stabilized = true;
            break;
        }
    }
    let solvable = terms.last().is_some_and(Subspace::is_zero);
    DerivedSeries {
        terms,
        stabilized,
        solvable,
    }
}

/// Ideal check of each distinct derived term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTermCheck {
    pub term: Subspace,
    pub violation: Option<IdealViolation>,
}

impl DerivedTermCheck {
    pub fn is_ideal(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn derived_terms_ideal_check(alg: &HomAlgebra) -> Vec<DerivedTermCheck> {
    let series = derived_series(alg, alg.dim() + 1);
    let mut out: Vec<DerivedTermCheck> = Vec::new();
    for term in series.terms {
        if out.last().is_some_and(|c| c.term == term) {
            continue;
        }
        let violation = alg.is_hom_ideal(&term).expect("term lives in the algebra");
        out.push(DerivedTermCheck { term, violation });
    }
    out
}

/// Derived series of a twisted algebra against its untwisted companion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityEquivalence {
    pub twisted: DerivedSeries,
    pub induced: DerivedSeries,
    /// `twisted.terms[k] == alpha^k(induced.terms[k])` for each `k`.
    pub term_identity: Vec<bool>,
}

impl SolvabilityEquivalence {
    pub fn holds(&self) -> bool {
        self.twisted.solvable == self.induced.solvable && self.term_identity.iter().all(|&b| b)
    }
}

/// Compares `A_alpha^(k)` with `alpha^k(A^(k))` term by term, where `A` is
/// the untwisted algebra. Shorter series are padded with their fixed point.
pub fn solvability_equivalence_check(alg: &HomAlgebra) -> Result<SolvabilityEquivalence> {
    let pair = untwist(alg)?;
    let steps = alg.dim() + 1;
    let twisted = derived_series(alg, steps);
    let induced = derived_series(&pair.induced, steps);
    let len = twisted.terms.len().max(induced.terms.len());
    let at = |s: &DerivedSeries, k: usize| s.terms[k.min(s.terms.len() - 1)].clone();
    let mut power = crate::exactlin::Matrix::identity(alg.dim());
    let mut term_identity = Vec::with_capacity(len);
    for k in 0..len {
        let image = at(&induced, k).image_under(&power)?;
        term_identity.push(image == at(&twisted, k));
        power = alg.twist().mul_unchecked(&power);
    }
    Ok(SolvabilityEquivalence {
        twisted,
        induced,
        term_identity,
    })
}
