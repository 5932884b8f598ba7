//! Invariant subspaces of a finite set of linear operators.
//!
//! Two-sided Hom-ideals are the subspaces invariant under `alpha` and all
//! multiplication operators; subbimodules are the subspaces invariant under
//! the module twist and both action families. Both questions run through
//! [`OperatorSet`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactlin::{char_poly, int, Matrix, Rational, SpanBuilder, Subspace, Vector};
use crate::structure::verdict::Status;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSet {
    dim: usize,
    ops: Vec<Matrix>,
}

/// Unital associative algebra generated by an operator set, as a span of
/// matrices flattened row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeAlgebra {
    /// `n^2`, the dimension of the full matrix algebra.
    pub ambient_dim: usize,
    pub basis: Vec<Matrix>,
    pub generators: Vec<Matrix>,
    /// False when the pass budget ran out before a pass added nothing.
    pub closed: bool,
    pub passes: usize,
}

impl EnvelopeAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn span(&self) -> SpanBuilder {
        let mut b = SpanBuilder::new(self.ambient_dim);
        for m in &self.basis {
            b.insert(&m.to_flat());
        }
        b
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span().contains(&m.to_flat())
    }

    /// Elements `x` of the span with `tr(x y) = 0` for every `y` in the span.
    /// In characteristic zero this is the Jacobson radical when the envelope
    /// is closed.
    pub fn trace_radical(&self) -> Vec<Matrix> {
        let d = self.dim();
        let Some(n) = self.basis.first().map(Matrix::rows) else {
            return Vec::new();
        };
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let (a, b) = (&self.basis[i], &self.basis[j]);
                let mut t = Rational::default();
                for r in 0..n {
                    for c in 0..n {
                        let x = a.get(r, c);
                        if num::Zero::is_zero(x) {
                            continue;
                        }
                        t += x * b.get(c, r);
                    }
                }
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        gram.kernel()
            .into_iter()
            .map(|coeffs| combine_matrices(&coeffs, &self.basis, n))
            .collect()
    }
}

fn combine_matrices(coeffs: &[Rational], mats: &[Matrix], n: usize) -> Matrix {
    let mut flat = vec![Rational::default(); n * n];
    for (c, m) in coeffs.iter().zip(mats) {
        crate::exactlin::axpy(&mut flat, c, m.entries());
    }
    Matrix::from_flat(n, n, flat)
}

/// Where a catalog candidate came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    BasisVector(usize),
    GeneratorKernel(usize),
    GeneratorEigenspace { generator: usize, eigenvalue: Rational },
    RandomElement { sample: usize, eigenvalue: Rational },
    Radical,
}

impl std::fmt::Display for CandidateSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CandidateSource::BasisVector(i) => write!(f, "spin of basis vector {i}"),
            CandidateSource::GeneratorKernel(g) => write!(f, "spin of kernel of operator {g}"),
            CandidateSource::GeneratorEigenspace { generator, eigenvalue } => {
                write!(f, "spin of eigenspace {eigenvalue} of operator {generator}")
            }
            CandidateSource::RandomElement { sample, eigenvalue } => {
                write!(f, "spin of eigenspace {eigenvalue} of random envelope element {sample}")
            }
            CandidateSource::Radical => write!(f, "image of the envelope radical"),
        }
    }
}

/// Outcome of the irreducibility search on one operator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Search {
    pub status: Status,
    pub witness: Option<Subspace>,
    pub source: Option<CandidateSource>,
    pub envelope: Option<EnvelopeAlgebra>,
}

impl Search {
    pub fn envelope_dim(&self) -> Option<usize> {
        self.envelope.as_ref().map(EnvelopeAlgebra::dim)
    }
}

/// Outcome of the recursive splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// YES: `components` are irreducible with direct sum the whole space.
    /// NO: the space is not a direct sum of irreducibles.
    pub status: Status,
    pub components: Vec<Subspace>,
    /// For NO, an invariant subspace without invariant complement.
    pub obstruction: Option<Subspace>,
    /// The irreducibility search on the whole space.
    pub top: Search,
}

const RANDOM_COEFF_BOUND: i64 = 3;

impl OperatorSet {
    pub fn new(dim: usize, ops: Vec<Matrix>) -> Result<Self> {
        for op in &ops {
            op.require_shape(dim, dim)?;
        }
        Ok(Self { dim, ops })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.ops
    }

    /// Smallest invariant subspace containing every seed vector.
    pub fn spin(&self, seed: &[Vector]) -> Subspace {
        let mut span = SpanBuilder::new(self.dim);
        let mut queue: Vec<Vector> = Vec::new();
        for v in seed {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(w) = queue.pop() {
            if span.dim() == self.dim {
                break;
            }
            for op in &self.ops {
                let image = op.apply_unchecked(&w);
                if span.insert(&image) {
                    queue.push(image);
                }
            }
        }
        span.into_subspace()
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        self.ops.iter().all(|op| s.is_invariant_under(op))
    }

    /// Operators restricted to an invariant subspace, in the coordinates of
    /// its canonical basis. Zero and repeated restrictions are dropped.
    pub fn restrict(&self, s: &Subspace) -> OperatorSet {
        let d = s.dim();
        let mut ops: Vec<Matrix> = Vec::new();
        for op in &self.ops {
            let cols: Vec<Vector> = s
                .basis()
                .iter()
                .map(|v| {
                    s.coordinates(&op.apply_unchecked(v))
                        .expect("restriction to a non-invariant subspace")
                })
                .collect();
            let m = Matrix::from_columns(d, &cols).expect("square by construction");
            if !m.is_zero() && !ops.contains(&m) {
                ops.push(m);
            }
        }
        OperatorSet { dim: d, ops }
    }

    /// Span closure of `{I}` under left multiplication by the generators, one
    /// frontier per pass, stopping at a pass that adds nothing, at the full
    /// matrix algebra, or after `budget` passes.
    pub fn envelope(&self, budget: usize) -> EnvelopeAlgebra {
        let n = self.dim;
        let cap = n * n;
        let mut span = SpanBuilder::new(cap);
        let mut basis = Vec::new();
        let id = Matrix::identity(n);
        if n > 0 {
            span.insert(&id.to_flat());
            basis.push(id.clone());
        }
        let mut frontier = basis.clone();
        let mut passes = 0;
        let mut closed = n == 0;
        while !closed && passes < budget {
            passes += 1;
            let mut next = Vec::new();
            for m in &frontier {
                for g in &self.ops {
                    if span.dim() == cap {
                        break;
                    }
                    let p = g.mul_unchecked(m);
                    if span.insert(&p.to_flat()) {
                        basis.push(p.clone());
                        next.push(p);
                    }
                }
            }
            closed = next.is_empty() || span.dim() == cap;
            frontier = next;
        }
        EnvelopeAlgebra {
            ambient_dim: cap,
            basis,
            generators: self.ops.clone(),
            closed,
            passes,
        }
    }

    fn basis_candidates(&self) -> Vec<(CandidateSource, Vector)> {
        (0..self.dim)
            .map(|i| (CandidateSource::BasisVector(i), crate::exactlin::unit_vector(self.dim, i)))
            .collect()
    }

    fn kernel_candidates(&self) -> Vec<(CandidateSource, Vector)> {
        let mut out = Vec::new();
        for (g, op) in self.ops.iter().enumerate() {
            let ker = op.kernel();
            if ker.len() == self.dim {
                continue;
            }
            out.extend(ker.into_iter().map(|v| (CandidateSource::GeneratorKernel(g), v)));
        }
        out
    }

    fn eigen_candidates(m: &Matrix) -> Vec<(Rational, Vector)> {
        let n = m.rows();
        let Ok(p) = char_poly(m) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for lambda in p.rational_roots() {
            let shifted = m.sub(&Matrix::scalar(n, lambda.clone())).expect("square");
            let ker = shifted.kernel();
            if ker.len() == n {
                continue;
            }
            out.extend(ker.into_iter().map(|v| (lambda.clone(), v)));
        }
        out
    }

    fn generator_eigen_candidates(&self) -> Vec<(CandidateSource, Vector)> {
        let mut out = Vec::new();
        for (g, op) in self.ops.iter().enumerate() {
            for (eigenvalue, v) in Self::eigen_candidates(op) {
                if num::Zero::is_zero(&eigenvalue) {
                    continue;
                }
                out.push((CandidateSource::GeneratorEigenspace { generator: g, eigenvalue }, v));
            }
        }
        out
    }

    fn random_candidates(&self, env: &EnvelopeAlgebra, seed: u64, budget: usize) -> Vec<(CandidateSource, Vector)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.dim;
        let mut out = Vec::new();
        for sample in 0..budget {
            let coeffs: Vec<Rational> = env
                .basis
                .iter()
                .map(|_| int(rng.gen_range(-RANDOM_COEFF_BOUND..=RANDOM_COEFF_BOUND)))
                .collect();
            let m = combine_matrices(&coeffs, &env.basis, n);
            for (eigenvalue, v) in Self::eigen_candidates(&m) {
                out.push((CandidateSource::RandomElement { sample, eigenvalue }, v));
            }
        }
        out
    }

    fn radical_image(&self, env: &EnvelopeAlgebra) -> Option<Subspace> {
        if !env.closed {
            return None;
        }
        let rad = env.trace_radical();
        if rad.is_empty() {
            return None;
        }
        let images: Vec<Vector> = rad
            .iter()
            .flat_map(|r| r.columns())
            .collect();
        Subspace::canonicalize(&images, self.dim).ok()
    }

    fn first_proper_spin(&self, candidates: Vec<(CandidateSource, Vector)>) -> Option<(CandidateSource, Subspace)> {
        for (source, v) in candidates {
            let s = self.spin(&[v]);
            if s.is_nontrivial() {
                return Some((source, s));
            }
        }
        None
    }

    /// Layered search for a proper nonzero invariant subspace.
    ///
    /// NO candidates, in order: basis vectors, generator kernels, then (after
    /// the envelope, which answers YES when it is the full matrix algebra)
    /// generator eigenspaces, eigenspaces of `budget` seeded random envelope
    /// elements, and finally `rad . V`. `budget` also caps envelope passes.
    pub fn search(&self, seed: u64, budget: usize) -> Search {
        let no = |source, witness, envelope| Search {
            status: Status::CertifiedNo,
            witness: Some(witness),
            source: Some(source),
            envelope,
        };
        if let Some((src, w)) = self.first_proper_spin(self.basis_candidates()) {
            return no(src, w, None);
        }
        if let Some((src, w)) = self.first_proper_spin(self.kernel_candidates()) {
            return no(src, w, None);
        }
        let env = self.envelope(budget.max(1));
        if env.is_full() {
            return Search {
                status: Status::CertifiedYes,
                witness: None,
                source: None,
                envelope: Some(env),
            };
        }
        if let Some((src, w)) = self.first_proper_spin(self.generator_eigen_candidates()) {
            return no(src, w, Some(env));
        }
        if let Some((src, w)) = self.first_proper_spin(self.random_candidates(&env, seed, budget)) {
            return no(src, w, Some(env));
        }
        if let Some(w) = self.radical_image(&env) {
            return no(CandidateSource::Radical, w, Some(env));
        }
        Search {
            status: Status::Undecided,
            witness: None,
            source: None,
            envelope: Some(env),
        }
    }

    /// Greedy search for an invariant `J` with `I (+) J` the whole space,
    /// summing spins of catalog candidates that stay independent of `I`.
    pub fn find_complement(&self, ideal: &Subspace, seed: u64, budget: usize) -> Option<Subspace> {
        let n = self.dim;
        let mut j = Subspace::zero(n);
        let mut covered = ideal.clone();
        let try_stage = |cands: Vec<(CandidateSource, Vector)>, j: &mut Subspace, covered: &mut Subspace| {
            for (_, v) in cands {
                if covered.dim() == n {
                    return true;
                }
                if covered.contains_vector(&v) {
                    continue;
                }
                let s = self.spin(&[v]);
                let grown = j.sum(&s).expect("same ambient");
                if ideal.intersection(&grown).expect("same ambient").is_zero() {
                    *j = grown;
                    *covered = ideal.sum(j).expect("same ambient");
                }
            }
            covered.dim() == n
        };
        if try_stage(self.basis_candidates(), &mut j, &mut covered)
            || try_stage(self.kernel_candidates(), &mut j, &mut covered)
            || try_stage(self.generator_eigen_candidates(), &mut j, &mut covered)
        {
            return Some(j);
        }
        let env = self.envelope(budget.max(1));
        if try_stage(self.random_candidates(&env, seed, budget), &mut j, &mut covered) {
            return Some(j);
        }
        None
    }

    /// Splits the space into irreducible invariant summands where the
    /// certificates allow it.
    pub fn decompose(&self, seed: u64, budget: usize) -> Reduction {
        let n = self.dim;
        let top = if n == 0 {
            Search {
                status: Status::CertifiedYes,
                witness: None,
                source: None,
                envelope: None,
            }
        } else {
            self.search(seed, budget)
        };
        match top.status {
            Status::CertifiedYes => Reduction {
                status: Status::CertifiedYes,
                components: if n == 0 { Vec::new() } else { vec![Subspace::full(n)] },
                obstruction: None,
                top,
            },
            Status::Undecided => Reduction {
                status: Status::Undecided,
                components: Vec::new(),
                obstruction: None,
                top,
            },
            Status::CertifiedNo => {
                let ideal = top.witness.clone().expect("NO carries a witness");
                match self.find_complement(&ideal, seed, budget) {
                    Some(comp) => {
                        let (a, b) = (
                            self.restrict(&ideal).decompose(seed, budget),
                            self.restrict(&comp).decompose(seed, budget),
                        );
                        let lift = |sub: &Subspace, parent: &Subspace| -> Subspace {
                            let vecs: Vec<Vector> =
                                sub.basis().iter().map(|c| parent.from_coordinates(c)).collect();
                            Subspace::canonicalize(&vecs, n).expect("lifted into ambient")
                        };
                        let mut components: Vec<Subspace> =
                            a.components.iter().map(|c| lift(c, &ideal)).collect();
                        components.extend(b.components.iter().map(|c| lift(c, &comp)));
                        let status = match (a.status, b.status) {
                            (Status::CertifiedNo, _) | (_, Status::CertifiedNo) => Status::CertifiedNo,
                            (Status::CertifiedYes, Status::CertifiedYes) => Status::CertifiedYes,
                            _ => Status::Undecided,
                        };
                        let obstruction = a
                            .obstruction
                            .as_ref()
                            .map(|o| lift(o, &ideal))
                            .or_else(|| b.obstruction.as_ref().map(|o| lift(o, &comp)));
                        Reduction {
                            status,
                            components,
                            obstruction,
                            top,
                        }
                    }
                    None => {
                        let env = match &top.envelope {
                            Some(e) => e.clone(),
                            None => self.envelope(budget.max(1)),
                        };
                        let obstruction = self.radical_image(&env);
                        let status = if obstruction.is_some() {
                            Status::CertifiedNo
                        } else {
                            Status::Undecided
                        };
                        Reduction {
                            status,
                            components: vec![ideal],
                            obstruction,
                            top,
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_block_has_no_complement() {
        let ops = OperatorSet::new(2, vec![Matrix::from_i64_rows(&[&[0, 1], &[0, 0]])]).unwrap();
        let red = ops.decompose(0, 8);
        assert_eq!(red.status, Status::CertifiedNo);
        let obstruction = red.obstruction.unwrap();
        assert_eq!(obstruction, Subspace::coordinate(2, &[0]).unwrap());
    }

    #[test]
    fn rotation_is_irreducible_over_the_rationals() {
        let ops = OperatorSet::new(2, vec![Matrix::from_i64_rows(&[&[0, -1], &[1, 0]])]).unwrap();
        let s = ops.search(0, 8);
        // envelope is Q[i], dimension 2 < 4: no certificate either way
        assert_eq!(s.envelope_dim(), Some(2));
        assert_eq!(s.status, Status::Undecided);
    }

    #[test]
    fn diagonal_operator_splits() {
        let ops = OperatorSet::new(3, vec![Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])]).unwrap();
        let red = ops.decompose(0, 8);
        assert_eq!(red.status, Status::CertifiedYes);
        assert_eq!(red.components.len(), 3);
    }

    #[test]
    fn envelope_of_full_set_is_full() {
        let e01 = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        let e10 = Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]);
        let env = OperatorSet::new(2, vec![e01, e10]).unwrap().envelope(8);
        assert!(env.is_full() && env.closed);
        assert!(env.trace_radical().is_empty());
    }
}
