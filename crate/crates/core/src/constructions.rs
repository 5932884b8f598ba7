//! Algebra-building operations: Yau twists, untwisting, transported products,
//! direct sums, quotients and the split along an idempotent twist.

use std::collections::HashSet;

use crate::algebra::{is_morphism, HomAlgebra, MorphismViolation};
use crate::error::{Error, Result};
use crate::exactlin::{sub_vectors, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};

/// An algebra with invertible twist together with its untwisted companion
/// `(A, alpha^-1 mu, Id)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistPair {
    pub original: HomAlgebra,
    pub induced: HomAlgebra,
}

impl TwistPair {
    /// `original.product == original.twist o induced.product` entry-wise.
    pub fn is_consistent(&self) -> bool {
        let n = self.original.dim();
        self.induced.dim() == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    self.original
                        .twist()
                        .apply_unchecked(&self.induced.basis_product(i, j))
                        == self.original.basis_product(i, j)
                })
            })
    }
}

/// `(A, beta o mu, beta o alpha)`. `beta` must be a morphism of `alg`.
pub fn yau_twist(alg: &HomAlgebra, beta: &Matrix) -> Result<HomAlgebra> {
    let n = alg.dim();
    beta.require_shape(n, n)?;
    if let Some(violation) = is_morphism(beta, alg, alg)? {
        return Err(Error::NotMorphism(violation));
    }
    Ok(twist_unchecked(alg, beta, &beta.mul_unchecked(alg.twist())))
}

fn twist_unchecked(alg: &HomAlgebra, map: &Matrix, new_twist: &Matrix) -> HomAlgebra {
    let n = alg.dim();
    let products: Vec<Vector> = (0..n * n)
        .map(|ij| map.apply_unchecked(&alg.basis_product(ij / n, ij % n)))
        .collect();
    HomAlgebra::from_products(alg.name(), alg.labels().to_vec(), &products, new_twist.clone())
        .expect("shapes preserved")
}

/// The compatible algebra `(A, alpha^-1 o mu)` with identity twist.
pub fn untwist(alg: &HomAlgebra) -> Result<TwistPair> {
    let inverse = alg.twist().inverse().map_err(|_| Error::Singular("twist"))?;
    let induced = twist_unchecked(alg, &inverse, &Matrix::identity(alg.dim()))
        .with_name(format!("{}|untwisted", alg.name()));
    Ok(TwistPair {
        original: alg.clone(),
        induced,
    })
}

/// `phi o mu o (phi^-1 x phi^-1)` with twist `phi o alpha o phi^-1`, so that
/// `phi` is an isomorphism from `src` onto the result.
pub fn transport_product(src: &HomAlgebra, phi: &Matrix) -> Result<HomAlgebra> {
    let n = src.dim();
    phi.require_shape(n, n)?;
    let inv = phi.inverse().map_err(|_| Error::Singular("transport map"))?;
    let pulled: Vec<Vector> = (0..n).map(|i| inv.column(i)).collect();
    let products: Vec<Vector> = (0..n * n)
        .map(|ij| phi.apply_unchecked(&src.mul_raw(&pulled[ij / n], &pulled[ij % n])))
        .collect();
    let twist = phi.mul_unchecked(src.twist()).mul_unchecked(&inv);
    HomAlgebra::from_products(src.name(), src.labels().to_vec(), &products, twist)
}

/// Block sum with the left summand in coordinates `0..a.dim()`. Colliding
/// right-hand labels get primes appended until unique.
pub fn direct_sum(a: &HomAlgebra, b: &HomAlgebra) -> HomAlgebra {
    let (n, m) = (a.dim(), b.dim());
    let d = n + m;
    let mut labels: Vec<String> = a.labels().to_vec();
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    for l in b.labels() {
        let mut label = l.clone();
        while taken.contains(&label) {
            label.push('\'');
        }
        taken.insert(label.clone());
        labels.push(label);
    }
    let mut entries = Vec::new();
    for (i, j, k, c) in a.nonzero_entries() {
        entries.push((i, j, k, c));
    }
    for (i, j, k, c) in b.nonzero_entries() {
        entries.push((n + i, n + j, n + k, c));
    }
    let mut twist = Matrix::zeros(d, d);
    for r in 0..n {
        for c in 0..n {
            twist.set(r, c, a.twist().get(r, c).clone());
        }
    }
    for r in 0..m {
        for c in 0..m {
            twist.set(n + r, n + c, b.twist().get(r, c).clone());
        }
    }
    HomAlgebra::from_entries(format!("{}+{}", a.name(), b.name()), labels, &entries, twist)
        .expect("block shapes are consistent")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: HomAlgebra,
    /// `q x n` matrix of the canonical projection.
    pub projection: Matrix,
    /// Standard basis indices used as coset representatives.
    pub representatives: Vec<usize>,
}

/// `A / I` on the cosets of the standard unit vectors at the non-pivot
/// columns of the ideal's canonical basis.
pub fn quotient(alg: &HomAlgebra, ideal: &Subspace) -> Result<Quotient> {
    if let Some(violation) = alg.is_hom_ideal(ideal)? {
        return Err(Error::NotIdeal(violation));
    }
    let n = alg.dim();
    let reps = ideal.complement_indices();
    let q = reps.len();
    let project = |v: &[Rational]| -> Vector {
        let reduced = ideal.reduce(v);
        reps.iter().map(|&r| reduced[r].clone()).collect()
    };
    let projection = Matrix::from_columns(q, &(0..n).map(|j| project(&unit_vector(n, j))).collect::<Vec<_>>())?;
    let products: Vec<Vector> = (0..q * q)
        .map(|ab| project(&alg.basis_product(reps[ab / q], reps[ab % q])))
        .collect();
    let twist_cols: Vec<Vector> = reps.iter().map(|&r| project(&alg.twist().column(r))).collect();
    let twist = Matrix::from_columns(q, &twist_cols)?;
    let labels = reps.iter().map(|&r| alg.labels()[r].clone()).collect();
    let algebra = HomAlgebra::from_products(format!("{}/I", alg.name()), labels, &products, twist)?;
    Ok(Quotient {
        algebra,
        projection,
        representatives: reps,
    })
}

/// Output of [`idempotent_split`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSplit {
    pub quotient: Quotient,
    pub kernel_space: Subspace,
    /// `Ker(alpha)` as an algebra in the canonical basis of `kernel_space`.
    pub kernel: HomAlgebra,
    /// `quotient.algebra (+) kernel`.
    pub sum: HomAlgebra,
    /// `x -> (pi(x), x - alpha(x))` in the coordinates of `sum`.
    pub iso: Matrix,
    /// `None` iff `iso` is an algebra morphism `alg -> sum`.
    pub violation: Option<MorphismViolation>,
}

impl IdempotentSplit {
    /// The witness is invertible and passes the morphism check.
    pub fn is_verified(&self) -> bool {
        self.violation.is_none() && self.iso.is_invertible()
    }
}

/// Splits an algebra with `alpha^2 = alpha` as `A/Ker(alpha) (+) Ker(alpha)`.
///
/// The witness map is always returned; whether it is a morphism is recorded
/// rather than assumed.
pub fn idempotent_split(alg: &HomAlgebra) -> Result<IdempotentSplit> {
    let n = alg.dim();
    let alpha = alg.twist();
    if alpha.mul_unchecked(alpha) != *alpha {
        return Err(Error::NotIdempotent);
    }
    let kernel_space = alpha.kernel_subspace();
    let quotient = quotient(alg, &kernel_space)?;
    let kernel = alg.restrict(&kernel_space)?.with_name(format!("ker({})", alg.name()));
    let sum = direct_sum(&quotient.algebra, &kernel);
    let q = quotient.algebra.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|j| {
            let e = unit_vector(n, j);
            let residue = sub_vectors(&e, &alpha.column(j));
            let mut col = quotient.projection.column(j);
            col.extend(
                kernel_space
                    .coordinates(&residue)
                    .expect("alpha idempotent, so x - alpha x lies in the kernel"),
            );
            col
        })
        .collect();
    let iso = Matrix::from_columns(q + kernel.dim(), &columns)?;
    let violation = is_morphism(&iso, alg, &sum)?;
    Ok(IdempotentSplit {
        quotient,
        kernel_space,
        kernel,
        sum,
        iso,
        violation,
    })
}

/// `{(x, f x)}` inside `src (+) dst`.
pub fn graph_subspace(f: &Matrix, src: &HomAlgebra, dst: &HomAlgebra) -> Result<Subspace> {
    let (n, m) = (src.dim(), dst.dim());
    f.require_shape(m, n)?;
    let vectors: Vec<Vector> = (0..n)
        .map(|j| {
            let mut v = unit_vector(n, j);
            v.extend(f.column(j));
            v
        })
        .collect();
    Subspace::canonicalize(&vectors, n + m)
}

/// Graph criterion: `f` is a morphism iff its graph is a Hom-subalgebra of
/// the direct sum. Returns both sides so callers can compare them.
pub fn graph_criterion(f: &Matrix, src: &HomAlgebra, dst: &HomAlgebra) -> Result<(bool, bool)> {
    let morphism = is_morphism(f, src, dst)?.is_none();
    let graph = graph_subspace(f, src, dst)?;
    let closed = direct_sum(src, dst).is_hom_subalgebra(&graph)?;
    Ok((morphism, closed))
}

/// The zero-dimensional algebra.
pub fn zero_algebra(name: &str) -> HomAlgebra {
    HomAlgebra::new(name, Vec::new(), zero_vector(0), Matrix::zeros(0, 0)).expect("empty shapes")
}
