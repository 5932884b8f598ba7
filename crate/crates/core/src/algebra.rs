//! Hom-algebras given by structure constants and a twisting map, together
//! with the pointwise identity checks that define Hom-alternativity.
//!
//! A [`HomAlgebra`] of dimension `n` stores constants `c[i][j][k]` with
//! `mu(b_i, b_j) = sum_k c[i][j][k] b_k` and the twist `alpha` as an `n x n`
//! matrix acting on column vectors. Every identity here is multilinear, so it
//! is checked exhaustively on basis tuples and the result is exact.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, format_vector, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix, Rational,
    Subspace, Vector,
};

/// Equality compares labels, constants and twist; the name is a display tag.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    name: String,
    labels: Vec<String>,
    /// Dense constants, index `(i * n + j) * n + k`.
    product: Vec<Rational>,
    /// Nonzero `(k, c)` pairs for each basis pair, index `i * n + j`.
    sparse: Vec<Vec<(usize, Rational)>>,
    twist: Matrix,
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.product == other.product && self.twist == other.twist
    }
}

impl Eq for HomAlgebra {}

/// Coordinate vector of an algebra or module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vector,
}

impl Element {
    pub fn new(coords: Vector) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(zero_vector(dim))
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        Self::new(unit_vector(dim, index))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element::new(self.coords.iter().map(|x| c * x).collect())
    }
}

impl From<Vector> for Element {
    fn from(coords: Vector) -> Self {
        Self::new(coords)
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element lengths differ");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element lengths differ");
        Element::new(sub_vectors(&self.coords, &rhs.coords))
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.coords))
    }
}

/// The four defining identities checked by [`HomAlgebra::check_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `alpha(mu(b_i, b_j)) - mu(alpha b_i, alpha b_j)` on pairs.
    Multiplicativity,
    /// `as(b_i, b_j, b_k) + as(b_j, b_i, b_k)` on triples.
    LeftAlternativity,
    /// `as(b_i, b_j, b_k) + as(b_i, b_k, b_j)` on triples.
    RightAlternativity,
    /// `as(b_i, b_j, b_k)` on triples.
    HomAssociativity,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::Multiplicativity,
        Identity::LeftAlternativity,
        Identity::RightAlternativity,
        Identity::HomAssociativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Multiplicativity => "multiplicative",
            Identity::LeftAlternativity => "left-hom-alternative",
            Identity::RightAlternativity => "right-hom-alternative",
            Identity::HomAssociativity => "hom-associative",
        }
    }
}

/// A basis tuple at which an identity fails, with its nonzero defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityWitness {
    pub identity: Identity,
    pub indices: Vec<usize>,
    pub defect: Vector,
}

impl fmt::Display for IdentityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at basis {:?}: defect {}",
            self.identity.name(),
            self.indices,
            format_vector(&self.defect)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdentityCheck {
    pub witness: Option<IdentityWitness>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub multiplicative: IdentityCheck,
    pub left_alternative: IdentityCheck,
    pub right_alternative: IdentityCheck,
    pub hom_associative: IdentityCheck,
}

impl IdentityReport {
    pub fn get(&self, identity: Identity) -> &IdentityCheck {
        match identity {
            Identity::Multiplicativity => &self.multiplicative,
            Identity::LeftAlternativity => &self.left_alternative,
            Identity::RightAlternativity => &self.right_alternative,
            Identity::HomAssociativity => &self.hom_associative,
        }
    }

    /// Multiplicative and both-sided Hom-alternative.
    pub fn is_hom_alternative(&self) -> bool {
        self.multiplicative.holds() && self.left_alternative.holds() && self.right_alternative.holds()
    }

    /// Same three flags as [`IdentityReport::is_hom_alternative`].
    pub fn alternativity_flags(&self) -> [bool; 3] {
        [
            self.multiplicative.holds(),
            self.left_alternative.holds(),
            self.right_alternative.holds(),
        ]
    }

    /// Every stored witness re-evaluates to its recorded nonzero defect.
    pub fn reverify(&self, alg: &HomAlgebra) -> bool {
        Identity::ALL.iter().all(|&id| match &self.get(id).witness {
            None => true,
            Some(w) => {
                w.identity == id
                    && !is_zero_vector(&w.defect)
                    && alg.identity_defect(id, &w.indices).as_ref() == Ok(&w.defect)
            }
        })
    }
}

/// First failure found by [`is_morphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `f(mu_A(b_i, b_j)) != mu_B(f b_i, f b_j)`; `defect` is their difference.
    Product { i: usize, j: usize, defect: Vector },
    /// `f(alpha_A b_i) != alpha_B(f b_i)`.
    Twist { i: usize, defect: Vector },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::Product { i, j, defect } => write!(
                f,
                "product fails on basis pair ({i}, {j}) with defect {}",
                format_vector(defect)
            ),
            MorphismViolation::Twist { i, defect } => write!(
                f,
                "twist intertwining fails on basis vector {i} with defect {}",
                format_vector(defect)
            ),
        }
    }
}

/// Which closure condition of a two-sided Hom-ideal failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealCondition {
    /// `alpha(v)` left the subspace.
    Twist,
    /// `mu(v, b_i)` left the subspace.
    RightProduct { basis: usize },
    /// `mu(b_i, v)` left the subspace.
    LeftProduct { basis: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealViolation {
    pub condition: IdealCondition,
    /// The offending basis vector of the subspace.
    pub vector: Vector,
    /// The value that is not contained in the subspace.
    pub value: Vector,
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = format_vector(&self.vector);
        let val = format_vector(&self.value);
        match self.condition {
            IdealCondition::Twist => write!(f, "alpha{v} = {val} is outside"),
            IdealCondition::RightProduct { basis } => {
                write!(f, "mu({v}, b{basis}) = {val} is outside")
            }
            IdealCondition::LeftProduct { basis } => {
                write!(f, "mu(b{basis}, {v}) = {val} is outside")
            }
        }
    }
}

impl HomAlgebra {
    /// Builds an algebra from dense constants (`n^3` entries, index
    /// `(i * n + j) * n + k`) and an `n x n` twist.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        product: Vec<Rational>,
        twist: Matrix,
    ) -> Result<Self> {
        let n = labels.len();
        if product.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: product.len(),
            });
        }
        twist.require_shape(n, n)?;
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = &product[ij * n + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            name: name.into(),
            labels,
            product,
            sparse,
            twist,
        })
    }

    /// Builds an algebra from a sparse list of `(i, j, k, c)` constants; unlisted
    /// constants are zero and repeated entries accumulate.
    pub fn from_entries(
        name: impl Into<String>,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Rational)],
        twist: Matrix,
    ) -> Result<Self> {
        let n = labels.len();
        let mut product = zero_vector(n * n * n);
        for (i, j, k, c) in entries {
            for &idx in [i, j, k] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange {
                        locus: "product entry".into(),
                        index: idx,
                        dim: n,
                    });
                }
            }
            product[(i * n + j) * n + k] += c;
        }
        Self::new(name, labels, product, twist)
    }

    /// Builds an algebra from the products of basis pairs: `columns[i * n + j]`
    /// is `mu(b_i, b_j)`.
    pub fn from_products(
        name: impl Into<String>,
        labels: Vec<String>,
        products: &[Vector],
        twist: Matrix,
    ) -> Result<Self> {
        let n = labels.len();
        if products.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: products.len(),
            });
        }
        let mut product = Vec::with_capacity(n * n * n);
        for v in products {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            product.extend(v.iter().cloned());
        }
        Self::new(name, labels, product, twist)
    }

    pub fn default_labels(n: usize, first: usize) -> Vec<String> {
        (first..first + n).map(|i| format!("e{i}")).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.product[(i * n + j) * n + k]
    }

    /// `mu(b_i, b_j)` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        self.product[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn product_constants(&self) -> &[Rational] {
        &self.product
    }

    /// Nonzero `(i, j, k, c)` constants in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.sparse[i * n + j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn mul_raw(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.sparse[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in entries {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub(crate) fn twist_raw(&self, x: &[Rational]) -> Vector {
        self.twist.apply_unchecked(x)
    }

    pub(crate) fn associator_raw(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let left = self.mul_raw(&self.mul_raw(x, y), &self.twist_raw(z));
        let right = self.mul_raw(&self.twist_raw(x), &self.mul_raw(y, z));
        sub_vectors(&left, &right)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(x.coords())?;
        self.check_len(y.coords())?;
        Ok(Element::new(self.mul_raw(x.coords(), y.coords())))
    }

    pub fn apply_twist(&self, x: &Element) -> Result<Element> {
        self.check_len(x.coords())?;
        Ok(Element::new(self.twist_raw(x.coords())))
    }

    /// `mu(mu(x, y), alpha z) - mu(alpha x, mu(y, z))`
    pub fn hom_associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check_len(x.coords())?;
        self.check_len(y.coords())?;
        self.check_len(z.coords())?;
        Ok(Element::new(self.associator_raw(x.coords(), y.coords(), z.coords())))
    }

    /// Matrix of `v -> mu(b_i, v)`.
    pub fn left_operator(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.sparse[i * n + j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `v -> mu(v, b_i)`.
    pub fn right_operator(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.sparse[j * n + i] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// The twist followed by every left and right multiplication operator. Its
    /// invariant subspaces are exactly the two-sided Hom-ideals.
    pub fn multiplication_operators(&self) -> Vec<Matrix> {
        let n = self.dim();
        let mut ops = Vec::with_capacity(2 * n + 1);
        ops.push(self.twist.clone());
        for i in 0..n {
            ops.push(self.left_operator(i));
            ops.push(self.right_operator(i));
        }
        ops
    }

    /// Defect of `identity` at a basis pair (multiplicativity) or triple.
    pub fn identity_defect(&self, identity: Identity, indices: &[usize]) -> Result<Vector> {
        let n = self.dim();
        let expected = if identity == Identity::Multiplicativity { 2 } else { 3 };
        if indices.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: indices.len(),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange {
                locus: "identity witness".into(),
                index: bad,
                dim: n,
            });
        }
        let b = |i: usize| unit_vector(n, i);
        let assoc = |i, j, k| self.associator_raw(&b(i), &b(j), &b(k));
        Ok(match identity {
            Identity::Multiplicativity => {
                let (i, j) = (indices[0], indices[1]);
                let lhs = self.twist_raw(&self.basis_product(i, j));
                let rhs = self.mul_raw(&self.twist.column(i), &self.twist.column(j));
                sub_vectors(&lhs, &rhs)
            }
            Identity::LeftAlternativity => {
                let (i, j, k) = (indices[0], indices[1], indices[2]);
                crate::exactlin::add_vectors(&assoc(i, j, k), &assoc(j, i, k))
            }
            Identity::RightAlternativity => {
                let (i, j, k) = (indices[0], indices[1], indices[2]);
                crate::exactlin::add_vectors(&assoc(i, j, k), &assoc(i, k, j))
            }
            Identity::HomAssociativity => assoc(indices[0], indices[1], indices[2]),
        })
    }

    /// Checks multiplicativity on basis pairs and the polarized left and right
    /// Hom-alternativity plus Hom-associativity on basis triples. All four
    /// flags are always computed; the first failure of each is kept.
    pub fn check_identities(&self) -> IdentityReport {
        let n = self.dim();
        let multiplicative = IdentityCheck {
            witness: self.multiplicativity_witness(),
        };
        let twisted: Vec<Vector> = (0..n).map(|i| self.twist.column(i)).collect();

        // as(b_i, b_j, b_k) = mu(c_ij, alpha b_k) - mu(alpha b_i, c_jk)
        let products: Vec<Vector> = (0..n * n).map(|ij| self.basis_product(ij / n, ij % n)).collect();
        let mut assoc = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_raw(&products[i * n + j], &twisted[k]);
                    let right = self.mul_raw(&twisted[i], &products[j * n + k]);
                    assoc.push(sub_vectors(&left, &right));
                }
            }
        }
        let at = |i: usize, j: usize, k: usize| &assoc[(i * n + j) * n + k];

        let mut left_alternative = IdentityCheck::default();
        let mut right_alternative = IdentityCheck::default();
        let mut hom_associative = IdentityCheck::default();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if hom_associative.witness.is_none() && !is_zero_vector(at(i, j, k)) {
                        hom_associative.witness = Some(IdentityWitness {
                            identity: Identity::HomAssociativity,
                            indices: vec![i, j, k],
                            defect: at(i, j, k).clone(),
                        });
                    }
                    if left_alternative.witness.is_none() {
                        let d = crate::exactlin::add_vectors(at(i, j, k), at(j, i, k));
                        if !is_zero_vector(&d) {
                            left_alternative.witness = Some(IdentityWitness {
                                identity: Identity::LeftAlternativity,
                                indices: vec![i, j, k],
                                defect: d,
                            });
                        }
                    }
                    if right_alternative.witness.is_none() {
                        let d = crate::exactlin::add_vectors(at(i, j, k), at(i, k, j));
                        if !is_zero_vector(&d) {
                            right_alternative.witness = Some(IdentityWitness {
                                identity: Identity::RightAlternativity,
                                indices: vec![i, j, k],
                                defect: d,
                            });
                        }
                    }
                }
            }
        }

        IdentityReport {
            multiplicative,
            left_alternative,
            right_alternative,
            hom_associative,
        }
    }

    /// First basis pair breaking `alpha o mu = mu o (alpha x alpha)`.
    pub fn multiplicativity_witness(&self) -> Option<IdentityWitness> {
        let n = self.dim();
        let twisted: Vec<Vector> = (0..n).map(|i| self.twist.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.twist_raw(&self.basis_product(i, j));
                let defect = sub_vectors(&lhs, &self.mul_raw(&twisted[i], &twisted[j]));
                if !is_zero_vector(&defect) {
                    return Some(IdentityWitness {
                        identity: Identity::Multiplicativity,
                        indices: vec![i, j],
                        defect,
                    });
                }
            }
        }
        None
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_witness().is_none()
    }

    /// `mu(A, A)`, the first derived term.
    pub fn square(&self) -> Subspace {
        let n = self.dim();
        let products: Vec<Vector> = (0..n * n).map(|ij| self.basis_product(ij / n, ij % n)).collect();
        Subspace::canonicalize(&products, n).expect("products have length n")
    }

    /// Two-sided Hom-ideal test:`alpha(h)`, `mu(h, A)` and `mu(A, h)` stay in `h`.
    pub fn is_hom_ideal(&self, h: &Subspace) -> Result<Option<IdealViolation>> {
        let n = self.dim();
        if h.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: h.ambient_dim(),
            });
        }
        for v in h.basis() {
            let image = self.twist_raw(v);
            if !h.contains_vector(&image) {
                return Ok(Some(IdealViolation {
                    condition: IdealCondition::Twist,
                    vector: v.clone(),
                    value: image,
                }));
            }
        }
        for i in 0..n {
            let b = unit_vector(n, i);
            for v in h.basis() {
                let right = self.mul_raw(v, &b);
                if !h.contains_vector(&right) {
                    return Ok(Some(IdealViolation {
                        condition: IdealCondition::RightProduct { basis: i },
                        vector: v.clone(),
                        value: right,
                    }));
                }
                let left = self.mul_raw(&b, v);
                if !h.contains_vector(&left) {
                    return Ok(Some(IdealViolation {
                        condition: IdealCondition::LeftProduct { basis: i },
                        vector: v.clone(),
                        value: left,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Hom-subalgebra test: closed under `mu` and invariant under `alpha`.
    pub fn is_hom_subalgebra(&self, h: &Subspace) -> Result<bool> {
        self.check_len(&zero_vector(h.ambient_dim()))?;
        let basis = h.basis();
        let twist_ok = basis.iter().all(|v| h.contains_vector(&self.twist_raw(v)));
        let mul_ok = basis
            .iter()
            .all(|u| basis.iter().all(|v| h.contains_vector(&self.mul_raw(u, v))));
        Ok(twist_ok && mul_ok)
    }

    /// The algebra restricted to a Hom-subalgebra, expressed in the canonical
    /// basis of `h`. Labels are taken from the pivot columns.
    pub fn restrict(&self, h: &Subspace) -> Result<HomAlgebra> {
        if !self.is_hom_subalgebra(h)? {
            return Err(Error::NotSubalgebra);
        }
        let basis = h.basis();
        let d = basis.len();
        let coords = |v: &Vector| h.coordinates(v).expect("closure verified above");
        let products: Vec<Vector> = (0..d * d)
            .map(|ij| coords(&self.mul_raw(&basis[ij / d], &basis[ij % d])))
            .collect();
        let twist_cols: Vec<Vector> = basis.iter().map(|v| coords(&self.twist_raw(v))).collect();
        let twist = Matrix::from_columns(d, &twist_cols)?;
        let labels = h.pivots().into_iter().map(|p| self.labels[p].clone()).collect();
        HomAlgebra::from_products(format!("{}|sub", self.name), labels, &products, twist)
    }
}

/// Checks that `f: src -> dst` intertwines both products and both twists.
pub fn is_morphism(
    f: &Matrix,
    src: &HomAlgebra,
    dst: &HomAlgebra,
) -> Result<Option<MorphismViolation>> {
    let (n, m) = (src.dim(), dst.dim());
    f.require_shape(m, n)?;
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply_unchecked(&src.basis_product(i, j));
            let rhs = dst.mul_raw(&images[i], &images[j]);
            let defect = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                return Ok(Some(MorphismViolation::Product { i, j, defect }));
            }
        }
    }
    for i in 0..n {
        let lhs = f.apply_unchecked(&src.twist.column(i));
        let rhs = dst.twist_raw(&images[i]);
        let defect = sub_vectors(&lhs, &rhs);
        if !is_zero_vector(&defect) {
            return Ok(Some(MorphismViolation::Twist { i, defect }));
        }
    }
    Ok(None)
}

/// Linear combination helper used by the random-element property checks.
pub fn combine(coeffs: &[Rational], vectors: &[Vector], dim: usize) -> Vector {
    let mut out = zero_vector(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}
