//! Hom-bimodules `(V, alpha_V, rho_l, rho_r)` over a Hom-algebra, the module
//! Hom-associators and the alternating chain they must satisfy.

use std::fmt;

use num::Zero;

use crate::algebra::{Element, HomAlgebra};
use crate::constructions::{untwist, yau_twist};
use crate::error::{Error, Result};
use crate::exactlin::{
    add_vectors, format_vector, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix,
    Rational, Subspace, Vector,
};
use crate::structure::{Decomposition, OperatorSet, Reason, Status, StructureVerdict};

/// Equality compares base, twist and both action tensors; the name is a tag.
#[derive(Clone, Debug)]
pub struct HomBimodule {
    name: String,
    base: HomAlgebra,
    dim: usize,
    twist: Matrix,
    /// `l[i][p][q]` at `(i * m + p) * m + q`: `rho_l(b_i, v_p) = sum_q l v_q`.
    left: Vec<Rational>,
    /// `r[p][i][q]` at `(p * n + i) * m + q`: `rho_r(v_p, b_i) = sum_q r v_q`.
    right: Vec<Rational>,
}

impl PartialEq for HomBimodule {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.twist == other.twist
            && self.left == other.left
            && self.right == other.right
    }
}

impl Eq for HomBimodule {}

/// Which of the three module Hom-associators to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlotPattern {
    /// `(v, a, b)`: `rho_r(rho_r(v, a), alpha_A b) - rho_r(alpha_V v, mu(a, b))`
    VAA,
    /// `(a, v, b)`: `rho_r(rho_l(a, v), alpha_A b) - rho_l(alpha_A a, rho_r(v, b))`
    AVA,
    /// `(a, b, v)`: `rho_l(mu(a, b), alpha_V v) - rho_l(alpha_A a, rho_l(b, v))`
    AAV,
}

impl SlotPattern {
    pub fn name(self) -> &'static str {
        match self {
            SlotPattern::VAA => "V(x)A(x)A",
            SlotPattern::AVA => "A(x)V(x)A",
            SlotPattern::AAV => "A(x)A(x)V",
        }
    }
}

/// Flags of [`HomBimodule::check`] in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BimoduleAxiom {
    /// `alpha_V o rho_l = rho_l o (alpha_A x alpha_V)` on pairs `(i, p)`.
    LeftIntertwining,
    /// `alpha_V o rho_r = rho_r o (alpha_V x alpha_A)` on pairs `(p, i)`.
    RightIntertwining,
    /// `as(a, v, b) + as(v, a, b) = 0` on `(a, v, b) = (b_i, v_p, b_j)`.
    ChainFirst,
    /// `as(v, a, b) + as(b, a, v) = 0` on `(v, a, b) = (v_p, b_i, b_j)`.
    ChainSecond,
    /// `as(b, a, v) + as(a, b, v) = 0` on `(b, a, v) = (b_j, b_i, v_p)`.
    ChainThird,
}

impl BimoduleAxiom {
    pub const ALL: [BimoduleAxiom; 5] = [
        BimoduleAxiom::LeftIntertwining,
        BimoduleAxiom::RightIntertwining,
        BimoduleAxiom::ChainFirst,
        BimoduleAxiom::ChainSecond,
        BimoduleAxiom::ChainThird,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BimoduleAxiom::LeftIntertwining => "left-intertwining",
            BimoduleAxiom::RightIntertwining => "right-intertwining",
            BimoduleAxiom::ChainFirst => "as(a,v,b) = -as(v,a,b)",
            BimoduleAxiom::ChainSecond => "-as(v,a,b) = as(b,a,v)",
            BimoduleAxiom::ChainThird => "as(b,a,v) = -as(a,b,v)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleWitness {
    pub axiom: BimoduleAxiom,
    /// Algebra basis indices and module basis index, in the order named by
    /// the axiom (`[i, p]`, `[p, i]` or `[i, p, j]`).
    pub indices: Vec<usize>,
    pub defect: Vector,
}

impl fmt::Display for BimoduleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {:?}: defect {}",
            self.axiom.name(),
            self.indices,
            format_vector(&self.defect)
        )
    }
}

/// Axiom flags of a bimodule. A flag is false iff its witness is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAssociatorReport {
    pub witnesses: [Option<BimoduleWitness>; 5],
}

impl ModuleAssociatorReport {
    pub fn holds(&self, axiom: BimoduleAxiom) -> bool {
        self.witness(axiom).is_none()
    }

    pub fn witness(&self, axiom: BimoduleAxiom) -> Option<&BimoduleWitness> {
        let idx = BimoduleAxiom::ALL.iter().position(|&a| a == axiom).expect("listed");
        self.witnesses[idx].as_ref()
    }

    pub fn intertwining_holds(&self) -> bool {
        self.holds(BimoduleAxiom::LeftIntertwining) && self.holds(BimoduleAxiom::RightIntertwining)
    }

    pub fn chain_holds(&self) -> bool {
        self.holds(BimoduleAxiom::ChainFirst)
            && self.holds(BimoduleAxiom::ChainSecond)
            && self.holds(BimoduleAxiom::ChainThird)
    }

    pub fn all_hold(&self) -> bool {
        self.witnesses.iter().all(Option::is_none)
    }

    pub fn flags(&self) -> [bool; 5] {
        BimoduleAxiom::ALL.map(|a| self.holds(a))
    }
}

impl HomBimodule {
    pub fn new(
        name: impl Into<String>,
        base: HomAlgebra,
        twist: Matrix,
        left: Vec<Rational>,
        right: Vec<Rational>,
    ) -> Result<Self> {
        let m = twist.require_square()?;
        let n = base.dim();
        for len in [left.len(), right.len()] {
            if len != n * m * m {
                return Err(Error::DimensionMismatch {
                    expected: n * m * m,
                    found: len,
                });
            }
        }
        Ok(Self {
            name: name.into(),
            base,
            dim: m,
            twist,
            left,
            right,
        })
    }

    /// Sparse constructor: `left` holds `(i, p, q, c)`, `right` holds `(p, i, q, c)`.
    pub fn from_entries(
        name: impl Into<String>,
        base: HomAlgebra,
        twist: Matrix,
        left: &[(usize, usize, usize, Rational)],
        right: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let m = twist.require_square()?;
        let n = base.dim();
        let mut l = zero_vector(n * m * m);
        let mut r = zero_vector(n * m * m);
        let range = |locus: &str, idx: usize, dim: usize| -> Result<()> {
            if idx >= dim {
                return Err(Error::IndexOutOfRange {
                    locus: locus.into(),
                    index: idx,
                    dim,
                });
            }
            Ok(())
        };
        for (i, p, q, c) in left {
            range("left action algebra index", *i, n)?;
            range("left action module index", *p, m)?;
            range("left action module index", *q, m)?;
            l[(i * m + p) * m + q] += c;
        }
        for (p, i, q, c) in right {
            range("right action module index", *p, m)?;
            range("right action algebra index", *i, n)?;
            range("right action module index", *q, m)?;
            r[(p * n + i) * m + q] += c;
        }
        Self::new(name, base, twist, l, r)
    }

    /// `V = A`, both actions given by `mu`, `alpha_V = alpha`.
    pub fn regular(alg: &HomAlgebra) -> Self {
        let n = alg.dim();
        let mut right = zero_vector(n * n * n);
        for (i, j, k, c) in alg.nonzero_entries() {
            right[(i * n + j) * n + k] = c;
        }
        let left = right.clone();
        Self::new(format!("regular:{}", alg.name()), alg.clone(), alg.twist().clone(), left, right)
            .expect("regular shapes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn left_constants(&self) -> &[Rational] {
        &self.left
    }

    pub fn right_constants(&self) -> &[Rational] {
        &self.right
    }

    pub fn left_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let m = self.dim;
        let mut out = Vec::new();
        for (idx, c) in self.left.iter().enumerate() {
            if !c.is_zero() {
                out.push((idx / (m * m), (idx / m) % m, idx % m, c.clone()));
            }
        }
        out
    }

    pub fn right_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let (n, m) = (self.base.dim(), self.dim);
        let mut out = Vec::new();
        for (idx, c) in self.right.iter().enumerate() {
            if !c.is_zero() {
                out.push((idx / (n * m), (idx / m) % n, idx % m, c.clone()));
            }
        }
        out
    }

    /// Matrix of `v -> rho_l(b_i, v)`.
    pub fn left_operator(&self, i: usize) -> Matrix {
        let m = self.dim;
        let mut op = Matrix::zeros(m, m);
        for p in 0..m {
            for q in 0..m {
                op.set(q, p, self.left[(i * m + p) * m + q].clone());
            }
        }
        op
    }

    /// Matrix of `v -> rho_r(v, b_i)`.
    pub fn right_operator(&self, i: usize) -> Matrix {
        let (n, m) = (self.base.dim(), self.dim);
        let mut op = Matrix::zeros(m, m);
        for p in 0..m {
            for q in 0..m {
                op.set(q, p, self.right[(p * n + i) * m + q].clone());
            }
        }
        op
    }

    /// The module twist followed by the left and right operators of each
    /// algebra basis vector; subbimodules are exactly their invariant subspaces.
    pub fn operator_set(&self) -> OperatorSet {
        let mut ops = vec![self.twist.clone()];
        for i in 0..self.base.dim() {
            ops.push(self.left_operator(i));
            ops.push(self.right_operator(i));
        }
        OperatorSet::new(self.dim, ops).expect("m x m operators")
    }

    pub(crate) fn act_left_raw(&self, a: &[Rational], v: &[Rational]) -> Vector {
        let m = self.dim;
        let mut out = zero_vector(m);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (p, vp) in v.iter().enumerate() {
                if vp.is_zero() {
                    continue;
                }
                let c = ai * vp;
                for q in 0..m {
                    let l = &self.left[(i * m + p) * m + q];
                    if !l.is_zero() {
                        out[q] += &c * l;
                    }
                }
            }
        }
        out
    }

    pub(crate) fn act_right_raw(&self, v: &[Rational], a: &[Rational]) -> Vector {
        let (n, m) = (self.base.dim(), self.dim);
        let mut out = zero_vector(m);
        for (p, vp) in v.iter().enumerate() {
            if vp.is_zero() {
                continue;
            }
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                let c = vp * ai;
                for q in 0..m {
                    let r = &self.right[(p * n + i) * m + q];
                    if !r.is_zero() {
                        out[q] += &c * r;
                    }
                }
            }
        }
        out
    }

    fn check_module(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_algebra(&self, a: &[Rational]) -> Result<()> {
        if a.len() != self.base.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.dim(),
                found: a.len(),
            });
        }
        Ok(())
    }

    pub fn act_left(&self, a: &Element, v: &Element) -> Result<Element> {
        self.check_algebra(a.coords())?;
        self.check_module(v.coords())?;
        Ok(Element::new(self.act_left_raw(a.coords(), v.coords())))
    }

    pub fn act_right(&self, v: &Element, a: &Element) -> Result<Element> {
        self.check_module(v.coords())?;
        self.check_algebra(a.coords())?;
        Ok(Element::new(self.act_right_raw(v.coords(), a.coords())))
    }

    fn assoc_vaa(&self, v: &[Rational], a: &[Rational], b: &[Rational]) -> Vector {
        let alg = &self.base;
        let lhs = self.act_right_raw(&self.act_right_raw(v, a), &alg.twist_raw(b));
        let rhs = self.act_right_raw(&self.twist.apply_unchecked(v), &alg.mul_raw(a, b));
        sub_vectors(&lhs, &rhs)
    }

    fn assoc_ava(&self, a: &[Rational], v: &[Rational], b: &[Rational]) -> Vector {
        let alg = &self.base;
        let lhs = self.act_right_raw(&self.act_left_raw(a, v), &alg.twist_raw(b));
        let rhs = self.act_left_raw(&alg.twist_raw(a), &self.act_right_raw(v, b));
        sub_vectors(&lhs, &rhs)
    }

    fn assoc_aav(&self, a: &[Rational], b: &[Rational], v: &[Rational]) -> Vector {
        let alg = &self.base;
        let lhs = self.act_left_raw(&alg.mul_raw(a, b), &self.twist.apply_unchecked(v));
        let rhs = self.act_left_raw(&alg.twist_raw(a), &self.act_left_raw(b, v));
        sub_vectors(&lhs, &rhs)
    }

    /// Evaluates one module Hom-associator. The arguments are given in slot
    /// order, so `(v, a, b)` for [`SlotPattern::VAA`].
    pub fn module_hom_associator(
        &self,
        pattern: SlotPattern,
        t1: &Element,
        t2: &Element,
        t3: &Element,
    ) -> Result<Element> {
        let (n, m) = (self.base.dim(), self.dim);
        let expected = match pattern {
            SlotPattern::VAA => [m, n, n],
            SlotPattern::AVA => [n, m, n],
            SlotPattern::AAV => [n, n, m],
        };
        let got = [t1.len(), t2.len(), t3.len()];
        if got != expected {
            return Err(Error::PatternMismatch(pattern.name()));
        }
        let (x, y, z) = (t1.coords(), t2.coords(), t3.coords());
        Ok(Element::new(match pattern {
            SlotPattern::VAA => self.assoc_vaa(x, y, z),
            SlotPattern::AVA => self.assoc_ava(x, y, z),
            SlotPattern::AAV => self.assoc_aav(x, y, z),
        }))
    }

    /// All values of one pattern on basis triples, indexed
    /// `(t1 * d2 + t2) * d3 + t3` with `d_k` the slot dimensions.
    pub fn pattern_table(&self, pattern: SlotPattern) -> Vec<Vector> {
        let (n, m) = (self.base.dim(), self.dim);
        let dims = match pattern {
            SlotPattern::VAA => [m, n, n],
            SlotPattern::AVA => [n, m, n],
            SlotPattern::AAV => [n, n, m],
        };
        let mut out = Vec::with_capacity(dims.iter().product());
        for x in 0..dims[0] {
            for y in 0..dims[1] {
                for z in 0..dims[2] {
                    let (ux, uy, uz) = (
                        unit_vector(dims[0], x),
                        unit_vector(dims[1], y),
                        unit_vector(dims[2], z),
                    );
                    out.push(match pattern {
                        SlotPattern::VAA => self.assoc_vaa(&ux, &uy, &uz),
                        SlotPattern::AVA => self.assoc_ava(&ux, &uy, &uz),
                        SlotPattern::AAV => self.assoc_aav(&ux, &uy, &uz),
                    });
                }
            }
        }
        out
    }

    /// Checks both intertwining conditions and the alternating chain of module
    /// Hom-associators on all basis index triples; every flag is computed.
    pub fn check(&self) -> ModuleAssociatorReport {
        self.check_with(
            |b: &Self| (b.pattern_table(SlotPattern::VAA), b.pattern_table(SlotPattern::AVA), b.pattern_table(SlotPattern::AAV)),
        )
    }

    fn check_with(&self, tables: impl Fn(&Self) -> (Vec<Vector>, Vec<Vector>, Vec<Vector>)) -> ModuleAssociatorReport {
        let (n, m) = (self.base.dim(), self.dim);
        let mut witnesses: [Option<BimoduleWitness>; 5] = Default::default();
        let alpha_a = self.base.twist();

        'left: for i in 0..n {
            for p in 0..m {
                let lhs = self.twist.apply_unchecked(&self.act_left_raw(&unit_vector(n, i), &unit_vector(m, p)));
                let rhs = self.act_left_raw(&alpha_a.column(i), &self.twist.column(p));
                let defect = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&defect) {
                    witnesses[0] = Some(BimoduleWitness {
                        axiom: BimoduleAxiom::LeftIntertwining,
                        indices: vec![i, p],
                        defect,
                    });
                    break 'left;
                }
            }
        }
        'right: for p in 0..m {
            for i in 0..n {
                let lhs = self.twist.apply_unchecked(&self.act_right_raw(&unit_vector(m, p), &unit_vector(n, i)));
                let rhs = self.act_right_raw(&self.twist.column(p), &alpha_a.column(i));
                let defect = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&defect) {
                    witnesses[1] = Some(BimoduleWitness {
                        axiom: BimoduleAxiom::RightIntertwining,
                        indices: vec![p, i],
                        defect,
                    });
                    break 'right;
                }
            }
        }

        let (vaa, ava, aav) = tables(self);
        // slot layouts: vaa[(p*n + i)*n + j], ava[(i*m + p)*n + j], aav[(i*n + j)*m + p]
        let vaa_at = |p: usize, i: usize, j: usize| &vaa[(p * n + i) * n + j];
        let ava_at = |i: usize, p: usize, j: usize| &ava[(i * m + p) * n + j];
        let aav_at = |i: usize, j: usize, p: usize| &aav[(i * n + j) * m + p];
        for i in 0..n {
            for p in 0..m {
                for j in 0..n {
                    let checks = [
                        (2, BimoduleAxiom::ChainFirst, add_vectors(ava_at(i, p, j), vaa_at(p, i, j))),
                        (3, BimoduleAxiom::ChainSecond, add_vectors(vaa_at(p, i, j), aav_at(j, i, p))),
                        (4, BimoduleAxiom::ChainThird, add_vectors(aav_at(j, i, p), aav_at(i, j, p))),
                    ];
                    for (slot, axiom, defect) in checks {
                        if witnesses[slot].is_none() && !is_zero_vector(&defect) {
                            witnesses[slot] = Some(BimoduleWitness {
                                axiom,
                                indices: vec![i, p, j],
                                defect,
                            });
                        }
                    }
                }
            }
        }
        ModuleAssociatorReport { witnesses }
    }

    /// Recomputes the defect of a stored witness.
    pub fn witness_defect(&self, axiom: BimoduleAxiom, indices: &[usize]) -> Result<Vector> {
        let (n, m) = (self.base.dim(), self.dim);
        let check = |idx: usize, dim: usize| -> Result<()> {
            if idx >= dim {
                return Err(Error::IndexOutOfRange {
                    locus: "bimodule witness".into(),
                    index: idx,
                    dim,
                });
            }
            Ok(())
        };
        let alpha_a = self.base.twist();
        match axiom {
            BimoduleAxiom::LeftIntertwining | BimoduleAxiom::RightIntertwining => {
                if indices.len() != 2 {
                    return Err(Error::DimensionMismatch { expected: 2, found: indices.len() });
                }
            }
            _ => {
                if indices.len() != 3 {
                    return Err(Error::DimensionMismatch { expected: 3, found: indices.len() });
                }
            }
        }
        Ok(match axiom {
            BimoduleAxiom::LeftIntertwining => {
                let (i, p) = (indices[0], indices[1]);
                check(i, n)?;
                check(p, m)?;
                let lhs = self.twist.apply_unchecked(&self.act_left_raw(&unit_vector(n, i), &unit_vector(m, p)));
                sub_vectors(&lhs, &self.act_left_raw(&alpha_a.column(i), &self.twist.column(p)))
            }
            BimoduleAxiom::RightIntertwining => {
                let (p, i) = (indices[0], indices[1]);
                check(p, m)?;
                check(i, n)?;
                let lhs = self.twist.apply_unchecked(&self.act_right_raw(&unit_vector(m, p), &unit_vector(n, i)));
                sub_vectors(&lhs, &self.act_right_raw(&self.twist.column(p), &alpha_a.column(i)))
            }
            _ => {
                let (i, p, j) = (indices[0], indices[1], indices[2]);
                check(i, n)?;
                check(p, m)?;
                check(j, n)?;
                let (a, v, b) = (unit_vector(n, i), unit_vector(m, p), unit_vector(n, j));
                match axiom {
                    BimoduleAxiom::ChainFirst => add_vectors(&self.assoc_ava(&a, &v, &b), &self.assoc_vaa(&v, &a, &b)),
                    BimoduleAxiom::ChainSecond => add_vectors(&self.assoc_vaa(&v, &a, &b), &self.assoc_aav(&b, &a, &v)),
                    _ => add_vectors(&self.assoc_aav(&b, &a, &v), &self.assoc_aav(&a, &b, &v)),
                }
            }
        })
    }
}

/// Runs the axiom check of a Hom-bimodule.
pub fn is_hom_bimodule(bim: &HomBimodule) -> ModuleAssociatorReport {
    bim.check()
}

/// The alternating chain for ordinary associators
/// `(a, v, b) = (a.v).b - a.(v.b)` and its two siblings, with the twists
/// ignored. Intertwining flags are reported as holding.
pub fn check_alternative_bimodule(bim: &HomBimodule) -> ModuleAssociatorReport {
    let (n, m) = (bim.base.dim(), bim.dim);
    let alg = &bim.base;
    let mut vaa = Vec::with_capacity(m * n * n);
    for p in 0..m {
        for i in 0..n {
            for j in 0..n {
                let (v, a, b) = (unit_vector(m, p), unit_vector(n, i), unit_vector(n, j));
                let lhs = bim.act_right_raw(&bim.act_right_raw(&v, &a), &b);
                let rhs = bim.act_right_raw(&v, &alg.basis_product(i, j));
                vaa.push(sub_vectors(&lhs, &rhs));
            }
        }
    }
    let mut ava = Vec::with_capacity(m * n * n);
    for i in 0..n {
        for p in 0..m {
            for j in 0..n {
                let (a, v, b) = (unit_vector(n, i), unit_vector(m, p), unit_vector(n, j));
                let lhs = bim.act_right_raw(&bim.act_left_raw(&a, &v), &b);
                let rhs = bim.act_left_raw(&a, &bim.act_right_raw(&v, &b));
                ava.push(sub_vectors(&lhs, &rhs));
            }
        }
    }
    let mut aav = Vec::with_capacity(m * n * n);
    for i in 0..n {
        for j in 0..n {
            for p in 0..m {
                let (a, b, v) = (unit_vector(n, i), unit_vector(n, j), unit_vector(m, p));
                let lhs = bim.act_left_raw(&alg.basis_product(i, j), &v);
                let rhs = bim.act_left_raw(&a, &bim.act_left_raw(&b, &v));
                aav.push(sub_vectors(&lhs, &rhs));
            }
        }
    }
    let mut report = bim.check_with(move |_| (vaa.clone(), ava.clone(), aav.clone()));
    report.witnesses[0] = None;
    report.witnesses[1] = None;
    report
}

/// `delta = alpha_V^-1 o rho` over the untwisted base, with identity twist.
pub fn untwist_bimodule(bim: &HomBimodule, induced_base: &HomAlgebra) -> Result<HomBimodule> {
    let expected = untwist(&bim.base)?.induced;
    if &expected != induced_base {
        return Err(Error::BaseMismatch(
            "the supplied base is not the untwisted base of the bimodule".into(),
        ));
    }
    let inv = bim.twist.inverse().map_err(|_| Error::Singular("module twist"))?;
    let (left, right) = apply_to_actions(bim, &inv);
    Ok(HomBimodule::new(
        format!("{}|untwisted", bim.name),
        induced_base.clone(),
        Matrix::identity(bim.dim),
        left,
        right,
    )?)
}

fn apply_to_actions(bim: &HomBimodule, map: &Matrix) -> (Vec<Rational>, Vec<Rational>) {
    let m = bim.dim;
    let mut left = bim.left.clone();
    let mut right = bim.right.clone();
    for chunk in left.chunks_mut(m.max(1)).chain(right.chunks_mut(m.max(1))) {
        if m == 0 {
            break;
        }
        let image = map.apply_unchecked(chunk);
        chunk.clone_from_slice(&image);
    }
    (left, right)
}

/// `rho = alpha_V o delta` over the Yau twist of the base by `alpha_a`.
///
/// `alt_bim` must have identity twists on both module and base. `alpha_a`
/// must be a morphism of the base and `alpha_v` must satisfy both
/// compatibility equations; failures are refused with the offending pair.
pub fn twist_bimodule(alt_bim: &HomBimodule, alpha_a: &Matrix, alpha_v: &Matrix) -> Result<HomBimodule> {
    let (n, m) = (alt_bim.base.dim(), alt_bim.dim);
    if !alt_bim.twist.is_identity() || !alt_bim.base.twist().is_identity() {
        return Err(Error::Incompatible("the bimodule to twist must have identity twists".into()));
    }
    alpha_v.require_shape(m, m)?;
    let base = yau_twist(&alt_bim.base, alpha_a)?;
    for i in 0..n {
        for p in 0..m {
            let (a, v) = (unit_vector(n, i), unit_vector(m, p));
            let lhs = alpha_v.apply_unchecked(&alt_bim.act_left_raw(&a, &v));
            let rhs = alt_bim.act_left_raw(&alpha_a.column(i), &alpha_v.column(p));
            if lhs != rhs {
                return Err(Error::Incompatible(format!(
                    "alpha_V o delta_l != delta_l o (alpha_A x alpha_V) at algebra basis {i}, module basis {p}: defect {}",
                    format_vector(&sub_vectors(&lhs, &rhs))
                )));
            }
            let lhs = alpha_v.apply_unchecked(&alt_bim.act_right_raw(&v, &a));
            let rhs = alt_bim.act_right_raw(&alpha_v.column(p), &alpha_a.column(i));
            if lhs != rhs {
                return Err(Error::Incompatible(format!(
                    "alpha_V o delta_r != delta_r o (alpha_V x alpha_A) at module basis {p}, algebra basis {i}: defect {}",
                    format_vector(&sub_vectors(&lhs, &rhs))
                )));
            }
        }
    }
    let (left, right) = apply_to_actions(alt_bim, alpha_v);
    HomBimodule::new(format!("{}|twisted", alt_bim.name), base, alpha_v.clone(), left, right)
}

/// Block sum of two bimodules over the same base, left summand first.
pub fn direct_sum_bimodules(a: &HomBimodule, b: &HomBimodule) -> Result<HomBimodule> {
    if a.base != b.base {
        return Err(Error::BaseMismatch("summands have different bases".into()));
    }
    let (ma, mb) = (a.dim, b.dim);
    let m = ma + mb;
    let mut twist = Matrix::zeros(m, m);
    for r in 0..ma {
        for c in 0..ma {
            twist.set(r, c, a.twist.get(r, c).clone());
        }
    }
    for r in 0..mb {
        for c in 0..mb {
            twist.set(ma + r, ma + c, b.twist.get(r, c).clone());
        }
    }
    let mut left: Vec<_> = a.left_entries();
    left.extend(b.left_entries().into_iter().map(|(i, p, q, c)| (i, ma + p, ma + q, c)));
    let mut right: Vec<_> = a.right_entries();
    right.extend(b.right_entries().into_iter().map(|(p, i, q, c)| (ma + p, i, ma + q, c)));
    HomBimodule::from_entries(format!("{}+{}", a.name, b.name), a.base.clone(), twist, &left, &right)
}

/// Smallest subbimodule containing `seed`.
pub fn subbimodule_spin(bim: &HomBimodule, seed: &Subspace) -> Result<Subspace> {
    if seed.ambient_dim() != bim.dim {
        return Err(Error::DimensionMismatch {
            expected: bim.dim,
            found: seed.ambient_dim(),
        });
    }
    Ok(bim.operator_set().spin(seed.basis()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerImSubbimodules {
    pub kernel: Subspace,
    pub image: Subspace,
    pub kernel_is_subbimodule: bool,
    pub image_is_subbimodule: bool,
    /// The image flag is only claimed when the base twist is surjective.
    pub image_asserted: bool,
}

pub fn ker_im_subbimodules(bim: &HomBimodule) -> KerImSubbimodules {
    let ops = bim.operator_set();
    let kernel = bim.twist.kernel_subspace();
    let image = bim.twist.image();
    KerImSubbimodules {
        kernel_is_subbimodule: ops.is_invariant(&kernel),
        image_is_subbimodule: ops.is_invariant(&image),
        image_asserted: bim.base.twist().is_invertible(),
        kernel,
        image,
    }
}

/// Irreducibility verdict plus a decomposition into irreducible
/// subbimodules when one can be certified.
pub fn bimodule_irreducibility(bim: &HomBimodule, seed: u64, budget: usize) -> Decomposition {
    if bim.dim == 0 {
        return Decomposition {
            verdict: StructureVerdict::new(
                Status::CertifiedYes,
                Reason::Convention,
                "zero-dimensional module: irreducible by convention",
            ),
            components: Vec::new(),
            complete: Status::CertifiedYes,
        };
    }
    let red = bim.operator_set().decompose(seed, budget);
    let env_dim = red.top.envelope_dim();
    let verdict = match red.top.status {
        Status::CertifiedYes => StructureVerdict::new(
            Status::CertifiedYes,
            Reason::Burnside,
            format!("envelope dimension {} = {}^2", env_dim.unwrap_or(0), bim.dim),
        ),
        Status::CertifiedNo => {
            let source = red.top.source.as_ref().map(ToString::to_string).unwrap_or_default();
            StructureVerdict::new(
                Status::CertifiedNo,
                Reason::InvariantSubspace,
                format!("proper subbimodule from {source}; complete reducibility {}", red.status),
            )
            .with_witness(red.top.witness.clone().expect("NO carries a witness"))
        }
        Status::Undecided => StructureVerdict::new(
            Status::Undecided,
            Reason::Exhausted,
            "no certificate within the candidate catalog",
        ),
    };
    Decomposition {
        verdict: verdict.with_envelope(env_dim),
        components: red.components,
        complete: red.status,
    }
}
