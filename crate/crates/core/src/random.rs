//! Seeded generators of small associative algebras with known
//! endomorphisms, and of the Hom-associative (hence Hom-alternative)
//! algebras obtained by twisting them.
//!
//! Each sample is a block sum drawn from a few families, then disguised by a
//! random unit upper-triangular change of basis so that structure constants
//! are not sparse in the standard basis.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::bimodule::{direct_sum_bimodules, HomBimodule};
use crate::constructions::{direct_sum, transport_product, yau_twist};
use crate::exactlin::{int, zero_vector, Matrix, Rational, Vector};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x Q[x] / (x^(d+1))`, endomorphism `x -> sum a_i x^i`.
    Nilpotent,
    /// `Q[x] / (x^d)`, endomorphism `x -> sum a_i x^i` with no constant term.
    Truncated,
    /// `Q^d` with coordinatewise product, endomorphism a (partial) permutation.
    Diagonal,
    /// `M_2(Q)` with conjugation.
    Matrix2,
    /// Upper triangular `2 x 2` matrices with conjugation.
    Triangular2,
}

/// An associative algebra (identity twist) with an algebra endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub algebra: HomAlgebra,
    pub endomorphism: Matrix,
    pub families: Vec<Family>,
}

pub fn small_int(rng: &mut Rng64, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn random_vector(rng: &mut Rng64, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| small_int(rng, bound)).collect()
}

/// Random unit upper-triangular matrix.
pub fn unit_triangular(rng: &mut Rng64, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for r in 0..n {
        for c in r + 1..n {
            m.set(r, c, small_int(rng, 2));
        }
    }
    m
}

fn polynomial_power(p: &[Rational], k: usize, len: usize) -> Vector {
    // Coefficients indexed by degree, truncated to `len`.
    let mut out = zero_vector(len);
    out[0] = int(1);
    for _ in 0..k {
        let mut next = zero_vector(len);
        for (a, x) in out.iter().enumerate() {
            if x == &int(0) {
                continue;
            }
            for (b, y) in p.iter().enumerate() {
                if a + b < len {
                    next[a + b] += x * y;
                }
            }
        }
        out = next;
    }
    out
}

/// Substitution polynomial `a_1 x + ... + a_{len-1} x^{len-1}`.
fn substitution(rng: &mut Rng64, len: usize, invertible: bool) -> Vector {
    let mut p = zero_vector(len);
    for c in p.iter_mut().skip(1) {
        *c = small_int(rng, 2);
    }
    if len > 1 {
        p[1] = if invertible {
            int(*[-2, -1, 1, 2].choose(rng).expect("nonempty"))
        } else {
            int(0)
        };
    }
    p
}

fn nilpotent(rng: &mut Rng64, d: usize, invertible: bool) -> HomAlgebra {
    // Basis x^1 .. x^d at indices 0 .. d-1.
    let mut entries = Vec::new();
    for a in 1..=d {
        for b in 1..=d - a {
            entries.push((a - 1, b - 1, a + b - 1, int(1)));
        }
    }
    let p = substitution(rng, d + 1, invertible);
    let columns: Vec<Vector> = (1..=d).map(|k| polynomial_power(&p, k, d + 1)[1..].to_vec()).collect();
    let twist = Matrix::from_columns(d, &columns).expect("square");
    HomAlgebra::from_entries("nil", HomAlgebra::default_labels(d, 1), &entries, twist).expect("valid")
}

fn truncated(rng: &mut Rng64, d: usize, invertible: bool) -> HomAlgebra {
    // Basis 1, x, .., x^(d-1).
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d - a {
            entries.push((a, b, a + b, int(1)));
        }
    }
    let p = substitution(rng, d, invertible);
    let columns: Vec<Vector> = (0..d).map(|k| polynomial_power(&p, k, d)).collect();
    let twist = Matrix::from_columns(d, &columns).expect("square");
    HomAlgebra::from_entries("poly", HomAlgebra::default_labels(d, 0), &entries, twist).expect("valid")
}

fn diagonal(rng: &mut Rng64, d: usize, invertible: bool) -> HomAlgebra {
    let entries: Vec<_> = (0..d).map(|i| (i, i, i, int(1))).collect();
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let mut twist = Matrix::zeros(d, d);
    let dropped = if invertible { d } else { rng.gen_range(0..d) };
    for (i, &p) in perm.iter().enumerate() {
        if i != dropped {
            twist.set(p, i, int(1));
        }
    }
    HomAlgebra::from_entries("diag", HomAlgebra::default_labels(d, 1), &entries, twist).expect("valid")
}

fn invertible_2x2(rng: &mut Rng64, upper: bool) -> Matrix {
    loop {
        let c = if upper { int(0) } else { small_int(rng, 2) };
        let g = Matrix::new(2, 2, vec![small_int(rng, 2), small_int(rng, 2), c, small_int(rng, 2)]).expect("2x2");
        if g.is_invertible() {
            return g;
        }
    }
}

/// Conjugation `X -> g X g^-1` on the matrix units listed in `units`.
fn conjugation(g: &Matrix, units: &[(usize, usize)]) -> Matrix {
    let inv = g.inverse().expect("invertible");
    let columns: Vec<Vector> = units
        .iter()
        .map(|&(a, b)| {
            let mut e = Matrix::zeros(2, 2);
            e.set(a, b, int(1));
            let image = g.mul_unchecked(&e).mul_unchecked(&inv);
            units.iter().map(|&(r, c)| image.get(r, c).clone()).collect()
        })
        .collect();
    Matrix::from_columns(units.len(), &columns).expect("square")
}

fn matrix_units(rng: &mut Rng64, units: &[(usize, usize)], name: &str) -> HomAlgebra {
    let mut entries = Vec::new();
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            if b == c {
                let k = units.iter().position(|&u| u == (a, d)).expect("closed under product");
                entries.push((i, j, k, int(1)));
            }
        }
    }
    let labels = units.iter().map(|(a, b)| format!("E{}{}", a + 1, b + 1)).collect();
    let g = invertible_2x2(rng, units.len() == 3);
    HomAlgebra::from_entries(name, labels, &entries, conjugation(&g, units)).expect("valid")
}

fn block(rng: &mut Rng64, family: Family, d: usize, invertible: bool) -> HomAlgebra {
    match family {
        Family::Nilpotent => nilpotent(rng, d, invertible),
        Family::Truncated => truncated(rng, d, invertible),
        Family::Diagonal => diagonal(rng, d, invertible),
        Family::Matrix2 => matrix_units(rng, &[(0, 0), (0, 1), (1, 0), (1, 1)], "m2"),
        Family::Triangular2 => matrix_units(rng, &[(0, 0), (0, 1), (1, 1)], "t2"),
    }
}

/// A `dim`-dimensional associative algebra with an endomorphism, which is
/// invertible when `invertible` holds and may be singular otherwise.
pub fn associative_sample(seed: u64, dim: usize, invertible: bool) -> Sample {
    let mut rng = rng(seed);
    let mut remaining = dim;
    let mut families = Vec::new();
    let mut pair: Option<HomAlgebra> = None;
    while remaining > 0 {
        let mut options = vec![Family::Nilpotent, Family::Truncated, Family::Diagonal];
        if remaining >= 3 {
            options.push(Family::Triangular2);
        }
        if remaining >= 4 {
            options.push(Family::Matrix2);
        }
        let family = *options.choose(&mut rng).expect("nonempty");
        let size = match family {
            Family::Matrix2 => 4,
            Family::Triangular2 => 3,
            _ => rng.gen_range(1..=remaining),
        };
        // Singular endomorphisms come from one block only; others may stay invertible.
        let block_invertible = invertible || rng.gen_bool(0.5);
        let b = block(&mut rng, family, size, block_invertible);
        pair = Some(match pair {
            None => b,
            Some(acc) => direct_sum(&acc, &b),
        });
        families.push(family);
        remaining -= size;
    }
    let pair = pair.unwrap_or_else(|| crate::constructions::zero_algebra("empty"));
    let p = unit_triangular(&mut rng, dim);
    let disguised = transport_product(&pair, &p).expect("unit triangular is invertible");
    let name = format!("assoc[{seed}]");
    let algebra = HomAlgebra::new(
        name,
        HomAlgebra::default_labels(dim, 1),
        disguised.product_constants().to_vec(),
        Matrix::identity(dim),
    )
    .expect("valid");
    Sample {
        algebra,
        endomorphism: disguised.twist().clone(),
        families,
    }
}

/// Yau twist of a random associative algebra by its sampled endomorphism:
/// multiplicative, Hom-associative and hence Hom-alternative.
pub fn hom_associative(seed: u64, dim: usize, invertible: bool) -> HomAlgebra {
    let s = associative_sample(seed, dim, invertible);
    yau_twist(&s.algebra, &s.endomorphism)
        .expect("sampled maps are endomorphisms")
        .with_name(format!("twisted[{seed}]"))
}

/// Regular bimodule of a random Hom-associative algebra, or a direct sum of
/// two copies when `doubled` holds.
pub fn regular_bimodule(seed: u64, dim: usize, doubled: bool) -> HomBimodule {
    let regular = HomBimodule::regular(&hom_associative(seed, dim, false));
    if doubled {
        direct_sum_bimodules(&regular, &regular).expect("same base")
    } else {
        regular
    }
}
