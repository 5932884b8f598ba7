//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use homalt::exactlin::{int, Matrix, Rational, Subspace, Vector};
use num::{One, Zero};
use proptest::prelude::*;

pub fn int_matrix(n: usize, entries: &[i64]) -> Matrix {
    Matrix::new(n, n, entries.iter().map(|&x| int(x)).collect()).unwrap()
}

pub fn int_vector(entries: &[i64]) -> Vector {
    entries.iter().map(|&x| int(x)).collect()
}

/// Square matrices with entries in `-bound..=bound`.
pub fn square(n: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-bound..=bound, n * n).prop_map(move |e| int_matrix(n, &e))
}

/// Unit upper-triangular times unit lower-triangular: always invertible.
pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (prop::collection::vec(-2i64..=2, n * n), prop::collection::vec(-2i64..=2, n * n)).prop_map(move |(u, l)| {
        let mut upper = Matrix::identity(n);
        let mut lower = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                if c > r {
                    upper.set(r, c, int(u[r * n + c]));
                } else if c < r {
                    lower.set(r, c, int(l[r * n + c]));
                }
            }
        }
        upper.mul(&lower).unwrap()
    })
}

/// Lists of `count` vectors of length `n`.
pub fn vectors(n: usize, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), count)
        .prop_map(|vs| vs.iter().map(|v| int_vector(v)).collect())
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rows_of(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

type Poly = Vec<Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &Poly, b: &Poly, sign: bool) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        if sign {
            out[i] += y;
        } else {
            out[i] -= y;
        }
    }
    out
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![Rational::one()];
    }
    let mut total: Poly = Vec::new();
    for col in 0..n {
        if m[0][col].iter().all(Zero::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, x)| x.clone()).collect())
            .collect();
        total = poly_add(&total, &poly_mul(&m[0][col], &poly_det(&minor)), col % 2 == 0);
    }
    total
}

/// `det(x I - m)` by Laplace expansion over polynomial entries, lowest
/// degree first with trailing zeros trimmed.
pub fn charpoly_oracle(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut p = vec![-m.get(r, c).clone()];
                    if r == c {
                        p.push(Rational::one());
                    }
                    p
                })
                .collect()
        })
        .collect();
    let mut p = poly_det(&entries);
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Rank by plain Gaussian elimination on a copy.
pub fn rank_oracle(vectors: &[Vector]) -> usize {
    let mut rows: Vec<Vector> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                let sub: Vector = rows[rank].iter().map(|x| x * &f).collect();
                for (x, s) in rows[r].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Membership by rank comparison.
pub fn in_span_oracle(vectors: &[Vector], v: &Vector) -> bool {
    let mut with = vectors.to_vec();
    with.push(v.clone());
    rank_oracle(&with) == rank_oracle(vectors)
}

pub fn subspace(vs: &[Vector], n: usize) -> Subspace {
    Subspace::canonicalize(vs, n).unwrap()
}
