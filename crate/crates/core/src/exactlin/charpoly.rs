//! Characteristic polynomials and rational root extraction.

use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::Result;

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `(x - root)`
    pub fn linear(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Distinct rational roots in increasing order.
    ///
    /// Candidates come from the rational root theorem. Nonzero roots are only
    /// searched when the relevant integers can be factored by trial division
    /// within a fixed bound; the root 0 is always detected.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(_) = self.degree() else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let reduced = &self.coeffs[shift..];
        if reduced.len() <= 1 {
            return roots;
        }
        // Clear denominators.
        let lcm = reduced
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = reduced
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let constant = ints[0].abs();
        let leading = ints[ints.len() - 1].abs();
        let (Some(ps), Some(qs)) = (divisors(&constant), divisors(&leading)) else {
            return roots;
        };
        let poly = Polynomial::new(reduced.to_vec());
        let mut found: Vec<Rational> = Vec::new();
        for p in &ps {
            for q in &qs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(p * BigInt::from(sign), q.clone());
                    if !found.contains(&cand) && poly.eval(&cand).is_zero() {
                        found.push(cand);
                    }
                }
            }
        }
        roots.extend(found);
        roots.sort();
        roots
    }
}

const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

/// Positive divisors of `n`, or `None` when `n` cannot be factored by trial
/// division up to the fixed bound.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        return None;
    }
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    loop {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        if d > TRIAL_DIVISION_LIMIT {
            return None;
        }
        let mut e = 0;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            e += 1;
        }
        if e > 0 {
            factors.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Monic characteristic polynomial `det(xI - m)`.
///
/// The matrix is first brought to upper Hessenberg form by exact similarity
/// transforms, then the determinant recurrence for Hessenberg matrices is
/// expanded. No step rounds.
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    let h = hessenberg(m);
    let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
    p.push(Polynomial::one());
    for k in 1..=n {
        let last = k - 1;
        let shifted = Polynomial::new(vec![-h.get(last, last).clone(), Rational::one()]);
        let mut pk = shifted.mul(&p[k - 1]);
        let mut prod = Rational::one();
        for i in 1..k {
            let r = last - i;
            prod *= h.get(r + 1, r);
            if prod.is_zero() {
                break;
            }
            let c = h.get(r, last) * &prod;
            if !c.is_zero() {
                let term: Vec<Rational> = p[r].coeffs.iter().map(|a| a * &c).collect();
                pk = sub_poly(&pk, &Polynomial::new(term));
            }
        }
        p.push(pk);
    }
    Ok(p.pop().expect("at least the constant polynomial"))
}

fn sub_poly(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = Rational::zero();
    Polynomial::new(
        (0..len)
            .map(|i| a.coeffs.get(i).unwrap_or(&zero) - b.coeffs.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn hessenberg(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else {
            continue;
        };
        if i != j + 1 {
            swap_rows(&mut h, i, j + 1);
            swap_cols(&mut h, i, j + 1);
        }
        let pivot = h.get(j + 1, j).clone();
        for k in j + 2..n {
            let t = h.get(k, j) / &pivot;
            if t.is_zero() {
                continue;
            }
            // row_k -= t * row_{j+1}; then col_{j+1} += t * col_k keeps similarity.
            for c in 0..n {
                let v = h.get(k, c) - &t * h.get(j + 1, c);
                h.set(k, c, v);
            }
            for r in 0..n {
                let v = h.get(r, j + 1) + &t * h.get(r, k);
                h.set(r, j + 1, v);
            }
        }
    }
    h
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let x = m.get(a, c).clone();
        let y = m.get(b, c).clone();
        m.set(a, c, y);
        m.set(b, c, x);
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for r in 0..m.rows() {
        let x = m.get(r, a).clone();
        let y = m.get(r, b).clone();
        m.set(r, a, y);
        m.set(r, b, x);
    }
}

/// Ranks of `(m - lambda I)^i` for `i = 1..=n`; a similarity invariant.
pub fn rank_sequence(m: &Matrix, lambda: &Rational) -> Result<Vec<usize>> {
    let n = m.require_square()?;
    let shifted = m.sub(&Matrix::scalar(n, lambda.clone()))?;
    let mut power = Matrix::identity(n);
    let mut ranks = Vec::with_capacity(n);
    for _ in 0..n {
        power = power.mul_unchecked(&shifted);
        let r = power.rank();
        let stable = ranks.last() == Some(&r);
        ranks.push(r);
        if stable {
            break;
        }
    }
    Ok(ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rational::{int, ratio};

    fn int_poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn identity_two_by_two() {
        let p = char_poly(&Matrix::identity(2)).unwrap();
        assert_eq!(p, int_poly(&[1, -2, 1]));
        assert_eq!(p.to_string(), "x^2 - 2x + 1");
    }

    #[test]
    fn minus_identity_is_power_of_x_plus_one() {
        let p = char_poly(&Matrix::scalar(8, int(-1))).unwrap();
        assert_eq!(p, int_poly(&[1, 1]).pow(8));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn companion_matrix_recovers_polynomial() {
        // companion of x^3 - 2x^2 + 3x - 5
        let m = Matrix::from_i64_rows(&[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        assert_eq!(char_poly(&m).unwrap(), int_poly(&[-5, 3, -2, 1]));
    }

    #[test]
    fn rational_roots_of_products_of_linear_factors() {
        let p = Polynomial::linear(ratio(1, 2))
            .mul(&Polynomial::linear(int(-3)))
            .mul(&Polynomial::linear(int(0)))
            .mul(&int_poly(&[1, 0, 1]));
        assert_eq!(p.rational_roots(), vec![int(-3), int(0), ratio(1, 2)]);
        assert!(int_poly(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(int_poly(&[0, 0, 1]).rational_roots(), vec![int(0)]);
    }

    #[test]
    fn rank_sequence_detects_jordan_blocks() {
        let jordan = Matrix::from_i64_rows(&[&[2, 1], &[0, 2]]);
        let diag = Matrix::scalar(2, int(2));
        assert_eq!(rank_sequence(&jordan, &int(2)).unwrap(), vec![1, 0]);
        assert_eq!(rank_sequence(&diag, &int(2)).unwrap(), vec![0, 0]);
    }
}
