//! Characteristic polynomials `det(λI − M)`.
//!
//! Over the rationals we use Faddeev–LeVerrier. Over GF(p) we use the
//! division-free Berkowitz recursion, because Faddeev–LeVerrier divides by
//! 1..n and those integers vanish modulo p once p ≤ n.

use super::field::{Field, FieldElement};
use super::matrix::SquareMatrix;
use super::poly::Polynomial;
use crate::error::{Error, Result};

pub fn char_poly(m: &SquareMatrix) -> Polynomial {
    match m.field() {
        Field::Rationals => faddeev_leverrier(m).expect("no division by zero in characteristic 0"),
        Field::Prime(_) => berkowitz(m),
    }
}

/// Berkowitz: peel off the leading row and column,
/// `χ(M) = T · χ(S)` with `T` the lower-triangular Toeplitz matrix whose
/// first column is `(1, −a, −R·C, −R·S·C, …, −R·S^{m−1}·C)`.
pub fn berkowitz(m: &SquareMatrix) -> Polynomial {
    let field = m.field();
    let n = m.dim();
    // highest degree first
    let mut p = vec![field.one()];
    for k in (0..n).rev() {
        let size = n - k - 1;
        let mut t = Vec::with_capacity(size + 2);
        t.push(field.one());
        t.push(-m.get(k, k));
        let mut w: Vec<FieldElement> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for _ in 0..size {
            let rc = (k + 1..n).zip(&w).fold(field.zero(), |acc, (j, x)| &acc + &(m.get(k, j) * x));
            t.push(-rc);
            w = (k + 1..n)
                .map(|i| (k + 1..n).zip(&w).fold(field.zero(), |acc, (j, x)| &acc + &(m.get(i, j) * x)))
                .collect();
        }
        let next = (0..size + 2)
            .map(|i| {
                (0..=i.min(size)).fold(field.zero(), |acc, j| &acc + &(&t[i - j] * &p[j]))
            })
            .collect();
        p = next;
    }
    p.reverse();
    Polynomial::new(field, p).expect("single field")
}

/// Faddeev–LeVerrier: `M_k = A·M_{k−1} + c_{n−k+1} I`,
/// `c_{n−k} = −tr(A·M_k)/k`. Fails with [`Error::DivisionByZero`] when some
/// `k ≤ n` is zero in the field.
pub fn faddeev_leverrier(a: &SquareMatrix) -> Result<Polynomial> {
    let field = a.field();
    let n = a.dim();
    let id = SquareMatrix::identity(field, n);
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut mk = SquareMatrix::zero(field, n);
    for k in 1..=n {
        mk = &(a * &mk) + &id.scale(&coeffs[n - k + 1]);
        let tr = (a * &mk).trace();
        let kk = field.from_i64(k as i64);
        if kk.is_zero() {
            return Err(Error::DivisionByZero);
        }
        coeffs[n - k] = -(tr / kk);
    }
    Polynomial::new(field, coeffs)
}
