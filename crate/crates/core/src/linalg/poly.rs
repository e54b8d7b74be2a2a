use std::fmt;

use super::field::{Field, FieldElement};
use super::matrix::SquareMatrix;
use crate::error::{Error, Result};

/// Univariate polynomial over a field, coefficients lowest degree first
/// with trailing zeros stripped (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(field: Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(Self::from_coeffs_unchecked(field, coeffs))
    }

    pub(crate) fn from_coeffs_unchecked(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_coeffs_unchecked(c.field(), vec![c])
    }

    /// The indeterminate λ.
    pub fn x(field: Field) -> Self {
        Polynomial { field, coeffs: vec![field.zero(), field.one()] }
    }

    /// `∏ (λ − r)` over the given roots.
    pub fn from_roots(field: Field, roots: &[FieldElement]) -> Self {
        roots.iter().fold(Self::constant(field.one()), |acc, r| {
            acc.mul(&Polynomial { field, coeffs: vec![-r, field.one()] })
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn monic(&self) -> Result<Polynomial> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.inv().expect("nonzero leading coefficient")))
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Self::from_coeffs_unchecked(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs_unchecked(self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs_unchecked(self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs_unchecked(self.field, out)
    }

    /// Multiplication by λ.
    pub fn shift_up(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.field.zero()];
        c.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field, coeffs: c }
    }

    pub fn derivative(&self) -> Polynomial {
        Self::from_coeffs_unchecked(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &self.field.from_i64(i as i64)).collect(),
        )
    }

    /// Euclidean division: `(q, r)` with `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().and_then(FieldElement::inv).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs_unchecked(self.field, quot), Self::from_coeffs_unchecked(self.field, rem)))
    }

    /// Synthetic division by `(λ − r)`: quotient and the remainder `p(r)`.
    pub fn deflate(&self, r: &FieldElement) -> (Polynomial, FieldElement) {
        if self.is_zero() {
            return (self.clone(), self.field.zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![self.field.zero(); n - 1];
        let mut carry = self.field.zero();
        for k in (0..n).rev() {
            carry = &self.coeffs[k] + &(&carry * r);
            if k > 0 {
                quot[k - 1] = carry.clone();
            }
        }
        (Self::from_coeffs_unchecked(self.field, quot), carry)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a matrix.
    pub fn eval_at_matrix(&self, m: &SquareMatrix) -> Result<SquareMatrix> {
        if m.field() != self.field {
            return Err(Error::DescriptorMismatch);
        }
        let n = m.dim();
        let id = SquareMatrix::identity(self.field, n);
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(SquareMatrix::zero(self.field, n), |acc, c| &(&acc * m) + &id.scale(c)))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})λ")?,
                _ => write!(f, "({c})λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
