use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::echelon;
use super::field::{Field, FieldElement};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Dense n×n matrix over a [`Field`], indices `0..n`, immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    field: Field,
    n: usize,
    entries: Vec<FieldElement>,
}

impl SquareMatrix {
    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimMismatch { expected: n, found: row.len() });
            }
            if row.iter().any(|e| e.field() != field) {
                return Err(Error::DescriptorMismatch);
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { field, n, entries })
    }

    /// Builds from `f(i, j)`; panics if `n == 0` or an entry is from another field.
    pub fn from_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        assert!(n > 0, "matrix must have at least one row");
        let entries: Vec<_> = (0..n * n).map(|k| f(k / n, k % n)).collect();
        assert!(entries.iter().all(|e| e.field() == field), "entry from another field");
        SquareMatrix { field, n, entries }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, |_, _| field.zero())
    }

    pub fn diagonal(field: Field, diag: &[FieldElement]) -> Self {
        Self::from_fn(field, diag.len(), |i, j| if i == j { diag[i].clone() } else { field.zero() })
    }

    /// The matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: Field, cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for c in cols {
            if c.field() != field {
                return Err(Error::DescriptorMismatch);
            }
            if c.dim() != n {
                return Err(Error::DimMismatch { expected: n, found: c.dim() });
            }
        }
        Ok(Self::from_fn(field, n, |i, j| cols[j].get(i).clone()))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_entries_unchecked(self.field, (0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        SquareMatrix { field: self.field, n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// `self − c·I`.
    pub fn shift(&self, c: &FieldElement) -> Self {
        Self::from_fn(self.field, self.n, |i, j| if i == j { self.get(i, j) - c } else { self.get(i, j).clone() })
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    fn compatible(&self, other: &SquareMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch);
        }
        if self.n != other.n {
            return Err(Error::DimMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.compatible(other)?;
        Ok(self * other)
    }

    pub fn try_add(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.compatible(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.compatible(other)?;
        Ok(self - other)
    }

    /// Matrix–vector product `self · v`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.field() != self.field {
            return Err(Error::DescriptorMismatch);
        }
        if v.dim() != self.n {
            return Err(Error::DimMismatch { expected: self.n, found: v.dim() });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        let entries = (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.entries())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        Vector::from_entries_unchecked(self.field, entries)
    }

    pub fn pow(&self, mut exp: u32) -> SquareMatrix {
        let mut acc = Self::identity(self.field, self.n);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        echelon::rank(self.rows(), self.n)
    }

    /// Basis of the null space, one vector per free column of the reduced
    /// echelon form; empty for invertible matrices.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        echelon::nullspace(self.field, self.rows(), self.n)
            .into_iter()
            .map(|v| Vector::from_entries_unchecked(self.field, v))
            .collect()
    }

    /// Exact inverse by Gauss–Jordan on `[self | I]`.
    pub fn inverse(&self) -> Result<SquareMatrix> {
        let n = self.n;
        let rows = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        let ech = echelon::rref(rows, 2 * n);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(self.field, n, |i, j| ech.rows[i][n + j].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Rescaled so the first nonzero entry in reading order is 1.
    pub fn normalized(&self) -> SquareMatrix {
        match self.entries.iter().find(|x| !x.is_zero()) {
            Some(x) => self.scale(&x.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Irreducible tridiagonal: zero outside the three central diagonals,
    /// nonzero on the sub- and superdiagonal.
    pub fn is_irreducible_tridiagonal(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let off = i.abs_diff(j);
                match off {
                    0 => true,
                    1 => !self.get(i, j).is_zero(),
                    _ => self.get(i, j).is_zero(),
                }
            })
        })
    }
}

impl<'a> Mul<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;

    /// Panics on field or dimension mismatch; see [`SquareMatrix::try_mul`].
    fn mul(self, rhs: &'a SquareMatrix) -> SquareMatrix {
        assert!(self.field == rhs.field && self.n == rhs.n, "incompatible matrices");
        let n = self.n;
        let mut entries = vec![self.field.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let e = &mut entries[i * n + j];
                        *e = &*e + &(a * b);
                    }
                }
            }
        }
        SquareMatrix { field: self.field, n, entries }
    }
}

macro_rules! entrywise {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr<&'a SquareMatrix> for &'a SquareMatrix {
            type Output = SquareMatrix;
            fn $method(self, rhs: &'a SquareMatrix) -> SquareMatrix {
                assert!(self.field == rhs.field && self.n == rhs.n, "incompatible matrices");
                SquareMatrix {
                    field: self.field,
                    n: self.n,
                    entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.$method(b)).collect(),
                }
            }
        }
    };
}

entrywise!(Add, add);
entrywise!(Sub, sub);

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}
