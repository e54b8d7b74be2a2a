//! Subspaces of K^n held in reduced row echelon form, so that equality of
//! subspaces is structural equality.

use super::echelon;
use super::field::Field;
use super::matrix::SquareMatrix;
use super::vector::Vector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new() }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.field() != field {
                return Err(Error::DescriptorMismatch);
            }
            if v.dim() != ambient {
                return Err(Error::DimMismatch { expected: ambient, found: v.dim() });
            }
        }
        let ech = echelon::rref(vectors.iter().map(|v| v.entries().to_vec()).collect(), ambient);
        let basis = ech.rows.into_iter().map(|r| Vector::from_entries_unchecked(field, r)).collect();
        Ok(Subspace { field, ambient, basis })
    }

    pub fn column_space(m: &SquareMatrix) -> Self {
        Self::span(m.field(), m.dim(), &m.columns()).expect("columns share field and length")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// The canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut all = self.basis.clone();
        all.push(v.clone());
        Self::span(self.field, self.ambient, &all).map(|s| s.dim() == self.dim()).unwrap_or(false)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.field, self.ambient, &all).expect("compatible subspaces")
    }

    /// Intersection via the kernel of `[U | −W]`: each kernel vector
    /// `(x, y)` gives the common element `Σ xᵢuᵢ = Σ yⱼwⱼ`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Self::zero(self.field, self.ambient);
        }
        let rows = (0..self.ambient)
            .map(|k| {
                self.basis
                    .iter()
                    .map(|u| u.get(k).clone())
                    .chain(other.basis.iter().map(|w| -w.get(k)))
                    .collect()
            })
            .collect();
        let common: Vec<Vector> = echelon::nullspace(self.field, rows, a + b)
            .into_iter()
            .map(|x| {
                self.basis
                    .iter()
                    .zip(&x[..a])
                    .fold(Vector::zeros(self.field, self.ambient), |acc, (u, c)| acc.add(&u.scale(c)))
            })
            .collect();
        Self::span(self.field, self.ambient, &common).expect("compatible subspaces")
    }
}
