use std::fmt;

use super::echelon;
use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// A column vector in K^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<FieldElement>,
}

impl Vector {
    pub fn new(field: Field, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(Vector { field, entries })
    }

    pub(crate) fn from_entries_unchecked(field: Field, entries: Vec<FieldElement>) -> Self {
        Vector { field, entries }
    }

    pub fn zeros(field: Field, n: usize) -> Self {
        Vector { field, entries: vec![field.zero(); n] }
    }

    /// The `i`-th standard basis vector of K^n.
    pub fn unit(field: Field, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.entries[i] = field.one();
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &FieldElement {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, c: &FieldElement) -> Vector {
        Vector { field: self.field, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|x| !x.is_zero())
    }

    /// Rescaled so the first nonzero entry is 1; the zero vector is returned
    /// unchanged.
    pub fn normalized(&self) -> Vector {
        match self.first_nonzero() {
            Some(k) => self.scale(&self.entries[k].inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// `Some(c)` when `self = c · other` and `other` is nonzero.
    pub fn ratio_to(&self, other: &Vector) -> Option<FieldElement> {
        let k = other.first_nonzero()?;
        let c = &self.entries[k] / &other.entries[k];
        (other.scale(&c) == *self).then_some(c)
    }

    /// Both vectors nonzero and spanning the same line.
    pub fn is_colinear(&self, other: &Vector) -> bool {
        !self.is_zero() && !other.is_zero() && self.normalized() == other.normalized()
    }

    pub fn into_entries(self) -> Vec<FieldElement> {
        self.entries
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

/// Rank of a family of vectors of common dimension.
pub fn rank_of(vectors: &[Vector]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    echelon::rank(
        vectors.iter().map(|v| v.entries().to_vec()).collect(),
        first.dim(),
    )
}
