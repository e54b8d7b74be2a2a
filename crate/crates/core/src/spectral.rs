//! Multiplicity-free matrices and their primitive idempotents.
//!
//! For a multiplicity-free `A` with eigenvalues `θ₀, …, θ_d` (in a chosen
//! order) the primitive idempotents are
//!
//! ```text
//! Eᵢ = ∏_{j≠i} (A − θⱼ I) / (θᵢ − θⱼ)
//! ```
//!
//! and satisfy `A Eᵢ = θᵢ Eᵢ`, `Eᵢ Eⱼ = δᵢⱼ Eᵢ`, `Σ Eᵢ = I`, `A = Σ θᵢ Eᵢ`;
//! each has rank one and `Eᵢ V` is the θᵢ-eigenspace.

use crate::error::{Error, Result};
use crate::linalg::{char_poly, roots_in_field, FieldElement, SquareMatrix, Vector};

/// Eigenvalues of `m` in canonical order when `m` is multiplicity-free,
/// `None` otherwise.
pub fn multiplicity_free_eigenvalues(m: &SquareMatrix) -> Result<Option<Vec<FieldElement>>> {
    let roots = roots_in_field(&char_poly(m))?;
    if roots.len() == m.dim() && roots.iter().all(|(_, mult)| *mult == 1) {
        Ok(Some(roots.into_iter().map(|(r, _)| r).collect()))
    } else {
        Ok(None)
    }
}

/// `d+1` distinct eigenvalues, all in the ground field.
pub fn is_multiplicity_free(m: &SquareMatrix) -> Result<bool> {
    Ok(multiplicity_free_eigenvalues(m)?.is_some())
}

/// A multiplicity-free matrix together with an ordering of its eigenvalues
/// and the matching primitive idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    matrix: SquareMatrix,
    eigenvalues: Vec<FieldElement>,
    idempotents: Vec<SquareMatrix>,
}

impl SpectralData {
    /// Builds the idempotents in the given eigenvalue order, or in canonical
    /// order when `order` is `None`, and checks every spectral identity.
    pub fn new(m: &SquareMatrix, order: Option<&[FieldElement]>) -> Result<Self> {
        let canonical = multiplicity_free_eigenvalues(m)?.ok_or(Error::NotMultiplicityFree)?;
        let eigenvalues = match order {
            None => canonical,
            Some(order) => {
                check_permutation(&canonical, order)?;
                order.to_vec()
            }
        };
        let field = m.field();
        let n = m.dim();
        let idempotents = (0..n)
            .map(|i| {
                (0..n).filter(|&j| j != i).fold(SquareMatrix::identity(field, n), |acc, j| {
                    let denom = (&eigenvalues[i] - &eigenvalues[j]).inv().expect("distinct eigenvalues");
                    &acc * &m.shift(&eigenvalues[j]).scale(&denom)
                })
            })
            .collect();
        let sd = SpectralData { matrix: m.clone(), eigenvalues, idempotents };
        sd.verify()?;
        Ok(sd)
    }

    /// Rechecks `AEᵢ = θᵢEᵢ`, `EᵢEⱼ = δᵢⱼEᵢ`, `ΣEᵢ = I`, `A = ΣθᵢEᵢ` and
    /// `rank Eᵢ = 1`.
    pub fn verify(&self) -> Result<()> {
        let field = self.matrix.field();
        let n = self.matrix.dim();
        let fail = |what: &str| Err(Error::CertificateCheck(format!("spectral identity failed: {what}")));
        let mut sum = SquareMatrix::zero(field, n);
        let mut weighted = SquareMatrix::zero(field, n);
        for (i, (theta, e)) in self.eigenvalues.iter().zip(&self.idempotents).enumerate() {
            if &self.matrix * e != e.scale(theta) {
                return fail(&format!("A·E{i} = θ{i}·E{i}"));
            }
            if e.rank() != 1 {
                return fail(&format!("rank E{i} = 1"));
            }
            for (j, f) in self.idempotents.iter().enumerate() {
                let prod = e * f;
                let ok = if i == j { prod == *e } else { prod.is_zero() };
                if !ok {
                    return fail(&format!("E{i}·E{j}"));
                }
            }
            sum = &sum + e;
            weighted = &weighted + &e.scale(theta);
        }
        if sum != SquareMatrix::identity(field, n) {
            return fail("ΣEᵢ = I");
        }
        if weighted != self.matrix {
            return fail("A = ΣθᵢEᵢ");
        }
        Ok(())
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> &[FieldElement] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, i: usize) -> &FieldElement {
        &self.eigenvalues[i]
    }

    pub fn idempotents(&self) -> &[SquareMatrix] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &SquareMatrix {
        &self.idempotents[i]
    }

    /// `d`, one less than the matrix size.
    pub fn diameter(&self) -> usize {
        self.matrix.dim() - 1
    }

    /// A spanning vector of `EᵢV`: the first nonzero column of `Eᵢ`, scaled
    /// so its first nonzero entry is 1.
    pub fn eigenspace(&self, i: usize) -> Result<Vector> {
        let e = self
            .idempotents
            .get(i)
            .ok_or(Error::IndexOutOfRange { index: i, len: self.idempotents.len() })?;
        let col = e.columns().into_iter().find(|c| !c.is_zero()).expect("rank one idempotent");
        Ok(col.normalized())
    }

    /// The matrix whose `i`-th column spans `EᵢV`.
    pub fn eigenbasis(&self) -> SquareMatrix {
        let cols: Vec<Vector> = (0..self.matrix.dim()).map(|i| self.eigenspace(i).expect("in range")).collect();
        SquareMatrix::from_columns(self.matrix.field(), &cols).expect("square")
    }

    /// Same data with the eigenvalue order reversed.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.eigenvalues.reverse();
        out.idempotents.reverse();
        out
    }

    /// Same data listed in another eigenvalue order (no recomputation).
    pub fn reordered(&self, order: &[FieldElement]) -> Result<Self> {
        check_permutation(&self.eigenvalues, order)?;
        let idempotents = order
            .iter()
            .map(|t| {
                let k = self.eigenvalues.iter().position(|e| e == t).expect("checked permutation");
                self.idempotents[k].clone()
            })
            .collect();
        Ok(SpectralData { matrix: self.matrix.clone(), eigenvalues: order.to_vec(), idempotents })
    }
}

fn check_permutation(eigenvalues: &[FieldElement], order: &[FieldElement]) -> Result<()> {
    if order.len() != eigenvalues.len() {
        return Err(Error::BadOrdering(format!(
            "expected {} eigenvalues, got {}",
            eigenvalues.len(),
            order.len()
        )));
    }
    for (k, t) in order.iter().enumerate() {
        if !eigenvalues.contains(t) {
            return Err(Error::BadOrdering(format!("{t} is not an eigenvalue")));
        }
        if order[..k].contains(t) {
            return Err(Error::BadOrdering(format!("{t} listed twice")));
        }
    }
    Ok(())
}
