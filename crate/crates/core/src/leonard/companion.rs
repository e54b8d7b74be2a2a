use super::verdict::verdict_for;
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, SquareMatrix};
use crate::split::{Orderings, PairSetup};

/// Result of conjugating a Leonard pair into the reversed bidiagonal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionForm {
    /// Columns `v₀..v_d` with `(A − θ_{d−i}I)vᵢ = vᵢ₊₁`.
    pub g: SquareMatrix,
    /// The split sequence `ϕ₁..ϕ_d` for `θ` reversed and `θ*` as given.
    pub phi: Vec<FieldElement>,
}

/// Finds `G` with `G⁻¹AG` lower bidiagonal (diagonal `θ_d..θ₀`, unit
/// subdiagonal) and `G⁻¹A*G` upper bidiagonal (diagonal `θ*₀..θ*_d`,
/// superdiagonal `ϕ₁..ϕ_d`). Both forms are checked before returning.
pub fn g_conjugation(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<CompanionForm> {
    companion_for(&PairSetup::new(a, a_star, Some(orderings))?)
}

pub(crate) fn companion_for(setup: &PairSetup) -> Result<CompanionForm> {
    if !verdict_for(setup).is_leonard_system {
        return Err(Error::NotLeonard);
    }
    let reversed = setup.with_theta_reversed();
    let cert = reversed.build_split()?;
    let g = cert.decomposition.basis_matrix();
    let g_inv = g.inverse()?;
    let field = g.field();
    let n = g.dim();
    let lower = SquareMatrix::from_fn(field, n, |i, j| match () {
        _ if i == j => reversed.theta(i).clone(),
        _ if i == j + 1 => field.one(),
        _ => field.zero(),
    });
    let upper = SquareMatrix::from_fn(field, n, |i, j| match () {
        _ if i == j => setup.theta_star(i).clone(),
        _ if j == i + 1 => cert.split_sequence[i].clone(),
        _ => field.zero(),
    });
    if g_inv.try_mul(setup.a())?.try_mul(&g)? != lower {
        return Err(Error::CertificateCheck("G⁻¹AG is not the reversed bidiagonal form".into()));
    }
    if g_inv.try_mul(setup.a_star())?.try_mul(&g)? != upper {
        return Err(Error::CertificateCheck("G⁻¹A*G is not upper bidiagonal".into()));
    }
    Ok(CompanionForm { g, phi: cert.split_sequence })
}
