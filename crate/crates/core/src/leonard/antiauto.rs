use crate::error::{Error, Result};
use crate::linalg::{FieldElement, SquareMatrix};
use crate::spectral::SpectralData;
use crate::split::{Orderings, PairSetup};

/// Basis in which a conjugator is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisContext {
    Standard,
    /// The basis `v*₀..v*_d` of eigenvectors of `A*`.
    StarEigenbasis,
}

/// An invertible `H` with `H⁻¹AᵗH = A` and `H⁻¹A*ᵗH = A*`, so that
/// `X ↦ H⁻¹XᵗH` is an antiautomorphism fixing both matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antiautomorphism {
    pub conjugator: SquareMatrix,
    pub basis_context: BasisContext,
}

impl Antiautomorphism {
    /// `H⁻¹XᵗH`.
    pub fn apply(&self, x: &SquareMatrix) -> Result<SquareMatrix> {
        let h = &self.conjugator;
        h.inverse()?.try_mul(&x.transpose())?.try_mul(h)
    }

    /// Checks both fixed points and that applying the map twice is the
    /// identity on `A` and `A*`.
    pub fn verify(&self, a: &SquareMatrix, a_star: &SquareMatrix) -> Result<()> {
        for (name, m) in [("A", a), ("A*", a_star)] {
            let once = self.apply(m)?;
            if once != *m {
                return Err(Error::CertificateCheck(format!("H⁻¹{name}ᵗH differs from {name}")));
            }
            if self.apply(&once)? != *m {
                return Err(Error::CertificateCheck(format!("double conjugation moves {name}")));
            }
        }
        Ok(())
    }
}

/// Diagonal `D` with `D₀₀ = 1` and
/// `Dᵢᵢ = (B₀₁B₁₂⋯B_{i−1,i}) / (B₁₀B₂₁⋯B_{i,i−1})`, so that `D⁻¹BᵗD = B`
/// for irreducible tridiagonal `B`.
pub fn eigenbasis_diagonal(b: &SquareMatrix) -> Result<SquareMatrix> {
    if !b.is_irreducible_tridiagonal() {
        return Err(Error::NotIrreducibleTridiagonal);
    }
    let field = b.field();
    let mut diag = vec![field.one()];
    for i in 1..b.dim() {
        let next = &(&diag[i - 1] * b.get(i - 1, i)) / b.get(i, i - 1);
        diag.push(next);
    }
    let d = SquareMatrix::diagonal(field, &diag);
    if &(&d.inverse()? * &b.transpose()) * &d != *b {
        return Err(Error::CertificateCheck("D⁻¹BᵗD differs from B".into()));
    }
    Ok(d)
}

/// The conjugator `H = P⁻ᵗ D P⁻¹` with `P` the eigenvector matrix of `A*`
/// and `B = P⁻¹AP`, normalized so its first nonzero entry is 1 and checked
/// against both conjugation identities.
pub fn antiautomorphism_in_eigenbasis(a: &SquareMatrix, sd_star: &SpectralData) -> Result<Antiautomorphism> {
    let p = sd_star.eigenbasis();
    let p_inv = p.inverse()?;
    let b = p_inv.try_mul(a)?.try_mul(&p)?;
    let d = eigenbasis_diagonal(&b)?;
    let h = p_inv.transpose().try_mul(&d)?.try_mul(&p_inv)?.normalized();
    let anti = Antiautomorphism { conjugator: h, basis_context: BasisContext::Standard };
    anti.verify(a, sd_star.matrix())?;
    Ok(anti)
}

/// Basis of `{H : AᵗH = HA, A*ᵗH = HA*}`, each element normalized.
pub fn conjugator_space(a: &SquareMatrix, a_star: &SquareMatrix) -> Result<Vec<SquareMatrix>> {
    let field = a.field();
    if field != a_star.field() {
        return Err(Error::DescriptorMismatch);
    }
    let n = a.dim();
    if n != a_star.dim() {
        return Err(Error::DimMismatch { expected: n, found: a_star.dim() });
    }
    // unknown H[r][c] sits at index r·n + c
    let mut rows = Vec::with_capacity(2 * n * n);
    for m in [a, a_star] {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![field.zero(); n * n];
                for k in 0..n {
                    row[k * n + c] = &row[k * n + c] + m.get(k, r);
                    row[r * n + k] = &row[r * n + k] - m.get(k, c);
                }
                rows.push(row);
            }
        }
    }
    Ok(crate::linalg::echelon::nullspace(field, rows, n * n)
        .into_iter()
        .map(|v: Vec<FieldElement>| {
            SquareMatrix::from_rows(field, v.chunks(n).map(<[FieldElement]>::to_vec).collect())
                .expect("square")
                .normalized()
        })
        .collect())
}

/// The conjugator for a pair known to have a split decomposition.
///
/// There, an invertible solution forces a Leonard pair, whose generated
/// algebra is the full matrix algebra, so the solution space is then a
/// line. Any other dimension rules one out.
fn split_pair_conjugator(a: &SquareMatrix, a_star: &SquareMatrix) -> Result<Option<SquareMatrix>> {
    let space = conjugator_space(a, a_star)?;
    Ok(match space.as_slice() {
        [h] if h.is_invertible() => Some(h.clone()),
        _ => None,
    })
}

/// Split decomposition for the given orderings together with an invertible
/// `H` satisfying `H⁻¹AᵗH = A` and `H⁻¹A*ᵗH = A*`.
pub fn char2_check(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<bool> {
    let setup = PairSetup::new(a, a_star, Some(orderings))?;
    char2_for(&setup)
}

pub(crate) fn char2_for(setup: &PairSetup) -> Result<bool> {
    if !setup.exists_split() {
        return Ok(false);
    }
    Ok(split_pair_conjugator(setup.a(), setup.a_star())?.is_some())
}
