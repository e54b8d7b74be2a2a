use super::{Orderings, PairSetup};
use crate::error::{Error, Result};
use crate::linalg::{rank_of, FieldElement, SquareMatrix, Subspace, Vector};

/// A basis `u₀..u_d`, read as the decomposition into the lines `span(uᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    spanners: Vec<Vector>,
}

impl Decomposition {
    /// Fails unless the vectors form a basis.
    pub fn new(spanners: Vec<Vector>) -> Result<Self> {
        let n = spanners.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(v) = spanners.iter().find(|v| v.dim() != n) {
            return Err(Error::DimMismatch { expected: n, found: v.dim() });
        }
        if rank_of(&spanners) != n {
            return Err(Error::CertificateCheck("spanners are linearly dependent".into()));
        }
        Ok(Decomposition { spanners })
    }

    pub fn spanners(&self) -> &[Vector] {
        &self.spanners
    }

    pub fn dim(&self) -> usize {
        self.spanners.len()
    }

    /// The matrix with columns `u₀..u_d`.
    pub fn basis_matrix(&self) -> SquareMatrix {
        SquareMatrix::from_columns(self.spanners[0].field(), &self.spanners).expect("square basis")
    }
}

/// A split basis normalized so that `(A − θᵢI)uᵢ = uᵢ₊₁`, with the split
/// sequence `φ₁..φ_d` defined by `(A* − θ*ᵢI)uᵢ = φᵢ uᵢ₋₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub decomposition: Decomposition,
    pub split_sequence: Vec<FieldElement>,
    pub orderings: Orderings,
}

impl SplitCertificate {
    pub fn basis(&self) -> &[Vector] {
        self.decomposition.spanners()
    }

    /// Checks every defining identity against `setup`.
    pub fn verify(&self, setup: &PairSetup) -> Result<()> {
        let fail = |m: String| Err(Error::CertificateCheck(m));
        let d = setup.diameter();
        let u = self.basis();
        if u.len() != d + 1 || self.split_sequence.len() != d {
            return fail("certificate has the wrong size".into());
        }
        if self.orderings != setup.orderings() {
            return fail("certificate orderings differ from the setup".into());
        }
        for i in 0..=d {
            let lowered = setup.a().shift(setup.theta(i)).apply(&u[i])?;
            let expect = if i < d { u[i + 1].clone() } else { Vector::zeros(u[i].field(), d + 1) };
            if lowered != expect {
                return fail(format!("(A − θ{i}I)u{i} is not u{}", i + 1));
            }
            let raised = setup.a_star().shift(setup.theta_star(i)).apply(&u[i])?;
            let expect = if i == 0 {
                Vector::zeros(u[i].field(), d + 1)
            } else {
                u[i - 1].scale(&self.split_sequence[i - 1])
            };
            if raised != expect {
                return fail(format!("(A* − θ*{i}I)u{i} is not φ{i}·u{}", i.max(1) - 1));
            }
        }
        if let Some(k) = self.split_sequence.iter().position(FieldElement::is_zero) {
            return fail(format!("φ{} is zero", k + 1));
        }
        Ok(())
    }
}

impl PairSetup {
    /// `uᵢ = ∏_{h<i}(A − θ_hI) v*₀` with `v*₀` the normalized spanner of
    /// `E*₀V`; the certificate is verified before it is returned.
    pub fn build_split(&self) -> Result<SplitCertificate> {
        let start = self.spectral_star().eigenspace(0)?;
        self.build_split_from(&start)
    }

    /// As [`build_split`](Self::build_split) from any nonzero `start ∈ E*₀V`.
    pub fn build_split_from(&self, start: &Vector) -> Result<SplitCertificate> {
        if !self.exists_split() {
            return Err(Error::SplitDoesNotExist);
        }
        let d = self.diameter();
        let e0 = self.spectral_star().idempotent(0);
        if start.is_zero() || e0.apply(start)? != *start {
            return Err(Error::CertificateCheck("start vector does not span E*₀V".into()));
        }
        let mut u = vec![start.clone()];
        for i in 0..d {
            let next = self.a().shift(self.theta(i)).apply(&u[i])?;
            u.push(next);
        }
        let mut split_sequence = Vec::with_capacity(d);
        for i in 1..=d {
            let w = self.a_star().shift(self.theta_star(i)).apply(&u[i])?;
            let phi = w
                .ratio_to(&u[i - 1])
                .ok_or_else(|| Error::CertificateCheck(format!("(A* − θ*{i}I)u{i} not on the line of u{}", i - 1)))?;
            split_sequence.push(phi);
        }
        let cert = SplitCertificate {
            decomposition: Decomposition::new(u)?,
            split_sequence,
            orderings: self.orderings(),
        };
        cert.verify(self)?;
        Ok(cert)
    }
}

/// `span(uᵢ) = ∏_{h<i}(A − θ_hI)E*₀V = ∏_{h>i}(A* − θ*_hI)E_dV` for every `i`.
pub fn split_uniqueness_witness(cert: &SplitCertificate, setup: &PairSetup) -> bool {
    let d = setup.diameter();
    let u = cert.basis();
    if u.len() != d + 1 {
        return false;
    }
    let (Ok(start), Ok(end)) = (setup.spectral_star().eigenspace(0), setup.spectral().eigenspace(d)) else {
        return false;
    };
    (0..=d).all(|i| {
        let up = (0..i).fold(start.clone(), |v, h| setup.a().shift(setup.theta(h)).apply_unchecked(&v));
        let down = (i + 1..=d).fold(end.clone(), |v, h| setup.a_star().shift(setup.theta_star(h)).apply_unchecked(&v));
        u[i].is_colinear(&up) && u[i].is_colinear(&down)
    })
}

/// The five subspace identities every split decomposition satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceIdentity {
    /// `Σ_{h≤i} U_h = Σ_{h≤i} A^h E*₀V`
    LowerKrylov,
    /// `Σ_{h≤i} U_h = Σ_{h≤i} E*_hV`
    LowerEigen,
    /// `Σ_{h≥i} U_h = Σ_{h≤d−i} A*^h E_dV`
    UpperKrylov,
    /// `Σ_{h≥i} U_h = Σ_{h≥i} E_hV`
    UpperEigen,
    /// `U_i = (E*₀V + … + E*ᵢV) ∩ (EᵢV + … + E_dV)`
    Intersection,
}

/// First identity and index at which the certificate fails, if any.
pub fn first_subspace_identity_failure(
    cert: &SplitCertificate,
    setup: &PairSetup,
) -> Option<(SubspaceIdentity, usize)> {
    let d = setup.diameter();
    let n = d + 1;
    let u = cert.basis();
    if u.len() != n {
        return Some((SubspaceIdentity::LowerKrylov, 0));
    }
    let field = u[0].field();
    let span = |vs: &[Vector]| Subspace::span(field, n, vs).expect("compatible vectors");
    let eig: Vec<Vector> = (0..n).map(|i| setup.spectral().eigenspace(i).expect("in range")).collect();
    let eig_star: Vec<Vector> = (0..n).map(|i| setup.spectral_star().eigenspace(i).expect("in range")).collect();
    let mut krylov = vec![eig_star[0].clone()];
    let mut krylov_star = vec![eig[d].clone()];
    for h in 1..n {
        krylov.push(setup.a().apply_unchecked(&krylov[h - 1]));
        krylov_star.push(setup.a_star().apply_unchecked(&krylov_star[h - 1]));
    }
    for i in 0..n {
        let lower = span(&u[..=i]);
        let upper = span(&u[i..]);
        if lower != span(&krylov[..=i]) {
            return Some((SubspaceIdentity::LowerKrylov, i));
        }
        if lower != span(&eig_star[..=i]) {
            return Some((SubspaceIdentity::LowerEigen, i));
        }
        if upper != span(&krylov_star[..=d - i]) {
            return Some((SubspaceIdentity::UpperKrylov, i));
        }
        if upper != span(&eig[i..]) {
            return Some((SubspaceIdentity::UpperEigen, i));
        }
        if span(&u[i..=i]) != span(&eig_star[..=i]).intersection(&span(&eig[i..])) {
            return Some((SubspaceIdentity::Intersection, i));
        }
    }
    None
}

pub fn subspace_identities(cert: &SplitCertificate, setup: &PairSetup) -> bool {
    first_subspace_identity_failure(cert, setup).is_none()
}
