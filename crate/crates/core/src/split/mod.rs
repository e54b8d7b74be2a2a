//! Split decompositions of a pair of multiplicity-free matrices.
//!
//! Fix orderings `θ₀..θ_d` of the eigenvalues of `A` and `θ*₀..θ*_d` of
//! `A*`. A basis `u₀..u_d` is split when `(A − θᵢI)uᵢ = uᵢ₊₁`,
//! `(A − θ_dI)u_d = 0`, `(A* − θ*ᵢI)uᵢ ∈ span(uᵢ₋₁)` and
//! `(A* − θ*₀I)u₀ = 0`. Such a basis exists exactly when the products
//! `E*ᵢ A E*ⱼ` have the lower shape and the products `Eᵢ A* Eⱼ` the upper
//! shape, and the lines it spans are then unique.

mod certificate;
mod graded;
mod pattern;

pub use certificate::{
    first_subspace_identity_failure, split_uniqueness_witness, subspace_identities, Decomposition,
    SplitCertificate, SubspaceIdentity,
};
pub use graded::{graded_polynomials, iso_to_module_check};
pub use pattern::{classify_pattern, triple_product, zero_pattern, PatternClass, Side, ZeroPattern};

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, SquareMatrix};
use crate::spectral::SpectralData;

/// Orderings of the eigenvalues of `A` and of `A*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orderings {
    pub theta: Vec<FieldElement>,
    pub theta_star: Vec<FieldElement>,
}

impl Orderings {
    pub fn new(theta: Vec<FieldElement>, theta_star: Vec<FieldElement>) -> Self {
        Orderings { theta, theta_star }
    }

    pub fn theta_reversed(&self) -> Self {
        let mut theta = self.theta.clone();
        theta.reverse();
        Orderings { theta, theta_star: self.theta_star.clone() }
    }

    pub fn theta_star_reversed(&self) -> Self {
        let mut theta_star = self.theta_star.clone();
        theta_star.reverse();
        Orderings { theta: self.theta.clone(), theta_star }
    }
}

/// Two multiplicity-free matrices with ordered spectral data and the two
/// vanishing tables derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSetup {
    sd: SpectralData,
    sd_star: SpectralData,
    /// `E*ᵢ A E*ⱼ`
    a_pattern: ZeroPattern,
    /// `Eᵢ A* Eⱼ`
    a_star_pattern: ZeroPattern,
}

impl PairSetup {
    /// Canonical eigenvalue orders when `orderings` is `None`.
    pub fn new(a: &SquareMatrix, a_star: &SquareMatrix, orderings: Option<&Orderings>) -> Result<Self> {
        if a.field() != a_star.field() {
            return Err(Error::DescriptorMismatch);
        }
        if a.dim() != a_star.dim() {
            return Err(Error::DimMismatch { expected: a.dim(), found: a_star.dim() });
        }
        let sd = SpectralData::new(a, orderings.map(|o| o.theta.as_slice()))?;
        let sd_star = SpectralData::new(a_star, orderings.map(|o| o.theta_star.as_slice()))?;
        Self::from_spectral(sd, sd_star)
    }

    pub fn from_spectral(sd: SpectralData, sd_star: SpectralData) -> Result<Self> {
        let a_pattern = zero_pattern(sd.matrix(), &sd_star)?;
        let a_star_pattern = zero_pattern(sd_star.matrix(), &sd)?;
        Ok(PairSetup { sd, sd_star, a_pattern, a_star_pattern })
    }

    pub fn a(&self) -> &SquareMatrix {
        self.sd.matrix()
    }

    pub fn a_star(&self) -> &SquareMatrix {
        self.sd_star.matrix()
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.sd
    }

    pub fn spectral_star(&self) -> &SpectralData {
        &self.sd_star
    }

    pub fn diameter(&self) -> usize {
        self.sd.diameter()
    }

    pub fn theta(&self, i: usize) -> &FieldElement {
        self.sd.eigenvalue(i)
    }

    pub fn theta_star(&self, i: usize) -> &FieldElement {
        self.sd_star.eigenvalue(i)
    }

    pub fn orderings(&self) -> Orderings {
        Orderings::new(self.sd.eigenvalues().to_vec(), self.sd_star.eigenvalues().to_vec())
    }

    /// Vanishing table of `E*ᵢ A E*ⱼ`.
    pub fn a_pattern(&self) -> &ZeroPattern {
        &self.a_pattern
    }

    /// Vanishing table of `Eᵢ A* Eⱼ`.
    pub fn a_star_pattern(&self) -> &ZeroPattern {
        &self.a_star_pattern
    }

    /// The same pair with `θ` listed in reverse.
    pub fn with_theta_reversed(&self) -> Self {
        PairSetup {
            sd: self.sd.reversed(),
            sd_star: self.sd_star.clone(),
            a_pattern: self.a_pattern.clone(),
            a_star_pattern: self.a_star_pattern.reversed(),
        }
    }

    /// The same pair with `θ*` listed in reverse.
    pub fn with_theta_star_reversed(&self) -> Self {
        PairSetup {
            sd: self.sd.clone(),
            sd_star: self.sd_star.reversed(),
            a_pattern: self.a_pattern.reversed(),
            a_star_pattern: self.a_star_pattern.clone(),
        }
    }

    /// The same pair under other orderings, reusing the idempotents.
    pub fn reordered(&self, orderings: &Orderings) -> Result<Self> {
        Self::from_spectral(self.sd.reordered(&orderings.theta)?, self.sd_star.reordered(&orderings.theta_star)?)
    }

    /// A split decomposition exists iff `E*ᵢAE*ⱼ` has the lower shape and
    /// `EᵢA*Eⱼ` the upper shape.
    pub fn exists_split(&self) -> bool {
        self.a_pattern.satisfies(Side::Lower) && self.a_star_pattern.satisfies(Side::Upper)
    }
}

/// [`PairSetup::exists_split`] for explicit matrices and orderings.
pub fn exists_split(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<bool> {
    Ok(PairSetup::new(a, a_star, Some(orderings))?.exists_split())
}

/// [`PairSetup::build_split`] for explicit matrices and orderings.
pub fn build_split(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<SplitCertificate> {
    PairSetup::new(a, a_star, Some(orderings))?.build_split()
}
