use super::antiauto::char2_for;
use super::verdict::verdict_for;
use crate::error::Result;
use crate::linalg::SquareMatrix;
use crate::split::{Orderings, PairSetup};

/// Split decompositions exist both for `(θ, θ*)` and for `(θ reversed, θ*)`.
pub fn char1_check(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<bool> {
    Ok(char1_for(&PairSetup::new(a, a_star, Some(orderings))?))
}

pub(crate) fn char1_for(setup: &PairSetup) -> bool {
    setup.exists_split() && setup.with_theta_reversed().exists_split()
}

/// The direct verdict and both characterizations for one ordered pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub verdict: bool,
    pub char1: bool,
    pub char2: bool,
}

impl CharacterizationReport {
    pub fn agree(&self) -> bool {
        self.verdict == self.char1 && self.char1 == self.char2
    }
}

pub fn characterize(setup: &PairSetup) -> Result<CharacterizationReport> {
    Ok(CharacterizationReport {
        verdict: verdict_for(setup).is_leonard_system,
        char1: char1_for(setup),
        char2: char2_for(setup)?,
    })
}
