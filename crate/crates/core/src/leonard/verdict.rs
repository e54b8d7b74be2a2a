use std::fmt;

use crate::error::Result;
use crate::linalg::SquareMatrix;
use crate::split::{triple_product, Orderings, PairSetup, Side};

/// The four vanishing conditions defining a Leonard system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `E*ᵢAE*ⱼ` zero for `i − j > 1`, nonzero for `i − j = 1`
    ALower,
    /// `E*ᵢAE*ⱼ` zero for `j − i > 1`, nonzero for `j − i = 1`
    AUpper,
    /// `EᵢA*Eⱼ` zero for `i − j > 1`, nonzero for `i − j = 1`
    AStarLower,
    /// `EᵢA*Eⱼ` zero for `j − i > 1`, nonzero for `j − i = 1`
    AStarUpper,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::ALower, Condition::AUpper, Condition::AStarLower, Condition::AStarUpper];

    pub fn name(self) -> &'static str {
        match self {
            Condition::ALower => "a_lower",
            Condition::AUpper => "a_upper",
            Condition::AStarLower => "a_star_lower",
            Condition::AStarUpper => "a_star_upper",
        }
    }

    /// Human-readable statement of the condition.
    pub fn statement(self) -> &'static str {
        match self {
            Condition::ALower => "E*_i A E*_j must vanish for i-j>1 and be nonzero for i-j=1",
            Condition::AUpper => "E*_i A E*_j must vanish for j-i>1 and be nonzero for j-i=1",
            Condition::AStarLower => "E_i A* E_j must vanish for i-j>1 and be nonzero for i-j=1",
            Condition::AStarUpper => "E_i A* E_j must vanish for j-i>1 and be nonzero for j-i=1",
        }
    }

    fn side(self) -> Side {
        match self {
            Condition::ALower | Condition::AStarLower => Side::Lower,
            Condition::AUpper | Condition::AStarUpper => Side::Upper,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first product that breaks a condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureWitness {
    pub i: usize,
    pub j: usize,
    pub condition: Condition,
    pub product: SquareMatrix,
}

impl FailureWitness {
    /// Whether the product should have been zero (it is nonzero) or nonzero
    /// (it vanishes).
    pub fn should_vanish(&self) -> bool {
        !self.product.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeonardVerdict {
    pub is_leonard_system: bool,
    /// Indexed like [`Condition::ALL`].
    pub condition_flags: [bool; 4],
    pub failure_witness: Option<FailureWitness>,
}

impl LeonardVerdict {
    pub fn flag(&self, c: Condition) -> bool {
        self.condition_flags[Condition::ALL.iter().position(|&k| k == c).expect("listed")]
    }

    /// Conditions that fail, in the order of [`Condition::ALL`].
    pub fn failed(&self) -> Vec<Condition> {
        Condition::ALL.iter().zip(self.condition_flags).filter(|(_, ok)| !ok).map(|(c, _)| *c).collect()
    }
}

/// Evaluates all four conditions on a prepared pair.
pub fn verdict_for(setup: &PairSetup) -> LeonardVerdict {
    let mut failure_witness = None;
    let mut condition_flags = [true; 4];
    for (k, c) in Condition::ALL.into_iter().enumerate() {
        let (pattern, m, sd) = match c {
            Condition::ALower | Condition::AUpper => (setup.a_pattern(), setup.a(), setup.spectral_star()),
            Condition::AStarLower | Condition::AStarUpper => {
                (setup.a_star_pattern(), setup.a_star(), setup.spectral())
            }
        };
        if let Some((i, j)) = pattern.first_violation(c.side()) {
            condition_flags[k] = false;
            if failure_witness.is_none() {
                failure_witness = Some(FailureWitness { i, j, condition: c, product: triple_product(m, sd, i, j) });
            }
        }
    }
    LeonardVerdict { is_leonard_system: condition_flags.iter().all(|&b| b), condition_flags, failure_witness }
}

/// Decides whether `(A; A*; {Eᵢ}; {E*ᵢ})` is a Leonard system for the given
/// eigenvalue orderings.
pub fn leonard_verdict(a: &SquareMatrix, a_star: &SquareMatrix, orderings: &Orderings) -> Result<LeonardVerdict> {
    Ok(verdict_for(&PairSetup::new(a, a_star, Some(orderings))?))
}

/// False exactly when three of the four flags hold, a combination no actual
/// pair can produce.
pub fn three_gives_four(flags: [bool; 4]) -> bool {
    flags.iter().filter(|&&b| b).count() != 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leonard::{construct_pair, ParameterArray};
    use crate::linalg::{Field, FieldElement};

    fn pair(phi: &[i64]) -> (SquareMatrix, SquareMatrix, Orderings) {
        let q = Field::Rationals;
        let ints = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let pa = ParameterArray::new(q, ints(&[2, 0, -2]), ints(&[2, 0, -2]), ints(phi)).unwrap();
        let (a, a_star) = construct_pair(&pa).unwrap();
        (a, a_star, pa.orderings())
    }

    /// `∏_{k≠i} (M − θₖI)/(θᵢ − θₖ)` written out directly.
    fn lagrange(m: &SquareMatrix, thetas: &[FieldElement], i: usize) -> SquareMatrix {
        let mut e = SquareMatrix::identity(m.field(), m.dim());
        for (_, t) in thetas.iter().enumerate().filter(|&(k, _)| k != i) {
            e = &e * &m.shift(t).scale(&(&thetas[i] - t).inv().unwrap());
        }
        e
    }

    #[test]
    fn equal_split_sequence_is_leonard() {
        let (a, a_star, o) = pair(&[-4, -4]);
        let v = leonard_verdict(&a, &a_star, &o).unwrap();
        assert!(v.is_leonard_system);
        assert_eq!(v.condition_flags, [true; 4]);
        assert!(v.failure_witness.is_none());
    }

    #[test]
    fn unequal_split_sequence_fails_with_witness() {
        let (a, a_star, o) = pair(&[-4, 1]);
        let v = leonard_verdict(&a, &a_star, &o).unwrap();
        assert!(!v.is_leonard_system);
        assert!(!v.flag(Condition::AStarLower) || !v.flag(Condition::AUpper));
        assert!(v.flag(Condition::ALower) && v.flag(Condition::AStarUpper));
        let w = v.failure_witness.unwrap();
        let (m, other, thetas) = match w.condition {
            Condition::ALower | Condition::AUpper => (&a, &a_star, &o.theta_star),
            _ => (&a_star, &a, &o.theta),
        };
        let direct = &(&lagrange(other, thetas, w.i) * m) * &lagrange(other, thetas, w.j);
        assert_eq!(w.product, direct);
        assert_eq!(w.should_vanish(), w.i.abs_diff(w.j) > 1);
        assert_eq!(direct.is_zero(), !w.should_vanish());
    }

    #[test]
    fn three_of_four_is_inconsistent() {
        assert!(three_gives_four([true; 4]));
        assert!(three_gives_four([true, true, false, false]));
        assert!(three_gives_four([false; 4]));
        assert!(!three_gives_four([true, true, true, false]));
        assert!(!three_gives_four([false, true, true, true]));
    }
}
