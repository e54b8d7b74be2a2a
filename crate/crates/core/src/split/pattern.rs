use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;
use crate::spectral::SpectralData;

/// Which of the products `Fᵢ M Fⱼ` vanish, for `M` a matrix and `Fᵢ` the
/// primitive idempotents of another one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroPattern {
    n: usize,
    vanishes: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternClass {
    /// Zero below the subdiagonal, nonzero on it, upper part unconstrained
    /// and not itself of upper shape.
    LowerPattern,
    UpperPattern,
    /// Both shapes at once.
    IrreducibleTridiagonal,
    Other,
}

/// One of the two one-sided shapes a pattern can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// zero for `i − j > 1`, nonzero for `i − j = 1`
    Lower,
    /// zero for `j − i > 1`, nonzero for `j − i = 1`
    Upper,
}

impl ZeroPattern {
    pub fn from_table(n: usize, vanishes: Vec<bool>) -> Self {
        assert_eq!(vanishes.len(), n * n);
        ZeroPattern { n, vanishes }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vanishes(&self, i: usize, j: usize) -> bool {
        self.vanishes[i * self.n + j]
    }

    /// First `(i, j)` in row-major order breaking the given shape.
    pub fn first_violation(&self, side: Side) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).find(|&(i, j)| {
            let (hi, lo) = match side {
                Side::Lower => (i, j),
                Side::Upper => (j, i),
            };
            if hi > lo + 1 {
                !self.vanishes(i, j)
            } else if hi == lo + 1 {
                self.vanishes(i, j)
            } else {
                false
            }
        })
    }

    pub fn satisfies(&self, side: Side) -> bool {
        self.first_violation(side).is_none()
    }

    pub fn classify(&self) -> PatternClass {
        match (self.satisfies(Side::Lower), self.satisfies(Side::Upper)) {
            (true, true) => PatternClass::IrreducibleTridiagonal,
            (true, false) => PatternClass::LowerPattern,
            (false, true) => PatternClass::UpperPattern,
            (false, false) => PatternClass::Other,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.vanishes(i, j) == self.vanishes(j, i)))
    }

    /// The pattern after reversing the order of the idempotents.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        ZeroPattern { n, vanishes: (0..n * n).map(|k| self.vanishes(n - 1 - k / n, n - 1 - k % n)).collect() }
    }
}

impl fmt::Debug for ZeroPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: String = (0..self.n).map(|j| if self.vanishes(i, j) { '0' } else { '*' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

pub fn classify_pattern(zp: &ZeroPattern) -> PatternClass {
    zp.classify()
}

/// The product `Fᵢ M Fⱼ` for the idempotents `Fᵢ` of `sd`.
pub fn triple_product(m: &SquareMatrix, sd: &SpectralData, i: usize, j: usize) -> SquareMatrix {
    &(sd.idempotent(i) * m) * sd.idempotent(j)
}

/// Vanishing table of `Fᵢ M Fⱼ`, computed from the triple products.
pub fn zero_pattern(m: &SquareMatrix, sd: &SpectralData) -> Result<ZeroPattern> {
    let other = sd.matrix();
    if m.field() != other.field() {
        return Err(Error::DescriptorMismatch);
    }
    if m.dim() != other.dim() {
        return Err(Error::DimMismatch { expected: other.dim(), found: m.dim() });
    }
    let n = m.dim();
    let right: Vec<SquareMatrix> = sd.idempotents().iter().map(|e| m * e).collect();
    let vanishes = (0..n * n).map(|k| (sd.idempotent(k / n) * &right[k % n]).is_zero()).collect();
    Ok(ZeroPattern { n, vanishes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&str]) -> ZeroPattern {
        let n = rows.len();
        ZeroPattern::from_table(n, rows.iter().flat_map(|r| r.chars().map(|c| c == '0')).collect())
    }

    #[test]
    fn classification() {
        assert_eq!(table(&["*00", "0*0", "00*"]).classify(), PatternClass::Other);
        assert_eq!(table(&["***", "***", "0**"]).classify(), PatternClass::LowerPattern);
        assert_eq!(table(&["*00", "**0", "0**"]).classify(), PatternClass::LowerPattern);
        assert_eq!(table(&["**0", "***", "*0*"]).classify(), PatternClass::UpperPattern);
        assert_eq!(table(&["**0", "***", "0**"]).classify(), PatternClass::IrreducibleTridiagonal);
        assert_eq!(table(&["0"]).classify(), PatternClass::IrreducibleTridiagonal);
        assert_eq!(table(&["*"]).classify(), PatternClass::IrreducibleTridiagonal);
    }

    #[test]
    fn reversal_swaps_sides() {
        let t = table(&["*00", "**0", "0**"]);
        assert_eq!(t.reversed().classify(), PatternClass::UpperPattern);
        assert_eq!(t.reversed().reversed(), t);
        assert_eq!(t.first_violation(Side::Upper), Some((0, 1)));
    }
}
