use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, FieldElement, SquareMatrix};
use crate::split::Orderings;

/// `(θ₀..θ_d; θ*₀..θ*_d; φ₁..φ_d)`, the data of the bidiagonal pair
///
/// ```text
/// A  = lower bidiagonal, diagonal θ₀..θ_d, subdiagonal 1
/// A* = upper bidiagonal, diagonal θ*₀..θ*_d, superdiagonal φ₁..φ_d
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterArray {
    pub field: Field,
    pub theta: Vec<FieldElement>,
    pub theta_star: Vec<FieldElement>,
    pub varphi: Vec<FieldElement>,
}

impl ParameterArray {
    /// Checks lengths and fields only; see [`validate`](Self::validate).
    pub fn new(
        field: Field,
        theta: Vec<FieldElement>,
        theta_star: Vec<FieldElement>,
        varphi: Vec<FieldElement>,
    ) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let n = theta.len();
        if theta_star.len() != n {
            return Err(Error::DimMismatch { expected: n, found: theta_star.len() });
        }
        if varphi.len() != n - 1 {
            return Err(Error::DimMismatch { expected: n - 1, found: varphi.len() });
        }
        if theta.iter().chain(&theta_star).chain(&varphi).any(|x| x.field() != field) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(ParameterArray { field, theta, theta_star, varphi })
    }

    pub fn diameter(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn orderings(&self) -> Orderings {
        Orderings::new(self.theta.clone(), self.theta_star.clone())
    }

    /// Distinct `θᵢ`, distinct `θ*ᵢ`, nonzero `φᵢ`.
    pub fn validate(&self) -> Result<()> {
        for (name, seq) in [("theta", &self.theta), ("theta_star", &self.theta_star)] {
            for j in 0..seq.len() {
                if let Some(i) = seq[..j].iter().position(|x| *x == seq[j]) {
                    return Err(Error::InvariantViolation(format!("{name}[{i}] = {name}[{j}] = {}", seq[j])));
                }
            }
        }
        if let Some(i) = self.varphi.iter().position(FieldElement::is_zero) {
            return Err(Error::InvariantViolation(format!("varphi[{}] is zero", i + 1)));
        }
        Ok(())
    }
}

/// The condition an array fails, checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailedCondition {
    /// `φᵢ = ϕ₁ Sᵢ + (θ*ᵢ − θ*₀)(θᵢ₋₁ − θ_d)`
    CondI,
    /// `ϕᵢ = φ₁ Sᵢ + (θ*ᵢ − θ*₀)(θ_{d−i+1} − θ₀)`
    CondII,
    /// equal, `i`-independent ratios `(θᵢ₋₂ − θᵢ₊₁)/(θᵢ₋₁ − θᵢ)` on both sides
    CondIII,
    /// some `ϕᵢ` vanishes
    PhiZero,
}

impl FailedCondition {
    pub fn name(self) -> &'static str {
        match self {
            FailedCondition::CondI => "CondI",
            FailedCondition::CondII => "CondII",
            FailedCondition::CondIII => "CondIII",
            FailedCondition::PhiZero => "PhiZero",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FailedCondition::CondI => "varphi_i = phi_1 S_i + (theta*_i - theta*_0)(theta_{i-1} - theta_d) fails",
            FailedCondition::CondII => "phi_i = varphi_1 S_i + (theta*_i - theta*_0)(theta_{d-i+1} - theta_0) fails",
            FailedCondition::CondIII => "eigenvalue ratios (x_{i-2} - x_{i+1})/(x_{i-1} - x_i) differ or depend on i",
            FailedCondition::PhiZero => "a companion value phi_i is zero",
        }
    }
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeonardParameterReport {
    pub valid: bool,
    /// The companion sequence `ϕ₁..ϕ_d`, present when `valid`.
    pub phi: Option<Vec<FieldElement>>,
    pub failed_condition: Option<FailedCondition>,
}

/// `Sᵢ = Σ_{h<i} (θ_h − θ_{d−h}) / (θ₀ − θ_d)` for `1 ≤ i ≤ d`, index `i − 1`.
fn partial_sums(theta: &[FieldElement]) -> Vec<FieldElement> {
    let d = theta.len() - 1;
    let span = (&theta[0] - &theta[d]).inv().expect("distinct eigenvalues");
    let mut acc = theta[0].field().zero();
    (0..d)
        .map(|h| {
            acc = &acc + &(&(&theta[h] - &theta[d - h]) * &span);
            acc.clone()
        })
        .collect()
}

/// `(x_{i−2} − x_{i+1}) / (x_{i−1} − xᵢ)` for `2 ≤ i ≤ d − 1`.
pub fn eigenvalue_ratios(xs: &[FieldElement]) -> Vec<FieldElement> {
    (2..xs.len().saturating_sub(1))
        .map(|i| &(&xs[i - 2] - &xs[i + 1]) / &(&xs[i - 1] - &xs[i]))
        .collect()
}

/// Decides whether the bidiagonal pair of `pa` is a Leonard pair using the
/// closed-form conditions on its entries. `ϕ₁` is solved from the first
/// condition at `i = 1`, the rest of `ϕ` from the second.
pub fn check_parameter_array(pa: &ParameterArray) -> Result<LeonardParameterReport> {
    pa.validate()?;
    let d = pa.diameter();
    if d == 0 {
        return Ok(LeonardParameterReport { valid: true, phi: Some(Vec::new()), failed_condition: None });
    }
    let (th, ts, vp) = (&pa.theta, &pa.theta_star, &pa.varphi);
    let s = partial_sums(th);
    let phi1 = &vp[0] - &(&(&ts[1] - &ts[0]) * &(&th[0] - &th[d]));
    let phi: Vec<FieldElement> = (1..=d)
        .map(|i| &(&vp[0] * &s[i - 1]) + &(&(&ts[i] - &ts[0]) * &(&th[d - i + 1] - &th[0])))
        .collect();
    let fail = |c| Ok(LeonardParameterReport { valid: false, phi: None, failed_condition: Some(c) });
    for i in 1..=d {
        if vp[i - 1] != &(&phi1 * &s[i - 1]) + &(&(&ts[i] - &ts[0]) * &(&th[i - 1] - &th[d])) {
            return fail(FailedCondition::CondI);
        }
    }
    if phi[0] != phi1 {
        return fail(FailedCondition::CondII);
    }
    let (r, r_star) = (eigenvalue_ratios(th), eigenvalue_ratios(ts));
    if r != r_star || r.windows(2).any(|w| w[0] != w[1]) {
        return fail(FailedCondition::CondIII);
    }
    if phi.iter().any(FieldElement::is_zero) {
        return fail(FailedCondition::PhiZero);
    }
    Ok(LeonardParameterReport { valid: true, phi: Some(phi), failed_condition: None })
}

/// The bidiagonal pair `(A, A*)` of the array.
pub fn construct_pair(pa: &ParameterArray) -> Result<(SquareMatrix, SquareMatrix)> {
    pa.validate()?;
    let f = pa.field;
    let n = pa.theta.len();
    let a = SquareMatrix::from_fn(f, n, |i, j| match () {
        _ if i == j => pa.theta[i].clone(),
        _ if i == j + 1 => f.one(),
        _ => f.zero(),
    });
    let a_star = SquareMatrix::from_fn(f, n, |i, j| match () {
        _ if i == j => pa.theta_star[i].clone(),
        _ if j == i + 1 => pa.varphi[i].clone(),
        _ => f.zero(),
    });
    Ok((a, a_star))
}
