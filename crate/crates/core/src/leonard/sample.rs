use rand::Rng;

use super::params::{check_parameter_array, ParameterArray};
use crate::error::{Error, Result};
use crate::linalg::{Field, FieldElement};

/// Attempts per array before giving up.
pub const SAMPLING_BUDGET: usize = 1000;

/// A small random element: a uniform residue over GF(p), a fraction with
/// numerator in `-9..=9` and denominator in `1..=3` over ℚ.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, field: Field) -> FieldElement {
    match field.modulus() {
        Some(p) => field.from_i64(rng.gen_range(0..p as i64)),
        None => field.from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3)).expect("nonzero denominator"),
    }
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, field: Field) -> FieldElement {
    loop {
        let x = random_element(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `x₀, x₁, x₂` free, then `x_{i+1} = x_{i−2} − s (x_{i−1} − xᵢ)`, which makes
/// `(x_{i−2} − x_{i+1}) / (x_{i−1} − xᵢ) = s` for every `i`.
fn recurrent_sequence<R: Rng + ?Sized>(rng: &mut R, field: Field, len: usize, s: &FieldElement) -> Vec<FieldElement> {
    let mut xs: Vec<FieldElement> = (0..len.min(3)).map(|_| random_element(rng, field)).collect();
    while xs.len() < len {
        let i = xs.len() - 1;
        let next = &xs[i - 2] - &(s * &(&xs[i - 1] - &xs[i]));
        xs.push(next);
    }
    xs
}

fn distinct(xs: &[FieldElement]) -> bool {
    xs.iter().enumerate().all(|(j, x)| !xs[..j].contains(x))
}

/// One attempt; `None` when a distinctness or nonvanishing requirement fails.
fn attempt<R: Rng + ?Sized>(rng: &mut R, field: Field, d: usize) -> Option<ParameterArray> {
    let s = match field.modulus() {
        Some(_) => random_element(rng, field),
        None => field.from_i64(rng.gen_range(-3..=3)),
    };
    let theta = recurrent_sequence(rng, field, d + 1, &s);
    let theta_star = recurrent_sequence(rng, field, d + 1, &s);
    if !distinct(&theta) || !distinct(&theta_star) {
        return None;
    }
    let phi1 = random_nonzero(rng, field);
    let mut varphi = Vec::with_capacity(d);
    if d > 0 {
        let span = (&theta[0] - &theta[d]).inv()?;
        let mut sum = field.zero();
        for i in 1..=d {
            sum = &sum + &(&(&theta[i - 1] - &theta[d - i + 1]) * &span);
            let term = &(&theta_star[i] - &theta_star[0]) * &(&theta[i - 1] - &theta[d]);
            varphi.push(&(&phi1 * &sum) + &term);
        }
    }
    if varphi.iter().any(FieldElement::is_zero) {
        return None;
    }
    let pa = ParameterArray::new(field, theta, theta_star, varphi).ok()?;
    match check_parameter_array(&pa) {
        Ok(report) if report.valid => Some(pa),
        _ => None,
    }
}

/// A random array passing every parameter-array condition, by rejection
/// sampling within [`SAMPLING_BUDGET`] attempts.
pub fn random_parameter_array<R: Rng + ?Sized>(rng: &mut R, field: Field, d: usize) -> Result<ParameterArray> {
    (0..SAMPLING_BUDGET)
        .find_map(|_| attempt(rng, field, d))
        .ok_or(Error::SamplingBudgetExhausted { attempts: SAMPLING_BUDGET })
}
