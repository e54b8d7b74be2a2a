//! Roots of a polynomial that lie in its ground field.
//!
//! Over GF(p) every residue is tried. Over the rationals the polynomial is
//! rescaled to a monic integer polynomial `g(μ) = Dⁿ f(μ/D)`; by the rational
//! root theorem every rational root of `g` is an integer dividing `g(0)`.
//! Instead of enumerating divisors (which needs integer factorization) the
//! integer roots are located by Sturm-sequence bisection on half-integer
//! endpoints, then confirmed exactly and deflated.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::field::{Field, FieldElement};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Limits for [`roots_in_field_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootSearch {
    /// Largest p for which GF(p) is searched exhaustively.
    pub max_exhaustive_modulus: u64,
}

impl Default for RootSearch {
    fn default() -> Self {
        RootSearch { max_exhaustive_modulus: 1_000_000 }
    }
}

/// Distinct roots in the ground field with their multiplicities, sorted
/// canonically.
pub fn roots_in_field(p: &Polynomial) -> Result<Vec<(FieldElement, usize)>> {
    roots_in_field_with(p, &RootSearch::default())
}

pub fn roots_in_field_with(p: &Polynomial, cfg: &RootSearch) -> Result<Vec<(FieldElement, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let candidates = match p.field() {
        Field::Prime(m) => {
            if m as u64 > cfg.max_exhaustive_modulus {
                return Err(Error::ModulusTooLarge { modulus: m as u64, bound: cfg.max_exhaustive_modulus });
            }
            p.field().residues().expect("prime field").filter(|x| p.eval(x).is_zero()).collect()
        }
        Field::Rationals => rational_roots(p),
    };
    let mut out: Vec<(FieldElement, usize)> = candidates
        .into_iter()
        .map(|r| {
            let mut mult = 0;
            let mut rest = p.clone();
            loop {
                let (q, rem) = rest.deflate(&r);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                rest = q;
            }
            (r, mult)
        })
        .collect();
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, x) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &c * x;
        }
        r = q_trim(r);
    }
    r
}

fn q_eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Positive rescaling of a rational polynomial to integer coefficients;
/// signs of values are preserved.
fn to_integer_poly(p: &QPoly) -> Vec<BigInt> {
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect()
}

/// Sign of `p((2k+1)/2)`, computed as the sign of the integer
/// `Σ cᵢ (2k+1)ⁱ 2^{deg−i}`.
fn sign_at_half(p: &[BigInt], k: &BigInt) -> i8 {
    let x: BigInt = k * 2 + 1;
    let two = BigInt::from(2);
    let mut acc = BigInt::zero();
    let mut pw = BigInt::one();
    for c in p {
        acc = acc * &x + c * &pw;
        pw *= &two;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_changes(chain: &[Vec<BigInt>], k: &BigInt) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at_half(p, k)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Fujiwara bound `2·max |c_{n−i}|^{1/i}` for a monic polynomial, rounded up.
fn root_bound(g: &[BigInt]) -> BigInt {
    let n = g.len() - 1;
    let m = (1..=n)
        .map(|i| {
            let c = g[n - i].abs();
            let r = c.nth_root(i as u32);
            if r.pow(i as u32) == c {
                r
            } else {
                r + 1
            }
        })
        .max()
        .unwrap_or_default();
    m * 2 + 1
}

/// Distinct rational roots, each reported once.
fn rational_roots(p: &Polynomial) -> Vec<FieldElement> {
    let field = Field::Rationals;
    let monic = p.monic().expect("nonzero");
    let n = monic.degree().expect("nonzero");
    if n == 0 {
        return Vec::new();
    }
    let coeffs: Vec<BigRational> = monic.coeffs().iter().map(|c| c.as_rational().expect("rational").clone()).collect();
    // D with D^k·c_{n−k} integral for every k
    let scale = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
    let mut pow = BigInt::one();
    for k in (0..=n).rev() {
        let v = &coeffs[k] * BigRational::from_integer(pow.clone());
        debug_assert!(v.is_integer());
        g.push(v.to_integer());
        pow *= &scale;
    }
    g.reverse();
    // g(μ) = μⁿ + D c_{n−1} μ^{n−1} + … + Dⁿ c₀, integral and monic

    let mut roots = Vec::new();
    let zero_mult = g.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push(BigInt::zero());
    }
    let g: Vec<BigInt> = g[zero_mult..].to_vec();
    if g.len() > 1 {
        let gq: QPoly = g.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let deriv: QPoly = q_trim(gq.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect());
        let mut a = gq.clone();
        let mut b = deriv.clone();
        while !b.is_empty() {
            let r = q_rem(&a, &b);
            a = b;
            b = r;
        }
        // squarefree part s = g / gcd(g, g')
        let s = if a.len() > 1 { q_div_exact(&gq, &a) } else { gq.clone() };
        let mut chain = vec![s.clone(), q_trim(s.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())];
        while chain.last().is_some_and(|p| p.len() > 1) {
            let len = chain.len();
            let r = q_rem(&chain[len - 2], &chain[len - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        let bound = root_bound(&g);
        let constant = g[0].clone();
        // highest degree first, integral, for sign evaluation
        let int_chain: Vec<Vec<BigInt>> = chain
            .iter()
            .map(|p| {
                let mut c = to_integer_poly(p);
                c.reverse();
                c
            })
            .collect();
        // roots in [lo, hi] = V(lo − ½) − V(hi + ½)
        let count = |lo: &BigInt, hi: &BigInt| {
            sign_changes(&int_chain, &(lo - 1)) - sign_changes(&int_chain, hi)
        };
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            if count(&lo, &hi) == 0 {
                continue;
            }
            if lo == hi {
                let x = BigRational::from_integer(lo.clone());
                if !lo.is_zero() && (&constant % &lo).is_zero() && q_eval(&s, &x).is_zero() {
                    roots.push(lo);
                }
                continue;
            }
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            stack.push((lo, mid.clone()));
            stack.push((mid + 1, hi));
        }
    }
    roots
        .into_iter()
        .map(|r| field.from_rational(&BigRational::new(r, scale.clone())).expect("nonzero denominator"))
        .collect()
}

fn q_div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &r[k + db] / &b[db];
        for (i, x) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &c * x;
        }
        quot[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    quot
}
