//! Instance corpus and independent oracles shared by the integration tests.
#![allow(dead_code)]

use leonard_kit::cli::{parse_instance, random_documents};
use leonard_kit::cli::documents::FieldSpec;
use leonard_kit::leonard::{random_element, ParameterArray};
use leonard_kit::linalg::{rank_of, Field, FieldElement, SquareMatrix, Vector};
use leonard_kit::split::Orderings;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GF: u64 = 997;

pub fn gf() -> Field {
    Field::prime(GF).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(field: Field, xs: &[i64]) -> Vec<FieldElement> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn matrix(field: Field, rows: &[&[i64]]) -> SquareMatrix {
    SquareMatrix::from_rows(field, rows.iter().map(|r| ints(field, r)).collect()).unwrap()
}

/// Parameter array sampled through the CLI generator, as `random` emits it.
pub fn sampled_array(seed: u64, d: usize, field: FieldSpec) -> ParameterArray {
    let doc = random_documents(seed, d, field, 1).unwrap().remove(0);
    parse_instance(&doc).unwrap().array.unwrap()
}

/// 200 arrays over GF(997) and 20 over ℚ, diameters cycling through 0..=8.
pub fn valid_arrays() -> Vec<ParameterArray> {
    let mut out: Vec<ParameterArray> = (0..200).map(|k| sampled_array(k, (k % 9) as usize, FieldSpec::Gf(GF))).collect();
    out.extend((0..20).map(|k| sampled_array(1000 + k, (k % 9) as usize, FieldSpec::Rational)));
    out
}

pub fn lower_bidiagonal(theta: &[FieldElement]) -> SquareMatrix {
    let f = theta[0].field();
    SquareMatrix::from_fn(f, theta.len(), |i, j| match () {
        _ if i == j => theta[i].clone(),
        _ if i == j + 1 => f.one(),
        _ => f.zero(),
    })
}

pub fn upper_bidiagonal(diag: &[FieldElement], sup: &[FieldElement]) -> SquareMatrix {
    let f = diag[0].field();
    SquareMatrix::from_fn(f, diag.len(), |i, j| match () {
        _ if i == j => diag[i].clone(),
        _ if j == i + 1 => sup[i].clone(),
        _ => f.zero(),
    })
}

pub fn random_invertible<R: Rng>(rng: &mut R, field: Field, n: usize) -> SquareMatrix {
    loop {
        let m = SquareMatrix::from_fn(field, n, |_, _| random_element(rng, field));
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn distinct_elements<R: Rng>(rng: &mut R, field: Field, n: usize) -> Vec<FieldElement> {
    let mut xs: Vec<FieldElement> = Vec::new();
    while xs.len() < n {
        let x = random_element(rng, field);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs
}

/// How a corpus instance was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Valid,
    ZeroedPhi,
    DuplicatedEigenvalue,
    ConjugatedRepairing,
    PerturbedPhi,
    Commuting,
}

/// A pair of matrices with the orderings to test it under.
#[derive(Clone, Debug)]
pub struct Case {
    pub origin: Origin,
    pub a: SquareMatrix,
    pub a_star: SquareMatrix,
    pub orderings: Orderings,
}

/// One mutant per valid array: zeroed `φᵢ`, a duplicated eigenvalue, `A`
/// replaced by a generic conjugate, or one `φᵢ` shifted (for `d ≥ 2`);
/// diameter-zero arrays are replaced by a commuting pair of size 3.
pub fn mutants(valid: &[ParameterArray], seed: u64) -> Vec<Case> {
    let mut rng = rng(seed);
    valid
        .iter()
        .enumerate()
        .map(|(k, pa)| {
            let f = pa.field;
            let d = pa.diameter();
            let n = d + 1;
            let a = lower_bidiagonal(&pa.theta);
            let a_star = upper_bidiagonal(&pa.theta_star, &pa.varphi);
            let orderings = pa.orderings();
            if d == 0 {
                let theta = distinct_elements(&mut rng, f, 3);
                let a = lower_bidiagonal(&theta);
                return Case { origin: Origin::Commuting, a: a.clone(), a_star: a, orderings: Orderings::new(theta.clone(), theta) };
            }
            let kind = if d == 1 && k % 4 == 3 { 2 } else { k % 4 };
            match kind {
                0 => {
                    let mut varphi = pa.varphi.clone();
                    varphi[rng.gen_range(0..d)] = f.zero();
                    Case { origin: Origin::ZeroedPhi, a, a_star: upper_bidiagonal(&pa.theta_star, &varphi), orderings }
                }
                1 => {
                    let mut theta = pa.theta.clone();
                    let i = rng.gen_range(1..n);
                    theta[i] = theta[i - 1].clone();
                    Case { origin: Origin::DuplicatedEigenvalue, a: lower_bidiagonal(&theta), a_star, orderings }
                }
                2 => {
                    let m = random_invertible(&mut rng, f, n);
                    let conj = m.inverse().unwrap().try_mul(&a).unwrap().try_mul(&m).unwrap();
                    Case { origin: Origin::ConjugatedRepairing, a: conj, a_star, orderings }
                }
                _ => {
                    let mut varphi = pa.varphi.clone();
                    let i = rng.gen_range(0..d);
                    varphi[i] = &varphi[i] + &f.one();
                    if varphi[i].is_zero() {
                        varphi[i] = &varphi[i] + &f.one();
                    }
                    Case { origin: Origin::PerturbedPhi, a, a_star: upper_bidiagonal(&pa.theta_star, &varphi), orderings }
                }
            }
        })
        .collect()
}

pub fn valid_cases(valid: &[ParameterArray]) -> Vec<Case> {
    valid
        .iter()
        .map(|pa| Case {
            origin: Origin::Valid,
            a: lower_bidiagonal(&pa.theta),
            a_star: upper_bidiagonal(&pa.theta_star, &pa.varphi),
            orderings: pa.orderings(),
        })
        .collect()
}

/// Eigenvector for a known eigenvalue, from the kernel of `M − θI`.
pub fn eigenvector(m: &SquareMatrix, theta: &FieldElement) -> Vector {
    let ker = m.shift(theta).kernel_basis();
    assert_eq!(ker.len(), 1, "eigenvalue {theta} is not simple");
    ker[0].clone()
}

/// Split-existence oracle through the matrices `B = P⁻¹AP` (`P` the
/// eigenvectors of `A*` in θ* order) and `B* = Q⁻¹A*Q` (`Q` those of `A`):
/// `B` must vanish below the subdiagonal with nonzero subdiagonal, `B*`
/// likewise above the superdiagonal.
pub fn split_oracle_by_eigenbases(a: &SquareMatrix, a_star: &SquareMatrix, o: &Orderings) -> bool {
    let f = a.field();
    let p_cols: Vec<Vector> = o.theta_star.iter().map(|t| eigenvector(a_star, t)).collect();
    let q_cols: Vec<Vector> = o.theta.iter().map(|t| eigenvector(a, t)).collect();
    let p = SquareMatrix::from_columns(f, &p_cols).unwrap();
    let q = SquareMatrix::from_columns(f, &q_cols).unwrap();
    let b = p.inverse().unwrap().try_mul(a).unwrap().try_mul(&p).unwrap();
    let b_star = q.inverse().unwrap().try_mul(a_star).unwrap().try_mul(&q).unwrap();
    let n = a.dim();
    let lower_ok = (0..n).all(|i| {
        (0..n).all(|j| match i.checked_sub(j) {
            Some(1) => !b.get(i, j).is_zero(),
            Some(k) if k > 1 => b.get(i, j).is_zero(),
            _ => true,
        })
    });
    let upper_ok = (0..n).all(|i| {
        (0..n).all(|j| match j.checked_sub(i) {
            Some(1) => !b_star.get(i, j).is_zero(),
            Some(k) if k > 1 => b_star.get(i, j).is_zero(),
            _ => true,
        })
    });
    lower_ok && upper_ok
}

/// Split-existence oracle by direct construction: start from an eigenvector
/// for `θ*₀`, apply `A − θᵢI` repeatedly and check every split identity.
/// When a split decomposition exists its first line is forced to be this
/// eigenspace, so failure here means none exists.
pub fn split_oracle_by_construction(a: &SquareMatrix, a_star: &SquareMatrix, o: &Orderings) -> Option<Vec<FieldElement>> {
    let n = a.dim();
    let mut u = vec![eigenvector(a_star, &o.theta_star[0])];
    for i in 0..n - 1 {
        u.push(a.shift(&o.theta[i]).apply(&u[i]).unwrap());
    }
    if !a.shift(&o.theta[n - 1]).apply(&u[n - 1]).unwrap().is_zero() || rank_of(&u) != n {
        return None;
    }
    let mut phis = Vec::new();
    for i in 1..n {
        let w = a_star.shift(&o.theta_star[i]).apply(&u[i]).unwrap();
        let k = u[i - 1].first_nonzero().unwrap();
        let phi = w.get(k) / u[i - 1].get(k);
        if phi.is_zero() || w != u[i - 1].scale(&phi) {
            return None;
        }
        phis.push(phi);
    }
    Some(phis)
}
