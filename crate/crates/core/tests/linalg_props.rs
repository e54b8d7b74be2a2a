mod common;

use common::{distinct_elements, gf, random_invertible, rng};
use leonard_kit::leonard::random_element;
use leonard_kit::linalg::{berkowitz, char_poly, roots_in_field, Field, FieldElement, Polynomial, SquareMatrix, Subspace};
use leonard_kit::spectral::SpectralData;
use proptest::prelude::*;

fn q(num: i64, den: i64) -> FieldElement {
    Field::Rationals.from_ratio(num, den).unwrap()
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Rational roots of an integer polynomial by the rational root theorem:
/// every root is `±p/q` with `p | c₀` and `q | c_top` (after removing the
/// roots at zero). Multiplicity from the first nonvanishing derivative.
fn rational_roots_by_enumeration(coeffs: &[i64]) -> Vec<(FieldElement, usize)> {
    let poly = Polynomial::new(Field::Rationals, coeffs.iter().map(|&c| q(c, 1)).collect()).unwrap();
    let low = coeffs.iter().position(|&c| c != 0).unwrap();
    let mut candidates = vec![];
    if low > 0 {
        candidates.push(q(0, 1));
    }
    for p in divisors(coeffs[low]) {
        for d in divisors(*coeffs.last().unwrap()) {
            candidates.extend([q(p, d), q(-p, d)]);
        }
    }
    candidates.sort_by(FieldElement::canonical_cmp);
    candidates.dedup();
    candidates
        .into_iter()
        .filter_map(|r| {
            let mut m = 0;
            let mut p = poly.clone();
            while !p.is_zero() && p.eval(&r).is_zero() {
                m += 1;
                p = p.derivative();
            }
            (m > 0).then_some((r, m))
        })
        .collect()
}

fn integer_coeffs(p: &Polynomial) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.to_string().parse().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_inverse_is_exact(seed in any::<u64>(), n in 1usize..6) {
        let mut r = rng(seed);
        let m = random_invertible(&mut r, Field::Rationals, n);
        prop_assert_eq!(&m.inverse().unwrap() * &m, SquareMatrix::identity(Field::Rationals, n));
    }

    #[test]
    fn diagonal_char_poly_and_roots(seed in any::<u64>(), n in 1usize..7, rational in any::<bool>()) {
        let f = if rational { Field::Rationals } else { gf() };
        let mut r = rng(seed);
        let diag: Vec<FieldElement> = (0..n).map(|_| random_element(&mut r, f)).collect();
        let m = SquareMatrix::diagonal(f, &diag);
        let cp = char_poly(&m);
        prop_assert_eq!(&cp, &Polynomial::from_roots(f, &diag));
        prop_assert_eq!(&cp, &berkowitz(&m));
        let mut expected: Vec<(FieldElement, usize)> = Vec::new();
        let mut sorted = diag.clone();
        sorted.sort_by(FieldElement::canonical_cmp);
        for x in sorted {
            match expected.last_mut() {
                Some((y, k)) if *y == x => *k += 1,
                _ => expected.push((x, 1)),
            }
        }
        prop_assert_eq!(roots_in_field(&cp).unwrap(), expected);
    }

    #[test]
    fn rational_roots_match_enumeration(
        roots in prop::collection::vec((-6i64..=6, 1i64..=4), 0..4),
        quadratic in 0usize..3,
        lead in 1i64..=3,
    ) {
        let mut p = Polynomial::constant(q(lead, 1));
        for &(num, den) in &roots {
            p = p.mul(&Polynomial::new(Field::Rationals, vec![q(-num, 1), q(den, 1)]).unwrap());
        }
        let extra = [vec![1], vec![1, 0, 1], vec![-2, 0, 1]][quadratic].iter().map(|&c| q(c, 1)).collect();
        p = p.mul(&Polynomial::new(Field::Rationals, extra).unwrap());
        prop_assume!(p.degree().unwrap() > 0);
        prop_assert_eq!(roots_in_field(&p).unwrap(), rational_roots_by_enumeration(&integer_coeffs(&p)));
    }

    #[test]
    fn kernel_basis_annihilated(seed in any::<u64>(), n in 1usize..6, rank in 0usize..6) {
        let f = gf();
        let mut r = rng(seed);
        let rank = rank.min(n);
        let cols: Vec<Vec<FieldElement>> = (0..rank).map(|_| (0..n).map(|_| random_element(&mut r, f)).collect()).collect();
        let m = SquareMatrix::from_fn(f, n, |i, j| {
            let mix = random_element(&mut r, f);
            cols.get(j % rank.max(1)).map_or(f.zero(), |c| &c[i] * &mix)
        });
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len(), n - m.rank());
        for v in &ker {
            prop_assert!(m.apply(v).unwrap().is_zero());
        }
    }

    #[test]
    fn idempotents_span_the_powers(seed in any::<u64>(), n in 1usize..7, p_small in any::<bool>()) {
        let f = Field::prime(if p_small { 101 } else { 997 }).unwrap();
        let mut r = rng(seed);
        let theta = distinct_elements(&mut r, f, n);
        let p = random_invertible(&mut r, f, n);
        let a = &(&p * &SquareMatrix::diagonal(f, &theta)) * &p.inverse().unwrap();
        let sd = SpectralData::new(&a, None).unwrap();
        sd.verify().unwrap();
        let flatten = |m: &SquareMatrix| leonard_kit::linalg::Vector::new(f, m.rows().concat()).unwrap();
        let powers: Vec<_> = (0..n as u32).map(|k| flatten(&a.pow(k))).collect();
        let idems: Vec<_> = sd.idempotents().iter().map(flatten).collect();
        let sp = Subspace::span(f, n * n, &powers).unwrap();
        let si = Subspace::span(f, n * n, &idems).unwrap();
        prop_assert_eq!(sp.dim(), n);
        prop_assert_eq!(sp.intersection(&si).dim(), n);
    }
}
