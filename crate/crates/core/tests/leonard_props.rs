mod common;

use common::{distinct_elements, gf, lower_bidiagonal, random_invertible, rng, sampled_array, upper_bidiagonal};
use leonard_kit::cli::documents::FieldSpec;
use leonard_kit::leonard::{
    check_parameter_array, construct_pair, eigenvalue_ratios, find_leonard_orderings, leonard_verdict, random_element,
    ParameterArray,
};
use leonard_kit::linalg::{FieldElement, SquareMatrix, Subspace, Vector};
use leonard_kit::split::{graded_polynomials, Orderings, PairSetup};
use leonard_kit::Error;
use proptest::prelude::*;

fn colinear(u: &Vector, v: &Vector) -> bool {
    let k = u.first_nonzero().unwrap();
    v.first_nonzero() == Some(k) && *v == u.scale(&(v.get(k) / u.get(k)))
}

fn permutations(xs: &[FieldElement]) -> Vec<Vec<FieldElement>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    (0..xs.len())
        .flat_map(|i| {
            let mut rest = xs.to_vec();
            let head = rest.remove(i);
            permutations(&rest).into_iter().map(move |mut p| {
                p.insert(0, head.clone());
                p
            })
        })
        .collect()
}

/// Every ordering pair passing the verdict, by exhaustive search.
fn orderings_by_enumeration(a: &SquareMatrix, a_star: &SquareMatrix, o: &Orderings) -> Vec<Orderings> {
    let mut out = Vec::new();
    for theta in permutations(&o.theta) {
        for theta_star in permutations(&o.theta_star) {
            let cand = Orderings::new(theta.clone(), theta_star);
            if leonard_verdict(a, a_star, &cand).unwrap().is_leonard_system {
                out.push(cand);
            }
        }
    }
    out
}

fn sorted(mut os: Vec<Orderings>) -> Vec<Orderings> {
    let key = |o: &Orderings| format!("{:?}", (&o.theta, &o.theta_star));
    os.sort_by_key(key);
    os
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bidiagonal_pairs_split_with_their_superdiagonal(seed in any::<u64>(), d in 0usize..7) {
        let f = gf();
        let mut r = rng(seed);
        let theta = distinct_elements(&mut r, f, d + 1);
        let theta_star = distinct_elements(&mut r, f, d + 1);
        let phi: Vec<FieldElement> = (0..d)
            .map(|_| loop {
                let x = random_element(&mut r, f);
                if !x.is_zero() {
                    break x;
                }
            })
            .collect();
        let a = lower_bidiagonal(&theta);
        let a_star = upper_bidiagonal(&theta_star, &phi);
        let setup = PairSetup::new(&a, &a_star, Some(&Orderings::new(theta, theta_star))).unwrap();
        prop_assert!(setup.exists_split());
        let cert = setup.build_split().unwrap();
        prop_assert_eq!(&cert.split_sequence, &phi);
    }

    #[test]
    fn split_is_unique_up_to_scaling(seed in any::<u64>(), d in 0usize..7, c in 1u64..997) {
        let pa = sampled_array(seed, d, FieldSpec::Gf(997));
        let (a, a_star) = construct_pair(&pa).unwrap();
        let m = random_invertible(&mut rng(seed ^ 0x5eed), pa.field, d + 1);
        let conj = |x: &SquareMatrix| &(&m.inverse().unwrap() * x) * &m;
        let setup = PairSetup::new(&conj(&a), &conj(&a_star), Some(&pa.orderings())).unwrap();
        let first = setup.build_split().unwrap();
        let start = setup.spectral_star().eigenspace(0).unwrap().scale(&pa.field.from_i64(c as i64));
        let second = setup.build_split_from(&start).unwrap();
        for (u, v) in first.basis().iter().zip(second.basis()) {
            prop_assert!(colinear(u, v));
        }
        prop_assert_eq!(&first.split_sequence, &pa.varphi);
        prop_assert_eq!(&second.split_sequence, &pa.varphi);
    }

    #[test]
    fn zero_pattern_matches_eigenbasis_entries(seed in any::<u64>(), n in 1usize..6, leonard in any::<bool>()) {
        let f = gf();
        let mut r = rng(seed);
        let (a, a_star) = if leonard {
            construct_pair(&sampled_array(seed, n - 1, FieldSpec::Gf(997))).unwrap()
        } else {
            let m = random_invertible(&mut r, f, n);
            let a = &(&m * &SquareMatrix::diagonal(f, &distinct_elements(&mut r, f, n))) * &m.inverse().unwrap();
            (a, SquareMatrix::diagonal(f, &distinct_elements(&mut r, f, n)))
        };
        let setup = PairSetup::new(&a, &a_star, None).unwrap();
        let p = setup.spectral_star().eigenbasis();
        let b = &(&p.inverse().unwrap() * &a) * &p;
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(setup.a_pattern().vanishes(i, j), b.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn dual_graded_polynomials_descend(seed in any::<u64>(), d in 0usize..6) {
        let pa = sampled_array(seed, d, FieldSpec::Gf(997));
        let (a, a_star) = construct_pair(&pa).unwrap();
        let setup = PairSetup::new(&a, &a_star, Some(&pa.orderings())).unwrap();
        let rev = setup.spectral().reversed();
        let gs = graded_polynomials(&a_star, &rev).unwrap();
        let start = setup.spectral().eigenspace(d).unwrap();
        for (i, g) in gs.iter().enumerate() {
            prop_assert_eq!(g.degree(), Some(i));
            let image = g.eval_at_matrix(&a_star).unwrap().apply(&start).unwrap();
            prop_assert!(!image.is_zero());
            prop_assert!(Subspace::column_space(setup.spectral().idempotent(d - i)).contains(&image));
        }
    }

    #[test]
    fn ratios_agree_and_theta_two_is_rigid(seed in any::<u64>(), d in 3usize..8, shift in 1i64..996) {
        let pa = sampled_array(seed, d, FieldSpec::Gf(997));
        prop_assert_eq!(eigenvalue_ratios(&pa.theta), eigenvalue_ratios(&pa.theta_star));
        let mut theta = pa.theta.clone();
        theta[2] = &theta[2] + &pa.field.from_i64(shift);
        prop_assume!(theta.iter().enumerate().all(|(i, x)| i == 2 || *x != theta[2]));
        let moved = ParameterArray::new(pa.field, theta, pa.theta_star.clone(), pa.varphi.clone()).unwrap();
        prop_assert!(!check_parameter_array(&moved).unwrap().valid);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ordering_search_matches_enumeration(seed in any::<u64>(), d in 1usize..4, kind in 0usize..3) {
        let f = gf();
        let mut r = rng(seed);
        let pa = sampled_array(seed, d, FieldSpec::Gf(997));
        let (a, a_star) = construct_pair(&pa).unwrap();
        let m = random_invertible(&mut r, f, d + 1);
        let conj = |x: &SquareMatrix| &(&m.inverse().unwrap() * x) * &m;
        let (a, a_star) = match kind {
            0 => (conj(&a), conj(&a_star)),
            1 => (conj(&a), a_star),
            _ => {
                let mut varphi = pa.varphi.clone();
                varphi[0] = &varphi[0] + &f.one();
                prop_assume!(!varphi[0].is_zero());
                (a, upper_bidiagonal(&pa.theta_star, &varphi))
            }
        };
        let found = find_leonard_orderings(&a, &a_star).unwrap();
        let expected = orderings_by_enumeration(&a, &a_star, &pa.orderings());
        prop_assert_eq!(sorted(found.clone()), sorted(expected));
        if kind == 0 {
            prop_assert_eq!(found.len(), 4);
        }
    }
}

#[test]
fn equal_matrices_have_no_leonard_ordering() {
    let f = gf();
    for d in 1..5 {
        let a = lower_bidiagonal(&distinct_elements(&mut rng(d as u64), f, d + 1));
        assert!(find_leonard_orderings(&a, &a).unwrap().is_empty());
    }
}

#[test]
fn diameter_zero_has_one_ordering() {
    let f = gf();
    let a = SquareMatrix::diagonal(f, &[f.from_i64(3)]);
    let b = SquareMatrix::diagonal(f, &[f.from_i64(5)]);
    assert_eq!(find_leonard_orderings(&a, &b).unwrap(), vec![Orderings::new(vec![f.from_i64(3)], vec![f.from_i64(5)])]);
}

#[test]
fn non_diagonalizable_input_is_rejected() {
    let f = gf();
    let jordan = SquareMatrix::from_fn(f, 2, |i, j| if j == i + 1 { f.one() } else { f.zero() });
    let diag = SquareMatrix::diagonal(f, &[f.zero(), f.one()]);
    assert_eq!(find_leonard_orderings(&jordan, &diag), Err(Error::NotMultiplicityFree));
}
