use crate::error::{Error, Result};
use crate::linalg::{rank_of, FieldElement, Polynomial, SquareMatrix, Subspace, Vector};
use crate::spectral::SpectralData;

/// Polynomials `f₀..f_d` with `deg fᵢ = i` and `fᵢ(A) v*₀ = v*ᵢ`, where `v*ᵢ`
/// spans `E*ᵢV`.
///
/// Writing `A v*ⱼ = Σᵢ Bᵢⱼ v*ᵢ`, they follow from
/// `f_{j+1} = (x fⱼ − Σ_{i≤j} Bᵢⱼ fᵢ) / B_{j+1,j}`, which needs `B` zero
/// below its subdiagonal and nonzero on it.
pub fn graded_polynomials(a: &SquareMatrix, sd_star: &SpectralData) -> Result<Vec<Polynomial>> {
    let field = a.field();
    if field != sd_star.matrix().field() {
        return Err(Error::DescriptorMismatch);
    }
    let n = a.dim();
    if n != sd_star.matrix().dim() {
        return Err(Error::DimMismatch { expected: n, found: sd_star.matrix().dim() });
    }
    let p = sd_star.eigenbasis();
    let b = &(&p.inverse()? * a) * &p;
    for j in 0..n {
        for i in j + 1..n {
            let vanishes = b.get(i, j).is_zero();
            if i == j + 1 && vanishes {
                return Err(Error::PatternViolation(format!("subdiagonal entry ({i}, {j}) vanishes")));
            }
            if i > j + 1 && !vanishes {
                return Err(Error::PatternViolation(format!("entry ({i}, {j}) below the subdiagonal")));
            }
        }
    }
    let mut fs = vec![Polynomial::constant(field.one())];
    for j in 0..n - 1 {
        let mut next = fs[j].shift_up();
        for (i, f) in fs.iter().enumerate() {
            next = next.sub(&f.scale(b.get(i, j)));
        }
        let pivot = b.get(j + 1, j).inv().expect("nonzero subdiagonal");
        fs.push(next.scale(&pivot));
    }
    let start = sd_star.eigenspace(0)?;
    for (i, f) in fs.iter().enumerate() {
        let image = eval_on(f, a, &start);
        let line = Subspace::column_space(sd_star.idempotent(i));
        if f.degree() != Some(i) || image.is_zero() || !line.contains(&image) {
            return Err(Error::CertificateCheck(format!("f{i}(A)v*₀ is not in E*{i}V")));
        }
    }
    Ok(fs)
}

/// `V` is cyclic for `A` with generator `v*₀`: the vectors `A^h v*₀`,
/// `0 ≤ h ≤ d`, are independent, so `V ≅ F[x]/(char poly)` as an `A`-module.
pub fn iso_to_module_check(a: &SquareMatrix, sd_star: &SpectralData) -> Result<bool> {
    if a.field() != sd_star.matrix().field() {
        return Err(Error::DescriptorMismatch);
    }
    if a.dim() != sd_star.matrix().dim() {
        return Err(Error::DimMismatch { expected: a.dim(), found: sd_star.matrix().dim() });
    }
    let mut krylov = vec![sd_star.eigenspace(0)?];
    for h in 1..a.dim() {
        krylov.push(a.apply(&krylov[h - 1])?);
    }
    Ok(rank_of(&krylov) == a.dim())
}

/// `f(A) v` by Horner's rule on vectors.
fn eval_on(f: &Polynomial, a: &SquareMatrix, v: &Vector) -> Vector {
    f.coeffs().iter().rev().fold(Vector::zeros(v.field(), v.dim()), |acc: Vector, c: &FieldElement| {
        a.apply_unchecked(&acc).add(&v.scale(c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::split::{Orderings, PairSetup};

    fn setup(theta: &[i64], theta_star: &[i64], phi: &[i64]) -> PairSetup {
        let f = Field::Rationals;
        let n = theta.len();
        let a = SquareMatrix::from_fn(f, n, |i, j| match () {
            _ if i == j => f.from_i64(theta[i]),
            _ if i == j + 1 => f.one(),
            _ => f.zero(),
        });
        let a_star = SquareMatrix::from_fn(f, n, |i, j| match () {
            _ if i == j => f.from_i64(theta_star[i]),
            _ if j == i + 1 => f.from_i64(phi[i]),
            _ => f.zero(),
        });
        let el = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        PairSetup::new(&a, &a_star, Some(&Orderings::new(el(theta), el(theta_star)))).unwrap()
    }

    #[test]
    fn diameter_one_by_hand() {
        // A = [[1,0],[1,0]], A* = [[1,1],[0,0]]: v*₀ = e₀, v*₁ = (1,−1),
        // A v*₀ = (1,1) = 2v*₀ − v*₁, so f₁ = (x − 2)/(−1) = 2 − x.
        let s = setup(&[1, 0], &[1, 0], &[1]);
        let f = Field::Rationals;
        let fs = graded_polynomials(s.a(), s.spectral_star()).unwrap();
        assert_eq!(fs[0], Polynomial::constant(f.one()));
        assert_eq!(fs[1], Polynomial::new(f, vec![f.from_i64(2), f.from_i64(-1)]).unwrap());
        assert!(iso_to_module_check(s.a(), s.spectral_star()).unwrap());
    }

    #[test]
    fn dual_side_from_reversed_theta() {
        let s = setup(&[2, 0, -2], &[2, 0, -2], &[-4, -4]);
        let fs = graded_polynomials(s.a(), s.spectral_star()).unwrap();
        assert_eq!(fs.len(), 3);
        let rev = s.spectral().reversed();
        let gs = graded_polynomials(s.a_star(), &rev).unwrap();
        assert!(gs.iter().enumerate().all(|(i, g)| g.degree() == Some(i)));
        assert!(iso_to_module_check(s.a_star(), &rev).unwrap());
    }

    #[test]
    fn wrong_order_is_a_pattern_violation() {
        let f = Field::Rationals;
        let el = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let s = setup(&[2, 0, -2], &[2, 0, -2], &[-4, -4])
            .reordered(&Orderings::new(el(&[2, 0, -2]), el(&[0, 2, -2])))
            .unwrap();
        assert!(matches!(graded_polynomials(s.a(), s.spectral_star()), Err(Error::PatternViolation(_))));
    }
}
