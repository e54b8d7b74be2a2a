use super::verdict::verdict_for;
use crate::error::Result;
use crate::linalg::{FieldElement, SquareMatrix};
use crate::spectral::SpectralData;
use crate::split::{zero_pattern, Orderings, PairSetup, ZeroPattern};

/// Every ordering pair making the pair a Leonard system.
///
/// Under a valid ordering the nonzero off-diagonal products `E*ᵢAE*ⱼ` link
/// exactly consecutive indices, so their support graph must be a path and
/// only its two traversals can work; likewise for `EᵢA*Eⱼ`. At most four
/// candidates are then tested in full.
pub fn find_leonard_orderings(a: &SquareMatrix, a_star: &SquareMatrix) -> Result<Vec<Orderings>> {
    let base = PairSetup::new(a, a_star, None)?;
    let sd = base.spectral();
    let sd_star = base.spectral_star();
    if sd.diameter() == 0 {
        return Ok(vec![base.orderings()]);
    }
    let star_paths = path_traversals(&zero_pattern(a, sd_star)?, sd_star);
    let paths = path_traversals(&zero_pattern(a_star, sd)?, sd);
    let mut found = Vec::new();
    for theta in &paths {
        for theta_star in &star_paths {
            let orderings = Orderings::new(theta.clone(), theta_star.clone());
            if verdict_for(&base.reordered(&orderings)?).is_leonard_system {
                found.push(orderings);
            }
        }
    }
    Ok(found)
}

/// Both traversals of the support graph of `zp` when it is a simple path,
/// as eigenvalue sequences of `sd`.
fn path_traversals(zp: &ZeroPattern, sd: &SpectralData) -> Vec<Vec<FieldElement>> {
    let n = zp.dim();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && (!zp.vanishes(i, j) || !zp.vanishes(j, i))).collect())
        .collect();
    let edges: usize = neighbours.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != n - 1 || neighbours.iter().any(|nb| nb.len() > 2) {
        return Vec::new();
    }
    let Some(start) = neighbours.iter().position(|nb| nb.len() == 1) else {
        return Vec::new();
    };
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = neighbours[cur].iter().find(|&&k| k != prev) {
        walk.push(next);
        prev = cur;
        cur = next;
    }
    if walk.len() != n {
        return Vec::new();
    }
    let forward: Vec<FieldElement> = walk.iter().map(|&i| sd.eigenvalue(i).clone()).collect();
    let mut backward = forward.clone();
    backward.reverse();
    vec![forward, backward]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leonard::{construct_pair, ParameterArray};
    use crate::linalg::Field;

    #[test]
    fn derived_instance_has_four_orderings() {
        let q = Field::Rationals;
        let ints = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let pa = ParameterArray::new(q, ints(&[2, 0, -2]), ints(&[2, 0, -2]), ints(&[-4, -4])).unwrap();
        let (a, a_star) = construct_pair(&pa).unwrap();
        let found = find_leonard_orderings(&a, &a_star).unwrap();
        let o = pa.orderings();
        assert_eq!(found.len(), 4);
        for cand in [o.clone(), o.theta_reversed(), o.theta_star_reversed(), o.theta_reversed().theta_star_reversed()] {
            assert!(found.contains(&cand));
        }
    }

    #[test]
    fn commuting_pair_has_none() {
        let q = Field::Rationals;
        let a = SquareMatrix::diagonal(q, &[q.from_i64(1), q.from_i64(2), q.from_i64(3)]);
        assert!(find_leonard_orderings(&a, &a).unwrap().is_empty());
    }
}
