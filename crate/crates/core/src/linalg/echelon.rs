//! Gauss–Jordan elimination on rectangular row lists.

use super::field::{Field, FieldElement};

/// Reduced row echelon form of a row list: nonzero rows only, each pivot
/// equal to one and the only nonzero entry of its column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref(mut rows: Vec<Vec<FieldElement>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    debug_assert!(rows.iter().all(|row| row.iter().any(|x| !x.is_zero())));
    Echelon { rows, pivots }
}

/// Basis of `{x : rows · x = 0}`, one vector per free column.
pub(crate) fn nullspace(field: Field, rows: Vec<Vec<FieldElement>>, ncols: usize) -> Vec<Vec<FieldElement>> {
    let ech = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

pub(crate) fn rank(rows: Vec<Vec<FieldElement>>, ncols: usize) -> usize {
    rref(rows, ncols).pivots.len()
}
