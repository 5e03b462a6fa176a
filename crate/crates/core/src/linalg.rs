//! Exact dense linear algebra over the integers: fraction-free determinants,
//! interpolation at consecutive integers, rank, and characteristic
//! polynomials of small integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::IntPoly;

/// Determinant by Bareiss elimination with row pivoting. Consumes the matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let pkj = &pivot_row[j];
                if factor.is_zero() || pkj.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    row[j] = &row[j] * pivot / &prev;
                } else {
                    row[j] = (&row[j] * pivot - &factor * pkj) / &prev;
                }
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// The polynomial of degree < `values.len()` taking `values[i]` at `x = i`.
///
/// Forward differences give the falling-factorial coefficients, which are
/// integral for integer polynomials; `None` if they are not (the values did
/// not come from an integer polynomial of that degree).
pub fn interpolate_consecutive(values: &[BigInt]) -> Option<IntPoly> {
    let k = values.len();
    if k == 0 {
        return Some(IntPoly::zero());
    }
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(k);
    let mut fact = BigInt::one();
    for step in 0..k {
        if step > 0 {
            fact *= BigInt::from(step);
        }
        if !(&diffs[0] % &fact).is_zero() {
            return None;
        }
        newton.push(&diffs[0] / &fact);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    // Horner in the falling-factorial basis: c0 + x(c1 + (x-1)(c2 + ...)).
    let mut p = IntPoly::zero();
    for (j, c) in newton.iter().enumerate().rev() {
        let lin = IntPoly::from_terms([(1u64, BigInt::one()), (0, BigInt::from(-(j as i64)))]);
        p = &(&p * &lin) + &IntPoly::constant(c.clone());
    }
    Some(p)
}

/// `det(lambda I - A)` at an integer point; `a` is given by sparse rows.
pub fn char_matrix_det(a: &[Vec<(usize, i64)>], lambda: i64) -> BigInt {
    let n = a.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        m[i][i] = BigInt::from(lambda);
        for &(j, v) in row {
            m[i][j] -= BigInt::from(v);
        }
    }
    bareiss_det(m)
}

/// Characteristic polynomial `det(lambda I - A)` of a small integer matrix,
/// by evaluation at `0..=n` and interpolation.
pub fn charpoly_dense(a: &[Vec<(usize, i64)>]) -> IntPoly {
    let n = a.len();
    let values: Vec<BigInt> = (0..=n as i64)
        .into_par_iter()
        .map(|x| char_matrix_det(a, x))
        .collect();
    interpolate_consecutive(&values).expect("determinants of an integer matrix")
}

/// Rank over the rationals, by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            for j in col..n_cols {
                row[j] = (&row[j] * &pivot_row[col] - &factor * &pivot_row[j]) / &prev;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}
