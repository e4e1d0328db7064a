//! Gaussian elimination over F_p.

use super::matrix::ExactMatrix;
use super::prime_field::PrimeField;
use super::MathError;

/// Reduced row echelon form in place; returns the pivot columns in order.
pub fn rref(field: &PrimeField, rows: &mut [Vec<u64>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let factor = rows[i][c];
            let pivot_row = rows[r].clone();
            for (x, &y) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &PrimeField, rows: &[Vec<u64>]) -> usize {
    let mut work = rows.to_vec();
    rref(field, &mut work).len()
}

/// Null-space basis in any characteristic. One vector per free column, in
/// increasing column order, with a 1 in that column.
pub fn nullspace(field: &PrimeField, m: &ExactMatrix<u64>) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| x % field.modulus()).collect())
        .collect();
    let pivots = rref(field, &mut rows);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(rows[r][fc]);
            }
            v
        })
        .collect()
}

/// Kernel of a matrix over F_p for odd p. Characteristic 2 is rejected:
/// kernels of Gram matrices are meaningless there.
pub fn kernel_mod_p(field: &PrimeField, m: &ExactMatrix<u64>) -> Result<Vec<Vec<u64>>, MathError> {
    if field.modulus() == 2 {
        return Err(MathError::CharacteristicTwo);
    }
    Ok(nullspace(field, m))
}

/// Inverse of a square matrix over F_p, or `None` if singular.
pub fn inverse(field: &PrimeField, m: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&x| x % field.modulus()).collect();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(field: &PrimeField, m: &ExactMatrix<u64>, v: &[u64]) -> Vec<u64> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}
