//! Integer kernel lattices.

use crate::error::GeometryError;
use crate::geometry::linalg;
use crate::rational::{ints, Rational};

/// Integer basis of `{θ ∈ Z^n : θ·d = 0}`.
///
/// Unimodular column operations reduce the row vector `d` to `(g, 0, …, 0)`;
/// the transformed unit vectors of the eliminated columns then span the
/// kernel over `Z`. Each basis vector is normalized so that its first
/// nonzero entry is positive. Panics if `d` is zero.
pub fn kernel_basis(d: &[i64]) -> Vec<Vec<i64>> {
    assert!(d.iter().any(|&x| x != 0), "kernel_basis needs a nonzero vector");
    let n = d.len();
    let mut row = d.to_vec();
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect();
    loop {
        let pivot = (0..n)
            .filter(|&j| row[j] != 0)
            .min_by_key(|&j| (row[j].abs(), j))
            .expect("nonzero row");
        let mut changed = false;
        for j in 0..n {
            if j == pivot || row[j] == 0 {
                continue;
            }
            let q = row[j].div_euclid(row[pivot]);
            row[j] -= q * row[pivot];
            let p = cols[pivot].clone();
            for (x, y) in cols[j].iter_mut().zip(&p) {
                *x -= q * y;
            }
            changed = true;
        }
        if !changed {
            let mut basis: Vec<Vec<i64>> = (0..n)
                .filter(|&j| j != pivot)
                .map(|j| cols[j].clone())
                .collect();
            for v in &mut basis {
                if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            return basis;
        }
    }
}

/// Checks that `vectors` is a rational basis of `d^⊥`: the right count, each
/// vector orthogonal to `d`, and linearly independent.
pub fn check_perp_basis(d: &[i64], vectors: &[Vec<i64>]) -> Result<(), GeometryError> {
    let expected = d.len().saturating_sub(1);
    if vectors.len() != expected {
        return Err(GeometryError::InvalidBasis(format!(
            "expected {expected} vectors, got {}",
            vectors.len()
        )));
    }
    for v in vectors {
        if v.len() != d.len() {
            return Err(GeometryError::DimensionMismatch { expected: d.len(), got: v.len() });
        }
        let pairing: i64 = v.iter().zip(d).map(|(a, b)| a * b).sum();
        if pairing != 0 {
            return Err(GeometryError::InvalidBasis(format!(
                "vector {} pairs to {pairing} with d",
                crate::rational::fmt_int_tuple(v)
            )));
        }
    }
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| ints(v)).collect();
    if linalg::rank(&rows) != expected {
        return Err(GeometryError::InvalidBasis("vectors are linearly dependent".into()));
    }
    Ok(())
}
