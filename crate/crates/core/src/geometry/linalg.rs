//! Dense exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (head, tail) = rows.split_at_mut(i.max(r));
                let (pivot_row, row) = if i < r {
                    (&tail[0], &mut head[i])
                } else {
                    (&head[r], &mut tail[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}

/// Coefficients `c` with `Σ c_j columns[j] = target`, provided the columns
/// are linearly independent. `None` if `target` is outside their span.
pub fn solve_in_span(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let n = target.len();
    // Augmented system: n equations, k unknowns.
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    if pivots.len() < k {
        // Dependent columns: the representation is not unique.
        return None;
    }
    let mut out = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = rows[r][k].clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    #[test]
    fn solves_arrow_character_decomposition() {
        // χ_a in the basis b1, b2, b3 of (1,1,1,1)^⊥.
        let basis = vec![ints(&[1, 1, -1, -1]), ints(&[1, -1, 1, -1]), ints(&[1, -1, -1, 1])];
        let x = solve_in_span(&basis, &ints(&[1, -1, 0, 0])).unwrap();
        assert_eq!(x, vec![int(0), frac(1, 2), frac(1, 2)]);
        assert_eq!(solve_in_span(&basis, &ints(&[1, 0, 0, 0])), None);
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&[ints(&[1, 2]), ints(&[2, 4])]), 1);
        assert_eq!(rank(&[ints(&[1, 2]), ints(&[2, 5])]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
