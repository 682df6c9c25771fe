//! Exact feasibility of homogeneous systems `A x > 0, B x ≥ 0`.
//!
//! By Motzkin's transposition theorem the system is infeasible iff there are
//! `y ≥ 0` with `Σ y = 1` and `z ≥ 0` such that `Aᵀy + Bᵀz = 0`. That
//! alternative system is solved as the phase-one problem of a dense
//! simplex. When it has no solution, the optimal phase-one duals
//! `π = (π_x, π_s)` satisfy `π_x·a_i ≤ −π_s < 0` and `π_x·b_j ≤ 0`, so
//! `x = −π_x` is an exact witness. Both outcomes are checked before they
//! are returned.

use num_traits::{One, Signed, Zero};

use crate::rational::{dot, primitive_positive, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point with every strict form positive and every nonstrict form
    /// nonnegative, scaled to a primitive integer vector.
    Feasible(Vec<Rational>),
    /// Multipliers `(y, z)`: nonnegative, `Σ y = 1`, `Σ y_i a_i + Σ z_j b_j = 0`.
    Infeasible { strict: Vec<Rational>, nonstrict: Vec<Rational> },
}

impl Feasibility {
    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible { .. } => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides `strict_i · x > 0` (all i), `nonstrict_j · x ≥ 0` (all j) over `Q^dim`.
pub fn strict_feasible(strict: &[Vec<Rational>], nonstrict: &[Vec<Rational>], dim: usize) -> Feasibility {
    for f in strict.iter().chain(nonstrict) {
        assert_eq!(f.len(), dim, "form has wrong dimension");
    }
    if strict.is_empty() {
        return Feasibility::Feasible(vec![Rational::zero(); dim]);
    }
    let m = strict.len();
    let p = nonstrict.len();
    let rows = dim + 1;
    let structural = m + p;
    let cols = structural + rows;

    let mut t: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols]; rows];
    for (i, a) in strict.iter().enumerate() {
        for r in 0..dim {
            t[r][i] = a[r].clone();
        }
        t[dim][i] = Rational::one();
    }
    for (j, b) in nonstrict.iter().enumerate() {
        for r in 0..dim {
            t[r][m + j] = b[r].clone();
        }
    }
    for r in 0..rows {
        t[r][structural + r] = Rational::one();
    }
    let mut rhs = vec![Rational::zero(); rows];
    rhs[dim] = Rational::one();
    let mut basis: Vec<usize> = (structural..cols).collect();

    // Reduced costs of "minimize the sum of artificials".
    let mut reduced: Vec<Rational> = (0..cols)
        .map(|j| {
            if j < structural {
                -(0..rows).fold(Rational::zero(), |acc, r| acc + &t[r][j])
            } else {
                Rational::zero()
            }
        })
        .collect();
    let mut value = Rational::one();

    // Dantzig pricing until a run of degenerate pivots, then Bland's rule,
    // which cannot cycle.
    let mut degenerate_run = 0usize;
    let mut bland = false;
    loop {
        let enter = if bland {
            (0..cols).find(|&j| reduced[j].is_negative())
        } else {
            (0..cols)
                .filter(|&j| reduced[j].is_negative())
                .min_by(|&a, &b| reduced[a].cmp(&reduced[b]).then(a.cmp(&b)))
        };
        let Some(enter) = enter else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &t[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (r, ratio) = leave.expect("phase-one objective is bounded below");
        if ratio.is_zero() {
            degenerate_run += 1;
            bland |= degenerate_run > rows;
        } else {
            degenerate_run = 0;
        }
        pivot(&mut t, &mut rhs, r, enter);
        let f = reduced[enter].clone();
        for (d, x) in reduced.iter_mut().zip(&t[r]) {
            *d -= &f * x;
        }
        value += &f * &rhs[r];
        basis[r] = enter;
    }

    if value.is_zero() {
        let mut y = vec![Rational::zero(); structural];
        for (r, &b) in basis.iter().enumerate() {
            if b < structural {
                y[b] = rhs[r].clone();
            }
        }
        let nonstrict_part = y.split_off(m);
        return Feasibility::Infeasible { strict: y, nonstrict: nonstrict_part };
    }

    let x: Vec<Rational> = (0..dim)
        .map(|r| reduced[structural + r].clone() - Rational::one())
        .collect();
    let (w, _) = primitive_positive(&x);
    let w: Vec<Rational> = w.into_iter().map(Rational::from_integer).collect();
    assert!(
        strict.iter().all(|a| dot(a, &w).is_positive())
            && nonstrict.iter().all(|b| !dot(b, &w).is_negative()),
        "simplex dual witness failed verification"
    );
    Feasibility::Feasible(w)
}

fn pivot(t: &mut [Vec<Rational>], rhs: &mut [Rational], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    rhs[r] *= &inv;
    let pivot_row = t[r].clone();
    let pivot_rhs = rhs[r].clone();
    for i in 0..t.len() {
        if i == r || t[i][c].is_zero() {
            continue;
        }
        let f = t[i][c].clone();
        for (x, y) in t[i].iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        rhs[i] -= &f * &pivot_rhs;
    }
}
