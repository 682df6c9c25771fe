//! Fourier–Motzkin elimination for homogeneous strict/nonstrict systems.
//!
//! Independent of the simplex in [`super::feasibility`]; the two are
//! cross-checked in tests. Intermediate systems grow quickly, so this is
//! meant for small systems (a handful of variables, a few dozen forms).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{dot, primitive_positive, Rational};

#[derive(Debug, Clone)]
struct Constraint {
    coef: Vec<Rational>,
    strict: bool,
}

/// Returns a point with `strict_i·x > 0` and `nonstrict_j·x ≥ 0`, or `None`.
pub fn fm_feasible(strict: &[Vec<Rational>], nonstrict: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    let initial: Vec<Constraint> = strict
        .iter()
        .map(|c| Constraint { coef: c.clone(), strict: true })
        .chain(nonstrict.iter().map(|c| Constraint { coef: c.clone(), strict: false }))
        .collect();
    let initial = normalize(initial)?;

    // levels[k] only involves variables 0..k.
    let mut levels = vec![initial];
    for k in (0..dim).rev() {
        let current = levels.last().unwrap();
        let mut next = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for c in current {
            if c.coef[k].is_positive() {
                lower.push(c);
            } else if c.coef[k].is_negative() {
                upper.push(c);
            } else {
                next.push(c.clone());
            }
        }
        for p in &lower {
            for n in &upper {
                let cp = p.coef[k].clone();
                let cn = -n.coef[k].clone();
                let coef: Vec<Rational> = p.coef.iter().zip(&n.coef).map(|(a, b)| a * &cn + b * &cp).collect();
                next.push(Constraint { coef, strict: p.strict || n.strict });
            }
        }
        levels.push(normalize(next)?);
    }

    let mut x = vec![Rational::zero(); dim];
    for k in 0..dim {
        // Constraints over variables 0..=k.
        let system = &levels[dim - 1 - k];
        let mut lo: Option<(Rational, bool)> = None;
        let mut hi: Option<(Rational, bool)> = None;
        for c in system {
            let ck = &c.coef[k];
            if ck.is_zero() {
                continue;
            }
            let rest: Rational = c.coef[..k].iter().zip(&x[..k]).fold(Rational::zero(), |a, (u, v)| a + u * v);
            let bound = -rest / ck;
            if ck.is_positive() {
                if lo.as_ref().map_or(true, |(b, s)| bound > *b || (bound == *b && c.strict && !s)) {
                    lo = Some((bound, c.strict));
                }
            } else if hi.as_ref().map_or(true, |(b, s)| bound < *b || (bound == *b && c.strict && !s)) {
                hi = Some((bound, c.strict));
            }
        }
        x[k] = match (lo, hi) {
            (None, None) => Rational::zero(),
            (Some((l, _)), None) => l + Rational::from_integer(BigInt::from(1)),
            (None, Some((h, _))) => h - Rational::from_integer(BigInt::from(1)),
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / Rational::from_integer(BigInt::from(2)),
        };
    }
    let ok = strict.iter().all(|a| dot(a, &x).is_positive()) && nonstrict.iter().all(|b| !dot(b, &x).is_negative());
    assert!(ok, "Fourier-Motzkin back-substitution produced an invalid point");
    Some(x)
}

/// Scales every constraint to a primitive integer form and merges duplicates;
/// `None` if a strict constraint has become `0 > 0`.
fn normalize(constraints: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut merged: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
    for c in constraints {
        if c.coef.iter().all(Zero::is_zero) {
            if c.strict {
                return None;
            }
            continue;
        }
        let (key, _) = primitive_positive(&c.coef);
        let entry = merged.entry(key).or_insert(false);
        *entry |= c.strict;
    }
    Some(
        merged
            .into_iter()
            .map(|(k, strict)| Constraint {
                coef: k.into_iter().map(Rational::from_integer).collect(),
                strict,
            })
            .collect(),
    )
}
