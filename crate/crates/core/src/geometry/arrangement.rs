//! Central hyperplane arrangements and their open cells.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::GeometryError;
use crate::geometry::feasibility::strict_feasible;
use crate::rational::{big_to_rational, dot, primitive_canonical, Rational};

/// Largest arrangement the exhaustive sign scan accepts.
pub const SCAN_LIMIT: usize = 24;

/// Side of a hyperplane. `Pos` sorts before `Neg`, which fixes the
/// lexicographic order of sign vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn of(value: &Rational) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Pos)
        } else if value.is_negative() {
            Some(Sign::Neg)
        } else {
            None
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn apply(self, form: &[Rational]) -> Vec<Rational> {
        match self {
            Sign::Pos => form.to_vec(),
            Sign::Neg => form.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    /// Primitive integer normal in working coordinates, first nonzero entry
    /// positive.
    pub normal: Vec<BigInt>,
    /// Indices of the input normals that restrict to this hyperplane.
    pub sources: Vec<usize>,
}

impl Hyperplane {
    pub fn form(&self) -> Vec<Rational> {
        big_to_rational(&self.normal)
    }

    pub fn eval(&self, v: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (a, x)| acc + x * a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
    /// For each input normal: its hyperplane and the sign relating the input
    /// to the canonical normal; `None` when it vanished on the subspace.
    pub index_map: Vec<Option<(usize, Sign)>>,
    /// Inputs whose restriction to the subspace is zero.
    pub dropped: Vec<usize>,
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Sign vector of `v`; `None` entries are hyperplanes through `v`.
    pub fn sign_vector(&self, v: &[Rational]) -> Vec<Option<Sign>> {
        self.hyperplanes.iter().map(|h| Sign::of(&h.eval(v))).collect()
    }
}

/// Expresses each normal in the coordinates of `subspace_basis` (the form
/// `x ↦ normal·(Σ x_j basis_j)`), scales it primitive with canonical sign and
/// merges proportional ones.
pub fn dedup_hyperplanes(normals: &[Vec<Rational>], subspace_basis: &[Vec<Rational>]) -> Arrangement {
    let forms: Vec<Vec<Rational>> = normals
        .iter()
        .map(|n| subspace_basis.iter().map(|b| dot(n, b)).collect())
        .collect();
    dedup_forms(&forms, subspace_basis.len())
}

/// Like [`dedup_hyperplanes`] for forms already in working coordinates.
pub fn dedup_forms(forms: &[Vec<Rational>], dim: usize) -> Arrangement {
    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    let mut index_map = Vec::with_capacity(forms.len());
    let mut dropped = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        assert_eq!(f.len(), dim);
        if f.iter().all(Zero::is_zero) {
            index_map.push(None);
            dropped.push(i);
            continue;
        }
        let (normal, s) = primitive_canonical(f);
        let sign = if s > 0 { Sign::Pos } else { Sign::Neg };
        let idx = match hyperplanes.iter().position(|h| h.normal == normal) {
            Some(idx) => idx,
            None => {
                hyperplanes.push(Hyperplane { normal, sources: Vec::new() });
                hyperplanes.len() - 1
            }
        };
        hyperplanes[idx].sources.push(i);
        index_map.push(Some((idx, sign)));
    }
    Arrangement { dim, hyperplanes, index_map, dropped }
}

/// An open polyhedral cone cut out by sign conditions on some hyperplanes of
/// an arrangement. Arrangement cells fix every sign; unions of cells (GIT
/// chambers) leave the hyperplanes crossing their interior as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberCone {
    pub signs: Vec<Option<Sign>>,
    /// Strictly interior point, in working coordinates.
    pub witness: Vec<Rational>,
}

impl ChamberCone {
    pub fn is_cell(&self) -> bool {
        self.signs.iter().all(Option::is_some)
    }

    /// The forms `sign_k · normal_k`; the closed cone is where all are ≥ 0.
    pub fn closure_inequalities(&self, arrangement: &Arrangement) -> Vec<Vec<Rational>> {
        self.signs
            .iter()
            .zip(&arrangement.hyperplanes)
            .filter_map(|(s, h)| s.map(|s| s.apply(&h.form())))
            .collect()
    }

    pub fn contains(&self, arrangement: &Arrangement, v: &[Rational]) -> bool {
        self.signs
            .iter()
            .zip(&arrangement.hyperplanes)
            .all(|(s, h)| s.map_or(true, |s| Sign::of(&h.eval(v)) == Some(s)))
    }

    pub fn closure_contains(&self, arrangement: &Arrangement, v: &[Rational]) -> bool {
        closure_contains(self, arrangement, v)
    }
}

/// True iff every closure inequality of `chamber` is nonnegative at `v`.
pub fn closure_contains(chamber: &ChamberCone, arrangement: &Arrangement, v: &[Rational]) -> bool {
    chamber
        .closure_inequalities(arrangement)
        .iter()
        .all(|f| !dot(f, v).is_negative())
}

fn cell_forms(arrangement: &Arrangement, signs: &[Option<Sign>]) -> Vec<Vec<Rational>> {
    signs
        .iter()
        .zip(&arrangement.hyperplanes)
        .filter_map(|(s, h)| s.map(|s| s.apply(&h.form())))
        .collect()
}

fn cell_witness(arrangement: &Arrangement, signs: &[Option<Sign>]) -> Option<Vec<Rational>> {
    strict_feasible(&cell_forms(arrangement, signs), &[], arrangement.dim)
        .witness()
        .map(<[Rational]>::to_vec)
}

/// Moves `w` along `target` until it crosses `target = 0`. Returns a point
/// past the crossing that keeps every assigned sign, if the segment reaches
/// the hyperplane before any other wall of the cell.
fn step_across(
    arrangement: &Arrangement,
    signs: &[Option<Sign>],
    w: &[Rational],
    target: &[Rational],
) -> Option<Vec<Rational>> {
    let speed = dot(target, target);
    let t_cross = -dot(target, w) / &speed;
    let mut limit: Option<Rational> = None;
    for (s, h) in signs.iter().zip(&arrangement.hyperplanes) {
        let Some(s) = s else { continue };
        let f = s.apply(&h.form());
        let rate = dot(&f, target);
        if !rate.is_negative() {
            continue;
        }
        let t = -dot(&f, w) / rate;
        if t <= t_cross {
            return None;
        }
        if limit.as_ref().map_or(true, |l| t < *l) {
            limit = Some(t);
        }
    }
    let t = match limit {
        Some(l) => (t_cross + l) / Rational::from_integer(2.into()),
        None => t_cross * Rational::from_integer(2.into()),
    };
    Some(w.iter().zip(target).map(|(a, b)| a + &t * b).collect())
}

/// Every open cell by exhaustive scan over all `2^n` sign vectors, in
/// lexicographic sign order.
pub fn enumerate_chambers(arrangement: &Arrangement) -> Result<Vec<ChamberCone>, GeometryError> {
    enumerate_cells_scan(arrangement, &[])
}

/// Cells with the given hyperplane signs held fixed, by exhaustive scan over
/// the remaining hyperplanes.
pub fn enumerate_cells_scan(
    arrangement: &Arrangement,
    fixed: &[(usize, Sign)],
) -> Result<Vec<ChamberCone>, GeometryError> {
    let free: Vec<usize> = (0..arrangement.len())
        .filter(|i| !fixed.iter().any(|(j, _)| j == i))
        .collect();
    if free.len() > SCAN_LIMIT {
        return Err(GeometryError::TooManyHyperplanes { count: free.len(), max: SCAN_LIMIT });
    }
    let k = free.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let mut signs = vec![None; arrangement.len()];
        for &(j, s) in fixed {
            signs[j] = Some(s);
        }
        for (pos, &j) in free.iter().enumerate() {
            let bit = mask >> (k - 1 - pos) & 1;
            signs[j] = Some(if bit == 0 { Sign::Pos } else { Sign::Neg });
        }
        if let Some(witness) = cell_witness(arrangement, &signs) {
            out.push(ChamberCone { signs, witness });
        }
    }
    Ok(out)
}

/// Cells with the given signs held fixed, built by inserting hyperplanes one
/// at a time and splitting every cell they cross. Output matches
/// [`enumerate_cells_scan`] exactly, including witnesses.
pub fn enumerate_cells_incremental(arrangement: &Arrangement, fixed: &[(usize, Sign)]) -> Vec<ChamberCone> {
    let mut root = vec![None; arrangement.len()];
    for &(j, s) in fixed {
        root[j] = Some(s);
    }
    let Some(w) = cell_witness(arrangement, &root) else {
        return Vec::new();
    };
    let mut cells = vec![(root, w)];
    for (j, h) in arrangement.hyperplanes.iter().enumerate() {
        if fixed.iter().any(|(f, _)| *f == j) {
            continue;
        }
        let form = h.form();
        let mut next = Vec::with_capacity(cells.len() * 2);
        for (signs, w) in cells {
            let side = Sign::of(&h.eval(&w));
            let mut base = cell_forms(arrangement, &signs);
            for s in [Sign::Pos, Sign::Neg] {
                let mut child = signs.clone();
                child[j] = Some(s);
                if side == Some(s) {
                    next.push((child, w.clone()));
                    continue;
                }
                if let Some(cw) = step_across(arrangement, &signs, &w, &s.apply(&form)) {
                    next.push((child, cw));
                    continue;
                }
                base.push(s.apply(&form));
                if let Some(cw) = strict_feasible(&base, &[], arrangement.dim).witness() {
                    next.push((child, cw.to_vec()));
                }
                base.pop();
            }
        }
        cells = next;
    }
    let mut out: Vec<ChamberCone> = cells
        .into_iter()
        .map(|(signs, _)| {
            let witness = cell_witness(arrangement, &signs).expect("cell was shown feasible");
            ChamberCone { signs, witness }
        })
        .collect();
    out.sort_by(|a, b| a.signs.cmp(&b.signs));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Enumeration {
    /// Scan for small arrangements, incremental otherwise.
    #[default]
    Auto,
    Scan,
    Incremental,
}

/// Below this many free hyperplanes `Auto` scans.
pub const AUTO_SCAN_MAX: usize = 10;

pub fn enumerate_cells(
    arrangement: &Arrangement,
    fixed: &[(usize, Sign)],
    mode: Enumeration,
) -> Result<Vec<ChamberCone>, GeometryError> {
    let free = arrangement.len() - fixed.len();
    match mode {
        Enumeration::Scan => enumerate_cells_scan(arrangement, fixed),
        Enumeration::Auto if free <= AUTO_SCAN_MAX => enumerate_cells_scan(arrangement, fixed),
        _ => Ok(enumerate_cells_incremental(arrangement, fixed)),
    }
}
