//! Walls and divisor characters drawn on a two-dimensional slice.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::analysis::chambers::QuiverAnalysis;
use crate::error::{GeometryError, Result};
use crate::geometry::slice::{line_of, SliceForm, SliceObject, SliceSpec};
use crate::rational::{combine, dot, ints, primitive_positive, rational_content, Rational};

/// Direction into which the semistable half-plane of a wall opens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    PosX,
    NegX,
    PosY,
    NegY,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::PosX => "pos. x-axis",
            Side::NegX => "neg. x-axis",
            Side::PosY => "pos. y-axis",
            Side::NegY => "neg. y-axis",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceWall {
    pub object: SliceObject,
    /// Semistable side; `None` unless `object` is a line.
    pub extends_to: Option<Side>,
    /// The semistable form `−n_e` restricted to the slice.
    pub form: SliceForm,
}

/// Slice traces of every subdimension class wall.
///
/// The semistable form of class `e` is the primitive integer vector along
/// `−n_e`. Its slice gradient is divided by the gcd of all slice gradients
/// of the character lattice, so the line direction does not depend on the
/// working basis. The semistable side is to the left of `b`, and is
/// reported along `x` whenever the gradient has an `x` component.
pub fn slice_walls(analysis: &QuiverAnalysis, slice: &SliceSpec) -> Result<Vec<SliceWall>> {
    let n = analysis.quiver.vertex_count();
    if slice.dim() != analysis.basis.len() {
        return Err(GeometryError::DimensionMismatch { expected: analysis.basis.len(), got: slice.dim() }.into());
    }
    let rows: Vec<Vec<Rational>> = analysis.basis.iter().map(|v| ints(v)).collect();
    let u1 = combine(slice.u1(), &rows, n);
    let u2 = combine(slice.u2(), &rows, n);
    let p = match slice {
        SliceSpec::Affine { p, .. } => combine(p, &rows, n),
        SliceSpec::Linear { .. } => vec![Rational::zero(); n],
    };
    let gradients: Vec<Rational> = analysis
        .lattice_basis
        .iter()
        .flat_map(|k| {
            let k = ints(k);
            [dot(&k, &u1), dot(&k, &u2)]
        })
        .collect();
    let content = rational_content(&gradients);

    Ok(analysis
        .classes
        .iter()
        .map(|c| {
            let v: Vec<Rational> = c.slope_normal.iter().map(|&x| Rational::from_integer((-x).into())).collect();
            let (v, _) = primitive_positive(&v);
            let v: Vec<Rational> = v.into_iter().map(Rational::from_integer).collect();
            let mut form = SliceForm { constant: dot(&v, &p), ds: dot(&v, &u1), dt: dot(&v, &u2) };
            if !content.is_zero() {
                form.ds /= &content;
                form.dt /= &content;
                form.constant /= &content;
            }
            let object = line_of(&form);
            let extends_to = match object {
                SliceObject::Line { .. } => Some(if !form.ds.is_zero() {
                    if form.ds.is_positive() { Side::PosX } else { Side::NegX }
                } else if form.dt.is_positive() {
                    Side::PosY
                } else {
                    Side::NegY
                }),
                _ => None,
            };
            SliceWall { object, extends_to, form }
        })
        .collect())
}
