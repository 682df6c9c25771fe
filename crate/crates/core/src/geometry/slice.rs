//! Two-dimensional slices of the character space, used to draw chambers.
//!
//! An affine slice is the plane `x(s,t) = p + s·u1 + t·u2` not passing through
//! the origin; every ray from the origin meets it at most once, so cones
//! become polygons and characters become limit points or directions. A
//! linear slice is a 2-dimensional subspace drawn as it is.

use num_traits::{One, Signed, Zero};

use crate::error::GeometryError;
use crate::geometry::linalg::{rank, solve_in_span};
use crate::rational::{dot, primitive_positive, Rational};

pub type Point2 = [Rational; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SliceSpec {
    Affine { p: Vec<Rational>, u1: Vec<Rational>, u2: Vec<Rational> },
    Linear { u1: Vec<Rational>, u2: Vec<Rational> },
}

impl SliceSpec {
    /// Rejects dependent `u1, u2` and `p ∈ span(u1, u2)`.
    pub fn affine(p: Vec<Rational>, u1: Vec<Rational>, u2: Vec<Rational>) -> Result<Self, GeometryError> {
        let dim = p.len();
        for v in [&u1, &u2] {
            if v.len() != dim {
                return Err(GeometryError::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        if rank(&[u1.clone(), u2.clone()]) < 2 {
            return Err(GeometryError::DegenerateSlice("u1 and u2 are linearly dependent".into()));
        }
        if rank(&[p.clone(), u1.clone(), u2.clone()]) < 3 {
            return Err(GeometryError::DegenerateSlice("p lies in span(u1, u2)".into()));
        }
        Ok(SliceSpec::Affine { p, u1, u2 })
    }

    pub fn linear(u1: Vec<Rational>, u2: Vec<Rational>) -> Result<Self, GeometryError> {
        if u1.len() != u2.len() {
            return Err(GeometryError::DimensionMismatch { expected: u1.len(), got: u2.len() });
        }
        if rank(&[u1.clone(), u2.clone()]) < 2 {
            return Err(GeometryError::DegenerateSlice("u1 and u2 are linearly dependent".into()));
        }
        Ok(SliceSpec::Linear { u1, u2 })
    }

    pub fn dim(&self) -> usize {
        match self {
            SliceSpec::Affine { p, .. } => p.len(),
            SliceSpec::Linear { u1, .. } => u1.len(),
        }
    }

    pub fn u1(&self) -> &[Rational] {
        match self {
            SliceSpec::Affine { u1, .. } | SliceSpec::Linear { u1, .. } => u1,
        }
    }

    pub fn u2(&self) -> &[Rational] {
        match self {
            SliceSpec::Affine { u2, .. } | SliceSpec::Linear { u2, .. } => u2,
        }
    }

    /// The point with slice coordinates `(s, t)`, in working coordinates.
    pub fn point(&self, s: &Rational, t: &Rational) -> Vec<Rational> {
        let base: Vec<Rational> = match self {
            SliceSpec::Affine { p, .. } => p.clone(),
            SliceSpec::Linear { u1, .. } => vec![Rational::zero(); u1.len()],
        };
        base.iter()
            .zip(self.u1())
            .zip(self.u2())
            .map(|((b, x), y)| b + s * x + t * y)
            .collect()
    }

    /// The affine function `(s, t) ↦ form(x(s, t))`.
    pub fn restrict_form(&self, form: &[Rational]) -> SliceForm {
        let constant = match self {
            SliceSpec::Affine { p, .. } => dot(form, p),
            SliceSpec::Linear { .. } => Rational::zero(),
        };
        SliceForm { constant, ds: dot(form, self.u1()), dt: dot(form, self.u2()) }
    }
}

/// `constant + ds·s + dt·t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceForm {
    pub constant: Rational,
    pub ds: Rational,
    pub dt: Rational,
}

impl SliceForm {
    pub fn eval(&self, pt: &Point2) -> Rational {
        &self.constant + &self.ds * &pt[0] + &self.dt * &pt[1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SliceObject {
    /// `x(τ) = a + τ·b`; the form is positive to the left of `b`.
    Line { a: Point2, b: Point2 },
    /// Limit point of a character direction (or the character itself on a
    /// linear slice).
    Point(Point2),
    /// Direction parallel to the slice, as a primitive integer vector.
    Direction(Point2),
    /// The hyperplane misses the slice.
    Absent,
    /// The hyperplane contains the slice.
    Everywhere,
    /// The character points away from the slice (`c_p < 0`).
    ExitsSlice { c_p: Rational, c1: Rational, c2: Rational },
}

/// Intersection of the hyperplane `form = 0` with the slice.
pub fn restrict_to_slice(form: &[Rational], slice: &SliceSpec) -> SliceObject {
    line_of(&slice.restrict_form(form))
}

pub fn line_of(f: &SliceForm) -> SliceObject {
    if f.ds.is_zero() && f.dt.is_zero() {
        return if f.constant.is_zero() {
            SliceObject::Everywhere
        } else {
            SliceObject::Absent
        };
    }
    let a = if !f.dt.is_zero() {
        [Rational::zero(), -&f.constant / &f.dt]
    } else {
        [-&f.constant / &f.ds, Rational::zero()]
    };
    SliceObject::Line { a, b: [f.dt.clone(), -&f.ds] }
}

/// Where the direction `chi` goes on the slice.
///
/// With `chi = c_p·p + c1·u1 + c2·u2`, translating any slice point by `n·chi`
/// and projecting back along rays converges to `(c1/c_p, c2/c_p)` when
/// `c_p > 0`, and moves along `(c1, c2)` when `c_p = 0`.
pub fn direction_on_slice(chi: &[Rational], slice: &SliceSpec) -> Result<SliceObject, GeometryError> {
    if chi.len() != slice.dim() {
        return Err(GeometryError::DimensionMismatch { expected: slice.dim(), got: chi.len() });
    }
    match slice {
        SliceSpec::Linear { u1, u2 } => {
            let c = solve_in_span(&[u1.clone(), u2.clone()], chi).ok_or(GeometryError::NotInSliceSpan)?;
            Ok(SliceObject::Point([c[0].clone(), c[1].clone()]))
        }
        SliceSpec::Affine { p, u1, u2 } => {
            let c = solve_in_span(&[p.clone(), u1.clone(), u2.clone()], chi).ok_or(GeometryError::NotInSliceSpan)?;
            let [c_p, c1, c2]: [Rational; 3] = c.try_into().expect("three coefficients");
            Ok(if c_p.is_positive() {
                SliceObject::Point([&c1 / &c_p, &c2 / &c_p])
            } else if c_p.is_zero() {
                let (dir, _) = primitive_positive(&[c1, c2]);
                SliceObject::Direction([
                    Rational::from_integer(dir[0].clone()),
                    Rational::from_integer(dir[1].clone()),
                ])
            } else {
                SliceObject::ExitsSlice { c_p, c1, c2 }
            })
        }
    }
}

/// Slice coordinates of the point where the ray through `v` meets the
/// slice, if it does.
pub fn project_point(v: &[Rational], slice: &SliceSpec) -> Option<Point2> {
    match direction_on_slice(v, slice).ok()? {
        SliceObject::Point(pt) => Some(pt),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Viewport {
    pub xmin: Rational,
    pub xmax: Rational,
    pub ymin: Rational,
    pub ymax: Rational,
}

impl Viewport {
    pub fn new(xmin: Rational, xmax: Rational, ymin: Rational, ymax: Rational) -> Self {
        Viewport { xmin, xmax, ymin, ymax }
    }

    pub fn contains(&self, pt: &Point2) -> bool {
        pt[0] >= self.xmin && pt[0] <= self.xmax && pt[1] >= self.ymin && pt[1] <= self.ymax
    }

    fn half_planes(&self) -> [SliceForm; 4] {
        let one = Rational::one;
        let zero = Rational::zero;
        [
            SliceForm { constant: -&self.xmin, ds: one(), dt: zero() },
            SliceForm { constant: self.xmax.clone(), ds: -one(), dt: zero() },
            SliceForm { constant: -&self.ymin, ds: zero(), dt: one() },
            SliceForm { constant: self.ymax.clone(), ds: zero(), dt: -one() },
        ]
    }

    fn corners(&self) -> Vec<Point2> {
        vec![
            [self.xmin.clone(), self.ymin.clone()],
            [self.xmax.clone(), self.ymin.clone()],
            [self.xmax.clone(), self.ymax.clone()],
            [self.xmin.clone(), self.ymax.clone()],
        ]
    }
}

/// Segment of the line `a + τ·b` inside the viewport (Liang–Barsky).
pub fn clip_line(a: &Point2, b: &Point2, viewport: &Viewport) -> Option<(Point2, Point2)> {
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for h in viewport.half_planes() {
        // h(a + τb) = h(a) + τ·(h.ds·b0 + h.dt·b1) ≥ 0
        let base = h.eval(a);
        let rate = &h.ds * &b[0] + &h.dt * &b[1];
        if rate.is_zero() {
            if base.is_negative() {
                return None;
            }
            continue;
        }
        let tau = -&base / &rate;
        if rate.is_positive() {
            if lo.as_ref().map_or(true, |l| tau > *l) {
                lo = Some(tau);
            }
        } else if hi.as_ref().map_or(true, |h| tau < *h) {
            hi = Some(tau);
        }
    }
    let (lo, hi) = (lo?, hi?);
    if lo > hi {
        return None;
    }
    let at = |tau: &Rational| [&a[0] + tau * &b[0], &a[1] + tau * &b[1]];
    Some((at(&lo), at(&hi)))
}

/// Convex polygon `{pt ∈ viewport : f(pt) ≥ 0 for all f}` (Sutherland–Hodgman).
pub fn clip_polygon(half_planes: &[SliceForm], viewport: &Viewport) -> Vec<Point2> {
    let mut poly = viewport.corners();
    for f in half_planes {
        if poly.is_empty() {
            break;
        }
        let mut out = Vec::new();
        for i in 0..poly.len() {
            let cur = &poly[i];
            let nxt = &poly[(i + 1) % poly.len()];
            let vc = f.eval(cur);
            let vn = f.eval(nxt);
            if !vc.is_negative() {
                out.push(cur.clone());
            }
            if (vc.is_negative() && vn.is_positive()) || (vc.is_positive() && vn.is_negative()) {
                let lambda = &vc / (&vc - &vn);
                out.push([
                    &cur[0] + &lambda * (&nxt[0] - &cur[0]),
                    &cur[1] + &lambda * (&nxt[1] - &cur[1]),
                ]);
            }
        }
        out.dedup();
        while out.len() > 1 && out.first() == out.last() {
            out.pop();
        }
        poly = out;
    }
    poly
}

/// Average of the vertices, a point inside a nondegenerate convex polygon.
pub fn vertex_average(poly: &[Point2]) -> Option<Point2> {
    if poly.is_empty() {
        return None;
    }
    let n = Rational::from_integer((poly.len() as i64).into());
    let sx = poly.iter().fold(Rational::zero(), |a, p| a + &p[0]);
    let sy = poly.iter().fold(Rational::zero(), |a, p| a + &p[1]);
    Some([sx / &n, sy / n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn diamond_slice() -> SliceSpec {
        SliceSpec::affine(ints(&[1, 1, 0]), ints(&[1, -1, 0]), ints(&[0, 0, 1])).unwrap()
    }

    #[test]
    fn degenerate_slices_rejected() {
        assert!(SliceSpec::affine(ints(&[1, -1, 0]), ints(&[1, -1, 0]), ints(&[0, 0, 1])).is_err());
        assert!(SliceSpec::affine(ints(&[1, 1, 0]), ints(&[1, -1, 0]), ints(&[2, -2, 0])).is_err());
        assert!(SliceSpec::linear(ints(&[1, 2]), ints(&[2, 4])).is_err());
    }

    #[test]
    fn parallel_hyperplane_is_absent() {
        // x1 + x2 = 0 is parallel to the slice x1 + x2 = 2.
        assert_eq!(restrict_to_slice(&ints(&[1, 1, 0]), &diamond_slice()), SliceObject::Absent);
        let lin = SliceSpec::linear(ints(&[1, 0, 0]), ints(&[0, 1, 0])).unwrap();
        assert_eq!(restrict_to_slice(&ints(&[0, 0, 1]), &lin), SliceObject::Everywhere);
    }

    #[test]
    fn line_residual_is_zero() {
        let s = diamond_slice();
        let form = ints(&[3, -1, 2]);
        let SliceObject::Line { a, b } = restrict_to_slice(&form, &s) else { panic!() };
        for tau in [int(-3), int(0), frac(7, 5)] {
            let x = s.point(&(&a[0] + &tau * &b[0]), &(&a[1] + &tau * &b[1]));
            assert_eq!(dot(&form, &x), int(0));
        }
    }

    #[test]
    fn direction_cases() {
        let s = diamond_slice();
        // χ_a in the basis b1,b2,b3 is (0, 1/2, 1/2).
        assert_eq!(
            direction_on_slice(&[int(0), frac(1, 2), frac(1, 2)], &s).unwrap(),
            SliceObject::Point([int(-1), int(2)])
        );
        assert_eq!(
            direction_on_slice(&[frac(1, 2), frac(-1, 2), int(0)], &s).unwrap(),
            SliceObject::Direction([int(1), int(0)])
        );
        assert!(matches!(
            direction_on_slice(&ints(&[-1, -1, 0]), &s).unwrap(),
            SliceObject::ExitsSlice { .. }
        ));
    }

    #[test]
    fn clipping() {
        let vp = Viewport::new(int(-1), int(3), int(-2), int(2));
        let (p, q) = clip_line(&[int(0), int(0)], &[int(1), int(2)], &vp).unwrap();
        assert_eq!(p, [int(-1), int(-2)]);
        assert_eq!(q, [int(1), int(2)]);
        assert!(clip_line(&[int(0), int(5)], &[int(1), int(0)], &vp).is_none());
        let tri = clip_polygon(
            &[
                SliceForm { constant: int(0), ds: int(1), dt: int(0) },
                SliceForm { constant: int(0), ds: int(0), dt: int(1) },
                SliceForm { constant: int(1), ds: int(-1), dt: int(-1) },
            ],
            &vp,
        );
        assert_eq!(tri.len(), 3);
        assert_eq!(vertex_average(&tri).unwrap(), [frac(1, 3), frac(1, 3)]);
    }
}
