//! Quivers, thin dimension vectors, subdimension classes and the King
//! (slope) semistability predicate.
//!
//! Vertices and arrows are addressed by index internally; names are kept for
//! reporting. Vertex subsets are bitmasks, so subset enumeration is limited to
//! [`MAX_VERTICES`] vertices.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::QuiverError;

pub const MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` arrows.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (name, src, tgt) in arrows {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let lookup = |v: &String| {
                index.get(v).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: name.clone(),
                    vertex: v.clone(),
                })
            };
            let source = lookup(&src)?;
            let target = lookup(&tgt)?;
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    /// Convenience constructor from string slices.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, QuiverError> {
        Quiver::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Depth-first search for an oriented cycle (loops count).
    pub fn has_oriented_cycle(&self) -> bool {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.vertices.len();
        let mut succ = vec![Vec::new(); n];
        for a in &self.arrows {
            succ[a.source].push(a.target);
        }
        let mut mark = vec![Mark::New; n];
        for start in 0..n {
            if mark[start] != Mark::New {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            mark[start] = Mark::Active;
            while let Some((v, next)) = stack.pop() {
                if next < succ[v].len() {
                    stack.push((v, next + 1));
                    let w = succ[v][next];
                    match mark[w] {
                        Mark::Active => return true,
                        Mark::New => {
                            mark[w] = Mark::Active;
                            stack.push((w, 0));
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v] = Mark::Done;
                }
            }
        }
        false
    }
}

/// Dimension vector indexed by vertex position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionVector(pub Vec<u64>);

impl DimensionVector {
    pub fn thin(n: usize) -> Self {
        DimensionVector(vec![1; n])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_thin(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    pub fn is_coprime(&self) -> bool {
        self.0.iter().filter(|&&x| x > 0).fold(0u64, |g, &x| g.gcd(&x)) == 1
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }
}

/// Integer vector on the vertices, read as a character of `G_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(pub Vec<i64>);

impl Character {
    pub fn pairing(&self, d: &DimensionVector) -> i64 {
        self.0.iter().zip(&d.0).map(|(t, &x)| t * x as i64).sum()
    }

    pub fn in_perp(&self, d: &DimensionVector) -> bool {
        self.pairing(d) == 0
    }

    pub fn scaled(&self, k: i64) -> Character {
        Character(self.0.iter().map(|x| x * k).collect())
    }

    /// `ε_src − ε_tgt`, the character by which the coordinate of `arrow`
    /// transforms. Loops give the zero character.
    pub fn of_arrow(quiver: &Quiver, arrow: usize) -> Character {
        let a = &quiver.arrows[arrow];
        let mut v = vec![0; quiver.vertex_count()];
        v[a.source] += 1;
        v[a.target] -= 1;
        Character(v)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::rational::fmt_int_tuple(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub thin: bool,
    pub sincere: bool,
    pub coprime: bool,
    pub acyclic: bool,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn analyzable(&self) -> bool {
        self.thin
    }
}

pub fn validate(quiver: &Quiver, d: &DimensionVector) -> Result<ValidationReport, QuiverError> {
    if d.len() != quiver.vertex_count() {
        return Err(QuiverError::DimensionLength {
            expected: quiver.vertex_count(),
            got: d.len(),
        });
    }
    let acyclic = !quiver.has_oriented_cycle();
    let mut warnings = Vec::new();
    if !acyclic {
        warnings.push("oriented cycle: quotient not projective".to_string());
    }
    if !d.is_thin() {
        warnings.push("dimension vector is not thin; analysis unsupported".to_string());
    }
    Ok(ValidationReport {
        thin: d.is_thin(),
        sincere: d.is_sincere(),
        coprime: d.is_coprime(),
        acyclic,
        warnings,
    })
}

/// Deletes vertices with `d_i = 0` together with their incident arrows.
pub fn restrict_to_support(
    quiver: &Quiver,
    d: &DimensionVector,
) -> Result<(Quiver, DimensionVector), QuiverError> {
    if d.len() != quiver.vertex_count() {
        return Err(QuiverError::DimensionLength {
            expected: quiver.vertex_count(),
            got: d.len(),
        });
    }
    if let Some((i, &v)) = d.0.iter().enumerate().find(|(_, &v)| v > 1) {
        return Err(QuiverError::NotThin {
            vertex: quiver.vertices[i].clone(),
            value: v,
        });
    }
    let keep: Vec<usize> = (0..d.len()).filter(|&i| d.0[i] > 0).collect();
    if keep.is_empty() {
        return Err(QuiverError::EmptySupport);
    }
    let mut remap = vec![usize::MAX; d.len()];
    for (new, &old) in keep.iter().enumerate() {
        remap[old] = new;
    }
    let vertices = keep.iter().map(|&i| quiver.vertices[i].clone()).collect();
    let arrows = quiver
        .arrows
        .iter()
        .filter(|a| remap[a.source] != usize::MAX && remap[a.target] != usize::MAX)
        .map(|a| Arrow {
            name: a.name.clone(),
            source: remap[a.source],
            target: remap[a.target],
        })
        .collect();
    Ok((
        Quiver { vertices, arrows },
        DimensionVector(vec![1; keep.len()]),
    ))
}

/// A proper nonempty vertex subset of a thin sincere dimension vector,
/// read as the dimension vector of a potential subrepresentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdimensionClass {
    /// Bitmask of the support.
    pub support: u64,
    pub e: DimensionVector,
    /// Arrows leaving the support, sorted by arrow index. The subset is a
    /// subrepresentation support exactly when all of them vanish.
    pub boundary_clause: Vec<usize>,
    /// `(Σd)·e − (Σe)·d`; θ-semistability w.r.t. this class is `θ·n_e ≤ 0`.
    pub slope_normal: Vec<i64>,
}

impl SubdimensionClass {
    pub fn always_occurs(&self) -> bool {
        self.boundary_clause.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.support.count_ones()
    }

    /// Whether the support is a subrepresentation support of `pattern`.
    pub fn occurs_in(&self, pattern: &ThinRepPattern) -> bool {
        self.boundary_clause.iter().all(|&a| !pattern.nonzero[a])
    }
}

pub fn slope_normal(d: &[i64], e: &[i64]) -> Vec<i64> {
    let total_d: i64 = d.iter().sum();
    let total_e: i64 = e.iter().sum();
    d.iter().zip(e).map(|(&di, &ei)| total_d * ei - total_e * di).collect()
}

/// One class per proper nonempty vertex subset, ordered by subset size and
/// then lexicographically by the indicator vector read from vertex 0.
pub fn enumerate_subdimensions(
    quiver: &Quiver,
    d: &DimensionVector,
) -> Result<Vec<SubdimensionClass>, QuiverError> {
    if d.len() != quiver.vertex_count() {
        return Err(QuiverError::DimensionLength {
            expected: quiver.vertex_count(),
            got: d.len(),
        });
    }
    if let Some((i, &v)) = d.0.iter().enumerate().find(|(_, &v)| v > 1) {
        return Err(QuiverError::NotThin {
            vertex: quiver.vertices[i].clone(),
            value: v,
        });
    }
    if !d.is_sincere() {
        return Err(QuiverError::NotSincere);
    }
    let n = quiver.vertex_count();
    if n > MAX_VERTICES {
        return Err(QuiverError::TooManyVertices(n));
    }
    let full: u64 = (1u64 << n) - 1;
    let mut masks: Vec<u64> = (1..full).collect();
    // Indicator vectors (e_0, e_1, ...) in descending lexicographic order
    // within each size; vertex 0 is the most significant position.
    let key = |m: &u64| {
        let indicator: Vec<u8> = (0..n).map(|i| ((m >> i) & 1) as u8).collect();
        (m.count_ones(), std::cmp::Reverse(indicator))
    };
    masks.sort_by_key(key);
    let dv = d.as_i64();
    Ok(masks
        .into_iter()
        .map(|mask| {
            let e: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
            let boundary_clause = quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, a)| mask >> a.source & 1 == 1 && mask >> a.target & 1 == 0)
                .map(|(i, _)| i)
                .collect();
            SubdimensionClass {
                support: mask,
                slope_normal: slope_normal(&dv, &e),
                e: DimensionVector(e.iter().map(|&x| x as u64).collect()),
                boundary_clause,
            }
        })
        .collect())
}

/// Zero/nonzero pattern of a thin representation, one flag per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThinRepPattern {
    pub nonzero: Vec<bool>,
}

impl ThinRepPattern {
    pub fn all_nonzero(arrows: usize) -> Self {
        ThinRepPattern { nonzero: vec![true; arrows] }
    }

    /// Bit `i` of `mask` set means arrow `i` is nonzero.
    pub fn from_mask(arrows: usize, mask: u64) -> Self {
        ThinRepPattern {
            nonzero: (0..arrows).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn with_zero(arrows: usize, zero: usize) -> Self {
        let mut p = Self::all_nonzero(arrows);
        p.nonzero[zero] = false;
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semistability {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// King's criterion in slope form, by brute force over every vertex subset.
///
/// Works on a thin sincere `d`. A subset `S` supports a subrepresentation of
/// `pattern` iff no nonzero arrow leaves `S`; the representation is unstable
/// iff some proper such `S` has `θ·n_S > 0`.
pub fn king_semistability(
    quiver: &Quiver,
    pattern: &ThinRepPattern,
    theta: &Character,
) -> Semistability {
    let n = quiver.vertex_count();
    let full: u64 = (1u64 << n) - 1;
    let d = vec![1i64; n];
    let mut tie = false;
    for mask in 1..full {
        let closed = quiver
            .arrows
            .iter()
            .zip(&pattern.nonzero)
            .all(|(a, &nz)| !(nz && mask >> a.source & 1 == 1 && mask >> a.target & 1 == 0));
        if !closed {
            continue;
        }
        let e: Vec<i64> = (0..n).map(|i| (mask >> i & 1) as i64).collect();
        let value: i64 = slope_normal(&d, &e)
            .iter()
            .zip(&theta.0)
            .map(|(a, b)| a * b)
            .sum();
        if value > 0 {
            return Semistability::Unstable;
        }
        if value == 0 {
            tie = true;
        }
    }
    if tie {
        Semistability::StrictlySemistable
    } else {
        Semistability::Stable
    }
}
