//! The analysis document: everything the text, JSON and SVG emitters show.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::analysis::chambers::QuiverAnalysis;
use crate::analysis::stable::{locate_chamber, pseudoeffective_cone, stable_matrix, Location};
use crate::analysis::walls::slice_walls;
use crate::error::Result;
use crate::geometry::slice::{direction_on_slice, SliceForm, SliceObject, SliceSpec};
use crate::quiver::Character;
use crate::rational::Rational;
use crate::report::request::{scope_name, AnalysisRequest};

/// An exact rational serialized as `{"num": …, "den": …}`. Integers that do
/// not fit 64 bits are emitted as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

fn big_json<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

struct Big<'a>(&'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        big_json(self.0, s)
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &Big(self.0.numer()))?;
        st.serialize_field("den", &Big(self.0.denom()))?;
        st.end()
    }
}

fn qs(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub d: Vec<u64>,
    /// Vertices kept after restricting to the support of `d`.
    pub support: Vec<String>,
    pub thin: bool,
    pub sincere: bool,
    pub coprime: bool,
    pub acyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceDoc {
    pub p: Option<Vec<Q>>,
    pub u1: Vec<Q>,
    pub u2: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SliceObjectDoc {
    Line { a: [Q; 2], b: [Q; 2] },
    Point { x: Q, y: Q },
    Direction { x: Q, y: Q },
    Absent,
    Everywhere,
    ExitsSlice { c_p: Q, c1: Q, c2: Q },
}

impl From<&SliceObject> for SliceObjectDoc {
    fn from(o: &SliceObject) -> Self {
        let q = |r: &Rational| Q(r.clone());
        match o {
            SliceObject::Line { a, b } => SliceObjectDoc::Line { a: [q(&a[0]), q(&a[1])], b: [q(&b[0]), q(&b[1])] },
            SliceObject::Point(p) => SliceObjectDoc::Point { x: q(&p[0]), y: q(&p[1]) },
            SliceObject::Direction(p) => SliceObjectDoc::Direction { x: q(&p[0]), y: q(&p[1]) },
            SliceObject::Absent => SliceObjectDoc::Absent,
            SliceObject::Everywhere => SliceObjectDoc::Everywhere,
            SliceObject::ExitsSlice { c_p, c1, c2 } => SliceObjectDoc::ExitsSlice { c_p: q(c_p), c1: q(c1), c2: q(c2) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallSliceDoc {
    #[serde(flatten)]
    pub object: SliceObjectDoc,
    pub extends_to: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallRow {
    /// 1-based class number.
    pub id: usize,
    pub e: Vec<u64>,
    /// Arrows that must all vanish for `e` to be a subrepresentation;
    /// `None` when it always is one.
    pub occurs_iff_zero: Option<Vec<String>>,
    pub normal: Vec<i64>,
    /// 1-based hyperplane number, `None` if the normal vanishes on `d^⊥`.
    pub hyperplane: Option<usize>,
    pub slice: Option<WallSliceDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorDoc {
    pub arrow: String,
    pub character: Vec<i64>,
    pub coordinates: Vec<Q>,
    pub slice: Option<SliceObjectDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberRow {
    pub label: String,
    pub cells: usize,
    /// Interior point in working coordinates.
    pub witness: Vec<Q>,
    /// The same point as a character on the input vertices.
    pub character: Vec<Q>,
    pub forbidden: Vec<usize>,
    pub semistable_locus: String,
    pub clauses: Vec<Vec<String>>,
    pub g_ample: bool,
    pub unstable_divisors: Vec<String>,
    pub divisor_characters: Vec<DivisorDoc>,
    pub picard_number: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableMatrixDoc {
    /// Row and column labels; row = base, column = candidate.
    pub chambers: Vec<String>,
    pub rows: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocationDoc {
    Chamber { label: String },
    OnWall { hyperplanes: Vec<usize> },
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseDoc {
    pub character: Vec<i64>,
    pub location: LocationDoc,
    /// G-ample chambers stable with respect to the base chamber.
    pub pseudoeffective: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormDoc {
    pub constant: Q,
    pub ds: Q,
    pub dt: Q,
}

impl From<&SliceForm> for FormDoc {
    fn from(f: &SliceForm) -> Self {
        FormDoc { constant: Q(f.constant.clone()), ds: Q(f.ds.clone()), dt: Q(f.dt.clone()) }
    }
}

impl FormDoc {
    pub fn form(&self) -> SliceForm {
        SliceForm { constant: self.constant.0.clone(), ds: self.ds.0.clone(), dt: self.dt.0.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureLine {
    pub hyperplane: usize,
    pub walls: Vec<usize>,
    pub a: [Q; 2],
    pub b: [Q; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureRegion {
    pub label: String,
    /// The closed chamber on the slice is where all forms are ≥ 0.
    pub half_planes: Vec<FormDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureMark {
    pub arrow: String,
    pub x: Q,
    pub y: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceFigure {
    pub lines: Vec<FigureLine>,
    pub regions: Vec<FigureRegion>,
    pub markers: Vec<FigureMark>,
    pub directions: Vec<FigureMark>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisDocument {
    pub quiver: QuiverDoc,
    pub basis: Vec<Vec<i64>>,
    pub scope: String,
    pub hyperplanes: usize,
    pub cells: usize,
    pub slice: Option<SliceDoc>,
    pub walls: Vec<WallRow>,
    pub chambers: Vec<ChamberRow>,
    pub stable_matrix: StableMatrixDoc,
    pub base: Option<BaseDoc>,
    pub figure: Option<SliceFigure>,
    pub warnings: Vec<String>,
}

pub fn build_document(request: &AnalysisRequest, analysis: &QuiverAnalysis) -> Result<AnalysisDocument> {
    let q = &analysis.quiver;
    let arrow_name = |i: usize| q.arrows()[i].name.clone();
    let mut warnings = analysis.warnings.clone();
    let iq = &analysis.input_quiver;

    let quiver = QuiverDoc {
        vertices: iq.vertices().to_vec(),
        arrows: iq
            .arrows()
            .iter()
            .map(|a| ArrowDoc {
                name: a.name.clone(),
                source: iq.vertices()[a.source].clone(),
                target: iq.vertices()[a.target].clone(),
            })
            .collect(),
        d: analysis.input_d.entries().to_vec(),
        support: q.vertices().to_vec(),
        thin: analysis.validation.thin,
        sincere: analysis.validation.sincere,
        coprime: analysis.validation.coprime,
        acyclic: analysis.validation.acyclic,
    };

    let walls_on_slice = match &request.slice {
        Some(s) => Some(slice_walls(analysis, s)?),
        None => None,
    };
    let walls = analysis
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| WallRow {
            id: i + 1,
            e: c.e.entries().to_vec(),
            occurs_iff_zero: (!c.always_occurs()).then(|| c.boundary_clause.iter().map(|&a| arrow_name(a)).collect()),
            normal: c.slope_normal.clone(),
            hyperplane: analysis.arrangement.index_map[i].map(|(h, _)| h + 1),
            slice: walls_on_slice.as_ref().map(|w| WallSliceDoc {
                object: (&w[i].object).into(),
                extends_to: w[i].extends_to.map(|s| s.to_string()),
            }),
        })
        .collect();

    let to_input = |restricted: &[Rational]| -> Vec<Q> {
        let mut out = vec![Q(Rational::from_integer(0.into())); iq.vertex_count()];
        for (k, &i) in analysis.support.iter().enumerate() {
            out[i] = Q(restricted[k].clone());
        }
        out
    };
    let mut chambers = Vec::new();
    for c in &analysis.chambers {
        let divisor_characters = c
            .divisor_characters
            .iter()
            .map(|dc| {
                let slice = match &request.slice {
                    Some(s) => Some(SliceObjectDoc::from(&direction_on_slice(&dc.coordinates, s)?)),
                    None => None,
                };
                Ok(DivisorDoc {
                    arrow: arrow_name(dc.arrow),
                    character: dc.character.0.clone(),
                    coordinates: qs(&dc.coordinates),
                    slice,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        chambers.push(ChamberRow {
            label: c.label.clone(),
            cells: c.cells.len(),
            witness: qs(&c.chamber.witness),
            character: to_input(&analysis.to_ambient(&c.chamber.witness)),
            forbidden: c.forbidden.iter().map(|i| i + 1).collect(),
            semistable_locus: c.cnf.render(q),
            clauses: c.cnf.clause_names(q),
            g_ample: c.g_ample,
            unstable_divisors: c.unstable_divisors.iter().map(|&a| arrow_name(a)).collect(),
            divisor_characters,
            picard_number: c.picard_number,
        });
    }

    let matrix = stable_matrix(analysis);
    warnings.extend(matrix.warnings.iter().cloned());
    let stable_matrix_doc = StableMatrixDoc {
        chambers: matrix.chambers.iter().map(|&c| analysis.chambers[c].label.clone()).collect(),
        rows: matrix.entries.clone(),
    };

    let base = match &request.base {
        None => None,
        Some(theta) => Some(base_doc(theta, analysis, &matrix, &mut warnings)?),
    };

    let figure = match &request.slice {
        None => None,
        Some(s) => Some(figure(analysis, s, walls_on_slice.as_deref().unwrap_or(&[]), &mut warnings)?),
    };

    Ok(AnalysisDocument {
        quiver,
        basis: analysis.basis.clone(),
        scope: scope_name(analysis.scope).to_string(),
        hyperplanes: analysis.arrangement.len(),
        cells: analysis.cell_count,
        slice: request.slice.as_ref().map(|s| SliceDoc {
            p: match s {
                SliceSpec::Affine { p, .. } => Some(qs(p)),
                SliceSpec::Linear { .. } => None,
            },
            u1: qs(s.u1()),
            u2: qs(s.u2()),
        }),
        walls,
        chambers,
        stable_matrix: stable_matrix_doc,
        base,
        figure,
        warnings,
    })
}

fn base_doc(
    theta: &Character,
    analysis: &QuiverAnalysis,
    matrix: &crate::analysis::StableChamberMatrix,
    warnings: &mut Vec<String>,
) -> Result<BaseDoc> {
    let location = locate_chamber(theta, analysis)?;
    let mut pseudoeffective = Vec::new();
    let location = match location {
        Location::Chamber(i) => {
            let c = &analysis.chambers[i];
            if c.g_ample {
                pseudoeffective = pseudoeffective_cone(i, matrix)?
                    .into_iter()
                    .map(|j| analysis.chambers[j].label.clone())
                    .collect();
            } else {
                warnings.push(format!("base character lies in {}, which is not G-ample", c.label));
            }
            LocationDoc::Chamber { label: c.label.clone() }
        }
        Location::OnWall(hs) => {
            warnings.push("base character lies on a wall; no base chamber".into());
            LocationDoc::OnWall { hyperplanes: hs.iter().map(|h| h + 1).collect() }
        }
        Location::Outside => {
            warnings.push("base character lies outside the analyzed chambers".into());
            LocationDoc::Outside
        }
    };
    Ok(BaseDoc { character: theta.0.clone(), location, pseudoeffective })
}

fn figure(
    analysis: &QuiverAnalysis,
    slice: &SliceSpec,
    walls: &[crate::analysis::walls::SliceWall],
    warnings: &mut Vec<String>,
) -> Result<SliceFigure> {
    let mut lines = Vec::new();
    for (h, hp) in analysis.arrangement.hyperplanes.iter().enumerate() {
        if let SliceObject::Line { a, b } = &walls[hp.sources[0]].object {
            lines.push(FigureLine {
                hyperplane: h + 1,
                walls: hp.sources.iter().map(|i| i + 1).collect(),
                a: [Q(a[0].clone()), Q(a[1].clone())],
                b: [Q(b[0].clone()), Q(b[1].clone())],
            });
        }
    }
    let regions = analysis
        .g_ample_chambers()
        .map(|(_, c)| FigureRegion {
            label: c.label.clone(),
            half_planes: c
                .chamber
                .closure_inequalities(&analysis.arrangement)
                .iter()
                .map(|f| FormDoc::from(&slice.restrict_form(f)))
                .collect(),
        })
        .collect();
    let mut markers = Vec::new();
    let mut directions = Vec::new();
    let mut seen = Vec::new();
    for (_, c) in analysis.g_ample_chambers() {
        for dc in &c.divisor_characters {
            if seen.contains(&dc.arrow) {
                continue;
            }
            seen.push(dc.arrow);
            let arrow = analysis.quiver.arrows()[dc.arrow].name.clone();
            match direction_on_slice(&dc.coordinates, slice)? {
                SliceObject::Point(p) => markers.push(FigureMark { arrow, x: Q(p[0].clone()), y: Q(p[1].clone()) }),
                SliceObject::Direction(p) => {
                    directions.push(FigureMark { arrow, x: Q(p[0].clone()), y: Q(p[1].clone()) })
                }
                _ => warnings.push(format!("divisor character of `{arrow}` points away from the slice")),
            }
        }
    }
    Ok(SliceFigure { lines, regions, markers, directions })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serializes");
    s.push('\n');
    s
}
