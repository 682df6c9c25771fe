//! GIT chambers of a thin quiver setting and their semistable loci.
//!
//! Working coordinates are coefficients over a basis of `d^⊥`: the vector
//! `x` stands for the character `θ = Σ x_j·basis_j`. Arrangement cells
//! whose semistable loci agree are merged into one chamber, since a wall
//! only separates chambers where the locus changes.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};

use crate::analysis::cnf::SemistableCnf;
use crate::error::{AnalysisError, QuiverError, Result};
use crate::geometry::arrangement::{
    dedup_hyperplanes, enumerate_cells, Arrangement, ChamberCone, Enumeration, Sign,
};
use crate::geometry::lattice::{check_perp_basis, kernel_basis};
use crate::geometry::linalg::solve_in_span;
use crate::quiver::{
    enumerate_subdimensions, restrict_to_support, validate, Character, DimensionVector, Quiver,
    SubdimensionClass, ValidationReport,
};
use crate::rational::{combine, ints, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scope {
    /// Every cell of the arrangement in `d^⊥`.
    #[default]
    Full,
    /// Only cells inside the G-ample cone, cut out by the semistable sides
    /// of the classes that occur in every representation.
    GAmpleOnly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub scope: Scope,
    /// Basis of `d^⊥` in input vertex coordinates; defaults to
    /// [`kernel_basis`].
    pub basis: Option<Vec<Vec<i64>>>,
    pub enumeration: Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorCharacter {
    pub arrow: usize,
    /// `ε_source − ε_target`.
    pub character: Character,
    /// The character in working coordinates.
    pub coordinates: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GitChamberReport {
    pub label: String,
    pub chamber: ChamberCone,
    /// Sign vectors of the arrangement cells making up the chamber.
    pub cells: Vec<Vec<Sign>>,
    pub forbidden: Vec<usize>,
    pub cnf: SemistableCnf,
    pub g_ample: bool,
    pub unstable_divisors: Vec<usize>,
    pub divisor_characters: Vec<DivisorCharacter>,
    /// `|Q_0| − (r + 1)`; `None` when the chamber is not G-ample or the
    /// quiver has an oriented cycle.
    pub picard_number: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverAnalysis {
    pub input_quiver: Quiver,
    pub input_d: DimensionVector,
    /// Input vertices kept by the restriction to the support.
    pub support: Vec<usize>,
    pub quiver: Quiver,
    pub d: DimensionVector,
    pub validation: ValidationReport,
    /// Working basis of `d^⊥` in restricted vertex coordinates.
    pub basis: Vec<Vec<i64>>,
    /// Integral basis of the character lattice `d^⊥ ∩ Z^{Q_0}`.
    pub lattice_basis: Vec<Vec<i64>>,
    pub classes: Vec<SubdimensionClass>,
    pub arrangement: Arrangement,
    pub scope: Scope,
    pub cell_count: usize,
    pub chambers: Vec<GitChamberReport>,
    pub warnings: Vec<String>,
}

impl QuiverAnalysis {
    /// The character `Σ x_j·basis_j` in restricted vertex coordinates.
    pub fn to_ambient(&self, coords: &[Rational]) -> Vec<Rational> {
        let rows: Vec<Vec<Rational>> = self.basis.iter().map(|v| ints(v)).collect();
        combine(coords, &rows, self.quiver.vertex_count())
    }

    /// Working coordinates of a character given on the input vertices (or
    /// already restricted to the support).
    pub fn coordinates_of(&self, theta: &Character) -> Result<Vec<Rational>> {
        let restricted: Vec<i64> = if theta.0.len() == self.input_quiver.vertex_count() {
            let pairing: i64 = theta.0.iter().zip(self.input_d.entries()).map(|(t, &d)| t * d as i64).sum();
            if pairing != 0 {
                return Err(AnalysisError::NotInPerp { pairing });
            }
            self.support.iter().map(|&i| theta.0[i]).collect()
        } else if theta.0.len() == self.quiver.vertex_count() {
            theta.0.clone()
        } else {
            return Err(QuiverError::CharacterLength {
                expected: self.input_quiver.vertex_count(),
                got: theta.0.len(),
            }
            .into());
        };
        let pairing: i64 = restricted.iter().zip(self.d.entries()).map(|(t, &d)| t * d as i64).sum();
        if pairing != 0 {
            return Err(AnalysisError::NotInPerp { pairing });
        }
        Ok(perp_coordinates(&self.basis, &restricted))
    }

    pub fn g_ample_chambers(&self) -> impl Iterator<Item = (usize, &GitChamberReport)> {
        self.chambers.iter().enumerate().filter(|(_, c)| c.g_ample)
    }

    pub fn chamber_by_label(&self, label: &str) -> Option<usize> {
        self.chambers.iter().position(|c| c.label == label)
    }
}

fn perp_coordinates(basis: &[Vec<i64>], v: &[i64]) -> Vec<Rational> {
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| ints(b)).collect();
    solve_in_span(&cols, &ints(v)).expect("vector in d^perp is in the span of its basis")
}

/// Classes with `θ·n_e > 0`, for `θ` in restricted vertex coordinates.
pub fn forbidden_subdims(theta: &[Rational], classes: &[SubdimensionClass], label: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let value = c
            .slope_normal
            .iter()
            .zip(theta)
            .fold(Rational::zero(), |acc, (n, t)| acc + t * Rational::from_integer((*n).into()));
        if value.is_zero() {
            return Err(AnalysisError::WitnessOnWall { chamber: label.to_string(), class: i });
        }
        if value.is_positive() {
            out.push(i);
        }
    }
    Ok(out)
}

/// One clause per forbidden class: some arrow leaving its support is nonzero.
pub fn build_cnf(classes: &[SubdimensionClass], forbidden: &[usize]) -> SemistableCnf {
    SemistableCnf::from_clauses(forbidden.iter().map(|&i| classes[i].boundary_clause.clone()))
}

pub fn divisor_characters(quiver: &Quiver, arrows: &[usize], basis: &[Vec<i64>]) -> Vec<DivisorCharacter> {
    arrows
        .iter()
        .map(|&arrow| {
            let character = Character::of_arrow(quiver, arrow);
            let coordinates = perp_coordinates(basis, &character.0);
            DivisorCharacter { arrow, character, coordinates }
        })
        .collect()
}

pub fn picard_number(quiver: &Quiver, cnf: &SemistableCnf, acyclic: bool) -> Option<i64> {
    if !acyclic || !cnf.is_satisfiable() {
        return None;
    }
    Some(quiver.vertex_count() as i64 - (cnf.singletons().len() as i64 + 1))
}

/// Assembles the report for one open chamber from its witness.
pub fn analyze_chamber(
    label: String,
    chamber: ChamberCone,
    cells: Vec<Vec<Sign>>,
    quiver: &Quiver,
    basis: &[Vec<i64>],
    classes: &[SubdimensionClass],
    acyclic: bool,
) -> Result<GitChamberReport> {
    let rows: Vec<Vec<Rational>> = basis.iter().map(|v| ints(v)).collect();
    let theta = combine(&chamber.witness, &rows, quiver.vertex_count());
    let forbidden = forbidden_subdims(&theta, classes, &label)?;
    let cnf = build_cnf(classes, &forbidden);
    let g_ample = cnf.is_satisfiable();
    let unstable_divisors = if g_ample { cnf.singletons() } else { Vec::new() };
    let divisor_characters = divisor_characters(quiver, &unstable_divisors, basis);
    let picard_number = picard_number(quiver, &cnf, acyclic);
    Ok(GitChamberReport {
        label,
        chamber,
        cells,
        forbidden,
        cnf,
        g_ample,
        unstable_divisors,
        divisor_characters,
        picard_number,
    })
}

/// Full pipeline: validation, restriction to the support, walls, cells,
/// merging and per-chamber reports.
pub fn analyze(quiver: &Quiver, d: &DimensionVector, options: &AnalysisOptions) -> Result<QuiverAnalysis> {
    let validation = validate(quiver, d)?;
    let (rq, rd) = restrict_to_support(quiver, d)?;
    let support: Vec<usize> = (0..d.len()).filter(|&i| d.entries()[i] > 0).collect();
    let mut warnings = validation.warnings.clone();
    if support.len() < d.len() {
        let dropped: Vec<&str> = (0..d.len())
            .filter(|i| !support.contains(i))
            .map(|i| quiver.vertices()[i].as_str())
            .collect();
        warnings.push(format!("restricted to the support of d; dropped vertices {}", dropped.join(", ")));
    }
    let dv = rd.as_i64();
    let lattice_basis = kernel_basis(&dv);
    let basis = match &options.basis {
        None => lattice_basis.clone(),
        Some(vectors) => {
            let restricted: Vec<Vec<i64>> = vectors
                .iter()
                .map(|v| {
                    if v.len() == quiver.vertex_count() {
                        support.iter().map(|&i| v[i]).collect()
                    } else {
                        v.clone()
                    }
                })
                .collect();
            check_perp_basis(&dv, &restricted)?;
            restricted
        }
    };
    let basis_q: Vec<Vec<Rational>> = basis.iter().map(|v| ints(v)).collect();
    let classes = enumerate_subdimensions(&rq, &rd)?;
    let normals: Vec<Vec<Rational>> = classes.iter().map(|c| ints(&c.slope_normal)).collect();
    let arrangement = dedup_hyperplanes(&normals, &basis_q);

    let mut fixed: BTreeMap<usize, Sign> = BTreeMap::new();
    let mut empty_scope = false;
    if options.scope == Scope::GAmpleOnly {
        for (i, c) in classes.iter().enumerate() {
            if !c.always_occurs() {
                continue;
            }
            let Some((h, rel)) = arrangement.index_map[i] else { continue };
            // θ·n_e < 0 on the open semistable side.
            let want = rel.flip();
            if *fixed.entry(h).or_insert(want) != want {
                empty_scope = true;
            }
        }
    }
    let fixed: Vec<(usize, Sign)> = fixed.into_iter().collect();
    let cells = if empty_scope {
        warnings.push("the G-ample cone has empty interior".into());
        Vec::new()
    } else {
        enumerate_cells(&arrangement, &fixed, options.enumeration)?
    };
    let cell_count = cells.len();

    // Group G-ample cells by semistable locus; cells arrive in sign order.
    let rows = basis_q.clone();
    let mut groups: Vec<(SemistableCnf, Vec<usize>)> = Vec::new();
    let mut by_cnf: HashMap<SemistableCnf, usize> = HashMap::new();
    for (k, cell) in cells.iter().enumerate() {
        let theta = combine(&cell.witness, &rows, rq.vertex_count());
        let forbidden = forbidden_subdims(&theta, &classes, &format!("cell {k}"))?;
        let cnf = build_cnf(&classes, &forbidden);
        if cnf.is_satisfiable() {
            if let Some(&g) = by_cnf.get(&cnf) {
                groups[g].1.push(k);
                continue;
            }
            by_cnf.insert(cnf.clone(), groups.len());
        }
        groups.push((cnf, vec![k]));
    }

    let mut merged: Vec<(ChamberCone, Vec<Vec<Sign>>)> = Vec::new();
    for (_, members) in groups {
        let signs: Vec<Option<Sign>> = (0..arrangement.len())
            .map(|j| {
                let s = cells[members[0]].signs[j];
                members.iter().all(|&m| cells[m].signs[j] == s).then_some(s).flatten()
            })
            .collect();
        let covered = cells
            .iter()
            .filter(|c| c.signs.iter().zip(&signs).all(|(a, b)| b.map_or(true, |b| *a == Some(b))))
            .count();
        let cell_signs = |m: usize| cells[m].signs.iter().map(|s| s.expect("cells fix every sign")).collect();
        if covered == members.len() {
            let witness = cells[members[0]].witness.clone();
            merged.push((ChamberCone { signs, witness }, members.iter().map(|&m| cell_signs(m)).collect()));
        } else {
            warnings.push(format!(
                "cells with identical semistable locus do not form a convex cone ({} cells, hull meets {covered}); kept separate",
                members.len()
            ));
            for m in members {
                merged.push((cells[m].clone(), vec![cell_signs(m)]));
            }
        }
    }
    merged.sort_by(|a, b| a.1[0].cmp(&b.1[0]));

    let chambers = merged
        .into_iter()
        .enumerate()
        .map(|(i, (cone, cell_signs))| {
            analyze_chamber(format!("C{}", i + 1), cone, cell_signs, &rq, &basis, &classes, validation.acyclic)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(QuiverAnalysis {
        input_quiver: quiver.clone(),
        input_d: d.clone(),
        support,
        quiver: rq,
        d: rd,
        validation,
        basis,
        lattice_basis,
        classes,
        arrangement,
        scope: options.scope,
        cell_count,
        chambers,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::fixtures::diamond_quiver;

    fn diamond() -> QuiverAnalysis {
        analyze(&diamond_quiver(), &DimensionVector::thin(4), &AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn diamond_has_five_g_ample_chambers() {
        let a = diamond();
        assert_eq!(a.arrangement.len(), 7);
        assert_eq!(a.cell_count, 32);
        assert_eq!(a.g_ample_chambers().count(), 5);
        let cells: usize = a.g_ample_chambers().map(|(_, c)| c.cells.len()).sum();
        assert_eq!(cells, 8);
        let scoped = analyze(
            &diamond_quiver(),
            &DimensionVector::thin(4),
            &AnalysisOptions { scope: Scope::GAmpleOnly, ..Default::default() },
        )
        .unwrap();
        assert_eq!(scoped.cell_count, 8);
        assert_eq!(scoped.chambers.len(), 5);
        let cnfs = |a: &QuiverAnalysis| {
            let mut v: Vec<_> = a.g_ample_chambers().map(|(_, c)| c.cnf.clone()).collect();
            v.sort_by_key(|c| c.clauses().to_vec());
            v
        };
        assert_eq!(cnfs(&a), cnfs(&scoped));
    }

    #[test]
    fn divisor_characters_lie_in_perp() {
        let a = diamond();
        for (_, c) in a.g_ample_chambers() {
            for dc in &c.divisor_characters {
                assert!(dc.character.in_perp(&a.d));
                assert_eq!(a.to_ambient(&dc.coordinates), ints(&dc.character.0));
            }
        }
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::from_names(&["v"], &[]).unwrap();
        let a = analyze(&q, &DimensionVector::thin(1), &AnalysisOptions::default()).unwrap();
        assert_eq!(a.chambers.len(), 1);
        assert_eq!(a.chambers[0].picard_number, Some(0));
        assert!(a.chambers[0].g_ample);
    }

    #[test]
    fn disconnected_quiver_has_no_g_ample_chamber() {
        let q = Quiver::from_names(&["0", "1"], &[]).unwrap();
        let a = analyze(&q, &DimensionVector::thin(2), &AnalysisOptions::default()).unwrap();
        assert_eq!(a.chambers.len(), 2);
        assert_eq!(a.g_ample_chambers().count(), 0);
        let scoped = analyze(
            &q,
            &DimensionVector::thin(2),
            &AnalysisOptions { scope: Scope::GAmpleOnly, ..Default::default() },
        )
        .unwrap();
        assert!(scoped.chambers.is_empty());
    }

    #[test]
    fn non_sincere_input_is_restricted() {
        let q = Quiver::from_names(&["0", "1", "2"], &[("x", "0", "1"), ("y", "1", "2"), ("z", "0", "2")]).unwrap();
        let a = analyze(&q, &DimensionVector(vec![1, 0, 1]), &AnalysisOptions::default()).unwrap();
        assert_eq!(a.quiver.vertex_count(), 2);
        assert_eq!(a.quiver.arrows().len(), 1);
        assert_eq!(a.coordinates_of(&Character(vec![1, 7, -1])).unwrap().len(), 1);
        assert!(matches!(
            a.coordinates_of(&Character(vec![1, 0, 0])),
            Err(AnalysisError::NotInPerp { pairing: 1 })
        ));
    }

    #[test]
    fn custom_basis_checked() {
        let opts = AnalysisOptions {
            basis: Some(vec![vec![1, 1, -1, -1], vec![1, -1, 1, -1], vec![2, 2, -2, -2]]),
            ..Default::default()
        };
        assert!(analyze(&diamond_quiver(), &DimensionVector::thin(4), &opts).is_err());
    }
}
