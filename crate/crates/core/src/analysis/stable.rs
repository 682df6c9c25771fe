//! Stable chambers, pseudoeffective cones and base-chamber lookup.
//!
//! A chamber `C'` is stable with respect to `C` when translating any
//! character of `C'` by nonnegative combinations of the divisor characters
//! of `C` stays in `C'`. Since `C'` is an open convex cone, that holds
//! exactly when every divisor character lies in the closure of `C'`.

use crate::analysis::chambers::{GitChamberReport, QuiverAnalysis};
use crate::error::{AnalysisError, Result};
use crate::geometry::arrangement::{closure_contains, Arrangement, ChamberCone};
use crate::quiver::Character;

pub fn stable_wrt(base: &GitChamberReport, candidate: &ChamberCone, arrangement: &Arrangement) -> Result<bool> {
    if !base.g_ample {
        return Err(AnalysisError::NotGAmple(base.label.clone()));
    }
    Ok(base
        .divisor_characters
        .iter()
        .all(|dc| closure_contains(candidate, arrangement, &dc.coordinates)))
}

/// Rows are bases, columns candidates; both run over the G-ample chambers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableChamberMatrix {
    /// Indices into [`QuiverAnalysis::chambers`].
    pub chambers: Vec<usize>,
    pub entries: Vec<Vec<bool>>,
    pub warnings: Vec<String>,
}

impl StableChamberMatrix {
    pub fn row_of(&self, chamber: usize) -> Option<&[bool]> {
        let i = self.chambers.iter().position(|&c| c == chamber)?;
        Some(&self.entries[i])
    }
}

pub fn stable_matrix(analysis: &QuiverAnalysis) -> StableChamberMatrix {
    let chambers: Vec<usize> = analysis.g_ample_chambers().map(|(i, _)| i).collect();
    let entries: Vec<Vec<bool>> = chambers
        .iter()
        .map(|&b| {
            chambers
                .iter()
                .map(|&c| {
                    stable_wrt(&analysis.chambers[b], &analysis.chambers[c].chamber, &analysis.arrangement)
                        .expect("rows are G-ample")
                })
                .collect()
        })
        .collect();
    let warnings = chambers
        .iter()
        .enumerate()
        .filter(|(i, _)| !entries[*i][*i])
        .map(|(_, &c)| format!("chamber {} is not stable with respect to itself", analysis.chambers[c].label))
        .collect();
    StableChamberMatrix { chambers, entries, warnings }
}

/// The G-ample chambers stable with respect to `base`: the chamber
/// decomposition of the pseudoeffective cone of its quotient.
pub fn pseudoeffective_cone(base: usize, matrix: &StableChamberMatrix) -> Result<Vec<usize>> {
    let row = matrix.row_of(base).ok_or_else(|| AnalysisError::NotGAmple(format!("#{base}")))?;
    Ok(matrix
        .chambers
        .iter()
        .zip(row)
        .filter(|(_, &s)| s)
        .map(|(&c, _)| c)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Chamber(usize),
    /// Hyperplanes through the character.
    OnWall(Vec<usize>),
    /// Off every hyperplane but in no analyzed chamber (outside the scope).
    Outside,
}

pub fn locate_chamber(theta: &Character, analysis: &QuiverAnalysis) -> Result<Location> {
    let x = analysis.coordinates_of(theta)?;
    if let Some(i) = analysis
        .chambers
        .iter()
        .position(|c| c.chamber.contains(&analysis.arrangement, &x))
    {
        return Ok(Location::Chamber(i));
    }
    let on: Vec<usize> = analysis
        .arrangement
        .sign_vector(&x)
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_none())
        .map(|(i, _)| i)
        .collect();
    Ok(if on.is_empty() { Location::Outside } else { Location::OnWall(on) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::chambers::{analyze, AnalysisOptions};
    use crate::quiver::fixtures::diamond_quiver;
    use crate::quiver::DimensionVector;

    #[test]
    fn diagonal_and_vacuous_rows() {
        let a = analyze(&diamond_quiver(), &DimensionVector::thin(4), &AnalysisOptions::default()).unwrap();
        let m = stable_matrix(&a);
        assert!(m.warnings.is_empty());
        for (i, &c) in m.chambers.iter().enumerate() {
            assert!(m.entries[i][i]);
            if a.chambers[c].unstable_divisors.is_empty() {
                assert!(m.entries[i].iter().all(|&x| x));
            }
        }
    }

    #[test]
    fn locate_roundtrip_and_origin() {
        let a = analyze(&diamond_quiver(), &DimensionVector::thin(4), &AnalysisOptions::default()).unwrap();
        for (i, c) in a.chambers.iter().enumerate() {
            let theta = a.to_ambient(&c.chamber.witness);
            let ints: Vec<i64> = theta.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
            assert_eq!(locate_chamber(&Character(ints), &a).unwrap(), Location::Chamber(i));
        }
        assert_eq!(
            locate_chamber(&Character(vec![0; 4]), &a).unwrap(),
            Location::OnWall((0..7).collect())
        );
        assert!(locate_chamber(&Character(vec![1, 0, 0, 0]), &a).is_err());
    }
}
