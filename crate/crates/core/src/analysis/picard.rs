//! Picard-number calculators for quotients.

use crate::error::{AnalysisError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PicardFormulaInputs {
    /// Rank of the character group of G.
    pub rk_character_group: u64,
    /// Number of codimension-one components of the unstable locus.
    pub component_count: u64,
    /// Rank of the G-invariant units on X.
    pub rk_units_invariant: u64,
    /// Rank of the units on the quotient.
    pub rk_units_quotient: u64,
}

/// `rk χ(G) − (components + rk E(X)^G) + rk E(Y)`.
pub fn picard_general(inputs: &PicardFormulaInputs) -> Result<u64> {
    nonnegative(
        inputs.rk_character_group as i64 - (inputs.component_count as i64 + inputs.rk_units_invariant as i64)
            + inputs.rk_units_quotient as i64,
    )
}

/// Picard number of a good quotient of a Mori dream space `Y`:
/// `ρ(Y) + rk χ(G) − components`.
pub fn picard_mds_quotient(rho_y: u64, rk_character_group: u64, component_count: u64) -> Result<u64> {
    nonnegative(rho_y as i64 + rk_character_group as i64 - component_count as i64)
}

fn nonnegative(value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| AnalysisError::NegativePicard(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_formula() {
        let p = |rk, c, ui, uq| {
            picard_general(&PicardFormulaInputs {
                rk_character_group: rk,
                component_count: c,
                rk_units_invariant: ui,
                rk_units_quotient: uq,
            })
        };
        assert_eq!(p(3, 2, 0, 0), Ok(1));
        assert_eq!(p(2, 1, 0, 0), Ok(1));
        assert_eq!(p(0, 0, 0, 0), Ok(0));
        assert_eq!(p(1, 1, 1, 0), Err(AnalysisError::NegativePicard(-1)));
    }

    #[test]
    fn quotient_formula() {
        assert_eq!(picard_mds_quotient(6, 0, 1), Ok(5));
        assert_eq!(picard_mds_quotient(6, 0, 0), Ok(6));
        assert_eq!(picard_mds_quotient(0, 0, 0), Ok(0));
        assert!(picard_mds_quotient(0, 0, 2).is_err());
    }
}
