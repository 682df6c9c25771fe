//! Positive CNFs over arrow variables describing semistable loci.

use crate::quiver::{Quiver, ThinRepPattern};

/// Conjunction of clauses, each clause read as "some arrow in it is nonzero".
///
/// Clauses hold sorted arrow indices, are subsumption-free and sorted by size
/// and then lexicographically. A CNF containing the empty clause is exactly
/// `[[]]` and describes the empty locus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemistableCnf {
    clauses: Vec<Vec<usize>>,
}

impl SemistableCnf {
    pub fn from_clauses<I>(clauses: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut all: Vec<Vec<usize>> = clauses
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for c in all {
            // Shorter clauses come first, so only they can subsume `c`.
            if !kept.iter().any(|k| is_subset(k, &c)) {
                kept.push(c);
            }
        }
        SemistableCnf { clauses: kept }
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }

    pub fn is_satisfiable(&self) -> bool {
        !self.clauses.iter().any(Vec::is_empty)
    }

    /// Arrows forced nonzero: the singleton clauses.
    pub fn singletons(&self) -> Vec<usize> {
        self.clauses
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }

    pub fn evaluate(&self, pattern: &ThinRepPattern) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&a| pattern.nonzero[a]))
    }

    pub fn clause_names(&self, quiver: &Quiver) -> Vec<Vec<String>> {
        self.clauses
            .iter()
            .map(|c| c.iter().map(|&a| quiver.arrows()[a].name.clone()).collect())
            .collect()
    }

    /// Renders as `a≠0 ∧ (b≠0 ∨ c≠0)`; `true` for no clauses and `false`
    /// for the empty clause.
    pub fn render(&self, quiver: &Quiver) -> String {
        if self.clauses.is_empty() {
            return "true".into();
        }
        if !self.is_satisfiable() {
            return "false".into();
        }
        self.clause_names(quiver)
            .iter()
            .map(|names| {
                let lits: Vec<String> = names.iter().map(|n| format!("{n}≠0")).collect();
                if lits.len() == 1 {
                    lits[0].clone()
                } else {
                    format!("({})", lits.join(" ∨ "))
                }
            })
            .collect::<Vec<_>>()
            .join(" ∧ ")
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsumption_and_order() {
        let cnf = SemistableCnf::from_clauses(vec![vec![3, 1, 2], vec![4], vec![1, 2], vec![0], vec![4, 0], vec![1, 2]]);
        assert_eq!(cnf.clauses(), &[vec![0], vec![4], vec![1, 2]]);
        assert_eq!(cnf.singletons(), vec![0, 4]);
    }

    #[test]
    fn empty_clause_absorbs_everything() {
        let cnf = SemistableCnf::from_clauses(vec![vec![0, 1], vec![], vec![2]]);
        assert_eq!(cnf.clauses(), &[Vec::<usize>::new()]);
        assert!(!cnf.is_satisfiable());
        assert!(!cnf.evaluate(&ThinRepPattern::all_nonzero(3)));
        let top = SemistableCnf::from_clauses(Vec::<Vec<usize>>::new());
        assert!(top.is_satisfiable());
        assert!(top.evaluate(&ThinRepPattern::from_mask(3, 0)));
    }

    #[test]
    fn rendering() {
        let q = Quiver::from_names(&["0", "1", "2"], &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")]).unwrap();
        let cnf = SemistableCnf::from_clauses(vec![vec![1, 2], vec![0]]);
        assert_eq!(cnf.render(&q), "a≠0 ∧ (b≠0 ∨ c≠0)");
        assert!(cnf.evaluate(&ThinRepPattern::with_zero(3, 1)));
        assert!(!cnf.evaluate(&ThinRepPattern::with_zero(3, 0)));
    }
}
