//! Fine coverings: multisets of same-sign k-modal paths whose i-th sections
//! partition the ground set for every section index i.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::geom::{GenericPointSet, Point};
use crate::path::{ModalPath, PathViolation, Sign};

/// First defect of a candidate covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    InvalidPath {
        path: usize,
        violation: PathViolation,
    },
    /// A ground point missing from the union of i-th sections.
    Missing { section: usize, point: Point },
    /// A point placed in the i-th section of two distinct paths.
    Duplicated { section: usize, point: Point },
    /// A section point that is not in the ground set at all.
    Foreign { section: usize, point: Point },
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::InvalidPath { path, violation } => {
                write!(f, "path {path} is not a valid modal path: {violation}")
            }
            CoverViolation::Missing { section, point } => {
                write!(f, "point {point} is missing from every section {section}")
            }
            CoverViolation::Duplicated { section, point } => {
                write!(f, "point {point} appears in section {section} of two paths")
            }
            CoverViolation::Foreign { section, point } => {
                write!(f, "section {section} contains {point}, which is outside the ground set")
            }
        }
    }
}

/// A fine covering of `ground` by paths of one sign.
#[derive(Debug, Clone)]
pub struct FineCovering {
    k: usize,
    sign: Sign,
    ground: GenericPointSet,
    paths: Vec<ModalPath>,
}

impl FineCovering {
    /// Wraps paths as a covering candidate. Requires every path to share the
    /// covering's k and sign; the partition property is left to [`check`].
    ///
    /// [`check`]: FineCovering::check
    pub fn new(
        k: usize,
        sign: Sign,
        ground: GenericPointSet,
        paths: Vec<ModalPath>,
    ) -> Result<Self, Error> {
        for (i, p) in paths.iter().enumerate() {
            if p.k() != k || p.sign() != sign {
                return Err(Error::InvalidArgument(format!(
                    "path {i} is a ({}{}) path, expected ({}{})",
                    p.sign(),
                    p.k(),
                    sign,
                    k
                )));
            }
        }
        Ok(FineCovering {
            k,
            sign,
            ground,
            paths,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn ground(&self) -> &GenericPointSet {
        &self.ground
    }

    pub fn paths(&self) -> &[ModalPath] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &ModalPath {
        &self.paths[i]
    }

    /// Size of the covering as a multiset.
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub(crate) fn paths_mut(&mut self) -> &mut Vec<ModalPath> {
        &mut self.paths
    }

    /// Verifies the fine-covering property, reporting the first violation:
    /// all paths valid, then every ground point covered in every section
    /// index, then no point covered twice in one section index.
    ///
    /// Coverage is checked before duplication across all sections, so a
    /// covering that both duplicates and misses reports the miss.
    pub fn check(&self) -> Result<(), CoverViolation> {
        for (i, p) in self.paths.iter().enumerate() {
            if let Err(violation) = p.validate() {
                return Err(CoverViolation::InvalidPath { path: i, violation });
            }
        }
        // counts[i]: ground index -> number of paths holding it in section i
        let mut counts: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); self.k + 1];
        for p in &self.paths {
            for (i, sec) in p.sections().iter().enumerate() {
                for point in sec {
                    match self.ground.index_of(point) {
                        Some(g) => *counts[i].entry(g).or_insert(0) += 1,
                        None => {
                            return Err(CoverViolation::Foreign {
                                section: i,
                                point: point.clone(),
                            })
                        }
                    }
                }
            }
        }
        for (i, per_section) in counts.iter().enumerate() {
            for g in 0..self.ground.len() {
                if !per_section.contains_key(&g) {
                    return Err(CoverViolation::Missing {
                        section: i,
                        point: self.ground.point(g).clone(),
                    });
                }
            }
        }
        for (i, per_section) in counts.iter().enumerate() {
            for (&g, &c) in per_section {
                if c > 1 {
                    return Err(CoverViolation::Duplicated {
                        section: i,
                        point: self.ground.point(g).clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    fn single_point_ground() -> GenericPointSet {
        GenericPointSet::new(vec![pt(1, 1)]).unwrap()
    }

    #[test]
    fn minimal_single_point_covering_passes() {
        let ground = single_point_ground();
        let a = ModalPath::new(1, Sign::Plus, vec![vec![pt(1, 1)], vec![]]).unwrap();
        let b = ModalPath::new(1, Sign::Plus, vec![vec![], vec![pt(1, 1)]]).unwrap();
        let c = FineCovering::new(1, Sign::Plus, ground, vec![a, b]).unwrap();
        assert!(c.check().is_ok());
    }

    #[test]
    fn double_placement_reports_missing_other_section_first() {
        let ground = single_point_ground();
        let a = ModalPath::new(1, Sign::Plus, vec![vec![pt(1, 1)], vec![]]).unwrap();
        let c = FineCovering::new(1, Sign::Plus, ground, vec![a.clone(), a]).unwrap();
        match c.check().unwrap_err() {
            CoverViolation::Missing { section, point } => {
                assert_eq!(section, 1);
                assert_eq!(point, pt(1, 1));
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn invalid_member_path_reported_first() {
        let ground = GenericPointSet::new(vec![pt(1, 1), pt(3, 3)]).unwrap();
        let bad = ModalPath::new(1, Sign::Plus, vec![vec![pt(3, 3)], vec![pt(1, 1)]]).unwrap();
        let other = ModalPath::new(1, Sign::Plus, vec![vec![pt(1, 1)], vec![pt(3, 3)]]).unwrap();
        let c = FineCovering::new(1, Sign::Plus, ground, vec![bad, other]).unwrap();
        assert!(matches!(
            c.check().unwrap_err(),
            CoverViolation::InvalidPath { path: 0, .. }
        ));
    }

    #[test]
    fn duplicated_point_in_same_section_detected() {
        let ground = single_point_ground();
        let a = ModalPath::new(0, Sign::Plus, vec![vec![pt(1, 1)]]).unwrap();
        let c = FineCovering::new(0, Sign::Plus, ground, vec![a.clone(), a]).unwrap();
        assert!(matches!(
            c.check().unwrap_err(),
            CoverViolation::Duplicated { section: 0, .. }
        ));
    }

    #[test]
    fn same_set_different_partitions_is_a_legal_multiset() {
        // Two members of a covering may be equal as sets while carrying
        // different partitions; the multiset keeps both.
        let ground = single_point_ground();
        let a = ModalPath::new(1, Sign::Plus, vec![vec![pt(1, 1)], vec![]]).unwrap();
        let b = ModalPath::new(1, Sign::Plus, vec![vec![], vec![pt(1, 1)]]).unwrap();
        assert_eq!(a.len(), b.len());
        assert_ne!(a, b);
        let c = FineCovering::new(1, Sign::Plus, ground, vec![a, b]).unwrap();
        assert_eq!(c.size(), 2);
        assert!(c.check().is_ok());
    }

    #[test]
    fn foreign_point_detected() {
        let ground = single_point_ground();
        let a = ModalPath::new(0, Sign::Plus, vec![vec![pt(5, 5)]]).unwrap();
        let c = FineCovering::new(0, Sign::Plus, ground, vec![a]).unwrap();
        assert!(matches!(
            c.check().unwrap_err(),
            CoverViolation::Foreign { section: 0, .. }
        ));
    }
}
