//! k-modal paths: point sets carrying an explicit partition into k+1
//! x-separated monotone sections of alternating direction.
//!
//! The partition is stored, never inferred, because the same set can admit
//! several partitions and covering multisets distinguish them. Empty sections
//! still carry the direction dictated by the sign and section index.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::Point;

/// Direction of a monotone section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

impl Monotonicity {
    pub fn flip(self) -> Self {
        match self {
            Monotonicity::Increasing => Monotonicity::Decreasing,
            Monotonicity::Decreasing => Monotonicity::Increasing,
        }
    }

    /// Whether consecutive points `p`, `q` (with x(p) < x(q)) follow it.
    pub fn holds(self, p: &Point, q: &Point) -> bool {
        match self {
            Monotonicity::Increasing => p.y < q.y,
            Monotonicity::Decreasing => p.y > q.y,
        }
    }
}

/// Class of a k-modal path: a plus path starts with an increasing section,
/// a minus path with a decreasing one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Direction dictated to section `i`.
    pub fn section_monotonicity(self, i: usize) -> Monotonicity {
        match (self, i % 2) {
            (Sign::Plus, 0) | (Sign::Minus, 1) => Monotonicity::Increasing,
            _ => Monotonicity::Decreasing,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    /// Accepts ASCII `-` as well as the typographic minus.
    pub fn parse(text: &str) -> Result<Self, Error> {
        match text.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "\u{2212}" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign `{other}`"))),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// First invariant a candidate path violates, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    /// Two consecutive points of one section break its dictated direction
    /// (this includes tied x within a section, which no chain allows).
    BrokenSection {
        section: usize,
        expected: Monotonicity,
        first: Point,
        second: Point,
    },
    /// A point of a later section fails to lie strictly right of an earlier
    /// section's points.
    SeparationViolation {
        earlier_section: usize,
        later_section: usize,
        left: Point,
        right: Point,
    },
}

impl std::fmt::Display for PathViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PathViolation::BrokenSection {
                section,
                expected,
                first,
                second,
            } => write!(
                f,
                "section {section} must be {expected:?} but contains {first} before {second}"
            ),
            PathViolation::SeparationViolation {
                earlier_section,
                later_section,
                left,
                right,
            } => write!(
                f,
                "section {later_section} point {right} does not lie strictly right of section {earlier_section} point {left}"
            ),
        }
    }
}

/// A k-modal path: k+1 sections, each a list of points sorted by x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModalPath {
    k: usize,
    sign: Sign,
    sections: Vec<Vec<Point>>,
}

impl ModalPath {
    /// Builds a path from raw sections (sorted here by x). The arity must be
    /// k+1; everything else is left to [`ModalPath::validate`], so invalid
    /// candidates can be represented and reported on.
    pub fn new(k: usize, sign: Sign, mut sections: Vec<Vec<Point>>) -> Result<Self, Error> {
        if sections.len() != k + 1 {
            return Err(Error::InvalidArgument(format!(
                "a {k}-modal path needs {} sections, got {}",
                k + 1,
                sections.len()
            )));
        }
        for sec in &mut sections {
            sec.sort_by(|p, q| p.x.cmp(&q.x));
        }
        Ok(ModalPath { k, sign, sections })
    }

    /// The empty k-modal path.
    pub fn empty(k: usize, sign: Sign) -> Self {
        ModalPath {
            k,
            sign,
            sections: vec![Vec::new(); k + 1],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn sections(&self) -> &[Vec<Point>] {
        &self.sections
    }

    pub fn section(&self, i: usize) -> &[Point] {
        &self.sections[i]
    }

    /// Length of the path: its cardinality.
    pub fn len(&self) -> usize {
        self.sections.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.iter().all(Vec::is_empty)
    }

    /// Points in x-order together with their section index.
    pub fn points_in_order(&self) -> Vec<(&Point, usize)> {
        let mut all: Vec<(&Point, usize)> = self
            .sections
            .iter()
            .enumerate()
            .flat_map(|(i, sec)| sec.iter().map(move |p| (p, i)))
            .collect();
        all.sort_by(|a, b| a.0.x.cmp(&b.0.x));
        all
    }

    /// First point and its section index; `None` when empty.
    pub fn first_point(&self) -> Option<(&Point, usize)> {
        self.sections
            .iter()
            .enumerate()
            .flat_map(|(i, sec)| sec.first().map(|p| (p, i)))
            .min_by(|a, b| a.0.x.cmp(&b.0.x))
    }

    /// Reflect across y = 1/2 and flip the sign. Sections keep their indices:
    /// mirroring flips every direction, which is exactly the opposite sign's
    /// dictation.
    pub fn reflect_unit(&self) -> ModalPath {
        let one = crate::rational::rat_int(1);
        let sections = self
            .sections
            .iter()
            .map(|sec| {
                sec.iter()
                    .map(|p| Point::new(p.x.clone(), one.clone() - p.y.clone()))
                    .collect()
            })
            .collect();
        ModalPath {
            k: self.k,
            sign: self.sign.flip(),
            sections,
        }
    }

    /// Checks the three path invariants in one left-to-right sweep and
    /// reports the first violation: every section a chain of its dictated
    /// direction, and sections strictly separated by x.
    pub fn validate(&self) -> Result<(), PathViolation> {
        for (i, sec) in self.sections.iter().enumerate() {
            let want = self.sign.section_monotonicity(i);
            for w in sec.windows(2) {
                if !(w[0].x < w[1].x && want.holds(&w[0], &w[1])) {
                    return Err(PathViolation::BrokenSection {
                        section: i,
                        expected: want,
                        first: w[0].clone(),
                        second: w[1].clone(),
                    });
                }
            }
            if let Some(first) = sec.first() {
                for (j, earlier) in self.sections[..i].iter().enumerate() {
                    if let Some(last) = earlier.last() {
                        if !(last.x < first.x) {
                            return Err(PathViolation::SeparationViolation {
                                earlier_section: j,
                                later_section: i,
                                left: last.clone(),
                                right: first.clone(),
                            });
                        }
                    }
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

    #[test]
    fn valid_unimodal_path_with_empty_tail() {
        let p = ModalPath::new(1, Sign::Plus, vec![vec![pt(1, 1), pt(2, 2)], vec![]]).unwrap();
        assert!(p.validate().is_ok());
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn increasing_points_in_decreasing_slot_fail() {
        let p = ModalPath::new(1, Sign::Plus, vec![vec![], vec![pt(1, 1), pt(2, 2)]]).unwrap();
        match p.validate().unwrap_err() {
            PathViolation::BrokenSection { section, expected, .. } => {
                assert_eq!(section, 1);
                assert_eq!(expected, Monotonicity::Decreasing);
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn x_separation_failure_detected() {
        let p = ModalPath::new(1, Sign::Plus, vec![vec![pt(3, 3)], vec![pt(1, 1)]]).unwrap();
        assert!(matches!(
            p.validate().unwrap_err(),
            PathViolation::SeparationViolation {
                earlier_section: 0,
                later_section: 1,
                ..
            }
        ));
    }

    #[test]
    fn zero_modal_paths_are_plain_chains() {
        let inc = ModalPath::new(0, Sign::Plus, vec![vec![pt(1, 1), pt(2, 2), pt(3, 3)]]).unwrap();
        assert!(inc.validate().is_ok());
        let dec = ModalPath::new(0, Sign::Minus, vec![vec![pt(1, 3), pt(2, 2), pt(3, 1)]]).unwrap();
        assert!(dec.validate().is_ok());
        let wrong = ModalPath::new(0, Sign::Minus, vec![vec![pt(1, 1), pt(2, 2)]]).unwrap();
        assert!(wrong.validate().is_err());
    }

    #[test]
    fn one_point_per_section_validates_under_both_signs() {
        // A short path with singleton sections is both a plus and a minus path.
        let pts = [pt(1, 5), pt(2, 1), pt(3, 7)];
        for sign in [Sign::Plus, Sign::Minus] {
            let p = ModalPath::new(
                2,
                sign,
                pts.iter().map(|p| vec![p.clone()]).collect::<Vec<_>>(),
            )
            .unwrap();
            assert!(p.validate().is_ok(), "sign {sign} should validate");
        }
    }

    #[test]
    fn first_point_and_order() {
        let p = ModalPath::new(
            2,
            Sign::Minus,
            vec![vec![pt(4, 9)], vec![pt(6, 1), pt(5, 0)], vec![]],
        )
        .unwrap();
        let (s, i) = p.first_point().unwrap();
        assert_eq!((s, i), (&pt(4, 9), 0));
        let order: Vec<i64> = p
            .points_in_order()
            .iter()
            .map(|(p, _)| {
                let v: i64 = p.x.numer().try_into().unwrap();
                v
            })
            .collect();
        assert_eq!(order, vec![4, 5, 6]);
    }

    #[test]
    fn empty_sections_keep_dictated_direction() {
        assert_eq!(
            Sign::Plus.section_monotonicity(0),
            Monotonicity::Increasing
        );
        assert_eq!(
            Sign::Plus.section_monotonicity(3),
            Monotonicity::Decreasing
        );
        assert_eq!(
            Sign::Minus.section_monotonicity(2),
            Monotonicity::Decreasing
        );
        assert_eq!(
            Sign::Minus.section_monotonicity(5),
            Monotonicity::Increasing
        );
    }
}
