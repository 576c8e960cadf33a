//! Generic planar point sets.
//!
//! A point set is *generic* when all x-coordinates are pairwise distinct and
//! all y-coordinates are pairwise distinct. Genericity is what makes every
//! dominance comparison decidable with no ties, so construction validates it
//! exactly and everything downstream may assume it.

use std::cmp::Ordering;

use crate::error::Error;
use crate::rational::{rat_int, Rat};

/// A planar point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    /// `self` strictly northeast-dominated by `q`: x and y both increase.
    pub fn ne_below(&self, q: &Point) -> bool {
        self.x < q.x && self.y < q.y
    }

    /// `self` strictly southeast-dominated by `q`: x increases, y decreases.
    pub fn se_below(&self, q: &Point) -> bool {
        self.x < q.x && self.y > q.y
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            crate::rational::rat_to_string(&self.x),
            crate::rational::rat_to_string(&self.y)
        )
    }
}

/// A finite generic point set, stored sorted by strictly increasing x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericPointSet {
    points: Vec<Point>,
}

impl GenericPointSet {
    /// Validates genericity, sorting the input by x.
    ///
    /// The indices in duplicate errors are x-ranks (0-based) in the sorted
    /// order, so callers can name the colliding points.
    pub fn new(mut points: Vec<Point>) -> Result<Self, Error> {
        points.sort_by(|p, q| p.x.cmp(&q.x));
        for i in 1..points.len() {
            if points[i - 1].x == points[i].x {
                return Err(Error::DuplicateX {
                    first: i - 1,
                    second: i,
                });
            }
        }
        let mut by_y: Vec<usize> = (0..points.len()).collect();
        by_y.sort_by(|&a, &b| points[a].y.cmp(&points[b].y));
        for w in by_y.windows(2) {
            if points[w[0]].y == points[w[1]].y {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateY { first: a, second: b });
            }
        }
        Ok(GenericPointSet { points })
    }

    pub fn empty() -> Self {
        GenericPointSet { points: Vec::new() }
    }

    /// The point set `{(i, a_i)}` of a generic sequence, indices 1-based.
    pub fn from_sequence(values: &[Rat]) -> Result<Self, Error> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateValue {
                    first: a + 1,
                    second: b + 1,
                });
            }
        }
        let points = values
            .iter()
            .enumerate()
            .map(|(i, v)| Point::new(rat_int(i as i64 + 1), v.clone()))
            .collect();
        Ok(GenericPointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// The i-th point by x-rank (0-based).
    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Position of `p` by binary search on x; `None` if absent.
    pub fn index_of(&self, p: &Point) -> Option<usize> {
        let i = self
            .points
            .binary_search_by(|cand| cand.x.cmp(&p.x))
            .ok()?;
        (self.points[i].y == p.y).then_some(i)
    }

    /// The y-values read in x-order: the generic sequence this set induces.
    pub fn to_sequence(&self) -> Vec<Rat> {
        self.points.iter().map(|p| p.y.clone()).collect()
    }

    /// 0-based y-rank of each point, in x-order.
    pub fn y_ranks(&self) -> Vec<usize> {
        let n = self.points.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.points[a].y.cmp(&self.points[b].y));
        let mut ranks = vec![0usize; n];
        for (rank, &idx) in order.iter().enumerate() {
            ranks[idx] = rank;
        }
        ranks
    }

    /// Order-isomorphic copy with x = (k+1) * x-rank and y = y-rank / (n+1),
    /// ranks 1-based. Afterwards all y lie strictly inside (0, 1) and
    /// consecutive x differ by at least k+1.
    pub fn rank_normalize(&self, k: usize) -> GenericPointSet {
        let n = self.points.len();
        let denom = rat_int(n as i64 + 1);
        let yr = self.y_ranks();
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, _)| {
                Point::new(
                    rat_int((k as i64 + 1) * (i as i64 + 1)),
                    rat_int(yr[i] as i64 + 1) / denom.clone(),
                )
            })
            .collect();
        GenericPointSet { points }
    }

    /// Mirror across the x-axis: y -> -y. Swaps the two dominance orders.
    pub fn reflect_y(&self) -> GenericPointSet {
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.x.clone(), -p.y.clone()))
            .collect();
        GenericPointSet { points }
    }

    /// Mirror across the line y = 1/2: y -> 1 - y.
    pub fn reflect_unit(&self) -> GenericPointSet {
        let one = rat_int(1);
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.x.clone(), one.clone() - p.y.clone()))
            .collect();
        GenericPointSet { points }
    }

    /// Subset by x-rank indices (strictly increasing positions).
    pub fn subset(&self, indices: &[usize]) -> GenericPointSet {
        let points = indices.iter().map(|&i| self.points[i].clone()).collect();
        GenericPointSet { points }
    }

    /// Internal constructor for sets already known generic and x-sorted.
    pub(crate) fn from_sorted_unchecked(points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0].x < w[1].x));
        GenericPointSet { points }
    }
}

/// Total order on points by x; sufficient within one generic set.
pub fn cmp_by_x(p: &Point, q: &Point) -> Ordering {
    p.x.cmp(&q.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rat, rat};

    fn seq(values: &[&str]) -> Vec<Rat> {
        values.iter().map(|v| parse_rat(v).unwrap()).collect()
    }

    #[test]
    fn from_sequence_empty() {
        let s = GenericPointSet::from_sequence(&[]).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn from_sequence_places_points_at_index_value() {
        let s = GenericPointSet::from_sequence(&seq(&["5", "4", "3.14"])).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.point(0), &Point::new(rat_int(1), rat_int(5)));
        assert_eq!(s.point(1), &Point::new(rat_int(2), rat_int(4)));
        assert_eq!(s.point(2), &Point::new(rat_int(3), rat(157, 50)));
        // Strictly decreasing in y: a decreasing path of length 3.
        assert!(s.point(0).se_below(s.point(1)));
        assert!(s.point(1).se_below(s.point(2)));
    }

    #[test]
    fn from_sequence_rejects_duplicates_with_positions() {
        let err = GenericPointSet::from_sequence(&seq(&["1", "3", "3", "2"])).unwrap_err();
        match err {
            Error::DuplicateValue { first, second } => {
                assert_eq!((first, second), (2, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn round_trip_preserves_order_comparisons() {
        let values = seq(&["2", "9", "-1", "4.5", "7/2"]);
        let s = GenericPointSet::from_sequence(&values).unwrap();
        let back = s.to_sequence();
        assert_eq!(back, values);
    }

    #[test]
    fn genericity_rejected_on_tied_coordinates() {
        let pts = vec![
            Point::new(rat_int(1), rat_int(1)),
            Point::new(rat_int(1), rat_int(2)),
        ];
        assert!(matches!(
            GenericPointSet::new(pts),
            Err(Error::DuplicateX { .. })
        ));
        let pts = vec![
            Point::new(rat_int(1), rat_int(2)),
            Point::new(rat_int(3), rat_int(2)),
        ];
        assert!(matches!(
            GenericPointSet::new(pts),
            Err(Error::DuplicateY { .. })
        ));
    }

    #[test]
    fn rank_normalize_examples() {
        let s = GenericPointSet::new(vec![
            Point::new(rat_int(1), rat_int(5)),
            Point::new(rat_int(2), rat_int(4)),
        ])
        .unwrap();
        let n = s.rank_normalize(1);
        assert_eq!(n.point(0), &Point::new(rat_int(2), rat(2, 3)));
        assert_eq!(n.point(1), &Point::new(rat_int(4), rat(1, 3)));

        let single = GenericPointSet::new(vec![Point::new(rat(7, 3), rat_int(9))]).unwrap();
        let n = single.rank_normalize(2);
        assert_eq!(n.point(0), &Point::new(rat_int(3), rat(1, 2)));
    }

    #[test]
    fn rank_normalize_is_order_isomorphic() {
        let s = GenericPointSet::from_sequence(&seq(&["3", "1", "4", "2"])).unwrap();
        let n = s.rank_normalize(2);
        assert_eq!(s.y_ranks(), n.y_ranks());
        for w in n.points().windows(2) {
            assert!(w[1].x.clone() - w[0].x.clone() >= rat_int(3));
        }
        for p in n.iter() {
            assert!(p.y > rat_int(0) && p.y < rat_int(1));
        }
    }
}
