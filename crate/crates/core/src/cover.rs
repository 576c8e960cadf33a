//! Constructive fine coverings.
//!
//! The pipeline normalizes the input so layers stack cleanly, unfolds it into
//! k+1 reflected-and-shifted copies, covers the union by a minimum family of
//! disjoint decreasing paths, and projects each such path back down to a
//! k-modal path. The layer-i band of the union holds y in (i, i+1), so a
//! decreasing path meets layers from the top down and its pullback sections
//! come out x-separated with alternating directions.

use std::collections::BTreeMap;

use crate::covering::FineCovering;
use crate::geom::{GenericPointSet, Point};
use crate::path::{ModalPath, Sign};
use crate::rational::rat_int;

/// A normalized base set together with its k+1 unfolded layers.
#[derive(Debug, Clone)]
pub struct UnfoldedSet {
    base: GenericPointSet,
    k: usize,
    layers: Vec<GenericPointSet>,
    union: GenericPointSet,
    /// Point of the union -> (layer, x-rank in the base).
    locate: BTreeMap<Point, (usize, usize)>,
}

impl UnfoldedSet {
    pub fn base(&self) -> &GenericPointSet {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn layers(&self) -> &[GenericPointSet] {
        &self.layers
    }

    pub fn union(&self) -> &GenericPointSet {
        &self.union
    }

    /// Image in layer `layer` of the base point with x-rank `rank`.
    pub fn image(&self, layer: usize, rank: usize) -> &Point {
        self.layers[layer].point(rank)
    }

    /// Layer and base x-rank of a union point.
    pub fn locate(&self, p: &Point) -> Option<(usize, usize)> {
        self.locate.get(p).copied()
    }
}

/// Unfolds `s` (normalized first) into layers 0..=k, where layer i is the
/// previous layer reflected over y = i and shifted right by one. Every
/// point's trajectory through the layers is an increasing path.
pub fn unfold(s: &GenericPointSet, k: usize) -> UnfoldedSet {
    let base = s.rank_normalize(k);
    let mut layers = vec![base.clone()];
    for i in 1..=k {
        let two_i = rat_int(2 * i as i64);
        let prev = &layers[i - 1];
        let next: Vec<Point> = prev
            .iter()
            .map(|p| Point::new(p.x.clone() + rat_int(1), two_i.clone() - p.y.clone()))
            .collect();
        layers.push(GenericPointSet::from_sorted_unchecked(next));
    }
    let mut all: Vec<Point> = Vec::with_capacity(base.len() * (k + 1));
    let mut locate = BTreeMap::new();
    for (i, layer) in layers.iter().enumerate() {
        for (rank, p) in layer.iter().enumerate() {
            locate.insert(p.clone(), (i, rank));
            all.push(p.clone());
        }
    }
    let union = GenericPointSet::new(all).expect("unfolded union stays generic");
    UnfoldedSet {
        base,
        k,
        layers,
        union,
        locate,
    }
}

/// Minimum cover of `t` by pairwise disjoint decreasing paths.
///
/// Patience-style greedy: scanning by increasing x, each point joins the
/// chain whose current last point has the smallest y still above the point's
/// y, or opens a new chain. The number of chains equals the length of the
/// longest increasing path of `t`.
pub fn min_decreasing_cover(t: &GenericPointSet) -> Vec<Vec<Point>> {
    let mut chains: Vec<Vec<Point>> = Vec::new();
    // Chain tops stay sorted by y ascending, so the eligible chain with the
    // lowest top is found by binary search.
    for p in t.iter() {
        let pos = chains.partition_point(|chain| {
            chain.last().expect("chains are never empty").y < p.y
        });
        if pos == chains.len() {
            chains.push(vec![p.clone()]);
        } else {
            chains[pos].push(p.clone());
        }
    }
    chains
}

/// Projection of a decreasing path of the union down to a k-modal path of
/// the base: section i collects the pullbacks from layer k-i. Cardinality is
/// preserved, and the result is a plus path for odd k, a minus path for even
/// k.
pub fn project_decreasing(u: &UnfoldedSet, path: &[Point]) -> ModalPath {
    let k = u.k();
    let sign = if k % 2 == 1 { Sign::Plus } else { Sign::Minus };
    let mut sections = vec![Vec::new(); k + 1];
    for p in path {
        let (layer, rank) = u.locate(p).expect("projected point must be in the union");
        sections[k - layer].push(u.base().point(rank).clone());
    }
    ModalPath::new(k, sign, sections).expect("projection has k+1 sections")
}

/// Projection of an increasing path of the union: section i collects the
/// pullbacks from layer i, dropping a point that already appeared in an
/// earlier section (at most one per boundary). Always a plus path, of length
/// at least the path's length minus k.
pub fn project_increasing(u: &UnfoldedSet, path: &[Point]) -> ModalPath {
    let k = u.k();
    let mut sections = vec![Vec::new(); k + 1];
    let mut seen = vec![false; u.base().len()];
    for p in path {
        let (layer, rank) = u.locate(p).expect("projected point must be in the union");
        if !seen[rank] {
            seen[rank] = true;
            sections[layer].push(u.base().point(rank).clone());
        }
    }
    ModalPath::new(k, Sign::Plus, sections).expect("projection has k+1 sections")
}

/// True when the unfolding pipeline directly produces the requested sign;
/// otherwise the input is mirrored first and the result mirrored back.
fn direct_case(k: usize, sign: Sign) -> bool {
    (k % 2 == 1) == (sign == Sign::Plus)
}

/// Constructs a fine covering of `s` by (sign, k)-paths whose size is at
/// most the longest path of the parity-matched sign plus k. Empty projected
/// paths are dropped. An empty input yields the empty covering.
pub fn fine_cover(s: &GenericPointSet, k: usize, sign: Sign) -> FineCovering {
    if s.is_empty() {
        return FineCovering::new(k, sign, s.clone(), Vec::new())
            .expect("empty covering is well-formed");
    }
    let direct = direct_case(k, sign);
    let work = if direct { s.clone() } else { s.reflect_unit() };
    let u = unfold(&work, k);
    let chains = min_decreasing_cover(u.union());
    let mut paths = Vec::new();
    for chain in &chains {
        let projected = project_decreasing(&u, chain);
        if projected.is_empty() {
            continue;
        }
        // Map normalized base points back to `work` by x-rank, then undo the
        // mirror if one was applied.
        let mut sections = Vec::with_capacity(k + 1);
        for sec in projected.sections() {
            let original: Vec<Point> = sec
                .iter()
                .map(|p| {
                    let rank = u
                        .base()
                        .index_of(p)
                        .expect("projection lands in the normalized base");
                    work.point(rank).clone()
                })
                .collect();
            sections.push(original);
        }
        let path = ModalPath::new(k, projected.sign(), sections)
            .expect("rank mapping preserves arity");
        let path = if direct { path } else { path.reflect_unit() };
        paths.push(path);
    }
    FineCovering::new(k, sign, s.clone(), paths).expect("pipeline emits matching sign and k")
}
