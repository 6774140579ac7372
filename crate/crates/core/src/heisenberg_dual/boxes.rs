//! Finite unions of axis-aligned boxes in `R^d`.

use std::fmt;

use num_traits::Zero;

use super::interval::{Endpoint, Interval};
use crate::rational::Rational;

/// Product of one interval per axis. Empty when any factor is.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cuboid {
    axes: Vec<Interval>,
}

impl Cuboid {
    pub fn new(axes: Vec<Interval>) -> Self {
        Self { axes }
    }

    pub fn full(d: usize) -> Self {
        Self::new(vec![Interval::real_line(); d])
    }

    pub fn closed(min: &[Rational], max: &[Rational]) -> Self {
        assert_eq!(min.len(), max.len());
        Self::new(
            min.iter()
                .zip(max)
                .map(|(a, b)| Interval::closed(a.clone(), b.clone()))
                .collect(),
        )
    }

    pub fn origin(d: usize) -> Self {
        Self::new(vec![Interval::point(Rational::zero()); d])
    }

    pub fn axes(&self) -> &[Interval] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.iter().any(Interval::is_empty)
    }

    pub fn is_bounded(&self) -> bool {
        self.axes.iter().all(Interval::is_bounded)
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        self.axes.iter().zip(p).all(|(i, x)| i.contains(x))
    }

    pub fn intersect(&self, other: &Cuboid) -> Cuboid {
        Cuboid::new(
            self.axes
                .iter()
                .zip(&other.axes)
                .map(|(a, b)| a.intersect(b))
                .collect(),
        )
    }

    pub fn is_subset_of(&self, other: &Cuboid) -> bool {
        self.is_empty()
            || self
                .axes
                .iter()
                .zip(&other.axes)
                .all(|(a, b)| a.is_subset_of(b))
    }

    pub fn closure(&self) -> Cuboid {
        if self.is_empty() {
            return self.clone();
        }
        Cuboid::new(self.axes.iter().map(Interval::closure).collect())
    }

    /// Every finite face closed.
    pub fn is_closed(&self) -> bool {
        self.axes.iter().all(Interval::is_closed)
    }

    pub fn scale(&self, t: &Rational) -> Cuboid {
        Cuboid::new(self.axes.iter().map(|i| i.scale(t)).collect())
    }

    /// `R^d \ self` as a union of slabs.
    pub fn complement(&self) -> Vec<Cuboid> {
        if self.is_empty() {
            return vec![Cuboid::full(self.dim())];
        }
        let d = self.dim();
        let mut out = Vec::new();
        for (k, axis) in self.axes.iter().enumerate() {
            for piece in axis.complement() {
                // axes before k inside the box, axis k outside: a disjoint split
                let mut axes: Vec<Interval> = self.axes[..k].to_vec();
                axes.push(piece);
                axes.extend(std::iter::repeat_n(Interval::real_line(), d - k - 1));
                out.push(Cuboid::new(axes));
            }
        }
        out
    }
}

impl fmt::Debug for Cuboid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.axes.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("×"))
    }
}

/// Elementary pieces of `target` cut at every finite endpoint of `cuts`:
/// each piece is a point or an open interval lying entirely inside or
/// entirely outside each cut interval.
fn elementary_pieces<'a>(
    target: &Interval,
    cuts: impl Iterator<Item = &'a Interval>,
) -> Vec<Interval> {
    let mut values: Vec<Rational> = cuts
        .flat_map(|i| i.lo.value().into_iter().chain(i.hi.value()))
        .chain(target.lo.value().into_iter().chain(target.hi.value()))
        .cloned()
        .collect();
    values.sort();
    values.dedup();
    let mut pieces = Vec::with_capacity(2 * values.len() + 1);
    let mut prev = Endpoint::Unbounded;
    for v in values {
        pieces.push(Interval::new(prev, Endpoint::Open(v.clone())));
        pieces.push(Interval::point(v.clone()));
        prev = Endpoint::Open(v);
    }
    pieces.push(Interval::new(prev, Endpoint::Unbounded));
    pieces
        .into_iter()
        .map(|p| p.intersect(target))
        .filter(|p| !p.is_empty())
        .collect()
}

/// Whether the product `target` lies inside the union of `cover`.
fn covered(target: &[Interval], cover: &[&[Interval]]) -> bool {
    let Some((head, rest)) = target.split_first() else {
        return !cover.is_empty();
    };
    if target.iter().any(Interval::is_empty) {
        return true;
    }
    if cover.is_empty() {
        return false;
    }
    elementary_pieces(head, cover.iter().map(|c| &c[0]))
        .iter()
        .all(|piece| {
            let sub: Vec<&[Interval]> = cover
                .iter()
                .filter(|c| piece.is_subset_of(&c[0]))
                .map(|c| &c[1..])
                .collect();
            covered(rest, &sub)
        })
}

/// A finite union of boxes in `R^d`, kept free of empty and redundant boxes.
/// Set equality is semantic ([`CuboidUnion::set_eq`]), not structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CuboidUnion {
    dim: usize,
    boxes: Vec<Cuboid>,
}

impl CuboidUnion {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            boxes: Vec::new(),
        }
    }

    pub fn all(dim: usize) -> Self {
        Self {
            dim,
            boxes: vec![Cuboid::full(dim)],
        }
    }

    pub fn from_boxes(dim: usize, boxes: Vec<Cuboid>) -> Self {
        assert!(
            boxes.iter().all(|b| b.dim() == dim),
            "box dimension mismatch"
        );
        let mut kept: Vec<Cuboid> = boxes.into_iter().filter(|b| !b.is_empty()).collect();
        kept.dedup();
        // drop boxes inside another single box; ties keep the first copy
        let mut out: Vec<Cuboid> = Vec::with_capacity(kept.len());
        for (i, b) in kept.iter().enumerate() {
            let redundant = kept
                .iter()
                .enumerate()
                .any(|(j, c)| j != i && b.is_subset_of(c) && (!c.is_subset_of(b) || j < i));
            if !redundant {
                out.push(b.clone());
            }
        }
        let union = Self { dim, boxes: out };
        if !union.boxes.is_empty() && union.covers(&Cuboid::full(dim)) {
            return Self::all(dim);
        }
        union
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[Cuboid] {
        &self.boxes
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.boxes.len() == 1 && self.boxes[0] == Cuboid::full(self.dim)
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        self.boxes.iter().any(|b| b.contains(p))
    }

    pub fn covers(&self, b: &Cuboid) -> bool {
        let cover: Vec<&[Interval]> = self.boxes.iter().map(|c| c.axes()).collect();
        covered(b.axes(), &cover)
    }

    pub fn is_subset_of(&self, other: &CuboidUnion) -> bool {
        self.boxes.iter().all(|b| other.covers(b))
    }

    pub fn set_eq(&self, other: &CuboidUnion) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn union(&self, other: &CuboidUnion) -> CuboidUnion {
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        CuboidUnion::from_boxes(self.dim, boxes)
    }

    pub fn intersect(&self, other: &CuboidUnion) -> CuboidUnion {
        let mut boxes = Vec::new();
        for a in &self.boxes {
            for b in &other.boxes {
                boxes.push(a.intersect(b));
            }
        }
        CuboidUnion::from_boxes(self.dim, boxes)
    }

    pub fn complement(&self) -> CuboidUnion {
        self.boxes
            .iter()
            .fold(CuboidUnion::all(self.dim), |acc, b| {
                acc.intersect(&CuboidUnion::from_boxes(self.dim, b.complement()))
            })
    }

    /// Closure of a finite union is the union of closures.
    pub fn closure(&self) -> CuboidUnion {
        CuboidUnion::from_boxes(self.dim, self.boxes.iter().map(Cuboid::closure).collect())
    }

    pub fn interior(&self) -> CuboidUnion {
        self.complement().closure().complement()
    }

    pub fn is_closed(&self) -> bool {
        self.closure().is_subset_of(self)
    }

    pub fn is_bounded(&self) -> bool {
        self.boxes.iter().all(Cuboid::is_bounded)
    }

    pub fn scale(&self, t: &Rational) -> CuboidUnion {
        CuboidUnion::from_boxes(self.dim, self.boxes.iter().map(|b| b.scale(t)).collect())
    }
}

impl fmt::Debug for CuboidUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("EMPTY");
        }
        if self.is_all() {
            return f.write_str("ALL");
        }
        f.debug_list().entries(&self.boxes).finish()
    }
}
