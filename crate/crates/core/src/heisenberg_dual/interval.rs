//! Real intervals with rational or infinite endpoints, and finite unions of
//! them in canonical form.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Endpoint {
    /// `-∞` as a lower end, `+∞` as an upper end.
    Unbounded,
    Open(Rational),
    Closed(Rational),
}

impl Endpoint {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Endpoint::Unbounded => None,
            Endpoint::Open(v) | Endpoint::Closed(v) => Some(v),
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Endpoint::Closed(_))
    }

    fn map_value(&self, f: impl FnOnce(&Rational) -> Rational) -> Endpoint {
        match self {
            Endpoint::Unbounded => Endpoint::Unbounded,
            Endpoint::Open(v) => Endpoint::Open(f(v)),
            Endpoint::Closed(v) => Endpoint::Closed(f(v)),
        }
    }

    fn closed(&self) -> Endpoint {
        match self {
            Endpoint::Open(v) => Endpoint::Closed(v.clone()),
            e => e.clone(),
        }
    }

    fn opened(&self) -> Endpoint {
        match self {
            Endpoint::Closed(v) => Endpoint::Open(v.clone()),
            e => e.clone(),
        }
    }

    /// The same cut seen from the other side: `[v` becomes `v)`.
    fn flipped(&self) -> Endpoint {
        match self {
            Endpoint::Unbounded => Endpoint::Unbounded,
            Endpoint::Open(v) => Endpoint::Closed(v.clone()),
            Endpoint::Closed(v) => Endpoint::Open(v.clone()),
        }
    }
}

/// Order of lower ends: `-∞ < [v < (v`.
fn cmp_lower(a: &Endpoint, b: &Endpoint) -> Ordering {
    match (a, b) {
        (Endpoint::Unbounded, Endpoint::Unbounded) => Ordering::Equal,
        (Endpoint::Unbounded, _) => Ordering::Less,
        (_, Endpoint::Unbounded) => Ordering::Greater,
        _ => {
            let (x, y) = (a.value().unwrap(), b.value().unwrap());
            x.cmp(y).then_with(|| b.is_closed().cmp(&a.is_closed()))
        }
    }
}

/// Order of upper ends: `v) < v] < +∞`.
fn cmp_upper(a: &Endpoint, b: &Endpoint) -> Ordering {
    match (a, b) {
        (Endpoint::Unbounded, Endpoint::Unbounded) => Ordering::Equal,
        (Endpoint::Unbounded, _) => Ordering::Greater,
        (_, Endpoint::Unbounded) => Ordering::Less,
        _ => {
            let (x, y) = (a.value().unwrap(), b.value().unwrap());
            x.cmp(y).then_with(|| a.is_closed().cmp(&b.is_closed()))
        }
    }
}

/// Whether the set `{x ≥ lo}` (resp. `>`) meets `{x ≤ hi}` (resp. `<`).
fn lower_below_upper(lo: &Endpoint, hi: &Endpoint) -> bool {
    match (lo.value(), hi.value()) {
        (None, _) | (_, None) => true,
        (Some(a), Some(b)) => a < b || (a == b && lo.is_closed() && hi.is_closed()),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Self { lo, hi }
    }

    pub fn real_line() -> Self {
        Self::new(Endpoint::Unbounded, Endpoint::Unbounded)
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Self::new(Endpoint::Closed(a), Endpoint::Closed(b))
    }

    pub fn open(a: Rational, b: Rational) -> Self {
        Self::new(Endpoint::Open(a), Endpoint::Open(b))
    }

    pub fn point(a: Rational) -> Self {
        Self::closed(a.clone(), a)
    }

    pub fn is_empty(&self) -> bool {
        !lower_below_upper(&self.lo, &self.hi)
    }

    pub fn is_bounded(&self) -> bool {
        self.lo != Endpoint::Unbounded && self.hi != Endpoint::Unbounded
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Endpoint::Unbounded => true,
            Endpoint::Open(v) => x > v,
            Endpoint::Closed(v) => x >= v,
        };
        let below = match &self.hi {
            Endpoint::Unbounded => true,
            Endpoint::Open(v) => x < v,
            Endpoint::Closed(v) => x <= v,
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let lo = if cmp_lower(&self.lo, &other.lo) == Ordering::Greater {
            self.lo.clone()
        } else {
            other.lo.clone()
        };
        let hi = if cmp_upper(&self.hi, &other.hi) == Ordering::Less {
            self.hi.clone()
        } else {
            other.hi.clone()
        };
        Interval { lo, hi }
    }

    /// Nonempty `self` inside `other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.is_empty()
            || (cmp_lower(&other.lo, &self.lo) != Ordering::Greater
                && cmp_upper(&self.hi, &other.hi) != Ordering::Greater)
    }

    /// Closure in `R`.
    pub fn closure(&self) -> Interval {
        Interval::new(self.lo.closed(), self.hi.closed())
    }

    pub fn interior(&self) -> Interval {
        Interval::new(self.lo.opened(), self.hi.opened())
    }

    pub fn is_closed(&self) -> bool {
        self.is_empty() || *self == self.closure()
    }

    /// `{t·x | x ∈ self}` for `t ≠ 0`.
    pub fn scale(&self, t: &Rational) -> Interval {
        assert!(!t.is_zero(), "scaling by zero collapses the interval");
        let lo = self.lo.map_value(|v| v * t);
        let hi = self.hi.map_value(|v| v * t);
        if t.is_negative() {
            Interval::new(hi, lo)
        } else {
            Interval::new(lo, hi)
        }
    }

    /// Pieces of `R \ self` (zero, one or two intervals).
    pub fn complement(&self) -> Vec<Interval> {
        if self.is_empty() {
            return vec![Interval::real_line()];
        }
        let mut out = Vec::new();
        if self.lo != Endpoint::Unbounded {
            out.push(Interval::new(Endpoint::Unbounded, self.lo.flipped()));
        }
        if self.hi != Endpoint::Unbounded {
            out.push(Interval::new(self.hi.flipped(), Endpoint::Unbounded));
        }
        out
    }

    /// Whether `self ∪ next` is an interval, given `self.lo ≤ next.lo`.
    fn joins(&self, next: &Interval) -> bool {
        match (self.hi.value(), next.lo.value()) {
            (None, _) | (_, None) => true,
            (Some(h), Some(l)) => l < h || (l == h && (self.hi.is_closed() || next.lo.is_closed())),
        }
    }

    fn finite_endpoints(&self) -> impl Iterator<Item = &Rational> {
        self.lo.value().into_iter().chain(self.hi.value())
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Endpoint::Unbounded => f.write_str("(-inf")?,
            Endpoint::Open(v) => write!(f, "({}", format_rational(v))?,
            Endpoint::Closed(v) => write!(f, "[{}", format_rational(v))?,
        }
        f.write_str(", ")?;
        match &self.hi {
            Endpoint::Unbounded => f.write_str("inf)"),
            Endpoint::Open(v) => write!(f, "{})", format_rational(v)),
            Endpoint::Closed(v) => write!(f, "{}]", format_rational(v)),
        }
    }
}

/// Sorted, pairwise disjoint, non-joinable intervals. Two unions are equal
/// as sets iff their canonical lists are equal.
fn canonicalize(mut items: Vec<Interval>) -> Vec<Interval> {
    items.retain(|i| !i.is_empty());
    items.sort_by(|a, b| cmp_lower(&a.lo, &b.lo).then_with(|| cmp_upper(&a.hi, &b.hi)));
    let mut out: Vec<Interval> = Vec::with_capacity(items.len());
    for next in items {
        match out.last_mut() {
            Some(cur) if cur.joins(&next) => {
                if cmp_upper(&next.hi, &cur.hi) == Ordering::Greater {
                    cur.hi = next.hi;
                }
            }
            _ => out.push(next),
        }
    }
    out
}

/// Splits intervals at 0 and drops the point 0 itself.
fn remove_zero(items: Vec<Interval>) -> Vec<Interval> {
    let zero = Rational::zero();
    let mut out = Vec::with_capacity(items.len() + 1);
    for i in items {
        if i.contains(&zero) {
            out.push(Interval::new(i.lo.clone(), Endpoint::Open(zero.clone())));
            out.push(Interval::new(Endpoint::Open(zero.clone()), i.hi.clone()));
        } else {
            out.push(i);
        }
    }
    out
}

/// A finite union of intervals inside the punctured line `R^× = R \ {0}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PuncturedUnion {
    intervals: Vec<Interval>,
}

impl PuncturedUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    /// All of `R^×`.
    pub fn all() -> Self {
        Self::from_intervals(vec![Interval::real_line()])
    }

    /// Canonical union of arbitrary intervals, with 0 removed.
    pub fn from_intervals(items: Vec<Interval>) -> Self {
        Self {
            intervals: canonicalize(remove_zero(items)),
        }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut all = self.intervals.clone();
        all.extend(other.intervals.iter().cloned());
        Self::from_intervals(all)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut all = Vec::new();
        for a in &self.intervals {
            for b in &other.intervals {
                all.push(a.intersect(b));
            }
        }
        Self::from_intervals(all)
    }

    /// `R^× \ self`.
    pub fn complement(&self) -> Self {
        let mut pieces = vec![Interval::real_line()];
        for i in &self.intervals {
            let comp = i.complement();
            pieces = pieces
                .iter()
                .flat_map(|p| comp.iter().map(move |c| p.intersect(c)))
                .collect();
        }
        Self::from_intervals(pieces)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.intersect(other) == *self
    }

    /// Closure inside `R^×`: finite nonzero endpoints become closed, 0 stays out.
    pub fn closure(&self) -> Self {
        Self::from_intervals(
            self.intervals
                .iter()
                .map(|i| {
                    let close = |e: &Endpoint| match e.value() {
                        Some(v) if v.is_zero() => e.clone(),
                        _ => e.closed(),
                    };
                    Interval::new(close(&i.lo), close(&i.hi))
                })
                .collect(),
        )
    }

    pub fn interior(&self) -> Self {
        Self::from_intervals(self.intervals.iter().map(Interval::interior).collect())
    }

    pub fn is_closed(&self) -> bool {
        self.closure() == *self
    }

    pub fn is_bounded(&self) -> bool {
        self.intervals.iter().all(Interval::is_bounded)
    }

    /// 0 is an accumulation point iff some interval ends at 0 (no interval
    /// contains 0, and intervals are nonempty).
    pub fn accumulates_at_zero(&self) -> bool {
        self.intervals
            .iter()
            .flat_map(Interval::finite_endpoints)
            .any(Zero::is_zero)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::from_intervals(self.intervals.iter().map(|i| i.scale(t)).collect())
    }
}

impl fmt::Debug for PuncturedUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.intervals.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn oc(a: i64, b: i64) -> Interval {
        Interval::new(Endpoint::Open(int(a)), Endpoint::Closed(int(b)))
    }

    #[test]
    fn zero_is_removed_and_intervals_split() {
        let u = PuncturedUnion::from_intervals(vec![Interval::closed(int(-1), int(1))]);
        assert_eq!(
            u.intervals(),
            &[
                Interval::new(Endpoint::Closed(int(-1)), Endpoint::Open(int(0))),
                Interval::new(Endpoint::Open(int(0)), Endpoint::Closed(int(1))),
            ]
        );
        assert!(!u.contains(&int(0)));
        assert!(u.accumulates_at_zero());
    }

    #[test]
    fn adjacent_compatible_intervals_merge() {
        let u = PuncturedUnion::from_intervals(vec![
            Interval::closed(int(2), int(3)),
            Interval::open(int(1), int(2)),
        ]);
        assert_eq!(u.intervals(), &[oc(1, 3)]);
        // (1,2) ∪ (2,3) keeps the hole at 2
        let v = PuncturedUnion::from_intervals(vec![
            Interval::open(int(1), int(2)),
            Interval::open(int(2), int(3)),
        ]);
        assert_eq!(v.intervals().len(), 2);
    }

    #[test]
    fn closure_never_adds_zero() {
        let u = PuncturedUnion::from_intervals(vec![Interval::open(int(0), int(1))]);
        let c = u.closure();
        assert_eq!(c.intervals(), &[oc(0, 1)]);
        assert!(c.is_closed());
        assert!(!u.is_closed());
    }

    #[test]
    fn complement_inside_punctured_line() {
        let u = PuncturedUnion::from_intervals(vec![Interval::closed(int(1), int(2))]);
        let c = u.complement();
        assert!(c.contains(&int(-5)) && c.contains(&ratio(1, 2)) && c.contains(&int(3)));
        assert!(!c.contains(&int(0)) && !c.contains(&int(1)));
        assert_eq!(c.complement(), u);
        assert_eq!(PuncturedUnion::empty().complement(), PuncturedUnion::all());
    }

    #[test]
    fn negative_scaling_flips_endpoints() {
        let u = PuncturedUnion::from_intervals(vec![oc(1, 2)]);
        let s = u.scale(&int(-2));
        assert_eq!(
            s.intervals(),
            &[Interval::new(
                Endpoint::Closed(int(-4)),
                Endpoint::Open(int(-2))
            )]
        );
    }
}
