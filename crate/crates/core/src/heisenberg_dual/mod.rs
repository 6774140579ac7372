//! The unitary dual of the Heisenberg group `H_{2n+1}` as a topological
//! space `X = Γ₁ ⊔ Γ₂`.
//!
//! `Γ₁ ≅ R^×` is the Kirillov parameter of the infinite-dimensional
//! representations (the value of `ξ` on the center) and `Γ₂ ≅ R^{2n}` is the
//! space of characters, in the standard coordinates of `(g/[g,g])*`. Each
//! part carries its Euclidean topology, and a set `F` is closed iff both
//! parts are closed and, whenever 0 is an accumulation point of `F ∩ Γ₁`,
//! all of `Γ₂` lies in `F`.
//!
//! Subsets are finite descriptors: interval unions in `Γ₁` and box unions in
//! `Γ₂`. Every predicate here is decided exactly on descriptors.

mod boxes;
mod interval;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use boxes::{Cuboid, CuboidUnion};
pub use interval::{Endpoint, Interval, PuncturedUnion};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("the Heisenberg dual needs n >= 1")]
    ZeroN,
    #[error("descriptors live over different groups: n = {left} vs n = {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("interval has lower end above upper end: {0}")]
    ReversedInterval(String),
    #[error("box {index}: {reason}")]
    BadBox { index: usize, reason: String },
    #[error("malformed dual-subset JSON: {0}")]
    Json(String),
}

/// `Γ₁ ⊔ Γ₂` for `H_{2n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualSpace {
    n: usize,
}

impl DualSpace {
    pub fn new(n: usize) -> Result<Self, DualError> {
        if n == 0 {
            return Err(DualError::ZeroN);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the character space `Γ₂`.
    pub fn character_dim(&self) -> usize {
        2 * self.n
    }

    pub fn empty(&self) -> DualSubset {
        DualSubset {
            space: *self,
            part1: PuncturedUnion::empty(),
            part2: CuboidUnion::empty(self.character_dim()),
        }
    }

    pub fn whole(&self) -> DualSubset {
        DualSubset {
            space: *self,
            part1: PuncturedUnion::all(),
            part2: CuboidUnion::all(self.character_dim()),
        }
    }

    /// `Γ₁`, the open dense set of infinite-dimensional representations.
    pub fn gamma1(&self) -> DualSubset {
        self.subset(
            PuncturedUnion::all(),
            CuboidUnion::empty(self.character_dim()),
        )
    }

    /// `Γ₂`, the closed set of characters.
    pub fn gamma2(&self) -> DualSubset {
        self.subset(
            PuncturedUnion::empty(),
            CuboidUnion::all(self.character_dim()),
        )
    }

    /// The distinguished fixed point: the trivial character.
    pub fn base_point(&self) -> DualSubset {
        self.subset(
            PuncturedUnion::empty(),
            CuboidUnion::from_boxes(
                self.character_dim(),
                vec![Cuboid::origin(self.character_dim())],
            ),
        )
    }

    pub fn subset(&self, part1: PuncturedUnion, part2: CuboidUnion) -> DualSubset {
        assert_eq!(
            part2.dim(),
            self.character_dim(),
            "character part has wrong dimension"
        );
        DualSubset {
            space: *self,
            part1,
            part2,
        }
    }
}

/// A finite descriptor of a subset of the Heisenberg dual.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualSubset {
    space: DualSpace,
    part1: PuncturedUnion,
    part2: CuboidUnion,
}

/// Which condition of the quasi-compactness criterion failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QcReason {
    /// Condition 1: `C ∩ Γ₂` is not closed.
    CharacterPartNotClosed,
    /// Condition 1: `C ∩ Γ₂` is unbounded.
    CharacterPartUnbounded,
    /// Condition 2: `C ∩ Γ₁` is not closed in `R^×`.
    NoncharacterPartNotClosed,
    /// Condition 2: `C ∩ Γ₁` is unbounded.
    NoncharacterPartUnbounded,
    /// Condition 3: `C ∩ Γ₁` accumulates at 0 while `C ∩ Γ₂` is empty.
    #[serde(rename = "empty-character-part-with-0-accumulation")]
    EmptyCharacterPartWithZeroAccumulation,
}

impl QcReason {
    pub fn condition(&self) -> u8 {
        match self {
            QcReason::CharacterPartNotClosed | QcReason::CharacterPartUnbounded => 1,
            QcReason::NoncharacterPartNotClosed | QcReason::NoncharacterPartUnbounded => 2,
            QcReason::EmptyCharacterPartWithZeroAccumulation => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            QcReason::CharacterPartNotClosed => "character-part-not-closed",
            QcReason::CharacterPartUnbounded => "character-part-unbounded",
            QcReason::NoncharacterPartNotClosed => "noncharacter-part-not-closed",
            QcReason::NoncharacterPartUnbounded => "noncharacter-part-unbounded",
            QcReason::EmptyCharacterPartWithZeroAccumulation => {
                "empty-character-part-with-0-accumulation"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcDecision {
    pub quasi_compact: bool,
    pub reasons: Vec<QcReason>,
}

impl DualSubset {
    pub fn space(&self) -> DualSpace {
        self.space
    }

    /// `C ∩ Γ₁` as a subset of `R^×`.
    pub fn part1(&self) -> &PuncturedUnion {
        &self.part1
    }

    /// `C ∩ Γ₂` as a subset of `R^{2n}`.
    pub fn part2(&self) -> &CuboidUnion {
        &self.part2
    }

    pub fn is_empty(&self) -> bool {
        self.part1.is_empty() && self.part2.is_empty()
    }

    fn same_space(&self, other: &DualSubset) -> Result<(), DualError> {
        if self.space != other.space {
            return Err(DualError::AmbientMismatch {
                left: self.space.n,
                right: other.space.n,
            });
        }
        Ok(())
    }

    fn with_parts(&self, part1: PuncturedUnion, part2: CuboidUnion) -> DualSubset {
        DualSubset {
            space: self.space,
            part1,
            part2,
        }
    }

    pub fn union(&self, other: &DualSubset) -> Result<DualSubset, DualError> {
        self.same_space(other)?;
        Ok(self.with_parts(
            self.part1.union(&other.part1),
            self.part2.union(&other.part2),
        ))
    }

    pub fn intersect(&self, other: &DualSubset) -> Result<DualSubset, DualError> {
        self.same_space(other)?;
        Ok(self.with_parts(
            self.part1.intersect(&other.part1),
            self.part2.intersect(&other.part2),
        ))
    }

    pub fn complement(&self) -> DualSubset {
        self.with_parts(self.part1.complement(), self.part2.complement())
    }

    pub fn difference(&self, other: &DualSubset) -> Result<DualSubset, DualError> {
        self.intersect(&other.complement())
    }

    pub fn is_subset_of(&self, other: &DualSubset) -> Result<bool, DualError> {
        self.same_space(other)?;
        Ok(self.part1.is_subset_of(&other.part1) && self.part2.is_subset_of(&other.part2))
    }

    /// Equality as sets (box unions have no unique normal form).
    pub fn set_eq(&self, other: &DualSubset) -> bool {
        self.space == other.space && self.part1 == other.part1 && self.part2.set_eq(&other.part2)
    }

    pub fn closure(&self) -> DualSubset {
        let part2 = if self.part1.accumulates_at_zero() {
            CuboidUnion::all(self.space.character_dim())
        } else {
            self.part2.closure()
        };
        self.with_parts(self.part1.closure(), part2)
    }

    pub fn is_closed(&self) -> bool {
        self.closure().set_eq(self)
    }

    pub fn interior(&self) -> DualSubset {
        self.complement().closure().complement()
    }

    pub fn is_open(&self) -> bool {
        self.interior().set_eq(self)
    }

    pub fn boundary(&self) -> DualSubset {
        self.closure()
            .intersect(&self.complement().closure())
            .expect("same ambient space")
    }

    /// Exact quasi-compactness test with every failed condition listed.
    pub fn quasi_compactness(&self) -> QcDecision {
        let mut reasons = Vec::new();
        if !self.part2.is_closed() {
            reasons.push(QcReason::CharacterPartNotClosed);
        }
        if !self.part2.is_bounded() {
            reasons.push(QcReason::CharacterPartUnbounded);
        }
        if !self.part1.is_closed() {
            reasons.push(QcReason::NoncharacterPartNotClosed);
        }
        if !self.part1.is_bounded() {
            reasons.push(QcReason::NoncharacterPartUnbounded);
        }
        if self.part1.accumulates_at_zero() && self.part2.is_empty() {
            reasons.push(QcReason::EmptyCharacterPartWithZeroAccumulation);
        }
        QcDecision {
            quasi_compact: reasons.is_empty(),
            reasons,
        }
    }

    pub fn is_quasi_compact(&self) -> bool {
        self.quasi_compactness().quasi_compact
    }

    /// The multiplicative action `t·C`. For `t ≠ 0` both parts scale; `0·C`
    /// collapses every point onto the trivial character.
    pub fn r_act(&self, t: &Rational) -> DualSubset {
        if t.is_zero() {
            return if self.is_empty() {
                self.space.empty()
            } else {
                self.space.base_point()
            };
        }
        self.with_parts(self.part1.scale(t), self.part2.scale(t))
    }

    pub fn from_json_str(s: &str) -> Result<DualSubset, DualError> {
        let doc: DualSubsetJson =
            serde_json::from_str(s).map_err(|e| DualError::Json(e.to_string()))?;
        doc.into_subset()
    }

    pub fn to_json(&self) -> DualSubsetJson {
        DualSubsetJson::from_subset(self)
    }
}

impl fmt::Debug for DualSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DualSubset(n={}; Γ₁: {:?}; Γ₂: {:?})",
            self.space.n, self.part1, self.part2
        )
    }
}

/// Endpoint in JSON: a rational (integer or `"p/q"`), `"-inf"` or `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundJson {
    NegInf,
    PosInf,
    Finite(Rational),
}

impl Serialize for BoundJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundJson::NegInf => s.serialize_str("-inf"),
            BoundJson::PosInf => s.serialize_str("inf"),
            BoundJson::Finite(q) => rational::json::serialize(q, s),
        }
    }
}

impl<'de> Deserialize<'de> for BoundJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BoundJson::Finite(rational::int(v))),
            Raw::Str(s) => match s.trim() {
                "-inf" => Ok(BoundJson::NegInf),
                "inf" | "+inf" => Ok(BoundJson::PosInf),
                other => rational::parse_rational(other)
                    .map(BoundJson::Finite)
                    .map_err(serde::de::Error::custom),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalJson {
    pub lo: BoundJson,
    pub hi: BoundJson,
    #[serde(default)]
    pub lo_closed: bool,
    #[serde(default)]
    pub hi_closed: bool,
}

/// A box. `closed` sets every face; the optional per-axis arrays override it
/// and are only written for boxes with mixed faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxJson {
    pub min: Vec<BoundJson>,
    pub max: Vec<BoundJson>,
    #[serde(default)]
    pub closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo_closed: Option<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi_closed: Option<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part2Symbol {
    #[serde(rename = "EMPTY")]
    Empty,
    #[serde(rename = "ALL")]
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Part2Json {
    Symbol(Part2Symbol),
    Boxes(Vec<BoxJson>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualSubsetJson {
    pub n: usize,
    #[serde(default)]
    pub part1: Vec<IntervalJson>,
    pub part2: Part2Json,
}

fn lower_endpoint(b: &BoundJson, closed: bool) -> Result<Endpoint, String> {
    match b {
        BoundJson::NegInf => Ok(Endpoint::Unbounded),
        BoundJson::PosInf => Err("lower end cannot be +inf".into()),
        BoundJson::Finite(q) if closed => Ok(Endpoint::Closed(q.clone())),
        BoundJson::Finite(q) => Ok(Endpoint::Open(q.clone())),
    }
}

fn upper_endpoint(b: &BoundJson, closed: bool) -> Result<Endpoint, String> {
    match b {
        BoundJson::PosInf => Ok(Endpoint::Unbounded),
        BoundJson::NegInf => Err("upper end cannot be -inf".into()),
        BoundJson::Finite(q) if closed => Ok(Endpoint::Closed(q.clone())),
        BoundJson::Finite(q) => Ok(Endpoint::Open(q.clone())),
    }
}

fn bound_of(e: &Endpoint, infinite: BoundJson) -> BoundJson {
    match e.value() {
        Some(q) => BoundJson::Finite(q.clone()),
        None => infinite,
    }
}

fn ordered(lo: &BoundJson, hi: &BoundJson) -> bool {
    match (lo, hi) {
        (BoundJson::Finite(a), BoundJson::Finite(b)) => a <= b,
        _ => true,
    }
}

impl DualSubsetJson {
    pub fn into_subset(self) -> Result<DualSubset, DualError> {
        let space = DualSpace::new(self.n)?;
        let d = space.character_dim();
        let mut intervals = Vec::with_capacity(self.part1.len());
        for iv in &self.part1 {
            if !ordered(&iv.lo, &iv.hi) {
                return Err(DualError::ReversedInterval(format!(
                    "{:?} > {:?}",
                    iv.lo, iv.hi
                )));
            }
            let lo = lower_endpoint(&iv.lo, iv.lo_closed).map_err(DualError::Json)?;
            let hi = upper_endpoint(&iv.hi, iv.hi_closed).map_err(DualError::Json)?;
            intervals.push(Interval::new(lo, hi));
        }
        let part2 = match self.part2 {
            Part2Json::Symbol(Part2Symbol::Empty) => CuboidUnion::empty(d),
            Part2Json::Symbol(Part2Symbol::All) => CuboidUnion::all(d),
            Part2Json::Boxes(list) => {
                let mut boxes = Vec::with_capacity(list.len());
                for (index, b) in list.into_iter().enumerate() {
                    let bad = |reason: String| DualError::BadBox { index, reason };
                    if b.min.len() != d || b.max.len() != d {
                        return Err(bad(format!("expected {d} coordinates per corner")));
                    }
                    let flags = |v: &Option<Vec<bool>>| -> Result<Vec<bool>, DualError> {
                        match v {
                            None => Ok(vec![b.closed; d]),
                            Some(f) if f.len() == d => Ok(f.clone()),
                            Some(_) => Err(bad(format!("expected {d} face flags"))),
                        }
                    };
                    let (lo_c, hi_c) = (flags(&b.lo_closed)?, flags(&b.hi_closed)?);
                    let mut axes = Vec::with_capacity(d);
                    for k in 0..d {
                        if !ordered(&b.min[k], &b.max[k]) {
                            return Err(bad(format!("min > max on axis {}", k + 1)));
                        }
                        axes.push(Interval::new(
                            lower_endpoint(&b.min[k], lo_c[k]).map_err(bad)?,
                            upper_endpoint(&b.max[k], hi_c[k]).map_err(bad)?,
                        ));
                    }
                    boxes.push(Cuboid::new(axes));
                }
                CuboidUnion::from_boxes(d, boxes)
            }
        };
        Ok(space.subset(PuncturedUnion::from_intervals(intervals), part2))
    }

    pub fn from_subset(s: &DualSubset) -> Self {
        let part1 = s
            .part1
            .intervals()
            .iter()
            .map(|i| IntervalJson {
                lo: bound_of(&i.lo, BoundJson::NegInf),
                hi: bound_of(&i.hi, BoundJson::PosInf),
                lo_closed: i.lo.is_closed(),
                hi_closed: i.hi.is_closed(),
            })
            .collect();
        let part2 = if s.part2.is_empty() {
            Part2Json::Symbol(Part2Symbol::Empty)
        } else if s.part2.is_all() {
            Part2Json::Symbol(Part2Symbol::All)
        } else {
            Part2Json::Boxes(s.part2.boxes().iter().map(box_json).collect())
        };
        Self {
            n: s.space.n,
            part1,
            part2,
        }
    }
}

fn box_json(b: &Cuboid) -> BoxJson {
    let axes = b.axes();
    let lo_closed: Vec<bool> = axes.iter().map(|i| i.lo.is_closed()).collect();
    let hi_closed: Vec<bool> = axes.iter().map(|i| i.hi.is_closed()).collect();
    let finite_flags: Vec<bool> = axes
        .iter()
        .flat_map(|i| [&i.lo, &i.hi])
        .filter(|e| e.value().is_some())
        .map(Endpoint::is_closed)
        .collect();
    let uniform = finite_flags.windows(2).all(|w| w[0] == w[1]);
    let closed = finite_flags.first().copied().unwrap_or(true);
    BoxJson {
        min: axes
            .iter()
            .map(|i| bound_of(&i.lo, BoundJson::NegInf))
            .collect(),
        max: axes
            .iter()
            .map(|i| bound_of(&i.hi, BoundJson::PosInf))
            .collect(),
        closed,
        lo_closed: (!uniform).then_some(lo_closed),
        hi_closed: (!uniform).then_some(hi_closed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn space() -> DualSpace {
        DualSpace::new(1).unwrap()
    }

    /// `[-1, 0) ∪ (0, 1]`.
    fn k1() -> PuncturedUnion {
        PuncturedUnion::from_intervals(vec![Interval::closed(int(-1), int(1))])
    }

    fn square(a: i64, b: i64) -> CuboidUnion {
        CuboidUnion::from_boxes(
            2,
            vec![Cuboid::closed(&[int(a), int(a)], &[int(b), int(b)])],
        )
    }

    #[test]
    fn closure_of_interval_touching_zero_pulls_in_all_characters() {
        let s = space().subset(
            PuncturedUnion::from_intervals(vec![Interval::open(int(0), int(1))]),
            CuboidUnion::empty(2),
        );
        let c = s.closure();
        assert_eq!(
            c.part1().intervals(),
            &[Interval::new(
                Endpoint::Open(int(0)),
                Endpoint::Closed(int(1))
            )]
        );
        assert!(c.part2().is_all());
        assert!(c.closure().set_eq(&c));
    }

    #[test]
    fn closed_sets_are_fixed_by_closure() {
        let s = space().subset(
            PuncturedUnion::from_intervals(vec![Interval::closed(int(1), int(2))]),
            CuboidUnion::empty(2),
        );
        assert!(s.closure().set_eq(&s));
        let open_box = CuboidUnion::from_boxes(
            2,
            vec![Cuboid::new(vec![Interval::open(int(0), int(1)); 2])],
        );
        let t = space().subset(PuncturedUnion::empty(), open_box);
        assert!(t.closure().part2().set_eq(&square(0, 1)));
    }

    #[test]
    fn quasi_compactness_examples() {
        let good = space().subset(k1(), square(-1, 1));
        assert_eq!(
            good.quasi_compactness(),
            QcDecision {
                quasi_compact: true,
                reasons: vec![]
            }
        );
        let bare = space().subset(k1(), CuboidUnion::empty(2));
        let d = bare.quasi_compactness();
        assert!(!d.quasi_compact);
        assert_eq!(
            d.reasons,
            vec![QcReason::EmptyCharacterPartWithZeroAccumulation]
        );
        assert_eq!(d.reasons[0].condition(), 3);
        let ray = space().subset(
            PuncturedUnion::from_intervals(vec![Interval::new(
                Endpoint::Closed(int(1)),
                Endpoint::Unbounded,
            )]),
            CuboidUnion::empty(2),
        );
        assert_eq!(
            ray.quasi_compactness().reasons,
            vec![QcReason::NoncharacterPartUnbounded]
        );
    }

    #[test]
    fn quasi_compact_sets_with_non_quasi_compact_intersection() {
        let c = space().subset(k1(), square(0, 1));
        let c2 = space().subset(k1(), square(2, 3));
        assert!(c.is_quasi_compact() && c2.is_quasi_compact());
        let both = c.intersect(&c2).unwrap();
        assert_eq!(both.part1(), &k1());
        assert!(both.part2().is_empty());
        assert!(!both.is_quasi_compact());
        assert!(c.union(&c2).unwrap().is_quasi_compact());
    }

    #[test]
    fn mixed_ambient_dimension_is_rejected() {
        let a = space().empty();
        let b = DualSpace::new(2).unwrap().empty();
        assert_eq!(
            a.union(&b),
            Err(DualError::AmbientMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn r_action_axioms_on_examples() {
        let s = space().subset(k1(), square(0, 1));
        assert!(s.r_act(&int(1)).set_eq(&s));
        assert!(s.r_act(&int(0)).set_eq(&space().base_point()));
        assert!(space().empty().r_act(&int(0)).is_empty());
        let (t, u) = (ratio(-3, 2), ratio(5, 7));
        assert!(s.r_act(&u).r_act(&t).set_eq(&s.r_act(&(&t * &u))));
    }

    #[test]
    fn solving_series_of_the_dual() {
        let x = space();
        assert!(x.gamma1().closure().set_eq(&x.whole()));
        assert!(x.gamma1().is_open());
        assert!(x.gamma2().is_closed());
        assert!(x.gamma1().boundary().set_eq(&x.gamma2()));
    }

    #[test]
    fn json_roundtrip_and_schema() {
        let text = r#"{"n":1,"part1":[{"lo":-1,"hi":0,"lo_closed":true,"hi_closed":false},
            {"lo":"0","hi":"1","lo_closed":false,"hi_closed":true}],
            "part2":[{"min":[0,0],"max":["1/2",1],"closed":true}]}"#;
        let s = DualSubset::from_json_str(text).unwrap();
        assert_eq!(s.part1(), &k1());
        let back = serde_json::to_string(&s.to_json()).unwrap();
        assert!(DualSubset::from_json_str(&back).unwrap().set_eq(&s));
        let all = r#"{"n":2,"part1":[{"lo":"-inf","hi":"inf"}],"part2":"ALL"}"#;
        let w = DualSubset::from_json_str(all).unwrap();
        assert!(w.set_eq(&DualSpace::new(2).unwrap().whole()));
        assert_eq!(serde_json::to_value(w.to_json()).unwrap()["part2"], "ALL");
    }

    #[test]
    fn json_errors() {
        let reversed = r#"{"n":1,"part1":[{"lo":2,"hi":1}],"part2":"EMPTY"}"#;
        assert!(matches!(
            DualSubset::from_json_str(reversed),
            Err(DualError::ReversedInterval(_))
        ));
        let short = r#"{"n":1,"part2":[{"min":[0],"max":[1],"closed":true}]}"#;
        assert!(matches!(
            DualSubset::from_json_str(short),
            Err(DualError::BadBox { index: 0, .. })
        ));
        let zero = r#"{"n":0,"part2":"EMPTY"}"#;
        assert_eq!(DualSubset::from_json_str(zero), Err(DualError::ZeroN));
    }

    #[test]
    fn mixed_face_boxes_serialize_per_axis() {
        let open = CuboidUnion::from_boxes(
            2,
            vec![Cuboid::new(vec![Interval::open(int(0), int(2)); 2])],
        );
        let s = space().subset(PuncturedUnion::empty(), open.intersect(&square(1, 3)));
        let json = s.to_json();
        let Part2Json::Boxes(b) = &json.part2 else {
            panic!("expected boxes")
        };
        assert_eq!(b[0].lo_closed, Some(vec![true, true]));
        assert_eq!(b[0].hi_closed, Some(vec![false, false]));
        assert!(json.into_subset().unwrap().set_eq(&s));
    }
}
