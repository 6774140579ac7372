//! Named example algebras with their known invariants attached.
//!
//! Entries are addressed as `name` or `name:params`, e.g. `heisenberg:2`,
//! `filiform:5`, `ut:4`, `g_st:3/7,5/7`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::{compute_bundle, BundleOptions, InvariantBundle, InvariantError};
use crate::lie::{AlgebraJson, NilpotentAlgebra};
use crate::rational::{format_rational, int, parse_rational_list, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}` (known: {known})", known = NAMES.join(", "))]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
    #[error("parameter out of range for `{name}`: {reason}")]
    OutOfRange { name: String, reason: String },
}

pub const NAMES: [&str; 6] = ["abelian", "heisenberg", "filiform", "ut", "g0_st", "g_st"];

/// Where an expected value comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail", rename_all = "lowercase")]
pub enum Source {
    /// A closed form stated in the literature for this family.
    Published(String),
    /// Pinned from an independent computation.
    Derived(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: usize,
    pub source: Source,
}

fn published(value: usize, what: &str) -> Option<Expectation> {
    Some(Expectation {
        value,
        source: Source::Published(what.to_string()),
    })
}

fn derived(value: usize, how: &str) -> Option<Expectation> {
    Some(Expectation {
        value,
        source: Source::Derived(how.to_string()),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_g: Option<Expectation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<Expectation>,
    /// Number of coarse strata found at lattice height 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clgth: Option<Expectation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_rank: Option<Expectation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_rank: Option<Expectation>,
}

impl Expected {
    fn fields(&self) -> [(&'static str, &Option<Expectation>); 5] {
        [
            ("dim_g", &self.dim_g),
            ("index", &self.index),
            ("clgth", &self.clgth),
            ("real_rank", &self.real_rank),
            ("stable_rank", &self.stable_rank),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub field: String,
    pub expected: usize,
    pub computed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<Rational>,
    pub algebra: NilpotentAlgebra,
    pub expected: Expected,
    pub notes: Vec<String>,
}

/// JSON form of an entry: the algebra document plus an expectations sidecar.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub params: Vec<String>,
    pub algebra: AlgebraJson,
    pub expected: Expected,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    /// `name:params` as accepted by [`get`].
    pub fn id(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let p: Vec<String> = self.params.iter().map(format_rational).collect();
        format!("{}:{}", self.name, p.join(","))
    }

    pub fn to_json(&self) -> CatalogEntryJson {
        CatalogEntryJson {
            name: self.name.clone(),
            params: self.params.iter().map(format_rational).collect(),
            algebra: self.algebra.to_json(),
            expected: self.expected.clone(),
            notes: self.notes.clone(),
        }
    }

    /// Compares a computed bundle (stratified at height 1) with every
    /// expected field.
    pub fn mismatches(&self, bundle: &InvariantBundle) -> Vec<Mismatch> {
        let computed = |field: &str| match field {
            "dim_g" => bundle.dim_g,
            "index" => bundle.index,
            "clgth" => bundle.clgth_lower,
            "real_rank" => bundle.real_rank,
            "stable_rank" => bundle.stable_rank,
            _ => unreachable!(),
        };
        self.expected
            .fields()
            .into_iter()
            .filter_map(|(field, e)| {
                let e = e.as_ref()?;
                let got = computed(field);
                (got != e.value).then(|| Mismatch {
                    field: field.to_string(),
                    expected: e.value,
                    computed: got,
                })
            })
            .collect()
    }

    pub fn check(&self, seed: u64) -> Result<Vec<Mismatch>, InvariantError> {
        let bundle = compute_bundle(&self.algebra, &BundleOptions::new(1, seed))?;
        Ok(self.mismatches(&bundle))
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.id(), self.algebra.dim())
    }
}

/// `[X_i, X_j] = Σ coeff X_k`, 1-based.
type Bracket = (usize, usize, Vec<(usize, Rational)>);

fn build(dim: usize, brackets: Vec<Bracket>) -> NilpotentAlgebra {
    let alg = NilpotentAlgebra::from_brackets(dim, brackets).expect("catalog indices are in range");
    debug_assert!(alg.validate().is_ok(), "catalog algebra fails validation");
    alg
}

fn positive(name: &str, value: usize, min: usize) -> Result<(), CatalogError> {
    if value < min {
        return Err(CatalogError::OutOfRange {
            name: name.to_string(),
            reason: format!("need a parameter >= {min}, got {value}"),
        });
    }
    Ok(())
}

fn stable_rank_of(a: usize) -> usize {
    1 + (a / 2).max(1)
}

pub fn abelian(n: usize) -> Result<CatalogEntry, CatalogError> {
    positive("abelian", n, 1)?;
    Ok(CatalogEntry {
        name: "abelian".into(),
        params: vec![int(n as i64)],
        algebra: NilpotentAlgebra::abelian(n).expect("n >= 1"),
        expected: Expected {
            dim_g: derived(n, "by construction"),
            index: derived(n, "B_xi vanishes identically"),
            clgth: derived(1, "every functional is a character"),
            real_rank: derived(n, "[g,g] = 0"),
            stable_rank: derived(
                if n == 1 { 1 } else { stable_rank_of(n) },
                "closed formula in n",
            ),
        },
        notes: vec![],
    })
}

/// `[X_{n+1+i}, X_{1+i}] = X_1` for `i = 1..n`.
pub fn heisenberg(n: usize) -> Result<CatalogEntry, CatalogError> {
    positive("heisenberg", n, 1)?;
    let brackets = (0..n)
        .map(|i| (n + 2 + i, 2 + i, vec![(1, int(1))]))
        .collect();
    Ok(CatalogEntry {
        name: "heisenberg".into(),
        params: vec![int(n as i64)],
        algebra: build(2 * n + 1, brackets),
        expected: Expected {
            dim_g: derived(2 * n + 1, "by construction"),
            index: published(
                1,
                "Heisenberg groups have index 1 (generic orbits are the hyperplanes z = const)",
            ),
            clgth: derived(2, "exhaustive lattice stratification at height 1"),
            real_rank: derived(2 * n, "dim g - dim [g,g] with [g,g] = span{X1}"),
            stable_rank: derived(stable_rank_of(2 * n), "1 + max(floor(a/2), 1)"),
        },
        notes: vec![],
    })
}

/// `[X_m, X_j] = X_{j-1}` for `j = 2..m-1`.
pub fn filiform(m: usize) -> Result<CatalogEntry, CatalogError> {
    positive("filiform", m, 3)?;
    let brackets = (2..m).map(|j| (m, j, vec![(j - 1, int(1))])).collect();
    Ok(CatalogEntry {
        name: "filiform".into(),
        params: vec![int(m as i64)],
        algebra: build(m, brackets),
        expected: Expected {
            dim_g: derived(m, "by construction"),
            index: published(m - 2, "every non-character orbit is two-dimensional"),
            clgth: published(
                m - 1,
                "coarse length of the standard filiform group is m - 1",
            ),
            real_rank: published(2, "[g,g] = span{X1, ..., X_{m-2}}"),
            stable_rank: derived(2, "1 + max(floor(2/2), 1)"),
        },
        notes: vec!["jump sets are {j, m} for j = 2..m-1 together with the empty set".into()],
    })
}

/// Position (1-based) of `E_{ij}`, `i < j`, in the `ut(k)` basis: diagonals
/// `j - i` in decreasing order, rows decreasing within a diagonal.
fn ut_position(k: usize, i: usize, j: usize) -> usize {
    let d = j - i;
    let before: usize = (d + 1..k).map(|e| k - e).sum();
    before + (k - d - i) + 1
}

/// Strictly upper triangular `k × k` matrices.
pub fn ut(k: usize) -> Result<CatalogEntry, CatalogError> {
    positive("ut", k, 3)?;
    let dim = k * (k - 1) / 2;
    let mut brackets = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            for l in j + 1..=k {
                // [E_ij, E_jl] = E_il
                brackets.push((
                    ut_position(k, i, j),
                    ut_position(k, j, l),
                    vec![(ut_position(k, i, l), int(1))],
                ));
            }
        }
    }
    let q = k / 2;
    let published_q = (k - 1) / 2;
    let (index, mut notes) = if k % 2 == 1 {
        (
            published(
                q,
                "index of the upper triangular group N_k is the largest integer below k/2",
            ),
            vec![],
        )
    } else {
        (
            derived(q, "exact rank of B_xi at random functionals"),
            vec![format!(
                "the published value (largest integer below k/2) is {published_q}; the computed index is {q}"
            )],
        )
    };
    notes.push("basis: E_ij ordered by decreasing j - i, then decreasing i".into());
    Ok(CatalogEntry {
        name: "ut".into(),
        params: vec![int(k as i64)],
        algebra: build(dim, brackets),
        expected: Expected {
            dim_g: derived(dim, "k(k-1)/2 matrix units"),
            index,
            clgth: None,
            real_rank: derived(k - 1, "superdiagonal units span g/[g,g]"),
            stable_rank: derived(stable_rank_of(k - 1), "1 + max(floor(a/2), 1)"),
        },
        notes,
    })
}

fn family_params(name: &str, s: &Rational, t: &Rational) -> Result<Vec<String>, CatalogError> {
    if s.is_zero() || t.is_zero() {
        return Err(CatalogError::OutOfRange {
            name: name.to_string(),
            reason: "s and t must be nonzero".into(),
        });
    }
    let mut notes = Vec::new();
    if (s * s + s * t + t * t) != Rational::one() {
        notes.push("s^2 + st + t^2 != 1; the normalization is not enforced".into());
    }
    if (s + t).is_zero() {
        notes.push("s + t = 0 removes X2 from [g,g]".into());
    }
    Ok(notes)
}

fn g0_brackets(s: &Rational, t: &Rational, shift: usize) -> Vec<Bracket> {
    let x = |i: usize| i + shift;
    vec![
        (x(6), x(5), vec![(x(3), s.clone())]),
        (x(6), x(4), vec![(x(2), s + t)]),
        (x(5), x(4), vec![(x(1), t.clone())]),
    ]
}

/// The six-dimensional family `[X6,X5] = s X3`, `[X6,X4] = (s+t) X2`,
/// `[X5,X4] = t X1`.
pub fn g0_st(s: Rational, t: Rational) -> Result<CatalogEntry, CatalogError> {
    let notes = family_params("g0_st", &s, &t)?;
    let a = if (&s + &t).is_zero() { 4 } else { 3 };
    Ok(CatalogEntry {
        name: "g0_st".into(),
        algebra: build(6, g0_brackets(&s, &t, 0)),
        params: vec![s, t],
        expected: Expected {
            dim_g: derived(6, "by construction"),
            index: derived(4, "brackets only among X4, X5, X6, so rank B_xi <= 2"),
            clgth: None,
            real_rank: derived(a, "dim g - dim [g,g]"),
            stable_rank: derived(stable_rank_of(a), "1 + max(floor(a/2), 1)"),
        },
        notes,
    })
}

/// Central extension of `g0_st` by the cocycle pairing `X1-X6`, `X2-X5`,
/// `X3-X4`. Basis `Z, X1, ..., X6` with `Z` first.
pub fn g_st(s: Rational, t: Rational) -> Result<CatalogEntry, CatalogError> {
    let mut notes = family_params("g_st", &s, &t)?;
    notes.push("basis Z, X1, ..., X6; [X1,X6] = [X2,X5] = [X3,X4] = Z".into());
    let mut brackets = g0_brackets(&s, &t, 1);
    for (i, j) in [(1, 6), (2, 5), (3, 4)] {
        brackets.push((i + 1, j + 1, vec![(1, int(1))]));
    }
    let a = if (&s + &t).is_zero() { 4 } else { 3 };
    Ok(CatalogEntry {
        name: "g_st".into(),
        algebra: build(7, brackets),
        params: vec![s, t],
        expected: Expected {
            dim_g: published(
                7,
                "three-step nilpotent algebras of dimension 7 with one-dimensional center",
            ),
            index: published(1, "index 1 for every member of the family"),
            clgth: None,
            real_rank: derived(a, "[g,g] = span{X1, X2, X3, Z} from derived_subalgebra"),
            stable_rank: derived(stable_rank_of(a), "1 + max(floor(a/2), 1)"),
        },
        notes,
    })
}

fn count(name: &str, params: &[Rational]) -> Result<usize, CatalogError> {
    let bad = |reason: &str| CatalogError::BadParams {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    match params {
        [p] if p.is_integer() => {
            let v = p.to_integer();
            usize::try_from(&v).map_err(|_| CatalogError::OutOfRange {
                name: name.to_string(),
                reason: format!("{v} is not a valid size"),
            })
        }
        [_] => Err(bad("expected an integer")),
        _ => Err(bad("expected exactly one integer parameter")),
    }
}

fn pair(name: &str, params: Vec<Rational>) -> Result<(Rational, Rational), CatalogError> {
    let n = params.len();
    let mut it = params.into_iter();
    match (it.next(), it.next()) {
        (Some(s), Some(t)) if n == 2 => Ok((s, t)),
        _ => Err(CatalogError::BadParams {
            name: name.to_string(),
            reason: "expected two rationals s,t".into(),
        }),
    }
}

/// Looks up `name` or `name:params`. Parameters default to the first
/// entry of [`list`] for that family.
pub fn get(id: &str) -> Result<CatalogEntry, CatalogError> {
    let (name, raw) = match id.split_once(':') {
        Some((n, p)) => (n.trim(), Some(p)),
        None => (id.trim(), None),
    };
    if !NAMES.contains(&name) {
        return Err(CatalogError::UnknownName(name.to_string()));
    }
    let params = match raw {
        Some(p) => parse_rational_list(p).map_err(|e| CatalogError::BadParams {
            name: name.to_string(),
            reason: e.to_string(),
        })?,
        None => default_params(name),
    };
    match name {
        "abelian" => abelian(count(name, &params)?),
        "heisenberg" => heisenberg(count(name, &params)?),
        "filiform" => filiform(count(name, &params)?),
        "ut" => ut(count(name, &params)?),
        "g0_st" => {
            let (s, t) = pair(name, params)?;
            g0_st(s, t)
        }
        "g_st" => {
            let (s, t) = pair(name, params)?;
            g_st(s, t)
        }
        _ => unreachable!(),
    }
}

fn default_params(name: &str) -> Vec<Rational> {
    match name {
        "abelian" | "heisenberg" => vec![int(1)],
        "filiform" => vec![int(4)],
        "ut" => vec![int(3)],
        _ => vec![crate::rational::ratio(3, 7), crate::rational::ratio(5, 7)],
    }
}

/// A representative set of entries covering every family.
pub fn list() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    out.extend((1..=3).map(|n| abelian(n).unwrap()));
    out.extend((1..=3).map(|n| heisenberg(n).unwrap()));
    out.extend((4..=8).map(|m| filiform(m).unwrap()));
    out.extend((3..=5).map(|k| ut(k).unwrap()));
    for name in ["g0_st", "g_st"] {
        out.push(get(&format!("{name}:3/7,5/7")).unwrap());
        out.push(get(&format!("{name}:1,2")).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn ut_positions_enumerate_the_basis() {
        for k in 3..=6 {
            let mut seen: Vec<usize> = Vec::new();
            for i in 1..=k {
                for j in i + 1..=k {
                    seen.push(ut_position(k, i, j));
                }
            }
            seen.sort();
            assert_eq!(seen, (1..=k * (k - 1) / 2).collect::<Vec<_>>());
        }
        assert_eq!(ut_position(3, 1, 3), 1);
        assert_eq!(ut_position(3, 2, 3), 2);
        assert_eq!(ut_position(3, 1, 2), 3);
    }

    #[test]
    fn ut3_is_heisenberg1() {
        assert_eq!(ut(3).unwrap().algebra, heisenberg(1).unwrap().algebra);
    }

    #[test]
    fn every_listed_algebra_validates() {
        for e in list() {
            assert!(
                e.algebra.validate().is_ok(),
                "{e}: {}",
                e.algebra.validate()
            );
            assert_eq!(get(&e.id()).unwrap(), e);
        }
    }

    #[test]
    fn g_st_center_is_one_dimensional() {
        let g = g_st(ratio(3, 7), ratio(5, 7)).unwrap();
        assert_eq!(g.algebra.dim(), 7);
        assert_eq!(g.algebra.center().dim(), 1);
        assert_eq!(g.algebra.lower_central_series().len(), 4);
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(get("nope:1"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(
            get("filiform:2"),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            get("heisenberg:1/2"),
            Err(CatalogError::BadParams { .. })
        ));
        assert!(matches!(
            get("heisenberg:x"),
            Err(CatalogError::BadParams { .. })
        ));
        assert!(matches!(
            get("g_st:0,1"),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(get("g_st:1"), Err(CatalogError::BadParams { .. })));
        assert_eq!(get("heisenberg").unwrap().id(), "heisenberg:1");
    }

    #[test]
    fn small_entries_match_expectations() {
        for id in [
            "abelian:2",
            "heisenberg:1",
            "filiform:4",
            "ut:3",
            "g0_st:1,2",
        ] {
            let e = get(id).unwrap();
            assert_eq!(e.check(11).unwrap(), vec![], "{id}");
        }
    }
}
