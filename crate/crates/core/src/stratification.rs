//! Jump-index sets and the coarse stratification of `g*`.
//!
//! For the flag `g_j = span{X_1, ..., X_j}` the jump set of `ξ` collects the
//! positions `j` where `g_j` is not contained in `g(ξ) + g_{j-1}`. Functionals
//! sharing a jump set form one stratum; strata are found by scanning integer
//! lattice points, so the result is only a lower bound on the true partition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{Functional, LieError, NilpotentAlgebra};
use crate::linalg::unit;
use crate::rational::int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StratError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("index {index} outside 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("index set elements must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),
    #[error("lattice height must be positive")]
    ZeroHeight,
    #[error(
        "generic stratum did not stabilise after {attempts} attempts (sampling range too small?)"
    )]
    GenericUnstable { attempts: usize },
}

/// A subset of `{1, ..., m}`, totally ordered by `≺`:
/// `e1 ≺ e2` iff `min(e1 \ e2) < min(e2 \ e1)`, with `min ∅ = ∞`.
/// In particular the empty set is the maximum. `Ord` implements `≺`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(elems: Vec<usize>) -> Result<Self, StratError> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StratError::NotIncreasing(elems));
        }
        if elems.first() == Some(&0) {
            return Err(StratError::IndexOutOfRange {
                index: 0,
                dim: elems.len(),
            });
        }
        Ok(Self(elems))
    }

    /// Like [`IndexSet::new`] but also bounds the elements by `m`.
    pub fn within(elems: Vec<usize>, m: usize) -> Result<Self, StratError> {
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e > m) {
            return Err(StratError::IndexOutOfRange { index: bad, dim: m });
        }
        Self::new(elems)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    // x is in a \ b and below everything left in b
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                },
            }
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `e1 ≺ e2`.
pub fn precedes(e1: &IndexSet, e2: &IndexSet) -> bool {
    e1 < e2
}

/// Jump indices of `ξ` with respect to the basis flag. The algebra must be
/// adapted (every prefix span an ideal).
pub fn jump_set(alg: &NilpotentAlgebra, xi: &Functional) -> Result<IndexSet, LieError> {
    let m = alg.dim();
    let mut acc = alg.stabilizer(xi)?;
    let mut jumps = Vec::new();
    for j in 0..m {
        let x = unit(m, j);
        if !acc.contains(&x) {
            jumps.push(j + 1);
            acc = acc.with_vector(x);
        }
    }
    Ok(IndexSet(jumps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub e: IndexSet,
    pub witnesses: Vec<Functional>,
}

/// Distinct jump sets found by a lattice search, sorted by `≺`.
///
/// `exhaustive` records whether every lattice point of the given height was
/// visited; it never certifies that no stratum is missing from `g*` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationReport {
    pub strata: Vec<Stratum>,
    pub height: u32,
    pub seed: u64,
    pub exhaustive: bool,
}

impl StratificationReport {
    pub fn index_sets(&self) -> Vec<IndexSet> {
        self.strata.iter().map(|s| s.e.clone()).collect()
    }

    pub fn get(&self, e: &IndexSet) -> Option<&Stratum> {
        self.strata.iter().find(|s| &s.e == e)
    }
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const WITNESS_CAP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratifyOptions {
    pub height: u32,
    pub seed: u64,
    /// Upper bound on `m · #points` work units.
    pub budget: u64,
    pub witness_cap: usize,
}

impl StratifyOptions {
    pub fn new(height: u32, seed: u64) -> Self {
        Self {
            height,
            seed,
            budget: DEFAULT_BUDGET,
            witness_cap: WITNESS_CAP,
        }
    }
}

/// The points a search visits, in canonical order.
enum LatticePoints {
    Full { m: usize, height: i64, total: u64 },
    Sampled(Vec<Functional>),
}

impl LatticePoints {
    fn plan(m: usize, opts: &StratifyOptions) -> Self {
        let side = 2 * opts.height as u64 + 1;
        let total = (0..m).try_fold(1u64, |acc, _| acc.checked_mul(side));
        match total.and_then(|t| t.checked_mul(m as u64).map(|w| (t, w))) {
            Some((total, work)) if work <= opts.budget => LatticePoints::Full {
                m,
                height: opts.height as i64,
                total,
            },
            _ => LatticePoints::Sampled(sampled_points(m, opts)),
        }
    }

    fn len(&self) -> u64 {
        match self {
            LatticePoints::Full { total, .. } => *total,
            LatticePoints::Sampled(v) => v.len() as u64,
        }
    }

    fn point(&self, idx: u64) -> Functional {
        match self {
            LatticePoints::Full { m, height, .. } => {
                let side = (2 * height + 1) as u64;
                let mut coords = vec![0i64; *m];
                let mut rest = idx;
                for c in coords.iter_mut().rev() {
                    *c = (rest % side) as i64 - height;
                    rest /= side;
                }
                Functional::from_ints(&coords)
            }
            LatticePoints::Sampled(v) => v[idx as usize].clone(),
        }
    }
}

/// Origin, every nonzero point on the coordinate axes, then seeded uniform
/// lattice points until the budget is used.
fn sampled_points(m: usize, opts: &StratifyOptions) -> Vec<Functional> {
    let h = opts.height as i64;
    let mut pts = vec![Functional::zero(m)];
    for i in 0..m {
        for c in (-h..=h).filter(|&c| c != 0) {
            let mut v = vec![0i64; m];
            v[i] = c;
            pts.push(Functional::from_ints(&v));
        }
    }
    let target = (opts.budget / m.max(1) as u64).max(pts.len() as u64 + 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while pts.len() < target {
        let v: Vec<i64> = (0..m).map(|_| rng.random_range(-h..=h)).collect();
        pts.push(Functional::from_ints(&v));
    }
    pts
}

/// Visits every search point in canonical order, handing each functional and
/// its jump set to `visit`.
pub fn stratify_with<F>(
    alg: &NilpotentAlgebra,
    opts: &StratifyOptions,
    mut visit: F,
) -> Result<bool, StratError>
where
    F: FnMut(&Functional, &IndexSet),
{
    if opts.height == 0 {
        return Err(StratError::ZeroHeight);
    }
    alg.ensure_valid()?;
    let points = LatticePoints::plan(alg.dim(), opts);
    for idx in 0..points.len() {
        let xi = points.point(idx);
        let e = jump_set(alg, &xi)?;
        visit(&xi, &e);
    }
    Ok(matches!(points, LatticePoints::Full { .. }))
}

type Partial = BTreeMap<IndexSet, Vec<Functional>>;

pub fn stratify(
    alg: &NilpotentAlgebra,
    height: u32,
    seed: u64,
) -> Result<StratificationReport, StratError> {
    stratify_opts(alg, &StratifyOptions::new(height, seed))
}

/// Parallel lattice search. Chunks are merged in index order, so the
/// witnesses are the first `witness_cap` points of each stratum in canonical
/// order regardless of scheduling.
pub fn stratify_opts(
    alg: &NilpotentAlgebra,
    opts: &StratifyOptions,
) -> Result<StratificationReport, StratError> {
    if opts.height == 0 {
        return Err(StratError::ZeroHeight);
    }
    alg.ensure_valid()?;
    let points = LatticePoints::plan(alg.dim(), opts);
    let n = points.len();
    const CHUNK: u64 = 256;
    let chunks = n.div_ceil(CHUNK);
    let partials: Vec<Partial> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = Partial::new();
            for idx in c * CHUNK..((c + 1) * CHUNK).min(n) {
                let xi = points.point(idx);
                let e = jump_set(alg, &xi).expect("dimension checked");
                let w = part.entry(e).or_default();
                if w.len() < opts.witness_cap {
                    w.push(xi);
                }
            }
            part
        })
        .collect();
    let mut merged = Partial::new();
    for part in partials {
        for (e, ws) in part {
            let w = merged.entry(e).or_default();
            let room = opts.witness_cap.saturating_sub(w.len());
            w.extend(ws.into_iter().take(room));
        }
    }
    Ok(StratificationReport {
        strata: merged
            .into_iter()
            .map(|(e, witnesses)| Stratum { e, witnesses })
            .collect(),
        height: opts.height,
        seed: opts.seed,
        exhaustive: matches!(points, LatticePoints::Full { .. }),
    })
}

/// Number of nonempty strata the search found; a lower bound for the coarse
/// length, exact once every stratum has a lattice witness.
pub fn coarse_length_lower_bound(report: &StratificationReport) -> usize {
    report.strata.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericOptions {
    /// Coordinates are drawn from `-range..=range`.
    pub range: i64,
    pub batch: usize,
    pub retries: usize,
}

impl Default for GenericOptions {
    fn default() -> Self {
        Self {
            range: 1000,
            batch: 16,
            retries: 8,
        }
    }
}

pub fn random_functional<R: Rng>(rng: &mut R, m: usize, range: i64) -> Functional {
    Functional::new(
        (0..m)
            .map(|_| int(rng.random_range(-range..=range)))
            .collect(),
    )
}

fn best_of_batch(
    alg: &NilpotentAlgebra,
    rng: &mut ChaCha8Rng,
    opts: &GenericOptions,
) -> Result<(usize, Functional), LieError> {
    let mut best: Option<(usize, Functional)> = None;
    for _ in 0..opts.batch.max(1) {
        let xi = random_functional(rng, alg.dim(), opts.range);
        let r = alg.b_matrix(&xi)?.rank();
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, xi));
        }
    }
    Ok(best.expect("batch is nonempty"))
}

/// Jump set of a maximal-rank random functional, accepted once two
/// independent draws agree.
pub fn generic_stratum(alg: &NilpotentAlgebra, seed: u64) -> Result<IndexSet, StratError> {
    generic_stratum_opts(alg, seed, &GenericOptions::default())
}

pub fn generic_stratum_opts(
    alg: &NilpotentAlgebra,
    seed: u64,
    opts: &GenericOptions,
) -> Result<IndexSet, StratError> {
    alg.ensure_valid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..opts.retries {
        let (ra, xa) = best_of_batch(alg, &mut rng, opts)?;
        let (rb, xb) = best_of_batch(alg, &mut rng, opts)?;
        if ra != rb {
            continue;
        }
        let ea = jump_set(alg, &xa)?;
        if ea == jump_set(alg, &xb)? {
            return Ok(ea);
        }
    }
    Err(StratError::GenericUnstable {
        attempts: opts.retries,
    })
}
