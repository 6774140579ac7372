//! Closed-form invariants of the group C*-algebra: real rank, stable rank,
//! the index with four independent evaluations, and nuclear-dimension bounds.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{Functional, LieError, NilpotentAlgebra};
use crate::linalg::{unit, Subspace};
use crate::rational::{ratio, Rational};
use crate::stratification::{
    coarse_length_lower_bound, generic_stratum, jump_set, random_functional, stratify_opts,
    IndexSet, StratError, StratificationReport, StratifyOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Strat(#[from] StratError),
    #[error(
        "index formulas disagree (generic stratum {from_generic_stratum}, orbit dimension \
         {from_orbit_dimension}, stabilizer {from_stabilizer}, B rank {from_b_rank}); \
         retry with more samples"
    )]
    IndexDisagreement {
        from_generic_stratum: usize,
        from_orbit_dimension: usize,
        from_stabilizer: usize,
        from_b_rank: usize,
    },
    #[error("unknown stratum dimension for {0}")]
    UnknownStratumDimension(IndexSet),
}

/// `dim g/[g,g]`.
pub fn real_rank(alg: &NilpotentAlgebra) -> usize {
    alg.dim() - alg.derived_subalgebra().dim()
}

/// 1 for the real line, otherwise `1 + max(⌊r/2⌋, 1)` with `r` the real rank.
pub fn stable_rank(alg: &NilpotentAlgebra) -> usize {
    if alg.dim() == 1 {
        return 1;
    }
    1 + (real_rank(alg) / 2).max(1)
}

/// The index computed four ways; `value` is their common result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub value: usize,
    /// `dim g - |e_1|`.
    pub from_generic_stratum: usize,
    /// `dim g - max dim O_ξ`, orbit dimension from the infinitesimal coadjoint action.
    pub from_orbit_dimension: usize,
    /// `min dim g(ξ)`.
    pub from_stabilizer: usize,
    /// `dim g - max rank B_ξ`.
    pub from_b_rank: usize,
    pub samples: usize,
}

pub const INDEX_SAMPLES: usize = 64;
const INDEX_RANGE: i64 = 1000;
// keeps the index sample stream apart from the generic-stratum stream
const INDEX_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

pub fn index(alg: &NilpotentAlgebra, seed: u64) -> Result<IndexReport, InvariantError> {
    index_with_samples(alg, seed, INDEX_SAMPLES)
}

pub fn index_with_samples(
    alg: &NilpotentAlgebra,
    seed: u64,
    samples: usize,
) -> Result<IndexReport, InvariantError> {
    alg.ensure_valid()?;
    let m = alg.dim();
    let generic = generic_stratum(alg, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ INDEX_STREAM);
    let (mut max_orbit, mut min_stab, mut max_rank) = (0, m, 0);
    for _ in 0..samples.max(1) {
        let xi = random_functional(&mut rng, m, INDEX_RANGE);
        max_orbit = max_orbit.max(alg.orbit_tangent_space(&xi)?.dim());
        min_stab = min_stab.min(alg.stabilizer(&xi)?.dim());
        max_rank = max_rank.max(alg.b_matrix(&xi)?.rank());
    }
    let report = IndexReport {
        value: m - generic.len(),
        from_generic_stratum: m - generic.len(),
        from_orbit_dimension: m - max_orbit,
        from_stabilizer: min_stab,
        from_b_rank: m - max_rank,
        samples,
    };
    let all = [
        report.from_generic_stratum,
        report.from_orbit_dimension,
        report.from_stabilizer,
        report.from_b_rank,
    ];
    if all.iter().any(|&v| v != all[0]) {
        return Err(InvariantError::IndexDisagreement {
            from_generic_stratum: all[0],
            from_orbit_dimension: all[1],
            from_stabilizer: all[2],
            from_b_rank: all[3],
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NuclearMode {
    #[default]
    Coarse,
    Fine,
}

impl fmt::Display for NuclearMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuclearMode::Coarse => "coarse",
            NuclearMode::Fine => "fine",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuclearBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Coarse bounds `(2, dim g + clgth - 1)` for non-abelian algebras; the
/// abelian case has continuous trace and spectrum `R^n`, giving `(n, n)`.
pub fn nuclear_bounds_coarse(
    alg: &NilpotentAlgebra,
    report: &StratificationReport,
) -> NuclearBounds {
    let m = alg.dim();
    if alg.is_abelian() {
        return NuclearBounds { lower: m, upper: m };
    }
    NuclearBounds {
        lower: 2,
        upper: m + coarse_length_lower_bound(report) - 1,
    }
}

/// Stratum dimensions that are known exactly: the generic stratum has
/// dimension `index`, the character stratum `dim g/[g,g]`.
pub fn builtin_stratum_dims(
    alg: &NilpotentAlgebra,
    report: &StratificationReport,
    index: usize,
) -> BTreeMap<IndexSet, usize> {
    let m = alg.dim();
    let mut dims = BTreeMap::new();
    if let Some(first) = report.strata.first() {
        if first.e.len() + index == m {
            dims.insert(first.e.clone(), index);
        }
    }
    if report.get(&IndexSet::empty()).is_some() {
        dims.insert(IndexSet::empty(), real_rank(alg));
    }
    dims
}

/// `(max dim Ξ_e, Σ dim Ξ_e + #strata - 1)` over the discovered strata.
/// `dims` entries override the built-in ones.
pub fn nuclear_bounds_fine(
    alg: &NilpotentAlgebra,
    report: &StratificationReport,
    dims: &BTreeMap<IndexSet, usize>,
    index: usize,
) -> Result<NuclearBounds, InvariantError> {
    let builtin = builtin_stratum_dims(alg, report, index);
    let mut values = Vec::with_capacity(report.strata.len());
    for s in &report.strata {
        let d = dims
            .get(&s.e)
            .or_else(|| builtin.get(&s.e))
            .ok_or_else(|| InvariantError::UnknownStratumDimension(s.e.clone()))?;
        values.push(*d);
    }
    let lower = values.iter().copied().max().unwrap_or(0);
    let upper = (values.iter().sum::<usize>() + values.len()).saturating_sub(1);
    Ok(NuclearBounds { lower, upper })
}

/// Heuristic local dimension of `Ξ_e` at a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDimEstimate {
    pub e: IndexSet,
    pub estimate: usize,
    /// Always `"ESTIMATE"`: this number is not a theorem.
    pub label: String,
}

/// Perturbs `witness` along orbit-tangent, axis and seeded random rational
/// directions, keeping the directions whose small perturbations keep the
/// jump set. Local `dim Ω_e` is guessed as the span of kept directions and
/// `dim Ξ_e = dim Ω_e - |e|`.
pub fn estimate_stratum_dimension(
    alg: &NilpotentAlgebra,
    witness: &Functional,
    seed: u64,
) -> Result<StratumDimEstimate, InvariantError> {
    let m = alg.dim();
    let e = jump_set(alg, witness)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<Rational>> = alg.orbit_tangent_space(witness)?.basis().to_vec();
    candidates.extend((0..m).map(|i| unit(m, i)));
    candidates.extend((0..m).map(|_| random_functional(&mut rng, m, 9).into_coords()));
    let steps = [ratio(1, 1_000), ratio(-1, 997), ratio(1, 1_000_003)];
    let mut kept = Subspace::zero(m);
    for d in candidates {
        if kept.contains(&d) {
            continue;
        }
        let keeps = steps
            .iter()
            .try_fold(true, |ok, eps| -> Result<bool, LieError> {
                let moved: Vec<Rational> = witness
                    .coords()
                    .iter()
                    .zip(&d)
                    .map(|(w, v)| w + eps * v)
                    .collect();
                Ok(ok && jump_set(alg, &Functional::new(moved))? == e)
            })?;
        if keeps {
            kept = kept.with_vector(d);
        }
    }
    Ok(StratumDimEstimate {
        estimate: kept.dim().saturating_sub(e.len()),
        e,
        label: "ESTIMATE".to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleOptions {
    pub height: u32,
    pub seed: u64,
    pub mode: NuclearMode,
    pub stratum_dims: BTreeMap<IndexSet, usize>,
    /// Fill missing fine-mode stratum dimensions with the heuristic probe.
    pub estimate_missing: bool,
}

impl BundleOptions {
    pub fn new(height: u32, seed: u64) -> Self {
        Self {
            height,
            seed,
            mode: NuclearMode::Coarse,
            stratum_dims: BTreeMap::new(),
            estimate_missing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub dim_g: usize,
    /// `dim g/[g,g]`.
    pub a: usize,
    pub real_rank: usize,
    pub stable_rank: usize,
    pub index: usize,
    pub clgth_lower: usize,
    pub nuclear_lower: usize,
    pub nuclear_upper: usize,
    pub mode: NuclearMode,
    /// Whether the stratification visited its whole lattice box. When false
    /// the coarse upper bound is itself only a lower estimate.
    pub exhaustive: bool,
    pub estimate_used: bool,
    pub index_check: IndexReport,
    pub strata: Vec<IndexSet>,
    pub height: u32,
    pub seed: u64,
}

pub fn compute_bundle(
    alg: &NilpotentAlgebra,
    opts: &BundleOptions,
) -> Result<InvariantBundle, InvariantError> {
    alg.ensure_valid()?;
    let report = stratify_opts(alg, &StratifyOptions::new(opts.height, opts.seed))?;
    let index_check = index(alg, opts.seed)?;
    let mut estimate_used = false;
    let bounds = match opts.mode {
        NuclearMode::Coarse => nuclear_bounds_coarse(alg, &report),
        NuclearMode::Fine => {
            let mut dims = opts.stratum_dims.clone();
            if opts.estimate_missing {
                let builtin = builtin_stratum_dims(alg, &report, index_check.value);
                for s in &report.strata {
                    if dims.contains_key(&s.e) || builtin.contains_key(&s.e) {
                        continue;
                    }
                    let est = estimate_stratum_dimension(alg, &s.witnesses[0], opts.seed)?;
                    dims.insert(s.e.clone(), est.estimate);
                    estimate_used = true;
                }
            }
            nuclear_bounds_fine(alg, &report, &dims, index_check.value)?
        }
    };
    let a = real_rank(alg);
    Ok(InvariantBundle {
        dim_g: alg.dim(),
        a,
        real_rank: a,
        stable_rank: stable_rank(alg),
        index: index_check.value,
        clgth_lower: coarse_length_lower_bound(&report),
        nuclear_lower: bounds.lower,
        nuclear_upper: bounds.upper,
        mode: opts.mode,
        exhaustive: report.exhaustive,
        estimate_used,
        index_check,
        strata: report.index_sets(),
        height: opts.height,
        seed: opts.seed,
    })
}
