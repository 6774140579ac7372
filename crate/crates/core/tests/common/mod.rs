//! Independent reference computations and random generators shared by the
//! integration tests. Nothing here calls into the library's linear algebra.

#![allow(dead_code)]

use coadjoint::heisenberg_dual::{Cuboid, CuboidUnion, Endpoint, Interval, PuncturedUnion};
use coadjoint::rational::{int, ratio};
use coadjoint::{DualSpace, DualSubset, Functional, NilpotentAlgebra, Rational};
use num_traits::Zero;
use rand::Rng;

/// Row rank by plain Gaussian elimination over the rationals.
pub fn oracle_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in c..cols {
                    let delta = &f * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel basis of the square matrix `a` (as column vectors).
pub fn oracle_kernel(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][c].clone();
        for k in 0..n {
            m[row][k] = &m[row][k] / &pivot;
        }
        for r in 0..n {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..n {
                    let delta = &f * &m[row][k];
                    m[r][k] -= delta;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = int(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// `B_ξ(X_i, X_j) = Σ_k ξ_k c_{ij}^k` straight from the structure constants.
pub fn oracle_b(alg: &NilpotentAlgebra, xi: &Functional) -> Vec<Vec<Rational>> {
    let m = alg.dim();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..m).fold(Rational::zero(), |acc, k| {
                        acc + &xi.coords()[k] * alg.coeff(i, j, k)
                    })
                })
                .collect()
        })
        .collect()
}

fn unit(m: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); m];
    v[i] = int(1);
    v
}

/// `{ j : g_j ⊄ g(ξ) + g_{j-1} }` by comparing ranks of spanning sets.
pub fn oracle_jump_set(alg: &NilpotentAlgebra, xi: &Functional) -> Vec<usize> {
    let m = alg.dim();
    let mut span = oracle_kernel(&oracle_b(alg, xi));
    let mut prev = oracle_rank(span.clone());
    let mut out = Vec::new();
    for j in 0..m {
        span.push(unit(m, j));
        let r = oracle_rank(span.clone());
        if r > prev {
            out.push(j + 1);
        }
        prev = r;
    }
    out
}

pub fn random_functional<R: Rng>(rng: &mut R, m: usize, range: i64) -> Functional {
    Functional::new(
        (0..m)
            .map(|_| int(rng.random_range(-range..=range)))
            .collect(),
    )
}

pub fn random_vector<R: Rng>(rng: &mut R, m: usize, range: i64) -> Vec<Rational> {
    (0..m)
        .map(|_| ratio(rng.random_range(-range..=range), rng.random_range(1..=3)))
        .collect()
}

/// A small nonzero or zero rational scalar for the `R`-action.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Rational {
    if rng.random_bool(0.1) {
        return Rational::zero();
    }
    ratio(rng.random_range(-6..=6), rng.random_range(1..=4))
}

fn random_value<R: Rng>(rng: &mut R) -> Rational {
    if rng.random_bool(0.15) {
        return Rational::zero();
    }
    ratio(rng.random_range(-8..=8), rng.random_range(1..=2))
}

fn random_endpoint<R: Rng>(rng: &mut R, closed_bias: f64, allow_inf: bool) -> Endpoint {
    if allow_inf && rng.random_bool(0.1) {
        return Endpoint::Unbounded;
    }
    let v = random_value(rng);
    if rng.random_bool(closed_bias) {
        Endpoint::Closed(v)
    } else {
        Endpoint::Open(v)
    }
}

fn random_interval<R: Rng>(rng: &mut R, closed_bias: f64, allow_inf: bool) -> Interval {
    let (a, b) = (
        random_endpoint(rng, closed_bias, allow_inf),
        random_endpoint(rng, closed_bias, allow_inf),
    );
    let swap = match (a.value(), b.value()) {
        (Some(x), Some(y)) => x > y,
        _ => false,
    };
    if swap {
        Interval::new(b, a)
    } else {
        Interval::new(a, b)
    }
}

fn random_box<R: Rng>(rng: &mut R, d: usize, closed_bias: f64, allow_inf: bool) -> Cuboid {
    Cuboid::new(
        (0..d)
            .map(|_| random_interval(rng, closed_bias, allow_inf))
            .collect(),
    )
}

/// A random descriptor over `H_{2n+1}`. `tame` draws closed, bounded pieces
/// so that quasi-compact sets show up often.
pub fn random_subset<R: Rng>(rng: &mut R, space: DualSpace, tame: bool) -> DualSubset {
    let (bias, inf) = if tame { (1.0, false) } else { (0.5, true) };
    let d = space.character_dim();
    let k1 = rng.random_range(0..=3);
    let part1 =
        PuncturedUnion::from_intervals((0..k1).map(|_| random_interval(rng, bias, inf)).collect());
    let part2 = match rng.random_range(0..20) {
        0..=3 => CuboidUnion::empty(d),
        4 if !tame => CuboidUnion::all(d),
        _ => {
            let k2 = rng.random_range(1..=2);
            CuboidUnion::from_boxes(d, (0..k2).map(|_| random_box(rng, d, bias, inf)).collect())
        }
    };
    space.subset(part1, part2)
}

pub fn random_space<R: Rng>(rng: &mut R) -> DualSpace {
    DualSpace::new(rng.random_range(1..=2)).unwrap()
}
