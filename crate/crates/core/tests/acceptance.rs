//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use coadjoint::catalog::{self, CatalogEntry};
use coadjoint::invariants::{
    compute_bundle, index, index_with_samples, nuclear_bounds_coarse, nuclear_bounds_fine,
    real_rank, stable_rank, BundleOptions, NuclearMode,
};
use coadjoint::rational::int;
use coadjoint::stratification::{jump_set, stratify, IndexSet};
use coadjoint::{DualSpace, DualSubset};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(v: &[usize]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn heisenberg_suite() -> Outcome {
    let start = Instant::now();
    for n in 1..=3 {
        let alg = catalog::heisenberg(n).unwrap().algebra;
        let idx = index(&alg, SEED).map_err(|e| e.to_string())?.value;
        ensure(idx == 1, || format!("heisenberg({n}) index {idx}"))?;
        let report = stratify(&alg, 1, SEED).map_err(|e| e.to_string())?;
        ensure(report.exhaustive, || {
            format!("heisenberg({n}) search not exhaustive")
        })?;
        ensure(report.strata.len() == 2, || {
            format!("heisenberg({n}) has {} strata", report.strata.len())
        })?;
        ensure(real_rank(&alg) == 2 * n, || {
            format!("heisenberg({n}) real rank")
        })?;
        ensure(stable_rank(&alg) == 1 + n.max(1), || {
            format!("heisenberg({n}) stable rank")
        })?;
        let b = nuclear_bounds_coarse(&alg, &report);
        let want = (2, (2 * n + 1) + 2 - 1);
        ensure((b.lower, b.upper) == want, || {
            format!(
                "heisenberg({n}) coarse bounds ({}, {}) != {want:?}",
                b.lower, b.upper
            )
        })?;
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!("n = 1..3 in {:?}", start.elapsed()))
}

fn filiform_suite() -> Outcome {
    let start = Instant::now();
    for m in 4..=8 {
        let alg = catalog::filiform(m).unwrap().algebra;
        let report = stratify(&alg, 1, SEED).map_err(|e| e.to_string())?;
        ensure(report.strata.len() == m - 1, || {
            format!("filiform({m}) has {} strata", report.strata.len())
        })?;
        let found: BTreeSet<IndexSet> = report.index_sets().into_iter().collect();
        let mut want: BTreeSet<IndexSet> = (2..m).map(|j| set(&[j, m])).collect();
        want.insert(IndexSet::empty());
        ensure(found == want, || {
            format!("filiform({m}) jump sets {found:?}")
        })?;
        for s in &report.strata {
            for w in &s.witnesses {
                let oracle = oracle_jump_set(&alg, w);
                ensure(oracle == s.e.elems(), || {
                    format!("filiform({m}) witness {w}: oracle {oracle:?} vs {}", s.e)
                })?;
            }
        }
        let idx = index(&alg, SEED).map_err(|e| e.to_string())?.value;
        ensure(idx == m - 2, || format!("filiform({m}) index {idx}"))?;
        ensure(real_rank(&alg) == 2, || format!("filiform({m}) real rank"))?;
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("m = 4..8 in {:?}", start.elapsed()))
}

fn index_cross_check(entries: &[CatalogEntry]) -> Outcome {
    for e in entries {
        let r = index(&e.algebra, SEED).map_err(|err| format!("{e}: {err}"))?;
        let all = [
            r.from_generic_stratum,
            r.from_orbit_dimension,
            r.from_stabilizer,
            r.from_b_rank,
        ];
        ensure(all.iter().all(|&v| v == r.value), || {
            format!("{e}: {all:?}")
        })?;
        if let Some(want) = &e.expected.index {
            ensure(want.value == r.value, || {
                format!("{e}: index {} expected {}", r.value, want.value)
            })?;
        }
        if e.name == "g_st" {
            ensure(r.value == 1, || format!("{e}: index {}", r.value))?;
        }
    }
    Ok(format!("{} catalog entries agree", entries.len()))
}

fn ut_suite() -> Outcome {
    let mut notes = Vec::new();
    let heis = index(&catalog::heisenberg(1).unwrap().algebra, SEED)
        .unwrap()
        .value;
    for k in 3..=5 {
        let alg = catalog::ut(k).unwrap().algebra;
        let m = alg.dim();
        let sampled = index_with_samples(&alg, SEED, 200)
            .map_err(|e| e.to_string())?
            .value;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1000 + k as u64);
        let max_rank = (0..200)
            .map(|_| oracle_rank(oracle_b(&alg, &random_functional(&mut rng, m, 1000))))
            .max()
            .unwrap();
        let oracle = m - max_rank;
        ensure(sampled == oracle, || {
            format!("ut({k}): sampled {sampled}, oracle {oracle}")
        })?;
        if k == 3 {
            ensure(sampled == heis, || {
                format!("ut(3) index {sampled} vs heisenberg(1) {heis}")
            })?;
        }
        let published = (k - 1) / 2;
        if published != sampled {
            notes.push(format!("k={k}: computed {sampled}, published {published}"));
        }
    }
    let mut msg = "k = 3..5 agree with the rank oracle".to_string();
    if !notes.is_empty() {
        msg.push_str(&format!("; discrepancy reported: {}", notes.join(", ")));
    }
    Ok(msg)
}

fn qc_witness(space: DualSpace) -> (DualSubset, DualSubset) {
    let parse = |lo: i64, hi: i64| {
        let d = space.character_dim();
        let corner = |v: i64| vec![v; d];
        format!(
            r#"{{"n":{n},"part1":[{{"lo":-1,"hi":0,"lo_closed":true,"hi_closed":false}},
               {{"lo":0,"hi":1,"lo_closed":false,"hi_closed":true}}],
               "part2":[{{"min":{:?},"max":{:?},"closed":true}}]}}"#,
            corner(lo),
            corner(hi),
            n = space.n()
        )
    };
    (
        DualSubset::from_json_str(&parse(0, 1)).unwrap(),
        DualSubset::from_json_str(&parse(2, 3)).unwrap(),
    )
}

fn quasi_compactness_suite() -> Outcome {
    for n in 1..=3 {
        let (c, c2) = qc_witness(DualSpace::new(n).unwrap());
        ensure(c.is_quasi_compact() && c2.is_quasi_compact(), || {
            format!("n={n}: witnesses not qc")
        })?;
        let meet = c.intersect(&c2).unwrap();
        let d = meet.quasi_compactness();
        ensure(!d.quasi_compact, || {
            format!("n={n}: intersection decided qc")
        })?;
        ensure(
            d.reasons.iter().map(|r| r.condition()).collect::<Vec<_>>() == vec![3],
            || format!("n={n}: reasons {:?}", d.reasons),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut qc_seen = 0;
    for i in 0..1000 {
        let space = random_space(&mut rng);
        let tame = rng.random_bool(0.5);
        let s = random_subset(&mut rng, space, tame);
        let extra = random_subset(&mut rng, space, tame);
        let t = s.union(&extra).unwrap();
        let cs = s.closure();
        ensure(cs.closure().set_eq(&cs), || {
            format!("#{i}: closure not idempotent on {s:?}")
        })?;
        ensure(s.is_subset_of(&cs).unwrap(), || {
            format!("#{i}: closure not extensive on {s:?}")
        })?;
        ensure(cs.is_subset_of(&t.closure()).unwrap(), || {
            format!("#{i}: closure not monotone on {s:?} within {t:?}")
        })?;
        if s.is_quasi_compact() {
            qc_seen += 1;
            ensure(s.part1().is_closed(), || {
                format!("#{i}: qc but part1 not closed: {s:?}")
            })?;
            let chars = space.subset(Default::default(), s.part2().clone());
            ensure(chars.is_quasi_compact(), || {
                format!("#{i}: qc but part2 alone not qc: {s:?}")
            })?;
            if extra.is_quasi_compact() {
                ensure(t.is_quasi_compact(), || {
                    format!("#{i}: union of qc not qc: {s:?} {extra:?}")
                })?;
            }
        }
    }
    ensure(qc_seen >= 100, || {
        format!("only {qc_seen} quasi-compact samples")
    })?;
    Ok(format!(
        "witness pair for n = 1..3; 1000 descriptors ({qc_seen} quasi-compact)"
    ))
}

fn r_space_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5eed);
    for i in 0..1000 {
        let space = random_space(&mut rng);
        let tame = rng.random_bool(0.5);
        let s = random_subset(&mut rng, space, tame);
        let (t, u) = (random_scalar(&mut rng), random_scalar(&mut rng));
        ensure(s.r_act(&int(1)).set_eq(&s), || {
            format!("#{i}: 1·x != x for {s:?}")
        })?;
        let lhs = s.r_act(&u).r_act(&t);
        let rhs = s.r_act(&(&t * &u));
        ensure(lhs.set_eq(&rhs), || {
            format!("#{i}: t·(u·x) != tu·x for t={t}, u={u}, {s:?}")
        })?;
        let zero = s.r_act(&int(0));
        let want = if s.is_empty() {
            space.empty()
        } else {
            space.base_point()
        };
        ensure(zero.set_eq(&want), || format!("#{i}: 0·x != x0 for {s:?}"))?;
        ensure(
            space.base_point().r_act(&t).set_eq(&space.base_point()),
            || format!("#{i}: t·x0 != x0 for t={t}"),
        )?;
    }
    Ok("1000 triples".into())
}

fn orbit_suite(entries: &[CatalogEntry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0b17);
    for i in 0..500 {
        let e = &entries[rng.random_range(0..entries.len())];
        let alg = &e.algebra;
        let m = alg.dim();
        let xi = random_functional(&mut rng, m, 20);
        let x = random_vector(&mut rng, m, 5);
        let moved = alg.coadjoint_act(&x, &xi).map_err(|err| err.to_string())?;
        let j0 = jump_set(alg, &xi).map_err(|err| err.to_string())?;
        let j1 = jump_set(alg, &moved).map_err(|err| err.to_string())?;
        ensure(j0 == j1, || {
            format!("#{i} {e}: J changed from {j0} to {j1} (xi={xi}, x={x:?})")
        })?;
        ensure(j0.elems() == oracle_jump_set(alg, &xi), || {
            format!("#{i} {e}: jump set oracle mismatch at {xi}")
        })?;
        let r = oracle_rank(oracle_b(alg, &xi));
        ensure(j0.len() == r, || {
            format!("#{i} {e}: |J| = {} but rank B = {r}", j0.len())
        })?;
    }
    Ok("500 triples".into())
}

fn nuclear_suite(entries: &[CatalogEntry]) -> Outcome {
    for e in entries {
        let mut opts = BundleOptions::new(1, SEED);
        let coarse = compute_bundle(&e.algebra, &opts).map_err(|err| format!("{e}: {err}"))?;
        ensure(coarse.nuclear_lower <= coarse.nuclear_upper, || {
            format!("{e}: coarse bounds inverted")
        })?;
        opts.mode = NuclearMode::Fine;
        opts.estimate_missing = true;
        let fine = compute_bundle(&e.algebra, &opts).map_err(|err| format!("{e}: {err}"))?;
        ensure(fine.nuclear_lower <= fine.nuclear_upper, || {
            format!("{e}: fine bounds inverted")
        })?;
    }
    let alg = catalog::heisenberg(1).unwrap().algebra;
    let report = stratify(&alg, 1, SEED).map_err(|e| e.to_string())?;
    let dims = [(set(&[2, 3]), 1), (IndexSet::empty(), 2)]
        .into_iter()
        .collect();
    let b = nuclear_bounds_fine(&alg, &report, &dims, 1).map_err(|e| e.to_string())?;
    ensure((b.lower, b.upper) == (2, 4), || {
        format!("heisenberg(1) fine ({}, {})", b.lower, b.upper)
    })?;
    let mut opts = BundleOptions::new(1, SEED);
    opts.mode = NuclearMode::Fine;
    let bundle = compute_bundle(&alg, &opts).map_err(|e| e.to_string())?;
    ensure(
        (bundle.nuclear_lower, bundle.nuclear_upper) == (2, 4),
        || {
            format!(
                "heisenberg(1) built-in fine ({}, {})",
                bundle.nuclear_lower, bundle.nuclear_upper
            )
        },
    )?;
    Ok(format!(
        "{} catalog entries; heisenberg(1) fine = (2, 4)",
        entries.len()
    ))
}

fn main() {
    let entries = catalog::list();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("Heisenberg suite", Box::new(heisenberg_suite)),
        ("Filiform suite", Box::new(filiform_suite)),
        (
            "Index cross-check",
            Box::new(|| index_cross_check(&entries)),
        ),
        ("ut(k) suite", Box::new(ut_suite)),
        ("Quasi-compactness", Box::new(quasi_compactness_suite)),
        ("R-space axioms", Box::new(r_space_suite)),
        ("Orbit invariance", Box::new(|| orbit_suite(&entries))),
        ("Nuclear bounds", Box::new(|| nuclear_suite(&entries))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
