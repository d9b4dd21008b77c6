//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use signcond::exactnum::{
    bit, gcd, hermite_matrix, rank_and_signature, rat, ratio, Rational, UniPoly,
};
use signcond::oracle::{build_instance, direct_feasible, seeded_cases, OracleCase};
use signcond::parametric::{invariance_check, ParamPoly, ParamUniPoly};
use signcond::queries::{support, Backend, QueryLedger, ZeroSetHandle};
use signcond::realnonreal::real_nonreal_determination;
use signcond::signdet::sign_determination;
use signcond::znz::{
    ada, compress, get_info, linear_solve, mat_of, zero_nonzero_determination, ConditionList,
    ExponentList,
};

const SEED: u64 = 20240611;
const ORACLE_CASES: usize = 200;
const WORKED_EXAMPLE_LIMIT: Duration = Duration::from_millis(1);
const ZNZ_LIMIT: Duration = Duration::from_secs(30);
const SMOKE_LIMIT: Duration = Duration::from_secs(60);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn worked_example() -> Outcome {
    let sigma = ConditionList::from_bit_strings(&["10110", "10111", "11011", "11100", "11101"])
        .expect("valid list");
    // warm-up so allocation of the first call does not count
    let _ = (get_info(&sigma), ada(&sigma), compress(&sigma));
    let start = Instant::now();
    let info = get_info(&sigma);
    let family = ada(&sigma);
    let (comp, compressed) = compress(&sigma).expect("nonempty");
    let elapsed = start.elapsed();

    let expect_info = ["*0**0", "*0**1", "*10**", "**1*0", "*1**1"];
    let expect_ada: Vec<Vec<usize>> = vec![vec![], vec![5], vec![2], vec![3], vec![2, 5]];
    let ok = comp == vec![2, 3, 5]
        && compressed.to_bit_strings() == ["010", "011", "101", "110", "111"]
        && info.to_strings() == expect_info
        && family.subsets() == expect_ada
        && elapsed < WORKED_EXAMPLE_LIMIT;
    outcome(
        ok,
        format!(
            "comp {comp:?}, Info {:?}, Ada {:?}, {elapsed:?} (limit 1 ms)",
            info.to_strings(),
            family.subsets()
        ),
    )
}

struct OracleRun {
    case: OracleCase,
    znz_ok: bool,
    znz_ledger: QueryLedger,
    sign_ok: bool,
    sign_ledger: QueryLedger,
    nonreal_ok: bool,
    nonreal_even: bool,
    conservation: bool,
    real_roots: usize,
}

fn run_oracle_case(case: &OracleCase, backend: Backend) -> OracleRun {
    let truth = direct_feasible(&case.spec, &case.system).expect("valid spec");
    let p = build_instance(&case.spec).expect("valid spec");

    let mut h = ZeroSetHandle::new(&p, backend).expect("nonzero");
    let znz = zero_nonzero_determination(&mut h, &case.system).expect("znz");
    let znz_ok = znz.feas == truth.all.feas && znz.counts == truth.all.counts;
    let znz_ledger = h.take_ledger();

    let mut h = ZeroSetHandle::new(&p, backend).expect("nonzero");
    let sign = sign_determination(&mut h, &case.system).expect("sign");
    let sign_ok = sign.feas == truth.real_signs.feas && sign.counts == truth.real_signs.counts;
    let sign_ledger = h.take_ledger();

    let mut h = ZeroSetHandle::new(&p, backend).expect("nonzero");
    let rn = real_nonreal_determination(&mut h, &case.system).expect("real-nonreal");
    let nonreal_ok = rn.feas_nonreal == truth.nonreal.feas
        && rn.c_nonreal == truth.nonreal.counts
        && rn.feas_real == truth.real_signs.feas
        && rn.c_real == truth.real_signs.counts;
    let nonreal_even = rn.c_nonreal.iter().all(|c| c % 2 == 0);
    let conservation = znz.feas.rows().iter().zip(&znz.counts).all(|(sigma, &c)| {
        let real: usize = rn
            .feas_real
            .rows()
            .iter()
            .zip(&rn.c_real)
            .filter(|(tau, _)| {
                tau.iter()
                    .map(|&v| i8::from(v != 0))
                    .eq(sigma.iter().copied())
            })
            .map(|(_, &c)| c)
            .sum();
        let nonreal = rn
            .feas_nonreal
            .rows()
            .iter()
            .position(|r| r == sigma)
            .map_or(0, |k| rn.c_nonreal[k]);
        c == real + nonreal
    });
    OracleRun {
        case: case.clone(),
        znz_ok,
        znz_ledger,
        sign_ok,
        sign_ledger,
        nonreal_ok,
        nonreal_even,
        conservation,
        real_roots: case.spec.real_roots.len(),
    }
}

type LedgerValues = (Vec<(Vec<u8>, usize)>, Vec<(Vec<u8>, i64)>);

fn ledger_values(l: &QueryLedger) -> LedgerValues {
    let inv = l
        .invertibility_keys()
        .iter()
        .map(|k| (k.clone(), l.cached_invertibility(k).expect("recorded")))
        .collect();
    let taqu = l
        .tarski_keys()
        .iter()
        .map(|k| (k.clone(), l.cached_tarski(k).expect("recorded")))
        .collect();
    (inv, taqu)
}

fn znz_equivalence(runs: &[OracleRun], elapsed: Duration) -> Outcome {
    let bad: Vec<usize> = runs
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.znz_ok)
        .map(|(k, _)| k)
        .collect();
    outcome(
        bad.is_empty() && elapsed < ZNZ_LIMIT,
        format!("{}/{} instances match, failing {bad:?}, {elapsed:.2?} for all three determinations (limit 30 s)", runs.len() - bad.len(), runs.len()),
    )
}

fn sign_equivalence(runs: &[OracleRun]) -> Outcome {
    let sign = runs.iter().filter(|r| r.sign_ok).count();
    let nonreal = runs.iter().filter(|r| r.nonreal_ok).count();
    let even = runs.iter().filter(|r| r.nonreal_even).count();
    let conserved = runs.iter().filter(|r| r.conservation).count();
    let n = runs.len();
    outcome(
        sign == n && nonreal == n && even == n && conserved == n,
        format!("sign {sign}/{n}, real-nonreal {nonreal}/{n}, even nonreal {even}/{n}, conservation {conserved}/{n}"),
    )
}

struct SolverTrials {
    lists: Vec<ConditionList>,
    mismatches: usize,
    recursion_ok: bool,
}

fn solver_trials() -> SolverTrials {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut lists =
        vec![ConditionList::from_bit_strings(&["00", "01", "10", "11"]).expect("valid")];
    while lists.len() < 500 {
        lists.push(common::random_condition_list(&mut rng, 12, 64, &[0, 1]));
    }
    let mut mismatches = 0;
    for sigma in &lists {
        let info = get_info(sigma);
        let mat = mat_of(&ada(sigma), sigma).expect("same indices");
        let v: Vec<i64> = (0..sigma.len()).map(|_| rng.gen_range(-50..=50)).collect();
        let fast = linear_solve(sigma, &info, &mat, &v).expect("valid shapes");
        let rhs: Vec<BigRational> = v
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        let slow = common::gaussian_solve(&common::widen(&mat), &rhs);
        let fast: Vec<BigRational> = fast
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        if slow.as_ref() != Some(&fast) {
            mismatches += 1;
        }
    }

    // on the full two-index list, c(l0) = t(l0) - t(l1) would be off by q12
    let sigma = &lists[0];
    let mat = mat_of(&ada(sigma), sigma).expect("same indices");
    let (q, q2, q1, q12) = (10i64, 6, 5, 2);
    let v = [q, q2, q1, q12];
    let solved = linear_solve(sigma, &get_info(sigma), &mat, &v).expect("valid");
    let rhs: Vec<BigRational> = v
        .iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect();
    let gauss: Vec<i64> = common::gaussian_solve(&common::widen(&mat), &rhs)
        .expect("invertible")
        .iter()
        .map(|x| x.to_integer().try_into().expect("small"))
        .collect();
    let subtract_t = vec![q - q1 - q2, q2 - q12, q1 - q12, q12];
    let recursion_ok = solved == gauss && subtract_t != gauss;
    SolverTrials {
        lists,
        mismatches,
        recursion_ok,
    }
}

fn solver_outcome(t: &SolverTrials) -> Outcome {
    outcome(
        t.mismatches == 0 && t.recursion_ok,
        format!(
            "{} lists, {} mismatches vs Gaussian elimination, 4x4 case separates the formulas: {}",
            t.lists.len(),
            t.mismatches,
            t.recursion_ok
        ),
    )
}

fn is_subfamily(small: &ExponentList, big: &ExponentList) -> bool {
    let big: BTreeSet<&Vec<u8>> = big.rows().iter().collect();
    small.rows().iter().all(|r| big.contains(r))
}

fn structural_bounds(t: &SolverTrials) -> Outcome {
    let mut violations = 0;
    for sigma in &t.lists {
        let family = ada(sigma);
        let subsets: BTreeSet<Vec<usize>> = family.subsets().into_iter().collect();
        let card_ok = family.len() == sigma.len() && subsets.len() == sigma.len();
        let closed = subsets.iter().all(|j| {
            (0..j.len()).all(|skip| {
                let mut smaller = j.clone();
                smaller.remove(skip);
                subsets.contains(&smaller)
            })
        });
        let small = subsets.iter().all(|j| j.len() < bit(sigma.len()));
        if !(card_ok && closed && small) {
            violations += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut monotone = 0;
    for k in 0..100 {
        let sigma = &t.lists[1 + (k * 4) % (t.lists.len() - 1)];
        let keep: Vec<Vec<i8>> = sigma
            .rows()
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        let keep = if keep.is_empty() {
            vec![sigma.rows()[0].clone()]
        } else {
            keep
        };
        let sub = ConditionList::new(sigma.indices().to_vec(), keep).expect("sublist stays sorted");
        if is_subfamily(&ada(&sub), &ada(sigma)) {
            monotone += 1;
        }
    }
    outcome(
        violations == 0 && monotone == 100,
        format!(
            "{violations} bound violations on {} lists, Ada monotone on {monotone}/100 sublists",
            t.lists.len()
        ),
    )
}

fn query_budgets(runs: &[OracleRun]) -> Outcome {
    let mut bad = Vec::new();
    for (k, run) in runs.iter().enumerate() {
        let s = run.case.system.len();
        let r = run.case.spec.distinct_roots();
        let rr = run.real_roots;
        let inv = run.znz_ledger.inv_calls();
        let taqu = run.sign_ledger.taqu_calls();
        let inv_support = run
            .znz_ledger
            .invertibility_keys()
            .iter()
            .all(|e| support(e).len() <= bit(r));
        let taqu_support = run
            .sign_ledger
            .tarski_keys()
            .iter()
            .all(|e| support(e).len() <= bit(rr));
        if inv > 1 + s * r || taqu > 1 + 2 * s * rr || !inv_support || !taqu_support {
            bad.push(k);
        }
    }
    let max_inv = runs
        .iter()
        .map(|r| {
            r.znz_ledger.inv_calls() as f64
                / (1 + r.case.system.len() * r.case.spec.distinct_roots()) as f64
        })
        .fold(0.0, f64::max);
    outcome(
        bad.is_empty(),
        format!(
            "{} instances over budget {bad:?}; peak inv_calls/(1+sr) = {max_inv:.2}",
            bad.len()
        ),
    )
}

fn backend_agreement(sturm: &[OracleRun], hermite: &[OracleRun]) -> Outcome {
    let mut differ = 0;
    for (a, b) in sturm.iter().zip(hermite) {
        let same = ledger_values(&a.znz_ledger) == ledger_values(&b.znz_ledger)
            && ledger_values(&a.sign_ledger) == ledger_values(&b.sign_ledger)
            && a.znz_ok == b.znz_ok
            && a.sign_ok == b.sign_ok
            && a.nonreal_ok == b.nonreal_ok;
        if !same {
            differ += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut rank_bad = 0;
    for _ in 0..300 {
        let d = rng.gen_range(1..=6);
        let base = common::random_monic(&mut rng, d, 5);
        // share factors now and then so the gcd is nontrivial
        let p = if rng.gen_bool(0.4) {
            &base * &UniPoly::linear_root(&rat(rng.gen_range(-3..=3)))
        } else {
            base
        };
        let q = if rng.gen_bool(0.3) {
            &common::random_poly(&mut rng, 2, 5) * &p.derivative()
        } else {
            common::random_poly(&mut rng, 6, 9)
        };
        let her = hermite_matrix(&p, &q).expect("monic");
        let pq = &p.derivative() * &q;
        let expected = if pq.is_zero() {
            0
        } else {
            p.degree().unwrap() - gcd(&p, &pq).expect("p nonzero").degree().unwrap()
        };
        if rank_and_signature(&her).0 != expected {
            rank_bad += 1;
        }
    }
    outcome(
        differ == 0 && rank_bad == 0,
        format!(
            "{differ}/{} instances differ between backends; rank(Her) != Qu on {rank_bad}/300",
            sturm.len()
        ),
    )
}

fn random_param_poly(rng: &mut impl Rng, m: usize) -> ParamPoly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let mono: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=1)).collect();
        terms.push((mono, rat(rng.gen_range(-3..=3))));
    }
    ParamPoly::from_terms(m, terms)
}

fn random_param_instance(rng: &mut impl Rng) -> (ParamUniPoly, Vec<ParamUniPoly>) {
    let m = rng.gen_range(1..=2);
    let d = rng.gen_range(2..=3);
    let mut c: Vec<ParamPoly> = (0..d).map(|_| random_param_poly(rng, m)).collect();
    c.push(ParamPoly::one(m));
    let p = ParamUniPoly::new(m, c);
    let s = rng.gen_range(1..=2);
    let system = (0..s)
        .map(|_| {
            let deg = rng.gen_range(1..=2);
            ParamUniPoly::new(m, (0..=deg).map(|_| random_param_poly(rng, m)).collect())
        })
        .collect();
    (p, system)
}

fn parametric_invariance() -> Outcome {
    let y = ParamPoly::var(1, 0);
    let c = |v: i64| ParamPoly::constant(1, rat(v));
    let sqrt = ParamUniPoly::new(1, vec![-&y, c(0), c(1)]);
    let x = ParamUniPoly::new(1, vec![c(0), c(1)]);
    let samples: Vec<Vec<Rational>> = [-9, -4, -1, 0, 1, 4, 9]
        .iter()
        .map(|&v| vec![rat(v)])
        .collect();
    let base = invariance_check(&sqrt, &[x], &samples).expect("valid instance");
    let mut violations = base.violations.len();
    let mut groups = base.groups.len();

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for _ in 0..20 {
        let (p, system) = random_param_instance(&mut rng);
        let samples: Vec<Vec<Rational>> = (0..40)
            .map(|_| {
                (0..p.nvars())
                    .map(|_| ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2)))
                    .collect()
            })
            .collect();
        let report = invariance_check(&p, &system, &samples).expect("valid instance");
        violations += report.violations.len();
        groups += report.groups.len();
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let roots: Vec<Rational> = (0..50).map(|k| rat(k - 25)).collect();
    let p = UniPoly::from_roots(&roots);
    let plist: Vec<UniPoly> = (0..20)
        .map(|k| {
            if k % 2 == 0 {
                common::random_poly(&mut rng, 3, 20)
            } else {
                let r: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-25..25))).collect();
                UniPoly::from_roots(&r)
            }
        })
        .collect();
    let start = Instant::now();
    let mut h = ZeroSetHandle::new(&p, Backend::Sturm).expect("nonzero");
    let smoke = real_nonreal_determination(&mut h, &plist).is_ok();
    let elapsed = start.elapsed();
    outcome(
        violations == 0 && smoke && elapsed < SMOKE_LIMIT,
        format!(
            "{violations} violations over {groups} sign groups (21 instances); smoke s=20 deg 50 in {elapsed:.2?} (limit 60 s)"
        ),
    )
}

fn main() {
    let cases = seeded_cases(SEED, ORACLE_CASES);
    let start = Instant::now();
    let sturm: Vec<OracleRun> = cases
        .iter()
        .map(|c| run_oracle_case(c, Backend::Sturm))
        .collect();
    let sturm_elapsed = start.elapsed();
    let hermite: Vec<OracleRun> = cases
        .par_iter()
        .map(|c| run_oracle_case(c, Backend::Hermite))
        .collect();
    let trials = solver_trials();

    let results = [
        ("1 worked example reproduction", worked_example()),
        (
            "2 zero-nonzero oracle equivalence",
            znz_equivalence(&sturm, sturm_elapsed),
        ),
        (
            "3 sign and real-nonreal oracle equivalence",
            sign_equivalence(&sturm),
        ),
        (
            "4 block solver vs Gaussian elimination",
            solver_outcome(&trials),
        ),
        (
            "5 structural bounds of adapted families",
            structural_bounds(&trials),
        ),
        ("6 query budgets", query_budgets(&sturm)),
        ("7 backend agreement", backend_agreement(&sturm, &hermite)),
        (
            "8 parametric invariance and smoke benchmark",
            parametric_invariance(),
        ),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "{} criterion {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
