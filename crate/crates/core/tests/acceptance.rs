//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tep_core::completeness::{
    consistent_recoveries, coverage_deg2_of, coverage_deg3, deg3_family_forms,
    dickson_equivalence_residuals, enumerate_ideal_deg2, enumerate_ideal_deg3, search_triads,
    verify_dickson_equivalence, Equivalence,
};
use tep_core::exactmath::MultiPoly;
use tep_core::identities::{self, negative};
use tep_core::*;

const SEED: u64 = 0x7e5_2024;
const RANDOM_CASES: usize = 1000;
const PARAM_RANGE: i64 = 100;

const LIMIT_IDENTITIES: Duration = Duration::from_secs(5);
const LIMIT_DICKSON: Duration = Duration::from_secs(2);
const LIMIT_DEG2_COVERAGE: Duration = Duration::from_secs(60);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(30);
const LIMIT_TRIADS: Duration = Duration::from_secs(10);

// Frozen oracle values (independent brute force over sorted tuples).
const DEG2_CLASSES_H7: usize = 6;
const DEG2_CLASSES_H20: usize = 228;
const DEG3_CLASSES_H3: usize = 0;
const DEG3_H10: [([i64; 4], [i64; 4]); 5] = [
    ([0, 3, 4, 7], [1, 1, 6, 6]),
    ([0, 5, 5, 10], [1, 2, 8, 9]),
    ([1, 4, 5, 8], [2, 2, 7, 7]),
    ([2, 5, 6, 9], [3, 3, 8, 8]),
    ([3, 6, 7, 10], [4, 4, 9, 9]),
];
const TRIAD_PAIRS_H9: usize = 3;
const TRIAD_PAIRS_H30: usize = 195;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("small value"))
        .collect()
}

fn random_array<const N: usize>(rng: &mut ChaCha8Rng) -> [i64; N] {
    std::array::from_fn(|_| rng.gen_range(-PARAM_RANGE..=PARAM_RANGE))
}

fn elementary_of(v: &[i64; 4]) -> [i64; 4] {
    let mut e = [0i64; 4];
    for mask in 1u32..16 {
        let prod: i64 = (0..4)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v[i])
            .product();
        e[mask.count_ones() as usize - 1] += prod;
    }
    e
}

fn symbolic_identities() -> Outcome {
    let start = Instant::now();
    let reports = identities::prove_all();
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.as_str())
        .collect();
    ensure(reports.len() == 5 && failed.is_empty(), || {
        format!("failed: {failed:?}")
    })?;
    let checks: usize = reports
        .iter()
        .map(|r| r.residuals.len() + r.sigma_checks.len() + r.symmetry_checks.len())
        .sum();
    let t = within(start, LIMIT_IDENTITIES)?;
    Ok(format!(
        "{} reports, {checks} zero residuals/checks, {t:.2?}",
        reports.len()
    ))
}

fn dickson_equivalence() -> Outcome {
    let start = Instant::now();
    let residuals = dickson_equivalence_residuals();
    ensure(
        residuals.len() == 6 && residuals.iter().all(MultiPoly::is_zero),
        || "symbolic residual is nonzero".into(),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CASES {
        let params = DicksonParams::new(random_array(&mut rng));
        ensure(verify_dickson_equivalence(&params), || {
            format!("fails at {params:?}")
        })?;
    }
    let t = within(start, LIMIT_DICKSON)?;
    Ok(format!("symbolic + {RANDOM_CASES} random tuples, {t:.2?}"))
}

fn deg2_completeness() -> Outcome {
    let start = Instant::now();
    let exec = Exec::sequential();
    let h7 = enumerate_ideal_deg2(7, exec);
    ensure(h7.len() == DEG2_CLASSES_H7, || {
        format!("H=7 found {}", h7.len())
    })?;
    let found = enumerate_ideal_deg2(20, exec);
    ensure(found.len() == DEG2_CLASSES_H20, || {
        format!("H=20 found {}", found.len())
    })?;
    for sol in &found {
        ensure(
            consistent_recoveries(sol)
                .map(|mut r| r.next().is_some())
                .unwrap_or(false),
            || format!("no consistent Dickson recovery for {sol}"),
        )?;
    }
    let report = coverage_deg2_of(20, &found, exec);
    ensure(report.coverage.is_one(), || {
        let first = report
            .uncovered
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        format!(
            "coverage {} ({}/{}), e.g. {first}",
            report.coverage, report.covered, report.found
        )
    })?;
    let t = within(start, LIMIT_DEG2_COVERAGE)?;
    Ok(format!(
        "H=20: {}/{} covered, single-threaded {t:.2?}",
        report.covered, report.found
    ))
}

fn worked_values() -> Outcome {
    let s = gen_deg2(&Deg2Params::new([1, 2, 3, 1, 2, 4])).verify();
    ensure(s.valid && ints(&s.sums_x) == [42, 602], || {
        format!("deg2 sigma {:?}", s.sums_x)
    })?;

    let d3 = gen_deg3(&QuadParams::new([1, 2, 3, 4]));
    ensure(
        ints(d3.xs()) == [228, 276, 198, 106] && ints(d3.ys()) == [268, 186, 246, 108],
        || format!("deg3 entries {d3}"),
    )?;
    let s = d3.verify();
    ensure(s.valid && ints(&s.sums_x[..2]) == [808, 178600], || {
        format!("deg3 sigma {:?}", s.sums_x)
    })?;
    // σ₁ in the elementary symmetric functions of (p,q,r,s) = (1,2,3,4).
    let e = elementary_of(&[1, 2, 3, 4]);
    let formula = 2 * e[0] * e[2] - 8 * e[3];
    ensure(formula == 808, || format!("2e1e3 - 8e4 = {formula}"))?;
    let sigma1 = MultiPoly::parse(identities::DEG3_SIGMA_IN_E[0]).map_err(|e| e.to_string())?;
    let point = [("e1", e[0]), ("e2", e[1]), ("e3", e[2]), ("e4", e[3])]
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect();
    let via_poly = sigma1.eval(&point).map_err(|e| e.to_string())?;
    ensure(via_poly == BigInt::from(808), || {
        format!("symbolic formula gives {via_poly}")
    })?;

    let params = Deg2Params::new([0, 1, 3, 0, 1, 5]);
    let six = gen_deg5(&params).verify();
    ensure(
        six.valid && ints(&six.sums_x) == [0, 588, 0, 86436, 0],
        || format!("deg5 sigma {:?}", six.sums_x),
    )?;
    let half = gen_eqsums124(&params).verify();
    ensure(half.valid && ints(&half.sums_x) == [0, 294, 43218], || {
        format!("three-entry sigma {:?}", half.sums_x)
    })?;
    Ok("deg2 (42,602); deg3 808/178600 = 2e1e3-8e4; deg5 (0,588,0,86436,0) = 2x three-entry (0,294,43218)".into())
}

fn properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let sorted = |v: &[BigInt]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    for _ in 0..RANDOM_CASES {
        let six = random_array::<6>(&mut rng);
        let params = Deg2Params::new(six);
        let sol = gen_deg2(&params);
        ensure(sol.verify().valid, || format!("deg2 invalid at {six:?}"))?;
        let [p, q, r, a, b, c] = six;
        let swapped = gen_deg2(&Deg2Params::new([p, q, r, b, a, c]));
        ensure(
            sorted(swapped.xs()) == sorted(sol.ys()) && sorted(swapped.ys()) == sorted(sol.xs()),
            || format!("transposition does not swap sides at {six:?}"),
        )?;

        let three = gen_eqsums124(&params).verify();
        let s = &three.sums_x;
        ensure(
            three.valid && BigInt::from(2) * &s[2] == &s[1] * &s[1],
            || format!("(1,2,4) family fails at {six:?}"),
        )?;
        let deg5 = gen_deg5(&params).verify();
        let s = &deg5.sums_x;
        ensure(
            deg5.valid
                && [0, 2, 4].iter().all(|&i| s[i].is_zero())
                && BigInt::from(4) * &s[3] == &s[1] * &s[1],
            || format!("deg5 family fails at {six:?}"),
        )?;

        let five = random_array::<5>(&mut rng);
        ensure(
            gen_dickson(&DicksonParams::new(five)).verify().valid,
            || format!("Dickson invalid at {five:?}"),
        )?;

        let four = random_array::<4>(&mut rng);
        let quad = QuadParams::new(four);
        let t = gen_triads(&quad);
        let (sx, sy) = t.squared();
        ensure(
            t.holds()
                && sx.iter().sum::<BigInt>() == sy.iter().sum::<BigInt>()
                && sx.iter().product::<BigInt>() == sy.iter().product::<BigInt>(),
            || format!("triads fail at {four:?}"),
        )?;
        ensure(
            gen_deg3(&quad).verify().valid && gen_deg3_interim(&quad).verify().valid,
            || format!("deg3 invalid at {four:?}"),
        )?;
    }
    let t = within(start, LIMIT_PROPERTIES)?;
    Ok(format!("{RANDOM_CASES} random tuples per family, {t:.2?}"))
}

fn negative_controls() -> Outcome {
    let controls = negative::all();
    let passed: Vec<&str> = controls
        .iter()
        .filter(|r| r.pass)
        .map(|r| r.name.as_str())
        .collect();
    ensure(passed.is_empty(), || format!("vacuous passes: {passed:?}"))?;
    let cubes1 = negative::theorem1_cubes();
    let cubes4 = negative::theorem4_cubes();
    ensure(!cubes1.pass && !cubes4.pass, || {
        "a family passed at j=3".into()
    })?;
    let (prod, squares) = negative::theorem2_swapped_fg();
    ensure(prod.is_zero() && !squares.is_zero(), || {
        "swapped f,g control".into()
    })?;
    let bad = TepSolution::from_i64(2, &[1, 2, 3], &[1, 2, 4]).unwrap();
    ensure(!bad.verify().valid, || "invalid solution verified".into())?;
    Ok(format!(
        "{} mutation fixtures fail; j=3 fails for both families",
        controls.len()
    ))
}

fn triad_search() -> Outcome {
    let start = Instant::now();
    let small = search_triads(9, Exec::sequential());
    ensure(small.len() == TRIAD_PAIRS_H9, || {
        format!("H=9 found {}", small.len())
    })?;
    ensure(search_triads(4, Exec::sequential()).is_empty(), || {
        "H=4 not empty".into()
    })?;
    let pairs = search_triads(30, Exec::sequential());
    ensure(pairs.len() == TRIAD_PAIRS_H30, || {
        format!("H=30 found {}", pairs.len())
    })?;
    ensure(pairs.contains(&([1, 6, 6], [2, 2, 9])), || {
        "missing (1,6,6),(2,2,9)".into()
    })?;
    for (u, v) in &pairs {
        let prod = |t: &[i64; 3]| t.iter().map(|&x| BigInt::from(x)).product::<BigInt>();
        ensure(
            u != v && u.iter().sum::<i64>() == v.iter().sum::<i64>() && prod(u) == prod(v),
            || format!("bad pair {u:?} {v:?}"),
        )?;
    }
    let t = within(start, LIMIT_TRIADS)?;
    Ok(format!("H=30: {} pairs re-verified, {t:.2?}", pairs.len()))
}

fn deg3_coverage() -> Outcome {
    const H: u32 = 10;
    const B: u32 = 6;
    ensure(
        enumerate_ideal_deg3(3, Exec::sequential()).len() == DEG3_CLASSES_H3,
        || "H=3 not empty".into(),
    )?;
    let found = enumerate_ideal_deg3(H, Exec::sequential());
    let expected: Vec<TepSolution> = DEG3_H10
        .iter()
        .map(|(x, y)| TepSolution::from_i64(3, x, y).unwrap())
        .collect();
    ensure(found == expected, || {
        format!("H=10 enumeration differs: {found:?}")
    })?;

    let seq = coverage_deg3(H, B, Equivalence::Scalar, Exec::sequential());
    let par = coverage_deg3(H, B, Equivalence::Scalar, Exec::with_jobs(0));
    ensure(seq == par, || {
        "sequential and parallel reports differ".into()
    })?;

    let affine = coverage_deg3(H, B, Equivalence::Affine, Exec::with_jobs(0));
    let (members, matched) = self_coverage(H, B, Equivalence::Scalar)?;
    ensure(members == matched, || {
        format!("{matched}/{members} in-window members matched")
    })?;

    // No family member at this bound fits in [0, 10]; the smallest class up
    // to translation has diameter 31.
    let (members_self, matched_self) = self_coverage(SELF_H, B, Equivalence::Affine)?;
    ensure(members_self > 0 && members_self == matched_self, || {
        format!("H={SELF_H}: {matched_self}/{members_self} family members matched")
    })?;
    Ok(format!(
        "H={H} B={B}: {}/{} up to scaling, {}/{} up to translation, {members} members in window; \
         self-coverage at H={SELF_H}: {matched_self}/{members_self}",
        seq.covered, seq.found, affine.covered, affine.found
    ))
}

const SELF_H: u32 = 31;

/// Family members (by canonical form) lying in `[0, h]`, and how many of
/// them are both enumerated and reported as covered.
fn self_coverage(h: u32, b: u32, eq: Equivalence) -> Result<(usize, usize), String> {
    let in_window = |s: &TepSolution| {
        s.xs()
            .iter()
            .chain(s.ys())
            .all(|v| *v >= BigInt::zero() && *v <= BigInt::from(h))
    };
    let canonical = |s: &TepSolution| match eq {
        Equivalence::Scalar => s.normalize(),
        Equivalence::Affine => s.normalize_affine(),
    };
    let found: HashSet<TepSolution> = enumerate_ideal_deg3(h, Exec::with_jobs(0))
        .iter()
        .map(|s| canonical(s).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let report = coverage_deg3(h, b, eq, Exec::with_jobs(0));
    let uncovered: HashSet<TepSolution> = report
        .uncovered
        .iter()
        .map(|s| canonical(s).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let family = deg3_family_forms(b, eq, Exec::with_jobs(0));
    let members: Vec<&TepSolution> = family.iter().filter(|s| in_window(s)).collect();
    let matched = members
        .iter()
        .filter(|m| found.contains(**m) && !uncovered.contains(**m))
        .count();
    Ok((members.len(), matched))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("symbolic identity suite", symbolic_identities),
        ("Dickson equivalence", dickson_equivalence),
        ("degree-2 completeness at H=20", deg2_completeness),
        ("worked values", worked_values),
        ("property suites", properties),
        ("negative controls", negative_controls),
        ("triad search", triad_search),
        ("degree-3 coverage report", deg3_coverage),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
