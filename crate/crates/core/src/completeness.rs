//! Dickson recovery, completeness checks and brute-force enumeration.
//!
//! Enumeration works on sorted tuples with entries in a window `[lo, hi]`.
//! Tuples are bucketed by their power sums (or, for triads, by sum and
//! product); every pair inside a bucket is a solution. The outer loop over
//! the first entry is split across workers and the buckets are merged in a
//! fixed order, so results do not depend on the worker count.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::MultiPoly;
use crate::exec::Exec;
use crate::generators::{formulas, gen_deg2, gen_deg3, Deg2Params, DicksonParams, QuadParams};
use crate::model::{ModelError, TepSolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompletenessError {
    #[error("expected a degree-2 solution with three entries per side")]
    WrongShape,
    #[error("not a valid solution: power sums differ at j={0}")]
    Invalid(u32),
}

/// Symbolic entrywise differences `gen_deg2(map(A,B,C,D,G)) − (D+G)·gen_dickson(A,B,C,D,G)`.
pub fn dickson_equivalence_residuals() -> Vec<MultiPoly> {
    let params = MultiPoly::vars(["A", "B", "C", "D", "G"]);
    let (tx, ty) = formulas::deg2(&formulas::dickson_to_deg2(&params));
    let (dx, dy) = formulas::dickson(&params);
    let factor = &params[3] + &params[4];
    tx.iter()
        .chain(&ty)
        .zip(dx.iter().chain(&dy))
        .map(|(t, d)| t - &factor * d)
        .collect()
}

/// Checks `gen_deg2(dickson_to_theorem1(params)) = (D+G)·gen_dickson(params)` entrywise.
pub fn verify_dickson_equivalence(params: &DicksonParams) -> bool {
    let theorem1 = gen_deg2(&crate::generators::dickson_to_theorem1(params));
    let dickson = crate::generators::gen_dickson(params);
    theorem1 == dickson.scale(&(&params.D + &params.G))
}

/// An ordering of a degree-2 solution: permutations of each side and an
/// optional side swap (3!·3!·2 = 72 arrangements).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub x_perm: [usize; 3],
    pub y_perm: [usize; 3],
    pub swapped: bool,
}

impl Arrangement {
    pub const IDENTITY: Arrangement = Arrangement {
        x_perm: [0, 1, 2],
        y_perm: [0, 1, 2],
        swapped: false,
    };

    pub fn all() -> impl Iterator<Item = Arrangement> {
        let perms: Vec<[usize; 3]> = (0..3).permutations(3).map(|p| [p[0], p[1], p[2]]).collect();
        let perms2 = perms.clone();
        [false, true].into_iter().flat_map(move |swapped| {
            let perms2 = perms2.clone();
            perms.clone().into_iter().flat_map(move |x_perm| {
                perms2.clone().into_iter().map(move |y_perm| Arrangement {
                    x_perm,
                    y_perm,
                    swapped,
                })
            })
        })
    }

    pub fn apply(&self, xs: &[BigInt], ys: &[BigInt]) -> ([BigInt; 3], [BigInt; 3]) {
        let (a, b) = if self.swapped { (ys, xs) } else { (xs, ys) };
        (
            self.x_perm.map(|i| a[i].clone()),
            self.y_perm.map(|i| b[i].clone()),
        )
    }
}

/// `C` and the four products `AD, AG, BD, BG` read off an arranged solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredDickson {
    pub c: BigInt,
    pub ad: BigInt,
    pub ag: BigInt,
    pub bd: BigInt,
    pub bg: BigInt,
    pub consistent: bool,
    pub arrangement: Arrangement,
}

impl RecoveredDickson {
    fn read(x: &[BigInt; 3], y: &[BigInt; 3], arrangement: Arrangement) -> Self {
        let c = &x[0] + &x[2] - &y[0];
        let ad = &x[0] - &c;
        let bg = &x[2] - &c;
        let bd = &y[1] - &c;
        let ag = &y[2] - &c;
        let mut rec = RecoveredDickson {
            c,
            ad,
            ag,
            bd,
            bg,
            consistent: false,
            arrangement,
        };
        let (rx, ry) = rec.reconstruct();
        rec.consistent = &rec.ad * &rec.bg == &rec.ag * &rec.bd && rx == *x && ry == *y;
        rec
    }

    /// Dickson's six entries from `C` and the products.
    pub fn reconstruct(&self) -> ([BigInt; 3], [BigInt; 3]) {
        let c = &self.c;
        (
            [&self.ad + c, &self.ag + &self.bd + c, &self.bg + c],
            [&self.ad + &self.bg + c, &self.bd + c, &self.ag + c],
        )
    }

    /// Rational Dickson parameters reproducing the products, with the gauge
    /// fixed by `A = 1` (or `B = 1` when `AD = 0`, or `G = 1` when both
    /// `AD` and `BD` vanish).
    pub fn dickson_parameters(&self) -> [BigRational; 5] {
        let q = |v: &BigInt| BigRational::from_integer(v.clone());
        let one = BigRational::one();
        let zero = BigRational::zero();
        let c = q(&self.c);
        if !self.ad.is_zero() {
            let d = q(&self.ad);
            let b = q(&self.bd) / &d;
            [one, b, c, d, q(&self.ag)]
        } else if !self.bd.is_zero() {
            [zero, one, c, q(&self.bd), q(&self.bg)]
        } else {
            [q(&self.ag), q(&self.bg), c, zero, one]
        }
    }

    /// Integer Theorem-1 parameters generating a multiple of the arranged
    /// solution. `None` when the multiplier `D + G` vanishes.
    pub fn theorem1_parameters(&self) -> Option<Deg2Params> {
        let dickson = self.dickson_parameters();
        if (&dickson[3] + &dickson[4]).is_zero() {
            return None;
        }
        let [p, q, r, a, b, c] = formulas::dickson_to_deg2(&dickson);
        // The family is bilinear in (p,q,r) and (a,b,c), so each group can be
        // cleared of denominators separately.
        let clear = |group: [BigRational; 3]| -> [BigInt; 3] {
            let lcm = group
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            group.map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        };
        let [p, q, r] = clear([p, q, r]);
        let [a, b, c] = clear([a, b, c]);
        Some(Deg2Params::from_array([p, q, r, a, b, c]))
    }
}

fn check_deg2(sol: &TepSolution) -> Result<(), CompletenessError> {
    if sol.size() != 3 || sol.exponents() != [1, 2] {
        return Err(CompletenessError::WrongShape);
    }
    match sol.verify().first_failure() {
        Some(j) => Err(CompletenessError::Invalid(j)),
        None => Ok(()),
    }
}

/// Reads the Dickson products off `sol` in the given arrangement, without
/// searching.
pub fn recover_arranged(
    sol: &TepSolution,
    arrangement: Arrangement,
) -> Result<RecoveredDickson, CompletenessError> {
    check_deg2(sol)?;
    let (x, y) = arrangement.apply(sol.xs(), sol.ys());
    Ok(RecoveredDickson::read(&x, &y, arrangement))
}

/// Every arrangement of `sol` that admits a consistent Dickson recovery.
pub fn consistent_recoveries(
    sol: &TepSolution,
) -> Result<impl Iterator<Item = RecoveredDickson> + '_, CompletenessError> {
    check_deg2(sol)?;
    Ok(Arrangement::all().filter_map(move |arr| {
        let (x, y) = arr.apply(sol.xs(), sol.ys());
        let rec = RecoveredDickson::read(&x, &y, arr);
        rec.consistent.then_some(rec)
    }))
}

/// First consistent recovery over all 72 arrangements; `Ok(None)` would
/// mean Dickson's parametrization misses this solution.
pub fn recover_dickson(sol: &TepSolution) -> Result<Option<RecoveredDickson>, CompletenessError> {
    Ok(consistent_recoveries(sol)?.next())
}

/// Whether some Theorem-1 instance is a scalar multiple of `sol`.
pub fn theorem1_represents(sol: &TepSolution) -> bool {
    theorem1_witness(sol).is_some()
}

/// Theorem-1 parameters whose output is a scalar multiple of `sol`.
pub fn theorem1_witness(sol: &TepSolution) -> Option<Deg2Params> {
    let recoveries = consistent_recoveries(sol).ok()?;
    for rec in recoveries {
        let Some(params) = rec.theorem1_parameters() else {
            continue;
        };
        let generated = gen_deg2(&params);
        if !generated.is_all_zero() && generated.is_scalar_multiple(sol).unwrap_or(false) {
            return Some(params);
        }
    }
    None
}

/// How two solutions are identified when measuring coverage.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Equivalence {
    /// Same canonical form up to permutation, side swap, scaling and sign.
    #[default]
    Scalar,
    /// Additionally up to translation.
    Affine,
}

impl Equivalence {
    fn canonical(self, sol: &TepSolution) -> Result<TepSolution, ModelError> {
        match self {
            Equivalence::Scalar => sol.normalize(),
            Equivalence::Affine => sol.normalize_affine(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub height: u32,
    pub param_bound: Option<u32>,
    pub found: usize,
    pub covered: usize,
    pub coverage: BigRational,
    /// `found == 0`; coverage is then reported as 1.
    pub vacuous: bool,
    pub uncovered: Vec<TepSolution>,
}

impl CoverageReport {
    fn from_flags(
        height: u32,
        param_bound: Option<u32>,
        solutions: &[TepSolution],
        covered: &[bool],
    ) -> Self {
        let found = solutions.len();
        let hits = covered.iter().filter(|c| **c).count();
        let coverage = if found == 0 {
            BigRational::one()
        } else {
            BigRational::new(hits.into(), found.into())
        };
        CoverageReport {
            height,
            param_bound,
            found,
            covered: hits,
            coverage,
            vacuous: found == 0,
            uncovered: solutions
                .iter()
                .zip(covered)
                .filter(|(_, c)| !**c)
                .map(|(s, _)| s.clone())
                .collect(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.covered == self.found
    }
}

/// Non-decreasing tuples of length `n` with entries in `[first, hi]` whose
/// first entry is exactly `first`.
fn sorted_tuples_from(n: usize, first: i64, hi: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, n: usize, hi: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let start = *prefix.last().unwrap();
        for v in start..=hi {
            prefix.push(v);
            extend(prefix, n, hi, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![first], n, hi, &mut out);
    out
}

/// Buckets all sorted `n`-tuples over `[lo, hi]` by `key`, keeping only
/// buckets with at least two tuples. Tuples in a bucket are in lexicographic
/// order.
fn collide<K, F>(n: usize, lo: i64, hi: i64, key: F, exec: Exec) -> Vec<Vec<Vec<i64>>>
where
    K: Ord + Send,
    F: Fn(&[i64]) -> K + Sync + Send,
{
    let firsts: Vec<i64> = (lo..=hi).collect();
    let keyed = exec.flat_map(firsts, |first| {
        sorted_tuples_from(n, first, hi)
            .into_iter()
            .map(|t| (key(&t), t))
            .collect()
    });
    let mut buckets: BTreeMap<K, Vec<Vec<i64>>> = BTreeMap::new();
    for (k, t) in keyed {
        buckets.entry(k).or_default().push(t);
    }
    buckets.into_values().filter(|b| b.len() > 1).collect()
}

fn power_sums_i128(t: &[i64], exponents: &[u32]) -> Vec<i128> {
    exponents
        .iter()
        .map(|&j| t.iter().map(|&v| (v as i128).pow(j)).sum())
        .collect()
}

/// All canonical nontrivial solutions with both sides sorted in `[0, height]`,
/// for the system with exponents `1..=n-1` on `n` entries.
fn enumerate_ideal(n: usize, height: u32, exec: Exec) -> Vec<TepSolution> {
    let k = (n - 1) as u32;
    let exponents: Vec<u32> = (1..=k).collect();
    let buckets = collide(
        n,
        0,
        height as i64,
        |t| power_sums_i128(t, &exponents),
        exec,
    );
    let big = |t: &[i64]| t.iter().map(|v| BigInt::from(*v)).collect::<Vec<_>>();
    let found = exec.flat_map(buckets, |bucket| {
        bucket
            .iter()
            .tuple_combinations()
            .map(|(a, b)| {
                TepSolution::new(k, big(a), big(b))
                    .and_then(|s| s.normalize())
                    .expect("distinct sorted tuples")
            })
            .collect()
    });
    dedup_sorted(found)
}

fn dedup_sorted(solutions: Vec<TepSolution>) -> Vec<TepSolution> {
    let mut seen = HashSet::new();
    let mut unique: Vec<TepSolution> = solutions
        .into_iter()
        .filter(|s| seen.insert(s.to_string()))
        .collect();
    unique.sort_by(|a, b| (a.xs(), a.ys()).cmp(&(b.xs(), b.ys())));
    unique
}

pub fn enumerate_ideal_deg2(height: u32, exec: Exec) -> Vec<TepSolution> {
    enumerate_ideal(3, height, exec)
}

pub fn enumerate_ideal_deg3(height: u32, exec: Exec) -> Vec<TepSolution> {
    enumerate_ideal(4, height, exec)
}

/// Fraction of enumerated degree-2 solutions that are scalar multiples of a
/// Theorem-1 instance.
pub fn coverage_deg2(height: u32, exec: Exec) -> CoverageReport {
    let found = enumerate_ideal_deg2(height, exec);
    coverage_deg2_of(height, &found, exec)
}

pub fn coverage_deg2_of(height: u32, found: &[TepSolution], exec: Exec) -> CoverageReport {
    let covered = exec.map(found.to_vec(), |s| theorem1_represents(&s));
    CoverageReport::from_flags(height, None, found, &covered)
}

/// Canonical forms of all nontrivial degree-3 family members with
/// parameters in `[-bound, bound]`.
pub fn deg3_family_forms(bound: u32, equivalence: Equivalence, exec: Exec) -> HashSet<TepSolution> {
    let b = bound as i64;
    let firsts: Vec<i64> = (-b..=b).collect();
    let forms = exec.flat_map(firsts, |p| {
        let mut out = Vec::new();
        for q in -b..=b {
            for r in -b..=b {
                for s in -b..=b {
                    let sol = gen_deg3(&QuadParams::new([p, q, r, s]));
                    if sol.is_trivial() {
                        continue;
                    }
                    if let Ok(c) = equivalence.canonical(&sol) {
                        out.push(c);
                    }
                }
            }
        }
        out
    });
    forms.into_iter().collect()
}

/// Fraction of enumerated degree-3 solutions matched by the degree-3 family
/// with parameters bounded by `bound`.
pub fn coverage_deg3(
    height: u32,
    bound: u32,
    equivalence: Equivalence,
    exec: Exec,
) -> CoverageReport {
    let found = enumerate_ideal_deg3(height, exec);
    let family = deg3_family_forms(bound, equivalence, exec);
    let covered: Vec<bool> = found
        .iter()
        .map(|s| {
            equivalence
                .canonical(s)
                .map(|c| family.contains(&c))
                .unwrap_or(false)
        })
        .collect();
    CoverageReport::from_flags(height, Some(bound), &found, &covered)
}

/// Pairs of distinct triads in `[1, height]` with equal sums and equal
/// products, each pair ordered and the list sorted.
pub fn search_triads(height: u32, exec: Exec) -> Vec<([i64; 3], [i64; 3])> {
    let buckets = collide(
        3,
        1,
        height as i64,
        |t| {
            (
                t.iter().sum::<i64>(),
                t.iter().map(|&v| v as i128).product::<i128>(),
            )
        },
        exec,
    );
    let mut pairs: Vec<([i64; 3], [i64; 3])> = buckets
        .iter()
        .flat_map(|bucket| {
            bucket
                .iter()
                .tuple_combinations()
                .map(|(a, b)| ([a[0], a[1], a[2]], [b[0], b[1], b[2]]))
        })
        .collect();
    pairs.sort();
    pairs
}
