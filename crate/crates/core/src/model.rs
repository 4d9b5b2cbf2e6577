//! Candidate solutions of equal-power-sum systems, their verification and
//! canonical forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("sides have different lengths ({x} vs {y})")]
    LengthMismatch { x: usize, y: usize },
    #[error("a solution needs at least one entry per side")]
    Empty,
    #[error("exponent set must be non-empty and contain only positive exponents")]
    BadExponents,
    #[error("scale factor M must be nonzero")]
    ZeroScale,
    #[error("affine image {0} is not an integer")]
    NonInteger(BigRational),
    #[error("the all-zero solution has no canonical form")]
    AllZero,
    #[error("solutions differ in shape ({0})")]
    ShapeMismatch(String),
}

/// Two integer tuples claimed to have equal power sums for a set of
/// exponents. For the Tarry-Escott system of degree `k` the set is `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TepSolution {
    exponents: Vec<u32>,
    xs: Vec<BigInt>,
    ys: Vec<BigInt>,
}

impl TepSolution {
    /// A candidate for the degree-`k` system `j = 1..=k`.
    pub fn new(k: u32, xs: Vec<BigInt>, ys: Vec<BigInt>) -> Result<Self, ModelError> {
        Self::with_exponents((1..=k).collect(), xs, ys)
    }

    /// A candidate for an arbitrary set of exponents, e.g. `[1, 2, 4]`.
    pub fn with_exponents(
        mut exponents: Vec<u32>,
        xs: Vec<BigInt>,
        ys: Vec<BigInt>,
    ) -> Result<Self, ModelError> {
        exponents.sort_unstable();
        exponents.dedup();
        if exponents.is_empty() || exponents[0] == 0 {
            return Err(ModelError::BadExponents);
        }
        if xs.len() != ys.len() {
            return Err(ModelError::LengthMismatch {
                x: xs.len(),
                y: ys.len(),
            });
        }
        if xs.is_empty() {
            return Err(ModelError::Empty);
        }
        Ok(TepSolution { exponents, xs, ys })
    }

    pub fn from_i64(k: u32, xs: &[i64], ys: &[i64]) -> Result<Self, ModelError> {
        Self::new(
            k,
            xs.iter().map(|v| BigInt::from(*v)).collect(),
            ys.iter().map(|v| BigInt::from(*v)).collect(),
        )
    }

    pub fn xs(&self) -> &[BigInt] {
        &self.xs
    }

    pub fn ys(&self) -> &[BigInt] {
        &self.ys
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Largest exponent in the system.
    pub fn degree(&self) -> u32 {
        *self.exponents.last().unwrap()
    }

    /// Whether the exponent set is `1..=k`.
    pub fn is_consecutive(&self) -> bool {
        self.exponents.iter().copied().eq(1..=self.degree())
    }

    pub fn size(&self) -> usize {
        self.xs.len()
    }

    /// Ideal solutions have `n = k + 1` entries per side.
    pub fn is_ideal(&self) -> bool {
        self.is_consecutive() && self.size() == self.degree() as usize + 1
    }

    pub fn is_all_zero(&self) -> bool {
        self.xs.iter().chain(&self.ys).all(Zero::is_zero)
    }

    /// Multiset equality of the two sides.
    pub fn is_trivial(&self) -> bool {
        sorted(&self.xs) == sorted(&self.ys)
    }

    pub fn verify(&self) -> SigmaReport {
        let sums_x: Vec<BigInt> = self
            .exponents
            .iter()
            .map(|&j| power_sum(&self.xs, j))
            .collect();
        let sums_y: Vec<BigInt> = self
            .exponents
            .iter()
            .map(|&j| power_sum(&self.ys, j))
            .collect();
        let valid = sums_x == sums_y;
        SigmaReport {
            exponents: self.exponents.clone(),
            sums_x,
            sums_y,
            valid,
            trivial: self.is_trivial(),
        }
    }

    /// Maps every entry `v` to `M v + K`. The result must be integral.
    pub fn affine_map(&self, m: &BigRational, k: &BigRational) -> Result<TepSolution, ModelError> {
        if m.is_zero() {
            return Err(ModelError::ZeroScale);
        }
        let map = |v: &BigInt| -> Result<BigInt, ModelError> {
            let image = m * BigRational::from_integer(v.clone()) + k;
            if image.is_integer() {
                Ok(image.to_integer())
            } else {
                Err(ModelError::NonInteger(image))
            }
        };
        Ok(TepSolution {
            exponents: self.exponents.clone(),
            xs: self.xs.iter().map(map).collect::<Result<_, _>>()?,
            ys: self.ys.iter().map(map).collect::<Result<_, _>>()?,
        })
    }

    /// Shifts every entry by `t`.
    pub fn translate(&self, t: &BigInt) -> TepSolution {
        TepSolution {
            exponents: self.exponents.clone(),
            xs: self.xs.iter().map(|v| v + t).collect(),
            ys: self.ys.iter().map(|v| v + t).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> TepSolution {
        TepSolution {
            exponents: self.exponents.clone(),
            xs: self.xs.iter().map(|v| v * factor).collect(),
            ys: self.ys.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn swap_sides(&self) -> TepSolution {
        TepSolution {
            exponents: self.exponents.clone(),
            xs: self.ys.clone(),
            ys: self.xs.clone(),
        }
    }

    /// Canonical representative under per-side permutation, side swap,
    /// integer scaling and global negation: sides sorted ascending, entries
    /// divided by their common gcd, the lexicographically smaller side first,
    /// and the sign chosen so the first nonzero entry is positive. When both
    /// signs give the same leading sign (negation-symmetric solutions), the
    /// lexicographically smaller form wins.
    pub fn normalize(&self) -> Result<TepSolution, ModelError> {
        if self.is_all_zero() {
            return Err(ModelError::AllZero);
        }
        let g = self
            .xs
            .iter()
            .chain(&self.ys)
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let reduce = |side: &[BigInt], sign: &BigInt| -> Vec<BigInt> {
            sorted(&side.iter().map(|v| v / &g * sign).collect::<Vec<_>>())
        };
        let candidates = [BigInt::one(), -BigInt::one()].map(|sign| {
            let a = reduce(&self.xs, &sign);
            let b = reduce(&self.ys, &sign);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        });
        let leading_positive = |(a, b): &(Vec<BigInt>, Vec<BigInt>)| {
            a.iter()
                .chain(b)
                .find(|v| !v.is_zero())
                .is_some_and(|v| v.is_positive())
        };
        let (xs, ys) = candidates
            .into_iter()
            .min_by(|l, r| {
                leading_positive(r)
                    .cmp(&leading_positive(l))
                    .then_with(|| l.cmp(r))
            })
            .unwrap();
        Ok(TepSolution {
            exponents: self.exponents.clone(),
            xs,
            ys,
        })
    }

    /// Canonical representative that additionally forgets translation: the
    /// minimum entry is shifted to zero before [`normalize`](Self::normalize).
    pub fn normalize_affine(&self) -> Result<TepSolution, ModelError> {
        let forms = [BigInt::one(), -BigInt::one()].map(|sign| {
            let neg = self.scale(&sign);
            let min = neg.xs.iter().chain(&neg.ys).min().unwrap().clone();
            neg.translate(&-min).normalize()
        });
        let [a, b] = forms;
        let (a, b) = (a?, b?);
        Ok(if (&a.xs, &a.ys) <= (&b.xs, &b.ys) {
            a
        } else {
            b
        })
    }

    /// Text key of the canonical form used for de-duplication.
    pub fn canonical_key(&self) -> Result<String, ModelError> {
        Ok(self.normalize()?.to_string())
    }

    /// Equality of canonical forms; two all-zero solutions count as equal.
    pub fn is_scalar_multiple(&self, other: &TepSolution) -> Result<bool, ModelError> {
        if self.size() != other.size() || self.exponents != other.exponents {
            return Err(ModelError::ShapeMismatch(format!(
                "n={} k={} vs n={} k={}",
                self.size(),
                self.degree(),
                other.size(),
                other.degree()
            )));
        }
        match (self.is_all_zero(), other.is_all_zero()) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => Ok(self.normalize()? == other.normalize()?),
        }
    }
}

impl fmt::Display for TepSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({};{})", join(&self.xs), join(&self.ys))
    }
}

/// Per-exponent sums of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaReport {
    pub exponents: Vec<u32>,
    pub sums_x: Vec<BigInt>,
    pub sums_y: Vec<BigInt>,
    pub valid: bool,
    pub trivial: bool,
}

impl SigmaReport {
    /// The common sums, when the solution is valid.
    pub fn sigma(&self) -> Option<&[BigInt]> {
        self.valid.then_some(self.sums_x.as_slice())
    }

    /// First exponent at which the sides disagree.
    pub fn first_failure(&self) -> Option<u32> {
        self.exponents
            .iter()
            .zip(self.sums_x.iter().zip(&self.sums_y))
            .find(|(_, (x, y))| x != y)
            .map(|(j, _)| *j)
    }
}

pub fn power_sum(values: &[BigInt], j: u32) -> BigInt {
    values
        .iter()
        .map(|v| num_traits::pow(v.clone(), j as usize))
        .sum()
}

fn sorted(v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    out.sort();
    out
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    /// Valid degree-2 solutions from Dickson's parametrization.
    fn arb_valid() -> impl Strategy<Value = TepSolution> {
        prop::array::uniform5(-30i64..=30).prop_map(|[a, b, c, d, g]| {
            TepSolution::from_i64(
                2,
                &[a * d + c, a * g + b * d + c, b * g + c],
                &[a * d + b * g + c, b * d + c, a * g + c],
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn affine_preserves_validity(
            s in arb_valid(),
            mn in -9i64..=9, md in 1i64..=9, kn in -50i64..=50, kd in 1i64..=9,
        ) {
            prop_assume!(mn != 0);
            let (m, k) = (BigRational::new(mn.into(), md.into()), BigRational::new(kn.into(), kd.into()));
            let image = |side: &[BigInt]| -> Vec<BigRational> {
                side.iter().map(|v| &m * BigRational::from_integer(v.clone()) + &k).collect()
            };
            let (xs, ys) = (image(s.xs()), image(s.ys()));
            for j in 1..=2 {
                let sum = |v: &[BigRational]| v.iter().map(|x| num_traits::pow(x.clone(), j)).sum::<BigRational>();
                prop_assert_eq!(sum(&xs), sum(&ys));
            }
            match s.affine_map(&m, &k) {
                Ok(mapped) => prop_assert!(mapped.verify().valid),
                Err(ModelError::NonInteger(_)) => {
                    prop_assert!(xs.iter().chain(&ys).any(|v| !v.is_integer()));
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
            // Lifting by the denominators always lands on integers.
            let lifted = s.scale(&BigInt::from(md * kd)).affine_map(&m, &BigRational::from_integer(kn.into()));
            prop_assert!(lifted.unwrap().verify().valid);
        }

        #[test]
        fn translation_preserves_validity(s in arb_valid(), t in -1000i64..=1000) {
            prop_assert!(s.translate(&BigInt::from(t)).verify().valid);
        }
    }

    proptest! {
        #[test]
        fn verify_invariant_under_permutation_and_swap(
            s in arb_valid(),
            rot in 0usize..3,
        ) {
            let mut xs = s.xs().to_vec();
            xs.rotate_left(rot);
            let mut ys = s.ys().to_vec();
            ys.reverse();
            let permuted = TepSolution::new(2, xs, ys).unwrap();
            prop_assert_eq!(permuted.verify().valid, s.verify().valid);
            prop_assert_eq!(s.swap_sides().verify().valid, s.verify().valid);
            let broken = TepSolution::new(2, s.xs().to_vec(), s.ys().iter().map(|v| v + 1).collect()).unwrap();
            prop_assert!(!broken.verify().valid);
        }

        #[test]
        fn normalize_constant_on_orbits(
            s in arb_valid(),
            factor in prop_oneof![-7i64..=-1, 1i64..=7],
            rot in 0usize..3,
            swap in any::<bool>(),
        ) {
            prop_assume!(!s.is_all_zero());
            let canon = s.normalize().unwrap();
            prop_assert_eq!(canon.normalize().unwrap(), canon.clone());
            let mut xs = s.xs().to_vec();
            xs.rotate_left(rot);
            let mut moved = TepSolution::new(2, xs, s.ys().to_vec()).unwrap().scale(&BigInt::from(factor));
            if swap {
                moved = moved.swap_sides();
            }
            prop_assert_eq!(moved.normalize().unwrap(), canon);
        }
    }
}
