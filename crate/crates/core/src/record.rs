//! JSON records exchanged with the command line. Integers are always
//! written as decimal strings so no value is truncated to 64 bits; on input
//! both strings and plain JSON integers are accepted.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::completeness::CoverageReport;
use crate::generators::TriadPair;
use crate::model::{ModelError, TepSolution};

pub mod bigint_str {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Str(String),
        Int(i64),
        Uint(u64),
    }

    fn from_repr<E: de::Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Str(s) => BigInt::from_str(s.trim())
                .map_err(|_| E::custom(format!("`{s}` is not a decimal integer"))),
            Repr::Int(i) => Ok(BigInt::from(i)),
            Repr::Uint(u) => Ok(BigInt::from(u)),
        }
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use num_bigint::BigInt;
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        use super::Repr;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(super::from_repr)
                .collect()
        }
    }
}

/// `{"k", "x", "y", "sigma", "valid", "trivial"}`, plus `"exponents"` when the
/// exponent set is not `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponents: Option<Vec<u32>>,
    #[serde(with = "bigint_str::vec")]
    pub x: Vec<BigInt>,
    #[serde(with = "bigint_str::vec")]
    pub y: Vec<BigInt>,
    /// Power sums of the x side for each exponent (the common sums when valid).
    #[serde(with = "bigint_str::vec", default)]
    pub sigma: Vec<BigInt>,
    #[serde(default)]
    pub valid: bool,
    #[serde(default)]
    pub trivial: bool,
}

impl SolutionRecord {
    pub fn from_solution(sol: &TepSolution) -> Self {
        let report = sol.verify();
        SolutionRecord {
            k: sol.degree(),
            exponents: (!sol.is_consecutive()).then(|| sol.exponents().to_vec()),
            x: sol.xs().to_vec(),
            y: sol.ys().to_vec(),
            sigma: report.sums_x,
            valid: report.valid,
            trivial: report.trivial,
        }
    }

    /// Rebuilds the solution; the stored sigma/valid/trivial fields are
    /// ignored and recomputed by [`TepSolution::verify`].
    pub fn to_solution(&self) -> Result<TepSolution, ModelError> {
        match &self.exponents {
            Some(e) => TepSolution::with_exponents(e.clone(), self.x.clone(), self.y.clone()),
            None => TepSolution::new(self.k, self.x.clone(), self.y.clone()),
        }
    }
}

/// Output of the triad generator: equal sums of squares and equal products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadRecord {
    pub kind: String,
    #[serde(rename = "X", with = "bigint_str::vec")]
    pub x: Vec<BigInt>,
    #[serde(rename = "Y", with = "bigint_str::vec")]
    pub y: Vec<BigInt>,
    #[serde(with = "bigint_str::vec", default)]
    pub sum_squares: Vec<BigInt>,
    #[serde(with = "bigint_str::vec", default)]
    pub product: Vec<BigInt>,
    #[serde(default)]
    pub valid: bool,
}

impl TriadRecord {
    pub const KIND: &'static str = "triads";

    pub fn from_pair(t: &TriadPair) -> Self {
        TriadRecord {
            kind: Self::KIND.to_owned(),
            x: t.x.to_vec(),
            y: t.y.to_vec(),
            sum_squares: vec![TriadPair::sum_squares(&t.x), TriadPair::sum_squares(&t.y)],
            product: vec![TriadPair::product(&t.x), TriadPair::product(&t.y)],
            valid: t.holds(),
        }
    }

    pub fn to_pair(&self) -> Option<TriadPair> {
        Some(TriadPair {
            x: self.x.clone().try_into().ok()?,
            y: self.y.clone().try_into().ok()?,
        })
    }
}

/// A pair of triads found by search with equal sums and equal products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadSearchRecord {
    pub kind: String,
    #[serde(with = "bigint_str::vec")]
    pub u: Vec<BigInt>,
    #[serde(with = "bigint_str::vec")]
    pub v: Vec<BigInt>,
    #[serde(with = "bigint_str")]
    pub sum: BigInt,
    #[serde(with = "bigint_str")]
    pub product: BigInt,
}

impl TriadSearchRecord {
    pub const KIND: &'static str = "equal-sum-product";

    pub fn new(u: [i64; 3], v: [i64; 3]) -> Self {
        TriadSearchRecord {
            kind: Self::KIND.to_owned(),
            u: u.iter().map(|x| BigInt::from(*x)).collect(),
            v: v.iter().map(|x| BigInt::from(*x)).collect(),
            sum: BigInt::from(u.iter().sum::<i64>()),
            product: u.iter().map(|x| BigInt::from(*x)).product(),
        }
    }

    /// Re-checks equal sums and equal products from the entries.
    pub fn holds(&self) -> bool {
        let sum = |s: &[BigInt]| s.iter().sum::<BigInt>();
        let prod = |s: &[BigInt]| s.iter().product::<BigInt>();
        self.u.len() == 3
            && self.v.len() == 3
            && sum(&self.u) == sum(&self.v)
            && prod(&self.u) == prod(&self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRecord {
    pub height: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param_bound: Option<u32>,
    pub found: usize,
    pub covered: usize,
    /// Exact fraction `covered/found`.
    pub coverage: String,
    pub vacuous: bool,
    pub counterexamples: Vec<SolutionRecord>,
}

impl CoverageRecord {
    /// Uncovered solutions listed in full; the count is always exact.
    pub const MAX_LISTED: usize = 100;

    pub fn from_report(r: &CoverageReport) -> Self {
        CoverageRecord {
            height: r.height,
            param_bound: r.param_bound,
            found: r.found,
            covered: r.covered,
            coverage: rational_string(&r.coverage),
            vacuous: r.vacuous,
            counterexamples: r
                .uncovered
                .iter()
                .take(Self::MAX_LISTED)
                .map(SolutionRecord::from_solution)
                .collect(),
        }
    }
}

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
