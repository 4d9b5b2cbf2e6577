//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors. The variables of a
//! polynomial are kept sorted by the global variable order (see [`Var`]) and
//! only variables that actually occur are stored, so two polynomials are
//! equal exactly when their term maps are equal. The zero polynomial has no
//! terms and no variables.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Ring};

/// Named variables that come first in the global order, in this order.
/// Elementary symmetric variables `e1, e2, ...` follow, then everything else
/// by name.
const GLOBAL_ORDER: &[&str] = &[
    "p", "q", "r", "s", "a", "b", "c", "A", "B", "C", "D", "G", "M", "K", "f", "g", "h", "t", "u",
    "v", "w",
];

/// A polynomial variable, ordered by the global variable order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn rank(&self) -> (usize, usize) {
        if let Some(i) = GLOBAL_ORDER.iter().position(|v| *v == self.0) {
            return (0, i);
        }
        if let Some(idx) = self
            .0
            .strip_prefix('e')
            .and_then(|d| d.parse::<usize>().ok())
        {
            return (1, idx);
        }
        (2, 0)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        MultiPoly {
            vars: vec![Var::new(name)],
            terms: BTreeMap::from([(vec![1], BigInt::one())]),
        }
    }

    /// Convenience for building several variables at once.
    pub fn vars<const N: usize>(names: [&str; N]) -> [MultiPoly; N] {
        names.map(MultiPoly::var)
    }

    /// Builds a polynomial from `(coefficient, [(variable, exponent)])` pairs.
    pub fn from_terms<'a, I, M>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, M)>,
        M: IntoIterator<Item = (&'a str, u32)>,
    {
        terms
            .into_iter()
            .fold(MultiPoly::zero(), |acc, (coeff, mono)| {
                let m = mono
                    .into_iter()
                    .fold(MultiPoly::constant(coeff), |m, (v, e)| {
                        m * MultiPoly::var(v).power(e)
                    });
                acc + m
            })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The variables that occur in the polynomial, in global order.
    pub fn variables(&self) -> &[Var] {
        &self.vars
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Iterates `(coefficient, [(variable, exponent)])` from the lexicographically
    /// largest monomial down, skipping zero exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, Vec<(&Var, u32)>)> + '_ {
        self.terms.iter().rev().map(move |(exps, c)| {
            let mono = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| (v, *e))
                .collect();
            (c, mono)
        })
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub(crate) fn from_raw(vars: Vec<Var>, terms: BTreeMap<Exponents, BigInt>) -> Self {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]));
        let mut p = MultiPoly { vars, terms };
        p.terms.retain(|_, c| !c.is_zero());
        p.compact();
        p
    }

    /// Drops variables that no longer occur in any term.
    fn compact(&mut self) {
        let n = self.vars.len();
        let used: Vec<bool> = (0..n)
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|u| *u) {
            return;
        }
        self.vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, u)| **u)
            .map(|(v, _)| v.clone())
            .collect();
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| {
                let e = e
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, u)| **u)
                    .map(|(x, _)| x)
                    .collect();
                (e, c)
            })
            .collect();
    }

    /// Re-keys this polynomial's exponent vectors onto `vars`, which must be a
    /// sorted superset of `self.vars`.
    fn embed(&self, vars: &[Var]) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("embedding into a superset"))
            .collect();
        let width = vars.len();
        self.terms.iter().map(move |(e, c)| {
            let mut out = vec![0; width];
            for (x, &pos) in e.iter().zip(&positions) {
                out[pos] = *x;
            }
            (out, c)
        })
    }

    fn union_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
        let mut out: Vec<Var> = a.iter().chain(b).cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    fn add_signed(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        if self.vars == other.vars {
            let mut terms = self.terms.clone();
            for (e, c) in &other.terms {
                let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
                if negate {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
            return MultiPoly::from_raw(self.vars.clone(), terms);
        }
        let vars = Self::union_vars(&self.vars, &other.vars);
        let mut terms: BTreeMap<Exponents, BigInt> =
            self.embed(&vars).map(|(e, c)| (e, c.clone())).collect();
        for (e, c) in other.embed(&vars) {
            let slot = terms.entry(e).or_insert_with(BigInt::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        MultiPoly::from_raw(vars, terms)
    }

    fn mul_poly(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let vars = Self::union_vars(&self.vars, &other.vars);
        let lhs: Vec<(Exponents, &BigInt)> = self.embed(&vars).collect();
        let rhs: Vec<(Exponents, &BigInt)> = other.embed(&vars).collect();
        let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(lhs.len() * rhs.len());
        for (ea, ca) in &lhs {
            for (eb, cb) in &rhs {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let prod = *ca * *cb;
                acc.entry(e).and_modify(|c| *c += &prod).or_insert(prod);
            }
        }
        MultiPoly::from_raw(vars, acc.into_iter().collect())
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `k`; `None` if some coefficient
    /// is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<MultiPoly> {
        if k.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !(c % k).is_zero() {
                return None;
            }
            terms.insert(e.clone(), c / k);
        }
        Some(MultiPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Evaluates at an integer point. Every variable that occurs must be
    /// assigned.
    pub fn eval<K>(&self, assignment: &HashMap<K, BigInt>) -> Result<BigInt, PolyError>
    where
        K: std::borrow::Borrow<str> + std::hash::Hash + Eq,
    {
        let values: Vec<&BigInt> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v.name())
                    .ok_or_else(|| PolyError::MissingVariable(v.name().to_owned()))
            })
            .collect::<Result<_, _>>()?;
        let mut powers: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| vec![BigInt::one(), (*v).clone()])
            .collect();
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= x as usize {
                    let next = table.last().unwrap() * values[i];
                    table.push(next);
                }
                term *= &table[x as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces every variable by its image. All occurring variables must be
    /// mapped.
    pub fn substitute(&self, map: &HashMap<Var, MultiPoly>) -> Result<MultiPoly, PolyError> {
        if let Some(v) = self.vars.iter().find(|v| !map.contains_key(*v)) {
            return Err(PolyError::MissingImage(v.name().to_owned()));
        }
        Ok(self.substitute_some(map))
    }

    /// Replaces the mapped variables and leaves the others in place.
    pub fn substitute_some(&self, map: &HashMap<Var, MultiPoly>) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| {
                map.get(v)
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::var(v.name()))
            })
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = images
            .into_iter()
            .map(|img| vec![MultiPoly::constant(1), img])
            .collect();
        let mut total = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= x as usize {
                    let next = table.last().unwrap() * &table[1];
                    table.push(next);
                }
                term = term * &table[x as usize];
            }
            total += term;
        }
        total
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> MultiPoly {
        let map = HashMap::from([
            (Var::new(a), MultiPoly::var(b)),
            (Var::new(b), MultiPoly::var(a)),
        ]);
        self.substitute_some(&map)
    }

    /// Renames variables according to a permutation given as `(from, to)`.
    pub fn permute_vars(&self, perm: &[(&str, &str)]) -> MultiPoly {
        let map: HashMap<Var, MultiPoly> = perm
            .iter()
            .map(|(from, to)| (Var::new(*from), MultiPoly::var(to)))
            .collect();
        self.substitute_some(&map)
    }
}

impl Ring for MultiPoly {
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(n)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, mono)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || mono.is_empty() {
                parts.push(abs.to_string());
            }
            for (v, e) in mono {
                if e == 1 {
                    parts.push(v.to_string());
                } else {
                    parts.push(format!("{v}^{e}"));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::constant(n)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(n: BigInt) -> Self {
        MultiPoly::constant(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &MultiPoly, b: &MultiPoly| a
    .add_signed(b, false));
forward_binop!(Sub, sub, |a: &MultiPoly, b: &MultiPoly| a
    .add_signed(b, true));
forward_binop!(Mul, mul, |a: &MultiPoly, b: &MultiPoly| a.mul_poly(b));

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        *self = self.add_signed(&rhs, false);
    }
}

impl SubAssign<MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: MultiPoly) {
        *self = self.add_signed(&rhs, true);
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}
