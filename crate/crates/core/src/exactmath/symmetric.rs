//! Symmetry tests and rewriting of symmetric polynomials in terms of the
//! elementary symmetric polynomials.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;

use super::{MultiPoly, PolyError, Ring, Var};

/// Returns the first adjacent transposition of `group` that changes `poly`.
pub fn violating_transposition<'a>(
    poly: &MultiPoly,
    group: &'a [&'a str],
) -> Option<(&'a str, &'a str)> {
    group
        .iter()
        .tuple_windows()
        .find(|(a, b)| poly.swap_vars(a, b) != *poly)
        .map(|(a, b)| (*a, *b))
}

/// Invariance under every permutation of `group`. Adjacent transpositions
/// generate the symmetric group, so only those are tested.
pub fn is_symmetric_under(poly: &MultiPoly, group: &[&str]) -> bool {
    violating_transposition(poly, group).is_none()
}

/// The elementary symmetric polynomials `e1..en` of a list of source variables.
#[derive(Clone, Debug)]
pub struct ElemSymBasis {
    source: Vec<String>,
    names: Vec<String>,
    elementary: Vec<MultiPoly>,
}

impl ElemSymBasis {
    pub fn new(source: &[&str]) -> Self {
        let n = source.len();
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        let elementary = (1..=n)
            .map(|i| {
                source
                    .iter()
                    .combinations(i)
                    .map(|combo| {
                        combo
                            .into_iter()
                            .fold(MultiPoly::constant(1), |acc, v| acc * MultiPoly::var(v))
                    })
                    .fold(MultiPoly::zero(), |acc, m| acc + m)
            })
            .collect();
        ElemSymBasis {
            source: source.iter().map(|s| s.to_string()).collect(),
            names,
            elementary,
        }
    }

    pub fn arity(&self) -> usize {
        self.source.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The degree-`i` elementary symmetric polynomial in the source variables
    /// (1-based).
    pub fn elementary(&self, i: usize) -> &MultiPoly {
        &self.elementary[i - 1]
    }

    /// Replaces each `e_i` by its definition in the source variables.
    pub fn back_substitute(&self, poly: &MultiPoly) -> MultiPoly {
        let map: HashMap<Var, MultiPoly> = self
            .names
            .iter()
            .zip(&self.elementary)
            .map(|(n, e)| (Var::new(n.as_str()), e.clone()))
            .collect();
        poly.substitute_some(&map)
    }

    /// Rewrites a symmetric polynomial over the elementary basis by repeatedly
    /// cancelling its lexicographically leading monomial. Variables outside the
    /// source list are carried along as coefficients.
    pub fn decompose(&self, poly: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let group: Vec<&str> = self.source.iter().map(String::as_str).collect();
        if let Some((a, b)) = violating_transposition(poly, &group) {
            return Err(PolyError::NotSymmetric {
                left: a.to_owned(),
                right: b.to_owned(),
            });
        }

        let n = self.arity();
        let mut power_cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut remainder = poly.clone();
        let mut result = MultiPoly::zero();

        while !remainder.is_zero() {
            let (lead, coeff) = leading_split(&remainder, &self.source);
            // Symmetric polynomials have a non-increasing leading exponent.
            debug_assert!(lead.windows(2).all(|w| w[0] >= w[1]));
            let mut in_e = coeff.clone();
            let mut in_source = coeff;
            for i in 0..n {
                let d = lead[i] - lead.get(i + 1).copied().unwrap_or(0);
                if d == 0 {
                    continue;
                }
                in_e = in_e * MultiPoly::var(&self.names[i]).power(d);
                let pw = power_cache
                    .entry((i, d))
                    .or_insert_with(|| self.elementary[i].power(d));
                in_source = in_source * &*pw;
            }
            remainder -= in_source;
            result += in_e;
        }
        Ok(result)
    }
}

/// Splits off the leading monomial with respect to `source` (lexicographic, in
/// the order given), returning its source exponents and the coefficient
/// polynomial in the remaining variables.
fn leading_split(poly: &MultiPoly, source: &[String]) -> (Vec<u32>, MultiPoly) {
    let vars = poly.variables();
    let source_pos: Vec<Option<usize>> = source
        .iter()
        .map(|s| vars.iter().position(|v| v.name() == s))
        .collect();
    let other: Vec<usize> = (0..vars.len())
        .filter(|i| !source_pos.contains(&Some(*i)))
        .collect();

    let key =
        |e: &Vec<u32>| -> Vec<u32> { source_pos.iter().map(|p| p.map_or(0, |i| e[i])).collect() };
    let lead = poly
        .raw_terms()
        .keys()
        .map(key)
        .max()
        .expect("nonzero polynomial");

    let other_vars: Vec<Var> = other.iter().map(|&i| vars[i].clone()).collect();
    let mut coeff_terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (e, c) in poly.raw_terms() {
        if key(e) == lead {
            let rest: Vec<u32> = other.iter().map(|&i| e[i]).collect();
            *coeff_terms.entry(rest).or_default() += c;
        }
    }
    (lead, MultiPoly::from_raw(other_vars, coeff_terms))
}

/// Convenience wrapper: decompose `poly` over the elementary symmetric
/// polynomials of `source`.
pub fn decompose_elementary(poly: &MultiPoly, source: &[&str]) -> Result<MultiPoly, PolyError> {
    ElemSymBasis::new(source).decompose(poly)
}
