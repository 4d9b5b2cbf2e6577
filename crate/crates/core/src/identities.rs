//! Symbolic verification of the parametric families.
//!
//! Every family is expanded over the integers with its parameters left as
//! variables; an identity holds exactly when the difference of the two sides
//! expands to the zero polynomial. Reports keep the residual polynomials so a
//! failure can be inspected term by term.

use std::fmt;

use crate::completeness::dickson_equivalence_residuals;
use crate::exactmath::{is_symmetric_under, ElemSymBasis, MultiPoly, Ring};
use crate::generators::formulas;

const PQR: [&str; 3] = ["p", "q", "r"];
const ABC: [&str; 3] = ["a", "b", "c"];
const PQRS: [&str; 4] = ["p", "q", "r", "s"];

/// Common sums of the degree-3 family in the elementary symmetric functions
/// of `p, q, r, s`.
pub const DEG3_SIGMA_IN_E: [&str; 3] = [
    "2*e1*e3 - 8*e4",
    "-2*e1^2*e2*e4 + 2*e1^2*e3^2 - 8*e1*e3*e4 + 4*e2^2*e4 - 2*e2*e3^2",
    "3*e1^4*e4^2 - 3*e1^3*e2*e3*e4 + 2*e1^3*e3^3 - 12*e1^2*e3^2*e4 + 6*e1*e2^2*e3*e4 \
     - 3*e1*e2*e3^3 - 24*e2^2*e4^2 + 24*e2*e3^2*e4 - 3*e3^4 + 64*e4^3",
];

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    /// `Σxʲ − Σyʲ` for each exponent checked.
    pub residuals: Vec<(u32, MultiPoly)>,
    /// Other identities, stored as `lhs − rhs`.
    pub sigma_checks: Vec<(String, MultiPoly)>,
    pub symmetry_checks: Vec<(String, bool)>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(name: &str) -> Self {
        IdentityReport {
            name: name.to_owned(),
            residuals: Vec::new(),
            sigma_checks: Vec::new(),
            symmetry_checks: Vec::new(),
            pass: false,
        }
    }

    fn check(&mut self, label: impl Into<String>, difference: MultiPoly) {
        self.sigma_checks.push((label.into(), difference));
    }

    fn symmetric(&mut self, label: &str, poly: &MultiPoly, group: &[&str]) {
        let ok = is_symmetric_under(poly, group);
        self.symmetry_checks
            .push((format!("{label} symmetric in {{{}}}", group.join(",")), ok));
    }

    fn finish(mut self) -> Self {
        self.pass = self.residuals.iter().all(|(_, r)| r.is_zero())
            && self.sigma_checks.iter().all(|(_, d)| d.is_zero())
            && self.symmetry_checks.iter().all(|(_, ok)| *ok);
        self
    }

    /// Degree of each residual (`None` for the zero polynomial).
    pub fn residual_degrees(&self) -> Vec<(u32, Option<u32>)> {
        self.residuals
            .iter()
            .map(|(j, r)| (*j, r.degree()))
            .collect()
    }

    fn absorb(&mut self, prefix: &str, other: IdentityReport) {
        self.residuals.extend(other.residuals);
        self.sigma_checks.extend(
            other
                .sigma_checks
                .into_iter()
                .map(|(l, d)| (format!("{prefix}: {l}"), d)),
        );
        self.symmetry_checks.extend(
            other
                .symmetry_checks
                .into_iter()
                .map(|(l, ok)| (format!("{prefix}: {l}"), ok)),
        );
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        for (j, r) in &self.residuals {
            writeln!(f, "  j={j}: {r}")?;
        }
        for (label, d) in &self.sigma_checks {
            writeln!(f, "  {label}: {d}")?;
        }
        for (label, ok) in &self.symmetry_checks {
            writeln!(f, "  {label}: {ok}")?;
        }
        Ok(())
    }
}

pub fn power_sum_poly(side: &[MultiPoly], j: u32) -> MultiPoly {
    side.iter()
        .fold(MultiPoly::zero(), |acc, v| acc + v.power(j))
}

/// Power-sum residuals of a symbolic solution for the given exponents.
pub fn check_power_sums(
    name: &str,
    xs: &[MultiPoly],
    ys: &[MultiPoly],
    exponents: &[u32],
) -> IdentityReport {
    let mut report = IdentityReport::new(name);
    report.residuals = exponents
        .iter()
        .map(|&j| (j, power_sum_poly(xs, j) - power_sum_poly(ys, j)))
        .collect();
    report.finish()
}

fn parse(src: &str) -> MultiPoly {
    MultiPoly::parse(src).expect("well-formed built-in formula")
}

fn six_params() -> [MultiPoly; 6] {
    MultiPoly::vars(["p", "q", "r", "a", "b", "c"])
}

fn four_params() -> [MultiPoly; 4] {
    MultiPoly::vars(PQRS)
}

/// Multiset equality of two lists of polynomials.
fn same_multiset(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
    let mut rest: Vec<&MultiPoly> = b.iter().collect();
    a.len() == b.len()
        && a.iter().all(|x| match rest.iter().position(|y| *y == x) {
            Some(i) => {
                rest.swap_remove(i);
                true
            }
            None => false,
        })
}

fn swap_all(side: &[MultiPoly], u: &str, v: &str) -> Vec<MultiPoly> {
    side.iter().map(|e| e.swap_vars(u, v)).collect()
}

/// Theorem 1: the six-parameter family solves the degree-2 system, with
/// common sums `(p+q+r)(a+b+c)` and
/// `(p²+q²+r²)(a²+b²+c²) + 2(pq+qr+rp)(ab+bc+ca)`.
pub fn prove_theorem1() -> IdentityReport {
    let (xs, ys) = formulas::deg2(&six_params());
    let mut report = check_power_sums("Theorem 1 (degree 2)", &xs, &ys, &[1, 2]);

    let s1 = power_sum_poly(&xs, 1);
    let s2 = power_sum_poly(&xs, 2);
    report.check("sigma1 - (p+q+r)(a+b+c)", &s1 - parse("(p+q+r)*(a+b+c)"));
    report.check(
        "sigma2 - closed form",
        &s2 - parse("(p^2+q^2+r^2)*(a^2+b^2+c^2) + 2*(p*q+q*r+r*p)*(a*b+b*c+c*a)"),
    );
    for (label, s) in [("sigma1", &s1), ("sigma2", &s2)] {
        report.symmetric(label, s, &PQR);
        report.symmetric(label, s, &ABC);
    }

    // A transposition within either parameter group exchanges the two sides.
    for (u, v) in [("a", "b"), ("b", "c"), ("p", "q"), ("q", "r")] {
        let ok =
            same_multiset(&swap_all(&xs, u, v), &ys) && same_multiset(&swap_all(&ys, u, v), &xs);
        report
            .symmetry_checks
            .push((format!("swapping {u},{v} exchanges x and y"), ok));
    }

    for (i, d) in dickson_equivalence_residuals().into_iter().enumerate() {
        report.check(format!("entry {} minus (D+G) times Dickson", i + 1), d);
    }
    report.finish()
}

/// Theorem 2: two triads with equal sums of squares and equal products,
/// together with the derivation from the general ansatz in `f, g, h`.
pub fn prove_theorem2() -> IdentityReport {
    let params = four_params();
    let (x, y) = formulas::triads(&params);
    let mut report = IdentityReport::new("Theorem 2 (triads)");
    report
        .residuals
        .push((2, power_sum_poly(&x, 2) - power_sum_poly(&y, 2)));
    let prod = |t: &[MultiPoly]| t.iter().fold(MultiPoly::constant(1), |acc, v| acc * v);
    report.check("X1X2X3 - Y1Y2Y3", prod(&x) - prod(&y));

    let squares = |t: &[MultiPoly]| t.iter().map(|v| v.power(2)).collect::<Vec<_>>();
    let (xs2, ys2) = (squares(&x), squares(&y));
    report.check(
        "squared triads: equal sums",
        power_sum_poly(&xs2, 1) - power_sum_poly(&ys2, 1),
    );
    report.check("squared triads: equal products", prod(&xs2) - prod(&ys2));

    let ansatz = TriadAnsatz::general();
    report.check("ansatz: X1X2X3 - Y1Y2Y3", ansatz.product_residual());
    report.check(
        "ansatz: sum of squares residual - displayed combination",
        ansatz.squares_residual() - ansatz.displayed_combination(),
    );
    report.check(
        "ansatz: displayed combination - regrouped form",
        ansatz.displayed_combination() - ansatz.regrouped_combination(),
    );

    let [f, g, h] = TriadAnsatz::chosen_fgh();
    let (m1, m2, m3) = TriadAnsatz::brackets();
    report.check(
        "f^2 - h^2 - ((pr+qs)^2 - (pq+rs)^2)",
        f.power(2) - h.power(2) - (m2.power(2) - m1.power(2)),
    );
    report.check(
        "g^2 - h^2 + ((pq+rs)^2 - (ps+qr)^2)",
        g.power(2) - h.power(2) + (m1.power(2) - m3.power(2)),
    );

    let chosen = TriadAnsatz::with_fgh(f, g, h);
    report.check("chosen ansatz: squares residual", chosen.squares_residual());
    for (i, (a, b)) in chosen
        .x
        .iter()
        .zip(&x)
        .chain(chosen.y.iter().zip(&y))
        .enumerate()
    {
        report.check(
            format!("chosen ansatz entry {} - family entry", i + 1),
            a - b,
        );
    }
    report.finish()
}

/// `X = (f·m1, g·m2, h·m3)`, `Y = (g·m1, h·m2, f·m3)` with
/// `m1 = pq+rs, m2 = pr+qs, m3 = ps+qr`.
#[derive(Clone, Debug)]
pub struct TriadAnsatz {
    pub f: MultiPoly,
    pub g: MultiPoly,
    pub h: MultiPoly,
    pub x: [MultiPoly; 3],
    pub y: [MultiPoly; 3],
}

impl TriadAnsatz {
    pub fn brackets() -> (MultiPoly, MultiPoly, MultiPoly) {
        (parse("p*q + r*s"), parse("p*r + q*s"), parse("p*s + q*r"))
    }

    /// `f = pr − qs, g = ps − qr, h = pq − rs`.
    pub fn chosen_fgh() -> [MultiPoly; 3] {
        [parse("p*r - q*s"), parse("p*s - q*r"), parse("p*q - r*s")]
    }

    pub fn with_fgh(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> Self {
        let (m1, m2, m3) = Self::brackets();
        TriadAnsatz {
            x: [&f * &m1, &g * &m2, &h * &m3],
            y: [&g * &m1, &h * &m2, &f * &m3],
            f,
            g,
            h,
        }
    }

    /// `f, g, h` left as free variables.
    pub fn general() -> Self {
        let [f, g, h] = MultiPoly::vars(["f", "g", "h"]);
        Self::with_fgh(f, g, h)
    }

    pub fn squares_residual(&self) -> MultiPoly {
        power_sum_poly(&self.x, 2) - power_sum_poly(&self.y, 2)
    }

    pub fn product_residual(&self) -> MultiPoly {
        let prod = |t: &[MultiPoly]| t.iter().fold(MultiPoly::constant(1), |acc, v| acc * v);
        prod(&self.x) - prod(&self.y)
    }

    /// `m1²(f²−g²) + m2²(g²−h²) + m3²(h²−f²)`
    pub fn displayed_combination(&self) -> MultiPoly {
        let (m1, m2, m3) = Self::brackets();
        let (f2, g2, h2) = (self.f.power(2), self.g.power(2), self.h.power(2));
        m1.power(2) * (&f2 - &g2) + m2.power(2) * (&g2 - &h2) + m3.power(2) * (&h2 - &f2)
    }

    /// `(m1² − m3²)(f² − h²) + (m2² − m1²)(g² − h²)`
    pub fn regrouped_combination(&self) -> MultiPoly {
        let (m1, m2, m3) = Self::brackets();
        let (f2, g2, h2) = (self.f.power(2), self.g.power(2), self.h.power(2));
        (m1.power(2) - m3.power(2)) * (&f2 - &h2) + (m2.power(2) - m1.power(2)) * (&g2 - &h2)
    }
}

/// Applies the change of variables `x = (X1−X2−X3, −X1+X2−X3, −X1−X2+X3, X1+X2+X3)`
/// to a triad.
pub fn triads_to_quad(t: &[MultiPoly; 3]) -> [MultiPoly; 4] {
    let [a, b, c] = t;
    [a - b - c, b - a - c, c - a - b, a + b + c]
}

/// Theorem 3: the four-parameter degree-3 family, its common sums in the
/// elementary symmetric functions, and its relation to the interim form.
pub fn prove_theorem3() -> IdentityReport {
    let params = four_params();
    let (xs, ys) = formulas::deg3(&params);
    let mut report = check_power_sums("Theorem 3 (degree 3)", &xs, &ys, &[1, 2, 3]);

    let basis = ElemSymBasis::new(&PQRS);
    for (j, formula) in (1u32..).zip(DEG3_SIGMA_IN_E) {
        let sigma = power_sum_poly(&xs, j);
        let in_e = parse(formula);
        report.check(
            format!("sigma{j} - e-formula (back-substituted)"),
            &sigma - basis.back_substitute(&in_e),
        );
        match basis.decompose(&sigma) {
            Ok(d) => report.check(format!("decompose(sigma{j}) - e-formula"), d - in_e),
            Err(e) => report.check(format!("decompose(sigma{j}) failed: {e}"), sigma.clone()),
        }
        report.symmetric(&format!("sigma{j}"), &sigma, &PQRS);
    }

    let (ix, iy) = formulas::deg3_interim(&params);
    let interim = check_power_sums("interim", &ix, &iy, &[1, 2, 3]);
    for (j, r) in interim.residuals {
        report.check(format!("interim j={j}"), r);
    }
    let shift2 = formulas::deg3_shift_doubled(&params);
    for (i, (fin, int)) in xs.iter().chain(&ys).zip(ix.iter().chain(&iy)).enumerate() {
        report.check(
            format!("slot {}: 2*phi - psi - 2K", i + 1),
            fin.scale(&2.into()) - int - &shift2,
        );
    }

    // The interim form is the triad family under the linear change of variables.
    let (tx, ty) = formulas::triads(&params);
    for (i, (a, b)) in triads_to_quad(&tx)
        .iter()
        .chain(&triads_to_quad(&ty))
        .zip(ix.iter().chain(&iy))
        .enumerate()
    {
        report.check(
            format!("slot {}: triad change of variables - psi", i + 1),
            a - b,
        );
    }
    report.finish()
}

fn eq26_factors() -> (MultiPoly, MultiPoly) {
    (
        parse("p^2 + q^2 + r^2 - p*q - q*r - r*p"),
        parse("a^2 + b^2 + c^2 - a*b - b*c - c*a"),
    )
}

/// Theorem 4: three entries with equal sums for exponents 1, 2 and 4.
pub fn prove_theorem4() -> IdentityReport {
    let params = six_params();
    let (xs, ys) = formulas::eqsums124(&params);
    let mut report = check_power_sums("Theorem 4 (exponents 1,2,4)", &xs, &ys, &[1, 2, 4]);

    let (pp, qq) = eq26_factors();
    let s1 = power_sum_poly(&xs, 1);
    let s2 = power_sum_poly(&xs, 2);
    let s4 = power_sum_poly(&xs, 4);
    report.check("sigma1", s1);
    report.check("sigma2 - 2PQ", &s2 - (&pp * &qq).scale(&2.into()));
    report.check(
        "sigma4 - 2P^2Q^2",
        &s4 - (pp.power(2) * qq.power(2)).scale(&2.into()),
    );
    report.check("2*sigma4 - sigma2^2", s4.scale(&2.into()) - s2.power(2));
    for (label, s) in [("sigma2", &s2), ("sigma4", &s4)] {
        report.symmetric(label, s, &PQR);
        report.symmetric(label, s, &ABC);
    }

    // Substituting p -> r-q, q -> p-r, r -> q-p into the degree-2 family.
    let [p, q, r, a, b, c] = params.clone();
    let shifted = [&r - &q, &p - &r, &q - &p, a, b, c];
    let (dx, dy) = formulas::deg2(&shifted);
    for (i, (u, v)) in dx.iter().chain(&dy).zip(xs.iter().chain(&ys)).enumerate() {
        report.check(
            format!("entry {}: substituted degree-2 - family", i + 1),
            u - v,
        );
    }
    report.finish()
}

/// Theorem 5: the degree-5 ideal family obtained by appending negatives.
pub fn prove_theorem5() -> IdentityReport {
    let params = six_params();
    let (xs, ys) = formulas::deg5(&params);
    let mut report = check_power_sums("Theorem 5 (degree 5)", &xs, &ys, &[1, 2, 3, 4, 5]);

    for j in [1, 3, 5] {
        report.check(format!("sigma{j}"), power_sum_poly(&xs, j));
    }
    for (i, side) in [&xs, &ys].into_iter().enumerate() {
        for k in 0..3 {
            report.check(
                format!("{}{} + {}{}", ["x", "y"][i], k + 4, ["x", "y"][i], k + 1),
                &side[k + 3] + &side[k],
            );
        }
    }

    // The six-entry sums are twice those of the underlying (1,2,4) system.
    let (pp, qq) = eq26_factors();
    let s2 = power_sum_poly(&xs, 2);
    let s4 = power_sum_poly(&xs, 4);
    report.check("sigma2 - 4PQ", &s2 - (&pp * &qq).scale(&4.into()));
    report.check(
        "sigma4 - 4P^2Q^2",
        &s4 - (pp.power(2) * qq.power(2)).scale(&4.into()),
    );
    report.check("4*sigma4 - sigma2^2", s4.scale(&4.into()) - s2.power(2));
    let half = &xs[..3];
    let (h2, h4) = (power_sum_poly(half, 2), power_sum_poly(half, 4));
    report.check(
        "reduced system: 2*sigma4 - sigma2^2",
        h4.scale(&2.into()) - h2.power(2),
    );
    for (label, s) in [("sigma2", &s2), ("sigma4", &s4)] {
        report.symmetric(label, s, &PQR);
        report.symmetric(label, s, &ABC);
    }
    report.finish()
}

/// Theorems 4 and 5 as a single report.
pub fn prove_theorem4_5() -> IdentityReport {
    let mut report = IdentityReport::new("Theorems 4-5");
    report.absorb("Theorem 4", prove_theorem4());
    report.absorb("Theorem 5", prove_theorem5());
    report.finish()
}

/// The five theorem reports in order.
pub fn prove_all() -> Vec<IdentityReport> {
    vec![
        prove_theorem1(),
        prove_theorem2(),
        prove_theorem3(),
        prove_theorem4(),
        prove_theorem5(),
    ]
}

/// Single-sign mutations and over-claims that must all fail.
pub mod negative {
    use super::*;

    /// Degree-2 family with the first x entry negated.
    pub fn theorem1_sign_flip() -> IdentityReport {
        let (mut xs, ys) = formulas::deg2(&six_params());
        xs[0] = -xs[0].clone();
        check_power_sums("Theorem 1, first entry negated", &xs, &ys, &[1, 2])
    }

    /// The degree-2 family checked at exponent 3.
    pub fn theorem1_cubes() -> IdentityReport {
        let (xs, ys) = formulas::deg2(&six_params());
        check_power_sums("Theorem 1 at j=3", &xs, &ys, &[3])
    }

    /// Triad family with `bd` replaced by `bc` in `(ab + cd)(ac − bd)`.
    pub fn theorem2_sign_flip() -> IdentityReport {
        let mutated = |a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly| {
            (a * b + c * d) * (a * c - b * c)
        };
        let [p, q, r, s] = four_params();
        let x = [
            mutated(&p, &q, &r, &s),
            mutated(&p, &r, &s, &q),
            mutated(&p, &s, &q, &r),
        ];
        let y = [
            mutated(&p, &q, &s, &r),
            mutated(&p, &r, &q, &s),
            mutated(&p, &s, &r, &q),
        ];
        check_power_sums("Theorem 2, bc for bd in phi", &x, &y, &[2])
    }

    /// The ansatz with `f` and `g` exchanged: products still agree, squares
    /// do not.
    pub fn theorem2_swapped_fg() -> (MultiPoly, MultiPoly) {
        let [f, g, h] = TriadAnsatz::chosen_fgh();
        let swapped = TriadAnsatz::with_fgh(g, f, h);
        (swapped.product_residual(), swapped.squares_residual())
    }

    /// Degree-3 family with the sign of the `b²cd` term flipped.
    pub fn theorem3_sign_flip() -> IdentityReport {
        let mutated = |a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly| {
            formulas::phi3(a, b, c, d) - (b.power(2) * c * d).scale(&2.into())
        };
        let (xs, ys) = formulas::four_param_pattern(mutated, &four_params());
        check_power_sums("Theorem 3, sign-flipped phi", &xs, &ys, &[1, 2, 3])
    }

    /// Doubled degree-3 family with the shift dropped on one side only:
    /// `x = psi = 2φ − 2K` against `y = 2φ`.
    pub fn theorem3_drop_shift() -> IdentityReport {
        let params = four_params();
        let (ix, _) = formulas::deg3_interim(&params);
        let (_, fy) = formulas::deg3(&params);
        let doubled: Vec<MultiPoly> = fy.iter().map(|v| v.scale(&2.into())).collect();
        let mut report = check_power_sums("Theorem 3 without K on one side", &ix, &doubled, &[1]);
        let (fx, _) = formulas::deg3(&params);
        report.check("2*phi - psi (K dropped)", fx[0].scale(&2.into()) - &ix[0]);
        report.finish()
    }

    /// Exponent-(1,2,4) family with the first x entry negated.
    pub fn theorem4_sign_flip() -> IdentityReport {
        let (mut xs, ys) = formulas::eqsums124(&six_params());
        xs[0] = -xs[0].clone();
        check_power_sums("Theorem 4, first entry negated", &xs, &ys, &[1, 2, 4])
    }

    /// The (1,2,4) family checked at exponent 3.
    pub fn theorem4_cubes() -> IdentityReport {
        let (xs, ys) = formulas::eqsums124(&six_params());
        check_power_sums("Theorem 4 at j=3", &xs, &ys, &[3])
    }

    /// Degree-5 family with `x4 = +x1` instead of `−x1`.
    pub fn theorem5_sign_flip() -> IdentityReport {
        let (x, y) = formulas::eqsums124(&six_params());
        let extend = |s: [MultiPoly; 3]| {
            let [a, b, c] = s;
            vec![a.clone(), b.clone(), c.clone(), a, -b, -c]
        };
        check_power_sums(
            "Theorem 5, x4 = +x1",
            &extend(x),
            &extend(y),
            &[1, 2, 3, 4, 5],
        )
    }

    pub fn all() -> Vec<IdentityReport> {
        vec![
            theorem1_sign_flip(),
            theorem1_cubes(),
            theorem2_sign_flip(),
            theorem3_sign_flip(),
            theorem3_drop_shift(),
            theorem4_sign_flip(),
            theorem4_cubes(),
            theorem5_sign_flip(),
        ]
    }
}
