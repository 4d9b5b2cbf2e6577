//! Parametric families of Tarry-Escott solutions.
//!
//! Each family is written once over [`Ring`], so the same formulas produce
//! integer solutions here and symbolic solutions in the identity suite.
//! Entry order follows the published display order (x₁, x₂, … then y₁, y₂, …).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exactmath::Ring;
use crate::model::TepSolution;

/// Parameters `p, q, r, a, b, c` of the degree-2 and degree-(1,2,4) families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deg2Params {
    #[serde(with = "crate::record::bigint_str")]
    pub p: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub q: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub r: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub a: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub b: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub c: BigInt,
}

/// Dickson's five parameters `A, B, C, D, G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct DicksonParams {
    #[serde(with = "crate::record::bigint_str")]
    pub A: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub B: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub C: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub D: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub G: BigInt,
}

/// Four parameters `p, q, r, s` of the triad and degree-3 families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadParams {
    #[serde(with = "crate::record::bigint_str")]
    pub p: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub q: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub r: BigInt,
    #[serde(with = "crate::record::bigint_str")]
    pub s: BigInt,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

impl Deg2Params {
    pub fn new(v: [i64; 6]) -> Self {
        Self::from_array(v.map(big))
    }

    pub fn from_array([p, q, r, a, b, c]: [BigInt; 6]) -> Self {
        Deg2Params { p, q, r, a, b, c }
    }

    pub fn to_array(&self) -> [BigInt; 6] {
        [
            self.p.clone(),
            self.q.clone(),
            self.r.clone(),
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
        ]
    }
}

impl DicksonParams {
    pub fn new(v: [i64; 5]) -> Self {
        Self::from_array(v.map(big))
    }

    #[allow(non_snake_case)]
    pub fn from_array([A, B, C, D, G]: [BigInt; 5]) -> Self {
        DicksonParams { A, B, C, D, G }
    }

    pub fn to_array(&self) -> [BigInt; 5] {
        [
            self.A.clone(),
            self.B.clone(),
            self.C.clone(),
            self.D.clone(),
            self.G.clone(),
        ]
    }
}

impl QuadParams {
    pub fn new(v: [i64; 4]) -> Self {
        Self::from_array(v.map(big))
    }

    pub fn from_array([p, q, r, s]: [BigInt; 4]) -> Self {
        QuadParams { p, q, r, s }
    }

    pub fn to_array(&self) -> [BigInt; 4] {
        [
            self.p.clone(),
            self.q.clone(),
            self.r.clone(),
            self.s.clone(),
        ]
    }
}

/// Two triples with equal sums of squares and equal products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriadPair {
    pub x: [BigInt; 3],
    pub y: [BigInt; 3],
}

impl TriadPair {
    pub fn sum_squares(side: &[BigInt; 3]) -> BigInt {
        side.iter().map(|v| v * v).sum()
    }

    pub fn product(side: &[BigInt; 3]) -> BigInt {
        side.iter().product()
    }

    pub fn holds(&self) -> bool {
        Self::sum_squares(&self.x) == Self::sum_squares(&self.y)
            && Self::product(&self.x) == Self::product(&self.y)
    }

    /// The triads of squares, which have equal sums and equal products.
    pub fn squared(&self) -> ([BigInt; 3], [BigInt; 3]) {
        let sq = |t: &[BigInt; 3]| t.clone().map(|v| &v * &v);
        (sq(&self.x), sq(&self.y))
    }
}

pub mod formulas {
    //! The families as functions of ring elements.

    use super::Ring;

    /// `fu + gv + hw`
    pub fn phi2<T: Ring>(f: &T, g: &T, h: &T, u: &T, v: &T, w: &T) -> T {
        f.clone() * u.clone() + g.clone() * v.clone() + h.clone() * w.clone()
    }

    /// `f(v - w) + g(w - u) + h(u - v)`
    pub fn psi124<T: Ring>(f: &T, g: &T, h: &T, u: &T, v: &T, w: &T) -> T {
        f.clone() * (v.clone() - w.clone())
            + g.clone() * (w.clone() - u.clone())
            + h.clone() * (u.clone() - v.clone())
    }

    /// `(ab + cd)(ac - bd)`
    pub fn phi_triad<T: Ring>(a: &T, b: &T, c: &T, d: &T) -> T {
        (a.clone() * b.clone() + c.clone() * d.clone())
            * (a.clone() * c.clone() - b.clone() * d.clone())
    }

    /// `a²bc + abc² + ac²d + acd² + b²cd + bc²d`
    pub fn phi3<T: Ring>(a: &T, b: &T, c: &T, d: &T) -> T {
        let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());
        a.power(2) * b.clone() * c.clone()
            + a.clone() * b.clone() * c.power(2)
            + a.clone() * c.power(2) * d.clone()
            + a * c.clone() * d.power(2)
            + b.power(2) * c.clone() * d.clone()
            + b * c.power(2) * d
    }

    /// `(bc - bd - cd)a² - (ac + ad - cd)b² + (ab + ad + bd)c² - (ab - ac + bc)d²`
    pub fn psi3<T: Ring>(a: &T, b: &T, c: &T, d: &T) -> T {
        let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());
        (b.clone() * c.clone() - b.clone() * d.clone() - c.clone() * d.clone()) * a.power(2)
            - (a.clone() * c.clone() + a.clone() * d.clone() - c.clone() * d.clone()) * b.power(2)
            + (a.clone() * b.clone() + a.clone() * d.clone() + b.clone() * d.clone()) * c.power(2)
            - (a.clone() * b.clone() - a.clone() * c.clone() + b.clone() * c.clone()) * d.power(2)
    }

    /// Twice the shift constant relating the two degree-3 forms:
    /// `p²(qr+qs+rs) + q²(pr+ps+rs) + r²(pq+ps+qs) + s²(pq+pr+qr)`.
    pub fn deg3_shift_doubled<T: Ring>([p, q, r, s]: &[T; 4]) -> T {
        let pair = |x: &T, y: &T| x.clone() * y.clone();
        p.power(2) * (pair(q, r) + pair(q, s) + pair(r, s))
            + q.power(2) * (pair(p, r) + pair(p, s) + pair(r, s))
            + r.power(2) * (pair(p, q) + pair(p, s) + pair(q, s))
            + s.power(2) * (pair(p, q) + pair(p, r) + pair(q, r))
    }

    type Sides<T, const N: usize> = ([T; N], [T; N]);

    /// Applies a six-argument kernel in the degree-2 permutation pattern.
    pub fn six_param_pattern<T: Ring>(
        kernel: impl Fn(&T, &T, &T, &T, &T, &T) -> T,
        [p, q, r, a, b, c]: &[T; 6],
    ) -> Sides<T, 3> {
        (
            [
                kernel(p, q, r, a, b, c),
                kernel(p, q, r, b, c, a),
                kernel(p, q, r, c, a, b),
            ],
            [
                kernel(p, q, r, a, c, b),
                kernel(p, q, r, c, b, a),
                kernel(p, q, r, b, a, c),
            ],
        )
    }

    pub fn deg2<T: Ring>(params: &[T; 6]) -> Sides<T, 3> {
        six_param_pattern(phi2, params)
    }

    pub fn eqsums124<T: Ring>(params: &[T; 6]) -> Sides<T, 3> {
        six_param_pattern(psi124, params)
    }

    pub fn deg5<T: Ring>(params: &[T; 6]) -> Sides<T, 6> {
        let (x, y) = eqsums124(params);
        let mirror = |s: [T; 3]| {
            let [a, b, c] = s;
            [a.clone(), b.clone(), c.clone(), -a, -b, -c]
        };
        (mirror(x), mirror(y))
    }

    #[allow(non_snake_case)]
    pub fn dickson<T: Ring>([A, B, C, D, G]: &[T; 5]) -> Sides<T, 3> {
        let m = |x: &T, y: &T| x.clone() * y.clone();
        (
            [
                m(A, D) + C.clone(),
                m(A, G) + m(B, D) + C.clone(),
                m(B, G) + C.clone(),
            ],
            [
                m(A, D) + m(B, G) + C.clone(),
                m(B, D) + C.clone(),
                m(A, G) + C.clone(),
            ],
        )
    }

    /// Theorem-1 parameters `(AD+AG+C, C, BD+BG+C, D, G, 0)` for Dickson's
    /// parameters.
    #[allow(non_snake_case)]
    pub fn dickson_to_deg2<T: Ring>([A, B, C, D, G]: &[T; 5]) -> [T; 6] {
        let m = |x: &T, y: &T| x.clone() * y.clone();
        [
            m(A, D) + m(A, G) + C.clone(),
            C.clone(),
            m(B, D) + m(B, G) + C.clone(),
            D.clone(),
            G.clone(),
            T::from_i64(0),
        ]
    }

    /// Applies a four-argument kernel in the degree-3 permutation pattern.
    pub fn four_param_pattern<T: Ring>(
        kernel: impl Fn(&T, &T, &T, &T) -> T,
        [p, q, r, s]: &[T; 4],
    ) -> Sides<T, 4> {
        (
            [
                kernel(p, q, r, s),
                kernel(p, r, s, q),
                kernel(p, s, q, r),
                kernel(q, r, p, s),
            ],
            [
                kernel(p, q, s, r),
                kernel(p, r, q, s),
                kernel(p, s, r, q),
                kernel(q, s, p, r),
            ],
        )
    }

    pub fn triads<T: Ring>([p, q, r, s]: &[T; 4]) -> Sides<T, 3> {
        (
            [
                phi_triad(p, q, r, s),
                phi_triad(p, r, s, q),
                phi_triad(p, s, q, r),
            ],
            [
                phi_triad(p, q, s, r),
                phi_triad(p, r, q, s),
                phi_triad(p, s, r, q),
            ],
        )
    }

    pub fn deg3<T: Ring>(params: &[T; 4]) -> Sides<T, 4> {
        four_param_pattern(phi3, params)
    }

    pub fn deg3_interim<T: Ring>(params: &[T; 4]) -> Sides<T, 4> {
        four_param_pattern(psi3, params)
    }
}

fn solution<const N: usize>(k: u32, (x, y): ([BigInt; N], [BigInt; N])) -> TepSolution {
    TepSolution::new(k, x.to_vec(), y.to_vec()).expect("fixed-size sides")
}

pub fn gen_deg2(params: &Deg2Params) -> TepSolution {
    solution(2, formulas::deg2(&params.to_array()))
}

pub fn gen_dickson(params: &DicksonParams) -> TepSolution {
    solution(2, formulas::dickson(&params.to_array()))
}

pub fn dickson_to_theorem1(params: &DicksonParams) -> Deg2Params {
    Deg2Params::from_array(formulas::dickson_to_deg2(&params.to_array()))
}

pub fn gen_triads(params: &QuadParams) -> TriadPair {
    let (x, y) = formulas::triads(&params.to_array());
    TriadPair { x, y }
}

pub fn gen_deg3_interim(params: &QuadParams) -> TepSolution {
    solution(3, formulas::deg3_interim(&params.to_array()))
}

pub fn gen_deg3(params: &QuadParams) -> TepSolution {
    solution(3, formulas::deg3(&params.to_array()))
}

/// The shift constant `K` (half of [`formulas::deg3_shift_doubled`]), which
/// may be half-integral.
pub fn deg3_shift(params: &QuadParams) -> BigRational {
    BigRational::new(
        formulas::deg3_shift_doubled(&params.to_array()),
        BigInt::from(2),
    )
}

/// Solution of the system with exponents `{1, 2, 4}` on three entries.
pub fn gen_eqsums124(params: &Deg2Params) -> TepSolution {
    let (x, y) = formulas::eqsums124(&params.to_array());
    TepSolution::with_exponents(vec![1, 2, 4], x.to_vec(), y.to_vec()).expect("fixed-size sides")
}

pub fn gen_deg5(params: &Deg2Params) -> TepSolution {
    solution(5, formulas::deg5(&params.to_array()))
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn deg2_worked_example() {
        let s = gen_deg2(&Deg2Params::new([1, 2, 3, 1, 2, 4]));
        assert_eq!(s.xs(), ints(&[17, 13, 12]).as_slice());
        assert_eq!(s.ys(), ints(&[15, 11, 16]).as_slice());
        assert_eq!(s.verify().sigma().unwrap(), ints(&[42, 602]).as_slice());
    }

    #[test]
    fn deg2_degenerate() {
        let s = gen_deg2(&Deg2Params::new([1, 1, 1, 2, 5, 9]));
        assert!(s.xs().iter().chain(s.ys()).all(|v| *v == BigInt::from(16)));
        assert!(s.verify().trivial);
        assert!(
            gen_deg2(&Deg2Params::new([3, -1, 7, 4, 4, 4]))
                .verify()
                .trivial
        );
    }

    #[test]
    fn dickson_examples() {
        let s = gen_dickson(&DicksonParams::new([1, 2, 0, 1, 3]));
        assert_eq!(s.xs(), ints(&[1, 5, 6]).as_slice());
        assert_eq!(s.ys(), ints(&[7, 2, 3]).as_slice());
        assert!(
            gen_dickson(&DicksonParams::new([4, 4, 1, 2, 3]))
                .verify()
                .trivial
        );
        let s = gen_dickson(&DicksonParams::new([0, 0, 5, 2, 3]));
        assert!(s.xs().iter().chain(s.ys()).all(|v| *v == BigInt::from(5)));
    }

    #[test]
    fn dickson_parameter_map() {
        assert_eq!(
            dickson_to_theorem1(&DicksonParams::new([1, 2, 0, 1, 3])),
            Deg2Params::new([4, 0, 8, 1, 3, 0])
        );
        assert_eq!(
            dickson_to_theorem1(&DicksonParams::new([0, 0, 7, 2, 3])),
            Deg2Params::new([7, 7, 7, 2, 3, 0])
        );
        assert_eq!(
            dickson_to_theorem1(&DicksonParams::new([5, 6, 7, 0, 0])),
            Deg2Params::new([7, 7, 7, 0, 0, 0])
        );
    }

    #[test]
    fn triad_examples() {
        let t = gen_triads(&QuadParams::new([3, 2, 1, 0]));
        assert_eq!(t.x.to_vec(), ints(&[18, -6, 12]));
        assert_eq!(t.y.to_vec(), ints(&[-12, 18, 6]));
        assert_eq!(TriadPair::sum_squares(&t.x), BigInt::from(504));
        assert_eq!(TriadPair::product(&t.y), BigInt::from(-1296));
        assert!(t.holds());

        let t = gen_triads(&QuadParams::new([4, 3, 2, 1]));
        assert_eq!(t.x.to_vec(), ints(&[70, -22, 100]));
        assert_eq!(t.y.to_vec(), ints(&[-28, 110, 50]));
        assert_eq!(TriadPair::sum_squares(&t.x), BigInt::from(15384));
        assert_eq!(TriadPair::product(&t.x), BigInt::from(-154000));
        assert!(t.holds());

        let t = gen_triads(&QuadParams::new([6, 1, 1, 1]));
        assert!(t.x.iter().chain(&t.y).all(|v| *v == BigInt::from(35)));
    }

    #[test]
    fn deg3_examples() {
        let params = QuadParams::new([1, 2, 3, 4]);
        let s = gen_deg3(&params);
        assert_eq!(s.xs(), ints(&[228, 276, 198, 106]).as_slice());
        assert_eq!(s.ys(), ints(&[268, 186, 246, 108]).as_slice());
        let r = s.verify();
        assert!(r.valid && !r.trivial);
        assert_eq!(r.sums_x[0], BigInt::from(808));
        assert_eq!(r.sums_x[1], BigInt::from(178600));

        let s = gen_deg3(&QuadParams::new([3, 3, 3, 3]));
        assert!(s
            .xs()
            .iter()
            .chain(s.ys())
            .all(|v| *v == BigInt::from(6 * 81)));
    }

    #[test]
    fn deg3_interim_examples() {
        let params = QuadParams::new([1, 2, 3, 4]);
        let interim = gen_deg3_interim(&params);
        assert_eq!(interim.xs()[0], BigInt::from(52));
        assert!(interim.verify().valid);

        // interim = 2 * final - 2K entrywise
        let final_ = gen_deg3(&params);
        let two_k = formulas::deg3_shift_doubled(&params.to_array());
        for (i, f) in interim
            .xs()
            .iter()
            .chain(interim.ys())
            .zip(final_.xs().iter().chain(final_.ys()))
        {
            assert_eq!(*i, f * 2 - &two_k);
        }

        // and the affine map M = 1/2 with the shift K recovers the final form
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            interim.affine_map(&half, &deg3_shift(&params)).unwrap(),
            final_
        );

        // psi(a,a,a,a) = -a^4 - a^4 + 3a^4 - a^4 = 0
        let s = gen_deg3_interim(&QuadParams::new([2, 2, 2, 2]));
        assert!(s.is_all_zero() && s.verify().trivial);
    }

    #[test]
    fn eqsums124_examples() {
        let s = gen_eqsums124(&Deg2Params::new([0, 1, 3, 0, 1, 5]));
        assert_eq!(s.xs(), ints(&[2, -13, 11]).as_slice());
        assert_eq!(s.ys(), ints(&[-14, 7, 7]).as_slice());
        let r = s.verify();
        assert!(r.valid);
        assert_eq!(r.sums_x, ints(&[0, 294, 43218]));
        assert!(gen_eqsums124(&Deg2Params::new([4, 1, 9, 3, 3, 3])).is_all_zero());
    }

    #[test]
    fn eqsums124_is_substituted_deg2() {
        let (p, q, r) = (5, -3, 8);
        let sub = Deg2Params::new([r - q, p - r, q - p, 2, 7, -4]);
        assert_eq!(
            gen_deg2(&sub).xs(),
            gen_eqsums124(&Deg2Params::new([p, q, r, 2, 7, -4])).xs()
        );
    }

    #[test]
    fn deg5_examples() {
        let s = gen_deg5(&Deg2Params::new([0, 1, 3, 0, 1, 5]));
        assert_eq!(s.xs(), ints(&[2, -13, 11, -2, 13, -11]).as_slice());
        assert_eq!(s.ys(), ints(&[-14, 7, 7, 14, -7, -7]).as_slice());
        assert!(s.is_ideal());
        let r = s.verify();
        assert!(r.valid);
        // Six entries: twice the three-entry sums (0, 294, 43218) of the (1,2,4) system.
        assert_eq!(r.sums_x, ints(&[0, 588, 0, 86436, 0]));
        let z = gen_deg5(&Deg2Params::new([1, 2, 3, 6, 6, 6]));
        assert!(z.is_all_zero() && z.verify().trivial);
    }

    #[test]
    fn odd_sums_vanish() {
        let s = gen_deg5(&Deg2Params::new([7, -2, 11, 3, -5, 8]));
        let r = s.verify();
        for (j, v) in r.exponents.iter().zip(&r.sums_x) {
            if j % 2 == 1 {
                assert!(v.is_zero());
            }
        }
    }
}
