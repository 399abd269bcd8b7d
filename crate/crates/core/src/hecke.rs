//! Skein polynomial of closed 3-braids by a linear fold in the Hecke algebra.
//!
//! Modulo the skein relation `v⁻¹σ − vσ⁻¹ = z`, every generator satisfies
//! `σ² = vzσ + v²` and `σ⁻¹ = v⁻²σ − v⁻¹z`, so the group algebra of `B3`
//! collapses onto the six positive permutation braids
//! `1, a, b, ab, ba, aba` (`a = σ1`, `b = σ2`). A word is folded letter by
//! letter into that basis and closed with a fixed trace table.
//!
//! The fold is generic over [`SkeinScalar`], so the same code runs on exact
//! polynomials and on the evaluation at a point of a prime field.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::poly::{Coeff, LaurentPoly2};

/// Coefficient ring of a [`HeckeVector`].
pub trait SkeinScalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += c · v^dv · z^dz · other`.
    fn add_scaled(&mut self, other: &Self, c: Coeff, dv: i32, dz: i32);
    fn mul(&self, other: &Self) -> Self;
    fn from_poly(p: &LaurentPoly2) -> Self;
}

impl SkeinScalar for LaurentPoly2 {
    fn zero() -> Self {
        LaurentPoly2::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly2::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, c: Coeff, dv: i32, dz: i32) {
        LaurentPoly2::add_scaled(self, other, c, dv, dz)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_poly(p: &LaurentPoly2) -> Self {
        p.clone()
    }
}

/// Element of `GF(2^61 − 1)` standing for the value of a polynomial at
/// `v = FP_V`, `z = FP_Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

pub const FP_MODULUS: u64 = (1 << 61) - 1;
pub const FP_V: u64 = 3;
pub const FP_Z: u64 = 5;

impl Fp {
    pub fn new(x: i128) -> Self {
        Fp(x.rem_euclid(FP_MODULUS as i128) as u64)
    }

    fn mul_raw(a: u64, b: u64) -> u64 {
        let wide = a as u128 * b as u128;
        let lo = (wide as u64) & FP_MODULUS;
        let hi = (wide >> 61) as u64;
        let s = lo + hi;
        if s >= FP_MODULUS {
            s - FP_MODULUS
        } else {
            s
        }
    }

    fn add_raw(a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= FP_MODULUS {
            s - FP_MODULUS
        } else {
            s
        }
    }

    fn pow(base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_raw(acc, b);
            }
            b = Self::mul_raw(b, b);
            e >>= 1;
        }
        acc
    }

    fn signed_pow(base: u64, e: i32) -> u64 {
        if e >= 0 {
            Self::pow(base, e as u64)
        } else {
            Self::pow(Self::pow(base, FP_MODULUS - 2), e.unsigned_abs() as u64)
        }
    }

    /// `v^dv z^dz` at the evaluation point; small exponents are tabulated.
    fn monomial(dv: i32, dz: i32) -> u64 {
        const R: i32 = 4;
        static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
        let table = TABLE.get_or_init(|| {
            let mut t = Vec::new();
            for a in -R..=R {
                for b in -R..=R {
                    t.push(Self::mul_raw(
                        Self::signed_pow(FP_V, a),
                        Self::signed_pow(FP_Z, b),
                    ));
                }
            }
            t
        });
        if dv.abs() <= R && dz.abs() <= R {
            table[((dv + R) * (2 * R + 1) + (dz + R)) as usize]
        } else {
            Self::mul_raw(Self::signed_pow(FP_V, dv), Self::signed_pow(FP_Z, dz))
        }
    }

    /// Value of `p` at the evaluation point.
    pub fn eval(p: &LaurentPoly2) -> Fp {
        let mut acc = 0;
        for (c, dv, dz) in p.terms() {
            acc = Self::add_raw(acc, Self::mul_raw(Fp::new(c).0, Self::monomial(dv, dz)));
        }
        Fp(acc)
    }
}

impl SkeinScalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add_scaled(&mut self, other: &Self, c: Coeff, dv: i32, dz: i32) {
        let m = Self::mul_raw(Fp::new(c).0, Self::monomial(dv, dz));
        self.0 = Self::add_raw(self.0, Self::mul_raw(m, other.0));
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Self::mul_raw(self.0, other.0))
    }
    fn from_poly(p: &LaurentPoly2) -> Self {
        Fp::eval(p)
    }
}

/// Positive permutation braids of `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    One = 0,
    A = 1,
    B = 2,
    AB = 3,
    BA = 4,
    ABA = 5,
}

pub const BASIS: [Basis; 6] = [
    Basis::One,
    Basis::A,
    Basis::B,
    Basis::AB,
    Basis::BA,
    Basis::ABA,
];

/// One term `coeff · v^dv · z^dz · target` of a product.
type Term = (Basis, Coeff, i32, i32);

/// Right multiplication of each basis element by `a` (column 0) and `b`
/// (column 1). Every product follows from `aba = bab` and
/// `σ² = vzσ + v²`.
const RIGHT_MUL: [[&[Term]; 2]; 6] = {
    use Basis::*;
    [
        // 1
        [&[(A, 1, 0, 0)], &[(B, 1, 0, 0)]],
        // a: a·a = vz a + v²
        [&[(A, 1, 1, 1), (One, 1, 2, 0)], &[(AB, 1, 0, 0)]],
        // b: b·b = vz b + v²
        [&[(BA, 1, 0, 0)], &[(B, 1, 1, 1), (One, 1, 2, 0)]],
        // ab: ab·b = vz ab + v² a
        [&[(ABA, 1, 0, 0)], &[(AB, 1, 1, 1), (A, 1, 2, 0)]],
        // ba: ba·a = vz ba + v² b, ba·b = bab = aba
        [&[(BA, 1, 1, 1), (B, 1, 2, 0)], &[(ABA, 1, 0, 0)]],
        // aba: aba·a = vz aba + v² ab, aba·b = bab·b = vz aba + v² ba
        [
            &[(ABA, 1, 1, 1), (AB, 1, 2, 0)],
            &[(ABA, 1, 1, 1), (BA, 1, 2, 0)],
        ],
    ]
};

/// Closure polynomials of the basis braids in `B3`:
/// `δ², δ, δ, 1, 1, vz + v²δ`.
pub fn trace_table() -> [LaurentPoly2; 6] {
    let d = LaurentPoly2::delta();
    let hopf = LaurentPoly2::monomial(1, 1, 1) + d.scale_by_monomial(1, 2, 0);
    [
        d.pow(2),
        d.clone(),
        d,
        LaurentPoly2::one(),
        LaurentPoly2::one(),
        hopf,
    ]
}

/// An element of the rank-3 Hecke algebra in the positive permutation
/// braid basis.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeVector<R: SkeinScalar = LaurentPoly2> {
    coeffs: [R; 6],
}

impl<R: SkeinScalar> HeckeVector<R> {
    pub fn unit() -> Self {
        let mut v = Self::zero();
        v.coeffs[0] = R::from_poly(&LaurentPoly2::one());
        v
    }

    pub fn zero() -> Self {
        HeckeVector {
            coeffs: std::array::from_fn(|_| R::zero()),
        }
    }

    pub fn basis(b: Basis) -> Self {
        let mut v = Self::zero();
        v.coeffs[b as usize] = R::from_poly(&LaurentPoly2::one());
        v
    }

    pub fn coeff(&self, b: Basis) -> &R {
        &self.coeffs[b as usize]
    }

    /// Right multiplication by an Artin letter `σ1^{±1}` or `σ2^{±1}`.
    ///
    /// Panics on `σ3`; use [`HeckeVector::fold_letter`] for band letters.
    pub fn mul_artin(&self, letter: Letter) -> Self {
        let col = match letter.index() {
            1 => 0,
            2 => 1,
            _ => panic!("mul_artin takes σ1 or σ2"),
        };
        let mut out = Self::zero();
        for (x, cx) in self.coeffs.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            // x·σ⁻¹ = v⁻²(x·σ) − v⁻¹z·x
            let dv_shift = if letter.is_positive() { 0 } else { -2 };
            for &(t, c, dv, dz) in RIGHT_MUL[x][col] {
                out.coeffs[t as usize].add_scaled(cx, c, dv + dv_shift, dz);
            }
            if !letter.is_positive() {
                out.coeffs[x].add_scaled(cx, -1, -1, 1);
            }
        }
        out
    }

    /// Right multiplication by a band letter; `σ3^{±1}` is expanded as
    /// `σ1⁻¹σ2^{±1}σ1`.
    pub fn fold_letter(&self, letter: Letter) -> Self {
        if letter.index() == 3 {
            self.mul_artin(Letter::neg(1))
                .mul_artin(Letter::new(2, letter.is_positive()))
                .mul_artin(Letter::pos(1))
        } else {
            self.mul_artin(letter)
        }
    }

    pub fn fold(word: &BraidWord) -> Self {
        let (artin, _) = word.to_artin();
        artin
            .letters()
            .iter()
            .fold(Self::unit(), |acc, &l| acc.mul_artin(l))
    }

    /// Closure polynomial: the trace table applied linearly.
    pub fn trace(&self) -> R {
        let table = trace_table();
        let mut acc = R::zero();
        for (c, t) in self.coeffs.iter().zip(table.iter()) {
            if !c.is_zero() {
                let prod = c.mul(&R::from_poly(t));
                acc.add_scaled(&prod, 1, 0, 0);
            }
        }
        acc
    }
}

/// Skein polynomial of the closure of `word`, normalized by `P(unknot) = 1`.
pub fn homfly(word: &BraidWord) -> LaurentPoly2 {
    HeckeVector::<LaurentPoly2>::fold(word).trace()
}

/// Same fold over a unit-cost coefficient ring: the value of the skein
/// polynomial at `v = FP_V`, `z = FP_Z` in `GF(2^61 − 1)`.
pub fn homfly_at_point(word: &BraidWord) -> Fp {
    HeckeVector::<Fp>::fold(word).trace()
}

/// Skein polynomial of the `(2, k)` torus link, the closure of `σ1^k`
/// in `B2`, from `P_k = v²P_{k−2} + vzP_{k−1}`, `P_0 = δ`, `P_1 = 1`.
pub fn torus_homfly(k: i64) -> LaurentPoly2 {
    if k < 0 {
        return torus_homfly(-k).mirror();
    }
    let mut prev = LaurentPoly2::delta();
    if k == 0 {
        return prev;
    }
    let mut cur = LaurentPoly2::one();
    for _ in 1..k {
        let next = prev.scale_by_monomial(1, 2, 0) + cur.scale_by_monomial(1, 1, 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Skein polynomial of the pretzel link `P(a1, …, ak)` with every twist
/// region oriented parallel and all crossings positive.
///
/// Parallel orientation alternates the strand direction from one region to
/// the next, so the number of regions must be even.
pub fn pretzel_homfly(twists: &[i64]) -> Result<LaurentPoly2> {
    if twists.len() < 2 {
        return Err(Error::domain(
            "a pretzel link needs at least 2 twist regions",
        ));
    }
    if twists.len() % 2 != 0 {
        return Err(Error::domain(
            "parallel orientation needs an even number of twist regions",
        ));
    }
    if let Some(&bad) = twists.iter().find(|&&a| a < 0) {
        return Err(Error::domain(format!("negative twist count {bad}")));
    }
    let mut memo = HashMap::new();
    Ok(pretzel_rec(twists.to_vec(), &mut memo))
}

fn pretzel_rec(a: Vec<i64>, memo: &mut HashMap<Vec<i64>, LaurentPoly2>) -> LaurentPoly2 {
    if let Some(p) = memo.get(&a) {
        return p.clone();
    }
    let out = if a.is_empty() {
        // closure of the zero tangle
        LaurentPoly2::delta()
    } else if let Some(i) = a.iter().position(|&x| x == 0) {
        // an empty region splits the cycle into a connected sum
        a.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(LaurentPoly2::one(), |acc, (_, &x)| acc * torus_homfly(x))
    } else if let Some(i) = a.iter().position(|&x| x >= 2) {
        // P₊ = v²P₋ + vzP₀ at a crossing of region i
        let mut minus = a.clone();
        minus[i] -= 2;
        let mut smooth = a.clone();
        smooth[i] -= 1;
        pretzel_rec(minus, memo).scale_by_monomial(1, 2, 0)
            + pretzel_rec(smooth, memo).scale_by_monomial(1, 1, 1)
    } else {
        // all regions have one crossing: switching the first one cancels it
        // against the second by a Reidemeister II move
        let minus = a[2..].to_vec();
        let mut smooth = a.clone();
        smooth[0] = 0;
        pretzel_rec(minus, memo).scale_by_monomial(1, 2, 0)
            + pretzel_rec(smooth, memo).scale_by_monomial(1, 1, 1)
    };
    memo.insert(a, out.clone());
    out
}

/// Independent skein-tree evaluation for closures of `σ1^k` in `B3`,
/// optionally followed by one `σ2^{±1}` (a Markov stabilization).
///
/// Used to check the trace table and the fold; it recurses on the exponent
/// with `P(k) = v²P(k−2) + vzP(k−1)` and its inverse for negative `k`.
pub fn skein_oracle(word: &BraidWord) -> Result<LaurentPoly2> {
    let letters = word.letters();
    let (body, stabilized) = match letters.last() {
        Some(l) if l.index() == 2 => (&letters[..letters.len() - 1], true),
        _ => (letters, false),
    };
    if body.iter().any(|l| l.index() != 1) {
        return Err(Error::domain(format!(
            "{word} is outside the skein oracle's domain"
        )));
    }
    let k: i64 = body.iter().map(|l| l.sign()).sum();
    let two_strand = skein_tree(k);
    Ok(if stabilized {
        two_strand
    } else {
        two_strand * LaurentPoly2::delta()
    })
}

fn skein_tree(k: i64) -> LaurentPoly2 {
    match k {
        0 => LaurentPoly2::delta(),
        1 => LaurentPoly2::one(),
        k if k >= 2 => {
            skein_tree(k - 2).scale_by_monomial(1, 2, 0)
                + skein_tree(k - 1).scale_by_monomial(1, 1, 1)
        }
        k => {
            // P(k) = v⁻²(P(k+2) − vzP(k+1))
            (skein_tree(k + 2) - skein_tree(k + 1).scale_by_monomial(1, 1, 1))
                .scale_by_monomial(1, -2, 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn fold_examples() {
        let unit = HeckeVector::<LaurentPoly2>::unit();
        assert_eq!(unit.mul_artin(Letter::pos(1)), HeckeVector::basis(Basis::A));
        let aa = HeckeVector::<LaurentPoly2>::basis(Basis::A).mul_artin(Letter::pos(1));
        assert_eq!(aa.coeff(Basis::A), &p("1*v^1*z^1"));
        assert_eq!(aa.coeff(Basis::One), &p("1*v^2*z^0"));
        let bab = HeckeVector::<LaurentPoly2>::basis(Basis::BA).mul_artin(Letter::pos(2));
        assert_eq!(bab, HeckeVector::basis(Basis::ABA));
    }

    #[test]
    fn inverse_letters_undo_letters() {
        for b in BASIS {
            for g in [1, 2] {
                let v = HeckeVector::<LaurentPoly2>::basis(b);
                assert_eq!(v.mul_artin(Letter::pos(g)).mul_artin(Letter::neg(g)), v);
                assert_eq!(v.mul_artin(Letter::neg(g)).mul_artin(Letter::pos(g)), v);
            }
        }
    }

    #[test]
    fn table_respects_braid_relation() {
        for b in BASIS {
            let v = HeckeVector::<LaurentPoly2>::basis(b);
            let aba = v
                .mul_artin(Letter::pos(1))
                .mul_artin(Letter::pos(2))
                .mul_artin(Letter::pos(1));
            let bab = v
                .mul_artin(Letter::pos(2))
                .mul_artin(Letter::pos(1))
                .mul_artin(Letter::pos(2));
            assert_eq!(aba, bab, "{b:?}");
        }
    }

    #[test]
    fn small_closures() {
        assert_eq!(homfly(&BraidWord::empty()), LaurentPoly2::delta().pow(2));
        assert_eq!(homfly(&w("[1 2]")), LaurentPoly2::one());
        assert_eq!(
            homfly(&w("[1 1 1 2]")),
            p("2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2")
        );
    }

    #[test]
    fn trace_table_matches_skein_oracle() {
        // each basis braid, conjugated into the oracle's domain
        let table = trace_table();
        assert_eq!(table[0], skein_oracle(&BraidWord::empty()).unwrap());
        assert_eq!(table[1], skein_oracle(&w("[1]")).unwrap());
        // σ2 = Δσ1Δ⁻¹
        assert_eq!(table[2], skein_oracle(&w("[1]")).unwrap());
        assert_eq!(table[3], skein_oracle(&w("[1 2]")).unwrap());
        // ba ~ ab
        assert_eq!(table[4], skein_oracle(&w("[1 2]")).unwrap());
        // aba ~ aab
        assert_eq!(table[5], skein_oracle(&w("[1 1 2]")).unwrap());
    }

    #[test]
    fn torus_links() {
        assert_eq!(torus_homfly(0), LaurentPoly2::delta());
        assert_eq!(torus_homfly(1), LaurentPoly2::one());
        assert_eq!(
            torus_homfly(2),
            LaurentPoly2::monomial(1, 1, 1) + LaurentPoly2::delta().scale_by_monomial(1, 2, 0)
        );
        assert_eq!(torus_homfly(3), homfly(&w("[1 1 1 2]")));
        for k in -7i64..=7 {
            let word = BraidWord::from_values(&vec![
                if k >= 0 { 1 } else { -1 };
                k.unsigned_abs() as usize
            ])
            .concat(&w("[2]"));
            assert_eq!(torus_homfly(k), homfly(&word), "k = {k}");
            assert_eq!(torus_homfly(k), skein_oracle(&word).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn oracle_domain() {
        assert_eq!(
            skein_oracle(&w("[1 1]")).unwrap(),
            torus_homfly(2) * LaurentPoly2::delta()
        );
        assert!(skein_oracle(&w("[2 1]")).is_err());
        assert!(skein_oracle(&w("[1 3]")).is_err());
    }

    #[test]
    fn mirror_substitution_on_trefoils() {
        let right = homfly(&w("[1 1 1 2]"));
        let left = homfly(&w("[-1 -1 -1 2]"));
        assert_eq!(left, right.mirror());
        assert_ne!(left, right);
    }

    #[test]
    fn pretzel_bases() {
        for q in 0..6 {
            assert_eq!(pretzel_homfly(&[0, q]).unwrap(), torus_homfly(q));
            assert_eq!(pretzel_homfly(&[q, 0]).unwrap(), torus_homfly(q));
        }
        assert_eq!(pretzel_homfly(&[1, 1]).unwrap(), torus_homfly(2));
        assert!(pretzel_homfly(&[1]).is_err());
        assert!(pretzel_homfly(&[1, 2, 3]).is_err());
        assert!(pretzel_homfly(&[1, -2]).is_err());
    }

    #[test]
    fn pretzel_with_unit_region_is_a_band_word() {
        for q in 1..=3 {
            for r in 1..=3 {
                for s in 1..=3 {
                    let values: Vec<i64> = std::iter::repeat(1)
                        .take(q)
                        .chain(std::iter::repeat(2).take(s))
                        .chain(std::iter::repeat(3).take(r))
                        .collect();
                    assert_eq!(
                        pretzel_homfly(&[1, q as i64, r as i64, s as i64]).unwrap(),
                        homfly(&BraidWord::from_values(&values)),
                        "P(1,{q},{r},{s})"
                    );
                }
            }
        }
    }

    #[test]
    fn field_evaluation_agrees_with_exact_polynomial() {
        for s in ["[]", "[1 2]", "[1 -2 3 3 -1 2 -3]", "[3 3 3 -2 -2 1 1]"] {
            let word = w(s);
            assert_eq!(homfly_at_point(&word), Fp::eval(&homfly(&word)), "{s}");
        }
    }

    fn arb_word(max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(prop::sample::select(vec![1i64, 2, 3, -1, -2, -3]), 0..max)
            .prop_map(|v| BraidWord::from_values(&v))
    }

    proptest! {
        #[test]
        fn conjugation_invariance(x in arb_word(10), k in 0isize..10) {
            prop_assert_eq!(homfly(&x.cyclic_rotate(k)), homfly(&x));
            prop_assert_eq!(homfly(&x.index_shift(1)), homfly(&x));
        }

        #[test]
        fn mirror_image(x in arb_word(10)) {
            prop_assert_eq!(homfly(&x.mirror()), homfly(&x).mirror());
        }

        #[test]
        fn equal_elements_have_equal_polynomials(x in arb_word(8)) {
            let (artin, _) = x.to_artin();
            prop_assert_eq!(homfly(&artin), homfly(&x));
        }
    }
}
