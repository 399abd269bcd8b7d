//! Per-link reports and the degree bounds and coefficient classes of closed
//! 3-braids.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::hecke::homfly;
use crate::poly::{alexander, LaurentPoly1, LaurentPoly2};
use crate::xu::{genus_of, reduce, NormalFormKind, Quasipositivity, XuNormalForm};

/// Shape of the `v`-polynomial `[P]_{z^{1−χ}}`, up to a unit `±v^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoeffClass {
    /// `sign · v^k`
    UnitMonomial {
        sign: i8,
        k: i32,
    },
    /// `sign · v^k (1 + v²)`
    MonomialTimesOnePlusV2 {
        sign: i8,
        k: i32,
    },
    /// `sign · v^k (1 − v²)`
    MonomialTimesOneMinusV2 {
        sign: i8,
        k: i32,
    },
    /// `sign · v^k (1 − v²)²`
    ThreeUnlinkSquare {
        sign: i8,
        k: i32,
    },
    Other,
}

impl CoeffClass {
    pub fn is_other(self) -> bool {
        self == CoeffClass::Other
    }

    /// `−v^k(1 + v²)`, excluded for knots and 3-component links.
    pub fn is_negative_one_plus_v2(self) -> bool {
        matches!(self, CoeffClass::MonomialTimesOnePlusV2 { sign: -1, .. })
    }

    pub fn name(self) -> &'static str {
        match self {
            CoeffClass::UnitMonomial { .. } => "unit-monomial",
            CoeffClass::MonomialTimesOnePlusV2 { .. } => "monomial-times-1+v^2",
            CoeffClass::MonomialTimesOneMinusV2 { .. } => "monomial-times-1-v^2",
            CoeffClass::ThreeUnlinkSquare { .. } => "three-unlink-square",
            CoeffClass::Other => "other",
        }
    }
}

impl fmt::Display for CoeffClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = |f: &mut fmt::Formatter<'_>, sign: i8, k: i32| {
            write!(f, "{}v^{}", if sign < 0 { "-" } else { "" }, k)
        };
        match *self {
            CoeffClass::UnitMonomial { sign, k } => unit(f, sign, k),
            CoeffClass::MonomialTimesOnePlusV2 { sign, k } => {
                unit(f, sign, k)?;
                f.write_str("(1+v^2)")
            }
            CoeffClass::MonomialTimesOneMinusV2 { sign, k } => {
                unit(f, sign, k)?;
                f.write_str("(1-v^2)")
            }
            CoeffClass::ThreeUnlinkSquare { sign, k } => {
                unit(f, sign, k)?;
                f.write_str("(1-v^2)^2")
            }
            CoeffClass::Other => f.write_str("other"),
        }
    }
}

/// Exact classification of the coefficient of `z^{1−χ}` in `P`.
pub fn classify_leading_coefficient(p: &LaurentPoly2, chi: i64) -> CoeffClass {
    let c = p.z_coefficient((1 - chi) as i32);
    let terms: Vec<(i32, i128)> = c.terms().collect();
    let sign = |x: i128| if x > 0 { 1 } else { -1 };
    match terms.as_slice() {
        [(k, a)] if a.abs() == 1 => CoeffClass::UnitMonomial {
            sign: sign(*a),
            k: *k,
        },
        [(k, a), (k2, b)] if a.abs() == 1 && *k2 == k + 2 && a == b => {
            CoeffClass::MonomialTimesOnePlusV2 {
                sign: sign(*a),
                k: *k,
            }
        }
        [(k, a), (k2, b)] if a.abs() == 1 && *k2 == k + 2 && *a == -b => {
            CoeffClass::MonomialTimesOneMinusV2 {
                sign: sign(*a),
                k: *k,
            }
        }
        [(k, a), (k2, b), (k4, c)]
            if a.abs() == 1 && *k2 == k + 2 && *k4 == k + 4 && *b == -2 * a && c == a =>
        {
            CoeffClass::ThreeUnlinkSquare {
                sign: sign(*a),
                k: *k,
            }
        }
        _ => CoeffClass::Other,
    }
}

/// Braid index lower bound `(max deg_v − min deg_v)/2 + 1`.
pub fn mwf_lower_bound(p: &LaurentPoly2) -> Result<i64> {
    Ok(((p.max_deg_v()? - p.min_deg_v()?) / 2 + 1) as i64)
}

/// Crossing number bound `⌊5(3 − χ)/3⌋` for closed 3-braid knots.
pub fn c3_bound(chi: i64) -> i64 {
    (5 * (3 - chi)).div_euclid(3)
}

/// True when a knot with polynomial `p` and crossing number `c` cannot be
/// a closed 3-braid: `c > 2⌊5(max deg_z P + 2)/6⌋`.
pub fn crossing_obstruction(p: &LaurentPoly2, c: i64) -> Result<bool> {
    let d = p.max_deg_z()? as i64;
    Ok(c > 2 * (5 * (d + 2)).div_euclid(6))
}

/// Sufficient condition for a closed 3-braid to be strongly quasipositive:
/// `max deg ∇ < max deg_z P`, or the leading coefficient of `∇` is `±2`.
pub fn pmcf_predicate(p: &LaurentPoly2) -> Result<bool> {
    let d = p.max_deg_z()?;
    let nabla = p.conway();
    if nabla.is_zero() {
        return Ok(true);
    }
    Ok(nabla.max_deg()? < d || nabla.leading_coeff()?.abs() == 2)
}

/// Leading coefficient `±1` and degree (in `t`) equal to the genus; `alex`
/// is in `s = t^{1/2}`.
pub fn maximally_monic(alex: &LaurentPoly1, g: i64) -> bool {
    match (alex.leading_coeff(), alex.max_deg()) {
        (Ok(c), Ok(d)) => c.abs() == 1 && d as i64 == 2 * g,
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub word: BraidWord,
    pub normal_form: XuNormalForm,
    pub minimal_length: usize,
    pub chi: i64,
    pub components: usize,
    pub genus: i64,
    pub quasipositive: Quasipositivity,
    pub homfly: LaurentPoly2,
    pub max_deg_z: i32,
    pub min_deg_v: i32,
    pub max_deg_v: i32,
    pub leading_class: CoeffClass,
    pub mwf_lower_bound: i64,
    pub conway: LaurentPoly1,
    pub alexander: LaurentPoly1,
}

/// All invariants of the closure of `w`.
///
/// Fails with [`Error::Internal`] if the `z`-degree of `P` differs from
/// `1 − χ` or `min deg_v P > 1 − χ`; both hold for every 3-braid.
pub fn report(w: &BraidWord) -> Result<InvariantReport> {
    let nf = reduce(w);
    let p = homfly(w);
    let chi = nf.euler_characteristic();
    let max_deg_z = p.max_deg_z()?;
    let min_deg_v = p.min_deg_v()?;
    if max_deg_z as i64 != 1 - chi {
        return Err(Error::Internal(format!(
            "{w}: max deg_z P = {max_deg_z} but minimal length is {}",
            nf.minimal_length()
        )));
    }
    if min_deg_v as i64 > 1 - chi {
        return Err(Error::Internal(format!(
            "{w}: min deg_v P = {min_deg_v} exceeds 1 - chi = {}",
            1 - chi
        )));
    }
    let quasipositive = if nf.kind == NormalFormKind::TypeAPositive {
        Quasipositivity::Positive
    } else {
        crate::xu::is_strongly_quasipositive(w)
    };
    let conway = p.conway();
    let alexander = alexander(&conway)?;
    Ok(InvariantReport {
        word: w.clone(),
        minimal_length: nf.minimal_length(),
        chi,
        components: w.closure_components(),
        genus: genus_of(&nf.minimal_word),
        quasipositive,
        max_deg_z,
        min_deg_v,
        max_deg_v: p.max_deg_v()?,
        leading_class: classify_leading_coefficient(&p, chi),
        mwf_lower_bound: mwf_lower_bound(&p)?,
        conway,
        alexander,
        homfly: p,
        normal_form: nf,
    })
}
