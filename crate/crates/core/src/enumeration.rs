//! Exhaustive generation of minimal band words, sweeps over them, censuses
//! by genus and the decision whether a polynomial belongs to a closed
//! 3-braid.
//!
//! Words are generated directly in the three normal forms and identified up
//! to cyclic rotation and index shift (conjugation by `δ`). Mirror images
//! are kept apart.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::hecke::{homfly, pretzel_homfly};
use crate::invariants::{
    classify_leading_coefficient, mwf_lower_bound, pmcf_predicate, CoeffClass,
};
use crate::knot_table::KnotTable;
use crate::poly::LaurentPoly2;
use crate::xu::{canonical_key, genus_of, reduce, NormalFormKind, Quasipositivity};

pub const DEFAULT_MAX_BANDS: usize = 14;
/// Environment variable overriding [`DEFAULT_MAX_BANDS`].
pub const MAX_BANDS_ENV: &str = "BRAID3_MAX_BANDS";

/// The enumeration cap: the environment override if set and valid, else the
/// default.
pub fn configured_cap() -> usize {
    std::env::var(MAX_BANDS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_BANDS)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusEntry {
    pub canonical_word: BraidWord,
    pub kind: NormalFormKind,
    pub chi: i64,
    pub components: usize,
    pub genus: i64,
    pub homfly: LaurentPoly2,
    /// Canonical word of the mirror image; equal to `canonical_word` for
    /// orbits closed under mirroring.
    pub mirror_word: BraidWord,
    pub matched_name: Option<String>,
}

/// All positive words of length `m` with cyclically non-decreasing indices.
fn non_decreasing(m: usize) -> Vec<Vec<u8>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(3 << (m - 1));
    for start in 1..=3u8 {
        for steps in 0..1u64 << (m - 1) {
            let mut w = Vec::with_capacity(m);
            let mut cur = start;
            w.push(cur);
            for b in 0..m - 1 {
                if steps >> b & 1 == 1 {
                    cur = cur % 3 + 1;
                }
                w.push(cur);
            }
            out.push(w);
        }
    }
    out
}

fn positive(indices: &[u8]) -> impl Iterator<Item = Letter> + '_ {
    indices.iter().map(|&i| Letter::pos(i as i64))
}

fn inverse_of(indices: &[u8]) -> impl Iterator<Item = Letter> + '_ {
    indices.iter().rev().map(|&i| Letter::neg(i as i64))
}

/// Every word of length `n` in one of the normal forms.
pub fn normal_form_candidates(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        for r in non_decreasing(n - 2 * k) {
            let mut pos: Vec<Letter> = Vec::with_capacity(n);
            let mut neg: Vec<Letter> = inverse_of(&r).collect();
            for _ in 0..k {
                pos.extend([Letter::pos(2), Letter::pos(1)]);
                neg.extend([Letter::neg(1), Letter::neg(2)]);
            }
            pos.extend(positive(&r));
            out.push(BraidWord::new(pos));
            if n > 0 {
                out.push(BraidWord::new(neg));
            }
        }
    }
    for a in 1..n {
        let lefts = non_decreasing(a);
        let rights = non_decreasing(n - a);
        for l in &lefts {
            for r in &rights {
                if l[0] != r[0] && l.last() != r.last() {
                    out.push(BraidWord::new(inverse_of(l).chain(positive(r)).collect()));
                }
            }
        }
    }
    out
}

/// Canonical words of the orbits of minimal words of exactly length `n`,
/// from the constructive generator.
pub fn constructive_keys(n: usize) -> BTreeSet<BraidWord> {
    normal_form_candidates(n)
        .into_par_iter()
        .filter_map(|w| {
            let nf = reduce(&w);
            (nf.minimal_length() == n).then(|| canonical_key(&nf.minimal_word))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Same orbit set from every one of the `6^n` words; only for small `n`.
pub fn brute_force_keys(n: usize) -> BTreeSet<BraidWord> {
    let alphabet = [1i64, 2, 3, -1, -2, -3];
    let total = 6u64.pow(n as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut c = code;
            let values: Vec<i64> = (0..n)
                .map(|_| {
                    let v = alphabet[(c % 6) as usize];
                    c /= 6;
                    v
                })
                .collect();
            let nf = reduce(&BraidWord::from_values(&values));
            (nf.minimal_length() == n).then(|| canonical_key(&nf.minimal_word))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn entry_for(key: BraidWord, table: Option<&KnotTable>) -> CensusEntry {
    let nf = reduce(&key);
    let p = homfly(&key);
    let matched_name = table.and_then(|t| t.match_poly(&p)).map(str::to_string);
    CensusEntry {
        kind: nf.kind,
        chi: 3 - key.len() as i64,
        components: key.closure_components(),
        genus: genus_of(&key),
        homfly: p,
        mirror_word: canonical_key(&key.mirror()),
        matched_name,
        canonical_word: key,
    }
}

/// One entry per orbit of minimal words of length `n`, sorted by
/// canonical word.
pub fn enumerate_minimal(n: usize, cap: usize) -> Result<Vec<CensusEntry>> {
    enumerate_minimal_with(n, cap, None)
}

pub fn enumerate_minimal_with(
    n: usize,
    cap: usize,
    table: Option<&KnotTable>,
) -> Result<Vec<CensusEntry>> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    Ok(constructive_keys(n)
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|k| entry_for(k, table))
        .collect())
}

/// Counts and witnesses of a sweep over all orbits up to some length.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SweepReport {
    /// `(length, number of orbits)`.
    pub orbits_per_length: Vec<(usize, usize)>,
    /// `max deg_z P ≠ length − 2`.
    pub degree_violations: Vec<BraidWord>,
    /// Leading class outside the allowed set, the square class away from the
    /// empty word, or `−v^k(1+v²)` on a knot or 3-component link.
    pub leading_class_violations: Vec<BraidWord>,
    /// `min deg_v P > 1 − χ`.
    pub min_deg_v_violations: Vec<BraidWord>,
    /// Conway criterion true on a word that is not strongly quasipositive.
    pub pmcf_violations: Vec<BraidWord>,
}

impl SweepReport {
    pub fn total_orbits(&self) -> usize {
        self.orbits_per_length.iter().map(|x| x.1).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.degree_violations.is_empty()
            && self.leading_class_violations.is_empty()
            && self.min_deg_v_violations.is_empty()
            && self.pmcf_violations.is_empty()
    }
}

fn leading_class_ok(e: &CensusEntry) -> bool {
    let class = classify_leading_coefficient(&e.homfly, e.chi);
    match class {
        CoeffClass::Other => false,
        CoeffClass::ThreeUnlinkSquare { .. } => e.canonical_word.is_empty(),
        c => !(c.is_negative_one_plus_v2() && e.components != 2),
    }
}

fn quasipositive(word: &BraidWord, kind: NormalFormKind) -> Quasipositivity {
    match kind {
        NormalFormKind::TypeAPositive => Quasipositivity::Positive,
        NormalFormKind::TypeANegative => Quasipositivity::MirrorPositive,
        NormalFormKind::TypeB => crate::xu::is_strongly_quasipositive(word),
    }
}

/// Checks every degree identity and coefficient constraint on all orbits of
/// length `≤ max_length`.
pub fn sweep(max_length: usize, cap: usize) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 0..=max_length {
        let entries = enumerate_minimal(n, cap)?;
        report.orbits_per_length.push((n, entries.len()));
        for e in &entries {
            let w = &e.canonical_word;
            let top = e.homfly.max_deg_z()?;
            if top as i64 != n as i64 - 2 {
                report.degree_violations.push(w.clone());
            }
            if !leading_class_ok(e) {
                report.leading_class_violations.push(w.clone());
            }
            if e.homfly.min_deg_v()? as i64 > 1 - e.chi {
                report.min_deg_v_violations.push(w.clone());
            }
            if pmcf_predicate(&e.homfly)? && quasipositive(w, e.kind) == Quasipositivity::No {
                report.pmcf_violations.push(w.clone());
            }
        }
    }
    Ok(report)
}

/// The degree identity `max deg_z P = length − 2` on every orbit of length
/// `≤ max_length`; a counterexample is reported as an internal error.
pub fn verify_theorem1(max_length: usize, cap: usize) -> Result<Vec<(usize, usize)>> {
    let mut counts = Vec::new();
    for n in 0..=max_length {
        let entries = enumerate_minimal(n, cap)?;
        if let Some(bad) = entries
            .iter()
            .find(|e| e.homfly.max_deg_z().ok() != Some(n as i32 - 2))
        {
            return Err(Error::Internal(format!(
                "max deg_z P != length - 2 for {}",
                bad.canonical_word
            )));
        }
        counts.push((n, entries.len()));
    }
    Ok(counts)
}

/// Knots of one genus sharing a polynomial up to mirror image.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusClass {
    /// The lesser of the polynomial and its mirror image.
    pub homfly: LaurentPoly2,
    pub words: Vec<BraidWord>,
    pub matched_name: Option<String>,
}

/// Knot orbits of minimal length `2g + 2` grouped into polynomial classes,
/// mirrors identified.
pub fn genus_census(g: usize, table: Option<&KnotTable>, cap: usize) -> Result<Vec<CensusClass>> {
    let entries = enumerate_minimal_with(2 * g + 2, cap, table)?;
    let mut classes: BTreeMap<LaurentPoly2, CensusClass> = BTreeMap::new();
    for e in entries.into_iter().filter(|e| e.components == 1) {
        let mirror = e.homfly.mirror();
        let key = if mirror < e.homfly {
            mirror
        } else {
            e.homfly.clone()
        };
        let class = classes.entry(key.clone()).or_insert_with(|| CensusClass {
            homfly: key,
            words: Vec::new(),
            matched_name: e.matched_name.clone(),
        });
        class.words.push(e.canonical_word);
    }
    Ok(classes.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    MwfSpanExceeds3,
    DegreeParityMismatch,
    LeadingCoefficientClass,
    ExhaustiveSearchMiss,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::MwfSpanExceeds3 => "MWFSpanExceeds3",
            Reason::DegreeParityMismatch => "DegreeParityMismatch",
            Reason::LeadingCoefficientClass => "LeadingCoefficientClass",
            Reason::ExhaustiveSearchMiss => "ExhaustiveSearchMiss",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Realizable {
        witness: BraidWord,
    },
    NotRealizable {
        reason: Reason,
    },
    /// The exhaustive stage would need words longer than the cap.
    Inconclusive {
        required_length: usize,
        cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizabilityVerdict {
    pub outcome: Outcome,
    pub matched_name: Option<String>,
}

impl fmt::Display for RealizabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Realizable { witness } => write!(f, "Realizable({witness})")?,
            Outcome::NotRealizable { reason } => write!(f, "NotRealizable({reason})")?,
            Outcome::Inconclusive {
                required_length,
                cap,
            } => write!(f, "Inconclusive(needs length {required_length}, cap {cap})")?,
        }
        if let Some(name) = &self.matched_name {
            write!(f, " [{name}]")?;
        }
        Ok(())
    }
}

/// The first stage of the realizability pipeline that `p` fails, if any.
pub fn quick_rejection(p: &LaurentPoly2) -> Result<Option<Reason>> {
    if mwf_lower_bound(p)? > 3 {
        return Ok(Some(Reason::MwfSpanExceeds3));
    }
    if !p.parity_consistent() {
        return Ok(Some(Reason::DegreeParityMismatch));
    }
    let top = p.max_deg_z()?;
    let chi = 1 - top as i64;
    let class = classify_leading_coefficient(p, chi);
    // z-degrees are even exactly for knots and 3-component links
    let odd_components = top.rem_euclid(2) == 0;
    let bad = match class {
        CoeffClass::Other => true,
        CoeffClass::ThreeUnlinkSquare { .. } => *p != LaurentPoly2::delta().pow(2),
        c => odd_components && c.is_negative_one_plus_v2(),
    };
    Ok(bad.then_some(Reason::LeadingCoefficientClass))
}

/// Orbit words of length `max deg_z P + 2` whose closure has polynomial `p`
/// or its mirror image (the witness is then mirrored back).
pub fn realizing_words(p: &LaurentPoly2, cap: usize) -> Result<Vec<BraidWord>> {
    let top = p.max_deg_z()?;
    if top < -2 {
        return Ok(Vec::new());
    }
    let n = (top + 2) as usize;
    let mirror = p.mirror();
    let mut out = Vec::new();
    for e in enumerate_minimal(n, cap)? {
        if e.homfly == *p {
            out.push(e.canonical_word);
        } else if e.homfly == mirror {
            out.push(e.canonical_word.mirror());
        }
    }
    Ok(out)
}

/// Decides whether `p` is the polynomial of a closed 3-braid: span, parity
/// and leading-coefficient tests, then exhaustive search at
/// `χ = 1 − max deg_z P`.
pub fn realizable_3braid(
    p: &LaurentPoly2,
    table: Option<&KnotTable>,
    cap: usize,
) -> Result<RealizabilityVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let matched_name = table.and_then(|t| t.match_poly(p)).map(str::to_string);
    let verdict = |outcome| RealizabilityVerdict {
        outcome,
        matched_name: matched_name.clone(),
    };
    if let Some(reason) = quick_rejection(p)? {
        return Ok(verdict(Outcome::NotRealizable { reason }));
    }
    let top = p.max_deg_z()?;
    if top < -2 {
        return Ok(verdict(Outcome::NotRealizable {
            reason: Reason::ExhaustiveSearchMiss,
        }));
    }
    let n = (top + 2) as usize;
    if n > cap {
        return Ok(verdict(Outcome::Inconclusive {
            required_length: n,
            cap,
        }));
    }
    match realizing_words(p, cap)?.into_iter().next() {
        Some(witness) => {
            if homfly(&witness) != *p {
                return Err(Error::Internal(format!(
                    "witness {witness} does not reproduce the polynomial"
                )));
            }
            Ok(verdict(Outcome::Realizable { witness }))
        }
        None => Ok(verdict(Outcome::NotRealizable {
            reason: Reason::ExhaustiveSearchMiss,
        })),
    }
}

/// Degree data of a pretzel link `P(p, q, r, s)` with parallel twists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PretzelReport {
    pub twists: [i64; 4],
    pub homfly: LaurentPoly2,
    /// Euler characteristic of the standard diagram's Seifert surface:
    /// four Seifert circles, one band per crossing.
    pub chi: i64,
    pub min_deg_v: i32,
    pub max_deg_v: i32,
    pub max_deg_z: i32,
    pub mwf_lower_bound: i64,
    /// `max deg_v P = 7 − χ`, which forces braid index 4.
    pub top_degree_identity: bool,
    /// For `p = 1`: whether `P` equals that of the band word
    /// `[1^q 2^s 3^r]`.
    pub band_word_match: Option<bool>,
}

pub fn braid_index_check_pretzel(p: i64, q: i64, r: i64, s: i64) -> Result<PretzelReport> {
    let twists = [p, q, r, s];
    if twists.iter().any(|&a| a < 1) {
        return Err(Error::domain("pretzel twists must be at least 1"));
    }
    let poly = pretzel_homfly(&twists)?;
    let chi = 4 - twists.iter().sum::<i64>();
    let max_deg_v = poly.max_deg_v()?;
    let band_word_match = (p == 1).then(|| {
        let values: Vec<i64> = std::iter::repeat(1)
            .take(q as usize)
            .chain(std::iter::repeat(2).take(s as usize))
            .chain(std::iter::repeat(3).take(r as usize))
            .collect();
        homfly(&BraidWord::from_values(&values)) == poly
    });
    Ok(PretzelReport {
        twists,
        chi,
        min_deg_v: poly.min_deg_v()?,
        max_deg_v,
        max_deg_z: poly.max_deg_z()?,
        mwf_lower_bound: mwf_lower_bound(&poly)?,
        top_degree_identity: max_deg_v as i64 == 7 - chi,
        band_word_match,
        homfly: poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn non_decreasing_counts() {
        assert_eq!(non_decreasing(0).len(), 1);
        assert_eq!(non_decreasing(1).len(), 3);
        assert_eq!(non_decreasing(4).len(), 24);
        for v in non_decreasing(5) {
            assert!(crate::xu::is_non_decreasing(&BraidWord::new(
                positive(&v).collect()
            )));
        }
    }

    #[test]
    fn small_lengths() {
        let e = enumerate_minimal(0, 14).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[0].canonical_word.is_empty());
        assert_eq!(e[0].components, 3);

        let knots: Vec<_> = enumerate_minimal(2, 14)
            .unwrap()
            .into_iter()
            .filter(|e| e.components == 1)
            .collect();
        assert!(!knots.is_empty());
        assert!(knots
            .iter()
            .all(|e| e.genus == 0 && e.homfly == LaurentPoly2::one()));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_minimal(5, 4).unwrap_err(),
            Error::CapExceeded {
                requested: 5,
                cap: 4
            }
        );
    }

    #[test]
    fn constructive_matches_brute_force() {
        for n in 0..=5 {
            assert_eq!(constructive_keys(n), brute_force_keys(n), "length {n}");
        }
    }

    #[test]
    fn canonical_words_are_minimal_in_their_orbit() {
        for e in enumerate_minimal(5, 14).unwrap() {
            assert_eq!(canonical_key(&e.canonical_word), e.canonical_word);
            assert_eq!(reduce(&e.canonical_word).minimal_length(), 5);
        }
    }

    #[test]
    fn small_sweep_is_clean() {
        let r = sweep(7, 14).unwrap();
        assert!(r.is_clean(), "{r:?}");
        assert_eq!(verify_theorem1(0, 14).unwrap(), vec![(0, 1)]);
        assert!(verify_theorem1(6, 14).is_ok());
    }

    #[test]
    fn genus_censuses() {
        let g0 = genus_census(0, None, 14).unwrap();
        assert_eq!(g0.len(), 1);
        assert_eq!(g0[0].homfly, LaurentPoly2::one());
        let g1 = genus_census(1, Some(&crate::knot_table::make_table()), 14).unwrap();
        assert_eq!(g1.len(), 3);
        let mut names: Vec<_> = g1.iter().filter_map(|c| c.matched_name.clone()).collect();
        names.sort();
        assert_eq!(names, ["3_1", "4_1", "5_2"]);
    }

    #[test]
    fn realizability_of_small_polynomials() {
        let v = realizable_3braid(&LaurentPoly2::one(), None, 14).unwrap();
        assert!(matches!(v.outcome, Outcome::Realizable { .. }));
        for word in realizing_words(&LaurentPoly2::one(), 14).unwrap() {
            assert_eq!(word.closure_components(), 1);
            assert_eq!(genus_of(&word), 0);
        }
        let trefoil = homfly(&w("[1 1 1 2]"));
        match realizable_3braid(&trefoil.mirror(), None, 14)
            .unwrap()
            .outcome
        {
            Outcome::Realizable { witness } => assert_eq!(homfly(&witness), trefoil.mirror()),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            realizable_3braid(&LaurentPoly2::monomial(1, 1, 0), None, 14)
                .unwrap()
                .outcome,
            Outcome::NotRealizable {
                reason: Reason::DegreeParityMismatch
            }
        );
        let wide = LaurentPoly2::from_terms([(1, 0, 0), (1, 8, 0), (-1, 4, 0)]);
        assert_eq!(
            realizable_3braid(&wide, None, 14).unwrap().outcome,
            Outcome::NotRealizable {
                reason: Reason::MwfSpanExceeds3
            }
        );
        let deep = LaurentPoly2::monomial(1, 0, 20);
        assert!(matches!(
            realizable_3braid(&LaurentPoly2::from_terms([(1, 0, 20), (1, 2, 0)]), None, 14)
                .unwrap()
                .outcome,
            Outcome::Inconclusive {
                required_length: 22,
                cap: 14
            }
        ));
        assert!(quick_rejection(&deep).unwrap().is_none());
        assert_eq!(
            realizable_3braid(&LaurentPoly2::zero(), None, 14).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn pretzel_with_unit_region() {
        let r = braid_index_check_pretzel(1, 2, 2, 2).unwrap();
        assert!(r.mwf_lower_bound <= 3);
        assert_eq!(r.band_word_match, Some(true));
        let r = braid_index_check_pretzel(2, 2, 2, 3).unwrap();
        assert_eq!(r.mwf_lower_bound, 4);
    }
}
