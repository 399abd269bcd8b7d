//! Minimal-length band words for `B3`.
//!
//! A word is rewritten as `L⁻¹ δ^k R` with `δ = σ2σ1` and `L`, `R` positive
//! with cyclically non-decreasing indices, then one of the three factors is
//! cancelled. The results are
//!
//! * `δ^k R` (positive type A) or `L⁻¹ δ^{-k}` (negative type A),
//! * `L⁻¹ R` with `L`, `R` nonempty, differing in their first and in their
//!   last letters (type B).
//!
//! Cyclic reductions conjugate, so a [`XuNormalForm`] records a conjugator
//! `c` with `w = c · minimal_word · c⁻¹`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NormalFormKind {
    TypeAPositive,
    TypeANegative,
    TypeB,
}

impl fmt::Display for NormalFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormalFormKind::TypeAPositive => "A+",
            NormalFormKind::TypeANegative => "A-",
            NormalFormKind::TypeB => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Quasipositivity {
    Positive,
    MirrorPositive,
    No,
}

impl fmt::Display for Quasipositivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quasipositivity::Positive => "positive",
            Quasipositivity::MirrorPositive => "mirror-positive",
            Quasipositivity::No => "no",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XuNormalForm {
    pub kind: NormalFormKind,
    /// Positive non-decreasing word whose inverse stands on the left.
    pub left: BraidWord,
    /// Power of `δ` (type A+) or `δ⁻¹` (type A−); zero for type B.
    pub twist: usize,
    pub right: BraidWord,
    pub minimal_word: BraidWord,
    pub conjugator: BraidWord,
}

impl XuNormalForm {
    pub fn minimal_length(&self) -> usize {
        self.minimal_word.len()
    }

    /// Euler characteristic of the band surface of the minimal word.
    pub fn euler_characteristic(&self) -> i64 {
        3 - self.minimal_length() as i64
    }

    /// `conjugator · minimal_word · conjugator⁻¹`, an element equal to the
    /// reduced input.
    pub fn conjugated_word(&self) -> BraidWord {
        self.conjugator
            .concat(&self.minimal_word)
            .concat(&self.conjugator.inverse())
    }

    pub fn canonical_word(&self) -> BraidWord {
        canonical_key(&self.minimal_word)
    }

    /// For type B: the first letters of `L` and `R` differ, and so do their
    /// last letters. Always true for type A.
    pub fn ends_differ(&self) -> bool {
        if self.kind != NormalFormKind::TypeB {
            return true;
        }
        let (l, r) = (self.left.letters(), self.right.letters());
        l.first() != r.first() && l.last() != r.last()
    }
}

fn shift(index: u8, by: i64) -> u8 {
    ((index as i64 - 1 + by).rem_euclid(3) + 1) as u8
}

/// True when each letter is followed by the same index or the next one.
pub fn is_non_decreasing(word: &BraidWord) -> bool {
    word.letters()
        .windows(2)
        .all(|p| p[1].index() == p[0].index() || p[1].index() == shift(p[0].index(), 1))
}

/// Rewrites `w` as `L⁻¹R` with `L`, `R` positive, moving every inverse
/// letter to the left with `σ_iσ_j⁻¹ = σ_{i+1}⁻¹σ_{j+1}` and cancelling
/// `σ_iσ_i⁻¹` as it appears.
pub fn push_negatives_left(w: &BraidWord) -> BraidWord {
    let (neg, pos) = negatives_left(w);
    let mut letters: Vec<Letter> = neg.iter().map(|&i| Letter::neg(i as i64)).collect();
    letters.extend(pos.iter().map(|&i| Letter::pos(i as i64)));
    BraidWord::new(letters)
}

/// The inverse letters (left to right) and positive letters of the
/// rewritten word.
fn negatives_left(w: &BraidWord) -> (Vec<u8>, Vec<u8>) {
    let mut neg = Vec::new();
    let mut pos: Vec<u8> = Vec::new();
    for l in w.letters() {
        if l.is_positive() {
            pos.push(l.index());
            continue;
        }
        let mut j = l.index();
        let mut at = pos.len();
        let mut cancelled = false;
        while at > 0 {
            let p = pos[at - 1];
            if p == j {
                pos.remove(at - 1);
                cancelled = true;
                break;
            }
            pos[at - 1] = shift(j, 1);
            j = shift(p, 1);
            at -= 1;
        }
        if !cancelled {
            neg.push(j);
        }
    }
    (neg, pos)
}

/// Moves every descent `σ_{i+1}σ_i = δ` of a positive word to the front:
/// returns `(k, rest)` with `w = δ^k · rest` and `rest` non-decreasing.
pub fn extract_descents(w: &BraidWord) -> Result<(usize, BraidWord)> {
    if !w.is_positive() {
        return Err(Error::domain(format!("{w} is not a positive word")));
    }
    let indices: Vec<u8> = w.letters().iter().map(|l| l.index()).collect();
    let (k, rest) = descents(&indices);
    Ok((
        k,
        BraidWord::new(rest.into_iter().map(|i| Letter::pos(i as i64)).collect()),
    ))
}

fn descents(word: &[u8]) -> (usize, Vec<u8>) {
    // Letters already passed by `off` copies of δ are stored unshifted;
    // `σ_i δ = δ σ_{i+1}`.
    let mut stack: Vec<u8> = Vec::with_capacity(word.len());
    let mut off = 0i64;
    let mut k = 0;
    for &x in word {
        match stack.last() {
            Some(&t) if shift(t, off - 1) == x => {
                stack.pop();
                k += 1;
                off += 1;
            }
            _ => stack.push(shift(x, -off)),
        }
    }
    (k, stack.into_iter().map(|s| shift(s, off)).collect())
}

/// Eliminates one of the factors of `L⁻¹ δ^k R` (`L`, `R` positive) and
/// cyclically reduces the result.
pub fn cancel_factors(left: &BraidWord, k: i64, right: &BraidWord) -> Result<XuNormalForm> {
    let (kl, l) = extract_descents(left)?;
    let (kr, r) = extract_descents(right)?;
    Ok(cancel(
        l.letters().iter().map(|l| l.index()).collect(),
        k + kr as i64 - kl as i64,
        r.letters().iter().map(|l| l.index()).collect(),
    ))
}

fn cancel(left: Vec<u8>, mut k: i64, right: Vec<u8>) -> XuNormalForm {
    let mut l: VecDeque<u8> = left.into();
    let mut r: VecDeque<u8> = right.into();
    loop {
        if k > 0 && !l.is_empty() {
            // σ_i⁻¹δ = σ_{i−1}, then σ_iδ^m = δ^mσ_{i+m}
            let l1 = l.pop_front().unwrap();
            let x = shift(l1, k - 2);
            k -= 1;
            if r.front() == Some(&shift(x, -1)) {
                r.pop_front();
                k += 1;
            } else {
                r.push_front(x);
            }
        } else if k < 0 && !r.is_empty() {
            // δ⁻¹σ_{i+1} = σ_i⁻¹, then δ^{-m}σ_i⁻¹ = σ_{i+m}⁻¹δ^{-m}
            let r1 = r.pop_front().unwrap();
            let y = shift(r1, -k - 2);
            k += 1;
            if l.front() == Some(&shift(y, -1)) {
                l.pop_front();
                k -= 1;
            } else {
                l.push_front(y);
            }
        } else {
            break;
        }
    }

    let mut conjugator = Vec::new();
    if k == 0 {
        while !l.is_empty() && !r.is_empty() {
            if l.front() == r.front() {
                l.pop_front();
                r.pop_front();
            } else if l.back() == r.back() {
                let a = l.pop_back().unwrap();
                r.pop_back();
                conjugator.push(Letter::neg(a as i64));
            } else {
                break;
            }
        }
    }

    let pos = |v: &VecDeque<u8>| BraidWord::new(v.iter().map(|&i| Letter::pos(i as i64)).collect());
    let (left, right) = (pos(&l), pos(&r));
    let twist = k.unsigned_abs() as usize;
    let (kind, minimal) = if k > 0 || (k == 0 && l.is_empty()) {
        let mut m = Vec::with_capacity(2 * twist + r.len());
        for _ in 0..twist {
            m.extend([Letter::pos(2), Letter::pos(1)]);
        }
        m.extend(right.letters());
        (NormalFormKind::TypeAPositive, m)
    } else if k < 0 || r.is_empty() {
        let mut m: Vec<Letter> = left.inverse().into_letters();
        for _ in 0..twist {
            m.extend([Letter::neg(1), Letter::neg(2)]);
        }
        (NormalFormKind::TypeANegative, m)
    } else {
        let mut m = left.inverse().into_letters();
        m.extend(right.letters());
        (NormalFormKind::TypeB, m)
    };
    XuNormalForm {
        kind,
        left,
        twist,
        right,
        minimal_word: BraidWord::new(minimal),
        conjugator: BraidWord::new(conjugator),
    }
}

/// One pass of the three rewriting steps.
fn linear_pass(w: &BraidWord) -> XuNormalForm {
    let (neg, pos) = negatives_left(w);
    let left: Vec<u8> = neg.into_iter().rev().collect();
    let (kl, l) = descents(&left);
    let (kr, r) = descents(&pos);
    cancel(l, kr as i64 - kl as i64, r)
}

/// A minimal-length word conjugate to `w`, with its factorization.
///
/// One pass of the three steps suffices: rerunning it on the cyclic
/// rotations of its output never shortens the word (checked exhaustively in
/// the tests).
pub fn reduce(w: &BraidWord) -> XuNormalForm {
    linear_pass(w)
}

pub fn minimal_length(w: &BraidWord) -> usize {
    reduce(w).minimal_length()
}

/// Euler characteristic of the closure: `3 − minimal length`.
pub fn euler_characteristic(w: &BraidWord) -> i64 {
    reduce(w).euler_characteristic()
}

/// Genus of the closure, `(2c − χ − m)/2` for `m` link components and `c`
/// connected pieces of the minimal band surface.
pub fn genus(w: &BraidWord) -> i64 {
    let nf = reduce(w);
    genus_of(&nf.minimal_word)
}

pub(crate) fn genus_of(minimal: &BraidWord) -> i64 {
    let chi = 3 - minimal.len() as i64;
    let c = minimal.surface_components() as i64;
    let m = minimal.closure_components() as i64;
    (2 * c - chi - m) / 2
}

pub fn is_strongly_quasipositive(w: &BraidWord) -> Quasipositivity {
    if reduce(w).kind == NormalFormKind::TypeAPositive {
        Quasipositivity::Positive
    } else if reduce(&w.mirror()).kind == NormalFormKind::TypeAPositive {
        Quasipositivity::MirrorPositive
    } else {
        Quasipositivity::No
    }
}

/// Least word, by signed letter values, among all cyclic rotations and
/// index shifts of `w`.
pub fn canonical_key(w: &BraidWord) -> BraidWord {
    let n = w.len();
    if n == 0 {
        return w.clone();
    }
    let values: Vec<i64> = w.values();
    let mut best: Option<Vec<i64>> = None;
    for by in 0..3 {
        let shifted: Vec<i64> = values
            .iter()
            .map(|&v| {
                let i = shift(v.unsigned_abs() as u8, by) as i64;
                if v > 0 {
                    i
                } else {
                    -i
                }
            })
            .collect();
        for start in 0..n {
            let better = match &best {
                None => true,
                Some(b) => {
                    let rotated = shifted[start..].iter().chain(&shifted[..start]);
                    rotated.lt(b.iter())
                }
            };
            if better {
                let mut rot = shifted[start..].to_vec();
                rot.extend_from_slice(&shifted[..start]);
                best = Some(rot);
            }
        }
    }
    BraidWord::from_values(&best.unwrap())
}
