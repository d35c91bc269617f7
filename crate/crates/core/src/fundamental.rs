//! The fundamental family `F_S^ε`: expansion into monomials, minimal indices,
//! rewriting to minimal form and the simultaneous-shuffle product.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{descent_representative, SignedPermutation};
use crate::sign::{parse_sign_string, sign_string, Sign};
use crate::sqsym::{Bicomposition, MonomialIndex, SqsExpr};

/// Names `F_S^ε`: a chain of `d` elements whose joins listed in `strict`
/// are strict (`0` is the join across the middle) and whose elements carry
/// the signs `signs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FundamentalIndex {
    d: usize,
    strict: BTreeSet<usize>,
    signs: Vec<Sign>,
}

impl FundamentalIndex {
    pub fn new(strict: BTreeSet<usize>, signs: Vec<Sign>) -> Result<Self> {
        let d = signs.len();
        if let Some(&bad) = strict.iter().find(|&&s| s >= d) {
            return Err(Error::InvalidParams(format!(
                "strict position {bad} out of range 0..{d}"
            )));
        }
        Ok(FundamentalIndex { d, strict, signs })
    }

    /// Parses `S` as a list and `ε` as a string of `+`/`-`.
    pub fn from_parts(strict: &[usize], signs: &str) -> Result<Self> {
        FundamentalIndex::new(strict.iter().copied().collect(), parse_sign_string(signs)?)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn strict(&self) -> &BTreeSet<usize> {
        &self.strict
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    fn is_strict(&self, j: usize) -> bool {
        self.strict.contains(&j)
    }

    /// Length of the run of positions joined weakly to position 1.
    fn first_run_len(&self) -> usize {
        (1..self.d)
            .find(|&j| self.is_strict(j))
            .unwrap_or(self.d)
    }

    /// No weak join has `+` directly below `-`, and when the middle join is
    /// weak the first run carries only `+`.
    pub fn is_minimal(&self) -> bool {
        self.first_violation().is_none()
    }

    fn first_violation(&self) -> Option<Violation> {
        for j in 1..self.d {
            if !self.is_strict(j) && self.signs[j - 1] == Sign::Plus && self.signs[j] == Sign::Minus {
                return Some(Violation::Adjacent(j));
            }
        }
        if self.d > 0 && !self.is_strict(0) && self.signs[..self.first_run_len()].contains(&Sign::Minus) {
            return Some(Violation::Middle);
        }
        None
    }

    /// Monomial expansion: a sum over canonical weakly increasing sequences
    /// `0 <= i_1 <= … <= i_d`, strict at joins in `S`, with `i_1 >= 1` exactly
    /// when the middle join is strict.
    /// A strict middle join keeps every value off zero, which separates the
    /// negative half from the positive one.
    pub fn to_monomial(&self) -> SqsExpr {
        let mut out = SqsExpr::zero();
        let mut seq = Vec::with_capacity(self.d);
        self.expand_rec(&mut seq, &mut out);
        out
    }

    fn expand_rec(&self, seq: &mut Vec<u32>, out: &mut SqsExpr) {
        let j = seq.len();
        if j == self.d {
            out.add_integer(self.monomial_of(seq), 1);
            return;
        }
        let (prev, step_forced) = match j {
            0 => (0, self.is_strict(0)),
            _ => (seq[j - 1], self.is_strict(j)),
        };
        let choices: &[u32] = if step_forced { &[1] } else { &[0, 1] };
        for &step in choices {
            seq.push(prev + step);
            self.expand_rec(seq, out);
            seq.pop();
        }
    }

    fn monomial_of(&self, seq: &[u32]) -> MonomialIndex {
        let r = seq.last().copied().unwrap_or(0) as usize;
        let mut cols = vec![(0u32, 0u32); r];
        let mut k = 0;
        for (&v, &s) in seq.iter().zip(&self.signs) {
            match (v, s) {
                (0, _) => k += 1,
                (v, Sign::Plus) => cols[v as usize - 1].0 += 1,
                (v, Sign::Minus) => cols[v as usize - 1].1 += 1,
            }
        }
        MonomialIndex {
            k,
            lam: Bicomposition::new(cols).expect("canonical sequences use every value"),
        }
    }

    /// Exponent vector of the leading monomial under the variable order
    /// `x_0 > x_1 > x_{-1} > x_2 > x_{-2} > …`, listed in that order.
    pub fn leading_monomial(&self) -> Vec<u32> {
        self.to_monomial()
            .terms()
            .keys()
            .map(|m| {
                let mut v = vec![m.k];
                for &(a, b) in m.lam.columns() {
                    v.push(a);
                    v.push(b);
                }
                v.resize(2 * self.d + 1, 0);
                v
            })
            .max()
            .unwrap_or_default()
    }

    /// The monomial index paired with a minimal fundamental index: `k` is
    /// the length of the first run when the middle join is weak, and each
    /// later run becomes the column of its `(+, -)` counts.
    pub fn to_minimal_monomial(&self) -> Result<MonomialIndex> {
        if !self.is_minimal() {
            return Err(Error::NotMinimal(self.to_string()));
        }
        let mut runs: Vec<Vec<Sign>> = Vec::new();
        for (j, &s) in self.signs.iter().enumerate() {
            if j == 0 || self.is_strict(j) {
                runs.push(Vec::new());
            }
            runs.last_mut().unwrap().push(s);
        }
        let mut k = 0;
        if !self.is_strict(0) && !runs.is_empty() {
            k = runs.remove(0).len() as u32;
        }
        let cols = runs
            .iter()
            .map(|run| {
                let plus = run.iter().filter(|&&s| s == Sign::Plus).count() as u32;
                (plus, run.len() as u32 - plus)
            })
            .collect();
        Ok(MonomialIndex {
            k,
            lam: Bicomposition::new(cols)?,
        })
    }

    /// Inverse of [`Self::to_minimal_monomial`]: a column `(a, b)` becomes a
    /// run of `b` minus signs followed by `a` plus signs.
    pub fn from_minimal_monomial(m: &MonomialIndex) -> FundamentalIndex {
        let mut signs = Vec::new();
        let mut strict = BTreeSet::new();
        signs.extend(std::iter::repeat_n(Sign::Plus, m.k as usize));
        for &(a, b) in m.lam.columns() {
            strict.insert(signs.len());
            signs.extend(std::iter::repeat_n(Sign::Minus, b as usize));
            signs.extend(std::iter::repeat_n(Sign::Plus, a as usize));
        }
        FundamentalIndex {
            d: signs.len(),
            strict,
            signs,
        }
    }

    /// Rewrites into a combination of minimal indices with the same
    /// monomial expansion.
    pub fn reduce_to_minimal(&self) -> FExpr {
        let mut done = FExpr::new();
        let mut queue: Vec<(FundamentalIndex, BigRational)> = vec![(self.clone(), BigRational::one())];
        while let Some((fi, c)) = queue.pop() {
            match fi.first_violation() {
                None => fexpr_add(&mut done, fi, c),
                Some(v) => {
                    for (term, sign) in fi.rewrite(v) {
                        let coef = if sign > 0 { c.clone() } else { -c.clone() };
                        queue.push((term, coef));
                    }
                }
            }
        }
        done
    }

    /// `[+ - weak] = [+ - strict] + [- + weak] - [- + strict]` at a join; the
    /// middle variant compares the first element with its own mirror.
    fn rewrite(&self, v: Violation) -> [(FundamentalIndex, i8); 3] {
        match v {
            Violation::Adjacent(j) => {
                let strict_same = self.with_strict(j);
                let swapped = {
                    let mut s = self.clone();
                    s.signs.swap(j - 1, j);
                    s
                };
                let swapped_strict = swapped.with_strict(j);
                [(strict_same, 1), (swapped, 1), (swapped_strict, -1)]
            }
            Violation::Middle => {
                let flipped = {
                    let mut s = self.clone();
                    s.signs[0] = Sign::Plus;
                    s
                };
                [(self.with_strict(0), 1), (flipped.clone(), 1), (flipped.with_strict(0), -1)]
            }
        }
    }

    fn with_strict(&self, j: usize) -> FundamentalIndex {
        let mut s = self.clone();
        s.strict.insert(j);
        s
    }
}

#[derive(Debug, Clone, Copy)]
enum Violation {
    Adjacent(usize),
    Middle,
}

impl fmt::Display for FundamentalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strict: Vec<String> = self.strict.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "F[d={}; S={{{}}}; eps={}]",
            self.d,
            strict.join(","),
            sign_string(&self.signs)
        )
    }
}

impl std::str::FromStr for FundamentalIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected F[d=..; S={{..}}; eps=..], got {s:?}"));
        let body = s
            .trim()
            .strip_prefix("F[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut d = None;
        let mut strict = None;
        let mut signs = None;
        for part in body.split(';') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "d" => d = Some(value.trim().parse::<usize>().map_err(|_| bad())?),
                "S" => {
                    let inner = value
                        .trim()
                        .strip_prefix('{')
                        .and_then(|r| r.strip_suffix('}'))
                        .ok_or_else(bad)?;
                    let set = inner
                        .split(',')
                        .map(str::trim)
                        .filter(|x| !x.is_empty())
                        .map(|x| x.parse::<usize>().map_err(|_| bad()))
                        .collect::<Result<BTreeSet<_>>>()?;
                    strict = Some(set);
                }
                "eps" => signs = Some(parse_sign_string(value.trim())?),
                _ => return Err(bad()),
            }
        }
        let (d, strict, signs) = (d.ok_or_else(bad)?, strict.ok_or_else(bad)?, signs.ok_or_else(bad)?);
        if signs.len() != d {
            return Err(Error::Parse(format!("eps has {} signs but d = {d}", signs.len())));
        }
        FundamentalIndex::new(strict, signs)
    }
}

/// Rational combination of fundamental functions.
pub type FExpr = BTreeMap<FundamentalIndex, BigRational>;

pub fn fexpr_add(e: &mut FExpr, fi: FundamentalIndex, c: BigRational) {
    let slot = e.entry(fi.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        e.remove(&fi);
    }
}

pub fn fexpr_to_monomial(e: &FExpr) -> SqsExpr {
    let mut out = SqsExpr::zero();
    for (fi, c) in e {
        out = &out + &fi.to_monomial().scale(c);
    }
    out
}

pub fn des_signed_perm(pi: &SignedPermutation) -> BTreeSet<usize> {
    pi.descents()
}

/// Every minimal index of the given degree, via the monomial bijection.
pub fn minimal_indices(degree: u32) -> Vec<FundamentalIndex> {
    crate::sqsym::monomial_indices(degree)
        .iter()
        .map(FundamentalIndex::from_minimal_monomial)
        .collect()
}

/// Result of a simultaneous shuffle, with the representatives used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProduct {
    pub left_representative: SignedPermutation,
    pub right_representative: SignedPermutation,
    /// Each shuffled word with the index it contributes.
    pub terms: Vec<(Vec<i32>, FundamentalIndex)>,
}

impl FProduct {
    pub fn to_fexpr(&self) -> FExpr {
        let mut e = FExpr::new();
        for (_, fi) in &self.terms {
            fexpr_add(&mut e, fi.clone(), BigRational::from_integer(BigInt::one()));
        }
        e
    }
}

/// Product using the default descent-class representatives.
pub fn f_product(f1: &FundamentalIndex, f2: &FundamentalIndex) -> Result<FProduct> {
    let pi = descent_representative(&f1.strict, f1.d)?;
    let rho = descent_representative(&f2.strict, f2.d)?;
    f_product_with(f1, f2, &pi, &rho)
}

/// Shuffles `(π, ε)` with `(π' shifted by d, ε')`; each shuffled word `w`
/// with its shuffled signs `δ` contributes `F_{DES(w)}^δ`.
pub fn f_product_with(
    f1: &FundamentalIndex,
    f2: &FundamentalIndex,
    pi: &SignedPermutation,
    rho: &SignedPermutation,
) -> Result<FProduct> {
    for (fi, p) in [(f1, pi), (f2, rho)] {
        if p.d() != fi.d || p.descents() != fi.strict {
            return Err(Error::InvalidParams(format!(
                "{p} is not a representative of the descent set of {fi}"
            )));
        }
    }
    let shift = f1.d as i32;
    let left: Vec<(i32, Sign)> = pi.word().iter().copied().zip(f1.signs.iter().copied()).collect();
    let right: Vec<(i32, Sign)> = rho
        .word()
        .iter()
        .map(|&x| if x > 0 { x + shift } else { x - shift })
        .zip(f2.signs.iter().copied())
        .collect();
    let mut terms = Vec::new();
    let mut word = Vec::with_capacity(left.len() + right.len());
    shuffle_rec(&left, &right, &mut word, &mut terms);
    Ok(FProduct {
        left_representative: pi.clone(),
        right_representative: rho.clone(),
        terms,
    })
}

fn shuffle_rec(
    x: &[(i32, Sign)],
    y: &[(i32, Sign)],
    acc: &mut Vec<(i32, Sign)>,
    out: &mut Vec<(Vec<i32>, FundamentalIndex)>,
) {
    if x.is_empty() || y.is_empty() {
        let full: Vec<(i32, Sign)> = acc.iter().chain(x).chain(y).copied().collect();
        let letters: Vec<i32> = full.iter().map(|p| p.0).collect();
        let signs: Vec<Sign> = full.iter().map(|p| p.1).collect();
        let strict = SignedPermutation::new(letters.clone())
            .expect("shuffle of disjoint signed words")
            .descents();
        out.push((
            letters,
            FundamentalIndex {
                d: signs.len(),
                strict,
                signs,
            },
        ));
        return;
    }
    acc.push(x[0]);
    shuffle_rec(&x[1..], y, acc, out);
    acc.pop();
    acc.push(y[0]);
    shuffle_rec(x, &y[1..], acc, out);
    acc.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(s: &[usize], eps: &str) -> FundamentalIndex {
        FundamentalIndex::from_parts(s, eps).unwrap()
    }

    fn mi(k: u32, cols: &[(u32, u32)]) -> MonomialIndex {
        MonomialIndex::new(k, cols.to_vec()).unwrap()
    }

    fn sum(ms: &[MonomialIndex]) -> SqsExpr {
        let mut e = SqsExpr::zero();
        for m in ms {
            e.add_integer(m.clone(), 1);
        }
        e
    }

    #[test]
    fn expansions() {
        assert_eq!(fi(&[0, 1], "++").to_monomial(), sum(&[mi(0, &[(1, 0), (1, 0)])]));
        assert_eq!(
            fi(&[1], "-+").to_monomial(),
            sum(&[mi(0, &[(0, 1), (1, 0)]), mi(1, &[(1, 0)])])
        );
        assert_eq!(fi(&[], "+").to_monomial(), sum(&[mi(1, &[]), mi(0, &[(1, 0)])]));
    }

    #[test]
    fn minimality() {
        assert!(fi(&[1, 3], "+++-").is_minimal());
        assert!(!fi(&[1, 2], "-++-").is_minimal());
        assert!(!fi(&[], "-").is_minimal());
        assert!(fi(&[0, 2], "--++").is_minimal());
    }

    #[test]
    fn bijection_examples() {
        let cases = [
            (fi(&[1, 3], "+++-"), mi(1, &[(2, 0), (0, 1)])),
            (fi(&[0, 2], "--++"), mi(0, &[(0, 2), (2, 0)])),
            (fi(&[0], "+"), mi(0, &[(1, 0)])),
        ];
        for (f, m) in cases {
            assert_eq!(f.to_minimal_monomial().unwrap(), m);
            assert_eq!(FundamentalIndex::from_minimal_monomial(&m), f);
        }
        assert!(matches!(
            fi(&[], "-").to_minimal_monomial(),
            Err(Error::NotMinimal(_))
        ));
        let empty = FundamentalIndex::from_minimal_monomial(&MonomialIndex::unit());
        assert_eq!(empty.d(), 0);
    }

    #[test]
    fn reduce_small() {
        let r = fi(&[], "-").reduce_to_minimal();
        let mut expected = FExpr::new();
        fexpr_add(&mut expected, fi(&[], "+"), BigRational::one());
        fexpr_add(&mut expected, fi(&[0], "+"), -BigRational::one());
        fexpr_add(&mut expected, fi(&[0], "-"), BigRational::one());
        assert_eq!(r, expected);

        let m = fi(&[1, 3], "+++-");
        let r = m.reduce_to_minimal();
        assert_eq!(r.len(), 1);
        assert!(r[&m].is_one());
    }

    #[test]
    fn reduce_two_letters() {
        let f = fi(&[], "+-");
        let r = f.reduce_to_minimal();
        assert_eq!(r.len(), 7);
        assert!(r.keys().all(FundamentalIndex::is_minimal));
        assert_eq!(fexpr_to_monomial(&r), f.to_monomial());
    }

    #[test]
    fn parse_roundtrip() {
        let f = fi(&[1, 3], "+++-");
        assert_eq!(f.to_string(), "F[d=4; S={1,3}; eps=+++-]");
        assert_eq!(f.to_string().parse::<FundamentalIndex>().unwrap(), f);
        assert!("F[d=2; S={5}; eps=++]".parse::<FundamentalIndex>().is_err());
        assert!("F[d=3; S={}; eps=++]".parse::<FundamentalIndex>().is_err());
    }

    #[test]
    fn small_products() {
        let p = f_product(&fi(&[], "+"), &fi(&[], "+")).unwrap();
        let got: Vec<FundamentalIndex> = p.terms.iter().map(|t| t.1.clone()).collect();
        assert_eq!(got, vec![fi(&[], "++"), fi(&[1], "++")]);

        let p = f_product(&fi(&[0], "-"), &fi(&[], "+")).unwrap();
        let got: BTreeSet<FundamentalIndex> = p.terms.iter().map(|t| t.1.clone()).collect();
        assert_eq!(got, [fi(&[0], "-+"), fi(&[1], "+-")].into_iter().collect());
    }

    #[test]
    fn representative_must_match() {
        let pi = SignedPermutation::new(vec![1, 2]).unwrap();
        let rho = SignedPermutation::new(vec![1]).unwrap();
        assert!(f_product_with(&fi(&[1], "++"), &fi(&[], "+"), &pi, &rho).is_err());
    }
}
