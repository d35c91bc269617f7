//! Signed permutations of `{0, ±1, …, ±d}`, stored by their positive half.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// The word `π(1) … π(d)`; `π(-i) = -π(i)` and `π(0) = 0` are implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let d = word.len();
        let mut seen = vec![false; d + 1];
        for &x in &word {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > d || seen[a] {
                return Err(Error::InvalidParams(format!(
                    "{word:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(word))
    }

    pub fn identity(d: usize) -> Self {
        SignedPermutation((1..=d as i32).collect())
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    /// `π(i)` for `i ∈ {-d, …, d}`.
    pub fn at(&self, i: i32) -> i32 {
        match i.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => self.0[i as usize - 1],
            std::cmp::Ordering::Less => -self.0[(-i) as usize - 1],
        }
    }

    /// The full word `π(-d) … π(-1) π(1) … π(d)`.
    pub fn full_word(&self) -> Vec<i32> {
        let mut w: Vec<i32> = self.0.iter().rev().map(|&x| -x).collect();
        w.extend_from_slice(&self.0);
        w
    }

    /// Position of the letter `m` in `π`, i.e. `π^{-1}(m)` as a signed position.
    pub fn position(&self, m: i32) -> i32 {
        for (p, &x) in self.0.iter().enumerate() {
            if x == m {
                return p as i32 + 1;
            }
            if x == -m {
                return -(p as i32 + 1);
            }
        }
        panic!("{m} is not a letter of {self}")
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.0.iter().map(|&x| Sign::of(x as i64)).collect()
    }

    /// `DES(π) = {i ∈ 0..d : π(i) > π(i+1)}` with `π(0) = 0`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (0..self.d())
            .filter(|&i| self.at(i as i32) > self.at(i as i32 + 1))
            .collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All `2^d · d!` signed permutations, in lexicographic order of their words.
pub fn all_signed_permutations(d: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(d);
    let mut used = vec![false; d + 1];
    fn rec(d: usize, word: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
        if word.len() == d {
            out.push(SignedPermutation(word.clone()));
            return;
        }
        // letters in increasing integer order: -d..-1 then 1..d
        let letters = (1..=d as i32).rev().map(|a| -a).chain(1..=d as i32);
        for x in letters {
            let a = x.unsigned_abs() as usize;
            if used[a] {
                continue;
            }
            used[a] = true;
            word.push(x);
            rec(d, word, used, out);
            word.pop();
            used[a] = false;
        }
    }
    rec(d, &mut word, &mut used, &mut out);
    out
}

/// A signed permutation whose descent set is `s`.
///
/// Positions are cut into increasing runs at the positive descents. Without a
/// descent at 0 every letter is positive and earlier runs receive larger
/// blocks; with a descent at 0 every letter is negative and earlier runs
/// receive the blocks closest to zero.
pub fn descent_representative(s: &BTreeSet<usize>, d: usize) -> Result<SignedPermutation> {
    if let Some(&bad) = s.iter().find(|&&x| x >= d) {
        return Err(Error::InvalidParams(format!(
            "descent {bad} out of range for d = {d}"
        )));
    }
    let mut runs: Vec<usize> = Vec::new();
    let mut len = 0;
    for pos in 1..=d {
        len += 1;
        if pos == d || s.contains(&pos) {
            runs.push(len);
            len = 0;
        }
    }
    let negative = s.contains(&0);
    let mut word = Vec::with_capacity(d);
    if negative {
        let mut top = 0i32;
        for &r in &runs {
            let lo = top - r as i32;
            word.extend(lo..top);
            top = lo;
        }
    } else {
        let mut top = d as i32;
        for &r in &runs {
            let lo = top - r as i32 + 1;
            word.extend(lo..=top);
            top = lo - 1;
        }
    }
    let pi = SignedPermutation::new(word)?;
    debug_assert_eq!(&pi.descents(), s);
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn counts() {
        assert_eq!(all_signed_permutations(0).len(), 1);
        assert_eq!(all_signed_permutations(2).len(), 8);
        assert_eq!(all_signed_permutations(3).len(), 48);
    }

    #[test]
    fn descents_examples() {
        let p = |w: Vec<i32>| SignedPermutation::new(w).unwrap().descents();
        assert_eq!(p(vec![1, 2]), set(&[]));
        assert_eq!(p(vec![-1, 2]), set(&[0]));
        assert_eq!(p(vec![2, 1]), set(&[1]));
    }

    #[test]
    fn representative_examples() {
        assert_eq!(descent_representative(&set(&[0]), 1).unwrap().word(), &[-1]);
        assert_eq!(descent_representative(&set(&[]), 2).unwrap().word(), &[1, 2]);
        assert_eq!(descent_representative(&set(&[1]), 2).unwrap().word(), &[2, 1]);
    }

    #[test]
    fn representative_realizes_every_descent_set() {
        for d in 0..=6usize {
            for mask in 0u32..(1 << d) {
                let s: BTreeSet<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
                let pi = descent_representative(&s, d).unwrap();
                assert_eq!(pi.descents(), s, "d={d} s={s:?} pi={pi}");
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![0]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn full_word_and_positions() {
        let pi = SignedPermutation::new(vec![2, -1]).unwrap();
        assert_eq!(pi.full_word(), vec![1, -2, 2, -1]);
        assert_eq!(pi.position(-1), 2);
        assert_eq!(pi.position(1), -2);
        assert_eq!(pi.at(-1), -2);
    }
}
