//! The algebra of signed quasisymmetric functions in the monomial family.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A sequence of columns `(a, b)`, none equal to `(0, 0)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bicomposition(Vec<(u32, u32)>);

impl Bicomposition {
    pub fn new(columns: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(i) = columns.iter().position(|&c| c == (0, 0)) {
            return Err(Error::InvalidParams(format!("column {i} of bicomposition is (0,0)")));
        }
        Ok(Bicomposition(columns))
    }

    pub fn empty() -> Self {
        Bicomposition(Vec::new())
    }

    pub fn columns(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(a, b)| a + b).sum()
    }

    /// Orbit representative under column permutations and per-column swaps.
    pub fn canonical(&self) -> Bicomposition {
        let mut cols: Vec<(u32, u32)> = self.0.iter().map(|&(a, b)| (a.max(b), a.min(b))).collect();
        cols.sort();
        Bicomposition(cols)
    }

    /// Size of the orbit of this bicomposition under the signed symmetric group.
    pub fn orbit_size(&self) -> BigUint {
        let canon = self.canonical();
        let mut size = factorial(canon.len());
        let mut i = 0;
        while i < canon.0.len() {
            let run = canon.0[i..].iter().take_while(|&&c| c == canon.0[i]).count();
            size /= factorial(run);
            i += run;
        }
        let asymmetric = canon.0.iter().filter(|&&(a, b)| a != b).count();
        size << asymmetric
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Index `(k, λ)` of the monomial function `M_{k,λ}`; ordered by `k`, then
/// columns lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIndex {
    pub k: u32,
    pub lam: Bicomposition,
}

impl MonomialIndex {
    pub fn new(k: u32, columns: Vec<(u32, u32)>) -> Result<Self> {
        Ok(MonomialIndex {
            k,
            lam: Bicomposition::new(columns)?,
        })
    }

    pub fn unit() -> Self {
        MonomialIndex::default()
    }

    pub fn degree(&self) -> u32 {
        self.k + self.lam.degree()
    }

    pub fn canonical(&self) -> MonomialIndex {
        MonomialIndex {
            k: self.k,
            lam: self.lam.canonical(),
        }
    }
}

impl MonomialIndex {
    /// The index of `∏ x_{values[v]}` when the nonzero absolute values are
    /// exactly `1..=r`; `None` for non-canonical value vectors.
    pub fn of_canonical_values(values: &[i64]) -> Option<MonomialIndex> {
        let r = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as usize;
        let mut cols = vec![(0u32, 0u32); r];
        let mut k = 0;
        for &v in values {
            match v {
                0 => k += 1,
                v if v > 0 => cols[v as usize - 1].0 += 1,
                v => cols[(-v) as usize - 1].1 += 1,
            }
        }
        if cols.contains(&(0, 0)) {
            return None;
        }
        Some(MonomialIndex {
            k,
            lam: Bicomposition(cols),
        })
    }
}

impl fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{};", self.k)?;
        for (i, (a, b)) in self.lam.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

/// All monomial indices of the given degree, in index order.
pub fn monomial_indices(degree: u32) -> Vec<MonomialIndex> {
    let mut out = Vec::new();
    for k in 0..=degree {
        for lam in bicompositions(degree - k) {
            out.push(MonomialIndex { k, lam });
        }
    }
    out.sort();
    out
}

/// All bicompositions of total degree `n`.
pub fn bicompositions(n: u32) -> Vec<Bicomposition> {
    fn rec(n: u32, prefix: &mut Vec<(u32, u32)>, out: &mut Vec<Bicomposition>) {
        if n == 0 {
            out.push(Bicomposition(prefix.clone()));
            return;
        }
        for size in 1..=n {
            for a in 0..=size {
                prefix.push((a, size - a));
                rec(n - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// The stuffle of two column sequences, with multiplicities.
pub fn quasi_shuffle(l1: &Bicomposition, l2: &Bicomposition) -> BTreeMap<Bicomposition, u64> {
    fn rec(x: &[(u32, u32)], y: &[(u32, u32)], prefix: &mut Vec<(u32, u32)>, out: &mut BTreeMap<Bicomposition, u64>) {
        match (x.split_first(), y.split_first()) {
            (None, _) | (_, None) => {
                let mut cols = prefix.clone();
                cols.extend_from_slice(x);
                cols.extend_from_slice(y);
                *out.entry(Bicomposition(cols)).or_insert(0) += 1;
            }
            (Some((&cx, rx)), Some((&cy, ry))) => {
                prefix.push(cx);
                rec(rx, y, prefix, out);
                prefix.pop();
                prefix.push(cy);
                rec(x, ry, prefix, out);
                prefix.pop();
                prefix.push((cx.0 + cy.0, cx.1 + cy.1));
                rec(rx, ry, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(&l1.0, &l2.0, &mut Vec::new(), &mut out);
    out
}

/// `A_n`, the dimension of the degree-`n` component, summed over the number
/// of zeros `k` and the compositions of `n - k` (a part `c` contributes the
/// `c + 1` ways to split it into a column).
pub fn dimension(deg: usize) -> BigUint {
    // weighted[m] = Σ over compositions c of m of Π (c_i + 1)
    let mut weighted = vec![BigUint::zero(); deg + 1];
    weighted[0] = BigUint::one();
    for m in 1..=deg {
        let mut total = BigUint::zero();
        for c in 1..=m {
            total += &weighted[m - c] * BigUint::from(c + 1);
        }
        weighted[m] = total;
    }
    weighted.into_iter().sum()
}

/// Coefficients `A_0..=A_max` of `(1 - t) / (1 - 4t + 2t^2)`.
pub fn dimension_series(max: usize) -> Vec<BigUint> {
    let mut a: Vec<BigInt> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut v = BigInt::zero();
        if n >= 1 {
            v += &a[n - 1] * 4;
        }
        if n >= 2 {
            v -= &a[n - 2] * 2;
        }
        match n {
            0 => v += 1,
            1 => v -= 1,
            _ => {}
        }
        a.push(v);
    }
    a.into_iter()
        .map(|v| v.to_biguint().expect("series coefficients are positive"))
        .collect()
}

/// Finite linear combination of monomial functions with rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SqsExpr {
    terms: BTreeMap<MonomialIndex, BigRational>,
}

impl SqsExpr {
    pub fn zero() -> Self {
        SqsExpr::default()
    }

    pub fn monomial(m: MonomialIndex) -> Self {
        SqsExpr::term(m, BigRational::one())
    }

    pub fn term(m: MonomialIndex, coef: BigRational) -> Self {
        let mut e = SqsExpr::zero();
        e.add_term(m, coef);
        e
    }

    pub fn one() -> Self {
        SqsExpr::monomial(MonomialIndex::unit())
    }

    pub fn add_term(&mut self, m: MonomialIndex, coef: BigRational) {
        use std::collections::btree_map::Entry;
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn from_counts<I: IntoIterator<Item = (MonomialIndex, i64)>>(counts: I) -> SqsExpr {
        let mut e = SqsExpr::zero();
        for (m, c) in counts {
            e.add_integer(m, c);
        }
        e
    }

    pub fn add_integer(&mut self, m: MonomialIndex, coef: i64) {
        self.add_term(m, BigRational::from_integer(BigInt::from(coef)));
    }

    pub fn terms(&self) -> &BTreeMap<MonomialIndex, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &MonomialIndex) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> SqsExpr {
        if c.is_zero() {
            return SqsExpr::zero();
        }
        SqsExpr {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Maximal degree of a term, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MonomialIndex::degree).max()
    }

    pub fn product(&self, other: &SqsExpr) -> SqsExpr {
        let mut out = SqsExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (lam, mult) in quasi_shuffle(&m1.lam, &m2.lam) {
                    let m = MonomialIndex { k: m1.k + m2.k, lam };
                    out.add_term(m, &c * BigRational::from_integer(BigInt::from(mult)));
                }
            }
        }
        out
    }

    /// Coefficients are constant on every orbit of the signed symmetric
    /// group acting on indices (absent members count as zero).
    pub fn is_signed_symmetric(&self) -> bool {
        let mut orbits: BTreeMap<MonomialIndex, (BigRational, BigUint)> = BTreeMap::new();
        for (m, c) in &self.terms {
            let entry = orbits
                .entry(m.canonical())
                .or_insert_with(|| (c.clone(), BigUint::zero()));
            if entry.0 != *c {
                return false;
            }
            entry.1 += 1u32;
        }
        orbits.iter().all(|(rep, (_, seen))| *seen == rep.lam.orbit_size())
    }
}

impl fmt::Display for SqsExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl Add for &SqsExpr {
    type Output = SqsExpr;
    fn add(self, rhs: &SqsExpr) -> SqsExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SqsExpr {
    type Output = SqsExpr;
    fn sub(self, rhs: &SqsExpr) -> SqsExpr {
        self + &(-rhs)
    }
}

impl Neg for &SqsExpr {
    type Output = SqsExpr;
    fn neg(self) -> SqsExpr {
        SqsExpr {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SqsExpr {
    type Output = SqsExpr;
    fn mul(self, rhs: &SqsExpr) -> SqsExpr {
        self.product(rhs)
    }
}

impl FromIterator<(MonomialIndex, BigRational)> for SqsExpr {
    fn from_iter<I: IntoIterator<Item = (MonomialIndex, BigRational)>>(iter: I) -> Self {
        let mut e = SqsExpr::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

/// Polynomial in `t` with coefficients in the algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TPoly {
    coeffs: BTreeMap<u32, SqsExpr>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn constant(e: SqsExpr) -> Self {
        let mut p = TPoly::zero();
        p.add_at(0, &e);
        p
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, SqsExpr> {
        &self.coeffs
    }

    pub fn coefficient(&self, t: u32) -> SqsExpr {
        self.coeffs.get(&t).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, t: u32, e: &SqsExpr) {
        let slot = self.coeffs.entry(t).or_default();
        *slot = &*slot + e;
        if slot.is_zero() {
            self.coeffs.remove(&t);
        }
    }

    pub fn add_term(&mut self, t: u32, m: MonomialIndex, coef: BigRational) {
        let slot = self.coeffs.entry(t).or_default();
        slot.add_term(m, coef);
        if slot.is_zero() {
            self.coeffs.remove(&t);
        }
    }

    /// Builds a polynomial from integer counts, the accumulator used by the
    /// enumeration loops.
    pub fn from_counts<I: IntoIterator<Item = ((u32, MonomialIndex), i64)>>(counts: I) -> TPoly {
        let mut p = TPoly::zero();
        for ((t, m), c) in counts {
            p.add_term(t, m, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of `(t-exponent, monomial)` terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.values().map(SqsExpr::len).sum()
    }

    pub fn product(&self, other: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (t1, e1) in &self.coeffs {
            for (t2, e2) in &other.coeffs {
                out.add_at(t1 + t2, &e1.product(e2));
            }
        }
        out
    }

    pub fn is_signed_symmetric(&self) -> bool {
        self.coeffs.values().all(SqsExpr::is_signed_symmetric)
    }

    /// Highest t-exponent, or `None` for zero.
    pub fn t_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, e)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "t^{t}*( {e} )")?;
        }
        Ok(())
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (t, e) in &rhs.coeffs {
            out.add_at(*t, e);
        }
        out
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.product(rhs)
    }
}

/// Deconcatenation coproduct of `M_{k,λ}`: every split of `k` and every cut
/// of the column sequence, each with multiplicity one.
pub fn coproduct(m: &MonomialIndex) -> Vec<(MonomialIndex, MonomialIndex)> {
    let cols = m.lam.columns();
    let mut out = Vec::new();
    for k1 in 0..=m.k {
        for cut in 0..=cols.len() {
            out.push((
                MonomialIndex {
                    k: k1,
                    lam: Bicomposition(cols[..cut].to_vec()),
                },
                MonomialIndex {
                    k: m.k - k1,
                    lam: Bicomposition(cols[cut..].to_vec()),
                },
            ));
        }
    }
    out
}

/// Element of the tensor square, keyed by pairs of indices.
pub type Tensor = BTreeMap<(MonomialIndex, MonomialIndex), BigRational>;

fn tensor_add(t: &mut Tensor, key: (MonomialIndex, MonomialIndex), c: BigRational) {
    let slot = t.entry(key.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

pub fn coproduct_expr(f: &SqsExpr) -> Tensor {
    let mut out = Tensor::new();
    for (m, c) in f.terms() {
        for pair in coproduct(m) {
            tensor_add(&mut out, pair, c.clone());
        }
    }
    out
}

/// Componentwise product in the tensor square.
pub fn tensor_product(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for ((a1, b1), c1) in x {
        for ((a2, b2), c2) in y {
            let left = SqsExpr::monomial(a1.clone()).product(&SqsExpr::monomial(a2.clone()));
            let right = SqsExpr::monomial(b1.clone()).product(&SqsExpr::monomial(b2.clone()));
            let c = c1 * c2;
            for (l, cl) in left.terms() {
                for (r, cr) in right.terms() {
                    tensor_add(&mut out, (l.clone(), r.clone()), &c * cl * cr);
                }
            }
        }
    }
    out
}

/// `(Δ ⊗ id)` and `(id ⊗ Δ)` applied to `Δ(m)`, flattened to triples.
/// Coproduct from doubling the alphabet: as [`coproduct_expr`] but the split
/// `k = k1 + k2` carries the weight `C(k, k1)`, since `x_0` becomes
/// `x_0 + y_0`. Unlike the unweighted version it is multiplicative.
pub fn doubling_coproduct_expr(f: &SqsExpr) -> Tensor {
    let mut out = Tensor::new();
    for (m, c) in f.terms() {
        for (a, b) in coproduct(m) {
            let weight = num_integer::binomial(BigInt::from(m.k), BigInt::from(a.k));
            tensor_add(&mut out, (a, b), c * BigRational::from_integer(weight));
        }
    }
    out
}

/// Multiplicities of three-fold splits.
pub type TripleSplits = BTreeMap<(MonomialIndex, MonomialIndex, MonomialIndex), u64>;

pub fn iterated_coproducts(m: &MonomialIndex) -> (TripleSplits, TripleSplits) {
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (a, b) in coproduct(m) {
        for (a1, a2) in coproduct(&a) {
            *left.entry((a1, a2, b.clone())).or_insert(0) += 1;
        }
        for (b1, b2) in coproduct(&b) {
            *right.entry((a.clone(), b1, b2)).or_insert(0) += 1;
        }
    }
    (left, right)
}

/// A polynomial in `x_{-n}, …, x_n`; exponent vectors are indexed by `i + n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, exps: Vec<u32>, c: BigRational) {
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn product(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.n != other.n {
            return Err(Error::InvalidParams(format!(
                "truncations over {} and {} variables",
                self.n, other.n
            )));
        }
        let mut out = TruncatedSeries::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Sets `x_i = x_{-i} = 0` and renames `x_{±j}` to `x_{±(j-1)}` for `j > i`.
    pub fn r_operator(&self, i: usize) -> Result<TruncatedSeries> {
        if i == 0 || i > self.n {
            return Err(Error::InvalidParams(format!("index {i} outside 1..={}", self.n)));
        }
        let n = self.n;
        let mut out = TruncatedSeries::zero(n - 1);
        for (e, c) in &self.terms {
            if e[n + i] > 0 || e[n - i] > 0 {
                continue;
            }
            let mut shifted = vec![0u32; 2 * (n - 1) + 1];
            shifted[n - 1] = e[n];
            for j in 1..=n {
                if j == i {
                    continue;
                }
                let target = if j < i { j } else { j - 1 };
                shifted[n - 1 + target] = e[n + j];
                shifted[n - 1 - target] = e[n - j];
            }
            out.add(shifted, c.clone());
        }
        Ok(out)
    }
}

/// Expands `f` as a polynomial in `x_{-n}, …, x_n`.
pub fn truncate_expand(f: &SqsExpr, n: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(n);
    for (m, c) in f.terms() {
        let r = m.lam.len();
        if r > n {
            continue;
        }
        let mut chosen = Vec::with_capacity(r);
        expand_rec(m, c, n, 1, &mut chosen, &mut out);
    }
    out
}

fn expand_rec(
    m: &MonomialIndex,
    c: &BigRational,
    n: usize,
    next: usize,
    chosen: &mut Vec<usize>,
    out: &mut TruncatedSeries,
) {
    let cols = m.lam.columns();
    if chosen.len() == cols.len() {
        let mut e = vec![0u32; 2 * n + 1];
        e[n] = m.k;
        for (&i, &(a, b)) in chosen.iter().zip(cols) {
            e[n + i] = a;
            e[n - i] = b;
        }
        out.add(e, c.clone());
        return;
    }
    let remaining = cols.len() - chosen.len();
    for i in next..=n + 1 - remaining {
        chosen.push(i);
        expand_rec(m, c, n, i + 1, chosen, out);
        chosen.pop();
    }
}

pub fn r_operator(f: &SqsExpr, i: usize, n: usize) -> Result<TruncatedSeries> {
    truncate_expand(f, n).r_operator(i)
}
