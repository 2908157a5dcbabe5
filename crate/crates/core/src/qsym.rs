//! Homogeneous quasi-symmetric functions with exact coefficients.
//!
//! Elements are stored in the monomial basis `M_{n,J}`, `J ⊆ [n-1]`; the
//! fundamental basis is a view obtained by Möbius inversion over subsets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rat, rat, rat_to_string, Rat};
use crate::combinatorics::{co, parse_braced_list, Composition, NSubset};
use crate::error::{Error, Result};

/// Largest `n - 1` for which dense transforms over `2^[n-1]` are used.
const DENSE_LIMIT: usize = 22;

#[derive(Clone, PartialEq, Eq)]
pub struct QSymElem {
    n: usize,
    coeffs: BTreeMap<NSubset, Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QBasis {
    M,
    F,
}

impl QSymElem {
    pub fn zero(n: usize) -> Self {
        QSymElem {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(NSubset::empty(0), Rat::one());
        QSymElem { n: 0, coeffs }
    }

    fn check_key(n: usize, j: &NSubset) -> Result<()> {
        if j.n() != n {
            return Err(Error::DegreeMismatch(j.n(), n));
        }
        if n > 0 && j.contains(n) {
            return Err(Error::OutOfRange { elem: n, n: n - 1 });
        }
        Ok(())
    }

    /// `M_{n,J}`.
    pub fn monomial(j: &NSubset) -> Result<Self> {
        Self::check_key(j.n(), j)?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(*j, Rat::one());
        Ok(QSymElem { n: j.n(), coeffs })
    }

    /// `M_α` for a composition `α`.
    pub fn monomial_comp(c: &Composition) -> Self {
        Self::monomial(&c.descent_set()).expect("descent set of a composition is a valid key")
    }

    /// `F_{n,J} = Σ_{K ⊇ J} M_{n,K}`.
    pub fn fundamental(j: &NSubset) -> Result<Self> {
        Self::check_key(j.n(), j)?;
        let n = j.n();
        let free = NSubset::lower_full(n).difference(j);
        let coeffs = free
            .subsets()
            .into_iter()
            .map(|extra| (j.union(&extra), Rat::one()))
            .collect();
        Ok(QSymElem { n, coeffs })
    }

    /// `h_n = F_{n,∅}`.
    pub fn h(n: usize) -> Self {
        Self::fundamental(&NSubset::empty(n)).unwrap()
    }

    /// `e_n = F_{n,[n-1]}`.
    pub fn e(n: usize) -> Self {
        Self::fundamental(&NSubset::lower_full(n)).unwrap()
    }

    /// `h_{α_1} h_{α_2} ⋯`.
    pub fn h_product(parts: &[usize]) -> Self {
        parts
            .iter()
            .fold(Self::one(), |acc, &p| acc.mul(&Self::h(p)))
    }

    pub fn from_m_coeffs<I: IntoIterator<Item = (NSubset, Rat)>>(
        n: usize,
        terms: I,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (k, c) in terms {
            Self::check_key(n, &k)?;
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn from_f_coeffs<I: IntoIterator<Item = (NSubset, Rat)>>(
        n: usize,
        terms: I,
    ) -> Result<Self> {
        let mut dense = vec![Rat::zero(); dense_len(n)];
        for (k, c) in terms {
            Self::check_key(n, &k)?;
            dense[k.bits() as usize] += c;
        }
        // m_K = Σ_{J ⊆ K} c_J
        subset_transform(&mut dense, n.saturating_sub(1), false);
        Ok(Self::from_dense(n, dense))
    }

    fn from_dense(n: usize, dense: Vec<Rat>) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (NSubset::from_bits(n, b as u64), c))
            .collect();
        QSymElem { n, coeffs }
    }

    fn add_term(&mut self, k: NSubset, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in the `M` basis, zero entries omitted.
    pub fn m_coeffs(&self) -> &BTreeMap<NSubset, Rat> {
        &self.coeffs
    }

    pub fn m_coeff(&self, j: &NSubset) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `M_α`.
    pub fn m_coeff_comp(&self, c: &Composition) -> Rat {
        if c.n() != self.n {
            return Rat::zero();
        }
        self.m_coeff(&c.descent_set())
    }

    /// Coefficients in the `F` basis, zero entries omitted.
    pub fn f_coeffs(&self) -> BTreeMap<NSubset, Rat> {
        let mut dense = vec![Rat::zero(); dense_len(self.n)];
        for (k, c) in &self.coeffs {
            dense[k.bits() as usize] = c.clone();
        }
        subset_transform(&mut dense, self.n.saturating_sub(1), true);
        Self::from_dense(self.n, dense).coeffs
    }

    pub fn coeffs_in(&self, basis: QBasis) -> BTreeMap<NSubset, Rat> {
        match basis {
            QBasis::M => self.coeffs.clone(),
            QBasis::F => self.f_coeffs(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        QSymElem {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Quasi-shuffle product, computed on compositions.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::zero(n);
        let mut memo = BTreeMap::new();
        for (j, a) in &self.coeffs {
            let alpha = co(j).unwrap();
            for (k, b) in &other.coeffs {
                let beta = co(k).unwrap();
                let ab = a * b;
                for (gamma, mult) in quasi_shuffle(alpha.parts(), beta.parts(), &mut memo) {
                    let key = Composition::new(gamma).unwrap().descent_set();
                    out.add_term(key, &ab * Rat::from_integer(mult.into()));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `x_{k+1} = x_{k+2} = ⋯ = 0`.
    pub fn expand_truncated(&self, k: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(k);
        for (j, c) in &self.coeffs {
            let parts = co(j).unwrap();
            let t = parts.len();
            if t > k {
                continue;
            }
            for idx in increasing_sequences(k, t) {
                let mut exps = vec![0u32; k];
                for (p, &i) in parts.parts().iter().zip(&idx) {
                    exps[i] = *p as u32;
                }
                out.add_term(exps, c.clone());
            }
        }
        out
    }

    /// True when the `M` coefficients are constant on rearrangement classes of compositions.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(j, c)| {
            let parts = co(j).unwrap();
            let mut p = parts.sorted_parts();
            p.reverse();
            multiset_permutations(&p)
                .into_iter()
                .all(|perm| &self.m_coeff_comp(&Composition::new(perm).unwrap()) == c)
        })
    }

    /// `⟨f, h_λ⟩`, the coefficient of `m_λ`.
    pub fn inner_h(&self, lambda: &Partition) -> Result<Rat> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if lambda.n() != self.n {
            return Ok(Rat::zero());
        }
        Ok(self.m_coeff_comp(&lambda.as_composition()))
    }

    /// The involution `F_{n,J} ↦ F_{n,[n-1] \ J}`.
    pub fn omega(&self) -> Self {
        let full = NSubset::lower_full(self.n);
        let f = self
            .f_coeffs()
            .into_iter()
            .map(|(j, c)| (full.difference(&j), c));
        Self::from_f_coeffs(self.n, f).unwrap()
    }

    pub fn to_json(&self, basis: QBasis) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .coeffs_in(basis)
            .into_iter()
            .map(|(j, c)| TermJson {
                set: j.elements(),
                coeff: rat_to_string(&c),
            })
            .collect();
        serde_json::to_value(QSymJson {
            n: self.n,
            basis,
            terms,
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let parsed: QSymJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = parsed
            .terms
            .iter()
            .map(|t| {
                Ok((
                    NSubset::new(parsed.n, t.set.iter().copied())?,
                    parse_rat(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        match parsed.basis {
            QBasis::M => Self::from_m_coeffs(parsed.n, terms),
            QBasis::F => Self::from_f_coeffs(parsed.n, terms),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    set: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct QSymJson {
    n: usize,
    basis: QBasis,
    terms: Vec<TermJson>,
}

fn dense_len(n: usize) -> usize {
    let m = n.saturating_sub(1);
    assert!(
        m <= DENSE_LIMIT,
        "degree {n} too large for dense basis change"
    );
    1usize << m
}

/// In place: `out[S] = Σ_{T ⊆ S} in[T]`, or with signs `(-1)^{|S \ T|}` when `mobius`.
fn subset_transform(v: &mut [Rat], m: usize, mobius: bool) {
    for i in 0..m {
        let bit = 1usize << i;
        for s in 0..v.len() {
            if s & bit != 0 {
                let lower = v[s ^ bit].clone();
                if mobius {
                    v[s] -= lower;
                } else {
                    v[s] += lower;
                }
            }
        }
    }
}

type QshMemo = BTreeMap<(Vec<usize>, Vec<usize>), Vec<(Vec<usize>, u64)>>;

/// Multiset of compositions in the quasi-shuffle of `a` and `b`.
fn quasi_shuffle(a: &[usize], b: &[usize], memo: &mut QshMemo) -> Vec<(Vec<usize>, u64)> {
    if a.is_empty() {
        return vec![(b.to_vec(), 1)];
    }
    if b.is_empty() {
        return vec![(a.to_vec(), 1)];
    }
    let key = (a.to_vec(), b.to_vec());
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let mut acc: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut push = |head: usize, tails: Vec<(Vec<usize>, u64)>| {
        for (t, m) in tails {
            let mut w = Vec::with_capacity(t.len() + 1);
            w.push(head);
            w.extend(t);
            *acc.entry(w).or_insert(0) += m;
        }
    };
    push(a[0], quasi_shuffle(&a[1..], b, memo));
    push(b[0], quasi_shuffle(a, &b[1..], memo));
    push(a[0] + b[0], quasi_shuffle(&a[1..], &b[1..], memo));
    let r: Vec<_> = acc.into_iter().collect();
    memo.insert(key, r.clone());
    r
}

/// Strictly increasing index sequences of length `t` in `0..k`.
pub(crate) fn increasing_sequences(k: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(start: usize, k: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            if k - i < t - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, t, cur, out);
            cur.pop();
        }
    }
    rec(0, k, t, &mut cur, &mut out);
    out
}

/// Distinct orderings of a sorted multiset.
fn multiset_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<u32> = sorted.iter().map(|&x| x as u32).collect();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.iter().map(|&x| x as usize).collect());
        if !crate::combinatorics::next_permutation(&mut cur) {
            break;
        }
    }
    out
}

impl fmt::Debug for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSym[{}](", self.n)?;
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·M{}", c, k.set_string())?;
        }
        write!(f, ")")
    }
}

impl Add for &QSymElem {
    type Output = QSymElem;
    fn add(self, rhs: &QSymElem) -> QSymElem {
        self.checked_add(rhs)
            .expect("adding quasi-symmetric functions of different degrees")
    }
}

impl Sub for &QSymElem {
    type Output = QSymElem;
    fn sub(self, rhs: &QSymElem) -> QSymElem {
        self.checked_sub(rhs)
            .expect("subtracting quasi-symmetric functions of different degrees")
    }
}

impl Mul for &QSymElem {
    type Output = QSymElem;
    fn mul(self, rhs: &QSymElem) -> QSymElem {
        QSymElem::mul(self, rhs)
    }
}

impl Neg for &QSymElem {
    type Output = QSymElem;
    fn neg(self) -> QSymElem {
        self.scale(&rat(-1))
    }
}

/// A polynomial in `x_1, ..., x_k` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncPoly {
    k: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl TruncPoly {
    pub fn zero(k: usize) -> Self {
        TruncPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, c: Rat) -> Self {
        let mut p = Self::zero(k);
        p.add_term(vec![0; k], c);
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.k);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::TruncationMismatch(self.k, other.k));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.k);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::TruncationMismatch(self.k, other.k));
        }
        let mut out = Self::zero(self.k);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }
}

/// An integer partition, parts weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    pub fn is_hook(&self) -> bool {
        self.0.len() <= 1 || self.0[1] <= 1
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.0.clone()).unwrap()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Dominance order `self ⊴ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        self.n() == other.n()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_braced_list(s, '(', ')')?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{des_set, shuffles, BijWord};

    fn s(n: usize, e: &[usize]) -> NSubset {
        NSubset::new(n, e.iter().copied()).unwrap()
    }

    fn fund(n: usize, e: &[usize]) -> QSymElem {
        QSymElem::fundamental(&s(n, e)).unwrap()
    }

    #[test]
    fn h2_in_monomials() {
        let h2 = QSymElem::h(2);
        assert_eq!(h2.m_coeffs().len(), 2);
        assert_eq!(h2.m_coeff(&s(2, &[])), rat(1));
        assert_eq!(h2.m_coeff(&s(2, &[1])), rat(1));
    }

    #[test]
    fn e_n_is_a_single_monomial() {
        let e4 = QSymElem::e(4);
        assert_eq!(e4.m_coeffs().len(), 1);
        assert_eq!(e4.m_coeff(&NSubset::lower_full(4)), rat(1));
    }

    #[test]
    fn rejects_top_element() {
        assert!(QSymElem::fundamental(&s(3, &[3])).is_err());
    }

    #[test]
    fn f_round_trip() {
        for n in 0..=7 {
            for j in NSubset::all_lower(n) {
                let f = QSymElem::fundamental(&j).unwrap();
                let fc = f.f_coeffs();
                assert_eq!(fc.len(), 1);
                assert_eq!(fc[&j], rat(1));
            }
        }
    }

    #[test]
    fn h1_squared() {
        let h1 = QSymElem::h(1);
        assert_eq!(&h1 * &h1, &fund(2, &[]) + &fund(2, &[1]));
    }

    #[test]
    fn shuffle_rule_for_small_words() {
        let u: BijWord = "(3,1,2)".parse().unwrap();
        let v: BijWord = "(5,4)".parse().unwrap();
        let lhs = &QSymElem::fundamental(&des_set(&u)).unwrap()
            * &QSymElem::fundamental(&des_set(&v)).unwrap();
        let mut rhs = QSymElem::zero(5);
        for w in shuffles(&u, &v).unwrap() {
            rhs = &rhs + &QSymElem::fundamental(&des_set(&w)).unwrap();
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncated_expansion() {
        let m = QSymElem::monomial(&s(2, &[1])).unwrap().expand_truncated(2);
        assert_eq!(m.terms().len(), 1);
        assert_eq!(m.coeff(&[1, 1]), rat(1));
        let h = QSymElem::h(2).expand_truncated(2);
        assert_eq!(h.terms().len(), 3);
        for e in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(h.coeff(&e), rat(1));
        }
    }

    #[test]
    fn symmetry_tests() {
        assert!(QSymElem::h(4).is_symmetric());
        assert!(!fund(3, &[1]).is_symmetric());
        let e2 = QSymElem::e(2);
        assert_eq!(e2.inner_h(&"(1,1)".parse().unwrap()).unwrap(), rat(1));
        assert_eq!(e2.inner_h(&"(2)".parse().unwrap()).unwrap(), rat(0));
        assert_eq!(
            fund(3, &[1]).inner_h(&"(2,1)".parse().unwrap()),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn s21_inner_products() {
        let s21 = &fund(3, &[1]) + &fund(3, &[2]);
        assert_eq!(s21.inner_h(&"(2,1)".parse().unwrap()).unwrap(), rat(1));
        assert_eq!(s21.inner_h(&"(1,1,1)".parse().unwrap()).unwrap(), rat(2));
        assert_eq!(s21.inner_h(&"(3)".parse().unwrap()).unwrap(), rat(0));
    }

    #[test]
    fn omega_swaps_h_and_e() {
        assert_eq!(QSymElem::h(5).omega(), QSymElem::e(5));
        assert_eq!(QSymElem::one().omega(), QSymElem::one());
    }

    #[test]
    fn partitions_and_conjugates() {
        let ps = Partition::all(4);
        let names: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(Partition::all(6).len(), 11);
        let p: Partition = "(4,2,1)".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = &fund(4, &[1, 3]).scale(&crate::arith::rat_frac(3, 2)) + &fund(4, &[2]);
        for b in [QBasis::M, QBasis::F] {
            let v = f.to_json(b);
            assert_eq!(QSymElem::from_json(&v).unwrap(), f);
        }
        let v = f.to_json(QBasis::F);
        assert_eq!(v["basis"], "F");
        assert_eq!(v["terms"][0]["set"], serde_json::json!([1, 3]));
        assert_eq!(v["terms"][0]["coeff"], "3/2");
    }
}
