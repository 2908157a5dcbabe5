//! Cyclic quasi-symmetric functions.
//!
//! Elements of degree `n` are kept as coefficient maps over rotation classes of
//! subsets of `[n]`, either in the normalized monomial basis `hM^cyc` or in the
//! normalized fundamental basis `hF^cyc`. The latter omits the class `[∅]`,
//! which is expressed through the linear dependence
//! `Σ_A (-1)^{r(A)} hF^cyc_{n,A} = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_integer, parse_rat, rat, rat_to_string, Rat};
use crate::combinatorics::{
    cdes_set, co, cyclic_class, cyclic_shuffles, des_set, least_permutation_with_cdes, shuffles,
    BijWord, Composition, CyclicClass, CyclicWord, NSubset,
};
use crate::error::{Error, Result};
use crate::qsym::QSymElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CBasis {
    #[serde(rename = "hMcyc")]
    HMcyc,
    #[serde(rename = "hFcyc")]
    HFcyc,
}

/// The two unnormalized families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Mcyc,
    Fcyc,
}

/// `M^cyc_{n,J} = Σ_{j ∈ J} M_{n,(J-j) ∩ [n-1]}`, zero for `J = ∅` (and `1` in degree 0).
pub fn mcyc_as_qsym(j: &NSubset) -> QSymElem {
    let n = j.n();
    if n == 0 {
        return QSymElem::one();
    }
    let mut out = QSymElem::zero(n);
    for e in j.iter() {
        let key = j.rotate(-(e as i64)).drop_top();
        out = &out + &QSymElem::monomial(&key).unwrap();
    }
    out
}

/// `F^cyc_{n,J} = Σ_{i ∈ [n]} F_{n,(J-i) ∩ [n-1]}` (and `1` in degree 0).
pub fn fcyc_as_qsym(j: &NSubset) -> QSymElem {
    let n = j.n();
    if n == 0 {
        return QSymElem::one();
    }
    let mut fc: BTreeMap<NSubset, Rat> = BTreeMap::new();
    for i in 1..=n {
        let key = j.rotate(-(i as i64)).drop_top();
        *fc.entry(key).or_insert_with(Rat::zero) += Rat::one();
    }
    QSymElem::from_f_coeffs(n, fc).unwrap()
}

/// `hM^cyc_{n,A} = M^cyc_{n,J} / d_A`.
pub fn hmcyc_as_qsym(a: &CyclicClass) -> QSymElem {
    mcyc_as_qsym(&a.canonical()).scale(&Rat::new(1.into(), a.d().into()))
}

/// `hF^cyc_{n,A} = F^cyc_{n,J} / d_A`.
pub fn hfcyc_as_qsym(a: &CyclicClass) -> QSymElem {
    fcyc_as_qsym(&a.canonical()).scale(&Rat::new(1.into(), a.d().into()))
}

/// `d_{A,B} = #{i ∈ Z/n : J ⊆ K + i}` for representatives `J ∈ A`, `K ∈ B`.
pub fn d_ab(a: &CyclicClass, b: &CyclicClass) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::DegreeMismatch(a.n(), b.n()));
    }
    let (j, k) = (a.canonical(), b.canonical());
    let n = a.n().max(1) as i64;
    Ok((0..n).filter(|&i| j.is_subset(&k.rotate(i))).count())
}

/// The rotation class that indexes `M_α` inside `hM^cyc`: the partial sums of `α`, including `n`.
pub fn class_of_composition(c: &Composition) -> CyclicClass {
    let n = c.n();
    let j = c.descent_set();
    if n == 0 {
        return cyclic_class(&j);
    }
    cyclic_class(&j.with(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct CQSymElem {
    n: usize,
    basis: CBasis,
    coeffs: BTreeMap<CyclicClass, Rat>,
}

impl CQSymElem {
    pub fn zero(n: usize, basis: CBasis) -> Self {
        CQSymElem {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> CBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<CyclicClass, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, a: &CyclicClass) -> Rat {
        self.coeffs.get(a).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, a: CyclicClass, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(a).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    /// Builds an element from coefficients on classes; in the `hFcyc` basis a
    /// coefficient on `[∅]` is rewritten through the linear dependence.
    pub fn from_terms<I: IntoIterator<Item = (CyclicClass, Rat)>>(
        n: usize,
        basis: CBasis,
        terms: I,
    ) -> Result<Self> {
        let mut out = Self::zero(n, basis);
        for (a, c) in terms {
            if a.n() != n {
                return Err(Error::DegreeMismatch(a.n(), n));
            }
            out.add_class(a, c);
        }
        Ok(out)
    }

    fn add_class(&mut self, a: CyclicClass, c: Rat) {
        if self.n > 0 && a.is_empty_class() {
            match self.basis {
                // hM^cyc_{n,∅} = 0
                CBasis::HMcyc => {}
                CBasis::HFcyc => {
                    for b in CyclicClass::all_nonempty(self.n) {
                        let sign = if b.rank() % 2 == 0 { -1 } else { 1 };
                        self.add_term(b, &c * rat(sign));
                    }
                }
            }
        } else {
            self.add_term(a, c);
        }
    }

    /// A single normalized basis function, `hM^cyc_{n,[J]}` or `hF^cyc_{n,[J]}`.
    pub fn normalized(j: &NSubset, basis: CBasis) -> Self {
        Self::from_terms(j.n(), basis, [(cyclic_class(j), Rat::one())]).unwrap()
    }

    /// `M^cyc_{n,J}` or `F^cyc_{n,J}` written in the given normalized basis.
    pub fn unnormalized(j: &NSubset, family: Family, basis: CBasis) -> Self {
        let a = cyclic_class(j);
        let b = match family {
            Family::Mcyc => CBasis::HMcyc,
            Family::Fcyc => CBasis::HFcyc,
        };
        Self::from_terms(j.n(), b, [(a, rat(a.d() as i64))])
            .unwrap()
            .to_basis(basis)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.n, self.basis);
        for (a, v) in &self.coeffs {
            out.add_term(*a, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (a, c) in &other.to_basis(self.basis).coeffs {
            out.add_term(*a, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn to_basis(&self, basis: CBasis) -> Self {
        match (self.basis, basis) {
            (x, y) if x == y => self.clone(),
            (CBasis::HFcyc, CBasis::HMcyc) => hfcyc_to_hmcyc(self),
            _ => hmcyc_to_hfcyc(self),
        }
    }

    pub fn to_qsym(&self) -> QSymElem {
        let mut out = QSymElem::zero(self.n);
        for (a, c) in &self.coeffs {
            let f = match self.basis {
                CBasis::HMcyc => hmcyc_as_qsym(a),
                CBasis::HFcyc => hfcyc_as_qsym(a),
            };
            out = &out + &f.scale(c);
        }
        out
    }

    /// Decides membership in `cQSym` and returns `hM^cyc` coordinates.
    pub fn from_qsym(f: &QSymElem) -> Result<Self> {
        let n = f.degree();
        let mut out = Self::zero(n, CBasis::HMcyc);
        if n == 0 {
            out.add_term(
                cyclic_class(&NSubset::empty(0)),
                f.m_coeff(&NSubset::empty(0)),
            );
            return Ok(out);
        }
        let mut seen = BTreeSet::new();
        for (k, c) in f.m_coeffs() {
            let alpha = co(k).unwrap();
            let a = class_of_composition(&alpha);
            if !seen.insert(a) {
                continue;
            }
            for r in 1..alpha.len() {
                let beta = alpha.rotate(r);
                let cb = f.m_coeff_comp(&beta);
                if &cb != c {
                    return Err(Error::NotCyclic {
                        left: alpha.parts().to_vec(),
                        left_coeff: rat_to_string(c),
                        right: beta.parts().to_vec(),
                        right_coeff: rat_to_string(&cb),
                    });
                }
            }
            out.add_term(a, c.clone());
        }
        Ok(out)
    }

    /// True when the `hF^cyc` coordinate of `[[n]]` vanishes (always for `n ≤ 1`).
    pub fn is_non_escher(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = cyclic_class(&NSubset::full(self.n));
        self.to_basis(CBasis::HFcyc).coeff(&full).is_zero()
    }

    /// `ω`, complementing classes in the `hF^cyc` basis.
    pub fn omega(&self) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let hf = self.to_basis(CBasis::HFcyc);
        let terms = hf.coeffs.iter().map(|(a, c)| (a.complement(), c.clone()));
        Self::from_terms(self.n, CBasis::HFcyc, terms)
            .unwrap()
            .to_basis(self.basis)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prod = self.to_qsym().mul(&other.to_qsym());
        Self::from_qsym(&prod)
            .expect("cQSym is closed under multiplication")
            .to_basis(self.basis)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(is_integer)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<ClassTermJson> = self
            .coeffs
            .iter()
            .map(|(a, c)| ClassTermJson {
                class: a.canonical().elements(),
                coeff: rat_to_string(c),
            })
            .collect();
        serde_json::to_value(CQSymJson {
            n: self.n,
            basis: self.basis,
            terms,
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let parsed: CQSymJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = parsed
            .terms
            .iter()
            .map(|t| {
                let j = NSubset::new(parsed.n, t.class.iter().copied())?;
                Ok((cyclic_class(&j), parse_rat(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(parsed.n, parsed.basis, terms)
    }
}

impl fmt::Debug for CQSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            CBasis::HMcyc => "hM",
            CBasis::HFcyc => "hF",
        };
        write!(f, "cQSym[{}](", self.n)?;
        for (i, (a, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}{}", c, name, a.canonical().set_string())?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassTermJson {
    class: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct CQSymJson {
    n: usize,
    basis: CBasis,
    terms: Vec<ClassTermJson>,
}

/// `hF^cyc_{n,A} = Σ_{B ≥ A} (d_{A,B} / d_A) hM^cyc_{n,B}`.
pub fn hfcyc_to_hmcyc(e: &CQSymElem) -> CQSymElem {
    assert_eq!(e.basis, CBasis::HFcyc);
    if e.n == 0 {
        return CQSymElem {
            basis: CBasis::HMcyc,
            ..e.clone()
        };
    }
    let classes = CyclicClass::all_nonempty(e.n);
    let mut out = CQSymElem::zero(e.n, CBasis::HMcyc);
    for (a, c) in &e.coeffs {
        for b in &classes {
            let dab = d_ab(a, b).unwrap();
            if dab > 0 {
                out.add_term(*b, c * Rat::new(dab.into(), a.d().into()));
            }
        }
    }
    out
}

/// `hM^cyc_{n,A} = Σ_{B ≥ A} (-1)^{r(B) - r(A)} (d_{A,B} / d_A) hF^cyc_{n,B}`.
pub fn hmcyc_to_hfcyc(e: &CQSymElem) -> CQSymElem {
    assert_eq!(e.basis, CBasis::HMcyc);
    if e.n == 0 {
        return CQSymElem {
            basis: CBasis::HFcyc,
            ..e.clone()
        };
    }
    let classes = CyclicClass::all_nonempty(e.n);
    let mut out = CQSymElem::zero(e.n, CBasis::HFcyc);
    for (a, c) in &e.coeffs {
        for b in &classes {
            let dab = d_ab(a, b).unwrap();
            if dab > 0 {
                let sign = if (b.rank() - a.rank()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                out.add_term(*b, c * Rat::new((sign * dab as i64).into(), a.d().into()));
            }
        }
    }
    out
}

/// Nonempty classes ordered by rank, then canonical representative, both descending.
pub fn display_order(n: usize) -> Vec<CyclicClass> {
    let mut classes = CyclicClass::all_nonempty(n);
    classes.sort_by(|x, y| {
        y.rank()
            .cmp(&x.rank())
            .then_with(|| y.canonical().cmp(&x.canonical()))
    });
    classes
}

/// Change-of-basis matrix expanding the fundamental family in the monomial one;
/// column `A` holds the coordinates of `F^cyc_A` (or `hF^cyc_A`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub n: usize,
    pub normalized: bool,
    pub classes: Vec<CyclicClass>,
    pub entries: Vec<Vec<Rat>>,
}

impl BasisMatrix {
    pub fn entries_i64(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| i64::try_from(x.to_integer()).expect("integer entry"))
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "normalized": self.normalized,
            "classes": self.classes.iter().map(|a| a.canonical().elements()).collect::<Vec<_>>(),
            "rows": self.entries.iter()
                .map(|r| r.iter().map(rat_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Unnormalized entries are `d_{A,B} / d_B`; normalized entries are `d_{A,B} / d_A`.
pub fn basis_matrix(n: usize, normalized: bool) -> BasisMatrix {
    let classes = display_order(n);
    let entries = classes
        .iter()
        .map(|b| {
            classes
                .iter()
                .map(|a| {
                    let dab = d_ab(a, b).unwrap() as i64;
                    let den = if normalized { a.d() } else { b.d() } as i64;
                    Rat::new(dab.into(), den.into())
                })
                .collect()
        })
        .collect();
    BasisMatrix {
        n,
        normalized,
        classes,
        entries,
    }
}

/// Multiplicities of cyclic-descent classes among the cyclic shuffles of two words.
pub fn cyclic_shuffle_expansion(u: &BijWord, v: &BijWord) -> Result<BTreeMap<CyclicClass, usize>> {
    let mut out = BTreeMap::new();
    for w in cyclic_shuffles(&CyclicWord::new(u), &CyclicWord::new(v))? {
        *out.entry(cyclic_class(&cdes_set(w.canonical())))
            .or_insert(0) += 1;
    }
    Ok(out)
}

/// `Σ_{[w] ∈ [u] ⧢_cyc [v]} F^cyc_{cDes(w)}` for explicit words.
pub fn product_via_words(u: &BijWord, v: &BijWord) -> Result<QSymElem> {
    let n = u.len() + v.len();
    let mut out = QSymElem::zero(n);
    for (a, m) in cyclic_shuffle_expansion(u, v)? {
        out = &out + &fcyc_as_qsym(&a.canonical()).scale(&rat(m as i64));
    }
    Ok(out)
}

/// `F^cyc_{a,J} · F^cyc_{b,K}` through cyclic shuffles of least representatives.
pub fn product_via_cyclic_shuffles(j: &NSubset, k: &NSubset) -> Result<QSymElem> {
    let u = least_permutation_with_cdes(j)?;
    let v = least_permutation_with_cdes(k)?;
    if u.is_empty() {
        return Ok(fcyc_as_qsym(k));
    }
    if v.is_empty() {
        return Ok(fcyc_as_qsym(j));
    }
    product_via_words(&u, &v.shifted(j.n() as u32))
}

/// The same product as a map from classes to the multiplicity of `F^cyc`.
pub fn product_expansion(j: &NSubset, k: &NSubset) -> Result<BTreeMap<CyclicClass, usize>> {
    let u = least_permutation_with_cdes(j)?;
    let v = least_permutation_with_cdes(k)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    cyclic_shuffle_expansion(&u, &v.shifted(j.n() as u32))
}

fn check_shuffle_form(w: &BijWord, a: usize, b: usize) -> Result<()> {
    let l = w.letters();
    let bad = || Error::NotInShuffleSet(l.to_vec());
    if l.len() != a + b || a == 0 {
        return Err(bad());
    }
    let mut sorted = l.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=(a + b) as u32).collect::<Vec<_>>() {
        return Err(bad());
    }
    let small: Vec<u32> = l.iter().copied().filter(|&x| x as usize <= a).collect();
    if small.windows(2).any(|p| p[0] < p[1]) {
        return Err(bad());
    }
    Ok(())
}

/// `cDes*(w) = Des(w) ∪ {a+b}` when `w(a+b) > w(1)` or `w(1) = a`, else `Des(w)`.
pub fn cdes_star(w: &BijWord, a: usize, b: usize) -> Result<NSubset> {
    check_shuffle_form(w, a, b)?;
    let l = w.letters();
    let d = des_set(w);
    if l[a + b - 1] > l[0] || l[0] as usize == a {
        Ok(d.with(a + b))
    } else {
        Ok(d)
    }
}

/// Moves every letter larger than `a` one position to the right (cyclically),
/// then fills the free positions with `a, a-1, ..., 1`.
pub fn promote_p(w: &BijWord, a: usize, b: usize) -> Result<BijWord> {
    check_shuffle_form(w, a, b)?;
    let len = a + b;
    let mut out = vec![0u32; len];
    for (i, &x) in w.letters().iter().enumerate() {
        if x as usize > a {
            out[(i + 1) % len] = x;
        }
    }
    let mut next = a as u32;
    for slot in out.iter_mut().filter(|s| **s == 0) {
        *slot = next;
        next -= 1;
    }
    Ok(BijWord::new(out).unwrap())
}

/// `W = ⋃_i (a, a-1, ..., 1) ⧢ w_0 c^i` for a word `w_0` on `{a+1, ..., a+b}`.
pub fn shuffle_set_w(a: usize, w0: &BijWord) -> Result<Vec<BijWord>> {
    let b = w0.len();
    let expected: BTreeSet<u32> = ((a + 1) as u32..=(a + b) as u32).collect();
    if w0.support() != expected {
        return Err(Error::NotInShuffleSet(w0.letters().to_vec()));
    }
    let dec = BijWord::new((1..=a as u32).rev().collect()).unwrap();
    let mut out = BTreeSet::new();
    for r in w0.rotations() {
        out.extend(shuffles(&dec, &r)?);
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> NSubset {
        NSubset::new(n, e.iter().copied()).unwrap()
    }

    fn fund(n: usize, e: &[usize]) -> QSymElem {
        QSymElem::fundamental(&s(n, e)).unwrap()
    }

    fn comp(p: &[usize]) -> QSymElem {
        QSymElem::monomial_comp(&Composition::new(p.to_vec()).unwrap())
    }

    #[test]
    fn monomial_cyclic_examples() {
        assert_eq!(mcyc_as_qsym(&s(4, &[1, 3])), comp(&[2, 2]).scale(&rat(2)));
        let expected = &(&comp(&[1, 2, 3]) + &comp(&[2, 3, 1])) + &comp(&[3, 1, 2]);
        assert_eq!(mcyc_as_qsym(&s(6, &[1, 2, 4])), expected);
        assert!(mcyc_as_qsym(&NSubset::empty(5)).is_zero());
    }

    #[test]
    fn fundamental_cyclic_examples() {
        let lhs = fcyc_as_qsym(&s(5, &[1, 3, 5]));
        let mut rhs = QSymElem::zero(5);
        for e in [&[1, 3][..], &[2, 4], &[1, 3, 4], &[2, 3], &[1, 2, 4]] {
            rhs = &rhs + &fund(5, e);
        }
        assert_eq!(lhs, rhs);
        let rhs6 = &fund(6, &[2, 4]).scale(&rat(3)) + &fund(6, &[1, 3, 5]).scale(&rat(3));
        assert_eq!(fcyc_as_qsym(&s(6, &[2, 4, 6])), rhs6);
        assert_eq!(
            fcyc_as_qsym(&NSubset::empty(4)),
            QSymElem::h(4).scale(&rat(4))
        );
    }

    #[test]
    fn normalized_special_cases() {
        let a = cyclic_class(&s(6, &[1, 4]));
        assert_eq!(hmcyc_as_qsym(&a), comp(&[3, 3]));
        for n in 1..=6 {
            assert_eq!(
                hfcyc_as_qsym(&cyclic_class(&NSubset::full(n))),
                QSymElem::e(n)
            );
            assert_eq!(
                hfcyc_as_qsym(&cyclic_class(&NSubset::empty(n))),
                QSymElem::h(n)
            );
        }
    }

    #[test]
    fn d_ab_examples() {
        let a = cyclic_class(&s(6, &[1, 4]));
        assert_eq!(d_ab(&a, &a).unwrap(), 2);
        let e = cyclic_class(&NSubset::empty(4));
        for b in CyclicClass::all(4) {
            assert_eq!(d_ab(&e, &b).unwrap(), 4);
        }
        let one = cyclic_class(&s(4, &[1]));
        let b = cyclic_class(&s(4, &[1, 3]));
        assert_eq!(d_ab(&one, &b).unwrap(), 2);
        assert!(d_ab(&one, &cyclic_class(&s(5, &[1]))).is_err());
    }

    #[test]
    fn small_normalized_matrices() {
        assert_eq!(
            basis_matrix(2, true).entries_i64(),
            vec![vec![1, 2], vec![0, 1]]
        );
        assert_eq!(
            basis_matrix(3, true).entries_i64(),
            vec![vec![1, 3, 3], vec![0, 1, 2], vec![0, 0, 1]]
        );
    }

    #[test]
    fn membership_witness() {
        let err = CQSymElem::from_qsym(&fund(6, &[1, 2, 4])).unwrap_err();
        match err {
            Error::NotCyclic { left, right, .. } => {
                assert_eq!(left.len(), right.len());
                assert_ne!(left, right);
            }
            other => panic!("unexpected {other:?}"),
        }
        let f = fcyc_as_qsym(&s(5, &[1, 3]));
        let e = CQSymElem::from_qsym(&f).unwrap().to_basis(CBasis::HFcyc);
        assert_eq!(e.coeffs().len(), 1);
        assert!(CQSymElem::from_qsym(&QSymElem::h(3).pow(2)).is_ok());
    }

    #[test]
    fn empty_class_in_fundamental_basis() {
        for n in 1..=6 {
            let h = CQSymElem::normalized(&NSubset::empty(n), CBasis::HFcyc);
            assert!(!h.coeffs().contains_key(&cyclic_class(&NSubset::empty(n))));
            assert_eq!(h.to_qsym(), QSymElem::h(n));
            let m = CQSymElem::normalized(&NSubset::empty(n), CBasis::HMcyc);
            assert!(m.is_zero());
        }
    }

    #[test]
    fn escher_and_omega() {
        let n = 5;
        let x = CQSymElem::normalized(&s(n, &[1]), CBasis::HFcyc);
        assert!(x.is_non_escher());
        let e = CQSymElem::normalized(&NSubset::full(n), CBasis::HFcyc);
        assert!(!e.is_non_escher());
        let h = CQSymElem::normalized(&NSubset::empty(n), CBasis::HFcyc);
        assert_eq!(h.omega(), e);
        let y = CQSymElem::normalized(&s(4, &[1, 3]), CBasis::HFcyc);
        assert_eq!(y.omega(), y);
    }

    #[test]
    fn worked_product_both_paths() {
        let j = s(3, &[1]);
        let k = s(2, &[1]);
        let via_shuffles = product_via_cyclic_shuffles(&j, &k).unwrap();
        let via_qsh = fcyc_as_qsym(&j).mul(&fcyc_as_qsym(&k));
        assert_eq!(via_shuffles, via_qsh);
        let mut expected = QSymElem::zero(5);
        for (set, m) in [
            (&[1, 2, 3][..], 1),
            (&[1, 2, 4], 3),
            (&[1, 2], 2),
            (&[1, 3], 5),
            (&[1], 1),
        ] {
            expected = &expected + &fcyc_as_qsym(&s(5, set)).scale(&rat(m));
        }
        assert_eq!(via_qsh, expected);
    }

    #[test]
    fn singletons_product() {
        let j = NSubset::empty(1);
        let p = product_via_cyclic_shuffles(&j, &j).unwrap();
        // one cyclic shuffle class, and h_1^2 = F_{2,∅} + F_{2,{1}} = F^cyc_{2,{1}}
        assert_eq!(p, fcyc_as_qsym(&s(2, &[1])));
        assert_eq!(p, QSymElem::h(1).pow(2));
        assert_eq!(p, fcyc_as_qsym(&j).mul(&fcyc_as_qsym(&j)));
    }

    #[test]
    fn unrealizable_factors() {
        assert!(product_via_cyclic_shuffles(&NSubset::empty(3), &s(2, &[1])).is_err());
        assert!(product_via_cyclic_shuffles(&NSubset::full(3), &s(2, &[1])).is_err());
    }

    #[test]
    fn cdes_star_example() {
        let w: BijWord = "(4,3,7,5,2,6,1)".parse().unwrap();
        assert_eq!(cdes_star(&w, 4, 3).unwrap(), s(7, &[1, 3, 4, 6, 7]));
        let p = promote_p(&w, 4, 3).unwrap();
        assert_eq!(p, "(4,3,2,7,5,1,6)".parse().unwrap());
        assert_eq!(cdes_star(&p, 4, 3).unwrap(), s(7, &[1, 2, 4, 5, 7]));
        let p2 = promote_p(&p, 4, 3).unwrap();
        assert_eq!(p2, "(6,4,3,2,7,5,1)".parse().unwrap());
        assert_eq!(cdes_star(&p2, 4, 3).unwrap(), s(7, &[1, 2, 3, 5, 6]));
        let bad: BijWord = "(3,4,7,5,2,6,1)".parse().unwrap();
        assert!(cdes_star(&bad, 4, 3).is_err());
    }

    #[test]
    fn json_shape() {
        let x = CQSymElem::normalized(&s(4, &[2, 4]), CBasis::HFcyc)
            .scale(&crate::arith::rat_frac(1, 3));
        let v = x.to_json();
        assert_eq!(v["basis"], "hFcyc");
        assert_eq!(v["terms"][0]["class"], serde_json::json!([1, 3]));
        assert_eq!(v["terms"][0]["coeff"], "1/3");
        assert_eq!(CQSymElem::from_json(&v).unwrap(), x);
    }
}
