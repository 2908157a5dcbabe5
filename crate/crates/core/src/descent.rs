//! Descent classes in the group ring of the symmetric group and the internal
//! coproduct restricted to cyclic quasi-symmetric functions.
//!
//! Products follow the convention `(σ₂σ₁)(i) = σ₂(σ₁(i))`: the right factor acts first.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{rat, rat_to_string, Rat};
use crate::combinatorics::{
    cdes_set, cyclic_class, des_set, permutations, BijWord, CyclicClass, NSubset,
};
use crate::cqsym::{hfcyc_as_qsym, CBasis, CQSymElem};
use crate::error::{Error, Result};
use crate::qsym::{Partition, QSymElem, TruncPoly};
use crate::schur::schur_straight;

/// Default cap on `n` for group-ring products.
pub const DEFAULT_MAX_N: usize = 7;

/// An integer combination of permutations of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSum {
    n: usize,
    terms: BTreeMap<BijWord, i64>,
}

impl PermSum {
    pub fn zero(n: usize) -> Self {
        PermSum {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_terms(n, [(BijWord::identity(n), 1)]).unwrap()
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BijWord, i64)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.len() != n || w.support().iter().any(|&x| x == 0 || x as usize > n) {
                return Err(Error::DegreeMismatch(w.len(), n));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: BijWord, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.get(&w).copied().unwrap_or(0) + c;
        if v == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BijWord, i64> {
        &self.terms
    }

    pub fn coeff(&self, w: &BijWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PermSum) -> Result<PermSum> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> PermSum {
        let mut out = Self::zero(self.n);
        for (w, &v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "terms": self.terms.iter().map(|(w, c)| serde_json::json!({
                "perm": w.letters(),
                "coeff": c,
            })).collect::<Vec<_>>(),
        })
    }
}

/// `σ₂σ₁`, applying `σ₁` first.
pub fn compose(s2: &BijWord, s1: &BijWord) -> BijWord {
    let l2 = s2.letters();
    BijWord::new(s1.letters().iter().map(|&i| l2[i as usize - 1]).collect()).unwrap()
}

/// Group-ring product `x · y`, bilinear in [`compose`].
pub fn gr_multiply(x: &PermSum, y: &PermSum) -> Result<PermSum> {
    if x.n != y.n {
        return Err(Error::DegreeMismatch(x.n, y.n));
    }
    let mut acc: BTreeMap<BijWord, i64> = BTreeMap::new();
    for (s2, c2) in &x.terms {
        for (s1, c1) in &y.terms {
            *acc.entry(compose(s2, s1)).or_insert(0) += c1 * c2;
        }
    }
    acc.retain(|_, c| *c != 0);
    Ok(PermSum { n: x.n, terms: acc })
}

fn check_lower(n: usize, i: &NSubset) -> Result<()> {
    if i.n() != n || i.contains(n) {
        return Err(Error::OutOfRange {
            elem: n,
            n: n.saturating_sub(1),
        });
    }
    Ok(())
}

fn check_non_escher(n: usize, a: &CyclicClass) -> Result<()> {
    if a.n() != n {
        return Err(Error::DegreeMismatch(a.n(), n));
    }
    if !a.is_proper() {
        return Err(Error::EscherClass(a.canonical().to_string()));
    }
    Ok(())
}

/// `D_I = Σ_{Des(π) = I} π`.
pub fn d_elem(n: usize, i: &NSubset) -> Result<PermSum> {
    check_lower(n, i)?;
    PermSum::from_terms(
        n,
        permutations(n)
            .into_iter()
            .filter(|p| des_set(p) == *i)
            .map(|p| (p, 1)),
    )
}

/// `cD_A = Σ_{cDes(π) ∈ A} π`.
pub fn cd_elem(n: usize, a: &CyclicClass) -> Result<PermSum> {
    check_non_escher(n, a)?;
    PermSum::from_terms(
        n,
        permutations(n)
            .into_iter()
            .filter(|p| a.contains(&cdes_set(p)))
            .map(|p| (p, 1)),
    )
}

/// Counts of `(Des σ₁, Des σ₂)` over factorizations `σ₂σ₁ = π`, keyed by `Des π`.
pub type DesTable = BTreeMap<NSubset, BTreeMap<(NSubset, NSubset), u64>>;

/// Counts of `([cDes σ₁], Des σ₂)` over factorizations `σ₂σ₁ = π`, keyed by `[cDes π]`.
pub type CDesTable = BTreeMap<CyclicClass, BTreeMap<(CyclicClass, NSubset), u64>>;

fn check_n(n: usize) -> Result<()> {
    if n > DEFAULT_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: DEFAULT_MAX_N,
        });
    }
    Ok(())
}

type Tally<K, L> = BTreeMap<K, BTreeMap<(L, NSubset), u64>>;

/// Tallies, for every `π`, the factorizations `σ₂σ₁ = π` by a pair of keys,
/// and insists the tally depend only on `key(π)`.
fn factorization_table<K: Ord + Clone + std::fmt::Debug, L: Ord + Clone>(
    n: usize,
    target: impl Fn(&BijWord) -> K,
    left: impl Fn(&BijWord) -> L,
) -> Result<Tally<K, L>> {
    check_n(n)?;
    let perms = permutations(n);
    let info: Vec<(BijWord, L)> = perms.iter().map(|p| (p.inverse(), left(p))).collect();
    let mut out: BTreeMap<K, BTreeMap<(L, NSubset), u64>> = BTreeMap::new();
    for pi in &perms {
        let mut tally: BTreeMap<(L, NSubset), u64> = BTreeMap::new();
        for (inv1, l) in &info {
            let s2 = compose(pi, inv1);
            *tally.entry((l.clone(), des_set(&s2))).or_insert(0) += 1;
        }
        let key = target(pi);
        match out.get(&key) {
            Some(prev) if *prev != tally => {
                return Err(Error::NotWellDefined(format!(
                    "factorization counts differ between permutations with key {key:?}; one is {pi}"
                )))
            }
            Some(_) => {}
            None => {
                out.insert(key, tally);
            }
        }
    }
    Ok(out)
}

/// `a_K^{IJ}` for all `I, J, K`, checked for independence of `π`.
pub fn a_table(n: usize) -> Result<DesTable> {
    factorization_table(n, des_set, des_set)
}

/// `ã_B^{AJ}` for all `A, J, B`, checked for independence of `π`.
pub fn tilde_a_table(n: usize) -> Result<CDesTable> {
    if n < 2 {
        return Err(Error::OutOfBounds(format!("need n >= 2, got {n}")));
    }
    factorization_table(
        n,
        |p| cyclic_class(&cdes_set(p)),
        |p| cyclic_class(&cdes_set(p)),
    )
}

pub fn a_const(n: usize, i: &NSubset, j: &NSubset, k: &NSubset) -> Result<u64> {
    for s in [i, j, k] {
        check_lower(n, s)?;
    }
    let t = a_table(n)?;
    let row = t.get(k).ok_or_else(|| Error::Unrealizable {
        n,
        set: k.to_string(),
    })?;
    Ok(row.get(&(*i, *j)).copied().unwrap_or(0))
}

pub fn tilde_a(n: usize, a: &CyclicClass, j: &NSubset, b: &CyclicClass) -> Result<u64> {
    check_non_escher(n, a)?;
    check_non_escher(n, b)?;
    check_lower(n, j)?;
    let t = tilde_a_table(n)?;
    let row = t.get(b).ok_or_else(|| Error::Unrealizable {
        n,
        set: b.canonical().to_string(),
    })?;
    Ok(row.get(&(*a, *j)).copied().unwrap_or(0))
}

/// An element of `cQSym_n ⊗ QSym_n` in the basis `hF^cyc_{n,A} ⊗ F_{n,J}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct {
    pub n: usize,
    pub terms: BTreeMap<(CyclicClass, NSubset), Rat>,
}

impl Coproduct {
    fn from_map(n: usize, mut terms: BTreeMap<(CyclicClass, NSubset), Rat>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Coproduct { n, terms }
    }

    /// Expansion in `F_{n,I} ⊗ F_{n,J}`.
    pub fn to_ff(&self) -> FTensor {
        let mut out = FTensor::new();
        for ((a, j), c) in &self.terms {
            for (i, v) in hfcyc_as_qsym(a).f_coeffs() {
                *out.entry((i, *j)).or_insert_with(Rat::zero) += c * v;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn is_integral_nonnegative(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && *c >= Rat::zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "terms": self.terms.iter().map(|((a, j), c)| serde_json::json!({
                "class": a.canonical().elements(),
                "set": j.elements(),
                "coeff": rat_to_string(c),
            })).collect::<Vec<_>>(),
        })
    }
}

/// An element of `QSym_n ⊗ QSym_n` in the basis `F_{n,I} ⊗ F_{n,J}`.
pub type FTensor = BTreeMap<(NSubset, NSubset), Rat>;

/// Groups `Σ c F_I ⊗ F_J` by `J` and rewrites each left factor in the `hF^cyc` basis.
fn left_to_hfcyc(n: usize, t: &FTensor) -> Result<Coproduct> {
    let mut by_right: BTreeMap<NSubset, BTreeMap<NSubset, Rat>> = BTreeMap::new();
    for ((i, j), c) in t {
        by_right.entry(*j).or_default().insert(*i, c.clone());
    }
    let mut terms = BTreeMap::new();
    for (j, left) in by_right {
        let f = QSymElem::from_f_coeffs(n, left)?;
        let e = CQSymElem::from_qsym(&f)?.to_basis(CBasis::HFcyc);
        for (a, c) in e.coeffs() {
            terms.insert((*a, j), c.clone());
        }
    }
    Ok(Coproduct::from_map(n, terms))
}

/// `Σ_σ F_{Des(σ w)} ⊗ F_{Des(σ^{-1})}`, with `w` the identity or the longest element.
fn cauchy_sum(n: usize, twisted: bool) -> FTensor {
    let w0 = BijWord::new((1..=n as u32).rev().collect()).unwrap();
    let mut out = FTensor::new();
    for s in permutations(n) {
        let left = if twisted { compose(&s, &w0) } else { s.clone() };
        *out.entry((des_set(&left), des_set(&s.inverse())))
            .or_insert_with(Rat::zero) += Rat::one();
    }
    out
}

/// `Δ_n(hF^cyc_{n,B})`.
///
/// Non-Escher classes use `(d_A/d_B) ã_B^{AJ}`; the classes `[∅]` and `[[n]]`
/// (that is, `h_n` and `e_n`) use the sums over `σ` pairing `Des` with inverse descents.
pub fn coproduct_fcyc(n: usize, b: &CyclicClass) -> Result<Coproduct> {
    if b.n() != n {
        return Err(Error::DegreeMismatch(b.n(), n));
    }
    if n == 0 {
        return Err(Error::OutOfBounds("need n >= 1".into()));
    }
    if b.is_empty_class() || b.is_full_class() || n == 1 {
        return left_to_hfcyc(n, &cauchy_sum(n, b.is_full_class() && n > 1));
    }
    let table = tilde_a_table(n)?;
    coproduct_from_table(n, b, &table)
}

fn coproduct_from_table(n: usize, b: &CyclicClass, table: &CDesTable) -> Result<Coproduct> {
    let row = &table[b];
    let terms = row
        .iter()
        .map(|((a, j), &c)| ((*a, *j), rat((c * a.d() as u64) as i64) / rat(b.d() as i64)))
        .collect();
    Ok(Coproduct::from_map(n, terms))
}

/// The internal coproduct on `QSym_n` applied to `F_{n,K}`.
pub fn qsym_coproduct_f(table: &DesTable, k: &NSubset) -> FTensor {
    table[k]
        .iter()
        .map(|(&(i, j), &c)| ((i, j), rat(c as i64)))
        .collect()
}

/// `Σ_{λ ⊢ n} s_λ ⊗ s_λ` (or `s_λ ⊗ s_λ'`) expanded in `F ⊗ F`.
pub fn schur_cauchy(n: usize, conjugate: bool) -> FTensor {
    let mut out = FTensor::new();
    for lam in Partition::all(n) {
        let right = if conjugate {
            lam.conjugate()
        } else {
            lam.clone()
        };
        let l = schur_straight(&lam).f_coeffs();
        let r = schur_straight(&right).f_coeffs();
        for (i, a) in &l {
            for (j, b) in &r {
                *out.entry((*i, *j)).or_insert_with(Rat::zero) += a * b;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Δ_n(h_n)` from the permutation sum, in `F ⊗ F`.
pub fn coproduct_h(n: usize) -> FTensor {
    cauchy_sum(n, false)
}

/// `Δ_n(e_n)` from the permutation sum, in `F ⊗ F`.
pub fn coproduct_e(n: usize) -> FTensor {
    cauchy_sum(n, n > 1)
}

/// `Δ_n(f)` for any `f ∈ QSym_n`, through `a_K^{IJ}`.
pub fn qsym_coproduct(table: &DesTable, f: &QSymElem) -> FTensor {
    let mut out = FTensor::new();
    for (k, c) in f.f_coeffs() {
        for (key, v) in qsym_coproduct_f(table, &k) {
            *out.entry(key).or_insert_with(Rat::zero) += c.clone() * v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CoproductReport {
    pub n: usize,
    pub classes_checked: usize,
    pub nonnegative_integral: bool,
    pub preserves_non_escher: bool,
    pub matches_qsym_coproduct: bool,
    pub h_matches_schur: bool,
    pub e_matches_schur: bool,
}

/// Checks every `Δ(hF^cyc_{n,B})` against the internal coproduct on `QSym_n`
/// and the two exceptional classes against their Schur forms.
pub fn coproduct_report(n: usize) -> Result<CoproductReport> {
    if n < 2 {
        return Err(Error::OutOfBounds(format!("need n >= 2, got {n}")));
    }
    let dt = a_table(n)?;
    let ct = tilde_a_table(n)?;
    let mut report = CoproductReport {
        n,
        classes_checked: 0,
        nonnegative_integral: true,
        preserves_non_escher: true,
        matches_qsym_coproduct: true,
        h_matches_schur: coproduct_h(n) == schur_cauchy(n, false),
        e_matches_schur: coproduct_e(n) == schur_cauchy(n, true),
    };
    for b in CyclicClass::all(n) {
        let delta = if b.is_proper() {
            coproduct_from_table(n, &b, &ct)?
        } else {
            coproduct_fcyc(n, &b)?
        };
        report.classes_checked += 1;
        if b.is_proper() {
            report.nonnegative_integral &= delta.is_integral_nonnegative();
            report.preserves_non_escher &= delta.terms.keys().all(|(a, _)| a.is_proper());
        }
        report.matches_qsym_coproduct &= delta.to_ff() == qsym_coproduct(&dt, &hfcyc_as_qsym(&b));
    }
    Ok(report)
}

/// `(Δ ⊗ id)∘Δ = (id ⊗ Δ_QSym)∘Δ` on `hF^cyc_{n,B}`.
pub fn coassociativity_holds(n: usize, b: &CyclicClass) -> Result<bool> {
    let dt = a_table(n)?;
    let delta = coproduct_fcyc(n, b)?;
    let mut cache: BTreeMap<CyclicClass, Coproduct> = BTreeMap::new();
    let mut lhs: BTreeMap<(CyclicClass, NSubset, NSubset), Rat> = BTreeMap::new();
    let mut rhs = lhs.clone();
    for ((a, j), c) in &delta.terms {
        if !cache.contains_key(a) {
            cache.insert(*a, coproduct_fcyc(n, a)?);
        }
        for ((a2, j2), c2) in &cache[a].terms {
            *lhs.entry((*a2, *j2, *j)).or_insert_with(Rat::zero) += c * c2;
        }
        for ((i1, i2), c2) in qsym_coproduct_f(&dt, j) {
            *rhs.entry((*a, i1, i2)).or_insert_with(Rat::zero) += c * c2;
        }
    }
    lhs.retain(|_, c| !c.is_zero());
    rhs.retain(|_, c| !c.is_zero());
    Ok(lhs == rhs)
}

/// Substitutes the lexicographically ordered alphabet `x_i y_j` (`i, j ≤ k`)
/// into `f` and returns a polynomial in `x_1..x_k, y_1..y_k`.
pub fn two_alphabet_expansion(f: &QSymElem, k: usize) -> TruncPoly {
    let z = f.expand_truncated(k * k);
    let mut out = TruncPoly::zero(2 * k);
    for (exps, c) in z.terms() {
        let mut e = vec![0u32; 2 * k];
        for (idx, &p) in exps.iter().enumerate() {
            e[idx / k] += p;
            e[k + idx % k] += p;
        }
        out.add_term(e, c.clone());
    }
    out
}

/// `Σ c · f_A(X) g_J(Y)` over the terms of a coproduct, truncated to `k` variables each.
pub fn coproduct_expansion(delta: &Coproduct, k: usize) -> TruncPoly {
    let mut out = TruncPoly::zero(2 * k);
    for ((a, j), c) in &delta.terms {
        let x = hfcyc_as_qsym(a).expand_truncated(k);
        let y = QSymElem::fundamental(j).unwrap().expand_truncated(k);
        for (ex, cx) in x.terms() {
            for (ey, cy) in y.terms() {
                let mut e = ex.clone();
                e.extend_from_slice(ey);
                out.add_term(e, c * cx * cy);
            }
        }
    }
    out
}

/// Compares `hF^cyc_{n,B}(XY)` with the coproduct, both as polynomials in two alphabets.
pub fn two_alphabet_check(n: usize, b: &CyclicClass, k: usize) -> Result<bool> {
    let delta = coproduct_fcyc(n, b)?;
    Ok(two_alphabet_expansion(&hfcyc_as_qsym(b), k) == coproduct_expansion(&delta, k))
}

#[derive(Clone, Debug, Serialize)]
pub struct LeftModuleReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub holds: bool,
    /// First failing `(J, A)`, if any.
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

/// Checks `D_J · cD_A = Σ_B ã_B^{AJ} cD_B` for all `J ⊆ [n-1]` and non-Escher `A`.
pub fn left_module_check(n: usize) -> Result<LeftModuleReport> {
    let table = tilde_a_table(n)?;
    let classes: Vec<CyclicClass> = CyclicClass::all_proper(n);
    let cds: BTreeMap<CyclicClass, PermSum> = classes
        .iter()
        .map(|a| Ok((*a, cd_elem(n, a)?)))
        .collect::<Result<_>>()?;
    let mut report = LeftModuleReport {
        n,
        pairs_checked: 0,
        holds: true,
        counterexample: None,
    };
    for j in NSubset::all_lower(n) {
        let dj = d_elem(n, &j)?;
        for a in &classes {
            let lhs = gr_multiply(&dj, &cds[a])?;
            let mut rhs = PermSum::zero(n);
            for b in &classes {
                let c = table[b].get(&(*a, j)).copied().unwrap_or(0);
                rhs = rhs.add(&cds[b].scale(c as i64))?;
            }
            report.pairs_checked += 1;
            if lhs != rhs && report.holds {
                report.holds = false;
                report.counterexample = Some((j.elements(), a.canonical().elements()));
            }
        }
    }
    Ok(report)
}

/// The `cD` classes partition `S_n`, so `x` lies in their span exactly when its
/// coefficient is constant on each class.
fn in_cd_span(x: &PermSum) -> bool {
    let mut seen: BTreeMap<CyclicClass, i64> = BTreeMap::new();
    for p in permutations(x.n) {
        let c = x.coeff(&p);
        let a = cyclic_class(&cdes_set(&p));
        if *seen.entry(a).or_insert(c) != c {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanWitness {
    pub n: usize,
    /// Left factor, as a class (`cD`) or a descent set (`D`).
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// First `(A, B)` with `cD_A · cD_B` outside the span of the `cD` elements.
pub fn non_algebra_witness(n: usize) -> Result<Option<SpanWitness>> {
    let classes = CyclicClass::all_proper(n);
    let cds: Vec<PermSum> = classes
        .iter()
        .map(|a| cd_elem(n, a))
        .collect::<Result<_>>()?;
    for (a, x) in classes.iter().zip(&cds) {
        for (b, y) in classes.iter().zip(&cds) {
            if !in_cd_span(&gr_multiply(x, y)?) {
                return Ok(Some(SpanWitness {
                    n,
                    left: a.canonical().elements(),
                    right: b.canonical().elements(),
                }));
            }
        }
    }
    Ok(None)
}

/// First `(A, J)` with `cD_A · D_J` outside the span of the `cD` elements.
pub fn non_right_module_witness(n: usize) -> Result<Option<SpanWitness>> {
    let classes = CyclicClass::all_proper(n);
    for a in &classes {
        let x = cd_elem(n, a)?;
        for j in NSubset::all_lower(n) {
            if !in_cd_span(&gr_multiply(&x, &d_elem(n, &j)?)?) {
                return Ok(Some(SpanWitness {
                    n,
                    left: a.canonical().elements(),
                    right: j.elements(),
                }));
            }
        }
    }
    Ok(None)
}
