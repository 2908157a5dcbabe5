//! Skew shapes, standard Young tableaux, Schur functions and their
//! expansions in the normalized fundamental cyclic basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{binom, is_integer, rat, rat_to_string, Rat};
use crate::combinatorics::{
    cc, cdes_set, cyclic_class, cyclic_shuffles, next_permutation, permutations, BijWord,
    CyclicClass, CyclicWord, NSubset,
};
use crate::cqsym::{fcyc_as_qsym, hfcyc_as_qsym, CBasis, CQSymElem};
use crate::error::{Error, Result};
use crate::qsym::{Partition, QSymElem};

/// Default bound on `n` for the permutation-side identity checks.
pub const DEFAULT_SN_BOUND: usize = 7;

/// Default bound on `m + n` for the disconnected shuffle identity.
pub const DEFAULT_DISCONNECTED_BOUND: usize = 9;

/// A skew shape `λ/μ` in English notation, row 0 on top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if mu.len() > lambda.len() || mu.parts().iter().zip(lambda.parts()).any(|(m, l)| m > l) {
            return Err(Error::InvalidShape(format!(
                "{mu} is not contained in {lambda}"
            )));
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            lambda,
            mu: Partition::new(vec![]).unwrap(),
        }
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        Self::new(
            Partition::new(lambda.to_vec())?,
            Partition::new(mu.to_vec())?,
        )
    }

    /// A single row `(k)`.
    pub fn row(k: usize) -> Self {
        Self::straight(Partition::new(if k == 0 { vec![] } else { vec![k] }).unwrap())
    }

    /// A single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self::straight(Partition::new(vec![1; k]).unwrap())
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    fn mu_row(&self, r: usize) -> usize {
        self.mu.parts().get(r).copied().unwrap_or(0)
    }

    fn lambda_row(&self, r: usize) -> usize {
        self.lambda.parts().get(r).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn size(&self) -> usize {
        self.lambda.n() - self.mu.n()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| (self.mu_row(r)..self.lambda_row(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r < self.rows() && c >= self.mu_row(r) && c < self.lambda_row(r)
    }

    /// Connected components (edge adjacency), southwest first.
    pub fn components(&self) -> Vec<SkewShape> {
        let cells: BTreeSet<(usize, usize)> = self.cells().into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();
        for &start in &cells {
            if seen.contains(&start) {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen.insert(start);
            while let Some((r, c)) = stack.pop() {
                comp.push((r, c));
                let mut nbrs = vec![(r + 1, c), (r, c + 1)];
                if r > 0 {
                    nbrs.push((r - 1, c));
                }
                if c > 0 {
                    nbrs.push((r, c - 1));
                }
                for nb in nbrs {
                    if cells.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
            comps.push(comp);
        }
        comps.sort_by_key(|comp| std::cmp::Reverse(comp.iter().map(|&(r, _)| r).max().unwrap()));
        comps.into_iter().map(|c| Self::from_cells(&c)).collect()
    }

    fn from_cells(cells: &[(usize, usize)]) -> SkewShape {
        let r0 = cells.iter().map(|&(r, _)| r).min().unwrap();
        let r1 = cells.iter().map(|&(r, _)| r).max().unwrap();
        let c0 = cells.iter().map(|&(_, c)| c).min().unwrap();
        let mut lam = Vec::new();
        let mut mu = Vec::new();
        for r in r0..=r1 {
            let cols: Vec<usize> = cells
                .iter()
                .filter(|&&(rr, _)| rr == r)
                .map(|&(_, c)| c)
                .collect();
            mu.push(cols.iter().min().unwrap() - c0);
            lam.push(cols.iter().max().unwrap() + 1 - c0);
        }
        SkewShape::from_parts(&lam, &mu).expect("component of a skew shape")
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// No 2×2 block of cells.
    pub fn is_ribbon(&self) -> bool {
        !self.cells().iter().any(|&(r, c)| {
            self.contains_cell(r + 1, c)
                && self.contains_cell(r, c + 1)
                && self.contains_cell(r + 1, c + 1)
        })
    }

    pub fn is_connected_ribbon(&self) -> bool {
        self.size() > 0 && self.is_connected() && self.is_ribbon()
    }

    /// A straight hook `(a, 1^b)`.
    pub fn is_hook(&self) -> bool {
        self.mu.is_empty() && self.lambda.is_hook()
    }

    /// `self ⊕ other`, with `self` southwest of `other`.
    pub fn direct_sum(&self, other: &SkewShape) -> SkewShape {
        let w = self.lambda_row(0);
        let mut lam: Vec<usize> = (0..other.rows()).map(|r| other.lambda_row(r) + w).collect();
        let mut mu: Vec<usize> = (0..other.rows()).map(|r| other.mu_row(r) + w).collect();
        lam.extend((0..self.rows()).map(|r| self.lambda_row(r)));
        mu.extend((0..self.rows()).map(|r| self.mu_row(r)));
        SkewShape::from_parts(&lam, &mu).unwrap()
    }

    /// Transpose.
    pub fn conjugate(&self) -> SkewShape {
        let lam = self.lambda.conjugate();
        let mut mu = self.mu.conjugate().parts().to_vec();
        mu.resize(mu.len().min(lam.len()), 0);
        SkewShape::new(lam, Partition::new(mu).unwrap()).unwrap()
    }

    /// All standard Young tableaux, in the order produced by placing `1, 2, ...`
    /// in the lowest available row first.
    pub fn syt_list(&self) -> Vec<Syt> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..self.rows()).map(|r| self.mu_row(r)).collect();
        let mut row_of = Vec::with_capacity(self.size());
        self.syt_rec(&mut cur, &mut row_of, &mut out);
        out
    }

    fn syt_rec(&self, cur: &mut Vec<usize>, row_of: &mut Vec<usize>, out: &mut Vec<Syt>) {
        if row_of.len() == self.size() {
            out.push(Syt {
                shape: self.clone(),
                row_of: row_of.clone(),
            });
            return;
        }
        for r in (0..self.rows()).rev() {
            if cur[r] < self.lambda_row(r) && (r == 0 || cur[r - 1] > cur[r]) {
                cur[r] += 1;
                row_of.push(r);
                self.syt_rec(cur, row_of, out);
                row_of.pop();
                cur[r] -= 1;
            }
        }
    }

    pub fn num_syt(&self) -> usize {
        self.syt_list().len()
    }

    /// All skew shapes with exactly `n` cells, up to translation: no empty
    /// rows and no empty columns.
    pub fn all_of_size(n: usize) -> Vec<SkewShape> {
        let mut out = BTreeSet::new();
        for comp in compositions(n) {
            let r = comp.len();
            let mut mu = vec![0usize; r];
            shapes_rec(&comp, r - 1, &mut mu, &mut out);
        }
        out.into_iter().collect()
    }
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![];
    }
    (0..1u64 << (n - 1))
        .map(|bits| {
            let mut parts = Vec::new();
            let mut last = 0;
            for i in 1..n {
                if bits & (1 << (i - 1)) != 0 {
                    parts.push(i - last);
                    last = i;
                }
            }
            parts.push(n - last);
            parts
        })
        .collect()
}

/// Chooses `μ` row by row from the bottom; row `i` has length `len[i]`.
fn shapes_rec(len: &[usize], i: usize, mu: &mut Vec<usize>, out: &mut BTreeSet<SkewShape>) {
    let r = len.len();
    let range = if i == r - 1 {
        0..=0
    } else {
        let below_lambda = mu[i + 1] + len[i + 1];
        let lo = mu[i + 1].max(below_lambda.saturating_sub(len[i]));
        lo..=below_lambda
    };
    for m in range {
        if i + 1 < r && m + len[i] < mu[i + 1] + len[i + 1] {
            continue;
        }
        mu[i] = m;
        if i == 0 {
            let lam: Vec<usize> = (0..r).map(|k| mu[k] + len[k]).collect();
            out.insert(SkewShape::from_parts(&lam, mu).unwrap());
        } else {
            shapes_rec(len, i - 1, mu, out);
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "{}", self.lambda)
        } else {
            write!(f, "{}/{}", self.lambda, self.mu)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `(4,3,2)`, `(4,3,2)/(1,1)` and `lambda=(4,3,2) mu=(1,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("lambda=") {
            let (lam, mu) = match rest.split_once("mu=") {
                Some((l, m)) => (l.trim(), m.trim()),
                None => (rest.trim(), "()"),
            };
            return SkewShape::new(lam.parse()?, mu.parse()?);
        }
        match s.split_once('/') {
            Some((l, m)) => SkewShape::new(l.parse()?, m.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// A standard Young tableau, stored as the row of each entry `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Syt {
    shape: SkewShape,
    row_of: Vec<usize>,
}

impl Syt {
    /// Builds a tableau from explicit rows of entries (cells of `μ` omitted).
    pub fn from_rows(shape: &SkewShape, rows: &[Vec<u32>]) -> Result<Syt> {
        let n = shape.size();
        let bad = |m: &str| Error::InvalidShape(format!("not a standard filling of {shape}: {m}"));
        if rows.len() != shape.rows() {
            return Err(bad("row count"));
        }
        let mut grid: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut row_of = vec![usize::MAX; n];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.lambda_row(r) - shape.mu_row(r) {
                return Err(bad("row length"));
            }
            for (k, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n || row_of[v as usize - 1] != usize::MAX {
                    return Err(bad("entries"));
                }
                row_of[v as usize - 1] = r;
                grid.insert((r, shape.mu_row(r) + k), v);
            }
        }
        for (&(r, c), &v) in &grid {
            if let Some(&right) = grid.get(&(r, c + 1)) {
                if right <= v {
                    return Err(bad("rows"));
                }
            }
            if let Some(&below) = grid.get(&(r + 1, c)) {
                if below <= v {
                    return Err(bad("columns"));
                }
            }
        }
        Ok(Syt {
            shape: shape.clone(),
            row_of,
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Rows of entries, top to bottom.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows = vec![Vec::new(); self.shape.rows()];
        for (i, &r) in self.row_of.iter().enumerate() {
            rows[r].push(i as u32 + 1);
        }
        rows
    }

    /// `{i : i+1 lies in a lower row than i}`.
    pub fn descent_set(&self) -> NSubset {
        let n = self.row_of.len();
        NSubset::new(n, (1..n).filter(|&i| self.row_of[i] > self.row_of[i - 1])).unwrap()
    }
}

impl fmt::Debug for Syt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syt{:?}", self.rows())
    }
}

/// `s_{λ/μ} = Σ_T F_{n, Des(T)}`.
pub fn schur(shape: &SkewShape) -> QSymElem {
    let n = shape.size();
    let mut counts: BTreeMap<NSubset, Rat> = BTreeMap::new();
    for t in shape.syt_list() {
        *counts.entry(t.descent_set()).or_insert_with(Rat::zero) += Rat::one();
    }
    QSymElem::from_f_coeffs(n, counts).unwrap()
}

pub fn schur_straight(lambda: &Partition) -> QSymElem {
    schur(&SkewShape::straight(lambda.clone()))
}

/// `s̃_{cc(J)} = Σ_{∅ ≠ I ⊆ J} (-1)^{#(J \ I)} h_{cc(I)}`.
pub fn cyclic_ribbon_schur(j: &NSubset) -> Result<QSymElem> {
    if j.is_empty() {
        return Err(Error::EmptyCyclicComposition);
    }
    let mut cache: BTreeMap<Vec<usize>, QSymElem> = BTreeMap::new();
    let mut out = QSymElem::zero(j.n());
    for i in j.subsets().into_iter().filter(|i| !i.is_empty()) {
        let key = cc(&i).unwrap().sorted_parts();
        let h = cache
            .entry(key.clone())
            .or_insert_with(|| QSymElem::h_product(&key))
            .clone();
        let sign = if (j.len() - i.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        out = &out + &h.scale(&rat(sign));
    }
    Ok(out)
}

/// `⟨f, h_λ⟩` for every `λ ⊢ n`, read off the `M` coefficients without a symmetry check.
fn h_pairings(f: &QSymElem) -> BTreeMap<Partition, Rat> {
    Partition::all(f.degree())
        .into_iter()
        .map(|l| {
            let v = f.m_coeff_comp(&l.as_composition());
            (l, v)
        })
        .collect()
}

/// `⟨f, s̃_{cc(J)}⟩` computed from the `h`-pairings.
fn ribbon_pairing(pair: &BTreeMap<Partition, Rat>, j: &NSubset) -> Rat {
    let mut acc = Rat::zero();
    for i in j.subsets().into_iter().filter(|i| !i.is_empty()) {
        let lam = Partition::new(cc(&i).unwrap().sorted_parts()).unwrap();
        let sign = if (j.len() - i.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        acc += &pair[&lam] * rat(sign);
    }
    acc
}

/// Coordinates of a symmetric function in the `hF^cyc` basis, one inner
/// product per class.
pub fn symmetric_in_hfcyc(f: &QSymElem) -> Result<CQSymElem> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.degree();
    if n == 0 {
        return CQSymElem::from_terms(
            0,
            CBasis::HFcyc,
            [(
                cyclic_class(&NSubset::empty(0)),
                f.m_coeff(&NSubset::empty(0)),
            )],
        );
    }
    let pair = h_pairings(f);
    let terms = CyclicClass::all_nonempty(n).into_iter().map(|a| {
        let v = ribbon_pairing(&pair, &a.canonical());
        (a, v)
    });
    CQSymElem::from_terms(n, CBasis::HFcyc, terms)
}

/// Cyclic-descent fiber sizes of a shape, `m^cyc(A) = ⟨s_{λ/μ}, s̃_{cc(J)}⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTable {
    pub shape: SkewShape,
    /// Nonzero values only, keyed by class.
    pub fibers: BTreeMap<CyclicClass, Rat>,
    /// False for connected ribbons, where no cyclic extension exists.
    pub proper: bool,
}

impl FiberTable {
    pub fn get(&self, a: &CyclicClass) -> Rat {
        self.fibers.get(a).cloned().unwrap_or_else(Rat::zero)
    }

    /// `m^cyc(J)` for a subset.
    pub fn fiber_of(&self, j: &NSubset) -> Rat {
        if j.is_empty() {
            return Rat::zero();
        }
        self.get(&cyclic_class(j))
    }

    /// `Σ_A #A · m^cyc(A)`.
    pub fn total(&self) -> Rat {
        self.fibers
            .iter()
            .map(|(a, m)| m * rat(a.orbit_size() as i64))
            .fold(Rat::zero(), |x, y| x + y)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.to_string(),
            "n": self.shape.size(),
            "proper": self.proper,
            "fibers": self.fibers.iter().map(|(a, m)| serde_json::json!({
                "class": a.canonical().elements(),
                "orbit_size": a.orbit_size(),
                "value": rat_to_string(m),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn cdes_fibers(shape: &SkewShape) -> FiberTable {
    let s = schur(shape);
    let n = shape.size();
    let pair = h_pairings(&s);
    let mut fibers = BTreeMap::new();
    if n > 0 {
        for a in CyclicClass::all_nonempty(n) {
            let v = ribbon_pairing(&pair, &a.canonical());
            if !v.is_zero() {
                fibers.insert(a, v);
            }
        }
    }
    FiberTable {
        shape: shape.clone(),
        fibers,
        proper: !shape.is_connected_ribbon(),
    }
}

/// `s_{λ/μ} = Σ_A m^cyc(A) hF^cyc_{n,A}` for shapes that are not connected ribbons.
pub fn schur_in_hfcyc(shape: &SkewShape) -> Result<CQSymElem> {
    if shape.is_connected_ribbon() {
        return Err(Error::ConnectedRibbon(shape.to_string()));
    }
    let t = cdes_fibers(shape);
    CQSymElem::from_terms(shape.size(), CBasis::HFcyc, t.fibers)
}

/// Schur coefficients of a symmetric function, by a unitriangular solve
/// against Kostka numbers in decreasing lexicographic order.
pub fn schur_expansion(f: &QSymElem) -> Result<BTreeMap<Partition, Rat>> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.degree();
    let parts = Partition::all(n);
    let pair = h_pairings(f);
    let kostka: BTreeMap<Partition, BTreeMap<Partition, Rat>> = parts
        .iter()
        .map(|mu| (mu.clone(), h_pairings(&schur_straight(mu))))
        .collect();
    let mut coeffs: BTreeMap<Partition, Rat> = BTreeMap::new();
    for lam in &parts {
        let mut v = pair[lam].clone();
        for (mu, c) in &coeffs {
            v -= c * &kostka[mu][lam];
        }
        coeffs.insert(lam.clone(), v);
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(coeffs)
}

fn rat_json(r: &Rat) -> String {
    rat_to_string(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct HookReport {
    pub n: usize,
    pub k: usize,
    pub raw_holds: bool,
    pub normalized_holds: bool,
    /// `(class, coefficient)` of the normalized identity.
    pub coefficients: Vec<(Vec<usize>, i64)>,
}

/// Checks `n s_{(n-k,1^k)} = Σ_{|J|>k} (-1)^{|J|-k-1} F^cyc_{n,J}` and its normalized form.
pub fn hook_expansion(n: usize, k: usize) -> Result<HookReport> {
    if n == 0 || k >= n {
        return Err(Error::OutOfBounds(format!(
            "need 0 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let mut lam = vec![n - k];
    lam.extend(std::iter::repeat_n(1, k));
    let s = schur_straight(&Partition::new(lam).unwrap());
    let mut raw = QSymElem::zero(n);
    for j in NSubset::all(n).filter(|j| j.len() > k) {
        let sign = if (j.len() - k - 1).is_multiple_of(2) {
            1
        } else {
            -1
        };
        raw = &raw + &fcyc_as_qsym(&j).scale(&rat(sign));
    }
    let mut normalized = QSymElem::zero(n);
    let mut coefficients = Vec::new();
    for a in CyclicClass::all_nonempty(n)
        .into_iter()
        .filter(|a| a.rank() > k)
    {
        let sign: i64 = if (a.rank() - k - 1).is_multiple_of(2) {
            1
        } else {
            -1
        };
        normalized = &normalized + &hfcyc_as_qsym(&a).scale(&rat(sign));
        coefficients.push((a.canonical().elements(), sign));
    }
    Ok(HookReport {
        n,
        k,
        raw_holds: raw == s.scale(&rat(n as i64)),
        normalized_holds: normalized == s,
        coefficients,
    })
}

/// `(1^k) ⊕ (n-k)`.
pub fn column_plus_row(k: usize, n: usize) -> SkewShape {
    SkewShape::column(k).direct_sum(&SkewShape::row(n - k))
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerianRow {
    pub set: Vec<usize>,
    pub permutations: u64,
    pub shape_sum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerianReport {
    pub n: usize,
    pub holds: bool,
    pub total: u64,
    pub rows: Vec<EulerianRow>,
}

/// Compares cyclic-descent fiber counts over `S_n` with the sum over shapes.
pub fn sn_cdes_identity(n: usize) -> Result<EulerianReport> {
    if n < 2 {
        return Err(Error::OutOfBounds(format!("need n >= 2, got {n}")));
    }
    let mut counts: BTreeMap<NSubset, u64> = BTreeMap::new();
    for p in permutations(n) {
        *counts.entry(cdes_set(&p)).or_insert(0) += 1;
    }
    let mut tables: Vec<(Rat, FiberTable)> = Vec::new();
    for lam in Partition::all(n).into_iter().filter(|l| !l.is_hook()) {
        let shape = SkewShape::straight(lam);
        let f = rat(shape.num_syt() as i64);
        tables.push((f, cdes_fibers(&shape)));
    }
    for k in 1..n {
        let c = Rat::from_integer(binom(n as i64 - 2, k as i64 - 1));
        tables.push((c, cdes_fibers(&column_plus_row(k, n))));
    }
    let mut rows = Vec::new();
    let mut holds = true;
    for j in NSubset::all(n) {
        let lhs = counts.get(&j).copied().unwrap_or(0);
        let rhs = tables
            .iter()
            .map(|(c, t)| c * t.fiber_of(&j))
            .fold(Rat::zero(), |a, b| a + b);
        holds &= rat(lhs as i64) == rhs;
        rows.push(EulerianRow {
            set: j.elements(),
            permutations: lhs,
            shape_sum: rat_json(&rhs),
        });
    }
    Ok(EulerianReport {
        n,
        holds,
        total: counts.values().sum(),
        rows,
    })
}

/// `m^cyc((n-k,1^{k-1}) ⊕ (1), J) - m^cyc((n-k,2,1^{k-2}), J)` for every `∅ ⊊ J ⊊ [n]`.
pub fn near_hook_difference(n: usize, k: usize) -> Result<BTreeMap<NSubset, i64>> {
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfBounds(format!(
            "need 2 <= k <= n-2, got n={n}, k={k}"
        )));
    }
    let mut hook = vec![n - k];
    hook.extend(std::iter::repeat_n(1, k - 1));
    let mut near = vec![n - k, 2];
    near.extend(std::iter::repeat_n(1, k - 2));
    let a = cdes_fibers(&SkewShape::straight(Partition::new(hook)?).direct_sum(&SkewShape::row(1)));
    let b = cdes_fibers(&SkewShape::straight(Partition::new(near)?));
    let mut out = BTreeMap::new();
    for j in NSubset::all(n).filter(|j| !j.is_empty() && !j.is_full()) {
        let d = a.fiber_of(&j) - b.fiber_of(&j);
        out.insert(j, i64::try_from(d.to_integer()).unwrap());
    }
    Ok(out)
}

/// For each `J`, the first `m^cyc(J)` permutations of `letters` (lexicographic)
/// with cyclic descent set `J`, relative to the sorted letters.
fn select_permutations(lambda: &Partition, offset: u32) -> Result<Vec<BijWord>> {
    let m = lambda.n();
    let table = cdes_fibers(&SkewShape::straight(lambda.clone()));
    let mut need: BTreeMap<NSubset, usize> = BTreeMap::new();
    for j in NSubset::all(m) {
        let v = table.fiber_of(&j);
        if v.is_positive() {
            need.insert(j, usize::try_from(v.to_integer()).unwrap());
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=m as u32).collect();
    loop {
        let w = BijWord::new(cur.clone()).unwrap();
        let d = cdes_set(&w);
        if let Some(left) = need.get_mut(&d) {
            if *left > 0 {
                *left -= 1;
                out.push(w.shifted(offset));
            }
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    if let Some((j, _)) = need.iter().find(|(_, &left)| left > 0) {
        return Err(Error::InsufficientPermutations(j.to_string()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DisconnectedReport {
    pub lambda: String,
    pub mu: String,
    pub holds: bool,
    pub tableau_total: String,
    pub shuffle_total: String,
    /// `(J, tableau count, shuffle-side value)` for the sets where either side is nonzero.
    pub rows: Vec<(Vec<usize>, String, String)>,
}

/// Compares cyclic descents of `SYT(λ ⊕ μ)` with cyclic shuffles of permutation
/// sets equidistributed with `SYT(λ)` and `SYT(μ)`.
pub fn disconnected_shuffle_identity(
    lambda: &Partition,
    mu: &Partition,
) -> Result<DisconnectedReport> {
    if lambda.is_hook() || mu.is_hook() {
        return Err(Error::OutOfBounds(
            "both partitions must be non-hook".into(),
        ));
    }
    let (m, n) = (lambda.n(), mu.n());
    let a_lambda = select_permutations(lambda, 0)?;
    let a_mu = select_permutations(mu, m as u32)?;
    let mut rhs: BTreeMap<NSubset, Rat> = BTreeMap::new();
    for sigma in &a_lambda {
        for tau in &a_mu {
            for w in cyclic_shuffles(&CyclicWord::new(sigma), &CyclicWord::new(tau))? {
                for r in w.rotations() {
                    *rhs.entry(cdes_set(&r)).or_insert_with(Rat::zero) += Rat::one();
                }
            }
        }
    }
    let scale = Rat::new(1.into(), ((m * n) as i64).into());
    for v in rhs.values_mut() {
        *v *= &scale;
    }
    let shape = SkewShape::straight(lambda.clone()).direct_sum(&SkewShape::straight(mu.clone()));
    let table = cdes_fibers(&shape);
    let mut rows = Vec::new();
    let mut holds = true;
    let (mut lt, mut rt) = (Rat::zero(), Rat::zero());
    for j in NSubset::all(m + n) {
        let l = table.fiber_of(&j);
        let r = rhs.get(&j).cloned().unwrap_or_else(Rat::zero);
        holds &= l == r;
        lt += &l;
        rt += &r;
        if !l.is_zero() || !r.is_zero() {
            rows.push((j.elements(), rat_json(&l), rat_json(&r)));
        }
    }
    Ok(DisconnectedReport {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        holds,
        tableau_total: rat_json(&lt),
        shuffle_total: rat_json(&rt),
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub class: Vec<usize>,
    pub symmetric: bool,
    pub schur_positive: Option<bool>,
    /// Schur coefficients when the function is symmetric.
    pub expansion: Vec<(String, String)>,
}

/// `Σ_{π : [cDes(π^{-1})] = [J]} F^cyc_{n, cDes(π)}`.
pub fn conjecture_function(j: &NSubset) -> QSymElem {
    let n = j.n();
    let target = cyclic_class(j);
    let mut counts: BTreeMap<NSubset, Rat> = BTreeMap::new();
    for p in permutations(n) {
        if cyclic_class(&cdes_set(&p.inverse())) == target {
            *counts.entry(cdes_set(&p)).or_insert_with(Rat::zero) += Rat::one();
        }
    }
    let mut out = QSymElem::zero(n);
    for (k, c) in counts {
        out = &out + &fcyc_as_qsym(&k).scale(&c);
    }
    out
}

/// Instance check: symmetry and Schur positivity of [`conjecture_function`].
pub fn conjecture_check(j: &NSubset) -> Result<ConjectureReport> {
    if j.is_empty() || j.is_full() {
        return Err(Error::EscherClass(j.to_string()));
    }
    let f = conjecture_function(j);
    let symmetric = f.is_symmetric();
    let (schur_positive, expansion) = if symmetric {
        let e = schur_expansion(&f)?;
        let pos = e.values().all(|c| c.is_positive() && is_integer(c));
        (
            Some(pos),
            e.iter()
                .map(|(l, c)| (l.to_string(), rat_json(c)))
                .collect(),
        )
    } else {
        (None, Vec::new())
    };
    Ok(ConjectureReport {
        n: j.n(),
        class: cyclic_class(j).canonical().elements(),
        symmetric,
        schur_positive,
        expansion,
    })
}
