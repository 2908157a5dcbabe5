//! The max-product specialization `Ψ` and descent statistics over shuffles.
//!
//! `Ψ` sends a monomial `x_{i_1}^{m_1} ⋯ x_{i_k}^{m_k}` with `i_1 < ⋯ < i_k` to
//! `q^{i_k}` and `1` to `1`. It is a ring homomorphism into power series with
//! the product `q^i ⊙ q^j = q^{max(i,j)}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binom, parse_rat, rat, rat_to_string, Rat};
use crate::combinatorics::{
    cdes, cyclic_shuffles, des, next_permutation, shuffles, BijWord, CyclicWord,
};
use crate::error::{Error, Result};
use crate::qsym::QSymElem;

/// A power series in `q` truncated after `q^R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero(r: usize) -> Self {
        QPoly {
            coeffs: vec![Rat::zero(); r + 1],
        }
    }

    pub fn one(r: usize) -> Self {
        Self::monomial(r, 0, Rat::one())
    }

    /// `c q^i`, or zero when `i > R`.
    pub fn monomial(r: usize, i: usize, c: Rat) -> Self {
        let mut p = Self::zero(r);
        if i <= r {
            p.coeffs[i] = c;
        }
        p
    }

    /// Keeps the first `R + 1` coefficients, padding with zeros.
    pub fn from_coeffs(r: usize, coeffs: impl IntoIterator<Item = Rat>) -> Self {
        let mut p = Self::zero(r);
        for (i, c) in coeffs.into_iter().take(r + 1).enumerate() {
            p.coeffs[i] = c;
        }
        p
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    fn check(&self, other: &QPoly) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        Ok(QPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &QPoly) -> Result<QPoly> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The max-product `q^i ⊙ q^j = q^{max(i,j)}`.
    pub fn odot(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        // prefix sums turn the max-convolution into a pointwise product
        let mut out = Self::zero(self.trunc());
        let (mut pa, mut pb) = (Rat::zero(), Rat::zero());
        for k in 0..=self.trunc() {
            let (a, b) = (&self.coeffs[k], &other.coeffs[k]);
            out.coeffs[k] = a * &pb + &pa * b + a * b;
            pa += a;
            pb += b;
        }
        Ok(out)
    }

    pub fn ordinary_mul(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        let r = self.trunc();
        let mut out = Self::zero(r);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=r - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// `(1 - q)^e`.
    pub fn one_minus_q_pow(r: usize, e: usize) -> QPoly {
        QPoly::from_coeffs(
            r,
            (0..=e).map(|k| {
                let c = Rat::from_integer(binom(e as i64, k as i64));
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            }),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "R": self.trunc(),
            "coeffs": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<QPoly> {
        let bad = || Error::Parse("expected {\"R\": int, \"coeffs\": [..]}".into());
        let r = v.get("R").and_then(|x| x.as_u64()).ok_or_else(bad)? as usize;
        let arr = v.get("coeffs").and_then(|x| x.as_array()).ok_or_else(bad)?;
        if arr.len() != r + 1 {
            return Err(bad());
        }
        let coeffs = arr
            .iter()
            .map(|c| parse_rat(c.as_str().ok_or_else(bad)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly { coeffs })
    }
}

/// `Ψ(f)` through `Ψ(M_{n,J}) = Σ_r C(r-1, |J|) q^r`.
pub fn psi(f: &QSymElem, r: usize) -> QPoly {
    let mut out = QPoly::zero(r);
    if f.degree() == 0 {
        for c in f.m_coeffs().values() {
            out.coeffs[0] += c;
        }
        return out;
    }
    for (j, c) in f.m_coeffs() {
        for (k, slot) in out.coeffs.iter_mut().enumerate().skip(1) {
            let b = binom(k as i64 - 1, j.len() as i64);
            if !b.is_zero() {
                *slot += c * Rat::from_integer(b);
            }
        }
    }
    out
}

/// `Ψ(f)` monomial by monomial in `x_1, …, x_R`.
pub fn psi_by_monomials(f: &QSymElem, r: usize) -> QPoly {
    let mut out = QPoly::zero(r);
    if f.degree() == 0 {
        return psi(f, r);
    }
    for (exps, c) in f.expand_truncated(r).terms() {
        let top = exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        out.coeffs[top] += c;
    }
    out
}

/// `Σ_r C(r+a, m) C(r+b, n) r^t q^r`, a helper for the shuffle formulas.
fn binomial_series(r_max: usize, a: i64, m: i64, b: i64, n: i64, t: u32) -> QPoly {
    QPoly::from_coeffs(
        r_max,
        (0..=r_max as i64)
            .map(|r| Rat::from_integer(binom(r + a, m) * binom(r + b, n) * BigInt::from(r).pow(t))),
    )
}

/// `Ψ(F_{m,J} F_{n,K}) = (1-q) Σ_r C(r+m-|J|-1, m) C(r+n-|K|-1, n) q^r`.
pub fn psi_ff_formula(m: usize, j: usize, n: usize, k: usize, r: usize) -> QPoly {
    let s = binomial_series(
        r,
        m as i64 - j as i64 - 1,
        m as i64,
        n as i64 - k as i64 - 1,
        n as i64,
        0,
    );
    QPoly::one_minus_q_pow(r, 1).ordinary_mul(&s).unwrap()
}

/// `Ψ(F^cyc_{n,J}) = (|J| q^{|J|} + (n-|J|) q^{|J|+1}) / (1-q)^n`.
pub fn psi_fcyc_formula(n: usize, j: usize, r: usize) -> QPoly {
    let num = QPoly::monomial(r, j, rat(j as i64))
        .add(&QPoly::monomial(r, j + 1, rat((n - j) as i64)))
        .unwrap();
    num.ordinary_mul(&inverse_one_minus_q_pow(r, n)).unwrap()
}

/// `Ψ(M^cyc_{n,J}) = |J| (q/(1-q))^{|J|}`.
pub fn psi_mcyc_formula(j: usize, r: usize) -> QPoly {
    QPoly::monomial(r, j, rat(j as i64))
        .ordinary_mul(&inverse_one_minus_q_pow(r, j))
        .unwrap()
}

/// `Ψ(F_{n,J}) = q^{|J|+1} / (1-q)^n`.
pub fn psi_f_formula(n: usize, j: usize, r: usize) -> QPoly {
    QPoly::monomial(r, j + 1, Rat::one())
        .ordinary_mul(&inverse_one_minus_q_pow(r, n))
        .unwrap()
}

/// `(1-q)^{-e} = Σ_s C(s+e-1, e-1) q^s`.
fn inverse_one_minus_q_pow(r: usize, e: usize) -> QPoly {
    if e == 0 {
        return QPoly::one(r);
    }
    QPoly::from_coeffs(
        r,
        (0..=r as i64).map(|s| Rat::from_integer(binom(s + e as i64 - 1, e as i64 - 1))),
    )
}

fn to_u64(b: BigInt) -> u64 {
    u64::try_from(b).expect("count fits in u64")
}

/// Entry `k` counts shuffles `w` with `des(w) = k` when `des(u) = i`, `des(v) = j`:
/// `C(m+j-i, k-i) C(n+i-j, k-j)`.
pub fn des_shuffle_dist(m: usize, n: usize, i: usize, j: usize) -> Result<Vec<u64>> {
    if m == 0 || n == 0 || i >= m || j >= n {
        return Err(Error::OutOfBounds(format!(
            "need 0 <= i < m and 0 <= j < n, got m={m}, n={n}, i={i}, j={j}"
        )));
    }
    let (m, n, i, j) = (m as i64, n as i64, i as i64, j as i64);
    Ok((0..m + n)
        .map(|k| to_u64(binom(m + j - i, k - i) * binom(n + i - j, k - j)))
        .collect())
}

fn check_cdes_args(m: usize, n: usize, i: usize, j: usize) -> Result<()> {
    let ok = |len: usize, d: usize| if len == 1 { d == 0 } else { d >= 1 && d < len };
    if m == 0 || n == 0 || !ok(m, i) || !ok(n, j) {
        return Err(Error::OutOfBounds(format!(
            "no permutations with these cyclic descent numbers: m={m}, n={n}, i={i}, j={j}"
        )));
    }
    Ok(())
}

/// `a(m,n,i,j,k)` by the two-term binomial form.
pub fn cdes_shuffle_count_sum(m: usize, n: usize, i: usize, j: usize, k: usize) -> BigInt {
    let (m, n, i, j, k) = (m as i64, n as i64, i as i64, j as i64, k as i64);
    BigInt::from(k) * binom(m + j - i - 1, k - i) * binom(n + i - j - 1, k - j)
        + BigInt::from(m + n - k)
            * binom(m + j - i - 1, k - i - 1)
            * binom(n + i - j - 1, k - j - 1)
}

/// `a(m,n,i,j,k)` by the single-fraction form.
pub fn cdes_shuffle_count_fraction(m: usize, n: usize, i: usize, j: usize, k: usize) -> Rat {
    let (m, n, i, j, k) = (m as i64, n as i64, i as i64, j as i64, k as i64);
    let num = k * (m - i) * (n - j) + (m + n - k) * i * j;
    let den = (m + j - i) * (n + i - j);
    Rat::new(num.into(), den.into())
        * Rat::from_integer(binom(m + j - i, k - i) * binom(n + i - j, k - j))
}

/// Entry `k` (for `k = 0..=m+n`) counts cyclic shuffles with `cdes = k`.
/// Both closed forms are evaluated; disagreement is an error.
pub fn cdes_shuffle_dist(m: usize, n: usize, i: usize, j: usize) -> Result<Vec<u64>> {
    check_cdes_args(m, n, i, j)?;
    (0..=m + n)
        .map(|k| {
            let a = cdes_shuffle_count_sum(m, n, i, j, k);
            let b = cdes_shuffle_count_fraction(m, n, i, j, k);
            if Rat::from_integer(a.clone()) != b {
                return Err(Error::NotWellDefined(format!(
                    "closed forms disagree at m={m}, n={n}, i={i}, j={j}, k={k}"
                )));
            }
            Ok(to_u64(a))
        })
        .collect()
}

/// Least permutation of `offset+1..=offset+len` (lexicographically) with
/// the given statistic value.
pub fn least_word_with(
    len: usize,
    offset: u32,
    value: usize,
    stat: fn(&BijWord) -> usize,
) -> Option<BijWord> {
    let mut cur: Vec<u32> = (offset + 1..=offset + len as u32).collect();
    loop {
        let w = BijWord::new(cur.clone()).unwrap();
        if stat(&w) == value {
            return Some(w);
        }
        if !next_permutation(&mut cur) {
            return None;
        }
    }
}

/// Brute-force tally of `des` over `u ⧢ v`.
pub fn des_shuffle_tally(u: &BijWord, v: &BijWord) -> Result<Vec<u64>> {
    let mut out = vec![0u64; u.len() + v.len()];
    for w in shuffles(u, v)? {
        out[des(&w)] += 1;
    }
    Ok(out)
}

/// Brute-force tally of `cdes` over `[u] ⧢_cyc [v]`.
pub fn cdes_shuffle_tally(u: &BijWord, v: &BijWord) -> Result<Vec<u64>> {
    let mut out = vec![0u64; u.len() + v.len() + 1];
    for w in cyclic_shuffles(&CyclicWord::new(u), &CyclicWord::new(v))? {
        out[cdes(w.canonical())] += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GenfunReport {
    pub m: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub u: String,
    pub v: String,
    pub holds: bool,
    pub brute_force: serde_json::Value,
    pub formula: serde_json::Value,
}

fn tally_series(r: usize, tally: &[u64]) -> QPoly {
    QPoly::from_coeffs(r, tally.iter().map(|&c| rat(c as i64)))
}

/// `(1-q)^{m+n+1} Σ_r C(r+m-i, m) C(r+n-j, n) q^r`.
pub fn des_shuffle_series(m: usize, n: usize, i: usize, j: usize, r: usize) -> QPoly {
    let s = binomial_series(
        r,
        m as i64 - i as i64,
        m as i64,
        n as i64 - j as i64,
        n as i64,
        0,
    );
    QPoly::one_minus_q_pow(r, m + n + 1)
        .ordinary_mul(&s)
        .unwrap()
}

/// `(1-q)^{m+n} Σ_r C(r+m-i-1, m-1) C(r+n-j-1, n-1) r q^r`.
pub fn cdes_shuffle_series(m: usize, n: usize, i: usize, j: usize, r: usize) -> QPoly {
    let s = binomial_series(
        r,
        m as i64 - i as i64 - 1,
        m as i64 - 1,
        n as i64 - j as i64 - 1,
        n as i64 - 1,
        1,
    );
    QPoly::one_minus_q_pow(r, m + n).ordinary_mul(&s).unwrap()
}

fn check_trunc(m: usize, n: usize, r: usize) -> Result<()> {
    if r < m + n {
        return Err(Error::OutOfBounds(format!(
            "truncation {r} is below m+n = {}",
            m + n
        )));
    }
    Ok(())
}

/// Compares the descent generating function over shuffles with brute force.
pub fn des_shuffle_genfun(
    m: usize,
    n: usize,
    i: usize,
    j: usize,
    r: usize,
) -> Result<GenfunReport> {
    des_shuffle_dist(m, n, i, j)?;
    check_trunc(m, n, r)?;
    let u = least_word_with(m, 0, i, des).unwrap();
    let v = least_word_with(n, m as u32, j, des).unwrap();
    let lhs = tally_series(r, &des_shuffle_tally(&u, &v)?);
    let rhs = des_shuffle_series(m, n, i, j, r);
    Ok(GenfunReport {
        m,
        n,
        i,
        j,
        u: u.to_string(),
        v: v.to_string(),
        holds: lhs == rhs,
        brute_force: lhs.to_json(),
        formula: rhs.to_json(),
    })
}

/// Compares the cyclic descent generating function over cyclic shuffles with brute force.
pub fn cdes_shuffle_genfun(
    m: usize,
    n: usize,
    i: usize,
    j: usize,
    r: usize,
) -> Result<GenfunReport> {
    check_cdes_args(m, n, i, j)?;
    check_trunc(m, n, r)?;
    let u = least_word_with(m, 0, i, cdes).unwrap();
    let v = least_word_with(n, m as u32, j, cdes).unwrap();
    let lhs = tally_series(r, &cdes_shuffle_tally(&u, &v)?);
    let rhs = cdes_shuffle_series(m, n, i, j, r);
    Ok(GenfunReport {
        m,
        n,
        i,
        j,
        u: u.to_string(),
        v: v.to_string(),
        holds: lhs == rhs,
        brute_force: lhs.to_json(),
        formula: rhs.to_json(),
    })
}
