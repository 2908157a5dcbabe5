//! Named invariant suites, each comparing two independent computations over
//! every case up to a size bound.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{binom, factorial, is_integer, rat, rat_frac, Rat};
use crate::combinatorics::{
    cc, cdes_set, co, count_cyclic_classes, cyclic_class, cyclic_shuffles, des_set,
    is_cdes_realizable, permutations, permutations_of, shuffles, BijWord, Composition, CyclicClass,
    CyclicWord, NSubset,
};
use crate::cqsym::{
    basis_matrix, cdes_star, fcyc_as_qsym, hfcyc_as_qsym, mcyc_as_qsym,
    product_via_cyclic_shuffles, product_via_words, promote_p, shuffle_set_w, CBasis, CQSymElem,
};
use crate::descent;
use crate::enumer::{self, psi, psi_by_monomials, QPoly};
use crate::error::{Error, Result};
use crate::qsym::{Partition, QSymElem};
use crate::schur::{self, cdes_fibers, schur_straight, symmetric_in_hfcyc, SkewShape};
use crate::toric::{partitions_generating_function, Dag};

/// Seed for every randomized suite, so reports are reproducible.
pub const SEED: u64 = 0x5eed_c0de;

/// Number of random DAGs drawn by the toric suites.
pub const RANDOM_DAGS: usize = 200;

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max: usize,
    pub passed: bool,
    pub checked: usize,
    pub counterexample: Option<Value>,
}

/// A registered suite: `run(max)` checks every case with size parameter at most `max`.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub default_max: usize,
    pub cap: usize,
    run: fn(usize) -> Result<Checker>,
}

#[derive(Default)]
struct Checker {
    checked: usize,
    counterexample: Option<Value>,
}

impl Checker {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }
}

macro_rules! suite {
    ($name:expr, $about:expr, $default:expr, $cap:expr, $f:expr) => {
        Suite {
            name: $name,
            about: $about,
            default_max: $default,
            cap: $cap,
            run: $f,
        }
    };
}

pub const SUITES: &[Suite] = &[
    suite!(
        "orbit-stabilizer",
        "orbit size times d_A equals n",
        10,
        16,
        orbit_stabilizer
    ),
    suite!(
        "cc-rotation",
        "cc of a rotated set is a rotation of cc",
        8,
        14,
        cc_rotation
    ),
    suite!(
        "co-round-trip",
        "co and descent_set are inverse bijections",
        10,
        16,
        co_round_trip
    ),
    suite!(
        "burnside",
        "Burnside count equals orbit enumeration",
        12,
        16,
        burnside
    ),
    suite!(
        "cyclic-shuffle-count",
        "number of cyclic shuffles (a+b)",
        8,
        9,
        cyclic_shuffle_count
    ),
    suite!(
        "cyclic-shuffle-members",
        "cyclic shuffles are the cyclic words restricting to [u] and [v]",
        7,
        8,
        cyclic_shuffle_members
    ),
    suite!(
        "f-m-round-trip",
        "F to M and back is the identity",
        10,
        12,
        f_m_round_trip
    ),
    suite!(
        "qsym-product-laws",
        "quasi-shuffle product is commutative and associative",
        3,
        4,
        qsym_product_laws
    ),
    suite!(
        "shuffle-product",
        "F_Des(u) F_Des(v) = sum over shuffles",
        7,
        8,
        shuffle_product
    ),
    suite!(
        "truncation-ring-map",
        "truncated expansion respects products",
        6,
        6,
        truncation_ring_map
    ),
    suite!(
        "inner-h",
        "pairing with h is linear and reads monomial coefficients",
        6,
        7,
        inner_h
    ),
    suite!(
        "cyclic-invariance",
        "M^cyc and F^cyc are rotation invariant",
        8,
        10,
        cyclic_invariance
    ),
    suite!(
        "linear-dependence",
        "alternating sums of F^cyc and hF^cyc vanish",
        8,
        10,
        linear_dependence
    ),
    suite!(
        "unimodular-basis",
        "hF in hM is integral with determinant +-1",
        8,
        9,
        unimodular_basis
    ),
    suite!(
        "product-theorem",
        "cyclic-shuffle product equals quasi-shuffle product",
        7,
        8,
        product_theorem
    ),
    suite!(
        "structure-constants",
        "hF structure constants are nonnegative integers",
        7,
        8,
        structure_constants
    ),
    suite!(
        "representative-independence",
        "product does not depend on the word chosen",
        6,
        7,
        representative_independence
    ),
    suite!(
        "omega-ring-map",
        "omega is multiplicative",
        6,
        7,
        omega_ring_map
    ),
    suite!(
        "cdes-star",
        "p is a bijection of W rotating cDes*",
        7,
        8,
        cdes_star_suite
    ),
    suite!(
        "toric-closure-flip",
        "toric closedness is flip invariant (random DAGs)",
        6,
        7,
        toric_closure_flip
    ),
    suite!(
        "toric-fundamental-lemma",
        "toric partitions split over toric extensions (random DAGs)",
        6,
        6,
        toric_fundamental_lemma
    ),
    suite!(
        "fundamental-lemma",
        "D-partitions split over linear extensions (random DAGs)",
        6,
        6,
        fundamental_lemma
    ),
    suite!(
        "toric-shuffle",
        "toric extensions of two chains are cyclic shuffles",
        6,
        7,
        toric_shuffle
    ),
    suite!(
        "schur-positivity",
        "hF coefficients of skew Schur functions",
        7,
        8,
        schur_positivity
    ),
    suite!(
        "remark-versus",
        "sum of m^cyc F^cyc equals n s",
        7,
        8,
        remark_versus
    ),
    suite!(
        "fiber-rotation",
        "every member J of a class pairs with s to the class fiber",
        7,
        8,
        fiber_rotation
    ),
    suite!(
        "integrality",
        "integral iff integral Schur coefficients",
        6,
        7,
        integrality
    ),
    suite!(
        "non-escher-fibers",
        "proper shapes give 0 on the Escher classes",
        7,
        8,
        non_escher_fibers
    ),
    suite!(
        "omega-duality",
        "conjugate shape fibers are complement fibers",
        6,
        7,
        omega_duality
    ),
    suite!(
        "hook-expansion",
        "hook Schur functions in F^cyc and hF^cyc",
        8,
        9,
        hook_expansion
    ),
    suite!(
        "near-hook",
        "near-hook fiber difference is an indicator",
        7,
        8,
        near_hook
    ),
    suite!(
        "eulerian",
        "cDes fibers over S_n as a shape sum",
        6,
        7,
        eulerian
    ),
    suite!(
        "disconnected",
        "fibers of a direct sum via cyclic shuffles",
        9,
        10,
        disconnected
    ),
    suite!(
        "psi-homomorphism",
        "psi(fg) = psi(f) odot psi(g), R = 12",
        6,
        7,
        psi_homomorphism
    ),
    suite!(
        "psi-closed-forms",
        "closed forms of psi agree with monomials",
        5,
        6,
        psi_closed_forms
    ),
    suite!("psi-ff", "psi of a product of two F", 7, 8, psi_ff),
    suite!(
        "shuffle-distributions",
        "des and cdes distributions against brute force",
        9,
        9,
        shuffle_distributions
    ),
    suite!(
        "closed-forms-agree",
        "both closed forms of a(m,n,i,j,k) agree",
        12,
        16,
        closed_forms_agree
    ),
    suite!(
        "a-well-defined",
        "a and tilde-a do not depend on pi",
        6,
        7,
        a_well_defined
    ),
    suite!(
        "coproduct",
        "coproduct constants, non-Escher closure, Schur forms",
        6,
        6,
        coproduct
    ),
    suite!(
        "coassociativity",
        "right comodule coassociativity",
        4,
        5,
        coassociativity
    ),
    suite!(
        "two-alphabet",
        "coproduct matches substitution of XY",
        4,
        4,
        two_alphabet
    ),
    suite!(
        "left-module",
        "D_J cD_A expands with tilde-a",
        6,
        6,
        left_module
    ),
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs a suite at `max` (or its default). Exceeding the cap is an error.
pub fn run_suite(name: &str, max: Option<usize>) -> Result<SuiteReport> {
    let s = find(name).ok_or_else(|| Error::OutOfBounds(format!("unknown suite {name}")))?;
    let max = max.unwrap_or(s.default_max);
    if max > s.cap {
        return Err(Error::OutOfBounds(format!(
            "suite {name} accepts --max up to {}",
            s.cap
        )));
    }
    run_suite_unchecked(name, max)
}

/// Runs a suite at `max` without enforcing its cap.
pub fn run_suite_unchecked(name: &str, max: usize) -> Result<SuiteReport> {
    let s = find(name).ok_or_else(|| Error::OutOfBounds(format!("unknown suite {name}")))?;
    let c = (s.run)(max)?;
    Ok(SuiteReport {
        suite: name.to_string(),
        max,
        passed: c.counterexample.is_none(),
        checked: c.checked,
        counterexample: c.counterexample,
    })
}

fn set_json(j: &NSubset) -> Value {
    json!(j.to_string())
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// Lexicographically least permutation of `1..=n` with descent set `i`.
fn least_with_des(i: &NSubset) -> BijWord {
    permutations(i.n())
        .into_iter()
        .find(|p| des_set(p) == *i)
        .unwrap()
}

/// Permutations of `1..=n` starting with `1`, one per rotation class.
fn cyclic_reps(n: usize) -> Vec<BijWord> {
    let rest: Vec<u32> = (2..=n as u32).collect();
    permutations_of(&rest)
        .into_iter()
        .map(|p| {
            let mut l = vec![1];
            l.extend_from_slice(p.letters());
            BijWord::new(l).unwrap()
        })
        .collect()
}

fn orbit_stabilizer(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        for j in NSubset::all(n) {
            let a = cyclic_class(&j);
            c.check(a.orbit_size() * a.d() == n, || set_json(&j));
        }
    }
    Ok(c)
}

fn cc_rotation(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        for j in NSubset::all(n).filter(|j| !j.is_empty()) {
            let base = cc(&j)?;
            let rots: BTreeSet<Vec<usize>> = (0..base.len())
                .map(|k| base.rotate(k).parts().to_vec())
                .collect();
            for i in 0..n as i64 {
                let r = cc(&j.rotate(i))?;
                c.check(
                    rots.contains(r.parts()),
                    || json!({"set": j.to_string(), "shift": i}),
                );
            }
        }
    }
    Ok(c)
}

fn co_round_trip(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        let mut seen = BTreeSet::new();
        for j in NSubset::all_lower(n) {
            let comp = co(&j)?;
            c.check(comp.n() == n && comp.descent_set() == j, || set_json(&j));
            seen.insert(comp.parts().to_vec());
        }
        c.check(seen.len() == 1 << (n - 1), || json!({"n": n}));
    }
    Ok(c)
}

fn burnside(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        let by_orbits: BTreeSet<NSubset> = NSubset::all(n)
            .filter(|j| !j.is_empty())
            .map(|j| cyclic_class(&j).canonical())
            .collect();
        c.check(
            count_cyclic_classes(n) == by_orbits.len() as u64,
            || json!({"n": n}),
        );
    }
    Ok(c)
}

fn cyclic_shuffle_count(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            let b = total - a;
            let expect =
                factorial(total as u64 - 1) / (factorial(a as u64 - 1) * factorial(b as u64 - 1));
            for u in cyclic_reps(a) {
                for v in cyclic_reps(b) {
                    let v = v.shifted(a as u32);
                    let got = cyclic_shuffles(&CyclicWord::new(&u), &CyclicWord::new(&v))?.len();
                    c.check(
                        expect == got.into(),
                        || json!({"u": u.to_string(), "v": v.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

/// Reads `w` cyclically starting from its least letter in `keep`, skipping other letters.
fn cyclic_restriction(w: &BijWord, keep: impl Fn(u32) -> bool) -> CyclicWord {
    let l: Vec<u32> = w.letters().iter().copied().filter(|&x| keep(x)).collect();
    CyclicWord::new(&BijWord::new(l).unwrap())
}

fn cyclic_shuffle_members(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        let all: Vec<BijWord> = cyclic_reps(total);
        for a in 1..total {
            let b = total - a;
            for u in cyclic_reps(a) {
                for v in cyclic_reps(b) {
                    let v = v.shifted(a as u32);
                    let (cu, cv) = (CyclicWord::new(&u), CyclicWord::new(&v));
                    let got = cyclic_shuffles(&cu, &cv)?;
                    let expect: BTreeSet<CyclicWord> = all
                        .iter()
                        .filter(|w| {
                            cyclic_restriction(w, |x| x as usize <= a) == cu
                                && cyclic_restriction(w, |x| x as usize > a) == cv
                        })
                        .map(CyclicWord::new)
                        .collect();
                    c.check(
                        got == expect,
                        || json!({"u": u.to_string(), "v": v.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn f_m_round_trip(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        for j in NSubset::all_lower(n) {
            let f = QSymElem::fundamental(&j)?;
            let back = f.f_coeffs();
            c.check(back.len() == 1 && back[&j] == Rat::one(), || set_json(&j));
            let m = QSymElem::monomial(&j)?;
            let again = QSymElem::from_f_coeffs(n, m.f_coeffs())?;
            c.check(again == m, || set_json(&j));
        }
    }
    Ok(c)
}

fn random_qsym(r: &mut ChaCha8Rng, n: usize) -> QSymElem {
    let mut terms: Vec<(NSubset, Rat)> = Vec::new();
    for j in NSubset::all_lower(n) {
        if r.gen_bool(0.5) {
            terms.push((j, rat(r.gen_range(-3..=3))));
        }
    }
    QSymElem::from_f_coeffs(n, terms).unwrap()
}

fn qsym_product_laws(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let mut basis = Vec::new();
    for n in 1..=max {
        basis.extend(NSubset::all_lower(n).map(|j| QSymElem::fundamental(&j).unwrap()));
    }
    for x in &basis {
        for y in &basis {
            c.check(x * y == y * x, || json!("commutativity"));
            for z in basis.iter().take(7) {
                c.check(&(x * y) * z == x * &(y * z), || json!("associativity"));
            }
        }
    }
    let mut r = rng();
    for _ in 0..20 {
        let (a, b, d) = (
            r.gen_range(1..=max),
            r.gen_range(1..=max),
            r.gen_range(1..=max),
        );
        let (x, y, z) = (
            random_qsym(&mut r, a),
            random_qsym(&mut r, b),
            random_qsym(&mut r, d),
        );
        c.check(&(&x * &y) * &z == &x * &(&y * &z), || {
            json!("associativity (random)")
        });
        c.check(&x * &y == &y * &x, || json!("commutativity (random)"));
    }
    Ok(c)
}

fn shuffle_product(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            let b = total - a;
            for i in NSubset::all_lower(a) {
                let u = least_with_des(&i);
                for j in NSubset::all_lower(b) {
                    let v = least_with_des(&j).shifted(a as u32);
                    let lhs = &QSymElem::fundamental(&i)? * &QSymElem::fundamental(&j)?;
                    let mut rhs: BTreeMap<NSubset, Rat> = BTreeMap::new();
                    for w in shuffles(&u, &v)? {
                        *rhs.entry(des_set(&w)).or_insert_with(Rat::zero) += Rat::one();
                    }
                    let rhs = QSymElem::from_f_coeffs(total, rhs)?;
                    c.check(
                        lhs == rhs,
                        || json!({"u": u.to_string(), "v": v.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn truncation_ring_map(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let k = 6;
    for total in 2..=max {
        for a in 1..total {
            for j in NSubset::all_lower(a) {
                for l in NSubset::all_lower(total - a) {
                    let (f, g) = (QSymElem::monomial(&j)?, QSymElem::monomial(&l)?);
                    let lhs = (&f * &g).expand_truncated(k);
                    let rhs = f.expand_truncated(k).mul(&g.expand_truncated(k))?;
                    c.check(
                        lhs == rhs,
                        || json!({"f": j.to_string(), "g": l.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn inner_h(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let mut r = rng();
    for n in 1..=max {
        let basis: Vec<QSymElem> = Partition::all(n).iter().map(schur_straight).collect();
        let mut random_sym = || {
            basis.iter().fold(QSymElem::zero(n), |acc, s| {
                &acc + &s.scale(&rat(r.gen_range(-3..=3)))
            })
        };
        for _ in 0..4 {
            let (f, g) = (random_sym(), random_sym());
            let sum = &f + &g;
            let poly = f.expand_truncated(n);
            for lam in Partition::all(n) {
                let (a, b, s) = (f.inner_h(&lam)?, g.inner_h(&lam)?, sum.inner_h(&lam)?);
                c.check(s == &a + &b, || json!({"n": n, "lambda": lam.to_string()}));
                let mut exps = vec![0u32; n];
                for (e, &p) in exps.iter_mut().zip(lam.parts()) {
                    *e = p as u32;
                }
                c.check(
                    poly.coeff(&exps) == a,
                    || json!({"n": n, "lambda": lam.to_string()}),
                );
            }
        }
    }
    Ok(c)
}

fn cyclic_invariance(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        for j in NSubset::all(n) {
            let (m, f) = (mcyc_as_qsym(&j), fcyc_as_qsym(&j));
            for i in 1..n as i64 {
                let r = j.rotate(i);
                c.check(mcyc_as_qsym(&r) == m && fcyc_as_qsym(&r) == f, || {
                    set_json(&j)
                });
            }
        }
    }
    Ok(c)
}

fn linear_dependence(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        let mut raw = QSymElem::zero(n);
        for j in NSubset::all(n) {
            let term = fcyc_as_qsym(&j);
            raw = if j.len() % 2 == 0 {
                &raw + &term
            } else {
                &raw - &term
            };
        }
        c.check(raw.is_zero(), || json!({"n": n, "form": "F^cyc"}));
        let mut norm = QSymElem::zero(n);
        for a in CyclicClass::all(n) {
            let term = hfcyc_as_qsym(&a);
            norm = if a.rank() % 2 == 0 {
                &norm + &term
            } else {
                &norm - &term
            };
        }
        c.check(norm.is_zero(), || json!({"n": n, "form": "hF^cyc"}));
    }
    Ok(c)
}

/// Determinant by Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for k in col..n {
                let v = &f * &m[col][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

fn unimodular_basis(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        let bm = basis_matrix(n, true);
        let integral = bm.entries.iter().flatten().all(is_integer);
        let det = determinant(bm.entries.clone());
        c.check(
            integral && (det == rat(1) || det == rat(-1)),
            || json!({"n": n}),
        );
        for a in CyclicClass::all_nonempty(n) {
            let hm = CQSymElem::from_terms(n, CBasis::HMcyc, [(a, Rat::one())])?;
            c.check(
                hm.to_basis(CBasis::HFcyc).is_integral(),
                || json!({"n": n, "class": a.canonical().to_string()}),
            );
        }
        c.check(
            CyclicClass::all_nonempty(n).len() as u64 == count_cyclic_classes(n),
            || json!({"n": n, "count": "classes"}),
        );
    }
    Ok(c)
}

fn realizable_reps(n: usize) -> Vec<NSubset> {
    CyclicClass::all_nonempty(n)
        .into_iter()
        .map(|a| a.canonical())
        .filter(is_cdes_realizable)
        .collect()
}

fn product_theorem(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            for j in realizable_reps(a) {
                for k in realizable_reps(total - a) {
                    let lhs = product_via_cyclic_shuffles(&j, &k)?;
                    let rhs = &fcyc_as_qsym(&j) * &fcyc_as_qsym(&k);
                    c.check(
                        lhs == rhs,
                        || json!({"J": j.to_string(), "K": k.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn structure_constants(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            let b = total - a;
            let with_e = total <= 6;
            let pick = |n: usize| -> Vec<CyclicClass> {
                CyclicClass::all_nonempty(n)
                    .into_iter()
                    .filter(|x| x.is_proper() || (with_e && x.is_full_class()))
                    .collect()
            };
            for x in pick(a) {
                for y in pick(b) {
                    let ex = CQSymElem::from_terms(a, CBasis::HFcyc, [(x, Rat::one())])?;
                    let ey = CQSymElem::from_terms(b, CBasis::HFcyc, [(y, Rat::one())])?;
                    let p = ex.mul(&ey).to_basis(CBasis::HFcyc);
                    c.check(
                        p.is_integral() && p.is_nonnegative(),
                        || json!({"A": x.canonical().to_string(), "B": y.canonical().to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn representative_independence(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for a in 2..=max {
        let v = BijWord::new(vec![a as u32 + 1, a as u32 + 2]).unwrap();
        let mut first: BTreeMap<NSubset, QSymElem> = BTreeMap::new();
        for u in permutations(a) {
            let p = product_via_words(&u, &v)?;
            let j = cdes_set(&u);
            match first.get(&j) {
                Some(q) => c.check(*q == p, || json!({"u": u.to_string()})),
                None => {
                    first.insert(j, p);
                }
            }
        }
    }
    Ok(c)
}

fn omega_ring_map(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let mut r = rng();
    for _ in 0..30 {
        let a = r.gen_range(1..max);
        let b = r.gen_range(1..=max - a);
        let (f, g) = (random_qsym(&mut r, a), random_qsym(&mut r, b));
        c.check(
            (&f * &g).omega() == &f.omega() * &g.omega(),
            || json!({"a": a, "b": b}),
        );
    }
    for total in 2..=max {
        for a in 1..total {
            for x in CyclicClass::all_nonempty(a) {
                for y in CyclicClass::all_nonempty(total - a) {
                    let ex = CQSymElem::from_terms(a, CBasis::HFcyc, [(x, Rat::one())])?;
                    let ey = CQSymElem::from_terms(total - a, CBasis::HFcyc, [(y, Rat::one())])?;
                    let lhs = ex.mul(&ey).omega().to_basis(CBasis::HFcyc);
                    let rhs = ex.omega().mul(&ey.omega()).to_basis(CBasis::HFcyc);
                    c.check(
                        lhs == rhs,
                        || json!({"A": x.canonical().to_string(), "B": y.canonical().to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn cdes_star_suite(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            let b = total - a;
            for w0 in permutations(b) {
                let w0 = w0.shifted(a as u32);
                let set = shuffle_set_w(a, &w0)?;
                let members: BTreeSet<&BijWord> = set.iter().collect();
                let mut images = BTreeSet::new();
                for w in &set {
                    let p = promote_p(w, a, b)?;
                    let rotated = cdes_star(w, a, b)?.rotate(1);
                    c.check(
                        members.contains(&p) && cdes_star(&p, a, b)? == rotated,
                        || json!({"w": w.to_string(), "a": a, "b": b}),
                    );
                    images.insert(p);
                }
                c.check(
                    images.len() == set.len(),
                    || json!({"w0": w0.to_string(), "a": a}),
                );
            }
        }
    }
    Ok(c)
}

/// A random DAG on `1..=n`: arcs follow a random linear order, each kept with probability `p`.
pub fn random_dag(r: &mut ChaCha8Rng, n: usize, p: f64) -> Dag {
    let mut order: Vec<u32> = (1..=n as u32).collect();
    order.shuffle(r);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Dag::on_range(n, arcs).unwrap()
}

fn random_dags(max: usize) -> Vec<Dag> {
    let mut r = rng();
    (0..RANDOM_DAGS)
        .map(|_| {
            let n = r.gen_range(1..=max);
            let p = r.gen_range(0.2..0.7);
            random_dag(&mut r, n, p)
        })
        .collect()
}

fn toric_closure_flip(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for d in random_dags(max) {
        for g in [d.clone(), d.toric_transitive_closure()] {
            for &v in g.vertices() {
                if g.is_source(v) || g.is_sink(v) {
                    let f = g.flip(v)?;
                    c.check(
                        g.is_toric_transitively_closed() == f.is_toric_transitively_closed(),
                        || json!({"dag": g.to_string(), "flip": v}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn toric_fundamental_lemma(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let bound = 4;
    for d in random_dags(max) {
        let class = d.toric_class()?;
        let whole = class.toric_partitions(bound);
        let mut union = BTreeSet::new();
        let mut total = 0;
        for w in class.toric_extensions() {
            let part = crate::toric::total_cyclic_order(w.canonical())?.toric_partitions(bound);
            total += part.len();
            union.extend(part);
        }
        c.check(
            union == whole,
            || json!({"dag": d.to_string(), "failure": "coverage"}),
        );
        c.check(
            total == union.len(),
            || json!({"dag": d.to_string(), "failure": "disjointness"}),
        );
        let direct = partitions_generating_function(whole.iter(), bound as usize);
        c.check(
            class.toric_enumerator().expand_truncated(bound as usize) == direct,
            || json!({"dag": d.to_string(), "failure": "enumerator"}),
        );
    }
    Ok(c)
}

fn fundamental_lemma(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let bound = 4;
    for d in random_dags(max) {
        let whole = d.d_partitions(bound);
        let mut union = BTreeSet::new();
        let mut total = 0;
        for w in d.linear_extensions() {
            let part = Dag::chain(&w).d_partitions(bound);
            total += part.len();
            union.extend(part);
        }
        c.check(
            union == whole && total == union.len(),
            || json!({"dag": d.to_string()}),
        );
    }
    Ok(c)
}

fn toric_shuffle(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for a in 1..total {
            for u in cyclic_reps(a) {
                for v in cyclic_reps(total - a) {
                    let v = v.shifted(a as u32);
                    let dag = Dag::total_order(&u).disjoint_union(&Dag::total_order(&v))?;
                    let ext = dag.toric_class()?.toric_extensions();
                    let sh = cyclic_shuffles(&CyclicWord::new(&u), &CyclicWord::new(&v))?;
                    c.check(
                        ext == sh,
                        || json!({"u": u.to_string(), "v": v.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn proper_shapes(max: usize) -> impl Iterator<Item = SkewShape> {
    (1..=max)
        .flat_map(SkewShape::all_of_size)
        .filter(|s| !s.is_connected_ribbon())
}

fn schur_positivity(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for sh in proper_shapes(max) {
        let t = cdes_fibers(&sh);
        let n = sh.size();
        let ok = t
            .fibers
            .values()
            .all(|v| is_integer(v) && *v >= Rat::zero())
            && t.total() == rat(sh.num_syt() as i64)
            && t.get(&cyclic_class(&NSubset::empty(n))).is_zero()
            && t.get(&cyclic_class(&NSubset::full(n))).is_zero();
        let back = schur::schur_in_hfcyc(&sh)?.to_qsym() == schur::schur(&sh);
        c.check(ok && back, || json!({"shape": sh.to_string()}));
    }
    Ok(c)
}

fn remark_versus(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for sh in proper_shapes(max) {
        let n = sh.size();
        let t = cdes_fibers(&sh);
        let mut lhs = QSymElem::zero(n);
        for (a, m) in &t.fibers {
            for j in a.members() {
                lhs = &lhs + &fcyc_as_qsym(&j).scale(m);
            }
        }
        c.check(
            lhs == schur::schur(&sh).scale(&rat(n as i64)),
            || json!({"shape": sh.to_string()}),
        );
    }
    Ok(c)
}

fn fiber_rotation(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for sh in (1..=max).flat_map(SkewShape::all_of_size) {
        let s = schur::schur(&sh);
        let t = cdes_fibers(&sh);
        for a in CyclicClass::all_nonempty(sh.size()) {
            let expect = t.get(&a);
            for j in a.members() {
                c.check(
                    ribbon_pairing(&s, &j) == expect,
                    || json!({"shape": sh.to_string(), "set": j.to_string()}),
                );
            }
        }
    }
    Ok(c)
}

/// `⟨f, s̃_cc(J)⟩` for symmetric `f`, using `⟨f, h_α⟩ = [m_sort(α)] f`.
fn ribbon_pairing(f: &QSymElem, j: &NSubset) -> Rat {
    let mut acc = Rat::zero();
    for i in j.subsets().into_iter().filter(|i| !i.is_empty()) {
        let mut parts = cc(&i).unwrap().parts().to_vec();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let v = f.m_coeff_comp(&Composition::new(parts).unwrap());
        if (j.len() - i.len()).is_multiple_of(2) {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

fn integrality(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let mut r = rng();
    for n in 2..=max {
        let basis: Vec<QSymElem> = Partition::all(n).iter().map(schur_straight).collect();
        for trial in 0..6 {
            let mut f = QSymElem::zero(n);
            for s in &basis {
                f = &f + &s.scale(&rat(r.gen_range(-3..=3)));
            }
            let half = trial % 2 == 1;
            if half {
                let k = r.gen_range(0..basis.len());
                f = &f + &basis[k].scale(&rat_frac(1, 2));
            }
            let e = symmetric_in_hfcyc(&f)?;
            c.check(e.is_integral() != half, || json!({"n": n, "trial": trial}));
        }
    }
    Ok(c)
}

fn non_escher_fibers(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for sh in proper_shapes(max) {
        let t = cdes_fibers(&sh);
        let ok = t.fibers.keys().all(|a| a.is_proper()) && t.proper;
        c.check(ok, || json!({"shape": sh.to_string()}));
    }
    Ok(c)
}

fn omega_duality(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for sh in proper_shapes(max) {
        let t = cdes_fibers(&sh);
        let tc = cdes_fibers(&sh.conjugate());
        for a in CyclicClass::all_proper(sh.size()) {
            c.check(
                tc.get(&a) == t.get(&a.complement()),
                || json!({"shape": sh.to_string(), "class": a.canonical().to_string()}),
            );
        }
    }
    Ok(c)
}

fn hook_expansion(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 1..=max {
        for k in 0..n {
            let r = schur::hook_expansion(n, k)?;
            c.check(
                r.raw_holds && r.normalized_holds,
                || json!({"n": n, "k": k}),
            );
        }
    }
    Ok(c)
}

fn near_hook(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 4..=max {
        for k in 2..=n - 2 {
            for (j, v) in schur::near_hook_difference(n, k)? {
                c.check(
                    v == (j.len() == k) as i64,
                    || json!({"n": n, "k": k, "set": j.to_string()}),
                );
            }
        }
    }
    Ok(c)
}

fn eulerian(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        let r = schur::sn_cdes_identity(n)?;
        c.check(r.holds, || serde_json::to_value(&r).unwrap());
    }
    Ok(c)
}

fn disconnected(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for m in 4..=max {
        for n in 4..=max - m {
            for lam in Partition::all(m).into_iter().filter(|l| !l.is_hook()) {
                for mu in Partition::all(n).into_iter().filter(|l| !l.is_hook()) {
                    let r = schur::disconnected_shuffle_identity(&lam, &mu)?;
                    c.check(
                        r.holds,
                        || json!({"lambda": lam.to_string(), "mu": mu.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn fundamental_family(max: usize) -> Vec<(String, QSymElem)> {
    let mut out = Vec::new();
    for n in 1..=max {
        for j in NSubset::all_lower(n) {
            out.push((format!("F{j}"), QSymElem::fundamental(&j).unwrap()));
        }
        for j in NSubset::all(n) {
            out.push((format!("Fcyc{j}"), fcyc_as_qsym(&j)));
        }
    }
    out
}

fn psi_homomorphism(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let r = 12;
    let fam = fundamental_family(max - 1);
    let images: Vec<QPoly> = fam.iter().map(|(_, f)| psi(f, r)).collect();
    for (x, (nx, f)) in fam.iter().enumerate() {
        for (y, (ny, g)) in fam.iter().enumerate().skip(x) {
            if f.degree() + g.degree() > max {
                continue;
            }
            let lhs = psi(&(f * g), r);
            c.check(
                lhs == images[x].odot(&images[y])?,
                || json!({"f": nx, "g": ny}),
            );
        }
    }
    Ok(c)
}

fn psi_closed_forms(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let r = max + 3;
    for n in 1..=max {
        for j in NSubset::all_lower(n) {
            let f = QSymElem::fundamental(&j)?;
            let ok = psi(&f, r) == psi_by_monomials(&f, r)
                && psi(&f, r) == enumer::psi_f_formula(n, j.len(), r);
            c.check(ok, || json!({"F": j.to_string()}));
        }
        for j in NSubset::all(n).filter(|j| !j.is_empty()) {
            let (fc, mc) = (fcyc_as_qsym(&j), mcyc_as_qsym(&j));
            let ok = psi_by_monomials(&fc, r) == enumer::psi_fcyc_formula(n, j.len(), r)
                && psi_by_monomials(&mc, r) == enumer::psi_mcyc_formula(j.len(), r);
            c.check(ok, || json!({"cyclic": j.to_string()}));
        }
    }
    Ok(c)
}

fn psi_ff(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    let r = 2 * max;
    for total in 2..=max {
        for m in 1..total {
            let n = total - m;
            for j in NSubset::all_lower(m) {
                for k in NSubset::all_lower(n) {
                    let f = &QSymElem::fundamental(&j)? * &QSymElem::fundamental(&k)?;
                    c.check(
                        psi(&f, r) == enumer::psi_ff_formula(m, j.len(), n, k.len(), r),
                        || json!({"J": j.to_string(), "K": k.to_string()}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn shuffle_distributions(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for m in 1..total {
            let n = total - m;
            let us = permutations(m);
            let vs: Vec<BijWord> = permutations(n)
                .into_iter()
                .map(|v| v.shifted(m as u32))
                .collect();
            for u in &us {
                for v in &vs {
                    let i = des_set(u).len();
                    let j = des_set(v).len();
                    let d = enumer::des_shuffle_dist(m, n, i, j)?;
                    c.check(
                        d == enumer::des_shuffle_tally(u, v)?,
                        || json!({"u": u.to_string(), "v": v.to_string(), "stat": "des"}),
                    );
                }
            }
            for u in cyclic_reps(m) {
                for v in cyclic_reps(n) {
                    let v = v.shifted(m as u32);
                    let (i, j) = (cdes_set(&u).len(), cdes_set(&v).len());
                    let d = enumer::cdes_shuffle_dist(m, n, i, j)?;
                    c.check(
                        d == enumer::cdes_shuffle_tally(&u, &v)?,
                        || json!({"u": u.to_string(), "v": v.to_string(), "stat": "cdes"}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn closed_forms_agree(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for total in 2..=max {
        for m in 1..total {
            let n = total - m;
            let range = |len: usize| if len == 1 { 0..=0 } else { 1..=len - 1 };
            for i in range(m) {
                for j in range(n) {
                    let d = enumer::cdes_shuffle_dist(m, n, i, j);
                    let mass = factorial(total as u64 - 1)
                        / (factorial(m as u64 - 1) * factorial(n as u64 - 1));
                    let ok = match &d {
                        Ok(v) => mass == v.iter().sum::<u64>().into(),
                        Err(_) => false,
                    };
                    c.check(ok, || json!({"m": m, "n": n, "i": i, "j": j}));
                }
            }
            for i in 0..m {
                for j in 0..n {
                    let v = enumer::des_shuffle_dist(m, n, i, j)?;
                    c.check(
                        binom(total as i64, m as i64) == v.iter().sum::<u64>().into(),
                        || json!({"m": m, "n": n, "i": i, "j": j, "stat": "des"}),
                    );
                }
            }
        }
    }
    Ok(c)
}

fn a_well_defined(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        c.check(
            descent::a_table(n).is_ok(),
            || json!({"n": n, "table": "a"}),
        );
        c.check(
            descent::tilde_a_table(n).is_ok(),
            || json!({"n": n, "table": "tilde-a"}),
        );
    }
    Ok(c)
}

fn coproduct(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        let r = descent::coproduct_report(n)?;
        let ok = r.nonnegative_integral
            && r.preserves_non_escher
            && r.matches_qsym_coproduct
            && r.h_matches_schur
            && r.e_matches_schur;
        c.check(ok, || serde_json::to_value(&r).unwrap());
    }
    Ok(c)
}

fn coassociativity(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        for b in CyclicClass::all(n) {
            c.check(
                descent::coassociativity_holds(n, &b)?,
                || json!({"n": n, "class": b.canonical().to_string()}),
            );
        }
    }
    Ok(c)
}

fn two_alphabet(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        for b in CyclicClass::all(n) {
            c.check(
                descent::two_alphabet_check(n, &b, 3)?,
                || json!({"n": n, "class": b.canonical().to_string()}),
            );
        }
    }
    Ok(c)
}

fn left_module(max: usize) -> Result<Checker> {
    let mut c = Checker::default();
    for n in 2..=max {
        let r = descent::left_module_check(n)?;
        c.check(r.holds, || serde_json::to_value(&r).unwrap());
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names: BTreeSet<&str> = SUITES.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), SUITES.len());
        assert!(SUITES.iter().all(|s| s.default_max <= s.cap));
    }

    #[test]
    fn caps_are_enforced() {
        assert!(run_suite("burnside", Some(99)).is_err());
        assert!(run_suite("no-such-suite", None).is_err());
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        assert_eq!(determinant(m), rat(1));
    }

    #[test]
    fn quick_suites_pass() {
        for (name, max) in [
            ("burnside", 8),
            ("linear-dependence", 5),
            ("cdes-star", 5),
            ("cyclic-shuffle-members", 5),
        ] {
            let r = run_suite(name, Some(max)).unwrap();
            assert!(r.passed, "{r:?}");
            assert!(r.checked > 0);
        }
    }
}
