//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's algorithms: sets are bitmasks (bit `i-1` is element `i`),
//! permutations are plain vectors and symmetric functions are maps from
//! subsets of `[n-1]` to coefficients in the fundamental basis.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cqsym::Rat;
use num_traits::{One, Zero};

pub type Mask = u64;
pub type FMap = BTreeMap<Mask, Rat>;
pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn mask_of(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &e| m | 1 << (e - 1))
}

pub fn elems(m: Mask) -> Vec<usize> {
    (1..=64).filter(|&i| m >> (i - 1) & 1 == 1).collect()
}

pub fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

/// `{j + i mod n}` with representatives in `[n]`.
pub fn rotate(m: Mask, n: usize, i: i64) -> Mask {
    let mut out = 0;
    for e in elems(m) {
        let r = ((e as i64 - 1 + i).rem_euclid(n as i64)) as usize + 1;
        out |= 1 << (r - 1);
    }
    out
}

/// Size of the rotation stabilizer of `m`.
pub fn stabilizer(m: Mask, n: usize) -> usize {
    (0..n as i64).filter(|&i| rotate(m, n, i) == m).count()
}

/// The lexicographically least rotation, as a sorted element list.
pub fn class_rep(m: Mask, n: usize) -> Vec<usize> {
    (0..n as i64).map(|i| elems(rotate(m, n, i))).min().unwrap()
}

/// One representative mask per nonempty rotation class.
pub fn nonempty_class_reps(n: usize) -> Vec<Mask> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in 1..=full(n) {
        if seen.insert(class_rep(m, n)) {
            out.push(mask_of(&class_rep(m, n)));
        }
    }
    out
}

pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..b as i128 {
        r = r * (a as i128 - i) / (i + 1);
    }
    r as i64
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn perms(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, rest: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n as u32).collect(), &mut out);
    out
}

pub fn des(w: &[u32]) -> Mask {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .fold(0, |m, i| m | 1 << (i - 1))
}

pub fn cdes(w: &[u32]) -> Mask {
    let n = w.len();
    let mut m = des(w);
    if n >= 2 && w[n - 1] > w[0] {
        m |= 1 << (n - 1);
    }
    m
}

/// `(s2 s1)(i) = s2(s1(i))`.
pub fn compose(s2: &[u32], s1: &[u32]) -> Vec<u32> {
    s1.iter().map(|&i| s2[i as usize - 1]).collect()
}

pub fn inverse(s: &[u32]) -> Vec<u32> {
    let mut out = vec![0; s.len()];
    for (i, &x) in s.iter().enumerate() {
        out[x as usize - 1] = i as u32 + 1;
    }
    out
}

/// The rotation of a word that starts with its least letter.
pub fn canonical_rotation(w: &[u32]) -> Vec<u32> {
    let k = (0..w.len()).min_by_key(|&i| w[i]).unwrap();
    w[k..].iter().chain(&w[..k]).copied().collect()
}

/// All shuffles of `u` and `v`.
pub fn shuffles(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
    let n = u.len() + v.len();
    let mut out = Vec::new();
    for pos in 0..1u64 << n {
        if popcount(pos) != u.len() {
            continue;
        }
        let (mut a, mut b) = (u.iter(), v.iter());
        out.push(
            (0..n)
                .map(|i| {
                    if pos >> i & 1 == 1 {
                        *a.next().unwrap()
                    } else {
                        *b.next().unwrap()
                    }
                })
                .collect(),
        );
    }
    out
}

/// Cyclic shuffles as canonical rotations: shuffles of every rotation of `u` with every rotation of `v`.
pub fn cyclic_shuffles(u: &[u32], v: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for i in 0..u.len() {
        let ru: Vec<u32> = u[i..].iter().chain(&u[..i]).copied().collect();
        for j in 0..v.len() {
            let rv: Vec<u32> = v[j..].iter().chain(&v[..j]).copied().collect();
            for w in shuffles(&ru, &rv) {
                out.insert(canonical_rotation(&w));
            }
        }
    }
    out
}

pub fn add_to(map: &mut FMap, key: Mask, c: Rat) {
    let e = map.entry(key).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

pub fn fmap_scale(f: &FMap, c: &Rat) -> FMap {
    let mut out = FMap::new();
    for (k, v) in f {
        add_to(&mut out, *k, v * c);
    }
    out
}

pub fn fmap_add(f: &FMap, g: &FMap) -> FMap {
    let mut out = f.clone();
    for (k, v) in g {
        add_to(&mut out, *k, v.clone());
    }
    out
}

/// `F^cyc_{n,J} = Σ_{i ∈ [n]} F_{n,(J-i) ∩ [n-1]}` in the fundamental basis.
pub fn fcyc(n: usize, j: Mask) -> FMap {
    let mut out = FMap::new();
    for i in 1..=n as i64 {
        add_to(&mut out, rotate(j, n, -i) & full(n - 1), Rat::one());
    }
    out
}

/// `hF^cyc_{n,J} = F^cyc_{n,J} / d_J`.
pub fn hfcyc(n: usize, j: Mask) -> FMap {
    fmap_scale(
        &fcyc(n, j),
        &Rat::new(1.into(), (stabilizer(j, n) as i64).into()),
    )
}

/// Coefficient of `M_{n,S}` in `Σ c_I F_{n,I}`.
pub fn m_coeff(f: &FMap, s: Mask) -> Rat {
    f.iter()
        .filter(|(i, _)| *i & !s == 0)
        .map(|(_, c)| c.clone())
        .sum()
}

/// `F_{n,I}(x_1..x_k)`: weakly increasing index sequences, strict after positions in `I`.
pub fn f_poly(n: usize, i: Mask, k: usize) -> Poly {
    let mut out = Poly::new();
    let mut seq = vec![0u32; n];
    fn go(p: usize, n: usize, i: Mask, k: usize, seq: &mut Vec<u32>, out: &mut Poly) {
        if p == n {
            let mut e = vec![0u32; k];
            for &x in seq.iter() {
                e[x as usize - 1] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let lo = if p == 0 {
            1
        } else if i >> (p - 1) & 1 == 1 {
            seq[p - 1] + 1
        } else {
            seq[p - 1]
        };
        for x in lo..=k as u32 {
            seq[p] = x;
            go(p + 1, n, i, k, seq, out);
        }
    }
    if n == 0 {
        out.insert(vec![0; k], 1);
        return out;
    }
    go(0, n, i, k, &mut seq, &mut out);
    out
}

/// `M_{n,S}(x_1..x_k)`: strictly increasing indices carrying the parts of the composition of `S`.
pub fn m_poly(n: usize, s: Mask, k: usize) -> Poly {
    let mut parts = Vec::new();
    let mut last = 0;
    for e in elems(s).into_iter().chain([n]) {
        parts.push((e - last) as u32);
        last = e;
    }
    let mut out = Poly::new();
    for idx in 0..1u64 << k {
        if popcount(idx) != parts.len() {
            continue;
        }
        let mut e = vec![0u32; k];
        for (slot, &p) in elems(idx).iter().zip(&parts) {
            e[slot - 1] = p;
        }
        out.insert(e, 1);
    }
    out
}

/// `F^cyc_{n,J}(x_1..x_k)` straight from the pairs `(w, k)` of cyclically weakly increasing words.
pub fn fcyc_poly_by_pairs(n: usize, j: Mask, k: usize) -> Poly {
    let mut out = Poly::new();
    let total = (k as u64).pow(n as u32);
    for code in 0..total {
        let mut w = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            w.push((c % k as u64) as u32 + 1);
            c /= k as u64;
        }
        for start in 0..n {
            let weakly = (0..n - 1).all(|t| w[(start + t) % n] <= w[(start + t + 1) % n]);
            if !weakly {
                continue;
            }
            // position start (0-based) is index k = start+1; the exempt ascent is at k-1
            let exempt = if start == 0 { n } else { start };
            let strict = elems(j)
                .into_iter()
                .filter(|&p| p != exempt)
                .all(|p| w[p - 1] < w[p % n]);
            if strict {
                let mut e = vec![0u32; k];
                for &x in &w {
                    e[x as usize - 1] += 1;
                }
                *out.entry(e).or_default() += 1;
            }
        }
    }
    out
}

pub fn poly_from_fmap(n: usize, f: &FMap, k: usize) -> BTreeMap<Vec<u32>, Rat> {
    let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    for (i, c) in f {
        for (e, v) in f_poly(n, *i, k) {
            *out.entry(e).or_insert_with(Rat::zero) += c * Rat::from_integer(v.into());
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn poly_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_default() += sign * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Cells `(row, col)` of `λ/μ`, rows and columns from 1.
pub fn skew_cells(lambda: &[usize], mu: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &l) in lambda.iter().enumerate() {
        let m = mu.get(r).copied().unwrap_or(0);
        for c in m + 1..=l {
            out.push((r + 1, c));
        }
    }
    out
}

/// Descent sets of all standard fillings of a cell set: rows increase to the right,
/// columns increase downward, `i` is a descent when `i+1` sits in a lower row.
pub fn syt_descents(cells: &[(usize, usize)]) -> Vec<Mask> {
    let n = cells.len();
    let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
    let mut filled: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rows_of = vec![0usize; n + 1];
    let mut out = Vec::new();
    fn go(
        v: usize,
        n: usize,
        set: &BTreeSet<(usize, usize)>,
        filled: &mut BTreeMap<(usize, usize), usize>,
        rows_of: &mut Vec<usize>,
        out: &mut Vec<Mask>,
    ) {
        if v > n {
            let d = (1..n)
                .filter(|&i| rows_of[i + 1] > rows_of[i])
                .fold(0, |m, i| m | 1 << (i - 1));
            out.push(d);
            return;
        }
        let free: Vec<(usize, usize)> = set
            .iter()
            .filter(|c| !filled.contains_key(c))
            .filter(|&&(r, c)| {
                let left_ok =
                    c == 1 || !set.contains(&(r, c - 1)) || filled.contains_key(&(r, c - 1));
                let up_ok =
                    r == 1 || !set.contains(&(r - 1, c)) || filled.contains_key(&(r - 1, c));
                left_ok && up_ok
            })
            .copied()
            .collect();
        for cell in free {
            filled.insert(cell, v);
            rows_of[v] = cell.0;
            go(v + 1, n, set, filled, rows_of, out);
            filled.remove(&cell);
        }
    }
    go(1, n, &set, &mut filled, &mut rows_of, &mut out);
    out
}

/// `Σ_T F_{Des(T)}` over standard fillings of a cell set.
pub fn schur_fmap(cells: &[(usize, usize)]) -> FMap {
    let mut out = FMap::new();
    for d in syt_descents(cells) {
        add_to(&mut out, d, Rat::one());
    }
    out
}

pub fn is_connected(cells: &[(usize, usize)]) -> bool {
    let set: BTreeSet<_> = cells.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![cells[0]];
    while let Some((r, c)) = stack.pop() {
        if !seen.insert((r, c)) {
            continue;
        }
        for nb in [
            (r + 1, c),
            (r.wrapping_sub(1), c),
            (r, c + 1),
            (r, c.wrapping_sub(1)),
        ] {
            if set.contains(&nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

pub fn is_connected_ribbon(cells: &[(usize, usize)]) -> bool {
    let set: BTreeSet<_> = cells.iter().copied().collect();
    let square = cells.iter().any(|&(r, c)| {
        set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))
    });
    is_connected(cells) && !square
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn is_hook(lambda: &[usize]) -> bool {
    lambda.len() <= 1 || lambda[1] <= 1
}

pub fn rat(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

/// Exact solve of `Σ_A x_A hF^cyc_{n,A} = f` over nonempty classes, by Gaussian
/// elimination on fundamental coordinates. `None` when `f` is outside the span.
#[allow(clippy::needless_range_loop)]
pub fn hf_coordinates(n: usize, f: &FMap) -> Option<BTreeMap<Mask, Rat>> {
    let reps = nonempty_class_reps(n);
    let rows = 1usize << (n - 1);
    let cols = reps.len();
    let mut a: Vec<Vec<Rat>> = vec![vec![Rat::zero(); cols + 1]; rows];
    for (c, &rep) in reps.iter().enumerate() {
        for (k, v) in hfcyc(n, rep) {
            a[k as usize][c] = v;
        }
    }
    for (k, v) in f {
        a[*k as usize][cols] = v.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rat::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for t in 0..=cols {
                    let sub = factor.clone() * a[r][t].clone();
                    a[i][t] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) || pivots.len() != cols {
        return None;
    }
    let mut out = BTreeMap::new();
    for (i, &c) in pivots.iter().enumerate() {
        if !a[i][cols].is_zero() {
            out.insert(reps[c], a[i][cols].clone());
        }
    }
    Some(out)
}

#[allow(clippy::needless_range_loop)]
pub fn determinant(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            let factor = a[i][c].clone() / a[c][c].clone();
            for t in c..n {
                let sub = factor.clone() * a[c][t].clone();
                a[i][t] -= sub;
            }
        }
    }
    det
}

/// `Ψ` by monomials: the coefficient of `q^r` collects the terms whose largest
/// variable with a positive exponent is `x_r`.
pub fn psi_of_poly(p: &Poly, r: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); r + 1];
    for (e, c) in p {
        let top = e.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        out[top] += rat(*c);
    }
    out
}

/// `(a ⊙ b)_r = Σ_{max(i,j) = r} a_i b_j`.
pub fn odot(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i.max(j)] += x * y;
        }
    }
    out
}

/// All functions `V → [bound]` satisfying `f(i) ≤ f(j)` on each arc, strictly when `i > j`.
pub fn d_partitions(n: usize, arcs: &BTreeSet<(u32, u32)>, bound: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let total = (bound as u64).pow(n as u32);
    for code in 0..total {
        let mut f = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            f.push((c % bound as u64) as u32 + 1);
            c /= bound as u64;
        }
        let ok = arcs.iter().all(|&(i, j)| {
            let (fi, fj) = (f[i as usize - 1], f[j as usize - 1]);
            if i > j {
                fi < fj
            } else {
                fi <= fj
            }
        });
        if ok {
            out.insert(f);
        }
    }
    out
}

pub fn is_source(arcs: &BTreeSet<(u32, u32)>, v: u32) -> bool {
    arcs.iter().all(|&(_, j)| j != v)
}

pub fn is_sink(arcs: &BTreeSet<(u32, u32)>, v: u32) -> bool {
    arcs.iter().all(|&(i, _)| i != v)
}

/// The flip class of a DAG on `[n]`, by breadth-first search over source and sink flips.
pub fn flip_class(n: usize, arcs: &BTreeSet<(u32, u32)>) -> BTreeSet<BTreeSet<(u32, u32)>> {
    let mut seen = BTreeSet::new();
    let mut queue = std::collections::VecDeque::from([arcs.clone()]);
    while let Some(d) = queue.pop_front() {
        if !seen.insert(d.clone()) {
            continue;
        }
        for v in 1..=n as u32 {
            if is_source(&d, v) || is_sink(&d, v) {
                let flipped: BTreeSet<(u32, u32)> = d
                    .iter()
                    .map(|&(i, j)| if i == v || j == v { (j, i) } else { (i, j) })
                    .collect();
                queue.push_back(flipped);
            }
        }
    }
    seen
}

pub fn linear_extensions(n: usize, arcs: &BTreeSet<(u32, u32)>) -> Vec<Vec<u32>> {
    perms(n)
        .into_iter()
        .filter(|w| {
            let mut pos = vec![0; n + 1];
            for (p, &x) in w.iter().enumerate() {
                pos[x as usize] = p;
            }
            arcs.iter().all(|&(i, j)| pos[i as usize] < pos[j as usize])
        })
        .collect()
}

/// Functions that are partitions for some rotation of the total order `w`: weakly
/// increasing along the rotation, strictly across each descent of it.
pub fn cyclic_word_partitions(w: &[u32], bound: u32) -> BTreeSet<Vec<u32>> {
    let n = w.len();
    let mut out = BTreeSet::new();
    let total = (bound as u64).pow(n as u32);
    for code in 0..total {
        let mut f = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            f.push((c % bound as u64) as u32 + 1);
            c /= bound as u64;
        }
        let fits = (0..n).any(|s| {
            (0..n - 1).all(|t| {
                let (x, y) = (w[(s + t) % n], w[(s + t + 1) % n]);
                let (fx, fy) = (f[x as usize - 1], f[y as usize - 1]);
                if x > y {
                    fx < fy
                } else {
                    fx <= fy
                }
            })
        });
        if fits {
            out.insert(f);
        }
    }
    out
}

pub fn gen_fn(fns: &BTreeSet<Vec<u32>>, k: usize) -> Poly {
    let mut out = Poly::new();
    for f in fns {
        let mut e = vec![0u32; k];
        for &x in f {
            e[x as usize - 1] += 1;
        }
        *out.entry(e).or_default() += 1;
    }
    out
}
