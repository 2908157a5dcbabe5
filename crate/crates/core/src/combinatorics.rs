//! Subsets of `[n]`, their rotation classes, compositions, bijective words,
//! descent statistics and (cyclic) shuffles.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on the degree of the objects the library is asked to handle.
pub const DEFAULT_MAX_DEGREE: usize = 16;

/// A subset of `[n] = {1, ..., n}`, stored as a bitmask (bit `i - 1` for element `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NSubset {
    n: usize,
    bits: u64,
}

impl NSubset {
    pub const MAX_N: usize = 63;

    pub fn new<I: IntoIterator<Item = usize>>(n: usize, elems: I) -> Result<Self> {
        if n > Self::MAX_N {
            return Err(Error::TooLarge {
                n,
                max: Self::MAX_N,
            });
        }
        let mut bits = 0u64;
        for e in elems {
            if e == 0 || e > n {
                return Err(Error::OutOfRange { elem: e, n });
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(Error::Parse(format!("element {e} repeated")));
            }
            bits |= b;
        }
        Ok(NSubset { n, bits })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= Self::MAX_N);
        NSubset { n, bits: 0 }
    }

    /// `[n]` itself.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_N);
        NSubset { n, bits: mask(n) }
    }

    /// `[n-1]` viewed as a subset of `[n]`.
    pub fn lower_full(n: usize) -> Self {
        assert!(n <= Self::MAX_N);
        NSubset {
            n,
            bits: mask(n.saturating_sub(1)),
        }
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !mask(n) == 0);
        NSubset { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.n)
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n && self.bits & (1 << (e - 1)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&e| self.contains(e))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &NSubset) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// `J + i`, computed cyclically in `[n]`; negative shifts are allowed.
    pub fn rotate(&self, shift: i64) -> NSubset {
        if self.n == 0 {
            return *self;
        }
        let n = self.n as u32;
        let s = shift.rem_euclid(self.n as i64) as u32;
        if s == 0 {
            return *self;
        }
        let m = mask(self.n);
        let bits = ((self.bits << s) | (self.bits >> (n - s))) & m;
        NSubset { n: self.n, bits }
    }

    /// `[n] \ J`.
    pub fn complement(&self) -> NSubset {
        NSubset {
            n: self.n,
            bits: !self.bits & mask(self.n),
        }
    }

    /// `J ∩ [n-1]`, keeping the ambient size `n`.
    pub fn drop_top(&self) -> NSubset {
        NSubset {
            n: self.n,
            bits: self.bits & mask(self.n.saturating_sub(1)),
        }
    }

    pub fn with(&self, e: usize) -> NSubset {
        assert!(e >= 1 && e <= self.n);
        NSubset {
            n: self.n,
            bits: self.bits | (1 << (e - 1)),
        }
    }

    pub fn union(&self, other: &NSubset) -> NSubset {
        assert_eq!(self.n, other.n);
        NSubset {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn difference(&self, other: &NSubset) -> NSubset {
        assert_eq!(self.n, other.n);
        NSubset {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    /// Same elements, new ambient size.
    pub fn with_ambient(&self, n: usize) -> Result<NSubset> {
        NSubset::new(n, self.iter())
    }

    /// All subsets of `[n]`, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = NSubset> {
        assert!(n <= 24, "refusing to enumerate 2^{n} subsets");
        (0..(1u64 << n)).map(move |bits| NSubset { n, bits })
    }

    /// All subsets of `[n-1]` (the index set of `QSym_n`), ambient size `n`.
    pub fn all_lower(n: usize) -> impl Iterator<Item = NSubset> {
        let m = n.saturating_sub(1);
        assert!(m <= 24, "refusing to enumerate 2^{m} subsets");
        (0..(1u64 << m)).map(move |bits| NSubset { n, bits })
    }

    /// Subsets of `self`, in bitmask order.
    pub fn subsets(&self) -> Vec<NSubset> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u64;
        loop {
            out.push(NSubset {
                n: self.n,
                bits: sub,
            });
            if sub == self.bits {
                break;
            }
            sub = (sub.wrapping_sub(self.bits)) & self.bits;
        }
        out
    }

    /// `{1,3,5}`
    pub fn set_string(&self) -> String {
        let inner: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Parses `{1,3,5}` against a given ambient size.
    pub fn parse_in(n: usize, s: &str) -> Result<NSubset> {
        NSubset::new(n, parse_braced_list(s, '{', '}')?)
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Ord for NSubset {
    /// Ambient size first, then lexicographic order of the sorted element lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for NSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.set_string(), self.n)
    }
}

impl fmt::Debug for NSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for NSubset {
    type Err = Error;

    /// Parses the textual form `{1,3,5}/7`.
    fn from_str(s: &str) -> Result<Self> {
        let (set, n) = s
            .trim()
            .rsplit_once('/')
            .ok_or_else(|| Error::Parse(format!("expected {{..}}/n, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad ambient size in {s:?}")))?;
        NSubset::parse_in(n, set)
    }
}

pub fn parse_braced_list(s: &str, open: char, close: char) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected {open}..{close}, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {x:?} in {s:?}")))
        })
        .collect()
}

/// An orbit of subsets of `[n]` under rotation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicClass {
    canonical: NSubset,
    orbit_size: usize,
    stabilizer: usize,
}

impl CyclicClass {
    /// Lexicographically least rotation.
    pub fn canonical(&self) -> NSubset {
        self.canonical
    }

    pub fn n(&self) -> usize {
        self.canonical.n
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    /// `d_A`, the size of the stabilizer under rotation.
    pub fn d(&self) -> usize {
        self.stabilizer
    }

    /// `r(A)`, the common cardinality of the members.
    pub fn rank(&self) -> usize {
        self.canonical.len()
    }

    pub fn members(&self) -> Vec<NSubset> {
        let set: BTreeSet<NSubset> = (0..self.n().max(1) as i64)
            .map(|i| self.canonical.rotate(i))
            .collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, j: &NSubset) -> bool {
        j.n == self.n() && cyclic_class(j).canonical == self.canonical
    }

    pub fn is_empty_class(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn is_full_class(&self) -> bool {
        self.canonical.is_full()
    }

    /// Neither `[∅]` nor `[[n]]`.
    pub fn is_proper(&self) -> bool {
        !self.is_empty_class() && !self.is_full_class()
    }

    pub fn complement(&self) -> CyclicClass {
        cyclic_class(&self.canonical.complement())
    }

    /// All orbits of `2^[n]`, sorted by canonical representative.
    pub fn all(n: usize) -> Vec<CyclicClass> {
        let mut seen = BTreeSet::new();
        for j in NSubset::all(n) {
            seen.insert(cyclic_class(&j));
        }
        seen.into_iter().collect()
    }

    /// All orbits of nonempty subsets.
    pub fn all_nonempty(n: usize) -> Vec<CyclicClass> {
        Self::all(n)
            .into_iter()
            .filter(|c| !c.is_empty_class())
            .collect()
    }

    /// All orbits other than `[∅]` and `[[n]]`.
    pub fn all_proper(n: usize) -> Vec<CyclicClass> {
        Self::all(n).into_iter().filter(|c| c.is_proper()).collect()
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}

impl fmt::Debug for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn cyclic_class(j: &NSubset) -> CyclicClass {
    let n = j.n;
    if n == 0 {
        return CyclicClass {
            canonical: *j,
            orbit_size: 1,
            stabilizer: 1,
        };
    }
    let mut canonical = *j;
    let mut stabilizer = 0;
    for i in 0..n as i64 {
        let r = j.rotate(i);
        if r == *j {
            stabilizer += 1;
        }
        if r < canonical {
            canonical = r;
        }
    }
    CyclicClass {
        canonical,
        orbit_size: n / stabilizer,
        stabilizer,
    }
}

/// Positive integers summing to `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
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

    /// Moves the first `k` parts to the end.
    pub fn rotate(&self, k: usize) -> Composition {
        let mut p = self.0.clone();
        if !p.is_empty() {
            let k = k % p.len();
            p.rotate_left(k);
        }
        Composition(p)
    }

    /// The parts sorted into a weakly decreasing sequence.
    pub fn sorted_parts(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// Inverse of [`co`]: the partial sums short of `n`.
    pub fn descent_set(&self) -> NSubset {
        let n = self.n();
        let mut acc = 0;
        let mut bits = 0u64;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            bits |= 1 << (acc - 1);
        }
        NSubset::from_bits(n, bits)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_braced_list(s, '(', ')')?)
    }
}

/// `co(J) = (j_1, j_2 - j_1, ..., n - j_t)` for `J ⊆ [n-1]`.
pub fn co(j: &NSubset) -> Result<Composition> {
    let n = j.n();
    if n > 0 && j.contains(n) {
        return Err(Error::OutOfRange { elem: n, n: n - 1 });
    }
    if n == 0 {
        return Ok(Composition(Vec::new()));
    }
    let mut parts = Vec::with_capacity(j.len() + 1);
    let mut prev = 0;
    for e in j.iter() {
        parts.push(e - prev);
        prev = e;
    }
    parts.push(n - prev);
    Ok(Composition(parts))
}

/// `cc(J) = (j_2 - j_1, ..., j_t - j_{t-1}, j_1 - j_t + n)` for nonempty `J ⊆ [n]`.
pub fn cc(j: &NSubset) -> Result<Composition> {
    let e = j.elements();
    if e.is_empty() {
        return Err(Error::EmptyCyclicComposition);
    }
    let t = e.len();
    let mut parts = Vec::with_capacity(t);
    for k in 1..t {
        parts.push(e[k] - e[k - 1]);
    }
    parts.push(e[0] + j.n() - e[t - 1]);
    Ok(Composition(parts))
}

fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Number of rotation orbits of nonempty subsets of `[n]`, by Burnside's lemma.
pub fn count_cyclic_classes(n: usize) -> u64 {
    assert!((1..=NSubset::MAX_N).contains(&n));
    let n64 = n as u64;
    let total: u128 = (1..=n64)
        .filter(|d| n64.is_multiple_of(*d))
        .map(|d| totient(d) as u128 * (1u128 << (n64 / d)))
        .sum();
    (total / n as u128 - 1) as u64
}

/// A word with distinct integer letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijWord(Vec<u32>);

impl BijWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let set: BTreeSet<u32> = letters.iter().copied().collect();
        if set.len() != letters.len() {
            return Err(Error::RepeatedLetter(letters));
        }
        Ok(BijWord(letters))
    }

    /// The identity word `(1, 2, ..., n)`.
    pub fn identity(n: usize) -> Self {
        BijWord((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// `(w_{k+1}, ..., w_a, w_1, ..., w_k)`.
    pub fn rotate(&self, k: usize) -> BijWord {
        let mut l = self.0.clone();
        if !l.is_empty() {
            let k = k % l.len();
            l.rotate_left(k);
        }
        BijWord(l)
    }

    pub fn rotations(&self) -> Vec<BijWord> {
        (0..self.len().max(1)).map(|k| self.rotate(k)).collect()
    }

    /// Adds `offset` to every letter.
    pub fn shifted(&self, offset: u32) -> BijWord {
        BijWord(self.0.iter().map(|&x| x + offset).collect())
    }

    /// Inverse of a permutation of `[n]` in one-line notation.
    pub fn inverse(&self) -> BijWord {
        let n = self.0.len();
        let mut inv = vec![0u32; n];
        for (i, &x) in self.0.iter().enumerate() {
            assert!(
                x >= 1 && x as usize <= n,
                "inverse needs a permutation of [n]"
            );
            inv[x as usize - 1] = i as u32 + 1;
        }
        BijWord(inv)
    }
}

impl fmt::Display for BijWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for BijWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BijWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_braced_list(s, '(', ')')?
            .into_iter()
            .map(|x| u32::try_from(x).map_err(|_| Error::Parse(format!("letter {x} too large"))))
            .collect::<Result<Vec<u32>>>()?;
        BijWord::new(letters)
    }
}

/// `Des(w)` as a subset of `[len]` (never containing `len`).
pub fn des_set(w: &BijWord) -> NSubset {
    let l = w.letters();
    let mut bits = 0u64;
    for i in 1..l.len() {
        if l[i - 1] > l[i] {
            bits |= 1 << (i - 1);
        }
    }
    NSubset::from_bits(l.len(), bits)
}

/// Cellini's cyclic descent set, reading `w` cyclically; `∅` for words of length at most one.
pub fn cdes_set(w: &BijWord) -> NSubset {
    let l = w.letters();
    let d = des_set(w);
    if l.len() >= 2 && l[l.len() - 1] > l[0] {
        d.with(l.len())
    } else {
        d
    }
}

pub fn des(w: &BijWord) -> usize {
    des_set(w).len()
}

pub fn cdes(w: &BijWord) -> usize {
    cdes_set(w).len()
}

/// Rotation class of a word, represented by the rotation that starts at its least letter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(BijWord);

impl CyclicWord {
    pub fn new(w: &BijWord) -> Self {
        let pos = w
            .letters()
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(i, _)| i)
            .unwrap_or(0);
        CyclicWord(w.rotate(pos))
    }

    pub fn canonical(&self) -> &BijWord {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rotations(&self) -> Vec<BijWord> {
        self.0.rotations()
    }

    /// The class of `cDes` over all rotations of the word.
    pub fn cdes_class(&self) -> CyclicClass {
        cyclic_class(&cdes_set(&self.0))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn disjoint(u: &BijWord, v: &BijWord) -> bool {
    let su = u.support();
    v.letters().iter().all(|x| !su.contains(x))
}

/// All interleavings of `u` and `v`, in the order obtained by preferring letters of `u`.
pub fn shuffles(u: &BijWord, v: &BijWord) -> Result<Vec<BijWord>> {
    if !disjoint(u, v) {
        return Err(Error::OverlappingSupports);
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_rec(u.letters(), v.letters(), &mut buf, &mut out);
    Ok(out)
}

fn shuffle_rec(u: &[u32], v: &[u32], buf: &mut Vec<u32>, out: &mut Vec<BijWord>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(BijWord(w));
        return;
    }
    buf.push(u[0]);
    shuffle_rec(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    shuffle_rec(u, &v[1..], buf, out);
    buf.pop();
}

/// Cyclic words obtained by shuffling some rotation of `u` with some rotation of `v`.
pub fn cyclic_shuffles(u: &CyclicWord, v: &CyclicWord) -> Result<BTreeSet<CyclicWord>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !disjoint(u.canonical(), v.canonical()) {
        return Err(Error::OverlappingSupports);
    }
    let mut out = BTreeSet::new();
    for ur in u.rotations() {
        for vr in v.rotations() {
            for w in shuffles(&ur, &vr)? {
                out.insert(CyclicWord::new(&w));
            }
        }
    }
    Ok(out)
}

/// All orderings of `letters`, in lexicographic order of the sorted input.
pub fn permutations_of(letters: &[u32]) -> Vec<BijWord> {
    let mut cur: Vec<u32> = letters.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(BijWord(cur.clone()));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<BijWord> {
    permutations_of(&(1..=n as u32).collect::<Vec<_>>())
}

pub fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// True when some word of length `a` has cyclic descent set `j`:
/// `∅ ⊊ J ⊊ [a]`, or `J = ∅` with `a ≤ 1`.
pub fn is_cdes_realizable(j: &NSubset) -> bool {
    let a = j.n();
    if a <= 1 {
        j.is_empty()
    } else {
        !j.is_empty() && !j.is_full()
    }
}

/// Lexicographically least permutation of `[a]` whose cyclic descent set is `j`.
pub fn least_permutation_with_cdes(j: &NSubset) -> Result<BijWord> {
    let a = j.n();
    let unrealizable = || Error::Unrealizable {
        n: a,
        set: j.set_string(),
    };
    if !is_cdes_realizable(j) {
        return Err(unrealizable());
    }
    let mut cur: Vec<u32> = (1..=a as u32).collect();
    loop {
        let w = BijWord(cur.clone());
        if cdes_set(&w) == *j {
            return Ok(w);
        }
        if !next_permutation(&mut cur) {
            return Err(unrealizable());
        }
    }
}
