//! Directed acyclic graphs up to flips, toric linear extensions and toric
//! `P`-partitions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::combinatorics::{cdes_set, permutations_of, BijWord, CyclicWord, NSubset};
use crate::cqsym::fcyc_as_qsym;
use crate::error::{Error, Result};
use crate::qsym::{QSymElem, TruncPoly};

/// Default bound on the number of DAGs visited while building a flip class.
pub const DEFAULT_CLASS_CAP: usize = 200_000;

/// Default bound on the vertex count for class and extension enumeration.
pub const DEFAULT_MAX_VERTICES: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dag {
    vertices: Vec<u32>,
    arcs: BTreeSet<(u32, u32)>,
}

impl Dag {
    pub fn new<V, A>(vertices: V, arcs: A) -> Result<Self>
    where
        V: IntoIterator<Item = u32>,
        A: IntoIterator<Item = (u32, u32)>,
    {
        let vs: BTreeSet<u32> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (i, j) in arcs {
            if !vs.contains(&i) || !vs.contains(&j) {
                return Err(Error::UnknownVertex(i, j));
            }
            if i == j {
                return Err(Error::Cyclic);
            }
            set.insert((i, j));
        }
        let d = Dag {
            vertices: vs.into_iter().collect(),
            arcs: set,
        };
        if d.topological_order().is_none() {
            return Err(Error::Cyclic);
        }
        Ok(d)
    }

    /// The DAG on `[n]` with the given arcs.
    pub fn on_range<A: IntoIterator<Item = (u32, u32)>>(n: usize, arcs: A) -> Result<Self> {
        Self::new(1..=n as u32, arcs)
    }

    /// The path `w_1 → w_2 → ⋯ → w_n`.
    pub fn chain(w: &BijWord) -> Self {
        let l = w.letters();
        Dag::new(l.iter().copied(), l.windows(2).map(|p| (p[0], p[1]))).unwrap()
    }

    /// The transitive tournament of `w`: `w_i → w_j` for all `i < j`.
    pub fn total_order(w: &BijWord) -> Self {
        let l = w.letters();
        let mut arcs = Vec::new();
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                arcs.push((l[i], l[j]));
            }
        }
        Dag::new(l.iter().copied(), arcs).unwrap()
    }

    pub fn disjoint_union(&self, other: &Dag) -> Result<Dag> {
        if self.vertices.iter().any(|v| other.vertices.contains(v)) {
            return Err(Error::OverlappingSupports);
        }
        Dag::new(
            self.vertices.iter().chain(&other.vertices).copied(),
            self.arcs.iter().chain(&other.arcs).copied(),
        )
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<(u32, u32)> {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_arc(&self, i: u32, j: u32) -> bool {
        self.arcs.contains(&(i, j))
    }

    fn index(&self, v: u32) -> usize {
        self.vertices.binary_search(&v).expect("vertex of this DAG")
    }

    fn topological_order(&self) -> Option<Vec<u32>> {
        let mut indeg: BTreeMap<u32, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(_, j) in &self.arcs {
            *indeg.get_mut(&j).unwrap() += 1;
        }
        let mut ready: VecDeque<u32> = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut out = Vec::with_capacity(self.vertices.len());
        while let Some(v) = ready.pop_front() {
            out.push(v);
            for &(i, j) in self.arcs.range((v, 0)..=(v, u32::MAX)) {
                debug_assert_eq!(i, v);
                let d = indeg.get_mut(&j).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push_back(j);
                }
            }
        }
        (out.len() == self.vertices.len()).then_some(out)
    }

    /// `reach[a][b]` is true when a directed path of length at least one leads from `a` to `b`.
    fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut reach = vec![vec![false; n]; n];
        let order = self.topological_order().unwrap();
        for &v in order.iter().rev() {
            let a = self.index(v);
            for &(_, j) in self.arcs.range((v, 0)..=(v, u32::MAX)) {
                let b = self.index(j);
                reach[a][b] = true;
                let row = reach[b].clone();
                for (t, r) in row.into_iter().enumerate() {
                    if r {
                        reach[a][t] = true;
                    }
                }
            }
        }
        reach
    }

    pub fn transitive_closure(&self) -> Dag {
        let reach = self.reachability();
        let mut arcs = BTreeSet::new();
        for (a, row) in reach.iter().enumerate() {
            for (b, &r) in row.iter().enumerate() {
                if r {
                    arcs.insert((self.vertices[a], self.vertices[b]));
                }
            }
        }
        Dag {
            vertices: self.vertices.clone(),
            arcs,
        }
    }

    /// Adds `x → y` whenever some arc `s → t` has a chain `s ⇝ x ⇝ y ⇝ t` through `x` before `y`.
    #[allow(clippy::needless_range_loop)]
    pub fn toric_transitive_closure(&self) -> Dag {
        let reach = self.reachability();
        let n = self.vertices.len();
        let weak = |a: usize, b: usize| a == b || reach[a][b];
        let mut arcs = self.arcs.clone();
        for &(s, t) in &self.arcs {
            let (s, t) = (self.index(s), self.index(t));
            for x in 0..n {
                if !weak(s, x) {
                    continue;
                }
                for y in 0..n {
                    if reach[x][y] && weak(y, t) {
                        arcs.insert((self.vertices[x], self.vertices[y]));
                    }
                }
            }
        }
        Dag {
            vertices: self.vertices.clone(),
            arcs,
        }
    }

    pub fn is_toric_transitively_closed(&self) -> bool {
        self.toric_transitive_closure() == *self
    }

    pub fn is_source(&self, v: u32) -> bool {
        self.vertices.contains(&v) && !self.arcs.iter().any(|&(_, j)| j == v)
    }

    pub fn is_sink(&self, v: u32) -> bool {
        self.vertices.contains(&v) && !self.arcs.iter().any(|&(i, _)| i == v)
    }

    /// Reverses every arc at a source or sink.
    pub fn flip(&self, v: u32) -> Result<Dag> {
        if !self.is_source(v) && !self.is_sink(v) {
            return Err(Error::NotSourceOrSink(v));
        }
        let arcs = self
            .arcs
            .iter()
            .map(|&(i, j)| if i == v || j == v { (j, i) } else { (i, j) })
            .collect();
        Ok(Dag {
            vertices: self.vertices.clone(),
            arcs,
        })
    }

    /// The flip class of `self`, explored breadth first.
    pub fn toric_class(&self) -> Result<ToricClass> {
        self.toric_class_capped(DEFAULT_CLASS_CAP)
    }

    pub fn toric_class_capped(&self, cap: usize) -> Result<ToricClass> {
        let mut members = BTreeSet::new();
        let mut queue = VecDeque::new();
        members.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(d) = queue.pop_front() {
            for &v in &d.vertices {
                if let Ok(e) = d.flip(v) {
                    if !members.contains(&e) {
                        if members.len() >= cap {
                            return Err(Error::ClassTooLarge(cap));
                        }
                        members.insert(e.clone());
                        queue.push_back(e);
                    }
                }
            }
        }
        Ok(ToricClass { members })
    }

    /// Words `w` whose total order contains every arc.
    pub fn linear_extensions(&self) -> BTreeSet<BijWord> {
        let mut out = BTreeSet::new();
        let mut indeg: BTreeMap<u32, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(_, j) in &self.arcs {
            *indeg.get_mut(&j).unwrap() += 1;
        }
        let mut cur = Vec::with_capacity(self.vertices.len());
        self.extend_rec(&mut indeg, &mut cur, &mut out);
        out
    }

    fn extend_rec(
        &self,
        indeg: &mut BTreeMap<u32, usize>,
        cur: &mut Vec<u32>,
        out: &mut BTreeSet<BijWord>,
    ) {
        if cur.len() == self.vertices.len() {
            out.insert(BijWord::new(cur.clone()).unwrap());
            return;
        }
        let ready: Vec<u32> = indeg
            .iter()
            .filter(|(v, &d)| d == 0 && !cur.contains(v))
            .map(|(&v, _)| v)
            .collect();
        for v in ready {
            cur.push(v);
            for &(_, j) in self.arcs.range((v, 0)..=(v, u32::MAX)) {
                *indeg.get_mut(&j).unwrap() -= 1;
            }
            self.extend_rec(indeg, cur, out);
            for &(_, j) in self.arcs.range((v, 0)..=(v, u32::MAX)) {
                *indeg.get_mut(&j).unwrap() += 1;
            }
            cur.pop();
        }
    }

    /// Total cyclic orders torically extending the class of `self`, as the
    /// union of ordinary linear extensions over the class members.
    pub fn toric_extensions(&self) -> Result<BTreeSet<CyclicWord>> {
        Ok(self.toric_class()?.toric_extensions())
    }

    /// Same set, straight from the definition: `[w]` qualifies when some
    /// member of `[D]` is contained in the total order of some rotation of `w`.
    pub fn toric_extensions_by_definition(&self) -> Result<BTreeSet<CyclicWord>> {
        let class = self.toric_class()?;
        let mut out = BTreeSet::new();
        for w in permutations_of(&self.vertices) {
            let cw = CyclicWord::new(&w);
            if cw.canonical() != &w {
                continue;
            }
            let hit = cw.rotations().iter().any(|r| {
                let t = Dag::total_order(r);
                class.members.iter().any(|d| d.arcs.is_subset(&t.arcs))
            });
            if hit {
                out.insert(cw);
            }
        }
        Ok(out)
    }

    /// Functions `f` into `1..=bound` with `f(i) ≤ f(j)` on every arc `i → j`,
    /// strictly when `i > j` as integers.
    pub fn d_partitions(&self, bound: u32) -> BTreeSet<PartitionFn> {
        let n = self.vertices.len();
        let mut out = BTreeSet::new();
        let mut vals = vec![1u32; n];
        if bound == 0 {
            return out;
        }
        loop {
            let ok = self.arcs.iter().all(|&(i, j)| {
                let (fi, fj) = (vals[self.index(i)], vals[self.index(j)]);
                if i > j {
                    fi < fj
                } else {
                    fi <= fj
                }
            });
            if ok {
                out.insert(PartitionFn::new(
                    self.vertices.iter().copied().zip(vals.iter().copied()),
                ));
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return out;
                }
                if vals[pos] < bound {
                    vals[pos] += 1;
                    break;
                }
                vals[pos] = 1;
                pos += 1;
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DagJson {
            vertices: self.vertices.clone(),
            arcs: self.arcs.iter().map(|&(i, j)| [i, j]).collect(),
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let d: DagJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Dag::new(d.vertices, d.arcs.into_iter().map(|[i, j]| (i, j)))
    }
}

#[derive(Serialize, Deserialize)]
struct DagJson {
    vertices: Vec<u32>,
    arcs: Vec<[u32; 2]>,
}

impl fmt::Display for Dag {
    /// `n; i->j, k->l` when the vertices are `1..=n`, otherwise `{v,...}; i->j, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let standard = self
            .vertices
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1);
        if standard {
            write!(f, "{}", self.vertices.len())?;
        } else {
            let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", vs.join(","))?;
        }
        let arcs: Vec<String> = self.arcs.iter().map(|(i, j)| format!("{i}->{j}")).collect();
        write!(f, "; {}", arcs.join(", "))
    }
}

impl fmt::Debug for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dag {
    type Err = Error;

    /// Parses `n; i->j, k->l` (vertices `1..=n`) or `{3,5,8}; 3->5`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s.split_once(';').unwrap_or((s, ""));
        let head = head.trim();
        let vertices: Vec<u32> = if head.starts_with('{') {
            crate::combinatorics::parse_braced_list(head, '{', '}')?
                .into_iter()
                .map(|v| v as u32)
                .collect()
        } else {
            let n: u32 = head
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex count {head:?}")))?;
            (1..=n).collect()
        };
        let mut arcs = Vec::new();
        for piece in tail.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (i, j) = piece
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("bad arc {piece:?}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad vertex {x:?}")))
            };
            arcs.push((parse(i)?, parse(j)?));
        }
        Dag::new(vertices, arcs)
    }
}

/// A flip-equivalence class of DAGs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ToricClass {
    members: BTreeSet<Dag>,
}

impl ToricClass {
    pub fn members(&self) -> &BTreeSet<Dag> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Least member in the derived order on `(vertices, arcs)`.
    pub fn canonical(&self) -> &Dag {
        self.members.iter().next().unwrap()
    }

    pub fn vertices(&self) -> &[u32] {
        self.canonical().vertices()
    }

    pub fn is_toric_poset(&self) -> bool {
        self.canonical().is_toric_transitively_closed()
    }

    pub fn toric_extensions(&self) -> BTreeSet<CyclicWord> {
        self.members
            .iter()
            .flat_map(|d| d.linear_extensions())
            .map(|w| CyclicWord::new(&w))
            .collect()
    }

    /// Functions that are a `D'`-partition for at least one member `D'`.
    pub fn toric_partitions(&self, bound: u32) -> BTreeSet<PartitionFn> {
        self.members
            .iter()
            .flat_map(|d| d.d_partitions(bound))
            .collect()
    }

    /// `Σ_{[w] ∈ L^tor} F^cyc_{n, cDes(w)}`.
    pub fn toric_enumerator(&self) -> QSymElem {
        let n = self.vertices().len();
        let mut out = QSymElem::zero(n);
        for w in self.toric_extensions() {
            out = &out + &fcyc_as_qsym(&cdes_set(w.canonical()));
        }
        out
    }
}

/// A function from the vertex labels to positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartitionFn {
    values: BTreeMap<u32, u32>,
}

impl PartitionFn {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        PartitionFn {
            values: pairs.into_iter().collect(),
        }
    }

    pub fn values(&self) -> &BTreeMap<u32, u32> {
        &self.values
    }

    pub fn get(&self, v: u32) -> Option<u32> {
        self.values.get(&v).copied()
    }

    /// Exponent vector of `Π_v x_{f(v)}` in `k` variables.
    pub fn exponents(&self, k: usize) -> Vec<u32> {
        let mut e = vec![0u32; k];
        for &x in self.values.values() {
            e[x as usize - 1] += 1;
        }
        e
    }
}

/// `Σ_f Π_v x_{f(v)}` over a finite set of functions into `1..=k`.
pub fn partitions_generating_function<'a, I>(fns: I, k: usize) -> TruncPoly
where
    I: IntoIterator<Item = &'a PartitionFn>,
{
    let mut p = TruncPoly::zero(k);
    for f in fns {
        p.add_term(f.exponents(k), Rat::from_integer(1.into()));
    }
    p
}

/// The cyclic class `[w]` seen as a flip class of total orders.
pub fn total_cyclic_order(w: &BijWord) -> Result<ToricClass> {
    Dag::total_order(w).toric_class()
}

/// Cyclic descent set of a word, as a subset of `[len]`.
pub fn cdes_of(w: &CyclicWord) -> NSubset {
    cdes_set(w.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dag(s: &str) -> Dag {
        s.parse().unwrap()
    }

    #[test]
    fn closures() {
        let d = dag("3; 1->2, 2->3, 1->3");
        assert_eq!(d.toric_transitive_closure(), d);
        let d = dag("4; 1->2, 2->3, 3->4, 1->4");
        let c = d.toric_transitive_closure();
        assert_eq!(c.arcs().len(), 6);
        assert_eq!(c, d.transitive_closure());
        let p = dag("3; 1->2, 2->3");
        assert_eq!(p.toric_transitive_closure(), p);
        assert!(p.transitive_closure().has_arc(1, 3));
    }

    #[test]
    fn flips() {
        let p = dag("3; 1->2, 2->3");
        assert_eq!(p.flip(3).unwrap(), dag("3; 1->2, 3->2"));
        assert_eq!(p.flip(2), Err(Error::NotSourceOrSink(2)));
    }

    #[test]
    fn rejects_cycles_and_unknown_vertices() {
        assert_eq!("3; 1->2, 2->3, 3->1".parse::<Dag>(), Err(Error::Cyclic));
        assert_eq!("2; 1->3".parse::<Dag>(), Err(Error::UnknownVertex(1, 3)));
    }

    #[test]
    fn small_toric_classes() {
        let d1 = dag("4; 1->2, 2->3, 3->4, 1->4");
        let c1 = d1.toric_class().unwrap();
        assert_eq!(c1.len(), 4);
        assert!(c1.members().contains(&dag("4; 2->3, 3->4, 4->1, 2->1")));
        let d2 = dag("4; 3->2, 3->4, 2->1, 4->1");
        assert_eq!(d2.toric_class().unwrap().len(), 6);
        let single = dag("1;");
        assert_eq!(single.toric_class().unwrap().len(), 1);
    }

    #[test]
    fn total_order_class_is_rotations() {
        let w: BijWord = "(2,4,1,3,5)".parse().unwrap();
        let class = total_cyclic_order(&w).unwrap();
        assert_eq!(class.len(), 5);
        let expected: BTreeSet<Dag> = w.rotations().iter().map(Dag::total_order).collect();
        assert_eq!(class.members(), &expected);
    }

    #[test]
    fn extensions() {
        let anti = dag("2;");
        assert_eq!(anti.linear_extensions().len(), 2);
        assert_eq!(anti.toric_extensions().unwrap().len(), 1);
        let u = Dag::total_order(&"(3,1,2)".parse().unwrap());
        let v = Dag::total_order(&"(5,4)".parse().unwrap());
        let uv = u.disjoint_union(&v).unwrap();
        assert_eq!(uv.toric_extensions().unwrap().len(), 12);
        assert_eq!(
            uv.toric_extensions().unwrap(),
            uv.toric_extensions_by_definition().unwrap()
        );
    }

    #[test]
    fn small_partitions() {
        let up = dag("2; 1->2").d_partitions(2);
        assert_eq!(up.len(), 3);
        let down = dag("2; 2->1").d_partitions(2);
        assert_eq!(down.len(), 1);
        let f = down.iter().next().unwrap();
        assert_eq!((f.get(2), f.get(1)), (Some(1), Some(2)));
    }

    #[test]
    fn text_round_trip() {
        let d = dag("4; 1->2, 3->2");
        assert_eq!(d.to_string(), "4; 1->2, 3->2");
        assert_eq!(d.to_string().parse::<Dag>().unwrap(), d);
        let e = dag("{3,5,8}; 8->3");
        assert_eq!(e.to_string().parse::<Dag>().unwrap(), e);
        assert_eq!(Dag::from_json(&e.to_json()).unwrap(), e);
    }
}
