mod common;

use std::collections::BTreeSet;

use common::*;
use cqsym::combinatorics::{cdes_set, cyclic_class, BijWord, CyclicClass, CyclicWord, NSubset};
use cqsym::cqsym::{fcyc_as_qsym, hfcyc_as_qsym, CBasis, CQSymElem};
use cqsym::enumer::{cdes_shuffle_dist, psi};
use cqsym::qsym::QSymElem;
use cqsym::toric::Dag;
use num_traits::Zero;
use proptest::prelude::*;

fn sub(n: usize, m: Mask) -> NSubset {
    NSubset::new(n, elems(m)).unwrap()
}

fn fmap_of(f: &QSymElem) -> FMap {
    f.f_coeffs()
        .into_iter()
        .map(|(k, v)| (k.bits(), v))
        .collect()
}

fn subset() -> impl Strategy<Value = (usize, Mask)> {
    (1usize..=7).prop_flat_map(|n| (Just(n), 0..=full(n)))
}

fn proper_subset() -> impl Strategy<Value = (usize, Mask)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..full(n)))
}

fn word() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=7).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

fn dag() -> impl Strategy<Value = (usize, BTreeSet<(u32, u32)>)> {
    (1usize..=6).prop_flat_map(|n| {
        let order = Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle();
        let picks = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), order, picks).prop_map(|(n, order, picks)| {
            let mut arcs = BTreeSet::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if picks[k] {
                        arcs.insert((order[a], order[b]));
                    }
                    k += 1;
                }
            }
            (n, arcs)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fcyc_matches_rotation_sum((n, j) in subset()) {
        prop_assert_eq!(fmap_of(&fcyc_as_qsym(&sub(n, j))), fcyc(n, j));
    }

    #[test]
    fn fcyc_depends_only_on_the_class((n, j) in subset(), shift in 0i64..8) {
        let r = rotate(j, n, shift);
        prop_assert_eq!(fcyc_as_qsym(&sub(n, j)), fcyc_as_qsym(&sub(n, r)));
    }

    #[test]
    fn cdes_rotates_with_the_word(w in word(), k in 0usize..7) {
        let n = w.len();
        let k = k % n;
        let rotated: Vec<u32> = w[k..].iter().chain(&w[..k]).copied().collect();
        let lib = cdes_set(&BijWord::new(rotated.clone()).unwrap());
        prop_assert_eq!(lib.bits(), cdes(&rotated));
        if n >= 2 {
            prop_assert_eq!(cdes(&rotated), rotate(cdes(&w), n, -(k as i64)));
        }
    }

    #[test]
    fn class_stabilizer_and_rank((n, j) in proper_subset()) {
        let a = cyclic_class(&sub(n, j));
        prop_assert_eq!(a.d(), stabilizer(j, n));
        prop_assert_eq!(a.rank(), popcount(j));
        prop_assert_eq!(a.orbit_size() * a.d(), n);
        prop_assert!(a.contains(&sub(n, j)));
    }

    #[test]
    fn basis_round_trip((n, j) in proper_subset(), c in -5i64..=5) {
        let a = cyclic_class(&sub(n, j));
        let e = CQSymElem::from_terms(n, CBasis::HFcyc, [(a, rat(c))]).unwrap();
        let back = e.to_basis(CBasis::HMcyc).to_basis(CBasis::HFcyc);
        prop_assert_eq!(back.coeffs(), e.coeffs());
    }

    #[test]
    fn products_stay_cyclic((a, j) in proper_subset(), (b, k) in proper_subset()) {
        prop_assume!(a + b <= 8);
        let f = hfcyc_as_qsym(&cyclic_class(&sub(a, j)));
        let g = hfcyc_as_qsym(&cyclic_class(&sub(b, k)));
        let prod = f.mul(&g);
        prop_assert_eq!(&prod, &g.mul(&f));
        let lifted = CQSymElem::from_qsym(&prod).unwrap();
        prop_assert_eq!(lifted.to_qsym(), prod);
        let hf = lifted.to_basis(CBasis::HFcyc);
        prop_assert!(hf.is_integral() && hf.is_nonnegative());
    }

    #[test]
    fn omega_is_an_involutive_ring_map((a, j) in proper_subset(), (b, k) in proper_subset()) {
        prop_assume!(a + b <= 7);
        let x = CQSymElem::normalized(&sub(a, j), CBasis::HFcyc);
        let y = CQSymElem::normalized(&sub(b, k), CBasis::HFcyc);
        prop_assert_eq!(x.omega().omega(), x.clone());
        prop_assert_eq!(x.mul(&y).omega(), x.omega().mul(&y.omega()));
    }

    #[test]
    fn psi_is_multiplicative((a, j) in subset(), (b, k) in subset()) {
        prop_assume!(a + b <= 7);
        let f = fcyc_as_qsym(&sub(a, j));
        let g = QSymElem::fundamental(&sub(b, k & full(b - 1))).unwrap();
        let lhs = psi(&f.mul(&g), 10);
        prop_assert_eq!(lhs, psi(&f, 10).odot(&psi(&g, 10)).unwrap());
    }

    #[test]
    fn cyclic_shuffle_totals(m in 1usize..=6, n in 1usize..=6, i in 0usize..6, j in 0usize..6) {
        let valid = |len: usize, d: usize| if len == 1 { d == 0 } else { d >= 1 && d < len };
        prop_assume!(valid(m, i) && valid(n, j));
        let dist = cdes_shuffle_dist(m, n, i, j).unwrap();
        let count = factorial((m + n - 1) as u64) / (factorial(m as u64 - 1) * factorial(n as u64 - 1));
        prop_assert_eq!(dist.iter().sum::<u64>(), count);
    }

    #[test]
    fn toric_class_is_flip_closed((n, arcs) in dag()) {
        let d = Dag::on_range(n, arcs.iter().copied()).unwrap();
        let class = d.toric_class().unwrap();
        prop_assert_eq!(class.len(), flip_class(n, &arcs).len());
        for member in class.members() {
            let again = member.toric_class().unwrap();
            prop_assert_eq!(again.members(), class.members());
        }
        let closure = d.toric_transitive_closure();
        prop_assert!(closure.is_toric_transitively_closed());
        prop_assert_eq!(
            closure.toric_class().unwrap().toric_extensions(),
            class.toric_extensions()
        );
    }

    #[test]
    fn toric_extensions_are_rotation_classes((n, arcs) in dag()) {
        let d = Dag::on_range(n, arcs.iter().copied()).unwrap();
        let lib = d.toric_extensions().unwrap();
        let by_definition = d.toric_extensions_by_definition().unwrap();
        prop_assert_eq!(&lib, &by_definition);
        for w in &lib {
            prop_assert_eq!(w.canonical().letters()[0], 1);
            let last = CyclicWord::new(&w.rotations().pop().unwrap());
            prop_assert_eq!(last.canonical(), w.canonical());
        }
    }
}

#[test]
fn empty_class_is_never_a_cyclic_descent_set() {
    for n in 2..=6 {
        for w in perms(n) {
            let j = cdes(&w);
            assert!(j != 0 && j != full(n));
        }
        let classes: BTreeSet<CyclicClass> = CyclicClass::all_proper(n).into_iter().collect();
        let seen: BTreeSet<CyclicClass> = perms(n)
            .iter()
            .map(|w| cyclic_class(&sub(n, cdes(w))))
            .collect();
        assert_eq!(classes, seen);
    }
}

#[test]
fn fundamental_polynomials_agree_with_pair_definition() {
    for n in 1..=4 {
        for j in 0..=full(n) {
            let by_pairs = fcyc_poly_by_pairs(n, j, 3);
            let mut by_sum = Poly::new();
            for (i, c) in fcyc(n, j) {
                assert!(!c.is_zero());
                let c = i64::try_from(c.to_integer()).unwrap();
                by_sum = poly_add(&by_sum, &f_poly(n, i, 3), c);
            }
            assert_eq!(by_pairs, by_sum, "n={n} J={:?}", elems(j));
        }
    }
}
