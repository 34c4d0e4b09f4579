use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use pradical_core::fgmod::{self, FinPresModule, Submodule};
use pradical_core::rings::{self, Ring};
use pradical_core::Error;

fn z() -> Ring {
    Ring::Integers
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn cyclic(n: u64) -> FinPresModule {
    FinPresModule::from_invariants(z(), 0, &[n]).unwrap()
}

/// `Z/d_1 + ... + Z/d_k` as tuples, for checking against the library.
struct Group {
    orders: Vec<u64>,
}

type Set = BTreeSet<Vec<u64>>;

impl Group {
    fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
            out = out.into_iter().flat_map(|e| (0..d).map(move |x| [e.clone(), vec![x]].concat())).collect();
        }
        out
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), d)| (x + y) % d).collect()
    }

    fn scale(&self, r: u64, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.orders).map(|(x, d)| (r % d) * x % d).collect()
    }

    fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| num_integer::lcm(a, b))
    }

    fn join(&self, h: &Set, g: &[u64]) -> Set {
        let mut out = h.clone();
        let mut frontier: Vec<Vec<u64>> = out.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            let y = self.add(&x, g);
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
        out
    }

    fn subgroups(&self) -> Vec<Set> {
        let zero: Set = [vec![0; self.orders.len()]].into();
        let mut all: BTreeSet<Set> = [zero.clone()].into();
        let mut frontier = vec![zero];
        let els = self.elements();
        while let Some(h) = frontier.pop() {
            for g in &els {
                let j = self.join(&h, g);
                if all.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        all.into_iter().collect()
    }

    fn colon(&self, n: &Set) -> u64 {
        (1..=self.exponent()).find(|&r| self.elements().iter().all(|x| n.contains(&self.scale(r, x)))).unwrap()
    }

    fn is_prime(&self, n: &Set) -> bool {
        let els = self.elements();
        if n.len() == els.len() {
            return false;
        }
        (1..=self.exponent()).all(|r| {
            let kills = els.iter().all(|x| n.contains(&self.scale(r, x)));
            kills || els.iter().all(|x| !n.contains(&self.scale(r, x)) || n.contains(x))
        })
    }

    fn radical(&self, n: &Set) -> Set {
        let all: Set = self.elements().into_iter().collect();
        self.subgroups()
            .into_iter()
            .filter(|p| p.is_superset(n) && self.is_prime(p))
            .fold(all, |a, p| a.intersection(&p).cloned().collect())
    }

    fn module(&self) -> FinPresModule {
        FinPresModule::from_invariants(z(), 0, &self.orders).unwrap()
    }

    fn lift(&self, m: &FinPresModule, s: &Set) -> Submodule {
        let gens: Vec<Vec<BigInt>> = s.iter().map(|e| e.iter().map(|&x| BigInt::from(x)).collect()).collect();
        m.submodule(&gens).unwrap()
    }
}

fn groups() -> Vec<Group> {
    [vec![12], vec![4, 2], vec![2, 2], vec![6, 2], vec![8], vec![9, 3], vec![2, 2, 2], vec![4, 4], vec![30], vec![2, 6]]
        .into_iter()
        .map(|orders| Group { orders })
        .collect()
}

#[test]
fn agrees_with_element_model() {
    for g in groups() {
        let m = g.module();
        let subs = g.subgroups();
        let lib = fgmod::enumerate_submodules(&m, 20_000).unwrap();
        assert_eq!(lib.len(), subs.len(), "{:?}", g.orders);
        for s in &subs {
            let n = g.lift(&m, s);
            assert_eq!(fgmod::colon(&n), z().ideal(g.colon(s)), "{:?} {s:?}", g.orders);
            assert_eq!(fgmod::is_prime_submodule(&n).is_some(), g.is_prime(s), "{:?} {s:?}", g.orders);
            assert_eq!(fgmod::prime_radical(&n), g.lift(&m, &g.radical(s)), "{:?} {s:?}", g.orders);
        }
    }
}

#[test]
fn annihilators() {
    assert_eq!(fgmod::ann(&cyclic(12)), z().ideal(12));
    assert_eq!(fgmod::ann(&FinPresModule::over_integers(2, &[]).unwrap()), z().zero_ideal());
    let m = FinPresModule::over_integers(2, &[vec![2, 4], vec![6, 8]]).unwrap();
    assert_eq!(fgmod::ann(&m), z().ideal(4));
    // smallest k with k e_i in the relations
    let k = (1..=100i64)
        .find(|&k| (0..2).all(|i| {
            let mut e = vec![0i64; 2];
            e[i] = k;
            m.relations().contains(&ints(&e)).unwrap()
        }))
        .unwrap();
    assert_eq!(z().ideal(k), fgmod::ann(&m));
}

#[test]
fn colons() {
    let m = cyclic(12);
    assert_eq!(fgmod::colon(&m.scalar_submodule(&BigUint::from(2u32))), z().ideal(2));
    assert_eq!(fgmod::colon(&m.whole()), z().unit_ideal());
    let mz = FinPresModule::from_invariants(z(), 1, &[4]).unwrap();
    let n = mz.submodule(&[ints(&[0, 1])]).unwrap();
    assert_eq!(fgmod::colon(&n), z().zero_ideal());
}

#[test]
fn prime_submodules() {
    let m = cyclic(12);
    let two = m.scalar_submodule(&BigUint::from(2u32));
    assert_eq!(fgmod::is_prime_submodule(&two), Some(z().ideal(2)));
    assert_eq!(fgmod::is_prime_submodule(&m.scalar_submodule(&BigUint::from(4u32))), None);
    let zz = FinPresModule::over_integers(1, &[]).unwrap();
    assert_eq!(fgmod::is_prime_submodule(&zz.zero_submodule()), Some(z().zero_ideal()));
    assert_eq!(fgmod::is_prime_submodule(&zz.whole()), None);
}

#[test]
fn prime_radicals() {
    let m = cyclic(12);
    assert_eq!(fgmod::prime_radical(&m.zero_submodule()), m.scalar_submodule(&BigUint::from(6u32)));
    let zz = FinPresModule::over_integers(1, &[]).unwrap();
    assert_eq!(fgmod::prime_radical(&zz.zero_submodule()), zz.zero_submodule());
    let mz = FinPresModule::from_invariants(z(), 1, &[4]).unwrap();
    assert_eq!(fgmod::prime_radical(&mz.zero_submodule()), mz.submodule(&[ints(&[0, 2])]).unwrap());
    assert_eq!(fgmod::prime_radical(&m.whole()), m.whole());
    for (n, want) in [(12u64, 6u64), (4, 2), (2, 2)] {
        let c = cyclic(n);
        let rad = fgmod::prime_radical_oracle(&c.zero_submodule(), 1000).unwrap();
        assert_eq!(rad, c.scalar_submodule(&BigUint::from(want)));
    }
}

#[test]
fn property_checks() {
    let m = cyclic(12);
    let p = fgmod::check_p_radical(&m);
    assert!(p.verdict);
    assert_eq!(p.per_prime.len(), 2);
    assert!(fgmod::check_p_radical(&FinPresModule::over_integers(2, &[]).unwrap()).verdict);
    let zero = FinPresModule::over_integers(1, &[vec![1]]).unwrap();
    for c in [fgmod::check_p_radical(&zero), fgmod::check_m_radical(&zero), fgmod::check_primeful(&zero)] {
        assert!(c.verdict && c.per_prime.is_empty());
    }
    assert!(fgmod::check_m_radical(&FinPresModule::from_invariants(z(), 1, &[4]).unwrap()).verdict);
    let pf = fgmod::check_primeful(&m);
    assert!(pf.verdict);
    let zz = FinPresModule::over_integers(1, &[]).unwrap();
    assert!(fgmod::check_primeful(&zz).verdict);
}

#[test]
fn multiplication_modules() {
    assert!(fgmod::is_multiplication(&cyclic(12), 1000).unwrap());
    let klein = FinPresModule::from_invariants(z(), 0, &[2, 2]).unwrap();
    assert!(!fgmod::is_multiplication(&klein, 1000).unwrap());
    assert!(fgmod::is_multiplication(&FinPresModule::over_integers(1, &[]).unwrap(), 1000).unwrap());
    let big = FinPresModule::over_integers(2, &[]).unwrap();
    assert!(matches!(fgmod::is_multiplication(&big, 1000), Err(Error::Unsupported(_))));
}

#[test]
fn radical_formula() {
    assert!(fgmod::check_radical_formula(&cyclic(12), &z().ideal(4)).unwrap());
    let zz = FinPresModule::over_integers(1, &[]).unwrap();
    assert!(fgmod::check_radical_formula(&zz, &z().zero_ideal()).unwrap());
    let mz = FinPresModule::from_invariants(z(), 1, &[4]).unwrap();
    let (l, r) = fgmod::radical_formula_sides(&mz, &z().zero_ideal()).unwrap();
    assert_eq!(l, mz.submodule(&[ints(&[0, 2])]).unwrap());
    assert_eq!(r, mz.zero_submodule());
    assert!(matches!(fgmod::check_radical_formula(&cyclic(12), &z().ideal(5)), Err(Error::Precondition(_))));
}

#[test]
fn enumeration_counts() {
    assert_eq!(fgmod::enumerate_submodules(&cyclic(12), 100).unwrap().len(), 6);
    let klein = FinPresModule::from_invariants(z(), 0, &[2, 2]).unwrap();
    assert_eq!(fgmod::enumerate_submodules(&klein, 100).unwrap().len(), 5);
    let zero = FinPresModule::over_integers(1, &[vec![1]]).unwrap();
    assert_eq!(fgmod::enumerate_submodules(&zero, 100).unwrap().len(), 1);
    assert!(matches!(fgmod::enumerate_submodules(&cyclic(200), 100), Err(Error::TooLarge { .. })));
}

#[test]
fn modules_over_z_mod_n() {
    let r = Ring::modulo(12u32).unwrap();
    let m = FinPresModule::new(r.clone(), 2, &[ints(&[2, 0])]).unwrap();
    assert_eq!(m.torsion_invariants(), [BigUint::from(2u32), BigUint::from(12u32)]);
    assert_eq!(fgmod::ann(&m), r.zero_ideal());
    assert!(fgmod::check_p_radical(&m).verdict);
    assert!(FinPresModule::new(Ring::localized(5u32).unwrap(), 1, &[]).is_err());
}

fn finite_presentation() -> impl Strategy<Value = FinPresModule> {
    (1usize..=3, prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 0..=3), 1u64..=9).prop_map(|(n, rows, d)| {
        let mut rels: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).collect();
        // keep it finite
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = (d as i64 + i as i64) % 9 + 2;
            rels.push(e);
        }
        FinPresModule::over_integers(n, &rels).unwrap()
    })
}

fn any_presentation() -> impl Strategy<Value = FinPresModule> {
    (1usize..=3, prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 0..=3)).prop_map(|(n, rows)| {
        let rels: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).collect();
        FinPresModule::over_integers(n, &rels).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_forms_match_oracles(m in finite_presentation()) {
        prop_assume!(m.size().unwrap() <= BigUint::from(3000u32));
        for n in fgmod::enumerate_submodules(&m, 3000).unwrap() {
            prop_assert_eq!(fgmod::prime_radical(&n), fgmod::prime_radical_oracle(&n, 3000).unwrap());
            let fast = fgmod::is_prime_submodule(&n).map(|q| q.integer_generator());
            prop_assert_eq!(fast, fgmod::is_prime_oracle(&n, 3000).unwrap());
            prop_assert_eq!(fgmod::colon(&n), fgmod::colon_oracle(&n, 3000).unwrap());
        }
    }

    #[test]
    fn p_primes_are_the_proper_submodules_above_pm(m in finite_presentation()) {
        prop_assume!(m.size().unwrap() <= BigUint::from(3000u32));
        for n in fgmod::enumerate_submodules(&m, 3000).unwrap() {
            for p in [2u32, 3, 5, 7] {
                let pm = m.scalar_submodule(&BigUint::from(p));
                let between = !n.is_whole() && n.contains(&pm).unwrap();
                let prime_at_p = fgmod::is_prime_submodule(&n) == Some(z().ideal(p));
                prop_assert_eq!(between, prime_at_p);
            }
        }
    }

    #[test]
    fn radical_colon_is_the_radical_of_the_colon(m in finite_presentation()) {
        prop_assume!(m.size().unwrap() <= BigUint::from(3000u32));
        for n in fgmod::enumerate_submodules(&m, 3000).unwrap() {
            let rad = fgmod::prime_radical(&n);
            if !rad.is_whole() {
                let want = rings::radical_ideal(&z(), &fgmod::colon(&n)).unwrap();
                prop_assert_eq!(fgmod::colon(&rad), want);
            }
        }
    }

    #[test]
    fn finitely_presented_modules_satisfy_the_chain(m in any_presentation()) {
        prop_assert!(fgmod::check_primeful(&m).verdict);
        prop_assert!(fgmod::check_p_radical(&m).verdict);
        prop_assert!(fgmod::check_m_radical(&m).verdict);
    }

    #[test]
    fn nakayama_over_z_mod_n(n in 2u64..=60, rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 2), 0..=2)) {
        let r = Ring::modulo(n).unwrap();
        let rels: Vec<Vec<BigInt>> = rows.iter().map(|x| ints(x)).collect();
        let m = FinPresModule::new(r.clone(), 2, &rels).unwrap();
        let j = rings::ring_facts(&r).jacobson_radical;
        let jm = m.ideal_times(&j).unwrap();
        prop_assert!(!jm.is_whole() || m.is_zero());
    }
}
