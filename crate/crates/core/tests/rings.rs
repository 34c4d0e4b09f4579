use num_bigint::BigInt;
use proptest::prelude::*;

use pradical_core::rings::{self, Ideal, PrimeSet, Ring};

fn z() -> Ring {
    Ring::Integers
}

/// Primes of the ring; for `Z` the zero ideal and a prefix of the maximals.
fn sample_spec(r: &Ring) -> Vec<Ideal> {
    match r.finite_spectrum() {
        Some(s) => s,
        None => {
            let mut s = vec![r.zero_ideal()];
            s.extend([2u32, 3, 5, 7, 11, 13].iter().map(|&p| r.ideal(p)));
            s
        }
    }
}

fn intersect_all(r: &Ring, set: &PrimeSet) -> Ideal {
    match set {
        PrimeSet::CofiniteMaximals { .. } => r.zero_ideal(),
        PrimeSet::Finite(s) => s.iter().fold(r.unit_ideal(), |a, b| a.intersect(b).unwrap()),
    }
}

fn rings() -> Vec<Ring> {
    vec![
        z(),
        Ring::modulo(12u32).unwrap(),
        Ring::modulo(30u32).unwrap(),
        Ring::modulo(8u32).unwrap(),
        Ring::localized(5u32).unwrap(),
        Ring::field(7u32).unwrap(),
    ]
}

#[test]
fn descriptors_validate() {
    assert!(Ring::modulo(1u32).is_err());
    assert!(Ring::localized(6u32).is_err());
    assert!(Ring::field(9u32).is_err());
    let r: Ring = serde_json::from_str(r#"{"kind":"ZmodN","n":12}"#).unwrap();
    assert_eq!(r, Ring::modulo(12u32).unwrap());
    let r: Ring = serde_json::from_str(r#"{"kind":"ZlocP","p":"5"}"#).unwrap();
    assert_eq!(r, Ring::localized(5u32).unwrap());
    assert!(serde_json::from_str::<Ring>(r#"{"kind":"Fp","p":4}"#).is_err());
}

#[test]
fn ideal_normal_forms() {
    let r = Ring::modulo(12u32).unwrap();
    assert_eq!(r.ideal(8), r.ideal(4));
    assert_eq!(r.ideal(0), r.ideal(24));
    assert_eq!(r.ideal(5), r.unit_ideal());
    let l = Ring::localized(5u32).unwrap();
    assert_eq!(l.ideal(50), l.ideal(25));
    assert_eq!(l.ideal(3), l.unit_ideal());
    assert_eq!(z().ideal(-6), z().ideal(6));
}

#[test]
fn maximals_containing() {
    let m = rings::maximal_ideals_containing(&z(), &z().ideal(12)).unwrap();
    assert_eq!(m, PrimeSet::Finite([z().ideal(2), z().ideal(3)].into()));
    let all = rings::maximal_ideals_containing(&z(), &z().zero_ideal()).unwrap();
    assert_eq!(all, PrimeSet::all_maximals());
    let l = Ring::localized(5u32).unwrap();
    assert_eq!(rings::maximal_ideals_containing(&l, &l.zero_ideal()).unwrap(), PrimeSet::Finite([l.ideal(5)].into()));
    assert!(rings::maximal_ideals_containing(&l, &l.unit_ideal()).unwrap().is_empty());
    assert!(rings::maximal_ideals_containing(&l, &z().ideal(5)).is_err());
}

#[test]
fn radicals() {
    assert_eq!(rings::radical_ideal(&z(), &z().ideal(12)).unwrap(), z().ideal(6));
    assert_eq!(rings::radical_ideal(&z(), &z().zero_ideal()).unwrap(), z().zero_ideal());
    let r = Ring::modulo(12u32).unwrap();
    assert_eq!(rings::radical_ideal(&r, &r.ideal(4)).unwrap(), r.ideal(2));
}

/// Elements of `Z/n` with a power in `(d)`, as an ideal.
fn radical_by_elements(n: u64, d: u64) -> u64 {
    let in_ideal = |x: u64| x % d == 0;
    let nil: Vec<u64> = (0..n)
        .filter(|&x| {
            let mut y = x % n;
            (0..8).any(|_| {
                let hit = in_ideal(y);
                y = y * x % n;
                hit
            })
        })
        .collect();
    nil.iter().copied().filter(|&x| x > 0).min().unwrap_or(n)
}

#[test]
fn radical_matches_element_enumeration() {
    for n in [8u64, 12, 18, 30, 36, 60] {
        let r = Ring::modulo(n).unwrap();
        for d in (1..=n).filter(|d| n % d == 0) {
            let want = r.ideal(radical_by_elements(n, d));
            assert_eq!(rings::radical_ideal(&r, &r.ideal(d)).unwrap(), want, "n={n} d={d}");
        }
    }
}

#[test]
fn hilbert_and_facts() {
    assert!(rings::is_hilbert(&z()));
    assert!(!rings::is_hilbert(&Ring::localized(5u32).unwrap()));
    assert!(rings::is_hilbert(&Ring::modulo(12u32).unwrap()));
    let f = rings::ring_facts(&z());
    assert_eq!((f.krull_dim, f.is_artinian, f.is_domain, f.is_field), (1, false, true, false));
    assert_eq!(f.jacobson_radical, z().zero_ideal());
    let r = Ring::modulo(12u32).unwrap();
    let f = rings::ring_facts(&r);
    assert_eq!((f.krull_dim, f.is_artinian, f.is_domain, f.is_field), (0, true, false, false));
    assert_eq!(f.jacobson_radical, r.ideal(6));
    let l = Ring::localized(5u32).unwrap();
    let f = rings::ring_facts(&l);
    assert_eq!((f.krull_dim, f.is_artinian, f.is_domain, f.is_field), (1, false, true, false));
    assert_eq!(f.jacobson_radical, l.ideal(5));
}

#[test]
fn hilbert_iff_primes_are_intersections_of_maximals() {
    for r in rings() {
        let every = sample_spec(&r).into_iter().all(|p| {
            let over = rings::maximal_ideals_containing(&r, &p).unwrap();
            intersect_all(&r, &over) == p
        });
        assert_eq!(every, rings::is_hilbert(&r), "{r}");
    }
}

#[test]
fn dimension_zero_iff_every_prime_is_maximal() {
    for r in rings() {
        let all_max = sample_spec(&r).iter().all(|p| p.is_maximal());
        assert_eq!(rings::ring_facts(&r).krull_dim == 0, all_max, "{r}");
    }
}

proptest! {
    #[test]
    fn radical_is_idempotent_and_monotone(a in 0i64..500, b in 1i64..20, n in 2u64..100) {
        for r in [z(), Ring::modulo(n).unwrap()] {
            let i = r.ideal(a);
            let j = r.ideal(BigInt::from(a) * b);
            let ri = rings::radical_ideal(&r, &i).unwrap();
            prop_assert_eq!(rings::radical_ideal(&r, &ri).unwrap(), ri.clone());
            let rj = rings::radical_ideal(&r, &j).unwrap();
            prop_assert!(rj.contains(&j).unwrap());
            prop_assert!(ri.contains(&rj).unwrap() || !i.contains(&j).unwrap());
        }
    }

    #[test]
    fn lattice_operations_on_ideals(a in 0i64..200, b in 0i64..200) {
        let (i, j) = (z().ideal(a), z().ideal(b));
        let s = i.sum(&j).unwrap();
        let m = i.intersect(&j).unwrap();
        prop_assert!(s.contains(&i).unwrap() && s.contains(&j).unwrap());
        prop_assert!(i.contains(&m).unwrap() && j.contains(&m).unwrap());
        prop_assert!(m.contains(&i.product(&j).unwrap()).unwrap());
    }
}
