use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use pradical_core::fgmod::{self, FinPresModule};
use pradical_core::handle::ModuleHandle;
use pradical_core::rings::{PrimeSet, Ring};
use pradical_core::spectop::{self, ClosedOp, ClosedOpResult, ClosedSetR};
use pradical_core::symmod::{self, SymbolicModule};

fn z() -> Ring {
    Ring::Integers
}

/// Primes as integers, 0 for the zero prime, over a sample of the spectrum.
fn spectrum(r: &Ring) -> Vec<u64> {
    match r {
        Ring::Integers => vec![0, 2, 3, 5, 7, 11, 13, 17, 19, 23],
        Ring::IntegersModN(n) => {
            let n: u64 = n.to_string().parse().unwrap();
            (2..=n).filter(|p| n % p == 0 && (2..*p).all(|q| p % q != 0)).collect()
        }
        Ring::LocalizedAtPrime(p) => vec![0, p.to_string().parse().unwrap()],
        Ring::PrimeField(_) => vec![0],
    }
}

/// Whether the prime `p` (as above) contains the integer `d`.
fn over(r: &Ring, p: u64, d: i64) -> bool {
    match (r, p) {
        (Ring::PrimeField(q), 0) => BigInt::from(d) % BigInt::from(q.clone()) == BigInt::from(0),
        (_, 0) => d == 0,
        (_, p) => d % p as i64 == 0,
    }
}

fn rings() -> Vec<Ring> {
    vec![z(), Ring::modulo(12u32).unwrap(), Ring::modulo(30u32).unwrap(), Ring::localized(5u32).unwrap(), Ring::field(7u32).unwrap()]
}

fn v(r: &Ring, d: i64) -> ClosedSetR {
    spectop::v_ideal(r, &r.ideal(d)).unwrap()
}

fn members(r: &Ring, c: &ClosedSetR) -> Vec<u64> {
    spectrum(r).into_iter().filter(|&p| c.contains(&r.ideal(p))).collect()
}

#[test]
fn v_of_ideals() {
    assert_eq!(v(&z(), 12), ClosedSetR::finite(&z(), [z().ideal(2), z().ideal(3)]).unwrap());
    assert!(v(&z(), 0).is_whole());
    assert!(v(&z(), 1).is_empty());
    let r = Ring::modulo(12u32).unwrap();
    assert!(v(&r, 6).is_whole());
    assert_eq!(members(&r, &v(&r, 4)), [2]);
    let l = Ring::localized(5u32).unwrap();
    assert_eq!(members(&l, &v(&l, 25)), [5]);
    assert!(v(&l, 3).is_empty());
    assert!(spectop::v_ideal(&z(), &r.ideal(2)).is_err());
    assert!(ClosedSetR::finite(&z(), [z().ideal(4)]).is_err());
}

#[test]
fn basic_opens() {
    let r = Ring::modulo(12u32).unwrap();
    assert!(spectop::d_basic(&r, &BigInt::from(5)).unwrap().is_whole());
    assert!(spectop::d_basic(&r, &BigInt::from(6)).unwrap().is_empty());
    let d = spectop::d_basic(&z(), &BigInt::from(10)).unwrap();
    assert!(d.contains(&z().ideal(3)) && d.contains(&z().zero_ideal()));
    assert!(!d.contains(&z().ideal(5)));
    assert!(!d.contains(&z().ideal(4)));
}

#[test]
fn closed_set_operations() {
    let a = v(&z(), 6);
    let b = v(&z(), 10);
    let u = ClosedSetR::finite(&z(), [2u32, 3, 5].map(|p| z().ideal(p))).unwrap();
    assert_eq!(spectop::closed_ops(&a, &b, ClosedOp::Union).unwrap(), ClosedOpResult::Set(u));
    assert_eq!(spectop::closed_ops(&a, &b, ClosedOp::Intersection).unwrap(), ClosedOpResult::Set(v(&z(), 2)));
    assert_eq!(spectop::closed_ops(&v(&z(), 2), &a, ClosedOp::Subset).unwrap(), ClosedOpResult::Truth(true));
    assert_eq!(spectop::closed_ops(&a, &v(&z(), 36), ClosedOp::Equal).unwrap(), ClosedOpResult::Truth(true));
    let r = Ring::modulo(6u32).unwrap();
    assert!(spectop::closed_ops(&a, &v(&r, 2), ClosedOp::Union).is_err());
    // a finite set of maximals that covers Spec(Z/6) is the whole space
    assert!(ClosedSetR::finite(&r, [r.ideal(2), r.ideal(3)]).unwrap().is_whole());
}

#[test]
fn v_of_submodules() {
    let zz = FinPresModule::over_integers(1, &[]).unwrap();
    let six = zz.submodule(&[vec![BigInt::from(6)]]).unwrap();
    let set = spectop::v_submodule(&six);
    let sub = |k: i64| zz.submodule(&[vec![BigInt::from(k)]]).unwrap();
    assert!(set.contains(&sub(2)).unwrap());
    assert!(set.contains(&sub(3)).unwrap());
    assert!(!set.contains(&sub(5)).unwrap());
    assert!(!set.contains(&zz.zero_submodule()).unwrap());
    assert!(set.contains(&sub(4)).is_err());

    let m = FinPresModule::from_invariants(z(), 0, &[12]).unwrap();
    let spec = fgmod::prime_spectrum(&m, 1000).unwrap();
    assert_eq!(spec.len(), 2);
    let two = m.scalar_submodule(&BigUint::from(2u32));
    let idx = spectop::v_submodule(&two).members(&spec);
    assert_eq!(idx.len(), 1);
    assert_eq!(spec[idx[0]].0, two);
    assert_eq!(spectop::v_submodule(&m.zero_submodule()).members(&spec).len(), 2);
    assert!(spectop::v_submodule(&m.whole()).members(&spec).is_empty());
}

#[test]
fn psi_images() {
    let m: ModuleHandle = FinPresModule::from_invariants(z(), 0, &[12]).unwrap().into();
    let img = spectop::psi_image(&m);
    assert!(!img.zero_prime);
    assert_eq!(img.maximals, PrimeSet::Finite([z().ideal(2), z().ideal(3)].into()));
    assert!(spectop::psi_surjective(&m));
    let ex: ModuleHandle = symmod::construct_prop27(&z()).unwrap().into();
    assert!(!spectop::psi_surjective(&ex));
    let pr: ModuleHandle = SymbolicModule::builder(z()).pruefer(5, 1).build().unwrap().into();
    assert!(spectop::psi_image(&pr).is_empty());
    assert!(!spectop::psi_surjective(&pr));
    assert!(spectop::v_zero(&ex).shadow().is_whole());
}

#[test]
fn dot_output() {
    let m = FinPresModule::from_invariants(z(), 0, &[12]).unwrap();
    let dot = spectop::psi_dot(&m, 1000).unwrap();
    assert!(dot.starts_with("digraph psi"));
    assert_eq!(dot.matches("shape=box").count(), 2);
}

fn finite_presentation() -> impl Strategy<Value = FinPresModule> {
    (1usize..=2, prop::collection::vec(prop::collection::vec(-9i64..=9, 2), 0..=2), 2i64..=12, 2i64..=12).prop_map(
        |(n, rows, a, b)| {
            let mut rels: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).collect();
            rels.push([vec![a], vec![0; n - 1]].concat());
            if n == 2 {
                rels.push(vec![0, b]);
            }
            FinPresModule::over_integers(n, &rels).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn v_matches_divisibility(i in 0usize..5, d in -60i64..=60) {
        let r = &rings()[i];
        let set = v(r, d);
        let want: Vec<u64> = spectrum(r).into_iter().filter(|&p| over(r, p, d)).collect();
        prop_assert_eq!(members(r, &set), want);
        let open = spectop::d_basic(r, &BigInt::from(d)).unwrap();
        for p in spectrum(r) {
            prop_assert_eq!(open.contains(&r.ideal(p)), !over(r, p, d));
        }
    }

    #[test]
    fn closed_set_laws(i in 0usize..5, d in -60i64..=60, e in -60i64..=60, f in -60i64..=60) {
        let r = &rings()[i];
        let (a, b, c) = (v(r, d), v(r, e), v(r, f));
        prop_assert_eq!(a.union(&b).unwrap(), v(r, d * e));
        let g = num_integer::gcd(d, e);
        prop_assert_eq!(a.intersection(&b).unwrap(), v(r, g));
        prop_assert_eq!(a.union(&b.intersection(&c).unwrap()).unwrap(), a.union(&b).unwrap().intersection(&a.union(&c).unwrap()).unwrap());
        prop_assert!(a.intersection(&b).unwrap().is_subset(&a).unwrap());
        prop_assert!(a.is_subset(&a.union(&b).unwrap()).unwrap());
        prop_assert_eq!(v(r, d * d), a.clone());
        prop_assert_eq!(spectop::v_ideal(r, &a.ideal()).unwrap(), a.clone());
        let (da, db) = (spectop::d_basic(r, &BigInt::from(d)).unwrap(), spectop::d_basic(r, &BigInt::from(e)).unwrap());
        prop_assert_eq!(da.intersection(&db).unwrap(), spectop::d_basic(r, &BigInt::from(d * e)).unwrap());
    }

    #[test]
    fn submodule_closed_sets(m in finite_presentation()) {
        prop_assume!(m.size().unwrap() <= BigUint::from(600u32));
        let subs = fgmod::enumerate_submodules(&m, 600).unwrap();
        let spec = fgmod::prime_spectrum(&m, 600).unwrap();
        prop_assert_eq!(spectop::v_submodule(&m.zero_submodule()).members(&spec).len(), spec.len());
        prop_assert!(spectop::v_submodule(&m.whole()).members(&spec).is_empty());
        for n in subs.iter().take(12) {
            let set = spectop::v_submodule(n);
            let nc = fgmod::colon_oracle(n, 600).unwrap();
            for (k, (p, q)) in spec.iter().enumerate() {
                let inside = set.members(&spec).contains(&k);
                prop_assert_eq!(inside, q.contains(&nc).unwrap());
                if p.contains(n).unwrap() {
                    prop_assert!(inside);
                }
            }
            for l in subs.iter().take(6) {
                let both = n.intersect(l).unwrap();
                let mut joined = set.members(&spec);
                joined.extend(spectop::v_submodule(l).members(&spec));
                joined.sort();
                joined.dedup();
                prop_assert_eq!(spectop::v_submodule(&both).members(&spec), joined);
            }
        }
        prop_assert!(spectop::psi_surjective(&m.clone().into()));
    }
}
