use proptest::prelude::*;

use pradical_core::fgmod::{DEFAULT_BOUND, MAX_BOUND};
use pradical_core::handle::ModuleHandle;
use pradical_core::harness::{self, shrink, CheckId, Failure, Instance, InstanceGenerator, Outcome, Presentation, Suite};
use pradical_core::rings::Ring;
use pradical_core::symmod;
use pradical_core::Error;

fn fp(gens: usize, relations: Vec<Vec<i64>>) -> Instance {
    Instance::FinPres(Presentation { ring: Ring::Integers, gens, relations })
}

fn weight(inst: &Instance) -> i64 {
    match inst {
        Instance::FinPres(p) => p.gens as i64 * 1000 + p.relations.iter().flatten().map(|x| x.abs()).sum::<i64>(),
        _ => 0,
    }
}

#[test]
fn reports_are_deterministic() {
    for s in [Suite::Oracle, Suite::Prop27, Suite::Topology, Suite::Semisimple] {
        let a = harness::run_suite(s, 11, 60, DEFAULT_BOUND).unwrap();
        let b = harness::run_suite(s, 11, 60, DEFAULT_BOUND).unwrap();
        assert_eq!(a.untimed(), b.untimed(), "{s}");
        assert!(a.passed(), "{a}");
    }
}

#[test]
fn seeds_change_the_instances() {
    let g1 = InstanceGenerator::new(1);
    let g2 = InstanceGenerator::new(2);
    let xs: Vec<_> = (0..20).map(|i| g1.finite_z(&mut g1.rng(i))).collect();
    let ys: Vec<_> = (0..20).map(|i| g2.finite_z(&mut g2.rng(i))).collect();
    assert_ne!(xs, ys);
    let again: Vec<_> = (0..20).map(|i| g1.finite_z(&mut g1.rng(i))).collect();
    assert_eq!(xs, again);
}

#[test]
fn json_report_shape() {
    let r = harness::run_suite(Suite::Chain, 3, 20, DEFAULT_BOUND).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["suite", "trials", "failures", "seed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["suite"], "chain");
    assert_eq!(v["trials"], 20);
    assert_eq!(v["seed"], 3);
    assert!(v["failures"].as_array().unwrap().is_empty());
    let back: harness::SuiteReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn bound_is_checked() {
    assert!(matches!(harness::run_suite(Suite::Oracle, 0, 1, MAX_BOUND + 1), Err(Error::Precondition(_))));
    let m: ModuleHandle = harness::Presentation { ring: Ring::Integers, gens: 1, relations: vec![vec![12]] }.build().unwrap().into();
    assert!(harness::verify_prop21(&m, MAX_BOUND + 1).is_err());
}

#[test]
fn suite_names() {
    assert_eq!(Suite::ALL.len(), 12);
    for s in Suite::ALL {
        assert_eq!(s.id().parse::<Suite>().unwrap(), s);
    }
    assert!(matches!("nope".parse::<Suite>(), Err(Error::Parse { .. })));
}

#[test]
fn coverage_is_the_union_of_suites() {
    let c = harness::coverage();
    for s in Suite::ALL {
        for id in s.certifies() {
            assert!(c.contains(id), "{id}");
        }
    }
    let mut sorted = c.clone();
    sorted.dedup();
    assert_eq!(sorted, c);
}

#[test]
fn single_module_entry_points() {
    let m: ModuleHandle = harness::Presentation { ring: Ring::Integers, gens: 2, relations: vec![vec![4, 0], vec![0, 6]] }
        .build()
        .unwrap()
        .into();
    assert!(harness::verify_prop21(&m, DEFAULT_BOUND).unwrap().passed());
    assert!(harness::verify_prop29(&m, DEFAULT_BOUND).unwrap().passed());
    assert!(harness::verify_chain(&m).unwrap().passed());
    let ex: ModuleHandle = symmod::construct_prop27(&Ring::Integers).unwrap().into();
    assert!(harness::verify_chain(&ex).unwrap().passed());
    let g = InstanceGenerator::new(5);
    for r in [
        harness::verify_thm211(&g, 40).unwrap(),
        harness::verify_thm212_213_216(&g, 40).unwrap(),
        harness::verify_nakayama(&g, 40).unwrap(),
        harness::verify_semisimple(&g, 40).unwrap(),
    ] {
        assert!(r.passed(), "{r}");
        assert!(r.checked > 0);
    }
}

#[test]
fn failures_rerun() {
    let z = fp(1, vec![]);
    assert!(CheckId::RadicalFormulaCounterexample.run(&z, DEFAULT_BOUND).is_fail());
    let f = Failure { trial: None, check: CheckId::RadicalFormulaCounterexample, message: String::new(), instance: z };
    assert!(harness::refails(&f, DEFAULT_BOUND));
    let ok = fp(2, vec![vec![0, 4]]);
    assert_eq!(CheckId::RadicalFormulaCounterexample.run(&ok, DEFAULT_BOUND), Outcome::Pass);
    let f = Failure { instance: ok, ..f };
    assert!(!harness::refails(&f, DEFAULT_BOUND));
}

fn has_order_divisible_by_3(inst: &Instance) -> bool {
    match inst {
        Instance::FinPres(p) => p.build().is_ok_and(|m| m.torsion_invariants().iter().any(|d| d % 3u32 == 0u32.into())),
        _ => false,
    }
}

#[test]
fn shrinking_reaches_a_local_minimum() {
    let start = fp(3, vec![vec![18, 4, 0], vec![0, 6, 2], vec![3, 0, 9]]);
    assert!(has_order_divisible_by_3(&start));
    let small = shrink::shrink(start.clone(), has_order_divisible_by_3);
    assert!(has_order_divisible_by_3(&small));
    assert!(weight(&small) <= weight(&start));
    assert!(shrink::candidates(&small).iter().all(|c| !has_order_divisible_by_3(c)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shrinking_keeps_the_failure(rows in prop::collection::vec(prop::collection::vec(-12i64..=12, 2), 1..=3)) {
        let inst = fp(2, rows);
        prop_assume!(has_order_divisible_by_3(&inst));
        let small = shrink::shrink(inst.clone(), has_order_divisible_by_3);
        prop_assert!(has_order_divisible_by_3(&small));
        prop_assert!(weight(&small) <= weight(&inst));
    }

    #[test]
    fn shrink_candidates_stay_valid(seed in 0u64..1000) {
        let g = InstanceGenerator::new(seed);
        let mut rng = g.rng(0);
        let inst = Instance::FinPres(g.finite_z(&mut rng));
        for c in shrink::candidates(&inst) {
            prop_assert!(c.handle().is_ok());
        }
        let sym = Instance::Symbolic(g.symbolic(&mut rng, &Ring::Integers));
        for c in shrink::candidates(&sym) {
            prop_assert!(c.handle().is_ok());
        }
    }
}
