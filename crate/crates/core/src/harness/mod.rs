//! Verification suites: seeded instance streams run through the checks in
//! [`checks`], with failing instances shrunk before they are reported.

pub mod checks;
pub mod generator;
pub mod shrink;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgmod::MAX_BOUND;
use crate::handle::ModuleHandle;
use crate::rings::Ring;
use crate::symmod::{self, SymbolicModule};

pub use checks::{CheckId, Outcome};
pub use generator::{Instance, InstanceGenerator, Presentation, RingKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    Prop21,
    Prop29,
    Cor24,
    Prop27,
    Thm211,
    Thm212,
    Chain,
    Nakayama,
    Semisimple,
    Topology,
    RadicalFormula,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Oracle,
        Suite::Prop21,
        Suite::Prop29,
        Suite::Cor24,
        Suite::Prop27,
        Suite::Thm211,
        Suite::Thm212,
        Suite::Chain,
        Suite::Nakayama,
        Suite::Semisimple,
        Suite::Topology,
        Suite::RadicalFormula,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Prop21 => "prop_2_1",
            Suite::Prop29 => "prop_2_9",
            Suite::Cor24 => "cor_2_4",
            Suite::Prop27 => "prop_2_7",
            Suite::Thm211 => "thm_2_11",
            Suite::Thm212 => "thm_2_12",
            Suite::Chain => "chain",
            Suite::Nakayama => "nakayama",
            Suite::Semisimple => "semisimple",
            Suite::Topology => "topology",
            Suite::RadicalFormula => "radical_formula",
        }
    }

    /// The numbered results this suite exercises.
    pub fn certifies(self) -> &'static [&'static str] {
        match self {
            Suite::Oracle => &[],
            Suite::Prop21 => &["2.1"],
            Suite::Prop29 => &["2.9"],
            Suite::Cor24 => &["2.3", "2.4", "2.13"],
            Suite::Prop27 => &["2.6", "2.7", "2.10"],
            Suite::Thm211 => &["2.11"],
            Suite::Thm212 => &["2.12", "2.13", "2.16", "2.17"],
            Suite::Chain => &["2.3", "2.18"],
            Suite::Nakayama => &["2.19"],
            Suite::Semisimple => &["3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8"],
            Suite::Topology => &[],
            Suite::RadicalFormula => &["2.1"],
        }
    }

    fn jobs(self, g: &InstanceGenerator, rng: &mut ChaCha8Rng) -> Vec<(CheckId, Instance)> {
        let fin = |rng: &mut ChaCha8Rng| Instance::FinPres(g.finite_any(rng));
        match self {
            Suite::Oracle => {
                let a = fin(rng);
                let kind = if rng.gen_bool(0.5) { RingKind::Z } else { RingKind::ZmodN };
                let ring = g.ring(rng, kind);
                vec![(CheckId::Oracle, a), (CheckId::Truncation, Instance::Symbolic(g.symbolic(rng, &ring)))]
            }
            Suite::Prop21 => vec![(CheckId::Prop21, fin(rng))],
            Suite::Prop29 => {
                let a = fin(rng);
                let b = random_symbolic(g, rng);
                let c = Instance::FinPres(g.any_z(rng));
                vec![(CheckId::Prop29, a), (CheckId::Prop29, b), (CheckId::Prop29, c)]
            }
            Suite::Cor24 => {
                let a = Instance::FinPres(g.any_z(rng));
                let b = Instance::FinPres(g.finite_zmod(rng, None));
                let ring = g.ring(rng, RingKind::ZmodN);
                let c = Instance::Symbolic(g.symbolic(rng, &ring));
                vec![(CheckId::Cor24, a), (CheckId::Cor24, b), (CheckId::Cor24, c)]
            }
            Suite::Prop27 => {
                let mut s = g.symbolic(rng, &Ring::Integers);
                s = with_cofinite_family(&s, rng);
                let d = pruefer_only(rng);
                vec![(CheckId::Prop27, Instance::Symbolic(s)), (CheckId::Primeless, Instance::Symbolic(d))]
            }
            Suite::Thm211 => {
                let a = if rng.gen_bool(0.5) {
                    Instance::FinPres(g.any_z(rng))
                } else {
                    Instance::Symbolic(g.symbolic(rng, &Ring::Integers))
                };
                let b = match rng.gen_range(0..3) {
                    0 => Instance::FinPres(g.finite_zmod(rng, None)),
                    1 => {
                        let r = g.ring(rng, RingKind::ZmodN);
                        Instance::Symbolic(g.symbolic(rng, &r))
                    }
                    _ => {
                        let r = g.ring(rng, RingKind::Fp);
                        Instance::Symbolic(g.symbolic(rng, &r))
                    }
                };
                let r = g.ring(rng, RingKind::ZlocP);
                let c = Instance::Symbolic(g.symbolic(rng, &r));
                vec![(CheckId::Thm211, a), (CheckId::Thm211, b), (CheckId::Thm211, c)]
            }
            Suite::Thm212 => {
                let r = g.ring(rng, RingKind::ZmodN);
                let a = Instance::Symbolic(g.symbolic(rng, &r));
                let b = Instance::FinPres(g.finite_zmod(rng, None));
                let r = g.ring(rng, RingKind::Fp);
                let c = Instance::Symbolic(g.symbolic(rng, &r));
                let d = Instance::Symbolic(g.symbolic(rng, &Ring::Integers));
                let r = g.ring(rng, RingKind::ZlocP);
                let e = Instance::Symbolic(g.symbolic(rng, &r));
                [a, b, c, d, e].into_iter().map(|i| (CheckId::Thm212, i)).collect()
            }
            Suite::Chain => {
                let a = fin(rng);
                let b = Instance::FinPres(g.any_z(rng));
                let c = random_symbolic(g, rng);
                [a, b, c].into_iter().map(|i| (CheckId::Chain, i)).collect()
            }
            Suite::Nakayama => {
                let a = random_symbolic(g, rng);
                let b = fin(rng);
                let c = Instance::FinPres(g.finite_zmod(rng, Some(8)));
                [a, b, c].into_iter().map(|i| (CheckId::Nakayama, i)).collect()
            }
            Suite::Semisimple => vec![(CheckId::Semisimple, Instance::Symbolic(g.semisimple(rng)))],
            Suite::Topology => {
                let mut out = vec![(CheckId::SpecTopology, fin(rng))];
                out.extend((0..TRIPLES_PER_TRIAL).map(|_| (CheckId::ClosedAlgebra, g.ideal_triple(rng))));
                out
            }
            Suite::RadicalFormula => vec![(CheckId::RadicalFormula, fin(rng))],
        }
    }

    /// Named instances run once per suite, outside the trial stream.
    fn fixed_jobs(self) -> Vec<(CheckId, Instance)> {
        let z = Ring::Integers;
        let sym = |m: Result<SymbolicModule>| Instance::Symbolic(m.expect("named instance"));
        match self {
            Suite::Prop27 => vec![
                (CheckId::Prop27Certified, sym(symmod::construct_prop27(&z))),
                (CheckId::Primeless, sym(SymbolicModule::builder(z.clone()).pruefer(5, 1).build())),
            ],
            Suite::Thm211 => [2u32, 3, 5, 7]
                .into_iter()
                .map(|p| (CheckId::Thm211Certified, sym(symmod::construct_thm211(&Ring::localized(p).expect("prime")))))
                .collect(),
            Suite::Thm212 => vec![
                (CheckId::Thm212, sym(symmod::construct_prop27(&z))),
                (CheckId::Thm212, sym(SymbolicModule::builder(Ring::localized(5u32).expect("prime")).pruefer(5, 1).build())),
            ],
            Suite::Nakayama => vec![(
                CheckId::NakayamaPruefer,
                sym(SymbolicModule::builder(Ring::localized(5u32).expect("prime")).pruefer(5, 1).build()),
            )],
            Suite::Semisimple => vec![
                (CheckId::SemisimpleExpected, sym(SymbolicModule::builder(z.clone()).family_cofinite(&[]).build())),
                (CheckId::SemisimpleExpected, sym(SymbolicModule::builder(z.clone()).family_cofinite(&[2]).build())),
                (CheckId::SemisimpleExpected, sym(SymbolicModule::builder(z.clone()).cyclic(2, 1, 1).cyclic(3, 1, 1).build())),
            ],
            Suite::RadicalFormula => vec![(
                CheckId::RadicalFormulaCounterexample,
                Instance::FinPres(Presentation { ring: z, gens: 2, relations: vec![vec![0, 4]] }),
            )],
            _ => Vec::new(),
        }
    }

    /// Tags counted into the report; some suites require a tag to occur.
    fn observe(self, inst: &Instance) -> Vec<&'static str> {
        let Ok(h) = inst.handle() else { return Vec::new() };
        let mut tags = Vec::new();
        match (self, h.ring()) {
            (Suite::Thm212, Ring::Integers) if !h.check_primeful().verdict => tags.push("z_not_primeful"),
            (Suite::Thm212, Ring::LocalizedAtPrime(_)) if !h.check_m_radical().verdict => tags.push("zloc_not_m_radical"),
            (Suite::Thm211, Ring::LocalizedAtPrime(_)) if h.check_m_radical().verdict && !h.check_p_radical().verdict => {
                tags.push("zloc_discrepancy")
            }
            (Suite::Semisimple, _) => {
                if let Instance::Symbolic(s) = inst {
                    let cofinite: Vec<_> = s.families().iter().filter(|f| !f.is_finite()).collect();
                    let tag = match cofinite.first() {
                        None => "finite_support",
                        Some(crate::rings::PrimeSet::CofiniteMaximals { excluded }) if excluded.is_empty() => "cofinite",
                        Some(_) => "cofinite_with_exceptions",
                    };
                    tags.push(tag);
                }
            }
            _ => {}
        }
        tags
    }

    fn required_tags(self) -> &'static [&'static str] {
        match self {
            Suite::Thm212 => &["z_not_primeful", "zloc_not_m_radical"],
            _ => &[],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::Parse { field: "suite".into(), message: format!("unknown suite {s:?}") })
    }
}

/// Closed-set triples checked per topology trial.
pub const TRIPLES_PER_TRIAL: usize = 20;

fn random_symbolic(g: &InstanceGenerator, rng: &mut ChaCha8Rng) -> Instance {
    let kind = *[RingKind::Z, RingKind::ZmodN, RingKind::ZlocP, RingKind::Fp].choose(rng).expect("nonempty");
    let ring = g.ring(rng, kind);
    Instance::Symbolic(g.symbolic(rng, &ring))
}

fn with_cofinite_family(s: &SymbolicModule, rng: &mut ChaCha8Rng) -> SymbolicModule {
    let mut families: Vec<_> = s.families().iter().filter(|f| f.is_finite()).cloned().collect();
    let excluded: std::collections::BTreeSet<_> = [2u64, 3, 5, 7].iter().filter(|_| rng.gen_bool(0.3)).map(|&p| s.ring().ideal(p)).collect();
    families.push(crate::rings::PrimeSet::CofiniteMaximals { excluded });
    SymbolicModule::new(s.ring().clone(), symmod::Rank::Finite(0), s.cyclics().to_vec(), families, s.pruefer().to_vec())
        .expect("valid over Z")
}

fn pruefer_only(rng: &mut ChaCha8Rng) -> SymbolicModule {
    let p = *[2u64, 3, 5, 7].choose(rng).expect("nonempty");
    let ring = if rng.gen_bool(0.5) { Ring::Integers } else { Ring::localized(p).expect("prime") };
    SymbolicModule::builder(ring).pruefer(p, rng.gen_range(1..=3)).build().expect("valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Trial index, or `None` for a named instance.
    pub trial: Option<usize>,
    pub check: CheckId,
    pub message: String,
    /// The shrunk instance; rerunning `check` on it fails.
    pub instance: Instance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub seed: u64,
    pub bound: u64,
    pub certifies: Vec<String>,
    /// Instances on which a check ran to a verdict.
    pub checked: usize,
    /// Instances outside a check's scope.
    pub skipped: usize,
    /// Per check: instances checked and skipped.
    pub checks: BTreeMap<String, CheckCount>,
    pub observations: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub checked: usize,
    pub skipped: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// The report without its timing field, for comparisons.
    pub fn untimed(&self) -> SuiteReport {
        SuiteReport { elapsed_ms: 0, ..self.clone() }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{} {status}: {} trials, {} checked, {} skipped, {} failures, seed {}, {} ms",
            self.suite,
            self.trials,
            self.checked,
            self.skipped,
            self.failures.len(),
            self.seed,
            self.elapsed_ms
        )?;
        for (c, n) in &self.checks {
            write!(f, "\n  {c}: {} checked, {} skipped", n.checked, n.skipped)?;
        }
        for (tag, n) in &self.observations {
            write!(f, "\n  observed {tag}: {n}")?;
        }
        for x in &self.failures {
            let at = x.trial.map_or("named".to_string(), |t| format!("trial {t}"));
            let payload = serde_json::to_string(&x.instance).expect("serializable");
            write!(f, "\n  {at} {}: {}\n    {payload}", x.check, x.message)?;
        }
        Ok(())
    }
}

struct JobResult {
    check: CheckId,
    failure: Option<Failure>,
    skipped: bool,
    tags: Vec<&'static str>,
}

fn run_job(suite: Suite, trial: Option<usize>, check: CheckId, inst: Instance, bound: u64) -> JobResult {
    let tags = suite.observe(&inst);
    match check.run(&inst, bound) {
        Outcome::Pass => JobResult { check, failure: None, skipped: false, tags },
        Outcome::Skip(_) => JobResult { check, failure: None, skipped: true, tags },
        Outcome::Fail(_) => {
            let small = shrink::shrink(inst, |c| check.run(c, bound).is_fail());
            let message = match check.run(&small, bound) {
                Outcome::Fail(m) => m,
                _ => unreachable!("shrinking keeps the failure"),
            };
            JobResult { check, failure: Some(Failure { trial, check, message, instance: small }), skipped: false, tags }
        }
    }
}

fn check_bound(bound: u64) -> Result<()> {
    if bound > MAX_BOUND {
        return Err(Error::Precondition(format!("bound {bound} exceeds {MAX_BOUND}")));
    }
    Ok(())
}

/// Runs `trials` trials of a suite from a generator. Trials run in
/// parallel and are merged in index order.
pub fn run_with_generator(suite: Suite, g: &InstanceGenerator, trials: usize, bound: u64) -> Result<SuiteReport> {
    check_bound(bound)?;
    let start = Instant::now();
    let mut results: Vec<JobResult> = (0..trials)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut rng = g.rng(i);
            let jobs = suite.jobs(g, &mut rng);
            jobs.into_iter().map(move |(c, inst)| run_job(suite, Some(i), c, inst, bound)).collect::<Vec<_>>()
        })
        .collect();
    results.extend(suite.fixed_jobs().into_iter().map(|(c, inst)| run_job(suite, None, c, inst, bound)));
    let mut observations: BTreeMap<String, u64> = BTreeMap::new();
    let mut failures = Vec::new();
    let (mut checked, mut skipped) = (0, 0);
    let mut checks: BTreeMap<String, CheckCount> = BTreeMap::new();
    for r in results {
        let c = checks.entry(r.check.to_string()).or_default();
        if r.skipped {
            c.skipped += 1;
        } else {
            c.checked += 1;
        }
        for t in r.tags {
            *observations.entry(t.to_string()).or_default() += 1;
        }
        if r.skipped {
            skipped += 1;
        } else {
            checked += 1;
        }
        failures.extend(r.failure);
    }
    let missing: Vec<&str> = suite.required_tags().iter().copied().filter(|t| !observations.contains_key(*t)).collect();
    if !missing.is_empty() {
        return Err(Error::Precondition(format!("required witnesses not generated: {}", missing.join(", "))));
    }
    Ok(SuiteReport {
        suite: suite.id().to_string(),
        trials,
        failures,
        seed: g.seed,
        bound,
        certifies: suite.certifies().iter().map(|s| s.to_string()).collect(),
        checked,
        skipped,
        checks,
        observations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_suite(suite: Suite, seed: u64, trials: usize, bound: u64) -> Result<SuiteReport> {
    run_with_generator(suite, &InstanceGenerator::new(seed).with_bound(bound), trials, bound)
}

pub fn run_all(seed: u64, trials: usize, bound: u64) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(s, seed, trials, bound)).collect()
}

/// Whether a reported failure still fails when rerun in isolation.
pub fn refails(f: &Failure, bound: u64) -> bool {
    f.check.run(&f.instance, bound).is_fail()
}

/// Every numbered result covered by some suite.
pub fn coverage() -> Vec<&'static str> {
    let mut all: Vec<&str> = Suite::ALL.iter().flat_map(|s| s.certifies().iter().copied()).collect();
    all.sort_by_key(|s| {
        let (a, b) = s.split_once('.').expect("numbered");
        (a.parse::<u32>().expect("number"), b.parse::<u32>().expect("number"))
    });
    all.dedup();
    all
}

fn single(check: CheckId, suite: &str, m: &ModuleHandle, bound: u64) -> Result<SuiteReport> {
    check_bound(bound)?;
    let start = Instant::now();
    let inst = Instance::from_handle(m)?;
    let (failures, checked, skipped) = match check.run(&inst, bound) {
        Outcome::Pass => (Vec::new(), 1, 0),
        Outcome::Skip(reason) => return Err(Error::Precondition(reason)),
        Outcome::Fail(message) => (vec![Failure { trial: None, check, message, instance: inst }], 1, 0),
    };
    Ok(SuiteReport {
        suite: suite.to_string(),
        trials: 1,
        failures,
        seed: 0,
        bound,
        certifies: Vec::new(),
        checked,
        skipped,
        checks: BTreeMap::from([(check.to_string(), CheckCount { checked, skipped })]),
        observations: BTreeMap::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// The four conditions of the ideal-radical characterization on one finite
/// module.
pub fn verify_prop21(m: &ModuleHandle, bound: u64) -> Result<SuiteReport> {
    single(CheckId::Prop21, "prop_2_1", m, bound)
}

/// The five conditions of the maximal-ideal characterization on one module.
pub fn verify_prop29(m: &ModuleHandle, bound: u64) -> Result<SuiteReport> {
    single(CheckId::Prop29, "prop_2_9", m, bound)
}

/// The implication chain primeful, P-radical, colon equality, M-radical.
pub fn verify_chain(m: &ModuleHandle) -> Result<SuiteReport> {
    single(CheckId::Chain, "chain", m, 0)
}

pub fn verify_thm211(g: &InstanceGenerator, trials: usize) -> Result<SuiteReport> {
    run_with_generator(Suite::Thm211, g, trials, g.config.size_bound)
}

pub fn verify_thm212_213_216(g: &InstanceGenerator, trials: usize) -> Result<SuiteReport> {
    run_with_generator(Suite::Thm212, g, trials, g.config.size_bound)
}

pub fn verify_nakayama(g: &InstanceGenerator, trials: usize) -> Result<SuiteReport> {
    run_with_generator(Suite::Nakayama, g, trials, g.config.size_bound)
}

pub fn verify_semisimple(g: &InstanceGenerator, trials: usize) -> Result<SuiteReport> {
    run_with_generator(Suite::Semisimple, g, trials, g.config.size_bound)
}
