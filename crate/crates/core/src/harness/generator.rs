//! Seeded random instances.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::Result;
use crate::fgmod::FinPresModule;
use crate::handle::ModuleHandle;
use crate::rings::{PrimeSet, Ring};
use crate::symmod::{CyclicPart, PrueferPart, Rank, SymbolicModule};

/// A raw presentation: `gens` generators and relation rows, kept unreduced
/// so that shrinking can work on the entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub ring: Ring,
    pub gens: usize,
    pub relations: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn build(&self) -> Result<FinPresModule> {
        let rows: Vec<Vec<BigInt>> = self.relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        FinPresModule::new(self.ring.clone(), self.gens, &rows)
    }
}

/// A generated module in either representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Instance {
    #[serde(rename = "finpres")]
    FinPres(Presentation),
    #[serde(rename = "symbolic")]
    Symbolic(SymbolicModule),
    /// Ideals of one ring by integer generators, for the closed-set checks.
    #[serde(rename = "ideals")]
    Ideals {
        ring: Ring,
        #[serde(with = "crate::json::dec_vec")]
        gens: Vec<BigInt>,
    },
}

impl Instance {
    pub fn handle(&self) -> Result<ModuleHandle> {
        Ok(match self {
            Instance::FinPres(p) => ModuleHandle::FinPres(p.build()?),
            Instance::Symbolic(m) => ModuleHandle::Symbolic(m.clone()),
            Instance::Ideals { .. } => {
                return Err(crate::Error::Precondition("an ideal list is not a module".into()));
            }
        })
    }

    /// The instance form of a module; presentations need entries that fit
    /// in `i64`.
    pub fn from_handle(m: &ModuleHandle) -> Result<Instance> {
        Ok(match m {
            ModuleHandle::Symbolic(s) => Instance::Symbolic(s.clone()),
            ModuleHandle::FinPres(f) => {
                let relations = f
                    .relations()
                    .generators()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>())
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| crate::Error::Unsupported("relation entries beyond 64 bits".into()))?;
                Instance::FinPres(Presentation { ring: f.ring().clone(), gens: f.gens(), relations })
            }
        })
    }

    pub fn ring(&self) -> &Ring {
        match self {
            Instance::FinPres(p) => &p.ring,
            Instance::Symbolic(m) => m.ring(),
            Instance::Ideals { ring, .. } => ring,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Z,
    ZmodN,
    ZlocP,
    Fp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub max_gens: usize,
    pub max_entry: i64,
    pub max_family: usize,
    pub prime_bound: u64,
    pub max_cyclics: usize,
    pub max_exponent: u32,
    pub size_bound: u64,
    pub max_modulus: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_gens: 4,
            max_entry: 30,
            max_family: 4,
            prime_bound: 97,
            max_cyclics: 3,
            max_exponent: 3,
            size_bound: crate::fgmod::DEFAULT_BOUND,
            max_modulus: 60,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceGenerator {
    pub seed: u64,
    pub config: GenConfig,
}

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { seed, config: GenConfig::default() }
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.config.size_bound = bound;
        self
    }

    /// The stream for one trial, independent of every other trial.
    pub fn rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }

    fn primes(&self) -> Vec<u64> {
        arith::primes_up_to(self.config.prime_bound)
    }

    fn entry(&self, rng: &mut ChaCha8Rng, scale: i64) -> i64 {
        if rng.gen_bool(0.45) {
            0
        } else {
            rng.gen_range(-scale..=scale)
        }
    }

    fn scale(&self, rng: &mut ChaCha8Rng) -> i64 {
        let m = self.config.max_entry;
        *[3.min(m), 6.min(m), 12.min(m), m].choose(rng).expect("nonempty")
    }

    fn random_rows(&self, rng: &mut ChaCha8Rng, gens: usize, rows: usize) -> Vec<Vec<i64>> {
        let scale = self.scale(rng);
        (0..rows).map(|_| (0..gens).map(|_| self.entry(rng, scale)).collect()).collect()
    }

    /// A finite module over `Z` with at most `size_bound` elements.
    pub fn finite_z(&self, rng: &mut ChaCha8Rng) -> Presentation {
        loop {
            let gens = rng.gen_range(1..=self.config.max_gens);
            let extra = rng.gen_range(0..=1usize).min(self.config.max_gens.saturating_sub(gens));
            let mut relations = self.random_rows(rng, gens, gens + extra);
            // a diagonal nudge keeps most draws full rank
            for (i, row) in relations.iter_mut().enumerate().take(gens) {
                if row[i] == 0 {
                    row[i] = rng.gen_range(1..=self.config.max_entry.min(12));
                }
            }
            let p = Presentation { ring: Ring::Integers, gens, relations };
            if self.accept(&p) {
                return p;
            }
        }
    }

    /// A finitely presented module over `Z`, possibly with free part.
    pub fn any_z(&self, rng: &mut ChaCha8Rng) -> Presentation {
        let gens = rng.gen_range(1..=self.config.max_gens);
        let rows = rng.gen_range(0..=gens);
        let relations = self.random_rows(rng, gens, rows);
        Presentation { ring: Ring::Integers, gens, relations }
    }

    pub fn modulus(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(2..=self.config.max_modulus)
    }

    /// A module over `Z/n` within the size bound.
    pub fn finite_zmod(&self, rng: &mut ChaCha8Rng, n: Option<u64>) -> Presentation {
        loop {
            let n = n.unwrap_or_else(|| self.modulus(rng));
            let ring = Ring::modulo(n).expect("n >= 2");
            let gens = rng.gen_range(1..=self.config.max_gens);
            let rows = rng.gen_range(0..=gens);
            let relations = self.random_rows(rng, gens, rows);
            let p = Presentation { ring, gens, relations };
            if self.accept(&p) {
                return p;
            }
        }
    }

    fn accept(&self, p: &Presentation) -> bool {
        p.build()
            .ok()
            .and_then(|m| m.size())
            .and_then(|s| s.to_u64())
            .is_some_and(|s| s <= self.config.size_bound)
    }

    /// A finite module over `Z` or `Z/n`, each half the time.
    pub fn finite_any(&self, rng: &mut ChaCha8Rng) -> Presentation {
        if rng.gen_bool(0.5) {
            self.finite_z(rng)
        } else {
            self.finite_zmod(rng, None)
        }
    }

    pub fn ring(&self, rng: &mut ChaCha8Rng, kind: RingKind) -> Ring {
        match kind {
            RingKind::Z => Ring::Integers,
            RingKind::ZmodN => Ring::modulo(self.modulus(rng)).expect("n >= 2"),
            RingKind::ZlocP => Ring::localized(*SMALL_PRIMES.choose(rng).expect("nonempty")).expect("prime"),
            RingKind::Fp => Ring::field(*SMALL_PRIMES.choose(rng).expect("nonempty")).expect("prime"),
        }
    }

    fn rank(&self, rng: &mut ChaCha8Rng) -> Rank {
        match rng.gen_range(0..10) {
            0..=5 => Rank::Finite(0),
            6..=8 => Rank::Finite(rng.gen_range(1..=3)),
            _ => Rank::Countable,
        }
    }

    /// A random symbolic module over `ring`, within the component limits.
    pub fn symbolic(&self, rng: &mut ChaCha8Rng, ring: &Ring) -> SymbolicModule {
        let free = self.rank(rng);
        let mut cyclics = Vec::new();
        let mut families = Vec::new();
        let mut pruefer = Vec::new();
        let count = rng.gen_range(0..=self.config.max_cyclics);
        match ring {
            Ring::PrimeField(_) => {}
            Ring::Integers => {
                let primes = self.primes();
                for _ in 0..count {
                    let p = *primes.choose(rng).expect("nonempty");
                    cyclics.push(self.cyclic(rng, p));
                }
                if rng.gen_bool(0.4) {
                    families.push(self.z_family(rng));
                }
                if rng.gen_bool(0.3) {
                    let p = *SMALL_PRIMES.choose(rng).expect("nonempty");
                    pruefer.push(PrueferPart { p: p.into(), mult: rng.gen_range(1..=2) });
                }
            }
            Ring::LocalizedAtPrime(p) => {
                let p = p.to_u64().expect("small prime");
                for _ in 0..count {
                    cyclics.push(self.cyclic(rng, p));
                }
                if rng.gen_bool(0.3) {
                    families.push(PrimeSet::Finite([ring.ideal(p)].into()));
                }
                if rng.gen_bool(0.35) {
                    pruefer.push(PrueferPart { p: p.into(), mult: rng.gen_range(1..=2) });
                }
            }
            Ring::IntegersModN(n) => {
                let factors = arith::factorize(n);
                for _ in 0..count {
                    let (p, e) = factors.choose(rng).expect("n >= 2");
                    let k = rng.gen_range(1..=(*e).min(self.config.max_exponent));
                    cyclics.push(CyclicPart { p: p.clone(), k, mult: rng.gen_range(1..=2) });
                }
                if rng.gen_bool(0.3) {
                    let members = factors.iter().filter(|_| rng.gen_bool(0.5)).map(|(p, _)| ring.ideal(BigInt::from(p.clone())));
                    families.push(PrimeSet::Finite(members.collect()));
                }
            }
        }
        SymbolicModule::new(ring.clone(), free, cyclics, families, pruefer).expect("generated within the ring rules")
    }

    fn cyclic(&self, rng: &mut ChaCha8Rng, p: u64) -> CyclicPart {
        CyclicPart { p: BigUint::from(p), k: rng.gen_range(1..=self.config.max_exponent), mult: rng.gen_range(1..=2) }
    }

    fn prime_subset(&self, rng: &mut ChaCha8Rng, max: usize) -> Vec<u64> {
        let primes = self.primes();
        let k = rng.gen_range(0..=max);
        let mut out: Vec<u64> = primes.choose_multiple(rng, k).copied().collect();
        out.sort_unstable();
        out
    }

    fn z_family(&self, rng: &mut ChaCha8Rng) -> PrimeSet {
        let z = Ring::Integers;
        let small: Vec<u64> = SMALL_PRIMES.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
        if rng.gen_bool(0.5) {
            let mut members = self.prime_subset(rng, self.config.max_family);
            if members.is_empty() {
                members.push(2);
            }
            PrimeSet::Finite(members.into_iter().map(|p| z.ideal(p)).collect())
        } else {
            PrimeSet::CofiniteMaximals { excluded: small.into_iter().map(|p| z.ideal(p)).collect() }
        }
    }

    /// Three ideal generators of a random ring.
    pub fn ideal_triple(&self, rng: &mut ChaCha8Rng) -> Instance {
        let kind = [RingKind::Z, RingKind::ZmodN, RingKind::ZlocP, RingKind::Fp].choose(rng).copied().expect("nonempty");
        let ring = self.ring(rng, kind);
        let gens = (0..3)
            .map(|_| match rng.gen_range(0..6) {
                0 => BigInt::from(0),
                1 => BigInt::from(1),
                _ => BigInt::from(rng.gen_range(-60i64..=60)),
            })
            .collect();
        Instance::Ideals { ring, gens }
    }

    /// A nonzero semisimple symbolic module: finite sums, cofinite families,
    /// and families whose exceptions are patched back by cyclic summands.
    pub fn semisimple(&self, rng: &mut ChaCha8Rng) -> SymbolicModule {
        loop {
            let kind = [RingKind::Z, RingKind::Z, RingKind::ZmodN, RingKind::ZlocP, RingKind::Fp]
                .choose(rng)
                .copied()
                .expect("nonempty");
            let m = match kind {
                RingKind::Z => self.semisimple_z(rng),
                RingKind::ZmodN => {
                    let primes: Vec<u64> = SMALL_PRIMES.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                    let n: u64 = primes.iter().product::<u64>().max(2);
                    let ring = Ring::modulo(n).expect("n >= 2");
                    let mut b = SymbolicModule::builder(ring.clone());
                    if rng.gen_bool(0.3) {
                        b = b.free(Rank::Finite(rng.gen_range(1..=2)));
                    }
                    for (p, _) in arith::factorize(&BigUint::from(n)) {
                        if rng.gen_bool(0.5) {
                            b = b.cyclic(p.to_u64().expect("small"), 1, rng.gen_range(1..=2));
                        }
                    }
                    b.build().expect("valid")
                }
                RingKind::ZlocP => {
                    let ring = self.ring(rng, RingKind::ZlocP);
                    let p = match &ring {
                        Ring::LocalizedAtPrime(p) => p.to_u64().expect("small"),
                        _ => unreachable!(),
                    };
                    let mult = rng.gen_range(1..=3);
                    SymbolicModule::builder(ring).cyclic(p, 1, mult).build().expect("valid")
                }
                RingKind::Fp => {
                    let ring = self.ring(rng, RingKind::Fp);
                    let r = if rng.gen_bool(0.2) { Rank::Countable } else { Rank::Finite(rng.gen_range(1..=3)) };
                    SymbolicModule::builder(ring).free(r).build().expect("valid")
                }
            };
            if !m.is_zero() {
                debug_assert!(m.is_semisimple());
                return m;
            }
        }
    }

    fn semisimple_z(&self, rng: &mut ChaCha8Rng) -> SymbolicModule {
        let mut b = SymbolicModule::builder(Ring::Integers);
        match rng.gen_range(0..3) {
            // finite direct sum
            0 => {
                for p in self.prime_subset(rng, 4) {
                    b = b.cyclic(p, 1, rng.gen_range(1..=2));
                }
            }
            // cofinite family
            1 => {
                let excluded = self.prime_subset(rng, 3);
                b = b.family_cofinite(&excluded);
            }
            // cofinite family with some exceptions added back
            _ => {
                let excluded = self.prime_subset(rng, 3);
                for &p in &excluded {
                    if rng.gen_bool(0.5) {
                        b = b.cyclic(p, 1, 1);
                    }
                }
                b = b.family_cofinite(&excluded);
                if rng.gen_bool(0.3) {
                    let extra = self.prime_subset(rng, 2);
                    b = b.family_finite(&extra);
                }
            }
        }
        b.build().expect("valid")
    }
}
