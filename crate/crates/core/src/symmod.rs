//! Formal direct sums
//!
//! ```text
//! M = R^r ⊕ ⊕ R/(p^k) ⊕ ⊕_{q ∈ S} R/(q) ⊕ ⊕ Z(p^∞)
//! ```
//!
//! with `r` finite or countable and `S` a finite or cofinite set of maximal
//! ideals. Every predicate is decided componentwise.
//!
//! Prime submodules. A `(q)`-prime, `q` maximal, is a proper submodule
//! containing `qM`; one exists iff `qM ≠ M`, and together they intersect to
//! `qM`. A `(0)`-prime has torsion-free quotient, so it contains every
//! torsion summand (a torsion image in a torsion-free module is zero). The
//! quotient is then a quotient of the free part; hence a `(0)`-prime exists
//! iff `r > 0`, and the torsion part `T` is the smallest one.
//!
//! The prime radical of zero, when some prime exists, is therefore
//! `⋂_{qM ≠ M} qM ∩ T = 0 ⊕ pC ⊕ 0 ⊕ D` over `Z` and `Z_(p)`: each cyclic
//! `C = R/(p^k)` keeps `pC`, family summands vanish and divisible parts `D`
//! survive. Over `Z/n` the free part keeps `rad(n) F`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cert::{at, PrimeCheck, PrimeRef, Property, PropertyCertificate, Witness};
use crate::error::{Error, Result};
use crate::fgmod::FinPresModule;
use crate::json::Dec;
use crate::rings::{self, Ideal, PrimeSet, Ring, SpecSubset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(u64),
    Countable,
}

impl Rank {
    pub fn is_zero(self) -> bool {
        self == Rank::Finite(0)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Countable => write!(f, "ω"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPart {
    pub p: BigUint,
    pub k: u32,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrueferPart {
    pub p: BigUint,
    pub mult: u64,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymbolicRepr", into = "SymbolicRepr")]
pub struct SymbolicModule {
    ring: Ring,
    free_rank: Rank,
    cyclics: Vec<CyclicPart>,
    /// Each family is `⊕_{q ∈ S} R/q` over maximal ideals `q`.
    families: Vec<PrimeSet>,
    pruefer: Vec<PrueferPart>,
}

impl fmt::Debug for SymbolicModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbolic({self})")
    }
}

impl fmt::Display for SymbolicModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match &self.ring {
            Ring::Integers => "Z".to_string(),
            r => r.to_string(),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            Rank::Finite(0) => {}
            Rank::Finite(1) => parts.push(base.clone()),
            r => parts.push(format!("{base}^{r}")),
        }
        let times = |s: String, mult: u64| if mult == 1 { s } else { format!("({s})^{mult}") };
        for c in &self.cyclics {
            let order = if c.k == 1 { c.p.to_string() } else { format!("{}^{}", c.p, c.k) };
            parts.push(times(format!("{base}/{order}"), c.mult));
        }
        for fam in &self.families {
            parts.push(match fam {
                PrimeSet::Finite(s) => s.iter().map(|q| format!("{base}/{}", q.generator())).collect::<Vec<_>>().join(" + "),
                PrimeSet::CofiniteMaximals { excluded } if excluded.is_empty() => format!("⊕_p {base}/p"),
                PrimeSet::CofiniteMaximals { excluded } => format!(
                    "⊕_(p ∉ {{{}}}) {base}/p",
                    excluded.iter().map(|q| q.generator().to_string()).collect::<Vec<_>>().join(",")
                ),
            });
        }
        for d in &self.pruefer {
            parts.push(times(format!("Z({}^∞)", d.p), d.mult));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} over {}", parts.join(" + "), self.ring)
    }
}

impl SymbolicModule {
    pub fn new(
        ring: Ring,
        free_rank: Rank,
        cyclics: Vec<CyclicPart>,
        families: Vec<PrimeSet>,
        pruefer: Vec<PrueferPart>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidModule(msg));
        if ring.is_field() && matches!(ring, Ring::PrimeField(_)) && (!cyclics.is_empty() || !families.is_empty() || !pruefer.is_empty()) {
            return bad(format!("over the field {ring} only free summands are allowed"));
        }
        for c in &cyclics {
            if c.k == 0 {
                return bad("cyclic exponent must be at least 1".into());
            }
            ring.maximal_at(&c.p).map_err(|_| Error::InvalidModule(format!("({}) is not a maximal ideal of {ring}", c.p)))?;
            if let Ring::IntegersModN(n) = &ring {
                if !(n % c.p.pow(c.k)).is_zero() {
                    return bad(format!("{}^{} does not divide {n}", c.p, c.k));
                }
            }
        }
        for fam in &families {
            match fam {
                PrimeSet::Finite(s) => {
                    if let Some(q) = s.iter().find(|q| q.ring() != &ring || !q.is_maximal()) {
                        return bad(format!("family member {q} is not a maximal ideal of {ring}"));
                    }
                }
                PrimeSet::CofiniteMaximals { excluded } => {
                    if ring != Ring::Integers {
                        return bad(format!("cofinite families need infinitely many maximal ideals; {ring} has finitely many"));
                    }
                    if let Some(q) = excluded.iter().find(|q| q.ring() != &ring || !q.is_maximal()) {
                        return bad(format!("excluded {q} is not a maximal ideal"));
                    }
                }
            }
        }
        for d in &pruefer {
            let ok = match &ring {
                Ring::Integers => arith::is_prime(&d.p),
                Ring::LocalizedAtPrime(p) => &d.p == p,
                _ => false,
            };
            if !ok {
                return bad(format!("Z({}^∞) is not a module over {ring}", d.p));
            }
        }
        let mut m = SymbolicModule { ring, free_rank, cyclics, families, pruefer };
        m.normalize();
        Ok(m)
    }

    fn normalize(&mut self) {
        self.cyclics.retain(|c| c.mult > 0);
        self.cyclics.sort();
        self.cyclics.dedup_by(|b, a| {
            let same = a.p == b.p && a.k == b.k;
            if same {
                a.mult += b.mult;
            }
            same
        });
        self.families.retain(|f| !f.is_empty());
        self.families.sort();
        self.pruefer.retain(|d| d.mult > 0);
        self.pruefer.sort();
        self.pruefer.dedup_by(|b, a| {
            let same = a.p == b.p;
            if same {
                a.mult += b.mult;
            }
            same
        });
    }

    pub fn builder(ring: Ring) -> SymbolicBuilder {
        SymbolicBuilder { ring, free: Rank::Finite(0), cyclics: Vec::new(), families: Vec::new(), pruefer: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn free_rank(&self) -> Rank {
        self.free_rank
    }

    pub fn cyclics(&self) -> &[CyclicPart] {
        &self.cyclics
    }

    pub fn families(&self) -> &[PrimeSet] {
        &self.families
    }

    pub fn pruefer(&self) -> &[PrueferPart] {
        &self.pruefer
    }

    fn has_free(&self) -> bool {
        !self.free_rank.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        !self.has_free() && self.cyclics.is_empty() && self.families.is_empty() && self.pruefer.is_empty()
    }

    fn has_infinite_family(&self) -> bool {
        self.families.iter().any(|f| !f.is_finite())
    }

    fn cyclic_primes(&self) -> BTreeSet<Ideal> {
        self.cyclics.iter().map(|c| self.ring.ideal(BigInt::from(c.p.clone()))).collect()
    }

    /// Maximal ideals `q` with a summand `R/q` (from cyclics or families).
    fn simple_support(&self) -> PrimeSet {
        let base = PrimeSet::Finite(self.cyclic_primes());
        self.families.iter().fold(base, |acc, f| acc.union(f))
    }

    /// Every maximal ideal of the ring, as a prime set.
    fn all_maximals(&self) -> PrimeSet {
        match &self.ring {
            Ring::Integers => PrimeSet::all_maximals(),
            r => PrimeSet::Finite(r.finite_spectrum().unwrap_or_default().into_iter().filter(|p| p.is_maximal()).collect()),
        }
    }

    fn check_maximal(&self, q: &Ideal) -> Result<()> {
        if q.ring() != &self.ring || !q.is_maximal() {
            return Err(Error::InvalidIdeal(format!("{q} is not a maximal ideal of {}", self.ring)));
        }
        Ok(())
    }

    /// Decides `qM ≠ M` for a maximal ideal `q`. Divisible summands and
    /// summands at other primes are fixed by `q`.
    pub fn scalar_image_proper(&self, q: &Ideal) -> Result<bool> {
        self.check_maximal(q)?;
        Ok(self.has_free() || self.simple_support().contains(q))
    }

    /// `(qM : M)`, the annihilator of `M/qM`.
    pub fn scalar_colon(&self, q: &Ideal) -> Result<Ideal> {
        Ok(if self.scalar_image_proper(q)? { q.clone() } else { self.ring.unit_ideal() })
    }

    /// Image of `P ↦ (P:M)` on prime submodules.
    pub fn realized_colons(&self) -> SpecSubset {
        let maximals = if self.has_free() { self.all_maximals() } else { self.simple_support() };
        let zero_prime = self.has_free() && self.ring.generic_prime().is_some();
        SpecSubset { ring: self.ring.clone(), zero_prime, maximals }
    }

    /// `V(Ann(M))`.
    pub fn primes_over_ann(&self) -> SpecSubset {
        rings::primes_containing(&self.ring, &ann(self)).expect("same ring")
    }

    pub fn is_primeless(&self) -> bool {
        self.realized_colons().is_empty()
    }

    /// `(√0 : M)`, with `√0 = M` when there are no prime submodules.
    pub fn radical_zero_colon(&self) -> Ideal {
        if self.is_primeless() {
            return self.ring.unit_ideal();
        }
        if self.has_free() {
            return match &self.ring {
                Ring::IntegersModN(n) => self.ring.ideal(BigInt::from(arith::squarefree_kernel(n))),
                r => r.zero_ideal(),
            };
        }
        if self.has_infinite_family() {
            return self.ring.zero_ideal();
        }
        let mut primes: BTreeSet<BigUint> = self.cyclics.iter().map(|c| c.p.clone()).collect();
        for f in &self.families {
            if let PrimeSet::Finite(s) = f {
                primes.extend(s.iter().map(|q| q.generator().clone()));
            }
        }
        self.ring.ideal(BigInt::from(primes.into_iter().product::<BigUint>()))
    }

    /// `(√(qM) : M)` for a maximal `q`: `qM` is prime when proper, and no
    /// prime contains it otherwise.
    pub fn radical_scalar_colon(&self, q: &Ideal) -> Result<Ideal> {
        self.scalar_colon(q)
    }

    /// Explicit maximal ideals over `Ann(M)` to check, and when there are
    /// infinitely many, the listed exceptions together with one
    /// representative of all the unlisted ones.
    pub fn maximals_to_check(&self) -> (Vec<Ideal>, Option<(Vec<Ideal>, Ideal)>) {
        let over = self.primes_over_ann().maximals;
        match over {
            PrimeSet::Finite(s) => (s.into_iter().collect(), None),
            PrimeSet::CofiniteMaximals { .. } => {
                let mut named: BTreeSet<Ideal> = self.cyclic_primes();
                for f in &self.families {
                    match f {
                        PrimeSet::Finite(s) => named.extend(s.iter().cloned()),
                        PrimeSet::CofiniteMaximals { excluded } => named.extend(excluded.iter().cloned()),
                    }
                }
                named.extend(self.pruefer.iter().map(|d| self.ring.ideal(BigInt::from(d.p.clone()))));
                let listed: Vec<Ideal> = named.into_iter().collect();
                let top = listed.iter().map(|q| q.generator().clone()).max().unwrap_or_else(BigUint::one);
                let rep = self.ring.ideal(BigInt::from(arith::next_prime(&top)));
                (listed.clone(), Some((listed, rep)))
            }
        }
    }

    fn scalar_witness(&self, q: &Ideal, proper: bool) -> Witness {
        if proper {
            Witness::Component { description: format!("{q}M, the kernel of M -> M/{q}M") }
        } else {
            Witness::ScalarImageFull
        }
    }

    fn maximal_checks(&self, colon_witness: bool) -> Vec<PrimeCheck> {
        let (listed, rest) = self.maximals_to_check();
        let mut out = Vec::new();
        let entry = |q: &Ideal| -> (bool, Witness) {
            let proper = self.scalar_image_proper(q).expect("maximal");
            let w = if colon_witness {
                Witness::Colon { expected: q.clone(), got: self.radical_scalar_colon(q).expect("maximal") }
            } else {
                self.scalar_witness(q, proper)
            };
            (proper, w)
        };
        for q in &listed {
            let (holds, w) = entry(q);
            out.push(at(q, holds, w));
        }
        if let Some((excluded, rep)) = rest {
            let (holds, _) = entry(&rep);
            let reason = if holds {
                "qM is proper for every unlisted q: free summand or cofinite family"
            } else {
                "qM = M for every unlisted q: no summand R/q"
            };
            out.push(PrimeCheck {
                prime: PrimeRef::OtherMaximals { excluded },
                holds,
                witness: Witness::Structural { reason: reason.into() },
            });
        }
        out
    }

    /// The zero ideal when it lies over `Ann(M)` and is not maximal.
    fn generic_over_ann(&self) -> Option<Ideal> {
        self.ring.generic_prime().filter(|z| ann(self) == *z)
    }
}

pub struct SymbolicBuilder {
    ring: Ring,
    free: Rank,
    cyclics: Vec<CyclicPart>,
    families: Vec<PrimeSet>,
    pruefer: Vec<PrueferPart>,
}

impl SymbolicBuilder {
    pub fn free(mut self, r: Rank) -> Self {
        self.free = r;
        self
    }

    pub fn cyclic(mut self, p: u64, k: u32, mult: u64) -> Self {
        self.cyclics.push(CyclicPart { p: BigUint::from(p), k, mult });
        self
    }

    pub fn family_finite(mut self, primes: &[u64]) -> Self {
        let ring = self.ring.clone();
        self.families.push(PrimeSet::Finite(primes.iter().map(|&p| ring.ideal(p)).collect()));
        self
    }

    pub fn family_cofinite(mut self, excluded: &[u64]) -> Self {
        let ring = self.ring.clone();
        self.families.push(PrimeSet::CofiniteMaximals { excluded: excluded.iter().map(|&p| ring.ideal(p)).collect() });
        self
    }

    pub fn pruefer(mut self, p: u64, mult: u64) -> Self {
        self.pruefer.push(PrueferPart { p: BigUint::from(p), mult });
        self
    }

    pub fn build(self) -> Result<SymbolicModule> {
        SymbolicModule::new(self.ring, self.free, self.cyclics, self.families, self.pruefer)
    }
}

pub fn ann(m: &SymbolicModule) -> Ideal {
    if m.is_zero() {
        return m.ring.unit_ideal();
    }
    if m.has_free() || !m.pruefer.is_empty() || m.has_infinite_family() {
        return m.ring.zero_ideal();
    }
    let mut g = BigUint::one();
    for c in &m.cyclics {
        g = g.lcm(&c.p.pow(c.k));
    }
    for f in &m.families {
        if let PrimeSet::Finite(s) = f {
            for q in s {
                g = g.lcm(q.generator());
            }
        }
    }
    m.ring.ideal(BigInt::from(g))
}

pub fn check_m_radical(m: &SymbolicModule) -> PropertyCertificate {
    PropertyCertificate::new(Property::MRadical, m.maximal_checks(false))
}

pub fn check_p_radical(m: &SymbolicModule) -> PropertyCertificate {
    let mut checks = m.maximal_checks(true);
    if let Some(z) = m.generic_over_ann() {
        let got = m.radical_zero_colon();
        checks.push(at(&z, got == z, Witness::Colon { expected: z.clone(), got }));
    }
    PropertyCertificate::new(Property::PRadical, checks)
}

pub fn check_primeful(m: &SymbolicModule) -> PropertyCertificate {
    let mut checks = m.maximal_checks(false);
    for c in checks.iter_mut() {
        if !c.holds {
            c.witness = Witness::NotRealized;
        }
    }
    if let Some(z) = m.generic_over_ann() {
        let realized = m.realized_colons().zero_prime;
        let w = if realized {
            Witness::Component { description: "the torsion part; the quotient is free".into() }
        } else {
            Witness::NotRealized
        };
        checks.push(at(&z, realized, w));
    }
    PropertyCertificate::new(Property::Primeful, checks)
}

impl SymbolicModule {
    /// Semisimple: a direct sum of simple modules `R/q`. Free summands
    /// qualify only when `R` itself is semisimple (a field, or `Z/n` with
    /// `n` squarefree).
    pub fn is_semisimple(&self) -> bool {
        let free_ok = !self.has_free()
            || match &self.ring {
                Ring::PrimeField(_) => true,
                Ring::IntegersModN(n) => arith::is_squarefree(n),
                _ => false,
            };
        free_ok && self.pruefer.is_empty() && self.cyclics.iter().all(|c| c.k == 1)
    }

    pub fn semisimple_view(&self) -> Option<SemisimpleView> {
        if !self.is_semisimple() {
            return None;
        }
        let support = if self.has_free() { self.all_maximals().union(&self.simple_support()) } else { self.simple_support() };
        Some(SemisimpleView { support })
    }
}

/// The maximal ideals `q` for which `R/q` is a summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleView {
    pub support: PrimeSet,
}

pub fn is_full_semisimple(m: &SymbolicModule) -> Result<bool> {
    let view = m
        .semisimple_view()
        .ok_or_else(|| Error::Precondition(format!("{m} is not semisimple")))?;
    Ok(m.primes_over_ann().maximals.is_subset(&view.support))
}

pub fn is_homogeneous_semisimple(m: &SymbolicModule) -> bool {
    m.is_semisimple() && ann(m).is_maximal()
}

/// `(0)` is a prime submodule: `Ann(M)` is prime and `M` is torsion-free
/// over `R/Ann(M)`.
pub fn is_prime_module(m: &SymbolicModule) -> bool {
    if m.is_zero() {
        return false;
    }
    let a = ann(m);
    if a.is_maximal() {
        return true;
    }
    let torsion_free = m.cyclics.is_empty() && m.families.is_empty() && m.pruefer.is_empty();
    a.is_zero_ideal() && a.is_prime() && torsion_free
}

/// `⊕ R/P_i` over the maximal ideals above a prime `P` that is their
/// intersection. Over `Z` with `P = (0)` this is `⊕_p Z/p`.
pub fn construct_prop27(ring: &Ring) -> Result<SymbolicModule> {
    match ring {
        Ring::Integers => SymbolicModule::builder(ring.clone()).family_cofinite(&[]).build(),
        _ => Err(Error::Precondition(format!(
            "no prime of {ring} is an intersection of strictly larger primes"
        ))),
    }
}

/// `S/(p) ⊕ Z(p^∞)` over a non-Hilbert `Z_(p)`.
pub fn construct_thm211(ring: &Ring) -> Result<SymbolicModule> {
    match ring {
        Ring::LocalizedAtPrime(p) => {
            SymbolicModule::new(
                ring.clone(),
                Rank::Finite(0),
                vec![CyclicPart { p: p.clone(), k: 1, mult: 1 }],
                Vec::new(),
                vec![PrueferPart { p: p.clone(), mult: 1 }],
            )
        }
        _ => Err(Error::Precondition(format!("{ring} is a Hilbert ring"))),
    }
}

/// A finite stand-in for a symbolic module.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub module: FinPresModule,
    /// Set when something was cut: a capped rank or multiplicity, a
    /// family member above the bound, or a Prüfer part replaced by
    /// `Z/p^cap` (which, unlike `Z(p^∞)`, has prime submodules).
    pub gaps: Vec<String>,
}

pub fn truncate(m: &SymbolicModule, prime_bound: u64, rank_cap: u64) -> Result<Truncation> {
    if !matches!(m.ring, Ring::Integers | Ring::IntegersModN(_)) {
        return Err(Error::Unsupported(format!("truncation over {}", m.ring)));
    }
    let bound = BigUint::from(prime_bound);
    let mut gaps = Vec::new();
    let free = match m.free_rank {
        Rank::Finite(r) if r <= rank_cap => r,
        r => {
            gaps.push(format!("free rank {r} capped at {rank_cap}"));
            rank_cap
        }
    };
    let mut torsion: Vec<BigUint> = Vec::new();
    let mut push = |order: BigUint, mult: u64, gaps: &mut Vec<String>| {
        if mult > rank_cap {
            gaps.push(format!("multiplicity {mult} of Z/{order} capped at {rank_cap}"));
        }
        for _ in 0..mult.min(rank_cap) {
            torsion.push(order.clone());
        }
    };
    for c in &m.cyclics {
        if c.p <= bound {
            push(c.p.pow(c.k), c.mult, &mut gaps);
        } else {
            gaps.push(format!("Z/{}^{} dropped above the prime bound", c.p, c.k));
        }
    }
    for f in &m.families {
        let members: Vec<BigUint> = match f {
            PrimeSet::Finite(s) => {
                if s.iter().any(|q| q.generator() > &bound) {
                    gaps.push("family members above the prime bound dropped".into());
                }
                s.iter().map(|q| q.generator().clone()).filter(|q| q <= &bound).collect()
            }
            PrimeSet::CofiniteMaximals { excluded } => {
                gaps.push(format!("cofinite family cut at {prime_bound}"));
                arith::primes_up_to(prime_bound)
                    .into_iter()
                    .map(BigUint::from)
                    .filter(|q| !excluded.contains(&m.ring.ideal(BigInt::from(q.clone()))))
                    .collect()
            }
        };
        for q in members {
            push(q, 1, &mut gaps);
        }
    }
    for d in &m.pruefer {
        gaps.push(format!("Z({}^∞) replaced by Z/{}^{rank_cap}", d.p, d.p));
        push(d.p.pow(rank_cap as u32), d.mult, &mut gaps);
    }
    let gens = free as usize + torsion.len();
    let rels: Vec<Vec<BigInt>> = torsion
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut v = vec![BigInt::zero(); gens];
            v[free as usize + i] = BigInt::from(d.clone());
            v
        })
        .collect();
    Ok(Truncation { module: FinPresModule::new(m.ring.clone(), gens, &rels)?, gaps })
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct SymbolicRepr {
    ring: Ring,
    #[serde(default = "zero_rank")]
    free_rank: RankRepr,
    #[serde(default)]
    cyclics: Vec<CyclicRepr>,
    #[serde(default)]
    families: Vec<FamilyRepr>,
    #[serde(default)]
    pruefer: Vec<PrueferRepr>,
}

fn zero_rank() -> RankRepr {
    RankRepr::Count(0)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RankRepr {
    Count(u64),
    Word(String),
}

#[derive(Serialize, Deserialize)]
struct CyclicRepr {
    p: Dec<BigUint>,
    k: u32,
    #[serde(default = "one")]
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct PrueferRepr {
    p: Dec<BigUint>,
    #[serde(default = "one")]
    mult: u64,
}

fn one() -> u64 {
    1
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    primes: PrimesRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum PrimesRepr {
    CofiniteExcept(Vec<Dec<BigUint>>),
    Finite(Vec<Dec<BigUint>>),
}

impl TryFrom<SymbolicRepr> for SymbolicModule {
    type Error = Error;

    fn try_from(r: SymbolicRepr) -> Result<Self> {
        let parse_err = |field: &str, message: String| Error::Parse { field: field.into(), message };
        let free_rank = match r.free_rank {
            RankRepr::Count(n) => Rank::Finite(n),
            RankRepr::Word(w) if w == "countable" => Rank::Countable,
            RankRepr::Word(w) => Rank::Finite(
                w.parse().map_err(|_| parse_err("free_rank", format!("`{w}` is neither a count nor \"countable\"")))?,
            ),
        };
        let ring = r.ring;
        let maximal = |p: &BigUint| -> Result<Ideal> {
            ring.maximal_at(p).map_err(|e| parse_err("families", e.to_string()))
        };
        let mut families = Vec::new();
        for f in r.families {
            families.push(match f.primes {
                PrimesRepr::Finite(ps) => PrimeSet::Finite(ps.iter().map(|p| maximal(&p.0)).collect::<Result<_>>()?),
                PrimesRepr::CofiniteExcept(ps) => {
                    PrimeSet::CofiniteMaximals { excluded: ps.iter().map(|p| maximal(&p.0)).collect::<Result<_>>()? }
                }
            });
        }
        SymbolicModule::new(
            ring.clone(),
            free_rank,
            r.cyclics.into_iter().map(|c| CyclicPart { p: c.p.0, k: c.k, mult: c.mult }).collect(),
            families,
            r.pruefer.into_iter().map(|d| PrueferPart { p: d.p.0, mult: d.mult }).collect(),
        )
    }
}

impl From<SymbolicModule> for SymbolicRepr {
    fn from(m: SymbolicModule) -> Self {
        let gens = |s: &BTreeSet<Ideal>| s.iter().map(|q| Dec(q.generator().clone())).collect();
        SymbolicRepr {
            ring: m.ring,
            free_rank: match m.free_rank {
                Rank::Finite(n) => RankRepr::Count(n),
                Rank::Countable => RankRepr::Word("countable".into()),
            },
            cyclics: m.cyclics.into_iter().map(|c| CyclicRepr { p: Dec(c.p), k: c.k, mult: c.mult }).collect(),
            families: m
                .families
                .iter()
                .map(|f| FamilyRepr {
                    primes: match f {
                        PrimeSet::Finite(s) => PrimesRepr::Finite(gens(s)),
                        PrimeSet::CofiniteMaximals { excluded } => PrimesRepr::CofiniteExcept(gens(excluded)),
                    },
                })
                .collect(),
            pruefer: m.pruefer.into_iter().map(|d| PrueferRepr { p: Dec(d.p), mult: d.mult }).collect(),
        }
    }
}
