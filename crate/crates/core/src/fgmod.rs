//! Finitely presented modules over `Z` and `Z/n`.
//!
//! A module is `Z^n / R` for a relation lattice `R`; over `Z/n` the lattice
//! always contains `n Z^n`, so the same integer kernel serves both rings.
//! A submodule `N` is an intermediate lattice `R ⊆ L ⊆ Z^n`.
//!
//! The prime radical is computed in closed form. Write `A = Z^n / L ≅ Z^r ⊕ T`
//! with `e` the exponent of `T`. A `(p)`-prime over `N` is a proper
//! submodule containing `N + pM`, and those intersect to exactly `N + pM`.
//! A `(0)`-prime over `N` has torsion-free quotient, so it contains the
//! saturation `sat(L)`, which is itself prime when `r > 0`. Intersecting
//! `N + pM` over every prime `p` gives `sat(L) ∩ ⋂_{p | e} (N + pM)`, and
//! when `r = 0` the primes not dividing `e` give `pM = M`. Hence
//!
//! ```text
//! √N = sat(L) ∩ ⋂_{p | e} (L + p Z^n),   √M = M.
//! ```
//!
//! The enumeration oracles below check this against brute force.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cert::{at, PrimeCheck, PrimeRef, Property, PropertyCertificate, Witness};
use crate::error::{Error, Result};
use crate::exactlin::{snf, IntMatrix, IntegerLattice};
use crate::json;
use crate::rings::{Ideal, PrimeSet, Ring, SpecSubset};

pub const DEFAULT_BOUND: u64 = 20_000;

/// Enumeration runs in machine integers; bounds above this are refused.
pub const MAX_BOUND: u64 = 10_000_000;

/// Invariants of `Z^n / L`.
#[derive(Clone, Debug)]
pub struct Structure {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigUint>,
    /// Exponent of the torsion part; one when there is none.
    pub exponent: BigUint,
    /// Smith coordinate of each torsion factor.
    positions: Vec<usize>,
    /// Columns carry Smith coordinates back to the ambient ones.
    left_inverse: IntMatrix,
}

impl Structure {
    fn of(l: &IntegerLattice) -> Structure {
        let n = l.ambient_rank();
        let s = snf(l.basis());
        let mut torsion = Vec::new();
        let mut positions = Vec::new();
        for (i, d) in s.invariant_factors.iter().enumerate() {
            if !d.is_zero() && !d.is_one() {
                torsion.push(d.magnitude().clone());
                positions.push(i);
            }
        }
        let exponent = torsion.last().cloned().unwrap_or_else(BigUint::one);
        Structure { free_rank: n - l.rank(), torsion, exponent, positions, left_inverse: s.left_inverse }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn size(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

#[derive(Debug)]
struct ModuleData {
    ring: Ring,
    gens: usize,
    relations: IntegerLattice,
    structure: Structure,
}

/// `Z^gens / relations`, cheap to clone.
#[derive(Clone)]
pub struct FinPresModule(Arc<ModuleData>);

impl PartialEq for FinPresModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring && self.0.gens == other.0.gens && self.0.relations == other.0.relations)
    }
}

impl Eq for FinPresModule {}

impl fmt::Debug for FinPresModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinPres({}, {:?})", self.0.ring, self.0.relations)
    }
}

impl fmt::Display for FinPresModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0.structure;
        let mut parts: Vec<String> = Vec::new();
        let base = match &self.0.ring {
            Ring::IntegersModN(n) => format!("Z/{n}"),
            _ => "Z".to_string(),
        };
        match s.free_rank {
            0 => {}
            1 => parts.push(base.clone()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(s.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} over {}", parts.join(" + "), self.0.ring)
    }
}

impl FinPresModule {
    /// `relations` are relation vectors, one per row.
    pub fn new(ring: Ring, gens: usize, relations: &[Vec<BigInt>]) -> Result<Self> {
        let mut rels = relations.to_vec();
        match &ring {
            Ring::Integers => {}
            Ring::IntegersModN(n) => {
                for i in 0..gens {
                    let mut v = vec![BigInt::zero(); gens];
                    v[i] = BigInt::from(n.clone());
                    rels.push(v);
                }
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "finitely presented modules over {other}; use the symbolic form"
                )))
            }
        }
        let relations = IntegerLattice::from_generators(gens, &rels)?;
        Ok(Self::from_lattice(ring, relations))
    }

    fn from_lattice(ring: Ring, relations: IntegerLattice) -> Self {
        let structure = Structure::of(&relations);
        FinPresModule(Arc::new(ModuleData { ring, gens: relations.ambient_rank(), relations, structure }))
    }

    pub fn over_integers(gens: usize, relations: &[Vec<i64>]) -> Result<Self> {
        let rels: Vec<Vec<BigInt>> = relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::new(Ring::Integers, gens, &rels)
    }

    /// `R^free ⊕ R/d_1 ⊕ ... ⊕ R/d_k`.
    pub fn from_invariants(ring: Ring, free: usize, torsion: &[u64]) -> Result<Self> {
        let gens = free + torsion.len();
        let rels: Vec<Vec<BigInt>> = torsion
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut v = vec![BigInt::zero(); gens];
                v[free + i] = BigInt::from(d);
                v
            })
            .collect();
        Self::new(ring, gens, &rels)
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn gens(&self) -> usize {
        self.0.gens
    }

    pub fn relations(&self) -> &IntegerLattice {
        &self.0.relations
    }

    pub fn structure(&self) -> &Structure {
        &self.0.structure
    }

    pub fn free_rank(&self) -> usize {
        self.0.structure.free_rank
    }

    pub fn torsion_invariants(&self) -> &[BigUint] {
        &self.0.structure.torsion
    }

    pub fn exponent(&self) -> &BigUint {
        &self.0.structure.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.0.structure.is_zero()
    }

    pub fn size(&self) -> Option<BigUint> {
        self.0.structure.size()
    }

    pub fn is_cyclic(&self) -> bool {
        self.free_rank() + self.torsion_invariants().len() <= 1
    }

    pub fn whole(&self) -> Submodule {
        Submodule { parent: self.clone(), lattice: IntegerLattice::full(self.gens()) }
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule { parent: self.clone(), lattice: self.0.relations.clone() }
    }

    /// The submodule generated by the images of `gens`.
    pub fn submodule(&self, gens: &[Vec<BigInt>]) -> Result<Submodule> {
        let l = IntegerLattice::from_generators(self.gens(), gens)?;
        Ok(Submodule { parent: self.clone(), lattice: l.sum(&self.0.relations)? })
    }

    /// Wraps a lattice that must contain the relations.
    pub fn submodule_from_lattice(&self, lattice: IntegerLattice) -> Result<Submodule> {
        if lattice.ambient_rank() != self.gens() {
            return Err(Error::Dimension(format!("lattice in Z^{} for a module on {} generators", lattice.ambient_rank(), self.gens())));
        }
        if !lattice.contains_lattice(&self.0.relations)? {
            return Err(Error::NotASubmodule(format!("{lattice:?}")));
        }
        Ok(Submodule { parent: self.clone(), lattice })
    }

    /// `kM` for an integer `k`.
    pub fn scalar_submodule(&self, k: &BigUint) -> Submodule {
        let scaled = IntegerLattice::scaled(self.gens(), &BigInt::from(k.clone()));
        Submodule { parent: self.clone(), lattice: self.0.relations.sum(&scaled).expect("same ambient") }
    }

    /// `IM`.
    pub fn ideal_times(&self, i: &Ideal) -> Result<Submodule> {
        self.check_ideal(i)?;
        Ok(self.scalar_submodule(i.generator()))
    }

    /// `M/N` as a module on the same generators.
    pub fn quotient(&self, n: &Submodule) -> FinPresModule {
        Self::from_lattice(self.ring().clone(), n.lattice.clone())
    }

    pub(crate) fn ring_ideal(&self, c: &BigUint) -> Ideal {
        self.ring().ideal(BigInt::from(c.clone()))
    }

    fn check_ideal(&self, i: &Ideal) -> Result<()> {
        if i.ring() != self.ring() {
            return Err(Error::RingMismatch(format!("ideal of {} for a module over {}", i.ring(), self.ring())));
        }
        Ok(())
    }

    fn finite_size(&self, bound: u64) -> Result<u64> {
        if bound > MAX_BOUND {
            return Err(Error::Precondition(format!("enumeration bound {bound} exceeds {MAX_BOUND}")));
        }
        let size = self.size().ok_or_else(|| Error::Precondition(format!("{self} is infinite")))?;
        match size.to_u64() {
            Some(s) if s <= bound => Ok(s),
            _ => Err(Error::TooLarge { size: size.to_string(), bound }),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    parent: FinPresModule,
    lattice: IntegerLattice,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule({:?})", self.lattice)
    }
}

impl Submodule {
    pub fn parent(&self) -> &FinPresModule {
        &self.parent
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    /// Canonical ambient generators (the Hermite basis).
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        self.lattice.generators()
    }

    pub fn is_whole(&self) -> bool {
        self.lattice.is_full()
    }

    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.same_parent(other)?;
        self.lattice.contains_lattice(&other.lattice)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.same_parent(other)?;
        Ok(Submodule { parent: self.parent.clone(), lattice: self.lattice.sum(&other.lattice)? })
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.same_parent(other)?;
        Ok(Submodule { parent: self.parent.clone(), lattice: self.lattice.intersect(&other.lattice)? })
    }

    pub fn quotient_structure(&self) -> Structure {
        Structure::of(&self.lattice)
    }

    fn same_parent(&self, other: &Submodule) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::Dimension("submodules of different modules".into()));
        }
        Ok(())
    }

    fn witness(&self) -> Witness {
        Witness::PrimeSubmodule { gens: self.generators() }
    }
}

/// Ambient generators of a submodule, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleSpec {
    #[serde(with = "json::dec_vec2")]
    pub gens: Vec<Vec<BigInt>>,
}

pub fn ann(m: &FinPresModule) -> Ideal {
    if m.free_rank() > 0 {
        m.ring().zero_ideal()
    } else {
        m.ring_ideal(m.exponent())
    }
}

/// `(N:M)` as a natural number: the exponent of `M/N`, or zero when `M/N`
/// has positive rank.
fn colon_integer(n: &Submodule) -> BigUint {
    let s = n.quotient_structure();
    if s.free_rank > 0 {
        BigUint::zero()
    } else {
        s.exponent
    }
}

pub fn colon(n: &Submodule) -> Ideal {
    n.parent.ring_ideal(&colon_integer(n))
}

/// `Some((N:M))` when `N` is prime. `M/N` is then a vector space over
/// `Z/p` when the colon is `(p)`, and torsion-free when it is `(0)`.
pub fn is_prime_submodule(n: &Submodule) -> Option<Ideal> {
    if n.is_whole() {
        return None;
    }
    let c = colon_integer(n);
    let prime = if c.is_zero() { n.lattice.is_saturated() } else { arith::is_prime(&c) };
    prime.then(|| n.parent.ring_ideal(&c))
}

pub fn prime_radical(n: &Submodule) -> Submodule {
    if n.is_whole() {
        return n.clone();
    }
    let s = n.quotient_structure();
    let dim = n.parent.gens();
    let mut acc = n.lattice.saturate();
    for p in arith::prime_divisors(&s.exponent) {
        let term = n.lattice.sum(&IntegerLattice::scaled(dim, &BigInt::from(p))).expect("same ambient");
        acc = acc.intersect(&term).expect("same ambient");
    }
    Submodule { parent: n.parent.clone(), lattice: acc }
}

/// Primes of `R` lying over `Ann(M)`, split into the explicitly listed ones
/// and whether every other maximal ideal also lies over it.
struct PrimesOver {
    listed: Vec<Ideal>,
    all_other_maximals: bool,
    zero: Option<Ideal>,
}

fn primes_over_ann(m: &FinPresModule) -> PrimesOver {
    let r = m.ring();
    let listed = arith::prime_divisors(m.exponent()).into_iter().map(|p| m.ring_ideal(&p)).collect();
    let free = m.free_rank() > 0;
    PrimesOver { listed, all_other_maximals: free, zero: free.then(|| r.zero_ideal()) }
}

fn other_maximals(listed: &[Ideal], holds: bool, reason: &str) -> PrimeCheck {
    PrimeCheck {
        prime: PrimeRef::OtherMaximals { excluded: listed.to_vec() },
        holds,
        witness: Witness::Structural { reason: reason.to_string() },
    }
}

/// `(√(PM) : M) = P` at every prime `P ⊇ Ann(M)`.
pub fn check_p_radical(m: &FinPresModule) -> PropertyCertificate {
    let over = primes_over_ann(m);
    let mut checks = Vec::new();
    for p in &over.listed {
        let rad = prime_radical(&m.scalar_submodule(p.generator()));
        let got = colon(&rad);
        checks.push(at(p, &got == p, Witness::Colon { expected: p.clone(), got }));
    }
    if over.all_other_maximals {
        checks.push(other_maximals(&over.listed, true, "pM is a proper prime submodule with colon (p): positive free rank"));
    }
    if let Some(z) = &over.zero {
        let got = colon(&prime_radical(&m.zero_submodule()));
        checks.push(at(z, &got == z, Witness::Colon { expected: z.clone(), got }));
    }
    PropertyCertificate::new(Property::PRadical, checks)
}

/// `pM ≠ M` at every maximal ideal over `Ann(M)`.
pub fn check_m_radical(m: &FinPresModule) -> PropertyCertificate {
    let over = primes_over_ann(m);
    let mut checks = Vec::new();
    for p in &over.listed {
        let pm = m.scalar_submodule(p.generator());
        let proper = !pm.is_whole();
        let w = if proper { pm.witness() } else { Witness::ScalarImageFull };
        checks.push(at(p, proper, w));
    }
    if over.all_other_maximals {
        checks.push(other_maximals(&over.listed, true, "pM is proper: positive free rank"));
    }
    PropertyCertificate::new(Property::MRadical, checks)
}

/// A prime submodule over every prime containing `Ann(M)`.
pub fn check_primeful(m: &FinPresModule) -> PropertyCertificate {
    let over = primes_over_ann(m);
    let mut checks = Vec::new();
    for p in &over.listed {
        let pm = m.scalar_submodule(p.generator());
        match is_prime_submodule(&pm) {
            Some(c) if &c == p => checks.push(at(p, true, pm.witness())),
            _ => checks.push(at(p, false, Witness::NotRealized)),
        }
    }
    if over.all_other_maximals {
        checks.push(other_maximals(&over.listed, true, "pM is prime with colon (p): positive free rank"));
    }
    if let Some(z) = &over.zero {
        let sat = m.submodule_from_lattice(m.relations().saturate()).expect("saturation contains the relations");
        match is_prime_submodule(&sat) {
            Some(c) if &c == z => checks.push(at(z, true, sat.witness())),
            _ => checks.push(at(z, false, Witness::NotRealized)),
        }
    }
    PropertyCertificate::new(Property::Primeful, checks)
}

/// Image of `P ↦ (P:M)`.
pub fn realized_colons(m: &FinPresModule) -> SpecSubset {
    let over = primes_over_ann(m);
    let listed: std::collections::BTreeSet<Ideal> = over.listed.into_iter().collect();
    let maximals = if over.all_other_maximals {
        PrimeSet::all_maximals()
    } else {
        PrimeSet::Finite(listed)
    };
    SpecSubset { ring: m.ring().clone(), zero_prime: over.zero.is_some(), maximals }
}

/// Every submodule is `IM` for an ideal `I`. Cyclic modules always are;
/// finite ones are decided by enumeration.
pub fn is_multiplication(m: &FinPresModule, bound: u64) -> Result<bool> {
    if m.is_cyclic() {
        return Ok(true);
    }
    if m.free_rank() > 0 {
        return Err(Error::Unsupported(format!("multiplication test for the infinite non-cyclic module {m}")));
    }
    for n in enumerate_submodules(m, bound)? {
        if m.scalar_submodule(&colon_integer(&n)) != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of `√(IM) = √I · M`.
pub fn radical_formula_sides(m: &FinPresModule, i: &Ideal) -> Result<(Submodule, Submodule)> {
    m.check_ideal(i)?;
    if !i.contains(&ann(m))? {
        return Err(Error::Precondition(format!("{i} does not contain Ann(M) = {}", ann(m))));
    }
    let left = prime_radical(&m.ideal_times(i)?);
    let right = m.ideal_times(&crate::rings::radical_ideal(m.ring(), i)?)?;
    Ok((left, right))
}

pub fn check_radical_formula(m: &FinPresModule, i: &Ideal) -> Result<bool> {
    let (l, r) = radical_formula_sides(m, i)?;
    Ok(l == r)
}

// ---------------------------------------------------------------------------
// enumeration

/// Every submodule of a finite module, each exactly once.
pub fn enumerate_submodules(m: &FinPresModule, bound: u64) -> Result<Vec<Submodule>> {
    m.finite_size(bound)?;
    let s = m.structure();
    let d: Vec<i64> = s.torsion.iter().map(|x| x.to_i64().expect("bounded")).collect();
    let n = m.gens();
    let trivial: Vec<Vec<BigInt>> =
        (0..n).filter(|i| !s.positions.contains(i)).map(|i| s.left_inverse.column(i)).collect();
    let mut out = Vec::new();
    for cols in smith_sublattices(&d) {
        let mut gens = trivial.clone();
        for c in cols {
            let mut y = vec![BigInt::zero(); n];
            for (k, &pos) in s.positions.iter().enumerate() {
                y[pos] = BigInt::from(c[k]);
            }
            gens.push(s.left_inverse.mul_vec(&y)?);
        }
        out.push(Submodule { parent: m.clone(), lattice: IntegerLattice::from_generators(n, &gens)? });
    }
    Ok(out)
}

/// Lattices between `⊕ d_i Z` and `Z^t`, as triangular bases: column `j`
/// is supported on rows `0..=j` with positive entry `h_j | d_j` at row `j`,
/// and rows above hold canonical residues modulo the earlier columns.
fn smith_sublattices(d: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let t = d.len();
    let mut partial: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for j in 0..t {
        let mut next = Vec::new();
        let divs = arith::divisors(&BigUint::from(d[j] as u64));
        for cols in &partial {
            let h: Vec<i64> = (0..j).map(|i| cols[i][i]).collect();
            for dv in &divs {
                let hj = dv.to_i64().expect("bounded");
                let mult = d[j] / hj;
                let mut a = vec![0i64; j];
                loop {
                    let scaled: Vec<i64> = a.iter().map(|x| x * mult).collect();
                    if triangular_contains(cols, &scaled) {
                        let mut col = vec![0i64; t];
                        col[..j].copy_from_slice(&a);
                        col[j] = hj;
                        let mut c2 = cols.clone();
                        c2.push(col);
                        next.push(c2);
                    }
                    if !mixed_radix_step(&mut a, &h) {
                        break;
                    }
                }
            }
        }
        partial = next;
    }
    partial
}

/// `v ∈ span(cols)` for a triangular basis covering `v`'s coordinates.
fn triangular_contains(cols: &[Vec<i64>], v: &[i64]) -> bool {
    let mut w = v.to_vec();
    for i in (0..w.len()).rev() {
        let h = cols[i][i];
        if w[i] % h != 0 {
            return false;
        }
        let q = w[i] / h;
        if q != 0 {
            for (k, x) in w.iter_mut().enumerate().take(i + 1) {
                *x -= q * cols[i][k];
            }
        }
    }
    true
}

/// Advances `a` through `∏ [0, h_i)`; false after the last element.
fn mixed_radix_step(a: &mut [i64], h: &[i64]) -> bool {
    for i in 0..a.len() {
        a[i] += 1;
        if a[i] < h[i] {
            return true;
        }
        a[i] = 0;
    }
    false
}

/// `M/N` in the coordinates of the Hermite basis of `L`: elements are the
/// box `∏ [0, h_i)` and reduction runs in machine integers.
struct HermiteQuotient {
    cols: Vec<Vec<i64>>,
    h: Vec<i64>,
}

impl HermiteQuotient {
    fn new(l: &IntegerLattice) -> HermiteQuotient {
        let n = l.ambient_rank();
        assert_eq!(l.rank(), n, "finite quotient");
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| l.basis().column(j).iter().map(|x| x.to_i64().expect("bounded")).collect())
            .collect();
        let h = (0..n).map(|j| cols[j][j]).collect();
        HermiteQuotient { cols, h }
    }

    fn is_zero(&self, v: &[i64]) -> bool {
        triangular_contains(&self.cols, v)
    }

    fn order(&self, v: &[i64]) -> i64 {
        let mut k = 1;
        let mut w = v.to_vec();
        while !self.is_zero(&w) {
            k += 1;
            for (x, y) in w.iter_mut().zip(v) {
                *x += y;
            }
        }
        k
    }
}

/// Decides primality straight from the definition on a finite module:
/// `N` is proper and `r m ∈ N` forces `m ∈ N` or `rM ⊆ N`. Returns the
/// colon when prime.
///
/// With `f` the exponent of `M/N`, a violation at any `r` gives one at
/// `gcd(r, f)`, so only the divisors of `f` are tried.
pub fn is_prime_oracle(n: &Submodule, bound: u64) -> Result<Option<BigUint>> {
    n.parent.finite_size(bound)?;
    if n.is_whole() {
        return Ok(None);
    }
    let q = HermiteQuotient::new(&n.lattice);
    let dim = q.h.len();
    let mut f = 1i64;
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        f = f.lcm(&q.order(&e));
    }
    for r in (1..f).filter(|r| f % r == 0) {
        let mut m = vec![0i64; dim];
        while mixed_radix_step(&mut m, &q.h) {
            let rm: Vec<i64> = m.iter().map(|x| x * r).collect();
            if q.is_zero(&rm) {
                return Ok(None);
            }
        }
    }
    Ok(Some(BigUint::from(f as u64)))
}

/// `(N:M)` as the least positive `k` with `k e_i ∈ L` for all `i`.
pub fn colon_oracle(n: &Submodule, bound: u64) -> Result<Ideal> {
    n.parent.finite_size(bound)?;
    let q = HermiteQuotient::new(&n.lattice);
    let dim = q.h.len();
    let mut f = 1i64;
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        f = f.lcm(&q.order(&e));
    }
    Ok(n.parent.ring().ideal(f))
}

/// Intersection of the enumerated prime submodules containing `N`.
pub fn prime_radical_oracle(n: &Submodule, bound: u64) -> Result<Submodule> {
    n.parent.finite_size(bound)?;
    let over = n.parent.quotient(n);
    let mut acc: Option<IntegerLattice> = None;
    for p in enumerate_submodules(&over, bound)? {
        if is_prime_submodule(&p).is_some() {
            acc = Some(match acc {
                None => p.lattice,
                Some(a) => a.intersect(&p.lattice)?,
            });
        }
    }
    let lattice = acc.unwrap_or_else(|| IntegerLattice::full(n.parent.gens()));
    Ok(Submodule { parent: n.parent.clone(), lattice })
}

/// Every prime submodule of a finite module.
pub fn prime_spectrum(m: &FinPresModule, bound: u64) -> Result<Vec<(Submodule, Ideal)>> {
    Ok(enumerate_submodules(m, bound)?
        .into_iter()
        .filter_map(|p| is_prime_submodule(&p).map(|c| (p, c)))
        .collect())
}
