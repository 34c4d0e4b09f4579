//! The four coefficient rings, their ideals in normal form, and the
//! ring-level facts (spectrum, Jacobson radical, Hilbert property) that the
//! module predicates consult.
//!
//! Every ideal is stored as a natural number `gen` in a per-ring normal
//! form, so that ideal equality is data equality:
//!
//! | ring      | `gen`                                  |
//! |-----------|----------------------------------------|
//! | `Z`       | the nonnegative generator              |
//! | `Z/n`     | a divisor `d` of `n` (ideal `(d)/(n)`) |
//! | `Z_(p)`   | `0` or `p^k`, `k >= 0`                 |
//! | `F_p`     | `0` or `1`                             |
//!
//! In every case containment of ideals is reverse divisibility of `gen`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::json;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", try_from = "RingRepr", into = "RingRepr")]
pub enum Ring {
    Integers,
    IntegersModN(BigUint),
    LocalizedAtPrime(BigUint),
    PrimeField(BigUint),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum RingRepr {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "ZmodN")]
    ZmodN {
        #[serde(with = "json::dec")]
        n: BigUint,
    },
    #[serde(rename = "ZlocP")]
    ZlocP {
        #[serde(with = "json::dec")]
        p: BigUint,
    },
    #[serde(rename = "Fp")]
    Fp {
        #[serde(with = "json::dec")]
        p: BigUint,
    },
}

impl TryFrom<RingRepr> for Ring {
    type Error = Error;

    fn try_from(r: RingRepr) -> Result<Ring> {
        match r {
            RingRepr::Z => Ok(Ring::Integers),
            RingRepr::ZmodN { n } => Ring::modulo(n),
            RingRepr::ZlocP { p } => Ring::localized(p),
            RingRepr::Fp { p } => Ring::field(p),
        }
    }
}

impl From<Ring> for RingRepr {
    fn from(r: Ring) -> RingRepr {
        match r {
            Ring::Integers => RingRepr::Z,
            Ring::IntegersModN(n) => RingRepr::ZmodN { n },
            Ring::LocalizedAtPrime(p) => RingRepr::ZlocP { p },
            Ring::PrimeField(p) => RingRepr::Fp { p },
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersModN(n) => write!(f, "Z/{n}"),
            Ring::LocalizedAtPrime(p) => write!(f, "Z_({p})"),
            Ring::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingFacts {
    pub krull_dim: u32,
    pub is_artinian: bool,
    pub is_domain: bool,
    pub is_field: bool,
    pub jacobson_radical: Ideal,
}

impl Ring {
    pub fn integers() -> Ring {
        Ring::Integers
    }

    pub fn modulo(n: impl Into<BigUint>) -> Result<Ring> {
        let n = n.into();
        if n < BigUint::from(2u32) {
            return Err(Error::InvalidRing(format!("Z/n needs n >= 2, got {n}")));
        }
        Ok(Ring::IntegersModN(n))
    }

    pub fn localized(p: impl Into<BigUint>) -> Result<Ring> {
        let p = p.into();
        if !arith::is_prime(&p) {
            return Err(Error::InvalidRing(format!("Z_(p) needs p prime, got {p}")));
        }
        Ok(Ring::LocalizedAtPrime(p))
    }

    pub fn field(p: impl Into<BigUint>) -> Result<Ring> {
        let p = p.into();
        if !arith::is_prime(&p) {
            return Err(Error::InvalidRing(format!("F_p needs p prime, got {p}")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn ideal(&self, gen: impl Into<BigInt>) -> Ideal {
        Ideal::new(self, &gen.into())
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.ideal(0)
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.ideal(1)
    }

    pub fn is_domain(&self) -> bool {
        match self {
            Ring::IntegersModN(n) => arith::is_prime(n),
            _ => true,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Integers | Ring::LocalizedAtPrime(_) => false,
            Ring::IntegersModN(n) => arith::is_prime(n),
            Ring::PrimeField(_) => true,
        }
    }

    /// True for the rings with finitely many prime ideals.
    pub fn has_finite_spectrum(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// All prime ideals, when there are finitely many.
    pub fn finite_spectrum(&self) -> Option<Vec<Ideal>> {
        match self {
            Ring::Integers => None,
            Ring::IntegersModN(n) => Some(arith::prime_divisors(n).into_iter().map(|p| self.ideal(p)).collect()),
            Ring::LocalizedAtPrime(p) => Some(vec![self.zero_ideal(), self.ideal(p.clone())]),
            Ring::PrimeField(_) => Some(vec![self.zero_ideal()]),
        }
    }

    /// The minimal non-maximal prime of a one-dimensional domain.
    pub fn generic_prime(&self) -> Option<Ideal> {
        matches!(self, Ring::Integers | Ring::LocalizedAtPrime(_)).then(|| self.zero_ideal())
    }

    /// The maximal ideal generated by the rational prime `q`, for the rings
    /// where `(q)` is maximal.
    pub fn maximal_at(&self, q: &BigUint) -> Result<Ideal> {
        let ideal = Ideal { ring: self.clone(), gen: q.clone() };
        let ok = match self {
            Ring::Integers => arith::is_prime(q),
            Ring::IntegersModN(n) => arith::is_prime(q) && (n % q).is_zero(),
            Ring::LocalizedAtPrime(p) => q == p,
            Ring::PrimeField(_) => false,
        };
        if ok {
            Ok(ideal)
        } else {
            Err(Error::InvalidIdeal(format!("({q}) is not a maximal ideal of {self}")))
        }
    }

    /// The integer by which a maximal ideal acts on a module: `q` for
    /// `(q)`, and `0` for the zero ideal of a field.
    pub fn residue_scalar(&self, maximal: &Ideal) -> BigUint {
        maximal.gen.clone()
    }
}

/// An ideal of one of the supported rings, in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct Ideal {
    ring: Ring,
    gen: BigUint,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    ring: Ring,
    #[serde(with = "json::dec")]
    gen: BigInt,
}

impl TryFrom<IdealRepr> for Ideal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Ideal> {
        Ok(Ideal::new(&r.ring, &r.gen))
    }
}

impl From<Ideal> for IdealRepr {
    fn from(i: Ideal) -> IdealRepr {
        IdealRepr { ring: i.ring, gen: i.gen.into() }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_ideal() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", self.gen)
        }
    }
}

impl Ideal {
    /// The ideal generated by the image of the integer `g`.
    pub fn new(ring: &Ring, g: &BigInt) -> Ideal {
        let g = g.abs().to_biguint().expect("absolute value");
        let gen = match ring {
            Ring::Integers => g,
            Ring::IntegersModN(n) => g.gcd(n),
            Ring::LocalizedAtPrime(p) => {
                if g.is_zero() {
                    g
                } else {
                    let mut rest = g;
                    let mut pk = BigUint::one();
                    while (&rest % p).is_zero() {
                        rest /= p;
                        pk *= p;
                    }
                    pk
                }
            }
            Ring::PrimeField(p) => {
                if (&g % p).is_zero() {
                    BigUint::zero()
                } else {
                    BigUint::one()
                }
            }
        };
        Ideal { ring: ring.clone(), gen }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Normal-form generator (see the module table).
    pub fn generator(&self) -> &BigUint {
        &self.gen
    }

    /// The preimage of this ideal in `Z`, as a nonnegative generator.
    /// For `Z_(p)` and `F_p` this is the contraction along `Z -> R`.
    pub fn integer_generator(&self) -> BigUint {
        match &self.ring {
            Ring::PrimeField(p) if self.gen.is_zero() => p.clone(),
            Ring::LocalizedAtPrime(_) | Ring::Integers | Ring::IntegersModN(_) | Ring::PrimeField(_) => {
                self.gen.clone()
            }
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        match &self.ring {
            Ring::IntegersModN(n) => &self.gen == n,
            _ => self.gen.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.gen.is_one()
    }

    pub fn is_prime(&self) -> bool {
        match &self.ring {
            Ring::Integers => self.gen.is_zero() || arith::is_prime(&self.gen),
            Ring::IntegersModN(_) => arith::is_prime(&self.gen),
            Ring::LocalizedAtPrime(p) => self.gen.is_zero() || &self.gen == p,
            Ring::PrimeField(_) => self.gen.is_zero(),
        }
    }

    pub fn is_maximal(&self) -> bool {
        match &self.ring {
            Ring::Integers | Ring::IntegersModN(_) => arith::is_prime(&self.gen),
            Ring::LocalizedAtPrime(p) => &self.gen == p,
            Ring::PrimeField(_) => self.gen.is_zero(),
        }
    }

    /// `self ⊇ other`
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(divides(&self.gen, &other.gen))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::new(&self.ring, &self.gen.gcd(&other.gen).into()))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::new(&self.ring, &arith::lcm(&self.gen, &other.gen).into()))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::new(&self.ring, &(&self.gen * &other.gen).into()))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("ideal of {} against ideal of {}", self.ring, other.ring)));
        }
        Ok(())
    }

    fn check_ring(&self, ring: &Ring) -> Result<()> {
        if &self.ring != ring {
            return Err(Error::RingMismatch(format!("ideal of {} used with {}", self.ring, ring)));
        }
        Ok(())
    }
}

pub(crate) fn divides(a: &BigUint, b: &BigUint) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

/// A set of primes of a ring: finite, or (over `Z` only) all maximal
/// ideals except finitely many.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeSet {
    Finite(BTreeSet<Ideal>),
    CofiniteMaximals { excluded: BTreeSet<Ideal> },
}

impl PrimeSet {
    pub fn empty() -> PrimeSet {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn all_maximals() -> PrimeSet {
        PrimeSet::CofiniteMaximals { excluded: BTreeSet::new() }
    }

    /// Membership for a prime ideal; for the cofinite variant only maximal
    /// ideals belong.
    pub fn contains(&self, prime: &Ideal) -> bool {
        match self {
            PrimeSet::Finite(s) => s.contains(prime),
            PrimeSet::CofiniteMaximals { excluded } => prime.is_maximal() && !excluded.contains(prime),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PrimeSet::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Finite(s) if s.is_empty())
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.union(b).cloned().collect()),
            (Finite(f), CofiniteMaximals { excluded }) | (CofiniteMaximals { excluded }, Finite(f)) => {
                CofiniteMaximals { excluded: excluded.difference(f).cloned().collect() }
            }
            (CofiniteMaximals { excluded: a }, CofiniteMaximals { excluded: b }) => {
                CofiniteMaximals { excluded: a.intersection(b).cloned().collect() }
            }
        }
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b).cloned().collect()),
            (Finite(f), c @ CofiniteMaximals { .. }) | (c @ CofiniteMaximals { .. }, Finite(f)) => {
                Finite(f.iter().filter(|p| c.contains(p)).cloned().collect())
            }
            (CofiniteMaximals { excluded: a }, CofiniteMaximals { excluded: b }) => {
                CofiniteMaximals { excluded: a.union(b).cloned().collect() }
            }
        }
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), _) => a.iter().all(|p| other.contains(p)),
            (CofiniteMaximals { .. }, Finite(_)) => false,
            (CofiniteMaximals { excluded: a }, CofiniteMaximals { excluded: b }) => b.is_subset(a),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<Ideal>| s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Finite(s) => write!(f, "{{{}}}", list(s)),
            PrimeSet::CofiniteMaximals { excluded } if excluded.is_empty() => write!(f, "all maximals"),
            PrimeSet::CofiniteMaximals { excluded } => write!(f, "all maximals except {{{}}}", list(excluded)),
        }
    }
}

/// A subset of `Spec(R)`: a set of maximal ideals plus, for the
/// one-dimensional domains `Z` and `Z_(p)`, possibly the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecSubset {
    pub ring: Ring,
    pub zero_prime: bool,
    pub maximals: PrimeSet,
}

impl SpecSubset {
    pub fn empty(ring: &Ring) -> SpecSubset {
        SpecSubset { ring: ring.clone(), zero_prime: false, maximals: PrimeSet::empty() }
    }

    pub fn contains(&self, prime: &Ideal) -> bool {
        if prime.is_maximal() {
            self.maximals.contains(prime)
        } else {
            self.zero_prime && prime.is_zero_ideal()
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.zero_prime && self.maximals.is_empty()
    }
}

impl fmt::Display for SpecSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.maximals, self.zero_prime) {
            (m, false) => write!(f, "{m}"),
            (PrimeSet::Finite(s), true) if s.is_empty() => write!(f, "{{(0)}}"),
            (m, true) => write!(f, "(0) and {m}"),
        }
    }
}

/// Maximal ideals containing `i`.
pub fn maximal_ideals_containing(r: &Ring, i: &Ideal) -> Result<PrimeSet> {
    i.check_ring(r)?;
    if i.is_unit() {
        return Ok(PrimeSet::empty());
    }
    Ok(match r {
        Ring::Integers if i.gen.is_zero() => PrimeSet::all_maximals(),
        Ring::Integers | Ring::IntegersModN(_) => {
            PrimeSet::Finite(arith::prime_divisors(&i.gen).into_iter().map(|p| r.ideal(p)).collect())
        }
        Ring::LocalizedAtPrime(p) => PrimeSet::Finite([r.ideal(p.clone())].into()),
        Ring::PrimeField(_) => PrimeSet::Finite([r.zero_ideal()].into()),
    })
}

/// `V(I)` as a subset of the spectrum.
pub fn primes_containing(r: &Ring, i: &Ideal) -> Result<SpecSubset> {
    let maximals = maximal_ideals_containing(r, i)?;
    let zero_prime = r.generic_prime().is_some_and(|z| i.is_zero_ideal() && z.is_zero_ideal());
    Ok(SpecSubset { ring: r.clone(), zero_prime, maximals })
}

/// `√I`, the intersection of the primes containing `I`.
pub fn radical_ideal(r: &Ring, i: &Ideal) -> Result<Ideal> {
    i.check_ring(r)?;
    Ok(match r {
        Ring::Integers | Ring::IntegersModN(_) => r.ideal(arith::squarefree_kernel(&i.gen)),
        Ring::LocalizedAtPrime(p) if !i.gen.is_zero() && !i.is_unit() => r.ideal(p.clone()),
        _ => i.clone(),
    })
}

/// Every prime is an intersection of maximal ideals. `Z_(p)` is the only
/// supported ring that fails: `(0)` sits strictly below its one maximal.
pub fn is_hilbert(r: &Ring) -> bool {
    !matches!(r, Ring::LocalizedAtPrime(_))
}

/// Is `R/I` a Hilbert ring? Quotients of `Z` are `Z` or Artinian; the only
/// non-Hilbert quotient is `Z_(p)` itself.
pub fn quotient_is_hilbert(r: &Ring, i: &Ideal) -> Result<bool> {
    i.check_ring(r)?;
    Ok(!(matches!(r, Ring::LocalizedAtPrime(_)) && i.is_zero_ideal()))
}

/// Krull dimension of `R/I`; `None` for the zero ring `R/R`.
pub fn quotient_dim(r: &Ring, i: &Ideal) -> Result<Option<u32>> {
    i.check_ring(r)?;
    if i.is_unit() {
        return Ok(None);
    }
    let one_dim = matches!(r, Ring::Integers | Ring::LocalizedAtPrime(_)) && i.is_zero_ideal();
    Ok(Some(if one_dim { 1 } else { 0 }))
}

pub fn ring_facts(r: &Ring) -> RingFacts {
    match r {
        Ring::Integers => RingFacts {
            krull_dim: 1,
            is_artinian: false,
            is_domain: true,
            is_field: false,
            jacobson_radical: r.zero_ideal(),
        },
        Ring::IntegersModN(n) => RingFacts {
            krull_dim: 0,
            is_artinian: true,
            is_domain: arith::is_prime(n),
            is_field: arith::is_prime(n),
            jacobson_radical: r.ideal(arith::squarefree_kernel(n)),
        },
        Ring::LocalizedAtPrime(p) => RingFacts {
            krull_dim: 1,
            is_artinian: false,
            is_domain: true,
            is_field: false,
            jacobson_radical: r.ideal(p.clone()),
        },
        Ring::PrimeField(_) => RingFacts {
            krull_dim: 0,
            is_artinian: true,
            is_domain: true,
            is_field: true,
            jacobson_radical: r.zero_ideal(),
        },
    }
}

/// Is the integer `f` a unit of `r`?
pub fn is_unit_element(r: &Ring, f: &BigInt) -> bool {
    r.ideal(f.clone()).is_unit()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::modulo(1u32).is_err());
        assert!(Ring::localized(6u32).is_err());
        assert!(Ring::field(9u32).is_err());
        assert!(Ring::field(7u32).is_ok());
    }

    #[test]
    fn ideal_normal_forms() {
        let z12 = Ring::modulo(12u32).unwrap();
        assert_eq!(z12.ideal(8), z12.ideal(4));
        assert_eq!(z12.ideal(0), z12.ideal(12));
        assert!(z12.ideal(0).is_zero_ideal());
        let l5 = Ring::localized(5u32).unwrap();
        assert_eq!(l5.ideal(75).generator(), &BigUint::from(25u32));
        assert!(l5.ideal(3).is_unit());
        let f7 = Ring::field(7u32).unwrap();
        assert_eq!(f7.ideal(14), f7.zero_ideal());
        assert!(f7.ideal(3).is_unit());
        assert_eq!(z().ideal(-6), z().ideal(6));
    }

    #[test]
    fn maximal_ideal_examples() {
        let m = maximal_ideals_containing(&z(), &z().ideal(12)).unwrap();
        assert_eq!(m, PrimeSet::Finite([z().ideal(2), z().ideal(3)].into()));
        assert_eq!(maximal_ideals_containing(&z(), &z().ideal(0)).unwrap(), PrimeSet::all_maximals());
        let l5 = Ring::localized(5u32).unwrap();
        assert_eq!(
            maximal_ideals_containing(&l5, &l5.zero_ideal()).unwrap(),
            PrimeSet::Finite([l5.ideal(5)].into())
        );
        let f7 = Ring::field(7u32).unwrap();
        assert_eq!(
            maximal_ideals_containing(&f7, &f7.zero_ideal()).unwrap(),
            PrimeSet::Finite([f7.zero_ideal()].into())
        );
        assert!(maximal_ideals_containing(&l5, &z().ideal(5)).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_ideal(&z(), &z().ideal(12)).unwrap(), z().ideal(6));
        assert_eq!(radical_ideal(&z(), &z().ideal(0)).unwrap(), z().ideal(0));
        // oracle: elements x of Z/12 with some power in (4)/(12)
        let z12 = Ring::modulo(12u32).unwrap();
        let in_four = |x: u64| x % 4 == 0;
        let rad: Vec<u64> = (0..12u64).filter(|&x| (1..6).any(|k| in_four(x.pow(k) % 12))).collect();
        assert_eq!(rad, vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(radical_ideal(&z12, &z12.ideal(4)).unwrap(), z12.ideal(2));
    }

    #[test]
    fn hilbert_and_facts() {
        assert!(is_hilbert(&z()));
        assert!(!is_hilbert(&Ring::localized(5u32).unwrap()));
        assert!(is_hilbert(&Ring::modulo(12u32).unwrap()));
        let f = ring_facts(&Ring::modulo(12u32).unwrap());
        assert_eq!((f.krull_dim, f.is_artinian, f.is_domain, f.is_field), (0, true, false, false));
        assert_eq!(f.jacobson_radical.generator(), &BigUint::from(6u32));
        let f = ring_facts(&z());
        assert_eq!((f.krull_dim, f.is_artinian, f.is_domain, f.is_field), (1, false, true, false));
        assert!(f.jacobson_radical.is_zero_ideal());
        let l5 = Ring::localized(5u32).unwrap();
        assert_eq!(ring_facts(&l5).jacobson_radical, l5.ideal(5));
    }

    /// Hilbert iff every prime equals the intersection of the maximal ideals
    /// above it. Over Z the intersection of (p) over the first k primes is
    /// (p_1...p_k), which has no nonzero common multiple bound as k grows.
    #[test]
    fn hilbert_matches_prime_intersections() {
        for r in [Ring::modulo(360u32).unwrap(), Ring::localized(3u32).unwrap(), Ring::field(5u32).unwrap()] {
            let spec = r.finite_spectrum().unwrap();
            let all = spec.iter().all(|p| {
                let above: Vec<&Ideal> = spec.iter().filter(|q| q.is_maximal() && q.contains(p).unwrap()).collect();
                let meet = above.iter().fold(r.unit_ideal(), |acc, q| acc.intersect(q).unwrap());
                &meet == p
            });
            assert_eq!(all, is_hilbert(&r), "{r}");
        }
        let mut meet = z().unit_ideal();
        for p in arith::primes_up_to(50) {
            meet = meet.intersect(&z().ideal(p)).unwrap();
        }
        assert!(!meet.is_zero_ideal());
        // every nonzero ideal misses some prime: (g) is not contained in (q) for q > g
        assert!(!z().ideal(53).contains(&meet).unwrap());
    }

    #[test]
    fn dimension_zero_iff_all_primes_maximal() {
        for r in [Ring::modulo(12u32).unwrap(), Ring::localized(3u32).unwrap(), Ring::field(5u32).unwrap()] {
            let all_max = r.finite_spectrum().unwrap().iter().all(|p| p.is_maximal());
            assert_eq!(all_max, ring_facts(&r).krull_dim == 0);
        }
    }

    #[test]
    fn ring_json_forms() {
        let r: Ring = serde_json::from_str(r#"{"kind":"ZmodN","n":12}"#).unwrap();
        assert_eq!(r, Ring::modulo(12u32).unwrap());
        assert!(serde_json::from_str::<Ring>(r#"{"kind":"Fp","p":8}"#).is_err());
        let s = serde_json::to_string(&Ring::localized(5u32).unwrap()).unwrap();
        assert_eq!(serde_json::from_str::<Ring>(&s).unwrap(), Ring::localized(5u32).unwrap());
    }

    #[test]
    fn prime_set_algebra() {
        let two = z().ideal(2);
        let three = z().ideal(3);
        let a = PrimeSet::CofiniteMaximals { excluded: [two.clone()].into() };
        let b = PrimeSet::Finite([two.clone()].into());
        assert_eq!(a.union(&b), PrimeSet::all_maximals());
        assert!(a.intersection(&b).is_empty());
        assert!(a.contains(&three) && !a.contains(&two));
        assert!(!a.contains(&z().zero_ideal()));
        assert!(b.is_subset(&PrimeSet::all_maximals()));
    }
}
