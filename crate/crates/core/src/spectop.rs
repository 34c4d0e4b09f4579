//! Zariski-type closed sets on `Spec(R)` and `Spec(M)`, and the natural
//! map `P -> (P:M)` between them.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fgmod::{self, FinPresModule, Submodule};
use crate::handle::ModuleHandle;
use crate::rings::{self, Ideal, PrimeSet, Ring, SpecSubset};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedKind {
    Whole,
    Empty,
    /// A nonempty finite set of maximal ideals that is not all of `Spec(R)`.
    FiniteMaximals(BTreeSet<Ideal>),
}

/// A closed subset of `Spec(R)`. Every closed set of the supported rings is
/// the whole spectrum or a finite set of maximal ideals, so this is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSetR {
    ring: Ring,
    kind: ClosedKind,
}

impl ClosedSetR {
    pub fn whole(r: &Ring) -> Self {
        ClosedSetR { ring: r.clone(), kind: ClosedKind::Whole }
    }

    pub fn empty(r: &Ring) -> Self {
        ClosedSetR { ring: r.clone(), kind: ClosedKind::Empty }
    }

    /// Closed set of finitely many maximal ideals, normalized.
    pub fn finite(r: &Ring, maximals: impl IntoIterator<Item = Ideal>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in maximals {
            if m.ring() != r || !m.is_maximal() {
                return Err(Error::InvalidIdeal(format!("{m} is not a maximal ideal of {r}")));
            }
            set.insert(m);
        }
        Ok(Self::normalized(r, set))
    }

    fn normalized(r: &Ring, set: BTreeSet<Ideal>) -> Self {
        let kind = if set.is_empty() {
            ClosedKind::Empty
        } else if r.finite_spectrum().is_some_and(|all| all.iter().all(|p| set.contains(p))) {
            ClosedKind::Whole
        } else {
            ClosedKind::FiniteMaximals(set)
        };
        ClosedSetR { ring: r.clone(), kind }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> &ClosedKind {
        &self.kind
    }

    pub fn is_whole(&self) -> bool {
        self.kind == ClosedKind::Whole
    }

    pub fn is_empty(&self) -> bool {
        self.kind == ClosedKind::Empty
    }

    pub fn contains(&self, prime: &Ideal) -> bool {
        match &self.kind {
            ClosedKind::Whole => prime.is_prime(),
            ClosedKind::Empty => false,
            ClosedKind::FiniteMaximals(s) => s.contains(prime),
        }
    }

    /// The radical ideal cutting out this set.
    pub fn ideal(&self) -> Ideal {
        match &self.kind {
            ClosedKind::Whole => rings::radical_ideal(&self.ring, &self.ring.zero_ideal()).expect("same ring"),
            ClosedKind::Empty => self.ring.unit_ideal(),
            ClosedKind::FiniteMaximals(s) => {
                s.iter().fold(self.ring.unit_ideal(), |acc, m| acc.intersect(m).expect("same ring"))
            }
        }
    }

    fn same_ring(&self, other: &ClosedSetR) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} and {}", self.ring, other.ring)))
        }
    }

    pub fn union(&self, other: &ClosedSetR) -> Result<ClosedSetR> {
        self.same_ring(other)?;
        Ok(match (&self.kind, &other.kind) {
            (ClosedKind::Whole, _) | (_, ClosedKind::Whole) => Self::whole(&self.ring),
            (ClosedKind::Empty, _) => other.clone(),
            (_, ClosedKind::Empty) => self.clone(),
            (ClosedKind::FiniteMaximals(a), ClosedKind::FiniteMaximals(b)) => {
                Self::normalized(&self.ring, a.union(b).cloned().collect())
            }
        })
    }

    pub fn intersection(&self, other: &ClosedSetR) -> Result<ClosedSetR> {
        self.same_ring(other)?;
        Ok(match (&self.kind, &other.kind) {
            (ClosedKind::Empty, _) | (_, ClosedKind::Empty) => Self::empty(&self.ring),
            (ClosedKind::Whole, _) => other.clone(),
            (_, ClosedKind::Whole) => self.clone(),
            (ClosedKind::FiniteMaximals(a), ClosedKind::FiniteMaximals(b)) => {
                Self::normalized(&self.ring, a.intersection(b).cloned().collect())
            }
        })
    }

    pub fn is_subset(&self, other: &ClosedSetR) -> Result<bool> {
        self.same_ring(other)?;
        Ok(match (&self.kind, &other.kind) {
            (ClosedKind::Empty, _) | (_, ClosedKind::Whole) => true,
            (_, ClosedKind::Empty) | (ClosedKind::Whole, _) => false,
            (ClosedKind::FiniteMaximals(a), ClosedKind::FiniteMaximals(b)) => a.is_subset(b),
        })
    }

    pub fn complement(&self) -> OpenSetR {
        OpenSetR { complement: self.clone() }
    }
}

impl fmt::Display for ClosedSetR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ClosedKind::Whole => f.write_str("whole"),
            ClosedKind::Empty => f.write_str("empty"),
            ClosedKind::FiniteMaximals(s) => {
                let items: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

/// An open subset, kept as the complement of a closed one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenSetR {
    complement: ClosedSetR,
}

impl OpenSetR {
    pub fn complement(&self) -> &ClosedSetR {
        &self.complement
    }

    pub fn contains(&self, prime: &Ideal) -> bool {
        prime.is_prime() && !self.complement.contains(prime)
    }

    pub fn is_empty(&self) -> bool {
        self.complement.is_whole()
    }

    pub fn is_whole(&self) -> bool {
        self.complement.is_empty()
    }

    pub fn union(&self, other: &OpenSetR) -> Result<OpenSetR> {
        Ok(self.complement.intersection(&other.complement)?.complement())
    }

    pub fn intersection(&self, other: &OpenSetR) -> Result<OpenSetR> {
        Ok(self.complement.union(&other.complement)?.complement())
    }
}

impl fmt::Display for OpenSetR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.complement.kind {
            ClosedKind::Whole => f.write_str("empty"),
            ClosedKind::Empty => f.write_str("whole"),
            _ => write!(f, "whole minus {}", self.complement),
        }
    }
}

/// `V(I)`.
pub fn v_ideal(r: &Ring, i: &Ideal) -> Result<ClosedSetR> {
    if i.ring() != r {
        return Err(Error::RingMismatch(format!("ideal {i} of {} in {r}", i.ring())));
    }
    if i.is_zero_ideal() || rings::radical_ideal(r, i)? == rings::radical_ideal(r, &r.zero_ideal())? {
        return Ok(ClosedSetR::whole(r));
    }
    match rings::maximal_ideals_containing(r, i)? {
        PrimeSet::Finite(s) => Ok(ClosedSetR::normalized(r, s)),
        PrimeSet::CofiniteMaximals { .. } => unreachable!("only the zero ideal of Z lies in infinitely many maximals"),
    }
}

/// `D(f)`, the primes not containing `f`.
pub fn d_basic(r: &Ring, f: &BigInt) -> Result<OpenSetR> {
    Ok(v_ideal(r, &r.ideal(f.clone()))?.complement())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedOp {
    Union,
    Intersection,
    Subset,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedOpResult {
    Set(ClosedSetR),
    Truth(bool),
}

pub fn closed_ops(a: &ClosedSetR, b: &ClosedSetR, op: ClosedOp) -> Result<ClosedOpResult> {
    Ok(match op {
        ClosedOp::Union => ClosedOpResult::Set(a.union(b)?),
        ClosedOp::Intersection => ClosedOpResult::Set(a.intersection(b)?),
        ClosedOp::Subset => ClosedOpResult::Truth(a.is_subset(b)?),
        ClosedOp::Equal => {
            a.same_ring(b)?;
            ClosedOpResult::Truth(a == b)
        }
    })
}

/// A closed subset `V(N)` of `Spec(M)`: the prime submodules `P` with
/// `(P:M) ⊇ (N:M)`. Only the radical of `(N:M)` matters, so that is what is
/// kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSetM {
    ring: Ring,
    radical: Ideal,
}

impl ClosedSetM {
    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    /// Whether a prime submodule with colon `q` lies in the set.
    pub fn contains_colon(&self, q: &Ideal) -> bool {
        q.contains(&self.radical).unwrap_or(false)
    }

    /// Membership of a prime submodule; errors if `p` is not prime.
    pub fn contains(&self, p: &Submodule) -> Result<bool> {
        let q = fgmod::is_prime_submodule(p).ok_or_else(|| Error::Precondition("not a prime submodule".into()))?;
        Ok(self.contains_colon(&q))
    }

    /// Indices into a listed spectrum of the members of this set.
    pub fn members(&self, spectrum: &[(Submodule, Ideal)]) -> Vec<usize> {
        spectrum.iter().enumerate().filter(|(_, (_, q))| self.contains_colon(q)).map(|(i, _)| i).collect()
    }

    /// The image `V((N:M))` of this set in `Spec(R)`, before intersecting
    /// with the image of the natural map.
    pub fn shadow(&self) -> ClosedSetR {
        v_ideal(&self.ring, &self.radical).expect("same ring")
    }
}

impl fmt::Display for ClosedSetM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V over {}", self.shadow())
    }
}

pub fn v_submodule(n: &Submodule) -> ClosedSetM {
    let ring = n.parent().ring().clone();
    let radical = rings::radical_ideal(&ring, &fgmod::colon(n)).expect("same ring");
    ClosedSetM { ring, radical }
}

/// `V(0) = Spec(M)` of either representation.
pub fn v_zero(m: &ModuleHandle) -> ClosedSetM {
    let ring = m.ring().clone();
    let radical = rings::radical_ideal(&ring, &m.ann()).expect("same ring");
    ClosedSetM { ring, radical }
}

/// The image of `Spec(M) -> Spec(R)`.
pub fn psi_image(m: &ModuleHandle) -> SpecSubset {
    m.realized_colons()
}

/// Equality of two spectrum subsets as sets.
pub fn same_subset(a: &SpecSubset, b: &SpecSubset) -> bool {
    a.ring == b.ring
        && a.zero_prime == b.zero_prime
        && a.maximals.is_subset(&b.maximals)
        && b.maximals.is_subset(&a.maximals)
}

/// The natural map hits all of `V(Ann M)`.
pub fn psi_surjective(m: &ModuleHandle) -> bool {
    same_subset(&psi_image(m), &m.primes_over_ann())
}

/// Graphviz rendering of the natural map on a finite module.
pub fn psi_dot(m: &FinPresModule, bound: u64) -> Result<String> {
    let spectrum = fgmod::prime_spectrum(m, bound)?;
    let mut out = String::from("digraph psi {\n  rankdir=LR;\n");
    let mut targets = BTreeSet::new();
    for (i, (p, q)) in spectrum.iter().enumerate() {
        let gens: Vec<String> = p
            .generators()
            .iter()
            .map(|g| format!("[{}]", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let label = if gens.is_empty() { "0".to_string() } else { gens.join(" ") };
        let _ = writeln!(out, "  \"P{i}\" [shape=box,label=\"<{label}>\"];");
        let _ = writeln!(out, "  \"P{i}\" -> \"{q}\";");
        targets.insert(q.clone());
    }
    for q in rings::primes_containing(m.ring(), &fgmod::ann(m))?.maximals_listed() {
        let style = if targets.contains(&q) { "solid" } else { "dashed" };
        let _ = writeln!(out, "  \"{q}\" [shape=ellipse,style={style}];");
    }
    out.push_str("}\n");
    Ok(out)
}

trait Listed {
    fn maximals_listed(&self) -> Vec<Ideal>;
}

impl Listed for SpecSubset {
    fn maximals_listed(&self) -> Vec<Ideal> {
        match &self.maximals {
            PrimeSet::Finite(s) => s.iter().cloned().collect(),
            PrimeSet::CofiniteMaximals { .. } => Vec::new(),
        }
    }
}
