//! One type for either module representation, with the JSON input form.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cert::PropertyCertificate;
use crate::error::{Error, Result};
use crate::fgmod::{self, FinPresModule};
use crate::json;
use crate::rings::{self, Ideal, Ring, SpecSubset};
use crate::symmod::{self, SymbolicModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModuleHandle {
    #[serde(rename = "finpres")]
    FinPres(#[serde(with = "finpres_json")] FinPresModule),
    Symbolic(SymbolicModule),
}

impl fmt::Display for ModuleHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleHandle::FinPres(m) => write!(f, "{m}"),
            ModuleHandle::Symbolic(m) => write!(f, "{m}"),
        }
    }
}

impl From<FinPresModule> for ModuleHandle {
    fn from(m: FinPresModule) -> Self {
        ModuleHandle::FinPres(m)
    }
}

impl From<SymbolicModule> for ModuleHandle {
    fn from(m: SymbolicModule) -> Self {
        ModuleHandle::Symbolic(m)
    }
}

impl ModuleHandle {
    /// Parses the JSON module form, naming the offending field on failure.
    pub fn from_json(text: &str) -> Result<Self> {
        let parse = |field: &str, message: String| Error::Parse { field: field.to_string(), message };
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| parse("module", e.to_string()))?;
        serde_json::from_value(value.clone()).map_err(|e| {
            let field = offending_field(&value).unwrap_or("module");
            parse(field, e.to_string())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn ring(&self) -> &Ring {
        match self {
            ModuleHandle::FinPres(m) => m.ring(),
            ModuleHandle::Symbolic(m) => m.ring(),
        }
    }

    pub fn ann(&self) -> Ideal {
        match self {
            ModuleHandle::FinPres(m) => fgmod::ann(m),
            ModuleHandle::Symbolic(m) => symmod::ann(m),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleHandle::FinPres(m) => m.is_zero(),
            ModuleHandle::Symbolic(m) => m.is_zero(),
        }
    }

    pub fn check_primeful(&self) -> PropertyCertificate {
        match self {
            ModuleHandle::FinPres(m) => fgmod::check_primeful(m),
            ModuleHandle::Symbolic(m) => symmod::check_primeful(m),
        }
    }

    pub fn check_p_radical(&self) -> PropertyCertificate {
        match self {
            ModuleHandle::FinPres(m) => fgmod::check_p_radical(m),
            ModuleHandle::Symbolic(m) => symmod::check_p_radical(m),
        }
    }

    pub fn check_m_radical(&self) -> PropertyCertificate {
        match self {
            ModuleHandle::FinPres(m) => fgmod::check_m_radical(m),
            ModuleHandle::Symbolic(m) => symmod::check_m_radical(m),
        }
    }

    /// Image of the natural map on `Spec(M)`.
    pub fn realized_colons(&self) -> SpecSubset {
        match self {
            ModuleHandle::FinPres(m) => fgmod::realized_colons(m),
            ModuleHandle::Symbolic(m) => m.realized_colons(),
        }
    }

    pub fn primes_over_ann(&self) -> SpecSubset {
        rings::primes_containing(self.ring(), &self.ann()).expect("same ring")
    }

    pub fn is_primeless(&self) -> bool {
        self.realized_colons().is_empty()
    }

    /// `IM = M`.
    pub fn ideal_fixes(&self, i: &Ideal) -> Result<bool> {
        if i.ring() != self.ring() {
            return Err(Error::RingMismatch(format!("ideal of {} for a module over {}", i.ring(), self.ring())));
        }
        Ok(match self {
            ModuleHandle::FinPres(m) => m.ideal_times(i)?.is_whole(),
            ModuleHandle::Symbolic(m) => symbolic_ideal_fixes(m, i),
        })
    }
}

/// `IM = M` summand by summand: `I R^r = R^r` needs `I = R`, `I` fixes
/// `R/(p^k)` iff `p` does not divide it, and a nonzero `I` fixes every
/// divisible summand.
fn symbolic_ideal_fixes(m: &SymbolicModule, i: &Ideal) -> bool {
    let g = i.integer_generator();
    let misses = |p: &num_bigint::BigUint| !rings::divides(p, &g);
    let free_ok = m.free_rank().is_zero() || i.is_unit();
    let cyclic_ok = m.cyclics().iter().all(|c| misses(&c.p));
    let family_ok = m.families().iter().all(|f| match f {
        rings::PrimeSet::Finite(s) => s.iter().all(|q| misses(q.generator())),
        rings::PrimeSet::CofiniteMaximals { .. } => {
            !i.is_zero_ideal() && arith_primes(&g).into_iter().all(|p| !f.contains(&i.ring().ideal(p)))
        }
    });
    let pruefer_ok = m.pruefer().is_empty() || !i.is_zero_ideal();
    free_ok && cyclic_ok && family_ok && pruefer_ok
}

fn arith_primes(g: &num_bigint::BigUint) -> Vec<BigInt> {
    crate::arith::prime_divisors(g).into_iter().map(BigInt::from).collect()
}

/// The first top-level field that does not parse on its own.
fn offending_field(v: &serde_json::Value) -> Option<&'static str> {
    use serde_json::from_value as de;
    let field = |name: &str| v.get(name).cloned().unwrap_or(serde_json::Value::Null);
    let kind = v.get("kind").and_then(|k| k.as_str());
    match kind {
        Some("finpres") | Some("symbolic") => {}
        _ => return Some("kind"),
    }
    if de::<Ring>(field("ring")).is_err() {
        return Some("ring");
    }
    if kind == Some("finpres") {
        if de::<usize>(field("gens")).is_err() {
            return Some("gens");
        }
        return Some("relations");
    }
    for name in ["free_rank", "cyclics", "families", "pruefer"] {
        let mut probe = serde_json::json!({ "ring": field("ring") });
        if let Some(x) = v.get(name) {
            probe[name] = x.clone();
        }
        if de::<SymbolicModule>(probe).is_err() {
            return Some(name);
        }
    }
    None
}

mod finpres_json {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        ring: Ring,
        gens: usize,
        #[serde(default, with = "json::dec_vec2")]
        relations: Vec<Vec<BigInt>>,
    }

    pub fn serialize<S: serde::Serializer>(m: &FinPresModule, s: S) -> std::result::Result<S::Ok, S::Error> {
        // the relation lattice already contains n Z^n over Z/n; the
        // constructor adds it again harmlessly
        Repr { ring: m.ring().clone(), gens: m.gens(), relations: m.relations().generators() }.serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<FinPresModule, D::Error> {
        let r = Repr::deserialize(d)?;
        if let Some(row) = r.relations.iter().find(|row| row.len() != r.gens) {
            return Err(serde::de::Error::custom(format!(
                "relations: row of length {} for {} generators",
                row.len(),
                r.gens
            )));
        }
        FinPresModule::new(r.ring, r.gens, &r.relations).map_err(serde::de::Error::custom)
    }
}

/// An ideal given as `{"gen": g}` and read in a known ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    #[serde(with = "json::dec")]
    pub gen: BigInt,
}

impl IdealSpec {
    pub fn in_ring(&self, r: &Ring) -> Ideal {
        r.ideal(self.gen.clone())
    }
}
