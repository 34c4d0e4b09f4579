//! Verdicts with per-prime evidence.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::json;
use crate::rings::Ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Primeful,
    #[serde(rename = "pradical")]
    PRadical,
    #[serde(rename = "mradical")]
    MRadical,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Primeful => "primeful",
            Property::PRadical => "pradical",
            Property::MRadical => "mradical",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The prime a check refers to. `OtherMaximals` stands for every maximal
/// ideal over the annihilator that is not listed explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimeRef {
    Ideal { ideal: Ideal },
    OtherMaximals { excluded: Vec<Ideal> },
}

impl fmt::Display for PrimeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeRef::Ideal { ideal } => write!(f, "{ideal}"),
            PrimeRef::OtherMaximals { excluded } if excluded.is_empty() => write!(f, "every maximal"),
            PrimeRef::OtherMaximals { .. } => write!(f, "other maximals"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A prime submodule realizing the prime, by ambient generators.
    PrimeSubmodule {
        #[serde(with = "json::dec_vec2")]
        gens: Vec<Vec<BigInt>>,
    },
    /// A prime submodule of a symbolic module, described in words.
    Component { description: String },
    /// The colon of the prime radical that was computed.
    Colon { expected: Ideal, got: Ideal },
    /// `PM = M`, so no prime submodule lies over `P`.
    ScalarImageFull,
    /// No prime submodule has this colon.
    NotRealized,
    Structural { reason: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::PrimeSubmodule { gens } => {
                let cols: Vec<String> = gens
                    .iter()
                    .map(|g| format!("[{}]", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "<{}>", cols.join(" "))
            }
            Witness::Component { description } => f.write_str(description),
            Witness::Colon { expected, got } => write!(f, "colon {got}, want {expected}"),
            Witness::ScalarImageFull => f.write_str("PM = M"),
            Witness::NotRealized => f.write_str("no prime submodule"),
            Witness::Structural { reason } => f.write_str(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheck {
    pub prime: PrimeRef,
    pub holds: bool,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCertificate {
    pub property: Property,
    pub verdict: bool,
    pub per_prime: Vec<PrimeCheck>,
}

impl PropertyCertificate {
    pub fn new(property: Property, per_prime: Vec<PrimeCheck>) -> Self {
        let verdict = per_prime.iter().all(|c| c.holds);
        PropertyCertificate { property, verdict, per_prime }
    }

    /// First failing entry, if any.
    pub fn failure(&self) -> Option<&PrimeCheck> {
        self.per_prime.iter().find(|c| !c.holds)
    }
}

pub(crate) fn at(ideal: &Ideal, holds: bool, witness: Witness) -> PrimeCheck {
    PrimeCheck { prime: PrimeRef::Ideal { ideal: ideal.clone() }, holds, witness }
}
