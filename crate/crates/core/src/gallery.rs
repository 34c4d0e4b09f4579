//! Named instances with their recorded verdicts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cert::{PrimeRef, Witness};
use crate::error::Result;
use crate::fgmod::{self, FinPresModule};
use crate::handle::ModuleHandle;
use crate::rings::{PrimeSet, Ring};
use crate::symmod::{self, SymbolicModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    Primeful,
    #[serde(rename = "pradical")]
    PRadical,
    #[serde(rename = "mradical")]
    MRadical,
    Primeless,
    #[serde(rename = "fullsemisimple")]
    FullSemisimple,
}

impl Column {
    pub const ALL: [Column; 5] =
        [Column::Primeful, Column::PRadical, Column::MRadical, Column::Primeless, Column::FullSemisimple];

    pub fn name(self) -> &'static str {
        match self {
            Column::Primeful => "primeful",
            Column::PRadical => "pradical",
            Column::MRadical => "mradical",
            Column::Primeless => "primeless",
            Column::FullSemisimple => "fullsemisimple",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalleryRow {
    pub name: String,
    pub module: ModuleHandle,
    /// Computed verdicts; `None` where the column does not apply.
    pub verdicts: Vec<(Column, Option<bool>)>,
    /// Further facts checked for this instance.
    pub facts: Vec<String>,
    pub mismatches: Vec<String>,
}

struct Entry {
    name: &'static str,
    module: ModuleHandle,
    expected: &'static [(Column, bool)],
    facts: fn(&ModuleHandle) -> Vec<(String, bool)>,
}

fn sym(m: Result<SymbolicModule>) -> ModuleHandle {
    ModuleHandle::Symbolic(m.expect("named instance"))
}

fn entries() -> Vec<Entry> {
    use Column::*;
    let z = Ring::Integers;
    let loc5 = Ring::localized(5u32).expect("prime");
    vec![
        Entry {
            name: "example_2_6",
            module: sym(symmod::construct_prop27(&z)),
            expected: &[(PRadical, true), (Primeful, false), (MRadical, true), (Primeless, false), (FullSemisimple, true)],
            facts: |m| {
                let c = m.realized_colons();
                let onto_max = c.maximals == PrimeSet::all_maximals();
                let missing_zero = m.check_primeful().failure().map(|f| f.prime.clone())
                    == Some(PrimeRef::Ideal { ideal: Ring::Integers.zero_ideal() });
                vec![
                    ("psi image = all maximals".into(), onto_max && !c.zero_prime),
                    ("primeful fails at (0)".into(), missing_zero),
                ]
            },
        },
        Entry {
            name: "example_3_2_M",
            module: sym(SymbolicModule::builder(z.clone()).family_cofinite(&[]).build()),
            expected: &[(FullSemisimple, true), (MRadical, true), (PRadical, true), (Primeful, false)],
            facts: |m| {
                let dim = symmod::ann(symbolic(m)).is_zero_ideal();
                vec![("dim R/Ann = 1".into(), dim)]
            },
        },
        Entry {
            name: "example_3_2_M1",
            module: sym(SymbolicModule::builder(z.clone()).family_cofinite(&[2]).build()),
            expected: &[(FullSemisimple, false), (MRadical, false), (PRadical, false), (Primeful, false)],
            facts: |m| {
                let at2 = m.check_m_radical().failure().map(|f| f.prime.clone())
                    == Some(PrimeRef::Ideal { ideal: Ring::Integers.ideal(2) });
                vec![("mradical fails at (2)".into(), at2)]
            },
        },
        Entry {
            name: "thm_2_11_Zloc5",
            module: sym(symmod::construct_thm211(&loc5)),
            expected: &[(MRadical, true), (PRadical, false), (Primeful, false), (Primeless, false)],
            facts: |m| {
                let r = m.ring().clone();
                let fail = m.check_p_radical().failure().cloned();
                let at_zero = fail.as_ref().map(|f| f.prime.clone()) == Some(PrimeRef::Ideal { ideal: r.zero_ideal() });
                let colon5 = matches!(fail.map(|f| f.witness), Some(Witness::Colon { got, .. }) if got == r.ideal(5));
                vec![("pradical fails at (0)".into(), at_zero), ("radical colon at (0) = (5)".into(), colon5)]
            },
        },
        Entry {
            name: "pruefer_Z5",
            module: sym(SymbolicModule::builder(z.clone()).pruefer(5, 1).build()),
            expected: &[(Primeless, true), (Primeful, false), (PRadical, false), (MRadical, false)],
            facts: |m| vec![("Spec(M) empty".into(), m.realized_colons().is_empty())],
        },
        Entry {
            name: "pruefer_Zloc5",
            module: sym(SymbolicModule::builder(loc5.clone()).pruefer(5, 1).build()),
            expected: &[(Primeless, true), (MRadical, false)],
            facts: |m| {
                let fixed = m.ideal_fixes(&m.ring().ideal(5)).unwrap_or(false);
                vec![("(5)M = M".into(), fixed)]
            },
        },
        Entry {
            name: "prop_3_3",
            module: sym(SymbolicModule::builder(z.clone()).cyclic(2, 1, 1).cyclic(3, 1, 1).build()),
            expected: &[(FullSemisimple, true), (MRadical, true), (PRadical, true), (Primeful, true)],
            facts: |m| {
                let dim0 = !symmod::ann(symbolic(m)).is_zero_ideal();
                vec![("dim R/Ann = 0".into(), dim0)]
            },
        },
        Entry {
            name: "Z_mod_12",
            module: FinPresModule::from_invariants(z.clone(), 0, &[12]).expect("valid").into(),
            expected: &[(Primeful, true), (PRadical, true), (MRadical, true), (Primeless, false)],
            facts: |m| {
                let ModuleHandle::FinPres(f) = m else { return Vec::new() };
                let rad = fgmod::prime_radical(&f.zero_submodule());
                vec![
                    ("multiplication".into(), fgmod::is_multiplication(f, fgmod::DEFAULT_BOUND).unwrap_or(false)),
                    ("radical colon at (0) = (6)".into(), fgmod::colon(&rad) == Ring::Integers.ideal(6)),
                ]
            },
        },
        Entry {
            name: "Z_plus_Z4",
            module: FinPresModule::from_invariants(z, 1, &[4]).expect("valid").into(),
            expected: &[(Primeful, true), (PRadical, true), (MRadical, true), (Primeless, false)],
            facts: |m| {
                let ModuleHandle::FinPres(f) = m else { return Vec::new() };
                let holds = fgmod::check_radical_formula(f, &Ring::Integers.zero_ideal()).unwrap_or(true);
                vec![("radical formula fails at (0)".into(), !holds)]
            },
        },
    ]
}

fn symbolic(m: &ModuleHandle) -> &SymbolicModule {
    match m {
        ModuleHandle::Symbolic(s) => s,
        ModuleHandle::FinPres(_) => panic!("symbolic gallery entry expected"),
    }
}

/// Verdict of one column, `None` where it does not apply.
pub fn column_value(m: &ModuleHandle, c: Column) -> Option<bool> {
    match c {
        Column::Primeful => Some(m.check_primeful().verdict),
        Column::PRadical => Some(m.check_p_radical().verdict),
        Column::MRadical => Some(m.check_m_radical().verdict),
        Column::Primeless => Some(m.is_primeless()),
        Column::FullSemisimple => match m {
            ModuleHandle::Symbolic(s) => symmod::is_full_semisimple(s).ok(),
            ModuleHandle::FinPres(_) => None,
        },
    }
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

/// Evaluates every entry against its recorded verdicts.
pub fn run() -> Vec<GalleryRow> {
    entries()
        .into_iter()
        .map(|e| {
            let verdicts: Vec<_> = Column::ALL.iter().map(|&c| (c, column_value(&e.module, c))).collect();
            let mut mismatches = Vec::new();
            for &(c, want) in e.expected {
                let got = verdicts.iter().find(|(x, _)| *x == c).and_then(|(_, v)| *v);
                if got != Some(want) {
                    mismatches.push(format!("{}: expected {want}, got {}", c.name(), show(got)));
                }
            }
            let mut facts = Vec::new();
            for (fact, ok) in (e.facts)(&e.module) {
                if !ok {
                    mismatches.push(format!("fact does not hold: {fact}"));
                }
                facts.push(fact);
            }
            GalleryRow { name: e.name.to_string(), module: e.module, verdicts, facts, mismatches }
        })
        .collect()
}

fn show(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "✓",
        Some(false) => "✗",
        None => "-",
    }
}

/// Fixed-width table of the rows, one line per instance plus its facts.
pub fn render(rows: &[GalleryRow]) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<16}", "name");
    for c in Column::ALL {
        let _ = write!(out, " {:<14}", c.name());
    }
    let _ = writeln!(out, " status");
    for r in rows {
        let _ = write!(out, "{:<16}", r.name);
        for (_, v) in &r.verdicts {
            let _ = write!(out, " {:<14}", show(*v));
        }
        let _ = writeln!(out, " {}", if r.mismatches.is_empty() { "ok" } else { "MISMATCH" });
        let _ = writeln!(out, "    module: {}", r.module);
        for f in &r.facts {
            let _ = writeln!(out, "    {f}");
        }
        for m in &r.mismatches {
            let _ = writeln!(out, "    !! {m}");
        }
    }
    out
}
