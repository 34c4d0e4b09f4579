use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pradical_core::fgmod::{self, FinPresModule, Submodule, SubmoduleSpec};
use pradical_core::handle::{IdealSpec, ModuleHandle};
use pradical_core::harness::{self, Suite};
use pradical_core::rings::Ideal;
use pradical_core::{gallery, spectop, symmod, Error};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pradical", version, about = "Prime submodules, prime radicals and radical-type module properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 500)]
    trials: usize,
    /// Enumeration bound on module size
    #[arg(long, global = true, default_value_t = fgmod::DEFAULT_BOUND)]
    bound: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide module properties with per-prime evidence
    Analyze {
        /// Path to a module JSON file, or the JSON itself
        input: String,
        #[arg(long, value_delimiter = ',')]
        props: Vec<Prop>,
    },
    /// Prime radical of a submodule, or of IM for an ideal I
    Radical {
        input: String,
        /// Submodule as {"gens": [[...], ...]}
        #[arg(long, conflicts_with = "ideal")]
        submodule: Option<String>,
        /// Generator of the ideal I
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Colon ideal (N:M) and primality of N
    Colon {
        input: String,
        #[arg(long)]
        submodule: Option<String>,
    },
    /// Prime spectrum and the natural map to Spec(R)
    Spec {
        input: String,
        /// Emit the natural map as a DOT digraph
        #[arg(long)]
        dot: bool,
    },
    /// Named instances checked against their recorded verdicts
    Gallery,
    /// Run a verification suite
    Verify {
        /// Suite id, or "all"
        suite: String,
    },
    /// Compare closed forms with brute-force enumeration on one module
    Oracle {
        input: String,
        #[arg(long)]
        submodule: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Prop {
    Primeful,
    Pradical,
    Mradical,
    Fullsemisimple,
    Primeless,
    Multiplication,
}

impl Prop {
    fn name(self) -> &'static str {
        match self {
            Prop::Primeful => "primeful",
            Prop::Pradical => "pradical",
            Prop::Mradical => "mradical",
            Prop::Fullsemisimple => "fullsemisimple",
            Prop::Primeless => "primeless",
            Prop::Multiplication => "multiplication",
        }
    }
}

enum Fail {
    Usage(String),
    Unsupported(String),
    Assertion(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidRing(_) | Error::InvalidIdeal(_) | Error::InvalidModule(_) | Error::Dimension(_) => {
                Fail::Usage(e.to_string())
            }
            _ => Fail::Unsupported(e.to_string()),
        }
    }
}

type Out = Result<String, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Unsupported(m)) => {
            eprintln!("unsupported: {m}");
            ExitCode::from(3)
        }
        Err(Fail::Assertion(m)) => {
            print!("{m}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: Cli) -> Out {
    let g = &cli.global;
    match cli.command {
        Command::Analyze { input, props } => analyze(&load(&input)?, &props, g),
        Command::Radical { input, submodule, ideal } => radical(&finite(&load(&input)?)?, submodule, ideal, g),
        Command::Colon { input, submodule } => colon(&finite(&load(&input)?)?, submodule, g),
        Command::Spec { input, dot } => spec(&load(&input)?, dot, g),
        Command::Gallery => show_gallery(g),
        Command::Verify { suite } => verify(&suite, g),
        Command::Oracle { input, submodule } => oracle(&finite(&load(&input)?)?, submodule, g),
    }
}

fn load(input: &str) -> Result<ModuleHandle, Fail> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(Path::new(input)).map_err(|e| Fail::Usage(format!("{input}: {e}")))?
    };
    Ok(ModuleHandle::from_json(&text)?)
}

fn finite(m: &ModuleHandle) -> Result<FinPresModule, Fail> {
    match m {
        ModuleHandle::FinPres(f) => Ok(f.clone()),
        ModuleHandle::Symbolic(_) => Err(Fail::Unsupported("this command needs a presented module".into())),
    }
}

fn submodule(m: &FinPresModule, spec: Option<String>) -> Result<Submodule, Fail> {
    let Some(text) = spec else { return Ok(m.zero_submodule()) };
    let s: SubmoduleSpec =
        serde_json::from_str(&text).map_err(|e| Fail::Usage(format!("parse error in `submodule`: {e}")))?;
    Ok(m.submodule(&s.gens)?)
}

fn ideal(m: &ModuleHandle, text: &str) -> Result<Ideal, Fail> {
    let spec: IdealSpec = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Fail::Usage(format!("parse error in `ideal`: {e}")))?
    } else {
        serde_json::from_value(json!({ "gen": text.trim() }))
            .map_err(|e| Fail::Usage(format!("parse error in `ideal`: {e}")))?
    };
    Ok(spec.in_ring(m.ring()))
}

fn gens(n: &Submodule) -> String {
    let g = n.generators();
    if g.is_empty() || *n == n.parent().zero_submodule() {
        return "0".into();
    }
    let cols: Vec<String> =
        g.iter().map(|v| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("<{}>", cols.join(" "))
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn analyze(m: &ModuleHandle, props: &[Prop], g: &Global) -> Out {
    let props: Vec<Prop> = if props.is_empty() {
        let mut all = vec![Prop::Primeful, Prop::Pradical, Prop::Mradical, Prop::Primeless];
        if matches!(m, ModuleHandle::Symbolic(s) if s.is_semisimple()) {
            all.push(Prop::Fullsemisimple);
        }
        if matches!(m, ModuleHandle::FinPres(f) if f.is_cyclic() || f.free_rank() == 0) {
            all.push(Prop::Multiplication);
        }
        all
    } else {
        props.to_vec()
    };
    let mut text = format!("module: {m}\nring: {}\nann: {}\n", m.ring(), m.ann());
    let mut rows = Vec::new();
    for p in props {
        let (verdict, detail, cert) = match p {
            Prop::Primeful | Prop::Pradical | Prop::Mradical => {
                let c = match p {
                    Prop::Primeful => m.check_primeful(),
                    Prop::Pradical => m.check_p_radical(),
                    _ => m.check_m_radical(),
                };
                let detail: Vec<String> =
                    c.per_prime.iter().map(|x| format!("{} {} {}", x.prime, mark(x.holds), x.witness)).collect();
                (c.verdict, detail, Some(c))
            }
            Prop::Primeless => (m.is_primeless(), Vec::new(), None),
            Prop::Fullsemisimple => match m {
                ModuleHandle::Symbolic(s) if s.is_semisimple() => (symmod::is_full_semisimple(s)?, Vec::new(), None),
                _ => return Err(Fail::Unsupported("fullsemisimple needs a semisimple symbolic module".into())),
            },
            Prop::Multiplication => match m {
                ModuleHandle::FinPres(f) => (fgmod::is_multiplication(f, g.bound)?, Vec::new(), None),
                ModuleHandle::Symbolic(_) => {
                    return Err(Fail::Unsupported("multiplication needs a presented module".into()))
                }
            },
        };
        let _ = writeln!(text, "{:<15} {}", p.name(), mark(verdict));
        for d in &detail {
            let _ = writeln!(text, "    {d}");
        }
        rows.push(json!({ "property": p.name(), "verdict": verdict, "certificate": cert }));
    }
    if g.json {
        return Ok(pretty(json!({ "module": m, "ring": m.ring().to_string(), "ann": m.ann().to_string(), "properties": rows })));
    }
    Ok(text)
}

fn radical(m: &FinPresModule, sub: Option<String>, i: Option<String>, g: &Global) -> Out {
    let h = ModuleHandle::FinPres(m.clone());
    let i = i.map(|t| ideal(&h, &t)).transpose()?;
    let n = match &i {
        Some(i) => m.ideal_times(i)?,
        None => submodule(m, sub)?,
    };
    let rad = fgmod::prime_radical(&n);
    let rad_colon = fgmod::colon(&rad);
    let root = pradical_core::rings::radical_ideal(m.ring(), &fgmod::colon(&n))?;
    let at = i.clone().unwrap_or_else(|| fgmod::colon(&n));
    let formula = match fgmod::radical_formula_sides(m, &at) {
        Ok((l, r)) if l == r => format!("holds at {at}"),
        Ok((_, r)) => format!("fails: √{at}·M = {}", gens(&r)),
        Err(e) => format!("not applicable: {e}"),
    };
    if g.json {
        return Ok(pretty(json!({
            "module": h,
            "submodule": gens(&n),
            "radical": rad.generators().iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "radical_colon": rad_colon.to_string(),
            "root_of_colon": root.to_string(),
            "radical_formula": formula,
        })));
    }
    Ok(format!(
        "module: {m}\nN: {}\nprime radical: {}\n(rad N : M): {rad_colon}\nrad (N : M): {root}\nradical formula: {formula}\n",
        gens(&n),
        gens(&rad)
    ))
}

fn colon(m: &FinPresModule, sub: Option<String>, g: &Global) -> Out {
    let n = submodule(m, sub)?;
    let c = fgmod::colon(&n);
    let prime = fgmod::is_prime_submodule(&n);
    if g.json {
        return Ok(pretty(json!({ "submodule": gens(&n), "colon": c.to_string(), "prime": prime.is_some() })));
    }
    Ok(format!("N: {}\n(N : M): {c}\nprime: {}\n", gens(&n), mark(prime.is_some())))
}

fn spec(m: &ModuleHandle, dot: bool, g: &Global) -> Out {
    if dot {
        return Ok(spectop::psi_dot(&finite(m)?, g.bound)?);
    }
    let colons = m.realized_colons();
    let onto = spectop::psi_surjective(m);
    let listed = match m {
        ModuleHandle::FinPres(f) if f.free_rank() == 0 => Some(fgmod::prime_spectrum(f, g.bound)?),
        _ => None,
    };
    if g.json {
        let primes: Option<Vec<_>> = listed
            .as_ref()
            .map(|l| l.iter().map(|(n, p)| json!({ "submodule": gens(n), "colon": p.to_string() })).collect());
        return Ok(pretty(json!({
            "module": m,
            "image": colons.to_string(),
            "primes_over_ann": m.primes_over_ann().to_string(),
            "surjective": onto,
            "prime_submodules": primes,
        })));
    }
    let mut text = format!(
        "module: {m}\nimage of psi: {colons}\nprimes over Ann: {}\npsi surjective: {}\n",
        m.primes_over_ann(),
        mark(onto)
    );
    if let Some(l) = listed {
        let _ = writeln!(text, "prime submodules: {}", l.len());
        for (n, p) in l {
            let _ = writeln!(text, "    {} over {p}", gens(&n));
        }
    }
    Ok(text)
}

fn show_gallery(g: &Global) -> Out {
    let rows = gallery::run();
    let bad = rows.iter().any(|r| !r.mismatches.is_empty());
    let out = if g.json { serde_json::to_string_pretty(&rows).expect("serializable") + "\n" } else { gallery::render(&rows) };
    if bad {
        Err(Fail::Assertion(out))
    } else {
        Ok(out)
    }
}

fn verify(id: &str, g: &Global) -> Out {
    let suites: Vec<Suite> = if id == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![id.parse().map_err(|e: Error| Fail::Usage(e.to_string()))?]
    };
    let mut reports = Vec::new();
    for s in suites {
        reports.push(harness::run_suite(s, g.seed, g.trials, g.bound)?);
    }
    let pass = reports.iter().all(|r| r.passed());
    let out = if g.json {
        let v = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
        pretty(v)
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    if pass {
        Ok(out)
    } else {
        Err(Fail::Assertion(out))
    }
}

fn oracle(m: &FinPresModule, sub: Option<String>, g: &Global) -> Out {
    let n = submodule(m, sub)?;
    let fast = fgmod::prime_radical(&n);
    let slow = fgmod::prime_radical_oracle(&n, g.bound)?;
    let prime_fast = fgmod::is_prime_submodule(&n).is_some();
    let prime_slow = fgmod::is_prime_oracle(&n, g.bound)?.is_some();
    let agree = fast == slow && prime_fast == prime_slow;
    let out = if g.json {
        pretty(json!({
            "submodule": gens(&n),
            "radical": gens(&fast),
            "radical_oracle": gens(&slow),
            "prime": prime_fast,
            "prime_oracle": prime_slow,
            "agree": agree,
        }))
    } else {
        format!(
            "N: {}\nprime radical: {} (oracle {})\nprime: {} (oracle {})\nagree: {}\n",
            gens(&n),
            gens(&fast),
            gens(&slow),
            mark(prime_fast),
            mark(prime_slow),
            mark(agree)
        )
    };
    if agree {
        Ok(out)
    } else {
        Err(Fail::Assertion(out))
    }
}
