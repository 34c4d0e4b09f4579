//! Per-instance checks. Each one decides a single statement on a single
//! instance and is rerunnable from the instance alone.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cert::{PrimeRef, Witness};
use crate::error::Error;
use crate::exactlin::IntegerLattice;
use crate::fgmod::{self, FinPresModule, Submodule};
use crate::handle::ModuleHandle;
use crate::rings::{self, Ideal, PrimeSet, Ring};
use crate::spectop::{self, ClosedSetR};
use crate::symmod::{self, Rank, SymbolicModule};

use super::generator::Instance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The instance is outside the check's scope.
    Skip(String),
    Fail(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    Oracle,
    Prop21,
    Prop29,
    Chain,
    Cor24,
    Thm211,
    Thm211Certified,
    Thm212,
    Prop27,
    Prop27Certified,
    Primeless,
    Nakayama,
    NakayamaPruefer,
    Semisimple,
    SemisimpleExpected,
    SpecTopology,
    ClosedAlgebra,
    RadicalFormula,
    RadicalFormulaCounterexample,
    Truncation,
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

enum Stop {
    Skip(String),
    Fail(String),
}

type Step<T = ()> = std::result::Result<T, Stop>;

fn need(cond: bool, msg: impl FnOnce() -> String) -> Step {
    if cond {
        Ok(())
    } else {
        Err(Stop::Fail(msg()))
    }
}

fn skip<T>(msg: &str) -> Step<T> {
    Err(Stop::Skip(msg.to_string()))
}

fn lib<T>(r: crate::Result<T>) -> Step<T> {
    r.map_err(|e| match e {
        Error::TooLarge { .. } | Error::Precondition(_) => Stop::Skip(e.to_string()),
        e => Stop::Fail(format!("library error: {e}")),
    })
}

impl CheckId {
    pub fn run(self, inst: &Instance, bound: u64) -> Outcome {
        let r = match self {
            CheckId::Oracle => oracle(inst, bound),
            CheckId::Prop21 => prop21(inst, bound),
            CheckId::Prop29 => prop29(inst, bound),
            CheckId::Chain => chain(inst),
            CheckId::Cor24 => cor24(inst),
            CheckId::Thm211 => thm211(inst),
            CheckId::Thm211Certified => thm211_certified(inst),
            CheckId::Thm212 => thm212(inst),
            CheckId::Prop27 => prop27(inst),
            CheckId::Prop27Certified => prop27_certified(inst),
            CheckId::Primeless => primeless(inst),
            CheckId::Nakayama => nakayama(inst),
            CheckId::NakayamaPruefer => nakayama_pruefer(inst),
            CheckId::Semisimple => semisimple(inst),
            CheckId::SemisimpleExpected => semisimple_expected(inst),
            CheckId::SpecTopology => spec_topology(inst, bound),
            CheckId::ClosedAlgebra => closed_algebra(inst),
            CheckId::RadicalFormula => radical_formula(inst, bound),
            CheckId::RadicalFormulaCounterexample => radical_formula_counterexample(inst),
            CheckId::Truncation => truncation(inst),
        };
        match r {
            Ok(()) => Outcome::Pass,
            Err(Stop::Skip(s)) => Outcome::Skip(s),
            Err(Stop::Fail(s)) => Outcome::Fail(s),
        }
    }
}

fn handle(inst: &Instance) -> Step<ModuleHandle> {
    lib(inst.handle())
}

fn finite(inst: &Instance, bound: u64) -> Step<FinPresModule> {
    let Instance::FinPres(p) = inst else { return skip("not a presentation") };
    let m = lib(p.build())?;
    match m.size().and_then(|s| s.to_u64()) {
        Some(s) if s <= bound => Ok(m),
        Some(_) => skip("too large"),
        None => skip("infinite"),
    }
}

fn symbolic(inst: &Instance) -> Step<&SymbolicModule> {
    match inst {
        Instance::Symbolic(s) => Ok(s),
        _ => skip("not symbolic"),
    }
}

struct Verdicts {
    primeful: bool,
    p_radical: bool,
    m_radical: bool,
}

fn verdicts(h: &ModuleHandle) -> Verdicts {
    Verdicts {
        primeful: h.check_primeful().verdict,
        p_radical: h.check_p_radical().verdict,
        m_radical: h.check_m_radical().verdict,
    }
}

fn intersect_all<'a>(r: &Ring, ideals: impl Iterator<Item = &'a Ideal>) -> Ideal {
    ideals.fold(r.unit_ideal(), |acc, q| acc.intersect(q).expect("same ring"))
}

/// Maximal ideals over `Ann(M)` worth checking, with one stand-in for the
/// unlisted ones when there are infinitely many.
fn maximals_over(h: &ModuleHandle) -> Vec<Ideal> {
    match h {
        ModuleHandle::FinPres(m) => {
            let mut out: Vec<Ideal> = arith::prime_divisors(m.exponent())
                .into_iter()
                .map(|p| m.ring().ideal(BigInt::from(p)))
                .filter(|q| q.is_maximal())
                .collect();
            if m.free_rank() > 0 {
                let all = m.ring().finite_spectrum();
                match all {
                    Some(primes) => {
                        out = primes.into_iter().filter(|q| q.is_maximal()).collect();
                    }
                    None => {
                        let top = out.iter().map(|q| q.generator().clone()).max().unwrap_or_else(BigUint::one);
                        out.push(m.ring().ideal(BigInt::from(arith::next_prime(&top))));
                    }
                }
            }
            out
        }
        ModuleHandle::Symbolic(s) => {
            let (mut listed, rest) = s.maximals_to_check();
            if let Some((_, rep)) = rest {
                listed.push(rep);
            }
            listed
        }
    }
}

/// The zero ideal, when it is a non-maximal prime lying over `Ann(M)`.
fn generic_over_ann(h: &ModuleHandle) -> Option<Ideal> {
    h.ring().generic_prime().filter(|z| h.ann() == *z)
}

// ---------------------------------------------------------------------------

fn oracle(inst: &Instance, bound: u64) -> Step {
    let m = finite(inst, bound)?;
    let subs = lib(fgmod::enumerate_submodules(&m, bound))?;
    let mut primes: Vec<&Submodule> = Vec::new();
    for n in &subs {
        let fast = fgmod::is_prime_submodule(n).map(|i| i.generator().clone());
        let slow = lib(fgmod::is_prime_oracle(n, bound))?;
        need(fast == slow, || format!("primality of {:?}: closed form {fast:?}, definition {slow:?}", n.generators()))?;
        if slow.is_some() {
            primes.push(n);
        }
    }
    let step = (subs.len() / 40).max(1);
    let zero = m.zero_submodule();
    for n in subs.iter().step_by(step).chain(std::iter::once(&zero)) {
        let mut acc: Option<IntegerLattice> = None;
        for p in &primes {
            if !lib(p.contains(n))? {
                continue;
            }
            let next = match acc {
                None => p.lattice().clone(),
                Some(a) => lib(a.intersect(p.lattice()))?,
            };
            let done = &next == n.lattice();
            acc = Some(next);
            if done {
                break;
            }
        }
        let expected = acc.unwrap_or_else(|| IntegerLattice::full(m.gens()));
        let got = fgmod::prime_radical(n);
        need(got.lattice() == &expected, || {
            format!("radical of {:?}: closed form {:?}, enumeration {:?}", n.generators(), got.generators(), expected.generators())
        })?;
        let c = fgmod::colon(n);
        let c_oracle = lib(fgmod::colon_oracle(n, bound))?;
        need(c == c_oracle, || format!("colon of {:?}: {c} vs {c_oracle}", n.generators()))?;
    }
    let via_op = lib(fgmod::prime_radical_oracle(&zero, bound))?;
    need(via_op == fgmod::prime_radical(&zero), || "prime_radical_oracle disagrees at 0".into())
}

fn prop21(inst: &Instance, bound: u64) -> Step {
    let m = finite(inst, bound)?;
    if m.is_zero() {
        return Ok(());
    }
    let r = m.ring().clone();
    let spectrum = lib(fgmod::prime_spectrum(&m, bound))?;
    let at = |d: &BigUint| -> Step<(bool, bool)> {
        let i = r.ideal(BigInt::from(d.clone()));
        let rad_i = lib(rings::radical_ideal(&r, &i))?;
        let im = lib(m.ideal_times(&i))?;
        let c1 = fgmod::colon(&fgmod::prime_radical(&im)) == rad_i;
        let im_colon = fgmod::colon(&im);
        let over = spectrum.iter().filter(|(_, q)| q.contains(&im_colon).unwrap_or(false)).map(|(_, q)| q);
        let c3 = intersect_all(&r, over) == rad_i;
        Ok((c1, c3))
    };
    let (mut c1, mut c2, mut c3, mut c4) = (true, true, true, true);
    for d in arith::divisors(m.exponent()) {
        let (a, b) = at(&d)?;
        c1 &= a;
        c3 &= b;
    }
    for p in arith::prime_divisors(m.exponent()) {
        let (a, b) = at(&p)?;
        c2 &= a;
        c4 &= b;
    }
    need(c1 == c2 && c2 == c3 && c3 == c4, || format!("conditions disagree: (1)={c1} (2)={c2} (3)={c3} (4)={c4}"))?;
    let v = fgmod::check_p_radical(&m).verdict;
    need(v == c2, || format!("certificate says {v}, conditions say {c2}"))
}

/// A maximal submodule with colon `q`, from a hyperplane of `M/qM` over
/// `Z/q`.
fn hyperplane_submodule(m: &FinPresModule, q: u64) -> Step<Option<Submodule>> {
    let n = m.gens();
    let qi = q as i128;
    let md = |x: &BigInt| -> i128 { (x % BigInt::from(q)).to_i128().expect("small") .rem_euclid(qi) };
    let mut rows: Vec<Vec<i128>> = m.relations().generators().iter().map(|g| g.iter().map(md).collect()).collect();
    // row reduce mod q and read off a functional vanishing on every row
    let inv = |a: i128| -> i128 {
        let mut r = 1i128;
        let mut b = a;
        let mut e = qi - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % qi;
            }
            b = b * b % qi;
            e >>= 1;
        }
        r
    };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(row, pr);
        let s = inv(rows[row][col]);
        for x in rows[row].iter_mut() {
            *x = *x * s % qi;
        }
        for i in 0..rows.len() {
            if i != row && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..n {
                    rows[i][j] = (rows[i][j] - f * rows[row][j]).rem_euclid(qi);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let Some(free_col) = (0..n).find(|c| !pivots.contains(c)) else { return Ok(None) };
    let mut phi = vec![0i128; n];
    phi[free_col] = 1;
    for (i, &pc) in pivots.iter().enumerate() {
        phi[pc] = (-rows[i][free_col]).rem_euclid(qi);
    }
    let t = free_col;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::from(q);
        gens.push(v);
        if i != t {
            let mut w = vec![BigInt::zero(); n];
            w[i] = BigInt::one();
            w[t] = BigInt::from((-phi[i]).rem_euclid(qi));
            gens.push(w);
        }
    }
    Ok(Some(lib(m.submodule(&gens))?))
}

fn index_is(s: &Submodule, q: &BigUint) -> bool {
    let st = s.quotient_structure();
    st.free_rank == 0 && st.torsion.len() == 1 && &st.torsion[0] == q
}

fn prop29(inst: &Instance, bound: u64) -> Step {
    let h = handle(inst)?;
    if h.is_zero() {
        return Ok(());
    }
    let qs = maximals_over(&h);
    let generic = generic_over_ann(&h);
    let c1 = h.check_m_radical().verdict;
    let (c2, c3, c4, c5) = match &h {
        ModuleHandle::FinPres(m) => {
            let proper = |q: &Ideal| !m.scalar_submodule(&m.ring().residue_scalar(q)).is_whole();
            let c2 = qs.iter().all(proper);
            let c3 = c2 && generic.iter().all(|_| !m.zero_submodule().is_whole());
            let finite = m.size().and_then(|s| s.to_u64()).is_some_and(|s| s <= bound);
            let (mut c4, mut c5) = (true, true);
            if finite {
                let subs = lib(fgmod::enumerate_submodules(m, bound))?;
                for q in &qs {
                    let g = q.integer_generator();
                    c4 &= subs.iter().any(|s| index_is(s, &g) && &fgmod::colon(s) == q);
                    c5 &= subs.iter().any(|s| fgmod::is_prime_submodule(s).as_ref() == Some(q));
                }
            } else {
                for q in &qs {
                    let g = q.integer_generator();
                    let Some(gq) = g.to_u64() else { return skip("maximal beyond 64 bits") };
                    c4 &= match hyperplane_submodule(m, gq)? {
                        Some(s) => index_is(&s, &g) && &fgmod::colon(&s) == q,
                        None => false,
                    };
                    c5 &= fgmod::is_prime_submodule(&m.scalar_submodule(&g)).as_ref() == Some(q);
                }
            }
            (c2, c3, c4, c5)
        }
        ModuleHandle::Symbolic(s) => {
            let c2 = qs.iter().all(|q| s.scalar_image_proper(q).unwrap_or(false));
            let c3 = c2 && generic.iter().all(|_| !s.is_zero());
            let c4 = qs.iter().all(|q| residue_dimension(s, q) > 0);
            let realized = s.realized_colons();
            let c5 = qs.iter().all(|q| realized.contains(q));
            (c2, c3, c4, c5)
        }
    };
    need([c2, c3, c4, c5].iter().all(|&c| c == c1), || {
        format!("conditions disagree: (1)={c1} (2)={c2} (3)={c3} (4)={c4} (5)={c5}")
    })
}

/// Dimension of `M/qM` over `R/q`, capped: count of summands that survive.
fn residue_dimension(s: &SymbolicModule, q: &Ideal) -> u64 {
    let mut d = match s.free_rank() {
        Rank::Finite(r) => r,
        Rank::Countable => u64::MAX / 4,
    };
    for c in s.cyclics() {
        if s.ring().ideal(BigInt::from(c.p.clone())) == *q {
            d += c.mult;
        }
    }
    for f in s.families() {
        if f.contains(q) {
            d += 1;
        }
    }
    d
}

fn colon_equality(h: &ModuleHandle) -> bool {
    let qs = maximals_over(h);
    let generic = generic_over_ann(h);
    match h {
        ModuleHandle::FinPres(m) => {
            qs.iter().all(|q| &fgmod::colon(&m.scalar_submodule(&m.ring().residue_scalar(q))) == q)
                && generic.iter().all(|z| &fgmod::colon(&m.zero_submodule()) == z)
        }
        ModuleHandle::Symbolic(s) => {
            qs.iter().all(|q| s.scalar_colon(q).as_ref() == Ok(q)) && generic.iter().all(|z| &symmod::ann(s) == z)
        }
    }
}

fn is_cyclic(h: &ModuleHandle) -> bool {
    match h {
        ModuleHandle::FinPres(m) => m.is_cyclic(),
        ModuleHandle::Symbolic(s) => {
            let free = match s.free_rank() {
                Rank::Finite(r) => r,
                Rank::Countable => 2,
            };
            let cyc: u64 = s.cyclics().iter().map(|c| c.mult).sum();
            let fam: u64 = s
                .families()
                .iter()
                .map(|f| match f {
                    PrimeSet::Finite(x) => x.len() as u64,
                    PrimeSet::CofiniteMaximals { .. } => 2,
                })
                .sum();
            let div: u64 = s.pruefer().iter().map(|d| d.mult).sum();
            free + cyc + fam + div <= 1
        }
    }
}

fn chain(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let v = verdicts(&h);
    let ce = colon_equality(&h);
    need(!v.primeful || v.p_radical, || "primeful but not P-radical".into())?;
    need(!v.p_radical || ce, || "P-radical but (PM:M) != P somewhere".into())?;
    need(!ce || v.m_radical, || "colon equality without M-radical".into())?;
    if matches!(h, ModuleHandle::FinPres(_)) {
        need(v.primeful, || "finitely generated but not primeful".into())?;
    }
    if is_cyclic(&h) {
        need(v.primeful == v.m_radical && v.p_radical == v.m_radical && ce == v.m_radical, || {
            format!("cyclic module with primeful={} P={} colon={ce} M={}", v.primeful, v.p_radical, v.m_radical)
        })?;
    }
    let surjective = spectop::psi_surjective(&h);
    need(surjective == v.primeful, || format!("natural map surjective={surjective}, primeful={}", v.primeful))
}

fn all_three(h: &ModuleHandle) -> Step {
    let v = verdicts(h);
    need(v.primeful && v.p_radical && v.m_radical, || {
        format!("primeful={} P-radical={} M-radical={}", v.primeful, v.p_radical, v.m_radical)
    })
}

fn cor24(inst: &Instance) -> Step {
    let h = handle(inst)?;
    match (&h, h.ring()) {
        (ModuleHandle::FinPres(_), Ring::Integers) | (_, Ring::IntegersModN(_)) => all_three(&h),
        _ => skip("outside the finitely presented Z and Z/n corpus"),
    }
}

fn thm211(inst: &Instance) -> Step {
    let h = handle(inst)?;
    if !rings::is_hilbert(h.ring()) {
        return skip("not a Hilbert ring");
    }
    let v = verdicts(&h);
    need(v.p_radical == v.m_radical, || format!("P-radical={} but M-radical={}", v.p_radical, v.m_radical))
}

fn thm211_certified(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let Ring::LocalizedAtPrime(p) = h.ring().clone() else { return skip("not over a localization") };
    let v = verdicts(&h);
    need(v.m_radical && !v.p_radical, || format!("M-radical={} P-radical={}", v.m_radical, v.p_radical))?;
    let cert = h.check_p_radical();
    let bad = cert.failure().expect("verdict false");
    let zero = h.ring().zero_ideal();
    need(bad.prime == PrimeRef::Ideal { ideal: zero.clone() }, || format!("failing prime {}", bad.prime))?;
    let want = Witness::Colon { expected: zero, got: h.ring().ideal(BigInt::from(p)) };
    need(bad.witness == want, || format!("witness {}", bad.witness))
}

/// Dimension zero forces all three properties. Only the supported rings are
/// exercised, so this checks instances and proves nothing about other rings.
fn thm212(inst: &Instance) -> Step {
    let h = handle(inst)?;
    if rings::ring_facts(h.ring()).krull_dim != 0 {
        return skip("positive dimension");
    }
    all_three(&h)
}

fn prop27(inst: &Instance) -> Step {
    let s = symbolic(inst)?;
    let h = ModuleHandle::Symbolic(s.clone());
    if s.ring() != &Ring::Integers || !s.free_rank().is_zero() || s.families().iter().all(|f| f.is_finite()) {
        return skip("needs an infinite family and no free part over Z");
    }
    let v = verdicts(&h);
    need(!v.primeful, || "primeful despite no (0)-prime".into())?;
    need(!spectop::psi_image(&h).zero_prime, || "(0) realized".into())?;
    need(v.p_radical == v.m_radical, || "P and M disagree over Z".into())
}

fn prop27_certified(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let v = verdicts(&h);
    need(v.p_radical && v.m_radical && !v.primeful, || {
        format!("primeful={} P-radical={} M-radical={}", v.primeful, v.p_radical, v.m_radical)
    })?;
    let image = spectop::psi_image(&h);
    need(!image.zero_prime && image.maximals == PrimeSet::all_maximals(), || format!("image {image}"))
}

fn primeless(inst: &Instance) -> Step {
    let s = symbolic(inst)?;
    if s.pruefer().is_empty() || !s.free_rank().is_zero() || !s.cyclics().is_empty() || !s.families().is_empty() {
        return skip("not torsion divisible");
    }
    let h = ModuleHandle::Symbolic(s.clone());
    need(h.is_primeless(), || "prime submodule found".into())?;
    need(!h.check_primeful().verdict && !h.check_m_radical().verdict, || "primeless yet primeful or M-radical".into())?;
    for q in maximals_over(&h) {
        need(h.ideal_fixes(&q).unwrap_or(false), || format!("{q}M != M on a divisible module"))?;
    }
    Ok(())
}

/// Ideals inside the Jacobson radical.
fn jacobson_ideals(r: &Ring) -> Vec<Ideal> {
    match r {
        Ring::Integers | Ring::PrimeField(_) => vec![r.zero_ideal()],
        Ring::LocalizedAtPrime(p) => {
            let p = BigInt::from(p.clone());
            vec![r.ideal(p.clone()), r.ideal(&p * &p), r.ideal(&p * &p * &p), r.zero_ideal()]
        }
        Ring::IntegersModN(n) => {
            let k = arith::squarefree_kernel(n);
            arith::divisors(n)
                .into_iter()
                .filter(|d| (d % &k).is_zero())
                .map(|d| r.ideal(BigInt::from(d)))
                .collect()
        }
    }
}

fn nakayama(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let mrad = h.check_m_radical().verdict;
    for i in jacobson_ideals(h.ring()) {
        let fixes = lib(h.ideal_fixes(&i))?;
        if fixes && !h.is_zero() {
            need(!mrad, || format!("M-radical, nonzero, and {i}M = M"))?;
        }
    }
    Ok(())
}

fn nakayama_pruefer(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let Ring::LocalizedAtPrime(p) = h.ring().clone() else { return skip("not over a localization") };
    let i = h.ring().ideal(BigInt::from(p));
    need(lib(h.ideal_fixes(&i))? && !h.is_zero(), || format!("{i}M != M"))?;
    need(!h.check_m_radical().verdict, || "M-radical despite IM = M".into())
}

/// `Ann` is a finite intersection of maximal ideals.
fn finite_maximal_intersection(r: &Ring, a: &Ideal) -> bool {
    if a.is_unit() {
        return true;
    }
    match rings::maximal_ideals_containing(r, a) {
        Ok(PrimeSet::Finite(s)) => intersect_all(r, s.iter()) == *a,
        _ => false,
    }
}

fn semisimple(inst: &Instance) -> Step {
    let s = symbolic(inst)?;
    if !s.is_semisimple() || s.is_zero() {
        return skip("not a nonzero semisimple module");
    }
    let h = ModuleHandle::Symbolic(s.clone());
    let r = s.ring();
    let ann = symmod::ann(s);
    let v = verdicts(&h);
    let full = lib(symmod::is_full_semisimple(s))?;
    let hilbert = lib(rings::quotient_is_hilbert(r, &ann))?;
    let dim0 = lib(rings::quotient_dim(r, &ann))? == Some(0);
    need(v.m_radical == full, || format!("M-radical={} full={full}", v.m_radical))?;
    need(v.p_radical == (v.m_radical && hilbert) && v.p_radical == (full && hilbert), || {
        format!("P-radical={} M-radical={} full={full} Hilbert quotient={hilbert}", v.p_radical, v.m_radical)
    })?;
    if finite_maximal_intersection(r, &ann) {
        need(full, || "Ann is a finite intersection of maximals but M is not full".into())?;
    }
    let prime = symmod::is_prime_module(s);
    let homogeneous = symmod::is_homogeneous_semisimple(s);
    need(prime == homogeneous, || format!("prime module={prime} homogeneous={homogeneous}"))?;
    if homogeneous {
        need(full, || "homogeneous but not full".into())?;
    }
    let one_dim_domain = r.is_domain() && rings::ring_facts(r).krull_dim == 1;
    if rings::is_hilbert(r) || one_dim_domain {
        need(v.p_radical == v.m_radical && v.m_radical == full, || {
            format!("P-radical={} M-radical={} full={full}", v.p_radical, v.m_radical)
        })?;
    }
    let c = [v.primeful, v.p_radical && dim0, v.m_radical && dim0, full && dim0];
    need(c.iter().all(|&x| x == c[0]), || format!("primeful/P/M/full with dim 0 disagree: {c:?}"))
}

/// Recorded verdicts for the named semisimple modules over `Z`.
fn semisimple_expected(inst: &Instance) -> Step {
    let s = symbolic(inst)?;
    let h = ModuleHandle::Symbolic(s.clone());
    let v = verdicts(&h);
    let full = lib(symmod::is_full_semisimple(s))?;
    let dim = lib(rings::quotient_dim(s.ring(), &symmod::ann(s)))?;
    let fams = s.families();
    let expected: (bool, bool, bool, bool, Option<u32>) = match fams {
        [PrimeSet::CofiniteMaximals { excluded }] if excluded.is_empty() && s.cyclics().is_empty() => {
            (true, true, true, false, Some(1))
        }
        [PrimeSet::CofiniteMaximals { excluded }] if excluded.len() == 1 && s.cyclics().is_empty() => {
            (false, false, false, false, Some(1))
        }
        [] => (true, true, true, true, Some(0)),
        _ => return skip("not a named semisimple module"),
    };
    let got = (full, v.m_radical, v.p_radical, v.primeful, dim);
    need(got == expected, || format!("(full, M, P, primeful, dim) = {got:?}, expected {expected:?}"))
}

fn spec_topology(inst: &Instance, bound: u64) -> Step {
    let m = finite(inst, bound)?;
    let subs = lib(fgmod::enumerate_submodules(&m, bound))?;
    let spectrum = lib(fgmod::prime_spectrum(&m, bound))?;
    let members = |n: &Submodule| -> Vec<usize> {
        let c = fgmod::colon(n);
        (0..spectrum.len()).filter(|&i| spectrum[i].1.contains(&c).unwrap_or(false)).collect()
    };
    let step = (subs.len() / 40).max(1);
    for n in subs.iter().step_by(step) {
        let rad = fgmod::prime_radical(n);
        let direct = members(n);
        need(direct == members(&rad), || format!("V(N) != V(rad N) at {:?}", n.generators()))?;
        need(spectop::v_submodule(n).members(&spectrum) == direct, || "descriptor membership differs".into())?;
    }
    let all = spectop::v_submodule(&m.zero_submodule()).members(&spectrum);
    need(all.len() == spectrum.len(), || "V(0) is not all of Spec(M)".into())
}

/// Primes to test membership against: the whole spectrum when finite, and
/// `(0)` plus the primes below 64 over `Z`.
fn test_primes(r: &Ring) -> Vec<Ideal> {
    match r.finite_spectrum() {
        Some(all) => all,
        None => std::iter::once(r.zero_ideal())
            .chain(arith::primes_up_to(64).into_iter().map(|p| r.ideal(p)))
            .collect(),
    }
}

fn closed_algebra(inst: &Instance) -> Step {
    let Instance::Ideals { ring: r, gens } = inst else { return skip("not an ideal triple") };
    if gens.len() != 3 {
        return skip("needs three ideals");
    }
    let ideals: Vec<Ideal> = gens.iter().map(|g| r.ideal(g.clone())).collect();
    let vs: Vec<ClosedSetR> = ideals.iter().map(|i| spectop::v_ideal(r, i).expect("same ring")).collect();
    let (a, b, c) = (&vs[0], &vs[1], &vs[2]);
    let u = |x: &ClosedSetR, y: &ClosedSetR| x.union(y).expect("same ring");
    let n = |x: &ClosedSetR, y: &ClosedSetR| x.intersection(y).expect("same ring");
    let sub = |x: &ClosedSetR, y: &ClosedSetR| x.is_subset(y).expect("same ring");
    let whole = ClosedSetR::whole(r);
    let empty = ClosedSetR::empty(r);
    let laws = [
        ("union commutes", u(a, b) == u(b, a)),
        ("intersection commutes", n(a, b) == n(b, a)),
        ("union associates", u(&u(a, b), c) == u(a, &u(b, c))),
        ("intersection associates", n(&n(a, b), c) == n(a, &n(b, c))),
        ("union idempotent", u(a, a) == *a),
        ("intersection idempotent", n(a, a) == *a),
        ("absorption", u(a, &n(a, b)) == *a && n(a, &u(a, b)) == *a),
        ("distributive", n(a, &u(b, c)) == u(&n(a, b), &n(a, c)) && u(a, &n(b, c)) == n(&u(a, b), &u(a, c))),
        ("identities", u(a, &empty) == *a && n(a, &whole) == *a && u(a, &whole) == whole && n(a, &empty) == empty),
        ("subset via union", sub(a, b) == (u(a, b) == *b) && sub(a, b) == (n(a, b) == *a)),
        (
            "product and sum",
            spectop::v_ideal(r, &ideals[0].product(&ideals[1]).expect("same ring")).expect("same ring") == u(a, b)
                && spectop::v_ideal(r, &ideals[0].sum(&ideals[1]).expect("same ring")).expect("same ring") == n(a, b),
        ),
        (
            "radical",
            spectop::v_ideal(r, &rings::radical_ideal(r, &ideals[0]).expect("same ring")).expect("same ring") == *a,
        ),
    ];
    for (name, ok) in laws {
        need(ok, || format!("{name} fails for {a}, {b}, {c}"))?;
    }
    for p in test_primes(r) {
        for (i, v) in vs.iter().enumerate() {
            let by_def = p.contains(&ideals[i]).expect("same ring");
            need(v.contains(&p) == by_def, || format!("{p} in V({}): descriptor {}, definition {by_def}", ideals[i], v.contains(&p)))?;
        }
        need(u(a, b).contains(&p) == (a.contains(&p) || b.contains(&p)), || format!("union membership at {p}"))?;
        need(n(a, b).contains(&p) == (a.contains(&p) && b.contains(&p)), || format!("intersection membership at {p}"))?;
        let d = spectop::d_basic(r, &gens[0]).expect("same ring");
        need(d.contains(&p) == !a.contains(&p), || format!("D(f) is not the complement at {p}"))?;
    }
    Ok(())
}

fn radical_formula(inst: &Instance, bound: u64) -> Step {
    let m = finite(inst, bound)?;
    for d in arith::divisors(m.exponent()) {
        let i = m.ring().ideal(BigInt::from(d));
        let ok = lib(fgmod::check_radical_formula(&m, &i))?;
        need(ok, || format!("radical formula fails at {i}"))?;
    }
    Ok(())
}

fn radical_formula_counterexample(inst: &Instance) -> Step {
    let h = handle(inst)?;
    let ModuleHandle::FinPres(m) = &h else { return skip("not a presentation") };
    let zero = m.ring().zero_ideal();
    let holds = lib(fgmod::check_radical_formula(m, &zero))?;
    need(!holds, || "radical formula holds at (0)".into())?;
    need(fgmod::check_p_radical(m).verdict, || "not P-radical".into())
}

fn truncation(inst: &Instance) -> Step {
    let s = symbolic(inst)?;
    if !matches!(s.ring(), Ring::Integers | Ring::IntegersModN(_)) {
        return skip("no finite stand-in over this ring");
    }
    let t = lib(symmod::truncate(s, 97, 3))?;
    if !t.gaps.is_empty() {
        return skip("truncation is lossy");
    }
    let a = ModuleHandle::Symbolic(s.clone());
    let b = ModuleHandle::FinPres(t.module.clone());
    need(a.ann() == b.ann(), || format!("Ann {} vs {}", a.ann(), b.ann()))?;
    let (va, vb) = (verdicts(&a), verdicts(&b));
    let pairs = [
        ("primeful", va.primeful, vb.primeful),
        ("P-radical", va.p_radical, vb.p_radical),
        ("M-radical", va.m_radical, vb.m_radical),
    ];
    for (name, x, y) in pairs {
        need(x == y, || format!("{name}: symbolic {x}, presentation {y}"))?;
    }
    need(spectop::same_subset(&a.realized_colons(), &b.realized_colons()), || {
        format!("realized colons {} vs {}", a.realized_colons(), b.realized_colons())
    })?;
    let rz = fgmod::colon(&fgmod::prime_radical(&t.module.zero_submodule()));
    need(s.radical_zero_colon() == rz, || format!("radical colon {} vs {rz}", s.radical_zero_colon()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generator::Presentation;

    fn fp(ring: Ring, gens: usize, relations: Vec<Vec<i64>>) -> Instance {
        Instance::FinPres(Presentation { ring, gens, relations })
    }

    #[test]
    fn hyperplanes_are_maximal() {
        let m = FinPresModule::over_integers(3, &[vec![2, 0, 0], vec![0, 6, 0]]).unwrap();
        for q in [2u64, 3, 5] {
            let s = hyperplane_submodule(&m, q).ok().unwrap().unwrap();
            assert!(index_is(&s, &BigUint::from(q)));
            assert_eq!(fgmod::colon(&s), Ring::Integers.ideal(q));
        }
    }

    #[test]
    fn spec_examples_pass() {
        let z12 = fp(Ring::Integers, 1, vec![vec![12]]);
        let z4z2 = fp(Ring::Integers, 2, vec![vec![4, 0], vec![0, 2]]);
        let zero = fp(Ring::Integers, 1, vec![vec![1]]);
        for inst in [&z12, &z4z2, &zero] {
            for c in [CheckId::Oracle, CheckId::Prop21, CheckId::Prop29, CheckId::Chain, CheckId::SpecTopology, CheckId::RadicalFormula] {
                assert_eq!(c.run(inst, 1000), Outcome::Pass, "{c} on {inst:?}");
            }
        }
        let ex26 = Instance::Symbolic(symmod::construct_prop27(&Ring::Integers).unwrap());
        let pr = Instance::Symbolic(SymbolicModule::builder(Ring::Integers).pruefer(5, 1).build().unwrap());
        for inst in [&ex26, &pr] {
            assert_eq!(CheckId::Prop29.run(inst, 1000), Outcome::Pass);
            assert_eq!(CheckId::Chain.run(inst, 1000), Outcome::Pass);
        }
        assert_eq!(CheckId::Prop27Certified.run(&ex26, 0), Outcome::Pass);
        assert_eq!(CheckId::Primeless.run(&pr, 0), Outcome::Pass);
        let l5 = Instance::Symbolic(symmod::construct_thm211(&Ring::localized(5u32).unwrap()).unwrap());
        assert_eq!(CheckId::Thm211Certified.run(&l5, 0), Outcome::Pass);
        let zz4 = fp(Ring::Integers, 2, vec![vec![0, 4]]);
        assert_eq!(CheckId::RadicalFormulaCounterexample.run(&zz4, 0), Outcome::Pass);
    }

    #[test]
    fn failures_are_detected() {
        // the formula holds on Z, so the discrepancy check must fail there
        let z = fp(Ring::Integers, 1, vec![]);
        assert!(CheckId::RadicalFormulaCounterexample.run(&z, 0).is_fail());
        let pr = Instance::Symbolic(SymbolicModule::builder(Ring::Integers).pruefer(5, 1).build().unwrap());
        assert!(CheckId::Prop27Certified.run(&pr, 0).is_fail());
    }
}
