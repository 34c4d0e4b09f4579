//! Greedy shrinking of failing instances.

use num_bigint::BigInt;

use crate::rings::PrimeSet;
use crate::symmod::{CyclicPart, PrueferPart, Rank, SymbolicModule};

use super::generator::{Instance, Presentation};

/// Smaller variants of an instance, most aggressive first.
pub fn candidates(inst: &Instance) -> Vec<Instance> {
    match inst {
        Instance::FinPres(p) => presentation_candidates(p).into_iter().map(Instance::FinPres).collect(),
        Instance::Symbolic(m) => symbolic_candidates(m).into_iter().map(Instance::Symbolic).collect(),
        Instance::Ideals { ring, gens } => {
            let mut out = Vec::new();
            for i in 0..gens.len() {
                let x = &gens[i];
                let two = BigInt::from(2);
                for y in [BigInt::from(0), x / &two, -x] {
                    if &y != x && (y.magnitude() < x.magnitude() || (y.magnitude() == x.magnitude() && y > *x)) {
                        let mut g = gens.clone();
                        g[i] = y;
                        out.push(Instance::Ideals { ring: ring.clone(), gens: g });
                    }
                }
            }
            out
        }
    }
}

fn presentation_candidates(p: &Presentation) -> Vec<Presentation> {
    let mut out = Vec::new();
    if p.gens > 1 {
        for j in 0..p.gens {
            let relations = p
                .relations
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            out.push(Presentation { ring: p.ring.clone(), gens: p.gens - 1, relations });
        }
    }
    for i in 0..p.relations.len() {
        let mut relations = p.relations.clone();
        relations.remove(i);
        out.push(Presentation { ring: p.ring.clone(), gens: p.gens, relations });
    }
    for i in 0..p.relations.len() {
        for j in 0..p.gens {
            let x = p.relations[i][j];
            let mut smaller = vec![];
            if x != 0 {
                smaller.push(0);
            }
            if x.abs() > 1 {
                smaller.push(x / 2);
                smaller.push(x - x.signum());
            }
            if x < 0 {
                smaller.push(-x);
            }
            for y in smaller {
                let mut relations = p.relations.clone();
                relations[i][j] = y;
                out.push(Presentation { ring: p.ring.clone(), gens: p.gens, relations });
            }
        }
    }
    out
}

fn symbolic_candidates(m: &SymbolicModule) -> Vec<SymbolicModule> {
    let ring = m.ring().clone();
    let free = m.free_rank();
    let cyclics = m.cyclics().to_vec();
    let families = m.families().to_vec();
    let pruefer = m.pruefer().to_vec();
    let mut out = Vec::new();
    let mut push = |f: Rank, c: Vec<CyclicPart>, fam: Vec<PrimeSet>, d: Vec<PrueferPart>| {
        if let Ok(s) = SymbolicModule::new(ring.clone(), f, c, fam, d) {
            if &s != m {
                out.push(s);
            }
        }
    };
    for i in 0..cyclics.len() {
        let mut c = cyclics.clone();
        c.remove(i);
        push(free, c, families.clone(), pruefer.clone());
    }
    for i in 0..families.len() {
        let mut f = families.clone();
        f.remove(i);
        push(free, cyclics.clone(), f, pruefer.clone());
    }
    for i in 0..pruefer.len() {
        let mut d = pruefer.clone();
        d.remove(i);
        push(free, cyclics.clone(), families.clone(), d);
    }
    match free {
        Rank::Countable => push(Rank::Finite(1), cyclics.clone(), families.clone(), pruefer.clone()),
        Rank::Finite(r) if r > 0 => {
            push(Rank::Finite(0), cyclics.clone(), families.clone(), pruefer.clone());
            push(Rank::Finite(r - 1), cyclics.clone(), families.clone(), pruefer.clone());
        }
        _ => {}
    }
    for i in 0..cyclics.len() {
        if cyclics[i].mult > 1 {
            let mut c = cyclics.clone();
            c[i].mult = 1;
            push(free, c, families.clone(), pruefer.clone());
        }
        if cyclics[i].k > 1 {
            let mut c = cyclics.clone();
            c[i].k -= 1;
            push(free, c, families.clone(), pruefer.clone());
        }
    }
    for i in 0..pruefer.len() {
        if pruefer[i].mult > 1 {
            let mut d = pruefer.clone();
            d[i].mult = 1;
            push(free, cyclics.clone(), families.clone(), d);
        }
    }
    for (i, fam) in families.iter().enumerate() {
        let members: Vec<_> = match fam {
            PrimeSet::Finite(s) => s.iter().cloned().collect(),
            PrimeSet::CofiniteMaximals { excluded } => excluded.iter().cloned().collect(),
        };
        for q in &members {
            let smaller = match fam {
                PrimeSet::Finite(s) => PrimeSet::Finite(s.iter().filter(|x| *x != q).cloned().collect()),
                PrimeSet::CofiniteMaximals { excluded } => {
                    PrimeSet::CofiniteMaximals { excluded: excluded.iter().filter(|x| *x != q).cloned().collect() }
                }
            };
            let mut f = families.clone();
            f[i] = smaller;
            push(free, cyclics.clone(), f, pruefer.clone());
        }
    }
    out
}

/// Repeatedly replaces `inst` by its first candidate that still fails,
/// until none does or the step budget runs out.
pub fn shrink<F>(inst: Instance, fails: F) -> Instance
where
    F: Fn(&Instance) -> bool,
{
    let mut current = inst;
    let mut budget = 2000usize;
    'outer: while budget > 0 {
        for c in candidates(&current) {
            budget = budget.saturating_sub(1);
            if fails(&c) {
                current = c;
                continue 'outer;
            }
            if budget == 0 {
                break;
            }
        }
        break;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    #[test]
    fn shrinks_to_a_minimal_witness() {
        // fails whenever the module has an element of order 4
        let fails = |i: &Instance| match i {
            Instance::FinPres(p) => p
                .build()
                .map(|m| m.torsion_invariants().iter().any(|t| (t % 4u32) == 0u32.into()))
                .unwrap_or(false),
            _ => false,
        };
        let start = Instance::FinPres(Presentation {
            ring: Ring::Integers,
            gens: 3,
            relations: vec![vec![12, 6, 0], vec![0, 18, 3], vec![0, 0, 20]],
        });
        assert!(fails(&start));
        let small = shrink(start, fails);
        assert!(fails(&small));
        assert!(candidates(&small).iter().all(|c| !fails(c)));
        let Instance::FinPres(p) = &small else { unreachable!() };
        assert_eq!(p.gens, 1);
    }

    #[test]
    fn shrinks_symbolic_summands() {
        let m = SymbolicModule::builder(Ring::Integers)
            .cyclic(3, 2, 2)
            .cyclic(5, 1, 1)
            .pruefer(5, 1)
            .family_cofinite(&[2])
            .build()
            .unwrap();
        let fails = |i: &Instance| match i {
            Instance::Symbolic(s) => !s.pruefer().is_empty(),
            _ => false,
        };
        let small = shrink(Instance::Symbolic(m), fails);
        let Instance::Symbolic(s) = small else { unreachable!() };
        assert_eq!(s.to_string(), "Z(5^∞) over Z");
    }
}
