use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use pradical_core::exactlin::{hnf, snf, IntMatrix, IntegerLattice};

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn mat(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn lat(n: usize, gens: &[&[i64]]) -> IntegerLattice {
    IntegerLattice::from_generators(n, &gens.iter().map(|g| v(g)).collect::<Vec<_>>()).unwrap()
}

fn span(m: &IntMatrix) -> IntegerLattice {
    IntegerLattice::from_generators(m.rows(), &m.columns()).unwrap()
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from gcds of k-by-k minors.
fn factors_by_minors(rows: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (rows.len(), rows.first().map_or(0, |x| x.len()));
    let mut divisors = vec![1i128];
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| if divisors[k] == 0 { 0 } else { divisors[k] / divisors[k - 1] })
        .collect()
}

/// Lattice points in a box, from small coefficient combinations.
fn box_points(gens: &[Vec<i64>], coeff: i64, window: i64) -> std::collections::BTreeSet<Vec<i64>> {
    let n = gens[0].len();
    let mut out = std::collections::BTreeSet::new();
    let mut cs = vec![-coeff; gens.len()];
    loop {
        let p: Vec<i64> = (0..n).map(|i| gens.iter().zip(&cs).map(|(g, c)| g[i] * c).sum()).collect();
        if p.iter().all(|x| x.abs() <= window) {
            out.insert(p);
        }
        let mut i = 0;
        loop {
            if i == cs.len() {
                return out;
            }
            cs[i] += 1;
            if cs[i] <= coeff {
                break;
            }
            cs[i] = -coeff;
            i += 1;
        }
    }
}

#[test]
fn hnf_examples() {
    let d = mat(&[vec![2, 0], vec![0, 12]]);
    assert_eq!(hnf(&d), d);
    assert_eq!(hnf(&mat(&[vec![4, 6]])), mat(&[vec![2, 0]]));
    let m = mat(&[vec![2, 4], vec![6, 8]]);
    let h = hnf(&m);
    let (a, b) = (span(&m), span(&h));
    assert!(a.contains_lattice(&b).unwrap() && b.contains_lattice(&a).unwrap());
}

#[test]
fn snf_examples() {
    let f = |rows: &[Vec<i64>]| snf(&mat(rows)).invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    assert_eq!(f(&[vec![12]]), ["12"]);
    assert_eq!(f(&[vec![2, 4], vec![6, 8]]), ["2", "4"]);
    assert_eq!(f(&[vec![2, 4], vec![4, 8]]), ["2", "0"]);
    assert_eq!(factors_by_minors(&[vec![2, 4], vec![6, 8]]), [2, 4]);
    assert_eq!(factors_by_minors(&[vec![2, 4], vec![4, 8]]), [2, 0]);
}

#[test]
fn lattice_examples() {
    let l = lat(2, &[&[2, 6], &[4, 8]]);
    assert_eq!(l.sum(&l).unwrap(), l);
    assert_eq!(lat(1, &[&[2]]).sum(&lat(1, &[&[3]])).unwrap(), IntegerLattice::full(1));
    let s = IntegerLattice::scaled(2, &BigInt::from(4)).sum(&lat(2, &[&[2, 2]])).unwrap();
    for g in [[4, 0], [0, 4], [2, 2]] {
        assert!(s.contains(&v(&g)).unwrap());
    }
    assert!(!s.contains(&v(&[2, 0])).unwrap());

    assert_eq!(lat(1, &[&[2]]).intersect(&lat(1, &[&[3]])).unwrap(), lat(1, &[&[6]]));
    assert_eq!(l.intersect(&IntegerLattice::full(2)).unwrap(), l);
    let a = lat(2, &[&[2, 0], &[0, 1]]);
    let b = lat(2, &[&[1, 0], &[0, 3]]);
    let i = a.intersect(&b).unwrap();
    assert_eq!(i, lat(2, &[&[2, 0], &[0, 3]]));
    for x in -8i64..=8 {
        for y in -8i64..=8 {
            let inside = x % 2 == 0 && y % 3 == 0;
            assert_eq!(i.contains(&v(&[x, y])).unwrap(), inside);
        }
    }
}

#[test]
fn membership_examples() {
    let l = lat(2, &[&[2, 6], &[4, 8]]);
    assert!(l.contains(&v(&[0, 0])).unwrap());
    assert!(!lat(1, &[&[4]]).contains(&v(&[6])).unwrap());
    let pts = box_points(&[vec![2, 6], vec![4, 8]], 20, 10);
    assert_eq!(l.contains(&v(&[6, 0])).unwrap(), pts.contains(&vec![6, 0]));
    for x in -10..=10 {
        for y in -10..=10 {
            assert_eq!(l.contains(&v(&[x, y])).unwrap(), pts.contains(&vec![x, y]), "({x},{y})");
        }
    }
    assert!(l.contains(&v(&[1])).is_err());
}

#[test]
fn saturation_examples() {
    assert_eq!(lat(1, &[&[2]]).saturate(), IntegerLattice::full(1));
    assert_eq!(lat(2, &[&[2, 2]]).saturate(), lat(2, &[&[1, 1]]));
    assert_eq!(lat(2, &[&[2, 0], &[0, 3]]).saturate(), IntegerLattice::full(2));
}

#[test]
fn degenerate_shapes() {
    let e = IntMatrix::zeros(0, 0);
    assert_eq!(hnf(&e).cols(), 0);
    assert!(snf(&e).invariant_factors.is_empty());
    let z = IntegerLattice::zero(3);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.saturate(), z);
    assert!(z.contains(&v(&[0, 0, 0])).unwrap());
    assert!(IntegerLattice::zero(2).sum(&IntegerLattice::zero(3)).is_err());
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r))
}

proptest! {
    #[test]
    fn hnf_is_idempotent_and_keeps_the_span(rows in small_matrix()) {
        let m = mat(&rows);
        let h = hnf(&m);
        prop_assert_eq!(hnf(&h), h.clone());
        let l = span(&h);
        for c in m.columns() {
            prop_assert!(l.contains(&c).unwrap());
        }
        let lm = span(&m);
        for c in h.columns() {
            prop_assert!(lm.contains(&c).unwrap());
        }
    }

    #[test]
    fn snf_matches_determinantal_divisors(rows in small_matrix()) {
        let s = snf(&mat(&rows));
        let got: Vec<i128> = s.invariant_factors.iter().map(|x| x.to_string().parse().unwrap()).collect();
        prop_assert_eq!(&got, &factors_by_minors(&rows));
        for w in s.invariant_factors.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
            }
        }
    }

    #[test]
    fn absorption(a in small_matrix(), b in small_matrix()) {
        let n = a.len().max(b.len());
        let pad = |rows: &Vec<Vec<i64>>| {
            let cols: Vec<Vec<BigInt>> = (0..rows[0].len())
                .map(|j| (0..n).map(|i| BigInt::from(rows.get(i).map_or(0, |r| r[j]))).collect())
                .collect();
            IntegerLattice::from_generators(n, &cols).unwrap()
        };
        let (la, lb) = (pad(&a), pad(&b));
        let s = la.sum(&lb).unwrap();
        prop_assert_eq!(la.intersect(&s).unwrap(), la.clone());
        prop_assert!(s.contains_lattice(&la).unwrap() && s.contains_lattice(&lb).unwrap());
        let i = la.intersect(&lb).unwrap();
        prop_assert_eq!(la.sum(&i).unwrap(), la.clone());
    }

    #[test]
    fn saturation_is_a_closure(a in small_matrix(), b in small_matrix()) {
        let n = a.len();
        let la = span(&mat(&a));
        let extra: Vec<Vec<BigInt>> = b.iter().take(1).map(|r| (0..n).map(|i| BigInt::from(*r.get(i).unwrap_or(&0))).collect()).collect();
        let lb = la.sum(&IntegerLattice::from_generators(n, &extra).unwrap()).unwrap();
        let (sa, sb) = (la.saturate(), lb.saturate());
        prop_assert!(sa.contains_lattice(&la).unwrap());
        prop_assert!(sb.contains_lattice(&sa).unwrap());
        prop_assert_eq!(sa.saturate(), sa.clone());
        prop_assert_eq!(sa.rank(), la.rank());
    }
}
