//! Integer number theory on arbitrary-precision naturals: primality,
//! factorization, squarefree kernels and divisor enumeration.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first twenty primes as bases. Deterministic for
/// every input below 3.3 * 10^24, which covers anything this crate builds.
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in SMALL_PRIMES.iter() {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

fn pollard_brent(n: &BigUint, seed: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let c = BigUint::from(seed);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32 + seed as u32);
    let m = 64u32;
    let mut g = one.clone();
    let mut r = 1u64;
    let mut q = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0u64;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min((r - k) as u32) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m as u64;
        }
        r *= 2;
        if r > 1 << 24 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g > one {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    for seed in 1u64.. {
        if let Some(d) = pollard_brent(&n, seed) {
            let other = &n / &d;
            split_into(d, out);
            split_into(other, out);
            return;
        }
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs. Zero and one
/// have the empty factorization.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes = Vec::new();
    if n.is_zero() {
        return Vec::new();
    }
    let mut rest = n.clone();
    let mut p = 2u32;
    while p < 10_000 {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            primes.push(bp.clone());
            rest /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(rest, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

pub fn prime_divisors(n: &BigUint) -> Vec<BigUint> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Squarefree kernel: the product of the distinct primes dividing `n`.
/// `rad(0) = 0`.
pub fn squarefree_kernel(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    prime_divisors(n).into_iter().product()
}

/// All positive divisors of a nonzero `n`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero(), "divisors of zero");
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(current.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

pub fn is_squarefree(n: &BigUint) -> bool {
    !n.is_zero() && factorize(n).iter().all(|(_, e)| *e == 1)
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &BigUint) -> BigUint {
    let mut c = n + 1u32;
    while !is_prime(&c) {
        c += 1u32;
    }
    c
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        BigUint::zero()
    } else {
        a.lcm(b)
    }
}

pub fn to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
