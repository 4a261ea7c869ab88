//! Integer helpers: gcd/inverse arithmetic mod `3^m - 1` and exact
//! factorization of group orders.
//!
//! Orders here fit in `u64` (the largest is `3^40 - 1`), so everything is done
//! with machine integers, widening to `u128` for products.  Factoring uses
//! trial division for small primes and Pollard's rho for the rest, with a
//! deterministic Miller-Rabin test that is exact for all 64-bit inputs.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// `a * b mod n` without overflow.
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `a^k mod n` without overflow.
pub fn pow_mod(mut a: u64, mut k: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut r = 1u64;
    a %= n;
    while k > 0 {
        if k & 1 == 1 {
            r = mul_mod(r, a, n);
        }
        a = mul_mod(a, a, n);
        k >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // These twelve bases are a known deterministic set for the 64-bit range.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// One Pollard-rho split of an odd composite `n` (no small factors).
fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of `n` as sorted `(prime, exponent)` pairs.
///
/// Trial division up to 10^6 handles small factors; Pollard's rho splits any
/// surviving cofactor, which is plenty for orders up to `3^40 - 1`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    let mut d = 2u64;
    while d <= 1_000_000 && d * d <= n {
        while n.is_multiple_of(d) {
            push(d, &mut out);
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Recursive rho on whatever survives trial division.
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(v) = stack.pop() {
        if is_prime(v) {
            push(v, &mut out);
        } else {
            let f = pollard_rho(v);
            stack.push(f);
            stack.push(v / f);
        }
    }
    out.sort_unstable();
    out
}
