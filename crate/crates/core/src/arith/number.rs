//! Small integer helpers: square roots, square-free parts, factorization.

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// `Some(root)` when `n` is a perfect square.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n as u64);
    (r * r == n as u64).then_some(r as i64)
}

pub fn is_square(n: i64) -> bool {
    exact_sqrt(n).is_some()
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes a nonzero `n` as `scale² · core` with `core` square-free
/// (sign carried by `core`). Returns `(scale, core)`.
pub fn square_free_decompose(n: i64) -> (i64, i64) {
    assert!(n != 0, "square-free decomposition of zero");
    let sign = n.signum();
    let mut scale = 1i64;
    let mut core = 1i64;
    for (p, e) in factorize(n.unsigned_abs()) {
        let p = p as i64;
        scale *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    (scale, sign * core)
}

pub fn is_square_free(n: i64) -> bool {
    n != 0 && square_free_decompose(n).0 == 1
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// `Some((p, l))` with `n = p^l`, `l >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, l)] => Some((*p, *l)),
        _ => None,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=isqrt(n)).filter(|d| n.is_multiple_of(*d)).collect();
    let upper: Vec<u64> = out
        .iter()
        .rev()
        .map(|d| n / d)
        .filter(|d| d * d != n)
        .collect();
    out.extend(upper);
    out
}
