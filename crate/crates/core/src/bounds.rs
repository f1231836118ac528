//! Logarithmic bounds decided exactly.
//!
//! Every inequality of the form `a log x >= b log y` is rewritten as
//! `x^a >= y^b` and compared with big integers. Logs are base 2; the `f64`
//! helpers exist only for display.

use num_bigint::BigUint;

fn pow(base: usize, exp: usize) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// `base^exp >= rhs`.
pub fn pow_at_least(base: usize, exp: usize, rhs: usize) -> bool {
    pow(base, exp) >= BigUint::from(rhs)
}

/// Long path bound for k-critical graphs: `len >= log n / log(k-2)`.
pub fn dfs_path_bound_met(len: usize, n: usize, k: usize) -> bool {
    k >= 4 && pow_at_least(k - 2, len, n)
}

/// Least `h` with `(k-2)^h >= n`.
pub fn dfs_path_bound(n: usize, k: usize) -> usize {
    assert!(k >= 4, "needs k >= 4");
    (0..).find(|&h| pow_at_least(k - 2, h, n)).expect("unbounded search")
}

/// `len >= log n / (100 log k)`.
pub fn thm1_bound_met(len: usize, n: usize, k: usize) -> bool {
    pow_at_least(k, 100 * len, n)
}

/// `len >= log n / (200 log k)`.
pub fn coro3_bound_met(len: usize, n: usize, k: usize) -> bool {
    pow_at_least(k, 200 * len, n)
}

/// `circ <= 2(k-1)/log(denom) * log n + 2k`, i.e. `denom^(circ-2k) <= n^(2(k-1))`.
pub fn gallai_upper_met(circ: usize, n: usize, k: usize, denom: usize) -> bool {
    circ <= 2 * k || pow(denom, circ - 2 * k) <= pow(n, 2 * (k - 1))
}

/// `len <= 4(k-1)/log(k-2) * log n`.
pub fn path_upper_met(len: usize, n: usize, k: usize) -> bool {
    pow(k - 2, len) <= pow(n, 4 * (k - 1))
}

/// `len >= (1/2) log m / log k`.
pub fn torso_path_bound_met(len: usize, m: usize, k: usize) -> bool {
    pow_at_least(k, 2 * len, m)
}

/// `circ >= 2 sqrt(len)`.
pub fn dirac_voss_met(circ: usize, len: usize) -> bool {
    circ * circ >= 4 * len
}

/// `2 l log k + log phi_t >= log phi_total`.
pub fn heavy_vertex_met(depth: usize, k: usize, phi_t: u64, phi_total: u64) -> bool {
    pow(k, 2 * depth) * BigUint::from(phi_t) >= BigUint::from(phi_total)
}

/// `(k-2)^(j-2) (k-1)^s` for `j >= 2`, `(k-1)^s` for `j = 1`, `1` at the root.
pub fn level_bound(j: usize, k: usize, s: usize) -> BigUint {
    match j {
        0 => BigUint::from(1u32),
        1 => pow(k - 1, s),
        _ => pow(k - 2, j - 2) * pow(k - 1, s),
    }
}

pub fn log2(x: f64) -> f64 {
    x.log2()
}

pub fn thm1_value(n: usize, k: usize) -> f64 {
    log2(n as f64) / (100.0 * log2(k as f64))
}

pub fn gallai_upper_value(n: usize, k: usize, denom: usize) -> f64 {
    2.0 * (k as f64 - 1.0) / log2(denom as f64) * log2(n as f64) + 2.0 * k as f64
}

pub fn path_upper_value(n: usize, k: usize) -> f64 {
    4.0 * (k as f64 - 1.0) / log2(k as f64 - 2.0) * log2(n as f64)
}
