use num_integer::Integer;

/// Reduce `x` into `0..n`.
pub(crate) fn modn(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `k² mod n`, computed without overflow for desk-scale inputs.
pub(crate) fn square_mod(k: u64, n: u64) -> u64 {
    ((k as u128 * k as u128) % n as u128) as u64
}

/// Whether `k² ≡ 1 (mod n)`.
pub(crate) fn squares_to_one(n: u64, k: u64) -> bool {
    square_mod(k, n) == 1 % n
}

/// Whether `k² ≡ -1 (mod n)`.
pub(crate) fn squares_to_minus_one(n: u64, k: u64) -> bool {
    square_mod(k, n) == (n - 1) % n
}
