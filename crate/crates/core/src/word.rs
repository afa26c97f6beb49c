//! Unsigned machine words used as residues.
//!
//! Every kernel in this crate is written against [`ModWord`] so the same code
//! runs on `u8` through `u128`. Products are reduced without ever needing a
//! wider type: if `a * b` would overflow the word, [`mul_mod`] falls back to
//! shift-and-add.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};

pub trait ModWord:
    PrimInt + Unsigned + Integer + Debug + Display + Hash + Send + Sync + 'static
{
}

impl<T> ModWord for T where
    T: PrimInt + Unsigned + Integer + Debug + Display + Hash + Send + Sync + 'static
{
}

/// Converts a small constant into `T`. Panics only if `T` cannot hold `v`,
/// which never happens for the constants used here (all below 256).
#[inline]
pub(crate) fn lit<T: ModWord>(v: u64) -> T {
    T::from(v).expect("constant does not fit in word type")
}

/// `(a + b) mod m` for `a, b < m`, without overflow.
#[inline]
pub fn add_mod<T: ModWord>(a: T, b: T, m: T) -> T {
    debug_assert!(a < m && b < m);
    let gap = m - b;
    if a >= gap {
        a - gap
    } else {
        a + b
    }
}

/// `(a - b) mod m` for `a, b < m`.
#[inline]
pub fn sub_mod<T: ModWord>(a: T, b: T, m: T) -> T {
    debug_assert!(a < m && b < m);
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// `(a * b) mod m` for `a, b < m`.
pub fn mul_mod<T: ModWord>(a: T, b: T, m: T) -> T {
    if let Some(p) = a.checked_mul(&b) {
        return p % m;
    }
    let mut acc = T::zero();
    let mut base = a;
    let mut e = b;
    while !e.is_zero() {
        if e & T::one() == T::one() {
            acc = add_mod(acc, base, m);
        }
        base = add_mod(base, base, m);
        e = e >> 1;
    }
    acc
}

/// `base^exp mod m`.
pub fn pow_mod<T: ModWord>(base: T, mut exp: u64, m: T) -> T {
    let mut acc = T::one() % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed 64-bit integer into `[0, m)`.
pub fn reduce_i64<T: ModWord>(v: i64, m: T) -> T {
    let mag = v.unsigned_abs();
    // m may be wider or narrower than u64.
    let r = match T::from(mag) {
        Some(x) => x % m,
        None => {
            let m64 = m.to_u64().expect("modulus narrower than magnitude fits u64");
            T::from(mag % m64).expect("remainder fits word")
        }
    };
    if v < 0 {
        (m - r) % m
    } else {
        r
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, or `None`
/// when `gcd(a, m) != 1`.
///
/// Bezout coefficients are tracked modulo `m`, so no signed type is needed.
pub fn mod_inverse<T: ModWord>(a: T, m: T) -> Option<T> {
    if m <= T::one() {
        return None;
    }
    let (mut old_r, mut r) = (a % m, m);
    let (mut old_s, mut s) = (T::one(), T::zero());
    while !r.is_zero() {
        let q = old_r / r;
        let next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        let next_s = sub_mod(old_s, mul_mod(q % m, s, m), m);
        old_s = s;
        s = next_s;
    }
    if old_r == T::one() {
        Some(old_s)
    } else {
        None
    }
}
