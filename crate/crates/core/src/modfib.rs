//! Fibonacci and Lucas numbers reduced modulo `m`, Pisano periods, and the
//! mod-10 divisibility facts everything else builds on.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{add_mod, lit, mul_mod, sub_mod, ModWord};

/// A least nonnegative residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueOf<T> {
    value: T,
    modulus: T,
}

impl<T: ModWord> ResidueOf<T> {
    pub fn new(value: T, modulus: T) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(&self) -> T {
        self.value
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }
}

impl<T: ModWord> std::fmt::Display for ResidueOf<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub(crate) fn check_modulus<T: ModWord>(m: T) -> Result<()> {
    if m < lit(2) {
        Err(Error::InvalidModulus(m.to_string()))
    } else {
        Ok(())
    }
}

/// `(F_n, F_{n+1}) mod m` by iterative fast doubling over the bits of `n`.
fn fib_pair<T: ModWord>(n: u64, m: T) -> (T, T) {
    let mut a = T::zero(); // F_i
    let mut b = T::one() % m; // F_{i+1}
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // F_{2i} = F_i (2 F_{i+1} - F_i), F_{2i+1} = F_i^2 + F_{i+1}^2
        let twice_b = add_mod(b, b, m);
        let c = mul_mod(a, sub_mod(twice_b, a, m), m);
        let d = add_mod(mul_mod(a, a, m), mul_mod(b, b, m), m);
        if (n >> bit) & 1 == 1 {
            a = d;
            b = add_mod(c, d, m);
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

fn fib_raw<T: ModWord>(n: i64, m: T) -> T {
    let mag = n.unsigned_abs();
    let f = fib_pair(mag, m).0;
    // F_{-n} = (-1)^{n+1} F_n
    if n < 0 && mag % 2 == 0 {
        sub_mod(T::zero(), f, m)
    } else {
        f
    }
}

/// `F_n mod m` for any signed index `n`.
pub fn fib_mod<T: ModWord>(n: i64, m: T) -> Result<ResidueOf<T>> {
    check_modulus(m)?;
    Ok(ResidueOf {
        value: fib_raw(n, m),
        modulus: m,
    })
}

/// `L_n mod m`, using `L_n = F_{n-1} + F_{n+1}`.
pub fn lucas_mod<T: ModWord>(n: i64, m: T) -> Result<ResidueOf<T>> {
    check_modulus(m)?;
    // Rewritten so that no index ever leaves the i64 range.
    let value = if n >= 0 {
        let prev = fib_raw(n - 1, m);
        add_mod(fib_raw(n, m), add_mod(prev, prev, m), m)
    } else {
        let next = fib_raw(n + 1, m);
        sub_mod(add_mod(next, next, m), fib_raw(n, m), m)
    };
    Ok(ResidueOf { value, modulus: m })
}

/// One full period of the Fibonacci sequence modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PisanoPeriodOf<T> {
    modulus: T,
    period: Vec<T>,
}

impl<T: ModWord> PisanoPeriodOf<T> {
    pub fn modulus(&self) -> T {
        self.modulus
    }

    /// The Pisano period `π(m)`.
    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        self.period.is_empty()
    }

    /// Residues `F_0 .. F_{π(m)-1}` modulo `m`.
    pub fn residues(&self) -> &[T] {
        &self.period
    }

    /// `F_n mod m` by lookup, for any signed `n`.
    pub fn at(&self, n: i64) -> T {
        let len = self.period.len() as i64;
        self.period[n.rem_euclid(len) as usize]
    }
}

/// Computes `π(m)` by iterating the pair recurrence until `(0, 1)` recurs.
pub fn pisano_period<T: ModWord>(m: T) -> Result<PisanoPeriodOf<T>> {
    check_modulus(m)?;
    let m_wide = m.to_u128().unwrap_or(u128::MAX);
    let cap = m_wide
        .saturating_mul(m_wide)
        .saturating_sub(1)
        .saturating_mul(2)
        .saturating_add(2);

    let (zero, one) = (T::zero(), T::one());
    let mut period = vec![zero];
    let (mut a, mut b) = (zero, one);
    let mut steps: u128 = 0;
    loop {
        period.push(b);
        let c = add_mod(a, b, m);
        a = b;
        b = c;
        steps += 1;
        assert!(steps <= cap, "Pisano period search exceeded 2(m^2-1)+2 steps");
        if a == zero && b == one {
            break;
        }
    }
    // The last push was F_{π(m)} = 0.
    period.pop();
    Ok(PisanoPeriodOf { modulus: m, period })
}

/// The mod-10 period, computed once.
pub(crate) fn mod10_table() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        pisano_period(10u8)
            .expect("10 is a valid modulus")
            .residues()
            .to_vec()
    })
}

/// `F_n mod 10` for any signed `n`.
pub fn fib10(n: i64) -> u8 {
    mod10_table()[n.rem_euclid(60) as usize]
}

/// Which of the three mod-10 digit classes `F_n` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueCharacter {
    /// `F_n ≡ 0 (mod 10)`, exactly when `15 | n`.
    Zero,
    /// `F_n ≡ 5 (mod 10)`, exactly when `5 | n` but `15 ∤ n`.
    Five,
    Other,
}

pub fn residue_character(n: i64) -> ResidueCharacter {
    if n % 15 == 0 {
        ResidueCharacter::Zero
    } else if n % 5 == 0 {
        ResidueCharacter::Five
    } else {
        ResidueCharacter::Other
    }
}

/// `F_n mod 10 + F_{n+30} mod 10` as a plain integer: 0 when `15 | n`,
/// otherwise 10.
pub fn antipodal_sum(n: i64) -> u32 {
    let base = n.rem_euclid(60);
    u32::from(fib10(base)) + u32::from(fib10(base + 30))
}

/// `7^j · F_n mod 10`, the value `F_{n+15j}` must take.
pub fn seven_power_shift(n: i64, j: u64) -> u8 {
    let seven = crate::word::pow_mod(7u8, j, 10);
    mul_mod(seven, fib10(n), 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Signed recurrence run forwards and backwards from (F_0, F_1) = (0, 1),
    /// on plain i128 values; only valid for small |n|.
    fn naive_fib(n: i64) -> i128 {
        let (mut a, mut b): (i128, i128) = (0, 1);
        if n >= 0 {
            for _ in 0..n {
                let c = a + b;
                a = b;
                b = c;
            }
            a
        } else {
            // F_{i-1} = F_{i+1} - F_i
            for _ in 0..(-n) {
                let prev = b - a;
                b = a;
                a = prev;
            }
            a
        }
    }

    #[test]
    fn examples() {
        assert_eq!(fib_mod(7, 10u32).unwrap().value(), 3);
        assert_eq!(fib_mod(0, 10u32).unwrap().value(), 0);
        assert_eq!(naive_fib(-4), -3);
        assert_eq!(fib_mod(-4, 10u32).unwrap().value(), 7);
        assert_eq!(lucas_mod(0, 10u32).unwrap().value(), 2);
        assert_eq!(lucas_mod(4, 10u32).unwrap().value(), 7);
        assert_eq!(lucas_mod(1, 10u32).unwrap().value(), 1);
    }

    #[test]
    fn invalid_modulus() {
        assert!(matches!(fib_mod(3, 1u32), Err(Error::InvalidModulus(_))));
        assert!(matches!(fib_mod(3, 0u64), Err(Error::InvalidModulus(_))));
        assert!(lucas_mod(3, 1u8).is_err());
        assert!(pisano_period(1u16).is_err());
        assert!(ResidueOf::new(5u32, 1).is_err());
    }

    #[test]
    fn matches_naive_for_small_indices() {
        for m in 2u64..=30 {
            for n in -90i64..=90 {
                let want = naive_fib(n).rem_euclid(m as i128) as u64;
                assert_eq!(fib_mod(n, m).unwrap().value(), want, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn lucas_matches_definition() {
        for n in -100i64..=100 {
            let l = (naive_fib(n - 1) + naive_fib(n + 1)).rem_euclid(10) as u8;
            assert_eq!(lucas_mod(n, 10u8).unwrap().value(), l, "n={n}");
        }
    }

    #[test]
    fn extreme_indices_do_not_panic() {
        for n in [i64::MIN, i64::MIN + 1, i64::MAX, i64::MAX - 1] {
            let f = fib_mod(n, 10u64).unwrap().value();
            assert_eq!(f as u8, fib10(n));
            lucas_mod(n, 1_000_000_007u64).unwrap();
        }
    }

    #[test]
    fn pisano_small_cases() {
        let p2 = pisano_period(2u8).unwrap();
        assert_eq!(p2.residues(), &[0, 1, 1]);
        let p8 = pisano_period(8u32).unwrap();
        assert_eq!(p8.residues(), &[0, 1, 1, 2, 3, 5, 0, 5, 5, 2, 7, 1]);
        assert_eq!(pisano_period(10u64).unwrap().len(), 60);
    }

    #[test]
    fn residue_new_reduces() {
        let r = ResidueOf::new(23u32, 10).unwrap();
        assert_eq!((r.value(), r.modulus()), (3, 10));
        assert_eq!(r.to_string(), "3 (mod 10)");
    }

    #[test]
    fn characters() {
        assert_eq!(residue_character(15), ResidueCharacter::Zero);
        assert_eq!(residue_character(25), ResidueCharacter::Five);
        assert_eq!(residue_character(7), ResidueCharacter::Other);
        assert_eq!(residue_character(-30), ResidueCharacter::Zero);
    }

    #[test]
    fn antipodal_examples() {
        assert_eq!(antipodal_sum(0), 0);
        assert_eq!(antipodal_sum(1), 10);
        assert_eq!(antipodal_sum(45), 0);
    }
}
