//! Units modulo `n`, and the shift `N_{k,r}` that aligns a full-circle
//! subsequence (`gcd(r, 60) = 1`) with the parent mod-10 period.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modfib::{check_modulus, fib10, mod10_table};
use crate::subseq::CIRCLE;
use crate::word::{mod_inverse, ModWord};

/// The multiplicative group `U(n)` with its inverse table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroupOf<T> {
    modulus: T,
    elements: Vec<T>,
    inverses: Vec<T>,
}

impl<T: ModWord> UnitGroupOf<T> {
    pub fn modulus(&self) -> T {
        self.modulus
    }

    /// Units in increasing order.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// `φ(n)`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, u: T) -> bool {
        self.elements.binary_search(&u).is_ok()
    }

    pub fn inverse(&self, u: T) -> Option<T> {
        self.elements
            .binary_search(&u)
            .ok()
            .map(|i| self.inverses[i])
    }

    /// `(u, u^{-1})` pairs in element order.
    pub fn pairs(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.elements.iter().copied().zip(self.inverses.iter().copied())
    }
}

pub fn unit_group<T: ModWord>(n: T) -> Result<UnitGroupOf<T>> {
    check_modulus(n)?;
    let mut elements = Vec::new();
    let mut inverses = Vec::new();
    let mut u = T::one();
    while u < n {
        if let Some(inv) = mod_inverse(u, n) {
            elements.push(u);
            inverses.push(inv);
        }
        u = u + T::one();
    }
    Ok(UnitGroupOf {
        modulus: n,
        elements,
        inverses,
    })
}

/// `ind_3(u)` in `U(10)`: the `i ∈ {0,1,2,3}` with `3^i ≡ u (mod 10)`.
pub fn index_log(u: u32) -> Result<u32> {
    match u {
        1 => Ok(0),
        3 => Ok(1),
        9 => Ok(2),
        7 => Ok(3),
        _ => Err(Error::NotAUnit {
            value: u.to_string(),
            modulus: 10,
        }),
    }
}

fn check_k(k: u32) -> Result<()> {
    if k >= CIRCLE {
        Err(Error::InvalidArgument(format!(
            "start index k={k} must lie in [0, 59]"
        )))
    } else {
        Ok(())
    }
}

fn inverse_mod60(r: u32) -> Result<u32> {
    mod_inverse(r, CIRCLE).ok_or(Error::NotAUnit {
        value: r.to_string(),
        modulus: u64::from(CIRCLE),
    })
}

/// Position `j_0 ∈ [0, 14]` of the first zero of `F_{k + rj} mod 10`,
/// from `j_0 ≡ r^{-1}(-k) (mod 15)`.
pub fn first_zero_index(k: u32, r: u32) -> Result<u32> {
    check_k(k)?;
    // r in U(60) means r mod 15 is a unit mod 15 too.
    inverse_mod60(r)?;
    let r_inv15 = mod_inverse(r % 15, 15).expect("units of 60 reduce to units of 15");
    Ok(r_inv15 * ((15 - k % 15) % 15) % 15)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Term `j` equals `F_{N + j} mod 10`.
    ForwardComplete,
    /// Term `j` equals `F_{N - j} mod 10`.
    ReverseComplete,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::ForwardComplete => "forward",
            Direction::ReverseComplete => "reverse",
        })
    }
}

/// Every intermediate value of the four-step shift computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ShiftCertificate {
    pub k: u32,
    pub r: u32,
    /// `±r mod 10`, equal to `F_r mod 10`.
    pub r_tilde: u32,
    pub i0: u32,
    /// `15 · i0`.
    pub m_i0: u32,
    /// Subsequence position of the `(0, 1)` pair.
    pub j_tilde: u32,
    pub j0: u32,
    pub direction: Direction,
    pub n_kr: u32,
}

impl ShiftCertificate {
    /// Predicted subsequence term `j`.
    pub fn predicted_term(&self, j: i64) -> u8 {
        let n = i64::from(self.n_kr);
        match self.direction {
            Direction::ForwardComplete => fib10(n + j),
            Direction::ReverseComplete => fib10(n - j),
        }
    }
}

/// Runs the shift algorithm for `r ∈ U(60)`:
///
/// 1. `r̃ = r mod 10` if `r ≡ 1 (mod 4)`, else `-r mod 10`;
/// 2. `i0 = ind_3(r̃)`;
/// 3. `M = 15 i0`, `j̃ ≡ r^{-1}(M - k) (mod 60)`;
/// 4. `N = 60 - j̃` (forward, reduced mod 60) or `N = j̃` (reverse).
pub fn compute_shift(k: u32, r: u32) -> Result<ShiftCertificate> {
    check_k(k)?;
    let r_inv = inverse_mod60(r)?;
    let forward = r % 4 == 1;

    let r_tilde = if forward { r % 10 } else { (10 - r % 10) % 10 };
    let i0 = index_log(r_tilde)?;
    let m_i0 = 15 * i0;
    let j_tilde = r_inv * ((m_i0 + CIRCLE - k) % CIRCLE) % CIRCLE;
    let (direction, n_kr) = if forward {
        (Direction::ForwardComplete, (CIRCLE - j_tilde) % CIRCLE)
    } else {
        (Direction::ReverseComplete, j_tilde)
    };

    Ok(ShiftCertificate {
        k,
        r,
        r_tilde,
        i0,
        m_i0,
        j_tilde,
        j0: first_zero_index(k, r)?,
        direction,
        n_kr,
    })
}

/// Finds the alignment by exhaustive comparison of the 60-term period
/// against every shift of the parent period in both directions.
pub fn brute_force_shift(k: u32, r: u32) -> Result<(Direction, u32)> {
    check_k(k)?;
    inverse_mod60(r)?;
    let parent = mod10_table();
    let len = parent.len();
    let terms: Vec<u8> = (0..len)
        .map(|j| parent[(k as usize + r as usize * j) % len])
        .collect();

    let mut found = Vec::new();
    for n in 0..len {
        if (0..len).all(|j| terms[j] == parent[(n + j) % len]) {
            found.push((Direction::ForwardComplete, n as u32));
        }
        if (0..len).all(|j| terms[j] == parent[(n + len - j) % len]) {
            found.push((Direction::ReverseComplete, n as u32));
        }
    }
    match found.as_slice() {
        [single] => Ok(*single),
        _ => Err(Error::OracleFailure {
            k,
            r,
            matches: found.len(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_group_examples() {
        let u10 = unit_group(10u32).unwrap();
        assert_eq!(u10.elements(), &[1, 3, 7, 9]);
        assert_eq!(u10.order(), 4);
        assert_eq!(u10.inverse(3), Some(7));
        assert_eq!(u10.inverse(5), None);

        let u60 = unit_group(60u32).unwrap();
        assert_eq!(u60.order(), 16);
        assert_eq!(u60.inverse(13), Some(37));
        assert_eq!(u60.inverse(7), Some(43));

        let u2 = unit_group(2u8).unwrap();
        assert_eq!(u2.elements(), &[1]);
        assert_eq!(u2.inverse(1), Some(1));

        assert!(unit_group(1u32).is_err());
    }

    #[test]
    fn index_log_examples() {
        assert_eq!(index_log(3).unwrap(), 1);
        assert_eq!(index_log(1).unwrap(), 0);
        assert_eq!(index_log(7).unwrap(), 3);
        assert_eq!(index_log(9).unwrap(), 2);
        assert!(matches!(index_log(5), Err(Error::NotAUnit { .. })));
        assert!(index_log(0).is_err());
    }

    #[test]
    fn first_zero_examples() {
        assert_eq!(first_zero_index(9, 13).unwrap(), 12);
        for r in [1, 7, 11, 13, 59] {
            assert_eq!(first_zero_index(0, r).unwrap(), 0);
        }
        assert_eq!(first_zero_index(3, 7).unwrap(), 6);
        assert_eq!(fib10(3 + 7 * 6), 0);
        assert!(matches!(first_zero_index(0, 5), Err(Error::NotAUnit { .. })));
        assert!(first_zero_index(60, 1).is_err());
    }

    #[test]
    fn shift_worked_example() {
        let c = compute_shift(9, 13).unwrap();
        assert_eq!((c.r_tilde, c.i0, c.m_i0, c.j_tilde), (3, 1, 15, 42));
        assert_eq!(c.j0, 12);
        assert_eq!(c.direction, Direction::ForwardComplete);
        assert_eq!(c.n_kr, 18);

        let c = compute_shift(15, 13).unwrap();
        assert_eq!((c.j_tilde, c.n_kr, c.direction), (0, 0, Direction::ForwardComplete));

        let c = compute_shift(0, 1).unwrap();
        assert_eq!((c.r_tilde, c.i0, c.m_i0, c.j_tilde, c.n_kr), (1, 0, 0, 0, 0));
        assert_eq!(c.direction, Direction::ForwardComplete);

        assert!(matches!(compute_shift(0, 25), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_shift(9, 13).unwrap(), (Direction::ForwardComplete, 18));
        assert_eq!(brute_force_shift(0, 59).unwrap(), (Direction::ReverseComplete, 0));
        assert_eq!(brute_force_shift(0, 1).unwrap(), (Direction::ForwardComplete, 0));
        assert!(brute_force_shift(0, 2).is_err());
    }

    #[test]
    fn worked_example_period() {
        // The 60 terms listed for k=9, r=13; the parent sequence starts at j=42.
        let want: Vec<u8> = "415617853819099875279651673033695493257291011235831459437077"
            .bytes()
            .map(|b| b - b'0')
            .collect();
        let got: Vec<u8> = (0..60).map(|j| fib10(9 + 13 * j)).collect();
        assert_eq!(got, want);
    }
}
