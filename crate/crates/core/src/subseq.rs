//! Arithmetic-progression subsequences `F_{k + rj} mod 10` of the mod-10
//! Fibonacci period, their star-polygon geometry, and the fixed-jump tuples
//! for jumps 15, 12 and 5.

use num_integer::gcd;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modfib::{fib10, lucas_mod};

/// Length of the mod-10 Pisano period; the circle has this many points.
pub const CIRCLE: u32 = 60;

/// Start index `k ∈ [0, 59]` and jump `r ∈ [1, 59]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsequenceSpec {
    k: u32,
    r: u32,
}

impl SubsequenceSpec {
    pub fn new(k: u32, r: u32) -> Result<Self> {
        if k >= CIRCLE {
            return Err(Error::InvalidArgument(format!(
                "start index k={k} must lie in [0, 59]"
            )));
        }
        if r == 0 || r >= CIRCLE {
            return Err(Error::InvalidArgument(format!(
                "jump size r={r} must lie in [1, 59]"
            )));
        }
        Ok(Self { k, r })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Circle index of subsequence term `j`, i.e. `(k + r j) mod 60`.
    pub fn index(&self, j: u64) -> u32 {
        ((u64::from(self.k) + u64::from(self.r) * j) % u64::from(CIRCLE)) as u32
    }

    /// Every valid spec, `k` major, `r` minor.
    pub fn all() -> impl Iterator<Item = SubsequenceSpec> {
        (0..CIRCLE).flat_map(|k| (1..CIRCLE).map(move |r| SubsequenceSpec { k, r }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramType {
    /// `r` or `60 - r` divides 60 (excluding 1 and 59): a regular n-gon.
    Type1,
    /// Non-convex star with fewer than 60 vertices.
    Type2,
    /// `gcd(r, 60) = 1`: all 60 circle points are vertices.
    Type3,
}

impl std::fmt::Display for DiagramType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DiagramType::Type1 => "Type1",
            DiagramType::Type2 => "Type2",
            DiagramType::Type3 => "Type3",
        };
        f.write_str(s)
    }
}

/// The star polygon `{n/q}` traced by a subsequence on the 60-point circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StarPolygon {
    pub n: u32,
    pub q: u32,
    pub diagram_type: DiagramType,
    /// True when the figure is a regular convex n-gon, i.e. `q ≡ ±1 (mod n)`.
    pub convex: bool,
}

pub fn star_polygon(spec: SubsequenceSpec) -> StarPolygon {
    let r = spec.r;
    let g = gcd(r, CIRCLE);
    let n = CIRCLE / g;
    let q = r / g;
    let diagram_type = if g == 1 {
        DiagramType::Type3
    } else if CIRCLE % r == 0 || CIRCLE % (CIRCLE - r) == 0 {
        DiagramType::Type1
    } else {
        DiagramType::Type2
    };
    StarPolygon {
        n,
        q,
        diagram_type,
        convex: q == 1 || q + 1 == n,
    }
}

/// One period of `F_{k + rj} mod 10`, starting at `j = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsequencePeriod {
    spec: SubsequenceSpec,
    terms: Vec<u8>,
}

impl SubsequencePeriod {
    pub fn spec(&self) -> SubsequenceSpec {
        self.spec
    }

    pub fn terms(&self) -> &[u8] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term `j` for any signed `j`, using periodicity.
    pub fn term(&self, j: i64) -> u8 {
        self.terms[j.rem_euclid(self.terms.len() as i64) as usize]
    }
}

pub fn subsequence_period(spec: SubsequenceSpec) -> SubsequencePeriod {
    let n = CIRCLE / gcd(spec.r, CIRCLE);
    let terms = (0..u64::from(n))
        .map(|j| fib10(i64::from(spec.index(j))))
        .collect();
    SubsequencePeriod { spec, terms }
}

fn progression<const L: usize>(k: u32, step: u32) -> [u8; L] {
    let mut out = [0u8; L];
    for (j, slot) in out.iter_mut().enumerate() {
        *slot = fib10(i64::from(k) + i64::from(step) * j as i64);
    }
    out
}

/// `(F_{k + 15j} mod 10)` for `j = 0..3`: the square through `k`.
pub fn tuple_s(k: u32) -> [u8; 4] {
    progression(k, 15)
}

/// `(F_{k + 12j} mod 10)` for `j = 0..4`: the pentagon through `k`.
pub fn tuple_p(k: u32) -> [u8; 5] {
    progression(k, 12)
}

/// `(F_{k + 5j} mod 10)` for `j = 0..11`: the dodecagon through `k`.
pub fn tuple_d(k: u32) -> [u8; 12] {
    progression(k, 5)
}

/// One period of the Lucas numbers modulo 10 (length 12).
pub fn lucas10_period() -> Vec<u8> {
    (0..12)
        .map(|n| lucas_mod(n, 10u8).expect("10 is a valid modulus").value())
        .collect()
}

/// True iff `b` is a rotation of `a`: some `s` has `a[j] = b[(j + s) mod L]`
/// for every `j`.
pub fn is_cyclic_shift<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    // a occurs at some offset s of the doubled sequence b ++ b
    let len = b.len();
    (0..len).any(|s| (0..len).all(|j| a[j] == b[(j + s) % len]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: u32, r: u32) -> SubsequenceSpec {
        SubsequenceSpec::new(k, r).unwrap()
    }

    #[test]
    fn spec_bounds() {
        assert!(SubsequenceSpec::new(60, 1).is_err());
        assert!(SubsequenceSpec::new(0, 0).is_err());
        assert!(SubsequenceSpec::new(0, 60).is_err());
        assert!(SubsequenceSpec::new(59, 59).is_ok());
        assert_eq!(SubsequenceSpec::all().count(), 3540);
    }

    #[test]
    fn star_polygon_examples() {
        let p = star_polygon(spec(3, 25));
        assert_eq!((p.n, p.q, p.diagram_type, p.convex), (12, 5, DiagramType::Type2, false));
        let p = star_polygon(spec(3, 12));
        assert_eq!((p.n, p.q, p.diagram_type, p.convex), (5, 1, DiagramType::Type1, true));
        let p = star_polygon(spec(9, 13));
        assert_eq!((p.n, p.q, p.diagram_type, p.convex), (60, 13, DiagramType::Type3, false));
        let p = star_polygon(spec(0, 1));
        assert_eq!((p.n, p.q, p.diagram_type, p.convex), (60, 1, DiagramType::Type3, true));
        let p = star_polygon(spec(0, 59));
        assert_eq!((p.n, p.q, p.diagram_type, p.convex), (60, 59, DiagramType::Type3, true));
    }

    #[test]
    fn same_n_distinct_q() {
        for (r, q) in [(9, 3), (21, 7), (27, 9)] {
            let p = star_polygon(spec(0, r));
            assert_eq!((p.n, p.q, p.diagram_type), (20, q, DiagramType::Type2));
        }
    }

    #[test]
    fn type1_is_always_convex() {
        for r in 1..CIRCLE {
            let p = star_polygon(spec(0, r));
            if p.diagram_type == DiagramType::Type1 {
                assert!(p.convex, "r={r}");
            }
            if p.diagram_type == DiagramType::Type2 {
                assert!(!p.convex, "r={r}");
            }
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(
            subsequence_period(spec(3, 25)).terms(),
            &[2, 1, 3, 4, 7, 1, 8, 9, 7, 6, 3, 9]
        );
        assert_eq!(subsequence_period(spec(0, 30)).terms(), &[0, 0]);
        assert_eq!(subsequence_period(spec(3, 12)).terms(), &[2, 0, 8, 6, 4]);
    }

    #[test]
    fn tuple_examples() {
        assert_eq!(tuple_s(0), [0, 0, 0, 0]);
        assert_eq!(tuple_s(3), [2, 4, 8, 6]);
        assert_eq!(tuple_s(5), [5, 5, 5, 5]);
        assert_eq!(tuple_p(0), [0, 4, 8, 2, 6]);
        assert_eq!(tuple_p(11), [9, 7, 5, 3, 1]);
        assert_eq!(tuple_p(1), [1, 3, 5, 7, 9]);
        assert_eq!(tuple_d(0), [0, 5, 5, 0, 5, 5, 0, 5, 5, 0, 5, 5]);
        assert_eq!(tuple_d(3), [2, 1, 3, 4, 7, 1, 8, 9, 7, 6, 3, 9]);
        assert_eq!(tuple_d(1), [1, 8, 9, 7, 6, 3, 9, 2, 1, 3, 4, 7]);
    }

    #[test]
    fn lucas_period() {
        assert_eq!(lucas10_period(), vec![2, 1, 3, 4, 7, 1, 8, 9, 7, 6, 3, 9]);
    }

    #[test]
    fn cyclic_shift_examples() {
        assert!(is_cyclic_shift(&[1, 7, 9, 3], &[9, 3, 1, 7]));
        assert!(!is_cyclic_shift(&[1, 7, 9, 3], &[1, 9, 7, 3]));
        assert!(is_cyclic_shift(&[0, 0, 0, 0], &[0, 0, 0, 0]));
        assert!(is_cyclic_shift::<u8>(&[], &[]));
        assert!(!is_cyclic_shift(&[1, 2], &[1, 2, 1]));
    }
}
