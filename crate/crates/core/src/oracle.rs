//! Brute-force counterparts of the closed-form classifications. These walk
//! or scan instead of using gcd / inverse formulas.

use crate::modfib::fib10;
use crate::subseq::{DiagramType, CIRCLE};

/// What a literal walk around the circle in steps of `r` observes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkedPolygon {
    pub n: u32,
    pub q: u32,
    pub diagram_type: DiagramType,
}

/// Walks from point 0 in steps of `r` until returning, then counts how many
/// diagram vertices one step of `r` circle points passes over.
pub fn walk_star_polygon(r: u32) -> WalkedPolygon {
    let mut visited = [false; CIRCLE as usize];
    let mut p = 0u32;
    let mut n = 0u32;
    loop {
        visited[p as usize] = true;
        n += 1;
        p = (p + r) % CIRCLE;
        if p == 0 {
            break;
        }
    }
    // Vertices in the arc (0, r] going clockwise from vertex 0.
    let q = (1..=r).filter(|&i| visited[(i % CIRCLE) as usize]).count() as u32;
    let convex = q == 1 || q + 1 == n;
    let diagram_type = if n == CIRCLE {
        DiagramType::Type3
    } else if convex {
        DiagramType::Type1
    } else {
        DiagramType::Type2
    };
    WalkedPolygon { n, q, diagram_type }
}

/// Least `j ≥ 0` with `F_{k + rj} ≡ 0 (mod 10)`, by scanning one full period.
pub fn scan_first_zero(k: u32, r: u32) -> Option<u32> {
    (0..CIRCLE).find(|&j| fib10(i64::from(k) + i64::from(r) * i64::from(j)) == 0)
}
