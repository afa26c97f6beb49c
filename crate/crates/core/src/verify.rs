//! The full self-check suite behind `pisano-lab verify`.
//!
//! Each check sweeps an exhaustive (or explicitly bounded) range and stops
//! at the first counterexample.

use num_integer::gcd;
use serde::Serialize;

use crate::complete::{
    brute_force_shift, compute_shift, first_zero_index, unit_group, Direction, ShiftCertificate,
};
use crate::error::Result;
use crate::modfib::{
    antipodal_sum, fib10, fib_mod, lucas_mod, pisano_period, residue_character,
    seven_power_shift, ResidueCharacter,
};
use crate::oracle::{scan_first_zero, walk_star_polygon};
use crate::quasi::{predict_quasi, verify_quasi, QuasiPrediction};
use crate::render::{build_scene, render_frames, render_svg, CircleLayout};
use crate::subseq::{
    is_cyclic_shift, lucas10_period, star_polygon, subsequence_period, tuple_d, tuple_p, tuple_s,
    SubsequenceSpec, CIRCLE,
};
use crate::word::pow_mod;

/// F_0..F_59 mod 10 as tabulated by hand.
pub const MOD10_PERIOD_DIGITS: &str =
    "011235831459437077415617853819099875279651673033695493257291";

/// `F_r mod 10` for the sixteen units of 60, in increasing `r`.
pub const UNIT_FIB_TABLE: [(u32, u8); 16] = [
    (1, 1), (7, 3), (11, 9), (13, 3), (17, 7), (19, 1), (23, 7), (29, 9),
    (31, 9), (37, 7), (41, 1), (43, 7), (47, 3), (49, 9), (53, 3), (59, 1),
];

/// Inverses in `U(60)`.
pub const U60_INVERSES: [(u32, u32); 16] = [
    (1, 1), (7, 43), (11, 11), (13, 37), (17, 53), (19, 19), (23, 47), (29, 29),
    (31, 31), (37, 13), (41, 41), (43, 7), (47, 23), (49, 49), (53, 17), (59, 59),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub verified: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Number of cases examined, or a description of the first failure.
pub type CheckOutcome = std::result::Result<usize, String>;

pub type Check = (&'static str, fn() -> CheckOutcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fm(n: i64, m: u64) -> u64 {
    fib_mod(n, m).expect("modulus >= 2").value()
}

fn spec(k: u32, r: u32) -> SubsequenceSpec {
    SubsequenceSpec::new(k, r).expect("k, r in range")
}

fn units60() -> Vec<u32> {
    unit_group(CIRCLE).expect("60 >= 2").elements().to_vec()
}

pub fn check_period_10() -> CheckOutcome {
    let p = pisano_period(10u64).map_err(|e| e.to_string())?;
    let want: Vec<u64> = MOD10_PERIOD_DIGITS.bytes().map(|b| u64::from(b - b'0')).collect();
    ensure(p.residues() == want.as_slice(), || {
        format!("period 10 = {:?}", p.residues())
    })?;
    Ok(60)
}

pub fn check_period_8() -> CheckOutcome {
    let p = pisano_period(8u64).map_err(|e| e.to_string())?;
    ensure(p.residues() == [0, 1, 1, 2, 3, 5, 0, 5, 5, 2, 7, 1], || {
        format!("period 8 = {:?}", p.residues())
    })?;
    Ok(12)
}

pub fn check_recurrence() -> CheckOutcome {
    let mut cases = 0;
    for m in 2u64..=30 {
        for n in -200i64..=200 {
            ensure((fm(n + 1, m) + fm(n, m)) % m == fm(n + 2, m), || {
                format!("recurrence fails at n={n}, m={m}")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_negative_index() -> CheckOutcome {
    let mut cases = 0;
    for m in 2u64..=30 {
        for n in 0i64..=200 {
            let f = fm(n, m);
            let want = if n % 2 == 1 { f } else { (m - f) % m };
            ensure(fm(-n, m) == want, || format!("F(-{n}) mod {m}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_parity_and_five() -> CheckOutcome {
    for n in 0i64..=1000 {
        ensure((fm(n, 2) == 0) == (n % 3 == 0), || format!("parity law at n={n}"))?;
        ensure((fm(n, 5) == 0) == (n % 5 == 0), || format!("five law at n={n}"))?;
    }
    Ok(2002)
}

pub fn check_addition_law() -> CheckOutcome {
    let mut cases = 0;
    for a in -60i64..=60 {
        for b in -60i64..=60 {
            let lhs = fm(a + b, 10);
            let rhs = (fm(a - 1, 10) * fm(b, 10) + fm(a, 10) * fm(b + 1, 10)) % 10;
            ensure(lhs == rhs, || format!("addition law at a={a}, b={b}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_powers_of_seven() -> CheckOutcome {
    let mut cases = 0;
    for n in 0i64..=60 {
        for j in 0u64..=8 {
            let lhs = fm(n + 15 * j as i64, 10);
            let rhs = (pow_mod(7u64, j, 10) * fm(n, 10)) % 10;
            ensure(lhs == rhs && u64::from(seven_power_shift(n, j)) == rhs, || {
                format!("7^j shift at n={n}, j={j}")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_antipodal() -> CheckOutcome {
    for n in 0i64..60 {
        let s = antipodal_sum(n);
        let want = if n % 15 == 0 { 0 } else { 10 };
        ensure(s == want, || format!("antipodal sum at n={n} is {s}"))?;
    }
    Ok(60)
}

pub fn check_residue_character() -> CheckOutcome {
    for n in -120i64..=120 {
        let f = fib10(n);
        let want = match f {
            0 => ResidueCharacter::Zero,
            5 => ResidueCharacter::Five,
            _ => ResidueCharacter::Other,
        };
        ensure(residue_character(n) == want, || format!("residue character n={n}"))?;
    }
    Ok(241)
}

pub fn check_pisano_matches_fib() -> CheckOutcome {
    let mut cases = 0;
    for m in 2u64..=50 {
        let p = pisano_period(m).map_err(|e| e.to_string())?;
        for (j, &v) in p.residues().iter().enumerate() {
            ensure(v == fm(j as i64, m), || format!("pisano({m})[{j}]"))?;
            cases += 1;
        }
        // minimality
        for r in 1..p.len() as i64 {
            ensure(!(fm(r, m) == 0 && fm(r + 1, m) == 1), || {
                format!("pisano({m}) not minimal: pair (0,1) at {r}")
            })?;
        }
    }
    Ok(cases)
}

pub fn check_lucas() -> CheckOutcome {
    for n in -100i64..=100 {
        let want = (fm(n - 1, 10) + fm(n + 1, 10)) % 10;
        ensure(lucas_mod(n, 10u64).map_err(|e| e.to_string())?.value() == want, || {
            format!("lucas at n={n}")
        })?;
    }
    Ok(201)
}

pub fn check_star_polygons() -> CheckOutcome {
    for r in 1..CIRCLE {
        let p = star_polygon(spec(0, r));
        let w = walk_star_polygon(r);
        ensure((p.n, p.q, p.diagram_type) == (w.n, w.q, w.diagram_type), || {
            format!("r={r}: formula {:?}, walk {:?}", p, w)
        })?;
        ensure(gcd(p.n, p.q) == 1, || format!("gcd(n, q) != 1 at r={r}"))?;
        ensure(p.convex == (p.q == 1 || p.q + 1 == p.n), || format!("convexity at r={r}"))?;
        for k in 0..CIRCLE {
            ensure(star_polygon(spec(k, r)) == p, || format!("k-dependence at ({k},{r})"))?;
        }
    }
    for (r, q) in [(9, 3), (21, 7), (27, 9)] {
        let p = star_polygon(spec(0, r));
        ensure(p.n == 20 && p.q == q, || format!("same-n example r={r}"))?;
    }
    Ok(59)
}

pub fn check_periods_and_reversal() -> CheckOutcome {
    let mut cases = 0;
    for s in SubsequenceSpec::all() {
        let p = subsequence_period(s);
        let n = p.len();
        ensure(n as u32 == CIRCLE / gcd(s.r(), CIRCLE), || format!("length at {s:?}"))?;
        let closing = fib10(i64::from(s.k()) + i64::from(s.r()) * n as i64);
        ensure(closing == p.terms()[0], || format!("walk does not close at {s:?}"))?;
        let rev = subsequence_period(spec(s.k(), CIRCLE - s.r()));
        for j in 0..n {
            ensure(rev.terms()[j] == p.terms()[(n - j) % n], || {
                format!("reversal fails at {s:?}, j={j}")
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn check_square_tuples() -> CheckOutcome {
    for k in 0..CIRCLE {
        let t = tuple_s(k);
        let g = gcd(k, 15);
        let sum: u32 = t.iter().map(|&d| u32::from(d)).sum();
        ensure(sum == if g == 15 { 0 } else { 20 }, || format!("S_{k} sum {sum}"))?;
        let (class, base, offsets): (&[u8], u64, std::ops::RangeInclusive<u64>) = match g {
            1 => (&[1, 7, 9, 3], 7, 0..=3),
            // 2^j is purely periodic only from j = 1 on.
            3 => (&[2, 4, 8, 6], 2, 1..=4),
            5 => (&[5, 5, 5, 5], 5, 1..=1),
            _ => (&[0, 0, 0, 0], 0, 1..=1),
        };
        ensure(is_cyclic_shift(&t, class), || format!("S_{k} = {t:?}"))?;
        let power_form = offsets.clone().any(|n0| {
            (0..4u64).all(|j| u64::from(t[j as usize]) == pow_mod(base, n0 + j, 10))
        });
        ensure(power_form, || format!("S_{k} = {t:?} is not a run of {base}^j mod 10"))?;
    }
    Ok(60)
}

pub fn check_pentagon_tuples() -> CheckOutcome {
    for k in 0..CIRCLE {
        let t = tuple_p(k);
        let class: [u8; 5] = match k % 12 {
            1 | 5 => [1, 3, 5, 7, 9],
            7 | 11 => [9, 7, 5, 3, 1],
            2 | 10 => [1, 7, 3, 9, 5],
            4 | 8 => [5, 9, 3, 7, 1],
            3 => [8, 6, 4, 2, 0],
            9 => [0, 2, 4, 6, 8],
            0 => [0, 4, 8, 2, 6],
            _ => [6, 2, 8, 4, 0],
        };
        ensure(is_cyclic_shift(&t, &class), || format!("P_{k} = {t:?}"))?;
        let sum: u32 = t.iter().map(|&d| u32::from(d)).sum();
        let want = if k % 3 == 0 { 20 } else { 25 };
        ensure(sum == want, || format!("P_{k} sum {sum}"))?;
    }
    Ok(60)
}

pub fn check_dodecagon_tuples() -> CheckOutcome {
    let lucas = lucas10_period();
    for k in 0..CIRCLE {
        let t = tuple_d(k);
        let sum: u32 = t.iter().map(|&d| u32::from(d)).sum();
        if k % 5 == 0 {
            ensure(sum == 40, || format!("D_{k} sum {sum}"))?;
            ensure(is_cyclic_shift(&t, &[0, 5, 5, 0, 5, 5, 0, 5, 5, 0, 5, 5]), || {
                format!("D_{k} = {t:?}")
            })?;
        } else {
            ensure(sum == 60, || format!("D_{k} sum {sum}"))?;
            ensure(is_cyclic_shift(&t, &lucas), || format!("D_{k} = {t:?} not Lucas"))?;
        }
    }
    Ok(60)
}

pub fn check_lucas_coincidence() -> CheckOutcome {
    let lucas = lucas10_period();
    for r in [25, 5] {
        let p = subsequence_period(spec(3, r));
        ensure(p.terms() == lucas.as_slice(), || format!("(3,{r}) = {:?}", p.terms()))?;
    }
    Ok(2)
}

pub fn check_quasi_soundness() -> CheckOutcome {
    let mut cases = 0;
    for s in SubsequenceSpec::all() {
        let class = verify_quasi(&subsequence_period(s));
        let pred = predict_quasi(s.r());
        ensure(pred.admits(class), || {
            format!("({}, {}): predicted {pred:?}, observed {class:?}", s.k(), s.r())
        })?;
        if pred != QuasiPrediction::NoGuarantee {
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_quasi_rules() -> CheckOutcome {
    for n in 0i64..=200 {
        let want = if n % 2 == 0 { (10 - fm(n, 10)) % 10 } else { fm(n, 10) };
        ensure(fm(-n, 10) == want, || format!("odd/even reflection at n={n}"))?;
    }
    for r in 1i64..=200 {
        if r % 3 == 0 {
            continue;
        }
        if r % 4 == 1 {
            ensure((1 + fm(1 - r, 10)) % 10 == fm(r + 1, 10), || {
                format!("1 + F(1-r) = F(r+1) fails at r={r}")
            })?;
        }
        if r % 4 == 3 {
            ensure((1 + fm(r + 1, 10)) % 10 == fm(1 - r, 10), || {
                format!("1 + F(r+1) = F(1-r) fails at r={r}")
            })?;
        }
    }
    Ok(401)
}

pub fn check_unit_groups() -> CheckOutcome {
    let u10 = unit_group(10u32).map_err(|e| e.to_string())?;
    let pairs: Vec<_> = u10.pairs().collect();
    ensure(pairs == [(1, 1), (3, 7), (7, 3), (9, 9)], || format!("U(10) = {pairs:?}"))?;
    let u60 = unit_group(CIRCLE).map_err(|e| e.to_string())?;
    let pairs: Vec<_> = u60.pairs().collect();
    ensure(pairs == U60_INVERSES, || format!("U(60) = {pairs:?}"))?;
    let mut cases = 0;
    for n in 2u32..=120 {
        let g = unit_group(n).map_err(|e| e.to_string())?;
        for (u, inv) in g.pairs() {
            ensure(u * inv % n == 1 && g.inverse(inv) == Some(u), || {
                format!("inverse of {u} mod {n}")
            })?;
            cases += 1;
        }
        let phi = (1..n).filter(|&x| gcd(x, n) == 1).count();
        ensure(g.order() == phi, || format!("order of U({n})"))?;
    }
    Ok(cases)
}

pub fn check_unit_fib_values() -> CheckOutcome {
    let units = units60();
    ensure(units.len() == 16, || "U(60) does not have 16 elements".into())?;
    for (&r, &(tr, tf)) in units.iter().zip(UNIT_FIB_TABLE.iter()) {
        let f = fib10(i64::from(r));
        ensure(r == tr && f == tf, || format!("F_{r} mod 10 = {f}, table says {tf}"))?;
        let want = if r % 4 == 1 { r % 10 } else { (10 - r % 10) % 10 };
        ensure(u32::from(f) == want, || format!("+-r law fails at r={r}"))?;
        ensure(matches!(f, 1 | 3 | 7 | 9), || format!("F_{r} not a unit mod 10"))?;
        let m = match f {
            1 => 0,
            3 => 15,
            7 => 45,
            _ => 30,
        };
        for mm in [m - 1, m + 1] {
            let prod = u32::from(fib10(mm)) * u32::from(f) % 10;
            ensure(prod == 1, || format!("F_{mm} * F_{r} = {prod} (mod 10)"))?;
        }
    }
    Ok(16)
}

/// Compares a shift routine against [`brute_force_shift`] on all 960 cases,
/// `k` major.
pub fn shift_agreement_with<F>(shift: F) -> CheckOutcome
where
    F: Fn(u32, u32) -> Result<ShiftCertificate>,
{
    let units = units60();
    let mut cases = 0;
    for k in 0..CIRCLE {
        for &r in &units {
            let cert = shift(k, r).map_err(|e| format!("({k},{r}): {e}"))?;
            let oracle = brute_force_shift(k, r).map_err(|e| e.to_string())?;
            ensure((cert.direction, cert.n_kr) == oracle, || {
                format!(
                    "(k,r)=({k},{r}): algorithm gives ({}, {}), oracle gives ({}, {})",
                    cert.direction, cert.n_kr, oracle.0, oracle.1
                )
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_shift_agreement() -> CheckOutcome {
    shift_agreement_with(compute_shift)
}

pub fn check_shift_certificates() -> CheckOutcome {
    let mut cases = 0;
    for k in 0..CIRCLE {
        for r in units60() {
            let c = compute_shift(k, r).map_err(|e| e.to_string())?;
            let ctx = || format!("certificate ({k},{r}): {c:?}");
            ensure(pow_mod(3u32, u64::from(c.i0), 10) == c.r_tilde, ctx)?;
            ensure(c.m_i0 == 15 * c.i0, ctx)?;
            ensure((k + r * c.j_tilde) % CIRCLE == c.m_i0, ctx)?;
            ensure((k + r * c.j0) % 15 == 0 && c.j0 < 15, ctx)?;
            ensure((c.direction == Direction::ForwardComplete) == (r % 4 == 1), ctx)?;
            ensure(u32::from(fib10(i64::from(r))) == c.r_tilde, ctx)?;
            for j in 0..120i64 {
                let term = fib10(i64::from(k) + i64::from(r) * j);
                ensure(term == c.predicted_term(j), || format!("({k},{r}) term {j}"))?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_zero_structure() -> CheckOutcome {
    let mut cases = 0;
    for k in 0..CIRCLE {
        for r in units60() {
            let p = subsequence_period(spec(k, r));
            let zeros: Vec<u32> = (0..60u32).filter(|&j| p.terms()[j as usize] == 0).collect();
            let j0 = first_zero_index(k, r).map_err(|e| e.to_string())?;
            ensure(zeros == [j0, j0 + 15, j0 + 30, j0 + 45], || {
                format!("({k},{r}) zeros at {zeros:?}, j0={j0}")
            })?;
            ensure(scan_first_zero(k, r) == Some(j0), || format!("({k},{r}) j0 not minimal"))?;
            let mut subscripts: Vec<u32> = zeros.iter().map(|&j| (k + r * j) % CIRCLE).collect();
            subscripts.sort_unstable();
            ensure(subscripts == [0, 15, 30, 45], || {
                format!("({k},{r}) zero subscripts {subscripts:?}")
            })?;
            let zero_one = (0..60).any(|j| p.term(j) == 0 && p.term(j + 1) == 1);
            ensure(zero_one, || format!("({k},{r}) has no (0, 1) pair"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// Label `p` must read `F_p mod 10`, with point 0 at the top and point 15
/// (a quarter turn clockwise) at the right.
pub fn layout_labels_with(layout: &CircleLayout) -> CheckOutcome {
    ensure(layout.labels.len() == 60 && layout.points.len() == 60, || {
        "layout must have 60 points".into()
    })?;
    for p in 0..60u32 {
        ensure(layout.labels[p as usize] == fib10(i64::from(p)), || {
            format!("label {p} is {}", layout.labels[p as usize])
        })?;
    }
    let (cx, cy) = layout.center;
    let top = layout.point(0);
    let right = layout.point(15);
    ensure(top.1 < cy && (top.0 - cx).abs() < 1e-6, || "point 0 is not at the top".into())?;
    ensure(right.0 > cx && (right.1 - cy).abs() < 1e-6, || {
        "points do not run clockwise".into()
    })?;
    Ok(60)
}

pub fn check_layout() -> CheckOutcome {
    layout_labels_with(&CircleLayout::standard())
}

pub fn check_scenes() -> CheckOutcome {
    let mut cases = 0;
    for s in SubsequenceSpec::all() {
        let scene = build_scene(s, None).map_err(|e| e.to_string())?;
        let n = star_polygon(s).n as usize;
        ensure(scene.edges.len() == n, || format!("{s:?} has {} edges", scene.edges.len()))?;
        let mut ends: Vec<u32> = scene.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        ends.dedup();
        ensure(ends.len() == n, || format!("{s:?} touches {} vertices", ends.len()))?;

        let shifted = spec((s.k() + s.r()) % CIRCLE, s.r());
        let norm = |e: &[(u32, u32)]| {
            let mut v: Vec<(u32, u32)> = e.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            v.sort_unstable();
            v
        };
        let other = build_scene(shifted, None).map_err(|e| e.to_string())?;
        ensure(norm(&scene.edges) == norm(&other.edges), || {
            format!("rotation equivalence fails at {s:?}")
        })?;
        cases += 1;
    }
    Ok(cases)
}

pub fn check_frames() -> CheckOutcome {
    let s = spec(3, 25);
    let frames = render_frames(s);
    ensure(frames.len() == 12, || format!("{} frames for (3,25)", frames.len()))?;
    let lucas = lucas10_period();
    for (i, frame) in frames.iter().enumerate() {
        let scene = build_scene(s, Some(i as u32 + 1)).map_err(|e| e.to_string())?;
        // panel i lists terms 0..=i+1 of the subsequence
        let visited: Vec<u8> = std::iter::once(scene.edges[0].0)
            .chain(scene.edges.iter().map(|&(_, b)| b))
            .map(|p| fib10(i64::from(p)))
            .collect();
        let want: Vec<u8> = (0..=i + 1).map(|j| lucas[j % 12]).collect();
        ensure(visited == want, || format!("frame {i} visits {visited:?}"))?;
        ensure(render_svg(&scene) == *frame, || format!("frame {i} is not byte-stable"))?;
    }
    let full = render_svg(&build_scene(s, None).map_err(|e| e.to_string())?);
    ensure(frames[11] == full, || "last frame differs from the full diagram".into())?;

    let fig9 = build_scene(spec(9, 13), Some(10)).map_err(|e| e.to_string())?;
    let want: Vec<(u32, u32)> = (0..10).map(|j| ((9 + 13 * j) % 60, (9 + 13 * (j + 1)) % 60)).collect();
    ensure(fig9.edges == want, || format!("first ten edges of (9,13): {:?}", fig9.edges))?;
    Ok(13)
}

/// Every check, in reporting order.
pub fn all_checks() -> Vec<Check> {
    vec![
        ("pisano_period_10", check_period_10),
        ("pisano_period_8", check_period_8),
        ("recurrence", check_recurrence),
        ("negative_index_identity", check_negative_index),
        ("parity_and_five_laws", check_parity_and_five),
        ("addition_law", check_addition_law),
        ("powers_of_seven_shift", check_powers_of_seven),
        ("antipodal_sums", check_antipodal),
        ("residue_character", check_residue_character),
        ("pisano_matches_fib_mod", check_pisano_matches_fib),
        ("lucas_identity", check_lucas),
        ("star_polygon_oracle", check_star_polygons),
        ("subsequence_periods_and_reversal", check_periods_and_reversal),
        ("square_tuples", check_square_tuples),
        ("pentagon_tuples", check_pentagon_tuples),
        ("dodecagon_tuples", check_dodecagon_tuples),
        ("lucas_coincidence", check_lucas_coincidence),
        ("quasi_soundness", check_quasi_soundness),
        ("quasi_rules", check_quasi_rules),
        ("unit_groups", check_unit_groups),
        ("unit_fibonacci_values", check_unit_fib_values),
        ("shift_oracle_agreement", check_shift_agreement),
        ("shift_certificates", check_shift_certificates),
        ("zero_structure", check_zero_structure),
        ("layout_labels", check_layout),
        ("scene_geometry", check_scenes),
        ("construction_frames", check_frames),
    ]
}

pub fn run_checks(checks: &[Check]) -> VerifyReport {
    let checks: Vec<CheckResult> = checks
        .iter()
        .map(|&(name, f)| match f() {
            Ok(cases) => CheckResult {
                name,
                cases,
                passed: true,
                counterexample: None,
            },
            Err(msg) => CheckResult {
                name,
                cases: 0,
                passed: false,
                counterexample: Some(msg),
            },
        })
        .collect();
    let verified = checks.iter().all(|c| c.passed);
    VerifyReport { checks, verified }
}

pub fn run_all() -> VerifyReport {
    run_checks(&all_checks())
}
