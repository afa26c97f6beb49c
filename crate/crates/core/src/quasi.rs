//! Forward and reverse quasi-Fibonacci behaviour of subsequence periods.

use serde::Serialize;

use crate::subseq::SubsequencePeriod;

/// Which cyclic Fibonacci-type recurrences a period satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuasiClass {
    /// `t[j-1] + t[j] ≡ t[j+1]` everywhere, the mirrored relation somewhere fails.
    Forward,
    /// `t[j+1] + t[j] ≡ t[j-1]` everywhere, the forward relation somewhere fails.
    Reverse,
    /// Both hold everywhere. Adding the two relations gives `2 t[j] ≡ 0`, so
    /// every term is 0 or 5, e.g. `(0, 0)` or `(0, 5, 5)`.
    Both,
    Neither,
}

impl QuasiClass {
    pub fn is_forward(self) -> bool {
        matches!(self, QuasiClass::Forward | QuasiClass::Both)
    }

    pub fn is_reverse(self) -> bool {
        matches!(self, QuasiClass::Reverse | QuasiClass::Both)
    }
}

/// What the residue of r guarantees for a jump size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuasiPrediction {
    PredictForward,
    PredictReverse,
    NoGuarantee,
}

impl QuasiPrediction {
    /// Whether an observed class is consistent with this prediction.
    pub fn admits(self, class: QuasiClass) -> bool {
        match self {
            QuasiPrediction::PredictForward => class.is_forward(),
            QuasiPrediction::PredictReverse => class.is_reverse(),
            QuasiPrediction::NoGuarantee => true,
        }
    }
}

/// `r ≡ 1 (mod 4)` and `3 ∤ r` forces the forward recurrence;
/// `r ≡ 3 (mod 4)` and `3 ∤ r` forces the reverse one. Depends on `r` only.
pub fn predict_quasi(r: u32) -> QuasiPrediction {
    if r % 3 == 0 {
        return QuasiPrediction::NoGuarantee;
    }
    match r % 4 {
        1 => QuasiPrediction::PredictForward,
        3 => QuasiPrediction::PredictReverse,
        _ => QuasiPrediction::NoGuarantee,
    }
}

/// Checks both recurrences cyclically over one period.
pub fn verify_quasi(period: &SubsequencePeriod) -> QuasiClass {
    classify_terms(period.terms())
}

/// Same as [`verify_quasi`] on a bare cyclic sequence of digits.
pub fn classify_terms(t: &[u8]) -> QuasiClass {
    let n = t.len();
    if n == 0 {
        return QuasiClass::Both;
    }
    let at = |j: usize| u32::from(t[j % n]);
    // j runs over 0..n; j-1 is written as j+n-1 to stay unsigned.
    let forward = (0..n).all(|j| (at(j + n - 1) + at(j)) % 10 == at(j + 1));
    let reverse = (0..n).all(|j| (at(j + 1) + at(j)) % 10 == at(j + n - 1));
    match (forward, reverse) {
        (true, true) => QuasiClass::Both,
        (true, false) => QuasiClass::Forward,
        (false, true) => QuasiClass::Reverse,
        (false, false) => QuasiClass::Neither,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subseq::{subsequence_period, SubsequenceSpec};

    #[test]
    fn predictions() {
        assert_eq!(predict_quasi(25), QuasiPrediction::PredictForward);
        assert_eq!(predict_quasi(23), QuasiPrediction::PredictReverse);
        assert_eq!(predict_quasi(9), QuasiPrediction::NoGuarantee);
        assert_eq!(predict_quasi(2), QuasiPrediction::NoGuarantee);
        assert_eq!(predict_quasi(21), QuasiPrediction::NoGuarantee);
    }

    #[test]
    fn verify_examples() {
        let p = subsequence_period(SubsequenceSpec::new(3, 25).unwrap());
        assert_eq!(verify_quasi(&p), QuasiClass::Forward);
        let p = subsequence_period(SubsequenceSpec::new(5, 15).unwrap());
        assert_eq!(p.terms(), &[5, 5, 5, 5]);
        assert_eq!(verify_quasi(&p), QuasiClass::Neither);
        let p = subsequence_period(SubsequenceSpec::new(0, 30).unwrap());
        assert_eq!(verify_quasi(&p), QuasiClass::Both);
    }

    #[test]
    fn short_periods_wrap() {
        assert_eq!(classify_terms(&[0]), QuasiClass::Both);
        assert_eq!(classify_terms(&[5]), QuasiClass::Neither);
        // 1,9: forward needs 9+1≡9 (no); reverse needs 9+1≡9 (no).
        assert_eq!(classify_terms(&[1, 9]), QuasiClass::Neither);
    }

    #[test]
    fn reverse_example() {
        let p = subsequence_period(SubsequenceSpec::new(0, 59).unwrap());
        assert_eq!(verify_quasi(&p), QuasiClass::Reverse);
    }
}
