//! Level-1 Hecke operators on q-expansions and congruence checking
//! modulo 2^m.
//!
//! The coefficient action used throughout is the classical level-1 formula
//! `a_m(T_n h) = sum_{d | gcd(m,n)} d^(k-1) a_{mn/d^2}(h)` with k the
//! weight of h. Precision bookkeeping is strict: applying T_n to a series
//! with p known coefficients yields exactly floor(p/n) coefficients, never
//! zero-padded ones.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::qseries::{self, QExpansion, QSeriesError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeckeError {
    #[error("operator index must be positive")]
    ZeroIndex,
    #[error("insufficient precision: need {needed} coefficients, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("input must be normalized (a_1 = 1)")]
    NotNormalized,
    #[error("T_n with n > 1 needs positive weight")]
    ZeroWeight,
    #[error("no one-dimensional cusp space of weight {0} is supported")]
    UnsupportedWeight(u32),
    #[error("coefficient source too short: need index {needed}, have {available}")]
    SourceTooShort { needed: usize, available: usize },
    #[error(transparent)]
    Series(#[from] QSeriesError),
}

/// Anything that can hand out exact q-expansion coefficients by index.
///
/// Implemented by [`QExpansion`] and by the newform coefficients derived
/// from elliptic-curve point counts, so congruences can be checked without
/// materializing the newform as a series.
pub trait CoefficientSource {
    /// Number of known indices; `coefficient(n)` is `Some` for `n < limit()`.
    fn limit(&self) -> usize;
    fn coefficient(&self, n: usize) -> Option<BigInt>;
}

impl CoefficientSource for QExpansion {
    fn limit(&self) -> usize {
        self.prec()
    }
    fn coefficient(&self, n: usize) -> Option<BigInt> {
        QExpansion::coefficient(self, n).cloned()
    }
}

/// Applies the n-th Hecke operator at level 1. The result has
/// `floor(prec(h)/n)` coefficients and the weight of `h`.
pub fn hecke_apply(h: &QExpansion, n: usize) -> Result<QExpansion, HeckeError> {
    if n == 0 {
        return Err(HeckeError::ZeroIndex);
    }
    if h.prec() < n {
        return Err(HeckeError::InsufficientPrecision {
            needed: n,
            available: h.prec(),
        });
    }
    if n > 1 && h.weight() == 0 {
        return Err(HeckeError::ZeroWeight);
    }
    let out_len = h.prec() / n;
    let k = h.weight();
    let coeffs: Vec<BigInt> = (0..out_len)
        .map(|m| {
            let g = if m == 0 { n } else { m.gcd(&n) };
            let mut acc = BigInt::zero();
            for d in 1..=g {
                if g % d == 0 {
                    let idx = m * n / (d * d);
                    acc += BigInt::from(d).pow(k - 1) * h.coefficient(idx).expect("index in range");
                }
            }
            acc
        })
        .collect();
    Ok(QExpansion::from_coeffs(k, coeffs)?)
}

/// Verdict of the weak-eigenform test `T_n h = a_n(h) h (mod 2^m)` over a
/// set of operator indices, compared on the first `coefficients_checked`
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakEigenformReport {
    pub modulus_exponent: u32,
    pub coefficients_checked: usize,
    /// Per operator index: the first mismatching coefficient index, if any.
    pub witnesses: Vec<(usize, Option<usize>)>,
}

impl WeakEigenformReport {
    pub fn pass(&self) -> bool {
        self.witnesses.iter().all(|(_, w)| w.is_none())
    }
}

/// Runs the weak-eigenform test for each n in `operators`, comparing
/// `T_n h` against `a_n(h) h` modulo 2^m on `coeff_bound` coefficients.
///
/// Requires h normalized and `prec(h) >= coeff_bound * max(operators)`.
pub fn weak_eigenform_check(
    h: &QExpansion,
    m: u32,
    operators: &BTreeSet<usize>,
    coeff_bound: usize,
) -> Result<WeakEigenformReport, HeckeError> {
    if h.coefficient(1) != Some(&BigInt::one()) {
        return Err(HeckeError::NotNormalized);
    }
    let max_n = operators.iter().max().copied().unwrap_or(1);
    let needed = coeff_bound * max_n;
    if h.prec() < needed {
        return Err(HeckeError::InsufficientPrecision {
            needed,
            available: h.prec(),
        });
    }
    let h_red = qseries::reduce(h, m);
    let mut witnesses = Vec::new();
    for &n in operators {
        let tn = hecke_apply(h, n)?;
        let tn_red = qseries::reduce(&tn, m);
        let eigen = qseries::residue_mod_pow2(h.coefficient(n).expect("a_n within prec"), m);
        let modulus = BigUint::one() << m;
        let first = (0..coeff_bound).find(|&i| {
            let lhs = tn_red.residue(i).expect("within T_n precision");
            let rhs = (&eigen * h_red.residue(i).expect("within precision")) % &modulus;
            *lhs != rhs
        });
        witnesses.push((n, first));
    }
    Ok(WeakEigenformReport {
        modulus_exponent: m,
        coefficients_checked: coeff_bound,
        witnesses,
    })
}

/// A coefficient index where two sources disagree modulo 2^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceMismatch {
    pub index: usize,
    pub left: BigUint,
    pub right: BigUint,
}

/// Verdict of a termwise congruence check between two coefficient sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub modulus_exponent: u32,
    pub bound: usize,
    pub first_mismatch: Option<CongruenceMismatch>,
}

impl CongruenceReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Checks `a_n(h1) = a_n(h2) (mod 2^m)` for `1 <= n <= bound`.
pub fn congruence_check(
    h1: &dyn CoefficientSource,
    h2: &dyn CoefficientSource,
    m: u32,
    bound: usize,
) -> Result<CongruenceReport, HeckeError> {
    for src in [h1, h2] {
        if src.limit() <= bound {
            return Err(HeckeError::SourceTooShort {
                needed: bound,
                available: src.limit().saturating_sub(1),
            });
        }
    }
    let mut first_mismatch = None;
    for n in 1..=bound {
        let a = qseries::residue_mod_pow2(&h1.coefficient(n).expect("checked"), m);
        let b = qseries::residue_mod_pow2(&h2.coefficient(n).expect("checked"), m);
        if a != b {
            first_mismatch = Some(CongruenceMismatch {
                index: n,
                left: a,
                right: b,
            });
            break;
        }
    }
    Ok(CongruenceReport {
        modulus_exponent: m,
        bound,
        first_mismatch,
    })
}

/// Leading terms of the monomial basis of the weight-36 cusp space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularityReport {
    /// For each of E4^6 D, E4^3 D^2, D^3: (leading index, leading coefficient).
    pub leading: Vec<(usize, BigInt)>,
}

impl TriangularityReport {
    pub fn pass(&self) -> bool {
        self.leading
            .iter()
            .enumerate()
            .all(|(i, (idx, c))| *idx == i + 1 && c.is_one())
    }
}

/// Verifies that E4^6 D, E4^3 D^2, D^3 start at q, q^2, q^3 with unit
/// leading coefficients, so a weight-36 form is pinned down by its first
/// three coefficients.
pub fn s36_basis_triangularity_check(prec: usize) -> Result<TriangularityReport, HeckeError> {
    if prec < 4 {
        return Err(HeckeError::InsufficientPrecision {
            needed: 4,
            available: prec,
        });
    }
    let e4 = qseries::eisenstein_e4(prec)?;
    let dl = qseries::delta(prec)?;
    let basis = [
        qseries::mul(&qseries::pow(&e4, 6), &dl)?,
        qseries::mul(&qseries::pow(&e4, 3), &qseries::pow(&dl, 2))?,
        qseries::pow(&dl, 3),
    ];
    let leading = basis
        .iter()
        .map(|h| {
            let idx = h.leading_index().expect("basis forms are nonzero");
            (idx, h.coefficient(idx).expect("leading index").clone())
        })
        .collect();
    Ok(TriangularityReport { leading })
}

/// Weights k with one-dimensional cusp space handled by
/// [`hatada_consistency_check`], and the generator exponents (a, b) with
/// generator Delta * E4^a * E6^b.
const ONE_DIMENSIONAL_WEIGHTS: [(u32, u32, u32); 5] =
    [(16, 1, 0), (18, 0, 1), (20, 2, 0), (22, 1, 1), (26, 2, 1)];

/// For each requested weight with dim S_k = 1, checks that the normalized
/// generator is congruent to Delta modulo 4 up to `bound` coefficients.
/// Returns per-weight first mismatches.
pub fn hatada_consistency_check(
    weights: &[u32],
    bound: usize,
) -> Result<Vec<(u32, Option<usize>)>, HeckeError> {
    let prec = bound + 1;
    let dl = qseries::delta(prec)?;
    let e4 = qseries::eisenstein_e4(prec)?;
    let e6 = qseries::eisenstein_e6(prec)?;
    let mut results = Vec::new();
    for &k in weights {
        let Some(&(_, a, b)) = ONE_DIMENSIONAL_WEIGHTS.iter().find(|(w, _, _)| *w == k) else {
            return Err(HeckeError::UnsupportedWeight(k));
        };
        let gen = qseries::mul(
            &dl,
            &qseries::mul(&qseries::pow(&e4, a), &qseries::pow(&e6, b))?,
        )?;
        let first = (0..prec).find(|&i| {
            qseries::residue_mod_pow2(gen.coefficient(i).expect("in range"), 2)
                != qseries::residue_mod_pow2(dl.coefficient(i).expect("in range"), 2)
        });
        results.push((k, first));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn t2_on_f_matches_displayed_values() {
        let f = qseries::build_f(8).unwrap();
        let t2 = hecke_apply(&f, 2).unwrap();
        assert_eq!(t2.prec(), 4);
        assert_eq!(t2.coefficient(1), Some(&bi("1416")));
        assert_eq!(t2.coefficient(2), Some(&bi("34631124912")));
        assert_eq!(t2.coefficient(3), Some(&bi("5356057726176")));
    }

    #[test]
    fn t3_minus_2f_matches_displayed_values() {
        let f = qseries::build_f(12).unwrap();
        let t3 = hecke_apply(&f, 3).unwrap();
        let diff = qseries::add(
            &t3,
            &qseries::scale(&BigInt::from(-2), &f.truncate(4).unwrap()),
        )
        .unwrap();
        assert_eq!(diff.coefficient(1), Some(&bi("842652")));
        assert_eq!(diff.coefficient(2), Some(&bi("5356057723344")));
        assert_eq!(diff.coefficient(3), Some(&bi("113674493459566148")));
    }

    #[test]
    fn t1_is_identity() {
        let dl = qseries::delta(9).unwrap();
        assert_eq!(hecke_apply(&dl, 1).unwrap(), dl);
    }

    #[test]
    fn hecke_rejects_short_series() {
        let dl = qseries::delta(3).unwrap();
        assert_eq!(
            hecke_apply(&dl, 5),
            Err(HeckeError::InsufficientPrecision {
                needed: 5,
                available: 3
            })
        );
    }

    #[test]
    fn delta_is_a_true_t2_eigenform() {
        let dl = qseries::delta(40).unwrap();
        let t2 = hecke_apply(&dl, 2).unwrap();
        let tau2 = dl.coefficient(2).unwrap().clone();
        let expected = qseries::scale(&tau2, &dl.truncate(t2.prec()).unwrap());
        assert_eq!(t2, expected);
    }

    #[test]
    fn weak_eigenform_small_bounds() {
        let f = qseries::build_f(9).unwrap();
        let ops: BTreeSet<usize> = [2, 3].into();
        let report = weak_eigenform_check(&f, 2, &ops, 3).unwrap();
        assert!(report.pass());

        let dl = qseries::delta(30).unwrap();
        let ops: BTreeSet<usize> = [2].into();
        assert!(weak_eigenform_check(&dl, 2, &ops, 15).unwrap().pass());
    }

    #[test]
    fn weak_eigenform_rejects_unnormalized() {
        let e4 = qseries::eisenstein_e4(10).unwrap();
        let ops: BTreeSet<usize> = [2].into();
        assert_eq!(
            weak_eigenform_check(&e4, 2, &ops, 3),
            Err(HeckeError::NotNormalized)
        );
    }

    #[test]
    fn weak_eigenform_rejects_insufficient_precision() {
        let f = qseries::build_f(8).unwrap();
        let ops: BTreeSet<usize> = [2, 3].into();
        assert_eq!(
            weak_eigenform_check(&f, 2, &ops, 3),
            Err(HeckeError::InsufficientPrecision {
                needed: 9,
                available: 8
            })
        );
    }

    #[test]
    fn congruence_f_vs_delta_fails_at_3() {
        let f = qseries::build_f(8).unwrap();
        let dl = qseries::delta(8).unwrap();
        let report = congruence_check(&f, &dl, 2, 3).unwrap();
        let mismatch = report.first_mismatch.unwrap();
        assert_eq!(mismatch.index, 3);
        assert_eq!(mismatch.left, BigUint::from(2u32));
        assert_eq!(mismatch.right, BigUint::from(0u32));
    }

    #[test]
    fn congruence_is_reflexive() {
        let f = qseries::build_f(20).unwrap();
        assert!(congruence_check(&f, &f, 2, 19).unwrap().pass());
        assert!(congruence_check(&f, &f, 5, 10).unwrap().pass());
    }

    #[test]
    fn congruence_rejects_short_source() {
        let f = qseries::build_f(8).unwrap();
        let dl = qseries::delta(4).unwrap();
        assert_eq!(
            congruence_check(&f, &dl, 2, 5),
            Err(HeckeError::SourceTooShort {
                needed: 5,
                available: 3
            })
        );
    }

    #[test]
    fn triangular_basis() {
        let report = s36_basis_triangularity_check(5).unwrap();
        assert!(report.pass());
        assert_eq!(
            report.leading,
            vec![
                (1, BigInt::from(1)),
                (2, BigInt::from(1)),
                (3, BigInt::from(1))
            ]
        );
    }

    #[test]
    fn hecke_operators_commute_on_truncations() {
        for h in [qseries::delta(60).unwrap(), qseries::build_f(60).unwrap()] {
            let a = hecke_apply(&hecke_apply(&h, 3).unwrap(), 2).unwrap();
            let b = hecke_apply(&hecke_apply(&h, 2).unwrap(), 3).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn tau_is_multiplicative_at_6() {
        let dl = qseries::delta(7).unwrap();
        let t2 = dl.coefficient(2).unwrap();
        let t3 = dl.coefficient(3).unwrap();
        let t6 = dl.coefficient(6).unwrap();
        assert_eq!(&(t2 * t3), t6);
    }

    #[test]
    fn one_dimensional_generators_congruent_to_delta() {
        let results = hatada_consistency_check(&[16, 18, 26], 100).unwrap();
        assert!(results.iter().all(|(_, w)| w.is_none()), "{results:?}");
    }

    #[test]
    fn hatada_rejects_other_weights() {
        assert_eq!(
            hatada_consistency_check(&[24], 10),
            Err(HeckeError::UnsupportedWeight(24))
        );
    }
}
