//! Truncated q-expansion arithmetic with unbounded integer coefficients.
//!
//! A [`QExpansion`] stores the first `prec` coefficients of a formal power
//! series in q together with its modular weight. All arithmetic is exact;
//! products are truncated to the minimum precision of the operands.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Errors from series construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QSeriesError {
    #[error("series precision must be at least {needed}, got {got}")]
    PrecisionTooSmall { needed: usize, got: usize },
    #[error("weight mismatch in addition: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("a series must have at least one coefficient")]
    Empty,
}

/// A truncated q-expansion: coefficients `a_0 .. a_{prec-1}` of a modular
/// form of the given weight.
///
/// Weight is additive under [`mul`] and must agree for [`add`]; the type
/// itself only records it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    weight: u32,
    coeffs: Vec<BigInt>,
}

impl QExpansion {
    /// Wraps explicit coefficients. Rejects an empty list.
    pub fn from_coeffs(weight: u32, coeffs: Vec<BigInt>) -> Result<Self, QSeriesError> {
        if coeffs.is_empty() {
            return Err(QSeriesError::Empty);
        }
        Ok(QExpansion { weight, coeffs })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of known coefficients (indices `0 .. prec-1`).
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of q^n, if within the known range.
    pub fn coefficient(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First index with a nonzero coefficient, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients beyond `prec`.
    pub fn truncate(&self, prec: usize) -> Result<Self, QSeriesError> {
        if prec == 0 {
            return Err(QSeriesError::Empty);
        }
        if prec > self.prec() {
            return Err(QSeriesError::PrecisionTooSmall {
                needed: prec,
                got: self.prec(),
            });
        }
        Ok(QExpansion {
            weight: self.weight,
            coeffs: self.coeffs[..prec].to_vec(),
        })
    }
}

/// A q-expansion reduced modulo 2^m, every residue normalized to `[0, 2^m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSeries {
    modulus_exponent: u32,
    residues: Vec<BigUint>,
}

impl ResidueSeries {
    pub fn modulus_exponent(&self) -> u32 {
        self.modulus_exponent
    }

    /// The modulus 2^m.
    pub fn modulus(&self) -> BigUint {
        BigUint::one() << self.modulus_exponent
    }

    pub fn prec(&self) -> usize {
        self.residues.len()
    }

    pub fn residue(&self, n: usize) -> Option<&BigUint> {
        self.residues.get(n)
    }

    pub fn residues(&self) -> &[BigUint] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|r| r.is_zero())
    }
}

/// Sieve of divisor power sums: entry n holds `sum_{d | n} d^e` for
/// `1 <= n < prec`, entry 0 unused (zero).
fn divisor_power_sums(prec: usize, e: u32) -> Vec<BigInt> {
    let mut sums = vec![BigInt::zero(); prec];
    for d in 1..prec {
        let dp = BigInt::from(d).pow(e);
        let mut n = d;
        while n < prec {
            sums[n] += &dp;
            n += d;
        }
    }
    sums
}

/// The Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n, weight 4.
pub fn eisenstein_e4(prec: usize) -> Result<QExpansion, QSeriesError> {
    if prec == 0 {
        return Err(QSeriesError::Empty);
    }
    let mut coeffs = divisor_power_sums(prec, 3);
    for c in coeffs.iter_mut() {
        *c *= 240;
    }
    coeffs[0] = BigInt::one();
    Ok(QExpansion { weight: 4, coeffs })
}

/// The Eisenstein series E6 = 1 - 504 sum sigma_5(n) q^n, weight 6.
pub fn eisenstein_e6(prec: usize) -> Result<QExpansion, QSeriesError> {
    if prec == 0 {
        return Err(QSeriesError::Empty);
    }
    let mut coeffs = divisor_power_sums(prec, 5);
    for c in coeffs.iter_mut() {
        *c *= -504;
    }
    coeffs[0] = BigInt::one();
    Ok(QExpansion { weight: 6, coeffs })
}

/// The series d = (E4 - 1)/16 = 15 sum sigma_3(n) q^n, carried at weight 4.
pub fn d_form(prec: usize) -> Result<QExpansion, QSeriesError> {
    if prec == 0 {
        return Err(QSeriesError::Empty);
    }
    let mut coeffs = divisor_power_sums(prec, 3);
    for c in coeffs.iter_mut() {
        *c *= 15;
    }
    coeffs[0] = BigInt::zero();
    Ok(QExpansion { weight: 4, coeffs })
}

/// Coefficients of `prod_{n>=1} (1 - q^n)` to length `len`, by multiplying
/// the sparse factors in place.
pub(crate) fn euler_product(len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    if len == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for n in 1..len {
        for i in (n..len).rev() {
            let (lo, hi) = c.split_at_mut(i);
            if !lo[i - n].is_zero() {
                hi[0] -= &lo[i - n];
            }
        }
    }
    c
}

/// Truncated convolution of coefficient slices. The per-index summation
/// order is fixed, so the result does not depend on the thread count.
fn convolve(a: &[BigInt], b: &[BigInt], out_len: usize) -> Vec<BigInt> {
    let conv_at = |k: usize| {
        let lo = (k + 1).saturating_sub(b.len());
        let hi = k.min(a.len() - 1);
        let mut acc = BigInt::zero();
        for i in lo..=hi {
            acc += &a[i] * &b[k - i];
        }
        acc
    };
    // Parallelism only pays off once the quadratic work is substantial.
    if out_len >= 512 {
        (0..out_len).into_par_iter().map(conv_at).collect()
    } else {
        (0..out_len).map(conv_at).collect()
    }
}

fn pow_trunc(base: &[BigInt], e: u32, len: usize) -> Vec<BigInt> {
    let mut result: Option<Vec<BigInt>> = None;
    let mut sq = base[..base.len().min(len)].to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => sq.clone(),
                Some(r) => convolve(&r, &sq, len),
            });
        }
        e >>= 1;
        if e > 0 {
            sq = convolve(&sq, &sq, len);
        }
    }
    result.unwrap_or_else(|| {
        let mut one = vec![BigInt::zero(); len];
        one[0] = BigInt::one();
        one
    })
}

/// The discriminant form Delta = q prod (1 - q^n)^24, weight 12. Requires
/// `prec >= 2` so that the normalization a_1 = 1 is visible.
pub fn delta(prec: usize) -> Result<QExpansion, QSeriesError> {
    if prec < 2 {
        return Err(QSeriesError::PrecisionTooSmall {
            needed: 2,
            got: prec,
        });
    }
    let p = euler_product(prec - 1);
    let p24 = pow_trunc(&p, 24, prec - 1);
    let mut coeffs = Vec::with_capacity(prec);
    coeffs.push(BigInt::zero());
    coeffs.extend(p24);
    Ok(QExpansion { weight: 12, coeffs })
}

/// The weight-36 form E4^6 Delta + 2 Delta^3.
pub fn build_f(prec: usize) -> Result<QExpansion, QSeriesError> {
    let e4 = eisenstein_e4(prec)?;
    let dl = delta(prec)?;
    let e4_6 = pow(&e4, 6);
    let lead = mul(&e4_6, &dl)?;
    let tail = scale(&BigInt::from(2), &pow(&dl, 3));
    add(&lead, &tail)
}

/// Sum of two series of equal weight, truncated to the shorter precision.
pub fn add(h1: &QExpansion, h2: &QExpansion) -> Result<QExpansion, QSeriesError> {
    if h1.weight != h2.weight {
        return Err(QSeriesError::WeightMismatch {
            left: h1.weight,
            right: h2.weight,
        });
    }
    let prec = h1.prec().min(h2.prec());
    let coeffs = (0..prec).map(|i| &h1.coeffs[i] + &h2.coeffs[i]).collect();
    Ok(QExpansion {
        weight: h1.weight,
        coeffs,
    })
}

/// Scalar multiple; weight is preserved.
pub fn scale(c: &BigInt, h: &QExpansion) -> QExpansion {
    QExpansion {
        weight: h.weight,
        coeffs: h.coeffs.iter().map(|a| c * a).collect(),
    }
}

/// Product of two series; weights add, precision is the minimum.
pub fn mul(h1: &QExpansion, h2: &QExpansion) -> Result<QExpansion, QSeriesError> {
    let prec = h1.prec().min(h2.prec());
    Ok(QExpansion {
        weight: h1.weight + h2.weight,
        coeffs: convolve(&h1.coeffs, &h2.coeffs, prec),
    })
}

/// `h^e` truncated to the precision of `h`; `h^0` is the constant 1 at
/// weight 0.
pub fn pow(h: &QExpansion, e: u32) -> QExpansion {
    QExpansion {
        weight: h.weight * e,
        coeffs: pow_trunc(&h.coeffs, e, h.prec()),
    }
}

/// Termwise reduction modulo 2^m; negative coefficients are normalized
/// into `[0, 2^m)`.
pub fn reduce(h: &QExpansion, m: u32) -> ResidueSeries {
    let modulus = BigInt::one() << m;
    let residues = h
        .coeffs
        .iter()
        .map(|c| {
            c.mod_floor(&modulus)
                .to_biguint()
                .expect("mod_floor of a positive modulus is nonnegative")
        })
        .collect();
    ResidueSeries {
        modulus_exponent: m,
        residues,
    }
}

/// The theta-type series with residue 1 exactly at odd-square exponents,
/// as a mod-2 series.
pub fn theta_odd_squares(prec: usize) -> Result<ResidueSeries, QSeriesError> {
    if prec == 0 {
        return Err(QSeriesError::Empty);
    }
    let mut residues = vec![BigUint::zero(); prec];
    let mut k = 1usize;
    while k * k < prec {
        residues[k * k] = BigUint::one();
        k += 2;
    }
    Ok(ResidueSeries {
        modulus_exponent: 1,
        residues,
    })
}

/// Outcome of comparing two exact integer series coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesIdentityReport {
    pub prec: usize,
    /// First index where the two sides differ, if any.
    pub first_mismatch: Option<usize>,
}

impl SeriesIdentityReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Checks the classical cube identity
/// `prod (1 - q^n)^3 = sum_{m = 1 mod 4} m q^{(m^2-1)/8}`
/// (both sides in characteristic 0), comparing all coefficients below
/// `prec`. The sum runs over all integers m congruent to 1 modulo 4,
/// negative ones included.
pub fn eta_cubed_identity_check(prec: usize) -> Result<SeriesIdentityReport, QSeriesError> {
    if prec < 2 {
        return Err(QSeriesError::PrecisionTooSmall {
            needed: 2,
            got: prec,
        });
    }
    let lhs = pow_trunc(&euler_product(prec), 3, prec);

    let mut rhs = vec![BigInt::zero(); prec];
    // m = 4j+1 and m = -(4j+3), j >= 0; exponent (m^2 - 1)/8.
    for sign in [1i64, -1] {
        let mut j = 0i64;
        loop {
            let m = if sign == 1 { 4 * j + 1 } else { -(4 * j + 3) };
            let exp = (m * m - 1) / 8;
            if exp as usize >= prec {
                break;
            }
            rhs[exp as usize] += BigInt::from(m);
            j += 1;
        }
    }

    let first_mismatch = (0..prec).find(|&i| lhs[i] != rhs[i]);
    Ok(SeriesIdentityReport {
        prec,
        first_mismatch,
    })
}

/// Residue of a big integer modulo 2^m, in `[0, 2^m)`.
pub fn residue_mod_pow2(c: &BigInt, m: u32) -> BigUint {
    let modulus = BigInt::one() << m;
    c.mod_floor(&modulus)
        .to_biguint()
        .expect("mod_floor of a positive modulus is nonnegative")
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_series(max_len: usize) -> impl Strategy<Value = QExpansion> {
        (1..max_len).prop_flat_map(|len| {
            (proptest::collection::vec(-50i64..50, len), 0u32..6u32).prop_map(|(coeffs, w)| {
                QExpansion::from_coeffs(w, coeffs.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
    }

    /// Residue-series product modulo 2^m, the test-side route of the
    /// reduction-homomorphism property.
    fn residue_product(a: &ResidueSeries, b: &ResidueSeries) -> Vec<BigUint> {
        let m = a.modulus();
        let len = a.prec().min(b.prec());
        (0..len)
            .map(|k| {
                let mut acc = BigUint::zero();
                for i in 0..=k {
                    if i < a.prec() && k - i < b.prec() {
                        acc += a.residue(i).unwrap() * b.residue(k - i).unwrap();
                    }
                }
                acc % &m
            })
            .collect()
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_series(24), b in arb_series(24)) {
            let ab = mul(&a, &b).unwrap();
            let ba = mul(&b, &a).unwrap();
            prop_assert_eq!(ab.coefficients(), ba.coefficients());
        }

        #[test]
        fn mul_associates(a in arb_series(14), b in arb_series(14), c in arb_series(14)) {
            let left = mul(&mul(&a, &b).unwrap(), &c).unwrap();
            let right = mul(&a, &mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left.coefficients(), right.coefficients());
        }

        #[test]
        fn mul_truncates_to_minimum_precision(a in arb_series(24), b in arb_series(24)) {
            prop_assert_eq!(mul(&a, &b).unwrap().prec(), a.prec().min(b.prec()));
        }

        #[test]
        fn reduce_commutes_with_multiplication(
            a in arb_series(18),
            b in arb_series(18),
            m in 1u32..6,
        ) {
            let direct = reduce(&mul(&a, &b).unwrap(), m);
            let via_residues = residue_product(&reduce(&a, m), &reduce(&b, m));
            prop_assert_eq!(direct.residues(), &via_residues[..]);
        }

        #[test]
        fn reduced_residues_stay_in_range(a in arb_series(24), m in 1u32..8) {
            let r = reduce(&a, m);
            let modulus = r.modulus();
            prop_assert!(r.residues().iter().all(|x| x < &modulus));
        }
    }
}
