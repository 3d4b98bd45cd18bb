//! Short Weierstrass curves `y^2 = x^3 + a2 x^2 + a4 x + a6` over exact
//! fields: chord-tangent group law, point counting over F_l and F_l^2,
//! traces of Frobenius, the weight-2 newform coefficients attached to a
//! rational curve, and quadratic twists.
//!
//! The curve model keeps a1 = a3 = 0 throughout; the rational curves
//! handled here (one fixed curve and its twists by -1, 2, -2) all fit.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{Field, PrimeField, QuadExtField};
use crate::hecke::CoefficientSource;
use crate::squares::is_prime;
use crate::tower::{self, FieldAutomorphism, Tower, TowerElement, TowerError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EllipticError {
    #[error("curve discriminant is zero")]
    SingularCurve,
    #[error("point does not satisfy the curve equation")]
    PointOffCurve,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("bad reduction at {ell}")]
    BadReduction { ell: u64 },
    #[error("enumeration guard exceeded: l = {ell} > {guard}")]
    GuardExceeded { ell: u64, guard: u64 },
    #[error("unsupported twist {0}: only -1, 2, -2 (and 1) keep 2-power conductor")]
    UnsupportedTwist(i64),
    #[error(transparent)]
    Tower(#[from] TowerError),
}

/// Affine point or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePoint<E> {
    Infinity,
    Affine { x: E, y: E },
}

impl<E> CurvePoint<E> {
    pub fn affine(x: E, y: E) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

/// A short Weierstrass curve over a field context `F`.
#[derive(Debug, Clone)]
pub struct WeierstrassCurve<F: Field> {
    field: F,
    a2: F::Elem,
    a4: F::Elem,
    a6: F::Elem,
}

impl<F: Field> WeierstrassCurve<F> {
    /// Rejects singular curves.
    pub fn new(field: F, a2: F::Elem, a4: F::Elem, a6: F::Elem) -> Result<Self, EllipticError> {
        let curve = WeierstrassCurve { field, a2, a4, a6 };
        if curve.field.is_zero(&curve.discriminant()) {
            return Err(EllipticError::SingularCurve);
        }
        Ok(curve)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coefficients(&self) -> (&F::Elem, &F::Elem, &F::Elem) {
        (&self.a2, &self.a4, &self.a6)
    }

    /// Standard short-Weierstrass discriminant with a1 = a3 = 0:
    /// b2 = 4 a2, b4 = 2 a4, b6 = 4 a6, b8 = 4 a2 a6 - a4^2,
    /// disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
    pub fn discriminant(&self) -> F::Elem {
        let f = &self.field;
        let c = |n: i64| f.integer(n);
        let b2 = f.mul(&c(4), &self.a2);
        let b4 = f.mul(&c(2), &self.a4);
        let b6 = f.mul(&c(4), &self.a6);
        let b8 = f.sub(
            &f.mul(&c(4), &f.mul(&self.a2, &self.a6)),
            &f.mul(&self.a4, &self.a4),
        );
        let t1 = f.neg(&f.mul(&f.mul(&b2, &b2), &b8));
        let t2 = f.mul(&c(-8), &f.mul(&b4, &f.mul(&b4, &b4)));
        let t3 = f.mul(&c(-27), &f.mul(&b6, &b6));
        let t4 = f.mul(&c(9), &f.mul(&b2, &f.mul(&b4, &b6)));
        f.add(&f.add(&t1, &t2), &f.add(&t3, &t4))
    }

    /// `x^3 + a2 x^2 + a4 x + a6`.
    pub fn rhs(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let x2 = f.mul(x, x);
        let x3 = f.mul(&x2, x);
        f.add(
            &f.add(&x3, &f.mul(&self.a2, &x2)),
            &f.add(&f.mul(&self.a4, x), &self.a6),
        )
    }

    pub fn contains(&self, p: &CurvePoint<F::Elem>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                f.mul(y, y) == self.rhs(x)
            }
        }
    }

    fn ensure_on_curve(&self, p: &CurvePoint<F::Elem>) -> Result<(), EllipticError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(EllipticError::PointOffCurve)
        }
    }

    pub fn negate(&self, p: &CurvePoint<F::Elem>) -> Result<CurvePoint<F::Elem>, EllipticError> {
        self.ensure_on_curve(p)?;
        Ok(match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: self.field.neg(y),
            },
        })
    }

    /// Chord-tangent addition; doubling a 2-torsion point (y = 0) yields
    /// the point at infinity.
    pub fn add(
        &self,
        p: &CurvePoint<F::Elem>,
        q: &CurvePoint<F::Elem>,
    ) -> Result<CurvePoint<F::Elem>, EllipticError> {
        self.ensure_on_curve(p)?;
        self.ensure_on_curve(q)?;
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return Ok(q.clone()),
            (_, CurvePoint::Infinity) => return Ok(p.clone()),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 == x2 {
            if *y1 == f.neg(y2) {
                return Ok(CurvePoint::Infinity);
            }
            // tangent slope (3x^2 + 2 a2 x + a4) / (2y)
            let num = f.add(
                &f.add(
                    &f.mul(&f.integer(3), &f.mul(x1, x1)),
                    &f.mul(&f.integer(2), &f.mul(&self.a2, x1)),
                ),
                &self.a4,
            );
            let den = f.mul(&f.integer(2), y1);
            f.mul(&num, &f.inv(&den).expect("y != 0 here"))
        } else {
            let num = f.sub(y2, y1);
            let den = f.sub(x2, x1);
            f.mul(&num, &f.inv(&den).expect("x1 != x2"))
        };
        let x3 = f.sub(&f.sub(&f.sub(&f.mul(&lambda, &lambda), &self.a2), x1), x2);
        let y3 = f.sub(&f.mul(&lambda, &f.sub(x1, &x3)), y1);
        Ok(CurvePoint::Affine { x: x3, y: y3 })
    }

    pub fn double(&self, p: &CurvePoint<F::Elem>) -> Result<CurvePoint<F::Elem>, EllipticError> {
        self.add(p, p)
    }

    pub fn scalar_mul(
        &self,
        k: u64,
        p: &CurvePoint<F::Elem>,
    ) -> Result<CurvePoint<F::Elem>, EllipticError> {
        self.ensure_on_curve(p)?;
        let mut acc = CurvePoint::Infinity;
        let mut base = p.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base)?;
            }
        }
        Ok(acc)
    }
}

/// A curve over Q with integer coefficients, reducible modulo odd primes
/// of good reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveOverQ {
    pub a2: i64,
    pub a4: i64,
    pub a6: i64,
}

impl CurveOverQ {
    /// The fixed curve `y^2 = x^3 + x^2 + x + 1` of discriminant -256.
    pub fn base_curve() -> CurveOverQ {
        CurveOverQ {
            a2: 1,
            a4: 1,
            a6: 1,
        }
    }

    pub fn discriminant(&self) -> i128 {
        let a2 = self.a2 as i128;
        let a4 = self.a4 as i128;
        let a6 = self.a6 as i128;
        let b2 = 4 * a2;
        let b4 = 2 * a4;
        let b6 = 4 * a6;
        let b8 = 4 * a2 * a6 - a4 * a4;
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }

    /// The quadratic twist `y^2 = x^3 + D a2 x^2 + D^2 a4 x + D^3 a6`.
    /// Only D in {1, -1, 2, -2} is accepted (2-power conductor twists).
    pub fn quadratic_twist(&self, d: i64) -> Result<CurveOverQ, EllipticError> {
        if ![1, -1, 2, -2].contains(&d) {
            return Err(EllipticError::UnsupportedTwist(d));
        }
        Ok(CurveOverQ {
            a2: d * self.a2,
            a4: d * d * self.a4,
            a6: d * d * d * self.a6,
        })
    }

    /// Reduction modulo an odd prime of good reduction.
    pub fn reduce(&self, ell: u64) -> Result<WeierstrassCurve<PrimeField>, EllipticError> {
        if ell == 2 || !is_prime(ell) {
            return Err(EllipticError::NotOddPrime(ell));
        }
        if self.discriminant().rem_euclid(ell as i128) == 0 {
            return Err(EllipticError::BadReduction { ell });
        }
        let f = PrimeField::new(ell);
        let curve = WeierstrassCurve::new(
            f,
            f.integer(self.a2),
            f.integer(self.a4),
            f.integer(self.a6),
        )?;
        Ok(curve)
    }

    /// The same curve over an arbitrary exact field.
    pub fn over<F: Field>(&self, field: F) -> Result<WeierstrassCurve<F>, EllipticError> {
        let a2 = field.integer(self.a2);
        let a4 = field.integer(self.a4);
        let a6 = field.integer(self.a6);
        WeierstrassCurve::new(field, a2, a4, a6)
    }
}

/// `#C(F_l)` by the character sum `l + 1 + sum_x chi(rhs(x))` with chi the
/// Legendre symbol read off a residue table.
pub fn count_points_prime(ell: u64, curve: &CurveOverQ) -> Result<u64, EllipticError> {
    let reduced = curve.reduce(ell)?;
    let f = *reduced.field();
    let mut chi = vec![-1i64; ell as usize];
    chi[0] = 0;
    for x in 1..ell {
        chi[(x * x % ell) as usize] = 1;
    }
    let mut count = ell as i64 + 1;
    for x in 0..ell {
        count += chi[reduced.rhs(&f.integer(x as i64)) as usize];
    }
    Ok(count as u64)
}

/// Trace of Frobenius `a_l = l + 1 - #C(F_l)`.
pub fn trace_of_frobenius(ell: u64, curve: &CurveOverQ) -> Result<i64, EllipticError> {
    let count = count_points_prime(ell, curve)?;
    Ok(ell as i64 + 1 - count as i64)
}

/// `#C(F_l^2)` by exhaustive enumeration of `F_l[t]/(t^2 - nu)`, guarded
/// because the loop is quadratic in l.
pub fn count_points_quadratic(
    ell: u64,
    curve: &CurveOverQ,
    guard: u64,
) -> Result<u64, EllipticError> {
    if ell > guard {
        return Err(EllipticError::GuardExceeded { ell, guard });
    }
    curve.reduce(ell)?; // validates primality and good reduction
    let f = QuadExtField::new(ell);
    let reduced = curve.over(f)?;
    let p = ell as usize;
    // Multiplicity of each value as a square: sqrt_count[a + b*l] counts y with y^2 = a + b t.
    let mut sqrt_count = vec![0u64; p * p];
    for y in f.elements() {
        let sq = f.mul(&y, &y);
        sqrt_count[sq.0 as usize + sq.1 as usize * p] += 1;
    }
    let mut count = 1u64; // infinity
    for x in f.elements() {
        let v = reduced.rhs(&x);
        count += sqrt_count[v.0 as usize + v.1 as usize * p];
    }
    Ok(count)
}

/// Outcome of the Frobenius-square identity check at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusSquareReport {
    pub ell: u64,
    pub count: u64,
    /// `(l + 1)^2 - a_l^2`.
    pub expected: u64,
    /// Whether 16 divides the count; only reported for l = 3 (mod 8).
    pub sixteen_divides: Option<bool>,
}

impl FrobeniusSquareReport {
    pub fn identity_holds(&self) -> bool {
        self.count == self.expected
    }
}

/// Checks `#C(F_l^2) = (l+1)^2 - a_l^2` by enumeration, and for
/// `l = 3 (mod 8)` reports whether 16 divides the count (full 4-torsion
/// over F_l^2 would force divisibility by 16).
pub fn frobenius_square_identity(
    ell: u64,
    curve: &CurveOverQ,
    guard: u64,
) -> Result<FrobeniusSquareReport, EllipticError> {
    let count = count_points_quadratic(ell, curve, guard)?;
    let a = trace_of_frobenius(ell, curve)?;
    let expected = ((ell as i64 + 1) * (ell as i64 + 1) - a * a) as u64;
    let sixteen_divides = (ell % 8 == 3).then_some(count % 16 == 0);
    Ok(FrobeniusSquareReport {
        ell,
        count,
        expected,
        sixteen_divides,
    })
}

/// Coefficients `a_1 .. a_B` of the weight-2 newform attached to a curve
/// of 2-power conductor: odd-prime coefficients from point counts, prime
/// powers by `a_{l^(k+1)} = a_l a_{l^k} - l a_{l^(k-1)}`, all 2-power
/// indices zero, composites by multiplicativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewformCoefficients {
    curve: CurveOverQ,
    level: u32,
    /// values[n] = a_n for 0 <= n <= bound, with values[0] = 0.
    values: Vec<BigInt>,
}

impl NewformCoefficients {
    pub fn bound(&self) -> usize {
        self.values.len() - 1
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn curve(&self) -> &CurveOverQ {
        &self.curve
    }

    pub fn a(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

impl CoefficientSource for NewformCoefficients {
    fn limit(&self) -> usize {
        self.values.len()
    }
    fn coefficient(&self, n: usize) -> Option<BigInt> {
        self.values.get(n).cloned()
    }
}

/// Builds the newform coefficients for the fixed curve up to `bound`.
/// `a_2 = 0` is curve-database metadata for this conductor-128 form; all
/// higher 2-power coefficients follow from the bad-prime recursion.
pub fn g_coefficients(bound: usize) -> Result<NewformCoefficients, EllipticError> {
    g_coefficients_for(&CurveOverQ::base_curve(), bound)
}

fn g_coefficients_for(
    curve: &CurveOverQ,
    bound: usize,
) -> Result<NewformCoefficients, EllipticError> {
    // Smallest-prime-factor sieve drives the multiplicative fill-in.
    let mut spf = vec![0usize; bound + 1];
    let mut i = 2;
    while i <= bound {
        if spf[i] == 0 {
            let mut j = i;
            while j <= bound {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
        i += 1;
    }

    let mut values = vec![BigInt::zero(); bound + 1];
    if bound >= 1 {
        values[1] = BigInt::one();
    }
    for n in 2..=bound {
        let p = spf[n];
        let mut pe = p;
        let mut m = n / p;
        while m.is_multiple_of(p) {
            pe *= p;
            m /= p;
        }
        values[n] = if m > 1 {
            // coprime split n = p^e * m
            &values[pe] * &values[m]
        } else if n == p {
            if p == 2 {
                BigInt::zero()
            } else {
                let a = trace_of_frobenius(p as u64, curve)?;
                debug_assert!(a * a <= 4 * p as i64, "Hasse bound violated at {p}");
                BigInt::from(a)
            }
        } else if p == 2 {
            BigInt::zero()
        } else {
            // n = p^e with e >= 2
            &values[p] * &values[n / p] - BigInt::from(p) * &values[n / (p * p)]
        };
    }
    Ok(NewformCoefficients {
        curve: *curve,
        level: 128,
        values,
    })
}

/// The six 4-torsion points of the fixed curve over K, the K-automorphisms
/// r and s, and the sixteen combinations `a P1 + b P2`.
pub struct FourTorsionBasis {
    pub tower: Tower,
    pub r: FieldAutomorphism,
    pub s: FieldAutomorphism,
    pub curve: WeierstrassCurve<Tower>,
    pub p1: CurvePoint<TowerElement>,
    pub p2: CurvePoint<TowerElement>,
    pub p3: CurvePoint<TowerElement>,
    pub q1: CurvePoint<TowerElement>,
    pub q2: CurvePoint<TowerElement>,
    pub q3: CurvePoint<TowerElement>,
    /// Index 4a + b holds a P1 + b P2 for a, b in 0..4.
    pub combos: Vec<CurvePoint<TowerElement>>,
}

/// Constructs the explicit 4-torsion of `y^2 = x^3 + x^2 + x + 1` over K.
///
/// The 2-torsion x-coordinates are -i, -1, i; the points of order 4 use
/// the fixed square root g = sqrt(1+i):
/// P1 = (-i - i sqrt2 g, -2i - sqrt2 g - i sqrt2 g),
/// P2 = (-1 + sqrt2, g + i g - i sqrt2 g),
/// P3 = (i - g - i g, 2i - 2i g).
pub fn four_torsion_basis() -> Result<FourTorsionBasis, EllipticError> {
    let (k, r, s) = tower::build_k();
    let curve = CurveOverQ::base_curve().over(k.clone())?;

    let i = k.generator(0);
    let s2 = k.generator(1);
    let g = k.generator(2);
    let s2g = s2.mul(&g)?;
    let ig = i.mul(&g)?;
    let is2g = i.mul(&s2g)?;
    let two = k.integer(2);

    let x1 = i.neg().sub(&is2g)?;
    let y1 = two.mul(&i)?.neg().sub(&s2g)?.sub(&is2g)?;
    let p1 = CurvePoint::affine(x1, y1);

    let x2 = k.integer(-1).add(&s2)?;
    let y2 = g.add(&ig)?.sub(&is2g)?;
    let p2 = CurvePoint::affine(x2, y2);

    let x3 = i.sub(&g)?.sub(&ig)?;
    let y3 = two.mul(&i)?.sub(&two.mul(&ig)?)?;
    let p3 = CurvePoint::affine(x3, y3);

    let q1 = CurvePoint::affine(i.neg(), k.zero());
    let q2 = CurvePoint::affine(k.integer(-1), k.zero());
    let q3 = CurvePoint::affine(i.clone(), k.zero());

    for p in [&p1, &p2, &p3, &q1, &q2, &q3] {
        if !curve.contains(p) {
            return Err(EllipticError::PointOffCurve);
        }
    }

    let mut combos = Vec::with_capacity(16);
    for a in 0..4u64 {
        for b in 0..4u64 {
            let pa = curve.scalar_mul(a, &p1)?;
            let pb = curve.scalar_mul(b, &p2)?;
            combos.push(curve.add(&pa, &pb)?);
        }
    }

    Ok(FourTorsionBasis {
        tower: k,
        r,
        s,
        curve,
        p1,
        p2,
        p3,
        q1,
        q2,
        q3,
        combos,
    })
}

/// One named sub-check of the 4-torsion verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionCheck {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    pub checks: Vec<TorsionCheck>,
}

impl TorsionReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.pass).map(|c| c.name)
    }
}

/// Verifies the explicit 4-torsion: all six points on the curve,
/// 2 P_j = Q_j, P1 + P2 = P3, P1 and P2 of order exactly 4, and the
/// sixteen combinations a P1 + b P2 pairwise distinct.
pub fn torsion_verify() -> Result<TorsionReport, EllipticError> {
    let basis = four_torsion_basis()?;
    let curve = &basis.curve;
    let mut checks = Vec::new();

    for (name, p) in [
        ("P1 on curve", &basis.p1),
        ("P2 on curve", &basis.p2),
        ("P3 on curve", &basis.p3),
        ("Q1 on curve", &basis.q1),
        ("Q2 on curve", &basis.q2),
        ("Q3 on curve", &basis.q3),
    ] {
        checks.push(TorsionCheck {
            name,
            pass: curve.contains(p),
        });
    }

    for (name, p, q) in [
        ("2*P1 = Q1", &basis.p1, &basis.q1),
        ("2*P2 = Q2", &basis.p2, &basis.q2),
        ("2*P3 = Q3", &basis.p3, &basis.q3),
    ] {
        checks.push(TorsionCheck {
            name,
            pass: curve.double(p)? == *q,
        });
    }

    checks.push(TorsionCheck {
        name: "P1 + P2 = P3",
        pass: curve.add(&basis.p1, &basis.p2)? == basis.p3,
    });

    for (name, p) in [("P1 has order 4", &basis.p1), ("P2 has order 4", &basis.p2)] {
        let mut orders = (1..=4).map(|k| curve.scalar_mul(k, p));
        let below = orders.by_ref().take(3).collect::<Result<Vec<_>, _>>()?;
        let fourth = orders.next().expect("fourth multiple")?;
        checks.push(TorsionCheck {
            name,
            pass: below.iter().all(|m| !m.is_infinity()) && fourth.is_infinity(),
        });
    }

    let mut distinct = true;
    for i in 0..16 {
        for j in (i + 1)..16 {
            if basis.combos[i] == basis.combos[j] {
                distinct = false;
            }
        }
    }
    checks.push(TorsionCheck {
        name: "16 combinations a*P1 + b*P2 distinct",
        pass: distinct,
    });

    Ok(TorsionReport { checks })
}
