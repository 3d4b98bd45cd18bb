//! A minimal exact-field abstraction.
//!
//! The curve code is generic over this trait so the same group-law
//! formulas run over prime fields, their quadratic extensions, and the
//! degree-8 tower fields. Implementations must be exact: no rounding,
//! no probabilistic shortcuts.

use std::fmt::Debug;

/// Context-style field operations over an associated element type.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn integer(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The prime field F_p for odd p small enough for u64 arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// The caller is responsible for p being prime.
    pub fn new(p: u64) -> Self {
        assert!((2..(1u64 << 32)).contains(&p), "modulus out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, base: u64, mut e: u64) -> u64 {
        let mut base = base % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    /// Legendre symbol by Euler's criterion.
    pub fn legendre(&self, a: u64) -> i32 {
        let a = a % self.p;
        if a == 0 {
            return 0;
        }
        if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    /// Smallest quadratic non-residue.
    pub fn smallest_nonresidue(&self) -> u64 {
        (2..self.p)
            .find(|&nu| self.legendre(nu) == -1)
            .expect("odd prime fields have nonresidues")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn integer(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        Some(self.pow(*a, self.p - 2))
    }
}

/// The quadratic extension F_p[t]/(t^2 - nu) with nu a non-residue;
/// elements are `a + b t` stored as pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadExtField {
    base: PrimeField,
    nonresidue: u64,
}

impl QuadExtField {
    pub fn new(p: u64) -> Self {
        let base = PrimeField::new(p);
        let nonresidue = base.smallest_nonresidue();
        QuadExtField { base, nonresidue }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    /// Number of field elements, p^2.
    pub fn size(&self) -> u64 {
        self.base.p * self.base.p
    }

    pub fn elements(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let p = self.base.p;
        (0..p).flat_map(move |a| (0..p).map(move |b| (a, b)))
    }
}

impl Field for QuadExtField {
    type Elem = (u64, u64);

    fn zero(&self) -> (u64, u64) {
        (0, 0)
    }
    fn one(&self) -> (u64, u64) {
        (1 % self.base.p, 0)
    }
    fn integer(&self, n: i64) -> (u64, u64) {
        (self.base.integer(n), 0)
    }
    fn add(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn sub(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }
    fn mul(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        let f = &self.base;
        let cross = f.mul(&f.mul(&a.1, &b.1), &self.nonresidue);
        (
            f.add(&f.mul(&a.0, &b.0), &cross),
            f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0)),
        )
    }
    fn neg(&self, a: &(u64, u64)) -> (u64, u64) {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn inv(&self, a: &(u64, u64)) -> Option<(u64, u64)> {
        let f = &self.base;
        // (a0 + a1 t)^-1 = (a0 - a1 t) / (a0^2 - nu a1^2)
        let norm = f.sub(
            &f.mul(&a.0, &a.0),
            &f.mul(&f.mul(&a.1, &a.1), &self.nonresidue),
        );
        let ninv = f.inv(&norm)?;
        Some((f.mul(&a.0, &ninv), f.mul(&f.neg(&a.1), &ninv)))
    }
}
