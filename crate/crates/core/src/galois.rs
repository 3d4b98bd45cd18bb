//! The dihedral group D4, its two embeddings into GL2(Z/4), and Frobenius
//! conjugacy classes computed from residue symbols.
//!
//! Frobenius classes are never obtained by factoring ideals: for the two
//! dihedral fields in [`crate::tower`] the splitting behaviour of an odd
//! prime is decided by the Legendre symbols (-1/l), (2/l), (-2/l) plus,
//! for the second field, the quartic residue status of 2. The classes tie
//! back to the curve through [`torsion_matrices`], which reads the action
//! of the field automorphisms on the explicit 4-torsion basis.

use std::fmt;

use crate::elliptic::{self, CurvePoint, EllipticError};
use crate::field::PrimeField;
use crate::squares::{is_prime, jacobi};
use crate::tower::{FieldAutomorphism, TowerElement};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("frobenius classes are defined for odd primes, got {0}")]
    NotOddPrime(u64),
    #[error("a frobenius class must be a nonempty conjugation-stable set")]
    NotConjugationStable,
    #[error("trace is not constant on the class")]
    NonConstantTrace,
    #[error("embedding is not an injective homomorphism")]
    BadEmbedding,
    #[error("automorphism image of a basis point is not among the 16 combinations")]
    ImageOutsideSpan,
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
}

/// An element of D4 in the normal form s^a r^b with a in {0,1} and
/// b in {0,..,3}; r^4 = s^2 = 1 and s r s = r^-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct D4Element {
    refl: u8,
    rot: u8,
}

impl D4Element {
    pub fn new(refl: u8, rot: u8) -> D4Element {
        D4Element {
            refl: refl % 2,
            rot: rot % 4,
        }
    }

    pub fn identity() -> D4Element {
        D4Element::new(0, 0)
    }

    /// r^b.
    pub fn rotation(b: u8) -> D4Element {
        D4Element::new(0, b)
    }

    /// s r^b.
    pub fn reflection(b: u8) -> D4Element {
        D4Element::new(1, b)
    }

    pub fn is_reflection(&self) -> bool {
        self.refl == 1
    }

    pub fn rotation_part(&self) -> u8 {
        self.rot
    }

    pub fn all() -> [D4Element; 8] {
        let mut out = [D4Element::identity(); 8];
        for (idx, slot) in out.iter_mut().enumerate() {
            *slot = D4Element::new(idx as u8 / 4, idx as u8 % 4);
        }
        out
    }
}

/// Normal-form product: r^b s = s r^(-b), so
/// (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d).
pub fn d4_mul(g: D4Element, h: D4Element) -> D4Element {
    let rot = if h.refl == 1 {
        (4 - g.rot) % 4 + h.rot
    } else {
        g.rot + h.rot
    };
    D4Element::new(g.refl ^ h.refl, rot % 4)
}

pub fn d4_inv(g: D4Element) -> D4Element {
    if g.refl == 1 {
        // reflections are involutions
        g
    } else {
        D4Element::new(0, (4 - g.rot) % 4)
    }
}

impl fmt::Display for D4Element {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.refl, self.rot) {
            (0, 0) => "1".to_string(),
            (0, 1) => "r".to_string(),
            (0, b) => format!("r{b}"),
            (1, 0) => "s".to_string(),
            (1, 1) => "sr".to_string(),
            (1, b) => format!("sr{b}"),
            _ => unreachable!(),
        };
        write!(out, "{name}")
    }
}

/// A 2x2 matrix over Z/4, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2Z4 {
    entries: [[u8; 2]; 2],
}

impl Mat2Z4 {
    pub fn new(entries: [[i64; 2]; 2]) -> Mat2Z4 {
        let mut reduced = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                reduced[i][j] = entries[i][j].rem_euclid(4) as u8;
            }
        }
        Mat2Z4 { entries: reduced }
    }

    pub fn identity() -> Mat2Z4 {
        Mat2Z4::new([[1, 0], [0, 1]])
    }

    pub fn entries(&self) -> [[u8; 2]; 2] {
        self.entries
    }

    pub fn mul(&self, other: &Mat2Z4) -> Mat2Z4 {
        let a = &self.entries;
        let b = &other.entries;
        let mut out = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 4;
            }
        }
        Mat2Z4 { entries: out }
    }

    pub fn pow(&self, e: u8) -> Mat2Z4 {
        let mut acc = Mat2Z4::identity();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> u8 {
        (self.entries[0][0] + self.entries[1][1]) % 4
    }

    pub fn det(&self) -> u8 {
        (self.entries[0][0] * self.entries[1][1] + 4 * 4 - self.entries[0][1] * self.entries[1][0])
            % 4
    }

    /// Multiplicative order in GL2(Z/4); panics beyond 96 (the group
    /// order), which cannot happen for unit-determinant input.
    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut e = 1;
        while acc != Mat2Z4::identity() {
            acc = acc.mul(self);
            e += 1;
            assert!(e <= 96, "order exceeds |GL2(Z/4)|");
        }
        e
    }
}

impl fmt::Display for Mat2Z4 {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "[[{},{}],[{},{}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// A conjugation-stable subset of D4, the possible values of a Frobenius
/// element at an unramified prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusClass {
    elements: Vec<D4Element>,
}

impl FrobeniusClass {
    /// Validates nonemptiness and stability under conjugation.
    pub fn new(mut elements: Vec<D4Element>) -> Result<FrobeniusClass, GaloisError> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(GaloisError::NotConjugationStable);
        }
        for &g in &elements {
            for h in D4Element::all() {
                let conj = d4_mul(d4_mul(h, g), d4_inv(h));
                if !elements.contains(&conj) {
                    return Err(GaloisError::NotConjugationStable);
                }
            }
        }
        Ok(FrobeniusClass { elements })
    }

    pub fn elements(&self) -> &[D4Element] {
        &self.elements
    }

    pub fn contains(&self, g: D4Element) -> bool {
        self.elements.contains(&g)
    }
}

impl fmt::Display for FrobeniusClass {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.elements.iter().map(|g| g.to_string()).collect();
        write!(out, "{{{}}}", names.join(","))
    }
}

/// An embedding of D4 into GL2(Z/4), given by images of r and s and
/// validated as an injective homomorphism on all 64 products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisRepresentation {
    name: &'static str,
    r_image: Mat2Z4,
    s_image: Mat2Z4,
}

impl GaloisRepresentation {
    pub fn build(
        name: &'static str,
        r_image: Mat2Z4,
        s_image: Mat2Z4,
    ) -> Result<GaloisRepresentation, GaloisError> {
        let rep = GaloisRepresentation {
            name,
            r_image,
            s_image,
        };
        // images must be invertible
        for m in [&r_image, &s_image] {
            if m.det() % 2 == 0 {
                return Err(GaloisError::BadEmbedding);
            }
        }
        // homomorphism on all 64 products
        for g in D4Element::all() {
            for h in D4Element::all() {
                if rep.image(d4_mul(g, h)) != rep.image(g).mul(&rep.image(h)) {
                    return Err(GaloisError::BadEmbedding);
                }
            }
        }
        // injectivity: 8 distinct images
        let images: Vec<Mat2Z4> = D4Element::all().iter().map(|&g| rep.image(g)).collect();
        for i in 0..8 {
            for j in (i + 1)..8 {
                if images[i] == images[j] {
                    return Err(GaloisError::BadEmbedding);
                }
            }
        }
        Ok(rep)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn image_of_r(&self) -> Mat2Z4 {
        self.r_image
    }

    pub fn image_of_s(&self) -> Mat2Z4 {
        self.s_image
    }

    pub fn image(&self, g: D4Element) -> Mat2Z4 {
        let rot = self.r_image.pow(g.rotation_part());
        if g.is_reflection() {
            self.s_image.mul(&rot)
        } else {
            rot
        }
    }
}

/// The embedding r -> [[1,2],[1,1]], s -> [[-1,2],[2,-1]].
pub fn build_rho() -> GaloisRepresentation {
    GaloisRepresentation::build(
        "rho",
        Mat2Z4::new([[1, 2], [1, 1]]),
        Mat2Z4::new([[-1, 2], [2, -1]]),
    )
    .expect("fixed matrices give a valid embedding")
}

/// The embedding with the same image of r but s -> [[1,0],[1,-1]].
pub fn build_rho_prime() -> GaloisRepresentation {
    GaloisRepresentation::build(
        "rho'",
        Mat2Z4::new([[1, 2], [1, 1]]),
        Mat2Z4::new([[1, 0], [1, -1]]),
    )
    .expect("fixed matrices give a valid embedding")
}

fn class(elems: &[D4Element]) -> FrobeniusClass {
    FrobeniusClass::new(elems.to_vec()).expect("canonical classes are conjugation-stable")
}

/// Frobenius class of an odd prime in the first dihedral field
/// K = Q(i, sqrt2, sqrt(1+i)), read off l mod 8 and cross-checked against
/// the quadratic subfield splitting pattern.
pub fn frobenius_class_k(ell: u64) -> Result<FrobeniusClass, GaloisError> {
    splitting_symbols(ell)?;
    let r = D4Element::rotation;
    let sr = D4Element::reflection;
    let by_residue = match ell % 8 {
        1 => class(&[r(0), r(2)]),
        3 => class(&[r(1), r(3)]),
        5 => class(&[sr(0), sr(2)]),
        _ => class(&[sr(1), sr(3)]),
    };

    // Same classification from the Legendre symbols alone: which of the
    // quadratic subfields Q(i), Q(i sqrt2), Q(sqrt2) does l split in?
    let (minus_one, two, minus_two) = splitting_symbols(ell)?;
    let by_symbols = match (minus_one, minus_two, two) {
        (1, 1, 1) => class(&[r(0), r(2)]),
        (-1, 1, -1) => class(&[r(1), r(3)]),
        (1, -1, -1) => class(&[sr(0), sr(2)]),
        (-1, -1, 1) => class(&[sr(1), sr(3)]),
        _ => unreachable!("the three symbols multiply to 1"),
    };
    assert_eq!(
        by_residue, by_symbols,
        "residue and symbol classifications disagree at {ell}"
    );
    Ok(by_residue)
}

/// Frobenius class of an odd prime in the second dihedral field
/// L = Q(i, 2^(1/4)). For l = 1 (mod 8) the class is a singleton decided
/// by whether 2 is a quartic residue mod l.
pub fn frobenius_class_l(ell: u64) -> Result<FrobeniusClass, GaloisError> {
    let (minus_one, two, minus_two) = splitting_symbols(ell)?;
    let r = D4Element::rotation;
    let sr = D4Element::reflection;
    let picked = match ell % 8 {
        1 => {
            let f = PrimeField::new(ell);
            if f.pow(2, (ell - 1) / 4) == 1 {
                class(&[r(0)])
            } else {
                class(&[r(2)])
            }
        }
        5 => class(&[r(1), r(3)]),
        7 => class(&[sr(0), sr(2)]),
        _ => class(&[sr(1), sr(3)]),
    };

    // Cross-check against the quadratic subfields of L: the subgroup
    // fixing Q(i) is <r>, Q(sqrt2) is {1, r2, s, sr2}, and Q(i sqrt2) is
    // {1, r2, sr, sr3}; membership must match the three Legendre symbols.
    for g in picked.elements() {
        let fixes_i = !g.is_reflection();
        let fixes_sqrt2 = g.rotation_part() % 2 == 0;
        let fixes_i_sqrt2 = (g.rotation_part() % 2 == 0) == !g.is_reflection();
        assert_eq!(fixes_i, minus_one == 1, "Q(i) splitting mismatch at {ell}");
        assert_eq!(
            fixes_sqrt2,
            two == 1,
            "Q(sqrt2) splitting mismatch at {ell}"
        );
        assert_eq!(
            fixes_i_sqrt2,
            minus_two == 1,
            "Q(i sqrt2) splitting mismatch at {ell}"
        );
    }
    Ok(picked)
}

/// Legendre symbols ((-1/l), (2/l), (-2/l)) for an odd prime l.
fn splitting_symbols(ell: u64) -> Result<(i32, i32, i32), GaloisError> {
    if ell == 2 || !is_prime(ell) {
        return Err(GaloisError::NotOddPrime(ell));
    }
    let l = ell as i64;
    Ok((
        jacobi(-1, l).expect("odd modulus"),
        jacobi(2, l).expect("odd modulus"),
        jacobi(-2, l).expect("odd modulus"),
    ))
}

/// The common trace mod 4 of a representation over a Frobenius class;
/// errors if the class is not trace-constant (a class-function sanity
/// check rather than a silent choice).
pub fn trace_mod4(rep: &GaloisRepresentation, class: &FrobeniusClass) -> Result<u8, GaloisError> {
    let mut traces = class.elements().iter().map(|&g| rep.image(g).trace());
    let first = traces.next().expect("class is nonempty");
    if traces.all(|t| t == first) {
        Ok(first)
    } else {
        Err(GaloisError::NonConstantTrace)
    }
}

/// Character of the faithful 2-dimensional complex irreducible
/// representation of D4: 2 at the identity, -2 at r^2, 0 elsewhere.
///
/// For the two-element class {1, r^2} the two values differ as integers
/// but agree modulo 4; the returned value is then 2, and callers compare
/// modulo 4.
pub fn complex_irrep_trace(class: &FrobeniusClass) -> Result<i32, GaloisError> {
    let chi = |g: &D4Element| -> i32 {
        match (g.is_reflection(), g.rotation_part()) {
            (false, 0) => 2,
            (false, 2) => -2,
            _ => 0,
        }
    };
    let values: Vec<i32> = class.elements().iter().map(chi).collect();
    if values.iter().all(|&v| v == values[0]) {
        Ok(values[0])
    } else if values.iter().all(|&v| v == 2 || v == -2) {
        Ok(2)
    } else {
        Err(GaloisError::NonConstantTrace)
    }
}

/// The matrices of the field automorphisms r and s acting on the
/// 4-torsion basis (P1, P2), columns holding the coordinates of the
/// images of P1 and P2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionMatrices {
    pub m_r: Mat2Z4,
    pub m_s: Mat2Z4,
}

/// Applies the automorphisms of K coordinate-wise to the 4-torsion basis
/// points, locates each image among the 16 combinations a P1 + b P2, and
/// assembles the column-vector matrices.
pub fn torsion_matrices() -> Result<TorsionMatrices, GaloisError> {
    let basis = elliptic::four_torsion_basis()?;

    let apply_point = |sigma: &FieldAutomorphism,
                       p: &CurvePoint<TowerElement>|
     -> Result<CurvePoint<TowerElement>, GaloisError> {
        Ok(match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: sigma.apply(x).map_err(EllipticError::from)?,
                y: sigma.apply(y).map_err(EllipticError::from)?,
            },
        })
    };

    let locate = |p: &CurvePoint<TowerElement>| -> Result<(i64, i64), GaloisError> {
        basis
            .combos
            .iter()
            .position(|c| c == p)
            .map(|idx| ((idx / 4) as i64, (idx % 4) as i64))
            .ok_or(GaloisError::ImageOutsideSpan)
    };

    let mut matrices = Vec::new();
    for sigma in [&basis.r, &basis.s] {
        let (a1, b1) = locate(&apply_point(sigma, &basis.p1)?)?;
        let (a2, b2) = locate(&apply_point(sigma, &basis.p2)?)?;
        matrices.push(Mat2Z4::new([[a1, a2], [b1, b2]]));
    }
    Ok(TorsionMatrices {
        m_r: matrices[0],
        m_s: matrices[1],
    })
}

/// Result of scanning primes l = 3, 5 (mod 8) for the (expected) failure
/// of the weight-1 complex-character congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight1Report {
    pub max_prime: u64,
    pub primes_checked: usize,
    /// Primes where the congruence unexpectedly held.
    pub witnesses: Vec<u64>,
}

impl Weight1Report {
    pub fn pass(&self) -> bool {
        self.primes_checked > 0 && self.witnesses.is_empty()
    }
}

/// Verifies that for every prime l = 3 or 5 (mod 8) up to `max_prime`,
/// the complex-character value differs mod 4 from the prime-coefficient
/// rule, so no weight-1 form with that character can match mod 4 on a
/// positive-density set of primes.
pub fn weight1_noncongruence_check(max_prime: u64) -> Result<Weight1Report, GaloisError> {
    let mut witnesses = Vec::new();
    let mut primes_checked = 0;
    for ell in crate::squares::odd_primes_up_to(max_prime) {
        if ell % 8 != 3 && ell % 8 != 5 {
            continue;
        }
        primes_checked += 1;
        let chi = complex_irrep_trace(&frobenius_class_k(ell)?)?;
        let rule = crate::squares::f_mod4_rule(ell).expect("ell is prime");
        if chi.rem_euclid(4) == rule as i32 {
            witnesses.push(ell);
        }
    }
    Ok(Weight1Report {
        max_prime,
        primes_checked,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_relations() {
        let r = D4Element::rotation(1);
        let s = D4Element::reflection(0);
        // s r s = r^-1
        assert_eq!(d4_mul(s, d4_mul(r, s)), D4Element::rotation(3));
        assert_eq!(d4_mul(r, D4Element::rotation(3)), D4Element::identity());
        // reflections are involutions
        let sr = D4Element::reflection(1);
        assert_eq!(d4_inv(sr), sr);
        assert_eq!(d4_mul(sr, sr), D4Element::identity());
        // eight distinct elements
        let all = D4Element::all();
        for i in 0..8 {
            for j in (i + 1)..8 {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn embeddings_validate() {
        let rho = build_rho();
        assert_eq!(rho.image_of_r().order(), 4);
        assert_eq!(rho.image_of_s().order(), 2);
        assert_eq!(rho.image(D4Element::identity()), Mat2Z4::identity());
        assert_eq!(
            rho.image(D4Element::rotation(2)),
            Mat2Z4::new([[3, 0], [2, 3]])
        );

        let rho_prime = build_rho_prime();
        assert_eq!(rho_prime.image_of_r().order(), 4);
        assert_eq!(rho_prime.image_of_s().order(), 2);
        // determinants are units mod 4
        for rep in [&rho, &rho_prime] {
            for g in D4Element::all() {
                assert_eq!(rep.image(g).det() % 2, 1);
            }
        }
    }

    #[test]
    fn bad_embedding_rejected() {
        // r -> identity collapses the group: not injective.
        assert_eq!(
            GaloisRepresentation::build("bad", Mat2Z4::identity(), Mat2Z4::new([[1, 0], [1, 3]])),
            Err(GaloisError::BadEmbedding)
        );
    }

    #[test]
    fn frobenius_classes_in_k() {
        let r = D4Element::rotation;
        let sr = D4Element::reflection;
        assert_eq!(frobenius_class_k(17).unwrap(), class(&[r(0), r(2)]));
        assert_eq!(frobenius_class_k(3).unwrap(), class(&[r(1), r(3)]));
        assert_eq!(frobenius_class_k(5).unwrap(), class(&[sr(0), sr(2)]));
        assert_eq!(frobenius_class_k(7).unwrap(), class(&[sr(1), sr(3)]));
        assert_eq!(frobenius_class_k(2), Err(GaloisError::NotOddPrime(2)));
        assert_eq!(frobenius_class_k(15), Err(GaloisError::NotOddPrime(15)));
    }

    #[test]
    fn frobenius_classes_in_l() {
        let r = D4Element::rotation;
        let sr = D4Element::reflection;
        // 2^9 = 512 = 1 (mod 73): quartic residue, so Frobenius is trivial.
        assert_eq!(frobenius_class_l(73).unwrap(), class(&[r(0)]));
        // 2^10 = 1024 = -1 (mod 41): not a quartic residue.
        assert_eq!(frobenius_class_l(41).unwrap(), class(&[r(2)]));
        assert_eq!(frobenius_class_l(3).unwrap(), class(&[sr(1), sr(3)]));
        assert_eq!(frobenius_class_l(5).unwrap(), class(&[r(1), r(3)]));
        assert_eq!(frobenius_class_l(7).unwrap(), class(&[sr(0), sr(2)]));
        assert_eq!(frobenius_class_l(2), Err(GaloisError::NotOddPrime(2)));
    }

    #[test]
    fn trace_values() {
        let rho = build_rho();
        let rho_prime = build_rho_prime();
        let r = D4Element::rotation;
        let sr = D4Element::reflection;
        assert_eq!(trace_mod4(&rho, &class(&[r(1), r(3)])).unwrap(), 2);
        assert_eq!(trace_mod4(&rho, &class(&[sr(1), sr(3)])).unwrap(), 0);
        assert_eq!(trace_mod4(&rho, &class(&[sr(0), sr(2)])).unwrap(), 2);
        assert_eq!(trace_mod4(&rho_prime, &class(&[sr(1), sr(3)])).unwrap(), 2);
        assert_eq!(trace_mod4(&rho_prime, &class(&[sr(0), sr(2)])).unwrap(), 0);
    }

    #[test]
    fn nonconstant_trace_detected() {
        // The union {s, sr2, sr, sr3} is conjugation-stable but mixes
        // trace 2 and trace 0 under rho.
        let rho = build_rho();
        let union = FrobeniusClass::new(vec![
            D4Element::reflection(0),
            D4Element::reflection(1),
            D4Element::reflection(2),
            D4Element::reflection(3),
        ])
        .unwrap();
        assert_eq!(trace_mod4(&rho, &union), Err(GaloisError::NonConstantTrace));
    }

    #[test]
    fn conjugation_stability_enforced() {
        // {1, r} is not stable: s r s = r^3.
        assert_eq!(
            FrobeniusClass::new(vec![D4Element::identity(), D4Element::rotation(1)]),
            Err(GaloisError::NotConjugationStable)
        );
    }

    #[test]
    fn complex_character_values() {
        let r = D4Element::rotation;
        let sr = D4Element::reflection;
        assert_eq!(complex_irrep_trace(&class(&[r(0)])).unwrap(), 2);
        assert_eq!(complex_irrep_trace(&class(&[r(2)])).unwrap(), -2);
        assert_eq!(complex_irrep_trace(&class(&[r(0), r(2)])).unwrap(), 2);
        assert_eq!(complex_irrep_trace(&class(&[r(1), r(3)])).unwrap(), 0);
        assert_eq!(complex_irrep_trace(&class(&[sr(0), sr(2)])).unwrap(), 0);
        assert_eq!(complex_irrep_trace(&class(&[sr(1), sr(3)])).unwrap(), 0);
    }

    #[test]
    fn torsion_matrices_realize_the_embedding() {
        let rho = build_rho();
        let matrices = torsion_matrices().unwrap();
        assert_eq!(matrices.m_r, rho.image_of_r());
        assert_eq!(matrices.m_s, rho.image_of_s());
        assert_eq!(matrices.m_r, Mat2Z4::new([[1, 2], [1, 1]]));
        assert_eq!(matrices.m_s, Mat2Z4::new([[3, 2], [2, 3]]));
    }

    #[test]
    fn weight1_congruence_fails_everywhere() {
        // l = 3: character 0 vs rule 2; l = 5: 0 vs 2; l = 7 is skipped.
        let report = weight1_noncongruence_check(200).unwrap();
        assert!(report.pass());
        assert!(report.primes_checked > 0);

        let chi3 = complex_irrep_trace(&frobenius_class_k(3).unwrap()).unwrap();
        assert_eq!(chi3, 0);
        let chi5 = complex_irrep_trace(&frobenius_class_k(5).unwrap()).unwrap();
        assert_eq!(chi5, 0);
    }

    #[test]
    fn frobenius_traces_match_the_rule_small() {
        let rho = build_rho();
        let rho_prime = build_rho_prime();
        for ell in crate::squares::odd_primes_up_to(500) {
            let rule = crate::squares::f_mod4_rule(ell).unwrap();
            let tk = trace_mod4(&rho, &frobenius_class_k(ell).unwrap()).unwrap();
            let tl = trace_mod4(&rho_prime, &frobenius_class_l(ell).unwrap()).unwrap();
            assert_eq!(tk, rule, "K at {ell}");
            assert_eq!(tl, rule, "L at {ell}");
        }
    }
}
