//! Exact arithmetic in towers of quadratic extensions of Q.
//!
//! A tower of depth d is Q adjoined d successive square roots; elements
//! are vectors of 2^d rationals over the product basis
//! `{1, g1} x {1, g2} x ... x {1, gd}` (basis index j uses generator k
//! exactly when bit k of j is set). The two fields used downstream are
//!
//! - K = Q(i, sqrt2, sqrt(1+i)), and
//! - L = Q(i, sqrt2, 2^(1/4)),
//!
//! both Galois over Q with dihedral group D4 generated by the
//! automorphisms returned from [`build_k`] and [`build_l`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TowerError {
    #[error("elements belong to different towers")]
    TowerMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coordinate vector has length {got}, tower has dimension {expected}")]
    BadCoordinates { expected: usize, got: usize },
    #[error(
        "defining square of level {level} must live one level down (length {expected}, got {got})"
    )]
    BadDefiningSquare {
        level: usize,
        expected: usize,
        got: usize,
    },
    #[error(
        "image of generator '{generator}' does not square to the image of its defining square"
    )]
    RelationCheckFailed { generator: String },
    #[error("automorphism images are not multiplicative on basis products")]
    NotMultiplicative,
    #[error("expected one image per generator: tower depth {expected}, got {got}")]
    BadImageCount { expected: usize, got: usize },
}

/// One level of a tower: a named generator g with g^2 equal to a fixed
/// element of the tower below (coordinates over the lower product basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    label: String,
    defining_square: Vec<BigRational>,
}

impl Level {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn defining_square_coords(&self) -> &[BigRational] {
        &self.defining_square
    }
}

/// The ordered list of levels defining a tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    name: String,
    levels: Vec<Level>,
}

impl TowerSpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }
}

/// A handle to a tower field; cheap to clone and compared structurally.
#[derive(Debug, Clone)]
pub struct Tower {
    spec: Arc<TowerSpec>,
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }
}
impl Eq for Tower {}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Tower {
    /// Builds a tower from `(label, defining square coordinates)` pairs;
    /// level k's square must have 2^k coordinates (level 0's square is a
    /// single rational).
    pub fn new(name: &str, levels: Vec<(&str, Vec<BigRational>)>) -> Result<Tower, TowerError> {
        let mut built = Vec::with_capacity(levels.len());
        for (k, (label, square)) in levels.into_iter().enumerate() {
            let expected = 1 << k;
            if square.len() != expected {
                return Err(TowerError::BadDefiningSquare {
                    level: k + 1,
                    expected,
                    got: square.len(),
                });
            }
            built.push(Level {
                label: label.to_string(),
                defining_square: square,
            });
        }
        Ok(Tower {
            spec: Arc::new(TowerSpec {
                name: name.to_string(),
                levels: built,
            }),
        })
    }

    pub fn spec(&self) -> &TowerSpec {
        &self.spec
    }

    pub fn depth(&self) -> usize {
        self.spec.levels.len()
    }

    /// Dimension over Q, 2^depth.
    pub fn dim(&self) -> usize {
        1 << self.depth()
    }

    pub fn element(&self, coords: Vec<BigRational>) -> Result<TowerElement, TowerError> {
        if coords.len() != self.dim() {
            return Err(TowerError::BadCoordinates {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(TowerElement {
            tower: self.clone(),
            coords,
        })
    }

    pub fn zero(&self) -> TowerElement {
        TowerElement {
            tower: self.clone(),
            coords: vec![BigRational::zero(); self.dim()],
        }
    }

    pub fn one(&self) -> TowerElement {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> TowerElement {
        let mut coords = vec![BigRational::zero(); self.dim()];
        coords[0] = rat(n);
        TowerElement {
            tower: self.clone(),
            coords,
        }
    }

    pub fn from_rational(&self, r: BigRational) -> TowerElement {
        let mut coords = vec![BigRational::zero(); self.dim()];
        coords[0] = r;
        TowerElement {
            tower: self.clone(),
            coords,
        }
    }

    /// The k-th adjoined generator (0-based), as an element.
    pub fn generator(&self, k: usize) -> TowerElement {
        assert!(k < self.depth(), "generator index out of range");
        let mut coords = vec![BigRational::zero(); self.dim()];
        coords[1 << k] = BigRational::one();
        TowerElement {
            tower: self.clone(),
            coords,
        }
    }

    /// The defining square of level k, embedded in the full tower.
    pub fn defining_square(&self, k: usize) -> TowerElement {
        assert!(k < self.depth(), "level index out of range");
        let mut coords = vec![BigRational::zero(); self.dim()];
        for (i, c) in self.spec.levels[k].defining_square.iter().enumerate() {
            coords[i] = c.clone();
        }
        TowerElement {
            tower: self.clone(),
            coords,
        }
    }

    /// The identity automorphism.
    pub fn identity_automorphism(&self) -> FieldAutomorphism {
        let images = (0..self.depth()).map(|k| self.generator(k)).collect();
        make_automorphism(self, images).expect("identity images satisfy all relations")
    }
}

/// An element of a tower: 2^depth exact rational coordinates over the
/// product basis. Rationals are kept in lowest terms with positive
/// denominator by the underlying rational type.
#[derive(Debug, Clone)]
pub struct TowerElement {
    tower: Tower,
    coords: Vec<BigRational>,
}

impl PartialEq for TowerElement {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.coords == other.coords
    }
}
impl Eq for TowerElement {}

fn ensure_same(a: &TowerElement, b: &TowerElement) -> Result<(), TowerError> {
    if a.tower == b.tower {
        Ok(())
    } else {
        Err(TowerError::TowerMismatch)
    }
}

/// Product of coordinate slices at the given depth, by the recursive rule
/// `(x + y g)(u + v g) = (xu + yv D) + (xv + yu) g` with D the defining
/// square of the current level.
fn mul_slices(
    spec: &TowerSpec,
    depth: usize,
    a: &[BigRational],
    b: &[BigRational],
) -> Vec<BigRational> {
    if depth == 0 {
        return vec![&a[0] * &b[0]];
    }
    let half = 1 << (depth - 1);
    let (x, y) = a.split_at(half);
    let (u, v) = b.split_at(half);
    let d = &spec.levels[depth - 1].defining_square;
    let xu = mul_slices(spec, depth - 1, x, u);
    let yv = mul_slices(spec, depth - 1, y, v);
    let xv = mul_slices(spec, depth - 1, x, v);
    let yu = mul_slices(spec, depth - 1, y, u);
    let yvd = mul_slices(spec, depth - 1, &yv, d);
    let mut out = Vec::with_capacity(2 * half);
    for i in 0..half {
        out.push(&xu[i] + &yvd[i]);
    }
    for i in 0..half {
        out.push(&xv[i] + &yu[i]);
    }
    out
}

/// Inverse by the conjugate-norm recursion:
/// `(x + y g)^-1 = (x - y g) (x^2 - D y^2)^-1`, the norm inverted one
/// level down.
fn inv_slices(
    spec: &TowerSpec,
    depth: usize,
    a: &[BigRational],
) -> Result<Vec<BigRational>, TowerError> {
    if depth == 0 {
        if a[0].is_zero() {
            return Err(TowerError::DivisionByZero);
        }
        return Ok(vec![a[0].recip()]);
    }
    let half = 1 << (depth - 1);
    let (x, y) = a.split_at(half);
    let d = &spec.levels[depth - 1].defining_square;
    let xx = mul_slices(spec, depth - 1, x, x);
    let yy = mul_slices(spec, depth - 1, y, y);
    let dyy = mul_slices(spec, depth - 1, &yy, d);
    let norm: Vec<BigRational> = (0..half).map(|i| &xx[i] - &dyy[i]).collect();
    let ninv = inv_slices(spec, depth - 1, &norm)?;
    let low = mul_slices(spec, depth - 1, x, &ninv);
    let neg_y: Vec<BigRational> = y.iter().map(|c| -c).collect();
    let high = mul_slices(spec, depth - 1, &neg_y, &ninv);
    let mut out = low;
    out.extend(high);
    Ok(out)
}

impl TowerElement {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TowerElement) -> Result<TowerElement, TowerError> {
        ensure_same(self, other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TowerElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn sub(&self, other: &TowerElement) -> Result<TowerElement, TowerError> {
        ensure_same(self, other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TowerElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &TowerElement) -> Result<TowerElement, TowerError> {
        ensure_same(self, other)?;
        let coords = mul_slices(
            &self.tower.spec,
            self.tower.depth(),
            &self.coords,
            &other.coords,
        );
        Ok(TowerElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn inv(&self) -> Result<TowerElement, TowerError> {
        let coords = inv_slices(&self.tower.spec, self.tower.depth(), &self.coords)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn scale(&self, c: &BigRational) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.tower.spec.levels.iter().map(|l| l.label()).collect();
        let mut terms = Vec::new();
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut gens: Vec<&str> = Vec::new();
            for (k, label) in labels.iter().enumerate() {
                if j & (1 << k) != 0 {
                    gens.push(label);
                }
            }
            let basis = gens.join("*");
            let term = if basis.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                basis
            } else if (-c).is_one() {
                format!("-{basis}")
            } else {
                format!("({c})*{basis}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(out, "0");
        }
        let mut joined = terms[0].clone();
        for t in &terms[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                joined.push_str(" - ");
                joined.push_str(stripped);
            } else {
                joined.push_str(" + ");
                joined.push_str(t);
            }
        }
        write!(out, "{joined}")
    }
}

/// A field automorphism given by images of the tower generators, stored
/// with its precomputed action matrix on the product basis.
#[derive(Debug, Clone)]
pub struct FieldAutomorphism {
    tower: Tower,
    images: Vec<TowerElement>,
    /// Column j holds the coordinates of the image of basis element j.
    matrix: Vec<Vec<BigRational>>,
}

impl PartialEq for FieldAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.matrix == other.matrix
    }
}
impl Eq for FieldAutomorphism {}

/// Validates generator images and assembles the automorphism.
///
/// Two checks run at construction: each generator image must square to
/// the image of its defining square (well-definedness), and the linear
/// extension must be multiplicative on every pair of basis products.
pub fn make_automorphism(
    tower: &Tower,
    images: Vec<TowerElement>,
) -> Result<FieldAutomorphism, TowerError> {
    let depth = tower.depth();
    if images.len() != depth {
        return Err(TowerError::BadImageCount {
            expected: depth,
            got: images.len(),
        });
    }
    for img in &images {
        if img.tower() != tower {
            return Err(TowerError::TowerMismatch);
        }
    }

    // Images of all basis products; index j uses generator k iff bit k set.
    let dim = tower.dim();
    let mut basis_images: Vec<TowerElement> = Vec::with_capacity(dim);
    basis_images.push(tower.one());
    for j in 1..dim {
        let k = j.trailing_zeros() as usize;
        let rest = j & (j - 1);
        basis_images.push(basis_images[rest].mul(&images[k])?);
    }

    let apply_linear = |a: &TowerElement| -> TowerElement {
        let mut acc = tower.zero();
        for (j, c) in a.coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc
                    .add(&basis_images[j].scale(c))
                    .expect("same tower by construction");
            }
        }
        acc
    };

    // Relation consistency: image(g_k)^2 = image of g_k's defining square,
    // which involves generators below level k only.
    for (k, image) in images.iter().enumerate() {
        let lhs = image.mul(image)?;
        let rhs = apply_linear(&tower.defining_square(k));
        if lhs != rhs {
            return Err(TowerError::RelationCheckFailed {
                generator: tower.spec.levels[k].label().to_string(),
            });
        }
    }

    // Multiplicativity on all basis pairs; with linearity this pins down
    // the ring-homomorphism property on the whole field.
    for i in 0..dim {
        for j in 0..dim {
            let prod = tower.basis_product(i, j).expect("basis indices in range");
            if apply_linear(&prod) != basis_images[i].mul(&basis_images[j])? {
                return Err(TowerError::NotMultiplicative);
            }
        }
    }

    let matrix = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| basis_images[j].coords[i].clone())
                .collect()
        })
        .collect();
    Ok(FieldAutomorphism {
        tower: tower.clone(),
        images,
        matrix,
    })
}

impl Tower {
    /// Product of two basis elements, as a tower element.
    fn basis_product(&self, i: usize, j: usize) -> Result<TowerElement, TowerError> {
        let mut a = vec![BigRational::zero(); self.dim()];
        let mut b = vec![BigRational::zero(); self.dim()];
        a[i] = BigRational::one();
        b[j] = BigRational::one();
        self.element(a)?.mul(&self.element(b)?)
    }
}

impl FieldAutomorphism {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Image of the k-th generator.
    pub fn image(&self, k: usize) -> &TowerElement {
        &self.images[k]
    }

    /// Applies the automorphism by the precomputed basis-image matrix.
    pub fn apply(&self, a: &TowerElement) -> Result<TowerElement, TowerError> {
        if a.tower() != &self.tower {
            return Err(TowerError::TowerMismatch);
        }
        let dim = self.tower.dim();
        let coords = (0..dim)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (j, c) in a.coords.iter().enumerate() {
                    if !c.is_zero() {
                        acc += &self.matrix[i][j] * c;
                    }
                }
                acc
            })
            .collect();
        Ok(TowerElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    /// Composition `self . other`: applies `other` first.
    pub fn compose(&self, other: &FieldAutomorphism) -> Result<FieldAutomorphism, TowerError> {
        if self.tower != other.tower {
            return Err(TowerError::TowerMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        make_automorphism(&self.tower, images)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.tower.depth()).all(|k| self.images[k] == self.tower.generator(k))
    }

    /// Least e >= 1 with self^e the identity.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut e = 1;
        while !acc.is_identity() {
            acc = acc
                .compose(self)
                .expect("composition within one tower cannot fail");
            e += 1;
            assert!(e <= 64, "automorphism order exceeds the field degree bound");
        }
        e
    }
}

/// Closure of the given automorphisms under composition.
pub fn generate_group(gens: &[FieldAutomorphism]) -> Result<Vec<FieldAutomorphism>, TowerError> {
    let tower = gens
        .first()
        .map(|g| g.tower.clone())
        .expect("at least one generator");
    let mut group = vec![tower.identity_automorphism()];
    let mut frontier = group.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in gens {
                let prod = h.compose(g)?;
                if !group.contains(&prod) {
                    group.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        assert!(group.len() <= 64, "group closure exceeds the degree bound");
        frontier = next;
    }
    Ok(group)
}

/// K = Q(i, sqrt2, sqrt(1+i)) with the automorphisms
/// `r: i -> -i, sqrt2 -> -sqrt2, sqrt(1+i) -> (1-i)/sqrt2 * sqrt(1+i)` and
/// `s: i -> i, sqrt2 -> -sqrt2, sqrt(1+i) -> sqrt(1+i)`.
///
/// The defining squares (-1, then 2, then 1+i) are non-squares one level
/// down, so the tower has degree 8 over Q; r and s generate its dihedral
/// Galois group.
pub fn build_k() -> (Tower, FieldAutomorphism, FieldAutomorphism) {
    let k = Tower::new(
        "K",
        vec![
            ("i", vec![rat(-1)]),
            ("sqrt2", vec![rat(2), rat(0)]),
            ("sqrt(1+i)", vec![rat(1), rat(1), rat(0), rat(0)]),
        ],
    )
    .expect("level shapes are fixed");

    let i = k.generator(0);
    let s2 = k.generator(1);
    let g3 = k.generator(2);

    // (1-i)/sqrt2 * sqrt(1+i) = (sqrt2/2)(1 - i) sqrt(1+i)
    let half_s2 = s2.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
    let r_g3 = half_s2
        .mul(&k.one().sub(&i).unwrap())
        .unwrap()
        .mul(&g3)
        .unwrap();
    let r = make_automorphism(&k, vec![i.neg(), s2.neg(), r_g3]).expect("valid images for r");
    let s =
        make_automorphism(&k, vec![i.clone(), s2.neg(), g3.clone()]).expect("valid images for s");
    (k, r, s)
}

/// L = Q(i, sqrt2, 2^(1/4)) with t = 2^(1/4), t^2 = sqrt2, and the
/// automorphisms `r: i -> i, t -> i t` (so sqrt2 -> -sqrt2) and
/// `s: i -> -i, t -> t`.
pub fn build_l() -> (Tower, FieldAutomorphism, FieldAutomorphism) {
    let l = Tower::new(
        "L",
        vec![
            ("i", vec![rat(-1)]),
            ("sqrt2", vec![rat(2), rat(0)]),
            ("2^(1/4)", vec![rat(0), rat(0), rat(1), rat(0)]),
        ],
    )
    .expect("level shapes are fixed");

    let i = l.generator(0);
    let s2 = l.generator(1);
    let t = l.generator(2);

    let r = make_automorphism(&l, vec![i.clone(), s2.neg(), i.mul(&t).unwrap()])
        .expect("valid images for r");
    let s =
        make_automorphism(&l, vec![i.neg(), s2.clone(), t.clone()]).expect("valid images for s");
    (l, r, s)
}

impl Field for Tower {
    type Elem = TowerElement;

    fn zero(&self) -> TowerElement {
        Tower::zero(self)
    }
    fn one(&self) -> TowerElement {
        Tower::one(self)
    }
    fn integer(&self, n: i64) -> TowerElement {
        Tower::integer(self, n)
    }
    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a.add(b).expect("field context guarantees one tower")
    }
    fn sub(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a.sub(b).expect("field context guarantees one tower")
    }
    fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a.mul(b).expect("field context guarantees one tower")
    }
    fn neg(&self, a: &TowerElement) -> TowerElement {
        a.neg()
    }
    fn inv(&self, a: &TowerElement) -> Option<TowerElement> {
        a.inv().ok()
    }
    fn is_zero(&self, a: &TowerElement) -> bool {
        TowerElement::is_zero(a)
    }
}
