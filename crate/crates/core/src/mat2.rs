//! 2×2 and 3×3 matrices over a [`Scalar`], plus the closed-form constructions
//! on SL(2,ℂ) that the rest of the crate is built from.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<T> {
    pub m: [[T; 2]; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn diag(a: T, d: T) -> Self {
        Self::new(a, T::zero(), T::zero(), d)
    }

    pub fn scalar(c: T) -> Self {
        Self::diag(c.clone(), c)
    }

    pub fn a(&self) -> &T {
        &self.m[0][0]
    }
    pub fn b(&self) -> &T {
        &self.m[0][1]
    }
    pub fn c(&self) -> &T {
        &self.m[1][0]
    }
    pub fn d(&self) -> &T {
        &self.m[1][1]
    }

    pub fn trace(&self) -> T {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> T {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    /// Classical adjoint; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        Self::new(
            self.m[1][1].clone(),
            -self.m[0][1].clone(),
            -self.m[1][0].clone(),
            self.m[0][0].clone(),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        Ok(self.adjugate().scale(&(T::one() / d)))
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|e| e.clone() * s.clone())
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Mat2<U> {
        Mat2 {
            m: [
                [f(&self.m[0][0]), f(&self.m[0][1])],
                [f(&self.m[1][0]), f(&self.m[1][1])],
            ],
        }
    }

    pub fn entries(&self) -> [T; 4] {
        [
            self.m[0][0].clone(),
            self.m[0][1].clone(),
            self.m[1][0].clone(),
            self.m[1][1].clone(),
        ]
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.adjugate() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn distance(&self, other: &Self) -> f64 {
        let d = self - other;
        d.entries().iter().map(|e| e.modulus()).fold(0.0, f64::max)
    }

    pub fn norm_max(&self) -> f64 {
        self.entries()
            .iter()
            .map(|e| e.modulus())
            .fold(0.0, f64::max)
    }
}

impl<T: Scalar> Mul<&Mat2<T>> for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * o.m[0][j].clone() + self.m[i][1].clone() * o.m[1][j].clone()
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Scalar> Add<&Mat2<T>> for &Mat2<T> {
    type Output = Mat2<T>;
    fn add(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| self.m[i][j].clone() + o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Scalar> Sub<&Mat2<T>> for &Mat2<T> {
    type Output = Mat2<T>;
    fn sub(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| self.m[i][j].clone() - o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Scalar> Neg for &Mat2<T> {
    type Output = Mat2<T>;
    fn neg(self) -> Mat2<T> {
        self.map(|e| -e.clone())
    }
}

macro_rules! owned_mat_ops {
    ($ty:ident, $tr:ident, $f:ident) => {
        impl<T: Scalar> $tr<$ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn $f(self, o: $ty<T>) -> $ty<T> {
                (&self).$f(&o)
            }
        }
    };
}

owned_mat_ops!(Mat2, Mul, mul);
owned_mat_ops!(Mat2, Add, add);
owned_mat_ops!(Mat2, Sub, sub);

impl Mat2<Complex64> {
    pub fn from_real(m: &Mat2<f64>) -> Self {
        m.map(|&x| Complex64::new(x, 0.0))
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    /// Real part, provided every imaginary part is below `tol`.
    pub fn to_real(&self, tol: f64) -> Option<Mat2<f64>> {
        if self.entries().iter().all(|z| z.im.abs() <= tol) {
            Some(self.map(|z| z.re))
        } else {
            None
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatJson {
            re: [
                [self.m[0][0].re, self.m[0][1].re],
                [self.m[1][0].re, self.m[1][1].re],
            ],
            im: [
                [self.m[0][0].im, self.m[0][1].im],
                [self.m[1][0].im, self.m[1][1].im],
            ],
        })
        .expect("matrix json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: MatJson = serde_json::from_value(v.clone()).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        let e = |i: usize, k: usize| Complex64::new(j.re[i][k], j.im[i][k]);
        Ok(Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1)))
    }
}

#[derive(Serialize, Deserialize)]
struct MatJson {
    re: [[f64; 2]; 2],
    im: [[f64; 2]; 2],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mat3<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn from_fn<F: Fn(usize, usize) -> T>(f: F) -> Self {
        Self {
            m: [
                [f(0, 0), f(0, 1), f(0, 2)],
                [f(1, 0), f(1, 1), f(1, 2)],
                [f(2, 0), f(2, 1), f(2, 2)],
            ],
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn trace(&self) -> T {
        self.m[0][0].clone() + self.m[1][1].clone() + self.m[2][2].clone()
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
        };
        m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2)
            + m[0][2].clone() * minor(1, 2, 0, 1)
    }

    /// Sum of the three principal 2×2 minors.
    pub fn principal_minor_sum(&self) -> T {
        let m = &self.m;
        let minor = |i: usize, j: usize| {
            m[i][i].clone() * m[j][j].clone() - m[i][j].clone() * m[j][i].clone()
        };
        minor(0, 1) + minor(0, 2) + minor(1, 2)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() * s.clone())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.m[i][j].clone() - other.m[i][j].clone()).modulus());
            }
        }
        d
    }
}

impl<T: Scalar> Mul<&Mat3<T>> for &Mat3<T> {
    type Output = Mat3<T>;
    fn mul(self, o: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| {
            self.m[i][0].clone() * o.m[0][j].clone()
                + self.m[i][1].clone() * o.m[1][j].clone()
                + self.m[i][2].clone() * o.m[2][j].clone()
        })
    }
}

impl<T: Scalar> Add<&Mat3<T>> for &Mat3<T> {
    type Output = Mat3<T>;
    fn add(self, o: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.m[i][j].clone() + o.m[i][j].clone())
    }
}

impl<T: Scalar> Sub<&Mat3<T>> for &Mat3<T> {
    type Output = Mat3<T>;
    fn sub(self, o: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.m[i][j].clone() - o.m[i][j].clone())
    }
}

owned_mat_ops!(Mat3, Mul, mul);
owned_mat_ops!(Mat3, Add, add);
owned_mat_ops!(Mat3, Sub, sub);

/// Checks `|det − 1| ≤ 1e−12` and returns the matrix.
pub fn unimodular<T: Scalar>(m: Mat2<T>) -> Result<Mat2<T>> {
    let r = (m.det() - T::one()).modulus();
    if r > Tolerances::DEFAULT.algebraic {
        return Err(Error::Domain(format!(
            "determinant differs from 1 by {r:e}"
        )));
    }
    Ok(m)
}

/// The product `w(ξ₁,…,ξₙ)`; inverses use the adjugate, so inputs should be unimodular.
pub fn evaluate_word<T: Scalar>(w: &Word, assignment: &[Mat2<T>]) -> Result<Mat2<T>> {
    if assignment.len() != w.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: assignment.len(),
        });
    }
    let inverses: Vec<Mat2<T>> = assignment.iter().map(|m| m.adjugate()).collect();
    let mut out = Mat2::identity();
    for g in w.letters() {
        let m = if g.inverted {
            &inverses[g.index - 1]
        } else {
            &assignment[g.index - 1]
        };
        out = &out * m;
    }
    Ok(out)
}

/// `ξη − ηξ`.
pub fn lie_product<T: Scalar>(xi: &Mat2<T>, eta: &Mat2<T>) -> Mat2<T> {
    &(xi * eta) - &(eta * xi)
}

/// Commutator `ξηξ⁻¹η⁻¹` of unimodular matrices.
pub fn commutator<T: Scalar>(xi: &Mat2<T>, eta: &Mat2<T>) -> Mat2<T> {
    &(&(xi * eta) * &xi.adjugate()) * &eta.adjugate()
}

/// Induced action on quadratic forms in the basis `(e², ef, f²)`.
pub fn sym2<T: Scalar>(xi: &Mat2<T>) -> Mat3<T> {
    let [a, b, c, d] = xi.entries();
    let two = T::from_i64(2);
    Mat3 {
        m: [
            [
                a.clone() * a.clone(),
                a.clone() * b.clone(),
                b.clone() * b.clone(),
            ],
            [
                two.clone() * a.clone() * c.clone(),
                a.clone() * d.clone() + b.clone() * c.clone(),
                two * b.clone() * d.clone(),
            ],
            [c.clone() * c.clone(), c * d.clone(), d.clone() * d],
        ],
    }
}

/// Inner-product matrix preserved by every `sym2(ξ)` with `det ξ = 1`.
pub fn sym2_form<T: Scalar>() -> Mat3<T> {
    let half = T::one() / T::from_i64(2);
    Mat3::from_fn(|i, j| match (i, j) {
        (0, 2) | (2, 0) => T::one(),
        (1, 1) => -half.clone(),
        _ => T::zero(),
    })
}

/// 4×4 determinant of the rows `I, ξ, η, ξη` flattened row-major.
///
/// Vanishes exactly when the four matrices are linearly dependent, and equals
/// `2 − tr[ξ,η]` for unimodular pairs.
pub fn span_determinant<T: Scalar>(xi: &Mat2<T>, eta: &Mat2<T>) -> T {
    let rows = [
        Mat2::<T>::identity().entries(),
        xi.entries(),
        eta.entries(),
        (xi * eta).entries(),
    ];
    det4(&rows)
}

fn det4<T: Scalar>(r: &[[T; 4]; 4]) -> T {
    let mut acc = T::zero();
    for col in 0..4 {
        let minor = Mat3::from_fn(|i, j| {
            let jj = if j < col { j } else { j + 1 };
            r[i + 1][jj].clone()
        });
        let term = r[0][col].clone() * minor.det();
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

pub type C64 = Complex64;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Flips `m` so its first non-negligible entry has positive real part, or zero
/// real part and positive imaginary part.
pub fn canonical_sign(m: &Mat2<C64>) -> Mat2<C64> {
    let scale = m.norm_max().max(1e-300);
    for e in m.entries() {
        if e.norm() <= 1e-12 * scale {
            continue;
        }
        let positive = if e.re.abs() > 1e-12 * scale {
            e.re > 0.0
        } else {
            e.im > 0.0
        };
        return if positive { m.clone() } else { -m };
    }
    m.clone()
}

/// `𝔷` with `𝔷 + 𝔷⁻¹ = z`, using the principal square root.
pub fn zeta_root(z: C64) -> C64 {
    (z + principal_sqrt(z * z - c(4.0))) / 2.0
}

/// Principal square root with `−0.0` imaginary parts treated as `+0.0`.
pub fn principal_sqrt(w: C64) -> C64 {
    C64::new(w.re + 0.0, w.im + 0.0).sqrt()
}

/// `ξ = [[x,−1],[1,0]]`, `η = [[0,𝔷⁻¹],[−𝔷,y]]`, realizing the character `(x,y,z)`.
pub fn normal_form_pair(x: C64, y: C64, z: C64) -> (Mat2<C64>, Mat2<C64>) {
    let zeta = zeta_root(z);
    let xi = Mat2::new(x, c(-1.0), c(1.0), c(0.0));
    let eta = Mat2::new(c(0.0), zeta.inv(), -zeta, y);
    (xi, eta)
}

/// `h = L/√det L` for `L = Lie(ξ,η)`: an involution inverting both `ξ` and `η`.
pub fn conjugating_involution(xi: &Mat2<C64>, eta: &Mat2<C64>) -> Result<Mat2<C64>> {
    let l = lie_product(xi, eta);
    let d = l.det();
    if d.norm() <= Tolerances::DEFAULT.algebraic {
        return Err(Error::Reducible(format!("|det Lie| = {:e}", d.norm())));
    }
    Ok(canonical_sign(&l.scale(&d.sqrt().inv())))
}

/// `ξ − (tr ξ/2)·I`.
pub fn traceless_projection(xi: &Mat2<C64>) -> Mat2<C64> {
    xi - &Mat2::scalar(xi.trace() / 2.0)
}

/// Involution commuting with a semisimple `ξ` (`tr ξ ≠ ±2`):
/// `(2/√(4 − tr²))·(ξ − (tr ξ/2) I)`, sign-normalized.
pub fn involution_of(xi: &Mat2<C64>) -> Result<Mat2<C64>> {
    let t = xi.trace();
    let disc = c(4.0) - t * t;
    if disc.norm() <= Tolerances::DEFAULT.conjugacy {
        return Err(Error::Degenerate(format!(
            "trace {t} is ±2 (parabolic or central)"
        )));
    }
    let s = c(2.0) / disc.sqrt();
    Ok(canonical_sign(&traceless_projection(xi).scale(&s)))
}

/// Reflection in the invariant axis of a hyperbolic element:
/// `(2A − tr(A)·I)/√(tr(A)² − 4)`, with `tr = 0` and `det = −1`.
pub fn hat(a: &Mat2<f64>) -> Result<Mat2<f64>> {
    let t = a.trace();
    if t.abs() <= 2.0 {
        return Err(Error::Domain(format!("|tr| = {} is not > 2", t.abs())));
    }
    let s = (t * t - 4.0).sqrt();
    let two_a = a.scale(&2.0);
    Ok((&two_a - &Mat2::scalar(t)).scale(&(1.0 / s)))
}

/// `(ξ − I)/√(tr ξ − 2)`: squares to `ξ` and has determinant −1.
pub fn glide_reflection_sqrt(xi: &Mat2<f64>) -> Result<Mat2<f64>> {
    let x = xi.trace();
    if x <= 2.0 {
        return Err(Error::Domain(format!("tr = {x} is not > 2")));
    }
    Ok((xi - &Mat2::identity()).scale(&(1.0 / (x - 2.0).sqrt())))
}
