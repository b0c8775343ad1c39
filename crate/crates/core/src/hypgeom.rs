//! Geometry of the hyperbolic plane and 3-space through matrix representatives:
//! involutions, geodesic vectors in de Sitter space, common perpendiculars,
//! Coxeter extensions and the invariant bilinear form of a character.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{canonical_sign, conjugating_involution, hat, lie_product, Mat2, Mat3, C64};
use crate::polyring::Rational;
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;
use crate::tracepoly::kappa_value;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// A point `x + u·j` of the upper half-space model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointH2 {
    x: f64,
    u: f64,
}

impl PointH2 {
    pub fn new(x: f64, u: f64) -> Result<Self> {
        if u.is_nan() || u <= 0.0 {
            return Err(Error::Domain(format!("height u = {u} must be positive")));
        }
        Ok(Self { x, u })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    /// Inverse of [`point_to_involution`], normalized so that `A₂₁ > 0`.
    pub fn from_involution(a: &Mat2<f64>) -> Result<Self> {
        let m = if *a.c() < 0.0 { -a } else { a.clone() };
        if m.c().abs() <= Tolerances::DEFAULT.algebraic {
            return Err(Error::Degenerate("lower-left entry vanishes".into()));
        }
        Self::new(m.a() / m.c(), 1.0 / m.c())
    }
}

/// `(1/u)·[[x, −(x²+u²)], [1, −x]]`: the half-turn about the point.
pub fn point_to_involution(p: &PointH2) -> Mat2<f64> {
    let (x, u) = (p.x, p.u);
    Mat2::new(x, -(x * x + u * u), 1.0, -x).scale(&(1.0 / u))
}

/// Endpoint of a geodesic on the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Endpoint {
    Finite(C64),
    Infinity,
}

/// Involution fixing the two endpoints, `i/(z₁−z₂)·[[z₁+z₂, −2z₁z₂], [2, −(z₁+z₂)]]`,
/// or `i·[[−1, 2z₁], [0, 1]]` when `z₂ = ∞`. Squares to `−I`.
pub fn involution_fixing(z1: C64, z2: Endpoint) -> Result<Mat2<C64>> {
    let i = C64::i();
    match z2 {
        Endpoint::Infinity => Ok(Mat2::new(-i, i * z1 * 2.0, c(0.0), i)),
        Endpoint::Finite(z2) => {
            if (z1 - z2).norm() <= Tolerances::DEFAULT.algebraic * (1.0 + z1.norm()) {
                return Err(Error::Degenerate("endpoints coincide".into()));
            }
            let s = z1 + z2;
            let m = Mat2::new(s, -(z1 * z2) * 2.0, c(2.0), -s);
            Ok(m.scale(&(i / (z1 - z2))))
        }
    }
}

/// `½ tr(AB)`; on traceless matrices this is the Minkowski form of signature (2,1).
pub fn minkowski_inner(a: &Mat2<f64>, b: &Mat2<f64>) -> f64 {
    (a * b).trace() / 2.0
}

/// Unit spacelike vector: a traceless real matrix with determinant −1.
#[derive(Debug, Clone, PartialEq)]
pub struct DeSitterVec(Mat2<f64>);

impl DeSitterVec {
    /// Projects onto the traceless part and rescales to `⟨A,A⟩ = 1`.
    pub fn new(a: &Mat2<f64>) -> Result<Self> {
        let t = a.trace() / 2.0;
        let p = Mat2::new(a.a() - t, *a.b(), *a.c(), a.d() - t);
        let n = -p.det();
        if n <= Tolerances::DEFAULT.algebraic {
            return Err(Error::Domain(format!("⟨A,A⟩ = {n} is not positive")));
        }
        Ok(Self(p.scale(&(1.0 / n.sqrt()))))
    }

    /// The oriented axis of a hyperbolic element.
    pub fn axis_of(a: &Mat2<f64>) -> Result<Self> {
        Ok(Self(hat(a)?))
    }

    pub fn matrix(&self) -> &Mat2<f64> {
        &self.0
    }

    pub fn inner(&self, other: &Self) -> f64 {
        minkowski_inner(&self.0, &other.0)
    }

    pub fn negate(&self) -> Self {
        Self(-&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfPlaneRelation {
    CrossingOrAsymptotic,
    Nested,
    DisjointOrComplementDisjoint,
}

pub fn half_plane_relation(v1: &DeSitterVec, v2: &DeSitterVec) -> HalfPlaneRelation {
    let p = v1.inner(v2);
    if p.abs() <= 1.0 {
        HalfPlaneRelation::CrossingOrAsymptotic
    } else if p > 1.0 {
        HalfPlaneRelation::Nested
    } else {
        HalfPlaneRelation::DisjointOrComplementDisjoint
    }
}

/// Involution in the common perpendicular of the axes of `ξ` and `η`;
/// conjugation by it inverts both.
pub fn common_perpendicular(xi: &Mat2<C64>, eta: &Mat2<C64>) -> Result<Mat2<C64>> {
    conjugating_involution(xi, eta)
}

/// Three involutions `(ι_XY, ι_YZ, ι_ZX)` with `ξ = ±ι_ZX·ι_XY`,
/// `η = ±ι_XY·ι_YZ` and `ζ = η⁻¹ξ⁻¹ = ±ι_YZ·ι_ZX`.
pub fn coxeter_extension(xi: &Mat2<C64>, eta: &Mat2<C64>) -> Result<[Mat2<C64>; 3]> {
    let zeta = (xi * eta).inverse()?;
    Ok([
        common_perpendicular(xi, eta)?,
        common_perpendicular(eta, &zeta)?,
        common_perpendicular(&zeta, xi)?,
    ])
}

/// Distance between `a` and `±b`.
pub fn projective_distance(a: &Mat2<C64>, b: &Mat2<C64>) -> f64 {
    a.distance(b).min(a.distance(&-b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryClass {
    Central,
    Parabolic,
    Involution,
    SemisimpleElliptic,
    SemisimpleLoxodromicOrHyperbolic,
}

pub fn classify_isometry(xi: &Mat2<C64>) -> IsometryClass {
    let tol = Tolerances::DEFAULT;
    if xi.distance(&Mat2::identity()) <= 1e-10 || xi.distance(&Mat2::scalar(c(-1.0))) <= 1e-10 {
        return IsometryClass::Central;
    }
    let t = xi.trace();
    if (t - c(2.0)).norm() <= tol.conjugacy || (t + c(2.0)).norm() <= tol.conjugacy {
        IsometryClass::Parabolic
    } else if t.norm() <= tol.conjugacy {
        IsometryClass::Involution
    } else if t.im.abs() <= tol.conjugacy && t.re.abs() < 2.0 {
        IsometryClass::SemisimpleElliptic
    } else {
        IsometryClass::SemisimpleLoxodromicOrHyperbolic
    }
}

/// Symmetric form with unit diagonal, `[[1, z/2, y/2], [z/2, 1, x/2], [y/2, x/2, 1]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm3<T>(Mat3<T>);

impl<T: Scalar> BilinearForm3<T> {
    pub fn matrix(&self) -> &Mat3<T> {
        &self.0
    }

    pub fn det(&self) -> T {
        self.0.det()
    }
}

/// `4·det B = 2 − κ(x,y,z)`.
pub fn bilinear_form_from_character<T: Scalar>(x: T, y: T, z: T) -> BilinearForm3<T> {
    let half = T::from_rational(&Rational::new(1.into(), 2.into()));
    let (hx, hy, hz) = (x * half.clone(), y * half.clone(), z * half);
    let m = [
        [T::one(), hz.clone(), hy.clone()],
        [hz, T::one(), hx.clone()],
        [hy, hx, T::one()],
    ];
    BilinearForm3(Mat3::from_fn(|i, j| m[i][j].clone()))
}

/// `Rᵢ = I − 2·eᵢeᵢᵀB`, the `B`-orthogonal reflection in `eᵢ`.
pub fn reflections_from_form<T: Scalar>(b: &BilinearForm3<T>) -> [Mat3<T>; 3] {
    let two = T::from_i64(2);
    let r = |k: usize| {
        Mat3::from_fn(|i, j| {
            let id = if i == j { T::one() } else { T::zero() };
            if i == k {
                id - two.clone() * b.0.m[i][j].clone()
            } else {
                id
            }
        })
    };
    [r(0), r(1), r(2)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormSignature {
    PositiveDefinite,
    #[serde(rename = "signature-2-1")]
    Signature21,
    #[serde(rename = "signature-1-2")]
    Signature12,
    DegenerateRank2,
    DegenerateRank1,
}

/// Inertia of a real symmetric form, read from the signs of its characteristic
/// polynomial by Descartes' rule (exact because all roots are real).
///
/// A unit diagonal forces a positive trace, so there is always a positive direction.
pub fn form_signature(b: &BilinearForm3<f64>) -> FormSignature {
    let m = b.matrix();
    let scale = 1.0 + m.m.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
    let tol = 1e-10;
    let zero = |v: f64, deg: i32| v.abs() <= tol * scale.powi(deg);
    let (t, c2, d) = (m.trace(), m.principal_minor_sum(), m.det());
    let coeffs: Vec<f64> = if !zero(d, 3) {
        vec![1.0, -t, c2, -d]
    } else if !zero(c2, 2) {
        vec![1.0, -t, c2]
    } else {
        vec![1.0, -t]
    };
    let rank = coeffs.len() - 1;
    let nonzero: Vec<f64> = coeffs.into_iter().filter(|v| !zero(*v, 1)).collect();
    let positive = nonzero.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    match (rank, positive) {
        (3, 3) => FormSignature::PositiveDefinite,
        (3, 2) => FormSignature::Signature21,
        (3, _) => FormSignature::Signature12,
        (2, _) => FormSignature::DegenerateRank2,
        _ => FormSignature::DegenerateRank1,
    }
}

fn discriminant_in_q(x: f64, y: f64, z: f64, q: f64) -> f64 {
    (x * x - 4.0) * q * q + (4.0 * z - 2.0 * x * y) * q + y * y - 4.0
}

/// Real pair `X = [[x,−1],[1,0]]`, `Y = [[p,q],[r,y−p]]` with character `(x,y,z)`.
///
/// The free entry `q` is 1 when that gives a real solution, else −1, else the
/// first value in a fixed search sequence. Fails when no real pair exists,
/// i.e. on characters of SU(2) representations.
pub fn real_normal_form(x: f64, y: f64, z: f64) -> Result<(Mat2<f64>, Mat2<f64>)> {
    let mut candidates = vec![1.0, -1.0];
    let lead = x * x - 4.0;
    if lead.abs() > Tolerances::DEFAULT.algebraic {
        candidates.push(-(4.0 * z - 2.0 * x * y) / (2.0 * lead));
    }
    for k in 1..64 {
        let q = 2f64.powi(k);
        candidates.push(q);
        candidates.push(-q);
    }
    let q = candidates
        .into_iter()
        .find(|&q| discriminant_in_q(x, y, z, q) >= 0.0)
        .ok_or_else(|| {
            Error::Construction(format!("no real pair has character ({x}, {y}, {z})"))
        })?;
    let p = ((y - q * x) + discriminant_in_q(x, y, z, q).sqrt()) / 2.0;
    let r = x * p + q - z;
    let xm = Mat2::new(x, -1.0, 1.0, 0.0);
    let ym = Mat2::new(p, q, r, y - p);
    let scale = 1.0 + x.abs().max(y.abs()).max(z.abs());
    let err = (ym.det() - 1.0)
        .abs()
        .max(((&xm * &ym).trace() - z).abs() / scale);
    if err > 1e-8 * scale {
        return Err(Error::Construction(format!(
            "real normal form lost accuracy ({err:e})"
        )));
    }
    Ok((xm, ym))
}

/// `(2z − xy)/√((x²−4)(y²−4))`, the inner product of the axes of two hyperbolic
/// elements with traces `x`, `y` and product trace `z`.
pub fn axes_inner_formula(x: f64, y: f64, z: f64) -> f64 {
    (2.0 * z - x * y) / ((x * x - 4.0) * (y * y - 4.0)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairStatus {
    Disjoint,
    Ideal,
}

#[derive(Debug, Clone, Serialize)]
pub struct HexagonPair {
    pub names: &'static str,
    pub inner: f64,
    /// The closed-form value; absent for ideal pairs.
    pub expected: Option<f64>,
    pub status: PairStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct HexagonCertificate {
    pub pairs: Vec<HexagonPair>,
    pub verdict: bool,
    /// Whether all three axes were negated; never needed since a global sign
    /// change leaves every inner product unchanged.
    pub flipped: bool,
}

impl HexagonCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

/// Pairwise inner products of the axes of `X`, `Y` and `Z = (XY)⁻¹` for a
/// character with `x, y, z ≤ −2`. Pairs involving a trace of −2 are ideal
/// and reported with inner product −1.
pub fn hexagon_certificate(x: f64, y: f64, z: f64) -> Result<HexagonCertificate> {
    let tol = Tolerances::DEFAULT.conjugacy;
    if [x, y, z].iter().any(|t| *t > -2.0 + tol) {
        return Err(Error::Domain(format!("({x}, {y}, {z}) is not in (−∞,−2]³")));
    }
    let (xm, ym) = real_normal_form(x, y, z)?;
    let zm = (&xm * &ym).inverse()?;
    let mats = [(&xm, x), (&ym, y), (&zm, z)];
    let mut pairs = Vec::with_capacity(3);
    for (names, i, j, k) in [("XY", 0, 1, 2), ("YZ", 1, 2, 0), ("ZX", 2, 0, 1)] {
        let (a, ta) = mats[i];
        let (b, tb) = mats[j];
        let ideal = (ta.abs() - 2.0).abs() <= tol || (tb.abs() - 2.0).abs() <= tol;
        pairs.push(if ideal {
            HexagonPair {
                names,
                inner: -1.0,
                expected: None,
                status: PairStatus::Ideal,
            }
        } else {
            HexagonPair {
                names,
                inner: minkowski_inner(&hat(a)?, &hat(b)?),
                expected: Some(axes_inner_formula(ta, tb, mats[k].1)),
                status: PairStatus::Disjoint,
            }
        });
    }
    let verdict = pairs.iter().all(|p| match p.status {
        PairStatus::Disjoint => p.inner < -1.0,
        PairStatus::Ideal => p.inner <= -1.0,
    });
    Ok(HexagonCertificate {
        pairs,
        verdict,
        flipped: false,
    })
}

/// For real `κ(x,y,z) ≤ −2` away from the origin: the axes of `X` and `Y` in a
/// real pair cross, witnessed by `det Lie(X,Y) > 0`.
pub fn axes_cross(x: f64, y: f64, z: f64) -> Result<bool> {
    let k = kappa_value(x, y, z);
    if k > -2.0 + Tolerances::DEFAULT.conjugacy * (1.0 + k.abs()) {
        return Err(Error::Domain(format!("κ = {k} exceeds −2")));
    }
    if [x, y, z]
        .iter()
        .all(|t| t.abs() <= Tolerances::DEFAULT.conjugacy)
    {
        return Err(Error::Domain("the origin is excluded".into()));
    }
    let (xm, ym) = real_normal_form(x, y, z)?;
    Ok(lie_product(&xm, &ym).det() > 0.0)
}

/// Sign-normalized involution fixing a point of the upper half-plane, as a complex matrix.
pub fn point_involution_c(p: &PointH2) -> Mat2<C64> {
    canonical_sign(&Mat2::from_real(&point_to_involution(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::normal_form_pair;
    use crate::polyring::rat;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn point_involutions() {
        let m = point_to_involution(&PointH2::new(0.0, 1.0).unwrap());
        assert_eq!(m, Mat2::new(0.0, -1.0, 1.0, 0.0));
        let p = PointH2::new(1.0, 2.0).unwrap();
        let m = point_to_involution(&p);
        assert_eq!(m, Mat2::new(0.5, -2.5, 0.5, -0.5));
        assert!(close(m.det(), 1.0, 1e-15) && m.trace() == 0.0);
        let back = PointH2::from_involution(&-&m).unwrap();
        assert!(close(back.x(), 1.0, 1e-14) && close(back.u(), 2.0, 1e-14));
        assert!(PointH2::new(0.0, 0.0).is_err());
    }

    #[test]
    fn involutions_fixing_endpoints() {
        let i = C64::i();
        let m = involution_fixing(i, Endpoint::Finite(-i)).unwrap();
        let p = point_involution_c(&PointH2::new(0.0, 1.0).unwrap());
        assert!(projective_distance(&m, &p) < 1e-14);
        let m = involution_fixing(c(0.0), Endpoint::Infinity).unwrap();
        assert!(projective_distance(&m, &Mat2::diag(-i, i)) < 1e-15);
        for (z1, z2) in [(c(0.3), C64::new(-1.0, 2.0)), (C64::new(2.0, -1.0), c(5.0))] {
            let m = involution_fixing(z1, Endpoint::Finite(z2)).unwrap();
            assert!((&m * &m).distance(&Mat2::scalar(c(-1.0))) < 1e-12);
        }
        assert!(involution_fixing(i, Endpoint::Finite(i)).is_err());
    }

    #[test]
    fn minkowski_form() {
        let h = Mat2::new(1.0, 0.0, 0.0, -1.0);
        let s = Mat2::new(0.0, 1.0, 1.0, 0.0);
        let t = Mat2::new(0.0, 1.0, -1.0, 0.0);
        assert_eq!(minkowski_inner(&h, &h), 1.0);
        assert_eq!(minkowski_inner(&s, &s), 1.0);
        assert_eq!(minkowski_inner(&t, &t), -1.0);
        assert_eq!(minkowski_inner(&h, &s), 0.0);
        let v = DeSitterVec::new(&h).unwrap();
        let w = DeSitterVec::new(&s).unwrap();
        assert_eq!(
            half_plane_relation(&v, &v.negate()),
            HalfPlaneRelation::CrossingOrAsymptotic
        );
        assert_eq!(
            half_plane_relation(&v, &w),
            HalfPlaneRelation::CrossingOrAsymptotic
        );
        assert_eq!(
            half_plane_relation(&v, &v),
            HalfPlaneRelation::CrossingOrAsymptotic
        );
    }

    #[test]
    fn pants_axes_are_ultraparallel() {
        let (x, y) = real_normal_form(-3.0, -3.0, -3.0).unwrap();
        let a = DeSitterVec::axis_of(&x).unwrap();
        let b = DeSitterVec::axis_of(&y).unwrap();
        assert!(close(a.inner(&a), 1.0, 1e-12));
        assert!(close(a.inner(&b), -3.0, 1e-12));
        assert_eq!(
            half_plane_relation(&a, &b),
            HalfPlaneRelation::DisjointOrComplementDisjoint
        );
    }

    #[test]
    fn perpendicular_inverts_both() {
        let (xi, eta) = normal_form_pair(c(3.0), c(3.0), c(3.0));
        let h = common_perpendicular(&xi, &eta).unwrap();
        let hi = h.inverse().unwrap();
        assert!((&(&h * &xi) * &hi).distance(&xi.inverse().unwrap()) < 1e-9);
        assert!((&(&h * &eta) * &hi).distance(&eta.inverse().unwrap()) < 1e-9);
        let d = Mat2::diag(c(2.0), c(0.5));
        assert!(common_perpendicular(&d, &d.pow(3)).is_err());
    }

    #[test]
    fn crossing_axes_have_positive_lie_determinant() {
        assert!(axes_cross(3.0, 3.0, 3.0).unwrap());
        assert!(axes_cross(5.0, 5.0, 5.0).unwrap());
        assert!(axes_cross(0.0, 0.0, 0.0).is_err());
        assert!(axes_cross(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn coxeter_products() {
        for (x, y, z) in [(3.0, 3.0, 3.0), (0.0, 0.0, 0.0), (1.5, -0.3, 4.0)] {
            let (xi, eta) = normal_form_pair(c(x), c(y), c(z));
            let zeta = (&xi * &eta).inverse().unwrap();
            let [ixy, iyz, izx] = coxeter_extension(&xi, &eta).unwrap();
            for i in [&ixy, &iyz, &izx] {
                assert!((i * i).distance(&Mat2::scalar(c(-1.0))) < 1e-9);
            }
            assert!(projective_distance(&(&izx * &ixy), &xi) < 1e-8);
            assert!(projective_distance(&(&ixy * &iyz), &eta) < 1e-8);
            assert!(projective_distance(&(&iyz * &izx), &zeta) < 1e-8);
        }
    }

    #[test]
    fn isometry_types() {
        let m = |a: f64, b: f64, cc: f64, d: f64| Mat2::new(c(a), c(b), c(cc), c(d));
        assert_eq!(
            classify_isometry(&m(1.0, 1.0, 0.0, 1.0)),
            IsometryClass::Parabolic
        );
        assert_eq!(
            classify_isometry(&Mat2::diag(C64::i(), -C64::i())),
            IsometryClass::Involution
        );
        assert_eq!(
            classify_isometry(&m(2.0, 0.0, 0.0, 0.5)),
            IsometryClass::SemisimpleLoxodromicOrHyperbolic
        );
        assert_eq!(
            classify_isometry(&m(-1.0, 0.0, 0.0, -1.0)),
            IsometryClass::Central
        );
        assert_eq!(
            classify_isometry(&m(0.5, -1.0, 1.0, 0.0)),
            IsometryClass::SemisimpleElliptic
        );
    }

    #[test]
    fn bilinear_form_and_reflections() {
        let b = bilinear_form_from_character(0.0, 0.0, 0.0);
        assert_eq!(b.matrix(), &Mat3::identity());
        let [r1, _, _] = reflections_from_form(&b);
        assert_eq!(
            r1,
            Mat3::from_fn(|i, j| if i != j {
                0.0
            } else if i == 0 {
                -1.0
            } else {
                1.0
            })
        );
        assert_eq!(bilinear_form_from_character(2.0, 2.0, 2.0).det(), 0.0);
        assert_eq!(bilinear_form_from_character(3.0, 3.0, 3.0).det() * 4.0, 4.0);

        let q = bilinear_form_from_character(rat(3), rat(-2) / rat(7), rat(5) / rat(3));
        let k = kappa_value(rat(3), rat(-2) / rat(7), rat(5) / rat(3));
        assert_eq!(q.det() * rat(4), rat(2) - k);
        let rs = reflections_from_form(&q);
        for r in &rs {
            assert_eq!(r * r, Mat3::identity());
            assert_eq!(&(&r.transpose() * q.matrix()) * r, q.matrix().clone());
        }
        let b = bilinear_form_from_character(3.0, 3.0, 3.0);
        let [r1, r2, _] = reflections_from_form(&b);
        assert!(close((&r1 * &r2).trace(), 8.0, 1e-12));
    }

    #[test]
    fn signatures() {
        let sig = |x, y, z| form_signature(&bilinear_form_from_character(x, y, z));
        assert_eq!(sig(0.0, 0.0, 0.0), FormSignature::PositiveDefinite);
        assert_eq!(sig(3.0, 3.0, 3.0), FormSignature::Signature12);
        assert_eq!(sig(-3.0, -3.0, -3.0), FormSignature::Signature21);
        assert_eq!(sig(2.0, 2.0, 2.0), FormSignature::DegenerateRank1);
        assert_eq!(sig(0.0, 0.0, 2.0), FormSignature::DegenerateRank2);
        assert_eq!(sig(1.0, 1.0, 1.0), FormSignature::PositiveDefinite);
    }

    #[test]
    fn real_normal_forms() {
        for (x, y, z) in [
            (3.0, 3.0, 3.0),
            (-3.0, 1.0, 0.5),
            (1.0, 1.0, 5.0),
            (-2.0, -2.0, -2.0),
        ] {
            let (a, b) = real_normal_form(x, y, z).unwrap();
            assert!(close(b.det(), 1.0, 1e-10));
            assert!(close(a.trace(), x, 1e-12) && close(b.trace(), y, 1e-12));
            assert!(close((&a * &b).trace(), z, 1e-10));
        }
        assert!(real_normal_form(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn hexagons() {
        let cert = hexagon_certificate(-3.0, -3.0, -3.0).unwrap();
        assert!(cert.verdict && !cert.flipped);
        for p in &cert.pairs {
            assert!(close(p.inner, -3.0, 1e-9));
        }
        let cert = hexagon_certificate(-2.0, -2.0, -2.0).unwrap();
        assert!(cert.verdict);
        assert!(cert
            .pairs
            .iter()
            .all(|p| p.status == PairStatus::Ideal && p.inner == -1.0));
        let cert = hexagon_certificate(-10.0, -3.0, -3.0).unwrap();
        assert!(cert.verdict);
        for p in &cert.pairs {
            assert!(close(p.inner, p.expected.unwrap(), 1e-8) && p.inner < -1.0);
        }
        assert!(hexagon_certificate(-3.0, -3.0, 0.0).is_err());
        let json = cert.to_json();
        assert_eq!(json["pairs"][0]["names"], "XY");
        assert_eq!(json["pairs"][0]["status"], "disjoint");
    }
}
