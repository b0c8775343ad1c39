//! Characters of pairs and triples, irreducibility, real characters, and the
//! inverse constructions from traces back to matrices.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{
    commutator, lie_product, normal_form_pair, principal_sqrt, span_determinant, Mat2, C64,
};
use crate::polyring::{f_pi, f_sigma, phi_f3};
use crate::scalar::format_complex;
use crate::tolerance::Tolerances;
use crate::tracepoly::kappa_value;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `(tr ξ, tr η, tr ξη)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterF2 {
    pub x: C64,
    pub y: C64,
    pub z: C64,
}

impl CharacterF2 {
    pub fn new(x: C64, y: C64, z: C64) -> Self {
        Self { x, y, z }
    }

    pub fn real(x: f64, y: f64, z: f64) -> Self {
        Self::new(c(x), c(y), c(z))
    }

    pub fn kappa(&self) -> C64 {
        kappa_value(self.x, self.y, self.z)
    }

    pub fn as_array(&self) -> [C64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .norm()
            .max((self.y - other.y).norm())
            .max((self.z - other.z).norm())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "x": format_complex(self.x),
            "y": format_complex(self.y),
            "z": format_complex(self.z),
        })
    }
}

/// The eight trace functions of a triple, `t132` included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterF3 {
    pub t1: C64,
    pub t2: C64,
    pub t3: C64,
    pub t12: C64,
    pub t13: C64,
    pub t23: C64,
    pub t123: C64,
    pub t132: C64,
}

impl CharacterF3 {
    /// The seven coordinates in the order of the rank-three variable set.
    pub fn coordinates(&self) -> [C64; 7] {
        [
            self.t1, self.t2, self.t3, self.t12, self.t13, self.t23, self.t123,
        ]
    }

    pub fn six(&self) -> SixTraces {
        SixTraces {
            t1: self.t1,
            t2: self.t2,
            t3: self.t3,
            t12: self.t12,
            t13: self.t13,
            t23: self.t23,
        }
    }

    /// Completes seven coordinates with `t132 = fΣ − t123`.
    pub fn from_coordinates(v: &[C64; 7]) -> Self {
        let t132 = f_sigma().evaluate(&v[..]) - v[6];
        Self {
            t1: v[0],
            t2: v[1],
            t3: v[2],
            t12: v[3],
            t13: v[4],
            t23: v[5],
            t123: v[6],
            t132,
        }
    }

    /// Residuals of the Sum and Product relations and of Φ.
    pub fn relation_residuals(&self) -> (f64, f64, f64) {
        let v = self.coordinates();
        let fs = f_sigma().evaluate(&v[..]);
        let fp = f_pi().evaluate(&v[..]);
        (
            (self.t123 + self.t132 - fs).norm(),
            (self.t123 * self.t132 - fp).norm(),
            phi_f3().evaluate(&v[..]).norm(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t1": format_complex(self.t1),
            "t2": format_complex(self.t2),
            "t3": format_complex(self.t3),
            "t12": format_complex(self.t12),
            "t13": format_complex(self.t13),
            "t23": format_complex(self.t23),
            "t123": format_complex(self.t123),
            "t132": format_complex(self.t132),
        })
    }
}

/// Single and double traces of a triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SixTraces {
    pub t1: C64,
    pub t2: C64,
    pub t3: C64,
    pub t12: C64,
    pub t13: C64,
    pub t23: C64,
}

impl SixTraces {
    fn as_vec(&self) -> Vec<C64> {
        vec![
            self.t1,
            self.t2,
            self.t3,
            self.t12,
            self.t13,
            self.t23,
            c(0.0),
        ]
    }

    pub fn distance(&self, o: &Self) -> f64 {
        [
            self.t1 - o.t1,
            self.t2 - o.t2,
            self.t3 - o.t3,
            self.t12 - o.t12,
            self.t13 - o.t13,
            self.t23 - o.t23,
        ]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max)
    }
}

/// A pair with character `ch`, in the normal form `ξ = [[x,−1],[1,0]]`.
pub fn construct_pair(ch: &CharacterF2) -> (Mat2<C64>, Mat2<C64>) {
    normal_form_pair(ch.x, ch.y, ch.z)
}

pub fn character_of_pair(xi: &Mat2<C64>, eta: &Mat2<C64>) -> CharacterF2 {
    CharacterF2::new(xi.trace(), eta.trace(), (xi * eta).trace())
}

pub fn character_of_triple(x1: &Mat2<C64>, x2: &Mat2<C64>, x3: &Mat2<C64>) -> CharacterF3 {
    CharacterF3 {
        t1: x1.trace(),
        t2: x2.trace(),
        t3: x3.trace(),
        t12: (x1 * x2).trace(),
        t13: (x1 * x3).trace(),
        t23: (x2 * x3).trace(),
        t123: (&(x1 * x2) * x3).trace(),
        t132: (&(x1 * x3) * x2).trace(),
    }
}

/// `κ ≠ 2` up to the conjugacy tolerance.
pub fn is_irreducible(ch: &CharacterF2) -> bool {
    (ch.kappa() - c(2.0)).norm() > Tolerances::DEFAULT.conjugacy
}

/// Exact test over ℚ.
pub fn is_irreducible_exact(x: &crate::Rational, y: &crate::Rational, z: &crate::Rational) -> bool {
    kappa_value(x.clone(), y.clone(), z.clone()) != crate::polyring::rat(2)
}

/// The equivalent irreducibility criteria evaluated on one pair.
#[derive(Debug, Clone, Serialize)]
pub struct IrreducibilityReport {
    pub kappa: String,
    pub commutator_trace: String,
    pub det_lie: String,
    /// Determinant of `{I, ξ, η, ξη}`; equals `2 − κ`.
    pub span_det: String,
    pub irreducible: bool,
    /// All criteria agree and the three identities hold.
    pub consistent: bool,
}

pub fn irreducibility_witnesses(xi: &Mat2<C64>, eta: &Mat2<C64>) -> IrreducibilityReport {
    let tol = Tolerances::DEFAULT.conjugacy;
    let k = character_of_pair(xi, eta).kappa();
    let ct = commutator(xi, eta).trace();
    let dl = lie_product(xi, eta).det();
    let sd = span_determinant(xi, eta);
    let verdicts = [
        (k - c(2.0)).norm() > tol,
        (ct - c(2.0)).norm() > tol,
        dl.norm() > tol,
        sd.norm() > tol,
    ];
    let scale = 1.0 + k.norm();
    let identities = (k - ct).norm() <= 1e-8 * scale
        && (dl - (c(2.0) - k)).norm() <= 1e-8 * scale
        && (sd - (c(2.0) - k)).norm() <= 1e-8 * scale;
    IrreducibilityReport {
        kappa: format_complex(k),
        commutator_trace: format_complex(ct),
        det_lie: format_complex(dl),
        span_det: format_complex(sd),
        irreducible: verdicts[0],
        consistent: identities && verdicts.iter().all(|&v| v == verdicts[0]),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealCharClass {
    Su2FixedPoint,
    Sl2rPlane,
    ReducibleCentral,
    ReducibleSo2,
    ReducibleSo11,
    ReducibleParabolicFixed,
    ReducibleUndetermined,
}

impl RealCharClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Su2FixedPoint => "SU2-fixed-point",
            Self::Sl2rPlane => "SL2R-plane",
            Self::ReducibleCentral => "Reducible-central",
            Self::ReducibleSo2 => "Reducible-SO2",
            Self::ReducibleSo11 => "Reducible-SO11",
            Self::ReducibleParabolicFixed => "Reducible-parabolic-fixed",
            Self::ReducibleUndetermined => "Reducible-undetermined",
        }
    }
}

/// Case split of a real character by `κ` and the cube `[−2,2]³`.
///
/// On `κ = 2` the character alone cannot separate central from parabolic
/// representations, so points on the cube's boundary are left undetermined.
pub fn classify_real_character(x: f64, y: f64, z: f64) -> RealCharClass {
    let tol = Tolerances::DEFAULT.conjugacy;
    let k = kappa_value(x, y, z);
    let t = [x, y, z];
    if (k - 2.0).abs() > tol * (1.0 + k.abs()) {
        let in_cube = t.iter().all(|v| v.abs() <= 2.0);
        return if in_cube && k < 2.0 {
            RealCharClass::Su2FixedPoint
        } else {
            RealCharClass::Sl2rPlane
        };
    }
    let on_edge = |v: &f64| (v.abs() - 2.0).abs() <= tol;
    if t.iter().all(on_edge) {
        RealCharClass::ReducibleUndetermined
    } else if t.iter().all(|v| v.abs() <= 2.0 + tol) {
        RealCharClass::ReducibleSo2
    } else if t.iter().all(|v| v.abs() >= 2.0 - tol) {
        RealCharClass::ReducibleSo11
    } else {
        RealCharClass::ReducibleUndetermined
    }
}

/// Refines the classification using the matrices themselves.
pub fn classify_pair(xi: &Mat2<C64>, eta: &Mat2<C64>) -> RealCharClass {
    let tol = Tolerances::DEFAULT.conjugacy;
    let ch = character_of_pair(xi, eta);
    let real = ch.as_array().iter().all(|t| t.im.abs() <= tol);
    if is_irreducible(&ch) {
        return if real {
            classify_real_character(ch.x.re, ch.y.re, ch.z.re)
        } else {
            RealCharClass::ReducibleUndetermined
        };
    }
    let central = |m: &Mat2<C64>| {
        m.distance(&Mat2::identity()) <= tol || m.distance(&Mat2::scalar(c(-1.0))) <= tol
    };
    if central(xi) && central(eta) {
        return RealCharClass::ReducibleCentral;
    }
    if !real {
        return RealCharClass::ReducibleUndetermined;
    }
    let commuting = lie_product(xi, eta).norm_max() <= tol;
    let non_central: Vec<C64> = [xi, eta, &(xi * eta)]
        .iter()
        .filter(|m| !central(m))
        .map(|m| m.trace())
        .collect();
    let parabolic = |t: &C64| (t.re.abs() - 2.0).abs() <= tol;
    if !commuting || non_central.iter().all(parabolic) {
        return RealCharClass::ReducibleParabolicFixed;
    }
    let t = [ch.x.re, ch.y.re, ch.z.re];
    if t.iter().all(|v| v.abs() <= 2.0 + tol) {
        RealCharClass::ReducibleSo2
    } else if t.iter().all(|v| v.abs() >= 2.0 - tol) {
        RealCharClass::ReducibleSo11
    } else {
        RealCharClass::ReducibleUndetermined
    }
}

/// Hermitian form invariant under the normal-form pair of a character with
/// `z = 2cos θ ∈ [−2,2]`: `ξHξ† = H` and `det H = 2 − κ`.
pub fn hermitian_form(x: f64, y: f64, z: f64) -> Result<Mat2<C64>> {
    if z.abs() > 2.0 {
        return Err(Error::Domain(format!("|z| = {} exceeds 2", z.abs())));
    }
    let s = (1.0 - z * z / 4.0).max(0.0).sqrt();
    let off = C64::new(x * s, -(y - x * z / 2.0));
    Ok(Mat2::new(c(2.0 * s), off, off.conj(), c(2.0 * s)))
}

/// A Hermitian 2×2 matrix is positive definite iff its diagonal and determinant are positive.
pub fn is_positive_definite(h: &Mat2<C64>) -> bool {
    h.a().re > 0.0 && h.det().re > 0.0
}

/// Roots of `λ² − fΣλ + fΠ`, ordered by real part, then imaginary part.
pub fn triple_trace_roots(six: &SixTraces) -> (C64, C64) {
    let v = six.as_vec();
    let fs = f_sigma().evaluate(&v[..]);
    let fp = f_pi().evaluate(&v[..]);
    let r = principal_sqrt(fs * fs - fp * 4.0);
    let a = (fs + r) / 2.0;
    let b = (fs - r) / 2.0;
    if (a.re, a.im) >= (b.re, b.im) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Sheet of the double cover: which root becomes `t123`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// A unimodular triple with the prescribed six traces and, when
/// `κ(t1,t2,t12) ≠ 2`, `t123` equal to the selected root.
pub fn construct_triple(six: &SixTraces, branch: Branch) -> Result<[Mat2<C64>; 3]> {
    let k12 = kappa_value(six.t1, six.t2, six.t12);
    if (k12 - c(2.0)).norm() <= Tolerances::DEFAULT.conjugacy {
        return Ok(construct_reducible(six));
    }
    let (xi1, xi2) = normal_form_pair(six.t1, six.t2, six.t12);
    let l = lie_product(&xi1, &xi2);

    // ω₀ = αI + βξ₁ + γξ₂ from the trace pairings with I, ξ₁, ξ₂
    let (t1, t2, t12) = (six.t1, six.t2, six.t12);
    let g = [
        [c(2.0), t1, t2],
        [t1, t1 * t1 - c(2.0), t12],
        [t2, t12, t2 * t2 - c(2.0)],
    ];
    let rhs = [six.t3, six.t13, six.t23];
    let [alpha, beta, gamma] = solve3(&g, &rhs)?;
    let omega0 = &(&Mat2::scalar(alpha) + &xi1.scale(&beta)) + &xi2.scale(&gamma);

    // det(ω₀ + sL) = det ω₀ + s² det L
    let s2 = (c(1.0) - omega0.det()) / l.det();
    let s = principal_sqrt(s2);
    let (lp, lm) = triple_trace_roots(six);
    let target = match branch {
        Branch::Plus => lp,
        Branch::Minus => lm,
    };
    let p12 = &xi1 * &xi2;
    let candidates = [s, -s].map(|s| {
        let omega = &omega0 + &l.scale(&s);
        let t123 = (&p12 * &omega).trace();
        ((t123 - target).norm(), omega)
    });
    let omega = if candidates[1].0 < candidates[0].0 {
        candidates[1].1.clone()
    } else {
        candidates[0].1.clone()
    };
    Ok([xi1, xi2, omega])
}

fn eigen_root(t: C64) -> C64 {
    (t + principal_sqrt(t * t - c(4.0))) / 2.0
}

/// Upper-triangular realization when `ξ₁, ξ₂` share an eigenvector.
fn construct_reducible(six: &SixTraces) -> [Mat2<C64>; 3] {
    let a1 = eigen_root(six.t1);
    let a2 = eigen_root(six.t2);
    let same = a1 * a2 + (a1 * a2).inv();
    let opposite = a1 / a2 + a2 / a1;
    let xi1 = if (same - six.t12).norm() <= (opposite - six.t12).norm() {
        Mat2::new(a1, six.t13 - a1 * six.t3, c(0.0), a1.inv())
    } else {
        Mat2::new(a1.inv(), six.t13 - six.t3 / a1, c(0.0), a1)
    };
    let xi2 = Mat2::new(a2, six.t23 - a2 * six.t3, c(0.0), a2.inv());
    let xi3 = Mat2::new(six.t3, c(-1.0), c(1.0), c(0.0));
    [xi1, xi2, xi3]
}

fn solve3(g: &[[C64; 3]; 3], rhs: &[C64; 3]) -> Result<[C64; 3]> {
    let det3 = |m: &[[C64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det3(g);
    if d.norm() <= Tolerances::DEFAULT.algebraic {
        return Err(Error::Reducible("singular trace-pairing system".into()));
    }
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut m = *g;
        for row in 0..3 {
            m[row][col] = rhs[row];
        }
        *slot = det3(&m) / d;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::normal_form_pair;

    fn cm(a: f64, b: f64, cc: f64, d: f64) -> Mat2<C64> {
        Mat2::new(c(a), c(b), c(cc), c(d))
    }

    #[test]
    fn pair_characters() {
        let (xi, eta) = normal_form_pair(c(1.0), c(2.0), c(3.0));
        assert!(character_of_pair(&xi, &eta).distance(&CharacterF2::real(1.0, 2.0, 3.0)) < 1e-12);
        let id = Mat2::identity();
        assert_eq!(
            character_of_pair(&id, &id),
            CharacterF2::real(2.0, 2.0, 2.0)
        );
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible(&CharacterF2::real(2.0, 2.0, 2.0)));
        assert!(is_irreducible(&CharacterF2::real(0.0, 0.0, 0.0)));
        let r = irreducibility_witnesses(&cm(2.0, 1.0, 0.0, 0.5), &cm(3.0, 5.0, 0.0, 1.0 / 3.0));
        assert!(!r.irreducible && r.consistent);
        let (xi, eta) = normal_form_pair(c(0.3), c(-1.0), c(2.5));
        let r = irreducibility_witnesses(&xi, &eta);
        assert!(r.irreducible && r.consistent);
        let two = crate::polyring::rat(2);
        assert!(!is_irreducible_exact(&two, &two, &two));
    }

    #[test]
    fn real_classification() {
        assert_eq!(
            classify_real_character(1.0, 1.0, 1.0),
            RealCharClass::Su2FixedPoint
        );
        assert_eq!(
            classify_real_character(3.0, 3.0, 3.0),
            RealCharClass::Sl2rPlane
        );
        assert_eq!(
            classify_real_character(0.0, 0.0, 0.0),
            RealCharClass::Su2FixedPoint
        );
        assert_eq!(
            classify_real_character(2.0, 2.0, 2.0),
            RealCharClass::ReducibleUndetermined
        );
        // κ = 2 on the rotation and translation families
        let th: f64 = 0.7;
        let ph: f64 = 0.4;
        let (x, y, z) = (2.0 * th.cos(), 2.0 * ph.cos(), 2.0 * (th + ph).cos());
        assert_eq!(
            classify_real_character(x, y, z),
            RealCharClass::ReducibleSo2
        );
        let (x, y, z) = (2.0 * th.cosh(), 2.0 * ph.cosh(), 2.0 * (th + ph).cosh());
        assert_eq!(
            classify_real_character(x, y, z),
            RealCharClass::ReducibleSo11
        );
    }

    #[test]
    fn pair_refinement() {
        let id: Mat2<C64> = Mat2::identity();
        assert_eq!(
            classify_pair(&id, &id.scale(&c(-1.0))),
            RealCharClass::ReducibleCentral
        );
        let p = cm(1.0, 1.0, 0.0, 1.0);
        assert_eq!(
            classify_pair(&p, &id),
            RealCharClass::ReducibleParabolicFixed
        );
        let h1 = Mat2::diag(c(2.0), c(0.5));
        let h2 = Mat2::diag(c(3.0), c(1.0 / 3.0));
        assert_eq!(classify_pair(&h1, &h2), RealCharClass::ReducibleSo11);
        let (s, co) = (0.6f64.sin(), 0.6f64.cos());
        let r = cm(co, -s, s, co);
        assert_eq!(classify_pair(&r, &(&r * &r)), RealCharClass::ReducibleSo2);
    }

    #[test]
    fn hermitian_form_is_invariant() {
        let (x, y, z) = (1.0, 0.5, -0.6);
        let h = hermitian_form(x, y, z).unwrap();
        let (xi, eta) = normal_form_pair(c(x), c(y), c(z));
        for g in [&xi, &eta] {
            assert!((&(g * &h) * &g.conj_transpose()).distance(&h) < 1e-12);
        }
        assert!((h.det().re - (2.0 - kappa_value(x, y, z))).abs() < 1e-12);
        assert!(is_positive_definite(&h));
        assert!(hermitian_form(0.0, 0.0, 3.0).is_err());
    }

    #[test]
    fn trivial_triple() {
        let two = c(2.0);
        let six = SixTraces {
            t1: two,
            t2: two,
            t3: two,
            t12: two,
            t13: two,
            t23: two,
        };
        assert_eq!(triple_trace_roots(&six), (two, two));
        let [a, b, cc] = construct_triple(&six, Branch::Plus).unwrap();
        let ch = character_of_triple(&a, &b, &cc);
        for t in [
            ch.t1, ch.t2, ch.t3, ch.t12, ch.t13, ch.t23, ch.t123, ch.t132,
        ] {
            assert!((t - two).norm() < 1e-9);
        }
    }

    #[test]
    fn reducible_triple() {
        let six = SixTraces {
            t1: c(2.0),
            t2: c(2.0),
            t3: c(5.0),
            t12: c(2.0),
            t13: c(7.0),
            t23: c(7.0),
        };
        let [a, b, cc] = construct_triple(&six, Branch::Minus).unwrap();
        assert!(character_of_triple(&a, &b, &cc).six().distance(&six) < 1e-12);
    }

    #[test]
    fn irreducible_triple_both_branches() {
        let six = SixTraces {
            t1: C64::new(0.3, 0.1),
            t2: c(-1.2),
            t3: C64::new(1.5, -0.4),
            t12: c(0.7),
            t13: C64::new(-0.2, 1.0),
            t23: c(2.5),
        };
        let (lp, lm) = triple_trace_roots(&six);
        for (br, root) in [(Branch::Plus, lp), (Branch::Minus, lm)] {
            let [a, b, cc] = construct_triple(&six, br).unwrap();
            let ch = character_of_triple(&a, &b, &cc);
            assert!(ch.six().distance(&six) < 1e-9);
            assert!((ch.t123 - root).norm() < 1e-9);
            for m in [&a, &b, &cc] {
                assert!((m.det() - c(1.0)).norm() < 1e-9);
            }
            let (rs, rp, rphi) = ch.relation_residuals();
            assert!(rs < 1e-9 && rp < 1e-9 && rphi < 1e-8);
        }
    }
}
