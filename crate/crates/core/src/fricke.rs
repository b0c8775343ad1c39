//! Membership predicates for Fricke spaces of the surfaces with small
//! complexity, the sign action of `H¹(Σ;ℤ/2)`, and Fenchel–Nielsen
//! coordinates for the one-holed torus.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;
use crate::tracepoly::{kappa_value, s04_quartic, s12_relations};

fn is_cusp(t: f64) -> bool {
    (t.abs() - 2.0).abs() <= Tolerances::DEFAULT.conjugacy
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S03Verdict {
    MemberSlice,
    MemberOtherOctant,
    Nonmember,
}

#[derive(Debug, Clone, Serialize)]
pub struct S03Report {
    pub verdict: S03Verdict,
    /// Which of `x, y, z` have absolute value 2.
    pub cusps: [bool; 3],
}

/// Three-holed sphere: the slice `(−∞,−2]³` or one of its three sign images.
pub fn member_s03(x: f64, y: f64, z: f64) -> S03Report {
    let t = [x, y, z];
    let neg = |v: f64| v <= -2.0;
    let pos = |v: f64| v >= 2.0;
    let verdict = if t.iter().all(|&v| neg(v)) {
        S03Verdict::MemberSlice
    } else if (neg(x) && pos(y) && pos(z))
        || (pos(x) && neg(y) && pos(z))
        || (pos(x) && pos(y) && neg(z))
    {
        S03Verdict::MemberOtherOctant
    } else {
        S03Verdict::Nonmember
    };
    S03Report {
        verdict,
        cusps: t.map(is_cusp),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S11Verdict {
    MemberSlice,
    MemberOrbit,
    Nonmember,
}

#[derive(Debug, Clone, Serialize)]
pub struct S11Report {
    pub verdict: S11Verdict,
    pub kappa: f64,
    /// `κ = −2`: the boundary is a cusp.
    pub cusp: bool,
}

/// One-holed torus: the orbit `x² + y² + z² − xyz ≤ 0` of the slice `(2,∞)³`.
pub fn member_s11(x: f64, y: f64, z: f64) -> S11Report {
    let k = kappa_value(x, y, z);
    let scale = 1.0 + x * x + y * y + z * z;
    let tol = Tolerances::DEFAULT.on_variety * scale;
    let in_orbit = k + 2.0 <= tol;
    let verdict = if in_orbit && [x, y, z].iter().all(|&v| v > 2.0) {
        S11Verdict::MemberSlice
    } else if in_orbit {
        S11Verdict::MemberOrbit
    } else {
        S11Verdict::Nonmember
    };
    S11Report {
        verdict,
        kappa: k,
        cusp: (k + 2.0).abs() <= tol,
    }
}

/// The four sign changes `(x,y,z), (x,−y,−z), (−x,y,−z), (−x,−y,z)`.
pub fn h1z2_action<T: Scalar>(x: T, y: T, z: T) -> [[T; 3]; 4] {
    [
        [x.clone(), y.clone(), z.clone()],
        [x.clone(), -y.clone(), -z.clone()],
        [-x.clone(), y.clone(), -z.clone()],
        [-x, -y, z],
    ]
}

/// Two-holed cross-surface: `r ≤ −2` and `pq + r ≥ 2`.
pub fn member_c02(p: f64, q: f64, r: f64) -> bool {
    r <= -2.0 && p * q + r >= 2.0
}

/// One-holed Klein bottle: `p² + q² − pqr ≥ 0`.
pub fn member_c11(p: f64, q: f64, r: f64) -> bool {
    p * p + q * q - p * q * r >= 0.0
}

/// Character of the four-holed sphere: boundary traces `a, b, c, d` and
/// interior traces `x, y, z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharacterS04 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CharacterS04 {
    pub fn values(&self) -> [f64; 7] {
        [self.a, self.b, self.c, self.d, self.x, self.y, self.z]
    }

    pub fn from_values(v: [f64; 7]) -> Self {
        Self {
            a: v[0],
            b: v[1],
            c: v[2],
            d: v[3],
            x: v[4],
            y: v[5],
            z: v[6],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S04Verdict {
    Member,
    NonmemberWrongComponent,
    NonmemberOffVariety,
    NonmemberRange,
}

/// Every quantity behind a four-holed-sphere verdict.
#[derive(Debug, Clone, Serialize)]
pub struct S04Report {
    pub verdict: S04Verdict,
    /// `|Φ₀|` divided by the size of its largest term (at least 1).
    pub residual: f64,
    pub kappa_ab: f64,
    pub kappa_cd: f64,
    pub s_minus: f64,
    pub s_plus: f64,
    pub u: f64,
    pub v: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    /// Boundary traces equal to 2.
    pub cusps: [bool; 4],
}

/// Value of the defining quartic at `(a,b,c,d,x,y,z)` over any scalar ring.
pub fn s04_residual<T: Scalar>(values: &[T; 7]) -> T {
    s04_quartic().evaluate(&values[..])
}

/// Range, then the quartic, then the branch of the hyperbola in `(y,z)`.
///
/// Writing `U = (y+z) + (a+b)(c+d)/(−2−x)` and `V = (y−z) − (a−b)(d−c)/(2−x)`,
/// the quartic factors through `F± = √(−2−x)·U ± √(2−x)·V`, whose product is
/// `4κ_{a,b}κ_{c,d}/(x²−4) > 0`. The two signs pick the two branches; the
/// Fricke component is the one with `F± < 0`.
pub fn member_s04(ch: &CharacterS04) -> S04Report {
    let CharacterS04 {
        a,
        b,
        c,
        d,
        x,
        y,
        z,
    } = *ch;
    let values = ch.values();
    let magnitude = s04_quartic().magnitude(&values).max(1.0);
    let residual = s04_residual(&values).abs() / magnitude;
    let kab = x * x + a * a + b * b - a * b * x - 4.0;
    let kcd = x * x + c * c + d * d - c * d * x - 4.0;
    let s_minus = (y - z) * (2.0 - x) + (a - b) * (c - d);
    let s_plus = (y + z) * (2.0 + x) - (a + b) * (c + d);
    let in_range = [a, b, c, d].iter().all(|&t| t >= 2.0) && x < -2.0;
    let (u, v, f_plus, f_minus) = if x < -2.0 {
        let u = (y + z) + (a + b) * (c + d) / (-2.0 - x);
        let v = (y - z) - (a - b) * (d - c) / (2.0 - x);
        let (p, q) = ((-2.0 - x).sqrt(), (2.0 - x).sqrt());
        (u, v, p * u + q * v, p * u - q * v)
    } else {
        (f64::NAN, f64::NAN, f64::NAN, f64::NAN)
    };
    let verdict = if !in_range {
        S04Verdict::NonmemberRange
    } else if residual > Tolerances::DEFAULT.on_variety {
        S04Verdict::NonmemberOffVariety
    } else if f_plus < 0.0 && f_minus < 0.0 {
        S04Verdict::Member
    } else {
        S04Verdict::NonmemberWrongComponent
    };
    S04Report {
        verdict,
        residual,
        kappa_ab: kab,
        kappa_cd: kcd,
        s_minus,
        s_plus,
        u,
        v,
        f_plus,
        f_minus,
        cusps: [a, b, c, d].map(|t| (t - 2.0).abs() <= Tolerances::DEFAULT.conjugacy),
    }
}

/// Character of the two-holed torus with generators `U, X, Y`: boundary traces
/// `a, b`, generator traces `u, x, y`, and `v = tr UX`, `w = tr UY`, `z = tr XY`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharacterS12 {
    pub a: f64,
    pub b: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CharacterS12 {
    pub fn values(&self) -> [f64; 8] {
        [
            self.a, self.b, self.u, self.v, self.w, self.x, self.y, self.z,
        ]
    }

    pub fn from_values(v: [f64; 8]) -> Self {
        Self {
            a: v[0],
            b: v[1],
            u: v[2],
            v: v[3],
            w: v[4],
            x: v[5],
            y: v[6],
            z: v[7],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S12Verdict {
    Member,
    NonmemberOffVariety,
    NonmemberInequalities,
}

#[derive(Debug, Clone, Serialize)]
pub struct S12Report {
    pub verdict: S12Verdict,
    pub residual_sum: f64,
    pub residual_product: f64,
    pub kappa_xyz: f64,
    pub kappa_yuw: f64,
    pub kappa_uxv: f64,
}

/// Both relations, then `κ(x,y,z)`, `κ(y,u,w)` and `κ(u,x,v)` all below −2.
pub fn member_s12(ch: &CharacterS12) -> S12Report {
    let values = ch.values();
    let (r1, r2) = s12_relations();
    let rel = |p: &crate::polyring::Polynomial| {
        p.evaluate(&values[..]).abs() / p.magnitude(&values).max(1.0)
    };
    let (residual_sum, residual_product) = (rel(&r1), rel(&r2));
    let k = [
        kappa_value(ch.x, ch.y, ch.z),
        kappa_value(ch.y, ch.u, ch.w),
        kappa_value(ch.u, ch.x, ch.v),
    ];
    let tol = Tolerances::DEFAULT.on_variety;
    let verdict = if residual_sum > tol || residual_product > tol {
        S12Verdict::NonmemberOffVariety
    } else if k.iter().all(|&v| v < -2.0) {
        S12Verdict::Member
    } else {
        S12Verdict::NonmemberInequalities
    };
    S12Report {
        verdict,
        residual_sum,
        residual_product,
        kappa_xyz: k[0],
        kappa_yuw: k[1],
        kappa_uxv: k[2],
    }
}

/// Fenchel–Nielsen coordinates on the one-holed torus: length `l` and twist
/// `tau` of the interior curve, and boundary length `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FnCoords {
    pub l: f64,
    pub tau: f64,
    pub b: f64,
}

impl FnCoords {
    pub fn new(l: f64, tau: f64, b: f64) -> Result<Self> {
        if l.is_nan() || l <= 0.0 || b.is_nan() || b < 0.0 || !tau.is_finite() {
            return Err(Error::Domain(format!(
                "need l > 0, b ≥ 0 and finite τ; got ({l}, {tau}, {b})"
            )));
        }
        Ok(Self { l, tau, b })
    }
}

/// `ρ(X) = diag(e^{l/2}, e^{−l/2})` and
/// `ρ(Y) = [[cosh(μ/2), sinh(μ/2)], [sinh(μ/2), cosh(μ/2)]]·diag(e^{τ/2}, e^{−τ/2})`,
/// with `sinh(μ/2) = cosh(b/4)/sinh(l/2)` so that `κ = −2cosh(b/2)`.
pub fn fn_pair(f: &FnCoords) -> (Mat2<f64>, Mat2<f64>) {
    let sh = (f.b / 4.0).cosh() / (f.l / 2.0).sinh();
    let ch = (1.0 + sh * sh).sqrt();
    let x = Mat2::diag((f.l / 2.0).exp(), (-f.l / 2.0).exp());
    let twist = Mat2::diag((f.tau / 2.0).exp(), (-f.tau / 2.0).exp());
    let y = &Mat2::new(ch, sh, sh, ch) * &twist;
    (x, y)
}

/// `(tr X, tr Y, tr XY)` of [`fn_pair`].
pub fn fn_to_traces(f: &FnCoords) -> (f64, f64, f64) {
    let (x, y) = fn_pair(f);
    (x.trace(), y.trace(), (&x * &y).trace())
}

/// Number of curves in a pants decomposition, `3(g−1) + n`.
pub fn pants_curve_count(g: i64, n: i64) -> Result<i64> {
    if g < 0 || n < 0 {
        return Err(Error::Domain(format!(
            "genus {g} and boundary count {n} must be ≥ 0"
        )));
    }
    let count = 3 * (g - 1) + n;
    if count < 0 {
        return Err(Error::Domain(format!(
            "surface of genus {g} with {n} boundary components has no pants decomposition"
        )));
    }
    Ok(count)
}
