//! Scalar types the algebraic kernels are generic over.
//!
//! Matrix products, polynomial evaluation and the bilinear-form machinery only
//! need ring operations plus division, so they are written once against
//! [`Scalar`] and instantiated for floats, complex floats, exact rationals and
//! the quadratic surds `a + b√d` used for exact witnesses.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Field-like scalar: ring operations, division, and an embedding of ℚ.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Absolute value as an `f64`, used for tolerance checks.
    fn modulus(&self) -> f64;

    /// True when the value is exactly representable (no rounding ever happens).
    fn is_exact() -> bool {
        false
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Scalar for f64 {
    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q)
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q) as f32
    }
    fn modulus(&self) -> f64 {
        f64::from(self.abs())
    }
}

impl Scalar for Complex<f64> {
    fn from_rational(q: &BigRational) -> Self {
        Complex::new(rational_to_f64(q), 0.0)
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for Complex<f32> {
    fn from_rational(q: &BigRational) -> Self {
        Complex::new(rational_to_f64(q) as f32, 0.0)
    }
    fn modulus(&self) -> f64 {
        f64::from(self.norm())
    }
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn modulus(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn is_exact() -> bool {
        true
    }
}

/// Element `a + b·√D` of the quadratic field ℚ(√D).
///
/// `D` must be a positive non-square integer; arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd<const D: i64> {
    pub rational: BigRational,
    pub irrational: BigRational,
}

impl<const D: i64> Surd<D> {
    pub fn new(rational: BigRational, irrational: BigRational) -> Self {
        Self {
            rational,
            irrational,
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    /// The generator `√D`.
    pub fn root() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.rational.clone(), -self.irrational.clone())
    }

    /// Field norm `a² − D·b²`.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational
            - BigRational::from_integer(D.into()) * &self.irrational * &self.irrational
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rational) + rational_to_f64(&self.irrational) * (D as f64).sqrt()
    }

    /// Exact sign: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.irrational);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with D·b²
        let n = self.norm();
        match sign_of(&n) {
            0 => 0,
            1 => sa,
            _ => sb,
        }
    }
}

fn sign_of(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl<const D: i64> Debug for Surd<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<const D: i64> Display for Surd<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.rational, self.irrational, D)
    }
}

impl<const D: i64> Add for Surd<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.rational + rhs.rational,
            self.irrational + rhs.irrational,
        )
    }
}

impl<const D: i64> Sub for Surd<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.rational - rhs.rational,
            self.irrational - rhs.irrational,
        )
    }
}

impl<const D: i64> Mul for Surd<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = BigRational::from_integer(D.into());
        Self::new(
            &self.rational * &rhs.rational + d * &self.irrational * &rhs.irrational,
            &self.rational * &rhs.irrational + &self.irrational * &rhs.rational,
        )
    }
}

impl<const D: i64> Div for Surd<D> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt({D}))");
        let num = self * rhs.conjugate();
        Self::new(num.rational / &n, num.irrational / n)
    }
}

impl<const D: i64> Neg for Surd<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.rational, -self.irrational)
    }
}

impl<const D: i64> Zero for Surd<D> {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }
}

impl<const D: i64> One for Surd<D> {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl<const D: i64> Scalar for Surd<D> {
    fn from_rational(q: &BigRational) -> Self {
        Self::new(q.clone(), BigRational::zero())
    }
    fn modulus(&self) -> f64 {
        self.to_f64().abs()
    }
    fn is_exact() -> bool {
        true
    }
}

/// Shortest round-trip decimal form (never more than 17 significant digits), as `a+bi`.
pub fn format_complex(z: Complex<f64>) -> String {
    // Adding +0.0 turns -0.0 into 0.0 and leaves everything else alone.
    let (re, im) = (z.re + 0.0, z.im + 0.0);
    if im.is_sign_negative() {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

/// Parses `p`, `p/q`, or a decimal such as `-1.25e-3` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{t}`"));
        }
        return Ok(n / d);
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (
            &t[..i],
            t[i + 1..]
                .parse::<i32>()
                .map_err(|_| format!("bad exponent in `{t}`"))?,
        ),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part
            .chars()
            .chain(frac_part.chars())
            .all(|c| c.is_ascii_digit())
    {
        return Err(format!("not a number: `{t}`"));
    }
    let digits: BigInt = format!("{int_part}{frac_part}0")
        .parse::<BigInt>()
        .map_err(|_| format!("not a number: `{t}`"))?
        / BigInt::from(10);
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(digits);
    if scale >= 0 {
        q *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        q /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -q } else { q })
}

pub fn parse_real(text: &str) -> Result<f64, String> {
    parse_rational(text).map(|q| rational_to_f64(&q))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (parts may be rational `p/q`); `i` alone means `1i`.
pub fn parse_complex(text: &str) -> Result<Complex<f64>, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty number".into());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(Complex::new(parse_real(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        s => s,
    };
    Ok(Complex::new(parse_real(re)?, parse_real(im)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q5 = Surd<5>;

    #[test]
    fn surd_arithmetic() {
        let r = Q5::root();
        assert_eq!(r.clone() * r.clone(), Q5::from_ints(5, 0));
        let x = Q5::from_ints(3, 2);
        let y = Q5::from_ints(-1, 4);
        let q = x.clone() / y.clone();
        assert_eq!(q * y, x);
    }

    #[test]
    fn surd_sign() {
        assert_eq!(Q5::from_ints(-18, -10).signum(), -1);
        assert_eq!(Q5::from_ints(3, -1).signum(), 1); // 3 > √5
        assert_eq!(Q5::from_ints(2, -1).signum(), -1); // 2 < √5
        assert_eq!(Q5::zero().signum(), 0);
        assert!((Q5::from_ints(1, 1).to_f64() - (1.0 + 5f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn number_parsing() {
        assert_eq!(
            parse_rational("3/2").unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            parse_rational("-0.25").unwrap(),
            BigRational::new((-1).into(), 4.into())
        );
        assert_eq!(
            parse_rational("1.5e2").unwrap(),
            BigRational::from_integer(150.into())
        );
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_complex("1+2i").unwrap(), Complex::new(1.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("1/2-3/4i").unwrap(), Complex::new(0.5, -0.75));
        assert_eq!(parse_complex("2.5").unwrap(), Complex::new(2.5, 0.0));
        assert_eq!(
            parse_complex("1e-3+1e2i").unwrap(),
            Complex::new(0.001, 100.0)
        );
        let z = Complex::new(0.1, -1.0 / 3.0);
        assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        assert_eq!(format_complex(Complex::new(3.0, 0.0)), "3+0i");
    }

    #[test]
    fn rational_embedding() {
        let q = BigRational::new(3.into(), 2.into());
        assert_eq!(f64::from_rational(&q), 1.5);
        assert_eq!(Complex::<f64>::from_rational(&q), Complex::new(1.5, 0.0));
        assert_eq!(
            <BigRational as Scalar>::from_i64(-4),
            BigRational::from_integer((-4).into())
        );
    }
}
