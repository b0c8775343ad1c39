//! Exact multivariate polynomials over ℚ on a fixed, named variable set.
//!
//! Terms are kept in a `BTreeMap` keyed by graded-lex monomials, so iteration
//! order is canonical and printing is reproducible.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("bad variable name `{n}`"),
                });
            }
            if names[..i].contains(n) {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("duplicate variable `{n}`"),
                });
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

macro_rules! standard_set {
    ($(#[$doc:meta])* $fn:ident, [$($n:expr),*]) => {
        $(#[$doc])*
        pub fn $fn() -> Arc<VariableSet> {
            static CELL: OnceLock<Arc<VariableSet>> = OnceLock::new();
            CELL.get_or_init(|| VariableSet::new(&[$($n),*]).unwrap()).clone()
        }
    };
}

standard_set!(
    /// Rank-two trace coordinates `x = tr X`, `y = tr Y`, `z = tr XY`.
    f2_vars, ["x", "y", "z"]);
standard_set!(
    /// Rank-three coordinates; `x123` is the trace of `X1 X2 X3`.
    f3_vars, ["x1", "x2", "x3", "x12", "x13", "x23", "x123"]);
standard_set!(
    /// Four-holed sphere: boundary traces `a..d`, interior traces `x = tr AB`, `y = tr BC`, `z = tr CA`.
    s04_vars, ["a", "b", "c", "d", "x", "y", "z"]);
standard_set!(
    /// Two-holed torus: `a = tr UXY`, `b = tr UYX`, generators `u,x,y`, products `v = UX`, `w = UY`, `z = XY`.
    s12_vars, ["a", "b", "u", "v", "w", "x", "y", "z"]);
standard_set!(
    /// Two-holed cross-surface: `u = tr U`, `v = tr V`, `w = tr UV`.
    c02_vars, ["u", "v", "w"]);
standard_set!(
    /// One-holed Klein bottle: `p = tr P`, `q = tr Q`, `r = tr PQ`.
    c11_vars, ["p", "q", "r"]);

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Arc<VariableSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Arc<VariableSet>) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VariableSet>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &Arc<VariableSet>, c: i64) -> Self {
        Self::constant(vars, rat(c))
    }

    pub fn one(vars: &Arc<VariableSet>) -> Self {
        Self::from_int(vars, 1)
    }

    pub fn var(vars: &Arc<VariableSet>, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnboundVariable(name.to_string()))?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &Arc<VariableSet>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial(e), rat(1))
    }

    pub fn monomial(vars: &Arc<VariableSet>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            self.same_ring(other),
            "{}",
            Error::VariableSetMismatch(self.vars.to_string(), other.vars.to_string())
        );
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Evaluates with values listed in variable order.
    pub fn evaluate<T: Scalar>(&self, values: &[T]) -> T {
        assert_eq!(values.len(), self.vars.len(), "assignment arity");
        let n = self.vars.len();
        let mut powers: Vec<Vec<T>> = (0..n).map(|i| vec![T::one(), values[i].clone()]).collect();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rational(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().clone() * values[i].clone();
                    powers[i].push(next);
                }
                t = t * powers[i][e].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluates with a name → value assignment; every variable must be bound.
    pub fn evaluate_named<T: Scalar>(&self, assignment: &HashMap<String, T>) -> Result<T> {
        let values = self
            .vars
            .names()
            .iter()
            .map(|n| {
                assignment
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::UnboundVariable(n.clone()))
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(self.evaluate(&values))
    }

    /// Sum of absolute term values; the natural scale for relative residuals.
    pub fn magnitude(&self, values: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = f64::from_rational(c).abs();
                for (i, &e) in m.0.iter().enumerate() {
                    t *= values[i].abs().powi(e as i32);
                }
                t
            })
            .sum()
    }

    /// Substitutes `images[i]` for variable `i`; all images share one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            return Err(Error::RankMismatch {
                expected: self.vars.len(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        if let Some(bad) = images.iter().find(|p| !p.same_ring(&images[0])) {
            return Err(Error::VariableSetMismatch(
                target.to_string(),
                bad.vars.to_string(),
            ));
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes by name into `target`; unmapped variables map to the
    /// same-named variable of `target`.
    pub fn substitute_named(
        &self,
        map: &BTreeMap<String, Polynomial>,
        target: &Arc<VariableSet>,
    ) -> Result<Polynomial> {
        let images = self
            .vars
            .names()
            .iter()
            .map(|n| match map.get(n) {
                Some(p) if p.vars.as_ref() == target.as_ref() => Ok(p.clone()),
                Some(p) => Err(Error::VariableSetMismatch(
                    target.to_string(),
                    p.vars.to_string(),
                )),
                None => Polynomial::var(target, n),
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Ok(Polynomial::constant(
                target,
                self.coefficient(&Monomial::one(0)),
            ));
        }
        self.substitute(&images)
    }

    /// Splits by powers of variable `var`: `self = Σ coeffs[k] · var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Polynomial::zero(&self.vars); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    /// Remainder modulo a polynomial that is monic quadratic in `var`:
    /// `var² + c1·var + c0` with `c1`, `c0` free of `var`.
    pub fn reduce_monic_quadratic(
        &self,
        var: usize,
        c1: &Polynomial,
        c0: &Polynomial,
    ) -> Polynomial {
        if self.degree_in(var) <= 1 {
            return self.clone();
        }
        let v = Polynomial::var_index(&self.vars, var);
        let parts = self.coefficients_in(var);
        // var^k ≡ a·var + b
        let mut a = Polynomial::zero(&self.vars);
        let mut b = Polynomial::one(&self.vars);
        let mut acc = Polynomial::zero(&self.vars);
        for (k, pk) in parts.iter().enumerate() {
            if k > 0 {
                let na = &b - &(&a * c1);
                let nb = -(&a * c0);
                a = na;
                b = nb;
            }
            if !pk.is_zero() {
                acc = &acc + &(pk * &(&(&a * &v) + &b));
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = PolyJson {
            variables: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.0.clone(),
                    num: IntRepr::from_big(c.numer()),
                    den: IntRepr::from_big(c.denom()),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("polynomial json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Polynomial> {
        let doc: PolyJson = serde_json::from_value(value.clone()).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        let vars = standard_or_new(&doc.variables)?;
        let mut p = Polynomial::zero(&vars);
        for t in doc.terms {
            if t.exp.len() != vars.len() {
                return Err(Error::RankMismatch {
                    expected: vars.len(),
                    found: t.exp.len(),
                });
            }
            let den = t.den.to_big()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: "zero denominator".into(),
                });
            }
            p.add_term(Monomial(t.exp), BigRational::new(t.num.to_big()?, den));
        }
        Ok(p)
    }
}

/// Reuses a built-in variable set when the names match, so ring identity checks stay cheap.
pub fn standard_or_new(names: &[String]) -> Result<Arc<VariableSet>> {
    for s in [
        f2_vars(),
        f3_vars(),
        s04_vars(),
        s12_vars(),
        c02_vars(),
        c11_vars(),
    ] {
        if s.names() == names {
            return Ok(s);
        }
    }
    VariableSet::new(names)
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    num: IntRepr,
    den: IntRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(k) => IntRepr::Small(k),
            None => IntRepr::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            IntRepr::Small(k) => Ok(BigInt::from(*k)),
            IntRepr::Big(s) => s.parse().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("bad integer `{s}`"),
            }),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.vars, self)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Parses text such as `3/2*x^2*y - z + 1` over `vars`.
///
/// Accepts sums of products of rational constants, variables and
/// parenthesised subexpressions, with nonnegative integer powers.
pub fn parse_polynomial(text: &str, vars: &Arc<VariableSet>) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars: vars.clone(),
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Arc<VariableSet>,
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&BigRational::new(BigInt::one(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = e.to_u32().ok_or_else(|| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .expect("digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(
                    &self.vars,
                    BigRational::from_integer(n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Polynomial::var(&self.vars, &name).map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("unknown variable `{name}`"),
                })
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

fn cached(
    cell: &'static OnceLock<Polynomial>,
    text: &str,
    vars: fn() -> Arc<VariableSet>,
) -> Polynomial {
    cell.get_or_init(|| parse_polynomial(text, &vars()).expect("built-in polynomial"))
        .clone()
}

/// `t12·t3 + t13·t2 + t23·t1 − t1·t2·t3`, the sum of the two triple traces.
pub fn f_sigma() -> Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, "x12*x3 + x13*x2 + x23*x1 - x1*x2*x3", f3_vars)
}

/// Product of the two triple traces.
pub fn f_pi() -> Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(
        &CELL,
        "x1^2 + x2^2 + x3^2 + x12^2 + x23^2 + x13^2 \
         - x1*x2*x12 - x2*x3*x23 - x3*x1*x13 + x12*x23*x13 - 4",
        f3_vars,
    )
}

/// The defining quartic `x123² − fΣ·x123 + fΠ` of the rank-three character variety.
pub fn phi_f3() -> Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    CELL.get_or_init(|| {
        let v = Polynomial::var(&f3_vars(), "x123").unwrap();
        &(&(&v * &v) - &(&f_sigma() * &v)) + &f_pi()
    })
    .clone()
}

/// Canonical representative modulo Φ: degree at most one in `x123`.
pub fn reduce_mod_phi(p: &Polynomial) -> Result<Polynomial> {
    let f3 = f3_vars();
    if p.vars().as_ref() != f3.as_ref() {
        return Err(Error::VariableSetMismatch(
            f3.to_string(),
            p.vars().to_string(),
        ));
    }
    Ok(p.reduce_monic_quadratic(6, &-f_sigma(), &f_pi()))
}
