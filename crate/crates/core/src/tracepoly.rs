//! Trace polynomials of free-group words and the named relation polynomials.
//!
//! `tr w(ξ₁,…,ξₙ)` is reduced to traces of shorter words by three moves:
//! inverse letters are removed with `tr(Aξ⁻¹) = tr ξ·tr A − tr(Aξ)`, cyclic
//! squares with `tr(ξ²A) = tr ξ·tr(ξA) − tr A`, and a repeated letter
//! `ξAξB` is split with `tr(ξAξB) = tr(ξA)·tr(ξB) − tr(AB⁻¹)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::polyring::{
    f2_vars, f3_vars, f_pi, f_sigma, parse_polynomial, phi_f3, reduce_mod_phi, s04_vars, s12_vars,
    Polynomial, VariableSet,
};
use crate::scalar::Scalar;
use crate::words::Word;

/// Memoizing trace-polynomial evaluator for rank two or three.
pub struct TraceEngine {
    rank: usize,
    vars: Arc<VariableSet>,
    memo: HashMap<Vec<i32>, Polynomial>,
}

impl TraceEngine {
    pub fn new(rank: usize) -> Result<Self> {
        let vars = match rank {
            2 => f2_vars(),
            3 => f3_vars(),
            r => return Err(Error::UnsupportedRank(r)),
        };
        Ok(Self {
            rank,
            vars,
            memo: HashMap::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn trace(&mut self, w: &Word) -> Result<Polynomial> {
        if w.rank() > self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(self.tr(&w.signed()))
    }

    fn var(&self, i: usize) -> Polynomial {
        Polynomial::var_index(&self.vars, i)
    }

    fn two(&self) -> Polynomial {
        Polynomial::from_int(&self.vars, 2)
    }

    fn finish(&self, p: Polynomial) -> Polynomial {
        if self.rank == 3 {
            reduce_mod_phi(&p).expect("rank-three ring")
        } else {
            p
        }
    }

    fn tr(&mut self, w: &[i32]) -> Polynomial {
        let w = cyclically_reduced(w);
        if w.is_empty() {
            return self.two();
        }
        let key = canonical_key(&w);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = self.compute(w);
        self.memo.insert(key, p.clone());
        p
    }

    fn compute(&mut self, mut w: Vec<i32>) -> Polynomial {
        let neg = w.iter().filter(|&&g| g < 0).count();
        if 2 * neg > w.len() {
            w = inverse(&w);
        }
        let n = w.len();

        if let Some(j) = w.iter().position(|&g| g < 0) {
            // rotate the first inverse letter to the end: A·ξ⁻¹
            let rot: Vec<i32> = w[j + 1..].iter().chain(&w[..=j]).copied().collect();
            let a = &rot[..n - 1];
            let g = -rot[n - 1];
            let mut a_xi = a.to_vec();
            a_xi.push(g);
            let p = &(&self.tr(&[g]) * &self.tr(a)) - &self.tr(&a_xi);
            return self.finish(p);
        }

        if n == 1 {
            return self.var(w[0] as usize - 1);
        }

        if let Some(i) = (0..n).find(|&i| w[i] == w[(i + 1) % n]) {
            // ξ²A
            let rot: Vec<i32> = w[i..].iter().chain(&w[..i]).copied().collect();
            let xi_a = &rot[1..];
            let a = &rot[2..];
            let p = &(&self.tr(&rot[..1]) * &self.tr(xi_a)) - &self.tr(a);
            return self.finish(p);
        }

        if let Some(p) = self.base_case(&w) {
            return p;
        }

        // earliest letter that recurs, split at its nearest recurrence: ξAξB
        let (i, j) = (0..n)
            .find_map(|i| (i + 1..n).find(|&j| w[j] == w[i]).map(|j| (i, j)))
            .expect("square-free word of length > rank repeats a letter");
        let xi = w[i];
        let a: Vec<i32> = w[i + 1..j].to_vec();
        let b: Vec<i32> = w[j + 1..].iter().chain(&w[..i]).copied().collect();
        let mut xi_a = vec![xi];
        xi_a.extend_from_slice(&a);
        let mut xi_b = vec![xi];
        xi_b.extend_from_slice(&b);
        let mut a_binv = a.clone();
        a_binv.extend(inverse(&b));
        let p = &(&self.tr(&xi_a) * &self.tr(&xi_b)) - &self.tr(&a_binv);
        self.finish(p)
    }

    /// Square-free positive words with distinct letters.
    fn base_case(&self, w: &[i32]) -> Option<Polynomial> {
        let mut seen = [false; 4];
        for &g in w {
            if seen[g as usize] {
                return None;
            }
            seen[g as usize] = true;
        }
        match (self.rank, w.len()) {
            (2, 2) => Some(self.var(2)),
            (3, 2) => {
                let (i, j) = (w[0].min(w[1]), w[0].max(w[1]));
                let idx = match (i, j) {
                    (1, 2) => 3,
                    (1, 3) => 4,
                    _ => 5,
                };
                Some(self.var(idx))
            }
            (3, 3) => {
                let pos1 = w.iter().position(|&g| g == 1).unwrap();
                if w[(pos1 + 1) % 3] == 2 {
                    Some(self.var(6))
                } else {
                    Some(&f_sigma() - &self.var(6))
                }
            }
            _ => None,
        }
    }
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&g| -g).collect()
}

fn cyclically_reduced(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    let mut lo = 0;
    let mut hi = out.len();
    while hi >= lo + 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

/// Least rotation among the rotations of `w` and of `w⁻¹`.
fn canonical_key(w: &[i32]) -> Vec<i32> {
    let inv = inverse(w);
    let n = w.len();
    let mut best: Option<Vec<i32>> = None;
    for src in [w, &inv[..]] {
        for r in 0..n {
            let cand: Vec<i32> = src[r..].iter().chain(&src[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

thread_local! {
    static ENGINE2: RefCell<TraceEngine> = RefCell::new(TraceEngine::new(2).unwrap());
    static ENGINE3: RefCell<TraceEngine> = RefCell::new(TraceEngine::new(3).unwrap());
}

/// Trace polynomial in `{x, y, z}` of a word of rank at most two.
pub fn trace_poly_f2(w: &Word) -> Result<Polynomial> {
    if w.rank() > 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: w.rank(),
        });
    }
    ENGINE2.with(|e| e.borrow_mut().trace(w))
}

/// Trace polynomial in the rank-three coordinates, reduced modulo Φ.
pub fn trace_poly_f3(w: &Word) -> Result<Polynomial> {
    if w.rank() > 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: w.rank(),
        });
    }
    ENGINE3.with(|e| e.borrow_mut().trace(w))
}

/// Dispatches on the rank of `w`.
pub fn trace_poly(w: &Word) -> Result<Polynomial> {
    match w.rank() {
        1 | 2 => trace_poly_f2(w),
        3 => trace_poly_f3(w),
        r => Err(Error::UnsupportedRank(r)),
    }
}

/// Rational combination `Σ cᵢ·tr(wᵢ)` with polynomial coefficients.
#[derive(Debug, Clone)]
pub struct TraceExpression {
    rank: usize,
    terms: Vec<(Polynomial, Word)>,
}

impl TraceExpression {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            terms: Vec::new(),
        }
    }

    pub fn push(&mut self, coeff: Polynomial, w: &Word) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        self.terms.push((coeff, w.reduce()));
        Ok(())
    }

    pub fn terms(&self) -> &[(Polynomial, Word)] {
        &self.terms
    }

    /// Collapses every trace to its polynomial and sums.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let vars = if self.rank == 3 { f3_vars() } else { f2_vars() };
        let mut acc = Polynomial::zero(&vars);
        for (c, w) in &self.terms {
            acc = &acc + &(c * &trace_poly(w)?);
        }
        if self.rank == 3 {
            acc = reduce_mod_phi(&acc)?;
        }
        Ok(acc)
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

/// `κ = x² + y² + z² − xyz − 2`, the trace of the commutator.
pub fn kappa() -> Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, "x^2 + y^2 + z^2 - x*y*z - 2", f2_vars)
}

pub fn kappa_value<T: Scalar>(x: T, y: T, z: T) -> T {
    kappa().evaluate(&[x, y, z])
}

/// Φ, the defining relation of the rank-three character variety.
pub fn phi_polynomial() -> Polynomial {
    phi_f3()
}

/// `(fΣ, fΠ)`: sum and product of `t123` and `t132`.
pub fn sum_product_relation_polys() -> (Polynomial, Polynomial) {
    (f_sigma(), f_pi())
}

/// Defining quartic of the four-holed sphere in `(a,b,c,d,x,y,z)`.
pub fn s04_quartic() -> Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(
        &CELL,
        "x^2 + y^2 + z^2 + x*y*z - (a*b + c*d)*x - (a*d + b*c)*y - (a*c + b*d)*z \
         + a^2 + b^2 + c^2 + d^2 + a*b*c*d - 4",
        s04_vars,
    )
}

/// `κ_{p,q}(x) = x² + p² + q² − pqx − 4` over the four-holed-sphere variables.
pub fn s04_kappa(p: &str, q: &str) -> Result<Polynomial> {
    parse_polynomial(&format!("x^2 + {p}^2 + {q}^2 - {p}*{q}*x - 4"), &s04_vars())
}

/// `S₋ = (y−z)(2−x) + (a−b)(c−d)` and `S₊ = (y+z)(2+x) − (a+b)(c+d)`.
pub fn s04_s_minus_plus() -> (Polynomial, Polynomial) {
    let v = s04_vars();
    (
        parse_polynomial("(y - z)*(2 - x) + (a - b)*(c - d)", &v).unwrap(),
        parse_polynomial("(y + z)*(2 + x) - (a + b)*(c + d)", &v).unwrap(),
    )
}

/// Both sides of `4(4−x²)Φ₀ = (2+x)S₋² + (2−x)S₊² − 4κ_{a,b}κ_{c,d}`.
pub fn s04_identity_sides() -> (Polynomial, Polynomial) {
    let v = s04_vars();
    let lhs = &parse_polynomial("4*(4 - x^2)", &v).unwrap() * &s04_quartic();
    let (sm, sp) = s04_s_minus_plus();
    let kab = s04_kappa("a", "b").unwrap();
    let kcd = s04_kappa("c", "d").unwrap();
    let rhs = &(&(&parse_polynomial("2 + x", &v).unwrap() * &(&sm * &sm))
        + &(&parse_polynomial("2 - x", &v).unwrap() * &(&sp * &sp)))
        - &(&Polynomial::from_int(&v, 4) * &(&kab * &kcd));
    (lhs, rhs)
}

/// The two relations of the two-holed torus, each vanishing on characters.
pub fn s12_relations() -> (Polynomial, Polynomial) {
    let v = s12_vars();
    (
        parse_polynomial("a + b - (y*v + x*w + z*u - u*x*y)", &v).unwrap(),
        parse_polynomial(
            "a*b - (x^2 + y^2 + u^2 + v^2 + w^2 + z^2 - x*y*z - y*u*w - u*x*v + v*w*z - 4)",
            &v,
        )
        .unwrap(),
    )
}

/// Residual of the four-generator trace identity, traces computed from the matrices.
pub fn quadruple_trace_check<T: Scalar>(m: &[Mat2<T>; 4]) -> f64 {
    let t = |idx: &[usize]| -> T {
        let mut p = Mat2::identity();
        for &i in idx {
            p = &p * &m[i - 1];
        }
        p.trace()
    };
    let two = T::from_i64(2);
    let lhs = two * t(&[1, 2, 3, 4]);
    let rhs = t(&[1]) * t(&[2]) * t(&[3]) * t(&[4])
        + t(&[1]) * t(&[2, 3, 4])
        + t(&[2]) * t(&[3, 4, 1])
        + t(&[3]) * t(&[4, 1, 2])
        + t(&[4]) * t(&[1, 2, 3])
        + t(&[1, 2]) * t(&[3, 4])
        + t(&[4, 1]) * t(&[2, 3])
        - t(&[1, 3]) * t(&[2, 4])
        - t(&[1]) * t(&[2]) * t(&[3, 4])
        - t(&[1, 2]) * t(&[3]) * t(&[4])
        - t(&[4]) * t(&[1]) * t(&[2, 3])
        - t(&[4, 1]) * t(&[2]) * t(&[3]);
    (lhs - rhs).modulus()
}

/// Number of trace functions of words of length at most three: `n(5+n²)/6`.
pub fn generator_count(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(n * (5 + n * n) / 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn f2(s: &str) -> Polynomial {
        parse_polynomial(s, &f2_vars()).unwrap()
    }

    fn tp2(s: &str) -> Polynomial {
        trace_poly_f2(&parse_word(s, 2).unwrap()).unwrap()
    }

    fn tp3(s: &str) -> Polynomial {
        trace_poly_f3(&parse_word(s, 3).unwrap()).unwrap()
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(tp2("X Y x y"), kappa());
        assert_eq!(tp2("X y"), f2("x*y - z"));
        assert_eq!(tp2("X Y x Y"), f2("2 - x^2 - z^2 + x*y*z"));
        assert_eq!(tp2("X X"), f2("x^2 - 2"));
        assert_eq!(tp2(""), f2("2"));
        assert_eq!(tp2("X^3"), f2("x^3 - 3*x"));
    }

    #[test]
    fn rank_three_examples() {
        let v = f3_vars();
        assert_eq!(tp3("X2 X3 X1"), Polynomial::var(&v, "x123").unwrap());
        assert_eq!(
            tp3("X1 X3 X2"),
            parse_polynomial("x12*x3 + x13*x2 + x23*x1 - x1*x2*x3 - x123", &v).unwrap()
        );
        assert_eq!(tp3("X1 X3"), Polynomial::var(&v, "x13").unwrap());
        assert!(tp3("X1 X2 X3 X1 X2 X3").degree_in(6) <= 1);
    }

    #[test]
    fn memo_key_is_conjugation_and_inversion_invariant() {
        assert_eq!(
            canonical_key(&cyclically_reduced(&[1, 2, -1])),
            canonical_key(&cyclically_reduced(&[-1, 1, -1, 2, 1])),
        );
        assert_eq!(canonical_key(&[1, 2, -1, 2]), canonical_key(&[2, 1, 2, -1]));
        assert_eq!(canonical_key(&[1, 2]), canonical_key(&[-2, -1]));
    }

    #[test]
    fn trace_expression_basic_identity() {
        let v = f2_vars();
        let mut e = TraceExpression::new(2);
        e.push(Polynomial::one(&v), &parse_word("X Y", 2).unwrap())
            .unwrap();
        e.push(Polynomial::one(&v), &parse_word("X y", 2).unwrap())
            .unwrap();
        assert_eq!(e.to_polynomial().unwrap(), f2("x*y"));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa_value(0.0, 0.0, 0.0), -2.0);
        assert_eq!(kappa_value(2.0, 2.0, 2.0), 2.0);
        assert_eq!(kappa_value(3.0, 3.0, 3.0), -2.0);
    }

    #[test]
    fn trivial_character_relations() {
        let (fs, fp) = sum_product_relation_polys();
        assert_eq!(fs.evaluate(&[2.0; 7]), 4.0);
        assert_eq!(fp.evaluate(&[2.0; 7]), 4.0);
        assert_eq!(phi_polynomial().evaluate(&[2.0; 7]), 0.0);
    }

    #[test]
    fn s04_identity_is_exact() {
        let (l, r) = s04_identity_sides();
        assert_eq!(l, r);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(generator_count(2).unwrap(), 3);
        assert_eq!(generator_count(3).unwrap(), 7);
        assert_eq!(generator_count(4).unwrap(), 14);
        assert!(generator_count(0).is_err());
    }

    #[test]
    fn quadruple_identity_exact_at_identity() {
        let id = crate::Mat2Q::identity();
        assert_eq!(
            quadruple_trace_check(&[id.clone(), id.clone(), id.clone(), id]),
            0.0
        );
    }
}
