//! Seeded random inputs for oracle checks.

use num_complex::Complex64;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mat2::Mat2;
use crate::words::{Generator, Word};

/// Independent stream for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn complex_in<R: Rng + ?Sized>(rng: &mut R, half_width: f64) -> Complex64 {
    Complex64::new(
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
    )
}

/// Entries uniform in `[−2,2]²`; `d` is solved from `ad − bc = 1`, rejecting `|a| < 1e−3`.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R) -> Mat2<Complex64> {
    loop {
        let a = complex_in(rng, 2.0);
        let b = complex_in(rng, 2.0);
        let c = complex_in(rng, 2.0);
        if a.norm() < 1e-3 {
            continue;
        }
        let d = (Complex64::new(1.0, 0.0) + b * c) / a;
        return Mat2::new(a, b, c, d);
    }
}

/// Real analogue of [`random_unimodular`].
pub fn random_unimodular_real<R: Rng + ?Sized>(rng: &mut R) -> Mat2<f64> {
    loop {
        let a: f64 = rng.gen_range(-2.0..=2.0);
        let b: f64 = rng.gen_range(-2.0..=2.0);
        let c: f64 = rng.gen_range(-2.0..=2.0);
        if a.abs() < 1e-3 {
            continue;
        }
        return Mat2::new(a, b, c, (1.0 + b * c) / a);
    }
}

/// Exact unimodular matrix with small integer `a, b, c` (`a ≠ 0`) and `d = (1 + bc)/a`.
pub fn random_unimodular_rational<R: Rng + ?Sized>(rng: &mut R) -> Mat2<BigRational> {
    let mut a = 0;
    while a == 0 {
        a = rng.gen_range(-4i64..=4);
    }
    let (b, c) = (rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4));
    let q = |n: i64| BigRational::from_integer(n.into());
    Mat2::new(q(a), q(b), q(c), q(1 + b * c) / q(a))
}

/// Reduced word of length at most `max_len` (the reduction may shorten it).
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Generator> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = Generator::new(rng.gen_range(1..=rank), rng.gen_bool(0.5));
        if letters.last().is_some_and(|l| l.is_inverse_of(g)) {
            continue;
        }
        letters.push(g);
    }
    Word::from_letters(rank, letters).expect("indices within rank")
}
