//! Homomorphisms of character rings induced by maps of free groups: the two
//! orientable double covers of non-orientable surfaces, the deck involution of
//! the rank-three ring, and the embedding of the rank-two ring in it.
//!
//! Each map is stored as data: an image polynomial per source variable, plus
//! the underlying group map so the numeric naturality square can be checked.

use std::sync::Arc;

use num_complex::Complex64;

use crate::chars::CharacterF3;
use crate::error::{Error, Result};
use crate::mat2::{evaluate_word, Mat2};
use crate::polyring::{
    c02_vars, c11_vars, f2_vars, f3_vars, parse_polynomial, phi_f3, reduce_mod_phi, s04_vars,
    s12_vars, Polynomial, VariableSet,
};
use crate::scalar::Scalar;
use crate::tracepoly::{s04_quartic, s12_relations};
use crate::words::Word;

#[derive(Debug, Clone)]
pub struct RingMap {
    pub name: &'static str,
    pub source: Arc<VariableSet>,
    pub target: Arc<VariableSet>,
    /// Image of each source variable, over `target`.
    pub images: Vec<Polynomial>,
    /// Source generators written in the target generators.
    pub generator_images: Vec<Word>,
    /// For each source variable, the source word whose trace it is.
    pub source_words: Vec<Word>,
    /// For each target variable, the target word whose trace it is.
    pub target_words: Vec<Word>,
}

fn words(rank: usize, table: &[&[i32]]) -> Vec<Word> {
    table
        .iter()
        .map(|w| Word::from_signed(rank, w).expect("static word table"))
        .collect()
}

fn polys(target: &Arc<VariableSet>, table: &[&str]) -> Vec<Polynomial> {
    table
        .iter()
        .map(|s| parse_polynomial(s, target).expect("static image table"))
        .collect()
}

const F2_WORDS: &[&[i32]] = &[&[1], &[2], &[1, 2]];
const F3_WORDS: &[&[i32]] = &[&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]];

impl RingMap {
    /// Pulls a source polynomial back to the target ring.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.vars().as_ref() != self.source.as_ref() {
            return Err(Error::VariableSetMismatch(
                self.source.to_string(),
                p.vars().to_string(),
            ));
        }
        p.substitute(&self.images)
    }

    /// Source coordinates from target coordinates.
    pub fn evaluate<T: Scalar>(&self, target_values: &[T]) -> Result<Vec<T>> {
        if target_values.len() != self.target.len() {
            return Err(Error::RankMismatch {
                expected: self.target.len(),
                found: target_values.len(),
            });
        }
        Ok(self
            .images
            .iter()
            .map(|p| p.evaluate(target_values))
            .collect())
    }

    /// The relations defining the source variety, pulled back and, over the
    /// rank-three ring, reduced modulo Φ. All are zero for a valid map.
    pub fn relation_images(&self) -> Result<Vec<(String, Polynomial)>> {
        let rels: Vec<(String, Polynomial)> = match self.name {
            "c02s04" => vec![("quartic".into(), s04_quartic())],
            "c11s12" => {
                let (r1, r2) = s12_relations();
                vec![("sum".into(), r1), ("product".into(), r2)]
            }
            _ => vec![("phi".into(), phi_f3())],
        };
        rels.into_iter()
            .map(|(n, r)| {
                let img = self.apply(&r)?;
                let img = if self.target.as_ref() == f3_vars().as_ref() {
                    reduce_mod_phi(&img)?
                } else {
                    img
                };
                Ok((n, img))
            })
            .collect()
    }

    /// Largest difference between the traces of the source words under the
    /// group map and the images evaluated at the target character.
    pub fn naturality_residual(&self, generators: &[Mat2<Complex64>]) -> Result<f64> {
        let target: Vec<Complex64> = self
            .target_words
            .iter()
            .map(|w| Ok(evaluate_word(w, generators)?.trace()))
            .collect::<Result<_>>()?;
        let predicted = self.evaluate(&target)?;
        let mut worst = 0.0f64;
        for (w, p) in self.source_words.iter().zip(&predicted) {
            let actual = evaluate_word(&w.substitute(&self.generator_images)?, generators)?.trace();
            worst = worst.max((actual - p).norm() / (1.0 + actual.norm()));
        }
        Ok(worst)
    }
}

/// Orientable double cover of the two-holed cross-surface by the four-holed sphere.
///
/// `A = UV`, `B = V⁻¹U`, `C = U⁻²VU`, `D = U⁻¹V⁻¹`, so `ABCD = 1`.
pub fn cover_c02_to_s04() -> RingMap {
    let target = c02_vars();
    RingMap {
        name: "c02s04",
        source: s04_vars(),
        images: polys(
            &target,
            &[
                "w",
                "u*v - w",
                "u*v - w",
                "w",
                "u^2 - 2",
                "u^2 + v^2 + w^2 - u*v*w - 2",
                "v^2 - u^2*(u^2 + v^2 + w^2 - u*v*w - 4) - 2",
            ],
        ),
        target,
        generator_images: words(2, &[&[1, 2], &[-2, 1], &[-1, -1, 2, 1], &[-1, -2]]),
        source_words: words(4, &[&[1], &[2], &[3], &[4], &[1, 2], &[2, 3], &[3, 1]]),
        target_words: words(2, F2_WORDS),
    }
}

/// Orientable double cover of the one-holed Klein bottle by the two-holed torus.
///
/// `U = PQ`, `X = QP⁻¹`, `Y = P²`.
pub fn cover_c11_to_s12() -> RingMap {
    let target = c11_vars();
    RingMap {
        name: "c11s12",
        source: s12_vars(),
        images: polys(
            &target,
            &[
                "2 - p^2 - q^2 + p*q*r",
                "2 - p^2 - q^2 + p*q*r",
                "r",
                "q^2 - 2",
                "p*(p*r - q) - r",
                "p*q - r",
                "p^2 - 2",
                "r",
            ],
        ),
        target,
        generator_images: words(2, &[&[1, 2], &[2, -1], &[1, 1]]),
        source_words: words(
            3,
            &[
                &[1, 2, 3],
                &[1, 3, 2],
                &[1],
                &[1, 2],
                &[1, 3],
                &[2],
                &[3],
                &[2, 3],
            ],
        ),
        target_words: words(2, F2_WORDS),
    }
}

/// Involution of the rank-three ring from `Y₁ ↦ Y₁`, `Y₂ ↦ (Y₁Y₂Y₃)⁻¹`,
/// `Y₃ ↦ (Y₁Y₂)Y₃(Y₁Y₂)⁻¹`.
pub fn deck_involution_f3() -> RingMap {
    let vars = f3_vars();
    RingMap {
        name: "deck",
        source: vars.clone(),
        images: polys(
            &vars,
            &[
                "x1",
                "x123",
                "x3",
                "x23",
                "x1*x3 - x13 - x12*x23 + x123*x2",
                "x12",
                "x2",
            ],
        ),
        target: vars,
        generator_images: words(3, &[&[1], &[-3, -2, -1], &[1, 2, 3, -2, -1]]),
        source_words: words(3, F3_WORDS),
        target_words: words(3, F3_WORDS),
    }
}

/// Deck involution of a polynomial on the rank-three variety, reduced modulo Φ.
pub fn deck_polynomial(p: &Polynomial) -> Result<Polynomial> {
    reduce_mod_phi(&deck_involution_f3().apply(p)?)
}

/// Deck involution of a numeric character.
pub fn deck_character(ch: &CharacterF3) -> CharacterF3 {
    let v = deck_involution_f3()
        .evaluate(&ch.coordinates())
        .expect("seven coordinates");
    CharacterF3::from_coordinates(&[v[0], v[1], v[2], v[3], v[4], v[5], v[6]])
}

/// Embedding of the rank-two ring in the rank-three ring from
/// `Y₁ = X²`, `Y₂ = X⁻¹Y⁻¹`, `Y₃ = Y²`.
pub fn embed_r2_in_r3() -> RingMap {
    let target = f2_vars();
    RingMap {
        name: "embed",
        source: f3_vars(),
        images: polys(
            &target,
            &[
                "x^2 - 2",
                "z",
                "y^2 - 2",
                "x*y - z",
                "x*y*z - x^2 - y^2 + 2",
                "x*y - z",
                "z",
            ],
        ),
        target,
        generator_images: words(2, &[&[1, 1], &[-1, -2], &[2, 2]]),
        source_words: words(3, F3_WORDS),
        target_words: words(2, F2_WORDS),
    }
}

/// Looks a map up by its command-line name.
pub fn ring_map(name: &str) -> Option<RingMap> {
    match name {
        "c02s04" => Some(cover_c02_to_s04()),
        "c11s12" => Some(cover_c11_to_s12()),
        "deck" => Some(deck_involution_f3()),
        "embed" => Some(embed_r2_in_r3()),
        _ => None,
    }
}

pub const RING_MAP_NAMES: [&str; 4] = ["c02s04", "c11s12", "deck", "embed"];
