//! Words in free groups of finite rank.
//!
//! Two input notations are accepted: compact letters (`X Y x y`, lowercase is
//! the inverse) and indexed generators (`X1 X2^-1 X3`). Output always uses the
//! indexed form.

use std::fmt;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub index: usize,
    pub inverted: bool,
}

impl Generator {
    pub fn new(index: usize, inverted: bool) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Self { index, inverted }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            inverted: !self.inverted,
        }
    }

    pub fn is_inverse_of(self, other: Generator) -> bool {
        self.index == other.index && self.inverted != other.inverted
    }
}

/// Compact letter table: `X A U P` → 1, `Y B V Q` → 2, `Z C W` → 3, `D` → 4.
pub fn letter_index(c: char) -> Option<usize> {
    match c.to_ascii_uppercase() {
        'X' | 'A' | 'U' | 'P' => Some(1),
        'Y' | 'B' | 'V' | 'Q' => Some(2),
        'Z' | 'C' | 'W' => Some(3),
        'D' => Some(4),
        _ => None,
    }
}

/// An element of the free group of rank `rank`, stored as a letter sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Generator>,
}

impl Word {
    /// Builds a word without reducing it.
    pub fn from_letters(rank: usize, letters: Vec<Generator>) -> Result<Self> {
        if let Some(g) = letters.iter().find(|g| g.index > rank) {
            return Err(Error::GeneratorOutOfRange {
                index: g.index,
                rank,
            });
        }
        Ok(Self { rank, letters })
    }

    /// Builds from signed indices (`-k` is the inverse of generator `k`), reduced.
    pub fn from_signed(rank: usize, letters: &[i32]) -> Result<Self> {
        let gens = letters
            .iter()
            .map(|&k| {
                if k == 0 {
                    Err(Error::Syntax {
                        pos: 0,
                        msg: "generator index 0".into(),
                    })
                } else {
                    Ok(Generator::new(k.unsigned_abs() as usize, k < 0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_letters(rank, gens)?.reduce())
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Self::from_letters(rank, vec![Generator::new(index, false)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().is_empty()
    }

    /// Signed-index view of the letters.
    pub fn signed(&self) -> Vec<i32> {
        self.letters
            .iter()
            .map(|g| {
                if g.inverted {
                    -(g.index as i32)
                } else {
                    g.index as i32
                }
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(f), Some(l)) if self.letters.len() > 1 => !f.is_inverse_of(*l),
                _ => true,
            }
    }

    /// Free reduction (stack-based, so a single pass suffices).
    pub fn reduce(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match out.last() {
                Some(&top) if top.is_inverse_of(g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        Self {
            rank: self.rank,
            letters: out,
        }
    }

    /// Returns `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let w = self.reduce();
        let n = w.letters.len();
        let mut i = 0;
        while n >= 2 * i + 2 && w.letters[i].is_inverse_of(w.letters[n - 1 - i]) {
            i += 1;
        }
        let core = Word {
            rank: w.rank,
            letters: w.letters[i..n - i].to_vec(),
        };
        let conj = Word {
            rank: w.rank,
            letters: w.letters[..i].to_vec(),
        };
        (core, conj)
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn multiply(&self, other: &Word) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            rank: self.rank,
            letters,
        }
        .reduce())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            rank: self.rank,
            letters,
        }
        .reduce()
    }

    /// Replaces generator `k` by `images[k-1]`; the result lives in the images' group.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: images.len(),
            });
        }
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Word::identity(rank);
        for g in &self.letters {
            let img = &images[g.index - 1];
            let img = if g.inverted {
                img.inverse()
            } else {
                img.clone()
            };
            out = out.multiply(&img)?;
        }
        Ok(out)
    }

    /// Same letters viewed in a free group of larger rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Self::from_letters(rank, self.letters.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == g {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = if g.inverted {
                -(run as i64)
            } else {
                run as i64
            };
            if e == 1 {
                write!(f, "X{}", g.index)?;
            } else {
                write!(f, "X{}^{}", g.index, e)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parses a word in either notation and returns it freely reduced.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    let chars: Vec<char> = text.chars().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    let syntax = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        let gen = if c == '1' && !chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
            i += 1;
            None
        } else if (c == 'X' || c == 'x') && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let idx: usize = chars[i + 1..j]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| syntax(i + 1, "bad generator index"))?;
            if idx == 0 {
                return Err(syntax(i + 1, "generator indices start at 1"));
            }
            i = j;
            Some(Generator::new(idx, c == 'x'))
        } else if let Some(idx) = letter_index(c) {
            i += 1;
            Some(Generator::new(idx, c.is_ascii_lowercase()))
        } else {
            return Err(syntax(i, &format!("unexpected character `{c}`")));
        };
        let mut exp: i64 = 1;
        if chars.get(i) == Some(&'^') {
            let mut j = i + 1;
            let braced = chars.get(j) == Some(&'{');
            if braced {
                j += 1;
            }
            let num_start = j;
            if matches!(chars.get(j), Some('-') | Some('+')) {
                j += 1;
            }
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            exp = chars[num_start..j]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| syntax(num_start, "bad exponent"))?;
            if braced {
                if chars.get(j) != Some(&'}') {
                    return Err(syntax(j, "expected `}`"));
                }
                j += 1;
            }
            i = j;
        }
        if let Some(g) = gen {
            if g.index > rank {
                return Err(Error::GeneratorOutOfRange {
                    index: g.index,
                    rank,
                });
            }
            let g = if exp < 0 { g.inverse() } else { g };
            for _ in 0..exp.unsigned_abs() {
                letters.push(g);
            }
        }
    }
    Ok(Word::from_letters(rank, letters)?.reduce())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &[i32]) -> Word {
        let gens = s
            .iter()
            .map(|&k| Generator::new(k.unsigned_abs() as usize, k < 0))
            .collect();
        Word::from_letters(rank, gens).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = parse_word("X Y", 2).unwrap();
        assert_eq!(a.signed(), vec![1, 2]);
        assert!(parse_word("X x", 2).unwrap().is_empty());
        assert_eq!(
            parse_word("X1 X2^-1 X3", 3).unwrap().signed(),
            vec![1, -2, 3]
        );
        assert_eq!(parse_word("XYxy", 2).unwrap().signed(), vec![1, 2, -1, -2]);
        assert_eq!(
            parse_word("X^3 y^{-2} Y^-1", 2).unwrap().signed(),
            vec![1, 1, 1, 2]
        );
        assert!(parse_word("1", 2).unwrap().is_empty());
        assert!(parse_word("", 2).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_word("X ? Y", 2),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_word("X Z", 2),
            Err(Error::GeneratorOutOfRange { index: 3, rank: 2 })
        ));
        assert!(matches!(parse_word("X0", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(2, &[1, 2, -2, 1]).reduce().signed(), vec![1, 1]);
        assert!(Word::identity(2).reduce().is_empty());
        assert!(w(2, &[1, -2, 2, -1]).reduce().is_empty());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, conj) = w(2, &[-1, 2, 1]).cyclic_reduce();
        assert_eq!(core.signed(), vec![2]);
        assert_eq!(conj.signed(), vec![-1]);
        let (core, conj) = w(2, &[1, 2, -1, -2]).cyclic_reduce();
        assert_eq!(core.signed(), vec![1, 2, -1, -2]);
        assert!(conj.is_empty());

        let orig = w(2, &[-2, -1, 2, 1, 2]);
        let (core, conj) = orig.cyclic_reduce();
        assert!(core.is_cyclically_reduced());
        let back = conj
            .multiply(&core)
            .unwrap()
            .multiply(&conj.inverse())
            .unwrap();
        assert_eq!(back, orig.reduce());
    }

    #[test]
    fn group_operations() {
        let x = w(2, &[1]);
        assert!(x.multiply(&x.inverse()).unwrap().is_empty());
        assert_eq!(w(2, &[1, 2]).inverse().signed(), vec![-2, -1]);
        assert_eq!(
            w(3, &[1, 2]).multiply(&w(3, &[-2, 3])).unwrap().signed(),
            vec![1, 3]
        );
        assert!(matches!(
            w(2, &[1]).multiply(&w(3, &[1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        let a = w(3, &[1, 1, -2, 3, 3, 3]);
        assert_eq!(a.to_string(), "X1^2 X2^-1 X3^3");
        assert_eq!(parse_word(&a.to_string(), 3).unwrap(), a);
        assert_eq!(Word::identity(2).to_string(), "1");
    }

    #[test]
    fn substitution() {
        // A -> UV, B -> V^-1 U, so AB -> U V V^-1 U = U^2
        let imgs = [w(2, &[1, 2]), w(2, &[-2, 1]), w(2, &[])];
        let ab = w(3, &[1, 2]);
        assert_eq!(ab.substitute(&imgs).unwrap().signed(), vec![1, 1]);
    }
}
