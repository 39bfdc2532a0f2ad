//! Reduced words in the free group `F_n` on `x_1, .., x_n` and
//! endomorphisms given by generator images.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator x{gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: usize, rank: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// `x_gen` raised to `+1` (`inverse == false`) or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub gen: usize,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn new(gen: usize) -> Self {
        Self {
            gen,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Self {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word; reduction happens on every construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(gen: usize) -> Self {
        Self {
            letters: vec![FreeLetter::new(gen)],
        }
    }

    pub fn new(letters: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut out = Self::empty();
        for l in letters {
            out.push(l);
        }
        out
    }

    /// Builds from `(generator, exponent)` pairs with exponent `±1`.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Self::new(pairs.iter().map(|&(gen, e)| FreeLetter {
            gen,
            inverse: e < 0,
        }))
    }

    fn push(&mut self, l: FreeLetter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }
}

/// `x1 x2^-1 x1`; the empty word prints as `1`.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("x{}^-1", l.gen)
                } else {
                    format!("x{}", l.gen)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Endomorphism of `F_n` determined by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAut {
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn identity(rank: usize) -> Self {
        Self {
            images: (1..=rank).map(FreeWord::generator).collect(),
        }
    }

    pub fn new(images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        for w in &images {
            if w.max_generator() > rank {
                return Err(FreeGroupError::GeneratorOutOfRange {
                    gen: w.max_generator(),
                    rank,
                });
            }
        }
        Ok(Self { images })
    }

    fn check_index(i: usize, rank: usize) -> Result<(), FreeGroupError> {
        if i == 0 || i >= rank {
            return Err(FreeGroupError::IndexOutOfRange { index: i, rank });
        }
        Ok(())
    }

    /// `x_i <-> x_{i+1}`, every other generator fixed.
    pub fn swap(i: usize, rank: usize) -> Result<Self, FreeGroupError> {
        Self::check_index(i, rank)?;
        let mut f = Self::identity(rank);
        f.images.swap(i - 1, i);
        Ok(f)
    }

    /// `x_i -> x_{i+1}`, `x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}`.
    pub fn sigma(i: usize, rank: usize) -> Result<Self, FreeGroupError> {
        Self::check_index(i, rank)?;
        let mut f = Self::identity(rank);
        f.images[i - 1] = FreeWord::generator(i + 1);
        f.images[i] = FreeWord::from_pairs(&[(i + 1, -1), (i, 1), (i + 1, 1)]);
        Ok(f)
    }

    /// Inverse of [`FreeAut::sigma`]: `x_i -> x_i x_{i+1} x_i^-1`,
    /// `x_{i+1} -> x_i`.
    pub fn sigma_inverse(i: usize, rank: usize) -> Result<Self, FreeGroupError> {
        Self::check_index(i, rank)?;
        let mut f = Self::identity(rank);
        f.images[i - 1] = FreeWord::from_pairs(&[(i, 1), (i + 1, 1), (i, -1)]);
        f.images[i] = FreeWord::generator(i);
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// Substitutes the images into `w` and reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if w.max_generator() > self.rank() {
            return Err(FreeGroupError::RankMismatch(self.rank(), w.max_generator()));
        }
        let mut out = FreeWord::empty();
        for l in w.letters() {
            let img = &self.images[l.gen - 1];
            if l.inverse {
                out = out.concat(&img.inverse());
            } else {
                out = out.concat(img);
            }
        }
        Ok(out)
    }

    /// `self ∘ g`: the images of `g` with `self` applied to each.
    pub fn compose(&self, g: &Self) -> Result<Self, FreeGroupError> {
        if self.rank() != g.rank() {
            return Err(FreeGroupError::RankMismatch(self.rank(), g.rank()));
        }
        let images = g
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_, _>>()?;
        Ok(Self { images })
    }
}

/// One `x_i -> <word>` line per generator.
impl fmt::Display for FreeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}
