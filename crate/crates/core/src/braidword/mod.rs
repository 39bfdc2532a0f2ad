//! Words over the generators of `Br_n`, `Σ_n`, `VB_n`, `BP_n`, `SB_n` and
//! `SG_n`.
//!
//! Letters are `σ_i^{±1}` (`s`), `ζ_i` (`z`) and `a_i^{±1}` (`a`). In the
//! braid-permutation flavor the `z` letters stand for the permutation
//! automorphisms `ξ_i`. Since `ζ_i² = 1`, a `z` letter never carries an
//! inverse: `z1^-1` parses to `z1`.

mod presentation;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use presentation::{relators, Presentation, Relator};
pub use search::{
    bfs_equal, presentation_for, ReplayError, SearchConfig, SearchOutcome, Step, Witness,
    DEFAULT_DEPTH,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// Classical braid group.
    Br,
    /// Symmetric group on the `ζ` generators.
    Sym,
    /// Virtual braid group.
    VB,
    /// Braid-permutation group.
    BP,
    /// Singular braid (Baez-Birman) monoid.
    SB,
    /// Singular braid group.
    SG,
}

impl Flavor {
    pub const ALL: [Flavor; 6] = [
        Flavor::Br,
        Flavor::Sym,
        Flavor::VB,
        Flavor::BP,
        Flavor::SB,
        Flavor::SG,
    ];

    pub fn allows(self, kind: LetterKind) -> bool {
        use LetterKind::*;
        match self {
            Flavor::Br => kind == Sigma,
            Flavor::Sym => kind == Zeta,
            Flavor::VB | Flavor::BP => kind != A,
            Flavor::SB | Flavor::SG => kind != Zeta,
        }
    }

    pub fn is_monoid(self) -> bool {
        self == Flavor::SB
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Br => "Br",
            Flavor::Sym => "Sym",
            Flavor::VB => "VB",
            Flavor::BP => "BP",
            Flavor::SB => "SB",
            Flavor::SG => "SG",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "br" => Ok(Flavor::Br),
            "sym" => Ok(Flavor::Sym),
            "vb" => Ok(Flavor::VB),
            "bp" => Ok(Flavor::BP),
            "sb" => Ok(Flavor::SB),
            "sg" => Ok(Flavor::SG),
            _ => Err(WordError::UnknownFlavor(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    Sigma,
    Zeta,
    A,
}

impl LetterKind {
    fn symbol(self) -> char {
        match self {
            LetterKind::Sigma => 's',
            LetterKind::Zeta => 'z',
            LetterKind::A => 'a',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn sigma(index: usize) -> Self {
        Self {
            kind: LetterKind::Sigma,
            index,
            inverse: false,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Self {
            kind: LetterKind::Sigma,
            index,
            inverse: true,
        }
    }

    pub fn zeta(index: usize) -> Self {
        Self {
            kind: LetterKind::Zeta,
            index,
            inverse: false,
        }
    }

    pub fn a(index: usize) -> Self {
        Self {
            kind: LetterKind::A,
            index,
            inverse: false,
        }
    }

    pub fn a_inv(index: usize) -> Self {
        Self {
            kind: LetterKind::A,
            index,
            inverse: true,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Group inverse of the letter; `ζ` letters are involutions.
    pub fn inv(self) -> Self {
        match self.kind {
            LetterKind::Zeta => self,
            _ => Self {
                inverse: !self.inverse,
                ..self
            },
        }
    }

    pub fn with_index(self, index: usize) -> Self {
        Self { index, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.index)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("index {index} at position {position} out of range for {n} strands")]
    IndexOutOfRange {
        index: usize,
        n: usize,
        position: usize,
    },
    #[error("letter {letter} is not allowed in flavor {flavor}")]
    LetterNotAllowedInFlavor { letter: Letter, flavor: Flavor },
    #[error("inverse of {letter} is not allowed in the monoid SB")]
    InverseNotAllowedInMonoid { letter: Letter },
    #[error("words of the monoid SB have no inverses")]
    MonoidHasNoInverses,
    #[error("flavor mismatch: {0} vs {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("presentations need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("unknown flavor {0:?}")]
    UnknownFlavor(String),
}

impl WordError {
    /// Parse-level failures, as opposed to domain errors.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            WordError::Syntax { .. }
                | WordError::IndexOutOfRange { .. }
                | WordError::LetterNotAllowedInFlavor { .. }
                | WordError::InverseNotAllowedInMonoid { .. }
                | WordError::UnknownFlavor(_)
        )
    }
}

/// A word in one of the flavored presentations on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    flavor: Flavor,
    n: usize,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty(flavor: Flavor, n: usize) -> Self {
        Self {
            flavor,
            n,
            letters: Vec::new(),
        }
    }

    /// Validates every letter against the flavor and strand count.
    pub fn new(
        flavor: Flavor,
        n: usize,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, WordError> {
        let letters = letters
            .into_iter()
            .enumerate()
            .map(|(pos, l)| check_letter(l, flavor, n, pos))
            .collect::<Result<_, _>>()?;
        Ok(Self { flavor, n, letters })
    }

    pub fn parse(text: &str, flavor: Flavor, n: usize) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for (start, token) in tokens(text) {
            let letter = parse_letter(token, start)?;
            letters.push(check_letter(letter, flavor, n, start)?);
        }
        Ok(Self { flavor, n, letters })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn from_parts_unchecked(flavor: Flavor, n: usize, letters: Vec<Letter>) -> Self {
        Self { flavor, n, letters }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), WordError> {
        if self.flavor != other.flavor {
            return Err(WordError::FlavorMismatch(self.flavor, other.flavor));
        }
        if self.n != other.n {
            return Err(WordError::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Juxtaposition `self · other` (no reduction).
    pub fn concat(&self, other: &Self) -> Result<Self, WordError> {
        self.check_compatible(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            flavor: self.flavor,
            n: self.n,
            letters,
        })
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&prev| cancels(prev, l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            flavor: self.flavor,
            n: self.n,
            letters: out,
        }
    }

    /// Reversed word with every letter inverted.
    pub fn invert(&self) -> Result<Self, WordError> {
        if self.flavor.is_monoid() {
            return Err(WordError::MonoidHasNoInverses);
        }
        Ok(Self {
            flavor: self.flavor,
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        })
    }

    /// Same letters with a different strand count; fails if an index no
    /// longer fits.
    pub fn widen(&self, n: usize) -> Result<Self, WordError> {
        Self::new(self.flavor, n, self.letters.iter().copied())
    }

    /// Same letters read in another flavor.
    pub fn reinterpret(&self, flavor: Flavor) -> Result<Self, WordError> {
        Self::new(flavor, self.n, self.letters.iter().copied())
    }

    /// Number of `σ` letters counted without sign.
    pub fn sigma_count(&self) -> usize {
        self.count(LetterKind::Sigma)
    }

    pub fn zeta_count(&self) -> usize {
        self.count(LetterKind::Zeta)
    }

    fn count(&self, kind: LetterKind) -> usize {
        self.letters.iter().filter(|l| l.kind == kind).count()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// True when `a · b` is trivial by a free cancellation.
pub(crate) fn cancels(a: Letter, b: Letter) -> bool {
    a.kind == b.kind && a.index == b.index && (a.kind == LetterKind::Zeta || a.inverse != b.inverse)
}

fn check_letter(
    mut l: Letter,
    flavor: Flavor,
    n: usize,
    position: usize,
) -> Result<Letter, WordError> {
    if l.kind == LetterKind::Zeta {
        l.inverse = false;
    }
    if !flavor.allows(l.kind) {
        return Err(WordError::LetterNotAllowedInFlavor { letter: l, flavor });
    }
    if l.index == 0 || l.index + 1 > n {
        return Err(WordError::IndexOutOfRange {
            index: l.index,
            n,
            position,
        });
    }
    if flavor.is_monoid() && l.kind == LetterKind::A && l.inverse {
        return Err(WordError::InverseNotAllowedInMonoid { letter: l });
    }
    Ok(l)
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let start = offset;
        rest = &trimmed[end..];
        offset += end;
        Some((start, &trimmed[..end]))
    })
}

fn parse_letter(token: &str, start: usize) -> Result<Letter, WordError> {
    let syntax = |offset: usize, message: &str| WordError::Syntax {
        position: start + offset,
        message: message.to_string(),
    };
    let mut chars = token.char_indices();
    let kind = match chars.next() {
        Some((_, 's')) => LetterKind::Sigma,
        Some((_, 'z')) => LetterKind::Zeta,
        Some((_, 'a')) => LetterKind::A,
        Some((_, c)) => return Err(syntax(0, &format!("expected 's', 'z' or 'a', found {c:?}"))),
        None => return Err(syntax(0, "empty letter")),
    };
    let body = &token[1..];
    let digits = body
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(body.len());
    if digits == 0 {
        return Err(syntax(1, "expected a positive index"));
    }
    let index: usize = body[..digits]
        .parse()
        .map_err(|_| syntax(1, "index too large"))?;
    if index == 0 {
        return Err(syntax(1, "index must be positive"));
    }
    let inverse = match &body[digits..] {
        "" => false,
        "^-1" => true,
        _ => return Err(syntax(1 + digits, "expected end of letter or \"^-1\"")),
    };
    Ok(Letter {
        kind,
        index,
        inverse,
    })
}

/// Equality of words up to commuting letters whose indices differ by more
/// than one (equality in the free partially commutative monoid), decided
/// by comparing projections onto every pair of non-commuting letters.
pub fn commutation_equivalent(u: &GroupWord, v: &GroupWord) -> bool {
    let mut alphabet: Vec<Letter> = u.letters.iter().chain(&v.letters).copied().collect();
    alphabet.sort();
    alphabet.dedup();
    let project = |w: &GroupWord, a: Letter, b: Letter| -> Vec<Letter> {
        w.letters
            .iter()
            .copied()
            .filter(|&l| l == a || l == b)
            .collect()
    };
    for (i, &a) in alphabet.iter().enumerate() {
        for &b in &alphabet[i..] {
            if a.index.abs_diff(b.index) <= 1 && project(u, a, b) != project(v, a, b) {
                return false;
            }
        }
    }
    true
}
