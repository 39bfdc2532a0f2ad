//! Homomorphisms out of the word presentations: the epimorphism
//! `VB_n -> BP_n`, the Burau representation into `GL_n Z[t, 1/t]`, the
//! representation in `Aut F_n`, the projection onto `Σ_n`, the exponent sum
//! and the abelianization `Z/2 ⊕ Z`.
//!
//! # Evaluation convention
//!
//! Every representation evaluates a word `l_1 l_2 … l_k` with the leftmost
//! letter acting first:
//!
//! * matrices: `ρ(l_k) · … · ρ(l_2) · ρ(l_1)`;
//! * automorphisms: `ρ(l_k) ∘ … ∘ ρ(l_1)` as substitution maps, so
//!   `x ↦ ρ(l_k)(…ρ(l_1)(x))`;
//! * permutations: `τ(l_k) ∘ … ∘ τ(l_1)`, which tracks the strand starting
//!   at the top position `p` down to its bottom position.
//!
//! Hence `ρ(u·v) = ρ(v)·ρ(u)`. This is the order in which the generator
//! matrices `σ_i ↦ [[1-t, t], [1, 0]]`, `ξ_i ↦ [[0, 1], [1, 0]]` and the
//! automorphisms `σ_i: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}`
//! satisfy every braid-permutation relation, including
//! `σ_i σ_{i+1} ξ_i = ξ_{i+1} σ_i σ_{i+1}`; the opposite order breaks that
//! relation.
//!
//! # Determinants
//!
//! `det ρ(σ_i) = -t` and `det ρ(ζ_i) = -1`, so
//! `det ρ(w) = (-t)^{exp_sum(w)} · (-1)^{#ζ(w)}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braidword::{Flavor, GroupWord, Letter, LetterKind};
use crate::freegrp::FreeAut;
use crate::laurent::LaurentPoly;
use crate::lpmatrix::LPMatrix;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{rep} is not defined on {flavor} words")]
    UnsupportedFlavor { rep: &'static str, flavor: Flavor },
}

fn require(rep: &'static str, flavor: Flavor, allowed: &[Flavor]) -> Result<(), RepError> {
    if allowed.contains(&flavor) {
        Ok(())
    } else {
        Err(RepError::UnsupportedFlavor { rep, flavor })
    }
}

const GROUP_FLAVORS: [Flavor; 4] = [Flavor::Br, Flavor::Sym, Flavor::VB, Flavor::BP];

/// `p(ζ_i) = ξ_i`, `p(σ_i) = σ_i`: the same letters read in `BP_n`.
pub fn to_bp(w: &GroupWord) -> Result<GroupWord, RepError> {
    require("to_bp", w.flavor(), &[Flavor::VB])?;
    Ok(w.reinterpret(Flavor::BP)
        .expect("VB letters are valid BP letters"))
}

/// Places a 2x2 block at rows and columns `i, i+1` (1-based) of `I_n`.
fn embed(block: &LPMatrix, i: usize, n: usize) -> LPMatrix {
    LPMatrix::identity(i - 1)
        .block_diag(block)
        .block_diag(&LPMatrix::identity(n - i - 1))
}

fn sigma_block() -> LPMatrix {
    let one_minus_t = LaurentPoly::from_terms([(0, 1), (1, -1)]);
    LPMatrix::from_rows(vec![
        vec![one_minus_t, LaurentPoly::t_pow(1)],
        vec![LaurentPoly::one(), LaurentPoly::zero()],
    ])
    .unwrap()
}

fn swap_block() -> LPMatrix {
    LPMatrix::from_rows(vec![
        vec![LaurentPoly::zero(), LaurentPoly::one()],
        vec![LaurentPoly::one(), LaurentPoly::zero()],
    ])
    .unwrap()
}

/// Burau image of a single `σ_i^{±1}` or `ζ_i` on `n` strands.
pub fn burau_generator(letter: Letter, n: usize) -> Result<LPMatrix, RepError> {
    let block = match (letter.kind, letter.inverse) {
        (LetterKind::Sigma, false) => sigma_block(),
        (LetterKind::Sigma, true) => sigma_block().inverse().expect("det is -t"),
        (LetterKind::Zeta, _) => swap_block(),
        (LetterKind::A, _) => {
            return Err(RepError::UnsupportedFlavor {
                rep: "burau",
                flavor: Flavor::SB,
            })
        }
    };
    Ok(embed(&block, letter.index, n))
}

pub fn burau(w: &GroupWord) -> Result<LPMatrix, RepError> {
    require("burau", w.flavor(), &GROUP_FLAVORS)?;
    let n = w.strands();
    let mut acc = LPMatrix::identity(n);
    for &l in w.letters() {
        acc = burau_generator(l, n)?.mul(&acc).expect("same dimension");
    }
    Ok(acc)
}

pub fn aut_generator(letter: Letter, n: usize) -> Result<FreeAut, RepError> {
    let aut = match (letter.kind, letter.inverse) {
        (LetterKind::Sigma, false) => FreeAut::sigma(letter.index, n),
        (LetterKind::Sigma, true) => FreeAut::sigma_inverse(letter.index, n),
        (LetterKind::Zeta, _) => FreeAut::swap(letter.index, n),
        (LetterKind::A, _) => {
            return Err(RepError::UnsupportedFlavor {
                rep: "aut",
                flavor: Flavor::SB,
            })
        }
    };
    Ok(aut.expect("word letters are in range"))
}

pub fn aut_rep(w: &GroupWord) -> Result<FreeAut, RepError> {
    require("aut", w.flavor(), &GROUP_FLAVORS)?;
    let n = w.strands();
    let mut acc = FreeAut::identity(n);
    for &l in w.letters() {
        acc = aut_generator(l, n)?.compose(&acc).expect("same rank");
    }
    Ok(acc)
}

/// `φ_n`: every letter maps to the transposition `(i, i+1)`.
pub fn perm_proj(w: &GroupWord) -> Result<Permutation, RepError> {
    require("perm", w.flavor(), &GROUP_FLAVORS)?;
    let n = w.strands();
    let mut acc = Permutation::identity(n);
    for l in w.letters() {
        let t = Permutation::transposition(l.index, n).expect("word letters are in range");
        acc = t.compose(&acc).expect("same size");
    }
    Ok(acc)
}

/// `α_n`: signed count of `σ` letters.
pub fn exp_sum(w: &GroupWord) -> i64 {
    w.letters()
        .iter()
        .filter(|l| l.kind == LetterKind::Sigma)
        .map(|l| l.exponent())
        .sum()
}

/// Image in `Z/2 ⊕ Z`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianImage {
    pub zeta_parity: u8,
    pub sigma_sum: i64,
}

impl AbelianImage {
    pub fn combine(self, other: Self) -> Self {
        Self {
            zeta_parity: (self.zeta_parity + other.zeta_parity) % 2,
            sigma_sum: self.sigma_sum + other.sigma_sum,
        }
    }

    /// The unit `(-t)^{sigma_sum} · (-1)^{zeta_parity}` of `Z[t, 1/t]`.
    pub fn determinant(self) -> LaurentPoly {
        let mut sign: i64 = if self.sigma_sum.rem_euclid(2) == 1 {
            -1
        } else {
            1
        };
        if self.zeta_parity == 1 {
            sign = -sign;
        }
        LaurentPoly::monomial(sign, self.sigma_sum)
    }
}

pub fn abelianize(w: &GroupWord) -> Result<AbelianImage, RepError> {
    require("abelianize", w.flavor(), &[Flavor::VB, Flavor::BP])?;
    Ok(AbelianImage {
        zeta_parity: (w.zeta_count() % 2) as u8,
        sigma_sum: exp_sum(w),
    })
}
