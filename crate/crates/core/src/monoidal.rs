//! Juxtaposition of braids, the block symmetry `ζ_{m,n}` and the block
//! braiding `σ_{m,n}`, with checkers for naturality and the coherence
//! identities of the symmetry.

use thiserror::Error;

use crate::braidword::{
    bfs_equal, commutation_equivalent, Flavor, GroupWord, Letter, SearchConfig, SearchOutcome,
    WordError,
};
use crate::reps::{aut_rep, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("expected a word on {expected} strands, got {found}")]
    StrandCount { expected: usize, found: usize },
}

/// Adds `m` to every index and `m` strands on the left.
pub fn shift(w: &GroupWord, m: usize) -> GroupWord {
    let letters = w.letters().iter().map(|l| l.with_index(l.index + m));
    GroupWord::new(w.flavor(), w.strands() + m, letters).expect("shifted indices stay in range")
}

/// The pairing `μ_{m,n}`: `w1` on the first `m` strands, `w2` on the next
/// `n`.
pub fn mu(w1: &GroupWord, w2: &GroupWord) -> Result<GroupWord, MonoidalError> {
    if w1.flavor() != w2.flavor() {
        return Err(WordError::FlavorMismatch(w1.flavor(), w2.flavor()).into());
    }
    let m = w1.strands();
    let n = w2.strands();
    let left = w1.widen(m + n)?;
    Ok(left.concat(&shift(w2, m))?)
}

/// `x_m … x_1 · x_{m+1} … x_2 · … · x_{m+n-1} … x_n`: `n` descending runs
/// of length `m`.
fn block_letters(m: usize, n: usize, make: fn(usize) -> Letter) -> Vec<Letter> {
    (1..=n).flat_map(|k| (k..k + m).rev().map(make)).collect()
}

/// The symmetry `ζ_{m,n}` in `VB_{m+n}`, letter order exactly
/// `ζ_m…ζ_1 ζ_{m+1}…ζ_2 … ζ_{m+n-1}…ζ_n`.
pub fn zeta_block(m: usize, n: usize) -> GroupWord {
    GroupWord::new(Flavor::VB, m + n, block_letters(m, n, Letter::zeta))
        .expect("block indices are below m + n")
}

/// The braiding `σ_m…σ_1 σ_{m+1}…σ_2 … σ_{m+n-1}…σ_n` in `Br_{m+n}`.
pub fn sigma_block(m: usize, n: usize) -> GroupWord {
    GroupWord::new(Flavor::Br, m + n, block_letters(m, n, Letter::sigma))
        .expect("block indices are below m + n")
}

fn check_strands(w: &GroupWord, expected: usize) -> Result<(), MonoidalError> {
    if w.strands() != expected {
        return Err(MonoidalError::StrandCount {
            expected,
            found: w.strands(),
        });
    }
    Ok(())
}

/// Both sides of the naturality equation
/// `ζ_{m,n}^{-1} · μ(w1, w2) · ζ_{m,n} = μ(w2, w1)`.
pub fn naturality_sides(
    m: usize,
    n: usize,
    w1: &GroupWord,
    w2: &GroupWord,
) -> Result<(GroupWord, GroupWord), MonoidalError> {
    check_strands(w1, m)?;
    check_strands(w2, n)?;
    let z = zeta_block(m, n).reinterpret(w1.flavor())?;
    let lhs = z.invert()?.concat(&mu(w1, w2)?)?.concat(&z)?;
    let rhs = mu(w2, w1)?;
    Ok((lhs, rhs))
}

/// Conjugating the juxtaposition `μ(w1, w2)` by the symmetry swaps the two
/// blocks, checked in `Aut F_{m+n}` where the braid-permutation relations
/// hold exactly.
pub fn check_naturality(
    m: usize,
    n: usize,
    w1: &GroupWord,
    w2: &GroupWord,
) -> Result<bool, MonoidalError> {
    let (lhs, rhs) = naturality_sides(m, n, w1, w2)?;
    Ok(aut_rep(&lhs)? == aut_rep(&rhs)?)
}

/// Looks for a derivation of the naturality equation in the presentation
/// itself. `Equal` is a proof; `Unknown` is not a disproof.
pub fn naturality_derivation(
    m: usize,
    n: usize,
    w1: &GroupWord,
    w2: &GroupWord,
    config: &SearchConfig,
) -> Result<SearchOutcome, MonoidalError> {
    let (lhs, rhs) = naturality_sides(m, n, w1, w2)?;
    Ok(bfs_equal(&lhs, &rhs, config)?)
}

/// Words on both sides of the two coherence identities of the symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceSides {
    /// `ζ_{m,n} · shift(ζ_{m,q}, n)` and `ζ_{m,n+q}`.
    pub b1: (GroupWord, GroupWord),
    /// `shift(ζ_{n,q}, m) · ζ_{m,q}` and `ζ_{m+n,q}`.
    pub b2: (GroupWord, GroupWord),
}

pub fn coherence_sides(m: usize, n: usize, q: usize) -> CoherenceSides {
    let total = m + n + q;
    let widen = |w: GroupWord| w.widen(total).expect("indices below m + n + q");
    let b1_lhs = widen(zeta_block(m, n))
        .concat(&shift(&zeta_block(m, q), n))
        .expect("same strands");
    let b1_rhs = zeta_block(m, n + q);
    let b2_lhs = shift(&zeta_block(n, q), m)
        .concat(&widen(zeta_block(m, q)))
        .expect("same strands");
    let b2_rhs = zeta_block(m + n, q);
    CoherenceSides {
        b1: (b1_lhs, b1_rhs),
        b2: (b2_lhs, b2_rhs),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoherenceReport {
    pub b1_literal: bool,
    pub b2_literal: bool,
    /// Equality after commuting letters with indices more than one apart.
    pub b1_commutation: bool,
    pub b2_commutation: bool,
}

pub fn coherence_report(m: usize, n: usize, q: usize) -> CoherenceReport {
    let s = coherence_sides(m, n, q);
    CoherenceReport {
        b1_literal: s.b1.0 == s.b1.1,
        b2_literal: s.b2.0 == s.b2.1,
        b1_commutation: commutation_equivalent(&s.b1.0, &s.b1.1),
        b2_commutation: commutation_equivalent(&s.b2.0, &s.b2.1),
    }
}

/// True iff both coherence identities hold letter for letter.
pub fn check_coherence(m: usize, n: usize, q: usize) -> bool {
    let r = coherence_report(m, n, q);
    r.b1_literal && r.b2_literal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpmatrix::LPMatrix;
    use crate::perm::Permutation;
    use crate::reps::{burau, perm_proj};

    fn word(t: &str, f: Flavor, n: usize) -> GroupWord {
        GroupWord::parse(t, f, n).unwrap()
    }

    #[test]
    fn shifting() {
        let w = word("s1", Flavor::VB, 2);
        let s = shift(&w, 2);
        assert_eq!(s.to_string(), "s3");
        assert_eq!(s.strands(), 4);
        assert_eq!(shift(&w, 0), w);
        let w = word("s1 z2 s3^-1", Flavor::VB, 4);
        assert_eq!(shift(&shift(&w, 2), 3), shift(&w, 5));
    }

    #[test]
    fn pairing() {
        let s = word("s1", Flavor::VB, 2);
        let p = mu(&s, &s).unwrap();
        assert_eq!(p.to_string(), "s1 s3");
        assert_eq!(p.strands(), 4);
        let w = word("z1 s2", Flavor::VB, 3);
        assert_eq!(mu(&GroupWord::empty(Flavor::VB, 0), &w).unwrap(), w);
        let e2 = GroupWord::empty(Flavor::VB, 2);
        assert_eq!(mu(&e2, &w).unwrap(), shift(&w, 2));
        assert!(mu(&s, &word("s1", Flavor::BP, 2)).is_err());
    }

    #[test]
    fn pairing_is_block_diagonal_under_burau() {
        let a = word("s1 z2 s1^-1", Flavor::VB, 3);
        let b = word("s1^-1 z1", Flavor::VB, 2);
        assert_eq!(
            burau(&mu(&a, &b).unwrap()).unwrap(),
            burau(&a).unwrap().block_diag(&burau(&b).unwrap())
        );
    }

    #[test]
    fn block_words() {
        assert_eq!(zeta_block(1, 1).to_string(), "z1");
        assert!(zeta_block(0, 3).is_empty());
        assert!(zeta_block(3, 0).is_empty());
        assert_eq!(zeta_block(2, 1).to_string(), "z2 z1");
        assert_eq!(zeta_block(2, 2).to_string(), "z2 z1 z3 z2");
        assert_eq!(sigma_block(1, 1).to_string(), "s1");
        assert_eq!(sigma_block(2, 1).to_string(), "s2 s1");
        assert_eq!(zeta_block(3, 2).len(), 6);
    }

    /// Strand at top position `i` ends at `i + n` for `i <= m`, else `i - m`.
    fn block_transposition(m: usize, n: usize) -> Permutation {
        let images = (1..=m + n)
            .map(|i| if i <= m { i + n } else { i - m })
            .collect();
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn blocks_project_to_block_transpositions() {
        for m in 0..=4 {
            for n in 0..=4 {
                let expected = block_transposition(m, n);
                assert_eq!(perm_proj(&zeta_block(m, n)).unwrap(), expected);
                assert_eq!(perm_proj(&sigma_block(m, n)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn symmetry_squares_to_identity_in_representations() {
        for m in 0..=4 {
            for n in 0..=4 {
                let w = zeta_block(m, n).concat(&zeta_block(n, m)).unwrap();
                assert!(perm_proj(&w).unwrap().is_identity());
                assert_eq!(burau(&w).unwrap(), LPMatrix::identity(m + n));
                assert!(aut_rep(&w).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn naturality_on_generators() {
        let e = |k| GroupWord::empty(Flavor::VB, k);
        assert!(check_naturality(2, 3, &e(2), &e(3)).unwrap());
        // σ_1 on the second block of (1, 2) is σ_2 in VB_3; it must move to σ_1
        let s = word("s1", Flavor::VB, 2);
        assert!(check_naturality(1, 2, &e(1), &s).unwrap());
        assert!(check_naturality(2, 1, &s, &e(1)).unwrap());
        let (lhs, rhs) = naturality_sides(1, 2, &e(1), &s).unwrap();
        assert_eq!(rhs.to_string(), "s1");
        assert_eq!(lhs.to_string(), "z2 z1 s2 z1 z2");
        assert!(matches!(
            check_naturality(2, 2, &s, &e(3)),
            Err(MonoidalError::StrandCount {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn naturality_holds_in_the_group_for_small_cases() {
        let e = |k| GroupWord::empty(Flavor::VB, k);
        let s = word("s1", Flavor::VB, 2);
        let out = naturality_derivation(1, 2, &e(1), &s, &SearchConfig::with_depth(4)).unwrap();
        assert!(matches!(out, SearchOutcome::Equal(_)));
    }

    #[test]
    fn coherence_first_identity_is_literal() {
        for m in 0..=4 {
            for n in 0..=4 {
                for q in 0..=4 {
                    assert!(coherence_report(m, n, q).b1_literal, "B1 at ({m},{n},{q})");
                }
            }
        }
    }

    #[test]
    fn coherence_second_identity() {
        assert!(check_coherence(1, 1, 1));
        assert!(check_coherence(3, 0, 2));
        assert!(check_coherence(2, 3, 1));
        // for q >= 2 the two sides differ in the order of commuting runs
        let s = coherence_sides(1, 1, 2);
        assert_eq!(s.b2.0.to_string(), "z2 z3 z1 z2");
        assert_eq!(s.b2.1.to_string(), "z2 z1 z3 z2");
        assert!(!check_coherence(1, 1, 2));
        assert!(!check_coherence(3, 2, 2));
        for m in 0..=4 {
            for n in 0..=4 {
                for q in 0..=4 {
                    let r = coherence_report(m, n, q);
                    assert!(r.b1_commutation && r.b2_commutation);
                    assert_eq!(r.b2_literal, m == 0 || n == 0 || q <= 1);
                }
            }
        }
    }
}
