//! Checks every defining relation of a presentation under every
//! representation that is defined on its flavor.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::braidword::{
    relators, Flavor, GroupWord, Letter, LetterKind, Presentation, Relator, WordError,
};
use crate::reps::{abelianize, aut_rep, burau, exp_sum, perm_proj, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("no relator with id {0:?}")]
    UnknownRelator(String),
    #[error("unknown representation {0:?}")]
    UnknownRepresentation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Burau,
    Aut,
    Perm,
    ExpSum,
    Abelianize,
}

impl Representation {
    pub const ALL: [Representation; 5] = [
        Representation::Burau,
        Representation::Aut,
        Representation::Perm,
        Representation::ExpSum,
        Representation::Abelianize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::Burau => "burau",
            Representation::Aut => "aut",
            Representation::Perm => "perm",
            Representation::ExpSum => "exp_sum",
            Representation::Abelianize => "abelianize",
        }
    }

    pub fn applies_to(self, flavor: Flavor) -> bool {
        use Flavor::*;
        match self {
            Representation::Burau | Representation::Aut | Representation::Perm => {
                matches!(flavor, Br | Sym | VB | BP)
            }
            Representation::ExpSum => true,
            Representation::Abelianize => matches!(flavor, VB | BP),
        }
    }

    /// Whether both words have the same image.
    pub fn agrees(self, u: &GroupWord, v: &GroupWord) -> Result<bool, RepError> {
        Ok(match self {
            Representation::Burau => burau(u)? == burau(v)?,
            Representation::Aut => aut_rep(u)? == aut_rep(v)?,
            Representation::Perm => perm_proj(u)? == perm_proj(v)?,
            Representation::ExpSum => exp_sum(u) == exp_sum(v),
            Representation::Abelianize => abelianize(u)? == abelianize(v)?,
        })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Representation::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .ok_or_else(|| VerifyError::UnknownRepresentation(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub relator: String,
    pub representation: Representation,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub flavor: Flavor,
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> + '_ {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// One `PASS`/`FAIL` line per check followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {} {}\n", r.relator, r.representation));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.results.len(),
            self.results.len() - failed,
            failed
        ));
        out
    }
}

/// Runs `reps` on every relator of `pres`, skipping representations that
/// are not defined on its flavor. Results come in relator order.
pub fn verify_presentation(pres: &Presentation, reps: &[Representation]) -> Vec<CheckResult> {
    let reps: Vec<Representation> = reps
        .iter()
        .copied()
        .filter(|r| r.applies_to(pres.flavor))
        .collect();
    pres.relators
        .par_iter()
        .flat_map_iter(|rel| {
            reps.iter().map(move |&rep| CheckResult {
                relator: rel.id(),
                representation: rep,
                pass: rep
                    .agrees(&rel.lhs, &rel.rhs)
                    .expect("representation applies to the flavor"),
            })
        })
        .collect()
}

/// Appends a letter to the right-hand side so that every applicable
/// representation sees a different value.
fn corrupt(rel: &mut Relator) {
    let flavor = rel.rhs.flavor();
    let extra = if flavor.allows(LetterKind::Zeta) {
        Letter::zeta(1)
    } else {
        Letter::sigma(1)
    };
    let mut letters = rel.rhs.letters().to_vec();
    letters.push(extra);
    rel.rhs = GroupWord::from_parts_unchecked(flavor, rel.rhs.strands(), letters);
}

/// Verifies the presentations of `flavor` for every `n` in `ns`.
///
/// `fault` names a relator id whose right-hand side is corrupted before the
/// run; it exists to check that the harness reports failures.
pub fn verify(
    flavor: Flavor,
    ns: RangeInclusive<usize>,
    reps: &[Representation],
    fault: Option<&str>,
) -> Result<VerifyReport, VerifyError> {
    let mut presentations = Vec::new();
    for n in ns {
        presentations.push(relators(flavor, n)?);
    }
    if let Some(id) = fault {
        let target = presentations
            .iter_mut()
            .flat_map(|p| p.relators.iter_mut())
            .find(|r| r.id() == id)
            .ok_or_else(|| VerifyError::UnknownRelator(id.to_string()))?;
        corrupt(target);
    }
    let results = presentations
        .iter()
        .flat_map(|p| verify_presentation(p, reps))
        .collect();
    Ok(VerifyReport { flavor, results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn applicability() {
        use Representation::*;
        assert!(Burau.applies_to(Flavor::Sym));
        assert!(!Burau.applies_to(Flavor::SB));
        assert!(ExpSum.applies_to(Flavor::SG));
        assert!(!Abelianize.applies_to(Flavor::Br));
        assert!(Abelianize.applies_to(Flavor::BP));
    }

    #[test]
    fn parses_names() {
        assert_eq!(
            "exp-sum".parse::<Representation>().unwrap(),
            Representation::ExpSum
        );
        assert_eq!(
            "Burau".parse::<Representation>().unwrap(),
            Representation::Burau
        );
        assert!("jones".parse::<Representation>().is_err());
    }

    #[test]
    fn every_flavor_passes() {
        for flavor in Flavor::ALL {
            let report = verify(flavor, 2..=5, &Representation::ALL, None).unwrap();
            assert!(report.all_passed(), "{flavor}: {}", report.to_text());
            assert!(!report.results.is_empty());
        }
    }

    #[test]
    fn forbidden_relation_fails_in_burau() {
        let u = GroupWord::parse("s1 s2 z1", Flavor::VB, 3).unwrap();
        let v = GroupWord::parse("z2 s1 s2", Flavor::VB, 3).unwrap();
        // the relation holds in BP_n, which VB_n maps onto
        assert!(Representation::Burau.agrees(&u, &v).unwrap());
        assert!(Representation::Aut.agrees(&u, &v).unwrap());
        let w = GroupWord::parse("z1 s2 s1", Flavor::VB, 3).unwrap();
        assert!(!Representation::Burau.agrees(&u, &w).unwrap());
    }

    #[test]
    fn injected_fault_is_reported() {
        for flavor in Flavor::ALL {
            let id = format!("{flavor}3:sigma-braid(1)");
            let id = if flavor == Flavor::Sym {
                "Sym3:zeta-braid(1)".to_string()
            } else {
                id
            };
            let report = verify(flavor, 2..=4, &Representation::ALL, Some(&id)).unwrap();
            let failed: Vec<&CheckResult> = report.failures().collect();
            assert!(!failed.is_empty(), "{flavor}");
            assert!(failed.iter().all(|r| r.relator == id));
            assert!(report.to_text().contains(&format!("FAIL {id}")));
        }
        assert!(matches!(
            verify(Flavor::VB, 2..=3, &Representation::ALL, Some("VB9:nothing")),
            Err(VerifyError::UnknownRelator(_))
        ));
    }

    #[test]
    fn order_is_stable() {
        let a = verify(Flavor::BP, 2..=6, &Representation::ALL, None).unwrap();
        let b = verify(Flavor::BP, 2..=6, &Representation::ALL, None).unwrap();
        assert_eq!(a, b);
        assert!(a.results[0].relator.starts_with("BP2:"));
        assert!(a.results.last().unwrap().relator.starts_with("BP6:"));
    }

    #[test]
    fn rejects_one_strand() {
        assert!(matches!(
            verify(Flavor::VB, 1..=3, &Representation::ALL, None),
            Err(VerifyError::Word(WordError::TooFewStrands(1)))
        ));
    }
}
