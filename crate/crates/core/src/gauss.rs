//! Gauss codes of knot diagrams and the code of the closure of a braid word.
//!
//! A code is the cyclic sequence of classical crossings met while walking
//! once around the knot, each tagged `O` (passing over) or `U` (passing
//! under). Virtual crossings leave no trace in the code.
//!
//! At a crossing `σ_i` the strand entering at position `i` passes over;
//! at `σ_i^{-1}` it passes under.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::braidword::{GroupWord, LetterKind};
use crate::reps::{perm_proj, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("label {label} has {overs} over and {unders} under visits, expected one of each")]
    LabelCount {
        label: u64,
        overs: usize,
        unders: usize,
    },
    #[error("closure has {components} components, not a knot")]
    NotAKnot { components: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Passage {
    #[serde(rename = "O")]
    Over,
    #[serde(rename = "U")]
    Under,
}

impl Passage {
    fn symbol(self) -> char {
        match self {
            Passage::Over => 'O',
            Passage::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Visit {
    pub passage: Passage,
    pub label: usize,
}

/// A validated code with labels `1..=k` in order of first visit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GaussCode {
    visits: Vec<Visit>,
}

impl GaussCode {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Relabels in first-visit order and checks that every label is met
    /// exactly once over and once under.
    pub fn from_visits<I>(visits: I) -> Result<Self, GaussError>
    where
        I: IntoIterator<Item = (Passage, u64)>,
    {
        let mut relabel: HashMap<u64, usize> = HashMap::new();
        let mut counts: Vec<(u64, usize, usize)> = Vec::new();
        let mut out = Vec::new();
        for (passage, raw) in visits {
            let next = relabel.len() + 1;
            let label = *relabel.entry(raw).or_insert(next);
            if label == counts.len() + 1 {
                counts.push((raw, 0, 0));
            }
            let c = &mut counts[label - 1];
            match passage {
                Passage::Over => c.1 += 1,
                Passage::Under => c.2 += 1,
            }
            out.push(Visit { passage, label });
        }
        if let Some(&(label, overs, unders)) = counts.iter().find(|c| c.1 != 1 || c.2 != 1) {
            return Err(GaussError::LabelCount {
                label,
                overs,
                unders,
            });
        }
        Ok(Self { visits: out })
    }

    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }

    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }

    pub fn crossings(&self) -> usize {
        self.visits.len() / 2
    }

    /// The same cyclic code read from a different basepoint, relabeled.
    pub fn rotated(&self, k: usize) -> Self {
        if self.visits.is_empty() {
            return self.clone();
        }
        let k = k % self.visits.len();
        let raw = self.visits[k..]
            .iter()
            .chain(&self.visits[..k])
            .map(|v| (v.passage, v.label as u64));
        Self::from_visits(raw).expect("rotation keeps label counts")
    }

    /// True iff `other` is this code read from some basepoint.
    pub fn equivalent_up_to_rotation(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        self.is_empty() || (0..self.len()).any(|k| &self.rotated(k) == other)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.visits {
            write!(f, "{}{}", v.passage.symbol(), v.label)?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = GaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s)
    }
}

/// Parses concatenated `O<k>` / `U<k>` tokens, e.g. `O1U2O3U1O2U3`.
/// Surrounding whitespace is ignored; labels are arbitrary positive
/// integers and come back relabeled.
pub fn parse_gauss(text: &str) -> Result<GaussCode, GaussError> {
    let offset = text.len() - text.trim_start().len();
    let body = text.trim();
    let bytes = body.as_bytes();
    let syntax = |at: usize, message: String| GaussError::Syntax {
        position: offset + at,
        message,
    };
    let mut visits = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let passage = match bytes[i] {
            b'O' => Passage::Over,
            b'U' => Passage::Under,
            _ => {
                let c = body[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("expected 'O' or 'U', found {c:?}")));
            }
        };
        let start = i + 1;
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(syntax(start, "expected a label".into()));
        }
        let label: u64 = body[start..end]
            .parse()
            .map_err(|_| syntax(start, "label too large".into()))?;
        if label == 0 {
            return Err(syntax(start, "labels are positive".into()));
        }
        visits.push((passage, label));
        i = end;
    }
    GaussCode::from_visits(visits)
}

/// Walks the closure of `w` from the top of strand 1, following each strand
/// down through the word and back up to its top position, until the walk
/// closes.
pub fn closure_code(w: &GroupWord) -> Result<GaussCode, GaussError> {
    let perm = perm_proj(w)?;
    if !perm.is_cycle() {
        let components =
            perm.cycles().len() + (1..=perm.size()).filter(|&x| perm.apply(x) == x).count();
        return Err(GaussError::NotAKnot { components });
    }
    let mut visits = Vec::new();
    let mut pos = 1;
    for _ in 0..w.strands() {
        for (crossing, l) in w.letters().iter().enumerate() {
            if pos != l.index && pos != l.index + 1 {
                continue;
            }
            let entering_left = pos == l.index;
            if l.kind == LetterKind::Sigma {
                let over = entering_left != l.inverse;
                let passage = if over { Passage::Over } else { Passage::Under };
                visits.push((passage, crossing as u64 + 1));
            }
            pos = if entering_left { pos + 1 } else { pos - 1 };
        }
    }
    debug_assert_eq!(pos, 1);
    GaussCode::from_visits(visits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::Flavor;
    use proptest::prelude::*;

    fn closure(text: &str, n: usize) -> Result<GaussCode, GaussError> {
        closure_code(&GroupWord::parse(text, Flavor::VB, n).unwrap())
    }

    #[test]
    fn parses_trefoil_code() {
        let c = parse_gauss("O1U2O3U1O2U3").unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.crossings(), 3);
        assert_eq!(c.to_string(), "O1U2O3U1O2U3");
    }

    #[test]
    fn relabels_in_first_visit_order() {
        let c = parse_gauss("U7O3O7U3").unwrap();
        assert_eq!(c.to_string(), "U1O2O1U2");
        assert_eq!(parse_gauss(" O2U2 ").unwrap().to_string(), "O1U1");
    }

    #[test]
    fn empty_code() {
        let c = parse_gauss("").unwrap();
        assert!(c.is_empty());
        assert_eq!(c.to_string(), "");
    }

    #[test]
    fn label_count_errors() {
        assert_eq!(
            parse_gauss("O1O1"),
            Err(GaussError::LabelCount {
                label: 1,
                overs: 2,
                unders: 0
            })
        );
        assert!(matches!(
            parse_gauss("O1U1O2"),
            Err(GaussError::LabelCount { label: 2, .. })
        ));
        assert!(matches!(
            parse_gauss("O1U1U1"),
            Err(GaussError::LabelCount { .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        for (text, position) in [
            ("X1", 0),
            ("O", 1),
            ("O1U", 3),
            ("O0U0", 1),
            ("O1 U1", 2),
            ("o1U1", 0),
        ] {
            match parse_gauss(text) {
                Err(GaussError::Syntax { position: p, .. }) => assert_eq!(p, position, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_gauss("O99999999999999999999999U1"),
            Err(GaussError::Syntax { .. })
        ));
    }

    #[test]
    fn rotation() {
        let c = parse_gauss("O1U2O3U1O2U3").unwrap();
        assert_eq!(c.rotated(1).to_string(), "U1O2U3O1U2O3");
        assert_eq!(c.rotated(6), c);
        assert!(c.equivalent_up_to_rotation(&c.rotated(4)));
        assert!(!c.equivalent_up_to_rotation(&parse_gauss("O1U1O2U2O3U3").unwrap()));
        assert!(GaussCode::empty().equivalent_up_to_rotation(&GaussCode::empty()));
    }

    #[test]
    fn trefoil_closure() {
        let c = closure("s1 s1 s1", 2).unwrap();
        assert_eq!(c.to_string(), "O1U2O3U1O2U3");
        let mirror = closure("s1^-1 s1^-1 s1^-1", 2).unwrap();
        assert_eq!(mirror.to_string(), "U1O2U3O1U2O3");
    }

    #[test]
    fn small_closures() {
        assert_eq!(closure("s1", 2).unwrap().to_string(), "O1U1");
        assert_eq!(closure("s1^-1", 2).unwrap().to_string(), "U1O1");
        assert_eq!(closure("z1", 2).unwrap(), GaussCode::empty());
        assert_eq!(closure("", 1).unwrap(), GaussCode::empty());
        // two strands cross at s1, the third joins through the virtual crossing
        assert_eq!(closure("s1 z2", 3).unwrap().to_string(), "O1U1");
        assert_eq!(closure("s1 s2", 3).unwrap().to_string(), "O1O2U2U1");
    }

    #[test]
    fn multi_component_closures() {
        assert_eq!(
            closure("s1", 3),
            Err(GaussError::NotAKnot { components: 2 })
        );
        assert_eq!(closure("", 2), Err(GaussError::NotAKnot { components: 2 }));
        assert_eq!(
            closure("s1 s1", 2),
            Err(GaussError::NotAKnot { components: 2 })
        );
        assert_eq!(closure("", 0), Err(GaussError::NotAKnot { components: 0 }));
    }

    #[test]
    fn rejects_monoid_words() {
        let w = GroupWord::parse("a1", Flavor::SG, 2).unwrap();
        assert!(matches!(closure_code(&w), Err(GaussError::Rep(_))));
    }

    fn arb_code() -> impl Strategy<Value = GaussCode> {
        (0usize..8)
            .prop_flat_map(|k| {
                let tokens: Vec<(Passage, u64)> = (1..=k as u64)
                    .flat_map(|l| [(Passage::Over, l * 3), (Passage::Under, l * 3)])
                    .collect();
                Just(tokens).prop_shuffle()
            })
            .prop_map(|v| GaussCode::from_visits(v).unwrap())
    }

    fn arb_knot_word() -> impl Strategy<Value = GroupWord> {
        (2usize..=5)
            .prop_flat_map(|n| {
                let letter = (0u8..3, 1..n).prop_map(|(k, i)| match k {
                    0 => format!("s{i}"),
                    1 => format!("s{i}^-1"),
                    _ => format!("z{i}"),
                });
                (Just(n), proptest::collection::vec(letter, 0..20))
            })
            .prop_filter_map("closure is a knot", |(n, letters)| {
                let w = GroupWord::parse(&letters.join(" "), Flavor::VB, n).ok()?;
                perm_proj(&w).ok()?.is_cycle().then_some(w)
            })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(c in arb_code()) {
            prop_assert_eq!(parse_gauss(&c.to_string()).unwrap(), c);
        }

        #[test]
        fn rotations_are_valid_codes(c in arb_code(), k in 0usize..20) {
            let r = c.rotated(k);
            prop_assert_eq!(parse_gauss(&r.to_string()).unwrap(), r.clone());
            prop_assert!(c.equivalent_up_to_rotation(&r));
        }

        #[test]
        fn closure_visits_every_classical_crossing_twice(w in arb_knot_word()) {
            let c = closure_code(&w).unwrap();
            prop_assert_eq!(c.len(), 2 * w.sigma_count());
            prop_assert_eq!(parse_gauss(&c.to_string()).unwrap(), c);
        }
    }
}
