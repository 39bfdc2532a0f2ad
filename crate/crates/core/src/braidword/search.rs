//! Bounded bidirectional breadth-first search for derivations between two
//! words of a presentation.
//!
//! A move is a relator rewrite (either direction, at any position; an
//! empty side means insertion) or the cancellation of one adjacent inverse
//! pair. Both halves of the search generate the same moves; when they meet,
//! the backward half is inverted, which turns its cancellations into
//! [`Step::Insert`] steps.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::{cancels, relators, GroupWord, Letter, Presentation, WordError};

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of moves in a derivation.
    pub depth: usize,
    /// Maximum length of intermediate words. `None` means
    /// `max(|w1|, |w2|) + 2 * depth`.
    pub length_cap: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            depth: DEFAULT_DEPTH,
            length_cap: None,
        }
    }
}

impl SearchConfig {
    pub fn with_depth(depth: usize) -> Self {
        Self {
            depth,
            length_cap: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Replace an occurrence of one side of relator `relator` starting at
    /// `position` by the other side; `reversed` rewrites rhs to lhs.
    Rewrite {
        relator: usize,
        reversed: bool,
        position: usize,
    },
    /// Remove the inverse pair at `position`, `position + 1`.
    Cancel { position: usize },
    /// Insert `letter` followed by its inverse at `position`.
    Insert { position: usize, letter: Letter },
}

impl Step {
    /// Applies the step, or `None` if it does not match `word`.
    pub fn apply(&self, word: &[Letter], pres: &Presentation) -> Option<Vec<Letter>> {
        match *self {
            Step::Rewrite {
                relator,
                reversed,
                position,
            } => {
                let rel = pres.relators.get(relator)?;
                let (from, to) = if reversed {
                    (rel.rhs.letters(), rel.lhs.letters())
                } else {
                    (rel.lhs.letters(), rel.rhs.letters())
                };
                replace_at(word, position, from, to)
            }
            Step::Cancel { position } => {
                if position + 1 < word.len() && cancels(word[position], word[position + 1]) {
                    let mut out = word.to_vec();
                    out.drain(position..position + 2);
                    Some(out)
                } else {
                    None
                }
            }
            Step::Insert { position, letter } => {
                if position > word.len() {
                    return None;
                }
                let mut out = Vec::with_capacity(word.len() + 2);
                out.extend_from_slice(&word[..position]);
                out.push(letter);
                out.push(letter.inv());
                out.extend_from_slice(&word[position..]);
                Some(out)
            }
        }
    }

    /// The step taking the result of `self` applied to `before` back to
    /// `before`.
    fn inverse(&self, before: &[Letter]) -> Step {
        match *self {
            Step::Rewrite {
                relator,
                reversed,
                position,
            } => Step::Rewrite {
                relator,
                reversed: !reversed,
                position,
            },
            Step::Cancel { position } => Step::Insert {
                position,
                letter: before[position],
            },
            Step::Insert { position, .. } => Step::Cancel { position },
        }
    }

    pub fn describe(&self, pres: &Presentation) -> String {
        match *self {
            Step::Rewrite {
                relator,
                reversed,
                position,
            } => {
                let rel = &pres.relators[relator];
                let (from, to) = if reversed {
                    (&rel.rhs, &rel.lhs)
                } else {
                    (&rel.lhs, &rel.rhs)
                };
                format!("apply {} at {}: [{}] -> [{}]", rel.name, position, from, to)
            }
            Step::Cancel { position } => format!("cancel at {position}"),
            Step::Insert { position, letter } => {
                format!("insert {} {} at {}", letter, letter.inv(), position)
            }
        }
    }
}

fn replace_at(word: &[Letter], pos: usize, from: &[Letter], to: &[Letter]) -> Option<Vec<Letter>> {
    if pos + from.len() > word.len() || word[pos..pos + from.len()] != *from {
        return None;
    }
    let mut out = Vec::with_capacity(word.len() - from.len() + to.len());
    out.extend_from_slice(&word[..pos]);
    out.extend_from_slice(to);
    out.extend_from_slice(&word[pos + from.len()..]);
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("witness step {index} ({step:?}) does not apply")]
pub struct ReplayError {
    pub index: usize,
    pub step: Step,
}

/// A replayable derivation from the first word to the second.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub steps: Vec<Step>,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every intermediate word, starting with `start`.
    pub fn trace(
        &self,
        start: &GroupWord,
        pres: &Presentation,
    ) -> Result<Vec<GroupWord>, ReplayError> {
        let mut words = vec![start.clone()];
        let mut cur = start.letters().to_vec();
        for (index, step) in self.steps.iter().enumerate() {
            cur = step
                .apply(&cur, pres)
                .ok_or(ReplayError { index, step: *step })?;
            words.push(GroupWord::from_parts_unchecked(
                start.flavor(),
                start.strands(),
                cur.clone(),
            ));
        }
        Ok(words)
    }

    pub fn replay(&self, start: &GroupWord, pres: &Presentation) -> Result<GroupWord, ReplayError> {
        Ok(self
            .trace(start, pres)?
            .pop()
            .expect("trace is never empty"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Equal(Witness),
    /// No derivation within the bounds. Not a proof of inequality.
    Unknown,
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Equal(_) => f.write_str("equal"),
            SearchOutcome::Unknown => f.write_str("unknown"),
        }
    }
}

struct Side {
    words: Vec<Vec<Letter>>,
    parents: Vec<Option<(usize, Step)>>,
    index: HashMap<Vec<Letter>, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(root: Vec<Letter>) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Self {
            words: vec![root],
            parents: vec![None],
            index,
            frontier: vec![0],
            depth: 0,
        }
    }

    /// Steps from the root to node `id`, in order.
    fn path_to(&self, mut id: usize) -> Vec<(usize, Step)> {
        let mut out = Vec::new();
        while let Some((parent, step)) = self.parents[id] {
            out.push((parent, step));
            id = parent;
        }
        out.reverse();
        out
    }
}

/// All moves out of `word`: positions left to right, then relators in
/// database order (forward before reversed), then cancellation.
fn moves(word: &[Letter], pres: &Presentation, cap: usize, out: &mut Vec<(Step, Vec<Letter>)>) {
    out.clear();
    for position in 0..=word.len() {
        for relator in 0..pres.relators.len() {
            for reversed in [false, true] {
                let step = Step::Rewrite {
                    relator,
                    reversed,
                    position,
                };
                if let Some(next) = step.apply(word, pres) {
                    if next.len() <= cap {
                        out.push((step, next));
                    }
                }
            }
        }
        let step = Step::Cancel { position };
        if let Some(next) = step.apply(word, pres) {
            out.push((step, next));
        }
    }
}

/// Searches for a derivation of `w2` from `w1` using at most
/// `config.depth` moves. The result is deterministic.
pub fn bfs_equal(
    w1: &GroupWord,
    w2: &GroupWord,
    config: &SearchConfig,
) -> Result<SearchOutcome, WordError> {
    if w1.flavor() != w2.flavor() {
        return Err(WordError::FlavorMismatch(w1.flavor(), w2.flavor()));
    }
    if w1.strands() != w2.strands() {
        return Err(WordError::StrandMismatch(w1.strands(), w2.strands()));
    }
    let pres = presentation_for(w1);
    Ok(search(w1, w2, &pres, config))
}

/// The presentation `bfs_equal` searches in; on fewer than two strands it
/// has no relators.
pub fn presentation_for(w: &GroupWord) -> Presentation {
    relators(w.flavor(), w.strands()).unwrap_or(Presentation {
        flavor: w.flavor(),
        n: w.strands(),
        relators: Vec::new(),
    })
}

fn search(
    w1: &GroupWord,
    w2: &GroupWord,
    pres: &Presentation,
    config: &SearchConfig,
) -> SearchOutcome {
    if w1 == w2 {
        return SearchOutcome::Equal(Witness::default());
    }
    let cap = config
        .length_cap
        .unwrap_or(w1.len().max(w2.len()) + 2 * config.depth);
    let mut fwd = Side::new(w1.letters().to_vec());
    let mut bwd = Side::new(w2.letters().to_vec());
    let mut buf = Vec::new();

    while fwd.depth + bwd.depth < config.depth {
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        if this.frontier.is_empty() {
            return SearchOutcome::Unknown;
        }
        let mut next_frontier = Vec::new();
        let mut meeting = None;
        'expand: for &id in &this.frontier {
            let word = this.words[id].clone();
            moves(&word, pres, cap, &mut buf);
            for (step, next) in buf.drain(..) {
                if this.index.contains_key(&next) {
                    continue;
                }
                let new_id = this.words.len();
                this.words.push(next.clone());
                this.parents.push(Some((id, step)));
                this.index.insert(next.clone(), new_id);
                next_frontier.push(new_id);
                if let Some(&other_id) = other.index.get(&next) {
                    meeting = Some((new_id, other_id));
                    break 'expand;
                }
            }
        }
        this.frontier = next_frontier;
        this.depth += 1;
        if let Some((this_id, other_id)) = meeting {
            let (f_id, b_id) = if forward {
                (this_id, other_id)
            } else {
                (other_id, this_id)
            };
            return SearchOutcome::Equal(join(&fwd, f_id, &bwd, b_id));
        }
    }
    SearchOutcome::Unknown
}

fn join(fwd: &Side, f_id: usize, bwd: &Side, b_id: usize) -> Witness {
    let mut steps: Vec<Step> = fwd.path_to(f_id).into_iter().map(|(_, s)| s).collect();
    for (parent, step) in bwd.path_to(b_id).into_iter().rev() {
        steps.push(step.inverse(&bwd.words[parent]));
    }
    Witness { steps }
}
