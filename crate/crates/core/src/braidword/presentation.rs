use super::{Flavor, GroupWord, Letter, WordError};

/// A defining relation `lhs = rhs`, named by its schema and indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub name: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
}

impl Relator {
    /// Stable identifier such as `VB3:mixed-zzs(1)`.
    pub fn id(&self) -> String {
        format!("{}{}:{}", self.lhs.flavor(), self.lhs.strands(), self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub flavor: Flavor,
    pub n: usize,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn find(&self, name: &str) -> Option<&Relator> {
        self.relators
            .iter()
            .find(|r| r.name == name || r.id() == name)
    }
}

struct Builder {
    flavor: Flavor,
    n: usize,
    out: Vec<Relator>,
}

impl Builder {
    fn push(&mut self, name: String, lhs: Vec<Letter>, rhs: Vec<Letter>) {
        self.out.push(Relator {
            name,
            lhs: GroupWord::from_parts_unchecked(self.flavor, self.n, lhs),
            rhs: GroupWord::from_parts_unchecked(self.flavor, self.n, rhs),
        });
    }

    /// `x_i x_j = x_j x_i` for unordered pairs with `|i - j| > 1`.
    fn far_commute(&mut self, tag: &str, make: fn(usize) -> Letter) {
        let n = self.n;
        for i in 1..n {
            for j in i + 2..n {
                self.push(
                    format!("{tag}-commute({i},{j})"),
                    vec![make(i), make(j)],
                    vec![make(j), make(i)],
                );
            }
        }
    }

    /// `x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}`.
    fn braid(&mut self, tag: &str, make: fn(usize) -> Letter) {
        for i in 1..self.n - 1 {
            self.push(
                format!("{tag}-braid({i})"),
                vec![make(i), make(i + 1), make(i)],
                vec![make(i + 1), make(i), make(i + 1)],
            );
        }
    }

    fn symmetric(&mut self) {
        for i in 1..self.n {
            self.push(
                format!("zeta-square({i})"),
                vec![Letter::zeta(i), Letter::zeta(i)],
                vec![],
            );
        }
        self.far_commute("zeta", Letter::zeta);
        self.braid("zeta", Letter::zeta);
    }

    fn classical(&mut self) {
        self.far_commute("sigma", Letter::sigma);
        self.braid("sigma", Letter::sigma);
    }

    fn virtual_mixed(&mut self) {
        let n = self.n;
        // σ_i ζ_j = ζ_j σ_i for all ordered pairs with |i - j| > 1
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) > 1 {
                    self.push(
                        format!("mixed-commute({i},{j})"),
                        vec![Letter::sigma(i), Letter::zeta(j)],
                        vec![Letter::zeta(j), Letter::sigma(i)],
                    );
                }
            }
        }
        // ζ_i ζ_{i+1} σ_i = σ_{i+1} ζ_i ζ_{i+1}
        for i in 1..n - 1 {
            self.push(
                format!("mixed-zzs({i})"),
                vec![Letter::zeta(i), Letter::zeta(i + 1), Letter::sigma(i)],
                vec![Letter::sigma(i + 1), Letter::zeta(i), Letter::zeta(i + 1)],
            );
        }
    }

    /// σ_i σ_{i+1} ξ_i = ξ_{i+1} σ_i σ_{i+1}, the relation that holds in
    /// `BP_n` but not in `VB_n`.
    fn welded_mixed(&mut self) {
        for i in 1..self.n - 1 {
            self.push(
                format!("mixed-ssz({i})"),
                vec![Letter::sigma(i), Letter::sigma(i + 1), Letter::zeta(i)],
                vec![Letter::zeta(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
            );
        }
    }

    fn singular(&mut self) {
        let n = self.n;
        self.far_commute("sigma", Letter::sigma);
        self.far_commute("a", Letter::a);
        // a_i σ_j = σ_j a_i for |i - j| != 1
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) != 1 {
                    self.push(
                        format!("a-sigma-commute({i},{j})"),
                        vec![Letter::a(i), Letter::sigma(j)],
                        vec![Letter::sigma(j), Letter::a(i)],
                    );
                }
            }
        }
        self.braid("sigma", Letter::sigma);
        for i in 1..n - 1 {
            self.push(
                format!("ssa({i})"),
                vec![Letter::sigma(i), Letter::sigma(i + 1), Letter::a(i)],
                vec![Letter::a(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
            );
        }
        for i in 1..n - 1 {
            self.push(
                format!("ssa-mirror({i})"),
                vec![Letter::sigma(i + 1), Letter::sigma(i), Letter::a(i + 1)],
                vec![Letter::a(i), Letter::sigma(i + 1), Letter::sigma(i)],
            );
        }
        for i in 1..n {
            self.push(
                format!("sigma-inverse-right({i})"),
                vec![Letter::sigma(i), Letter::sigma_inv(i)],
                vec![],
            );
            self.push(
                format!("sigma-inverse-left({i})"),
                vec![Letter::sigma_inv(i), Letter::sigma(i)],
                vec![],
            );
        }
    }
}

/// Every instance of every relation schema of the flavor's presentation on
/// `n` strands.
///
/// Order: symmetric-group relations, braid relations, then mixed relations.
/// In `Br`, `VB`, `BP` and `SG` the cancellation `σ_i σ_i^{-1} = 1` is a
/// group axiom handled by free reduction, so it is not listed; the monoid
/// `SB` lists it explicitly.
pub fn relators(flavor: Flavor, n: usize) -> Result<Presentation, WordError> {
    if n < 2 {
        return Err(WordError::TooFewStrands(n));
    }
    let mut b = Builder {
        flavor,
        n,
        out: Vec::new(),
    };
    match flavor {
        Flavor::Br => b.classical(),
        Flavor::Sym => b.symmetric(),
        Flavor::VB => {
            b.symmetric();
            b.classical();
            b.virtual_mixed();
        }
        Flavor::BP => {
            b.symmetric();
            b.classical();
            b.virtual_mixed();
            b.welded_mixed();
        }
        Flavor::SB | Flavor::SG => b.singular(),
    }
    Ok(Presentation {
        flavor,
        n,
        relators: b.out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(p: &Presentation, lhs: &str, rhs: &str) -> bool {
        let l = GroupWord::parse(lhs, p.flavor, p.n).unwrap();
        let r = GroupWord::parse(rhs, p.flavor, p.n).unwrap();
        p.relators.iter().any(|rel| rel.lhs == l && rel.rhs == r)
    }

    #[test]
    fn virtual_braid_relators() {
        let p = relators(Flavor::VB, 3).unwrap();
        assert!(has(&p, "z1 z2 s1", "s2 z1 z2"));
        assert!(!has(&p, "s1 s2 z1", "z2 s1 s2"));
        assert!(!has(&p, "z2 s1 s2", "s1 s2 z1"));
        assert!(has(&p, "s1 s2 s1", "s2 s1 s2"));
        assert!(has(&p, "z1 z1", ""));
    }

    #[test]
    fn braid_permutation_relators() {
        let p = relators(Flavor::BP, 3).unwrap();
        assert!(has(&p, "s1 s2 z1", "z2 s1 s2"));
        assert!(has(&p, "z1 z2 s1", "s2 z1 z2"));
    }

    #[test]
    fn singular_relators() {
        let p = relators(Flavor::SB, 4).unwrap();
        assert!(has(&p, "s1 s2 a1", "a2 s1 s2"));
        assert!(has(&p, "s2 s1 a2", "a1 s2 s1"));
        assert!(has(&p, "a1 s1", "s1 a1"));
        assert!(has(&p, "a1 s3", "s3 a1"));
        assert!(!has(&p, "a1 s2", "s2 a1"));
        assert!(has(&p, "a1 a3", "a3 a1"));
        assert!(has(&p, "s1 s1^-1", ""));
        assert!(has(&p, "s1^-1 s1", ""));
    }

    #[test]
    fn schema_counts() {
        for n in 2..=8usize {
            let far = (n - 2) * n.saturating_sub(3) / 2;
            let sym = (n - 1) + far + (n - 2);
            let br = far + (n - 2);
            let mixed = (n - 2) * n.saturating_sub(3) + (n - 2);
            assert_eq!(relators(Flavor::Sym, n).unwrap().relators.len(), sym);
            assert_eq!(relators(Flavor::Br, n).unwrap().relators.len(), br);
            assert_eq!(
                relators(Flavor::VB, n).unwrap().relators.len(),
                sym + br + mixed
            );
            assert_eq!(
                relators(Flavor::BP, n).unwrap().relators.len(),
                sym + br + mixed + (n - 2)
            );
            let a_sigma = (n - 1) * (n - 1) - 2 * (n - 2);
            let sb = 2 * far + a_sigma + (n - 2) + 2 * (n - 2) + 2 * (n - 1);
            assert_eq!(relators(Flavor::SB, n).unwrap().relators.len(), sb);
            let vb = relators(Flavor::VB, n).unwrap();
            let count = |prefix: &str| {
                vb.relators
                    .iter()
                    .filter(|r| r.name.starts_with(prefix))
                    .count()
            };
            assert_eq!(count("zeta-square"), n - 1);
            assert_eq!(count("sigma-braid"), n - 2);
            assert_eq!(count("mixed-zzs"), n - 2);
        }
    }

    #[test]
    fn relator_sides_are_valid_words() {
        for flavor in Flavor::ALL {
            for n in 2..=7 {
                for r in relators(flavor, n).unwrap().relators {
                    for side in [&r.lhs, &r.rhs] {
                        assert_eq!(
                            GroupWord::new(flavor, n, side.letters().iter().copied()).as_ref(),
                            Ok(side)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn too_few_strands() {
        assert_eq!(relators(Flavor::VB, 1), Err(WordError::TooFewStrands(1)));
    }

    #[test]
    fn ids_are_unique() {
        let p = relators(Flavor::BP, 6).unwrap();
        let mut ids: Vec<String> = p.relators.iter().map(|r| r.id()).collect();
        assert_eq!(ids[0], "BP6:zeta-square(1)");
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), p.relators.len());
    }
}
