use crate::symbolic::{NCPolynomial, Word};

use super::{RewriteError, RewriteSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// A proper suffix of one lead is a prefix of another.
    Overlap,
    /// One lead occurs inside another.
    Inclusion,
}

/// One ambiguity, reduced both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCPolynomial,
    pub right: NCPolynomial,
    pub resolved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub max_degree: u32,
    pub ambiguities: Vec<Ambiguity>,
    pub all_resolved: bool,
}

impl ConfluenceReport {
    pub fn first_unresolved(&self) -> Option<&Ambiguity> {
        self.ambiguities.iter().find(|a| !a.resolved)
    }

    pub fn unresolved_count(&self) -> usize {
        self.ambiguities.iter().filter(|a| !a.resolved).count()
    }
}

impl RewriteSystem {
    /// Reduces every overlap and inclusion ambiguity of degree at most
    /// `max_degree` along both rules and compares normal forms.
    pub fn check_confluence(&self, max_degree: u32) -> Result<ConfluenceReport, RewriteError> {
        let gens = self.gens();
        let rules = self.rules();
        let mut ambiguities = Vec::new();
        for (a, ra) in rules.iter().enumerate() {
            for (b, rb) in rules.iter().enumerate() {
                let la = ra.lead.letters();
                let lb = rb.lead.letters();
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] != lb[..k] {
                        continue;
                    }
                    let rest = rb.lead.slice(k, lb.len(), gens);
                    let word = ra.lead.concat(&rest);
                    if word.degree() > max_degree {
                        continue;
                    }
                    let head = ra.lead.slice(0, la.len() - k, gens);
                    let left = ra.tail.mul_word_right(&rest);
                    let right = rb.tail.mul_word_left(&head);
                    ambiguities.push(self.resolve(AmbiguityKind::Overlap, word, (a, b), &left, &right)?);
                }
                if a != b && lb.len() < la.len() {
                    for pos in 0..=la.len() - lb.len() {
                        if !ra.lead.contains_at(pos, &rb.lead) {
                            continue;
                        }
                        if ra.lead.degree() > max_degree {
                            continue;
                        }
                        let head = ra.lead.slice(0, pos, gens);
                        let tail = ra.lead.slice(pos + lb.len(), la.len(), gens);
                        let left = ra.tail.clone();
                        let right = rb.tail.mul_word_left(&head).mul_word_right(&tail);
                        ambiguities.push(self.resolve(
                            AmbiguityKind::Inclusion,
                            ra.lead.clone(),
                            (a, b),
                            &left,
                            &right,
                        )?);
                    }
                }
            }
        }
        let all_resolved = ambiguities.iter().all(|a| a.resolved);
        Ok(ConfluenceReport {
            max_degree,
            ambiguities,
            all_resolved,
        })
    }

    fn resolve(
        &self,
        kind: AmbiguityKind,
        word: Word,
        rules: (usize, usize),
        left: &NCPolynomial,
        right: &NCPolynomial,
    ) -> Result<Ambiguity, RewriteError> {
        let left = self.normal_form(left)?;
        let right = self.normal_form(right)?;
        let resolved = left == right;
        Ok(Ambiguity {
            kind,
            word,
            rules,
            left,
            right,
            resolved,
        })
    }
}
