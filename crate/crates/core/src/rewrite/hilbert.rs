use std::collections::{BTreeMap, HashMap};

use crate::linalg::SparseEliminator;
use crate::symbolic::{Word, Scalar};

use super::{PresentedAlgebra, RewriteError, RewriteSystem};

/// Largest free-algebra component `ideal_quotient_dims` will build.
pub const ORACLE_WORD_LIMIT: u128 = 1_000_000;

impl RewriteSystem {
    /// Irreducible words of total degree exactly `degree`, in deglex order.
    pub fn irreducible_words(&self, degree: u32) -> Vec<Word> {
        let mut out = Vec::new();
        self.walk_irreducible(degree, &mut |w| {
            if w.degree() == degree {
                out.push(w.clone());
            }
        });
        out.sort();
        out
    }

    /// Irreducible words of every degree `0..=max_degree`, in deglex order.
    pub fn irreducible_words_up_to(&self, max_degree: u32) -> Vec<Word> {
        let mut out = Vec::new();
        self.walk_irreducible(max_degree, &mut |w| out.push(w.clone()));
        out.sort();
        out
    }

    /// Number of irreducible words in each degree `0..=max_degree`.
    ///
    /// This is the Hilbert function when the system is confluent through
    /// `max_degree`, and an upper bound on it otherwise.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        let mut counts = vec![0u64; max_degree as usize + 1];
        self.walk_irreducible(max_degree, &mut |w| counts[w.degree() as usize] += 1);
        counts
    }

    // Irreducible words are closed under prefixes, so a depth-first walk that
    // only extends irreducible prefixes visits exactly the irreducible words.
    fn walk_irreducible(&self, max_degree: u32, visit: &mut dyn FnMut(&Word)) {
        let gens = self.gens().clone();
        let mut stack = vec![Word::empty()];
        while let Some(w) = stack.pop() {
            visit(&w);
            for g in (0..gens.len()).rev() {
                if w.degree() + gens.degree(g) > max_degree {
                    continue;
                }
                let next = w.concat(&gens.generator(g));
                if !self.has_lead_suffix(next.letters()) {
                    stack.push(next);
                }
            }
        }
    }
}

/// Dimensions of the quotient in each degree `0..=max_degree`, computed by
/// exact rank of the span of all `u * r * v`. Independent of any orientation.
pub fn ideal_quotient_dims(alg: &PresentedAlgebra, max_degree: u32) -> Result<Vec<u64>, RewriteError> {
    let gens = alg.gens();
    let free = gens.free_dimensions(max_degree);
    if let Some((d, &n)) = free.iter().enumerate().find(|(_, &n)| n > ORACLE_WORD_LIMIT) {
        return Err(RewriteError::GuardExceeded {
            degree: d as u32,
            words: n,
            limit: ORACLE_WORD_LIMIT,
        });
    }
    let by_degree: Vec<Vec<Word>> = (0..=max_degree).map(|d| gens.words_of_degree(d)).collect();
    let mut dims = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let words = &by_degree[d as usize];
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut elim = SparseEliminator::new();
        for r in alg.relations() {
            let e = r.max_word().map(Word::degree).unwrap_or(0);
            if e > d {
                continue;
            }
            for a in 0..=d - e {
                for u in &by_degree[a as usize] {
                    for v in &by_degree[(d - e - a) as usize] {
                        let row: BTreeMap<usize, Scalar> = r
                            .iter()
                            .map(|(w, c)| (index[&u.concat(w).concat(v)], c.clone()))
                            .collect();
                        elim.insert(row);
                    }
                }
            }
        }
        dims.push((words.len() - elim.rank()) as u64);
    }
    Ok(dims)
}

/// Growth degree of a dimension sequence.
///
/// Returns the smallest `g` for which the order-`g` finite differences, taken
/// with step 1 or step 2, vanish on the tail (the later half, at least two
/// entries). `None` means no such `g <= len - 2` exists.
pub fn estimate_gkdim(dims: &[u64]) -> Result<Option<u32>, RewriteError> {
    const MIN_ENTRIES: usize = 6;
    if dims.len() < MIN_ENTRIES {
        return Err(RewriteError::TooFewEntries {
            got: dims.len(),
            need: MIN_ENTRIES,
        });
    }
    let seq: Vec<i128> = dims.iter().map(|&d| d as i128).collect();
    for g in 0..=(dims.len() - 2) {
        for step in [1usize, 2] {
            if let Some(diff) = iterated_difference(&seq, g, step) {
                if diff.len() < 2 {
                    continue;
                }
                let tail = (diff.len() / 2).max(2);
                if diff[diff.len() - tail..].iter().all(|&x| x == 0) {
                    return Ok(Some(g as u32));
                }
            }
        }
    }
    Ok(None)
}

fn iterated_difference(seq: &[i128], order: usize, step: usize) -> Option<Vec<i128>> {
    let mut cur = seq.to_vec();
    for _ in 0..order {
        if cur.len() <= step {
            return None;
        }
        cur = (0..cur.len() - step).map(|i| cur[i + step] - cur[i]).collect();
    }
    Some(cur)
}
