use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::symbolic::{GeneratorSet, NCPolynomial, Scalar, Word};

use super::{MonomialOrder, PresentedAlgebra, RewriteError};

type Terms = BTreeMap<Word, Scalar>;

/// `lead -> tail`, read as the identity `lead = tail` in the quotient.
#[derive(Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Word,
    pub tail: NCPolynomial,
}

impl RewriteRule {
    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RewriteRule, &'a GeneratorSet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{} -> {}", self.0.lead.display(self.1), self.0.tail)
            }
        }
        D(self, gens)
    }
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lead.display(self.tail.gens()), self.tail)
    }
}

/// Oriented relations with memoized normal forms.
///
/// Reduction rewrites the leftmost occurrence of a leading word. The
/// orientation need not come from a well-order, so the one-step graph may
/// contain cycles; strongly connected components of that graph are resolved
/// by solving the linear system the rewrite steps impose.
pub struct RewriteSystem {
    gens: Arc<GeneratorSet>,
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
    by_lead: HashMap<Vec<u8>, usize>,
    lead_lengths: Vec<usize>,
    memo: Mutex<HashMap<Word, Arc<Terms>>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem {
            gens: Arc::clone(&self.gens),
            order: self.order,
            rules: self.rules.clone(),
            by_lead: self.by_lead.clone(),
            lead_lengths: self.lead_lengths.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("order", &self.order)
            .field("rules", &self.rules)
            .finish()
    }
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.order == other.order && self.rules == other.rules
    }
}

impl RewriteSystem {
    /// Orients every relation as `lead -> lead - r / lc(r)` under the algebra's order.
    pub fn build(alg: &PresentedAlgebra) -> Result<Self, RewriteError> {
        let gens = Arc::clone(alg.gens());
        let order = alg.order;
        let mut rules: Vec<(usize, RewriteRule)> = Vec::new();
        for (i, r) in alg.relations().iter().enumerate() {
            let (lead, lc) = r
                .iter()
                .max_by(|a, b| order.compare(a.0, b.0))
                .map(|(w, c)| (w.clone(), c.clone()))
                .ok_or(RewriteError::ZeroRelation(i))?;
            if let Some((j, _)) = rules.iter().find(|(_, rule)| rule.lead == lead) {
                return Err(RewriteError::DuplicateLead {
                    lead: lead.display(&gens).to_string(),
                    first: *j,
                    second: i,
                });
            }
            let inv = lc.inv().expect("leading coefficient is nonzero");
            let mut tail = NCPolynomial::from_word(&gens, lead.clone());
            tail.add_scaled(r, &-inv);
            rules.push((i, RewriteRule { lead, tail }));
        }
        let mut rules: Vec<RewriteRule> = rules.into_iter().map(|(_, r)| r).collect();
        rules.sort_by(|a, b| order.compare(&a.lead, &b.lead));
        Ok(Self::from_rules(gens, order, rules))
    }

    pub(crate) fn from_rules(gens: Arc<GeneratorSet>, order: MonomialOrder, rules: Vec<RewriteRule>) -> Self {
        let by_lead = rules
            .iter()
            .enumerate()
            .map(|(i, r)| (r.lead.letters().to_vec(), i))
            .collect();
        let mut lead_lengths: Vec<usize> = rules.iter().map(|r| r.lead.len()).collect();
        lead_lengths.sort_unstable();
        lead_lengths.dedup();
        RewriteSystem {
            gens,
            order,
            rules,
            by_lead,
            lead_lengths,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn max_rule_degree(&self) -> u32 {
        self.rules.iter().map(|r| r.lead.degree()).max().unwrap_or(0)
    }

    /// All `(position, rule index)` pairs where a leading word occurs in `w`,
    /// sorted by position and then by lead length.
    pub fn occurrences(&self, w: &Word) -> Vec<(usize, usize)> {
        let letters = w.letters();
        let mut out = Vec::new();
        for pos in 0..letters.len() {
            for &len in &self.lead_lengths {
                if pos + len > letters.len() {
                    break;
                }
                if let Some(&r) = self.by_lead.get(&letters[pos..pos + len]) {
                    out.push((pos, r));
                }
            }
        }
        out
    }

    fn leftmost(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            for &len in &self.lead_lengths {
                if pos + len > letters.len() {
                    break;
                }
                if let Some(&r) = self.by_lead.get(&letters[pos..pos + len]) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.leftmost(w).is_none()
    }

    /// Whether `w` ends in a leading word. For words whose proper prefixes
    /// are irreducible this decides irreducibility.
    pub(crate) fn has_lead_suffix(&self, letters: &[u8]) -> bool {
        self.lead_lengths.iter().any(|&len| {
            len <= letters.len() && self.by_lead.contains_key(&letters[letters.len() - len..])
        })
    }

    /// One rewrite of `w` at `(pos, rule)`.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: usize) -> Terms {
        let r = &self.rules[rule];
        let end = pos + r.lead.len();
        let mut out = Terms::new();
        for (t, c) in r.tail.iter() {
            let nw = w.splice(pos, end, t, &self.gens);
            let e = out.entry(nw).or_default();
            *e += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Normal form: the unique combination of irreducible words reachable
    /// by leftmost rewriting.
    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial, RewriteError> {
        if !p.is_over(&self.gens) {
            return Err(RewriteError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch));
        }
        let mut out = NCPolynomial::zero(&self.gens);
        for (w, c) in p.iter() {
            let nf = self.word_normal_form(w)?;
            for (u, k) in nf.iter() {
                out.add_term(u.clone(), &(k * c));
            }
        }
        Ok(out)
    }

    pub fn word_normal_form(&self, w: &Word) -> Result<Arc<Terms>, RewriteError> {
        if self.is_irreducible(w) {
            return Ok(Arc::new(Terms::from([(w.clone(), Scalar::one())])));
        }
        let mut memo = self.memo.lock().expect("normal-form memo poisoned");
        if let Some(t) = memo.get(w) {
            return Ok(Arc::clone(t));
        }
        Tarjan::new(self, &mut memo).run(w)?;
        Ok(Arc::clone(memo.get(w).expect("resolved by traversal")))
    }

    /// Rewrites with caller-chosen redexes until no lead remains or
    /// `max_steps` rewrites have been made. `choose(n)` must return an index below `n`;
    /// it is asked first for a reducible term, then for an occurrence inside it.
    pub fn reduce_with_strategy(
        &self,
        p: &NCPolynomial,
        choose: &mut dyn FnMut(usize) -> usize,
        max_steps: usize,
    ) -> Option<NCPolynomial> {
        let mut cur = p.clone();
        for _ in 0..=max_steps {
            let reducible: Vec<(Word, Vec<(usize, usize)>)> = cur
                .iter()
                .filter_map(|(w, _)| {
                    let occ = self.occurrences(w);
                    (!occ.is_empty()).then(|| (w.clone(), occ))
                })
                .collect();
            if reducible.is_empty() {
                return Some(cur);
            }
            let (w, occ) = &reducible[choose(reducible.len()) % reducible.len()];
            let (pos, rule) = occ[choose(occ.len()) % occ.len()];
            let c = cur.coeff(w);
            cur.add_term(w.clone(), &-c.clone());
            for (u, k) in self.rewrite_at(w, pos, rule) {
                cur.add_term(u, &(&k * &c));
            }
        }
        None
    }
}

/// Iterative Tarjan over the leftmost-rewrite graph of a single degree.
struct Tarjan<'a> {
    rs: &'a RewriteSystem,
    memo: &'a mut HashMap<Word, Arc<Terms>>,
    index: HashMap<Word, usize>,
    low: HashMap<Word, usize>,
    on_stack: HashSet<Word>,
    stack: Vec<Word>,
    edges: HashMap<Word, Terms>,
    counter: usize,
}

impl<'a> Tarjan<'a> {
    fn new(rs: &'a RewriteSystem, memo: &'a mut HashMap<Word, Arc<Terms>>) -> Self {
        Tarjan {
            rs,
            memo,
            index: HashMap::new(),
            low: HashMap::new(),
            on_stack: HashSet::new(),
            stack: Vec::new(),
            edges: HashMap::new(),
            counter: 0,
        }
    }

    fn resolved(&self, w: &Word) -> bool {
        self.memo.contains_key(w) || self.rs.is_irreducible(w)
    }

    fn value(&self, w: &Word) -> Arc<Terms> {
        match self.memo.get(w) {
            Some(t) => Arc::clone(t),
            None => Arc::new(Terms::from([(w.clone(), Scalar::one())])),
        }
    }

    fn visit(&mut self, w: &Word) -> Vec<Word> {
        self.index.insert(w.clone(), self.counter);
        self.low.insert(w.clone(), self.counter);
        self.counter += 1;
        self.stack.push(w.clone());
        self.on_stack.insert(w.clone());
        let (pos, rule) = self.rs.leftmost(w).expect("reducible");
        let succ = self.rs.rewrite_at(w, pos, rule);
        let next: Vec<Word> = succ.keys().cloned().collect();
        self.edges.insert(w.clone(), succ);
        next
    }

    fn run(&mut self, root: &Word) -> Result<(), RewriteError> {
        let first = self.visit(root);
        let mut frames: Vec<(Word, Vec<Word>, usize)> = vec![(root.clone(), first, 0)];
        while let Some(frame) = frames.last_mut() {
            if frame.2 < frame.1.len() {
                let v = frame.1[frame.2].clone();
                frame.2 += 1;
                let u = frame.0.clone();
                if self.resolved(&v) {
                    continue;
                }
                if !self.index.contains_key(&v) {
                    let next = self.visit(&v);
                    frames.push((v, next, 0));
                } else if self.on_stack.contains(&v) {
                    let lv = self.index[&v];
                    let lu = self.low.get_mut(&u).expect("visited");
                    *lu = (*lu).min(lv);
                }
                continue;
            }
            let (u, _, _) = frames.pop().expect("nonempty");
            if let Some((parent, _, _)) = frames.last() {
                let lu = self.low[&u];
                let lp = self.low.get_mut(parent).expect("visited");
                *lp = (*lp).min(lu);
            }
            if self.low[&u] == self.index[&u] {
                let mut comp = Vec::new();
                loop {
                    let x = self.stack.pop().expect("component member");
                    self.on_stack.remove(&x);
                    let done = x == u;
                    comp.push(x);
                    if done {
                        break;
                    }
                }
                self.resolve_component(comp)?;
            }
        }
        Ok(())
    }

    fn resolve_component(&mut self, comp: Vec<Word>) -> Result<(), RewriteError> {
        let members: HashMap<Word, usize> = comp.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let cyclic = comp.len() > 1 || self.edges[&comp[0]].contains_key(&comp[0]);
        if !cyclic {
            let w = &comp[0];
            let mut acc = Terms::new();
            for (v, c) in &self.edges[w] {
                add_into(&mut acc, &self.value(v), c);
            }
            self.memo.insert(w.clone(), Arc::new(acc));
            return Ok(());
        }
        // Each member u satisfies u - sum_{v in comp} c_uv v = sum_{v outside} c_uv NF(v).
        let m = comp.len();
        let mut rows: Vec<(Vec<Scalar>, Terms)> = Vec::with_capacity(m);
        for u in &comp {
            let mut coeffs = vec![Scalar::zero(); m];
            coeffs[members[u]] = Scalar::one();
            let mut rhs = Terms::new();
            for (v, c) in &self.edges[u] {
                match members.get(v) {
                    Some(&j) => coeffs[j] -= c,
                    None => add_into(&mut rhs, &self.value(v), c),
                }
            }
            rows.push((coeffs, rhs));
        }
        for col in 0..m {
            let Some(p) = (col..m).find(|&r| !rows[r].0[col].is_zero()) else {
                return Err(RewriteError::Divergent(comp[col].display(&self.rs.gens).to_string()));
            };
            rows.swap(col, p);
            let inv = rows[col].0[col].inv().expect("nonzero pivot");
            let (coeffs, rhs) = &mut rows[col];
            for c in coeffs.iter_mut() {
                *c *= &inv;
            }
            for c in rhs.values_mut() {
                *c *= &inv;
            }
            let pivot = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row.0[col].is_zero() {
                    continue;
                }
                let f = row.0[col].clone();
                for (k, c) in pivot.0.iter().enumerate() {
                    row.0[k] -= &(c * &f);
                }
                add_into(&mut row.1, &pivot.1, &-f);
            }
        }
        for (u, (_, rhs)) in comp.iter().zip(rows) {
            self.memo.insert(u.clone(), Arc::new(rhs));
        }
        Ok(())
    }
}

fn add_into(acc: &mut Terms, src: &Terms, c: &Scalar) {
    for (w, k) in src {
        let e = acc.entry(w.clone()).or_default();
        *e += &(k * c);
        if e.is_zero() {
            acc.remove(w);
        }
    }
}
