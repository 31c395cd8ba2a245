use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::symbolic::{GeneratorSet, NCPolynomial, Scalar};

use super::FormsError;

/// Largest generator count a form basis can index.
pub const MAX_FORM_GENERATORS: usize = 32;

/// Sorted set of generator indices labelling a basis form `dx_S`.
///
/// Ordered lexicographically by the increasing element lists, so subsets of
/// equal size sort as their element tuples do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_FORM_GENERATORS, "generator index {i} out of range");
        Subset(1 << i)
    }

    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self, FormsError> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= n || i >= MAX_FORM_GENERATORS {
                return Err(FormsError::InvalidSubset(format!("index {i} with {n} generators")));
            }
            if bits & (1 << i) != 0 {
                return Err(FormsError::InvalidSubset(format!("index {i} repeated")));
            }
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_FORM_GENERATORS);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_FORM_GENERATORS && self.0 & (1 << i) != 0
    }

    pub fn elements(self) -> Vec<usize> {
        (0..MAX_FORM_GENERATORS).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 & !self.0)
    }

    pub fn is_within(self, n: usize) -> bool {
        self.0 & !Subset::full(n).0 == 0
    }

    /// All size-`k` subsets of `{0, .., n-1}`, in order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..1u64 << n)
            .map(|b| Subset(b as u32))
            .filter(|s| s.len() == k)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(&other.elements())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Ω^grade`: a sum of `dx_S * a_S` with every `a_S` a nonzero
/// right coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    gens: Arc<GeneratorSet>,
    grade: usize,
    coeffs: BTreeMap<Subset, NCPolynomial>,
}

impl DifferentialForm {
    pub fn zero(gens: &Arc<GeneratorSet>, grade: usize) -> Self {
        DifferentialForm {
            gens: Arc::clone(gens),
            grade,
            coeffs: BTreeMap::new(),
        }
    }

    /// The grade-0 form `a`.
    pub fn function(a: NCPolynomial) -> Self {
        let mut out = Self::zero(a.gens(), 0);
        out.add_basis(Subset::empty(), &a);
        out
    }

    /// `dx_S * a`.
    pub fn basis(s: Subset, a: NCPolynomial) -> Self {
        let mut out = Self::zero(a.gens(), s.len());
        out.add_basis(s, &a);
        out
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<Subset, NCPolynomial> {
        &self.coeffs
    }

    /// Right coefficient of `dx_S`, zero when absent.
    pub fn coeff(&self, s: Subset) -> NCPolynomial {
        self.coeffs
            .get(&s)
            .cloned()
            .unwrap_or_else(|| NCPolynomial::zero(&self.gens))
    }

    /// Adds `dx_S * a`; `a` must already be in normal form.
    pub fn add_basis(&mut self, s: Subset, a: &NCPolynomial) {
        assert_eq!(s.len(), self.grade, "subset size must equal the form grade");
        if a.is_zero() {
            return;
        }
        let slot = self
            .coeffs
            .entry(s)
            .or_insert_with(|| NCPolynomial::zero(&self.gens));
        slot.add_scaled(a, &Scalar::one());
        if slot.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn add_scaled(&mut self, other: &DifferentialForm, c: &Scalar) {
        assert_eq!(self.grade, other.grade, "grades must agree");
        if c.is_zero() {
            return;
        }
        for (s, a) in &other.coeffs {
            self.add_basis(*s, &a.scale(c));
        }
    }

    pub fn add(&self, other: &DifferentialForm) -> DifferentialForm {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &DifferentialForm) -> DifferentialForm {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> DifferentialForm {
        let mut out = Self::zero(&self.gens, self.grade);
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> DifferentialForm {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, a) in &self.coeffs {
            let basis: Vec<String> = s
                .elements()
                .iter()
                .map(|&i| format!("d{}", self.gens.name(i)))
                .collect();
            let basis = basis.join("^");
            for (w, c) in a.iter() {
                let neg = c.is_negative();
                let mag = c.abs();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                first = false;
                let mut parts = Vec::new();
                if !mag.is_one() || (basis.is_empty() && w.is_empty()) {
                    parts.push(mag.to_string());
                }
                if !basis.is_empty() {
                    parts.push(basis.clone());
                }
                if !w.is_empty() {
                    parts.push(w.display(&self.gens).to_string());
                }
                write!(f, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DifferentialForm[{}]({self})", self.grade)
    }
}
