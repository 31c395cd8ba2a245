use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{GeneratorSet, Scalar, SymbolicError, Word};

/// Homogeneity of a polynomial with respect to total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

/// Exact linear combination of words in the free algebra over `gens`.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    gens: Arc<GeneratorSet>,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPolynomial {
    pub fn zero(gens: &Arc<GeneratorSet>) -> Self {
        NCPolynomial {
            gens: Arc::clone(gens),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(gens: &Arc<GeneratorSet>, c: Scalar) -> Self {
        Self::monomial(gens, Word::empty(), c)
    }

    pub fn one(gens: &Arc<GeneratorSet>) -> Self {
        Self::constant(gens, Scalar::one())
    }

    pub fn monomial(gens: &Arc<GeneratorSet>, word: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        NCPolynomial {
            gens: Arc::clone(gens),
            terms,
        }
    }

    pub fn from_word(gens: &Arc<GeneratorSet>, word: Word) -> Self {
        Self::monomial(gens, word, Scalar::one())
    }

    pub fn generator(gens: &Arc<GeneratorSet>, i: usize) -> Self {
        Self::from_word(gens, gens.generator(i))
    }

    /// Sums repeated words and drops zero coefficients.
    pub fn from_terms(gens: &Arc<GeneratorSet>, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Self::zero(gens);
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word in deglex order.
    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn same_gens(&self, other: &Self) -> bool {
        self.is_over(&other.gens)
    }

    pub fn is_over(&self, gens: &Arc<GeneratorSet>) -> bool {
        Arc::ptr_eq(&self.gens, gens) || self.gens == *gens
    }

    fn check_gens(&self, other: &Self) -> Result<(), SymbolicError> {
        if self.same_gens(other) {
            Ok(())
        } else {
            Err(SymbolicError::GeneratorMismatch)
        }
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, k) in &other.terms {
            self.add_term(w.clone(), &(k * c));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymbolicError> {
        self.check_gens(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SymbolicError> {
        self.check_gens(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.gens);
        }
        NCPolynomial {
            gens: Arc::clone(&self.gens),
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Free-algebra product.
    pub fn mul(&self, other: &Self) -> Result<Self, SymbolicError> {
        self.check_gens(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.gens);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), &(ca * cb));
            }
        }
        out
    }

    pub fn mul_word_left(&self, w: &Word) -> Self {
        NCPolynomial {
            gens: Arc::clone(&self.gens),
            terms: self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect(),
        }
    }

    pub fn mul_word_right(&self, w: &Word) -> Self {
        NCPolynomial {
            gens: Arc::clone(&self.gens),
            terms: self.terms.iter().map(|(u, c)| (u.concat(w), c.clone())).collect(),
        }
    }

    /// Applies the algebra endomorphism `x_i -> scales[i] * x_i`.
    pub fn apply_diagonal_map(&self, scales: &[Scalar]) -> Result<Self, SymbolicError> {
        if scales.len() != self.gens.len() {
            return Err(SymbolicError::ScaleCount {
                expected: self.gens.len(),
                got: scales.len(),
            });
        }
        if let Some(i) = scales.iter().position(Scalar::is_zero) {
            return Err(SymbolicError::ZeroScale(i));
        }
        Ok(self.apply_diagonal_unchecked(scales))
    }

    pub(crate) fn apply_diagonal_unchecked(&self, scales: &[Scalar]) -> Self {
        NCPolynomial {
            gens: Arc::clone(&self.gens),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * &word_scale(w, scales)))
                .collect(),
        }
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// Sum of the components of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        NCPolynomial {
            gens: Arc::clone(&self.gens),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Product of `scales[l]` over the letters of `w`.
pub fn word_scale(w: &Word, scales: &[Scalar]) -> Scalar {
    let mut acc = Scalar::one();
    for &l in w.letters() {
        acc *= &scales[l as usize];
    }
    acc
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", w.display(&self.gens))?;
            } else {
                write!(f, "{mag}*{}", w.display(&self.gens))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens5() -> Arc<GeneratorSet> {
        Arc::new(GeneratorSet::new(["x1", "x2", "x3", "x4", "x5"]).unwrap())
    }

    fn gen(g: &Arc<GeneratorSet>, i: usize) -> NCPolynomial {
        NCPolynomial::generator(g, i)
    }

    #[test]
    fn single_word_product() {
        let g = gens5();
        let p = gen(&g, 1).mul(&gen(&g, 0)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&g.word(&[1, 0]).unwrap()), Scalar::one());
    }

    #[test]
    fn distributes() {
        let g = gens5();
        let s = gen(&g, 0).add(&gen(&g, 1)).unwrap();
        let p = s.mul(&gen(&g, 0)).unwrap();
        let expected = NCPolynomial::from_terms(
            &g,
            [(g.word(&[0, 0]).unwrap(), Scalar::one()), (g.word(&[1, 0]).unwrap(), Scalar::one())],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn scalar_factors_cancel() {
        let g = gens5();
        let a = gen(&g, 0).scale(&Scalar::from_frac(1, 2));
        let b = gen(&g, 1).scale(&Scalar::from_int(2));
        assert_eq!(a.mul(&b).unwrap(), NCPolynomial::from_word(&g, g.word(&[0, 1]).unwrap()));
    }

    #[test]
    fn mismatched_generators_rejected() {
        let g = gens5();
        let h = Arc::new(GeneratorSet::new(["x", "y"]).unwrap());
        assert_eq!(
            gen(&g, 0).mul(&NCPolynomial::generator(&h, 0)),
            Err(SymbolicError::GeneratorMismatch)
        );
    }

    #[test]
    fn diagonal_map_examples() {
        let g = gens5();
        let minus = vec![-Scalar::one(); 5];
        let x1x2 = NCPolynomial::from_word(&g, g.word(&[0, 1]).unwrap());
        assert_eq!(x1x2.apply_diagonal_map(&minus).unwrap(), x1x2);
        assert_eq!(gen(&g, 4).apply_diagonal_map(&minus).unwrap(), gen(&g, 4).neg());
        let ones = vec![Scalar::one(); 5];
        assert_eq!(x1x2.apply_diagonal_map(&ones).unwrap(), x1x2);
        let mut bad = ones.clone();
        bad[3] = Scalar::zero();
        assert_eq!(x1x2.apply_diagonal_map(&bad), Err(SymbolicError::ZeroScale(3)));
    }

    #[test]
    fn homogeneity_query() {
        let g = gens5();
        assert_eq!(NCPolynomial::zero(&g).homogeneity(), Homogeneity::Zero);
        assert_eq!(gen(&g, 0).homogeneity(), Homogeneity::Degree(1));
        let mixed = gen(&g, 0).add(&NCPolynomial::one(&g)).unwrap();
        assert_eq!(mixed.homogeneity(), Homogeneity::Mixed);
    }

    #[test]
    fn display_is_deglex() {
        let g = gens5();
        let p = NCPolynomial::from_terms(
            &g,
            [
                (g.word(&[4, 4]).unwrap(), -Scalar::one()),
                (g.word(&[1, 0]).unwrap(), Scalar::one()),
                (g.word(&[0, 1]).unwrap(), Scalar::one()),
            ],
        );
        assert_eq!(p.to_string(), "x1*x2 + x2*x1 - x5^2");
        assert_eq!(NCPolynomial::zero(&g).to_string(), "0");
        assert_eq!(NCPolynomial::constant(&g, Scalar::from_frac(-3, 2)).to_string(), "-3/2");
    }
}
