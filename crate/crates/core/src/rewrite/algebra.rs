use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::symbolic::{GeneratorSet, Homogeneity, NCPolynomial, Word};

use super::RewriteError;

/// Order used to pick the leading word of each relation.
///
/// Both orders compare total degree first and break final ties
/// lexicographically with larger generator index = larger letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Degree, then lexicographic.
    #[default]
    Deglex,
    /// Degree, then number of inversions, then lexicographic. Orients
    /// quadratic relations of PBW type so that every descent `x_j x_i`
    /// (`j > i`) is a leading word even when a square also appears.
    DegInvLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Word, b: &Word) -> Ordering {
        match self {
            MonomialOrder::Deglex => a.cmp(b),
            MonomialOrder::DegInvLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.inversions().cmp(&b.inversions()))
                .then_with(|| a.letters().cmp(b.letters())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Deglex => "deglex",
            MonomialOrder::DegInvLex => "deginvlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "deglex" => Ok(MonomialOrder::Deglex),
            "deginvlex" => Ok(MonomialOrder::DegInvLex),
            other => Err(format!("unknown monomial order `{other}` (expected deglex or deginvlex)")),
        }
    }
}

/// Free algebra modulo homogeneous relations, plus descriptive metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedAlgebra {
    pub name: String,
    gens: Arc<GeneratorSet>,
    relations: Vec<NCPolynomial>,
    pub declared_gkdim: Option<u32>,
    pub order: MonomialOrder,
    /// Published smoothness claim about this algebra, echoed by reports when a check disagrees.
    pub claim: Option<String>,
    /// Compare the engine's partial derivatives with the alternating-sign closed form.
    pub closed_form_partials: bool,
}

impl PresentedAlgebra {
    pub fn new(
        name: impl Into<String>,
        gens: Arc<GeneratorSet>,
        relations: Vec<NCPolynomial>,
        declared_gkdim: Option<u32>,
        order: MonomialOrder,
    ) -> Result<Self, RewriteError> {
        for (i, r) in relations.iter().enumerate() {
            if !r.is_over(&gens) {
                return Err(RewriteError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch));
            }
            match r.homogeneity() {
                Homogeneity::Zero => return Err(RewriteError::ZeroRelation(i)),
                Homogeneity::Mixed => return Err(RewriteError::Inhomogeneous(i)),
                Homogeneity::Degree(_) => {}
            }
        }
        Ok(PresentedAlgebra {
            name: name.into(),
            gens,
            relations,
            declared_gkdim,
            order,
            claim: None,
            closed_form_partials: false,
        })
    }

    pub fn with_claim(mut self, claim: impl Into<String>) -> Self {
        self.claim = Some(claim.into());
        self
    }

    pub fn with_closed_form_partials(mut self, on: bool) -> Self {
        self.closed_form_partials = on;
        self
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn relations(&self) -> &[NCPolynomial] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }
}
