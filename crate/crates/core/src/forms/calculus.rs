use std::sync::Arc;

use crate::rewrite::RewriteSystem;
use crate::symbolic::{word_scale, GeneratorSet, NCPolynomial, Scalar, Word};

use super::{CalculusSpec, DifferentialForm, FormsError, Subset};

/// A relation `r` and generator `i` with `NF(ν_i(r)) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFailure {
    pub generator: usize,
    pub relation: usize,
    pub residue: NCPolynomial,
}

/// Every generator/relation pair whose twisted image leaves the ideal.
pub fn validate_twist(spec: &CalculusSpec) -> Result<Vec<TwistFailure>, FormsError> {
    Calculus::new(spec.clone())?.validate_twist()
}

/// A calculus spec paired with the rewrite system of its algebra.
#[derive(Debug, Clone)]
pub struct Calculus {
    spec: CalculusSpec,
    rs: RewriteSystem,
}

impl Calculus {
    pub fn new(spec: CalculusSpec) -> Result<Self, FormsError> {
        let rs = RewriteSystem::build(&spec.algebra)?;
        Ok(Calculus { spec, rs })
    }

    pub fn spec(&self) -> &CalculusSpec {
        &self.spec
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        self.rs.gens()
    }

    pub fn n(&self) -> usize {
        self.spec.num_generators()
    }

    pub fn nf(&self, p: &NCPolynomial) -> Result<NCPolynomial, FormsError> {
        Ok(self.rs.normal_form(p)?)
    }

    pub fn validate_twist(&self) -> Result<Vec<TwistFailure>, FormsError> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for (k, r) in self.spec.algebra.relations().iter().enumerate() {
                let residue = self.nf(&r.apply_diagonal_unchecked(self.spec.twist.row(i)))?;
                if !residue.is_zero() {
                    out.push(TwistFailure {
                        generator: i,
                        relation: k,
                        residue,
                    });
                }
            }
        }
        Ok(out)
    }

    fn check_subset(&self, s: Subset) -> Result<(), FormsError> {
        if s.is_within(self.n()) {
            Ok(())
        } else {
            Err(FormsError::InvalidSubset(format!(
                "{:?} is not inside {} generators",
                s.elements(),
                self.n()
            )))
        }
    }

    fn check_form(&self, w: &DifferentialForm) -> Result<(), FormsError> {
        if Arc::ptr_eq(w.gens(), self.gens()) || **w.gens() == **self.gens() {
            Ok(())
        } else {
            Err(FormsError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch))
        }
    }

    /// Per-letter scales of `ν_S`.
    pub fn transport_scales(&self, s: Subset) -> Vec<Scalar> {
        let twist = &self.spec.twist;
        (0..self.n())
            .map(|l| {
                let mut acc = Scalar::one();
                for i in s.elements() {
                    acc *= twist.get(i, l);
                }
                acc
            })
            .collect()
    }

    /// `ν_S(a)`, so that `a * dx_S = dx_S * ν_S(a)`.
    pub fn transport(&self, a: &NCPolynomial, s: Subset) -> Result<NCPolynomial, FormsError> {
        self.check_subset(s)?;
        if !a.is_over(self.gens()) {
            return Err(FormsError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch));
        }
        Ok(a.apply_diagonal_unchecked(&self.transport_scales(s)))
    }

    /// Scalar `r` with `dx_S ^ dx_T = r * dx_{S ∪ T}` for disjoint `S`, `T`.
    pub fn reorder_factor(&self, s: Subset, t: Subset) -> Scalar {
        let mut acc = Scalar::one();
        for a in s.elements() {
            for b in t.elements() {
                if a > b {
                    acc *= self.spec.wedge.get(a, b);
                }
            }
        }
        acc
    }

    /// The grade-0 form `NF(a)`.
    pub fn function(&self, a: &NCPolynomial) -> Result<DifferentialForm, FormsError> {
        Ok(DifferentialForm::function(self.nf(a)?))
    }

    /// `dx_S * NF(a)`.
    pub fn basis_form(&self, s: Subset, a: &NCPolynomial) -> Result<DifferentialForm, FormsError> {
        self.check_subset(s)?;
        Ok(DifferentialForm::basis(s, self.nf(a)?))
    }

    /// `dx_1 ^ .. ^ dx_n`.
    pub fn volume_form(&self) -> DifferentialForm {
        DifferentialForm::basis(Subset::full(self.n()), NCPolynomial::one(self.gens()))
    }

    pub fn wedge(&self, w: &DifferentialForm, e: &DifferentialForm) -> Result<DifferentialForm, FormsError> {
        self.check_form(w)?;
        self.check_form(e)?;
        let mut out = DifferentialForm::zero(self.gens(), w.grade() + e.grade());
        for (s, a) in w.coeffs() {
            for (t, b) in e.coeffs() {
                if !s.is_disjoint(*t) {
                    continue;
                }
                let moved = self.transport(a, *t)?.mul_unchecked(b);
                let coeff = self.nf(&moved)?.scale(&self.reorder_factor(*s, *t));
                out.add_basis(s.union(*t), &coeff);
            }
        }
        Ok(out)
    }

    /// `a * ω`, with `a` moved to the right of every `dx_S`.
    pub fn left_mul(&self, a: &NCPolynomial, w: &DifferentialForm) -> Result<DifferentialForm, FormsError> {
        self.check_form(w)?;
        let mut out = DifferentialForm::zero(self.gens(), w.grade());
        for (s, b) in w.coeffs() {
            let moved = self.transport(a, *s)?.mul_unchecked(b);
            out.add_basis(*s, &self.nf(&moved)?);
        }
        Ok(out)
    }

    /// `ω * a`.
    pub fn right_mul(&self, w: &DifferentialForm, a: &NCPolynomial) -> Result<DifferentialForm, FormsError> {
        self.check_form(w)?;
        if !a.is_over(self.gens()) {
            return Err(FormsError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch));
        }
        let mut out = DifferentialForm::zero(self.gens(), w.grade());
        for (s, b) in w.coeffs() {
            out.add_basis(*s, &self.nf(&b.mul_unchecked(a))?);
        }
        Ok(out)
    }

    /// `d(p)` for any polynomial in the free algebra, by the Leibniz rule
    /// word by word, with every coefficient reduced.
    pub fn d_poly(&self, p: &NCPolynomial) -> Result<DifferentialForm, FormsError> {
        if !p.is_over(self.gens()) {
            return Err(FormsError::Symbolic(crate::symbolic::SymbolicError::GeneratorMismatch));
        }
        let gens = self.gens();
        let mut acc: Vec<NCPolynomial> = vec![NCPolynomial::zero(gens); self.n()];
        for (w, c) in p.iter() {
            let letters = w.letters();
            for k in 0..letters.len() {
                let g = letters[k] as usize;
                let prefix = w.slice(0, k, gens);
                let rest: Word = prefix.concat(&w.slice(k + 1, letters.len(), gens));
                let scale = word_scale(&prefix, self.spec.twist.row(g));
                acc[g].add_term(rest, &(&scale * c));
            }
        }
        let mut out = DifferentialForm::zero(gens, 1);
        for (g, a) in acc.iter().enumerate() {
            out.add_basis(Subset::singleton(g), &self.nf(a)?);
        }
        Ok(out)
    }

    /// `d` on grade 0 by [`Calculus::d_poly`]; on grade `k`,
    /// `d(dx_S * a) = (-1)^k dx_S ^ d(a)`.
    pub fn differential(&self, w: &DifferentialForm) -> Result<DifferentialForm, FormsError> {
        self.check_form(w)?;
        if w.grade() == 0 {
            return self.d_poly(&w.coeff(Subset::empty()));
        }
        let sign = if w.grade().is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        let mut out = DifferentialForm::zero(self.gens(), w.grade() + 1);
        for (s, a) in w.coeffs() {
            let da = self.d_poly(a)?;
            for (t, b) in da.coeffs() {
                if s.is_disjoint(*t) {
                    let c = &sign * &self.reorder_factor(*s, *t);
                    out.add_basis(s.union(*t), &b.scale(&c));
                }
            }
        }
        Ok(out)
    }

    /// The right coefficients of `d(a)`: `d(a) = Σ_i dx_i * ∂_i(a)`.
    pub fn partials(&self, a: &NCPolynomial) -> Result<Vec<NCPolynomial>, FormsError> {
        let d = self.d_poly(a)?;
        Ok((0..self.n()).map(|i| d.coeff(Subset::singleton(i))).collect())
    }

    /// Coefficient of `dx_1 ^ .. ^ dx_n` in a top-grade form.
    pub fn pi_omega(&self, w: &DifferentialForm) -> Result<NCPolynomial, FormsError> {
        self.check_form(w)?;
        if w.grade() != self.n() {
            return Err(FormsError::WrongGrade {
                expected: self.n(),
                got: w.grade(),
            });
        }
        Ok(w.coeff(Subset::full(self.n())))
    }

    /// Scale of generator `j` under `ν_ω`: `Π_i λ[i][j]`.
    pub fn nu_omega(&self) -> Vec<Scalar> {
        self.transport_scales(Subset::full(self.n()))
    }

    pub fn nu_omega_inverse(&self) -> Vec<Scalar> {
        self.nu_omega()
            .iter()
            .map(|s| s.inv().expect("twist entries are nonzero"))
            .collect()
    }
}
