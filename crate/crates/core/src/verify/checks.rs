use std::collections::{BTreeSet, HashMap};

use crate::forms::{derive_wedge_coefficients, Calculus, CalculusSpec, DifferentialForm, FormsError, Subset};
use crate::linalg::Matrix;
use crate::rewrite::{estimate_gkdim, PresentedAlgebra, RewriteSystem, ORACLE_WORD_LIMIT};
use crate::symbolic::{NCPolynomial, Scalar, Word};

use super::CheckResult;

/// Smallest degree bound used for growth estimation.
const GK_MIN_DEGREE: u32 = 9;

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Fails iff `gkdim > num_generators`: then `Ω^m = 0` for every `m > n`.
pub fn obstruction(num_generators: usize, gkdim: Option<u32>) -> CheckResult {
    let Some(gk) = gkdim else {
        return CheckResult::info("obstruction", "GK dimension unknown: obstruction not evaluated");
    };
    let n = num_generators;
    if gk as usize > n {
        CheckResult::fail(
            "obstruction",
            format!(
                "GKdim {gk} > {n} generators: every product of more than {n} differentials has a repetition \
                 of at least one dx_i, so Omega^m(A) = 0 for m > {n} and no {gk}-dimensional calculus exists; \
                 by Theorem NoDS, A is not differentially smooth"
            ),
            "GKdim vs generators",
            format!("{gk} > {n}"),
        )
    } else {
        CheckResult::pass(
            "obstruction",
            format!("GKdim {gk} <= {n} generators: Theorem NoDS does not apply"),
        )
    }
}

/// Hilbert-function growth estimate and its consistency with the declared value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkEstimate {
    pub dims: Vec<u64>,
    /// Counts are exact dimensions (all ambiguities resolve); otherwise upper bounds.
    pub exact: bool,
    pub estimate: Option<u32>,
    pub check: CheckResult,
}

pub fn gk_estimate(alg: &PresentedAlgebra, degree_bound: u32) -> Result<GkEstimate, FormsError> {
    let rs = RewriteSystem::build(alg)?;
    let target = degree_bound.max(GK_MIN_DEGREE);
    let exact = rs.check_confluence(2 * rs.max_rule_degree().max(1))?.all_resolved;
    let mut dims = Vec::new();
    for d in 0..=target {
        let h = rs.hilbert_function(d);
        let last = *h.last().expect("nonempty");
        dims = h;
        if u128::from(last) > ORACLE_WORD_LIMIT {
            break;
        }
    }
    let estimate = estimate_gkdim(&dims).ok().flatten();
    let label = if exact { "dimensions" } else { "irreducible-word counts (upper bound only)" };
    let mut detail = match estimate {
        Some(g) => format!("estimated GK dimension {g} from {label} through degree {}", dims.len() - 1),
        None => format!("no polynomial growth detected in {label} through degree {}", dims.len() - 1),
    };
    if let (Some(decl), Some(est)) = (alg.declared_gkdim, estimate) {
        if decl != est {
            detail.push_str(&format!("; differs from declared GK dimension {decl}, which is used"));
        }
    }
    let check = CheckResult::info("gk_estimate", detail)
        .with_data("hilbert", dims.iter().map(|&d| d as i64).collect());
    Ok(GkEstimate {
        dims,
        exact,
        estimate,
        check,
    })
}

pub fn check_twist_validity(calc: &Calculus) -> Result<CheckResult, FormsError> {
    let failures = calc.validate_twist()?;
    let gens = calc.gens();
    let rels = calc.spec().algebra.relations();
    let Some(first) = failures.first() else {
        return Ok(CheckResult::pass(
            "twist_validity",
            format!("every nu_i maps all {} relations into the ideal", rels.len()),
        ));
    };
    let bad: BTreeSet<usize> = failures.iter().map(|f| f.relation + 1).collect();
    let bad: Vec<String> = bad.iter().map(|i| format!("r{i}")).collect();
    Ok(CheckResult::fail(
        "twist_validity",
        format!(
            "{} (generator, relation) pairs leave the ideal; relations affected: {}",
            failures.len(),
            bad.join(", ")
        ),
        format!("nu_{}({})", gens.name(first.generator), rels[first.relation]),
        first.residue.to_string(),
    ))
}

pub fn check_relation_compatibility(calc: &Calculus) -> Result<CheckResult, FormsError> {
    let rels = calc.spec().algebra.relations();
    for (i, r) in rels.iter().enumerate() {
        let dr = calc.d_poly(r)?;
        if !dr.is_zero() {
            return Ok(CheckResult::fail(
                "relation_compatibility",
                format!("d(r{}) does not vanish", i + 1),
                r.to_string(),
                dr.to_string(),
            ));
        }
    }
    Ok(CheckResult::pass(
        "relation_compatibility",
        format!("d(r) = 0 for all {} relations", rels.len()),
    ))
}

/// Degree bound for the higher-form part of the `d^2` check.
const D_SQUARED_FORM_DEGREE: u32 = 3;

pub fn check_d_squared(calc: &Calculus, degree_bound: u32) -> Result<CheckResult, FormsError> {
    let gens = calc.gens();
    let words = calc.rewrite().irreducible_words_up_to(degree_bound);
    let mut failures = vec![0i64; degree_bound as usize + 1];
    let mut witness: Option<(String, String)> = None;
    for w in &words {
        let a = NCPolynomial::from_word(gens, w.clone());
        let dd = calc.differential(&calc.d_poly(&a)?)?;
        if !dd.is_zero() {
            failures[w.degree() as usize] += 1;
            witness.get_or_insert_with(|| (a.to_string(), dd.to_string()));
        }
    }
    let n = calc.n();
    let mut forms_checked = 0usize;
    for k in 1..n {
        for s in Subset::all_of_size(n, k) {
            for w in words.iter().filter(|w| w.degree() <= D_SQUARED_FORM_DEGREE) {
                let form = DifferentialForm::basis(s, NCPolynomial::from_word(gens, w.clone()));
                let dd = calc.differential(&calc.differential(&form)?)?;
                forms_checked += 1;
                if !dd.is_zero() {
                    failures[w.degree() as usize] += 1;
                    witness.get_or_insert_with(|| (form.to_string(), dd.to_string()));
                }
            }
        }
    }
    let data_label = "d^2 failures per degree";
    match witness {
        Some((element, value)) => Ok(CheckResult::fail(
            "d_squared",
            format!(
                "d(d(m)) != 0 for {} basis elements up to degree {degree_bound}",
                failures.iter().sum::<i64>()
            ),
            element,
            value,
        )
        .with_data(data_label, failures)),
        None => Ok(CheckResult::pass(
            "d_squared",
            format!(
                "d(d(m)) = 0 for {} irreducible words of degree <= {degree_bound} and {forms_checked} higher forms",
                words.len()
            ),
        )
        .with_data(data_label, failures)),
    }
}

/// Kernel of `d` on each degree `1..=degree_bound` of the irreducible-word basis.
pub fn connected_kernels(calc: &Calculus, degree_bound: u32) -> Result<Vec<Vec<NCPolynomial>>, FormsError> {
    let gens = calc.gens();
    let rs = calc.rewrite();
    let mut out = Vec::new();
    for d in 1..=degree_bound {
        let basis = rs.irreducible_words(d);
        let mut rows: HashMap<(usize, Word), usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
        for (col, w) in basis.iter().enumerate() {
            let dw = calc.d_poly(&NCPolynomial::from_word(gens, w.clone()))?;
            for (s, coeff) in dw.coeffs() {
                let i = s.elements()[0];
                for (u, c) in coeff.iter() {
                    let next = rows.len();
                    let row = *rows.entry((i, u.clone())).or_insert(next);
                    entries.push((row, col, c.clone()));
                }
            }
        }
        let mut m = Matrix::zeros(rows.len(), basis.len());
        for (r, c, v) in entries {
            m.set(r, c, v);
        }
        let kernel = m
            .kernel_basis()
            .into_iter()
            .map(|v| NCPolynomial::from_terms(gens, basis.iter().cloned().zip(v)))
            .collect();
        out.push(kernel);
    }
    Ok(out)
}

pub fn check_connected(calc: &Calculus, degree_bound: u32) -> Result<CheckResult, FormsError> {
    let kernels = connected_kernels(calc, degree_bound)?;
    let dims: Vec<i64> = kernels.iter().map(|k| k.len() as i64).collect();
    let label = "kernel dimension per degree";
    match kernels.iter().position(|k| !k.is_empty()) {
        Some(i) => {
            let basis: Vec<String> = kernels[i].iter().map(ToString::to_string).collect();
            Ok(CheckResult::fail(
                "connected",
                format!(
                    "kernel of d in degree {} has dimension {}, basis {{{}}}",
                    i + 1,
                    basis.len(),
                    basis.join(", ")
                ),
                basis[0].clone(),
                "0",
            )
            .with_data(label, dims))
        }
        None => Ok(CheckResult::pass(
            "connected",
            format!("ker d is the scalars through degree {degree_bound}"),
        )
        .with_data(label, dims)),
    }
}

pub fn check_dimension_match(num_generators: usize, gkdim: Option<u32>) -> CheckResult {
    match gkdim {
        None => CheckResult::info("dimension_match", "GK dimension unknown"),
        Some(g) if g as usize == num_generators => CheckResult::pass(
            "dimension_match",
            format!("calculus dimension {num_generators} equals GK dimension {g}"),
        ),
        Some(g) => CheckResult::fail(
            "dimension_match",
            format!("calculus dimension {num_generators} differs from GK dimension {g}"),
            "calculus dimension vs GKdim",
            format!("{num_generators} != {g}"),
        ),
    }
}

/// Both decomposition identities for `ω' = dx_P * b`.
///
/// With `ω̄_Q = r(Q^c, Q)^{-1} dx_{Q^c}`, so that `ω̄_Q ^ ω_Q = ω`:
/// `ω' = Σ_{|Q|=k} ω_Q * π_ω(ω̄_Q ^ ω')` and
/// `ω' = Σ_{|R|=n-k} ν_ω^{-1}(π_ω(ω' ^ ω_R)) * ω̄_R`.
pub fn check_volume_integrability(calc: &Calculus, degree_bound: u32) -> Result<CheckResult, FormsError> {
    let n = calc.n();
    let gens = calc.gens();
    let words = calc.rewrite().irreducible_words_up_to(degree_bound);
    let nu_inv = calc.nu_omega_inverse();
    let dual = |q: Subset| -> Result<DifferentialForm, FormsError> {
        let comp = q.complement(n);
        let r = calc.reorder_factor(comp, q).inv().expect("wedge coefficients are nonzero");
        calc.basis_form(comp, &NCPolynomial::constant(gens, r))
    };
    let mut counts = Vec::new();
    for k in 1..n {
        let subsets = Subset::all_of_size(n, k);
        let cosubsets = Subset::all_of_size(n, n - k);
        let mut checked = 0i64;
        for &p in &subsets {
            for w in &words {
                let b = NCPolynomial::from_word(gens, w.clone());
                let form = DifferentialForm::basis(p, b);

                let mut first = DifferentialForm::zero(gens, k);
                for &q in &subsets {
                    let top = calc.wedge(&dual(q)?, &form)?;
                    first = first.add(&calc.basis_form(q, &calc.pi_omega(&top)?)?);
                }
                if first != form {
                    return Ok(volume_failure(1, &form, &first));
                }

                let mut second = DifferentialForm::zero(gens, k);
                for &r in &cosubsets {
                    let top = calc.wedge(&form, &DifferentialForm::basis(r, NCPolynomial::one(gens)))?;
                    let coeff = calc.pi_omega(&top)?.apply_diagonal_map(&nu_inv)?;
                    second = second.add(&calc.left_mul(&coeff, &dual(r)?)?);
                }
                if second != form {
                    return Ok(volume_failure(2, &form, &second));
                }
                checked += 1;
            }
        }
        counts.push(checked);
    }
    let detail = if n < 2 {
        "no intermediate grades: both identities hold trivially".to_string()
    } else {
        format!(
            "both decomposition identities hold for dx_P*b over all C({n},k) subsets P of each size k in 1..{} \
             and all irreducible b of degree <= {degree_bound}",
            n - 1
        )
    };
    Ok(CheckResult::pass("volume_integrability", detail).with_data("elements checked per grade", counts))
}

fn volume_failure(which: usize, form: &DifferentialForm, got: &DifferentialForm) -> CheckResult {
    CheckResult::fail(
        "volume_integrability",
        format!("decomposition identity {which} fails"),
        form.to_string(),
        got.to_string(),
    )
}

/// Engine partial derivative next to the alternating-sign closed form
/// `∂_i(x_1^{k_1}..x_n^{k_n}) = (-1)^{k_1+..+k_i} x^{k - e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRow {
    pub monomial: NCPolynomial,
    pub generator: usize,
    pub engine: NCPolynomial,
    pub closed_form: NCPolynomial,
}

impl PartialRow {
    pub fn agrees(&self) -> bool {
        self.engine == self.closed_form
    }
}

pub fn closed_form_partial_table(calc: &Calculus, max_degree: u32) -> Result<Vec<PartialRow>, FormsError> {
    let gens = calc.gens();
    let n = calc.n();
    let mut rows = Vec::new();
    for total in 1..=max_degree as usize {
        let mut exps = Vec::new();
        compositions(total, n, &mut Vec::new(), &mut exps);
        exps.sort_by_key(|e| std::cmp::Reverse(e.clone()));
        for k in exps {
            let mono = ascending_monomial(calc, &k)?;
            let engine = calc.partials(&mono)?;
            for i in 0..n {
                let closed = if k[i] == 0 {
                    NCPolynomial::zero(gens)
                } else {
                    let mut lowered = k.clone();
                    lowered[i] -= 1;
                    let sign: usize = k[..=i].iter().sum();
                    let c = if sign.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
                    ascending_monomial(calc, &lowered)?.scale(&c)
                };
                rows.push(PartialRow {
                    monomial: mono.clone(),
                    generator: i,
                    engine: engine[i].clone(),
                    closed_form: closed,
                });
            }
        }
    }
    Ok(rows)
}

fn ascending_monomial(calc: &Calculus, exps: &[usize]) -> Result<NCPolynomial, FormsError> {
    let letters: Vec<usize> = exps
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i, e))
        .collect();
    let w = calc.gens().word(&letters)?;
    calc.nf(&NCPolynomial::from_word(calc.gens(), w))
}

fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Degree bound of the closed-form comparison table.
const PARTIALS_TABLE_DEGREE: u32 = 2;

pub fn partials_closed_form(calc: &Calculus) -> Result<CheckResult, FormsError> {
    let rows = closed_form_partial_table(calc, PARTIALS_TABLE_DEGREE)?;
    let gens = calc.gens();
    let mut per_degree = vec![0i64; PARTIALS_TABLE_DEGREE as usize];
    let mut shown = Vec::new();
    for row in rows.iter().filter(|r| !r.agrees()) {
        let deg = row.monomial.max_word().map(Word::degree).unwrap_or(0) as usize;
        per_degree[deg - 1] += 1;
        if shown.len() < 4 {
            shown.push(format!(
                "d/d{}({}): engine {}, closed form {}",
                gens.name(row.generator),
                row.monomial,
                row.engine,
                row.closed_form
            ));
        }
    }
    let total: i64 = per_degree.iter().sum();
    let detail = format!(
        "{total} of {} partials of monomials up to degree {PARTIALS_TABLE_DEGREE} differ from the alternating-sign closed form{}{}",
        rows.len(),
        if shown.is_empty() { "" } else { "; " },
        shown.join("; ")
    );
    let mut check = CheckResult::info("partials_closed_form", detail).with_data("mismatches per degree", per_degree);
    if let Some(row) = rows.iter().find(|r| !r.agrees()) {
        check = check.with_witness(
            format!("d/d{}({})", gens.name(row.generator), row.monomial),
            row.engine.to_string(),
        );
    }
    Ok(check)
}

/// `d^2` and connectedness rerun with the derived wedge coefficients.
pub(crate) fn derived_alternative(spec: &CalculusSpec, degree_bound: u32) -> Result<Option<String>, FormsError> {
    let derived = derive_wedge_coefficients(&spec.twist);
    if derived == spec.wedge {
        return Ok(None);
    }
    let alt = Calculus::new(CalculusSpec {
        wedge: derived,
        ..spec.clone()
    })?;
    let dsq = check_d_squared(&alt, degree_bound)?;
    let conn = check_connected(&alt, degree_bound)?;
    let dims = conn.data.as_ref().map(|d| join(&d.values)).unwrap_or_default();
    Ok(Some(format!(
        "with derived wedge coefficients: d_squared {}, connected {} (kernel dimensions [{dims}])",
        dsq.status, conn.status
    )))
}
