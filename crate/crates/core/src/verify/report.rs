use std::fmt;

use crate::forms::{Calculus, FormsError};
use crate::zoo::Subject;

use super::checks::{
    check_connected, check_d_squared, check_dimension_match, check_relation_compatibility, check_twist_validity,
    check_volume_integrability, derived_alternative, gk_estimate, obstruction, partials_closed_form,
};
use super::{CheckResult, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SmoothEvidence(u32),
    NotSmooth,
    AxiomFailure,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::SmoothEvidence(d) => write!(f, "smooth-evidence({d})"),
            Verdict::NotSmooth => write!(f, "not-smooth(obstruction)"),
            Verdict::AxiomFailure => write!(f, "axiom-failure"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub algebra: String,
    pub degree_bound: u32,
    pub checks: Vec<CheckResult>,
    pub verdict: Verdict,
}

impl SmoothnessReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

const AXIOM_CHECKS: [&str; 3] = ["twist_validity", "relation_compatibility", "d_squared"];

/// Runs every check in a fixed order: obstruction, gk_estimate,
/// twist_validity, relation_compatibility, d_squared, connected,
/// dimension_match, volume_integrability, partials_closed_form,
/// paper_discrepancy. Checks that need data the subject lacks are omitted.
pub fn smoothness_report(subject: &Subject, degree_bound: u32) -> Result<SmoothnessReport, FormsError> {
    let mut checks = Vec::new();
    let n = subject.num_generators();
    let mut gk = subject.declared_gkdim();
    checks.push(obstruction(n, gk));

    if let Some(alg) = subject.algebra() {
        let est = gk_estimate(alg, degree_bound)?;
        checks.push(est.check.clone());
        if gk.is_none() && est.exact {
            gk = est.estimate;
            checks[0] = obstruction(n, gk);
        }
    }

    let mut claim = subject.algebra().and_then(|a| a.claim.clone());
    match subject {
        Subject::Calculus(spec) => {
            let calc = Calculus::new(spec.clone())?;
            checks.push(check_twist_validity(&calc)?);
            checks.push(check_relation_compatibility(&calc)?);
            checks.push(check_d_squared(&calc, degree_bound)?);
            checks.push(check_connected(&calc, degree_bound)?);
            checks.push(check_dimension_match(n, gk));
            checks.push(check_volume_integrability(&calc, degree_bound)?);
            if spec.algebra.closed_form_partials {
                checks.push(partials_closed_form(&calc)?);
            }
            let verdict = verdict(&checks, degree_bound, true);
            if let Some(text) = claim.take() {
                if !matches!(verdict, Verdict::SmoothEvidence(_)) {
                    checks.push(discrepancy(&text, &checks, derived_alternative(spec, degree_bound)?));
                }
            }
        }
        Subject::Algebra(_) | Subject::Metadata(_) => {
            checks.push(CheckResult::info(
                "calculus",
                "no twist given: calculus checks not run",
            ));
        }
    }
    if let Some(text) = claim {
        if !matches!(verdict(&checks, degree_bound, false), Verdict::SmoothEvidence(_)) {
            checks.push(discrepancy(&text, &checks, None));
        }
    }
    let verdict = verdict(&checks, degree_bound, matches!(subject, Subject::Calculus(_)));
    Ok(SmoothnessReport {
        algebra: subject.name().to_string(),
        degree_bound,
        checks,
        verdict,
    })
}

fn verdict(checks: &[CheckResult], degree_bound: u32, has_calculus: bool) -> Verdict {
    if checks.iter().any(|c| c.name == "obstruction" && c.failed()) {
        return Verdict::NotSmooth;
    }
    if checks.iter().any(|c| AXIOM_CHECKS.contains(&c.name.as_str()) && c.failed()) {
        return Verdict::AxiomFailure;
    }
    if has_calculus && degree_bound >= 1 && checks.iter().all(|c| c.status != Status::Fail) {
        return Verdict::SmoothEvidence(degree_bound);
    }
    Verdict::Inconclusive
}

fn discrepancy(claim: &str, checks: &[CheckResult], alternative: Option<String>) -> CheckResult {
    let failed: Vec<&str> = checks.iter().filter(|c| c.failed()).map(|c| c.name.as_str()).collect();
    let mut detail = format!(
        "published claim: {claim}; this calculus fails {}",
        if failed.is_empty() { "no check but is not confirmed".to_string() } else { failed.join(", ") }
    );
    if let Some(alt) = alternative {
        detail.push_str("; ");
        detail.push_str(&alt);
    }
    CheckResult::info("paper_discrepancy", detail)
}
