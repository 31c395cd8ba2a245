//! Smoothness checks against a calculus spec, aggregated into a verdict.

mod checks;
mod report;

pub use checks::{
    check_connected, check_d_squared, check_dimension_match, check_relation_compatibility, check_twist_validity,
    check_volume_integrability, closed_form_partial_table, connected_kernels, gk_estimate, obstruction,
    partials_closed_form, GkEstimate, PartialRow,
};
pub use report::{smoothness_report, SmoothnessReport, Verdict};

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An element and the value the check computed for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub element: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataTable {
    pub label: String,
    pub values: Vec<i64>,
}

/// Outcome of one check. A `Fail` always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Witness>,
    pub data: Option<DataTable>,
}

impl CheckResult {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, detail)
    }

    pub fn info(name: &str, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Info, detail)
    }

    pub fn fail(name: &str, detail: impl Into<String>, element: impl Into<String>, value: impl Into<String>) -> Self {
        Self::new(name, Status::Fail, detail).with_witness(element, value)
    }

    fn new(name: &str, status: Status, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            status,
            detail: detail.into(),
            witness: None,
            data: None,
        }
    }

    pub fn with_witness(mut self, element: impl Into<String>, value: impl Into<String>) -> Self {
        self.witness = Some(Witness {
            element: element.into(),
            value: value.into(),
        });
        self
    }

    pub fn with_data(mut self, label: impl Into<String>, values: Vec<i64>) -> Self {
        self.data = Some(DataTable {
            label: label.into(),
            values,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Calculus;
    use crate::zoo::{self, Subject};

    #[test]
    fn obstruction_threshold() {
        let two = obstruction(2, Some(5));
        assert!(two.failed());
        assert!(two.detail.starts_with("GKdim 5 > 2 generators"));
        assert!(two.detail.contains("by Theorem NoDS, A is not differentially smooth"));
        assert!(obstruction(4, Some(5)).failed());
        assert!(obstruction(5, Some(5)).passed());
        assert_eq!(obstruction(3, None).status, Status::Info);
    }

    #[test]
    fn clifford_literal_findings() {
        let calc = Calculus::new(zoo::clifford_c()).unwrap();
        assert!(check_twist_validity(&calc).unwrap().passed());
        assert!(check_relation_compatibility(&calc).unwrap().passed());

        let dsq = check_d_squared(&calc, 2).unwrap();
        assert!(dsq.failed());
        let w = dsq.witness.as_ref().unwrap();
        assert_eq!((w.element.as_str(), w.value.as_str()), ("x1*x2", "-2*dx1^dx2"));

        let kernels = connected_kernels(&calc, 2).unwrap();
        assert_eq!(kernels.iter().map(Vec::len).collect::<Vec<_>>(), vec![0, 5]);
        let squares: Vec<String> = kernels[1].iter().map(ToString::to_string).collect();
        assert_eq!(squares, ["x1^2", "x2^2", "x3^2", "x4^2", "x5^2"]);
        assert!(check_connected(&calc, 2).unwrap().failed());

        let table = closed_form_partial_table(&calc, 2).unwrap();
        let x1_sq = table
            .iter()
            .find(|r| r.generator == 0 && r.monomial.to_string() == "x1^2")
            .unwrap();
        assert!(x1_sq.engine.is_zero());
        assert_eq!(table.len(), 100);
        assert_eq!(table.iter().filter(|r| !r.agrees()).count(), 30);
    }

    #[test]
    fn classical_and_twisted_controls() {
        for (subject, d) in [
            (Subject::Calculus(zoo::polynomial(2).unwrap()), 4),
            (Subject::Calculus(zoo::quantum_plane(crate::symbolic::Scalar::from_int(2)).unwrap()), 3),
        ] {
            let report = smoothness_report(&subject, d).unwrap();
            assert_eq!(report.verdict, Verdict::SmoothEvidence(d), "{report:?}");
            assert!(report.check("paper_discrepancy").is_none());
        }
    }

    #[test]
    fn verdicts() {
        let clifford = Subject::Calculus(zoo::clifford_c());
        let report = smoothness_report(&clifford, 2).unwrap();
        assert_eq!(report.verdict, Verdict::AxiomFailure);
        let note = report.check("paper_discrepancy").unwrap();
        assert_eq!(note.status, Status::Info);
        assert!(note.detail.contains("Theorem NoClifford"));
        assert!(note.detail.contains("d_squared"));

        let meta = zoo::preset("two_gen_gk5", &[]).unwrap();
        assert_eq!(smoothness_report(&meta, 3).unwrap().verdict, Verdict::NotSmooth);
        let li_wang = zoo::preset("li_wang", &[]).unwrap();
        assert_eq!(smoothness_report(&li_wang, 3).unwrap().verdict, Verdict::NotSmooth);

        let poly = Subject::Calculus(zoo::polynomial(2).unwrap());
        assert_eq!(smoothness_report(&poly, 0).unwrap().verdict, Verdict::Inconclusive);
        let derived = Subject::Calculus(zoo::clifford_c_derived());
        assert_eq!(smoothness_report(&derived, 2).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn dimension_match() {
        assert!(check_dimension_match(3, Some(3)).passed());
        assert!(check_dimension_match(3, Some(2)).failed());
        assert_eq!(check_dimension_match(3, None).status, Status::Info);
    }
}
