use ncsmooth::forms::Calculus;
use ncsmooth::front::{parse_poly, parse_spec, resolve_subject};
use ncsmooth::linalg::Matrix;
use ncsmooth::symbolic::Scalar;
use ncsmooth::verify::{connected_kernels, smoothness_report, Verdict};
use ncsmooth::zoo::{self, Subject};
use proptest::prelude::*;

#[test]
fn fail_witnesses_reevaluate() {
    let calc = Calculus::new(zoo::clifford_c()).unwrap();
    let report = smoothness_report(&Subject::Calculus(zoo::clifford_c()), 2).unwrap();

    let w = report.check("d_squared").unwrap().witness.clone().unwrap();
    let a = parse_poly(&w.element, calc.gens()).unwrap();
    let dd = calc.differential(&calc.d_poly(&a).unwrap()).unwrap();
    assert_eq!(dd.to_string(), w.value);

    let w = report.check("connected").unwrap().witness.clone().unwrap();
    let a = parse_poly(&w.element, calc.gens()).unwrap();
    assert!(calc.d_poly(&a).unwrap().is_zero());
    assert_eq!(w.value, "0");
}

#[test]
fn smooth_evidence_is_monotone() {
    for name in ["polynomial(2)", "quantum_plane(2)"] {
        let subject = resolve_subject(name).unwrap();
        let top = 4;
        assert_eq!(smoothness_report(&subject, top).unwrap().verdict, Verdict::SmoothEvidence(top));
        for d in 1..top {
            assert_eq!(smoothness_report(&subject, d).unwrap().verdict, Verdict::SmoothEvidence(d), "{name} at {d}");
        }
    }
}

#[test]
fn declared_gkdim_wins_over_estimate() {
    let text = "[algebra]\nname = p2\ngenerators = x, y\ngkdim = 3\n[relations]\ny*x - x*y\n[twist]\n1 1\n1 1\n";
    let subject = parse_spec(text).unwrap();
    let report = smoothness_report(&subject, 2).unwrap();
    let gk = report.check("gk_estimate").unwrap();
    assert!(gk.detail.contains("differs from declared GK dimension 3, which is used"), "{}", gk.detail);
    assert!(report.check("dimension_match").unwrap().failed());
}

#[test]
fn kernel_dimensions_ignore_generator_order() {
    let forward = "[algebra]\nname = p\ngenerators = x, y, z\n[relations]\ny*x - x*y\nz*x - x*z\nz*y - y*z\n[twist]\n1 1 1\n1 1 1\n1 1 1\n";
    let backward = forward.replace("generators = x, y, z", "generators = z, y, x");
    let dims = |text: &str| {
        let Subject::Calculus(spec) = parse_spec(text).unwrap() else { panic!() };
        let calc = Calculus::new(spec).unwrap();
        connected_kernels(&calc, 4).unwrap().iter().map(Vec::len).collect::<Vec<_>>()
    };
    assert_eq!(dims(forward), dims(&backward));

}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
}

fn build(rows: &[Vec<i64>]) -> Matrix {
    let mut m = Matrix::zeros(rows.len(), rows[0].len());
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, Scalar::from_int(v));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rank_and_kernel_are_exact(rows in matrix(), shift in 0usize..6) {
        let m = build(&rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in &kernel {
            for row in &rows {
                let mut dot = Scalar::zero();
                for (a, b) in row.iter().zip(v) {
                    dot += &(&Scalar::from_int(*a) * b);
                }
                prop_assert!(dot.is_zero());
            }
        }
        let mut permuted: Vec<Vec<i64>> = rows.clone();
        permuted.rotate_left(shift % rows.len());
        for row in permuted.iter_mut() {
            let n = row.len();
            row.rotate_right(shift % n);
        }
        prop_assert_eq!(build(&permuted).rank(), m.rank());
    }
}
