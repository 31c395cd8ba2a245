//! Built-in presets: the algebras with explicit relations, their calculi,
//! and numeric-only records for families given without relations.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::forms::{derive_wedge_coefficients, CalculusSpec, DiagonalTwist, WedgeCoefficients};
use crate::front::parse_poly;
use crate::rewrite::{MonomialOrder, PresentedAlgebra};
use crate::symbolic::{GeneratorSet, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZooError {
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("preset `{preset}`: {message}")]
    BadParameters { preset: String, message: String },
}

/// Generator count and growth of a family known only by its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetadataRecord {
    pub name: String,
    pub num_generators: usize,
    pub gkdim: u32,
    /// Degrees of the defining relations, when a single type is meant.
    pub relation_degrees: Vec<u32>,
}

/// What a preset or spec file describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Calculus(CalculusSpec),
    Algebra(PresentedAlgebra),
    Metadata(MetadataRecord),
}

impl Subject {
    pub fn name(&self) -> &str {
        match self {
            Subject::Calculus(s) => &s.algebra.name,
            Subject::Algebra(a) => &a.name,
            Subject::Metadata(m) => &m.name,
        }
    }

    pub fn algebra(&self) -> Option<&PresentedAlgebra> {
        match self {
            Subject::Calculus(s) => Some(&s.algebra),
            Subject::Algebra(a) => Some(a),
            Subject::Metadata(_) => None,
        }
    }

    pub fn num_generators(&self) -> usize {
        match self {
            Subject::Calculus(s) => s.num_generators(),
            Subject::Algebra(a) => a.num_generators(),
            Subject::Metadata(m) => m.num_generators,
        }
    }

    pub fn declared_gkdim(&self) -> Option<u32> {
        match self {
            Subject::Calculus(s) => s.algebra.declared_gkdim,
            Subject::Algebra(a) => a.declared_gkdim,
            Subject::Metadata(m) => Some(m.gkdim),
        }
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresetInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

impl fmt::Display for PresetInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            write!(f, "{:<20} {}", self.name, self.summary)
        } else {
            let sig = format!("{}({})", self.name, self.params.join(", "));
            write!(f, "{sig:<20} {}", self.summary)
        }
    }
}

pub const CATALOG: &[PresetInfo] = &[
    PresetInfo {
        name: "cliffordC",
        params: &[],
        summary: "five-generator graded Clifford algebra, literal calculus (lambda = -1, c = -1)",
    },
    PresetInfo {
        name: "cliffordC_derived",
        params: &[],
        summary: "same algebra with derived wedge coefficients (c = +1)",
    },
    PresetInfo {
        name: "polynomial",
        params: &["n"],
        summary: "commutative polynomial ring with the classical exterior calculus",
    },
    PresetInfo {
        name: "quantum_plane",
        params: &["q"],
        summary: "quantum plane yx = q xy with its covariant twist",
    },
    PresetInfo {
        name: "li_wang",
        params: &["alpha", "beta", "gamma", "a", "b", "c", "d"],
        summary: "four generators, five quadratic relations, GK 5 (algebra only)",
    },
    PresetInfo {
        name: "two_gen_gk5",
        params: &[],
        summary: "metadata: 2 generators, GK 5",
    },
    PresetInfo {
        name: "zhou_lu",
        params: &[],
        summary: "metadata: two-generator Z^2-graded family, GK 5",
    },
    PresetInfo {
        name: "wang_wu",
        params: &[],
        summary: "metadata: two generators, three quartic relations, GK 5",
    },
    PresetInfo {
        name: "wang_wu_347",
        params: &[],
        summary: "metadata: two generators, relation type (3,4,7), GK 5",
    },
];

/// A preset argument, either positional or `key=value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresetArg {
    pub key: Option<String>,
    pub value: Scalar,
}

pub fn preset(name: &str, args: &[PresetArg]) -> Result<Subject, ZooError> {
    let info = CATALOG
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| ZooError::UnknownPreset(name.to_string()))?;
    let bad = |message: String| ZooError::BadParameters {
        preset: name.to_string(),
        message,
    };
    let values = bind_args(info, args).map_err(bad)?;
    match name {
        "cliffordC" => Ok(Subject::Calculus(clifford_c())),
        "cliffordC_derived" => Ok(Subject::Calculus(clifford_c_derived())),
        "polynomial" => {
            let n = values[0]
                .as_ref()
                .ok_or_else(|| bad("missing parameter n".into()))?;
            if !n.denom().is_one() || n.is_negative() || n.is_zero() {
                return Err(bad(format!("n must be a positive integer, got {n}")));
            }
            let n = usize::try_from(n.numer()).map_err(|_| bad(format!("n = {n} is too large")))?;
            Ok(Subject::Calculus(polynomial(n)?))
        }
        "quantum_plane" => {
            let q = values[0]
                .clone()
                .ok_or_else(|| bad("missing parameter q".into()))?;
            Ok(Subject::Calculus(quantum_plane(q)?))
        }
        "li_wang" => {
            if values.iter().all(Option::is_none) {
                return Ok(Subject::Algebra(li_wang_sample()));
            }
            let missing: Vec<&str> = info
                .params
                .iter()
                .zip(&values)
                .filter(|(_, v)| v.is_none())
                .map(|(p, _)| *p)
                .collect();
            if !missing.is_empty() {
                return Err(bad(format!("missing parameters {}", missing.join(", "))));
            }
            let v: Vec<Scalar> = values.into_iter().map(Option::unwrap).collect();
            let p = LiWangParams {
                alpha: v[0].clone(),
                beta: v[1].clone(),
                gamma: v[2].clone(),
                a: v[3].clone(),
                b: v[4].clone(),
                c: v[5].clone(),
                d: v[6].clone(),
            };
            Ok(Subject::Algebra(li_wang(&p)?))
        }
        "two_gen_gk5" => Ok(Subject::Metadata(metadata("two_gen_gk5", vec![]))),
        "zhou_lu" => Ok(Subject::Metadata(metadata("zhou_lu", vec![]))),
        "wang_wu" => Ok(Subject::Metadata(metadata("wang_wu", vec![4, 4, 4]))),
        "wang_wu_347" => Ok(Subject::Metadata(metadata("wang_wu_347", vec![3, 4, 7]))),
        _ => unreachable!("catalog entries are all handled"),
    }
}

fn bind_args(info: &PresetInfo, args: &[PresetArg]) -> Result<Vec<Option<Scalar>>, String> {
    let mut values: Vec<Option<Scalar>> = vec![None; info.params.len()];
    let mut next = 0;
    for arg in args {
        let slot = match &arg.key {
            Some(k) => info
                .params
                .iter()
                .position(|p| p == k)
                .ok_or_else(|| format!("unknown parameter `{k}`"))?,
            None => {
                let s = next;
                next += 1;
                s
            }
        };
        if slot >= values.len() {
            return Err(format!("takes {} parameters, got more", info.params.len()));
        }
        if values[slot].is_some() {
            return Err(format!("parameter `{}` given twice", info.params[slot]));
        }
        values[slot] = Some(arg.value.clone());
    }
    Ok(values)
}

fn metadata(name: &str, relation_degrees: Vec<u32>) -> MetadataRecord {
    MetadataRecord {
        name: name.to_string(),
        num_generators: 2,
        gkdim: 5,
        relation_degrees,
    }
}

fn algebra(
    name: &str,
    gens: Arc<GeneratorSet>,
    rels: &[String],
    gkdim: u32,
    order: MonomialOrder,
) -> PresentedAlgebra {
    let relations = rels
        .iter()
        .map(|r| parse_poly(r, &gens).expect("preset relations parse"))
        .collect();
    PresentedAlgebra::new(name, gens, relations, Some(gkdim), order).expect("preset relations are homogeneous")
}

pub const CLIFFORD_RELATIONS: [&str; 10] = [
    "x1*x2 + x2*x1 - x5^2",
    "x1*x3 + x3*x1 - x2^2",
    "x1*x4 + x4*x1 - x3^2",
    "x1*x5 + x5*x1 - x4^2",
    "x2*x4 + x4*x2 - x1^2",
    "x2*x5 + x5*x2",
    "x3*x4 + x4*x3",
    "x3*x5 + x5*x3",
    "x4*x5 + x5*x4",
    "x2*x3 + x3*x2",
];

pub const CLIFFORD_CLAIM: &str = "Theorem NoClifford states that C is differentially smooth";

/// The graded Clifford algebra on `x1..x5`, oriented by degree then inversions.
pub fn clifford_algebra() -> PresentedAlgebra {
    let gens = Arc::new(GeneratorSet::new(["x1", "x2", "x3", "x4", "x5"]).expect("valid names"));
    let rels: Vec<String> = CLIFFORD_RELATIONS.iter().map(|s| s.to_string()).collect();
    algebra("cliffordC", gens, &rels, 5, MonomialOrder::DegInvLex)
        .with_claim(CLIFFORD_CLAIM)
        .with_closed_form_partials(true)
}

/// `λ ≡ -1`, `c ≡ -1`.
pub fn clifford_c() -> CalculusSpec {
    CalculusSpec::new(
        clifford_algebra(),
        DiagonalTwist::constant(5, -Scalar::one()),
        WedgeCoefficients::exterior(5),
    )
    .expect("sizes match")
}

/// `λ ≡ -1` with the derived coefficients `c ≡ +1`.
pub fn clifford_c_derived() -> CalculusSpec {
    let mut alg = clifford_algebra();
    alg.name = "cliffordC_derived".into();
    let twist = DiagonalTwist::constant(5, -Scalar::one());
    let wedge = derive_wedge_coefficients(&twist);
    CalculusSpec::new(alg, twist, wedge).expect("sizes match")
}

/// Names `x, y, z` up to three generators, `x1..xn` beyond.
pub fn polynomial_generators(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn polynomial(n: usize) -> Result<CalculusSpec, ZooError> {
    if n == 0 || n > crate::forms::MAX_FORM_GENERATORS {
        return Err(ZooError::BadParameters {
            preset: "polynomial".into(),
            message: format!("n must lie in 1..={}, got {n}", crate::forms::MAX_FORM_GENERATORS),
        });
    }
    let names = polynomial_generators(n);
    let mut rels = Vec::new();
    for j in 0..n {
        for i in 0..j {
            rels.push(format!("{}*{} - {}*{}", names[j], names[i], names[i], names[j]));
        }
    }
    let gens = Arc::new(GeneratorSet::new(names).expect("valid names"));
    let alg = algebra(&format!("polynomial({n})"), gens, &rels, n as u32, MonomialOrder::Deglex);
    Ok(CalculusSpec::new(alg, DiagonalTwist::identity(n), WedgeCoefficients::exterior(n)).expect("sizes match"))
}

/// `yx = q xy`, `λ[x][y] = q`, `λ[y][x] = 1/q`, `c[y][x] = -q`.
pub fn quantum_plane(q: Scalar) -> Result<CalculusSpec, ZooError> {
    let qi = q.inv().ok_or_else(|| ZooError::BadParameters {
        preset: "quantum_plane".into(),
        message: "q must be nonzero".into(),
    })?;
    let gens = Arc::new(GeneratorSet::new(["x", "y"]).expect("valid names"));
    let rel = format!("y*x - {q}*x*y");
    let alg = algebra(&format!("quantum_plane({q})"), gens, &[rel], 2, MonomialOrder::Deglex);
    let twist = DiagonalTwist::new(vec![vec![Scalar::one(), q.clone()], vec![qi, Scalar::one()]]).expect("nonzero");
    let wedge = WedgeCoefficients::new(vec![vec![], vec![-q]]).expect("nonzero");
    Ok(CalculusSpec::new(alg, twist, wedge).expect("sizes match"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiWangParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl LiWangParams {
    /// `α = β = γ = 1`, `a = 2`, `b = c = 1`, `d = 1/2`.
    pub fn sample() -> Self {
        LiWangParams {
            alpha: Scalar::one(),
            beta: Scalar::one(),
            gamma: Scalar::one(),
            a: Scalar::from_int(2),
            b: Scalar::one(),
            c: Scalar::one(),
            d: Scalar::from_frac(1, 2),
        }
    }
}

/// Requires `αβγ != 0` and `abcd = 1`.
pub fn li_wang(p: &LiWangParams) -> Result<PresentedAlgebra, ZooError> {
    let bad = |message: &str| ZooError::BadParameters {
        preset: "li_wang".into(),
        message: message.into(),
    };
    if (&(&p.alpha * &p.beta) * &p.gamma).is_zero() {
        return Err(bad("requires alpha*beta*gamma != 0"));
    }
    if !(&(&(&p.a * &p.b) * &p.c) * &p.d).is_one() {
        return Err(bad("requires a*b*c*d = 1"));
    }
    let gens = Arc::new(GeneratorSet::new(["x", "y", "z", "w"]).expect("valid names"));
    let t = |c: &Scalar, w: &str| format!("({c})*{w}");
    let rels = vec![
        format!("x*y + {} + {} + {}", t(&p.alpha, "y*x"), t(&p.beta, "z*w"), t(&p.gamma, "w*z")),
        format!("x*z + {}", t(&p.a, "z*x")),
        format!("x*w + {}", t(&p.b, "w*x")),
        format!("y*z + {}", t(&p.c, "z*y")),
        format!("y*w + {}", t(&p.d, "w*y")),
    ];
    let name = format!(
        "li_wang({}, {}, {}, {}, {}, {}, {})",
        p.alpha, p.beta, p.gamma, p.a, p.b, p.c, p.d
    );
    Ok(algebra(&name, gens, &rels, 5, MonomialOrder::Deglex))
}

pub fn li_wang_sample() -> PresentedAlgebra {
    li_wang(&LiWangParams::sample()).expect("sample satisfies the predicate")
}
