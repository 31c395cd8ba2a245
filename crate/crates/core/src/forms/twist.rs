use crate::rewrite::PresentedAlgebra;
use crate::symbolic::Scalar;

use super::{FormsError, MAX_FORM_GENERATORS};

/// Diagonal automorphisms `ν_i(x_j) = λ[i][j] * x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalTwist {
    lambda: Vec<Vec<Scalar>>,
}

impl DiagonalTwist {
    /// Rows must be square and every entry nonzero.
    pub fn new(lambda: Vec<Vec<Scalar>>) -> Result<Self, FormsError> {
        let n = lambda.len();
        for (i, row) in lambda.iter().enumerate() {
            if row.len() != n {
                return Err(FormsError::DimensionMismatch {
                    what: format!("twist row {}", i + 1),
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(j) = row.iter().position(Scalar::is_zero) {
                return Err(FormsError::ZeroEntry {
                    what: "twist".into(),
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
        Ok(DiagonalTwist { lambda })
    }

    pub fn constant(n: usize, value: Scalar) -> Self {
        assert!(!value.is_zero(), "twist entries must be nonzero");
        DiagonalTwist {
            lambda: vec![vec![value; n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    pub fn size(&self) -> usize {
        self.lambda.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.lambda[i][j]
    }

    /// The scales of `ν_i`, one per generator.
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.lambda[i]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.lambda
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<(), FormsError> {
        if value.is_zero() {
            return Err(FormsError::ZeroEntry {
                what: "twist".into(),
                row: i + 1,
                col: j + 1,
            });
        }
        self.lambda[i][j] = value;
        Ok(())
    }

    /// `λ[i][j] * λ[j][i] = 1` for all `i != j`.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| (&self.lambda[i][j] * &self.lambda[j][i]).is_one()))
    }
}

/// `dx_j ^ dx_i = c[j][i] * dx_i ^ dx_j` for `j > i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeCoefficients {
    // c[j] holds c[j][0..j]
    c: Vec<Vec<Scalar>>,
}

impl WedgeCoefficients {
    /// `rows[j]` lists `c[j][0..j]`, so row 0 is empty.
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self, FormsError> {
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j {
                return Err(FormsError::DimensionMismatch {
                    what: format!("wedge row for generator {}", j + 1),
                    expected: j,
                    got: row.len(),
                });
            }
            if let Some(i) = row.iter().position(Scalar::is_zero) {
                return Err(FormsError::ZeroEntry {
                    what: "wedge".into(),
                    row: j + 1,
                    col: i + 1,
                });
            }
        }
        Ok(WedgeCoefficients { c: rows })
    }

    pub fn constant(n: usize, value: Scalar) -> Self {
        assert!(!value.is_zero(), "wedge coefficients must be nonzero");
        WedgeCoefficients {
            c: (0..n).map(|j| vec![value.clone(); j]).collect(),
        }
    }

    /// `c ≡ -1`.
    pub fn exterior(n: usize) -> Self {
        Self::constant(n, -Scalar::one())
    }

    pub fn size(&self) -> usize {
        self.c.len()
    }

    /// `c[j][i]`, requires `j > i`.
    pub fn get(&self, j: usize, i: usize) -> &Scalar {
        assert!(j > i, "wedge coefficients are indexed by j > i");
        &self.c[j][i]
    }

    pub fn set(&mut self, j: usize, i: usize, value: Scalar) -> Result<(), FormsError> {
        assert!(j > i, "wedge coefficients are indexed by j > i");
        if value.is_zero() {
            return Err(FormsError::ZeroEntry {
                what: "wedge".into(),
                row: j + 1,
                col: i + 1,
            });
        }
        self.c[j][i] = value;
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.c
    }
}

/// `c[j][i] = -1 / λ[j][i]`: the coefficients for which `d(d(x_i x_j)) = 0`
/// in the free algebra.
pub fn derive_wedge_coefficients(twist: &DiagonalTwist) -> WedgeCoefficients {
    let n = twist.size();
    WedgeCoefficients {
        c: (0..n)
            .map(|j| {
                (0..j)
                    .map(|i| -twist.get(j, i).inv().expect("twist entries are nonzero"))
                    .collect()
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalculusSpec {
    pub algebra: PresentedAlgebra,
    pub twist: DiagonalTwist,
    pub wedge: WedgeCoefficients,
}

impl CalculusSpec {
    /// Checks that the twist and wedge sizes match the generator count.
    pub fn new(algebra: PresentedAlgebra, twist: DiagonalTwist, wedge: WedgeCoefficients) -> Result<Self, FormsError> {
        let n = algebra.num_generators();
        if n > MAX_FORM_GENERATORS {
            return Err(FormsError::TooManyGenerators(n));
        }
        if twist.size() != n {
            return Err(FormsError::DimensionMismatch {
                what: "twist rows".into(),
                expected: n,
                got: twist.size(),
            });
        }
        if wedge.size() != n {
            return Err(FormsError::DimensionMismatch {
                what: "wedge rows".into(),
                expected: n,
                got: wedge.size(),
            });
        }
        Ok(CalculusSpec { algebra, twist, wedge })
    }

    pub fn num_generators(&self) -> usize {
        self.algebra.num_generators()
    }
}
