//! Transformation families acting on (n+1)-dimensional spacetime.
//!
//! Coordinates are ordered spatially first with time last, matching the
//! matrix layout used throughout the crate. Boosts are available as a
//! parametric family over `v1..vn` (the exact form, valid for every
//! parameter value) and as algebra generators; rotations are available as
//! algebra generators and, for finite spot checks, as exact rational
//! orthogonal matrices via the Cayley transform.

use thiserror::Error;

use crate::exact::{Matrix, Rational};
use crate::poly::{PolyMatrix, Polynomial};

/// A single constraint source for the invariant-form solver: one explicit
/// group element, one parametric family of group elements, or one Lie-algebra
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    dimension: usize,
    kind: GeneratorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// A fixed invertible transformation; constrains forms at group level.
    Explicit(Matrix),
    /// A matrix of polynomials in the parameters, evaluating to the identity
    /// at the origin; constrains forms identically in the parameters.
    Parametric {
        matrix: PolyMatrix,
        parameter_count: usize,
    },
    /// A Lie-algebra element; constrains forms at the infinitesimal level.
    Algebra(Matrix),
}

/// Error from [`cayley_rotation`] on inputs outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("cayley transform requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("cayley transform requires an antisymmetric matrix")]
    NotAntisymmetric,
}

impl GeneratorFamily {
    pub fn explicit(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "group elements must be square");
        GeneratorFamily {
            dimension: matrix.rows(),
            kind: GeneratorKind::Explicit(matrix),
        }
    }

    pub fn algebra(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "algebra elements must be square");
        GeneratorFamily {
            dimension: matrix.rows(),
            kind: GeneratorKind::Algebra(matrix),
        }
    }

    pub fn parametric(matrix: PolyMatrix, parameter_count: usize) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "group elements must be square");
        assert_eq!(
            matrix.vars().len(),
            parameter_count,
            "parameter ring size mismatch"
        );
        let at_origin = matrix.eval(&vec![Rational::zero(); parameter_count]);
        assert_eq!(
            at_origin,
            Matrix::identity(matrix.rows()),
            "parametric family must evaluate to the identity at zero parameters"
        );
        GeneratorFamily {
            dimension: matrix.rows(),
            kind: GeneratorKind::Parametric {
                matrix,
                parameter_count,
            },
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    /// Evaluates a parametric family at concrete parameter values.
    /// Panics on non-parametric kinds or a wrong parameter count.
    pub fn evaluate(&self, params: &[Rational]) -> Matrix {
        match &self.kind {
            GeneratorKind::Parametric {
                matrix,
                parameter_count,
            } => {
                assert_eq!(params.len(), *parameter_count, "parameter count mismatch");
                matrix.eval(params)
            }
            _ => panic!("evaluate requires a parametric family"),
        }
    }
}

/// Variable names `v1..vn` for boost parameters.
pub fn parameter_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// The parametric family of boosts on n+1 coordinates: the identity plus
/// velocity entries in the time column, time row (0, …, 0, 1).
pub fn boost_family(n: usize) -> GeneratorFamily {
    assert!(n >= 1, "spatial dimension must be at least 1");
    let d = n + 1;
    let vars = parameter_vars(n);
    let matrix = PolyMatrix::from_fn(d, d, &vars, |r, c| {
        if r == c {
            Polynomial::one(&vars)
        } else if c == n && r < n {
            Polynomial::variable(&vars, r)
        } else {
            Polynomial::zero(&vars)
        }
    });
    GeneratorFamily::parametric(matrix, n)
}

/// The n boost algebra generators: X_i has a single 1 at (row i, time column).
pub fn boost_algebra_generators(n: usize) -> Vec<GeneratorFamily> {
    assert!(n >= 1, "spatial dimension must be at least 1");
    let d = n + 1;
    (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            m.set(i, n, Rational::one());
            GeneratorFamily::algebra(m)
        })
        .collect()
}

/// The n(n-1)/2 rotation algebra generators J_ij = E_ij - E_ji on spatial
/// index pairs i < j, with zero time row and column.
pub fn rotation_algebra_generators(n: usize) -> Vec<GeneratorFamily> {
    assert!(n >= 1, "spatial dimension must be at least 1");
    let d = n + 1;
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = Matrix::zeros(d, d);
            m.set(i, j, Rational::one());
            m.set(j, i, -Rational::one());
            out.push(GeneratorFamily::algebra(m));
        }
    }
    out
}

/// Exact rational rotation on n+1 coordinates from an antisymmetric spatial
/// matrix S: the spatial block is the Cayley transform (I-S)^{-1}(I+S), an
/// exact isometry of the standard inner product; time is untouched.
pub fn cayley_rotation(s: &Matrix) -> Result<Matrix, CayleyError> {
    if !s.is_square() {
        return Err(CayleyError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if !s.is_antisymmetric() {
        return Err(CayleyError::NotAntisymmetric);
    }
    let n = s.rows();
    let id = Matrix::identity(n);
    let i_minus_s_inv = (&id - s)
        .inverse()
        .expect("I - S is invertible for antisymmetric S");
    let spatial = &i_minus_s_inv * &(&id + s);
    let d = n + 1;
    Ok(Matrix::from_fn(d, d, |r, c| {
        if r < n && c < n {
            spatial.get(r, c).clone()
        } else if r == c {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn boost_family_matches_displayed_matrix_for_n2() {
        let family = boost_family(2);
        let GeneratorKind::Parametric { matrix, .. } = family.kind() else {
            panic!("boost family must be parametric");
        };
        let vars = parameter_vars(2);
        let expected = [
            ["1", "0", "v1"],
            ["0", "1", "v2"],
            ["0", "0", "1"],
        ];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(
                    *matrix.get(r, c),
                    Polynomial::parse(expected[r][c], &vars).unwrap()
                );
            }
        }
    }

    #[test]
    fn zero_boost_is_identity() {
        let family = boost_family(1);
        assert_eq!(family.evaluate(&[Rational::zero()]), Matrix::identity(2));
    }

    #[test]
    fn opposite_boosts_compose_to_identity() {
        let family = boost_family(3);
        let forward = family.evaluate(&[rat(1, 1), rat(2, 1), rat(3, 1)]);
        let backward = family.evaluate(&[rat(-1, 1), rat(-2, 1), rat(-3, 1)]);
        assert_eq!(&forward * &backward, Matrix::identity(4));
    }

    #[test]
    fn boost_composition_is_additive() {
        let family = boost_family(2);
        let u = [rat(1, 3), rat(-2, 5)];
        let v = [rat(7, 2), rat(1, 4)];
        let sum = [&u[0] + &v[0], &u[1] + &v[1]];
        assert_eq!(
            &family.evaluate(&u) * &family.evaluate(&v),
            family.evaluate(&sum)
        );
    }

    #[test]
    fn boost_algebra_generators_shape() {
        let gens = boost_algebra_generators(2);
        assert_eq!(gens.len(), 2);
        let GeneratorKind::Algebra(x1) = gens[0].kind() else {
            panic!("expected algebra element");
        };
        let mut expected = Matrix::zeros(3, 3);
        expected.set(0, 2, Rational::one());
        assert_eq!(*x1, expected);
    }

    #[test]
    fn boost_generators_are_nilpotent_and_exponentiate_to_unit_boosts() {
        let family = boost_family(3);
        for (i, gen) in boost_algebra_generators(3).iter().enumerate() {
            let GeneratorKind::Algebra(x) = gen.kind() else {
                panic!("expected algebra element");
            };
            assert!((x * x).is_zero());
            let mut unit = vec![Rational::zero(); 3];
            unit[i] = Rational::one();
            assert_eq!(&Matrix::identity(4) + x, family.evaluate(&unit));
        }
    }

    #[test]
    fn rotation_generator_counts() {
        assert_eq!(rotation_algebra_generators(1).len(), 0);
        assert_eq!(rotation_algebra_generators(2).len(), 1);
        assert_eq!(rotation_algebra_generators(3).len(), 3);
        assert_eq!(rotation_algebra_generators(4).len(), 6);
    }

    #[test]
    fn rotation_generators_are_antisymmetric_with_zero_time_row_and_column() {
        for gen in rotation_algebra_generators(3) {
            let GeneratorKind::Algebra(j) = gen.kind() else {
                panic!("expected algebra element");
            };
            assert!(j.is_antisymmetric());
            for k in 0..4 {
                assert!(j.get(3, k).is_zero());
                assert!(j.get(k, 3).is_zero());
            }
        }
    }

    #[test]
    fn rotation_algebra_closes_under_commutators() {
        // Direct computation: with J_ij = E_ij - E_ji, the generator order for
        // n=3 is [J_01, J_02, J_12] and [J_01, J_12] = J_02.
        let gens: Vec<Matrix> = rotation_algebra_generators(3)
            .into_iter()
            .map(|g| match g.kind() {
                GeneratorKind::Algebra(m) => m.clone(),
                _ => unreachable!(),
            })
            .collect();
        let commutator = |a: &Matrix, b: &Matrix| &(a * b) - &(b * a);
        assert_eq!(commutator(&gens[0], &gens[2]), gens[1]);
        assert_eq!(commutator(&gens[0], &gens[1]), -&gens[2]);
        assert_eq!(commutator(&gens[1], &gens[2]), -&gens[0]);
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        assert_eq!(
            cayley_rotation(&Matrix::zeros(2, 2)).unwrap(),
            Matrix::identity(3)
        );
    }

    #[test]
    fn cayley_quarter_turn() {
        let s = Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        let r = cayley_rotation(&s).unwrap();
        let expected = Matrix::from_i64_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        assert_eq!(r, expected);
    }

    #[test]
    fn cayley_output_is_exactly_orthogonal() {
        let s = Matrix::from_rows(vec![
            vec![rat(0, 1), rat(2, 3), rat(-1, 7)],
            vec![rat(-2, 3), rat(0, 1), rat(5, 2)],
            vec![rat(1, 7), rat(-5, 2), rat(0, 1)],
        ]);
        let r = cayley_rotation(&s).unwrap();
        assert_eq!(&r.transpose() * &r, Matrix::identity(4));
    }

    #[test]
    fn cayley_rejects_non_antisymmetric_input() {
        let s = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(cayley_rotation(&s), Err(CayleyError::NotAntisymmetric));
        let wide = Matrix::zeros(2, 3);
        assert!(matches!(
            cayley_rotation(&wide),
            Err(CayleyError::NotSquare { .. })
        ));
    }
}
