//! Linear constraints that make given transformations isometries of a
//! bilinear form, and the exact solver for the full space of solutions.
//!
//! A form with Gram matrix G is invariant under a group element A iff
//! `AᵀGA = G`, and infinitesimally invariant under an algebra element X iff
//! `XᵀG + GX = 0`. Both conditions are linear in G, so after vectorizing G
//! row-major (`vec` index `μ·d + ν` holds `g_{μν}`) each generator
//! contributes a block of linear equations; stacking the blocks and taking
//! the exact nullspace yields a basis of the invariant-form space.
//!
//! Parametric families are handled identically in the parameters: the
//! symbolic difference `ΛᵀGΛ − G` is expanded over a ring containing both
//! the parameters and the d² unknowns `g_{μν}`, and every (matrix position,
//! parameter monomial) pair becomes one equation. No parameter sampling is
//! involved, so the constraint is exact for all parameter values.

use std::collections::BTreeMap;

use crate::exact::{Matrix, Rational};
use crate::groups::{GeneratorFamily, GeneratorKind};
use crate::poly::{Monomial, PolyMatrix, Polynomial};

/// A dimension plus the generator families whose isometry constraints are to
/// be imposed simultaneously.
#[derive(Clone, Debug)]
pub struct InvarianceProblem {
    dimension: usize,
    constraints: Vec<GeneratorFamily>,
}

impl InvarianceProblem {
    pub fn new(dimension: usize, constraints: Vec<GeneratorFamily>) -> Self {
        assert!(dimension >= 1);
        for family in &constraints {
            assert_eq!(
                family.dimension(),
                dimension,
                "all generator families must share the problem dimension"
            );
        }
        InvarianceProblem {
            dimension,
            constraints,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn constraints(&self) -> &[GeneratorFamily] {
        &self.constraints
    }
}

/// Canonical basis of an invariant-form solution space.
///
/// The vectorized basis members, stacked as rows, are in reduced row echelon
/// form, so two equal spans always produce identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormBasis {
    dimension: usize,
    basis: Vec<Matrix>,
}

impl FormBasis {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn forms(&self) -> &[Matrix] {
        &self.basis
    }
}

/// Result of checking one form against one generator family. Violations are
/// report content, not errors; `value` is the offending entry (a rational for
/// explicit/algebra checks, a polynomial in the parameters for parametric
/// checks) rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Constraint block for a single group element: K with
/// `K·vec(g) = vec(AᵀgA − g)`, i.e. `K[(μν),(ρσ)] = A[ρ,μ]·A[σ,ν] − δ_{ρμ}δ_{σν}`.
pub fn group_constraint(a: &Matrix) -> Matrix {
    assert!(a.is_square(), "group elements must be square");
    let d = a.rows();
    Matrix::from_fn(d * d, d * d, |row, col| {
        let (mu, nu) = (row / d, row % d);
        let (rho, sigma) = (col / d, col % d);
        let mut value = a.get(rho, mu) * a.get(sigma, nu);
        if rho == mu && sigma == nu {
            value -= &Rational::one();
        }
        value
    })
}

/// Constraint block for a single algebra element: K with
/// `K·vec(g) = vec(Xᵀg + gX)`.
pub fn algebra_constraint(x: &Matrix) -> Matrix {
    assert!(x.is_square(), "algebra elements must be square");
    let d = x.rows();
    Matrix::from_fn(d * d, d * d, |row, col| {
        let (mu, nu) = (row / d, row % d);
        let (rho, sigma) = (col / d, col % d);
        let mut value = Rational::zero();
        if sigma == nu {
            value += x.get(rho, mu);
        }
        if rho == mu {
            value += x.get(sigma, nu);
        }
        value
    })
}

/// Constraint block for a parametric family, enforcing `ΛᵀgΛ = g` for every
/// parameter value by symbolic coefficient extraction.
///
/// Rows are ordered by (matrix position row-major, parameter monomial
/// ascending); a family with no constraints (the constant identity) yields a
/// single zero row.
pub fn parametric_constraint(family: &GeneratorFamily) -> Matrix {
    let GeneratorKind::Parametric {
        matrix: lambda,
        parameter_count,
    } = family.kind()
    else {
        panic!("parametric_constraint requires a parametric family");
    };
    let d = family.dimension();
    let np = *parameter_count;

    // Ring over the parameters followed by the d*d unknowns g_{μν}.
    let mut combined: Vec<String> = lambda.vars().to_vec();
    for mu in 0..d {
        for nu in 0..d {
            combined.push(format!("g{mu}_{nu}"));
        }
    }

    let lambda_lifted = PolyMatrix::from_fn(d, d, &combined, |r, c| {
        lift_prefix(lambda.get(r, c), &combined)
    });
    let symbolic_g = PolyMatrix::from_fn(d, d, &combined, |r, c| {
        Polynomial::variable(&combined, np + r * d + c)
    });
    let difference = lambda_lifted
        .transpose()
        .mul(&symbolic_g)
        .mul(&lambda_lifted)
        .sub(&symbolic_g);

    // Group coefficients by (position, parameter monomial); each group is one
    // linear equation in vec(g). The difference is linear in g by
    // construction, so every monomial contains exactly one g variable.
    let mut rows: BTreeMap<((usize, usize), Monomial), Vec<Rational>> = BTreeMap::new();
    for (pos, mono, coeff) in difference.coefficient_map() {
        let exps = mono.exponents();
        let param_mono = Monomial::new(exps[..np].to_vec());
        let g_exps = &exps[np..];
        let g_index = g_exps
            .iter()
            .position(|&e| e == 1)
            .expect("constraint expression must be linear in g");
        assert_eq!(
            g_exps.iter().sum::<u32>(),
            1,
            "constraint expression must be linear in g"
        );
        let row = rows
            .entry((pos, param_mono))
            .or_insert_with(|| vec![Rational::zero(); d * d]);
        row[g_index] += &coeff;
    }

    let row_data: Vec<Vec<Rational>> = rows
        .into_values()
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .collect();
    if row_data.is_empty() {
        return Matrix::zeros(1, d * d);
    }
    Matrix::from_rows(row_data)
}

fn lift_prefix(p: &Polynomial, combined: &[String]) -> Polynomial {
    assert_eq!(&combined[..p.vars().len()], p.vars());
    let pad = combined.len() - p.vars().len();
    let terms = p
        .terms()
        .map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            exps.extend(std::iter::repeat(0).take(pad));
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(combined, terms)
}

/// Constraint block for any generator family.
pub fn constraint_for(family: &GeneratorFamily) -> Matrix {
    match family.kind() {
        GeneratorKind::Explicit(a) => group_constraint(a),
        GeneratorKind::Algebra(x) => algebra_constraint(x),
        GeneratorKind::Parametric { .. } => parametric_constraint(family),
    }
}

/// Stacks every constraint block and returns the canonical basis of the
/// solution space. An empty constraint list imposes nothing, so the basis is
/// all d² elementary forms.
pub fn solve_invariant_forms(problem: &InvarianceProblem) -> FormBasis {
    let d = problem.dimension();
    let blocks: Vec<Matrix> = problem.constraints().iter().map(constraint_for).collect();
    let stacked = if blocks.is_empty() {
        Matrix::zeros(1, d * d)
    } else {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let mut entries = Vec::with_capacity(rows * d * d);
        for block in &blocks {
            assert_eq!(block.cols(), d * d);
            entries.extend_from_slice(block.entries());
        }
        Matrix::new(rows, d * d, entries)
    };

    let kernel = stacked.nullspace();
    if kernel.is_empty() {
        return FormBasis {
            dimension: d,
            basis: Vec::new(),
        };
    }
    // Canonicalize: vectorized kernel vectors stacked as rows, reduced to
    // RREF; each row reshapes to one basis form.
    let stacked_rows = Matrix::from_fn(kernel.len(), d * d, |r, c| kernel[r].get(c, 0).clone());
    let (rref, pivots) = stacked_rows.rref();
    assert_eq!(pivots.len(), kernel.len(), "kernel basis must be independent");
    let basis = (0..kernel.len())
        .map(|r| Matrix::from_fn(d, d, |mu, nu| rref.get(r, mu * d + nu).clone()))
        .collect();
    FormBasis {
        dimension: d,
        basis,
    }
}

/// Checks one Gram matrix against one generator family, exactly.
pub fn verify_invariance(g: &Matrix, family: &GeneratorFamily) -> InvarianceReport {
    assert!(g.is_square(), "gram matrix must be square");
    assert_eq!(
        g.rows(),
        family.dimension(),
        "gram and generator dimensions must agree"
    );
    let mut violations = Vec::new();
    match family.kind() {
        GeneratorKind::Explicit(a) => {
            let diff = &(&(&a.transpose() * g) * a) - g;
            collect_rational_violations(&diff, &mut violations);
        }
        GeneratorKind::Algebra(x) => {
            let diff = &(&x.transpose() * g) + &(g * x);
            collect_rational_violations(&diff, &mut violations);
        }
        GeneratorKind::Parametric { matrix: lambda, .. } => {
            let lifted_g = PolyMatrix::from_constant(g, lambda.vars());
            let diff = lambda
                .transpose()
                .mul(&lifted_g)
                .mul(lambda)
                .sub(&lifted_g);
            for r in 0..diff.rows() {
                for c in 0..diff.cols() {
                    let entry = diff.get(r, c);
                    if !entry.is_zero() {
                        violations.push(Violation {
                            row: r,
                            col: c,
                            value: entry.to_string(),
                        });
                    }
                }
            }
        }
    }
    InvarianceReport { violations }
}

fn collect_rational_violations(diff: &Matrix, violations: &mut Vec<Violation>) {
    for r in 0..diff.rows() {
        for c in 0..diff.cols() {
            let entry = diff.get(r, c);
            if !entry.is_zero() {
                violations.push(Violation {
                    row: r,
                    col: c,
                    value: entry.to_string(),
                });
            }
        }
    }
}
