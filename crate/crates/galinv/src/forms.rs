//! Bilinear forms on spacetime and the analyses attached to them:
//! evaluation, the boost-invariant family, symmetric/antisymmetric split,
//! rank and radical, the adjoint involution, isometry tests, translation
//! defects, and momentum 4-vectors.

use thiserror::Error;

use crate::exact::{Matrix, Rational};

/// An event or momentum vector: n spatial coordinates followed by the time
/// (or mass) component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourVector(Vec<Rational>);

impl FourVector {
    pub fn new(coordinates: Vec<Rational>) -> Self {
        assert!(coordinates.len() >= 2, "need at least one spatial and one time component");
        FourVector(coordinates)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    pub fn spatial(&self) -> &[Rational] {
        &self.0[..self.0.len() - 1]
    }

    pub fn time(&self) -> &Rational {
        &self.0[self.0.len() - 1]
    }

    pub fn add(&self, other: &FourVector) -> FourVector {
        assert_eq!(self.dimension(), other.dimension(), "dimension mismatch");
        FourVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Applies a linear transformation, e.g. a boost matrix.
    pub fn transform(&self, a: &Matrix) -> FourVector {
        FourVector(a.mul_vec(&self.0))
    }
}

/// A bilinear form represented by its Gram matrix: `g(x, y) = xᵀ G y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

/// The invariant vector `(a⃗, a⁰)` parametrizing the boost-invariant family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalileanParameters {
    pub a: Vec<Rational>,
    pub a0: Rational,
}

impl GalileanParameters {
    pub fn new(a: Vec<Rational>, a0: Rational) -> Self {
        assert!(!a.is_empty(), "need at least one spatial component");
        GalileanParameters { a, a0 }
    }

    pub fn spatial_dimension(&self) -> usize {
        self.a.len()
    }

    /// `|a⃗|²`, the squared Euclidean norm of the spatial parameter.
    pub fn a_norm_squared(&self) -> Rational {
        self.a.iter().map(|x| x * x).sum()
    }
}

/// Rank analysis of a form: exact rank, nondegeneracy, and a canonical basis
/// of the radical `{x : g(x, y) = 0 for all y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub nondegenerate: bool,
    pub radical_basis: Vec<FourVector>,
}

/// Why [`BilinearForm::adjoint`] refused its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjointError {
    #[error("the adjoint requires a symmetric gram matrix")]
    NonSymmetricGram,
    #[error("the adjoint requires a nondegenerate gram matrix (rank {rank} of {size})")]
    SingularGram { size: usize, rank: usize },
}

/// The boost-invariant form with parameters `(a⃗, a⁰)`:
/// `g(x, y) = a⃗·(t_y x⃗ − t_x y⃗) + a⁰ t_x t_y`, i.e. Gram entries
/// `G[i, t] = aᵢ`, `G[t, i] = −aᵢ`, `G[t, t] = a⁰`.
pub fn galilean_form(p: &GalileanParameters) -> BilinearForm {
    let n = p.spatial_dimension();
    let d = n + 1;
    let mut gram = Matrix::zeros(d, d);
    for (i, ai) in p.a.iter().enumerate() {
        gram.set(i, n, ai.clone());
        gram.set(n, i, -ai);
    }
    gram.set(n, n, p.a0.clone());
    BilinearForm::new(gram)
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        assert!(gram.is_square(), "gram matrix must be square");
        BilinearForm { gram }
    }

    pub fn dimension(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `xᵀ G y`, exactly.
    pub fn evaluate(&self, x: &FourVector, y: &FourVector) -> Rational {
        assert_eq!(x.dimension(), self.dimension(), "dimension mismatch");
        assert_eq!(y.dimension(), self.dimension(), "dimension mismatch");
        let gy = self.gram.mul_vec(y.coordinates());
        x.coordinates()
            .iter()
            .zip(&gy)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Splits into `((G + Gᵀ)/2, (G − Gᵀ)/2)`; the parts sum back to G.
    pub fn split(&self) -> (BilinearForm, BilinearForm) {
        let half = Rational::new(1, 2);
        let gt = self.gram.transpose();
        let sym = (&self.gram + &gt).scale(&half);
        let antisym = (&self.gram - &gt).scale(&half);
        (BilinearForm::new(sym), BilinearForm::new(antisym))
    }

    /// Exact rank, nondegeneracy, and the canonical radical basis
    /// (the right kernel of Gᵀ, since `g(x, ·) = 0` iff `Gᵀ x = 0`).
    pub fn rank_report(&self) -> RankReport {
        let rank = self.gram.rank();
        let radical_basis = self
            .gram
            .transpose()
            .nullspace()
            .into_iter()
            .map(|col| {
                FourVector::new((0..col.rows()).map(|r| col.get(r, 0).clone()).collect())
            })
            .collect();
        RankReport {
            rank,
            nondegenerate: rank == self.dimension(),
            radical_basis,
        }
    }

    /// The involution `A* = G⁻¹ Aᵀ G`, defined when the gram matrix is
    /// symmetric and invertible; the unique matrix with
    /// `g(A*x, y) = g(x, Ay)` for all x, y.
    pub fn adjoint(&self, a: &Matrix) -> Result<Matrix, AdjointError> {
        assert_eq!(a.rows(), self.dimension(), "dimension mismatch");
        assert!(a.is_square(), "operators must be square");
        if !self.gram.is_symmetric() {
            return Err(AdjointError::NonSymmetricGram);
        }
        let inv = self.gram.inverse().map_err(|e| AdjointError::SingularGram {
            size: e.size,
            rank: e.rank,
        })?;
        Ok(&(&inv * &a.transpose()) * &self.gram)
    }

    /// True iff `Aᵀ G A = G` exactly.
    pub fn is_isometry(&self, a: &Matrix) -> bool {
        assert_eq!(a.rows(), self.dimension(), "dimension mismatch");
        assert!(a.is_square(), "operators must be square");
        &(&a.transpose() * &self.gram) * a == self.gram
    }
}

/// `g(x + shift, y + shift) − g(x, y)` for the form with parameters `p`.
/// For a pure spatial shift `s⃗` the defect equals `(t_y − t_x)·(a⃗·s⃗)`, so
/// it vanishes exactly when the two events share a time component.
pub fn translation_defect(
    p: &GalileanParameters,
    shift: &FourVector,
    x: &FourVector,
    y: &FourVector,
) -> Rational {
    let g = galilean_form(p);
    assert_eq!(shift.dimension(), g.dimension(), "dimension mismatch");
    let shifted = g.evaluate(&x.add(shift), &y.add(shift));
    shifted - g.evaluate(x, y)
}

/// `(v⃗, 1)`: the 4-velocity of a worldline with spatial velocity v⃗.
pub fn four_velocity(v: &[Rational]) -> FourVector {
    let mut coords = v.to_vec();
    coords.push(Rational::one());
    FourVector::new(coords)
}

/// `(m·v⃗, m)`: the 4-vector associated to the momentum of a mass m.
pub fn four_momentum(m: &Rational, v: &[Rational]) -> FourVector {
    let mut coords: Vec<Rational> = v.iter().map(|vi| m * vi).collect();
    coords.push(m.clone());
    FourVector::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{boost_family, cayley_rotation};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_int(v)).collect()
    }

    fn event(values: &[i64]) -> FourVector {
        FourVector::new(ints(values))
    }

    #[test]
    fn galilean_form_matches_solved_family_for_n2() {
        let p = GalileanParameters::new(ints(&[4, -7]), rat(9, 2));
        let g = galilean_form(&p);
        let expected = Matrix::from_rows(vec![
            ints(&[0, 0, 4]),
            ints(&[0, 0, -7]),
            vec![rat(-4, 1), rat(7, 1), rat(9, 2)],
        ]);
        assert_eq!(*g.gram(), expected);
    }

    #[test]
    fn zero_spatial_parameter_gives_pure_time_form() {
        let p = GalileanParameters::new(ints(&[0, 0]), Rational::one());
        let g = galilean_form(&p);
        let mut expected = Matrix::zeros(3, 3);
        expected.set(2, 2, Rational::one());
        assert_eq!(*g.gram(), expected);
    }

    #[test]
    fn unit_spatial_parameter_evaluation() {
        let p = GalileanParameters::new(ints(&[1, 0, 0]), Rational::zero());
        let g = galilean_form(&p);
        assert_eq!(
            g.evaluate(&event(&[1, 0, 0, 0]), &event(&[0, 0, 0, 1])),
            Rational::one()
        );
    }

    #[test]
    fn diagonal_evaluation_is_time_squared_scaled() {
        let p = GalileanParameters::new(ints(&[3, -1, 2]), rat(7, 3));
        let g = galilean_form(&p);
        let x = FourVector::new(vec![rat(1, 2), rat(5, 1), rat(-3, 4), rat(2, 3)]);
        let t = x.time().clone();
        assert_eq!(g.evaluate(&x, &x), rat(7, 3) * &t * &t);
    }

    #[test]
    fn evaluation_is_boost_invariant() {
        let p = GalileanParameters::new(ints(&[1, 2]), rat(-5, 3));
        let g = galilean_form(&p);
        let boost = boost_family(2).evaluate(&[rat(3, 7), rat(-1, 2)]);
        let x = FourVector::new(vec![rat(1, 1), rat(2, 1), rat(3, 1)]);
        let y = FourVector::new(vec![rat(-1, 3), rat(0, 1), rat(5, 2)]);
        assert_eq!(
            g.evaluate(&x.transform(&boost), &y.transform(&boost)),
            g.evaluate(&x, &y)
        );
    }

    #[test]
    fn time_form_evaluation() {
        let mut gram = Matrix::zeros(3, 3);
        gram.set(2, 2, Rational::one());
        let g = BilinearForm::new(gram);
        assert_eq!(
            g.evaluate(&event(&[1, 2, 3]), &event(&[4, 5, 6])),
            Rational::from_int(18)
        );
    }

    #[test]
    fn split_of_galilean_form() {
        let p = GalileanParameters::new(ints(&[2, -3]), rat(5, 1));
        let g = galilean_form(&p);
        let (sym, antisym) = g.split();
        let mut expected_sym = Matrix::zeros(3, 3);
        expected_sym.set(2, 2, rat(5, 1));
        assert_eq!(*sym.gram(), expected_sym);
        let antisym_expected = galilean_form(&GalileanParameters::new(
            ints(&[2, -3]),
            Rational::zero(),
        ));
        assert_eq!(*antisym.gram(), *antisym_expected.gram());
        assert_eq!(sym.gram() + antisym.gram(), *g.gram());
    }

    #[test]
    fn split_of_symmetric_and_antisymmetric_inputs() {
        let sym_in = BilinearForm::new(Matrix::from_i64_rows(&[&[1, 2], &[2, 5]]));
        let (s, a) = sym_in.split();
        assert_eq!(*s.gram(), *sym_in.gram());
        assert!(a.gram().is_zero());

        let anti_in = BilinearForm::new(Matrix::from_i64_rows(&[&[0, 3], &[-3, 0]]));
        let (s, a) = anti_in.split();
        assert!(s.gram().is_zero());
        assert_eq!(*a.gram(), *anti_in.gram());
    }

    #[test]
    fn antisymmetric_rank_for_one_spatial_dimension() {
        let p = GalileanParameters::new(ints(&[1]), Rational::zero());
        let report = galilean_form(&p).rank_report();
        assert_eq!(report.rank, 2);
        assert!(report.nondegenerate);
        assert!(report.radical_basis.is_empty());
    }

    #[test]
    fn antisymmetric_rank_and_radical_for_three_spatial_dimensions() {
        let p = GalileanParameters::new(ints(&[1, 2, 3]), Rational::zero());
        let g = galilean_form(&p);
        let report = g.rank_report();
        assert_eq!(report.rank, 2);
        assert!(!report.nondegenerate);
        assert_eq!(report.radical_basis.len(), 2);
        for x in &report.radical_basis {
            // Radical vectors are spatial, orthogonal to a, annihilated by g.
            assert!(x.time().is_zero());
            let dot: Rational = x
                .spatial()
                .iter()
                .zip(&p.a)
                .map(|(xi, ai)| xi * ai)
                .sum();
            assert!(dot.is_zero());
            for z in [
                event(&[1, 0, 0, 0]),
                event(&[0, 1, 0, 0]),
                event(&[0, 0, 1, 0]),
                event(&[0, 0, 0, 1]),
            ] {
                assert!(g.evaluate(x, &z).is_zero());
            }
        }
    }

    #[test]
    fn full_galilean_form_has_rank_two() {
        let p = GalileanParameters::new(ints(&[1, 2, 3]), rat(7, 1));
        assert_eq!(galilean_form(&p).rank_report().rank, 2);
        let p = GalileanParameters::new(ints(&[1, 2, 3]), Rational::zero());
        assert_eq!(galilean_form(&p).rank_report().rank, 2);
    }

    #[test]
    fn adjoint_under_identity_form_is_transpose() {
        let g = BilinearForm::new(Matrix::identity(3));
        let a = Matrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 5], &[3, 0, 1]]);
        assert_eq!(g.adjoint(&a).unwrap(), a.transpose());
    }

    #[test]
    fn adjoint_under_indefinite_diagonal_form() {
        let g = BilinearForm::new(Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]));
        let a = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            g.adjoint(&a).unwrap(),
            Matrix::from_i64_rows(&[&[0, -1], &[-1, 0]])
        );
    }

    #[test]
    fn adjoint_is_an_involution() {
        let g = BilinearForm::new(Matrix::from_i64_rows(&[&[2, 1], &[1, 3]]));
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(-3, 1)],
            vec![rat(4, 5), rat(7, 6)],
        ]);
        let a_star = g.adjoint(&a).unwrap();
        assert_eq!(g.adjoint(&a_star).unwrap(), a);
    }

    #[test]
    fn adjoint_names_the_violated_hypothesis() {
        let asym = BilinearForm::new(Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]));
        assert_eq!(
            asym.adjoint(&Matrix::identity(2)),
            Err(AdjointError::NonSymmetricGram)
        );
        let singular = BilinearForm::new(Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]));
        assert_eq!(
            singular.adjoint(&Matrix::identity(2)),
            Err(AdjointError::SingularGram { size: 2, rank: 1 })
        );
    }

    #[test]
    fn boosts_are_isometries_of_the_galilean_form() {
        let p = GalileanParameters::new(ints(&[5, -2, 7]), rat(11, 4));
        let g = galilean_form(&p);
        let boost = boost_family(3).evaluate(&[rat(1, 3), rat(-4, 9), rat(2, 1)]);
        assert!(g.is_isometry(&boost));
        assert!(g.is_isometry(&Matrix::identity(4)));
    }

    #[test]
    fn planar_rotation_is_not_an_isometry_when_a_is_not_fixed() {
        let p = GalileanParameters::new(ints(&[1, 0, 0]), Rational::zero());
        let g = galilean_form(&p);
        // Exact quarter turn in the (1,2)-plane.
        let s = Matrix::from_i64_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let rotation = cayley_rotation(&s).unwrap();
        assert!(!g.is_isometry(&rotation));
    }

    #[test]
    fn translation_defect_examples() {
        let p = GalileanParameters::new(ints(&[1, 0, 0]), Rational::zero());
        // Equal time components, pure spatial shift: invariant.
        let x = event(&[3, 1, 4, 2]);
        let y = event(&[-1, 5, 9, 2]);
        let shift = event(&[7, -2, 6, 0]);
        assert!(translation_defect(&p, &shift, &x, &y).is_zero());

        // Differing times: the defect is (t_y - t_x)(a·s).
        let x = event(&[0, 0, 0, 0]);
        let y = event(&[0, 0, 0, 1]);
        let shift = event(&[1, 0, 0, 0]);
        assert_eq!(translation_defect(&p, &shift, &x, &y), Rational::one());

        let zero_shift = event(&[0, 0, 0, 0]);
        assert!(translation_defect(&p, &zero_shift, &x, &y).is_zero());
    }

    #[test]
    fn four_momentum_mass_component_is_boost_invariant() {
        let m = rat(3, 2);
        let v = vec![rat(1, 2), rat(-2, 3), rat(4, 1)];
        let momentum = four_momentum(&m, &v);
        let u = [rat(5, 7), rat(1, 9), rat(-3, 4)];
        let boosted = momentum.transform(&boost_family(3).evaluate(&u));
        assert_eq!(*boosted.time(), m);
        // Boosting the momentum is the momentum of the boosted velocity.
        let shifted_v: Vec<Rational> = v.iter().zip(&u).map(|(vi, ui)| vi + ui).collect();
        assert_eq!(boosted, four_momentum(&m, &shifted_v));
    }

    #[test]
    fn four_velocity_diagonal_evaluation_gives_a0() {
        let p = GalileanParameters::new(ints(&[2, -1]), rat(9, 5));
        let g = galilean_form(&p);
        let v = four_velocity(&[rat(8, 3), rat(-1, 6)]);
        assert_eq!(g.evaluate(&v, &v), rat(9, 5));
    }

    #[test]
    fn zero_mass_gives_zero_momentum() {
        let momentum = four_momentum(&Rational::zero(), &[rat(1, 2), rat(3, 4)]);
        assert!(momentum.coordinates().iter().all(Rational::is_zero));
    }

    #[test]
    fn time_zero_events_are_fixed_by_boosts() {
        let boost = boost_family(3).evaluate(&[rat(9, 2), rat(-7, 3), rat(1, 5)]);
        let x = event(&[4, -1, 8, 0]);
        assert_eq!(x.transform(&boost), x);
    }
}
