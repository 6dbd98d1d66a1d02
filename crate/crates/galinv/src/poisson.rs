//! The Poisson structure carried by the antisymmetric part of a
//! boost-invariant form.
//!
//! For n ≥ 2 spatial dimensions that part is singular, so its "inverse" is
//! taken in the Moore–Penrose sense; on the boost-invariant family the
//! pseudo-inverse coincides entrywise with the closed-form block
//! `[[0, −a⃗/|a⃗|²], [a⃗ᵀ/|a⃗|², 0]]`, and the resulting constant bivector
//! defines a genuine Poisson bracket (antisymmetric, Leibniz, Jacobi) on
//! polynomial observables.
//!
//! Observables live over the coordinates `x1..xn, t` with time stored last;
//! the time derivative is the partial with respect to the final variable.

use thiserror::Error;

use crate::exact::{Matrix, Rational};
use crate::forms::BilinearForm;
use crate::poly::Polynomial;

/// A constant antisymmetric contravariant bivector plus the convention
/// factor it was scaled by; evaluates Poisson brackets of observables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    bivector: Matrix,
    convention_factor: Rational,
    observable_vars: Vec<String>,
}

/// A polynomial vector field: one component per coordinate, the coefficient
/// of `∂_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    components: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Applies the field to an observable: `Σ_ν X^ν ∂_ν g`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(g.vars());
        for (nu, component) in self.components.iter().enumerate() {
            acc = acc.add(&component.mul(&g.partial(nu)));
        }
        acc
    }
}

/// Why [`PoissonStructure::from_form`] rejected its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PoissonError {
    #[error("the zero form induces no Poisson structure")]
    ZeroForm,
    #[error("the gram matrix must be exactly antisymmetric")]
    NotAntisymmetric,
}

/// Observable variable names `x1..xn, t` for n spatial dimensions.
pub fn observable_vars(n: usize) -> Vec<String> {
    let mut vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars.push("t".to_string());
    vars
}

impl PoissonStructure {
    /// Builds the structure `π = κ · G⁺` from an antisymmetric Gram matrix.
    /// The default convention factor κ = 1/4 reproduces the closed bracket
    /// formula `{f, g} = (a⃗/4|a⃗|²)·(∂_t f ∇g − ∂_t g ∇f)` on the
    /// boost-invariant family.
    pub fn from_form(antisym: &BilinearForm, kappa: Rational) -> Result<Self, PoissonError> {
        let gram = antisym.gram();
        if gram.is_zero() {
            return Err(PoissonError::ZeroForm);
        }
        if !gram.is_antisymmetric() {
            return Err(PoissonError::NotAntisymmetric);
        }
        let bivector = gram.pseudo_inverse().scale(&kappa);
        assert!(
            bivector.is_antisymmetric(),
            "pseudo-inverse of an antisymmetric matrix is antisymmetric"
        );
        Ok(PoissonStructure {
            bivector,
            convention_factor: kappa,
            observable_vars: observable_vars(antisym.dimension() - 1),
        })
    }

    /// Default convention factor 1/4.
    pub fn from_form_default(antisym: &BilinearForm) -> Result<Self, PoissonError> {
        Self::from_form(antisym, Rational::new(1, 4))
    }

    pub fn dimension(&self) -> usize {
        self.bivector.rows()
    }

    pub fn bivector(&self) -> &Matrix {
        &self.bivector
    }

    pub fn convention_factor(&self) -> &Rational {
        &self.convention_factor
    }

    /// The observable ring variables, `x1..xn` then `t`.
    pub fn observable_vars(&self) -> &[String] {
        &self.observable_vars
    }

    /// Parses an observable over this structure's coordinate ring.
    pub fn parse_observable(
        &self,
        text: &str,
    ) -> Result<Polynomial, crate::poly::PolyParseError> {
        Polynomial::parse(text, &self.observable_vars)
    }

    fn assert_ring(&self, f: &Polynomial) {
        assert_eq!(
            f.vars(),
            &self.observable_vars[..],
            "observable ring mismatch"
        );
    }

    /// `{f, g} = Σ_{μν} π^{μν} ∂_μ f ∂_ν g`, exactly.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.assert_ring(f);
        self.assert_ring(g);
        let d = self.dimension();
        let partials_f: Vec<Polynomial> = (0..d).map(|mu| f.partial(mu)).collect();
        let partials_g: Vec<Polynomial> = (0..d).map(|nu| g.partial(nu)).collect();
        let mut acc = Polynomial::zero(&self.observable_vars);
        for mu in 0..d {
            if partials_f[mu].is_zero() {
                continue;
            }
            for nu in 0..d {
                let coeff = self.bivector.get(mu, nu);
                if coeff.is_zero() || partials_g[nu].is_zero() {
                    continue;
                }
                acc = acc.add(&partials_f[mu].mul(&partials_g[nu]).scale(coeff));
            }
        }
        acc
    }

    /// The Hamiltonian field of f, with components `X_f^ν = Σ_μ π^{μν} ∂_μ f`,
    /// so that `{f, g} = X_f(g)` for every observable g.
    pub fn hamiltonian_field(&self, f: &Polynomial) -> PolyVectorField {
        self.assert_ring(f);
        let d = self.dimension();
        let partials_f: Vec<Polynomial> = (0..d).map(|mu| f.partial(mu)).collect();
        let components = (0..d)
            .map(|nu| {
                let mut acc = Polynomial::zero(&self.observable_vars);
                for (mu, pf) in partials_f.iter().enumerate() {
                    let coeff = self.bivector.get(mu, nu);
                    if !coeff.is_zero() && !pf.is_zero() {
                        acc = acc.add(&pf.scale(coeff));
                    }
                }
                acc
            })
            .collect();
        PolyVectorField { components }
    }

    /// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`; identically zero for constant
    /// bivectors.
    pub fn jacobi_defect(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        h: &Polynomial,
    ) -> Polynomial {
        let fgh = self.bracket(f, &self.bracket(g, h));
        let ghf = self.bracket(g, &self.bracket(h, f));
        let hfg = self.bracket(h, &self.bracket(f, g));
        fgh.add(&ghf).add(&hfg)
    }

    /// `{f, g·h} − g·{f,h} − {f,g}·h`; identically zero since the bracket is
    /// a first-order derivation in each slot.
    pub fn leibniz_defect(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        h: &Polynomial,
    ) -> Polynomial {
        self.bracket(f, &g.mul(h))
            .sub(&g.mul(&self.bracket(f, h)))
            .sub(&self.bracket(f, g).mul(h))
    }
}
