//! Sparse multivariate polynomial ring over [`Rational`].
//!
//! Polynomials serve two roles: parametric entries of group elements (over
//! parameters `v1..vn`) and observables for the Poisson bracket (over
//! coordinates `x1..xn, t`, time stored last). The variable list is fixed per
//! polynomial and operations require both operands to share it.
//!
//! Terms are kept in a map ordered by graded-lexicographic monomial order;
//! formatting iterates that order descending, so printed output is canonical
//! and bit-reproducible.

mod parse;

pub use parse::PolyParseError;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{Matrix, Rational};

/// Exponent vector of a single monomial; one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(var_count: usize) -> Self {
        Monomial(vec![0; var_count])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic order: total degree first, then the exponent
    /// vector lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate polynomial with rational coefficients.
///
/// Invariant: no stored coefficient is zero, so the zero polynomial has an
/// empty term map and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &[String]) -> Self {
        Polynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], value: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !value.is_zero() {
            p.terms.insert(Monomial::constant(vars.len()), value);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// The polynomial `vars[index]`.
    pub fn variable(vars: &[String], index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::new(exps), Rational::one());
        p
    }

    pub fn from_terms(vars: &[String], terms: Vec<(Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), vars.len(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Parses `text` over the given variables; see the crate-level grammar.
    pub fn parse(text: &str, vars: &[String]) -> Result<Self, PolyParseError> {
        parse::parse_polynomial(text, vars)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in graded-lexicographic descending order, the same order the
    /// formatter prints them in.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert_eq!(
            self.vars, other.vars,
            "polynomial variable lists differ: {:?} vs {:?}",
            self.vars, other.vars
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps = ma
                    .exponents()
                    .iter()
                    .zip(mb.exponents())
                    .map(|(a, b)| a + b)
                    .collect();
                out.add_term(Monomial::new(exps), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        if k.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * k);
        }
        out
    }

    /// Formal partial derivative with respect to `vars[index]`.
    pub fn partial(&self, index: usize) -> Polynomial {
        assert!(index < self.vars.len(), "variable index out of range");
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] = e - 1;
            out.add_term(Monomial::new(exps), c.mul_usize(e as usize));
        }
        out
    }

    /// Exact evaluation at a point; `point.len()` must equal the variable count.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(
            point.len(),
            self.vars.len(),
            "evaluation point length must equal variable count"
        );
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (value, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term *= value;
                }
            }
            acc += &term;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// Deterministic graded-lex descending term order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_constant() {
                write!(f, "{abs}")?;
            } else {
                let mut wrote_factor = false;
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                    wrote_factor = true;
                }
                for (name, &e) in self.vars.iter().zip(m.exponents()) {
                    if e == 0 {
                        continue;
                    }
                    if wrote_factor {
                        write!(f, "*")?;
                    }
                    wrote_factor = true;
                    if e == 1 {
                        write!(f, "{name}")?;
                    } else {
                        write!(f, "{name}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dense rectangular matrix of polynomials over a shared variable list.
///
/// Used for parametric group elements and the symbolic products that enforce
/// the invariance identity for all parameter values at once.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vec<String>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        vars: &[String],
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        assert!(rows > 0 && cols > 0);
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let p = f(r, c);
                assert_eq!(p.vars(), vars, "entry ring mismatch");
                entries.push(p);
            }
        }
        PolyMatrix {
            rows,
            cols,
            vars: vars.to_vec(),
            entries,
        }
    }

    /// Lifts a constant rational matrix into the polynomial ring.
    pub fn from_constant(m: &Matrix, vars: &[String]) -> Self {
        PolyMatrix::from_fn(m.rows(), m.cols(), vars, |r, c| {
            Polynomial::constant(vars, m.get(r, c).clone())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, &self.vars, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.vars, rhs.vars, "ring mismatch");
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, &self.vars, |r, c| {
            let mut acc = Polynomial::zero(&self.vars);
            for k in 0..self.cols {
                acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.vars, rhs.vars, "ring mismatch");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        PolyMatrix::from_fn(self.rows, self.cols, &self.vars, |r, c| {
            self.get(r, c).sub(rhs.get(r, c))
        })
    }

    /// Evaluates every entry at `point`, producing a rational matrix.
    pub fn eval(&self, point: &[Rational]) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).eval(point))
    }

    /// Flattens the matrix into `(position, monomial, coefficient)` triples in
    /// deterministic order: positions row-major, monomials in the ring's term
    /// order. The invariants module turns identities that must hold for all
    /// parameter values into linear systems with this.
    pub fn coefficient_map(&self) -> Vec<((usize, usize), Monomial, Rational)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                for (m, coeff) in self.get(r, c).terms() {
                    out.push(((r, c), m.clone(), coeff.clone()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn obs() -> Vec<String> {
        vars(&["x1", "x2", "x3", "t"])
    }

    #[test]
    fn parse_single_variable() {
        let p = Polynomial::parse("t", &obs()).unwrap();
        assert_eq!(p, Polynomial::variable(&obs(), 3));
    }

    #[test]
    fn parse_two_term_polynomial() {
        let p = Polynomial::parse("3/2*x1^2*t - x2", &obs()).unwrap();
        assert_eq!(p.term_count(), 2);
        assert_eq!(
            p.coefficient(&Monomial::new(vec![2, 0, 0, 1])),
            Rational::new(3, 2)
        );
        assert_eq!(
            p.coefficient(&Monomial::new(vec![0, 1, 0, 0])),
            Rational::from_int(-1)
        );
    }

    #[test]
    fn cancellation_yields_zero_polynomial() {
        let p = Polynomial::parse("x1 - x1", &obs()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn parse_reports_position_and_unknown_variables() {
        let err = Polynomial::parse("x1 + ", &obs()).unwrap_err();
        assert!(err.to_string().contains("position"));
        let err = Polynomial::parse("x1 + y", &obs()).unwrap_err();
        assert!(err.to_string().contains("y"));
    }

    #[test]
    fn add_and_mul_identities() {
        let f = Polynomial::parse("x1^2 + 2*t", &obs()).unwrap();
        assert_eq!(f.add(&Polynomial::zero(&obs())), f);
        assert_eq!(f.mul(&Polynomial::one(&obs())), f);
    }

    #[test]
    fn difference_of_squares() {
        let a = Polynomial::parse("x1 + t", &obs()).unwrap();
        let b = Polynomial::parse("x1 - t", &obs()).unwrap();
        let expected = Polynomial::parse("x1^2 - t^2", &obs()).unwrap();
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    #[should_panic(expected = "variable lists differ")]
    fn ring_mismatch_panics() {
        let a = Polynomial::one(&obs());
        let b = Polynomial::one(&vars(&["v1", "v2"]));
        let _ = a.add(&b);
    }

    #[test]
    fn partial_derivative_examples() {
        // d/dt of (a0 * t^2) with a0 = 7/3.
        let f = Polynomial::parse("7/3*t^2", &obs()).unwrap();
        assert_eq!(f.partial(3), Polynomial::parse("14/3*t", &obs()).unwrap());

        let g = Polynomial::parse("x1^2*x2", &obs()).unwrap();
        assert_eq!(g.partial(0), Polynomial::parse("2*x1*x2", &obs()).unwrap());

        let c = Polynomial::parse("5", &obs()).unwrap();
        assert!(c.partial(2).is_zero());
    }

    #[test]
    fn eval_examples() {
        let f = Polynomial::parse("x1^2 + t", &obs()).unwrap();
        let point = vec![
            Rational::from_int(2),
            Rational::from_int(-1),
            Rational::from_int(9),
            Rational::from_int(3),
        ];
        assert_eq!(f.eval(&point), Rational::from_int(7));
        assert_eq!(Polynomial::zero(&obs()).eval(&point), Rational::zero());

        let origin = vec![Rational::zero(); 4];
        let g = Polynomial::parse("x1*x2 + 5/2", &obs()).unwrap();
        assert_eq!(g.eval(&origin), Rational::new(5, 2));
    }

    #[test]
    fn display_is_graded_lex_descending_and_round_trips() {
        let f = Polynomial::parse("x2 - 3*t^2 + x1^2*t + 1/2", &obs()).unwrap();
        let text = f.to_string();
        assert_eq!(text, "x1^2*t - 3*t^2 + x2 + 1/2");
        assert_eq!(Polynomial::parse(&text, &obs()).unwrap(), f);

        let neg = Polynomial::parse("-x1 + t", &obs()).unwrap();
        assert_eq!(neg.to_string(), "-x1 + t");
        assert_eq!(Polynomial::parse(&neg.to_string(), &obs()).unwrap(), neg);

        assert_eq!(Polynomial::zero(&obs()).to_string(), "0");
    }

    #[test]
    fn coefficient_map_of_constant_matrix() {
        let ring = vars(&["v1"]);
        let m = Matrix::from_i64_rows(&[&[1, 0], &[0, 2]]);
        let lifted = PolyMatrix::from_constant(&m, &ring);
        let triples = lifted.coefficient_map();
        assert_eq!(triples.len(), 2);
        assert_eq!(triples[0].0, (0, 0));
        assert!(triples[0].1.is_constant());
        assert_eq!(triples[0].2, Rational::one());
        assert_eq!(triples[1].0, (1, 1));
        assert_eq!(triples[1].2, Rational::from_int(2));
    }

    #[test]
    fn coefficient_map_of_zero_matrix_is_empty() {
        let ring = vars(&["v1", "v2"]);
        let z = PolyMatrix::from_constant(&Matrix::zeros(2, 2), &ring);
        assert!(z.coefficient_map().is_empty());
    }
}
