//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Everything here is exact equality over the rationals; there are no
//! tolerances anywhere. Random instances come from fixed seeds, so the suite
//! is deterministic. Run with `cargo test -p galinv-cli --test acceptance`
//! (add `-- --nocapture` to see the per-criterion lines).

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use galinv::exact::{Matrix, Rational};
use galinv::forms::{
    four_momentum, galilean_form, translation_defect, BilinearForm, FourVector,
    GalileanParameters,
};
use galinv::groups::boost_family;
use galinv::groups::rotation_algebra_generators;
use galinv::invariants::{solve_invariant_forms, InvarianceProblem};
use galinv::poisson::{observable_vars, PoissonStructure};
use galinv::poly::{Monomial, Polynomial};
use galinv::report::{run_verification, CheckStatus};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(-6..=6), rng.random_range(1..=4))
}

fn rand_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rand_rational(rng)).collect()
}

fn rand_nonzero_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    loop {
        let v = rand_vector(rng, len);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

fn rand_event(rng: &mut ChaCha8Rng, d: usize) -> FourVector {
    FourVector::new(rand_vector(rng, d))
}

fn rand_polynomial(rng: &mut ChaCha8Rng, vars: &[String], max_degree: u32) -> Polynomial {
    let term_count = rng.random_range(1..=4);
    let mut terms = Vec::new();
    for _ in 0..term_count {
        let mut exps = vec![0u32; vars.len()];
        for _ in 0..max_degree {
            let slot = rng.random_range(0..=vars.len());
            if slot < vars.len() {
                exps[slot] += 1;
            }
        }
        terms.push((Monomial::new(exps), rand_rational(rng)));
    }
    Polynomial::from_terms(vars, terms)
}

fn antisym_gram(a: &[Rational]) -> Matrix {
    galilean_form(&GalileanParameters::new(a.to_vec(), Rational::zero()))
        .gram()
        .clone()
}

fn unit_form(n: usize, axis: usize) -> Matrix {
    let mut a = vec![Rational::zero(); n];
    a[axis] = Rational::one();
    antisym_gram(&a)
}

fn time_form(d: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    m.set(d - 1, d - 1, Rational::one());
    m
}

fn status_of(n: usize, claim_id: &str) -> CheckStatus {
    run_verification(n)
        .checks
        .into_iter()
        .find(|c| c.claim_id == claim_id)
        .unwrap_or_else(|| panic!("registry is missing {claim_id}"))
        .status
}

fn row_space(mats: &[Matrix]) -> Matrix {
    let d2 = mats[0].rows() * mats[0].cols();
    let stacked = Matrix::from_fn(mats.len(), d2, |r, c| {
        mats[r].get(c / mats[r].cols(), c % mats[r].cols()).clone()
    });
    stacked.rref().0
}

#[test]
fn criterion_01_solver_reproduces_flat_solution_space() {
    let basis = solve_invariant_forms(&InvarianceProblem::new(3, vec![boost_family(2)]));
    assert_eq!(basis.len(), 3);
    // Independent description of the solution space: spatial block zero,
    // antisymmetric space-time block, free time-time entry.
    let described = vec![unit_form(2, 0), unit_form(2, 1), time_form(3)];
    assert_eq!(basis.forms(), &described[..]);
    assert_eq!(row_space(basis.forms()), row_space(&described));
    println!(
        "acceptance criterion 1: PASS — boosts-only n=2 gives the 3-dimensional family with zero spatial block"
    );
}

#[test]
fn criterion_02_basis_round_trips_through_unit_parameters() {
    let basis = solve_invariant_forms(&InvarianceProblem::new(4, vec![boost_family(3)]));
    assert_eq!(basis.len(), 4);
    for (i, form) in basis.forms().iter().enumerate() {
        let expected = if i < 3 {
            let mut a = vec![Rational::zero(); 3];
            a[i] = Rational::one();
            galilean_form(&GalileanParameters::new(a, Rational::zero()))
        } else {
            galilean_form(&GalileanParameters::new(
                vec![Rational::zero(); 3],
                Rational::one(),
            ))
        };
        assert_eq!(form, expected.gram());
    }
    println!(
        "acceptance criterion 2: PASS — boosts-only n=3 gives dimension 4, each basis form a unit-parameter instance"
    );
}

#[test]
fn criterion_03_rotations_collapse_basis_and_are_flagged() {
    let mut constraints = vec![boost_family(3)];
    constraints.extend(rotation_algebra_generators(3));
    let basis = solve_invariant_forms(&InvarianceProblem::new(4, constraints));
    assert_eq!(basis.len(), 1);
    assert_eq!(basis.forms()[0], time_form(4));
    assert_eq!(
        status_of(3, "abstract-rotation-invariance"),
        CheckStatus::Discrepancy
    );
    println!(
        "acceptance criterion 3: PASS — adding rotations collapses the basis to span{{E_tt}}; DISCREPANCY recorded"
    );
}

#[test]
fn criterion_04_antisymmetric_rank_audit() {
    let mut r = rng(0x04);
    for n in [2usize, 3] {
        for _ in 0..20 {
            let a = rand_nonzero_vector(&mut r, n);
            let report = BilinearForm::new(antisym_gram(&a)).rank_report();
            assert_eq!(report.rank, 2);
            assert_eq!(report.radical_basis.len(), n - 1);
            assert!(!report.nondegenerate);
        }
        assert_eq!(
            status_of(n, "prop4-antisymmetric-nondegeneracy"),
            CheckStatus::Discrepancy
        );
    }
    for _ in 0..20 {
        let a = rand_nonzero_vector(&mut r, 1);
        let report = BilinearForm::new(antisym_gram(&a)).rank_report();
        assert_eq!(report.rank, 2);
        assert!(report.nondegenerate);
    }
    assert_eq!(
        status_of(1, "prop4-antisymmetric-nondegeneracy"),
        CheckStatus::Pass
    );
    println!(
        "acceptance criterion 4: PASS — antisymmetric part has rank 2 and radical dimension n-1; nondegenerate only for n=1; DISCREPANCY recorded for n ≥ 2"
    );
}

#[test]
fn criterion_05_pseudo_inverse_matches_displayed_matrix() {
    let mut r = rng(0x05);
    for _ in 0..20 {
        let a = rand_nonzero_vector(&mut r, 3);
        let gram = antisym_gram(&a);
        let pinv = gram.pseudo_inverse();
        let norm: Rational = a.iter().map(|x| x * x).sum();
        let mut expected = Matrix::zeros(4, 4);
        for (i, ai) in a.iter().enumerate() {
            expected.set(i, 3, -&(ai / &norm));
            expected.set(3, i, ai / &norm);
        }
        assert_eq!(pinv, expected);
        let mx = &gram * &pinv;
        let xm = &pinv * &gram;
        assert_eq!(&mx * &gram, gram);
        assert_eq!(&xm * &pinv, pinv);
        assert_eq!(mx, mx.transpose());
        assert_eq!(xm, xm.transpose());
    }
    println!(
        "acceptance criterion 5: PASS — pseudo-inverse equals [[0, -a/|a|²], [aᵀ/|a|², 0]] with all four Penrose conditions, 20 random a"
    );
}

#[test]
fn criterion_06_bracket_table_against_independent_right_hand_sides() {
    let mut r = rng(0x06);
    let n = 3;
    let vars = observable_vars(n);
    for _ in 0..50 {
        let a = rand_nonzero_vector(&mut r, n);
        let p = GalileanParameters::new(a.clone(), Rational::zero());
        let s = PoissonStructure::from_form(&galilean_form(&p), Rational::new(1, 4)).unwrap();
        let norm4 = Rational::from_int(4) * p.a_norm_squared();
        let t = Polynomial::variable(&vars, n);
        for i in 0..n {
            let xi = Polynomial::variable(&vars, i);
            assert_eq!(
                s.bracket(&t, &xi),
                Polynomial::constant(&vars, &a[i] / &norm4)
            );
            for j in 0..n {
                let xj = Polynomial::variable(&vars, j);
                assert!(s.bracket(&xi, &xj).is_zero());
            }
        }
        let f = rand_polynomial(&mut r, &vars, 3);
        let mut t_f = Polynomial::zero(&vars);
        for (i, ai) in a.iter().enumerate() {
            t_f = t_f.add(&f.partial(i).scale(&(ai / &norm4)));
        }
        assert_eq!(s.bracket(&t, &f), t_f);
        for i in 0..n {
            let xi = Polynomial::variable(&vars, i);
            assert_eq!(
                s.bracket(&xi, &f),
                f.partial(n).scale(&(-&(&a[i] / &norm4)))
            );
        }
    }
    println!(
        "acceptance criterion 6: PASS — bracket table and {{t,f}}, {{x^i,f}} laws hold exactly for 50 random observables"
    );
}

#[test]
fn criterion_07_jacobi_and_leibniz_defects_vanish() {
    let mut r = rng(0x07);
    let mut triples = 0;
    for n in [1usize, 2, 3] {
        let vars = observable_vars(n);
        for _ in 0..34 {
            let a = rand_nonzero_vector(&mut r, n);
            let p = GalileanParameters::new(a, Rational::zero());
            let s = PoissonStructure::from_form_default(&galilean_form(&p)).unwrap();
            let f = rand_polynomial(&mut r, &vars, 3);
            let g = rand_polynomial(&mut r, &vars, 3);
            let h = rand_polynomial(&mut r, &vars, 3);
            assert!(s.jacobi_defect(&f, &g, &h).is_zero());
            assert!(s.leibniz_defect(&f, &g, &h).is_zero());
            triples += 1;
        }
    }
    assert!(triples >= 100);
    println!(
        "acceptance criterion 7: PASS — Jacobi and Leibniz defects are the zero polynomial on {triples} random triples"
    );
}

fn rand_symmetric_invertible(r: &mut ChaCha8Rng, d: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = rand_rational(r);
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        if m.rank() == d {
            return m;
        }
    }
}

fn rand_isometry_of(r: &mut ChaCha8Rng, g: &Matrix) -> Matrix {
    let d = g.rows();
    let id = Matrix::identity(d);
    let g_inv = g.inverse().unwrap();
    loop {
        let mut s = Matrix::zeros(d, d);
        for i in 0..d {
            for j in (i + 1)..d {
                let v = rand_rational(r);
                s.set(i, j, v.clone());
                s.set(j, i, -&v);
            }
        }
        let t = &g_inv * &s;
        let minus = &id - &t;
        let plus = &id + &t;
        if let (Ok(minus_inv), Ok(_)) = (minus.inverse(), plus.inverse()) {
            return &minus_inv * &plus;
        }
    }
}

#[test]
fn criterion_08_isometry_laws() {
    let mut r = rng(0x08);
    let n = 3;
    let basis = solve_invariant_forms(&InvarianceProblem::new(n + 1, vec![boost_family(n)]));
    let family = boost_family(n);
    for _ in 0..50 {
        let boost = family.evaluate(&rand_vector(&mut r, n));
        for form in basis.forms() {
            assert!(BilinearForm::new(form.clone()).is_isometry(&boost));
        }
    }
    for _ in 0..10 {
        let gram = rand_symmetric_invertible(&mut r, 4);
        let form = BilinearForm::new(gram.clone());
        let a = Matrix::from_fn(4, 4, |_, _| rand_rational(&mut r));
        let a_star = form.adjoint(&a).unwrap();
        assert_eq!(form.adjoint(&a_star).unwrap(), a);
        assert_eq!(
            form.is_isometry(&a),
            &a_star * &a == Matrix::identity(4)
        );
        let iso = rand_isometry_of(&mut r, &gram);
        assert!(form.is_isometry(&iso));
        assert_eq!(
            &form.adjoint(&iso).unwrap() * &iso,
            Matrix::identity(4)
        );
    }
    println!(
        "acceptance criterion 8: PASS — 50 random boosts preserve every solved form; A** = A and isometry ⇔ A*A = Id exactly"
    );
}

#[test]
fn criterion_09_translation_defect_formula() {
    let mut r = rng(0x09);
    let n = 3;
    for _ in 0..50 {
        let p = GalileanParameters::new(rand_nonzero_vector(&mut r, n), rand_rational(&mut r));
        let x = rand_event(&mut r, n + 1);
        let y = rand_event(&mut r, n + 1);
        let mut shift_coords = rand_vector(&mut r, n);
        shift_coords.push(Rational::zero());
        let shift = FourVector::new(shift_coords);
        let a_dot_s: Rational = p
            .a
            .iter()
            .zip(shift.spatial())
            .map(|(a, s)| a * s)
            .sum();
        let expected = (y.time() - x.time()) * a_dot_s;
        assert_eq!(translation_defect(&p, &shift, &x, &y), expected);

        // Same instance with the times forced equal: the defect vanishes.
        let mut yc = y.coordinates().to_vec();
        let last = yc.len() - 1;
        yc[last] = x.time().clone();
        let y_matched = FourVector::new(yc);
        assert!(translation_defect(&p, &shift, &x, &y_matched).is_zero());
    }
    println!(
        "acceptance criterion 9: PASS — spatial-shift defect equals (t_y - t_x)(a·s) on 50 instances and vanishes at equal times"
    );
}

#[test]
fn criterion_10_momentum_and_time_zero_support() {
    let mut r = rng(0x10);
    let n = 3;
    let family = boost_family(n);
    for _ in 0..50 {
        let p = GalileanParameters::new(rand_nonzero_vector(&mut r, n), rand_rational(&mut r));
        let g = galilean_form(&p);
        let w = rand_event(&mut r, n + 1);
        assert_eq!(g.evaluate(&w, &w), &p.a0 * w.time() * w.time());

        let boost = family.evaluate(&rand_vector(&mut r, n));
        let mut coords = rand_vector(&mut r, n);
        coords.push(Rational::zero());
        let time_zero = FourVector::new(coords);
        assert_eq!(time_zero.transform(&boost), time_zero);

        let mass = rand_rational(&mut r);
        let momentum = four_momentum(&mass, &rand_vector(&mut r, n));
        assert_eq!(*momentum.transform(&boost).time(), mass);
    }
    println!(
        "acceptance criterion 10: PASS — diagonal law g(w,w) = a0 t², time-zero events fixed, mass component boost-invariant"
    );
}

#[test]
fn criterion_11_verify_paper_output_is_byte_identical() {
    let binary = env!("CARGO_BIN_EXE_galinv");
    let run = || {
        Command::new(binary)
            .args(["verify-paper", "--dim", "3", "--json"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert!(second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
    println!(
        "acceptance criterion 11: PASS — repeated verify-paper --dim 3 --json runs are byte-identical"
    );
}
