//! The release gate: one test per acceptance criterion, each printing a
//! single PASS/FAIL line. Criteria 1-9 check the headline numbers of the
//! IG(2,2n) model for n in {2, 3, 4}; criterion 10 runs five randomized
//! property suites (at least 200 cases each) over the algebra kernel.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::sync::Arc;

use qcohom::algebra::{
    CoeffField, Exponent, Field, MonomialOrder, MultiPoly, PolyRing, QScalar, RatFn, Rational,
    WeightedDegree,
};
use qcohom::groebner::{buchberger, local_dim_at_origin, saturate_at_origin, Ideal};
use qcohom::gw_check::{four_point_check, FourPointStatus, SeededRng};
use qcohom::ig_model::{
    build_presentation, presentation_compat, specialize_last_var, z_count, Variant,
};
use qcohom::zerodim::{jacobian_at, local_report_at_origin, LocalStructure, QuotientAlgebra};

const GREVLEX: MonomialOrder = MonomialOrder::Grevlex;

fn criterion<F: FnOnce() + UnwindSafe>(number: usize, name: &str, body: F) {
    let result = catch_unwind(body);
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number} {name}: {verdict}");
    if let Err(payload) = result {
        resume_unwind(payload);
    }
}

fn quantum_ideal<F: QScalar>(n: usize, variant: Variant, coeff: &CoeffField) -> Ideal<F> {
    build_presentation::<F>(n, variant, coeff)
        .unwrap()
        .ideal()
        .unwrap()
}

fn quotient_dim<F: QScalar>(n: usize, variant: Variant, coeff: &CoeffField) -> usize {
    quantum_ideal::<F>(n, variant, coeff)
        .quotient_dimension(&GREVLEX)
        .unwrap()
        .expect("quantum quotient should be finite-dimensional")
}

#[test]
fn criterion_1_quotient_dimensions() {
    criterion(1, "quotient dimensions 4/12/24 in both presentations", || {
        let q = CoeffField::default_specialized();
        for (n, expected) in [(2, 4), (3, 12), (4, 24)] {
            assert_eq!(quotient_dim::<Rational>(n, Variant::SigmaQuantum, &q), expected);
            assert_eq!(quotient_dim::<Rational>(n, Variant::AbQuantum, &q), expected);
        }
    });
}

#[test]
fn criterion_2_local_structure_and_saturation() {
    criterion(2, "fat point at the origin and reduced complement", || {
        let q = CoeffField::default_specialized();
        for (n, away) in [(2usize, 3usize), (3, 10), (4, 21)] {
            let ideal = quantum_ideal::<Rational>(n, Variant::SigmaQuantum, &q);
            let report = local_report_at_origin(&ideal).unwrap();
            assert_eq!(report.local_dim, n - 1, "origin length at n={n}");
            if n >= 3 {
                assert_eq!(report.tangent_dim, 1, "tangent dimension at n={n}");
                assert_eq!(report.structure, LocalStructure::CurvilinearFatPoint(n - 1));
            } else {
                assert_eq!(report.tangent_dim, 0);
                assert_eq!(report.structure, LocalStructure::ReducedPoint);
            }

            let sat = saturate_at_origin(&ideal).unwrap();
            assert_eq!(sat.quotient_dimension(&GREVLEX).unwrap(), Some(away));
            let qa = QuotientAlgebra::new(&sat, &GREVLEX).unwrap();
            let trace = qa.trace_form().unwrap();
            assert!(trace.semisimple, "saturated algebra at n={n} must be semisimple");
            assert_eq!(trace.rank, away);
        }
    });
}

#[test]
fn criterion_3_univariate_solution_oracle() {
    criterion(3, "independent z-oracle counts 6/20/42", || {
        let q = CoeffField::default_specialized();
        for (n, ordered) in [(2usize, 6usize), (3, 20), (4, 42)] {
            let count = z_count(n).unwrap();
            assert_eq!(count.ordered_count, ordered);
            assert_eq!(count.point_count, ordered / 2);
            let ideal = quantum_ideal::<Rational>(n, Variant::SigmaQuantum, &q);
            let sat = saturate_at_origin(&ideal).unwrap();
            assert_eq!(
                sat.quotient_dimension(&GREVLEX).unwrap(),
                Some(count.point_count),
                "saturated dimension must agree with the oracle at n={n}"
            );
        }
    });
}

#[test]
fn criterion_4_trace_form_rank() {
    criterion(4, "trace rank 4/11/22 with radical of dimension n-2", || {
        let q = CoeffField::default_specialized();
        for (n, rank) in [(2usize, 4usize), (3, 11), (4, 22)] {
            let ideal = quantum_ideal::<Rational>(n, Variant::SigmaQuantum, &q);
            let qa = QuotientAlgebra::new(&ideal, &GREVLEX).unwrap();
            let trace = qa.trace_form().unwrap();
            assert_eq!(trace.rank, rank);
            assert_eq!(trace.radical_dim, n - 2);
            assert_eq!(trace.semisimple, n == 2);
        }
    });
}

fn deformed_jacobian_checks<F: QScalar>(n: usize, coeff: &CoeffField) {
    let pres = build_presentation::<F>(n, Variant::DeformedFirstOrder, coeff).unwrap();
    let nvars = pres.ring().nvars();
    let origin = vec![F::zero(); nvars];
    let jac = jacobian_at(pres.relations(), &origin).unwrap();
    assert_eq!(jac.rank(), 2 * n - 2, "Jacobian rank at n={n}");
    let kernel = jac.nullspace();
    assert_eq!(kernel.len(), 1, "kernel dimension at n={n}");
    let v = &kernel[0];
    let s2_index = 1;
    assert!(!v[s2_index].is_zero(), "kernel must involve s2 at n={n}");
    for (i, c) in v.iter().enumerate() {
        if i == s2_index || (n == 2 && i == nvars - 1) {
            continue;
        }
        assert!(c.is_zero(), "kernel coordinate {i} must vanish at n={n}");
    }
    if n >= 3 {
        assert!(v[nvars - 1].is_zero(), "kernel t-component must vanish for n={n}");
    }
}

#[test]
fn criterion_5_deformed_jacobian_regularity() {
    criterion(5, "deformed Jacobian rank 2n-2 with s2 kernel, both q-modes", || {
        for n in [2usize, 3, 4] {
            deformed_jacobian_checks::<Rational>(n, &CoeffField::default_specialized());
            deformed_jacobian_checks::<RatFn>(n, &CoeffField::Generic);
        }
    });
}

#[test]
fn criterion_6_generic_semisimplicity_of_the_family() {
    criterion(6, "all 5 seeded t-specializations stay semisimple for n in {2,3}", || {
        let q = CoeffField::default_specialized();
        for n in [2usize, 3] {
            let pres =
                build_presentation::<Rational>(n, Variant::DeformedFirstOrder, &q).unwrap();
            let mut rng = SeededRng::split(7, 0xC8);
            let mut values = Vec::new();
            while values.len() < 5 {
                let r = rng.small_rational();
                if !r.is_zero() && !values.contains(&r) {
                    values.push(r);
                }
            }
            let mut nondegenerate = 0;
            for t0 in &values {
                let rels = specialize_last_var(pres.relations(), t0).unwrap();
                let ring = rels[0].ring().clone();
                let ideal = Ideal::new(ring, rels).unwrap();
                let qa = QuotientAlgebra::new(&ideal, &GREVLEX).unwrap();
                if qa.trace_form().unwrap().semisimple {
                    nondegenerate += 1;
                }
            }
            assert!(nondegenerate >= 1, "pass threshold at n={n}");
            assert_eq!(nondegenerate, 5, "expected all seeded values to work at n={n}");
        }
    });
}

#[test]
fn criterion_7_four_point_invariants() {
    criterion(7, "four-point values match the Kronecker band for n in {3,4}", || {
        let trials = 100;
        for n in [3usize, 4] {
            let top = 2 * n - 2;
            for i in 1..=top {
                for j in i..=top {
                    let out = four_point_check(n, i, j, trials, 7).unwrap();
                    let expected = usize::from(i + j == top);
                    assert_eq!(out.value, expected, "value at n={n}, (i,j)=({i},{j})");
                    if i + j == top {
                        assert_eq!(out.trials, trials);
                        assert!(
                            out.redraws * 100 < trials,
                            "redraw rate must stay below 1% at n={n}, (i,j)=({i},{j})"
                        );
                    } else {
                        assert_eq!(out.status, FourPointStatus::VanishesByDegree);
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_8_gradedness() {
    criterion(8, "every relation homogeneous; deformation term sits at weight 2n-2", || {
        for n in [2usize, 3, 4] {
            for variant in Variant::all() {
                let pres = build_presentation::<RatFn>(n, variant, &CoeffField::Generic).unwrap();
                for rel in pres.relations() {
                    assert!(
                        pres.grading().is_homogeneous(rel).unwrap(),
                        "inhomogeneous relation in {variant} at n={n}"
                    );
                }
            }
            // the deformed relation that carries q*t must sit at weight 2n-2
            let deformed =
                build_presentation::<RatFn>(n, Variant::DeformedFirstOrder, &CoeffField::Generic)
                    .unwrap();
            let t_index = deformed.ring().nvars() - 1;
            let with_t = deformed
                .relations()
                .iter()
                .find(|r| r.terms().iter().any(|(e, _)| e.get(t_index) > 0))
                .expect("the deformed presentation must use t");
            assert_eq!(
                deformed.grading().weighted_degree(with_t).unwrap(),
                WeightedDegree::Homogeneous(2 * n as i64 - 2)
            );
        }
    });
}

#[test]
fn criterion_9_presentation_compatibility() {
    criterion(9, "Schubert-to-Chern-root substitution works with one twist", || {
        let q = CoeffField::default_specialized();
        let mut twists = Vec::new();
        for n in [2usize, 3] {
            let report = presentation_compat::<Rational>(n, &q).unwrap();
            assert!(report.classical_ok, "classical correspondence at n={n}");
            assert!(report.well_defined, "unique quantum twist at n={n}");
            twists.push(report.quantum_twist.expect("twist must be reported"));
        }
        assert_eq!(twists[0], twists[1], "the twist must not depend on n");
        assert_eq!(twists[0], -1);
    });
}

// ---- criterion 10: randomized property suites over the algebra kernel ----

const CASES: usize = 200;

fn small_rational_coeff(rng: &mut SeededRng) -> Rational {
    Rational::from_integer(rng.range(-4, 4))
}

/// A polynomial with up to `terms` random terms of total degree < `bound`;
/// constants are excluded so that random ideals keep the origin available.
fn random_tail(
    rng: &mut SeededRng,
    ring: &Arc<PolyRing>,
    bound: u32,
    terms: usize,
) -> MultiPoly<Rational> {
    let mut tail = Vec::new();
    for _ in 0..terms {
        let a = rng.range(0, bound as i64 - 1) as u32;
        let b = rng.range(0, (bound - 1 - a) as i64) as u32;
        if a + b == 0 {
            continue;
        }
        tail.push((Exponent::from_vec(vec![a, b]), small_rational_coeff(rng)));
    }
    MultiPoly::from_terms(ring, tail)
}

/// A random ideal of K[x, y] with finite quotient: two generators with pure
/// leading powers plus optionally one extra constant-free generator. The
/// origin always lies on the zero set.
fn random_zero_dim_ideal(rng: &mut SeededRng) -> Ideal<Rational> {
    let ring = PolyRing::new(vec!["x", "y"]);
    let dx = rng.range(2, 3) as u32;
    let dy = rng.range(2, 3) as u32;
    let pure_x = MultiPoly::from_terms(&ring, vec![(Exponent::from_vec(vec![dx, 0]), Rational::one())]);
    let pure_y = MultiPoly::from_terms(&ring, vec![(Exponent::from_vec(vec![0, dy]), Rational::one())]);
    let fx = pure_x.checked_add(&random_tail(rng, &ring, dx, 2)).unwrap();
    let fy = pure_y.checked_add(&random_tail(rng, &ring, dy, 2)).unwrap();
    let mut gens = vec![fx, fy];
    if rng.range(0, 1) == 1 {
        let extra = random_tail(rng, &ring, 3, 2);
        if !extra.is_zero() {
            gens.push(extra);
        }
    }
    Ideal::new(ring, gens).unwrap()
}

/// Translate the generators by a random shift, usually moving the origin off
/// the zero set while preserving every dimension count.
fn translated(rng: &mut SeededRng, ideal: &Ideal<Rational>) -> Ideal<Rational> {
    let ring = ideal.ring().clone();
    let shift_x = Rational::from_integer(rng.range(-2, 2));
    let shift_y = Rational::from_integer(rng.range(-2, 2));
    let x = MultiPoly::from_terms(&ring, vec![(Exponent::from_vec(vec![1, 0]), Rational::one())]);
    let y = MultiPoly::from_terms(&ring, vec![(Exponent::from_vec(vec![0, 1]), Rational::one())]);
    let images = [
        x.checked_add(&MultiPoly::constant(&ring, shift_x)).unwrap(),
        y.checked_add(&MultiPoly::constant(&ring, shift_y)).unwrap(),
    ];
    let moved: Vec<_> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&images).unwrap())
        .collect();
    Ideal::new(ring, moved).unwrap()
}

#[test]
fn criterion_10_property_suites() {
    criterion(10, "five randomized kernel property suites, 200 cases each", || {
        // reduced bases are fixed points of the reduction
        let mut rng = SeededRng::new(101);
        for case in 0..CASES {
            let ideal = random_zero_dim_ideal(&mut rng);
            let order = if case % 2 == 0 { MonomialOrder::Grevlex } else { MonomialOrder::Lex };
            let gb = buchberger(ideal.generators(), &order).unwrap();
            let again = buchberger(gb.basis(), &order).unwrap();
            assert_eq!(gb.basis(), again.basis(), "idempotence case {case}");
        }

        // the quotient dimension does not depend on the monomial order
        let mut rng = SeededRng::new(202);
        for case in 0..CASES {
            let ideal = random_zero_dim_ideal(&mut rng);
            let reference = ideal.quotient_dimension(&GREVLEX).unwrap();
            for order in [
                MonomialOrder::Lex,
                MonomialOrder::WeightedGrevlex(vec![1, 2]),
                MonomialOrder::WeightedGrevlex(vec![3, 1]),
            ] {
                assert_eq!(
                    ideal.quotient_dimension(&order).unwrap(),
                    reference,
                    "order invariance case {case}"
                );
            }
        }

        // multiplication matrices respect products
        let mut rng = SeededRng::new(303);
        for case in 0..CASES {
            let ideal = random_zero_dim_ideal(&mut rng);
            let qa = QuotientAlgebra::new(&ideal, &GREVLEX).unwrap();
            let f = random_tail(&mut rng, ideal.ring(), 3, 2);
            let g = random_tail(&mut rng, ideal.ring(), 3, 2);
            let product = f.checked_mul(&g).unwrap();
            let lhs = qa.mult_matrix(&product).unwrap();
            let rhs = qa.mult_matrix(&f).unwrap().mul(&qa.mult_matrix(&g).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "multiplicativity case {case}");
        }

        // the trace-form rank is independent of the monomial basis
        let mut rng = SeededRng::new(404);
        for case in 0..CASES {
            let ideal = random_zero_dim_ideal(&mut rng);
            let grevlex_rank = QuotientAlgebra::new(&ideal, &GREVLEX)
                .unwrap()
                .trace_form()
                .unwrap()
                .rank;
            let lex_rank = QuotientAlgebra::new(&ideal, &MonomialOrder::Lex)
                .unwrap()
                .trace_form()
                .unwrap()
                .rank;
            assert_eq!(grevlex_rank, lex_rank, "trace-form invariance case {case}");
        }

        // multiplicity at the origin plus the saturated dimension is the total
        let mut rng = SeededRng::new(505);
        for case in 0..CASES {
            let base = random_zero_dim_ideal(&mut rng);
            let ideal = if case % 2 == 0 { base } else { translated(&mut rng, &base) };
            let total = ideal
                .quotient_dimension(&GREVLEX)
                .unwrap()
                .expect("random ideals are zero-dimensional");
            let local = local_dim_at_origin(&ideal).unwrap();
            let away = saturate_at_origin(&ideal)
                .unwrap()
                .quotient_dimension(&GREVLEX)
                .unwrap()
                .expect("saturation preserves finiteness");
            assert_eq!(local + away, total, "additivity case {case}");
        }
    });
}
