//! Acceptance suite: one test per top-level criterion, each printing a
//! pass/fail line. Every tolerance is pinned here, in code.

use ncriem::groupcalc::FGCalculus;
use ncriem::groupconn::classify::{classify_s3, ClassifyConfig, Condition};
use ncriem::groupconn::{FGConnection, FGMetric, S3Params};
use ncriem::matrix::{braid_defect, Mat};
use ncriem::qalg::forms::verify_3d_calculus;
use ncriem::qalg::{Gen, QPoly};
use ncriem::qconn::classical::classical_limit_check;
use ncriem::qconn::eigen::eigen_table_check;
use ncriem::qconn::levi_civita::{braided_points, discriminant, levi_civita_solve};
use ncriem::qconn::sphere::sphere_descent_check;
use ncriem::scalars::{random_point, GaussRat, QRatFn, Rat, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(n: u32, name: &str) {
    println!("criterion {n:2} ({name}): PASS");
}

fn s3_calc() -> FGCalculus<GaussRat> {
    FGCalculus::s3_standard()
}

fn det_formula(p: &S3Params<GaussRat>) -> GaussRat {
    let (a, b, c, d, e) = (&p.a, &p.b, &p.c, &p.d, &p.e);
    let t1 = a.sub(b);
    let t2 = a.add(&b.add(b));
    let t3 = e.add(&c.add(d));
    let t4 = e
        .mul(e)
        .sub(&c.mul(e))
        .sub(&d.mul(e))
        .add(&c.mul(c))
        .add(&d.mul(d))
        .sub(&c.mul(d));
    t1.mul(&t1).mul(&t2).mul(&t3.mul(&t3)).mul(&t4.mul(&t4))
}

#[test]
fn criterion_01_sigma_determinant_identity() {
    // det(sigma) = (a-b)^2 (a+2b) (e+c+d)^2 (e^2-ce-de+c^2+d^2-cd)^2 at 100
    // random exact points, zero tolerance
    let calc = s3_calc();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..100 {
        let p = S3Params::from_array(std::array::from_fn(|_| random_point(1000, &mut rng)));
        let det = FGConnection::from_s3_params(&calc, &p).sigma().det().unwrap();
        assert_eq!(det, det_formula(&p), "at {p:?}");
    }
    pass(1, "sigma determinant identity, 100 exact points");
}

#[test]
fn criterion_02_braid_families() {
    // all seven families braided at 50 samples each (exact where the family
    // is rational, 1e-10 otherwise); 100 random off-family points fail
    let cfg = ClassifyConfig {
        seed: 0,
        tolerance: 1e-10,
        family_samples: 50,
        off_family_samples: 100,
        ..Default::default()
    };
    let report = classify_s3(&[Condition::Braid], &cfg).unwrap();
    assert_eq!(report.families.len(), 7);
    for fam in &report.families {
        assert!(fam.pass, "{}: {}", fam.name, fam.witness);
    }
    assert!(report.off_family_samples.all_failed);
    pass(2, "seven braid families at 50 samples, 100 off-family refutations");
}

#[test]
fn criterion_03_torsion_free_equivalence() {
    // torsion-free <=> torsion-compatible <=> d = c = e + 1, both directions
    // at 50 exact samples each
    let calc = s3_calc();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..50 {
        let a = random_point(8, &mut rng);
        let b = random_point(8, &mut rng);
        let e = random_point(8, &mut rng);
        let c = e.add(&GaussRat::one());
        let on = FGConnection::from_s3_params(
            &calc,
            &S3Params::new(a.clone(), b.clone(), c.clone(), c.clone(), e.clone()),
        );
        assert!(on.is_torsion_free(&calc, 0.0));
        assert!(on.is_torsion_compatible(&calc, 0.0));
    }
    for _ in 0..50 {
        // an off-family point: perturb so that d = c = e + 1 fails
        let p = S3Params::from_array(std::array::from_fn(|_| random_point(8, &mut rng)));
        let on_family =
            p.c == p.d && p.c == p.e.add(&GaussRat::one());
        let conn = FGConnection::from_s3_params(&calc, &p);
        assert_eq!(conn.is_torsion_free(&calc, 0.0), on_family);
        assert_eq!(conn.is_torsion_compatible(&calc, 0.0), on_family);
    }
    pass(3, "torsion-free equivalences, 50 exact samples each direction");
}

#[test]
fn criterion_04_continuous_moduli() {
    // the angle moduli satisfy {torsion-free, star}, the r-moduli
    // additionally cotorsion-freeness, at >= 20 points including the
    // endpoints, within 1e-10
    let cfg = ClassifyConfig {
        seed: 0,
        tolerance: 1e-10,
        family_samples: 20,
        off_family_samples: 0,
        ..Default::default()
    };
    let r1 = classify_s3(&[Condition::TorsionFree, Condition::StarCompatible], &cfg).unwrap();
    assert!(r1.families.iter().all(|f| f.pass), "{:?}", r1.families[0].witness);
    let r2 = classify_s3(
        &[Condition::TorsionFree, Condition::CotorsionFree, Condition::StarCompatible],
        &cfg,
    )
    .unwrap();
    for fam in &r2.families {
        assert!(fam.pass, "{}", fam.witness);
        // the endpoint values r = 1/3 and 2/3 are in the fixed prefix
        assert!(fam.witness["points_checked"].as_u64().unwrap() >= 20);
    }
    pass(4, "continuous moduli with endpoints, residuals at 1e-10");
}

#[test]
fn criterion_05_metric_star_families() {
    let cfg = ClassifyConfig {
        seed: 0,
        tolerance: 1e-10,
        family_samples: 50,
        off_family_samples: 100,
        ..Default::default()
    };
    // the four discrete families pass exactly
    let r = classify_s3(&[Condition::Metric, Condition::StarCompatible], &cfg).unwrap();
    let named: Vec<_> = r.families.iter().filter(|f| !f.informational).collect();
    assert_eq!(named.len(), 4);
    for fam in named {
        assert!(fam.pass, "{}: {}", fam.name, fam.witness);
    }
    // adding torsion-freeness empties the moduli
    let empty = classify_s3(
        &[Condition::Metric, Condition::TorsionFree, Condition::StarCompatible],
        &cfg,
    )
    .unwrap();
    assert!(empty.passed());
    // the reference point: torsion-free, cotorsion-free, metric-preserving,
    // not star-compatible
    let calc = s3_calc();
    let gr = GaussRat::rational;
    let p = S3Params::new(gr(5, 3), gr(-1, 3), gr(2, 3), gr(2, 3), gr(-1, 3));
    let conn = FGConnection::from_s3_params(&calc, &p);
    let g = FGMetric::euclidean(3);
    assert!(conn.is_torsion_free(&calc, 0.0));
    assert!(conn.is_cotorsion_free(&calc, &g, 0.0).unwrap());
    assert!(conn.is_metric_preserving(&calc, &g, 0.0).unwrap());
    assert!(!conn.is_star_compatible(&calc, 0.0).unwrap());
    pass(5, "discrete metric+star families, empty torsion conjunction, reference point");
}

#[test]
fn criterion_06_sigma_cubed() {
    let calc = s3_calc();
    let g = FGMetric::euclidean(3);
    let gr = GaussRat::rational;
    for (sign, expect) in [(1i64, GaussRat::one()), (-1, GaussRat::from_int(-1))] {
        let p = S3Params::new(gr(sign, 1), gr(0, 1), gr(0, 1), gr(sign, 1), gr(0, 1));
        let conn = FGConnection::from_s3_params(&calc, &p);
        assert_eq!(conn.sigma_power_check(3, 0.0), Some(expect));
        assert!(conn.is_metric_preserving(&calc, &g, 0.0).unwrap());
        assert!(conn.is_star_compatible(&calc, 0.0).unwrap());
        assert!(conn.is_braided(&calc, 0.0));
    }
    pass(6, "sigma cubed is ±1 at the braided metric+star points");
}

#[test]
fn criterion_07_quantum_algebra_engine() {
    // every certified identity of the calculus holds exactly in the
    // rational-function field
    let checks = verify_3d_calculus();
    for c in &checks {
        assert!(c.pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
    }
    // the four translation-invariance identities and three star values are
    // among them
    for needle in [
        "d a_(2) . S^-1(a_(1))",
        "d b_(2) . S^-1(b_(1))",
        "d c_(2) . S^-1(c_(1))",
        "d d_(2) . S^-1(d_(1))",
        "e0* = -e0",
        "e+* = -q^-1 e-",
        "e-* = -q e+",
    ] {
        assert!(checks.iter().any(|c| c.id.contains(needle)), "missing {needle}");
    }
    // associativity on 500 random triples of degree <= 4
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let rand_word = |rng: &mut ChaCha8Rng| {
        let mut w = Vec::new();
        for _ in 0..rng.random_range(0..=4u32) {
            w.push(match rng.random_range(0..4) {
                0 => Gen::A,
                1 => Gen::B,
                2 => Gen::C,
                _ => Gen::D,
            });
        }
        QPoly::normalize(&[(QRatFn::q_int_pow(rng.random_range(-2..=2)), w)])
    };
    for _ in 0..500 {
        let x = rand_word(&mut rng);
        let y = rand_word(&mut rng);
        let z = rand_word(&mut rng);
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
    pass(7, "normal-form engine: relations, invariance identities, associativity");
}

#[test]
fn criterion_08_sphere_descent() {
    let rep = sphere_descent_check();
    assert_eq!(rep.rows.len(), 6);
    for row in &rep.rows {
        assert!(row.pass, "{}", row.element);
    }
    assert_eq!(rep.descended_n_plus, "(1+q^2)/q^4");
    assert_eq!(rep.descended_n_minus, "-1-q^2");
    assert!(rep.vertical_cancellation && rep.matches_braided_point);
    pass(8, "six vertical coefficients and the descended parameters");
}

#[test]
fn criterion_09_braided_points() {
    // braid relations exactly in the rational-function field at both points;
    // the nine-row eigenvalue table; nonzero torsion T(e0) = -q^3 e+^e-
    let points = braided_points::<QRatFn>(&QRatFn::q()).unwrap();
    for conn in &points {
        assert!(conn.is_braided(0.0));
    }
    let rows = eigen_table_check(
        &points[0],
        Some(QRatFn::q_int_pow(-2)),
        Some(QRatFn::q_int_pow(2)),
        0.0,
    )
    .unwrap();
    assert_eq!(rows.len(), 9);
    for row in &rows {
        assert!(row.pass, "{row:?}");
    }
    let t = points[0].torsion();
    assert!(t.t_plus.is_zero() && t.t_minus.is_zero());
    assert_eq!(t.t_zero, QRatFn::parse("-q^3").unwrap());
    assert!(!t.t_zero.is_zero());
    pass(9, "braided points: symbolic braid relations, eigenvalue table, torsion");
}

#[test]
fn criterion_10_levi_civita_solver() {
    // ten random draws: exactly four torsion-free points, residuals < 1e-9,
    // disc > 0; the frozen disc value; the classical root near q = 1
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..10 {
        let q = loop {
            let q = 0.5 + 1.5 * rng.random::<f64>();
            if (q - 1.0).abs() > 0.02 {
                break q;
            }
        };
        let g = [
            0.5 + 2.0 * rng.random::<f64>(),
            0.5 + 2.0 * rng.random::<f64>(),
            0.5 + 2.0 * rng.random::<f64>(),
        ];
        let rep = levi_civita_solve(q, g).unwrap();
        assert!(rep.disc > 0.0);
        assert_eq!(rep.solutions.len(), 4);
        for s in &rep.solutions {
            assert!(
                s.residuals.torsion < 1e-9 && s.residuals.metric < 1e-9 && s.residuals.star < 1e-9,
                "q = {q}, g = {g:?}: {s:?}"
            );
        }
    }
    assert_eq!(discriminant(2.0, [1.0, 1.0, 1.0]), 148.0);
    for q in [1.001, 0.999] {
        let rep = levi_civita_solve(q, [1.0, 1.0, 1.0]).unwrap();
        let root = &rep.solutions[rep.classical_root_index];
        assert!((root.n_plus - 1.5).abs() < 1e-2);
    }
    pass(10, "four solver roots at ten draws; disc 148; classical root near 3/2");
}

#[test]
fn criterion_11_classical_limit() {
    let one = Rat::new(1, 1);
    let rep = classical_limit_check(&one, &one, &one).unwrap();
    assert!(rep.solvable);
    for (name, ok) in &rep.checks {
        assert!(ok, "{name}");
    }
    let conn = rep.connection.unwrap();
    assert_eq!(conn.n_plus, "3/2");
    assert_eq!(conn.nu, "1/2");
    let two = Rat::new(2, 1);
    let rep = classical_limit_check(&one, &one, &two).unwrap();
    assert!(!rep.solvable);
    for (name, ok) in &rep.checks {
        assert!(ok, "{name}");
    }
    pass(11, "q = 1 connection exists for g++ = g-- and is empty otherwise");
}

#[test]
fn criterion_12_calculus_invariants() {
    let calc = s3_calc();
    for g in 0..6 {
        assert!(calc.d1(&calc.d0(&calc.delta(g))).is_zero_eps(0.0));
    }
    assert_eq!(calc.dim_wedge(), 4);
    assert!(braid_defect(calc.psi(), 3).unwrap().is_zero());
    let id9: Mat<GaussRat> = Mat::identity(9);
    assert_eq!(id9.sub(calc.psi()).kernel_basis().len(), 5);
    pass(12, "exhaustive d^2 = 0, wedge dimension, braid defect");
}
