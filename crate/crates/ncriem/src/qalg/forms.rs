//! The 3D first-order calculus on the quantum group: 1-forms in left-module
//! normal form x+ e+ + x0 e0 + x- e-, the exterior derivative, the wedge into
//! the three-dimensional space of 2-forms, and the star operation on forms.
//!
//! Commutation: e± f = tw1(f) e±, e0 f = tw2(f) e0 where tw_k scales a
//! monomial by q^(k * weight). Wedge relations: e± ^ e± = e0 ^ e0 = 0,
//! q^2 e+ ^ e- + e- ^ e+ = 0, e0 ^ e± + q^(±4) e± ^ e0 = 0.

use serde::{Deserialize, Serialize};

use super::{neg_one, parse_qpoly, Gen, QParseError, QPoly, DEFAULT_DEGREE_CAP};
use crate::scalars::{QRatFn, Scalar};

fn qpow(k: i64) -> QRatFn {
    QRatFn::q_int_pow(k)
}

/// A 1-form in left-module normal form.
#[derive(Clone, PartialEq, Debug)]
pub struct QForm1 {
    pub plus: QPoly,
    pub zero: QPoly,
    pub minus: QPoly,
}

/// A 2-form over the ordered basis {e+^e-, e+^e0, e-^e0}.
#[derive(Clone, PartialEq, Debug)]
pub struct QForm2 {
    pub pm: QPoly,
    pub p0: QPoly,
    pub m0: QPoly,
}

/// JSON component record for 1-forms, entries in the algebra text format.
#[derive(Serialize, Deserialize)]
pub struct QForm1Json {
    pub e_plus: String,
    pub e_zero: String,
    pub e_minus: String,
}

impl QForm1 {
    pub fn zero_form() -> Self {
        QForm1 { plus: QPoly::zero(), zero: QPoly::zero(), minus: QPoly::zero() }
    }

    pub fn basis_plus() -> Self {
        QForm1 { plus: QPoly::one(), zero: QPoly::zero(), minus: QPoly::zero() }
    }

    pub fn basis_zero() -> Self {
        QForm1 { plus: QPoly::zero(), zero: QPoly::one(), minus: QPoly::zero() }
    }

    pub fn basis_minus() -> Self {
        QForm1 { plus: QPoly::zero(), zero: QPoly::zero(), minus: QPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.zero.is_zero() && self.minus.is_zero()
    }

    pub fn add(&self, rhs: &QForm1) -> QForm1 {
        QForm1 {
            plus: self.plus.add(&rhs.plus),
            zero: self.zero.add(&rhs.zero),
            minus: self.minus.add(&rhs.minus),
        }
    }

    pub fn sub(&self, rhs: &QForm1) -> QForm1 {
        QForm1 {
            plus: self.plus.sub(&rhs.plus),
            zero: self.zero.sub(&rhs.zero),
            minus: self.minus.sub(&rhs.minus),
        }
    }

    pub fn scale(&self, k: &QRatFn) -> QForm1 {
        QForm1 { plus: self.plus.scale(k), zero: self.zero.scale(k), minus: self.minus.scale(k) }
    }

    /// Left multiplication x . omega.
    pub fn left_mul(&self, x: &QPoly) -> QForm1 {
        QForm1 {
            plus: x.mul(&self.plus),
            zero: x.mul(&self.zero),
            minus: x.mul(&self.minus),
        }
    }

    /// Right multiplication omega . y through the commutation twists.
    pub fn right_mul(&self, y: &QPoly) -> QForm1 {
        QForm1 {
            plus: self.plus.mul(&y.twist(1)),
            zero: self.zero.mul(&y.twist(2)),
            minus: self.minus.mul(&y.twist(1)),
        }
    }

    /// Star of a 1-form from e0* = -e0, e+* = -q^-1 e-, e-* = -q e+.
    pub fn star(&self) -> QForm1 {
        QForm1 {
            plus: self.minus.star().twist(1).scale(&QRatFn::q().neg()),
            zero: self.zero.star().twist(2).scale(&neg_one()),
            minus: self.plus.star().twist(1).scale(&qpow(-1).neg()),
        }
    }

    pub fn to_json(&self) -> QForm1Json {
        QForm1Json {
            e_plus: self.plus.to_string(),
            e_zero: self.zero.to_string(),
            e_minus: self.minus.to_string(),
        }
    }

    pub fn from_json(j: &QForm1Json) -> Result<QForm1, QParseError> {
        Ok(QForm1 {
            plus: parse_qpoly(&j.e_plus, DEFAULT_DEGREE_CAP)?,
            zero: parse_qpoly(&j.e_zero, DEFAULT_DEGREE_CAP)?,
            minus: parse_qpoly(&j.e_minus, DEFAULT_DEGREE_CAP)?,
        })
    }
}

impl QForm2 {
    pub fn zero_form() -> Self {
        QForm2 { pm: QPoly::zero(), p0: QPoly::zero(), m0: QPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.pm.is_zero() && self.p0.is_zero() && self.m0.is_zero()
    }

    pub fn add(&self, rhs: &QForm2) -> QForm2 {
        QForm2 {
            pm: self.pm.add(&rhs.pm),
            p0: self.p0.add(&rhs.p0),
            m0: self.m0.add(&rhs.m0),
        }
    }

    pub fn sub(&self, rhs: &QForm2) -> QForm2 {
        QForm2 {
            pm: self.pm.sub(&rhs.pm),
            p0: self.p0.sub(&rhs.p0),
            m0: self.m0.sub(&rhs.m0),
        }
    }
}

/// Exterior derivative on the algebra: da = a e0 + q b e+, db = a e- - q^-2 b e0,
/// dc = c e0 + q d e+, dd = c e- - q^-2 d e0, extended by the Leibniz rule.
pub fn d_alg(x: &QPoly) -> QForm1 {
    let mut out = QForm1::zero_form();
    for (m, coef) in x.terms() {
        let mut value = QPoly::one();
        let mut deriv = QForm1::zero_form();
        for g in m.gens() {
            deriv = deriv.right_mul(&QPoly::gen(g)).add(&d_gen(g).left_mul(&value));
            value = value.mul_gen(g);
        }
        out = out.add(&deriv.scale(coef));
    }
    out
}

fn d_gen(g: Gen) -> QForm1 {
    let (plus, zero, minus) = match g {
        Gen::A => (
            QPoly::gen(Gen::B).scale(&QRatFn::q()),
            QPoly::gen(Gen::A),
            QPoly::zero(),
        ),
        Gen::B => (
            QPoly::zero(),
            QPoly::gen(Gen::B).scale(&qpow(-2).neg()),
            QPoly::gen(Gen::A),
        ),
        Gen::C => (
            QPoly::gen(Gen::D).scale(&QRatFn::q()),
            QPoly::gen(Gen::C),
            QPoly::zero(),
        ),
        Gen::D => (
            QPoly::zero(),
            QPoly::gen(Gen::D).scale(&qpow(-2).neg()),
            QPoly::gen(Gen::C),
        ),
    };
    QForm1 { plus, zero, minus }
}

/// Wedge of 1-forms, reduced to the 2-form basis.
pub fn wedge(w1: &QForm1, w2: &QForm1) -> QForm2 {
    let mut out = QForm2::zero_form();
    // component index: 0 = plus, 1 = zero, 2 = minus; twist steps 1, 2, 1
    let comps1 = [(&w1.plus, 0usize), (&w1.zero, 1), (&w1.minus, 2)];
    let comps2 = [(&w2.plus, 0usize), (&w2.zero, 1), (&w2.minus, 2)];
    for (x, s) in comps1 {
        if x.is_zero() {
            continue;
        }
        let step = if s == 1 { 2 } else { 1 };
        for (y, t) in comps2 {
            if y.is_zero() {
                continue;
            }
            let prod = x.mul(&y.twist(step));
            match (s, t) {
                (0, 2) => out.pm = out.pm.add(&prod),
                (2, 0) => out.pm = out.pm.sub(&prod.scale(&qpow(2))),
                (0, 1) => out.p0 = out.p0.add(&prod),
                (1, 0) => out.p0 = out.p0.sub(&prod.scale(&qpow(4))),
                (2, 1) => out.m0 = out.m0.add(&prod),
                (1, 2) => out.m0 = out.m0.sub(&prod.scale(&qpow(-4))),
                _ => {} // e± ^ e± and e0 ^ e0 vanish
            }
        }
    }
    out
}

/// Exterior derivative of a 1-form, using de0 = q^3 e+^e- and
/// de± = ∓ q^(±2) (1 + q^-2) e± ^ e0.
pub fn d_form1(w: &QForm1) -> QForm2 {
    let one_q: QRatFn = Scalar::one();
    let bracket = one_q.add(&qpow(-2)); // [2; q^-2]
    let mut out = QForm2::zero_form();
    // d(x e^s) = d(x) ^ e^s + x de^s, with central de^s coefficients
    out = out.add(&wedge(&d_alg(&w.plus), &QForm1::basis_plus()));
    out = out.add(&wedge(&d_alg(&w.zero), &QForm1::basis_zero()));
    out = out.add(&wedge(&d_alg(&w.minus), &QForm1::basis_minus()));
    out.p0 = out.p0.add(&w.plus.scale(&qpow(2).mul(&bracket).neg()));
    out.pm = out.pm.add(&w.zero.scale(&qpow(3)));
    out.m0 = out.m0.add(&w.minus.scale(&qpow(-2).mul(&bracket)));
    out
}

/// One certified identity with both sides in normal form.
#[derive(Serialize, Clone)]
pub struct AlgCheck {
    pub id: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

fn check(id: &str, lhs: &QForm1, rhs: &QForm1) -> AlgCheck {
    AlgCheck {
        id: id.to_string(),
        pass: lhs == rhs,
        lhs: format!("{} (+)e+ {} (+)e0 {} (+)e-", lhs.plus, lhs.zero, lhs.minus),
        rhs: format!("{} (+)e+ {} (+)e0 {} (+)e-", rhs.plus, rhs.zero, rhs.minus),
    }
}

fn check_alg(id: &str, lhs: &QPoly, rhs: &QPoly) -> AlgCheck {
    AlgCheck { id: id.to_string(), pass: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

/// (u dv)* = d(v*) u*.
fn star_of_u_dv(u: &QPoly, v: &QPoly) -> QForm1 {
    d_alg(&v.star()).right_mul(&u.star())
}

/// Certifies the calculus from first principles: the translation-invariance
/// identities d x_(2) . S^-1(x_(1)), the star values of the invariant basis
/// computed from their definitions, the six invariant-element derivative
/// coefficients, and d^2 = 0 on the generators.
pub fn verify_3d_calculus() -> Vec<AlgCheck> {
    use Gen::*;
    let mut out = Vec::new();
    let gp = QPoly::gen;

    // defining relations close under normalization
    let q = QRatFn::q();
    let bc = gp(B).mul(&gp(C));
    out.push(check_alg("relation ba = q ab", &gp(B).mul(&gp(A)), &gp(A).mul(&gp(B)).scale(&q)));
    out.push(check_alg("relation ca = q ac", &gp(C).mul(&gp(A)), &gp(A).mul(&gp(C)).scale(&q)));
    out.push(check_alg("relation db = q bd", &gp(D).mul(&gp(B)), &gp(B).mul(&gp(D)).scale(&q)));
    out.push(check_alg("relation dc = q cd", &gp(D).mul(&gp(C)), &gp(C).mul(&gp(D)).scale(&q)));
    out.push(check_alg("relation cb = bc", &gp(C).mul(&gp(B)), &gp(B).mul(&gp(C))));
    out.push(check_alg(
        "relation ad - q^-1 bc = 1",
        &gp(A).mul(&gp(D)).sub(&bc.scale(&qpow(-1))),
        &QPoly::one(),
    ));
    out.push(check_alg(
        "relation da - ad = q(1 - q^-2) bc",
        &gp(D).mul(&gp(A)).sub(&gp(A).mul(&gp(D))),
        &bc.scale(&q.sub(&qpow(-1))),
    ));

    // d applied to both sides of the determinant relation
    out.push(check(
        "d(ad - q^-1 bc) = 0",
        &d_of_product(&gp(A), &gp(D)).sub(&d_of_product(&gp(B), &gp(C)).scale(&qpow(-1))),
        &QForm1::zero_form(),
    ));

    // translation invariance: d x_(2) . S^-1(x_(1))
    let expectations = [
        (A, QForm1::basis_zero().scale(&qpow(-2)), "d a_(2) . S^-1(a_(1)) = q^-2 e0"),
        (B, QForm1::basis_minus().scale(&qpow(-1)), "d b_(2) . S^-1(b_(1)) = q^-1 e-"),
        (C, QForm1::basis_plus().scale(&qpow(2)), "d c_(2) . S^-1(c_(1)) = q^2 e+"),
        (D, QForm1::basis_zero().scale(&neg_one()), "d d_(2) . S^-1(d_(1)) = -e0"),
    ];
    for (g, want, id) in expectations {
        let mut acc = QForm1::zero_form();
        for ((m1, m2), c) in QPoly::gen(g).coproduct().terms() {
            let s_inv = QPoly::from_mono(*m1, Scalar::one()).antipode(true);
            let dx2 = d_alg(&QPoly::from_mono(*m2, c.clone()));
            acc = acc.add(&dx2.right_mul(&s_inv));
        }
        out.push(check(id, &acc, &want));
    }

    // the invariant basis recovered from the defining combinations
    let e0_def = d_alg(&gp(A)).left_mul(&gp(D)).sub(&d_alg(&gp(C)).left_mul(&gp(B)).scale(&q));
    out.push(check("d.da - q b.dc = e0", &e0_def, &QForm1::basis_zero()));
    let ep_def = d_alg(&gp(C))
        .left_mul(&gp(A))
        .scale(&qpow(-1))
        .sub(&d_alg(&gp(A)).left_mul(&gp(C)).scale(&qpow(-2)));
    out.push(check("q^-1 a.dc - q^-2 c.da = e+", &ep_def, &QForm1::basis_plus()));
    let em_def = d_alg(&gp(B)).left_mul(&gp(D)).sub(&d_alg(&gp(D)).left_mul(&gp(B)).scale(&q));
    out.push(check("d.db - q b.dd = e-", &em_def, &QForm1::basis_minus()));

    // star of the basis computed from the definitions via (u dv)* = d(v*) u*
    let e0_star = star_of_u_dv(&gp(D), &gp(A)).sub(&star_of_u_dv(&gp(B), &gp(C)).scale(&q));
    out.push(check("e0* = -e0", &e0_star, &QForm1::basis_zero().scale(&neg_one())));
    let ep_star = star_of_u_dv(&gp(A), &gp(C))
        .scale(&qpow(-1))
        .sub(&star_of_u_dv(&gp(C), &gp(A)).scale(&qpow(-2)));
    out.push(check("e+* = -q^-1 e-", &ep_star, &QForm1::basis_minus().scale(&qpow(-1).neg())));
    let em_star = star_of_u_dv(&gp(D), &gp(B)).sub(&star_of_u_dv(&gp(B), &gp(D)).scale(&q));
    out.push(check("e-* = -q e+", &em_star, &QForm1::basis_plus().scale(&QRatFn::q().neg())));

    // the rule-based star on forms agrees with the derived one
    for (name, form) in [
        ("e+", QForm1::basis_plus()),
        ("e0", QForm1::basis_zero()),
        ("e-", QForm1::basis_minus()),
    ] {
        let derived = match name {
            "e+" => ep_star.clone(),
            "e0" => e0_star.clone(),
            _ => em_star.clone(),
        };
        out.push(check(&format!("star rule matches derivation on {name}"), &form.star(), &derived));
    }

    // the six invariant-element derivatives and their vertical coefficients
    let plus_weight = QPoly::one().add(&QPoly::scalar(qpow(2))); // 1 + q^2
    let minus_weight = plus_weight.scale(&qpow(-4)).neg(); // -q^-4 (1 + q^2)
    let elements: [(&str, QPoly, &QPoly); 6] = [
        ("ac", gp(A).mul(&gp(C)), &plus_weight),
        ("a^2", gp(A).mul(&gp(A)), &plus_weight),
        ("c^2", gp(C).mul(&gp(C)), &plus_weight),
        ("d^2", gp(D).mul(&gp(D)), &minus_weight),
        ("b^2", gp(B).mul(&gp(B)), &minus_weight),
        ("bd", gp(B).mul(&gp(D)), &minus_weight),
    ];
    for (name, u, lambda) in elements {
        let got = d_alg(&u);
        let want = lambda.mul(&u);
        out.push(check_alg(&format!("e0 coefficient of d({name})"), &got.zero, &want));
    }

    // d^2 = 0 on the generators, through the 2-forms
    for g in [A, B, C, D] {
        let dd = d_form1(&d_alg(&QPoly::gen(g)));
        out.push(AlgCheck {
            id: format!("d^2 {} = 0", g.symbol()),
            pass: dd.is_zero(),
            lhs: format!("{} | {} | {}", dd.pm, dd.p0, dd.m0),
            rhs: "0 | 0 | 0".to_string(),
        });
    }

    out
}

fn d_of_product(x: &QPoly, y: &QPoly) -> QForm1 {
    d_alg(&x.mul(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn d_on_generators() {
        let da = d_alg(&QPoly::gen(Gen::A));
        assert_eq!(da.plus.to_string(), "q*b");
        assert_eq!(da.zero.to_string(), "a");
        assert!(da.minus.is_zero());
    }

    #[test]
    fn d_of_ac() {
        let ac = QPoly::gen(Gen::A).mul(&QPoly::gen(Gen::C));
        let d = d_alg(&ac);
        // e+ component q^2 bc + q ad, e0 component (1 + q^2) ac
        let bc = QPoly::gen(Gen::B).mul(&QPoly::gen(Gen::C));
        let ad = QPoly::gen(Gen::A).mul(&QPoly::gen(Gen::D));
        let want_plus = bc.scale(&qpow(2)).add(&ad.scale(&QRatFn::q()));
        assert_eq!(d.plus, want_plus);
        let want_zero = ac.add(&ac.scale(&qpow(2)));
        assert_eq!(d.zero, want_zero);
        assert!(d.minus.is_zero());
    }

    #[test]
    fn verify_suite_all_pass() {
        let checks = verify_3d_calculus();
        for c in &checks {
            assert!(c.pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
        }
        assert!(checks.len() >= 25);
    }

    #[test]
    fn leibniz_and_d_squared_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..15 {
            let x = crate::qalg::random_poly(&mut rng, 3);
            let y = crate::qalg::random_poly(&mut rng, 2);
            // d(xy) = d(x) y + x d(y)
            let lhs = d_alg(&x.mul(&y));
            let rhs = d_alg(&x).right_mul(&y).add(&d_alg(&y).left_mul(&x));
            assert_eq!(lhs, rhs);
            // d^2 = 0
            assert!(d_form1(&d_alg(&x)).is_zero());
        }
    }

    #[test]
    fn graded_leibniz_on_one_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let x = crate::qalg::random_poly(&mut rng, 2);
            let w = QForm1 {
                plus: crate::qalg::random_poly(&mut rng, 2),
                zero: crate::qalg::random_poly(&mut rng, 2),
                minus: crate::qalg::random_poly(&mut rng, 2),
            };
            // d(x w) = dx ^ w + x d(w)
            let lhs = d_form1(&w.left_mul(&x));
            let rhs = wedge(&d_alg(&x), &w);
            let rhs = QForm2 {
                pm: rhs.pm.add(&x.mul(&d_form1(&w).pm)),
                p0: rhs.p0.add(&x.mul(&d_form1(&w).p0)),
                m0: rhs.m0.add(&x.mul(&d_form1(&w).m0)),
            };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn wedge_relations() {
        // q^2 e+ ^ e- = -(e- ^ e+)
        let ep = QForm1::basis_plus();
        let em = QForm1::basis_minus();
        let e0 = QForm1::basis_zero();
        let pm = wedge(&ep, &em);
        let mp = wedge(&em, &ep);
        assert_eq!(pm.pm.scale(&qpow(2)), mp.pm.neg());
        // e0 ^ e+ = -q^4 e+ ^ e0
        let zp = wedge(&e0, &ep);
        let pz = wedge(&ep, &e0);
        assert_eq!(zp.p0, pz.p0.scale(&qpow(4)).neg());
        // squares vanish
        assert!(wedge(&ep, &ep).is_zero());
        assert!(wedge(&e0, &e0).is_zero());
    }

    #[test]
    fn star_is_involutive_on_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let w = QForm1 {
                plus: crate::qalg::random_poly(&mut rng, 2),
                zero: crate::qalg::random_poly(&mut rng, 2),
                minus: crate::qalg::random_poly(&mut rng, 2),
            };
            assert_eq!(w.star().star(), w);
        }
    }

    #[test]
    fn d_star_compatible_with_star_d() {
        // (d x)* = d(x*) on random elements
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let x = crate::qalg::random_poly(&mut rng, 3);
            assert_eq!(d_alg(&x).star(), d_alg(&x.star()));
        }
    }

    #[test]
    fn form_json_round_trip() {
        let w = QForm1 {
            plus: QPoly::gen(Gen::A).scale(&QRatFn::q()),
            zero: QPoly::one(),
            minus: QPoly::zero(),
        };
        let j = w.to_json();
        assert_eq!(QForm1::from_json(&j).unwrap(), w);
    }
}
