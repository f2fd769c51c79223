//! The PBW normal-form engine for the quantized coordinate algebra of SL(2):
//! defining relations, Hopf structure, the star operation, the text format,
//! and the translation-invariance identities of the 3D calculus.

use ncriem::qalg::forms::verify_3d_calculus;
use ncriem::qalg::{parse_qpoly, Gen, QPoly, DEFAULT_DEGREE_CAP};
use ncriem::scalars::{QRatFn, Scalar};

fn main() {
    let a = QPoly::gen(Gen::A);
    let b = QPoly::gen(Gen::B);
    let c = QPoly::gen(Gen::C);
    let d = QPoly::gen(Gen::D);

    println!("b*a  normalizes to  {}", b.mul(&a));
    println!("a*d  normalizes to  {}", a.mul(&d));
    println!("d*a  normalizes to  {}", d.mul(&a));
    println!("S(a) = {}", a.antipode(false));
    println!("S(b) = {}", b.antipode(false));
    println!("a* = {}", a.star());
    println!("c* = {}", c.star());
    println!("(bc)* = {}", b.mul(&c).star());

    // the antipode axiom on the first matrix entry: S(a)a + S(b)c = 1
    let lhs = a.antipode(false).mul(&a).add(&b.antipode(false).mul(&c));
    println!("S(a)a + S(b)c = {lhs}");

    // text format round trip
    let parsed = parse_qpoly("q^-1*b*c + 1", DEFAULT_DEGREE_CAP).unwrap();
    println!("parse(\"q^-1*b*c + 1\") = {parsed}");
    println!("equals a*d: {}", parsed == a.mul(&d));

    // the full first-principles certification of the calculus
    let checks = verify_3d_calculus();
    let passed = checks.iter().filter(|c| c.pass).count();
    println!("\ncalculus certification: {passed}/{} identities", checks.len());
    for check in checks.iter().take(6) {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.id);
    }
    println!("  ...");

    // a q-integer makes an appearance: [2; q^-2] = 1 + q^-2
    let bracket: QRatFn = Scalar::one();
    println!("[2; q^-2] = {}", bracket.add(&QRatFn::q_int_pow(-2)));
}
