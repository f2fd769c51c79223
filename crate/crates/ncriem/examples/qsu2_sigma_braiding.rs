//! The 9x9 generalized braiding on quantum SU(2) with symbolic q: the
//! braided points, their eigenvalue table, and the torsion that they
//! necessarily carry.

use ncriem::qconn::eigen::eigen_table_check;
use ncriem::qconn::levi_civita::braided_points;
use ncriem::qconn::torsion_via_forms;
use ncriem::scalars::QRatFn;

fn main() {
    let q = QRatFn::q();
    let [p0, p1] = braided_points::<QRatFn>(&q).unwrap();

    println!("braided point, r = 0 branch:");
    println!("  n+ = {}", p0.n_plus);
    println!("  n- = {}", p0.n_minus);
    println!("  braid relations hold symbolically: {}", p0.is_braided(0.0));
    println!("  other branch r = {}: braided {}", p1.r, p1.is_braided(0.0));

    let t = p0.torsion();
    println!("  torsion: T(e+) = {} , T(e0) = ({}) e+^e- , T(e-) = {}", t.t_plus, t.t_zero, t.t_minus);

    // the closed-form torsion agrees with the independent form-calculus route
    let derived = torsion_via_forms(&p0);
    println!(
        "  form-calculus route agrees: {}",
        t.t_plus == derived.t_plus && t.t_zero == derived.t_zero && t.t_minus == derived.t_minus
    );

    // at this point the square roots in the eigenvalue table are rational:
    // q+ = q^-2 and q- = q^2
    let rows = eigen_table_check(&p0, Some(QRatFn::q_int_pow(-2)), Some(QRatFn::q_int_pow(2)), 0.0)
        .unwrap();
    println!("\neigenvalue table ({} rows):", rows.len());
    for row in rows {
        println!(
            "  [{}] {}  eigenvalue {}{}",
            if row.pass { "ok" } else { "FAIL" },
            row.vector,
            row.eigenvalue,
            row.reading.map(|r| format!("  (reading: {r})")).unwrap_or_default()
        );
    }
}
