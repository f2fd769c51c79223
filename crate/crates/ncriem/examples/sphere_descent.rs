//! Descent to the quantum sphere: the vertical parts of the derivatives of
//! the six invariant quadratic elements force the connection parameters, and
//! the forced values are exactly the braided point.

use ncriem::qconn::sphere::sphere_descent_check;

fn main() {
    let rep = sphere_descent_check();
    for row in &rep.rows {
        println!(
            "[{}] d({}) has vertical part {}",
            if row.pass { "ok" } else { "FAIL" },
            row.element,
            row.vertical_coefficient
        );
    }
    println!("\ndescended parameters:");
    println!("  n+ = {}", rep.descended_n_plus);
    println!("  n- = {}", rep.descended_n_minus);
    println!("vertical parts cancel: {}", rep.vertical_cancellation);
    println!("equal to the braided point: {}", rep.matches_braided_point);
}
