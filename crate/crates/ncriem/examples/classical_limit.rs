//! The q = 1 limit: the explicit torsion-free metric-preserving
//! star-preserving connection when g++ = g--, and an exact certificate of
//! emptiness when g++ != g--.

use ncriem::qconn::classical::classical_limit_check;
use ncriem::scalars::Rat;

fn main() {
    let one = Rat::new(1, 1);

    let rep = classical_limit_check(&one, &one, &one).unwrap();
    println!("metric (1,1,1): solvable = {}", rep.solvable);
    if let Some(conn) = &rep.connection {
        println!("  n+ = {}  n- = {}", conn.n_plus, conn.n_minus);
        println!("  m+ = {}  m- = {}", conn.m_plus, conn.m_minus);
        println!("  nu = {}  mu = {}  r = {}", conn.nu, conn.mu, conn.r);
    }
    for (name, ok) in &rep.checks {
        println!("  [{}] {name}", if *ok { "ok" } else { "FAIL" });
    }

    let two = Rat::new(2, 1);
    let rep = classical_limit_check(&one, &one, &two).unwrap();
    println!("\nmetric (1,1,2): solvable = {}", rep.solvable);
    for (name, ok) in &rep.checks {
        println!("  [{}] {name}", if *ok { "ok" } else { "FAIL" });
    }
}
