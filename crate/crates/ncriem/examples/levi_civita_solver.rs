//! The torsion-free solver: for a real q and positive diagonal metric there
//! are exactly four torsion-free metric-preserving star-compatible
//! connections, and exactly one stays bounded as q approaches 1.

use ncriem::qconn::levi_civita::levi_civita_solve;

fn main() {
    let report = levi_civita_solve(2.0, [1.0, 1.0, 1.0]).unwrap();
    println!("q = {}, metric {:?}", report.q, report.metric);
    println!("disc = {}", report.disc);
    for (i, s) in report.solutions.iter().enumerate() {
        let classical = if i == report.classical_root_index { "  <- classical root" } else { "" };
        println!(
            "  r = {:>6.4}, sign {}: n+ = {:>9.5}  residuals (torsion {:.1e}, metric {:.1e}, star {:.1e}){classical}",
            s.r, s.sign, s.n_plus, s.residuals.torsion, s.residuals.metric, s.residuals.star
        );
    }

    // near q = 1 the classical root approaches 2 - g00/(g++ + g--) = 3/2
    for q in [1.001, 0.999] {
        let rep = levi_civita_solve(q, [1.0, 1.0, 1.0]).unwrap();
        let root = &rep.solutions[rep.classical_root_index];
        println!("q = {q}: classical n+ = {:.6}", root.n_plus);
    }
}
