//! Build the three-dimensional first-order calculus on the permutation
//! group of three objects and verify its structural identities.

use ncriem::groupcalc::FGCalculus;
use ncriem::matrix::{braid_defect, Mat};
use ncriem::scalars::GaussRat;

fn main() {
    let calc: FGCalculus<GaussRat> = FGCalculus::s3_standard();

    println!("group order: {}", calc.group().order());
    println!("generators: {:?}", calc.gens().elems().iter().map(|&g| calc.group().label(g)).collect::<Vec<_>>());
    println!("dim of invariant 1-forms: {}", calc.dim_forms());
    println!("dim of 2-forms: {}", calc.dim_wedge());

    let kernel = Mat::<GaussRat>::identity(9).sub(calc.psi()).kernel_basis();
    println!("dim ker(id - braiding): {}", kernel.len());

    let defect = braid_defect(calc.psi(), 3).unwrap();
    println!("braid defect of the braiding is zero: {}", defect.is_zero());

    // d^2 = 0 on every delta function
    let d_squared = (0..6).all(|g| calc.d1(&calc.d0(&calc.delta(g))).is_zero_eps(0.0));
    println!("d^2 = 0 on the function basis: {d_squared}");

    // the calculus is inner: d(theta) = 2 theta ^ theta
    let theta = calc.theta();
    let tt = calc.wedge(&theta, &theta);
    println!(
        "d(theta) = 2 theta^theta: {}",
        calc.d1(&theta) == calc.form2_add(&tt, &tt)
    );

    // star fixes the derivatives of real functions
    let all_real = (0..6).all(|g| {
        let d = calc.d0(&calc.delta(g));
        calc.star1(&d).unwrap() == d
    });
    println!("(d delta_x)* = d delta_x: {all_real}");
}
