//! Invariant connections on the S3 calculus: the 9x9 sigma, its determinant
//! factorization, and the torsion / metric / star predicates at notable
//! points of the five-parameter space.

use ncriem::groupcalc::FGCalculus;
use ncriem::groupconn::{FGConnection, FGMetric, S3Params};
use ncriem::scalars::{random_point, GaussRat, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(calc: &FGCalculus<GaussRat>, name: &str, p: &S3Params<GaussRat>) {
    let g = FGMetric::euclidean(3);
    let k = FGConnection::from_s3_params(calc, p);
    println!(
        "{name}: torsion-free {}, metric {}, cotorsion-free {}, star {}, braided {}",
        k.is_torsion_free(calc, 0.0),
        k.is_metric_preserving(calc, &g, 0.0).unwrap(),
        k.is_cotorsion_free(calc, &g, 0.0).unwrap(),
        k.is_star_compatible(calc, 0.0).unwrap(),
        k.is_braided(calc, 0.0),
    );
}

fn main() {
    let calc: FGCalculus<GaussRat> = FGCalculus::s3_standard();

    // sigma at the left-invariant zero connection is the braiding itself
    let mc = S3Params::maurer_cartan();
    let conn = FGConnection::from_s3_params(&calc, &mc);
    println!("sigma = braiding at the zero connection: {}", conn.sigma() == calc.psi());
    println!(
        "sigma^3 there: {:?}",
        conn.sigma_power_check(3, 0.0).map(|l| l.to_string())
    );

    // det(sigma) = (a-b)^2 (a+2b) (e+c+d)^2 (e^2-ce-de+c^2+d^2-cd)^2
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let p = S3Params::from_array(std::array::from_fn(|_| random_point(20, &mut rng)));
    let det = FGConnection::from_s3_params(&calc, &p).sigma().det().unwrap();
    let (a, b, c, d, e) = (&p.a, &p.b, &p.c, &p.d, &p.e);
    let formula = {
        let t1 = a.sub(b);
        let t2 = a.add(&b.add(b));
        let t3 = e.add(&c.add(d));
        let t4 = e.mul(e).sub(&c.mul(e)).sub(&d.mul(e)).add(&c.mul(c)).add(&d.mul(d)).sub(&c.mul(d));
        t1.mul(&t1).mul(&t2).mul(&t3.mul(&t3)).mul(&t4.mul(&t4))
    };
    println!("determinant factorization at a random exact point: {}", det == formula);

    let gr = GaussRat::rational;
    show(&calc, "zero connection (1,0,0,1,0)   ", &mc);
    show(
        &calc,
        "reference (5/3,-1/3,2/3,2/3,-1/3)",
        &S3Params::new(gr(5, 3), gr(-1, 3), gr(2, 3), gr(2, 3), gr(-1, 3)),
    );
    show(
        &calc,
        "discrete point (1/3,-2/3,...)    ",
        &S3Params::new(gr(1, 3), gr(-2, 3), gr(-2, 3), gr(1, 3), gr(-2, 3)),
    );
    show(
        &calc,
        "torsion-free sample (0,0,1,1,0)  ",
        &S3Params::new(gr(0, 1), gr(0, 1), gr(1, 1), gr(1, 1), gr(0, 1)),
    );
}
