//! The q = 1 limit: at g++ = g-- the unique torsion-free metric-preserving
//! star-preserving connection has nu = -mu = 1/2, m- = -m+ = g00/(2 g++),
//! n+ = -n- = 2 - g00/(2 g++); for g++ != g-- the combined constraints form
//! an inconsistent affine system, certified by an exact rank computation.

use serde::Serialize;

use super::{QConnError, QMetric, QSU2Connection};
use crate::matrix::Mat;
use crate::scalars::{GaussRat, Rat, Scalar};

#[derive(Serialize, Clone)]
pub struct ClassicalReport {
    pub metric: [String; 3],
    pub solvable: bool,
    pub checks: Vec<(String, bool)>,
    pub connection: Option<ClassicalConnection>,
}

#[derive(Serialize, Clone)]
pub struct ClassicalConnection {
    pub n_plus: String,
    pub n_minus: String,
    pub m_plus: String,
    pub m_minus: String,
    pub nu: String,
    pub mu: String,
    pub r: String,
}

/// The explicit limit connection (only defined when g++ = g--).
pub fn classical_connection(g: &QMetric<GaussRat>) -> QSU2Connection<GaussRat> {
    let half = GaussRat::rational(1, 2);
    let ratio = g.g_00.div(&g.g_pp.add(&g.g_pp)).expect("positive metric");
    QSU2Connection {
        q: GaussRat::one(),
        n_plus: GaussRat::from_int(2).sub(&ratio),
        n_minus: ratio.sub(&GaussRat::from_int(2)),
        m_plus: ratio.clone().neg(),
        m_minus: ratio,
        r: GaussRat::zero(),
        nu: half.clone(),
        mu: half.neg(),
    }
}

/// The star condition on the Christoffel array at q = 1 in component form:
/// conj(r) = -r, conj(n+) = -n-, conj(m+) = -m-, conj(mu) = -nu.
pub fn gamma_star_condition(conn: &QSU2Connection<GaussRat>) -> bool {
    conn.r.conj() == conn.r.neg()
        && conn.n_plus.conj() == conn.n_minus.neg()
        && conn.m_plus.conj() == conn.m_minus.neg()
        && conn.mu.conj() == conn.nu.neg()
}

// Variables (re, im) of n+, n-, m+, m-, nu, mu, r: fourteen reals.
const NP: usize = 0;
const NM: usize = 2;
const MP: usize = 4;
const MM: usize = 6;
const NU: usize = 8;
const MU: usize = 10;
const RR: usize = 12;
const NVARS: usize = 14;

fn g0() -> GaussRat {
    GaussRat::zero()
}

/// Certifies existence or emptiness of a torsion-free, metric-preserving,
/// star-preserving connection at q = 1 for the given diagonal metric.
pub fn classical_limit_check(
    g_pp: &Rat,
    g_00: &Rat,
    g_mm: &Rat,
) -> Result<ClassicalReport, QConnError> {
    let g: QMetric<GaussRat> = QMetric::from_rats(g_pp, g_00, g_mm)?;
    let gp = GaussRat::from_rat(g_pp.clone());
    let gz = GaussRat::from_rat(g_00.clone());
    let gm = GaussRat::from_rat(g_mm.clone());

    // Each row is one real-linear equation sum_i a_i x_i = b.
    let mut rows: Vec<(Vec<GaussRat>, GaussRat)> = Vec::new();
    let mut eq = |coeffs: &[(usize, GaussRat)], rhs: GaussRat| {
        let mut row = vec![g0(); NVARS];
        for (i, c) in coeffs {
            row[*i] = row[*i].add(c);
        }
        rows.push((row, rhs));
    };
    let one = GaussRat::one;
    let neg = |x: GaussRat| x.neg();

    // star-preserving at q = 1: conj(r) = -r, conj(n+) = -n-, conj(m+) = -m-,
    // conj(mu) = -nu
    eq(&[(RR, one())], g0()); // Re r = 0
    eq(&[(NP, one()), (NM, one())], g0());
    eq(&[(NP + 1, one()), (NM + 1, neg(one()))], g0());
    eq(&[(MP, one()), (MM, one())], g0());
    eq(&[(MP + 1, one()), (MM + 1, neg(one()))], g0());
    eq(&[(MU, one()), (NU, one())], g0());
    eq(&[(MU + 1, one()), (NU + 1, neg(one()))], g0());

    // metric preservation: n±, r real; g++ conj(m+) = g00 mu; g00 conj(nu) = g-- m-
    eq(&[(NP + 1, one())], g0());
    eq(&[(NM + 1, one())], g0());
    eq(&[(RR + 1, one())], g0());
    eq(&[(MP, gp.clone()), (MU, neg(gz.clone()))], g0());
    eq(&[(MP + 1, neg(gp.clone())), (MU + 1, neg(gz.clone()))], g0());
    eq(&[(NU, gz.clone()), (MM, neg(gm.clone()))], g0());
    eq(&[(NU + 1, neg(gz.clone())), (MM + 1, neg(gm.clone()))], g0());

    // torsion-free at q = 1: m+ - n+ + 2 = 0, m- - n- - 2 = 0, nu - mu - 1 = 0
    eq(&[(MP, one()), (NP, neg(one()))], GaussRat::from_int(-2));
    eq(&[(MP + 1, one()), (NP + 1, neg(one()))], g0());
    eq(&[(MM, one()), (NM, neg(one()))], GaussRat::from_int(2));
    eq(&[(MM + 1, one()), (NM + 1, neg(one()))], g0());
    eq(&[(NU, one()), (MU, neg(one()))], one());
    eq(&[(NU + 1, one()), (MU + 1, neg(one()))], g0());

    let a = Mat::from_fn(rows.len(), NVARS, |i, j| rows[i].0[j].clone());
    let b: Vec<GaussRat> = rows.iter().map(|r| r.1.clone()).collect();
    let solution = a.solve(&b);

    let mut checks = Vec::new();
    let metric_strs = [g_pp.to_string(), g_00.to_string(), g_mm.to_string()];
    match solution {
        None => {
            checks.push(("the combined constraints are inconsistent".to_string(), true));
            checks.push(("expected emptiness (g++ != g--)".to_string(), g_pp != g_mm));
            Ok(ClassicalReport { metric: metric_strs, solvable: false, checks, connection: None })
        }
        Some(x) => {
            let val = |idx: usize| GaussRat::new(x[idx].re.clone(), x[idx + 1].re.clone());
            let conn = QSU2Connection {
                q: GaussRat::one(),
                n_plus: val(NP),
                n_minus: val(NM),
                m_plus: val(MP),
                m_minus: val(MM),
                nu: val(NU),
                mu: val(MU),
                r: val(RR),
            };
            checks.push(("expected solvability (g++ = g--)".to_string(), g_pp == g_mm));
            checks.push(("torsion-free".to_string(), conn.is_torsion_free(0.0)));
            checks.push((
                "metric-preserving".to_string(),
                conn.is_metric_preserving(&g, 0.0),
            ));
            checks.push(("star-preserving".to_string(), conn.is_star_preserving(0.0)));
            checks.push((
                "Christoffel star condition".to_string(),
                gamma_star_condition(&conn),
            ));
            checks.push((
                "matches the explicit limit values".to_string(),
                conn == classical_connection(&g),
            ));
            let connection = Some(ClassicalConnection {
                n_plus: conn.n_plus.to_string(),
                n_minus: conn.n_minus.to_string(),
                m_plus: conn.m_plus.to_string(),
                m_minus: conn.m_minus.to_string(),
                nu: conn.nu.to_string(),
                mu: conn.mu.to_string(),
                r: conn.r.to_string(),
            });
            Ok(ClassicalReport { metric: metric_strs, solvable: true, checks, connection })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_limit_connection() {
        let rep = classical_limit_check(&Rat::new(1, 1), &Rat::new(1, 1), &Rat::new(1, 1)).unwrap();
        assert!(rep.solvable);
        for (name, ok) in &rep.checks {
            assert!(ok, "{name}");
        }
        let conn = rep.connection.unwrap();
        assert_eq!(conn.n_plus, "3/2");
        assert_eq!(conn.nu, "1/2");
        assert_eq!(conn.m_minus, "1/2");
    }

    #[test]
    fn asymmetric_metric_is_empty() {
        let rep = classical_limit_check(&Rat::new(1, 1), &Rat::new(1, 1), &Rat::new(2, 1)).unwrap();
        assert!(!rep.solvable);
        for (name, ok) in &rep.checks {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn explicit_connection_satisfies_everything() {
        let g: QMetric<GaussRat> =
            QMetric::from_rats(&Rat::new(2, 1), &Rat::new(3, 1), &Rat::new(2, 1)).unwrap();
        let conn = classical_connection(&g);
        assert!(conn.is_torsion_free(0.0));
        assert!(conn.is_metric_preserving(&g, 0.0));
        assert!(conn.is_star_preserving(0.0));
        assert!(gamma_star_condition(&conn));
        // n+ = 2 - 3/4
        assert_eq!(conn.n_plus, GaussRat::rational(5, 4));
    }
}
