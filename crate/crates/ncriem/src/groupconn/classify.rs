//! Classification certificates for invariant connections on S3: for each
//! supported conjunction of predicates, the known families are certified by
//! substitution (exactly where the parameters are rational, numerically at
//! 1e-10 where they live on continuous or irrational moduli), and random
//! off-family points are sampled to confirm the conjunction fails there.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use super::{FGConnection, FGMetric, S3Params};
use crate::groupcalc::FGCalculus;
use crate::scalars::{random_point, Backend, CDouble, GaussRat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Condition {
    Braid,
    TorsionFree,
    TorsionCompatible,
    Metric,
    CotorsionFree,
    StarCompatible,
    InvertibleSigma,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Braid => "braid",
            Condition::TorsionFree => "torsion_free",
            Condition::TorsionCompatible => "torsion_compatible",
            Condition::Metric => "metric",
            Condition::CotorsionFree => "cotorsion_free",
            Condition::StarCompatible => "star_compatible",
            Condition::InvertibleSigma => "invertible_sigma",
        }
    }
}

impl FromStr for Condition {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('_', "-").as_str() {
            "braid" => Ok(Condition::Braid),
            "torsion-free" => Ok(Condition::TorsionFree),
            "torsion-compat" | "torsion-compatible" => Ok(Condition::TorsionCompatible),
            "metric" => Ok(Condition::Metric),
            "cotorsion-free" => Ok(Condition::CotorsionFree),
            "star" | "star-compatible" => Ok(Condition::StarCompatible),
            "invertible-sigma" => Ok(Condition::InvertibleSigma),
            other => Err(ClassifyError::UnknownCondition(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("unknown condition `{0}`")]
    UnknownCondition(String),
    #[error("no classified family table for {{{requested}}}; supported sets: {supported}")]
    UnknownConditionSet { requested: String, supported: String },
}

/// Does the connection at `p` satisfy every condition in the set?
pub fn eval_conjunction<K: Scalar>(
    calc: &FGCalculus<K>,
    p: &S3Params<K>,
    conds: &BTreeSet<Condition>,
    eps: f64,
) -> bool {
    let conn = FGConnection::from_s3_params(calc, p);
    let g = FGMetric::euclidean(3);
    conds.iter().all(|c| match c {
        Condition::Braid => conn.is_braided(calc, eps),
        Condition::TorsionFree => conn.is_torsion_free(calc, eps),
        Condition::TorsionCompatible => conn.is_torsion_compatible(calc, eps),
        Condition::Metric => conn.is_metric_preserving(calc, &g, eps).unwrap_or(false),
        Condition::CotorsionFree => conn.is_cotorsion_free(calc, &g, eps).unwrap_or(false),
        Condition::StarCompatible => conn.is_star_compatible(calc, eps).unwrap_or(false),
        Condition::InvertibleSigma => conn
            .sigma()
            .det()
            .map(|d| !d.is_zero_eps(eps.max(1e-12)))
            .unwrap_or(false),
    })
}

enum PointSource {
    ExactPoints(Vec<[GaussRat; 5]>),
    ExactFn(fn(&mut ChaCha8Rng) -> [GaussRat; 5]),
    NumericPoints(Vec<[CDouble; 5]>),
    /// Fixed points always included (endpoints), then sampled up to the count.
    NumericSeq { fixed: fn() -> Vec<[CDouble; 5]>, sampler: fn(&mut ChaCha8Rng) -> [CDouble; 5] },
}

enum Expect {
    /// Every generated point satisfies the conjunction.
    AllSatisfy,
    /// No generated point satisfies it (exclusion witnesses for empty moduli).
    NoneSatisfy,
}

pub struct S3Family {
    name: &'static str,
    paper_ref: &'static str,
    describe: &'static str,
    source: PointSource,
    expect: Expect,
    /// Informational entries report their outcome without failing a run;
    /// used for as-printed transcriptions and observed anomalies.
    informational: bool,
    note: Option<&'static str>,
}

#[derive(Serialize, Clone)]
pub struct FamilyResult {
    pub name: String,
    pub paper_ref: String,
    pub params_or_sampler: String,
    pub pass: bool,
    pub informational: bool,
    pub witness: serde_json::Value,
}

#[derive(Serialize, Clone)]
pub struct OffFamilyResult {
    pub count: usize,
    pub all_failed: bool,
    pub satisfying_points: Vec<String>,
}

#[derive(Serialize, Clone)]
pub struct ClassifyReport {
    pub condition_set: Vec<String>,
    pub families: Vec<FamilyResult>,
    pub off_family_samples: OffFamilyResult,
    pub seed: u64,
    pub backend: String,
    pub tolerance: f64,
}

impl ClassifyReport {
    /// Every non-informational family behaved as expected and no random
    /// off-family point satisfied the conjunction.
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.informational || f.pass)
            && self.off_family_samples.all_failed
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyConfig {
    pub seed: u64,
    /// Membership tolerance for numerically-sampled families.
    pub tolerance: f64,
    pub family_samples: usize,
    pub off_family_samples: usize,
    pub backend: Backend,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            seed: 0,
            tolerance: 1e-10,
            family_samples: 50,
            off_family_samples: 100,
            backend: Backend::Gauss,
        }
    }
}

// --- samplers ---------------------------------------------------------------

fn nonzero_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
    loop {
        let z = random_point(8, rng);
        if !Scalar::is_zero(&z) {
            return z;
        }
    }
}

fn nonzero_real(rng: &mut ChaCha8Rng) -> GaussRat {
    loop {
        let z = GaussRat::from_rat(random_point(8, rng).re);
        if !Scalar::is_zero(&z) {
            return z;
        }
    }
}

fn real_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
    GaussRat::from_rat(random_point(8, rng).re)
}

fn z0() -> GaussRat {
    GaussRat::zero()
}

fn rand_c(rng: &mut ChaCha8Rng) -> CDouble {
    CDouble::from_polar(0.3 + 1.2 * rng.random::<f64>(), 2.0 * PI * rng.random::<f64>())
}

fn cube_root_of_unity(rng: &mut ChaCha8Rng) -> CDouble {
    // a primitive root of x^2 + x + 1
    let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
    CDouble::new(-0.5, s * 3f64.sqrt() / 2.0)
}

fn braid1(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    let a = nonzero_gauss(rng);
    [a.clone(), z0(), z0(), z0(), a]
}

fn braid2(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    let a = nonzero_gauss(rng);
    [a.clone(), z0(), z0(), a, z0()]
}

fn braid3(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    let a = nonzero_gauss(rng);
    [a.clone(), z0(), a, z0(), z0()]
}

fn braid4(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    // e = -a^2/b = a - b forces a = b(-1 ± sqrt5)/2
    let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
    let phi = (-1.0 + s * 5f64.sqrt()) / 2.0;
    let b = rand_c(rng);
    let a = b * CDouble::real(phi);
    [a, b, CDouble::zero(), CDouble::zero(), a - b]
}

fn braid5(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    let e = rand_c(rng);
    let b = e * cube_root_of_unity(rng);
    let c = -(b + e);
    let a = -(e * b) * (b + e).inv().expect("b + e nonzero for a primitive root");
    [a, b, c, c, e]
}

fn braid6(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    let e = rand_c(rng);
    let b = e * cube_root_of_unity(rng);
    let d = (b * b) * e.inv().unwrap();
    [e, b, e, d, e]
}

fn braid7(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    let e = rand_c(rng);
    let b = e * cube_root_of_unity(rng);
    let c = -b - e;
    let d = -(b * b) * (b + e).inv().unwrap();
    [e, b, c, d, e]
}

fn torsion_free_family(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    // c = d = e + 1 with a, b, e free
    let a = random_point(8, rng);
    let b = random_point(8, rng);
    let e = random_point(8, rng);
    let c = e.add(&GaussRat::one());
    [a, b, c.clone(), c, e]
}

fn metric_family(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    // a, c, d real, e = conj(b)
    let b = random_point(8, rng);
    [real_gauss(rng), b.clone(), real_gauss(rng), real_gauss(rng), b.conj()]
}

fn cotorsion_family(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    // e - conj(b) = c - conj(c) = d - conj(d)
    let a = random_point(8, rng);
    let b = random_point(8, rng);
    let c = random_point(8, rng);
    let im_c = GaussRat::new(crate::scalars::Rat::zero(), c.im.clone());
    let d = real_gauss(rng).add(&im_c);
    let e = b.conj().add(&im_c.add(&im_c));
    [a, b, c, d, e]
}

fn metric_torsion_free_family(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    // a, e real, b = e, c = d = e + 1
    let a = real_gauss(rng);
    let e = real_gauss(rng);
    let c = e.add(&GaussRat::one());
    [a, e.clone(), c.clone(), c, e]
}

fn angles_family(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    // torsion-free + star-compatible three-angle moduli
    let phi = PI * (2.0 * rng.random::<f64>() - 1.0);
    let delta = (PI / 2.0 - 1e-3) * (2.0 * rng.random::<f64>() - 1.0);
    let theta = phi + delta;
    let psi = (PI / 2.0 - 1e-3) * (2.0 * rng.random::<f64>() - 1.0);
    point_from_angles(theta, phi, psi)
}

fn point_from_angles(theta: f64, phi: f64, psi: f64) -> [CDouble; 5] {
    let root = (1.0 + 8.0 * (theta - phi).cos().powi(2)).sqrt();
    let a = CDouble::from_polar(1.0 / root, phi);
    let b = -CDouble::from_polar(2.0 * (theta - phi).cos() / root, theta);
    let c = CDouble::from_polar(2.0 * psi.cos() / 3.0, psi);
    let e = c - CDouble::one();
    [a, b, c, c, e]
}

fn gen_lc_point(r: f64, s_theta: f64, s_delta: f64) -> [CDouble; 5] {
    // one-parameter generalized Levi-Civita moduli on r in [1/3, 2/3];
    // the cotorsion condition ties sign(sin psi) to -sign(sin theta)
    let cos_theta = ((1.0 + 3.0 * r * r) / (4.0 * r)).min(1.0);
    let theta = s_theta * cos_theta.acos();
    let cos_delta = (r / (2.0 * (1.0 - 2.0 * r * r).sqrt())).min(1.0);
    let delta = s_delta * cos_delta.acos();
    let phi = theta - delta;
    let cos_psi = (9.0 / 8.0 * (1.0 - r * r)).sqrt().min(1.0);
    let psi = -s_theta * cos_psi.acos();
    point_from_angles(theta, phi, psi)
}

fn gen_lc_sampler(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    let r = 1.0 / 3.0 + rng.random::<f64>() / 3.0;
    let s1 = if rng.random::<bool>() { 1.0 } else { -1.0 };
    let s3 = if rng.random::<bool>() { 1.0 } else { -1.0 };
    gen_lc_point(r, s1, s3)
}

fn gen_lc_endpoints() -> Vec<[CDouble; 5]> {
    let mut v = Vec::new();
    for s1 in [1.0, -1.0] {
        for s3 in [1.0, -1.0] {
            for r in [1.0 / 3.0, 0.4, 0.5, 0.6, 2.0 / 3.0] {
                v.push(gen_lc_point(r, s1, s3));
            }
        }
    }
    v
}

fn braid_metric_i(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    let a = nonzero_real(rng);
    [a.clone(), z0(), z0(), a, z0()]
}

fn braid_metric_ii(rng: &mut ChaCha8Rng) -> [GaussRat; 5] {
    let a = nonzero_real(rng);
    [a.clone(), z0(), a, z0(), z0()]
}

fn braid_metric_iii(rng: &mut ChaCha8Rng) -> [CDouble; 5] {
    // c = d = a real nonzero, e = a exp(±2 pi i/3), b = conj(e)
    let mut a = 2.0 * rng.random::<f64>() - 1.0;
    if a.abs() < 0.05 {
        a = 0.5;
    }
    let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
    let e = CDouble::real(a) * CDouble::from_polar(1.0, s * 2.0 * PI / 3.0);
    [CDouble::real(a), e.conj(), CDouble::real(a), CDouble::real(a), e]
}

fn golden_ratio_points() -> Vec<[CDouble; 5]> {
    // c = d = 0, e = -1, b = (3 ± sqrt5)/2, a = b - 1
    [1.0, -1.0]
        .into_iter()
        .map(|s| {
            let b = (3.0 + s * 5f64.sqrt()) / 2.0;
            [
                CDouble::real(b - 1.0),
                CDouble::real(b),
                CDouble::zero(),
                CDouble::zero(),
                CDouble::real(-1.0),
            ]
        })
        .collect()
}

fn tf_braid_iii_derived() -> Vec<[CDouble; 5]> {
    // 3e^2 + 3e + 1 = 0, b = -1-2e, c = d = e+1, a = -eb/(b+e)
    [1.0, -1.0]
        .into_iter()
        .map(|s| {
            let e = CDouble::new(-0.5, s * 3f64.sqrt() / 6.0);
            let b = -(CDouble::one() + e + e);
            let c = e + CDouble::one();
            let a = -(e * b) * (b + e).inv().unwrap();
            [a, b, c, c, e]
        })
        .collect()
}

fn tf_braid_iii_printed() -> Vec<[CDouble; 5]> {
    // literal transcription, kept for the record; see the derived variant
    let s3 = 3f64.sqrt();
    [1.0, -1.0]
        .into_iter()
        .map(|s| {
            let a = CDouble::new(3.0, s * s3) * CDouble::new(3.0, s * 3.0 * s3).inv().unwrap();
            let b = CDouble::new(0.0, s / s3);
            let e = CDouble::new(0.5, -s * s3 / 6.0);
            let c = CDouble::new(0.5, -s * s3 / 6.0);
            [a, b, c, c, e]
        })
        .collect()
}

fn sqrt3_metric_star_points() -> Vec<[CDouble; 5]> {
    // a = c = d = ±1/sqrt3, b = -1/(6a) ± i/2, e = conj(b)
    let mut v = Vec::new();
    for s in [1.0f64, -1.0] {
        for t in [1.0f64, -1.0] {
            let a = s / 3f64.sqrt();
            let b = CDouble::new(-1.0 / (6.0 * a), t * 0.5);
            v.push([CDouble::real(a), b, CDouble::real(a), CDouble::real(a), b.conj()]);
        }
    }
    v
}

fn gr(n: i64, d: i64) -> GaussRat {
    GaussRat::rational(n, d)
}

fn discrete_metric_star_points(which: usize) -> Vec<[GaussRat; 5]> {
    match which {
        // b = e = c = 0, a = ±1, d = ±1 independently
        0 => [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .into_iter()
            .map(|(a, d)| [gr(a, 1), z0(), z0(), gr(d, 1), z0()])
            .collect(),
        // b = e = d = 0, a = ±1, c = ±1 independently
        1 => [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .into_iter()
            .map(|(a, c)| [gr(a, 1), z0(), gr(c, 1), z0(), z0()])
            .collect(),
        // a = d = ±1/3, b = e = c = ∓2/3
        2 => vec![
            [gr(1, 3), gr(-2, 3), gr(-2, 3), gr(1, 3), gr(-2, 3)],
            [gr(-1, 3), gr(2, 3), gr(2, 3), gr(-1, 3), gr(2, 3)],
        ],
        // a = c = ±1/3, b = e = d = ∓2/3
        _ => vec![
            [gr(1, 3), gr(-2, 3), gr(1, 3), gr(-2, 3), gr(-2, 3)],
            [gr(-1, 3), gr(2, 3), gr(-1, 3), gr(2, 3), gr(2, 3)],
        ],
    }
}

fn braided_metric_star_points() -> Vec<[GaussRat; 5]> {
    vec![
        [gr(1, 1), z0(), z0(), gr(1, 1), z0()],
        [gr(-1, 1), z0(), z0(), gr(-1, 1), z0()],
        [gr(1, 1), z0(), gr(1, 1), z0(), z0()],
        [gr(-1, 1), z0(), gr(-1, 1), z0(), z0()],
    ]
}

// --- the family table --------------------------------------------------------

fn no_fixed() -> Vec<[CDouble; 5]> {
    Vec::new()
}

fn braid_families() -> Vec<S3Family> {
    let mk = |name, paper_ref, describe, source| S3Family {
        name,
        paper_ref,
        describe,
        source,
        expect: Expect::AllSatisfy,
        informational: false,
        note: None,
    };
    vec![
        mk("braid-1", "5.2.1-1", "(a,0,0,0,a), a nonzero, sampled exactly", PointSource::ExactFn(braid1)),
        mk("braid-2", "5.2.1-2", "(a,0,0,a,0), a nonzero, sampled exactly", PointSource::ExactFn(braid2)),
        mk("braid-3", "5.2.1-3", "(a,0,a,0,0), a nonzero, sampled exactly", PointSource::ExactFn(braid3)),
        mk(
            "braid-4",
            "5.2.1-4",
            "c=d=0, e=-a^2/b=a-b with a/b a golden-ratio root, sampled numerically",
            PointSource::NumericSeq { fixed: no_fixed, sampler: braid4 },
        ),
        mk(
            "braid-5",
            "5.2.1-5",
            "b=omega*e, c=d=-(b+e), a=-eb/(b+e), omega a primitive cube root, sampled numerically",
            PointSource::NumericSeq { fixed: no_fixed, sampler: braid5 },
        ),
        mk(
            "braid-6",
            "5.2.1-6",
            "a=c=e, d=b^2/e, b=omega*e, sampled numerically",
            PointSource::NumericSeq { fixed: no_fixed, sampler: braid6 },
        ),
        mk(
            "braid-7",
            "5.2.1-7",
            "a=e, c=-b-e, d=-b^2/(b+e), b=omega*e, sampled numerically",
            PointSource::NumericSeq { fixed: no_fixed, sampler: braid7 },
        ),
    ]
}

fn families_for(conds: &BTreeSet<Condition>) -> Option<Vec<S3Family>> {
    use Condition::*;
    let key: Vec<Condition> = conds.iter().copied().collect();

    if key == [Braid] {
        return Some(braid_families());
    }
    if key == [TorsionFree] || key == [TorsionCompatible] || key == [TorsionFree, TorsionCompatible]
    {
        return Some(vec![S3Family {
            name: "torsion-free",
            paper_ref: "5.2.4",
            describe: "c = d = e + 1 with a, b, e free, sampled exactly",
            source: PointSource::ExactFn(torsion_free_family),
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [Metric] {
        return Some(vec![S3Family {
            name: "metric-preserving",
            paper_ref: "5.2.3",
            describe: "a, c, d real, e = conj(b), sampled exactly",
            source: PointSource::ExactFn(metric_family),
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [CotorsionFree] {
        return Some(vec![S3Family {
            name: "cotorsion-free",
            paper_ref: "5.2.5",
            describe: "e - conj(b) = c - conj(c) = d - conj(d), sampled exactly",
            source: PointSource::ExactFn(cotorsion_family),
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [TorsionFree, StarCompatible] {
        return Some(vec![S3Family {
            name: "torsion-free-star",
            paper_ref: "5.2.6",
            describe: "three-angle moduli (theta, phi, psi), sampled numerically",
            source: PointSource::NumericSeq { fixed: no_fixed, sampler: angles_family },
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [TorsionFree, CotorsionFree, StarCompatible] {
        return Some(vec![S3Family {
            name: "generalized-levi-civita",
            paper_ref: "5.2.7",
            describe: "r in [1/3, 2/3] with sign choices; endpoints and midpoint always included",
            source: PointSource::NumericSeq { fixed: gen_lc_endpoints, sampler: gen_lc_sampler },
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [TorsionFree, Metric] {
        return Some(vec![S3Family {
            name: "metric-torsion-free",
            paper_ref: "5.2.8-1",
            describe: "a, e real, b = e, c = d = e + 1, sampled exactly",
            source: PointSource::ExactFn(metric_torsion_free_family),
            expect: Expect::AllSatisfy,
            informational: false,
            note: None,
        }]);
    }
    if key == [Metric, StarCompatible] {
        let names = ["metric-star-i", "metric-star-ii", "metric-star-iii", "metric-star-iv"];
        let refs = ["5.2.8-2-i", "5.2.8-2-ii", "5.2.8-2-iii", "5.2.8-2-iv"];
        let mut fams: Vec<S3Family> = (0..4)
            .map(|i| S3Family {
                name: names[i],
                paper_ref: refs[i],
                describe: "discrete points, checked exactly",
                source: PointSource::ExactPoints(discrete_metric_star_points(i)),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            })
            .collect();
        fams.push(S3Family {
            name: "metric-star-extra-observed",
            paper_ref: "5.2.8-2",
            describe: "a = c = d = ±1/sqrt3, b = -1/(6a) ± i/2, e = conj(b)",
            source: PointSource::NumericPoints(sqrt3_metric_star_points()),
            expect: Expect::AllSatisfy,
            informational: true,
            note: Some(
                "machine-observed points satisfying metric + star beyond the four listed discrete families",
            ),
        });
        return Some(fams);
    }
    if key == [TorsionFree, Metric, StarCompatible] {
        let names = [
            "exclude-metric-star-i",
            "exclude-metric-star-ii",
            "exclude-metric-star-iii",
            "exclude-metric-star-iv",
        ];
        let mut fams: Vec<S3Family> = (0..4)
            .map(|i| S3Family {
                name: names[i],
                paper_ref: "5.2.8-3",
                describe: "metric+star discrete points must all fail torsion-freeness",
                source: PointSource::ExactPoints(discrete_metric_star_points(i)),
                expect: Expect::NoneSatisfy,
                informational: false,
                note: None,
            })
            .collect();
        fams.push(S3Family {
            name: "exclude-metric-torsion-free",
            paper_ref: "5.2.8-3",
            describe: "metric+torsion-free sampler points must all fail star-compatibility",
            source: PointSource::ExactFn(metric_torsion_free_family),
            expect: Expect::NoneSatisfy,
            informational: false,
            note: None,
        });
        return Some(fams);
    }
    if key == [Braid, TorsionFree] {
        return Some(vec![
            S3Family {
                name: "braid-tf-i",
                paper_ref: "5.2.9-1-i",
                describe: "the point (-1,0,0,0,-1), checked exactly",
                source: PointSource::ExactPoints(vec![[gr(-1, 1), z0(), z0(), z0(), gr(-1, 1)]]),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "braid-tf-ii",
                paper_ref: "5.2.9-1-ii",
                describe: "c=d=0, e=-1, b=(3±sqrt5)/2, a=b-1, checked numerically",
                source: PointSource::NumericPoints(golden_ratio_points()),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "braid-tf-iii-derived",
                paper_ref: "5.2.9-1-iii",
                describe: "3e^2+3e+1=0, b=-1-2e, c=d=e+1, a=-eb/(b+e), checked numerically",
                source: PointSource::NumericPoints(tf_braid_iii_derived()),
                expect: Expect::AllSatisfy,
                informational: false,
                note: Some("constraint-derived reading of the listed family"),
            },
            S3Family {
                name: "braid-tf-iii-as-printed",
                paper_ref: "5.2.9-1-iii",
                describe: "literal transcription of the displayed tuple",
                source: PointSource::NumericPoints(tf_braid_iii_printed()),
                expect: Expect::AllSatisfy,
                informational: true,
                note: Some(
                    "fails as printed; the displayed e has the wrong sign pattern for c = d = e + 1",
                ),
            },
        ]);
    }
    if key == [Braid, Metric] {
        return Some(vec![
            S3Family {
                name: "braid-metric-i",
                paper_ref: "5.2.9-2-i",
                describe: "(a,0,0,a,0), a real nonzero, sampled exactly",
                source: PointSource::ExactFn(braid_metric_i),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "braid-metric-ii",
                paper_ref: "5.2.9-2-ii",
                describe: "(a,0,a,0,0), a real nonzero, sampled exactly",
                source: PointSource::ExactFn(braid_metric_ii),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "braid-metric-iii",
                paper_ref: "5.2.9-2-iii",
                describe: "c = d = a real, e = a exp(±2 pi i/3), b = conj(e), sampled numerically",
                source: PointSource::NumericSeq { fixed: no_fixed, sampler: braid_metric_iii },
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
        ]);
    }
    if key == [Braid, TorsionFree, CotorsionFree] {
        return Some(vec![
            S3Family {
                name: "exclude-braid-tf-i-cotorsion",
                paper_ref: "5.2.9-3",
                describe: "braid+torsion-free point must fail cotorsion-freeness",
                source: PointSource::ExactPoints(vec![[gr(-1, 1), z0(), z0(), z0(), gr(-1, 1)]]),
                expect: Expect::NoneSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "exclude-braid-tf-ii-cotorsion",
                paper_ref: "5.2.9-3",
                describe: "golden-ratio braid+torsion-free points must fail cotorsion-freeness",
                source: PointSource::NumericPoints(golden_ratio_points()),
                expect: Expect::NoneSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "exclude-braid-tf-iii-cotorsion",
                paper_ref: "5.2.9-3",
                describe: "derived braid+torsion-free points must fail cotorsion-freeness",
                source: PointSource::NumericPoints(tf_braid_iii_derived()),
                expect: Expect::NoneSatisfy,
                informational: false,
                note: None,
            },
        ]);
    }
    if key == [Braid, TorsionFree, StarCompatible] {
        return Some(vec![
            S3Family {
                name: "exclude-braid-tf-ii-star",
                paper_ref: "5.2.9-3",
                describe: "golden-ratio braid+torsion-free points fail star-compatibility",
                source: PointSource::NumericPoints(golden_ratio_points()),
                expect: Expect::NoneSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "anomaly-braid-tf-i-star",
                paper_ref: "5.2.9-3",
                describe: "(-1,0,0,0,-1), i.e. sigma = -id",
                source: PointSource::ExactPoints(vec![[gr(-1, 1), z0(), z0(), z0(), gr(-1, 1)]]),
                expect: Expect::NoneSatisfy,
                informational: true,
                note: Some(
                    "machine verdict: this point does satisfy braid + torsion-free + star (N(e) and N(12) are unitary), so the listed exclusion does not hold here",
                ),
            },
            S3Family {
                name: "anomaly-braid-tf-iii-star",
                paper_ref: "5.2.9-3",
                describe: "derived braid+torsion-free points",
                source: PointSource::NumericPoints(tf_braid_iii_derived()),
                expect: Expect::NoneSatisfy,
                informational: true,
                note: Some("machine verdict: these points satisfy the conjunction as well"),
            },
        ]);
    }
    if key == [Braid, Metric, StarCompatible] {
        return Some(vec![
            S3Family {
                name: "braided-levi-civita-with-torsion",
                paper_ref: "5.2.10",
                describe: "a = d = ±1 and a = c = ±1 points; sigma^3 = ±1",
                source: PointSource::ExactPoints(braided_metric_star_points()),
                expect: Expect::AllSatisfy,
                informational: false,
                note: None,
            },
            S3Family {
                name: "braid-metric-star-extra-observed",
                paper_ref: "5.2.10",
                describe: "a = c = d = ±1/sqrt3 points from the fifth braid family",
                source: PointSource::NumericPoints(sqrt3_metric_star_points()),
                expect: Expect::AllSatisfy,
                informational: true,
                note: Some(
                    "machine-observed points satisfying braid + metric + star beyond the two listed families",
                ),
            },
        ]);
    }
    None
}

const SUPPORTED_SETS: &[&str] = &[
    "{braid}",
    "{torsion_free}",
    "{torsion_compatible}",
    "{torsion_free, torsion_compatible}",
    "{metric}",
    "{cotorsion_free}",
    "{torsion_free, star_compatible}",
    "{torsion_free, cotorsion_free, star_compatible}",
    "{metric, torsion_free}",
    "{metric, star_compatible}",
    "{metric, torsion_free, star_compatible}",
    "{braid, torsion_free}",
    "{braid, metric}",
    "{braid, torsion_free, cotorsion_free}",
    "{braid, torsion_free, star_compatible}",
    "{braid, metric, star_compatible}",
];

fn fmt_point<K: Scalar>(p: &[K; 5]) -> String {
    format!("({}, {}, {}, {}, {})", p[0], p[1], p[2], p[3], p[4])
}

fn run_family(
    fam: &S3Family,
    conds: &BTreeSet<Condition>,
    cfg: &ClassifyConfig,
    exact_calc: &FGCalculus<GaussRat>,
    num_calc: &FGCalculus<CDouble>,
    rng: &mut ChaCha8Rng,
) -> FamilyResult {
    let mut checked = 0usize;
    let mut unexpected: Vec<String> = Vec::new();
    let want = matches!(fam.expect, Expect::AllSatisfy);
    match &fam.source {
        PointSource::ExactPoints(pts) => {
            for p in pts {
                checked += 1;
                if eval_conjunction(exact_calc, &S3Params::from_array(p.clone()), conds, 0.0)
                    != want
                {
                    unexpected.push(fmt_point(p));
                }
            }
        }
        PointSource::ExactFn(f) => {
            for _ in 0..cfg.family_samples {
                checked += 1;
                let p = f(rng);
                if eval_conjunction(exact_calc, &S3Params::from_array(p.clone()), conds, 0.0)
                    != want
                {
                    unexpected.push(fmt_point(&p));
                }
            }
        }
        PointSource::NumericPoints(pts) => {
            for p in pts {
                checked += 1;
                if eval_conjunction(num_calc, &S3Params::from_array(*p), conds, cfg.tolerance)
                    != want
                {
                    unexpected.push(fmt_point(p));
                }
            }
        }
        PointSource::NumericSeq { fixed, sampler } => {
            for p in fixed() {
                checked += 1;
                if eval_conjunction(num_calc, &S3Params::from_array(p), conds, cfg.tolerance)
                    != want
                {
                    unexpected.push(fmt_point(&p));
                }
            }
            while checked < cfg.family_samples {
                checked += 1;
                let p = sampler(rng);
                if eval_conjunction(num_calc, &S3Params::from_array(p), conds, cfg.tolerance)
                    != want
                {
                    unexpected.push(fmt_point(&p));
                }
            }
        }
    }
    let pass = unexpected.is_empty();
    let mut witness = json!({
        "points_checked": checked,
        "expectation": if want {
            "all points satisfy the conjunction"
        } else {
            "no point satisfies the conjunction"
        },
        "unexpected_points": unexpected,
    });
    if let Some(note) = fam.note {
        witness["note"] = json!(note);
    }
    FamilyResult {
        name: fam.name.to_string(),
        paper_ref: fam.paper_ref.to_string(),
        params_or_sampler: fam.describe.to_string(),
        pass,
        informational: fam.informational,
        witness,
    }
}

/// Certify the known families for a conjunction of predicates and refute the
/// conjunction at random off-family points. Deterministic for a fixed config.
pub fn classify_s3(
    conditions: &[Condition],
    cfg: &ClassifyConfig,
) -> Result<ClassifyReport, ClassifyError> {
    let conds: BTreeSet<Condition> = conditions.iter().copied().collect();
    let fams = families_for(&conds).ok_or_else(|| ClassifyError::UnknownConditionSet {
        requested: conds.iter().map(|c| c.name()).collect::<Vec<_>>().join(", "),
        supported: SUPPORTED_SETS.join(", "),
    })?;

    let exact_calc: FGCalculus<GaussRat> = FGCalculus::s3_standard();
    let num_calc: FGCalculus<CDouble> = FGCalculus::s3_standard();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let families: Vec<FamilyResult> = fams
        .iter()
        .map(|f| run_family(f, &conds, cfg, &exact_calc, &num_calc, &mut rng))
        .collect();

    // Generic points fail any measure-zero conjunction; sample and confirm.
    let mut satisfying = Vec::new();
    for _ in 0..cfg.off_family_samples {
        if cfg.backend == Backend::CDouble {
            let p: [CDouble; 5] = std::array::from_fn(|_| rand_c(&mut rng));
            if eval_conjunction(&num_calc, &S3Params::from_array(p), &conds, cfg.tolerance) {
                satisfying.push(fmt_point(&p));
            }
        } else {
            let p: [GaussRat; 5] = std::array::from_fn(|_| random_point(8, &mut rng));
            if eval_conjunction(&exact_calc, &S3Params::from_array(p.clone()), &conds, 0.0) {
                satisfying.push(fmt_point(&p));
            }
        }
    }

    Ok(ClassifyReport {
        condition_set: conds.iter().map(|c| c.name().to_string()).collect(),
        families,
        off_family_samples: OffFamilyResult {
            count: cfg.off_family_samples,
            all_failed: satisfying.is_empty(),
            satisfying_points: satisfying,
        },
        seed: cfg.seed,
        backend: cfg.backend.name().to_string(),
        tolerance: cfg.tolerance,
    })
}
