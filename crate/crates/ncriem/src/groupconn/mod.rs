//! Bimodule connections on the 1-forms of C(G): the Christoffel tensor,
//! the generalized braiding sigma, and the torsion / cotorsion / metric /
//! star predicates, specialized goldens for S3 with the transposition
//! calculus and the Euclidean metric.

pub mod classify;

use thiserror::Error;

use crate::groupcalc::{add_scaled, CalcError, FGCalculus};
use crate::matrix::{braid_defect, Mat};
use crate::scalars::Scalar;

#[derive(Debug, Error)]
pub enum ConnError {
    #[error("ill-defined sigma: Gamma[{a}][{b}][{c}] must vanish when a^-1 b c leaves C u {{e}}")]
    IllDefinedSigma { a: usize, b: usize, c: usize },
    #[error("wrong tensor size: expected {expected}, got {got}")]
    BadTensor { expected: usize, got: usize },
    #[error("metric must be Hermitian")]
    NotHermitian,
    #[error(transparent)]
    Calc(#[from] CalcError),
}

/// Christoffel tensor Gamma[a][b][c] on the invariant forms,
/// nabla^L(xi^a) = -Gamma[a][b][c] xi^b (x) xi^c.
#[derive(Clone, Debug)]
pub struct GammaHat<K> {
    m: usize,
    t: Vec<K>,
}

impl<K: Scalar> GammaHat<K> {
    /// Checks the well-definedness condition a^-1 b c in C u {e} wherever the
    /// coefficient is nonzero; that is exactly when sigma exists.
    pub fn new(calc: &FGCalculus<K>, t: Vec<K>) -> Result<Self, ConnError> {
        let m = calc.dim_forms();
        if t.len() != m * m * m {
            return Err(ConnError::BadTensor { expected: m * m * m, got: t.len() });
        }
        let group = calc.group();
        let gens = calc.gens();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let w = group.mul(
                        group.mul(group.inv(gens.elem(a)), gens.elem(b)),
                        gens.elem(c),
                    );
                    let allowed = w == group.identity() || gens.pos(w).is_some();
                    if !allowed && !t[(a * m + b) * m + c].is_zero() {
                        return Err(ConnError::IllDefinedSigma { a, b, c });
                    }
                }
            }
        }
        Ok(GammaHat { m, t })
    }

    pub fn zero(calc: &FGCalculus<K>) -> Self {
        let m = calc.dim_forms();
        GammaHat { m, t: vec![K::zero(); m * m * m] }
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &K {
        &self.t[(a * self.m + b) * self.m + c]
    }

    pub fn dim(&self) -> usize {
        self.m
    }
}

/// The five right-invariant Christoffel values on S3 with C the
/// transpositions: with x, y, z distinct,
/// Gamma^x_xx = a - 1, Gamma^y_xx = b, Gamma^x_yz = c,
/// Gamma^x_yx = d - 1, Gamma^x_xy = e.
#[derive(Clone, Debug, PartialEq)]
pub struct S3Params<K> {
    pub a: K,
    pub b: K,
    pub c: K,
    pub d: K,
    pub e: K,
}

impl<K: Scalar> S3Params<K> {
    pub fn new(a: K, b: K, c: K, d: K, e: K) -> Self {
        S3Params { a, b, c, d, e }
    }

    pub fn from_array(v: [K; 5]) -> Self {
        let [a, b, c, d, e] = v;
        S3Params { a, b, c, d, e }
    }

    pub fn to_array(&self) -> [K; 5] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone(), self.e.clone()]
    }

    pub fn maurer_cartan() -> Self {
        S3Params::new(K::one(), K::zero(), K::zero(), K::one(), K::zero())
    }

    pub fn to_gamma(&self, calc: &FGCalculus<K>) -> GammaHat<K> {
        let m = calc.dim_forms();
        assert_eq!(m, 3, "the five-parameter form is specific to the S3 calculus");
        let one = K::one();
        let mut t = Vec::with_capacity(27);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let v = if a == b && b == c {
                        self.a.sub(&one)
                    } else if b == c {
                        self.b.clone()
                    } else if b == a {
                        self.e.clone()
                    } else if c == a {
                        self.d.sub(&one)
                    } else {
                        self.c.clone()
                    };
                    t.push(v);
                }
            }
        }
        GammaHat::new(calc, t).expect("products of three transpositions stay in C")
    }
}

/// A bimodule connection: Christoffel tensor plus the matrix of
/// sigma(xi^d (x) xi^k) = sum_{bc = dk} (Gamma^d_bc + delta_{d,c}) xi^b (x) xi^c
/// on the ordered tensor basis.
pub struct FGConnection<K> {
    gamma: GammaHat<K>,
    sigma: Mat<K>,
}

impl<K: Scalar> FGConnection<K> {
    pub fn new(calc: &FGCalculus<K>, gamma: GammaHat<K>) -> Self {
        let m = calc.dim_forms();
        let group = calc.group();
        let gens = calc.gens();
        let mut sigma = Mat::zeros(m * m, m * m);
        for d in 0..m {
            for k in 0..m {
                let col = d * m + k;
                let w = group.mul(gens.elem(d), gens.elem(k));
                for b in 0..m {
                    for c in 0..m {
                        if group.mul(gens.elem(b), gens.elem(c)) != w {
                            continue;
                        }
                        let mut v = gamma.get(d, b, c).clone();
                        if d == c {
                            v = v.add(&K::one());
                        }
                        sigma[(b * m + c, col)] = v;
                    }
                }
            }
        }
        FGConnection { gamma, sigma }
    }

    pub fn from_s3_params(calc: &FGCalculus<K>, p: &S3Params<K>) -> Self {
        FGConnection::new(calc, p.to_gamma(calc))
    }

    pub fn maurer_cartan(calc: &FGCalculus<K>) -> Self {
        FGConnection::new(calc, GammaHat::zero(calc))
    }

    pub fn gamma(&self) -> &GammaHat<K> {
        &self.gamma
    }

    pub fn sigma(&self) -> &Mat<K> {
        &self.sigma
    }

    /// Torsion of the invariant forms: T(xi^a) = wedge(nabla xi^a) - d xi^a,
    /// one Lambda^2 coordinate vector per generator.
    pub fn torsion(&self, calc: &FGCalculus<K>) -> Vec<Vec<K>> {
        let m = calc.dim_forms();
        let d2 = calc.dim_wedge();
        let mut out = Vec::with_capacity(m);
        for a in 0..m {
            let mut v = vec![K::zero(); d2];
            for b in 0..m {
                for c in 0..m {
                    let coeff = self.gamma.get(a, b, c).neg();
                    add_scaled(&mut v, &calc.wedge_pair(b, c), &coeff);
                }
            }
            for t in 0..d2 {
                v[t] = v[t].sub(&calc.dxi(a)[t]);
            }
            out.push(v);
        }
        out
    }

    pub fn is_torsion_free(&self, calc: &FGCalculus<K>, eps: f64) -> bool {
        self.torsion(calc).iter().all(|v| v.iter().all(|x| x.is_zero_eps(eps)))
    }

    /// image(id + sigma) inside ker(wedge), as the matrix identity
    /// reduce * (I + sigma) = 0.
    pub fn is_torsion_compatible(&self, calc: &FGCalculus<K>, eps: f64) -> bool {
        let m = calc.dim_forms();
        let id = Mat::identity(m * m);
        calc.reduction().mul(&id.add(&self.sigma)).is_zero_eps(eps)
    }

    /// Metric preservation: sum_b g[a][b] Gamma^b_{d,c} equals
    /// sum_b g[c][b] conj(Gamma^b_{d^-1,a}) for all a, c, d.
    pub fn is_metric_preserving(
        &self,
        calc: &FGCalculus<K>,
        g: &FGMetric<K>,
        eps: f64,
    ) -> Result<bool, ConnError> {
        if !calc.gens().is_inverse_closed() {
            return Err(ConnError::Calc(CalcError::NotInverseClosed));
        }
        g.check_hermitian(eps)?;
        let m = calc.dim_forms();
        let group = calc.group();
        let gens = calc.gens();
        for a in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let dinv = gens.pos(group.inv(gens.elem(d))).unwrap();
                    let mut lhs = K::zero();
                    let mut rhs = K::zero();
                    for b in 0..m {
                        lhs = lhs.add(&g.entry(a, b).mul(self.gamma.get(b, d, c)));
                        rhs = rhs.add(&g.entry(c, b).mul(&self.gamma.get(b, dinv, a).conj()));
                    }
                    if !lhs.eq_eps(&rhs, eps) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Vanishing cotorsion with constant metric coefficients:
    /// (g Gamma + Gamma^* g) ^ e-basis = 0 in Lambda^2, with
    /// (xi^k)* = -xi^{k^-1}.
    pub fn is_cotorsion_free(
        &self,
        calc: &FGCalculus<K>,
        g: &FGMetric<K>,
        eps: f64,
    ) -> Result<bool, ConnError> {
        if !calc.gens().is_inverse_closed() {
            return Err(ConnError::Calc(CalcError::NotInverseClosed));
        }
        g.check_hermitian(eps)?;
        let m = calc.dim_forms();
        let d2 = calc.dim_wedge();
        let group = calc.group();
        let gens = calc.gens();
        for a in 0..m {
            let mut acc = vec![K::zero(); d2];
            for c in 0..m {
                for b in 0..m {
                    for k in 0..m {
                        // (g Gamma)_{a,c} wedge xi^c
                        let coeff = g.entry(a, b).mul(self.gamma.get(b, k, c));
                        add_scaled(&mut acc, &calc.wedge_pair(k, c), &coeff);
                        // (Gamma^* g)_{a,c} wedge xi^c picks up the form star
                        let kinv = gens.pos(group.inv(gens.elem(k))).unwrap();
                        let coeff2 = self.gamma.get(b, k, a).conj().mul(&g.entry(b, c)).neg();
                        add_scaled(&mut acc, &calc.wedge_pair(kinv, c), &coeff2);
                    }
                }
            }
            if !acc.iter().all(|x| x.is_zero_eps(eps)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Star compatibility as the matrix identity conj(sigma) F sigma = F,
    /// where F is the flip xi^a (x) xi^b -> xi^{b^-1} (x) xi^{a^-1}; this is
    /// the tensor form of the compatibility sum over the Christoffel values.
    pub fn is_star_compatible(&self, calc: &FGCalculus<K>, eps: f64) -> Result<bool, ConnError> {
        if !calc.gens().is_inverse_closed() {
            return Err(ConnError::Calc(CalcError::NotInverseClosed));
        }
        let m = calc.dim_forms();
        let group = calc.group();
        let gens = calc.gens();
        let mut flip = Mat::<K>::zeros(m * m, m * m);
        for i in 0..m {
            for j in 0..m {
                let ii = gens.pos(group.inv(gens.elem(i))).unwrap();
                let jj = gens.pos(group.inv(gens.elem(j))).unwrap();
                flip[(jj * m + ii, i * m + j)] = K::one();
            }
        }
        let sc = self.sigma.conj_entries();
        Ok(sc.mul(&flip).mul(&self.sigma).eq_eps(&flip, eps))
    }

    /// Invertible sigma satisfying the braid relations on the triple tensor space.
    pub fn is_braided(&self, calc: &FGCalculus<K>, eps: f64) -> bool {
        let m = calc.dim_forms();
        if !self
            .sigma
            .det()
            .map(|d| !d.is_zero_eps(eps.max(1e-12)))
            .unwrap_or(false)
        {
            return false;
        }
        braid_defect(&self.sigma, m).map(|d| d.is_zero_eps(eps)).unwrap_or(false)
    }

    /// lambda with sigma^k = lambda * id, when sigma^k is scalar.
    pub fn sigma_power_check(&self, k: usize, eps: f64) -> Option<K> {
        self.sigma.pow(k).as_scalar_multiple_of_identity(eps)
    }

    /// N(w)_{a,c} = Gamma^a_{w c^-1, c} + delta_{a,c} for a two-generator
    /// product w; unitarity of N(e) and N(12) captures star compatibility
    /// on S3.
    pub fn n_matrix(&self, calc: &FGCalculus<K>, w: usize) -> Option<Mat<K>> {
        let m = calc.dim_forms();
        let group = calc.group();
        let gens = calc.gens();
        let mut n = Mat::zeros(m, m);
        for c in 0..m {
            let b_elem = group.mul(w, group.inv(gens.elem(c)));
            let b = gens.pos(b_elem)?;
            for a in 0..m {
                let mut v = self.gamma.get(a, b, c).clone();
                if a == c {
                    v = v.add(&K::one());
                }
                n[(a, c)] = v;
            }
        }
        Some(n)
    }
}

/// Hermitian metric coefficients g[a][b] on the invariant forms.
#[derive(Clone)]
pub struct FGMetric<K> {
    mat: Mat<K>,
}

impl<K: Scalar> FGMetric<K> {
    pub fn new(mat: Mat<K>) -> Self {
        FGMetric { mat }
    }

    /// The Euclidean metric, diagonal with equal entries normalized to 1.
    pub fn euclidean(m: usize) -> Self {
        FGMetric { mat: Mat::identity(m) }
    }

    pub fn entry(&self, a: usize, b: usize) -> &K {
        &self.mat[(a, b)]
    }

    fn check_hermitian(&self, eps: f64) -> Result<(), ConnError> {
        if self.mat.adjoint().eq_eps(&self.mat, eps) {
            Ok(())
        } else {
            Err(ConnError::NotHermitian)
        }
    }

    /// Diagonal with all diagonal entries equal (the Euclidean shape).
    pub fn diagonal_equal(&self, eps: f64) -> bool {
        let n = self.mat.rows();
        self.is_right_module_invariant(eps)
            && (1..n).all(|i| self.mat[(i, i)].eq_eps(&self.mat[(0, 0)], eps))
    }

    /// Right-module invariance of the Hermitian structure means diagonality.
    pub fn is_right_module_invariant(&self, eps: f64) -> bool {
        let n = self.mat.rows();
        (0..n).all(|i| (0..n).all(|j| i == j || self.mat[(i, j)].is_zero_eps(eps)))
    }

    /// Right-comodule invariance means the diagonal is constant on
    /// conjugacy classes of the generating set.
    pub fn is_right_comodule_invariant<G>(&self, calc: &FGCalculus<G>, eps: f64) -> bool
    where
        G: Scalar,
    {
        let gens = calc.gens();
        let group = calc.group();
        for i in 0..gens.len() {
            for g in 0..group.order() {
                let conj = group.conj(g, gens.elem(i));
                if let Some(j) = gens.pos(conj) {
                    if !self.mat[(i, i)].eq_eps(&self.mat[(j, j)], eps) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
