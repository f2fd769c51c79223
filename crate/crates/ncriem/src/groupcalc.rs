//! First-order differential calculus on C(G) for a finite group G with a
//! generating set C: bimodule relations, exterior derivative, the braiding
//! Psi on invariant 2-tensors, the Lambda^2 quotient and the star operation.
//!
//! Conventions: functions on G are coefficient vectors over the delta basis;
//! 1-forms are written in the left normal form sum_{g,c} f[g,c] delta_g xi^c
//! with xi^c . f = (R_c f) . xi^c, where (R_c f)(x) = f(xc).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Mat;
use crate::scalars::{GaussRat, Scalar};

#[derive(Debug, Error)]
pub enum CalcError {
    #[error("not a group: {0}")]
    BadGroup(String),
    #[error("generating set is not ad-stable; the braiding needs a bicovariant calculus")]
    NotAdStable,
    #[error("generating set is not inverse-closed; the star operation is unavailable")]
    NotInverseClosed,
    #[error("pinned wedge basis is not a complement of ker(id - psi)")]
    BadComplement,
}

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mult_table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates the table: closure, identity, inverses, associativity
    /// (exhaustive up to order 24, sampled above).
    pub fn from_table(mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, CalcError> {
        let n = mul.len();
        if n == 0 {
            return Err(CalcError::BadGroup("empty table".into()));
        }
        if mul.iter().any(|row| row.len() != n) || labels.len() != n {
            return Err(CalcError::BadGroup("table/labels shape mismatch".into()));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(CalcError::BadGroup("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| CalcError::BadGroup("no identity element".into()))?;
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| CalcError::BadGroup(format!("element {g} has no inverse")))?;
        }
        let assoc = |a: usize, b: usize, c: usize| mul[mul[a][b]][c] == mul[a][mul[b][c]];
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(CalcError::BadGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..4096 {
                let mut next = || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    (state % n as u64) as usize
                };
                let (a, b, c) = (next(), next(), next());
                if !assoc(a, b, c) {
                    return Err(CalcError::BadGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(FiniteGroup { order: n, mul, inv, identity, labels })
    }

    pub fn from_json(j: &GroupJson) -> Result<Self, CalcError> {
        if j.order != j.mult_table.len() {
            return Err(CalcError::BadGroup("order/table mismatch".into()));
        }
        FiniteGroup::from_table(j.mult_table.clone(), j.labels.clone())
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order, mult_table: self.mul.clone(), labels: self.labels.clone() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conj(&self, a: usize, b: usize) -> usize {
        // a b a^-1
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// The symmetric group on three symbols; elements ordered
    /// e, (12), (13), (23), (123), (132), composing right-to-left.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2], // e
            [1, 0, 2], // (12)
            [2, 1, 0], // (13)
            [0, 2, 1], // (23)
            [1, 2, 0], // (123)
            [2, 0, 1], // (132)
        ];
        let compose = |f: &[usize; 3], g: &[usize; 3]| -> [usize; 3] {
            [f[g[0]], f[g[1]], f[g[2]]]
        };
        let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let mul = (0..6)
            .map(|a| (0..6).map(|b| index_of(&compose(&perms[a], &perms[b]))).collect())
            .collect();
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .map(String::from)
            .to_vec();
        FiniteGroup::from_table(mul, labels).expect("S3 table is a group")
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| format!("g{k}")).collect();
        FiniteGroup::from_table(mul, labels).expect("Z_n table is a group")
    }

    /// Dihedral group of order 8 as symmetries of the square,
    /// listed as r^k then s r^k.
    pub fn d4() -> Self {
        let r: [usize; 4] = [1, 2, 3, 0];
        let s: [usize; 4] = [1, 0, 3, 2];
        let compose = |f: &[usize; 4], g: &[usize; 4]| -> [usize; 4] {
            [f[g[0]], f[g[1]], f[g[2]], f[g[3]]]
        };
        let mut elems: Vec<[usize; 4]> = Vec::with_capacity(8);
        let mut labels: Vec<String> = Vec::with_capacity(8);
        let mut rk = [0, 1, 2, 3];
        for k in 0..4 {
            elems.push(rk);
            labels.push(if k == 0 { "e".into() } else { format!("r{k}") });
            rk = compose(&r, &rk);
        }
        let mut rk = [0, 1, 2, 3];
        for k in 0..4 {
            elems.push(compose(&s, &rk));
            labels.push(if k == 0 { "s".into() } else { format!("sr{k}") });
            rk = compose(&r, &rk);
        }
        let index_of = |p: &[usize; 4]| elems.iter().position(|q| q == p).unwrap();
        let mul = (0..8)
            .map(|a| (0..8).map(|b| index_of(&compose(&elems[a], &elems[b]))).collect())
            .collect();
        FiniteGroup::from_table(mul, labels).expect("D4 table is a group")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        if name == "s3" {
            return Some(FiniteGroup::s3());
        }
        if name == "d4" {
            return Some(FiniteGroup::d4());
        }
        if let Some(n) = name.strip_prefix("z_").or_else(|| name.strip_prefix("z")) {
            if let Ok(n) = n.parse::<usize>() {
                if n >= 1 {
                    return Some(FiniteGroup::cyclic(n));
                }
            }
        }
        None
    }
}

/// A generating subset C not containing the identity, with its covariance
/// flags recomputed from the table rather than trusted from the caller.
#[derive(Clone)]
pub struct GenSet {
    elems: Vec<usize>,
    pos_of: Vec<Option<usize>>,
    ad_stable: bool,
    inverse_closed: bool,
}

impl GenSet {
    pub fn new(group: &FiniteGroup, mut elems: Vec<usize>) -> Result<Self, CalcError> {
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&c| c == group.identity() || c >= group.order()) {
            return Err(CalcError::BadGroup("generating set must avoid the identity".into()));
        }
        let mut pos_of = vec![None; group.order()];
        for (i, &c) in elems.iter().enumerate() {
            pos_of[c] = Some(i);
        }
        let ad_stable = (0..group.order())
            .all(|g| elems.iter().all(|&c| pos_of[group.conj(g, c)].is_some()));
        let inverse_closed = elems.iter().all(|&c| pos_of[group.inv(c)].is_some());
        Ok(GenSet { elems, pos_of, ad_stable, inverse_closed })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn elem(&self, pos: usize) -> usize {
        self.elems[pos]
    }

    pub fn pos(&self, elem: usize) -> Option<usize> {
        self.pos_of.get(elem).copied().flatten()
    }

    pub fn is_ad_stable(&self) -> bool {
        self.ad_stable
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_closed
    }
}

/// A 1-form sum_{g,c} f[g,c] delta_g xi^c, stored row-major over (g, c).
#[derive(Clone, Debug, PartialEq)]
pub struct Form1<K> {
    pub coeffs: Vec<K>,
}

/// A 2-form with coefficients over G x Lambda^2-basis, always reduced.
#[derive(Clone, Debug, PartialEq)]
pub struct Form2<K> {
    pub coeffs: Vec<K>,
}

impl<K: Scalar> Form1<K> {
    pub fn is_zero_eps(&self, eps: f64) -> bool {
        self.coeffs.iter().all(|x| x.is_zero_eps(eps))
    }
}

impl<K: Scalar> Form2<K> {
    pub fn is_zero_eps(&self, eps: f64) -> bool {
        self.coeffs.iter().all(|x| x.is_zero_eps(eps))
    }

    pub fn max_residual(&self) -> f64 {
        self.coeffs.iter().map(Scalar::residual).fold(0.0, f64::max)
    }
}

/// The first-order calculus data on C(G): the braiding on invariant
/// 2-tensors, the Lambda^2 reduction, and the d / star tables.
pub struct FGCalculus<K> {
    group: FiniteGroup,
    gens: GenSet,
    psi_perm: Vec<usize>,
    psi: Mat<K>,
    wedge_basis: Vec<(usize, usize)>,
    /// dim(Lambda^2) x |C|^2 reduction from invariant 2-tensors to Lambda^2.
    reduce: Mat<K>,
    /// Lambda^2 coordinates of d(xi^c), one column per generator position.
    dxi: Vec<Vec<K>>,
}

fn pair_index(m: usize, i: usize, j: usize) -> usize {
    i * m + j
}

impl<K: Scalar> FGCalculus<K> {
    /// Builds the calculus; `pinned_wedge_basis` fixes the ordered complement
    /// used as the Lambda^2 basis (positions into C), with a deterministic
    /// greedy choice otherwise.
    pub fn build(
        group: FiniteGroup,
        gens: GenSet,
        pinned_wedge_basis: Option<Vec<(usize, usize)>>,
    ) -> Result<Self, CalcError> {
        if !gens.is_ad_stable() {
            return Err(CalcError::NotAdStable);
        }
        let m = gens.len();
        let mm = m * m;

        // Psi(xi^a (x) xi^b) = xi^{aba^-1} (x) xi^a is a permutation of pairs.
        let mut psi_perm = vec![0usize; mm];
        for i in 0..m {
            for j in 0..m {
                let a = gens.elem(i);
                let b = gens.elem(j);
                let t = gens.pos(group.conj(a, b)).expect("ad-stable");
                psi_perm[pair_index(m, i, j)] = pair_index(m, t, i);
            }
        }

        // ker(id - Psi) is spanned by the cycle sums of the permutation.
        let mut seen = vec![false; mm];
        let mut kernel: Vec<Vec<GaussRat>> = Vec::new();
        for start in 0..mm {
            if seen[start] {
                continue;
            }
            let mut v = vec![GaussRat::zero(); mm];
            let mut p = start;
            loop {
                seen[p] = true;
                v[p] = GaussRat::one();
                p = psi_perm[p];
                if p == start {
                    break;
                }
            }
            kernel.push(v);
        }
        let dim2 = mm - kernel.len();

        let complement: Vec<usize> = match &pinned_wedge_basis {
            Some(pairs) => pairs.iter().map(|&(i, j)| pair_index(m, i, j)).collect(),
            None => {
                let mut chosen: Vec<usize> = Vec::new();
                for cand in 0..mm {
                    if chosen.len() == dim2 {
                        break;
                    }
                    let mut cols: Vec<Vec<GaussRat>> = kernel.clone();
                    for &c in chosen.iter().chain(std::iter::once(&cand)) {
                        let mut v = vec![GaussRat::zero(); mm];
                        v[c] = GaussRat::one();
                        cols.push(v);
                    }
                    let mat = Mat::from_fn(mm, cols.len(), |r, c| cols[c][r].clone());
                    if mat.rank() == cols.len() {
                        chosen.push(cand);
                    }
                }
                chosen
            }
        };
        if complement.len() != dim2 {
            return Err(CalcError::BadComplement);
        }

        // reduce = bottom rows of B^-1 where B = [kernel | complement].
        let ncols = kernel.len() + dim2;
        let b = Mat::from_fn(mm, ncols, |r, c| {
            if c < kernel.len() {
                kernel[c][r].clone()
            } else if complement[c - kernel.len()] == r {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        });
        let binv = b.inverse().ok_or(CalcError::BadComplement)?;
        let reduce_rat = Mat::from_fn(dim2, mm, |r, c| binv[(kernel.len() + r, c)].clone());

        let psi = Mat::from_fn(mm, mm, |r, c| {
            if psi_perm[c] == r {
                K::one()
            } else {
                K::zero()
            }
        });
        let reduce = reduce_rat.map(|x| K::from_gauss(x));
        let wedge_basis = complement.iter().map(|&p| (p / m, p % m)).collect();

        let mut calc = FGCalculus { group, gens, psi_perm, psi, wedge_basis, reduce, dxi: Vec::new() };

        // d(xi^c) = sum_a (xi^a ^ xi^c + xi^c ^ xi^a) - sum_{ab=c} xi^a ^ xi^b
        let mut dxi = Vec::with_capacity(m);
        for j in 0..m {
            let mut v = vec![K::zero(); dim2];
            for i in 0..m {
                add_scaled(&mut v, &calc.wedge_pair(i, j), &K::one());
                add_scaled(&mut v, &calc.wedge_pair(j, i), &K::one());
            }
            let c_elem = calc.gens.elem(j);
            for i in 0..m {
                for k in 0..m {
                    if calc.group.mul(calc.gens.elem(i), calc.gens.elem(k)) == c_elem {
                        let w = calc.wedge_pair(i, k);
                        add_scaled(&mut v, &w, &K::one().neg());
                    }
                }
            }
            dxi.push(v);
        }
        calc.dxi = dxi;
        Ok(calc)
    }

    /// The standard calculus on S3 with C the transpositions, the wedge basis
    /// pinned to {xi1^xi2, xi1^xi3, xi2^xi3, xi3^xi2}.
    pub fn s3_standard() -> Self {
        let group = FiniteGroup::s3();
        let gens = GenSet::new(&group, vec![1, 2, 3]).unwrap();
        FGCalculus::build(group, gens, Some(vec![(0, 1), (0, 2), (1, 2), (2, 1)]))
            .expect("S3 transposition calculus")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn psi(&self) -> &Mat<K> {
        &self.psi
    }

    pub fn psi_perm(&self) -> &[usize] {
        &self.psi_perm
    }

    pub fn dim_forms(&self) -> usize {
        self.gens.len()
    }

    pub fn dim_wedge(&self) -> usize {
        self.wedge_basis.len()
    }

    pub fn wedge_basis(&self) -> &[(usize, usize)] {
        &self.wedge_basis
    }

    pub fn reduction(&self) -> &Mat<K> {
        &self.reduce
    }

    /// Lambda^2 coordinates of d(xi^c).
    pub fn dxi(&self, cpos: usize) -> &[K] {
        &self.dxi[cpos]
    }

    /// Lambda^2 coordinates of xi^a ^ xi^b for generator positions (i, j).
    pub fn wedge_pair(&self, i: usize, j: usize) -> Vec<K> {
        let col = pair_index(self.gens.len(), i, j);
        (0..self.dim_wedge()).map(|r| self.reduce[(r, col)].clone()).collect()
    }

    /// Reduces an invariant 2-tensor (coefficients over C x C) into Lambda^2.
    pub fn reduce_invariant(&self, tensor: &[K]) -> Vec<K> {
        self.reduce.mul_vec(tensor)
    }

    pub fn zero_form1(&self) -> Form1<K> {
        Form1 { coeffs: vec![K::zero(); self.group.order() * self.gens.len()] }
    }

    pub fn zero_form2(&self) -> Form2<K> {
        Form2 { coeffs: vec![K::zero(); self.group.order() * self.dim_wedge()] }
    }

    pub fn form1_coeff<'a>(&self, w: &'a Form1<K>, g: usize, cpos: usize) -> &'a K {
        &w.coeffs[g * self.gens.len() + cpos]
    }

    /// The invariant form xi^c as a 1-form (coefficient 1 at every point).
    pub fn xi(&self, cpos: usize) -> Form1<K> {
        let mut w = self.zero_form1();
        for g in 0..self.group.order() {
            w.coeffs[g * self.gens.len() + cpos] = K::one();
        }
        w
    }

    /// theta = sum_c xi^c, the inner element of the calculus.
    pub fn theta(&self) -> Form1<K> {
        let mut w = self.zero_form1();
        for x in w.coeffs.iter_mut() {
            *x = K::one();
        }
        w
    }

    /// df = sum_c (R_c f - f) xi^c.
    pub fn d0(&self, f: &[K]) -> Form1<K> {
        assert_eq!(f.len(), self.group.order());
        let m = self.gens.len();
        let mut out = self.zero_form1();
        for g in 0..self.group.order() {
            for j in 0..m {
                let gc = self.group.mul(g, self.gens.elem(j));
                out.coeffs[g * m + j] = f[gc].sub(&f[g]);
            }
        }
        out
    }

    /// Pointwise product f . omega.
    pub fn fun_mul_form(&self, f: &[K], w: &Form1<K>) -> Form1<K> {
        let m = self.gens.len();
        let mut out = self.zero_form1();
        for g in 0..self.group.order() {
            for j in 0..m {
                out.coeffs[g * m + j] = f[g].mul(&w.coeffs[g * m + j]);
            }
        }
        out
    }

    /// omega . f through the bimodule relation xi^c . f = (R_c f) . xi^c.
    pub fn form_mul_fun(&self, w: &Form1<K>, f: &[K]) -> Form1<K> {
        let m = self.gens.len();
        let mut out = self.zero_form1();
        for g in 0..self.group.order() {
            for j in 0..m {
                let gc = self.group.mul(g, self.gens.elem(j));
                out.coeffs[g * m + j] = w.coeffs[g * m + j].mul(&f[gc]);
            }
        }
        out
    }

    pub fn form1_add(&self, a: &Form1<K>, b: &Form1<K>) -> Form1<K> {
        Form1 { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect() }
    }

    pub fn form2_add(&self, a: &Form2<K>, b: &Form2<K>) -> Form2<K> {
        Form2 { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect() }
    }

    pub fn form2_sub(&self, a: &Form2<K>, b: &Form2<K>) -> Form2<K> {
        Form2 { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.sub(y)).collect() }
    }

    pub fn fun_mul_form2(&self, f: &[K], w: &Form2<K>) -> Form2<K> {
        let d2 = self.dim_wedge();
        let mut out = self.zero_form2();
        for g in 0..self.group.order() {
            for t in 0..d2 {
                out.coeffs[g * d2 + t] = f[g].mul(&w.coeffs[g * d2 + t]);
            }
        }
        out
    }

    /// Wedge of 1-forms: delta_g xi^a ^ delta_h xi^b survives when h = ga.
    pub fn wedge(&self, w1: &Form1<K>, w2: &Form1<K>) -> Form2<K> {
        let m = self.gens.len();
        let d2 = self.dim_wedge();
        let mut out = self.zero_form2();
        for g in 0..self.group.order() {
            for i in 0..m {
                let x = &w1.coeffs[g * m + i];
                if x.is_zero() {
                    continue;
                }
                let ga = self.group.mul(g, self.gens.elem(i));
                for j in 0..m {
                    let y = &w2.coeffs[ga * m + j];
                    if y.is_zero() {
                        continue;
                    }
                    let coeff = x.mul(y);
                    let red = self.wedge_pair(i, j);
                    for t in 0..d2 {
                        if !red[t].is_zero() {
                            out.coeffs[g * d2 + t] =
                                out.coeffs[g * d2 + t].add(&coeff.mul(&red[t]));
                        }
                    }
                }
            }
        }
        out
    }

    /// d(delta_g xi^c) = d(delta_g) ^ xi^c + delta_g . d(xi^c).
    pub fn d1(&self, w: &Form1<K>) -> Form2<K> {
        let m = self.gens.len();
        let d2 = self.dim_wedge();
        let mut out = self.zero_form2();
        for g in 0..self.group.order() {
            for j in 0..m {
                let x = &w.coeffs[g * m + j];
                if x.is_zero() {
                    continue;
                }
                for i in 0..m {
                    let red = self.wedge_pair(i, j);
                    let ga_inv = self.group.mul(g, self.group.inv(self.gens.elem(i)));
                    for t in 0..d2 {
                        if red[t].is_zero() {
                            continue;
                        }
                        let v = x.mul(&red[t]);
                        out.coeffs[ga_inv * d2 + t] = out.coeffs[ga_inv * d2 + t].add(&v);
                        out.coeffs[g * d2 + t] = out.coeffs[g * d2 + t].sub(&v);
                    }
                }
                for t in 0..d2 {
                    if !self.dxi[j][t].is_zero() {
                        out.coeffs[g * d2 + t] =
                            out.coeffs[g * d2 + t].add(&x.mul(&self.dxi[j][t]));
                    }
                }
            }
        }
        out
    }

    /// (f . xi^a)* = -(R_{a^-1} f*) . xi^{a^-1}; needs an inverse-closed C.
    pub fn star1(&self, w: &Form1<K>) -> Result<Form1<K>, CalcError> {
        if !self.gens.is_inverse_closed() {
            return Err(CalcError::NotInverseClosed);
        }
        let m = self.gens.len();
        let mut out = self.zero_form1();
        for g in 0..self.group.order() {
            for j in 0..m {
                let c = self.gens.elem(j);
                let cinv_pos = self.gens.pos(self.group.inv(c)).unwrap();
                let gc = self.group.mul(g, c);
                out.coeffs[g * m + j] = w.coeffs[gc * m + cinv_pos].conj().neg();
            }
        }
        Ok(out)
    }

    /// Pointwise conjugate of a function.
    pub fn star0(&self, f: &[K]) -> Vec<K> {
        f.iter().map(Scalar::conj).collect()
    }

    /// varpi(delta_g) = sum_c (delta_{g,c} - delta_{g,e}) xi^c.
    pub fn pi_of_delta(&self, g: usize) -> Vec<K> {
        let e = self.group.identity();
        (0..self.gens.len())
            .map(|j| {
                let mut v = K::zero();
                if g == self.gens.elem(j) {
                    v = v.add(&K::one());
                }
                if g == e {
                    v = v.sub(&K::one());
                }
                v
            })
            .collect()
    }

    /// Basis of ker(varpi): delta_g away from C and the identity, plus
    /// sum_c delta_c + delta_e.
    pub fn pi_kernel_basis(&self) -> Vec<Vec<K>> {
        let n = self.group.order();
        let e = self.group.identity();
        let mut out = Vec::new();
        for g in 0..n {
            if g != e && self.gens.pos(g).is_none() {
                let mut v = vec![K::zero(); n];
                v[g] = K::one();
                out.push(v);
            }
        }
        let mut v = vec![K::zero(); n];
        v[e] = K::one();
        for &c in self.gens.elems() {
            v[c] = K::one();
        }
        out.push(v);
        out
    }

    /// The delta-basis function supported at g.
    pub fn delta(&self, g: usize) -> Vec<K> {
        let mut v = vec![K::zero(); self.group.order()];
        v[g] = K::one();
        v
    }
}

pub(crate) fn add_scaled<K: Scalar>(acc: &mut [K], v: &[K], c: &K) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.add(&x.mul(c));
        }
    }
}
