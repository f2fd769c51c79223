//! Dense matrices over any scalar backend: products, Kronecker products in
//! the block convention, fraction-free determinants, kernels, adjoints and
//! the braid-relation defect.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum MatError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("backend mismatch: matrix tagged `{found}`, expected `{expected}`")]
    BackendMismatch { found: String, expected: String },
    #[error("bad entry {index}: {source}")]
    BadEntry { index: usize, source: ScalarError },
    #[error("inconsistent entry count: {got} entries for {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, got: usize },
}

/// Row-major dense matrix with entries in a single scalar backend.
#[derive(Clone, PartialEq)]
pub struct Mat<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Mat<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Mat<L> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Mat<K> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose in the backend's conjugation.
    pub fn adjoint(&self) -> Mat<K> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj_entries(&self) -> Mat<K> {
        self.map(|x| x.conj())
    }

    pub fn add(&self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Mat<K> {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &K) -> Mat<K> {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Mat::<K>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue; // the braiding matrices are sparse; skip the zeros
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product in the block convention: entry ((i,k),(j,l)) of
    /// A (x) B is A[i,j]·B[k,l] with pair index (i,j) -> i·dim(B) + ...
    pub fn kron(&self, rhs: &Mat<K>) -> Mat<K> {
        let (ra, ca, rb, cb) = (self.rows, self.cols, rhs.rows, rhs.cols);
        Mat::from_fn(ra * rb, ca * cb, |i, j| {
            let (ia, ib) = (i / rb, i % rb);
            let (ja, jb) = (j / cb, j % cb);
            let a = &self[(ia, ja)];
            if a.is_zero() {
                K::zero()
            } else {
                a.mul(&rhs[(ib, jb)])
            }
        })
    }

    pub fn is_zero_eps(&self, eps: f64) -> bool {
        self.data.iter().all(|x| x.is_zero_eps(eps))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn eq_eps(&self, rhs: &Mat<K>, eps: f64) -> bool {
        self.rows == rhs.rows && self.cols == rhs.cols && self.sub(rhs).is_zero_eps(eps)
    }

    /// Largest entry residual, for report witnesses.
    pub fn max_residual(&self) -> f64 {
        self.data.iter().map(Scalar::residual).fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, eps: f64) -> bool {
        self.is_square() && self.adjoint().mul(self).eq_eps(&Mat::identity(self.rows), eps)
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// exact, which keeps rational-function entries from swelling.
    pub fn det(&self) -> Result<K, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(K::one());
        }
        let mut m = self.clone();
        let mut prev = K::one();
        let mut sign_flip = false;
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let pivot_row = if K::is_exact() {
                    (k + 1..n).find(|&i| !m[(i, k)].is_zero())
                } else {
                    (k..n)
                        .max_by(|&a, &b| {
                            m[(a, k)].pivot_score().total_cmp(&m[(b, k)].pivot_score())
                        })
                        .filter(|&i| i != k && !m[(i, k)].is_zero())
                };
                match pivot_row {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(K::zero()),
                }
            }
            let pivot = m[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = pivot.mul(&m[(i, j)]).sub(&m[(i, k)].mul(&m[(k, j)]));
                    m[(i, j)] = t.div(&prev).expect("previous pivot is nonzero");
                }
                m[(i, k)] = K::zero();
            }
            prev = pivot;
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign_flip { d.neg() } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot_row = if K::is_exact() {
                (r..self.rows).find(|&i| !self[(i, c)].is_zero())
            } else {
                (r..self.rows)
                    .max_by(|&a, &b| self[(a, c)].pivot_score().total_cmp(&self[(b, c)].pivot_score()))
                    .filter(|&i| !self[(i, c)].is_zero())
            };
            let Some(p) = pivot_row else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot nonzero");
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].mul(&inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = f.mul(&self[(r, j)]);
                        self[(i, j)] = self[(i, j)].sub(&t);
                    }
                    self[(i, c)] = K::zero();
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel in the canonical reduced form: one vector per
    /// free column, ordered by column index.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m[(r, f)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, if any.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<K>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                K::one()
            } else {
                K::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Matrix power with a non-negative exponent.
    pub fn pow(&self, k: usize) -> Mat<K> {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scalar lambda with self = lambda * I, if the matrix is such.
    pub fn as_scalar_multiple_of_identity(&self, eps: f64) -> Option<K> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let lambda = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { lambda.clone() } else { K::zero() };
                if !self[(i, j)].eq_eps(&want, eps) {
                    return None;
                }
            }
        }
        Some(lambda)
    }
}

/// (S (x) I)(I (x) S)(S (x) I) - (I (x) S)(S (x) I)(I (x) S) on the
/// n^3-dimensional space; the zero matrix exactly when S obeys the braid
/// relations.
pub fn braid_defect<K: Scalar>(s: &Mat<K>, n: usize) -> Result<Mat<K>, MatError> {
    if s.rows() != n * n || s.cols() != n * n {
        return Err(MatError::DimensionMismatch(format!(
            "expected {0}x{0} matrix for n = {n}",
            n * n
        )));
    }
    let id = Mat::identity(n);
    let a = s.kron(&id);
    let b = id.kron(s);
    let aba = a.mul(&b).mul(&a);
    let bab = b.mul(&a).mul(&b);
    Ok(aba.sub(&bab))
}

impl<K> std::ops::Index<(usize, usize)> for Mat<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Mat<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

impl<K: Scalar> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}{}", self[(i, j)], if j + 1 == self.cols { "" } else { ", " })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Serialized form: entries as strings in the scalar text format.
#[derive(Serialize, Deserialize)]
pub struct MatJson {
    pub rows: usize,
    pub cols: usize,
    pub backend: String,
    pub entries: Vec<String>,
}

impl<K: Scalar> Mat<K> {
    pub fn to_json(&self) -> MatJson {
        MatJson {
            rows: self.rows,
            cols: self.cols,
            backend: K::backend().name().to_string(),
            entries: self.data.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(j: &MatJson) -> Result<Mat<K>, MatError> {
        if j.backend != K::backend().name() {
            return Err(MatError::BackendMismatch {
                found: j.backend.clone(),
                expected: K::backend().name().to_string(),
            });
        }
        if j.entries.len() != j.rows * j.cols {
            return Err(MatError::BadShape { rows: j.rows, cols: j.cols, got: j.entries.len() });
        }
        let mut data = Vec::with_capacity(j.entries.len());
        for (index, e) in j.entries.iter().enumerate() {
            data.push(K::parse(e).map_err(|source| MatError::BadEntry { index, source })?);
        }
        Ok(Mat { rows: j.rows, cols: j.cols, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{random_point, GaussRat, QRatFn};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rand_mat(n: usize, rng: &mut ChaCha8Rng) -> Mat<GaussRat> {
        Mat::from_fn(n, n, |_, _| random_point(10, rng))
    }

    fn det_cofactor(m: &Mat<GaussRat>) -> GaussRat {
        let n = m.rows();
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = GaussRat::zero();
        for j in 0..n {
            let minor = Mat::from_fn(n - 1, n - 1, |r, c| {
                m[(r + 1, if c < j { c } else { c + 1 })].clone()
            });
            let term = m[(0, j)].mul(&det_cofactor(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn det_bareiss_matches_cofactor_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let m = rand_mat(4, &mut rng);
            assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn det_identity_and_singular() {
        assert_eq!(Mat::<GaussRat>::identity(9).det().unwrap(), GaussRat::one());
        let mut m = Mat::<GaussRat>::zeros(3, 3);
        m[(0, 0)] = GaussRat::one();
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let m = Mat::from_fn(4, 6, |_, _| random_point(5, &mut rng));
            assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
            for v in m.kernel_basis() {
                assert!(m.mul_vec(&v).iter().all(GaussRat::is_zero));
            }
        }
    }

    #[test]
    fn kernel_edge_cases() {
        assert!(Mat::<GaussRat>::identity(4).kernel_basis().is_empty());
        assert_eq!(Mat::<GaussRat>::zeros(3, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let a = rand_mat(2, &mut rng);
            let b = rand_mat(2, &mut rng);
            let c = rand_mat(2, &mut rng);
            let d = rand_mat(2, &mut rng);
            assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }
        let i3 = Mat::<GaussRat>::identity(3);
        assert_eq!(i3.kron(&i3), Mat::identity(9));
    }

    #[test]
    fn kron_inverse_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5 {
            let a = rand_mat(2, &mut rng);
            let b = rand_mat(2, &mut rng);
            let (Some(ai), Some(bi)) = (a.inverse(), b.inverse()) else {
                continue;
            };
            assert_eq!(a.kron(&b).mul(&ai.kron(&bi)), Mat::identity(4));
        }
    }

    #[test]
    fn adjoint_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = rand_mat(3, &mut rng);
        assert_eq!(m.adjoint().adjoint(), m);
        let i = Mat::from_fn(2, 2, |r, c| {
            if r == c {
                GaussRat::i()
            } else {
                GaussRat::zero()
            }
        });
        assert_eq!(i.adjoint(), i.neg());
    }

    #[test]
    fn unitarity_check() {
        // permutation matrices are unitary
        let p = Mat::<GaussRat>::from_rows(vec![
            vec![GaussRat::zero(), GaussRat::one()],
            vec![GaussRat::one(), GaussRat::zero()],
        ]);
        assert!(p.is_unitary(0.0));
    }

    #[test]
    fn solve_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let m = rand_mat(4, &mut rng);
        let x: Vec<GaussRat> = (0..4).map(|_| random_point(5, &mut rng)).collect();
        let b = m.mul_vec(&x);
        let got = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&got), b);
    }

    #[test]
    fn qratfn_det_stays_exact() {
        let q = QRatFn::q();
        let one: QRatFn = Scalar::one();
        let m = Mat::from_rows(vec![
            vec![q.clone(), one.clone()],
            vec![one.clone(), q.clone()],
        ]);
        let det = m.det().unwrap();
        // q^2 - 1
        let expect = q.mul(&q).sub(&one);
        assert_eq!(det, expect);
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let m = rand_mat(3, &mut rng);
        let j = m.to_json();
        let back: Mat<GaussRat> = Mat::from_json(&j).unwrap();
        assert_eq!(back, m);
        assert!(Mat::<QRatFn>::from_json(&j).is_err());
    }
}
