//! Dense exact matrices over any [`Scalar`].
//!
//! Everything here is a finite computation: exponentials only accept
//! nilpotent arguments (the series terminates within the dimension),
//! logarithms only accept unipotent ones, and inversion is exact
//! Gauss-Jordan with unit pivots. The flip `P` and its partial transpose
//! `K`, plus the two-leg embedding and auxiliary-space partial trace used
//! by the spin-chain layer, also live here.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_rational::BigRational;
use thiserror::Error;

use crate::scalar::{FieldElem, PolyParam, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("series does not terminate: {context} is not nilpotent within dimension {dim}")]
    NotNilpotent { context: String, dim: usize },
    #[error("argument not unipotent: {context}")]
    NotUnipotent { context: String },
    #[error("singular matrix: no invertible pivot in column {col} (rows {row}..)")]
    Singular { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
}

/// Row-major dense matrix with entries in a single scalar ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

pub type FieldMatrix = Matrix<FieldElem>;
pub type PolyMatrix = Matrix<PolyParam>;

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        (0..self.rows).fold(S::zero(), |acc, k| acc + self.get(k, k).clone())
    }

    /// Matrix product with zero-skipping on both operands; the
    /// representation matrices and spin-chain embeddings are sparse
    /// enough that this is the difference between seconds and hours.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul dims {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let out_row = i * rhs.cols;
                let rhs_row = k * rhs.cols;
                for j in 0..rhs.cols {
                    let b = &rhs.data[rhs_row + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[out_row + j];
                    *cell = cell.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Commutator `[self, rhs]`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs) - rhs.matmul(self)
    }

    /// Kronecker product: block structure `self[i,j] * rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = rhs.get(p, q);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * rhs.rows + p, j * rhs.cols + q, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    /// Smallest `k` with `self^k = 0`, or `None` if not nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        if self.is_zero_matrix() {
            return Some(1);
        }
        let mut pw = self.clone();
        for k in 2..=self.rows {
            pw = pw.matmul(self);
            if pw.is_zero_matrix() {
                return Some(k);
            }
        }
        None
    }

    /// `exp` of a nilpotent matrix: the finite sum of `N^k / k!`.
    ///
    /// `context` names the factor being exponentiated in error messages.
    pub fn exp_nilpotent(&self, context: &str) -> Result<Self, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let mut sum = Self::identity(n);
        let mut term = self.clone();
        let mut k = 1usize;
        while !term.is_zero_matrix() {
            if k > n {
                return Err(LinalgError::NotNilpotent {
                    context: context.to_string(),
                    dim: n,
                });
            }
            sum = sum + term.scale(&S::rational(1, factorial_i64(k)));
            term = term.matmul(self);
            k += 1;
        }
        Ok(sum)
    }

    /// `log` of a unipotent matrix: the finite alternating sum of
    /// `(U - I)^k / k`. Inverse of [`Matrix::exp_nilpotent`].
    pub fn log_unipotent(&self, context: &str) -> Result<Self, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let x = self.clone() - Self::identity(n);
        let mut sum = Self::zeros(n, n);
        let mut pw = x.clone();
        let mut k = 1usize;
        while !pw.is_zero_matrix() {
            if k > n {
                return Err(LinalgError::NotUnipotent {
                    context: context.to_string(),
                });
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum = sum + pw.scale(&S::rational(sign, k as i64));
            pw = pw.matmul(&x);
            k += 1;
        }
        Ok(sum)
    }

    /// Exact inverse by Gauss-Jordan elimination. Pivots must be units of
    /// the scalar ring; over the field every nonzero entry qualifies,
    /// over `PolyParam` only degree-zero entries do (matrices whose
    /// invertibility genuinely needs polynomial division are outside the
    /// scope of this crate).
    pub fn invert(&self) -> Result<Self, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find_map(|r| a.get(r, col).try_inv().map(|piv| (r, piv)))
                .ok_or(LinalgError::Singular { row: col, col })?;
            let (prow, pinv) = pivot;
            if prow != col {
                a.swap_rows(prow, col);
                inv.swap_rows(prow, col);
            }
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r != col {
                    let f = a.get(r, col).clone();
                    if f.is_zero() {
                        continue;
                    }
                    a.sub_scaled_row(r, col, &f);
                    inv.sub_scaled_row(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    /// Rank by exact Gaussian elimination (used as a test oracle and for
    /// diagnostics; requires the scalar ring to be a field on the entries
    /// encountered).
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..a.cols {
            let Some((prow, pinv)) = (row..a.rows)
                .find_map(|r| a.get(r, col).try_inv().map(|piv| (r, piv)))
            else {
                continue;
            };
            a.swap_rows(prow, row);
            a.scale_row(row, &pinv);
            for r in 0..a.rows {
                if r != row {
                    let f = a.get(r, col).clone();
                    if !f.is_zero() {
                        a.sub_scaled_row(r, row, &f);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &S) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].clone() * s.clone();
        }
    }

    /// row[r] -= f * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, f: &S) {
        for j in 0..self.cols {
            let v = self.data[src * self.cols + j].clone() * f.clone();
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].clone() - v;
        }
    }

    /// Largest entry magnitude (by [`Scalar::coeff_norm`]) together with
    /// its position; `None` for the zero matrix. Drives residual reports.
    pub fn max_abs_entry(&self) -> Option<(usize, usize, &S)> {
        let mut best: Option<(usize, usize, &S, BigRational)> = None;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let norm = v.coeff_norm();
                if best.as_ref().map_or(true, |(_, _, _, b)| norm > *b) {
                    best = Some((i, j, v, norm));
                }
            }
        }
        best.map(|(i, j, v, _)| (i, j, v))
    }
}

impl FieldMatrix {
    /// Promote entries to degree-zero polynomials in `h`.
    pub fn promote(&self) -> PolyMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| PolyParam::constant(x.clone())).collect(),
        }
    }
}

impl PolyMatrix {
    /// The coefficient matrix of `h^k`.
    pub fn coeff_matrix(&self, k: usize) -> FieldMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.coeff(k)).collect(),
        }
    }

    /// Largest degree appearing in any entry.
    pub fn max_degree(&self) -> usize {
        self.data.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

fn factorial_i64(k: usize) -> i64 {
    (1..=k as i64).product::<i64>().max(1)
}

impl<S: Scalar> Add for Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .into_iter()
                .zip(rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .into_iter()
                .zip(rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.matmul(rhs)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}; ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// The flip operator `P` on `C^m x C^m`: `P(v ⊗ w) = w ⊗ v`.
pub fn build_p<S: Scalar>(m: usize) -> Matrix<S> {
    assert!(m >= 2);
    let mut p = Matrix::zeros(m * m, m * m);
    for a in 0..m {
        for b in 0..m {
            p.set(a * m + b, b * m + a, S::one());
        }
    }
    p
}

/// `K = P^{t1}`, the flip with its first tensor factor transposed:
/// `K = sum_{ij} e_ij ⊗ e_ij`, i.e. `K[(a,b),(c,d)] = delta_ab delta_cd`.
pub fn build_k<S: Scalar>(m: usize) -> Matrix<S> {
    assert!(m >= 2);
    let mut k = Matrix::zeros(m * m, m * m);
    for a in 0..m {
        for c in 0..m {
            k.set(a * m + a, c * m + c, S::one());
        }
    }
    k
}

/// Embed a two-site operator `op` (acting on `C^d ⊗ C^d`) into legs
/// `(i, j)` of an `n`-fold tensor power of `C^d`, identity elsewhere.
pub fn embed_two_legs<S: Scalar>(op: &Matrix<S>, n_legs: usize, d: usize, i: usize, j: usize) -> Matrix<S> {
    assert!(i < n_legs && j < n_legs && i != j);
    assert_eq!(op.rows(), d * d);
    assert_eq!(op.cols(), d * d);
    let dim = d.pow(n_legs as u32);
    let stride: Vec<usize> = (0..n_legs).map(|k| d.pow((n_legs - 1 - k) as u32)).collect();
    let mut out = Matrix::zeros(dim, dim);

    // Iterate over the nonzero entries of op and the diagonal of the
    // identity legs.
    let spectators: Vec<usize> = (0..n_legs).filter(|&k| k != i && k != j).collect();
    let spec_dim = d.pow(spectators.len() as u32);
    for ri in 0..d {
        for rj in 0..d {
            for ci in 0..d {
                for cj in 0..d {
                    let v = op.get(ri * d + rj, ci * d + cj);
                    if v.is_zero() {
                        continue;
                    }
                    for s in 0..spec_dim {
                        // decode spectator multi-index
                        let mut row = ri * stride[i] + rj * stride[j];
                        let mut col = ci * stride[i] + cj * stride[j];
                        let mut rem = s;
                        for &leg in spectators.iter().rev() {
                            let digit = rem % d;
                            rem /= d;
                            row += digit * stride[leg];
                            col += digit * stride[leg];
                        }
                        out.set(row, col, v.clone());
                    }
                }
            }
        }
    }
    out
}

/// Partial trace over the first leg of `C^d ⊗ V`, where the input acts on
/// the full product and the output acts on `V` (dimension `rest`).
pub fn partial_trace_first<S: Scalar>(m: &Matrix<S>, d: usize, rest: usize) -> Matrix<S> {
    assert_eq!(m.rows(), d * rest);
    assert_eq!(m.cols(), d * rest);
    let mut out: Matrix<S> = Matrix::zeros(rest, rest);
    for s in 0..d {
        for a in 0..rest {
            for b in 0..rest {
                let v = m.get(s * rest + a, s * rest + b);
                if v.is_zero() {
                    continue;
                }
                let acc = out.get(a, b).clone() + v.clone();
                out.set(a, b, acc);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldElem;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::from_ratio(n, d)
    }

    fn mat(rows: Vec<Vec<i64>>) -> FieldMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| q(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn kron_of_identities() {
        let i2: FieldMatrix = Matrix::identity(2);
        let i3: FieldMatrix = Matrix::identity(3);
        assert_eq!(i2.kron(&i3), Matrix::identity(6));
    }

    #[test]
    fn exp_of_single_jordan_block() {
        let n = mat(vec![vec![0, 1], vec![0, 0]]);
        let expected = mat(vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(n.exp_nilpotent("test").unwrap(), expected);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z: FieldMatrix = Matrix::zeros(3, 3);
        assert_eq!(z.exp_nilpotent("test").unwrap(), Matrix::identity(3));
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let m = mat(vec![vec![1, 0], vec![0, 1]]);
        let err = m.exp_nilpotent("offending-factor").unwrap_err();
        match err {
            LinalgError::NotNilpotent { context, dim } => {
                assert_eq!(context, "offending-factor");
                assert_eq!(dim, 2);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn log_of_unipotent_block() {
        let u = mat(vec![vec![1, 1], vec![0, 1]]);
        let expected = mat(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(u.log_unipotent("test").unwrap(), expected);
    }

    #[test]
    fn log_of_identity_is_zero() {
        let i: FieldMatrix = Matrix::identity(4);
        assert!(i.log_unipotent("test").unwrap().is_zero_matrix());
    }

    #[test]
    fn log_rejects_non_unipotent() {
        let m = mat(vec![vec![2, 0], vec![0, 2]]);
        assert!(matches!(
            m.log_unipotent("t").unwrap_err(),
            LinalgError::NotUnipotent { .. }
        ));
    }

    #[test]
    fn invert_identity() {
        let i: FieldMatrix = Matrix::identity(5);
        assert_eq!(i.invert().unwrap(), Matrix::identity(5));
    }

    #[test]
    fn unipotent_inverse_via_exp_of_negated_log() {
        let u = mat(vec![vec![1, 2, 3], vec![0, 1, 4], vec![0, 0, 1]]);
        let via_series = (-u.log_unipotent("t").unwrap()).exp_nilpotent("t").unwrap();
        assert_eq!(u.invert().unwrap(), via_series);
        assert!(u.matmul(&via_series).is_identity());
    }

    #[test]
    fn singular_matrix_reports_pivot_position() {
        let m = mat(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(
            m.invert().unwrap_err(),
            LinalgError::Singular { row: 1, col: 1 }
        );
    }

    #[test]
    fn flip_swaps_basis_vectors() {
        let p: FieldMatrix = build_p(2);
        // e1 ⊗ e2 is basis index 0*2+1 = 1; target e2 ⊗ e1 is index 2.
        let mut v = Matrix::zeros(4, 1);
        v.set(1, 0, q(1, 1));
        let pv = p.matmul(&v);
        assert_eq!(*pv.get(2, 0), q(1, 1));
        assert_eq!(pv.data.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn flip_squares_to_identity() {
        let p: FieldMatrix = build_p(5);
        assert!(p.matmul(&p).is_identity());
    }

    #[test]
    fn k_squares_to_dimension_times_k() {
        let k: FieldMatrix = build_k(5);
        assert_eq!(k.matmul(&k), k.scale(&q(5, 1)));
    }

    #[test]
    fn embedding_matches_kron_on_adjacent_legs() {
        let op = mat(vec![
            vec![1, 2, 0, 1],
            vec![0, 1, 3, 0],
            vec![2, 0, 1, 0],
            vec![0, 0, 5, 1],
        ]);
        let i2: FieldMatrix = Matrix::identity(2);
        assert_eq!(embed_two_legs(&op, 3, 2, 0, 1), op.kron(&i2));
        assert_eq!(embed_two_legs(&op, 3, 2, 1, 2), i2.kron(&op));
    }

    #[test]
    fn embedding_on_swapped_legs_is_flip_conjugate() {
        let op = mat(vec![
            vec![1, 2, 0, 1],
            vec![0, 1, 3, 0],
            vec![2, 0, 1, 0],
            vec![0, 0, 5, 1],
        ]);
        let p: FieldMatrix = build_p(2);
        let swapped = p.matmul(&op).matmul(&p);
        assert_eq!(embed_two_legs(&op, 2, 2, 1, 0), swapped);
    }

    #[test]
    fn partial_trace_of_kron_factors() {
        let a = mat(vec![vec![1, 2], vec![3, 4]]); // trace 5
        let b = mat(vec![vec![5, 6], vec![7, 8]]);
        let traced = partial_trace_first(&a.kron(&b), 2, 2);
        assert_eq!(traced, b.scale(&q(5, 1)));
    }

    fn arb_mat_2x2() -> impl Strategy<Value = FieldMatrix> {
        proptest::collection::vec(-6i64..=6, 4).prop_map(|v| {
            mat(vec![vec![v[0], v[1]], vec![v[2], v[3]]])
        })
    }

    fn arb_nilpotent_4() -> impl Strategy<Value = FieldMatrix> {
        // strictly upper triangular => nilpotent
        proptest::collection::vec(-5i64..=5, 6).prop_map(|v| {
            mat(vec![
                vec![0, v[0], v[1], v[2]],
                vec![0, 0, v[3], v[4]],
                vec![0, 0, 0, v[5]],
                vec![0, 0, 0, 0],
            ])
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn kron_mixed_product_identity(a in arb_mat_2x2(), b in arb_mat_2x2(),
                                       c in arb_mat_2x2(), d in arb_mat_2x2()) {
            prop_assert_eq!(
                a.kron(&b).matmul(&c.kron(&d)),
                a.matmul(&c).kron(&b.matmul(&d))
            );
        }

        #[test]
        fn kron_is_associative(a in arb_mat_2x2(), b in arb_mat_2x2(), c in arb_mat_2x2()) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn log_inverts_exp(n in arb_nilpotent_4()) {
            let e = n.exp_nilpotent("prop").unwrap();
            prop_assert_eq!(e.log_unipotent("prop").unwrap(), n);
        }

        #[test]
        fn exp_is_multiplicative_on_commuting_pairs(n in arb_nilpotent_4(), k in 0i64..=4) {
            // n and k*n^2 commute
            let m = n.matmul(&n).scale(&q(k, 1));
            prop_assert!(n.commutator(&m).is_zero_matrix());
            let lhs = (n.clone() + m.clone()).exp_nilpotent("prop").unwrap();
            let rhs = n.exp_nilpotent("prop").unwrap().matmul(&m.exp_nilpotent("prop").unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_mat_2x2()) {
            if let Ok(inv) = a.invert() {
                prop_assert!(a.matmul(&inv).is_identity());
                prop_assert!(inv.matmul(&a).is_identity());
            }
        }
    }
}
