//! Dense square matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{FieldConfig, Scalar};

/// A `dim x dim` matrix, entries stored row-major, rows and columns
/// indexed `0..dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    field: FieldConfig,
    entries: Vec<Scalar>,
}

/// Most specific band structure of a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Diagonal,
    LowerBidiagonal,
    UpperBidiagonal,
    Tridiagonal,
    IrreducibleTridiagonal,
    General,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Diagonal => "diagonal",
            Shape::LowerBidiagonal => "lower-bidiagonal",
            Shape::UpperBidiagonal => "upper-bidiagonal",
            Shape::Tridiagonal => "tridiagonal",
            Shape::IrreducibleTridiagonal => "irreducible-tridiagonal",
            Shape::General => "general",
        };
        f.write_str(s)
    }
}

impl Matrix {
    pub fn zeros(dim: usize, field: FieldConfig) -> Self {
        Matrix { dim, field, entries: vec![field.zero(); dim * dim] }
    }

    pub fn identity(dim: usize, field: FieldConfig) -> Self {
        Self::scalar(dim, &field.one())
    }

    /// `x I`.
    pub fn scalar(dim: usize, x: &Scalar) -> Self {
        let mut m = Self::zeros(dim, x.field());
        for i in 0..dim {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn diag(values: &[Scalar]) -> Self {
        assert!(!values.is_empty(), "diag of an empty list");
        let mut m = Self::zeros(values.len(), values[0].field());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_fn(dim: usize, field: FieldConfig, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.field(), field, "entry ({i},{j}) is from the wrong field");
                entries.push(v);
            }
        }
        Matrix { dim, field, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch(0, 1));
        }
        let field = rows[0]
            .first()
            .map(Scalar::field)
            .ok_or(Error::DimensionMismatch(0, dim))?;
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(row.len(), dim));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
                }
                entries.push(v);
            }
        }
        Ok(Matrix { dim, field, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry from the wrong field");
        self.entries[i * self.dim + j] = v;
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    /// Entries `(i, i-1)` for `i = 1..dim`.
    pub fn subdiagonal(&self) -> Vec<Scalar> {
        (1..self.dim).map(|i| self.get(i, i - 1).clone()).collect()
    }

    /// Entries `(i-1, i)` for `i = 1..dim`.
    pub fn superdiagonal(&self) -> Vec<Scalar> {
        (1..self.dim).map(|i| self.get(i - 1, i).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|v| !v.is_zero())
            .map(|k| (k / self.dim, k % self.dim))
    }

    /// First entry, row-major, where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        self.check_compatible(other).ok()?;
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(x, y)| x != y)
            .map(|k| (k / self.dim, k % self.dim))
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |x, y| x + y))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |x, y| x - y))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.dim;
        let mut out = Matrix::zeros(n, self.field);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        let idx = i * n + j;
                        out.entries[idx] = &out.entries[idx] + &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, x: &Scalar) -> Result<Matrix> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(x.field().to_string(), self.field.to_string()));
        }
        Ok(self.scale(x))
    }

    pub fn scale(&self, x: &Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().map(|v| v * x).collect(),
        }
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| f(x, y)).collect(),
        }
    }

    /// `self - x I`.
    pub fn shift(&self, x: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) - x;
            m.set(i, i, v);
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(self.field.zero(), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect()
    }

    pub fn from_columns(cols: &[Vec<Scalar>]) -> Result<Matrix> {
        let n = cols.len();
        let rows = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    /// Gauss-Jordan inverse. The pivot in each column is the first nonzero
    /// entry at or below the diagonal.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { self.field.one() } else { self.field.zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &factor;
                    a[r][j] = &a[r][j] - &t;
                    let t = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &t;
                }
            }
        }
        Ok(Matrix { dim: n, field: self.field, entries: inv.into_iter().flatten().collect() })
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.entries[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect();
        row_reduce(rows, self.dim).1.len()
    }

    pub fn shape(&self) -> Shape {
        let n = self.dim;
        let outside = |lo: isize, hi: isize| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let off = j as isize - i as isize;
                    (lo..=hi).contains(&off) || self.get(i, j).is_zero()
                })
            })
        };
        if outside(0, 0) {
            Shape::Diagonal
        } else if outside(-1, 0) {
            Shape::LowerBidiagonal
        } else if outside(0, 1) {
            Shape::UpperBidiagonal
        } else if outside(-1, 1) {
            let bands_full = (1..n).all(|i| !self.get(i, i - 1).is_zero() && !self.get(i - 1, i).is_zero());
            if bands_full {
                Shape::IrreducibleTridiagonal
            } else {
                Shape::Tridiagonal
            }
        } else {
            Shape::General
        }
    }

    /// `M^{-1} self M`.
    pub fn conjugate(&self, m: &Matrix) -> Result<Matrix> {
        self.check_compatible(m)?;
        Ok(&(&m.inverse()? * self) * m)
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            dim: self.dim,
            rows: (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &MatrixDoc, field: FieldConfig) -> Result<Matrix> {
        if doc.rows.len() != doc.dim {
            return Err(Error::DimensionMismatch(doc.rows.len(), doc.dim));
        }
        let rows = doc
            .rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != doc.dim) {
            return Err(Error::Parse(format!("matrix rows must have {} entries", doc.dim)));
        }
        Matrix::from_rows(rows)
    }
}

/// Matrix interchange form: `{"dim": n, "rows": [["1/2", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub dim: usize,
    pub rows: Vec<Vec<String>>,
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }
}

/// Reduced row echelon form of a rectangular system. Returns the reduced
/// rows and the pivot columns.
pub fn row_reduce(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for k in 0..rows.len() {
            if k == r || rows[k][col].is_zero() {
                continue;
            }
            let factor = rows[k][col].clone();
            for j in col..ncols {
                let t = &rows[r][j] * &factor;
                rows[k][j] = &rows[k][j] - &t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (rows, pivots)
}

/// Basis of `{x : R x = 0}` for a rectangular coefficient matrix given by
/// its rows. Each basis vector has a 1 in one free column.
pub fn nullspace(rows: Vec<Vec<Scalar>>, ncols: usize, field: FieldConfig) -> Vec<Vec<Scalar>> {
    let (red, pivots) = row_reduce(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&red[r][f];
            }
            v
        })
        .collect()
}

/// Spectral idempotents `E_i = prod_{j != i} (A - t_j I)/(t_i - t_j)`.
///
/// Fails unless the eigenvalues are pairwise distinct and each has
/// geometric multiplicity one.
pub fn primitive_idempotents(a: &Matrix, eigs: &[Scalar]) -> Result<Vec<Matrix>> {
    let n = a.dim();
    if eigs.len() != n {
        return Err(Error::DimensionMismatch(eigs.len(), n));
    }
    for i in 0..n {
        for j in 0..i {
            if eigs[i] == eigs[j] {
                return Err(Error::NotMultiplicityFree(format!(
                    "eigenvalues {j} and {i} coincide ({})",
                    eigs[i]
                )));
            }
        }
    }
    let shifted: Vec<Matrix> = eigs.iter().map(|t| a.shift(t)).collect();
    for (i, s) in shifted.iter().enumerate() {
        let r = s.rank();
        if r + 1 != n {
            return Err(Error::NotMultiplicityFree(format!(
                "rank(A - theta_{i} I) = {r}, expected {}",
                n - 1
            )));
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = Matrix::identity(n, a.field());
        let mut denom = a.field().one();
        for j in 0..n {
            if j != i {
                e = &e * &shifted[j];
                denom = &denom * &(&eigs[i] - &eigs[j]);
            }
        }
        out.push(e.scale(&denom.inv()?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        FieldConfig::Rationals.int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn ring_basics() {
        let x = mat(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 6]]);
        let i = Matrix::identity(3, FieldConfig::Rationals);
        assert_eq!(&i * &x, x);
        assert!((&x + &-&x).is_zero());
        let d = Matrix::diag(&[q(2), q(3), q(5)]);
        let v = vec![q(1), q(1), q(1)];
        assert_eq!(d.apply(&v), vec![q(2), q(3), q(5)]);
        let y = Matrix::identity(2, FieldConfig::Rationals);
        assert_eq!(x.checked_mul(&y), Err(Error::DimensionMismatch(3, 2)));
        let z = Matrix::identity(3, FieldConfig::Prime(7));
        assert!(matches!(x.checked_add(&z), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn inverse_examples() {
        let i = Matrix::identity(4, FieldConfig::Rationals);
        assert_eq!(i.inverse().unwrap(), i);
        let d = Matrix::diag(&[q(2), q(4)]);
        let half = FieldConfig::Rationals.ratio(1, 2).unwrap();
        let quarter = FieldConfig::Rationals.ratio(1, 4).unwrap();
        assert_eq!(d.inverse().unwrap(), Matrix::diag(&[half, quarter]));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn unit_upper_triangular_inverse_by_back_substitution() {
        let u = mat(&[&[1, 3, -2, 7], &[0, 1, 5, 1], &[0, 0, 1, -4], &[0, 0, 0, 1]]);
        let inv = u.inverse().unwrap();
        // back substitution oracle, column by column
        let n = 4;
        for col in 0..n {
            let mut x = vec![q(0); n];
            for i in (0..n).rev() {
                let mut s = if i == col { q(1) } else { q(0) };
                for k in i + 1..n {
                    s = &s - &(u.get(i, k) * &x[k]);
                }
                x[i] = s;
            }
            assert_eq!(inv.column(col), x);
        }
        for i in 0..n {
            assert!(inv.get(i, i).is_one());
            for j in 0..i {
                assert!(inv.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(3, FieldConfig::Rationals).rank(), 0);
        assert_eq!(Matrix::identity(5, FieldConfig::Rationals).rank(), 5);
        assert_eq!(mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
    }

    #[test]
    fn shapes() {
        assert_eq!(Matrix::diag(&[q(1), q(2), q(3)]).shape(), Shape::Diagonal);
        assert_eq!(mat(&[&[1, 0, 0], &[1, 2, 0], &[0, 1, 3]]).shape(), Shape::LowerBidiagonal);
        assert_eq!(mat(&[&[1, 4, 0], &[0, 2, 5], &[0, 0, 3]]).shape(), Shape::UpperBidiagonal);
        assert_eq!(mat(&[&[1, 4, 0], &[1, 2, 0], &[0, 1, 3]]).shape(), Shape::Tridiagonal);
        assert_eq!(
            mat(&[&[1, 4, 0], &[1, 2, 5], &[0, 1, 3]]).shape(),
            Shape::IrreducibleTridiagonal
        );
        assert_eq!(mat(&[&[1, 0, 1], &[0, 2, 0], &[0, 0, 3]]).shape(), Shape::General);
    }

    #[test]
    fn idempotents_of_diagonal() {
        let eigs = vec![q(1), q(2), q(3), q(4)];
        let es = primitive_idempotents(&Matrix::diag(&eigs), &eigs).unwrap();
        for (i, e) in es.iter().enumerate() {
            let mut unit = Matrix::zeros(4, FieldConfig::Rationals);
            unit.set(i, i, q(1));
            assert_eq!(e, &unit);
        }
        let dup = vec![q(1), q(2), q(1), q(4)];
        assert!(matches!(
            primitive_idempotents(&Matrix::diag(&eigs), &dup),
            Err(Error::NotMultiplicityFree(_))
        ));
        // 2 is a double eigenvalue of this matrix; 5 is not an eigenvalue at all
        let d = Matrix::diag(&[q(1), q(2), q(2), q(4)]);
        let wrong = vec![q(1), q(2), q(5), q(4)];
        assert!(matches!(primitive_idempotents(&d, &wrong), Err(Error::NotMultiplicityFree(_))));
    }

    #[test]
    fn nullspace_basis() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(rows.clone(), 3, FieldConfig::Rationals);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for r in &rows {
                let dot = r.iter().zip(&v).fold(q(0), |acc, (x, y)| &acc + &(x * y));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn doc_round_trip() {
        let x = mat(&[&[1, -2], &[0, 7]]).scale(&FieldConfig::Rationals.ratio(1, 3).unwrap());
        let doc = x.to_doc();
        assert_eq!(doc.rows[0][1], "-2/3");
        assert_eq!(Matrix::from_doc(&doc, FieldConfig::Rationals).unwrap(), x);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| {
            Matrix::from_fn(n, FieldConfig::Rationals, |i, j| q(v[i * n + j]))
        })
    }

    fn arb_gf_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        let f = FieldConfig::Prime(1009);
        proptest::collection::vec(0i64..1009, n * n)
            .prop_map(move |v| Matrix::from_fn(n, f, |i, j| f.int(v[i * n + j])))
    }

    proptest! {
        #[test]
        fn inverse_round_trip(x in arb_matrix(4), y in arb_gf_matrix(5)) {
            for m in [x, y] {
                match m.inverse() {
                    Ok(inv) => {
                        let id = Matrix::identity(m.dim(), m.field());
                        prop_assert_eq!(&m * &inv, id.clone());
                        prop_assert_eq!(&inv * &m, id);
                        prop_assert_eq!(m.rank(), m.dim());
                    }
                    Err(e) => {
                        prop_assert_eq!(e, Error::Singular);
                        prop_assert!(m.rank() < m.dim());
                    }
                }
            }
        }

        #[test]
        fn conjugation_preserves_trace(x in arb_matrix(4), m in arb_matrix(4)) {
            prop_assert_eq!(x.conjugate(&Matrix::identity(4, FieldConfig::Rationals)).unwrap(), x.clone());
            if let Ok(c) = x.conjugate(&m) {
                prop_assert_eq!(c.trace(), x.trace());
                prop_assert_eq!(
                    Matrix::identity(4, FieldConfig::Rationals).conjugate(&m).unwrap(),
                    Matrix::identity(4, FieldConfig::Rationals)
                );
            }
        }

        #[test]
        fn idempotent_identities(eigs in proptest::collection::btree_set(-20i64..20, 4), g in arb_matrix(4)) {
            prop_assume!(g.inverse().is_ok());
            let eigs: Vec<Scalar> = eigs.into_iter().map(q).collect();
            let a = Matrix::diag(&eigs).conjugate(&g).unwrap();
            let es = primitive_idempotents(&a, &eigs).unwrap();
            let n = 4;
            let mut sum = Matrix::zeros(n, FieldConfig::Rationals);
            let mut spectral = Matrix::zeros(n, FieldConfig::Rationals);
            for (i, e) in es.iter().enumerate() {
                for (j, f) in es.iter().enumerate() {
                    let p = e * f;
                    if i == j { prop_assert_eq!(&p, e); } else { prop_assert!(p.is_zero()); }
                }
                sum = &sum + e;
                spectral = &spectral + &e.scale(&eigs[i]);
            }
            prop_assert_eq!(sum, Matrix::identity(n, FieldConfig::Rationals));
            prop_assert_eq!(spectral, a);
        }
    }
}
