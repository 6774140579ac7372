//! Exact linear algebra over the rationals.
//!
//! Ranks go through fraction-free (Bareiss) elimination on integer rows;
//! kernels and subspaces are kept in reduced row-echelon form so that two
//! equal subspaces always carry identical bases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{clear_denominators, format_rational, Rational};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from equally long rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i).clone()))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(
            self.to_rows()
                .iter()
                .map(|r| clear_denominators(r))
                .collect(),
        )
    }

    /// `{x | self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        Subspace::solutions(self.cols, &self.to_rows())
    }

    /// Exact inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let augmented: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        let (reduced, pivots) = rref(augmented, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_rows(
            reduced.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Rank of an integer matrix by Bareiss' fraction-free elimination. Every
/// intermediate entry is a minor of the input, so the divisions are exact.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let lead = m[r][col].clone();
            for c in col + 1..cols {
                let v = (&pivot * &m[r][c] - &lead * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reduced row-echelon form of `rows` (each of length `cols`). Returns the
/// nonzero rows and their pivot columns, strictly increasing.
pub fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A linear subspace of `Q^m`, stored as an RREF basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    #[serde(with = "basis_json")]
    basis: Vec<Vec<Rational>>,
}

mod basis_json {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "crate::rational::json_vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(b: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Row> = b.iter().map(|r| Row(r.clone())).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?
            .into_iter()
            .map(|r| r.0)
            .collect())
    }
}

impl Subspace {
    pub fn zero(m: usize) -> Self {
        Self {
            ambient_dim: m,
            basis: Vec::new(),
        }
    }

    pub fn full(m: usize) -> Self {
        Self::coordinate_prefix(m, m)
    }

    /// `span{e_1, ..., e_j}` in `Q^m`.
    pub fn coordinate_prefix(m: usize, j: usize) -> Self {
        assert!(j <= m);
        Self {
            ambient_dim: m,
            basis: (0..j).map(|i| unit(m, i)).collect(),
        }
    }

    pub fn span<I>(m: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), m, "vector outside ambient space"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let (basis, _) = rref(rows, m);
        Self {
            ambient_dim: m,
            basis,
        }
    }

    /// Solution space of the homogeneous system `eq . x = 0` for every row.
    pub fn solutions(m: usize, equations: &[Vec<Rational>]) -> Self {
        let (reduced, pivots) = rref(equations.to_vec(), m);
        let mut is_pivot = vec![false; m];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..m).filter(|&f| !is_pivot[f]).map(|free| {
            let mut v = vec![Rational::zero(); m];
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        });
        Self::span(m, vectors.collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v` lies in the subspace. Linear in `v`.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(
            self.ambient_dim,
            self.basis
                .iter()
                .chain(&other.basis)
                .cloned()
                .collect::<Vec<_>>(),
        )
    }

    pub fn with_vector(&self, v: Vec<Rational>) -> Subspace {
        let mut vs = self.basis.clone();
        vs.push(v);
        Subspace::span(self.ambient_dim, vs)
    }

    /// `{ξ | ξ(v) = 0 for v in self}`, in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        Subspace::solutions(self.ambient_dim, &self.basis)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) ", self.dim(), self.ambient_dim)?;
        f.debug_list()
            .entries(
                self.basis
                    .iter()
                    .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(" ")),
            )
            .finish()
    }
}

pub fn unit(m: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); m];
    v[i] = Rational::one();
    v
}
