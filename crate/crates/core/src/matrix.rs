//! Dense row-major matrices over [`RadicalScalar`].

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::Error;
use crate::radical::{RadicalScalar, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RadicalScalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| RadicalScalar::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = RadicalScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RadicalScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        DenseMatrix { rows, cols, entries }
    }

    /// Builds from row-major entries; `None` if the count is not `rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<RadicalScalar>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(DenseMatrix { rows, cols, entries })
    }

    pub fn diagonal(values: impl IntoIterator<Item = RadicalScalar>) -> Self {
        let values: Vec<_> = values.into_iter().collect();
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (k, v) in values.into_iter().enumerate() {
            m[(k, k)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[RadicalScalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&RadicalScalar> {
        (r < self.rows && c < self.cols).then(|| &self.entries[r * self.cols + c])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &RadicalScalar)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), Error> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RadicalScalar, &RadicalScalar) -> RadicalScalar) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&RadicalScalar) -> RadicalScalar) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &RadicalScalar) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| if x.is_zero() { RadicalScalar::zero() } else { x * s })
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    pub fn mul_i(&self) -> Self {
        self.map(RadicalScalar::mul_i)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product, skipping zero entries of the left factor.
    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `MN - NM` for square matrices of equal size.
    pub fn commutator(&self, other: &Self) -> Result<Self, Error> {
        self.check_square_pair(other)?;
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `MN + NM` for square matrices of equal size.
    pub fn anticommutator(&self, other: &Self) -> Result<Self, Error> {
        self.check_square_pair(other)?;
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    fn check_square_pair(&self, other: &Self) -> Result<(), Error> {
        if self.is_square() && other.is_square() && self.rows == other.rows {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            })
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = other.shape();
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            let a = &self[(r / p, c / q)];
            if a.is_zero() {
                RadicalScalar::zero()
            } else {
                a * &other[(r % p, c % q)]
            }
        })
    }

    /// Copy of the `rows × cols` block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block_diag(first: &Self, second: &Self) -> Self {
        let mut m = Self::zeros(first.rows + second.rows, first.cols + second.cols);
        m.set_block(0, 0, first);
        m.set_block(first.rows, first.cols, second);
        m
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = RadicalScalar;
    fn index(&self, (r, c): (usize, usize)) -> &RadicalScalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut RadicalScalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::{String, ToString};
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
