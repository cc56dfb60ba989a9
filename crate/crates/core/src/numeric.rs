//! Floating-point images of exact matrices and the matrix exponential.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::DenseMatrix;

/// Square complex matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: alloc::vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.data[k * n + k] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Entrywise float image; panics on a non-square input.
    pub fn from_exact(m: &DenseMatrix) -> Self {
        assert!(m.is_square(), "float images are taken of square matrices");
        ComplexMatrix {
            n: m.rows(),
            data: m.entries().iter().map(|x| x.to_complex64()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.n + c]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|r| self.data[r * self.n..(r + 1) * self.n].iter().map(|x| x.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

const MAX_TERMS: usize = 64;

/// `exp(m)` by scaling, a Taylor series, and repeated squaring.
pub fn expm(m: &ComplexMatrix) -> Result<ComplexMatrix, Error> {
    let norm = m.norm_inf();
    if !norm.is_finite() || m.data.iter().any(|x| !x.is_finite()) {
        return Err(Error::SeriesDiverged);
    }
    let mut squarings = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > 0.5 {
        scaled_norm /= 2.0;
        squarings += 1;
    }
    let a = m.scale(Complex64::new(libm::ldexp(1.0, -(squarings as i32)), 0.0));
    let mut sum = ComplexMatrix::identity(m.n);
    let mut term = ComplexMatrix::identity(m.n);
    let mut converged = false;
    for k in 1..=MAX_TERMS {
        term = term.mul(&a).scale(Complex64::new(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
        if term.max_abs() <= f64::EPSILON * sum.max_abs().max(1.0) * 1e-3 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::SeriesDiverged);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    Ok(sum)
}
