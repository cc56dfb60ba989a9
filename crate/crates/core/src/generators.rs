//! Rotation ladder matrices and the Lorentz generators `J_k`, `K_k`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::matrix::DenseMatrix;
use crate::radical::{sqrt_of_rational, RadicalScalar, Rational};
use crate::spin::{HalfInt, Spin, SpinPair};

/// `r^(A)_σ = √((A-σ)(A+σ+1))`, zero unless `σ` is a projection of `A` below the top.
pub fn ladder_coeff_r(spin: Spin, sigma: HalfInt) -> RadicalScalar {
    if !spin.contains(sigma) {
        return RadicalScalar::zero();
    }
    let a = spin.twice() as i64;
    let s = sigma.twice() as i64;
    // (2A-2σ)(2A+2σ+2)/4
    let product = (a - s) * (a + s + 2);
    sqrt_of_rational(&Rational::new(BigInt::from(product), BigInt::from(4)))
        .expect("ladder radicand is nonnegative and small")
}

/// `s^(A)_σ = r^(A)_{-σ}`.
pub fn ladder_coeff_s(spin: Spin, sigma: HalfInt) -> RadicalScalar {
    ladder_coeff_r(spin, -sigma)
}

/// `(M+, M-, Mz)` for spin `A` in the descending basis.
pub fn rotation_rep(spin: Spin) -> (DenseMatrix, DenseMatrix, DenseMatrix) {
    let n = spin.multiplicity();
    let proj: Vec<HalfInt> = spin.projections().collect();
    let mut plus = DenseMatrix::zeros(n, n);
    // M+ maps σ to σ+1, one row up
    for col in 1..n {
        plus[(col - 1, col)] = ladder_coeff_r(spin, proj[col]);
    }
    let minus = plus.transpose();
    let mz = DenseMatrix::diagonal(proj.iter().map(|m| RadicalScalar::from_rational(m.to_rational())));
    (plus, minus, mz)
}

/// Cartesian spin matrices `[Mx, My, Mz]`.
pub fn spin_matrices(spin: Spin) -> [DenseMatrix; 3] {
    let (plus, minus, mz) = rotation_rep(spin);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mx = plus.try_add(&minus).expect("same shape").scale_rational(&half);
    let my = plus
        .try_sub(&minus)
        .expect("same shape")
        .scale_rational(&half)
        .mul_i()
        .neg();
    [mx, my, mz]
}

/// The six Lorentz generators of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    /// One pair for an irreducible representation, two for a direct sum.
    pub spins: Vec<SpinPair>,
    pub j: [DenseMatrix; 3],
    pub k: [DenseMatrix; 3],
}

impl GeneratorSet {
    pub fn dimension(&self) -> usize {
        self.j[0].rows()
    }

    /// `J_x, J_y, J_z, K_x, K_y, K_z` in that order.
    pub fn matrices(&self) -> impl Iterator<Item = &DenseMatrix> {
        self.j.iter().chain(self.k.iter())
    }
}

/// `J_k = A_k + B_k` and `K_k = -i(A_k - B_k)` on `(A,B)`, with
/// `A_k = M_k ⊗ 1` and `B_k = 1 ⊗ M_k`.
pub fn irrep_generators(pair: SpinPair) -> GeneratorSet {
    let ma = spin_matrices(pair.left);
    let mb = spin_matrices(pair.right);
    let ia = DenseMatrix::identity(pair.left.multiplicity());
    let ib = DenseMatrix::identity(pair.right.multiplicity());
    let mut j = Vec::with_capacity(3);
    let mut k = Vec::with_capacity(3);
    for axis in 0..3 {
        let a = ma[axis].kron(&ib);
        let b = ia.kron(&mb[axis]);
        j.push(a.try_add(&b).expect("same shape"));
        k.push(a.try_sub(&b).expect("same shape").mul_i().neg());
    }
    GeneratorSet {
        spins: vec![pair],
        j: into_array(j),
        k: into_array(k),
    }
}

/// Block-diagonal generators of `p1 ⊕ p2`, with `p1` first.
pub fn direct_sum(p1: SpinPair, p2: SpinPair) -> GeneratorSet {
    let g1 = irrep_generators(p1);
    let g2 = irrep_generators(p2);
    let stack = |a: &[DenseMatrix; 3], b: &[DenseMatrix; 3]| {
        into_array((0..3).map(|i| DenseMatrix::block_diag(&a[i], &b[i])).collect())
    };
    GeneratorSet {
        spins: vec![p1, p2],
        j: stack(&g1.j, &g2.j),
        k: stack(&g1.k, &g2.k),
    }
}

pub(crate) fn into_array<const N: usize>(v: Vec<DenseMatrix>) -> [DenseMatrix; N] {
    v.try_into().unwrap_or_else(|_| unreachable!("length fixed by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn ladder_examples() {
        assert!(ladder_coeff_r(Spin::HALF, h(1)).is_zero());
        assert_eq!(ladder_coeff_r(Spin::HALF, h(-1)), RadicalScalar::one());
        assert_eq!(ladder_coeff_r(Spin::ONE, h(0)), RadicalScalar::sqrt(2));
        assert!(ladder_coeff_s(Spin::HALF, h(-1)).is_zero());
        assert_eq!(ladder_coeff_s(Spin::HALF, h(1)), RadicalScalar::one());
        assert_eq!(ladder_coeff_s(Spin::from_twice(3), h(1)), RadicalScalar::from_integer(2));
        assert!(ladder_coeff_r(Spin::ONE, h(4)).is_zero());
        assert!(ladder_coeff_r(Spin::ONE, h(1)).is_zero());
    }

    #[test]
    fn rotation_rep_examples() {
        let (p, _, z) = rotation_rep(Spin::HALF);
        assert_eq!(z, DenseMatrix::diagonal([RadicalScalar::ratio(1, 2), RadicalScalar::ratio(-1, 2)]));
        assert_eq!(p[(0, 1)], RadicalScalar::one());
        assert_eq!(p.entries().iter().filter(|x| !x.is_zero()).count(), 1);

        let (p, m, z) = rotation_rep(Spin::ZERO);
        assert!(p.is_zero() && m.is_zero() && z.is_zero());
        assert_eq!(p.shape(), (1, 1));

        let (p, _, _) = rotation_rep(Spin::ONE);
        assert_eq!(p[(0, 1)], RadicalScalar::sqrt(2));
        assert_eq!(p[(1, 2)], RadicalScalar::sqrt(2));
    }

    #[test]
    fn irrep_examples() {
        let g = irrep_generators(SpinPair::from_twice(1, 0));
        for axis in 0..3 {
            assert_eq!(g.k[axis], g.j[axis].mul_i().neg());
        }
        assert_eq!(g.j[0][(0, 1)], RadicalScalar::ratio(1, 2));

        let g = irrep_generators(SpinPair::from_twice(0, 0));
        assert!(g.matrices().all(|m| m.shape() == (1, 1) && m.is_zero()));

        let g = irrep_generators(SpinPair::from_twice(1, 1));
        let int = RadicalScalar::from_integer;
        assert_eq!(g.j[2], DenseMatrix::diagonal([int(1), int(0), int(0), int(-1)]));
        let i = RadicalScalar::i();
        assert_eq!(g.k[2], DenseMatrix::diagonal([int(0), -i.clone(), i, int(0)]));
    }

    #[test]
    fn direct_sum_examples() {
        let g = direct_sum(SpinPair::from_twice(1, 0), SpinPair::from_twice(0, 1));
        let half = RadicalScalar::ratio(1, 2);
        assert_eq!(
            g.j[2],
            DenseMatrix::diagonal([half.clone(), -half.clone(), half.clone(), -half])
        );
        let g = direct_sum(SpinPair::from_twice(0, 0), SpinPair::from_twice(0, 0));
        assert!(g.matrices().all(|m| m.shape() == (2, 2) && m.is_zero()));
        assert_eq!(direct_sum(SpinPair::from_twice(1, 1), SpinPair::from_twice(2, 0)).dimension(), 7);
    }

    proptest! {
        #[test]
        fn ladders_are_adjoint(a in 0u32..=6) {
            let (p, m, z) = rotation_rep(Spin::from_twice(a));
            prop_assert_eq!(p.conj_transpose(), m);
            prop_assert_eq!(z.conj_transpose(), z.clone());
            let n = z.rows();
            for r in 0..n {
                for c in 0..n {
                    prop_assert!(r == c || z[(r, c)].is_zero());
                }
            }
        }

        #[test]
        fn casimir_is_scalar(a in 0u32..=6) {
            let g = irrep_generators(SpinPair::from_twice(a, 0));
            let mut sum = DenseMatrix::zeros(g.dimension(), g.dimension());
            for m in &g.j {
                sum = sum.try_add(&m.try_mul(m).unwrap()).unwrap();
            }
            // A(A+1) = 2A(2A+2)/4
            let value = RadicalScalar::ratio((a * (a + 2)) as i64, 4);
            prop_assert_eq!(sum, DenseMatrix::identity(g.dimension()).scale(&value));
        }

        #[test]
        fn direct_sum_blocks_match_irreps(a in 0u32..=3, b in 0u32..=3, c in 0u32..=3, d in 0u32..=3) {
            let p1 = SpinPair::from_twice(a, b);
            let p2 = SpinPair::from_twice(c, d);
            let g = direct_sum(p1, p2);
            let (g1, g2) = (irrep_generators(p1), irrep_generators(p2));
            let (n1, n2) = (p1.dimension(), p2.dimension());
            for (whole, (x, y)) in g.matrices().zip(g1.matrices().zip(g2.matrices())) {
                prop_assert_eq!(&whole.block(0, 0, n1, n1), x);
                prop_assert_eq!(&whole.block(n1, n1, n2, n2), y);
                prop_assert!(whole.block(0, n1, n1, n2).is_zero());
                prop_assert!(whole.block(n1, 0, n2, n1).is_zero());
            }
        }
    }
}
