//! Commuting momentum matrices from one off-diagonal block of a vector set.

use crate::error::Error;
use crate::matrix::DenseMatrix;
use crate::vector::{VectorKind, VectorSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockChoice {
    Keep12,
    Keep21,
}

impl BlockChoice {
    pub const fn name(self) -> &'static str {
        match self {
            BlockChoice::Keep12 => "keep12",
            BlockChoice::Keep21 => "keep21",
        }
    }

    pub const fn swapped(self) -> Self {
        match self {
            BlockChoice::Keep12 => BlockChoice::Keep21,
            BlockChoice::Keep21 => BlockChoice::Keep12,
        }
    }
}

/// Copy of `v` with the other off-diagonal block zeroed.
///
/// The result is block-triangular with zero diagonal blocks, so every
/// product of two components vanishes and the components commute.
pub fn momentum_from_vectors(v: &VectorSet, choice: BlockChoice) -> VectorSet {
    let n1 = v.sum.first.dimension();
    let n2 = v.sum.second.dimension();
    let mut out = v.clone();
    let (r0, c0, rows, cols) = match choice {
        BlockChoice::Keep12 => (n1, 0, n2, n1),
        BlockChoice::Keep21 => (0, n1, n1, n2),
    };
    let zero = DenseMatrix::zeros(rows, cols);
    for m in &mut out.components {
        m.set_block(r0, c0, &zero);
    }
    out.kind = VectorKind::Momentum(choice);
    out
}

/// The `(A,B)` diagonal block of `[V+, V-]` with both off-diagonal blocks kept.
pub fn noncommutativity_witness(v: &VectorSet) -> Result<DenseMatrix, Error> {
    let (plus, minus) = v.ladder();
    let n1 = v.sum.first.dimension();
    Ok(plus.commutator(&minus)?.block(0, 0, n1, n1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{sqrt_of_rational, RadicalScalar, Rational};
    use crate::spin::SpinSum;
    use crate::vector::{classify_case, closed_form_vectors, CaseTag, FreeParams};

    fn sweep() -> impl Iterator<Item = SpinSum> {
        SpinSum::all_up_to(3).filter(|s| classify_case(*s) != CaseTag::NoSolution)
    }

    #[test]
    fn keep12_commutes() {
        let v = closed_form_vectors(SpinSum::from_twice([1, 1, 0, 0]), &FreeParams::ones()).unwrap();
        let p = momentum_from_vectors(&v, BlockChoice::Keep12);
        assert!(p.block21(0).is_zero() && !p.block12(0).is_zero());
        for a in &p.components {
            for b in &p.components {
                assert!(a.commutator(b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn zero_set_stays_zero() {
        let v = VectorSet::zero(SpinSum::from_twice([1, 1, 0, 0]));
        assert!(momentum_from_vectors(&v, BlockChoice::Keep21).is_zero());
    }

    #[test]
    fn keep21_is_keep12_of_swapped() {
        let t = FreeParams::new(RadicalScalar::from_integer(2), RadicalScalar::sqrt(5));
        for sum in sweep() {
            let v = closed_form_vectors(sum, &t).unwrap();
            let left = momentum_from_vectors(&v, BlockChoice::Keep21);
            let right = momentum_from_vectors(&v.swapped(), BlockChoice::Keep12).swapped();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn sums_square_to_zero() {
        let x = [1, 2, 3, 4].map(RadicalScalar::from_integer);
        for sum in sweep() {
            let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
            for choice in [BlockChoice::Keep12, BlockChoice::Keep21] {
                let p = momentum_from_vectors(&v, choice);
                let mut xp = DenseMatrix::zeros(p.dimension(), p.dimension());
                for (c, m) in x.iter().zip(&p.components) {
                    xp = xp.try_add(&m.scale(c)).unwrap();
                }
                assert!(xp.try_mul(&xp).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn witness_matches_closed_form() {
        for twice in [[1, 1, 0, 0], [2, 1, 1, 0], [3, 3, 2, 2]] {
            let sum = SpinSum::from_twice(twice);
            let params = FreeParams::new(RadicalScalar::from_integer(3), RadicalScalar::sqrt(2));
            let v = closed_form_vectors(sum, &params).unwrap();
            let w = noncommutativity_witness(&v).unwrap();
            let (big_a, big_b) = (sum.a().to_rational(), sum.b().to_rational());
            let inv_root = sqrt_of_rational(&(Rational::from_integer(1.into()) / (&big_a * &big_b))).unwrap();
            let tt = &params.t12 * &params.t21;
            for (k, (a, b)) in sum.first.basis().into_iter().enumerate() {
                let coeff = -(&big_a * b.to_rational() + a.to_rational() * &big_b);
                let expected = inv_root.scale(&coeff) * &tt;
                for col in 0..w.cols() {
                    if col == k {
                        assert_eq!(w[(k, k)], expected, "{sum} ({a},{b})");
                    } else {
                        assert!(w[(k, col)].is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn witness_vanishes_without_t12() {
        let v = closed_form_vectors(
            SpinSum::from_twice([1, 1, 0, 0]),
            &FreeParams::new(RadicalScalar::zero(), RadicalScalar::one()),
        )
        .unwrap();
        assert!(noncommutativity_witness(&v).unwrap().is_zero());
    }
}
