//! Vector matrices `V_μ` on `(A,B) ⊕ (C,D)`.
//!
//! Two independent constructions live here: the closed-form tables in
//! [`closed_form`] and the ladder recursions in [`recursion`]. Both produce a
//! [`VectorSet`] whose diagonal blocks are zero.

pub mod closed_form;
pub mod recursion;

use core::fmt;

use crate::error::Error;
use crate::generators::into_array;
use crate::matrix::DenseMatrix;
use crate::momentum::BlockChoice;
use crate::radical::RadicalScalar;
use crate::spin::SpinSum;

pub use closed_form::closed_form_vectors;
pub use recursion::{recursion_solve, vectors_from_coefficients, BlockCoefficients, TUCoefficients};

/// Which sign pattern of `A = C ± 1/2, B = D ± 1/2` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// `A = C + 1/2`, `B = D + 1/2`
    Case1,
    /// `A = C + 1/2`, `B = D - 1/2`
    Case2,
    /// `A = C - 1/2`, `B = D + 1/2`
    Case3,
    /// `A = C - 1/2`, `B = D - 1/2`
    Case4,
    NoSolution,
}

impl CaseTag {
    pub const fn name(self) -> &'static str {
        match self {
            CaseTag::Case1 => "Case1",
            CaseTag::Case2 => "Case2",
            CaseTag::Case3 => "Case3",
            CaseTag::Case4 => "Case4",
            CaseTag::NoSolution => "NoSolution",
        }
    }

    /// The tag of the block-swapped sum.
    pub const fn swapped(self) -> Self {
        match self {
            CaseTag::Case1 => CaseTag::Case4,
            CaseTag::Case2 => CaseTag::Case3,
            CaseTag::Case3 => CaseTag::Case2,
            CaseTag::Case4 => CaseTag::Case1,
            CaseTag::NoSolution => CaseTag::NoSolution,
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            CaseTag::Case1,
            CaseTag::Case2,
            CaseTag::Case3,
            CaseTag::Case4,
            CaseTag::NoSolution,
        ]
        .into_iter()
        .find(|c| c.name() == name)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_case(sum: SpinSum) -> CaseTag {
    let [a, b, c, d] = sum.twice().map(|x| x as i64);
    match (a - c, b - d) {
        (1, 1) => CaseTag::Case1,
        (1, -1) => CaseTag::Case2,
        (-1, 1) => CaseTag::Case3,
        (-1, -1) => CaseTag::Case4,
        _ => CaseTag::NoSolution,
    }
}

/// Admissible case of `sum`, or [`Error::NoSolution`].
pub fn require_case(sum: SpinSum) -> Result<CaseTag, Error> {
    match classify_case(sum) {
        CaseTag::NoSolution => Err(Error::NoSolution(sum)),
        case => Ok(case),
    }
}

/// The two scalars scaling the 12- and 21-blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeParams {
    pub t12: RadicalScalar,
    pub t21: RadicalScalar,
}

impl FreeParams {
    pub fn new(t12: RadicalScalar, t21: RadicalScalar) -> Self {
        FreeParams { t12, t21 }
    }

    pub fn ones() -> Self {
        FreeParams::new(RadicalScalar::one(), RadicalScalar::one())
    }
}

/// Whether the set is a general vector or a commuting momentum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VectorKind {
    Vector,
    Momentum(BlockChoice),
}

/// Component index order: `x, y, z, t`.
pub const COMPONENT_NAMES: [char; 4] = ['x', 'y', 'z', 't'];

/// Four matrices `V_x, V_y, V_z, V_t` over the `(A,B) / (C,D)` split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSet {
    pub sum: SpinSum,
    pub case: CaseTag,
    /// `t12, t21` for the closed-form and recursion paths; `λ12, λ21` for
    /// the Clebsch-Gordan path.
    pub params: FreeParams,
    pub kind: VectorKind,
    pub components: [DenseMatrix; 4],
}

impl VectorSet {
    /// Assembles full matrices from off-diagonal blocks given in `x, y, z, t` order.
    pub fn from_blocks(
        sum: SpinSum,
        case: CaseTag,
        params: FreeParams,
        block12: [DenseMatrix; 4],
        block21: [DenseMatrix; 4],
    ) -> Self {
        let n1 = sum.first.dimension();
        let n = sum.dimension();
        let components = into_array(
            block12
                .iter()
                .zip(&block21)
                .map(|(b12, b21)| {
                    let mut m = DenseMatrix::zeros(n, n);
                    m.set_block(0, n1, b12);
                    m.set_block(n1, 0, b21);
                    m
                })
                .collect(),
        );
        VectorSet {
            sum,
            case,
            params,
            kind: VectorKind::Vector,
            components,
        }
    }

    pub fn zero(sum: SpinSum) -> Self {
        let n = sum.dimension();
        VectorSet {
            sum,
            case: classify_case(sum),
            params: FreeParams::default(),
            kind: VectorKind::Vector,
            components: core::array::from_fn(|_| DenseMatrix::zeros(n, n)),
        }
    }

    pub fn dimension(&self) -> usize {
        self.sum.dimension()
    }

    fn split(&self) -> (usize, usize) {
        (self.sum.first.dimension(), self.sum.second.dimension())
    }

    /// The `(A,B)`-row, `(C,D)`-column block of component `mu`.
    pub fn block12(&self, mu: usize) -> DenseMatrix {
        let (n1, n2) = self.split();
        self.components[mu].block(0, n1, n1, n2)
    }

    /// The `(C,D)`-row, `(A,B)`-column block of component `mu`.
    pub fn block21(&self, mu: usize) -> DenseMatrix {
        let (n1, n2) = self.split();
        self.components[mu].block(n1, 0, n2, n1)
    }

    pub fn block11(&self, mu: usize) -> DenseMatrix {
        let (n1, _) = self.split();
        self.components[mu].block(0, 0, n1, n1)
    }

    pub fn block22(&self, mu: usize) -> DenseMatrix {
        let (n1, n2) = self.split();
        self.components[mu].block(n1, n1, n2, n2)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(DenseMatrix::is_zero)
    }

    /// `V± = (V_x ± i V_y) / 2`.
    pub fn ladder(&self) -> (DenseMatrix, DenseMatrix) {
        let half = crate::radical::Rational::new(1.into(), 2.into());
        let iy = self.components[1].mul_i();
        let plus = self.components[0].try_add(&iy).expect("same shape");
        let minus = self.components[0].try_sub(&iy).expect("same shape");
        (plus.scale_rational(&half), minus.scale_rational(&half))
    }

    /// Reorders rows and columns so that `(C,D)` comes first.
    pub fn swapped(&self) -> Self {
        let (n1, n2) = self.split();
        let n = n1 + n2;
        let perm = |k: usize| if k < n2 { k + n1 } else { k - n2 };
        let components = core::array::from_fn(|mu| {
            let m = &self.components[mu];
            DenseMatrix::from_fn(n, n, |r, c| m[(perm(r), perm(c))].clone())
        });
        let kind = match self.kind {
            VectorKind::Momentum(choice) => VectorKind::Momentum(choice.swapped()),
            k => k,
        };
        VectorSet {
            sum: self.sum.swapped(),
            case: self.case.swapped(),
            params: FreeParams::new(self.params.t21.clone(), self.params.t12.clone()),
            kind,
            components,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_case(SpinSum::from_twice([1, 1, 0, 0])), CaseTag::Case1);
        assert_eq!(classify_case(SpinSum::from_twice([1, 0, 0, 1])), CaseTag::Case2);
        assert_eq!(classify_case(SpinSum::from_twice([2, 0, 0, 0])), CaseTag::NoSolution);
        assert_eq!(classify_case(SpinSum::from_twice([0, 1, 1, 0])), CaseTag::Case3);
        assert_eq!(classify_case(SpinSum::from_twice([1, 1, 2, 2])), CaseTag::Case4);
        assert_eq!(classify_case(SpinSum::from_twice([1, 1, 1, 1])), CaseTag::NoSolution);
    }

    #[test]
    fn exactly_one_tag_and_swap_relation() {
        for sum in SpinSum::all_up_to(4) {
            let case = classify_case(sum);
            assert_eq!(classify_case(sum.swapped()), case.swapped());
        }
        let admissible = SpinSum::all_up_to(4)
            .filter(|s| classify_case(*s) != CaseTag::NoSolution)
            .count();
        assert!(admissible >= 16);
    }

    #[test]
    fn no_solution_error_names_the_rule() {
        let err = require_case(SpinSum::from_twice([2, 0, 0, 0])).unwrap_err();
        let text = alloc::format!("{err}");
        assert!(text.contains("A = C ± 1/2 and B = D ± 1/2"), "{text}");
        assert!(text.contains("A - C = 1"), "{text}");
    }
}
