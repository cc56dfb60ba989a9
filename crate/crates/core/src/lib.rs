#![no_std]

#[cfg(test)]
extern crate std;

extern crate alloc;

pub mod cg;
mod error;
pub mod generators;
mod literal;
pub mod lyubarskii;
pub mod matrix;
pub mod momentum;
pub mod numeric;
pub mod radical;
pub mod spin;
pub mod vector;
pub mod verify;

pub use error::Error;
pub use generators::{direct_sum, irrep_generators, ladder_coeff_r, ladder_coeff_s, rotation_rep, GeneratorSet};
pub use matrix::DenseMatrix;
pub use momentum::{momentum_from_vectors, noncommutativity_witness, BlockChoice};
pub use radical::{normalize_radical, sqrt_of_rational, GaussianRational, RadicalScalar, Rational};
pub use spin::{flatten_index, HalfInt, Spin, SpinPair, SpinSum};
pub use vector::{
    classify_case, closed_form_vectors, recursion_solve, vectors_from_coefficients, CaseTag, FreeParams,
    TUCoefficients, VectorKind, VectorSet,
};
pub use cg::{clebsch_gordan, CgKey, CouplingTable};
pub use lyubarskii::{
    beta_block_12, beta_block_21, equivalence_ratio, lyubarskii_vectors, BarVTable, CouplingOrientation,
    EquivalenceRatios, LambdaParams, Mismatch,
};
pub use verify::{
    check_clifford, check_lorentz, check_poincare, check_translations, check_vector_rules, commutator,
    finite_covariance_check, CliffordOutcome, RuleReport, Transformation,
};
