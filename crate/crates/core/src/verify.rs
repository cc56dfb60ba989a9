//! Exact checks of the Poincaré commutation rules.
//!
//! Rules and their identifiers (`i, j ∈ {x,y,z}`, `μ, ν ∈ {x,y,z,t}`):
//!
//! ```text
//! JJ.ij  [J_i, J_j] = i ε_ijk J_k        (i < j)
//! JK.ij  [J_i, K_j] = i ε_ijk K_k
//! KK.ij  [K_i, K_j] = -i ε_ijk J_k       (i < j)
//! JV.ij  [J_i, V_j] = i ε_ijk V_k
//! JV.it  [J_i, V_t] = 0
//! KV.ij  [K_i, V_j] = -i δ_ij V_t
//! KV.it  [K_i, V_t] = -i V_i
//! PP.μν  [P_μ, P_ν] = 0                  (μ < ν)
//! ```
//!
//! Every decision is an exact zero test; only [`finite_covariance_check`]
//! uses floating point.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::generators::GeneratorSet;
use crate::matrix::DenseMatrix;
use crate::numeric::{expm, ComplexMatrix};
use crate::radical::RadicalScalar;
use crate::vector::{VectorSet, COMPONENT_NAMES};

/// Levi-Civita symbol with `ε_xyz = +1`.
pub const EPS: [[[i8; 3]; 3]; 3] = [
    [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
];

/// Accepted maximum residual of [`finite_covariance_check`].
pub const COVARIANCE_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub residual: RadicalScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleReport {
    pub rule_id: String,
    pub holds: bool,
    /// First nonzero residual entry in row-major order; `None` when the rule
    /// holds or the operands have mismatched shapes.
    pub first_violation: Option<Violation>,
}

impl RuleReport {
    fn from_residual(rule_id: String, residual: Result<DenseMatrix, Error>) -> Self {
        match residual {
            Ok(m) => {
                let first_violation = m.first_nonzero().map(|(row, col, v)| Violation {
                    row,
                    col,
                    residual: v.clone(),
                });
                RuleReport {
                    rule_id,
                    holds: first_violation.is_none(),
                    first_violation,
                }
            }
            Err(_) => RuleReport {
                rule_id,
                holds: false,
                first_violation: None,
            },
        }
    }
}

pub fn all_hold(reports: &[RuleReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// `MN - NM`.
pub fn commutator(m: &DenseMatrix, n: &DenseMatrix) -> Result<DenseMatrix, Error> {
    m.commutator(n)
}

/// `Σ_k c·ε_ijk M_k`.
fn eps_combination(i: usize, j: usize, c: &RadicalScalar, m: &[DenseMatrix; 3]) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(m[0].rows(), m[0].cols());
    for (k, mk) in m.iter().enumerate() {
        match EPS[i][j][k] {
            0 => {}
            e => {
                let term = mk.scale(&(c * &RadicalScalar::from_integer(e as i64)));
                out = out.try_add(&term).expect("same shape");
            }
        }
    }
    out
}

fn residual(lhs: &DenseMatrix, rhs_left: &DenseMatrix, expected: &DenseMatrix) -> Result<DenseMatrix, Error> {
    lhs.commutator(rhs_left)?.try_sub(expected)
}

fn axis(i: usize) -> char {
    COMPONENT_NAMES[i]
}

/// The 15 rules among `J` and `K`.
pub fn check_lorentz(g: &GeneratorSet) -> Vec<RuleReport> {
    let i_unit = RadicalScalar::i();
    let minus_i = -RadicalScalar::i();
    let mut out = Vec::with_capacity(15);
    for i in 0..3 {
        for j in i + 1..3 {
            let exp = eps_combination(i, j, &i_unit, &g.j);
            out.push(RuleReport::from_residual(
                format!("JJ.{}{}", axis(i), axis(j)),
                residual(&g.j[i], &g.j[j], &exp),
            ));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let exp = eps_combination(i, j, &i_unit, &g.k);
            out.push(RuleReport::from_residual(
                format!("JK.{}{}", axis(i), axis(j)),
                residual(&g.j[i], &g.k[j], &exp),
            ));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let exp = eps_combination(i, j, &minus_i, &g.j);
            out.push(RuleReport::from_residual(
                format!("KK.{}{}", axis(i), axis(j)),
                residual(&g.k[i], &g.k[j], &exp),
            ));
        }
    }
    out
}

/// The 24 rules between the generators and `V_μ`.
pub fn check_vector_rules(g: &GeneratorSet, v: &VectorSet) -> Result<Vec<RuleReport>, Error> {
    if g.dimension() != v.dimension() {
        return Err(Error::DimensionMismatch {
            left: (g.dimension(), g.dimension()),
            right: (v.dimension(), v.dimension()),
        });
    }
    let i_unit = RadicalScalar::i();
    let minus_i = -RadicalScalar::i();
    let spatial: [DenseMatrix; 3] = core::array::from_fn(|k| v.components[k].clone());
    let vt = &v.components[3];
    let zero = DenseMatrix::zeros(v.dimension(), v.dimension());
    let mut out = Vec::with_capacity(24);
    for i in 0..3 {
        for j in 0..3 {
            let exp = eps_combination(i, j, &i_unit, &spatial);
            out.push(RuleReport::from_residual(
                format!("JV.{}{}", axis(i), axis(j)),
                residual(&g.j[i], &spatial[j], &exp),
            ));
        }
        out.push(RuleReport::from_residual(
            format!("JV.{}t", axis(i)),
            residual(&g.j[i], vt, &zero),
        ));
    }
    for i in 0..3 {
        for (j, vj) in spatial.iter().enumerate() {
            let exp = if i == j { vt.scale(&minus_i) } else { zero.clone() };
            out.push(RuleReport::from_residual(
                format!("KV.{}{}", axis(i), axis(j)),
                residual(&g.k[i], vj, &exp),
            ));
        }
        out.push(RuleReport::from_residual(
            format!("KV.{}t", axis(i)),
            residual(&g.k[i], vt, &spatial[i].scale(&minus_i)),
        ));
    }
    Ok(out)
}

/// The 6 rules `[P_μ, P_ν] = 0`.
pub fn check_translations(p: &VectorSet) -> Vec<RuleReport> {
    let mut out = Vec::with_capacity(6);
    for mu in 0..4 {
        for nu in mu + 1..4 {
            out.push(RuleReport::from_residual(
                format!("PP.{}{}", axis(mu), axis(nu)),
                p.components[mu].commutator(&p.components[nu]),
            ));
        }
    }
    out
}

/// All 45 rules for generators `g` and momentum `p`.
pub fn check_poincare(g: &GeneratorSet, p: &VectorSet) -> Result<Vec<RuleReport>, Error> {
    let mut out = check_lorentz(g);
    out.extend(check_vector_rules(g, p)?);
    out.extend(check_translations(p));
    Ok(out)
}

/// Result of testing `{V_μ, V_ν} = k η_μν I` with `η = diag(1,1,1,-1)`.
///
/// Under the opposite overall metric sign the same relation holds with `-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliffordOutcome {
    Holds { k: RadicalScalar },
    /// Every anticommutator vanishes.
    Degenerate,
    /// `{V_mu, V_nu}` is not `k η_mu,nu I` for the `k` read off `{V_x, V_x}`.
    Fails { mu: usize, nu: usize },
}

pub fn check_clifford(v: &VectorSet) -> Result<CliffordOutcome, Error> {
    let n = v.dimension();
    let c = &v.components;
    let mut anti = Vec::with_capacity(10);
    for mu in 0..4 {
        for nu in mu..4 {
            anti.push((mu, nu, c[mu].anticommutator(&c[nu])?));
        }
    }
    if anti.iter().all(|(_, _, m)| m.is_zero()) {
        return Ok(CliffordOutcome::Degenerate);
    }
    let k = if n == 0 { RadicalScalar::zero() } else { anti[0].2[(0, 0)].clone() };
    let identity = DenseMatrix::identity(n);
    for (mu, nu, m) in &anti {
        let eta = match (mu, nu) {
            (3, 3) => -1,
            (a, b) if a == b => 1,
            _ => 0,
        };
        let expected = identity.scale(&(&k * &RadicalScalar::from_integer(eta)));
        if *m != expected {
            return Ok(CliffordOutcome::Fails { mu: *mu, nu: *nu });
        }
    }
    Ok(CliffordOutcome::Holds { k })
}

/// One-parameter subgroup used by [`finite_covariance_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transformation {
    /// Rotation about axis `0..3` generated by `J`.
    Rotation(usize),
    /// Boost along axis `0..3` generated by `K`.
    Boost(usize),
}

/// The 4×4 matrix `Λ` with `D V_μ D⁻¹ = Σ_ν Λ_μν V_ν` for `D = exp(iθG)`.
pub fn lorentz_matrix(t: Transformation, angle: f64) -> [[f64; 4]; 4] {
    let mut gen = [[0.0f64; 4]; 4];
    let (s, c_minus_1) = match t {
        Transformation::Rotation(i) => {
            for j in 0..3 {
                for k in 0..3 {
                    gen[j][k] = -(EPS[i][j][k] as f64);
                }
            }
            (libm::sin(angle), 1.0 - libm::cos(angle))
        }
        Transformation::Boost(i) => {
            gen[i][3] = 1.0;
            gen[3][i] = 1.0;
            (libm::sinh(angle), libm::cosh(angle) - 1.0)
        }
    };
    let mut sq = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            sq[r][c] = (0..4).map(|k| gen[r][k] * gen[k][c]).sum();
        }
    }
    core::array::from_fn(|r| {
        core::array::from_fn(|c| {
            let id = if r == c { 1.0 } else { 0.0 };
            id + s * gen[r][c] + c_minus_1 * sq[r][c]
        })
    })
}

/// Max entrywise `|D V_μ D⁻¹ - Σ_ν Λ_μν V_ν|` over all `μ`.
pub fn finite_covariance_check(
    g: &GeneratorSet,
    v: &VectorSet,
    t: Transformation,
    angle: f64,
) -> Result<f64, Error> {
    let (generator, limit, name) = match t {
        Transformation::Rotation(i) if i < 3 => (&g.j[i], core::f64::consts::PI, "rotation angle"),
        Transformation::Boost(i) if i < 3 => (&g.k[i], 2.0, "rapidity"),
        _ => return Err(Error::OutOfDomain(String::from("axis index must be 0, 1 or 2"))),
    };
    if angle.is_nan() || angle.abs() > limit {
        return Err(Error::OutOfDomain(format!("{name} {angle} exceeds {limit}")));
    }
    if g.dimension() != v.dimension() {
        return Err(Error::DimensionMismatch {
            left: (g.dimension(), g.dimension()),
            right: (v.dimension(), v.dimension()),
        });
    }
    let gf = ComplexMatrix::from_exact(generator);
    let d = expm(&gf.scale(Complex64::new(0.0, angle)))?;
    let d_inv = expm(&gf.scale(Complex64::new(0.0, -angle)))?;
    let vf: Vec<ComplexMatrix> = v.components.iter().map(ComplexMatrix::from_exact).collect();
    let lambda = lorentz_matrix(t, angle);
    let mut worst = 0.0f64;
    for mu in 0..4 {
        let lhs = d.mul(&vf[mu]).mul(&d_inv);
        let mut rhs = ComplexMatrix::zeros(v.dimension());
        for (nu, m) in vf.iter().enumerate() {
            if lambda[mu][nu] != 0.0 {
                rhs = rhs.add(&m.scale(Complex64::new(lambda[mu][nu], 0.0)));
            }
        }
        worst = worst.max(lhs.sub(&rhs).max_abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{direct_sum, irrep_generators};
    use crate::momentum::{momentum_from_vectors, BlockChoice};
    use crate::spin::{SpinPair, SpinSum};
    use crate::vector::{classify_case, closed_form_vectors, CaseTag, FreeParams};

    fn int(n: i64) -> RadicalScalar {
        RadicalScalar::from_integer(n)
    }

    fn generators(sum: SpinSum) -> GeneratorSet {
        direct_sum(sum.first, sum.second)
    }

    #[test]
    fn commutator_examples() {
        let d = DenseMatrix::diagonal([int(1), int(-1)]);
        let x = DenseMatrix::from_fn(2, 2, |r, c| int((r != c) as i64));
        let expected = DenseMatrix::from_row_major(2, 2, [0, 2, -2, 0].map(int).into()).unwrap();
        assert_eq!(commutator(&d, &x).unwrap(), expected);

        let g = irrep_generators(SpinPair::from_twice(1, 0));
        assert_eq!(commutator(&g.j[2], &g.j[0]).unwrap(), g.j[1].mul_i());
        assert!(commutator(&DenseMatrix::identity(2), &g.k[1]).unwrap().is_zero());
        assert!(commutator(&d, &DenseMatrix::identity(3)).is_err());
    }

    #[test]
    fn lorentz_rules_hold_on_irreps() {
        for a in 0..=4 {
            for b in 0..=4 {
                let reports = check_lorentz(&irrep_generators(SpinPair::from_twice(a, b)));
                assert_eq!(reports.len(), 15);
                assert!(all_hold(&reports), "({a},{b})");
            }
        }
    }

    #[test]
    fn transposed_kx_is_caught() {
        // K_x is symmetric in this basis, so the plain transpose is a no-op
        let mut g = irrep_generators(SpinPair::from_twice(1, 0));
        assert!(all_hold(&{
            let mut h = g.clone();
            h.k[0] = h.k[0].transpose();
            check_lorentz(&h)
        }));
        g.k[0] = g.k[0].conj_transpose();
        let failing: Vec<_> = check_lorentz(&g).into_iter().filter(|r| !r.holds).map(|r| r.rule_id).collect();
        assert!(failing.iter().any(|id| id == "KK.xy"), "{failing:?}");
        let kk_xy = check_lorentz(&g).into_iter().find(|r| r.rule_id == "KK.xy").unwrap();
        assert!(kk_xy.first_violation.is_some());
    }

    #[test]
    fn rule_ids_and_count() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        let p = momentum_from_vectors(&v, BlockChoice::Keep12);
        let reports = check_poincare(&generators(sum), &p).unwrap();
        assert_eq!(reports.len(), 45);
        let mut ids: Vec<_> = reports.iter().map(|r| r.rule_id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 45);
        for id in ["JJ.xy", "KV.zt", "PP.xt", "JV.yt", "JK.zz"] {
            assert!(ids.iter().any(|x| x == id), "{id}");
        }
        assert!(all_hold(&reports));
    }

    #[test]
    fn vector_rules_hold_for_closed_forms() {
        let params = FreeParams::new(int(2) + RadicalScalar::i(), RadicalScalar::sqrt(7));
        for sum in SpinSum::all_up_to(3).filter(|s| classify_case(*s) != CaseTag::NoSolution) {
            let v = closed_form_vectors(sum, &params).unwrap();
            let reports = check_vector_rules(&generators(sum), &v).unwrap();
            assert!(all_hold(&reports), "{sum}");
        }
    }

    #[test]
    fn zero_vector_passes() {
        let sum = SpinSum::from_twice([2, 2, 2, 2]);
        assert!(all_hold(&check_vector_rules(&generators(sum), &VectorSet::zero(sum)).unwrap()));
        assert!(all_hold(&check_translations(&VectorSet::zero(sum))));
    }

    #[test]
    fn flipped_vt_breaks_diagonal_boost_rules() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let mut v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        v.components[3] = v.components[3].neg();
        let failing: Vec<_> = check_vector_rules(&generators(sum), &v)
            .unwrap()
            .into_iter()
            .filter(|r| !r.holds)
            .map(|r| r.rule_id)
            .collect();
        for id in ["KV.xx", "KV.yy", "KV.zz"] {
            assert!(failing.iter().any(|x| x == id), "{failing:?}");
        }
    }

    #[test]
    fn single_entry_perturbation_is_detected() {
        let sum = SpinSum::from_twice([1, 1, 2, 0]);
        let g = generators(sum);
        let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        let p = momentum_from_vectors(&v, BlockChoice::Keep21);
        for mu in 0..4 {
            let n = p.dimension();
            for r in 0..n {
                for c in 0..n {
                    if p.components[mu][(r, c)].is_zero() {
                        continue;
                    }
                    let mut q = p.clone();
                    q.components[mu][(r, c)] += int(1);
                    assert!(!all_hold(&check_poincare(&g, &q).unwrap()), "mu={mu} ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn two_block_vector_fails_translations() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        let reports = check_translations(&v);
        assert!(!all_hold(&reports));
        let xy = reports.iter().find(|r| r.rule_id == "PP.xy").unwrap();
        // [Vx, Vy] = 2i [V+, V-] and the (1/2,1/2) corner of [V+, V-] is -1
        let violation = xy.first_violation.as_ref().unwrap();
        assert_eq!((violation.row, violation.col), (0, 0));
        assert_eq!(violation.residual, RadicalScalar::from_integer(-2).mul_i());
    }

    #[test]
    fn clifford_examples() {
        let dirac = SpinSum::from_twice([1, 0, 0, 1]);
        let v = closed_form_vectors(dirac, &FreeParams::ones()).unwrap();
        assert_eq!(check_clifford(&v).unwrap(), CliffordOutcome::Holds { k: int(2) });

        let v = closed_form_vectors(SpinSum::from_twice([1, 1, 0, 0]), &FreeParams::ones()).unwrap();
        assert!(matches!(check_clifford(&v).unwrap(), CliffordOutcome::Fails { .. }));

        assert_eq!(check_clifford(&VectorSet::zero(dirac)).unwrap(), CliffordOutcome::Degenerate);
    }

    #[test]
    fn covariance_examples() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let g = generators(sum);
        let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        assert!(finite_covariance_check(&g, &v, Transformation::Rotation(2), 0.0).unwrap() < 1e-14);
        let half_pi = core::f64::consts::FRAC_PI_2;
        assert!(finite_covariance_check(&g, &v, Transformation::Rotation(2), half_pi).unwrap() < 1e-10);
        assert!(finite_covariance_check(&g, &v, Transformation::Boost(2), 1.0).unwrap() < 1e-9);
        assert!(finite_covariance_check(&g, &v, Transformation::Rotation(0), 0.7).unwrap() < 1e-10);
        assert!(finite_covariance_check(&g, &v, Transformation::Boost(1), -1.5).unwrap() < 1e-9);
    }

    #[test]
    fn covariance_detects_wrong_lambda_sign() {
        let sum = SpinSum::from_twice([1, 0, 0, 1]);
        let g = generators(sum);
        let mut v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        v.components.swap(0, 1);
        assert!(finite_covariance_check(&g, &v, Transformation::Rotation(2), 1.0).unwrap() > 1e-3);
    }

    #[test]
    fn covariance_domain() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let g = generators(sum);
        let v = VectorSet::zero(sum);
        assert!(matches!(
            finite_covariance_check(&g, &v, Transformation::Rotation(2), 4.0),
            Err(Error::OutOfDomain(_))
        ));
        assert!(matches!(
            finite_covariance_check(&g, &v, Transformation::Boost(0), 2.5),
            Err(Error::OutOfDomain(_))
        ));
        assert!(finite_covariance_check(&g, &v, Transformation::Boost(3), 0.5).is_err());
        assert!(finite_covariance_check(&g, &v, Transformation::Rotation(0), f64::NAN).is_err());
    }
}
