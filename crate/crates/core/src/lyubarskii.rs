//! Vector matrices assembled from Clebsch-Gordan coefficients.
//!
//! ```text
//! (β_μ21)_{cd,ab} = λ21 w_μ(m,n) ⟨½ m, A a | C c⟩ ⟨½ n, B b | D d⟩    m = c-a, n = d-b
//! (β_μ12)_{ab,cd} = λ12 w_μ(m,n) ⟨½ m, C c | A a⟩ ⟨½ n, D d | B b⟩    m = a-c, n = b-d
//! ```
//!
//! The weights `w_μ` come from four constant 2×2 tables `V̄_μ`; see
//! [`bar_weight`] for how `(m, n)` address them.

use alloc::vec::Vec;
use core::fmt;

use crate::cg::{CgKey, CouplingTable};
use crate::error::Error;
use crate::matrix::DenseMatrix;
use crate::radical::RadicalScalar;
use crate::spin::{HalfInt, Spin, SpinPair, SpinSum};
use crate::vector::{require_case, FreeParams, VectorSet};

/// The four printed 2×2 tables, rows and columns labelled `-½, +½`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarVTable {
    pub v: [[[RadicalScalar; 2]; 2]; 4],
}

impl BarVTable {
    pub fn printed() -> Self {
        let int = RadicalScalar::from_integer;
        let i = RadicalScalar::i;
        BarVTable {
            v: [
                [[int(0), int(1)], [int(1), int(0)]],
                [[int(0), i()], [-i(), int(0)]],
                [[int(-1), int(0)], [int(0), int(1)]],
                [[int(-1), int(0)], [int(0), int(-1)]],
            ],
        }
    }
}

impl Default for BarVTable {
    fn default() -> Self {
        Self::printed()
    }
}

/// `0` for `-½`, `1` for `+½`.
fn label(m: HalfInt) -> usize {
    if m.twice() < 0 {
        0
    } else {
        1
    }
}

/// `w_μ(m, n) = (-1)^(½-m) · V̄_μ[n][-m]`.
///
/// The first CG projection `m` selects the column through its negative and
/// carries the phase `(-1)^(½-m)`; `n` selects the row.
pub fn bar_weight(table: &BarVTable, mu: usize, m: HalfInt, n: HalfInt) -> RadicalScalar {
    let entry = &table.v[mu][label(n)][label(-m)];
    if m.twice() > 0 {
        entry.clone()
    } else {
        -entry
    }
}

/// Scales of the two off-diagonal blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaParams {
    pub lambda12: RadicalScalar,
    pub lambda21: RadicalScalar,
}

impl LambdaParams {
    pub fn new(lambda12: RadicalScalar, lambda21: RadicalScalar) -> Self {
        LambdaParams { lambda12, lambda21 }
    }

    pub fn ones() -> Self {
        LambdaParams::new(RadicalScalar::one(), RadicalScalar::one())
    }
}

/// How each CG factor `⟨½ n, X x | Y y⟩` is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CouplingOrientation {
    /// Every factor couples the smaller spin up to the larger one: when
    /// `Y < X` it is replaced by `(-1)^(½-n) ⟨½ -n, Y y | X x⟩`. This rescales
    /// each block by a constant and makes the Case 2 ratio `√(2B+1)`.
    #[default]
    Raising,
    /// Factors exactly as written above; the Case 2 ratio is then `√(2B+2)`.
    Printed,
}

struct Coupler<'a> {
    table: &'a mut CouplingTable,
    orientation: CouplingOrientation,
}

impl Coupler<'_> {
    /// `⟨½ n, X x | Y y⟩` under the chosen orientation.
    fn factor(&mut self, n: HalfInt, big_x: Spin, x: HalfInt, big_y: Spin, y: HalfInt) -> RadicalScalar {
        let half = Spin::HALF;
        let raise = self.orientation == CouplingOrientation::Raising && big_y < big_x;
        if raise {
            let v = self.table.get(CgKey::new(half, -n, big_y, y, big_x, x));
            if n.twice() > 0 {
                v
            } else {
                -v
            }
        } else {
            self.table.get(CgKey::new(half, n, big_x, x, big_y, y))
        }
    }
}

/// One off-diagonal block with rows in `rows` and columns in `cols`:
/// `λ w_μ(m,n) ⟨½ m, Z z | X x⟩ ⟨½ n, W w | Y y⟩` with `m = x - z`, `n = y - w`.
fn beta_block(
    rows: SpinPair,
    cols: SpinPair,
    lambda: &RadicalScalar,
    orientation: CouplingOrientation,
    bar: &BarVTable,
) -> [DenseMatrix; 4] {
    let (nr, nc) = (rows.dimension(), cols.dimension());
    let mut out: [DenseMatrix; 4] = core::array::from_fn(|_| DenseMatrix::zeros(nr, nc));
    if lambda.is_zero() {
        return out;
    }
    let mut table = CouplingTable::new();
    let mut coupler = Coupler {
        table: &mut table,
        orientation,
    };
    for (ri, (x, y)) in rows.basis().into_iter().enumerate() {
        for (ci, (z, w)) in cols.basis().into_iter().enumerate() {
            let (m, n) = (x - z, y - w);
            if m.twice().abs() != 1 || n.twice().abs() != 1 {
                continue;
            }
            let cg = &coupler.factor(m, cols.left, z, rows.left, x)
                * &coupler.factor(n, cols.right, w, rows.right, y);
            if cg.is_zero() {
                continue;
            }
            let scaled = &cg * lambda;
            for (mu, block) in out.iter_mut().enumerate() {
                let weight = bar_weight(bar, mu, m, n);
                if !weight.is_zero() {
                    block[(ri, ci)] = &weight * &scaled;
                }
            }
        }
    }
    out
}

/// `β_μ21` blocks, rows `(C,D)`, columns `(A,B)`, in `x, y, z, t` order.
pub fn beta_block_21(
    sum: SpinSum,
    lambda21: &RadicalScalar,
    orientation: CouplingOrientation,
) -> Result<[DenseMatrix; 4], Error> {
    require_case(sum)?;
    Ok(beta_block(sum.second, sum.first, lambda21, orientation, &BarVTable::printed()))
}

/// `β_μ12` blocks, rows `(A,B)`, columns `(C,D)`, in `x, y, z, t` order.
pub fn beta_block_12(
    sum: SpinSum,
    lambda12: &RadicalScalar,
    orientation: CouplingOrientation,
) -> Result<[DenseMatrix; 4], Error> {
    require_case(sum)?;
    Ok(beta_block(sum.first, sum.second, lambda12, orientation, &BarVTable::printed()))
}

/// Full `β_μ` with both blocks. `params` of the result holds `(λ12, λ21)`.
pub fn lyubarskii_vectors(
    sum: SpinSum,
    lambdas: &LambdaParams,
    orientation: CouplingOrientation,
) -> Result<VectorSet, Error> {
    let case = require_case(sum)?;
    let b12 = beta_block_12(sum, &lambdas.lambda12, orientation)?;
    let b21 = beta_block_21(sum, &lambdas.lambda21, orientation)?;
    let params = FreeParams::new(lambdas.lambda12.clone(), lambdas.lambda21.clone());
    Ok(VectorSet::from_blocks(sum, case, params, b12, b21))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OffDiagonal {
    B12,
    B21,
}

impl fmt::Display for OffDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OffDiagonal::B12 => "12",
            OffDiagonal::B21 => "21",
        })
    }
}

/// First entry where `ratio · candidate ≠ reference`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub block: OffDiagonal,
    /// `0..4` for `x, y, z, t`.
    pub component: usize,
    /// Row and column in the full matrix.
    pub row: usize,
    pub col: usize,
    pub reference: RadicalScalar,
    pub scaled_candidate: RadicalScalar,
    pub ratio: Option<RadicalScalar>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {} component V{} entry ({},{}): expected {}, got {}",
            self.block,
            crate::vector::COMPONENT_NAMES[self.component],
            self.row,
            self.col,
            self.reference,
            self.scaled_candidate
        )?;
        if let Some(r) = &self.ratio {
            write!(f, " with ratio {r}")?;
        }
        Ok(())
    }
}

/// Per-block scalars with `ratio · candidate = reference`; `None` where both
/// blocks vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRatios {
    pub ratio12: Option<RadicalScalar>,
    pub ratio21: Option<RadicalScalar>,
}

/// Fits one scalar per off-diagonal block mapping `candidate` onto
/// `reference` and checks it on every entry of every component.
pub fn equivalence_ratio(reference: &VectorSet, candidate: &VectorSet) -> Result<EquivalenceRatios, Mismatch> {
    let n1 = reference.sum.first.dimension();
    let ratio12 = block_ratio(reference, candidate, OffDiagonal::B12, 0, n1)?;
    let ratio21 = block_ratio(reference, candidate, OffDiagonal::B21, n1, 0)?;
    Ok(EquivalenceRatios { ratio12, ratio21 })
}

fn block_ratio(
    reference: &VectorSet,
    candidate: &VectorSet,
    block: OffDiagonal,
    row0: usize,
    col0: usize,
) -> Result<Option<RadicalScalar>, Mismatch> {
    let pick = |v: &VectorSet, mu: usize| match block {
        OffDiagonal::B12 => v.block12(mu),
        OffDiagonal::B21 => v.block21(mu),
    };
    let refs: Vec<DenseMatrix> = (0..4).map(|mu| pick(reference, mu)).collect();
    let cands: Vec<DenseMatrix> = (0..4).map(|mu| pick(candidate, mu)).collect();
    let mismatch = |mu: usize, r: usize, c: usize, scaled: RadicalScalar, ratio: Option<RadicalScalar>| Mismatch {
        block,
        component: mu,
        row: row0 + r,
        col: col0 + c,
        reference: refs[mu][(r, c)].clone(),
        scaled_candidate: scaled,
        ratio,
    };
    if refs.iter().zip(&cands).any(|(a, b)| a.shape() != b.shape()) {
        return Err(mismatch(0, 0, 0, RadicalScalar::zero(), None));
    }

    let mut ratio = None;
    'search: for (mu, cand) in cands.iter().enumerate() {
        if let Some((r, c, value)) = cand.first_nonzero() {
            match crate::radical::exact_quotient(&refs[mu][(r, c)], value) {
                Some(q) if !q.is_zero() => ratio = Some(q),
                _ => return Err(mismatch(mu, r, c, value.clone(), None)),
            }
            break 'search;
        }
    }
    let Some(ratio) = ratio else {
        // candidate block is zero; the reference must be too
        for (mu, m) in refs.iter().enumerate() {
            if let Some((r, c, _)) = m.first_nonzero() {
                return Err(mismatch(mu, r, c, RadicalScalar::zero(), None));
            }
        }
        return Ok(None);
    };
    for mu in 0..4 {
        let (rows, cols) = refs[mu].shape();
        for r in 0..rows {
            for c in 0..cols {
                let scaled = &cands[mu][(r, c)] * &ratio;
                if scaled != refs[mu][(r, c)] {
                    return Err(mismatch(mu, r, c, scaled, Some(ratio.clone())));
                }
            }
        }
    }
    Ok(Some(ratio))
}

/// `√(2X+1)`.
pub fn multiplicity_root(spin: Spin) -> RadicalScalar {
    RadicalScalar::sqrt(spin.multiplicity() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::direct_sum;
    use crate::vector::{classify_case, closed_form_vectors, CaseTag};
    use crate::verify::{all_hold, check_vector_rules};

    fn admissible() -> impl Iterator<Item = SpinSum> {
        SpinSum::all_up_to(4).filter(|s| classify_case(*s) != CaseTag::NoSolution)
    }

    fn t12_only() -> FreeParams {
        FreeParams::new(RadicalScalar::one(), RadicalScalar::zero())
    }

    #[test]
    fn zero_lambda_gives_zero_blocks() {
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        for orientation in [CouplingOrientation::Raising, CouplingOrientation::Printed] {
            assert!(beta_block_21(sum, &RadicalScalar::zero(), orientation).unwrap().iter().all(DenseMatrix::is_zero));
            assert!(beta_block_12(sum, &RadicalScalar::zero(), orientation).unwrap().iter().all(DenseMatrix::is_zero));
        }
    }

    #[test]
    fn dirac_beta_t_is_diagonal() {
        let sum = SpinSum::from_twice([1, 0, 0, 1]);
        let bt = &beta_block_21(sum, &RadicalScalar::one(), CouplingOrientation::Printed).unwrap()[3];
        assert_eq!(bt.shape(), (2, 2));
        assert!(bt[(0, 1)].is_zero() && bt[(1, 0)].is_zero());
        assert!(!bt[(0, 0)].is_zero() && !bt[(1, 1)].is_zero());
    }

    #[test]
    fn no_solution_is_reported_and_raw_blocks_vanish() {
        let sum = SpinSum::from_twice([3, 0, 0, 1]);
        assert!(matches!(
            beta_block_21(sum, &RadicalScalar::one(), CouplingOrientation::Raising),
            Err(Error::NoSolution(_))
        ));
        for orientation in [CouplingOrientation::Raising, CouplingOrientation::Printed] {
            let raw = beta_block(sum.second, sum.first, &RadicalScalar::one(), orientation, &BarVTable::printed());
            assert!(raw.iter().all(DenseMatrix::is_zero));
            let raw = beta_block(sum.first, sum.second, &RadicalScalar::one(), orientation, &BarVTable::printed());
            assert!(raw.iter().all(DenseMatrix::is_zero));
        }
    }

    #[test]
    fn stretched_column_for_scalar_partner() {
        // (1/2,1/2)+(0,0): each entry is a product of couplings to spin 0
        let sum = SpinSum::from_twice([1, 1, 0, 0]);
        let b = beta_block_12(sum, &RadicalScalar::one(), CouplingOrientation::Raising).unwrap();
        assert_eq!(b[0].shape(), (4, 1));
        assert!(b.iter().any(|m| !m.is_zero()));
    }

    #[test]
    fn satisfies_vector_rules() {
        let lambdas = LambdaParams::new(RadicalScalar::sqrt(3), RadicalScalar::from_integer(2) - RadicalScalar::i());
        for orientation in [CouplingOrientation::Raising, CouplingOrientation::Printed] {
            for sum in admissible() {
                let v = lyubarskii_vectors(sum, &lambdas, orientation).unwrap();
                let g = direct_sum(sum.first, sum.second);
                assert!(all_hold(&check_vector_rules(&g, &v).unwrap()), "{sum} {orientation:?}");
            }
        }
    }

    #[test]
    fn proportional_to_closed_forms_everywhere() {
        for orientation in [CouplingOrientation::Raising, CouplingOrientation::Printed] {
            for sum in admissible() {
                let a = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
                let b = lyubarskii_vectors(sum, &LambdaParams::ones(), orientation).unwrap();
                let ratios = equivalence_ratio(&a, &b).unwrap_or_else(|m| panic!("{sum}: {m}"));
                assert!(ratios.ratio12.is_some() && ratios.ratio21.is_some());
            }
        }
    }

    #[test]
    fn case2_ratio_raising() {
        for twice in [[1, 0, 0, 1], [2, 1, 1, 2], [1, 2, 0, 3], [3, 2, 2, 3]] {
            let sum = SpinSum::from_twice(twice);
            let a = closed_form_vectors(sum, &t12_only()).unwrap();
            let b = lyubarskii_vectors(sum, &LambdaParams::new(RadicalScalar::one(), RadicalScalar::zero()), CouplingOrientation::Raising).unwrap();
            let r = equivalence_ratio(&a, &b).unwrap();
            assert_eq!(r.ratio12, Some(multiplicity_root(sum.b())), "{sum}");
            assert_eq!(r.ratio21, None);
        }
    }

    #[test]
    fn case2_ratio_printed_is_shifted() {
        for twice in [[1, 0, 0, 1], [2, 1, 1, 2], [1, 2, 0, 3]] {
            let sum = SpinSum::from_twice(twice);
            let a = closed_form_vectors(sum, &t12_only()).unwrap();
            let lambdas = LambdaParams::new(RadicalScalar::one(), RadicalScalar::zero());
            let b = lyubarskii_vectors(sum, &lambdas, CouplingOrientation::Printed).unwrap();
            let r = equivalence_ratio(&a, &b).unwrap();
            assert!(equivalence_ratio(&a, &lyubarskii_vectors(sum, &LambdaParams::ones(), CouplingOrientation::Printed).unwrap()).is_err());
            // √(2B+2)
            assert_eq!(r.ratio12, Some(RadicalScalar::sqrt(sum.b().twice() as u64 + 2)), "{sum}");
        }
    }

    #[test]
    fn identical_sets_have_unit_ratio() {
        let v = closed_form_vectors(SpinSum::from_twice([2, 1, 1, 0]), &FreeParams::ones()).unwrap();
        let r = equivalence_ratio(&v, &v).unwrap();
        assert_eq!(r.ratio12, Some(RadicalScalar::one()));
        assert_eq!(r.ratio21, Some(RadicalScalar::one()));
    }

    #[test]
    fn corrupted_entry_is_named() {
        let sum = SpinSum::from_twice([2, 1, 1, 0]);
        let v = closed_form_vectors(sum, &FreeParams::ones()).unwrap();
        let mut w = v.clone();
        let n1 = sum.first.dimension();
        let (r, c, _) = w.block21(2).first_nonzero().map(|(r, c, x)| (r, c, x.clone())).unwrap();
        w.components[2][(n1 + r, c)] += RadicalScalar::from_integer(1);
        let m = equivalence_ratio(&v, &w).unwrap_err();
        assert_eq!((m.block, m.component, m.row, m.col), (OffDiagonal::B21, 2, n1 + r, c));
    }

    #[test]
    fn weight_table_reading() {
        let bar = BarVTable::printed();
        let (p, m) = (HalfInt::HALF, -HalfInt::HALF);
        // V̄_t is -1 on the diagonal; the phase flips m = -1/2
        assert_eq!(bar_weight(&bar, 3, p, m), RadicalScalar::from_integer(-1));
        assert_eq!(bar_weight(&bar, 3, m, p), RadicalScalar::one());
        assert!(bar_weight(&bar, 3, p, p).is_zero());
        assert_eq!(bar_weight(&bar, 0, p, p), RadicalScalar::one());
    }
}
