//! Vector matrices from the ladder recursion relations.
//!
//! Within an off-diagonal block with row spins `(X,Y)` and column spins
//! `(Z,W)`, `V+` carries coefficients `t_ab` at column `(a-½, b-½)` and `V-`
//! carries `u_ab` at column `(a+½, b+½)`. Commuting `J±` with `V±` gives
//!
//! ```text
//! r^X_{a-1} t_{a-1,b} = r^Z_{a-3/2} t_{ab}      r^Y_{b-1} t_{a,b-1} = r^W_{b-3/2} t_{ab}
//! s^X_{a+1} u_{a+1,b} = s^Z_{a+3/2} u_{ab}      s^Y_{b+1} u_{a,b+1} = s^W_{b+3/2} u_{ab}
//! ```
//!
//! and `[J+,V-] = -[J-,V+]` ties the scale of `u` to `t`. The `t` are fixed
//! by the anchor `t_{X,Y}`, the `u` up to a scale by `u_{-X,-Y}`, and that
//! scale is read off the mixed relation and then checked everywhere.

use alloc::collections::BTreeMap;
use alloc::format;

use crate::error::Error;
use crate::generators::{ladder_coeff_r as r, ladder_coeff_s as s};
use crate::matrix::DenseMatrix;
use crate::radical::{exact_quotient, RadicalScalar};
use crate::spin::{HalfInt, Spin, SpinPair, SpinSum};

use super::closed_form::cartesian;
use super::{require_case, CaseTag, FreeParams, VectorSet};

const HALF: HalfInt = HalfInt::HALF;
const ONE: HalfInt = HalfInt::from_twice(2);
const THREE_HALVES: HalfInt = HalfInt::from_twice(3);

type Index2 = (HalfInt, HalfInt);

/// `t` and `u` coefficients of one off-diagonal block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCoefficients {
    pub rows: SpinPair,
    pub cols: SpinPair,
    pub t: BTreeMap<Index2, RadicalScalar>,
    pub u: BTreeMap<Index2, RadicalScalar>,
}

/// Coefficients of both off-diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TUCoefficients {
    pub sum: SpinSum,
    pub case: CaseTag,
    pub params: FreeParams,
    /// Rows `(A,B)`, columns `(C,D)`.
    pub block12: BlockCoefficients,
    /// Rows `(C,D)`, columns `(A,B)`.
    pub block21: BlockCoefficients,
}

/// Inclusive range of `x` with `|x| ≤ row` and `|x - shift| ≤ col`.
fn range(row: Spin, col: Spin, shift: HalfInt) -> (HalfInt, HalfInt) {
    let row = row.as_half_int();
    let col = col.as_half_int();
    let lo = core::cmp::max(-row, -col + shift);
    let hi = core::cmp::min(row, col + shift);
    (lo, hi)
}

fn steps(lo: HalfInt, hi: HalfInt) -> impl DoubleEndedIterator<Item = HalfInt> {
    let n = if hi < lo { 0 } else { (hi - lo).twice() / 2 + 1 };
    (0..n).map(move |k| lo + HalfInt::from_twice(2 * k))
}

impl BlockCoefficients {
    fn t_at(&self, a: HalfInt, b: HalfInt) -> RadicalScalar {
        self.t.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn u_at(&self, a: HalfInt, b: HalfInt) -> RadicalScalar {
        self.u.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn zero(rows: SpinPair, cols: SpinPair) -> Self {
        BlockCoefficients {
            rows,
            cols,
            t: BTreeMap::new(),
            u: BTreeMap::new(),
        }
    }

    /// Solves one block with anchor `t_{X,Y} = anchor`.
    fn solve(rows: SpinPair, cols: SpinPair, anchor: &RadicalScalar) -> Result<Self, Error> {
        let mut out = Self::zero(rows, cols);
        if anchor.is_zero() {
            return Ok(out);
        }
        let (x, y, z, w) = (rows.left, rows.right, cols.left, cols.right);
        let (ta_lo, ta_hi) = range(x, z, HALF);
        let (tb_lo, tb_hi) = range(y, w, HALF);
        let (ua_lo, ua_hi) = range(x, z, -HALF);
        let (ub_lo, ub_hi) = range(y, w, -HALF);
        let (top_a, top_b) = (x.as_half_int(), y.as_half_int());
        if ta_hi != top_a || tb_hi != top_b || ua_lo != -top_a || ub_lo != -top_b {
            return Err(Error::InconsistentRecursion(format!(
                "anchors outside the coefficient ranges for rows {rows}, columns {cols}"
            )));
        }

        out.t.insert((top_a, top_b), anchor.clone());
        for a in steps(ta_lo + ONE, ta_hi).rev() {
            let next = &(&r(z, a - THREE_HALVES) * &out.t_at(a, top_b)) / &r(x, a - ONE);
            out.t.insert((a - ONE, top_b), next);
        }
        for a in steps(ta_lo, ta_hi) {
            for b in steps(tb_lo + ONE, tb_hi).rev() {
                let next = &(&r(w, b - THREE_HALVES) * &out.t_at(a, b)) / &r(y, b - ONE);
                out.t.insert((a, b - ONE), next);
            }
        }

        // u with unit anchor, rescaled below
        let mut unit = BTreeMap::new();
        unit.insert((-top_a, -top_b), RadicalScalar::one());
        for a in steps(ua_lo, ua_hi - ONE) {
            let prev: RadicalScalar = unit[&(a, -top_b)].clone();
            unit.insert((a + ONE, -top_b), &(&s(z, a + THREE_HALVES) * &prev) / &s(x, a + ONE));
        }
        for a in steps(ua_lo, ua_hi) {
            for b in steps(ub_lo, ub_hi - ONE) {
                let prev: RadicalScalar = unit[&(a, b)].clone();
                unit.insert((a, b + ONE), &(&s(w, b + THREE_HALVES) * &prev) / &s(y, b + ONE));
            }
        }
        out.u = unit;

        let scale = out.u_scale()?;
        for v in out.u.values_mut() {
            *v = &*v * &scale;
        }
        out.check()?;
        Ok(out)
    }

    /// `(U, T)` of the first mixed relation at row `(a,b)`, column `(a-½, b+½)`:
    /// `U = r^X_{a-1} u_{a-1,b} - r^Z_c u_ab`, `T = s^Y_{b+1} t_{a,b+1} - s^W_d t_ab`.
    fn mixed1(&self, a: HalfInt, b: HalfInt) -> (RadicalScalar, RadicalScalar) {
        let (x, y, z, w) = (self.rows.left, self.rows.right, self.cols.left, self.cols.right);
        let (c, d) = (a - HALF, b + HALF);
        let u = &r(x, a - ONE) * &self.u_at(a - ONE, b) - &r(z, c) * &self.u_at(a, b);
        let t = &s(y, b + ONE) * &self.t_at(a, b + ONE) - &s(w, d) * &self.t_at(a, b);
        (u, t)
    }

    /// Same for the second mixed relation at column `(a+½, b-½)`.
    fn mixed2(&self, a: HalfInt, b: HalfInt) -> (RadicalScalar, RadicalScalar) {
        let (x, y, z, w) = (self.rows.left, self.rows.right, self.cols.left, self.cols.right);
        let (c, d) = (a + HALF, b - HALF);
        let u = &r(y, b - ONE) * &self.u_at(a, b - ONE) - &r(w, d) * &self.u_at(a, b);
        let t = &s(x, a + ONE) * &self.t_at(a + ONE, b) - &s(z, c) * &self.t_at(a, b);
        (u, t)
    }

    fn positions(&self, da: HalfInt, db: HalfInt) -> impl Iterator<Item = Index2> + '_ {
        self.rows.basis().into_iter().filter(move |&(a, b)| {
            self.cols.left.contains(a + da) && self.cols.right.contains(b + db)
        })
    }

    fn u_scale(&self) -> Result<RadicalScalar, Error> {
        for (a, b) in self.positions(-HALF, HALF) {
            let (u, t) = self.mixed1(a, b);
            if !u.is_zero() {
                return exact_quotient(&-t, &u).ok_or_else(|| {
                    Error::InconsistentRecursion(format!("cannot divide by {u} at ({a},{b})"))
                });
            }
        }
        for (a, b) in self.positions(HALF, -HALF) {
            let (u, t) = self.mixed2(a, b);
            if !u.is_zero() {
                return exact_quotient(&-t, &u).ok_or_else(|| {
                    Error::InconsistentRecursion(format!("cannot divide by {u} at ({a},{b})"))
                });
            }
        }
        Err(Error::InconsistentRecursion(format!(
            "no mixed relation fixes the u scale for rows {}, columns {}",
            self.rows, self.cols
        )))
    }

    /// Every recursion and mixed relation holds exactly.
    fn check(&self) -> Result<(), Error> {
        let (x, y, z, w) = (self.rows.left, self.rows.right, self.cols.left, self.cols.right);
        let fail = |name: &str, a: HalfInt, b: HalfInt, value: RadicalScalar| {
            Err(Error::InconsistentRecursion(format!(
                "{name} relation at ({a},{b}) leaves residual {value}"
            )))
        };
        for (a, b) in self.positions(-THREE_HALVES, -HALF) {
            let v = &r(x, a - ONE) * &self.t_at(a - ONE, b) - &r(z, a - THREE_HALVES) * &self.t_at(a, b);
            if !v.is_zero() {
                return fail("t a-ladder", a, b, v);
            }
        }
        for (a, b) in self.positions(-HALF, -THREE_HALVES) {
            let v = &r(y, b - ONE) * &self.t_at(a, b - ONE) - &r(w, b - THREE_HALVES) * &self.t_at(a, b);
            if !v.is_zero() {
                return fail("t b-ladder", a, b, v);
            }
        }
        for (a, b) in self.positions(THREE_HALVES, HALF) {
            let v = &s(x, a + ONE) * &self.u_at(a + ONE, b) - &s(z, a + THREE_HALVES) * &self.u_at(a, b);
            if !v.is_zero() {
                return fail("u a-ladder", a, b, v);
            }
        }
        for (a, b) in self.positions(HALF, THREE_HALVES) {
            let v = &s(y, b + ONE) * &self.u_at(a, b + ONE) - &s(w, b + THREE_HALVES) * &self.u_at(a, b);
            if !v.is_zero() {
                return fail("u b-ladder", a, b, v);
            }
        }
        for (a, b) in self.positions(-HALF, HALF) {
            let (u, t) = self.mixed1(a, b);
            let v = u + t;
            if !v.is_zero() {
                return fail("first mixed", a, b, v);
            }
        }
        for (a, b) in self.positions(HALF, -HALF) {
            let (u, t) = self.mixed2(a, b);
            let v = u + t;
            if !v.is_zero() {
                return fail("second mixed", a, b, v);
            }
        }
        Ok(())
    }

    /// `[V+, V-, ½(Vz+Vt), ½(Vz-Vt)]` of this block.
    fn family_blocks(&self) -> [DenseMatrix; 4] {
        let (x, y, z, w) = (self.rows.left, self.rows.right, self.cols.left, self.cols.right);
        let (nr, nc) = (self.rows.dimension(), self.cols.dimension());
        let mut out: [DenseMatrix; 4] = core::array::from_fn(|_| DenseMatrix::zeros(nr, nc));
        let mut place = |slot: usize, row: Index2, col: Index2, value: RadicalScalar| {
            if value.is_zero() {
                return;
            }
            let ri = self.rows.flatten_index(row.0, row.1);
            let ci = self.cols.flatten_index(col.0, col.1);
            if let (Ok(ri), Ok(ci)) = (ri, ci) {
                out[slot][(ri, ci)] = value;
            }
        };
        for (&(a, b), t) in &self.t {
            place(0, (a, b), (a - HALF, b - HALF), t.clone());
        }
        for (&(a, b), u) in &self.u {
            place(1, (a, b), (a + HALF, b + HALF), u.clone());
        }
        for (a, b) in self.rows.basis() {
            let (c, d) = (a - HALF, b + HALF);
            if z.contains(c) && w.contains(d) {
                let v = &r(x, a - ONE) * &self.u_at(a - ONE, b) - &r(z, c) * &self.u_at(a, b);
                place(2, (a, b), (c, d), v);
            }
            let (c, d) = (a + HALF, b - HALF);
            if z.contains(c) && w.contains(d) {
                let v = &r(y, b - ONE) * &self.u_at(a, b - ONE) - &r(w, d) * &self.u_at(a, b);
                place(3, (a, b), (c, d), v);
            }
        }
        out
    }
}

/// Solves both blocks, anchored at `t12_{A,B}` and `t21_{C,D}`.
pub fn recursion_solve(sum: SpinSum, params: &FreeParams) -> Result<TUCoefficients, Error> {
    let case = require_case(sum)?;
    Ok(TUCoefficients {
        sum,
        case,
        params: params.clone(),
        block12: BlockCoefficients::solve(sum.first, sum.second, &params.t12)?,
        block21: BlockCoefficients::solve(sum.second, sum.first, &params.t21)?,
    })
}

/// Places the coefficients and assembles the Cartesian components.
pub fn vectors_from_coefficients(coeffs: &TUCoefficients) -> VectorSet {
    VectorSet::from_blocks(
        coeffs.sum,
        coeffs.case,
        coeffs.params.clone(),
        cartesian(coeffs.block12.family_blocks()),
        cartesian(coeffs.block21.family_blocks()),
    )
}
