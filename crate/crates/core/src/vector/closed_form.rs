//! Closed-form vector matrices for the four admissible cases.
//!
//! Each nonzero entry is `sign · √(radicand) · t`. The 12-block has rows
//! `(a,b)` of `(A,B)` and columns `(c,d)` of `(C,D)`; the 21-block the
//! reverse. Within a block four families occupy disjoint positions:
//!
//! | family        | 12-block position         | 21-block position         |
//! |---------------|---------------------------|---------------------------|
//! | `V+`          | `a = c + ½, b = d + ½`    | `c = a + ½, d = b + ½`    |
//! | `V-`          | `a = c - ½, b = d - ½`    | `c = a - ½, d = b - ½`    |
//! | `½(Vz + Vt)`  | `a = c + ½, b = d - ½`    | `c = a + ½, d = b - ½`    |
//! | `½(Vz - Vt)`  | `a = c - ½, b = d + ½`    | `c = a - ½, d = b + ½`    |

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::matrix::DenseMatrix;
use crate::radical::{sqrt_of_rational, RadicalScalar, Rational};
use crate::spin::SpinSum;

use super::{require_case, CaseTag, FreeParams, VectorSet};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    /// `V+` for `s = +1`, `V-` for `s = -1`.
    Ladder,
    /// `½(Vz + Vt)` for `s = +1`, `½(Vz - Vt)` for `s = -1`.
    Light,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    B12,
    B21,
}

/// Spin values and projections as rationals.
struct Labels {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    big_a: Rational,
    big_b: Rational,
    big_c: Rational,
    big_d: Rational,
}

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(sign, radicand)` of one table entry.
fn entry(case: CaseTag, block: Block, family: Family, s: i64, l: &Labels) -> (i64, Rational) {
    let s_r = r(s);
    let two = r(2);
    // (X + s x) and (X - s x)
    let p = |big: &Rational, small: &Rational| big + &s_r * small;
    let m = |big: &Rational, small: &Rational| big - &s_r * small;
    let over = |x: Rational, big: &Rational| x / (&two * big);
    let (a, b, c, d) = (&l.a, &l.b, &l.c, &l.d);
    let (ba, bb, bc, bd) = (&l.big_a, &l.big_b, &l.big_c, &l.big_d);
    use Block::*;
    use CaseTag::*;
    use Family::*;
    match (case, block, family) {
        (Case1, B12, Ladder) => (s, over(p(ba, a), ba) * over(p(bb, b), bb)),
        (Case1, B12, Light) => (-1, over(p(ba, a), ba) * over(m(bb, b), bb)),
        (Case1, B21, Ladder) => (s, m(ba, a) * m(bb, b)),
        (Case1, B21, Light) => (1, m(ba, a) * p(bb, b)),

        (Case2, B12, Ladder) => (1, over(p(ba, a), ba) * m(bd, d)),
        (Case2, B12, Light) => (s, over(p(ba, a), ba) * p(bd, d)),
        (Case2, B21, Ladder) => (1, m(ba, a) * over(p(bd, d), bd)),
        (Case2, B21, Light) => (-s, m(ba, a) * over(m(bd, d), bd)),

        (Case3, B12, Ladder) => (1, m(bc, c) * over(p(bb, b), bb)),
        (Case3, B12, Light) => (-s, m(bc, c) * over(m(bb, b), bb)),
        (Case3, B21, Ladder) => (1, over(p(bc, c), bc) * m(bb, b)),
        (Case3, B21, Light) => (s, over(p(bc, c), bc) * p(bb, b)),

        (Case4, B12, Ladder) => (s, m(bc, c) * m(bd, d)),
        (Case4, B12, Light) => (1, m(bc, c) * p(bd, d)),
        (Case4, B21, Ladder) => (s, over(p(bc, c), bc) * over(p(bd, d), bd)),
        (Case4, B21, Light) => (-1, over(p(bc, c), bc) * over(m(bd, d), bd)),

        (NoSolution, _, _) => (0, Rational::zero()),
    }
}

/// Which family and sign sit at a block position, from the projection
/// differences `(row - col)` in each slot.
fn classify_position(drow_left: i32, drow_right: i32) -> Option<(Family, i64)> {
    match (drow_left, drow_right) {
        (1, 1) => Some((Family::Ladder, 1)),
        (-1, -1) => Some((Family::Ladder, -1)),
        (1, -1) => Some((Family::Light, 1)),
        (-1, 1) => Some((Family::Light, -1)),
        _ => None,
    }
}

/// The four family blocks `[V+, V-, ½(Vz+Vt), ½(Vz-Vt)]` of one off-diagonal block.
fn family_blocks(sum: SpinSum, case: CaseTag, block: Block, t: &RadicalScalar) -> [DenseMatrix; 4] {
    let (rows, cols) = match block {
        Block::B12 => (sum.first, sum.second),
        Block::B21 => (sum.second, sum.first),
    };
    let mut out: [DenseMatrix; 4] =
        core::array::from_fn(|_| DenseMatrix::zeros(rows.dimension(), cols.dimension()));
    if t.is_zero() {
        return out;
    }
    let spins = [sum.a(), sum.b(), sum.c(), sum.d()].map(|x| x.to_rational());
    for (ri, (x, y)) in rows.basis().into_iter().enumerate() {
        for (ci, (z, w)) in cols.basis().into_iter().enumerate() {
            let Some((family, s)) = classify_position((x - z).twice(), (y - w).twice()) else {
                continue;
            };
            let ((a, b), (c, d)) = match block {
                Block::B12 => ((x, y), (z, w)),
                Block::B21 => ((z, w), (x, y)),
            };
            let labels = Labels {
                a: a.to_rational(),
                b: b.to_rational(),
                c: c.to_rational(),
                d: d.to_rational(),
                big_a: spins[0].clone(),
                big_b: spins[1].clone(),
                big_c: spins[2].clone(),
                big_d: spins[3].clone(),
            };
            let (sign, radicand) = entry(case, block, family, s, &labels);
            if radicand.is_zero() {
                continue;
            }
            let root = sqrt_of_rational(&radicand).expect("table radicands are nonnegative");
            let value = root.scale(&r(sign)) * t;
            let slot = match (family, s) {
                (Family::Ladder, 1) => 0,
                (Family::Ladder, _) => 1,
                (Family::Light, 1) => 2,
                (Family::Light, _) => 3,
            };
            out[slot][(ri, ci)] = value;
        }
    }
    out
}

/// `[Vx, Vy, Vz, Vt]` from `[V+, V-, ½(Vz+Vt), ½(Vz-Vt)]`.
pub(crate) fn cartesian(f: [DenseMatrix; 4]) -> [DenseMatrix; 4] {
    let [plus, minus, zp, zm] = f;
    let vx = plus.try_add(&minus).expect("same shape");
    let vy = plus.try_sub(&minus).expect("same shape").mul_i().neg();
    let vz = zp.try_add(&zm).expect("same shape");
    let vt = zp.try_sub(&zm).expect("same shape");
    [vx, vy, vz, vt]
}

/// Vector matrices from the closed-form tables.
pub fn closed_form_vectors(sum: SpinSum, params: &FreeParams) -> Result<VectorSet, Error> {
    let case = require_case(sum)?;
    let b12 = cartesian(family_blocks(sum, case, Block::B12, &params.t12));
    let b21 = cartesian(family_blocks(sum, case, Block::B21, &params.t21));
    Ok(VectorSet::from_blocks(sum, case, params.clone(), b12, b21))
}
