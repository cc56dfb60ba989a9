//! Half-integers, spins and the basis ordering used for every matrix.
//!
//! Basis order: the projection `a` runs from `A` down to `-A` (outer index)
//! and `b` from `B` down to `-B` (inner index). In a direct sum the `(A,B)`
//! block precedes the `(C,D)` block.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::error::Error;
use crate::radical::Rational;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(2))
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A nonnegative half-integer spin.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);
    pub const HALF: Spin = Spin(1);
    pub const ONE: Spin = Spin(2);

    pub const fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    /// `2A + 1`.
    pub const fn multiplicity(self) -> usize {
        self.0 as usize + 1
    }

    pub fn as_half_int(self) -> HalfInt {
        HalfInt(self.0 as i32)
    }

    pub fn to_rational(self) -> Rational {
        self.as_half_int().to_rational()
    }

    /// Whether `m` is one of `-A, -A+1, ..., A`.
    pub fn contains(self, m: HalfInt) -> bool {
        let a = self.0 as i32;
        m.0.abs() <= a && (a - m.0) % 2 == 0
    }

    /// Projections `A, A-1, ..., -A` in basis order.
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let a = self.0 as i32;
        (0..=self.0 as i32).map(move |k| HalfInt(a - 2 * k))
    }

    /// Row of projection `m` in the descending basis.
    pub fn position(self, m: HalfInt) -> Result<usize, Error> {
        if self.contains(m) {
            Ok(((self.0 as i32 - m.0) / 2) as usize)
        } else {
            Err(Error::IndexOutOfRange {
                spin_twice: self.0,
                index: m,
            })
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_half_int().fmt(f)
    }
}

/// Label `(A,B)` of an irreducible Lorentz representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinPair {
    pub left: Spin,
    pub right: Spin,
}

impl SpinPair {
    pub const fn new(left: Spin, right: Spin) -> Self {
        SpinPair { left, right }
    }

    pub const fn from_twice(left: u32, right: u32) -> Self {
        SpinPair::new(Spin::from_twice(left), Spin::from_twice(right))
    }

    /// `(2A+1)(2B+1)`.
    pub const fn dimension(self) -> usize {
        self.left.multiplicity() * self.right.multiplicity()
    }

    /// All `(a, b)` in basis order.
    pub fn basis(self) -> Vec<(HalfInt, HalfInt)> {
        self.left
            .projections()
            .flat_map(|a| self.right.projections().map(move |b| (a, b)))
            .collect()
    }

    /// Row-major index of `(a, b)`.
    pub fn flatten_index(self, a: HalfInt, b: HalfInt) -> Result<usize, Error> {
        let outer = self.left.position(a)?;
        let inner = self.right.position(b)?;
        Ok(outer * self.right.multiplicity() + inner)
    }
}

impl fmt::Display for SpinPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// Row-major index of `(a, b)` in the `(A,B)` basis.
pub fn flatten_index(pair: SpinPair, a: HalfInt, b: HalfInt) -> Result<usize, Error> {
    pair.flatten_index(a, b)
}

/// The reducible representation `(A,B) ⊕ (C,D)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinSum {
    pub first: SpinPair,
    pub second: SpinPair,
}

impl SpinSum {
    pub const fn new(first: SpinPair, second: SpinPair) -> Self {
        SpinSum { first, second }
    }

    /// From doubled spins `[2A, 2B, 2C, 2D]`.
    pub const fn from_twice(t: [u32; 4]) -> Self {
        SpinSum::new(SpinPair::from_twice(t[0], t[1]), SpinPair::from_twice(t[2], t[3]))
    }

    pub const fn twice(self) -> [u32; 4] {
        [
            self.first.left.twice(),
            self.first.right.twice(),
            self.second.left.twice(),
            self.second.right.twice(),
        ]
    }

    pub fn a(self) -> Spin {
        self.first.left
    }
    pub fn b(self) -> Spin {
        self.first.right
    }
    pub fn c(self) -> Spin {
        self.second.left
    }
    pub fn d(self) -> Spin {
        self.second.right
    }

    pub const fn dimension(self) -> usize {
        self.first.dimension() + self.second.dimension()
    }

    /// `(C,D) ⊕ (A,B)`.
    pub const fn swapped(self) -> Self {
        SpinSum::new(self.second, self.first)
    }

    /// Human-readable description of why `A = C ± 1/2, B = D ± 1/2` fails,
    /// or an empty string when it holds.
    pub fn selection_rule_violation(self) -> alloc::string::String {
        let da = self.a().twice() as i64 - self.c().twice() as i64;
        let db = self.b().twice() as i64 - self.d().twice() as i64;
        let describe = |name: &str, diff: i64| {
            alloc::format!("{name} = {}", HalfInt::from_twice(diff as i32))
        };
        let mut parts = Vec::new();
        if da.abs() != 1 {
            parts.push(describe("A - C", da));
        }
        if db.abs() != 1 {
            parts.push(describe("B - D", db));
        }
        parts.join(", ")
    }

    /// Every quadruple with doubled spins in `0..=bound`, in lexicographic order.
    pub fn all_up_to(bound: u32) -> impl Iterator<Item = SpinSum> {
        let r = 0..=bound;
        r.clone().flat_map(move |a| {
            let r = 0..=bound;
            r.clone().flat_map(move |b| {
                let r = 0..=bound;
                r.clone().flat_map(move |c| {
                    (0..=bound).map(move |d| SpinSum::from_twice([a, b, c, d]))
                })
            })
        })
    }
}

impl fmt::Display for SpinSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊕{}", self.first, self.second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn flatten_examples() {
        let p = SpinPair::from_twice(1, 1);
        assert_eq!(p.flatten_index(h(1), h(1)).unwrap(), 0);
        assert_eq!(p.flatten_index(h(-1), h(1)).unwrap(), 2);
        let q = SpinPair::from_twice(2, 1);
        assert_eq!(q.flatten_index(h(0), h(-1)).unwrap(), 3);
        assert!(q.flatten_index(h(1), h(1)).is_err());
        assert!(q.flatten_index(h(4), h(1)).is_err());
    }

    #[test]
    fn flatten_is_a_bijection_onto_basis_order() {
        for a in 0..5 {
            for b in 0..5 {
                let p = SpinPair::from_twice(a, b);
                let basis = p.basis();
                assert_eq!(basis.len(), p.dimension());
                for (k, (x, y)) in basis.iter().enumerate() {
                    assert_eq!(p.flatten_index(*x, *y).unwrap(), k);
                }
            }
        }
    }

    #[test]
    fn projections_descend() {
        let v: Vec<_> = Spin::from_twice(3).projections().map(|m| m.twice()).collect();
        assert_eq!(v, [3, 1, -1, -3]);
        assert_eq!(Spin::ZERO.projections().count(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", h(-3)), "-3/2");
        assert_eq!(alloc::format!("{}", SpinSum::from_twice([1, 1, 0, 2])), "(1/2,1/2)⊕(0,1)");
    }
}
