//! Exact scalars of the form `Σ_d (p_d + i q_d)·√d`.
//!
//! Every radicand key is squarefree and the purely rational part lives under
//! the key `1`. Since square roots of distinct squarefree integers are
//! linearly independent over the rationals, two canonical values are equal
//! exactly when their term maps are equal, and `is_zero` is a map emptiness
//! test.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Coefficient of a single radical term.
pub type GaussianRational = Complex<Rational>;

/// Splits `n` into `outside² · core` with `core` squarefree.
///
/// `0` maps to `(0, 1)`.
pub fn normalize_radical(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 1);
    }
    let mut rest = n;
    let mut outside = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut exp = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            exp += 1;
        }
        outside *= p.pow(exp / 2);
        if exp % 2 == 1 {
            core *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever survives trial division is a prime appearing once
    core *= rest;
    (outside, core)
}

/// Principal square root of a nonnegative rational.
///
/// `p/q` is represented as `(1/q)·√(p·q)` after extracting square factors.
pub fn sqrt_of_rational(x: &Rational) -> Result<RadicalScalar, Error> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand(x.clone()));
    }
    if x.is_zero() {
        return Ok(RadicalScalar::zero());
    }
    let (p_out, p_core) = normalize_big(x.numer())?;
    let (q_out, q_core) = normalize_big(x.denom())?;
    // √(p/q) = p_out√p_core / (q_out√q_core) = p_out/(q_out·q_core) · √(p_core·q_core)
    let radicand = p_core
        .checked_mul(q_core)
        .ok_or_else(|| Error::RadicandOverflow(x.clone()))?;
    let coeff = Rational::new(p_out, q_out * BigInt::from(q_core));
    Ok(RadicalScalar::term(GaussianRational::new(coeff, Rational::zero()), radicand))
}

fn normalize_big(n: &BigInt) -> Result<(BigInt, u64), Error> {
    let small = n
        .to_u64()
        .ok_or_else(|| Error::RadicandOverflow(Rational::from_integer(n.clone())))?;
    let (outside, core) = normalize_radical(small);
    Ok((BigInt::from(outside), core))
}

fn gaussian_is_zero(c: &GaussianRational) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

/// Exact number `Σ_d (p_d + i q_d)·√d` over squarefree radicands `d ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, GaussianRational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::term(GaussianRational::new(Rational::zero(), Rational::one()), 1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::term(GaussianRational::new(r, Rational::zero()), 1)
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Self::term(c, 1)
    }

    /// `num/den` as an exact scalar. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√n` for a nonnegative integer.
    pub fn sqrt(n: u64) -> Self {
        Self::term(GaussianRational::new(Rational::one(), Rational::zero()), n)
    }

    /// `coeff · √n`, normalizing the radicand.
    pub fn term(coeff: GaussianRational, n: u64) -> Self {
        let mut out = Self::zero();
        let (outside, core) = normalize_radical(n);
        if outside == 0 {
            return out;
        }
        let scale = Rational::from_integer(BigInt::from(outside));
        out.add_term(core, scale_gaussian(&coeff, &scale));
        out
    }

    fn add_term(&mut self, radicand: u64, coeff: GaussianRational) {
        if gaussian_is_zero(&coeff) {
            return;
        }
        let remove = {
            let slot = self.terms.entry(radicand).or_insert_with(GaussianRational::zero);
            *slot = &*slot + coeff;
            gaussian_is_zero(slot)
        };
        if remove {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Terms in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The value as a rational, if it has no radical and no imaginary part.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (d, c) = self.terms.iter().next()?;
                (*d == 1 && c.im.is_zero()).then_some(&c.re)
            }
            _ => None,
        }
    }

    /// Rational value including zero; `None` if any radical or imaginary part.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_rational().cloned()
    }

    /// The single term `(radicand, coefficient)` when there is exactly one.
    pub fn as_single_term(&self) -> Option<(u64, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(d, c)| (*d, c))
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (*d, GaussianRational::new(c.re.clone(), -c.im.clone())))
            .collect();
        Self { terms }
    }

    /// Multiplication by the imaginary unit.
    pub fn mul_i(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (*d, GaussianRational::new(-c.im.clone(), c.re.clone())))
            .collect();
        Self { terms }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (*d, scale_gaussian(c, r)))
            .collect();
        Self { terms }
    }

    /// Division by a nonzero rational.
    pub fn div_rational(&self, r: &Rational) -> Option<Self> {
        if r.is_zero() {
            None
        } else {
            Some(self.scale(&r.recip()))
        }
    }

    /// Division by a nonzero single-term value `c·√d`.
    ///
    /// Returns `None` for a zero divisor or one with more than one term;
    /// general field inversion is not provided.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let (d, c) = rhs.as_single_term()?;
        // x / (c√d) = x · conj(c) · √d / (|c|² · d)
        let norm = &c.re * &c.re + &c.im * &c.im;
        let denom = norm * Rational::from_integer(BigInt::from(d));
        let inv = Self::term(c.conj(), d).div_rational(&denom)?;
        Some(self * &inv)
    }

    pub fn to_complex64(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (d, c) in &self.terms {
            let root = libm::sqrt(*d as f64);
            let re = c.re.to_f64().unwrap_or(f64::NAN);
            let im = c.im.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::new(re * root, im * root);
        }
        acc
    }
}

fn scale_gaussian(c: &GaussianRational, r: &Rational) -> GaussianRational {
    GaussianRational::new(&c.re * r, &c.im * r)
}

fn mul_gaussian(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    GaussianRational::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
}

/// `num / den` for a divisor with at most two radical terms.
pub(crate) fn exact_quotient(num: &RadicalScalar, den: &RadicalScalar) -> Option<RadicalScalar> {
    if let Some(q) = num.checked_div(den) {
        return Some(q);
    }
    let mut terms = den.terms();
    let (d1, c1) = terms.next()?;
    let (d2, c2) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    // (α√p + β√q)(α√p - β√q) = α²p - β²q
    let conjugate = RadicalScalar::term(c1.clone(), d1) - RadicalScalar::term(c2.clone(), d2);
    let norm = den * &conjugate;
    (num * &conjugate).checked_div(&norm)
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &'a RadicalScalar) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, c.clone());
        }
    }
}

impl<'a> Sub<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &'a RadicalScalar) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, -c.clone());
        }
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        let terms = self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect();
        RadicalScalar { terms }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl<'a> Mul<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                // d1 = g·x and d2 = g·y squarefree, so x·y is squarefree and
                // √d1·√d2 = g·√(x·y)
                let g = d1.gcd(d2);
                let core = (d1 / g)
                    .checked_mul(d2 / g)
                    .expect("radicand product exceeds u64");
                let coeff = mul_gaussian(c1, c2);
                let coeff = scale_gaussian(&coeff, &Rational::from_integer(BigInt::from(g)));
                out.add_term(core, coeff);
            }
        }
        out
    }
}

impl<'a> MulAssign<&'a RadicalScalar> for RadicalScalar {
    fn mul_assign(&mut self, rhs: &'a RadicalScalar) {
        *self = &*self * rhs;
    }
}

impl<'a> Div<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    /// Panics unless the divisor is a nonzero single term; see
    /// [`RadicalScalar::checked_div`].
    fn div(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        self.checked_div(rhs)
            .expect("division by zero or by a multi-term radical")
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait<RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: &'a RadicalScalar) -> RadicalScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<RadicalScalar> for &RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: RadicalScalar) {
        *self += &rhs;
    }
}

impl SubAssign<RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: RadicalScalar) {
        *self -= &rhs;
    }
}

impl core::iter::Sum for RadicalScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

// Display: terms like `(1/2)√2`, `i√3`, `-3/2`, `(1+2i)√5`, joined by ` + `/` - `.
// The output parses back through `FromStr`.

fn rational_text(r: &Rational) -> String {
    alloc::format!("{}", r)
}

fn coefficient_text(c: &GaussianRational, followed: bool) -> String {
    let wrap = |r: &Rational| {
        if r.is_integer() {
            rational_text(r)
        } else {
            alloc::format!("({})", r)
        }
    };
    if c.im.is_zero() {
        if followed {
            if c.re.is_one() {
                String::new()
            } else if (-&c.re).is_one() {
                String::from("-")
            } else if c.re.is_integer() {
                rational_text(&c.re)
            } else if c.re.is_negative() {
                alloc::format!("-({})", -&c.re)
            } else {
                alloc::format!("({})", c.re)
            }
        } else {
            rational_text(&c.re)
        }
    } else if c.re.is_zero() {
        let q = &c.im;
        if q.is_one() {
            String::from("i")
        } else if (-q).is_one() {
            String::from("-i")
        } else if q.is_negative() {
            alloc::format!("-{}i", wrap(&-q))
        } else {
            alloc::format!("{}i", wrap(q))
        }
    } else {
        let im = &c.im;
        let sign = if im.is_negative() { '-' } else { '+' };
        let mag = im.abs();
        let im_text = if mag.is_one() {
            String::from("i")
        } else {
            alloc::format!("{}i", wrap(&mag))
        };
        alloc::format!("({}{}{})", rational_text(&c.re), sign, im_text)
    }
}

fn term_text(d: u64, c: &GaussianRational) -> String {
    if d == 1 {
        coefficient_text(c, false)
    } else {
        alloc::format!("{}√{}", coefficient_text(c, true), d)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            let text = term_text(*d, c);
            if k == 0 {
                f.write_str(&text)?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", text)?;
            }
        }
        Ok(())
    }
}
