//! Exact Clebsch-Gordan coefficients in the Condon-Shortley convention.
//!
//! The stretched state `|J, J⟩` is fixed by `J+ |J, J⟩ = 0` and the sign
//! rule `⟨j1 j1, j2 J-j1 | J J⟩ > 0`; lower states follow from
//! `|J, M-1⟩ = J- |J, M⟩ / s^J_M`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::generators::{ladder_coeff_r, ladder_coeff_s};
use crate::radical::{sqrt_of_rational, RadicalScalar, Rational};
use crate::spin::{HalfInt, Spin};

/// Arguments of `⟨j1 m1, j2 m2 | J M⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CgKey {
    pub j1: Spin,
    pub m1: HalfInt,
    pub j2: Spin,
    pub m2: HalfInt,
    pub j: Spin,
    pub m: HalfInt,
}

impl CgKey {
    pub fn new(j1: Spin, m1: HalfInt, j2: Spin, m2: HalfInt, j: Spin, m: HalfInt) -> Self {
        CgKey { j1, m1, j2, m2, j, m }
    }
}

/// Whether `J` is in `|j1 - j2| ..= j1 + j2` in integer steps.
pub fn triangle(j1: Spin, j2: Spin, j: Spin) -> bool {
    let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, j.twice() as i64);
    c >= (a - b).abs() && c <= a + b && (a + b - c) % 2 == 0
}

type State = BTreeMap<(HalfInt, HalfInt), RadicalScalar>;

/// All states `|J, M⟩` for one `(j1, j2, J)`, indexed by `J - M`.
fn multiplet(j1: Spin, j2: Spin, j: Spin) -> Vec<State> {
    let top = j.as_half_int();
    let mut coeffs: Vec<(HalfInt, RadicalScalar)> = Vec::new();
    let mut m1 = j1.as_half_int();
    let mut c = RadicalScalar::one();
    while j1.contains(m1) && j2.contains(top - m1) {
        coeffs.push((m1, c.clone()));
        let lower = m1 - HalfInt::from_twice(2);
        if !(j1.contains(lower) && j2.contains(top - lower)) {
            break;
        }
        // c_{m1} r1(m1) + c_{m1+1} r2(J-m1-1) = 0, stepping m1 -> m1 - 1
        let num = &c * &ladder_coeff_r(j2, top - lower - HalfInt::from_twice(2));
        c = -(&num / &ladder_coeff_r(j1, lower));
        m1 = lower;
    }
    let norm: Rational = coeffs
        .iter()
        .map(|(_, c)| (c * c).to_rational().expect("squared coefficient is rational"))
        .fold(Rational::zero(), |acc, x| acc + x);
    let scale = sqrt_of_rational(&(Rational::from_integer(1.into()) / norm)).expect("positive norm");
    let mut state: State = coeffs
        .into_iter()
        .map(|(m1, c)| ((m1, top - m1), &c * &scale))
        .collect();

    let mut out = Vec::with_capacity(j.multiplicity());
    for m in j.projections() {
        let next = if m == -top {
            None
        } else {
            let mut lowered = State::new();
            for ((a, b), v) in &state {
                let terms = [
                    ((*a - HalfInt::from_twice(2), *b), ladder_coeff_s(j1, *a)),
                    ((*a, *b - HalfInt::from_twice(2)), ladder_coeff_s(j2, *b)),
                ];
                for (key, s) in terms {
                    if s.is_zero() {
                        continue;
                    }
                    let slot = lowered.entry(key).or_default();
                    *slot += &(v * &s);
                }
            }
            let norm = ladder_coeff_s(j, m);
            lowered.retain(|_, v| !v.is_zero());
            for v in lowered.values_mut() {
                *v = &*v / &norm;
            }
            Some(lowered)
        };
        out.push(core::mem::replace(&mut state, next.unwrap_or_default()));
    }
    out
}

/// `⟨j1 m1, j2 m2 | J M⟩`; zero outside the selection rules.
pub fn clebsch_gordan(key: CgKey) -> RadicalScalar {
    CouplingTable::new().get(key)
}

/// Memo of computed multiplets, keyed by `(j1, j2, J)`.
#[derive(Clone, Debug, Default)]
pub struct CouplingTable {
    multiplets: BTreeMap<(Spin, Spin, Spin), Vec<State>>,
}

impl CouplingTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, key: CgKey) -> RadicalScalar {
        let CgKey { j1, m1, j2, m2, j, m } = key;
        if m1 + m2 != m
            || !j1.contains(m1)
            || !j2.contains(m2)
            || !j.contains(m)
            || !triangle(j1, j2, j)
        {
            return RadicalScalar::zero();
        }
        let states = self
            .multiplets
            .entry((j1, j2, j))
            .or_insert_with(|| multiplet(j1, j2, j));
        let row = ((j.as_half_int() - m).twice() / 2) as usize;
        states[row].get(&(m1, m2)).cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn sp(t: u32) -> Spin {
        Spin::from_twice(t)
    }

    fn fact(n: i64) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, k| acc * k)
    }

    /// Racah's closed sum, evaluated exactly.
    fn racah(key: CgKey) -> RadicalScalar {
        let CgKey { j1, m1, j2, m2, j, m } = key;
        if m1 + m2 != m || !j1.contains(m1) || !j2.contains(m2) || !j.contains(m) || !triangle(j1, j2, j) {
            return RadicalScalar::zero();
        }
        // all combinations below are integers
        let i = |twice: i64| twice / 2;
        let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, j.twice() as i64);
        let (x, y, z) = (m1.twice() as i64, m2.twice() as i64, m.twice() as i64);
        let under = Rational::new(
            BigInt::from(c + 1)
                * fact(i(c + a - b))
                * fact(i(c - a + b))
                * fact(i(a + b - c))
                * fact(i(c + z))
                * fact(i(c - z))
                * fact(i(a - x))
                * fact(i(a + x))
                * fact(i(b - y))
                * fact(i(b + y)),
            fact(i(a + b + c) + 1),
        );
        let mut sum = Rational::zero();
        for k in 0..=i(a + b + c) + 1 {
            let args = [k, i(a + b - c) - k, i(a - x) - k, i(b + y) - k, i(c - b + x) + k, i(c - a - y) + k];
            if args.iter().any(|&v| v < 0) {
                continue;
            }
            let den = args.iter().fold(BigInt::one(), |acc, &v| acc * fact(v));
            let term = Rational::new(if k % 2 == 0 { 1.into() } else { (-1).into() }, den);
            sum += term;
        }
        sqrt_of_rational(&under).unwrap().scale(&sum)
    }

    fn all_keys(max: u32) -> Vec<CgKey> {
        let mut keys = Vec::new();
        for a in 0..=max {
            for b in 0..=max {
                for c in 0..=(a + b) {
                    for m1 in sp(a).projections() {
                        for m2 in sp(b).projections() {
                            for m in sp(c).projections() {
                                keys.push(CgKey::new(sp(a), m1, sp(b), m2, sp(c), m));
                            }
                        }
                    }
                }
            }
        }
        keys
    }

    #[test]
    fn spot_values() {
        let one = RadicalScalar::one();
        assert_eq!(clebsch_gordan(CgKey::new(sp(1), h(1), sp(1), h(1), sp(2), h(2))), one);
        let half_root2 = RadicalScalar::sqrt(2).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(clebsch_gordan(CgKey::new(sp(1), h(1), sp(1), h(-1), sp(2), h(0))), half_root2);
        assert_eq!(clebsch_gordan(CgKey::new(sp(1), h(1), sp(0), h(0), sp(1), h(1))), one);
        assert_eq!(clebsch_gordan(CgKey::new(sp(1), h(1), sp(1), h(-1), sp(0), h(0))), half_root2);
        assert_eq!(clebsch_gordan(CgKey::new(sp(1), h(-1), sp(1), h(1), sp(0), h(0))), -half_root2);
        assert!(clebsch_gordan(CgKey::new(sp(1), h(1), sp(2), h(0), sp(0), h(0))).is_zero());
    }

    #[test]
    fn agrees_with_racah_sum() {
        let mut table = CouplingTable::new();
        for key in all_keys(4) {
            assert_eq!(table.get(key), racah(key), "{key:?}");
        }
    }

    #[test]
    fn orthogonality() {
        let mut table = CouplingTable::new();
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                let js: Vec<Spin> = (0..=a + b).map(sp).filter(|&j| triangle(sp(a), sp(b), j)).collect();
                let pairs: Vec<(Spin, HalfInt)> =
                    js.iter().flat_map(|&j| j.projections().map(move |m| (j, m))).collect();
                for &(j, m) in &pairs {
                    for &(jp, mp) in &pairs {
                        let mut total = RadicalScalar::zero();
                        for m1 in sp(a).projections() {
                            for m2 in sp(b).projections() {
                                let x = table.get(CgKey::new(sp(a), m1, sp(b), m2, j, m));
                                let y = table.get(CgKey::new(sp(a), m1, sp(b), m2, jp, mp));
                                total += &(&x * &y);
                            }
                        }
                        let expected = if (j, m) == (jp, mp) { RadicalScalar::one() } else { RadicalScalar::zero() };
                        assert_eq!(total, expected, "j1={a}/2 j2={b}/2 ({j},{m}) ({jp},{mp})");
                    }
                }
            }
        }
    }

    #[test]
    fn lowering_recursion_holds() {
        // s^J_M ⟨m1 m2|J M-1⟩ = s1(m1+1) ⟨m1+1, m2|J M⟩ + s2(m2+1) ⟨m1, m2+1|J M⟩
        let mut table = CouplingTable::new();
        let one = h(2);
        for key in all_keys(3) {
            let CgKey { j1, m1, j2, m2, j, m } = key;
            let upper = m + one;
            if !j.contains(upper) {
                continue;
            }
            let lhs = &ladder_coeff_s(j, upper) * &table.get(key);
            let rhs = &ladder_coeff_s(j1, m1 + one) * &table.get(CgKey::new(j1, m1 + one, j2, m2, j, upper))
                + &ladder_coeff_s(j2, m2 + one) * &table.get(CgKey::new(j1, m1, j2, m2 + one, j, upper));
            assert_eq!(lhs, rhs, "{key:?}");
        }
    }
}
