//! Exact binomial coefficients and ratio conversion for large multiplicities.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

/// Row `n` of Pascal's triangle, `[C(n, 0), ..., C(n, n)]`.
///
/// Uses `C(n, j + 1) = C(n, j) * (n - j) / (j + 1)`; every division is exact.
pub fn binomial_row(n: u32) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for j in 0..n {
        c = c * (n - j) / (j + 1);
        row.push(c.clone());
    }
    row
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for j in 0..k {
        c = c * (n - j) / (j + 1);
    }
    c
}

/// `numerator / denominator` rounded to `f64` with relative error below
/// `2^-52`, for operands of any size.
///
/// Both operands are scaled so the integer quotient carries at least 64
/// significant bits before the single conversion to floating point.
pub fn ratio_to_f64(numerator: &BigUint, denominator: &BigUint) -> f64 {
    assert!(!denominator.is_zero(), "ratio with zero denominator");
    if numerator.is_zero() {
        return 0.0;
    }
    let shift = 64 + denominator.bits() as i64 - numerator.bits() as i64;
    let quotient = if shift >= 0 {
        (numerator << shift as u64) / denominator
    } else {
        numerator / (denominator << (-shift) as u64)
    };
    let q = quotient.to_f64().expect("quotient has about 64 bits");
    scale_by_power_of_two(q, -shift)
}

pub fn signed_ratio_to_f64(numerator: &BigInt, denominator: &BigUint) -> f64 {
    let magnitude = ratio_to_f64(numerator.magnitude(), denominator);
    match numerator.sign() {
        Sign::Minus => -magnitude,
        _ => magnitude,
    }
}

fn scale_by_power_of_two(x: f64, exp: i64) -> f64 {
    // Split so neither factor over- or underflows on its own.
    let mut x = x;
    let mut exp = exp;
    while exp > 1000 {
        x *= 2f64.powi(1000);
        exp -= 1000;
    }
    while exp < -1000 {
        x *= 2f64.powi(-1000);
        exp += 1000;
    }
    x * 2f64.powi(exp as i32)
}

/// A symmetric binomial law with `steps` unit moves of `±1` started at
/// `center`: support `center + steps - 2j` with weight `C(steps, j) / 2^steps`.
///
/// One cylinder iteration is one step of this walk for every eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedBinomial {
    pub center: f64,
    pub steps: u32,
}

impl ShiftedBinomial {
    /// `(value, C(steps, j))` for `j = 0..=steps`, descending in value.
    pub fn support(&self) -> impl Iterator<Item = (f64, BigUint)> + '_ {
        binomial_row(self.steps)
            .into_iter()
            .enumerate()
            .map(move |(j, c)| (self.center + self.steps as f64 - 2.0 * j as f64, c))
    }

    pub fn weight(&self, j: u32) -> f64 {
        ratio_to_f64(&binomial(self.steps, j), &(BigUint::one() << self.steps as u64))
    }

    pub fn mean(&self) -> f64 {
        self.center
    }

    pub fn variance(&self) -> f64 {
        self.steps as f64
    }
}
