//! Float helpers usable from `no_std` (libm-backed where core lacks them).

use num_bigint::BigUint;
use num_traits::ToPrimitive;

#[inline]
pub fn fabs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `x^e` by binary exponentiation.
pub fn powi(x: f64, e: usize) -> f64 {
    let mut base = x;
    let mut e = e;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Lossy conversion for reporting; exact for values below 2^53.
pub fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Relative error of an exact count against a floating prediction.
pub fn relative_error(exact: &BigUint, predicted: f64) -> f64 {
    if predicted == 0.0 {
        return if *exact == BigUint::ZERO { 0.0 } else { f64::INFINITY };
    }
    fabs(big_to_f64(exact) - predicted) / fabs(predicted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_matches_repeated_multiplication() {
        let mut acc = 1.0;
        for e in 0..12 {
            assert!((powi(0.5, e) - acc).abs() < 1e-15);
            acc *= 0.5;
        }
        assert_eq!(powi(2.0, 10), 1024.0);
    }

    #[test]
    fn relative_error_basics() {
        use num_bigint::BigUint;
        assert_eq!(relative_error(&BigUint::from(50u32), 100.0), 0.5);
        assert_eq!(relative_error(&BigUint::ZERO, 0.0), 0.0);
    }
}
