//! Rendering of exact ratios.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `p/q` in lowest terms, always with an explicit denominator.
pub fn format_exact(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded half-up to `digits` significant digits.
pub fn format_significant(r: &BigRational, digits: usize) -> String {
    assert!(digits > 0);
    if r.is_zero() {
        return if digits == 1 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits - 1))
        };
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let x = r.abs();
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(BigInt::from(10).pow(e as u32))
        } else {
            BigRational::new(BigInt::from(1), BigInt::from(10).pow((-e) as u32))
        }
    };

    // 10^e <= x < 10^(e+1)
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    while x < pow10(e) {
        e -= 1;
    }
    while x >= pow10(e + 1) {
        e += 1;
    }

    let round = |e: i64| -> BigInt {
        let scaled = &x * pow10(digits as i64 - 1 - e) + BigRational::new(1.into(), 2.into());
        scaled.numer().div_floor(scaled.denom())
    };
    let mut mantissa = round(e);
    if mantissa >= BigInt::from(10).pow(digits as u32) {
        e += 1;
        mantissa = round(e);
    }

    let m = mantissa.to_string();
    let point = e + 1; // digits before the decimal point
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), m)
    } else if point as usize >= m.len() {
        format!("{}{}", m, "0".repeat(point as usize - m.len()))
    } else {
        format!("{}.{}", &m[..point as usize], &m[point as usize..])
    };
    format!("{sign}{body}")
}
