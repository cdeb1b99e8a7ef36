//! Exact rational helpers. Every quantity in the crate is a `Rat`; nothing
//! ever passes through floating point.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// The value as an `i64` when it is an integer that fits.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// `"p"` for integers, `"p/q"` otherwise (reduced, positive denominator).
pub fn render(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`render`]. Accepts only the canonical shapes `-?\d+` and
/// `-?\d+/\d+` with a nonzero denominator.
pub fn parse(s: &str) -> Option<Rat> {
    fn int(s: &str, signed: bool) -> Option<BigInt> {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    }
    match s.split_once('/') {
        None => int(s, true).map(Rat::from_integer),
        Some((n, d)) => {
            let n = int(n, true)?;
            let d = int(d, false)?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

/// Renders `c0 + c1*var` compactly, e.g. `48-8c`, `1-c`, `-2c`.
pub fn render_affine(constant: &Rat, slope: &Rat, var: &str) -> String {
    let mut out = String::new();
    if !constant.is_zero() || slope.is_zero() {
        out.push_str(&render(constant));
    }
    if !slope.is_zero() {
        let mag = slope.abs();
        if slope.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&render(&mag));
        }
        out.push_str(var);
    }
    out
}

/// Fits `v(x) = c0 + c1*x` through the given samples; `None` when the
/// samples are not affine.
pub fn fit_affine(samples: &[(i64, Rat)]) -> Option<(Rat, Rat)> {
    let (x0, y0) = samples.first()?;
    let (x1, y1) = samples.get(1)?;
    let slope = (y1 - y0) / q(x1 - x0);
    let constant = y0 - &slope * q(*x0);
    samples
        .iter()
        .all(|(x, y)| *y == &constant + &slope * q(*x))
        .then_some((constant, slope))
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    num::Integer::div_floor(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse_agree() {
        for r in [q(0), q(-7), frac(125, 2), frac(-3, 9), q(72)] {
            assert_eq!(parse(&render(&r)), Some(r));
        }
        assert_eq!(render(&frac(6, 4)), "3/2");
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("--1"), None);
        assert_eq!(parse("1/-2"), None);
        assert_eq!(parse("48-8c"), None);
        assert_eq!(parse("true"), None);
    }

    #[test]
    fn affine_rendering() {
        assert_eq!(render_affine(&q(48), &q(-8), "c"), "48-8c");
        assert_eq!(render_affine(&q(1), &q(-1), "c"), "1-c");
        assert_eq!(render_affine(&q(0), &q(-2), "a"), "-2a");
        assert_eq!(render_affine(&q(0), &q(0), "a"), "0");
        assert_eq!(render_affine(&q(-1), &q(3), "c"), "-1+3c");
    }

    #[test]
    fn affine_fit_rejects_curves() {
        let line: Vec<_> = (-2..=2).map(|x| (x, q(62 - 8 * x))).collect();
        assert_eq!(fit_affine(&line), Some((q(62), q(-8))));
        let parabola: Vec<_> = (-2..=2).map(|x| (x, q(x * x))).collect();
        assert_eq!(fit_affine(&parabola), None);
    }
}
