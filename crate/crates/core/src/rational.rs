//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn show(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn pow(q: &Rational, e: &BigInt) -> Rational {
    let mut base = if e.is_negative() { q.recip() } else { q.clone() };
    let mut e = e.abs();
    let mut acc = Rational::one();
    let two = BigInt::from(2);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            acc *= &base;
        }
        base = &base * &base;
        e /= &two;
    }
    acc
}

fn int_root(x: &BigInt, n: u32) -> Option<BigInt> {
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

/// Rational `n`-th root: the positive one for even `n`, the real one for odd `n`.
pub fn nth_root(q: &Rational, n: u64) -> Result<Rational> {
    let fail = || Error::RootNotRational { n, value: show(q) };
    if n == 0 {
        return Err(fail());
    }
    if n == 1 {
        return Ok(q.clone());
    }
    let n32 = u32::try_from(n).map_err(|_| fail())?;
    if q.is_negative() && n.is_multiple_of(2) {
        return Err(fail());
    }
    let a = q.abs();
    let num = int_root(a.numer(), n32).ok_or_else(fail)?;
    let den = int_root(a.denom(), n32).ok_or_else(fail)?;
    let r = Rational::new(num, den);
    Ok(if q.is_negative() { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_show_round_trip() {
        for s in ["0", "-3", "7/2", "-1/3"] {
            assert_eq!(show(&parse(s).unwrap()), s);
        }
        assert_eq!(show(&parse("4/2").unwrap()), "2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(nth_root(&int(4), 2).unwrap(), int(2));
        assert_eq!(nth_root(&frac(-8, 27), 3).unwrap(), frac(-2, 3));
        assert!(nth_root(&int(2), 2).is_err());
        assert!(nth_root(&int(-4), 2).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&frac(2, 3), &BigInt::from(-2)), frac(9, 4));
        assert_eq!(pow(&int(5), &BigInt::from(0)), int(1));
    }
}
