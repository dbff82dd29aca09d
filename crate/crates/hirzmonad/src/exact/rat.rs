//! Arbitrary-precision rational scalars.
//!
//! All arithmetic in this crate is exact over the rationals: the open/closed
//! algebraic conditions decided downstream would be meaningless with floating
//! point. `Rat` is always in lowest terms with positive denominator.

pub use num::BigRational as Rat;

use num::{BigInt, Zero};

/// The rational `v/1`.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// The rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"num/den"` rendering, denominator always present and positive.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` (or a bare integer). Returns `None` on malformed input
/// or a zero denominator.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for (n, d) in [(1, 2), (-3, 4), (0, 1), (7, 1), (-5, 3)] {
            let r = rat(n, d);
            assert_eq!(rat_from_str(&rat_to_string(&r)).unwrap(), r);
        }
        assert_eq!(rat_from_str("6/4").unwrap(), rat(3, 2));
        assert_eq!(rat_from_str("-6/-4").unwrap(), rat(3, 2));
        assert_eq!(rat_from_str("5").unwrap(), rat_int(5));
        assert!(rat_from_str("1/0").is_none());
        assert!(rat_from_str("x").is_none());
    }
}
