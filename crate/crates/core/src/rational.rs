//! Exact rationals and dyadic rationals.
//!
//! Every point of the ambient space is a [`Rational`]; text form is `p/q`
//! (or `p` for integers). Dyadics `k/2^e` carry the values of the Cantor
//! function on endpoints and are printed as `k/2^e`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Largest exponent a [`Dyadic`] may carry.
pub const MAX_DYADIC_EXP: u32 = 62;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / BigInt::from(2)
}

/// Parses `p/q` or `p`, surrounding whitespace allowed.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse {
            column: 1,
            message: "empty rational".into(),
        });
    }
    Rational::from_str(t).map_err(|e| Error::Parse {
        column: 1,
        message: format!("`{t}` is not a rational ({e})"),
    })
}

/// Parses a rational and checks that it lies in [0,1].
pub fn parse_unit(text: &str) -> Result<Rational> {
    let x = parse_rational(text)?;
    check_unit(&x)?;
    Ok(x)
}

pub fn check_unit(x: &Rational) -> Result<()> {
    if x.is_negative() || *x > one() {
        Err(Error::arg(format!("{x} is outside [0,1]")))
    } else {
        Ok(())
    }
}

pub fn approx(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Is `n` a power of two (`n > 0`)? Returns the exponent.
pub(crate) fn log2_exact(n: &BigInt) -> Option<u32> {
    if !n.is_positive() {
        return None;
    }
    let tz = n.trailing_zeros()?;
    if n >> tz == BigInt::one() {
        u32::try_from(tz).ok()
    } else {
        None
    }
}

/// A dyadic rational `numer / 2^exp` in [0,1], kept reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    numer: u64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { numer: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { numer: 1, exp: 0 };

    pub fn new(numer: u64, exp: u32) -> Result<Self> {
        if exp > MAX_DYADIC_EXP {
            return Err(Error::arg(format!(
                "dyadic exponent {exp} exceeds {MAX_DYADIC_EXP}"
            )));
        }
        if numer > (1u64 << exp) {
            return Err(Error::arg(format!("{numer}/2^{exp} is outside [0,1]")));
        }
        Ok(Self::reduced(numer, exp))
    }

    fn reduced(mut numer: u64, mut exp: u32) -> Self {
        if numer == 0 {
            return Dyadic::ZERO;
        }
        while exp > 0 && numer.is_multiple_of(2) {
            numer /= 2;
            exp -= 1;
        }
        Dyadic { numer, exp }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    /// Exponent of the reduced denominator.
    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer), BigInt::one() << self.exp)
    }

    pub fn from_rational(x: &Rational) -> Option<Self> {
        let exp = log2_exact(x.denom())?;
        let numer = x.numer().to_u64()?;
        Dyadic::new(numer, exp).ok()
    }

    /// The numerator over the fixed denominator `2^exp` (`exp` at least the reduced exponent).
    pub fn scaled_numer(&self, exp: u32) -> Option<u64> {
        if exp < self.exp {
            None
        } else {
            self.numer.checked_shl(exp - self.exp)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / (1u64 << self.exp) as f64
    }

    /// Text form `k/2^e` (or `k` when the exponent is zero).
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = (self.numer as u128) << (e - self.exp);
        let b = (other.numer as u128) << (e - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/2^{}", self.numer, self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `k/2^e` as well as a plain rational whose denominator is a power of two.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((k, e)) = t.split_once("/2^") {
            let k: u64 = k.trim().parse().map_err(|_| Error::Parse {
                column: 1,
                message: format!("bad dyadic numerator in `{t}`"),
            })?;
            let e: u32 = e.trim().parse().map_err(|_| Error::Parse {
                column: k.to_string().len() + 4,
                message: format!("bad dyadic exponent in `{t}`"),
            })?;
            return Dyadic::new(k, e);
        }
        let x = parse_rational(t)?;
        Dyadic::from_rational(&x)
            .ok_or_else(|| Error::arg(format!("`{t}` is not a dyadic rational in [0,1]")))
    }
}

impl From<Dyadic> for Rational {
    fn from(d: Dyadic) -> Self {
        d.to_rational()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_text_round_trip() {
        let d: Dyadic = "3/2^2".parse().unwrap();
        assert_eq!(d.to_rational(), rat(3, 4));
        assert_eq!(d.to_string(), "3/2^2");
        assert_eq!("1/2".parse::<Dyadic>().unwrap(), Dyadic::new(1, 1).unwrap());
        assert_eq!("4/2^3".parse::<Dyadic>().unwrap().to_string(), "1/2^1");
        assert_eq!(Dyadic::ONE.to_string(), "1");
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("5/2^2".parse::<Dyadic>().is_err());
    }

    #[test]
    fn dyadic_order_matches_rational_order() {
        let a = Dyadic::new(3, 3).unwrap();
        let b = Dyadic::new(1, 1).unwrap();
        assert!(a < b);
        assert_eq!(a.cmp(&b), a.to_rational().cmp(&b.to_rational()));
    }

    #[test]
    fn unit_range_checks() {
        assert!(parse_unit("2").is_err());
        assert!(parse_unit("-1/3").is_err());
        assert_eq!(parse_unit(" 1/3 ").unwrap(), rat(1, 3));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn power_of_two_detection() {
        assert_eq!(log2_exact(&BigInt::from(1)), Some(0));
        assert_eq!(log2_exact(&BigInt::from(1024)), Some(10));
        assert_eq!(log2_exact(&BigInt::from(12)), None);
    }
}
