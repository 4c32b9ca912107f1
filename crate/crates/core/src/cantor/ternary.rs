//! Eventually periodic base-3 expansions of rationals in [0,1].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::rational::{check_unit, Rational};

/// `0.prefix (period)^∞` in base 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryExpansion {
    pub prefix: Vec<u8>,
    pub period: Vec<u8>,
}

impl TernaryExpansion {
    /// Digit at 1-based position `k`.
    pub fn digit(&self, k: usize) -> u8 {
        assert!(k >= 1);
        if k <= self.prefix.len() {
            self.prefix[k - 1]
        } else {
            let i = (k - 1 - self.prefix.len()) % self.period.len();
            self.period[i]
        }
    }

    /// Digits covering one full pass of prefix and period.
    pub fn head(&self) -> impl Iterator<Item = u8> + '_ {
        self.prefix.iter().chain(self.period.iter()).copied()
    }

    /// First 1-based position carrying the digit 1, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.head().position(|d| d == 1).map(|i| i + 1)
    }

    pub fn value(&self) -> Rational {
        let three = BigInt::from(3);
        let mut pre = BigInt::zero();
        for &d in &self.prefix {
            pre = pre * &three + d;
        }
        let mut per = BigInt::zero();
        for &d in &self.period {
            per = per * &three + d;
        }
        let s = three.pow(self.prefix.len() as u32);
        let t = three.pow(self.period.len() as u32) - BigInt::one();
        Rational::new(pre, s.clone()) + Rational::new(per, s * t)
    }
}

impl fmt::Display for TernaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.")?;
        for d in &self.prefix {
            write!(f, "{d}")?;
        }
        write!(f, "(")?;
        for d in &self.period {
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Raw long-division digits: either terminating (`Ok(digits)`, final digit nonzero)
/// or eventually periodic (`Err(expansion)`).
fn long_division(x: &Rational) -> std::result::Result<Vec<u8>, TernaryExpansion> {
    let q = x.denom().clone();
    let three = BigInt::from(3);
    let mut r = x.numer().clone();
    let mut digits = Vec::new();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    loop {
        if r.is_zero() {
            return Ok(digits);
        }
        if let Some(&start) = seen.get(&r) {
            let period = digits.split_off(start);
            return Err(TernaryExpansion {
                prefix: digits,
                period,
            });
        }
        seen.insert(r.clone(), digits.len());
        let scaled = &r * &three;
        let d = &scaled / &q;
        r = scaled - &d * &q;
        let d = if d.is_zero() {
            0
        } else if d.is_one() {
            1
        } else {
            2
        };
        digits.push(d);
    }
}

/// Terminating expansion of a triadic rational (`m/3^k`), or `None` otherwise.
/// Zero gives the empty digit list; one has no terminating fractional expansion.
pub fn terminating_digits(x: &Rational) -> Option<Vec<u8>> {
    if x.is_one() {
        return None;
    }
    long_division(x).ok()
}

/// The expansion of `x`, preferring the one ending in repeated 2s when `x` has two.
pub fn expand(x: &Rational) -> Result<TernaryExpansion> {
    check_unit(x)?;
    if x.is_zero() {
        return Ok(TernaryExpansion {
            prefix: vec![],
            period: vec![0],
        });
    }
    if x.is_one() {
        return Ok(TernaryExpansion {
            prefix: vec![],
            period: vec![2],
        });
    }
    Ok(match long_division(x) {
        Ok(mut digits) => {
            let last = digits.last_mut().expect("nonzero triadic has a digit");
            *last -= 1;
            TernaryExpansion {
                prefix: digits,
                period: vec![2],
            }
        }
        Err(e) => e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn one_third_prefers_trailing_twos() {
        let e = expand(&rat(1, 3)).unwrap();
        assert_eq!(e.prefix, vec![0]);
        assert_eq!(e.period, vec![2]);
        assert_eq!(e.to_string(), "0.0(2)");
    }

    #[test]
    fn seven_ninths() {
        let e = expand(&rat(7, 9)).unwrap();
        assert_eq!(e.to_string(), "0.20(2)");
    }

    #[test]
    fn one_quarter_is_periodic() {
        // 1/4 = 0.020202..._3
        let e = expand(&rat(1, 4)).unwrap();
        assert_eq!(e.head().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(e.first_one(), None);
        assert_eq!(e.value(), rat(1, 4));
    }

    #[test]
    fn one_half_is_all_ones() {
        let e = expand(&rat(1, 2)).unwrap();
        assert_eq!(e.head().collect::<Vec<_>>(), vec![1]);
        assert_eq!(e.digit(7), 1);
    }

    #[test]
    fn values_round_trip() {
        for (p, q) in [
            (0, 1),
            (1, 1),
            (5, 7),
            (13, 81),
            (2, 3),
            (99, 100),
            (1, 1000),
        ] {
            let x = rat(p, q);
            assert_eq!(expand(&x).unwrap().value(), x, "{p}/{q}");
        }
    }

    #[test]
    fn terminating_only_for_triadics() {
        assert_eq!(terminating_digits(&rat(2, 3)), Some(vec![2]));
        assert_eq!(terminating_digits(&rat(5, 9)), Some(vec![1, 2]));
        assert_eq!(terminating_digits(&rat(1, 2)), None);
        assert_eq!(terminating_digits(&rat(1, 1)), None);
    }
}
