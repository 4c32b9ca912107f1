use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{approx, Rational};

/// Margin below which the float filter defers to exact comparison.
const FILTER_MARGIN: f64 = 1e-12;

/// A nonempty interval of [0,1] with rational endpoints and explicit closedness.
#[derive(Clone, Debug)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
    lo_closed: bool,
    hi_closed: bool,
    lo_f: f64,
    hi_f: f64,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo.is_negative() || hi > Rational::one() {
            return Err(Error::arg(format!("interval ({lo}, {hi}) leaves [0,1]")));
        }
        match lo.cmp(&hi) {
            Ordering::Greater => Err(Error::arg(format!("interval endpoints {lo} > {hi}"))),
            Ordering::Equal if !(lo_closed && hi_closed) => {
                Err(Error::arg(format!("interval at {lo} is empty")))
            }
            _ => Ok(Self::raw(lo, hi, lo_closed, hi_closed)),
        }
    }

    pub(crate) fn raw(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Self {
        let lo_f = approx(&lo);
        let hi_f = approx(&hi);
        Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
            lo_f,
            hi_f,
        }
    }

    /// As [`Interval::raw`] with the float approximations already known.
    pub(crate) fn raw_approx(
        lo: (Rational, f64),
        hi: (Rational, f64),
        lo_closed: bool,
        hi_closed: bool,
    ) -> Self {
        Interval {
            lo: lo.0,
            hi: hi.0,
            lo_closed,
            hi_closed,
            lo_f: lo.1,
            hi_f: hi.1,
        }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn point(x: Rational) -> Result<Self> {
        Self::new(x.clone(), x, true, true)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub(crate) fn lo_approx(&self) -> f64 {
        self.lo_f
    }

    pub(crate) fn hi_approx(&self) -> f64 {
        self.hi_f
    }

    /// Order by lower end, closed before open at the same point.
    pub(crate) fn cmp_lo(&self, other: &Interval) -> Ordering {
        filtered_cmp(&self.lo, self.lo_f, &other.lo, other.lo_f)
            .then(other.lo_closed.cmp(&self.lo_closed))
    }

    /// Where `x` lies relative to the lower end.
    pub(crate) fn cmp_to_lo(&self, x: &Rational, xf: f64) -> Ordering {
        filtered_cmp(x, xf, &self.lo, self.lo_f)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.contains_filtered(x, approx(x))
    }

    /// Membership with a caller-supplied float approximation of `x`.
    pub(crate) fn contains_filtered(&self, x: &Rational, xf: f64) -> bool {
        let above_lo = match filtered_cmp(x, xf, &self.lo, self.lo_f) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        above_lo
            && match filtered_cmp(x, xf, &self.hi, self.hi_f) {
                Ordering::Less => true,
                Ordering::Equal => self.hi_closed,
                Ordering::Greater => false,
            }
    }

    /// Is the interval open relative to [0,1]?
    pub fn is_relatively_open(&self) -> bool {
        (!self.lo_closed || self.lo.is_zero()) && (!self.hi_closed || self.hi.is_one())
    }

    pub fn is_closed(&self) -> bool {
        self.lo_closed && self.hi_closed
    }
}

pub(crate) fn filtered_cmp(x: &Rational, xf: f64, y: &Rational, yf: f64) -> Ordering {
    let d = xf - yf;
    if d > FILTER_MARGIN {
        Ordering::Greater
    } else if d < -FILTER_MARGIN {
        Ordering::Less
    } else {
        x.cmp(y)
    }
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo
            && self.hi == other.hi
            && self.lo_closed == other.lo_closed
            && self.hi_closed == other.hi_closed
    }
}

impl Eq for Interval {}

impl Hash for Interval {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lo.hash(state);
        self.hi.hash(state);
        self.lo_closed.hash(state);
        self.hi_closed.hash(state);
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn construction_rules() {
        assert!(Interval::closed(rat(1, 2), rat(1, 3)).is_err());
        assert!(Interval::open(rat(1, 2), rat(1, 2)).is_err());
        assert!(Interval::closed(rat(-1, 2), rat(1, 2)).is_err());
        assert!(Interval::point(rat(1, 4)).unwrap().is_point());
    }

    #[test]
    fn membership_respects_closedness() {
        let i = Interval::new(rat(0, 1), rat(1, 2), true, false).unwrap();
        assert!(i.contains(&rat(0, 1)));
        assert!(!i.contains(&rat(1, 2)));
        assert!(i.is_relatively_open());
        assert!(!i.is_closed());
        assert_eq!(i.to_string(), "[0,1/2)");
    }

    #[test]
    fn filter_falls_back_to_exact() {
        // endpoints closer than the float margin
        let lo = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(20));
        let i = Interval::new(lo.clone(), rat(1, 1), false, true).unwrap();
        assert!(!i.contains(&lo));
        assert!(i.contains(&(&lo * num_bigint::BigInt::from(2))));
        assert!(!i.contains(&rat(0, 1)));
    }
}
