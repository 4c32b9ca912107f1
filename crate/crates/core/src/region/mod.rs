//! Open and closed subsets of the ambient space [0,1] as finite unions of
//! rational intervals, with the insertion witnesses used by the separation
//! constructions.
//!
//! Topology is relative to [0,1]: `[0,b)` and `(a,1]` are open.

mod insert;
mod interval;
mod set;
mod text;

pub use insert::{insert_open, insert_with_trace, relative_interior};
pub use interval::Interval;
pub use set::Region;
pub use text::{parse_region, IntervalForm, RegionForm};

use std::fmt;
use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A closed subset of [0,1].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClosedRegion(Region);

/// A subset of [0,1] that is open in the subspace topology.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpenRegion(Region);

impl ClosedRegion {
    pub fn new(region: Region) -> Result<Self> {
        if region.is_closed() {
            Ok(ClosedRegion(region))
        } else {
            Err(Error::arg(format!("{region} is not closed")))
        }
    }

    pub(crate) fn new_unchecked(region: Region) -> Self {
        debug_assert!(region.is_closed(), "{region} is not closed");
        ClosedRegion(region)
    }

    pub fn empty() -> Self {
        ClosedRegion(Region::empty())
    }

    pub fn full() -> Self {
        ClosedRegion(Region::full())
    }

    /// Union of closed intervals `[lo, hi]`.
    pub fn from_pairs<I: IntoIterator<Item = (Rational, Rational)>>(pairs: I) -> Result<Self> {
        let items = pairs
            .into_iter()
            .map(|(lo, hi)| Interval::closed(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedRegion(Region::from_intervals(items)))
    }

    pub fn region(&self) -> &Region {
        &self.0
    }

    pub fn into_region(self) -> Region {
        self.0
    }

    pub fn complement(&self) -> OpenRegion {
        OpenRegion(self.0.complement())
    }

    pub fn interior(&self) -> OpenRegion {
        OpenRegion(self.0.interior())
    }

    pub fn union(&self, other: &ClosedRegion) -> ClosedRegion {
        ClosedRegion(self.0.union(&other.0))
    }

    pub fn intersection(&self, other: &ClosedRegion) -> ClosedRegion {
        ClosedRegion(self.0.intersection(&other.0))
    }

    /// `self ∖ open` is closed.
    pub fn minus(&self, open: &OpenRegion) -> ClosedRegion {
        ClosedRegion(self.0.difference(&open.0))
    }

    /// Smallest gap between the two sets (zero when they meet).
    pub fn distance(&self, other: &ClosedRegion) -> Result<Rational> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::arg("distance needs two nonempty regions"));
        }
        let mut best: Option<Rational> = None;
        for a in self.parts() {
            for b in other.parts() {
                let gap = if b.lo() > a.hi() {
                    b.lo() - a.hi()
                } else if a.lo() > b.hi() {
                    a.lo() - b.hi()
                } else {
                    Rational::zero()
                };
                if best.as_ref().is_none_or(|d| gap < *d) {
                    best = Some(gap);
                }
            }
        }
        Ok(best.expect("nonempty operands"))
    }

    /// Distance from a point to the set.
    pub fn distance_to(&self, x: &Rational) -> Result<Rational> {
        let p = ClosedRegion::from_pairs([(x.clone(), x.clone())])?;
        self.distance(&p)
    }
}

impl OpenRegion {
    pub fn new(region: Region) -> Result<Self> {
        if region.is_open() {
            Ok(OpenRegion(region))
        } else {
            Err(Error::arg(format!("{region} is not open in [0,1]")))
        }
    }

    pub(crate) fn new_unchecked(region: Region) -> Self {
        debug_assert!(region.is_open(), "{region} is not open");
        OpenRegion(region)
    }

    pub fn empty() -> Self {
        OpenRegion(Region::empty())
    }

    pub fn full() -> Self {
        OpenRegion(Region::full())
    }

    pub fn region(&self) -> &Region {
        &self.0
    }

    pub fn into_region(self) -> Region {
        self.0
    }

    pub fn complement(&self) -> ClosedRegion {
        ClosedRegion(self.0.complement())
    }

    pub fn closure(&self) -> ClosedRegion {
        ClosedRegion(self.0.closure())
    }

    pub fn union(&self, other: &OpenRegion) -> OpenRegion {
        OpenRegion(self.0.union(&other.0))
    }

    pub fn intersection(&self, other: &OpenRegion) -> OpenRegion {
        OpenRegion(self.0.intersection(&other.0))
    }

    /// `self ∖ closed` is open.
    pub fn minus(&self, closed: &ClosedRegion) -> OpenRegion {
        OpenRegion(self.0.difference(&closed.0))
    }
}

impl Deref for ClosedRegion {
    type Target = Region;

    fn deref(&self) -> &Region {
        &self.0
    }
}

impl Deref for OpenRegion {
    type Target = Region;

    fn deref(&self) -> &Region {
        &self.0
    }
}

impl fmt::Display for ClosedRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for OpenRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<Region> for ClosedRegion {
    type Error = Error;

    fn try_from(r: Region) -> Result<Self> {
        ClosedRegion::new(r)
    }
}

impl TryFrom<Region> for OpenRegion {
    type Error = Error;

    fn try_from(r: Region) -> Result<Self> {
        OpenRegion::new(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn closed(text: &str) -> ClosedRegion {
        ClosedRegion::new(parse_region(text).unwrap()).unwrap()
    }

    #[test]
    fn distance_examples() {
        let a = closed("[0,1/10]");
        let b = closed("[9/10,1]");
        assert_eq!(a.distance(&b).unwrap(), rat(4, 5));
        assert_eq!(a.distance(&closed("[1/20,1/2]")).unwrap(), rat(0, 1));
        assert!(a.distance(&ClosedRegion::empty()).is_err());
        assert_eq!(b.distance_to(&rat(1, 2)).unwrap(), rat(2, 5));
    }

    #[test]
    fn typed_constructors_check_topology() {
        assert!(ClosedRegion::new(parse_region("[0,1/2)").unwrap()).is_err());
        assert!(OpenRegion::new(parse_region("[0,1/2)").unwrap()).is_ok());
        assert!(OpenRegion::new(parse_region("(1/4,1/2]").unwrap()).is_err());
        assert!(OpenRegion::new(parse_region("(1/4,1]").unwrap()).is_ok());
        let full = OpenRegion::full();
        assert!(full.complement().is_empty());
        assert_eq!(
            closed("[0,1/10] u [9/10,1]").complement().to_string(),
            "(1/10,9/10)"
        );
    }

    #[test]
    fn subset_and_membership() {
        let r = closed("[0,1/10] u [9/10,1]");
        assert!(!r.contains(&rat(1, 2)));
        let o = OpenRegion::new(parse_region("[0,1/2)").unwrap()).unwrap();
        assert!(closed("[0,1/10]").is_subset(&o));
    }
}
