use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::rational::{approx, Dyadic, Rational};
use crate::region::{Interval, Region};

/// The level sets of a step function on [0,1], one region per attained value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTable {
    fibers: Vec<(Dyadic, Region)>,
    pieces: Vec<(Interval, Dyadic)>,
}

impl FiberTable {
    /// Fibers of the min-index function of a chain: value 0 on `base`, then
    /// each link takes the part of its region not already covered, and
    /// whatever remains gets 1.
    pub(crate) fn from_chain<'a, I>(base: &Region, links: I) -> FiberTable
    where
        I: IntoIterator<Item = (Dyadic, &'a Region)>,
    {
        let mut covered = base.clone();
        let mut fibers = vec![(Dyadic::ZERO, base.clone())];
        for (value, region) in links {
            fibers.push((value, region.difference(&covered)));
            covered = covered.union(region);
        }
        fibers.push((Dyadic::ONE, covered.complement()));
        Self::from_fibers(fibers)
    }

    /// Builds the table from `(value, region)` pairs; empty regions are dropped.
    pub fn from_fibers(fibers: Vec<(Dyadic, Region)>) -> FiberTable {
        let mut fibers: Vec<(Dyadic, Region)> =
            fibers.into_iter().filter(|(_, r)| !r.is_empty()).collect();
        fibers.sort_by_key(|f| f.0);
        let mut pieces: Vec<(Interval, Dyadic)> = fibers
            .iter()
            .flat_map(|(v, r)| r.parts().iter().map(move |p| (p.clone(), *v)))
            .collect();
        pieces.sort_by(|a, b| a.0.cmp_lo(&b.0));
        FiberTable { fibers, pieces }
    }

    /// Nonempty fibers in increasing order of value.
    pub fn fibers(&self) -> &[(Dyadic, Region)] {
        &self.fibers
    }

    /// All fiber components sorted by position.
    pub fn pieces(&self) -> &[(Interval, Dyadic)] {
        &self.pieces
    }

    pub fn fiber(&self, value: Dyadic) -> Region {
        self.fibers
            .iter()
            .find(|(v, _)| *v == value)
            .map_or_else(Region::empty, |(_, r)| r.clone())
    }

    /// Union of the fibers whose value satisfies `keep`.
    pub fn union_where(&self, keep: impl Fn(Dyadic) -> bool) -> Region {
        self.fibers
            .iter()
            .filter(|(v, _)| keep(*v))
            .fold(Region::empty(), |acc, (_, r)| acc.union(r))
    }

    /// The value of the fiber containing `x`, by binary search.
    pub fn value_at(&self, x: &Rational) -> Option<Dyadic> {
        let xf = approx(x);
        let end = self
            .pieces
            .partition_point(|(p, _)| p.cmp_to_lo(x, xf) != Ordering::Less);
        // several components may start at x (a point and an open gap after it)
        for (p, v) in self.pieces[..end].iter().rev() {
            if p.contains_filtered(x, xf) {
                return Some(*v);
            }
            if p.cmp_to_lo(x, xf) == Ordering::Greater {
                break;
            }
        }
        None
    }

    pub fn image(&self) -> BTreeSet<Dyadic> {
        self.fibers.iter().map(|(v, _)| *v).collect()
    }
}
