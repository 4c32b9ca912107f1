use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::interval::{filtered_cmp, Interval};
use crate::rational::{approx, midpoint, Rational};

/// A finite union of intervals of [0,1] in canonical form.
///
/// Components are sorted, and consecutive components are separated either by a
/// nonempty open gap or by a single point missing from both. The canonical
/// form is unique, so structural equality is set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Region {
    parts: Vec<Interval>,
}

/// A breakpoint with its float approximation.
type Point = (Rational, f64);

/// Membership of a region sampled on a sorted breakpoint list that contains
/// every endpoint of the region together with 0 and 1.
struct Samples {
    at_point: Vec<bool>,
    on_gap: Vec<bool>,
}

impl Region {
    pub fn empty() -> Self {
        Region { parts: Vec::new() }
    }

    pub fn full() -> Self {
        Region {
            parts: vec![Interval::raw(Rational::zero(), Rational::one(), true, true)],
        }
    }

    /// Union of arbitrary (possibly overlapping) intervals.
    pub fn from_intervals<I: IntoIterator<Item = Interval>>(intervals: I) -> Self {
        let mut items: Vec<Interval> = intervals.into_iter().collect();
        items.sort_by(|a, b| a.lo().cmp(b.lo()).then(b.lo_closed().cmp(&a.lo_closed())));
        let mut parts: Vec<Interval> = Vec::with_capacity(items.len());
        for next in items {
            if let Some(cur) = parts.last_mut() {
                let touches = next.lo() < cur.hi()
                    || (next.lo() == cur.hi() && (cur.hi_closed() || next.lo_closed()));
                if touches {
                    let (hi, hi_closed) = match next.hi().cmp(cur.hi()) {
                        std::cmp::Ordering::Greater => (next.hi().clone(), next.hi_closed()),
                        std::cmp::Ordering::Equal => {
                            (cur.hi().clone(), cur.hi_closed() || next.hi_closed())
                        }
                        std::cmp::Ordering::Less => (cur.hi().clone(), cur.hi_closed()),
                    };
                    *cur = Interval::raw(cur.lo().clone(), hi, cur.lo_closed(), hi_closed);
                    continue;
                }
            }
            parts.push(next);
        }
        Region { parts }
    }

    pub fn interval(i: Interval) -> Self {
        Region { parts: vec![i] }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Region::full()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.contains_filtered(x, approx(x))
    }

    /// Membership test given a float approximation of `x` (see [`Interval`]).
    pub(crate) fn contains_filtered(&self, x: &Rational, xf: f64) -> bool {
        // last component whose lower end is <= x
        let idx = self.parts.partition_point(|p| {
            filtered_cmp(x, xf, p.lo(), p.lo_approx()) != std::cmp::Ordering::Less
        });
        idx > 0 && self.parts[idx - 1].contains_filtered(x, xf)
    }

    fn endpoints(&self) -> impl Iterator<Item = (Rational, f64)> + '_ {
        self.parts.iter().flat_map(|p| {
            [
                (p.lo().clone(), p.lo_approx()),
                (p.hi().clone(), p.hi_approx()),
            ]
        })
    }

    /// Sorted distinct endpoints of `regions` together with 0 and 1. Each
    /// region contributes an already sorted run, so the sort is a merge.
    fn breakpoints(regions: &[&Region]) -> Vec<Point> {
        let mut pts: Vec<Point> = vec![(Rational::zero(), 0.0)];
        for r in regions {
            pts.extend(r.endpoints());
        }
        pts.push((Rational::one(), 1.0));
        pts.sort_by(|x, y| filtered_cmp(&x.0, x.1, &y.0, y.1));
        pts.dedup_by(|x, y| filtered_cmp(&x.0, x.1, &y.0, y.1) == Ordering::Equal);
        pts
    }

    /// One sweep over the breakpoints with a cursor into the components.
    fn sample(&self, pts: &[Point]) -> Samples {
        let mut at_point = Vec::with_capacity(pts.len());
        let mut on_gap = Vec::with_capacity(pts.len());
        let mut k = 0;
        for (i, (x, xf)) in pts.iter().enumerate() {
            // first component not ending before x
            while k < self.parts.len()
                && filtered_cmp(self.parts[k].hi(), self.parts[k].hi_approx(), x, *xf)
                    == Ordering::Less
            {
                k += 1;
            }
            at_point.push(k < self.parts.len() && self.parts[k].contains_filtered(x, *xf));
            if i + 1 < pts.len() {
                // no endpoint lies strictly inside the gap after x
                let mut j = k;
                while j < self.parts.len()
                    && filtered_cmp(self.parts[j].hi(), self.parts[j].hi_approx(), x, *xf)
                        != Ordering::Greater
                {
                    j += 1;
                }
                on_gap.push(
                    j < self.parts.len()
                        && filtered_cmp(self.parts[j].lo(), self.parts[j].lo_approx(), x, *xf)
                            != Ordering::Greater,
                );
            }
        }
        Samples { at_point, on_gap }
    }

    fn from_samples(pts: &[Point], s: &Samples) -> Region {
        let mut parts = Vec::new();
        let mut open: Option<(Point, bool)> = None;
        for (i, p) in pts.iter().enumerate() {
            if s.at_point[i] {
                if open.is_none() {
                    open = Some((p.clone(), true));
                }
            } else if let Some((lo, lc)) = open.take() {
                parts.push(Interval::raw_approx(lo, p.clone(), lc, false));
            }
            if i + 1 < pts.len() {
                if s.on_gap[i] {
                    if open.is_none() {
                        open = Some((p.clone(), false));
                    }
                } else if let Some((lo, lc)) = open.take() {
                    parts.push(Interval::raw_approx(lo, p.clone(), lc, true));
                }
            }
        }
        if let Some((lo, lc)) = open {
            parts.push(Interval::raw_approx(
                lo,
                pts[pts.len() - 1].clone(),
                lc,
                true,
            ));
        }
        Region { parts }
    }

    fn combine(&self, other: &Region, op: impl Fn(bool, bool) -> bool) -> Region {
        let pts = Self::breakpoints(&[self, other]);
        let a = self.sample(&pts);
        let b = other.sample(&pts);
        let s = Samples {
            at_point: a
                .at_point
                .iter()
                .zip(&b.at_point)
                .map(|(x, y)| op(*x, *y))
                .collect(),
            on_gap: a
                .on_gap
                .iter()
                .zip(&b.on_gap)
                .map(|(x, y)| op(*x, *y))
                .collect(),
        };
        Self::from_samples(&pts, &s)
    }

    pub fn union(&self, other: &Region) -> Region {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Region) -> Region {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Region) -> Region {
        self.combine(other, |a, b| a && !b)
    }

    /// Complement relative to [0,1].
    pub fn complement(&self) -> Region {
        let pts = Self::breakpoints(&[self]);
        let mut s = self.sample(&pts);
        s.at_point.iter_mut().for_each(|b| *b = !*b);
        s.on_gap.iter_mut().for_each(|b| *b = !*b);
        Self::from_samples(&pts, &s)
    }

    pub fn closure(&self) -> Region {
        let pts = Self::breakpoints(&[self]);
        let s = self.sample(&pts);
        let n = pts.len();
        let at_point = (0..n)
            .map(|i| s.at_point[i] || (i > 0 && s.on_gap[i - 1]) || (i + 1 < n && s.on_gap[i]))
            .collect();
        Self::from_samples(
            &pts,
            &Samples {
                at_point,
                on_gap: s.on_gap,
            },
        )
    }

    /// Interior relative to [0,1]: the points 0 and 1 only need a one-sided neighbourhood.
    pub fn interior(&self) -> Region {
        let pts = Self::breakpoints(&[self]);
        let s = self.sample(&pts);
        let n = pts.len();
        let at_point = (0..n)
            .map(|i| s.at_point[i] && (i == 0 || s.on_gap[i - 1]) && (i + 1 == n || s.on_gap[i]))
            .collect();
        Self::from_samples(
            &pts,
            &Samples {
                at_point,
                on_gap: s.on_gap,
            },
        )
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Region) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.parts.iter().all(Interval::is_closed)
    }

    pub fn is_open(&self) -> bool {
        self.parts.iter().all(Interval::is_relatively_open)
    }

    /// Boundary relative to [0,1].
    pub fn boundary(&self) -> Region {
        self.closure().difference(&self.interior())
    }

    /// A point of the region, preferring interior midpoints.
    pub fn sample_point(&self) -> Option<Rational> {
        self.parts.first().map(|p| {
            if p.is_point() {
                p.lo().clone()
            } else {
                midpoint(p.lo(), p.hi())
            }
        })
    }

    pub fn min(&self) -> Option<&Rational> {
        self.parts.first().map(Interval::lo)
    }

    pub fn max(&self) -> Option<&Rational> {
        self.parts.last().map(Interval::hi)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "empty");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
