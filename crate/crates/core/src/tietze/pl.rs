use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::region::{ClosedRegion, Interval, Region};

/// A continuous piecewise-linear map from a closed region into [0,1].
///
/// Each component of the domain carries breakpoints with strictly increasing
/// `x`, the first at the component's left end and the last at its right end;
/// a point component has a single breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    domain: ClosedRegion,
    pieces: Vec<Vec<(Rational, Rational)>>,
}

impl PLFunction {
    /// Builds the function from breakpoint groups; the domain is the union of
    /// the spans. Groups that touch are merged when their values agree there.
    pub fn from_pieces(groups: Vec<Vec<(Rational, Rational)>>) -> Result<Self> {
        let mut groups: Vec<Vec<(Rational, Rational)>> =
            groups.into_iter().filter(|g| !g.is_empty()).collect();
        for g in &groups {
            check_group(g)?;
        }
        groups.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        let mut merged: Vec<Vec<(Rational, Rational)>> = Vec::with_capacity(groups.len());
        for g in groups {
            if let Some(prev) = merged.last_mut() {
                let (px, py) = prev.last().expect("nonempty group");
                let (gx, gy) = &g[0];
                if gx < px {
                    return Err(Error::input(format!(
                        "breakpoint groups overlap at x = {gx}"
                    )));
                }
                if gx == px {
                    if gy != py {
                        return Err(Error::input(format!(
                            "discontinuous at x = {gx}: values {py} and {gy}"
                        )));
                    }
                    prev.extend(g.into_iter().skip(1));
                    continue;
                }
            }
            merged.push(g);
        }
        let spans = merged
            .iter()
            .map(|g| Interval::closed(g[0].0.clone(), g[g.len() - 1].0.clone()))
            .collect::<Result<Vec<_>>>()?;
        let domain = ClosedRegion::new(Region::from_intervals(spans))?;
        Ok(PLFunction {
            domain,
            pieces: merged,
        })
    }

    /// Builds the function on a given domain; the groups must span its components exactly.
    pub fn new(domain: ClosedRegion, groups: Vec<Vec<(Rational, Rational)>>) -> Result<Self> {
        let f = Self::from_pieces(groups)?;
        if f.domain != domain {
            return Err(Error::input(format!(
                "breakpoints span {} but the domain is {domain} (breakpoint gap)",
                f.domain
            )));
        }
        Ok(f)
    }

    /// `x ↦ x` on [0,1].
    pub fn identity() -> Self {
        PLFunction {
            domain: ClosedRegion::full(),
            pieces: vec![vec![
                (Rational::zero(), Rational::zero()),
                (Rational::one(), Rational::one()),
            ]],
        }
    }

    /// The constant `c` on `domain`.
    pub fn constant(domain: &ClosedRegion, c: Rational) -> Result<Self> {
        let groups = domain
            .parts()
            .iter()
            .map(|p| {
                if p.is_point() {
                    vec![(p.lo().clone(), c.clone())]
                } else {
                    vec![(p.lo().clone(), c.clone()), (p.hi().clone(), c.clone())]
                }
            })
            .collect();
        Self::new(domain.clone(), groups)
    }

    pub fn domain(&self) -> &ClosedRegion {
        &self.domain
    }

    /// Breakpoints grouped per domain component.
    pub fn pieces(&self) -> &[Vec<(Rational, Rational)>] {
        &self.pieces
    }

    fn group_of(&self, x: &Rational) -> Option<&[(Rational, Rational)]> {
        let k = self.pieces.partition_point(|g| &g[0].0 <= x);
        let g = self.pieces.get(k.checked_sub(1)?)?;
        (x <= &g[g.len() - 1].0).then_some(g.as_slice())
    }

    /// Exact value at `x ∈ E`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let g = self
            .group_of(x)
            .ok_or_else(|| Error::Domain(format!("{x} is not in {}", self.domain)))?;
        let k = g.partition_point(|(bx, _)| bx <= x);
        let (x0, y0) = &g[k - 1];
        if x0 == x || k == g.len() {
            return Ok(y0.clone());
        }
        let (x1, y1) = &g[k];
        Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    /// The points of `E` whose value lies in `target`.
    pub fn preimage(&self, target: &Interval) -> Region {
        let mut out = Vec::new();
        for g in &self.pieces {
            if g.len() == 1 {
                if target.contains(&g[0].1) {
                    out.push(Interval::point(g[0].0.clone()).expect("domain point"));
                }
                continue;
            }
            for w in g.windows(2) {
                if let Some(i) = segment_preimage(&w[0], &w[1], target) {
                    out.push(i);
                }
            }
        }
        Region::from_intervals(out)
    }

    /// `f⁻¹(S)` for a closed target `S`, as a closed region.
    pub fn preimage_closed(&self, target: &Interval) -> Result<ClosedRegion> {
        ClosedRegion::new(self.preimage(target))
    }

    /// `f⁻¹([t,1])`.
    pub fn upper_set(&self, t: &Rational) -> ClosedRegion {
        let target = Interval::closed(t.clone(), Rational::one()).expect("t in [0,1]");
        ClosedRegion::new_unchecked(self.preimage(&target))
    }

    /// `f(E)`: per component the closed interval between its min and max.
    pub fn image(&self) -> ClosedRegion {
        let spans = self.pieces.iter().map(|g| {
            let lo = g.iter().map(|p| &p.1).min().expect("nonempty").clone();
            let hi = g.iter().map(|p| &p.1).max().expect("nonempty").clone();
            Interval::closed(lo, hi).expect("values in [0,1]")
        });
        ClosedRegion::new_unchecked(Region::from_intervals(spans.collect::<Vec<_>>()))
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    /// The restriction to a closed subset of the domain.
    pub fn restrict(&self, sub: &ClosedRegion) -> Result<Self> {
        if !sub.is_subset(&self.domain) {
            return Err(Error::arg(format!(
                "{sub} is not inside the domain {}",
                self.domain
            )));
        }
        let mut groups = Vec::with_capacity(sub.len());
        for p in sub.parts() {
            let mut g = vec![(p.lo().clone(), self.eval(p.lo())?)];
            let inner = self.group_of(p.lo()).expect("inside the domain");
            g.extend(
                inner
                    .iter()
                    .filter(|(x, _)| x > p.lo() && x < p.hi())
                    .cloned(),
            );
            if !p.is_point() {
                g.push((p.hi().clone(), self.eval(p.hi())?));
            }
            groups.push(g);
        }
        Self::new(sub.clone(), groups)
    }

    /// Union of two functions on disjoint (or touching, with matching values) domains.
    pub fn glue(&self, other: &PLFunction) -> Result<Self> {
        let mut groups = self.pieces.clone();
        groups.extend(other.pieces.iter().cloned());
        Self::from_pieces(groups)
    }
}

fn check_group(g: &[(Rational, Rational)]) -> Result<()> {
    for (x, y) in g {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(Error::input(format!("breakpoint x = {x} is outside [0,1]")));
        }
        if *y < Rational::zero() || *y > Rational::one() {
            return Err(Error::input(format!(
                "value {y} at x = {x} is outside [0,1]"
            )));
        }
    }
    for w in g.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(Error::input(format!(
                "breakpoints must increase strictly ({} then {})",
                w[0].0, w[1].0
            )));
        }
    }
    Ok(())
}

/// Preimage of `target` under the linear map on `[x0,x1]` through the two breakpoints.
fn segment_preimage(
    p: &(Rational, Rational),
    q: &(Rational, Rational),
    target: &Interval,
) -> Option<Interval> {
    let (x0, y0) = p;
    let (x1, y1) = q;
    if y0 == y1 {
        return target
            .contains(y0)
            .then(|| Interval::closed(x0.clone(), x1.clone()).expect("ordered"));
    }
    let at = |t: &Rational| x0 + (t - y0) * (x1 - x0) / (y1 - y0);
    // x-bounds of the preimage before clipping to the segment
    let ((lo, lo_c), (hi, hi_c)) = if y1 > y0 {
        (
            (at(target.lo()), target.lo_closed()),
            (at(target.hi()), target.hi_closed()),
        )
    } else {
        (
            (at(target.hi()), target.hi_closed()),
            (at(target.lo()), target.lo_closed()),
        )
    };
    let (lo, lo_c) = if lo < *x0 {
        (x0.clone(), true)
    } else {
        (lo, lo_c)
    };
    let (hi, hi_c) = if hi > *x1 {
        (x1.clone(), true)
    } else {
        (hi, hi_c)
    };
    if lo > hi || (lo == hi && !(lo_c && hi_c)) {
        return None;
    }
    Some(Interval::new(lo, hi, lo_c, hi_c).expect("clipped to the segment"))
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let pts: Vec<String> = g.iter().map(|(x, y)| format!("({x},{y})")).collect();
            write!(f, "{}", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::region::parse_region;

    fn pts(v: &[(i64, i64, i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter()
            .map(|&(a, b, c, d)| (rat(a, b), rat(c, d)))
            .collect()
    }

    fn tent() -> PLFunction {
        PLFunction::from_pieces(vec![pts(&[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 0, 1)])]).unwrap()
    }

    #[test]
    fn identity_preimage() {
        let f = PLFunction::identity();
        let t = Interval::closed(rat(1, 2), rat(1, 1)).unwrap();
        assert_eq!(f.preimage(&t).to_string(), "[1/2,1]");
        let t = Interval::new(rat(0, 1), rat(1, 4), true, false).unwrap();
        assert_eq!(f.preimage(&t).to_string(), "[0,1/4)");
    }

    #[test]
    fn tent_peak_and_values() {
        let f = tent();
        assert_eq!(
            f.preimage(&Interval::point(rat(1, 1)).unwrap()).to_string(),
            "[1/2,1/2]"
        );
        assert_eq!(f.eval(&rat(1, 4)).unwrap(), rat(1, 2));
        assert_eq!(f.eval(&rat(3, 4)).unwrap(), rat(1, 2));
        let t = Interval::new(rat(1, 2), rat(1, 1), false, true).unwrap();
        assert_eq!(f.preimage(&t).to_string(), "(1/4,3/4)");
        assert_eq!(
            f.preimage(&Interval::point(rat(0, 1)).unwrap()).to_string(),
            "[0,0] u [1,1]"
        );
        assert!(f.is_surjective());
    }

    #[test]
    fn domain_and_gaps() {
        let e = ClosedRegion::new(parse_region("[0,1/4] u [3/4,1]").unwrap()).unwrap();
        let f = PLFunction::new(
            e.clone(),
            vec![
                pts(&[(0, 1, 0, 1), (1, 4, 1, 1)]),
                pts(&[(3, 4, 1, 1), (1, 1, 1, 1)]),
            ],
        )
        .unwrap();
        assert!(matches!(f.eval(&rat(1, 2)), Err(Error::Domain(_))));
        assert_eq!(f.upper_set(&rat(1, 2)).to_string(), "[1/8,1/4] u [3/4,1]");
        // breakpoints that stop short of the component
        let short = PLFunction::new(
            e,
            vec![
                pts(&[(0, 1, 0, 1), (1, 5, 1, 1)]),
                pts(&[(3, 4, 1, 1), (1, 1, 1, 1)]),
            ],
        );
        assert!(matches!(short, Err(Error::InvalidInput(_))));
        let jump = PLFunction::from_pieces(vec![
            pts(&[(0, 1, 0, 1), (1, 2, 1, 2)]),
            pts(&[(1, 2, 1, 1), (1, 1, 1, 1)]),
        ]);
        assert!(matches!(jump, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn point_components() {
        let f = PLFunction::from_pieces(vec![pts(&[(1, 2, 0, 1)])]).unwrap();
        assert_eq!(f.domain().to_string(), "[1/2,1/2]");
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), rat(0, 1));
        assert!(!f.is_surjective());
    }

    #[test]
    fn restrict_and_glue() {
        let f = tent();
        let sub = ClosedRegion::new(parse_region("[1/8,1/4] u [3/4,3/4]").unwrap()).unwrap();
        let r = f.restrict(&sub).unwrap();
        assert_eq!(r.to_string(), "(1/8,1/4) (1/4,1/2) | (3/4,1/2)");
        let g = PLFunction::from_pieces(vec![pts(&[(1, 2, 1, 2), (5, 8, 1, 1)])]).unwrap();
        let glued = r.glue(&g).unwrap();
        assert_eq!(
            glued.domain().to_string(),
            "[1/8,1/4] u [1/2,5/8] u [3/4,3/4]"
        );
        assert!(r.glue(&f).is_err());
    }
}
