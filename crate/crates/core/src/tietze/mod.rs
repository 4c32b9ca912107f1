//! Extending a continuous piecewise-linear `f: E → [0,1]` from a closed
//! `E ⊆ [0,1]` to all of [0,1].
//!
//! A surjective `f` is handled directly: the nested family is grown with every
//! insertion pinned to `E`, so that `[0,1] ∖ U_q` meets `E` exactly in
//! `f⁻¹([Φ(q),1])`. Any other `h` is first glued to a piecewise-linear ramp
//! outside a neighbourhood of `E`, which makes it surjective.

mod pl;
mod verify;

pub use pl::PLFunction;
pub use verify::verify_extension;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::region::{
    insert_open, insert_with_trace, relative_interior, ClosedRegion, Interval, OpenRegion, Region,
};
use crate::urysohn::{Evaluation, Family, FiberTable, DEFAULT_DEPTH_CAP};

/// Anything that can be evaluated exactly on (part of) [0,1].
pub trait Evaluator {
    fn value_at(&self, x: &Rational) -> Result<Rational>;
}

impl Evaluator for PLFunction {
    fn value_at(&self, x: &Rational) -> Result<Rational> {
        self.eval(x)
    }
}

impl Evaluator for Family {
    fn value_at(&self, x: &Rational) -> Result<Rational> {
        Ok(self.evaluate(x)?.value.to_rational())
    }
}

/// A surjective `f` together with the trace-constrained family whose `F_n`
/// extends it up to `2⁻ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectiveExtension {
    f: PLFunction,
    family: Family,
}

impl SurjectiveExtension {
    /// Reassembles an extension from stored parts; checks are left to
    /// [`verify_extension`].
    pub fn from_parts(f: PLFunction, family: Family) -> Result<Self> {
        if family.a() != &f.preimage_closed(&Interval::point(Rational::zero())?)?
            || family.b() != &f.preimage_closed(&Interval::point(Rational::one())?)?
        {
            return Err(Error::input("family sets A, B are not f⁻¹(0), f⁻¹(1)"));
        }
        Ok(SurjectiveExtension { f, family })
    }

    pub fn function(&self) -> &PLFunction {
        &self.f
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn depth(&self) -> u32 {
        self.family.depth()
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Evaluation> {
        self.family.evaluate(x)
    }

    pub fn fibers(&self) -> FiberTable {
        self.family.fibers()
    }
}

impl Evaluator for SurjectiveExtension {
    fn value_at(&self, x: &Rational) -> Result<Rational> {
        self.family.value_at(x)
    }
}

pub fn extend_surjective(f: &PLFunction, depth: u32) -> Result<SurjectiveExtension> {
    extend_surjective_with_cap(f, depth, DEFAULT_DEPTH_CAP)
}

pub fn extend_surjective_with_cap(
    f: &PLFunction,
    depth: u32,
    cap: u32,
) -> Result<SurjectiveExtension> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective(format!("f(E) = {}", f.image())));
    }
    let a = f.preimage_closed(&Interval::point(Rational::zero())?)?;
    let b = f.preimage_closed(&Interval::point(Rational::one())?)?;
    let e = f.domain();
    // points of E that are not interior in [0,1]
    let rim = e.minus(&e.interior());
    let family = Family::grow(&a, &b, depth, cap, |lower, upper, q| {
        let c = f.upper_set(&q.phi().to_rational());
        // where E is thin, C's relative interior must also be interior to Z
        let extra = ClosedRegion::new(rim.region().intersection(&relative_interior(&c, e)))?;
        let y = upper.complement().union(&extra);
        let z = insert_with_trace(&y, &lower.complement(), e, &c)?;
        Ok(z.complement())
    })?;
    Ok(SurjectiveExtension {
        f: f.clone(),
        family,
    })
}

/// Case II data: the ramp `φ` (0 on `closure(V₁)`, 1 off `V₂`) glued to `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedExtension {
    h: PLFunction,
    v1: OpenRegion,
    v2: OpenRegion,
    phi: PLFunction,
    inner: SurjectiveExtension,
}

impl GluedExtension {
    pub fn from_parts(
        h: PLFunction,
        v1: OpenRegion,
        v2: OpenRegion,
        inner: SurjectiveExtension,
    ) -> Result<Self> {
        let phi = ramp(&v1, &v2)?;
        Ok(GluedExtension {
            h,
            v1,
            v2,
            phi,
            inner,
        })
    }

    pub fn input(&self) -> &PLFunction {
        &self.h
    }

    pub fn v1(&self) -> &OpenRegion {
        &self.v1
    }

    pub fn v2(&self) -> &OpenRegion {
        &self.v2
    }

    /// `φ` on all of [0,1].
    pub fn ramp(&self) -> &PLFunction {
        &self.phi
    }

    /// The glued, surjective function handed to Case I.
    pub fn glued(&self) -> &PLFunction {
        self.inner.function()
    }

    pub fn inner(&self) -> &SurjectiveExtension {
        &self.inner
    }
}

/// The result of extending a function, by route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// `E = [0,1]`: the function is its own extension.
    Restriction(PLFunction),
    /// Case I on a surjective input.
    Surjective(SurjectiveExtension),
    /// Case II: glued, then Case I.
    Glued(Box<GluedExtension>),
}

impl Extension {
    /// The function that was extended.
    pub fn input(&self) -> &PLFunction {
        match self {
            Extension::Restriction(h) => h,
            Extension::Surjective(s) => s.function(),
            Extension::Glued(g) => g.input(),
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match self {
            Extension::Restriction(_) => None,
            Extension::Surjective(s) => Some(s.family()),
            Extension::Glued(g) => Some(g.inner().family()),
        }
    }

    pub fn route(&self) -> &'static str {
        match self {
            Extension::Restriction(_) => "restriction",
            Extension::Surjective(_) => "surjective",
            Extension::Glued(_) => "glued",
        }
    }

    /// Level sets of the extension, when it is a step function.
    pub fn fibers(&self) -> Option<FiberTable> {
        self.family().map(Family::fibers)
    }
}

impl Evaluator for Extension {
    fn value_at(&self, x: &Rational) -> Result<Rational> {
        match self {
            Extension::Restriction(h) => h.eval(x),
            Extension::Surjective(s) => s.value_at(x),
            Extension::Glued(g) => g.inner().value_at(x),
        }
    }
}

/// Case I when `f` is surjective, otherwise [`extend_general`].
pub fn extend(f: &PLFunction, depth: u32) -> Result<Extension> {
    if f.is_surjective() {
        return Ok(Extension::Surjective(extend_surjective(f, depth)?));
    }
    extend_general(f, depth)
}

pub fn extend_general(h: &PLFunction, depth: u32) -> Result<Extension> {
    let e = h.domain();
    if e.is_empty() {
        return Err(Error::input("cannot extend a function with empty domain"));
    }
    if e.is_full() {
        return Ok(Extension::Restriction(h.clone()));
    }
    let mut delta = rat(1, 4);
    let v2 = loop {
        let v = thicken(e, &delta);
        if !v.is_full() {
            break v;
        }
        delta /= Rational::from_integer(2.into());
    };
    let v1 = insert_open(e, &v2)?;
    let phi = ramp(&v1, &v2)?;
    let shell = v2.closure().minus(&v1);
    let glued = phi.restrict(&shell)?.glue(h)?;
    let inner = extend_surjective(&glued, depth)?;
    Ok(Extension::Glued(Box::new(GluedExtension {
        h: h.clone(),
        v1,
        v2,
        phi,
        inner,
    })))
}

/// `{x : dist(x, E) < δ}`.
fn thicken(e: &ClosedRegion, delta: &Rational) -> OpenRegion {
    let zero = Rational::zero();
    let one = Rational::one();
    let parts = e.parts().iter().map(|p| {
        let lo = (p.lo() - delta).max(zero.clone());
        let hi = (p.hi() + delta).min(one.clone());
        let (lc, hc) = (lo == zero, hi == one);
        Interval::new(lo, hi, lc, hc).expect("inside [0,1]")
    });
    OpenRegion::new(Region::from_intervals(parts.collect::<Vec<_>>()))
        .expect("open by construction")
}

/// Piecewise-linear `φ` on [0,1]: 0 on `closure(V₁)`, 1 off `V₂`, linear
/// between neighbouring anchors and constant beyond the outermost ones.
fn ramp(v1: &OpenRegion, v2: &OpenRegion) -> Result<PLFunction> {
    let zero_set = v1.closure();
    let one_set = v2.complement();
    if !zero_set.is_disjoint(&one_set) {
        return Err(Error::pre(format!(
            "closure(V1) = {zero_set} meets the complement of V2"
        )));
    }
    let mut anchors: Vec<(Rational, Rational)> = Vec::new();
    for (set, v) in [(&zero_set, Rational::zero()), (&one_set, Rational::one())] {
        for p in set.parts() {
            anchors.push((p.lo().clone(), v.clone()));
            if !p.is_point() {
                anchors.push((p.hi().clone(), v.clone()));
            }
        }
    }
    anchors.sort_by(|a, b| a.0.cmp(&b.0));
    let (first, last) = match (anchors.first(), anchors.last()) {
        (Some(f), Some(l)) => (f.clone(), l.clone()),
        _ => return Err(Error::pre("the ramp needs a nonempty V1 or a proper V2")),
    };
    if !first.0.is_zero() {
        anchors.insert(0, (Rational::zero(), first.1));
    }
    if !last.0.is_one() {
        anchors.push((Rational::one(), last.1));
    }
    PLFunction::from_pieces(vec![anchors])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::parse_region;
    use num_traits::Signed;

    fn closed(t: &str) -> ClosedRegion {
        ClosedRegion::new(parse_region(t).unwrap()).unwrap()
    }

    fn trace(ext: &SurjectiveExtension, prefix: &str) -> String {
        let q = crate::cantor::EndpointIndex::from_prefix(prefix).unwrap();
        let u = ext.family().open(&q).unwrap();
        u.complement()
            .intersection(ext.function().domain())
            .to_string()
    }

    #[test]
    fn identity_traces() {
        let ext = extend_surjective(&PLFunction::identity(), 2).unwrap();
        assert_eq!(trace(&ext, ""), "[1/2,1]");
        assert_eq!(trace(&ext, "0"), "[1/4,1]");
        assert_eq!(trace(&ext, "2"), "[3/4,1]");
    }

    #[test]
    fn two_component_trace() {
        let e = closed("[0,1/4] u [3/4,1]");
        let f = PLFunction::new(
            e,
            vec![
                vec![(rat(0, 1), rat(0, 1)), (rat(1, 4), rat(1, 1))],
                vec![(rat(3, 4), rat(1, 1)), (rat(1, 1), rat(1, 1))],
            ],
        )
        .unwrap();
        let ext = extend_surjective(&f, 1).unwrap();
        assert_eq!(trace(&ext, ""), "[1/8,1/4] u [3/4,1]");
        let ext = extend_surjective(&f, 0).unwrap();
        assert!(ext.family().opens().is_empty());
    }

    #[test]
    fn non_surjective_is_rejected() {
        let f = PLFunction::constant(&closed("[2/5,3/5]"), rat(1, 2)).unwrap();
        assert!(matches!(
            extend_surjective(&f, 2),
            Err(Error::NotSurjective(_))
        ));
    }

    #[test]
    fn constant_half_is_glued() {
        let h = PLFunction::constant(&closed("[2/5,3/5]"), rat(1, 2)).unwrap();
        let ext = extend_general(&h, 2).unwrap();
        let Extension::Glued(g) = &ext else {
            panic!("expected Case II")
        };
        assert!(g.glued().is_surjective());
        assert!(!g.v2().is_full());
        for k in 0..=20 {
            let x = rat(2, 5) + rat(k, 100);
            let v = ext.value_at(&x).unwrap();
            assert!((v - rat(1, 2)).abs() <= rat(1, 4), "x = {x}");
        }
        let image = ext.fibers().unwrap().image();
        assert_eq!(image.len(), 5);
    }

    #[test]
    fn full_domain_is_returned() {
        let h = PLFunction::constant(&ClosedRegion::full(), rat(1, 3)).unwrap();
        assert_eq!(extend_general(&h, 3).unwrap(), Extension::Restriction(h));
    }

    #[test]
    fn point_domain() {
        let h = PLFunction::constant(&closed("[1/2,1/2]"), rat(0, 1)).unwrap();
        let Extension::Glued(g) = extend_general(&h, 1).unwrap() else {
            panic!("expected Case II")
        };
        assert_eq!(g.glued().eval(&rat(1, 2)).unwrap(), rat(0, 1));
        let outside = g.v2().complement();
        let x = outside.sample_point().unwrap();
        assert_eq!(g.ramp().eval(&x).unwrap(), rat(1, 1));
        assert!(extend_general(&PLFunction::from_pieces(vec![]).unwrap(), 1).is_err());
    }
}
