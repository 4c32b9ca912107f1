use num_traits::{One, Zero};

use super::interval::Interval;
use super::set::Region;
use super::{ClosedRegion, OpenRegion};
use crate::error::{Error, Result};
use crate::rational::{midpoint, Rational};

/// An open `U` with `C ⊆ U` and `closure(U) ⊆ O`.
///
/// Each side of each component of `C` moves halfway towards the nearest point
/// of `[0,1] ∖ O` on that side; a side with no such point extends to 0 or 1.
/// Overlapping expansions merge.
pub fn insert_open(c: &ClosedRegion, o: &OpenRegion) -> Result<OpenRegion> {
    if !c.is_subset(o) {
        return Err(Error::pre(format!(
            "insert_open: {c} is not contained in {o}"
        )));
    }
    let outside = o.complement();
    let k = outside.parts();
    let mut grown = Vec::with_capacity(c.len());
    for comp in c.parts() {
        let a = comp.lo();
        let b = comp.hi();
        // last complement component entirely left of a
        let left = k.partition_point(|p| p.hi() < a);
        let (lo, lo_closed) = match left.checked_sub(1).map(|i| k[i].hi()) {
            Some(kl) => (midpoint(a, kl), false),
            None => (Rational::zero(), true),
        };
        let right = k.partition_point(|p| p.lo() <= b);
        let (hi, hi_closed) = match k.get(right).map(|p| p.lo()) {
            Some(kr) => (midpoint(b, kr), false),
            None => (Rational::one(), true),
        };
        grown.push(Interval::raw(lo, hi, lo_closed, hi_closed));
    }
    Ok(OpenRegion::new_unchecked(Region::from_intervals(grown)))
}

/// Interior of `c` relative to the subspace `e`: `E ∖ closure(E ∖ C)`.
pub fn relative_interior(c: &ClosedRegion, e: &ClosedRegion) -> Region {
    e.difference(&e.difference(c).closure())
}

/// A closed `Z` with `Y ⊆ int(Z)`, `Z ⊆ U` and `Z ∩ E = C`.
///
/// `C` must be a closed neighbourhood in `E` of `Y ∩ E` lying inside `U ∩ E`.
/// With `O' = U ∖ (E ∖ int_E C)` and `V = insert_open(Y, O')` the witness is
/// `Z = closure(V) ∪ C`.
pub fn insert_with_trace(
    y: &ClosedRegion,
    u: &OpenRegion,
    e: &ClosedRegion,
    c: &ClosedRegion,
) -> Result<ClosedRegion> {
    if !y.is_subset(u) {
        return Err(Error::pre(format!(
            "insert_with_trace: Y = {y} is not contained in U = {u}"
        )));
    }
    if !c.is_subset(e) {
        return Err(Error::pre(format!(
            "insert_with_trace: C = {c} is not contained in E = {e}"
        )));
    }
    if !c.is_subset(u) {
        return Err(Error::pre(format!(
            "insert_with_trace: C = {c} is not contained in U = {u}"
        )));
    }
    let int_c = relative_interior(c, e);
    if !y.intersection(e).is_subset(&int_c) {
        return Err(Error::pre(format!(
            "insert_with_trace: C = {c} is not a neighbourhood in E of Y ∩ E = {}",
            y.intersection(e)
        )));
    }
    // E ∖ int_E(C) is closed because E is
    let shell = ClosedRegion::new_unchecked(e.difference(&int_c));
    let o_prime = u.minus(&shell);
    let v = insert_open(y, &o_prime)?;
    Ok(v.closure().union(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::parse_region;

    fn closed(t: &str) -> ClosedRegion {
        ClosedRegion::new(parse_region(t).unwrap()).unwrap()
    }

    fn open(t: &str) -> OpenRegion {
        OpenRegion::new(parse_region(t).unwrap()).unwrap()
    }

    #[test]
    fn insert_open_examples() {
        assert_eq!(
            insert_open(&closed("[0,1/10]"), &open("[0,9/10)")).unwrap(),
            open("[0,1/2)")
        );
        assert_eq!(
            insert_open(&closed("[0,1/10]"), &open("[0,1/2)")).unwrap(),
            open("[0,3/10)")
        );
        assert!(insert_open(&ClosedRegion::empty(), &open("(1/4,3/4)"))
            .unwrap()
            .is_empty());
        assert!(insert_open(&ClosedRegion::empty(), &OpenRegion::empty())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn insert_open_interior_component() {
        // both sides bounded by the complement
        let u = insert_open(&closed("[2/5,1/2]"), &open("(1/5,4/5)")).unwrap();
        assert_eq!(u, open("(3/10,13/20)"));
        // no complement on the left: extends to 0
        let u = insert_open(&closed("[1/2,1/2]"), &open("[0,3/4)")).unwrap();
        assert_eq!(u, open("[0,5/8)"));
        // expansions that collide merge
        let u = insert_open(&closed("[1/10,1/5] u [1/2,3/5]"), &open("(1/20,7/10)")).unwrap();
        assert_eq!(u, open("(3/40,13/20)"));
    }

    #[test]
    fn insert_open_rejects_non_subset() {
        assert!(matches!(
            insert_open(&closed("[0,1/2]"), &open("[0,1/2)")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trace_examples() {
        let z = insert_with_trace(
            &ClosedRegion::empty(),
            &open("(0,1)"),
            &closed("[1/4,3/4]"),
            &ClosedRegion::empty(),
        )
        .unwrap();
        assert!(z.is_empty());

        let z = insert_with_trace(
            &closed("[9/10,1]"),
            &open("(1/10,1]"),
            &ClosedRegion::full(),
            &closed("[1/2,1]"),
        )
        .unwrap();
        assert_eq!(z, closed("[1/2,1]"));

        let y = closed("[9/10,1]");
        let u = open("(1/10,1]");
        let e = closed("[1/5,3/10]");
        let z = insert_with_trace(&y, &u, &e, &ClosedRegion::empty()).unwrap();
        let expected = insert_open(&y, &u.minus(&e)).unwrap().closure();
        assert_eq!(z, expected);
        assert!(z.intersection(&e).is_empty());
        assert!(y.is_subset(&z.interior()));
        assert!(z.is_subset(&u));
    }

    #[test]
    fn trace_preconditions_are_named() {
        let err = insert_with_trace(
            &closed("[0,1/2]"),
            &open("(1/4,1]"),
            &ClosedRegion::full(),
            &closed("[1/2,1]"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("Y ="));
        let err = insert_with_trace(
            &closed("[9/10,1]"),
            &open("(1/10,1]"),
            &closed("[1/2,1]"),
            &closed("[1/4,1]"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("not contained in E"));
        // C does not cover a neighbourhood of Y ∩ E inside E
        let err = insert_with_trace(
            &closed("[9/10,1]"),
            &open("(1/10,1]"),
            &ClosedRegion::full(),
            &closed("[9/10,1]"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("neighbourhood"));
    }
}
