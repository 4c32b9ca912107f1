use super::{base_of, check_depth, check_disjoint, FiberTable, DEFAULT_DEPTH_CAP};
use crate::error::Result;
use crate::rational::{approx, check_unit, Dyadic, Rational};
use crate::region::{insert_open, ClosedRegion, OpenRegion};

/// The textbook family indexed by the dyadics `j/2ᵏ`, with `f_k(x)` the
/// smallest index whose set contains `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalFamily {
    a: ClosedRegion,
    b: ClosedRegion,
    depth: u32,
    opens: Vec<(Dyadic, OpenRegion)>,
    top: OpenRegion,
}

/// `U_r = insert_open(closure(U_{r⁻}), U_{r⁺})` for each new dyadic `r` between
/// its neighbours `r⁻ < r < r⁺` of the previous level.
pub fn build_family_classical(
    a: &ClosedRegion,
    b: &ClosedRegion,
    depth: u32,
) -> Result<ClassicalFamily> {
    check_depth(depth, DEFAULT_DEPTH_CAP)?;
    check_disjoint(a, b)?;
    let base = base_of(a, b);
    let top = b.complement();
    let mut opens: Vec<(Dyadic, OpenRegion)> = Vec::new();
    for level in 1..=depth {
        let mut next = Vec::with_capacity(2 * opens.len() + 1);
        for i in 0..=opens.len() {
            let lower = if i == 0 {
                base.clone()
            } else {
                opens[i - 1].1.closure()
            };
            let upper = opens.get(i).map_or(&top, |(_, u)| u);
            let r = Dyadic::new(2 * i as u64 + 1, level)?;
            next.push((r, insert_open(&lower, upper)?));
            if let Some(old) = opens.get(i) {
                next.push(old.clone());
            }
        }
        opens = next;
    }
    Ok(ClassicalFamily {
        a: a.clone(),
        b: b.clone(),
        depth,
        opens,
        top,
    })
}

impl ClassicalFamily {
    pub fn a(&self) -> &ClosedRegion {
        &self.a
    }

    pub fn b(&self) -> &ClosedRegion {
        &self.b
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn base(&self) -> ClosedRegion {
        base_of(&self.a, &self.b)
    }

    pub fn opens(&self) -> &[(Dyadic, OpenRegion)] {
        &self.opens
    }

    pub fn top(&self) -> &OpenRegion {
        &self.top
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Dyadic> {
        check_unit(x)?;
        let xf = approx(x);
        if self.base().contains_filtered(x, xf) {
            return Ok(Dyadic::ZERO);
        }
        Ok(self
            .opens
            .iter()
            .find(|(_, u)| u.contains_filtered(x, xf))
            .map_or(Dyadic::ONE, |(r, _)| *r))
    }

    pub fn fibers(&self) -> FiberTable {
        FiberTable::from_chain(
            self.base().region(),
            self.opens.iter().map(|(r, u)| (*r, u.region())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::region::parse_region;
    use crate::urysohn::verify_classical;

    fn closed(t: &str) -> ClosedRegion {
        ClosedRegion::new(parse_region(t).unwrap()).unwrap()
    }

    #[test]
    fn first_level() {
        let f = build_family_classical(&closed("[0,1/10]"), &closed("[9/10,1]"), 1).unwrap();
        assert_eq!(f.opens().len(), 1);
        assert_eq!(f.opens()[0].1.to_string(), "[0,1/2)");
        assert_eq!(f.evaluate(&rat(1, 50)).unwrap(), Dyadic::ZERO);
        assert_eq!(f.evaluate(&rat(19, 20)).unwrap(), Dyadic::ONE);
    }

    #[test]
    fn deeper_levels_are_ordered_and_verified() {
        let f = build_family_classical(&closed("[0,1/10] u [1/2,3/5]"), &closed("[9/10,1]"), 4)
            .unwrap();
        let values: Vec<u64> = f
            .opens()
            .iter()
            .map(|(r, _)| r.scaled_numer(4).unwrap())
            .collect();
        assert_eq!(values, (1..16).collect::<Vec<_>>());
        let r = verify_classical(&f);
        assert!(r.passed(), "{}", r.render());
    }
}
