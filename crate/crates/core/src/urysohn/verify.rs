use super::{ClassicalFamily, Family, FiberTable, Side};
use crate::rational::Dyadic;
use crate::region::{ClosedRegion, OpenRegion, Region};
use crate::report::{CheckGroup, Report};

/// A closed base, increasing open links and the open top, as seen by the
/// checks shared between the two constructions.
struct Chain<'a> {
    a: &'a ClosedRegion,
    b: &'a ClosedRegion,
    base: ClosedRegion,
    links: Vec<(String, &'a OpenRegion)>,
    top: &'a OpenRegion,
}

impl Chain<'_> {
    /// `(name, closure)` of every member followed by the next member.
    fn steps(&self) -> Vec<(String, ClosedRegion, String, &OpenRegion)> {
        let mut names = vec![("U_0".to_string(), self.base.clone())];
        names.extend(
            self.links
                .iter()
                .map(|(n, u)| (format!("U_{n}"), u.closure())),
        );
        let mut nexts: Vec<(String, &OpenRegion)> = self
            .links
            .iter()
            .map(|(n, u)| (format!("U_{n}"), *u))
            .collect();
        nexts.push(("U_1".to_string(), self.top));
        names
            .into_iter()
            .zip(nexts)
            .map(|((pn, pc), (qn, q))| (pn, pc, qn, q))
            .collect()
    }

    fn nesting(&self) -> CheckGroup {
        let mut g = CheckGroup::new("(a) nesting");
        g.check(self.a.is_subset(&self.base), || {
            format!("A = {} is not inside U_0 = {}", self.a, self.base)
        });
        g.check(*self.top == self.b.complement(), || {
            format!("U_1 = {} is not the complement of B", self.top)
        });
        // consecutive pairs give every pair p < q by transitivity
        let steps = self.steps();
        if steps.iter().all(|(_, pc, _, q)| pc.is_subset(q)) {
            g.checked += steps.len();
            return g.with_note("all pairs by transitivity");
        }
        for (i, (pn, pc, _, _)) in steps.iter().enumerate() {
            for (_, _, qn, q) in &steps[i..] {
                g.check(pc.is_subset(q), || {
                    format!("closure({pn}) = {pc} is not inside {qn} = {q}")
                });
            }
        }
        g
    }

    fn separation(&self, table: &FiberTable) -> CheckGroup {
        let mut g = CheckGroup::new("(b) separation");
        let zero = table.fiber(Dyadic::ZERO);
        let one = table.fiber(Dyadic::ONE);
        g.check(self.a.is_subset(&zero), || {
            format!("A = {} is not inside fiber(0) = {zero}", self.a)
        });
        g.check(self.b.is_subset(&one), || {
            format!("B = {} is not inside fiber(1) = {one}", self.b)
        });
        g
    }

    fn strictness(&self) -> CheckGroup {
        let mut g = CheckGroup::new("(e) strictness");
        if self.a.is_empty() || self.b.is_empty() {
            return g.with_note("skipped: A or B is empty");
        }
        for (pn, pc, qn, q) in self.steps() {
            g.check(!q.is_subset(&pc), || {
                format!("{qn} = {q} adds nothing beyond closure({pn}) = {pc}")
            });
        }
        g
    }
}

/// Fibers must tile [0,1]: sorted components start at 0, meet end to end with
/// exactly one side closed, and finish at 1.
fn partition(table: &FiberTable) -> CheckGroup {
    let mut g = CheckGroup::new("(d) partition");
    let pieces = table.pieces();
    match (pieces.first(), pieces.last()) {
        (Some((first, _)), Some((last, _))) => {
            g.check(
                first.lo() == &crate::rational::zero() && first.lo_closed(),
                || format!("0 is not covered (first component {first})"),
            );
            g.check(
                last.hi() == &crate::rational::one() && last.hi_closed(),
                || format!("1 is not covered (last component {last})"),
            );
        }
        _ => g.check(false, || "no fibers".to_string()),
    }
    for w in pieces.windows(2) {
        let (p, pv) = &w[0];
        let (q, qv) = &w[1];
        let meets = p.hi() == q.lo() && (p.hi_closed() != q.lo_closed());
        g.check(meets, || {
            format!("fiber({pv}) piece {p} and fiber({qv}) piece {q} overlap or leave a gap")
        });
    }
    g
}

fn preimages(fam: &Family, table: &FiberTable) -> CheckGroup {
    let mut g = CheckGroup::new("(c) preimages");
    let levels: Vec<Dyadic> = fam.opens().iter().map(|(a, _)| a.phi()).collect();
    let le = running_unions(table.fibers().iter(), levels.iter(), |v, z| v <= z);
    let mut gt = running_unions(table.fibers().iter().rev(), levels.iter().rev(), |v, z| {
        v > z
    });
    gt.reverse();
    for (((alpha, _), le), gt) in fam.opens().iter().zip(le).zip(gt) {
        let zeta = alpha.phi();
        let below = fam.preimage(Side::Below, zeta).expect("level within depth");
        let above = fam.preimage(Side::Above, zeta).expect("level within depth");
        g.check(below == le, || {
            format!("below {zeta}: U_{alpha} = {below} but {{F <= {zeta}}} = {le}")
        });
        g.check(above == gt, || {
            format!("above {zeta}: complement = {above} but {{F > {zeta}}} = {gt}")
        });
    }
    g
}

/// For each level in turn, the union of the fibers taken so far while `take` holds.
fn running_unions<'a>(
    fibers: impl Iterator<Item = &'a (Dyadic, Region)>,
    levels: impl Iterator<Item = &'a Dyadic>,
    take: impl Fn(Dyadic, Dyadic) -> bool,
) -> Vec<Region> {
    let mut fibers = fibers.peekable();
    let mut acc = Region::empty();
    levels
        .map(|&z| {
            while let Some((_, r)) = fibers.next_if(|(v, _)| take(*v, z)) {
                acc = acc.union(r);
            }
            acc.clone()
        })
        .collect()
}

fn chain_of_family(fam: &Family) -> Chain<'_> {
    Chain {
        a: fam.a(),
        b: fam.b(),
        base: fam.base(),
        links: fam
            .opens()
            .iter()
            .map(|(i, u)| (i.to_string(), u))
            .collect(),
        top: fam.top(),
    }
}

/// Exact checks of the family and of `F_n`: nesting, separation, preimage
/// identities, fiber partition and strictness.
pub fn verify_family(fam: &Family) -> Report {
    let chain = chain_of_family(fam);
    let table = fam.fibers();
    let mut report = Report::new(format!(
        "urysohn family: depth {}, A = {}, B = {}",
        fam.depth(),
        fam.a(),
        fam.b()
    ));
    report.groups.push(chain.nesting());
    report.groups.push(chain.separation(&table));
    report.groups.push(preimages(fam, &table));
    report.groups.push(partition(&table));
    report.groups.push(chain.strictness());
    report
}

/// Nesting, separation and partition checks for the dyadic-indexed family.
pub fn verify_classical(fam: &ClassicalFamily) -> Report {
    let chain = Chain {
        a: fam.a(),
        b: fam.b(),
        base: fam.base(),
        links: fam
            .opens()
            .iter()
            .map(|(r, u)| (r.to_rational().to_string(), u))
            .collect(),
        top: fam.top(),
    };
    let table = fam.fibers();
    let mut report = Report::new(format!(
        "classical family: depth {}, A = {}, B = {}",
        fam.depth(),
        fam.a(),
        fam.b()
    ));
    report.groups.push(chain.nesting());
    report.groups.push(chain.separation(&table));
    report.groups.push(partition(&table));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::EndpointIndex;
    use crate::region::parse_region;
    use crate::urysohn::build_family;

    fn closed(t: &str) -> ClosedRegion {
        ClosedRegion::new(parse_region(t).unwrap()).unwrap()
    }

    #[test]
    fn built_family_passes() {
        for depth in 0..=4 {
            let f = build_family(&closed("[0,1/10]"), &closed("[9/10,1]"), depth).unwrap();
            let r = verify_family(&f);
            assert!(r.passed(), "{}", r.render());
            assert_eq!(r.groups.len(), 5);
        }
    }

    #[test]
    fn widened_open_breaks_nesting() {
        let f = build_family(&closed("[0,1/10]"), &closed("[9/10,1]"), 1).unwrap();
        let wide = OpenRegion::new(parse_region("[0,19/20)").unwrap()).unwrap();
        let f = f.with_open(EndpointIndex::first(), wide).unwrap();
        let r = verify_family(&f);
        assert!(!r.group("(a)").unwrap().passed());
        assert!(r
            .render()
            .contains("closure(U_1/3) = [0,19/20] is not inside U_1 = [0,9/10)"));
        // at depth 2 the widened set also swallows U_7/9
        let f = build_family(&closed("[0,1/10]"), &closed("[9/10,1]"), 2).unwrap();
        let wide = OpenRegion::new(parse_region("[0,19/20)").unwrap()).unwrap();
        let r = verify_family(&f.with_open(EndpointIndex::first(), wide).unwrap());
        let text = r.render();
        assert!(text.contains("closure(U_1/3) = [0,19/20] is not inside U_7/9 = [0,7/10)"));
        assert!(text.contains("closure(U_1/3) = [0,19/20] is not inside U_1 = [0,9/10)"));
        assert!(!text.contains("closure(U_1/9)"));
    }
}
