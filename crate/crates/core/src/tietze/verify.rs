use num_traits::{Signed, Zero};

use super::{Evaluator, Extension, GluedExtension, PLFunction, SurjectiveExtension};
use crate::rational::{rat, Dyadic, Rational};
use crate::region::Interval;
use crate::report::{CheckGroup, Report};
use crate::urysohn::verify_family;

/// Checks an extension exactly: the family checks, the traces
/// `([0,1] ∖ U_q) ∩ E = f⁻¹([Φ(q),1])`, the bound `|F_n − f| ≤ 2⁻ⁿ` on `E`
/// (per fiber and on the grid `k/grid`), and for glued inputs the ramp and
/// gluing conditions.
pub fn verify_extension(ext: &Extension, grid: u32) -> Report {
    match ext {
        Extension::Restriction(h) => {
            let mut r = Report::new("tietze extension: restriction");
            r.notes
                .push("E = [0,1]: the input is its own extension".into());
            let mut g = CheckGroup::new("(r) domain");
            g.check(h.domain().is_full(), || {
                format!("domain {} is not [0,1]", h.domain())
            });
            r.groups.push(g);
            r
        }
        Extension::Surjective(s) => {
            let mut r = Report::new(format!(
                "tietze extension: surjective input, depth {}",
                s.depth()
            ));
            push_case_one(&mut r, s, grid);
            r
        }
        Extension::Glued(g) => {
            let mut r = Report::new(format!(
                "tietze extension: glued input, depth {}",
                g.inner().depth()
            ));
            r.notes.push(format!(
                "f is not surjective (f(E) = {}); routed through the gluing construction",
                g.input().image()
            ));
            r.groups.push(gluing(g));
            push_case_one(&mut r, g.inner(), grid);
            r
        }
    }
}

fn push_case_one(r: &mut Report, s: &SurjectiveExtension, grid: u32) {
    r.groups.extend(verify_family(s.family()).groups);
    r.groups.push(traces(s));
    let (g, note) = agreement(s, grid);
    r.notes.push(note);
    r.groups.push(g);
}

fn traces(s: &SurjectiveExtension) -> CheckGroup {
    let mut g = CheckGroup::new("(f) traces");
    let e = s.function().domain();
    for (q, u) in s.family().opens() {
        let t = q.phi().to_rational();
        let got = u.complement().intersection(e);
        let want = s.function().upper_set(&t);
        g.check(got == want, || {
            format!("complement(U_{q}) ∩ E = {got} but f⁻¹([{t},1]) = {want}")
        });
    }
    g
}

fn agreement(s: &SurjectiveExtension, grid: u32) -> (CheckGroup, String) {
    let mut g = CheckGroup::new("(g) agreement on E");
    let f = s.function();
    let e = f.domain();
    let step = Dyadic::new(1, s.depth())
        .expect("bounded depth")
        .to_rational();
    // on each fiber of value v, f must lie in [v − 2⁻ⁿ, v]
    for (v, region) in s.fibers().fibers() {
        let part = region.intersection(e);
        if part.is_empty() {
            continue;
        }
        let v = v.to_rational();
        let lo = (&v - &step).max(Rational::zero());
        let band = f.preimage(&Interval::closed(lo.clone(), v.clone()).expect("inside [0,1]"));
        g.check(part.is_subset(&band), || {
            format!("on {part} (F = {v}) f leaves [{lo},{v}]")
        });
    }
    let mut worst = Rational::zero();
    for k in 0..=grid.max(1) {
        let x = rat(i64::from(k), i64::from(grid.max(1)));
        if !e.contains(&x) {
            continue;
        }
        let dev = (s.value_at(&x).expect("x in [0,1]") - f.eval(&x).expect("x in E")).abs();
        g.check(dev <= step, || format!("|F - f| = {dev} at x = {x}"));
        if dev > worst {
            worst = dev;
        }
    }
    (g, format!("max on-E grid deviation {worst} (bound {step})"))
}

fn gluing(g: &GluedExtension) -> CheckGroup {
    let mut c = CheckGroup::new("(h) gluing");
    let e = g.input().domain();
    let (v1, v2, phi, glued) = (g.v1(), g.v2(), g.ramp(), g.glued());
    c.check(e.is_subset(v1), || {
        format!("E = {e} is not inside V1 = {v1}")
    });
    c.check(v1.closure().is_subset(v2), || {
        format!("closure(V1) is not inside V2 = {v2}")
    });
    c.check(!v2.is_full(), || "V2 is all of [0,1]".into());
    let zeros = phi.preimage(&Interval::point(rat(0, 1)).expect("point"));
    let ones = phi.preimage(&Interval::point(rat(1, 1)).expect("point"));
    c.check(v1.closure().is_subset(&zeros), || {
        format!("phi is not 0 on closure(V1) = {}", v1.closure())
    });
    c.check(v2.complement().is_subset(&ones), || {
        format!("phi is not 1 off V2 = {v2}")
    });
    let expected_domain = e.union(&v2.closure().minus(v1));
    c.check(glued.domain() == &expected_domain, || {
        format!(
            "glued domain {} differs from E u (closure(V2) minus V1) = {expected_domain}",
            glued.domain()
        )
    });
    c.check(restricts_to(glued, g.input()), || {
        "glued f differs from h on E".into()
    });
    c.check(glued.is_surjective(), || {
        format!("glued f is not surjective (image {})", glued.image())
    });
    c
}

fn restricts_to(glued: &PLFunction, h: &PLFunction) -> bool {
    glued
        .restrict(h.domain())
        .is_ok_and(|r| same_function(&r, h))
}

/// Equal as functions: same domain and same values at every breakpoint of either.
fn same_function(a: &PLFunction, b: &PLFunction) -> bool {
    a.domain() == b.domain()
        && a.pieces()
            .iter()
            .chain(b.pieces())
            .flatten()
            .all(|(x, _)| a.eval(x).ok() == b.eval(x).ok())
}
