//! Nested open families `{U_p}` indexed by Cantor endpoints, and the step
//! functions `F_n = Φ ∘ g` they define.
//!
//! A family of depth `n` carries one open set for every `p ∈ 𝓛₁ ∪ … ∪ 𝓛ₙ`
//! plus `U₁ = [0,1] ∖ B`, with `U₀ = A` kept closed. `g(x)` is the smallest
//! index whose set contains `x`, and `F_n(x) = Φ(g(x))` is a dyadic of level
//! at most `n`.

mod classical;
mod fibers;
mod verify;

pub use classical::{build_family_classical, ClassicalFamily};
pub use fibers::FiberTable;
pub use verify::{verify_classical, verify_family};

use crate::cantor::{
    approach, endpoint_for_value, endpoints_up_to, EndpointIndex, Index, MAX_LEVEL,
};
use crate::error::{Error, Result};
use crate::rational::{approx, check_unit, Dyadic, Rational};
use crate::region::{insert_open, ClosedRegion, OpenRegion, Region};

pub const DEFAULT_DEPTH_CAP: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    a: ClosedRegion,
    b: ClosedRegion,
    depth: u32,
    opens: Vec<(EndpointIndex, OpenRegion)>,
    top: OpenRegion,
}

/// `g(x)` together with `F_n(x) = Φ(g(x))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub g_index: Index,
    pub value: Dyadic,
}

/// Which side of a level a preimage asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `{F_n ≤ ζ}`, the open set `U_α` with `Φ(α) = ζ`.
    Below,
    /// `{F_n > ζ}`, the closed complement of `U_α`.
    Above,
}

pub fn build_family(a: &ClosedRegion, b: &ClosedRegion, depth: u32) -> Result<Family> {
    build_family_with_cap(a, b, depth, DEFAULT_DEPTH_CAP)
}

pub fn build_family_with_cap(
    a: &ClosedRegion,
    b: &ClosedRegion,
    depth: u32,
    cap: u32,
) -> Result<Family> {
    Family::grow(a, b, depth, cap, |lower, upper, _| {
        insert_open(lower, upper)
    })
}

/// The closed set playing `U₀`: `A`, or all of [0,1] when `B` is empty so
/// that `F ≡ 0`.
pub(crate) fn base_of(a: &ClosedRegion, b: &ClosedRegion) -> ClosedRegion {
    if b.is_empty() {
        ClosedRegion::full()
    } else {
        a.clone()
    }
}

pub(crate) fn check_depth(depth: u32, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_LEVEL);
    if depth > cap {
        return Err(Error::DepthLimit { depth, cap });
    }
    Ok(())
}

pub(crate) fn check_disjoint(a: &ClosedRegion, b: &ClosedRegion) -> Result<()> {
    if !a.is_disjoint(b) {
        return Err(Error::input(format!(
            "A = {a} and B = {b} intersect in {}",
            a.intersection(b)
        )));
    }
    Ok(())
}

impl Family {
    /// Stage-by-stage construction. `insert(lower, upper, index)` must return
    /// an open set lying between the closed `lower` and the open `upper`.
    pub(crate) fn grow<F>(
        a: &ClosedRegion,
        b: &ClosedRegion,
        depth: u32,
        cap: u32,
        mut insert: F,
    ) -> Result<Family>
    where
        F: FnMut(&ClosedRegion, &OpenRegion, EndpointIndex) -> Result<OpenRegion>,
    {
        check_depth(depth, cap)?;
        check_disjoint(a, b)?;
        let base = base_of(a, b);
        let top = b.complement();
        let mut opens: Vec<(EndpointIndex, OpenRegion)> = Vec::new();
        if depth >= 1 {
            let first = EndpointIndex::first();
            opens.push((first, insert(&base, &top, first)?));
        }
        for level in 1..depth {
            let mut next = Vec::with_capacity(2 * opens.len() + 1);
            for i in 0..opens.len() {
                let (alpha, u) = &opens[i];
                if alpha.level() != level {
                    next.push(opens[i].clone());
                    continue;
                }
                // list neighbours are p_* and p^* of α in 𝓛_{≤level} ∪ {0,1}
                let lower = if i == 0 {
                    base.clone()
                } else {
                    opens[i - 1].1.closure()
                };
                let upper = opens.get(i + 1).map_or(&top, |(_, r)| r);
                let (q, l) = approach(alpha, 1)?;
                let uq = insert(&lower, u, q)?;
                let ul = insert(&u.closure(), upper, l)?;
                next.push((q, uq));
                next.push(opens[i].clone());
                next.push((l, ul));
            }
            opens = next;
        }
        Ok(Family {
            a: a.clone(),
            b: b.clone(),
            depth,
            opens,
            top,
        })
    }

    /// Reassembles a family from stored parts. The index set and `U₁` are
    /// checked; the nesting is left to [`verify_family`].
    pub fn from_parts(
        a: ClosedRegion,
        b: ClosedRegion,
        depth: u32,
        opens: Vec<(EndpointIndex, OpenRegion)>,
        top: OpenRegion,
    ) -> Result<Family> {
        check_depth(depth, DEFAULT_DEPTH_CAP)?;
        check_disjoint(&a, &b)?;
        let expected = endpoints_up_to(depth)?;
        let got: Vec<EndpointIndex> = opens.iter().map(|(i, _)| *i).collect();
        if got != expected {
            return Err(Error::input(format!(
                "family of depth {depth} needs the {} indices of 𝓛_(≤{depth}) in increasing order",
                expected.len()
            )));
        }
        if top != b.complement() {
            return Err(Error::input(format!(
                "U_1 = {top} is not the complement of B = {b}"
            )));
        }
        Ok(Family {
            a,
            b,
            depth,
            opens,
            top,
        })
    }

    /// Replaces one open set, leaving the rest untouched.
    pub fn with_open(mut self, index: EndpointIndex, region: OpenRegion) -> Result<Family> {
        let slot = self
            .opens
            .iter_mut()
            .find(|(i, _)| *i == index)
            .ok_or_else(|| Error::arg(format!("index {index} is not in the family")))?;
        slot.1 = region;
        Ok(self)
    }

    pub fn a(&self) -> &ClosedRegion {
        &self.a
    }

    pub fn b(&self) -> &ClosedRegion {
        &self.b
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `U₀`: `A`, or [0,1] when `B` is empty.
    pub fn base(&self) -> ClosedRegion {
        base_of(&self.a, &self.b)
    }

    /// `U_p` for `p ∈ 𝓛_{≤n}`, in increasing order of `p`.
    pub fn opens(&self) -> &[(EndpointIndex, OpenRegion)] {
        &self.opens
    }

    /// `U₁ = [0,1] ∖ B`.
    pub fn top(&self) -> &OpenRegion {
        &self.top
    }

    pub fn open(&self, index: &EndpointIndex) -> Option<&OpenRegion> {
        self.opens
            .binary_search_by(|(i, _)| i.cmp(index))
            .ok()
            .map(|k| &self.opens[k].1)
    }

    /// The family of depth `m ≤ n` built from the same data.
    pub fn truncated(&self, m: u32) -> Result<Family> {
        if m > self.depth {
            return Err(Error::arg(format!(
                "cannot truncate depth {} to {m}",
                self.depth
            )));
        }
        let opens = self
            .opens
            .iter()
            .filter(|(i, _)| i.level() <= m)
            .cloned()
            .collect();
        Ok(Family {
            a: self.a.clone(),
            b: self.b.clone(),
            depth: m,
            opens,
            top: self.top.clone(),
        })
    }

    /// `g(x)` by scanning the indices in increasing order.
    pub fn evaluate(&self, x: &Rational) -> Result<Evaluation> {
        check_unit(x)?;
        let xf = approx(x);
        let g_index = if self.base().contains_filtered(x, xf) {
            Index::Zero
        } else {
            self.opens
                .iter()
                .find(|(_, u)| u.contains_filtered(x, xf))
                .map_or(Index::One, |(i, _)| Index::Endpoint(*i))
        };
        Ok(Evaluation {
            g_index,
            value: g_index.phi(),
        })
    }

    /// `{F_n ≤ ζ}` or `{F_n > ζ}` for a dyadic `ζ ∈ (0,1)` of level at most `n`.
    pub fn preimage(&self, side: Side, zeta: Dyadic) -> Result<Region> {
        if zeta.exp() == 0 || zeta.exp() > self.depth {
            return Err(Error::arg(format!(
                "{zeta} is not a dyadic of level 1..={} inside (0,1)",
                self.depth
            )));
        }
        let alpha = endpoint_for_value(zeta)?;
        let u = self.open(&alpha).expect("every level-≤n index is present");
        Ok(match side {
            Side::Below => u.region().clone(),
            Side::Above => u.complement().into_region(),
        })
    }

    /// Fibers of `F_n` from the min-index rule applied region by region.
    pub fn fibers(&self) -> FiberTable {
        FiberTable::from_chain(
            self.base().region(),
            self.opens.iter().map(|(i, u)| (i.phi(), u.region())),
        )
    }

    pub fn image_values(&self) -> std::collections::BTreeSet<Dyadic> {
        self.fibers().image()
    }
}
