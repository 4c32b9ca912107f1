// Seeded instance generators and oracles that do not go through the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use staircase::rational::{rat, Rational};
use staircase::region::{ClosedRegion, Interval, Region};
use staircase::tietze::PLFunction;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn closed(parts: &[(i64, i64)], denom: i64) -> ClosedRegion {
    let region = Region::from_intervals(
        parts
            .iter()
            .map(|&(lo, hi)| Interval::closed(rat(lo, denom), rat(hi, denom)).unwrap()),
    );
    ClosedRegion::new(region).unwrap()
}

/// Disjoint nonempty closed sets with at most four intervals each, on the
/// grid k/100, so distinct components are at least 1/100 apart.
pub struct SeparationCase {
    pub a: ClosedRegion,
    pub b: ClosedRegion,
    pub a_parts: Vec<(i64, i64)>,
    pub b_parts: Vec<(i64, i64)>,
}

pub fn separation_case(rng: &mut ChaCha8Rng) -> SeparationCase {
    let na = rng.gen_range(1..=4);
    let nb = rng.gen_range(1..=4);
    let mut labels: Vec<bool> = std::iter::repeat_n(true, na)
        .chain(std::iter::repeat_n(false, nb))
        .collect();
    labels.shuffle(rng);
    let mut cuts: Vec<i64> = index::sample(rng, 101, 2 * (na + nb))
        .into_iter()
        .map(|i| i as i64)
        .collect();
    cuts.sort_unstable();
    let (mut a_parts, mut b_parts) = (Vec::new(), Vec::new());
    for (k, is_a) in labels.into_iter().enumerate() {
        let part = (cuts[2 * k], cuts[2 * k + 1]);
        if is_a {
            a_parts.push(part)
        } else {
            b_parts.push(part)
        }
    }
    SeparationCase {
        a: closed(&a_parts, 100),
        b: closed(&b_parts, 100),
        a_parts,
        b_parts,
    }
}

/// A piecewise-linear function as raw breakpoint lists, one per component,
/// with coordinates on the grid k/40 and values on k/8.
pub struct PLCase {
    pub groups: Vec<Vec<(Rational, Rational)>>,
}

impl PLCase {
    pub fn function(&self) -> PLFunction {
        PLFunction::from_pieces(self.groups.clone()).unwrap()
    }

    pub fn domain_contains(&self, x: &Rational) -> bool {
        self.groups
            .iter()
            .any(|g| &g[0].0 <= x && x <= &g[g.len() - 1].0)
    }

    /// Linear interpolation between the stored breakpoints.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        for g in &self.groups {
            if g.len() == 1 && &g[0].0 == x {
                return Some(g[0].1.clone());
            }
            for w in g.windows(2) {
                let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
                if x0 <= x && x <= x1 {
                    return Some(y0 + (y1 - y0) * (x - x0) / (x1 - x0));
                }
            }
        }
        None
    }
}

/// At most three components and six breakpoints in total. Surjective cases
/// hit both 0 and 1 at breakpoints of one component; the others stay inside [1/8, 7/8] and
/// never cover all of [0,1] with their domain.
pub fn pl_case(rng: &mut ChaCha8Rng, surjective: bool) -> PLCase {
    loop {
        let comps = rng.gen_range(1..=3);
        let mut sizes = vec![2; comps];
        let mut spare = 6 - 2 * comps;
        while spare > 0 && rng.gen_bool(0.5) {
            let i = rng.gen_range(0..comps);
            sizes[i] += 1;
            spare -= 1;
        }
        let total: usize = sizes.iter().sum();
        let mut xs: Vec<i64> = index::sample(rng, 41, total)
            .into_iter()
            .map(|i| i as i64)
            .collect();
        xs.sort_unstable();
        if comps == 1 && xs[0] == 0 && xs[total - 1] == 40 && !surjective {
            continue;
        }
        let mut ys: Vec<i64> = (0..total)
            .map(|_| {
                if surjective {
                    rng.gen_range(0..=8)
                } else {
                    rng.gen_range(1..=7)
                }
            })
            .collect();
        if surjective {
            // 0 and 1 on one component, so the image is all of [0,1]
            let c = rng.gen_range(0..comps);
            let start: usize = sizes[..c].iter().sum();
            let picks = index::sample(rng, sizes[c], 2);
            ys[start + picks.index(0)] = 0;
            ys[start + picks.index(1)] = 8;
        }
        let mut groups = Vec::new();
        let mut k = 0;
        for s in sizes {
            groups.push(
                (k..k + s)
                    .map(|i| (rat(xs[i], 40), rat(ys[i], 8)))
                    .collect(),
            );
            k += s;
        }
        return PLCase { groups };
    }
}

/// Left endpoints of the middle thirds removed at stage `n`, by literally
/// removing them from [0,1], as numerators over 3ⁿ.
pub fn removed_left_endpoints(n: u32) -> Vec<Rational> {
    let mut kept: Vec<(u64, u64)> = vec![(0, 1)];
    let mut scale = 1u64;
    let mut found = Vec::new();
    for stage in 1..=n {
        scale *= 3;
        let mut next = Vec::with_capacity(kept.len() * 2);
        for (lo, hi) in kept {
            let (lo, hi) = (lo * 3, hi * 3);
            let third = (hi - lo) / 3;
            if stage == n {
                found.push(Rational::new(BigInt::from(lo + third), BigInt::from(scale)));
            }
            next.push((lo, lo + third));
            next.push((hi - third, hi));
        }
        kept = next;
    }
    found
}
