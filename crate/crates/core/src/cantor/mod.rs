//! The Cantor set, its removed-interval endpoints `𝓛ₙ`, the Cantor function Φ
//! and the dyadic-to-Cantor digit substitution.
//!
//! Everything here is exact. Φ on a rational is read off the eventually
//! periodic ternary expansion: the first digit 1 (if any) pins the plateau,
//! otherwise the digits halve into a periodic binary expansion whose value is
//! summed in closed form.

mod endpoint;
pub mod ternary;

pub use endpoint::{EndpointIndex, Index, MAX_LEVEL};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{Dyadic, Rational};

use self::ternary::{expand, terminating_digits};

/// Largest level [`enumerate_endpoints`] will materialize (`2^(n-1)` entries).
pub const MAX_ENUMERATED_LEVEL: u32 = 24;

/// All of `𝓛ₙ` in increasing order.
pub fn enumerate_endpoints(level: u32) -> Result<Vec<EndpointIndex>> {
    if level < 1 {
        return Err(Error::arg("endpoint level must be at least 1"));
    }
    if level > MAX_ENUMERATED_LEVEL {
        return Err(Error::arg(format!(
            "level {level} would enumerate 2^{} endpoints (cap {MAX_ENUMERATED_LEVEL})",
            level - 1
        )));
    }
    (0..1u64 << (level - 1))
        .map(|w| EndpointIndex::new(level, w))
        .collect()
}

/// `𝓛₁ ∪ … ∪ 𝓛ₙ` in increasing order (empty for `n = 0`).
pub fn endpoints_up_to(depth: u32) -> Result<Vec<EndpointIndex>> {
    if depth > MAX_ENUMERATED_LEVEL {
        return Err(Error::arg(format!(
            "depth {depth} exceeds {MAX_ENUMERATED_LEVEL}"
        )));
    }
    (1..1u64 << depth)
        .map(|k| endpoint_for_value(Dyadic::new(k, depth)?))
        .collect()
}

/// The unique `α ∈ 𝓛` with `Φ(α) = ζ`, for a dyadic `ζ` strictly inside (0,1).
pub fn endpoint_for_value(zeta: Dyadic) -> Result<EndpointIndex> {
    if zeta.exp() == 0 {
        return Err(Error::arg(format!(
            "{zeta} is not a dyadic strictly inside (0,1)"
        )));
    }
    // reduced numerator is odd: ζ = (2w+1)/2ⁿ
    EndpointIndex::new(zeta.exp(), zeta.numer() / 2)
}

/// The Cantor function on a rational point of [0,1].
pub fn phi(x: &Rational) -> Result<Rational> {
    let e = expand(x)?;
    let two = BigInt::from(2);
    if let Some(m) = e.first_one() {
        // plateau: Σ_{k<m} (d_k/2)·2^{-k} + 2^{-m}
        let mut numer = BigInt::zero();
        for k in 1..m {
            numer = numer * &two + BigInt::from(e.digit(k) / 2);
        }
        numer = numer * &two + 1;
        return Ok(Rational::new(numer, two.pow(m as u32)));
    }
    // Cantor point: binary digits d_k/2, prefix then period
    let bits = |ds: &[u8]| {
        ds.iter()
            .fold(BigInt::zero(), |acc, d| acc * 2 + BigInt::from(d / 2))
    };
    let pre = bits(&e.prefix);
    let per = bits(&e.period);
    let s = two.pow(e.prefix.len() as u32);
    let t = two.pow(e.period.len() as u32) - BigInt::one();
    Ok(Rational::new(pre, s.clone()) + Rational::new(per, s * t))
}

/// Cantor point whose ternary digits are the binary digits of `d` with 1 replaced by 2.
pub fn gamma(d: Dyadic) -> Rational {
    if d == Dyadic::ONE {
        // 0.111…₂ ↦ 0.222…₃
        return Rational::one();
    }
    let e = d.exp();
    let three = BigInt::from(3);
    let mut numer = BigInt::zero();
    for i in 1..=e {
        let bit = (d.numer() >> (e - i)) & 1;
        numer = numer * &three + BigInt::from(2 * bit);
    }
    Rational::new(numer, three.pow(e))
}

/// The sequences `q_k = α − 2·3^{−n−k}` and `ℓ_k = β + 3^{−n−k}`, both in `𝓛_{n+k}`.
pub fn approach(e: &EndpointIndex, k: u32) -> Result<(EndpointIndex, EndpointIndex)> {
    if k < 1 {
        return Err(Error::arg("approach step k must be at least 1"));
    }
    // q_k = 0.P 0 2^{k-1} 1₃ and ℓ_k = 0.P 2 0^{k-1} 1₃
    let q = e.extend(0, 2, k - 1)?;
    let l = e.extend(2, 0, k - 1)?;
    Ok((q, l))
}

/// Consecutive neighbours `p_* < α` and `p^* > β` of `α ∈ 𝓛ₙ` in `𝓛_{≤n} ∪ {0, 1}`.
pub fn neighbors(e: &EndpointIndex) -> (Index, Index) {
    let n = e.level();
    let w = e.word();
    let below = if w == 0 {
        Index::Zero
    } else {
        // drop the trailing zeros and the last 2
        let t = w.trailing_zeros();
        Index::Endpoint(EndpointIndex::new(n - 1 - t, w >> (t + 1)).expect("shorter prefix"))
    };
    let all_twos = (1u64 << (n - 1)) - 1;
    let above = if w == all_twos {
        Index::One
    } else {
        let t = w.trailing_ones();
        Index::Endpoint(EndpointIndex::new(n - 1 - t, w >> (t + 1)).expect("shorter prefix"))
    };
    (below, above)
}

/// Membership in the Cantor set: some ternary expansion of `x` avoids the digit 1.
pub fn in_cantor(x: &Rational) -> Result<bool> {
    let e = expand(x)?;
    if e.first_one().is_none() {
        return Ok(true);
    }
    Ok(match terminating_digits(x) {
        Some(d) => !d.contains(&1),
        None => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn values(level: u32) -> Vec<Rational> {
        enumerate_endpoints(level)
            .unwrap()
            .iter()
            .map(|e| e.alpha())
            .collect()
    }

    /// Brute force: every word over {0,2} of length n−1 followed by the digit 1.
    fn brute_force_level(n: u32) -> Vec<Rational> {
        let mut out = Vec::new();
        for mask in 0..1u32 << (n - 1) {
            let mut v = Rational::zero();
            let mut scale = Rational::one();
            for k in 0..n - 1 {
                scale /= BigInt::from(3);
                if mask >> (n - 2 - k) & 1 == 1 {
                    v += &scale * BigInt::from(2);
                }
            }
            scale /= BigInt::from(3);
            v += scale;
            out.push(v);
        }
        out.sort();
        out
    }

    #[test]
    fn first_levels() {
        assert_eq!(values(1), vec![rat(1, 3)]);
        assert_eq!(values(2), vec![rat(1, 9), rat(7, 9)]);
        assert_eq!(
            values(3),
            vec![rat(1, 27), rat(7, 27), rat(19, 27), rat(25, 27)]
        );
        for n in 1..=8 {
            assert_eq!(values(n), brute_force_level(n));
        }
        assert!(enumerate_endpoints(0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&rat(0, 1)).unwrap(), rat(0, 1));
        assert_eq!(phi(&rat(1, 1)).unwrap(), rat(1, 1));
        assert_eq!(phi(&rat(1, 3)).unwrap(), rat(1, 2));
        assert_eq!(phi(&rat(7, 9)).unwrap(), rat(3, 4));
        assert_eq!(phi(&rat(1, 2)).unwrap(), rat(1, 2));
        // 1/4 = 0.(02)₃ ↦ 0.(01)₂ = 1/3
        assert_eq!(phi(&rat(1, 4)).unwrap(), rat(1, 3));
        assert!(phi(&rat(3, 2)).is_err());
    }

    #[test]
    fn phi_of_one_third_matches_series() {
        // 1/3 = 0.0222…₃, Φ = Σ_{k≥2} 2^{-k} = 1/2
        let mut partial = Rational::zero();
        for k in 2..60u32 {
            partial += Rational::new(BigInt::one(), BigInt::from(2).pow(k));
        }
        let exact = phi(&rat(1, 3)).unwrap();
        assert!(&exact - &partial < Rational::new(BigInt::one(), BigInt::from(2).pow(58)));
        assert!(partial < exact);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(Dyadic::ZERO), rat(0, 1));
        assert_eq!(gamma(Dyadic::new(3, 2).unwrap()), rat(8, 9));
        assert_eq!(gamma(Dyadic::new(1, 1).unwrap()), rat(2, 3));
        assert_eq!(gamma(Dyadic::ONE), rat(1, 1));
        assert_eq!(phi(&rat(8, 9)).unwrap(), rat(3, 4));
        assert_eq!(phi(&rat(2, 3)).unwrap(), rat(1, 2));
    }

    #[test]
    fn approach_examples() {
        let third = EndpointIndex::first();
        let (q, l) = approach(&third, 1).unwrap();
        assert_eq!((q.alpha(), l.alpha()), (rat(1, 9), rat(7, 9)));
        let (q, l) = approach(&third, 2).unwrap();
        assert_eq!((q.alpha(), l.alpha()), (rat(7, 27), rat(19, 27)));
        let ninth = EndpointIndex::from_prefix("0").unwrap();
        let (q, l) = approach(&ninth, 1).unwrap();
        assert_eq!((q.alpha(), l.alpha()), (rat(1, 27), rat(7, 27)));
        assert!(approach(&ninth, 0).is_err());
    }

    #[test]
    fn approach_matches_formula() {
        for n in 1..=5 {
            for e in enumerate_endpoints(n).unwrap() {
                for k in 1..=5u32 {
                    let (q, l) = approach(&e, k).unwrap();
                    let step = Rational::new(BigInt::one(), BigInt::from(3).pow(n + k));
                    assert_eq!(q.alpha(), e.alpha() - &step * BigInt::from(2));
                    assert_eq!(l.alpha(), e.beta() + &step);
                    assert_eq!(q.level(), n + k);
                    assert_eq!(l.level(), n + k);
                }
            }
        }
    }

    #[test]
    fn neighbor_examples() {
        let third = EndpointIndex::first();
        assert_eq!(neighbors(&third), (Index::Zero, Index::One));
        let seven_ninths = EndpointIndex::from_prefix("2").unwrap();
        assert_eq!(
            neighbors(&seven_ninths),
            (Index::Endpoint(third), Index::One)
        );
        let ninth = EndpointIndex::from_prefix("0").unwrap();
        assert_eq!(neighbors(&ninth), (Index::Zero, Index::Endpoint(third)));
    }

    #[test]
    fn neighbors_match_sorted_merge() {
        for n in 1..=7 {
            let mut all: Vec<Rational> = vec![Rational::zero(), Rational::one()];
            for j in 1..=n {
                all.extend(values(j));
            }
            all.sort();
            for e in enumerate_endpoints(n).unwrap() {
                let pos = all.iter().position(|v| *v == e.alpha()).unwrap();
                let (lo, hi) = neighbors(&e);
                assert_eq!(lo.value(), all[pos - 1]);
                assert_eq!(hi.value(), all[pos + 1]);
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(in_cantor(&rat(1, 3)).unwrap());
        assert!(!in_cantor(&rat(1, 2)).unwrap());
        assert!(in_cantor(&rat(1, 4)).unwrap());
        assert!(in_cantor(&rat(2, 3)).unwrap());
        assert!(in_cantor(&rat(0, 1)).unwrap());
        assert!(in_cantor(&rat(1, 1)).unwrap());
        assert!(!in_cantor(&rat(4, 9)).unwrap());
        assert!(in_cantor(&rat(3, 4)).unwrap());
        assert!(in_cantor(&rat(3, 1)).is_err());
    }

    #[test]
    fn value_lookup_inverts_phi() {
        for e in endpoints_up_to(6).unwrap() {
            assert_eq!(endpoint_for_value(e.phi()).unwrap(), e);
        }
        assert!(endpoint_for_value(Dyadic::ONE).is_err());
    }
}
