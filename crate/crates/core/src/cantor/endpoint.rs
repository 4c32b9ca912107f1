use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{Dyadic, Rational, MAX_DYADIC_EXP};

/// Deepest level an [`EndpointIndex`] can address.
pub const MAX_LEVEL: u32 = MAX_DYADIC_EXP;

/// Left endpoint `α = 0.a₁…a_{n-1}1₃` of an interval removed at stage `n` of
/// the Cantor construction, identified by its level and its prefix word over
/// `{0, 2}`.
///
/// The prefix is packed into `word`: bit `n-1-k` set means `a_k = 2`, so the
/// first digit is the most significant bit and numeric order of words at a
/// fixed level is the order of the endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EndpointIndex {
    level: u32,
    word: u64,
}

impl EndpointIndex {
    pub fn new(level: u32, word: u64) -> Result<Self> {
        if level == 0 || level > MAX_LEVEL {
            return Err(Error::arg(format!(
                "endpoint level {level} is outside 1..={MAX_LEVEL}"
            )));
        }
        if level < 64 && word >> (level - 1) != 0 {
            return Err(Error::arg(format!(
                "prefix word {word:#b} is longer than {} digits",
                level - 1
            )));
        }
        Ok(EndpointIndex { level, word })
    }

    /// Builds the index from a prefix string such as `"02"`.
    pub fn from_prefix(prefix: &str) -> Result<Self> {
        let mut word = 0u64;
        for (i, c) in prefix.chars().enumerate() {
            let bit = match c {
                '0' => 0,
                '2' => 1,
                _ => {
                    return Err(Error::Parse {
                        column: i + 1,
                        message: format!("prefix digit `{c}` is not 0 or 2"),
                    })
                }
            };
            if i as u32 + 1 >= MAX_LEVEL {
                return Err(Error::arg("prefix too long"));
            }
            word = (word << 1) | bit;
        }
        EndpointIndex::new(prefix.chars().count() as u32 + 1, word)
    }

    /// The single element of `𝓛₁`, namely 1/3.
    pub fn first() -> Self {
        EndpointIndex { level: 1, word: 0 }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    /// Prefix digits `a₁ … a_{n-1}`, each 0 or 2.
    pub fn digits(&self) -> Vec<u8> {
        (1..self.level).map(|k| self.digit(k)).collect()
    }

    /// Prefix digit `a_k` for `1 ≤ k < level`.
    pub fn digit(&self, k: u32) -> u8 {
        debug_assert!(k >= 1 && k < self.level);
        if (self.word >> (self.level - 1 - k)) & 1 == 1 {
            2
        } else {
            0
        }
    }

    pub fn prefix(&self) -> String {
        self.digits()
            .iter()
            .map(|d| if *d == 2 { '2' } else { '0' })
            .collect()
    }

    /// `α⁽ⁿ⁾`.
    pub fn alpha(&self) -> Rational {
        // α = (Σ 2·b_k·3^{n-k} + 1) / 3^n
        let three = BigInt::from(3);
        let mut numer = BigInt::from(0);
        for k in 1..self.level {
            numer = numer * &three + BigInt::from(self.digit(k));
        }
        numer = numer * &three + 1;
        Rational::new(numer, three.pow(self.level))
    }

    /// `β⁽ⁿ⁾ = α⁽ⁿ⁾ + 3⁻ⁿ`.
    pub fn beta(&self) -> Rational {
        self.alpha() + Rational::new(BigInt::from(1), BigInt::from(3).pow(self.level))
    }

    /// Value of the Cantor function on `[α, β]`: `(2·word + 1) / 2ⁿ`.
    pub fn phi(&self) -> Dyadic {
        Dyadic::new(2 * self.word + 1, self.level).expect("level bounded by MAX_LEVEL")
    }

    /// Appends `digit` and then `tail_len` copies of `tail` to the prefix.
    pub(crate) fn extend(&self, digit: u8, tail: u8, tail_len: u32) -> Result<Self> {
        let bit = |d: u8| u64::from(d == 2);
        let mut word = (self.word << 1) | bit(digit);
        for _ in 0..tail_len {
            word = (word << 1) | bit(tail);
        }
        EndpointIndex::new(self.level + 1 + tail_len, word)
    }
}

impl Ord for EndpointIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.phi().cmp(&other.phi())
    }
}

impl PartialOrd for EndpointIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EndpointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha())
    }
}

#[derive(Serialize, Deserialize)]
struct EndpointRepr {
    level: u32,
    prefix: String,
}

impl Serialize for EndpointIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EndpointRepr {
            level: self.level,
            prefix: self.prefix(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EndpointIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = EndpointRepr::deserialize(d)?;
        let idx = EndpointIndex::from_prefix(&repr.prefix).map_err(serde::de::Error::custom)?;
        if idx.level != repr.level {
            return Err(serde::de::Error::custom(format!(
                "level {} does not match prefix `{}`",
                repr.level, repr.prefix
            )));
        }
        Ok(idx)
    }
}

/// A point of the index set `{0} ∪ 𝓛 ∪ {1}` used by the nested families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Index {
    Zero,
    Endpoint(EndpointIndex),
    One,
}

impl Index {
    pub fn value(&self) -> Rational {
        match self {
            Index::Zero => Rational::from_integer(0.into()),
            Index::Endpoint(e) => e.alpha(),
            Index::One => Rational::from_integer(1.into()),
        }
    }

    pub fn phi(&self) -> Dyadic {
        match self {
            Index::Zero => Dyadic::ZERO,
            Index::Endpoint(e) => e.phi(),
            Index::One => Dyadic::ONE,
        }
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.phi().cmp(&other.phi())
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Zero => write!(f, "0"),
            Index::Endpoint(e) => write!(f, "{e}"),
            Index::One => write!(f, "1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn alpha_beta_of_small_indices() {
        let e = EndpointIndex::first();
        assert_eq!(e.alpha(), rat(1, 3));
        assert_eq!(e.beta(), rat(2, 3));
        let e = EndpointIndex::from_prefix("2").unwrap();
        assert_eq!(e.alpha(), rat(7, 9));
        assert_eq!(e.beta(), rat(8, 9));
        assert_eq!(e.phi().to_rational(), rat(3, 4));
    }

    #[test]
    fn prefix_round_trip() {
        let e = EndpointIndex::from_prefix("0220").unwrap();
        assert_eq!(e.level(), 5);
        assert_eq!(e.prefix(), "0220");
        assert_eq!(e.digits(), vec![0, 2, 2, 0]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"level":5,"prefix":"0220"}"#);
        assert_eq!(serde_json::from_str::<EndpointIndex>(&json).unwrap(), e);
        assert!(serde_json::from_str::<EndpointIndex>(r#"{"level":3,"prefix":"0220"}"#).is_err());
    }

    #[test]
    fn rejects_bad_prefix() {
        assert!(EndpointIndex::from_prefix("01").is_err());
        assert!(EndpointIndex::new(0, 0).is_err());
        assert!(EndpointIndex::new(2, 2).is_err());
    }
}
