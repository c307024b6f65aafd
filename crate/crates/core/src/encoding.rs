//! Bitstring operators and the text encoding of big naturals.
//!
//! A [`Bitstring`] carries an explicit length so that leading zeros survive
//! padding and splitting.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Number of bits of `x`, `1 + floor(log2 x)`, with `bs(0) = 1`.
pub fn bitsize(x: &BigUint) -> u64 {
    x.bits().max(1)
}

pub fn bitsize_u64(x: u64) -> u64 {
    (64 - x.leading_zeros() as u64).max(1)
}

/// Bitsize of the largest element.
pub fn bitsize_set<'a, I>(xs: I) -> Result<u64>
where
    I: IntoIterator<Item = &'a BigUint>,
{
    xs.into_iter().map(bitsize).max().ok_or(Error::EmptySet)
}

/// A bit sequence, most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bitstring {
    value: BigUint,
    len: u64,
}

impl Bitstring {
    pub fn new(value: BigUint, len: u64) -> Result<Self> {
        if value.bits() > len {
            return Err(Error::ValueTooWide {
                needed: value.bits(),
                len,
            });
        }
        Ok(Bitstring { value, len })
    }

    /// The minimal-length string for `value` (`bs(value)` bits).
    pub fn of(value: BigUint) -> Self {
        let len = bitsize(&value);
        Bitstring { value, len }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse_bits(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::BadHex(s.to_string()));
        }
        let value = BigUint::parse_bytes(s.as_bytes(), 2).expect("validated binary digits");
        Ok(Bitstring {
            value,
            len: s.len() as u64,
        })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bits as a `0`/`1` string of exactly `len` characters.
    pub fn to_bits_string(&self) -> String {
        (0..self.len)
            .rev()
            .map(|i| if self.value.bit(i) { '1' } else { '0' })
            .collect()
    }
}

/// `(M(s), L(s))`: the top `ceil(n/2)` bits and the bottom `floor(n/2)` bits.
pub fn split_halves(s: &Bitstring) -> Result<(Bitstring, Bitstring)> {
    if s.len < 2 {
        return Err(Error::EmptyString(s.len));
    }
    let low = s.len / 2;
    let high = s.len - low;
    let mask = (BigUint::one() << low) - 1u8;
    Ok((
        Bitstring {
            value: &s.value >> low,
            len: high,
        },
        Bitstring {
            value: &s.value & mask,
            len: low,
        },
    ))
}

/// `[a | b]`.
pub fn concat(a: &Bitstring, b: &Bitstring) -> Bitstring {
    Bitstring {
        value: (&a.value << b.len) | &b.value,
        len: a.len + b.len,
    }
}

/// Left-pads with zeros to `target` bits.
pub fn zero_pad(s: &Bitstring, target: u64) -> Result<Bitstring> {
    if target < s.len {
        return Err(Error::TargetTooSmall { len: s.len, target });
    }
    Ok(Bitstring {
        value: s.value.clone(),
        len: target,
    })
}

/// Lowercase big-endian hex with no prefix and no leading zeros.
pub fn to_hex(v: &BigUint) -> String {
    v.to_str_radix(16)
}

/// Hex left-padded to exactly `digits` characters (never truncates).
pub fn to_hex_width(v: &BigUint, digits: usize) -> String {
    format!("{:0>digits$}", v.to_str_radix(16))
}

/// Strict inverse of [`to_hex`]: lowercase digits only, no prefix, no
/// superfluous leading zeros.
pub fn from_hex(s: &str) -> Result<BigUint> {
    let v = from_hex_width(s)?;
    if s.len() > 1 && s.starts_with('0') {
        return Err(Error::BadHex(s.to_string()));
    }
    Ok(v)
}

/// Lowercase hex that may carry leading zeros.
pub fn from_hex_width(s: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        return Err(Error::BadHex(s.to_string()));
    }
    Ok(BigUint::parse_bytes(s.as_bytes(), 16).unwrap_or_else(BigUint::zero))
}
