//! Verification extensions for threshold schemes.
//!
//! Every scheme hands shareholders a polynomial over a separate verification
//! field. Public bundles (POW, SSP) are shared by everyone; private and EXP
//! bundles are per verifier and are built without the verifier's own share.

pub mod exp;
pub mod feldman;
pub mod hash;
pub mod pow;
pub mod private;
pub mod ssp;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::encoding::{bitsize, bitsize_u64, concat, split_halves, zero_pad, Bitstring};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::numtheory::{mersenne_field, next_prime, next_safe_prime};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Pow,
    Ssp,
    PowPriv,
    SspPriv,
    Exp,
    ExpSsp,
}

impl Scheme {
    pub const ALL: [Scheme; 6] = [
        Scheme::Pow,
        Scheme::Ssp,
        Scheme::PowPriv,
        Scheme::SspPriv,
        Scheme::Exp,
        Scheme::ExpSsp,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Scheme::Pow => "pow",
            Scheme::Ssp => "ssp",
            Scheme::PowPriv => "pow-priv",
            Scheme::SspPriv => "ssp-priv",
            Scheme::Exp => "exp",
            Scheme::ExpSsp => "exp-ssp",
        }
    }

    /// Public bundles serve every shareholder.
    pub fn is_public(self) -> bool {
        matches!(self, Scheme::Pow | Scheme::Ssp)
    }

    /// Schemes that verify split shares `[M | L]`.
    pub fn is_split(self) -> bool {
        matches!(self, Scheme::Ssp | Scheme::SspPriv | Scheme::ExpSsp)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.tag() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown scheme {s:?}")))
    }
}

/// How the verification field is picked from the size of the value domain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FieldChoice {
    /// GF(NSP(D)).
    SafePrimeAboveValue,
    /// GF(NSP(2^b)) with `b` the bitsize of the largest value.
    #[default]
    SafePrimeAboveBitsize,
    /// GF(NP(D)).
    PrimeAboveValue,
    /// GF(2^b) with `b` the bitsize of the largest value.
    BinaryOfBitsize,
    /// GF(2^e) for a Mersenne exponent `e`.
    Mersenne(u64),
}

impl FieldChoice {
    /// A field holding every value in `[0, domain_size)`.
    pub fn resolve(&self, domain_size: &BigUint) -> Result<FieldSpec> {
        if domain_size < &BigUint::from(2u8) {
            return Err(Error::BadParams("domain must hold at least two values".into()));
        }
        let bits = bitsize(&(domain_size - 1u8));
        match *self {
            FieldChoice::SafePrimeAboveValue => Ok(next_safe_prime(domain_size).field()),
            FieldChoice::SafePrimeAboveBitsize => {
                Ok(next_safe_prime(&(BigUint::one() << bits)).field())
            }
            FieldChoice::PrimeAboveValue => {
                Ok(FieldSpec::prime_unchecked(next_prime(domain_size, true)))
            }
            FieldChoice::BinaryOfBitsize => FieldSpec::binary(bits),
            FieldChoice::Mersenne(e) => {
                let m = mersenne_field(e)?;
                if m.spec().order() < domain_size {
                    return Err(Error::BadParams(format!(
                        "GF(2^{e}) cannot hold a domain of {domain_size} values"
                    )));
                }
                Ok(m.spec().clone())
            }
        }
    }

    /// A field for `bits`-bit values.
    pub fn resolve_bits(&self, bits: u64) -> Result<FieldSpec> {
        self.resolve(&(BigUint::one() << bits))
    }
}

/// Verification data handed to one shareholder, or to all of them for
/// public schemes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationBundle {
    pub scheme: Scheme,
    /// 0 for public bundles.
    pub verifier_index: usize,
    pub field: FieldSpec,
    /// `r` for POW, `u_j` for private bundles, `r_j` for EXP bundles.
    pub base: Option<BigUint>,
    /// Coefficients of the verification polynomial, zero-padded to a fixed
    /// count.
    pub coefficients: Vec<BigUint>,
    /// Bits of the share domain; the half-size `w` for EXP-SSP.
    pub domain_bits: u64,
}

impl VerificationBundle {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_raw(&self.field, self.coefficients.clone())
    }

    /// Checks structural consistency, as needed after parsing.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::BadParams(m.to_string()));
        if self.scheme.is_public() != (self.verifier_index == 0) {
            return bad("verifier index does not match the scheme");
        }
        if self.coefficients.is_empty() {
            return bad("no coefficients");
        }
        if let Some(v) = self.coefficients.iter().find(|c| !self.field.contains(c)) {
            return Err(Error::ValueOutOfRange { value: v.clone() });
        }
        match (self.scheme, &self.base) {
            (Scheme::Ssp, None) => {}
            (Scheme::Ssp, Some(_)) => return bad("SSP bundles carry no base"),
            (_, None) => return bad("missing base"),
            (Scheme::Exp | Scheme::ExpSsp, Some(r)) => {
                if !self.field.contains(r) {
                    return Err(Error::ValueOutOfRange { value: r.clone() });
                }
            }
            (_, Some(u)) => {
                if u.bits() == 0 || u > self.field.group_order() {
                    return bad("exponent outside 1..=group order");
                }
            }
        }
        if self.domain_bits == 0 || self.domain_bits > 1 << 20 {
            return bad("domain bits out of range");
        }
        Ok(())
    }

    /// Width in bits of the shares this bundle checks.
    pub fn share_bits(&self) -> u64 {
        match self.scheme {
            Scheme::ExpSsp => 2 * self.domain_bits,
            _ => self.domain_bits,
        }
    }

    /// Checks the claimed share of shareholder `index`.
    pub fn verify(&self, index: usize, candidate: &BigUint) -> Result<bool> {
        if !self.scheme.is_public() && index == self.verifier_index {
            return Err(Error::SelfVerification(index));
        }
        if candidate.bits() > self.share_bits() {
            return Err(Error::ShareOutOfField(candidate.clone()));
        }
        let f = &self.field;
        let v = self.polynomial();
        let base = || self.base.clone().expect("validated bundle has a base");
        let (x, rhs) = if self.scheme.is_split() {
            let (m, l) = split_share(candidate, self.share_bits())?;
            if !f.contains(m.value()) || !f.contains(l.value()) {
                return Err(Error::ShareOutOfField(candidate.clone()));
            }
            let rhs = match self.scheme {
                Scheme::Ssp => f.wrap(l.value().clone()),
                Scheme::SspPriv => f.wrap(l.value().clone()).pow(&base()),
                _ => f.wrap(base()).pow(l.value()),
            };
            (m.into_value(), rhs)
        } else {
            if !f.contains(candidate) {
                return Err(Error::ShareOutOfField(candidate.clone()));
            }
            let rhs = match self.scheme {
                Scheme::Pow | Scheme::PowPriv => f.wrap(candidate.clone()).pow(&base()),
                _ => f.wrap(base()).pow(candidate),
            };
            (candidate.clone(), rhs)
        };
        Ok(f.wrap(v.evaluate_raw(&x)) == rhs)
    }

    /// Bit-packed encoding: `domain_bits` in `bs(domain_bits)` bits, then the
    /// base and each coefficient at the field's element width.
    pub fn pack(&self) -> Bitstring {
        let w = self.field.element_bits();
        let mut out = Bitstring::of(BigUint::from(self.domain_bits));
        let elem = |v: &BigUint| Bitstring::new(v.clone(), w).expect("canonical element");
        if let Some(b) = &self.base {
            out = concat(&out, &elem(b));
        }
        for c in &self.coefficients {
            out = concat(&out, &elem(c));
        }
        out
    }

    pub fn packed_bits(&self) -> u64 {
        let elems = self.coefficients.len() as u64 + u64::from(self.base.is_some());
        bitsize_u64(self.domain_bits) + elems * self.field.element_bits()
    }
}

/// Deals `scheme` over shares of at most `share_bits` bits. Public schemes
/// return one bundle; the others return one per shareholder, in share order.
/// EXP-SSP uses `w = ceil(share_bits / 2)`.
pub fn deal_scheme<R: Rng + ?Sized>(
    scheme: Scheme,
    shares: &[BigUint],
    share_bits: u64,
    field: &FieldSpec,
    rng: &mut R,
) -> Result<Vec<VerificationBundle>> {
    match scheme {
        Scheme::Pow => Ok(vec![pow::deal(shares, share_bits, field, rng)?]),
        Scheme::Ssp => Ok(vec![ssp::deal(shares, share_bits, field)?]),
        Scheme::PowPriv => {
            let u = private::random_exponents(shares.len(), field.group_order(), rng)?;
            private::deal_pow(shares, share_bits, field, &u)
        }
        Scheme::SspPriv => {
            let u = private::random_exponents(shares.len(), field.group_order(), rng)?;
            private::deal_ssp(shares, share_bits, field, &u)
        }
        Scheme::Exp => exp::deal(shares, share_bits, field, rng),
        Scheme::ExpSsp => exp::deal_ssp(shares, share_bits.div_ceil(2), field, rng),
    }
}

/// Pads a share to `bits` and splits it into `(M, L)`.
pub fn split_share(share: &BigUint, bits: u64) -> Result<(Bitstring, Bitstring)> {
    let s = zero_pad(&Bitstring::of(share.clone()), bits)
        .map_err(|_| Error::ShareOutOfField(share.clone()))?;
    split_halves(&s)
}

/// Shares must be distinct, fit `domain_bits`, and be field elements.
pub(crate) fn check_shares(shares: &[BigUint], domain_bits: u64, field: &FieldSpec) -> Result<()> {
    let mut seen = HashSet::with_capacity(shares.len());
    for s in shares {
        if s.bits() > domain_bits || !field.contains(s) {
            return Err(Error::ShareOutOfField(s.clone()));
        }
        if !seen.insert(s) {
            return Err(Error::DuplicateShareValue(s.clone()));
        }
    }
    Ok(())
}

/// Splits every share at `bits`, rejecting repeated M-halves and halves that
/// fall outside the field.
pub(crate) fn split_all(
    shares: &[BigUint],
    bits: u64,
    field: &FieldSpec,
) -> Result<Vec<(BigUint, BigUint)>> {
    let mut seen = HashSet::with_capacity(shares.len());
    let mut out = Vec::with_capacity(shares.len());
    for s in shares {
        let (m, l) = split_share(s, bits)?;
        if !field.contains(m.value()) {
            return Err(Error::BadParams(format!(
                "{}-bit halves do not fit {field:?}",
                m.len()
            )));
        }
        if !seen.insert(m.value().clone()) {
            return Err(Error::MidHalfCollision(m.into_value()));
        }
        out.push((m.into_value(), l.into_value()));
    }
    Ok(out)
}

pub(crate) fn need_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParams(
            "per-verifier bundles need at least two shareholders".into(),
        ));
    }
    Ok(())
}

/// Regeneration budget for split schemes when two M-halves collide.
pub const MID_HALF_RETRY_BUDGET: usize = 64;

/// Runs `attempt` until it stops reporting [`Error::MidHalfCollision`], at
/// most `budget` times.
pub fn retry_on_collision<T, F>(budget: usize, mut attempt: F) -> Result<T>
where
    F: FnMut() -> Result<T>,
{
    let mut last = None;
    for _ in 0..budget {
        match attempt() {
            Err(Error::MidHalfCollision(m)) => last = Some(m),
            other => return other,
        }
    }
    Err(Error::MidHalfCollision(last.unwrap_or_default()))
}

pub(crate) fn interpolate(field: &FieldSpec, points: Vec<(BigUint, BigUint)>) -> Result<Polynomial> {
    crate::poly::lagrange_interpolate(&crate::poly::PointSet::from_values(field, points)?)
}
