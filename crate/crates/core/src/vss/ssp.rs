//! Public split-share verification: `V(M(s_i)) = L(s_i)`.
//!
//! Every string `[a | V(a)]` passes this check, so the scheme offers no
//! binding at all; it is kept as the base the private and EXP-SSP variants
//! build on, and for demonstrating that forgery.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::{interpolate, split_all, Scheme, VerificationBundle};
use crate::encoding::{concat, Bitstring};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Builds the public bundle over `domain_bits`-bit shares. Fails with
/// [`Error::MidHalfCollision`] when two shares agree on their top half; the
/// caller regenerates the shares and retries.
pub fn deal(shares: &[BigUint], domain_bits: u64, field: &FieldSpec) -> Result<VerificationBundle> {
    if domain_bits < 2 {
        return Err(Error::EmptyString(domain_bits));
    }
    if shares.is_empty() {
        return Err(Error::NoPoints);
    }
    check_shares_bits(shares, domain_bits)?;
    let points = split_all(shares, domain_bits, field)?;
    let v = interpolate(field, points)?;
    Ok(VerificationBundle {
        scheme: Scheme::Ssp,
        verifier_index: 0,
        field: field.clone(),
        base: None,
        coefficients: v.padded_coefficients(shares.len()),
        domain_bits,
    })
}

/// Distinct shares of at most `bits` bits, with no field constraint on the
/// full value.
pub(crate) fn check_shares_bits(shares: &[BigUint], bits: u64) -> Result<()> {
    let mut seen = HashSet::with_capacity(shares.len());
    for s in shares {
        if s.bits() > bits {
            return Err(Error::ShareOutOfField(s.clone()));
        }
        if !seen.insert(s) {
            return Err(Error::DuplicateShareValue(s.clone()));
        }
    }
    Ok(())
}

/// The share `[a | V(a)]` that any holder of the public bundle can forge.
pub fn forge(bundle: &VerificationBundle, a: &BigUint) -> Result<BigUint> {
    if bundle.scheme != Scheme::Ssp {
        return Err(Error::SchemeMismatch {
            expected: Scheme::Ssp.to_string(),
            found: bundle.scheme.to_string(),
        });
    }
    let low = bundle.domain_bits / 2;
    let high = bundle.domain_bits - low;
    let l = bundle.field.wrap(bundle.polynomial().evaluate_raw(a));
    // the forgery only exists when V(a) fits the low half
    let m = Bitstring::new(a.clone(), high).map_err(|_| Error::ShareOutOfField(a.clone()))?;
    let l = Bitstring::new(l.into_value(), low)
        .map_err(|e| Error::BadParams(format!("V(a) does not fit the low half: {e}")))?;
    Ok(concat(&m, &l).into_value())
}
