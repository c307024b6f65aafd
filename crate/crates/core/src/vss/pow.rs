//! Public power-map verification: `V(s_i) = s_i^r`.

use num_bigint::{BigUint, RandBigInt};
use rand::Rng;

use super::{check_shares, interpolate, Scheme, VerificationBundle};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Builds the public bundle with an exponent `r` drawn uniformly from
/// `[1, group order]`.
pub fn deal<R: Rng + ?Sized>(
    shares: &[BigUint],
    domain_bits: u64,
    field: &FieldSpec,
    rng: &mut R,
) -> Result<VerificationBundle> {
    let r = rng.gen_biguint_range(&BigUint::from(1u8), &(field.group_order() + 1u8));
    deal_with_exponent(shares, domain_bits, field, &r)
}

pub fn deal_with_exponent(
    shares: &[BigUint],
    domain_bits: u64,
    field: &FieldSpec,
    r: &BigUint,
) -> Result<VerificationBundle> {
    if r.bits() == 0 || r > field.group_order() {
        return Err(Error::BadParams("exponent must lie in 1..=group order".into()));
    }
    check_shares(shares, domain_bits, field)?;
    if shares.is_empty() {
        return Err(Error::NoPoints);
    }
    let points = shares
        .iter()
        .map(|s| (s.clone(), field.pow_raw(s, r)))
        .collect();
    let v = interpolate(field, points)?;
    Ok(VerificationBundle {
        scheme: Scheme::Pow,
        verifier_index: 0,
        field: field.clone(),
        base: Some(r.clone()),
        coefficients: v.padded_coefficients(shares.len()),
        domain_bits,
    })
}
