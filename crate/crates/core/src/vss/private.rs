//! Per-verifier private exponents: `V_j(s_i) = s_i^{u_j}` and
//! `V_j(M(s_i)) = L(s_i)^{u_j}` for every `i != j`.
//!
//! Colluders can pool their bundles and recover the missing share with a
//! polynomial gcd; see [`crate::analysis::collusion`].

use std::collections::HashSet;

use num_bigint::{BigUint, RandBigInt};
use rand::Rng;

use super::ssp::check_shares_bits;
use super::{check_shares, interpolate, need_two, split_all, Scheme, VerificationBundle};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

fn check_exponents(exponents: &[BigUint], n: usize, field: &FieldSpec) -> Result<()> {
    if exponents.len() != n {
        return Err(Error::BadParams(format!(
            "{} exponents for {n} shareholders",
            exponents.len()
        )));
    }
    let mut seen = HashSet::new();
    for u in exponents {
        if u.bits() == 0 || u > field.group_order() {
            return Err(Error::BadParams(format!("exponent {u} outside 1..=group order")));
        }
        if !seen.insert(u) {
            return Err(Error::BadParams(format!("exponent {u} repeated")));
        }
    }
    Ok(())
}

/// `n` distinct exponents drawn uniformly from `[1, max]`.
pub fn random_exponents<R: Rng + ?Sized>(n: usize, max: &BigUint, rng: &mut R) -> Result<Vec<BigUint>> {
    if BigUint::from(n) > *max {
        return Err(Error::BadParams(format!("cannot draw {n} distinct exponents up to {max}")));
    }
    let one = BigUint::from(1u8);
    let hi = max + 1u8;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = rng.gen_biguint_range(&one, &hi);
        if seen.insert(u.clone()) {
            out.push(u);
        }
    }
    Ok(out)
}

/// One bundle per shareholder for the private power map. Bundle `j` (1-based)
/// interpolates `(s_i, s_i^{u_j})` over every `i != j`.
pub fn deal_pow(
    shares: &[BigUint],
    domain_bits: u64,
    field: &FieldSpec,
    exponents: &[BigUint],
) -> Result<Vec<VerificationBundle>> {
    let n = shares.len();
    need_two(n)?;
    check_shares(shares, domain_bits, field)?;
    check_exponents(exponents, n, field)?;
    (0..n)
        .map(|j| {
            let u = &exponents[j];
            let points = others(n, j)
                .map(|i| (shares[i].clone(), field.pow_raw(&shares[i], u)))
                .collect();
            bundle(Scheme::PowPriv, j, field, u, points, domain_bits, n)
        })
        .collect()
}

/// One bundle per shareholder for the private split-share map.
pub fn deal_ssp(
    shares: &[BigUint],
    domain_bits: u64,
    field: &FieldSpec,
    exponents: &[BigUint],
) -> Result<Vec<VerificationBundle>> {
    let n = shares.len();
    need_two(n)?;
    if domain_bits < 2 {
        return Err(Error::EmptyString(domain_bits));
    }
    check_shares_bits(shares, domain_bits)?;
    check_exponents(exponents, n, field)?;
    let halves = split_all(shares, domain_bits, field)?;
    (0..n)
        .map(|j| {
            let u = &exponents[j];
            let points = others(n, j)
                .map(|i| (halves[i].0.clone(), field.pow_raw(&halves[i].1, u)))
                .collect();
            bundle(Scheme::SspPriv, j, field, u, points, domain_bits, n)
        })
        .collect()
}

pub(crate) fn others(n: usize, j: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&i| i != j)
}

pub(crate) fn bundle(
    scheme: Scheme,
    j: usize,
    field: &FieldSpec,
    base: &BigUint,
    points: Vec<(BigUint, BigUint)>,
    domain_bits: u64,
    n: usize,
) -> Result<VerificationBundle> {
    let v = interpolate(field, points)?;
    Ok(VerificationBundle {
        scheme,
        verifier_index: j + 1,
        field: field.clone(),
        base: Some(base.clone()),
        coefficients: v.padded_coefficients(n - 1),
        domain_bits,
    })
}
