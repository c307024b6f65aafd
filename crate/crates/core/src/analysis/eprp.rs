//! Roots of `p(x) = r^x` by exhaustive search.
//!
//! The exponent is the natural number behind `x` (its bitstring in binary
//! fields). With `deg p = 0` this is a discrete logarithm.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::numtheory::PrimitiveSampler;
use crate::poly::{Polynomial, SCAN_LIMIT};
use crate::small::SmallField;
use crate::vss::{Scheme, VerificationBundle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EprpInstance {
    polynomial: Polynomial,
    base: FieldElement,
}

impl EprpInstance {
    pub fn new(polynomial: Polynomial, base: FieldElement) -> Result<Self> {
        if polynomial.field() != base.field() {
            return Err(Error::MixedFields);
        }
        if !PrimitiveSampler::for_field(base.field())?.is_primitive(&base) {
            return Err(Error::NotPrimitive(base.value().clone()));
        }
        Ok(EprpInstance { polynomial, base })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }

    pub fn base(&self) -> &FieldElement {
        &self.base
    }

    pub fn field(&self) -> &FieldSpec {
        self.base.field()
    }

    /// Does `x` solve the instance?
    pub fn is_root(&self, x: &BigUint) -> bool {
        let f = self.field();
        f.contains(x) && self.polynomial.evaluate_raw(x) == f.pow_raw(self.base.value(), x)
    }
}

fn scan_field(field: &FieldSpec) -> Result<(SmallField, u64)> {
    let order = field
        .order()
        .to_u64()
        .filter(|&o| o <= SCAN_LIMIT)
        .ok_or_else(|| Error::FieldTooLarge(field.order().clone()))?;
    Ok((field.small().expect("scan-sized fields use the word kernel"), order))
}

/// `x` in `[0, limit)` with `p(x) = r^x`, walking `r^x` incrementally.
fn scan(s: SmallField, coeffs: &[u64], r: u64, limit: u64) -> Vec<u64> {
    let mut rx = 1u64;
    let mut out = Vec::new();
    for x in 0..limit {
        if s.eval(coeffs, x) == rx {
            out.push(x);
        }
        rx = s.mul(rx, r);
    }
    out
}

/// The full solution set, in increasing order.
pub fn eprp_roots_bruteforce(inst: &EprpInstance) -> Result<Vec<FieldElement>> {
    let f = inst.field();
    let (s, order) = scan_field(f)?;
    let (_, coeffs) = inst.polynomial.to_small().expect("small field");
    let r = inst.base.value().to_u64().expect("small field");
    Ok(scan(s, &coeffs, r, order)
        .into_iter()
        .map(|x| f.wrap(BigUint::from(x)))
        .collect())
}

/// Every value an EXP bundle accepts: roots of `V_j(x) - r_j^x` among
/// shares of at most `domain_bits` bits.
pub fn exp_bundle_roots(bundle: &VerificationBundle) -> Result<Vec<BigUint>> {
    if bundle.scheme != Scheme::Exp {
        return Err(Error::SchemeMismatch {
            expected: Scheme::Exp.to_string(),
            found: bundle.scheme.to_string(),
        });
    }
    let (s, order) = scan_field(&bundle.field)?;
    let limit = if bundle.domain_bits >= 64 { order } else { order.min(1 << bundle.domain_bits) };
    let (_, coeffs) = bundle.polynomial().to_small().expect("small field");
    let r = bundle.base.as_ref().and_then(|b| b.to_u64()).ok_or(Error::BadParams("missing base".into()))?;
    Ok(scan(s, &coeffs, r, limit).into_iter().map(BigUint::from).collect())
}
