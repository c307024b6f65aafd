//! The gcd attack on private exponent bundles.
//!
//! Every bundle `V_j` held by a colluder agrees with `x^{u_j}` on each share
//! except its owner's, so `gcd_j (V_j(x) - x^{u_j})` vanishes at the share
//! none of them owns. For split shares the unknown half is eliminated
//! pairwise, `V_j^{u_k} - V_k^{u_j}`, which leaves `M` of the missing share;
//! `L` then follows from one `u_j`-th root search.
//!
//! Everything is kept dense modulo `x^Q - x`, which is exact for functions on
//! GF(Q) and caps every degree below `Q`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{Polynomial, SCAN_LIMIT};
use crate::small::{is_zero, trimmed, SmallField};
use crate::vss::{split_share, Scheme, VerificationBundle};

/// Largest exponent turned into an explicit dense `x^u`.
pub const MAX_DENSE_EXPONENT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollusionResult {
    pub scheme: Scheme,
    /// Monic gcd whose roots are the candidate shares (or `M` halves).
    pub gcd: Polynomial,
    /// Candidate shares, excluding those the colluders already hold.
    pub candidates: Vec<BigUint>,
}

struct Setup {
    scheme: Scheme,
    field: FieldSpec,
    s: SmallField,
    order: u64,
    domain_bits: u64,
    polys: Vec<Vec<u64>>,
    exponents: Vec<u64>,
}

fn setup(bundles: &[VerificationBundle]) -> Result<Setup> {
    let first = bundles.first().ok_or(Error::NoPoints)?;
    let scheme = first.scheme;
    if !matches!(scheme, Scheme::PowPriv | Scheme::SspPriv) {
        return Err(Error::SchemeMismatch {
            expected: format!("{} or {}", Scheme::PowPriv, Scheme::SspPriv),
            found: scheme.to_string(),
        });
    }
    let field = first.field.clone();
    let order = field
        .order()
        .to_u64()
        .filter(|&o| o <= SCAN_LIMIT)
        .ok_or_else(|| Error::FieldTooLarge(field.order().clone()))?;
    let s = field.small().expect("scan-sized fields use the word kernel");
    let mut polys = Vec::new();
    let mut exponents = Vec::new();
    let mut owners = HashSet::new();
    for b in bundles {
        if b.scheme != scheme {
            return Err(Error::SchemeMismatch {
                expected: scheme.to_string(),
                found: b.scheme.to_string(),
            });
        }
        if b.field != field || b.domain_bits != first.domain_bits {
            return Err(Error::MixedFields);
        }
        if !owners.insert(b.verifier_index) {
            return Err(Error::DuplicateIndex(b.verifier_index));
        }
        let u = b.base.as_ref().ok_or(Error::BadParams("bundle without exponent".into()))?;
        let u = u
            .to_u64()
            .filter(|&u| (1..=MAX_DENSE_EXPONENT).contains(&u))
            .ok_or_else(|| Error::ExponentTooLarge(u.clone()))?;
        // a^u depends on u only modulo Q - 1 once u >= 1
        exponents.push((u - 1) % s.group_order() + 1);
        let (_, v) = b.polynomial().to_small().expect("small field");
        polys.push(v);
    }
    Ok(Setup {
        scheme,
        field,
        s,
        order,
        domain_bits: first.domain_bits,
        polys,
        exponents,
    })
}

/// Recovers the share missing from a coalition's private bundles.
/// `known_shares` are the colluders' own shares and are dropped from the
/// answer.
pub fn gcd_collusion_attack(bundles: &[VerificationBundle], known_shares: &[BigUint]) -> Result<CollusionResult> {
    let st = setup(bundles)?;
    match st.scheme {
        Scheme::PowPriv => attack_pow(&st, known_shares),
        _ => attack_ssp(&st, known_shares),
    }
}

fn accumulate(s: &SmallField, g: Option<Vec<u64>>, f: Vec<u64>) -> Option<Vec<u64>> {
    match g {
        None => Some(trimmed(f)),
        Some(g) if is_zero(&g) => Some(trimmed(f)),
        Some(g) if is_zero(&f) => Some(g),
        Some(g) => Some(s.poly_gcd(&g, &f)),
    }
}

fn finish(st: &Setup, g: Option<Vec<u64>>) -> Result<Vec<u64>> {
    let g = g.unwrap_or_else(|| vec![0]);
    if is_zero(&g) || g.len() == 1 {
        return Err(Error::TrivialGcd);
    }
    Ok(st.s.monic(g))
}

fn domain_limit(order: u64, bits: u64) -> u64 {
    if bits >= 64 {
        order
    } else {
        order.min(1 << bits)
    }
}

fn attack_pow(st: &Setup, known: &[BigUint]) -> Result<CollusionResult> {
    let s = &st.s;
    let mut g = None;
    for (v, &u) in st.polys.iter().zip(&st.exponents) {
        let mut f = v.clone();
        f.resize(f.len().max(u as usize + 1), 0);
        f[u as usize] = s.sub(f[u as usize], 1);
        g = accumulate(s, g, f);
    }
    let g = finish(st, g)?;
    let known: HashSet<&BigUint> = known.iter().collect();
    let candidates = (0..domain_limit(st.order, st.domain_bits))
        .filter(|&x| s.eval(&g, x) == 0)
        .map(BigUint::from)
        .filter(|x| !known.contains(x))
        .collect();
    Ok(CollusionResult {
        scheme: st.scheme,
        gcd: Polynomial::from_small(&st.field, &g),
        candidates,
    })
}

/// Reduces modulo `x^q - x`.
fn fold(mut a: Vec<u64>, s: &SmallField, q: u64) -> Vec<u64> {
    let q = q as usize;
    for d in (q..a.len()).rev() {
        let c = a[d];
        a[d - (q - 1)] = s.add(a[d - (q - 1)], c);
    }
    a.truncate(q);
    trimmed(a)
}

fn pow_fold(base: &[u64], mut e: u64, s: &SmallField, q: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fold(base.to_vec(), s, q);
    while e > 0 {
        if e & 1 == 1 {
            acc = fold(s.poly_mul(&acc, &b), s, q);
        }
        e >>= 1;
        if e > 0 {
            b = fold(s.poly_mul(&b, &b), s, q);
        }
    }
    acc
}

fn attack_ssp(st: &Setup, known: &[BigUint]) -> Result<CollusionResult> {
    if st.polys.len() < 2 {
        return Err(Error::BadParams("the split-share attack needs two bundles".into()));
    }
    if st.order > MAX_DENSE_EXPONENT {
        return Err(Error::ExponentTooLarge(BigUint::from(st.order)));
    }
    let s = &st.s;
    let q = st.order;
    let (v0, u0) = (&st.polys[0], st.exponents[0]);
    let mut g = None;
    for (vk, &uk) in st.polys.iter().zip(&st.exponents).skip(1) {
        let a = pow_fold(v0, uk, s, q);
        let b = pow_fold(vk, u0, s, q);
        let mut diff = vec![0u64; a.len().max(b.len())];
        for (i, d) in diff.iter_mut().enumerate() {
            *d = s.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        }
        g = accumulate(s, g, diff);
    }
    let g = finish(st, g)?;

    let low = st.domain_bits / 2;
    let high = st.domain_bits - low;
    let mut known_m = HashSet::new();
    for k in known {
        let (m, _) = split_share(k, st.domain_bits)?;
        known_m.insert(m.value().to_u64().expect("small field"));
    }
    let mut candidates = Vec::new();
    for m in (0..domain_limit(q, high)).filter(|&m| s.eval(&g, m) == 0 && !known_m.contains(&m)) {
        let targets: Vec<u64> = st.polys.iter().map(|v| s.eval(v, m)).collect();
        for l in 0..domain_limit(q, low) {
            if st.exponents.iter().zip(&targets).all(|(&u, &y)| s.pow(l, u) == y) {
                candidates.push((BigUint::from(m) << low) | BigUint::from(l));
            }
        }
    }
    Ok(CollusionResult {
        scheme: st.scheme,
        gcd: Polynomial::from_small(&st.field, &g),
        candidates,
    })
}
