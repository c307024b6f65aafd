//! Feldman commitments `alpha_j = alpha^{a_j} mod p` in a subgroup of prime
//! order `q`.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, small_primes};
use crate::poly::Polynomial;

/// `p`, `q | p - 1` and a generator `alpha` of the order-`q` subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeldmanGroup {
    p: BigUint,
    q: BigUint,
    alpha: BigUint,
}

impl FeldmanGroup {
    pub fn new(p: BigUint, q: BigUint, alpha: BigUint) -> Result<Self> {
        let bad = |m: &str| Err(Error::BadParams(m.to_string()));
        if !is_prime(&p) || !is_prime(&q) {
            return bad("p and q must be prime");
        }
        if !((&p - 1u8) % &q).is_zero() {
            return bad("q must divide p - 1");
        }
        if alpha >= p || alpha.is_one() || alpha.is_zero() || !alpha.modpow(&q, &p).is_one() {
            return bad("alpha must have order q");
        }
        Ok(FeldmanGroup { p, q, alpha })
    }

    /// Finds `p = kq + 1` prime with exactly `p_bits` bits (`k` even) and a
    /// generator `alpha = h^k != 1`.
    pub fn generate<R: Rng + ?Sized>(q: &BigUint, p_bits: u64, rng: &mut R) -> Result<Self> {
        if !is_prime(q) || q < &BigUint::from(3u8) || p_bits <= q.bits() {
            return Err(Error::BadParams("need an odd prime q and p_bits > bs(q)".into()));
        }
        let lo = BigUint::one() << (p_bits - 1);
        let hi = BigUint::one() << p_bits;
        let two_q = q * 2u8;
        let k_lo = (&lo - 1u8).div_ceil(&two_q);
        let k_hi = (&hi - 1u8) / &two_q;
        if k_lo > k_hi {
            return Err(Error::BadParams("no p of that size".into()));
        }
        let sieve = small_primes(1 << 12);
        loop {
            let k = rng.gen_biguint_range(&k_lo, &(&k_hi + 1u8)) * 2u8;
            let p = &k * q + 1u8;
            let composite = sieve.iter().any(|&d| (&p % d).is_zero() && p != BigUint::from(d));
            if p.bits() != p_bits || composite || !is_prime(&p) {
                continue;
            }
            loop {
                let h = rng.gen_biguint_range(&BigUint::from(2u8), &(&p - 1u8));
                let alpha = h.modpow(&k, &p);
                if !alpha.is_one() {
                    return Ok(FeldmanGroup { p, q: q.clone(), alpha });
                }
            }
        }
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn alpha(&self) -> &BigUint {
        &self.alpha
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeldmanParams {
    pub group: FeldmanGroup,
    pub commitments: Vec<BigUint>,
}

impl FeldmanParams {
    /// Commits to the `t` coefficients of a sharing polynomial over `Z_q`.
    pub fn commit(group: &FeldmanGroup, poly: &Polynomial, t: usize) -> Result<Self> {
        if poly.field().modulus() != Some(&group.q) {
            return Err(Error::BadParams("polynomial must be over Z_q".into()));
        }
        if poly.degree().unwrap_or(0) >= t.max(1) {
            return Err(Error::BadParams("polynomial degree exceeds t - 1".into()));
        }
        let commitments = poly
            .padded_coefficients(t.max(1))
            .iter()
            .map(|a| group.alpha.modpow(a, &group.p))
            .collect();
        Ok(FeldmanParams {
            group: group.clone(),
            commitments,
        })
    }

    /// `alpha^{s_i} == prod alpha_j^{i^j mod q} (mod p)`.
    pub fn verify(&self, index: usize, share: &BigUint) -> bool {
        let g = &self.group;
        let lhs = g.alpha.modpow(&(share % &g.q), &g.p);
        let i = BigUint::from(index) % &g.q;
        let mut ij = BigUint::one();
        let mut rhs = BigUint::one();
        for c in &self.commitments {
            rhs = rhs * c.modpow(&ij, &g.p) % &g.p;
            ij = ij * &i % &g.q;
        }
        lhs == rhs
    }

    /// `p`, `alpha` and the `t` commitments, each at `bs(p)` bits.
    pub fn size_bits(&self) -> u64 {
        (self.commitments.len() as u64 + 1) * self.group.p.bits()
    }
}
