//! Primality, next-prime operators, safe primes, primitive roots and Mersenne
//! binary fields.

use std::collections::HashSet;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::FieldElement;

/// First 13 primes; as Miller-Rabin witnesses they decide every `n < 3.317e24`.
const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Upper end of the deterministic range of [`WITNESSES`].
const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

/// Extra rounds above the deterministic range; error below `4^-64`.
const EXTRA_ROUNDS: usize = 64;

/// Sieve primes below `limit`.
pub fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e != 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, a, m);
        }
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

fn miller_rabin_u64(n: u64) -> bool {
    let d0 = n - 1;
    let s = d0.trailing_zeros();
    let d = d0 >> s;
    'witness: for &a in &WITNESSES {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_round(n: &BigUint, n1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u8), n);
        if &x == n1 {
            return true;
        }
    }
    false
}

/// Miller-Rabin primality test.
///
/// Exact below 3.317e24. Larger inputs get 64 further rounds whose
/// witnesses are drawn from a generator seeded by the SHA-256 of `n`, so the
/// answer is reproducible.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        if v < 2 {
            return false;
        }
        for &p in &WITNESSES {
            if v == p {
                return true;
            }
            if v % p == 0 {
                return false;
            }
        }
        return miller_rabin_u64(v);
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u8;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    for &a in &WITNESSES {
        if !miller_rabin_round(n, &n1, &d, s, &BigUint::from(a)) {
            return false;
        }
    }
    if n.to_u128().is_some_and(|v| v < DETERMINISTIC_BOUND) {
        return true;
    }
    let seed: [u8; 32] = Sha256::digest(n.to_bytes_be()).into();
    let mut rng = ChaCha20Rng::from_seed(seed);
    let two = BigUint::from(2u8);
    (0..EXTRA_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &n1);
        miller_rabin_round(n, &n1, &d, s, &a)
    })
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// `NP(x)`, the least prime `> x`, when `strict`; otherwise `np(x)`, the
/// least prime `>= x`.
pub fn next_prime(x: &BigUint, strict: bool) -> BigUint {
    let mut c = if strict { x + 1u8 } else { x.clone() };
    if c <= BigUint::from(2u8) {
        return BigUint::from(2u8);
    }
    if c.is_even() {
        c += 1u8;
    }
    while !is_prime(&c) {
        c += 2u8;
    }
    c
}

/// A prime `p = 2q + 1` with `q` prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SafePrime {
    p: BigUint,
    q: BigUint,
}

impl SafePrime {
    pub fn new(p: BigUint) -> Result<Self> {
        if p < BigUint::from(5u8) || p.is_even() || !is_prime(&p) {
            return Err(Error::NotSafePrime(p));
        }
        let q = (&p - 1u8) >> 1;
        if !is_prime(&q) {
            return Err(Error::NotSafePrime(p));
        }
        Ok(SafePrime { p, q })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    /// Factorization of `p - 1`.
    pub fn factorization(&self) -> Vec<(BigUint, u32)> {
        if self.q == BigUint::from(2u8) {
            vec![(BigUint::from(2u8), 2)]
        } else {
            vec![(BigUint::from(2u8), 1), (self.q.clone(), 1)]
        }
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::prime_unchecked(self.p.clone())
    }

    /// Number of primitive roots, `phi(p - 1)`.
    pub fn primitive_root_count(&self) -> BigUint {
        if self.q == BigUint::from(2u8) {
            BigUint::from(2u8)
        } else {
            &self.q - 1u8
        }
    }

    /// The two-exponentiation order test: `g^2 != 1` and `g^q != 1`.
    pub fn is_primitive(&self, g: &BigUint) -> bool {
        let g = g % &self.p;
        if g.is_zero() {
            return false;
        }
        !g.modpow(&BigUint::from(2u8), &self.p).is_one() && !g.modpow(&self.q, &self.p).is_one()
    }
}

/// Safe-prime search above a starting point.
///
/// Candidates run over `p = 11 mod 12`, the only residue class where both `p`
/// and `(p - 1)/2` can be primes above 3; 5, 7 and 11 are handled directly.
/// Each candidate is screened by an incrementally updated table of residues
/// modulo the primes below 2^16 before any Miller-Rabin round.
#[derive(Clone, Debug)]
pub struct SafePrimeSearch {
    start: BigUint,
    budget: Option<u64>,
    min_hamming_weight: Option<u64>,
}

impl SafePrimeSearch {
    /// Searches for the least safe prime strictly greater than `start`.
    pub fn above(start: BigUint) -> Self {
        SafePrimeSearch {
            start,
            budget: None,
            min_hamming_weight: None,
        }
    }

    /// Gives up after examining this many candidates.
    pub fn budget(mut self, candidates: u64) -> Self {
        self.budget = Some(candidates);
        self
    }

    /// Skips candidates `p` with fewer set bits.
    pub fn min_hamming_weight(mut self, weight: u64) -> Self {
        self.min_hamming_weight = Some(weight);
        self
    }

    fn accepts_weight(&self, p: &BigUint) -> bool {
        self.min_hamming_weight
            .is_none_or(|w| p.count_ones() >= w)
    }

    pub fn run(&self) -> Result<SafePrime> {
        let mut examined = 0u64;
        let tick = |examined: &mut u64| -> Result<()> {
            *examined += 1;
            match self.budget {
                Some(b) if *examined > b => Err(Error::SearchBudgetExhausted(b)),
                _ => Ok(()),
            }
        };
        for small in [5u8, 7, 11] {
            let p = BigUint::from(small);
            if p > self.start {
                tick(&mut examined)?;
                if self.accepts_weight(&p) {
                    return SafePrime::new(p);
                }
            }
        }
        // first candidate > max(start, 11) with p = 11 mod 12
        let base = self.start.clone().max(BigUint::from(11u8));
        let r = (&base % 12u8).to_u64().expect("small");
        let mut p = &base + (11 + 12 - r) % 12;
        if p == base {
            p += 12u8;
        }
        let primes = sieve_primes();
        let mut residues: Vec<u64> = primes
            .iter()
            .map(|&s| (&p % s).to_u64().expect("small"))
            .collect();
        let sieve_exact = p > BigUint::from(1u64 << 17);
        loop {
            tick(&mut examined)?;
            // p = 0 or q = 0 mod s means a small factor, unless p or q is s itself
            let passes = !sieve_exact
                || residues.iter().all(|&r| r != 0 && r != 1);
            if passes && self.accepts_weight(&p) {
                let q: BigUint = (&p - 1u8) >> 1;
                if is_prime(&q) && is_prime(&p) {
                    return Ok(SafePrime { p, q });
                }
            }
            p += 12u8;
            for (r, &s) in residues.iter_mut().zip(primes) {
                *r = (*r + 12) % s;
            }
        }
    }
}

fn sieve_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    // 2 and 3 are fixed by the residue class
    &PRIMES.get_or_init(|| small_primes(1 << 16))[2..]
}

/// `NSP(x)`, the least safe prime strictly greater than `x`.
pub fn next_safe_prime(x: &BigUint) -> SafePrime {
    SafePrimeSearch::above(x.clone())
        .run()
        .expect("unbounded search always finishes")
}

/// Samples a primitive root of a safe-prime field uniformly from
/// `{2, ..., p - 2}` until one passes the order test.
pub fn find_primitive_root<R: Rng + ?Sized>(sp: &SafePrime, rng: &mut R) -> FieldElement {
    find_primitive_root_counted(sp, rng).0
}

/// As [`find_primitive_root`], also returning the number of candidates drawn.
pub fn find_primitive_root_counted<R: Rng + ?Sized>(
    sp: &SafePrime,
    rng: &mut R,
) -> (FieldElement, u64) {
    let field = sp.field();
    let lo = BigUint::from(2u8);
    let hi = sp.p() - 1u8;
    let mut attempts = 0;
    loop {
        attempts += 1;
        let g = rng.gen_biguint_range(&lo, &hi);
        if sp.is_primitive(&g) {
            return (field.wrap(g), attempts);
        }
    }
}

/// `count` distinct primitive roots `g^a` with `a` odd, `a != q`,
/// `1 <= a <= p - 2`.
pub fn derive_primitive_roots<R: Rng + ?Sized>(
    g: &FieldElement,
    sp: &SafePrime,
    count: usize,
    rng: &mut R,
) -> Result<Vec<FieldElement>> {
    if g.field().modulus() != Some(sp.p()) || !sp.is_primitive(g.value()) {
        return Err(Error::NotPrimitive(g.value().clone()));
    }
    let available = sp.primitive_root_count();
    if BigUint::from(count) > available {
        return Err(Error::CountExceedsAvailable {
            requested: count,
            available,
        });
    }
    let max_a = sp.p() - 2u8;
    let exponents: Vec<BigUint> = match max_a.to_u64() {
        Some(max) if max <= 1 << 20 => {
            let q = sp.q().to_u64().expect("small");
            let mut all: Vec<u64> = (1..=max).step_by(2).filter(|&a| a != q).collect();
            all.partial_shuffle(rng, count);
            all.truncate(count);
            all.into_iter().map(BigUint::from).collect()
        }
        _ => {
            let mut seen = HashSet::new();
            let mut out = Vec::with_capacity(count);
            let one = BigUint::one();
            while out.len() < count {
                let a = rng.gen_biguint_range(&one, &(&max_a + 1u8));
                if a.is_odd() && &a != sp.q() && seen.insert(a.clone()) {
                    out.push(a);
                }
            }
            out
        }
    };
    Ok(exponents.iter().map(|a| g.pow(a)).collect())
}

/// GF(2^e) with `2^e - 1` prime: every element other than 0 and 1 is primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MersenneField {
    exponent: u64,
    spec: FieldSpec,
}

impl MersenneField {
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Uniform over the field minus `{0, 1}`, with no order check.
    pub fn random_primitive<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let v = rng.gen_biguint_range(&BigUint::from(2u8), self.spec.order());
        self.spec.wrap(v)
    }
}

pub fn mersenne_field(exponent: u64) -> Result<MersenneField> {
    if exponent < 2 || !is_prime(&((BigUint::one() << exponent) - 1u8)) {
        return Err(Error::NotMersenneExponent(exponent));
    }
    Ok(MersenneField {
        exponent,
        spec: FieldSpec::binary(exponent)?,
    })
}

/// Factors `n` by trial division up to `bound`, accepting a prime cofactor.
pub fn factor_trial(n: &BigUint, bound: u64) -> Option<Vec<(BigUint, u32)>> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    if rest.is_zero() {
        return None;
    }
    let mut push = |f: u64, rest: &mut BigUint| {
        let mut e = 0;
        while (&*rest % f).is_zero() {
            *rest /= f;
            e += 1;
        }
        if e > 0 {
            out.push((BigUint::from(f), e));
        }
    };
    push(2, &mut rest);
    let mut f = 3u64;
    while f <= bound && BigUint::from(f) * f <= rest {
        push(f, &mut rest);
        f += 2;
    }
    if rest.is_one() {
        return Some(out);
    }
    if is_prime(&rest) {
        out.push((rest, 1));
        return Some(out);
    }
    None
}

/// Trial-division limit for [`PrimitiveSampler`] on general fields.
pub const FACTOR_BOUND: u64 = 1 << 24;

/// Draws uniform primitive elements of a field.
///
/// Safe-prime fields use the two-exponentiation test, fields with a prime
/// group order accept anything outside `{0, 1}`, and other fields test
/// against a trial-division factorization of the group order.
#[derive(Clone, Debug)]
pub struct PrimitiveSampler {
    field: FieldSpec,
    factors: Vec<(BigUint, u32)>,
    prime_order: bool,
}

impl PrimitiveSampler {
    pub fn for_field(field: &FieldSpec) -> Result<Self> {
        let n = field.group_order();
        if n < &BigUint::from(2u8) {
            return Err(Error::BadParams(format!(
                "{field:?} has no primitive element besides 1"
            )));
        }
        let factors = if is_prime(n) {
            vec![(n.clone(), 1)]
        } else if let Some(sp) = field.modulus().and_then(|p| SafePrime::new(p.clone()).ok()) {
            sp.factorization()
        } else {
            factor_trial(n, FACTOR_BOUND).ok_or_else(|| Error::UnfactorableGroupOrder(n.clone()))?
        };
        Ok(PrimitiveSampler {
            field: field.clone(),
            prime_order: factors.len() == 1 && factors[0].1 == 1,
            factors,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Prime factorization of the group order.
    pub fn factorization(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn is_primitive(&self, g: &FieldElement) -> bool {
        if g.field() != &self.field || g.is_zero() {
            return false;
        }
        if self.prime_order {
            return !g.is_one();
        }
        let n = self.field.group_order();
        self.factors.iter().all(|(f, _)| !g.pow(&(n / f)).is_one())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let lo = BigUint::from(2u8);
        loop {
            let g = self.field.wrap(rng.gen_biguint_range(&lo, self.field.order()));
            if self.is_primitive(&g) {
                return g;
            }
        }
    }
}

/// Hardy-Littlewood constant in the Sophie Germain density estimate.
pub const SOPHIE_GERMAIN_CONSTANT: f64 = 1.32032;

/// Estimated number of Sophie Germain primes below `x`: `C x / (ln x)^2`.
pub fn sophie_germain_estimate(x: f64) -> f64 {
    SOPHIE_GERMAIN_CONSTANT * x / (x.ln() * x.ln())
}
