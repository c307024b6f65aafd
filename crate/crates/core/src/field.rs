//! Exact arithmetic in prime fields GF(p) and binary fields GF(2^k).
//!
//! A [`FieldSpec`] is a cheap, shareable handle; [`FieldElement`] pairs a
//! canonical value with the field it lives in. Binary-field elements are
//! coefficient bitstrings, and the same bitstring read as an unsigned integer
//! is the natural number used whenever an element appears as an exponent.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::gf2x;
use crate::numtheory::is_prime;
use crate::small::SmallField;

/// Lowest-weight irreducible polynomials `x^k + x^a (+ x^b + x^c) + 1`, listed
/// by degree with their middle exponents.
pub const REDUCTION_TABLE: &[(u64, &[u64])] = &[
    (1, &[]),
    (2, &[1]),
    (3, &[1]),
    (4, &[1]),
    (5, &[2]),
    (6, &[1]),
    (7, &[1]),
    (8, &[4, 3, 1]),
    (9, &[1]),
    (10, &[3]),
    (11, &[2]),
    (12, &[3]),
    (13, &[4, 3, 1]),
    (14, &[5]),
    (15, &[1]),
    (16, &[5, 3, 1]),
    (17, &[3]),
    (18, &[3]),
    (19, &[5, 2, 1]),
    (20, &[3]),
    (21, &[2]),
    (22, &[1]),
    (23, &[5]),
    (24, &[4, 3, 1]),
    (25, &[3]),
    (26, &[4, 3, 1]),
    (27, &[5, 2, 1]),
    (28, &[1]),
    (29, &[2]),
    (30, &[1]),
    (31, &[3]),
    (32, &[7, 3, 2]),
    (33, &[10]),
    (34, &[7]),
    (35, &[2]),
    (36, &[9]),
    (37, &[6, 4, 1]),
    (38, &[6, 5, 1]),
    (39, &[4]),
    (40, &[5, 4, 3]),
    (41, &[3]),
    (42, &[7]),
    (43, &[6, 4, 3]),
    (44, &[5]),
    (45, &[4, 3, 1]),
    (46, &[1]),
    (47, &[5]),
    (48, &[5, 3, 2]),
    (49, &[9]),
    (50, &[4, 3, 2]),
    (51, &[6, 3, 1]),
    (52, &[3]),
    (53, &[6, 2, 1]),
    (54, &[9]),
    (55, &[7]),
    (56, &[7, 4, 2]),
    (57, &[4]),
    (58, &[19]),
    (59, &[7, 4, 2]),
    (60, &[1]),
    (61, &[5, 2, 1]),
    (62, &[29]),
    (63, &[1]),
    (64, &[4, 3, 1]),
    (89, &[38]),
    (107, &[9, 7, 4]),
    (127, &[1]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    Binary,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    kind: FieldKind,
    /// The prime `p`, or the packed reduction polynomial.
    modulus: BigUint,
    /// `k` for GF(2^k); zero for prime fields.
    degree: u64,
    order: BigUint,
    group_order: BigUint,
    small: Option<SmallField>,
}

/// A finite field GF(p) or GF(2^k).
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.kind {
            FieldKind::Prime => write!(f, "GF({:#x})", self.0.modulus),
            FieldKind::Binary => write!(f, "GF(2^{}; {:#x})", self.0.degree, self.0.modulus),
        }
    }
}

impl FieldSpec {
    /// GF(p), after checking that `p` is prime.
    pub fn prime(p: BigUint) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::prime_unchecked(p))
    }

    pub fn prime_u64(p: u64) -> Result<Self> {
        Self::prime(BigUint::from(p))
    }

    /// GF(p) for a modulus the caller already knows to be prime.
    pub(crate) fn prime_unchecked(p: BigUint) -> Self {
        let small = p
            .to_u64()
            .filter(|&v| v <= 1 << 32)
            .map(|p| SmallField::Prime { p });
        let group_order = &p - 1u8;
        FieldSpec(Arc::new(Inner {
            kind: FieldKind::Prime,
            order: p.clone(),
            modulus: p,
            degree: 0,
            group_order,
            small,
        }))
    }

    /// GF(2^k) with the built-in lowest-weight reduction polynomial.
    pub fn binary(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadDegree);
        }
        let poly = match REDUCTION_TABLE.iter().find(|(d, _)| *d == k) {
            Some((_, middle)) => gf2x::sparse(k, middle),
            None => gf2x::search_lowest_weight(k).ok_or(Error::BadDegree)?.0,
        };
        Ok(Self::binary_unchecked(k, poly))
    }

    /// GF(2^k) reduced by a caller-supplied polynomial.
    pub fn binary_with_reduction(k: u64, reduction: BigUint) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadDegree);
        }
        if reduction.bits() != k + 1
            || !reduction.bit(0)
            || !gf2x::is_irreducible(&gf2x::from_big(&reduction))
        {
            return Err(Error::Reducible(reduction));
        }
        Ok(Self::binary_unchecked(k, reduction))
    }

    fn binary_unchecked(k: u64, poly: BigUint) -> Self {
        let order = BigUint::one() << k;
        let small = (k <= 32).then(|| SmallField::Binary {
            k: k as u32,
            poly: poly.to_u64().expect("degree <= 32"),
        });
        FieldSpec(Arc::new(Inner {
            kind: FieldKind::Binary,
            group_order: &order - 1u8,
            order,
            modulus: poly,
            degree: k,
            small,
        }))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.kind == FieldKind::Prime
    }

    /// The prime modulus, for prime fields.
    pub fn modulus(&self) -> Option<&BigUint> {
        self.is_prime_field().then_some(&self.0.modulus)
    }

    /// `k`, for binary fields.
    pub fn degree(&self) -> Option<u64> {
        (!self.is_prime_field()).then_some(self.0.degree)
    }

    /// Packed reduction polynomial, for binary fields.
    pub fn reduction_polynomial(&self) -> Option<&BigUint> {
        (!self.is_prime_field()).then_some(&self.0.modulus)
    }

    /// Number of field elements.
    pub fn order(&self) -> &BigUint {
        &self.0.order
    }

    /// Order of the multiplicative group.
    pub fn group_order(&self) -> &BigUint {
        &self.0.group_order
    }

    /// Bits needed to write any element: `bs(p)` or `k`.
    pub fn element_bits(&self) -> u64 {
        match self.0.kind {
            FieldKind::Prime => self.0.modulus.bits(),
            FieldKind::Binary => self.0.degree,
        }
    }

    pub(crate) fn small(&self) -> Option<SmallField> {
        self.0.small
    }

    pub fn contains(&self, v: &BigUint) -> bool {
        v < &self.0.order
    }

    pub fn element(&self, value: BigUint) -> Result<FieldElement> {
        if !self.contains(&value) {
            return Err(Error::ValueOutOfRange { value });
        }
        Ok(FieldElement {
            value,
            field: self.clone(),
        })
    }

    pub fn element_u64(&self, value: u64) -> Result<FieldElement> {
        self.element(BigUint::from(value))
    }

    /// The canonical residue of an arbitrary natural: `v mod p`, or `v mod f(x)`.
    pub fn reduce(&self, v: &BigUint) -> FieldElement {
        let value = match self.0.kind {
            FieldKind::Prime => v % &self.0.modulus,
            FieldKind::Binary => gf2x::to_big(&gf2x::rem(
                &gf2x::from_big(v),
                &gf2x::from_big(&self.0.modulus),
            )),
        };
        FieldElement {
            value,
            field: self.clone(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(BigUint::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(BigUint::one())
    }

    pub(crate) fn wrap(&self, value: BigUint) -> FieldElement {
        debug_assert!(self.contains(&value));
        FieldElement {
            value,
            field: self.clone(),
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let value = match self.0.small {
            Some(s) => BigUint::from(rng.gen_range(0..s.order())),
            None => rng.gen_biguint_below(&self.0.order),
        };
        self.wrap(value)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let value = match self.0.small {
            Some(s) => BigUint::from(rng.gen_range(1..s.order())),
            None => rng.gen_biguint_range(&BigUint::one(), &self.0.order),
        };
        self.wrap(value)
    }

    /// Every element in increasing natural order; for desk-scale fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let n = self.0.order.to_u64().expect("field too large to enumerate");
        (0..n).map(move |v| self.wrap(BigUint::from(v)))
    }

    // Raw arithmetic on canonical values. Callers guarantee membership.

    pub(crate) fn add_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if let Some(s) = self.0.small {
            return BigUint::from(s.add(lo(a), lo(b)));
        }
        match self.0.kind {
            FieldKind::Prime => {
                let s = a + b;
                if s >= self.0.modulus {
                    s - &self.0.modulus
                } else {
                    s
                }
            }
            FieldKind::Binary => a ^ b,
        }
    }

    pub(crate) fn sub_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if let Some(s) = self.0.small {
            return BigUint::from(s.sub(lo(a), lo(b)));
        }
        match self.0.kind {
            FieldKind::Prime => {
                if a >= b {
                    a - b
                } else {
                    &self.0.modulus - (b - a)
                }
            }
            FieldKind::Binary => a ^ b,
        }
    }

    pub(crate) fn neg_raw(&self, a: &BigUint) -> BigUint {
        self.sub_raw(&BigUint::zero(), a)
    }

    pub(crate) fn mul_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if let Some(s) = self.0.small {
            return BigUint::from(s.mul(lo(a), lo(b)));
        }
        self.mul_big(a, b)
    }

    fn mul_big(&self, a: &BigUint, b: &BigUint) -> BigUint {
        match self.0.kind {
            FieldKind::Prime => (a * b) % &self.0.modulus,
            FieldKind::Binary => gf2x::to_big(&gf2x::mul_mod(
                &gf2x::from_big(a),
                &gf2x::from_big(b),
                &gf2x::from_big(&self.0.modulus),
            )),
        }
    }

    pub(crate) fn inv_raw(&self, a: &BigUint) -> Result<BigUint> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(s) = self.0.small {
            return Ok(BigUint::from(s.inv(lo(a))));
        }
        match self.0.kind {
            FieldKind::Prime => {
                let p = &self.0.modulus;
                Ok(a.modpow(&(p - 2u8), p))
            }
            FieldKind::Binary => Ok(gf2x::to_big(
                &gf2x::inv_mod(&gf2x::from_big(a), &gf2x::from_big(&self.0.modulus))
                    .expect("irreducible modulus"),
            )),
        }
    }

    /// `a^e` for a natural exponent, by square-and-multiply; `0^0 = 1`.
    pub(crate) fn pow_raw(&self, a: &BigUint, e: &BigUint) -> BigUint {
        if let Some(s) = self.0.small {
            return BigUint::from(s.pow_big(lo(a), e));
        }
        match self.0.kind {
            FieldKind::Prime if !e.is_zero() => a.modpow(e, &self.0.modulus),
            _ => {
                let mut acc = BigUint::one();
                for i in (0..e.bits()).rev() {
                    acc = self.mul_big(&acc, &acc);
                    if e.bit(i) {
                        acc = self.mul_big(&acc, a);
                    }
                }
                acc
            }
        }
    }

    /// Multiplication that never takes the word-sized path.
    #[cfg(test)]
    pub(crate) fn mul_bignum(&self, a: &BigUint, b: &BigUint) -> BigUint {
        self.mul_big(a, b)
    }
}

#[inline]
fn lo(v: &BigUint) -> u64 {
    v.to_u64().expect("small-field element")
}

/// A canonical element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: BigUint,
    field: FieldSpec,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.add_raw(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.sub_raw(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.mul_raw(&self.value, &other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let inv = self.field.inv_raw(&other.value)?;
        Ok(self.field.wrap(self.field.mul_raw(&self.value, &inv)))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.wrap(self.field.neg_raw(&self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.field.wrap(self.field.inv_raw(&self.value)?))
    }

    /// `self^e` for a natural-number exponent.
    pub fn pow(&self, e: &BigUint) -> FieldElement {
        self.field.wrap(self.field.pow_raw(&self.value, e))
    }

    pub fn pow_u64(&self, e: u64) -> FieldElement {
        self.pow(&BigUint::from(e))
    }

    /// Least `d >= 1` with `self^d = 1`.
    ///
    /// `factored_group_order` lists `(prime, exponent)` pairs whose product is
    /// the group order. The order is found by dividing prime factors out of the
    /// group order, never by scanning divisors.
    pub fn multiplicative_order(&self, factored_group_order: &[(BigUint, u32)]) -> Result<BigUint> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.field.group_order();
        let mut product = BigUint::one();
        for (f, e) in factored_group_order {
            if *e == 0 || !is_prime(f) {
                return Err(Error::BadFactorization);
            }
            product *= f.pow(*e);
        }
        if &product != n {
            return Err(Error::BadFactorization);
        }
        let mut order = n.clone();
        for (f, e) in factored_group_order {
            for _ in 0..*e {
                let (candidate, rem) = order.div_rem(f);
                if !rem.is_zero() {
                    break;
                }
                if self.pow(&candidate).is_one() {
                    order = candidate;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_u64(p).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn gf7_examples() {
        let f = gf(7);
        let five = f.element_u64(5).unwrap();
        assert_eq!(five.inv().unwrap().value(), &big(3));
        let four = f.element_u64(4).unwrap();
        assert_eq!(four.add(&five).unwrap().value(), &big(2));
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(five.div(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = gf(7).one();
        let b = gf(11).one();
        assert_eq!(a.add(&b), Err(Error::MixedFields));
        let c = FieldSpec::binary(3).unwrap().one();
        assert_eq!(a.mul(&c), Err(Error::MixedFields));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(FieldSpec::prime_u64(15), Err(Error::NotPrime(big(15))));
        assert!(FieldSpec::prime_u64(1).is_err());
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // x^3 + x^2 + x + 1 = (x + 1)^3
        assert!(matches!(
            FieldSpec::binary_with_reduction(3, big(0b1111)),
            Err(Error::Reducible(_))
        ));
        assert!(FieldSpec::binary_with_reduction(3, big(0b1101)).is_ok());
        assert!(FieldSpec::binary_with_reduction(4, big(0b1101)).is_err());
    }

    #[test]
    fn element_range_checked() {
        assert!(gf(7).element_u64(7).is_err());
        assert!(FieldSpec::binary(3).unwrap().element_u64(8).is_err());
        assert_eq!(gf(7).reduce(&big(23)).value(), &big(2));
    }

    #[test]
    fn group_orders() {
        assert_eq!(gf(23).group_order(), &big(22));
        assert_eq!(FieldSpec::binary(5).unwrap().group_order(), &big(31));
    }

    #[test]
    fn table_entries_are_lowest_weight_irreducibles() {
        for &(k, middle) in REDUCTION_TABLE {
            let packed = gf2x::sparse(k, middle);
            assert!(gf2x::is_irreducible(&gf2x::from_big(&packed)), "k={k}");
            if k <= 64 {
                let (searched, _) = gf2x::search_lowest_weight(k).unwrap();
                assert_eq!(searched, packed, "k={k}");
            }
        }
    }

    #[test]
    fn binary_field_outside_table_searches() {
        let f = FieldSpec::binary(65).unwrap();
        assert!(gf2x::is_irreducible(&gf2x::from_big(
            f.reduction_polynomial().unwrap()
        )));
    }

    #[test]
    fn pow_zero_exponent() {
        let f = gf(13);
        for a in f.elements() {
            assert!(a.pow_u64(0).is_one());
        }
    }

    #[test]
    fn fermat_in_small_fields() {
        assert!(gf(5).element_u64(2).unwrap().pow_u64(4).is_one());
        assert_eq!(gf(11).element_u64(2).unwrap().pow_u64(5).value(), &big(10));
    }

    #[test]
    fn order_examples_gf23() {
        let f = gf(23);
        let fact = [(big(2), 1), (big(11), 1)];
        let ord = |a| f.element_u64(a).unwrap().multiplicative_order(&fact).unwrap();
        assert_eq!(ord(22), big(2));
        assert_eq!(ord(2), big(11));
        assert_eq!(ord(5), big(22));
        assert_eq!(ord(1), big(1));
        assert_eq!(f.zero().multiplicative_order(&fact), Err(Error::ZeroElement));
        assert_eq!(
            f.one().multiplicative_order(&[(big(2), 1), (big(13), 1)]),
            Err(Error::BadFactorization)
        );
        assert_eq!(
            f.one().multiplicative_order(&[(big(22), 1)]),
            Err(Error::BadFactorization)
        );
    }

    #[test]
    fn exhaustive_field_axioms_small_primes() {
        for p in [2u64, 3, 5, 7, 13, 31] {
            let f = gf(p);
            let elems: Vec<_> = f.elements().collect();
            for a in &elems {
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                }
                for b in &elems {
                    for c in &elems {
                        let l = a.add(b).unwrap().add(c).unwrap();
                        let r = a.add(&b.add(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let l = a.mul(&b.add(c).unwrap()).unwrap();
                        let r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_inverse_prime_257_and_gf256() {
        for f in [gf(257), FieldSpec::binary(8).unwrap()] {
            for a in f.elements().skip(1) {
                assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                assert_eq!(a.add(&a.neg()).unwrap(), f.zero());
            }
        }
    }

    #[test]
    fn exhaustive_distributivity_gf16() {
        let f = FieldSpec::binary(4).unwrap();
        let elems: Vec<_> = f.elements().collect();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let l = a.mul(&b.add(c).unwrap()).unwrap();
                    let r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        for f in [gf(251), FieldSpec::binary(8).unwrap()] {
            for a in f.elements() {
                let mut acc = f.one();
                for e in 0..=64u64 {
                    assert_eq!(a.pow_u64(e), acc, "a={a:?} e={e}");
                    acc = acc.mul(&a).unwrap();
                }
            }
        }
    }

    #[test]
    fn big_binary_field_inverse_and_fermat() {
        let f = FieldSpec::binary(127).unwrap();
        let mut rng = rand::thread_rng();
        for _ in 0..20 {
            let a = f.random_nonzero(&mut rng);
            assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            assert!(a.pow(f.group_order()).is_one());
        }
    }

    #[test]
    fn big_prime_field_inverse() {
        let p = (BigUint::one() << 127u32) - 1u8;
        let f = FieldSpec::prime(p).unwrap();
        let mut rng = rand::thread_rng();
        for _ in 0..20 {
            let a = f.random_nonzero(&mut rng);
            assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            assert!(a.pow(f.group_order()).is_one());
        }
    }

    proptest! {
        #[test]
        fn word_and_bignum_paths_agree_binary(a in 0u64..(1 << 20), b in 0u64..(1 << 20)) {
            let f = FieldSpec::binary(20).unwrap();
            prop_assert_eq!(f.mul_raw(&big(a), &big(b)), f.mul_bignum(&big(a), &big(b)));
        }

        #[test]
        fn word_and_bignum_paths_agree_prime(a in 0u64..65521, b in 0u64..65521) {
            let f = gf(65521);
            prop_assert_eq!(f.mul_raw(&big(a), &big(b)), f.mul_bignum(&big(a), &big(b)));
        }

        #[test]
        fn order_divides_group_order(a in 1u64..23) {
            let f = gf(23);
            let fact = [(big(2), 1), (big(11), 1)];
            let x = f.element_u64(a).unwrap();
            let ord = x.multiplicative_order(&fact).unwrap();
            prop_assert!((big(22) % &ord).is_zero());
            prop_assert!(x.pow(&ord).is_one());
            for (p, _) in &fact {
                if (&ord % p).is_zero() {
                    prop_assert!(!x.pow(&(&ord / p)).is_one());
                }
            }
            // safe prime 23: order is one of 1, 2, 11, 22
            prop_assert!([1u64, 2, 11, 22].contains(&ord.to_u64().unwrap()));
        }
    }
}
