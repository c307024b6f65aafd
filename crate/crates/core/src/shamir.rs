//! The (t, n) threshold scheme by polynomial sampling.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{lagrange_interpolate, random_polynomial, PointSet, Polynomial};

/// A share `(i, P(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Share {
    pub index: usize,
    pub value: FieldElement,
}

impl Share {
    pub fn new(index: usize, value: FieldElement) -> Result<Self> {
        if index == 0 {
            return Err(Error::IndexOutOfRange(0));
        }
        Ok(Share { index, value })
    }

    pub fn field(&self) -> &FieldSpec {
        self.value.field()
    }
}

/// The full output of a dealing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareSet {
    pub shares: Vec<Share>,
    pub threshold: usize,
    pub field: FieldSpec,
}

impl ShareSet {
    pub fn total(&self) -> usize {
        self.shares.len()
    }

    /// Share values as naturals, in index order.
    pub fn values(&self) -> Vec<BigUint> {
        self.shares.iter().map(|s| s.value.value().clone()).collect()
    }

    pub fn get(&self, index: usize) -> Result<&Share> {
        self.shares
            .iter()
            .find(|s| s.index == index)
            .ok_or(Error::IndexOutOfRange(index))
    }
}

fn check_params(field: &FieldSpec, t: usize, n: usize) -> Result<()> {
    if t == 0 || t > n {
        return Err(Error::BadThreshold { t, n });
    }
    if BigUint::from(n) >= *field.order() {
        return Err(Error::FieldTooSmall { n });
    }
    Ok(())
}

/// Deals `n` shares of `secret` at abscissas `1..=n` from a random polynomial
/// of exact degree `t - 1`.
pub fn deal<R: Rng + ?Sized>(
    secret: &FieldElement,
    t: usize,
    n: usize,
    rng: &mut R,
) -> Result<ShareSet> {
    check_params(secret.field(), t, n)?;
    let p = random_polynomial(t - 1, secret, rng)?;
    deal_with_polynomial(&p, t, n)
}

/// Deals from a caller-chosen polynomial; its constant term is the secret.
pub fn deal_with_polynomial(p: &Polynomial, t: usize, n: usize) -> Result<ShareSet> {
    let field = p.field();
    check_params(field, t, n)?;
    if p.degree().unwrap_or(0) >= t {
        return Err(Error::BadThreshold { t, n });
    }
    let shares = (1..=n)
        .map(|i| {
            let x = field.reduce(&BigUint::from(i));
            Share {
                index: i,
                value: p.evaluate(&x).expect("same field"),
            }
        })
        .collect();
    Ok(ShareSet {
        shares,
        threshold: t,
        field: field.clone(),
    })
}

/// Interpolates the first `t` shares and evaluates at zero.
pub fn reconstruct(shares: &[Share], t: usize) -> Result<FieldElement> {
    if t == 0 {
        return Err(Error::BadThreshold { t, n: shares.len() });
    }
    if shares.len() < t {
        return Err(Error::NotEnoughShares {
            needed: t,
            got: shares.len(),
        });
    }
    let chosen = &shares[..t];
    let field = chosen[0].field().clone();
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(t);
    for s in chosen {
        if s.field() != &field {
            return Err(Error::MixedFields);
        }
        if !seen.insert(s.index) {
            return Err(Error::DuplicateIndex(s.index));
        }
        let x = field.reduce(&BigUint::from(s.index));
        points.push((x, s.value.clone()));
    }
    let p = lagrange_interpolate(&PointSet::new(&field, &points)?)?;
    p.evaluate(&field.zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_u64(p).unwrap()
    }

    fn share(f: &FieldSpec, i: usize, v: u64) -> Share {
        Share::new(i, f.element_u64(v).unwrap()).unwrap()
    }

    #[test]
    fn worked_gf7_example() {
        let f = gf(7);
        let p = Polynomial::from_u64s(&f, &[3, 2]).unwrap();
        let set = deal_with_polynomial(&p, 2, 3).unwrap();
        let vals: Vec<u64> = set.values().iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(vals, vec![5, 0, 2]);
        let got = reconstruct(&[share(&f, 1, 5), share(&f, 3, 2)], 2).unwrap();
        assert_eq!(got.value(), &BigUint::from(3u8));
    }

    #[test]
    fn threshold_one_copies_secret() {
        let f = gf(101);
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let s = f.element_u64(42).unwrap();
        let set = deal(&s, 1, 5, &mut rng).unwrap();
        assert!(set.shares.iter().all(|sh| sh.value == s));
        assert_eq!(reconstruct(&set.shares[3..4], 1).unwrap(), s);
    }

    #[test]
    fn parameter_errors() {
        let f = gf(7);
        let mut rng = ChaCha20Rng::seed_from_u64(0);
        let s = f.element_u64(3).unwrap();
        assert_eq!(deal(&s, 4, 3, &mut rng), Err(Error::BadThreshold { t: 4, n: 3 }));
        assert_eq!(deal(&s, 0, 3, &mut rng), Err(Error::BadThreshold { t: 0, n: 3 }));
        assert_eq!(deal(&s, 2, 7, &mut rng), Err(Error::FieldTooSmall { n: 7 }));
        let sh = [share(&f, 1, 5)];
        assert_eq!(reconstruct(&sh, 2), Err(Error::NotEnoughShares { needed: 2, got: 1 }));
        let dup = [share(&f, 1, 5), share(&f, 1, 5)];
        assert_eq!(reconstruct(&dup, 2), Err(Error::DuplicateIndex(1)));
        assert!(Share::new(0, f.one()).is_err());
    }

    fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == t)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn every_subset_reconstructs() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for f in [gf(65521), FieldSpec::binary(12).unwrap()] {
            for n in 1..=8 {
                for t in 1..=n {
                    let s = f.random_element(&mut rng);
                    let set = deal(&s, t, n, &mut rng).unwrap();
                    for sub in subsets(n, t) {
                        let picked: Vec<Share> = sub.iter().map(|&i| set.shares[i].clone()).collect();
                        assert_eq!(reconstruct(&picked, t).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn perfect_secrecy_small_fields() {
        // with t-1 shares fixed, each secret has the same number of completions
        for p in [5u64, 7, 11] {
            let f = gf(p);
            let fixed = [(1u64, 2u64), (2, 4)];
            let mut counts = vec![0u32; p as usize];
            for a0 in 0..p {
                for a1 in 0..p {
                    for a2 in 1..p {
                        let poly = Polynomial::from_u64s(&f, &[a0, a1, a2]).unwrap();
                        let ok = fixed.iter().all(|&(x, y)| {
                            poly.evaluate(&f.element_u64(x).unwrap()).unwrap().value() == &BigUint::from(y)
                        });
                        if ok {
                            counts[a0 as usize] += 1;
                        }
                    }
                }
            }
            // every secret but the one forcing degree < 2 has one completion
            let ones = counts.iter().filter(|&&c| c == 1).count();
            let zeros = counts.iter().filter(|&&c| c == 0).count();
            assert_eq!((ones, zeros), (p as usize - 1, 1), "p={p}");
            // counting polynomials of degree <= t-1 instead, every secret has exactly one
            let mut all = vec![0u32; p as usize];
            for a0 in 0..p {
                for a1 in 0..p {
                    for a2 in 0..p {
                        let poly = Polynomial::from_u64s(&f, &[a0, a1, a2]).unwrap();
                        if fixed.iter().all(|&(x, y)| {
                            poly.evaluate(&f.element_u64(x).unwrap()).unwrap().value() == &BigUint::from(y)
                        }) {
                            all[a0 as usize] += 1;
                        }
                    }
                }
            }
            assert!(all.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn tampering_changes_reconstruction() {
        let f = gf(31);
        let mut rng = ChaCha20Rng::seed_from_u64(12);
        let trials = 20_000;
        let mut changed = 0;
        for _ in 0..trials {
            let s = f.random_element(&mut rng);
            let set = deal(&s, 3, 5, &mut rng).unwrap();
            let mut picked = set.shares[..3].to_vec();
            let which = rng.gen_range(0..3);
            picked[which].value = f.random_element(&mut rng);
            if reconstruct(&picked, 3).unwrap() != s {
                changed += 1;
            }
        }
        let rate = changed as f64 / trials as f64;
        let expect = 30.0 / 31.0;
        let sigma = (expect * (1.0 - expect) / trials as f64).sqrt();
        assert!((rate - expect).abs() < 5.0 * sigma, "rate={rate}");
    }

    proptest! {
        #[test]
        fn round_trip(seed in any::<u64>(), n in 1usize..10, t_frac in 0.0f64..1.0) {
            let t = 1 + ((n - 1) as f64 * t_frac) as usize;
            let f = gf(2_147_483_647);
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let s = f.random_element(&mut rng);
            let mut set = deal(&s, t, n, &mut rng).unwrap();
            prop_assert_eq!(set.shares.len(), n);
            set.shares.reverse();
            prop_assert_eq!(reconstruct(&set.shares, t).unwrap(), s);
        }
    }
}
