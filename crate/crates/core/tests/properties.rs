use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use polyvss::coherence::{detect, identify};
use polyvss::poly::{lagrange_interpolate, poly_gcd};
use polyvss::shamir::{deal, reconstruct};
use polyvss::vss::{deal_scheme, retry_on_collision, FieldChoice, Scheme};
use polyvss::{FieldSpec, PointSet, Polynomial};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::prime_u64(257).unwrap()),
        Just(FieldSpec::prime_u64(65521).unwrap()),
        Just(FieldSpec::binary(8).unwrap()),
        Just(FieldSpec::binary(13).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn any_t_subset_reconstructs(f in field_strategy(), t in 1usize..5, extra in 0usize..4, seed: u64) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let n = t + extra;
        let secret = f.random_element(&mut rng);
        let set = deal(&secret, t, n, &mut rng).unwrap();
        let mut shares = set.shares.clone();
        shares.shuffle(&mut rng);
        prop_assert_eq!(reconstruct(&shares[..t], t).unwrap(), secret);
    }

    #[test]
    fn interpolant_passes_through_points(f in field_strategy(), k in 1usize..7, seed: u64) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut xs = HashSet::new();
        while xs.len() < k {
            xs.insert(f.random_element(&mut rng).into_value());
        }
        let pts: Vec<(BigUint, BigUint)> = xs.into_iter().map(|x| (x, f.random_element(&mut rng).into_value())).collect();
        let p = lagrange_interpolate(&PointSet::from_values(&f, pts.clone()).unwrap()).unwrap();
        prop_assert!(p.degree().unwrap_or(0) < k);
        for (x, y) in pts {
            prop_assert_eq!(p.evaluate(&f.element(x).unwrap()).unwrap().into_value(), y);
        }
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(0u64..101, 1..8), b in prop::collection::vec(0u64..101, 1..8), c in prop::collection::vec(0u64..101, 1..4)) {
        let f = FieldSpec::prime_u64(101).unwrap();
        let common = Polynomial::from_u64s(&f, &c).unwrap();
        let pa = Polynomial::from_u64s(&f, &a).unwrap().mul(&common).unwrap();
        let pb = Polynomial::from_u64s(&f, &b).unwrap().mul(&common).unwrap();
        prop_assume!(!pa.is_zero() || !pb.is_zero());
        let g = poly_gcd(&pa, &pb).unwrap();
        prop_assert!(pa.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(pb.div_rem(&g).unwrap().1.is_zero());
        if !common.is_zero() && !pa.is_zero() && !pb.is_zero() {
            prop_assert!(g.div_rem(&common.monic()).unwrap().1.is_zero());
        }
    }

    #[test]
    fn honest_shares_verify_under_every_scheme(n in 2usize..7, seed: u64) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let q = FieldSpec::prime_u64(8191).unwrap();
        let vf = FieldChoice::SafePrimeAboveBitsize.resolve_bits(13).unwrap();
        for scheme in Scheme::ALL {
            let (values, bundles) = retry_on_collision(64, || {
                let set = deal(&q.random_element(&mut rng), 2.min(n), n, &mut rng)?;
                let values = set.values();
                if values.iter().collect::<HashSet<_>>().len() < n {
                    // equal share values carry no verification data
                    return Err(polyvss::Error::MidHalfCollision(BigUint::default()));
                }
                Ok((values.clone(), deal_scheme(scheme, &values, 13, &vf, &mut rng)?))
            }).unwrap();
            for b in &bundles {
                for (i, v) in values.iter().enumerate() {
                    if scheme.is_public() || b.verifier_index != i + 1 {
                        prop_assert!(b.verify(i + 1, v).unwrap(), "{} share {}", scheme, i + 1);
                    }
                }
                prop_assert_eq!(b.pack().len(), b.packed_bits());
            }
        }
    }

    #[test]
    fn single_cheater_is_identified(m in 4usize..8, seed: u64) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let f = FieldSpec::prime_u64(2_147_483_647).unwrap();
        let t = 2;
        let set = deal(&f.random_element(&mut rng), t, m, &mut rng).unwrap();
        let mut shares = set.shares.clone();
        let victim = rand::Rng::gen_range(&mut rng, 0..m);
        shares[victim].value = shares[victim].value.add(&f.one()).unwrap();
        let r = identify(&detect(&shares, t).unwrap(), &shares, t).unwrap();
        prop_assert_eq!(r.cheaters, vec![victim + 1]);
    }
}

#[test]
fn permutation_of_nonzero_residues() {
    let f = FieldSpec::prime_u64(263).unwrap();
    let sampler = polyvss::numtheory::PrimitiveSampler::for_field(&f).unwrap();
    for r in f.elements().filter(|e| !e.is_zero() && sampler.is_primitive(e)) {
        let image: HashSet<u64> = (1..263u64).map(|x| r.pow_u64(x).value().to_u64().unwrap()).collect();
        assert_eq!(image.len(), 262);
        assert!(!image.contains(&0));
    }
}
