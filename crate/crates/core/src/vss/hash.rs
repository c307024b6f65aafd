//! Digest commitments: one digest for the secret (detection) and one per share
//! (identification).

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::shamir::Share;

pub type Digest256 = [u8; 32];

/// A 256-bit hash function, named so the choice can be recorded alongside
/// its digests.
pub trait ShareHasher {
    const ID: &'static str;
    fn digest(&self, bytes: &[u8]) -> Digest256;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sha256Hasher;

impl ShareHasher for Sha256Hasher {
    const ID: &'static str = "sha256";

    fn digest(&self, bytes: &[u8]) -> Digest256 {
        Sha256::digest(bytes).into()
    }
}

/// Big-endian bytes of `v`, left-padded to the byte width of the field.
fn field_bytes(v: &BigUint, element_bits: u64) -> Vec<u8> {
    let width = element_bits.div_ceil(8) as usize;
    let raw = if v.bits() == 0 { Vec::new() } else { v.to_bytes_be() };
    let mut out = vec![0u8; width.saturating_sub(raw.len())];
    out.extend_from_slice(&raw);
    out
}

fn digest_element<H: ShareHasher>(h: &H, e: &FieldElement) -> Digest256 {
    h.digest(&field_bytes(e.value(), e.field().element_bits()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HashCommitments {
    pub hash_id: String,
    pub secret_digest: Digest256,
    pub share_digests: Vec<Digest256>,
}

impl HashCommitments {
    /// Digests of the secret and of every share, in share order.
    pub fn commit<H: ShareHasher>(h: &H, secret: &FieldElement, shares: &[Share]) -> Self {
        HashCommitments {
            hash_id: H::ID.to_string(),
            secret_digest: digest_element(h, secret),
            share_digests: shares.iter().map(|s| digest_element(h, &s.value)).collect(),
        }
    }

    fn check_id<H: ShareHasher>(&self) -> Result<()> {
        if self.hash_id != H::ID {
            return Err(Error::SchemeMismatch {
                expected: self.hash_id.clone(),
                found: H::ID.to_string(),
            });
        }
        Ok(())
    }

    /// Detection: does the reconstructed secret match?
    pub fn verify_secret<H: ShareHasher>(&self, h: &H, candidate: &FieldElement) -> Result<bool> {
        self.check_id::<H>()?;
        Ok(digest_element(h, candidate) == self.secret_digest)
    }

    /// Identification: does shareholder `index` (1-based) hold its share?
    pub fn verify_share<H: ShareHasher>(&self, h: &H, index: usize, candidate: &FieldElement) -> Result<bool> {
        self.check_id::<H>()?;
        let want = index
            .checked_sub(1)
            .and_then(|i| self.share_digests.get(i))
            .ok_or(Error::IndexOutOfRange(index))?;
        Ok(&digest_element(h, candidate) == want)
    }

    /// Total verification data in bits.
    pub fn size_bits(&self) -> u64 {
        256 * (1 + self.share_digests.len() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::shamir::deal;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn known_digest() {
        let d = Sha256Hasher.digest(b"abc");
        assert_eq!(d[..4], [0xba, 0x78, 0x16, 0xbf]);
        assert_eq!(field_bytes(&BigUint::from(5u8), 16), vec![0, 5]);
        assert_eq!(field_bytes(&BigUint::from(0u8), 9), vec![0, 0]);
    }

    #[test]
    fn detection_and_identification() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let f = FieldSpec::prime_u64(65521).unwrap();
        let secret = f.element_u64(1234).unwrap();
        let set = deal(&secret, 3, 5, &mut rng).unwrap();
        let c = HashCommitments::commit(&Sha256Hasher, &secret, &set.shares);
        assert!(c.verify_secret(&Sha256Hasher, &secret).unwrap());
        assert!(!c.verify_secret(&Sha256Hasher, &f.element_u64(1235).unwrap()).unwrap());
        for s in &set.shares {
            assert!(c.verify_share(&Sha256Hasher, s.index, &s.value).unwrap());
        }
        assert_eq!(c.verify_share(&Sha256Hasher, 6, &secret), Err(Error::IndexOutOfRange(6)));
        assert_eq!(c.verify_share(&Sha256Hasher, 0, &secret), Err(Error::IndexOutOfRange(0)));
    }

    #[test]
    fn bit_flips_are_flagged() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let f = FieldSpec::prime_u64(2_147_483_647).unwrap();
        let secret = f.random_element(&mut rng);
        let set = deal(&secret, 2, 4, &mut rng).unwrap();
        let c = HashCommitments::commit(&Sha256Hasher, &secret, &set.shares);
        let mut false_accepts = 0;
        for _ in 0..10_000 {
            let s = &set.shares[rng.gen_range(0..4)];
            let flipped = s.value.value() ^ (BigUint::from(1u8) << rng.gen_range(0..30u32));
            let tampered = f.element(flipped).unwrap();
            if c.verify_share(&Sha256Hasher, s.index, &tampered).unwrap() {
                false_accepts += 1;
            }
        }
        assert_eq!(false_accepts, 0);
    }

    #[test]
    fn size_grows_linearly() {
        let f = FieldSpec::prime_u64(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let sizes: Vec<u64> = (2..6)
            .map(|n| {
                let set = deal(&f.one(), 2, n, &mut rng).unwrap();
                HashCommitments::commit(&Sha256Hasher, &f.one(), &set.shares).size_bits()
            })
            .collect();
        assert!(sizes.windows(2).all(|w| w[1] - w[0] == 256));
    }
}
