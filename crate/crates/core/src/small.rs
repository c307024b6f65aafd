//! Word-sized arithmetic for fields with at most 2^32 elements.
//!
//! Exhaustive scans and the dense Euclidean algorithm hit the same field
//! millions of times; this kernel keeps those loops out of the bignum
//! allocator. `FieldSpec` routes through it transparently whenever the field
//! qualifies.

use num_bigint::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum SmallField {
    Prime { p: u64 },
    Binary { k: u32, poly: u64 },
}

impl SmallField {
    pub(crate) fn order(&self) -> u64 {
        match *self {
            SmallField::Prime { p } => p,
            SmallField::Binary { k, .. } => 1u64 << k,
        }
    }

    pub(crate) fn group_order(&self) -> u64 {
        self.order() - 1
    }

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        match *self {
            SmallField::Prime { p } => {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            }
            SmallField::Binary { .. } => a ^ b,
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        match *self {
            SmallField::Prime { p } => {
                if a >= b {
                    a - b
                } else {
                    a + p - b
                }
            }
            SmallField::Binary { .. } => a ^ b,
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        match *self {
            SmallField::Prime { p } => a * b % p,
            SmallField::Binary { k, poly } => {
                let mut prod = 0u64;
                let mut x = a;
                let mut y = b;
                while y != 0 {
                    if y & 1 == 1 {
                        prod ^= x;
                    }
                    x <<= 1;
                    y >>= 1;
                }
                let mut i = 63 - prod.leading_zeros().min(63) as i64;
                while i >= k as i64 {
                    if (prod >> i) & 1 == 1 {
                        prod ^= poly << (i - k as i64);
                    }
                    i -= 1;
                }
                prod
            }
        }
    }

    pub(crate) fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn pow_big(&self, a: u64, e: &BigUint) -> u64 {
        let mut acc = 1u64;
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub(crate) fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        match *self {
            SmallField::Prime { p } => {
                let (mut r0, mut r1) = (p as i64, a as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                t0.rem_euclid(p as i64) as u64
            }
            SmallField::Binary { .. } => self.pow(a, self.order() - 2),
        }
    }

    pub(crate) fn eval(&self, coeffs: &[u64], x: u64) -> u64 {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Remainder of `a` by the nonzero polynomial `b` (coefficients ascending).
    pub(crate) fn poly_rem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = trimmed(a.to_vec());
        let b = trimmed(b.to_vec());
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]);
        // nonzero positions of b below its leading term
        let support: Vec<(usize, u64)> = b[..db]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        while r.len() > db {
            let top = r.len() - 1;
            let lead = r[top];
            if lead != 0 {
                let q = self.mul(lead, lead_inv);
                let shift = top - db;
                for &(i, c) in &support {
                    r[i + shift] = self.sub(r[i + shift], self.mul(q, c));
                }
            }
            r.pop();
        }
        trimmed(r)
    }

    pub(crate) fn monic(&self, mut a: Vec<u64>) -> Vec<u64> {
        if let Some(&lead) = a.last() {
            if lead != 0 && lead != 1 {
                let inv = self.inv(lead);
                for c in a.iter_mut() {
                    *c = self.mul(*c, inv);
                }
            }
        }
        a
    }

    /// Monic gcd; at least one input must be nonzero.
    pub(crate) fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = trimmed(a.to_vec());
        let mut b = trimmed(b.to_vec());
        while !is_zero(&b) {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    pub(crate) fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if is_zero(a) || is_zero(b) {
            return vec![0];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trimmed(out)
    }
}

pub(crate) fn trimmed(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && a.last() == Some(&0) {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}
