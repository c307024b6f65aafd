//! Polynomials over GF(2) packed into little-endian `u64` limbs.
//!
//! Bit `i` of the packed integer is the coefficient of `x^i`. These helpers back
//! the binary-field arithmetic and the irreducibility checks on reduction
//! polynomials.

use num_bigint::BigUint;

pub(crate) type Limbs = Vec<u64>;

pub(crate) fn from_big(v: &BigUint) -> Limbs {
    let mut l = v.to_u64_digits();
    trim(&mut l);
    l
}

pub(crate) fn to_big(l: &[u64]) -> BigUint {
    let mut digits = Vec::with_capacity(l.len() * 2);
    for &w in l {
        digits.push(w as u32);
        digits.push((w >> 32) as u32);
    }
    BigUint::new(digits)
}

fn trim(l: &mut Limbs) {
    while l.last() == Some(&0) {
        l.pop();
    }
}

/// Degree of the polynomial, `None` for zero.
pub(crate) fn degree(l: &[u64]) -> Option<usize> {
    for (i, &w) in l.iter().enumerate().rev() {
        if w != 0 {
            return Some(i * 64 + 63 - w.leading_zeros() as usize);
        }
    }
    None
}

fn bit(l: &[u64], i: usize) -> bool {
    l.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
}

/// `dst ^= src << shift`, growing `dst` as needed.
fn xor_shifted(dst: &mut Limbs, src: &[u64], shift: usize) {
    let limb_shift = shift / 64;
    let bit_shift = shift % 64;
    let needed = src.len() + limb_shift + 1;
    if dst.len() < needed {
        dst.resize(needed, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        dst[i + limb_shift] ^= w << bit_shift;
        if bit_shift != 0 {
            dst[i + limb_shift + 1] ^= w >> (64 - bit_shift);
        }
    }
}

fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            lo ^= a << i;
            if i != 0 {
                hi ^= a >> (64 - i);
            }
        }
        b >>= 1;
        i += 1;
    }
    (lo, hi)
}

/// Carry-less product.
pub(crate) fn mul(a: &[u64], b: &[u64]) -> Limbs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let (lo, hi) = clmul64(x, y);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub(crate) fn rem(a: &[u64], m: &[u64]) -> Limbs {
    let dm = degree(m).expect("modulus must be nonzero");
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        xor_shifted(&mut r, m, dr - dm);
        trim(&mut r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64]) -> Limbs {
    rem(&mul(a, b), m)
}

pub(crate) fn gcd(a: &[u64], b: &[u64]) -> Limbs {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: &[u64], m: &[u64]) -> Option<Limbs> {
    let mut u = rem(a, m);
    if u.is_empty() {
        return None;
    }
    let mut v = m.to_vec();
    trim(&mut v);
    let mut g1: Limbs = vec![1];
    let mut g2: Limbs = Vec::new();
    loop {
        let du = degree(&u)?;
        if du == 0 {
            return Some(rem(&g1, m));
        }
        let dv = degree(&v)?;
        if du < dv {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut g1, &mut g2);
            continue;
        }
        let shift = du - dv;
        xor_shifted(&mut u, &v, shift);
        trim(&mut u);
        xor_shifted(&mut g1, &g2, shift);
        trim(&mut g1);
    }
}

/// Rabin's irreducibility test for a polynomial of degree `k >= 1`.
pub(crate) fn is_irreducible(f: &[u64]) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    if !bit(f, 0) {
        return false;
    }
    let x: Limbs = vec![2];
    // powers[i] = x^(2^i) mod f
    let mut powers = Vec::with_capacity(k + 1);
    let mut cur = rem(&x, f);
    powers.push(cur.clone());
    for _ in 0..k {
        cur = mul_mod(&cur, &cur, f);
        powers.push(cur.clone());
    }
    if rem(&powers[k], f) != rem(&x, f) {
        return false;
    }
    for r in prime_divisors(k) {
        let mut d = powers[k / r].clone();
        xor_shifted(&mut d, &x, 0);
        trim(&mut d);
        let g = gcd(f, &d);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Packs `x^k + sum(x^e for e in middle) + 1`.
pub(crate) fn sparse(k: u64, middle: &[u64]) -> BigUint {
    let mut v = BigUint::from(1u8);
    v.set_bit(k, true);
    for &e in middle {
        v.set_bit(e, true);
    }
    v
}

/// Lowest-weight irreducible polynomial of degree `k`: the trinomial with the
/// smallest middle exponent, else the lexicographically smallest pentanomial.
pub(crate) fn search_lowest_weight(k: u64) -> Option<(BigUint, Vec<u64>)> {
    if k == 1 {
        return Some((BigUint::from(3u8), Vec::new()));
    }
    for a in 1..k {
        let f = sparse(k, &[a]);
        if is_irreducible(&from_big(&f)) {
            return Some((f, vec![a]));
        }
    }
    for a in 3..k {
        for b in 2..a {
            for c in 1..b {
                let f = sparse(k, &[a, b, c]);
                if is_irreducible(&from_big(&f)) {
                    return Some((f, vec![a, b, c]));
                }
            }
        }
    }
    None
}
