//! Polynomials over a field: evaluation, interpolation, gcd and exhaustive
//! root finding.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::small::SmallField;

/// Largest field that the exhaustive scans will walk.
pub const SCAN_LIMIT: u64 = 1 << 24;

/// A polynomial in canonical form: coefficient `i` multiplies `x^i`, the last
/// stored coefficient is nonzero, and zero is stored as `[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
    field: FieldSpec,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(i, c)| !c.is_zero() || (*i == 0 && self.is_zero()))
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Polynomial {
    pub(crate) fn from_raw(field: &FieldSpec, mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::zero());
        }
        Polynomial {
            coeffs,
            field: field.clone(),
        }
    }

    /// From coefficients in increasing degree order.
    pub fn new(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(Self::from_raw(
            field,
            coeffs.iter().map(|c| c.value().clone()).collect(),
        ))
    }

    /// From natural-number coefficients, each of which must be a field element.
    pub fn from_values(field: &FieldSpec, coeffs: Vec<BigUint>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(c)) {
            return Err(Error::ValueOutOfRange { value: bad.clone() });
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub fn from_u64s(field: &FieldSpec, coeffs: &[u64]) -> Result<Self> {
        Self::from_values(field, coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_raw(field, vec![])
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::from_raw(c.field(), vec![c.value().clone()])
    }

    /// `c x^k`.
    pub fn monomial(c: &FieldElement, k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = c.value().clone();
        Self::from_raw(c.field(), coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Canonical coefficient values.
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> FieldElement {
        self.field
            .wrap(self.coeffs.get(i).cloned().unwrap_or_default())
    }

    pub fn leading_coefficient(&self) -> FieldElement {
        self.field.wrap(self.coeffs.last().expect("nonempty").clone())
    }

    /// Coefficients zero-extended to `len` entries (never truncated).
    pub fn padded_coefficients(&self, len: usize) -> Vec<BigUint> {
        let mut out = self.coeffs.clone();
        if out.len() < len {
            out.resize(len, BigUint::zero());
        }
        out
    }

    pub fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.field {
            return Err(Error::MixedFields);
        }
        Ok(self.field.wrap(self.evaluate_raw(x.value())))
    }

    /// Horner evaluation at a canonical value.
    pub(crate) fn evaluate_raw(&self, x: &BigUint) -> BigUint {
        if let Some(s) = self.field.small() {
            let xs = x.to_u64().expect("small-field element");
            let acc = self
                .coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, c| s.add(s.mul(acc, xs), c.to_u64().expect("small")));
            return BigUint::from(acc);
        }
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, c| {
            self.field.add_raw(&self.field.mul_raw(&acc, x), c)
        })
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigUint::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.field.add_raw(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Ok(Self::from_raw(&self.field, coeffs))
    }

    pub fn neg(&self) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg_raw(c)).collect();
        Self::from_raw(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.field.mul_raw(a, b);
                out[i + j] = self.field.add_raw(&out[i + j], &t);
            }
        }
        Ok(Self::from_raw(&self.field, out))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != &self.field {
            return Err(Error::MixedFields);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| self.field.mul_raw(a, c.value()))
            .collect();
        Ok(Self::from_raw(&self.field, coeffs))
    }

    /// Division with remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(divisor)?;
        let Some(db) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let lead_inv = f.inv_raw(&divisor.coeffs[db])?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![BigUint::zero(); r.len() - db];
        for top in (db..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let k = f.mul_raw(&r[top], &lead_inv);
            let shift = top - db;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    let t = f.mul_raw(&k, c);
                    r[i + shift] = f.sub_raw(&r[i + shift], &t);
                }
            }
            q[shift] = k;
        }
        r.truncate(db.max(1));
        Ok((Self::from_raw(f, q), Self::from_raw(f, r)))
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coefficient().inv().expect("nonzero leading coefficient");
        self.scale(&inv).expect("same field")
    }

    pub(crate) fn to_small(&self) -> Option<(SmallField, Vec<u64>)> {
        let s = self.field.small()?;
        Some((s, self.coeffs.iter().map(|c| c.to_u64().expect("small")).collect()))
    }

    pub(crate) fn from_small(field: &FieldSpec, coeffs: &[u64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }
}

/// Points with pairwise distinct abscissas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: FieldSpec,
    points: Vec<(BigUint, BigUint)>,
}

impl PointSet {
    pub fn new(field: &FieldSpec, points: &[(FieldElement, FieldElement)]) -> Result<Self> {
        if points
            .iter()
            .any(|(x, y)| x.field() != field || y.field() != field)
        {
            return Err(Error::MixedFields);
        }
        Self::from_values(
            field,
            points
                .iter()
                .map(|(x, y)| (x.value().clone(), y.value().clone()))
                .collect(),
        )
    }

    pub fn from_values(field: &FieldSpec, points: Vec<(BigUint, BigUint)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for (x, y) in &points {
            for v in [x, y] {
                if !field.contains(v) {
                    return Err(Error::ValueOutOfRange { value: v.clone() });
                }
            }
            if !seen.insert(x) {
                return Err(Error::DuplicateAbscissa(x.clone()));
            }
        }
        Ok(PointSet {
            field: field.clone(),
            points,
        })
    }

    pub fn from_u64s(field: &FieldSpec, points: &[(u64, u64)]) -> Result<Self> {
        Self::from_values(
            field,
            points
                .iter()
                .map(|&(x, y)| (BigUint::from(x), BigUint::from(y)))
                .collect(),
        )
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn points(&self) -> &[(BigUint, BigUint)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The unique polynomial of degree below `t` through `t` points.
///
/// Builds `N(x) = prod (x - x_i)` once, then recovers each basis numerator
/// `N(x) / (x - x_i)` by synthetic division, for `O(t^2)` field operations.
pub fn lagrange_interpolate(pts: &PointSet) -> Result<Polynomial> {
    if pts.is_empty() {
        return Err(Error::NoPoints);
    }
    let f = &pts.field;
    let t = pts.len();
    // N(x), coefficients ascending, degree t
    let mut n = vec![BigUint::zero(); t + 1];
    n[0] = f.one().into_value();
    for (k, (xi, _)) in pts.points.iter().enumerate() {
        let neg = f.neg_raw(xi);
        for j in (0..=k + 1).rev() {
            let shifted = if j > 0 { n[j - 1].clone() } else { BigUint::zero() };
            let scaled = f.mul_raw(&n[j], &neg);
            n[j] = f.add_raw(&shifted, &scaled);
        }
    }
    let mut acc = vec![BigUint::zero(); t];
    let mut basis = vec![BigUint::zero(); t];
    for (xi, yi) in &pts.points {
        // synthetic division of N by (x - xi)
        let mut carry = BigUint::zero();
        for j in (0..t).rev() {
            carry = f.add_raw(&n[j + 1], &f.mul_raw(&carry, xi));
            basis[j] = carry.clone();
        }
        let denom = basis
            .iter()
            .rev()
            .fold(BigUint::zero(), |a, c| f.add_raw(&f.mul_raw(&a, xi), c));
        let w = f.mul_raw(yi, &f.inv_raw(&denom)?);
        for j in 0..t {
            acc[j] = f.add_raw(&acc[j], &f.mul_raw(&w, &basis[j]));
        }
    }
    Ok(Polynomial::from_raw(f, acc))
}

/// Monic greatest common divisor by Euclid's algorithm.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if let (Some((s, av)), Some((_, bv))) = (a.to_small(), b.to_small()) {
        return Ok(Polynomial::from_small(&a.field, &s.poly_gcd(&av, &bv)));
    }
    Ok(gcd_generic(a, b))
}

fn gcd_generic(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.monic()
}

/// Every `x` with `p(x) = 0`, in increasing order, by exhaustive evaluation.
pub fn roots_bruteforce(p: &Polynomial) -> Result<Vec<FieldElement>> {
    let f = &p.field;
    let order = f
        .order()
        .to_u64()
        .filter(|&o| o <= SCAN_LIMIT)
        .ok_or_else(|| Error::FieldTooLarge(f.order().clone()))?;
    let (s, coeffs) = p.to_small().expect("scan-sized fields use the word kernel");
    Ok((0..order)
        .filter(|&x| s.eval(&coeffs, x) == 0)
        .map(|x| f.wrap(BigUint::from(x)))
        .collect())
}

/// A random polynomial of exact degree `degree` with constant term `constant`.
pub fn random_polynomial<R: Rng + ?Sized>(
    degree: usize,
    constant: &FieldElement,
    rng: &mut R,
) -> Result<Polynomial> {
    let f = constant.field();
    if BigUint::from(degree) >= *f.order() {
        return Err(Error::DegreeTooLarge { degree });
    }
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(constant.value().clone());
    for i in 1..=degree {
        let c = if i == degree {
            f.random_nonzero(rng)
        } else {
            f.random_element(rng)
        };
        coeffs.push(c.into_value());
    }
    Ok(Polynomial::from_raw(f, coeffs))
}
