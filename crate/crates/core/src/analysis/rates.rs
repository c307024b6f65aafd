//! Information rates: verification bits per committed bit.

use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use crate::encoding::bitsize_u64;
use crate::error::{Error, Result};
use crate::numtheory::next_safe_prime;

/// Default modulus size for Feldman commitments.
pub const FELDMAN_DEFAULT_P_BITS: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RateScheme {
    Feldman,
    Exp,
    ExpSsp,
}

impl RateScheme {
    pub fn tag(self) -> &'static str {
        match self {
            RateScheme::Feldman => "feldman",
            RateScheme::Exp => "exp",
            RateScheme::ExpSsp => "exp-ssp",
        }
    }
}

impl fmt::Display for RateScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for RateScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [RateScheme::Feldman, RateScheme::Exp, RateScheme::ExpSsp]
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown rate scheme {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateParams {
    pub bs_q: u64,
    /// `bs(p)` for Feldman, `bs(p1)` for EXP, `bs(p2)` for EXP-SSP.
    pub bs_p: u64,
    pub t: usize,
    pub n: usize,
    /// `bs(p) / bs(q)`, Feldman only.
    pub k: Option<Ratio<u64>>,
    /// Half width `w` for EXP-SSP.
    pub w: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateReport {
    pub scheme: RateScheme,
    pub total_bits: u64,
    /// The domain-width header, counted in the total but not in the rate.
    pub header_bits: u64,
    pub committed_bits: u64,
    /// `(total_bits - header_bits) / committed_bits`.
    pub rate: Ratio<u64>,
    pub params: RateParams,
}

/// Renders a rational to `places` decimals, rounding half up.
pub fn decimal(r: &Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let scaled = (u128::from(*r.numer()) * scale * 2 + u128::from(*r.denom())) / (u128::from(*r.denom()) * 2);
    let int = scaled / scale;
    let frac = scaled % scale;
    if places == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0width$}", width = places as usize)
    }
}

fn safe_prime_bits(bits: u64) -> u64 {
    next_safe_prime(&(BigUint::one() << bits)).p().bits()
}

/// Exact bit counts for one sharing. `field_bits` overrides the default
/// field size: 2048 for Feldman, `bs(NSP(2^bs_q))` for EXP and
/// `bs(NSP(2^w))` for EXP-SSP.
pub fn rate_report(
    scheme: RateScheme,
    bs_q: u64,
    t: usize,
    n: usize,
    field_bits: Option<u64>,
) -> Result<RateReport> {
    if bs_q == 0 || t == 0 || n == 0 || t > n {
        return Err(Error::BadParams(format!("need bs(q) > 0 and 1 <= t <= n, got bs(q)={bs_q} t={t} n={n}")));
    }
    if field_bits == Some(0) {
        return Err(Error::BadParams("field size must be positive".into()));
    }
    let n64 = n as u64;
    let t64 = t as u64;
    let report = match scheme {
        RateScheme::Feldman => {
            let bs_p = field_bits.unwrap_or(FELDMAN_DEFAULT_P_BITS);
            if bs_p <= bs_q {
                return Err(Error::BadParams("Feldman needs bs(p) > bs(q)".into()));
            }
            // t commitments plus the generator
            let total = (t64 + 1) * bs_p;
            let committed = t64 * bs_q;
            RateReport {
                scheme,
                total_bits: total,
                header_bits: 0,
                committed_bits: committed,
                rate: Ratio::new(total, committed),
                params: RateParams {
                    bs_q,
                    bs_p,
                    t,
                    n,
                    k: Some(Ratio::new(bs_p, bs_q)),
                    w: None,
                },
            }
        }
        RateScheme::Exp => {
            let bs_p = field_bits.unwrap_or_else(|| safe_prime_bits(bs_q));
            let header = bitsize_u64(bs_q);
            RateReport {
                scheme,
                total_bits: header + n64 * bs_p,
                header_bits: header,
                committed_bits: n64 * bs_q,
                rate: Ratio::new(bs_p, bs_q),
                params: RateParams {
                    bs_q,
                    bs_p,
                    t,
                    n,
                    k: None,
                    w: None,
                },
            }
        }
        RateScheme::ExpSsp => {
            let w = bs_q.div_ceil(2);
            let bs_p = field_bits.unwrap_or_else(|| safe_prime_bits(w));
            let header = bitsize_u64(w);
            RateReport {
                scheme,
                total_bits: header + n64 * bs_p,
                header_bits: header,
                committed_bits: n64 * bs_q,
                rate: Ratio::new(bs_p, bs_q),
                params: RateParams {
                    bs_q,
                    bs_p,
                    t,
                    n,
                    k: None,
                    w: Some(w),
                },
            }
        }
    };
    debug_assert_eq!(
        report.rate,
        Ratio::new(report.total_bits - report.header_bits, report.committed_bits)
    );
    Ok(report)
}
