//! Set coherence: reconstruct the secret from every `t`-subset of a coalition
//! and compare.
//!
//! Detection needs no verification data at all. Identification pivots on a
//! subset that rebuilds the majority secret, swapping one member at a time
//! for each remaining shareholder.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::shamir::{reconstruct, Share};

/// Upper limit on `C(m, t)`; enumeration is super-polynomial in `m`.
pub const MAX_SUBSETS: u128 = 1_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HistogramEntry {
    pub count: u64,
    /// Subsets rebuilding this secret, as sorted lists of share indices.
    pub witnesses: Vec<Vec<usize>>,
}

/// Secret value to the subsets that rebuild it, ordered by secret.
pub type ReconstructionHistogram = BTreeMap<BigUint, HistogramEntry>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub detection_ok: bool,
    pub identification_ok: bool,
}

/// Bound predicates for a given cheater count, under both cheater models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub cheaters: usize,
    pub independent: Bounds,
    pub organized: Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheaterReport {
    pub consistent: bool,
    pub majority_secret: Option<BigUint>,
    pub cheaters: Vec<usize>,
    pub histogram: ReconstructionHistogram,
    pub m: usize,
    pub t: usize,
    /// Filled in once the cheater count is known (after identification, or
    /// zero for a consistent coalition).
    pub bounds: Option<BoundsReport>,
}

impl CheaterReport {
    /// Number of subsets enumerated.
    pub fn subsets(&self) -> u64 {
        self.histogram.values().map(|e| e.count).sum()
    }

    fn subset_secrets(&self) -> HashMap<&[usize], &BigUint> {
        self.histogram
            .iter()
            .flat_map(|(s, e)| e.witnesses.iter().map(move |w| (w.as_slice(), s)))
            .collect()
    }
}

/// Detection and identification predicates for `m` shares, threshold `t` and
/// `c` cheaters.
pub fn check_bounds(m: usize, t: usize, c: usize, organized: bool) -> Bounds {
    let honest = m.saturating_sub(c);
    if organized {
        Bounds {
            detection_ok: honest > t,
            identification_ok: honest >= c + t,
        }
    } else {
        Bounds {
            detection_ok: m > t,
            identification_ok: honest > t,
        }
    }
}

fn bounds_report(m: usize, t: usize, c: usize) -> BoundsReport {
    BoundsReport {
        cheaters: c,
        independent: check_bounds(m, t, c, false),
        organized: check_bounds(m, t, c, true),
    }
}

/// `C(m, t)`, or an error once it passes [`MAX_SUBSETS`].
pub fn subset_count(m: usize, t: usize) -> Result<u128> {
    if t > m {
        return Ok(0);
    }
    let t = t.min(m - t);
    let mut c: u128 = 1;
    for i in 0..t as u128 {
        c = c * (m as u128 - i) / (i + 1);
        if c > MAX_SUBSETS {
            return Err(Error::TooManySubsets(c));
        }
    }
    Ok(c)
}

/// Reconstructs from every `t`-subset with Lagrange interpolation.
pub fn detect(shares: &[Share], t: usize) -> Result<CheaterReport> {
    detect_with(shares, t, |s| reconstruct(s, t))
}

/// Like [`detect`] with a caller-supplied reconstruction routine.
pub fn detect_with<F>(shares: &[Share], t: usize, mut reconstructor: F) -> Result<CheaterReport>
where
    F: FnMut(&[Share]) -> Result<FieldElement>,
{
    let m = shares.len();
    if t == 0 || m <= t {
        return Err(Error::CoalitionTooSmall { m, t });
    }
    subset_count(m, t)?;
    let mut sorted = shares.to_vec();
    sorted.sort_by_key(|s| s.index);
    if sorted.windows(2).any(|w| w[0].index == w[1].index) {
        return Err(Error::DuplicateIndex(
            sorted.windows(2).find(|w| w[0].index == w[1].index).unwrap()[0].index,
        ));
    }

    let mut histogram = ReconstructionHistogram::new();
    for subset in sorted.iter().cloned().combinations(t) {
        let secret = reconstructor(&subset)?.into_value();
        let entry = histogram.entry(secret).or_default();
        entry.count += 1;
        entry.witnesses.push(subset.iter().map(|s| s.index).collect());
    }
    let consistent = histogram.len() == 1;
    Ok(CheaterReport {
        consistent,
        majority_secret: consistent.then(|| histogram.keys().next().unwrap().clone()),
        cheaters: Vec::new(),
        histogram,
        m,
        t,
        bounds: consistent.then(|| bounds_report(m, t, 0)),
    })
}

/// Flags every shareholder whose swap into a majority witness changes the
/// secret. A consistent report comes back unchanged.
pub fn identify(report: &CheaterReport, shares: &[Share], t: usize) -> Result<CheaterReport> {
    if report.consistent {
        return Ok(report.clone());
    }
    let top = report.histogram.values().map(|e| e.count).max().ok_or(Error::NoMajority)?;
    let mut leaders = report.histogram.iter().filter(|(_, e)| e.count == top);
    let (secret, entry) = leaders.next().ok_or(Error::NoMajority)?;
    if leaders.next().is_some() {
        return Err(Error::NoMajority);
    }
    // witnesses are produced in lexicographic order
    let a = &entry.witnesses[0];
    let lookup = report.subset_secrets();
    let mut indices: Vec<usize> = shares.iter().map(|s| s.index).collect();
    indices.sort_unstable();

    let mut cheaters = Vec::new();
    for &j in indices.iter().filter(|j| !a.contains(j)) {
        let mut swapped: Vec<usize> = a[1..].to_vec();
        swapped.push(j);
        swapped.sort_unstable();
        match lookup.get(swapped.as_slice()) {
            Some(&s) if s == secret => {}
            Some(_) => cheaters.push(j),
            None => return Err(Error::BadParams(format!("share {j} was not part of detection"))),
        }
    }
    Ok(CheaterReport {
        consistent: false,
        majority_secret: Some(secret.clone()),
        bounds: Some(bounds_report(report.m, t, cheaters.len())),
        cheaters,
        histogram: report.histogram.clone(),
        m: report.m,
        t,
    })
}
