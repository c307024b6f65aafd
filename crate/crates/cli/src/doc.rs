//! Plain-text documents: one `key: value` pair per line, repeated keys for
//! lists, `#` comments. Numbers are lowercase hex without a prefix.

use std::fmt::Write as _;

use num_bigint::BigUint;
use polyvss::encoding::{from_hex, to_hex};
use polyvss::vss::feldman::{FeldmanGroup, FeldmanParams};
use polyvss::vss::hash::{Digest256, HashCommitments};
use polyvss::vss::{Scheme, VerificationBundle};
use polyvss::{FieldKind, FieldSpec};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// Ordered key/value pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Doc {
    entries: Vec<(String, String)>,
}

impl Doc {
    pub fn new(kind: &str) -> Self {
        let mut d = Doc::default();
        d.push("format_version", FORMAT_VERSION);
        d.push("kind", kind);
        d
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| CliError::parse(format!("line {}: expected `key: value`", n + 1)))?;
            entries.push((k.trim().to_string(), v.trim().to_string()));
        }
        let d = Doc { entries };
        let version: u32 = d.num("format_version")?;
        if version != FORMAT_VERSION {
            return Err(CliError::parse(format!("unsupported format_version {version}")));
        }
        Ok(d)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            writeln!(out, "{k}: {v}").unwrap();
        }
        out
    }

    pub fn get(&self, key: &str) -> Result<&str, CliError> {
        let mut it = self.entries.iter().filter(|(k, _)| k == key);
        let (_, v) = it.next().ok_or_else(|| CliError::parse(format!("missing `{key}`")))?;
        if it.next().is_some() {
            return Err(CliError::parse(format!("`{key}` given twice")));
        }
        Ok(v)
    }

    pub fn opt(&self, key: &str) -> Result<Option<&str>, CliError> {
        if self.entries.iter().any(|(k, _)| k == key) {
            self.get(key).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn all(&self, key: &str) -> Vec<&str> {
        self.entries.iter().filter(|(k, _)| k == key).map(|(_, v)| v.as_str()).collect()
    }

    pub fn num<T: std::str::FromStr>(&self, key: &str) -> Result<T, CliError> {
        let v = self.get(key)?;
        v.parse().map_err(|_| CliError::parse(format!("`{key}`: bad number {v:?}")))
    }

    pub fn hex(&self, key: &str) -> Result<BigUint, CliError> {
        hex(self.get(key)?)
    }

    pub fn expect_kind(&self, kind: &str) -> Result<(), CliError> {
        let found = self.get("kind")?;
        if found != kind {
            return Err(CliError::parse(format!("expected a {kind} document, found {found}")));
        }
        Ok(())
    }
}

pub fn hex(s: &str) -> Result<BigUint, CliError> {
    from_hex(s).map_err(|e| CliError::parse(e.to_string()))
}

fn digest_hex(d: &Digest256) -> String {
    d.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_digest(s: &str) -> Result<Digest256, CliError> {
    let bad = || CliError::parse(format!("bad digest {s:?}"));
    if s.len() != 64 || !s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        return Err(bad());
    }
    let mut out = [0u8; 32];
    for (i, o) in out.iter_mut().enumerate() {
        *o = u8::from_str_radix(&s[2 * i..2 * i + 2], 16).map_err(|_| bad())?;
    }
    Ok(out)
}

pub fn push_field(d: &mut Doc, prefix: &str, f: &FieldSpec) {
    match f.kind() {
        FieldKind::Prime => {
            d.push(&format!("{prefix}_kind"), "prime");
            d.push(&format!("{prefix}_modulus"), to_hex(f.modulus().unwrap()));
        }
        FieldKind::Binary => {
            d.push(&format!("{prefix}_kind"), "binary");
            d.push(&format!("{prefix}_degree"), f.degree().unwrap());
            d.push(&format!("{prefix}_reduction"), to_hex(f.reduction_polynomial().unwrap()));
        }
    }
}

pub fn read_field(d: &Doc, prefix: &str) -> Result<FieldSpec, CliError> {
    match d.get(&format!("{prefix}_kind"))? {
        "prime" => Ok(FieldSpec::prime(d.hex(&format!("{prefix}_modulus"))?)?),
        "binary" => {
            let k: u64 = d.num(&format!("{prefix}_degree"))?;
            Ok(FieldSpec::binary_with_reduction(k, d.hex(&format!("{prefix}_reduction"))?)?)
        }
        other => Err(CliError::parse(format!("unknown field kind {other:?}"))),
    }
}

/// A field description, as produced by `gen-params`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsDoc {
    pub field: FieldSpec,
}

impl ParamsDoc {
    pub fn to_doc(&self) -> Doc {
        let mut d = Doc::new("params");
        push_field(&mut d, "field", &self.field);
        d
    }

    pub fn from_doc(d: &Doc) -> Result<Self, CliError> {
        d.expect_kind("params")?;
        Ok(ParamsDoc {
            field: read_field(d, "field")?,
        })
    }
}

/// Shares held by one or more shareholders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareDoc {
    pub scheme: Option<String>,
    pub field: FieldSpec,
    pub threshold: usize,
    pub total: usize,
    pub shares: Vec<(usize, BigUint)>,
}

impl ShareDoc {
    pub fn to_doc(&self) -> Doc {
        let mut d = Doc::new("shares");
        if let Some(s) = &self.scheme {
            d.push("scheme", s);
        }
        push_field(&mut d, "field", &self.field);
        d.push("threshold", self.threshold);
        d.push("total", self.total);
        for (i, v) in &self.shares {
            d.push("share", format!("{i} {}", to_hex(v)));
        }
        d
    }

    pub fn from_doc(d: &Doc) -> Result<Self, CliError> {
        d.expect_kind("shares")?;
        let field = read_field(d, "field")?;
        let mut shares = Vec::new();
        for s in d.all("share") {
            let (i, v) = s
                .split_once(' ')
                .ok_or_else(|| CliError::parse(format!("share {s:?}: expected `index hex`")))?;
            let i: usize = i.parse().map_err(|_| CliError::parse(format!("bad share index {i:?}")))?;
            let v = hex(v.trim())?;
            if i == 0 || !field.contains(&v) {
                return Err(CliError::parse(format!("share {i} is outside the field")));
            }
            if shares.iter().any(|(j, _)| *j == i) {
                return Err(CliError::parse(format!("share index {i} repeated")));
            }
            shares.push((i, v));
        }
        if shares.is_empty() {
            return Err(CliError::parse("document holds no shares"));
        }
        Ok(ShareDoc {
            scheme: d.opt("scheme")?.map(str::to_string),
            field,
            threshold: d.num("threshold")?,
            total: d.num("total")?,
            shares,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleDoc {
    Poly(VerificationBundle),
    Feldman(FeldmanParams),
    Hash { field: FieldSpec, commitments: HashCommitments },
}

impl BundleDoc {
    pub fn scheme_tag(&self) -> String {
        match self {
            BundleDoc::Poly(b) => b.scheme.to_string(),
            BundleDoc::Feldman(_) => "feldman".into(),
            BundleDoc::Hash { .. } => "hash".into(),
        }
    }

    pub fn verifier_index(&self) -> usize {
        match self {
            BundleDoc::Poly(b) => b.verifier_index,
            _ => 0,
        }
    }

    pub fn to_doc(&self) -> Doc {
        let mut d = Doc::new("bundle");
        d.push("scheme", self.scheme_tag());
        d.push("verifier_index", self.verifier_index());
        match self {
            BundleDoc::Poly(b) => {
                push_field(&mut d, "field", &b.field);
                if let Some(base) = &b.base {
                    d.push("base", to_hex(base));
                }
                d.push("domain_bits", b.domain_bits);
                for c in &b.coefficients {
                    d.push("coefficient", to_hex(c));
                }
            }
            BundleDoc::Feldman(f) => {
                d.push("p", to_hex(f.group.p()));
                d.push("q", to_hex(f.group.q()));
                d.push("alpha", to_hex(f.group.alpha()));
                for c in &f.commitments {
                    d.push("commitment", to_hex(c));
                }
            }
            BundleDoc::Hash { field, commitments } => {
                push_field(&mut d, "field", field);
                d.push("hash", &commitments.hash_id);
                d.push("secret_digest", digest_hex(&commitments.secret_digest));
                for s in &commitments.share_digests {
                    d.push("share_digest", digest_hex(s));
                }
            }
        }
        d
    }

    pub fn from_doc(d: &Doc) -> Result<Self, CliError> {
        d.expect_kind("bundle")?;
        let tag = d.get("scheme")?;
        let verifier_index: usize = d.num("verifier_index")?;
        match tag {
            "feldman" => {
                let group = FeldmanGroup::new(d.hex("p")?, d.hex("q")?, d.hex("alpha")?)?;
                let commitments = d.all("commitment").into_iter().map(hex).collect::<Result<Vec<_>, _>>()?;
                if commitments.is_empty() || commitments.iter().any(|c| c >= group.p()) {
                    return Err(CliError::parse("commitments must be nonempty and below p"));
                }
                Ok(BundleDoc::Feldman(FeldmanParams { group, commitments }))
            }
            "hash" => {
                let share_digests = d.all("share_digest").into_iter().map(parse_digest).collect::<Result<Vec<_>, _>>()?;
                Ok(BundleDoc::Hash {
                    field: read_field(d, "field")?,
                    commitments: HashCommitments {
                        hash_id: d.get("hash")?.to_string(),
                        secret_digest: parse_digest(d.get("secret_digest")?)?,
                        share_digests,
                    },
                })
            }
            _ => {
                let scheme: Scheme = tag.parse()?;
                let b = VerificationBundle {
                    scheme,
                    verifier_index,
                    field: read_field(d, "field")?,
                    base: d.opt("base")?.map(hex).transpose()?,
                    coefficients: d.all("coefficient").into_iter().map(hex).collect::<Result<Vec<_>, _>>()?,
                    domain_bits: d.num("domain_bits")?,
                };
                b.validate()?;
                Ok(BundleDoc::Poly(b))
            }
        }
    }
}
