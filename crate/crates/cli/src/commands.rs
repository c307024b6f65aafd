use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use polyvss::analysis::rates::decimal;
use polyvss::analysis::{gcd_collusion_attack, rate_report, RateScheme};
use polyvss::coherence::{detect, identify, CheaterReport};
use polyvss::encoding::{bitsize, to_hex};
use polyvss::numtheory::{mersenne_field, SafePrimeSearch};
use polyvss::poly::random_polynomial;
use polyvss::shamir::{deal_with_polynomial, Share};
use polyvss::vss::feldman::{FeldmanGroup, FeldmanParams};
use polyvss::vss::hash::{HashCommitments, Sha256Hasher};
use polyvss::vss::private::{deal_pow, deal_ssp, random_exponents};
use polyvss::vss::{deal_scheme, retry_on_collision, ssp, FieldChoice, Scheme, MID_HALF_RETRY_BUDGET};
use polyvss::{Error, FieldSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::doc::{push_field, BundleDoc, Doc, ParamsDoc, ShareDoc};
use crate::{CliError, Outcome, EXIT_NO_MAJORITY, EXIT_OK, EXIT_REJECT};

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "polyvss", version, about = "Space-efficient verifiable secret sharing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a field descriptor.
    GenParams(GenParamsArgs),
    /// Split a secret and write one share file and one bundle file per shareholder.
    Deal(DealArgs),
    /// Check a share against a bundle.
    Verify(VerifyArgs),
    /// Rebuild the secret from share files.
    Reconstruct(SharesArgs),
    /// Reconstruct from every t-subset and report whether they agree.
    Detect(SharesArgs),
    /// Detect, then name the shareholders whose shares disagree with the majority.
    Identify(SharesArgs),
    /// Compare verification-data sizes.
    Rates(RatesArgs),
    /// Run an attack on a freshly dealt toy instance.
    AttackDemo(AttackArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("size").required(true).args(["bits", "safe_prime_above", "prime_above", "binary", "mersenne"])))]
pub struct GenParamsArgs {
    /// Safe-prime field holding every N-bit value: GF(NSP(2^N)).
    #[arg(long)]
    pub bits: Option<u64>,
    /// GF(NSP(X)).
    #[arg(long, value_parser = parse_big)]
    pub safe_prime_above: Option<BigUint>,
    /// GF(NP(X)).
    #[arg(long, value_parser = parse_big)]
    pub prime_above: Option<BigUint>,
    /// GF(2^K).
    #[arg(long)]
    pub binary: Option<u64>,
    /// GF(2^E) for a Mersenne exponent E.
    #[arg(long)]
    pub mersenne: Option<u64>,
    /// Give up the safe-prime search after this many candidates.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Skip safe-prime candidates with fewer set bits.
    #[arg(long)]
    pub min_weight: Option<u64>,
    /// Also write the descriptor here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DealScheme {
    Pow,
    Ssp,
    PowPriv,
    SspPriv,
    Exp,
    ExpSsp,
    Feldman,
    Hash,
}

impl DealScheme {
    fn poly(self) -> Option<Scheme> {
        Some(match self {
            DealScheme::Pow => Scheme::Pow,
            DealScheme::Ssp => Scheme::Ssp,
            DealScheme::PowPriv => Scheme::PowPriv,
            DealScheme::SspPriv => Scheme::SspPriv,
            DealScheme::Exp => Scheme::Exp,
            DealScheme::ExpSsp => Scheme::ExpSsp,
            DealScheme::Feldman | DealScheme::Hash => return None,
        })
    }

    fn tag(self) -> &'static str {
        match self.poly() {
            Some(s) => s.tag(),
            None if self == DealScheme::Feldman => "feldman",
            None => "hash",
        }
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("share_field").required(true).args(["params", "prime", "binary"])))]
pub struct DealArgs {
    /// Secret, in hex.
    #[arg(long, value_parser = parse_hex)]
    pub secret: BigUint,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub scheme: DealScheme,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Share field from a `gen-params` file.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Share field GF(P).
    #[arg(long, value_parser = parse_big)]
    pub prime: Option<BigUint>,
    /// Share field GF(2^K).
    #[arg(long)]
    pub binary: Option<u64>,
    /// How to pick the verification field: bits, value, prime, binary or mersenne-E.
    #[arg(long, default_value = "bits", value_parser = parse_field_choice)]
    pub verify_field: FieldChoice,
    /// Explicit verification field from a `gen-params` file.
    #[arg(long, conflicts_with = "verify_field")]
    pub verify_params: Option<PathBuf>,
    /// Size of the Feldman modulus p.
    #[arg(long, default_value_t = 2048)]
    pub p_bits: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Also write every share and bundle into one file. Testing only: it
    /// exposes every private bundle together.
    #[arg(long)]
    pub insecure_combined: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub bundle: PathBuf,
    #[arg(long)]
    pub share: PathBuf,
}

#[derive(Args, Debug)]
pub struct SharesArgs {
    #[arg(long, num_args = 1.., required = true)]
    pub shares: Vec<PathBuf>,
    /// Threshold; defaults to the one recorded in the share files.
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RatesArgs {
    #[arg(long)]
    pub bsq: u64,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub n: usize,
    /// Feldman modulus size.
    #[arg(long, default_value_t = polyvss::analysis::rates::FELDMAN_DEFAULT_P_BITS)]
    pub p_bits: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AttackScheme {
    PowPriv,
    SspPriv,
    Ssp,
}

#[derive(Args, Debug)]
pub struct AttackArgs {
    #[arg(long, value_enum)]
    pub scheme: AttackScheme,
    /// Bits of each value (of each half for split schemes).
    #[arg(long, default_value_t = 8)]
    pub bits: u64,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x") {
        Some(h) => BigUint::parse_bytes(h.as_bytes(), 16),
        None => BigUint::parse_bytes(s.as_bytes(), 10),
    };
    parsed.ok_or_else(|| format!("not a number: {s:?}"))
}

fn parse_hex(s: &str) -> Result<BigUint, String> {
    let h = s.trim().trim_start_matches("0x");
    BigUint::parse_bytes(h.as_bytes(), 16).ok_or_else(|| format!("not hex: {s:?}"))
}

fn parse_field_choice(s: &str) -> Result<FieldChoice, String> {
    Ok(match s {
        "bits" => FieldChoice::SafePrimeAboveBitsize,
        "value" => FieldChoice::SafePrimeAboveValue,
        "prime" => FieldChoice::PrimeAboveValue,
        "binary" => FieldChoice::BinaryOfBitsize,
        _ => match s.strip_prefix("mersenne-").and_then(|e| e.parse().ok()) {
            Some(e) => FieldChoice::Mersenne(e),
            None => return Err(format!("unknown field choice {s:?}")),
        },
    })
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::GenParams(a) => gen_params(&a),
        Command::Deal(a) => deal(&a),
        Command::Verify(a) => verify(&a),
        Command::Reconstruct(a) => reconstruct(&a),
        Command::Detect(a) => detect_cmd(&a, false),
        Command::Identify(a) => detect_cmd(&a, true),
        Command::Rates(a) => rates(&a),
        Command::AttackDemo(a) => attack_demo(&a),
    };
    result.unwrap_or_else(|e| Outcome {
        code: e.code,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

fn rng_for(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_entropy(),
    }
}

fn read_doc(path: &Path) -> CliResult<Doc> {
    let text = fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    Doc::parse(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn gen_params(a: &GenParamsArgs) -> CliResult<Outcome> {
    let safe = |start: BigUint| -> CliResult<FieldSpec> {
        let mut s = SafePrimeSearch::above(start);
        if let Some(b) = a.budget {
            s = s.budget(b);
        }
        if let Some(w) = a.min_weight {
            s = s.min_hamming_weight(w);
        }
        Ok(s.run()?.field())
    };
    let field = if let Some(b) = a.bits {
        safe(BigUint::one() << b)?
    } else if let Some(x) = &a.safe_prime_above {
        safe(x.clone())?
    } else if let Some(x) = &a.prime_above {
        FieldSpec::prime(polyvss::numtheory::next_prime(x, true))?
    } else if let Some(k) = a.binary {
        FieldSpec::binary(k)?
    } else {
        mersenne_field(a.mersenne.expect("one size flag is required"))?.spec().clone()
    };
    let text = ParamsDoc { field }.to_doc().render();
    if let Some(p) = &a.out {
        fs::write(p, &text)?;
    }
    Ok(Outcome::ok(text))
}

fn share_field(a: &DealArgs) -> CliResult<FieldSpec> {
    if let Some(p) = &a.params {
        return Ok(ParamsDoc::from_doc(&read_doc(p)?)?.field);
    }
    if let Some(p) = &a.prime {
        return Ok(FieldSpec::prime(p.clone())?);
    }
    Ok(FieldSpec::binary(a.binary.expect("one share field flag is required"))?)
}

/// Bits needed for any element of `f`, read as a natural number.
fn value_bits(f: &FieldSpec) -> u64 {
    bitsize(&(f.order() - 1u8))
}

fn verification_field(a: &DealArgs, scheme: Scheme, bits: u64) -> CliResult<FieldSpec> {
    if let Some(p) = &a.verify_params {
        return Ok(ParamsDoc::from_doc(&read_doc(p)?)?.field);
    }
    // split schemes only need room for a half
    let domain_bits = if scheme.is_split() { bits.div_ceil(2) } else { bits };
    Ok(a.verify_field.resolve_bits(domain_bits)?)
}

fn deal(a: &DealArgs) -> CliResult<Outcome> {
    let field = share_field(a)?;
    let secret = field.element(a.secret.clone())?;
    if a.t == 0 || a.t > a.n {
        return Err(CliError::parse(format!("need 1 <= t <= n, got t={} n={}", a.t, a.n)));
    }
    let mut rng = rng_for(a.seed);
    let bits = value_bits(&field);
    let vf = a.scheme.poly().map(|s| verification_field(a, s, bits)).transpose()?;
    let group = match a.scheme {
        DealScheme::Feldman => {
            let q = field
                .modulus()
                .ok_or_else(|| CliError::parse("Feldman commitments need a prime share field"))?;
            Some(FeldmanGroup::generate(q, a.p_bits, &mut rng)?)
        }
        _ => None,
    };

    let mut attempts = 0;
    let (set, bundles) = retry_on_collision(MID_HALF_RETRY_BUDGET, || {
        attempts += 1;
        let poly = random_polynomial(a.t - 1, &secret, &mut rng)?;
        let set = deal_with_polynomial(&poly, a.t, a.n)?;
        let bundles: Vec<BundleDoc> = match (a.scheme.poly(), &group) {
            (Some(s), _) => {
                let values = set.values();
                match deal_scheme(s, &values, bits, vf.as_ref().unwrap(), &mut rng) {
                    // equal share values cannot be told apart; redeal
                    Err(Error::DuplicateShareValue(v)) => return Err(Error::MidHalfCollision(v)),
                    r => r?.into_iter().map(BundleDoc::Poly).collect(),
                }
            }
            (None, Some(g)) => vec![BundleDoc::Feldman(FeldmanParams::commit(g, &poly, a.t)?)],
            (None, None) => vec![BundleDoc::Hash {
                field: field.clone(),
                commitments: HashCommitments::commit(&Sha256Hasher, &secret, &set.shares),
            }],
        };
        Ok((set, bundles))
    })?;

    fs::create_dir_all(&a.out)?;
    let mut out = String::new();
    writeln!(out, "scheme: {}", a.scheme.tag()).unwrap();
    writeln!(out, "threshold: {} of {}", a.t, a.n).unwrap();
    if attempts > 1 {
        writeln!(out, "redealt: {} times", attempts - 1).unwrap();
    }
    let share_doc = |shares: Vec<(usize, BigUint)>| ShareDoc {
        scheme: Some(a.scheme.tag().to_string()),
        field: field.clone(),
        threshold: a.t,
        total: a.n,
        shares,
    };
    let mut write = |name: String, text: String| -> CliResult<()> {
        fs::write(a.out.join(&name), text)?;
        writeln!(out, "wrote {name}").unwrap();
        Ok(())
    };

    let mut params = ParamsDoc { field: field.clone() }.to_doc();
    params.push("scheme", a.scheme.tag());
    params.push("threshold", a.t);
    params.push("total", a.n);
    if let Some(vf) = &vf {
        push_field(&mut params, "verify_field", vf);
    }
    write("params.txt".into(), params.render())?;
    for s in &set.shares {
        write(
            format!("share_{}.txt", s.index),
            share_doc(vec![(s.index, s.value.value().clone())]).to_doc().render(),
        )?;
    }
    for b in &bundles {
        write(format!("bundle_{}.txt", b.verifier_index()), b.to_doc().render())?;
    }
    if a.insecure_combined {
        let mut text = share_doc(set.shares.iter().map(|s| (s.index, s.value.value().clone())).collect())
            .to_doc()
            .render();
        for b in &bundles {
            text.push_str("---\n");
            text.push_str(&b.to_doc().render());
        }
        write("combined.txt".into(), text)?;
    }
    Ok(Outcome::ok(out))
}

fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let bundle = BundleDoc::from_doc(&read_doc(&a.bundle)?)?;
    let shares = ShareDoc::from_doc(&read_doc(&a.share)?)?;
    if let Some(tag) = &shares.scheme {
        if *tag != bundle.scheme_tag() {
            return Err(Error::SchemeMismatch {
                expected: bundle.scheme_tag(),
                found: tag.clone(),
            }
            .into());
        }
    }
    let mut rejected = Vec::new();
    for (i, v) in &shares.shares {
        let ok = match &bundle {
            BundleDoc::Poly(b) => match b.verify(*i, v) {
                Err(Error::ShareOutOfField(_)) => false,
                r => r?,
            },
            BundleDoc::Feldman(f) => {
                if shares.field.modulus() != Some(f.group.q()) {
                    return Err(CliError::parse("share field is not Z_q of the Feldman group"));
                }
                f.verify(*i, v)
            }
            BundleDoc::Hash { field, commitments } => {
                if *field != shares.field {
                    return Err(Error::MixedFields.into());
                }
                commitments.verify_share(&Sha256Hasher, *i, &field.element(v.clone())?)?
            }
        };
        if !ok {
            rejected.push(*i);
        }
    }
    if rejected.is_empty() {
        return Ok(Outcome::ok("ACCEPT\n".into()));
    }
    let text: String = rejected.iter().map(|i| format!("REJECT index={i}\n")).collect();
    Ok(Outcome::with_code(EXIT_REJECT, text))
}

fn load_shares(a: &SharesArgs) -> CliResult<(Vec<Share>, usize)> {
    let mut field: Option<FieldSpec> = None;
    let mut threshold = None;
    let mut shares: Vec<Share> = Vec::new();
    for p in &a.shares {
        let d = ShareDoc::from_doc(&read_doc(p)?)?;
        match &field {
            Some(f) if *f != d.field => return Err(Error::MixedFields.into()),
            _ => field = Some(d.field.clone()),
        }
        threshold.get_or_insert(d.threshold);
        for (i, v) in d.shares {
            if shares.iter().any(|s| s.index == i) {
                return Err(Error::DuplicateIndex(i).into());
            }
            shares.push(Share::new(i, d.field.element(v)?)?);
        }
    }
    let t = a.t.or(threshold).expect("at least one share file");
    Ok((shares, t))
}

fn reconstruct(a: &SharesArgs) -> CliResult<Outcome> {
    let (shares, t) = load_shares(a)?;
    let s = polyvss::shamir::reconstruct(&shares, t)?;
    Ok(Outcome::ok(format!("secret: {}\n", to_hex(s.value()))))
}

fn render_report(r: &CheaterReport) -> String {
    let mut out = String::new();
    writeln!(out, "coalition: m={} t={}", r.m, r.t).unwrap();
    writeln!(out, "subsets: {}", r.subsets()).unwrap();
    for (secret, e) in &r.histogram {
        let subsets: Vec<String> = e
            .witnesses
            .iter()
            .map(|w| format!("{{{}}}", w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        writeln!(out, "secret {}: count={} subsets={}", to_hex(secret), e.count, subsets.join(" ")).unwrap();
    }
    writeln!(out, "consistent: {}", r.consistent).unwrap();
    out
}

fn render_identification(r: &CheaterReport) -> String {
    let mut out = String::new();
    let majority = r.majority_secret.as_ref().map_or("none".into(), to_hex);
    writeln!(out, "majority_secret: {majority}").unwrap();
    let cheaters = if r.cheaters.is_empty() {
        "none".to_string()
    } else {
        r.cheaters.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    };
    writeln!(out, "cheaters: {cheaters}").unwrap();
    if let Some(b) = &r.bounds {
        let yes = |v: bool| if v { "ok" } else { "fail" };
        for (name, x) in [("independent", b.independent), ("organized", b.organized)] {
            writeln!(
                out,
                "bounds {name} (c={}): detection={} identification={}",
                b.cheaters,
                yes(x.detection_ok),
                yes(x.identification_ok)
            )
            .unwrap();
        }
    }
    out
}

fn detect_cmd(a: &SharesArgs, identify_too: bool) -> CliResult<Outcome> {
    let (shares, t) = load_shares(a)?;
    let report = detect(&shares, t)?;
    let mut out = render_report(&report);
    if !identify_too {
        let code = if report.consistent { EXIT_OK } else { EXIT_REJECT };
        return Ok(Outcome::with_code(code, out));
    }
    match identify(&report, &shares, t) {
        Ok(r) => {
            out.push_str(&render_identification(&r));
            let code = if r.consistent || r.cheaters.is_empty() { EXIT_OK } else { EXIT_REJECT };
            Ok(Outcome::with_code(code, out))
        }
        Err(Error::NoMajority) => {
            out.push_str("majority_secret: none\n");
            Ok(Outcome {
                code: EXIT_NO_MAJORITY,
                stdout: out,
                stderr: "error: no strict majority secret; honest majority assumption violated\n".into(),
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn rates(a: &RatesArgs) -> CliResult<Outcome> {
    let mut out = String::new();
    writeln!(out, "bs(q)={} t={} n={}", a.bsq, a.t, a.n).unwrap();
    writeln!(
        out,
        "{:<8} {:>9} {:>10} {:>14} {:>10} {:>11} {:>8}",
        "scheme", "bs(field)", "total_bits", "committed_bits", "rate", "rate_exact", "K"
    )
    .unwrap();
    for (s, bits) in [
        (RateScheme::Feldman, Some(a.p_bits)),
        (RateScheme::Exp, None),
        (RateScheme::ExpSsp, None),
    ] {
        let r = rate_report(s, a.bsq, a.t, a.n, bits)?;
        let k = r.params.k.map_or("-".to_string(), |k| decimal(&k, 4));
        writeln!(
            out,
            "{:<8} {:>9} {:>10} {:>14} {:>10} {:>11} {:>8}",
            s.tag(),
            r.params.bs_p,
            r.total_bits,
            r.committed_bits,
            decimal(&r.rate, 4),
            r.rate.to_string(),
            k
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}

fn distinct_values<R: Rng>(rng: &mut R, n: usize, bits: u64, distinct_high: Option<u64>) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::new();
    while out.len() < n {
        let v = rng.gen_biguint(bits);
        let clash = out.iter().any(|w| match distinct_high {
            Some(low) => (w >> low) == (&v >> low),
            None => *w == v,
        });
        if !clash {
            out.push(v);
        }
    }
    out
}

fn attack_demo(a: &AttackArgs) -> CliResult<Outcome> {
    if a.bits == 0 || a.bits > 16 {
        return Err(CliError::parse("--bits must be between 1 and 16 for a desk-scale demo"));
    }
    if a.n < 2 {
        return Err(CliError::parse("--n must be at least 2"));
    }
    let mut rng = rng_for(a.seed);
    let mut out = String::new();
    match a.scheme {
        AttackScheme::Ssp => {
            // binary field so every V(a) fits a half
            let field = FieldSpec::binary(a.bits)?;
            let shares = distinct_values(&mut rng, a.n, 2 * a.bits, Some(a.bits));
            let b = ssp::deal(&shares, 2 * a.bits, &field)?;
            writeln!(out, "field: GF(2^{})", a.bits).unwrap();
            let mut all = true;
            for _ in 0..5 {
                let m = rng.gen_biguint(a.bits);
                let forged = ssp::forge(&b, &m)?;
                let ok = b.verify(0, &forged)?;
                all &= ok;
                writeln!(out, "forged {}: {}", to_hex(&forged), if ok { "ACCEPT" } else { "REJECT" }).unwrap();
            }
            Ok(Outcome::with_code(if all { EXIT_OK } else { EXIT_REJECT }, out))
        }
        AttackScheme::PowPriv | AttackScheme::SspPriv => {
            let field = FieldChoice::SafePrimeAboveBitsize.resolve_bits(a.bits)?;
            let split = a.scheme == AttackScheme::SspPriv;
            let share_bits = if split { 2 * a.bits } else { a.bits };
            let shares = distinct_values(&mut rng, a.n, share_bits, split.then_some(a.bits));
            let u = random_exponents(a.n, field.group_order(), &mut rng)?;
            let bundles = if split {
                deal_ssp(&shares, share_bits, &field, &u)?
            } else {
                deal_pow(&shares, share_bits, &field, &u)?
            };
            let target = &shares[a.n - 1];
            writeln!(out, "field: GF({})", field.order()).unwrap();
            writeln!(out, "colluders: 1..{}", a.n - 1).unwrap();
            writeln!(out, "target: share {} = {}", a.n, to_hex(target)).unwrap();
            match gcd_collusion_attack(&bundles[..a.n - 1], &shares[..a.n - 1]) {
                Ok(r) => {
                    let degree = r.gcd.degree().unwrap_or(0);
                    writeln!(out, "gcd degree: {degree}").unwrap();
                    let c: Vec<String> = r.candidates.iter().map(to_hex).collect();
                    writeln!(out, "candidates: {}", if c.is_empty() { "none".into() } else { c.join(" ") }).unwrap();
                    let recovered = r.candidates == [target.clone()];
                    writeln!(out, "recovered: {}", if recovered { "yes" } else { "no" }).unwrap();
                    Ok(Outcome::with_code(if recovered { EXIT_OK } else { EXIT_REJECT }, out))
                }
                Err(Error::TrivialGcd) => {
                    writeln!(out, "gcd degree: 0").unwrap();
                    writeln!(out, "recovered: no").unwrap();
                    Ok(Outcome::with_code(EXIT_REJECT, out))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}
