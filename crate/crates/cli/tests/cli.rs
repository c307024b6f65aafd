use std::fs;
use std::path::Path;
use std::process::Command;

use polyvss_cli::{run_from, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_from(std::iter::once("polyvss").chain(args.iter().copied()))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn share_lines(dir: &Path) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1.. {
        let Ok(text) = fs::read_to_string(dir.join(format!("share_{i}.txt"))) else {
            break;
        };
        out.extend(text.lines().filter(|l| l.starts_with("share:")).map(str::to_string));
    }
    out
}

/// GF(7), secret 3, seed 10 deals 3 + 2x.
fn gf7_deal(dir: &Path, scheme: &str) -> Outcome {
    run(&[
        "deal", "--secret", "3", "--t", "2", "--n", "3", "--scheme", scheme, "--prime", "7", "--seed", "10", "--out",
        path(dir),
    ])
}

#[test]
fn gen_params_fields() {
    let o = run(&["gen-params", "--safe-prime-above", "11"]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "format_version: 1\nkind: params\nfield_kind: prime\nfield_modulus: 17\n"
    );

    let o = run(&["gen-params", "--mersenne", "5"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("field_kind: binary\nfield_degree: 5\n"), "{}", o.stdout);

    let o = run(&["gen-params", "--mersenne", "4"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("not a Mersenne exponent"), "{}", o.stderr);

    let o = run(&["gen-params", "--bits", "16"]);
    assert!(o.stdout.contains("field_modulus: 10007\n"));

    assert_eq!(run(&["gen-params"]).code, 2);
    assert_eq!(run(&["gen-params", "--bits", "4", "--mersenne", "5"]).code, 2);
    assert_eq!(run(&["gen-params", "--safe-prime-above", "1000000", "--budget", "2"]).code, 3);
}

#[test]
fn seeded_gf7_deal_gives_worked_shares() {
    let dir = tempfile::tempdir().unwrap();
    let o = gf7_deal(dir.path(), "exp");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(share_lines(dir.path()), ["share: 1 5", "share: 2 0", "share: 3 2"]);
    assert_eq!(
        fs::read_to_string(dir.path().join("share_2.txt")).unwrap(),
        "format_version: 1\nkind: shares\nscheme: exp\nfield_kind: prime\nfield_modulus: 7\n\
         threshold: 2\ntotal: 3\nshare: 2 0\n"
    );
    for i in 1..=3 {
        assert!(dir.path().join(format!("bundle_{i}.txt")).exists());
    }
    assert!(!dir.path().join("combined.txt").exists());
    let params = fs::read_to_string(dir.path().join("params.txt")).unwrap();
    // three-bit values: NSP(2^3) = 11
    assert!(params.contains("verify_field_modulus: b\n"), "{params}");
}

#[test]
fn deal_is_deterministic_under_seed() {
    for scheme in ["pow", "ssp", "pow-priv", "ssp-priv", "exp", "exp-ssp", "hash"] {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        for d in [&a, &b] {
            let o = run(&[
                "deal", "--secret", "abc", "--t", "3", "--n", "5", "--scheme", scheme, "--prime", "65521", "--seed",
                "99", "--out", path(d.path()),
            ]);
            assert_eq!(o.code, 0, "{scheme}: {}", o.stderr);
        }
        let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        names.sort();
        for n in names {
            assert_eq!(
                fs::read(a.path().join(&n)).unwrap(),
                fs::read(b.path().join(&n)).unwrap(),
                "{scheme} {n:?}"
            );
        }
    }
}

#[test]
fn deal_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path());
    let base = ["deal", "--secret", "3", "--n", "3", "--scheme", "exp", "--prime", "7", "--out", d];
    let with = |extra: &[&str]| {
        let mut v = base.to_vec();
        v.extend_from_slice(extra);
        run(&v).code
    };
    assert_eq!(with(&["--t", "4"]), 2);
    assert_eq!(with(&["--t", "0"]), 2);
    assert_eq!(with(&["--t", "2", "--secret", "9"]), 2);
    assert_eq!(run(&["deal", "--secret", "3", "--t", "2", "--n", "3", "--scheme", "exp", "--prime", "8", "--out", d]).code, 2);
    assert_eq!(run(&["deal", "--secret", "zz", "--t", "2", "--n", "3", "--scheme", "exp", "--prime", "7", "--out", d]).code, 2);
}

#[test]
fn mersenne_verification_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "deal", "--secret", "1f", "--t", "2", "--n", "4", "--scheme", "exp", "--binary", "13", "--verify-field",
        "mersenne-13", "--seed", "4", "--out", path(dir.path()),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let bundle = fs::read_to_string(dir.path().join("bundle_1.txt")).unwrap();
    assert!(bundle.contains("field_kind: binary\nfield_degree: 13\n"), "{bundle}");
    for i in 2..=4 {
        let o = run(&[
            "verify",
            "--bundle",
            path(&dir.path().join("bundle_1.txt")),
            "--share",
            path(&dir.path().join(format!("share_{i}.txt"))),
        ]);
        assert_eq!(o.stdout, "ACCEPT\n");
    }
}

#[test]
fn verify_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    gf7_deal(dir.path(), "exp");
    let bundle = dir.path().join("bundle_2.txt");
    let o = run(&["verify", "--bundle", path(&bundle), "--share", path(&dir.path().join("share_1.txt"))]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "ACCEPT\n"));

    // tamper with one hex digit
    let text = fs::read_to_string(dir.path().join("share_1.txt")).unwrap().replace("share: 1 5", "share: 1 4");
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, text).unwrap();
    let o = run(&["verify", "--bundle", path(&bundle), "--share", path(&bad)]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "REJECT index=1\n"));

    let o = run(&["verify", "--bundle", path(&bundle), "--share", path(&dir.path().join("share_2.txt"))]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("own share"), "{}", o.stderr);

    // scheme tag mismatch
    let other = tempfile::tempdir().unwrap();
    gf7_deal(other.path(), "pow");
    let o = run(&["verify", "--bundle", path(&other.path().join("bundle_0.txt")), "--share", path(&dir.path().join("share_1.txt"))]);
    assert_eq!(o.code, 2);

    fs::write(&bad, "kind: shares\n").unwrap();
    assert_eq!(run(&["verify", "--bundle", path(&bundle), "--share", path(&bad)]).code, 2);
}

#[test]
fn public_and_baseline_schemes_verify() {
    for scheme in ["pow", "ssp", "hash", "feldman"] {
        let dir = tempfile::tempdir().unwrap();
        let o = run(&[
            "deal", "--secret", "1234", "--t", "3", "--n", "5", "--scheme", scheme, "--prime", "65521", "--seed", "1",
            "--p-bits", "96", "--out", path(dir.path()),
        ]);
        assert_eq!(o.code, 0, "{scheme}: {}", o.stderr);
        for i in 1..=5 {
            let o = run(&[
                "verify",
                "--bundle",
                path(&dir.path().join("bundle_0.txt")),
                "--share",
                path(&dir.path().join(format!("share_{i}.txt"))),
            ]);
            assert_eq!(o.stdout, "ACCEPT\n", "{scheme} share {i}");
        }
    }
}

#[test]
fn reconstruct_and_detect_gf7() {
    let dir = tempfile::tempdir().unwrap();
    gf7_deal(dir.path(), "hash");
    let files: Vec<String> = (1..=3).map(|i| path(&dir.path().join(format!("share_{i}.txt"))).to_string()).collect();
    let f: Vec<&str> = files.iter().map(String::as_str).collect();

    let o = run(&["reconstruct", "--shares", f[0], f[2]]);
    assert_eq!(o.stdout, "secret: 3\n");

    let o = run(&["detect", "--shares", f[0], f[1], f[2]]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "coalition: m=3 t=2\nsubsets: 3\nsecret 3: count=3 subsets={1,2} {1,3} {2,3}\nconsistent: true\n"
    );
    assert_eq!(run(&["detect", "--shares", f[0], f[1]]).code, 2);

    // share 2 moved from 0 to 1: every pair disagrees
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, fs::read_to_string(f[1]).unwrap().replace("share: 2 0", "share: 2 1")).unwrap();
    let o = run(&["identify", "--shares", f[0], path(&bad), f[2]]);
    assert_eq!(o.code, 5, "{}", o.stdout);
    assert!(o.stdout.contains("secret 2: count=1"));
    assert!(o.stdout.contains("secret 3: count=1"));
    assert!(o.stdout.contains("secret 6: count=1"));
    assert!(o.stderr.contains("no strict majority"));
}

#[test]
fn identify_names_the_tampered_shareholder() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "deal", "--secret", "2a", "--t", "2", "--n", "5", "--scheme", "hash", "--prime", "251", "--seed", "5", "--out",
        path(dir.path()),
    ]);
    assert_eq!(o.code, 0);
    let p4 = dir.path().join("share_4.txt");
    let text = fs::read_to_string(&p4).unwrap();
    let line = text.lines().find(|l| l.starts_with("share:")).unwrap().to_string();
    let v = u64::from_str_radix(line.rsplit(' ').next().unwrap(), 16).unwrap();
    fs::write(&p4, text.replace(&line, &format!("share: 4 {:x}", (v + 1) % 251))).unwrap();
    let files: Vec<String> = (1..=5).map(|i| path(&dir.path().join(format!("share_{i}.txt"))).to_string()).collect();
    let mut args = vec!["identify", "--shares"];
    args.extend(files.iter().map(String::as_str));
    let o = run(&args);
    assert_eq!(o.code, 1, "{}", o.stdout);
    assert!(o.stdout.contains("majority_secret: 2a\n"));
    assert!(o.stdout.contains("cheaters: 4\n"));
    assert!(o.stdout.contains("bounds independent (c=1): detection=ok identification=ok\n"));

    args[0] = "detect";
    assert_eq!(run(&args).code, 1);
}

#[test]
fn rates_table() {
    let o = run(&["rates", "--bsq", "160", "--t", "3", "--n", "5"]);
    assert_eq!(o.code, 0);
    let rows: Vec<&str> = o.stdout.lines().collect();
    assert!(rows[2].starts_with("feldman") && rows[2].ends_with("12.8000"), "{}", rows[2]);
    let exp: Vec<&str> = rows[3].split_whitespace().collect();
    assert_eq!(exp[..3], ["exp", "161", "813"]);
    assert_eq!(exp[5], "161/160");
    let o = run(&["rates", "--bsq", "256", "--t", "3", "--n", "5"]);
    assert!(o.stdout.contains(" 257/256 "), "{}", o.stdout);
}

#[test]
fn attack_demos() {
    let o = run(&["attack-demo", "--scheme", "pow-priv", "--seed", "3"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("recovered: yes"));
    let o = run(&["attack-demo", "--scheme", "ssp", "--seed", "3"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.matches("ACCEPT").count(), 5);
    assert_eq!(run(&["attack-demo", "--scheme", "pow-priv", "--bits", "40"]).code, 2);
}

#[test]
fn insecure_combined_holds_everything() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "deal", "--secret", "3", "--t", "2", "--n", "3", "--scheme", "exp", "--prime", "7", "--seed", "10", "--out",
        path(dir.path()), "--insecure-combined",
    ]);
    assert_eq!(o.code, 0);
    let text = fs::read_to_string(dir.path().join("combined.txt")).unwrap();
    assert_eq!(text.matches("---\n").count(), 3);
    assert_eq!(text.matches("kind: bundle").count(), 3);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polyvss");
    let out = Command::new(bin).args(["gen-params", "--safe-prime-above", "11"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("field_modulus: 17"));
    let out = Command::new(bin).args(["gen-params", "--mersenne", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
