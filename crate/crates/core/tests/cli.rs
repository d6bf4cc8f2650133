use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use gcdperm::cli::{
    cmd_diff_bfile, cmd_generate, cmd_verify, load_record_book, Config, Format, Suite,
    VerifyParams,
};
use gcdperm::records::RecordBook;

fn gcdperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcdperm"))
        .args(args)
        .env_remove("GCDPERM_CACHE")
        .env_remove("GCDPERM_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn bfile(n: u64) -> String {
    let cfg = Config {
        n,
        format: Format::Plain,
        ..Config::default()
    };
    let mut out = Vec::new();
    cmd_generate(&cfg, &mut out).unwrap();
    format!("# f_3, b-file layout\n{}", String::from_utf8(out).unwrap())
}

#[test]
fn generate_rows() {
    let o = gcdperm(&["generate", "--a", "3", "--n", "24"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 25);
    assert_eq!(lines[0], "n,f_n");
    assert_eq!(lines[8], "8,11");
    assert_eq!(lines[24], "24,25");

    let id = stdout(&gcdperm(&["generate", "--a", "2", "--n", "5"]));
    assert_eq!(id, "n,f_n\n1,1\n2,2\n3,3\n4,4\n5,5\n");

    let f36 = stdout(&gcdperm(&["generate", "--a", "36", "--n", "38"]));
    assert!(f36.ends_with("37,35\n38,38\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gcdperm(&["verify", "thm9"]).status.code(), Some(2));
    assert_eq!(gcdperm(&["generate", "--a", "1"]).status.code(), Some(2));
    let capped = gcdperm(&["generate", "--n", "1000", "--max-terms", "10"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn env_overrides_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_gcdperm"))
        .args(["generate", "--n", "1000"])
        .env("GCDPERM_MAX_TERMS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_from_the_binary() {
    let o = gcdperm(&["verify", "prop1", "--limit", "100000"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));

    let o = gcdperm(&["verify", "thm6", "--n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("k in [9, 2101]"));

    let o = gcdperm(&["verify", "thm10", "--bound", "5000"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn every_suite_passes() {
    for suite in Suite::ALL {
        let params = VerifyParams {
            bound: Some(1_200),
            ..VerifyParams::default()
        };
        let report = cmd_verify(suite, &params).unwrap();
        assert!(report.passed(), "{suite}: {:?}", report.checks);
        assert!(!report.checks.is_empty());
    }
}

#[test]
fn bfile_agreement_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let clean = dir.path().join("clean.txt");
    fs::write(&clean, bfile(10_000)).unwrap();
    let o = gcdperm(&["diff-bfile", clean.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "agreement over 10000 rows\n");

    // line 1 is the comment, so n = 57 sits on line 58
    let mut lines: Vec<String> = bfile(100).lines().map(String::from).collect();
    lines[57] = "57 999".into();
    let tampered = dir.path().join("tampered.txt");
    fs::write(&tampered, lines.join("\n")).unwrap();
    let o = gcdperm(&["diff-bfile", tampered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("mismatch at n=57"));

    let diff = cmd_diff_bfile(lines.join("\n").as_bytes(), 3, 0, 0, 1_000).unwrap();
    let m = diff.first_mismatch.unwrap();
    assert_eq!((m.n, m.expected, m.found, diff.compared), (57, 56, 999, 56));
}

#[test]
fn bfile_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "# nothing here\n").unwrap();
    let o = gcdperm(&["diff-bfile", empty.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 1\n2 3\nthree 2\n").unwrap();
    let o = gcdperm(&["diff-bfile", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let missing = gcdperm(&["diff-bfile", "/nonexistent/b-file.txt"]);
    assert_eq!(missing.status.code(), Some(3));

    // a file indexed from 0 lines up with --offset 1
    let shifted: String = bfile(50)
        .lines()
        .skip(1)
        .map(|l| {
            let (n, v) = l.split_once(' ').unwrap();
            format!("{} {v}\n", n.parse::<u64>().unwrap() - 1)
        })
        .collect();
    let path = dir.path().join("shifted.txt");
    fs::write(&path, shifted).unwrap();
    // row 0 has no counterpart without the offset
    let o = gcdperm(&["diff-bfile", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("falls before 1"));
    let o = gcdperm(&["diff-bfile", path.to_str().unwrap(), "--offset", "1"]);
    assert!(o.status.success());
    let o = gcdperm(&["diff-bfile", path.to_str().unwrap(), "--offset", "1", "--from", "10"]);
    assert_eq!(stdout(&o), "agreement over 40 rows\n");
}

fn export(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["export-figures", "--out-dir", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    gcdperm(&args)
}

#[test]
fn figures_have_expected_shape_and_are_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert!(export(a.path(), &[]).status.success());
    assert!(export(b.path(), &[]).status.success());
    let names = [
        "fig1_twin_cycle_gaps.csv",
        "fig2_discrete_derivative.csv",
        "fig3_prime_ratio.csv",
        "fig4_primes_among_records.csv",
    ];
    for name in names {
        let x = fs::read(a.path().join(name)).unwrap();
        assert_eq!(x, fs::read(b.path().join(name)).unwrap(), "{name}");
        assert!(!x.contains(&b'\r'));
    }
    let rows = |name: &str| fs::read_to_string(a.path().join(name)).unwrap();
    let fig1 = rows(names[0]);
    assert!(fig1.starts_with("j,m_j,M_j,gap_formula_A,gap_formula_B\n1,5,7,"));
    let fig2 = rows(names[1]);
    assert_eq!(fig2.lines().count(), 12_001);
    assert!(fig2.starts_with("t,g_t\n1,2\n2,-1\n"));
    let fig3 = rows(names[2]);
    assert_eq!(fig3.lines().count(), 1_001);
    assert!(fig3.starts_with("n,ratio_ln\n"));
    assert_eq!(rows(names[3]).lines().count(), 1_001);

    let only = tempfile::tempdir().unwrap();
    assert!(export(only.path(), &["fig2"]).status.success());
    assert_eq!(fs::read_dir(only.path()).unwrap().count(), 1);
    assert_eq!(export(only.path(), &["fig9"]).status.code(), Some(2));
}

#[test]
fn record_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("records.txt");
    let cache_arg = cache.to_str().unwrap();
    let first = gcdperm(&["--cache", cache_arg, "records", "--limit", "5000"]);
    assert!(first.status.success());
    assert!(cache.exists());
    let again = gcdperm(&["--cache", cache_arg, "records", "--limit", "5000"]);
    assert_eq!(first.stdout, again.stdout);
    let plain = gcdperm(&["records", "--limit", "5000"]);
    assert_eq!(first.stdout, plain.stdout);
    assert!(stdout(&plain).starts_with("index,record,turning_point,jump,is_composite\n1,5,4,1,false\n"));

    let small = gcdperm(&["--cache", cache_arg, "records", "--limit", "100"]);
    assert_eq!(stdout(&small).lines().last().unwrap().split(',').nth(1), Some("97"));

    let loaded = load_record_book(Some(&cache), 5_000).unwrap();
    assert_eq!(loaded.records(), RecordBook::upto(5_000).records());

    fs::write(&cache, "not a cache\n").unwrap();
    let broken = gcdperm(&["--cache", cache_arg, "records", "--limit", "100"]);
    assert_eq!(broken.status.code(), Some(3));
}

#[test]
fn scan_output() {
    let o = gcdperm(&["scan", "--bound", "60"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("a,simulation_verdict,M_a_or_merge,thm4,thm10,agree\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    assert_eq!(text.lines().count(), 1 + 2 + 10);
}
