//! Check a b-file against a local `f_3`.
//!
//! Without an argument a b-file is generated, one value is altered and the
//! diff is shown.
//!
//! cargo run --example bfile_diff -- [path] [offset]

use std::fs::File;
use std::io::BufReader;

use gcdperm::cli::{cmd_diff_bfile, cmd_generate, Config, Format};
use gcdperm::sequence::DEFAULT_MAX_TERMS;

fn main() -> gcdperm::Result<()> {
    let mut args = std::env::args().skip(1);
    if let Some(path) = args.next() {
        let offset = args.next().map_or(0, |s| s.parse().expect("integer offset"));
        let diff = cmd_diff_bfile(BufReader::new(File::open(path)?), 3, offset, 0, DEFAULT_MAX_TERMS)?;
        println!("{diff:?}");
        return Ok(());
    }

    let cfg = Config {
        n: 100,
        format: Format::Plain,
        ..Config::default()
    };
    let mut text = Vec::new();
    cmd_generate(&cfg, &mut text)?;
    let clean = cmd_diff_bfile(&text[..], 3, 0, 0, DEFAULT_MAX_TERMS)?;
    println!("clean copy: {} rows agree", clean.compared);

    let mut lines: Vec<String> = String::from_utf8(text).unwrap().lines().map(String::from).collect();
    lines[56] = "57 1".into();
    let tampered = lines.join("\n");
    let diff = cmd_diff_bfile(tampered.as_bytes(), 3, 0, 0, DEFAULT_MAX_TERMS)?;
    let m = diff.first_mismatch.expect("altered row");
    println!("tampered copy: n = {} expected {} found {}", m.n, m.expected, m.found);
    Ok(())
}
