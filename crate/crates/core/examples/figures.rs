//! Write the four figure series into a directory.
//!
//! cargo run --release --example figures -- [out_dir]

use std::path::PathBuf;

use gcdperm::cli::{cmd_export_figures, Figure, FigureParams};

fn main() -> gcdperm::Result<()> {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("gcdperm-figures"));
    for path in cmd_export_figures(&Figure::ALL, &out, &FigureParams::default())? {
        let rows = std::fs::read_to_string(&path)?.lines().count() - 1;
        println!("{:<40} {rows} rows", path.display());
    }
    Ok(())
}
