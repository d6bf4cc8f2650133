//! Cycle decompositions and the twin prime cycle index.
//!
//! cargo run --example cycles -- [a] [upto]

use gcdperm::cycles::{cycle_index, decompose, format_cycles, twin_cycle_gaps, CycleIndexMap};

fn main() -> gcdperm::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let a = args.next().unwrap_or(3);
    let upto = args.next().unwrap_or(25);

    let cycles = decompose(a, upto)?;
    println!("f_{a}: {}", format_cycles(&cycles));

    let f3 = decompose(3, 200)?;
    let index = CycleIndexMap::new(&f3);
    for v in [5, 23, 25, 101] {
        println!("C({v}) = {}", cycle_index(&index, v)?);
    }
    for g in twin_cycle_gaps(200)?.iter().take(6) {
        println!(
            "j={} ({}, {}) gaps {} {}",
            g.j, g.lesser, g.greater, g.gap_a, g.gap_b
        );
    }
    Ok(())
}
