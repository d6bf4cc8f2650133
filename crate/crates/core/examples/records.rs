//! Turning points and records of `f_3`.
//!
//! cargo run --example records -- [limit]

use gcdperm::records::{
    find_turning_points, prime_multiple_records, twin_records, RecordBook,
};
use gcdperm::sequence::generate_prefix;

fn main() -> gcdperm::Result<()> {
    let limit: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("integer limit"))
        .unwrap_or(211);

    let f = generate_prefix(3, 24)?;
    let tps: Vec<u64> = find_turning_points(&f).iter().map(|t| t.t).collect();
    println!("turning points of f_3 up to 24: {tps:?}");

    let book = RecordBook::upto(limit);
    println!("{} records <= {limit}", book.len());
    println!("{:>6} {:>6} {:>5}", "record", "tp", "jump");
    for r in book.records().iter().filter(|r| r.is_composite) {
        println!("{:>6} {:>6} {:>5}", r.value, r.turning_point, r.jump);
    }

    for p in [5, 7, 11] {
        let m = prime_multiple_records(p, limit.max(1_000))?;
        println!("composite records divisible by {p}: {:?}", &m.values[..m.values.len().min(8)]);
    }
    let twins = twin_records(limit);
    println!("{} twin record pairs, first {:?}", twins.len(), &twins[..twins.len().min(5)]);

    // f_3 is fully determined by its records
    let covered = book.records().last().map_or(3, |r| r.value);
    let sim = generate_prefix(3, covered)?;
    assert!((1..=covered).all(|n| book.reconstruct(n).ok() == sim.get(n)));
    println!("records reproduce f_3(1..={covered})");
    Ok(())
}
