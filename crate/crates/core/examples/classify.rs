//! Decide whether `f_a` ends as the identity or merges with `f_3`.
//!
//! cargo run --release --example classify -- [a ...]

use gcdperm::classify::{classify_auto, in_a_theorem10, in_a_theorem4, ClassLabel};
use gcdperm::primorial::PrimorialTable;
use gcdperm::records::RecordBook;

fn main() -> gcdperm::Result<()> {
    let mut seeds: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer seed"))
        .collect();
    if seeds.is_empty() {
        seeds = vec![2, 4, 6, 7, 12, 36, 216, 426, 1000];
    }
    let book = RecordBook::upto(seeds.iter().max().unwrap() + 2);
    let table = PrimorialTable::new(20);

    for a in seeds {
        let label = classify_auto(a)?;
        let how = match label {
            ClassLabel::Identity { m_a, .. } => format!("identity from n = {m_a}"),
            ClassLabel::C3 { merge_index } => format!("agrees with f_3 from n = {merge_index}"),
        };
        println!(
            "a = {a:>5}: {how:<28} adjacent-record test {:<5} primorial test {}",
            in_a_theorem4(&book, a)?,
            in_a_theorem10(&table, a)
        );
    }
    Ok(())
}
