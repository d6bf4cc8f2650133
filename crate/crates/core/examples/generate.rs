//! Print the first terms of `f_a`.
//!
//! cargo run --example generate -- [a] [n]

use gcdperm::sequence::generate_prefix;

fn main() -> gcdperm::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let a = args.next().unwrap_or(3);
    let n = args.next().unwrap_or(24);

    let f = generate_prefix(a, n)?;
    println!("f_{a}(1..={n}):");
    for chunk in f.terms().chunks(12) {
        let row: Vec<String> = chunk.iter().map(u64::to_string).collect();
        println!("  {}", row.join(" "));
    }
    println!("pool size peaked at {}", f.max_pool_len());
    match (1..=n).rev().find(|&m| f.prefix_surjective_upto(m)) {
        Some(m) => println!("every value 1..={m} has appeared"),
        None => println!("the prefix covers no initial segment"),
    }
    Ok(())
}
