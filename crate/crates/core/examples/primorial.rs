//! Record counts and density of `f_3` around primorials.
//!
//! cargo run --release --example primorial

use gcdperm::primorial::{kappa_bounds, verify_translation, PrimorialAnalysis};

fn main() -> gcdperm::Result<()> {
    let an = PrimorialAnalysis::new(1_000_000)?;
    let ledger = an.density_ledger(6, 1_000_000, 12)?;
    println!("{:>2} {:>8} {:>3} {:>6} {:>10}", "n", "p_n#", "s_n", "w_n", "w_n/p_n#");
    for n in 1..=6 {
        println!(
            "{n:>2} {:>8} {:>3} {:>6} {:>10.6}",
            an.table().primorial(n),
            ledger.s[n - 1],
            ledger.w[n - 1],
            ledger.normalized_w[n - 1]
        );
    }

    let b = kappa_bounds(12)?;
    println!("kappa(10^6) = {:.6}", ledger.kappa_empirical);
    println!("bounds [{:.5}, {:.5}]", b.lower.lo, b.upper.hi);
    println!("coarse [{:.5}, {:.5}]", b.coarse_lower, b.coarse_upper);

    for n in 2..=4 {
        let rec = an.verify_primorial_records(n)?;
        let tr = verify_translation(n)?;
        println!(
            "n = {n}: {} multiples checked, translation holds on {:?}",
            rec.checked.len(),
            tr.maximal
        );
        let q = an.prop3_check(n, 50)?;
        let first = q.tested().next().copied();
        if let Some(row) = first {
            println!("  first prime {} has g = {} (bound {})", row.q, row.g.unwrap(), q.bound);
        }
    }
    Ok(())
}
