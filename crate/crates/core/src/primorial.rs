//! Primorials and the record structure of `f_3` around them.
//!
//! The record set `R` used for counting is the `f_3` record stream together
//! with the seed value 3, so that `s_1 = 0`, `s_2 = 1` and `w_1 = 1` and the
//! recurrence `w_{n+1} = w_n p_{n+1} - s_{n+1}` holds from `n = 1`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes::{first_primes, is_prime};
use crate::records::{RecordBook, SEED_RECORD};
use crate::sequence::generate_prefix_capped;

/// Largest record limit an analysis will enumerate.
pub const MAX_RECORD_LIMIT: u64 = 100_000_000;

/// `sum_{n>=1} 1/p_n#`, truncated.
pub const PRIMORIAL_RECIPROCAL_SUM: f64 = 0.705_230_171_791_800_9;

/// Decimal bracket `[0.704, 0.706]` around the primorial reciprocal sum,
/// which yields the coarse bounds 0.296 and 782/3000.
pub const RECIPROCAL_SUM_BRACKET: (f64, f64) = (0.704, 0.706);

/// Primes `p_1 = 2, p_2 = 3, ..` and exact primorials `p_n# = p_1 .. p_n`.
#[derive(Debug, Clone)]
pub struct PrimorialTable {
    primes: Vec<u64>,
    primorials: Vec<BigUint>,
}

impl PrimorialTable {
    /// Table holding the first `count` primes and primorials.
    pub fn new(count: usize) -> Self {
        let primes = first_primes(count);
        let mut primorials = Vec::with_capacity(count);
        let mut acc = BigUint::one();
        for &p in &primes {
            acc *= p;
            primorials.push(acc.clone());
        }
        PrimorialTable { primes, primorials }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// `p_n`, 1-based.
    pub fn prime(&self, n: usize) -> u64 {
        self.primes[n - 1]
    }

    /// `p_n#`, 1-based.
    pub fn primorial(&self, n: usize) -> &BigUint {
        &self.primorials[n - 1]
    }

    pub fn primorial_u64(&self, n: usize) -> Option<u64> {
        self.primorial(n).to_u64()
    }
}

/// Exact `p_n#` for `n >= 1`.
pub fn primorial(n: usize) -> BigUint {
    assert!(n >= 1, "primorials are indexed from 1");
    PrimorialTable::new(n).primorial(n).clone()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimorialRecordReport {
    pub n: usize,
    pub primorial: u64,
    /// `r * p_n# - 1` and `r * p_n# + 1` for every multiplier tested.
    pub checked: Vec<u64>,
    pub failures: Vec<u64>,
}

impl PrimorialRecordReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationReport {
    pub n: usize,
    pub shift: u64,
    /// Inclusive range of `k` that was checked.
    pub checked: (u64, u64),
    /// `k` in the checked range where `f(p_n# + k) != f(k) + p_n#`.
    pub failures: Vec<u64>,
    /// Largest contiguous range around `checked` where the identity holds,
    /// probed down to `k = 1` and up to `k = p_{n+1} * p_n#`.
    pub maximal: Option<(u64, u64)>,
}

impl TranslationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `f(p_n# + k) = f(k) + p_n#` over `k in [p_{n+1}, (p_{n+1} - 1) p_n#]`.
pub fn verify_translation(n: usize) -> Result<TranslationReport> {
    let table = PrimorialTable::new(n + 1);
    let shift = primorial_u64_checked(&table, n)?;
    let next = table.prime(n + 1);
    verify_translation_range(n, next, (next - 1) * shift)
}

/// Same identity over an explicit inclusive `k` range.
pub fn verify_translation_range(n: usize, lo: u64, hi: u64) -> Result<TranslationReport> {
    if n < 2 || lo == 0 || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "translation check needs n >= 2 and 1 <= lo <= hi, got n={n} [{lo},{hi}]"
        )));
    }
    let table = PrimorialTable::new(n + 1);
    let shift = primorial_u64_checked(&table, n)?;
    let probe_hi = (table.prime(n + 1) * shift).max(hi);
    let buf = generate_prefix_capped(3, shift + probe_hi, MAX_RECORD_LIMIT)?;
    let holds = |k: u64| buf.get(shift + k) == buf.get(k).map(|v| v + shift);

    let failures: Vec<u64> = (lo..=hi).filter(|&k| !holds(k)).collect();
    let maximal = failures.is_empty().then(|| {
        let mut start = lo;
        while start > 1 && holds(start - 1) {
            start -= 1;
        }
        let mut end = hi;
        while end < probe_hi && holds(end + 1) {
            end += 1;
        }
        (start, end)
    });
    Ok(TranslationReport {
        n,
        shift,
        checked: (lo, hi),
        failures,
        maximal,
    })
}

fn primorial_u64_checked(table: &PrimorialTable, n: usize) -> Result<u64> {
    table
        .primorial_u64(n)
        .filter(|&p| p <= MAX_RECORD_LIMIT)
        .ok_or(Error::LimitExceeded {
            requested: table.primorial(n).to_u64().unwrap_or(u64::MAX),
            cap: MAX_RECORD_LIMIT,
        })
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Bounds on the record density `kappa`.
#[derive(Debug, Clone)]
pub struct KappaBounds {
    pub terms: usize,
    /// `3/10 - sum_{k=4}^K (p_{k+1} - p_k) / (2 p_k#)`, exact.
    pub lower_partial: BigRational,
    /// `3/10 - sum_{k=4}^K 1 / p_k#`, exact.
    pub upper_partial: BigRational,
    /// Encloses the infinite-sum lower bound.
    pub lower: Interval,
    /// Encloses the infinite-sum upper bound.
    pub upper: Interval,
    /// `3/10 - sum_{k>=3} 1/p_k#`, the weaker lower bound obtained from
    /// `p_{k+1} <= 2 p_k`.
    pub coarse_lower_exact: f64,
    /// `0.3 - 0.704 + 1/2 + 1/6 + 1/30`.
    pub coarse_upper: f64,
    /// `0.3 - 0.706 + 1/2 + 1/6`.
    pub coarse_lower: f64,
    /// `sum_{k=1}^K 1/p_k#` plus its geometric tail bound.
    pub reciprocal_sum: Interval,
}

fn ratio(num: u64, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den.clone()))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Partial sums of both bounds through `k = terms` with geometric tails.
pub fn kappa_bounds(terms: usize) -> Result<KappaBounds> {
    if terms < 4 {
        return Err(Error::InvalidArgument(format!(
            "kappa bounds need at least 4 terms, got {terms}"
        )));
    }
    let t = PrimorialTable::new(terms + 2);
    let three_tenths = BigRational::new(3.into(), 10.into());

    let mut upper_sum = BigRational::zero();
    let mut lower_sum = BigRational::zero();
    let mut recip_sum = BigRational::zero();
    let mut from_three = BigRational::zero();
    for k in 1..=terms {
        let inv = ratio(1, t.primorial(k));
        recip_sum += &inv;
        if k >= 3 {
            from_three += &inv;
        }
        if k >= 4 {
            upper_sum += &inv;
            lower_sum += ratio(t.prime(k + 1) - t.prime(k), &(t.primorial(k) * 2u32));
        }
    }

    // sum_{j>=K} 1/p_j# <= (1/p_K#) * p_{K+1} / (p_{K+1} - 1)
    let geometric_from = |k: usize| {
        let q = t.prime(k + 1);
        ratio(1, t.primorial(k)) * BigRational::new(q.into(), (q - 1).into())
    };
    let upper_tail = geometric_from(terms + 1);
    // p_{k+1} - p_k < p_k, so each lower-sum term is below 1/(2 p_{k-1}#)
    let lower_tail = geometric_from(terms) / BigRational::from_integer(2.into());
    let recip_tail = geometric_from(terms + 1);
    let from_three_tail = geometric_from(terms + 1);

    let upper_partial = &three_tenths - &upper_sum;
    let lower_partial = &three_tenths - &lower_sum;
    let (bracket_lo, bracket_hi) = RECIPROCAL_SUM_BRACKET;
    Ok(KappaBounds {
        terms,
        upper: Interval {
            lo: to_f64(&(&upper_partial - &upper_tail)),
            hi: to_f64(&upper_partial),
        },
        lower: Interval {
            lo: to_f64(&(&lower_partial - &lower_tail)),
            hi: to_f64(&lower_partial),
        },
        reciprocal_sum: Interval {
            lo: to_f64(&recip_sum),
            hi: to_f64(&(&recip_sum + &recip_tail)),
        },
        coarse_lower_exact: to_f64(&(&three_tenths - &from_three - from_three_tail)),
        coarse_upper: 0.3 - bracket_lo + 1.0 / 2.0 + 1.0 / 6.0 + 1.0 / 30.0,
        coarse_lower: 0.3 - bracket_hi + 1.0 / 2.0 + 1.0 / 6.0,
        lower_partial,
        upper_partial,
    })
}

/// One sample of the prime-share series over the counting set `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    /// The record value the sample is taken at.
    pub n: u64,
    /// Records `<= n`.
    pub records: u64,
    /// Prime records `<= n`.
    pub primes: u64,
    /// `primes / records * ln n`.
    pub ratio_ln: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop3Row {
    pub k: u64,
    pub q: u64,
    pub q_prime: bool,
    /// `g(q) = f(q + 1) - f(q)` when `q` is a prime above 5.
    pub g: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop3Report {
    pub n: usize,
    pub bound: i64,
    pub rows: Vec<Prop3Row>,
    /// Tested `k` where `g(q) < 2n + 1`.
    pub failures: Vec<u64>,
}

impl Prop3Report {
    pub fn tested(&self) -> impl Iterator<Item = &Prop3Row> {
        self.rows.iter().filter(|r| r.g.is_some())
    }

    /// No prime `q > 5` was found, so nothing was asserted.
    pub fn vacuous(&self) -> bool {
        self.tested().next().is_none()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Counts `s_n`, `w_n` and the normalized `w_n / p_n#`.
#[derive(Debug, Clone)]
pub struct DensityLedger {
    /// `s[n - 1] = s_n`
    pub s: Vec<u64>,
    /// `w[n - 1] = w_n`
    pub w: Vec<u64>,
    /// `w_n / p_n#`
    pub normalized_w: Vec<f64>,
    pub kappa_empirical: f64,
    pub bounds: KappaBounds,
}

impl DensityLedger {
    /// `w_{n+1} = w_n p_{n+1} - s_{n+1}` for `n` with both sides computed.
    pub fn recurrence_holds(&self, n: usize, table: &PrimorialTable) -> Option<bool> {
        let w_n = *self.w.get(n - 1)?;
        let w_next = *self.w.get(n)?;
        let s_next = *self.s.get(n)?;
        Some(w_n * table.prime(n + 1) == w_next + s_next)
    }

    pub fn normalized_non_increasing(&self) -> bool {
        self.normalized_w.windows(2).all(|w| w[1] <= w[0])
    }
}

/// Record-based analysis of `f_3` around primorials.
#[derive(Debug, Clone)]
pub struct PrimorialAnalysis {
    table: PrimorialTable,
    book: RecordBook,
}

impl PrimorialAnalysis {
    /// Enumerates records `<= record_limit`.
    pub fn new(record_limit: u64) -> Result<Self> {
        if record_limit > MAX_RECORD_LIMIT {
            return Err(Error::LimitExceeded {
                requested: record_limit,
                cap: MAX_RECORD_LIMIT,
            });
        }
        Ok(Self::with_book(RecordBook::upto(record_limit)))
    }

    pub fn with_book(book: RecordBook) -> Self {
        PrimorialAnalysis {
            table: PrimorialTable::new(32),
            book,
        }
    }

    pub fn table(&self) -> &PrimorialTable {
        &self.table
    }

    pub fn book(&self) -> &RecordBook {
        &self.book
    }

    /// Members of `R` (seed included) in `lo..=hi`.
    pub fn count_in(&self, lo: u64, hi: u64) -> u64 {
        let seed = (lo..=hi).contains(&SEED_RECORD) as u64;
        self.book.range(lo, hi).len() as u64 + seed
    }

    /// `s_n = #{r in R : p_n <= r < p_{n+1}}`
    pub fn s_count(&self, n: usize) -> Result<u64> {
        let (lo, hi) = (self.table.prime(n), self.table.prime(n + 1) - 1);
        self.book.require(hi)?;
        Ok(self.count_in(lo, hi))
    }

    /// `w_n = #{r in R : p_{n+1} <= r <= p_n# + 1}`
    pub fn w_count(&self, n: usize) -> Result<u64> {
        let hi = self.primorial_within_limit(n)? + 1;
        self.book.require(hi)?;
        Ok(self.count_in(self.table.prime(n + 1), hi))
    }

    fn primorial_within_limit(&self, n: usize) -> Result<u64> {
        self.table
            .primorial_u64(n)
            .filter(|&p| p < self.book.limit())
            .ok_or(Error::InsufficientRecords {
                needed: self.table.primorial(n).to_u64().unwrap_or(u64::MAX),
                covered: self.book.limit(),
            })
    }

    /// Checks that `r p_n# +- 1` is a record for `r = 1 .. p_{n+1} - 1`.
    pub fn verify_primorial_records(&self, n: usize) -> Result<PrimorialRecordReport> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
        }
        let p = self.primorial_within_limit(n)?;
        let next = self.table.prime(n + 1);
        self.book.require((next - 1) * p + 1)?;
        let mut checked = Vec::new();
        for r in 1..next {
            checked.push(r * p - 1);
            checked.push(r * p + 1);
        }
        let failures = checked
            .iter()
            .copied()
            .filter(|&v| !self.book.contains(v))
            .collect();
        Ok(PrimorialRecordReport {
            n,
            primorial: p,
            checked,
            failures,
        })
    }

    /// `#{r in R : r <= upto} / upto`
    pub fn kappa_empirical(&self, upto: u64) -> Result<f64> {
        if upto == 0 {
            return Err(Error::InvalidArgument("kappa needs a positive bound".into()));
        }
        self.book.require(upto)?;
        Ok(self.count_in(1, upto) as f64 / upto as f64)
    }

    /// Every `stride`-th member of `R` up to `upto`, with prime counts.
    pub fn prime_ratio_series(&self, upto: u64, stride: usize) -> Result<Vec<RatioPoint>> {
        if stride == 0 {
            return Err(Error::InvalidArgument("stride must be positive".into()));
        }
        self.book.require(upto)?;
        let members = std::iter::once(SEED_RECORD).chain(self.book.values());
        let mut out = Vec::new();
        let mut primes = 0u64;
        for (i, v) in members.take_while(|&v| v <= upto).enumerate() {
            primes += is_prime(v) as u64;
            let records = i as u64 + 1;
            if (records as usize).is_multiple_of(stride) {
                out.push(RatioPoint {
                    n: v,
                    records,
                    primes,
                    ratio_ln: primes as f64 / records as f64 * (v as f64).ln(),
                });
            }
        }
        Ok(out)
    }

    /// The first `count` members of `R` as ratio samples.
    pub fn first_records_series(&self, count: usize) -> Result<Vec<RatioPoint>> {
        let upto = std::iter::once(SEED_RECORD)
            .chain(self.book.values())
            .nth(count.saturating_sub(1))
            .ok_or(Error::InsufficientRecords {
                needed: count as u64,
                covered: self.book.len() as u64 + 1,
            })?;
        self.prime_ratio_series(upto, 1)
    }

    /// Checks `g(k p_n# + 1) >= 2n + 1` for every `k <= k_max` with
    /// `q = k p_n# + 1` prime and `q > 5`.
    pub fn prop3_check(&self, n: usize, k_max: u64) -> Result<Prop3Report> {
        if n < 1 {
            return Err(Error::InvalidArgument("need n >= 1".into()));
        }
        let p = self.primorial_within_limit(n)?;
        let bound = 2 * n as i64 + 1;
        let mut rows = Vec::new();
        let mut failures = Vec::new();
        for k in 1..=k_max {
            let q = k * p + 1;
            let q_prime = is_prime(q);
            let g = if q_prime && q > 5 {
                let g = self.book.reconstruct(q + 1)? as i64 - self.book.reconstruct(q)? as i64;
                if g < bound {
                    failures.push(k);
                }
                Some(g)
            } else {
                None
            };
            rows.push(Prop3Row { k, q, q_prime, g });
        }
        Ok(Prop3Report {
            n,
            bound,
            rows,
            failures,
        })
    }

    /// `s_1..s_n`, `w_1..w_n`, empirical kappa at `kappa_upto` and the bounds.
    pub fn density_ledger(&self, n: usize, kappa_upto: u64, terms: usize) -> Result<DensityLedger> {
        let s = (1..=n).map(|i| self.s_count(i)).collect::<Result<Vec<_>>>()?;
        let w = (1..=n).map(|i| self.w_count(i)).collect::<Result<Vec<_>>>()?;
        let normalized_w = w
            .iter()
            .enumerate()
            .map(|(i, &w)| w as f64 / self.table.primorial_u64(i + 1).unwrap() as f64)
            .collect();
        Ok(DensityLedger {
            s,
            w,
            normalized_w,
            kappa_empirical: self.kappa_empirical(kappa_upto)?,
            bounds: kappa_bounds(terms)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::find_turning_points;

    /// Record values of `f_3` up to `limit`, read off a simulation, plus the seed.
    fn simulated_r(limit: u64) -> Vec<u64> {
        let buf = generate_prefix_capped(3, limit + 2, MAX_RECORD_LIMIT).unwrap();
        let mut r: Vec<u64> = find_turning_points(&buf)
            .iter()
            .map(|t| t.record_value)
            .filter(|&v| v <= limit)
            .collect();
        r.push(SEED_RECORD);
        r.sort_unstable();
        r
    }

    #[test]
    fn primorial_values() {
        let expected = [2u64, 6, 30, 210, 2310, 30030, 510510, 9699690];
        let t = PrimorialTable::new(8);
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(t.primorial_u64(n + 1), Some(p));
        }
        assert_eq!(primorial(4), BigUint::from(210u32));
        assert_eq!(t.prime(8), 19);
        let big = PrimorialTable::new(20);
        assert!(big.primorial_u64(15).is_some());
        assert!(big.primorial_u64(16).is_none());
    }

    #[test]
    fn s_and_w_against_simulation() {
        let limit = 60_000;
        let r = simulated_r(limit);
        let an = PrimorialAnalysis::new(limit).unwrap();
        let t = an.table();
        let count = |lo: u64, hi: u64| r.iter().filter(|&&v| lo <= v && v <= hi).count() as u64;
        for n in 1..=20 {
            assert_eq!(an.s_count(n).unwrap(), count(t.prime(n), t.prime(n + 1) - 1), "s_{n}");
        }
        for n in 1..=6 {
            let p = t.primorial_u64(n).unwrap();
            assert_eq!(an.w_count(n).unwrap(), count(t.prime(n + 1), p + 1), "w_{n}");
        }
        let s: Vec<u64> = [1, 2, 3, 9, 10, 16].iter().map(|&n| an.s_count(n).unwrap()).collect();
        assert_eq!(s, vec![0, 1, 1, 2, 1, 2]);
        let w: Vec<u64> = (2..=4).map(|n| an.w_count(n).unwrap()).collect();
        assert_eq!(w, vec![2, 9, 62]);
        assert!(an.w_count(8).is_err());
    }

    #[test]
    fn kappa_counts_the_seed() {
        let an = PrimorialAnalysis::new(100).unwrap();
        // 3, 5, 7 lie at or below 10
        assert_eq!(an.kappa_empirical(10).unwrap(), 0.3);
        assert!(an.kappa_empirical(0).is_err());
        assert!(an.kappa_empirical(101).is_err());
    }

    #[test]
    fn bounds_enclose_each_other() {
        let b = kappa_bounds(12).unwrap();
        assert!((b.coarse_upper - 0.296).abs() < 1e-12);
        assert!((b.coarse_lower - 0.26067).abs() < 5e-5);
        assert!(b.reciprocal_sum.contains(PRIMORIAL_RECIPROCAL_SUM));
        assert!(b.reciprocal_sum.hi - b.reciprocal_sum.lo < 1e-12);
        assert!(b.lower.hi <= b.upper.lo);
        assert!(b.coarse_lower < b.lower.lo && b.upper.hi < b.coarse_upper);
        assert!(b.coarse_lower_exact <= b.lower.lo);
        // first terms by hand: 3/10 - 1/210, 3/10 - 4/420
        let four = kappa_bounds(4).unwrap();
        assert_eq!(four.upper_partial, BigRational::new(62.into(), 210.into()));
        assert_eq!(four.lower_partial, BigRational::new(61.into(), 210.into()));
        assert!(kappa_bounds(3).is_err());
    }

    #[test]
    fn empirical_kappa_inside_bounds() {
        let an = PrimorialAnalysis::new(200_000).unwrap();
        let k = an.kappa_empirical(200_000).unwrap();
        let b = kappa_bounds(10).unwrap();
        assert!(b.coarse_lower <= k && k <= b.coarse_upper, "{k}");
        assert!((k - 0.294).abs() < 0.005);
    }

    #[test]
    fn primorial_records() {
        let an = PrimorialAnalysis::new(2_400).unwrap();
        for n in 2..=4 {
            let rep = an.verify_primorial_records(n).unwrap();
            assert!(rep.passed(), "n = {n}: {:?}", rep.failures);
            assert_eq!(rep.checked.len(), 2 * (an.table().prime(n + 1) as usize - 1));
        }
        assert!(an.verify_primorial_records(1).is_err());
        assert!(an.verify_primorial_records(5).is_err());
    }

    #[test]
    fn translation_ranges_are_maximal() {
        let r3 = verify_translation(3).unwrap();
        assert!(r3.passed());
        assert_eq!(r3.checked, (7, 180));
        assert_eq!(r3.maximal, Some((7, 181)));
        let r4 = verify_translation(4).unwrap();
        assert_eq!(r4.maximal, Some((9, 2101)));
        let tampered = verify_translation_range(3, 6, 182).unwrap();
        assert_eq!(tampered.failures, vec![6, 182]);
        assert_eq!(tampered.maximal, None);
        assert!(verify_translation_range(1, 1, 2).is_err());
        assert!(verify_translation_range(3, 9, 8).is_err());
    }

    #[test]
    fn prop3_first_primes() {
        let an = PrimorialAnalysis::new(5_000).unwrap();
        let first = |n: usize| *an.prop3_check(n, 20).unwrap().tested().next().unwrap();
        let (a, b, c) = (first(2), first(3), first(4));
        assert_eq!((a.q, a.g), (7, Some(5)));
        assert_eq!((b.q, b.g), (31, Some(7)));
        assert_eq!((c.q, c.g), (211, Some(11)));
        // against a simulation
        let buf = generate_prefix_capped(3, 5_000, MAX_RECORD_LIMIT).unwrap();
        for n in 1..=4 {
            let rep = an.prop3_check(n, 20).unwrap();
            assert!(rep.passed());
            for row in rep.tested() {
                assert_eq!(row.g.unwrap(), buf.discrete_derivative(row.q).unwrap());
            }
        }
    }

    #[test]
    fn ratio_series() {
        let an = PrimorialAnalysis::new(1_000).unwrap();
        let s = an.first_records_series(10).unwrap();
        let ns: Vec<u64> = s.iter().map(|p| p.n).collect();
        assert_eq!(ns, vec![3, 5, 7, 11, 13, 17, 19, 23, 25, 29]);
        assert_eq!(s[8].primes, 8);
        assert!((s[8].ratio_ln - 8.0 / 9.0 * 25f64.ln()).abs() < 1e-12);
        assert!(an.first_records_series(100_000).is_err());
        assert!(an.prime_ratio_series(100, 0).is_err());
    }

    #[test]
    fn ledger_recurrence() {
        let an = PrimorialAnalysis::new(40_000).unwrap();
        let ledger = an.density_ledger(6, 40_000, 10).unwrap();
        for n in 1..=5 {
            assert_eq!(ledger.recurrence_holds(n, an.table()), Some(true));
        }
        assert_eq!(ledger.recurrence_holds(6, an.table()), None);
        assert!(ledger.normalized_non_increasing());
    }
}
