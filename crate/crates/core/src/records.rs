//! Turning points, essential turning points (ETPs) and records.
//!
//! A turning point is an index `t > 3` where `f(t) - f(t-1) > 1`, or `t = 3`
//! when `f(3)` is not the least value outside `{1, a}`. The value at a
//! turning point is a record. An ETP additionally satisfies `t > a`,
//! `f(t) != t`, `f(t-1) = t-2` and `{f(1), .., f(t-1)} = {1, .., t-1}`.
//!
//! For `f_3` the ETPs chain through `t_{k+1} = f(t_k) + 1`, and between two
//! of them the sequence is forced, so the whole map is determined by its
//! records. Those obey `r_{k+1} = (r_k - 1) + p` with `p` the least prime not
//! dividing `r_k - 1`, which gives an enumeration that never simulates `f_3`.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::primes::{is_prime, smallest_prime_not_dividing};
use crate::sequence::SequenceBuffer;

/// First record of `f_3`, at turning point 4.
pub const FIRST_RECORD: u64 = 5;
pub const FIRST_TURNING_POINT: u64 = 4;

/// `f_3(2) = 3`. It is not a turning-point value, but it seeds the record
/// recurrence (`next_record(3) = 5`) and belongs to the counting set used
/// for densities.
pub const SEED_RECORD: u64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurningPoint {
    pub t: u64,
    pub is_etp: bool,
    pub record_value: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Record {
    pub value: u64,
    pub turning_point: u64,
    /// `value - f^{-1}(value)`, i.e. the distance back to the turning point.
    pub jump: u64,
    pub is_composite: bool,
}

impl Record {
    fn new(value: u64, turning_point: u64) -> Self {
        Record {
            value,
            turning_point,
            jump: value - turning_point,
            is_composite: !is_prime(value),
        }
    }
}

/// Every turning point of the prefix, each tagged with the ETP test.
pub fn find_turning_points(buf: &SequenceBuffer) -> Vec<TurningPoint> {
    let f = buf.terms();
    let a = buf.a();
    let mut out = Vec::new();
    if f.len() < 3 {
        return out;
    }
    let least_free = if a == 2 { 3 } else { 2 };
    // prefix_max[i] = max(f(1..=i+1))
    let mut prefix_max = f[0].max(f[1]);
    for i in 2..f.len() {
        let t = i as u64 + 1;
        let (prev, cur) = (f[i - 1], f[i]);
        let turning = if t == 3 {
            cur != least_free
        } else {
            cur > prev + 1
        };
        if turning {
            let is_etp = t > a && cur != t && prev + 2 == t && prefix_max == t - 1;
            out.push(TurningPoint {
                t,
                is_etp,
                record_value: cur,
            });
        }
        prefix_max = prefix_max.max(cur);
    }
    out
}

/// The ETP following `t`, given the record `f_t = f(t)` at `t`.
pub fn next_etp(_t: u64, f_t: u64) -> u64 {
    f_t + 1
}

/// The `f_3` record following `r`.
pub fn next_record(r: u64) -> u64 {
    debug_assert!(r >= SEED_RECORD);
    (r - 1) + smallest_prime_not_dividing(r - 1)
}

/// Endless stream of `f_3` records, starting at 5.
#[derive(Debug, Clone)]
pub struct RecordStream {
    value: u64,
    turning_point: u64,
    count: u64,
}

impl RecordStream {
    pub fn new() -> Self {
        RecordStream {
            value: FIRST_RECORD,
            turning_point: FIRST_TURNING_POINT,
            count: 0,
        }
    }

    /// Resumes after a known record `r` sitting at turning point `t`.
    pub fn resume_after(r: u64, _t: u64) -> Self {
        RecordStream {
            value: next_record(r),
            turning_point: r + 1,
            count: 0,
        }
    }

    /// Number of records emitted so far.
    pub fn emitted(&self) -> u64 {
        self.count
    }
}

impl Default for RecordStream {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RecordStream {
    type Item = Record;

    fn next(&mut self) -> Option<Record> {
        let rec = Record::new(self.value, self.turning_point);
        self.turning_point = next_etp(self.turning_point, self.value);
        self.value = next_record(self.value);
        self.count += 1;
        Some(rec)
    }
}

/// All `f_3` records `<= limit`.
pub fn record_stream_upto(limit: u64) -> Vec<Record> {
    RecordStream::new()
        .take_while(|r| r.value <= limit)
        .collect()
}

/// `f_3(n)` from the record list alone.
///
/// `records` must start at the first record and reach at least `n`.
pub fn reconstruct_f3(n: u64, records: &[Record]) -> Result<u64> {
    match n {
        0 => return Err(Error::OutOfRange { index: 0, len: 0 }),
        1 => return Ok(1),
        2 => return Ok(3),
        3 => return Ok(2),
        _ => {}
    }
    let covered = records.last().map_or(3, |r| r.value);
    if records.first().map(|r| r.turning_point) != Some(FIRST_TURNING_POINT) || n > covered {
        return Err(Error::InsufficientRecords { needed: n, covered });
    }
    let k = records.partition_point(|r| r.turning_point <= n) - 1;
    let rec = &records[k];
    if rec.turning_point == n {
        Ok(rec.value)
    } else {
        Ok(n - 1)
    }
}

/// Sorted record list with lookups.
#[derive(Debug, Clone, Default)]
pub struct RecordBook {
    records: Vec<Record>,
    limit: u64,
}

impl RecordBook {
    /// Records `<= limit`.
    pub fn upto(limit: u64) -> Self {
        RecordBook {
            records: record_stream_upto(limit),
            limit,
        }
    }

    /// Rebuilds a book from record values alone, e.g. a cache file.
    pub fn from_values(values: &[u64], limit: u64) -> Result<Self> {
        let mut records = Vec::with_capacity(values.len());
        let mut tp = FIRST_TURNING_POINT;
        for (i, &v) in values.iter().enumerate() {
            if v <= tp || v > limit {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("record {v} is inconsistent with turning point {tp}"),
                });
            }
            records.push(Record::new(v, tp));
            tp = v + 1;
        }
        Ok(RecordBook { records, limit })
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    /// Continues the stream until every record `<= limit` is present.
    pub fn extend_to(&mut self, limit: u64) {
        if limit <= self.limit {
            return;
        }
        let stream = match self.records.last() {
            Some(r) => RecordStream::resume_after(r.value, r.turning_point),
            None => RecordStream::new(),
        };
        // the book is complete up to self.limit, so the stream resumes above it
        self.records.extend(stream.take_while(|r| r.value <= limit));
        self.limit = limit;
    }

    /// The book is complete for all values `<= limit`.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.records.iter().map(|r| r.value)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.get(v).is_some()
    }

    pub fn get(&self, v: u64) -> Option<&Record> {
        self.records
            .binary_search_by_key(&v, |r| r.value)
            .ok()
            .map(|i| &self.records[i])
    }

    /// Records with value in `lo..=hi`.
    pub fn range(&self, lo: u64, hi: u64) -> &[Record] {
        let start = self.records.partition_point(|r| r.value < lo);
        let end = self.records.partition_point(|r| r.value <= hi);
        &self.records[start..end.max(start)]
    }

    pub fn reconstruct(&self, n: u64) -> Result<u64> {
        reconstruct_f3(n, &self.records)
    }

    /// Checks that the book covers every value `<= needed`.
    pub fn require(&self, needed: u64) -> Result<()> {
        if self.limit < needed {
            return Err(Error::InsufficientRecords {
                needed,
                covered: self.limit,
            });
        }
        Ok(())
    }
}

/// Composite records divisible by `p` and the gaps between consecutive ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeMultiples {
    pub prime: u64,
    pub values: Vec<u64>,
    pub gaps: Vec<u64>,
}

/// Records `<= limit` that are proper multiples of the prime `p >= 5`.
pub fn prime_multiple_records(p: u64, limit: u64) -> Result<PrimeMultiples> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime >= 5")));
    }
    let values: Vec<u64> = RecordStream::new()
        .take_while(|r| r.value <= limit)
        .map(|r| r.value)
        .filter(|&v| v != p && v % p == 0)
        .collect();
    let gaps = values.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(PrimeMultiples {
        prime: p,
        values,
        gaps,
    })
}

/// Pairs of records `(r, r + 2)` with `r + 2 <= limit`.
pub fn twin_records(limit: u64) -> Vec<(u64, u64)> {
    let recs = record_stream_upto(limit);
    recs.windows(2)
        .filter(|w| w[1].value == w[0].value + 2)
        .map(|w| (w[0].value, w[1].value))
        .collect()
}

pub const RECORD_CACHE_HEADER: &str = "# a=3 records";

/// Writes the plain-text record cache: a header line then one value per line.
pub fn write_record_cache<W: Write>(mut w: W, values: impl IntoIterator<Item = u64>) -> io::Result<()> {
    writeln!(w, "{RECORD_CACHE_HEADER}")?;
    for v in values {
        writeln!(w, "{v}")?;
    }
    Ok(())
}

pub fn read_record_cache<R: BufRead>(r: R) -> Result<Vec<u64>> {
    let mut values: Vec<u64> = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if i == 0 {
            if line != RECORD_CACHE_HEADER {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("expected header `{RECORD_CACHE_HEADER}`"),
                });
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let v: u64 = line.parse().map_err(|e| Error::Parse {
            line: i + 1,
            msg: format!("bad record value `{line}`: {e}"),
        })?;
        if values.last().is_some_and(|&prev| prev >= v) {
            return Err(Error::Parse {
                line: i + 1,
                msg: "records must be strictly increasing".into(),
            });
        }
        values.push(v);
    }
    Ok(values)
}

/// CSV `index,record,turning_point,jump,is_composite` with 1-based index.
pub fn write_records_csv<W: Write>(mut w: W, records: &[Record]) -> io::Result<()> {
    writeln!(w, "index,record,turning_point,jump,is_composite")?;
    for (i, r) in records.iter().enumerate() {
        writeln!(
            w,
            "{},{},{},{},{}",
            i + 1,
            r.value,
            r.turning_point,
            r.jump,
            r.is_composite
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::generate_prefix;

    #[test]
    fn f3_turning_points() {
        let b = generate_prefix(3, 24).unwrap();
        let tps: Vec<u64> = find_turning_points(&b).iter().map(|t| t.t).collect();
        assert_eq!(tps, vec![4, 6, 8, 12, 14, 18, 20, 24]);
        assert!(find_turning_points(&b).iter().all(|t| t.is_etp));
    }

    #[test]
    fn f4_turning_points() {
        let b = generate_prefix(4, 8).unwrap();
        let tps = find_turning_points(&b);
        assert_eq!(tps.iter().map(|t| t.t).collect::<Vec<_>>(), vec![3, 5]);
        // f_4(5) = 5 is a fixed point, so 5 is not essential
        assert!(tps.iter().all(|t| !t.is_etp));
    }

    #[test]
    fn identity_has_no_turning_points() {
        assert!(find_turning_points(&generate_prefix(2, 500).unwrap()).is_empty());
        assert!(find_turning_points(&generate_prefix(2, 2).unwrap()).is_empty());
    }

    #[test]
    fn f7_etps() {
        let b = generate_prefix(7, 12).unwrap();
        let etps: Vec<u64> = find_turning_points(&b)
            .iter()
            .filter(|t| t.is_etp)
            .map(|t| t.t)
            .collect();
        assert_eq!(etps, vec![8, 12]);
    }

    #[test]
    fn etp_and_record_steps() {
        assert_eq!(next_etp(4, 5), 6);
        assert_eq!(next_etp(8, 11), 12);
        assert_eq!(next_record(23), 25);
        assert_eq!(next_record(7), 11);
        assert_eq!(next_record(25), 29);
        assert_eq!(next_record(SEED_RECORD), FIRST_RECORD);
    }

    #[test]
    fn stream_prefix() {
        let v: Vec<u64> = record_stream_upto(31).iter().map(|r| r.value).collect();
        assert_eq!(v, vec![5, 7, 11, 13, 17, 19, 23, 25, 29, 31]);
        let composites: Vec<(u64, u64)> = record_stream_upto(100)
            .iter()
            .filter(|r| r.is_composite)
            .map(|r| (r.value, r.jump))
            .collect();
        assert_eq!(
            composites,
            vec![(25, 1), (49, 1), (55, 1), (77, 3), (85, 1), (91, 1)]
        );
        let mut s = RecordStream::new();
        s.by_ref().take(5).count();
        assert_eq!(s.emitted(), 5);
        assert!(record_stream_upto(4).is_empty());
    }

    #[test]
    fn resume_matches_full_stream() {
        let full: Vec<Record> = RecordStream::new().take(200).collect();
        let r = full[99];
        let tail: Vec<Record> = RecordStream::resume_after(r.value, r.turning_point)
            .take(100)
            .collect();
        assert_eq!(&full[100..], &tail[..]);
    }

    #[test]
    fn reconstruct_small() {
        let recs = record_stream_upto(110);
        assert_eq!(reconstruct_f3(8, &recs).unwrap(), 11);
        assert_eq!(reconstruct_f3(9, &recs).unwrap(), 8);
        assert_eq!(reconstruct_f3(54, &recs).unwrap(), 55);
        let b = generate_prefix(3, 100).unwrap();
        for n in 1..=100 {
            assert_eq!(reconstruct_f3(n, &recs).unwrap(), b.get(n).unwrap(), "n = {n}");
        }
        assert!(matches!(
            reconstruct_f3(110, &recs),
            Err(Error::InsufficientRecords { .. })
        ));
        assert!(reconstruct_f3(10, &[]).is_err());
        assert_eq!(reconstruct_f3(2, &[]).unwrap(), 3);
    }

    #[test]
    fn book_lookup() {
        let book = RecordBook::upto(211);
        assert!(book.contains(25));
        assert!(!book.contains(27));
        assert_eq!(book.get(77).unwrap().jump, 3);
        assert_eq!(book.range(7, 31).len(), 9);
        assert_eq!(book.range(32, 31).len(), 0);
        assert!(book.require(211).is_ok());
        assert!(book.require(212).is_err());
    }

    #[test]
    fn book_extension_matches_fresh_book() {
        let mut book = RecordBook::upto(100);
        book.extend_to(5_000);
        assert_eq!(book.records(), RecordBook::upto(5_000).records());
        let mut empty = RecordBook::upto(4);
        assert!(empty.is_empty());
        empty.extend_to(31);
        assert_eq!(empty.len(), 10);
    }

    #[test]
    fn multiples_of_primes() {
        let m5 = prime_multiple_records(5, 500).unwrap();
        assert_eq!(m5.values.first(), Some(&25));
        assert_eq!(m5.values.last(), Some(&475));
        assert!(m5.gaps.iter().all(|&g| g == 30));
        assert!(prime_multiple_records(4, 100).is_err());
        assert!(prime_multiple_records(3, 100).is_err());
    }

    #[test]
    fn twins() {
        let t = twin_records(31);
        for pair in [(5, 7), (11, 13), (17, 19), (29, 31)] {
            assert!(t.contains(&pair));
        }
        assert!(twin_records(60).contains(&(53, 55)));
        assert!(twin_records(6).is_empty());
        assert_eq!(twin_records(7), vec![(5, 7)]);
    }

    #[test]
    fn cache_round_trip() {
        let book = RecordBook::upto(5_000);
        let mut buf = Vec::new();
        write_record_cache(&mut buf, book.values()).unwrap();
        assert!(buf.starts_with(b"# a=3 records\n5\n7\n11\n"));
        let values = read_record_cache(&buf[..]).unwrap();
        let back = RecordBook::from_values(&values, 5_000).unwrap();
        assert_eq!(back.records(), book.records());
    }

    #[test]
    fn cache_rejects_garbage() {
        assert!(read_record_cache(&b"5\n7\n"[..]).is_err());
        let err = read_record_cache(&b"# a=3 records\n5\nx\n"[..]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(read_record_cache(&b"# a=3 records\n7\n5\n"[..]).is_err());
        assert!(RecordBook::from_values(&[5, 6], 100).is_err());
    }

    #[test]
    fn records_csv() {
        let mut out = Vec::new();
        write_records_csv(&mut out, &record_stream_upto(25)).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "index,record,turning_point,jump,is_composite");
        assert_eq!(lines[1], "1,5,4,1,false");
        assert_eq!(lines[4], "4,13,12,1,false");
        assert_eq!(lines.last().unwrap(), &"8,25,24,1,true");
    }
}
