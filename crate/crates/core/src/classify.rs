//! Sorting `f_a` into the identity class and the class of `f_3`.
//!
//! Two maps are equivalent when they agree from some index on. Simulation
//! settles membership with one of two certificates:
//!
//! * identity: an index `m >= 2` with `{f(1..=m)} = {1..=m}` and `f(m) = m`;
//!   from there `m + 1` is always the least free value and coprime to `m`.
//! * `f_3`: an index `n` where both `f_a` and `f_3` have used exactly
//!   `{1..=n}` and `f_a(n) = f_3(n)`. The generator state then coincides and
//!   so does every later term. This is the situation at a shared ETP `n + 1`.
//!
//! The set `A` of seeds with an eventually-identity map also has two
//! arithmetic descriptions, via adjacent records and via primorial
//! representations, implemented here as independent membership tests.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::primorial::PrimorialTable;
use crate::records::RecordBook;
use crate::sequence::{Params, SequenceBuffer};

/// Terms compared after a merge certificate, as a consistency check.
pub const MERGE_WINDOW: u64 = 64;

/// Budget doubling in [`classify_auto`] stops here.
pub const HARD_BUDGET_CAP: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Identity,
    C3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassLabel {
    /// `f(n) = n` for all `n >= m_a`; `certificate` is the index where the
    /// prefix first closed with a fixed point.
    Identity { m_a: u64, certificate: u64 },
    /// `f_a(n) = f_3(n)` for all `n >= merge_index`.
    C3 { merge_index: u64 },
}

impl ClassLabel {
    pub fn verdict(&self) -> Verdict {
        match self {
            ClassLabel::Identity { .. } => Verdict::Identity,
            ClassLabel::C3 { .. } => Verdict::C3,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.verdict() == Verdict::Identity
    }

    /// `M_a` or the merge index.
    pub fn witness(&self) -> u64 {
        match *self {
            ClassLabel::Identity { m_a, .. } => m_a,
            ClassLabel::C3 { merge_index } => merge_index,
        }
    }
}

/// Classifier holding a simulated `f_3` reference prefix.
#[derive(Debug, Clone)]
pub struct Classifier {
    reference: SequenceBuffer,
    /// `complete[n]`: `f_3(1..=n)` is exactly `{1..=n}`.
    complete: Vec<bool>,
}

impl Classifier {
    /// Reference long enough for budgets up to `max_budget`.
    pub fn new(max_budget: u64) -> Self {
        let len = max_budget + MERGE_WINDOW;
        let mut reference = SequenceBuffer::new(Params::new(3).expect("3 is a valid seed"));
        reference.extend_to(len);
        let mut complete = vec![false; len as usize + 1];
        let mut max = 0;
        for (i, &v) in reference.terms().iter().enumerate() {
            max = max.max(v);
            complete[i + 1] = max == i as u64 + 1;
        }
        Classifier {
            reference,
            complete,
        }
    }

    pub fn max_budget(&self) -> u64 {
        self.reference.len() - MERGE_WINDOW
    }

    /// Simulates at most `budget` terms of `f_a` looking for a certificate.
    pub fn classify(&self, a: u64, budget: u64) -> Result<ClassLabel> {
        let params = Params::new(a)?;
        if budget > self.max_budget() {
            return Err(Error::LimitExceeded {
                requested: budget,
                cap: self.max_budget(),
            });
        }
        let mut buf = SequenceBuffer::new(params);
        let mut prefix_max = a;
        for n in 2..=budget {
            let v = if n == 2 { a } else { buf.extend() };
            prefix_max = prefix_max.max(v);
            if prefix_max != n {
                continue;
            }
            if v == n {
                let mut m_a = n;
                while m_a > 1 && buf.get(m_a - 1) == Some(m_a - 1) {
                    m_a -= 1;
                }
                return Ok(ClassLabel::Identity {
                    m_a,
                    certificate: n,
                });
            }
            if n >= 3 && self.complete[n as usize] && self.reference.get(n) == Some(v) {
                buf.extend_to(n + MERGE_WINDOW);
                let tail = n as usize..(n + MERGE_WINDOW) as usize;
                assert_eq!(
                    buf.terms()[tail.clone()],
                    self.reference.terms()[tail],
                    "f_{a} diverged from f_3 after a shared state at {n}"
                );
                return Ok(ClassLabel::C3 { merge_index: n + 1 });
            }
        }
        Err(Error::Undecided { a, budget })
    }
}

/// One-off classification with a fresh reference prefix.
pub fn classify(a: u64, budget: u64) -> Result<ClassLabel> {
    Classifier::new(budget).classify(a, budget)
}

/// Starting budget `max(10 a, 10^4)`.
pub fn default_budget(a: u64) -> u64 {
    (10 * a).max(10_000)
}

/// Classifies with the default budget, doubling it on `Undecided` up to
/// [`HARD_BUDGET_CAP`].
pub fn classify_auto(a: u64) -> Result<ClassLabel> {
    let mut budget = default_budget(a).min(HARD_BUDGET_CAP);
    loop {
        match classify(a, budget) {
            Err(Error::Undecided { .. }) if budget < HARD_BUDGET_CAP => {
                budget = (budget * 2).min(HARD_BUDGET_CAP);
            }
            other => return other,
        }
    }
}

/// `a in A` iff `a in {2, 4}`, or `6 | a` and `a - 1` or `a + 1` is a record.
pub fn in_a_theorem4(book: &RecordBook, a: u64) -> Result<bool> {
    if a == 2 || a == 4 {
        return Ok(true);
    }
    if !a.is_multiple_of(6) {
        return Ok(false);
    }
    book.require(a + 1)?;
    Ok(book.contains(a - 1) || book.contains(a + 1))
}

/// `a in A` iff `a in {2, 4}`, or `6 | a` and `a` has no representation
/// `m p_n# + 6t` with `n >= 4`, `m >= 1`, `1 <= t <= floor((p_{n+1} - 2) / 6)`.
pub fn in_a_theorem10(table: &PrimorialTable, a: u64) -> bool {
    if a == 2 || a == 4 {
        return true;
    }
    if !a.is_multiple_of(6) {
        return false;
    }
    !forbidden_representation(table, a)
}

/// Whether `a = m p_n# + 6t` within the constraints above.
pub fn forbidden_representation(table: &PrimorialTable, a: u64) -> bool {
    for n in 4..table.len() {
        let Some(p) = table.primorial_u64(n) else {
            break;
        };
        if p > a {
            break;
        }
        let t_max = (table.prime(n + 1) - 2) / 6;
        // a - 6t must be a positive multiple of p_n#
        let r = a % p;
        if r.is_multiple_of(6) && (1..=t_max).contains(&(r / 6)) && a - r >= p {
            return true;
        }
    }
    false
}

/// Partial density of the "not nice" numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct NotNiceDensity {
    pub terms: usize,
    pub exact: BigRational,
    pub value: f64,
}

/// `sum_{k=4}^K (floor((p_{k+1}-2)/6) - floor((p_k-2)/6)) / p_k#`
pub fn not_nice_density(terms: usize) -> NotNiceDensity {
    let mut exact = BigRational::zero();
    if terms >= 4 {
        let table = PrimorialTable::new(terms + 1);
        for k in 4..=terms {
            let step = (table.prime(k + 1) - 2) / 6 - (table.prime(k) - 2) / 6;
            exact += BigRational::new(BigInt::from(step), BigInt::from(table.primorial(k).clone()));
        }
    }
    let value = exact.to_f64().expect("finite");
    NotNiceDensity {
        terms,
        exact,
        value,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub a: u64,
    /// `None` when the simulation ran out of budget.
    pub label: Option<ClassLabel>,
    pub thm4: bool,
    pub thm10: bool,
}

impl ScanRow {
    pub fn agree(&self) -> bool {
        match self.label {
            Some(l) => l.is_identity() == self.thm4 && self.thm4 == self.thm10,
            None => false,
        }
    }
}

/// Seeds checked by [`scan_a`]: 2, 4 and the multiples of 6 up to `bound`.
pub fn scan_candidates(bound: u64) -> Vec<u64> {
    [2, 4]
        .into_iter()
        .chain((6..).step_by(6))
        .take_while(|&a| a <= bound)
        .collect()
}

/// Classifies every candidate seed and evaluates both membership tests.
pub fn scan_a(bound: u64) -> Result<Vec<ScanRow>> {
    let candidates = scan_candidates(bound);
    let max_budget = candidates.iter().map(|&a| default_budget(a)).max().unwrap_or(0);
    let classifier = Classifier::new(max_budget);
    // records past the largest merge point a seed could need
    let book = RecordBook::upto(max_budget + MERGE_WINDOW);
    let table = PrimorialTable::new(24);
    candidates
        .par_iter()
        .map(|&a| {
            let label = match classifier.classify(a, default_budget(a)) {
                Ok(l) => Some(l),
                Err(Error::Undecided { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(ScanRow {
                a,
                label,
                thm4: in_a_theorem4(&book, a)?,
                thm10: in_a_theorem10(&table, a),
            })
        })
        .collect()
}

/// CSV `a,simulation_verdict,M_a_or_merge,thm4,thm10,agree`.
pub fn write_scan_csv<W: Write>(mut w: W, rows: &[ScanRow]) -> io::Result<()> {
    writeln!(w, "a,simulation_verdict,M_a_or_merge,thm4,thm10,agree")?;
    for r in rows {
        let (verdict, witness) = match r.label {
            Some(l) => (format!("{:?}", l.verdict()), l.witness().to_string()),
            None => ("Undecided".to_string(), String::new()),
        };
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.a,
            verdict,
            witness,
            r.thm4,
            r.thm10,
            r.agree()
        )?;
    }
    Ok(())
}
