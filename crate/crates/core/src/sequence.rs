//! Generation of `f_a`: `f(1) = 1`, `f(2) = a`, and every later term is the
//! smallest value not used so far that is coprime to the previous term.
//!
//! All indices are 1-based to line up with the usual tables of the sequence.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default cap on the number of terms a single buffer may hold.
pub const DEFAULT_MAX_TERMS: u64 = 50_000_000;

/// Seed of a sequence. Only `a >= 2` is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    a: u64,
}

impl Params {
    pub fn new(a: u64) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidSeed(a));
        }
        Ok(Params { a })
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

/// A materialized prefix `f_a(1..=len)`.
///
/// Values above `frontier - 1` have never been assigned; unassigned values
/// below it live in `pool`. Between records the sequence walks almost in
/// order, so the pool stays small and extension is close to O(1).
#[derive(Debug, Clone)]
pub struct SequenceBuffer {
    a: u64,
    terms: Vec<u64>,
    /// `positions[v]` is the 1-based index of `v`, or 0 when unassigned.
    positions: Vec<u64>,
    pool: BTreeSet<u64>,
    frontier: u64,
    max_pool: usize,
}

impl SequenceBuffer {
    /// Buffer holding `[1, a]`.
    pub fn new(params: Params) -> Self {
        let a = params.a();
        let mut buf = SequenceBuffer {
            a,
            terms: vec![1, a],
            positions: vec![0; a as usize + 1],
            pool: (2..a).collect(),
            frontier: a + 1,
            max_pool: 0,
        };
        buf.positions[1] = 1;
        buf.positions[a as usize] = 2;
        buf.max_pool = buf.pool.len();
        buf
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn len(&self) -> u64 {
        self.terms.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `f(n)` for `1 <= n <= len`.
    pub fn get(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.terms.get(n as usize - 1).copied()
    }

    /// The prefix as a slice; `terms()[n - 1] == f(n)`.
    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn last(&self) -> u64 {
        *self.terms.last().expect("buffer always holds f(1) and f(2)")
    }

    /// One past the largest value assigned so far.
    pub fn frontier(&self) -> u64 {
        self.frontier
    }

    /// Unassigned values below the frontier, ascending.
    pub fn pool(&self) -> impl Iterator<Item = u64> + '_ {
        self.pool.iter().copied()
    }

    pub fn pool_len(&self) -> usize {
        self.pool.len()
    }

    /// Largest pool size observed after any extension.
    pub fn max_pool_len(&self) -> usize {
        self.max_pool
    }

    pub fn is_assigned(&self, v: u64) -> bool {
        self.positions.get(v as usize).is_some_and(|&p| p != 0)
    }

    /// Appends and returns the next term.
    pub fn extend(&mut self) -> u64 {
        let last = self.last();
        let from_pool = self.pool.iter().copied().find(|v| v.gcd(&last) == 1);
        let v = match from_pool {
            Some(v) => {
                self.pool.remove(&v);
                v
            }
            None => {
                let mut v = self.frontier;
                while v.gcd(&last) != 1 {
                    v += 1;
                }
                self.pool.extend(self.frontier..v);
                self.frontier = v + 1;
                self.positions.resize(self.frontier as usize, 0);
                v
            }
        };
        self.terms.push(v);
        self.positions[v as usize] = self.terms.len() as u64;
        self.max_pool = self.max_pool.max(self.pool.len());
        v
    }

    /// Extends until the prefix holds at least `n` terms.
    pub fn extend_to(&mut self, n: u64) {
        self.terms.reserve(n.saturating_sub(self.len()) as usize);
        while self.len() < n {
            self.extend();
        }
    }

    /// Index `n` with `f(n) = v`, if `v` occurs in the prefix.
    pub fn inverse(&self, v: u64) -> Option<u64> {
        match self.positions.get(v as usize) {
            Some(&p) if p != 0 => Some(p),
            _ => None,
        }
    }

    /// Forward difference `g(t) = f(t + 1) - f(t)`.
    pub fn discrete_derivative(&self, t: u64) -> Result<i64> {
        let len = self.len();
        match (self.get(t), self.get(t + 1)) {
            (Some(cur), Some(next)) => Ok(next as i64 - cur as i64),
            _ => Err(Error::OutOfRange { index: t + 1, len }),
        }
    }

    /// Whether every value in `1..=upto` occurs in the prefix.
    pub fn prefix_surjective_upto(&self, upto: u64) -> bool {
        if upto == 0 {
            return true;
        }
        if upto >= self.frontier {
            return false;
        }
        // Unassigned values below the frontier are exactly the pool.
        self.pool.first().is_none_or(|&min| min > upto)
    }
}

/// `f_a(1..=n)` with the default term cap.
pub fn generate_prefix(a: u64, n: u64) -> Result<SequenceBuffer> {
    generate_prefix_capped(a, n, DEFAULT_MAX_TERMS)
}

pub fn generate_prefix_capped(a: u64, n: u64, cap: u64) -> Result<SequenceBuffer> {
    let params = Params::new(a)?;
    if n > cap {
        return Err(Error::LimitExceeded { requested: n, cap });
    }
    let mut buf = SequenceBuffer::new(params);
    buf.extend_to(n);
    Ok(buf)
}
