//! Cycle structure of `f_a`.
//!
//! Every `f_a` is a product of finite cycles. A cycle `(c1, c2, .., cm)` maps
//! `c1 -> c2 -> .. -> cm -> c1`; each is stored rotated to start at its
//! largest element, and cycles are ordered by their smallest element.

use std::fmt;

use crate::error::{Error, Result};
use crate::primes::twin_primes;
use crate::sequence::{Params, SequenceBuffer, DEFAULT_MAX_TERMS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    elements: Vec<u64>,
}

impl Cycle {
    /// Builds a cycle from an orbit listed in mapping order.
    pub fn from_orbit(mut orbit: Vec<u64>) -> Self {
        if let Some(pos) = orbit
            .iter()
            .enumerate()
            .max_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
        {
            orbit.rotate_left(pos);
        }
        Cycle { elements: orbit }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Fixed points are length-one cycles.
    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn min(&self) -> u64 {
        self.elements.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.elements.first().copied().unwrap_or(0)
    }

    /// Image of `v` under the cycle, if `v` belongs to it.
    pub fn apply(&self, v: u64) -> Option<u64> {
        let i = self.elements.iter().position(|&x| x == v)?;
        Some(self.elements[(i + 1) % self.elements.len()])
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Nontrivial cycles written one after another, fixed points suppressed.
pub fn format_cycles(cycles: &[Cycle]) -> String {
    cycles
        .iter()
        .filter(|c| !c.is_trivial())
        .map(|c| c.to_string())
        .collect()
}

/// All cycles (fixed points included) whose smallest element is `<= upto`.
pub fn decompose(a: u64, upto: u64) -> Result<Vec<Cycle>> {
    let mut buf = SequenceBuffer::new(Params::new(a)?);
    decompose_buffer(&mut buf, upto, DEFAULT_MAX_TERMS)
}

/// Like [`decompose`], reusing and extending `buf` as needed, never past
/// `cap` terms.
pub fn decompose_buffer(buf: &mut SequenceBuffer, upto: u64, cap: u64) -> Result<Vec<Cycle>> {
    if upto > cap {
        return Err(Error::LimitExceeded {
            requested: upto,
            cap,
        });
    }
    buf.extend_to(upto);
    let mut visited = vec![false; upto as usize + 1];
    let mut cycles = Vec::new();
    for start in 1..=upto {
        if visited[start as usize] {
            continue;
        }
        let mut orbit = vec![start];
        let mut cur = start;
        loop {
            if cur > buf.len() {
                if cur > cap {
                    return Err(Error::IncompleteCycle { start, cap });
                }
                buf.extend_to(cur);
            }
            cur = buf.get(cur).expect("extended above");
            if cur == start {
                break;
            }
            orbit.push(cur);
        }
        for &v in &orbit {
            if v <= upto {
                visited[v as usize] = true;
            }
        }
        cycles.push(Cycle::from_orbit(orbit));
    }
    // Visiting starts in ascending order already sorts by minimum element.
    Ok(cycles)
}

/// `C(v)`: 1-based position of the nontrivial cycle containing `v`.
#[derive(Debug, Clone, Default)]
pub struct CycleIndexMap {
    /// Dense by value; 0 marks values outside any indexed cycle.
    index: Vec<u32>,
    cycles: usize,
}

impl CycleIndexMap {
    pub fn new(cycles: &[Cycle]) -> Self {
        let top = cycles.iter().map(Cycle::max).max().unwrap_or(0);
        let mut index = vec![0u32; top as usize + 1];
        let mut count = 0usize;
        for c in cycles.iter().filter(|c| !c.is_trivial()) {
            count += 1;
            for &v in c.elements() {
                index[v as usize] = count as u32;
            }
        }
        CycleIndexMap {
            index,
            cycles: count,
        }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles
    }

    pub fn get(&self, v: u64) -> Option<u64> {
        match self.index.get(v as usize) {
            Some(&i) if i != 0 => Some(i as u64),
            _ => None,
        }
    }
}

pub fn cycle_index(map: &CycleIndexMap, r: u64) -> Result<u64> {
    map.get(r).ok_or(Error::UnknownValue(r))
}

/// One row of the twin-prime cycle-gap series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinGap {
    pub j: u64,
    pub lesser: u64,
    pub greater: u64,
    /// `C(m_{j+1}) - C(M_j)`
    pub gap_a: i64,
    /// `C(M_{j+1}) - C(m_j)`
    pub gap_b: i64,
}

/// Cycle-index gaps between consecutive twin prime pairs `(m_j, M_j)` of
/// `f_3` with `5 <= m_j` and `M_j <= limit`.
pub fn twin_cycle_gaps(limit: u64) -> Result<Vec<TwinGap>> {
    let pairs = twin_primes(5, limit);
    if pairs.len() < 2 {
        return Ok(Vec::new());
    }
    let cycles = decompose(3, limit)?;
    let map = CycleIndexMap::new(&cycles);
    let c = |v: u64| cycle_index(&map, v).map(|i| i as i64);
    pairs
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let ((m, big_m), (m_next, big_m_next)) = (w[0], w[1]);
            Ok(TwinGap {
                j: i as u64 + 1,
                lesser: m,
                greater: big_m,
                gap_a: c(m_next)? - c(big_m)?,
                gap_b: c(big_m_next)? - c(m)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_display() {
        let cycles = decompose(3, 25).unwrap();
        assert_eq!(
            format_cycles(&cycles),
            "(3,2)(5,4)(7,6)(11,10,9,8)(13,12)(17,16,15,14)(19,18)(23,22,21,20)(25,24)"
        );
        assert_eq!(cycles[0], Cycle::from_orbit(vec![1]));
        assert!(cycles[0].is_trivial());
    }

    #[test]
    fn multiples_of_six_close_early() {
        // one-line notation f(2..=6) = 6,5,2,3,4 splits into two cycles
        assert_eq!(format_cycles(&decompose(6, 20).unwrap()), "(6,4,2)(5,3)");
        assert_eq!(
            format_cycles(&decompose(12, 40).unwrap()),
            "(12,10,8,6,4,2)(5,3)(11,9)"
        );
    }

    #[test]
    fn index_values() {
        let map = CycleIndexMap::new(&decompose(3, 25).unwrap());
        assert_eq!(cycle_index(&map, 23).unwrap(), 8);
        assert_eq!(cycle_index(&map, 25).unwrap(), 9);
        assert_eq!(cycle_index(&map, 5).unwrap(), 2);
        assert_eq!(cycle_index(&map, 2).unwrap(), 1);
        assert!(matches!(cycle_index(&map, 1), Err(Error::UnknownValue(1))));
        assert!(cycle_index(&map, 10_000).is_err());
        assert_eq!(map.cycle_count(), 9);
    }

    #[test]
    fn cycle_reaching_past_prefix_is_followed() {
        // 24 maps to 25 which lies beyond upto = 24
        let cycles = decompose(3, 24).unwrap();
        assert_eq!(cycles.last().unwrap().elements(), &[25, 24]);
    }

    #[test]
    fn cap_stops_runaway_walks() {
        let mut buf = SequenceBuffer::new(Params::new(3).unwrap());
        assert!(matches!(
            decompose_buffer(&mut buf, 20, 10),
            Err(Error::LimitExceeded { .. })
        ));
        let mut buf = SequenceBuffer::new(Params::new(3).unwrap());
        assert!(matches!(
            decompose_buffer(&mut buf, 24, 24),
            Err(Error::IncompleteCycle { start: 24, cap: 24 })
        ));
    }

    #[test]
    fn twin_gaps() {
        let gaps = twin_cycle_gaps(100).unwrap();
        assert_eq!((gaps[0].lesser, gaps[0].greater), (5, 7));
        assert_eq!(gaps[0].gap_a, 1);
        assert_eq!(gaps[0].gap_b, 5 - 2);
        assert_eq!((gaps[1].lesser, gaps[1].gap_a), (11, 1));
        assert!(twin_cycle_gaps(12).unwrap().is_empty());
    }

    #[test]
    fn apply_follows_orbit() {
        let c = Cycle::from_orbit(vec![8, 11, 10, 9]);
        assert_eq!(c.elements(), &[11, 10, 9, 8]);
        assert_eq!(c.apply(8), Some(11));
        assert_eq!(c.apply(11), Some(10));
        assert_eq!(c.apply(7), None);
    }
}
