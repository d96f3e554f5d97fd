//! Negative continued fractions, Riemenschneider diagrams, and duality.
//!
//! The expansion `[a1,...,an]^- = a1 - 1/(a2 - 1/(... - 1/an))` is evaluated
//! right to left. Canonical sequences ([`CFSeq`]) have every entry >= 2 and
//! value > 1; a separate unchecked evaluation path accepts arbitrary integer
//! sequences.
//!
//! Diagram orientation is fixed once: columns belong to the first sequence,
//! rows to the second. The dual of a sequence is read off the rows of its
//! diagram, so both sequences index away from the shared corner (1,-1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CfracError {
    #[error("sequence must be nonempty")]
    Empty,
    #[error("entry {entry} at position {index} is below 2")]
    EntryBelowTwo { index: usize, entry: BigInt },
    #[error("division by zero while evaluating the suffix starting at position {suffix_start}")]
    DivisionByZero { suffix_start: usize },
    #[error("expansion requires a rational > 1, got {0}")]
    NotGreaterThanOne(Rational),
}

/// A negative-continued-fraction expansion with every entry >= 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CFSeq(Vec<BigInt>);

impl CFSeq {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, CfracError> {
        if entries.is_empty() {
            return Err(CfracError::Empty);
        }
        let two = BigInt::from(2);
        for (index, entry) in entries.iter().enumerate() {
            if entry < &two {
                return Err(CfracError::EntryBelowTwo {
                    index,
                    entry: entry.clone(),
                });
            }
        }
        Ok(CFSeq(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self, CfracError> {
        CFSeq::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn reversed(&self) -> CFSeq {
        CFSeq(self.0.iter().rev().cloned().collect())
    }

    /// Entries negated, as plumbing weights.
    pub fn weights(&self) -> Vec<BigInt> {
        self.0.iter().map(|a| -a).collect()
    }
}

impl std::fmt::Display for CFSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exact value of `[a1,...,an]^-` for an arbitrary integer sequence.
///
/// Fails if some suffix evaluates to zero (so the next step would divide by
/// zero); the error reports where the offending suffix starts.
pub fn eval_ncf_general(entries: &[BigInt]) -> Result<Rational, CfracError> {
    if entries.is_empty() {
        return Err(CfracError::Empty);
    }
    let mut value = Rational::from_int(entries[entries.len() - 1].clone());
    for (i, a) in entries.iter().enumerate().rev().skip(1) {
        if value.is_zero() {
            return Err(CfracError::DivisionByZero { suffix_start: i + 1 });
        }
        value = Rational::from_int(a.clone()) - value.recip().expect("nonzero");
    }
    Ok(value)
}

/// Exact value of a canonical sequence. Always > 1, never divides by zero.
pub fn eval_ncf(seq: &CFSeq) -> Rational {
    eval_ncf_general(seq.entries()).expect("canonical sequences have nonzero suffixes")
}

/// The unique all->=2 expansion of a rational > 1, by ceiling-and-reciprocate.
pub fn expand_ncf(r: &Rational) -> Result<CFSeq, CfracError> {
    if !(r > &Rational::one()) {
        return Err(CfracError::NotGreaterThanOne(r.clone()));
    }
    let mut entries = Vec::new();
    let mut x = r.clone();
    loop {
        let a = x.ceil_int();
        entries.push(a.clone());
        let rem = Rational::from_int(a) - x;
        if rem.is_zero() {
            break;
        }
        x = rem.recip().expect("nonzero remainder");
    }
    Ok(CFSeq(entries))
}

/// A Riemenschneider staircase: lattice points walking right or down from
/// (1,-1). Column counts encode the first sequence, row counts the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RDiagram {
    points: Vec<(i64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramStep {
    Right,
    Down,
}

impl RDiagram {
    pub fn new(points: Vec<(i64, i64)>) -> Result<Self, CfracError> {
        if points.is_empty() {
            return Err(CfracError::Empty);
        }
        assert_eq!(points[0], (1, -1), "diagram must start at (1,-1)");
        for w in points.windows(2) {
            let (a, b) = (w[0], w[1]);
            let right = b == (a.0 + 1, a.1);
            let down = b == (a.0, a.1 - 1);
            assert!(right || down, "each point must extend right or down");
        }
        Ok(RDiagram { points })
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    /// The right/down step sequence from the first point to the last.
    pub fn steps(&self) -> Vec<DiagramStep> {
        self.points
            .windows(2)
            .map(|w| {
                if w[1].0 > w[0].0 {
                    DiagramStep::Right
                } else {
                    DiagramStep::Down
                }
            })
            .collect()
    }

    /// Sequence read off the columns: `a_i` = 1 + points in column i.
    pub fn column_sequence(&self) -> CFSeq {
        self.counts(|&(x, _)| x)
    }

    /// Sequence read off the rows: `b_j` = 1 + points in row -j.
    pub fn row_sequence(&self) -> CFSeq {
        self.counts(|&(_, y)| -y)
    }

    fn counts(&self, key: impl Fn(&(i64, i64)) -> i64) -> CFSeq {
        let max = self.points.iter().map(&key).max().expect("nonempty");
        let mut counts = vec![BigInt::one(); max as usize];
        for p in &self.points {
            counts[(key(p) - 1) as usize] += 1;
        }
        CFSeq(counts)
    }
}

/// Staircase whose column counts are `(a1 - 1, a2 - 1, ...)`.
pub fn build_diagram(seq: &CFSeq) -> RDiagram {
    let mut points = Vec::new();
    let (mut col, mut row) = (1i64, -1i64);
    for (i, a) in seq.entries().iter().enumerate() {
        if i > 0 {
            col += 1; // right step opens the next column
        }
        points.push((col, row));
        let mut remaining = a - 2u32; // down steps inside the column
        while remaining.is_positive() {
            row -= 1;
            points.push((col, row));
            remaining -= 1u32;
        }
    }
    RDiagram { points }
}

/// The Riemenschneider dual, read off the rows of the staircase of `seq`.
pub fn riemenschneider_dual(seq: &CFSeq) -> CFSeq {
    build_diagram(seq).row_sequence()
}

/// True iff `1/[s]^- + 1/[t]^- = 1` exactly.
pub fn is_complementary(s: &CFSeq, t: &CFSeq) -> bool {
    let vs = eval_ncf(s);
    let vt = eval_ncf(t);
    let sum = vs.recip().expect("value > 1") + vt.recip().expect("value > 1");
    sum == Rational::one()
}
