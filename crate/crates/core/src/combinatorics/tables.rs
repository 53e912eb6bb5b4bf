//! Non-negative integer matrices with prescribed row and column sums.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::check_degree;

/// An `s × r` matrix of non-negative integers with row sums `ν` and column sums `κ`.
///
/// In the descent-algebra setting rows are indexed by the components of `𝒦`
/// and columns by the components of `𝒥`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
    row_margins: Composition,
    col_margins: Composition,
}

impl MarginMatrix {
    /// Builds a matrix from its rows, deriving the margins. Every row and
    /// column must have a positive sum.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let s = rows.len();
        let r = rows.first().map_or(0, Vec::len);
        if s == 0 || r == 0 || rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidMatrix("rows must be non-empty and of equal length".into()));
        }
        let row_sums: Vec<usize> = rows.iter().map(|row| row.iter().sum()).collect();
        let col_sums: Vec<usize> = (0..r).map(|q| rows.iter().map(|row| row[q]).sum()).collect();
        let bad = |_| Error::InvalidMatrix("every row and column needs a positive sum".into());
        Ok(MarginMatrix {
            rows: s,
            cols: r,
            entries: rows.into_iter().flatten().collect(),
            row_margins: Composition::new(row_sums).map_err(bad)?,
            col_margins: Composition::new(col_sums).map_err(bad)?,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, m: usize, q: usize) -> usize {
        self.entries[m * self.cols + q]
    }

    /// Row sums `ν`.
    pub fn row_margins(&self) -> &Composition {
        &self.row_margins
    }

    /// Column sums `κ`.
    pub fn col_margins(&self) -> &Composition {
        &self.col_margins
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.cols).map(<[usize]>::to_vec).collect()
    }

    /// Non-zero entries read row by row.
    pub fn reading_word(&self) -> Composition {
        Composition::new(self.entries.iter().copied().filter(|&z| z > 0).collect())
            .expect("margins are positive so some entry is non-zero")
    }
}

pub fn reading_word(z: &MarginMatrix) -> Composition {
    z.reading_word()
}

/// `[[1,0],[1,1]]`.
impl fmt::Display for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (m, row) in self.entries.chunks(self.cols).enumerate() {
            if m > 0 {
                f.write_str(",")?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarginMatrix{self}")
    }
}

impl Serialize for MarginMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

/// Streams every table with row sums `ν` and column sums `κ` exactly once.
///
/// Cells are filled in row-major order. Each cell ranges over the values that
/// still admit a completion, tried largest first, so the first table is the
/// north-west-corner table and the stream is in decreasing row-major
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct ContingencyTables {
    row_margins: Composition,
    col_margins: Composition,
    entries: Vec<usize>,
    row_rem: Vec<usize>,
    col_rem: Vec<usize>,
    started: bool,
    done: bool,
}

impl ContingencyTables {
    fn new(nu: &Composition, kappa: &Composition) -> Self {
        ContingencyTables {
            row_margins: nu.clone(),
            col_margins: kappa.clone(),
            entries: vec![0; nu.len() * kappa.len()],
            row_rem: nu.parts().to_vec(),
            col_rem: kappa.parts().to_vec(),
            started: false,
            done: false,
        }
    }

    fn cols(&self) -> usize {
        self.col_rem.len()
    }

    /// Feasible range for cell `k` given the cells before it.
    fn range(&self, k: usize) -> (usize, usize) {
        let (m, q) = (k / self.cols(), k % self.cols());
        let hi = self.row_rem[m].min(self.col_rem[q]);
        let right: usize = self.col_rem[q + 1..].iter().sum();
        let below: usize = self.row_rem[m + 1..].iter().sum();
        let lo = self.row_rem[m]
            .saturating_sub(right)
            .max(self.col_rem[q].saturating_sub(below));
        (lo, hi)
    }

    fn set(&mut self, k: usize, v: usize) {
        let (m, q) = (k / self.cols(), k % self.cols());
        self.entries[k] = v;
        self.row_rem[m] -= v;
        self.col_rem[q] -= v;
    }

    fn clear(&mut self, k: usize) {
        let (m, q) = (k / self.cols(), k % self.cols());
        self.row_rem[m] += self.entries[k];
        self.col_rem[q] += self.entries[k];
        self.entries[k] = 0;
    }

    fn fill_from(&mut self, start: usize) {
        for k in start..self.entries.len() {
            let (lo, hi) = self.range(k);
            debug_assert!(lo <= hi, "pruning left an infeasible cell");
            self.set(k, hi);
        }
    }

    fn snapshot(&self) -> MarginMatrix {
        MarginMatrix {
            rows: self.row_margins.len(),
            cols: self.col_margins.len(),
            entries: self.entries.clone(),
            row_margins: self.row_margins.clone(),
            col_margins: self.col_margins.clone(),
        }
    }
}

impl Iterator for ContingencyTables {
    type Item = MarginMatrix;

    fn next(&mut self) -> Option<MarginMatrix> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
            return Some(self.snapshot());
        }
        for k in (0..self.entries.len()).rev() {
            let old = self.entries[k];
            self.clear(k);
            let (lo, _) = self.range(k);
            if old > lo {
                self.set(k, old - 1);
                self.fill_from(k + 1);
                return Some(self.snapshot());
            }
        }
        self.done = true;
        None
    }
}

/// All tables with row sums `ν` and column sums `κ`; both must compose the same `n`.
pub fn contingency_tables(nu: &Composition, kappa: &Composition) -> Result<ContingencyTables> {
    check_degree(nu.size(), kappa.size())?;
    Ok(ContingencyTables::new(nu, kappa))
}
