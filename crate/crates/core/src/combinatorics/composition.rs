use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered list of positive parts summing to `n`; indexes the basis element `B_κ`.
///
/// Ordering is lexicographic on the parts, which is also the order in which
/// [`compositions`] yields them and in which tables are emitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition { parts })
    }

    /// Parses the comma-separated text form and checks the total against `n`.
    pub fn parse_for(text: &str, n: usize) -> Result<Self> {
        let c: Composition = text.parse()?;
        if c.size() != n {
            return Err(Error::InvalidComposition(format!(
                "{c} sums to {}, expected {n}",
                c.size()
            )));
        }
        Ok(c)
    }

    /// The one-part composition `(n)`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// `(1, 1, …, 1)`.
    pub fn singletons(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `n` this composes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Blocks of consecutive integers `[start, end]`, one-based and inclusive.
    pub fn intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().scan(0usize, |start, &p| {
            let block = (*start + 1, *start + p);
            *start += p;
            Some(block)
        })
    }

    /// `n! / Π κ_i!`, the number of minimal left coset representatives of `S_κ`.
    ///
    /// Returns `None` on overflow of `u128` (only for very large `n`).
    pub fn multinomial(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        let mut seen: u128 = 0;
        for &p in &self.parts {
            // Builds the product of binomials C(seen + k, k) incrementally; each
            // partial quotient is an integer.
            for k in 1..=p as u128 {
                seen += 1;
                acc = acc.checked_mul(seen)? / k;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All `2^(n-1)` compositions of `n`, lexicographic on parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn extend(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            extend(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::new(), &mut out);
    }
    out
}
