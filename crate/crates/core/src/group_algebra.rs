//! Sparse integer group algebra `Z[S_n]`, the brute-force side of every
//! product check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coefficient::Coefficient;
use crate::error::Result;
use crate::perm::{check_degree, Permutation};

/// Finite integer combination of permutations of one degree, zero terms dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement<C> {
    n: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Coefficient> GroupAlgebraElement<C> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_permutation(x: Permutation) -> Self {
        let n = x.degree();
        let mut terms = BTreeMap::new();
        terms.insert(x, C::one());
        GroupAlgebraElement { n, terms }
    }

    /// Sum of the given permutations, each with coefficient one (repeats add up).
    pub fn sum_of<I>(n: usize, perms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Permutation>,
    {
        let mut out = Self::zero(n);
        for x in perms {
            out.add_term(x, C::one())?;
        }
        Ok(out)
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, C)>,
    {
        let mut out = Self::zero(n);
        for (x, c) in terms {
            out.add_term(x, c)?;
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: &Permutation) -> C {
        self.terms.get(x).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, x: Permutation, c: C) -> Result<()> {
        check_degree(self.n, x.degree())?;
        accumulate(&mut self.terms, x, c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            accumulate(&mut out.terms, x.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Result<Self> {
        let mut out = Self::zero(self.n);
        if k.is_zero() {
            return Ok(out);
        }
        for (x, c) in &self.terms {
            out.terms.insert(x.clone(), c.try_mul(k)?);
        }
        Ok(out)
    }

    /// Bilinear extension of [`Permutation::compose`].
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut acc: HashMap<Permutation, C> = HashMap::new();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let c = a.try_mul(b)?;
                let z = x.compose_unchecked(y);
                match acc.get_mut(&z) {
                    Some(v) => *v = v.try_add(&c)?,
                    None => {
                        acc.insert(z, c);
                    }
                }
            }
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }
}

fn accumulate<C: Coefficient>(
    terms: &mut BTreeMap<Permutation, C>,
    x: Permutation,
    c: C,
) -> Result<()> {
    if c.is_zero() {
        return Ok(());
    }
    match terms.get_mut(&x) {
        Some(v) => {
            let sum = v.try_add(&c)?;
            if sum.is_zero() {
                terms.remove(&x);
            } else {
                *v = sum;
            }
        }
        None => {
            terms.insert(x, c);
        }
    }
    Ok(())
}

/// Product in the group algebra; errors on degree mismatch or overflow.
pub fn algebra_multiply<C: Coefficient>(
    a: &GroupAlgebraElement<C>,
    b: &GroupAlgebraElement<C>,
) -> Result<GroupAlgebraElement<C>> {
    a.multiply(b)
}

impl<C: Coefficient> fmt::Display for GroupAlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.checked_neg().map_or_else(|| c.to_string(), |m| m.to_string()))
            } else {
                ("+", c.to_string())
            };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != "1" {
                write!(f, "{mag} ")?;
            }
            write!(f, "[{x}]")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for GroupAlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement(S_{}: {self})", self.n)
    }
}
