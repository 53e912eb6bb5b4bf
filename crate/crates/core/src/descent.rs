//! Basis elements `B_κ`, Solomon's product rule on margin matrices, and the
//! group-algebra cross-check.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::coefficient::Coefficient;
use crate::combinatorics::{composition_to_subset, compositions, contingency_tables, Composition};
use crate::cosets::enumerate_left_reps;
use crate::error::Result;
use crate::group_algebra::GroupAlgebraElement;
use crate::perm::check_degree;
use crate::Bounds;

/// Integer combination of basis elements `B_κ`, `κ` ranging over compositions of `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DescentElement<C> {
    n: usize,
    terms: BTreeMap<Composition, C>,
}

impl<C: Coefficient> DescentElement<C> {
    pub fn zero(n: usize) -> Self {
        DescentElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(kappa: Composition) -> Self {
        let n = kappa.size();
        let mut terms = BTreeMap::new();
        terms.insert(kappa, C::one());
        DescentElement { n, terms }
    }

    /// `B_(n)`, the unit of the algebra.
    pub fn identity(n: usize) -> Result<Self> {
        Ok(Self::basis(Composition::full(n)?))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, C)>,
    {
        let mut out = Self::zero(n);
        for (kappa, c) in terms {
            out.add_term(kappa, c)?;
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

    pub fn coefficient(&self, kappa: &Composition) -> C {
        self.terms.get(kappa).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographic order of the compositions.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, kappa: Composition, c: C) -> Result<()> {
        check_degree(self.n, kappa.size())?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&kappa) {
            Some(v) => {
                let sum = v.try_add(&c)?;
                if sum.is_zero() {
                    self.terms.remove(&kappa);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(kappa, c);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut out = self.clone();
        for (kappa, c) in &other.terms {
            out.add_term(kappa.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Result<Self> {
        let mut out = Self::zero(self.n);
        if k.is_zero() {
            return Ok(out);
        }
        for (kappa, c) in &self.terms {
            out.terms.insert(kappa.clone(), c.try_mul(k)?);
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        element_multiply(self, other)
    }
}

/// `B_κ B_ν = Σ_Z B_η(Z)` over all tables `Z` with row sums `ν` and column
/// sums `κ`, `η(Z)` being the reading word.
pub fn solomon_multiply<C: Coefficient>(
    kappa: &Composition,
    nu: &Composition,
) -> Result<DescentElement<C>> {
    check_degree(kappa.size(), nu.size())?;
    let mut counts: BTreeMap<Composition, C> = BTreeMap::new();
    for z in contingency_tables(nu, kappa)? {
        let eta = z.reading_word();
        match counts.get_mut(&eta) {
            Some(c) => *c = c.try_add(&C::one())?,
            None => {
                counts.insert(eta, C::one());
            }
        }
    }
    Ok(DescentElement {
        n: kappa.size(),
        terms: counts,
    })
}

/// Bilinear extension of [`solomon_multiply`].
pub fn element_multiply<C: Coefficient>(
    a: &DescentElement<C>,
    b: &DescentElement<C>,
) -> Result<DescentElement<C>> {
    check_degree(a.n, b.n)?;
    let mut out = DescentElement::zero(a.n);
    for (kappa, x) in &a.terms {
        for (nu, y) in &b.terms {
            let weight = x.try_mul(y)?;
            for (eta, c) in solomon_multiply::<C>(kappa, nu)?.terms {
                out.add_term(eta, c.try_mul(&weight)?)?;
            }
        }
    }
    Ok(out)
}

/// Expands each `B_κ` as the sum of the permutations in `X_κ`.
pub fn to_group_algebra<C: Coefficient>(
    a: &DescentElement<C>,
    bounds: &Bounds,
) -> Result<GroupAlgebraElement<C>> {
    bounds.check_oracle(a.n)?;
    let mut out = GroupAlgebraElement::zero(a.n);
    for (kappa, c) in &a.terms {
        for x in enumerate_left_reps(&composition_to_subset(kappa), bounds)? {
            out.add_term(x, c.clone())?;
        }
    }
    Ok(out)
}

/// `B_κ B_ν` computed by multiplying out both sums of permutations.
pub fn oracle_multiply<C: Coefficient>(
    kappa: &Composition,
    nu: &Composition,
    bounds: &Bounds,
) -> Result<GroupAlgebraElement<C>> {
    check_degree(kappa.size(), nu.size())?;
    let left = to_group_algebra(&DescentElement::<C>::basis(kappa.clone()), bounds)?;
    let right = to_group_algebra(&DescentElement::<C>::basis(nu.clone()), bounds)?;
    left.multiply(&right)
}

/// `Σ_Z n! / Π η(Z)_i!` over the tables of `B_κ B_ν`: the number of
/// permutations in the expanded product, counted with multiplicity. Equals
/// `|X_κ| · |X_ν|`. `None` on `u128` overflow.
pub fn expanded_term_count(kappa: &Composition, nu: &Composition) -> Result<Option<u128>> {
    check_degree(kappa.size(), nu.size())?;
    let mut total: u128 = 0;
    for z in contingency_tables(nu, kappa)? {
        let Some(sum) = z
            .reading_word()
            .multinomial()
            .and_then(|m| total.checked_add(m))
        else {
            return Ok(None);
        };
        total = sum;
    }
    Ok(Some(total))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureRow<C: Coefficient> {
    pub kappa: Composition,
    pub nu: Composition,
    pub product: DescentElement<C>,
}

/// Every product `B_κ B_ν` for compositions of `n`, keyed `(κ, ν)` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable<C: Coefficient> {
    pub n: usize,
    pub rows: Vec<StructureRow<C>>,
}

impl<C: Coefficient> StructureTable<C> {
    pub fn get(&self, kappa: &Composition, nu: &Composition) -> Option<&DescentElement<C>> {
        let basis = compositions(self.n);
        let i = basis.binary_search(kappa).ok()?;
        let j = basis.binary_search(nu).ok()?;
        self.rows.get(i * basis.len() + j).map(|row| &row.product)
    }
}

/// All `4^(n-1)` basis products, computed in parallel and merged in key order.
pub fn structure_constants<C: Coefficient>(n: usize, bounds: &Bounds) -> Result<StructureTable<C>> {
    bounds.check_basis(n)?;
    let basis = compositions(n);
    let pairs: Vec<(&Composition, &Composition)> = basis
        .iter()
        .flat_map(|kappa| basis.iter().map(move |nu| (kappa, nu)))
        .collect();
    let rows = pairs
        .into_par_iter()
        .map(|(kappa, nu)| {
            Ok(StructureRow {
                kappa: kappa.clone(),
                nu: nu.clone(),
                product: solomon_multiply(kappa, nu)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StructureTable { n, rows })
}

/// `B(1,1,1) + 2 B(1,2)`; the zero element prints as `0`.
impl<C: Coefficient> fmt::Display for DescentElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (kappa, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = if negative {
                c.checked_neg().map_or_else(|| c.to_string(), |m| m.to_string())
            } else {
                c.to_string()
            };
            match (i, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != "1" {
                write!(f, "{mag} ")?;
            }
            write!(f, "B({kappa})")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for DescentElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentElement(n={}: {self})", self.n)
    }
}
