//! Permutations of `{1..n}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Bounds;

/// An element of the symmetric group `S_n`.
///
/// Stored zero-based; the public accessors speak one-based, matching the
/// usual one-line notation `x(1) x(2) … x(n)`. The derived ordering is
/// lexicographic on that notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from one-based images `[x(1), …, x(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
            zero_based.push((v - 1) as u32);
        }
        Ok(Permutation { images: zero_based })
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!(
                "s_{i} is not a generator of S_{n}"
            )));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::is_bijection(&images));
        Permutation { images }
    }

    fn is_bijection(images: &[u32]) -> bool {
        let mut seen = vec![false; images.len()];
        images.iter().all(|&v| {
            let v = v as usize;
            v < seen.len() && !std::mem::replace(&mut seen[v], true)
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `x(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-based images `[x(1), …, x(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`: the right factor acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Coxeter length: the number of inversions `h < l` with `x(l) < x(h)`.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for h in 0..n {
            for l in h + 1..n {
                if self.images[l] < self.images[h] {
                    count += 1;
                }
            }
        }
        count
    }

    fn advance_lex(&mut self) -> bool {
        next_lex(&mut self.images)
    }
}

/// Rearranges `v` into the lexicographically next arrangement of its multiset
/// of values; returns `false` (leaving `v` untouched) at the last one.
pub(crate) fn next_lex<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn check_degree(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { left, right })
    }
}

/// Digits for `n ≤ 9` (`312`), comma-separated otherwise (`10,3,1,2,…`).
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for &v in &self.images {
                write!(f, "{}", v + 1)?;
            }
        } else {
            for (i, &v) in self.images.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_images(&images)
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if following.advance_lex() {
            self.next = Some(following);
        }
        Some(current)
    }
}

/// Enumerates `S_n`, refusing degrees above the oracle bound.
pub fn enumerate_group(n: usize, bounds: &Bounds) -> Result<LexPermutations> {
    bounds.check_oracle(n)?;
    Ok(LexPermutations {
        next: Some(Permutation::identity(n)),
    })
}

pub(crate) fn all_permutations(n: usize) -> LexPermutations {
    LexPermutations {
        next: Some(Permutation::identity(n)),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashMap, VecDeque};

    use proptest::prelude::*;

    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        assert_eq!(p("132").compose(&p("213")).unwrap(), p("312"));
        let x = p("4213");
        assert_eq!(x.compose(&Permutation::identity(4)).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert_eq!(
            p("12").compose(&p("123")),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("312").inverse(), p("231"));
        assert!(Permutation::identity(5).inverse().is_identity());
        for i in 1..6 {
            let s = Permutation::transposition(6, i).unwrap();
            assert_eq!(s.inverse(), s);
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(7).length(), 0);
        for n in 1..9 {
            let rev: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(Permutation::from_images(&rev).unwrap().length(), n * (n - 1) / 2);
        }
        assert_eq!(p("312").length(), 2);
    }

    /// Breadth-first search over the Cayley graph with adjacent transpositions.
    fn reduced_word_lengths(n: usize) -> HashMap<Permutation, usize> {
        let gens: Vec<_> = (1..n).map(|i| Permutation::transposition(n, i).unwrap()).collect();
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(Permutation::identity(n), 0);
        queue.push_back(Permutation::identity(n));
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for s in &gens {
                let y = x.compose(s).unwrap();
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    #[test]
    fn length_matches_reduced_word_length() {
        for n in 1..=5 {
            let dist = reduced_word_lengths(n);
            assert_eq!(dist.len(), (1..=n).product::<usize>());
            for (x, d) in dist {
                assert_eq!(x.length(), d, "{x}");
            }
        }
    }

    #[test]
    fn length_changes_by_one_under_generators() {
        for n in 2..=6 {
            for x in all_permutations(n) {
                for i in 1..n {
                    let s = Permutation::transposition(n, i).unwrap();
                    let l = x.compose(&s).unwrap().length();
                    assert_eq!(l.abs_diff(x.length()), 1);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let b = Bounds::DEFAULT;
        assert_eq!(enumerate_group(1, &b).unwrap().collect::<Vec<_>>(), vec![p("1")]);
        let s3: Vec<_> = enumerate_group(3, &b).unwrap().map(|x| x.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        let s6: Vec<_> = enumerate_group(6, &b).unwrap().collect();
        assert_eq!(s6.len(), 720);
        assert!(s6.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_respects_bounds() {
        assert!(matches!(
            enumerate_group(8, &Bounds::DEFAULT),
            Err(Error::OutOfRange { n: 8, .. })
        ));
        assert!(enumerate_group(0, &Bounds::DEFAULT).is_err());
        assert!(enumerate_group(8, &Bounds::DEFAULT.with_max_n(8)).is_ok());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("312").to_string(), "312");
        let big = Permutation::from_images(&[10, 3, 1, 2, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(big.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("112".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..=8).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn group_axioms((x, y, z) in arb_triple()) {
            let n = x.degree();
            let e = Permutation::identity(n);
            let xy_z = x.compose(&y).unwrap().compose(&z).unwrap();
            let x_yz = x.compose(&y.compose(&z).unwrap()).unwrap();
            prop_assert_eq!(xy_z, x_yz);
            prop_assert_eq!(x.compose(&e).unwrap(), x.clone());
            prop_assert_eq!(e.compose(&x).unwrap(), x.clone());
            prop_assert!(x.inverse().compose(&x).unwrap().is_identity());
            prop_assert_eq!(x.inverse().length(), x.length());
        }
    }
}
