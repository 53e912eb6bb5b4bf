use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::composition::Composition;
use crate::combinatorics::graph::SubsetGraph;
use crate::error::{Error, Result};

/// A subset `J` of the generators `{s_1, …, s_{n-1}}`, with `i` standing for `s_i = (i, i+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSubset {
    n: usize,
    members: BTreeSet<usize>,
}

impl GeneratorSubset {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset("degree must be at least 1".into()));
        }
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidSubset(format!(
                "s_{bad} is not a generator of S_{n}"
            )));
        }
        Ok(GeneratorSubset { n, members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// The whole generating set `S`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, 1..n)
    }

    /// Parses comma-separated generator indices; the empty string is `∅`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::empty(n);
        }
        let members = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(format!("cannot parse {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sizes of the connected components of the graph, in order of least element.
    pub fn to_composition(&self) -> Composition {
        subset_to_composition(self)
    }

    pub fn graph(&self) -> SubsetGraph {
        graph_of_subset(self)
    }
}

/// Comma-separated indices, e.g. `2,3,7`; `∅` prints as the empty string.
impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}⊆S_{}", self.n)
    }
}

/// Component sizes of the graph of `J`. The components of a path subgraph are
/// runs of consecutive vertices, so a run breaks exactly where `s_i ∉ J`.
pub fn subset_to_composition(j: &GeneratorSubset) -> Composition {
    let mut parts = Vec::new();
    let mut run = 1;
    for i in 1..j.n {
        if j.contains(i) {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Composition::new(parts).expect("runs are positive")
}

/// Inverse of [`subset_to_composition`]: every generator inside a block of
/// consecutive cumulative sums.
pub fn composition_to_subset(kappa: &Composition) -> GeneratorSubset {
    let members: BTreeSet<usize> = kappa
        .intervals()
        .flat_map(|(start, end)| start..end)
        .collect();
    GeneratorSubset {
        n: kappa.size(),
        members,
    }
}

/// Graph on `{1..n}` with an edge `{i, i+1}` for every `s_i ∈ J`.
pub fn graph_of_subset(j: &GeneratorSubset) -> SubsetGraph {
    SubsetGraph::from_edges_unchecked(j.n, j.members().map(|i| (i, i + 1)))
}

/// All `2^(n-1)` subsets, in the order of their compositions.
pub fn generator_subsets(n: usize) -> Vec<GeneratorSubset> {
    crate::combinatorics::compositions(n)
        .iter()
        .map(composition_to_subset)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s9_example() -> GeneratorSubset {
        GeneratorSubset::new(9, [2, 3, 7]).unwrap()
    }

    #[test]
    fn example_in_s9() {
        let j = s9_example();
        assert_eq!(subset_to_composition(&j).parts(), &[1, 3, 1, 1, 2, 1]);
        let kappa: Composition = "1,3,1,1,2,1".parse().unwrap();
        assert_eq!(composition_to_subset(&kappa), j);
        let edges: Vec<_> = graph_of_subset(&j).edges().collect();
        assert_eq!(edges, vec![(2, 3), (3, 4), (7, 8)]);
    }

    #[test]
    fn extremes() {
        assert_eq!(subset_to_composition(&GeneratorSubset::empty(4).unwrap()).parts(), &[1, 1, 1, 1]);
        for n in 1..8 {
            let full = GeneratorSubset::full(n).unwrap();
            assert_eq!(subset_to_composition(&full).parts(), &[n]);
            assert_eq!(composition_to_subset(&Composition::full(n).unwrap()), full);
            assert!(composition_to_subset(&Composition::singletons(n).unwrap()).is_empty());
        }
        assert_eq!(graph_of_subset(&GeneratorSubset::empty(5).unwrap()).edge_count(), 0);
        let s1 = GeneratorSubset::new(2, [1]).unwrap();
        assert_eq!(graph_of_subset(&s1).edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn round_trip_all_subsets() {
        for n in 1..=10 {
            for mask in 0u32..(1 << (n - 1)) {
                let j = GeneratorSubset::new(n, (1..n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
                let kappa = subset_to_composition(&j);
                assert_eq!(kappa.size(), n);
                assert_eq!(composition_to_subset(&kappa), j);
                assert_eq!(subset_to_composition(&composition_to_subset(&kappa)), kappa);
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(GeneratorSubset::parse("2,3,7", 9).unwrap(), s9_example());
        assert!(GeneratorSubset::parse("", 3).unwrap().is_empty());
        assert!(GeneratorSubset::parse("3", 3).is_err());
        assert!(GeneratorSubset::parse("0", 3).is_err());
        assert!(GeneratorSubset::parse("x", 3).is_err());
        assert_eq!(s9_example().to_string(), "2,3,7");
    }

    #[test]
    fn subsets_listed_in_composition_order() {
        let names: Vec<String> = generator_subsets(3).iter().map(|j| j.to_string()).collect();
        assert_eq!(names, ["", "2", "1", "1,2"]);
    }
}
