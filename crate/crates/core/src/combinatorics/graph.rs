//! Graphs on `{1..n}` built from generator subsets, their images under
//! permutations, and ordered presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use petgraph::unionfind::UnionFind;

use crate::combinatorics::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::{check_degree, Permutation};

/// Undirected simple graph on vertices `1..=n`.
///
/// Edges are stored as `(u, v)` with `u < v`. They need not join consecutive
/// integers: the image `x𝒥` of a path graph generally does not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SubsetGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} is invalid on vertices 1..={n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SubsetGraph { n, edges: set })
    }

    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        SubsetGraph {
            n,
            edges: edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        SubsetGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// The image graph: `(x(i), x(j))` is an edge iff `(i, j)` is.
    pub fn apply_permutation(&self, x: &Permutation) -> Result<SubsetGraph> {
        check_degree(x.degree(), self.n)?;
        Ok(SubsetGraph::from_edges_unchecked(
            self.n,
            self.edges.iter().map(|&(u, v)| (x.apply(u), x.apply(v))),
        ))
    }

    /// Same vertices, edges present in both.
    pub fn intersect(&self, other: &SubsetGraph) -> Result<SubsetGraph> {
        check_degree(self.n, other.n)?;
        Ok(SubsetGraph {
            n: self.n,
            edges: self.edges.intersection(&other.edges).copied().collect(),
        })
    }

    /// Connected components sorted by least element.
    pub fn ordered_presentation(&self) -> OrderedPresentation {
        let mut uf = UnionFind::<usize>::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u - 1, v - 1);
        }
        // Vertices are visited in increasing order, so the first time a root is
        // seen is at its component's least element and blocks come out sorted.
        let mut block_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let root = uf.find_mut(v);
            let idx = *block_of_root.entry(root).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(v + 1);
        }
        OrderedPresentation { n: self.n, blocks }
    }

    /// Graphviz rendering; with `cluster`, each component becomes a
    /// `subgraph cluster_k` in ordered-presentation order.
    pub fn to_dot(&self, cluster: bool) -> String {
        let mut out = String::from("graph G {\n");
        if cluster {
            for (k, block) in self.ordered_presentation().blocks().iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_{} {{", k + 1);
                let _ = writeln!(out, "    label=\"{}\";", fmt_block(block));
                for v in block {
                    let _ = writeln!(out, "    {v};");
                }
                out.push_str("  }\n");
            }
        } else {
            for v in 1..=self.n {
                let _ = writeln!(out, "  {v};");
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for SubsetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

pub fn apply_permutation(x: &Permutation, g: &SubsetGraph) -> Result<SubsetGraph> {
    g.apply_permutation(x)
}

pub fn intersect(g: &SubsetGraph, h: &SubsetGraph) -> Result<SubsetGraph> {
    g.intersect(h)
}

pub fn ordered_presentation(g: &SubsetGraph) -> OrderedPresentation {
    g.ordered_presentation()
}

/// Disjoint non-empty blocks covering `{1..n}`, listed by least element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedPresentation {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPresentation {
    /// Validates that the blocks partition `{1..n}` and are listed by least
    /// element. Each block is sorted internally.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidGraph("empty block".into()));
            }
            for &v in &block {
                if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} is out of range or repeated"
                    )));
                }
            }
            block.sort_unstable();
            sorted_blocks.push(block);
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidGraph("blocks do not cover every vertex".into()));
        }
        if sorted_blocks.windows(2).any(|w| w[0][0] > w[1][0]) {
            return Err(Error::InvalidGraph(
                "blocks are not ordered by least element".into(),
            ));
        }
        Ok(OrderedPresentation {
            n,
            blocks: sorted_blocks,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_sizes(&self) -> Composition {
        Composition::new(self.blocks.iter().map(Vec::len).collect())
            .expect("a non-empty partition has positive block sizes")
    }

    /// `label[v-1]` is the index of the block holding `v`.
    pub(crate) fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (k, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v - 1] = k;
            }
        }
        labels
    }
}

fn fmt_block(block: &[usize]) -> String {
    let inner: Vec<String> = block.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// `({1},{2,3,4},{5})`.
impl fmt::Display for OrderedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| fmt_block(b)).collect();
        write!(f, "({})", blocks.join(","))
    }
}

impl fmt::Debug for OrderedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedPresentation{self}")
    }
}
