//! Minimal-length coset representatives, the double set `X_J⁻¹ ∩ X_K`, the
//! map `ζ` onto margin matrices, and an executable check of the ordered
//! presentation of `x⁻¹𝒥 ∩ 𝒦`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{
    graph_of_subset, subset_to_composition, GeneratorSubset, MarginMatrix, OrderedPresentation,
};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, check_degree, next_lex, Permutation};
use crate::Bounds;

/// Whether `x` is the minimal-length representative of its left coset `x W_K`,
/// i.e. `x(h) < x(h+1)` for every `s_h ∈ K`.
pub fn is_left_rep(x: &Permutation, k: &GeneratorSubset) -> Result<bool> {
    check_degree(x.degree(), k.degree())?;
    Ok(k.members().all(|h| x.apply(h) < x.apply(h + 1)))
}

fn in_double_set(x: &Permutation, j: &GeneratorSubset, k: &GeneratorSubset) -> bool {
    let inv = x.inverse();
    k.members().all(|h| x.apply(h) < x.apply(h + 1))
        && j.members().all(|v| inv.apply(v) < inv.apply(v + 1))
}

/// Streams `X_K` without touching the rest of `S_n`.
///
/// A representative is increasing on each block of `K`'s graph, so it is
/// determined by which block each value lands in. The stream walks those
/// value-to-block words in lexicographic order, starting from the identity.
#[derive(Debug, Clone)]
pub struct LeftReps {
    starts: Vec<usize>,
    word: Vec<usize>,
    done: bool,
}

impl LeftReps {
    fn new(k: &GeneratorSubset) -> Self {
        let kappa = subset_to_composition(k);
        let starts = kappa.intervals().map(|(start, _)| start - 1).collect();
        let word = kappa
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
            .collect();
        LeftReps {
            starts,
            word,
            done: false,
        }
    }

    fn current(&self) -> Permutation {
        let mut slot = self.starts.clone();
        let mut images = vec![0u32; self.word.len()];
        for (value, &block) in self.word.iter().enumerate() {
            images[slot[block]] = value as u32;
            slot[block] += 1;
        }
        Permutation::from_zero_based_unchecked(images)
    }
}

impl Iterator for LeftReps {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let x = self.current();
        self.done = !next_lex(&mut self.word);
        Some(x)
    }
}

/// `X_K`, of size `n! / Π κ_i!` with `κ` the composition of `K`.
pub fn enumerate_left_reps(k: &GeneratorSubset, bounds: &Bounds) -> Result<LeftReps> {
    bounds.check_oracle(k.degree())?;
    Ok(LeftReps::new(k))
}

/// `{x : x ∈ X_K and x⁻¹ ∈ X_J}`.
pub fn enumerate_double_set<'a>(
    j: &'a GeneratorSubset,
    k: &'a GeneratorSubset,
    bounds: &Bounds,
) -> Result<impl Iterator<Item = Permutation> + 'a> {
    check_degree(j.degree(), k.degree())?;
    let reps = enumerate_left_reps(k, bounds)?;
    Ok(reps.filter(move |x| {
        let inv = x.inverse();
        j.members().all(|v| inv.apply(v) < inv.apply(v + 1))
    }))
}

fn require_double_set(x: &Permutation, j: &GeneratorSubset, k: &GeneratorSubset) -> Result<()> {
    check_degree(j.degree(), k.degree())?;
    check_degree(x.degree(), k.degree())?;
    if in_double_set(x, j, k) {
        Ok(())
    } else {
        Err(Error::NotInDoubleSet { x: x.to_string() })
    }
}

/// `|{i ∈ 𝒦_m : x(i) ∈ 𝒥_q}|` for every pair of blocks, i.e. `|x⁻¹𝒥_q ∩ 𝒦_m|`.
fn intersection_sizes(
    x: &Permutation,
    j_blocks: &OrderedPresentation,
    k_blocks: &OrderedPresentation,
) -> Vec<Vec<usize>> {
    let j_label = j_blocks.block_labels();
    let mut z = vec![vec![0; j_blocks.len()]; k_blocks.len()];
    for (m, block) in k_blocks.blocks().iter().enumerate() {
        for &i in block {
            z[m][j_label[x.apply(i) - 1]] += 1;
        }
    }
    z
}

/// `ζ(x)`: rows indexed by the blocks of `𝒦`, columns by the blocks of `𝒥`,
/// entry `|x⁻¹𝒥_q ∩ 𝒦_m|`. Row sums are `ν`, column sums `κ`.
pub fn zeta(x: &Permutation, j: &GeneratorSubset, k: &GeneratorSubset) -> Result<MarginMatrix> {
    require_double_set(x, j, k)?;
    let jp = graph_of_subset(j).ordered_presentation();
    let kp = graph_of_subset(k).ordered_presentation();
    MarginMatrix::from_rows(intersection_sizes(x, &jp, &kp))
}

/// The list `(x⁻¹𝒥_1∩𝒦_1, …, x⁻¹𝒥_r∩𝒦_1, x⁻¹𝒥_1∩𝒦_2, …, x⁻¹𝒥_r∩𝒦_s)` with
/// empty sets dropped, taken as is (not re-sorted). Fails if that list is not
/// a valid ordered presentation.
pub fn predicted_presentation(
    x: &Permutation,
    j: &GeneratorSubset,
    k: &GeneratorSubset,
) -> Result<OrderedPresentation> {
    require_double_set(x, j, k)?;
    let jp = graph_of_subset(j).ordered_presentation();
    let kp = graph_of_subset(k).ordered_presentation();
    let j_label = jp.block_labels();
    let mut blocks = Vec::new();
    for k_block in kp.blocks() {
        for q in 0..jp.len() {
            let cell: Vec<usize> = k_block
                .iter()
                .copied()
                .filter(|&i| j_label[x.apply(i) - 1] == q)
                .collect();
            if !cell.is_empty() {
                blocks.push(cell);
            }
        }
    }
    OrderedPresentation::from_blocks(x.degree(), blocks)
}

/// The connected components of `x⁻¹𝒥 ∩ 𝒦`, computed from the graphs directly.
pub fn intersection_presentation(
    x: &Permutation,
    j: &GeneratorSubset,
    k: &GeneratorSubset,
) -> Result<OrderedPresentation> {
    let moved = graph_of_subset(j).apply_permutation(&x.inverse())?;
    Ok(moved.intersect(&graph_of_subset(k))?.ordered_presentation())
}

/// The Young subgroup of permutations mapping every block into itself.
pub(crate) fn young_subgroup(blocks: &OrderedPresentation) -> BTreeSet<Permutation> {
    all_permutations(blocks.vertex_count())
        .filter(|w| preserves_blocks(w, blocks))
        .collect()
}

fn preserves_blocks(w: &Permutation, blocks: &OrderedPresentation) -> bool {
    let label = blocks.block_labels();
    (1..=w.degree()).all(|i| label[w.apply(i) - 1] == label[i - 1])
}

/// `x⁻¹ W_J x ∩ W_K`, enumerated from the definition.
pub(crate) fn conjugate_intersection(
    x: &Permutation,
    j: &GeneratorSubset,
    k: &GeneratorSubset,
) -> BTreeSet<Permutation> {
    let jp = graph_of_subset(j).ordered_presentation();
    let kp = graph_of_subset(k).ordered_presentation();
    let inv = x.inverse();
    young_subgroup(&jp)
        .iter()
        .map(|w| inv.compose_unchecked(w).compose_unchecked(x))
        .filter(|c| preserves_blocks(c, &kp))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaCheck {
    /// Components of `x⁻¹𝒥 ∩ 𝒦` against the predicted block list.
    Presentation,
    /// Block sizes against the reading word of `ζ(x)`.
    ReadingWord,
    /// `x⁻¹ W_J x ∩ W_K` against the Young subgroup of `x⁻¹𝒥 ∩ 𝒦`.
    Parabolic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub x: String,
    pub check: LemmaCheck,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub j: String,
    pub k: String,
    pub passed: bool,
    pub witnesses: usize,
    pub parabolic_checked: bool,
    /// Total failing checks, including those beyond the counterexample cap.
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOptions {
    pub bounds: Bounds,
    /// Run the subgroup check when `n` is within `bounds.parabolic`.
    pub parabolic: bool,
    pub max_counterexamples: usize,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions {
            bounds: Bounds::DEFAULT,
            parabolic: true,
            max_counterexamples: 10,
        }
    }
}

/// Checks, for every `x ∈ X_J⁻¹ ∩ X_K`, that the components of `x⁻¹𝒥 ∩ 𝒦`
/// are the predicted block list, that their sizes read off `ζ(x)`, and (for
/// small `n`) that `x⁻¹ W_J x ∩ W_K` is the Young subgroup of those components.
///
/// Failed checks are report content; only out-of-range degrees and mismatched
/// inputs are errors.
pub fn verify_lemma(
    j: &GeneratorSubset,
    k: &GeneratorSubset,
    options: &LemmaOptions,
) -> Result<LemmaReport> {
    check_degree(j.degree(), k.degree())?;
    let n = j.degree();
    options.bounds.check_lemma(n)?;
    let parabolic = options.parabolic && options.bounds.check_parabolic(n).is_ok();

    let mut report = LemmaReport {
        n,
        j: j.to_string(),
        k: k.to_string(),
        passed: true,
        witnesses: 0,
        parabolic_checked: parabolic,
        failures: 0,
        counterexamples: Vec::new(),
    };
    let fail = |report: &mut LemmaReport, x: &Permutation, check, expected: String, actual: String| {
        report.passed = false;
        report.failures += 1;
        if report.counterexamples.len() < options.max_counterexamples {
            report.counterexamples.push(Counterexample {
                x: x.to_string(),
                check,
                expected,
                actual,
            });
        }
    };

    let unbounded = options.bounds.with_max_n(usize::MAX);
    for x in enumerate_double_set(j, k, &unbounded)? {
        report.witnesses += 1;
        let actual = intersection_presentation(&x, j, k)?;
        match predicted_presentation(&x, j, k) {
            Ok(predicted) if predicted == actual => {}
            Ok(predicted) => fail(
                &mut report,
                &x,
                LemmaCheck::Presentation,
                predicted.to_string(),
                actual.to_string(),
            ),
            Err(e) => fail(&mut report, &x, LemmaCheck::Presentation, e.to_string(), actual.to_string()),
        }
        let eta = zeta(&x, j, k)?.reading_word();
        if eta != actual.block_sizes() {
            fail(
                &mut report,
                &x,
                LemmaCheck::ReadingWord,
                eta.to_string(),
                actual.block_sizes().to_string(),
            );
        }
        if parabolic {
            let lhs = conjugate_intersection(&x, j, k);
            let rhs = young_subgroup(&actual);
            if lhs != rhs {
                fail(
                    &mut report,
                    &x,
                    LemmaCheck::Parabolic,
                    format!("{} elements", rhs.len()),
                    format!("{} elements", lhs.len()),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{contingency_tables, generator_subsets, Composition};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn subset(n: usize, members: &[usize]) -> GeneratorSubset {
        GeneratorSubset::new(n, members.iter().copied()).unwrap()
    }

    fn names<I: IntoIterator<Item = Permutation>>(it: I) -> Vec<String> {
        let mut v: Vec<String> = it.into_iter().map(|x| x.to_string()).collect();
        v.sort();
        v
    }

    fn factorial(n: usize) -> u128 {
        (1..=n as u128).product()
    }

    /// Definition-level oracle: `x` is the unique shortest element of `x W_K`.
    fn is_minimal_in_coset(x: &Permutation, k: &GeneratorSubset) -> bool {
        let kp = graph_of_subset(k).ordered_presentation();
        young_subgroup(&kp)
            .iter()
            .filter(|w| !w.is_identity())
            .all(|w| x.compose(w).unwrap().length() > x.length())
    }

    #[test]
    fn left_rep_examples() {
        let k = subset(3, &[2]);
        assert!(is_left_rep(&Permutation::identity(3), &k).unwrap());
        assert!(!is_left_rep(&p("132"), &k).unwrap());
        for x in all_permutations(4) {
            assert!(is_left_rep(&x, &GeneratorSubset::empty(4).unwrap()).unwrap());
        }
        assert!(is_left_rep(&p("12"), &k).is_err());
    }

    #[test]
    fn left_rep_enumeration_examples() {
        let b = Bounds::DEFAULT;
        let full = GeneratorSubset::full(5).unwrap();
        assert_eq!(names(enumerate_left_reps(&full, &b).unwrap()), ["12345"]);
        assert_eq!(enumerate_left_reps(&GeneratorSubset::empty(5).unwrap(), &b).unwrap().count(), 120);
        assert_eq!(names(enumerate_left_reps(&subset(3, &[2]), &b).unwrap()), ["123", "213", "312"]);
        assert!(enumerate_left_reps(&GeneratorSubset::empty(8).unwrap(), &b).is_err());
    }

    #[test]
    fn ascent_criterion_matches_coset_minimality() {
        for n in 1..=5 {
            for k in generator_subsets(n) {
                for x in all_permutations(n) {
                    assert_eq!(is_left_rep(&x, &k).unwrap(), is_minimal_in_coset(&x, &k), "{x} {k:?}");
                }
            }
        }
    }

    #[test]
    fn generated_reps_match_filter_and_formula() {
        let b = Bounds::DEFAULT;
        for n in 1..=7 {
            for k in generator_subsets(n) {
                let generated: Vec<_> = enumerate_left_reps(&k, &b).unwrap().collect();
                let kappa = subset_to_composition(&k);
                assert_eq!(generated.len() as u128, kappa.multinomial().unwrap());
                let distinct: BTreeSet<_> = generated.iter().cloned().collect();
                assert_eq!(distinct.len(), generated.len());
                if n <= 5 {
                    let filtered: BTreeSet<_> =
                        all_permutations(n).filter(|x| is_left_rep(x, &k).unwrap()).collect();
                    assert_eq!(distinct, filtered);
                } else {
                    assert!(generated.iter().all(|x| is_left_rep(x, &k).unwrap()));
                }
                let denom: u128 = kappa.parts().iter().map(|&p| factorial(p)).product();
                assert_eq!(generated.len() as u128, factorial(n) / denom);
            }
        }
    }

    #[test]
    fn double_set_examples() {
        let b = Bounds::DEFAULT;
        let e = GeneratorSubset::empty(4).unwrap();
        assert_eq!(enumerate_double_set(&e, &e, &b).unwrap().count(), 24);
        let (j, k) = (subset(3, &[1]), subset(3, &[2]));
        assert_eq!(names(enumerate_double_set(&j, &k, &b).unwrap()), ["123", "312"]);
        let s = GeneratorSubset::full(4).unwrap();
        assert_eq!(names(enumerate_double_set(&s, &s, &b).unwrap()), ["1234"]);
    }

    #[test]
    fn zeta_examples() {
        let (j, k) = (subset(3, &[1]), subset(3, &[2]));
        assert_eq!(zeta(&p("123"), &j, &k).unwrap().to_string(), "[[1,0],[1,1]]");
        assert_eq!(zeta(&p("312"), &j, &k).unwrap().to_string(), "[[0,1],[2,0]]");
        assert_eq!(
            zeta(&p("213"), &j, &k),
            Err(Error::NotInDoubleSet { x: "213".into() })
        );
        // identity: overlaps of the interval blocks
        let (j, k) = (subset(5, &[1, 3, 4]), subset(5, &[2, 3]));
        let z = zeta(&Permutation::identity(5), &j, &k).unwrap();
        assert_eq!(z.to_rows(), vec![vec![1, 0], vec![1, 2], vec![0, 1]]);
    }

    #[test]
    fn predicted_presentation_examples() {
        let (j, k) = (subset(3, &[1]), subset(3, &[2]));
        let id = Permutation::identity(3);
        assert_eq!(predicted_presentation(&id, &j, &k).unwrap().to_string(), "({1},{2},{3})");
        assert_eq!(predicted_presentation(&p("312"), &j, &k).unwrap().to_string(), "({1},{2,3})");
        let j = subset(6, &[1, 2, 4]);
        let id = Permutation::identity(6);
        assert_eq!(
            predicted_presentation(&id, &j, &j).unwrap(),
            graph_of_subset(&j).ordered_presentation()
        );
        assert!(predicted_presentation(&p("213"), &subset(3, &[1]), &k).is_err());
    }

    #[test]
    fn verify_lemma_examples() {
        let opts = LemmaOptions::default();
        let report = verify_lemma(&subset(3, &[1]), &subset(3, &[2]), &opts).unwrap();
        assert!(report.passed);
        assert_eq!(report.witnesses, 2);
        assert!(report.parabolic_checked);
        let e = GeneratorSubset::empty(4).unwrap();
        let s = GeneratorSubset::full(4).unwrap();
        assert!(verify_lemma(&e, &s, &opts).unwrap().passed);
        assert!(verify_lemma(&s, &e, &opts).unwrap().passed);
        assert!(verify_lemma(&GeneratorSubset::empty(7).unwrap(), &GeneratorSubset::empty(7).unwrap(), &opts).is_err());
        let six = verify_lemma(&GeneratorSubset::empty(6).unwrap(), &GeneratorSubset::empty(6).unwrap(), &opts).unwrap();
        assert!(six.passed && !six.parabolic_checked);
        assert_eq!(six.witnesses, 720);
    }

    #[test]
    fn verify_lemma_all_pairs_n5() {
        let opts = LemmaOptions::default();
        let mut pairs = 0;
        for j in generator_subsets(5) {
            for k in generator_subsets(5) {
                let report = verify_lemma(&j, &k, &opts).unwrap();
                assert!(report.passed, "{report:?}");
                assert_eq!(report.failures, 0);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 256);
    }

    #[test]
    fn report_serializes() {
        let report = verify_lemma(&subset(3, &[1]), &subset(3, &[2]), &LemmaOptions::default()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["passed"], true);
        assert_eq!(json["witnesses"], 2);
        assert_eq!(json["counterexamples"].as_array().unwrap().len(), 0);
    }

    /// Sub-claims from the proof of the ordered-presentation result, checked
    /// directly for every `(J, K)` and every double-set element with `n ≤ 6`.
    #[test]
    fn proof_sub_claims() {
        let b = Bounds::DEFAULT;
        for n in 1..=6 {
            for j in generator_subsets(n) {
                let jp = graph_of_subset(&j).ordered_presentation();
                for k in generator_subsets(n) {
                    let kp = graph_of_subset(&k).ordered_presentation();
                    for x in enumerate_double_set(&j, &k, &b).unwrap() {
                        let inv = x.inverse();
                        let moved = graph_of_subset(&j).apply_permutation(&inv).unwrap();
                        let meet = moved.intersect(&graph_of_subset(&k)).unwrap();
                        // cells[m][q] = x⁻¹𝒥_q ∩ 𝒦_m
                        let cells: Vec<Vec<Vec<usize>>> = kp
                            .blocks()
                            .iter()
                            .map(|kb| {
                                jp.blocks()
                                    .iter()
                                    .map(|jb| kb.iter().copied().filter(|&i| jb.contains(&x.apply(i))).collect())
                                    .collect()
                            })
                            .collect();
                        let max = |s: &[usize]| s.iter().max().copied();
                        let min = |s: &[usize]| s.iter().min().copied();
                        for (m, row) in cells.iter().enumerate() {
                            // 1.1: last column of row m precedes first column of row m+1
                            if let (Some(next_row), Some(a)) = (cells.get(m + 1), max(&row[row.len() - 1])) {
                                if let Some(b) = min(&next_row[0]) {
                                    assert!(a < b);
                                }
                            }
                            // 1.2: within a row, column q precedes column q+1
                            for pair in row.windows(2) {
                                if let (Some(a), Some(b)) = (max(&pair[0]), min(&pair[1])) {
                                    assert!(a < b, "1.2 fails at {x}");
                                }
                            }
                        }
                        // 2.1: cells are pairwise disjoint
                        let flat: Vec<usize> = cells.iter().flatten().flatten().copied().collect();
                        let distinct: BTreeSet<usize> = flat.iter().copied().collect();
                        assert_eq!(flat.len(), distinct.len());
                        assert_eq!(flat.len(), n);
                        let cell_of = |v: usize| {
                            cells
                                .iter()
                                .enumerate()
                                .flat_map(|(m, row)| row.iter().enumerate().map(move |(q, c)| ((m, q), c)))
                                .find(|(_, c)| c.contains(&v))
                                .map(|(id, _)| id)
                                .unwrap()
                        };
                        // 2.2: no edge of x⁻¹𝒥 ∩ 𝒦 leaves a cell
                        for (u, v) in meet.edges() {
                            assert_eq!(cell_of(u), cell_of(v));
                        }
                        // 2.3: consecutive vertices sharing a cell are joined
                        for cell in cells.iter().flatten() {
                            for &i in cell {
                                if cell.contains(&(i + 1)) {
                                    assert!(meet.has_edge(i, i + 1), "2.3 fails at {x}");
                                }
                            }
                        }
                        // vertices of each 𝒦_m appear in increasing order in x⁻¹(1), …, x⁻¹(n)
                        let list = inv.images();
                        for kb in kp.blocks() {
                            let seq: Vec<usize> = list.iter().copied().filter(|v| kb.contains(v)).collect();
                            assert!(seq.windows(2).all(|w| w[0] < w[1]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_is_a_bijection_onto_tables() {
        let b = Bounds::DEFAULT;
        for n in 1..=6 {
            for j in generator_subsets(n) {
                let kappa: Composition = subset_to_composition(&j);
                for k in generator_subsets(n) {
                    let nu = subset_to_composition(&k);
                    let images: Vec<MarginMatrix> = enumerate_double_set(&j, &k, &b)
                        .unwrap()
                        .map(|x| zeta(&x, &j, &k).unwrap())
                        .collect();
                    let image_set: BTreeSet<_> = images.iter().cloned().collect();
                    assert_eq!(image_set.len(), images.len(), "ζ not injective");
                    let tables: BTreeSet<_> = contingency_tables(&nu, &kappa).unwrap().collect();
                    assert_eq!(image_set, tables);
                }
            }
        }
    }
}
