//! Verification scopes behind `descent verify`.

use std::collections::BTreeSet;

use anyhow::Result;
use descent_core::cosets::Counterexample;
use descent_core::{
    compositions, contingency_tables, enumerate_double_set, enumerate_left_reps,
    expanded_term_count, generator_subsets, oracle_multiply, solomon_multiply,
    subset_to_composition, to_group_algebra, verify_lemma, zeta, Bounds, Composition,
    Descent64, GroupElement64, LemmaOptions,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Largest `n` at which the oracle scope runs every pair; above it, pairs are sampled.
pub const EXHAUSTIVE_ORACLE_MAX_N: usize = 6;
pub const SAMPLED_ORACLE_PAIRS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Lemma,
    Parabolic,
    Bijection,
    Oracle,
    Counting,
    Representatives,
}

impl Scope {
    pub const ALL: [Scope; 6] = [
        Scope::Lemma,
        Scope::Parabolic,
        Scope::Bijection,
        Scope::Oracle,
        Scope::Counting,
        Scope::Representatives,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Lemma => "lemma",
            Scope::Parabolic => "parabolic",
            Scope::Bijection => "bijection",
            Scope::Oracle => "oracle",
            Scope::Counting => "counting",
            Scope::Representatives => "representatives",
        }
    }

    pub fn check_bound(self, n: usize, bounds: &Bounds) -> descent_core::Result<()> {
        match self {
            Scope::Lemma | Scope::Bijection => bounds.check_lemma(n),
            Scope::Parabolic => bounds.check_parabolic(n),
            Scope::Oracle | Scope::Representatives => bounds.check_oracle(n),
            Scope::Counting => bounds.check_counting(n),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScopeReport {
    pub scope: Scope,
    pub passed: bool,
    /// `(J, K)` pairs, `(κ, ν)` pairs, or subsets, depending on the scope.
    pub cases: usize,
    pub witnesses: usize,
    pub sampled: bool,
    pub failures: usize,
    pub counterexamples: Vec<Failure>,
}

impl ScopeReport {
    fn new(scope: Scope) -> Self {
        ScopeReport {
            scope,
            passed: true,
            cases: 0,
            witnesses: 0,
            sampled: false,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn fail(&mut self, cap: usize, failure: Failure) {
        self.passed = false;
        self.failures += 1;
        if self.counterexamples.len() < cap {
            self.counterexamples.push(failure);
        }
    }
}

pub struct Settings {
    pub bounds: Bounds,
    pub seed: u64,
    pub cap: usize,
}

pub fn run(scope: Scope, n: usize, settings: &Settings) -> Result<ScopeReport> {
    let mut report = ScopeReport::new(scope);
    match scope {
        Scope::Lemma | Scope::Parabolic => lemma(&mut report, n, settings)?,
        Scope::Bijection => bijection(&mut report, n, settings)?,
        Scope::Oracle => oracle(&mut report, n, settings)?,
        Scope::Counting => counting(&mut report, n, settings)?,
        Scope::Representatives => representatives(&mut report, n, settings)?,
    }
    Ok(report)
}

fn lemma(report: &mut ScopeReport, n: usize, settings: &Settings) -> Result<()> {
    let options = LemmaOptions {
        bounds: settings.bounds,
        parabolic: report.scope == Scope::Parabolic,
        max_counterexamples: settings.cap,
    };
    for j in generator_subsets(n) {
        for k in generator_subsets(n) {
            let r = verify_lemma(&j, &k, &options)?;
            report.cases += 1;
            report.witnesses += r.witnesses;
            for detail in r.counterexamples {
                report.fail(
                    settings.cap,
                    Failure {
                        left: r.j.clone(),
                        right: r.k.clone(),
                        detail: Some(detail),
                        message: None,
                    },
                );
            }
        }
    }
    Ok(())
}

fn bijection(report: &mut ScopeReport, n: usize, settings: &Settings) -> Result<()> {
    let unbounded = settings.bounds.with_max_n(usize::MAX);
    for j in generator_subsets(n) {
        let kappa = subset_to_composition(&j);
        for k in generator_subsets(n) {
            let nu = subset_to_composition(&k);
            let images = enumerate_double_set(&j, &k, &unbounded)?
                .map(|x| zeta(&x, &j, &k))
                .collect::<descent_core::Result<Vec<_>>>()?;
            let distinct: BTreeSet<_> = images.iter().cloned().collect();
            let tables: BTreeSet<_> = contingency_tables(&nu, &kappa)?.collect();
            report.cases += 1;
            report.witnesses += images.len();
            if distinct.len() != images.len() || distinct != tables {
                report.fail(
                    settings.cap,
                    Failure {
                        left: j.to_string(),
                        right: k.to_string(),
                        detail: None,
                        message: Some(format!(
                            "{} double-set elements, {} distinct images, {} tables",
                            images.len(),
                            distinct.len(),
                            tables.len()
                        )),
                    },
                );
            }
        }
    }
    Ok(())
}

/// The pairs the oracle scope checks: all of them up to
/// [`EXHAUSTIVE_ORACLE_MAX_N`], a seeded sample beyond.
pub fn oracle_pairs(n: usize, seed: u64) -> (Vec<(Composition, Composition)>, bool) {
    let basis = compositions(n);
    let all: Vec<_> = basis
        .iter()
        .flat_map(|k| basis.iter().map(move |v| (k.clone(), v.clone())))
        .collect();
    if n <= EXHAUSTIVE_ORACLE_MAX_N {
        return (all, false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample: Vec<_> = all
        .choose_multiple(&mut rng, SAMPLED_ORACLE_PAIRS)
        .cloned()
        .collect();
    sample.sort();
    (sample, true)
}

fn oracle(report: &mut ScopeReport, n: usize, settings: &Settings) -> Result<()> {
    let (pairs, sampled) = oracle_pairs(n, settings.seed);
    report.sampled = sampled;
    for (kappa, nu) in pairs {
        let rule: Descent64 = solomon_multiply(&kappa, &nu)?;
        let lhs = to_group_algebra(&rule, &settings.bounds)?;
        let rhs: GroupElement64 = oracle_multiply(&kappa, &nu, &settings.bounds)?;
        report.cases += 1;
        report.witnesses += rhs.len();
        if lhs != rhs {
            report.fail(
                settings.cap,
                Failure {
                    left: kappa.to_string(),
                    right: nu.to_string(),
                    detail: None,
                    message: Some(format!("rule gives {rule}")),
                },
            );
        }
    }
    Ok(())
}

fn counting(report: &mut ScopeReport, n: usize, settings: &Settings) -> Result<()> {
    let basis = compositions(n);
    for kappa in &basis {
        for nu in &basis {
            let lhs = expanded_term_count(kappa, nu)?;
            let rhs = kappa
                .multinomial()
                .zip(nu.multinomial())
                .and_then(|(a, b)| a.checked_mul(b));
            report.cases += 1;
            if lhs.is_none() || lhs != rhs {
                report.fail(
                    settings.cap,
                    Failure {
                        left: kappa.to_string(),
                        right: nu.to_string(),
                        detail: None,
                        message: Some(format!("{lhs:?} != {rhs:?}")),
                    },
                );
            }
        }
    }
    Ok(())
}

fn representatives(report: &mut ScopeReport, n: usize, settings: &Settings) -> Result<()> {
    for k in generator_subsets(n) {
        let count = enumerate_left_reps(&k, &settings.bounds)?.count() as u128;
        let expected = subset_to_composition(&k).multinomial();
        report.cases += 1;
        report.witnesses += count as usize;
        if Some(count) != expected {
            report.fail(
                settings.cap,
                Failure {
                    left: k.to_string(),
                    right: String::new(),
                    detail: None,
                    message: Some(format!("{count} representatives, expected {expected:?}")),
                },
            );
        }
    }
    Ok(())
}
