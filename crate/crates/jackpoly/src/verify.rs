//! The check-runner behind `verify`: sweeps every selected identity over all
//! partitions up to a weight bound and reports pass/fail counts with the
//! first counterexample spelled out.
//!
//! Units are generated in a canonical order up front; workers only evaluate
//! them, and results are collected back in order, so the report is
//! byte-identical no matter how many workers run.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::jack::{
    check_commutator, check_eigen, check_normalization, check_triangularity, conjecture_report,
    rodrigues_jack, JackResult,
};
use crate::multipoly::{Monomial, MultiPoly};
use crate::operators::{apply_dunkl, apply_swap};
use crate::oracle::gram_schmidt_jack;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{scalar_product, MExpansion};

/// One verifiable statement family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    Eigen,
    Orthogonality,
    Triangularity,
    Normalization,
    Integrality,
    Positivity,
    Commutator,
    DunklRelations,
    Oracle,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Eigen,
        Check::Orthogonality,
        Check::Triangularity,
        Check::Normalization,
        Check::Integrality,
        Check::Positivity,
        Check::Commutator,
        Check::DunklRelations,
        Check::Oracle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Eigen => "eigen",
            Check::Orthogonality => "orthogonality",
            Check::Triangularity => "triangularity",
            Check::Normalization => "normalization",
            Check::Integrality => "integrality",
            Check::Positivity => "positivity",
            Check::Commutator => "commutator",
            Check::DunklRelations => "dunkl-relations",
            Check::Oracle => "oracle",
        }
    }

    pub fn parse(name: &str) -> Option<Check> {
        Check::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// Aggregated outcome of one check family.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: Check,
    pub pass: usize,
    pub fail: usize,
    /// Label and detail of the first failing unit, in generation order.
    pub first_failure: Option<String>,
}

impl CheckReport {
    fn render_line(&self) -> String {
        let total = self.pass + self.fail;
        let mut line = format!("{}: {}/{} pass", self.check.name(), self.pass, total);
        if self.fail > 0 {
            line.push_str(&format!(", {} fail", self.fail));
        }
        line
    }
}

#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub max_weight: u32,
    pub reports: Vec<CheckReport>,
}

impl VerifySummary {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.fail == 0)
    }

    /// Summary line with all counts, plus the first counterexample of each
    /// failing check in full on its own line.
    pub fn render(&self) -> String {
        let mut out = self
            .reports
            .iter()
            .map(CheckReport::render_line)
            .collect::<Vec<_>>()
            .join(", ");
        out.push('\n');
        for r in &self.reports {
            if let Some(cx) = &r.first_failure {
                out.push_str(&format!("first failure of {}: {}\n", r.check.name(), cx));
            }
        }
        out
    }
}

struct Unit {
    label: String,
    pass: bool,
    detail: String,
}

fn collect_units<T, F>(pool: &rayon::ThreadPool, items: Vec<T>, eval: F) -> Vec<Unit>
where
    T: Send,
    F: Fn(T) -> Unit + Sync + Send,
{
    pool.install(|| items.into_par_iter().map(eval).collect())
}

fn summarize(check: Check, units: Vec<Unit>) -> CheckReport {
    let pass = units.iter().filter(|u| u.pass).count();
    let fail = units.len() - pass;
    let first_failure = units.iter().find(|u| !u.pass).map(|u| {
        if u.detail.is_empty() {
            u.label.clone()
        } else {
            format!("{}: {}", u.label, u.detail)
        }
    });
    CheckReport {
        check,
        pass,
        fail,
        first_failure,
    }
}

/// Runs the selected checks over every nonempty partition of weight at most
/// `max_weight` (the commutator sweep also covers the empty partition), with
/// `jobs` parallel workers.
pub fn run_verify(max_weight: u32, checks: &[Check], jobs: usize) -> Result<VerifySummary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("worker pool");

    let per_partition = checks.iter().any(|c| {
        matches!(
            c,
            Check::Eigen
                | Check::Orthogonality
                | Check::Triangularity
                | Check::Normalization
                | Check::Integrality
                | Check::Positivity
                | Check::Oracle
        )
    });

    // Shared corpus: every J_lambda with n = |lambda|, computed once.
    let lambdas: Vec<Partition> = (1..=max_weight)
        .flat_map(|w| partitions_of(w, w as usize))
        .collect();
    let jacks: BTreeMap<Partition, JackResult> = if per_partition {
        let computed: Result<Vec<_>> = pool.install(|| {
            lambdas
                .par_iter()
                .map(|la| rodrigues_jack(la, la.weight() as usize))
                .collect()
        });
        computed?
            .into_iter()
            .map(|j| (j.lambda.clone(), j))
            .collect()
    } else {
        BTreeMap::new()
    };
    let oracle: BTreeMap<u32, BTreeMap<Partition, MExpansion>> = if checks.contains(&Check::Oracle)
    {
        let families: Result<Vec<_>> = pool.install(|| {
            (1..=max_weight)
                .into_par_iter()
                .map(|w| gram_schmidt_jack(w).map(|f| (w, f)))
                .collect()
        });
        families?.into_iter().collect()
    } else {
        BTreeMap::new()
    };

    let mut reports = Vec::new();
    for &check in checks {
        let units = match check {
            Check::Eigen => collect_units(&pool, lambdas.clone(), |la| Unit {
                label: format!("eigen({})", la),
                pass: check_eigen(&jacks[&la]),
                detail: String::new(),
            }),
            Check::Orthogonality => {
                let mut pairs = Vec::new();
                for w in 1..=max_weight {
                    let ps = partitions_of(w, w as usize);
                    for i in 0..ps.len() {
                        for j in (i + 1)..ps.len() {
                            pairs.push((ps[i].clone(), ps[j].clone()));
                        }
                    }
                }
                collect_units(&pool, pairs, |(la, mu)| {
                    let s = scalar_product(&jacks[&la].expansion, &jacks[&mu].expansion);
                    let (pass, detail) = match s {
                        Ok(v) if v.is_zero() => (true, String::new()),
                        Ok(v) => (false, format!("<J,J'> = {}", v.render())),
                        Err(e) => (false, e.to_string()),
                    };
                    Unit {
                        label: format!("orthogonality({}; {})", la, mu),
                        pass,
                        detail,
                    }
                })
            }
            Check::Triangularity => collect_units(&pool, lambdas.clone(), |la| {
                let pass = check_triangularity(&jacks[&la]).unwrap_or(false);
                Unit {
                    label: format!("triangularity({})", la),
                    pass,
                    detail: String::new(),
                }
            }),
            Check::Normalization => collect_units(&pool, lambdas.clone(), |la| {
                let pass = check_normalization(&jacks[&la]).unwrap_or(false);
                Unit {
                    label: format!("normalization({})", la),
                    pass,
                    detail: String::new(),
                }
            }),
            Check::Integrality => collect_units(&pool, lambdas.clone(), |la| {
                let (pass, detail) = match conjecture_report(&jacks[&la]) {
                    Ok(rep) => match rep.entries.iter().find(|e| !e.is_integer_poly) {
                        None => (true, String::new()),
                        Some(e) => (false, format!("v at mu = {} is {}", e.mu, e.v.render())),
                    },
                    Err(e) => (false, e.to_string()),
                };
                Unit {
                    label: format!("integrality({})", la),
                    pass,
                    detail,
                }
            }),
            Check::Positivity => collect_units(&pool, lambdas.clone(), |la| {
                let (pass, detail) = match conjecture_report(&jacks[&la]) {
                    Ok(rep) => match rep.entries.iter().find(|e| !e.is_nonneg_integer_poly) {
                        None => (true, String::new()),
                        Some(e) => (
                            false,
                            format!("tilde v at mu = {} is {}", e.mu, e.tilde_v.render()),
                        ),
                    },
                    Err(e) => (false, e.to_string()),
                };
                Unit {
                    label: format!("positivity({})", la),
                    pass,
                    detail,
                }
            }),
            Check::Commutator => {
                let mut triples = Vec::new();
                for w in 0..=max_weight {
                    for la in partitions_of(w, 4) {
                        for i in la.len().max(1)..=4 {
                            for n in i..=4 {
                                triples.push((la.clone(), i, n));
                            }
                        }
                    }
                }
                collect_units(&pool, triples, |(la, i, n)| {
                    let (pass, detail) = match check_commutator(&la, i, n) {
                        Ok(ok) => (ok, String::new()),
                        Err(e) => (false, e.to_string()),
                    };
                    Unit {
                        label: format!("commutator({}; i={}, n={})", la, i, n),
                        pass,
                        detail,
                    }
                })
            }
            Check::DunklRelations => {
                let items = dunkl_relation_items();
                collect_units(&pool, items, |item| item.run())
            }
            Check::Oracle => collect_units(&pool, lambdas.clone(), |la| {
                let expected = &oracle[&la.weight()][&la];
                let pass = &jacks[&la].expansion == expected;
                Unit {
                    label: format!("oracle({})", la),
                    pass,
                    detail: String::new(),
                }
            }),
        };
        reports.push(summarize(check, units));
    }
    Ok(VerifySummary {
        max_weight,
        reports,
    })
}

/// Randomized inputs for the two Dunkl-operator identities, generated from a
/// fixed seed before any parallel dispatch so runs are reproducible.
enum DunklItem {
    /// `(D_i D_j - D_j D_i) f = (D_j - D_i) K_ij f` for all pairs `i < j`
    /// on one monomial.
    Commutation { index: usize, f: MultiPoly },
    /// `(D_i + m)(D_j + m+1) f = (D_j + m)(D_i + m+1) f` for `m` in `0..=3`
    /// on one polynomial symmetric in `x_i, x_j`.
    Restricted {
        index: usize,
        f: MultiPoly,
        i: usize,
        j: usize,
    },
}

impl DunklItem {
    fn run(self) -> Unit {
        match self {
            DunklItem::Commutation { index, f } => {
                let n = f.num_vars();
                let mut pass = true;
                'outer: for i in 1..=n {
                    for j in (i + 1)..=n {
                        let dj = apply_dunkl(&f, j).unwrap();
                        let di = apply_dunkl(&f, i).unwrap();
                        let lhs = &apply_dunkl(&dj, i).unwrap() - &apply_dunkl(&di, j).unwrap();
                        let swapped = apply_swap(&f, i, j).unwrap();
                        let rhs =
                            &apply_dunkl(&swapped, j).unwrap() - &apply_dunkl(&swapped, i).unwrap();
                        if lhs != rhs {
                            pass = false;
                            break 'outer;
                        }
                    }
                }
                Unit {
                    label: format!("dunkl-commutation#{}", index),
                    pass,
                    detail: String::new(),
                }
            }
            DunklItem::Restricted { index, f, i, j } => {
                let shifted = |g: &MultiPoly, v: usize, m: u32| {
                    &apply_dunkl(g, v).unwrap() + &g.scale_int(m as i64)
                };
                let mut pass = true;
                for m in 0..=3u32 {
                    let lhs = shifted(&shifted(&f, j, m + 1), i, m);
                    let rhs = shifted(&shifted(&f, i, m + 1), j, m);
                    if lhs != rhs {
                        pass = false;
                        break;
                    }
                }
                Unit {
                    label: format!("dunkl-restricted#{}", index),
                    pass,
                    detail: String::new(),
                }
            }
        }
    }
}

fn dunkl_relation_items() -> Vec<DunklItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a11);
    let mut items = Vec::with_capacity(300);
    for index in 0..200 {
        let n = rng.random_range(2..=4usize);
        // random monomial of total degree at most 5
        let exps = loop {
            let e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=5u32)).collect();
            if e.iter().sum::<u32>() <= 5 {
                break e;
            }
        };
        let mut f = MultiPoly::zero(n);
        f.add_term(Monomial::new(exps), crate::alpha::AlphaRational::one());
        items.push(DunklItem::Commutation { index, f });
    }
    for index in 0..100 {
        let n = rng.random_range(2..=4usize);
        let i = rng.random_range(1..n);
        let j = rng.random_range((i + 1)..=n);
        let mut raw = MultiPoly::zero(n);
        for _ in 0..3 {
            let e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=3u32)).collect();
            let c = rng.random_range(-3..=3i64);
            raw.add_term(Monomial::new(e), crate::alpha::AlphaRational::from_int(c));
        }
        let f = &raw + &apply_swap(&raw, i, j).unwrap();
        items.push(DunklItem::Restricted { index, f, i, j });
    }
    items
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::parse(c.name()), Some(c));
        }
        assert_eq!(Check::parse("frobnicate"), None);
        assert_eq!(Check::parse(""), None);
    }

    #[test]
    fn weight_two_sweep_passes() {
        let summary = run_verify(2, &Check::ALL, 1).unwrap();
        assert!(summary.all_pass());
        // three nonempty partitions of weight <= 2
        let eigen = &summary.reports[0];
        assert_eq!(eigen.pass, 3);
        let dunkl = summary
            .reports
            .iter()
            .find(|r| r.check == Check::DunklRelations)
            .unwrap();
        assert_eq!(dunkl.pass, 300);
    }

    #[test]
    fn orthogonality_counts_equal_weight_pairs() {
        let summary = run_verify(3, &[Check::Orthogonality], 1).unwrap();
        // weight 2: 1 pair; weight 3: 3 pairs
        assert_eq!(summary.reports[0].pass, 4);
        assert!(summary.all_pass());
    }

    #[test]
    fn report_rendering() {
        let summary = run_verify(2, &[Check::Eigen, Check::Oracle], 1).unwrap();
        assert_eq!(summary.render(), "eigen: 3/3 pass, oracle: 3/3 pass\n");
    }

    #[test]
    fn failing_reports_render_counts_and_counterexample() {
        let summary = VerifySummary {
            max_weight: 3,
            reports: vec![
                CheckReport {
                    check: Check::Eigen,
                    pass: 5,
                    fail: 1,
                    first_failure: Some("eigen(2,1)".to_string()),
                },
                CheckReport {
                    check: Check::Oracle,
                    pass: 6,
                    fail: 0,
                    first_failure: None,
                },
            ],
        };
        assert!(!summary.all_pass());
        assert_eq!(
            summary.render(),
            "eigen: 5/6 pass, 1 fail, oracle: 6/6 pass\nfirst failure of eigen: eigen(2,1)\n"
        );
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let a = run_verify(3, &Check::ALL, 1).unwrap().render();
        let b = run_verify(3, &Check::ALL, 4).unwrap().render();
        assert_eq!(a, b);
    }
}
