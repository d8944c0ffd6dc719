//! The verification suite behind `dicyclic verify`.
//!
//! Each check compares a criterion against a brute-force recomputation, one
//! work item per `n`. Work items run in parallel and are merged in input order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use dicyclic::automorphism::{
    count_square_roots_of_unity, enumerate_automorphisms_bruteforce, enumerate_rs_automorphisms,
    isomorphy_classes, make_rs, RsAutomorphism,
};
use dicyclic::group::{cayley_table, center};
use dicyclic::space::{build_space_report, closed_form, coset_bijection_check};
use dicyclic::{oracle, Automorphism, GroupMap, GroupParams};

use crate::commands::{inventory, params};
use crate::error::CliError;

/// Deliberate defects used to confirm the suite catches them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Composition drops the `r` factor: `(rp, s + q)`.
    ComposeLaw,
}

pub const CHECKS: [&str; 13] = [
    "group axioms",
    "center",
    "element orders",
    "parametrization completeness",
    "compose coherence",
    "order criterion",
    "involution criterion",
    "inner criterion",
    "isomorphy vs conjugacy",
    "square roots of unity",
    "closed form vs oracle",
    "orbit structure",
    "coset law",
];

/// Largest `n` for which isomorphy classes are compared with Aut-conjugacy.
pub const CONJUGACY_LIMIT: u32 = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckResult {
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl CheckResult {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(what());
            }
        }
    }

    fn merge(&mut self, other: CheckResult) {
        self.passed += other.passed;
        self.failed += other.failed;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub n_min: i64,
    pub n_max: i64,
    /// One entry per name in [`CHECKS`], in that order.
    pub checks: Vec<(&'static str, CheckResult)>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.failed == 0)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|(_, c)| c.failed > 0)
            .map(|(name, _)| *name)
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = format!("verify n = {}..{}\n", self.n_min, self.n_max);
        let width = CHECKS.iter().map(|c| c.len()).max().unwrap_or(0);
        for (name, c) in &self.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  [{status}] {name:<width$}  {} passed, {} failed",
                c.passed, c.failed
            );
            if let Some(example) = &c.first_counterexample {
                let _ = writeln!(out, "         first counterexample: {example}");
            }
        }
        if self.all_passed() {
            out.push_str("all checks passed\n");
        } else {
            let _ = writeln!(out, "failed: {}", self.failing().join(", "));
        }
        out
    }
}

type ComposeLaw = fn(&RsAutomorphism, &RsAutomorphism) -> RsAutomorphism;

fn correct_compose(phi: &RsAutomorphism, psi: &RsAutomorphism) -> RsAutomorphism {
    phi.compose(psi).expect("same group")
}

fn faulty_compose(phi: &RsAutomorphism, psi: &RsAutomorphism) -> RsAutomorphism {
    let p = phi.params();
    make_rs(
        phi.r() as i64 * psi.r() as i64,
        phi.s() as i64 + psi.s() as i64,
        p,
    )
    .expect("product of units is a unit")
}

/// Run every check for `n_min..=n_max`.
pub fn cmd_verify(n_min: i64, n_max: i64, fault: Option<Fault>) -> Result<VerifySummary, CliError> {
    if n_min < 2 || n_max < n_min {
        return Err(CliError::Usage(format!(
            "need 2 <= n-min <= n-max, got {n_min}..{n_max}"
        )));
    }
    let law: ComposeLaw = match fault {
        None => correct_compose,
        Some(Fault::ComposeLaw) => faulty_compose,
    };
    let per_n: Vec<Vec<CheckResult>> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| verify_one(params(n)?, law))
        .collect::<Result<_, CliError>>()?;
    let mut checks: Vec<(&'static str, CheckResult)> = CHECKS
        .iter()
        .map(|name| (*name, CheckResult::default()))
        .collect();
    for results in per_n {
        for (slot, result) in checks.iter_mut().zip(results) {
            slot.1.merge(result);
        }
    }
    Ok(VerifySummary {
        n_min,
        n_max,
        checks,
    })
}

fn verify_one(p: GroupParams, law: ComposeLaw) -> Result<Vec<CheckResult>, CliError> {
    let n = p.n();
    let mut out = vec![CheckResult::default(); CHECKS.len()];
    let elems: Vec<_> = p.elements().collect();
    let table = cayley_table(p);
    let rs = enumerate_rs_automorphisms(p);
    let all: Vec<Automorphism> = inventory(p).into_iter().map(|e| e.phi).collect();

    out[0].record(
        table.is_latin_square() && table.associativity_counterexample().is_none(),
        || format!("n={n}: Cayley table is not a group table"),
    );

    let commutant: BTreeSet<_> = elems
        .iter()
        .filter(|g| elems.iter().all(|h| **g * *h == *h * **g))
        .copied()
        .collect();
    out[1].record(commutant == center(p), || {
        format!("n={n}: center differs from commutant")
    });

    for (i, g) in elems.iter().enumerate() {
        out[2].record(table.element_order(i) == g.order() as usize, || {
            format!("n={n}: order of {g}")
        });
    }

    let brute: BTreeSet<_> = enumerate_automorphisms_bruteforce(p)
        .into_iter()
        .map(|t| t.images())
        .collect();
    let family: BTreeSet<_> = all.iter().map(|phi| phi.images()).collect();
    out[3].record(brute == family, || {
        format!(
            "n={n}: {} maps by search, {} listed",
            brute.len(),
            family.len()
        )
    });

    let gens = [p.x(), p.y()];
    for phi in &rs {
        for psi in &rs {
            let c = law(phi, psi);
            let ok = gens.iter().all(|g| c.image(g) == phi.image(&psi.image(g)));
            out[4].record(ok, || format!("n={n}: {phi} o {psi} gave {c}"));
        }
    }

    for phi in &rs {
        let order = oracle::pointwise_order(phi);
        for k in 1..=2 * n as i64 {
            let ok = phi.order_divides(k)? == (k as u64).is_multiple_of(order);
            out[5].record(ok, || format!("n={n}: {phi} k={k}"));
        }
        out[6].record(phi.is_involution() == (order == 2), || {
            format!("n={n}: {phi}")
        });
    }

    for phi in &all {
        let found = oracle::conjugator_search(phi);
        out[7].record(phi.is_inner() == found.is_some(), || {
            format!("n={n}: {phi}")
        });
    }

    if p.rs_family_complete() && n <= CONJUGACY_LIMIT {
        let tables: Vec<_> = rs.iter().map(RsAutomorphism::to_table).collect();
        let conj: BTreeSet<Vec<RsAutomorphism>> = oracle::aut_conjugacy_classes(&tables)?
            .into_iter()
            .map(|class| class.into_iter().map(|i| rs[i]).collect())
            .collect();
        let iso: BTreeSet<Vec<RsAutomorphism>> = isomorphy_classes(p)?.into_iter().collect();
        out[8].record(conj == iso, || {
            format!("n={n}: isomorphy classes differ from conjugacy classes")
        });
    }

    let roots = oracle::square_roots_of_unity(p.modulus() as u64).len() as u64;
    out[9].record(count_square_roots_of_unity(p) == roots, || {
        format!(
            "n={n}: formula {} vs {roots}",
            count_square_roots_of_unity(p)
        )
    });

    for phi in &all {
        match build_space_report(phi) {
            Ok(report) => {
                out[10].record(true, String::new);
                let g_ok = report.g_orbits.len() == 1 && report.g_orbits[0] == report.q;
                let h_ok = match phi.as_rs() {
                    Some(rs) => closed_form::h_orbits(&rs) == oracle::h_orbits(phi)?,
                    None => report.h_orbits == oracle::h_orbits(phi)?,
                };
                out[11].record(g_ok && h_ok, || format!("n={n}: orbits of {phi}"));
                if report.involution {
                    let ok =
                        coset_bijection_check(phi)? && report.q.len() * report.h.len() == p.order();
                    out[12].record(ok, || {
                        format!("n={n}: {phi} |Q|={} |H|={}", report.q.len(), report.h.len())
                    });
                }
            }
            Err(e) => out[10].record(false, || format!("n={n}: {phi}: {e}")),
        }
    }

    Ok(out)
}
