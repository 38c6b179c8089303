//! The regression battery behind `spechtkit suite`.
//!
//! Checks run on scoped threads; results are collected in declaration order
//! so the output never depends on scheduling.

use serde::Serialize;

use spechtkit::condition1::{
    alcove_threshold, certificate_alcove, certificate_two_part, degenerate_alcove_sweep, invariant_preserved,
    splitting_bound,
};
use spechtkit::partitions::enumerate_partitions;
use spechtkit::perm::factorial;
use spechtkit::schurweyl::{image_rank, kernel_ideal_check};
use spechtkit::updown::{verify_radical_identities, verify_updown_laws};
use spechtkit::wordspace::{dim_irreducible, radical_module, specht_module, weight_space_dim};
use spechtkit::{GModule, Guard, Partition, PrimeField, WordSpace};

use crate::report::{Params, Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

/// Builds `S^λ` in `F_n^r`; swappable so the battery can be tested against
/// a broken construction.
pub type SpechtBuilder = fn(&Partition, usize, PrimeField, Guard) -> spechtkit::Result<GModule>;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub profile: Profile,
    pub specht: SpechtBuilder,
}

impl SuiteConfig {
    pub fn new(profile: Profile) -> Self {
        Self { profile, specht: specht_module }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&SuiteConfig) -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("dim-specht", dim_specht),
    ("weight-spaces", weight_spaces),
    ("dim-irreducible", irreducible),
    ("updown-laws", updown_laws),
    ("down-radical", down_radical),
    ("induced-radical", induced_radical),
    ("schur-weyl-kernel", schur_weyl),
    ("image-rank", isomorphism_rank),
    ("delta-invariant", delta_invariant),
    ("alcove-sweep", alcove_sweep),
    ("certificates", certificates),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

pub fn run_suite(config: &SuiteConfig) -> Vec<CheckResult> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = CHECKS.iter().map(|&(name, check)| (name, scope.spawn(move || check(config)))).collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let outcome = h.join().unwrap_or_else(|_| Err("check panicked".into()));
                match outcome {
                    Ok(detail) => CheckResult { name, passed: true, detail },
                    Err(detail) => CheckResult { name, passed: false, detail },
                }
            })
            .collect()
    })
}

pub fn suite_report(config: &SuiteConfig) -> Report {
    let results = run_suite(config);
    let mut report = Report::new("suite", Params::default()).input("profile", config.profile);
    let mut table = Table::new(&["status", "check", "detail"]);
    for res in &results {
        report.check(res.name, res.passed);
        let status = if res.passed { "PASS" } else { "FAIL" };
        table.push(vec![status.into(), res.name.into(), res.detail.clone()]);
    }
    report.output("checks", &results);
    report.output("total", results.len());
    report.output("failed", results.iter().filter(|r| !r.passed).count());
    report.table = Some(table);
    report
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("small primes")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn full(c: &SuiteConfig) -> bool {
    c.profile == Profile::Full
}

fn primes(c: &SuiteConfig) -> &'static [u64] {
    if full(c) {
        &[2, 3, 5]
    } else {
        &[2, 3]
    }
}

fn lib<T>(r: spechtkit::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn dim_specht(c: &SuiteConfig) -> Result<String, String> {
    let (max_n, max_r) = if full(c) { (4, 8) } else { (3, 6) };
    let mut count = 0;
    for &p in primes(c) {
        for n in 1..=max_n {
            for r in 0..=max_r {
                for lam in enumerate_partitions(r, n) {
                    let dim = lib((c.specht)(&lam, n, gf(p), Guard::default()))?.dim();
                    let expected = lam.count_standard_tableaux() as usize;
                    ensure(dim == expected, || format!("S^({lam}) has dim {dim}, expected {expected} (n={n}, p={p})"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} modules"))
}

fn weight_spaces(c: &SuiteConfig) -> Result<String, String> {
    let (max_n, max_r) = if full(c) { (4, 10) } else { (3, 6) };
    let mut count = 0;
    for n in 1..=max_n {
        for r in 0..=max_r {
            let space = lib(WordSpace::new(n, r, Guard::default()))?;
            let mut total = 0;
            for w in compositions(r as u32, n) {
                let d = lib(weight_space_dim(r, n, &w))?;
                let expected = w.iter().fold(factorial(r), |acc, &x| acc / factorial(x as usize));
                ensure(d == expected, || format!("weight {w:?} has {d} words, expected {expected}"))?;
                total += d;
                count += 1;
            }
            ensure(total == space.dim(), || format!("weights of F_{n}^{r} do not cover it"))?;
        }
    }
    Ok(format!("{count} weights"))
}

fn compositions(r: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![r]];
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn irreducible(_: &SuiteConfig) -> Result<String, String> {
    let known = [("2,1", 3, 1), ("2,1", 2, 2), ("3,1", 2, 2), ("2,2", 3, 1), ("3,2", 3, 1), ("4,1", 5, 3)];
    for (lam, p, expected) in known {
        let lam: Partition = lam.parse().unwrap();
        let d = lib(dim_irreducible(&lam, lam.len(), gf(p), Guard::default()))?;
        ensure(d == expected, || format!("D^({lam}) at p={p} has dim {d}, expected {expected}"))?;
    }
    Ok(format!("{} values", known.len()))
}

fn updown_laws(c: &SuiteConfig) -> Result<String, String> {
    let max_r = if full(c) { 4 } else { 3 };
    let n = 2;
    let mut count = 0;
    for p in [2, 3] {
        let field = gf(p);
        for r in 2..=max_r {
            let mut modules = vec![GModule::zero(lib(WordSpace::new(n, r, Guard::default()))?, field)];
            for lam in enumerate_partitions(r, n) {
                modules.push(lib(specht_module(&lam, n, field, Guard::default()))?);
                if lam.is_p_regular(p as u32) {
                    modules.push(lib(radical_module(&lam, n, field, Guard::default()))?);
                }
            }
            for u in &modules {
                let rep = lib(verify_updown_laws(u, Guard::default()))?;
                ensure(rep.all_hold(), || {
                    format!(
                        "laws fail for {} {:?} at r={r}, p={p}",
                        u.kind().as_str(),
                        u.partition().map(|l| l.to_string())
                    )
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} modules"))
}

fn down_radical(c: &SuiteConfig) -> Result<String, String> {
    let max = if full(c) { 8 } else { 6 };
    let n = 2;
    let mut count = 0;
    for &p in primes(c) {
        for size in n..=max {
            for nu in enumerate_partitions(size, n) {
                if nu.is_degenerate(n) || !nu.is_p_regular(p as u32) {
                    continue;
                }
                let rep = lib(verify_radical_identities(&nu, n, gf(p), false, Guard::default()))?;
                ensure(rep.down_equal, || {
                    format!("P^({nu}) restricts to {} dims, not P^({})", rep.dim_down, rep.lower)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} partitions"))
}

fn induced_radical(c: &SuiteConfig) -> Result<String, String> {
    let cases: &[&str] = if full(c) { &["3,3", "4,3"] } else { &["3,3"] };
    for nu in cases {
        let nu: Partition = nu.parse().unwrap();
        let rep = lib(verify_radical_identities(&nu, 2, gf(3), true, Guard::default()))?;
        ensure(rep.up_equal == Some(true), || format!("P^({})↑ differs from P^({nu})", rep.lower))?;
    }
    Ok(format!("{} instances", cases.len()))
}

fn schur_weyl(c: &SuiteConfig) -> Result<String, String> {
    let cases: &[(usize, usize)] =
        if full(c) { &[(2, 3), (2, 4), (2, 5), (3, 4), (3, 5)] } else { &[(2, 3), (2, 4), (3, 4)] };
    let mut count = 0;
    for &p in primes(c) {
        for &(n, r) in cases {
            let rep = lib(kernel_ideal_check(r, n, gf(p), Guard::default()))?;
            ensure(rep.equal, || {
                format!("kernel ({}) ≠ ideal ({:?}) for r={r}, n={n}, p={p}", rep.kernel_dim, rep.ideal_dim)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn isomorphism_rank(c: &SuiteConfig) -> Result<String, String> {
    let max_n = if full(c) { 4 } else { 3 };
    let mut count = 0;
    for &p in primes(c) {
        for n in 1..=max_n {
            for r in 0..=n {
                let rank = lib(image_rank(r, n, gf(p), Guard::default()))?;
                ensure(rank == factorial(r), || format!("σ_{r} has rank {rank} for n={n}, p={p}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances"))
}

fn delta_invariant(c: &SuiteConfig) -> Result<String, String> {
    let m_max = if full(c) { 10_000 } else { 1_000 };
    for p in [2, 3, 5] {
        for k in 1..=3 {
            let rep = lib(invariant_preserved(gf(p), k, m_max))?;
            ensure(rep.passed(), || format!("p={p}, k={k}: {} counterexamples", rep.counterexamples.len()))?;
        }
    }
    Ok(format!("m ≤ {m_max}"))
}

fn alcove_sweep(c: &SuiteConfig) -> Result<String, String> {
    let ps: &[u64] = if full(c) { &[3, 5, 7] } else { &[3, 5] };
    let mut count = 0;
    for &p in ps {
        for n in 2..p as usize {
            let lo = alcove_threshold(n, gf(p)) as usize;
            let rep = lib(degenerate_alcove_sweep(gf(p), n, lo..=lo + 19))?;
            ensure(rep.passed(), || format!("p={p}, n={n}: {} counterexamples", rep.counterexamples.len()))?;
            count += 1;
        }
    }
    Ok(format!("{count} sweeps"))
}

fn certificates(_: &SuiteConfig) -> Result<String, String> {
    let part = |s: &str| -> Partition { s.parse().unwrap() };
    let c = lib(certificate_two_part(&part("1"), gf(2)))?;
    ensure((c.k, c.a) == (Some(2), 2), || "two-part (1) at p=2".into())?;
    let c = lib(certificate_two_part(&part("3,1"), gf(2)))?;
    ensure((c.k, c.a) == (Some(2), 0), || "two-part (3,1) at p=2".into())?;
    ensure(lib(certificate_alcove(&part("3,2"), 2, gf(5)))?.a == 0, || "alcove (3,2)".into())?;
    ensure(lib(certificate_alcove(&part("1,1,1"), 3, gf(5)))?.a == 1, || "alcove (1,1,1)".into())?;
    ensure(lib(certificate_alcove(&Partition::empty(), 2, gf(3)))?.a == 1, || "alcove ()".into())?;
    for (r, n, a, k) in [(2, 2, 1, 9), (2, 2, 0, 2), (5, 2, 2, 43)] {
        ensure(lib(splitting_bound(r, n, a))? == k, || format!("bound ({r},{n},{a})"))?;
    }
    Ok("8 values".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names = check_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn quick_profile_passes() {
        let results = run_suite(&SuiteConfig::new(Profile::Quick));
        let failing: Vec<_> = results.iter().filter(|r| !r.passed).collect();
        assert!(failing.is_empty(), "{failing:?}");
        assert_eq!(results.iter().map(|r| r.name).collect::<Vec<_>>(), check_names());
    }
}
