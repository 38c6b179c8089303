//! Threshold certificates for partitions whose shifts `λ + (kⁿ)` avoid
//! degenerate tilting summands, via two routes: the fundamental alcove
//! `C₀` when `n < p`, and tracking `λ_1 − λ_2` through tensor steps when
//! `n = 2`. Also the bound on `k` beyond which length-two extensions split.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::partitions::{enumerate_partitions, p_adic, PAdicExpansion, Partition};

/// Which base-`p` pattern of `m` governs the step `m ↦ m'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaCase {
    /// `i₀ = p − 1`
    TopDigit,
    /// `0 ≤ i₀ ≤ p − 3`, only for `p > 2`
    LowDigit,
    /// `i₀ = p − 2`
    SecondDigit,
}

/// Possible values of `μ_1 − μ_2` when `P(μ)` is a summand of `P(λ) ⊗ E`
/// and `m = λ_1 − λ_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaCandidateSet {
    pub m: u64,
    pub p: u32,
    pub case: DeltaCase,
    /// First index `s ≥ 1` with `i_s < p − 1` (second-digit case only).
    pub t: Option<u32>,
    /// `Σ_{s>t} i_s p^{s−t−1}` (second-digit case only).
    pub sigma: Option<u64>,
    pub candidates: BTreeSet<u64>,
}

pub fn delta_candidates(m: u64, field: PrimeField) -> DeltaCandidateSet {
    let p = field.modulus();
    let pp = p as i128;
    let digits: PAdicExpansion = p_adic(m, field);
    let i0 = digits.digit(0);
    let mi = m as i128;
    let mut raw: Vec<i128> = Vec::new();
    let (case, t, sigma) = if i0 == p - 1 {
        raw.push(mi + 1);
        (DeltaCase::TopDigit, None, None)
    } else if p > 2 && i0 <= p - 3 {
        raw.push(mi + 1);
        raw.push(mi - 1);
        (DeltaCase::LowDigit, None, None)
    } else {
        let t = (1..).find(|&s| digits.digit(s) < p - 1).expect("digits eventually vanish") as u32;
        let it = digits.digit(t as usize);
        let sigma = m / (p as u64).pow(t + 1);
        debug_assert_eq!(mi + 2, (it as i128 + 1) * pp.pow(t) + sigma as i128 * pp.pow(t + 1));
        raw.push(mi + 1);
        // for p = 2 the steps are p^{t−1} and p^t rather than twice those
        let scale = if p > 2 { 2 } else { 1 };
        raw.push(mi + 1 - scale * pp.pow(t - 1));
        let further = if p > 2 { (it == 1 && sigma > 0) || it >= 2 } else { sigma > 0 };
        if further {
            raw.push(mi + 1 - scale * pp.pow(t));
        }
        (DeltaCase::SecondDigit, Some(t), Some(sigma))
    };
    let candidates = raw.into_iter().filter(|&x| x >= 0).map(|x| x as u64).collect();
    DeltaCandidateSet { m, p, case, t, sigma, candidates }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Counterexample {
    Partition(Partition),
    Delta { m: u64, candidate: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Alcove,
    TwoPart,
}

/// Machine-readable result shared by certificates and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub route: Route,
    pub lambda: Option<Partition>,
    pub p: u32,
    pub n: usize,
    pub a: Option<u64>,
    pub k: Option<u32>,
    pub swept_range: Option<[u64; 2]>,
    pub counterexamples: Vec<Counterexample>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks that every candidate successor of every `m ∈ [p^k − 1, m_max]`
/// stays at least `p^k − 1`.
pub fn invariant_preserved(field: PrimeField, k: u32, m_max: u64) -> Result<ConditionReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let threshold =
        (field.modulus() as u64).checked_pow(k).ok_or_else(|| Error::InvalidArgument("p^k overflows".into()))? - 1;
    let mut counterexamples = Vec::new();
    for m in threshold..=m_max {
        let set = delta_candidates(m, field);
        counterexamples.extend(
            set.candidates.iter().filter(|&&c| c < threshold).map(|&candidate| Counterexample::Delta { m, candidate }),
        );
    }
    Ok(ConditionReport {
        route: Route::TwoPart,
        lambda: None,
        p: field.modulus(),
        n: 2,
        a: None,
        k: Some(k),
        swept_range: Some([threshold, m_max]),
        counterexamples,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionOneCertificate {
    pub lambda: Partition,
    pub n: usize,
    pub p: u32,
    pub a: u64,
    pub route: Route,
    pub k: Option<u32>,
}

impl ConditionOneCertificate {
    pub fn report(&self) -> ConditionReport {
        ConditionReport {
            route: self.route,
            lambda: Some(self.lambda.clone()),
            p: self.p,
            n: self.n,
            a: Some(self.a),
            k: self.k,
            swept_range: None,
            counterexamples: Vec::new(),
        }
    }
}

/// Minimal `k ≥ 1` with `λ_1 − λ_2 < p^k − 1`, and `a = max(0, p^k − 1 − r)`.
pub fn certificate_two_part(lambda: &Partition, field: PrimeField) -> Result<ConditionOneCertificate> {
    if lambda.len() > 2 {
        return Err(Error::TooManyParts { parts: lambda.len(), n: 2 });
    }
    let p = field.modulus() as u64;
    let m = (lambda.part(0) - lambda.part(1)) as u64;
    let r = lambda.size() as u64;
    let mut k = 1u32;
    let mut pk = p;
    while m >= pk - 1 {
        k += 1;
        pk = pk.checked_mul(p).ok_or_else(|| Error::InvalidArgument("p^k overflows".into()))?;
    }
    debug_assert!(m < pk - 1);
    Ok(ConditionOneCertificate {
        lambda: lambda.clone(),
        n: 2,
        p: field.modulus(),
        a: (pk - 1).saturating_sub(r),
        route: Route::TwoPart,
        k: Some(k),
    })
}

/// Minimal `a ≥ 0` with `r + a·n ≥ (n−1)(p−n) + 1`, for `λ ∈ C₀(r)`, `n < p`.
pub fn certificate_alcove(lambda: &Partition, n: usize, field: PrimeField) -> Result<ConditionOneCertificate> {
    if !lambda.in_c0(field.modulus(), n)? {
        return Err(Error::NotInAlcove(lambda.to_string()));
    }
    let need = alcove_threshold(n, field);
    let r = lambda.size() as u64;
    let a = need.saturating_sub(r).div_ceil(n as u64);
    Ok(ConditionOneCertificate { lambda: lambda.clone(), n, p: field.modulus(), a, route: Route::Alcove, k: None })
}

/// `(n−1)(p−n) + 1`: from this size on, degenerate partitions leave `C₀`.
pub fn alcove_threshold(n: usize, field: PrimeField) -> u64 {
    let p = field.modulus() as u64;
    (n as u64 - 1) * (p - n as u64) + 1
}

/// Smallest integer `k ≥ r²/n + (2r+1)a + a²n`.
pub fn splitting_bound(r: u64, n: u64, a: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let rest = (2 * r + 1) * a + a * a * n;
    Ok((r * r).div_ceil(n) + rest)
}

/// Lists degenerate `μ ⊢ R` (at most `n − 1` nonzero parts) lying in `C₀(R)`
/// for each `R` in `sizes`.
pub fn degenerate_alcove_sweep(field: PrimeField, n: usize, sizes: RangeInclusive<usize>) -> Result<ConditionReport> {
    if n < 2 || n as u64 >= field.modulus() as u64 {
        return Err(Error::RegionUndefined { n, p: field.modulus() });
    }
    let mut counterexamples = Vec::new();
    for size in sizes.clone() {
        for mu in enumerate_partitions(size, n - 1) {
            debug_assert!(mu.is_degenerate(n));
            if mu.in_c0(field.modulus(), n)? {
                counterexamples.push(Counterexample::Partition(mu));
            }
        }
    }
    Ok(ConditionReport {
        route: Route::Alcove,
        lambda: None,
        p: field.modulus(),
        n,
        a: None,
        k: None,
        swept_range: Some([*sizes.start() as u64, *sizes.end() as u64]),
        counterexamples,
    })
}
