//! Cross-checks the determinant rule against straightening and the
//! power-sum oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::expansion::SignedSchurExpansion;
use crate::partition::{partitions_of, Partition};
use crate::plethysm::{pnhk_times_schur, straightening_expansion};
use crate::symfunc::{p_multiply, p_to_schur, plethysm_pn_hk, schur_to_p};

/// Default upper bound on `max_degree`.
pub const DEFAULT_DEGREE_CEILING: usize = 12;

pub const MAX_N: usize = 4;
pub const MAX_K: usize = 3;
pub const MAX_MU_WEIGHT: usize = 6;

/// Extra random cases drawn past the exhaustive `|μ|` bound.
pub const RANDOM_CASES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    pub mu: Partition,
    pub lambda: Partition,
    pub determinant: String,
    pub straightening: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_degree: usize,
    pub seed: u64,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `(p_n ∘ h_k) s_μ` through the character table.
pub fn oracle_expansion(n: usize, k: usize, mu: &Partition) -> SignedSchurExpansion {
    p_to_schur(&p_multiply(&plethysm_pn_hk(n, k), &schur_to_p(mu))).expect("products of Schur functions are Schur-integral")
}

/// Compares the three expansions of `(p_n ∘ h_k) s_μ`; on disagreement
/// reports the first `λ` (in output order) where they differ.
pub fn check_case(n: usize, k: usize, mu: &Partition) -> Option<Counterexample> {
    let by_det = pnhk_times_schur(n, k, mu);
    let by_straightening = straightening_expansion(n, k, mu);
    let by_oracle = oracle_expansion(n, k, mu);
    if by_det == by_straightening && by_det == by_oracle {
        return None;
    }
    let mut keys: Vec<Partition> =
        by_det.keys().chain(by_straightening.keys()).chain(by_oracle.keys()).cloned().collect();
    keys.sort_unstable_by(|a, b| b.cmp(a));
    keys.dedup();
    let lambda = keys.into_iter().find(|lam| {
        let c = by_det.coefficient(lam);
        c != by_straightening.coefficient(lam) || c != by_oracle.coefficient(lam)
    })?;
    Some(Counterexample {
        n,
        k,
        mu: mu.clone(),
        determinant: by_det.coefficient(&lambda).to_string(),
        straightening: by_straightening.coefficient(&lambda).to_string(),
        oracle: by_oracle.coefficient(&lambda).to_string(),
        lambda,
    })
}

/// Every `(n, k, μ)` with `n <= 4`, `k <= 3`, `|μ| <= 6` and
/// `nk + |μ| <= max_degree`. `k = 0` does not depend on `n` and is listed
/// once per `μ`.
pub fn exhaustive_cases(max_degree: usize) -> Vec<(usize, usize, Partition)> {
    let mut out = Vec::new();
    for size in 0..=MAX_MU_WEIGHT.min(max_degree) {
        for mu in partitions_of(size, None) {
            out.push((1, 0, mu.clone()));
            for n in 1..=MAX_N {
                for k in 1..=MAX_K {
                    if n * k + size <= max_degree {
                        out.push((n, k, mu.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Random `(n, k, μ)` with `k >= 1` and `nk + |μ| <= max_degree`, where `μ`
/// may be larger than the exhaustive bound.
pub fn random_cases(max_degree: usize, seed: u64, count: usize) -> Vec<(usize, usize, Partition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if max_degree == 0 {
        return out;
    }
    while out.len() < count {
        let n = rng.gen_range(1..=MAX_N);
        let k = rng.gen_range(1..=MAX_K);
        if n * k > max_degree {
            continue;
        }
        let size = rng.gen_range(0..=max_degree - n * k);
        let mu = partitions_of(size, None).choose(&mut rng).cloned().expect("every size has a partition");
        out.push((n, k, mu));
    }
    out
}

pub fn run(max_degree: usize, seed: u64) -> VerifyReport {
    let mut cases = 0;
    let all = exhaustive_cases(max_degree).into_iter().chain(random_cases(max_degree, seed, RANDOM_CASES));
    for (n, k, mu) in all {
        cases += 1;
        if let Some(bad) = check_case(n, k, &mu) {
            return VerifyReport { max_degree, seed, cases, counterexample: Some(bad) };
        }
    }
    VerifyReport { max_degree, seed, cases, counterexample: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn degree_zero_is_one_case() {
        let report = run(0, 7);
        assert!(report.passed());
        assert_eq!(report.cases, 1);
    }

    #[test]
    fn small_degrees_pass() {
        let report = run(6, 1);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.cases, exhaustive_cases(6).len() + RANDOM_CASES);
    }

    #[test]
    fn random_cases_are_reproducible() {
        assert_eq!(random_cases(10, 42, 8), random_cases(10, 42, 8));
        for (n, k, mu) in random_cases(10, 3, 50) {
            assert!(k >= 1 && n * k + mu.weight() <= 10);
        }
    }

    #[test]
    fn counterexample_points_at_first_difference() {
        assert_eq!(check_case(2, 2, &part![1]), None);
    }
}
