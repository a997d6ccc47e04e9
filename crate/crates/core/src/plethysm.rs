//! The determinant rule for `(p_n ∘ h_k) s_μ` and what is built on it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{EPolynomial, SignedSchurExpansion};
use crate::matrix::{build_m, det};
use crate::partition::{compositions_of, partitions_containing, partitions_of, Partition, SkewShape};
use crate::strip::{classify, is_border_strip, spin, StripKind};
use crate::symfunc::schur_to_e;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StraightenResult {
    Zero,
    Signed { sign: i32, partition: Partition },
}

/// Rewrites the Schur symbol of an integer sequence `α` as `0` or `±s_λ`:
/// sort `α + δ` into decreasing order and subtract `δ` again, where
/// `δ = (l-1, ..., 1, 0)`.
pub fn straighten(alpha: &[i64]) -> StraightenResult {
    let l = alpha.len() as i64;
    let mut shifted: Vec<i64> = alpha.iter().enumerate().map(|(i, &a)| a + l - 1 - i as i64).collect();
    if shifted.iter().any(|&x| x < 0) {
        return StraightenResult::Zero;
    }
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..shifted.len() {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return StraightenResult::Zero;
    }
    let parts = shifted.iter().enumerate().map(|(i, &x)| (x - (l - 1 - i as i64)) as usize).collect();
    let partition = Partition::new(parts).expect("straightened sequence is weakly decreasing");
    StraightenResult::Signed { sign: if swaps % 2 == 0 { 1 } else { -1 }, partition }
}

/// Coefficient of `s_λ` in `(p_n ∘ h_k) s_μ` by straightening every
/// `λ - nν` with `ν ⊨ k` of length `ℓ(λ)`.
pub fn mn_coefficient_straightening(lam: &Partition, mu: &Partition, n: usize, k: usize) -> Result<BigInt> {
    if lam.weight() != mu.weight() + n * k {
        return Err(Error::WeightMismatch { left: lam.weight(), right: mu.weight() + n * k });
    }
    let l = lam.length();
    let mut total = 0i64;
    for nu in compositions_of(k, l) {
        let alpha: Vec<i64> = (0..l).map(|i| lam.part(i) as i64 - (n * nu.parts[i]) as i64).collect();
        if let StraightenResult::Signed { sign, partition } = straighten(&alpha) {
            if &partition == mu {
                total += i64::from(sign);
            }
        }
    }
    Ok(BigInt::from(total))
}

/// Every `λ ⊢ |μ| + nk` with `μ ⊆ λ` that the skew `λ/μ` can fit in.
fn candidates(n: usize, k: usize, mu: &Partition) -> Vec<Partition> {
    partitions_containing(mu, mu.weight() + n * k, mu.first() + n * k, mu.length() + n * k)
}

/// `(p_n ∘ h_k) s_μ = Σ_λ det M(λ/μ) s_λ`.
pub fn pnhk_times_schur(n: usize, k: usize, mu: &Partition) -> SignedSchurExpansion {
    if k == 0 {
        return SignedSchurExpansion::monomial(mu.clone(), BigInt::one());
    }
    candidates(n, k, mu)
        .into_iter()
        .map(|lam| {
            let d = det(&build_m(&lam, mu, n).expect("candidate contains μ"));
            (lam, d)
        })
        .collect()
}

/// `(p_n ∘ h_k) s_μ` from [`mn_coefficient_straightening`].
pub fn straightening_expansion(n: usize, k: usize, mu: &Partition) -> SignedSchurExpansion {
    let mut out = SignedSchurExpansion::zero();
    for lam in partitions_of(mu.weight() + n * k, None) {
        let c = mn_coefficient_straightening(&lam, mu, n, k).expect("weights match by construction");
        out.add_term(lam, c);
    }
    out
}

/// `p_r s_μ`.
pub fn classical_mn(r: usize, mu: &Partition) -> SignedSchurExpansion {
    pnhk_times_schur(r, 1, mu)
}

/// `p_r s_μ = Σ (-1)^{spin(λ/μ)} s_λ` over border strips `λ/μ` of size `r`,
/// found by testing every partition containing `μ`.
pub fn strip_mn_reference(r: usize, mu: &Partition) -> SignedSchurExpansion {
    partitions_containing(mu, mu.weight() + r, mu.first() + r, mu.length() + r)
        .into_iter()
        .filter_map(|lam| {
            let s = SkewShape::new(lam.clone(), mu.clone()).ok()?;
            let sign = if is_border_strip(&s) { spin(&s).ok()? } else { return None };
            Some((lam, if sign % 2 == 0 { BigInt::one() } else { -BigInt::one() }))
        })
        .collect()
}

/// `h_k s_μ = Σ s_λ` over horizontal strips `λ/μ` of size `k`.
pub fn pieri_reference(k: usize, mu: &Partition) -> SignedSchurExpansion {
    partitions_containing(mu, mu.weight() + k, mu.first() + k, mu.length() + 1)
        .into_iter()
        .filter(|lam| (1..lam.length()).all(|i| lam.part(i) <= mu.part(i - 1)))
        .map(|lam| (lam, BigInt::one()))
        .collect()
}

/// Schur expansion of `p_μ ∘ h_m`, peeling off `p_{μ_1} ∘ h_m` last.
pub fn b_coefficients(mu: &Partition, m: usize) -> SignedSchurExpansion {
    let Some((&first, _)) = mu.parts().split_first() else {
        return SignedSchurExpansion::one();
    };
    let inner = b_coefficients(&mu.tail(), m);
    let mut out = SignedSchurExpansion::zero();
    for (nu, c) in inner.iter() {
        out.add_assign_scaled(&pnhk_times_schur(first, m, nu), c);
    }
    out
}

/// A nested sequence `∅ = λ^(0) ⊂ λ^(1) ⊂ ...` of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionChainValue {
    pub stages: Vec<Partition>,
}

impl PartitionChainValue {
    pub fn outer(&self) -> &Partition {
        self.stages.last().expect("chain starts at the empty partition")
    }
}

/// All chains `∅ ⊂ λ^(1) ⊂ ... ⊂ λ^(ℓ(μ))` whose `i`-th step is a
/// horizontal `μ_i`-border strip of weight `m`, with the product of the
/// step signs.
pub fn horizontal_mu_chains(mu: &Partition, m: usize) -> Vec<(PartitionChainValue, i32)> {
    fn extend(
        mu: &Partition,
        m: usize,
        stages: &mut Vec<Partition>,
        sign: i32,
        out: &mut Vec<(PartitionChainValue, i32)>,
    ) {
        let step = stages.len() - 1;
        if step == mu.length() {
            out.push((PartitionChainValue { stages: stages.clone() }, sign));
            return;
        }
        let n = mu.part(step);
        let current = stages.last().expect("nonempty").clone();
        for next in candidates(n, m, &current) {
            let s = SkewShape::new(next.clone(), current.clone()).expect("candidate contains current stage");
            let class = classify(&s, n, m).expect("sizes match by construction");
            if class.kind == StripKind::Horizontal {
                stages.push(next);
                extend(mu, m, stages, sign * class.sign, out);
                stages.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(mu, m, &mut vec![Partition::empty()], 1, &mut out);
    out
}

/// Schur expansion of `p_μ ∘ h_m` as a signed count of horizontal
/// `μ`-border strip chains.
pub fn b_coefficients_by_chains(mu: &Partition, m: usize) -> SignedSchurExpansion {
    horizontal_mu_chains(mu, m)
        .into_iter()
        .map(|(chain, sign)| (chain.outer().clone(), BigInt::from(sign)))
        .collect()
}

/// Schur expansion of `h_n ∘ h_m = Σ_{μ ⊢ n} (p_μ ∘ h_m) / z_μ`.
pub fn a_coefficients(n: usize, m: usize) -> Result<SignedSchurExpansion> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for mu in partitions_of(n, None) {
        let z = mu.z();
        for (lam, c) in b_coefficients(&mu, m).iter() {
            *acc.entry(lam.clone()).or_insert_with(BigRational::zero) += BigRational::new(c.clone(), z.clone());
        }
    }
    let mut out = SignedSchurExpansion::zero();
    for (lam, c) in acc {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Inconsistent(format!("coefficient {c} of s{lam} in h_{n} ∘ h_{m}")));
        }
        out.add_term(lam, c.to_integer());
    }
    Ok(out)
}

/// `p_n ∘ e_k = (-1)^{k(n-1)} Σ det M(λ) det(e_{λ_i+j-i})` over `λ ⊢ nk`
/// with `ℓ(λ) <= n` that are horizontal `n`-border strips of weight `k`.
pub fn waring(n: usize, k: usize) -> EPolynomial {
    let sign = if (k * (n - 1)) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    let mut out = EPolynomial::zero();
    for lam in partitions_of(n * k, Some(n)) {
        let class = classify(&SkewShape::straight(lam.clone()), n, k).expect("sizes match by construction");
        if class.kind != StripKind::Horizontal {
            continue;
        }
        let d = det(&build_m(&lam, &Partition::empty(), n).expect("empty partition is contained"));
        out.add_assign_scaled(&schur_to_e(&lam), &(&sign * BigRational::from_integer(d)));
    }
    out
}
