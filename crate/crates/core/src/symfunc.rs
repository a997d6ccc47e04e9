//! Brute-force symmetric function arithmetic in the power-sum basis.
//!
//! Everything here goes through symmetric-group characters and exact
//! rationals and never touches the strip or matrix code, so it serves as the
//! reference the determinant and straightening routes are checked against.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{EPolynomial, PBasisExpansion, SignedSchurExpansion};
use crate::partition::{partitions_of, Partition};

type CharacterKey = (Partition, Partition);

fn character_memo() -> &'static RwLock<HashMap<CharacterKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<CharacterKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character `χ^λ` of `S_{|λ|}` at cycle type `ρ`.
pub fn mn_character(lam: &Partition, rho: &Partition) -> Result<BigInt> {
    if lam.weight() != rho.weight() {
        return Err(Error::WeightMismatch { left: lam.weight(), right: rho.weight() });
    }
    Ok(character(lam, rho))
}

/// Murnaghan-Nakayama recursion on beta-sets: removing an `r`-rim hook moves
/// one bead from `b` to `b - r`, with sign given by the beads jumped over.
/// The largest cycle is removed first.
fn character(lam: &Partition, rho: &Partition) -> BigInt {
    if rho.is_empty() {
        return if lam.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (lam.clone(), rho.clone());
    if let Some(hit) = character_memo().read().expect("memo poisoned").get(&key) {
        return hit.clone();
    }
    let r = rho.first();
    let rest = rho.tail();
    let len = lam.length();
    let beads: Vec<usize> = (0..len).map(|i| lam.part(i) + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let jumped = beads.iter().filter(|&&x| x > b - r && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = b - r;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let value = character(&Partition::from_unsorted(parts), &rest);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    character_memo().write().expect("memo poisoned").insert(key, total.clone());
    total
}

fn rational(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `s_λ = Σ_ρ χ^λ_ρ p_ρ / z_ρ`.
pub fn schur_to_p(lam: &Partition) -> PBasisExpansion {
    partitions_of(lam.weight(), None)
        .into_iter()
        .map(|rho| {
            let c = rational(character(lam, &rho), rho.z());
            (rho, c)
        })
        .collect()
}

/// Schur coefficients `<f, s_λ> = Σ_ρ c_ρ χ^λ_ρ`, degree by degree.
pub fn p_to_schur(f: &PBasisExpansion) -> Result<SignedSchurExpansion> {
    let mut degrees: Vec<usize> = f.keys().map(Partition::weight).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = SignedSchurExpansion::zero();
    for d in degrees {
        for lam in partitions_of(d, None) {
            let mut acc = BigRational::zero();
            for (rho, c) in f.iter().filter(|(rho, _)| rho.weight() == d) {
                acc += c * BigRational::from_integer(character(&lam, rho));
            }
            if !acc.is_integer() {
                return Err(Error::NotSchurIntegral { partition: lam, value: acc.to_string() });
            }
            out.add_term(lam, acc.to_integer());
        }
    }
    Ok(out)
}

pub fn p_multiply(f: &PBasisExpansion, g: &PBasisExpansion) -> PBasisExpansion {
    f.multiply_multiplicative(g)
}

/// `h_k = Σ_{λ⊢k} p_λ / z_λ`.
pub fn complete_p(k: usize) -> PBasisExpansion {
    partitions_of(k, None).into_iter().map(|l| {
        let z = l.z();
        (l, rational(BigInt::one(), z))
    }).collect()
}

/// `e_k = Σ_{λ⊢k} (-1)^{k-ℓ(λ)} p_λ / z_λ`.
pub fn elementary_p(k: usize) -> PBasisExpansion {
    partitions_of(k, None)
        .into_iter()
        .map(|l| {
            let sign = if (k - l.length()) % 2 == 0 { 1 } else { -1 };
            let z = l.z();
            (l, rational(BigInt::from(sign), z))
        })
        .collect()
}

/// `p_n ∘ h_k = Σ_{λ⊢k} p_{nλ} / z_λ`.
pub fn plethysm_pn_hk(n: usize, k: usize) -> PBasisExpansion {
    partitions_of(k, None).into_iter().map(|l| (l.scaled(n), rational(BigInt::one(), l.z()))).collect()
}

/// `p_n ∘ f`: every `p_m` becomes `p_{nm}`.
pub fn power_plethysm(n: usize, f: &PBasisExpansion) -> PBasisExpansion {
    f.iter().map(|(k, c)| (k.scaled(n), c.clone())).collect()
}

/// `f ∘ g = Σ_λ c_λ Π_i (p_{λ_i} ∘ g)`.
pub fn plethysm(f: &PBasisExpansion, g: &PBasisExpansion) -> PBasisExpansion {
    let mut out = PBasisExpansion::zero();
    for (lam, c) in f.iter() {
        let term = lam
            .parts()
            .iter()
            .fold(PBasisExpansion::one(), |acc, &part| p_multiply(&acc, &power_plethysm(part, g)));
        out.add_assign_scaled(&term, c);
    }
    out
}

/// `ω(p_λ) = (-1)^{|λ|-ℓ(λ)} p_λ`.
pub fn omega(f: &PBasisExpansion) -> PBasisExpansion {
    f.iter()
        .map(|(k, c)| {
            let c = if (k.weight() - k.length()) % 2 == 0 { c.clone() } else { -c.clone() };
            (k.clone(), c)
        })
        .collect()
}

/// Expands `Σ c_λ e_λ` in power sums.
pub fn e_to_p(f: &EPolynomial) -> PBasisExpansion {
    let mut out = PBasisExpansion::zero();
    for (lam, c) in f.iter() {
        let term = lam.parts().iter().fold(PBasisExpansion::one(), |acc, &r| p_multiply(&acc, &elementary_p(r)));
        out.add_assign_scaled(&term, c);
    }
    out
}

/// The recursion `M^{(k,r)}_λ` behind the generalised Waring formula,
/// evaluated on the tuple exactly as given (parts are not re-sorted when
/// the last part is merged into an earlier one).
pub fn merca_m(lam: &Partition, k: usize, r: usize) -> Result<BigInt> {
    if r == 0 || k == 0 || lam.is_empty() || lam.weight() != k * r || lam.length() > r {
        return Err(Error::BadShape(format!("λ = {lam}, k = {k}, r = {r}")));
    }
    let mut memo = HashMap::new();
    Ok(merca_tuple(lam.parts(), k, r, &mut memo))
}

fn merca_tuple(parts: &[usize], k: usize, r: usize, memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    if parts.len() == 1 {
        return BigInt::from(r);
    }
    if let Some(hit) = memo.get(&(parts.to_vec(), k)) {
        return hit.clone();
    }
    let (last, head) = parts.split_last().expect("at least two parts");
    let mut value = BigInt::zero();
    for i in 0..head.len() {
        let mut merged = head.to_vec();
        merged[i] += last;
        value -= merca_tuple(&merged, k, r, memo);
    }
    if last % r == 0 {
        value += BigInt::from(r) * merca_tuple(head, k - last / r, r, memo);
    }
    memo.insert((parts.to_vec(), k), value.clone());
    value
}

/// `p_n ∘ e_k` assembled from the Merca recursion:
/// `(-1)^{k(n+1)} Σ_{λ⊢kn, ℓ(λ)≤n} M^{(k,n)}_λ / Π m_i(λ)! · e_λ`.
pub fn merca_waring(n: usize, k: usize) -> Result<EPolynomial> {
    let sign = if (k * (n + 1)) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let mut out = EPolynomial::zero();
    for lam in partitions_of(k * n, Some(n)) {
        let m = merca_m(&lam, k, n)?;
        let denom: BigInt = lam
            .multiplicities()
            .iter()
            .map(|&(_, count)| (1..=count).map(BigInt::from).product::<BigInt>())
            .product();
        out.add_term(lam, rational(&sign * m, denom));
    }
    Ok(out)
}

/// `det(e_{λ_i + j - i})` expanded into e-monomials (`e_0 = 1`,
/// `e_{<0} = 0`); this is `s_{λ'}`.
pub fn schur_to_e(lam: &Partition) -> EPolynomial {
    let l = lam.length();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let idx = lam.part(i) as i64 + j as i64 - i as i64;
        (idx >= 0).then_some(idx as usize)
    };
    // Laplace expansion row by row, keyed by the set of columns used so far.
    let mut layer: HashMap<u32, EPolynomial> = HashMap::from([(0, EPolynomial::one())]);
    for i in 0..l {
        let mut next: HashMap<u32, EPolynomial> = HashMap::new();
        for (mask, poly) in &layer {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let Some(index) = entry(i, j) else { continue };
                let above = (mask >> (j + 1)).count_ones();
                let sign = if above % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                let factor = EPolynomial::monomial(Partition::row(index), sign);
                let slot = next.entry(mask | (1 << j)).or_default();
                *slot = slot.plus(&poly.multiply_multiplicative(&factor));
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << l) - 1)).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::conjugate;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn schur(terms: &[(Partition, i64)]) -> SignedSchurExpansion {
        terms.iter().map(|(k, c)| (k.clone(), BigInt::from(*c))).collect()
    }

    /// Number of standard Young tableaux, counted by removing corners.
    fn syt_count(lam: &Partition) -> BigInt {
        if lam.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for i in 0..lam.length() {
            if lam.part(i) > lam.part(i + 1) {
                let mut parts = lam.parts().to_vec();
                parts[i] -= 1;
                total += syt_count(&Partition::from_unsorted(parts));
            }
        }
        total
    }

    #[test]
    fn character_examples() {
        for rho in partitions_of(4, None) {
            assert_eq!(mn_character(&part![4], &rho).unwrap(), BigInt::one());
        }
        assert_eq!(mn_character(&part![2, 1], &part![1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(mn_character(&part![2, 1], &part![3]).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&part![2, 1], &part![2, 1]).unwrap(), BigInt::zero());
        assert!(matches!(mn_character(&part![2], &part![1]), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn character_degrees_count_tableaux() {
        for n in 0..=9 {
            let identity = Partition::column(n);
            for lam in partitions_of(n, None) {
                assert_eq!(character(&lam, &identity), syt_count(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn sign_character() {
        for n in 1..=7 {
            for rho in partitions_of(n, None) {
                let sign = if (n - rho.length()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column(n), &rho), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 0..=7 {
            let shapes = partitions_of(n, None);
            for a in &shapes {
                for b in &shapes {
                    let sum: BigRational = shapes
                        .iter()
                        .map(|rho| rational(character(a, rho) * character(b, rho), rho.z()))
                        .sum();
                    let expected = if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(sum, expected, "<χ^{a}, χ^{b}>");
                }
            }
        }
    }

    #[test]
    fn schur_to_p_examples() {
        assert_eq!(schur_to_p(&part![]), PBasisExpansion::one());
        assert_eq!(schur_to_p(&part![1]), PBasisExpansion::monomial(part![1], rat(1, 1)));
        let s2: PBasisExpansion = [(part![2], rat(1, 2)), (part![1, 1], rat(1, 2))].into_iter().collect();
        assert_eq!(schur_to_p(&part![2]), s2);
    }

    #[test]
    fn p_to_schur_examples() {
        let p2 = PBasisExpansion::monomial(part![2], rat(1, 1));
        assert_eq!(p_to_schur(&p2).unwrap(), schur(&[(part![2], 1), (part![1, 1], -1)]));
        let p11 = PBasisExpansion::monomial(part![1, 1], rat(1, 1));
        assert_eq!(p_to_schur(&p11).unwrap(), schur(&[(part![2], 1), (part![1, 1], 1)]));
        let half = PBasisExpansion::monomial(part![2], rat(1, 2));
        assert!(matches!(p_to_schur(&half), Err(Error::NotSchurIntegral { .. })));
    }

    #[test]
    fn schur_round_trip() {
        for n in 0..=8 {
            for lam in partitions_of(n, None) {
                let back = p_to_schur(&schur_to_p(&lam)).unwrap();
                assert_eq!(back, schur(&[(lam.clone(), 1)]));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let f = schur_to_p(&part![2, 1]);
        assert_eq!(p_multiply(&f, &PBasisExpansion::one()), f);
        let p2 = PBasisExpansion::monomial(part![2], rat(1, 1));
        assert_eq!(p_multiply(&p2, &p2), PBasisExpansion::monomial(part![2, 2], rat(1, 1)));
        let p1 = PBasisExpansion::monomial(part![1], rat(1, 1));
        assert_eq!(p_multiply(&p1, &p1), PBasisExpansion::monomial(part![1, 1], rat(1, 1)));
    }

    #[test]
    fn littlewood_richardson_positivity() {
        for total in 0..=8 {
            for a in 0..=total {
                for lam in partitions_of(a, None) {
                    for mu in partitions_of(total - a, None) {
                        let product = p_to_schur(&p_multiply(&schur_to_p(&lam), &schur_to_p(&mu))).unwrap();
                        assert!(product.iter().all(|(_, c)| *c > BigInt::zero()), "s{lam} s{mu}");
                    }
                }
            }
        }
        // s_1 s_1 = s_2 + s_11, s_21 s_1 = s_31 + s_22 + s_211
        let product = p_to_schur(&p_multiply(&schur_to_p(&part![2, 1]), &schur_to_p(&part![1]))).unwrap();
        assert_eq!(product, schur(&[(part![3, 1], 1), (part![2, 2], 1), (part![2, 1, 1], 1)]));
    }

    #[test]
    fn pn_hk_examples() {
        assert_eq!(plethysm_pn_hk(3, 0), PBasisExpansion::one());
        for k in 0..=6 {
            assert_eq!(plethysm_pn_hk(1, k), complete_p(k));
            assert_eq!(p_to_schur(&complete_p(k)).unwrap(), schur(&[(Partition::row(k), 1)]));
        }
        let expected: PBasisExpansion = [(part![2, 2], rat(1, 2)), (part![4], rat(1, 2))].into_iter().collect();
        assert_eq!(plethysm_pn_hk(2, 2), expected);
    }

    #[test]
    fn pn_hk_is_multiplicative_substitution() {
        for n in 1..=3 {
            for k1 in 0..=3 {
                for k2 in 0..=3 {
                    let direct = p_multiply(&plethysm_pn_hk(n, k1), &plethysm_pn_hk(n, k2));
                    let substituted = power_plethysm(n, &p_multiply(&complete_p(k1), &complete_p(k2)));
                    assert_eq!(direct, substituted);
                    let general = plethysm(&PBasisExpansion::monomial(part![n], rat(1, 1)), &complete_p(k1));
                    assert_eq!(general, plethysm_pn_hk(n, k1));
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let p1 = PBasisExpansion::monomial(part![1], rat(1, 1));
        assert_eq!(omega(&p1), p1);
        let p2 = PBasisExpansion::monomial(part![2], rat(1, 1));
        assert_eq!(omega(&p2), PBasisExpansion::monomial(part![2], rat(-1, 1)));
        for k in 0..=6 {
            assert_eq!(omega(&complete_p(k)), elementary_p(k));
        }
    }

    #[test]
    fn omega_conjugates_schur() {
        for n in 0..=8 {
            for lam in partitions_of(n, None) {
                assert_eq!(omega(&schur_to_p(&lam)), schur_to_p(&conjugate(&lam)));
            }
        }
    }

    #[test]
    fn omega_of_pn_hk() {
        for n in 1..=4 {
            for k in 0..=4 {
                let sign = if (k * (n - 1)) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                let lhs = omega(&plethysm_pn_hk(n, k));
                let rhs = power_plethysm(n, &elementary_p(k)).scaled(&sign);
                assert_eq!(lhs, rhs, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn merca_examples() {
        assert_eq!(merca_m(&part![2], 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(merca_m(&part![1, 1], 1, 2).unwrap(), BigInt::from(-2));
        assert!(matches!(merca_m(&part![3], 1, 2), Err(Error::BadShape(_))));
        assert!(matches!(merca_m(&part![1, 1, 1, 1], 2, 2), Err(Error::BadShape(_))));
        let p2: EPolynomial = [(part![1, 1], rat(1, 1)), (part![2], rat(-2, 1))].into_iter().collect();
        assert_eq!(merca_waring(2, 1).unwrap(), p2);
        assert_eq!(e_to_p(&p2), PBasisExpansion::monomial(part![2], rat(1, 1)));
    }

    #[test]
    fn merca_matches_substitution() {
        for n in 1..=4 {
            for k in 1..=4 {
                let assembled = e_to_p(&merca_waring(n, k).unwrap());
                assert_eq!(assembled, power_plethysm(n, &elementary_p(k)), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn schur_to_e_examples() {
        assert_eq!(schur_to_e(&part![1]), EPolynomial::monomial(part![1], rat(1, 1)));
        let e11: EPolynomial = [(part![1, 1], rat(1, 1)), (part![2], rat(-1, 1))].into_iter().collect();
        assert_eq!(schur_to_e(&part![1, 1]), e11);
        assert_eq!(schur_to_e(&part![2]), EPolynomial::monomial(part![2], rat(1, 1)));
        assert_eq!(schur_to_e(&part![]), EPolynomial::one());
    }

    #[test]
    fn dual_jacobi_trudi() {
        for n in 0..=7 {
            for lam in partitions_of(n, None) {
                assert_eq!(e_to_p(&schur_to_e(&lam)), schur_to_p(&conjugate(&lam)), "{lam}");
            }
        }
    }

    #[test]
    fn character_memo_is_shared_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| partitions_of(8, None).iter().map(|l| character(l, &part![3, 3, 2])).collect::<Vec<_>>()))
            .collect();
        let results: HashSet<Vec<BigInt>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(results.len(), 1);
    }

    proptest! {
        #[test]
        fn omega_is_involution(terms in prop::collection::vec((prop::collection::vec(1usize..5, 0..4), -20i64..20, 1i64..6), 0..10)) {
            let f: PBasisExpansion = terms.into_iter().map(|(k, n, d)| (Partition::from_unsorted(k), rat(n, d))).collect();
            prop_assert_eq!(omega(&omega(&f)), f);
        }
    }
}
