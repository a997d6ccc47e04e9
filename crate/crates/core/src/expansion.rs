//! Sparse linear combinations of basis elements indexed by partitions.
//!
//! The basis is a type parameter so that a power-sum expansion can never be
//! added to a Schur expansion by accident. Zero coefficients are never stored.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// Exact coefficient ring of an expansion.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + PartialEq
    + Eq
    + Zero
    + One
    + Signed
    + std::ops::Mul<Output = Self>
    + for<'a> std::ops::AddAssign<&'a Self>
{
    fn numerator(&self) -> BigInt;
    fn denominator(&self) -> BigInt;
    /// `None` when the fraction is not representable in this ring.
    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn numerator(&self) -> BigInt {
        self.clone()
    }

    fn denominator(&self) -> BigInt {
        BigInt::one()
    }

    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() || !(&num % &den).is_zero() {
            return None;
        }
        Some(num / den)
    }
}

impl Coefficient for BigRational {
    fn numerator(&self) -> BigInt {
        self.numer().clone()
    }

    fn denominator(&self) -> BigInt {
        self.denom().clone()
    }

    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }
}

pub trait Basis: Clone + Copy + fmt::Debug + Default + PartialEq + Eq {
    type Coeff: Coefficient;
    /// Symbol used in text and JSON output.
    const SYMBOL: &'static str;
    /// Output terms in reverse-lexicographic order of the conjugate key
    /// instead of the key itself.
    const CONJUGATE_ORDER: bool = false;
}

/// Power sums `p_λ` over the rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PowerSum;

/// Schur functions `s_λ` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Schur;

/// Elementary monomials `e_λ = e_{λ_1} e_{λ_2} ...` over the rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Elementary;

impl Basis for PowerSum {
    type Coeff = BigRational;
    const SYMBOL: &'static str = "p";
}

impl Basis for Schur {
    type Coeff = BigInt;
    const SYMBOL: &'static str = "s";
}

impl Basis for Elementary {
    type Coeff = BigRational;
    const SYMBOL: &'static str = "e";
    const CONJUGATE_ORDER: bool = true;
}

#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<B: Basis> {
    terms: BTreeMap<Partition, B::Coeff>,
    basis: PhantomData<B>,
}

pub type PBasisExpansion = Expansion<PowerSum>;
pub type SignedSchurExpansion = Expansion<Schur>;
pub type EPolynomial = Expansion<Elementary>;

impl<B: Basis> Default for Expansion<B> {
    fn default() -> Self {
        Expansion { terms: BTreeMap::new(), basis: PhantomData }
    }
}

impl<B: Basis> Expansion<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1, i.e. the basis element of the empty partition.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), B::Coeff::one())
    }

    pub fn monomial(key: Partition, coeff: B::Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: Partition, coeff: B::Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, key: &Partition) -> B::Coeff {
        self.terms.get(key).cloned().unwrap_or_else(B::Coeff::zero)
    }

    /// Terms in output order: reverse-lexicographic by key, or by conjugate
    /// key for the elementary basis (so `e_λ` sits where `s_λ'` would).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &B::Coeff)> {
        let mut terms: Vec<_> = self.terms.iter().rev().collect();
        if B::CONJUGATE_ORDER {
            terms.sort_by_cached_key(|(k, _)| std::cmp::Reverse(k.conjugate()));
        }
        terms.into_iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Partition> {
        self.iter().map(|(k, _)| k)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scaled(&self, c: &B::Coeff) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &B::Coeff) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &B::Coeff::one());
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-B::Coeff::one());
        out
    }

    /// `Some(d)` when every key has weight `d` (the zero expansion has none).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// The product in the ring of symmetric functions for multiplicative
    /// bases (power sums, elementary): keys merge as multisets.
    pub fn multiply_multiplicative(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<B: Basis> FromIterator<(Partition, B::Coeff)> for Expansion<B> {
    fn from_iter<T: IntoIterator<Item = (Partition, B::Coeff)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<B: Basis> fmt::Debug for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Writes `+1·s[2] −1·s[1,1]`; rational coefficients render as `+1/2·p[2]`.
impl<B: Basis> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if coeff.is_negative() { '\u{2212}' } else { '+' };
            let num = coeff.numerator().abs();
            let den = coeff.denominator();
            if den.is_one() {
                write!(f, "{sign}{num}\u{b7}{}{key}", B::SYMBOL)?;
            } else {
                write!(f, "{sign}{num}/{den}\u{b7}{}{key}", B::SYMBOL)?;
            }
        }
        Ok(())
    }
}

/// Integers that fit in an `i64` are written as JSON numbers, larger ones as
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| JsonInt::Big(v.to_string()), JsonInt::Small)
    }
}

impl JsonInt {
    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            JsonInt::Small(v) => Some(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().ok(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    key: Partition,
    num: JsonInt,
    den: JsonInt,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    basis: String,
    terms: Vec<JsonTerm>,
}

impl<B: Basis> Serialize for Expansion<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let doc = JsonExpansion {
            basis: B::SYMBOL.to_string(),
            terms: self
                .iter()
                .map(|(k, c)| JsonTerm {
                    key: k.clone(),
                    num: JsonInt::from(&c.numerator()),
                    den: JsonInt::from(&c.denominator()),
                })
                .collect(),
        };
        doc.serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for Expansion<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = JsonExpansion::deserialize(deserializer)?;
        if doc.basis != B::SYMBOL {
            return Err(D::Error::custom(format!("expected basis {:?}, found {:?}", B::SYMBOL, doc.basis)));
        }
        let mut out = Self::zero();
        for term in doc.terms {
            let (Some(num), Some(den)) = (term.num.to_bigint(), term.den.to_bigint()) else {
                return Err(D::Error::custom("malformed integer"));
            };
            let coeff = B::Coeff::from_fraction(num, den)
                .ok_or_else(|| D::Error::custom(format!("coefficient of {} not representable", term.key)))?;
            out.add_term(term.key, coeff);
        }
        Ok(out)
    }
}
