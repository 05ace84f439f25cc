//! Classification data for Harish-Chandra bimodules over the rational
//! Cherednik algebra of `S_n`: parameter classes, labels of simples, the
//! chain of two-sided ideals with supports, and the two-parameter case.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partition_count, phi_image_labels, Partition};
use crate::symgroup::YoungSubgroup;

/// A rational parameter `c`, always stored reduced with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CherednikParameter(Rational64);

impl CherednikParameter {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Parameter("zero denominator".into()));
        }
        Ok(CherednikParameter(Rational64::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        CherednikParameter(Rational64::from_integer(n))
    }

    pub fn value(&self) -> Rational64 {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for CherednikParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for CherednikParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected an integer or p/q, got {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                CherednikParameter::new(n, d)
            }
            None => Ok(CherednikParameter::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for CherednikParameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "variant")]
pub enum ParameterVariant {
    Integral,
    Rational { r: i64, m: i64 },
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParameterClass {
    #[serde(flatten)]
    pub variant: ParameterVariant,
    pub negative: bool,
}

impl ParameterClass {
    /// The class of a parameter that is not rational; always generic.
    pub fn irrational(negative: bool) -> Self {
        ParameterClass { variant: ParameterVariant::Generic, negative }
    }
}

/// Integral, `r/m` with `2 ≤ m ≤ n`, or generic (denominator above `n`).
pub fn classify_parameter(c: CherednikParameter, n: usize) -> ParameterClass {
    let d = c.denom();
    let variant = if d == 1 {
        ParameterVariant::Integral
    } else if d as u64 <= n as u64 {
        ParameterVariant::Rational { r: c.numer(), m: d }
    } else {
        ParameterVariant::Generic
    };
    ParameterClass { variant, negative: c.is_negative() }
}

/// Labels of the simple objects in the image of the embedding into category `O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleLabels {
    pub labels: Vec<Partition>,
    /// For `c < 0` the labels use the sign-twisted convention: `(n)` stands
    /// for the standard object built on the sign representation.
    pub sign_twisted: bool,
}

impl SimpleLabels {
    pub fn count(&self) -> usize {
        self.labels.len()
    }
}

pub fn simple_labels_for_class(n: usize, class: &ParameterClass) -> Result<SimpleLabels> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let labels = match class.variant {
        ParameterVariant::Generic => vec![Partition::row(n)],
        ParameterVariant::Integral => enumerate_partitions(n),
        ParameterVariant::Rational { m, .. } => phi_image_labels(n, m as usize)?,
    };
    Ok(SimpleLabels { labels, sign_twisted: class.negative })
}

pub fn simple_labels(n: usize, c: CherednikParameter) -> Result<SimpleLabels> {
    simple_labels_for_class(n, &classify_parameter(c, n))
}

pub fn count_simples(n: usize, c: CherednikParameter) -> Result<usize> {
    Ok(simple_labels(n, c)?.count())
}

/// A symplectic leaf closure, indexed by `i` and the parabolic `S_m^{×i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafDescriptor {
    pub index: usize,
    pub parabolic: YoungSubgroup,
}

impl LeafDescriptor {
    /// `i` blocks of size `m` followed by singletons up to `n`.
    pub fn new(index: usize, n: usize, m: usize) -> Result<Self> {
        if m * index > n {
            return Err(Error::Parameter(format!("leaf {index} needs m*i <= n (m={m}, n={n})")));
        }
        let mut blocks = vec![m; index];
        blocks.extend(std::iter::repeat_n(1, n - m * index));
        Ok(LeafDescriptor { index, parabolic: YoungSubgroup::new(blocks)? })
    }
}

/// One ideal `J_i` of the chain `0 ⊊ J_0 ⊊ … ⊊ J_k = H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealEntry {
    pub index: usize,
    /// Support of the simple subquotient `S_i = J_i / J_{i−1}`.
    pub subquotient_support: LeafDescriptor,
    /// Support of `H / J_i`; `None` for `J_k = H`.
    pub quotient_support: Option<LeafDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealChain {
    pub n: usize,
    pub m: usize,
    pub chain: Vec<IdealEntry>,
}

impl IdealChain {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Number of proper nonzero ideals, `⌊n/m⌋`.
    pub fn proper_ideals(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }
}

/// The `⌊n/m⌋ + 1` two-sided ideals of `H_{r/m}`. For `m > n` the algebra is
/// simple and the chain is empty.
pub fn ideal_chain(n: usize, m: usize) -> Result<IdealChain> {
    if m < 2 {
        return Err(Error::Parameter(format!("ideal chain needs m >= 2, got {m}")));
    }
    if m > n {
        return Ok(IdealChain { n, m, chain: Vec::new() });
    }
    let k = n / m;
    let chain = (0..=k)
        .map(|i| {
            Ok(IdealEntry {
                index: i,
                subquotient_support: LeafDescriptor::new(i, n, m)?,
                quotient_support: if i < k { Some(LeafDescriptor::new(i + 1, n, m)?) } else { None },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealChain { n, m, chain })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum TwoParamClass {
    Zero,
    DerivedEquivalence,
    /// Equivalent to representations of `S_rank`, with `simple_count = p(rank)` simples.
    RepOfSymmetricGroup {
        rank: usize,
        simple_count: usize,
    },
}

/// Decides when `HC(c, c')` is nonzero: `c ± c' ∈ ℤ`, or equal denominators `m`
/// with `m | n`.
pub fn two_param_class(c: CherednikParameter, c_prime: CherednikParameter, n: usize) -> TwoParamClass {
    let (a, b) = (c.value(), c_prime.value());
    if (a - b).is_integer() || (a + b).is_integer() {
        return TwoParamClass::DerivedEquivalence;
    }
    let m = c.denom();
    if m == c_prime.denom() && (n as i64) % m == 0 {
        let rank = n / m as usize;
        return TwoParamClass::RepOfSymmetricGroup { rank, simple_count: partition_count(rank) };
    }
    TwoParamClass::Zero
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CherednikParameter {
        s.parse().unwrap()
    }

    #[test]
    fn parameter_classes() {
        assert_eq!(
            classify_parameter(c("1/2"), 2),
            ParameterClass { variant: ParameterVariant::Rational { r: 1, m: 2 }, negative: false }
        );
        assert_eq!(classify_parameter(c("3"), 5).variant, ParameterVariant::Integral);
        assert_eq!(classify_parameter(c("1/7"), 3).variant, ParameterVariant::Generic);
        assert!(classify_parameter(c("-2/3"), 3).negative);
        assert_eq!(classify_parameter(c("4/6"), 3).variant, ParameterVariant::Rational { r: 2, m: 3 });
    }

    #[test]
    fn parsing() {
        assert_eq!(c("-3/6"), CherednikParameter::new(-1, 2).unwrap());
        assert!("1/0".parse::<CherednikParameter>().is_err());
        assert!("x".parse::<CherednikParameter>().is_err());
        assert_eq!(c("2").to_string(), "2");
    }

    #[test]
    fn label_sets() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(simple_labels(2, c("1/2")).unwrap().labels, vec![p("2"), p("1,1")]);
        assert_eq!(simple_labels(5, c("1/7")).unwrap().labels, vec![p("5")]);
        assert_eq!(count_simples(3, c("2")).unwrap(), 3);
        assert_eq!(count_simples(4, c("1/2")).unwrap(), 4);
        assert_eq!(count_simples(5, c("3/11")).unwrap(), 1);
        assert!(simple_labels(2, c("-1/2")).unwrap().sign_twisted);
    }

    #[test]
    fn chains() {
        let ch = ideal_chain(2, 2).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.chain[0].subquotient_support.index, 0);
        assert_eq!(ch.chain[0].quotient_support.as_ref().unwrap().index, 1);
        assert_eq!(ch.chain[0].quotient_support.as_ref().unwrap().parabolic.blocks(), [2]);
        assert_eq!(ideal_chain(5, 2).unwrap().proper_ideals(), 2);
        assert!(ideal_chain(3, 4).unwrap().is_empty());
        assert!(ideal_chain(3, 1).is_err());
    }

    #[test]
    fn two_parameter_cases() {
        assert_eq!(two_param_class(c("1/2"), c("3/2"), 2), TwoParamClass::DerivedEquivalence);
        assert_eq!(
            two_param_class(c("1/5"), c("2/5"), 5),
            TwoParamClass::RepOfSymmetricGroup { rank: 1, simple_count: 1 }
        );
        assert_eq!(two_param_class(c("1/2"), c("1/3"), 6), TwoParamClass::Zero);
        assert_eq!(two_param_class(c("1/3"), c("1/3"), 4), TwoParamClass::DerivedEquivalence);
        assert_eq!(two_param_class(c("1/5"), c("2/5"), 7), TwoParamClass::Zero);
    }
}
