//! Fundamental representation weight data, tensor decomposition sets,
//! dominant weight subsequences, and dimension bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::RationalFunction;
use crate::c2::{pairing, Root, Weight, RHO};
use crate::qnum::qint;
use crate::Result;

/// Which fundamental representation a letter refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FundIndex {
    One,
    Two,
}

impl FundIndex {
    pub fn weight(self) -> Weight {
        match self {
            FundIndex::One => Weight::new(1, 0),
            FundIndex::Two => Weight::new(0, 1),
        }
    }

    pub fn from_digit(d: u8) -> Option<Self> {
        match d {
            1 => Some(FundIndex::One),
            2 => Some(FundIndex::Two),
            _ => None,
        }
    }

    pub fn digit(self) -> u8 {
        match self {
            FundIndex::One => 1,
            FundIndex::Two => 2,
        }
    }
}

impl fmt::Display for FundIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

/// A fundamental representation together with its ordered, multiplicity-free
/// weight list.
#[derive(Debug, Clone)]
pub struct FundRep {
    pub index: FundIndex,
    pub weights: Vec<Weight>,
}

/// Weights of the 4-dimensional representation, in lowering order.
pub const FUND1_WEIGHTS: [(i64, i64); 4] = [(1, 0), (-1, 1), (1, -1), (-1, 0)];

/// Weights of the 5-dimensional representation, in lowering order.
pub const FUND2_WEIGHTS: [(i64, i64); 5] = [(0, 1), (2, -1), (0, 0), (-2, 1), (0, -1)];

pub fn fund_rep(index: FundIndex) -> FundRep {
    let weights = match index {
        FundIndex::One => FUND1_WEIGHTS.iter().map(|&(a, b)| Weight::new(a, b)).collect(),
        FundIndex::Two => FUND2_WEIGHTS.iter().map(|&(a, b)| Weight::new(a, b)).collect(),
    };
    FundRep { index, weights }
}

/// The fundamental representation a weight belongs to; `(0, 0)` belongs to
/// the 5-dimensional one.
pub fn fund_index_of(mu: Weight) -> Option<FundIndex> {
    if FUND1_WEIGHTS.contains(&(mu.a, mu.b)) {
        Some(FundIndex::One)
    } else if FUND2_WEIGHTS.contains(&(mu.a, mu.b)) {
        Some(FundIndex::Two)
    } else {
        None
    }
}

/// The set `S_{lambda, a}` of weights `mu` of the `a`-th fundamental
/// representation with `V(lambda + mu)` a summand of the tensor product,
/// ordered as in the weight list.
///
/// For index 1 this is exactly dominance of `lambda + mu`; for index 2 the
/// zero weight additionally requires `lambda.a >= 1`.
pub fn s_set(lambda: Weight, index: FundIndex) -> Result<Vec<Weight>> {
    lambda.require_dominant()?;
    let rep = fund_rep(index);
    Ok(rep
        .weights
        .into_iter()
        .filter(|&mu| {
            if !(lambda + mu).is_dominant() {
                return false;
            }
            if index == FundIndex::Two && mu == Weight::ZERO {
                return lambda.a >= 1;
            }
            true
        })
        .collect())
}

pub fn in_s_set(lambda: Weight, mu: Weight) -> bool {
    match fund_index_of(mu) {
        Some(index) => s_set(lambda, index)
            .map(|s| s.contains(&mu))
            .unwrap_or(false),
        None => false,
    }
}

/// Classical Weyl dimension `(a+1)(b+1)(a+b+2)(a+2b+3)/6`.
pub fn weyl_dim(lambda: Weight) -> Result<u64> {
    lambda.require_dominant()?;
    let (a, b) = (lambda.a, lambda.b);
    let prod = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3);
    debug_assert!(prod % 6 == 0);
    Ok((prod / 6) as u64)
}

/// Quantum dimension: the product over positive roots of
/// `[(lambda + rho, alpha^vee)]_{q^{l(alpha)}} / [(rho, alpha^vee)]_{q^{l(alpha)}}`.
/// The quotient is exact, so the canonical result has denominator 1.
pub fn quantum_dim(lambda: Weight) -> Result<RationalFunction> {
    lambda.require_dominant()?;
    let mut num = crate::arith::LaurentPoly::one();
    let mut den = crate::arith::LaurentPoly::one();
    for alpha in Root::positive() {
        let level = alpha.length.level();
        num = num * qint(pairing(&alpha, lambda + RHO), level);
        den = den * qint(pairing(&alpha, RHO), level);
    }
    let dim = RationalFunction::new(num, den)?;
    debug_assert!(dim.is_polynomial());
    Ok(dim)
}

/// `{lambda + mu : mu in S_{lambda, a}}`, each summand multiplicity one.
pub fn tensor_expand(lambda: Weight, index: FundIndex) -> Result<Vec<Weight>> {
    Ok(s_set(lambda, index)?.into_iter().map(|mu| lambda + mu).collect())
}

/// A word in the two fundamental letters; the object `w` of the category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWord {
    pub letters: Vec<FundIndex>,
}

impl WeightWord {
    pub fn new(letters: Vec<FundIndex>) -> Self {
        WeightWord { letters }
    }

    /// Parse a string of `1` and `2` digits.
    pub fn parse(s: &str) -> Option<Self> {
        let letters: Option<Vec<FundIndex>> = s
            .chars()
            .map(|c| c.to_digit(10).and_then(|d| FundIndex::from_digit(d as u8)))
            .collect();
        letters.map(WeightWord::new)
    }

    pub fn weight(&self) -> Weight {
        self.letters
            .iter()
            .fold(Weight::ZERO, |acc, l| acc + l.weight())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for WeightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// One admissible path: entry `i` is a weight of the `i`-th letter's
/// representation, every partial sum is dominant, and each step passes the
/// `S`-membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantSubsequence {
    pub entries: Vec<Weight>,
}

/// All dominant weight subsequences of `word` with total weight `lambda`,
/// built left to right. The output order is the lexicographic order induced
/// by the fundamental weight lists.
pub fn enumerate_e(word: &WeightWord, lambda: Weight) -> Vec<DominantSubsequence> {
    let mut out = Vec::new();
    let mut entries = Vec::with_capacity(word.len());
    dfs(&word.letters, Weight::ZERO, lambda, &mut entries, &mut out);
    out
}

fn dfs(
    letters: &[FundIndex],
    prefix: Weight,
    target: Weight,
    entries: &mut Vec<Weight>,
    out: &mut Vec<DominantSubsequence>,
) {
    match letters.split_first() {
        None => {
            if prefix == target {
                out.push(DominantSubsequence { entries: entries.clone() });
            }
        }
        Some((&letter, rest)) => {
            // Remaining letters bound how far the weight can still move.
            let remaining = rest.len() as i64 + 1;
            if (target.a - prefix.a).abs() > 2 * remaining
                || (target.b - prefix.b).abs() > remaining
            {
                return;
            }
            for mu in s_set(prefix, letter).expect("prefix stays dominant") {
                entries.push(mu);
                dfs(rest, prefix + mu, target, entries, out);
                entries.pop();
            }
        }
    }
}

/// Filtration multiplicities `lambda -> #E(word, lambda)` for every dominant
/// weight reachable by the word. Counts paths without materializing them.
pub fn multiplicities(word: &WeightWord) -> BTreeMap<Weight, u64> {
    fn walk(letters: &[FundIndex], prefix: Weight, counts: &mut BTreeMap<Weight, u64>) {
        match letters.split_first() {
            None => *counts.entry(prefix).or_insert(0) += 1,
            Some((&letter, rest)) => {
                for mu in s_set(prefix, letter).expect("prefix stays dominant") {
                    walk(rest, prefix + mu, counts);
                }
            }
        }
    }
    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    walk(&word.letters, Weight::ZERO, &mut counts);
    counts
}

/// `dim Hom(V(w), V(x))` for Weyl filtered tensor words: the sum over
/// dominant weights of the product of filtration multiplicities.
pub fn dim_hom(w: &WeightWord, x: &WeightWord) -> u64 {
    let mw = multiplicities(w);
    let mx = multiplicities(x);
    mw.iter()
        .filter_map(|(lam, c)| mx.get(lam).map(|d| c * d))
        .sum()
}

/// Multiplicity of `V(target)` in `V(lambda) (x) V(fund_index)`; zero or one.
pub fn tensor_multiplicity(lambda: Weight, index: FundIndex, target: Weight) -> Result<u64> {
    Ok(tensor_expand(lambda, index)?
        .into_iter()
        .filter(|&w| w == target)
        .count() as u64)
}

/// Exact value of the quantum dimension at `q = 1`.
pub fn quantum_dim_at_one(lambda: Weight) -> Result<BigRational> {
    let qd = quantum_dim(lambda)?;
    Ok(qd.eval_at_one().expect("denominator is 1"))
}
