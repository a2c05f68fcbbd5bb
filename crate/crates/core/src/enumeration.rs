//! Exact counts: the fundamental recurrence, Kreweras' determinant and
//! Narayana refinements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bijections::{tree_to_matching, tree_to_partition, tree_to_path, tree_to_stirling};
use crate::cap::CapExt;
use crate::error::{Error, Result};
use crate::signatures::{lambda_of, Composition, Partition};
use crate::trees::{enumerate_trees, PlanarTree};

/// `C_s = Σ C_{s_1} ⋯ C_{s_{s(1)}}` over the splittings of the tail of `s`
/// into `s(1)` contiguous, possibly empty, factors. `C_∅ = 1`.
pub fn count_recurrence(s: &Composition) -> BigUint {
    Recurrence::new(s).count(0, s.len())
}

struct Recurrence<'a> {
    s: &'a [usize],
    c: HashMap<(usize, usize), BigUint>,
    // ways to split s[i..end] into t factors
    f: HashMap<(usize, usize, usize), BigUint>,
}

impl<'a> Recurrence<'a> {
    fn new(s: &'a Composition) -> Self {
        Recurrence { s: s.parts(), c: HashMap::new(), f: HashMap::new() }
    }

    fn count(&mut self, start: usize, end: usize) -> BigUint {
        if start == end {
            return BigUint::one();
        }
        if let Some(v) = self.c.get(&(start, end)) {
            return v.clone();
        }
        let v = self.split(self.s[start], start + 1, end);
        self.c.insert((start, end), v.clone());
        v
    }

    fn split(&mut self, t: usize, i: usize, end: usize) -> BigUint {
        if t == 0 {
            return if i == end { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(v) = self.f.get(&(t, i, end)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for j in i..=end {
            let rest = self.split(t - 1, j, end);
            if !rest.is_zero() {
                total += self.count(i, j) * rest;
            }
        }
        self.f.insert((t, i, end), total.clone());
        total
    }
}

/// Memoized [`count_recurrence`] shared between callers; reads run
/// concurrently and writes are serialized.
#[derive(Debug, Default)]
pub struct CountCache {
    map: RwLock<HashMap<Composition, BigUint>>,
}

impl CountCache {
    pub fn new() -> Self {
        CountCache::default()
    }

    pub fn get(&self, s: &Composition) -> BigUint {
        if let Some(v) = self.map.read().expect("cache lock").get(s) {
            return v.clone();
        }
        let v = count_recurrence(s);
        self.map.write().expect("cache lock").insert(s.clone(), v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Number of partitions fitting inside `λ`: `det binom(λ_j + 1, j - i + 1)`.
pub fn kreweras_fitting_count(lambda: &Partition) -> BigUint {
    let l = lambda.len();
    let m: Vec<Vec<BigInt>> = (0..l)
        .map(|i| (0..l).map(|j| binomial(lambda[j] as u64 + 1, j as i64 - i as i64 + 1)).collect())
        .collect();
    bareiss_determinant(m).to_biguint().expect("a count is nonnegative")
}

/// `C_s` through the determinant for `λ^s`.
pub fn count_determinant(s: &Composition) -> BigUint {
    kreweras_fitting_count(&lambda_of(s))
}

/// `C_s` by listing every s-tree; refuses past `cap` objects.
pub fn count_exhaustive(s: &Composition, cap: usize) -> Result<BigUint> {
    let n = enumerate_trees(s).count_capped(cap)?;
    Ok(BigUint::from(n))
}

/// `(1/(a+b)) binom(a+b, a)` for coprime `a, b`.
pub fn rational_catalan(a: u64, b: u64) -> Result<BigUint> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidComposition(format!("rational pair ({}, {}) needs a, b ≥ 1", a, b)));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let v = binomial(a + b, a as i64) / BigInt::from(a + b);
    Ok(v.to_biguint().expect("positive"))
}

/// `N(n, k) = (1/n) binom(n, k) binom(n, k - 1)`.
pub fn classical_narayana(n: u64, k: u64) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::InvalidComposition(format!("Narayana index k = {} outside 1..={}", k, n)));
    }
    let v = binomial(n, k as i64) * binomial(n, k as i64 - 1) / BigInt::from(n);
    Ok(v.to_biguint().expect("positive"))
}

/// The five equidistributed statistics on s-Catalan objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    /// Peaks of the s-Dyck path.
    Peaks,
    /// Leaves of the s-tree that are the leftmost child of their parent.
    LeftmostLeaves,
    /// Ascents of the 312-avoiding Stirling permutation, plus one.
    AscentsPlusOne,
    /// Blocks of the noncrossing partition.
    PartitionBlocks,
    /// Matching blocks `M_i` with `min M_i + 1 ∈ M_i`.
    MatchingMinPlusOne,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [
        Statistic::Peaks,
        Statistic::LeftmostLeaves,
        Statistic::AscentsPlusOne,
        Statistic::PartitionBlocks,
        Statistic::MatchingMinPlusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Peaks => "peaks",
            Statistic::LeftmostLeaves => "leftmost-leaves",
            Statistic::AscentsPlusOne => "ascents-plus-one",
            Statistic::PartitionBlocks => "partition-blocks",
            Statistic::MatchingMinPlusOne => "matching-min-plus-one",
        }
    }

    /// True when the statistic lives on a family that needs every `s(i) ≥ 2`.
    pub fn needs_at_least_two(self) -> bool {
        matches!(self, Statistic::AscentsPlusOne | Statistic::PartitionBlocks)
    }

    /// Value of the statistic on the image of `t`.
    pub fn of_tree(self, t: &PlanarTree) -> Result<usize> {
        Ok(match self {
            Statistic::Peaks => tree_to_path(t).peaks(),
            Statistic::LeftmostLeaves => t.leftmost_leaf_count(),
            Statistic::AscentsPlusOne => tree_to_stirling(t)?.ascents() + 1,
            Statistic::PartitionBlocks => tree_to_partition(t)?.block_count(),
            Statistic::MatchingMinPlusOne => tree_to_matching(t)
                .blocks()
                .iter()
                .filter(|b| b.len() > 1 && b[1] == b[0] + 1)
                .count(),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|s| s.name() == text.trim())
            .ok_or_else(|| Error::Parse(format!("unknown statistic `{}`", text.trim())))
    }
}

/// Histogram `k ↦ #objects with statistic k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarayanaDistribution {
    pub statistic: Statistic,
    pub counts: BTreeMap<usize, BigUint>,
}

impl NarayanaDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `k:count` pairs separated by spaces.
    pub fn to_text(&self) -> String {
        self.counts.iter().map(|(k, v)| format!("{}:{}", k, v)).collect::<Vec<_>>().join(" ")
    }

    /// JSON object; counts beyond `u64` are written as strings.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .counts
            .iter()
            .map(|(k, v)| match v.to_u64() {
                Some(x) => format!("\"{}\":{}", k, x),
                None => format!("\"{}\":\"{}\"", k, v),
            })
            .collect();
        format!("{{\"statistic\":\"{}\",\"counts\":{{{}}}}}", self.statistic, body.join(","))
    }
}

/// Distribution of `statistic` over the s-Catalan family, via the tree generator.
pub fn narayana_distribution(s: &Composition, statistic: Statistic, cap: usize) -> Result<NarayanaDistribution> {
    if statistic.needs_at_least_two() {
        s.require_at_least_two()?;
    }
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (i, t) in enumerate_trees(s).enumerate() {
        if i >= cap {
            return Err(Error::CapExceeded(cap));
        }
        *counts.entry(statistic.of_tree(&t)?).or_default() += 1u32;
    }
    Ok(NarayanaDistribution { statistic, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::compositions_up_to;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn fitting_brute(lambda: &[usize]) -> usize {
        fn go(lambda: &[usize], i: usize, bound: usize) -> usize {
            if i == lambda.len() {
                return 1;
            }
            (0..=bound.min(lambda[i])).map(|x| go(lambda, i + 1, x)).sum()
        }
        go(lambda, 0, usize::MAX)
    }

    #[test]
    fn classical_values() {
        let expect = [1u32, 1, 2, 5, 14, 42, 132];
        for (n, &e) in expect.iter().enumerate() {
            let s = c(&vec![2; n]);
            assert_eq!(count_recurrence(&s), BigUint::from(e));
            assert_eq!(count_determinant(&s), BigUint::from(e));
        }
        assert_eq!(count_recurrence(&c(&[3, 4, 3])), BigUint::from(15u32));
        assert_eq!(count_determinant(&c(&[3, 4, 3])), BigUint::from(15u32));
        assert_eq!(count_recurrence(&Composition::empty()), BigUint::one());
        assert_eq!(count_determinant(&c(&[6])), BigUint::one());
    }

    #[test]
    fn kreweras_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(kreweras_fitting_count(&p(&[1])), BigUint::from(2u32));
        assert_eq!(kreweras_fitting_count(&p(&[2, 1])), BigUint::from(5u32));
        assert_eq!(kreweras_fitting_count(&p(&[5, 2])), BigUint::from(15u32));
        assert_eq!(kreweras_fitting_count(&p(&[])), BigUint::one());
    }

    #[test]
    fn kreweras_matches_fitting_oracle() {
        fn partitions(max_part: usize, len: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=max_part {
                for mut rest in partitions(first, len - 1) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for len in 0..=4 {
            for lambda in partitions(5, len) {
                let got = kreweras_fitting_count(&Partition::new(lambda.clone()).unwrap());
                assert_eq!(got, BigUint::from(fitting_brute(&lambda)), "λ = {:?}", lambda);
            }
        }
    }

    #[test]
    fn three_methods_agree() {
        for s in compositions_up_to(8) {
            let r = count_recurrence(&s);
            assert_eq!(r, count_determinant(&s), "s = {}", s);
            assert_eq!(r, count_exhaustive(&s, 1 << 20).unwrap(), "s = {}", s);
        }
    }

    #[test]
    fn cache() {
        let cache = CountCache::new();
        assert!(cache.is_empty());
        assert_eq!(cache.get(&c(&[3, 4, 3])), BigUint::from(15u32));
        assert_eq!(cache.get(&c(&[3, 4, 3])), BigUint::from(15u32));
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn cap_refuses() {
        assert_eq!(count_exhaustive(&c(&[2, 2, 2, 2]), 3), Err(Error::CapExceeded(3)));
        assert_eq!(count_exhaustive(&c(&[2, 2, 2, 2]), 14).unwrap(), BigUint::from(14u32));
    }

    #[test]
    fn narayana_examples() {
        let d = narayana_distribution(&c(&[2, 2, 2]), Statistic::Peaks, 100).unwrap();
        assert_eq!(d.to_text(), "1:1 2:3 3:1");
        assert_eq!(classical_narayana(3, 2).unwrap(), BigUint::from(3u32));
        assert!(classical_narayana(3, 0).is_err());
        assert!(classical_narayana(3, 4).is_err());
        for st in Statistic::ALL {
            let d = narayana_distribution(&c(&[5]), st, 10).unwrap();
            assert_eq!(d.to_text(), "1:1");
        }
        assert!(narayana_distribution(&c(&[2, 1]), Statistic::PartitionBlocks, 10).is_err());
        assert_eq!(d_json(), r#"{"statistic":"peaks","counts":{"1":1,"2":3,"3":1}}"#);
    }

    fn d_json() -> String {
        narayana_distribution(&c(&[2, 2, 2]), Statistic::Peaks, 100).unwrap().to_json()
    }

    #[test]
    fn narayana_sums() {
        for n in 1..=8u64 {
            let total: BigUint = (1..=n).map(|k| classical_narayana(n, k).unwrap()).sum();
            assert_eq!(total, count_recurrence(&c(&vec![2; n as usize])));
        }
    }

    #[test]
    fn rational_counts() {
        assert_eq!(rational_catalan(3, 5).unwrap(), BigUint::from(7u32));
        assert_eq!(rational_catalan(4, 6), Err(Error::NotCoprime(4, 6)));
    }

    #[test]
    fn determinant_signs() {
        let m = vec![vec![BigInt::from(0), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(0)]];
        assert_eq!(bareiss_determinant(m), BigInt::from(-1));
        let m = vec![
            vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)],
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)],
        ];
        assert_eq!(bareiss_determinant(m), BigInt::from(6));
    }
}
