//! Compositions, weak compositions and the orders and operations on them.
//!
//! A [`Composition`] is the signature that indexes every family in this
//! crate. A [`WeakComposition`] may contain zeros and carries east-step data
//! of lattice paths and parking-function parameters.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

/// A finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

/// A nonincreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn empty() -> Self {
        WeakComposition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|mu|`
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Prefix sums `mu(1) + ... + mu(i)` for `i = 1..=len`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        prefix_sums(&self.0)
    }

    /// Adds one to every entry.
    pub fn plus_one(&self) -> Composition {
        Composition(self.0.iter().map(|&p| p + 1).collect())
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "entry {} of {:?} is zero",
                pos + 1,
                parts
            )));
        }
        Ok(Composition(parts))
    }

    /// The empty composition.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `s - 1`, the entrywise decrement. `∅ - 1 = ∅`.
    pub fn minus_one(&self) -> WeakComposition {
        WeakComposition(self.0.iter().map(|&p| p - 1).collect())
    }

    /// `|s| - ℓ(s)`: caverns of an s-tree, east steps before the final one
    /// of an s-Dyck path.
    pub fn excess(&self) -> usize {
        self.sum() - self.len()
    }

    /// True when every entry is at least 2.
    pub fn all_at_least_two(&self) -> bool {
        self.0.iter().all(|&p| p >= 2)
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// The contiguous factor `s[start..end]`.
    pub fn factor(&self, start: usize, end: usize) -> Composition {
        Composition(self.0[start..end].to_vec())
    }

    /// Errors with [`Error::Proviso`] unless every entry is at least 2.
    pub fn require_at_least_two(&self) -> Result<()> {
        if self.all_at_least_two() {
            Ok(())
        } else {
            Err(Error::Proviso(self.to_string()))
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("partition {:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidComposition(format!("partition {:?} is not nonincreasing", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

macro_rules! slice_newtype {
    ($t:ty) => {
        impl Deref for $t {
            type Target = [usize];
            fn deref(&self) -> &[usize] {
                &self.0
            }
        }

        impl AsRef<[usize]> for $t {
            fn as_ref(&self) -> &[usize] {
                &self.0
            }
        }

        impl From<$t> for Vec<usize> {
            fn from(v: $t) -> Vec<usize> {
                v.0
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_list(f, &self.0)
            }
        }
    };
}

slice_newtype!(WeakComposition);
slice_newtype!(Composition);
slice_newtype!(Partition);

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Composition> for WeakComposition {
    fn from(s: Composition) -> Self {
        WeakComposition(s.0)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        parse_list(text).map(WeakComposition)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Composition::new(parse_list(text)?)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x)?;
    }
    Ok(())
}

/// Parses `"3,4,4,2,5"`; the empty (or all-whitespace) string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{}` is not a nonnegative integer", t.trim())))
        })
        .collect()
}

pub(crate) fn prefix_sums(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .scan(0usize, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// True when `nu` is obtained from `mu` by adding adjacent parts.
pub fn refines(mu: &[usize], nu: &[usize]) -> bool {
    let mut it = mu.iter();
    for &target in nu {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(&p) => acc += p,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    it.next().is_none()
}

/// Dominance order on weak compositions; the shorter argument is padded
/// with trailing zeros.
pub fn dominance_leq(mu: &[usize], nu: &[usize]) -> bool {
    let len = mu.len().max(nu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += mu.get(i).copied().unwrap_or(0);
        b += nu.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

/// The dominance difference `nu ∖ mu`, of length `ℓ(nu) - 1`.
pub fn dominance_diff(nu: &[usize], mu: &[usize]) -> Result<WeakComposition> {
    let sum_nu: usize = nu.iter().sum();
    let sum_mu: usize = mu.iter().sum();
    if sum_nu != sum_mu {
        return Err(Error::InvalidComposition(format!(
            "dominance difference needs equal sums, got {} and {}",
            sum_nu, sum_mu
        )));
    }
    if !dominance_leq(mu, nu) {
        return Err(Error::InvalidComposition(format!("{:?} is not dominated by {:?}", mu, nu)));
    }
    let len = nu.len().saturating_sub(1);
    let (mut a, mut b) = (0usize, 0usize);
    let mut out = Vec::with_capacity(len);
    for (i, &n) in nu.iter().enumerate().take(len) {
        a += mu.get(i).copied().unwrap_or(0);
        b += n;
        out.push(b - a);
    }
    Ok(WeakComposition(out))
}

/// `mu ⊕ nu`
pub fn concat(mu: &[usize], nu: &[usize]) -> WeakComposition {
    let mut parts = mu.to_vec();
    parts.extend_from_slice(nu);
    WeakComposition(parts)
}

/// The degree sequence of the ribbon cut out by the diagonal of a `b × a`
/// grid: `s(i) = ⌈b/a⌉ + [0 < i·r mod a < r]` with `r = b mod a`.
pub fn rational_signature(a: u64, b: u64) -> Result<Composition> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidComposition(format!("rational pair ({}, {}) needs a, b ≥ 1", a, b)));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let ceil = b.div_ceil(a);
    let r = b % a;
    let parts = (1..=a)
        .map(|i| {
            let m = (i * r) % a;
            (ceil + u64::from(0 < m && m < r)) as usize
        })
        .collect();
    Ok(Composition(parts))
}

/// `λ^s_j = Σ_{i=1}^{a-j} (s_i - 1)` for `j = 1..a-1`.
pub fn lambda_of(s: &Composition) -> Partition {
    let a = s.len();
    if a <= 1 {
        return Partition(Vec::new());
    }
    let pre = prefix_sums(&s.minus_one());
    let parts: Vec<usize> = (1..a).map(|j| pre[a - j - 1]).collect();
    // zero parts are dropped: λ is a partition
    Partition(parts.into_iter().filter(|&p| p > 0).collect())
}

/// All compositions of `n` in lexicographic order. `n = 0` yields `∅`.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            go(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// All compositions with sum at most `max_weight`, by weight then lex.
pub fn compositions_up_to(max_weight: usize) -> Vec<Composition> {
    (0..=max_weight).flat_map(compositions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&[3, 2, 1, 1, 5, 2, 2], &[6, 1, 7, 2]));
        assert!(refines(&[3, 4, 4, 2, 5], &[3, 4, 4, 2, 5]));
        assert!(!refines(&[3, 3, 3, 4], &[5, 3, 5]));
        assert!(refines(&[], &[]));
        assert!(!refines(&[1, 1], &[1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&[1, 1, 4, 2], &[1, 2, 3, 3]));
        assert!(dominance_leq(&[2, 0, 1], &[2, 0, 1]));
        assert!(!dominance_leq(&[2, 0], &[1, 1]));
        // padding
        assert!(dominance_leq(&[1], &[1, 0, 0]));
        assert!(!dominance_leq(&[0, 0, 1], &[]));
    }

    #[test]
    fn dominance_difference() {
        let d = dominance_diff(&[1, 2, 3, 3], &[1, 1, 4, 3]).unwrap();
        assert_eq!(d.parts(), &[0, 1, 0]);
        let d = dominance_diff(&[2, 3, 3, 1, 4], &[0, 2, 6, 0, 5]).unwrap();
        assert_eq!(concat(&[0], &d).parts(), &[0, 2, 3, 0, 1]);
        assert_eq!(dominance_diff(&[2, 3, 1], &[2, 3, 1]).unwrap().parts(), &[0, 0]);
        assert!(dominance_diff(&[1, 1], &[2, 0]).is_err());
        assert!(dominance_diff(&[1, 1], &[1, 0]).is_err());
    }

    #[test]
    fn concatenation() {
        assert_eq!(concat(&[3, 2, 1], &[1, 5, 2, 2]).parts(), &[3, 2, 1, 1, 5, 2, 2]);
        assert_eq!(concat(&[], &[4, 1]).parts(), &[4, 1]);
        assert_eq!(concat(&[2], &[2]).parts(), &[2, 2]);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational_signature(5, 8).unwrap(), c(&[2, 3, 2, 3, 2]));
        assert_eq!(rational_signature(5, 13).unwrap(), c(&[3, 4, 3, 4, 3]));
        for n in 1..=6u64 {
            assert_eq!(rational_signature(n, n + 1).unwrap().parts(), vec![2; n as usize]);
        }
        assert_eq!(rational_signature(4, 6), Err(Error::NotCoprime(4, 6)));
        assert!(rational_signature(0, 3).is_err());
        assert!(rational_signature(3, 0).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(&c(&[3, 4, 4, 2, 5])).parts(), &[9, 8, 5, 2]);
        assert!(lambda_of(&c(&[7])).parts().is_empty());
        assert_eq!(lambda_of(&c(&[2, 2, 2])).parts(), &[2, 1]);
        assert_eq!(lambda_of(&c(&[3, 4, 3])).parts(), &[5, 2]);
    }

    #[test]
    fn parse_and_display() {
        let s: Composition = "3,4,4,2,5".parse().unwrap();
        assert_eq!(s.to_string(), "3,4,4,2,5");
        let e: Composition = "".parse().unwrap();
        assert!(e.is_empty());
        assert!("3,0".parse::<Composition>().is_err());
        assert!("3,x".parse::<Composition>().is_err());
        let w: WeakComposition = "0,2,6,0,5".parse().unwrap();
        assert_eq!(w.sum(), 13);
    }

    #[test]
    fn composition_counts() {
        for n in 1..=8 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
        assert_eq!(compositions(0), vec![Composition::empty()]);
    }
}
