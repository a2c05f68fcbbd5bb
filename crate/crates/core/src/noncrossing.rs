//! Set partitions, noncrossing s-partitions and complete noncrossing s-matchings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::{tree_to_matching, tree_to_partition};
use crate::error::{Error, Result};
use crate::signatures::{refines, Composition};
use crate::trees::{enumerate_trees, TreeIter};

/// A set partition of `[n]`, blocks sorted and listed by increasing minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;
    fn try_from(raw: RawPartition) -> Result<Self> {
        SetPartition::new(raw.blocks)
    }
}

impl SetPartition {
    /// Validates that the blocks are nonempty, disjoint and cover `1..=n`,
    /// then puts them in minimal order.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidPartition(format!(
                        "blocks do not partition [{}] (element {})",
                        n, x
                    )));
                }
                seen[x - 1] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub(crate) fn from_sorted_unchecked(blocks: Vec<Vec<usize>>) -> Self {
        let p = SetPartition { blocks };
        debug_assert_eq!(SetPartition::new(p.blocks.clone()).as_ref(), Ok(&p));
        p
    }

    pub fn empty() -> Self {
        SetPartition { blocks: Vec::new() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `μ(π)`: block sizes in minimal order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// Block index of every element of `[n]`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground_size()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x - 1] = i;
            }
        }
        out
    }

    /// No `x < y < z < w` with `x, z` in one block and `y, w` in another.
    pub fn is_noncrossing(&self) -> bool {
        let owner = self.block_of();
        for b in &self.blocks {
            for gap in b.windows(2) {
                for e in gap[0] + 1..gap[1] {
                    let other = &self.blocks[owner[e - 1]];
                    if other[0] < gap[0] || *other.last().unwrap() > gap[1] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Noncrossing and `s` refines `μ(π)`.
    pub fn is_s_partition(&self, s: &Composition) -> bool {
        self.is_noncrossing() && refines(s, &self.block_sizes())
    }

    /// Noncrossing partition of `[|s|]` with block sizes exactly `s`.
    pub fn is_complete_matching(&self, s: &Composition) -> bool {
        self.is_noncrossing() && self.block_sizes() == s.parts()
    }

    /// True when the two blocks are nested or separated (never interleaved).
    pub fn nested_or_separated(&self, i: usize, j: usize) -> bool {
        let (p, q) = (&self.blocks[i], &self.blocks[j]);
        let inside = |x: usize, b: &[usize]| b.windows(2).position(|g| g[0] < x && x < g[1]);
        let (pmin, pmax) = (p[0], *p.last().unwrap());
        let (qmin, qmax) = (q[0], *q.last().unwrap());
        if pmax < qmin || qmax < pmin {
            return true;
        }
        // one block must sit inside a single gap of the other
        let fits = |a: &[usize], b: &[usize]| {
            let g = inside(a[0], b);
            g.is_some() && a.iter().all(|&x| inside(x, b) == g)
        };
        fits(p, q) || fits(q, p)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("-");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            crate::signatures::write_list(f, b)?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    /// Parses `1,2,6,7,8|3,4,5|9,10,11,12,13`; `-` or the empty string is the
    /// partition of the empty set.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "-" {
            return Ok(SetPartition::empty());
        }
        let blocks = t
            .split('|')
            .map(crate::signatures::parse_list)
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

/// A complete noncrossing s-matching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "RawMatching")]
pub struct Matching {
    partition: SetPartition,
    s: Composition,
}

#[derive(Deserialize)]
struct RawMatching {
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;
    fn try_from(raw: RawMatching) -> Result<Self> {
        Matching::new(SetPartition::new(raw.blocks)?)
    }
}

impl Matching {
    /// The signature is read off the block sizes; the partition must be noncrossing.
    pub fn new(partition: SetPartition) -> Result<Self> {
        if !partition.is_noncrossing() {
            return Err(Error::InvalidPartition(format!("{} is crossing", partition)));
        }
        let s = Composition::new(partition.block_sizes()).expect("blocks are nonempty");
        Ok(Matching { partition, s })
    }

    pub fn with_signature(partition: SetPartition, s: &Composition) -> Result<Self> {
        let m = Matching::new(partition)?;
        if &m.s != s {
            return Err(Error::InvalidPartition(format!(
                "block sizes ({}) differ from s = ({})",
                m.s, s
            )));
        }
        Ok(m)
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn s(&self) -> &Composition {
        &self.s
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.partition.blocks()
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.partition.serialize(ser)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

impl FromStr for Matching {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Matching::new(text.parse()?)
    }
}

/// All noncrossing partitions of `[|s|]` refined by `s`, in canonical tree order.
pub fn enumerate_noncrossing_partitions(s: &Composition) -> PartitionIter {
    let plus = Composition::new(s.iter().map(|&p| p + 1).collect()).expect("positive");
    PartitionIter { trees: enumerate_trees(&plus) }
}

/// Lazy iterator over `NC_s`.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    trees: TreeIter,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;
    fn next(&mut self) -> Option<SetPartition> {
        self.trees.next().map(|t| tree_to_partition(&t).expect("signature entries are at least 2"))
    }
}

/// All complete noncrossing s-matchings, in canonical tree order.
pub fn enumerate_matchings(s: &Composition) -> MatchingIter {
    MatchingIter { trees: enumerate_trees(s) }
}

/// Lazy iterator over `CM_s`.
#[derive(Debug, Clone)]
pub struct MatchingIter {
    trees: TreeIter,
}

impl Iterator for MatchingIter {
    type Item = Matching;
    fn next(&mut self) -> Option<Matching> {
        self.trees.next().map(|t| tree_to_matching(&t))
    }
}

/// Every set partition of `[n]` via restricted growth strings.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    fn go(n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if rgs.len() == n {
            let mut blocks = vec![Vec::new(); max];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max {
            rgs.push(b);
            go(n, rgs, max.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Noncrossing partitions of `[n]`, filtered from [`all_set_partitions`].
pub fn brute_noncrossing_partitions(n: usize) -> Vec<SetPartition> {
    all_set_partitions(n).into_iter().filter(|p| p.is_noncrossing()).collect()
}
