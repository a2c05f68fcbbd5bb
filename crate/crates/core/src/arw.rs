//! Laser partitions of rational Dyck paths, compared with the noncrossing
//! partition obtained through trees.

use num_rational::Ratio;
use serde::Serialize;

use crate::bijections::{path_to_tree, tree_to_partition};
use crate::error::{Error, Result};
use crate::noncrossing::SetPartition;
use crate::paths::DyckPath;
use crate::signatures::rational_signature;

/// The laser from the bottom of a north run, with its stopping abscissa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laser {
    pub x0: usize,
    pub y0: usize,
    /// `None` when the laser leaves the grid without touching the path.
    pub stop: Option<Ratio<i64>>,
}

fn check_pair(path: &DyckPath, a: u64, b: u64) -> Result<()> {
    let s = rational_signature(a, b)?;
    if path.s() != &s {
        return Err(Error::InvalidPath(format!("signature {} is not the ({}, {}) ribbon {}", path.s(), a, b, s)));
    }
    Ok(())
}

/// Heights of the east steps `1..=b-1`.
fn east_heights(path: &DyckPath) -> Vec<usize> {
    let mut h = Vec::new();
    for (j, &m) in path.mu().iter().enumerate() {
        h.extend(std::iter::repeat_n(j + 1, m));
    }
    h
}

/// One laser per maximal north run, fired with slope `a/b`.
pub fn lasers(path: &DyckPath, a: u64, b: u64) -> Result<Vec<Laser>> {
    check_pair(path, a, b)?;
    let (ai, bi) = (a as i64, b as i64);
    let xs = path.north_x();
    let heights = east_heights(path);
    let mut out = Vec::new();
    for j in 0..xs.len() {
        if j > 0 && xs[j] == xs[j - 1] {
            continue;
        }
        let (x0, y0) = (xs[j] as i64, j as i64);
        let mut stop: Option<Ratio<i64>> = None;
        let mut better = |r: Ratio<i64>| {
            if stop.is_none_or(|s| r < s) {
                stop = Some(r);
            }
        };
        // vertical segments, one per north step
        for (k, &x) in xs.iter().enumerate() {
            let x = x as i64;
            let lift = bi * y0 + ai * (x - x0);
            if x > x0 && bi * (k as i64) <= lift && lift <= bi * (k as i64 + 1) {
                better(Ratio::from_integer(x));
            }
        }
        // east steps crossed from below
        for (u, &y) in heights.iter().enumerate() {
            let (u, y) = (u as i64, y as i64);
            let num = ai * x0 + bi * (y - y0);
            if y > y0 && ai * u < num && num < ai * (u + 1) {
                better(Ratio::new(num, ai));
            }
        }
        out.push(Laser { x0: x0 as usize, y0: y0 as usize, stop });
    }
    Ok(out)
}

/// Groups `1..=b-1` by the set of lasers passing strictly below each label.
pub fn laser_partition(path: &DyckPath, a: u64, b: u64) -> Result<SetPartition> {
    let ls = lasers(path, a, b)?;
    let heights = east_heights(path);
    let (ai, bi) = (a as i64, b as i64);
    let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for (idx, &h) in heights.iter().enumerate() {
        let i = idx as i64 + 1;
        let print: Vec<usize> = ls
            .iter()
            .enumerate()
            .filter(|(_, l)| {
                let x0 = l.x0 as i64;
                x0 < i
                    && l.stop.is_none_or(|s| Ratio::from_integer(i) <= s)
                    && bi * l.y0 as i64 + ai * (i - x0) < bi * h as i64
            })
            .map(|(k, _)| k)
            .collect();
        groups.entry(print).or_default().push(idx + 1);
    }
    SetPartition::new(groups.into_values().collect())
}

/// Both partitions of `1..=b-1` attached to a rational path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub a: u64,
    pub b: u64,
    pub mu: Vec<usize>,
    pub arw: Vec<Vec<usize>>,
    pub ours: Vec<Vec<usize>>,
    pub equal: bool,
}

/// Laser partition next to the partition read off the tree of the path.
pub fn compare_constructions(path: &DyckPath, a: u64, b: u64) -> Result<Comparison> {
    let arw = laser_partition(path, a, b)?;
    path.s().require_at_least_two()?;
    let ours = tree_to_partition(&path_to_tree(path))?;
    Ok(Comparison {
        a,
        b,
        mu: path.mu().to_vec(),
        equal: arw == ours,
        arw: arw.blocks().to_vec(),
        ours: ours.blocks().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::WeakComposition;

    fn path(a: u64, b: u64, mu: &[usize]) -> DyckPath {
        DyckPath::new(rational_signature(a, b).unwrap(), WeakComposition::new(mu.to_vec())).unwrap()
    }

    #[test]
    fn running_example() {
        let p = path(5, 13, &[0, 2, 4, 4, 2]);
        let arw = laser_partition(&p, 5, 13).unwrap();
        assert_eq!(arw.to_string(), "1,2,5,6,9,10|3,4|7,8|11,12");
        let c = compare_constructions(&p, 5, 13).unwrap();
        assert_eq!(c.ours, vec![vec![1, 2, 5, 6, 10], vec![3, 4], vec![7, 8, 9], vec![11, 12]]);
        assert!(!c.equal);
    }

    #[test]
    fn wrong_signature() {
        let p = path(5, 13, &[0, 2, 4, 4, 2]);
        assert!(laser_partition(&p, 5, 12).is_err());
        assert!(laser_partition(&p, 3, 13).is_err());
    }
}
