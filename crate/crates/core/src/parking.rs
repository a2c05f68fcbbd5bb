//! μ-parking functions, decorated s-Dyck paths and decorated s-trees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bijections::{path_to_tree, tree_to_path};
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, DyckPath, PathIter};
use crate::signatures::{parse_list, prefix_sums, write_list, Composition, WeakComposition};
use crate::trees::PlanarTree;

/// Bound on the `i`-th smallest preference (0-based): the sum of the first `i` entries of `μ`.
fn bounds(mu: &[usize]) -> Vec<usize> {
    std::iter::once(0).chain(prefix_sums(mu)).take(mu.len()).collect()
}

/// Sorted preferences `q` satisfy `q_1 = 0` and `q_i ≤ μ(1) + ... + μ(i-1)`.
pub fn is_parking(prefs: &[usize], mu: &[usize]) -> bool {
    if prefs.len() != mu.len() {
        return false;
    }
    let mut q = prefs.to_vec();
    q.sort_unstable();
    q.iter().zip(bounds(mu)).all(|(&x, b)| x <= b)
}

/// A μ-parking function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParking")]
pub struct ParkingFunction {
    prefs: Vec<usize>,
    mu: WeakComposition,
}

#[derive(Deserialize)]
struct RawParking {
    prefs: Vec<usize>,
    mu: WeakComposition,
}

impl TryFrom<RawParking> for ParkingFunction {
    type Error = Error;
    fn try_from(raw: RawParking) -> Result<Self> {
        ParkingFunction::new(raw.prefs, raw.mu)
    }
}

impl ParkingFunction {
    pub fn new(prefs: Vec<usize>, mu: WeakComposition) -> Result<Self> {
        if !is_parking(&prefs, &mu) {
            return Err(Error::InvalidParking(format!("({}) is not a ({})-parking function", List(&prefs), mu)));
        }
        Ok(ParkingFunction { prefs, mu })
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    pub fn mu(&self) -> &WeakComposition {
        &self.mu
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.prefs)
    }
}

struct List<'a>(&'a [usize]);

impl fmt::Display for List<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0)
    }
}

fn check_labels(labels: &[usize], a: usize) -> Result<()> {
    if labels.len() != a {
        return Err(Error::Arity { expected: a, got: labels.len() });
    }
    let mut seen = vec![false; a];
    for &l in labels {
        if l == 0 || l > a || seen[l - 1] {
            return Err(Error::InvalidParking(format!("labels ({}) are not a permutation of [{}]", List(labels), a)));
        }
        seen[l - 1] = true;
    }
    Ok(())
}

/// An s-Dyck path whose north steps carry the labels `1..=a`, increasing
/// along each run of consecutive north steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDecoratedPath")]
pub struct DecoratedPath {
    s: Composition,
    mu: WeakComposition,
    labels: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDecoratedPath {
    s: Composition,
    mu: WeakComposition,
    labels: Vec<usize>,
}

impl TryFrom<RawDecoratedPath> for DecoratedPath {
    type Error = Error;
    fn try_from(raw: RawDecoratedPath) -> Result<Self> {
        DecoratedPath::new(DyckPath::new(raw.s, raw.mu)?, raw.labels)
    }
}

impl DecoratedPath {
    /// `labels[j]` decorates the `(j+1)`-th north step.
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<Self> {
        check_labels(&labels, path.s().len())?;
        let mu = path.mu();
        for j in 1..labels.len() {
            if mu[j - 1] == 0 && labels[j - 1] > labels[j] {
                return Err(Error::InvalidParking(format!(
                    "labels ({}) decrease along a run of north steps",
                    List(&labels)
                )));
            }
        }
        Ok(DecoratedPath { s: path.s().clone(), mu: path.mu().clone(), labels })
    }

    pub fn path(&self) -> DyckPath {
        DyckPath::new_unchecked(self.s.clone(), self.mu.clone())
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

impl fmt::Display for DecoratedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}; mu={}; labels={}", self.s, self.mu, List(&self.labels))
    }
}

impl FromStr for DecoratedPath {
    type Err = Error;
    /// Parses `s=2,2; mu=0,2; labels=1,2`.
    fn from_str(text: &str) -> Result<Self> {
        let (path_part, labels) = split_labels(text)?;
        DecoratedPath::new(path_part.parse()?, labels)
    }
}

fn split_labels(text: &str) -> Result<(String, Vec<usize>)> {
    let mut rest = Vec::new();
    let mut labels = None;
    for field in text.split(';') {
        match field.trim().strip_prefix("labels=") {
            Some(v) => labels = Some(parse_list(v)?),
            None => rest.push(field),
        }
    }
    let labels = labels.ok_or_else(|| Error::Parse(format!("`{}` needs labels=", text)))?;
    Ok((rest.join(";"), labels))
}

/// An s-tree whose internal nodes carry the labels `1..=a`; an internal
/// node that is the leftmost child of its parent has a larger label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDecoratedTree")]
pub struct DecoratedTree {
    tree: PlanarTree,
    labels: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDecoratedTree {
    tree: PlanarTree,
    labels: Vec<usize>,
}

impl TryFrom<RawDecoratedTree> for DecoratedTree {
    type Error = Error;
    fn try_from(raw: RawDecoratedTree) -> Result<Self> {
        DecoratedTree::new(raw.tree, raw.labels)
    }
}

impl DecoratedTree {
    /// `labels[k]` decorates the `(k+1)`-th internal node in preorder.
    pub fn new(tree: PlanarTree, labels: Vec<usize>) -> Result<Self> {
        check_labels(&labels, tree.internal_count())?;
        let d = tree.degrees();
        let internal = tree.internal_positions();
        for k in 1..internal.len() {
            let p = internal[k];
            // leftmost child of an internal node: directly after its parent
            if d[p - 1] > 0 && labels[k - 1] > labels[k] {
                return Err(Error::InvalidParking(format!(
                    "labels ({}) decrease from a node to its leftmost child",
                    List(&labels)
                )));
            }
        }
        Ok(DecoratedTree { tree, labels })
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; labels={}", self.tree, List(&self.labels))
    }
}

impl FromStr for DecoratedTree {
    type Err = Error;
    /// Parses `[2,2,0,0,0]; labels=1,2`.
    fn from_str(text: &str) -> Result<Self> {
        let (tree_part, labels) = split_labels(text)?;
        DecoratedTree::new(tree_part.parse()?, labels)
    }
}

/// `p_i` is the number of east steps before the north step labeled `i`.
pub fn decorated_path_to_parking(dp: &DecoratedPath) -> ParkingFunction {
    let xs = dp.path().north_x();
    let mut prefs = vec![0; xs.len()];
    for (j, &l) in dp.labels.iter().enumerate() {
        prefs[l - 1] = xs[j];
    }
    ParkingFunction { prefs, mu: dp.s.minus_one() }
}

/// Cars sorted by preference, ties by label, give the north steps bottom to top.
pub fn parking_to_decorated_path(p: &ParkingFunction, s: &Composition) -> Result<DecoratedPath> {
    if p.mu != s.minus_one() {
        return Err(Error::InvalidParking(format!("parameter ({}) is not s - 1 for s = ({})", p.mu, s)));
    }
    let a = p.prefs.len();
    let mut cars: Vec<usize> = (1..=a).collect();
    cars.sort_by_key(|&i| (p.prefs[i - 1], i));
    let xs: Vec<usize> = cars.iter().map(|&i| p.prefs[i - 1]).collect();
    let mut mu = Vec::with_capacity(a);
    for j in 0..a {
        let next = xs.get(j + 1).copied().unwrap_or(s.excess());
        mu.push(next - xs[j]);
    }
    let path = DyckPath::new(s.clone(), WeakComposition::new(mu))?;
    DecoratedPath::new(path, cars)
}

/// `p_i` is the preorder index (from 0) of the leftmost leaf below the node labeled `i`.
pub fn decorated_tree_to_parking(dt: &DecoratedTree) -> ParkingFunction {
    let d = dt.tree.degrees();
    let mut prefs = vec![0; dt.labels.len()];
    let mut leaves = 0;
    let mut k = 0;
    for &x in d {
        if x == 0 {
            leaves += 1;
        } else {
            // the leftmost leaf below comes before any further leaf
            prefs[dt.labels[k] - 1] = leaves;
            k += 1;
        }
    }
    ParkingFunction { prefs, mu: dt.tree.signature().minus_one() }
}

/// Moves a decoration along θ.
pub fn decorated_tree_to_path(dt: &DecoratedTree) -> DecoratedPath {
    let path = tree_to_path(&dt.tree);
    DecoratedPath { s: path.s().clone(), mu: path.mu().clone(), labels: dt.labels.clone() }
}

/// Moves a decoration along ζ.
pub fn decorated_path_to_tree(dp: &DecoratedPath) -> DecoratedTree {
    DecoratedTree { tree: path_to_tree(&dp.path()), labels: dp.labels.clone() }
}

/// μ-parking functions in lexicographic order of the preference vector.
pub fn enumerate_parking(mu: &WeakComposition) -> ParkingIter {
    let b = bounds(mu);
    let max = b.last().copied().unwrap_or(0);
    ParkingIter { mu: mu.clone(), bounds: b, max, current: None, done: false }
}

/// Lazy depth-first search over preference vectors, pruned on the sorted
/// prefix conditions.
#[derive(Debug, Clone)]
pub struct ParkingIter {
    mu: WeakComposition,
    bounds: Vec<usize>,
    max: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl ParkingIter {
    /// Can the first `prefix.len()` preferences be completed?
    fn feasible(&self, prefix: &[usize]) -> bool {
        let free = self.bounds.len() - prefix.len();
        self.bounds
            .iter()
            .enumerate()
            .all(|(i, &b)| prefix.iter().filter(|&&x| x <= b).count() + free > i)
    }
}

impl Iterator for ParkingIter {
    type Item = ParkingFunction;
    fn next(&mut self) -> Option<ParkingFunction> {
        if self.done {
            return None;
        }
        let a = self.bounds.len();
        let next = match self.current.take() {
            // all zeros is always a parking function
            None => Some(vec![0; a]),
            Some(mut cur) => {
                let mut found = None;
                'outer: for pos in (0..a).rev() {
                    for v in cur[pos] + 1..=self.max {
                        cur[pos] = v;
                        if self.feasible(&cur[..=pos]) {
                            for x in &mut cur[pos + 1..] {
                                *x = 0;
                            }
                            found = Some(cur);
                            break 'outer;
                        }
                    }
                }
                found
            }
        };
        match next {
            Some(p) => {
                self.current = Some(p.clone());
                Some(ParkingFunction { prefs: p, mu: self.mu.clone() })
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

/// `|PF_μ|`: walks the admissible sorted vectors and adds `a! / ∏ mult!` for each.
pub fn count_parking(mu: &WeakComposition) -> BigUint {
    fn fact(n: usize) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
    }
    fn go(b: &[usize], i: usize, last: Option<usize>, run: usize, denom: BigUint, total: &mut BigUint) {
        if i == b.len() {
            *total += fact(b.len()) / (denom * fact(run));
            return;
        }
        for v in last.unwrap_or(0)..=b[i] {
            if Some(v) == last {
                go(b, i + 1, last, run + 1, denom.clone(), total);
            } else {
                go(b, i + 1, Some(v), 1, &denom * fact(run), total);
            }
        }
    }
    let mut total = BigUint::from(0u32);
    go(&bounds(mu), 0, None, 0, BigUint::one(), &mut total);
    total
}

/// Every decoration of every s-Dyck path: paths in canonical order, labels
/// in lexicographic order.
pub fn enumerate_decorated_paths(s: &Composition) -> DecoratedPathIter {
    DecoratedPathIter { paths: enumerate_paths(s), pending: Vec::new() }
}

/// Lazy iterator over decorated s-Dyck paths.
#[derive(Debug, Clone)]
pub struct DecoratedPathIter {
    paths: PathIter,
    pending: Vec<DecoratedPath>,
}

impl Iterator for DecoratedPathIter {
    type Item = DecoratedPath;
    fn next(&mut self) -> Option<DecoratedPath> {
        while self.pending.is_empty() {
            let path = self.paths.next()?;
            let mut all = decorations(&path);
            all.reverse();
            self.pending = all;
        }
        self.pending.pop()
    }
}

/// Decorations of one path: each run of north steps gets an increasing set
/// of labels; runs are filled bottom to top with subsets in lexicographic order.
pub fn decorations(path: &DyckPath) -> Vec<DecoratedPath> {
    let a = path.s().len();
    let mut runs = Vec::new();
    let mut len = 0;
    for (j, &m) in path.mu().iter().enumerate() {
        len += 1;
        if m > 0 || j + 1 == a {
            runs.push(len);
            len = 0;
        }
    }
    fn go(runs: &[usize], free: &mut Vec<bool>, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&k, rest)) = runs.split_first() else {
            out.push(labels.clone());
            return;
        };
        choose(k, 0, rest, free, labels, out);
    }
    fn choose(
        k: usize,
        from: usize,
        rest: &[usize],
        free: &mut Vec<bool>,
        labels: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == 0 {
            go(rest, free, labels, out);
            return;
        }
        for x in from..free.len() {
            if free[x] {
                free[x] = false;
                labels.push(x + 1);
                choose(k - 1, x + 1, rest, free, labels, out);
                labels.pop();
                free[x] = true;
            }
        }
    }
    let mut out = Vec::new();
    go(&runs, &mut vec![true; a], &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|labels| DecoratedPath { s: path.s().clone(), mu: path.mu().clone(), labels })
        .collect()
}

/// Decorated s-trees in the order of [`enumerate_decorated_paths`].
pub fn enumerate_decorated_trees(s: &Composition) -> impl Iterator<Item = DecoratedTree> {
    enumerate_decorated_paths(s).map(|dp| decorated_path_to_tree(&dp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn predicate() {
        assert!(is_parking(&[0, 4, 0, 5, 4, 0, 3], &[1; 7]));
        assert!(is_parking(&[0; 4], &[1; 4]));
        assert!(!is_parking(&[1, 1], &[1, 1]));
        assert!(!is_parking(&[0, 1], &[1]));
    }

    #[test]
    fn running_parking() {
        let s = c(&[2; 7]);
        let p = ParkingFunction::new(vec![0, 4, 0, 5, 4, 0, 3], s.minus_one()).unwrap();
        let dp = parking_to_decorated_path(&p, &s).unwrap();
        assert_eq!(dp.path().mu().parts(), &[0, 0, 3, 1, 0, 1, 2]);
        assert_eq!(dp.labels(), &[1, 3, 6, 7, 2, 5, 4]);
        assert_eq!(decorated_path_to_parking(&dp), p);
        let dt = decorated_path_to_tree(&dp);
        assert_eq!(decorated_tree_to_parking(&dt), p);
        assert_eq!(decorated_tree_to_path(&dt), dp);
    }

    #[test]
    fn small_cases() {
        let s = c(&[4]);
        let dp = DecoratedPath::new(DyckPath::new(s.clone(), w(&[3])).unwrap(), vec![1]).unwrap();
        assert_eq!(decorated_path_to_parking(&dp).prefs(), &[0]);
        let dt = DecoratedTree::new(PlanarTree::corolla(4), vec![1]).unwrap();
        assert_eq!(decorated_tree_to_parking(&dt).prefs(), &[0]);
        let zero = ParkingFunction::new(vec![0, 0, 0], c(&[2, 2, 2]).minus_one()).unwrap();
        let dp = parking_to_decorated_path(&zero, &c(&[2, 2, 2])).unwrap();
        assert_eq!(dp.path().mu().parts(), &[0, 0, 3]);
        assert_eq!(dp.labels(), &[1, 2, 3]);
    }

    #[test]
    fn invalid_decorations() {
        let path = DyckPath::new(c(&[2, 2]), w(&[0, 2])).unwrap();
        assert!(DecoratedPath::new(path.clone(), vec![2, 1]).is_err());
        assert!(DecoratedPath::new(path.clone(), vec![1, 1]).is_err());
        assert!(DecoratedPath::new(path, vec![1, 2]).is_ok());
        let t: PlanarTree = "[2,2,0,0,0]".parse().unwrap();
        assert!(DecoratedTree::new(t.clone(), vec![2, 1]).is_err());
        let u: PlanarTree = "[2,0,2,0,0]".parse().unwrap();
        assert!(DecoratedTree::new(u, vec![2, 1]).is_ok());
    }

    #[test]
    fn counts() {
        for n in 1..=5usize {
            let expect = (n + 1).pow(n as u32 - 1);
            assert_eq!(count_parking(&w(&vec![1; n])), BigUint::from(expect));
            assert_eq!(enumerate_parking(&w(&vec![1; n])).count(), expect);
        }
        assert_eq!(count_parking(&w(&[0, 0, 0])), BigUint::one());
        assert_eq!(enumerate_parking(&w(&[0, 0, 0])).count(), 1);
        assert_eq!(count_parking(&w(&[])), BigUint::one());
        assert_eq!(count_parking(&c(&[2, 2]).minus_one()), BigUint::from(3u32));
    }

    #[test]
    fn enumeration_is_lex_and_matches_filter() {
        for mu in [vec![1, 1, 1], vec![0, 2, 1], vec![2, 0, 3], vec![3, 1], vec![1, 2, 0, 1]] {
            let mu = w(&mu);
            let got: Vec<Vec<usize>> = enumerate_parking(&mu).map(|p| p.prefs().to_vec()).collect();
            assert!(got.windows(2).all(|p| p[0] < p[1]));
            let a = mu.len();
            let max = mu.sum();
            let mut brute = Vec::new();
            let mut v = vec![0; a];
            loop {
                if is_parking(&v, &mu) {
                    brute.push(v.clone());
                }
                let mut i = a;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    v[i] += 1;
                    if v[i] <= max {
                        break;
                    }
                    v[i] = 0;
                }
                if v.iter().all(|&x| x == 0) {
                    break;
                }
            }
            assert_eq!(got, brute);
            assert_eq!(BigUint::from(got.len()), count_parking(&mu));
        }
    }

    #[test]
    fn round_trip_small() {
        let s = c(&[2, 2, 2]);
        let all: Vec<_> = enumerate_parking(&s.minus_one()).collect();
        assert_eq!(all.len(), 16);
        for p in all {
            let dp = parking_to_decorated_path(&p, &s).unwrap();
            assert_eq!(decorated_path_to_parking(&dp), p);
        }
        assert_eq!(enumerate_decorated_paths(&s).count(), 16);
        for dt in enumerate_decorated_trees(&s) {
            let via_path = decorated_path_to_parking(&decorated_tree_to_path(&dt));
            assert_eq!(decorated_tree_to_parking(&dt), via_path);
        }
    }

    #[test]
    fn text_forms() {
        let dp: DecoratedPath = "s=2,2; mu=0,2; labels=1,2".parse().unwrap();
        assert_eq!(dp.to_string(), "s=2,2; mu=0,2; labels=1,2");
        let dt: DecoratedTree = "[2,0,2,0,0]; labels=2,1".parse().unwrap();
        assert_eq!(dt.to_string(), "[2,0,2,0,0]; labels=2,1");
        let js = serde_json::to_string(&dp).unwrap();
        assert_eq!(js, r#"{"s":[2,2],"mu":[0,2],"labels":[1,2]}"#);
        assert!(serde_json::from_str::<DecoratedPath>(r#"{"s":[2,2],"mu":[0,2],"labels":[2,1]}"#).is_err());
    }
}
