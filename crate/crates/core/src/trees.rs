//! Planar rooted trees stored as their preorder degree sequence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::path_to_tree;
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, PathIter};
use crate::signatures::{parse_list, write_list, Composition};

/// A planar rooted tree, encoded by the degree of every node in preorder.
///
/// Leaves have degree 0. The identity tree `•` is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTree")]
pub struct PlanarTree {
    degrees: Vec<usize>,
}

#[derive(Deserialize)]
struct RawTree {
    degrees: Vec<usize>,
}

impl TryFrom<RawTree> for PlanarTree {
    type Error = Error;
    fn try_from(raw: RawTree) -> Result<Self> {
        PlanarTree::from_degrees(raw.degrees)
    }
}

/// A cavern, identified with the nonminimal child that closes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cavern {
    /// 1-based preorder index of the internal node owning the cavern.
    pub owner: usize,
    /// Gap index among the owner's children: gap `g` sits between child `g` and `g + 1`.
    pub position: usize,
    /// Preorder position (among all nodes) of the nonminimal child.
    pub node: usize,
}

/// Caverns of a tree in preorder order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CavernList(pub Vec<Cavern>);

impl CavernList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn owners(&self) -> Vec<usize> {
        self.0.iter().map(|c| c.owner).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cavern> {
        self.0.iter()
    }
}

/// Parent/children links computed from a degree sequence.
#[derive(Debug, Clone)]
pub struct Structure {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl PlanarTree {
    /// Validates the Łukasiewicz condition: `n = 1 + Σ degrees` and every
    /// proper prefix of length `p` has `1 + Σ > p`.
    pub fn from_degrees(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidTree("empty degree sequence".into()));
        }
        let mut open = 1usize;
        for (i, &d) in degrees.iter().enumerate() {
            if open == 0 {
                return Err(Error::InvalidTree(format!(
                    "degree sequence {:?} closes after {} nodes",
                    degrees, i
                )));
            }
            open = open - 1 + d;
        }
        if open != 0 {
            return Err(Error::InvalidTree(format!(
                "degree sequence {:?} leaves {} open slots",
                degrees, open
            )));
        }
        Ok(PlanarTree { degrees })
    }

    pub(crate) fn from_degrees_unchecked(degrees: Vec<usize>) -> Self {
        debug_assert!(PlanarTree::from_degrees(degrees.clone()).is_ok());
        PlanarTree { degrees }
    }

    /// The identity tree `•`.
    pub fn identity() -> Self {
        PlanarTree { degrees: vec![0] }
    }

    /// The corolla with `k` leaves.
    pub fn corolla(k: usize) -> Self {
        let mut degrees = vec![0; k + 1];
        degrees[0] = k;
        PlanarTree { degrees }
    }

    /// `[T_1, ..., T_k]`: a new root whose children are the given trees.
    pub fn from_children(children: &[PlanarTree]) -> Self {
        let mut degrees = vec![children.len()];
        for c in children {
            degrees.extend_from_slice(&c.degrees);
        }
        PlanarTree { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_identity(&self) -> bool {
        self.degrees.len() == 1
    }

    pub fn node_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 0).count()
    }

    pub fn internal_count(&self) -> usize {
        self.degrees.len() - self.leaf_count()
    }

    /// Preorder positions of the internal nodes.
    pub fn internal_positions(&self) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] > 0).collect()
    }

    /// Degrees of the internal nodes in preorder.
    pub fn signature(&self) -> Composition {
        Composition::new(self.degrees.iter().copied().filter(|&d| d > 0).collect())
            .expect("internal degrees are positive")
    }

    /// One past the last preorder position of the subtree rooted at `pos`.
    pub fn subtree_end(&self, pos: usize) -> usize {
        let mut open = 1usize;
        let mut i = pos;
        while open > 0 {
            open = open - 1 + self.degrees[i];
            i += 1;
        }
        i
    }

    pub fn subtree(&self, pos: usize) -> PlanarTree {
        PlanarTree { degrees: self.degrees[pos..self.subtree_end(pos)].to_vec() }
    }

    pub fn structure(&self) -> Structure {
        let n = self.degrees.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        // stack of (node, remaining child slots)
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for (i, &d) in self.degrees.iter().enumerate() {
            if let Some(top) = stack.last_mut() {
                parent[i] = Some(top.0);
                children[top.0].push(i);
                top.1 -= 1;
            }
            if d > 0 {
                stack.push((i, d));
            }
            while matches!(stack.last(), Some(&(_, 0))) {
                stack.pop();
            }
        }
        Structure { parent, children }
    }

    /// Area labels of every node in preorder: the root gets 0 and the
    /// `i`-th child counted from the right gets `i - 1` plus its parent's label.
    pub fn area_labeling(&self) -> Vec<usize> {
        let st = self.structure();
        let mut labels = vec![0usize; self.degrees.len()];
        for v in 0..self.degrees.len() {
            let k = st.children[v].len();
            for (c, &child) in st.children[v].iter().enumerate() {
                labels[child] = labels[v] + (k - 1 - c);
            }
        }
        labels
    }

    /// Area labels of the internal nodes only.
    pub fn internal_area_labels(&self) -> Vec<usize> {
        let labels = self.area_labeling();
        self.internal_positions().into_iter().map(|p| labels[p]).collect()
    }

    /// Caverns listed in the preorder of their nonminimal children.
    pub fn caverns(&self) -> CavernList {
        let st = self.structure();
        let mut internal_index = vec![0usize; self.degrees.len()];
        let mut k = 0;
        for (i, &d) in self.degrees.iter().enumerate() {
            if d > 0 {
                k += 1;
                internal_index[i] = k;
            }
        }
        let mut out = Vec::new();
        for node in 0..self.degrees.len() {
            if let Some(p) = st.parent[node] {
                let idx = st.children[p].iter().position(|&c| c == node).unwrap();
                if idx > 0 {
                    out.push(Cavern { owner: internal_index[p], position: idx, node });
                }
            }
        }
        CavernList(out)
    }

    /// The left-descendant internal nodes of the `v`-th internal node
    /// (1-based), including `v`. Always a contiguous run of indices.
    pub fn left_descendants(&self, v: usize) -> Result<Vec<usize>> {
        let positions = self.internal_positions();
        if v == 0 || v > positions.len() {
            return Err(Error::InvalidTree(format!("no internal node with index {}", v)));
        }
        let mut out = vec![v];
        let mut pos = positions[v - 1];
        // the leftmost child of a node sits right after it in preorder
        while self.degrees[pos + 1] > 0 {
            pos += 1;
            out.push(out.last().unwrap() + 1);
        }
        Ok(out)
    }

    /// Composition of trees: the root of `subtrees[i]` replaces the `i`-th leaf.
    pub fn graft(&self, subtrees: &[PlanarTree]) -> Result<PlanarTree> {
        let leaves = self.leaf_count();
        if subtrees.len() != leaves {
            return Err(Error::Arity { expected: leaves, got: subtrees.len() });
        }
        let mut next = subtrees.iter();
        let mut degrees = Vec::new();
        for &d in &self.degrees {
            if d == 0 {
                degrees.extend_from_slice(&next.next().unwrap().degrees);
            } else {
                degrees.push(d);
            }
        }
        Ok(PlanarTree { degrees })
    }

    /// Splits `T = [T_1, ..., T_k]` into the root degree and its subtrees.
    pub fn catalan_decompose(&self) -> Result<(usize, Vec<PlanarTree>)> {
        if self.is_identity() {
            return Err(Error::InvalidTree("the identity tree has no decomposition".into()));
        }
        let k = self.degrees[0];
        let mut children = Vec::with_capacity(k);
        let mut pos = 1;
        for _ in 0..k {
            let end = self.subtree_end(pos);
            children.push(PlanarTree { degrees: self.degrees[pos..end].to_vec() });
            pos = end;
        }
        Ok((k, children))
    }

    /// Leaves that are the leftmost child of their parent.
    pub fn leftmost_leaf_count(&self) -> usize {
        self.degrees.windows(2).filter(|w| w[0] > 0 && w[1] == 0).count()
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_list(f, &self.degrees)?;
        f.write_str("]")
    }
}

impl FromStr for PlanarTree {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tree `{}` must be a bracketed degree list", t)))?;
        PlanarTree::from_degrees(parse_list(inner)?)
    }
}

/// All `s`-trees, ordered by the lexicographic order of their path's `μ`.
pub fn enumerate_trees(s: &Composition) -> TreeIter {
    TreeIter { paths: enumerate_paths(s) }
}

/// Lazy iterator over `T_s`.
#[derive(Debug, Clone)]
pub struct TreeIter {
    paths: PathIter,
}

impl Iterator for TreeIter {
    type Item = PlanarTree;
    fn next(&mut self) -> Option<PlanarTree> {
        self.paths.next().map(|d| path_to_tree(&d))
    }
}

/// Brute-force `T_s`: all degree sequences that interleave `s` with zeros,
/// filtered by validity. Lexicographic order on degree sequences.
pub fn brute_force_trees(s: &Composition) -> Vec<PlanarTree> {
    let leaves = s.excess() + 1;
    let n = s.len() + leaves;
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(n);
    fn go(s: &[usize], zeros: usize, open: usize, seq: &mut Vec<usize>, out: &mut Vec<PlanarTree>) {
        if open == 0 {
            if s.is_empty() && zeros == 0 {
                out.push(PlanarTree { degrees: seq.clone() });
            }
            return;
        }
        if zeros > 0 {
            seq.push(0);
            go(s, zeros - 1, open - 1, seq, out);
            seq.pop();
        }
        if let Some((&d, rest)) = s.split_first() {
            seq.push(d);
            go(rest, zeros, open - 1 + d, seq, out);
            seq.pop();
        }
    }
    go(s, leaves, 1, &mut seq, &mut out);
    out
}
