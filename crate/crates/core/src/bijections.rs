//! Bijections between s-trees and the other s-Catalan families, plus
//! direct constructions from s-Dyck paths.
//!
//! Every family is linked to [`PlanarTree`]. The `*_direct` maps work on
//! the lattice path alone and are kept independent of the tree route.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::noncrossing::{Matching, SetPartition};
use crate::paths::DyckPath;
use crate::polygons::{block_factorization, Angulation, Parenthesization};
use crate::signatures::{Composition, WeakComposition};
use crate::stirling::{IncreasingTree, Multipermutation};
use crate::trees::PlanarTree;

/// θ: `N` for every internal node and `E` for every leaf, in preorder.
pub fn tree_to_path(t: &PlanarTree) -> DyckPath {
    let d = t.degrees();
    let mut mu: Vec<usize> = Vec::new();
    for &x in &d[..d.len() - 1] {
        if x > 0 {
            mu.push(0);
        } else {
            *mu.last_mut().expect("preorder starts with the root") += 1;
        }
    }
    DyckPath::new_unchecked(t.signature(), WeakComposition::new(mu))
}

/// ζ: attach `v_{i+1}` at the `(μ(i)+1)`-th leaf after `v_i` in preorder.
pub fn path_to_tree(path: &DyckPath) -> PlanarTree {
    let s = path.s();
    if s.is_empty() {
        return PlanarTree::identity();
    }
    let mut deg = vec![0; s[0] + 1];
    deg[0] = s[0];
    let mut at = 0;
    for i in 0..s.len() - 1 {
        let skip = path.mu()[i];
        let pos = (at + 1..deg.len())
            .filter(|&p| deg[p] == 0)
            .nth(skip)
            .expect("dominance keeps enough leaves");
        let k = s[i + 1];
        deg[pos] = k;
        deg.splice(pos + 1..pos + 1, std::iter::repeat_n(0, k));
        at = pos;
    }
    PlanarTree::from_degrees_unchecked(deg)
}

/// Σ̃: label internal nodes in preorder and read the cavern owners.
pub fn tree_to_stirling(t: &PlanarTree) -> Result<Multipermutation> {
    let s = t.signature();
    s.require_at_least_two()?;
    let word = t.caverns().owners();
    let content = Composition::new(s.minus_one().into_parts()).expect("entries are at least 2");
    Ok(Multipermutation::from_parts_unchecked(word, content))
}

/// Λ̃: the inverse of [`tree_to_stirling`] on 312-avoiding Stirling permutations.
pub fn stirling_to_tree(sigma: &Multipermutation) -> Result<PlanarTree> {
    if !sigma.is_312_avoiding_stirling() {
        return Err(Error::InvalidPermutation(format!("{} is not a 312-avoiding Stirling permutation", sigma)));
    }
    Ok(stirling_to_increasing_tree(sigma)?.tree().clone())
}

/// Σ: read the cavern owners' labels in preorder.
pub fn increasing_tree_to_stirling(it: &IncreasingTree) -> Result<Multipermutation> {
    it.label_signature().require_at_least_two()?;
    let word = it.tree().caverns().iter().map(|c| it.labels()[c.owner - 1]).collect();
    Multipermutation::new(word)
}

/// Λ: a root labeled with the smallest letter `m`, whose children are the
/// pieces of the word separated by the occurrences of `m`. Empty pieces are leaves.
pub fn stirling_to_increasing_tree(sigma: &Multipermutation) -> Result<IncreasingTree> {
    if !sigma.is_stirling() {
        return Err(Error::InvalidPermutation(format!("{} is not a Stirling permutation", sigma)));
    }
    fn build(word: &[usize], deg: &mut Vec<usize>, labels: &mut Vec<usize>) {
        let Some(&m) = word.iter().min() else {
            deg.push(0);
            return;
        };
        let pieces: Vec<&[usize]> = word.split(|&x| x == m).collect();
        deg.push(pieces.len());
        labels.push(m);
        for piece in pieces {
            build(piece, deg, labels);
        }
    }
    let (mut deg, mut labels) = (Vec::new(), Vec::new());
    build(sigma.word(), &mut deg, &mut labels);
    IncreasingTree::new(PlanarTree::from_degrees_unchecked(deg), labels)
}

/// φ: one block per maximal left-descendant chain, holding the preorder
/// indices of the chain's caverns.
pub fn tree_to_partition(t: &PlanarTree) -> Result<SetPartition> {
    t.signature().require_at_least_two()?;
    let d = t.degrees();
    let internal = t.internal_positions();
    // chain id of every internal node: a new chain starts unless the node is
    // the leftmost child of an internal node (i.e. directly follows it in preorder)
    let mut chain_of = vec![0usize; internal.len()];
    let mut chains = 0;
    for (k, &p) in internal.iter().enumerate() {
        if p > 0 && d[p - 1] > 0 {
            chain_of[k] = chain_of[k - 1];
        } else {
            chain_of[k] = chains;
            chains += 1;
        }
    }
    let mut blocks = vec![Vec::new(); chains];
    for (i, cav) in t.caverns().iter().enumerate() {
        blocks[chain_of[cav.owner - 1]].push(i + 1);
    }
    Ok(SetPartition::from_sorted_unchecked(blocks))
}

/// ψ: build one left comb per block and glue each at the leaf closing the
/// cavern labeled `min π_j - 1`.
pub fn partition_to_tree(pi: &SetPartition, s: &Composition) -> Result<PlanarTree> {
    s.require_at_least_two()?;
    if pi.ground_size() != s.excess() {
        return Err(Error::InvalidPartition(format!(
            "{} is not a partition of [{}]",
            pi,
            s.excess()
        )));
    }
    if s.is_empty() {
        return Ok(PlanarTree::identity());
    }
    let groups = split_by_sizes(&s.minus_one(), &pi.block_sizes())
        .ok_or_else(|| Error::InvalidPartition(format!("({}) does not refine the block sizes of {}", s.minus_one(), pi)))?;
    let mut deg: Vec<usize> = Vec::new();
    let mut label: Vec<Option<usize>> = Vec::new();
    let mut at = 0;
    for (j, block) in pi.blocks().iter().enumerate() {
        let comb: Vec<usize> = s[at..at + groups[j]].to_vec();
        at += groups[j];
        let (cdeg, clabel) = left_comb(&comb, block);
        if j == 0 {
            if block[0] != 1 {
                return Err(Error::InvalidPartition(format!("{} has no block containing 1", pi)));
            }
            deg = cdeg;
            label = clabel;
            continue;
        }
        let target = block[0] - 1;
        let pos = label
            .iter()
            .position(|&l| l == Some(target))
            .ok_or_else(|| Error::InvalidPartition(format!("cavern {} is missing when gluing {}", target, pi)))?;
        if deg[pos] != 0 {
            return Err(Error::InvalidPartition(format!("cavern {} of {} is not a leaf", target, pi)));
        }
        deg.splice(pos..=pos, cdeg);
        let mut clabel = clabel;
        clabel[0] = Some(target);
        label.splice(pos..=pos, clabel);
    }
    let t = PlanarTree::from_degrees(deg)?;
    if &t.signature() != s || &tree_to_partition(&t)? != pi {
        return Err(Error::InvalidPartition(format!("{} is not a noncrossing ({})-partition", pi, s.minus_one())));
    }
    Ok(t)
}

/// The left comb with internal degrees `comb`, and the labels of its
/// nonminimal children taken from `block` in preorder.
fn left_comb(comb: &[usize], block: &[usize]) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut deg = comb.to_vec();
    let mut label = vec![None; comb.len()];
    let mut labels = block.iter().copied();
    for (i, &d) in comb.iter().enumerate().rev() {
        let leaves = if i + 1 == comb.len() { d } else { d - 1 };
        for l in 0..leaves {
            deg.push(0);
            let first = i + 1 == comb.len() && l == 0;
            label.push(if first { None } else { labels.next() });
        }
    }
    (deg, label)
}

/// Splits `parts` into consecutive groups with the given sums; returns the group lengths.
fn split_by_sizes(parts: &[usize], sums: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(sums.len());
    let mut it = parts.iter().peekable();
    for &target in sums {
        let (mut acc, mut len) = (0, 0);
        while acc < target {
            acc += it.next()?;
            len += 1;
        }
        if acc != target {
            return None;
        }
        out.push(len);
    }
    if it.peek().is_some() {
        return None;
    }
    Some(out)
}

/// φ_M: number the nodes `0..=|s|` in preorder; block `k` holds the
/// numbers of the children of the `k`-th internal node.
pub fn tree_to_matching(t: &PlanarTree) -> Matching {
    let st = t.structure();
    let blocks: Vec<Vec<usize>> =
        t.internal_positions().into_iter().map(|p| st.children[p].clone()).collect();
    Matching::new(SetPartition::from_sorted_unchecked(blocks)).expect("preorder children never cross")
}

/// γ_M: block `M_j` becomes the children of node `min M_j - 1`.
pub fn matching_to_tree(m: &Matching) -> Result<PlanarTree> {
    let n = m.s().sum();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for block in m.blocks() {
        let parent = block[0] - 1;
        children[parent] = block.clone();
    }
    let mut deg = Vec::with_capacity(n + 1);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if v != deg.len() {
            return Err(Error::InvalidPartition(format!("{} does not number a tree in preorder", m)));
        }
        deg.push(children[v].len());
        stack.extend(children[v].iter().rev());
    }
    if deg.len() != n + 1 {
        return Err(Error::InvalidPartition(format!("{} does not number a tree in preorder", m)));
    }
    let t = PlanarTree::from_degrees(deg)?;
    if &tree_to_matching(&t) != m {
        return Err(Error::InvalidPartition(format!("{} is not a complete ({})-matching", m, m.s())));
    }
    Ok(t)
}

// Angulations use positions 0..n-1 for the vertices 2, 3, ..., n, 1, so the
// root edge {1, 2} joins positions 0 and n-1 and leaf j sits on the edge
// between positions j and j+1.

fn position_to_vertex(p: usize, n: usize) -> usize {
    if p == n - 1 {
        1
    } else {
        p + 2
    }
}

fn vertex_to_position(v: usize, n: usize) -> usize {
    if v == 1 {
        n - 1
    } else {
        v - 2
    }
}

/// The chord multiset of a tree: one chord per non-root internal node,
/// spanning the boundary edges of its leaves. In the 2-gon the root also
/// contributes, so that `•` and the unary chains stay distinct.
pub fn tree_to_angulation(t: &PlanarTree) -> Angulation {
    let d = t.degrees();
    let n = t.leaf_count() + 1;
    let mut chords = Vec::new();
    let mut leaves_before = 0;
    for (p, &x) in d.iter().enumerate() {
        if x == 0 {
            leaves_before += 1;
            continue;
        }
        if p == 0 && n > 2 {
            continue;
        }
        let end = t.subtree_end(p);
        let span = d[p..end].iter().filter(|&&y| y == 0).count();
        let (u, v) = (position_to_vertex(leaves_before, n), position_to_vertex(leaves_before + span, n));
        chords.push((u.min(v), u.max(v)));
    }
    chords.sort_unstable();
    Angulation::from_sorted_unchecked(n, chords)
}

struct AngulationDecoder {
    n: usize,
    count: BTreeMap<(usize, usize), usize>,
    deg: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

impl AngulationDecoder {
    fn new(a: &Angulation) -> Self {
        let n = a.n();
        let mut count = BTreeMap::new();
        for &(u, v) in a.diagonals() {
            let (p, q) = (vertex_to_position(u, n), vertex_to_position(v, n));
            *count.entry((p.min(q), p.max(q))).or_insert(0) += 1;
        }
        AngulationDecoder { n, count, deg: Vec::new(), faces: Vec::new() }
    }

    fn take(&mut self, l: usize, r: usize) -> usize {
        self.count.remove(&(l, r)).unwrap_or(0)
    }

    fn digons(&mut self, l: usize, r: usize, m: usize) {
        for _ in 0..m {
            self.deg.push(1);
            self.faces.push(self.sorted_vertices(&[l, r]));
        }
    }

    fn sorted_vertices(&self, ps: &[usize]) -> Vec<usize> {
        let mut vs: Vec<usize> = ps.iter().map(|&p| position_to_vertex(p, self.n)).collect();
        vs.sort_unstable();
        vs
    }

    fn child(&mut self, l: usize, r: usize) -> Result<()> {
        let m = self.take(l, r);
        if r == l + 1 {
            self.digons(l, r, m);
            self.deg.push(0);
            return Ok(());
        }
        if m == 0 {
            return Err(Error::InvalidAngulation("open region between chords".into()));
        }
        self.digons(l, r, m - 1);
        self.face(l, r)
    }

    fn face(&mut self, l: usize, r: usize) -> Result<()> {
        let mut corners = vec![l];
        let mut f = l;
        while f != r {
            let next = self
                .count
                .range((f, f + 1)..=(f, r))
                .map(|(&(_, q), _)| q)
                .filter(|&q| !(f == l && q == r))
                .max()
                .unwrap_or(f + 1)
                .max(f + 1);
            corners.push(next);
            f = next;
        }
        self.deg.push(corners.len() - 1);
        self.faces.push(self.sorted_vertices(&corners));
        for w in corners.windows(2) {
            self.child(w[0], w[1])?;
        }
        Ok(())
    }

    fn run(mut self) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
        let n = self.n;
        if n == 2 {
            let m = self.take(0, 1);
            self.digons(0, 1, m);
            self.deg.push(0);
        } else {
            let m = self.take(0, n - 1);
            self.digons(0, n - 1, m);
            self.face(0, n - 1)?;
        }
        if !self.count.is_empty() {
            return Err(Error::InvalidAngulation("chords left outside every face".into()));
        }
        Ok((self.deg, self.faces))
    }
}

/// Inverse of [`tree_to_angulation`]: walk each face from its lower chord
/// endpoint, always jumping to the farthest neighbor.
pub fn angulation_to_tree(a: &Angulation) -> Result<PlanarTree> {
    let (deg, _) = AngulationDecoder::new(a).run()?;
    PlanarTree::from_degrees(deg)
}

/// Faces of an angulation as sorted vertex lists, one per internal node of
/// the matching tree in preorder.
pub fn angulation_faces(a: &Angulation) -> Result<Vec<Vec<usize>>> {
    Ok(AngulationDecoder::new(a).run()?.1)
}

/// Each internal node becomes `(` children `)`; the outermost pair is
/// omitted unless the root has a single child.
pub fn tree_to_parenthesization(t: &PlanarTree) -> Parenthesization {
    fn inner(t: &PlanarTree, pos: usize, out: &mut String) -> usize {
        let d = t.degrees()[pos];
        let mut p = pos + 1;
        for _ in 0..d {
            if t.degrees()[p] == 0 {
                out.push('*');
                p += 1;
            } else {
                out.push('(');
                p = inner(t, p, out);
                out.push(')');
            }
        }
        p
    }
    if t.is_identity() {
        return Parenthesization::from_string_unchecked("*".into());
    }
    let mut out = String::new();
    inner(t, 0, &mut out);
    if t.degrees()[0] == 1 {
        out = format!("({})", out);
    }
    Parenthesization::from_string_unchecked(out)
}

/// Inverse of [`tree_to_parenthesization`]. A word that is a single
/// parenthesized block has that pair stripped before reading the root's children.
pub fn parenthesization_to_tree(w: &Parenthesization) -> PlanarTree {
    fn node(list: &str, deg: &mut Vec<usize>) {
        let blocks = block_factorization(list).expect("validated word");
        deg.push(blocks.len());
        for b in blocks {
            if b == "*" {
                deg.push(0);
            } else {
                node(&b[1..b.len() - 1], deg);
            }
        }
    }
    let word = w.as_str();
    if word == "*" {
        return PlanarTree::identity();
    }
    let blocks = block_factorization(word).expect("validated word");
    let list = if blocks.len() == 1 { &word[1..word.len() - 1] } else { word };
    let mut deg = Vec::new();
    node(list, &mut deg);
    PlanarTree::from_degrees_unchecked(deg)
}

/// Columns (1-based) of the dots in each row: rows are filled from the top,
/// each taking the leftmost free columns to the right of its north step.
fn dot_columns(path: &DyckPath) -> Vec<Vec<usize>> {
    let s = path.s();
    let width = s.excess();
    let xs = path.north_x();
    let mut used = vec![false; width + 1];
    let mut rows = vec![Vec::new(); s.len()];
    for j in (0..s.len()).rev() {
        let mut need = s[j] - 1;
        let mut c = xs[j] + 1;
        while need > 0 {
            if !used[c] {
                used[c] = true;
                rows[j].push(c);
                need -= 1;
            }
            c += 1;
        }
    }
    rows
}

/// The 312-avoiding Stirling permutation read from the dot placement.
pub fn path_to_stirling_direct(path: &DyckPath) -> Result<Multipermutation> {
    path.s().require_at_least_two()?;
    let mut word = vec![0; path.s().excess()];
    for (j, cols) in dot_columns(path).iter().enumerate() {
        for &c in cols {
            word[c - 1] = j + 1;
        }
    }
    let content = Composition::new(path.s().minus_one().into_parts()).expect("entries are at least 2");
    Ok(Multipermutation::from_parts_unchecked(word, content))
}

/// Blocks are the dot columns of each maximal run of north steps.
pub fn path_to_partition_direct(path: &DyckPath) -> Result<SetPartition> {
    path.s().require_at_least_two()?;
    let rows = dot_columns(path);
    let mu = path.mu();
    let mut blocks = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for (j, cols) in rows.into_iter().enumerate() {
        current.extend(cols);
        if j + 1 == mu.len() || mu[j] > 0 {
            current.sort_unstable();
            blocks.push(std::mem::take(&mut current));
        }
    }
    SetPartition::new(blocks)
}

/// The path with peaks at `(min π_i - 1, y_i)`, where `y_i` ends the group
/// of `s - 1` summing to `|π_i|`.
pub fn partition_to_path_direct(pi: &SetPartition, s: &Composition) -> Result<DyckPath> {
    s.require_at_least_two()?;
    if pi.ground_size() != s.excess() {
        return Err(Error::InvalidPartition(format!("{} is not a partition of [{}]", pi, s.excess())));
    }
    if s.is_empty() {
        return Ok(DyckPath::identity());
    }
    let groups = split_by_sizes(&s.minus_one(), &pi.block_sizes())
        .ok_or_else(|| Error::InvalidPartition(format!("({}) does not refine the block sizes of {}", s.minus_one(), pi)))?;
    let xs: Vec<usize> = pi.blocks().iter().map(|b| b[0] - 1).collect();
    let mut mu = Vec::with_capacity(s.len());
    for (i, &g) in groups.iter().enumerate() {
        mu.extend(std::iter::repeat_n(0, g - 1));
        let next = xs.get(i + 1).copied().unwrap_or(s.excess());
        mu.push(next - xs[i]);
    }
    let d = DyckPath::new(s.clone(), WeakComposition::new(mu))
        .map_err(|_| Error::InvalidPartition(format!("{} has no matching ({})-path", pi, s)))?;
    if &path_to_partition_direct(&d)? != pi {
        return Err(Error::InvalidPartition(format!("{} is not a noncrossing ({})-partition", pi, s.minus_one())));
    }
    Ok(d)
}

/// Steps numbered `1..=|s|`; block `i` holds the north step of row `i` and
/// the east steps in the columns of that row's dots.
pub fn path_to_matching_direct(path: &DyckPath) -> Matching {
    let s = path.s();
    let rows = dot_columns(path);
    let mut north_label = Vec::with_capacity(s.len());
    let mut east_label = vec![0; s.excess() + 1];
    let (mut step, mut east) = (0, 0);
    for &m in path.mu().iter() {
        step += 1;
        north_label.push(step);
        for _ in 0..m {
            step += 1;
            east += 1;
            east_label[east] = step;
        }
    }
    let blocks: Vec<Vec<usize>> = rows
        .iter()
        .enumerate()
        .map(|(j, cols)| {
            let mut b = vec![north_label[j]];
            b.extend(cols.iter().map(|&c| east_label[c]));
            b.sort_unstable();
            b
        })
        .collect();
    Matching::new(SetPartition::new(blocks).expect("steps are numbered once"))
        .expect("dot placement never crosses")
}

/// North steps sit at the block minima.
pub fn matching_to_path_direct(m: &Matching) -> Result<DyckPath> {
    let n = m.s().sum();
    let mut word = vec!['E'; n + 1];
    for b in m.blocks() {
        word[b[0] - 1] = 'N';
    }
    let word: String = word.into_iter().collect();
    let d = DyckPath::from_word(m.s().clone(), &word)
        .map_err(|_| Error::InvalidPartition(format!("{} has no matching path", m)))?;
    if &path_to_matching_direct(&d) != m {
        return Err(Error::InvalidPartition(format!("{} is not a complete ({})-matching", m, m.s())));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn running_tree() -> PlanarTree {
        "[3,4,0,0,4,0,0,0,0,0,0,2,5,0,0,0,0,0,0]".parse().unwrap()
    }

    fn running_path() -> DyckPath {
        "s=3,4,4,2,5; mu=0,2,6,0,5".parse().unwrap()
    }

    #[test]
    fn theta_zeta_running() {
        assert_eq!(tree_to_path(&running_tree()), running_path());
        assert_eq!(path_to_tree(&running_path()), running_tree());
        assert_eq!(tree_to_path(&PlanarTree::identity()), DyckPath::identity());
        assert_eq!(path_to_tree(&DyckPath::identity()), PlanarTree::identity());
        assert_eq!(tree_to_path(&PlanarTree::corolla(4)).word(), "NEEEE");
    }

    #[test]
    fn sigma_running() {
        let w = tree_to_stirling(&running_tree()).unwrap();
        assert_eq!(w.to_string(), "2233321155554");
        assert_eq!(stirling_to_tree(&w).unwrap(), running_tree());
        assert_eq!(tree_to_stirling(&PlanarTree::corolla(4)).unwrap().to_string(), "111");
        assert!(tree_to_stirling(&"[1,0]".parse().unwrap()).is_err());
        assert!(stirling_to_tree(&"3312221".parse().unwrap()).is_err());
        assert_eq!(stirling_to_tree(&Multipermutation::empty()).unwrap(), PlanarTree::identity());
    }

    #[test]
    fn increasing_round_trip() {
        let w: Multipermutation = "3312221".parse().unwrap();
        let it = stirling_to_increasing_tree(&w).unwrap();
        assert_eq!(increasing_tree_to_stirling(&it).unwrap(), w);
        assert!(stirling_to_increasing_tree(&"11322344".parse().unwrap()).is_err());
        let pre = IncreasingTree::preorder(running_tree());
        assert_eq!(increasing_tree_to_stirling(&pre).unwrap(), tree_to_stirling(&running_tree()).unwrap());
    }

    #[test]
    fn phi_running() {
        let p = tree_to_partition(&running_tree()).unwrap();
        assert_eq!(p.to_string(), "1,2,6,7,8|3,4,5|9,10,11,12,13");
        assert_eq!(partition_to_tree(&p, &c(&[3, 4, 4, 2, 5])).unwrap(), running_tree());
        let comb: PlanarTree = "[2,3,0,0,0,0]".parse().unwrap();
        assert_eq!(tree_to_partition(&comb).unwrap().block_count(), 1);
        assert_eq!(tree_to_partition(&PlanarTree::corolla(4)).unwrap().to_string(), "1,2,3");
        assert!(partition_to_tree(&p, &c(&[3, 3, 3, 4])).is_err());
    }

    #[test]
    fn matching_running() {
        let m = tree_to_matching(&running_tree());
        assert_eq!(m.to_string(), "1,10,11|2,3,4,9|5,6,7,8|12,18|13,14,15,16,17");
        assert_eq!(matching_to_tree(&m).unwrap(), running_tree());
        assert_eq!(tree_to_matching(&PlanarTree::corolla(3)).to_string(), "1,2,3");
    }

    #[test]
    fn words_running() {
        let w = tree_to_parenthesization(&running_tree());
        assert_eq!(w.as_str(), "(**(****)*)*((*****)*)");
        assert_eq!(parenthesization_to_tree(&w), running_tree());
        assert_eq!(tree_to_parenthesization(&PlanarTree::identity()).as_str(), "*");
        assert_eq!(tree_to_parenthesization(&"[1,0]".parse().unwrap()).as_str(), "(*)");
    }

    #[test]
    fn angulation_running() {
        let a = tree_to_angulation(&running_tree());
        assert_eq!(a.n(), 15);
        assert_eq!(a.face_count(), 5);
        assert_eq!(a.signature(), c(&[3, 4, 4, 2, 5]));
        assert_eq!(angulation_to_tree(&a).unwrap(), running_tree());
        let k = tree_to_angulation(&PlanarTree::corolla(4));
        assert_eq!((k.n(), k.diagonals().len()), (5, 0));
    }

    #[test]
    fn direct_maps_running() {
        let d = running_path();
        assert_eq!(path_to_stirling_direct(&d).unwrap().to_string(), "2233321155554");
        let p = path_to_partition_direct(&d).unwrap();
        assert_eq!(p.to_string(), "1,2,6,7,8|3,4,5|9,10,11,12,13");
        assert_eq!(partition_to_path_direct(&p, d.s()).unwrap(), d);
        let m = path_to_matching_direct(&d);
        assert_eq!(m.to_string(), "1,10,11|2,3,4,9|5,6,7,8|12,18|13,14,15,16,17");
        assert_eq!(matching_to_path_direct(&m).unwrap(), d);
        let corolla = DyckPath::new(c(&[2]), WeakComposition::new(vec![1])).unwrap();
        assert_eq!(path_to_matching_direct(&corolla).to_string(), "1,2");
        assert_eq!(path_to_stirling_direct(&DyckPath::new(c(&[4]), WeakComposition::new(vec![3])).unwrap())
            .unwrap()
            .to_string(), "111");
    }

    #[test]
    fn maximal_path_partition() {
        let s = c(&[2, 2]);
        let d = DyckPath::new(s.clone(), s.minus_one()).unwrap();
        assert_eq!(path_to_partition_direct(&d).unwrap().to_string(), "1|2");
    }
}
