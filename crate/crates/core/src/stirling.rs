//! Multipermutations, pattern containment and Stirling permutations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bijections::tree_to_stirling;
use crate::error::{Error, Result};
use crate::signatures::{prefix_sums, Composition};
use crate::trees::{enumerate_trees, PlanarTree, TreeIter};

/// A permutation of the multiset `{1^{s(1)}, ..., a^{s(a)}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct Multipermutation {
    word: Vec<usize>,
    content: Composition,
}

#[derive(Deserialize)]
struct RawWord {
    word: Vec<usize>,
    content: Composition,
}

impl TryFrom<RawWord> for Multipermutation {
    type Error = Error;
    fn try_from(raw: RawWord) -> Result<Self> {
        Multipermutation::with_content(raw.word, raw.content)
    }
}

impl Multipermutation {
    /// Builds a multipermutation whose content is read off the word; every
    /// letter from 1 to the maximum must occur.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let max = word.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &x in &word {
            if x == 0 {
                return Err(Error::InvalidPermutation("letters start at 1".into()));
            }
            counts[x - 1] += 1;
        }
        let content = Composition::new(counts)
            .map_err(|_| Error::InvalidPermutation(format!("{:?} skips a letter", word)))?;
        Ok(Multipermutation { word, content })
    }

    pub fn with_content(word: Vec<usize>, content: Composition) -> Result<Self> {
        let m = Multipermutation::new(word)?;
        if m.content != content {
            return Err(Error::InvalidPermutation(format!(
                "content ({}) differs from the expected ({})",
                m.content, content
            )));
        }
        Ok(m)
    }

    pub(crate) fn from_parts_unchecked(word: Vec<usize>, content: Composition) -> Self {
        Multipermutation { word, content }
    }

    pub fn empty() -> Self {
        Multipermutation { word: Vec::new(), content: Composition::empty() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn content(&self) -> &Composition {
        &self.content
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn contains(&self, pattern: &[usize]) -> bool {
        contains_pattern(&self.word, pattern)
    }

    pub fn is_stirling(&self) -> bool {
        !self.contains(&[2, 1, 2])
    }

    pub fn is_312_avoiding_stirling(&self) -> bool {
        self.is_stirling() && !self.contains(&[3, 1, 2])
    }

    pub fn ascents(&self) -> usize {
        ascents(&self.word)
    }
}

/// Positions `i` with `w(i) < w(i+1)`.
pub fn ascents(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[0] < p[1]).count()
}

/// True when some subsequence of `word` is order-isomorphic to `pattern`
/// (equal letters match equal letters).
pub fn contains_pattern(word: &[usize], pattern: &[usize]) -> bool {
    fn go(word: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        if word.len() - from < pattern.len() - k {
            return false;
        }
        for i in from..word.len() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, &c)| pattern[j].cmp(&pattern[k]) == word[c].cmp(&word[i]));
            if ok {
                chosen.push(i);
                if go(word, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(word, pattern, 0, &mut Vec::new())
}

/// `1 · (s(1) + 1) · (s(1) + s(2) + 1) ⋯`, the number of Stirling s-permutations.
pub fn s_factorial(s: &Composition) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut prefix = 0usize;
    for &p in s.iter() {
        acc *= BigUint::from(prefix + 1);
        prefix += p;
    }
    acc
}

/// All Stirling permutations of the given content.
///
/// Letter `k` forms a contiguous block once the larger letters are removed,
/// so each word is a choice of insertion slot for the block `k^{s(k)}` into
/// the word on letters `1..k-1`. Slots are run as an odometer, last letter fastest.
pub fn enumerate_stirling(content: &Composition) -> StirlingIter {
    let radix: Vec<usize> = std::iter::once(0)
        .chain(prefix_sums(content))
        .take(content.len())
        .map(|p| p + 1)
        .collect();
    StirlingIter { content: content.clone(), slots: Some(vec![0; content.len()]), radix }
}

/// Lazy iterator over `SP_s`.
#[derive(Debug, Clone)]
pub struct StirlingIter {
    content: Composition,
    slots: Option<Vec<usize>>,
    radix: Vec<usize>,
}

impl Iterator for StirlingIter {
    type Item = Multipermutation;
    fn next(&mut self) -> Option<Multipermutation> {
        let slots = self.slots.take()?;
        let mut word = Vec::with_capacity(self.content.sum());
        for (k, &slot) in slots.iter().enumerate() {
            let block = std::iter::repeat_n(k + 1, self.content[k]);
            word.splice(slot..slot, block);
        }
        let mut next = slots;
        let mut i = next.len();
        self.slots = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.radix[i] {
                break Some(next);
            }
            next[i] = 0;
        };
        Some(Multipermutation::from_parts_unchecked(word, self.content.clone()))
    }
}

/// All 312-avoiding Stirling permutations of the given content, in the
/// canonical tree order.
pub fn enumerate_312_avoiding(content: &Composition) -> Avoiding312Iter {
    let s = Composition::new(content.iter().map(|&p| p + 1).collect()).expect("positive");
    Avoiding312Iter { trees: enumerate_trees(&s) }
}

/// Lazy iterator over `SP_s(312)`.
#[derive(Debug, Clone)]
pub struct Avoiding312Iter {
    trees: TreeIter,
}

impl Iterator for Avoiding312Iter {
    type Item = Multipermutation;
    fn next(&mut self) -> Option<Multipermutation> {
        self.trees.next().map(|t| tree_to_stirling(&t).expect("signature entries are at least 2"))
    }
}

/// Every distinct permutation of the multiset, in lexicographic order.
pub fn multiset_permutations(content: &Composition) -> Vec<Vec<usize>> {
    fn go(counts: &mut [usize], word: &mut Vec<usize>, total: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == total {
            out.push(word.clone());
            return;
        }
        for k in 0..counts.len() {
            if counts[k] > 0 {
                counts[k] -= 1;
                word.push(k + 1);
                go(counts, word, total, out);
                word.pop();
                counts[k] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut counts = content.to_vec();
    go(&mut counts, &mut Vec::new(), content.sum(), &mut out);
    out
}

/// An increasing tree: internal nodes carry distinct labels `1..a` that
/// increase away from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIncreasing")]
pub struct IncreasingTree {
    tree: PlanarTree,
    labels: Vec<usize>,
}

#[derive(Deserialize)]
struct RawIncreasing {
    tree: PlanarTree,
    labels: Vec<usize>,
}

impl TryFrom<RawIncreasing> for IncreasingTree {
    type Error = Error;
    fn try_from(raw: RawIncreasing) -> Result<Self> {
        IncreasingTree::new(raw.tree, raw.labels)
    }
}

impl IncreasingTree {
    /// `labels[k]` is the label of the `(k+1)`-th internal node in preorder.
    pub fn new(tree: PlanarTree, labels: Vec<usize>) -> Result<Self> {
        let internal = tree.internal_positions();
        if labels.len() != internal.len() {
            return Err(Error::Arity { expected: internal.len(), got: labels.len() });
        }
        let mut seen = vec![false; labels.len()];
        for &l in &labels {
            if l == 0 || l > labels.len() || seen[l - 1] {
                return Err(Error::InvalidTree(format!("labels {:?} are not a permutation", labels)));
            }
            seen[l - 1] = true;
        }
        let st = tree.structure();
        let mut label_at = vec![0usize; tree.node_count()];
        for (k, &p) in internal.iter().enumerate() {
            label_at[p] = labels[k];
        }
        for &p in &internal {
            if let Some(parent) = st.parent[p] {
                if label_at[parent] >= label_at[p] {
                    return Err(Error::InvalidTree(format!("labels {:?} do not increase", labels)));
                }
            }
        }
        Ok(IncreasingTree { tree, labels })
    }

    /// The tree with its internal nodes labeled in preorder.
    pub fn preorder(tree: PlanarTree) -> Self {
        let labels = (1..=tree.internal_count()).collect();
        IncreasingTree { tree, labels }
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `s(i)` is the number of children of the node labeled `i`.
    pub fn label_signature(&self) -> Composition {
        let sig = self.tree.signature();
        let mut out = vec![0; self.labels.len()];
        for (k, &l) in self.labels.iter().enumerate() {
            out[l - 1] = sig[k];
        }
        Composition::new(out).expect("internal degrees are positive")
    }
}

impl fmt::Display for Multipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("-")
        } else if self.word.iter().all(|&x| x <= 9) {
            for x in &self.word {
                write!(f, "{}", x)?;
            }
            Ok(())
        } else {
            crate::signatures::write_list(f, &self.word)
        }
    }
}

impl FromStr for Multipermutation {
    type Err = Error;
    /// Digit words like `2233321155554`, or comma-separated for letters above 9.
    /// `-` denotes the empty word.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "-" {
            return Ok(Multipermutation::empty());
        }
        let word = if t.contains(',') {
            crate::signatures::parse_list(t)?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("`{}` is not a letter", c)))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Multipermutation::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Multipermutation {
        text.parse().unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn patterns() {
        let s = m("1132235544");
        assert!(s.contains(&[2, 1, 2]));
        assert!(!s.contains(&[3, 2, 1]));
        assert!(s.contains(&[]));
        assert!(contains_pattern(&[1, 1], &[1, 1]));
        assert!(!contains_pattern(&[1, 2], &[1, 1]));
    }

    #[test]
    fn stirling_predicates() {
        let a = m("1223321");
        assert_eq!(a.content(), &c(&[2, 3, 2]));
        assert!(a.is_stirling() && a.is_312_avoiding_stirling());
        assert!(m("2332211").is_312_avoiding_stirling());
        let b = m("3312221");
        assert!(b.is_stirling() && !b.is_312_avoiding_stirling());
        assert!(!m("11322344").is_stirling());
    }

    #[test]
    fn generation() {
        let words: Vec<String> = enumerate_stirling(&c(&[2, 2])).map(|w| w.to_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["1122", "1221", "2211"]);
        assert_eq!(enumerate_stirling(&c(&[1, 1])).count(), 2);
        assert_eq!(enumerate_312_avoiding(&c(&[2, 3, 2])).count(), 15);
        assert_eq!(enumerate_stirling(&Composition::empty()).count(), 1);
    }

    #[test]
    fn generation_matches_filter() {
        for s in crate::signatures::compositions_up_to(7) {
            let mut fast: Vec<Vec<usize>> = enumerate_stirling(&s).map(|w| w.word().to_vec()).collect();
            fast.sort();
            let brute: Vec<Vec<usize>> = multiset_permutations(&s)
                .into_iter()
                .filter(|w| !contains_pattern(w, &[2, 1, 2]))
                .collect();
            assert_eq!(fast, brute, "content {}", s);
            assert_eq!(BigUint::from(fast.len()), s_factorial(&s));

            let mut avoid: Vec<Vec<usize>> = enumerate_312_avoiding(&s).map(|w| w.word().to_vec()).collect();
            avoid.sort();
            let brute312: Vec<Vec<usize>> =
                brute.into_iter().filter(|w| !contains_pattern(w, &[3, 1, 2])).collect();
            assert_eq!(avoid, brute312, "content {}", s);
        }
    }

    #[test]
    fn factorials() {
        for n in 0..=6usize {
            let ones = c(&vec![1; n]);
            let fact: usize = (1..=n).product();
            assert_eq!(s_factorial(&ones), BigUint::from(fact));
            let twos = c(&vec![2; n]);
            let dbl: usize = (0..n).map(|i| 2 * i + 1).product();
            assert_eq!(s_factorial(&twos), BigUint::from(dbl));
        }
        assert_eq!(s_factorial(&c(&[2, 3, 2])), BigUint::from(18u32));
    }

    #[test]
    fn ascent_counts() {
        assert_eq!(m("2233321155554").ascents(), 2);
        assert_eq!(m("111").ascents(), 0);
        assert_eq!(m("1122").ascents(), 1);
    }

    #[test]
    fn text_and_json() {
        let w = m("2233321155554");
        assert_eq!(w.to_string(), "2233321155554");
        let big = Multipermutation::new((1..=10).collect()).unwrap();
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(big.to_string().parse::<Multipermutation>().unwrap(), big);
        let js = serde_json::to_string(&m("1221")).unwrap();
        assert_eq!(js, r#"{"word":[1,2,2,1],"content":[2,2]}"#);
        assert!(serde_json::from_str::<Multipermutation>(r#"{"word":[1,2],"content":[2]}"#).is_err());
        assert!("13".parse::<Multipermutation>().is_err());
    }

    #[test]
    fn increasing_trees() {
        let t: PlanarTree = "[2,2,0,0,0]".parse().unwrap();
        assert!(IncreasingTree::new(t.clone(), vec![1, 2]).is_ok());
        assert!(IncreasingTree::new(t.clone(), vec![2, 1]).is_err());
        let u: PlanarTree = "[2,0,3,0,0,0]".parse().unwrap();
        let it = IncreasingTree::new(u, vec![1, 2]).unwrap();
        assert_eq!(it.label_signature(), c(&[2, 3]));
    }
}
