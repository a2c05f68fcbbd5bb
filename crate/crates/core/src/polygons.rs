//! Angulations of convex polygons and parenthesized words.
//!
//! Both families are read through the same recursive decomposition as trees:
//! removing the edge `{1, 2}` of a polygon, or splitting a word into blocks,
//! exposes `k` smaller objects.
//!
//! Chords of an angulation may repeat and may join adjacent vertices. A face
//! cut out by two parallel copies of the same chord (a digon) plays the role
//! of an internal node with a single child, so every signature, including
//! those with entries equal to 1, has angulations. When every entry is at
//! least 2 no chord repeats and none joins adjacent vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::{angulation_faces, angulation_to_tree, parenthesization_to_tree};
use crate::error::{Error, Result};
use crate::signatures::Composition;

/// An angulation of the polygon with vertices `1..=n` in clockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawAngulation")]
pub struct Angulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawAngulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

impl TryFrom<RawAngulation> for Angulation {
    type Error = Error;
    fn try_from(raw: RawAngulation) -> Result<Self> {
        Angulation::new(raw.n, raw.diagonals)
    }
}

impl Angulation {
    pub fn new(n: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAngulation(format!("a polygon needs at least 2 vertices, got {}", n)));
        }
        let mut ds = Vec::with_capacity(diagonals.len());
        for (u, v) in diagonals {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidAngulation(format!("bad chord {}-{} in P({})", u, v, n)));
            }
            ds.push((u.min(v), u.max(v)));
        }
        ds.sort_unstable();
        for (i, &(a, b)) in ds.iter().enumerate() {
            for &(c, d) in &ds[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::InvalidAngulation(format!("chords {}-{} and {}-{} cross", a, b, c, d)));
                }
            }
        }
        let a = Angulation { n, diagonals: ds };
        // chords that do not arise from any tree are rejected here
        let back = crate::bijections::tree_to_angulation(&angulation_to_tree(&a)?);
        if back != a {
            return Err(Error::InvalidAngulation(format!("{} does not decompose", a)));
        }
        Ok(a)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<(usize, usize)>) -> Self {
        Angulation { n, diagonals }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Faces as sorted vertex tuples, in the preorder of the matching tree.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        angulation_faces(self).expect("validated angulation")
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// `(k) ⊕ signat(A_1) ⊕ ... ⊕ signat(A_k)` after removing the edge `{1, 2}`.
    pub fn signature(&self) -> Composition {
        angulation_to_tree(self).expect("validated angulation").signature()
    }
}

impl fmt::Display for Angulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; d=", self.n)?;
        for (i, (u, v)) in self.diagonals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", u, v)?;
        }
        Ok(())
    }
}

impl FromStr for Angulation {
    type Err = Error;
    /// Parses `n=5; d=1-3,3-5`.
    fn from_str(text: &str) -> Result<Self> {
        let (mut n, mut ds) = (None, Vec::new());
        for field in text.split(';') {
            let field = field.trim();
            if let Some(v) = field.strip_prefix("n=") {
                n = Some(v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex count `{}`", v)))?);
            } else if let Some(v) = field.strip_prefix("d=") {
                for chord in v.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                    let (u, w) = chord
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("chord `{}` must look like u-v", chord)))?;
                    let parse = |t: &str| {
                        t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{}`", t)))
                    };
                    ds.push((parse(u)?, parse(w)?));
                }
            } else if !field.is_empty() {
                return Err(Error::Parse(format!("unknown angulation field `{}`", field)));
            }
        }
        let n = n.ok_or_else(|| Error::Parse("angulation needs n=".into()))?;
        Angulation::new(n, ds)
    }
}

/// A properly parenthesized word over `*`, `(` and `)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Parenthesization {
    word: String,
}

impl Parenthesization {
    pub fn new(word: &str) -> Result<Self> {
        let word: String = word.chars().filter(|c| !c.is_whitespace()).collect();
        if !is_valid_parenthesization(&word) {
            return Err(Error::InvalidParenthesization(format!("`{}` is not properly parenthesized", word)));
        }
        Ok(Parenthesization { word })
    }

    pub(crate) fn from_string_unchecked(word: String) -> Self {
        Parenthesization { word }
    }

    pub fn as_str(&self) -> &str {
        &self.word
    }

    pub fn blocks(&self) -> Vec<&str> {
        block_factorization(&self.word).expect("validated word")
    }

    pub fn signature(&self) -> Composition {
        parenthesization_to_tree(self).signature()
    }
}

impl fmt::Display for Parenthesization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word)
    }
}

impl FromStr for Parenthesization {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Parenthesization::new(text)
    }
}

impl TryFrom<String> for Parenthesization {
    type Error = Error;
    fn try_from(word: String) -> Result<Self> {
        Parenthesization::new(&word)
    }
}

impl From<Parenthesization> for String {
    fn from(p: Parenthesization) -> String {
        p.word
    }
}

/// Nonempty, balanced, every prefix has at least as many `(` as `)`, and no `()`.
pub fn is_valid_parenthesization(word: &str) -> bool {
    if word.is_empty() || word.contains("()") {
        return false;
    }
    let mut depth = 0i64;
    for c in word.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            '*' => {}
            _ => return false,
        }
    }
    depth == 0
}

/// Splits a proper word into its maximal blocks: single stars and
/// outermost parenthesized groups.
pub fn block_factorization(word: &str) -> Result<Vec<&str>> {
    if !is_valid_parenthesization(word) {
        return Err(Error::InvalidParenthesization(format!("`{}` is not properly parenthesized", word)));
    }
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in word.char_indices() {
        match c {
            '(' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ')' => {
                depth -= 1;
                if depth == 0 {
                    out.push(&word[start..=i]);
                }
            }
            _ => {
                if depth == 0 {
                    out.push(&word[i..=i]);
                }
            }
        }
    }
    Ok(out)
}

/// Signature of a word, or an error if it is not properly parenthesized.
pub fn signature_of_parenthesization(word: &str) -> Result<Composition> {
    Ok(Parenthesization::new(word)?.signature())
}
