//! s-Dyck paths stored by their east-step composition `μ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signatures::{dominance_diff, dominance_leq, prefix_sums, Composition, WeakComposition};

/// An s-Dyck path `N E^{μ(1)} ... N E^{μ(a)} E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct DyckPath {
    s: Composition,
    mu: WeakComposition,
}

#[derive(Deserialize)]
struct RawPath {
    s: Composition,
    mu: WeakComposition,
}

impl TryFrom<RawPath> for DyckPath {
    type Error = Error;
    fn try_from(raw: RawPath) -> Result<Self> {
        DyckPath::new(raw.s, raw.mu)
    }
}

/// A lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    N,
    E,
}

impl DyckPath {
    pub fn new(s: Composition, mu: WeakComposition) -> Result<Self> {
        if s.len() != mu.len() {
            return Err(Error::InvalidPath(format!(
                "μ = ({}) has length {} but s = ({}) has length {}",
                mu,
                mu.len(),
                s,
                s.len()
            )));
        }
        if mu.sum() != s.excess() {
            return Err(Error::InvalidPath(format!(
                "μ = ({}) sums to {}, expected {}",
                mu,
                mu.sum(),
                s.excess()
            )));
        }
        if !dominance_leq(&mu, &s.minus_one()) {
            return Err(Error::InvalidPath(format!("μ = ({}) crosses the ribbon of s = ({})", mu, s)));
        }
        Ok(DyckPath { s, mu })
    }

    pub(crate) fn new_unchecked(s: Composition, mu: WeakComposition) -> Self {
        debug_assert!(DyckPath::new(s.clone(), mu.clone()).is_ok());
        DyckPath { s, mu }
    }

    /// The identity path `E`.
    pub fn identity() -> Self {
        DyckPath { s: Composition::empty(), mu: WeakComposition::empty() }
    }

    /// Reads an `N`/`E` word against the given signature.
    pub fn from_word(s: Composition, word: &str) -> Result<Self> {
        let steps = parse_word(word)?;
        let (sig_len, mu) = mu_of_steps(&steps)?;
        if sig_len != s.len() {
            return Err(Error::InvalidPath(format!(
                "word `{}` has {} north steps but s = ({}) has length {}",
                word,
                sig_len,
                s,
                s.len()
            )));
        }
        DyckPath::new(s, mu)
    }

    pub fn s(&self) -> &Composition {
        &self.s
    }

    pub fn mu(&self) -> &WeakComposition {
        &self.mu
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_empty()
    }

    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::with_capacity(self.s.len() + self.s.excess() + 1);
        for &m in self.mu.iter() {
            out.push(Step::N);
            out.extend(std::iter::repeat_n(Step::E, m));
        }
        out.push(Step::E);
        out
    }

    pub fn word(&self) -> String {
        self.steps().into_iter().map(|st| if st == Step::N { 'N' } else { 'E' }).collect()
    }

    /// `(0) ⊕ ((s - 1) ∖ μ)`
    pub fn area_vector(&self) -> WeakComposition {
        if self.is_identity() {
            return WeakComposition::empty();
        }
        let diff = dominance_diff(&self.s.minus_one(), &self.mu).expect("valid path");
        let mut parts = vec![0];
        parts.extend_from_slice(&diff);
        WeakComposition::new(parts)
    }

    pub fn area(&self) -> usize {
        self.area_vector().sum()
    }

    /// Number of `NE` factors.
    pub fn peaks(&self) -> usize {
        let a = self.mu.len();
        if a == 0 {
            return 0;
        }
        self.mu[..a - 1].iter().filter(|&&m| m > 0).count() + 1
    }

    /// x-coordinate of each north step: `μ(1) + ... + μ(i-1)`.
    pub fn north_x(&self) -> Vec<usize> {
        let mut x = 0;
        self.mu
            .iter()
            .map(|&m| {
                let here = x;
                x += m;
                here
            })
            .collect()
    }

    /// Horizontal distance to the ribbon at every lattice point after the
    /// first north step, excluding the final endpoint.
    pub fn distance_labels(&self) -> Result<Vec<usize>> {
        if self.is_identity() {
            return Err(Error::InvalidPath("the identity path has no decomposition".into()));
        }
        let bound = prefix_sums(&self.s.minus_one());
        let steps = self.steps();
        let (mut x, mut y) = (0usize, 1usize);
        let mut labels = vec![bound[0]];
        // skip the first north step and the final east step
        for &st in &steps[1..steps.len() - 1] {
            match st {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            labels.push(bound[y - 1] - x);
        }
        Ok(labels)
    }

    /// Splits `D = N D_1 ... D_k` with `k = s(1)`.
    pub fn catalan_decompose(&self) -> Result<(usize, Vec<DyckPath>)> {
        let labels = self.distance_labels()?;
        let k = self.s[0];
        let steps = self.steps();
        let tail = &steps[1..];
        // row (1-based index into s) of every north step of the tail
        let mut rows = Vec::new();
        let mut row = 1;
        for &st in tail {
            if st == Step::N {
                row += 1;
                rows.push(row);
            }
        }
        let mut cuts = Vec::with_capacity(k + 1);
        let mut from = 0;
        for target in (0..k).rev() {
            let pos = (from..labels.len())
                .find(|&p| labels[p] == target)
                .ok_or_else(|| Error::InvalidPath(format!("distance {} never reached", target)))?;
            cuts.push(pos);
            from = pos;
        }
        cuts.push(tail.len());
        let mut parts = Vec::with_capacity(k);
        let mut north_seen = 0;
        for w in cuts.windows(2) {
            let piece = &tail[w[0]..w[1]];
            let norths = piece.iter().filter(|&&st| st == Step::N).count();
            let sig: Vec<usize> =
                rows[north_seen..north_seen + norths].iter().map(|&r| self.s[r - 1]).collect();
            north_seen += norths;
            let (_, mu) = mu_of_steps(piece)?;
            parts.push(DyckPath::new(Composition::new(sig)?, mu)?);
        }
        Ok((k, parts))
    }

    /// `[D_1, ..., D_k] = N D_1 ... D_k`.
    pub fn compose(k: usize, parts: &[DyckPath]) -> Result<DyckPath> {
        if parts.len() != k || k == 0 {
            return Err(Error::Arity { expected: k, got: parts.len() });
        }
        let mut steps = vec![Step::N];
        let mut sig = vec![k];
        for p in parts {
            steps.extend(p.steps());
            sig.extend_from_slice(&p.s);
        }
        let (_, mu) = mu_of_steps(&steps)?;
        DyckPath::new(Composition::new(sig)?, mu)
    }

    /// Substitutes `D_0 D_1 ... D_k` for the final `E^{μ(a)+1}` block of `D`.
    pub fn operadic_compose(&self, parts: &[DyckPath]) -> Result<DyckPath> {
        let last = self.mu.last().copied().unwrap_or(0);
        if parts.len() != last + 1 {
            return Err(Error::Arity { expected: last + 1, got: parts.len() });
        }
        let mut steps = self.steps();
        steps.truncate(steps.len() - (last + 1));
        let mut sig = self.s.to_vec();
        for p in parts {
            steps.extend(p.steps());
            sig.extend_from_slice(&p.s);
        }
        let (_, mu) = mu_of_steps(&steps)?;
        DyckPath::new(Composition::new(sig)?, mu)
    }
}

fn parse_word(word: &str) -> Result<Vec<Step>> {
    word.trim()
        .chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            other => Err(Error::Parse(format!("unexpected step `{}` in path word", other))),
        })
        .collect()
}

/// Number of north steps and the east-step composition of a step word
/// `N E^{i_1} ... N E^{i_a} E`.
fn mu_of_steps(steps: &[Step]) -> Result<(usize, WeakComposition)> {
    match steps.split_last() {
        Some((Step::E, body)) => {
            if matches!(body.first(), Some(Step::E)) {
                return Err(Error::InvalidPath("path word must start with N".into()));
            }
            let mut mu: Vec<usize> = Vec::new();
            for &st in body {
                match st {
                    Step::N => mu.push(0),
                    Step::E => *mu.last_mut().unwrap() += 1,
                }
            }
            Ok((mu.len(), WeakComposition::new(mu)))
        }
        _ => Err(Error::InvalidPath("path word must end with E".into())),
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}; mu={}", self.s, self.mu)
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    /// Parses `s=3,4,4,2,5; mu=0,2,6,0,5`.
    fn from_str(text: &str) -> Result<Self> {
        let (mut s, mut mu) = (None, None);
        for field in text.split(';') {
            let field = field.trim();
            if let Some(v) = field.strip_prefix("s=") {
                s = Some(v.parse::<Composition>()?);
            } else if let Some(v) = field.strip_prefix("mu=") {
                mu = Some(v.parse::<WeakComposition>()?);
            } else if !field.is_empty() {
                return Err(Error::Parse(format!("unknown path field `{}`", field)));
            }
        }
        match (s, mu) {
            (Some(s), Some(mu)) => DyckPath::new(s, mu),
            _ => Err(Error::Parse(format!("path `{}` needs both s= and mu=", text))),
        }
    }
}

/// All s-Dyck paths in lexicographic order of `μ`.
pub fn enumerate_paths(s: &Composition) -> PathIter {
    let a = s.len();
    let n = s.excess();
    let current = if a == 0 {
        Some(Vec::new())
    } else {
        let mut mu = vec![0; a];
        mu[a - 1] = n;
        Some(mu)
    };
    PathIter { s: s.clone(), bounds: prefix_sums(&s.minus_one()), current }
}

/// Lazy odometer over the valid `μ` of a signature.
#[derive(Debug, Clone)]
pub struct PathIter {
    s: Composition,
    bounds: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl PathIter {
    fn advance(&mut self, mu: &[usize]) -> Option<Vec<usize>> {
        let a = mu.len();
        if a < 2 {
            return None;
        }
        let n = self.bounds[a - 1];
        let pre = prefix_sums(mu);
        for j in (0..a - 1).rev() {
            if pre[j] < self.bounds[j] {
                let mut next = mu[..=j].to_vec();
                next[j] += 1;
                next.resize(a, 0);
                next[a - 1] = n - (pre[j] + 1);
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for PathIter {
    type Item = DyckPath;
    fn next(&mut self) -> Option<DyckPath> {
        let mu = self.current.take()?;
        self.current = self.advance(&mu);
        Some(DyckPath::new_unchecked(self.s.clone(), WeakComposition::new(mu)))
    }
}
