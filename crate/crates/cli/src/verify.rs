//! The invariant suite behind `scat verify`.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use scat_core::bijections::*;
use scat_core::enumeration::{count_determinant, count_recurrence, narayana_distribution, Statistic};
use scat_core::noncrossing::{enumerate_matchings, enumerate_noncrossing_partitions};
use scat_core::paths::enumerate_paths;
use scat_core::stirling::enumerate_312_avoiding;
use scat_core::trees::enumerate_trees;
use scat_core::{CapExt, Composition, PlanarTree, Result};

/// Outcome of the checks for one signature.
pub struct Row {
    pub s: Composition,
    /// Family name and size; `None` where the family needs entries at least 2.
    pub counts: Vec<(&'static str, Option<usize>)>,
    pub recurrence: String,
    pub determinant: String,
    pub round_trips: bool,
    pub narayana: bool,
}

impl Row {
    pub fn ok(&self) -> bool {
        let c = &self.recurrence;
        self.round_trips
            && self.narayana
            && &self.determinant == c
            && self.counts.iter().all(|(_, n)| n.is_none_or(|n| &n.to_string() == c))
    }

    pub fn text(&self) -> String {
        let counts: Vec<String> = self
            .counts
            .iter()
            .map(|(name, n)| format!("{}={}", name, n.map_or("-".to_string(), |n| n.to_string())))
            .collect();
        format!(
            "s={:<16} C={:<6} {}  roundtrip={}  narayana={}  {}",
            format!("({})", self.s),
            self.recurrence,
            counts.join(" "),
            if self.round_trips { "ok" } else { "FAIL" },
            if self.narayana { "ok" } else { "FAIL" },
            if self.ok() { "PASS" } else { "FAIL" }
        )
    }

    pub fn json(&self) -> Value {
        let counts: serde_json::Map<String, Value> =
            self.counts.iter().map(|(name, n)| (name.to_string(), json!(n))).collect();
        json!({
            "s": self.s.parts(),
            "recurrence": self.recurrence,
            "determinant": self.determinant,
            "counts": counts,
            "round_trips": self.round_trips,
            "narayana": self.narayana,
            "pass": self.ok(),
        })
    }
}

fn round_trips(s: &Composition, trees: &[PlanarTree]) -> Result<bool> {
    let mut ok = true;
    let mut angulations = BTreeSet::new();
    let mut words = BTreeSet::new();
    for (t, p) in trees.iter().zip(enumerate_paths(s)) {
        ok &= tree_to_path(t) == p && &path_to_tree(&p) == t;
        ok &= &matching_to_tree(&tree_to_matching(t))? == t;
        ok &= path_to_matching_direct(&p) == tree_to_matching(t);
        let a = tree_to_angulation(t);
        ok &= &angulation_to_tree(&a)? == t;
        angulations.insert(a);
        let w = tree_to_parenthesization(t);
        ok &= &parenthesization_to_tree(&w) == t;
        words.insert(w);
        if s.all_at_least_two() {
            let sigma = tree_to_stirling(t)?;
            ok &= &stirling_to_tree(&sigma)? == t && path_to_stirling_direct(&p)? == sigma;
            let pi = tree_to_partition(t)?;
            ok &= &partition_to_tree(&pi, s)? == t && path_to_partition_direct(&p)? == pi;
        }
    }
    Ok(ok && angulations.len() == trees.len() && words.len() == trees.len())
}

fn narayana_agrees(s: &Composition, cap: usize) -> Result<bool> {
    if s.is_empty() {
        return Ok(true);
    }
    let stats: Vec<Statistic> = if s.all_at_least_two() {
        Statistic::ALL.to_vec()
    } else {
        vec![Statistic::Peaks, Statistic::LeftmostLeaves]
    };
    let first = narayana_distribution(s, stats[0], cap)?;
    for &st in &stats[1..] {
        if narayana_distribution(s, st, cap)?.counts != first.counts {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check(s: &Composition, cap: usize) -> Result<Row> {
    let trees = enumerate_trees(s).collect_capped(cap)?;
    let mut counts = vec![
        ("tree", Some(trees.len())),
        ("path", Some(enumerate_paths(s).count_capped(cap)?)),
        ("matching", Some(enumerate_matchings(s).count_capped(cap)?)),
    ];
    if s.all_at_least_two() {
        let content = Composition::new(s.minus_one().into_parts())?;
        counts.push(("stirling312", Some(enumerate_312_avoiding(&content).count_capped(cap)?)));
        counts.push(("ncpartition", Some(enumerate_noncrossing_partitions(&content).count_capped(cap)?)));
    } else {
        counts.push(("stirling312", None));
        counts.push(("ncpartition", None));
    }
    Ok(Row {
        s: s.clone(),
        counts,
        recurrence: count_recurrence(s).to_string(),
        determinant: count_determinant(s).to_string(),
        round_trips: round_trips(s, &trees)?,
        narayana: narayana_agrees(s, cap)?,
    })
}
