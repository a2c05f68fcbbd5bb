//! The object families reachable from the command line, with text and JSON
//! forms, and conversion through the tree hub.

use clap::ValueEnum;
use serde_json::Value;

use scat_core::bijections::*;
use scat_core::enumeration::count_recurrence;
use scat_core::noncrossing::{enumerate_matchings, enumerate_noncrossing_partitions};
use scat_core::parking::{count_parking, enumerate_decorated_paths, enumerate_decorated_trees, enumerate_parking};
use scat_core::paths::enumerate_paths;
use scat_core::stirling::enumerate_312_avoiding;
use scat_core::trees::enumerate_trees;
use scat_core::{
    Angulation, Composition, DyckPath, Error, Matching, Multipermutation, Parenthesization, PlanarTree, Result,
    SetPartition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Tree,
    Path,
    Stirling312,
    Ncpartition,
    Matching,
    Angulation,
    Parens,
    Parking,
    DecoratedTree,
    DecoratedPath,
}

/// One object of a family in the tree-equivalent classes.
#[derive(Debug, Clone)]
pub enum Object {
    Tree(PlanarTree),
    Path(DyckPath),
    Stirling(Multipermutation),
    Partition(SetPartition),
    Matching(Matching),
    Angulation(Angulation),
    Parens(Parenthesization),
}

impl Object {
    pub fn parse(family: Family, text: &str, s: Option<&Composition>) -> Result<Object> {
        Ok(match family {
            Family::Tree => Object::Tree(text.parse()?),
            Family::Path => Object::Path(text.parse()?),
            Family::Stirling312 => Object::Stirling(text.parse()?),
            Family::Ncpartition => {
                let pi: SetPartition = text.parse()?;
                let s = s.ok_or_else(|| Error::Parse("a partition needs its tree signature via --s".into()))?;
                // validated here so the signature travels with the object
                partition_to_tree(&pi, s)?;
                Object::Partition(pi)
            }
            Family::Matching => Object::Matching(text.parse()?),
            Family::Angulation => Object::Angulation(text.parse()?),
            Family::Parens => Object::Parens(text.parse()?),
            other => {
                return Err(Error::Parse(format!("{:?} objects cannot be converted", other)));
            }
        })
    }

    pub fn to_tree(&self, s: Option<&Composition>) -> Result<PlanarTree> {
        match self {
            Object::Tree(t) => Ok(t.clone()),
            Object::Path(p) => Ok(path_to_tree(p)),
            Object::Stirling(w) => stirling_to_tree(w),
            Object::Partition(pi) => {
                partition_to_tree(pi, s.ok_or_else(|| Error::Parse("a partition needs --s".into()))?)
            }
            Object::Matching(m) => matching_to_tree(m),
            Object::Angulation(a) => angulation_to_tree(a),
            Object::Parens(w) => Ok(parenthesization_to_tree(w)),
        }
    }

    pub fn from_tree(family: Family, t: &PlanarTree) -> Result<Object> {
        Ok(match family {
            Family::Tree => Object::Tree(t.clone()),
            Family::Path => Object::Path(tree_to_path(t)),
            Family::Stirling312 => Object::Stirling(tree_to_stirling(t)?),
            Family::Ncpartition => Object::Partition(tree_to_partition(t)?),
            Family::Matching => Object::Matching(tree_to_matching(t)),
            Family::Angulation => Object::Angulation(tree_to_angulation(t)),
            Family::Parens => Object::Parens(tree_to_parenthesization(t)),
            other => {
                return Err(Error::Parse(format!("{:?} objects cannot be converted", other)));
            }
        })
    }

    pub fn text(&self) -> String {
        match self {
            Object::Tree(x) => x.to_string(),
            Object::Path(x) => x.to_string(),
            Object::Stirling(x) => x.to_string(),
            Object::Partition(x) => x.to_string(),
            Object::Matching(x) => x.to_string(),
            Object::Angulation(x) => x.to_string(),
            Object::Parens(x) => x.to_string(),
        }
    }

    pub fn json(&self) -> Value {
        let v = match self {
            Object::Tree(x) => serde_json::to_value(x),
            Object::Path(x) => serde_json::to_value(x),
            Object::Stirling(x) => serde_json::to_value(x),
            Object::Partition(x) => serde_json::to_value(x),
            Object::Matching(x) => serde_json::to_value(x),
            Object::Angulation(x) => serde_json::to_value(x),
            Object::Parens(x) => serde_json::to_value(x),
        };
        v.expect("plain data serializes")
    }
}

/// A listed item: its text line and its JSON value.
pub struct Item {
    pub text: String,
    pub json: Value,
}

fn item<T: std::fmt::Display + serde::Serialize>(x: T) -> Item {
    Item { text: x.to_string(), json: serde_json::to_value(&x).expect("plain data serializes") }
}

fn content_of(s: &Composition) -> Result<Composition> {
    s.require_at_least_two()?;
    Composition::new(s.minus_one().into_parts())
}

/// Number of objects `list` would print; checked against the cap before any output.
pub fn list_size(family: Family, s: &Composition) -> Result<num_bigint::BigUint> {
    Ok(match family {
        Family::Parking | Family::DecoratedTree | Family::DecoratedPath => count_parking(&s.minus_one()),
        Family::Stirling312 | Family::Ncpartition => {
            s.require_at_least_two()?;
            count_recurrence(s)
        }
        _ => count_recurrence(s),
    })
}

/// All objects of `family` indexed by the tree signature `s`, in canonical order.
pub fn list(family: Family, s: &Composition) -> Result<Box<dyn Iterator<Item = Item>>> {
    Ok(match family {
        Family::Tree => Box::new(enumerate_trees(s).map(item)),
        Family::Path => Box::new(enumerate_paths(s).map(item)),
        Family::Stirling312 => Box::new(enumerate_312_avoiding(&content_of(s)?).map(item)),
        Family::Ncpartition => Box::new(enumerate_noncrossing_partitions(&content_of(s)?).map(item)),
        Family::Matching => Box::new(enumerate_matchings(s).map(item)),
        Family::Angulation => Box::new(enumerate_trees(s).map(|t| item(tree_to_angulation(&t)))),
        Family::Parens => Box::new(enumerate_trees(s).map(|t| item(tree_to_parenthesization(&t)))),
        Family::Parking => Box::new(enumerate_parking(&s.minus_one()).map(item)),
        Family::DecoratedTree => Box::new(enumerate_decorated_trees(s).map(item)),
        Family::DecoratedPath => Box::new(enumerate_decorated_paths(s).map(item)),
    })
}
