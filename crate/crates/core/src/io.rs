//! JSON input and output for semigroups.
//!
//! A semigroup file is one of
//!
//! ```json
//! {"kind": "table", "order": 2, "table": [[0, 1], [1, 1]], "identity": 0}
//! {"kind": "transformations", "degree": 2, "generators": {"a": [1, 1]}, "monoid": true}
//! {"kind": "named", "name": "B2"}
//! ```
//!
//! `identity` and `monoid` are optional. Named semigroups come from the
//! curated corpus.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, TransformationSemigroup, DEFAULT_CAP};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemigroupFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<usize>,
    },
    Transformations {
        degree: usize,
        generators: BTreeMap<String, Vec<usize>>,
        #[serde(default)]
        monoid: bool,
    },
    Named {
        name: String,
    },
}

impl SemigroupFile {
    pub fn build(&self) -> Result<FiniteSemigroup> {
        match self {
            SemigroupFile::Table {
                order,
                table,
                identity,
            } => FiniteSemigroup::from_cayley_table(*order, table, *identity),
            SemigroupFile::Transformations {
                degree,
                generators,
                monoid,
            } => {
                if let Some(bad) = generators
                    .keys()
                    .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
                {
                    return Err(Error::InvalidAutomaton(format!("invalid generator label {bad:?}")));
                }
                let gens: Vec<(String, Vec<usize>)> =
                    generators.iter().map(|(l, m)| (l.clone(), m.clone())).collect();
                Ok(TransformationSemigroup::generate(*degree, &gens, *monoid, DEFAULT_CAP)?.semigroup)
            }
            SemigroupFile::Named { name } => named(name),
        }
    }
}

/// A curated semigroup by name, or `Z<n>` for any cyclic group.
pub fn named(name: &str) -> Result<FiniteSemigroup> {
    if let Some((_, s)) = corpus::curated().into_iter().find(|(n, _)| *n == name) {
        return Ok(s);
    }
    match name.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
        Some(n) if (1..=64).contains(&n) => Ok(corpus::cyclic(n)),
        _ => Err(Error::UnknownSemigroup(name.to_string())),
    }
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    let file: SemigroupFile = serde_json::from_str(text)?;
    file.build()
}

pub fn table_file(s: &FiniteSemigroup) -> SemigroupFile {
    SemigroupFile::Table {
        order: s.order(),
        table: s.table(),
        identity: s.identity(),
    }
}

pub fn semigroup_to_json(s: &FiniteSemigroup) -> serde_json::Value {
    serde_json::to_value(table_file(s)).expect("plain data")
}
