//! JSON group definitions.
//!
//! ```json
//! {"kind":"finite","generators":{"s":[2,1,3],"t":[2,3,1]}}
//! {"kind":"finite","table":[[0,1],[1,0]],"generators":{"a":1}}
//! {"kind":"free","rank":2,"names":["y1","y2"]}
//! {"kind":"free_abelian","rank":2,"names":["t1","t2"]}
//! {"kind":"abelianized_free","rank":2}
//! {"kind":"baumslag_solitar","n":1,"m":2}
//! {"kind":"product","factors":[{...},{...}]}
//! {"kind":"preset","name":"S3"}
//! ```
//!
//! Permutations are one-line images, 1-based. Generator order is the order
//! of the JSON object keys. Table generators are 0-based row indices.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::Group;
use crate::error::{Error, Result};
use crate::presets;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Finite {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        table: Option<Vec<Vec<usize>>>,
        generators: IndexMap<String, GeneratorSpec>,
    },
    Free {
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    FreeAbelian {
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    AbelianizedFree {
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    BaumslagSolitar {
        n: i64,
        m: i64,
    },
    Product {
        factors: [Box<GroupSpec>; 2],
    },
    Preset {
        name: String,
    },
}

/// A permutation (one-line images) or, with a `table`, a row index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Index(usize),
    Permutation(Vec<usize>),
}

fn names_or(names: &Option<Vec<String>>, rank: usize, prefix: &str) -> Result<Vec<String>> {
    match names {
        Some(n) if n.len() != rank => Err(Error::GroupDefinition(format!(
            "{} names given for rank {rank}",
            n.len()
        ))),
        Some(n) => Ok(n.clone()),
        None => Ok((1..=rank).map(|i| format!("{prefix}{i}")).collect()),
    }
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn preset(name: &str) -> Self {
        GroupSpec::Preset { name: name.to_owned() }
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Finite { table: None, generators } => {
                let names: Vec<&String> = generators.keys().collect();
                let perms = generators
                    .values()
                    .map(|g| match g {
                        GeneratorSpec::Permutation(p) => Ok(p.clone()),
                        GeneratorSpec::Index(_) => Err(Error::GroupDefinition(
                            "index generators need a `table`".into(),
                        )),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Group::from_permutations(&names, &perms)
            }
            GroupSpec::Finite { table: Some(table), generators } => {
                let names: Vec<&String> = generators.keys().collect();
                let idx = generators
                    .values()
                    .map(|g| match g {
                        GeneratorSpec::Index(i) => Ok(*i),
                        GeneratorSpec::Permutation(_) => Err(Error::GroupDefinition(
                            "table generators are row indices".into(),
                        )),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Group::from_cayley_table(&names, table, &idx)
            }
            GroupSpec::Free { rank, names } => Group::free(&names_or(names, *rank, "y")?),
            GroupSpec::FreeAbelian { rank, names } => {
                Group::free_abelian(&names_or(names, *rank, "t")?)
            }
            GroupSpec::AbelianizedFree { rank, names } => {
                Group::abelianized_free(&names_or(names, *rank, "y")?)
            }
            GroupSpec::BaumslagSolitar { n, m } => Group::baumslag_solitar(*n, *m),
            GroupSpec::Product { factors: [a, b] } => Group::product(&a.build()?, &b.build()?),
            GroupSpec::Preset { name } => presets::by_name(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_forms_parse() {
        let s3 = GroupSpec::from_json(r#"{"kind":"finite","generators":{"s":[2,1,3],"t":[2,3,1]}}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(s3.order(), Some(6));
        assert_eq!(s3.alphabet().names(), &["s", "t"]);

        let f2 = GroupSpec::from_json(r#"{"kind":"free","rank":2,"names":["y1","y2"]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(f2.rank(), 2);

        let z2 = GroupSpec::from_json(r#"{"kind":"free_abelian","rank":2,"names":["t1","t2"]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(z2.is_abelian());
    }

    #[test]
    fn key_order_is_generator_order() {
        let g = GroupSpec::from_json(r#"{"kind":"finite","generators":{"t":[2,3,1],"s":[2,1,3]}}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.alphabet().names(), &["t", "s"]);
    }

    #[test]
    fn tables_and_presets() {
        let c2 = GroupSpec::from_json(r#"{"kind":"finite","table":[[0,1],[1,0]],"generators":{"a":1}}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(c2.order(), Some(2));
        let p = GroupSpec::from_json(r#"{"kind":"product","factors":[{"kind":"preset","name":"Z"},{"kind":"preset","name":"C3"}]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(p.rank(), 2);
    }

    #[test]
    fn bad_definitions() {
        assert!(matches!(GroupSpec::from_json("{\"kind\":\"nope\"}"), Err(Error::Parse { .. })));
        let bad = GroupSpec::from_json(r#"{"kind":"free","rank":2,"names":["y1"]}"#).unwrap();
        assert!(bad.build().is_err());
        let bad = GroupSpec::from_json(r#"{"kind":"finite","generators":{"a":1}}"#).unwrap();
        assert!(bad.build().is_err());
    }

    #[test]
    fn specs_serialize_back() {
        let text = r#"{"kind":"finite","generators":{"s":[2,1,3],"t":[2,3,1]}}"#;
        let spec = GroupSpec::from_json(text).unwrap();
        assert_eq!(serde_json::to_string(&spec).unwrap(), text);
    }
}
