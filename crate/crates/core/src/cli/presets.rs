use std::sync::Arc;

use super::json::{presentation_from_json, table_from_json, GroupFileJson};
use crate::error::{input, Error, Result};
use crate::grouphom::{FiniteGroupTable, FpGroupPresentation};

const FIXTURES: [(&str, &str); 4] = [
    ("Z2", include_str!("../../fixtures/Z2.json")),
    ("Z3", include_str!("../../fixtures/Z3.json")),
    ("Z4", include_str!("../../fixtures/Z4.json")),
    ("Z2xZ2", include_str!("../../fixtures/Z2xZ2.json")),
];

/// A finite group together with presentations that map onto it.
#[derive(Clone, Debug)]
pub struct GroupFixture {
    pub name: String,
    pub table: Arc<FiniteGroupTable>,
    pub presentations: Vec<FpGroupPresentation>,
}

pub fn preset_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn parse_group_file(text: &str, fallback_name: &str) -> Result<GroupFixture> {
    let j: GroupFileJson =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("group file JSON: {e}")))?;
    let table = Arc::new(table_from_json(&j.table)?);
    let presentations = j
        .presentations
        .iter()
        .map(|p| presentation_from_json(p, table.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupFixture {
        name: j.name.unwrap_or_else(|| fallback_name.to_string()),
        table,
        presentations,
    })
}

pub fn preset(name: &str) -> Result<GroupFixture> {
    match FIXTURES.iter().find(|(n, _)| *n == name) {
        Some((n, text)) => parse_group_file(text, n),
        None => input(format!(
            "unknown preset '{name}' (available: {})",
            preset_names().join(", ")
        )),
    }
}

pub fn all_presets() -> Vec<GroupFixture> {
    preset_names()
        .into_iter()
        .map(|n| preset(n).expect("bundled fixtures are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_load() {
        let all = all_presets();
        assert_eq!(all.len(), 4);
        for f in &all {
            assert_eq!(f.presentations.len(), 2, "{}", f.name);
            let (a, b) = (&f.presentations[0], &f.presentations[1]);
            assert_eq!(b.generator_count(), a.generator_count() + 1);
        }
        assert_eq!(preset("Z2xZ2").unwrap().table.order(), 4);
        assert!(preset("Z5").is_err());
    }

    #[test]
    fn group_file_errors() {
        assert!(parse_group_file("{}", "x").is_err());
        let bad_relator = r#"{"table":{"order":2,"mult":[[0,1],[1,0]]},
            "presentations":[{"generators":["a"],"relators":["a"],"assignment":[1]}]}"#;
        assert!(parse_group_file(bad_relator, "x").is_err());
        let bad_table = r#"{"table":{"order":2,"mult":[[0,1],[1,1]]}}"#;
        assert!(parse_group_file(bad_table, "x").is_err());
        let ok = r#"{"table":{"order":2,"mult":[[0,1],[1,0]]}}"#;
        assert_eq!(parse_group_file(ok, "mine").unwrap().name, "mine");
    }
}
