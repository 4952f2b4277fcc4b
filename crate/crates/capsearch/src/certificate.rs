//! The classification certificate: a JSON document carrying every class
//! with its representative, canonical form, stabilizer order and weight
//! enumerator, plus per-size counts and search diagnostics.
//!
//! Certificates are byte-reproducible: map keys are sorted, classes are
//! listed in (size, canonical form) order, and `diagnostics.runtime_ms`
//! is always written as 0 (wall-clock time would break reproducibility;
//! the CLI reports timing on the console instead).

use std::collections::BTreeMap;

use capsearch_core::search::ClassificationTable;
use capsearch_core::{PointSet, Space};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    /// `PG(r,2)`.
    pub space: String,
    pub group_order: u64,
    pub generated_by: String,
    pub classes: Vec<CertificateClass>,
    /// size -> class counts; derived from `classes`.
    pub counts: BTreeMap<usize, SizeCounts>,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateClass {
    pub size: usize,
    pub complete: bool,
    /// Representative cap, integer encodings ascending.
    pub points: Vec<u32>,
    /// Canonical form, integer encodings ascending.
    pub canonical: Vec<u32>,
    pub stabilizer_order: u64,
    /// `w^{m}` notation, ascending weights.
    pub weight_enumerator: String,
    /// weight -> multiplicity.
    pub weight_counts: BTreeMap<u32, u64>,
    /// False for rows outside the published table range (the size-(r+1)
    /// frame class; every class when no table covers the space).
    pub in_reference_table: bool,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct SizeCounts {
    pub complete: u32,
    pub incomplete: u32,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Diagnostics {
    pub duplicates_pruned_tree: u64,
    /// Always 0 in emitted certificates; see the module docs.
    pub runtime_ms: u64,
}

/// Size range of the published classification table for the space, if
/// one exists.
pub fn reference_table_range(space: &Space) -> Option<(usize, usize)> {
    match space.r() {
        3 => Some((5, 8)),
        4 => Some((6, 16)),
        _ => None,
    }
}

pub fn space_name(space: &Space) -> String {
    format!("PG({},2)", space.r())
}

/// Parses `PG(r,2)` back into a space.
pub fn parse_space_name(name: &str) -> Result<Space, String> {
    let inner = name
        .strip_prefix("PG(")
        .and_then(|s| s.strip_suffix(",2)"))
        .ok_or_else(|| format!("unrecognized space {name:?}"))?;
    let r: u32 = inner
        .parse()
        .map_err(|_| format!("unrecognized space {name:?}"))?;
    Space::new(r).map_err(|e| e.to_string())
}

fn encodings(s: &PointSet) -> Vec<u32> {
    s.iter().map(|p| p.encoding()).collect()
}

/// Builds the certificate for a classification table.
pub fn from_table(table: &ClassificationTable) -> Certificate {
    let space = table.space;
    let range = reference_table_range(&space);
    let classes = table
        .classes
        .iter()
        .map(|class| CertificateClass {
            size: class.size,
            complete: class.complete,
            points: encodings(&class.representative),
            canonical: encodings(&class.canonical),
            stabilizer_order: class.stabilizer_order,
            weight_enumerator: class.weight_enum.to_string(),
            weight_counts: class.weight_enum.counts().collect(),
            in_reference_table: range
                .map(|(lo, hi)| (lo..=hi).contains(&class.size))
                .unwrap_or(false),
        })
        .collect();
    let counts = table
        .counts()
        .into_iter()
        .map(|(size, (complete, incomplete))| {
            (
                size,
                SizeCounts {
                    complete,
                    incomplete,
                },
            )
        })
        .collect();
    Certificate {
        space: space_name(&space),
        group_order: space.group_order(),
        generated_by: format!("capsearch {}", env!("CARGO_PKG_VERSION")),
        classes,
        counts,
        diagnostics: Diagnostics {
            duplicates_pruned_tree: table.duplicates_pruned_tree,
            runtime_ms: 0,
        },
    }
}

/// Canonical serialization; identical input yields identical bytes.
pub fn to_json(cert: &Certificate) -> String {
    let mut out = serde_json::to_string_pretty(cert).expect("certificate serialization");
    out.push('\n');
    out
}

pub fn parse(json: &str) -> Result<Certificate, String> {
    serde_json::from_str(json).map_err(|e| format!("bad certificate: {e}"))
}

/// `size,type,count` rows, one per size and completeness type.
pub fn to_csv(cert: &Certificate) -> String {
    let mut out = String::from("size,type,count\n");
    for (size, counts) in &cert.counts {
        out.push_str(&format!("{size},complete,{}\n", counts.complete));
        out.push_str(&format!("{size},incomplete,{}\n", counts.incomplete));
    }
    out
}

/// Markdown counts table in the published layout; rows outside the
/// reference table range are starred.
pub fn to_markdown(cert: &Certificate) -> String {
    let range = parse_space_name(&cert.space)
        .ok()
        .and_then(|s| reference_table_range(&s));
    let mut out = String::new();
    out.push_str("| |K| | # COMPLETE CAPS | # INCOMPLETE CAPS |\n");
    out.push_str("|------|-----------------|-------------------|\n");
    let mut starred = false;
    for (size, counts) in &cert.counts {
        let in_range = range
            .map(|(lo, hi)| (lo..=hi).contains(size))
            .unwrap_or(true);
        let star = if in_range { "" } else { "*" };
        starred |= !in_range;
        out.push_str(&format!(
            "| {size}{star} | {} | {} |\n",
            counts.complete, counts.incomplete
        ));
    }
    if starred {
        out.push_str("\n\\* outside the published table range\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use capsearch_core::search::classify;

    #[test]
    fn round_trips_through_json() {
        let space = Space::new(3).unwrap();
        let table = classify(&space).unwrap();
        let cert = from_table(&table);
        let json = to_json(&cert);
        let back = parse(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(to_json(&back), json);
    }

    #[test]
    fn frame_row_is_flagged() {
        let space = Space::new(3).unwrap();
        let cert = from_table(&classify(&space).unwrap());
        let frame_row = cert.classes.iter().find(|c| c.size == 4).unwrap();
        assert!(!frame_row.in_reference_table);
        assert!(cert
            .classes
            .iter()
            .filter(|c| c.size >= 5)
            .all(|c| c.in_reference_table));
    }

    #[test]
    fn space_names() {
        let space = Space::new(4).unwrap();
        assert_eq!(space_name(&space), "PG(4,2)");
        assert_eq!(parse_space_name("PG(4,2)").unwrap(), space);
        assert!(parse_space_name("PG(5,2)").is_err());
        assert!(parse_space_name("AG(4,2)").is_err());
    }

    #[test]
    fn csv_and_markdown_render() {
        let space = Space::new(2).unwrap();
        let cert = from_table(&classify(&space).unwrap());
        let csv = to_csv(&cert);
        assert!(csv.starts_with("size,type,count\n"));
        assert!(csv.contains("3,incomplete,1\n"));
        assert!(csv.contains("4,complete,1\n"));
        let md = to_markdown(&cert);
        assert!(md.contains("| |K| |"));
    }
}
