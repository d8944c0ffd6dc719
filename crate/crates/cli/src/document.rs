//! JSON documents emitted by the CLI.
//!
//! Every document has the shape `{schema_version, n, entries[]}`. Elements are
//! written as `1`, `x^k`, `yx^k`. Unknown fields are rejected on read.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use dicyclic::space::{ElementSet, Partition, SpaceReport};
use dicyclic::{Automorphism, GroupMap, GroupParams};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument<E> {
    pub schema_version: String,
    pub n: u32,
    pub entries: Vec<E>,
}

impl<E> ReportDocument<E> {
    pub fn new(params: GroupParams, entries: Vec<E>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            n: params.n(),
            entries,
        }
    }
}

impl<E: Serialize> ReportDocument<E> {
    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

/// Parse a document and check its schema version.
pub fn parse_document<E: DeserializeOwned>(text: &str) -> Result<ReportDocument<E>, CliError> {
    let doc: ReportDocument<E> = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(CliError::Schema(format!(
            "unsupported schema_version {:?}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementEntry {
    pub element: String,
    pub order: u32,
    pub central: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorImages {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutomorphismKind {
    Rs,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismRecord {
    pub kind: AutomorphismKind,
    pub r: Option<u32>,
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<GeneratorImages>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl AutomorphismRecord {
    pub fn new(phi: &Automorphism, label: Option<&str>) -> Self {
        let label = label.map(str::to_string);
        match phi {
            Automorphism::Rs(rs) => AutomorphismRecord {
                kind: AutomorphismKind::Rs,
                r: Some(rs.r()),
                s: Some(rs.s()),
                images: None,
                label,
            },
            Automorphism::Table(t) => AutomorphismRecord {
                kind: AutomorphismKind::Table,
                r: None,
                s: None,
                images: Some(GeneratorImages {
                    x: t.x_image().to_string(),
                    y: t.y_image().to_string(),
                }),
                label,
            },
        }
    }

    /// Rebuild the automorphism this record describes.
    pub fn to_automorphism(&self, params: GroupParams) -> Result<Automorphism, CliError> {
        match (&self.kind, self.r, self.s, &self.images) {
            (AutomorphismKind::Rs, Some(r), Some(s), _) => Ok(Automorphism::Rs(
                dicyclic::automorphism::make_rs(r as i64, s as i64, params)?,
            )),
            (AutomorphismKind::Table, _, _, Some(images)) => {
                let x = params.parse_element(&images.x)?;
                let y = params.parse_element(&images.y)?;
                Ok(Automorphism::from_table(
                    dicyclic::TableAutomorphism::from_generators(x, y)?,
                ))
            }
            _ => Err(CliError::Schema("incomplete automorphism record".into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismEntry {
    pub index: usize,
    pub automorphism: AutomorphismRecord,
    pub order: u64,
    pub inner: bool,
    pub involution: bool,
    pub class_representative: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceEntry {
    pub index: usize,
    pub automorphism: AutomorphismRecord,
    pub order: u64,
    pub inner: bool,
    pub involution: bool,
    #[serde(rename = "H")]
    pub h: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<String>,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    #[serde(rename = "R_minus_Q")]
    pub r_minus_q: Vec<String>,
    pub h_orbits: Vec<Vec<String>>,
    pub g_orbits: Vec<Vec<String>>,
    /// Computation path per field: `closed-form`, `oracle` or `both`.
    pub provenance: BTreeMap<String, String>,
    /// `R` was computed for an automorphism that is not an involution.
    pub r_for_non_involution: bool,
}

pub fn names(set: &ElementSet) -> Vec<String> {
    set.iter().map(ToString::to_string).collect()
}

pub fn partition_names(partition: &Partition) -> Vec<Vec<String>> {
    partition.iter().map(names).collect()
}

pub fn parse_set(params: GroupParams, items: &[String]) -> Result<ElementSet, CliError> {
    items
        .iter()
        .map(|s| params.parse_element(s).map_err(CliError::from))
        .collect()
}

impl SpaceEntry {
    pub fn from_report(index: usize, report: &SpaceReport, label: Option<&str>) -> Self {
        let path = report.provenance.as_str().to_string();
        let provenance = ["H", "Q", "R", "R_minus_Q", "h_orbits", "g_orbits"]
            .into_iter()
            .map(|k| (k.to_string(), path.clone()))
            .collect();
        SpaceEntry {
            index,
            automorphism: AutomorphismRecord::new(&report.phi, label),
            order: report.order,
            inner: report.inner,
            involution: report.involution,
            h: names(&report.h),
            q: names(&report.q),
            r: names(&report.r),
            r_minus_q: names(&report.r_minus_q),
            h_orbits: partition_names(&report.h_orbits),
            g_orbits: partition_names(&report.g_orbits),
            provenance,
            r_for_non_involution: !report.involution,
        }
    }

    /// Decoded `(H, Q, R)`.
    pub fn sets(
        &self,
        params: GroupParams,
    ) -> Result<(ElementSet, ElementSet, ElementSet), CliError> {
        Ok((
            parse_set(params, &self.h)?,
            parse_set(params, &self.q)?,
            parse_set(params, &self.r)?,
        ))
    }

    /// Checks the recorded sets against the automorphism's definitions.
    pub fn matches_definitions(&self, params: GroupParams) -> Result<bool, CliError> {
        let phi = self.automorphism.to_automorphism(params)?;
        let (h, q, r) = self.sets(params)?;
        let elems: Vec<_> = params.elements().collect();
        let h_ok = elems
            .iter()
            .filter(|g| phi.image(g) == **g)
            .copied()
            .collect::<ElementSet>()
            == h;
        let q_ok = elems
            .iter()
            .map(|g| *g * phi.image(g).inverse())
            .collect::<ElementSet>()
            == q;
        let r_ok = elems
            .iter()
            .filter(|g| phi.image(g) == g.inverse())
            .copied()
            .collect::<ElementSet>()
            == r;
        Ok(h_ok && q_ok && r_ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultableDocument {
    pub schema_version: String,
    pub n: u32,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl MultableDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: MultableDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Schema(format!(
                "unsupported schema_version {:?}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}
