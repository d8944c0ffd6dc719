use std::fmt::Write as _;

use dicyclic::automorphism::{enumerate_rs_automorphisms, isomorphy_classes};
use dicyclic::group::{cayley_table, center, enumerate_group};
use dicyclic::space::{build_space_report, SpaceReport};
use dicyclic::{dc2, oracle, Automorphism, GroupMap, GroupParams};

use crate::document::{
    AutomorphismEntry, AutomorphismRecord, ElementEntry, MultableDocument, ReportDocument,
    SpaceEntry, SCHEMA_VERSION,
};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn params(n: i64) -> Result<GroupParams, CliError> {
    GroupParams::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

/// One automorphism in listing order.
#[derive(Debug, Clone)]
pub struct InventoryEntry {
    pub index: usize,
    pub label: Option<String>,
    pub phi: Automorphism,
}

impl InventoryEntry {
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.phi.to_string())
    }
}

/// Every automorphism of `Dc_n`: the 24 named maps for `n = 2`, otherwise
/// `phi_(r,s)` in lexicographic order.
pub fn inventory(params: GroupParams) -> Vec<InventoryEntry> {
    if params.rs_family_complete() {
        enumerate_rs_automorphisms(params)
            .into_iter()
            .enumerate()
            .map(|(index, rs)| InventoryEntry {
                index,
                label: None,
                phi: Automorphism::Rs(rs),
            })
            .collect()
    } else {
        dc2::labelled_automorphisms()
            .into_iter()
            .enumerate()
            .map(|(index, (label, t))| InventoryEntry {
                index,
                label: Some(label),
                phi: Automorphism::from_table(t),
            })
            .collect()
    }
}

/// Name of the class representative for each inventory entry.
fn class_representatives(
    params: GroupParams,
    inv: &[InventoryEntry],
) -> Result<Vec<String>, CliError> {
    let classes: Vec<Vec<usize>> = if params.rs_family_complete() {
        let position = |phi: &dicyclic::RsAutomorphism| {
            inv.iter()
                .position(|e| e.phi.as_rs().as_ref() == Some(phi))
                .expect("inventory holds every (r,s) map")
        };
        isomorphy_classes(params)?
            .iter()
            .map(|class| class.iter().map(position).collect())
            .collect()
    } else {
        let tables: Vec<_> = inv.iter().map(|e| e.phi.to_table()).collect();
        oracle::aut_conjugacy_classes(&tables)?
    };
    let mut reps = vec![String::new(); inv.len()];
    for class in classes {
        let name = inv[class[0]].name();
        for i in class {
            reps[i] = name.clone();
        }
    }
    Ok(reps)
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner()?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn cmd_elements(n: i64, format: Format) -> Result<String, CliError> {
    let p = params(n)?;
    let z = center(p);
    let entries: Vec<ElementEntry> = enumerate_group(p)
        .iter()
        .map(|g| ElementEntry {
            element: g.to_string(),
            order: g.order(),
            central: z.contains(g),
        })
        .collect();
    match format {
        Format::Json => ReportDocument::new(p, entries).to_json(),
        Format::Csv => {
            let mut rows = vec![vec!["element".into(), "order".into(), "central".into()]];
            rows.extend(entries.iter().map(|e| {
                vec![
                    e.element.clone(),
                    e.order.to_string(),
                    e.central.to_string(),
                ]
            }));
            csv_string(rows)
        }
        Format::Text => {
            let mut rows = vec![vec!["element".into(), "order".into(), "central".into()]];
            rows.extend(
                entries
                    .iter()
                    .map(|e| vec![e.element.clone(), e.order.to_string(), yes_no(e.central)]),
            );
            Ok(format!(
                "Dc_{n}: {} elements\n{}",
                p.order(),
                pad_table(&rows)
            ))
        }
    }
}

/// Cayley table. The text layout separates `<x>` from the coset `y<x>` with `:`.
pub fn cmd_multable(n: i64, format: Format) -> Result<String, CliError> {
    let p = params(n)?;
    let table = cayley_table(p);
    let labels = table.labels().to_vec();
    let cells: Vec<Vec<String>> = (0..table.order())
        .map(|i| table.row(i).iter().map(|&k| labels[k].clone()).collect())
        .collect();
    match format {
        Format::Json => {
            let doc = MultableDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                n: p.n(),
                elements: labels,
                table: cells,
            };
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => {
            let mut rows = vec![std::iter::once("*".to_string())
                .chain(labels.iter().cloned())
                .collect()];
            rows.extend(labels.iter().zip(&cells).map(|(l, row)| {
                std::iter::once(l.clone())
                    .chain(row.iter().cloned())
                    .collect()
            }));
            csv_string(rows)
        }
        Format::Text => {
            let w = labels.iter().map(String::len).max().unwrap_or(1);
            let half = p.modulus() as usize;
            let line = |head: &str, row: &[String]| {
                let mut s = format!("{head:<w$} |");
                for (j, cell) in row.iter().enumerate() {
                    if j == half {
                        s.push_str(" :");
                    }
                    let _ = write!(s, " {cell:<w$}");
                }
                s.trim_end().to_string()
            };
            let mut out = line("", &labels);
            out.push('\n');
            let block = "-".repeat(half * (w + 1) + 1);
            let _ = writeln!(out, "{}+{block}+{block}", "-".repeat(w + 1));
            for (l, row) in labels.iter().zip(&cells) {
                out.push_str(&line(l, row));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Filters for `autos`; all given filters must hold.
#[derive(Debug, Clone, Copy, Default)]
pub struct AutoFilters {
    pub order: Option<u64>,
    pub inner: bool,
    pub outer: bool,
    pub involutions: bool,
}

impl AutoFilters {
    fn keep(&self, entry: &AutomorphismEntry) -> bool {
        self.order.is_none_or(|k| entry.order == k)
            && (!self.inner || entry.inner)
            && (!self.outer || !entry.inner)
            && (!self.involutions || entry.involution)
    }
}

pub fn automorphism_entries(p: GroupParams) -> Result<Vec<AutomorphismEntry>, CliError> {
    let inv = inventory(p);
    let reps = class_representatives(p, &inv)?;
    Ok(inv
        .iter()
        .zip(reps)
        .map(|(e, class_representative)| AutomorphismEntry {
            index: e.index,
            automorphism: AutomorphismRecord::new(&e.phi, e.label.as_deref()),
            order: e.phi.exact_order(),
            inner: e.phi.is_inner(),
            involution: e.phi.is_involution(),
            class_representative,
        })
        .collect())
}

pub fn cmd_autos(n: i64, filters: AutoFilters, format: Format) -> Result<String, CliError> {
    let p = params(n)?;
    let inv = inventory(p);
    let entries: Vec<_> = automorphism_entries(p)?
        .into_iter()
        .filter(|e| filters.keep(e))
        .collect();
    let header = [
        "index",
        "automorphism",
        "x ->",
        "y ->",
        "order",
        "inner",
        "involution",
        "class",
    ];
    let row = |e: &AutomorphismEntry| -> Vec<String> {
        let phi = &inv[e.index].phi;
        vec![
            e.index.to_string(),
            inv[e.index].name(),
            phi.x_image().to_string(),
            phi.y_image().to_string(),
            e.order.to_string(),
            yes_no(e.inner),
            yes_no(e.involution),
            e.class_representative.clone(),
        ]
    };
    match format {
        Format::Json => ReportDocument::new(p, entries).to_json(),
        Format::Csv => {
            let mut rows = vec![header.iter().map(|h| h.to_string()).collect()];
            rows.extend(entries.iter().map(row));
            csv_string(rows)
        }
        Format::Text => {
            let mut out = format!("Dc_{n}: {} automorphisms", inv.len());
            if !p.rs_family_complete() {
                out.push_str(" (only 8 have the form x -> x^r, y -> yx^s)");
            }
            let _ = writeln!(out, ", {} listed", entries.len());
            let mut rows = vec![header.iter().map(|h| h.to_string()).collect()];
            rows.extend(entries.iter().map(row));
            out.push_str(&pad_table(&rows));
            Ok(out)
        }
    }
}

/// Which automorphisms `spaces` reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    All,
    Rs(i64, i64),
    Index(usize),
}

pub fn select(p: GroupParams, selector: Selector) -> Result<Vec<InventoryEntry>, CliError> {
    let inv = inventory(p);
    match selector {
        Selector::All => Ok(inv),
        Selector::Index(i) => {
            inv.get(i).cloned().map(|e| vec![e]).ok_or_else(|| {
                CliError::Usage(format!("index {i} out of range (0..{})", inv.len()))
            })
        }
        Selector::Rs(r, s) => {
            let rs = dicyclic::automorphism::make_rs(r, s, p)
                .map_err(|e| CliError::Usage(format!("({r},{s}) is not an automorphism: {e}")))?;
            let images = rs.images();
            inv.into_iter()
                .find(|e| e.phi.images() == images)
                .map(|e| vec![e])
                .ok_or_else(|| CliError::Usage(format!("({r},{s}) is not an automorphism")))
        }
    }
}

pub fn space_reports(entries: &[InventoryEntry]) -> Result<Vec<SpaceReport>, CliError> {
    entries
        .iter()
        .map(|e| build_space_report(&e.phi).map_err(CliError::from))
        .collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

pub fn cmd_spaces(n: i64, selector: Selector, format: Format) -> Result<String, CliError> {
    let p = params(n)?;
    let selected = select(p, selector)?;
    let reports = space_reports(&selected)?;
    let entries: Vec<SpaceEntry> = selected
        .iter()
        .zip(&reports)
        .map(|(e, r)| SpaceEntry::from_report(e.index, r, e.label.as_deref()))
        .collect();
    match format {
        Format::Json => ReportDocument::new(p, entries).to_json(),
        Format::Csv => {
            let mut rows = vec![vec!["automorphism".into(), "set".into(), "element".into()]];
            for (sel, e) in selected.iter().zip(&entries) {
                let name = sel.name();
                let mut push = |kind: String, items: &[String]| {
                    for item in items {
                        rows.push(vec![name.clone(), kind.clone(), item.clone()]);
                    }
                };
                push("H".into(), &e.h);
                push("Q".into(), &e.q);
                push("R".into(), &e.r);
                push("R-Q".into(), &e.r_minus_q);
                for (i, orbit) in e.h_orbits.iter().enumerate() {
                    push(format!("H\\Q[{i}]"), orbit);
                }
                for (i, orbit) in e.g_orbits.iter().enumerate() {
                    push(format!("G\\Q[{i}]"), orbit);
                }
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut out = String::new();
            for (sel, (e, report)) in selected.iter().zip(entries.iter().zip(&reports)) {
                let _ = writeln!(
                    out,
                    "[{}] {}  order {}  inner {}  involution {}  provenance {}",
                    e.index,
                    sel.name(),
                    e.order,
                    yes_no(e.inner),
                    yes_no(e.involution),
                    report.provenance.as_str()
                );
                let _ = writeln!(out, "  H   = {}", braces(&e.h));
                let _ = writeln!(out, "  Q   = {}", braces(&e.q));
                let note = if e.r_for_non_involution {
                    "  (not an involution)"
                } else {
                    ""
                };
                let _ = writeln!(out, "  R   = {}{note}", braces(&e.r));
                let _ = writeln!(out, "  R-Q = {}", braces(&e.r_minus_q));
                let orbits = |p: &[Vec<String>]| p.iter().map(|o| braces(o)).collect::<Vec<_>>();
                let _ = writeln!(out, "  H\\Q = {}", braces(&orbits(&e.h_orbits)));
                let _ = writeln!(out, "  G\\Q = {}", braces(&orbits(&e.g_orbits)));
            }
            Ok(out)
        }
    }
}
