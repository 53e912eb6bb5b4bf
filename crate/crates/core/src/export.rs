//! Structure-constant table serializations: CSV, versioned JSON, and plain text.
//!
//! All three are byte-deterministic for a given table.

use std::io::Write;

use serde::Serialize;

use crate::coefficient::Coefficient;
use crate::descent::StructureTable;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// One row per non-zero structure constant: `kappa,nu,eta,coefficient`.
/// Compositions keep their comma-separated text form, so they are quoted.
pub fn write_csv<C: Coefficient, W: Write>(table: &StructureTable<C>, out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let err = |e: csv::Error| Error::Export(e.to_string());
    writer
        .write_record(["kappa", "nu", "eta", "coefficient"])
        .map_err(err)?;
    for row in &table.rows {
        let (kappa, nu) = (row.kappa.to_string(), row.nu.to_string());
        for (eta, c) in row.product.terms() {
            writer
                .write_record([kappa.as_str(), nu.as_str(), &eta.to_string(), &c.to_string()])
                .map_err(err)?;
        }
    }
    writer.flush().map_err(|e| Error::Export(e.to_string()))
}

pub fn to_csv<C: Coefficient>(table: &StructureTable<C>) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(table, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Export(e.to_string()))
}

#[derive(Serialize)]
struct JsonTable<'a, C> {
    schema_version: u32,
    n: usize,
    products: Vec<JsonProduct<'a, C>>,
}

#[derive(Serialize)]
struct JsonProduct<'a, C> {
    kappa: String,
    nu: String,
    terms: Vec<JsonTerm<'a, C>>,
}

#[derive(Serialize)]
struct JsonTerm<'a, C> {
    eta: String,
    coefficient: &'a C,
}

/// Nested JSON document: `{schema_version, n, products: [{kappa, nu, terms: [{eta, coefficient}]}]}`.
pub fn to_json<C: Coefficient + Serialize>(table: &StructureTable<C>) -> Result<String> {
    let doc = JsonTable {
        schema_version: SCHEMA_VERSION,
        n: table.n,
        products: table
            .rows
            .iter()
            .map(|row| JsonProduct {
                kappa: row.kappa.to_string(),
                nu: row.nu.to_string(),
                terms: row
                    .product
                    .terms()
                    .map(|(eta, coefficient)| JsonTerm {
                        eta: eta.to_string(),
                        coefficient,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Export(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// `B(2,1) * B(1,2) = B(1,1,1) + B(1,2)`, one product per line.
pub fn to_text<C: Coefficient>(table: &StructureTable<C>) -> String {
    table
        .rows
        .iter()
        .map(|row| format!("B({}) * B({}) = {}\n", row.kappa, row.nu, row.product))
        .collect()
}
