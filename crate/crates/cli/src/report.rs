//! Serializable report shapes. Field order is the emitted key order; every
//! big integer is a decimal string.

use std::io::{self, Write};

use num_bigint::BigInt;
use rmary_core::{CongruenceCase, HFitResult, SCoeffTable};
use serde::Serialize;

use crate::config::Format;

fn dec(v: &BigInt) -> String {
    v.to_string()
}

#[derive(Serialize)]
pub struct CaseRow {
    pub m: u32,
    pub j: u32,
    pub n: u64,
    #[serde(rename = "N")]
    pub target: u64,
    pub count: String,
    pub modulus: String,
    pub ok: bool,
    pub padic: u32,
}

impl From<&CongruenceCase> for CaseRow {
    fn from(c: &CongruenceCase) -> Self {
        Self {
            m: c.m,
            j: c.j,
            n: c.n,
            target: c.target,
            count: dec(&c.count),
            modulus: dec(&c.modulus),
            ok: c.ok,
            padic: c.padic,
        }
    }
}

#[derive(Serialize)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub cases: Vec<CaseRow>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(mut cases: Vec<CongruenceCase>) -> Self {
        cases.sort_by_key(|c| (c.m, c.j, c.n));
        let failed = cases.iter().filter(|c| !c.ok).count();
        Self {
            summary: Summary {
                total: cases.len(),
                failed,
            },
            cases: cases.iter().map(CaseRow::from).collect(),
        }
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => write_json(self, out),
            Format::Csv => {
                writeln!(out, "m,j,n,N,count,modulus,ok,padic")?;
                for c in &self.cases {
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{},{}",
                        c.m, c.j, c.n, c.target, c.count, c.modulus, c.ok, c.padic
                    )?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
pub struct STableReport {
    pub m: u32,
    pub max_j: u32,
    pub rows: Vec<Vec<String>>,
}

impl STableReport {
    pub fn new(table: &SCoeffTable) -> Self {
        Self {
            m: table.m(),
            max_j: table.max_j(),
            rows: table
                .rows()
                .iter()
                .map(|r| r.iter().map(dec).collect())
                .collect(),
        }
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => write_json(self, out),
            Format::Csv => {
                writeln!(out, "j,i,s")?;
                for (j, row) in self.rows.iter().enumerate() {
                    for (i, v) in row.iter().enumerate() {
                        writeln!(out, "{j},{i},{v}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
pub struct FitReport {
    pub m: u32,
    pub j: u32,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "E")]
    pub e: Vec<String>,
    pub holdout_max: u64,
    pub solve_rows: Vec<usize>,
    pub holdout_verified: bool,
}

impl From<&HFitResult> for FitReport {
    fn from(f: &HFitResult) -> Self {
        Self {
            m: f.m,
            j: f.j,
            d: f.d.iter().map(dec).collect(),
            e: f.e.iter().map(dec).collect(),
            holdout_max: f.holdout_max,
            solve_rows: f.solve_rows.clone(),
            holdout_verified: f.holdout_verified,
        }
    }
}

#[derive(Serialize)]
pub struct CrossCheckReport {
    pub m: u32,
    pub j: u32,
    pub ok: bool,
    pub fit: FitReport,
    pub next: FitReport,
}

#[derive(Serialize)]
pub struct TermRow {
    pub i: u32,
    pub monomial: String,
    pub valuation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisible: Option<bool>,
}

#[derive(Serialize)]
pub struct MinimalReport {
    pub j: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(rename = "P")]
    pub p: Vec<TermRow>,
    #[serde(rename = "Q")]
    pub q: Vec<TermRow>,
    #[serde(rename = "R")]
    pub r: Vec<TermRow>,
    #[serde(rename = "T")]
    pub t: Vec<TermRow>,
    pub closed_form: bool,
    pub gaps: bool,
    pub overall_minimum: Option<String>,
}

pub fn write_json<T: Serialize>(value: &T, out: &mut impl Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}
