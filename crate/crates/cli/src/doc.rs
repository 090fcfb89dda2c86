//! Serialized forms of polynomials, traces and family reports.
//!
//! A polynomial is stored as its text plus the coefficient vectors of its
//! coefficients (`coeffs[i]` holds the `F_p` digits of the coefficient of
//! `x^i`), so it can be read back without re-parsing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use irredforge_core::constructions::StepKind;
use irredforge_core::family::FamilyReport;
use irredforge_core::orbit::{IterationTrace, OrderCandidates};
use irredforge_core::{ConstructionResult, FieldElement, FieldSpec, Poly, PolyRing};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub p: u64,
    pub m: u32,
    pub modulus: String,
}

impl FieldDoc {
    pub fn new(field: &FieldSpec) -> Self {
        FieldDoc {
            p: field.p(),
            m: field.m(),
            modulus: field.modulus_text(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub text: String,
    pub coeffs: Vec<Vec<u32>>,
}

impl PolyDoc {
    pub fn new(field: &FieldSpec, f: &Poly<FieldElement>) -> Self {
        PolyDoc {
            text: field.format_poly(f),
            coeffs: f.coeffs().iter().map(|&c| field.coeffs(c)).collect(),
        }
    }

    pub fn to_poly(&self, field: &FieldSpec) -> CliResult<Poly<FieldElement>> {
        let ring = PolyRing::new(field.clone());
        let coeffs = self
            .coeffs
            .iter()
            .map(|digits| {
                if digits.iter().any(|&d| d as u64 >= field.p()) {
                    return Err(CliError::Precondition(format!(
                        "coefficient digit out of range for p = {}",
                        field.p()
                    )));
                }
                let wide: Vec<u64> = digits.iter().map(|&d| d as u64).collect();
                Ok(field.element(&wide)?)
            })
            .collect::<CliResult<Vec<_>>>()?;
        let f = ring.from_coeffs(coeffs);
        if f.coeffs().len() != self.coeffs.len() {
            return Err(CliError::Precondition("leading coefficient is zero".into()));
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub prime: u64,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructDoc {
    pub field: FieldDoc,
    pub input: PolyDoc,
    pub k: u64,
    pub output: PolyDoc,
    pub steps: Vec<StepDoc>,
}

pub fn step_kind_name(kind: StepKind) -> &'static str {
    match kind {
        StepKind::Shortcut => "shortcut",
        StepKind::TwistedProduct => "twisted-product",
        StepKind::Frobenius => "frobenius",
    }
}

impl ConstructDoc {
    pub fn new(
        field: &FieldSpec,
        input: &Poly<FieldElement>,
        result: &ConstructionResult<FieldElement>,
    ) -> Self {
        ConstructDoc {
            field: FieldDoc::new(field),
            input: PolyDoc::new(field, input),
            k: result.input_k,
            output: PolyDoc::new(field, &result.output),
            steps: result
                .steps
                .iter()
                .map(|s| StepDoc {
                    prime: s.prime,
                    kind: step_kind_name(s.kind).to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub order: u64,
    pub r: u64,
    pub d: u64,
    pub j: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub field: FieldDoc,
    pub prime: u64,
    pub tail_length: usize,
    pub orbit_length: usize,
    pub tail: Vec<PolyDoc>,
    pub orbit: Vec<PolyDoc>,
    pub k_adic_valuation: usize,
    pub order_candidates: Vec<CandidateDoc>,
}

impl TraceDoc {
    pub fn new(
        field: &FieldSpec,
        trace: &IterationTrace<FieldElement>,
        candidates: &OrderCandidates,
    ) -> Self {
        TraceDoc {
            field: FieldDoc::new(field),
            prime: trace.prime,
            tail_length: trace.tail_length,
            orbit_length: trace.orbit_length,
            tail: trace.tail().iter().map(|f| PolyDoc::new(field, f)).collect(),
            orbit: trace.orbit().iter().map(|f| PolyDoc::new(field, f)).collect(),
            k_adic_valuation: candidates.k_adic_valuation,
            order_candidates: candidates
                .candidates
                .iter()
                .map(|c| CandidateDoc {
                    order: c.order,
                    r: c.r,
                    d: c.d,
                    j: c.j,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub start: Vec<u32>,
    pub size: usize,
}

/// One row of the weight/normality table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub weight: usize,
    pub total: usize,
    /// `normal[k]` counts the `k`-normal members of this weight.
    pub normal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub field: FieldDoc,
    pub base: PolyDoc,
    pub order: u64,
    pub primes: Vec<u64>,
    pub caps: Vec<u32>,
    pub member_count: usize,
    pub orbits: Vec<OrbitDoc>,
    pub weights: BTreeMap<usize, usize>,
    /// Empty when normality was not computed.
    pub table: Vec<TableRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<PolyDoc>>,
}

impl ReportDoc {
    pub fn new(field: &FieldSpec, report: &FamilyReport<FieldElement>, with_members: bool) -> Self {
        ReportDoc {
            field: FieldDoc::new(field),
            base: PolyDoc::new(field, &report.base_poly),
            order: report.order,
            primes: report.primes.clone(),
            caps: report.caps.clone(),
            member_count: report.members.len(),
            orbits: report
                .orbits
                .iter()
                .map(|o| OrbitDoc {
                    start: o.start.clone(),
                    size: o.members.len(),
                })
                .collect(),
            weights: report.weight_hist.clone(),
            table: table_rows(&report.weight_hist, &report.normality_hist),
            members: with_members
                .then(|| report.members.iter().map(|f| PolyDoc::new(field, f)).collect()),
        }
    }
}

/// Rows of the joint table with columns `0..=max k`; empty if no normality
/// data is present.
pub fn table_rows(
    weights: &BTreeMap<usize, usize>,
    joint: &BTreeMap<(usize, usize), usize>,
) -> Vec<TableRow> {
    if joint.is_empty() {
        return Vec::new();
    }
    let width = joint.keys().map(|&(_, k)| k + 1).max().unwrap_or(0);
    weights
        .iter()
        .map(|(&w, &total)| TableRow {
            weight: w,
            total,
            normal: (0..width)
                .map(|k| joint.get(&(w, k)).copied().unwrap_or(0))
                .collect(),
        })
        .collect()
}

/// CSV with the header `Weight,Total,0-normal,1-normal,…`.
pub fn table_csv(rows: &[TableRow]) -> CliResult<String> {
    let width = rows.iter().map(|r| r.normal.len()).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["Weight".to_string(), "Total".to_string()];
    header.extend((0..width).map(|k| format!("{k}-normal")));
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![r.weight.to_string(), r.total.to_string()];
        rec.extend((0..width).map(|k| r.normal.get(k).copied().unwrap_or(0).to_string()));
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

/// Reads a table written by [`table_csv`].
pub fn parse_table_csv(text: &str) -> CliResult<Vec<TableRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let nums = rec
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| CliError::Precondition(format!("bad table cell '{s}': {e}")))
            })
            .collect::<CliResult<Vec<_>>>()?;
        if nums.len() < 2 {
            return Err(CliError::Precondition("table row has fewer than 2 cells".into()));
        }
        rows.push(TableRow {
            weight: nums[0],
            total: nums[1],
            normal: nums[2..].to_vec(),
        });
    }
    Ok(rows)
}

/// Plain-text rendering of the table, aligned for terminals.
pub fn table_text(rows: &[TableRow]) -> String {
    let width = rows.iter().map(|r| r.normal.len()).max().unwrap_or(0);
    let mut out = format!("{:>6} {:>8}", "Weight", "Total");
    for k in 0..width {
        out.push_str(&format!(" {:>9}", format!("{k}-normal")));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{:>6} {:>8}", r.weight, r.total));
        for k in 0..width {
            out.push_str(&format!(" {:>9}", r.normal.get(k).copied().unwrap_or(0)));
        }
        out.push('\n');
    }
    out
}
