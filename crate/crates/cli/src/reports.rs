//! Report documents emitted by the subcommands.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use skew_cyclic::codec::{ErrorPattern, ErrorTerm};
use skew_cyclic::serial::{CtxDoc, DecodeReport, FormDoc, PolyDoc};
use skew_cyclic::skew_code::CodeStats;
use skew_cyclic::{ChainRingElement, Codeword};

pub fn row_strings(row: &[ChainRingElement]) -> Vec<String> {
    row.iter().map(ToString::to_string).collect()
}

pub fn vector(word: &Codeword, descending: bool) -> String {
    if descending {
        word.display_descending()
    } else {
        word.to_string()
    }
}

fn matrix_lines(out: &mut String, title: &str, rows: &[Vec<String>]) {
    let _ = writeln!(out, "{title}:");
    for row in rows {
        let _ = writeln!(out, "  ({})", row.join(", "));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub f1: String,
    pub f2: String,
    /// Codes generated by `u^(k-level)·f1` and `u^(k-level)·f2`.
    pub codes: Vec<CodeStats>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub ctx: CtxDoc,
    pub level: usize,
    pub target: String,
    pub d1: usize,
    pub pairs: Vec<PairRow>,
    pub distinct_left: usize,
    pub distinct_right: usize,
}

impl FactorReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} = f1·f2 with deg f1 = {} over R_{} (p = {}, s = {}): {} pairs, {} distinct f1, {} distinct f2",
            self.target,
            self.d1,
            self.level,
            self.ctx.p,
            self.ctx.s,
            self.pairs.len(),
            self.distinct_left,
            self.distinct_right
        );
        for row in &self.pairs {
            let codes: Vec<String> = row
                .codes
                .iter()
                .map(|c| {
                    let d = c.min_distance.map_or("-".into(), |d| d.to_string());
                    format!("case {} rank {} |C| {} d {}", c.case, c.rank, c.cardinality, d)
                })
                .collect();
            let _ = writeln!(out, "{}  ·  {}    {}", row.f1, row.f2, codes.join(" | "));
        }
        out
    }
}

/// Rows built by `x^j·g` next to rows built by shifting without `θ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixComparison {
    pub twisted: Vec<Vec<String>>,
    pub untwisted: Vec<Vec<String>>,
    /// Zero-based indices of rows that differ.
    pub differing_rows: Vec<usize>,
}

impl MatrixComparison {
    pub fn new(twisted: &[Vec<ChainRingElement>], untwisted: &[Vec<ChainRingElement>]) -> Self {
        let twisted: Vec<Vec<String>> = twisted.iter().map(|r| row_strings(r)).collect();
        let untwisted: Vec<Vec<String>> = untwisted.iter().map(|r| row_strings(r)).collect();
        let differing_rows = (0..twisted.len().max(untwisted.len()))
            .filter(|&i| twisted.get(i) != untwisted.get(i))
            .collect();
        Self {
            twisted,
            untwisted,
            differing_rows,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub ctx: CtxDoc,
    pub n: usize,
    pub form: FormDoc,
    pub rank: usize,
    pub cardinality: String,
    /// Minimal generating set, ascending coefficient vectors.
    pub gamma: Vec<Vec<String>>,
    pub generator_matrix: MatrixComparison,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity_check: Option<MatrixComparison>,
    pub min_distance: Option<usize>,
    pub notes: Vec<String>,
}

impl AnalyzeReport {
    pub fn render_text(&self, descending: bool) -> String {
        let mut out = String::new();
        let f = &self.form;
        let _ = write!(out, "case {}", f.case);
        for (name, value) in [("i", f.i), ("r", f.r), ("t", f.t)] {
            if let Some(v) = value {
                let _ = write!(out, ", {name} = {v}");
            }
        }
        let _ = writeln!(
            out,
            " (n = {}, p = {}, k = {}, s = {})",
            self.n, self.ctx.p, self.ctx.k, self.ctx.s
        );
        for (name, value) in [("h", &f.h), ("g", &f.g), ("a1", &f.a1)] {
            if let Some(PolyDoc::Text(t)) = value {
                let _ = writeln!(out, "{name} = {t}");
            }
        }
        for level in f.levels.iter().flatten() {
            if let PolyDoc::Text(t) = &level.generator {
                let _ = writeln!(out, "level u^{}: {t} (degree {})", level.layer, level.degree);
            }
        }
        let _ = writeln!(out, "rank = {}, |C| = {}", self.rank, self.cardinality);
        let flip = |rows: &[Vec<String>]| -> Vec<Vec<String>> {
            rows.iter()
                .map(|r| {
                    if descending {
                        r.iter().rev().cloned().collect()
                    } else {
                        r.clone()
                    }
                })
                .collect()
        };
        matrix_lines(&mut out, "Gamma", &flip(&self.gamma));
        matrix_lines(&mut out, "G", &self.generator_matrix.twisted);
        if let Some(h) = &self.parity_check {
            matrix_lines(&mut out, "H", &h.twisted);
        }
        let _ = writeln!(
            out,
            "d = {}",
            self.min_distance
                .map_or("not enumerated".to_string(), |d| d.to_string())
        );
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeReport {
    pub ctx: CtxDoc,
    pub n: usize,
    pub codeword: PolyDoc,
    /// Coefficients `c_0, …, c_(n-1)`.
    pub vector: Vec<String>,
}

impl EncodeReport {
    pub fn render_text(&self, word: &Codeword, descending: bool) -> String {
        let PolyDoc::Text(text) = &self.codeword else {
            unreachable!("encode reports hold text polynomials")
        };
        format!("c(x) = {text}\nc = {}\n", vector(word, descending))
    }
}

/// A received word given either as an encode report or as a bare polynomial.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ReceivedDoc {
    Report { codeword: PolyDoc },
    Poly(PolyDoc),
}

impl ReceivedDoc {
    pub fn poly(&self) -> &PolyDoc {
        match self {
            Self::Report { codeword } => codeword,
            Self::Poly(p) => p,
        }
    }
}

pub fn render_decode(report: &DecodeReport, corrected: &Codeword, descending: bool) -> String {
    let mut out = String::new();
    for (l, s) in report.syndromes.iter().enumerate() {
        if let PolyDoc::Text(t) = s {
            let _ = writeln!(out, "e{l} = {t}");
        }
    }
    let terms = |ts: &[ErrorTerm]| -> String {
        if ts.is_empty() {
            return "none".into();
        }
        let places: Vec<String> = ts
            .iter()
            .map(|t| format!("position {} layer {}", t.position, t.layer))
            .collect();
        let pattern = ErrorPattern::new(ts.to_vec()).map_or_else(|e| e.to_string(), |p| p.to_string());
        format!("{pattern} ({})", places.join("; "))
    };
    let _ = writeln!(out, "status: {}", report.status);
    let _ = writeln!(out, "error: {}", terms(&report.error_pattern));
    for alt in &report.alternatives {
        let _ = writeln!(out, "same syndrome: {}", terms(alt));
    }
    if let PolyDoc::Text(t) = &report.corrected {
        let _ = writeln!(out, "corrected: {t}");
    }
    let _ = writeln!(out, "corrected vector: {}", vector(corrected, descending));
    for (j, part) in report.message.polys.iter().enumerate() {
        if let PolyDoc::Text(t) = part {
            let _ = writeln!(out, "message part {j}: {t}");
        }
    }
    out
}
