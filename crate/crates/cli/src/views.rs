//! Text and JSON layouts for the non-suite subcommands.

use std::fmt::Write;

use hgf_core::catalog::list_catalog;
use hgf_core::field::{RatFun, Rational};
use hgf_core::group::{certify, Family, GroupError};
use hgf_core::limit::{omega_chen_chu_routes, omega_chu_routes, LimitError, Routes};
use hgf_core::series::{SeriesError, SeriesSpec};
use serde::Serialize;

use crate::suite::SCHEMA;

#[derive(Debug, Clone, Serialize)]
pub struct PermutationCheck {
    pub permutation: &'static str,
    pub invariance: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupView {
    pub schema: u32,
    pub family: String,
    pub label: String,
    pub order: usize,
    pub ids: Vec<&'static str>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub orders: Vec<u32>,
    pub latin_square: bool,
    pub reparameterization: Vec<PermutationCheck>,
}

impl GroupView {
    pub fn new(family: Family) -> Result<GroupView, GroupError> {
        let c = certify(family)?;
        let reparameterization = family
            .permutations()
            .iter()
            .zip(&c.ids)
            .zip(&c.reparameterization)
            .map(|(((p, _), id), ok)| PermutationCheck { permutation: p, invariance: id, holds: *ok })
            .collect();
        Ok(GroupView {
            schema: SCHEMA,
            family: family.name().to_string(),
            label: c.label.to_string(),
            order: c.elements.len(),
            ids: c.ids,
            elements: c.elements,
            table: c.table,
            orders: c.orders,
            latin_square: c.latin_square,
            reparameterization,
        })
    }

    /// Everything a certificate asserts holds.
    pub fn certified(&self) -> bool {
        self.latin_square && self.reparameterization.iter().all(|p| p.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family {}: {} of order {}", self.family, self.label, self.order);
        let _ = writeln!(out, "elements:");
        let w = self.ids.iter().map(|s| s.len()).max().unwrap_or(0);
        for (i, (id, e)) in self.ids.iter().zip(&self.elements).enumerate() {
            let _ = writeln!(out, "  {i}  {id:<w$}  {e}");
        }
        let _ = writeln!(out, "table (row i, column j: element i after element j):");
        let header: Vec<String> = (0..self.order).map(|j| j.to_string()).collect();
        let _ = writeln!(out, "     {}", header.join(" "));
        for (i, row) in self.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "  {i}  {}", cells.join(" "));
        }
        let orders: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        let _ = writeln!(out, "orders: {}", orders.join(" "));
        let _ = writeln!(out, "latin square: {}", if self.latin_square { "yes" } else { "no" });
        let _ = writeln!(out, "reparameterization:");
        for p in &self.reparameterization {
            let _ =
                writeln!(out, "  {} ~ {}: {}", p.permutation, p.invariance, if p.holds { "holds" } else { "FAILS" });
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("view serializes") + "\n"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaRow {
    pub n: u64,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaView {
    pub schema: u32,
    /// `"chu"` or `"chen-chu"`.
    pub kind: &'static str,
    pub a: Option<String>,
    pub gammas: Vec<i64>,
    pub rows: Vec<OmegaRow>,
    /// Cells whose two routes disagree.
    pub mismatches: usize,
}

fn cell(r: Result<Routes, LimitError>) -> (String, bool) {
    match r {
        Ok(r) if r.agree() => (r.lhs.to_string(), false),
        Ok(r) => (format!("{}|{}", r.lhs, r.rhs), true),
        Err(LimitError::GuardFailure(_)) => ("-".into(), false),
        Err(e) => (format!("error: {e}"), true),
    }
}

impl OmegaView {
    /// Rows `0..=nmax`, columns `gammas`; with `a` the Chen-Chu limit,
    /// otherwise Chu's.
    pub fn new(nmax: u64, gammas: &[i64], a: Option<&Rational>) -> OmegaView {
        let mut mismatches = 0;
        let rows = (0..=nmax)
            .map(|n| {
                let cells = gammas
                    .iter()
                    .map(|&g| {
                        let routes = match a {
                            Some(a) => omega_chen_chu_routes(n, g, a, Rational::one()),
                            None => omega_chu_routes(n, g, Rational::one()),
                        };
                        let (s, bad) = cell(routes);
                        mismatches += usize::from(bad);
                        s
                    })
                    .collect();
                OmegaRow { n, cells }
            })
            .collect();
        OmegaView {
            schema: SCHEMA,
            kind: if a.is_some() { "chen-chu" } else { "chu" },
            a: a.map(|a| a.to_string()),
            gammas: gammas.to_vec(),
            rows,
            mismatches,
        }
    }

    pub fn to_text(&self) -> String {
        let mut head = vec!["n".to_string()];
        head.extend(self.gammas.iter().map(|g| format!("γ={g}")));
        let mut grid = vec![head];
        for r in &self.rows {
            let mut line = vec![r.n.to_string()];
            line.extend(r.cells.iter().cloned());
            grid.push(line);
        }
        let cols = grid[0].len();
        let widths: Vec<usize> =
            (0..cols).map(|j| grid.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
        let mut out = match &self.a {
            Some(a) => format!("limit of 3F2(-n, a/2, (a+1)/2; a, c; 4) as c -> γ+a+ceil(n/2), a = {a}\n"),
            None => "limit of 2F1(-n, 1/2; c; 4) as c -> 1+γ+ceil(n/2)\n".to_string(),
        };
        for row in &grid {
            let cells: Vec<String> =
                row.iter().zip(&widths).map(|(c, &w)| format!("{}{c}", " ".repeat(w - c.chars().count()))).collect();
            out += cells.join("  ").trim_end();
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("view serializes") + "\n"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub id: String,
    pub arity: usize,
    pub formula: String,
    pub guards: String,
}

pub fn catalog_rows() -> Vec<CatalogRow> {
    list_catalog()
        .into_iter()
        .map(|l| CatalogRow { id: l.id, arity: l.arity, formula: l.formula, guards: l.guards })
        .collect()
}

pub fn catalog_text() -> String {
    let rows = catalog_rows();
    let w = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "{:<w$}  {}", r.id, r.formula);
        if !r.guards.is_empty() {
            let _ = writeln!(out, "{:<w$}    guards: {}", "", r.guards);
        }
    }
    out
}

pub fn catalog_json() -> String {
    #[derive(Serialize)]
    struct Listing {
        schema: u32,
        entries: Vec<CatalogRow>,
    }
    serde_json::to_string_pretty(&Listing { schema: SCHEMA, entries: catalog_rows() }).expect("listing serializes")
        + "\n"
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalView {
    pub schema: u32,
    pub series: String,
    /// `None` for the full terminating sum.
    pub upto: Option<u64>,
    pub value: String,
    /// Value at `t = 0` when the series depends on `t`.
    pub limit: Option<String>,
}

/// Evaluates a series given in `pFq(...; ...; z)` syntax.
pub fn eval_series(src: &str, upto: Option<u64>) -> Result<EvalView, EvalError> {
    let spec: SeriesSpec<RatFun> = src.parse().map_err(|e| EvalError::Parse(format!("{e}")))?;
    let value = match upto {
        Some(k) => spec.partial_sum(k)?,
        None => spec.eval_terminating()?,
    };
    let limit = match value.as_constant() {
        Some(_) => None,
        None => Some(match value.limit_at_zero() {
            Ok(v) => v.to_string(),
            Err(p) => format!("pole({})", p.order),
        }),
    };
    Ok(EvalView { schema: SCHEMA, series: spec.to_string(), upto, value: value.to_string(), limit })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
