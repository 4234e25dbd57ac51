use std::fmt::Write as _;

use pvkit_core::galois::GroupDesc;
use pvkit_core::pv::PVPresentation;
use serde::Serialize;

use crate::request::{Command, Sigma};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct RequestEcho {
    pub command: Command,
    pub sigma: Sigma,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    pub m_max: u32,
    pub degree_bound: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationSummary {
    pub shape: String,
    pub constants: String,
    pub generators: Vec<String>,
    pub ell: u32,
    pub m_inv: u32,
    pub krull_dim: usize,
    pub constants_ext_degree: u32,
    pub search_bound: u32,
    pub partial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<String>>,
}

impl PresentationSummary {
    pub fn new(p: &PVPresentation, with_idempotents: bool) -> Self {
        let names = p.system.var_names();
        PresentationSummary {
            shape: p.system.shape_name().to_string(),
            constants: p.system.field.constants_description(),
            generators: p.generator_strings(),
            ell: p.ell,
            m_inv: p.m_inv,
            krull_dim: p.krull_dim,
            constants_ext_degree: p.constants_ext_degree,
            search_bound: p.search_bound,
            partial: p.partial,
            idempotents: if with_idempotents {
                p.idempotents.as_ref().map(|es| es.iter().map(|e| e.fmt_with(&names)).collect())
            } else {
                None
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub dim: usize,
    pub torus_rank: usize,
    pub finite_orders: Vec<i64>,
    pub unipotent_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinate_ideal: Option<Vec<String>>,
    pub hypotheses_hold: bool,
}

impl GroupSummary {
    pub fn new(g: &GroupDesc) -> Self {
        GroupSummary {
            name: g.name(),
            dim: g.dim(),
            torus_rank: g.torus_rank,
            finite_orders: g.finite_orders.clone(),
            unipotent_dim: g.unipotent_dim,
            coordinate_ideal: g.coordinate_ideal.as_ref().map(|c| c.to_strings()),
            hypotheses_hold: g.hypotheses_hold,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseChangeSummary {
    pub extension: String,
    pub presentation: PresentationSummary,
    pub group: GroupSummary,
    pub transport_holds: bool,
    pub invariants_unchanged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub request: RequestEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_change: Option<BaseChangeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connection_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examples: Option<Vec<ExampleResult>>,
    pub caveats: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn new(request: RequestEcho) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            request,
            presentation: None,
            group: None,
            base_change: None,
            connection_matrix: None,
            examples: None,
            caveats: Vec::new(),
            elapsed_ms: None,
        }
    }

    /// True unless some golden example failed.
    pub fn all_passed(&self) -> bool {
        self.examples.as_ref().is_none_or(|ex| ex.iter().all(|e| e.passed))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let r = &self.request;
        let _ = writeln!(out, "command: {}", command_name(&r.command));
        let sigma = match (&r.sigma, &r.q) {
            (Sigma::Shift, _) => "shift".to_string(),
            (Sigma::Qshift, Some(q)) => format!("qshift, q = {q}"),
            (Sigma::Qshift, None) => "qshift".to_string(),
        };
        if r.command != Command::VerifyExamples {
            let _ = writeln!(out, "sigma: {sigma}");
        }
        if let Some(s) = &r.system {
            let _ = writeln!(out, "system: {s}");
        }
        if let Some(e) = &r.extension {
            let _ = writeln!(out, "extension: {e}");
        }
        if let Some(p) = &self.presentation {
            write_presentation(&mut out, p, "");
        }
        if let Some(g) = &self.group {
            write_group(&mut out, g, "");
        }
        if let Some(b) = &self.base_change {
            let _ = writeln!(out, "base change: {}", b.extension);
            write_presentation(&mut out, &b.presentation, "  ");
            write_group(&mut out, &b.group, "  ");
            let _ = writeln!(out, "  transport holds: {}", b.transport_holds);
            let _ = writeln!(out, "  invariants unchanged: {}", b.invariants_unchanged);
        }
        if let Some(m) = &self.connection_matrix {
            let rows: Vec<String> = m.iter().map(|row| format!("[{}]", row.join(", "))).collect();
            let _ = writeln!(out, "connection matrix: [{}]", rows.join(", "));
        }
        if let Some(ex) = &self.examples {
            for e in ex {
                let _ = writeln!(out, "{} {}: {}", if e.passed { "PASS" } else { "FAIL" }, e.name, e.detail);
            }
            let verdict = if self.all_passed() { "all examples passed" } else { "some examples failed" };
            let _ = writeln!(out, "{verdict}");
        }
        let _ = writeln!(out, "bounds: m_max {}, degree_bound {}", r.m_max, r.degree_bound);
        for c in &self.caveats {
            let _ = writeln!(out, "caveat: {c}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}

fn command_name(c: &Command) -> String {
    serde_json::to_value(c).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
}

fn write_presentation(out: &mut String, p: &PresentationSummary, indent: &str) {
    let _ = writeln!(out, "{indent}shape: {}", p.shape);
    let _ = writeln!(out, "{indent}constants: {}", p.constants);
    let _ = writeln!(out, "{indent}ideal: ({})", p.generators.join(", "));
    let _ = writeln!(out, "{indent}ell: {}", p.ell);
    let _ = writeln!(out, "{indent}m: {}", p.m_inv);
    let _ = writeln!(out, "{indent}krull_dim: {}", p.krull_dim);
    let _ = writeln!(out, "{indent}constants_ext_degree: {}", p.constants_ext_degree);
    let _ = writeln!(out, "{indent}search_bound: {}", p.search_bound);
    let _ = writeln!(out, "{indent}partial: {}", p.partial);
    if let Some(es) = &p.idempotents {
        for e in es {
            let _ = writeln!(out, "{indent}idempotent: {e}");
        }
    }
}

fn write_group(out: &mut String, g: &GroupSummary, indent: &str) {
    let _ = writeln!(out, "{indent}group: {}", g.name);
    let _ = writeln!(out, "{indent}group dim: {}", g.dim);
    let _ = writeln!(out, "{indent}torus rank: {}", g.torus_rank);
    let orders: Vec<String> = g.finite_orders.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "{indent}finite orders: [{}]", orders.join(", "));
    let _ = writeln!(out, "{indent}unipotent dim: {}", g.unipotent_dim);
    if let Some(c) = &g.coordinate_ideal {
        let _ = writeln!(out, "{indent}coordinate ideal: ({})", c.join(", "));
    }
    let _ = writeln!(out, "{indent}hypotheses hold: {}", g.hypotheses_hold);
}
