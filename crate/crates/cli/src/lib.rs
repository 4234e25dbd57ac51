//! Command-line front end for pvkit: expression parsing, request dispatch and
//! text/JSON reports.

pub mod golden;
pub mod parse;
pub mod report;
pub mod request;

use std::time::Instant;

use pvkit_core::galois::{base_change, connection_matrix_check, group_transport_check, identify_group, SolutionMatrix};
use pvkit_core::pv::{build_pv, check_simple, PVPresentation};
use pvkit_core::PvError;
use thiserror::Error;

use parse::parse_with_vars;
use report::{BaseChangeSummary, GroupSummary, PresentationSummary, Report, RequestEcho};
use request::{base_field, build_system, parse_extension, parse_system, Command, Request};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{code}: {inner}", code = .0.code(), inner = .0)]
    Engine(#[from] PvError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Engine(_) => 2,
        }
    }
}

fn echo(req: &Request) -> Result<RequestEcho, CliError> {
    let system = match &req.system {
        Some(s) => Some(parse_system(s)?.canonical()),
        None => None,
    };
    Ok(RequestEcho {
        command: req.command.clone(),
        sigma: req.sigma,
        q: req.q.clone(),
        system,
        extension: req.ext.clone(),
        m_max: req.m_max,
        degree_bound: req.degree_bound,
    })
}

/// Builds the presentation a request describes, with the bounded
/// maximality check applied to torus shapes.
pub fn presentation_for(req: &Request) -> Result<PVPresentation, CliError> {
    let text = req.system.as_deref().ok_or_else(|| CliError::Usage("--system is required".into()))?;
    let desc = parse_system(text)?;
    let field = base_field(req, &desc)?;
    let mut p = build_pv(&build_system(field, &desc), req.m_max)?;
    if p.system.characters().is_some() {
        p.partial = !check_simple(&p, req.degree_bound)?;
    }
    Ok(p)
}

fn caveats(req: &Request, p: &PVPresentation, group_caveat: Option<&str>) -> Vec<String> {
    let mut out = Vec::new();
    if p.system.characters().is_some() {
        out.push(format!(
            "multiplicative relations were sought with exponents up to {}; maximality was checked up to {}",
            req.m_max, req.degree_bound
        ));
    }
    if p.partial {
        out.push("the relations found do not generate a maximal sigma-ideal; the presentation is partial".into());
    }
    if let Some(c) = group_caveat {
        out.push(c.to_string());
    }
    out
}

fn parse_matrix(text: &str, names: &[String], n: usize) -> Result<SolutionMatrix, CliError> {
    let bad = |msg: &str| CliError::Usage(format!("matrix '{text}': {msg}"));
    let entry = |s: &str| parse_with_vars(s.trim(), names).map_err(|e| bad(&e.to_string()));
    let t = text.trim();
    if !t.starts_with('[') {
        return if n == 1 { Ok(vec![vec![entry(t)?]]) } else { Err(bad("expected [[..], ..]")) };
    }
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(|| bad("unbalanced brackets"))?;
    let rows: Vec<&str> = split_top(inner);
    let m = rows
        .iter()
        .map(|row| {
            let r = row.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(|| bad("rows are [a, b, ..]"))?;
            split_top(r).into_iter().map(entry).collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(bad(&format!("expected a {n}x{n} matrix")));
    }
    Ok(m)
}

fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Runs one request. Engine errors and malformed input come back as
/// [`CliError`]; a failing golden example is reported inside the report.
pub fn run(req: &Request) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new(echo(req)?);
    match req.command {
        Command::VerifyExamples => {
            report.examples = Some(golden::run_suite(req.m_max, req.degree_bound));
        }
        Command::Pv => {
            let p = presentation_for(req)?;
            report.presentation = Some(PresentationSummary::new(&p, true));
            report.caveats = caveats(req, &p, None);
        }
        Command::Group | Command::Invariants => {
            let p = presentation_for(req)?;
            let g = identify_group(&p)?;
            report.presentation = Some(PresentationSummary::new(&p, false));
            report.group = Some(GroupSummary::new(&g));
            report.caveats = caveats(req, &p, g.caveat.as_deref());
        }
        Command::Basechange => {
            let ext = parse_extension(req.ext.as_deref().ok_or_else(|| CliError::Usage("--ext is required".into()))?)?;
            let p = presentation_for(req)?;
            let g = identify_group(&p)?;
            let q = base_change(&p, ext)?;
            let gq = identify_group(&q)?;
            let invariants_unchanged = (q.ell, q.m_inv, q.krull_dim) == (p.ell, p.m_inv, p.krull_dim)
                && (gq.torus_rank, &gq.finite_orders, gq.unipotent_dim) == (g.torus_rank, &g.finite_orders, g.unipotent_dim);
            report.presentation = Some(PresentationSummary::new(&p, false));
            report.group = Some(GroupSummary::new(&g));
            report.base_change = Some(BaseChangeSummary {
                extension: ext.to_string(),
                presentation: PresentationSummary::new(&q, false),
                group: GroupSummary::new(&gq),
                transport_holds: group_transport_check(&p, ext)?,
                invariants_unchanged,
            });
            report.caveats = caveats(req, &p, g.caveat.as_deref());
        }
        Command::CheckConnection => {
            let p = presentation_for(req)?;
            let names = p.system.var_names();
            let n = p.system.dim();
            let get = |m: &Option<String>, flag: &str| {
                m.as_deref().ok_or_else(|| CliError::Usage(format!("{flag} is required"))).and_then(|t| parse_matrix(t, &names, n))
            };
            let (u, v) = (get(&req.u, "--u")?, get(&req.v, "--v")?);
            let m = connection_matrix_check(&p, &u, &v)?;
            report.presentation = Some(PresentationSummary::new(&p, false));
            report.connection_matrix = Some(m.iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect());
            report.caveats = caveats(req, &p, None);
            report.caveats.push("U and V are taken to be fundamental matrices; this is not re-verified".into());
        }
    }
    if req.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use request::Sigma;

    fn req(command: Command, system: &str) -> Request {
        Request { system: Some(system.into()), ..Request::new(command) }
    }

    #[test]
    fn group_of_the_sign_equation() {
        let r = run(&req(Command::Group, "scalar(-1)")).unwrap();
        let g = r.group.unwrap();
        assert_eq!(g.name, "Z/2Z");
        assert_eq!(r.presentation.unwrap().generators, vec!["Y^2 - 1"]);
    }

    #[test]
    fn q_logarithm_invariants() {
        let r = Request { sigma: Sigma::Qshift, q: Some("2".into()), ..req(Command::Invariants, "unipotent(1)") };
        let r = run(&r).unwrap();
        let p = r.presentation.unwrap();
        assert_eq!((p.krull_dim, p.ell), (1, 1));
        assert_eq!(r.group.unwrap().name, "Ga");
    }

    #[test]
    fn matrices() {
        let names = vec!["Y".to_string()];
        assert_eq!(parse_matrix("-Y", &names, 1).unwrap().len(), 1);
        assert_eq!(parse_matrix("[[2*Y]]", &names, 1).unwrap()[0].len(), 1);
        let names4: Vec<String> = ["Y11", "Y12", "Y21", "Y22"].iter().map(|s| s.to_string()).collect();
        let m = parse_matrix("[[Y11, Y11 + Y12], [Y21, Y21 + Y22]]", &names4, 2).unwrap();
        assert_eq!(m[1][1].fmt_with(&names4), "Y21 + Y22");
        assert!(parse_matrix("[[Y11]]", &names4, 2).is_err());
    }

    #[test]
    fn connection_report() {
        let r = Request { u: Some("Y".into()), v: Some("-Y".into()), ..req(Command::CheckConnection, "scalar(-1)") };
        assert_eq!(run(&r).unwrap().connection_matrix.unwrap(), vec![vec!["-1".to_string()]]);
        let bad = Request { u: Some("Y".into()), v: Some("x*Y".into()), ..req(Command::CheckConnection, "scalar(x)") };
        let err = run(&bad).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().starts_with("not_constant"));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(run(&req(Command::Group, "scalar(x/(x-x))")).unwrap_err().exit_code(), 1);
        assert_eq!(run(&Request::new(Command::Group)).unwrap_err().exit_code(), 1);
        let big = run(&req(Command::Group, "diag(1, 2, 3, 4)")).unwrap_err();
        assert_eq!(big.exit_code(), 2);
    }
}
