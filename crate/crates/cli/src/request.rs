use pvkit_core::arith::Elem;
use pvkit_core::difference::DiffField;
use pvkit_core::galois::ConstantsExtensionDesc;
use pvkit_core::pv::{DiffSystem, DEFAULT_DEGREE_BOUND, DEFAULT_M_MAX};
use pvkit_core::PvError;
use serde::Serialize;

use crate::parse::{constants_needed, parse_expression, ExprError};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sigma {
    Shift,
    Qshift,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Group,
    Pv,
    Invariants,
    Basechange,
    CheckConnection,
    VerifyExamples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text,
    Json,
}

/// One invocation, as given on the command line.
#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub sigma: Sigma,
    pub q: Option<String>,
    pub system: Option<String>,
    pub ext: Option<String>,
    pub u: Option<String>,
    pub v: Option<String>,
    pub m_max: u32,
    pub degree_bound: u32,
    pub output: Output,
    pub timing: bool,
}

impl Request {
    pub fn new(command: Command) -> Self {
        Request {
            command,
            sigma: Sigma::Shift,
            q: None,
            system: None,
            ext: None,
            u: None,
            v: None,
            m_max: DEFAULT_M_MAX,
            degree_bound: DEFAULT_DEGREE_BOUND,
            output: Output::Text,
            timing: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    Scalar,
    Diag,
    Unipotent,
}

/// A parsed `scalar(a)`, `diag(a1, ..., an)` or `unipotent(b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemDesc {
    pub kind: SystemKind,
    pub entries: Vec<Elem>,
}

impl SystemDesc {
    /// Canonical text, parseable again by [`parse_system`].
    pub fn canonical(&self) -> String {
        let head = match self.kind {
            SystemKind::Scalar => "scalar",
            SystemKind::Diag => "diag",
            SystemKind::Unipotent => "unipotent",
        };
        let args: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        format!("{head}({})", args.join(", "))
    }
}

fn usage(e: ExprError, what: &str) -> CliError {
    CliError::Usage(format!("{what}: {e}"))
}

/// Splits on commas outside parentheses, keeping the offset of each piece.
fn split_args(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

pub fn parse_system(text: &str) -> Result<SystemDesc, CliError> {
    let t = text.trim();
    let open = t.find('(').ok_or_else(|| CliError::Usage(format!("system '{t}': expected name(arguments)")))?;
    if !t.ends_with(')') {
        return Err(CliError::Usage(format!("system '{t}': missing closing parenthesis")));
    }
    let kind = match t[..open].trim() {
        "scalar" => SystemKind::Scalar,
        "diag" => SystemKind::Diag,
        "unipotent" => SystemKind::Unipotent,
        other => return Err(CliError::Usage(format!("unknown system kind '{other}' (scalar, diag, unipotent)"))),
    };
    let inner = &t[open + 1..t.len() - 1];
    let entries = split_args(inner)
        .into_iter()
        .map(|(offset, arg)| {
            parse_expression(arg).map_err(|e| match e {
                ExprError::Parse { position, message } => {
                    CliError::Usage(format!("system argument at position {}: {message}", open + 1 + offset + position))
                }
                ExprError::DivisionByZero { position } => {
                    CliError::Usage(format!("system argument: division by zero at position {}", open + 1 + offset + position))
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if kind != SystemKind::Diag && entries.len() != 1 {
        return Err(CliError::Usage(format!("{} takes exactly one argument", &t[..open])));
    }
    Ok(SystemDesc { kind, entries })
}

pub fn parse_extension(text: &str) -> Result<ConstantsExtensionDesc, CliError> {
    let bad = || CliError::Usage(format!("extension '{text}': expected root-of-unity:N or transcendental:N"));
    let (kind, n) = text.split_once(':').ok_or_else(bad)?;
    let n: u32 = n.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(bad)?;
    match kind.trim() {
        "root-of-unity" => Ok(ConstantsExtensionDesc::AdjoinRootOfUnity(n)),
        "transcendental" => Ok(ConstantsExtensionDesc::AdjoinTranscendental(n)),
        _ => Err(bad()),
    }
}

/// The base field for a request: the operator, with constants grown until
/// every coefficient of the system lies in them.
pub fn base_field(req: &Request, desc: &SystemDesc) -> Result<DiffField, CliError> {
    let mut field = match req.sigma {
        Sigma::Shift => {
            if req.q.is_some() {
                return Err(CliError::Usage("--q is only meaningful with --sigma qshift".into()));
            }
            DiffField::shift()
        }
        Sigma::Qshift => {
            let text = req.q.as_deref().ok_or_else(|| CliError::Usage("--sigma qshift needs --q".into()))?;
            let q = parse_expression(text).map_err(|e| usage(e, "--q"))?;
            let q = q
                .as_constant()
                .and_then(|c| c.as_cyclo().cloned())
                .ok_or_else(|| CliError::Usage(format!("q = {q} is not a cyclotomic constant")))?;
            DiffField::qshift(q.clone()).map_err(|e| match e {
                PvError::InvalidQ(_) => CliError::Usage(e.to_string()),
                other => CliError::Engine(other),
            })?
        }
    };
    let (n, t) = desc.entries.iter().map(constants_needed).fold((1, 0), |(n, t), (m, s)| (num_integer::lcm(n, m), t.max(s)));
    if n > 1 {
        field = field.with_root_of_unity(n);
    }
    if t > field.transcendentals {
        field = field.with_transcendentals(t - field.transcendentals);
    }
    Ok(field)
}

pub fn build_system(field: DiffField, desc: &SystemDesc) -> DiffSystem {
    match desc.kind {
        SystemKind::Scalar => DiffSystem::scalar(field, desc.entries[0].clone()),
        SystemKind::Diag => DiffSystem::diagonal(field, desc.entries.clone()),
        SystemKind::Unipotent => DiffSystem::unipotent(field, desc.entries[0].clone()),
    }
}
