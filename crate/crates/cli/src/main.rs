use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pvkit_cli::request::{Command, Output, Request, Sigma};
use pvkit_cli::run;

#[derive(Parser)]
#[command(name = "pvkit", version, about = "Picard-Vessiot rings and difference Galois groups of small systems")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Identify the difference Galois group.
    Group(Common),
    /// Print the Picard-Vessiot presentation and its idempotents.
    Pv(Common),
    /// Print ell, m and the Krull dimension.
    Invariants(Common),
    /// Compare the presentation with its base change to larger constants.
    Basechange {
        #[command(flatten)]
        common: Common,
        /// root-of-unity:N or transcendental:N
        #[arg(long)]
        ext: String,
    },
    /// Compute the connection matrix between two fundamental matrices.
    CheckConnection {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Run the built-in example suite.
    VerifyExamples(Bounds),
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaArg {
    Shift,
    Qshift,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Args)]
struct Bounds {
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    #[arg(long, default_value_t = 6)]
    degree_bound: u32,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    /// Add the elapsed time to the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "shift")]
    sigma: SigmaArg,
    /// q for the q-dilation, a nonzero constant that is not a root of unity.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// scalar(a), diag(a1, ..., an) or unipotent(b)
    #[arg(long, allow_hyphen_values = true)]
    system: String,
    #[command(flatten)]
    bounds: Bounds,
}

fn request(cli: Cli) -> Request {
    let (command, common, bounds) = match cli.command {
        Cmd::Group(c) => (Command::Group, Some(c), None),
        Cmd::Pv(c) => (Command::Pv, Some(c), None),
        Cmd::Invariants(c) => (Command::Invariants, Some(c), None),
        Cmd::Basechange { common, ext } => {
            let mut r = request_from(Command::Basechange, common);
            r.ext = Some(ext);
            return r;
        }
        Cmd::CheckConnection { common, u, v } => {
            let mut r = request_from(Command::CheckConnection, common);
            r.u = Some(u);
            r.v = Some(v);
            return r;
        }
        Cmd::VerifyExamples(b) => (Command::VerifyExamples, None, Some(b)),
    };
    match (common, bounds) {
        (Some(c), _) => request_from(command, c),
        (None, Some(b)) => with_bounds(Request::new(command), b),
        (None, None) => unreachable!("every command carries bounds"),
    }
}

fn with_bounds(mut r: Request, b: Bounds) -> Request {
    r.m_max = b.m_max;
    r.degree_bound = b.degree_bound;
    r.output = match b.output {
        OutputArg::Text => Output::Text,
        OutputArg::Json => Output::Json,
    };
    r.timing = b.timing;
    r
}

fn request_from(command: Command, c: Common) -> Request {
    let mut r = with_bounds(Request::new(command), c.bounds);
    r.sigma = match c.sigma {
        SigmaArg::Shift => Sigma::Shift,
        SigmaArg::Qshift => Sigma::Qshift,
    };
    r.q = c.q;
    r.system = Some(c.system);
    r
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let req = request(cli);
    match run(&req) {
        Ok(report) => {
            match req.output {
                Output::Text => print!("{}", report.to_text()),
                Output::Json => println!("{}", report.to_json()),
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
