//! The built-in example suite behind `pvkit verify-examples`: the three
//! worked examples, their base changes, and negative controls.

use pvkit_core::galois::{base_change, group_transport_check, identify_group, ConstantsExtensionDesc};
use pvkit_core::pv::RPoly;

use crate::parse::parse_expression;
use crate::report::ExampleResult;
use crate::request::{Command, Request, Sigma};
use crate::{presentation_for, CliError};

struct Expect {
    generators: Option<&'static [&'static str]>,
    ell: u32,
    krull: usize,
    group: &'static str,
    coordinate_ideal: Option<&'static [&'static str]>,
}

struct Example {
    name: &'static str,
    sigma: Sigma,
    q: Option<&'static str>,
    system: &'static str,
    expect: Expect,
    /// `(X, Y)`: the residue of `X` is nonzero and `sigma(X) = -X`.
    anti_invariant: Option<&'static str>,
}

fn examples() -> Vec<Example> {
    vec![
        Example {
            name: "A: sigma(y) = -y",
            sigma: Sigma::Shift,
            q: None,
            system: "scalar(-1)",
            expect: Expect {
                generators: Some(&["Y^2 - 1"]),
                ell: 2,
                krull: 0,
                group: "Z/2Z",
                coordinate_ideal: Some(&["X^2 - 1"]),
            },
            anti_invariant: None,
        },
        Example {
            name: "B: q-logarithm, q = 2",
            sigma: Sigma::Qshift,
            q: Some("2"),
            system: "unipotent(1)",
            expect: Expect { generators: None, ell: 1, krull: 1, group: "Ga", coordinate_ideal: None },
            anti_invariant: None,
        },
        Example {
            name: "C: square root of t, q = 2",
            sigma: Sigma::Qshift,
            q: Some("2"),
            system: "scalar(-2)",
            expect: Expect {
                generators: Some(&["Y^2 - x^2"]),
                ell: 2,
                krull: 0,
                group: "Z/2Z",
                coordinate_ideal: Some(&["X^2 - 1"]),
            },
            anti_invariant: Some("1/x"),
        },
        Example {
            name: "control: sigma(y) = x y",
            sigma: Sigma::Shift,
            q: None,
            system: "scalar(x)",
            expect: Expect { generators: Some(&[]), ell: 1, krull: 1, group: "Gm^1", coordinate_ideal: Some(&[]) },
            anti_invariant: None,
        },
        Example {
            name: "control: sigma(y) = (x+1)/x y",
            sigma: Sigma::Shift,
            q: None,
            system: "scalar((x+1)/x)",
            expect: Expect {
                generators: Some(&["Y - x"]),
                ell: 1,
                krull: 0,
                group: "1",
                coordinate_ideal: Some(&["X - 1"]),
            },
            anti_invariant: None,
        },
        Example {
            name: "control: diag(2, 3), q = 5",
            sigma: Sigma::Qshift,
            q: Some("5"),
            system: "diag(2, 3)",
            expect: Expect { generators: Some(&[]), ell: 1, krull: 2, group: "Gm^2", coordinate_ideal: Some(&[]) },
            anti_invariant: None,
        },
    ]
}

fn check(ex: &Example, m_max: u32, degree_bound: u32) -> Result<String, String> {
    let err = |e: CliError| e.to_string();
    let req = Request {
        sigma: ex.sigma,
        q: ex.q.map(String::from),
        system: Some(ex.system.into()),
        m_max,
        degree_bound,
        ..Request::new(Command::Group)
    };
    let p = presentation_for(&req).map_err(err)?;
    let g = identify_group(&p).map_err(|e| e.to_string())?;
    let e = &ex.expect;
    if let Some(gens) = e.generators {
        if p.generator_strings() != gens {
            return Err(format!("ideal ({}) expected ({})", p.generator_strings().join(", "), gens.join(", ")));
        }
    }
    if (p.ell, p.krull_dim) != (e.ell, e.krull) {
        return Err(format!("ell {} krull {}, expected {} and {}", p.ell, p.krull_dim, e.ell, e.krull));
    }
    if g.name() != e.group {
        return Err(format!("group {} expected {}", g.name(), e.group));
    }
    if let Some(ci) = e.coordinate_ideal {
        let got = g.coordinate_ideal.as_ref().map(|c| c.to_strings()).unwrap_or_default();
        if got != ci {
            return Err(format!("coordinate ideal ({}) expected ({})", got.join(", "), ci.join(", ")));
        }
    }
    if let Some(scale) = ex.anti_invariant {
        let f = parse_expression(scale).map_err(|e| e.to_string())?;
        let u = RPoly::monomial(vec![1], f);
        let sum = p.system.apply_sigma(&u).add(&u);
        if p.ideal.contains(&u) || !p.ideal.contains(&sum) {
            return Err(format!("{scale}*Y is not a nonzero solution of sigma(X) + X = 0"));
        }
    }
    for ext in [ConstantsExtensionDesc::AdjoinRootOfUnity(3), ConstantsExtensionDesc::AdjoinTranscendental(1)] {
        let q = base_change(&p, ext).map_err(|e| e.to_string())?;
        let gq = identify_group(&q).map_err(|e| e.to_string())?;
        if (q.ell, q.m_inv, q.krull_dim) != (p.ell, p.m_inv, p.krull_dim) || gq.name() != g.name() {
            return Err(format!("invariants change under {ext}"));
        }
        if !group_transport_check(&p, ext).map_err(|e| e.to_string())? {
            return Err(format!("coordinate ideal changes under {ext}"));
        }
    }
    Ok(format!(
        "ideal ({}), ell {}, m {}, krull {}, group {}, stable under base change",
        p.generator_strings().join(", "),
        p.ell,
        p.m_inv,
        p.krull_dim,
        g.name()
    ))
}

pub fn run_suite(m_max: u32, degree_bound: u32) -> Vec<ExampleResult> {
    examples()
        .iter()
        .map(|ex| match check(ex, m_max, degree_bound) {
            Ok(detail) => ExampleResult { name: ex.name.into(), passed: true, detail },
            Err(detail) => ExampleResult { name: ex.name.into(), passed: false, detail },
        })
        .collect()
}
