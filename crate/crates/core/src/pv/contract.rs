use crate::arith::{Constant, Elem, Field};
use crate::difference::DiffField;
use crate::error::{PvError, Result};
use crate::groebner::{groebner_basis, ideal_contains};
use crate::laurent::{indexed_names, Laurent};

use super::RPoly;

/// An ideal of `C[Y]` in canonical form (its reduced Groebner basis).
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantIdeal {
    pub nvars: usize,
    pub generators: Vec<Laurent<Constant>>,
}

impl ConstantIdeal {
    pub fn new(nvars: usize, gens: &[Laurent<Constant>]) -> Self {
        ConstantIdeal { nvars, generators: groebner_basis(gens) }
    }

    pub fn to_strings(&self) -> Vec<String> {
        let names = indexed_names("Y", self.nvars);
        self.generators.iter().map(|g| g.fmt_with(&names)).collect()
    }
}

/// Support sizes `(parent, child)` for every reduction step taken.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ContractionTrace {
    pub steps: Vec<(usize, usize)>,
}

impl ContractionTrace {
    pub fn strictly_decreasing(&self) -> bool {
        self.steps.iter().all(|(p, c)| c < p)
    }
}

/// `I -> I L[Y]`: the same generators read with coefficients in `k`.
pub fn ideal_extend(ideal: &ConstantIdeal) -> Vec<RPoly> {
    ideal.generators.iter().map(|g| g.map_coeffs(|c| Elem::from_const(c.clone()))).collect()
}

fn sigma_coeffs(k: &DiffField, f: &RPoly) -> RPoly {
    f.map_coeffs(|c| k.apply_sigma(c))
}

/// Reduces `f` in a sigma-stable ideal to constant-coefficient elements
/// whose span over `k` contains `f`.
///
/// With `f` scaled so one coefficient is 1, `sigma(f) - f` drops that term;
/// for a non-constant coefficient `c`, `sigma(f/c) - f/c` drops the term of
/// `c`. Both lie in the ideal, both have smaller support, and `f` is a
/// `k`-combination of the two.
fn reduce_to_constants(k: &DiffField, f: &RPoly, out: &mut Vec<RPoly>, trace: &mut ContractionTrace) {
    if f.is_zero() {
        return;
    }
    let pivot = f
        .terms()
        .find(|(_, c)| c.is_constant())
        .or_else(|| f.terms().next_back())
        .map(|(_, c)| c.clone())
        .expect("nonzero");
    let f = f.scale(&pivot.inv().expect("nonzero"));
    let Some(c) = f.terms().map(|(_, c)| c.clone()).find(|c| !c.is_constant()) else {
        out.push(f);
        return;
    };
    let support = f.len();
    let g1 = sigma_coeffs(k, &f).sub(&f);
    let fc = f.scale(&c.inv().expect("nonzero"));
    let g2 = sigma_coeffs(k, &fc).sub(&fc);
    for g in [g1, g2] {
        trace.steps.push((support, g.len()));
        reduce_to_constants(k, &g, out, trace);
    }
}

/// `J -> J ∩ C[Y]` for a sigma-stable ideal `J` of `k[Y]` with
/// `sigma(Y) = Y`.
pub fn ideal_contract(k: &DiffField, gens: &[RPoly]) -> Result<(ConstantIdeal, ContractionTrace)> {
    let nvars = gens.first().map_or(1, |g| g.nvars());
    let basis = groebner_basis(gens);
    let names = indexed_names("Y", nvars);
    for g in gens {
        if !ideal_contains(&basis, &sigma_coeffs(k, g)) {
            return Err(PvError::NotSigmaStable(format!("sigma({}) leaves the ideal", g.fmt_with(&names))));
        }
    }
    let mut out = Vec::new();
    let mut trace = ContractionTrace::default();
    for g in gens {
        reduce_to_constants(k, g, &mut out, &mut trace);
    }
    let constant: Vec<Laurent<Constant>> =
        out.iter().map(|g| g.map_coeffs(|c| c.as_constant().expect("constant coefficient"))).collect();
    Ok((ConstantIdeal::new(nvars, &constant), trace))
}
