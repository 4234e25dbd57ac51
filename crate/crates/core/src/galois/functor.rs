use std::collections::BTreeMap;

use crate::arith::{linalg, CPoly, Constant, Elem, Field};
use crate::error::{PvError, Result};
use crate::groebner::groebner_basis;
use crate::laurent::{indexed_names, matrix_names, Laurent};
use crate::lattice::IVec;
use crate::pv::{IdealData, PVPresentation, RPoly};

/// An ideal in the group variables `X` with constant coefficients, given by
/// its reduced Groebner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordIdeal {
    pub names: Vec<String>,
    pub generators: Vec<Laurent<Constant>>,
}

impl CoordIdeal {
    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.fmt_with(&self.names)).collect()
    }
}

/// `sum c_j X^{m_j}` with `c_j` in `C(x)`, split along a `C`-basis of the
/// span of the `c_j`: one polynomial in `X` per basis element.
fn expand_over_constants(nx: usize, terms: &[(IVec, Elem)]) -> Vec<Laurent<Constant>> {
    let den = terms.iter().fold(CPoly::one(), |acc, (_, c)| {
        let g = acc.gcd(c.den());
        (&acc * c.den()).div_exact(&g).expect("gcd divides")
    });
    let nums: Vec<CPoly> = terms
        .iter()
        .map(|(_, c)| (c.num() * &den).div_exact(c.den()).expect("common denominator"))
        .collect();
    let height = nums.iter().map(|p| p.deg() + 1).max().unwrap_or(0).max(0) as usize;
    let mut rows: Vec<Vec<Constant>> = (0..height).map(|k| nums.iter().map(|p| p.coeff(k)).collect()).collect();
    linalg::rref(&mut rows);
    rows.into_iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| Laurent::from_terms(nx, terms.iter().zip(r).map(|((m, _), c)| (m.clone(), c))))
        .collect()
}

/// Images of the generators of `q` under `Y -> Y X`, as triples
/// `(Y exponent, X exponent, coefficient)`.
fn substituted(p: &PVPresentation) -> Vec<Vec<(IVec, IVec, Elem)>> {
    match &p.ideal.data {
        IdealData::Binomial { .. } => p
            .ideal
            .generators
            .iter()
            .map(|g| g.terms().map(|(e, c)| (e.clone(), e.clone(), c.clone())).collect())
            .collect(),
        IdealData::Unipotent { .. } => {
            // Y variables 0..4, X variables 4..8, row-major 11, 12, 21, 22
            let v = |i| RPoly::var(8, i);
            let entry = |r: usize, c: usize| v(2 * r).mul(&v(4 + c)).add(&v(2 * r + 1).mul(&v(6 + c)));
            let images = vec![entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)];
            p.ideal
                .generators
                .iter()
                .map(|g| {
                    let wide = RPoly::from_terms(8, g.terms().map(|(e, c)| {
                        let mut w = e.clone();
                        w.extend([0; 4]);
                        (w, c.clone())
                    }));
                    wide.substitute(&images, 8)
                        .terms()
                        .map(|(e, c)| (e[..4].to_vec(), e[4..].to_vec(), c.clone()))
                        .collect()
                })
                .collect()
        }
    }
}

/// The ideal of the group functor: each generator of `q` is moved by
/// `Y -> Y X`, reduced modulo `q`, and expanded along a basis of `k` over `C`
/// in the reduced `Y`-monomials; the `X`-polynomials that appear generate it.
pub fn functor_ideal(p: &PVPresentation) -> Result<CoordIdeal> {
    if p.partial {
        return Err(PvError::UnsupportedSubstitutionShape(
            "the ideal is not known to be maximal, so the functor construction does not apply".into(),
        ));
    }
    let (nx, names) = match &p.ideal.data {
        IdealData::Binomial { .. } => (p.system.dim(), indexed_names("X", p.system.dim())),
        IdealData::Unipotent { .. } => (4, matrix_names("X")),
    };
    let mut polys = Vec::new();
    for image in substituted(p) {
        let mut groups: BTreeMap<IVec, Vec<(IVec, Elem)>> = BTreeMap::new();
        for (ey, ex, c) in image {
            let reduced = p.ideal.normal_form(&RPoly::monomial(ey, c));
            for (ry, rc) in reduced.terms() {
                groups.entry(ry.clone()).or_default().push((ex.clone(), rc.clone()));
            }
        }
        for terms in groups.values() {
            let merged: Vec<(IVec, Elem)> =
                Laurent::from_terms(nx, terms.iter().cloned()).terms().map(|(e, c)| (e.clone(), c.clone())).collect();
            if !merged.is_empty() {
                polys.extend(expand_over_constants(nx, &merged));
            }
        }
    }
    Ok(CoordIdeal { names, generators: groebner_basis(&polys) })
}
