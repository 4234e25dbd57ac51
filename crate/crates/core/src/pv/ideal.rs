use crate::arith::{Elem, Field};
use crate::error::{PvError, Result};
use crate::lattice::{hnf, Hnf, IVec};

use super::RPoly;

/// How the ideal is stored: a binomial ideal `(Y^v - g_v)` over a lattice in
/// Hermite normal form, or the ideal of a unipotent 2x2 system.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealData {
    Binomial { lattice: Hnf, witnesses: Vec<Elem> },
    /// `(Y11 - 1, Y21, Y22 - 1)` plus `Y12 - u` when `u` is known.
    Unipotent { u: Option<Elem> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SigmaIdeal {
    pub nvars: usize,
    pub generators: Vec<RPoly>,
    pub data: IdealData,
}

impl SigmaIdeal {
    /// The binomial ideal generated by `Y^v - g` for each `(v, g)`.
    ///
    /// Generators are brought to Hermite form; a combination that cancels the
    /// exponents must cancel the witnesses too, otherwise the ideal is the
    /// unit ideal and an error is returned.
    pub fn binomial(nvars: usize, relations: &[(IVec, Elem)]) -> Result<Self> {
        let vecs: Vec<IVec> = relations.iter().map(|(v, _)| v.clone()).collect();
        let h = hnf(&vecs, nvars);
        let combine = |coeffs: &IVec| {
            coeffs.iter().zip(relations).fold(Elem::one(), |acc, (&k, (_, g))| {
                acc.mul(&g.pow(k).expect("witnesses are nonzero"))
            })
        };
        let rank = h.rank();
        for extra in &h.transform[rank..] {
            if !combine(extra).is_one() {
                return Err(PvError::NotSigmaStable("binomial relations generate the unit ideal".into()));
            }
        }
        let witnesses: Vec<Elem> = h.transform[..rank].iter().map(combine).collect();
        let generators = h
            .rows
            .iter()
            .zip(&witnesses)
            .map(|(v, g)| RPoly::monomial(v.clone(), Elem::one()).sub(&RPoly::constant(nvars, g.clone())))
            .collect();
        let lattice = Hnf { rows: h.rows, pivots: h.pivots, transform: Vec::new(), ncols: nvars };
        Ok(SigmaIdeal { nvars, generators, data: IdealData::Binomial { lattice, witnesses } })
    }

    pub fn unipotent(u: Option<Elem>) -> Self {
        let v = |i| RPoly::var(4, i);
        let one = RPoly::one(4);
        let mut generators = vec![v(0).sub(&one), v(2), v(3).sub(&one)];
        if let Some(f) = &u {
            generators.insert(1, v(1).sub(&RPoly::constant(4, f.clone())));
        }
        SigmaIdeal { nvars: 4, generators, data: IdealData::Unipotent { u } }
    }

    /// Relation vectors of a binomial ideal.
    pub fn lattice_rows(&self) -> Vec<IVec> {
        match &self.data {
            IdealData::Binomial { lattice, .. } => lattice.rows.clone(),
            IdealData::Unipotent { .. } => Vec::new(),
        }
    }

    /// `(v, g_v)` pairs of a binomial ideal.
    pub fn relations(&self) -> Vec<(IVec, Elem)> {
        match &self.data {
            IdealData::Binomial { lattice, witnesses } => lattice.rows.iter().cloned().zip(witnesses.iter().cloned()).collect(),
            IdealData::Unipotent { .. } => Vec::new(),
        }
    }

    /// Canonical remainder: exponents reduced modulo the lattice, or the
    /// unipotent substitution.
    pub fn normal_form(&self, p: &RPoly) -> RPoly {
        match &self.data {
            IdealData::Binomial { lattice, witnesses } => RPoly::from_terms(
                self.nvars,
                p.terms().map(|(e, c)| {
                    let (rep, t) = lattice.reduce(e);
                    let coeff = t.iter().zip(witnesses).fold(c.clone(), |acc, (&k, g)| {
                        acc.mul(&g.pow(k).expect("witnesses are nonzero"))
                    });
                    (rep, coeff)
                }),
            ),
            IdealData::Unipotent { u } => {
                let y12 = match u {
                    Some(f) => RPoly::constant(4, f.clone()),
                    None => RPoly::var(4, 1),
                };
                let images = vec![RPoly::one(4), y12, RPoly::zero(4), RPoly::one(4)];
                p.substitute(&images, 4)
            }
        }
    }

    pub fn contains(&self, p: &RPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// The value `g` of `Y^e` in the quotient when `e` lies in the lattice.
    pub fn monomial_value(&self, e: &[i64]) -> Option<Elem> {
        let nf = self.normal_form(&RPoly::monomial(e.to_vec(), Elem::one()));
        nf.as_constant()
    }

    pub fn is_binomial(&self) -> bool {
        matches!(self.data, IdealData::Binomial { .. })
    }
}
