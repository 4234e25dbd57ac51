use crate::arith::{Constant, Elem, Field};
use crate::difference::DiffField;
use crate::error::Result;
use crate::lattice::{hnf, index, saturation_quotient, IVec};
use crate::solve::{character_value, relation_lattice, solve_mult};

use super::{IdealData, PVPresentation, SigmaIdeal};

/// A class `w` of `Lambda_sat / Lambda` whose relation `Y^{o w} = g` splits:
/// `g = scale * root^o` with `root` monic.
#[derive(Clone, Debug)]
pub(crate) struct SplitClass {
    pub w: IVec,
    pub order: i64,
    pub root: Elem,
    pub scale: Constant,
}

/// The classes of `Lambda_sat / Lambda` whose relation splits, the zero class
/// first. Constant factors are ignored, as over algebraically closed
/// constants.
pub(crate) fn split_classes(ideal: &SigmaIdeal) -> Vec<SplitClass> {
    let rows = ideal.lattice_rows();
    let n = ideal.nvars;
    let sat = saturation_quotient(&rows, n);
    let lattice = hnf(&rows, n);
    let mut out = Vec::new();
    for w in sat.elements(n) {
        let order = lattice.order_of(&w, sat.order).expect("element of a finite quotient");
        let ow: IVec = w.iter().map(|c| c * order).collect();
        let g = ideal.monomial_value(&ow).expect("multiple lies in the lattice");
        let scale = g.leading_coeff();
        if let Some(root) = g.normalized().nth_root(order as u32) {
            out.push(SplitClass { w, order, root, scale });
        }
    }
    out
}

/// Number of primitive idempotents: the size of the split part of
/// `Lambda_sat / Lambda`. Unipotent presentations have `ell = 1`.
pub fn compute_ell(ideal: &SigmaIdeal) -> u32 {
    match ideal.data {
        IdealData::Unipotent { .. } => 1,
        IdealData::Binomial { .. } => split_classes(ideal).len() as u32,
    }
}

/// Generators of `W_D`: the lattice `lambda` together with every `w` of
/// `Lambda_sat / Lambda` such that some `sigma^s` with `s | ord(w)` turns
/// `prod A_s^w` into a `sigma^s`-quotient.
pub fn periodic_lattice(k: &DiffField, a: &[Elem], lambda: &[IVec]) -> Result<Vec<IVec>> {
    let n = a.len();
    let sat = saturation_quotient(lambda, n);
    let lattice = hnf(lambda, n);
    let mut gens = lambda.to_vec();
    for w in sat.elements(n) {
        if lattice.contains(&w) {
            continue;
        }
        let order = lattice.order_of(&w, sat.order).expect("element of a finite quotient");
        for s in (1..=order).filter(|s| order % s == 0) {
            let a_s: Vec<Elem> = a.iter().map(|ai| k.sigma_product(ai, s)).collect();
            if solve_mult(&k.power(s), &character_value(&a_s, &w))?.is_some() {
                gens.push(w.clone());
                break;
            }
        }
    }
    Ok(gens)
}

/// `m = [D_L : C_L]`, read off as the index of `Lambda` in the lattice of
/// characters that become periodic.
pub fn compute_m(p: &PVPresentation) -> Result<u32> {
    let Some(a) = p.system.characters() else {
        return Ok(1);
    };
    let lambda = p.ideal.lattice_rows();
    let w = periodic_lattice(&p.system.field, &a, &lambda)?;
    Ok(index(&lambda, &w, a.len()) as u32)
}

/// `m` through the product `ell * [D_{R_0} : D_K C_{R_0}]`, with the second
/// factor computed on the component system `sigma^ell Y = A_ell Y`.
pub fn m_product_formula(p: &PVPresentation) -> Result<u32> {
    let Some(a) = p.system.characters() else {
        return Ok(p.ell);
    };
    let ell = p.ell as i64;
    let k_ell = p.system.field.power(ell);
    let a_ell: Vec<Elem> = a.iter().map(|ai| p.system.field.sigma_product(ai, ell)).collect();
    let lambda = relation_lattice(&k_ell, &a_ell, p.search_bound)?.vectors();
    let w = periodic_lattice(&k_ell, &a_ell, &lambda)?;
    Ok(p.ell * index(&lambda, &w, a.len()) as u32)
}
