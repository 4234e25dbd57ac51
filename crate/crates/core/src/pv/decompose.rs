use crate::arith::{BigRational, Elem, Field};
use crate::error::{PvError, Result};
use crate::solve::character_value;

use super::invariants::split_classes;
use super::{DiffSystem, IdealData, PVPresentation, RPoly, Shape, SigmaIdeal};

/// One summand `R_i = e_i R` of the presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub index: usize,
    pub idempotent: RPoly,
    /// The prime `sigma^ell`-ideal cutting out this summand.
    pub ideal: SigmaIdeal,
    /// `A_ell = sigma^{ell-1}(A) ... sigma(A) A`.
    pub a_ell: Vec<Vec<Elem>>,
}

fn matrix_sigma_product(sys: &DiffSystem, ell: usize) -> Vec<Vec<Elem>> {
    let a = sys.matrix();
    let n = a.len();
    let mut acc = a.clone();
    for j in 1..ell {
        let shifted: Vec<Vec<Elem>> =
            a.iter().map(|row| row.iter().map(|e| sys.field.apply_sigma_power(e, j as i64)).collect()).collect();
        acc = (0..n)
            .map(|r| (0..n).map(|c| (0..n).fold(Elem::zero(), |s, k| s.add(&shifted[r][k].mul(&acc[k][c])))).collect())
            .collect();
    }
    acc
}

/// Splits `R` into its `ell` summands `e_i R`, with `e_i = sigma^i(e_0)`.
///
/// For `ell = 1` the single component is the whole ring with `e_0 = 1`.
/// Otherwise the split part of `Lambda_sat / Lambda` must be cyclic: with
/// `w0` of order `ell` and `Y^{ell w0} = h^ell`, `u = Y^{w0}/h` satisfies
/// `u^ell = 1` and `e_0 = (1 + u + ... + u^{ell-1}) / ell`.
pub fn decompose(p: &PVPresentation) -> Result<Vec<Component>> {
    let sys = &p.system;
    let ell = p.ell as usize;
    if ell == 1 {
        return Ok(vec![Component {
            index: 0,
            idempotent: RPoly::one(p.ideal.nvars),
            ideal: p.ideal.clone(),
            a_ell: sys.matrix(),
        }]);
    }
    let (IdealData::Binomial { .. }, Some(a)) = (&p.ideal.data, sys.characters()) else {
        return Err(PvError::NoExplicitIdempotents("only torus shapes split".into()));
    };
    let n = p.ideal.nvars;
    let class = split_classes(&p.ideal)
        .into_iter()
        .find(|c| c.order as usize == ell)
        .ok_or_else(|| PvError::NoExplicitIdempotents("the split classes do not form a cyclic group".into()))?;
    let kappa = class
        .scale
        .nth_root(ell as u32)
        .ok_or_else(|| PvError::NoExplicitIdempotents(format!("{} has no {ell}-th root in the constants", class.scale)))?;
    let h = class.root.mul(&Elem::from_const(kappa));

    // sigma(u) = c u with c a root of unity of k, hence a constant
    let c = character_value(&a, &class.w).mul(&h).div(&sys.field.apply_sigma(&h)).expect("h nonzero");
    let c = c
        .as_constant()
        .filter(|c| c.pow(ell as i64).is_some_and(|v| v.is_one()))
        .expect("sigma(u)/u is a constant root of unity");

    let u = RPoly::monomial(class.w.clone(), h.inv().expect("h nonzero"));
    let mut e0 = RPoly::zero(n);
    let mut power = RPoly::one(n);
    for _ in 0..ell {
        e0 = e0.add(&power);
        power = p.ideal.normal_form(&power.mul(&u));
    }
    let inv_ell = Elem::from_rational(&BigRational::new(1.into(), (ell as i64).into()));
    let e0 = p.ideal.normal_form(&e0.scale(&inv_ell));

    let a_ell = matrix_sigma_product(sys, ell);
    let mut rels = p.ideal.relations();
    let mut out = Vec::with_capacity(ell);
    let mut e = e0;
    for i in 0..ell {
        let shift = c.pow(-(i as i64)).expect("nonzero");
        rels.push((class.w.clone(), h.mul(&Elem::from_const(shift))));
        let ideal = SigmaIdeal::binomial(n, &rels)?;
        rels.pop();
        out.push(Component { index: i, idempotent: e.clone(), ideal, a_ell: a_ell.clone() });
        e = p.ideal.normal_form(&sys.apply_sigma(&e));
    }
    Ok(out)
}

/// Checks the idempotent identities modulo `q`, the cyclic action of `sigma`,
/// the `sigma^ell`-stability of each component ideal and the matrix `A_ell`.
pub fn verify_components(p: &PVPresentation, comps: &[Component]) -> bool {
    let sys = &p.system;
    let q = &p.ideal;
    let n = q.nvars;
    let ell = comps.len();
    let nf = |x: &RPoly| q.normal_form(x);
    let mut total = RPoly::zero(n);
    for (i, ci) in comps.iter().enumerate() {
        let ei = &ci.idempotent;
        if nf(&ei.mul(ei)) != nf(ei) {
            return false;
        }
        for cj in &comps[i + 1..] {
            if !nf(&ei.mul(&cj.idempotent)).is_zero() {
                return false;
            }
        }
        let next = &comps[(i + 1) % ell].idempotent;
        if nf(&sys.apply_sigma(ei)) != nf(next) {
            return false;
        }
        if ci.a_ell != matrix_sigma_product(sys, ell) {
            return false;
        }
        let comp_sys = match &sys.shape {
            Shape::Unipotent2(_) => sys.clone(),
            _ => DiffSystem::diagonal(sys.field.power(ell as i64), (0..ci.a_ell.len()).map(|r| ci.a_ell[r][r].clone()).collect()),
        };
        if !ci.ideal.generators.iter().all(|g| ci.ideal.contains(&comp_sys.apply_sigma(g))) {
            return false;
        }
        if ci.ideal.normal_form(ei) != RPoly::one(n) {
            return false;
        }
        total = total.add(ei);
    }
    nf(&total) == RPoly::one(n)
}
