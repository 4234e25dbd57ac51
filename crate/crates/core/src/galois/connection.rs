use crate::arith::{linalg, Constant, Elem, Field};
use crate::error::{PvError, Result};
use crate::lattice::IVec;
use crate::pv::{IdealData, PVPresentation, RPoly};

/// A square matrix of residue classes of `k[Y, 1/det Y] / q`.
pub type SolutionMatrix = Vec<Vec<RPoly>>;
pub type ConstMatrix = Vec<Vec<Constant>>;

fn det(m: &[Vec<RPoly>], nvars: usize) -> RPoly {
    match m.len() {
        0 => RPoly::one(nvars),
        1 => m[0][0].clone(),
        n => (0..n).fold(RPoly::zero(nvars), |acc, j| {
            let minor: Vec<Vec<RPoly>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect()).collect();
            let term = m[0][j].mul(&det(&minor, nvars));
            if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }
        }),
    }
}

fn adjugate(m: &[Vec<RPoly>], nvars: usize) -> Vec<Vec<RPoly>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![RPoly::one(nvars)]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // entry (i, j) is the cofactor of (j, i)
                    let minor: Vec<Vec<RPoly>> = m
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| *r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, e)| e.clone()).collect())
                        .collect();
                    let d = det(&minor, nvars);
                    if (i + j) % 2 == 0 { d } else { d.neg() }
                })
                .collect()
        })
        .collect()
}

/// Residue representatives of a full-rank lattice in Hermite form.
fn residue_basis(rows: &[IVec], n: usize) -> Vec<IVec> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let range = rows[i][i];
        out = out
            .into_iter()
            .flat_map(|base: IVec| {
                (0..range).map(move |k| {
                    let mut v = base.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Inverse of `d` in the quotient ring, when it is a unit there.
fn invert(p: &PVPresentation, d: &RPoly) -> Result<RPoly> {
    let not_unit = || PvError::NotFundamental(format!("det V = {} is not a unit", d.fmt_with(&p.system.var_names())));
    if d.is_zero() {
        return Err(not_unit());
    }
    match &p.ideal.data {
        IdealData::Unipotent { .. } => {
            let c = d.as_constant().ok_or_else(not_unit)?;
            Ok(RPoly::constant(4, c.inv().ok_or_else(not_unit)?))
        }
        IdealData::Binomial { lattice, .. } => {
            if let Some(inv) = d.monomial_inverse() {
                return Ok(inv);
            }
            let n = p.ideal.nvars;
            if lattice.rank() < n {
                return Err(not_unit());
            }
            // finite-dimensional quotient: solve d z = 1 on the monomial basis
            let basis = residue_basis(&lattice.rows, n);
            let columns: Vec<RPoly> =
                basis.iter().map(|b| p.ideal.normal_form(&d.mul(&RPoly::monomial(b.clone(), Elem::one())))).collect();
            let m: Vec<Vec<Elem>> = basis.iter().map(|bi| columns.iter().map(|col| col.coeff(bi)).collect()).collect();
            let rhs: Vec<Elem> = basis.iter().map(|b| if b.iter().all(|&e| e == 0) { Elem::one() } else { Elem::zero() }).collect();
            let z = linalg::solve(&m, &rhs, basis.len()).ok_or_else(not_unit)?;
            Ok(RPoly::from_terms(n, basis.into_iter().zip(z)))
        }
    }
}

/// `P = U V^{-1}` computed modulo `q`; every entry must be a constant.
///
/// `U` and `V` are taken as given: that they are fundamental matrices of the
/// system is the caller's responsibility.
pub fn connection_matrix_check(p: &PVPresentation, u: &SolutionMatrix, v: &SolutionMatrix) -> Result<ConstMatrix> {
    let n = p.system.dim();
    let nvars = p.ideal.nvars;
    let square = |m: &SolutionMatrix| m.len() == n && m.iter().all(|r| r.len() == n);
    if !square(u) || !square(v) {
        return Err(PvError::UnsupportedShape(format!("expected {n}x{n} matrices")));
    }
    let nf = |x: &RPoly| p.ideal.normal_form(x);
    let d = nf(&det(v, nvars));
    let d_inv = invert(p, &d)?;
    let adj = adjugate(v, nvars);
    let names = p.system.var_names();
    let mut out = Vec::with_capacity(n);
    for (i, urow) in u.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let entry = (0..n).fold(RPoly::zero(nvars), |acc, k| acc.add(&urow[k].mul(&adj[k][j])));
            let entry = nf(&nf(&entry).mul(&d_inv));
            let value = entry
                .as_constant()
                .and_then(|e| e.as_constant())
                .ok_or_else(|| PvError::NotConstant { row: i, col: j, value: entry.fmt_with(&names) })?;
            row.push(value);
        }
        out.push(row);
    }
    Ok(out)
}
