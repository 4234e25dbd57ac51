use crate::arith::{Constant, Elem, Field};
use crate::difference::{DiffField, SigmaSpec};
use crate::error::{PvError, Result};
use crate::lattice::{hnf, IVec};

use super::{character_value, discrete_log, solve_mult};

/// Default number of candidate exponent vectors handed to the solver before
/// the search gives up.
pub const DEFAULT_BUDGET: usize = 50_000;

/// Rows `(m, g)` with `prod a_i^{m_i} = sigma(g)/g`, in Hermite normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeBasis {
    pub rows: Vec<(IVec, Elem)>,
    pub dim: usize,
    pub search_bound: u32,
}

impl LatticeBasis {
    pub fn vectors(&self) -> Vec<IVec> {
        self.rows.iter().map(|(v, _)| v.clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Per-entry data for the necessary conditions checked before any solve.
struct Screen {
    deg: Vec<i64>,
    ord: Vec<i64>,
    lead: Vec<Constant>,
    trail: Vec<Constant>,
    root_sum: Vec<Option<num_rational::BigRational>>,
}

impl Screen {
    fn new(a: &[Elem]) -> Self {
        let rs = |p: &crate::arith::CPoly| match p.degree() {
            Some(d) if d >= 1 => p.coeff(d - 1).div(&p.lc()).expect("nonzero").neg(),
            _ => Constant::zero(),
        };
        Screen {
            deg: a.iter().map(|f| f.degree_at_infinity()).collect(),
            ord: a
                .iter()
                .map(|f| f.num().trailing().map_or(0, |t| t.0 as i64) - f.den().trailing().map_or(0, |t| t.0 as i64))
                .collect(),
            lead: a.iter().map(|f| f.leading_coeff()).collect(),
            trail: a
                .iter()
                .map(|f| {
                    let tn = f.num().trailing().expect("nonzero").1;
                    let td = f.den().trailing().expect("nonzero").1;
                    tn.div(&td).expect("nonzero")
                })
                .collect(),
            root_sum: a.iter().map(|f| rs(f.num()).sub(&rs(f.den())).to_rational()).collect(),
        }
    }

    fn passes(&self, sigma: &SigmaSpec, v: &[i64]) -> bool {
        let dot = |w: &[i64]| w.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
        if dot(&self.deg) != 0 {
            return false;
        }
        let prod = |cs: &[Constant]| {
            cs.iter().zip(v).fold(Constant::one(), |acc, (c, &e)| acc.mul(&c.pow(e).expect("nonzero")))
        };
        match sigma {
            SigmaSpec::Shift { step } => {
                if !prod(&self.lead).is_one() {
                    return false;
                }
                let mut total = num_rational::BigRational::from_integer(0.into());
                for (c, &e) in self.root_sum.iter().zip(v) {
                    if e == 0 {
                        continue;
                    }
                    match c {
                        Some(c) => total += c * num_rational::BigRational::from_integer(e.into()),
                        // irrational root sums only cancel in combination; let the solver decide
                        None => return true,
                    }
                }
                (total / num_rational::BigRational::from_integer((*step).into())).is_integer()
            }
            SigmaSpec::QShift { q } => {
                if dot(&self.ord) != 0 {
                    return false;
                }
                let in_q = |c: Constant| c.as_cyclo().map_or(false, |c| discrete_log(q, c).is_some());
                in_q(prod(&self.lead)) && in_q(prod(&self.trail))
            }
        }
    }
}

/// Exponent vectors of the box `|v|_inf <= bound`, by increasing norm, with
/// the first nonzero coordinate positive.
fn box_vectors(n: usize, bound: i64) -> Vec<IVec> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    let mut out: Vec<IVec> = (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = (idx % side) as i64 - bound;
                    idx /= side;
                    c
                })
                .rev()
                .collect::<IVec>()
        })
        .filter(|v| v.iter().find(|&&c| c != 0).map_or(false, |&c| c > 0))
        .collect();
    out.sort_by_key(|v| (v.iter().map(|c| c.abs()).max().unwrap_or(0), v.clone()));
    out
}

pub fn relation_lattice(k: &DiffField, a: &[Elem], m_max: u32) -> Result<LatticeBasis> {
    relation_lattice_with_budget(k, a, m_max, DEFAULT_BUDGET)
}

/// Box-bounded relation lattice of the characters `a_1, ..., a_n`.
pub fn relation_lattice_with_budget(k: &DiffField, a: &[Elem], m_max: u32, budget: usize) -> Result<LatticeBasis> {
    let n = a.len();
    if n > 3 {
        return Err(PvError::DimensionTooLarge(n));
    }
    if a.iter().any(|f| f.is_zero()) {
        return Err(PvError::ZeroInput);
    }
    let screen = Screen::new(a);
    let mut found: Vec<IVec> = Vec::new();
    let mut current = hnf(&found, n);
    let mut spent = 0;
    for v in box_vectors(n, m_max as i64) {
        if current.contains(&v) || !screen.passes(&k.sigma, &v) {
            continue;
        }
        spent += 1;
        if spent > budget {
            return Err(PvError::BudgetExhausted(budget));
        }
        if solve_mult(k, &character_value(a, &v))?.is_some() {
            found.push(v);
            current = hnf(&found, n);
        }
    }
    let rows = current
        .rows
        .iter()
        .map(|row| {
            let sol = solve_mult(k, &character_value(a, row))?.expect("lattice rows are realizable");
            Ok((row.clone(), sol.witness))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeBasis { rows, dim: n, search_bound: m_max })
}
