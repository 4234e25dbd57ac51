//! Buchberger's algorithm for polynomial ideals over any [`Field`], in the
//! graded reverse lexicographic order. Polynomials are [`Laurent`] values
//! with nonnegative exponents.

use std::cmp::Ordering;

use crate::arith::Field;
use crate::laurent::Laurent;
use crate::lattice::IVec;

pub fn grevlex(a: &[i64], b: &[i64]) -> Ordering {
    let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

pub fn leading<F: Field>(p: &Laurent<F>) -> Option<(IVec, F)> {
    p.terms().max_by(|(a, _), (b, _)| grevlex(a, b)).map(|(e, c)| (e.clone(), c.clone()))
}

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn monic<F: Field>(p: &Laurent<F>) -> Laurent<F> {
    match leading(p) {
        Some((_, c)) => p.scale(&c.inv().expect("nonzero")),
        None => p.clone(),
    }
}

/// Multiplies by the least monomial that makes every exponent nonnegative.
pub fn clear_denominators<F: Field>(p: &Laurent<F>) -> Laurent<F> {
    let m = p.min_exponents();
    p.shift_exponents(&m.iter().map(|x| -x.min(&0)).collect::<IVec>())
}

/// Full reduction of `p` by `basis`.
pub fn reduce<F: Field>(p: &Laurent<F>, basis: &[Laurent<F>]) -> Laurent<F> {
    let leads: Vec<(IVec, F)> = basis.iter().map(|g| leading(g).expect("nonzero basis element")).collect();
    let mut rest = p.clone();
    let mut out = Laurent::zero(p.nvars());
    while let Some((e, c)) = leading(&rest) {
        match leads.iter().position(|(le, _)| divides(le, &e)) {
            Some(i) => {
                let (le, lc) = &leads[i];
                let shift: IVec = e.iter().zip(le).map(|(a, b)| a - b).collect();
                let factor = c.div(lc).expect("nonzero");
                rest = rest.sub(&basis[i].shift_exponents(&shift).scale(&factor));
            }
            None => {
                out.add_term(e.clone(), c.clone());
                rest = rest.sub(&Laurent::monomial(e, c));
            }
        }
    }
    out
}

fn s_poly<F: Field>(f: &Laurent<F>, g: &Laurent<F>) -> Laurent<F> {
    let (ef, cf) = leading(f).expect("nonzero");
    let (eg, cg) = leading(g).expect("nonzero");
    let lcm: IVec = ef.iter().zip(&eg).map(|(a, b)| *a.max(b)).collect();
    let sf: IVec = lcm.iter().zip(&ef).map(|(a, b)| a - b).collect();
    let sg: IVec = lcm.iter().zip(&eg).map(|(a, b)| a - b).collect();
    f.shift_exponents(&sf)
        .scale(&cf.inv().expect("nonzero"))
        .sub(&g.shift_exponents(&sg).scale(&cg.inv().expect("nonzero")))
}

/// The reduced Groebner basis: monic, sorted by decreasing leading monomial.
/// The unit ideal gives `[1]`, the zero ideal `[]`.
pub fn groebner_basis<F: Field>(gens: &[Laurent<F>]) -> Vec<Laurent<F>> {
    let mut basis: Vec<Laurent<F>> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| monic(&clear_denominators(g))).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (ei, _) = leading(&basis[i]).unwrap();
        let (ej, _) = leading(&basis[j]).unwrap();
        // coprime leading monomials never produce new elements
        if ei.iter().zip(&ej).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(monic(&r));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalize, then interreduce
    let mut minimal: Vec<Laurent<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (eg, _) = leading(g).unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let (eh, _) = leading(h).unwrap();
            j != i && divides(&eh, &eg) && (eh != eg || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Laurent<F>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Laurent<F>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let (e, c) = leading(&minimal[i]).unwrap();
            let tail = minimal[i].sub(&Laurent::monomial(e.clone(), c.clone()));
            monic(&Laurent::monomial(e, c).add(&reduce(&tail, &others)))
        })
        .collect();
    reduced.sort_by(|a, b| grevlex(&leading(b).unwrap().0, &leading(a).unwrap().0));
    reduced
}

pub fn ideal_contains<F: Field>(basis: &[Laurent<F>], p: &Laurent<F>) -> bool {
    reduce(&clear_denominators(p), basis).is_zero()
}
