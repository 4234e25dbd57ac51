use num_rational::BigRational;

use crate::arith::{CPoly, Constant, CycloNum, Field, Poly};
use crate::difference::{dispersion_set, SigmaSpec};

fn strip_x(p: &CPoly) -> CPoly {
    match p.trailing() {
        Some((k, _)) if k > 0 => Poly::new(p.coeffs()[k..].to_vec()),
        _ => p.clone(),
    }
}

/// A polynomial `U` such that every rational solution of
/// `a1 sigma(y) + a0 y = b` (b polynomial) has denominator dividing `U`,
/// up to powers of `x` in the q-dilation case.
pub fn universal_denominator(sigma: &SigmaSpec, a1: &CPoly, a0: &CPoly) -> CPoly {
    let mut a = sigma.apply_poly(a1, -1);
    let mut b = a0.clone();
    if !sigma.is_shift() {
        a = strip_x(&a);
        b = strip_x(&b);
    }
    let mut hs = dispersion_set(&a.squarefree_part(), &b.squarefree_part(), sigma);
    hs.sort_unstable_by(|x, y| y.cmp(x));
    let mut u = CPoly::one();
    for h in hs {
        let h = h as i64;
        let d = a.gcd(&sigma.apply_poly(&b, h));
        if d.is_constant() {
            continue;
        }
        a = a.div_exact(&d).expect("gcd divides");
        b = b.div_exact(&sigma.apply_poly(&d, -h)).expect("shifted gcd divides");
        for i in 0..=h {
            u = &u * &sigma.apply_poly(&d, -i);
        }
    }
    u.monic()
}

/// Upper bound on `deg P` for `alpha P(x + s) + beta P(x) = gamma`.
pub(super) fn shift_degree_bound(alpha: &CPoly, beta: &CPoly, gamma: &CPoly, step: i64) -> i64 {
    let da = alpha.deg();
    let sum = alpha + beta;
    let ds = sum.deg();
    let mut cands = vec![0];
    if !gamma.is_zero() {
        if !sum.is_zero() && ds > da - 1 {
            cands.push(gamma.deg() - ds);
        } else {
            cands.push(gamma.deg() - da + 1);
        }
    }
    if !sum.is_zero() && ds == da - 1 {
        // the top coefficient lc(sum) + step d lc(alpha) vanishes at d0
        let denom = alpha.lc().mul(&Constant::from_int(step));
        let d0 = sum.lc().neg().div(&denom).expect("nonzero");
        if let Some(r) = d0.to_rational() {
            if r.is_integer() && r >= BigRational::from_integer(0.into()) {
                let v: i64 = r.to_integer().try_into().unwrap_or(i64::MAX);
                cands.push(v);
            }
        }
    }
    cands.into_iter().max().unwrap_or(0)
}

/// Exponent range `[lo, hi]` of a Laurent `P` with
/// `alpha P(q x) + beta P(x) = gamma`; `None` when only `P = 0` is possible.
pub(super) fn q_exponent_range(alpha: &CPoly, beta: &CPoly, gamma: &CPoly, q: &CycloNum) -> Option<(i64, i64)> {
    let (da, db) = (alpha.deg(), beta.deg());
    let (oa, ta) = alpha.trailing().expect("alpha nonzero");
    let (ob, tb) = beta.trailing().expect("beta nonzero");
    let log_of = |c: Constant| c.as_cyclo().and_then(|c| discrete_log(q, c));

    let mut hi = Vec::new();
    let mut lo = Vec::new();
    if let Some((og, _)) = gamma.trailing() {
        hi.push(gamma.deg() - da.max(db));
        lo.push(og as i64 - oa.min(ob) as i64);
    }
    if da == db {
        hi.extend(log_of(beta.lc().neg().div(&alpha.lc()).expect("nonzero")));
    }
    if oa == ob {
        lo.extend(log_of(tb.neg().div(&ta).expect("nonzero")));
    }
    Some((lo.into_iter().min()?, hi.into_iter().max()?))
}

/// The integer `h` with `q^h = c`, if any.
pub fn discrete_log(q: &CycloNum, c: &CycloNum) -> Option<i64> {
    if c.is_zero() {
        return None;
    }
    if c.is_one() {
        return Some(0);
    }
    let n = num_integer::lcm(q.conductor(), c.conductor());
    let modulus = |v: &CycloNum, k: u32| {
        let (re, im) = v.embed_at(n, k);
        (re * re + im * im).sqrt()
    };
    let matches = |h: i64| q.pow(h).as_ref() == Some(c);
    for k in (1..=n).filter(|k| num_integer::gcd(*k, n) == 1) {
        let lq = modulus(q, k).ln();
        if lq.abs() < 1e-9 {
            continue;
        }
        let est = (modulus(c, k).ln() / lq).round();
        if !est.is_finite() || est.abs() > 1e6 {
            return None;
        }
        let est = est as i64;
        return (est - 1..=est + 1).find(|&h| matches(h));
    }
    // every embedding of q has modulus one
    (-64..=64).find(|&h| matches(h))
}
