//! The base difference field `k = C(x)` with `sigma` a shift or a q-dilation.

use std::fmt;

use crate::arith::{CPoly, Constant, CycloNum, Elem, Field, Poly, RatFunc};
use crate::error::{PvError, Result};

/// Which automorphism of `C(x)` acts: `x -> x + step` or `x -> q x`.
///
/// A shift with `step != 1` only arises as a power of the plain shift; the
/// public constructor always builds `step = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaSpec {
    Shift { step: i64 },
    QShift { q: CycloNum },
}

impl SigmaSpec {
    pub fn shift() -> Self {
        SigmaSpec::Shift { step: 1 }
    }

    /// Rejects `q = 0` and every root of unity.
    pub fn qshift(q: CycloNum) -> Result<Self> {
        if q.is_zero() || q.is_root_of_unity() {
            return Err(PvError::InvalidQ(q.to_string()));
        }
        Ok(SigmaSpec::QShift { q })
    }

    /// The operator `sigma^s`, `s >= 1`.
    pub fn power(&self, s: i64) -> SigmaSpec {
        assert!(s >= 1, "only positive powers are difference operators here");
        match self {
            SigmaSpec::Shift { step } => SigmaSpec::Shift { step: step * s },
            SigmaSpec::QShift { q } => SigmaSpec::QShift { q: q.pow(s).expect("q is nonzero") },
        }
    }

    pub fn is_shift(&self) -> bool {
        matches!(self, SigmaSpec::Shift { .. })
    }

    /// `sigma^j` on a polynomial; `j` may be negative.
    pub fn apply_poly(&self, p: &CPoly, j: i64) -> CPoly {
        if j == 0 {
            return p.clone();
        }
        match self {
            SigmaSpec::Shift { step } => p.substitute_shift(&Constant::from_int(step * j)),
            SigmaSpec::QShift { q } => {
                let qj = Constant::Base(q.pow(j).expect("q is nonzero"));
                p.substitute_scale(&qj).expect("q is nonzero")
            }
        }
    }

    /// `sigma^j` on a rational function.
    pub fn apply(&self, f: &Elem, j: i64) -> Elem {
        if j == 0 || f.is_constant() {
            return f.clone();
        }
        RatFunc::new(self.apply_poly(f.num(), j), self.apply_poly(f.den(), j))
    }
}

impl fmt::Display for SigmaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaSpec::Shift { step: 1 } => write!(f, "shift"),
            SigmaSpec::Shift { step } => write!(f, "shift^{step}"),
            SigmaSpec::QShift { q } => write!(f, "qshift(q = {q})"),
        }
    }
}

/// `k = C(x)` with `C = Q(zeta_N)(t_1, ..., t_T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffField {
    pub sigma: SigmaSpec,
    pub constants_conductor: u32,
    pub transcendentals: u32,
}

impl DiffField {
    pub fn new(sigma: SigmaSpec) -> Self {
        let constants_conductor = match &sigma {
            SigmaSpec::Shift { .. } => 1,
            SigmaSpec::QShift { q } => q.conductor(),
        };
        DiffField { sigma, constants_conductor, transcendentals: 0 }
    }

    pub fn shift() -> Self {
        Self::new(SigmaSpec::shift())
    }

    pub fn qshift(q: CycloNum) -> Result<Self> {
        Ok(Self::new(SigmaSpec::qshift(q)?))
    }

    /// Same field with `sigma^s` as its operator.
    pub fn power(&self, s: i64) -> Self {
        DiffField { sigma: self.sigma.power(s), ..self.clone() }
    }

    /// Enlarges the cyclotomic part of the constants to contain `zeta_n`.
    pub fn with_root_of_unity(&self, n: u32) -> Self {
        DiffField { constants_conductor: num_integer::lcm(self.constants_conductor, n.max(1)), ..self.clone() }
    }

    pub fn with_transcendentals(&self, count: u32) -> Self {
        DiffField { transcendentals: self.transcendentals + count, ..self.clone() }
    }

    pub fn apply_sigma(&self, f: &Elem) -> Elem {
        self.sigma.apply(f, 1)
    }

    pub fn apply_sigma_power(&self, f: &Elem, j: i64) -> Elem {
        self.sigma.apply(f, j)
    }

    /// `sigma(f) = f`; on reduced forms this is exactly "no `x` occurs".
    pub fn is_constant(&self, f: &Elem) -> bool {
        f.is_constant()
    }

    /// `sigma^{s-1}(f) ... sigma(f) f`.
    pub fn sigma_product(&self, f: &Elem, s: i64) -> Elem {
        (0..s).fold(Elem::one(), |acc, j| acc.mul(&self.apply_sigma_power(f, j)))
    }

    pub fn constants_description(&self) -> String {
        let base = if self.constants_conductor <= 2 {
            "Q".to_string()
        } else {
            format!("Q(zeta({}))", self.constants_conductor)
        };
        if self.transcendentals == 0 {
            base
        } else {
            let ts: Vec<String> = (1..=self.transcendentals).map(|i| format!("t{i}")).collect();
            format!("{base}({})", ts.join(", "))
        }
    }
}

/// Largest `j >= 0` with `gcd(p, sigma^j r)` nontrivial, `None` when no such
/// `j` exists. For the q-dilation, factors of `x` are ignored since they meet
/// at every `j`.
pub fn dispersion(p: &CPoly, r: &CPoly, sigma: &SigmaSpec) -> Option<u64> {
    dispersion_set(p, r, sigma).into_iter().max()
}

/// Every `j >= 0` at which `p` and `sigma^j r` share a root.
pub fn dispersion_set(p: &CPoly, r: &CPoly, sigma: &SigmaSpec) -> Vec<u64> {
    match sigma {
        SigmaSpec::Shift { step } => shift_dispersion_set(p, r, *step),
        SigmaSpec::QShift { q } => q_dispersion_set(p, r, q),
    }
}

fn shift_dispersion_set(p: &CPoly, r: &CPoly, step: i64) -> Vec<u64> {
    if p.is_constant() || r.is_constant() {
        return Vec::new();
    }
    // resultant in x of p(x) and r(x + h), a polynomial in h
    type R = RatFunc<Constant>;
    let lift = |c: &Constant| R::from_const(c.clone());
    let pl: Poly<R> = p.map(lift);
    let rl: Poly<R> = r.map(lift).substitute_shift(&R::x());
    let res = pl.resultant(&rl).expect("nonconstant inputs");
    let mut out: Vec<u64> = res
        .num()
        .integer_roots_any()
        .into_iter()
        .filter(|&h| h >= 0 && h % step == 0)
        .map(|h| (h / step) as u64)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn strip_x(p: &CPoly) -> CPoly {
    match p.trailing() {
        Some((k, _)) => Poly::new(p.coeffs()[k..].to_vec()),
        None => p.clone(),
    }
}

fn q_dispersion_set(p: &CPoly, r: &CPoly, q: &CycloNum) -> Vec<u64> {
    let p = strip_x(p);
    let r = strip_x(r);
    if p.is_constant() || r.is_constant() {
        return Vec::new();
    }
    let bound = q_dispersion_bound(&p, &r, q).unwrap_or(64);
    let sigma = SigmaSpec::QShift { q: q.clone() };
    (0..=bound).filter(|&j| !p.gcd(&sigma.apply_poly(&r, j as i64)).is_constant()).collect()
}

/// Root-modulus bound on `j`: a common root forces `|q|^j = |beta| / |alpha|`
/// for roots `alpha` of `p` and `beta` of `r` under every complex embedding.
fn q_dispersion_bound(p: &CPoly, r: &CPoly, q: &CycloNum) -> Option<u64> {
    let cyc = |c: &Constant| c.as_cyclo().cloned();
    let pc: Option<Vec<CycloNum>> = p.coeffs().iter().map(cyc).collect();
    let rc: Option<Vec<CycloNum>> = r.coeffs().iter().map(cyc).collect();
    let (pc, rc) = (pc?, rc?);
    let n = pc.iter().chain(&rc).fold(q.conductor(), |acc, c| num_integer::lcm(acc, c.conductor()));
    let mut best: Option<u64> = None;
    for k in (1..=n).filter(|k| num_integer::gcd(*k, n) == 1) {
        let at = |c: &CycloNum| {
            let (re, im) = c.embed_at(n, k);
            (re * re + im * im).sqrt()
        };
        let qa = at(q);
        if (qa - 1.0).abs() < 1e-9 {
            continue;
        }
        let (plo, phi) = root_modulus_range(&pc.iter().map(at).collect::<Vec<_>>());
        let (rlo, rhi) = root_modulus_range(&rc.iter().map(at).collect::<Vec<_>>());
        // |q|^j lies in [rlo / phi, rhi / plo]
        let ratio = if qa > 1.0 { rhi / plo } else { rlo / phi };
        let j = (ratio.ln() / qa.ln()).abs().ceil() + 1.0;
        if j.is_finite() {
            let j = j as u64;
            best = Some(best.map_or(j, |b| b.min(j)));
        }
    }
    best
}

/// Cauchy bounds on the moduli of the nonzero roots.
fn root_modulus_range(mods: &[f64]) -> (f64, f64) {
    let n = mods.len() - 1;
    let lead = mods[n];
    let upper = 1.0 + mods[..n].iter().map(|m| m / lead).fold(0.0, f64::max);
    let tail = mods[0];
    let lower = 1.0 / (1.0 + mods[1..].iter().map(|m| m / tail).fold(0.0, f64::max));
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> CPoly {
        CPoly::from_ints(c)
    }

    fn x() -> Elem {
        Elem::x()
    }

    #[test]
    fn sigma_examples() {
        let k = DiffField::shift();
        assert_eq!(k.apply_sigma(&x()), x().add(&Elem::one()));
        let kq = DiffField::qshift(CycloNum::from_int(2)).unwrap();
        assert_eq!(kq.apply_sigma(&x().mul(&x())), x().mul(&x()).mul(&Elem::from_i64(4)));
        assert_eq!(kq.apply_sigma(&Elem::from_i64(3)), Elem::from_i64(3));
        assert_eq!(k.apply_sigma_power(&x(), -1), x().sub(&Elem::one()));
        assert_eq!(k.apply_sigma_power(&x(), 3), x().add(&Elem::from_i64(3)));
        assert_eq!(kq.apply_sigma_power(&x(), -2), x().div(&Elem::from_i64(4)).unwrap());
    }

    #[test]
    fn constancy() {
        let k = DiffField::shift();
        assert!(k.is_constant(&Elem::from_rational(&num_rational::BigRational::new(5.into(), 7.into()))));
        assert!(!k.is_constant(&x()));
        let two_x_two = x().mul(&Elem::from_i64(2)).add(&Elem::from_i64(2));
        assert!(k.is_constant(&two_x_two.div(&two_x_two).unwrap()));
    }

    #[test]
    fn invalid_q_rejected() {
        assert!(SigmaSpec::qshift(CycloNum::from_int(0)).is_err());
        assert!(SigmaSpec::qshift(CycloNum::from_int(-1)).is_err());
        assert!(SigmaSpec::qshift(CycloNum::zeta(5)).is_err());
        assert!(SigmaSpec::qshift(CycloNum::from_int(2)).is_ok());
    }

    #[test]
    fn shift_dispersion_examples() {
        let s = SigmaSpec::shift();
        assert_eq!(dispersion(&p(&[0, 1]), &p(&[-3, 1]), &s), Some(3));
        assert_eq!(dispersion(&p(&[0, 1]), &p(&[1, 1]), &s), None);
        // x(x-2) against itself: 0 and 2
        let f = p(&[0, -2, 1]);
        assert_eq!(dispersion_set(&f, &f, &s), vec![0, 2]);
    }

    #[test]
    fn q_dispersion_follows_the_gcd_definition() {
        let s = SigmaSpec::qshift(CycloNum::from_int(2)).unwrap();
        // gcd(x - 1, 2^j x - 4) is nontrivial at j = 2
        assert_eq!(dispersion(&p(&[-1, 1]), &p(&[-4, 1]), &s), Some(2));
        // the reverse orientation would need j = -2
        assert_eq!(dispersion(&p(&[-4, 1]), &p(&[-1, 1]), &s), None);
        // shared factors of x are ignored
        assert_eq!(dispersion(&p(&[0, 1]), &p(&[0, 1]), &s), None);
    }
}
