//! Sparse Laurent polynomials in a fixed number of variables.

use std::collections::BTreeMap;

use crate::arith::Field;
use crate::lattice::IVec;

#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<F: Field> {
    nvars: usize,
    terms: BTreeMap<IVec, F>,
}

impl<F: Field> Laurent<F> {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exp: IVec, c: F) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { nvars, terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (IVec, F)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&IVec, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// The value when the polynomial has only a constant term.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: IVec, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.nvars);
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: IVec = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Multiplies every exponent vector by the monomial `shift`.
    pub fn shift_exponents(&self, shift: &[i64]) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Laurent<G> {
        Laurent::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Rewrites each term `c Y^e` as `f(e, c)`, summing the results.
    pub fn map_terms(&self, nvars: usize, f: impl Fn(&IVec, &F) -> Laurent<F>) -> Laurent<F> {
        let mut out = Laurent::zero(nvars);
        for (e, c) in &self.terms {
            out = out.add(&f(e, c));
        }
        out
    }

    /// Value at a point with all coordinates invertible where needed.
    pub fn eval(&self, point: &[F]) -> Option<F> {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t = t.mul(&x.pow(k)?);
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }

    /// Substitutes polynomials for the variables; exponents must be
    /// nonnegative unless the image of that variable is a monomial.
    pub fn substitute(&self, images: &[Laurent<F>], nvars: usize) -> Laurent<F> {
        let mut out = Laurent::zero(nvars);
        for (e, c) in &self.terms {
            let mut t = Laurent::constant(nvars, c.clone());
            for (img, &k) in images.iter().zip(e) {
                let factor = if k >= 0 {
                    img.pow(k as u32)
                } else {
                    img.monomial_inverse().expect("negative exponent needs a monomial image").pow((-k) as u32)
                };
                t = t.mul(&factor);
            }
            out = out.add(&t);
        }
        out
    }

    /// Inverse of a single term.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(e.iter().map(|x| -x).collect(), c.inv()?))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> IVec {
        let mut m = vec![0; self.nvars];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.terms.keys().map(|e| e[i]).min().unwrap_or(0);
        }
        m
    }

    /// Highest term in the lexicographic exponent order.
    pub fn leading(&self) -> Option<(&IVec, &F)> {
        self.terms.iter().next_back()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k != 0)
                .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let mono = mono.join("*");
            let coeff = if mag.is_atomic() { mag.to_string() } else { format!("({mag})") };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{coeff}*{mono}"));
            }
        }
        out
    }
}

/// Names `prefix`, or `prefix1..prefixN` when there are several variables.
pub fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    if n == 1 {
        vec![prefix.to_string()]
    } else {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }
}

/// Entry names of a 2x2 matrix of variables.
pub fn matrix_names(prefix: &str) -> Vec<String> {
    ["11", "12", "21", "22"].iter().map(|s| format!("{prefix}{s}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = Laurent<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_printing() {
        let y = L::var(1, 0);
        let p = y.mul(&y).sub(&L::one(1));
        assert_eq!(p.fmt_with(&indexed_names("Y", 1)), "Y^2 - 1");
        let y1 = L::var(2, 0);
        let y2inv = L::var(2, 1).monomial_inverse().unwrap();
        let m = y1.mul(&y2inv).sub(&L::constant(2, q(3)));
        assert_eq!(m.fmt_with(&indexed_names("Y", 2)), "Y1*Y2^-1 - 3");
        assert_eq!(m.eval(&[q(6), q(2)]), Some(q(0)));
    }

    #[test]
    fn substitution() {
        // (Y1 + Y2)^2 at Y1 -> Y1 Y2, Y2 -> 1
        let p = L::var(2, 0).add(&L::var(2, 1)).pow(2);
        let img = vec![L::var(2, 0).mul(&L::var(2, 1)), L::one(2)];
        let s = p.substitute(&img, 2);
        assert_eq!(s.coeff(&[2, 2]), q(1));
        assert_eq!(s.coeff(&[1, 1]), q(2));
        assert_eq!(s.coeff(&[0, 0]), q(1));
    }
}
