use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{common_integer_roots, Field};
use super::linalg;
use crate::error::{PvError, Result};

/// Dense univariate polynomial, coefficients low to high, never with a
/// trailing zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, deg: usize) -> Self {
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// Builds from integer coefficients, low to high.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_i64(v)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    /// Lowest-degree nonzero coefficient together with its exponent.
    pub fn trailing(&self) -> Option<(usize, F)> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| (i, self.coeffs[i].clone()))
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let inv = d.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![F::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = rem[i + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(dc));
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quo), Self::new(rem))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(x + c)`.
    pub fn substitute_shift(&self, c: &F) -> Self {
        // Horner in the ring F[x] with x -> x + c
        let lin = Self::new(vec![c.clone(), F::one()]);
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(a.clone());
        }
        acc
    }

    /// `p(q x)`.
    pub fn substitute_scale(&self, q: &F) -> Result<Self> {
        if q.is_zero() {
            return Err(PvError::ZeroScale);
        }
        Ok(self.scale_unchecked(q))
    }

    pub(crate) fn scale_unchecked(&self, q: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul(&pw));
            pw = pw.mul(q);
        }
        Self::new(out)
    }

    /// Sylvester-matrix resultant with the coefficients of `self` in the top
    /// rows, both written from the leading coefficient down.
    pub fn resultant(&self, other: &Self) -> Result<F> {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Err(PvError::ZeroInput);
        };
        if m == 0 && n == 0 {
            return Ok(F::one());
        }
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![F::zero(); size];
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![F::zero(); size];
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        Ok(linalg::determinant(&rows))
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Monic `n`-th root of a monic polynomial, when it exists.
    pub fn nth_root_monic(&self, n: u32) -> Option<Self> {
        let d = self.degree()?;
        if !self.is_monic() || n == 0 || d % n as usize != 0 {
            return None;
        }
        if n == 1 {
            return Some(self.clone());
        }
        let e = d / n as usize;
        let nf = F::from_i64(n as i64);
        let inv_n = nf.inv()?;
        let mut root = vec![F::zero(); e + 1];
        root[e] = F::one();
        for k in 1..=e {
            let partial = Self::new(root.clone()).pow(n);
            let target = self.coeff(d - k);
            let have = partial.coeff(d - k);
            root[e - k] = target.sub(&have).mul(&inv_n);
        }
        let r = Self::new(root);
        (r.pow(n) == *self).then_some(r)
    }

    /// Integer roots; every coefficient must be rational.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(PvError::ZeroInput);
        }
        let rat: Option<Vec<BigRational>> = self.coeffs.iter().map(|c| c.to_rational()).collect();
        let rat = rat.ok_or(PvError::NonRationalCoefficients)?;
        Ok(common_integer_roots(&[rat]).unwrap_or_default())
    }

    /// Integer roots for arbitrary coefficients, splitting the polynomial into
    /// rational components first.
    pub fn integer_roots_any(&self) -> Vec<i64> {
        if self.is_zero() {
            return Vec::new();
        }
        let comps = F::integer_root_components(&self.coeffs);
        common_integer_roots(&comps).unwrap_or_default()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                if mag.is_atomic() {
                    out.push_str(&mag.to_string());
                } else {
                    out.push_str(&format!("({mag})"));
                }
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_atomic() {
                out.push_str(&format!("{mag}*{mono}"));
            } else {
                out.push_str(&format!("({mag})*{mono}"));
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Polynomial over a rational field from a big-integer coefficient list.
pub fn poly_from_bigints<F: Field>(c: &[BigInt]) -> Poly<F> {
    Poly::new(c.iter().map(|v| F::from_rational(&BigRational::from_integer(v.clone()))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1, 1])), p(&[1]));
        assert_eq!(P::zero().gcd(&p(&[4, 2])), p(&[2, 1]));
        assert!(P::zero().gcd(&P::zero()).is_zero());
    }

    #[test]
    fn shift_and_scale() {
        assert_eq!(p(&[0, 0, 1]).substitute_shift(&BigRational::from_integer(1.into())), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 1]).substitute_shift(&BigRational::from_integer((-3).into())), p(&[-3, 1]));
        assert_eq!(p(&[5]).substitute_shift(&BigRational::from_integer(7.into())), p(&[5]));
        let two = BigRational::from_integer(2.into());
        assert_eq!(p(&[0, 0, 0, 1]).substitute_scale(&two).unwrap(), p(&[0, 0, 0, 8]));
        assert_eq!(p(&[1, 1]).substitute_scale(&two).unwrap(), p(&[1, 2]));
        assert_eq!(p(&[3]).substitute_scale(&two).unwrap(), p(&[3]));
        assert_eq!(p(&[1, 1]).substitute_scale(&BigRational::from_integer(0.into())), Err(PvError::ZeroScale));
    }

    #[test]
    fn resultant_sign_convention() {
        let q = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])).unwrap(), q(-1));
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-2, 1])).unwrap(), q(0));
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[0, 1])).unwrap(), q(-1));
        assert_eq!(P::zero().resultant(&p(&[1])), Err(PvError::ZeroInput));
    }

    #[test]
    fn integer_roots_examples() {
        assert_eq!(p(&[2, -3, 1]).integer_roots().unwrap(), vec![1, 2]);
        assert!(p(&[1, 0, 1]).integer_roots().unwrap().is_empty());
        // x(x-5)(2x-1)
        let f = &(&p(&[0, 1]) * &p(&[-5, 1])) * &p(&[-1, 2]);
        assert_eq!(f.integer_roots().unwrap(), vec![0, 5]);
    }

    #[test]
    fn nth_root_of_perfect_power() {
        let base = p(&[3, -2, 1]);
        let cube = base.pow(3);
        assert_eq!(cube.nth_root_monic(3), Some(base));
        assert_eq!(p(&[1, 0, 1]).nth_root_monic(2), None);
        assert_eq!(p(&[1, 2, 1]).nth_root_monic(2), Some(p(&[1, 1])));
    }

    #[test]
    fn printing() {
        assert_eq!(p(&[1, 2, -1]).to_string(), "-x^2 + 2*x + 1");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(P::zero().to_string(), "0");
    }
}
