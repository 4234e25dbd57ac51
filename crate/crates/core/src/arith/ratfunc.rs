use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::field::Field;
use super::poly::Poly;

/// Reduced fraction of polynomials with a monic denominator; zero is `0/1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero_value();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one_poly() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = d.lc();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    /// Like `new` but returns `None` for a zero denominator.
    pub fn try_new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        (!den.is_zero()).then(|| Self::new(num, den))
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_const(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    fn zero_value() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// True when the value does not depend on the variable.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if `is_constant`.
    pub fn as_constant(&self) -> Option<F> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    /// `f(x + c)`.
    pub fn substitute_shift(&self, c: &F) -> Self {
        Self::new(self.num.substitute_shift(c), self.den.substitute_shift(c))
    }

    /// `f(q x)`; `q` must be nonzero.
    pub fn substitute_scale(&self, q: &F) -> Self {
        Self::new(self.num.scale_unchecked(q), self.den.scale_unchecked(q))
    }

    /// Divides by the leading numerator coefficient; zero stays zero.
    pub fn normalized(&self) -> Self {
        match self.num.lc().inv() {
            Some(inv) => RatFunc { num: self.num.scale(&inv), den: self.den.clone() },
            None => self.clone(),
        }
    }

    /// Leading coefficient of the numerator (denominator is monic).
    pub fn leading_coeff(&self) -> F {
        self.num.lc()
    }

    /// Degree at infinity: `deg num - deg den`.
    pub fn degree_at_infinity(&self) -> i64 {
        self.num.deg() - self.den.deg()
    }

    /// Polynomial part (quotient of numerator by denominator).
    pub fn polynomial_part(&self) -> Poly<F> {
        self.num.div_rem(&self.den).0
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.fmt_var(var);
        }
        let n = self.num.fmt_var(var);
        let d = self.den.fmt_var(var);
        let wrap_n = self.num.term_count() > 1 || (self.num.term_count() == 1 && !self.num.lc().is_atomic());
        let wrap_d = self.den.term_count() > 1 || d.contains('*') || d.contains('^');
        let n = if wrap_n { format!("({n})") } else { n };
        let d = if wrap_d { format!("({d})") } else { d };
        format!("{n}/{d}")
    }

    pub fn term_count(&self) -> usize {
        self.num.term_count() + if self.den.is_constant() { 0 } else { self.den.term_count() }
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl<F: Field> IsOnePoly for Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.coeff(0).is_one()
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_one_poly() && self.num.is_one_poly()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        Self::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_value();
        }
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::from_const(F::from_rational(r))
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.as_constant()?.to_rational()
    }
    fn integer_root_components(coeffs: &[Self]) -> Vec<Vec<BigRational>> {
        // clear denominators, then split by powers of the variable
        let common = coeffs.iter().fold(Poly::<F>::one(), |acc, c| {
            let g = acc.gcd(c.den());
            &acc * &c.den().div_exact(&g).expect("gcd divides")
        });
        let polys: Vec<Poly<F>> = coeffs
            .iter()
            .map(|c| &c.num * &common.div_exact(&c.den).expect("lcm is a multiple"))
            .collect();
        let top = polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let mut out = Vec::new();
        for i in 0..top {
            let column: Vec<F> = polys.iter().map(|p| p.coeff(i)).collect();
            out.extend(F::integer_root_components(&column));
        }
        out
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        if n == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        let c = self.num.lc();
        let croot = c.nth_root(n)?;
        let num = self.num.scale(&c.inv()?).nth_root_monic(n)?;
        let den = self.den.nth_root_monic(n)?;
        Some(Self::new(num.scale(&croot), den))
    }
    fn is_atomic(&self) -> bool {
        self.den.is_constant() && self.num.term_count() <= 1 && self.num.lc().is_atomic()
    }
    fn is_negative(&self) -> bool {
        self.den.is_constant() && self.num.term_count() == 1 && self.num.lc().is_negative()
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

macro_rules! ratfunc_op {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<F: Field> $tr for &RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: &RatFunc<F>) -> RatFunc<F> {
                $body(self, rhs)
            }
        }
        impl<F: Field> $tr for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: RatFunc<F>) -> RatFunc<F> {
                $body(&self, &rhs)
            }
        }
    };
}
ratfunc_op!(Add, add, |a: &RatFunc<F>, b: &RatFunc<F>| Field::add(a, b));
ratfunc_op!(Sub, sub, |a: &RatFunc<F>, b: &RatFunc<F>| Field::sub(a, b));
ratfunc_op!(Mul, mul, |a: &RatFunc<F>, b: &RatFunc<F>| Field::mul(a, b));
ratfunc_op!(Div, div, |a: &RatFunc<F>, b: &RatFunc<F>| Field::div(a, b).expect("division by zero"));

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        Field::neg(self)
    }
}
