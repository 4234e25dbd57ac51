use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact field arithmetic shared by every coefficient domain in the crate.
///
/// Method names deliberately mirror `std::ops` but take `&self`, so generic
/// code never has to restate higher-ranked operator bounds.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &BigRational) -> Self;
    /// The element as a rational number, if it is one.
    fn to_rational(&self) -> Option<BigRational>;

    /// Rational polynomials whose common integer roots are exactly the integer
    /// roots of the polynomial with coefficients `coeffs` (low to high).
    fn integer_root_components(coeffs: &[Self]) -> Vec<Vec<BigRational>>;

    /// An `n`-th root inside the field, when one can be exhibited.
    fn nth_root(&self, n: u32) -> Option<Self> {
        if n == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        let r = self.to_rational()?;
        rational_nth_root(&r, n).map(|r| Self::from_rational(&r))
    }

    /// True when the printed form needs no parentheses as a factor.
    fn is_atomic(&self) -> bool {
        true
    }

    /// True when the printed form starts with a minus sign that the printer
    /// may pull out as a term separator.
    fn is_negative(&self) -> bool {
        self.to_rational().map_or(false, |r| Signed::is_negative(&r))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Integer power; negative exponents invert, `None` for `0^(-k)`.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn integer_root_components(coeffs: &[Self]) -> Vec<Vec<BigRational>> {
        vec![coeffs.to_vec()]
    }
}

/// Exact `n`-th root of a rational number, if it exists.
pub fn rational_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if n == 0 {
        return None;
    }
    if Signed::is_negative(r) {
        if n % 2 == 0 {
            return None;
        }
        return rational_nth_root(&-r, n).map(|x| -x);
    }
    let num = integer_nth_root(r.numer(), n)?;
    let den = integer_nth_root(r.denom(), n)?;
    Some(BigRational::new(num, den))
}

fn integer_nth_root(v: &BigInt, n: u32) -> Option<BigInt> {
    let root = v.nth_root(n);
    if num_traits::pow(root.clone(), n as usize) == *v {
        Some(root)
    } else {
        None
    }
}

/// All integer roots of a rational polynomial (coefficients low to high).
/// The zero polynomial has no well-defined finite root set and yields `None`.
pub fn rational_poly_integer_roots(coeffs: &[BigRational]) -> Option<Vec<BigInt>> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().map_or(false, |x| Zero::is_zero(x)) {
        c.pop();
    }
    if c.is_empty() {
        return None;
    }
    // clear denominators
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|x| !x.is_zero()).unwrap();
    if low > 0 {
        roots.push(BigInt::zero());
    }
    let trimmed = &ints[low..];
    if trimmed.len() == 1 {
        return Some(roots);
    }
    let constant = trimmed[0].abs();
    for d in divisors(&constant) {
        for cand in [d.clone(), -d] {
            if eval_int(trimmed, &cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Integer roots common to every component polynomial; zero components impose
/// no constraint. `None` means every integer is a root (all components zero).
pub fn common_integer_roots(components: &[Vec<BigRational>]) -> Option<Vec<i64>> {
    let mut acc: Option<Vec<BigInt>> = None;
    for comp in components {
        if let Some(roots) = rational_poly_integer_roots(comp) {
            acc = Some(match acc {
                None => roots,
                Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
            });
        }
    }
    acc.map(|v| v.iter().filter_map(|r| r.to_i64()).collect())
}
