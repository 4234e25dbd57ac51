//! Elements of cyclotomic fields `Q(zeta_N)`.
//!
//! Every value is stored at its minimal conductor, so structural equality is
//! field equality even across conductors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::field::Field;
use super::linalg;
use super::poly::Poly;

type QPoly = Poly<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloNum {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The `n`-th cyclotomic polynomial, integer coefficients low to high.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut num = vec![BigInt::from(0); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::from(1);
    let mut p: QPoly = super::poly::poly_from_bigints(&num);
    for d in divisors(n) {
        if d < n {
            let phi_d: QPoly = super::poly::poly_from_bigints(&cyclotomic_poly(d));
            p = p.div_exact(&phi_d).expect("cyclotomic factor divides x^n - 1");
        }
    }
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn reduce_mod(coeffs: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = totient(n) as usize;
    if coeffs.len() <= phi {
        let mut c = coeffs;
        c.resize(phi, BigRational::zero());
        return c;
    }
    let modulus: QPoly = super::poly::poly_from_bigints(&cyclotomic_poly(n));
    let (_, r) = QPoly::new(coeffs).div_rem(&modulus);
    let mut c = r.coeffs().to_vec();
    c.resize(phi, BigRational::zero());
    c
}

impl CycloNum {
    pub fn rational(r: BigRational) -> Self {
        CycloNum { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// The primitive root of unity `exp(2 pi i / n)`.
    pub fn zeta(n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut c = vec![BigRational::zero(); n as usize + 1];
        c[1 % n as usize] += BigRational::one();
        if n == 1 {
            return Self::from_int(1);
        }
        Self::from_parts(n, c)
    }

    /// Element `sum coeffs[i] zeta_n^i`, reduced and normalized.
    pub fn from_parts(n: u32, coeffs: Vec<BigRational>) -> Self {
        let c = reduce_mod(coeffs, n);
        Self::normalize(n, c)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients of `self` written in `Q(zeta_m)`, `m` a multiple of the
    /// conductor.
    pub fn lift_coeffs(&self, m: u32) -> Vec<BigRational> {
        assert_eq!(m % self.conductor, 0, "lift target must be a multiple of the conductor");
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut c = vec![BigRational::zero(); step * self.coeffs.len().max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * step] = a.clone();
        }
        reduce_mod(c, m)
    }

    fn normalize(n: u32, coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            return Self::rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero));
        }
        for d in divisors(n) {
            if d == 1 || d == n || d % 4 == 2 {
                continue;
            }
            let phi_d = totient(d) as usize;
            let step = (n / d) as usize;
            // columns: images of zeta_d^i inside Q(zeta_n)
            let cols: Vec<Vec<BigRational>> = (0..phi_d)
                .map(|i| {
                    let mut v = vec![BigRational::zero(); i * step + 1];
                    v[i * step] = BigRational::one();
                    reduce_mod(v, n)
                })
                .collect();
            let rows: Vec<Vec<BigRational>> =
                (0..coeffs.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            if let Some(sol) = linalg::solve(&rows, &coeffs, phi_d) {
                return CycloNum { conductor: d, coeffs: sol };
            }
        }
        CycloNum { conductor: n, coeffs }
    }

    fn common(&self, other: &Self) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lift_coeffs(m), other.lift_coeffs(m))
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// True if some power `q^k`, `1 <= k <= 2 N^2`, equals one.
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = self.conductor.max(2) as u64;
        let bound = 2 * n * n;
        let mut acc = self.clone();
        for _ in 1..=bound {
            if acc.is_one() {
                return true;
            }
            acc = acc.mul(self);
        }
        false
    }

    /// Value under the embedding `zeta_N -> exp(2 pi i k / N)`.
    pub fn embed(&self, k: u32) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(0.0);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) * (i as f64) / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Value under `zeta_n -> exp(2 pi i k / n)` for a multiple `n` of the
    /// conductor.
    pub fn embed_at(&self, n: u32, k: u32) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.lift_coeffs(n).iter().enumerate() {
            let v = c.to_f64().unwrap_or(0.0);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) * (i as f64) / (n as f64);
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Exponents `k` coprime to the conductor, one per complex embedding.
    pub fn embedding_indices(&self) -> Vec<u32> {
        (1..=self.conductor).filter(|k| k.gcd(&self.conductor) == 1).collect()
    }

    fn terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl Field for CycloNum {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }
    fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            return Self::rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let (m, a, b) = self.common(other);
        Self::normalize(m, a.iter().zip(&b).map(|(x, y)| x + y).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            return Self::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        let (m, a, b) = self.common(other);
        let prod = &QPoly::new(a) * &QPoly::new(b);
        Self::from_parts(m, prod.coeffs().to_vec())
    }
    fn neg(&self) -> Self {
        CycloNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            return Some(Self::rational(self.coeffs[0].recip()));
        }
        // extended Euclid against the cyclotomic modulus
        let modulus: QPoly = super::poly::poly_from_bigints(&cyclotomic_poly(self.conductor));
        let (mut r0, mut r1) = (modulus, QPoly::new(self.coeffs.clone()));
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = r0.coeff(0).recip();
        Some(Self::from_parts(self.conductor, t0.scale(&c).coeffs().to_vec()))
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::rational(r.clone())
    }
    fn to_rational(&self) -> Option<BigRational> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }
    fn integer_root_components(coeffs: &[Self]) -> Vec<Vec<BigRational>> {
        let m = coeffs.iter().fold(1u32, |acc, c| acc.lcm(&c.conductor));
        let lifted: Vec<Vec<BigRational>> = coeffs.iter().map(|c| c.lift_coeffs(m)).collect();
        (0..totient(m) as usize)
            .map(|b| lifted.iter().map(|c| c[b].clone()).collect())
            .collect()
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        if n == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        if let Some(r) = self.to_rational() {
            if let Some(root) = super::field::rational_nth_root(&r, n) {
                return Some(Self::rational(root));
            }
        }
        // roots of unity: self = zeta_N^j
        let cond = self.conductor.max(2);
        let order = (1..=2 * cond).find(|&k| self.pow(k as i64).map_or(false, |p| p.is_one()))?;
        let big = order * n;
        let z = Self::zeta(big);
        (0..big).map(|j| z.pow(j as i64).unwrap()).find(|c| c.pow(n as i64).as_ref() == Some(self))
    }
    fn is_atomic(&self) -> bool {
        self.terms() <= 1
    }
    fn is_negative(&self) -> bool {
        if self.conductor == 1 {
            return self.coeffs[0].is_negative();
        }
        self.terms() == 1 && self.coeffs.iter().any(|c| c.is_negative())
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let p = QPoly::new(self.coeffs.clone());
        f.write_str(&p.fmt_var(&format!("zeta({})", self.conductor)))
    }
}
