//! Constants fields `Q(zeta_N)(t_1, ..., t_k)`: a cyclotomic base with a tower
//! of adjoined transcendental constants.
//!
//! A level-`k` element is a rational function in `t_k` whose coefficients live
//! at lower levels. Values that do not involve `t_k` are always demoted, so
//! equality stays structural.

use std::fmt;

use num_rational::BigRational;

use super::cyclo::CycloNum;
use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq)]
pub enum Constant {
    Base(CycloNum),
    Ext { level: u32, value: Box<RatFunc<Constant>> },
}

impl Constant {
    pub fn from_int(n: i64) -> Self {
        Constant::Base(CycloNum::from_int(n))
    }

    pub fn zeta(n: u32) -> Self {
        Constant::Base(CycloNum::zeta(n))
    }

    /// The transcendental symbol `t_level`, `level >= 1`.
    pub fn symbol(level: u32) -> Self {
        assert!(level >= 1, "transcendental levels start at 1");
        Constant::Ext { level, value: Box::new(RatFunc::x()) }
    }

    pub fn level(&self) -> u32 {
        match self {
            Constant::Base(_) => 0,
            Constant::Ext { level, .. } => *level,
        }
    }

    pub fn as_cyclo(&self) -> Option<&CycloNum> {
        match self {
            Constant::Base(c) => Some(c),
            Constant::Ext { .. } => None,
        }
    }

    /// Conductor of the cyclotomic part that this value touches.
    pub fn conductor(&self) -> u32 {
        match self {
            Constant::Base(c) => c.conductor(),
            Constant::Ext { value, .. } => value
                .num()
                .coeffs()
                .iter()
                .chain(value.den().coeffs())
                .map(|c| c.conductor())
                .fold(1, num_integer::lcm),
        }
    }

    fn as_ratfunc(&self, level: u32) -> RatFunc<Constant> {
        match self {
            Constant::Ext { level: l, value } if *l == level => (**value).clone(),
            _ => {
                debug_assert!(self.level() < level);
                RatFunc::from_const(self.clone())
            }
        }
    }

    fn demote(level: u32, r: RatFunc<Constant>) -> Self {
        match r.as_constant() {
            Some(c) => c,
            None => Constant::Ext { level, value: Box::new(r) },
        }
    }

    fn binary(&self, other: &Self, op: impl Fn(&RatFunc<Constant>, &RatFunc<Constant>) -> RatFunc<Constant>) -> Self {
        let level = self.level().max(other.level());
        let r = op(&self.as_ratfunc(level), &other.as_ratfunc(level));
        Self::demote(level, r)
    }
}

impl From<CycloNum> for Constant {
    fn from(c: CycloNum) -> Self {
        Constant::Base(c)
    }
}

impl Field for Constant {
    fn zero() -> Self {
        Constant::Base(CycloNum::zero())
    }
    fn one() -> Self {
        Constant::Base(CycloNum::one())
    }
    fn is_zero(&self) -> bool {
        matches!(self, Constant::Base(c) if c.is_zero())
    }
    fn is_one(&self) -> bool {
        matches!(self, Constant::Base(c) if c.is_one())
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Constant::Base(a), Constant::Base(b)) => Constant::Base(a.add(b)),
            _ => self.binary(other, |a, b| a.add(b)),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Constant::Base(a), Constant::Base(b)) => Constant::Base(a.mul(b)),
            _ => self.binary(other, |a, b| a.mul(b)),
        }
    }
    fn neg(&self) -> Self {
        match self {
            Constant::Base(c) => Constant::Base(c.neg()),
            Constant::Ext { level, value } => Constant::Ext { level: *level, value: Box::new(value.neg()) },
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            Constant::Base(c) => c.inv().map(Constant::Base),
            Constant::Ext { level, value } => value.inv().map(|v| Self::demote(*level, v)),
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Constant::Base(CycloNum::rational(r.clone()))
    }
    fn to_rational(&self) -> Option<BigRational> {
        match self {
            Constant::Base(c) => c.to_rational(),
            Constant::Ext { .. } => None,
        }
    }
    fn integer_root_components(coeffs: &[Self]) -> Vec<Vec<BigRational>> {
        let level = coeffs.iter().map(|c| c.level()).max().unwrap_or(0);
        if level == 0 {
            let base: Vec<CycloNum> = coeffs.iter().map(|c| c.as_cyclo().cloned().expect("level 0")).collect();
            return CycloNum::integer_root_components(&base);
        }
        let lifted: Vec<RatFunc<Constant>> = coeffs.iter().map(|c| c.as_ratfunc(level)).collect();
        RatFunc::<Constant>::integer_root_components(&lifted)
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        match self {
            Constant::Base(c) => c.nth_root(n).map(Constant::Base),
            Constant::Ext { level, value } => value.nth_root(n).map(|v| Self::demote(*level, v)),
        }
    }
    fn is_atomic(&self) -> bool {
        match self {
            Constant::Base(c) => c.is_atomic(),
            Constant::Ext { value, .. } => value.is_atomic(),
        }
    }
    fn is_negative(&self) -> bool {
        match self {
            Constant::Base(c) => c.is_negative(),
            Constant::Ext { value, .. } => value.is_negative(),
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::Base(c) => write!(f, "{c}"),
            Constant::Ext { level, value } => f.write_str(&value.fmt_var(&format!("t{level}"))),
        }
    }
}

/// Polynomial in `t_level` with lower-level coefficients, as a constant.
pub fn constant_from_poly(level: u32, p: Poly<Constant>) -> Constant {
    Constant::demote(level, RatFunc::from_poly(p))
}
