use crate::arith::{Constant, Elem, Field};
use crate::difference::DiffField;
use crate::error::{PvError, Result};
use crate::lattice::{hnf, IVec};
use crate::solve::{relation_lattice, solve_add, solve_mult, torsion_order};

use super::decompose::decompose;
use super::invariants::{compute_ell, compute_m};
use super::{DiffSystem, IdealData, PVPresentation, Shape, SigmaIdeal};

pub const DEFAULT_M_MAX: u32 = 12;
pub const DEFAULT_DEGREE_BOUND: u32 = 6;

fn check_stable(sys: &DiffSystem, ideal: &SigmaIdeal) -> Result<()> {
    let names = sys.var_names();
    for g in &ideal.generators {
        let image = ideal.normal_form(&sys.apply_sigma(g));
        if !image.is_zero() {
            return Err(PvError::NotSigmaStable(format!(
                "sigma({}) reduces to {}",
                g.fmt_with(&names),
                image.fmt_with(&names)
            )));
        }
    }
    Ok(())
}

fn assemble(system: DiffSystem, ideal: SigmaIdeal, search_bound: u32, partial: bool) -> Result<PVPresentation> {
    check_stable(&system, &ideal)?;
    let krull_dim = match &ideal.data {
        IdealData::Binomial { lattice, .. } => system.nvars() - lattice.rank(),
        IdealData::Unipotent { u } => usize::from(u.is_none()),
    };
    let ell = compute_ell(&ideal);
    let mut p = PVPresentation {
        system,
        ideal,
        ell,
        m_inv: 1,
        krull_dim,
        constants_ext_degree: 1,
        idempotents: None,
        search_bound,
        partial,
    };
    p.m_inv = compute_m(&p)?;
    p.idempotents = decompose(&p).ok().map(|cs| cs.into_iter().map(|c| c.idempotent).collect());
    Ok(p)
}

fn nonzero(a: &[Elem]) -> Result<()> {
    if a.iter().any(|f| f.is_zero()) {
        Err(PvError::ZeroInput)
    } else {
        Ok(())
    }
}

/// `sigma(y) = a y`: the ideal is `(Y^m - g)` for the torsion order `m` of
/// `a`, or `(0)` when no power up to `m_max` is a sigma-quotient.
pub fn build_pv_scalar(sys: &DiffSystem, m_max: u32) -> Result<PVPresentation> {
    let Shape::Scalar(a) = &sys.shape else {
        return Err(PvError::UnsupportedShape("expected a scalar system".into()));
    };
    nonzero(std::slice::from_ref(a))?;
    let rels = match torsion_order(&sys.field, a, m_max)? {
        Some(cert) => vec![(vec![cert.order as i64], cert.witness)],
        None => Vec::new(),
    };
    assemble(sys.clone(), SigmaIdeal::binomial(1, &rels)?, m_max, false)
}

/// Diagonal systems: one binomial `Y^v - g` per Hermite row of the relation
/// lattice of the diagonal entries.
pub fn build_pv_diagonal(sys: &DiffSystem, m_max: u32) -> Result<PVPresentation> {
    let Shape::Diagonal(a) = &sys.shape else {
        return Err(PvError::UnsupportedShape("expected a diagonal system".into()));
    };
    nonzero(a)?;
    let basis = relation_lattice(&sys.field, a, m_max)?;
    assemble(sys.clone(), SigmaIdeal::binomial(a.len(), &basis.rows)?, m_max, false)
}

/// `A = [[1, b], [0, 1]]` with fundamental matrix `[[1, u], [0, 1]]`,
/// `sigma(u) = u + b`.
pub fn build_pv_unipotent(sys: &DiffSystem, m_max: u32) -> Result<PVPresentation> {
    let Shape::Unipotent2(b) = &sys.shape else {
        return Err(PvError::UnsupportedShape("expected a unipotent system".into()));
    };
    let u = solve_add(&sys.field, b);
    assemble(sys.clone(), SigmaIdeal::unipotent(u), m_max, false)
}

pub fn build_pv(sys: &DiffSystem, m_max: u32) -> Result<PVPresentation> {
    match sys.shape {
        Shape::Scalar(_) => build_pv_scalar(sys, m_max),
        Shape::Diagonal(_) => build_pv_diagonal(sys, m_max),
        Shape::Unipotent2(_) => build_pv_unipotent(sys, m_max),
    }
}

/// Bounded simplicity test for torus shapes: a proper sigma-ideal strictly
/// containing `q` would contain a binomial `Y^v - g` with `v` outside the
/// lattice of `q`, and such `v` has `prod a^v` a sigma-quotient. Relations
/// are sought in the box of radius `degree_bound`.
pub fn check_simple(p: &PVPresentation, degree_bound: u32) -> Result<bool> {
    let Some(a) = p.system.characters() else {
        return Err(PvError::UnsupportedShape("simplicity is checked for scalar and diagonal systems".into()));
    };
    let found = relation_lattice(&p.system.field, &a, degree_bound)?;
    let own = hnf(&p.ideal.lattice_rows(), a.len());
    Ok(found.rows.iter().all(|(v, _)| own.contains(v)))
}

/// `[[a, b], [0, a]]` with `a = sigma(g)/g` becomes the unipotent system
/// `[[1, b/a], [0, 1]]` after the gauge `Y = g Z`; returns `g` and that
/// system.
pub fn reduce_triangular(field: &DiffField, a: &Elem, b: &Elem) -> Result<(Elem, DiffSystem)> {
    if a.is_zero() {
        return Err(PvError::ZeroInput);
    }
    match solve_mult(field, a)? {
        Some(sol) => Ok((sol.witness, DiffSystem::unipotent(field.clone(), b.div(a).expect("a nonzero")))),
        None => Err(PvError::UnsupportedShape(format!(
            "[[a, b], [0, a]] needs a = sigma(g)/g; a = {a} is not"
        ))),
    }
}

impl PVPresentation {
    /// Presentation with a prescribed binomial ideal; `partial` records
    /// whether the bounded simplicity check failed.
    pub fn from_binomials(system: &DiffSystem, relations: &[(IVec, Elem)], search_bound: u32) -> Result<Self> {
        let ideal = SigmaIdeal::binomial(system.nvars(), relations)?;
        let mut p = assemble(system.clone(), ideal, search_bound, false)?;
        p.partial = !check_simple(&p, search_bound)?;
        Ok(p)
    }

    /// The same ring for another fundamental matrix: witnesses multiplied by
    /// `c` (torus shapes) or the additive solution moved by `c` (unipotent).
    pub fn rescaled(&self, c: &Constant) -> Result<Self> {
        if c.is_zero() {
            return Err(PvError::ZeroScale);
        }
        let cc = Elem::from_const(c.clone());
        let ideal = match &self.ideal.data {
            IdealData::Binomial { .. } => {
                let rels: Vec<(IVec, Elem)> = self.ideal.relations().into_iter().map(|(v, g)| (v, g.mul(&cc))).collect();
                SigmaIdeal::binomial(self.ideal.nvars, &rels)?
            }
            IdealData::Unipotent { u } => SigmaIdeal::unipotent(u.as_ref().map(|f| f.add(&cc))),
        };
        assemble(self.system.clone(), ideal, self.search_bound, self.partial)
    }

    /// Rebuilds the same generators over an enlarged base field.
    pub fn over_field(&self, field: DiffField) -> Result<Self> {
        let system = self.system.with_field(field);
        let mut p = assemble(system, self.ideal.clone(), self.search_bound, self.partial)?;
        if p.system.characters().is_some() {
            p.partial = !check_simple(&p, self.search_bound)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloNum;
    use crate::pv::RPoly;

    fn c(n: i64) -> Elem {
        Elem::from_i64(n)
    }
    fn x() -> Elem {
        Elem::x()
    }
    fn shift() -> DiffField {
        DiffField::shift()
    }

    #[test]
    fn scalar_examples() {
        let p = build_pv_scalar(&DiffSystem::scalar(shift(), c(-1)), 12).unwrap();
        assert_eq!(p.generator_strings(), vec!["Y^2 - 1"]);
        assert_eq!((p.ell, p.krull_dim), (2, 0));

        let a = x().add(&c(1)).div(&x()).unwrap();
        let p = build_pv_scalar(&DiffSystem::scalar(shift(), a), 12).unwrap();
        assert_eq!(p.generator_strings(), vec!["Y - x"]);
        assert_eq!((p.ell, p.m_inv, p.krull_dim), (1, 1, 0));

        let p = build_pv_scalar(&DiffSystem::scalar(shift(), x()), 12).unwrap();
        assert!(p.ideal.generators.is_empty());
        assert_eq!((p.ell, p.m_inv, p.krull_dim), (1, 1, 1));

        assert_eq!(build_pv_scalar(&DiffSystem::scalar(shift(), c(0)), 12), Err(PvError::ZeroInput));
    }

    #[test]
    fn square_root_example() {
        let k = DiffField::qshift(CycloNum::from_int(2)).unwrap();
        let p = build_pv_scalar(&DiffSystem::scalar(k, c(-2)), 12).unwrap();
        assert_eq!(p.generator_strings(), vec!["Y^2 - x^2"]);
        assert_eq!((p.ell, p.m_inv), (2, 2));
    }

    #[test]
    fn diagonal_examples() {
        let ratio = x().add(&c(1)).div(&x()).unwrap();
        let p = build_pv_diagonal(&DiffSystem::diagonal(shift(), vec![c(-1), ratio.neg()]), 12).unwrap();
        assert_eq!(p.generator_strings(), vec!["Y1*Y2 - x", "Y2^2 - x^2"]);
        assert_eq!(p.krull_dim, 0);
        // the other basis of the same ideal: Y1/Y2 - 1/x and Y1^2 - 1
        let quotient = RPoly::monomial(vec![1, -1], Elem::one()).sub(&RPoly::constant(2, x().inv().unwrap()));
        let square = RPoly::monomial(vec![2, 0], Elem::one()).sub(&RPoly::one(2));
        assert!(p.ideal.contains(&quotient) && p.ideal.contains(&square));

        let a = vec![x(), x()];
        let p = build_pv_diagonal(&DiffSystem::diagonal(shift(), a), 12).unwrap();
        assert_eq!(p.generator_strings(), vec!["Y1*Y2^-1 - 1"]);
        assert_eq!(p.krull_dim, 1);

        let k = DiffField::qshift(CycloNum::from_int(5)).unwrap();
        let p = build_pv_diagonal(&DiffSystem::diagonal(k, vec![c(2), c(3)]), 12).unwrap();
        assert!(p.ideal.generators.is_empty());
        assert_eq!(p.krull_dim, 2);
    }

    #[test]
    fn unipotent_examples() {
        let k = DiffField::qshift(CycloNum::from_int(2)).unwrap();
        let p = build_pv_unipotent(&DiffSystem::unipotent(k, c(1)), 12).unwrap();
        assert_eq!((p.ell, p.krull_dim), (1, 1));
        assert!(p.has_unipotent_part());

        let p = build_pv_unipotent(&DiffSystem::unipotent(shift(), c(1)), 12).unwrap();
        assert_eq!(p.krull_dim, 0);
        assert!(p.ideal.contains(&RPoly::var(4, 1).sub(&RPoly::constant(4, x()))));

        let p = build_pv_unipotent(&DiffSystem::unipotent(shift(), c(0)), 12).unwrap();
        assert_eq!(p.krull_dim, 0);
    }

    #[test]
    fn simplicity() {
        let p = build_pv_scalar(&DiffSystem::scalar(shift(), c(-1)), 12).unwrap();
        assert!(check_simple(&p, 6).unwrap());
        let wrong = DiffSystem::scalar(shift(), c(1));
        let q = PVPresentation::from_binomials(&wrong, &[(vec![2], c(1))], 6).unwrap();
        assert!(q.partial);
        let p = build_pv_scalar(&DiffSystem::scalar(shift(), x()), 12).unwrap();
        assert!(check_simple(&p, 6).unwrap());
        let u = build_pv_unipotent(&DiffSystem::unipotent(shift(), c(1)), 12).unwrap();
        assert!(matches!(check_simple(&u, 6), Err(PvError::UnsupportedShape(_))));
    }

    #[test]
    fn unstable_ideal_is_rejected() {
        let sys = DiffSystem::scalar(shift(), c(-1));
        let r = PVPresentation::from_binomials(&sys, &[(vec![1], c(1))], 6);
        assert!(matches!(r, Err(PvError::NotSigmaStable(_))));
    }

    #[test]
    fn gauge_invariance_of_invariants() {
        let p = build_pv_scalar(&DiffSystem::scalar(shift(), c(-1)), 12).unwrap();
        let r = p.rescaled(&Constant::from_int(7)).unwrap();
        assert_eq!((r.ell, r.m_inv, r.krull_dim), (p.ell, p.m_inv, p.krull_dim));
    }

    #[test]
    fn triangular_reduction() {
        let a = x().add(&c(1)).div(&x()).unwrap();
        let (g, sys) = reduce_triangular(&shift(), &a, &c(1)).unwrap();
        assert_eq!(g, x());
        assert_eq!(sys.shape, Shape::Unipotent2(x().div(&x().add(&c(1))).unwrap()));
        assert!(matches!(reduce_triangular(&shift(), &x(), &c(1)), Err(PvError::UnsupportedShape(_))));
    }
}
