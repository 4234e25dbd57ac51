//! Difference Galois groups of built presentations: the coordinate ideal of
//! the group functor, lattice-based identification, base change and the
//! comparison checks.

mod connection;
mod functor;

pub use connection::{connection_matrix_check, ConstMatrix, SolutionMatrix};
pub use functor::{functor_ideal, CoordIdeal};

use crate::arith::{Constant, Field};
use crate::error::{PvError, Result};
use crate::laurent::Laurent;
use crate::lattice::snf;
use crate::pv::{IdealData, PVPresentation};

/// Structure of the group as a subgroup of a torus, possibly times `G_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupDesc {
    pub torus_rank: usize,
    pub finite_orders: Vec<i64>,
    pub unipotent_dim: usize,
    /// Absent when the functor construction does not apply.
    pub coordinate_ideal: Option<CoordIdeal>,
    pub defined_over_conductor: u32,
    /// True when no new constants appear and the presentation is complete,
    /// the setting in which the lattice group is the Galois group.
    pub hypotheses_hold: bool,
    pub caveat: Option<String>,
}

impl GroupDesc {
    pub fn dim(&self) -> usize {
        self.torus_rank + self.unipotent_dim
    }

    /// Short name: `1`, `Z/2Z`, `Gm^1 x Z/3Z`, `Ga`, ...
    pub fn name(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.torus_rank > 0 {
            parts.push(format!("Gm^{}", self.torus_rank));
        }
        parts.extend(self.finite_orders.iter().map(|d| format!("Z/{d}Z")));
        if self.unipotent_dim > 0 {
            parts.push("Ga".to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }

    fn same_structure(&self, other: &GroupDesc) -> bool {
        self.torus_rank == other.torus_rank
            && self.finite_orders == other.finite_orders
            && self.unipotent_dim == other.unipotent_dim
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantsExtensionDesc {
    AdjoinRootOfUnity(u32),
    AdjoinTranscendental(u32),
}

impl std::fmt::Display for ConstantsExtensionDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstantsExtensionDesc::AdjoinRootOfUnity(n) => write!(f, "root-of-unity:{n}"),
            ConstantsExtensionDesc::AdjoinTranscendental(n) => write!(f, "transcendental:{n}"),
        }
    }
}

const CAVEAT: &str = "the lattice group is identified with the Galois group only when the constants of the \
                      PV ring agree with those of the base and the relation search is complete";

pub fn identify_group(p: &PVPresentation) -> Result<GroupDesc> {
    let n = p.system.dim();
    let (torus_rank, finite_orders, unipotent_dim) = match &p.ideal.data {
        IdealData::Binomial { lattice, .. } => {
            let s = snf(&lattice.rows, n);
            (n - s.diag.len(), s.diag.iter().copied().filter(|&d| d > 1).collect(), 0)
        }
        IdealData::Unipotent { u } => (0, Vec::new(), usize::from(u.is_none())),
    };
    let coordinate_ideal = match functor_ideal(p) {
        Ok(c) => Some(c),
        Err(PvError::UnsupportedSubstitutionShape(_)) => None,
        Err(e) => return Err(e),
    };
    let hypotheses_hold = p.constants_ext_degree == 1 && !p.partial;
    let desc = GroupDesc {
        torus_rank,
        finite_orders,
        unipotent_dim,
        coordinate_ideal,
        defined_over_conductor: p.system.field.constants_conductor,
        hypotheses_hold,
        caveat: (!hypotheses_hold).then(|| CAVEAT.to_string()),
    };
    assert_eq!(desc.dim(), p.krull_dim, "group dimension must equal the Krull dimension");
    Ok(desc)
}

/// The presentation rebuilt over `k` with enlarged constants, same generators.
pub fn base_change(p: &PVPresentation, ext: ConstantsExtensionDesc) -> Result<PVPresentation> {
    let field = match ext {
        ConstantsExtensionDesc::AdjoinRootOfUnity(n) => p.system.field.with_root_of_unity(n),
        ConstantsExtensionDesc::AdjoinTranscendental(n) => p.system.field.with_transcendentals(n),
    };
    p.over_field(field)
}

/// The coordinate ideal after base change equals the extension of the one
/// before, generator by generator in canonical form.
pub fn group_transport_check(p: &PVPresentation, ext: ConstantsExtensionDesc) -> Result<bool> {
    let before = functor_ideal(p)?;
    let after = functor_ideal(&base_change(p, ext)?)?;
    Ok(before == after)
}

/// Compares two presentations of the same system up to the structure of
/// their groups; different system shapes are an error.
pub fn weak_pv_compare(p: &PVPresentation, weak: &PVPresentation) -> Result<bool> {
    if p.system.shape_name() != weak.system.shape_name() || p.system.dim() != weak.system.dim() {
        return Err(PvError::ShapeMismatch(format!(
            "{} of size {} against {} of size {}",
            p.system.shape_name(),
            p.system.dim(),
            weak.system.shape_name(),
            weak.system.dim()
        )));
    }
    Ok(identify_group(p)?.same_structure(&identify_group(weak)?))
}

/// Points of the predicted group and one point outside it, as `X` values:
/// for each invariant factor `d` at position `i`, `X_j = zeta_d^{V_ji}`
/// lies in the group and `X_j = zeta_{2d}^{V_ji}` does not.
pub fn lattice_test_points(p: &PVPresentation) -> Vec<(Vec<Constant>, bool)> {
    let n = p.system.dim();
    let rows = p.ideal.lattice_rows();
    if !p.ideal.is_binomial() {
        return Vec::new();
    }
    let s = snf(&rows, n);
    let mut out = Vec::new();
    for (i, &d) in s.diag.iter().enumerate() {
        let point = |root: u32| -> Vec<Constant> {
            (0..n).map(|j| Constant::zeta(root).pow(s.v[j][i]).expect("root of unity")).collect()
        };
        out.push((point(d as u32), true));
        out.push((point(2 * d as u32), false));
    }
    out
}

/// Evaluates the coordinate ideal at the test points and compares with the
/// predicted membership.
pub fn functor_lattice_agreement(p: &PVPresentation) -> Result<bool> {
    let ideal = functor_ideal(p)?;
    let vanishes = |pt: &[Constant]| {
        ideal.generators.iter().all(|g: &Laurent<Constant>| g.eval(pt).is_some_and(|v| v.is_zero()))
    };
    Ok(lattice_test_points(p).iter().all(|(pt, member)| vanishes(pt) == *member))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{CycloNum, Elem};
    use crate::difference::DiffField;
    use crate::pv::{build_pv, DiffSystem};

    fn c(n: i64) -> Elem {
        Elem::from_i64(n)
    }

    fn sign() -> PVPresentation {
        build_pv(&DiffSystem::scalar(DiffField::shift(), c(-1)), 12).unwrap()
    }

    #[test]
    fn sign_group() {
        let g = identify_group(&sign()).unwrap();
        assert_eq!((g.torus_rank, g.finite_orders.clone(), g.unipotent_dim), (0, vec![2], 0));
        assert_eq!(g.name(), "Z/2Z");
        assert!(g.hypotheses_hold);
        assert!(functor_lattice_agreement(&sign()).unwrap());
    }

    #[test]
    fn q_logarithm_group() {
        let k = DiffField::qshift(CycloNum::from_int(2)).unwrap();
        let p = build_pv(&DiffSystem::unipotent(k, c(1)), 12).unwrap();
        let g = identify_group(&p).unwrap();
        assert_eq!((g.torus_rank, g.unipotent_dim), (0, 1));
        assert_eq!(g.name(), "Ga");
    }

    #[test]
    fn diagonal_group() {
        let x = Elem::x();
        let a = vec![c(-1), x.add(&c(1)).div(&x).unwrap().neg()];
        let p = build_pv(&DiffSystem::diagonal(DiffField::shift(), a), 12).unwrap();
        let g = identify_group(&p).unwrap();
        assert_eq!((g.torus_rank, g.finite_orders.clone()), (0, vec![2]));
        assert!(functor_lattice_agreement(&p).unwrap());
    }

    #[test]
    fn base_change_keeps_the_group() {
        let p = sign();
        for ext in [ConstantsExtensionDesc::AdjoinRootOfUnity(3), ConstantsExtensionDesc::AdjoinTranscendental(1)] {
            let q = base_change(&p, ext).unwrap();
            assert_eq!(q.ideal.generators, p.ideal.generators);
            assert_eq!((q.ell, q.m_inv, q.krull_dim), (p.ell, p.m_inv, p.krull_dim));
            assert!(group_transport_check(&p, ext).unwrap());
        }
        let q = base_change(&p, ConstantsExtensionDesc::AdjoinTranscendental(1)).unwrap();
        assert_eq!(q.system.field.constants_description(), "Q(t1)");
    }

    #[test]
    fn weak_comparison() {
        let p = sign();
        let ext = base_change(&p, ConstantsExtensionDesc::AdjoinTranscendental(1)).unwrap();
        let weak = ext.rescaled(&Constant::symbol(1)).unwrap();
        assert!(weak_pv_compare(&p, &weak).unwrap());

        let k3 = DiffField::shift().with_root_of_unity(3);
        let mu3 = build_pv(&DiffSystem::scalar(k3, Elem::from_const(Constant::zeta(3))), 12).unwrap();
        assert!(!weak_pv_compare(&p, &mu3).unwrap());

        let uni = build_pv(&DiffSystem::unipotent(DiffField::shift(), c(1)), 12).unwrap();
        assert!(matches!(weak_pv_compare(&p, &uni), Err(PvError::ShapeMismatch(_))));
    }
}
