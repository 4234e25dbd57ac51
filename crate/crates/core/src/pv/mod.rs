//! Picard-Vessiot presentations `R = k[Y, 1/det Y] / q` for scalar, diagonal
//! and unipotent 2x2 systems, with the invariants `ell`, `m` and the Krull
//! dimension, idempotent decompositions and the constant-ideal bijection.

mod build;
mod contract;
mod decompose;
mod ideal;
mod invariants;

pub use build::{
    build_pv, build_pv_diagonal, build_pv_scalar, build_pv_unipotent, check_simple, reduce_triangular,
    DEFAULT_DEGREE_BOUND, DEFAULT_M_MAX,
};
pub use contract::{ideal_contract, ideal_extend, ConstantIdeal, ContractionTrace};
pub use decompose::{decompose, verify_components, Component};
pub use ideal::{IdealData, SigmaIdeal};
pub use invariants::{compute_ell, compute_m, m_product_formula, periodic_lattice};

use crate::arith::{Elem, Field};
use crate::difference::DiffField;
use crate::laurent::{indexed_names, matrix_names, Laurent};

/// Elements of `k[Y, 1/det Y]`.
pub type RPoly = Laurent<Elem>;

/// The matrix `A` of `sigma(Y) = A Y` in one of the supported shapes.
#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Scalar(Elem),
    Diagonal(Vec<Elem>),
    /// `A = [[1, b], [0, 1]]`.
    Unipotent2(Elem),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiffSystem {
    pub field: DiffField,
    pub shape: Shape,
}

impl DiffSystem {
    pub fn scalar(field: DiffField, a: Elem) -> Self {
        DiffSystem { field, shape: Shape::Scalar(a) }
    }

    pub fn diagonal(field: DiffField, a: Vec<Elem>) -> Self {
        DiffSystem { field, shape: Shape::Diagonal(a) }
    }

    pub fn unipotent(field: DiffField, b: Elem) -> Self {
        DiffSystem { field, shape: Shape::Unipotent2(b) }
    }

    /// Size of the matrix `A`.
    pub fn dim(&self) -> usize {
        match &self.shape {
            Shape::Scalar(_) => 1,
            Shape::Diagonal(a) => a.len(),
            Shape::Unipotent2(_) => 2,
        }
    }

    /// Number of indeterminates of the presentation.
    pub fn nvars(&self) -> usize {
        match &self.shape {
            Shape::Unipotent2(_) => 4,
            _ => self.dim(),
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        match &self.shape {
            Shape::Unipotent2(_) => matrix_names("Y"),
            _ => indexed_names("Y", self.dim()),
        }
    }

    /// Diagonal entries for the torus shapes.
    pub fn characters(&self) -> Option<Vec<Elem>> {
        match &self.shape {
            Shape::Scalar(a) => Some(vec![a.clone()]),
            Shape::Diagonal(a) => Some(a.clone()),
            Shape::Unipotent2(_) => None,
        }
    }

    pub fn shape_name(&self) -> &'static str {
        match &self.shape {
            Shape::Scalar(_) => "scalar",
            Shape::Diagonal(_) => "diagonal",
            Shape::Unipotent2(_) => "unipotent",
        }
    }

    /// The matrix `A` itself.
    pub fn matrix(&self) -> Vec<Vec<Elem>> {
        match &self.shape {
            Shape::Unipotent2(b) => vec![vec![Elem::one(), b.clone()], vec![Elem::zero(), Elem::one()]],
            _ => {
                let a = self.characters().expect("torus shape");
                let n = a.len();
                (0..n).map(|i| (0..n).map(|j| if i == j { a[i].clone() } else { Elem::zero() }).collect()).collect()
            }
        }
    }

    /// `sigma` on `k[Y, 1/det Y]`: coefficients by `sigma`, `Y` by `A Y`.
    pub fn apply_sigma(&self, p: &RPoly) -> RPoly {
        let n = self.nvars();
        match &self.shape {
            Shape::Unipotent2(b) => {
                let coeffs = p.map_coeffs(|c| self.field.apply_sigma(c));
                let v = |i| RPoly::var(4, i);
                let images = vec![
                    v(0).add(&v(2).scale(b)),
                    v(1).add(&v(3).scale(b)),
                    v(2),
                    v(3),
                ];
                coeffs.substitute(&images, 4)
            }
            _ => {
                let a = self.characters().expect("torus shape");
                RPoly::from_terms(
                    n,
                    p.terms().map(|(e, c)| {
                        let factor = crate::solve::character_value(&a, e);
                        (e.clone(), self.field.apply_sigma(c).mul(&factor))
                    }),
                )
            }
        }
    }

    pub fn apply_sigma_power(&self, p: &RPoly, j: usize) -> RPoly {
        (0..j).fold(p.clone(), |acc, _| self.apply_sigma(&acc))
    }

    /// Same matrix over another base difference field.
    pub fn with_field(&self, field: DiffField) -> Self {
        DiffSystem { field, shape: self.shape.clone() }
    }
}

/// A built presentation together with its invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct PVPresentation {
    pub system: DiffSystem,
    pub ideal: SigmaIdeal,
    pub ell: u32,
    pub m_inv: u32,
    pub krull_dim: usize,
    pub constants_ext_degree: u32,
    pub idempotents: Option<Vec<RPoly>>,
    pub search_bound: u32,
    /// Set when the relations found within the search bound could not be
    /// confirmed to generate a maximal sigma-ideal.
    pub partial: bool,
}

impl PVPresentation {
    pub fn generator_strings(&self) -> Vec<String> {
        let names = self.system.var_names();
        self.ideal.generators.iter().map(|g| g.fmt_with(&names)).collect()
    }

    /// True for the unipotent shape without a rational solution.
    pub fn has_unipotent_part(&self) -> bool {
        matches!(self.ideal.data, IdealData::Unipotent { u: None })
    }
}
