//! Comodule algebras `(B, F)` over a finite-dimensional Hopf algebra `A`, and
//! the linear algebra that decides whether `B` is a Hopf-Galois extension of
//! its fixed-point subalgebra.
//!
//! Coordinates: `B ⊗ A` is indexed by `b * dim(A) + a` and `B ⊗ B` by
//! `b * dim(B) + b'`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::{mat_from_entries3, Algebra, Entry1, Entry3, Vector};
use crate::error::Result;
use crate::exactlin::{
    add_scaled, kernel, kron_vec, quotient, tensor_apply, unit_vector, Mat, Quotient, Scalar, Subspace,
};
use crate::hopf::{Axiom, HopfAlgebra, Violation};

mod intertwiner;
mod translation;

pub use intertwiner::{
    dual_bases, intertwiner_space, peter_weyl_decompose, DualBases, Intertwiner, IntertwinerSpace, PeterWeyl,
    PwComponent, PwComponentSummary,
};
pub use translation::{
    tau_extended, translation_map_pw, translation_map_solve, verify_prop1, InvarianceReport, Prop1Report,
    TranslationMethod, TranslationTable,
};

/// Raw structure constants of a bundle. `coaction (i, j, a, s)`: `F(b_i)` has
/// coefficient `s` at `b_j ⊗ h_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleData {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    pub coaction: Vec<Entry3>,
}

pub struct Bundle {
    name: String,
    labels: Vec<String>,
    hopf: Arc<HopfAlgebra>,
    algebra: Algebra,
    /// `(dim B · dim A) × dim B`, column `i` is `F(b_i)`.
    coaction: Mat,
    base: OnceLock<BaseAlgebra>,
    tensor: OnceLock<TensorOverBase>,
    canonical: OnceLock<CanonicalMap>,
}

impl Clone for Bundle {
    fn clone(&self) -> Self {
        Bundle {
            name: self.name.clone(),
            labels: self.labels.clone(),
            hopf: self.hopf.clone(),
            algebra: self.algebra.clone(),
            coaction: self.coaction.clone(),
            base: self.base.clone(),
            tensor: self.tensor.clone(),
            canonical: self.canonical.clone(),
        }
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bundle")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("hopf", &self.hopf.name())
            .finish()
    }
}

impl PartialEq for Bundle {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.hopf == other.hopf
            && self.algebra == other.algebra
            && self.coaction == other.coaction
    }
}

impl Bundle {
    /// Checks shapes and ranges; the bundle axioms are checked by [`check_bundle`].
    pub fn from_data(hopf: Arc<HopfAlgebra>, data: BundleData) -> Result<Self> {
        let n = data.labels.len();
        let da = hopf.dim();
        let what = format!("bundle {}", data.name);
        let algebra = Algebra::new(n, &data.mult, &data.unit, &what)?;
        let coaction = mat_from_entries3(
            (n, n, da),
            (n * da, n),
            &data.coaction,
            |i, j, a| (j * da + a, i),
            &what,
            "coaction",
        )?;
        Ok(Bundle {
            name: data.name,
            labels: data.labels,
            hopf,
            algebra,
            coaction,
            base: OnceLock::new(),
            tensor: OnceLock::new(),
            canonical: OnceLock::new(),
        })
    }

    pub fn to_data(&self) -> BundleData {
        let (mult, unit) = self.algebra.entries();
        let (n, da) = (self.dim(), self.hopf.dim());
        let mut coaction = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for a in 0..da {
                    let s = self.coaction.get(j * da + a, i);
                    if !s.is_zero() {
                        coaction.push((i, j, a, s.clone()));
                    }
                }
            }
        }
        BundleData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            mult,
            unit,
            coaction,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn coaction_matrix(&self) -> &Mat {
        &self.coaction
    }

    /// `F(b)` in `B ⊗ A`.
    pub fn coact(&self, b: &[Scalar]) -> Vector {
        self.coaction.mul_vec(b)
    }

    /// `b ⊗ 1_A`.
    pub fn with_unit(&self, b: &[Scalar]) -> Vector {
        kron_vec(b, self.hopf.unit())
    }

    /// The fixed-point subalgebra `V = {b : F(b) = b ⊗ 1}`.
    pub fn base(&self) -> &BaseAlgebra {
        self.base.get_or_init(|| BaseAlgebra::compute(self))
    }

    /// `B ⊗_V B`.
    pub fn tensor_over_base(&self) -> &TensorOverBase {
        self.tensor.get_or_init(|| TensorOverBase::compute(self))
    }

    pub fn canonical_map(&self) -> &CanonicalMap {
        self.canonical.get_or_init(|| CanonicalMap::compute(self))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Algebra axioms for `B`, `F` multiplicative and unital, coassociativity and
/// the counit law for `F`.
pub fn check_bundle(p: &Bundle) -> BundleReport {
    let n = p.dim();
    let h = p.hopf();
    let mut violations = Vec::new();
    p.algebra.check(&mut violations);

    'mult: for i in 0..n {
        for j in 0..n {
            let lhs = p.coact(&p.algebra.basis_product(i, j));
            let rhs = p
                .algebra
                .tensor_mul(h.algebra(), &p.coaction.column(i), &p.coaction.column(j));
            if lhs != rhs {
                violations.push(Violation::new(Axiom::CoactionMultiplicative, vec![i, j]));
                break 'mult;
            }
        }
    }
    if p.coact(p.unit()) != kron_vec(p.unit(), h.unit()) {
        violations.push(Violation::new(Axiom::CoactionUnital, vec![]));
    }
    let id_b = Mat::identity(n);
    let id_a = Mat::identity(h.dim());
    for i in 0..n {
        let f = p.coaction.column(i);
        if tensor_apply(&id_b, h.comult_matrix(), &f) != tensor_apply(&p.coaction, &id_a, &f) {
            violations.push(Violation::new(Axiom::CoactionCoassociative, vec![i]));
            break;
        }
    }
    for i in 0..n {
        let f = p.coaction.column(i);
        if tensor_apply(&id_b, &h.counit_row(), &f) != p.basis(i) {
            violations.push(Violation::new(Axiom::CoactionCounital, vec![i]));
            break;
        }
    }
    BundleReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// The base algebra `V ⊆ B` with its multiplication in echelon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseAlgebra {
    pub space: Subspace,
    /// `dim V × dim V²` in the coordinates of `space`; `None` if `V` is not closed.
    pub mult: Option<Mat>,
    pub contains_unit: bool,
}

impl BaseAlgebra {
    fn compute(p: &Bundle) -> Self {
        let n = p.dim();
        let da = p.hopf().dim();
        // F - (id ⊗ η)
        let mut m = p.coaction.clone();
        for i in 0..n {
            for (a, one) in p.hopf().unit().iter().enumerate() {
                if !one.is_zero() {
                    m.add_at(i * da + a, i, &-one);
                }
            }
        }
        let space = kernel(&m);
        let d = space.dim();
        let mut mult = Some(Mat::zeros(d, d * d));
        'outer: for (x, u) in space.basis().iter().enumerate() {
            for (y, v) in space.basis().iter().enumerate() {
                match space.coordinates(&p.mul(u, v)) {
                    Some(c) => {
                        let table = mult.as_mut().unwrap();
                        for (k, ck) in c.into_iter().enumerate() {
                            table.set(k, x * d + y, ck);
                        }
                    }
                    None => {
                        mult = None;
                        break 'outer;
                    }
                }
            }
        }
        let contains_unit = space.contains(p.unit());
        BaseAlgebra {
            space,
            mult,
            contains_unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_closed(&self) -> bool {
        self.mult.is_some()
    }
}

/// The base algebra of `p`.
pub fn fixed_subalgebra(p: &Bundle) -> &BaseAlgebra {
    p.base()
}

/// `B ⊗_V B = (B ⊗ B) / span{bv ⊗ b' - b ⊗ vb'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOverBase {
    pub relations: Subspace,
    pub quotient: Quotient,
    /// Multiplication `B ⊗ B → B` kills every relation.
    pub mult_descends: bool,
}

impl TensorOverBase {
    fn compute(p: &Bundle) -> Self {
        let n = p.dim();
        let base = p.base();
        let mut rels = Vec::with_capacity(n * n * base.dim());
        for v in base.space.basis() {
            for i in 0..n {
                let bv = p.mul(&p.basis(i), v);
                for j in 0..n {
                    let vb = p.mul(v, &p.basis(j));
                    let mut r = kron_vec(&bv, &p.basis(j));
                    add_scaled(&mut r, &Scalar::from_int(-1), &kron_vec(&p.basis(i), &vb));
                    rels.push(r);
                }
            }
        }
        let relations = Subspace::span(n * n, rels);
        let quotient = quotient(n * n, &relations);
        let mult = p.algebra.mult_matrix();
        let mult_descends = relations
            .basis()
            .iter()
            .all(|r| mult.mul_vec(r).iter().all(Scalar::is_zero));
        TensorOverBase {
            relations,
            quotient,
            mult_descends,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    /// The pure tensor `b_i ⊗ b_j` lifting each quotient basis vector.
    pub fn basis_pairs(&self, bundle_dim: usize) -> Vec<(usize, usize)> {
        self.quotient
            .representatives
            .iter()
            .map(|&c| (c / bundle_dim, c % bundle_dim))
            .collect()
    }

    pub fn project(&self, x: &[Scalar]) -> Vector {
        self.quotient.project.mul_vec(x)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vector {
        self.quotient.section.mul_vec(q)
    }
}

pub fn tensor_over_base(p: &Bundle) -> &TensorOverBase {
    p.tensor_over_base()
}

/// `X(q ⊗ b) = q F(b)` on `B ⊗ B` and on `B ⊗_V B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMap {
    /// `(dim B · dim A) × dim B²`.
    pub full: Mat,
    /// `(dim B · dim A) × dim(B ⊗_V B)`.
    pub descended: Mat,
    /// `full` kills every relation, so `full = descended ∘ project`.
    pub descends: bool,
    pub rank: usize,
}

impl CanonicalMap {
    fn compute(p: &Bundle) -> Self {
        let n = p.dim();
        let da = p.hopf().dim();
        let mut full = Mat::zeros(n * da, n * n);
        for j in 0..n {
            let f = p.coaction.column(j);
            for k in 0..n {
                for a in 0..da {
                    let c = &f[k * da + a];
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        let prod = p.algebra.basis_product(i, k);
                        for (l, x) in prod.iter().enumerate() {
                            if !x.is_zero() {
                                full.add_at(l * da + a, i * n + j, &(c * x));
                            }
                        }
                    }
                }
            }
        }
        let tob = p.tensor_over_base();
        let descended = full.mul(&tob.quotient.section);
        let descends = tob
            .relations
            .basis()
            .iter()
            .all(|r| full.mul_vec(r).iter().all(Scalar::is_zero));
        let rank = descended.rank();
        CanonicalMap {
            full,
            descended,
            descends,
            rank,
        }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.full.mul_vec(x)
    }
}

pub fn canonical_map(p: &Bundle) -> &CanonicalMap {
    p.canonical_map()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Freeness {
    pub surjective: bool,
    pub rank: usize,
    pub target_dim: usize,
    pub cokernel_dim: usize,
}

pub fn freeness_check(p: &Bundle) -> Freeness {
    let x = p.canonical_map();
    let target_dim = x.descended.rows();
    Freeness {
        surjective: x.rank == target_dim,
        rank: x.rank,
        target_dim,
        cokernel_dim: target_dim - x.rank,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    pub bijective: bool,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
}

pub fn galois_check(p: &Bundle) -> GaloisVerdict {
    let x = p.canonical_map();
    let source_dim = x.descended.cols();
    let target_dim = x.descended.rows();
    let kernel_dim = source_dim - x.rank;
    let cokernel_dim = target_dim - x.rank;
    GaloisVerdict {
        bijective: kernel_dim == 0 && cokernel_dim == 0,
        rank: x.rank,
        source_dim,
        target_dim,
        kernel_dim,
        cokernel_dim,
    }
}
