//! Finite-dimensional Hopf algebras by structure constants, their axiom
//! suite, and matrix corepresentations.
//!
//! Conventions for the raw entry lists (all indices are basis indices):
//!
//! * `mult (i, j, k, s)`: `e_i · e_j` has coefficient `s` at `e_k`;
//! * `comult (i, j, k, s)`: `Δ(e_i)` has coefficient `s` at `e_j ⊗ e_k`;
//! * `antipode (i, j, s)`: `S(e_i)` has coefficient `s` at `e_j`;
//! * `involution (i, j, s)`: `e_i*` has coefficient `s` at `e_j`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{
    mat_entries2, mat_from_entries2, mat_from_entries3, vec_entries, vec_from_entries, Algebra, Entry1, Entry2, Entry3,
    Vector,
};
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, kron_vec, tensor_apply, unit_vector, Mat, Scalar};

/// The axioms checked by [`check_hopf`] and by bundle validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    LeftUnit,
    RightUnit,
    Coassociativity,
    LeftCounit,
    RightCounit,
    ComultMultiplicative,
    ComultUnital,
    CounitMultiplicative,
    CounitUnital,
    LeftAntipode,
    RightAntipode,
    InvolutionAntimultiplicative,
    InvolutionSquare,
    CoactionMultiplicative,
    CoactionUnital,
    CoactionCoassociative,
    CoactionCounital,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::LeftUnit => "left_unit",
            Axiom::RightUnit => "right_unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left_counit",
            Axiom::RightCounit => "right_counit",
            Axiom::ComultMultiplicative => "comult_multiplicative",
            Axiom::ComultUnital => "comult_unital",
            Axiom::CounitMultiplicative => "counit_multiplicative",
            Axiom::CounitUnital => "counit_unital",
            Axiom::LeftAntipode => "left_antipode",
            Axiom::RightAntipode => "right_antipode",
            Axiom::InvolutionAntimultiplicative => "involution_antimultiplicative",
            Axiom::InvolutionSquare => "involution_square",
            Axiom::CoactionMultiplicative => "coaction_multiplicative",
            Axiom::CoactionUnital => "coaction_unital",
            Axiom::CoactionCoassociative => "coaction_coassociative",
            Axiom::CoactionCounital => "coaction_counital",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed axiom together with the basis indices of the inputs that break it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: Vec<usize>) -> Self {
        Violation { axiom, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        write!(f, "{} at ({})", self.axiom, w.join(", "))
    }
}

/// Raw structure constants, the input form for [`HopfAlgebra::from_data`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub antipode: Vec<Entry2>,
    pub involution: Option<Vec<Entry2>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    name: String,
    labels: Vec<String>,
    algebra: Algebra,
    /// `dim² × dim`, column `i` is `Δ(e_i)`.
    comult: Mat,
    counit: Vector,
    /// Column `i` is `S(e_i)`.
    antipode: Mat,
    involution: Option<Mat>,
}

impl HopfAlgebra {
    /// Checks shapes and index ranges only; axioms are checked by [`check_hopf`].
    pub fn from_data(data: HopfData) -> Result<Self> {
        let dim = data.labels.len();
        let what = format!("hopf {}", data.name);
        let algebra = Algebra::new(dim, &data.mult, &data.unit, &what)?;
        let comult = mat_from_entries3(
            (dim, dim, dim),
            (dim * dim, dim),
            &data.comult,
            |i, j, k| (j * dim + k, i),
            &what,
            "comult",
        )?;
        let counit = vec_from_entries(dim, &data.counit, &what, "counit")?;
        let antipode = mat_from_entries2(dim, dim, &data.antipode, &what, "antipode")?;
        let involution = data
            .involution
            .as_ref()
            .map(|inv| mat_from_entries2(dim, dim, inv, &what, "involution"))
            .transpose()?;
        Ok(HopfAlgebra {
            name: data.name,
            labels: data.labels,
            algebra,
            comult,
            counit,
            antipode,
            involution,
        })
    }

    pub fn to_data(&self) -> HopfData {
        let (mult, unit) = self.algebra.entries();
        let n = self.dim();
        let mut comult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = self.comult.get(j * n + k, i);
                    if !s.is_zero() {
                        comult.push((i, j, k, s.clone()));
                    }
                }
            }
        }
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            mult,
            unit,
            comult,
            counit: vec_entries(&self.counit),
            antipode: mat_entries2(&self.antipode),
            involution: self.involution.as_ref().map(mat_entries2),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn comult_matrix(&self) -> &Mat {
        &self.comult
    }

    pub fn antipode_matrix(&self) -> &Mat {
        &self.antipode
    }

    pub fn involution_matrix(&self) -> Option<&Mat> {
        self.involution.as_ref()
    }

    pub fn comultiply(&self, a: &[Scalar]) -> Vector {
        self.comult.mul_vec(a)
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (x, e) in a.iter().zip(&self.counit) {
            if !x.is_zero() && !e.is_zero() {
                s += &(x * e);
            }
        }
        s
    }

    pub fn counit_vector(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vector {
        self.antipode.mul_vec(a)
    }

    /// Conjugate-linear application of the involution, if present.
    pub fn star(&self, a: &[Scalar]) -> Option<Vector> {
        let inv = self.involution.as_ref()?;
        let conj: Vec<Scalar> = a.iter().map(Scalar::conj).collect();
        Some(inv.mul_vec(&conj))
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Counit as a `1 × dim` matrix.
    pub fn counit_row(&self) -> Mat {
        Mat::from_rows(vec![self.counit.clone()])
    }

    pub fn s_squared_is_id(&self) -> bool {
        self.antipode.mul(&self.antipode).is_identity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub s_squared_is_id: bool,
    pub s_bijective: bool,
}

/// Check every Hopf axiom exactly; one violation per failing axiom.
pub fn check_hopf(h: &HopfAlgebra) -> HopfReport {
    let n = h.dim();
    let mut violations = Vec::new();
    h.algebra.check(&mut violations);

    let id = Mat::identity(n);
    let eps = h.counit_row();
    let one = h.unit().clone();

    for i in 0..n {
        let d = h.comult.column(i);
        if tensor_apply(&h.comult, &id, &d) != tensor_apply(&id, &h.comult, &d) {
            violations.push(Violation::new(Axiom::Coassociativity, vec![i]));
            break;
        }
    }
    for (axiom, left) in [(Axiom::LeftCounit, true), (Axiom::RightCounit, false)] {
        for i in 0..n {
            let d = h.comult.column(i);
            let got = if left {
                tensor_apply(&eps, &id, &d)
            } else {
                tensor_apply(&id, &eps, &d)
            };
            if got != h.basis(i) {
                violations.push(Violation::new(axiom, vec![i]));
                break;
            }
        }
    }
    'comult: for i in 0..n {
        for j in 0..n {
            let lhs = h.comultiply(&h.algebra.basis_product(i, j));
            let rhs = h
                .algebra
                .tensor_mul(&h.algebra, &h.comult.column(i), &h.comult.column(j));
            if lhs != rhs {
                violations.push(Violation::new(Axiom::ComultMultiplicative, vec![i, j]));
                break 'comult;
            }
        }
    }
    if h.comultiply(&one) != kron_vec(&one, &one) {
        violations.push(Violation::new(Axiom::ComultUnital, vec![]));
    }
    'counit: for i in 0..n {
        for j in 0..n {
            let lhs = h.counit(&h.algebra.basis_product(i, j));
            let rhs = &h.counit[i] * &h.counit[j];
            if lhs != rhs {
                violations.push(Violation::new(Axiom::CounitMultiplicative, vec![i, j]));
                break 'counit;
            }
        }
    }
    if !h.counit(&one).is_one() {
        violations.push(Violation::new(Axiom::CounitUnital, vec![]));
    }
    let mult = h.algebra.mult_matrix();
    for (axiom, left) in [(Axiom::LeftAntipode, true), (Axiom::RightAntipode, false)] {
        for i in 0..n {
            let d = h.comult.column(i);
            let applied = if left {
                tensor_apply(&h.antipode, &id, &d)
            } else {
                tensor_apply(&id, &h.antipode, &d)
            };
            let got = mult.mul_vec(&applied);
            let want: Vec<Scalar> = one.iter().map(|x| x * &h.counit[i]).collect();
            if got != want {
                violations.push(Violation::new(axiom, vec![i]));
                break;
            }
        }
    }
    if h.involution.is_some() {
        'star: for i in 0..n {
            for j in 0..n {
                let lhs = h.star(&h.algebra.basis_product(i, j)).unwrap();
                let rhs = h.mul(&h.star(&h.basis(j)).unwrap(), &h.star(&h.basis(i)).unwrap());
                if lhs != rhs {
                    violations.push(Violation::new(Axiom::InvolutionAntimultiplicative, vec![i, j]));
                    break 'star;
                }
            }
        }
        for i in 0..n {
            let twice = h.star(&h.star(&h.basis(i)).unwrap()).unwrap();
            if twice != h.basis(i) {
                violations.push(Violation::new(Axiom::InvolutionSquare, vec![i]));
                break;
            }
        }
    }

    HopfReport {
        ok: violations.is_empty(),
        violations,
        s_squared_is_id: h.s_squared_is_id(),
        s_bijective: h.antipode.rank() == n,
    }
}

/// A matrix corepresentation: `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`, `ε(u_ij) = δ_ij`.
///
/// On the carrier the coaction is `e_j ↦ Σ_i e_i ⊗ u_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corep {
    hopf: Arc<HopfAlgebra>,
    name: String,
    dim: usize,
    /// Row-major `dim × dim` grid of elements of the Hopf algebra.
    coeffs: Vec<Vector>,
}

impl Corep {
    pub fn new(hopf: Arc<HopfAlgebra>, name: impl Into<String>, dim: usize, coeffs: Vec<Vector>) -> Result<Self> {
        let name = name.into();
        if coeffs.len() != dim * dim {
            return Err(Error::Malformed(format!(
                "corep {name}: expected {} coefficients, got {}",
                dim * dim,
                coeffs.len()
            )));
        }
        if let Some(bad) = coeffs.iter().position(|c| c.len() != hopf.dim()) {
            return Err(Error::Malformed(format!(
                "corep {name}: coefficient {bad} has length {}, expected {}",
                coeffs[bad].len(),
                hopf.dim()
            )));
        }
        Ok(Corep {
            hopf,
            name,
            dim,
            coeffs,
        })
    }

    /// The trivial corepresentation `u = (1)`.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let one = hopf.unit().clone();
        Corep {
            hopf,
            name: "trivial".into(),
            dim: 1,
            coeffs: vec![one],
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Vector {
        &self.coeffs[i * self.dim + j]
    }

    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }
}

pub fn check_corep(u: &Corep) -> bool {
    let h = &u.hopf;
    let n = u.dim;
    for i in 0..n {
        for j in 0..n {
            let mut want = vec![Scalar::zero(); h.dim() * h.dim()];
            for k in 0..n {
                add_scaled(&mut want, &Scalar::one(), &kron_vec(u.coeff(i, k), u.coeff(k, j)));
            }
            if h.comultiply(u.coeff(i, j)) != want {
                return false;
            }
            let e = h.counit(u.coeff(i, j));
            if e != if i == j { Scalar::one() } else { Scalar::zero() } {
                return false;
            }
        }
    }
    true
}

/// `(u × v)_{(i,k),(j,l)} = u_ij · v_kl`, carrier index `(i, k) ↦ i * dim(v) + k`.
pub fn corep_product(u: &Corep, v: &Corep) -> Result<Corep> {
    if u.hopf != v.hopf {
        return Err(Error::Malformed("corep_product over different Hopf algebras".into()));
    }
    let (m, n) = (u.dim, v.dim);
    let d = m * n;
    let mut coeffs = vec![Vec::new(); d * d];
    for i in 0..m {
        for k in 0..n {
            for j in 0..m {
                for l in 0..n {
                    coeffs[(i * n + k) * d + (j * n + l)] = u.hopf.mul(u.coeff(i, j), v.coeff(k, l));
                }
            }
        }
    }
    Corep::new(u.hopf.clone(), format!("{}x{}", u.name, v.name), d, coeffs)
}

/// Antipode dual on `H_u^*`: `ǔ_ij = S(u_ji)`, so `e_i^* ↦ Σ_a e_a^* ⊗ S(u_ia)`.
///
/// With this choice the evaluation `H_u^* ⊗ H_u → k` intertwines `ǔ × u` with
/// the trivial corepresentation.
pub fn corep_dual(u: &Corep) -> Corep {
    let n = u.dim;
    let mut coeffs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            coeffs.push(u.hopf.antipode(u.coeff(j, i)));
        }
    }
    Corep {
        hopf: u.hopf.clone(),
        name: format!("{}^", u.name),
        dim: n,
        coeffs,
    }
}

/// A right comodule by its coaction: `v_i ↦ Σ_{j,a} c[i][j][a] v_j ⊗ h_a`.
#[derive(Clone, Debug)]
pub struct Comodule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    /// `(dim·dimA) × dim`, column `i` is the coaction of `v_i`.
    coaction: Mat,
}

impl Comodule {
    pub fn new(hopf: Arc<HopfAlgebra>, dim: usize, coaction: &[Entry3]) -> Result<Self> {
        let da = hopf.dim();
        let coaction = mat_from_entries3(
            (dim, dim, da),
            (dim * da, dim),
            coaction,
            |i, j, a| (j * da + a, i),
            "comodule",
            "coaction",
        )?;
        Ok(Comodule { hopf, dim, coaction })
    }

    pub fn check(&self) -> bool {
        let id_v = Mat::identity(self.dim);
        let id_a = Mat::identity(self.hopf.dim());
        for i in 0..self.dim {
            let c = self.coaction.column(i);
            if tensor_apply(&id_v, self.hopf.comult_matrix(), &c) != tensor_apply(&self.coaction, &id_a, &c) {
                return false;
            }
            if tensor_apply(&id_v, &self.hopf.counit_row(), &c) != unit_vector(self.dim, i) {
                return false;
            }
        }
        true
    }

    /// Matrix coefficients in the standard basis: `u_ij` is the `v_i`-component of the coaction of `v_j`.
    pub fn to_corep(&self, name: &str) -> Result<Corep> {
        let da = self.hopf.dim();
        let n = self.dim;
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                coeffs.push((0..da).map(|a| self.coaction.get(i * da + a, j).clone()).collect());
            }
        }
        Corep::new(self.hopf.clone(), name, n, coeffs)
    }
}
