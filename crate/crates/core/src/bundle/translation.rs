//! The translation map `τ: A → B ⊗_V B`, built either from dual bases of
//! irreducible corepresentations or by inverting the canonical map directly,
//! and the exact check that `τ` and `X` are mutually inverse.

use rayon::prelude::*;
use serde::Serialize;

use super::{dual_bases, galois_check, peter_weyl_decompose, Bundle, DualBases};
use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, kron_vec, solve_many, unit_vector, Mat, Scalar};
use crate::hopf::Corep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslationMethod {
    PeterWeyl,
    Solve,
}

impl TranslationMethod {
    pub fn name(self) -> &'static str {
        match self {
            TranslationMethod::PeterWeyl => "pw",
            TranslationMethod::Solve => "solve",
        }
    }
}

/// `τ(h)` for every basis element `h` of `A`, in coordinates of `B ⊗_V B`.
#[derive(Clone, Debug)]
pub struct TranslationTable {
    method: TranslationMethod,
    values: Vec<Vector>,
    dual_bases: Vec<DualBases>,
}

/// Tables compare by their values only.
impl PartialEq for TranslationTable {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl TranslationTable {
    /// Builds the table and checks `X(τ(h)) = 1 ⊗ h` for every basis element.
    pub fn new(p: &Bundle, method: TranslationMethod, values: Vec<Vector>) -> Result<Self> {
        let table = Self::from_values_unchecked(method, values);
        if let Some(h) = table.first_failure(p) {
            return Err(Error::Invariant(format!(
                "translation table fails X(τ(h)) = 1⊗h at basis element {h}"
            )));
        }
        Ok(table)
    }

    /// No invariant check; used for loading tables and for fault injection.
    pub fn from_values_unchecked(method: TranslationMethod, values: Vec<Vector>) -> Self {
        TranslationTable {
            method,
            values,
            dual_bases: Vec::new(),
        }
    }

    fn first_failure(&self, p: &Bundle) -> Option<usize> {
        let x = &p.canonical_map().descended;
        let da = p.hopf().dim();
        if self.values.len() != da {
            return Some(self.values.len().min(da));
        }
        self.values
            .iter()
            .enumerate()
            .find(|(h, v)| v.len() != x.cols() || x.mul_vec(v) != p.with_unit_tensor(*h))
            .map(|(h, _)| h)
    }

    pub fn method(&self) -> TranslationMethod {
        self.method
    }

    pub fn values(&self) -> &[Vector] {
        &self.values
    }

    pub fn value(&self, h: usize) -> &Vector {
        &self.values[h]
    }

    /// Dual bases used by the Peter-Weyl constructor; empty for solved tables.
    pub fn dual_bases(&self) -> &[DualBases] {
        &self.dual_bases
    }

    /// `τ(h)` as `(i, j, s)` triples over the quotient basis `b_i ⊗ b_j`.
    pub fn triples(&self, p: &Bundle) -> Vec<Vec<(usize, usize, Scalar)>> {
        let pairs = p.tensor_over_base().basis_pairs(p.dim());
        self.values
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&pairs)
                    .filter(|(s, _)| !s.is_zero())
                    .map(|(s, &(i, j))| (i, j, s.clone()))
                    .collect()
            })
            .collect()
    }
}

impl Bundle {
    /// `1_B ⊗ h_a` in `B ⊗ A`.
    pub(crate) fn with_unit_tensor(&self, a: usize) -> Vector {
        kron_vec(self.unit(), &unit_vector(self.hopf().dim(), a))
    }
}

/// `τ(u_ij) = Σ_k ν_k(e_i^*) ⊗ μ_k(e_j)` on matrix coefficients of the supplied
/// irreducibles, transported to the basis of `A`.
pub fn translation_map_pw(p: &Bundle, irreps: &[Corep]) -> Result<TranslationTable> {
    if !p.hopf().s_squared_is_id() {
        return Err(Error::AntipodeNotInvolutive);
    }
    let pw = peter_weyl_decompose(p, irreps)?;
    if !pw.complete {
        return Err(Error::IncompleteIrreps(format!(
            "evaluation has rank {} from {} summands onto dim B = {}",
            pw.rank, pw.total_dim, pw.bundle_dim
        )));
    }
    let duals: Vec<DualBases> = irreps.par_iter().map(|u| dual_bases(p, u)).collect::<Result<_>>()?;

    let n = p.dim();
    let da = p.hopf().dim();
    let tob = p.tensor_over_base();
    let mut coeff_columns = Vec::new();
    let mut tau_on_coeffs = Vec::new();
    for db in &duals {
        let u = &db.corep;
        for i in 0..u.dim() {
            for j in 0..u.dim() {
                coeff_columns.push(u.coeff(i, j).clone());
                let mut t = vec![Scalar::zero(); n * n];
                for (nu, mu) in &db.pairs {
                    add_scaled(&mut t, &Scalar::one(), &kron_vec(nu.apply(i), mu.apply(j)));
                }
                tau_on_coeffs.push(tob.project(&t));
            }
        }
    }
    let coeffs = Mat::from_columns(da, &coeff_columns);
    let targets: Vec<Vector> = (0..da).map(|h| unit_vector(da, h)).collect();
    let mut values = Vec::with_capacity(da);
    for (h, sol) in solve_many(&coeffs, &targets).into_iter().enumerate() {
        let x = sol.ok_or_else(|| {
            Error::IncompleteIrreps(format!("matrix coefficients do not span A (basis element {h} missing)"))
        })?;
        let mut v = vec![Scalar::zero(); tob.dim()];
        for (c, t) in x.iter().zip(&tau_on_coeffs) {
            add_scaled(&mut v, c, t);
        }
        values.push(v);
    }
    let mut table = TranslationTable::new(p, TranslationMethod::PeterWeyl, values)?;
    table.dual_bases = duals;
    Ok(table)
}

/// `τ(h) = X⁻¹(1 ⊗ h)` by exact solve; requires `X` bijective.
pub fn translation_map_solve(p: &Bundle) -> Result<TranslationTable> {
    let g = galois_check(p);
    if !g.bijective {
        return Err(Error::NotGalois {
            kernel_dim: g.kernel_dim,
            cokernel_dim: g.cokernel_dim,
        });
    }
    let x = &p.canonical_map().descended;
    let da = p.hopf().dim();
    let targets: Vec<Vector> = (0..da).map(|h| p.with_unit_tensor(h)).collect();
    let values = solve_many(x, &targets)
        .into_iter()
        .map(|v| v.expect("bijective map is solvable"))
        .collect();
    TranslationTable::new(p, TranslationMethod::Solve, values)
}

/// The left `B`-linear extension `τ(b ⊗ a) = (b ⊗ 1) · τ(a)` as a matrix
/// `dim(B ⊗_V B) × dim(B ⊗ A)`.
pub fn tau_extended(p: &Bundle, t: &TranslationTable) -> Mat {
    let n = p.dim();
    let da = p.hopf().dim();
    let tob = p.tensor_over_base();
    let mut out = Mat::zeros(tob.dim(), n * da);
    let lifted: Vec<Vector> = t.values.iter().map(|v| tob.lift(v)).collect();
    for i in 0..n {
        for (a, lift) in lifted.iter().enumerate() {
            // (b_i ⊗ 1) acts on the left factor
            let mut moved = vec![Scalar::zero(); n * n];
            for x in 0..n {
                let prod = p.algebra().basis_product(i, x);
                for y in 0..n {
                    let c = &lift[x * n + y];
                    if c.is_zero() {
                        continue;
                    }
                    for (z, pz) in prod.iter().enumerate() {
                        if !pz.is_zero() {
                            moved[z * n + y] += &(c * pz);
                        }
                    }
                }
            }
            let q = tob.project(&moved);
            for (r, s) in q.into_iter().enumerate() {
                if !s.is_zero() {
                    out.set(r, i * da + a, s);
                }
            }
        }
    }
    out
}

/// F-invariance of `Σ_j μ(e_j) ν_k(e_j^*)` for every `μ ∈ bim(u)` and every pair `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub checked: usize,
    /// `(corep, index of μ in the bim basis, pair index k)`.
    pub failures: Vec<(String, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop1Report {
    pub x_tau_is_id: bool,
    /// First `(row, col)` where `X∘τ` differs from the identity.
    pub x_tau_witness: Option<(usize, usize)>,
    pub tau_x_is_id: bool,
    pub tau_x_witness: Option<(usize, usize)>,
    /// `None` when the table carries no dual bases or `S² ≠ id`.
    pub invariance: Option<InvarianceReport>,
}

impl Prop1Report {
    pub fn ok(&self) -> bool {
        self.x_tau_is_id && self.tau_x_is_id && self.invariance.as_ref().is_none_or(|r| r.failures.is_empty())
    }
}

pub fn verify_prop1(p: &Bundle, t: &TranslationTable) -> Prop1Report {
    let x = &p.canonical_map().descended;
    let tau = tau_extended(p, t);
    let x_tau = x.mul(&tau);
    let tau_x = tau.mul(x);
    let x_tau_witness = x_tau.first_difference(&Mat::identity(x_tau.rows()));
    let tau_x_witness = tau_x.first_difference(&Mat::identity(tau_x.rows()));

    let invariance = (!t.dual_bases.is_empty() && p.hopf().s_squared_is_id()).then(|| {
        let mut checked = 0;
        let mut failures = Vec::new();
        for db in &t.dual_bases {
            let m = db.corep.dim();
            for (mi, mu) in db.bim.basis.iter().enumerate() {
                for (k, (nu, _)) in db.pairs.iter().enumerate() {
                    let mut z = vec![Scalar::zero(); p.dim()];
                    for j in 0..m {
                        add_scaled(&mut z, &Scalar::one(), &p.mul(mu.apply(j), nu.apply(j)));
                    }
                    checked += 1;
                    if p.coact(&z) != p.with_unit(&z) {
                        failures.push((db.corep.name().to_string(), mi, k));
                    }
                }
            }
        }
        InvarianceReport { checked, failures }
    });

    Prop1Report {
        x_tau_is_id: x_tau_witness.is_none(),
        x_tau_witness,
        tau_x_is_id: tau_x_witness.is_none(),
        tau_x_witness,
        invariance,
    }
}
