use rayon::prelude::*;
use serde::Serialize;

use super::Bundle;
use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, kernel, solve, Mat, Scalar, Subspace};
use crate::hopf::{check_corep, corep_dual, Corep};

/// A linear map `φ: H_u → B`, stored by its values on the carrier basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    pub images: Vec<Vector>,
}

impl Intertwiner {
    pub fn apply(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    fn is_zero(&self) -> bool {
        self.images.iter().all(|v| v.iter().all(Scalar::is_zero))
    }
}

/// All `φ: H_u → B` with `F ∘ φ = (φ ⊗ id) ∘ u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerSpace {
    pub corep: Corep,
    /// Canonically reduced basis.
    pub basis: Vec<Intertwiner>,
}

impl IntertwinerSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn ensure_compatible(p: &Bundle, u: &Corep) -> Result<()> {
    if u.hopf().as_ref() != p.hopf().as_ref() {
        return Err(Error::Malformed(format!(
            "corep {} is over a different Hopf algebra than bundle {}",
            u.name(),
            p.name()
        )));
    }
    if !check_corep(u) {
        return Err(Error::Malformed(format!("{} is not a corepresentation", u.name())));
    }
    Ok(())
}

pub fn intertwiner_space(p: &Bundle, u: &Corep) -> Result<IntertwinerSpace> {
    ensure_compatible(p, u)?;
    let n = p.dim();
    let da = p.hopf().dim();
    let m = u.dim();
    // unknown (i, b) ↦ i*n + b; equation (j, b', a) ↦ j*n*da + b'*da + a:
    //   F(φ(e_j)) - Σ_i φ(e_i) ⊗ u_ij = 0
    let block = n * da;
    let mut eqs = Mat::zeros(m * block, m * n);
    let coaction = p.coaction_matrix();
    for i in 0..m {
        for b in 0..n {
            let col = i * n + b;
            for r in 0..block {
                let f = coaction.get(r, b);
                if !f.is_zero() {
                    eqs.add_at(i * block + r, col, f);
                }
            }
            for j in 0..m {
                for (a, c) in u.coeff(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        eqs.add_at(j * block + b * da + a, col, &-c);
                    }
                }
            }
        }
    }
    let ker = kernel(&eqs);
    let basis = ker
        .basis()
        .iter()
        .map(|v| Intertwiner {
            images: v.chunks(n).map(<[Scalar]>::to_vec).collect(),
        })
        .collect();
    Ok(IntertwinerSpace {
        corep: u.clone(),
        basis,
    })
}

#[derive(Clone, Debug)]
pub struct PwComponent {
    pub space: IntertwinerSpace,
    /// Image of `bim(α) ⊗ H_α → B`.
    pub image: Subspace,
}

impl PwComponent {
    pub fn name(&self) -> &str {
        self.space.corep.name()
    }

    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }

    pub fn carrier_dim(&self) -> usize {
        self.space.corep.dim()
    }
}

/// Summary of `⊕_α bim(α) ⊗ H_α → B`, `φ ⊗ x ↦ φ(x)`.
#[derive(Clone, Debug)]
pub struct PeterWeyl {
    pub components: Vec<PwComponent>,
    /// `Σ_α dim bim(α) · dim H_α`.
    pub total_dim: usize,
    pub rank: usize,
    pub bundle_dim: usize,
    pub injective: bool,
    pub surjective: bool,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PwComponentSummary {
    pub corep: String,
    pub multiplicity: usize,
    pub carrier_dim: usize,
}

impl PeterWeyl {
    pub fn summary(&self) -> Vec<PwComponentSummary> {
        self.components
            .iter()
            .map(|c| PwComponentSummary {
                corep: c.name().to_string(),
                multiplicity: c.multiplicity(),
                carrier_dim: c.carrier_dim(),
            })
            .collect()
    }
}

pub fn peter_weyl_decompose(p: &Bundle, irreps: &[Corep]) -> Result<PeterWeyl> {
    let spaces: Vec<IntertwinerSpace> = irreps
        .par_iter()
        .map(|u| intertwiner_space(p, u))
        .collect::<Result<_>>()?;
    let n = p.dim();
    let mut columns = Vec::new();
    let mut components = Vec::with_capacity(spaces.len());
    for space in spaces {
        let images: Vec<Vector> = space.basis.iter().flat_map(|phi| phi.images.iter().cloned()).collect();
        columns.extend(images.iter().cloned());
        components.push(PwComponent {
            image: Subspace::span(n, images),
            space,
        });
    }
    let total_dim = columns.len();
    let rank = Subspace::span(n, columns).dim();
    let injective = rank == total_dim;
    let surjective = rank == n;
    Ok(PeterWeyl {
        components,
        total_dim,
        rank,
        bundle_dim: n,
        injective,
        surjective,
        complete: injective && surjective,
    })
}

/// Intertwiner pairs with `Σ_k ν_k(e_i^*) μ_k(e_j) = δ_ij 1`, `ν_k ∈ bim(ǔ)`, `μ_k ∈ bim(u)`.
#[derive(Clone, Debug)]
pub struct DualBases {
    pub corep: Corep,
    pub dual: Corep,
    /// `(ν_k, μ_k)`.
    pub pairs: Vec<(Intertwiner, Intertwiner)>,
    /// Basis of `bim(u)`, kept for the invariance lemma.
    pub bim: IntertwinerSpace,
}

impl DualBases {
    /// `Σ_k ν_k(e_i^*) μ_k(e_j)`.
    pub fn pairing(&self, p: &Bundle, i: usize, j: usize) -> Vector {
        let mut acc = vec![Scalar::zero(); p.dim()];
        for (nu, mu) in &self.pairs {
            add_scaled(&mut acc, &Scalar::one(), &p.mul(nu.apply(i), mu.apply(j)));
        }
        acc
    }
}

/// Solve for `T ∈ bim(ǔ) ⊗ bim(u)` with `E(T) = (δ_ij 1)` and split it into rank-one pairs.
///
/// Requires `S² = id`; fails with [`Error::NotPrincipal`] when the system is inconsistent.
pub fn dual_bases(p: &Bundle, u: &Corep) -> Result<DualBases> {
    if !p.hopf().s_squared_is_id() {
        return Err(Error::AntipodeNotInvolutive);
    }
    let dual = corep_dual(u);
    let bim_dual = intertwiner_space(p, &dual)?;
    let bim = intertwiner_space(p, u)?;
    let not_principal = || Error::NotPrincipal {
        corep: u.name().to_string(),
    };
    if bim.dim() == 0 || bim_dual.dim() == 0 {
        return Err(not_principal());
    }
    let n = p.dim();
    let m = u.dim();
    let (np, nq) = (bim_dual.dim(), bim.dim());
    // unknown t_pq ↦ p*nq + q; equation (i, j, b) ↦ (i*m + j)*n + b
    let mut system = Mat::zeros(m * m * n, np * nq);
    for (pi, nu) in bim_dual.basis.iter().enumerate() {
        for (qi, mu) in bim.basis.iter().enumerate() {
            let col = pi * nq + qi;
            for i in 0..m {
                for j in 0..m {
                    let prod = p.mul(nu.apply(i), mu.apply(j));
                    for (b, x) in prod.into_iter().enumerate() {
                        if !x.is_zero() {
                            system.set((i * m + j) * n + b, col, x);
                        }
                    }
                }
            }
        }
    }
    let mut target = vec![Scalar::zero(); m * m * n];
    for i in 0..m {
        for (b, x) in p.unit().iter().enumerate() {
            target[(i * m + i) * n + b] = x.clone();
        }
    }
    let t = solve(&system, &target).ok_or_else(not_principal)?;

    let mut pairs = Vec::new();
    for (qi, mu) in bim.basis.iter().enumerate() {
        let mut images = vec![vec![Scalar::zero(); n]; m];
        for (pi, nu) in bim_dual.basis.iter().enumerate() {
            let c = &t[pi * nq + qi];
            for (img, part) in images.iter_mut().zip(&nu.images) {
                add_scaled(img, c, part);
            }
        }
        let nu = Intertwiner { images };
        if !nu.is_zero() {
            pairs.push((nu, mu.clone()));
        }
    }
    let out = DualBases {
        corep: u.clone(),
        dual,
        pairs,
        bim,
    };
    for i in 0..m {
        for j in 0..m {
            let want: Vec<Scalar> = if i == j {
                p.unit().clone()
            } else {
                vec![Scalar::zero(); n]
            };
            if out.pairing(p, i, j) != want {
                return Err(Error::Invariant(format!(
                    "dual bases for {} fail the pairing at ({i}, {j})",
                    u.name()
                )));
            }
        }
    }
    Ok(out)
}
