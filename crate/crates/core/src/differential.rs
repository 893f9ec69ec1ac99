//! The universal first-order calculus `Ω¹ = ker(m: B ⊗ B → B)` on a bundle,
//! its vertical part, and the horizontality criterion `Ω¹_hor = hor¹`.

use serde::Serialize;

use crate::algebra::Vector;
use crate::bundle::{galois_check, Bundle, GaloisVerdict};
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, kernel, kron_vec, Mat, Scalar, Subspace};

/// `b_i · x · b_j` for `x ∈ B ⊗ B`.
fn bimodule_act(p: &Bundle, i: usize, x: &[Scalar], j: usize) -> Vector {
    let n = p.dim();
    let a = p.algebra();
    let mut out = vec![Scalar::zero(); n * n];
    for l in 0..n {
        for r in 0..n {
            let c = &x[l * n + r];
            if c.is_zero() {
                continue;
            }
            add_scaled(&mut out, c, &kron_vec(&a.basis_product(i, l), &a.basis_product(r, j)));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct UniversalFODC {
    /// `ker(m)` inside `B ⊗ B`.
    pub space: Subspace,
    /// `n² × n`, `d(b) = 1 ⊗ b − b ⊗ 1`.
    pub d: Mat,
}

impl UniversalFODC {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn universal_fodc(p: &Bundle) -> Result<UniversalFODC> {
    let n = p.dim();
    let space = kernel(p.algebra().mult_matrix());
    let mut d = Mat::zeros(n * n, n);
    for b in 0..n {
        let e = p.basis(b);
        let mut col = kron_vec(p.unit(), &e);
        add_scaled(&mut col, &Scalar::from_int(-1), &kron_vec(&e, p.unit()));
        for (r, s) in col.into_iter().enumerate() {
            d.set(r, b, s);
        }
    }
    if space.dim() != n * n - n {
        return Err(Error::Invariant(format!(
            "dim Ω¹ = {}, expected {}",
            space.dim(),
            n * n - n
        )));
    }
    if !d.mul_vec(p.unit()).iter().all(Scalar::is_zero) {
        return Err(Error::Invariant("d(1) ≠ 0".into()));
    }
    for k in 0..n {
        let db = d.column(k);
        if !space.contains(&db) {
            return Err(Error::Invariant(format!("d(b_{k}) is not in Ω¹")));
        }
        for i in 0..n {
            for j in 0..n {
                if !space.contains(&bimodule_act(p, i, &db, j)) {
                    return Err(Error::Invariant(format!("b_{i}·d(b_{k})·b_{j} is not in Ω¹")));
                }
            }
        }
    }
    Ok(UniversalFODC { space, d })
}

#[derive(Clone, Debug)]
pub struct VerticalSplit {
    /// `dim(B ⊗ A⁺) × dim Ω¹`, in echelon coordinates on both sides.
    pub vertical_map: Mat,
    /// `A⁺ = ker ε` inside `A`.
    pub a_plus: Subspace,
    pub vertical_rank: usize,
    /// Kernel of the vertical map, inside `B ⊗ B`.
    pub hor1: Subspace,
    /// `span{b · d(v) · b′ : v ∈ V}` inside `B ⊗ B`.
    pub omega_hor1: Subspace,
    pub omega1_dim: usize,
}

impl VerticalSplit {
    pub fn vertical_dim(&self) -> usize {
        self.vertical_map.rows()
    }

    pub fn vertical_surjective(&self) -> bool {
        self.vertical_rank == self.vertical_dim()
    }
}

/// `b ⊗ b′ ↦ b b′⁽⁰⁾ ⊗ (b′⁽¹⁾ − ε(b′⁽¹⁾) 1)` restricted to `Ω¹`.
pub fn vertical_split(p: &Bundle, o: &UniversalFODC) -> VerticalSplit {
    let n = p.dim();
    let h = p.hopf();
    let da = h.dim();
    let eps = h.counit_vector();
    // π = id − η ε on A
    let mut pi = Mat::identity(da);
    for (c, e) in eps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        for (r, one) in h.unit().iter().enumerate() {
            if !one.is_zero() {
                pi.add_at(r, c, &-(one * e));
            }
        }
    }
    let a_plus = kernel(&Mat::from_rows(vec![eps.clone()]));
    let k = a_plus.dim();
    let x = &p.canonical_map().full;

    let mut columns = Vec::with_capacity(o.dim());
    for w in o.space.basis() {
        let xw = x.mul_vec(w);
        let mut col = vec![Scalar::zero(); n * k];
        for b in 0..n {
            let block = pi.mul_vec(&xw[b * da..(b + 1) * da]);
            let coords = a_plus.coordinates(&block).expect("π lands in ker ε");
            for (t, s) in coords.into_iter().enumerate() {
                col[b * k + t] = s;
            }
        }
        columns.push(col);
    }
    let vertical_map = Mat::from_columns(n * k, &columns);
    let vertical_rank = vertical_map.rank();

    let hor_coords = kernel(&vertical_map);
    let hor1 = Subspace::span(
        n * n,
        hor_coords
            .basis()
            .iter()
            .map(|c| {
                let mut v = vec![Scalar::zero(); n * n];
                for (s, w) in c.iter().zip(o.space.basis()) {
                    add_scaled(&mut v, s, w);
                }
                v
            })
            .collect(),
    );

    let mut gens = Vec::new();
    for v in p.base().space.basis() {
        let dv = o.d.mul_vec(v);
        for i in 0..n {
            for j in 0..n {
                gens.push(bimodule_act(p, i, &dv, j));
            }
        }
    }
    let omega_hor1 = Subspace::span(n * n, gens);

    VerticalSplit {
        vertical_map,
        a_plus,
        vertical_rank,
        hor1,
        omega_hor1,
        omega1_dim: o.dim(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BmMd {
    /// `Ω¹_hor = hor¹` and the vertical map is onto `B ⊗ A⁺`.
    pub holds: bool,
    /// `Ω¹_hor = hor¹` as subspaces of `B ⊗ B`.
    pub subspaces_equal: bool,
    pub contained: bool,
    /// `dim hor¹ − dim Ω¹_hor`.
    pub gap_dim: usize,
    pub vertical_cokernel_dim: usize,
    pub hor1_dim: usize,
    pub omega_hor1_dim: usize,
}

/// The horizontality criterion.
///
/// Equality of the two subspaces alone is equivalent to injectivity of the
/// canonical map on `B ⊗_V B`; the criterion is read together with exactness
/// of `0 → Ω¹_hor → Ω¹ → B ⊗ A⁺ → 0`, so `holds` also demands that the
/// vertical map be onto.
pub fn check_bm_md(v: &VerticalSplit) -> BmMd {
    let subspaces_equal = v.omega_hor1 == v.hor1;
    let contained = v.omega_hor1.is_subspace_of(&v.hor1);
    let vertical_cokernel_dim = v.vertical_dim() - v.vertical_rank;
    BmMd {
        holds: subspaces_equal && vertical_cokernel_dim == 0,
        subspaces_equal,
        contained,
        gap_dim: v.hor1.dim() - v.omega_hor1.dim(),
        vertical_cokernel_dim,
        hor1_dim: v.hor1.dim(),
        omega_hor1_dim: v.omega_hor1.dim(),
    }
}

/// `dim Ω¹ = dim hor¹ + dim B · (dim A − 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessLaw {
    pub holds: bool,
    pub omega1_dim: usize,
    pub hor1_dim: usize,
    pub vertical_dim: usize,
}

pub fn exactness_law(v: &VerticalSplit) -> ExactnessLaw {
    ExactnessLaw {
        holds: v.omega1_dim == v.hor1.dim() + v.vertical_dim(),
        omega1_dim: v.omega1_dim,
        hor1_dim: v.hor1.dim(),
        vertical_dim: v.vertical_dim(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub consistent: bool,
    pub galois: GaloisVerdict,
    pub bm_md: BmMd,
    pub exactness: ExactnessLaw,
}

/// Computes the Galois verdict and the horizontality criterion independently.
pub fn cross_check_galois(p: &Bundle) -> Result<CrossCheck> {
    let o = universal_fodc(p)?;
    let v = vertical_split(p, &o);
    let bm_md = check_bm_md(&v);
    if !bm_md.contained {
        return Err(Error::Invariant("Ω¹_hor is not contained in hor¹".into()));
    }
    let galois = galois_check(p);
    Ok(CrossCheck {
        consistent: galois.bijective == bm_md.holds,
        galois,
        bm_md,
        exactness: exactness_law(&v),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bundle::freeness_check;
    use crate::corpus::{self, GSetAction, GroupTable};

    fn z2_trivial() -> Bundle {
        corpus::trivial_bundle(Arc::new(corpus::fn_algebra(&GroupTable::cyclic(2)))).unwrap()
    }

    fn split(p: &Bundle) -> (UniversalFODC, VerticalSplit) {
        let o = universal_fodc(p).unwrap();
        let v = vertical_split(p, &o);
        (o, v)
    }

    #[test]
    fn trivial_z2_calculus() {
        let p = z2_trivial();
        let (o, v) = split(&p);
        assert_eq!(o.dim(), 2);
        let d0 = p.basis(0);
        let d1 = p.basis(1);
        let expected = Subspace::span(4, vec![kron_vec(&d0, &d1), kron_vec(&d1, &d0)]);
        assert_eq!(o.space, expected);
        assert!(o.d.mul_vec(p.unit()).iter().all(Scalar::is_zero));
        assert_eq!(v.hor1.dim(), 0);
        assert_eq!(v.omega_hor1.dim(), 0);
        let c = check_bm_md(&v);
        assert!(c.holds && c.subspaces_equal);
        assert_eq!(c.gap_dim, 0);
    }

    #[test]
    fn free_four_points() {
        let p = corpus::gset_bundle(&GSetAction::free_copies(GroupTable::cyclic(2), 2)).unwrap();
        let (o, v) = split(&p);
        assert_eq!(o.dim(), 12);
        assert_eq!(v.vertical_rank, 4);
        assert_eq!(v.hor1.dim(), 8);
        assert_eq!(v.omega_hor1.dim(), 8);
        assert!(check_bm_md(&v).holds);
        assert!(exactness_law(&v).holds);
        let x = cross_check_galois(&p).unwrap();
        assert!(x.consistent && x.galois.bijective);
    }

    #[test]
    fn non_free_control() {
        let p = corpus::gset_bundle(&GSetAction::z2_one_fixed_point()).unwrap();
        let (o, v) = split(&p);
        assert_eq!(o.dim(), 6);
        assert!(!v.vertical_surjective());
        assert_eq!(v.vertical_surjective(), freeness_check(&p).surjective);
        assert_eq!(v.hor1.dim(), 4);
        assert_eq!(v.omega_hor1.dim(), 4);
        let c = check_bm_md(&v);
        assert!(!c.holds);
        assert_eq!(c.vertical_cokernel_dim, 1);
        let law = exactness_law(&v);
        assert!(!law.holds);
        assert_eq!((law.omega1_dim, law.hor1_dim, law.vertical_dim), (6, 4, 3));
        let x = cross_check_galois(&p).unwrap();
        assert!(x.consistent && !x.galois.bijective && !x.bm_md.holds);
    }
}
