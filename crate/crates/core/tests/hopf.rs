use std::sync::Arc;

use hopf_galois::corpus::{self, builtin_irreps, fn_algebra, GroupName, GroupTable};
use hopf_galois::exactlin::{kernel, Mat, Scalar};
use hopf_galois::hopf::{check_corep, check_hopf, corep_dual, corep_product, Axiom, Corep, HopfAlgebra};

fn kz2() -> Arc<HopfAlgebra> {
    Arc::new(fn_algebra(&GroupTable::cyclic(2)))
}

fn s3() -> (Arc<HopfAlgebra>, Vec<Corep>) {
    let h = Arc::new(fn_algebra(&GroupTable::symmetric(3)));
    let irreps = builtin_irreps(GroupName::S3, &h).unwrap();
    (h, irreps)
}

#[test]
fn every_corpus_algebra_passes_with_an_invertible_antipode() {
    for h in corpus::hopf_algebras() {
        let r = check_hopf(&h);
        assert!(r.ok, "{}: {:?}", h.name(), r.violations);
        assert!(r.s_bijective, "{}", h.name());
        assert_eq!(h.antipode(h.unit()), *h.unit());
        for i in 0..h.dim() {
            let e = h.basis(i);
            assert_eq!(h.counit(&h.antipode(&e)), h.counit(&e), "{} ε∘S at {i}", h.name());
        }
    }
}

#[test]
fn s_squared_is_the_identity_except_for_sweedler() {
    for h in corpus::hopf_algebras() {
        assert_eq!(h.s_squared_is_id(), h.name() != "H4", "{}", h.name());
    }
}

#[test]
fn corep_checks() {
    let h = kz2();
    assert!(check_corep(&Corep::trivial(h.clone())));
    let chi = Corep::new(h.clone(), "sign", 1, vec![vec![Scalar::one(), Scalar::from_int(-1)]]).unwrap();
    assert!(check_corep(&chi));
    let broken = Corep::new(h.clone(), "zero", 1, vec![vec![Scalar::zero(), Scalar::zero()]]).unwrap();
    assert!(!check_corep(&broken));

    let (_, irreps) = s3();
    let std = &irreps[2];
    let mut grid = std.coeffs().to_vec();
    grid[0] = vec![Scalar::zero(); 6];
    assert!(!check_corep(&Corep::new(std.hopf().clone(), "std'", 2, grid).unwrap()));
}

#[test]
fn products_and_duals() {
    let (_, irreps) = s3();
    let [triv, sign, std] = [&irreps[0], &irreps[1], &irreps[2]];
    let ss = corep_product(sign, sign).unwrap();
    assert_eq!(ss.coeffs(), triv.coeffs());
    let st = corep_product(std, std).unwrap();
    assert_eq!(st.dim(), 4);
    assert!(check_corep(&st));
    assert_eq!(corep_product(std, triv).unwrap().coeffs(), std.coeffs());
    assert_eq!(corep_dual(triv).coeffs(), triv.coeffs());
    assert_eq!(corep_dual(sign).coeffs(), sign.coeffs());
    assert!(check_corep(&corep_dual(std)));
}

#[test]
fn corep_product_is_associative() {
    let (_, irreps) = s3();
    let [_, sign, std] = [&irreps[0], &irreps[1], &irreps[2]];
    for (a, b, c) in [(std, sign, std), (std, std, sign), (sign, std, std)] {
        let left = corep_product(&corep_product(a, b).unwrap(), c).unwrap();
        let right = corep_product(a, &corep_product(b, c).unwrap()).unwrap();
        assert_eq!(left.coeffs(), right.coeffs());
    }
}

/// The contraction `e_i^* ⊗ e_j ↦ δ_ij` intertwines `ǔ × u` with the trivial corep:
/// `Σ_i ǔ_ia u_ib = δ_ab 1` in the coordinates of `ǔ × u` on `H^* ⊗ H`.
#[test]
fn contraction_intertwines_dual_product_with_trivial() {
    let (h, irreps) = s3();
    for u in irreps.iter().chain([&corep_product(&irreps[2], &irreps[2]).unwrap()]) {
        let d = corep_dual(u);
        let m = u.dim();
        for a in 0..m {
            for b in 0..m {
                let mut sum = vec![Scalar::zero(); h.dim()];
                for i in 0..m {
                    let prod = h.mul(d.coeff(i, a), u.coeff(i, b));
                    for (s, p) in sum.iter_mut().zip(prod) {
                        *s += &p;
                    }
                }
                let want = if a == b {
                    h.unit().clone()
                } else {
                    vec![Scalar::zero(); h.dim()]
                };
                assert_eq!(sum, want, "{} at ({a}, {b})", u.name());
            }
        }
    }
}

/// With an involution present the antipode dual agrees with the conjugate
/// `u^c_ij = (u_ij)^*` exactly for the characters, and for the standard
/// corepresentation of S3 only up to equivalence: its carrier basis is not orthonormal.
#[test]
fn antipode_dual_versus_involution() {
    for n in [2, 3, 4, 5] {
        let h = Arc::new(fn_algebra(&GroupTable::cyclic(n)));
        for chi in builtin_irreps(GroupName::Cyclic(n), &h).unwrap() {
            let star = h.star(chi.coeff(0, 0)).unwrap();
            assert_eq!(corep_dual(&chi).coeff(0, 0), &star, "Z/{n} {}", chi.name());
        }
    }
    let (h, irreps) = s3();
    let std = &irreps[2];
    let dual = corep_dual(std);
    let conj: Vec<_> = std.coeffs().iter().map(|c| h.star(c).unwrap()).collect();
    assert_ne!(dual.coeffs(), conj.as_slice());
    let conj = Corep::new(h.clone(), "std^c", 2, conj).unwrap();
    assert!(check_corep(&conj));
    // equivalent: some invertible T has T·ǔ = u^c·T
    let mut eqs = Mat::zeros(4 * h.dim(), 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for a in 0..h.dim() {
                    let row = (i * 2 + j) * h.dim() + a;
                    eqs.add_at(row, i * 2 + k, &dual.coeff(k, j)[a]);
                    eqs.add_at(row, k * 2 + j, &-&conj.coeff(i, k)[a]);
                }
            }
        }
    }
    let solutions = kernel(&eqs);
    let invertible = solutions
        .basis()
        .iter()
        .any(|t| !(&(&t[0] * &t[3]) - &(&t[1] * &t[2])).is_zero());
    assert!(invertible);
}

#[test]
fn group_algebra_involution_is_checked() {
    let h = corpus::group_algebra(&GroupTable::symmetric(3));
    let mut data = h.to_data();
    // g ↦ g instead of g ↦ g⁻¹ on a 3-cycle breaks antimultiplicativity
    let inv = data.involution.as_mut().unwrap();
    inv.retain(|e| e.0 != 3);
    inv.push((3, 3, Scalar::one()));
    let r = check_hopf(&HopfAlgebra::from_data(data).unwrap());
    assert!(!r.ok);
    assert!(r
        .violations
        .iter()
        .any(|v| v.axiom == Axiom::InvolutionAntimultiplicative));
}
