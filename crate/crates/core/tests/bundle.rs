use std::sync::Arc;

use hopf_galois::bundle::{
    dual_bases, freeness_check, galois_check, intertwiner_space, peter_weyl_decompose, tau_extended,
    translation_map_pw, translation_map_solve, verify_prop1, Bundle, TranslationMethod, TranslationTable,
};
use hopf_galois::corpus::{
    self, builtin_irreps, fn_algebra, gset_bundle, trivial_bundle, GSetAction, GroupName, GroupTable,
};
use hopf_galois::differential::{check_bm_md, cross_check_galois, exactness_law, universal_fodc, vertical_split};
use hopf_galois::exactlin::{kron_vec, Scalar, Subspace};
use hopf_galois::hopf::Corep;
use hopf_galois::Error;
use proptest::prelude::*;

fn bundle(name: &str) -> Bundle {
    corpus::example(name).unwrap().bundle
}

fn irreps_of(p: &Bundle, g: GroupName) -> Vec<Corep> {
    builtin_irreps(g, p.hopf()).unwrap()
}

fn z2_trivial() -> Bundle {
    trivial_bundle(Arc::new(fn_algebra(&GroupTable::cyclic(2)))).unwrap()
}

fn vec_i(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

#[test]
fn base_and_tensor_dimensions() {
    for (name, base, tensor) in [("z2-trivial", 1, 4), ("z2-free4", 2, 8), ("z2-nonfree3", 2, 5)] {
        let p = bundle(name);
        assert_eq!(p.base().dim(), base, "{name}");
        assert_eq!(p.tensor_over_base().dim(), tensor, "{name}");
        assert!(p.tensor_over_base().mult_descends);
    }
}

#[test]
fn freeness_and_galois_on_the_z2_family() {
    let f = freeness_check(&bundle("z2-free4"));
    assert_eq!((f.surjective, f.rank, f.target_dim), (true, 8, 8));
    let f = freeness_check(&bundle("z2-nonfree3"));
    assert_eq!((f.surjective, f.rank, f.target_dim, f.cokernel_dim), (false, 5, 6, 1));
    assert!(!galois_check(&bundle("z2-nonfree3")).bijective);
    let g = galois_check(&bundle("sweedler-trivial"));
    assert_eq!((g.bijective, g.rank, g.target_dim), (true, 16, 16));
}

#[test]
fn canonical_map_on_the_trivial_bundle() {
    let p = z2_trivial();
    let x = p.canonical_map();
    // V = k, so the quotient basis is the pure tensors δ_i ⊗ δ_j in order
    let one_one = p.tensor_over_base().project(&kron_vec(p.unit(), p.unit()));
    assert_eq!(x.apply(&one_one), kron_vec(p.unit(), p.hopf().unit()));
    let d0d1 = p.tensor_over_base().project(&vec_i(&[0, 1, 0, 0]));
    assert_eq!(x.apply(&d0d1), vec_i(&[0, 1, 0, 0]));
}

#[test]
fn intertwiners_of_the_trivial_corep_span_the_base() {
    for name in ["z2-trivial", "z2-free4", "z2-nonfree3", "s3-regular"] {
        let p = bundle(name);
        let bim = intertwiner_space(&p, &Corep::trivial(p.hopf().clone())).unwrap();
        let images = bim.basis.iter().map(|phi| phi.apply(0).clone()).collect();
        assert_eq!(Subspace::span(p.dim(), images), p.base().space, "{name}");
    }
}

#[test]
fn intertwiner_dimensions() {
    let p = bundle("z2-free4");
    let irreps = irreps_of(&p, GroupName::Cyclic(2));
    assert_eq!(intertwiner_space(&p, &irreps[1]).unwrap().dim(), 2);

    let p = bundle("s3-regular");
    let dims: Vec<usize> = irreps_of(&p, GroupName::S3)
        .iter()
        .map(|u| intertwiner_space(&p, u).unwrap().dim())
        .collect();
    assert_eq!(dims, vec![1, 1, 2]);
}

#[test]
fn peter_weyl_examples() {
    let p = bundle("z2-free4");
    let pw = peter_weyl_decompose(&p, &irreps_of(&p, GroupName::Cyclic(2))).unwrap();
    assert_eq!((pw.total_dim, pw.complete), (4, true));

    let p = bundle("s3-regular");
    let pw = peter_weyl_decompose(&p, &irreps_of(&p, GroupName::S3)).unwrap();
    assert_eq!((pw.total_dim, pw.complete), (6, true));
    let mults: Vec<_> = pw.summary().iter().map(|c| (c.multiplicity, c.carrier_dim)).collect();
    assert_eq!(mults, vec![(1, 1), (1, 1), (2, 2)]);

    let p = bundle("z3-regular");
    let only_trivial = vec![Corep::trivial(p.hopf().clone())];
    let pw = peter_weyl_decompose(&p, &only_trivial).unwrap();
    assert_eq!((pw.total_dim, pw.complete), (1, false));
    assert!(matches!(
        translation_map_pw(&p, &only_trivial),
        Err(Error::IncompleteIrreps(_))
    ));
}

#[test]
fn dual_bases_examples() {
    let p = z2_trivial();
    let db = dual_bases(&p, &Corep::trivial(p.hopf().clone())).unwrap();
    assert_eq!(db.pairs.len(), 1);
    assert_eq!(db.pairing(&p, 0, 0), *p.unit());

    let chi = vec_i(&[1, -1]);
    let sign = &irreps_of(&p, GroupName::Cyclic(2))[1];
    let db = dual_bases(&p, sign).unwrap();
    assert_eq!(db.pairs.len(), 1);
    let (nu, mu) = &db.pairs[0];
    assert_eq!((nu.apply(0), mu.apply(0)), (&chi, &chi));
    assert_eq!(p.mul(&chi, &chi), *p.unit());

    let p = bundle("z2-nonfree3");
    let sign = &irreps_of(&p, GroupName::Cyclic(2))[1];
    assert!(matches!(dual_bases(&p, sign), Err(Error::NotPrincipal { .. })));

    let p = bundle("sweedler-trivial");
    assert!(matches!(
        dual_bases(&p, &Corep::trivial(p.hopf().clone())),
        Err(Error::AntipodeNotInvolutive)
    ));
}

#[test]
fn translation_values_on_the_trivial_bundle() {
    let p = z2_trivial();
    let t = translation_map_pw(&p, &irreps_of(&p, GroupName::Cyclic(2))).unwrap();
    let q = p.tensor_over_base();
    // τ(1) = 1 ⊗ 1
    let tau_one = q.project(&kron_vec(p.unit(), p.unit()));
    let mut sum = t.value(0).clone();
    for (s, x) in sum.iter_mut().zip(t.value(1)) {
        *s += x;
    }
    assert_eq!(sum, tau_one);
    assert_eq!(t.value(0), &q.project(&vec_i(&[1, 0, 0, 1])));
    assert_eq!(t.value(1), &q.project(&vec_i(&[0, 1, 1, 0])));
    // τ(χ) = χ ⊗ χ
    let chi = vec_i(&[1, -1]);
    let tau_chi: Vec<Scalar> = t.value(0).iter().zip(t.value(1)).map(|(a, b)| a - b).collect();
    assert_eq!(tau_chi, q.project(&kron_vec(&chi, &chi)));
    assert_eq!(t, translation_map_solve(&p).unwrap());
    assert_eq!(t.method(), TranslationMethod::PeterWeyl);
}

#[test]
fn solve_refuses_a_non_galois_bundle() {
    let err = translation_map_solve(&bundle("z2-nonfree3")).unwrap_err();
    assert!(matches!(
        err,
        Error::NotGalois {
            kernel_dim: 0,
            cokernel_dim: 1
        }
    ));
}

#[test]
fn table_constructor_checks_its_invariant() {
    let p = bundle("z2-free4");
    let t = translation_map_solve(&p).unwrap();
    let mut values = t.values().to_vec();
    values[1] = vec![Scalar::zero(); values[1].len()];
    assert!(matches!(
        TranslationTable::new(&p, TranslationMethod::Solve, values.clone()),
        Err(Error::Invariant(_))
    ));
    let broken = TranslationTable::from_values_unchecked(TranslationMethod::Solve, values);
    let r = verify_prop1(&p, &broken);
    assert!(!r.x_tau_is_id && !r.ok());
    assert!(r.x_tau_witness.is_some());
}

#[test]
fn sweedler_verifies_without_the_invariance_lemma() {
    let p = bundle("sweedler-trivial");
    let t = translation_map_solve(&p).unwrap();
    let r = verify_prop1(&p, &t);
    assert!(r.x_tau_is_id && r.tau_x_is_id && r.ok());
    assert!(r.invariance.is_none());
}

#[test]
fn differential_dimensions() {
    let p = z2_trivial();
    let o = universal_fodc(&p).unwrap();
    assert_eq!(o.dim(), 2);
    assert_eq!(
        o.space,
        Subspace::span(4, vec![vec_i(&[0, 1, 0, 0]), vec_i(&[0, 0, 1, 0])])
    );
    let v = vertical_split(&p, &o);
    assert_eq!((v.hor1.dim(), v.omega_hor1.dim()), (0, 0));
    assert!(check_bm_md(&v).holds);

    let p = bundle("z2-free4");
    let v = vertical_split(&p, &universal_fodc(&p).unwrap());
    assert_eq!(
        (v.omega1_dim, v.vertical_rank, v.hor1.dim(), v.omega_hor1.dim()),
        (12, 4, 8, 8)
    );
    assert!(check_bm_md(&v).holds && exactness_law(&v).holds);

    let p = bundle("z2-nonfree3");
    let v = vertical_split(&p, &universal_fodc(&p).unwrap());
    assert!(!v.vertical_surjective());
    let bm = check_bm_md(&v);
    assert!(!bm.holds && bm.contained);
    assert_eq!(bm.vertical_cokernel_dim, 1);
    assert!(!exactness_law(&v).holds);
}

/// Right cosets of every cyclic subgroup plus the whole group.
fn coset_spaces(g: &GroupTable) -> Vec<Vec<Vec<usize>>> {
    let n = g.order();
    let mut subgroups: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let mut k = vec![g.identity()];
        let mut y = x;
        while y != g.identity() {
            k.push(y);
            y = g.mul(y, x);
        }
        k.sort();
        subgroups.push(k);
    }
    subgroups.push((0..n).collect());
    subgroups.sort();
    subgroups.dedup();
    subgroups
        .into_iter()
        .map(|k| {
            let mut cosets: Vec<Vec<usize>> = (0..n)
                .map(|x| {
                    let mut c: Vec<usize> = k.iter().map(|&h| g.mul(h, x)).collect();
                    c.sort();
                    c
                })
                .collect();
            cosets.sort();
            cosets.dedup();
            cosets
        })
        .collect()
}

fn union_of_orbits(g: &GroupTable, picks: &[usize]) -> GSetAction {
    let spaces = coset_spaces(g);
    let mut points: Vec<Vec<usize>> = Vec::new();
    let mut offsets = Vec::new();
    for &i in picks {
        offsets.push(points.len());
        points.extend(spaces[i % spaces.len()].iter().cloned());
    }
    let mut grid = vec![vec![0; g.order()]; points.len()];
    for (o, &i) in offsets.iter().zip(picks) {
        let cosets = &spaces[i % spaces.len()];
        for (ci, c) in cosets.iter().enumerate() {
            for (h, slot) in grid[o + ci].iter_mut().enumerate() {
                let mut moved: Vec<usize> = c.iter().map(|&x| g.mul(x, h)).collect();
                moved.sort();
                *slot = o + cosets.iter().position(|d| *d == moved).unwrap();
            }
        }
    }
    GSetAction::from_grid("orbits", g.clone(), grid).unwrap()
}

fn gset_strategy(max_points: usize) -> impl Strategy<Value = (GroupName, GSetAction)> {
    (
        prop::sample::select(vec![GroupName::Cyclic(2), GroupName::Cyclic(3), GroupName::S3]),
        prop::collection::vec(0usize..8, 1..=3),
    )
        .prop_map(|(name, picks)| (name, union_of_orbits(&name.table(), &picks)))
        .prop_filter("desk scale", move |(_, a)| a.points() <= max_points)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn free_actions_are_exactly_the_galois_ones((name, action) in gset_strategy(12)) {
        let p = gset_bundle(&action).unwrap();
        let verdict = galois_check(&p);
        prop_assert_eq!(verdict.bijective, action.is_free());
        prop_assert_eq!(freeness_check(&p).surjective, action.is_free());
        let pw = peter_weyl_decompose(&p, &irreps_of(&p, name)).unwrap();
        prop_assert!(pw.complete);
        prop_assert_eq!(pw.total_dim, p.dim());
        if action.is_free() {
            let t = translation_map_pw(&p, &irreps_of(&p, name)).unwrap();
            prop_assert_eq!(&t, &translation_map_solve(&p).unwrap());
            prop_assert!(verify_prop1(&p, &t).ok());
        }
    }

    #[test]
    fn horizontality_agrees_with_galois((_, action) in gset_strategy(9)) {
        let p = gset_bundle(&action).unwrap();
        let c = cross_check_galois(&p).unwrap();
        prop_assert!(c.consistent);
        prop_assert!(c.bm_md.contained);
        prop_assert_eq!(c.exactness.holds, freeness_check(&p).surjective);
        prop_assert_eq!(c.bm_md.vertical_cokernel_dim == 0, freeness_check(&p).surjective);
    }

    #[test]
    fn extended_translation_is_left_linear((_, action) in gset_strategy(8).prop_filter("free", |(_, a)| a.is_free())) {
        let p = gset_bundle(&action).unwrap();
        let t = translation_map_solve(&p).unwrap();
        let tau = tau_extended(&p, &t);
        let (n, da) = (p.dim(), p.hopf().dim());
        let q = p.tensor_over_base();
        for b in 0..n {
            let left = p.basis(b);
            for a in 0..da {
                let lifted = q.lift(t.value(a));
                let mut moved = vec![Scalar::zero(); n * n];
                for i in 0..n {
                    let bi = p.mul(&left, &p.basis(i));
                    for j in 0..n {
                        let c = &lifted[i * n + j];
                        if c.is_zero() {
                            continue;
                        }
                        for (k, x) in bi.iter().enumerate() {
                            moved[k * n + j] += &(c * x);
                        }
                    }
                }
                prop_assert_eq!(tau.column(b * da + a), q.project(&moved));
            }
        }
    }
}
