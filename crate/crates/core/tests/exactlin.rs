mod common;

use hopf_galois::exactlin::{kernel, kron, quotient, row_reduce, solve, Mat, Scalar, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mat_from(rows: &[Vec<i64>]) -> Mat {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Mat::from_i64(&refs)
}

#[test]
fn six_by_six_rank_matches_second_elimination() {
    // a 6×4 times 4×6 product, so the rank is generically 4
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let a = common::random_int_matrix(&mut rng, 6, 4, 5);
    let b = common::random_int_matrix(&mut rng, 4, 6, 5);
    let m = common::int_product(&a, &b);
    let oracle = common::bareiss_rank(&m);
    assert_eq!(oracle, 4);
    let r = row_reduce(&mat_from(&m));
    assert_eq!(r.rank, 4);
    assert_eq!(r.rank + r.kernel.dim(), 6);
}

#[test]
fn solve_under_the_pivot_rule() {
    let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
    let x = solve(&m, &[Scalar::from_int(2), Scalar::from_int(2)]).unwrap();
    assert_eq!(x, vec![Scalar::from_int(2), Scalar::zero()]);
    assert!(solve(&m, &[Scalar::one(), Scalar::zero()]).is_none());
    let k = kernel(&m);
    assert_eq!(k, Subspace::span(2, vec![vec![Scalar::one(), Scalar::from_int(-1)]]));
}

#[test]
fn kron_rank_multiplies() {
    let a = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
    let b = Mat::from_i64(&[&[1, 1], &[1, 1]]);
    assert_eq!(
        a.rank(),
        common::bareiss_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]])
    );
    assert_eq!(kron(&a, &b).rank(), a.rank() * b.rank());
    assert!(kron(&Mat::identity(2), &Mat::identity(3)).is_identity());
    let two = Mat::from_i64(&[&[2]]);
    assert_eq!(kron(&two, &a), a.scale(&Scalar::from_int(2)));
}

fn cyclotomic(conductor: u32, coeffs: Vec<(i64, i64)>) -> Scalar {
    let mut s = Scalar::zero();
    for (k, (p, q)) in coeffs.into_iter().enumerate() {
        s += &(&Scalar::ratio(p, q) * &Scalar::root_of_unity(conductor, k as u32));
    }
    s
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]),
        prop::collection::vec((-5i64..=5, 1i64..=4), 1..6),
    )
        .prop_map(|(n, c)| cyclotomic(n, c))
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&(&a * &a.inv().unwrap()), &Scalar::one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn parse_inverts_format(a in scalar_strategy(), widen in prop::sample::select(vec![1u32, 2, 3])) {
        let m = a.conductor() * widen;
        prop_assert_eq!(Scalar::parse(&a.format_in(m), m).unwrap(), a.clone());
        prop_assert_eq!(Scalar::parse(&a.to_string(), a.conductor()).unwrap(), a);
    }

    #[test]
    fn rank_is_transpose_invariant(rows in int_matrix(6)) {
        let m = mat_from(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), common::bareiss_rank(&rows));
    }

    #[test]
    fn kernel_and_image_are_complementary(rows in int_matrix(6)) {
        let m = mat_from(&rows);
        let r = row_reduce(&m);
        prop_assert_eq!(r.rank + r.kernel.dim(), m.cols());
        prop_assert_eq!(r.image.dim(), r.rank);
        for v in r.kernel.basis() {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_returns_a_solution(rows in int_matrix(5), x in prop::collection::vec(-3i64..=3, 5)) {
        let m = mat_from(&rows);
        let x: Vec<Scalar> = x.into_iter().take(m.cols()).map(Scalar::from_int).collect();
        let x: Vec<Scalar> = x.into_iter().chain(std::iter::repeat(Scalar::zero())).take(m.cols()).collect();
        let target = m.mul_vec(&x);
        let y = solve(&m, &target).expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&y), target);
    }

    #[test]
    fn quotient_section_and_relations(rows in int_matrix(6)) {
        let n = rows[0].len();
        let rel = Subspace::span(n, mat_from(&rows).row_vecs());
        let q = quotient(n, &rel);
        prop_assert_eq!(q.dim, n - rel.dim());
        prop_assert!(q.project.mul(&q.section).is_identity());
        for r in rel.basis() {
            prop_assert!(q.project.mul_vec(r).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(kernel(&q.project), rel);
    }
}
