//! Exact rank, kernel and solving over a cyclotomic field.

use hopf_galois::exactlin::{kernel, row_reduce, solve, Mat, Scalar};

fn main() {
    let w = Scalar::root_of_unity(3, 1);
    println!("w = {w}, w^3 = {}", &(&w * &w) * &w);
    println!("1 + w + w^2 = {}", &(&Scalar::one() + &w) + &(&w * &w));

    let m = Mat::from_rows(vec![
        vec![Scalar::one(), w.clone(), &w * &w],
        vec![w.clone(), &w * &w, Scalar::one()],
        vec![Scalar::one(), Scalar::one(), Scalar::one()],
    ]);
    let r = row_reduce(&m);
    println!("rank {} with pivots {:?}", r.rank, r.image.pivots());
    for v in kernel(&m).basis() {
        let text: Vec<String> = v.iter().map(Scalar::to_string).collect();
        println!("kernel vector [{}]", text.join(", "));
    }
    let target = m.mul_vec(&[Scalar::ratio(1, 2), Scalar::zero(), Scalar::from_int(3)]);
    let x = solve(&m, &target).expect("target lies in the image");
    assert_eq!(m.mul_vec(&x), target);
    println!(
        "solution of the pivot rule: {:?}",
        x.iter().map(Scalar::to_string).collect::<Vec<_>>()
    );
}
