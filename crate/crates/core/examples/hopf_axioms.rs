//! Checks the Hopf axioms for the built-in algebras and shows what a broken structure constant looks like.

use hopf_galois::corpus;
use hopf_galois::exactlin::Scalar;
use hopf_galois::hopf::{check_hopf, HopfAlgebra};

fn main() {
    for h in corpus::hopf_algebras() {
        let r = check_hopf(&h);
        println!(
            "{:6} dim {:2}  ok {}  S bijective {}  S^2 = id {}",
            h.name(),
            h.dim(),
            r.ok,
            r.s_bijective,
            r.s_squared_is_id
        );
    }

    let mut data = corpus::sweedler().to_data();
    data.antipode.push((2, 3, Scalar::ratio(-1, 2)));
    let broken = HopfAlgebra::from_data(data).expect("indices are in range");
    for v in check_hopf(&broken).violations {
        println!("mutated H4: {v}");
    }
}
