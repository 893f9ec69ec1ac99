//! Decides the Galois property for every registry bundle.

use hopf_galois::bundle::{freeness_check, galois_check};
use hopf_galois::corpus::{example, EXAMPLES};

fn main() {
    println!(
        "{:18} {:>4} {:>4} {:>6} {:>9} {:>9}",
        "bundle", "dimB", "dimV", "rank", "kernel", "cokernel"
    );
    for name in EXAMPLES {
        let p = example(name).expect("registry example").bundle;
        let f = freeness_check(&p);
        let g = galois_check(&p);
        println!(
            "{:18} {:>4} {:>4} {:>3}/{:<3}{:>9} {:>9}  {}",
            name,
            p.dim(),
            p.base().dim(),
            g.rank,
            g.target_dim,
            g.kernel_dim,
            f.cokernel_dim,
            if g.bijective { "Galois" } else { "not Galois" }
        );
    }
}
