//! Horizontal forms of the universal calculus against the Galois verdict.

use hopf_galois::corpus::{example, EXAMPLES};
use hopf_galois::differential::cross_check_galois;

fn main() {
    println!(
        "{:18} {:>6} {:>6} {:>8} {:>9} {:>8} {:>6}",
        "bundle", "Ω¹", "hor¹", "Ω¹_hor", "ver coker", "galois", "holds"
    );
    for name in EXAMPLES {
        let p = example(name).expect("registry example").bundle;
        let c = cross_check_galois(&p).expect("containment always holds");
        println!(
            "{:18} {:>6} {:>6} {:>8} {:>9} {:>8} {:>6}{}",
            name,
            c.exactness.omega1_dim,
            c.bm_md.hor1_dim,
            c.bm_md.omega_hor1_dim,
            c.bm_md.vertical_cokernel_dim,
            c.galois.bijective,
            c.bm_md.holds,
            if c.consistent { "" } else { "  INCONSISTENT" }
        );
    }
}
