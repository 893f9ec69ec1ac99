//! Peter-Weyl decomposition of a bundle algebra into intertwiner spaces.

use hopf_galois::bundle::peter_weyl_decompose;
use hopf_galois::corpus::example;

fn main() {
    for name in ["z2-nonfree3", "z3-regular", "s3-free12"] {
        let e = example(name).expect("registry example");
        let irreps = e.irreps.as_deref().expect("built-in irreducibles");
        let pw = peter_weyl_decompose(&e.bundle, irreps).expect("valid corepresentations");
        println!("{name}: dim B = {}, complete {}", pw.bundle_dim, pw.complete);
        for c in pw.summary() {
            println!(
                "  {:8} multiplicity {} x dimension {}",
                c.corep, c.multiplicity, c.carrier_dim
            );
        }
        let fewer = &irreps[..irreps.len() - 1];
        let partial = peter_weyl_decompose(&e.bundle, fewer).expect("valid corepresentations");
        println!(
            "  without {}: total {} of {}, complete {}",
            irreps[irreps.len() - 1].name(),
            partial.total_dim,
            pw.bundle_dim,
            partial.complete
        );
    }
}
