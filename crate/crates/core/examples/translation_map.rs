//! Builds the translation map both ways and checks that it inverts the canonical map.

use hopf_galois::bundle::{translation_map_pw, translation_map_solve, verify_prop1};
use hopf_galois::corpus::example;

fn main() {
    let e = example("s3-regular").expect("registry example");
    let p = &e.bundle;
    let irreps = e.irreps.as_deref().expect("S3 has built-in irreducibles");
    let pw = translation_map_pw(p, irreps).expect("free action");
    let solved = translation_map_solve(p).expect("free action");
    assert_eq!(pw, solved);

    let labels = p.labels();
    for (h, terms) in pw.triples(p).iter().enumerate() {
        let text: Vec<String> = terms
            .iter()
            .map(|(i, j, s)| format!("({s}) {}|{}", labels[*i], labels[*j]))
            .collect();
        println!("tau({}) = {}", p.hopf().labels()[h], text.join(" + "));
    }
    let r = verify_prop1(p, &pw);
    println!("X∘tau = id: {}, tau∘X = id: {}", r.x_tau_is_id, r.tau_x_is_id);
    if let Some(inv) = &r.invariance {
        println!(
            "invariance lemma: {} checks, {} failures",
            inv.checked,
            inv.failures.len()
        );
    }

    // the Sweedler algebra has S^2 ≠ id, so only the generic solve applies
    let sw = example("sweedler-trivial").expect("registry example").bundle;
    let t = translation_map_solve(&sw).expect("trivial bundles are Galois");
    println!("Sweedler: verified {}", verify_prop1(&sw, &t).ok());
}
