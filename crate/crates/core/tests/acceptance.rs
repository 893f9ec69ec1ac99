//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hopf_galois::bundle::{
    dual_bases, freeness_check, galois_check, peter_weyl_decompose, translation_map_pw, translation_map_solve,
    verify_prop1, Bundle,
};
use hopf_galois::corpus::{self, example, Example, EXAMPLES};
use hopf_galois::differential::{cross_check_galois, exactness_law, universal_fodc, vertical_split};
use hopf_galois::exactlin::Scalar;
use hopf_galois::hopf::{check_hopf, HopfAlgebra, HopfData};
use hopf_galois::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FREE_CORPUS: [&str; 5] = ["z2-regular", "z2-free4", "z3-regular", "s3-regular", "s3-free12"];
const BUDGET: Duration = Duration::from_secs(5);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn load(name: &str) -> Example {
    example(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn irreps(e: &Example) -> &[hopf_galois::hopf::Corep] {
    e.irreps
        .as_deref()
        .unwrap_or_else(|| panic!("{} has no irreducibles", e.name))
}

fn translation_reproduced() -> Outcome {
    let mut failures = Vec::new();
    let mut times = Vec::new();
    for name in FREE_CORPUS {
        let e = load(name);
        let start = Instant::now();
        let verdict = translation_map_pw(&e.bundle, irreps(&e)).map(|t| verify_prop1(&e.bundle, &t));
        let took = start.elapsed();
        times.push(format!("{name} {} ms", took.as_millis()));
        match verdict {
            Ok(r) if r.x_tau_is_id && r.tau_x_is_id && r.ok() && took < BUDGET => {}
            Ok(r) => failures.push(format!("{name}: {r:?} in {took:?}")),
            Err(err) => failures.push(format!("{name}: {err}")),
        }
    }
    outcome(failures.is_empty(), [times, failures].concat().join("; "))
}

fn constructors_agree() -> Outcome {
    let mut failures = Vec::new();
    for name in FREE_CORPUS {
        let e = load(name);
        let pw = translation_map_pw(&e.bundle, irreps(&e));
        let solve = translation_map_solve(&e.bundle);
        match (pw, solve) {
            (Ok(a), Ok(b)) if a.values() == b.values() => {}
            (a, b) => failures.push(format!("{name}: pw ok {} solve ok {}", a.is_ok(), b.is_ok())),
        }
    }
    let n = FREE_CORPUS.len();
    outcome(
        failures.is_empty(),
        format!("{} of {n} tables identical {failures:?}", n - failures.len()),
    )
}

fn negative_control() -> Outcome {
    let e = load("z2-nonfree3");
    let p = &e.bundle;
    let f = freeness_check(p);
    let g = galois_check(p);
    let sign = &irreps(&e)[1];
    let not_principal = matches!(dual_bases(p, sign), Err(Error::NotPrincipal { .. }));
    let pass = !f.surjective && f.rank == 5 && f.target_dim == 6 && !g.bijective && not_principal;
    outcome(
        pass,
        format!(
            "freeness rank {} of {}, bijective {}, dual_bases({}) not principal {}",
            f.rank,
            f.target_dim,
            g.bijective,
            sign.name(),
            not_principal
        ),
    )
}

fn sweedler_generic_path() -> Outcome {
    let p = load("sweedler-trivial").bundle;
    let g = galois_check(&p);
    let oracle = common::antipode_oracle(p.hopf());
    let q = p.tensor_over_base();
    let matches = match translation_map_solve(&p) {
        Ok(t) => (0..p.hopf().dim())
            .filter(|&h| t.value(h) == &q.project(&oracle[h]))
            .count(),
        Err(_) => 0,
    };
    let pass = g.bijective && g.rank == 16 && g.target_dim == 16 && matches == 4;
    outcome(
        pass,
        format!(
            "rank {} of {}, {matches} of 4 values equal S(h(1)) ⊗ h(2)",
            g.rank, g.target_dim
        ),
    )
}

fn horizontality_equivalence() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for name in EXAMPLES {
        let p = load(name).bundle;
        match cross_check_galois(&p) {
            Ok(c) => {
                pass &= c.consistent;
                lines.push(format!("{name} {}/{}", c.galois.bijective, c.bm_md.holds));
            }
            Err(e) => {
                pass = false;
                lines.push(format!("{name} error {e}"));
            }
        }
    }
    outcome(pass, format!("bijective/holds: {}", lines.join(", ")))
}

fn peter_weyl_completeness() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for name in EXAMPLES {
        let e = load(name);
        let Some(list) = &e.irreps else { continue };
        let p = &e.bundle;
        let full = peter_weyl_decompose(p, list).unwrap();
        pass &= full.complete && full.total_dim == p.dim();
        let mut flips = 0;
        for skip in 0..list.len() {
            let fewer: Vec<_> = list
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, u)| u.clone())
                .collect();
            if !peter_weyl_decompose(p, &fewer).unwrap().complete {
                flips += 1;
            }
        }
        pass &= flips == list.len();
        lines.push(format!(
            "{name} {}={} ({flips}/{} omissions detected)",
            full.total_dim,
            p.dim(),
            list.len()
        ));
    }
    outcome(pass, lines.join(", "))
}

fn exact_sequence_law() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for name in EXAMPLES {
        let p: Bundle = load(name).bundle;
        let v = vertical_split(&p, &universal_fodc(&p).unwrap());
        let law = exactness_law(&v);
        let free = freeness_check(&p).surjective;
        pass &= law.holds == free;
        if *name == "z2-nonfree3" {
            pass &= !law.holds;
        }
        lines.push(format!(
            "{name} {}{}{}+{}",
            law.omega1_dim,
            if law.holds { "=" } else { "≠" },
            law.hor1_dim,
            law.vertical_dim
        ));
    }
    outcome(pass, lines.join(", "))
}

#[derive(Clone, Copy, Debug)]
enum Field {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
}

fn mutate(data: &mut HopfData, field: Field, rng: &mut ChaCha8Rng, delta: Scalar) -> String {
    let n = data.labels.len();
    let mut idx = || rng.gen_range(0..n);
    match field {
        Field::Mult => {
            let e = (idx(), idx(), idx(), delta);
            let tag = format!("mult {:?}", (e.0, e.1, e.2));
            data.mult.push(e);
            tag
        }
        Field::Comult => {
            let e = (idx(), idx(), idx(), delta);
            let tag = format!("comult {:?}", (e.0, e.1, e.2));
            data.comult.push(e);
            tag
        }
        Field::Unit => {
            let i = idx();
            data.unit.push((i, delta));
            format!("unit {i}")
        }
        Field::Counit => {
            let i = idx();
            data.counit.push((i, delta));
            format!("counit {i}")
        }
        Field::Antipode => {
            let (i, j) = (idx(), idx());
            data.antipode.push((i, j, delta));
            format!("antipode {:?}", (i, j))
        }
    }
}

fn axiom_fuzzing() -> Outcome {
    let fields = [Field::Mult, Field::Unit, Field::Comult, Field::Counit, Field::Antipode];
    let deltas = [
        Scalar::one(),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::ratio(-1, 2),
    ];
    let mut lines = Vec::new();
    let mut escaped = Vec::new();
    for (seed, h) in corpus::hopf_algebras().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
        let base = h.to_data();
        let mut by_axiom: BTreeMap<&'static str, usize> = BTreeMap::new();
        for step in 0..100 {
            let mut data = base.clone();
            let delta = deltas.choose(&mut rng).unwrap().clone();
            let tag = mutate(&mut data, fields[step % fields.len()], &mut rng, delta);
            let report = check_hopf(&HopfAlgebra::from_data(data).expect("indices stay in range"));
            match report.violations.first() {
                Some(v) if !report.ok => *by_axiom.entry(v.axiom.name()).or_default() += 1,
                _ => escaped.push(format!("{} {tag}", h.name())),
            }
        }
        lines.push(format!("{} {:?}", h.name(), by_axiom));
    }
    let pass = escaped.is_empty();
    outcome(pass, format!("{}; escaped {escaped:?}", lines.join("; ")))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("translation map inverts the canonical map", translation_reproduced),
        ("Peter-Weyl and generic constructors agree", constructors_agree),
        ("non-free control is detected", negative_control),
        ("non-cosemisimple generic path", sweedler_generic_path),
        (
            "horizontality criterion matches the Galois verdict",
            horizontality_equivalence,
        ),
        ("Peter-Weyl completeness", peter_weyl_completeness),
        ("exact-sequence dimension law", exact_sequence_law),
        ("axiom fuzzing", axiom_fuzzing),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!(
            "{status} criterion {}: {title} [{} ms] {}",
            i + 1,
            start.elapsed().as_millis(),
            o.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
