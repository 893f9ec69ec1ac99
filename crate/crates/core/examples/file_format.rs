//! Emits a registry example in the text format, parses it back and runs the CLI on it.

use hopf_galois::cli::{self, format};

fn main() {
    let doc = cli::example_document("z2-free4").expect("registry example");
    let text = format::emit(&doc);
    print!("{text}");
    let back = format::parse(&text).expect("emitted text parses");
    assert_eq!(format::emit(&back), text);

    let path = std::env::temp_dir().join(format!("hgx-example-{}.txt", std::process::id()));
    std::fs::write(&path, &text).expect("temp dir is writable");
    for command in ["galois", "differential"] {
        let out = cli::run(["hgx", command, path.to_str().expect("utf-8 path")]);
        println!("$ hgx {command} … (exit {})", out.code);
        print!("{}", out.report.render(false));
    }
    let _ = std::fs::remove_file(&path);

    let err = format::parse("format hopf-galois 1\nhopf bad\n  labels a\n  mult 0 0 0 \"1/0\"\nend\n").unwrap_err();
    println!("malformed input: {err}");
}
