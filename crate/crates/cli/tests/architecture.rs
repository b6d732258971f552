//! The binary crate parses, dispatches and serializes. All numerics live in
//! the core crate.

use std::fs;
use std::path::Path;

const NUMERIC_TOKENS: &[&str] = &[
    ".adjoint(",
    "pinv(",
    "Svd",
    "HermitianEigen",
    "frobenius_norm",
    "mul_vec",
    "sqrt(",
    "Lu::",
    "rank_of(",
];

#[test]
fn cli_sources_do_no_linear_algebra() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    let mut offenders = Vec::new();
    let mut scanned = 0;
    for entry in fs::read_dir(&src).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "rs") {
            continue;
        }
        scanned += 1;
        let text = fs::read_to_string(&path).unwrap();
        for (n, line) in text.lines().enumerate() {
            for token in NUMERIC_TOKENS {
                if line.contains(token) {
                    offenders.push(format!("{}:{}: {token}", path.display(), n + 1));
                }
            }
        }
    }
    assert!(scanned >= 4);
    assert!(offenders.is_empty(), "{offenders:#?}");
}
