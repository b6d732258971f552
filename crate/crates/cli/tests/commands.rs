use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use framerep::io::FrameFile;
use framerep_core::linalg::rel_diff;
use framerep_core::solver::SolveReport;
use framerep_core::{Matrix, Tolerance};

const PSI1: &str = r#"{"dim": 2, "vectors": [[[1, 0], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [1, 0]]]}"#;
const S_PSI1: &str = r#"{"rows": 2, "cols": 2, "entries": [[2, 0], [1, 0], [1, 0], [2, 0]]}"#;
const ID2: &str = r#"{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#;

fn framerep(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framerep"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Workspace(tempfile::TempDir);

impl Workspace {
    fn new() -> Self {
        let ws = Workspace(tempfile::tempdir().unwrap());
        ws.put("psi1.json", PSI1);
        ws.put("s.json", S_PSI1);
        ws.put("id2.json", ID2);
        ws
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        framerep(args, self.0.path())
    }

    fn matrix(&self, name: &str) -> Matrix {
        serde_json::from_str(&fs::read_to_string(self.0.path().join(name)).unwrap()).unwrap()
    }
}

#[test]
fn mercedes_bounds() {
    let ws = Workspace::new();
    stdout(&ws.run(&["gen", "--kind", "mercedes", "--out", "m.json"]));
    assert_eq!(stdout(&ws.run(&["bounds", "m.json"])).trim(), "A=1.5 B=1.5");
}

#[test]
fn psi1_bounds_and_dual() {
    let ws = Workspace::new();
    assert_eq!(stdout(&ws.run(&["bounds", "psi1.json"])).trim(), "A=1 B=3");
    stdout(&ws.run(&["dual", "psi1.json", "--out", "dual.json"]));
    assert_eq!(stdout(&ws.run(&["bounds", "dual.json"])).trim(), "A=0.3333333333 B=1");
    let dual: FrameFile = serde_json::from_str(&fs::read_to_string(ws.0.path().join("dual.json")).unwrap()).unwrap();
    let got = dual.into_frame(Tolerance::default()).unwrap();
    let expected = Matrix::from_real_rows(&[[2.0, -1.0, 1.0], [-1.0, 2.0, 1.0]]).scale_real(1.0 / 3.0);
    assert!(rel_diff(got.synthesis_matrix(), &expected) < 1e-14);
}

#[test]
fn identity_representation_is_the_gram_matrix() {
    let ws = Workspace::new();
    stdout(&ws.run(&["represent", "--op", "id2.json", "--row", "psi1.json", "--col", "psi1.json", "--out", "m.json"]));
    let expected = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 2.0]]);
    assert!(rel_diff(&ws.matrix("m.json"), &expected) < 1e-14);

    stdout(&ws.run(&["synth", "--matrix", "m.json", "--row", "psi1.json", "--col", "psi1.json", "--out", "op.json"]));
    // Op(Mat(I)) = S²
    let s2 = Matrix::from_real_rows(&[[5.0, 4.0], [4.0, 5.0]]);
    assert!(rel_diff(&ws.matrix("op.json"), &s2) < 1e-14);

    let report = stdout(&ws.run(&["check-representable", "--matrix", "m.json", "--row", "psi1.json", "--col", "psi1.json"]));
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["representable"], true);
}

#[test]
fn identity_coefficients_are_not_representable() {
    let ws = Workspace::new();
    ws.put("i3.json", &serde_json::to_string(&Matrix::identity(3)).unwrap());
    let report = stdout(&ws.run(&["check-representable", "--matrix", "i3.json", "--row", "psi1.json", "--col", "psi1.json"]));
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["representable"], false);
    assert_eq!(v["cond_range_kernel"], false);
    assert_eq!(v["cond_gram_sandwich"], false);
}

#[test]
fn invert_identity_coefficients() {
    let ws = Workspace::new();
    ws.put("i3.json", &serde_json::to_string(&Matrix::identity(3)).unwrap());
    stdout(&ws.run(&["invert", "--matrix", "i3.json", "--row", "psi1.json", "--col", "psi1.json", "--out", "inv.json"]));
    // Op(I) = S, so the inverse is S⁻¹
    let expected = Matrix::from_real_rows(&[[2.0, -1.0], [-1.0, 2.0]]).scale_real(1.0 / 3.0);
    assert!(rel_diff(&ws.matrix("inv.json"), &expected) < 1e-13);
}

#[test]
fn galerkin_solve() {
    let ws = Workspace::new();
    ws.put("g.json", "[[1, 0], [1, 0]]");
    let out = stdout(&ws.run(&["solve", "--op", "s.json", "--rhs", "g.json", "--row", "psi1.json", "--col", "psi1.json"]));
    let report: SolveReport = serde_json::from_str(&out).unwrap();
    for z in &report.solution {
        assert!((z.re - 1.0 / 3.0).abs() < 1e-14 && z.im.abs() < 1e-14);
    }
    assert!(report.well_conditioned);
}

#[test]
fn gram_of_psi1_with_itself() {
    let ws = Workspace::new();
    stdout(&ws.run(&["gram", "--left", "psi1.json", "--right", "psi1.json", "--out", "g.json"]));
    let expected = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 2.0]]);
    assert!(rel_diff(&ws.matrix("g.json"), &expected) < 1e-14);
}

#[test]
fn generators_are_seeded() {
    let ws = Workspace::new();
    let a = stdout(&ws.run(&["gen", "--kind", "random", "--dim", "3", "--len", "5", "--seed", "9"]));
    let b = stdout(&ws.run(&["gen", "--kind", "random", "--dim", "3", "--len", "5", "--seed", "9"]));
    let c = stdout(&ws.run(&["gen", "--kind", "random", "--dim", "3", "--len", "5", "--seed", "10"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn exit_codes() {
    let ws = Workspace::new();
    let code = |args: &[&str]| ws.run(args).status.code().unwrap();

    assert_eq!(code(&["bounds", "missing.json"]), 1);

    ws.put("bad.json", "{\"dim\": 2, \"vectors\": [");
    assert_eq!(code(&["bounds", "bad.json"]), 2);
    assert_eq!(code(&["gen", "--kind", "random"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);

    ws.put("line.json", r#"{"dim": 2, "vectors": [[[1, 0], [1, 0]], [[2, 0], [2, 0]]]}"#);
    assert_eq!(code(&["bounds", "line.json"]), 4);

    ws.put("i3.json", &serde_json::to_string(&Matrix::identity(3)).unwrap());
    assert_eq!(code(&["represent", "--op", "i3.json", "--row", "psi1.json", "--col", "psi1.json"]), 3);

    ws.put("zero.json", &serde_json::to_string(&Matrix::zeros(3, 3)).unwrap());
    assert_eq!(code(&["invert", "--matrix", "zero.json", "--row", "psi1.json", "--col", "psi1.json"]), 5);

    ws.put("sing.json", r#"{"rows": 2, "cols": 2, "entries": [[1, 0], [1, 0], [1, 0], [1, 0]]}"#);
    ws.put("g.json", "[[1, 0], [1, 0]]");
    assert_eq!(code(&["solve", "--op", "sing.json", "--rhs", "g.json", "--row", "psi1.json", "--col", "psi1.json"]), 5);
}

#[test]
fn verify_report() {
    let ws = Workspace::new();
    let out = ws.run(&["verify", "--seed", "3", "--json", "--out", "r.json"]);
    let text = stdout(&out);
    assert_eq!(fs::read_to_string(ws.0.path().join("r.json")).unwrap(), text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["passed"], true);
    let table = stdout(&ws.run(&["verify", "--seed", "3"]));
    assert!(table.trim_end().ends_with("checks passed"));
}
