use std::fs;
use std::process::{Command, Output};

use deutsch_core::optics::{parse_layout_file, HardwareConstants};

fn deutsch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deutsch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn run_both_layers() {
    let out = deutsch(&["run", "--layer", "both", "--oracle", "fx"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "balanced / balanced, queries=1\n");

    for (label, verdict) in [
        ("f0", "constant"),
        ("f1", "constant"),
        ("fxbar", "balanced"),
    ] {
        let out = deutsch(&["run", "--oracle", label]);
        assert_eq!(stdout(&out), format!("{verdict} / {verdict}, queries=1\n"));
    }
    let out = deutsch(&["run", "--layer", "toy", "--table", "10"]);
    assert_eq!(stdout(&out), "balanced, queries=1\n");
}

#[test]
fn run_quantum_tables() {
    let out = deutsch(&["run", "--layer", "quantum", "--table", "0000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "constant, queries=1\n");
    let out = deutsch(&["run", "--layer", "quantum", "--table", "01101001"]);
    assert_eq!(stdout(&out), "balanced, queries=1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(deutsch(&["run", "--table", "1000"]).status.code(), Some(2));
    assert_eq!(
        deutsch(&["run", "--layer", "quantum", "--table", "0111"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(deutsch(&["run", "--table", "101"]).status.code(), Some(1));
    assert_eq!(deutsch(&["run", "--table", "01x0"]).status.code(), Some(1));
    assert_eq!(deutsch(&["run", "--table", "0110"]).status.code(), Some(1));
    assert_eq!(deutsch(&["run", "--oracle", "f2"]).status.code(), Some(1));
    assert_eq!(
        deutsch(&["run", "--oracle", "f0", "--table", "00"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(deutsch(&["run"]).status.code(), Some(1));
    assert_eq!(deutsch(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(deutsch(&["--help"]).status.code(), Some(0));
    assert_eq!(
        deutsch(&["compile", "--circuit", "H3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        deutsch(&["compile", "--circuit", "H1", "--pitch", "0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn evolve_identical_pairs() {
    let f0 = deutsch(&["evolve", "--oracle", "f0"]);
    let f1 = deutsch(&["evolve", "--oracle", "f1"]);
    assert_eq!(f0.status.code(), Some(0));
    assert_eq!(f0.stdout, f1.stdout);
    let fx = deutsch(&["evolve", "--oracle", "fx"]);
    let fxbar = deutsch(&["evolve", "--oracle", "fxbar"]);
    assert_eq!(fx.stdout, fxbar.stdout);
    assert_ne!(f0.stdout, fx.stdout);

    let text = stdout(&f0);
    assert!(text.starts_with("psi0:\n....\n....\n..##\n..##\n\npsi1:\n"));
    // register ends in {1,2}: only the two bottom rows are lit
    assert!(text.ends_with("psi3:\n....\n....\n.#.#\n.#.#\n"));
    assert!(text.is_ascii());
}

#[test]
fn compile_fxbar_and_trace_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fxbar.toml");
    let p = path.to_str().unwrap();
    let out = deutsch(&["compile", "--oracle", "fxbar", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let layout = parse_layout_file(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(layout.stages.len(), 8);
    assert_eq!(layout.hardware, HardwareConstants::default());

    let out = deutsch(&["trace", "--layout", p]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("input: plus*minus\n"));
    assert!(text.contains("output: minus*minus\n.#.#\n....\n.#.#\n....\n"));

    assert_eq!(
        deutsch(&["verify", "--oracle", "fxbar", "--layout", p])
            .status
            .code(),
        Some(0)
    );
    // the file does not implement a different circuit
    let out = deutsch(&["verify", "--oracle", "fx", "--layout", p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("mismatch: input "));
}

#[test]
fn layout_parse_errors_carry_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    let text =
        stdout(&deutsch(&["compile", "--circuit", "H2"])).replace("cylindrical_pair", "prism_pair");
    fs::write(&path, text).unwrap();
    let out = deutsch(&["trace", "--layout", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line ") && err.contains("`kind`"), "{err}");

    let missing = dir.path().join("missing.toml");
    let out = deutsch(&["trace", "--layout", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("missing.toml"));
}

#[test]
fn trace_empty_circuit() {
    let out = deutsch(&["trace", "--circuit", ""]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (input, output) = text.split_once("\n\n").unwrap();
    assert_eq!(
        input.lines().skip(1).collect::<Vec<_>>(),
        output.lines().skip(1).collect::<Vec<_>>()
    );

    let out = deutsch(&["trace", "--circuit", "H2", "--input", "zero,one"]);
    assert!(stdout(&out).contains("output: zero*minus\n"));
    assert_eq!(
        deutsch(&["trace", "--circuit", "H2", "--input", "zero"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_circuits() {
    for c in ["H1", "H2 X1 Z2", "CN12 CN21 CZ", ""] {
        let out = deutsch(&["verify", "--circuit", c]);
        assert_eq!(out.status.code(), Some(0), "{c}");
        assert_eq!(stdout(&out), "checked 60 inputs, 0 mismatches\n");
    }
    assert_eq!(
        deutsch(&["verify", "--circuit", "CZ", "--cz", "coplanar"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn render_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h2.svg");
    let out = deutsch(&["render", "--circuit", "H2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));

    let a = deutsch(&["render", "--oracle", "fxbar", "--pitch", "0.7"]);
    let b = deutsch(&["render", "--oracle", "fxbar", "--pitch", "0.7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("stage 5*"));

    let bad = dir.path().join("no/such/dir/x.svg");
    let out = deutsch(&["render", "--circuit", "H1", "--out", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("x.svg"));
}
