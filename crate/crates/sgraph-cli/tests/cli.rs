//! End-to-end tests driving the compiled `sgraph` binary: exit-code
//! contract, output shapes, cap plumbing, and the formation workflows.

use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Run the binary with a clean cap environment.
fn sgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgraph"))
        .args(args)
        .env_remove("SGRAPH_CAP")
        .env_remove("SGRAPH_QCAP")
        .output()
        .expect("binary runs")
}

fn sgraph_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sgraph"));
    cmd.args(args)
        .env_remove("SGRAPH_CAP")
        .env_remove("SGRAPH_QCAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn info_reports_order_and_primes() {
    let out = sgraph(&["info", "M11"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("order: 7920"));
    assert!(text.contains("pi: 2, 3, 5, 11"));
}

#[test]
fn info_trivial_group() {
    let out = sgraph(&["info", "Cyc(1)"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 1"));
    assert!(text.contains("pi: (none)"));
}

#[test]
fn info_alternating_5_nc_index_at_5() {
    let out = sgraph(&["info", "Alt(5)"]);
    assert_eq!(code(&out), 0);
    let line = stdout(&out)
        .lines()
        .find(|l| l.starts_with("p=5:"))
        .expect("p=5 row")
        .to_string();
    assert!(line.contains("nc_index 2"), "{line}");
}

#[test]
fn graph_exit_code_encodes_connectivity() {
    let out = sgraph(&["graph", "Cyc(6)"]);
    assert_eq!(code(&out), 1, "edgeless two-vertex graph is disconnected");
    let out = sgraph(&["graph", "Sym(3)"]);
    assert_eq!(code(&out), 0);
    let out = sgraph(&["graph", "M12"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn graph_dot_output_is_exact_and_stable() {
    let expected = "digraph gamma {\n  2;\n  3;\n  3 -> 2;\n}\n";
    let first = sgraph(&["graph", "Sym(3)", "--format", "dot"]);
    assert_eq!(stdout(&first), expected);
    let second = sgraph(&["graph", "Sym(3)", "--format", "dot"]);
    assert_eq!(stdout(&first), stdout(&second), "byte-deterministic");

    let delta = sgraph(&["graph", "Sym(3)", "--variant", "delta", "--format", "dot"]);
    assert_eq!(stdout(&delta), "graph delta {\n  2;\n  3;\n  2 -- 3;\n}\n");
}

#[test]
fn graph_json_has_schema_and_frobenius_extension_witness() {
    let out = sgraph(&["graph", "PSL2(27):1", "--format", "json"]);
    assert_eq!(code(&out), 0, "gamma graph is connected");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["order"], 29484);
    assert_eq!(v["connected"]["gamma"], true);
    assert_eq!(v["connected"]["delta"], true);
    // Some l outside {2,3} carries both 2 and 3 in its normalizer index.
    let witness = ["7", "13"]
        .iter()
        .any(|l| v["nc_indices"][*l].as_u64().is_some_and(|nc| nc % 6 == 0));
    assert!(witness, "json: {v}");
}

#[test]
fn graph_text_format_summarizes() {
    let out = sgraph(&["graph", "Cyc(6)", "--format", "text"]);
    let text = stdout(&out);
    assert!(text.contains("vertices: 2, 3"));
    assert!(text.contains("connected: no"));
}

#[test]
fn hypothesis_verdicts() {
    let out = sgraph(&["hypothesis", "Alt(5)"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("hypothesis: true"));

    let out = sgraph(&["hypothesis", "Sym(3)"]);
    assert_eq!(code(&out), 0);

    let out = sgraph(&["hypothesis", "PSL2(27):1", "--verbose"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("failing primes: 3"), "{text}");
    assert!(
        text.contains("factors of nc_index"),
        "verbose factorizations"
    );
}

#[test]
fn parse_errors_exit_2() {
    for bad in ["Foo(3)", "Sym(", "PSL2(6)", "Dih(2)", "Sym(3) y Cyc(2)"] {
        let out = sgraph(&["info", bad]);
        assert_eq!(code(&out), 2, "{bad}: {}", stderr(&out));
        assert!(stderr(&out).contains("error:"));
    }
}

#[test]
fn formation_check_and_nclosed_split_on_alternating_5() {
    let spec = data("three_block.json");
    let check = sgraph(&["formation", "check", "--spec", &spec, "Alt(5)"]);
    assert_eq!(code(&check), 1);
    assert!(stdout(&check).contains("member: false"));

    let nclosed = sgraph(&[
        "formation",
        "nclosed",
        "--spec",
        &spec,
        "Alt(5)",
        "--verbose",
    ]);
    assert_eq!(code(&nclosed), 0, "stderr: {}", stderr(&nclosed));
    assert!(stdout(&nclosed).contains("all sylow normalizers in class: true"));
    assert_eq!(
        stderr(&nclosed).lines().count(),
        3,
        "one trace row per prime of |Alt(5)|"
    );
}

#[test]
fn formation_check_accepts_nilpotent_group_for_minimal_partition() {
    let out = sgraph(&[
        "formation",
        "check",
        "--spec",
        &data("minimal_23.json"),
        "Cyc(12)",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("member: true"));
}

#[test]
fn formation_check_accepts_local_definition_files() {
    let spec = data("fundamental_2.json");
    let s4 = sgraph(&["formation", "check", "--spec", &spec, "Sym(4)"]);
    assert_eq!(code(&s4), 0);
    let a5 = sgraph(&["formation", "check", "--spec", &spec, "Alt(5)"]);
    assert_eq!(code(&a5), 1);
}

#[test]
fn formation_lattice_direct_product_split() {
    let out = sgraph(&[
        "formation",
        "lattice",
        "--spec",
        &data("split_235.json"),
        "Sym(3) x Cyc(5)",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("lattice member: true"));

    let neg = sgraph(&[
        "formation",
        "lattice",
        "--spec",
        &data("minimal_23.json"),
        "Sym(3)",
    ]);
    assert_eq!(code(&neg), 1);
}

#[test]
fn formation_spec_errors_exit_2() {
    // Malformed JSON, wrong spec kind for lattice, asymmetric covering,
    // and a missing file are all usage errors.
    let cases: Vec<Vec<String>> = vec![
        vec![
            "formation".into(),
            "check".into(),
            "--spec".into(),
            data("malformed.json"),
            "Sym(3)".into(),
        ],
        vec![
            "formation".into(),
            "lattice".into(),
            "--spec".into(),
            data("fundamental_2.json"),
            "Sym(3)".into(),
        ],
        vec![
            "formation".into(),
            "check".into(),
            "--spec".into(),
            data("asymmetric.json"),
            "Sym(3)".into(),
        ],
        vec![
            "formation".into(),
            "lattice".into(),
            "--spec".into(),
            data("three_block.json"),
            "Cyc(6)".into(),
        ],
        vec![
            "formation".into(),
            "check".into(),
            "--spec".into(),
            "/nonexistent/x.json".into(),
            "Sym(3)".into(),
        ],
    ];
    for case in cases {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let out = sgraph(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn appendix_reference_mode_echoes_stored_table() {
    let out = sgraph(&["appendix", "M"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("(26) M: pi = {2,3,5,7,11,13,17,19,23,29,31,41,47,59,71}"));
    assert!(text.contains("29 | nc_index(59)"));

    let on = sgraph(&["appendix", "on"]);
    assert!(
        stdout(&on).contains("(14) O'N"),
        "punctuation-insensitive lookup"
    );
}

#[test]
fn appendix_computed_mode_reports_line_by_line() {
    let out = sgraph(&["appendix", "M11", "--computed"]);
    let text = stdout(&out);
    let mismatches = text.lines().filter(|l| l.ends_with("MISMATCH")).count();
    assert_eq!(
        mismatches, 1,
        "recomputation contradicts exactly one stored claim: {text}"
    );
    assert!(text.contains("2 | nc_index(3): computed nc_index = 16 — match"));
    assert!(text.contains("2 | nc_index(11): computed nc_index = 5 — MISMATCH"));
    assert_eq!(code(&out), 1, "a failed line is a semantic negative");
}

#[test]
fn appendix_errors() {
    let unknown = sgraph(&["appendix", "M13"]);
    assert_eq!(code(&unknown), 2);

    let oversized = sgraph(&["appendix", "Ly", "--computed"]);
    assert_eq!(
        code(&oversized),
        3,
        "not computable under any desk-scale cap"
    );
}

#[test]
fn caps_flow_from_env_and_flags() {
    // A tiny cap makes Sym(4) exceed the exhaustive limit.
    let capped = sgraph_env(&["info", "Sym(4)"], &[("SGRAPH_CAP", "10")]);
    assert_eq!(code(&capped), 3, "stderr: {}", stderr(&capped));

    // The flag wins over the environment.
    let rescued = sgraph_env(
        &["info", "Sym(4)", "--cap", "2000000"],
        &[("SGRAPH_CAP", "10")],
    );
    assert_eq!(code(&rescued), 0, "stderr: {}", stderr(&rescued));

    // Unparseable env caps are usage errors, not silent defaults.
    let garbled = sgraph_env(&["info", "Sym(3)"], &[("SGRAPH_CAP", "lots")]);
    assert_eq!(code(&garbled), 2);

    let zero = sgraph(&["info", "Sym(3)", "--cap", "0"]);
    assert_eq!(code(&zero), 2);

    // Quotient caps bound the chief-series quotients inside membership tests.
    let qcapped = sgraph(&[
        "formation",
        "check",
        "--spec",
        &data("minimal_23.json"),
        "Cyc(12)",
        "--quotient-cap",
        "2",
    ]);
    assert_eq!(code(&qcapped), 3, "stderr: {}", stderr(&qcapped));
}
