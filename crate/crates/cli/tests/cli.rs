use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
}

fn pdt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdt"))
        .current_dir(root())
        .args(args)
        .output()
        .unwrap()
}

fn lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(String::from)
        .collect()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pdt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn enum_prints_in_dictionary_order() {
    let out = pdt(&["enum", "machines/pal_sub.m", "0110"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out), ["()", "0", "0110", "1", "11"]);
}

#[test]
fn opt_max() {
    let out = pdt(&["opt", "--mode", "max", "machines/pal_sub.m", "0110"]);
    assert_eq!(lines(&out), ["11"]);
    let out = pdt(&["opt", "--mode", "min", "machines/pal_sub.m", "0110"]);
    assert_eq!(lines(&out), ["()"]);
}

#[test]
fn opt_el_refuses_stack_machines() {
    let out = pdt(&["opt", "--mode", "max", "--el", "machines/pal_sub.m", "0110"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn empty_set_is_undefined() {
    let out = pdt(&["enum", "machines/reject_all.m", "01"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out), ["UNDEFINED"]);
}

#[test]
fn compose_and_chain() {
    let out = pdt(&[
        "compose",
        "machines/reverse_tail.m",
        "machines/dup_reverse.m",
        "01",
    ]);
    assert_eq!(lines(&out), ["01♮01"]);
    let out = pdt(&[
        "oracle-run",
        "machines/square_base.m",
        "--chain",
        "machines/square_chain.m",
        "0101",
    ]);
    assert_eq!(lines(&out), ["()", "01"]);
}

#[test]
fn builtin_oracles() {
    let out = pdt(&[
        "oracle-run",
        "machines/square_base.m",
        "--oracle",
        "builtin:none",
        "0101",
    ]);
    assert_eq!(lines(&out), ["UNDEFINED"]);
    let out = pdt(&[
        "oracle-run",
        "machines/square_base.m",
        "--oracle",
        "builtin:nope",
        "0101",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inputs_file() {
    let file = scratch("inputs.txt", "0\n()\n\n11\n");
    let out = pdt(&[
        "run",
        "machines/eta_pal.m",
        "--inputs",
        file.to_str().unwrap(),
        "01",
    ]);
    assert_eq!(
        lines(&out),
        [
            "input: 01",
            "reject",
            "input: 0",
            "accept",
            "input: ()",
            "accept",
            "input: 11",
            "accept"
        ]
    );
}

#[test]
fn exit_codes() {
    assert_eq!(pdt(&["bogus"]).status.code(), Some(1));
    assert_eq!(
        pdt(&["enum", "--frobnicate", "machines/pal_sub.m", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        pdt(&["enum", "machines/pal_sub.m", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        pdt(&[
            "--max-configs",
            "10",
            "enum",
            "machines/pal_sub.m",
            "0110110"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(pdt(&["--help"]).status.code(), Some(0));
}

#[test]
fn termination_violation_reports_the_path() {
    let spec = "machine spin\ninput: 0 1\nstack: Z\noutput: 0 1\nstart: q0\nbottom: Z\naccept: acc\nbound: 1 1\n\
                trans: q0 ¢ Z -> loop Z λ\ntrans: loop λ Z -> loop Z λ\ntrans: loop $ Z -> acc Z λ\n";
    let file = scratch("spin.m", spec);
    for cmd in ["run", "enum"] {
        let out = pdt(&[cmd, file.to_str().unwrap(), "01"]);
        assert_eq!(out.status.code(), Some(1));
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains("termination") && err.contains("loop"), "{err}");
    }
}

#[test]
fn algebra_and_refine() {
    let out = pdt(&[
        "algebra",
        "complement",
        "machines/eta_all.m",
        "--bound",
        "0,1",
        "0",
    ]);
    assert_eq!(lines(&out), ["()", "0"]);
    let out = pdt(&[
        "algebra",
        "intersect",
        "machines/pal_sub.m",
        "--with",
        "machines/eta_pal.m",
        "0110",
    ]);
    assert_eq!(lines(&out), ["1"]);
    let out = pdt(&["algebra", "range", "machines/eta_pal.m", "--max-len", "3"]);
    assert_eq!(lines(&out), ["1"]);
    assert_eq!(
        pdt(&["refine", "machines/pal_sub.m", "--opt", "min"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        pdt(&["refine", "machines/eta_pal.m", "machines/eta_all.m"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn pump_reports_scope_of_none() {
    let out = pdt(&[
        "pump",
        "machines/dup_reverse.m",
        "--m",
        "1",
        "--c",
        "0",
        "--d",
        "0",
        "01",
    ]);
    let text = lines(&out).join("\n");
    assert!(
        text.contains("none") && text.contains("(m,c,d) = (1,0,0)"),
        "{text}"
    );
    let out = pdt(&[
        "pump",
        "machines/pal_sub.m",
        "--m",
        "3",
        "--imax",
        "2",
        "--output",
        "00100",
        "00100",
    ]);
    assert!(lines(&out)[0].contains("found"));
}

#[test]
fn verify_witnesses_small() {
    let out = pdt(&[
        "verify-witnesses",
        "--max-len",
        "3",
        "--random",
        "5",
        "--seed",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(lines(&out).iter().all(|l| !l.contains("MISMATCH")));
}
