//! End-to-end tests of the command-line interface: the keygen → extract →
//! sign → verify pipeline, the exit-code contract, and determinism under
//! a fixed seed.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clring"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_exit(output: &Output, expected: i32, context: &str) {
    assert_eq!(
        output.status.code(),
        Some(expected),
        "{context}: stdout={} stderr={}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

struct Pipeline {
    dir: tempfile::TempDir,
}

impl Pipeline {
    fn path(&self) -> &Path {
        self.dir.path()
    }

    fn file(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    /// setup + two members + ring file + message, all seeded.
    fn build() -> Self {
        let pipeline = Pipeline {
            dir: tempfile::tempdir().expect("tempdir"),
        };
        let dir = pipeline.path();
        assert_exit(
            &run(
                &[
                    "setup", "--level", "demo", "--params", "p.bin", "--masterkey", "mk.bin",
                    "--seed", "11",
                ],
                dir,
            ),
            0,
            "setup",
        );
        for (name, seed) in [("alice", "12"), ("bob", "13")] {
            assert_exit(
                &run(
                    &[
                        "keygen",
                        "--params",
                        "p.bin",
                        "--out-secret",
                        &format!("{name}.sv"),
                        "--out-public",
                        &format!("{name}.pk"),
                        "--seed",
                        seed,
                    ],
                    dir,
                ),
                0,
                "keygen",
            );
            assert_exit(
                &run(
                    &[
                        "extract", "--params", "p.bin", "--masterkey", "mk.bin", "--id", name,
                        "--out", &format!("{name}.ppk"),
                    ],
                    dir,
                ),
                0,
                "extract",
            );
        }
        let ring = serde_json::json!({
            "members": [
                {"identity": "alice", "public_key": hex_of(&pipeline.file("alice.pk"))},
                {"identity": "bob", "public_key": hex_of(&pipeline.file("bob.pk"))},
            ]
        });
        std::fs::write(
            pipeline.file("ring.json"),
            serde_json::to_vec_pretty(&ring).unwrap(),
        )
        .unwrap();
        std::fs::write(pipeline.file("msg.bin"), b"pipeline message").unwrap();
        pipeline
    }

    fn sign(&self, extra: &[&str]) -> Output {
        let mut args = vec![
            "sign", "--params", "p.bin", "--ring", "ring.json", "--index", "0", "--key",
            "alice.sv", "--partial", "alice.ppk", "--msg", "msg.bin", "--sig", "out.sig",
            "--seed", "21",
        ];
        args.extend_from_slice(extra);
        run(&args, self.path())
    }
}

fn hex_of(path: &Path) -> String {
    let bytes = std::fs::read(path).unwrap();
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn pipeline_sign_verify_roundtrip() {
    let p = Pipeline::build();
    assert_exit(&p.sign(&[]), 0, "sign");
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "out.sig",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        0,
        "verify valid",
    );
}

#[test]
fn verify_exit_codes_valid_invalid_malformed_io() {
    let p = Pipeline::build();
    assert_exit(&p.sign(&[]), 0, "sign");

    // 1: tampered message
    std::fs::write(p.file("tampered.bin"), b"pipeline messagX").unwrap();
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "out.sig",
                "--msg", "tampered.bin",
            ],
            p.path(),
        ),
        1,
        "tampered message",
    );

    // 2: malformed signature file
    std::fs::write(p.file("junk.sig"), b"CLRSjunkjunk").unwrap();
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "junk.sig",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        2,
        "malformed signature",
    );

    // 2: wrong kind of file in --sig position
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "alice.pk",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        2,
        "wrong kind",
    );

    // 3: missing file
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "nope.sig",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        3,
        "missing signature file",
    );

    // 64: usage error
    let out = run(&["verify", "--params"], p.path());
    assert_exit(&out, 64, "usage");
}

#[test]
fn sign_rejects_bad_index_and_mismatched_key() {
    let p = Pipeline::build();
    // out-of-range index
    let out = run(
        &[
            "sign", "--params", "p.bin", "--ring", "ring.json", "--index", "5", "--key",
            "alice.sv", "--partial", "alice.ppk", "--msg", "msg.bin", "--sig", "x.sig",
        ],
        p.path(),
    );
    assert_exit(&out, 2, "bad index");

    // alice's key at bob's slot
    let out = run(
        &[
            "sign", "--params", "p.bin", "--ring", "ring.json", "--index", "1", "--key",
            "alice.sv", "--partial", "alice.ppk", "--msg", "msg.bin", "--sig", "x.sig",
        ],
        p.path(),
    );
    assert_exit(&out, 2, "mismatched key");

    // secret value without --partial
    let out = run(
        &[
            "sign", "--params", "p.bin", "--ring", "ring.json", "--index", "0", "--key",
            "alice.sv", "--msg", "msg.bin", "--sig", "x.sig",
        ],
        p.path(),
    );
    assert_exit(&out, 2, "missing partial");
}

#[test]
fn seeded_pipeline_is_byte_deterministic() {
    let p1 = Pipeline::build();
    let p2 = Pipeline::build();
    assert_exit(&p1.sign(&[]), 0, "sign 1");
    assert_exit(&p2.sign(&[]), 0, "sign 2");
    let sig1 = std::fs::read(p1.file("out.sig")).unwrap();
    let sig2 = std::fs::read(p2.file("out.sig")).unwrap();
    assert_eq!(sig1, sig2, "same seeds must give identical signature bytes");
    // key material is deterministic too
    assert_eq!(
        std::fs::read(p1.file("alice.sv")).unwrap(),
        std::fs::read(p2.file("alice.sv")).unwrap()
    );
}

#[test]
fn hex_format_artifacts_are_accepted_back() {
    let p = Pipeline::build();
    // write the signature as hex text, then verify from it
    assert_exit(&p.sign(&["--format", "hex"]), 0, "sign hex");
    let text = std::fs::read_to_string(p.file("out.sig")).unwrap();
    assert!(text.trim().bytes().all(|b| b.is_ascii_hexdigit()));
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "out.sig",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        0,
        "verify from hex artifact",
    );
}

#[test]
fn bench_reports_cost_model_in_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "bench", "--n", "1,3", "--seed", "5", "--repeat", "2", "--format", "json",
        ],
        dir.path(),
    );
    assert_exit(&out, 0, "bench");
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("bench emits valid JSON");
    assert_eq!(parsed["all_match"], serde_json::json!(true));
    assert_eq!(parsed["constant_pairing_count"], serde_json::json!(true));
    assert_eq!(parsed["rows"][1]["sign"]["expected"]["g1_scalar_muls"], 9);
}

#[test]
fn attack_demo_and_simulate_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["attack-demo", "--n", "2", "--i", "1", "--j", "0", "--seed", "7", "--format", "json"],
        dir.path(),
    );
    assert_exit(&out, 0, "attack-demo");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["generic_construction"]["forgery_verified"], serde_json::json!(true));
    assert_eq!(parsed["concrete_scheme"]["forgery_verified"], serde_json::json!(false));
    assert_eq!(parsed["used_complete_private_key"], serde_json::json!(false));

    // i == j is a precondition violation, not a failed demo
    let out = run(
        &["attack-demo", "--n", "2", "--i", "1", "--j", "1", "--seed", "7"],
        dir.path(),
    );
    assert_exit(&out, 2, "attack-demo same slots");

    let out = run(&["simulate", "--n", "2", "--seed", "8", "--format", "json"], dir.path());
    assert_exit(&out, 0, "simulate");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["verifies_under_programmed_oracle"], serde_json::json!(true));
    assert_eq!(parsed["verifies_under_real_hash"], serde_json::json!(false));
}

#[test]
fn standard_level_smoke() {
    // one signature on the 1536-bit parameter set through the CLI
    let p = Pipeline::build();
    let dir = p.path();
    assert_exit(
        &run(
            &[
                "setup", "--level", "standard", "--params", "std.bin", "--masterkey",
                "stdmk.bin", "--seed", "31",
            ],
            dir,
        ),
        0,
        "standard setup",
    );
    assert_exit(
        &run(
            &[
                "keygen", "--params", "std.bin", "--out-secret", "c.sv", "--out-public",
                "c.pk", "--seed", "32",
            ],
            dir,
        ),
        0,
        "standard keygen",
    );
    assert_exit(
        &run(
            &[
                "extract", "--params", "std.bin", "--masterkey", "stdmk.bin", "--id", "carol",
                "--out", "c.ppk",
            ],
            dir,
        ),
        0,
        "standard extract",
    );
    let ring = serde_json::json!({
        "members": [{"identity": "carol", "public_key": hex_of(&p.file("c.pk"))}]
    });
    std::fs::write(p.file("std-ring.json"), serde_json::to_vec(&ring).unwrap()).unwrap();
    assert_exit(
        &run(
            &[
                "sign", "--params", "std.bin", "--ring", "std-ring.json", "--index", "0",
                "--key", "c.sv", "--partial", "c.ppk", "--msg", "msg.bin", "--sig", "std.sig",
                "--seed", "33",
            ],
            dir,
        ),
        0,
        "standard sign",
    );
    assert_exit(
        &run(
            &[
                "verify", "--params", "std.bin", "--ring", "std-ring.json", "--sig", "std.sig",
                "--msg", "msg.bin",
            ],
            dir,
        ),
        0,
        "standard verify",
    );

    // a demo-curve ring with standard params is a parameter-set mismatch
    assert_exit(
        &run(
            &[
                "verify", "--params", "std.bin", "--ring", "ring.json", "--sig", "std.sig",
                "--msg", "msg.bin",
            ],
            dir,
        ),
        2,
        "cross-curve ring rejected",
    );
}

#[test]
fn message_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;

    let p = Pipeline::build();
    let mut child = bin()
        .args([
            "sign", "--params", "p.bin", "--ring", "ring.json", "--index", "0", "--key",
            "alice.sv", "--partial", "alice.ppk", "--msg", "-", "--sig", "stdin.sig",
            "--seed", "41",
        ])
        .current_dir(p.path())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"pipeline message")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0), "sign from stdin");

    // the stdin-signed message equals msg.bin, so file-based verify accepts
    assert_exit(
        &run(
            &[
                "verify", "--params", "p.bin", "--ring", "ring.json", "--sig", "stdin.sig",
                "--msg", "msg.bin",
            ],
            p.path(),
        ),
        0,
        "verify stdin-signed",
    );
}
