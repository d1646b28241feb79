//! Runs the built binary and checks the exit-code contract and artifacts.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use seidel_skew::report::{Payload, ReportEnvelope, Status};
use seidel_skew::search::TournamentCode;
use seidel_skew::{SkewHadamard, Tournament};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_seidel-skew"));
    c.env_remove("SEIDEL_SKEW_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn envelope(o: &Output) -> ReportEnvelope {
    let text = stdout(o);
    let env: ReportEnvelope = serde_json::from_str(&text).expect("stdout is one JSON report");
    assert_eq!(env.schema_version, "1");
    let again = serde_json::to_string_pretty(&env).unwrap() + "\n";
    assert_eq!(again, text, "report must round-trip through its own parser");
    env
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_commands() {
    let p = run(&["gen", "paley", "7"]);
    assert_eq!(p.status.code(), Some(0));
    assert_eq!(
        stdout(&p).parse::<Tournament>().unwrap(),
        Tournament::paley(7).unwrap()
    );
    assert_eq!(stdout(&p).lines().count(), 8);

    let a = run(&["gen", "random", "5", "--seed", "42"]);
    let b = run(&["gen", "random", "5", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    for args in [
        &["gen", "paley", "9"][..],
        &["gen", "paley", "5"],
        &["gen", "random", "x"],
        &["gen"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn certify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let paley7 = write(
        dir.path(),
        "p7.txt",
        &Tournament::paley(7).unwrap().to_string(),
    );
    let deleted = write(
        dir.path(),
        "order6.txt",
        &Tournament::paley(7)
            .unwrap()
            .delete_vertex(0)
            .unwrap()
            .to_string(),
    );
    let transitive3 = write(
        dir.path(),
        "transitive3.txt",
        &Tournament::transitive(3).to_string(),
    );
    let h = seidel_skew::hadamard::drt_to_skew_hadamard(&Tournament::paley(3).unwrap()).unwrap();
    let hadamard = write(dir.path(), "h4.txt", &h.to_string());
    let garbage = write(dir.path(), "bad.txt", "tournament 2\n01\n11\n");

    let table: &[(&[&str], i32, Option<Status>)] = &[
        (&["certify", "drt", &paley7], 0, Some(Status::Pass)),
        (&["certify", "thm1", &deleted], 0, Some(Status::Pass)),
        (&["certify", "thm3", &deleted], 0, Some(Status::Pass)),
        (&["certify", "hadamard", &hadamard], 0, Some(Status::Pass)),
        (&["certify", "drt", &transitive3], 1, Some(Status::Fail)),
        (&["certify", "thm1", &paley7], 1, Some(Status::Fail)),
        (&["certify", "thm3", &transitive3], 1, Some(Status::Fail)),
        (&["certify", "drt", &garbage], 2, None),
        (&["certify", "hadamard", &paley7], 2, None),
        (&["certify", "drt", "/nonexistent/file"], 2, None),
        (&["certify", "spectral", &paley7], 2, None),
    ];
    for (args, code, status) in table {
        let o = run(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}");
        match status {
            Some(s) => {
                let env = envelope(&o);
                assert_eq!(env.status, *s);
                assert!(matches!(env.payload, Some(Payload::Certificate(_))));
            }
            None => assert!(o.stdout.is_empty(), "{args:?}"),
        }
    }
}

#[test]
fn certify_reads_stdin() {
    let o = run_stdin(
        &["certify", "drt", "-"],
        &Tournament::paley(11).unwrap().to_string(),
    );
    assert_eq!(o.status.code(), Some(0));
    let env = envelope(&o);
    assert_eq!(env.command, "certify drt");
    assert_eq!(
        env.input_digest,
        seidel_skew::report::digest(Tournament::paley(11).unwrap().to_string().as_bytes())
    );
}

#[test]
fn spectrum_command() {
    let cycle = run_stdin(
        &["spectrum", "-"],
        &Tournament::paley(3).unwrap().to_string(),
    );
    assert_eq!(cycle.status.code(), Some(0));
    let Some(Payload::Spectrum(sd)) = envelope(&cycle).payload else {
        panic!("spectrum payload")
    };
    let r3 = 3f64.sqrt();
    for (got, want) in sd.distinct_eigenvalues.iter().zip([r3, 0.0, -r3]) {
        assert!((got - want).abs() < 1e-12);
    }

    let pair = run_stdin(
        &["spectrum", "-", "--tol", "1e-8"],
        "tournament 2\n01\n00\n",
    );
    let Some(Payload::Spectrum(sd)) = envelope(&pair).payload else {
        panic!("spectrum payload")
    };
    assert_eq!(sd.multiplicities, vec![1, 1]);
    assert_eq!(sd.grouping_tol, 1e-8);
    for a in &sd.main_angles {
        assert!((a - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    assert_eq!(
        run_stdin(&["spectrum", "-"], "tournament 2\n00\n00\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_stdin(&["spectrum", "-", "--tol", "0.5"], "tournament 1\n0\n")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn spectrum_reports_ambiguous_grouping() {
    // √19 has multiplicity 9 in paley(19); its computed copies differ by a few
    // ulps, which lands inside the ambiguity window of a 1e-15 tolerance.
    let p19 = Tournament::paley(19).unwrap().to_string();
    let o = run_stdin(&["spectrum", "-", "--tol", "1e-15"], &p19);
    assert_eq!(o.status.code(), Some(1));
    let env = envelope(&o);
    assert_eq!(env.status, Status::Error);
    assert!(env.payload.is_none());
    assert!(env.message.unwrap().contains("ambiguous"));

    let o = run_stdin(&["spectrum", "-"], &p19);
    assert_eq!(o.status.code(), Some(0));
    let Some(Payload::Spectrum(sd)) = envelope(&o).payload else {
        panic!("spectrum payload")
    };
    assert_eq!(sd.multiplicities, vec![9, 1, 9]);
}

#[test]
fn convert_round_trips() {
    let p7 = Tournament::paley(7).unwrap().to_string();
    let deleted = run_stdin(&["convert", "delete-vertex", "--vertex", "0", "-"], &p7);
    assert_eq!(deleted.status.code(), Some(0));
    let extended = run_stdin(&["convert", "extend", "-"], &stdout(&deleted));
    assert_eq!(extended.status.code(), Some(0));
    let t: Tournament = stdout(&extended).parse().unwrap();
    assert!(t.is_doubly_regular());
    assert_eq!(
        run_stdin(&["certify", "drt", "-"], &stdout(&extended))
            .status
            .code(),
        Some(0)
    );

    let h = run_stdin(
        &["convert", "drt-to-hadamard", "-"],
        &Tournament::paley(3).unwrap().to_string(),
    );
    assert_eq!(h.status.code(), Some(0));
    let parsed: SkewHadamard = stdout(&h).parse().unwrap();
    assert_eq!(parsed.size(), 4);
    assert!(parsed.is_skew_hadamard());
    let back = run_stdin(&["convert", "hadamard-to-drt", "-"], &stdout(&h));
    assert_eq!(
        stdout(&back).parse::<Tournament>().unwrap(),
        Tournament::paley(3).unwrap()
    );

    let transitive4 = Tournament::transitive(4).to_string();
    let table: &[(&[&str], &str, i32)] = &[
        (&["convert", "extend", "-"], &transitive4, 1),
        (&["convert", "drt-to-hadamard", "-"], &transitive4, 1),
        (
            &["convert", "hadamard-to-drt", "-"],
            "hadamard 2\n++\n++\n",
            1,
        ),
        (&["convert", "delete-vertex", "-"], &p7, 2),
        (&["convert", "delete-vertex", "--vertex", "7", "-"], &p7, 2),
        (&["convert", "extend", "-"], "tournament 3\n010\n", 2),
        (&["convert", "hadamard-to-drt", "-"], &p7, 2),
    ];
    for (args, input, code) in table {
        let o = run_stdin(args, input);
        assert_eq!(o.status.code(), Some(*code), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn search_command() {
    let two = run(&["search", "2", "--mode", "exhaustive"]);
    assert_eq!(two.status.code(), Some(0));
    let Some(Payload::Search(r)) = envelope(&two).payload else {
        panic!("search payload")
    };
    assert_eq!(r.hits, vec![0, 1]);

    let four = run(&["search", "4"]);
    assert_eq!(four.status.code(), Some(0), "zero hits is still a result");
    let Some(Payload::Search(r)) = envelope(&four).payload else {
        panic!("search payload")
    };
    assert!(r.hits.is_empty());

    assert_eq!(
        run(&["search", "12", "--mode", "exhaustive"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "6", "--mode", "random"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "6", "--mode", "random", "--budget", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "6", "--mode", "sideways"]).status.code(),
        Some(2)
    );

    let a = run(&[
        "search",
        "6",
        "--mode",
        "random",
        "--budget",
        "500",
        "--seed",
        "9",
        "--workers",
        "1",
    ]);
    let b = bin()
        .args([
            "search", "6", "--mode", "random", "--budget", "500", "--seed", "9",
        ])
        .env("SEIDEL_SKEW_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn search_dumps_hits() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hits");
    let o = run(&["search", "6", "--dump-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let Some(Payload::Search(r)) = envelope(&o).payload else {
        panic!("search payload")
    };
    assert_eq!(r.hit_count, 240);
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().collect();
    assert_eq!(files.len(), 240);
    let first =
        std::fs::read_to_string(out.join(format!("tournament-6-{}.txt", r.hits[0]))).unwrap();
    let t: Tournament = first.parse().unwrap();
    assert_eq!(TournamentCode::encode(&t).unwrap().code, r.hits[0]);
    assert!(t.extend_to_regular().unwrap().is_doubly_regular());
}

#[test]
fn census_command() {
    let o = run(&["census", "4", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let Some(Payload::Census(c)) = envelope(&o).payload else {
        panic!("census payload")
    };
    assert_eq!((c.total, c.almost_regular, c.thm1_pass), (64, 24, 0));
    assert!(!stdout(&o).contains("elapsed"));
    assert_eq!(run(&["census", "12"]).status.code(), Some(2));
}

#[test]
fn help_and_version() {
    let h = run(&["--help"]);
    assert_eq!(h.status.code(), Some(0));
    for command in ["gen", "certify", "spectrum", "convert", "search"] {
        assert!(stdout(&h).contains(command));
    }
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
