use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_facecover"))
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut input = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            input.write_all(s).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn gen(args: &[&str]) -> Vec<u8> {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    let out = run(&all, None);
    assert!(out.status.success());
    out.stdout
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, data: &[u8]) -> String {
    let p = dir.join(name);
    fs::write(&p, data).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn windmill_pipes_into_a_cover() {
    let emb = gen(&["windmill", "10"]);
    let out = run(&["dichotomy", "-t", "10"], Some(&emb));
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("cover"));
    assert_eq!(text.split_whitespace().count(), 11);
}

#[test]
fn bagel_oracle_says_none() {
    let emb = gen(&["bagel", "8"]);
    let out = run(&["oracle", "-t", "5"], Some(&emb));
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "none");
}

#[test]
fn small_t_exits_with_model_code() {
    let dir = tempfile::tempdir().unwrap();
    let emb = write(dir.path(), "w.emb", &gen(&["windmill", "6"]));
    let cert = dir.path().join("m.txt");
    let out = run(&["dichotomy", &emb, "-t", "2", "-o", cert.to_str().unwrap()], None);
    assert_eq!(code(&out), 10);
    assert!(fs::read_to_string(&cert).unwrap().starts_with("model"));
    assert_eq!(code(&run(&["verify", &emb, cert.to_str().unwrap()], None)), 0);
}

#[test]
fn every_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str, &[&str])] = &[
        (&["windmill", "8"], "dichotomy", &["-t", "4"]),
        (&["windmill", "8"], "dichotomy", &["-t", "1"]),
        (&["triangulation", "30", "4"], "dichotomy", &["-t", "3"]),
        (&["wheel", "9"], "cover", &["--mode", "greedy"]),
        (&["icosahedron"], "cover", &["--mode", "exact"]),
        (&["bagel", "10"], "oracle", &["-t", "4"]),
        (&["bagel", "10"], "dichotomy", &["-t", "5"]),
        (&["torus-grid", "16"], "dichotomy", &["-t", "5"]),
    ];
    for (i, (family, cmd, extra)) in cases.iter().enumerate() {
        let emb = write(dir.path(), &format!("{i}.emb"), &gen(family));
        let cert = dir.path().join(format!("{i}.txt"));
        let mut args = vec![*cmd, emb.as_str()];
        args.extend_from_slice(extra);
        args.extend_from_slice(&["-o", cert.to_str().unwrap()]);
        let out = run(&args, None);
        assert!(matches!(code(&out), 0 | 10), "{family:?} {cmd}: {}", String::from_utf8_lossy(&out.stderr));
        let v = run(&["verify", &emb, cert.to_str().unwrap()], None);
        assert_eq!(code(&v), 0, "{family:?} {cmd}: {}", String::from_utf8_lossy(&v.stdout));
    }
}

#[test]
fn projective_grid_uses_its_hint() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("p.emb");
    let emb = emb.to_str().unwrap();
    assert_eq!(code(&run(&["gen", "projective", "16", "-o", emb], None)), 0);
    assert!(dir.path().join("p.hint").exists());
    let out = run(&["dichotomy", emb, "-t", "5", "--report"], None);
    assert_eq!(code(&out), 0);
    let report = String::from_utf8(out.stderr).unwrap();
    assert!(report.contains("(hint)"), "{report}");
    assert!(report.contains("disk 2"));
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let emb = write(dir.path(), "w.emb", &gen(&["windmill", "10"]));
    let out = run(&["dichotomy", &emb, "-t", "10"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    // drop the last face
    let short: Vec<&str> = text.split_whitespace().collect();
    let cert = write(dir.path(), "c.txt", short[..short.len() - 1].join(" ").as_bytes());
    assert_eq!(code(&run(&["verify", &emb, &cert], None)), 1);
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(code(&run(&["info"], Some(b"not an embedding"))), 2);
    assert_eq!(code(&run(&["info", "/nonexistent/x.emb"], None)), 2);
    assert_eq!(code(&run(&["gen", "nosuch", "3"], None)), 2);
    assert_eq!(code(&run(&["--jobs", "0", "info"], Some(&gen(&["k4"])))), 2);
    let dir = tempfile::tempdir().unwrap();
    let emb = write(dir.path(), "k.emb", &gen(&["k4"]));
    let cert = write(dir.path(), "c.txt", b"cover fx");
    assert_eq!(code(&run(&["verify", &emb, &cert], None)), 2);
}

#[test]
fn failed_hypotheses_exit_3() {
    let out = run(&["dichotomy", "-t", "0"], Some(&gen(&["windmill", "6"])));
    assert_eq!(code(&out), 3);
    let out = run(&["draw"], Some(&gen(&["bagel", "8"])));
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("3-connected plane"));
    assert_eq!(code(&run(&["gen", "windmill", "7"], None)), 3);
}

#[test]
fn draw_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("w.svg");
    let out = run(&["draw", "-o", svg.to_str().unwrap()], Some(&gen(&["wheel", "7"])));
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
}

#[test]
fn info_reports_the_torus() {
    let out = run(&["info"], Some(&gen(&["torus-grid", "6"])));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in ["vertices 36", "euler_genus 2", "orientable true", "face_width 6", "polyhedral true"] {
        assert!(text.lines().any(|l| l == line), "{line} missing from\n{text}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = gen(&["triangulation", "40", "7"]);
    assert_eq!(a, gen(&["triangulation", "40", "7"]));
    let x = run(&["--jobs", "4", "dichotomy", "-t", "3"], Some(&a));
    let y = run(&["dichotomy", "-t", "3"], Some(&a));
    assert_eq!(x.stdout, y.stdout);
}
