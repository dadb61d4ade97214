use std::fs;
use std::path::Path;

use surfsep::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("surfsep").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn gen_is_deterministic() {
    let (c1, a, _) = call(&["gen", "--surface", "torus", "--n", "120", "--seed", "9"]);
    let (c2, b, _) = call(&["gen", "--surface", "torus", "--n", "120", "--seed", "9"]);
    assert_eq!((c1, c2), (0, 0));
    assert!(a.starts_with("SEM 1\n"));
    assert_eq!(a, b);
    let (_, other, _) = call(&["gen", "--surface", "torus", "--n", "120", "--seed", "10"]);
    assert_ne!(a, other);
}

#[test]
fn separate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "g.sem");
    let cert = path(dir.path(), "c.json");
    assert_eq!(call(&["gen", "--surface", "sphere", "--n", "300", "--seed", "4", "--out", &graph]).0, 0);
    let (code, out, err) = call(&["separate", "--in", &graph, "--ell", "2", "--cert", &cert]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("faces = 3"));
    let (code, out, _) = call(&["verify", "--in", &graph, "--cert", &cert]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 6);

    // Second run writes the same certificate.
    let again = path(dir.path(), "c2.json");
    call(&["separate", "--in", &graph, "--ell", "2", "--cert", &again]);
    assert_eq!(fs::read(&cert).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn tampered_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "g.sem");
    let cert = path(dir.path(), "c.json");
    call(&["gen", "--surface", "projective", "--n", "250", "--seed", "2", "--out", &graph]);
    assert_eq!(call(&["separate", "--in", &graph, "--ell", "1", "--cert", &cert]).0, 0);
    let mut value: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    value["faces"][0]["interior_count"] = serde_json::json!(10_000);
    fs::write(&cert, value.to_string()).unwrap();
    let (code, out, _) = call(&["verify", "--in", &graph, "--cert", &cert]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL interior-count"));
}

#[test]
fn bounds_json() {
    let (code, out, _) = call(&["bounds", "--genus", "0", "--delta", "10", "--k", "2", "--json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"thm_main_upper\": 1134"), "{out}");
    let (code, out, _) = call(&["bounds", "--genus", "2", "--delta", "10", "--k", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("construction order 287"), "{out}");
}

#[test]
fn construct_and_measure() {
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "k.sem");
    let (code, out, err) = call(&["construct", "--genus", "2", "--delta", "10", "--k", "5", "--out", &graph]);
    assert_eq!(code, 0, "{err}");
    assert!(!out.contains("FAIL"));
    let (code, out, _) = call(&["metrics", "--in", &graph, "--json"]);
    assert_eq!(code, 0);
    let m: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(m["n"], 287);
    assert_eq!(m["g"], 2);
    assert_eq!(m["max_degree"], 10);
    assert_eq!(m["diameter"], 5);
}

#[test]
fn triangulate_reports_auxiliary_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let square = path(dir.path(), "sq.sem");
    let tri = path(dir.path(), "tri.sem");
    let aux = path(dir.path(), "aux.json");
    fs::write(
        &square,
        "SEM 1\nn 4\nm 4\ne 0 0 1 +\ne 1 1 2 +\ne 2 2 3 +\ne 3 3 0 +\nr 0 0 7\nr 1 2 1\nr 2 4 3\nr 3 6 5\n",
    )
    .unwrap();
    let (code, _, err) = call(&["triangulate", "--in", &square, "--out", &tri, "--strategy", "star", "--aux-out", &aux]);
    assert_eq!(code, 0, "{err}");
    let aux: serde_json::Value = serde_json::from_str(&fs::read_to_string(&aux).unwrap()).unwrap();
    assert_eq!(aux["auxiliary"].as_array().unwrap().len(), 2);
    let (_, out, _) = call(&["metrics", "--in", &tri]);
    assert!(out.contains("n 6\n"));
    assert!(out.contains("g 0\n"));
}

#[test]
fn usage_and_precondition_errors_exit_two() {
    assert_eq!(call(&["separate"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["bounds", "--genus", "0", "--delta", "2", "--k", "3"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "g.sem");
    call(&["gen", "--surface", "sphere", "--n", "30", "--seed", "1", "--out", &graph]);
    let (code, _, err) = call(&["separate", "--in", &graph, "--ell", "3", "--cert", &path(dir.path(), "c.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("below"), "{err}");
    assert_eq!(call(&["verify", "--in", &path(dir.path(), "missing"), "--cert", &graph]).0, 2);
}
