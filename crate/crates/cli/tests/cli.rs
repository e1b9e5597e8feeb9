use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn mfkit(args: &[&str], stdin: Option<&str>) -> Output {
    mfkit_env(args, stdin, &[])
}

fn mfkit_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mfkit"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("MFKIT_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn mfkit");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).expect("write stdin");
        }
    }
    child.wait_with_output().expect("wait")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn catalog_pipes_into_build() {
    let cat = mfkit(&["catalog", "quadric", "--s", "2"], None);
    assert_eq!(cat.status.code(), Some(0));
    let entry = json(&cat);
    assert_eq!(entry["f"], "x0*y0 + x1*y1 + x2*y2");
    assert_eq!(entry["decomposition"]["gs"].as_array().unwrap().len(), 3);

    let built = mfkit(&["mf", "build", "--decomp", "-"], Some(std::str::from_utf8(&cat.stdout).unwrap()));
    assert_eq!(built.status.code(), Some(0));
    let mf = json(&built);
    assert_eq!(mf["phi"]["entries"].as_array().unwrap().len(), 4);
    assert_eq!(mf["f"], "x0*y0 + x1*y1 + x2*y2");
}

#[test]
fn verify_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let cat = mfkit(&["catalog", "quadric", "--s", "1"], None);
    let decomp = write(dir.path(), "q.json", std::str::from_utf8(&cat.stdout).unwrap());
    let mf_path = dir.path().join("mf.json");
    let built = mfkit(&["mf", "build", "--decomp", &decomp, "--out", mf_path.to_str().unwrap()], None);
    assert_eq!(built.status.code(), Some(0));
    assert!(built.stdout.is_empty());

    let ok = mfkit(&["mf", "verify", mf_path.to_str().unwrap()], None);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["passed"], true);

    let rank = mfkit(&["mf", "mcm-rank", mf_path.to_str().unwrap()], None);
    assert_eq!(rank.status.code(), Some(0));
    let v = json(&rank);
    assert_eq!(v["r"], 1);
    assert!(v["c"] == "1" || v["c"] == "-1");

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&mf_path).unwrap()).unwrap();
    doc["phi"]["entries"][0][0] = Value::String("x0 + x1".into());
    let bad = write(dir.path(), "bad.json", &doc.to_string());
    let out = mfkit(&["mf", "verify", &bad], None);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert_eq!(report["witness"]["kind"], "product");
    assert_eq!(report["witness"]["row"], 0);
}

#[test]
fn bgs_check_on_quadric() {
    let cat = mfkit(&["catalog", "quadric", "--s", "2"], None);
    let out = mfkit(&["bgs-check", "--decomp", "-"], Some(std::str::from_utf8(&cat.stdout).unwrap()));
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["e"], 1);
    assert_eq!(r["bgs_mf_threshold"], 4);
    assert_eq!(r["bgs_mcm_threshold"], 2);
    assert_eq!(r["mf_rank_upper"], 4);
    assert_eq!(r["mcm_rank_upper"], 2);
    assert_eq!(r["consistent"], true);
}

#[test]
fn analyze_reports_profile() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "z0^3 + z1^3 + z2^3 + z3^3 + z4^3\n");
    let out = mfkit(&["analyze", &f], None);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["degree"], 3);
    assert_eq!(r["jacobian_codim"], 5);
    assert_eq!(r["sing_codim"], 4);
    assert_eq!(r["e"], 1);
    assert_eq!(r["strength_lower"], 2);
    assert!(r["strength_upper"].is_null());
    assert_eq!(r["bgs_mf_threshold"], 4);
    assert_eq!(r["bgs_mcm_threshold"], 2);

    let q = mfkit(&["analyze", "-", "--field", "Fp:5"], Some("x*y + u*v"));
    let r = json(&q);
    assert_eq!(r["strength_lower"], 1);
    assert_eq!(r["strength_upper"], 1);
}

#[test]
fn strength_certificate_of_two_forms() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "x0*y0 + x1*y1");
    let b = write(dir.path(), "b.txt", "x0*y1 - x1*y0");
    let out = mfkit(&["strength", "cert", &a, &b], None);
    assert_eq!(out.status.code(), Some(0));
    let c = json(&out);
    assert_eq!(c["polys"].as_array().unwrap().len(), 2);
    assert_eq!(c["minors_codim"], 2);
    assert_eq!(c["certified_collective_lower"], 0);
}

#[test]
fn search_absent_and_found() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "x0*y0 + x1*y1");
    let none = mfkit(&["search", "--field", "Fp:2", "--rank", "1", "--pattern", "0/1", &f], None);
    assert_eq!(none.status.code(), Some(0));
    assert_eq!(json(&none)["found"], false);

    let found = mfkit(&["search", "--field", "Fp:2", "--rank", "2", "--pattern", "0,0/1,1", &f], None);
    assert_eq!(found.status.code(), Some(0));
    let v = json(&found);
    assert_eq!(v["found"], true);
    // the found factorization verifies through the CLI as well
    let mf = write(dir.path(), "mf.json", &v["mf"].to_string());
    assert_eq!(mfkit(&["mf", "verify", &mf], None).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mfkit(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(mfkit(&["analyze", "-"], Some("^x0")).status.code(), Some(2));
    let out = mfkit(&["analyze", "-"], Some("x0 + x1^2"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("homogeneous"));
    assert_eq!(mfkit(&["mf", "verify", "/nonexistent/mf.json"], None).status.code(), Some(2));
    assert_eq!(mfkit(&["mf", "build", "--decomp", "-"], Some("{not json")).status.code(), Some(2));
    assert_eq!(mfkit(&["catalog", "generic-det", "--n", "7"], None).status.code(), Some(2));
    assert_eq!(mfkit(&["--help"], None).status.code(), Some(0));
}

#[test]
fn resource_refusals_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "x0*y0 + x1*y1");
    let out = mfkit(&["search", "--field", "Fp:3", "--rank", "2", "--pattern", "0,0/2,2", &f], None);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));

    // a rank 32 factorization exceeds the exact determinant cap
    let cat = mfkit(&["catalog", "quadric", "--s", "5"], None);
    let built = mfkit(&["mf", "build", "--decomp", "-"], Some(std::str::from_utf8(&cat.stdout).unwrap()));
    assert_eq!(built.status.code(), Some(0));
    let mf = write(dir.path(), "big.json", std::str::from_utf8(&built.stdout).unwrap());
    assert_eq!(mfkit(&["mf", "mcm-rank", &mf], None).status.code(), Some(3));
}

#[test]
fn sampler_seed_from_environment() {
    let args = ["catalog", "sample", "--mu", "1,1", "--d", "3", "--n", "3"];
    let a = json(&mfkit_env(&args, None, &[("MFKIT_SEED", "7")]));
    let b = json(&mfkit_env(&args, None, &[("MFKIT_SEED", "7")]));
    let c = json(&mfkit_env(&args, None, &[("MFKIT_SEED", "8")]));
    assert_eq!(a, b);
    assert_ne!(a["f"], c["f"]);
    let mut explicit = args.to_vec();
    explicit.extend(["--seed", "7"]);
    assert_eq!(json(&mfkit_env(&explicit, None, &[("MFKIT_SEED", "8")])), a);
    assert_eq!(
        mfkit_env(&args, None, &[("MFKIT_SEED", "x")]).status.code(),
        Some(2)
    );
}

#[test]
fn catalog_all_round_trips_through_bgs() {
    let out = mfkit(&["catalog", "all"], None);
    assert_eq!(out.status.code(), Some(0));
    let entries = json(&out);
    let entries = entries.as_array().unwrap();
    assert!(entries.len() >= 10);
    let quadric = entries.iter().find(|e| e["name"] == "quadric(s=1)").unwrap();
    let r = mfkit(&["bgs-check", "--decomp", "-"], Some(&quadric.to_string()));
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(json(&r)["gap_holds"], true);
}
