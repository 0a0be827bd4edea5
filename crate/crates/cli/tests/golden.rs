use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn ge(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ge")).args(args).output().expect("run ge");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

/// Runs twice, checks the bytes agree and the exit code is 0.
fn stable(args: &[&str]) -> String {
    let (code, first) = ge(args);
    let (_, second) = ge(args);
    assert_eq!(code, 0, "{args:?}: {first}");
    assert_eq!(first, second, "{args:?} is not byte-stable");
    first
}

#[test]
fn eval_double_crossing() {
    assert_eq!(stable(&["eval", "--n", "3", "--word", "1 1", "--hom", "ge"]), "{\"pi\":[1,2,3],\"ell\":[1,1,0]}\n");
}

#[test]
fn kernel_example() {
    assert_eq!(
        stable(&["kernel", "--n", "3", "--word", "1 -2 1 -2 1 -2", "--hom", "ge"]),
        "{\"in_kernel\":true}\n"
    );
    assert_eq!(
        stable(&["kernel", "--n", "3", "--word", "-1 -1 2 2", "--hom", "all"]),
        "{\"ge\":false,\"symge\":false,\"sge\":false,\"wp\":true}\n"
    );
}

#[test]
fn analogue_dihedral_four() {
    let out = stable(&["analogue", "--presentation", &data("i2_4.json")]);
    assert!(out.starts_with("{\"dimension\":6,"));
    assert_eq!(
        out,
        "{\"dimension\":6,\"basis\":[[1,0,1,0,0,0,0,0],[0,1,0,0,0,0,0,0],[0,0,0,1,0,0,0,0],[0,0,0,0,1,0,0,1],\
         [0,0,0,0,0,1,0,1],[0,0,0,0,0,0,1,-1]],\"verified\":[true,true,true,true,true,true]}\n"
    );
}

#[test]
fn analogue_other_presentations() {
    assert!(stable(&["analogue", "--presentation", &data("i2_6.json")]).starts_with("{\"dimension\":9,"));
    assert!(stable(&["analogue", "--presentation", &data("b3.json")]).starts_with("{\"dimension\":4,"));
}

#[test]
fn eval_other_homomorphisms() {
    assert_eq!(
        stable(&["eval", "--n", "3", "--word", "1 2 1", "--hom", "sge"]),
        "{\"pi\":[3,2,1],\"m\":[[0,1,1],[0,0,1],[0,0,0]]}\n"
    );
    assert_eq!(stable(&["eval", "--n", "3", "--word", "1 1", "--hom", "symge"]), "{\"pi\":[1,2,3],\"ell\":[2,2,0]}\n");
    assert_eq!(
        stable(&["eval", "--n", "3", "--word", "-2 -1 -2 -1", "--hom", "wp"]),
        "{\"pi\":[2,3,1],\"writhe\":-4}\n"
    );
}

#[test]
fn construct_realizes_its_target() {
    let out = stable(&["construct", "--pi", "(1,3,2)", "--ell", "1,-1,2"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let word = doc["word"].as_str().unwrap().to_string();
    assert_eq!(stable(&["eval", "--n", "3", "--word", &word]), "{\"pi\":[3,1,2],\"ell\":[1,-1,2]}\n");
}

#[test]
fn cocycle_of_a_permutation() {
    assert_eq!(stable(&["cocycle", "--pi", "3,1,2"]), "{\"pi\":[3,1,2],\"fbar\":[[0,0,1],[0,0,1],[-1,-1,0]]}\n");
}

#[test]
fn cocycle_of_a_coxeter_word() {
    let out = stable(&["cocycle", "--type", "A(2)", "--coxeter-word", "1"]);
    assert_eq!(
        out,
        "{\"type\":\"A2\",\"c\":[3,2,1,0,5,4],\"fbar\":{\"0\":1,\"3\":-1},\"legend\":[\"e1-e2\",\"e2-e3\",\"e1-e3\",\"-e1+e2\",\"-e2+e3\",\"-e1+e3\"]}\n"
    );
}

#[test]
fn artin_verify_reports() {
    assert_eq!(
        stable(&["artin-verify", "--type", "G2"]),
        "{\"type\":\"G2\",\"relations\":[{\"a\":1,\"b\":2,\"m\":6,\"pass\":true,\"empirical\":false}],\"all_pass\":true}\n"
    );
    assert_eq!(
        stable(&["artin-verify", "--type", "I2(7)"]),
        "{\"type\":\"I2(7)\",\"relations\":[{\"a\":1,\"b\":2,\"m\":7,\"pass\":true,\"empirical\":true}],\"all_pass\":true}\n"
    );
}

#[test]
fn walk_csv() {
    let out = stable(&["walk", "--n", "2", "--max-length", "4", "--samples", "2000", "--seed", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,N,exact_count,estimate,ci_low,ci_high,log_N,log_estimate");
    let counts: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(counts, ["0", "2", "0", "6"]);
}

#[test]
fn pretty_output_uses_cycles() {
    assert_eq!(stable(&["eval", "--n", "3", "--word", "1 2", "--pretty"]), "pi  = (1,2,3)\nell = [0, 0, 2]\n");
}

#[test]
fn errors_are_structured() {
    let (code, out) = ge(&["eval", "--n", "3", "--word", "1 5"]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "{\"status\":\"error\",\"code\":\"range\",\"message\":\"generator index out of range at token 1: |5| not in [1, 2]\"}\n"
    );
    let (code, out) = ge(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("{\"status\":\"error\",\"code\":\"usage\""));
    let (code, out) = ge(&["artin-verify", "--type", "E8"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"code\":\"root_type\""));
    let (code, out) = ge(&["construct", "--pi", "2,1,3", "--ell", "0,0,0"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"code\":\"realizability\""));
}

#[test]
fn analogue_rejects_bad_documents() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    // (1 2) and (3 4) commute, so they cannot satisfy a length-3 relation
    std::fs::write(
        &bad,
        r#"{"generators":["a","b"],"exponents":[["a","b",3]],"points":[1,2,3,4],"rep":{"a":[2,1,3,4],"b":[1,2,4,3]}}"#,
    )
    .unwrap();
    let (code, out) = ge(&["analogue", "--presentation", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("\"code\":\"relation_violated\""), "{out}");
    let (code, out) = ge(&["analogue", "--presentation", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("\"code\":\"io\""));
}
