use std::path::PathBuf;
use std::process::{Command, Output};

fn permpat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permpat"))
        .args(args)
        .env_remove("PERMPAT_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn polyclass_bfile() {
    let o = permpat(&[
        "polyclass",
        &data("av123_231.pegs"),
        "--format",
        "bfile",
        "--order",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1\n2 2\n3 4\n4 7\n5 11\n");
}

#[test]
fn streamed_polyclass_agrees() {
    let a = permpat(&["polyclass", &data("av123_231.pegs"), "--format", "json"]);
    let b = permpat(&[
        "polyclass",
        &data("av123_231.pegs"),
        "--format",
        "json",
        "--stream",
    ]);
    let strip = |o: &Output| {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        (v["values"].clone(), v["gf"].clone())
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn series_and_formulas() {
    assert_eq!(
        stdout(&permpat(&["series", "catalan", "--order", "6"])),
        "1,1,2,5,14,42,132\n"
    );
    let o = permpat(&[
        "series", "catalan", "--order", "6", "--exact", "--format", "bfile",
    ]);
    assert_eq!(stdout(&o), "1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n");
    assert_eq!(
        stdout(&permpat(&["series", "num231", "--order", "7"])),
        "0,0,0,1,11,81,500,2794\n"
    );
    assert_eq!(permpat(&["series", "nonesuch"]).status.code(), Some(2));
}

#[test]
fn bijections() {
    assert_eq!(
        stdout(&permpat(&["biject", "phi", "7 4 3 5 2 6 8 1"])),
        "uuduuududdudddud\n"
    );
    assert_eq!(
        stdout(&permpat(&["biject", "phi-star", "48371652"])),
        "uduuduududddud\n"
    );
    assert_eq!(
        stdout(&permpat(&["biject", "phi-inverse", "uuduuududdudddud"])),
        "74352681\n"
    );
    assert_eq!(permpat(&["biject", "phi", "132"]).status.code(), Some(2));
}

#[test]
fn counting_commands() {
    let o = permpat(&["avoid", "1342", "--order", "8", "--format", "csv"]);
    assert!(stdout(&o).ends_with("7,2740\n8,15485\n"));
    let o = permpat(&["avoid", "123", "--order", "6", "--involutions"]);
    assert_eq!(stdout(&o), "1,2,3,6,10,20\n");
    let o = permpat(&["occur", "231", "--in", "132", "--order", "7"]);
    assert_eq!(stdout(&o), "0,0,1,11,81,500,2794\n");
}

#[test]
fn ball_with_search() {
    let o = permpat(&[
        "ball",
        "--op",
        "pr",
        "--k",
        "2",
        "--order",
        "6",
        "--oracle-n",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["values"],
        serde_json::json!(["1", "2", "5", "10", "17", "26"])
    );
    assert_eq!(v["search"], "agrees for n <= 6");
}

#[test]
fn stats_record() {
    let o = permpat(&["stats", "2413", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["inversions"], "3");
    assert_eq!(v["bonds"], "0");
    assert_eq!(v["ltr_minima_positions"], "1 3");
}

#[test]
fn exit_codes() {
    assert_eq!(permpat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        permpat(&["avoid", "123", "--format", "yaml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        permpat(&["avoid", "123", "--order", "20"]).status.code(),
        Some(2)
    );
    assert_eq!(
        permpat(&["stats", "2413", "--format", "bfile"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(permpat(&["verify", "--suite", "3"]).status.code(), Some(0));
    // Criterion 11 carries a printed value the map cannot produce.
    let o = permpat(&["verify", "--suite", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL criterion 11"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("permpat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalan.b");
    let o = permpat(&[
        "series",
        "catalan",
        "--order",
        "3",
        "--format",
        "bfile",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "0 1\n1 1\n2 2\n3 5\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_output_across_worker_counts() {
    let args = [
        "occur", "321", "--in", "123", "--order", "9", "--format", "json",
    ];
    let one = permpat(&[&args[..], &["--workers", "1"]].concat());
    let many = permpat(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_permpat"))
        .args(args)
        .env("PERMPAT_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
}
