use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str], graph: &str) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_multitour"))
        .arg(args[0])
        .arg(data(graph))
        .args(&args[1..])
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
        code: output.status.code().unwrap(),
    }
}

fn json(args: &[&str], graph: &str) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    let r = run(&args, graph);
    assert_eq!(r.code, 0, "{}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn analyze_g2() {
    let v = json(&["analyze"], "g2.graph");
    assert_eq!(v["pham_index"], "1");
    assert_eq!(v["min_tour_length"], "4");
    assert_eq!(v["unicycles"], "4");
    assert_eq!(v["kappa"]["a"], "2");
    assert_eq!(v["period_vector"]["b"], "1");
    assert_eq!(v["eulerian"], false);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "kappa",
            "pham_index",
            "period_vector",
            "unicycles",
            "min_tour_length",
            "eulerian"
        ]
    );
}

#[test]
fn analyze_c3_and_t3() {
    let v = json(&["analyze"], "c3.graph");
    for name in ["a", "b", "c"] {
        assert_eq!(v["kappa"][name], "1");
    }
    assert_eq!(v["min_tour_length"], "3");
    assert_eq!(v["eulerian"], true);

    let v = json(&["analyze"], "t3.graph");
    assert_eq!(v["pham_index"], "3");
    assert_eq!(v["min_tour_length"], "6");
}

#[test]
fn disconnected_graph_exits_2() {
    let r = run(&["analyze"], "one_way.graph");
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("no directed path from `b` to `a`"),
        "{}",
        r.stderr
    );
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["analyze", "--json"][..],
        &["rotor", "--trials", "4", "--seed", "9", "--json"],
        &["tour", "--json"],
    ] {
        let a = run(args, "t3.graph").stdout;
        let b = run(args, "t3.graph").stdout;
        assert_eq!(a, b);
    }
}

#[test]
fn text_and_json_agree() {
    let text = run(&["analyze"], "g2.graph").stdout;
    assert!(text.contains("kappa: a=2 b=1"));
    assert!(text.contains("pham_index: 1"));
    assert!(text.contains("period_vector: a=2 b=1"));
    assert!(text.contains("unicycles: 4"));
    assert!(text.contains("min_tour_length: 4"));
    assert!(text.contains("eulerian: false"));

    let text = run(&["tour", "--start-vertex", "b"], "g2.graph").stdout;
    let v = json(&["tour", "--start-vertex", "b"], "g2.graph");
    let ids: Vec<String> = v["tour"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert!(text.contains(&format!("tour: {}", ids.join(","))));
    assert!(text.contains(&format!("length: {}", v["length"].as_str().unwrap())));
}

#[test]
fn count_with_oracle() {
    let r = run(&["count", "--start-edge", "0", "--oracle"], "g2.graph");
    assert_eq!((r.stdout.as_str(), r.code), ("2 (oracle: 2, agree)\n", 0));
    let v = json(&["count", "--start-edge", "1", "--oracle"], "g2.graph");
    assert_eq!(v["count"], "1");
    assert_eq!(v["oracle"], "1");
    assert_eq!(v["agree"], true);

    let r = run(&["count", "--pi", "1,1"], "g2.graph");
    assert_eq!(r.code, 2);
    let r = run(&["count", "--pi", "10,5", "--oracle"], "g2.graph");
    assert_eq!(r.code, 3, "{}", r.stderr);
    let r = run(
        &["count", "--pi", "10,5", "--oracle", "--oracle-cap", "20"],
        "g2.graph",
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.ends_with("agree)\n"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--tour", "0,1,0,2"], "g2.graph").code, 0);
    let r = run(&["verify", "--tour", "0,1,0,1"], "g2.graph");
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("invalid"));
    assert_eq!(
        run(&["verify", "--tour", "0,1,2", "--pi", "1,1,1"], "c3.graph").code,
        0
    );
    assert_eq!(run(&["verify", "--tour", "0,x"], "g2.graph").code, 2);
}

#[test]
fn tour_is_valid() {
    let v = json(&["tour"], "t3.graph");
    let ids: Vec<String> = v["tour"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert_eq!(ids.len(), 6);
    assert_eq!(
        run(&["verify", "--tour", &ids.join(",")], "t3.graph").code,
        0
    );

    let v = json(&["tour", "--pi", "4,2"], "g2.graph");
    assert_eq!(v["length"], "8");
    assert_eq!(run(&["tour", "--pi", "1,1"], "g2.graph").code, 2);
    assert_eq!(run(&["tour", "--start-vertex", "zz"], "g2.graph").code, 2);
}

#[test]
fn rotor_reports_minimal_period() {
    let v = json(&["rotor", "--trials", "5"], "c3.graph");
    assert_eq!(v["passed"], 5);
    for trial in v["trials"].as_array().unwrap() {
        assert_eq!(trial["period"], "3");
    }
    let v = json(&["rotor", "--trials", "20", "--seed", "7"], "g2.graph");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["expected_period"], "4");
}

#[test]
fn trees_and_dump() {
    let v = json(&["trees", "--root", "a"], "g2.graph");
    assert_eq!(v["kappa"], "2");
    assert_eq!(v["arborescences"], serde_json::json!([[1], [2]]));
    assert_eq!(
        run(&["trees", "--root", "a", "--cap", "3"], "t3.graph").code,
        3
    );

    let dumped = run(&["dump"], "t3.graph").stdout;
    let original = std::fs::read_to_string(data("t3.graph")).unwrap();
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&dumped), strip(&original));
    assert_eq!(run(&["dump"], "g2.graph").stdout, "a b\nb a 2\n");
}

#[test]
fn malformed_file_exits_2() {
    let dir = std::env::temp_dir().join(format!("multitour-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.graph");
    std::fs::write(&path, "a\n").unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_multitour"))
        .arg("analyze")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("line 1"));
    std::fs::remove_dir_all(&dir).unwrap();
}
