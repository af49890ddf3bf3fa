use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("not JSON ({e}): {}\n{}", self.stdout, self.stderr))
    }
}

fn helly(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_helly"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

/// Runs with `--json` and checks the envelope.
fn helly_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let r = helly(&all);
    let v = r.json();
    assert_eq!(v["schema"], 1, "{v}");
    (r.code, v)
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().expect("tempdir"))
    }

    fn put(&self, name: &str, body: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, body).expect("write");
        p.display().to_string()
    }
}

fn homology(v: &Value) -> Vec<(i64, u64)> {
    v.as_array()
        .expect("homology array")
        .iter()
        .map(|e| (e["degree"].as_i64().unwrap(), e["dim"].as_u64().unwrap()))
        .collect()
}

fn rows(v: &Value) -> Vec<(u64, Vec<u64>, u64)> {
    v["table"]["rows"]
        .as_array()
        .expect("rows")
        .iter()
        .map(|r| {
            let deg = r["degree"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect();
            (r["i"].as_u64().unwrap(), deg, r["beta"].as_u64().unwrap())
        })
        .collect()
}

fn total_betti(v: &Value, i: u64) -> u64 {
    rows(v).iter().filter(|r| r.0 == i).map(|r| r.2).sum()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

fn facets(v: &Value) -> Vec<Vec<String>> {
    v.as_array().expect("facets").iter().map(strings).collect()
}

const HOLLOW: &str = "vertices: 1 2 3\nfacet: 1 2\nfacet: 1 3\nfacet: 2 3\n";
const TRIANGLE: &str = "vertices: 1 2 3\nfacet: 1 2 3\n";

#[test]
fn betti_of_square_of_maximal_ideal() {
    let (code, v) = helly_json(&["betti", "--ideal", &data("m2.ideal"), "--cap", "6"]);
    assert_eq!(code, 0);
    assert_eq!(total_betti(&v, 1), 3);
    assert_eq!(total_betti(&v, 2), 2);

    let f = Files::new();
    let fine = f.put("m2fine.ideal", "ring: y1:1 y2:2\ngen: y1^2\ngen: y1*y2\ngen: y2^2\n");
    let (_, v) = helly_json(&["betti", "--ideal", &fine]);
    let want = vec![
        (0, vec![0, 0], 1),
        (1, vec![0, 2], 1),
        (1, vec![1, 1], 1),
        (1, vec![2, 0], 1),
        (2, vec![1, 2], 1),
        (2, vec![2, 1], 1),
    ];
    let mut got = rows(&v);
    got.sort();
    assert_eq!(got, want);
    assert_eq!(v["regularity"], 2);
}

#[test]
fn eliahou_kervaire_verification() {
    let r = helly(&["ek", "--r", "2", "--d", "1", "--verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(
        r.stdout.contains("∂²=0, resolution verified, betti match"),
        "{}",
        r.stdout
    );
    for (rr, d) in [(1, 0), (2, 2), (3, 1)] {
        let (code, v) = helly_json(&[
            "ek",
            "--r",
            &rr.to_string(),
            "--d",
            &d.to_string(),
            "--verify",
        ]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["d_squared_zero"], true);
        assert_eq!(v["resolution"], true);
        assert_eq!(v["betti_match"], true);
    }
    let (_, v) = helly_json(&["ek", "--r", "2", "--d", "1"]);
    assert_eq!(v["ranks"], serde_json::json!([1, 3, 2]));
}

#[test]
fn idcol_on_complete_intersection_is_gated_by_regularity() {
    let r = helly(&["check", "idcol", "--ideal", &data("ci345.ideal"), "--d", "8"]);
    assert!(r.code == 0 || r.code == 2, "{}", r.stderr);
    let (code, v) = helly_json(&["check", "idcol", "--ideal", &data("ci345.ideal"), "--d", "8"]);
    let verdict = v["report"]["verdict"].as_str().unwrap();
    assert_eq!(code, if verdict == "pass" { 0 } else { 2 });
    // Regularity 10 meets the hypothesis at d = 9.
    let (code, v) = helly_json(&["check", "idcol", "--ideal", &data("ci345.ideal"), "--d", "9"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["report"]["verdict"], "pass");
}

#[test]
fn regularity_of_complete_intersection() {
    let (code, v) = helly_json(&["regularity", "--ideal", &data("ci345.ideal")]);
    assert_eq!(code, 0);
    assert_eq!(v["regularity"], 10);
    assert_eq!(v["linear"], false);

    let f = Files::new();
    let y1 = f.put("y1.ideal", "ring: y1:1 y2:2\ngen: y1\n");
    let (_, v) = helly_json(&["regularity", "--ideal", &y1]);
    assert_eq!(v["regularity"], 1);
    let path = f.put("path.ideal", "ring: x1:1 x2:1 x3:1\ngen: x1*x2\ngen: x2*x3\n");
    let (_, v) = helly_json(&["regularity", "--ideal", &path]);
    assert_eq!(v["linear"], true);
    let cube = helly(&["generate", "m-power", "--r", "3", "--d", "2"]);
    let m3 = f.put("m3.ideal", &cube.stdout);
    let (_, v) = helly_json(&["regularity", "--ideal", &m3]);
    assert_eq!((v["regularity"].as_u64(), v["linear"].as_bool()), (Some(3), Some(true)));
}

#[test]
fn malformed_input_is_exit_three_with_position() {
    let f = Files::new();
    let bad = f.put("bad.ideal", "ring: x1:1 x2:1\ngen: x1^2\ngen: x3*x1\n");
    let r = helly(&["betti", "--ideal", &bad]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("bad.ideal:3:"), "{}", r.stderr);

    let cx = f.put("bad.complex", "vertices: a b\nfacet: a c\n");
    let r = helly(&["homology", "--complex", &cx]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("bad.complex:2:"), "{}", r.stderr);

    let (code, v) = helly_json(&["homology", "--complex", &cx]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "input");

    assert_eq!(helly(&["homology", "--complex", "/nonexistent"]).code, 3);
    assert_eq!(helly(&["frobnicate"]).code, 3);
    assert_eq!(helly(&["homology", "--complex", &cx, "--field", "p:4"]).code, 3);
    assert_eq!(helly(&["--help"]).code, 0);
}

#[test]
fn generated_instances_are_reproducible() {
    let args = ["generate", "leray-squarefree", "--seed", "1", "--n", "5"];
    let a = helly(&args);
    let b = helly(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("# helly generate leray-squarefree --seed 1"));

    let f = Files::new();
    let out = f.put("inst.ideal", "");
    let w = helly(&[&args[..], &["--out", &out]].concat());
    assert_eq!(w.code, 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), a.stdout);

    let other = helly(&["generate", "leray-squarefree", "--seed", "2", "--n", "5"]);
    assert_eq!(other.code, 0);
}

#[test]
fn generated_maximal_power() {
    let r = helly(&["generate", "m-power", "--r", "3", "--d", "2"]);
    assert_eq!(r.code, 0);
    let gens: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("gen:")).collect();
    assert_eq!(gens.len(), 10);
    assert!(r.stdout.contains("ring: y1:1 y2:2 y3:3"));
    for g in gens {
        let degree: u32 = g[4..]
            .trim()
            .split('*')
            .map(|f| f.split_once('^').map_or(1, |(_, e)| e.parse().unwrap()))
            .sum();
        assert_eq!(degree, 3, "{g}");
    }
}

#[test]
fn generated_taylor_labeling() {
    let r = helly(&["generate", "taylor-label", "--ideal", &data("m2.ideal")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let cells = r.stdout.lines().filter(|l| l.starts_with("cell:")).count();
    assert_eq!(cells, 7);
    for (v, m) in [("g1", "x1^2"), ("g2", "x1*x2"), ("g3", "x2^2")] {
        assert!(r.stdout.contains(&format!("label: {v} {m}")), "{}", r.stdout);
    }
    let f = Files::new();
    let t = f.put("taylor.labeled", &r.stdout);
    assert_eq!(helly(&["cellular-check", "--labeled", &t]).code, 0);

    assert_eq!(helly(&["generate", "taylor-label"]).code, 3);
    assert_eq!(helly(&["generate", "no-such-family"]).code, 3);
}

#[test]
fn homology_examples() {
    let f = Files::new();
    let cases = [
        (TRIANGLE, vec![]),
        (HOLLOW, vec![(1, 1)]),
        ("vertices: 1 2\nfacet: 1\nfacet: 2\n", vec![(0, 1)]),
        ("vertices: 1 2\nirrelevant\n", vec![(-1, 1)]),
        ("vertices: 1 2 3 4\nfacet: 1 2 3 4\n", vec![]),
    ];
    for (k, (text, want)) in cases.into_iter().enumerate() {
        let p = f.put(&format!("c{k}.complex"), text);
        let (code, v) = helly_json(&["homology", "--complex", &p]);
        assert_eq!(code, 0);
        assert_eq!(homology(&v["homology"]), want, "{text}");
        assert_eq!(v["acyclic"], want.is_empty());
    }
    let void = f.put("void.complex", "vertices: 1 2\nvoid\n");
    assert_eq!(helly(&["homology", "--complex", &void]).code, 3);
    let hollow = f.put("hollow.complex", HOLLOW);
    let (_, v) = helly_json(&["homology", "--complex", &hollow, "--field", "p:32003"]);
    assert_eq!(v["field"], "p:32003");
    assert_eq!(homology(&v["homology"]), vec![(1, 1)]);
}

#[test]
fn leray_examples() {
    let f = Files::new();
    let hollow = f.put("hollow.complex", HOLLOW);
    let (code, v) = helly_json(&["leray", "--complex", &hollow, "--d", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["leray"], false);
    assert_eq!(v["witness"]["degree"], 1);
    assert_eq!(strings(&v["witness"]["restriction"]), ["1", "2", "3"]);
    let (_, v) = helly_json(&["leray", "--complex", &hollow, "--d", "2"]);
    assert_eq!(v["leray"], true);
    let simplex = f.put("simplex.complex", TRIANGLE);
    let (_, v) = helly_json(&["leray", "--complex", &simplex, "--d", "0"]);
    assert_eq!(v["leray"], true);
}

#[test]
fn nerve_examples() {
    let f = Files::new();
    let two = f.put(
        "two.family",
        &format!("{HOLLOW}member: A 1 2\nmember: B 2 3\n"),
    );
    let (code, v) = helly_json(&["nerve", "--family", &two]);
    assert_eq!(code, 0);
    assert_eq!(facets(&v["nerve"]), [["A", "B"]]);
    assert_eq!(homology(&v["union_homology"]), vec![]);

    let apart = f.put(
        "apart.family",
        "vertices: 1 2 3 4\nfacet: 1 2\nfacet: 3 4\nmember: A 1 2\nmember: B 3 4\n",
    );
    let (_, v) = helly_json(&["nerve", "--family", &apart]);
    assert_eq!(facets(&v["nerve"]), [["A"], ["B"]]);

    let three = f.put(
        "three.family",
        &format!("{HOLLOW}member: A 1 2\nmember: B 1 3\nmember: C 2 3\n"),
    );
    let (code, v) = helly_json(&["nerve", "--family", &three]);
    assert_eq!(code, 0);
    assert_eq!(facets(&v["nerve"]), [["A", "B"], ["A", "C"], ["B", "C"]]);
    assert_eq!(homology(&v["union_homology"]), vec![(1, 1)]);
    assert_eq!(homology(&v["nerve_homology"]), vec![(1, 1)]);
    assert_eq!(v["homology_agrees"], true);
    assert!(v["non_acyclic_intersection"].is_null());

    let whole = f.put("whole.family", &format!("{HOLLOW}member: A 1 2 3\n"));
    let (_, v) = helly_json(&["nerve", "--family", &whole]);
    assert_eq!(homology(&v["union_homology"]), vec![(1, 1)]);
    assert_eq!(strings(&v["non_acyclic_intersection"]), ["A"]);
}

#[test]
fn alexander_dual_examples() {
    let f = Files::new();
    let c = f.put("c.complex", "vertices: 1 2 3\nfacet: 1 2\nfacet: 3\n");
    let (code, v) = helly_json(&["dual", "--complex", &c]);
    assert_eq!(code, 0);
    assert_eq!(facets(&v["facets"]), [["1"], ["2"]]);
    let hollow = f.put("hollow.complex", HOLLOW);
    let r = helly(&["dual", "--complex", &hollow]);
    assert!(r.stdout.contains("irrelevant"), "{}", r.stdout);
    let dual = f.put("dual.complex", &r.stdout);
    let (_, back) = helly_json(&["dual", "--complex", &dual]);
    assert_eq!(facets(&back["facets"]), [["1", "2"], ["1", "3"], ["2", "3"]]);
}

#[test]
fn stanley_reisner_examples() {
    let f = Files::new();
    let hollow = f.put("hollow.complex", HOLLOW);
    let (code, v) = helly_json(&["sr", "--complex", &hollow]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["generators"]), ["x1*x2*x3"]);

    let edges = f.put(
        "edges.complex",
        "vertices: x1 x2 x3 x4\nfacet: x1 x2\nfacet: x3 x4\n",
    );
    let (_, v) = helly_json(&["sr", "--complex", &edges]);
    let mut g = strings(&v["generators"]);
    g.sort();
    assert_eq!(g, ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);

    let simplex = f.put("simplex.complex", TRIANGLE);
    let (_, v) = helly_json(&["sr", "--complex", &simplex]);
    assert!(strings(&v["generators"]).is_empty());

    let i = f.put("i.ideal", "ring: x1:1 x2:1 x3:1\ngen: x1*x2*x3\n");
    let (_, v) = helly_json(&["sr", "--ideal", &i]);
    assert_eq!(facets(&v["facets"]).len(), 3);
    let zero = f.put("zero.ideal", "ring: x1:1 x2:1 x3:1\n");
    let (_, v) = helly_json(&["sr", "--ideal", &zero]);
    assert_eq!(facets(&v["facets"]), [["x1", "x2", "x3"]]);

    let colored = helly(&["sr", "--complex", &edges, "--colors", "1,1,2,2"]);
    assert!(colored.stdout.contains("ring: x1:1 x2:1 x3:2 x4:2"), "{}", colored.stdout);
    assert_eq!(helly(&["sr", "--complex", &edges, "--colors", "1,3,3,3"]).code, 3);
}

#[test]
fn hochster_examples_and_agreement_with_koszul() {
    let f = Files::new();
    let i = f.put("i.ideal", "ring: x1:1 x2:2 x3:3\ngen: x1*x2*x3\n");
    let (code, v) = helly_json(&["betti", "--ideal", &i, "--method", "hochster"]);
    assert_eq!(code, 0);
    assert!(rows(&v).contains(&(1, vec![1, 1, 1], 1)));
    let zero = f.put("zero.ideal", "ring: x1:1 x2:2\n");
    let (_, v) = helly_json(&["betti", "--ideal", &zero, "--method", "hochster"]);
    assert_eq!(rows(&v), [(0, vec![0, 0], 1)]);
    for seed in 0..6 {
        let g = helly(&["generate", "squarefree", "--seed", &seed.to_string(), "--n", "5"]);
        let p = f.put(&format!("s{seed}.ideal"), &g.stdout);
        let (_, h) = helly_json(&["betti", "--ideal", &p, "--method", "hochster"]);
        let (_, k) = helly_json(&["betti", "--ideal", &p]);
        assert_eq!(rows(&h), rows(&k), "{}", g.stdout);
    }
    let poly = f.put("poly.ideal", "ring: x1:1 x2:1\npoly: x1 - x2\n");
    assert_eq!(helly(&["betti", "--ideal", &poly, "--method", "hochster"]).code, 3);
}

#[test]
fn betti_of_polynomial_ideal_respects_the_cap() {
    let f = Files::new();
    let p = f.put("p.ideal", "ring: x1:1 x2:1 z1:2\npoly: x1*z1 - x2*z1\n");
    let (code, v) = helly_json(&["betti", "--ideal", &p]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(total_betti(&v, 1), 1);
    let (code, v) = helly_json(&["betti", "--ideal", &p, "--cap", "2"]);
    assert_eq!(code, 2, "{v}");
    assert_eq!(v["error"], "inconclusive");
}

#[test]
fn cellular_examples() {
    let f = Files::new();
    let hollow = f.put(
        "hollow.labeled",
        &format!(
            "ring: x1:1 x2:2 x3:3\n{}label: 1 x1*x2\nlabel: 2 x1*x3\nlabel: 3 x2*x3\n",
            HOLLOW
        ),
    );
    let (code, v) = helly_json(&["cellular-check", "--labeled", &hollow]);
    assert_eq!(code, 1);
    assert_eq!(v["resolution"], false);
    assert_eq!(v["witness"], "x1*x2*x3");

    let taylor = f.put(
        "taylor.labeled",
        "ring: x1:1 x2:2\nvertices: a b\nfacet: a b\nlabel: a x1\nlabel: b x2\n",
    );
    let (code, v) = helly_json(&["cellular-check", "--labeled", &taylor, "--helly-d", "1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["helly"]["max_prime_codim"], 2);
    assert_eq!(v["helly"]["holds"], true);
    assert_eq!(v["helly"]["codim_le_pd"], true);

    let ones = |c: &str| {
        let labels: String = (1..=3).map(|v| format!("label: {v} 1\n")).collect();
        format!("ring: x1:1\n{c}{labels}")
    };
    let ok = f.put("ones.labeled", &ones(TRIANGLE));
    assert_eq!(helly(&["cellular-check", "--labeled", &ok]).code, 0);
    let circle = f.put("ones_hollow.labeled", &ones(HOLLOW));
    assert_eq!(helly(&["cellular-check", "--labeled", &circle]).code, 1);

    let missing = f.put(
        "missing.labeled",
        "ring: x1:1\nvertices: a b\nfacet: a b\nlabel: a x1\n",
    );
    assert_eq!(helly(&["cellular-check", "--labeled", &missing]).code, 3);
}

#[test]
fn specialization_examples() {
    let f = Files::new();
    let i = f.put("i.ideal", "ring: x1:1 x2:2\ngen: x1*x2\n");
    let (code, v) = helly_json(&["specialize", "--ideal", &i, "--lambda", "3,5"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["generators"]), ["y1*y2"]);

    let g = f.put("g.ideal", "ring: x1:1 x2:1 z1:2\npoly: x1*z1 - x2*z1\n");
    let (_, v) = helly_json(&["specialize", "--ideal", &g, "--lambda", "1,1,1"]);
    assert!(strings(&v["generators"]).is_empty());
    let (_, v) = helly_json(&["specialize", "--ideal", &g, "--seed", "7"]);
    assert_eq!(strings(&v["generators"]), ["y1*y2"]);
    assert_eq!(helly(&["specialize", "--ideal", &g, "--lambda", "1,2"]).code, 3);
    assert_eq!(helly(&["specialize", "--ideal", &g, "--lambda", "0,1,2"]).code, 3);
}

#[test]
fn theorem_checks() {
    let f = Files::new();
    let one = f.put("one.ideal", "ring: x1:1 x2:1\ngen: x1\n");
    let (code, v) = helly_json(&["check", "colorful-monomial", "--ideal", &one, "--d", "0"]);
    assert_eq!(code, 0, "{v}");
    let certs = v["report"]["certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["monomial"] == "x1"), "{v}");

    // Stanley-Reisner ideal of the boundary of a square, colored so that
    // both colors occur purely; the square is not 1-Leray.
    let square = f.put(
        "square.ideal",
        "ring: a:1 c:1 b:2 d:2\ngen: a*c\ngen: b*d\n",
    );
    let (code, v) = helly_json(&["check", "colorful-monomial", "--ideal", &square, "--d", "1"]);
    assert_eq!(code, 2, "{v}");
    assert_eq!(v["report"]["verdict"], "inconclusive");
    // b*d avoids the prime <a, c> of color 1.
    let (code, v) = helly_json(&["check", "colorful-primes", "--ideal", &square, "--d", "1"]);
    assert_eq!(code, 2, "{v}");
    let edge = f.put("edge.ideal", "ring: a:1 b:2
gen: a*b
");
    let (code, v) = helly_json(&["check", "colorful-primes", "--ideal", &edge, "--d", "1"]);
    assert_eq!(code, 0, "{v}");
    let certs = v["report"]["certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["variables"] == serde_json::json!(["a", "b"])), "{v}");

    let m3 = f.put("m3.ideal", &helly(&["generate", "m-power", "--r", "3", "--d", "2"]).stdout);
    let (code, v) = helly_json(&["check", "syzygy-bound", "--ideal", &m3, "--d", "2"]);
    assert_eq!(code, 0, "{v}");
    for c in v["report"]["certificates"].as_array().unwrap() {
        if c["kind"] == "dimension" {
            assert_eq!(c["found"], c["required"], "{c}");
        }
    }
    let (code, _) = helly_json(&["check", "idcol", "--ideal", &m3, "--d", "2"]);
    assert_eq!(code, 0);

    let (code, v) = helly_json(&[
        "check",
        "regularity-comparison",
        "--ideal",
        &data("ci345.ideal"),
    ]);
    assert_eq!(code, 0, "{v}");
    let target = f.put("t.ideal", "ring: y1:1 y2:2 y3:3\ngen: y1^3\ngen: y2^4\ngen: y3^5\n");
    let (code, v) = helly_json(&[
        "check",
        "regularity-comparison",
        "--ideal",
        &data("ci345.ideal"),
        "--target",
        &target,
    ]);
    assert_eq!(code, 0, "{v}");
    assert!(v["report"]["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["ideal"] == 10 && c["image"] == 10));

    let lin = f.put(
        "lin.ideal",
        &helly(&["generate", "truncated-colored", "--seed", "3", "--n", "5"]).stdout,
    );
    let (code, v) = helly_json(&["check", "linear-specialization", "--ideal", &lin]);
    assert!(code == 0 || code == 2, "{v}");

    for (r, d) in [("1", "1"), ("2", "1")] {
        let (code, v) = helly_json(&["check", "uniqueness", "--r", r, "--d", d]);
        assert_eq!(code, 0, "{v}");
    }
    assert_eq!(helly(&["check", "uniqueness", "--r", "5", "--d", "1"]).code, 3);
}

#[test]
fn suite_manifest_runs_in_order_for_any_job_count() {
    let f = Files::new();
    f.put("ci345.ideal", &std::fs::read_to_string(data("ci345.ideal")).unwrap());
    let manifest = f.put(
        "suite.toml",
        r#"
[[case]]
theorem = "idcol"
instance = "ci345.ideal"
d = 9

[[case]]
theorem = "syzygy-bound"
generator = "m-power"
r = 2
d = 1

[[case]]
theorem = "syzygy-bound"
generator = "truncated-colored"
seed = 4
n = 5
d = 1
r = 2

[[case]]
theorem = "uniqueness"
r = 2
d = 1
"#,
    );
    let one = helly(&["check", "suite", "--manifest", &manifest, "--json", "--jobs", "1"]);
    let two = helly(&["check", "suite", "--manifest", &manifest, "--json", "--jobs", "2"]);
    assert_eq!(one.stdout, two.stdout);
    let v = one.json();
    assert_eq!(v["schema"], 1);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 4);
    for (k, c) in cases.iter().enumerate() {
        assert_eq!(c["case"], k + 1);
        assert!(c["report"].get("elapsed_ms").is_none());
    }
    let fails = v["summary"]["fail"].as_u64().unwrap();
    assert_eq!(fails, 0, "{v}");
    let inconclusive = v["summary"]["inconclusive"].as_u64().unwrap();
    assert_eq!(one.code, if inconclusive > 0 { 2 } else { 0 });

    let broken = f.put("broken.toml", "[[case]]\ntheorem = \"idcol\"\nd = \"x\"\n");
    let r = helly(&["check", "suite", "--manifest", &broken]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("broken.toml:3"), "{}", r.stderr);
    let unknown = f.put("unknown.toml", "[[case]]\ntheorem = \"fermat\"\n");
    assert_eq!(helly(&["check", "suite", "--manifest", &unknown]).code, 3);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["check", "syzygy-bound", "--ideal", &data("m2.ideal"), "--d", "1", "--json"];
    let a = helly(&args);
    let b = helly(&args);
    assert_eq!(a.stdout, b.stdout);
    let timed = helly(&[&args[..], &["--timing"]].concat());
    assert!(timed.json()["report"].get("elapsed_ms").is_some());
}
