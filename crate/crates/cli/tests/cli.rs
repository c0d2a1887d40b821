use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sqen(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqen"))
        .args(args)
        .env_remove("SQEN_TOL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sqen");
    let input = stdin.unwrap_or("").to_owned();
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

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn energy_k4_one_row() {
    let o = sqen(&["energy", "C~"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let cols: Vec<&str> = text.trim().split(',').collect();
    assert_eq!(&cols[..3], &["C~", "4", "6"]);
    assert_eq!(&cols[4..7], &["1", "0", "3"]);
    assert!((cols[7].parse::<f64>().unwrap() - 9.0).abs() < 1e-9);

    let with_header = stdout(&sqen(&["energy", "C~", "--header"], None));
    assert!(with_header
        .starts_with("graph6,n,m,mu1,n_plus,n_zero,n_minus,s_plus,s_minus,ratio,spread\n"));
}

#[test]
fn json_and_csv_agree() {
    let csv = stdout(&sqen(&["energy", "Dhc", "--header"], None));
    let json = stdout(&sqen(&["energy", "Dhc", "--format", "json"], None));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let row = &v[0];
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let values: Vec<&str> = lines.next().unwrap().split(',').collect();
    for (h, x) in header.iter().zip(values) {
        let j = &row[*h];
        let rendered = match j {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        // serde_json's default float parser may be off by one ulp.
        match (rendered.parse::<f64>(), x.parse::<f64>()) {
            (Ok(a), Ok(b)) => assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0), "{h}: {a} vs {b}"),
            _ => assert_eq!(rendered, x, "{h}"),
        }
    }
}

#[test]
fn check_proven_on_n5_corpus_exits_zero() {
    let mut input = String::new();
    for n in 1..=5 {
        for g in sqen_graphs(n) {
            input.push_str(&g);
            input.push('\n');
        }
    }
    let o = sqen(
        &["check", "--suite", "proven", "--input", "-"],
        Some(&input),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("graphId,checkName,applicable,holds,lhs,rhs,margin"));
    assert_eq!(text.lines().count(), 1 + 9 * (1 + 2 + 4 + 11 + 34));
}

fn sqen_graphs(n: usize) -> Vec<String> {
    sqen_core::graph::enumerate_nonisomorphic(n)
        .unwrap()
        .iter()
        .map(sqen_core::graph::encode_graph6)
        .collect()
}

#[test]
fn malformed_line_reports_line_number() {
    let o = sqen(&["check", "--input", "-"], Some("C~\nDhc\nC\u{7f}\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(sqen(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(
        sqen(&["energy", "C~", "--bogus"], None).status.code(),
        Some(1)
    );
    assert_eq!(
        sqen(
            &["check", "--suite", "nonsense", "--input", "-"],
            Some("C~\n")
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        sqen(&["construct", "--family", "kneser", "--n", "5"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sqen(&["--help"], None).status.code(), Some(0));
}

#[test]
fn construct_and_resolve() {
    let o = sqen(
        &["construct", "--family", "kneser", "--n", "5", "--k", "2"],
        None,
    );
    let petersen = stdout(&o).trim().to_owned();
    let g = sqen_core::graph::parse_graph6(&petersen).unwrap();
    assert_eq!((g.n(), g.m()), (10, 15));

    let planar = stdout(&sqen(
        &[
            "construct",
            "--family",
            "planar",
            "--n",
            "12",
            "--seed",
            "4",
        ],
        None,
    ));
    let o = sqen(
        &["check", "--suite", "planar", "--input", "-"],
        Some(&planar),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);

    let o = sqen(&["resolve", "Bw"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph6,part,irreducible,components,tau,row,values"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn exact_families() {
    let k = stdout(&sqen(&["kneser", "--n", "6", "--k", "2"], None));
    assert!(k.contains("6^1 1^9 -3^5,45,45,0,10,0,5"), "{k}");
    let gq = stdout(&sqen(&["families", "--family", "gq", "--param", "2"], None));
    assert!(gq.contains(",120,150,-30,"), "{gq}");
    let t = stdout(&sqen(
        &[
            "families", "--family", "taylor", "--param", "3", "--blowup", "3",
        ],
        None,
    ));
    assert!(t.contains(",-270,"), "{t}");
    let study = stdout(&sqen(
        &["families", "--study", "taylor-spread", "--grid", "3,5"],
        None,
    ));
    assert_eq!(study.lines().count(), 1 + 2 * 3);
}

#[test]
fn sweep_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let svg = dir.path().join("a.svg");
    let args = |out: &std::path::Path| {
        vec![
            "sweep".to_owned(),
            "--n".into(),
            "30".into(),
            "--p-grid".into(),
            "0:1:0.25".into(),
            "--samples".into(),
            "3".into(),
            "--seed".into(),
            "11".into(),
            "--out".into(),
            out.display().to_string(),
        ]
    };
    let mut with_svg = args(&a);
    with_svg.extend(["--svg".into(), svg.display().to_string()]);
    let o = sqen(
        &with_svg.iter().map(String::as_str).collect::<Vec<_>>(),
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = sqen(
        &[
            &args(&b).iter().map(String::as_str).collect::<Vec<_>>()[..],
            &["--threads", "1"],
        ]
        .concat(),
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert_eq!(String::from_utf8(x).unwrap().lines().count(), 6);
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn average_builtin_and_corpus() {
    let o = sqen(&["average", "--n", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("m,graph_count,avg_s_plus,avg_s_minus"));
    assert_eq!(text.lines().count(), 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.g6");
    std::fs::write(&path, sqen_graphs(4).join("\n")).unwrap();
    let o = sqen(&["average", "--graph6", path.to_str().unwrap()], None);
    assert_eq!(stdout(&o), text);
    assert!(stderr(&o).contains("graphs = 11"));
}

#[test]
fn corpus_summary_and_tolerance_env() {
    let input = sqen_graphs(4).join("\n");
    let o = sqen(&["corpus", "--suite", "all"], Some(&input));
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("graphs: 11"), "{}", stderr(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_sqen"))
        .args(["check", "--input", "-"])
        .env("SQEN_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
