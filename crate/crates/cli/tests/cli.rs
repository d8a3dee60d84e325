use std::io::Write;
use std::process::{Command, Output, Stdio};

use num_bigint::BigInt;
use num_rational::BigRational;
use parafrob_cli::json::{self, QpJson};
use parafrob_cli::parse::{parse_expr, parse_generators, Expr};
use parafrob_core::{Polynomial, QuasiPolynomial};
use proptest::prelude::*;

fn parafrob(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parafrob"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_golden_instance() {
    let o = parafrob(&["solve", "t, t+1, t+2"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("t^2/2 - 1    if t ≡ 0 (mod 2)"), "{text}");
    assert!(text.contains("t^2/2 - t/2 - 1    if t ≡ 1 (mod 2)"), "{text}");
    assert!(text.contains("0 mismatches"), "{text}");
}

#[test]
fn solve_single_generator() {
    let o = parafrob(&["solve", "t", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["components"], serde_json::json!([["0", "-1"]]));
}

#[test]
fn solve_quartic_from_stdin() {
    let o = parafrob(&["solve", "-", "--json", "--t-to", "30"], Some("t^2, t^2+1, t^2+2\n"));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "rodseth");
    assert_eq!(v["result"]["period"], 2);
    assert_eq!(v["verification"]["mismatches"], serde_json::json!([]));
}

#[test]
fn verify_sweeps() {
    let o = parafrob(&["verify", "t,t+1,t+2", "--t-from", "3", "--t-to", "300"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("298 compared, 0 skipped, 0 mismatches"), "{}", stdout(&o));
    let o = parafrob(&["verify", "2*t,3*t", "--t-from", "1", "--t-to", "100"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 mismatches"));
}

#[test]
fn verify_catches_corrupted_formula() {
    let dir = std::env::temp_dir().join(format!("parafrob-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.json");
    std::fs::write(&path, r#"{"period":2,"threshold":2,"components":[["0","0","1/2"],["-1","-1/2","1/2"]]}"#).unwrap();
    let o = parafrob(&["verify", "t,t+1,t+2", "--qp", path.to_str().unwrap(), "--t-to", "40"], None);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("20 mismatches"), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_from_saved_json() {
    let dir = std::env::temp_dir().join(format!("parafrob-cli-eval-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let solved = parafrob(&["solve", "t,t+2", "--json", "--no-verify"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&solved)).unwrap();
    let path = dir.join("f.json");
    std::fs::write(&path, v["result"].to_string()).unwrap();
    let o = parafrob(&["eval", "--qp", path.to_str().unwrap(), "--t-from", "5", "--t-to", "7"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "5\t23\n6\t10\n7\t47\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_below_threshold_fails() {
    let o = parafrob(&["eval", "t,t+1,t+2", "--t-from", "0"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("threshold"));
}

#[test]
fn oracle_values() {
    for (input, want) in [("5,6,7", "9\n"), ("1", "-1\n"), ("4, 6", "2\n")] {
        let o = parafrob(&["oracle", input], None);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), want);
    }
    let o = parafrob(&["oracle", "5, t"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let o = parafrob(&["solve", "t^"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("offset 2"), "{}", stderr(&o));
    let o = parafrob(&["solve", "t^2, t+1, t+2, t+3"], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("conjecture territory"));
    let o = parafrob(&["solve", "t+1, 2*t^2+1, t^3+t"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = parafrob(&["solve", "-t, t+1"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = parafrob(&["solve"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = parafrob(&["--help"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn budget_is_enforced() {
    let o = parafrob(&["solve", "t, t+1, t+4, t+9", "--budget", "3"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
}

fn render(e: &Expr) -> String {
    match e {
        Expr::Int(n) => n.to_string(),
        Expr::Var => "t".into(),
        Expr::Neg(a) => format!("-({})", render(a)),
        Expr::Add(a, b) => format!("({} + {})", render(a), render(b)),
        Expr::Sub(a, b) => format!("({} - {})", render(a), render(b)),
        Expr::Mul(a, b) => format!("({})*({})", render(a), render(b)),
        Expr::Pow(a, k) => format!("({})^{k}", render(a)),
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0i64..50).prop_map(|n| Expr::Int(n.into())), Just(Expr::Var)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

fn qp_strategy() -> impl Strategy<Value = QuasiPolynomial> {
    (1u64..=4, 0i64..50).prop_flat_map(|(period, threshold)| {
        proptest::collection::vec(proptest::collection::vec(-20i64..=20, 0..5), period as usize).prop_map(
            move |comps| {
                let comps = comps
                    .iter()
                    .enumerate()
                    .map(|(r, c)| {
                        // halve where that stays integer-valued on the class
                        let p = Polynomial::from_i64s(c);
                        let half = p.scale(&BigRational::new(1.into(), 2.into()));
                        if half.is_integer_valued_on(parafrob_core::ResidueClass::new(period, r as u64)) {
                            half
                        } else {
                            p
                        }
                    })
                    .collect();
                QuasiPolynomial::new(period, comps, threshold).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn printed_expressions_reparse(e in expr_strategy(), t in -30i64..30) {
        let text = render(&e);
        let back = parse_expr(&text).unwrap();
        let t = BigInt::from(t);
        prop_assert_eq!(back.eval(&t), e.eval(&t));
        prop_assert_eq!(back.to_polynomial(), e.to_polynomial());
    }

    #[test]
    fn generator_lists_split_on_commas(es in proptest::collection::vec(expr_strategy(), 1..5)) {
        let text = es.iter().map(render).collect::<Vec<_>>().join(" , ");
        let parsed = parse_generators(&text).unwrap();
        prop_assert_eq!(parsed.len(), es.len());
        for (p, e) in parsed.iter().zip(&es) {
            prop_assert_eq!(&p.polynomial(), &e.to_polynomial());
            prop_assert_eq!(&text[p.offset..p.offset + p.source.len()], p.source.as_str());
        }
    }

    #[test]
    fn json_round_trip(f in qp_strategy()) {
        let text = json::to_string(&f);
        let back = json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(QpJson::from_qp(&back), QpJson::from_qp(&f));
    }
}
