use std::process::Command;

use kostant::cli::{run, EXIT_OK, EXIT_USAGE};
use kostant::render::AltsetDocument;
use kostant::SignedQPolynomial;
use num_bigint::BigInt;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kostant").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn mult_prints_mq_and_m() {
    assert_eq!(
        invoke(&["mult", "A2"]),
        (EXIT_OK, "m_q = q + q^2; m = 2\n".into(), String::new())
    );
    let (code, out, _) = invoke(&["mult", "G2", "--lambda", "3,2", "--mu", "3,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "m_q = 1; m = 1");
    let (_, out, _) = invoke(&["mult", "--type", "F4"]);
    assert_eq!(out.trim(), "m_q = q + q^5 + q^7 + q^11; m = 4");
}

#[test]
fn omega_basis_matches_alpha_basis() {
    // ω_2 of G2 is the highest root 3α_1 + 2α_2.
    let (_, a, _) = invoke(&["mult", "G2", "--lambda", "3,2"]);
    let (_, w, _) = invoke(&["mult", "G2", "--basis", "omega", "--lambda", "0,1"]);
    assert_eq!(a, w);
    let (_, out, _) = invoke(&["mult", "A2", "--basis", "omega", "--lambda", "3,0"]);
    assert_eq!(out.trim(), "m_q = q^3; m = 1");
}

#[test]
fn partition_of_f4_highest_root() {
    let (code, out, _) = invoke(&["partition", "F4", "--xi", "2,3,4,2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("q + 7q^2 + 27q^3 + 53q^4"), "{out}");
    assert!(out.trim_end().ends_with("= 289"), "{out}");
    let (_, tree, _) = invoke(&["partition", "F4", "--xi", "2,3,4,2", "--method", "tree"]);
    assert_eq!(out, tree);
}

#[test]
fn list_partitions_g2() {
    let (code, out, _) = invoke(&["list-partitions", "G2", "--xi", "2,2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1(α_2) + 1(2α_1 + α_2)  [2 roots]"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("roots]")).count(), 4);
}

#[test]
fn altset_a1_at_mu_one() {
    let (code, out, _) = invoke(&["altset", "A1", "--mu", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().nth(1), Some("1 | 1 | 0 | 0 | 1"));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn altset_json_resums_to_mult() {
    for ty in ["G2", "F4", "E6", "B3"] {
        let (_, json, _) = invoke(&["altset", ty, "--format", "json"]);
        let doc: AltsetDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.count, doc.records.len());
        let mut acc = SignedQPolynomial::default();
        for row in &doc.records {
            acc.add_signed(row.pq.as_ref().unwrap(), row.sign < 0);
        }
        let (_, mult, _) = invoke(&["mult", ty]);
        assert_eq!(
            mult.trim(),
            format!("m_q = {acc}; m = {}", acc.eval_one()),
            "{ty}"
        );
    }
}

#[test]
fn altset_e8_count() {
    let (code, json, _) = invoke(&["altset", "E8", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: AltsetDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc.count, 2318);
    let mut acc = SignedQPolynomial::default();
    for row in &doc.records {
        acc.add_signed(row.pq.as_ref().unwrap(), row.sign < 0);
    }
    assert_eq!(
        acc.to_string(),
        "q + q^7 + q^11 + q^13 + q^17 + q^19 + q^23 + q^29"
    );
}

#[test]
fn mult_json_has_signed_coefficients() {
    let (_, json, _) = invoke(&["mult", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let mq: Vec<BigInt> = v["mq"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(mq, [0, 1, 0, 0, 0, 1].map(BigInt::from));
}

#[test]
fn latex_and_csv_formats() {
    let (_, tex, _) = invoke(&["altset", "G2", "--format", "latex"]);
    assert!(
        tex.contains(r"3 & $s_2$ & 1 & $ 3\alpha_{1} $ & $ q^{3} $\\\hline"),
        "{tex}"
    );
    let (_, csv, _) = invoke(&["altset", "G2", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("index,word,length,xi,pq,sign"));
}

#[test]
fn verify_passes_with_notes() {
    let (code, out, _) = invoke(&["verify", "G2", "F4"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("G2: PASS") && out.contains("F4: PASS"),
        "{out}"
    );
    assert!(out.contains("published |A(α̃,0)| = 2"), "{out}");
    let (_, out, _) = invoke(&["verify", "E6"]);
    assert!(out.contains("published |W| = 25920"), "{out}");
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("kostant-cli-{}.txt", std::process::id()));
    let (code, out, _) = invoke(&["mult", "G2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap().trim(),
        "m_q = q + q^5; m = 2"
    );
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["mult", "X9"][..],
        &["mult", "B1"],
        &["mult", "G2", "--lambda", "1,2,3"],
        &["partition", "G2", "--xi", "a,b"],
        &[
            "altset",
            "E8",
            "--max-group-order",
            "10",
            "--method",
            "tree",
            "--format",
            "bogus",
        ],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kostant");
    let ok = Command::new(bin).args(["mult", "G2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout).trim(),
        "m_q = q + q^5; m = 2"
    );
    let bad = Command::new(bin).args(["mult", "Q3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let verify = Command::new(bin).args(["verify", "G2"]).output().unwrap();
    assert_eq!(verify.status.code(), Some(0));
}
