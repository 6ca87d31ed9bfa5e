//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`; failures abort the test).
//!
//! Run with `cargo test -p bernoulli-det --test acceptance`.

use std::process::Command;
use std::time::Instant;

use bernoulli_det_core::bernoulli::asymptotic_ratio;
use bernoulli_det_core::{
    bernoulli_explicit, precision_study, vsc_denominator, BernoulliTable, DeterminantSequence,
    ExactRational, HessenbergMatrix,
};

fn report(id: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {id}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn r(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

#[test]
fn criterion_1_explicit_formula_matches_recursion_oracle() {
    let start = Instant::now();
    let seq = DeterminantSequence::new(100);
    let mut table = BernoulliTable::new();
    table.ensure(200);
    let all_equal = (1..=100u64).all(|p| {
        &bernoulli_explicit(p, &seq).unwrap().value == table.get(2 * p).unwrap()
    });
    let elapsed = start.elapsed();
    report(
        "1",
        all_equal && elapsed.as_secs() < 10,
        &format!("exact equality for p = 1..=100 in {elapsed:.2?} (budget 10s)"),
    );
}

#[test]
fn criterion_2_determinant_cross_validation() {
    let seq = DeterminantSequence::new(12);
    let agree = (1..=12).all(|k| {
        seq.value(k) == &HessenbergMatrix::build(k).det_fraction_free()
    });
    let pinned = seq.value(1) == &r(1, 6)
        && seq.value(2) == &r(7, 360)
        && seq.value(3) == &r(31, 15120);
    report(
        "2",
        agree && pinned,
        "recurrence equals fraction-free determinant for k = 1..=12; D_1 = 1/6, D_2 = 7/360, D_3 = 31/15120",
    );
}

#[test]
fn criterion_3_golden_matrix_fixtures() {
    // the displayed matrices, entry for entry
    let golden: [Vec<Vec<ExactRational>>; 4] = [
        vec![vec![r(1, 6)]],
        vec![vec![r(1, 6), r(1, 120)], vec![r(1, 1), r(1, 6)]],
        vec![
            vec![r(1, 6), r(1, 120), r(1, 5040)],
            vec![r(1, 1), r(1, 6), r(1, 120)],
            vec![r(0, 1), r(1, 1), r(1, 6)],
        ],
        vec![
            vec![r(1, 6), r(1, 120), r(1, 5040), r(1, 362880)],
            vec![r(1, 1), r(1, 6), r(1, 120), r(1, 5040)],
            vec![r(0, 1), r(1, 1), r(1, 6), r(1, 120)],
            vec![r(0, 1), r(0, 1), r(1, 1), r(1, 6)],
        ],
    ];
    let mut ok = true;
    for (idx, expected) in golden.iter().enumerate() {
        let k = idx + 1;
        let m = HessenbergMatrix::build(k);
        for i in 0..k {
            ok &= m.row(i) == expected[i].as_slice();
        }
    }
    report("3", ok, "build_matrix(k) reproduces the k = 1..=4 fixtures");
}

#[test]
fn criterion_4_convolution_residuals_vanish() {
    let seq = DeterminantSequence::new(200);
    let ok = (1..=200).all(|k| seq.convolution_residual(k) == ExactRational::zero());
    report("4", ok, "alternating convolution is exactly zero for k = 1..=200");
}

#[test]
fn criterion_5_number_theoretic_oracles() {
    let seq = DeterminantSequence::new(100);
    let one = ExactRational::one();
    let band = r(1, 1000);
    let mut ok = true;
    for p in 1..=100u64 {
        let value = bernoulli_explicit(p, &seq).unwrap().value;
        ok &= value.denominator() == &vsc_denominator(p);
        ok &= value.is_positive() == (p % 2 == 1) && !value.is_zero();
        if p >= 25 {
            let ratio = asymptotic_ratio(p, &value);
            ok &= (&ratio - &one).abs() < band;
        }
    }
    report(
        "5",
        ok,
        "von Staudt-Clausen denominators, sign alternation, and the zeta asymptotic for p = 1..=100",
    );
}

#[test]
fn criterion_6a_cancellation_at_53_bits() {
    let seq = DeterminantSequence::new(20);
    let study = precision_study(20, 53, &seq).unwrap();
    let threshold = r(1, 2).pow(30);
    let (ok, measured) = match &study.relative_error {
        None => (true, "total-loss".to_string()),
        Some(rel) => (rel > &threshold, rel.to_decimal(20, bernoulli_det_core::RoundingMode::RoundHalfEven)),
    };
    report(
        "6a",
        ok,
        &format!("53-bit relative error at p = 20 must exceed 2^-30; measured {measured}"),
    );
}

#[test]
fn criterion_6b_headroom_at_512_bits() {
    let seq = DeterminantSequence::new(20);
    let study = precision_study(20, 512, &seq).unwrap();
    let threshold = r(1, 2).pow(300);
    let ok = matches!(&study.relative_error, Some(rel) if rel < &threshold);
    report(
        "6b",
        ok,
        "512-bit relative error at p = 20 is below 2^-300",
    );
}

#[test]
fn criterion_7_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_bernoulli-det");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");

    let clean = run(&["verify", "--from", "1", "--to", "50"]);
    let corrupted = run(&["verify", "--from", "1", "--to", "50", "--corrupt-seq"]);

    // the three encodings must carry identical values
    let mut parsed: Vec<Vec<(u64, ExactRational)>> = Vec::new();
    for format in ["plain", "csv", "json"] {
        let out = run(&["compute", "--from", "1", "--to", "15", "--format", format]);
        let text = String::from_utf8(out.stdout).unwrap();
        let values = match format {
            "plain" => text
                .lines()
                .map(|line| {
                    let mut parts = line.split_whitespace();
                    let index = parts
                        .next()
                        .unwrap()
                        .strip_prefix("B_")
                        .unwrap()
                        .parse()
                        .unwrap();
                    parts.next();
                    (index, parts.next().unwrap().parse().unwrap())
                })
                .collect(),
            "csv" => text
                .lines()
                .skip(1)
                .map(|line| {
                    let mut cols = line.split(',');
                    (
                        cols.next().unwrap().parse().unwrap(),
                        cols.next().unwrap().parse().unwrap(),
                    )
                })
                .collect(),
            _ => {
                let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
                rows.iter()
                    .map(|row| {
                        (
                            row["index"].as_u64().unwrap(),
                            row["value_exact"].as_str().unwrap().parse().unwrap(),
                        )
                    })
                    .collect()
            }
        };
        parsed.push(values);
    }

    let ok = clean.status.code() == Some(0)
        && corrupted.status.code() == Some(1)
        && parsed[0] == parsed[1]
        && parsed[0] == parsed[2];
    report(
        "7",
        ok,
        "verify 1..=50 exits 0, corrupted sequence exits 1, formats agree",
    );
}
