//! Output rows and the three encodings (plain, CSV, JSON).
//!
//! CSV always emits a header row and keeps fractions as a single
//! `num/den` column; JSON is a top-level list of objects with big values
//! carried as strings.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationOut {
    pub oracle_match: bool,
    pub vsc_denominator_match: bool,
    pub sign_match: bool,
    pub asymptotic_ratio: String,
}

/// One table row: the Bernoulli index `2p` and its exact value, plus the
/// optional decimal rendering and verification outcome.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRow {
    pub index: u64,
    pub value_exact: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationOut>,
}

pub fn emit_rows(rows: &[OutputRow], format: Format) {
    match format {
        Format::Plain => {
            for row in rows {
                let mut line = format!("B_{} = {}", row.index, row.value_exact);
                if let Some(dec) = &row.value_decimal {
                    line.push_str(&format!(" ({dec})"));
                }
                if let Some(v) = &row.verification {
                    line.push_str(&format!(
                        " oracle={} vsc={} sign={} ratio={}",
                        v.oracle_match, v.vsc_denominator_match, v.sign_match, v.asymptotic_ratio
                    ));
                }
                println!("{line}");
            }
        }
        Format::Csv => {
            let with_decimal = rows.iter().any(|r| r.value_decimal.is_some());
            let with_verify = rows.iter().any(|r| r.verification.is_some());
            let mut header = String::from("index,value_exact");
            if with_decimal {
                header.push_str(",value_decimal");
            }
            if with_verify {
                header.push_str(",oracle_match,vsc_denominator_match,sign_match,asymptotic_ratio");
            }
            println!("{header}");
            for row in rows {
                let mut line = format!("{},{}", row.index, row.value_exact);
                if with_decimal {
                    line.push(',');
                    if let Some(dec) = &row.value_decimal {
                        line.push_str(dec);
                    }
                }
                if with_verify {
                    let v = row.verification.as_ref().expect("uniform rows");
                    line.push_str(&format!(
                        ",{},{},{},{}",
                        v.oracle_match, v.vsc_denominator_match, v.sign_match, v.asymptotic_ratio
                    ));
                }
                println!("{line}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(rows).expect("rows serialize")
            );
        }
    }
}

/// Generic tabular emission for bench and precision reports.
pub fn emit_table(header: &[&str], rows: &[Vec<String>], format: Format) {
    match format {
        Format::Plain => {
            for row in rows {
                let line: Vec<String> = header
                    .iter()
                    .zip(row)
                    .map(|(h, v)| format!("{h}={v}"))
                    .collect();
                println!("{}", line.join(" "));
            }
        }
        Format::Csv => {
            println!("{}", header.join(","));
            for row in rows {
                println!("{}", row.join(","));
            }
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&objects).expect("rows serialize")
            );
        }
    }
}
