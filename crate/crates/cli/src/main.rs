//! `bernoulli-det`: exact even-index Bernoulli numbers from the explicit
//! determinant formula, with verification, benchmarking, and a
//! fixed-width cancellation study.

mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use bernoulli_det_core::precision::MIN_SIGNIFICAND_BITS;
use bernoulli_det_core::{
    bernoulli_explicit, metrics, precision_study, verify, BernoulliTable, DeterminantSequence,
    ExactRational, RoundingMode,
};
use output::{emit_rows, emit_table, Format, OutputRow, VerificationOut};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "bernoulli-det",
    version,
    about = "Exact even-index Bernoulli numbers via a determinant formula"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute B_{2p} for a range of p
    Compute {
        /// First p (Bernoulli index 2p)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        /// Last p, inclusive
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Also render each value to this many decimal digits
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        decimal_digits: Option<u64>,
    },
    /// Cross-check a range of p against the classical oracles
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Verification workers (the determinant build stays sequential)
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[arg(long, hide = true)]
        corrupt_seq: bool,
    },
    /// Time the explicit formula against the classical recursion
    Bench {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        p_max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Measure rounding loss of the explicit formula at fixed widths
    Precision {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        /// Significand widths in bits, comma separated (each >= 8)
        #[arg(long, value_delimiter = ',', required = true)]
        bits: Vec<u32>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run 'bernoulli-det --help' for usage");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            from,
            to,
            format,
            decimal_digits,
        } => cmd_compute(from, to, format, decimal_digits),
        Command::Verify {
            from,
            to,
            format,
            workers,
            corrupt_seq,
        } => cmd_verify(from, to, format, workers, corrupt_seq),
        Command::Bench {
            p_max,
            reps,
            format,
        } => cmd_bench(p_max, reps, format),
        Command::Precision { p, bits, format } => cmd_precision(p, &bits, format),
    }
}

fn cmd_compute(from: u64, to: u64, format: Format, decimal_digits: Option<u64>) -> ExitCode {
    if from > to {
        return usage_error("--from must not exceed --to");
    }
    let seq = DeterminantSequence::new(to as usize);
    let rows: Vec<OutputRow> = (from..=to)
        .map(|p| {
            let value = bernoulli_explicit(p, &seq)
                .expect("sequence built to p_max")
                .value;
            OutputRow {
                index: 2 * p,
                value_exact: value.to_string(),
                value_decimal: decimal_digits
                    .map(|d| value.to_decimal(d as usize, RoundingMode::RoundHalfEven)),
                verification: None,
            }
        })
        .collect();
    emit_rows(&rows, format);
    ExitCode::SUCCESS
}

fn build_sequence(to: u64, corrupt: bool) -> DeterminantSequence {
    let seq = DeterminantSequence::new(to as usize);
    if corrupt && seq.max_index() >= 2 {
        let mut values = seq.values().to_vec();
        values[2] = ExactRational::ratio(1, 360);
        DeterminantSequence::from_values(values)
    } else {
        seq
    }
}

fn cmd_verify(from: u64, to: u64, format: Format, workers: u64, corrupt_seq: bool) -> ExitCode {
    if from > to {
        return usage_error("--from must not exceed --to");
    }
    let seq = build_sequence(to, corrupt_seq);
    let mut table = BernoulliTable::new();
    table.ensure(2 * to);

    let ps: Vec<u64> = (from..=to).collect();
    let records = parallel_map(&ps, workers as usize, |&p| {
        verify(p, &seq, &table).expect("sequence and table built to p_max")
    });

    let rows: Vec<OutputRow> = ps
        .iter()
        .zip(&records)
        .map(|(&p, rec)| OutputRow {
            index: 2 * p,
            value_exact: bernoulli_explicit(p, &seq)
                .expect("sequence built")
                .value
                .to_string(),
            value_decimal: None,
            verification: Some(VerificationOut {
                oracle_match: rec.oracle_match,
                vsc_denominator_match: rec.vsc_denominator_match,
                sign_match: rec.sign_match,
                asymptotic_ratio: rec.asymptotic_ratio.clone(),
            }),
        })
        .collect();
    emit_rows(&rows, format);

    if records.iter().all(|r| r.all_match()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

/// Applies `f` over `items` on up to `workers` threads, preserving order.
fn parallel_map<T: Sync, R: Send>(
    items: &[T],
    workers: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(f).collect();
    }
    let chunk_len = items.len().div_ceil(workers);
    let mut results: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_len)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        results = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    results.into_iter().flatten().collect()
}

fn cmd_bench(p_max: u64, reps: u64, format: Format) -> ExitCode {
    // untimed sanity pass: both methods must agree before we race them
    let seq = DeterminantSequence::new(p_max as usize);
    let mut table = BernoulliTable::new();
    table.ensure(2 * p_max);
    for p in 1..=p_max {
        let explicit = bernoulli_explicit(p, &seq).expect("sequence built").value;
        if &explicit != table.get(2 * p).expect("table built") {
            eprintln!("error: methods disagree at p = {p}; refusing to benchmark");
            return ExitCode::from(EXIT_MISMATCH);
        }
    }
    drop((seq, table));

    let mut rows = Vec::new();
    for method in ["explicit-formula", "classical-recursion"] {
        metrics::reset_rat_mul_count();
        let start = Instant::now();
        for _ in 0..reps {
            match method {
                "explicit-formula" => {
                    let seq = DeterminantSequence::new(p_max as usize);
                    for p in 1..=p_max {
                        let _ = bernoulli_explicit(p, &seq).expect("sequence built");
                    }
                }
                _ => {
                    let mut table = BernoulliTable::new();
                    table.ensure(2 * p_max);
                }
            }
        }
        let total_ns = start.elapsed().as_nanos();
        rows.push(vec![
            method.to_string(),
            p_max.to_string(),
            reps.to_string(),
            total_ns.to_string(),
            metrics::rat_mul_count().to_string(),
        ]);
    }
    emit_table(
        &["method", "p_max", "reps", "total_ns", "rat_mul_count"],
        &rows,
        format,
    );
    ExitCode::SUCCESS
}

fn cmd_precision(p: u64, bits_list: &[u32], format: Format) -> ExitCode {
    if bits_list.iter().any(|&b| b < MIN_SIGNIFICAND_BITS) {
        return usage_error(&format!(
            "--bits values must be >= {MIN_SIGNIFICAND_BITS}"
        ));
    }
    let seq = DeterminantSequence::new(p as usize);
    let rows: Vec<Vec<String>> = bits_list
        .iter()
        .map(|&bits| {
            let report = precision_study(p, bits, &seq).expect("validated inputs");
            vec![
                p.to_string(),
                bits.to_string(),
                report.relative_error_string(),
                report.lost_bits.to_string(),
            ]
        })
        .collect();
    emit_table(
        &["p", "significand_bits", "relative_error", "lost_bits"],
        &rows,
        format,
    );
    ExitCode::SUCCESS
}
