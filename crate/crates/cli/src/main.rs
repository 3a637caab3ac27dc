//! Command-line front end: deterministic sweeps over random states, noise
//! channels and rotated Werner families, written as CSV/JSON artifacts, plus
//! single-state inspection.
//!
//! Exit codes: 0 all checks passed; 1 a mathematical check failed
//! (inequality violation or closed-form mismatch); 2 usage or I/O error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcorr_core::channels::{ad_channel, ad_closed_form, apply_on_a, pd_channel, pd_closed_form};
use qcorr_core::linalg::{kron, pauli_x, pauli_y};
use qcorr_core::measures::{analyze, bell_nonlocality, concurrence};
use qcorr_core::states::{purity, random_mixed, random_unitary, werner};
use qcorr_core::werner_analysis::{
    check_proof_eigenstructure, make_case, property1_predicted_n, property2_predicted_c,
};
use qcorr_core::{Complex64, ComplexMatrix, RngStream};

/// Slack on the nonlocality-vs-concurrence band when counting violations.
const BAND_TOLERANCE: f64 = 1e-9;
/// Agreement required between closed forms and direct channel evolution.
const CHANNEL_TOLERANCE: f64 = 1e-10;
/// Agreement required between predicted and direct rotated-Werner measures.
const PREDICTION_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "qcorr",
    version,
    about = "Two-qubit entanglement and Bell-nonlocality sweeps",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample random mixed states and tabulate concurrence, nonlocality,
    /// CHSH quantity and purity; verifies the nonlocality band for every
    /// sample.
    Scatter {
        /// Samples per rank.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Comma-separated ranks, each in 1..=4.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        ranks: Vec<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep a damping channel over the (p, eps) grid and compare closed
    /// forms against direct Kraus evolution.
    Channel {
        #[arg(long, value_enum)]
        kind: ChannelKind,
        /// Grid points along p (inclusive endpoints).
        #[arg(long, default_value_t = 21)]
        p_steps: usize,
        /// Grid points along eps (inclusive endpoints).
        #[arg(long, default_value_t = 21)]
        eps_steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Rotate Werner states by deterministic and Haar-random unitaries and
    /// verify the prediction formulas and spin-flip eigenstructure.
    WernerUnitary {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Output JSON report path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze a single state from a JSON file.
    State {
        /// Input state file (JSON matrix of [re, im] entries).
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ChannelKind {
    /// Phase damping.
    Pd,
    /// Amplitude damping.
    Ad,
}

/// 17 significant digits: round-trip exact for 64-bit floats.
fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// One row of the scatter CSV.
struct SampleRecord {
    index: usize,
    rank: usize,
    concurrence: f64,
    nonlocality: f64,
    m_value: f64,
    purity: f64,
}

impl SampleRecord {
    const CSV_HEADER: &'static str = "index,rank,concurrence,nonlocality,m_value,purity";

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.index,
            self.rank,
            fmt_real(self.concurrence),
            fmt_real(self.nonlocality),
            fmt_real(self.m_value),
            fmt_real(self.purity),
        )
    }
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn io_error(path: &Path, err: &std::io::Error) -> u8 {
    eprintln!("error: {}: {err}", path.display());
    2
}

fn cmd_scatter(samples: usize, ranks: &[usize], seed: u64, out: &Path) -> u8 {
    if samples == 0 {
        return usage_error("--samples must be at least 1");
    }
    let mut ranks = ranks.to_vec();
    ranks.sort_unstable();
    ranks.dedup();
    if ranks.is_empty() || ranks.iter().any(|r| !(1..=4).contains(r)) {
        return usage_error("--ranks must be a non-empty subset of 1,2,3,4");
    }

    let file = match File::create(out) {
        Ok(f) => f,
        Err(e) => return io_error(out, &e),
    };
    let mut csv = BufWriter::new(file);
    let mut write_row = |line: String| -> std::io::Result<()> { writeln!(csv, "{line}") };
    if let Err(e) = write_row(SampleRecord::CSV_HEADER.into()) {
        return io_error(out, &e);
    }

    let mut violations = 0usize;
    let mut lower_margin = (f64::INFINITY, f64::NEG_INFINITY);
    let mut upper_margin = (f64::INFINITY, f64::NEG_INFINITY);
    let mut count = 0usize;
    for &rank in &ranks {
        // One stream per rank: adding or dropping a rank never reshuffles
        // the samples of the others.
        let mut rng = RngStream::new(seed, rank as u64);
        for index in 0..samples {
            let rho = random_mixed(rank, &mut rng).expect("rank validated above");
            let report = match analyze(&rho) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: sample {index} rank {rank}: {e}");
                    return 1;
                }
            };
            if report.violates_inequality {
                violations += 1;
            }
            let lo = report.nonlocality - report.lower_bound;
            let hi = report.upper_bound - report.nonlocality;
            lower_margin = (lower_margin.0.min(lo), lower_margin.1.max(lo));
            upper_margin = (upper_margin.0.min(hi), upper_margin.1.max(hi));
            count += 1;
            let record = SampleRecord {
                index,
                rank,
                concurrence: report.concurrence,
                nonlocality: report.nonlocality,
                m_value: report.m_value,
                purity: purity(&rho),
            };
            if let Err(e) = write_row(record.csv_row()) {
                return io_error(out, &e);
            }
        }
    }
    if let Err(e) = csv.flush() {
        return io_error(out, &e);
    }

    println!("states: {count}");
    println!("violations: {violations}");
    println!(
        "lower_margin_min: {}  lower_margin_max: {}",
        fmt_real(lower_margin.0),
        fmt_real(lower_margin.1)
    );
    println!(
        "upper_margin_min: {}  upper_margin_max: {}",
        fmt_real(upper_margin.0),
        fmt_real(upper_margin.1)
    );
    println!("csv: {}", out.display());
    if violations == 0 {
        0
    } else {
        1
    }
}

fn cmd_channel(kind: ChannelKind, p_steps: usize, eps_steps: usize, out: &Path) -> u8 {
    if p_steps < 2 || eps_steps < 2 {
        return usage_error("--p-steps and --eps-steps must be at least 2");
    }
    let file = match File::create(out) {
        Ok(f) => f,
        Err(e) => return io_error(out, &e),
    };
    let mut csv = BufWriter::new(file);
    if let Err(e) = writeln!(csv, "p,eps,c_closed,n_closed,c_direct,n_direct") {
        return io_error(out, &e);
    }

    let label = match kind {
        ChannelKind::Pd => "pd",
        ChannelKind::Ad => "ad",
    };
    let mut max_c_dev = 0.0f64;
    let mut max_n_dev = 0.0f64;
    for i in 0..p_steps {
        let p = i as f64 / (p_steps - 1) as f64;
        let w = werner(p).expect("grid point in range");
        for j in 0..eps_steps {
            let eps = j as f64 / (eps_steps - 1) as f64;
            let (channel, closed) = match kind {
                ChannelKind::Pd => (pd_channel(eps), pd_closed_form(p, eps)),
                ChannelKind::Ad => (ad_channel(eps), ad_closed_form(p, eps)),
            };
            let (channel, closed) = (
                channel.expect("grid point in range"),
                closed.expect("grid point in range"),
            );
            let evolved = match apply_on_a(&w, &channel) {
                Ok(rho) => rho,
                Err(e) => {
                    eprintln!("error: {label} at p = {p}, eps = {eps}: {e}");
                    return 1;
                }
            };
            let c_direct = match concurrence(&evolved) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {label} at p = {p}, eps = {eps}: {e}");
                    return 1;
                }
            };
            let n_direct = bell_nonlocality(&evolved);
            max_c_dev = max_c_dev.max((c_direct - closed.concurrence).abs());
            max_n_dev = max_n_dev.max((n_direct - closed.nonlocality).abs());
            let line = format!(
                "{},{},{},{},{},{}",
                fmt_real(p),
                fmt_real(eps),
                fmt_real(closed.concurrence),
                fmt_real(closed.nonlocality),
                fmt_real(c_direct),
                fmt_real(n_direct),
            );
            if let Err(e) = writeln!(csv, "{line}") {
                return io_error(out, &e);
            }
        }
    }
    if let Err(e) = csv.flush() {
        return io_error(out, &e);
    }

    let pass = max_c_dev <= CHANNEL_TOLERANCE && max_n_dev <= CHANNEL_TOLERANCE;
    println!("kind: {label}");
    println!("grid: {p_steps} x {eps_steps}");
    println!("max_concurrence_deviation: {}", fmt_real(max_c_dev));
    println!("max_nonlocality_deviation: {}", fmt_real(max_n_dev));
    println!("tolerance: {}", fmt_real(CHANNEL_TOLERANCE));
    println!("result: {}", if pass { "ok" } else { "mismatch" });
    println!("csv: {}", out.display());
    if pass {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct WernerUnitaryReport {
    trials: usize,
    seed: u64,
    tolerance: f64,
    max_nonlocality_prediction_deviation: f64,
    max_concurrence_prediction_deviation: f64,
    max_pair_deviation: f64,
    max_sum_deviation: f64,
    max_product_deviation: f64,
    max_dominance_excess: f64,
    pass: bool,
}

/// The two-qubit swap |ab> -> |ba>.
fn swap_gate() -> ComplexMatrix {
    let perm = [0usize, 2, 1, 3];
    ComplexMatrix::from_fn(4, |i, j| {
        if i == perm[j] {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn cmd_werner_unitary(trials: usize, seed: u64, out: &Path) -> u8 {
    if trials == 0 {
        return usage_error("--trials must be at least 1");
    }
    let mut rng = RngStream::new(seed, 0);
    let mut report = WernerUnitaryReport {
        trials,
        seed,
        tolerance: PREDICTION_TOLERANCE,
        max_nonlocality_prediction_deviation: 0.0,
        max_concurrence_prediction_deviation: 0.0,
        max_pair_deviation: 0.0,
        max_sum_deviation: 0.0,
        max_product_deviation: 0.0,
        max_dominance_excess: 0.0,
        pass: false,
    };
    for trial in 0..trials {
        // Three structured rotations ahead of the Haar stream: identity,
        // swap, and a local product unitary. The weight is drawn after the
        // unitary so the sequence is reproducible for any trial count.
        let unitary = match trial {
            0 => ComplexMatrix::identity(4),
            1 => swap_gate(),
            2 => kron(&pauli_x(), &pauli_y()).expect("Pauli matrices are 2x2"),
            _ => match random_unitary(4, &mut rng) {
                Ok(u) => u,
                Err(e) => {
                    eprintln!("error: trial {trial}: {e}");
                    return 1;
                }
            },
        };
        let p = rng.next_f64();
        let outcome = make_case(p, unitary)
            .and_then(|case| {
                let predicted_n = property1_predicted_n(&case);
                let predicted_c = property2_predicted_c(&case);
                let direct_n = bell_nonlocality(case.rho_wu());
                let direct_c = concurrence(case.rho_wu())?;
                let eigen = check_proof_eigenstructure(&case)?;
                let w = werner(p)?;
                let dominance = (direct_c - concurrence(&w)?)
                    .max(direct_n - bell_nonlocality(&w))
                    .max(0.0);
                Ok((predicted_n - direct_n, predicted_c - direct_c, eigen, dominance))
            });
        match outcome {
            Ok((n_dev, c_dev, eigen, dominance)) => {
                let r = &mut report;
                r.max_nonlocality_prediction_deviation =
                    r.max_nonlocality_prediction_deviation.max(n_dev.abs());
                r.max_concurrence_prediction_deviation =
                    r.max_concurrence_prediction_deviation.max(c_dev.abs());
                r.max_pair_deviation = r.max_pair_deviation.max(eigen.pair_deviation);
                r.max_sum_deviation = r.max_sum_deviation.max(eigen.sum_deviation);
                r.max_product_deviation = r.max_product_deviation.max(eigen.product_deviation);
                r.max_dominance_excess = r.max_dominance_excess.max(dominance);
            }
            Err(e) => {
                eprintln!("error: trial {trial}: {e}");
                return 1;
            }
        }
    }
    report.pass = [
        report.max_nonlocality_prediction_deviation,
        report.max_concurrence_prediction_deviation,
        report.max_pair_deviation,
        report.max_sum_deviation,
        report.max_product_deviation,
        report.max_dominance_excess,
    ]
    .iter()
    .all(|d| *d <= PREDICTION_TOLERANCE);

    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Err(e) = std::fs::write(out, json + "\n") {
        return io_error(out, &e);
    }
    println!(
        "trials: {}  max_deviation: {}  pass: {}",
        trials,
        fmt_real(
            report
                .max_nonlocality_prediction_deviation
                .max(report.max_concurrence_prediction_deviation)
                .max(report.max_pair_deviation)
                .max(report.max_sum_deviation)
                .max(report.max_product_deviation)
                .max(report.max_dominance_excess)
        ),
        report.pass
    );
    println!("json: {}", out.display());
    if report.pass {
        0
    } else {
        1
    }
}

fn cmd_state(input: &Path) -> u8 {
    let rho = match qcorr_core::io::load_density(input) {
        Ok(rho) => rho,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return 2;
        }
    };
    let report = match analyze(&rho) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return 1;
        }
    };
    println!("concurrence: {}", fmt_real(report.concurrence));
    println!("m_value: {}", fmt_real(report.m_value));
    println!("nonlocality: {}", fmt_real(report.nonlocality));
    println!("lower_bound: {}", fmt_real(report.lower_bound));
    println!("upper_bound: {}", fmt_real(report.upper_bound));
    if report.violates_inequality {
        println!("inequality: violated (tolerance {})", fmt_real(BAND_TOLERANCE));
        1
    } else {
        println!("inequality: satisfied (tolerance {})", fmt_real(BAND_TOLERANCE));
        0
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Scatter { samples, ranks, seed, out } => {
            cmd_scatter(samples, &ranks, seed, &out)
        }
        Command::Channel { kind, p_steps, eps_steps, out } => {
            cmd_channel(kind, p_steps, eps_steps, &out)
        }
        Command::WernerUnitary { trials, seed, out } => cmd_werner_unitary(trials, seed, &out),
        Command::State { input } => cmd_state(&input),
    };
    ExitCode::from(code)
}
