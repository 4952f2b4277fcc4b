use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use capsearch::certificate;
use capsearch::textio::{describe_point, encoding_list, parse_points};
use capsearch::verify::{self, Baseline};
use capsearch::{fixture, parallel};
use capsearch_core::codes::{format_enumerator, weight_enumerator};
use capsearch_core::collineations::{canonical_form, stabilizer_order};
use capsearch_core::{search, Error, PointSet, Space};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "capsearch",
    version,
    about = "Classification of caps in the binary projective spaces PG(r,2), r = 2..4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all spanning caps up to projective equivalence and emit a
    /// certificate.
    Classify {
        /// Projective dimension r.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        dim: u32,
        /// Certificate format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the certificate to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: all available).
        #[arg(long)]
        threads: Option<usize>,
        /// Skip the post-run re-check of every class record.
        #[arg(long)]
        no_dedupe_check: bool,
    },
    /// Cross-check a classification against the brute-force oracle and
    /// the bundled reference data.
    Verify {
        /// Projective dimension r.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        dim: u32,
        /// Verify this certificate file instead of just a fresh run.
        #[arg(long)]
        against: Option<PathBuf>,
        /// Worker threads (default: all available).
        #[arg(long)]
        threads: Option<usize>,
        /// Also write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Report every classification property of one point set.
    Inspect {
        /// Projective dimension r.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        dim: u32,
        /// Comma-separated points: coordinate strings or integer
        /// encodings.
        #[arg(long)]
        points: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            dim,
            format,
            out,
            threads,
            no_dedupe_check,
        } => cmd_classify(dim, format, out, threads, no_dedupe_check),
        Command::Verify {
            dim,
            against,
            threads,
            report,
        } => cmd_verify(dim, against, threads, report),
        Command::Inspect { dim, points } => cmd_inspect(dim, &points),
    }
}

fn default_threads(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

fn space_for(dim: u32) -> Space {
    Space::new(dim).expect("clap range keeps dim in 2..=4")
}

fn internal_error(err: Error) -> ExitCode {
    eprintln!("internal invariant violation: {err}");
    ExitCode::from(EXIT_INVARIANT)
}

fn cmd_classify(
    dim: u32,
    format: Format,
    out: Option<PathBuf>,
    threads: Option<usize>,
    no_dedupe_check: bool,
) -> ExitCode {
    let space = space_for(dim);
    let started = Instant::now();
    let table = match parallel::classify_with_threads(&space, default_threads(threads)) {
        Ok(table) => table,
        Err(err) => return internal_error(err),
    };
    let elapsed = started.elapsed();
    if !no_dedupe_check {
        if let Err(err) = search::validate(&table) {
            return internal_error(err);
        }
    }
    let cert = certificate::from_table(&table);
    let rendered = match format {
        Format::Json => certificate::to_json(&cert),
        Format::Csv => certificate::to_csv(&cert),
        Format::Md => certificate::to_markdown(&cert),
    };
    eprintln!(
        "classified {} in {} ms: {} classes, {} duplicate tree records",
        cert.space,
        elapsed.as_millis(),
        cert.classes.len(),
        cert.diagnostics.duplicates_pruned_tree
    );
    match out {
        Some(path) => {
            if let Err(err) = fs::write(&path, rendered) {
                eprintln!("cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
            println!("{}", certificate::to_markdown(&cert));
            println!("certificate written to {}", path.display());
        }
        None => {
            // keep stdout machine-clean; the human-readable counts table
            // goes to stderr unless it is the requested format
            if !matches!(format, Format::Md) {
                eprintln!("{}", certificate::to_markdown(&cert));
            }
            print!("{rendered}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    dim: u32,
    against: Option<PathBuf>,
    threads: Option<usize>,
    report_path: Option<PathBuf>,
) -> ExitCode {
    let space = space_for(dim);
    let baseline = match Baseline::new(space, default_threads(threads)) {
        Ok(b) => b,
        Err(err) => return internal_error(err),
    };
    let report = match against {
        Some(path) => {
            let text = match fs::read_to_string(&path) {
                Ok(text) => text,
                Err(err) => {
                    eprintln!("cannot read {}: {err}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match certificate::parse(&text) {
                Ok(cert) => verify::verify_certificate(&cert, &baseline),
                Err(err) => {
                    println!("FAIL certificate-parse: {err}");
                    return ExitCode::from(EXIT_VERIFY_FAIL);
                }
            }
        }
        None => verify::verify_fresh(&baseline),
    };
    print!("{}", report.render_text());
    if let Some(path) = report_path {
        if let Err(err) = fs::write(&path, report.to_json()) {
            eprintln!("cannot write {}: {err}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    }
}

fn cmd_inspect(dim: u32, points: &str) -> ExitCode {
    let space = space_for(dim);
    let parsed = match parse_points(&space, points) {
        Ok(p) => p,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let set = PointSet::from_points(parsed.iter().copied());
    let described: Vec<String> = set.iter().map(|p| describe_point(&space, p)).collect();
    println!("space: {}", certificate::space_name(&space));
    println!("points: {}", described.join(", "));

    if let Some(line) = space.collinear_triple(&set) {
        println!("cap: no");
        println!(
            "collinear line: {}, {}, {}",
            describe_point(&space, line[0]),
            describe_point(&space, line[1]),
            describe_point(&space, line[2])
        );
        return ExitCode::from(EXIT_VERIFY_FAIL);
    }
    println!("cap: yes");

    let rank = space.rank(&set);
    let spanning = rank == space.dim();
    println!("rank: {rank}{}", if spanning { " (spanning)" } else { "" });
    let candidates = space.candidates(&set).expect("set verified to be a cap");
    println!(
        "complete: {}",
        if candidates.is_empty() { "yes" } else { "no" }
    );
    println!("candidates: {}", candidates.len());
    println!(
        "weight enumerator: {}",
        format_enumerator(&weight_enumerator(&space, &set))
    );

    if !spanning {
        println!("stabilizer order: n/a (equivalence is defined for spanning caps)");
        return ExitCode::SUCCESS;
    }
    let stab = stabilizer_order(&space, &set).expect("spanning checked");
    println!("stabilizer order: {stab}");
    let canonical = canonical_form(&space, &set).expect("spanning checked");
    println!("canonical form: {}", encoding_list(&canonical));

    match parallel::classify_with_threads(&space, default_threads(None)) {
        Ok(table) => {
            let mut ordinal = 0;
            let matched = table.classes.iter().find(|class| {
                if class.size == set.len() {
                    ordinal += 1;
                }
                class.canonical == canonical
            });
            match matched {
                Some(class) => {
                    println!(
                        "class: {}.{} ({})",
                        class.size,
                        ordinal,
                        if class.complete {
                            "complete"
                        } else {
                            "incomplete"
                        }
                    );
                    if space.r() == 4 {
                        let reference = fixture::REFERENCE_PG42.iter().find(|cap| {
                            canonical_form(&space, &cap.point_set(&space))
                                .map(|form| form == canonical)
                                .unwrap_or(false)
                        });
                        if let Some(cap) = reference {
                            println!("reference id: {}", cap.id);
                        }
                    }
                }
                None => println!("class: none (not a spanning cap class?)"),
            }
        }
        Err(err) => return internal_error(err),
    }
    ExitCode::SUCCESS
}
