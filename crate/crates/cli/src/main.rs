//! Command-line surface over the exact K-theory computations: scalar
//! queries, table emission, certificate generation and verification,
//! and batch classification.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 for a
//! classified/verified result, 1 for a failed verification, 2 for
//! usage errors, 3 for honest "unknown" outcomes (unclassified pair,
//! certification not found within budget).

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use kosphere::bilinear::{
    certify_nice, emit_regular_map, realize, sample, BilinearMap, NiceDerivation, RegularMapSpec,
    SearchBudget,
};
use kosphere::classify::{classify, consistency_audit};
use kosphere::expr::{format_element, parse_element, parse_ideal, RingElement};
use kosphere::ideal::Subgroup;
use kosphere::spheres::{
    bott_order_table, bott_order_table_check, kgroups_product, phi, phi_table, phi_table_check,
    ScalarField, TableMismatch,
};

use render::{render_records, render_residue_table, Format};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kosphere",
    about = "Exact K-theory invariants of spheres and verified regular maps between products of spheres",
    version
)]
struct Cli {
    /// Output format for data printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Expansion budget for the certification search.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,
    /// Seed for the rational sampling oracle.
    #[arg(long, global = true, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Number of rational samples in map verification.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// For table commands: diff the computed table against the
    /// embedded reference and fail on mismatch.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    R,
    C,
    H,
}

impl From<FieldArg> for ScalarField {
    fn from(f: FieldArg) -> ScalarField {
        match f {
            FieldArg::R => ScalarField::R,
            FieldArg::C => ScalarField::C,
            FieldArg::H => ScalarField::H,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a coefficient-ring expression and print its canonical form.
    Coeff { expr: String },
    /// Degree part of a homogeneous ideal, e.g. `ideal "(2,e2,a)" -- -8`.
    Ideal {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        degree: i64,
    },
    /// The index function phi(n, m) in {1, 2, inf}.
    Phi {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// The 8x8 table of phi over residues mod 8.
    PhiTable,
    /// The 8x8 table of orders of the reduced KO-group of S^{n+m}.
    OrderTable,
    /// Algebraic subgroups of the K-groups of S^n x S^m over R, C or H.
    Kgroups { n: u32, m: u32, field: FieldArg },
    /// Degree verdict for regular maps S^n x S^m -> S^{n+m}.
    Classify { n: u32, m: u32 },
    /// Verdicts for all pairs 1 <= n, m <= N, row-major.
    ClassifyRange { n_max: u32 },
    /// Search for a nice-pair derivation; prints it as JSON.
    Certify { n: u64, m: u64 },
    /// Replay a derivation file ("-" for stdin) into a verified map.
    Realize { derivation_file: PathBuf },
    /// Re-verify a map file ("-" for stdin) by coefficient identities and sampling.
    VerifyMap { map_file: PathBuf },
    /// Cross-check every verdict in the square 1..=N.
    Audit { n_max: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn print_mismatches(name: &str, result: Result<(), Vec<TableMismatch>>) -> u8 {
    match result {
        Ok(()) => {
            eprintln!("check ok: {name} matches the embedded reference on all 64 entries");
            EXIT_OK
        }
        Err(diffs) => {
            for d in diffs {
                eprintln!(
                    "check FAILED: {name} at ({}, {}): computed {}, reference {}",
                    d.n, d.m, d.computed, d.reference
                );
            }
            EXIT_VERIFY_FAILED
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let budget = SearchBudget { max_expansions: cli.budget, coordinate_cap: None };
    let format = cli.format;
    match cli.command {
        Command::Coeff { expr } => {
            let value = parse_element(&expr)?;
            let ring = match &value {
                RingElement::Ko(_) => "KO",
                RingElement::Ku(_) => "KU",
                RingElement::KSp(_) => "KSp",
                RingElement::Kr(_) => "KR",
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "ring": ring, "value": format_element(&value) })
                ),
                _ => println!("{}", format_element(&value)),
            }
            Ok(EXIT_OK)
        }
        Command::Ideal { spec, degree } => {
            let ideal = parse_ideal(&spec)?;
            let part = ideal.part(degree);
            let subgroup = match part.subgroup {
                Subgroup::Full => "full",
                Subgroup::Zero => "zero",
                Subgroup::IndexK(_) => "proper",
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "ideal": ideal.to_string(),
                        "degree": degree,
                        "ambient": part.ambient,
                        "subgroup": subgroup,
                        "index": part.index().to_string(),
                    })
                ),
                _ => println!(
                    "degree {degree}: ambient {}, subgroup {subgroup}, index {}",
                    part.ambient,
                    part.index()
                ),
            }
            Ok(EXIT_OK)
        }
        Command::Phi { n, m } => {
            let v = phi(n, m);
            match format {
                Format::Json => {
                    println!("{}", serde_json::json!({ "n": n, "m": m, "phi": v.as_str() }))
                }
                _ => println!("{v}"),
            }
            Ok(EXIT_OK)
        }
        Command::PhiTable => {
            print!("{}", render_residue_table("phi", &phi_table(), format));
            if cli.check {
                return Ok(print_mismatches("phi table", phi_table_check()));
            }
            Ok(EXIT_OK)
        }
        Command::OrderTable => {
            print!("{}", render_residue_table("order", &bott_order_table(), format));
            if cli.check {
                return Ok(print_mismatches("order table", bott_order_table_check()));
            }
            Ok(EXIT_OK)
        }
        Command::Kgroups { n, m, field } => {
            let report = kgroups_product(n, m, field.into())?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                _ => {
                    println!("K(S^{n} x S^{m}; {}) algebraic image, reduced splitting:", report.field);
                    println!(
                        "  wedge  S^{}: ambient {}, index {}",
                        n + m,
                        report.wedge.ambient,
                        report.wedge.index
                    );
                    println!(
                        "  factor S^{n}: ambient {}, index {}",
                        report.factors[0].ambient, report.factors[0].index
                    );
                    println!(
                        "  factor S^{m}: ambient {}, index {}",
                        report.factors[1].ambient, report.factors[1].index
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { n, m } => {
            let status = classify(n, m, &budget)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&status)?),
                _ => println!("{} ({})", status.verdict, status.evidence),
            }
            Ok(if status.verdict.is_unknown() { EXIT_UNKNOWN } else { EXIT_OK })
        }
        Command::ClassifyRange { n_max } => {
            let mut rows = Vec::new();
            let mut json_rows = Vec::new();
            for n in 1..=n_max {
                for m in 1..=n_max {
                    let status = classify(n, m, &budget)?;
                    rows.push(vec![
                        n.to_string(),
                        m.to_string(),
                        status.verdict.to_string(),
                    ]);
                    json_rows.push(serde_json::to_value(&status)?);
                }
            }
            print!("{}", render_records(&["n", "m", "verdict"], &rows, json_rows, format));
            Ok(EXIT_OK)
        }
        Command::Certify { n, m } => match certify_nice(n, m, &budget) {
            Some(derivation) => {
                println!("{}", serde_json::to_string(&derivation)?);
                Ok(EXIT_OK)
            }
            None => {
                eprintln!(
                    "({n}, {m}) not certified: {}",
                    if kosphere::bilinear::binom_odd(n, m) {
                        "no derivation found within budget"
                    } else {
                        "binom(n+m, n) is even, so no nice pair exists"
                    }
                );
                Ok(EXIT_UNKNOWN)
            }
        },
        Command::Realize { derivation_file } => {
            let text = read_input(&derivation_file)?;
            let derivation: NiceDerivation =
                serde_json::from_str(&text).context("parsing derivation JSON")?;
            let map = match realize(&derivation) {
                Ok(map) => map,
                Err(err) => {
                    eprintln!("realization failed: {err}");
                    return Ok(EXIT_VERIFY_FAILED);
                }
            };
            let (n, m) = derivation.target;
            if n >= 1 && m >= 1 {
                let spec = emit_regular_map(&map, Some(derivation))
                    .map_err(|e| anyhow!("emitting regular map: {e}"))?;
                println!("{}", serde_json::to_string(&spec)?);
            } else {
                println!("{}", serde_json::to_string(&map)?);
            }
            Ok(EXIT_OK)
        }
        Command::VerifyMap { map_file } => {
            let text = read_input(&map_file)?;
            verify_map(&text, cli.samples, cli.seed, format)
        }
        Command::Audit { n_max } => {
            let report = consistency_audit(n_max, &budget);
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                _ => println!(
                    "pairs {}: all-degrees {}, even-only {}, null-homotopic {}, unknown {}, violations {}",
                    report.pairs,
                    report.all_degrees,
                    report.even_only,
                    report.null_homotopic,
                    report.unknown,
                    report.violations.len()
                ),
            }
            for v in &report.violations {
                eprintln!("violation at ({}, {}): {}", v.n, v.m, v.check);
            }
            Ok(if report.ok() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn verify_map(text: &str, samples: usize, seed: u64, format: Format) -> anyhow::Result<u8> {
    // Accept a full regular-map spec or a bare bilinear map.
    let (map, spec): (BilinearMap, Option<RegularMapSpec>) =
        match serde_json::from_str::<RegularMapSpec>(text) {
            Ok(spec) => (spec.map.clone(), Some(spec)),
            Err(_) => (
                serde_json::from_str::<BilinearMap>(text).context("parsing map JSON")?,
                None,
            ),
        };
    map.validate().context("map shape")?;

    if let Some(fail) = map.normed_failure() {
        eprintln!("verification FAILED: {fail}");
        return Ok(EXIT_VERIFY_FAILED);
    }
    if !map.verify_nice() {
        eprintln!("verification FAILED: first coordinate is not x_1*y_1");
        return Ok(EXIT_VERIFY_FAILED);
    }
    if let Some(spec) = &spec {
        if (map.a as u64, map.b as u64) != (spec.n + 1, spec.m + 1)
            || map.c as u64 != spec.n + spec.m + 1
        {
            eprintln!(
                "verification FAILED: shape ({}, {}, {}) does not match the declared pair ({}, {})",
                map.a, map.b, map.c, spec.n, spec.m
            );
            return Ok(EXIT_VERIFY_FAILED);
        }
        if !kosphere::bilinear::binom_odd(spec.n, spec.m) {
            eprintln!("verification FAILED: binom({}, {}) is even", spec.n + spec.m, spec.n);
            return Ok(EXIT_VERIFY_FAILED);
        }
        if let Some(derivation) = &spec.certificate.derivation {
            match derivation.replay() {
                Ok(state) if state == (spec.n, spec.m) => {}
                Ok(state) => {
                    eprintln!(
                        "verification FAILED: derivation replays to {state:?}, spec says ({}, {})",
                        spec.n, spec.m
                    );
                    return Ok(EXIT_VERIFY_FAILED);
                }
                Err(err) => {
                    eprintln!("verification FAILED: derivation does not replay: {err}");
                    return Ok(EXIT_VERIFY_FAILED);
                }
            }
        }
    }
    if let Some(bad) = sample::sample_failure(&map, samples, seed) {
        eprintln!("verification FAILED: sphere identity violated at sample {bad}");
        return Ok(EXIT_VERIFY_FAILED);
    }

    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "verified": true,
                "a": map.a,
                "b": map.b,
                "c": map.c,
                "normed": true,
                "nice": true,
                "samples": samples,
            })
        ),
        _ => println!(
            "ok: normed, nice, {samples} samples pass (shape {} x {} -> {})",
            map.a, map.b, map.c
        ),
    }
    Ok(EXIT_OK)
}
