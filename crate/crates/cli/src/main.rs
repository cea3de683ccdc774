//! Command-line frontend for finite gyrogroup computation.
//!
//! Exit codes: 0 = success / property holds; 1 = property fails or the
//! input table fails validation; 2 = usage or I/O error (unknown flags,
//! unreadable files, malformed tables), reported on standard error.
//! With `--json`, exactly one JSON document is emitted on standard output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gyroalg::gyrogroup::{AxiomViolation, Gyrogroup};
use gyroalg::moebius;
use gyroalg::morphism::{find_isomorphism, is_normal};
use gyroalg::properties::{self, AnalysisError, StructuralLaw, ALL_STRUCTURAL_LAWS};
use gyroalg::search::{self, SearchOptions};
use gyroalg::subgyro::{SubSet, LATTICE_BOUND};
use gyroalg::table::{validate_loop, CayleyTable, LoopViolation};

#[derive(Parser)]
#[command(
    name = "gyroalg",
    version,
    about = "Finite gyrogroup computations on explicit Cayley tables"
)]
struct Cli {
    /// Emit one JSON document on stdout instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a table file as a loop and as a gyrogroup
    Verify { file: PathBuf },
    /// Enumerate all gyrogroups of an order up to isomorphism
    Search {
        #[arg(long)]
        order: usize,
        /// Directory to write one .gyt file per class plus manifest.json
        #[arg(long)]
        out: Option<PathBuf>,
        /// Backtrack node budget; exhaustion is reported, never silent
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: u64,
        /// Parallel branch workers; the result is identical for any value
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest order accepted
        #[arg(long, default_value_t = search::ORDER_BOUND)]
        max_order: usize,
    },
    /// Full structural analysis of a gyrogroup table
    Analyze {
        file: PathBuf,
        /// Largest order the subgyrogroup lattice is computed for
        #[arg(long, default_value_t = LATTICE_BOUND)]
        lattice_bound: usize,
    },
    /// Check a single property of a gyrogroup table
    Check {
        #[arg(value_enum)]
        property: Property,
        file: PathBuf,
        /// Largest order the subgyrogroup lattice is computed for
        #[arg(long, default_value_t = LATTICE_BOUND)]
        lattice_bound: usize,
    },
    /// Quotient a gyrogroup by a normal subgyrogroup
    Quotient {
        file: PathBuf,
        /// Comma-separated member indices, e.g. "0,2"
        #[arg(long)]
        normal: String,
    },
    /// Decide whether two gyrogroup tables are isomorphic
    Iso { file_a: PathBuf, file_b: PathBuf },
    /// Sampled numerical verification of the unit-disk model
    Moebius {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Lagrange,
    Wcp,
    Scp,
    Gyrocommutative,
    Structure,
}

/// Usage or I/O failure; always exits 2 with the message on stderr.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

const PASS: ExitCode = ExitCode::SUCCESS;
const FAIL: ExitCode = ExitCode::FAILURE;

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Verify { file } => verify(&file, json),
        Cmd::Search {
            order,
            out,
            budget,
            jobs,
            max_order,
        } => run_search(order, out.as_deref(), budget, jobs, max_order, json),
        Cmd::Analyze {
            file,
            lattice_bound,
        } => analyze(&file, lattice_bound, json),
        Cmd::Check {
            property,
            file,
            lattice_bound,
        } => check(property, &file, lattice_bound, json),
        Cmd::Quotient { file, normal } => quotient_cmd(&file, &normal, json),
        Cmd::Iso { file_a, file_b } => iso(&file_a, &file_b, json),
        Cmd::Moebius { samples, seed, tol } => {
            if samples == 0 {
                return Err("--samples must be at least 1".into());
            }
            if !tol.is_finite() || tol <= 0.0 {
                return Err("--tol must be positive".into());
            }
            let report = moebius::check_axioms(samples, seed, tol);
            if json {
                emit(&report)?;
            } else {
                println!(
                    "samples: {}  seed: {}  tolerance: {:e}  radius: {}",
                    report.samples, report.seed, report.tolerance, report.radius
                );
                println!("max residual: {:e}", report.max_residuals.max());
                println!("pass: {}", yn(report.pass));
            }
            Ok(if report.pass { PASS } else { FAIL })
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), UsageError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_table(path: &Path) -> Result<CayleyTable, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    CayleyTable::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct InvalidReport {
    valid: bool,
    stage: &'static str,
    loop_violations: Vec<LoopViolation>,
    axiom_violations: Vec<AxiomViolation>,
}

/// Loads and fully validates a table; on failure reports (human or JSON)
/// and yields the exit-1 code.
fn load_gyrogroup(path: &Path, json: bool) -> Result<Result<Gyrogroup, ExitCode>, UsageError> {
    let table = load_table(path)?;
    let loop_check = validate_loop(&table);
    if !loop_check.is_valid() {
        let report = InvalidReport {
            valid: false,
            stage: "loop",
            loop_violations: loop_check.violations.clone(),
            axiom_violations: vec![],
        };
        if json {
            emit(&report)?;
        } else {
            println!("not a loop table:");
            for v in &loop_check.violations {
                println!("  {v:?}");
            }
        }
        return Ok(Err(FAIL));
    }
    match Gyrogroup::validate(table) {
        Ok(g) => Ok(Ok(g)),
        Err(violations) => {
            let report = InvalidReport {
                valid: false,
                stage: "axioms",
                loop_violations: vec![],
                axiom_violations: violations.clone(),
            };
            if json {
                emit(&report)?;
            } else {
                println!("loop table but not a gyrogroup:");
                for v in &violations {
                    println!("  {:?} witnesses {:?}", v.axiom, v.witnesses);
                }
            }
            Ok(Err(FAIL))
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    order: usize,
    is_loop: bool,
    is_gyrogroup: bool,
    is_group: bool,
    is_gyrocommutative: bool,
}

fn verify(file: &Path, json: bool) -> Result<ExitCode, UsageError> {
    let g = match load_gyrogroup(file, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let report = VerifyReport {
        order: g.order(),
        is_loop: true,
        is_gyrogroup: true,
        is_group: g.is_group(),
        is_gyrocommutative: properties::is_gyrocommutative(&g),
    };
    if json {
        emit(&report)?;
    } else {
        println!("order: {}", report.order);
        println!("loop: yes");
        println!("gyrogroup: yes");
        println!("group: {}", yn(report.is_group));
        println!("gyrocommutative: {}", yn(report.is_gyrocommutative));
    }
    Ok(PASS)
}

fn run_search(
    order: usize,
    out: Option<&Path>,
    budget: u64,
    jobs: Option<usize>,
    max_order: usize,
    json: bool,
) -> Result<ExitCode, UsageError> {
    let opts = SearchOptions {
        budget,
        jobs,
        order_bound: max_order,
    };
    let result = search::enumerate_gyrogroups_with(order, &opts)?;
    let manifest = search::manifest(&result);
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| UsageError(format!("{}: {e}", dir.display())))?;
        for (class, table) in manifest.classes.iter().zip(&result.classes) {
            fs::write(dir.join(&class.file), table.serialize())
                .map_err(|e| UsageError(format!("{}: {e}", class.file)))?;
        }
        let manifest_json = serde_json::to_string_pretty(&manifest)?;
        fs::write(dir.join("manifest.json"), manifest_json + "\n")
            .map_err(|e| UsageError(format!("manifest.json: {e}")))?;
    }
    if json {
        emit(&manifest)?;
    } else {
        println!(
            "order {}: {} classes ({} nodes, complete: {})",
            manifest.order,
            manifest.class_count,
            manifest.nodes,
            yn(manifest.complete)
        );
        for c in &manifest.classes {
            println!(
                "  {}  group: {}  gyrocommutative: {}",
                c.file,
                yn(c.is_group),
                yn(c.is_gyrocommutative)
            );
        }
        if let Some(dir) = out {
            println!("written to {}", dir.display());
        }
    }
    Ok(if result.complete { PASS } else { FAIL })
}

fn analyze(file: &Path, lattice_bound: usize, json: bool) -> Result<ExitCode, UsageError> {
    let g = match load_gyrogroup(file, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    match properties::analyze_bounded(&g, lattice_bound) {
        Ok(report) => {
            if json {
                emit(&report)?;
            } else {
                println!("order: {}", report.order);
                println!("element orders: {:?}", report.element_orders);
                println!("subgyrogroups ({}):", report.subgyrogroups.len());
                for s in &report.subgyrogroups {
                    println!(
                        "  {:?} size {}  subgroup: {}  normal: {}",
                        s.members,
                        s.size,
                        yn(s.is_subgroup),
                        yn(s.is_normal)
                    );
                }
                let f = &report.flags;
                println!(
                    "flags: group={} gyrocommutative={} lagrange={} wcp={} scp={}",
                    yn(f.is_group),
                    yn(f.is_gyrocommutative),
                    yn(f.lagrange_ok),
                    yn(f.wcp),
                    yn(f.scp)
                );
                if let Some(w) = &report.normal_subgroup_witness {
                    println!(
                        "normal subgroup with gyrocommutative quotient: {:?} (quotient order {})",
                        w.members, w.quotient_order
                    );
                }
                if !report.classification_notes.is_empty() {
                    println!("notes:");
                    for note in &report.classification_notes {
                        println!("  - {note}");
                    }
                }
            }
            Ok(PASS)
        }
        // An order beyond the lattice bound is a usage problem; a
        // contradicted conclusion is a mathematical failure and exits 1.
        Err(AnalysisError::BoundExceeded(e)) => Err(e.into()),
        Err(e @ AnalysisError::TheoremContradicted { .. }) => {
            eprintln!("{e}");
            Ok(FAIL)
        }
    }
}

#[derive(Serialize)]
struct BoolReport {
    property: &'static str,
    order: usize,
    holds: bool,
}

#[derive(Serialize)]
struct StructureReport {
    order: usize,
    verified: Vec<StructuralLaw>,
    all_hold: bool,
}

fn check(
    property: Property,
    file: &Path,
    lattice_bound: usize,
    json: bool,
) -> Result<ExitCode, UsageError> {
    let g = match load_gyrogroup(file, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let (holds, name): (bool, &'static str) = match property {
        Property::Lagrange => {
            let report = properties::check_lagrange_bounded(&g, lattice_bound)?;
            if json {
                emit(&report)?;
            } else {
                println!("lagrange: {}", if report.holds { "holds" } else { "FAILS" });
                for e in &report.evidence {
                    println!(
                        "  {:?} size {} {} {}",
                        e.members,
                        e.size,
                        if e.divides { "divides" } else { "DOES NOT divide" },
                        report.order
                    );
                }
            }
            return Ok(if report.holds { PASS } else { FAIL });
        }
        Property::Wcp => (properties::has_wcp(&g), "wcp"),
        Property::Scp => (properties::has_scp_bounded(&g, lattice_bound)?, "scp"),
        Property::Gyrocommutative => (properties::is_gyrocommutative(&g), "gyrocommutative"),
        Property::Structure => {
            let verified = properties::check_structure(&g);
            let all = verified.len() == ALL_STRUCTURAL_LAWS.len();
            if json {
                emit(&StructureReport {
                    order: g.order(),
                    verified,
                    all_hold: all,
                })?;
            } else {
                println!("structure: {}", if all { "all laws hold" } else { "LAWS MISSING" });
                for law in &verified {
                    println!("  verified: {law:?}");
                }
            }
            return Ok(if all { PASS } else { FAIL });
        }
    };
    if json {
        emit(&BoolReport {
            property: name,
            order: g.order(),
            holds,
        })?;
    } else {
        println!("{name}: {}", yn(holds));
    }
    Ok(if holds { PASS } else { FAIL })
}

#[derive(Serialize)]
struct QuotientReport {
    normal: Vec<usize>,
    is_subgyrogroup: bool,
    is_normal: bool,
    cosets: Vec<Vec<usize>>,
    quotient_rows: Vec<Vec<usize>>,
    projection: Vec<usize>,
}

fn quotient_cmd(file: &Path, normal: &str, json: bool) -> Result<ExitCode, UsageError> {
    let g = match load_gyrogroup(file, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let members: Vec<usize> = normal
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| UsageError(format!("--normal: {e}")))?;
    if members.is_empty() || members.iter().any(|&m| m >= g.order()) {
        return Err("--normal: member indices must be nonempty and in range".into());
    }
    if !gyroalg::subgyro::is_subgyrogroup(&g, &members) {
        let report = QuotientReport {
            normal: members,
            is_subgyrogroup: false,
            is_normal: false,
            cosets: vec![],
            quotient_rows: vec![],
            projection: vec![],
        };
        if json {
            emit(&report)?;
        } else {
            println!("not a subgyrogroup: {:?}", report.normal);
        }
        return Ok(FAIL);
    }
    let subset = SubSet::from_members(&g, members.iter().copied());
    match is_normal(&g, &subset) {
        Some(q) => {
            let k = q.quotient.order();
            let rows: Vec<Vec<usize>> = (0..k)
                .map(|i| (0..k).map(|j| q.quotient.add(i, j)).collect())
                .collect();
            let report = QuotientReport {
                normal: subset.members().to_vec(),
                is_subgyrogroup: true,
                is_normal: true,
                cosets: q.cosets.clone(),
                quotient_rows: rows,
                projection: q.projection_map.clone(),
            };
            if json {
                emit(&report)?;
            } else {
                println!("normal: yes");
                println!("cosets: {:?}", report.cosets);
                println!("quotient table:");
                print!("{}", q.quotient.table().serialize());
                println!("projection: {:?}", report.projection);
            }
            Ok(PASS)
        }
        None => {
            let report = QuotientReport {
                normal: subset.members().to_vec(),
                is_subgyrogroup: true,
                is_normal: false,
                cosets: vec![],
                quotient_rows: vec![],
                projection: vec![],
            };
            if json {
                emit(&report)?;
            } else {
                println!("not normal: {:?}", report.normal);
            }
            Ok(FAIL)
        }
    }
}

#[derive(Serialize)]
struct IsoReport {
    isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    map: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn iso(file_a: &Path, file_b: &Path, json: bool) -> Result<ExitCode, UsageError> {
    let a = match load_gyrogroup(file_a, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let b = match load_gyrogroup(file_b, json)? {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    match find_isomorphism(&a, &b) {
        Some(m) => {
            let report = IsoReport {
                isomorphic: true,
                map: Some(m.map.clone()),
                reason: None,
            };
            if json {
                emit(&report)?;
            } else {
                println!("isomorphic: yes");
                println!("map: {:?}", m.map);
            }
            Ok(PASS)
        }
        None => {
            let reason = if a.order() != b.order() {
                "orders differ".to_string()
            } else {
                let profile = |g: &Gyrogroup| {
                    let mut v: Vec<usize> = (0..g.order()).map(|x| g.order_of(x)).collect();
                    v.sort_unstable();
                    v
                };
                if profile(&a) != profile(&b) {
                    "order profiles differ".to_string()
                } else {
                    "exhaustive search found no isomorphism".to_string()
                }
            };
            let report = IsoReport {
                isomorphic: false,
                map: None,
                reason: Some(reason.clone()),
            };
            if json {
                emit(&report)?;
            } else {
                println!("not isomorphic: {reason}");
            }
            Ok(FAIL)
        }
    }
}
