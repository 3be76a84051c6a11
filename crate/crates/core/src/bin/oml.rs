use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use oml_core::correspondence::induced_candidate;
use oml_core::{
    derived_negation, enumerate_bounded_lattices, enumerate_ortho_structures, export_dot, find_counterexample,
    induced_oml, parse_structure, round_trip_check, sasaki_groupoid, sasaki_tables, serialize_structure,
    verify_lattice, verify_lrg, verify_oml, Axiom, AxiomProfile, EnumerationConfig, Error, Structure,
    VerificationReport,
};

/// Check, build and enumerate finite orthomodular lattices and Sasaki groupoids.
#[derive(Parser)]
#[command(name = "oml", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Profile::Core)]
        profile: Profile,
        /// Write the report here instead of standard error.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build A(L) from an ortho file or L(A) from a groupoid file.
    Build {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Skip the hypothesis check and apply the construction anyway.
        #[arg(long)]
        force: bool,
    },
    /// Run both round trips and compare tables cell by cell.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write one file per isomorphism class into a directory.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        /// Orthomodular lattices instead of plain lattices.
        #[arg(long)]
        omod: bool,
        /// All ortholattices instead of plain lattices.
        #[arg(long, conflicts_with = "omod")]
        ortho: bool,
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
    },
    /// Print the first witness against an axiom, or NONE.
    Witness {
        file: PathBuf,
        #[arg(long)]
        axiom: String,
    },
    /// Hasse diagram in Graphviz DOT.
    Dot { file: PathBuf },
}

#[derive(Copy, Clone, ValueEnum)]
enum Profile {
    Core,
    Thm1,
    Thm2,
    Thm3,
}

#[derive(Copy, Clone, ValueEnum)]
enum Direction {
    #[value(name = "a-of-l")]
    AOfL,
    #[value(name = "l-of-a")]
    LOfA,
}

enum Failure {
    Axiom(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<Structure, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_structure(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_report(report: &VerificationReport, to: Option<&Path>) -> Result<bool, Failure> {
    let text = format!("{report}\n");
    match to {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => eprint!("{text}"),
    }
    println!("{}", if report.overall() { "PASS" } else { "FAIL" });
    Ok(report.overall())
}

fn check(s: &Structure, profile: Profile) -> VerificationReport {
    match (s, profile) {
        (Structure::Lattice(l), _) => verify_lattice(l),
        (Structure::Ortho(c), profile) => {
            let mut report = verify_oml(c);
            match profile {
                Profile::Thm1 => report.merge(verify_lrg(&sasaki_tables(c), AxiomProfile::SASAKI_IMAGE)),
                Profile::Thm3 => report.merge(round_trip_check(s).expect("ortho round trip")),
                Profile::Core | Profile::Thm2 => {}
            }
            report
        }
        (Structure::Groupoid(g), profile) => match profile {
            Profile::Core => verify_lrg(g, AxiomProfile::CORE),
            Profile::Thm1 => verify_lrg(g, AxiomProfile::SASAKI_IMAGE),
            Profile::Thm2 => {
                let mut report = verify_lrg(g, AxiomProfile::INDUCES_OML);
                let mut conclusion = verify_oml(&induced_candidate(g));
                conclusion.conditional |= !report.overall();
                report.merge(conclusion);
                report
            }
            Profile::Thm3 => {
                let mut report = verify_lrg(g, AxiomProfile::ROUND_TRIP);
                report.merge(round_trip_check(s).expect("groupoid round trip"));
                report
            }
        },
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Check { file, profile, report } => {
            let s = read(&file)?;
            emit_report(&check(&s, profile), report.as_deref())
        }
        Command::Build { direction, file, force } => {
            let s = read(&file)?;
            let built: Structure = match (direction, s) {
                (Direction::AOfL, Structure::Ortho(c)) if force => sasaki_tables(&c).into(),
                (Direction::AOfL, Structure::Ortho(c)) => match sasaki_groupoid(&c) {
                    Ok(g) => g.into(),
                    Err(e) => return Err(Failure::Axiom(e.to_string())),
                },
                (Direction::LOfA, Structure::Groupoid(g)) if force => induced_candidate(&g).into(),
                (Direction::LOfA, Structure::Groupoid(g)) => match induced_oml(&g, AxiomProfile::INDUCES_OML) {
                    Ok(c) => c.into(),
                    Err(e) => return Err(Failure::Axiom(e.to_string())),
                },
                (Direction::AOfL, other) => {
                    return Err(Failure::Input(format!("a-of-l needs an ortho file, got {}", other.kind())))
                }
                (Direction::LOfA, other) => {
                    return Err(Failure::Input(format!("l-of-a needs a groupoid file, got {}", other.kind())))
                }
            };
            print!("{}", serialize_structure(&built));
            Ok(true)
        }
        Command::Roundtrip { file, report } => {
            let s = read(&file)?;
            let r = round_trip_check(&s)?;
            emit_report(&r, report.as_deref())
        }
        Command::Enumerate { max_size, omod, ortho, out } => {
            let cfg = EnumerationConfig::new(max_size).orthomodular(omod);
            let structures: Vec<Structure> = if omod || ortho {
                enumerate_ortho_structures(&cfg)?.into_iter().map(Structure::from).collect()
            } else {
                enumerate_bounded_lattices(&cfg)?.into_iter().map(Structure::from).collect()
            };
            fs::create_dir_all(&out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            let prefix = if omod { "oml" } else { structures.first().map_or("lattice", Structure::kind) };
            let mut index = 0;
            let mut last_size = 0;
            for s in &structures {
                let n = s.lattice().len();
                index = if n == last_size { index + 1 } else { 1 };
                last_size = n;
                let path = out.join(format!("{prefix}-n{n}-{index:03}.{}", s.kind()));
                fs::write(&path, serialize_structure(s))
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                println!("{}", path.display());
            }
            eprintln!("{} structures written to {}", structures.len(), out.display());
            Ok(true)
        }
        Command::Witness { file, axiom } => {
            let s = read(&file)?;
            let axiom: Axiom = axiom.parse()?;
            match find_counterexample(&s, axiom)? {
                Some(w) => {
                    println!("{w}");
                    Ok(false)
                }
                None => {
                    println!("NONE");
                    Ok(true)
                }
            }
        }
        Command::Dot { file } => {
            let s = read(&file)?;
            let dot = match &s {
                Structure::Lattice(l) => export_dot(l, None),
                Structure::Ortho(c) => export_dot(c.lattice(), Some(c.comp())),
                Structure::Groupoid(g) => export_dot(g.lattice(), Some(&derived_negation(g))),
            };
            print!("{dot}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Axiom(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
