use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use biposet::constructions::{divisibility_biposet, dual_biposet, intersect_many, powerset_biposet};
use biposet::extremal::{extremal_report, Extreme};
use biposet::galois::{find_adjoint, is_galois, AdjointSide, GaloisMode};
use biposet::io::{
    emit_dot, parse_mapping, parse_pair, parse_structure, serialize_mapping, serialize_pair, serialize_structure,
    DotComponent,
};
use biposet::morphisms::{find_isomorphism, self_dual_witness};
use biposet::oracle::{enumerate_biposets, verify_claim, ClaimId, ClaimVerdict, DEFAULT_SEED};
use biposet::{check_axioms, check_classical_por, BiPoset, Error, Result};

#[derive(Parser)]
#[command(name = "biposet", version, about = "Build, check and explore finite binary posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    #[value(name = "1")]
    First,
    #[value(name = "2")]
    Second,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Hetero,
    Monotone,
    Antitone,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms; exit 1 with the failing structure if they fail.
    Check { file: PathBuf },
    /// Check whether each component is a classical partial order.
    ClassicalCheck {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        component: ComponentArg,
    },
    /// Write the dual structure.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Intersect structures on the same elements.
    Intersect {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the powerset structure on k points.
    Powerset {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write (≤, |) on 1..=k.
    Divisibility {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report greatest, least and derived extremal elements.
    Extremal {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism between two structures.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism onto the dual.
    Selfdual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Galois connection checks.
    Galois {
        #[command(subcommand)]
        action: GaloisCommand,
    },
    /// Write every valid structure on n elements as .bpo files.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a registered claim up to n elements.
    Hunt {
        claim: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a Graphviz digraph.
    Dot {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        component: ComponentArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GaloisCommand {
    /// Check a pair file (f: and g: sections) between P and Q.
    Check {
        p: PathBuf,
        q: PathBuf,
        pair: PathBuf,
        #[arg(long, value_enum, default_value = "hetero")]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the adjoints of a map.
    Adjoint {
        p: PathBuf,
        q: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Holds,
    Fails,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<BiPoset> {
    parse_structure(&read(path)?).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn holds(ok: bool) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn extreme_text(bp: &BiPoset, e: &Extreme) -> String {
    match e {
        Extreme::Absent => "none".into(),
        Extreme::Unique(x) => bp.ground().label(*x).to_string(),
        Extreme::Multiple(xs) => {
            let names: Vec<&str> = xs.iter().map(|&x| bp.ground().label(x)).collect();
            format!("several: {}", names.join(" "))
        }
    }
}

fn opt_text(bp: &BiPoset, x: Option<usize>) -> String {
    x.map_or_else(|| "none".into(), |i| bp.ground().label(i).to_string())
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { file } => {
            let bp = load(&file)?;
            let v = check_axioms(bp.diamond());
            if v.passes() {
                println!("# valid");
                Ok(Outcome::Holds)
            } else {
                println!("# invalid: {}", v.describe(bp.ground()));
                print!("{}", serialize_structure(&bp));
                Ok(Outcome::Fails)
            }
        }
        Command::ClassicalCheck { file, component } => {
            let bp = load(&file)?;
            let d = bp.diamond();
            let parts = match component {
                ComponentArg::First => vec![("r1", d.r1())],
                ComponentArg::Second => vec![("r2", d.r2())],
                ComponentArg::Both => vec![("r1", d.r1()), ("r2", d.r2())],
            };
            let mut all = true;
            for (name, r) in parts {
                let v = check_classical_por(r);
                all &= v.passes();
                println!("# {name}: {}", v.describe(bp.ground()));
            }
            if !all {
                print!("{}", serialize_structure(&bp));
            }
            Ok(holds(all))
        }
        Command::Dual { file, out } => {
            emit(out.as_deref(), &serialize_structure(&dual_biposet(&load(&file)?)))?;
            Ok(Outcome::Holds)
        }
        Command::Intersect { files, out } => {
            let bps = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let ground = bps[0].ground().clone();
            if let Some(other) = bps.iter().find(|b| b.ground() != &ground) {
                return Err(Error::InvalidGroundSet(format!(
                    "element lists differ: [{}] and [{}]",
                    ground.labels().join(" "),
                    other.ground().labels().join(" ")
                )));
            }
            let ds: Vec<_> = bps.iter().map(|b| b.diamond().clone()).collect();
            let meet = BiPoset::new(ground, intersect_many(&ds)?)?;
            emit(out.as_deref(), &serialize_structure(&meet))?;
            Ok(Outcome::Holds)
        }
        Command::Powerset { k, out } => {
            emit(out.as_deref(), &serialize_structure(&powerset_biposet(k)?))?;
            Ok(Outcome::Holds)
        }
        Command::Divisibility { k, out } => {
            emit(out.as_deref(), &serialize_structure(&divisibility_biposet(k)?))?;
            Ok(Outcome::Holds)
        }
        Command::Extremal { file, out } => {
            let mut bp = load(&file)?;
            let v = bp.validate().clone();
            if !v.passes() {
                println!("# invalid: {}", v.describe(bp.ground()));
                print!("{}", serialize_structure(&bp));
                return Ok(Outcome::Fails);
            }
            let r = extremal_report(&bp)?;
            let mut text = String::new();
            for (name, e) in [("greatest_1", &r.x), ("greatest_2", &r.y), ("least_1", &r.u), ("least_2", &r.v)] {
                text.push_str(&format!("{name}: {}\n", extreme_text(&bp, e)));
            }
            for (name, x) in [
                ("maximal_greatest", r.g_max),
                ("minimal_greatest", r.g_min),
                ("maximal_least", r.l_max),
                ("minimal_least", r.l_min),
            ] {
                text.push_str(&format!("{name}: {}\n", opt_text(&bp, x)));
            }
            text.push_str(&format!("bounded: {}\n", if r.bounded { "yes" } else { "no" }));
            for n in &r.notes {
                text.push_str(&format!("# {n}\n"));
            }
            emit(out.as_deref(), &text)?;
            Ok(Outcome::Holds)
        }
        Command::Iso { a, b, out } => {
            let (pa, pb) = (load(&a)?, load(&b)?);
            match find_isomorphism(&pa, &pb) {
                Some(f) => {
                    emit(out.as_deref(), &serialize_mapping(&f, pa.ground(), pb.ground()))?;
                    Ok(Outcome::Holds)
                }
                None => {
                    println!("# no isomorphism exists");
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::Selfdual { file, out } => {
            let bp = load(&file)?;
            match self_dual_witness(&bp) {
                Some(f) => {
                    emit(out.as_deref(), &serialize_mapping(&f, bp.ground(), bp.ground()))?;
                    Ok(Outcome::Holds)
                }
                None => {
                    println!("# no isomorphism onto the dual exists; dual:");
                    print!("{}", serialize_structure(&dual_biposet(&bp)));
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::Galois { action } => run_galois(action),
        Command::Enumerate { n, out } => {
            let structures: Vec<_> = enumerate_biposets(n)?.collect();
            fs::create_dir_all(&out).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            let width = structures.len().to_string().len();
            for (i, d) in structures.into_iter().enumerate() {
                let bp = BiPoset::with_standard_labels(d)?;
                let path = out.join(format!("n{n}_{i:0width$}.bpo"));
                emit(Some(&path), &serialize_structure(&bp))?;
            }
            Ok(Outcome::Holds)
        }
        Command::Hunt { claim, n, budget, seed, out } => {
            let claim: ClaimId = claim.parse()?;
            let finding = verify_claim(claim, n, budget, seed)?;
            emit(out.as_deref(), &finding.to_string())?;
            Ok(holds(finding.verdict == ClaimVerdict::Verified))
        }
        Command::Dot { file, component, out } => {
            let which = match component {
                ComponentArg::First => DotComponent::First,
                ComponentArg::Second => DotComponent::Second,
                ComponentArg::Both => DotComponent::Both,
            };
            emit(out.as_deref(), &emit_dot(&load(&file)?, which))?;
            Ok(Outcome::Holds)
        }
    }
}

fn run_galois(action: GaloisCommand) -> Result<Outcome> {
    match action {
        GaloisCommand::Check { p, q, pair, mode, out } => {
            let (bp, bq) = (load(&p)?, load(&q)?);
            let pr = parse_pair(&read(&pair)?, bp.ground(), bq.ground())?;
            let mode = match mode {
                ModeArg::Hetero => GaloisMode::Hetero,
                ModeArg::Monotone => GaloisMode::Monotone,
                ModeArg::Antitone => GaloisMode::Antitone,
            };
            match is_galois(&pr, &bp, &bq, mode)?.witness() {
                None => {
                    emit(out.as_deref(), "# Galois connection holds\n")?;
                    Ok(Outcome::Holds)
                }
                Some(&(a, b)) => {
                    println!("# biconditional fails at a = {}, b = {}", bp.ground().label(a), bq.ground().label(b));
                    print!("{}", serialize_pair(&pr, bp.ground(), bq.ground()));
                    Ok(Outcome::Fails)
                }
            }
        }
        GaloisCommand::Adjoint { p, q, map, side, out } => {
            let (bp, bq) = (load(&p)?, load(&q)?);
            let (side, src, dst) = match side {
                SideArg::Right => (AdjointSide::Right, &bp, &bq),
                SideArg::Left => (AdjointSide::Left, &bq, &bp),
            };
            let f = parse_mapping(&read(&map)?, src.ground(), dst.ground())?;
            let found = find_adjoint(&f, &bp, &bq, side)?;
            let mut text = format!("# {} adjoint(s)\n", found.len());
            for (i, g) in found.iter().enumerate() {
                text.push_str(&format!("# adjoint {}\n", i + 1));
                text.push_str(&serialize_mapping(g, dst.ground(), src.ground()));
            }
            emit(out.as_deref(), &text)?;
            Ok(holds(found.len() == 1))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
