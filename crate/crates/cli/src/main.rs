//! Command-line front end. Exit codes: 0 success or admissible, 1 rejected
//! or failed verification, 2 invalid input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bettiforge::aci::{check_betti, enumerate, link_betti, AciBetti, EnumerationBounds};
use bettiforge::exact::{PolyMatrix, VarNames};
use bettiforge::gorenstein::{
    check_gorenstein_betti, check_with_theta, hilbert_from_resolution, GorensteinBetti,
};
use bettiforge::multiset::IntMultiset;
use bettiforge::pfaffian::AlternatingMatrix;
use bettiforge::structure::{
    build_aci_complex, random_graded_alternating, verify_complex, AlternatingPresentation,
};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SEED_ENV: &str = "BETTIFORGE_SEED";

#[derive(Parser)]
#[command(
    name = "bettiforge",
    version,
    about = "Betti sequences of codimension-3 almost complete intersections"
)]
struct Cli {
    /// Seed for generic random matrices; BETTIFORGE_SEED overrides it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide admissibility of a {"D","E","F"} JSON sequence.
    Check {
        /// Input file; stdin when omitted or "-".
        input: Option<PathBuf>,
        /// Print every intermediate quantity after the verdict.
        #[arg(long)]
        explain: bool,
    },
    /// Minimal complete intersection type inside a Gorenstein sequence.
    Mci {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        theta: Option<i64>,
    },
    /// Admissibility of a Gorenstein generator multiset.
    GorensteinCheck {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        theta: Option<i64>,
    },
    /// Hilbert function of a Gorenstein sequence or of an explicit resolution.
    Hilbert {
        #[arg(long, value_delimiter = ',', conflicts_with = "resolution")]
        gens: Vec<i64>,
        /// JSON list of twist lists, first syzygy module first.
        #[arg(long)]
        resolution: Option<String>,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
    },
    /// Pfaffian of an even matrix, submaximal pfaffians of an odd one.
    Pfaffian {
        /// JSON matrix file; stdin when omitted or "-".
        input: Option<PathBuf>,
    },
    /// Betti bookkeeping of a link through a complete intersection.
    Link {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        theta: i64,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        ci: Vec<i64>,
        /// Degrees of added pfaffian slots.
        #[arg(long, value_delimiter = ',')]
        extra: Vec<i64>,
    },
    /// Stream every admissible sequence within the bounds as NDJSON.
    Enumerate {
        #[arg(long)]
        max_degree: i64,
        #[arg(long)]
        max_f: usize,
        /// Worker threads; output order does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Build and check the four-term complex of an alternating presentation.
    VerifyStructure {
        /// JSON matrix file; a seeded generic matrix is used when omitted.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// 1-based rows forming the complete intersection.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        g_rows: Vec<usize>,
        /// Degree of the submaximal pfaffian at each row.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        /// Number of variables for the generic matrix.
        #[arg(long, default_value_t = 3)]
        nvars: usize,
    },
}

/// Failure carrying the exit code.
struct Fail(u8, String);

fn invalid(msg: impl ToString) -> Fail {
    Fail(2, msg.to_string())
}

type Outcome = Result<u8, Fail>;

fn read_input(path: Option<&PathBuf>) -> Result<String, Fail> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| invalid(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| invalid(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn emit(v: &Value) {
    println!("{v}");
}

fn gorenstein_input(gens: &[i64], theta: Option<i64>) -> Result<GorensteinBetti, Fail> {
    let m = IntMultiset::from(gens);
    match theta {
        Some(t) => check_with_theta(&m, t),
        None => check_gorenstein_betti(&m),
    }
    .map_err(|r| invalid(format!("not a Gorenstein Betti sequence: {r}")))
}

fn cmd_check(input: Option<&PathBuf>, explain: bool) -> Outcome {
    let text = read_input(input)?;
    let b: AciBetti = serde_json::from_str(&text).map_err(invalid)?;
    let v = check_betti(&b);
    emit(&serde_json::to_value(&v).expect("verdict serializes"));
    if explain {
        print!("{}", v.explain());
    }
    Ok(if v.admissible { 0 } else { 1 })
}

fn cmd_mci(gens: &[i64], theta: Option<i64>) -> Outcome {
    let g = gorenstein_input(gens, theta)?;
    let mci = g.mci();
    let sets = g.bc_sets();
    emit(&json!({
        "mci": mci,
        "case": mci.case,
        "theta": g.theta(),
        "B": sets.b,
        "C": sets.c,
        "Bbar": sets.bbar,
    }));
    Ok(0)
}

fn cmd_gorenstein_check(gens: &[i64], theta: Option<i64>) -> Outcome {
    let m = IntMultiset::from(gens);
    let res = match theta {
        Some(t) => check_with_theta(&m, t),
        None => check_gorenstein_betti(&m),
    };
    match res {
        Ok(g) => {
            emit(&json!({"admissible": true, "beta_G": g, "reason": null}));
            Ok(0)
        }
        Err(r) => {
            emit(&json!({"admissible": false, "beta_G": null, "reason": r.to_string()}));
            Ok(1)
        }
    }
}

fn cmd_hilbert(gens: &[i64], resolution: Option<&str>, nvars: usize) -> Outcome {
    let h = match resolution {
        Some(src) => {
            let modules: Vec<IntMultiset> = serde_json::from_str(src).map_err(invalid)?;
            hilbert_from_resolution(&modules, nvars).map_err(invalid)?
        }
        None if gens.is_empty() => {
            return Err(invalid("either --gens or --resolution is required"))
        }
        None => gorenstein_input(gens, None)?.hilbert(),
    };
    emit(&serde_json::to_value(&h).expect("serializes"));
    Ok(0)
}

fn read_matrix(path: Option<&PathBuf>) -> Result<(PolyMatrix, VarNames), Fail> {
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text).map_err(invalid)?;
    let mut names = VarNames::default();
    let m = PolyMatrix::from_json(&value, &mut names).map_err(invalid)?;
    Ok((m, names))
}

fn cmd_pfaffian(input: Option<&PathBuf>) -> Outcome {
    let (m, names) = read_matrix(input)?;
    let m = AlternatingMatrix::new(m).map_err(invalid)?;
    if m.size() % 2 == 0 {
        let pf = m.pfaffian().map_err(invalid)?;
        println!("{}", pf.display(&names));
    } else {
        let pf = m.submaximal_pfaffians().map_err(invalid)?;
        let out: Vec<String> = pf.iter().map(|p| p.display(&names).to_string()).collect();
        emit(&json!(out));
    }
    Ok(0)
}

fn cmd_link(gens: &[i64], theta: i64, ci: &[i64], extra: &[i64]) -> Outcome {
    let ci: [i64; 3] = ci
        .try_into()
        .map_err(|_| invalid(format!("--ci needs exactly 3 degrees, got {}", ci.len())))?;
    let r = link_betti(
        &IntMultiset::from(gens),
        theta,
        ci,
        &IntMultiset::from(extra),
    )
    .map_err(invalid)?;
    emit(&serde_json::to_value(&r).expect("serializes"));
    Ok(0)
}

fn cmd_enumerate(max_degree: i64, max_f: usize, jobs: Option<usize>) -> Outcome {
    let bounds = EnumerationBounds { max_degree, max_f };
    let found = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(invalid)?
            .install(|| enumerate(bounds)),
        None => enumerate(bounds),
    };
    let mut out = io::LineWriter::new(io::stdout().lock());
    for b in &found {
        let line = serde_json::to_string(b).expect("serializes");
        if writeln!(out, "{line}").is_err() {
            // closed pipe
            return Ok(0);
        }
    }
    let _ = out.flush();
    Ok(0)
}

fn cmd_verify_structure(
    matrix: Option<&PathBuf>,
    g_rows: &[usize],
    degrees: &[i64],
    nvars: usize,
    seed: u64,
) -> Outcome {
    let g: [usize; 3] = g_rows
        .iter()
        .map(|&r| {
            r.checked_sub(1)
                .ok_or_else(|| invalid("--g-rows are 1-based"))
        })
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .map_err(|_| invalid("--g-rows needs exactly 3 rows"))?;
    let m = match matrix {
        Some(path) => {
            let (m, _) = read_matrix(Some(path))?;
            AlternatingMatrix::new(m).map_err(invalid)?
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_graded_alternating(&mut rng, degrees, nvars).map_err(invalid)?
        }
    };
    let pres = AlternatingPresentation::new(m, g, degrees.to_vec()).map_err(invalid)?;
    let cx = build_aci_complex(&pres).map_err(invalid)?;
    let report = verify_complex(&cx);
    let twists: Vec<&Vec<i64>> = cx.modules.iter().map(|m| &m.twists).collect();
    emit(&json!({
        "ok": report.all_ok(),
        "twists": twists,
        "report": report,
    }));
    Ok(if report.all_ok() { 0 } else { 1 })
}

fn effective_seed(flag: u64) -> Result<u64, Fail> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| invalid(format!("{SEED_ENV}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Check { input, explain } => cmd_check(input.as_ref(), *explain),
        Command::Mci { gens, theta } => cmd_mci(gens, *theta),
        Command::GorensteinCheck { gens, theta } => cmd_gorenstein_check(gens, *theta),
        Command::Hilbert {
            gens,
            resolution,
            nvars,
        } => cmd_hilbert(gens, resolution.as_deref(), *nvars),
        Command::Pfaffian { input } => cmd_pfaffian(input.as_ref()),
        Command::Link {
            gens,
            theta,
            ci,
            extra,
        } => cmd_link(gens, *theta, ci, extra),
        Command::Enumerate {
            max_degree,
            max_f,
            jobs,
        } => cmd_enumerate(*max_degree, *max_f, *jobs),
        Command::VerifyStructure {
            matrix,
            g_rows,
            degrees,
            nvars,
        } => {
            let seed = effective_seed(cli.seed)?;
            cmd_verify_structure(matrix.as_ref(), g_rows, degrees, *nvars, seed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("bettiforge: {msg}");
            ExitCode::from(code)
        }
    }
}
