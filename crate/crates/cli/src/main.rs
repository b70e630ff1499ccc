use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand};

use facecover::dichotomy::{min_face_cover, plane_dichotomy, CoverMode};
use facecover::embed::format::{parse_emb, parse_hint, write_emb, write_hint, Hint};
use facecover::embed::{check_polyhedral, face_width};
use facecover::generators::{by_name, FAMILIES};
use facecover::model::{parse_certificate, Certificate};
use facecover::oracles::{brute_force_rooted_k2t, OracleResult};
use facecover::schnyder::{compute_schnyder_wood, draw_svg, frame_on_face};
use facecover::surface::genus_face_cover;
use facecover::{Embedding, Error};

const EXIT_MODEL: u8 = 10;

#[derive(Parser)]
#[command(name = "facecover", version, about = "Face covers and rooted K2,t minors of embedded graphs")]
struct Cli {
    /// Worker threads for internal searches; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named family instance as .emb.
    Gen {
        family: String,
        args: Vec<u64>,
        /// Output file; a `.hint` sidecar is written next to it when the family has one.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print size, genus, face-width, connectivity and polyhedrality.
    Info { input: Option<PathBuf> },
    /// Set cover of the roots by faces.
    Cover {
        input: Option<PathBuf>,
        #[arg(long, default_value = "exact")]
        mode: CoverMode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Face cover or rooted K2,t model. Exits 0 on a cover, 10 on a model.
    Dichotomy {
        input: Option<PathBuf>,
        #[arg(short)]
        t: usize,
        /// Hint for projective-plane inputs; defaults to the `.hint` sidecar.
        #[arg(long)]
        hint: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the pipeline report on stderr.
        #[arg(long)]
        report: bool,
    },
    /// Exhaustive rooted K2,t search. Prints a model, `none` or `timeout`.
    Oracle {
        input: Option<PathBuf>,
        #[arg(short)]
        t: usize,
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate. Exits 0 when valid, 1 otherwise.
    Verify { input: PathBuf, certificate: PathBuf },
    /// Schnyder drawing as SVG (planar 3-connected input).
    Draw {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn load(path: Option<&Path>) -> anyhow::Result<Embedding> {
    Ok(parse_emb(&read_input(path)?)?)
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn hint_for(input: Option<&Path>, explicit: Option<&Path>) -> anyhow::Result<Option<Hint>> {
    let path = match (explicit, input) {
        (Some(h), _) => h.to_path_buf(),
        (None, Some(p)) if p != Path::new("-") => {
            let side = p.with_extension("hint");
            if !side.exists() {
                return Ok(None);
            }
            side
        }
        _ => return Ok(None),
    };
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Some(parse_hint(&text)?))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    if cli.jobs == 0 {
        return Err(Error::Malformed("--jobs must be at least 1".into()).into());
    }
    match cli.cmd {
        Cmd::Gen { family, args, output } => {
            if !FAMILIES.contains(&family.as_str()) {
                return Err(Error::Malformed(format!("unknown family {family:?}; known: {}", FAMILIES.join(", "))).into());
            }
            let (emb, hint) = by_name(&family, &args)?;
            emit(output.as_deref(), &write_emb(&emb))?;
            if let (Some(h), Some(p)) = (hint, output.as_deref()) {
                fs::write(p.with_extension("hint"), write_hint(&h))?;
            }
            Ok(0)
        }
        Cmd::Info { input } => {
            let e = load(input.as_deref())?;
            let g = e.graph();
            let fw = face_width(&e)?;
            let mut out = String::new();
            out += &format!("vertices {}\nedges {}\nfaces {}\n", e.n(), e.m(), e.face_count());
            out += &format!("euler_genus {}\norientable {}\n", e.euler_genus(), e.is_orientable());
            out += &format!("components {}\n", e.components().len());
            out += &format!("face_width {fw}\n");
            out += &format!("connectivity {}\n", g.vertex_connectivity());
            out += &format!("polyhedral {}\n", check_polyhedral(&e));
            out += &format!("roots {}\n", e.root_set().len());
            emit(None, &out)?;
            Ok(0)
        }
        Cmd::Cover { input, mode, output } => {
            let e = load(input.as_deref())?;
            let out = min_face_cover(&e, &e.root_set(), mode)?;
            let note = if out.optimal { "# optimal\n" } else { "" };
            emit(output.as_deref(), &format!("{note}{}\n", Certificate::Cover(out.cover)))?;
            Ok(0)
        }
        Cmd::Dichotomy { input, t, hint, output, report } => {
            let e = load(input.as_deref())?;
            let roots = e.root_set();
            let cert = if e.euler_genus() == 0 {
                plane_dichotomy(&e, &roots, t)?.certificate
            } else {
                let hint = hint_for(input.as_deref(), hint.as_deref())?;
                let r = genus_face_cover(&e, &roots, t, hint.as_ref())?;
                if report {
                    eprint!("{}", r.report);
                }
                r.certificate()
            };
            emit(output.as_deref(), &format!("{cert}\n"))?;
            Ok(if matches!(cert, Certificate::Model(_)) { EXIT_MODEL } else { 0 })
        }
        Cmd::Oracle { input, t, budget, output } => {
            let e = load(input.as_deref())?;
            if !(budget >= 0.0 && budget.is_finite()) {
                return Err(Error::Malformed(format!("bad budget {budget}")).into());
            }
            let text = match brute_force_rooted_k2t(&e.graph(), &e.root_set(), t, Duration::from_secs_f64(budget)) {
                OracleResult::Model(m) => Certificate::Model(m).to_string(),
                OracleResult::Absent => "none".to_string(),
                OracleResult::Timeout => "timeout".to_string(),
            };
            emit(output.as_deref(), &format!("{text}\n"))?;
            Ok(0)
        }
        Cmd::Verify { input, certificate } => {
            let e = load(Some(&input))?;
            let cert = parse_certificate(&read_input(Some(&certificate))?, &e.graph())?;
            let v = cert.verify(&e, &e.root_set());
            if v.ok() {
                println!("ok");
                Ok(0)
            } else {
                println!("rejected: {v}");
                Ok(1)
            }
        }
        Cmd::Draw { input, output } => {
            let e = load(input.as_deref())?;
            if e.euler_genus() != 0 || !e.graph().is_3_connected() {
                return Err(Error::Precondition("drawing needs a 3-connected plane embedding".into()).into());
            }
            let fs = e.faces();
            let outer = (0..fs.count()).max_by_key(|&f| (fs.walk(f).len(), std::cmp::Reverse(f))).unwrap_or(0);
            let frame = frame_on_face(&e, outer, &e.root_set())
                .ok_or_else(|| Error::Precondition("the outer face has fewer than three vertices".into()))?;
            let wood = compute_schnyder_wood(&e, outer, frame)?;
            emit(output.as_deref(), &draw_svg(&e, &wood))?;
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Precondition(_)) => 3,
        Some(Error::Malformed(_)) => 2,
        Some(Error::Failed(_)) => 1,
        None if err.downcast_ref::<io::Error>().is_some() => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
