//! Command-line front end. Exit codes: 0 ok, 1 certification failure, 2 usage.

use crate::angles::{explore, extremal_b};
use crate::certify::certify;
use crate::polyjson::PolyJson;
use crate::render::render_svg;
use crate::stages::{digits_to_bits, precision_from_env, Pipeline, CACHE_DIR};
use crate::Frame;
use clap::{Parser, Subcommand, ValueEnum};
use harborth_algebra::dyadic::{format_decimal, parse_decimal};
use harborth_algebra::realroots::{isolate, refine};
use harborth_algebra::Dyadic;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "harborth", version, about = "Exact minimal polynomials for the Harborth graph")]
pub struct Cli {
    /// where stage records are cached
    #[arg(long, global = true, default_value = CACHE_DIR)]
    pub cache_dir: PathBuf,
    /// recompute everything, ignore and do not write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the derivation stages and print their records
    Derive {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7), default_value_t = 7)]
        stage: u8,
        /// working precision in decimal digits (default from HARBORTH_DIGITS, else 120)
        #[arg(long)]
        digits: Option<u32>,
        /// write all records as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive everything and check it
    Certify {
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Isolate the real roots of a polynomial JSON file
    Roots {
        file: PathBuf,
        /// target width, as a decimal
        #[arg(long, default_value = "0.0000000000000000000001")]
        refine: String,
    },
    /// Table of the angle φ over [0, b]
    Explore {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=100000))]
        grid: u32,
    },
    /// Draw the crucial vertices and their mirror images
    Render {
        #[arg(long, value_enum)]
        frame: FrameArg,
        #[arg(long, default_value_t = 6)]
        digits: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FrameArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "K", alias = "k")]
    K,
}

impl From<FrameArg> for Frame {
    fn from(f: FrameArg) -> Frame {
        match f {
            FrameArg::A => Frame::A,
            FrameArg::F => Frame::F,
            FrameArg::K => Frame::K,
        }
    }
}

enum Failure {
    Usage(String),
    Certification,
    Runtime(String),
}

fn pipeline(cli: &Cli, bits: u32) -> Pipeline {
    Pipeline::new(bits, (!cli.no_cache).then(|| cli.cache_dir.clone()))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let rt = |e: &dyn std::fmt::Display| Failure::Runtime(e.to_string());
    let io = |e: std::io::Error| Failure::Runtime(e.to_string());
    match &cli.command {
        Command::Derive { stage, digits, out: file } => {
            let bits = digits.map(digits_to_bits).unwrap_or_else(precision_from_env);
            let mut p = pipeline(cli, bits);
            p.run_through(*stage).map_err(|e| rt(&e))?;
            for r in p.store.by_stage.get(stage).into_iter().flatten() {
                writeln!(out, "[stage {}] {} ({})", r.stage, r.id, r.anchor).map_err(io)?;
                writeln!(out, "  {} = 0", r.output).map_err(io)?;
            }
            if let Some(f) = file {
                let all: Vec<_> = p.store.all().collect();
                let s = serde_json::to_string_pretty(&all).map_err(|e| rt(&e))? + "\n";
                std::fs::write(f, s).map_err(io)?;
            }
            Ok(())
        }
        Command::Certify { report } => {
            let mut p = pipeline(cli, precision_from_env());
            p.run_through(7).map_err(|e| rt(&e))?;
            let r = certify(&p).map_err(|e| rt(&e))?;
            let line = |ok: bool| if ok { "PASS" } else { "FAIL" };
            writeln!(out, "polynomials  {} ({}/{})", line(r.polynomials_pass()), r.polynomials.iter().filter(|x| x.pass).count(), r.polynomials.len()).map_err(io)?;
            writeln!(out, "roots        {}", line(r.roots_pass())).map_err(io)?;
            writeln!(out, "signatures   {}", line(r.signatures_pass())).map_err(io)?;
            writeln!(out, "constraints  {}", line(r.constraints_pass())).map_err(io)?;
            writeln!(out, "stage5       {}", line(r.stage5.pass)).map_err(io)?;
            writeln!(out, "extremal     {}", line(r.extremal.pass)).map_err(io)?;
            writeln!(out, "compass      {}", r.compass_ruler).map_err(io)?;
            writeln!(out, "rigidity     {}", r.rigidity).map_err(io)?;
            for (k, t) in &r.timings {
                eprintln!("time {k}: {t:.2}s");
            }
            writeln!(out, "overall      {}", line(r.overall)).map_err(io)?;
            if let Some(f) = report {
                std::fs::write(f, r.to_json()).map_err(io)?;
            }
            if r.overall {
                Ok(())
            } else {
                Err(Failure::Certification)
            }
        }
        Command::Roots { file, refine: width } => {
            let src = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let pj = PolyJson::parse(&src).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let p = pj.to_z().map_err(|_| Failure::Usage("roots needs an integer polynomial".into()))?;
            let w = parse_decimal(width).ok_or_else(|| Failure::Usage(format!("bad width {width}")))?;
            if w <= num_rational::BigRational::from_integer(0.into()) {
                return Err(Failure::Usage("width must be positive".into()));
            }
            let bits = -Dyadic::from_rational_floor(&w, 64 + w.denom().bits() as u32).log2_floor().unwrap_or(0);
            let digits = (bits as f64 / std::f64::consts::LOG2_10).ceil() as usize + 2;
            let iso = isolate(&p);
            writeln!(out, "{} real roots of the degree-{} polynomial in {}", iso.len(), p.deg(), pj.var).map_err(io)?;
            for i in 0..iso.len() {
                let (lo, hi) = refine(&iso, i, bits.max(1));
                writeln!(out, "[{}, {}]", format_decimal(&lo.to_rational(), digits), format_decimal(&hi.to_rational(), digits)).map_err(io)?;
            }
            Ok(())
        }
        Command::Explore { grid } => {
            let b = extremal_b().map_err(|e| rt(&e))?;
            writeln!(out, "b = {}", b.to_decimal(20)).map_err(io)?;
            writeln!(out, "{:>24} {:>20} {:>20} {:>20} {:>6}", "T", "phi", "alpha", "beta", "sign").map_err(io)?;
            let rows = explore(*grid as usize, 160).map_err(|e| rt(&e))?;
            for (t, r) in rows {
                let sign = if r.orthogonality.is_negative() {
                    "<90"
                } else if r.orthogonality.is_positive() {
                    ">90"
                } else {
                    "~90"
                };
                writeln!(out, "{:>24} {:>20.15} {:>20.15} {:>20.15} {:>6}", format_decimal(&t.mid().to_rational(), 20), r.phi, r.alpha, r.beta, sign).map_err(io)?;
            }
            Ok(())
        }
        Command::Render { frame, digits, out: file } => {
            let bits = precision_from_env().max(digits_to_bits(*digits as u32) + 32);
            let mut p = pipeline(cli, precision_from_env());
            p.run_through(5).map_err(|e| rt(&e))?;
            let pt = p.store.find("P_T").and_then(|r| r.univariate()).ok_or_else(|| Failure::Runtime("P_T missing".into()))?;
            render_svg(&pt, (*frame).into(), *digits, bits, file).map_err(io)?;
            writeln!(out, "wrote {}", file.display()).map_err(io)?;
            Ok(())
        }
    }
}

/// Parse `args` and run; returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Certification) => 1,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}
