//! Command-line front end.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bivector::{compute_bivector, Bivector, SymmetricForm};
use crate::data::{data_dir, symmetric_form_path};
use crate::error::{Error, Result};
use crate::goldman::{bracket, bracket_from_data, DiagramData};
use crate::maps::{poisson_check, FreeHom};
use crate::numeric::oracle_reduce;
use crate::poly::{TracePoly, TraceVar};
use crate::reduce::reduce_trace_in;
use crate::surface::{dimension, FatGraph, GroupParams};
use crate::verify::{check_expansion, check_symmetry, verify_paper};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "goldman", version, about = "Goldman brackets and Poisson bi-vectors on SL(2,C)-character varieties")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce the trace of a word to the canonical coordinates.
    Reduce {
        #[arg(long)]
        rank: Option<usize>,
        word: String,
    },
    /// Goldman bracket of two curves.
    Bracket {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        /// First curve, as a word or a coordinate such as t[1,3].
        alpha: Option<String>,
        beta: Option<String>,
        /// Sum an intersection diagram file and compare.
        #[arg(long)]
        from_diagram: Option<PathBuf>,
        #[arg(long)]
        latex: bool,
    },
    /// Bi-vector of a surface.
    Bivector {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        /// Compare with the compressed symmetric form.
        #[arg(long)]
        check_theorem: bool,
        /// Test every boundary permutation.
        #[arg(long)]
        symmetry_scan: bool,
        #[arg(long)]
        latex: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Fat graph model of a surface.
    Surface {
        #[arg(long, conflicts_with = "surface")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0, conflicts_with = "surface")]
        g: usize,
        #[arg(long, value_parser = parse_surface)]
        surface: Option<(usize, usize)>,
        /// Also print the cyclic order and boundary words.
        #[arg(long)]
        print: bool,
    },
    /// Dimension of the character variety.
    Dimension {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        /// Group by name (sl2, sl3, gl2, ...).
        #[arg(long, default_value = "sl2", conflicts_with = "params")]
        group: String,
        /// Explicit `dimG,r,s`.
        #[arg(long)]
        params: Option<String>,
    },
    /// Pull a polynomial back along a free-group map.
    Pullback {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Check numerically that a map induces a Poisson morphism.
    PoissonCheck {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_parser = parse_surface)]
        source: (usize, usize),
        #[arg(long, value_parser = parse_surface)]
        target: (usize, usize),
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Compare a trace reduction with matrix products.
    Oracle {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run every check against the reference data.
    VerifyPaper {
        #[arg(long, value_parser = parse_surface, default_value = "5,0")]
        surface: (usize, usize),
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Sampling {
    /// Variety samples per numeric comparison.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn parse_surface(s: &str) -> std::result::Result<(usize, usize), String> {
    let (n, g) = s.split_once(',').ok_or_else(|| format!("expected n,g but got {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad boundary count in {s:?}"))?;
    let g = g.trim().parse().map_err(|_| format!("bad genus in {s:?}"))?;
    Ok((n, g))
}

/// Outcome of a command that ran: the text to print and whether its checks held.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), ok: true }
    }

    fn checked(text: impl Into<String>, ok: bool) -> Self {
        Output { text: text.into(), ok }
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn resolve_data_file(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let in_data = data_dir().join(path);
    if in_data.exists() {
        in_data
    } else {
        path.to_path_buf()
    }
}

fn surface(n: usize, g: usize) -> Result<FatGraph> {
    FatGraph::standard_model(n, g)
}

/// Curves may be given as words in the surface labels or as coordinates.
fn parse_curve(fat: &FatGraph, s: &str) -> Result<Word> {
    if s.trim_start().starts_with("t[") {
        let v: TraceVar = s.parse()?;
        let w = v.word();
        w.check_rank(fat.rank())?;
        return Ok(w);
    }
    fat.parse_word(s)
}

fn render_poly(p: &TracePoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => p.latex(),
        Format::Json => json!({ "poly": p.to_string() }).to_string(),
    }
}

fn render_bivector(bv: &Bivector, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => bv.to_string(),
        Format::Latex => bv.latex(),
        Format::Json => bv.to_json()?,
    })
}

fn execute(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Reduce { rank, word } => {
            let w: Word = word.parse()?;
            let rank = rank.unwrap_or((w.max_index() as usize).max(1));
            let p = reduce_trace_in(&w, rank)?;
            Ok(Output::ok(match format {
                Format::Json => json!({ "word": w.to_string(), "poly": p.to_string() }).to_string(),
                _ => render_poly(&p, format),
            }))
        }
        Command::Bracket { surface: (n, g), alpha, beta, from_diagram, latex } => {
            let format = if *latex { Format::Latex } else { format };
            let fat = surface(*n, *g)?;
            match (from_diagram, alpha, beta) {
                (Some(path), None, None) => {
                    let d = DiagramData::load(&resolve_data_file(path))?;
                    let from_data = bracket_from_data(&d)?;
                    let combinatorial = bracket(&fat, &d.lhs_word()?, &d.rhs_word()?)?;
                    let agree = from_data == combinatorial;
                    let text = match format {
                        Format::Json => json!({
                            "figure": d.figure, "lhs": d.lhs, "rhs": d.rhs,
                            "from_diagram": from_data.to_string(), "combinatorial": combinatorial.to_string(), "agree": agree,
                        })
                        .to_string(),
                        _ => format!(
                            "{}\n{}",
                            render_poly(&from_data, format),
                            if agree { "agrees with the combinatorial bracket".to_string() } else { format!("combinatorial bracket differs: {}", render_poly(&combinatorial, format)) }
                        ),
                    };
                    Ok(Output::checked(text, agree))
                }
                (None, Some(a), Some(b)) => {
                    let p = bracket(&fat, &parse_curve(&fat, a)?, &parse_curve(&fat, b)?)?;
                    Ok(Output::ok(render_poly(&p, format)))
                }
                _ => Err(Error::Data("bracket takes either two curves or --from-diagram FILE".into())),
            }
        }
        Command::Bivector { surface: (n, g), check_theorem, symmetry_scan, latex, sampling } => {
            let format = if *latex { Format::Latex } else { format };
            let bv = compute_bivector(&surface(*n, *g)?)?;
            if !check_theorem && !symmetry_scan {
                return Ok(Output::ok(render_bivector(&bv, format)?));
            }
            let mut text = String::new();
            let mut ok = true;
            if *check_theorem {
                let form = SymmetricForm::load(&symmetric_form_path(&data_dir()))?;
                if form.surface() != (*n, *g) {
                    return Err(Error::Data(format!("no compressed form is shipped for ({n},{g})")));
                }
                let c = check_expansion(&bv, &form)?;
                ok &= c.passed();
                text += &format!("symmetric form expansion: {}/{} entries agree\n", c.matched(), c.compared);
                for m in &c.mismatches {
                    text += &format!("  {m}\n");
                }
            }
            if *symmetry_scan {
                let s = check_symmetry(&bv, sampling.samples, sampling.seed)?;
                ok &= s.passed();
                let list: Vec<String> = s.report.preserving.iter().map(|p| p.to_string()).collect();
                text += &format!("symmetry scan: {} of {} permutations preserve the bi-vector\n", list.len(), s.report.checked);
                text += &format!("  preserving: {}\n", list.join(" "));
                if !s.beyond.is_empty() {
                    let extra: Vec<String> = s.beyond.iter().map(|p| p.to_string()).collect();
                    text += &format!("  outside the documented operators: {}\n", extra.join(" "));
                }
            }
            Ok(Output::checked(text, ok))
        }
        Command::Surface { n, g, surface: pair, print } => {
            let (n, g) = match (pair, n) {
                (Some(p), _) => *p,
                (None, Some(n)) => (*n, *g),
                (None, None) => return Err(Error::Data("surface needs --n (and --g) or --surface n,g".into())),
            };
            let fat = surface(n, g)?;
            let faces: Vec<String> = fat.boundary_words().iter().map(|b| fat.format_word(b.representative())).collect();
            Ok(Output::ok(match format {
                Format::Json => json!({
                    "n": n, "g": g, "rank": fat.rank(), "euler": fat.euler_characteristic(),
                    "labels": fat.labels(), "boundary_words": faces,
                })
                .to_string(),
                _ if *print => fat.to_string(),
                _ => format!("surface: n={n} g={g} rank={} euler={}", fat.rank(), fat.euler_characteristic()),
            }))
        }
        Command::Dimension { surface: (n, g), group, params } => {
            let gp = match params {
                Some(s) => {
                    let v = s.split(',').map(|x| x.trim().parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>();
                    match v.as_deref() {
                        Ok([d, r, s]) => GroupParams::new(*d, *r, *s)?,
                        _ => return Err(Error::Data(format!("--params expects dimG,r,s, got {s:?}"))),
                    }
                }
                None => GroupParams::named(group).ok_or_else(|| Error::Data(format!("unknown group {group:?}")))?,
            };
            let d = dimension(*n, *g, gp)?;
            Ok(Output::ok(match format {
                Format::Json => json!({ "n": n, "g": g, "dimension": d }).to_string(),
                _ => d.to_string(),
            }))
        }
        Command::Pullback { map, poly } => {
            let h = FreeHom::load(&resolve_data_file(map))?;
            let p: TracePoly = poly.parse()?;
            Ok(Output::ok(render_poly(&h.pullback(&p)?, format)))
        }
        Command::PoissonCheck { map, source, target, trials, seed } => {
            let h = FreeHom::load(&resolve_data_file(map))?;
            let r = poisson_check(&h, &surface(source.0, source.1)?, &surface(target.0, target.1)?, *trials, *seed)?;
            let worst = r.worst_pair.as_ref().map(|(u, v)| format!("{{{u}, {v}}}")).unwrap_or_else(|| "-".into());
            let text = match format {
                Format::Json => json!({
                    "pairs": r.pairs, "trials": r.trials, "sign": r.sign,
                    "max_residual": r.max_residual, "worst_pair": worst, "passed": r.passed(),
                })
                .to_string(),
                _ => format!(
                    "{}: {} pairs, {} trials, sign {:+}, max residual {:.3e} at {}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.pairs,
                    r.trials,
                    r.sign,
                    r.max_residual,
                    worst
                ),
            };
            Ok(Output::checked(text, r.passed()))
        }
        Command::Oracle { word, samples, seed } => {
            let w: Word = word.parse()?;
            let r = oracle_reduce(&w, *samples, *seed)?;
            let text = match format {
                Format::Json => json!({
                    "word": w.to_string(), "poly": r.polynomial.to_string(),
                    "samples": r.samples, "max_residual": r.max_residual, "passed": r.passed(),
                })
                .to_string(),
                _ => format!(
                    "{}\n{}: {} samples, max relative residual {:.3e}",
                    render_poly(&r.polynomial, format),
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.samples,
                    r.max_residual
                ),
            };
            Ok(Output::checked(text, r.passed()))
        }
        Command::VerifyPaper { surface: (n, g), workers, sampling } => {
            if (*n, *g) != (5, 0) {
                return Err(Error::Data(format!("reference data exists only for 5,0, not {n},{g}")));
            }
            let pool = rayon::ThreadPoolBuilder::new().num_threads(*workers).build().map_err(|e| Error::Data(e.to_string()))?;
            let report = pool.install(|| verify_paper(&data_dir(), sampling.samples, sampling.seed))?;
            Ok(Output::checked(report.to_string(), report.passed()))
        }
    }
}
