use std::ffi::OsString;
use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_vgit::analysis::picard::{picard_general, picard_mds_quotient, PicardFormulaInputs};
use quiver_vgit::analysis::{analyze, QuiverAnalysis};
use quiver_vgit::geometry::slice::Viewport;
use quiver_vgit::quiver::{king_semistability, Character, Semistability, ThinRepPattern};
use quiver_vgit::rational::{parse_rational, Rational};
use quiver_vgit::report::request::parse_scope;
use quiver_vgit::report::tables::{color_enabled, render_chambers, render_stable, render_walls};
use quiver_vgit::report::{
    build_document, parse_request, parse_request_json, render_svg, render_tables, to_json, AnalysisRequest,
    OutputFormat,
};

#[derive(Parser)]
#[command(name = "quiver-vgit", version, about = "GIT walls and chambers for thin quiver moduli")]
struct Cli {
    /// Read the request as JSON instead of the line format.
    #[arg(long, global = true)]
    json_input: bool,
    /// Output format; overrides a `format:` line in the request.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<OutputFormat>,
    /// `full` or `g-ample`; overrides a `scope:` line in the request.
    #[arg(long, global = true, value_parser = parse_scope)]
    scope: Option<quiver_vgit::Scope>,
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

#[derive(Args)]
struct Input {
    /// Request file; `-` or nothing reads standard input.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: walls, chambers, stable matrix, base chamber.
    Analyze(Input),
    /// Walls table.
    Walls(Input),
    /// Chambers table.
    Chambers(Input),
    /// Stable-chamber matrix and pseudoeffective cone of the base chamber.
    StableMatrix(Input),
    /// SVG figure of the request's slice.
    SliceSvg {
        #[command(flatten)]
        input: Input,
        /// xmin,xmax,ymin,ymax as rationals.
        #[arg(long, default_value = "-1,3,-2,2", allow_hyphen_values = true)]
        viewport: String,
        /// Vertical stretch factor.
        #[arg(long, default_value = "1")]
        yscale: String,
    },
    /// Picard-number calculators.
    Picard {
        /// rk_characters,components,rk_units_invariant,rk_units_quotient
        #[arg(long, conflicts_with = "mds_quotient", required_unless_present = "mds_quotient")]
        general: Option<String>,
        /// rho_Y,rk_characters,components
        #[arg(long)]
        mds_quotient: Option<String>,
    },
    /// Checks every chamber's semistable locus against brute-force King stability.
    OracleCheck {
        #[command(flatten)]
        input: Input,
        /// Seed for sampled patterns and random character scalings.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Analysis(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Analysis(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_request(cli: &Cli, input: &Input) -> Result<AnalysisRequest, Failure> {
    let mut text = String::new();
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("standard input: {e}")))?;
        }
    }
    let parsed = if cli.json_input { parse_request_json(&text) } else { parse_request(&text) };
    let mut request = parsed.map_err(|e| Failure::Analysis(e.to_string()))?;
    if cli.scope.is_some() {
        request.scope = cli.scope;
    }
    Ok(request)
}

fn run_analysis(request: &AnalysisRequest) -> Result<(QuiverAnalysis, quiver_vgit::report::AnalysisDocument), Failure> {
    let analysis = analyze(&request.quiver, &request.d, &request.options()).map_err(|e| Failure::Analysis(e.to_string()))?;
    let doc = build_document(request, &analysis).map_err(|e| Failure::Analysis(e.to_string()))?;
    Ok((analysis, doc))
}

fn color() -> bool {
    let no_color: Option<OsString> = std::env::var_os("NO_COLOR");
    color_enabled(std::io::stdout().is_terminal(), no_color.as_deref())
}

fn format_of(cli: &Cli, request: &AnalysisRequest) -> OutputFormat {
    cli.format.or(request.format).unwrap_or(OutputFormat::Text)
}

fn counts(text: &str, n: usize) -> Result<Vec<u64>, Failure> {
    let v: Vec<u64> = text
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected {n} comma-separated nonnegative integers, got `{text}`")))?;
    if v.len() != n {
        return Err(Failure::Usage(format!("expected {n} comma-separated nonnegative integers, got `{text}`")));
    }
    Ok(v)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Analyze(input) | Command::Walls(input) | Command::Chambers(input) | Command::StableMatrix(input) => {
            let request = read_request(cli, input)?;
            let (_, doc) = run_analysis(&request)?;
            let c = color();
            Ok(match (format_of(cli, &request), &cli.command) {
                (OutputFormat::Json, Command::Analyze(_)) => to_json(&doc),
                (OutputFormat::Json, Command::Walls(_)) => to_json(&serde_json::json!({ "walls": doc.walls })),
                (OutputFormat::Json, Command::Chambers(_)) => to_json(&serde_json::json!({ "chambers": doc.chambers })),
                (OutputFormat::Json, _) => {
                    to_json(&serde_json::json!({ "stable_matrix": doc.stable_matrix, "base": doc.base }))
                }
                (OutputFormat::Svg, _) => render_svg(&doc, &default_viewport(), &Rational::from_integer(1.into())),
                (OutputFormat::Text, Command::Analyze(_)) => render_tables(&doc, c),
                (OutputFormat::Text, Command::Walls(_)) => render_walls(&doc, c),
                (OutputFormat::Text, Command::Chambers(_)) => render_chambers(&doc, c),
                (OutputFormat::Text, _) => render_stable(&doc, c),
            })
        }
        Command::SliceSvg { input, viewport, yscale } => {
            let vp = parse_viewport(viewport)?;
            let ys = parse_rational(yscale)
                .filter(|r| *r > Rational::from_integer(0.into()))
                .ok_or_else(|| Failure::Usage(format!("invalid --yscale `{yscale}`")))?;
            let request = read_request(cli, input)?;
            if request.slice.is_none() {
                return Err(Failure::Analysis("the request has no `slice:` line".into()));
            }
            let (_, doc) = run_analysis(&request)?;
            Ok(render_svg(&doc, &vp, &ys))
        }
        Command::Picard { general, mds_quotient } => {
            let value = if let Some(g) = general {
                let v = counts(g, 4)?;
                picard_general(&PicardFormulaInputs {
                    rk_character_group: v[0],
                    component_count: v[1],
                    rk_units_invariant: v[2],
                    rk_units_quotient: v[3],
                })
            } else {
                let v = counts(mds_quotient.as_deref().unwrap_or(""), 3)?;
                picard_mds_quotient(v[0], v[1], v[2])
            };
            value.map(|r| format!("{r}\n")).map_err(|e| Failure::Analysis(e.to_string()))
        }
        Command::OracleCheck { input, seed } => {
            let request = read_request(cli, input)?;
            let (analysis, _) = run_analysis(&request)?;
            let (report, ok) = oracle_check(&analysis, *seed);
            if ok {
                Ok(report)
            } else {
                Err(Failure::Analysis(format!("{report}oracle mismatch")))
            }
        }
    }
}

fn default_viewport() -> Viewport {
    parse_viewport("-1,3,-2,2").ok().expect("default viewport parses")
}

fn parse_viewport(text: &str) -> Result<Viewport, Failure> {
    let parts: Vec<Rational> = text
        .split(',')
        .map(parse_rational)
        .collect::<Option<_>>()
        .ok_or_else(|| Failure::Usage(format!("invalid --viewport `{text}`")))?;
    let [xmin, xmax, ymin, ymax]: [Rational; 4] =
        parts.try_into().map_err(|_| Failure::Usage("--viewport needs xmin,xmax,ymin,ymax".into()))?;
    Ok(Viewport::new(xmin, xmax, ymin, ymax))
}

/// Exhaustive over zero patterns up to 12 arrows, 4096 seeded samples
/// beyond. Each chamber is tested at its witness and at a random positive
/// multiple of it.
fn oracle_check(analysis: &QuiverAnalysis, seed: u64) -> (String, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = &analysis.quiver;
    let m = q.arrows().len();
    let patterns: Vec<ThinRepPattern> = if m <= 12 {
        (0..1u64 << m).map(|mask| ThinRepPattern::from_mask(m, mask)).collect()
    } else {
        (0..4096).map(|_| ThinRepPattern::from_mask(m, rng.gen::<u64>())).collect()
    };
    let mut out = String::new();
    let mut ok = true;
    for (_, c) in analysis.g_ample_chambers() {
        let theta = analysis.to_ambient(&c.chamber.witness);
        let theta: Vec<i64> = theta
            .iter()
            .map(|x| i64::try_from(x.to_integer()).expect("witness coordinates fit in 64 bits"))
            .collect();
        let k: i64 = rng.gen_range(1..=1000);
        let mut mismatches = 0usize;
        for t in [Character(theta.clone()), Character(theta).scaled(k)] {
            for p in &patterns {
                let cnf = c.cnf.evaluate(p);
                let king = king_semistability(q, p, &t) != Semistability::Unstable;
                if cnf != king {
                    mismatches += 1;
                }
            }
            if king_semistability(q, &ThinRepPattern::all_nonzero(m), &t) != Semistability::Stable {
                mismatches += 1;
            }
        }
        ok &= mismatches == 0;
        out.push_str(&format!(
            "{}: {} patterns, scaling k = {k}: {}\n",
            c.label,
            patterns.len(),
            if mismatches == 0 { "agree".to_string() } else { format!("{mismatches} MISMATCHES") }
        ));
    }
    out.push_str(&format!("oracle check {}\n", if ok { "passed" } else { "FAILED" }));
    (out, ok)
}
