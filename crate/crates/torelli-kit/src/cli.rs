//! Command-line driver.
//!
//! Every subcommand is a thin wrapper over the library: it reads a versioned
//! JSON document (or a builtin family), runs one computation, and prints a
//! deterministic report. Exit codes: `0` on success, `1` when a certificate
//! hypothesis fails or a distinctness check finds a collision, `2` on
//! malformed input.
//!
//! The `TORELLI_KIT_SEED` environment variable is accepted for interface
//! compatibility with randomized tooling and is deliberately ignored: every
//! computation here is exact and deterministic.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::certificate::{
    certify, dehn_twist_realizability, stein_certify, BoundaryProfile, Certificate,
    CertificateInput, CertificateSource, RealizabilityVerdict,
};
use crate::families::z_fixture;
use crate::groupring::{pairwise_distinct, sw_family};
use crate::json::{
    CertificateDto, CertificateInputDto, ComponentReportDto, DehnTwistDto, DistinctDto,
    DistinguishDto, FrontDto, GroupDto, GroupRingDto, HomologyReportDto, LegendrianReportDto,
    MatrixDto, ProfileDto, SnfReportDto, SwListDto, TorelliGeneratorDto, TorelliReportDto,
    TraceDto, VariationDto, VariationReportDto, SCHEMA,
};
use crate::legendrian::{
    chern_class, classical_invariants, distinguish_boundaries, parse_front, stein_trace,
    xn_front, DistinguishVerdict, FrontDiagram,
};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::presentation::{betti_sanity, boundary_homology, LinkTrace};
use crate::variation::{skew_from_variation, variation_from_skew, SkewForm, Variation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Xn,
    Zn,
}

#[derive(Debug, Parser)]
#[command(
    name = "torelli-kit",
    version,
    about = "Exact Torelli groups of four-manifolds presented by framed links",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format; data reports default to json, verdict lines to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write the report to PATH instead of standard output.
    #[arg(long, value_name = "PATH", global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix, with unimodular transforms.
    Snf {
        /// JSON matrix document; standard input when omitted.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Homology and duality of the boundary of a framed-link trace.
    Homology {
        /// JSON trace document; standard input when omitted.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Analyze one variation: Poincaré property, induced automorphism, skew form.
    Variation {
        /// JSON variation document; standard input when omitted.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Structure of the topological Torelli group over a trace.
    Torelli {
        /// JSON trace document; standard input when omitted.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Non-smoothability certificate from a certificate input or builtin family.
    Certify {
        /// JSON certificate-input document; standard input when omitted.
        #[arg(long, value_name = "PATH", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// Builtin family: `xn` (Stein, needs --n) or `zn` (knot-surgery fixture).
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Family parameter, `n >= 1`.
        #[arg(long)]
        n: Option<i64>,
    },
    /// Full Stein pipeline from a Legendrian front (text or JSON).
    SteinCertify {
        /// Front file; standard input when omitted.
        #[arg(long, value_name = "PATH", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// Builtin family (only `xn`, needs --n).
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Family parameter, `n >= 1`.
        #[arg(long)]
        n: Option<i64>,
    },
    /// Classical invariants, trace, and Chern class of a Legendrian front.
    Legendrian {
        /// Front file (text or JSON); standard input when omitted.
        #[arg(long, value_name = "PATH", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// Builtin family (only `xn`, needs --n).
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Family parameter, `n >= 1`.
        #[arg(long)]
        n: Option<i64>,
    },
    /// Seiberg–Witten series of the knot-surgery family.
    Sw {
        /// Builtin family (only `zn`).
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Parameter: a single value `3` or an inclusive range `1..5`.
        #[arg(long)]
        n: String,
        /// Check pairwise distinctness over the range instead of listing.
        #[arg(long)]
        check_distinct: bool,
    },
    /// Distinguish two Stein-family boundaries by genus bounds.
    Distinguish {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        m: i64,
    },
    /// Classify boundary Dehn-twist realizability from a profile.
    DehnTwist {
        /// JSON profile document; overrides the flags below.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// First Betti number of the boundary.
        #[arg(long, required_unless_present = "input", conflicts_with = "input")]
        b1: Option<i64>,
        /// The boundary is prime.
        #[arg(long, conflicts_with = "input")]
        prime: bool,
        /// The boundary is the 3-torus.
        #[arg(long, conflicts_with = "input")]
        t3: bool,
        /// The boundary fibers as a Seifert space over the 2-torus.
        #[arg(long, conflicts_with = "input")]
        seifert_t2: bool,
    },
}

/// Run the CLI on explicit arguments (the first item is the program name) and
/// explicit output streams; returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    // Accepted but unused: all computations are exact, nothing is sampled.
    let _ = std::env::var("TORELLI_KIT_SEED");

    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };

    let format = cli.format;
    let output = cli.output.clone();
    match dispatch(cli.command, format) {
        Ok((report, code)) => match deliver(&report, output.as_deref(), out) {
            Ok(()) => code,
            Err(message) => {
                let _ = writeln!(err, "error: {message}");
                2
            }
        },
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn deliver(report: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let _ = out.write_all(report.as_bytes());
            Ok(())
        }
    }
}

fn read_source(input: Option<&Path>) -> Result<String, String> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => std::io::read_to_string(std::io::stdin())
            .map_err(|e| format!("cannot read standard input: {e}")),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

fn pretty<T: serde::Serialize>(dto: &T) -> Result<String, String> {
    serde_json::to_string_pretty(dto)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| e.to_string())
}

fn rows_display(rows: &[Vec<i64>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", body.join(", "))
}

fn vec_display(v: &[i64]) -> String {
    let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn pick(format: Option<Format>, default: Format) -> Format {
    format.unwrap_or(default)
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
            let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
            (a, b)
        }
        None => {
            let n: i64 = s.trim().parse().map_err(|_| format!("bad parameter {s:?}"))?;
            (n, n)
        }
    };
    if a < 1 || b < a {
        return Err(format!("parameter range must satisfy 1 <= start <= end, got {s:?}"));
    }
    Ok((a, b))
}

fn require_n(n: Option<i64>) -> Result<i64, String> {
    let n = n.ok_or("the xn family needs --n")?;
    if n < 1 {
        return Err(format!("family parameter must be >= 1, got {n}"));
    }
    Ok(n)
}

/// Load a front from text or JSON; JSON documents start with `{`.
fn load_front(source: &str) -> Result<FrontDiagram, String> {
    if source.trim_start().starts_with('{') {
        let dto: FrontDto = parse_json(source)?;
        FrontDiagram::try_from(dto).map_err(|e| e.to_string())
    } else {
        parse_front(source).map_err(|e| e.to_string())
    }
}

fn dispatch(command: Command, format: Option<Format>) -> Result<(String, i32), String> {
    match command {
        Command::Snf { input } => run_snf(input.as_deref(), format),
        Command::Homology { input } => run_homology(input.as_deref(), format),
        Command::Variation { input } => run_variation(input.as_deref(), format),
        Command::Torelli { input } => run_torelli(input.as_deref(), format),
        Command::Certify { input, family, n } => run_certify(input.as_deref(), family, n, format),
        Command::SteinCertify { input, family, n } => {
            run_stein_certify(input.as_deref(), family, n, format)
        }
        Command::Legendrian { input, family, n } => {
            run_legendrian(input.as_deref(), family, n, format)
        }
        Command::Sw {
            family,
            n,
            check_distinct,
        } => run_sw(family, &n, check_distinct, format),
        Command::Distinguish { r, m } => run_distinguish(r, m, format),
        Command::DehnTwist {
            input,
            b1,
            prime,
            t3,
            seifert_t2,
        } => run_dehn_twist(input.as_deref(), b1, prime, t3, seifert_t2, format),
    }
}

fn run_snf(input: Option<&Path>, format: Option<Format>) -> Result<(String, i32), String> {
    let dto: MatrixDto = parse_json(&read_source(input)?)?;
    let matrix = dto.into_matrix().map_err(|e| e.to_string())?;
    let decomposition = smith_normal_form(&matrix);
    debug_assert!(decomposition.verify());
    let report = SnfReportDto::new(&decomposition).map_err(|e| e.to_string())?;
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => format!(
            "diagonal: {}\nrank: {}\nu: {}\nv: {}\n",
            vec_display(&report.diagonal),
            report.rank,
            rows_display(&report.u),
            rows_display(&report.v),
        ),
    };
    Ok((text, 0))
}

fn load_trace(input: Option<&Path>) -> Result<LinkTrace, String> {
    let dto: TraceDto = parse_json(&read_source(input)?)?;
    LinkTrace::try_from(dto).map_err(|e| e.to_string())
}

fn run_homology(input: Option<&Path>, format: Option<Format>) -> Result<(String, i32), String> {
    let trace = load_trace(input)?;
    let boundary = boundary_homology(&trace).map_err(|e| e.to_string())?;
    let betti = betti_sanity(&trace);
    let report = HomologyReportDto::new(&boundary, &betti).map_err(|e| e.to_string())?;
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => {
            let mut s = format!(
                "H1(boundary) = {}\nb2 = {}, b1(boundary) = {}, form rank = {}\nduality: {}\nconsistent: {}\n",
                report.h1.display,
                report.b2,
                report.b1_boundary,
                report.form_rank,
                rows_display(&report.duality),
                report.consistent,
            );
            for line in &report.observations {
                s.push_str(line);
                s.push('\n');
            }
            s
        }
    };
    Ok((text, 0))
}

fn run_variation(input: Option<&Path>, format: Option<Format>) -> Result<(String, i32), String> {
    let dto: VariationDto = parse_json(&read_source(input)?)?;
    let variation = Variation::try_from(dto).map_err(|e| e.to_string())?;
    let poincare = variation.is_poincare();
    let (torelli, induced, skew) = if poincare {
        let torelli = variation.is_torelli().map_err(|e| e.to_string())?;
        let induced = variation
            .induced_automorphism()
            .map_err(|e| e.to_string())?
            .to_i64_rows()
            .map_err(|e| e.to_string())?;
        let skew = if torelli {
            let form = skew_from_variation(&variation).map_err(|e| e.to_string())?;
            Some(
                form.canonical_matrix()
                    .to_i64_rows()
                    .map_err(|e| e.to_string())?,
            )
        } else {
            None
        };
        (Some(torelli), Some(induced), skew)
    } else {
        (None, None, None)
    };
    let report = VariationReportDto {
        schema: SCHEMA.to_string(),
        poincare,
        torelli,
        induced_automorphism: induced,
        skew_form: skew,
    };
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => {
            let mut s = format!("poincare: {poincare}\n");
            if let Some(t) = report.torelli {
                s.push_str(&format!("torelli: {t}\n"));
            }
            if let Some(a) = &report.induced_automorphism {
                s.push_str(&format!("induced automorphism: {}\n", rows_display(a)));
            }
            if let Some(f) = &report.skew_form {
                s.push_str(&format!("skew form: {}\n", rows_display(f)));
            }
            s
        }
    };
    Ok((text, 0))
}

fn run_torelli(input: Option<&Path>, format: Option<Format>) -> Result<(String, i32), String> {
    let trace = load_trace(input)?;
    let boundary = boundary_homology(&trace).map_err(|e| e.to_string())?;
    let b1 = boundary.b1();
    let rank = b1 * b1.saturating_sub(1) / 2;
    let mut generators = Vec::new();
    for i in 0..b1 {
        for j in (i + 1)..b1 {
            let form = SkewForm::wedge(b1, i, j, IntMatrix::identity(b1))
                .map_err(|e| e.to_string())?;
            let variation = variation_from_skew(&form, &trace).map_err(|e| e.to_string())?;
            generators.push(TorelliGeneratorDto {
                wedge: [i, j],
                matrix: variation
                    .matrix()
                    .to_i64_rows()
                    .map_err(|e| e.to_string())?,
            });
        }
    }
    let report = TorelliReportDto {
        schema: SCHEMA.to_string(),
        b1_boundary: b1,
        torelli_rank: rank,
        h1: GroupDto {
            free_rank: boundary.h1.free_rank,
            torsion: boundary
                .h1
                .torsion
                .iter()
                .map(|t| i64::try_from(t).map_err(|_| "entry overflow".to_string()))
                .collect::<Result<_, _>>()?,
            display: boundary.h1.to_string(),
        },
        generators,
    };
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => {
            let mut s = format!(
                "H1(boundary) = {}\nb1(boundary) = {}\ntorelli rank = {}\n",
                report.h1.display, report.b1_boundary, report.torelli_rank,
            );
            for g in &report.generators {
                s.push_str(&format!(
                    "generator e{}^e{}: {}\n",
                    g.wedge[0],
                    g.wedge[1],
                    rows_display(&g.matrix)
                ));
            }
            s
        }
    };
    Ok((text, 0))
}

fn certificate_report(
    certificate: &Certificate,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    let report = CertificateDto::new(certificate).map_err(|e| e.to_string())?;
    let code = if report.failure_reason.is_some() { 1 } else { 0 };
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => match &report.failure_reason {
            Some(reason) => format!(
                "hypotheses not satisfied: {reason}\nb1(boundary) = {}, torelli rank = {}\n",
                report.b1_boundary, report.torelli_rank,
            ),
            None => format!(
                "d = {}, v1 = {}, v2 = {}\nb1(boundary) = {}, torelli rank = {}\ninfinitely many nonsmoothable: {}\nall nontrivial nonsmoothable: {}\n",
                report.d.expect("successful certificate has d"),
                vec_display(report.v1.as_ref().expect("successful certificate has v1")),
                vec_display(report.v2.as_ref().expect("successful certificate has v2")),
                report.b1_boundary,
                report.torelli_rank,
                report.infinitely_many_nonsmoothable,
                report.all_nontrivial_nonsmoothable,
            ),
        },
    };
    Ok((text, code))
}

fn run_certify(
    input: Option<&Path>,
    family: Option<Family>,
    n: Option<i64>,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    let certificate = match family {
        Some(Family::Xn) => {
            let n = require_n(n)?;
            stein_certify(&xn_front(n)).map_err(|e| e.to_string())?
        }
        Some(Family::Zn) => {
            if n.is_some() {
                return Err("the zn fixture takes no --n parameter".into());
            }
            let (trace, cap) = z_fixture();
            let input = CertificateInput {
                c1_restriction: cap.basic_class_restriction.clone(),
                invariant_nonzero: true,
                cap,
                source: CertificateSource::Explicit,
                trace,
            };
            certify(&input).map_err(|e| e.to_string())?
        }
        None => {
            if n.is_some() {
                return Err("--n needs --family".into());
            }
            let dto: CertificateInputDto = parse_json(&read_source(input)?)?;
            let input = CertificateInput::try_from(dto).map_err(|e| e.to_string())?;
            certify(&input).map_err(|e| e.to_string())?
        }
    };
    certificate_report(&certificate, format)
}

fn run_stein_certify(
    input: Option<&Path>,
    family: Option<Family>,
    n: Option<i64>,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    let front = match family {
        Some(Family::Xn) => xn_front(require_n(n)?),
        Some(Family::Zn) => return Err("the zn fixture has no Legendrian front".into()),
        None => {
            if n.is_some() {
                return Err("--n needs --family".into());
            }
            load_front(&read_source(input)?)?
        }
    };
    let certificate = stein_certify(&front).map_err(|e| e.to_string())?;
    certificate_report(&certificate, format)
}

fn run_legendrian(
    input: Option<&Path>,
    family: Option<Family>,
    n: Option<i64>,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    let front = match family {
        Some(Family::Xn) => xn_front(require_n(n)?),
        Some(Family::Zn) => return Err("the zn fixture has no Legendrian front".into()),
        None => {
            if n.is_some() {
                return Err("--n needs --family".into());
            }
            load_front(&read_source(input)?)?
        }
    };
    let trace = stein_trace(&front).map_err(|e| e.to_string())?;
    let c1 = chern_class(&front).map_err(|e| e.to_string())?;
    let mut components = Vec::new();
    let labels = trace.labels().map(|l| l.to_vec()).unwrap_or_default();
    for index in 0..front.component_count() {
        let inv = classical_invariants(&front, index).map_err(|e| e.to_string())?;
        components.push(ComponentReportDto {
            label: labels
                .get(index)
                .cloned()
                .unwrap_or_else(|| format!("K{}", index + 1)),
            tb: inv.tb,
            rot: inv.rot,
            writhe: inv.writhe,
            crossings: inv.crossings,
            left_cusps: inv.left_cusps,
            right_cusps: inv.right_cusps,
            up_cusps: inv.up_cusps,
            down_cusps: inv.down_cusps,
        });
    }
    let report = LegendrianReportDto {
        schema: SCHEMA.to_string(),
        components,
        trace: TraceDto::try_from(&trace).map_err(|e| e.to_string())?,
        chern_class: c1
            .iter()
            .map(|x| i64::try_from(x).map_err(|_| "entry overflow".to_string()))
            .collect::<Result<_, _>>()?,
    };
    let text = match pick(format, Format::Json) {
        Format::Json => pretty(&report)?,
        Format::Text => {
            let mut s = String::new();
            for c in &report.components {
                s.push_str(&format!(
                    "{}: tb = {}, rot = {}, writhe = {}, crossings = {}, cusps L/R = {}/{}\n",
                    c.label, c.tb, c.rot, c.writhe, c.crossings, c.left_cusps, c.right_cusps,
                ));
            }
            s.push_str(&format!(
                "linking: {}\nframings: {}\nc1 = {}\n",
                rows_display(&report.trace.linking),
                vec_display(&report.trace.framings),
                vec_display(&report.chern_class),
            ));
            s
        }
    };
    Ok((text, 0))
}

fn run_sw(
    family: Option<Family>,
    n: &str,
    check_distinct: bool,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    if family == Some(Family::Xn) {
        return Err("the Seiberg–Witten series is computed for the zn family".into());
    }
    let (a, b) = parse_range(n)?;
    let elements: Vec<_> = (a..=b).map(sw_family).collect();
    if check_distinct {
        let report = pairwise_distinct(&elements).map_err(|e| e.to_string())?;
        let code = if report.all_distinct { 0 } else { 1 };
        let dto = DistinctDto {
            schema: SCHEMA.to_string(),
            range: [a, b],
            all_distinct: report.all_distinct,
            equal_pairs: report
                .equal_pairs
                .iter()
                .map(|&(i, j)| [a + i as i64, a + j as i64])
                .collect(),
        };
        let text = match pick(format, Format::Text) {
            Format::Json => pretty(&dto)?,
            Format::Text => {
                if dto.all_distinct {
                    "all distinct\n".to_string()
                } else {
                    let pairs: Vec<String> = dto
                        .equal_pairs
                        .iter()
                        .map(|p| format!("({}, {})", p[0], p[1]))
                        .collect();
                    format!("collisions: {}\n", pairs.join(", "))
                }
            }
        };
        return Ok((text, code));
    }
    let dtos = elements
        .iter()
        .map(GroupRingDto::try_from)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let text = match pick(format, Format::Json) {
        Format::Json => {
            if a == b {
                pretty(&dtos[0])?
            } else {
                pretty(&SwListDto {
                    schema: SCHEMA.to_string(),
                    range: [a, b],
                    elements: dtos,
                })?
            }
        }
        Format::Text => {
            let mut s = String::new();
            for (offset, element) in elements.iter().enumerate() {
                s.push_str(&format!("n = {}: {}\n", a + offset as i64, element));
            }
            s
        }
    };
    Ok((text, 0))
}

fn run_distinguish(r: i64, m: i64, format: Option<Format>) -> Result<(String, i32), String> {
    let report = distinguish_boundaries(r, m).map_err(|e| e.to_string())?;
    let verdict = match report.verdict {
        DistinguishVerdict::Distinct => "distinct",
        DistinguishVerdict::Inconclusive => "inconclusive",
    };
    let code = match report.verdict {
        DistinguishVerdict::Distinct => 0,
        DistinguishVerdict::Inconclusive => 1,
    };
    let dto = DistinguishDto {
        schema: SCHEMA.to_string(),
        r: report.r,
        m: report.m,
        n_r: report.n_r,
        n_m: report.n_m,
        genus_upper: report.genus_upper,
        genus_lower: report.genus_lower,
        verdict: verdict.to_string(),
    };
    let text = match pick(format, Format::Text) {
        Format::Json => pretty(&dto)?,
        Format::Text => match report.verdict {
            DistinguishVerdict::Distinct => format!(
                "Distinct: upper {} < lower {}\n",
                dto.genus_upper, dto.genus_lower
            ),
            DistinguishVerdict::Inconclusive => format!(
                "Inconclusive: upper {} >= lower {}\n",
                dto.genus_upper, dto.genus_lower
            ),
        },
    };
    Ok((text, code))
}

fn run_dehn_twist(
    input: Option<&Path>,
    b1: Option<i64>,
    prime: bool,
    t3: bool,
    seifert_t2: bool,
    format: Option<Format>,
) -> Result<(String, i32), String> {
    let profile = match input {
        Some(path) => {
            let dto: ProfileDto = parse_json(&read_source(Some(path))?)?;
            BoundaryProfile::try_from(dto).map_err(|e| e.to_string())?
        }
        None => BoundaryProfile {
            b1: b1.expect("clap enforces --b1 without --input"),
            is_prime: prime,
            is_t3: t3,
            seifert_over_t2: seifert_t2,
        },
    };
    let verdict = dehn_twist_realizability(&profile).map_err(|e| e.to_string())?;
    let verdict_text = match verdict {
        RealizabilityVerdict::Realizable => "realizable",
        RealizabilityVerdict::NotRealizable => "not realizable",
        RealizabilityVerdict::OutOfScope => "out of scope",
    };
    let dto = DehnTwistDto {
        schema: SCHEMA.to_string(),
        b1: profile.b1,
        is_prime: profile.is_prime,
        is_t3: profile.is_t3,
        seifert_over_t2: profile.seifert_over_t2,
        verdict: verdict_text.to_string(),
    };
    let text = match pick(format, Format::Text) {
        Format::Json => pretty(&dto)?,
        Format::Text => format!("{verdict_text}\n"),
    };
    Ok((text, 0))
}
