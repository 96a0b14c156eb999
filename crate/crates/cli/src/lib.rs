//! Command-line front end. [`run`] parses arguments, executes one subcommand
//! and returns the process exit code: `0` success, `1` failed verification,
//! `2` bad input, `3` census budget exceeded.

pub mod document;
pub mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colored_quiver::oracle::{
    brute_force_orbits, budget_from_env, classify_pair, orbit_dimension_oracle, vector_span_dims,
};
use colored_quiver::{
    dim_enhanced_orbit, dim_nilpotent_orbit, dim_orbit_class, enhanced_catalog,
    enumerate_orbit_classes, minimal_marking, nilpotent_catalog, normalize, stabilizer_dimension,
    CyclicColor, Error, MarkedColoredPartition, OrbitLabel, OrbitRecord, Signature,
};
use serde::Serialize;
use serde_json::json;

use document::{LabelDocument, MatrixDocument};

#[derive(Parser, Debug)]
#[command(name = "colored-quiver", version, about = "Orbit calculus for colored nilpotent cones")]
struct Cli {
    /// Output format; `json` writes one record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List orbit labels for a signature with their dimensions.
    Enumerate(EnumerateArgs),
    /// Orbit and stabilizer dimensions of a label.
    Dim(LabelArgs),
    /// Normalize a marking to the colored n-bipartition of a class.
    Normalize(NormalizeArgs),
    /// Classify a marking, or a matrix pair given with --matrix.
    Classify(ClassifyArgs),
    /// Reduce a nonnegative marking to a minimal one.
    Minimal(LabelArgs),
    /// Compare a finite-field orbit census with the enumerated classes.
    Verify(VerifyArgs),
    /// Draw a marked colored partition.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
struct SignatureArgs {
    #[arg(long)]
    n: usize,
    /// Dimensions per color, e.g. `2,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    signature: Vec<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    signature: SignatureArgs,
    /// Restrict to pairs whose vector has this color.
    #[arg(long, conflicts_with = "nilpotent")]
    vector_color: Option<i64>,
    /// List nilpotent orbits only (no vector).
    #[arg(long)]
    nilpotent: bool,
}

#[derive(Args, Debug)]
struct LabelArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Row lengths, weakly decreasing.
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<usize>,
    /// Row colors.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    epsilon: Vec<i64>,
    /// Row marks; defaults to all zero.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Vec<i64>,
    /// Read a label document from a file, or `-` for stdin.
    #[arg(long, conflicts_with_all = ["n", "lambda", "epsilon", "mu"])]
    label: Option<PathBuf>,
    /// Class color of the vector.
    #[arg(long = "class", allow_hyphen_values = true)]
    class: Option<i64>,
}

#[derive(Args, Debug)]
struct NormalizeArgs {
    #[command(flatten)]
    label: LabelArgs,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    label: LabelArgs,
    /// Read a matrix document (blocks and vector) instead of a label.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    signature: SignatureArgs,
    /// Prime field order: 2, 3, 5 or 7.
    #[arg(long, default_value_t = 2)]
    field: u32,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(flatten)]
    label: LabelArgs,
    /// For n = 2, draw colors 0 and 1 as `+` and `-`.
    #[arg(long)]
    signs: bool,
}

enum Failure {
    /// The reader closed the output early; not an error.
    Closed,
    Input(String),
    Budget(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

struct Output<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn record(&mut self, value: &impl Serialize, text: impl FnOnce() -> String) -> Outcome {
        match self.format {
            Format::Json => {
                let line = serde_json::to_string(value).map_err(|e| Failure::Input(e.to_string()))?;
                writeln!(self.out, "{line}")?;
            }
            Format::Text => writeln!(self.out, "{}", text())?,
        }
        Ok(())
    }
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", json!({"error": "input", "message": e.to_string().trim()}));
            return 2;
        }
    };
    let mut output = Output {
        format: cli.format,
        out,
    };
    let result = match cli.command {
        Command::Enumerate(a) => enumerate(&a, &mut output),
        Command::Dim(a) => dim(&a, &mut output),
        Command::Normalize(a) => normalize_cmd(&a, &mut output),
        Command::Classify(a) => classify(&a, &mut output),
        Command::Minimal(a) => minimal(&a, &mut output),
        Command::Verify(a) => verify(&a, &mut output),
        Command::Render(a) => render_cmd(&a, &mut output),
    };
    match result {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "{}", json!({"error": "input", "message": message}));
            2
        }
        Err(Failure::Budget(message)) => {
            let _ = writeln!(err, "{}", json!({"error": "budget", "message": message}));
            3
        }
    }
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn signature(args: &SignatureArgs) -> Result<Signature, Failure> {
    if args.signature.len() != args.n {
        return Err(Failure::Input(format!(
            "signature needs {} entries, got {}",
            args.n,
            args.signature.len()
        )));
    }
    Ok(Signature::new(args.signature.clone())?)
}

fn load_label(args: &LabelArgs) -> Result<(MarkedColoredPartition, Option<CyclicColor>), Failure> {
    let (mcp, stored) = match &args.label {
        Some(path) => {
            let doc: LabelDocument = serde_json::from_str(&read_source(path)?)
                .map_err(|e| Failure::Input(format!("label document: {e}")))?;
            (doc.to_marking()?, doc.class()?)
        }
        None => {
            let n = args
                .n
                .ok_or_else(|| Failure::Input("--n is required without --label".into()))?;
            if args.epsilon.len() != args.lambda.len() {
                return Err(Failure::Input("--lambda and --epsilon differ in length".into()));
            }
            let marks = if args.mu.is_empty() {
                vec![0; args.lambda.len()]
            } else if args.mu.len() == args.lambda.len() {
                args.mu.clone()
            } else {
                return Err(Failure::Input("--mu and --lambda differ in length".into()));
            };
            let rows: Vec<_> = args
                .lambda
                .iter()
                .zip(&args.epsilon)
                .zip(&marks)
                .map(|((&l, &e), &m)| (l, e, m))
                .collect();
            (MarkedColoredPartition::from_rows(n, &rows)?, None)
        }
    };
    let class = match args.class {
        Some(m) => Some(CyclicColor::new(m, mcp.modulus())?),
        None => stored,
    };
    Ok((mcp, class))
}

/// The class to normalize into: explicit, else read off the marking, else 0.
fn class_for(mcp: &MarkedColoredPartition, class: Option<CyclicColor>) -> Result<CyclicColor, Failure> {
    if let Some(m) = class {
        return Ok(m);
    }
    if let Some(m) = mcp.classify().class_color {
        return Ok(m);
    }
    if mcp.marks().iter().all(|&m| m <= 0) {
        return Ok(CyclicColor::new(0, mcp.modulus())?);
    }
    Err(Failure::Input("positively marked rows lie in different classes; pass --class".into()))
}

fn label_text(mcp: &MarkedColoredPartition, class: Option<CyclicColor>) -> String {
    match class {
        Some(m) => format!("{mcp}; class={m}"),
        None => mcp.to_string(),
    }
}

fn enumerate(args: &EnumerateArgs, out: &mut Output) -> Outcome {
    let xi = signature(&args.signature)?;
    let records: Vec<OrbitRecord> = if args.nilpotent {
        nilpotent_catalog(&xi)
    } else if let Some(m) = args.vector_color {
        enhanced_catalog(&xi, CyclicColor::new(m, xi.modulus())?)?
    } else {
        enumerate_orbit_classes(&xi)
    };
    for record in records {
        let (mcp, class, zero) = match &record.label {
            OrbitLabel::Nilpotent(cp) => (MarkedColoredPartition::unmarked(cp.clone()), None, true),
            OrbitLabel::Enhanced(c) => {
                let mcp = match record.class_color {
                    Some(m) => c.representative(m)?,
                    None => c.default_representative(),
                };
                (mcp, record.class_color, c.is_zero_vector())
            }
        };
        let doc = LabelDocument::from_marking(&mcp, class);
        out.record(
            &json!({"label": doc, "dim": record.dim, "zero_vector": zero}),
            || format!("{}\t{}", record.dim, label_text(&mcp, class)),
        )?;
    }
    Ok(())
}

fn dim(args: &LabelArgs, out: &mut Output) -> Outcome {
    let (mcp, class) = load_label(args)?;
    let m = class_for(&mcp, class)?;
    let cqb = normalize(&mcp, m)?;
    let nilpotent = dim_nilpotent_orbit(mcp.base());
    let enhanced = dim_enhanced_orbit(&cqb)?;
    let stabilizer = stabilizer_dimension(mcp.base());
    out.record(
        &json!({
            "nilpotent_dim": nilpotent,
            "enhanced_dim": enhanced,
            "stabilizer_dim": stabilizer,
            "class_color": m.rep(),
        }),
        || format!("nilpotent: {nilpotent}\nenhanced: {enhanced}\nstabilizer: {stabilizer}"),
    )
}

fn normalize_cmd(args: &NormalizeArgs, out: &mut Output) -> Outcome {
    let (mcp, class) = load_label(&args.label)?;
    let m = class_for(&mcp, class)?;
    let cqb = normalize(&mcp, m)?;
    out.record(&LabelDocument::from_marking(&cqb, Some(m)), || label_text(&cqb, Some(m)))
}

fn classify(args: &ClassifyArgs, out: &mut Output) -> Outcome {
    if let Some(path) = &args.matrix {
        let doc: MatrixDocument = serde_json::from_str(&read_source(path)?)
            .map_err(|e| Failure::Input(format!("matrix document: {e}")))?;
        let (v, x) = doc.to_pair().map_err(Failure::Input)?;
        let class = classify_pair(&v, &x)?;
        let rep = class.default_representative();
        let color = v.color();
        let formula = dim_orbit_class(&class);
        let oracle = orbit_dimension_oracle(&v, &x);
        let (ev, fv) = vector_span_dims(&v, &x);
        return out.record(
            &json!({
                "label": LabelDocument::from_marking(&rep, color),
                "dim": formula,
                "oracle_dim": oracle,
                "span_dims": [ev, fv],
                "zero_vector": class.is_zero_vector(),
            }),
            || format!("{}\tdim={formula}\toracle={oracle}", label_text(&rep, color)),
        );
    }
    let (mcp, _) = load_label(&args.label)?;
    let c = mcp.classify();
    let class = c.class_color.map(CyclicColor::rep);
    out.record(
        &json!({
            "bipartition": c.is_bipartition,
            "k_bipartition": c.is_k_bipartition,
            "colored_k_bipartition": c.is_colored_k_bipartition,
            "generalized_k_bipartition": c.is_generalized_k_bipartition,
            "class_color": class,
        }),
        || {
            format!(
                "bipartition: {}\n{n}-bipartition: {}\ncolored {n}-bipartition: {}\ngeneralized {n}-bipartition: {}\nclass color: {}",
                c.is_bipartition,
                c.is_k_bipartition,
                c.is_colored_k_bipartition,
                c.is_generalized_k_bipartition,
                class.map_or("none".to_string(), |m| m.to_string()),
                n = mcp.modulus(),
            )
        },
    )
}

fn minimal(args: &LabelArgs, out: &mut Output) -> Outcome {
    let (mcp, class) = load_label(args)?;
    let reduced = minimal_marking(&mcp)?;
    out.record(&LabelDocument::from_marking(&reduced, class), || label_text(&reduced, class))
}

fn verify(args: &VerifyArgs, out: &mut Output) -> Outcome {
    let xi = signature(&args.signature)?;
    let census = brute_force_orbits(&xi, args.field, budget_from_env())?;
    let mut classes: Vec<_> = enumerate_orbit_classes(&xi)
        .into_iter()
        .filter_map(|r| match r.label {
            OrbitLabel::Enhanced(c) => Some(c),
            OrbitLabel::Nilpotent(_) => None,
        })
        .collect();
    classes.sort();
    let orbits = census.orbit_count();
    let matched = orbits == classes.len() && census.labels() == classes;
    out.record(
        &json!({
            "field": args.field,
            "orbits": orbits,
            "classes": classes.len(),
            "pairs": census.pairs,
            "group_order": census.group_order.to_string(),
            "match": matched,
        }),
        || {
            format!(
                "orbits: {orbits}, classes: {}, {}",
                classes.len(),
                if matched { "MATCH" } else { "MISMATCH" }
            )
        },
    )?;
    if matched {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn render_cmd(args: &RenderArgs, out: &mut Output) -> Outcome {
    let (mcp, _) = load_label(&args.label)?;
    if args.signs && mcp.modulus() != 2 {
        return Err(Failure::Input("--signs needs n = 2".into()));
    }
    let lines = render::render(&mcp, args.signs);
    out.record(&json!({ "lines": lines }), || lines.join("\n"))
}
