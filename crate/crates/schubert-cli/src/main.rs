//! Command-line front end: Iwasawa factorization, chart coordinate
//! conversion, seeded verification suites, and CSV grids of the change of
//! variables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input or flags,
//! 3 tolerance violation (determinant, conditioning, unitarity), 4 point
//! outside the generic locus, 5 non-reduced word.

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use schubert::coords::{closed_form_sl3, z_to_zeta, zeta_to_z, ChartPoint};
use schubert::verify::{self, Suite, VerifyConfig};
use schubert::{iwasawa_factor, Error, SquareMatrix, Tolerances, Word};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_TOLERANCE: u8 = 3;
const EXIT_NON_GENERIC: u8 = 4;
const EXIT_NON_REDUCED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Iwasawa factorization and Schubert-cell coordinate changes for SL(n,C)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a determinant-1 matrix as g = k·a·n
    Factor(FactorArgs),
    /// Convert between holomorphic and Lu coordinates on a Schubert cell
    ChangeCoords(ChangeCoordsArgs),
    /// Run a deterministic verification suite
    Verify(VerifyArgs),
    /// Emit a CSV grid of coordinate-change samples
    Grid(GridArgs),
}

#[derive(Args, Clone)]
struct TolFlags {
    /// Determinant defect tolerance
    #[arg(long = "tol-det", value_name = "X")]
    tol_det: Option<f64>,
    /// Unitarity defect tolerance
    #[arg(long = "tol-unitary", value_name = "X")]
    tol_unitary: Option<f64>,
    /// Relative reconstruction tolerance
    #[arg(long = "tol-recon", value_name = "X")]
    tol_recon: Option<f64>,
    /// Zero-entry tolerance for membership and coset tests
    #[arg(long = "tol-coset", value_name = "X")]
    tol_coset: Option<f64>,
    /// Entrywise value-comparison tolerance
    #[arg(long = "tol-value", value_name = "X")]
    tol_value: Option<f64>,
}

impl TolFlags {
    fn build(&self) -> Tolerances {
        let mut tol = Tolerances::default();
        if let Some(x) = self.tol_det {
            tol.det = x;
        }
        if let Some(x) = self.tol_unitary {
            tol.unitary = x;
        }
        if let Some(x) = self.tol_recon {
            tol.recon = x;
        }
        if let Some(x) = self.tol_coset {
            tol.coset = x;
        }
        if let Some(x) = self.tol_value {
            tol.value = x;
        }
        tol
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Holomorphic coordinates to Lu coordinates
    ZetaToZ,
    /// Lu coordinates to holomorphic coordinates
    ZToZeta,
}

#[derive(Args)]
struct FactorArgs {
    /// Input matrix JSON ({"dim": n, "re": [[..]], "im": [[..]]}), or - for stdin
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    /// Output destination, or - for stdout
    #[arg(long = "out", value_name = "FILE", default_value = "-")]
    out: String,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[command(flatten)]
    tol: TolFlags,
}

#[derive(Args)]
struct ChangeCoordsArgs {
    /// Conversion direction
    #[arg(value_enum)]
    direction: Direction,
    /// Input chart point JSON ({"n": n, "word": [..], "coords": [{"re":..,"im":..},..]})
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    #[arg(long = "out", value_name = "FILE", default_value = "-")]
    out: String,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[command(flatten)]
    tol: TolFlags,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run
    #[arg(value_name = "SUITE")]
    suite: String,
    /// Rank: matrices are n×n
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Word letters, comma separated (e.g. 1,2,1)
    #[arg(long, value_name = "LETTERS", default_value = "1,2,1")]
    word: String,
    /// PRNG seed (ChaCha8)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per check
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long = "out", value_name = "FILE", default_value = "-")]
    out: String,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
    #[command(flatten)]
    tol: TolFlags,
}

#[derive(Args)]
struct GridArgs {
    /// Rank: matrices are n×n
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Word letters, comma separated
    #[arg(long, value_name = "LETTERS")]
    word: String,
    /// Base coordinates as re:im pairs, comma separated (default all zero)
    #[arg(long, value_name = "COORDS")]
    base: Option<String>,
    /// Grid axis spec slot:part:start:stop:steps (part is re or im);
    /// repeat for more axes, first axis is the outer loop
    #[arg(long, value_name = "SPEC", required = true)]
    vary: Vec<String>,
    #[arg(long, value_enum, default_value = "zeta-to-z")]
    direction: Direction,
    #[arg(long = "out", value_name = "FILE", default_value = "-")]
    out: String,
    #[command(flatten)]
    tol: TolFlags,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotFinite
            | Error::Singular
            | Error::IllConditioned(_)
            | Error::NotSpecial(_)
            | Error::NotUnitary(_)
            | Error::Membership { .. } => EXIT_TOLERANCE,
            Error::OutsideBigCell { .. } | Error::NonGenericSlot { .. } => EXIT_NON_GENERIC,
            Error::NonReducedWord => EXIT_NON_REDUCED,
            Error::LetterOutOfRange { .. }
            | Error::WordMismatch
            | Error::FlavorMismatch { .. }
            | Error::WordShape(_)
            | Error::InvalidInput(_) => EXIT_BAD_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Factor(args) => cmd_factor(args),
        Command::ChangeCoords(args) => cmd_change_coords(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Grid(args) => cmd_grid(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("reading {path}: {e}")))
    }
}

fn write_output(path: &str, content: &str) -> Result<(), Failure> {
    if path == "-" {
        std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("writing stdout: {e}")))
    } else {
        fs::write(path, content)
            .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("writing {path}: {e}")))
    }
}

fn parse_word(s: &str, n: usize) -> Result<Word, Failure> {
    let letters = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|e| {
                    Failure::new(EXIT_BAD_INPUT, format!("bad word letter {part:?}: {e}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Word::new(n, letters).map_err(Failure::from)
}

fn fmt_complex(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

fn fmt_point(pt: &ChartPoint) -> String {
    let coords: Vec<String> = pt.coords().iter().map(|&z| fmt_complex(z)).collect();
    format!("({})", coords.join(", "))
}

fn cmd_factor(args: FactorArgs) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let g: SquareMatrix = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("parsing matrix: {e}")))?;
    let tol = args.tol.build();
    let factors = iwasawa_factor(&g, &tol)?;
    let rendered = match args.output {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&factors)
                .map_err(|e| Failure::new(EXIT_BAD_INPUT, e.to_string()))?;
            s.push('\n');
            s
        }
        OutputFormat::Human => format!("k =\n{}a =\n{}n =\n{}", factors.k, factors.a, factors.n),
    };
    write_output(&args.out, &rendered)?;
    Ok(0)
}

/// Raw chart-point schema; parsed by hand so that a non-reduced word can be
/// told apart from malformed JSON (they exit with different codes).
#[derive(serde::Deserialize)]
struct RawPoint {
    n: usize,
    word: Vec<usize>,
    coords: Vec<RawCoord>,
}

#[derive(serde::Deserialize)]
struct RawCoord {
    re: f64,
    im: f64,
}

fn parse_point(text: &str) -> Result<ChartPoint, Failure> {
    let raw: RawPoint = serde_json::from_str(text)
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("parsing chart point: {e}")))?;
    let word = Word::new(raw.n, raw.word).map_err(Failure::from)?;
    if !word.is_reduced() {
        return Err(Failure::from(Error::NonReducedWord));
    }
    let coords = raw
        .coords
        .iter()
        .map(|c| Complex64::new(c.re, c.im))
        .collect();
    ChartPoint::new(word, coords).map_err(Failure::from)
}

fn is_sl3_longest(pt: &ChartPoint) -> bool {
    pt.word().n() == 3 && pt.word().letters() == [1, 2, 1]
}

fn cmd_change_coords(args: ChangeCoordsArgs) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let input = parse_point(&text)?;
    let tol = args.tol.build();
    let output = match args.direction {
        Direction::ZetaToZ => zeta_to_z(&input, &tol)?,
        Direction::ZToZeta => z_to_zeta(&input, &tol)?,
    };

    // For the SL(3) longest word the closed form doubles as a cross-check:
    // forward it validates the output, backward it validates the input.
    let closed = if is_sl3_longest(&input) {
        let (reference, against) = match args.direction {
            Direction::ZetaToZ => (closed_form_sl3(&input)?, &output),
            Direction::ZToZeta => (closed_form_sl3(&output)?, &input),
        };
        let dev = reference.max_abs_diff(against);
        Some((reference, dev))
    } else {
        None
    };

    let rendered = match args.output {
        OutputFormat::Json => {
            let mut value = json!({ "point": &output });
            if let Some((reference, dev)) = &closed {
                value["closed_form"] = json!(reference);
                value["max_deviation"] = json!(dev);
            }
            let mut s = serde_json::to_string_pretty(&value)
                .map_err(|e| Failure::new(EXIT_BAD_INPUT, e.to_string()))?;
            s.push('\n');
            s
        }
        OutputFormat::Human => {
            let dir = match args.direction {
                Direction::ZetaToZ => "zeta-to-z",
                Direction::ZToZeta => "z-to-zeta",
            };
            let mut s = format!(
                "word: ({}) n={} direction: {dir}\ninput:  {}\noutput: {}\n",
                input
                    .word()
                    .letters()
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                input.word().n(),
                fmt_point(&input),
                fmt_point(&output),
            );
            if let Some((reference, dev)) = &closed {
                s.push_str(&format!(
                    "closed form: {}\nmax deviation: {:e}\n",
                    fmt_point(reference),
                    dev
                ));
            }
            s
        }
    };
    write_output(&args.out, &rendered)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let suite = Suite::parse(&args.suite).ok_or_else(|| {
        Failure::new(
            EXIT_BAD_INPUT,
            format!(
                "unknown suite {:?}; available: {}",
                args.suite,
                Suite::ALL
                    .iter()
                    .map(|s| s.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        )
    })?;
    if args.samples == 0 {
        return Err(Failure::new(EXIT_BAD_INPUT, "--samples must be at least 1"));
    }
    let word = parse_word(&args.word, args.n)?;
    let cfg = VerifyConfig {
        n: args.n,
        word,
        seed: args.seed,
        samples: args.samples,
        tol: args.tol.build(),
    };
    let report = verify::run(suite, &cfg)?;
    let rendered = match args.output {
        OutputFormat::Human => report.human(),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| Failure::new(EXIT_BAD_INPUT, e.to_string()))?;
            s.push('\n');
            s
        }
    };
    write_output(&args.out, &rendered)?;
    Ok(if report.pass { 0 } else { EXIT_VERIFY_FAILED })
}

struct Axis {
    slot: usize, // 0-based coordinate index
    imaginary: bool,
    values: Vec<f64>,
}

fn parse_axis(spec: &str, len: usize) -> Result<Axis, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 5 {
        return Err(Failure::new(
            EXIT_BAD_INPUT,
            format!("bad --vary spec {spec:?}; expected slot:part:start:stop:steps"),
        ));
    }
    let slot: usize = parts[0]
        .parse()
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("bad slot in {spec:?}: {e}")))?;
    if slot == 0 || slot > len {
        return Err(Failure::new(
            EXIT_BAD_INPUT,
            format!("slot {slot} out of range 1..={len}"),
        ));
    }
    let imaginary = match parts[1] {
        "re" => false,
        "im" => true,
        other => {
            return Err(Failure::new(
                EXIT_BAD_INPUT,
                format!("bad part {other:?} in {spec:?}; expected re or im"),
            ))
        }
    };
    let start: f64 = parts[2]
        .parse()
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("bad start in {spec:?}: {e}")))?;
    let stop: f64 = parts[3]
        .parse()
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("bad stop in {spec:?}: {e}")))?;
    let steps: usize = parts[4]
        .parse()
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("bad steps in {spec:?}: {e}")))?;
    if steps == 0 {
        return Err(Failure::new(EXIT_BAD_INPUT, "steps must be at least 1"));
    }
    let values = if steps == 1 {
        vec![start]
    } else {
        (0..steps)
            .map(|t| start + (stop - start) * t as f64 / (steps - 1) as f64)
            .collect()
    };
    Ok(Axis {
        slot: slot - 1,
        imaginary,
        values,
    })
}

fn parse_base(s: Option<&str>, len: usize) -> Result<Vec<Complex64>, Failure> {
    match s {
        None => Ok(vec![Complex64::new(0.0, 0.0); len]),
        Some(text) => {
            let coords: Vec<Complex64> = text
                .split(',')
                .map(|pair| {
                    let (re, im) = pair.split_once(':').ok_or_else(|| {
                        Failure::new(
                            EXIT_BAD_INPUT,
                            format!("bad base coordinate {pair:?}; expected re:im"),
                        )
                    })?;
                    let re: f64 = re.trim().parse().map_err(|e| {
                        Failure::new(EXIT_BAD_INPUT, format!("bad base {pair:?}: {e}"))
                    })?;
                    let im: f64 = im.trim().parse().map_err(|e| {
                        Failure::new(EXIT_BAD_INPUT, format!("bad base {pair:?}: {e}"))
                    })?;
                    Ok(Complex64::new(re, im))
                })
                .collect::<Result<_, Failure>>()?;
            if coords.len() != len {
                return Err(Failure::new(
                    EXIT_BAD_INPUT,
                    format!("expected {len} base coordinates, found {}", coords.len()),
                ));
            }
            Ok(coords)
        }
    }
}

/// Odometer step over the grid axes, last axis fastest; false when the
/// grid is exhausted.
fn advance(indices: &mut [usize], axes: &[Axis]) -> bool {
    for pos in (0..axes.len()).rev() {
        indices[pos] += 1;
        if indices[pos] < axes[pos].values.len() {
            return true;
        }
        indices[pos] = 0;
    }
    false
}

fn cmd_grid(args: GridArgs) -> Result<u8, Failure> {
    let word = parse_word(&args.word, args.n)?;
    if !word.is_reduced() {
        return Err(Failure::from(Error::NonReducedWord));
    }
    let len = word.len();
    let base = parse_base(args.base.as_deref(), len)?;
    let axes = args
        .vary
        .iter()
        .map(|spec| parse_axis(spec, len))
        .collect::<Result<Vec<_>, _>>()?;
    let tol = args.tol.build();

    let (in_name, out_name) = match args.direction {
        Direction::ZetaToZ => ("zeta", "z"),
        Direction::ZToZeta => ("z", "zeta"),
    };
    let mut csv = String::new();
    let mut header = Vec::new();
    for j in 1..=len {
        header.push(format!("{in_name}{j}_re"));
        header.push(format!("{in_name}{j}_im"));
    }
    for j in 1..=len {
        header.push(format!("{out_name}{j}_re"));
        header.push(format!("{out_name}{j}_im"));
    }
    header.push("status".to_string());
    csv.push_str(&header.join(","));
    csv.push('\n');

    // row-major over the axes: the first --vary is the outer loop
    let mut indices = vec![0usize; axes.len()];
    let mut saw_non_generic = false;
    loop {
        let mut coords = base.clone();
        for (axis, &idx) in axes.iter().zip(&indices) {
            let value = axis.values[idx];
            if axis.imaginary {
                coords[axis.slot].im = value;
            } else {
                coords[axis.slot].re = value;
            }
        }
        let pt = ChartPoint::new(word.clone(), coords.clone()).map_err(Failure::from)?;
        let converted = match args.direction {
            Direction::ZetaToZ => zeta_to_z(&pt, &tol).map(Some),
            Direction::ZToZeta => match z_to_zeta(&pt, &tol) {
                Ok(out) => Ok(Some(out)),
                Err(Error::NonGenericSlot { .. }) => Ok(None),
                Err(e) => Err(e),
            },
        }?;

        let mut row = Vec::with_capacity(4 * len + 1);
        for z in &coords {
            row.push(format!("{}", z.re));
            row.push(format!("{}", z.im));
        }
        match converted {
            Some(out) => {
                for z in out.coords() {
                    row.push(format!("{}", z.re));
                    row.push(format!("{}", z.im));
                }
                row.push("ok".to_string());
            }
            None => {
                saw_non_generic = true;
                for _ in 0..2 * len {
                    row.push(String::new());
                }
                row.push("nongeneric".to_string());
            }
        }
        csv.push_str(&row.join(","));
        csv.push('\n');

        if !advance(&mut indices, &axes) {
            break;
        }
    }

    write_output(&args.out, &csv)?;
    Ok(if saw_non_generic { EXIT_NON_GENERIC } else { 0 })
}
