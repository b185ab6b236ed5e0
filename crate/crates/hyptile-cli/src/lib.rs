//! Command-line front end: parse angle expressions, dispatch to the
//! solvers and builders, write SVG or JSON.
//!
//! Exit codes: 0 success, 1 domain errors (impossible triangles/polygons,
//! bad geometry parameters), 2 usage errors (unknown flags, malformed
//! expressions). Every error path prints exactly one line on stderr.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyptile::disk::{midpoint, radial_point, rotate, HPoint};
use hyptile::polygon::{regular_polygon_geometry, RegularPolygonSpec};
use hyptile::render::{
    edge_arc_styled, export_polygon_json, export_tiling_json, polygon_scene, render_svg, sig9,
    tiling_scene, Primitive, RenderOptions, Scene, Style,
};
use hyptile::tiling::generate_tiling_with_cap;
use hyptile::trig::{angle_from_sides, defect, right_triangle_solve, side_from_angles, Triangle};
use serde::Deserialize;
use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

/// Errors from parsing an angle expression.
///
/// Grammar: decimal literal | "pi" | "pi/N" | "M*pi/N" with integers
/// M, N ≠ 0; the value must land in (0, π). Whitespace is ignored.
#[derive(Debug, Clone, PartialEq)]
pub enum AngleError {
    Parse { message: String, position: usize },
    Domain(String),
}

impl fmt::Display for AngleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleError::Parse { message, position } => {
                write!(f, "parse error at position {position}: {message}")
            }
            AngleError::Domain(message) => write!(f, "{message}"),
        }
    }
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> AngleError {
        AngleError::Parse {
            message: message.into(),
            position: self.pos,
        }
    }

    fn expect_pi(&mut self) -> Result<(), AngleError> {
        if self.chars.get(self.pos) == Some(&'p') && self.chars.get(self.pos + 1) == Some(&'i') {
            self.pos += 2;
            Ok(())
        } else {
            Err(self.error("expected \"pi\""))
        }
    }

    fn integer(&mut self) -> Result<i64, AngleError> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let token: String = self.chars[start..self.pos].iter().collect();
        token.parse::<i64>().map_err(|_| AngleError::Parse {
            message: format!("expected an integer, found {token:?}"),
            position: start,
        })
    }

    /// A numeric token: sign, digits, optional fractional part.
    fn number_token(&mut self) -> (usize, String) {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        (start, self.chars[start..self.pos].iter().collect())
    }
}

/// Parse an angle in radians from a decimal literal or a π-fraction.
pub fn parse_angle(text: &str) -> Result<f64, AngleError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    if s.peek().is_none() {
        return Err(s.error("empty angle expression"));
    }
    let value = if s.peek() == Some('p') {
        s.expect_pi()?;
        pi_fraction(&mut s, 1)?
    } else {
        let (start, token) = s.number_token();
        if token.is_empty() {
            return Err(s.error(format!("unexpected character {:?}", s.peek().unwrap())));
        }
        s.skip_ws();
        if s.peek() == Some('*') {
            let m: i64 = token.parse().map_err(|_| AngleError::Parse {
                message: format!("multiplier {token:?} must be an integer"),
                position: start,
            })?;
            if m == 0 {
                return Err(AngleError::Parse {
                    message: "multiplier must be nonzero".into(),
                    position: start,
                });
            }
            s.pos += 1; // consume '*'
            s.skip_ws();
            s.expect_pi()?;
            pi_fraction(&mut s, m)?
        } else {
            token.parse::<f64>().map_err(|_| AngleError::Parse {
                message: format!("invalid decimal literal {token:?}"),
                position: start,
            })?
        }
    };
    s.skip_ws();
    if let Some(c) = s.peek() {
        return Err(s.error(format!("unexpected trailing character {c:?}")));
    }
    if !(value > 0.0 && value < PI) {
        return Err(AngleError::Domain(format!(
            "angle {value} is outside (0, pi) (from {:?})",
            text.trim()
        )));
    }
    Ok(value)
}

fn pi_fraction(s: &mut Scanner, numerator: i64) -> Result<f64, AngleError> {
    s.skip_ws();
    if s.peek() == Some('/') {
        s.pos += 1;
        s.skip_ws();
        let start = s.pos;
        let n = s.integer()?;
        if n == 0 {
            return Err(AngleError::Parse {
                message: "denominator must be nonzero".into(),
                position: start,
            });
        }
        Ok(numerator as f64 * PI / n as f64)
    } else if numerator == 1 {
        Ok(PI)
    } else {
        Err(s.error("expected \"/\" after \"M*pi\""))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hyptile",
    version,
    about = "Hyperbolic triangles, regular polygons and tilings in the Poincaré disk",
    disable_help_subcommand = true
)]
struct Cli {
    /// JSON file with default style options (flags override it)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(flatten)]
    style: StyleArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Default)]
struct StyleArgs {
    /// Output image size in pixels
    #[arg(long, global = true, value_name = "PX")]
    size_px: Option<u32>,
    /// Margin around the unit disk, in pixels
    #[arg(long, global = true, value_name = "PX")]
    margin: Option<f64>,
    /// Stroke width in pixels
    #[arg(long, global = true, value_name = "W")]
    stroke_width: Option<f64>,
    /// Decimal places for SVG coordinates
    #[arg(long, global = true, value_name = "N")]
    precision: Option<usize>,
    /// Stroke color
    #[arg(long, global = true, value_name = "COLOR")]
    color: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a hyperbolic triangle from angles, sides, or right-triangle data
    SolveTriangle(SolveTriangleArgs),
    /// Construct a regular polygon from its half interior angle
    Polygon(PolygonArgs),
    /// Tile the disk by reflecting a regular polygon across its edges
    Tiling(TilingArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("data").required(true).args(["angles", "sides", "right"]))]
struct SolveTriangleArgs {
    /// Three angles (radians or pi-fractions), opposite sides a, b, c
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    angles: Option<Vec<String>>,
    /// Three side lengths
    #[arg(long, num_args = 3, value_names = ["a", "b", "c"])]
    sides: Option<Vec<f64>>,
    /// Right triangle mode: beta = pi/2, give --alpha and --gamma
    #[arg(long)]
    right: bool,
    #[arg(long, requires = "right", value_name = "ANGLE")]
    alpha: Option<String>,
    #[arg(long, requires = "right", value_name = "ANGLE")]
    gamma: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PolygonArgs {
    /// Number of sides p >= 3
    #[arg(long, value_name = "P")]
    sides: u32,
    /// Half of the interior angle (radians or pi-fraction)
    #[arg(long, value_name = "ANGLE")]
    half_angle: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TilingArgs {
    /// Number of sides p >= 3
    #[arg(long, value_name = "P")]
    sides: u32,
    /// Half of the interior angle; 2pi must be an integer multiple of 2*angle
    #[arg(long, value_name = "ANGLE")]
    half_angle: String,
    /// Reflection generations to expand
    #[arg(long, default_value_t = 1)]
    depth: u32,
    /// Cap on the reflection depth
    #[arg(long, default_value_t = hyptile::tiling::DEFAULT_DEPTH_CAP)]
    max_depth: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format; defaults to the --out extension, then svg
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output path (default: standard output)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Svg,
    Json,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if let Some(f) = self.format {
            return f;
        }
        match self.out.as_deref().and_then(Path::extension) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Svg,
        }
    }
}

/// Style defaults read from --config; every field optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    size_px: Option<u32>,
    margin: Option<f64>,
    stroke_width: Option<f64>,
    precision: Option<usize>,
    color: Option<String>,
}

struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn domain(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

fn angle_error(e: AngleError, flag: &str) -> CliError {
    match e {
        AngleError::Parse { .. } => CliError::usage(format!("{flag}: {e}")),
        AngleError::Domain(_) => CliError::domain(format!("{flag}: {e}")),
    }
}

fn resolved_options(style: &StyleArgs, config: &FileConfig) -> (RenderOptions, Style) {
    let defaults = RenderOptions::default();
    let options = RenderOptions {
        size_px: style.size_px.or(config.size_px).unwrap_or(defaults.size_px),
        margin: style.margin.or(config.margin).unwrap_or(defaults.margin),
        stroke_width: style
            .stroke_width
            .or(config.stroke_width)
            .unwrap_or(defaults.stroke_width),
        precision: style
            .precision
            .or(config.precision)
            .unwrap_or(defaults.precision),
    };
    let color = style
        .color
        .clone()
        .or_else(|| config.color.clone())
        .unwrap_or_else(|| Style::default().color);
    (
        options,
        Style {
            color,
            width: None,
        },
    )
}

/// Place a solved triangle in the disk: vertex A at the origin, B on the
/// positive x-axis at distance c, C at distance b under the angle alpha.
pub fn realize_triangle(t: &Triangle) -> [HPoint; 3] {
    let a = HPoint::ORIGIN;
    let b = radial_point(t.c).expect("side lengths are nonnegative");
    let c = rotate(&radial_point(t.b).expect("side lengths are nonnegative"), t.alpha);
    [a, b, c]
}

fn triangle_scene(t: &Triangle, style: &Style) -> Result<Scene, CliError> {
    let [a, b, c] = realize_triangle(t);
    let mut scene = Scene::new();
    for (p, q) in [(a, b), (b, c), (c, a)] {
        let m = midpoint(&p, &q);
        scene.push(
            edge_arc_styled(&p, &m, &q, style.clone())
                .map_err(|e| CliError::domain(e.to_string()))?,
        );
    }
    for v in [a, b, c] {
        scene.push(Primitive::Dot {
            at: v.vec(),
            style: style.clone(),
        });
    }
    Ok(scene)
}

fn triangle_json(t: &Triangle) -> String {
    let area = defect(t.alpha, t.beta, t.gamma).unwrap_or(0.0);
    format!(
        "{{\"a\":{},\"b\":{},\"c\":{},\"alpha\":{},\"beta\":{},\"gamma\":{},\"defect\":{}}}\n",
        sig9(t.a),
        sig9(t.b),
        sig9(t.c),
        sig9(t.alpha),
        sig9(t.beta),
        sig9(t.gamma),
        sig9(area),
    )
}

fn solve_triangle(args: &SolveTriangleArgs) -> Result<Triangle, CliError> {
    if let Some(exprs) = &args.angles {
        let mut parsed = [0.0; 3];
        for (slot, (expr, name)) in parsed
            .iter_mut()
            .zip(exprs.iter().zip(["A", "B", "C"]))
        {
            *slot = parse_angle(expr).map_err(|e| angle_error(e, name))?;
        }
        let [alpha, beta, gamma] = parsed;
        let a = side_from_angles(alpha, beta, gamma).map_err(|e| CliError::domain(e.to_string()))?;
        let b = side_from_angles(beta, gamma, alpha).map_err(|e| CliError::domain(e.to_string()))?;
        let c = side_from_angles(gamma, alpha, beta).map_err(|e| CliError::domain(e.to_string()))?;
        Ok(Triangle {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    } else if let Some(sides) = &args.sides {
        let (a, b, c) = (sides[0], sides[1], sides[2]);
        let alpha = angle_from_sides(b, c, a).map_err(|e| CliError::domain(e.to_string()))?;
        let beta = angle_from_sides(c, a, b).map_err(|e| CliError::domain(e.to_string()))?;
        let gamma = angle_from_sides(a, b, c).map_err(|e| CliError::domain(e.to_string()))?;
        Ok(Triangle {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    } else {
        let alpha = args
            .alpha
            .as_deref()
            .ok_or_else(|| CliError::usage("--right needs --alpha and --gamma"))?;
        let gamma = args
            .gamma
            .as_deref()
            .ok_or_else(|| CliError::usage("--right needs --alpha and --gamma"))?;
        let alpha = parse_angle(alpha).map_err(|e| angle_error(e, "--alpha"))?;
        let gamma = parse_angle(gamma).map_err(|e| angle_error(e, "--gamma"))?;
        right_triangle_solve(alpha, gamma).map_err(|e| CliError::domain(e.to_string()))
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::domain(format!("cannot read config {path:?}: {e}")))?;
            serde_json::from_str::<FileConfig>(&text)
                .map_err(|e| CliError::domain(format!("bad config {path:?}: {e}")))?
        }
        None => FileConfig::default(),
    };
    let (options, style) = resolved_options(&cli.style, &config);

    let (payload, out_path) = match &cli.command {
        Command::SolveTriangle(args) => {
            let triangle = solve_triangle(args)?;
            let payload = match args.output.format() {
                Format::Json => triangle_json(&triangle),
                Format::Svg => {
                    let scene = triangle_scene(&triangle, &style)?;
                    render_svg(&scene, &options).map_err(|e| CliError::domain(e.to_string()))?
                }
            };
            (payload, args.output.out.clone())
        }
        Command::Polygon(args) => {
            let alpha =
                parse_angle(&args.half_angle).map_err(|e| angle_error(e, "--half-angle"))?;
            let spec = RegularPolygonSpec::new(args.sides, alpha)
                .map_err(|e| CliError::domain(e.to_string()))?;
            let geometry = regular_polygon_geometry(&spec);
            let payload = match args.output.format() {
                Format::Json => export_polygon_json(&spec, &geometry),
                Format::Svg => {
                    let scene = polygon_scene(&geometry, &style)
                        .map_err(|e| CliError::domain(e.to_string()))?;
                    render_svg(&scene, &options).map_err(|e| CliError::domain(e.to_string()))?
                }
            };
            (payload, args.output.out.clone())
        }
        Command::Tiling(args) => {
            let alpha =
                parse_angle(&args.half_angle).map_err(|e| angle_error(e, "--half-angle"))?;
            let spec = RegularPolygonSpec::new(args.sides, alpha)
                .map_err(|e| CliError::domain(e.to_string()))?;
            let tiling = generate_tiling_with_cap(&spec, args.depth, args.max_depth)
                .map_err(|e| CliError::domain(e.to_string()))?;
            let payload = match args.output.format() {
                Format::Json => export_tiling_json(&tiling),
                Format::Svg => {
                    let scene = tiling_scene(&tiling, &style)
                        .map_err(|e| CliError::domain(e.to_string()))?;
                    render_svg(&scene, &options).map_err(|e| CliError::domain(e.to_string()))?
                }
            };
            (payload, args.output.out.clone())
        }
    };

    match out_path {
        Some(path) => std::fs::write(&path, payload)
            .map_err(|e| CliError::domain(format!("cannot write {path:?}: {e}"))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn diagnostic(message: &str) {
    let one_line = message.replace('\n', "; ");
    if std::env::var_os("HYPTILE_NO_COLOR").is_some() {
        eprintln!("error: {one_line}");
    } else {
        eprintln!("\u{1b}[31merror:\u{1b}[0m {one_line}");
    }
}

/// Parse argv, run the selected command, and return the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    let rendered = e.render().to_string();
                    let first = rendered
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("invalid usage");
                    diagnostic(first.trim_start_matches("error: "));
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            diagnostic(&e.message);
            e.code
        }
    }
}
