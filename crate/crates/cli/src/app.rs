use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratcubic::{implicitize_with, int, parse_scalar, EvalMode, ImplicitResult, Point2, ResolveOptions, Scalar};
use serde_json::{json, Value};

use crate::error::{combine_exit, CliError, EXIT_OK};
use crate::input::{Curve, CurveFile};
use crate::render::{render, RenderSpec, Viewport, DEFAULT_GRID};
use crate::report::{analyze_report, eval_report, implicitize_report, verify_report, Block};

#[derive(Debug, Parser)]
#[command(name = "ratcubic", version, about = "Exact implicitization of rational cubic Bezier curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Direct,
    Reduced,
}

impl From<ModeArg> for EvalMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Direct => EvalMode::Direct,
            ModeArg::Reduced => EvalMode::Reduced,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Curve file (JSON, version 1)
    pub file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Implicit evaluation strategy
    #[arg(long, value_enum, default_value = "direct")]
    pub mode: ModeArg,
    /// Subdivision parameter used for collinear control points
    #[arg(long, value_name = "RATIONAL")]
    pub subdivide_t: Option<String>,
    /// Append oracle cross-checks
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Implicit equation of every curve
    Implicitize(Common),
    /// Double point, its kind and the split lines
    Analyze(Common),
    /// Value and sign of the implicit form at a point
    Eval {
        #[command(flatten)]
        common: Common,
        /// Point as x,y
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// SVG sign field of the implicit form
    Render {
        #[command(flatten)]
        common: Common,
        /// Output path; several curves get an index suffix
        #[arg(long, short)]
        out: PathBuf,
        /// x0,y0,x1,y1 (default: control points plus 10%)
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<String>,
        /// WxH cells
        #[arg(long, default_value = "128x128")]
        grid: String,
        /// Mask split-line quadrants the curve segment never visits
        #[arg(long)]
        restrict: bool,
        /// Hide the dotted control polygon
        #[arg(long)]
        no_polygon: bool,
        /// Hide the split lines
        #[arg(long)]
        no_split: bool,
        /// Leave sign regions unshaded
        #[arg(long)]
        no_shade: bool,
    },
    /// Oracle cross-checks only
    Verify(Common),
}

fn scalar_list(s: &str, n: usize, what: &str) -> Result<Vec<Scalar>, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(CliError::Usage(format!("{what}: expected {n} comma-separated numbers")));
    }
    parts
        .iter()
        .map(|p| parse_scalar(p).map_err(|e| CliError::Usage(format!("{what}: {e}"))))
        .collect()
}

pub fn parse_point(s: &str) -> Result<Point2, CliError> {
    let v = scalar_list(s, 2, "--point")?;
    Ok(Point2::new(v[0].clone(), v[1].clone()))
}

pub fn parse_viewport(s: &str) -> Result<Viewport, CliError> {
    let v = scalar_list(s, 4, "--viewport")?;
    Viewport::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
}

pub fn parse_grid(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--grid: expected WxH, got {s}"));
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let w: usize = a.trim().parse().map_err(|_| bad())?;
    let h: usize = b.trim().parse().map_err(|_| bad())?;
    if w == 0 || h == 0 {
        return Err(bad());
    }
    Ok((w, h))
}

fn resolve_options(c: &Common) -> Result<ResolveOptions, CliError> {
    let mut opts = ResolveOptions::default();
    if let Some(t) = &c.subdivide_t {
        let t = parse_scalar(t).map_err(|e| CliError::Usage(format!("--subdivide-t: {e}")))?;
        if t <= int(0) || t >= int(1) {
            return Err(CliError::Usage("--subdivide-t must lie strictly between 0 and 1".into()));
        }
        opts.split = t;
    }
    Ok(opts)
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Implicitize(c) | Command::Analyze(c) | Command::Verify(c) => c,
        Command::Eval { common, .. } | Command::Render { common, .. } => common,
    }
}

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Implicitize(_) => "implicitize",
        Command::Analyze(_) => "analyze",
        Command::Eval { .. } => "eval",
        Command::Render { .. } => "render",
        Command::Verify(_) => "verify",
    }
}

fn render_path(out: &Path, index: usize, many: bool) -> PathBuf {
    if !many {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map_or("render".into(), |s| s.to_string_lossy().into_owned());
    let file = match out.extension() {
        Some(e) => format!("{stem}-{index}.{}", e.to_string_lossy()),
        None => format!("{stem}-{index}"),
    };
    out.with_file_name(file)
}

/// Everything a command needs that does not depend on the curve.
struct Plan {
    opts: ResolveOptions,
    point: Option<Point2>,
    viewport: Option<Viewport>,
    grid: (usize, usize),
}

fn plan(cmd: &Command) -> Result<Plan, CliError> {
    let c = common(cmd);
    let mut p = Plan {
        opts: resolve_options(c)?,
        point: None,
        viewport: None,
        grid: DEFAULT_GRID,
    };
    match cmd {
        Command::Eval { point, .. } => p.point = Some(parse_point(point)?),
        Command::Render { viewport, grid, .. } => {
            p.viewport = viewport.as_deref().map(parse_viewport).transpose()?;
            p.grid = parse_grid(grid)?;
        }
        _ => {}
    }
    Ok(p)
}

fn run_curve(cmd: &Command, plan: &Plan, curve: &Curve, index: usize, many: bool) -> Result<Block, CliError> {
    let c = common(cmd);
    let p = &curve.polygon;
    let res: ImplicitResult = implicitize_with(p, &plan.opts)?;
    let mut block = match cmd {
        Command::Implicitize(_) => implicitize_report(p, &res)?,
        Command::Analyze(_) => analyze_report(p, &res)?,
        Command::Eval { .. } => eval_report(p, &res, plan.point.as_ref().expect("planned"), c.mode.into())?,
        Command::Verify(_) => verify_report(p, &res)?,
        Command::Render {
            out,
            restrict,
            no_polygon,
            no_split,
            no_shade,
            ..
        } => {
            let vp = plan.viewport.clone().unwrap_or_else(|| Viewport::around(p));
            let mut spec = RenderSpec::new(vp, plan.grid.0, plan.grid.1)?;
            spec.restrict = *restrict;
            spec.show_polygon = !no_polygon;
            spec.show_split = !no_split;
            spec.shade = !no_shade;
            let (svg, stats) = render(p, &res, &spec);
            let path = render_path(out, index, many);
            std::fs::write(&path, svg).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            let mut b = Block::default();
            b.lines.push(format!(
                "wrote {}; boundary cells {}; masked cells {}",
                path.display(),
                stats.boundary,
                stats.masked
            ));
            b.json.insert("path".into(), json!(path.display().to_string()));
            b.json.insert("boundary".into(), json!(stats.boundary));
            b.json.insert("masked".into(), json!(stats.masked));
            b.json.insert("masked_boundary".into(), json!(stats.masked_boundary));
            b
        }
    };
    if c.verify && !matches!(cmd, Command::Verify(_)) {
        let v = verify_report(p, &res)?;
        block.lines.extend(v.lines.iter().cloned());
        block.json.insert("verify".into(), v.into_json());
    }
    Ok(block)
}

/// Runs one command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cmd = &cli.command;
    let c = common(cmd);
    let fail = |err: &mut dyn Write, e: &CliError| {
        let _ = writeln!(err, "error: {e}");
        e.exit_code()
    };
    let plan = match plan(cmd) {
        Ok(p) => p,
        Err(e) => return fail(err, &e),
    };
    let file = match CurveFile::read(&c.file) {
        Ok(f) => f,
        Err(e) => return fail(err, &e),
    };
    let many = file.curves.len() > 1;
    let mut code = EXIT_OK;
    let mut text = String::new();
    let mut js = Vec::new();
    for (i, entry) in file.curves.iter().enumerate() {
        let label = match entry {
            Ok(curve) => curve.label(i),
            Err(_) => format!("curve {i}"),
        };
        let name = entry.as_ref().ok().and_then(|c| c.name.clone());
        let outcome = entry
            .clone()
            .and_then(|curve| run_curve(cmd, &plan, &curve, i, many));
        match outcome {
            Ok(block) => {
                text.push_str(&label);
                text.push('\n');
                for l in &block.lines {
                    text.push_str("  ");
                    text.push_str(l);
                    text.push('\n');
                }
                let mut m = block.json;
                m.insert("index".into(), json!(i));
                m.insert("name".into(), json!(name));
                m.insert("ok".into(), json!(true));
                js.push(Value::Object(m));
            }
            Err(e) => {
                code = combine_exit(code, e.exit_code());
                text.push_str(&format!("{label}\n  error: {e}\n"));
                let _ = writeln!(err, "error: {label}: {e}");
                js.push(json!({
                    "index": i,
                    "name": name,
                    "ok": false,
                    "error": e.to_string(),
                    "exit_code": e.exit_code(),
                }));
            }
        }
    }
    if c.json {
        let doc = json!({ "command": name(cmd), "curves": js });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let _ = out.write_all(text.as_bytes());
    }
    code
}
