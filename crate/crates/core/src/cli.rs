//! The `idcode` command line.
//!
//! Exit status: 0 on success (and for verified codes), 1 when a code fails
//! verification or a search comes back empty, 2 for usage and data errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{
    hex_ell2_lower, karpov_finite_lower, known_table, lattice_lower, log_lower, pair_lower,
    regular_2bound, regular_sbound, trivial_lower,
};
use crate::constructions::{
    dominating_code, hamming_dominating_set, hex_code, hex_density_counted, hex_density_printed_odd,
    lattice_r_code, lift_dimension, lift_king_to_lattice4, log_attaining_graph, regularize_subset_graph,
    subset_code_graph, KVariant,
};
use crate::grid::{GridKind, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::graph::{hypercube, hypercube_label, window, FiniteGraph};
use crate::model::io::{code_to_json, graph_to_json, read_artifact, write_text, Artifact};
use crate::model::rational::{decimal, fraction, ratio, Rational};
use crate::render;
use crate::search::{
    king_schedule, min_dominating_set, min_identifying_code, search_periodic, search_schedule, DomOptions, Mode,
};
use crate::verifier::{pair_census, verify_finite, verify_periodic};

#[derive(Parser, Debug)]
#[command(name = "idcode", version, about = "Identifying codes on grids and graphs")]
pub struct Cli {
    /// Also print decimal approximations of fractions.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Worker threads (speed only; results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code or graph and write it as JSON.
    #[command(subcommand)]
    Construct(Construct),
    /// Check the identifying property of a code file or of a code in a graph file.
    Verify(VerifyArgs),
    /// Print the exact density of a code file.
    Density { file: PathBuf },
    /// Evaluate lower bounds.
    Bounds(BoundsArgs),
    /// Exact searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Count pair witnesses per codeword.
    Census {
        file: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        window: u32,
    },
    /// Draw a code on a window.
    Render {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        window: i64,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
pub struct Out {
    /// Output file (JSON); printed to stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Hexagonal-grid code for radius r.
    Hex {
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        out: Out,
    },
    /// L_n code tiled from a dominating set of the cube H_n.
    Dominating {
        #[arg(long)]
        n: usize,
        /// Use the Hamming code (n = 2^k - 1).
        #[arg(long, conflicts_with_all = ["set", "search"])]
        hamming: bool,
        /// Comma-separated bit strings, e.g. 000,111.
        #[arg(long, conflicts_with = "search")]
        set: Option<String>,
        /// Use a minimum dominating set found by search.
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Lift an r-identifying L_n code to L_{n+1}.
    LiftDim {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Lift a 1-identifying king-grid code to L_4 (searches for one when no input is given).
    LiftKing {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Scaled parity code on L_n.
    LatticeR {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r0: u32,
        #[arg(long, default_value = "paper-k")]
        variant: String,
        #[command(flatten)]
        out: Out,
    },
    /// Subset-incidence graph with a code of size k.
    Gadget {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Subset-incidence graph completed to a (near-)regular graph.
    Regularize {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Graph on nv vertices with a code of logarithmic size.
    LogGraph {
        #[arg(long)]
        nv: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    file: PathBuf,
    #[arg(long)]
    r: u32,
    /// Subset size for (r, <= ell) codes (graphs only).
    #[arg(long, default_value_t = 1)]
    ell: usize,
    /// Code for a graph file, as comma-separated vertex indices.
    #[arg(long)]
    code: Option<String>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    grid: Option<GridKind>,
    #[arg(long)]
    r: Option<u32>,
    /// Pair cap for the pair-counting bound.
    #[arg(long)]
    k: Option<u64>,
    /// Order of a finite graph (with --max-degree or --ball).
    #[arg(long)]
    order: Option<u64>,
    #[arg(long)]
    max_degree: Option<u64>,
    /// Largest r-ball size of a finite graph.
    #[arg(long)]
    ball: Option<u64>,
    /// Print the table of known values.
    #[arg(long)]
    table: bool,
    /// Table as JSON rows.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Graph file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in family: cycle:N, path:N, star:N, complete:N, hypercube:N, window:GRID:M.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum SearchCmd {
    /// Minimum identifying code of a small graph.
    MinCode {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value = "standard")]
        mode: String,
    },
    /// Minimum dominating set.
    MinDomset {
        #[command(flatten)]
        source: GraphSource,
        /// Shortcut for the cube H_n (uses its symmetry).
        #[arg(long)]
        hypercube: Option<usize>,
    },
    /// Periodic code with a given number of codewords per rectangular tile.
    Periodic {
        #[arg(long)]
        grid: GridKind,
        #[arg(long)]
        r: u32,
        /// Tile as WxH.
        #[arg(long)]
        tile: Option<String>,
        #[arg(long)]
        count: Option<usize>,
        /// Named schedule of tiles (king).
        #[arg(long)]
        schedule: Option<String>,
        #[command(flatten)]
        out: Out,
    },
}

/// Distinguishes "ran fine, answer is no" from errors.
enum Exit {
    Ok,
    No,
}

struct Ctx {
    decimal: bool,
    out: Box<dyn Write>,
}

impl Ctx {
    fn q(&self, q: &Rational) -> String {
        if self.decimal {
            format!("{} (~{})", fraction(q), decimal(q, 4))
        } else {
            fraction(q)
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> anyhow::Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        // a second initialization (e.g. in tests) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let mut ctx = Ctx {
        decimal: cli.decimal,
        out: Box::new(std::io::stdout()),
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(Exit::Ok) => 0,
        Ok(Exit::No) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> anyhow::Result<Exit> {
    match cmd {
        Command::Construct(c) => construct(ctx, c),
        Command::Verify(a) => verify(ctx, a),
        Command::Density { file } => {
            let code = load_code(&file)?;
            let d = code.density();
            ctx.line(format!("density = {}", ctx.q(&d)))?;
            Ok(Exit::Ok)
        }
        Command::Bounds(a) => bounds(ctx, a),
        Command::Search(s) => search(ctx, s),
        Command::Census { file, r, window } => {
            let code = load_code(&file)?;
            let c = pair_census(&code, r, window)?;
            ctx.line(format!("r = {r}, window m = {window}, codewords counted = {}", c.codeword_count))?;
            ctx.line(format!("max_p = {}", c.max_p))?;
            ctx.line(format!("sum_p = {}", c.sum_p))?;
            if c.codeword_count > 0 {
                let avg = ratio(c.sum_p as i128, c.codeword_count as i128);
                ctx.line(format!("avg_p = {}", ctx.q(&avg)))?;
            }
            Ok(Exit::Ok)
        }
        Command::Render { file, window, format, output } => {
            if window < 0 {
                bail!("window must be nonnegative");
            }
            let code = load_code(&file)?;
            let text = match format {
                Format::Ascii => render::ascii(&code, window),
                Format::Svg => render::svg(&code, window),
            };
            emit(ctx, output.as_deref(), &text)?;
            Ok(Exit::Ok)
        }
    }
}

fn load_code(path: &Path) -> anyhow::Result<PeriodicCode> {
    match read_artifact(path)? {
        Artifact::Code(c) => Ok(c),
        Artifact::Graph(_) => bail!("{} holds a graph, expected a code", path.display()),
    }
}

fn emit(ctx: &mut Ctx, output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => {
            write_text(p, text)?;
            ctx.line(format!("wrote {}", p.display()))
        }
        None => ctx.line(text.trim_end()),
    }
}

fn report_periodic(ctx: &mut Ctx, code: &PeriodicCode, r: u32) -> anyhow::Result<Exit> {
    let t = Instant::now();
    let report = verify_periodic(code, r)?;
    ctx.line(format!("verify: {report} ({} ms)", t.elapsed().as_millis()))?;
    Ok(if report.is_identifying() { Exit::Ok } else { Exit::No })
}

fn write_code(ctx: &mut Ctx, code: &PeriodicCode, out: &Out) -> anyhow::Result<()> {
    ctx.line(format!("grid = {}, fundamental domain = {} cells, codewords = {}", code.grid(), code.domain_size(), code.base().len()))?;
    ctx.line(format!("density = {}", ctx.q(&code.density())))?;
    match &out.output {
        Some(p) => {
            write_text(p, &code_to_json(code))?;
            ctx.line(format!("wrote {}", p.display()))
        }
        None => Ok(()),
    }
}

fn write_graph(ctx: &mut Ctx, g: &FiniteGraph, code: &[usize], out: &Out) -> anyhow::Result<Exit> {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let min = degrees.iter().min().copied().unwrap_or(0);
    ctx.line(format!(
        "n = {}, edges = {}, max degree = {}, min degree = {}",
        g.n(),
        g.edge_count(),
        g.max_degree(),
        min
    ))?;
    ctx.line(format!("code = {}", join(code)))?;
    let report = verify_finite(g, code, 1, 1)?;
    ctx.line(format!("verify: {report}"))?;
    if let Some(p) = &out.output {
        write_text(p, &graph_to_json(g))?;
        ctx.line(format!("wrote {}", p.display()))?;
    }
    Ok(if report.is_identifying() { Exit::Ok } else { Exit::No })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_bits(s: &str, n: usize) -> anyhow::Result<Vec<Vertex>> {
    s.split(',')
        .map(|w| {
            let w = w.trim();
            if w.len() != n || !w.bytes().all(|b| b == b'0' || b == b'1') {
                bail!("{w:?} is not a bit string of length {n}");
            }
            Ok(Vertex::new(w.bytes().map(|b| (b - b'0') as i64).collect::<Vec<_>>()))
        })
        .collect()
}

fn construct(ctx: &mut Ctx, c: Construct) -> anyhow::Result<Exit> {
    match c {
        Construct::Hex { r, out } => {
            let code = hex_code(r)?;
            write_code(ctx, &code, &out)?;
            if r % 2 == 1 {
                ctx.line(format!(
                    "note: counted odd-r density {} differs from the formula (5r^2+10r-3)/((6r-2)(r+1)^2) = {}",
                    ctx.q(&hex_density_counted(r)?),
                    ctx.q(&hex_density_printed_odd(r))
                ))?;
            }
            report_periodic(ctx, &code, r)
        }
        Construct::Dominating { n, hamming, set, search, out } => {
            let d = if hamming {
                let k = (n + 1).trailing_zeros();
                if (1usize << k) != n + 1 {
                    bail!("--hamming needs n = 2^k - 1, got {n}");
                }
                hamming_dominating_set(k)?
            } else if let Some(s) = set {
                parse_bits(&s, n)?
            } else if search {
                let opt = min_dominating_set(&hypercube(n)?, DomOptions { vertex_transitive: true })?;
                opt.set.iter().map(|&v| hypercube_label(n, v)).collect()
            } else {
                bail!("give one of --hamming, --set or --search");
            };
            ctx.line(format!("dominating set of H_{n}: {} vertices", d.len()))?;
            let code = dominating_code(n, &d)?;
            write_code(ctx, &code, &out)?;
            report_periodic(ctx, &code, 1)
        }
        Construct::LiftDim { input, r, out } => {
            let code = lift_dimension(&load_code(&input)?, r)?;
            write_code(ctx, &code, &out)?;
            report_periodic(ctx, &code, r)
        }
        Construct::LiftKing { input, out } => {
            let king = match input {
                Some(p) => load_code(&p)?,
                None => {
                    let (hit, log) = search_schedule(GridKind::King, 1, &king_schedule())?;
                    for ((w, h), count, ok) in log {
                        ctx.line(format!("king search {w}x{h}, {count} codewords: {}", if ok { "found" } else { "none" }))?;
                    }
                    hit.ok_or_else(|| anyhow!("no king code found on the schedule"))?.code
                }
            };
            ctx.line(format!("king code density = {}", ctx.q(&king.density())))?;
            let code = lift_king_to_lattice4(&king)?;
            write_code(ctx, &code, &out)?;
            report_periodic(ctx, &code, 1)
        }
        Construct::LatticeR { n, r0, variant, out } => {
            let variant: KVariant = variant.parse()?;
            let code = lattice_r_code(n, r0, variant)?;
            ctx.line(format!("variant = {variant}, k = {}", variant.scale(n, r0)?))?;
            write_code(ctx, &code, &out)?;
            report_periodic(ctx, &code, r0)
        }
        Construct::Gadget { k, s, out } => {
            let (g, code) = subset_code_graph(k, s)?;
            write_graph(ctx, &g, &code, &out)
        }
        Construct::Regularize { k, s, out } => {
            let (g, code) = regularize_subset_graph(k, s)?;
            write_graph(ctx, &g, &code, &out)
        }
        Construct::LogGraph { nv, out } => {
            let (g, code) = log_attaining_graph(nv)?;
            write_graph(ctx, &g, &code, &out)
        }
    }
}

fn verify(ctx: &mut Ctx, a: VerifyArgs) -> anyhow::Result<Exit> {
    match read_artifact(&a.file)? {
        Artifact::Code(code) => {
            if a.ell != 1 {
                bail!("--ell is supported for graph files only");
            }
            if a.code.is_some() {
                bail!("--code applies to graph files only");
            }
            report_periodic(ctx, &code, a.r)
        }
        Artifact::Graph(g) => {
            let code: Vec<usize> = match &a.code {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad vertex {x:?}")))
                    .collect::<anyhow::Result<_>>()?,
                None => (0..g.n()).collect(),
            };
            let report = verify_finite(&g, &code, a.r, a.ell)?;
            let text = match g.labels() {
                Some(labels) => report.clone().map(|v| labels[v].clone()).to_string(),
                None => report.to_string(),
            };
            ctx.line(format!("verify: {text}"))?;
            Ok(if report.is_identifying() { Exit::Ok } else { Exit::No })
        }
    }
}

fn bounds(ctx: &mut Ctx, a: BoundsArgs) -> anyhow::Result<Exit> {
    let mut printed = false;
    if a.table || a.json {
        let table = known_table();
        if a.json {
            ctx.line(serde_json::to_string_pretty(&table.rows)?)?;
        } else {
            let text = table.to_text(ctx.decimal);
            ctx.line(text.trim_end())?;
        }
        printed = true;
    }
    if let Some(grid) = a.grid {
        grid.validate()?;
        let r = a.r.unwrap_or(1);
        if r == 0 {
            bail!("--r must be at least 1");
        }
        let b = grid.ball_size(r);
        ctx.line(format!("{grid}, r = {r}: ball size = {b}"))?;
        ctx.line(format!("trivial_lower = {}", ctx.q(&trivial_lower(grid, r))))?;
        let known_k: &[(GridKind, u32, u64, &str)] = &[
            (GridKind::Hex, 2, 6, "each codeword in at most 6 pairs"),
            (GridKind::Hex, 3, 8, "each codeword in at most 8 pairs"),
            (GridKind::Square, 2, 7, "at most 7 pairs per codeword on average"),
        ];
        match a.k {
            Some(k) => ctx.line(format!("pair_lower(k={k}) = {}", ctx.q(&pair_lower(grid, r, k))))?,
            None => {
                for &(g, rr, k, why) in known_k {
                    if g == grid && rr == r {
                        ctx.line(format!("pair_lower(k={k}) = {}  [{why}]", ctx.q(&pair_lower(grid, r, k))))?;
                    }
                }
            }
        }
        if grid == GridKind::Hex {
            ctx.line(format!("ell2_lower = {}  [(r,<=2) codes]", ctx.q(&hex_ell2_lower(r))))?;
        }
        if let GridKind::Lattice(n) = grid {
            ctx.line(format!("lattice_lower = {}", ctx.q(&lattice_lower(n, r))))?;
            ctx.line(format!("karpovsky 1/(n+1) at r = 1: {}", ctx.q(&ratio(1, n as i128 + 1))))?;
        }
        printed = true;
    }
    if let Some(n) = a.order {
        ctx.line(format!("log_lower({n}) = {}", log_lower(n)))?;
        if let Some(b) = a.ball {
            ctx.line(format!("ball_lower(n={n}, b={b}) = {}", ctx.q(&karpov_finite_lower(n, b))))?;
        }
        if let Some(d) = a.max_degree {
            let two = regular_2bound(n, d);
            ctx.line(format!("regular_2bound(n={n}, delta={d}) = {two}"))?;
            ctx.line(format!("  smallest admissible code size = {}", two.min_size()))?;
            let (v, s) = regular_sbound(n, d);
            match s {
                Some(s) => ctx.line(format!("regular_sbound(n={n}, delta={d}) = {} at s = {s}", ctx.q(&v)))?,
                None => ctx.line("regular_sbound: every term is negative")?,
            }
        }
        printed = true;
    }
    if !printed {
        bail!("nothing to do: give --grid, --order or --table");
    }
    Ok(Exit::Ok)
}

fn parse_family(spec: &str) -> anyhow::Result<FiniteGraph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> anyhow::Result<usize> { s.parse().with_context(|| format!("bad number {s:?}")) };
    Ok(match parts.as_slice() {
        ["cycle", n] => FiniteGraph::cycle(num(n)?),
        ["path", n] => FiniteGraph::path(num(n)?),
        ["star", n] => FiniteGraph::star(num(n)?),
        ["complete", n] => FiniteGraph::complete(num(n)?),
        ["hypercube", n] => hypercube(num(n)?)?,
        ["window", g, m] => window(g.parse()?, num(m)? as u32)?,
        _ => bail!("unknown family {spec:?}"),
    })
}

fn load_graph(src: &GraphSource) -> anyhow::Result<FiniteGraph> {
    match (&src.graph, &src.family) {
        (Some(p), None) => match read_artifact(p)? {
            Artifact::Graph(g) => Ok(g),
            Artifact::Code(_) => bail!("{} holds a code, expected a graph", p.display()),
        },
        (None, Some(f)) => parse_family(f),
        _ => bail!("give exactly one of --graph or --family"),
    }
}

fn parse_tile(s: &str) -> anyhow::Result<(i64, i64)> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("tile must look like WxH, got {s:?}"))?;
    Ok((w.trim().parse()?, h.trim().parse()?))
}

fn search(ctx: &mut Ctx, s: SearchCmd) -> anyhow::Result<Exit> {
    match s {
        SearchCmd::MinCode { source, r, mode } => {
            let g = load_graph(&source)?;
            let mode: Mode = mode.parse()?;
            let t = Instant::now();
            let opt = min_identifying_code(&g, r, mode)?;
            ctx.line(format!("instance: n = {}, r = {r}, mode = {mode:?}", g.n()))?;
            ctx.line(format!("optimum = {}", opt.size))?;
            ctx.line(format!("code = {}", join(&opt.set)))?;
            ctx.line(format!("nodes = {}, time = {} ms", opt.nodes, t.elapsed().as_millis()))?;
            Ok(Exit::Ok)
        }
        SearchCmd::MinDomset { source, hypercube: cube } => {
            let (g, vt) = match cube {
                Some(n) => (hypercube(n)?, true),
                None => (load_graph(&source)?, false),
            };
            let t = Instant::now();
            let opt = min_dominating_set(&g, DomOptions { vertex_transitive: vt })?;
            ctx.line(format!("instance: n = {}", g.n()))?;
            ctx.line(format!("optimum = {}", opt.size))?;
            let shown: Vec<String> = match g.labels() {
                Some(l) if cube.is_some() => opt
                    .set
                    .iter()
                    .map(|&v| l[v].coords().iter().map(|b| b.to_string()).collect())
                    .collect(),
                _ => opt.set.iter().map(|v| v.to_string()).collect(),
            };
            ctx.line(format!("set = {}", shown.join(",")))?;
            ctx.line(format!("nodes = {}, time = {} ms", opt.nodes, t.elapsed().as_millis()))?;
            Ok(Exit::Ok)
        }
        SearchCmd::Periodic { grid, r, tile, count, schedule, out } => {
            let plan: Vec<((i64, i64), usize)> = match (schedule.as_deref(), tile, count) {
                (Some("king"), None, None) => king_schedule(),
                (Some(other), None, None) => bail!("unknown schedule {other:?}"),
                (None, Some(t), Some(c)) => vec![(parse_tile(&t)?, c)],
                _ => bail!("give --tile and --count, or --schedule"),
            };
            let t = Instant::now();
            let mut found = None;
            for (tile, count) in plan {
                let hit = search_periodic(grid, r, tile, count)?;
                ctx.line(format!(
                    "{grid} r = {r}, tile {}x{}, {count} codewords: {}",
                    tile.0,
                    tile.1,
                    if hit.is_some() { "found" } else { "none" }
                ))?;
                if hit.is_some() {
                    found = hit;
                    break;
                }
            }
            ctx.line(format!("time = {} ms", t.elapsed().as_millis()))?;
            match found {
                Some(hit) => {
                    ctx.line(format!("examined = {}", hit.examined))?;
                    write_code(ctx, &hit.code, &out)?;
                    Ok(Exit::Ok)
                }
                None => Ok(Exit::No),
            }
        }
    }
}
