use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stacked::complex::SimplicialComplex;
use stacked::generators::{all_trees, polygon_triangulations, random_stacked, random_tree};
use stacked::natline::{check_colimit_compatibility, refine_once, PrefixPartition};
use stacked::oracle::{census, verify_bijection, EnumerationSpec};
use stacked::paths::Gallery;
use stacked::textio::{
    emit_complex, emit_partition, emit_prefix_partition, export_dot, inline_partition,
    parse_complex, parse_partition, parse_prefix_partition,
};
use stacked::{facet_to_vertex, is_stacked, vertex_to_facet, GroundKind};

/// Stacked simplicial complexes, gallery paths and the scattered-partition
/// correspondence. Any file argument may be `-` for standard input.
#[derive(Parser)]
#[command(name = "stacked", version)]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true, env = "STACKED_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimension and sizes, and decide stackedness (exit 1 if not stacked).
    Check { complex: PathBuf },
    /// Print the unique path and the distance between two facets or vertices.
    Path {
        complex: PathBuf,
        /// Two facet tokens such as `2,3,4`.
        #[arg(long, num_args = 2, value_names = ["F", "G"], conflicts_with = "vertices", required_unless_present = "vertices")]
        facets: Option<Vec<String>>,
        /// Two vertex tokens.
        #[arg(long, num_args = 2, value_names = ["V", "W"])]
        vertices: Option<Vec<String>>,
    },
    /// Map a vertex partition to a facet partition (v2f) or back (f2v).
    Map {
        direction: Direction,
        complex: PathBuf,
        partition: PathBuf,
        /// One block per line instead of `{..} {..}` on one line.
        #[arg(long)]
        lines: bool,
    },
    /// Stream all partitions into exactly R blocks, each S-scattered.
    Enumerate {
        complex: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'r')]
        parts: usize,
        #[arg(short = 's', default_value_t = 1)]
        scatter: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },
    /// Check the correspondence on an instance (exit 2 on any failure).
    Verify {
        complex: PathBuf,
        /// Facet block count; all of 1..=n when omitted.
        #[arg(short = 'r')]
        parts: Option<usize>,
        #[arg(short = 's')]
        scatter: usize,
    },
    /// Count independent vertex partitions per block count against S(n, r) and B_n.
    Census { complex: PathBuf },
    /// Refine a partition of [1..n] through line graphs `steps` times.
    Nat {
        /// Prefix partition file, one block per line.
        #[arg(long, conflicts_with = "blocks", required_unless_present = "blocks")]
        pattern: Option<PathBuf>,
        /// Inline pattern, blocks separated by `;`, e.g. `8 14` or `3 4;1 2 5`.
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Prefix length (default: largest listed element).
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Put every unlisted element of [1..n] into one extra block.
        #[arg(long)]
        rest: bool,
        #[arg(long)]
        lines: bool,
    },
    /// Emit a generated complex.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Graphviz DOT export, optionally colored by a partition.
    Dot {
        complex: PathBuf,
        partition: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Labeled tree on `1..=V`: the Prüfer-indexed one with --index, else random.
    Tree {
        #[arg(long = "vertices", short = 'v')]
        vertices: usize,
        #[arg(long, conflicts_with = "seed")]
        index: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Triangulation of the convex K-gon on `1..=K`.
    Polygon {
        #[arg(long, short = 'k')]
        size: usize,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Print the number of triangulations instead.
        #[arg(long)]
        count: bool,
    },
    /// Random stacked complex with N facets of dimension D.
    Stacked {
        #[arg(short = 'd')]
        dim: usize,
        #[arg(short = 'n')]
        facets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    V2f,
    F2v,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Vertices,
    Facets,
}

/// Diagnostic for exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult = Result<ExitCode, Failure>;

const VIOLATION: u8 = 2;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(format!("standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    parse_complex(&read_input(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_gallery(path: &Path) -> Result<Gallery, Failure> {
    Gallery::new(load_complex(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn both_stdin(a: &Path, b: &Path) -> Result<(), Failure> {
    if a == Path::new("-") && b == Path::new("-") {
        return Err(Failure(
            "only one input can be read from standard input".into(),
        ));
    }
    Ok(())
}

fn check(path: &Path, out: &mut impl Write) -> CliResult {
    let x = load_complex(path)?;
    let (d, n, v) = (x.dim(), x.facet_count(), x.vertex_count());
    writeln!(out, "dim={d}")?;
    writeln!(out, "facets={n}")?;
    writeln!(out, "vertices={v}")?;
    if v != n + d {
        writeln!(out, "stacked=no")?;
        writeln!(
            out,
            "reason=vertex count {v} differs from facets + dim = {}",
            n + d
        )?;
        return Ok(ExitCode::from(1));
    }
    match is_stacked(&x) {
        Some(order) => {
            writeln!(out, "stacked=yes")?;
            let facets: Vec<String> = order.order.iter().map(|&f| x.facet_label(f)).collect();
            writeln!(out, "order={}", facets.join(" "))?;
            let free: Vec<&str> = order.free_vertices.iter().map(|&w| x.label(w)).collect();
            writeln!(out, "free={}", free.join(" "))?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            writeln!(out, "stacked=no")?;
            writeln!(out, "reason=no stacking order exists")?;
            Ok(ExitCode::from(1))
        }
    }
}

fn path_cmd(
    path: &Path,
    facets: Option<Vec<String>>,
    vertices: Option<Vec<String>>,
    out: &mut impl Write,
) -> CliResult {
    let gallery = load_gallery(path)?;
    let x = gallery.complex();
    let labels = |p: &[usize]| {
        p.iter()
            .map(|&f| x.facet_label(f))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if let Some(fg) = facets {
        let f = x.facet_by_label(&fg[0])?;
        let g = x.facet_by_label(&fg[1])?;
        writeln!(out, "path={}", labels(gallery.facet_path(f, g).facets()))?;
        writeln!(out, "distance={}", gallery.facet_distance(f, g))?;
    } else if let Some(vw) = vertices {
        let id = |t: &str| {
            x.vertex_id(t)
                .ok_or_else(|| Failure(format!("unknown vertex `{t}`")))
        };
        let (v, w) = (id(&vw[0])?, id(&vw[1])?);
        if let Ok(fp) = gallery.face_path(&[v], &[w]) {
            writeln!(out, "path={}", labels(fp.path.facets()))?;
        }
        writeln!(out, "distance={}", gallery.vertex_distance(v, w))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn map_cmd(
    direction: Direction,
    cx: &Path,
    part: &Path,
    lines: bool,
    out: &mut impl Write,
) -> CliResult {
    both_stdin(cx, part)?;
    let gallery = load_gallery(cx)?;
    let x = gallery.complex();
    let kind = match direction {
        Direction::V2f => GroundKind::Vertices,
        Direction::F2v => GroundKind::Facets,
    };
    let p = parse_partition(&read_input(part)?, x, Some(kind))
        .map_err(|e| Failure(format!("{}: {e}", part.display())))?;
    let image = match direction {
        Direction::V2f => vertex_to_facet(&gallery, &p)?,
        Direction::F2v => facet_to_vertex(&gallery, &p)?,
    };
    if lines {
        write!(out, "{}", emit_partition(x, &image))?;
    } else {
        writeln!(out, "{}", inline_partition(x, &image))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate_cmd(
    path: &Path,
    kind: Kind,
    parts: usize,
    scatter: usize,
    count: bool,
    out: &mut impl Write,
) -> CliResult {
    let gallery = load_gallery(path)?;
    let spec = match kind {
        Kind::Vertices => EnumerationSpec::vertices(&gallery, parts, scatter),
        Kind::Facets => EnumerationSpec::facets(&gallery, parts, scatter),
    };
    if count {
        writeln!(out, "{}", spec.enumerate().count())?;
    } else {
        for p in spec.enumerate() {
            writeln!(out, "{}", inline_partition(gallery.complex(), &p))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(
    path: &Path,
    parts: Option<usize>,
    scatter: usize,
    out: &mut impl Write,
) -> CliResult {
    let gallery = load_gallery(path)?;
    let rs: Vec<usize> = match parts {
        Some(r) => vec![r],
        None => (1..=gallery.complex().facet_count()).collect(),
    };
    let mut ok = true;
    for (i, r) in rs.into_iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let report = verify_bijection(&gallery, r, scatter);
        write!(out, "{}", report.to_text())?;
        for f in &report.failures {
            writeln!(
                out,
                "failure={:?} input={} image={}",
                f.kind,
                inline_partition(gallery.complex(), &f.input),
                inline_partition(gallery.complex(), &f.image)
            )?;
        }
        ok &= report.passed();
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VIOLATION)
    })
}

fn census_cmd(path: &Path, out: &mut impl Write) -> CliResult {
    let gallery = load_gallery(path)?;
    let c = census(&gallery)?;
    write!(out, "{}", c.to_text())?;
    Ok(if c.consistent() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VIOLATION)
    })
}

struct NatArgs {
    pattern: Option<PathBuf>,
    blocks: Option<String>,
    steps: usize,
    n: Option<usize>,
    rest: bool,
    lines: bool,
}

fn nat_cmd(args: NatArgs, out: &mut impl Write) -> CliResult {
    let text = match (&args.pattern, &args.blocks) {
        (Some(path), _) => read_input(path)?,
        (None, Some(inline)) => inline
            .split(';')
            .map(str::trim)
            .collect::<Vec<_>>()
            .join("\n"),
        (None, None) => return Err(Failure("a pattern is required".into())),
    };
    let mut cur = parse_prefix_partition(&text, args.n, args.rest)?;
    let mut colimit_ok = true;
    for _ in 0..args.steps {
        if cur.len() >= 2 {
            colimit_ok &= check_colimit_compatibility(&cur)?;
        }
        cur = refine_once(&cur)?;
    }
    writeln!(out, "n={}", cur.len())?;
    writeln!(out, "blocks={}", cur.block_count())?;
    match cur.scatter() {
        Some(s) => writeln!(out, "scatter={s}")?,
        None => writeln!(out, "scatter=none")?,
    }
    if args.lines {
        write!(out, "{}", emit_prefix_partition(&cur))?;
    } else {
        writeln!(out, "{}", inline_prefix(&cur))?;
    }
    writeln!(out, "colimit={}", if colimit_ok { "ok" } else { "failed" })?;
    Ok(if colimit_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VIOLATION)
    })
}

fn inline_prefix(p: &PrefixPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            let tokens: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("{{{}}}", tokens.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn gen_cmd(family: Family, out: &mut impl Write) -> CliResult {
    let x = match family {
        Family::Tree {
            vertices,
            index: Some(i),
            ..
        } => {
            let trees = all_trees(vertices)?;
            let total = trees.len();
            trees
                .into_iter()
                .nth(i)
                .ok_or_else(|| Failure(format!("tree index {i} out of range 0..{total}")))?
        }
        Family::Tree {
            vertices,
            index: None,
            seed,
        } => random_tree(vertices, seed)?,
        Family::Polygon { size, index, count } => {
            let all = polygon_triangulations(size)?;
            if count {
                writeln!(out, "{}", all.len())?;
                return Ok(ExitCode::SUCCESS);
            }
            let total = all.len();
            all.into_iter().nth(index).ok_or_else(|| {
                Failure(format!(
                    "triangulation index {index} out of range 0..{total}"
                ))
            })?
        }
        Family::Stacked { dim, facets, seed } => random_stacked(dim, facets, seed)?,
    };
    write!(out, "{}", emit_complex(&x))?;
    Ok(ExitCode::SUCCESS)
}

fn dot_cmd(cx: &Path, part: Option<&Path>, out: &mut impl Write) -> CliResult {
    if let Some(p) = part {
        both_stdin(cx, p)?;
    }
    let x = load_complex(cx)?;
    let partition = match part {
        Some(p) => Some(
            parse_partition(&read_input(p)?, &x, None)
                .map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    write!(out, "{}", export_dot(&x, partition.as_ref()))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Check { complex } => check(&complex, &mut out),
        Command::Path {
            complex,
            facets,
            vertices,
        } => path_cmd(&complex, facets, vertices, &mut out),
        Command::Map {
            direction,
            complex,
            partition,
            lines,
        } => map_cmd(direction, &complex, &partition, lines, &mut out),
        Command::Enumerate {
            complex,
            kind,
            parts,
            scatter,
            count,
        } => enumerate_cmd(&complex, kind, parts, scatter, count, &mut out),
        Command::Verify {
            complex,
            parts,
            scatter,
        } => verify_cmd(&complex, parts, scatter, &mut out),
        Command::Census { complex } => census_cmd(&complex, &mut out),
        Command::Nat {
            pattern,
            blocks,
            steps,
            n,
            rest,
            lines,
        } => nat_cmd(
            NatArgs {
                pattern,
                blocks,
                steps,
                n,
                rest,
                lines,
            },
            &mut out,
        ),
        Command::Gen { family } => gen_cmd(family, &mut out),
        Command::Dot { complex, partition } => dot_cmd(&complex, partition.as_deref(), &mut out),
    };
    out.flush()?;
    code
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
