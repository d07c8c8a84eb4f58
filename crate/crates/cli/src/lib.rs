//! Command-line front end. [`run`] parses arguments, runs one command and
//! returns the process exit code:
//!
//! * 0: kernel found, or the property holds
//! * 1: no kernel, or the property fails (witness printed)
//! * 2: usage or format error
//! * 3: the input is outside the class the solver accepts (witness printed)

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use kernels_core::chordal::parse_representation;
use kernels_core::format::{parse_instance, parse_vertex_list};
use kernels_core::matching::parse_root;
use kernels_core::oracle::DEFAULT_MAX_N;
use kernels_core::{
    check_claw_free, check_clique_acyclic, enumerate_kernels, find_flat_edges, generate, recognize_chordal,
    reconstruct_bipartite_root, solve_chordal_orientation, solve_chordal_super_with_stats,
    solve_circular_arc_orientation, solve_clawfree_orientation_with_stats, solve_de_super_with_stats,
    solve_line_bipartite, verify_kernel, AugmentationCertificate, ChordalEvidence, ClawCheck, CliqueAcyclicity,
    Covering, DecompositionStats, Error, GenClass, GenParams, OrientationKind, ReconstructRoots, SuperOrientation,
    VertexSet,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CLASS: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "kernels", version, about = "Kernels of super-orientations of structured graph classes")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverClass {
    /// Clique-acyclic super-orientation of a chordal graph.
    Chordal,
    /// Any orientation of a chordal graph; decides existence.
    ChordalAny,
    /// Orientation of a circular-arc graph; needs --representation.
    CircularArc,
    /// Clique-acyclic super-orientation of the line graph of a bipartite
    /// multigraph; the root is read from --certificate or reconstructed.
    Line,
    /// Clique-acyclic orientation of a claw-free perfect graph; augmentation
    /// certificate from --certificate, else roots are reconstructed.
    Clawfree,
    /// Clique-acyclic super-orientation of a DE graph.
    De,
    /// Chordal inputs are dispatched to `chordal` or `chordal-any`.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Chordal,
    ClawFree,
    CliqueAcyclic,
    FlatEdges,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a kernel.
    Find {
        #[arg(long, value_enum)]
        class: SolverClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        representation: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check that a vertex set is a kernel.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex list; may be empty.
        #[arg(long, allow_hyphen_values = true)]
        kernel: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a structural property.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive kernel search on small instances.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// List every kernel instead of the first.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded instance and its certificate or representation.
    Gen {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// random | acyclic | clique-acyclic | super:<p>
        #[arg(long)]
        orientation: Option<String>,
        /// Output prefix; files are PREFIX.instance and PREFIX.<kind>.
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the solver for a generator class over several sizes.
    Bench {
        #[arg(long)]
        class: String,
        #[arg(long, default_value = "100,1000,5000")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
    },
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<SuperOrientation, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[derive(Debug, Default, Serialize)]
struct Stats {
    atoms: usize,
    cutsets: usize,
    millis: f64,
}

impl Stats {
    fn from_decomposition(s: &DecompositionStats) -> Self {
        Stats { atoms: s.atom_calls, cutsets: s.cutsets, millis: 0.0 }
    }
}

/// What a `find` run produced.
enum Outcome {
    Kernel(VertexSet, Stats),
    NoKernel(Stats),
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Find { class, input, certificate, representation, json } => {
            let d = load_instance(&input)?;
            let start = Instant::now();
            let result = find(class, &d, certificate.as_deref(), representation.as_deref());
            let millis = start.elapsed().as_secs_f64() * 1e3;
            report_find(result, millis, json, out)
        }
        Command::Verify { input, kernel, json } => {
            let d = load_instance(&input)?;
            let set: VertexSet = parse_vertex_list(&kernel)?.into_iter().collect();
            let verdict = verify_kernel(&d, &set)?;
            if json {
                let status = if verdict.is_kernel() { "kernel" } else { "not-kernel" };
                writeln!(
                    out,
                    "{}",
                    json!({ "status": status, "kernel": set.as_slice(), "witness": verdict.to_string() })
                )?;
            } else {
                writeln!(out, "{verdict}")?;
            }
            Ok(if verdict.is_kernel() { EXIT_OK } else { EXIT_NO })
        }
        Command::Check { property, input, json } => check(property, &load_instance(&input)?, json, out),
        Command::Oracle { input, all, max_n, json } => {
            let d = load_instance(&input)?;
            let kernels = enumerate_kernels(&d, max_n)?;
            let shown: Vec<&[usize]> =
                kernels.iter().take(if all { kernels.len() } else { 1 }).map(|k| k.as_slice()).collect();
            if json {
                let status = if kernels.is_empty() { "no-kernel" } else { "kernel" };
                writeln!(out, "{}", json!({ "status": status, "count": kernels.len(), "kernels": shown }))?;
            } else if kernels.is_empty() {
                writeln!(out, "no kernel")?;
            } else {
                for k in &shown {
                    writeln!(out, "kernel: {}", list(k))?;
                }
                if all {
                    writeln!(out, "{} kernel(s)", kernels.len())?;
                }
            }
            Ok(if kernels.is_empty() { EXIT_NO } else { EXIT_OK })
        }
        Command::Gen { class, n, density, seed, orientation, out: prefix } => {
            let class: GenClass = class.parse()?;
            let mut params = GenParams::new(class, n, density, seed);
            if let Some(o) = orientation {
                params = params.with_orientation(o.parse::<OrientationKind>()?);
            }
            let generated = generate(&params)?;
            for (suffix, text) in generated.files() {
                let mut path = prefix.clone().into_os_string();
                path.push(format!(".{suffix}"));
                std::fs::write(&path, text)?;
                writeln!(out, "wrote {}", PathBuf::from(path).display())?;
            }
            Ok(EXIT_OK)
        }
        Command::Bench { class, sizes, seed, density } => {
            let class: GenClass = class.parse()?;
            let sizes = parse_vertex_list(&sizes)?;
            writeln!(out, "class,n,arcs,atoms,cutsets,kernel_size,millis")?;
            for n in sizes {
                let generated = generate(&GenParams::new(class, n, density, seed))?;
                let d = &generated.digraph;
                let start = Instant::now();
                let result = solve_generated(class, &generated);
                let millis = start.elapsed().as_secs_f64() * 1e3;
                match result {
                    Ok(Outcome::Kernel(k, s)) => writeln!(
                        out,
                        "{class},{},{},{},{},{},{millis:.3}",
                        d.n(),
                        d.arc_count(),
                        s.atoms,
                        s.cutsets,
                        k.len()
                    )?,
                    Ok(Outcome::NoKernel(s)) => {
                        writeln!(out, "{class},{},{},{},{},none,{millis:.3}", d.n(), d.arc_count(), s.atoms, s.cutsets)?
                    }
                    Err(e) => return Err(Failure::Usage(format!("n={n}: {e}"))),
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn solve_generated(class: GenClass, generated: &kernels_core::Generated) -> kernels_core::Result<Outcome> {
    use kernels_core::Attachment;
    let d = &generated.digraph;
    match (&generated.attachment, class) {
        (_, GenClass::ChordalSuper) => find(SolverClass::Chordal, d, None, None).map_err(unwrap_core),
        (_, GenClass::ChordalOrientation) => find(SolverClass::ChordalAny, d, None, None).map_err(unwrap_core),
        (_, GenClass::De) => find(SolverClass::De, d, None, None).map_err(unwrap_core),
        (Attachment::Representation(rep), _) => Ok(solve_circular_arc_orientation(d, rep)?
            .map_or(Outcome::NoKernel(Stats::default()), |k| Outcome::Kernel(k, Stats::default()))),
        (Attachment::Root(root), _) => Ok(Outcome::Kernel(solve_line_bipartite(d, root)?, Stats::default())),
        (Attachment::Certificate(cert), _) => {
            let (k, s) = solve_clawfree_orientation_with_stats(d, &Covering(cert.clone()))?;
            Ok(Outcome::Kernel(k, Stats::from_decomposition(&s.decomposition)))
        }
        _ => Err(Error::InvalidParameter(format!("no solver for generator class {class}"))),
    }
}

fn unwrap_core(f: FindError) -> Error {
    match f {
        FindError::Core(e) => e,
        FindError::Usage(msg) => Error::InvalidParameter(msg),
    }
}

enum FindError {
    Core(Error),
    Usage(String),
}

impl From<Error> for FindError {
    fn from(e: Error) -> Self {
        FindError::Core(e)
    }
}

fn find(
    class: SolverClass,
    d: &SuperOrientation,
    certificate: Option<&Path>,
    representation: Option<&Path>,
) -> Result<Outcome, FindError> {
    let read_side =
        |p: &Path| std::fs::read_to_string(p).map_err(|e| FindError::Usage(format!("{}: {e}", p.display())));
    let bad_file = |p: &Path, e: Error| FindError::Usage(format!("{}: {e}", p.display()));
    match class {
        SolverClass::Chordal => {
            let (k, s) = solve_chordal_super_with_stats(d)?;
            Ok(Outcome::Kernel(k, Stats::from_decomposition(&s)))
        }
        SolverClass::ChordalAny => Ok(solve_chordal_orientation(d)?
            .map_or(Outcome::NoKernel(Stats::default()), |k| Outcome::Kernel(k, Stats::default()))),
        SolverClass::CircularArc => {
            let path = representation.ok_or_else(|| FindError::Usage("circular-arc needs --representation".into()))?;
            let rep = parse_representation(&read_side(path)?).map_err(|e| bad_file(path, e))?;
            Ok(solve_circular_arc_orientation(d, &rep)?
                .map_or(Outcome::NoKernel(Stats::default()), |k| Outcome::Kernel(k, Stats::default())))
        }
        SolverClass::Line => {
            let root = match certificate {
                Some(path) => parse_root(&read_side(path)?).map_err(|e| bad_file(path, e))?,
                None => reconstruct_bipartite_root(d.underlying())
                    .ok_or_else(|| Error::NotDeAtom { vertices: (0..d.n()).collect() })?,
            };
            Ok(Outcome::Kernel(solve_line_bipartite(d, &root)?, Stats::default()))
        }
        SolverClass::Clawfree => {
            let (k, s) = match certificate {
                Some(path) => {
                    let cert = AugmentationCertificate::from_json(&read_side(path)?).map_err(|e| bad_file(path, e))?;
                    solve_clawfree_orientation_with_stats(d, &Covering(cert))?
                }
                None => solve_clawfree_orientation_with_stats(d, &ReconstructRoots)?,
            };
            Ok(Outcome::Kernel(k, Stats::from_decomposition(&s.decomposition)))
        }
        SolverClass::De => {
            let (k, s) = solve_de_super_with_stats(d)?;
            Ok(Outcome::Kernel(k, Stats::from_decomposition(&s)))
        }
        SolverClass::Auto => match recognize_chordal(d.underlying()) {
            ChordalEvidence::Hole(_) => Err(FindError::Usage("input is not chordal; pass --class".into())),
            evidence => match check_clique_acyclic(d, Some(&evidence))? {
                CliqueAcyclicity::Acyclic => find(SolverClass::Chordal, d, None, None),
                CliqueAcyclicity::Cycle(_) if d.is_orientation() => find(SolverClass::ChordalAny, d, None, None),
                CliqueAcyclicity::Cycle(cycle) => Err(Error::NotCliqueAcyclic { cycle }.into()),
            },
        },
    }
}

fn report_find(
    result: Result<Outcome, FindError>,
    millis: f64,
    json: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let (status, kernel, witness, mut stats, code) = match result {
        Ok(Outcome::Kernel(k, s)) => ("kernel", Some(k), None, s, EXIT_OK),
        Ok(Outcome::NoKernel(s)) => ("no-kernel", None, None, s, EXIT_NO),
        Err(FindError::Usage(msg)) => return Err(Failure::Usage(msg)),
        Err(FindError::Core(e)) if e.is_class_violation() => {
            ("class-violation", None, Some(e), Stats::default(), EXIT_CLASS)
        }
        Err(FindError::Core(e)) => return Err(Failure::Usage(e.to_string())),
    };
    stats.millis = millis;
    if json {
        let mut doc = json!({ "status": status, "stats": stats });
        if let Some(k) = &kernel {
            doc["kernel"] = json!(k.as_slice());
        }
        if let Some(e) = &witness {
            doc["witness"] = witness_json(e);
        }
        writeln!(out, "{doc}")?;
    } else {
        match (&kernel, &witness) {
            (Some(k), _) => writeln!(out, "kernel: {}", list(k.as_slice()))?,
            (None, Some(e)) => writeln!(out, "class violation: {e}")?,
            (None, None) => writeln!(out, "no kernel")?,
        }
        writeln!(out, "atoms: {} cutsets: {} millis: {:.3}", stats.atoms, stats.cutsets, stats.millis)?;
    }
    Ok(code)
}

fn witness_json(e: &Error) -> Value {
    match e {
        Error::NotChordal { hole } => json!({ "hole": hole }),
        Error::NotCliqueAcyclic { cycle } => json!({ "cycle": cycle }),
        Error::NotAnOrientation(u, v) => json!({ "bidirected": [u, v] }),
        Error::NotAClique(u, v) => json!({ "non_adjacent": [u, v] }),
        Error::Claw { center, leaves } => json!({ "center": center, "leaves": leaves }),
        Error::NoSink { vertices } | Error::NotDeAtom { vertices } | Error::CertificateRequired { vertices } => {
            json!({ "vertices": vertices, "message": e.to_string() })
        }
        other => json!({ "message": other.to_string() }),
    }
}

fn check(property: Property, d: &SuperOrientation, json: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let g = d.underlying();
    let (holds, witness): (bool, Value) = match property {
        Property::Chordal => match recognize_chordal(g) {
            ChordalEvidence::Chordal(s) => (true, json!({ "peo": s.peo })),
            ChordalEvidence::Hole(hole) => (false, json!({ "hole": hole })),
        },
        Property::ClawFree => match check_claw_free(g) {
            ClawCheck::ClawFree => (true, Value::Null),
            ClawCheck::Claw { center, leaves } => (false, json!({ "center": center, "leaves": leaves })),
        },
        Property::CliqueAcyclic => {
            let evidence = (!d.is_orientation()).then(|| recognize_chordal(g));
            match check_clique_acyclic(d, evidence.as_ref()) {
                Ok(CliqueAcyclicity::Acyclic) => (true, Value::Null),
                Ok(CliqueAcyclicity::Cycle(cycle)) => (false, json!({ "cycle": cycle })),
                Err(e) => {
                    if json {
                        writeln!(out, "{}", json!({ "status": "class-violation", "witness": witness_json(&e) }))?;
                    } else {
                        writeln!(out, "class violation: {e}")?;
                    }
                    return Ok(EXIT_CLASS);
                }
            }
        }
        Property::FlatEdges => (true, json!({ "flat_edges": find_flat_edges(g) })),
    };
    if json {
        let status = if holds { "holds" } else { "fails" };
        writeln!(out, "{}", json!({ "status": status, "witness": witness }))?;
    } else {
        let mut text = String::from(if holds { "holds" } else { "fails" });
        if !witness.is_null() {
            let _ = write!(text, ": {witness}");
        }
        writeln!(out, "{text}")?;
    }
    Ok(if holds { EXIT_OK } else { EXIT_NO })
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
