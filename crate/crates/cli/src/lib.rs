//! Command-line frontend. [`run`] takes the full argument list and writers
//! for standard output and standard error, and returns the exit code:
//! 0 on success, 1 on domain errors, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use zmono::dual::{dual, export_dot, subgraph_by_type};
use zmono::generators::{
    bipyramid, platonic, projective_plane_6, random_triangulation, torus_k7, Base, GeneratorError, Platonic,
};
use zmono::monodromy::MonodromyError;
use zmono::report::{forest_line, AnalysisReport, ForestSummary, SurfaceSummary, SCHEMA_VERSION};
use zmono::sum::{connected_sum, find_z_knotted_sum, SpecialMap, SumError, SumResult};
use zmono::surface::SurfaceError;
use zmono::zigzag::enumerate;
use zmono::{Analysis, Face, MonodromyTag, Triangulation};

#[derive(Parser)]
#[command(
    name = "zmono",
    version,
    about = "Zigzags and z-monodromy of triangulated closed surfaces"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a triangulation and print its surface invariants.
    Check { file: PathBuf },
    /// List zigzags, one line per reversal pair.
    Zigzags {
        file: PathBuf,
        /// Print the full oriented traversal of each pair.
        #[arg(long)]
        full: bool,
        /// Print the face shadow of each pair.
        #[arg(long)]
        shadow: bool,
    },
    /// Per-face monodromy types.
    Monodromy {
        file: PathBuf,
        /// Restrict to one face, given as `x,y,z`.
        #[arg(long, value_parser = parse_face)]
        face: Option<Face>,
    },
    /// Forest verdicts for the M1 and M2 dual subgraphs.
    Forests {
        file: PathBuf,
        /// Write PREFIX.g1.dot and PREFIX.g2.dot.
        #[arg(long, value_name = "PREFIX")]
        dot: Option<String>,
        /// Write the full dual graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dual_dot: Option<PathBuf>,
    },
    /// Connected sum along a given special map.
    Sum {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_parser = parse_face)]
        face1: Face,
        #[arg(long, value_parser = parse_face)]
        face2: Face,
        /// Vertex pairing, e.g. `a=x,b=y,c=z`.
        #[arg(long)]
        map: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a special map giving a z-knotted connected sum.
    FindSum {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a triangulation.
    Gen(GenArgs),
    /// Full analysis report.
    Report { file: PathBuf },
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    shape: Shape,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Write the mutation log of a random triangulation.
    #[arg(long, global = true)]
    log: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Shape {
    Bipyramid {
        n: usize,
    },
    Tetrahedron,
    Octahedron,
    Icosahedron,
    Rp2,
    TorusK7,
    Random {
        /// Base descriptor: tetrahedron, bipyramid:N, rp2, torus-k7 or X#Y.
        #[arg(long)]
        base: String,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_face(s: &str) -> std::result::Result<Face, String> {
    Face::parse(s).map_err(|e| match e {
        SurfaceError::Parse { message, .. } => message,
        other => other.to_string(),
    })
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Sum(#[from] SumError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("--log only applies to random triangulations")]
    LogWithoutRandom,
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            Self::Surface(e) => e.name(),
            Self::Monodromy(e) => e.name(),
            Self::Sum(e) => e.name(),
            Self::Generator(e) => e.name(),
            Self::Io { .. } => "IoError",
            Self::LogWithoutRandom => "InvalidParameter",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs the tool on `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut buf = Vec::new();
    match dispatch(&cli, &mut buf) {
        Ok(()) => {
            let _ = out.write_all(&buf);
            let _ = out.flush();
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<()> {
    let json = cli.json;
    match &cli.command {
        Command::Check { file } => check(&load(file)?, json, out),
        Command::Zigzags { file, full, shadow } => zigzags(&load(file)?, *full, *shadow, json, out),
        Command::Monodromy { file, face } => monodromy(&load(file)?, face.as_ref(), json, out),
        Command::Forests { file, dot, dual_dot } => {
            forests(&load(file)?, dot.as_deref(), dual_dot.as_deref(), json, out)
        }
        Command::Sum {
            file1,
            file2,
            face1,
            face2,
            map,
            output,
        } => {
            let (t1, t2) = (load(file1)?, load(file2)?);
            let m = SpecialMap::parse(face1.clone(), face2.clone(), map)?;
            let result = connected_sum(&t1, &t2, &m)?;
            emit_sum(&m, &result, output.as_deref(), json, out)
        }
        Command::FindSum { file1, file2, output } => {
            let (t1, t2) = (load(file1)?, load(file2)?);
            let (m, result) = find_z_knotted_sum(&t1, &t2)?;
            emit_sum(&m, &result, output.as_deref(), json, out)
        }
        Command::Gen(args) => gen(args, out),
        Command::Report { file } => {
            let t = load(file)?;
            let report = AnalysisReport::new(&t)?;
            if json {
                write_json(out, &report)
            } else {
                out.extend_from_slice(report.render_text().as_bytes());
                Ok(())
            }
        }
    }
}

fn load(path: &Path) -> Result<Triangulation> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Triangulation::from_trig(&text)?)
}

fn save(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_json<T: Serialize>(out: &mut Vec<u8>, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).expect("serializing to memory cannot fail");
    out.push(b'\n');
    Ok(())
}

fn push_line(out: &mut Vec<u8>, line: &str) {
    out.extend_from_slice(line.as_bytes());
    out.push(b'\n');
}

#[derive(Serialize)]
struct CheckJson {
    schema: &'static str,
    valid: bool,
    surface: SurfaceSummary,
}

fn check(t: &Triangulation, json: bool, out: &mut Vec<u8>) -> Result<()> {
    let s = SurfaceSummary::of(t);
    if json {
        return write_json(
            out,
            &CheckJson {
                schema: SCHEMA_VERSION,
                valid: true,
                surface: s,
            },
        );
    }
    push_line(
        out,
        &format!(
            "valid: V={} E={} F={} chi={} {}",
            s.vertices, s.edges, s.faces, s.euler_characteristic, s.orientability
        ),
    );
    Ok(())
}

#[derive(Serialize)]
struct ZigzagJson {
    index: usize,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    traversal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shadow: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ZigzagsJson {
    schema: &'static str,
    pair_count: usize,
    pairs: Vec<ZigzagJson>,
}

fn zigzags(t: &Triangulation, full: bool, shadow: bool, json: bool, out: &mut Vec<u8>) -> Result<()> {
    let census = enumerate(t);
    let pairs: Vec<ZigzagJson> = census
        .pairs()
        .iter()
        .enumerate()
        .map(|(index, p)| ZigzagJson {
            index,
            length: p.len(),
            traversal: full.then(|| p.forward.traversal(t).iter().map(ToString::to_string).collect()),
            shadow: shadow.then(|| {
                p.forward
                    .face_shadow()
                    .into_iter()
                    .map(|f| t.face(f).to_string())
                    .collect()
            }),
        })
        .collect();
    if json {
        let doc = ZigzagsJson {
            schema: SCHEMA_VERSION,
            pair_count: pairs.len(),
            pairs,
        };
        return write_json(out, &doc);
    }
    for p in &pairs {
        push_line(out, &format!("pair {}: length {}", p.index, p.length));
        if let Some(tr) = &p.traversal {
            push_line(out, &format!("  traversal: {}", tr.join(" ")));
        }
        if let Some(sh) = &p.shadow {
            push_line(out, &format!("  shadow: {}", sh.join(" ")));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FaceJson {
    face: String,
    #[serde(rename = "type")]
    tag: MonodromyTag,
    locally_z_knotted: bool,
    zigzag_pairs: usize,
    monodromy: String,
}

fn monodromy(t: &Triangulation, face: Option<&Face>, json: bool, out: &mut Vec<u8>) -> Result<()> {
    let analysis = Analysis::new(t)?;
    let ids = match face {
        Some(f) => vec![t
            .face_id(f)
            .ok_or_else(|| MonodromyError::FaceNotInTriangulation(f.clone()))?],
        None => t.face_ids().collect(),
    };
    let rows: Vec<FaceJson> = ids
        .into_iter()
        .map(|f| {
            let r = analysis.report(f);
            FaceJson {
                face: t.face(f).to_string(),
                tag: r.kind.tag,
                locally_z_knotted: r.locally_z_knotted,
                zigzag_pairs: r.zigzag_pair_count_through_face,
                monodromy: r.m.cycle_notation(t, f),
            }
        })
        .collect();
    if json {
        return write_json(out, &rows);
    }
    for r in &rows {
        if face.is_some() {
            push_line(
                out,
                &format!("face {}: {} local={}", r.face, r.tag, r.locally_z_knotted),
            );
            push_line(out, &format!("M_F = {}", r.monodromy));
        } else {
            push_line(out, &format!("{} {} local={}", r.face, r.tag, r.locally_z_knotted));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ForestsJson {
    schema: &'static str,
    g1: ForestSummary,
    g2: ForestSummary,
}

fn forests(t: &Triangulation, dot: Option<&str>, dual_dot: Option<&Path>, json: bool, out: &mut Vec<u8>) -> Result<()> {
    let analysis = Analysis::new(t)?;
    let (g1, _) = ForestSummary::new(t, &analysis, MonodromyTag::M1);
    let (g2, _) = ForestSummary::new(t, &analysis, MonodromyTag::M2);
    if let Some(prefix) = dot {
        for (name, tag) in [("g1", MonodromyTag::M1), ("g2", MonodromyTag::M2)] {
            let g = subgraph_by_type(t, &analysis, tag);
            save(
                Path::new(&format!("{prefix}.{name}.dot")),
                &export_dot(t, &g, name, Some(&analysis)),
            )?;
        }
    }
    if let Some(path) = dual_dot {
        save(path, &export_dot(t, &dual(t), "dual", Some(&analysis)))?;
    }
    if json {
        return write_json(
            out,
            &ForestsJson {
                schema: SCHEMA_VERSION,
                g1,
                g2,
            },
        );
    }
    push_line(out, &format!("G1: {}", forest_line(&g1)));
    push_line(out, &format!("G2: {}", forest_line(&g2)));
    Ok(())
}

#[derive(Serialize)]
struct SumJson {
    schema: &'static str,
    face1: String,
    face2: String,
    map: String,
    z_knotted: bool,
    surface: SurfaceSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    trig: Option<String>,
}

/// Prints the chosen map as `#` comment lines followed by the sum in trig
/// format, so that standard output is itself a loadable file. With `-o`
/// the triangulation goes to the file instead.
fn emit_sum(m: &SpecialMap, r: &SumResult, output: Option<&Path>, json: bool, out: &mut Vec<u8>) -> Result<()> {
    let trig = r.sum.to_trig();
    if let Some(path) = output {
        save(path, &trig)?;
    }
    let s = SurfaceSummary::of(&r.sum);
    let z_knotted = enumerate(&r.sum).pair_count() == 1;
    if json {
        let doc = SumJson {
            schema: SCHEMA_VERSION,
            face1: m.f1.to_string(),
            face2: m.f2.to_string(),
            map: m.to_string(),
            z_knotted,
            surface: s,
            trig: output.is_none().then_some(trig),
        };
        return write_json(out, &doc);
    }
    push_line(out, &format!("# face1 {} face2 {} map {}", m.f1, m.f2, m));
    push_line(
        out,
        &format!(
            "# V={} E={} F={} chi={} {} z-knotted={z_knotted}",
            s.vertices, s.edges, s.faces, s.euler_characteristic, s.orientability
        ),
    );
    if output.is_none() {
        out.extend_from_slice(trig.as_bytes());
    }
    Ok(())
}

fn gen(args: &GenArgs, out: &mut Vec<u8>) -> Result<()> {
    let mut log = None;
    let t = match &args.shape {
        Shape::Bipyramid { n } => bipyramid(*n)?,
        Shape::Tetrahedron => platonic(Platonic::Tetrahedron),
        Shape::Octahedron => platonic(Platonic::Octahedron),
        Shape::Icosahedron => platonic(Platonic::Icosahedron),
        Shape::Rp2 => projective_plane_6(),
        Shape::TorusK7 => torus_k7(),
        Shape::Random { base, steps, seed } => {
            let base: Base = base.parse()?;
            let (t, l) = random_triangulation(&base, *steps, *seed)?;
            log = Some(l);
            t
        }
    };
    match (&args.log, &log) {
        (Some(path), Some(l)) => save(path, &l.to_text())?,
        (Some(_), None) => return Err(CliError::LogWithoutRandom),
        _ => {}
    }
    match &args.output {
        Some(path) => save(path, &t.to_trig()),
        None => {
            out.extend_from_slice(t.to_trig().as_bytes());
            Ok(())
        }
    }
}
