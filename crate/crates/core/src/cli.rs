//! Command-line front end.
//!
//! Every command builds a serializable output value. JSON output is that
//! value printed compactly; table output is rendered from the same value
//! after a JSON round trip, so the two can never disagree.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 size limit
//! exceeded, 4 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::approximation::{
    approximate, degree_of_dependency, positive_region, rough_membership, ApproximationReport,
    DependencyReport,
};
use crate::automorphism::{orbits, orbits_brute_force, OrbitPartition, DEFAULT_ORACLE_BOUND};
use crate::discernibility::{
    discernibility_matrix, eqdm, quotient_matrix, same_orbit_structure,
    QuotientDiscernibilityMatrix,
};
use crate::error::Error;
use crate::graph::{
    parse_dimacs, parse_edge_list, to_dimacs, to_edge_list, Family, Graph, GraphSummary,
};
use crate::indiscernibility::{classify_vertices, indiscernibility_partition, Classification};
use crate::partition::Partition;
use crate::reduct::{
    core, enumerate_reducts, essential_sets, exhaustive_essential_sets, exhaustive_reducts,
    EssentialSummary, ReductSet, DEFAULT_SUBSET_BOUND,
};
use crate::verify::{verify, Suite, VerifyOptions, VerifyReport};
use crate::vertex_set::{parse_vertex_set, VertexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE_LIMIT: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "orbitrough",
    version,
    about = "Automorphism orbits and rough-set analysis of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph file: `.col`/`.dimacs` for DIMACS, anything else as an edge list.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Built-in family such as `path:5`, `complete_bipartite:2,3` or `rigid6`.
    #[arg(long)]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SecondGraphSource {
    #[arg(long)]
    pub graph2: Option<PathBuf>,
    #[arg(long)]
    pub family2: Option<Family>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Search,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Dimacs,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit partition of the automorphism group.
    Orbits {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
        /// Largest order the n! oracle accepts.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
    /// Indiscernibility partition of an attribute set.
    Partition {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
    },
    /// Interior, exterior and delimiting vertices.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
    },
    /// Lower and upper approximations of a target set.
    Approx {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        #[arg(long)]
        target: String,
    },
    /// Rough membership of one vertex, or of every vertex.
    Membership {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Positive region of a decision set.
    Posregion {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        #[arg(long)]
        decision: String,
    },
    /// Degree of dependency of a decision set.
    Dependency {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        #[arg(long)]
        decision: String,
    },
    /// All reducts of an attribute set and their core.
    Reducts {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        /// Search every subset instead of using the orbit structure.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BOUND)]
        subset_bound: usize,
    },
    /// Core of an attribute set.
    Core {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
    },
    /// Essential sets, the ens sequence and the essential dimension.
    Essential {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        attrs: String,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BOUND)]
        subset_bound: usize,
    },
    /// Vertex discernibility matrix.
    Dmatrix {
        #[command(flatten)]
        common: Common,
    },
    /// Discernibility matrix over orbits.
    Qdm {
        #[command(flatten)]
        common: Common,
    },
    /// Distinct non-empty entries of the orbit matrix.
    Eqdm {
        #[command(flatten)]
        common: Common,
    },
    /// Whether two graphs on the same vertex set share their orbits.
    SameStructure {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        second: SecondGraphSource,
    },
    /// Run property suites against a graph.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BOUND)]
        subset_bound: usize,
    },
    /// Write a family member or a seeded random graph.
    Generate {
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        family: Option<Family>,
        /// Order of a G(n, p) random graph.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "as", value_enum, default_value_t = GraphFormat::Edgelist)]
        output: GraphFormat,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::SizeLimit { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load_graph(path: Option<&Path>, family: Option<&Family>) -> Result<Graph, Failure> {
    if let Some(f) = family {
        return Ok(f.build()?);
    }
    let path = path.expect("clap enforces one graph source");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let parsed = if matches!(ext, "col" | "dimacs") {
        parse_dimacs(&text)
    } else {
        parse_edge_list(&text)
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn set(text: &str, n: usize) -> Result<VertexSet, Failure> {
    Ok(parse_vertex_set(text, n)?)
}

/// A command result that can be printed as JSON or as a text table.
trait View: Serialize + DeserializeOwned {
    fn table(&self) -> String;
}

fn set_str(s: &VertexSet) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        s.to_string()
    }
}

/// Left-aligned columns separated by two spaces.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.push_str(&" ".repeat(widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn row(cells: &[&str]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

impl View for OrbitPartition {
    fn table(&self) -> String {
        let mut rows = vec![row(&["orbit", "size", "members"])];
        for (i, o) in self.orbits().iter().enumerate() {
            rows.push(vec![i.to_string(), o.len().to_string(), set_str(o)]);
        }
        format!("k = {}\n{}", self.k(), align(&rows))
    }
}

impl View for Partition {
    fn table(&self) -> String {
        format!("{}\n", self.render_bar(|v| v.to_string()))
    }
}

impl View for Classification {
    fn table(&self) -> String {
        align(&[
            vec!["interior".into(), set_str(&self.interior)],
            vec!["exterior".into(), set_str(&self.exterior)],
            vec!["delimiting".into(), set_str(&self.delimiting)],
        ])
    }
}

impl View for ApproximationReport {
    fn table(&self) -> String {
        align(&[
            vec!["lower".into(), set_str(&self.lower)],
            vec!["upper".into(), set_str(&self.upper)],
            vec!["boundary".into(), set_str(&self.boundary)],
            vec!["exact".into(), self.exact.to_string()],
        ])
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct MembershipEntry {
    vertex: usize,
    value: String,
    decimal: f64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Memberships {
    memberships: Vec<MembershipEntry>,
}

impl View for Memberships {
    fn table(&self) -> String {
        let mut rows = vec![row(&["vertex", "mu", "decimal"])];
        for m in &self.memberships {
            rows.push(vec![
                m.vertex.to_string(),
                m.value.clone(),
                format!("{:.6}", m.decimal),
            ]);
        }
        align(&rows)
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct PositiveRegion {
    positive_region: VertexSet,
}

impl View for PositiveRegion {
    fn table(&self) -> String {
        align(&[vec![
            "positive_region".into(),
            set_str(&self.positive_region),
        ]])
    }
}

impl View for DependencyReport {
    fn table(&self) -> String {
        align(&[
            vec!["positive_region".into(), set_str(&self.positive_region)],
            vec!["degree".into(), self.degree_string()],
            vec!["decimal".into(), format!("{:.6}", self.degree_decimal())],
        ])
    }
}

impl View for ReductSet {
    fn table(&self) -> String {
        let mut rows = vec![row(&["reduct", "size"])];
        for r in &self.reducts {
            rows.push(vec![set_str(r), r.len().to_string()]);
        }
        format!("{}core  {}\n", align(&rows), set_str(&self.core))
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct CoreOutput {
    core: VertexSet,
}

impl View for CoreOutput {
    fn table(&self) -> String {
        align(&[vec!["core".into(), set_str(&self.core)]])
    }
}

impl View for EssentialSummary {
    fn table(&self) -> String {
        let mut rows = vec![row(&["essential_set", "size"])];
        for s in &self.essential_sets {
            rows.push(vec![set_str(s), s.len().to_string()]);
        }
        let ens: Vec<String> = self.ens.iter().map(usize::to_string).collect();
        let edim = self.edim.map_or("none".to_string(), |e| e.to_string());
        format!("{}ens   ({})\nedim  {edim}\n", align(&rows), ens.join(","))
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct DMatrixOutput {
    n: usize,
    entries: Vec<Vec<VertexSet>>,
}

impl View for DMatrixOutput {
    fn table(&self) -> String {
        let mut rows = vec![std::iter::once(String::new())
            .chain((0..self.n).map(|j| j.to_string()))
            .collect()];
        for (i, r) in self.entries.iter().enumerate() {
            rows.push(
                std::iter::once(i.to_string())
                    .chain(r.iter().map(set_str))
                    .collect(),
            );
        }
        align(&rows)
    }
}

impl View for QuotientDiscernibilityMatrix {
    fn table(&self) -> String {
        let mut out = self.render_table(|v| v.to_string());
        for o in &self.orbits {
            out.push_str(&format!(
                "O({}) = {}\n",
                o.min_vertex().expect("non-empty"),
                set_str(o)
            ));
        }
        out
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct EqdmOutput {
    eqdm: Vec<VertexSet>,
}

impl View for EqdmOutput {
    fn table(&self) -> String {
        let mut rows = vec![row(&["entry", "size"])];
        for s in &self.eqdm {
            rows.push(vec![set_str(s), s.len().to_string()]);
        }
        align(&rows)
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct SameStructure {
    same_orbit_structure: bool,
    k1: usize,
    k2: usize,
}

impl View for SameStructure {
    fn table(&self) -> String {
        align(&[
            vec![
                "same_orbit_structure".into(),
                self.same_orbit_structure.to_string(),
            ],
            vec!["k1".into(), self.k1.to_string()],
            vec!["k2".into(), self.k2.to_string()],
        ])
    }
}

impl View for VerifyReport {
    fn table(&self) -> String {
        format!("{self}\n")
    }
}

impl View for GraphSummary {
    fn table(&self) -> String {
        let mut rows = vec![row(&["u", "v"])];
        for [u, v] in &self.edges {
            rows.push(vec![u.to_string(), v.to_string()]);
        }
        format!("n = {}, m = {}\n{}", self.n, self.m, align(&rows))
    }
}

/// Renders a value in the requested format. The table path deserializes
/// the JSON text back into `T` before drawing.
fn emit<T: View>(value: &T, format: Format) -> String {
    let json = serde_json::to_string(value).expect("output types serialize");
    match format {
        Format::Json => format!("{json}\n"),
        Format::Table => table_from_json::<T>(&json).expect("round trip of own output"),
    }
}

fn table_from_json<T: View>(json: &str) -> serde_json::Result<String> {
    Ok(serde_json::from_str::<T>(json)?.table())
}

/// Table view of a command's JSON output, keyed by command name.
pub fn render_table(command: &str, json: &str) -> Option<String> {
    let r = match command {
        "orbits" => table_from_json::<OrbitPartition>(json),
        "partition" => table_from_json::<Partition>(json),
        "classify" => table_from_json::<Classification>(json),
        "approx" => table_from_json::<ApproximationReport>(json),
        "membership" => table_from_json::<Memberships>(json),
        "posregion" => table_from_json::<PositiveRegion>(json),
        "dependency" => table_from_json::<DependencyReport>(json),
        "reducts" => table_from_json::<ReductSet>(json),
        "core" => table_from_json::<CoreOutput>(json),
        "essential" => table_from_json::<EssentialSummary>(json),
        "dmatrix" => table_from_json::<DMatrixOutput>(json),
        "qdm" => table_from_json::<QuotientDiscernibilityMatrix>(json),
        "eqdm" => table_from_json::<EqdmOutput>(json),
        "same-structure" => table_from_json::<SameStructure>(json),
        "verify" => table_from_json::<VerifyReport>(json),
        _ => return None,
    };
    r.ok()
}

fn run_command(command: Command) -> Result<(String, i32), Failure> {
    let load = |c: &Common| load_graph(c.source.graph.as_deref(), c.source.family.as_ref());
    let out = match command {
        Command::Orbits {
            common,
            method,
            oracle_bound,
        } => {
            let g = load(&common)?;
            let op = match method {
                Method::Search => orbits(&g),
                Method::Brute => orbits_brute_force(&g, oracle_bound)?,
            };
            emit(&op, common.format)
        }
        Command::Partition { common, attrs } => {
            let g = load(&common)?;
            let a = set(&attrs, g.n())?;
            emit(&indiscernibility_partition(&orbits(&g), &a), common.format)
        }
        Command::Classify { common, attrs } => {
            let g = load(&common)?;
            let a = set(&attrs, g.n())?;
            emit(&classify_vertices(&orbits(&g), &a), common.format)
        }
        Command::Approx {
            common,
            attrs,
            target,
        } => {
            let g = load(&common)?;
            let (a, q) = (set(&attrs, g.n())?, set(&target, g.n())?);
            emit(&approximate(&orbits(&g), &a, &q), common.format)
        }
        Command::Membership {
            common,
            attrs,
            target,
            vertex,
        } => {
            let g = load(&common)?;
            let (a, q) = (set(&attrs, g.n())?, set(&target, g.n())?);
            let op = orbits(&g);
            let vertices: Vec<usize> = match vertex {
                Some(x) => vec![x],
                None => (0..g.n()).collect(),
            };
            let mut memberships = Vec::new();
            for x in vertices {
                let mu = rough_membership(&op, &a, &q, x)?;
                memberships.push(MembershipEntry {
                    vertex: x,
                    value: format!("{}/{}", mu.numer(), mu.denom()),
                    decimal: *mu.numer() as f64 / *mu.denom() as f64,
                });
            }
            emit(&Memberships { memberships }, common.format)
        }
        Command::Posregion {
            common,
            attrs,
            decision,
        } => {
            let g = load(&common)?;
            let (a, d) = (set(&attrs, g.n())?, set(&decision, g.n())?);
            emit(
                &PositiveRegion {
                    positive_region: positive_region(&orbits(&g), &a, &d),
                },
                common.format,
            )
        }
        Command::Dependency {
            common,
            attrs,
            decision,
        } => {
            let g = load(&common)?;
            let (a, d) = (set(&attrs, g.n())?, set(&decision, g.n())?);
            emit(&degree_of_dependency(&orbits(&g), &a, &d), common.format)
        }
        Command::Reducts {
            common,
            attrs,
            exhaustive,
            subset_bound,
        } => {
            let g = load(&common)?;
            let a = set(&attrs, g.n())?;
            let op = orbits(&g);
            let r = if exhaustive {
                exhaustive_reducts(&op, &a, subset_bound)?
            } else {
                enumerate_reducts(&op, &a)
            };
            emit(&r, common.format)
        }
        Command::Core { common, attrs } => {
            let g = load(&common)?;
            let a = set(&attrs, g.n())?;
            emit(
                &CoreOutput {
                    core: core(&orbits(&g), &a),
                },
                common.format,
            )
        }
        Command::Essential {
            common,
            attrs,
            exhaustive,
            subset_bound,
        } => {
            let g = load(&common)?;
            let a = set(&attrs, g.n())?;
            let op = orbits(&g);
            let e = if exhaustive {
                exhaustive_essential_sets(&op, &a, subset_bound)?
            } else {
                essential_sets(&op, &a)
            };
            emit(&e, common.format)
        }
        Command::Dmatrix { common } => {
            let g = load(&common)?;
            let d = discernibility_matrix(&orbits(&g));
            let entries = (0..d.n()).map(|i| d.row(i).to_vec()).collect();
            emit(&DMatrixOutput { n: d.n(), entries }, common.format)
        }
        Command::Qdm { common } => {
            let g = load(&common)?;
            emit(&quotient_matrix(&orbits(&g)), common.format)
        }
        Command::Eqdm { common } => {
            let g = load(&common)?;
            emit(
                &EqdmOutput {
                    eqdm: eqdm(&orbits(&g)),
                },
                common.format,
            )
        }
        Command::SameStructure { common, second } => {
            let g1 = load(&common)?;
            let g2 = load_graph(second.graph2.as_deref(), second.family2.as_ref())?;
            let (o1, o2) = (orbits(&g1), orbits(&g2));
            let same = same_orbit_structure(&o1, &o2)?;
            emit(
                &SameStructure {
                    same_orbit_structure: same,
                    k1: o1.k(),
                    k2: o2.k(),
                },
                common.format,
            )
        }
        Command::Verify {
            common,
            suite,
            seed,
            samples,
            oracle_bound,
            subset_bound,
        } => {
            let g = load(&common)?;
            let opts = VerifyOptions {
                seed,
                samples,
                oracle_bound,
                subset_bound,
            };
            let report = verify(&g, suite, &opts)?;
            let code = if report.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            return Ok((emit(&report, common.format), code));
        }
        Command::Generate {
            family,
            random,
            p,
            seed,
            output,
        } => {
            let g = match (family, random) {
                (Some(f), _) => f.build()?,
                (None, Some(n)) => {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Failure::Input(format!(
                            "edge probability {p} is outside [0, 1]"
                        )));
                    }
                    Graph::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed))?
                }
                (None, None) => unreachable!("clap requires a source"),
            };
            match output {
                GraphFormat::Edgelist => to_edge_list(&g),
                GraphFormat::Dimacs => to_dimacs(&g),
                GraphFormat::Json => emit(&g.summary(), Format::Json),
            }
        }
    };
    Ok((out, EXIT_OK))
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return EXIT_USAGE;
            }
            let _ = stdout.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match run_command(cli.command) {
        Ok((text, code)) => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Limit(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_SIZE_LIMIT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("orbitrough").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn orbits_of_path() {
        let (code, out, _) = call(&["orbits", "--family", "path:5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"k\":3,\"orbits\":[[0,4],[1,3],[2]]}\n");
        let (_, brute, _) = call(&["orbits", "--family", "path:5", "--method", "brute"]);
        assert_eq!(brute, out);
    }

    #[test]
    fn partition_bar_table() {
        let (code, out, _) = call(&[
            "partition",
            "--family",
            "path:5",
            "--attrs",
            "0",
            "--format",
            "table",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "04|123\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["partition", "--family", "path:5"]).0, EXIT_USAGE);
        assert_eq!(call(&["orbits"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        let (code, _, err) = call(&["partition", "--family", "path:5", "--attrs", "9"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("out of range"));
        let (code, _, err) = call(&["orbits", "--family", "path:12", "--method", "brute"]);
        assert_eq!(code, EXIT_SIZE_LIMIT);
        assert!(err.contains("bound 9"));
        assert_eq!(
            call(&["orbits", "--graph", "/nonexistent.txt"]).0,
            EXIT_INPUT
        );
    }

    #[test]
    fn tables_round_trip_through_json() {
        let commands: &[&[&str]] = &[
            &["orbits"],
            &["classify", "--attrs", "0,1"],
            &["approx", "--attrs", "0", "--target", "1,2"],
            &["membership", "--attrs", "0", "--target", "1,2"],
            &["posregion", "--attrs", "0", "--decision", "1"],
            &["dependency", "--attrs", "0", "--decision", "1"],
            &["reducts", "--attrs", "@all"],
            &["core", "--attrs", "0,1,2"],
            &["essential", "--attrs", "@all"],
            &["dmatrix"],
            &["qdm"],
            &["eqdm"],
            &["verify", "--suite", "reducts"],
        ];
        for args in commands {
            let mut base: Vec<&str> = args.to_vec();
            base.extend(["--family", "path:5"]);
            let (_, json, _) = call(&base);
            base.extend(["--format", "table"]);
            let (_, table, _) = call(&base);
            assert_eq!(
                render_table(args[0], json.trim_end()).unwrap(),
                table,
                "{args:?}"
            );
        }
    }

    #[test]
    fn generate_is_seeded() {
        let (_, a, _) = call(&["generate", "--random", "6", "--seed", "3"]);
        let (_, b, _) = call(&["generate", "--random", "6", "--seed", "3"]);
        assert_eq!(a, b);
        assert!(parse_edge_list(&a).is_ok());
        let (_, d, _) = call(&["generate", "--family", "cycle:4", "--as", "dimacs"]);
        assert!(d.contains("p edge 4 4"));
    }
}
