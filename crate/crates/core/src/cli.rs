//! Command-line front end. [`run`] takes its streams as arguments so that it
//! can be driven from tests.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::arrangement::{chambers, chambers_directed, verify_zaslavsky, Chamber};
use crate::chromatic::{
    chromatic_chambers, chromatic_oracle, chromatic_theorem_with, is_invariant_symmetric, specialize_count,
    DescentRule,
};
use crate::error::{Error, Result};
use crate::fundamental::{f_product, fexpr_add, fexpr_to_monomial, FExpr};
use crate::graph::{DirectedSignedGraph, SignedGraph};
use crate::io::{self, load_document, Document, Format};
use crate::limits::{Limits, DEFAULT_MAX_VERTICES};
use crate::named::{build_named, with_negative_loops, NamedGraph};
use crate::sqsym::{dimension_series, SqsExpr, TPoly};

#[derive(Debug, Parser)]
#[command(name = "sqsym", version, about = "Signed quasisymmetric functions and chromatic invariants of directed signed graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    pub format: FormatArg,

    /// Refuse exhaustive enumerations on more vertices than this.
    #[arg(long, env = "SQSYM_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES, global = true)]
    pub max_vertices: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Chambers,
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Balanced,
    Rank,
}

impl From<RuleArg> for DescentRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Balanced => DescentRule::Balanced,
            RuleArg::Rank => DescentRule::Rank,
        }
    }
}

/// Documents are given as a path, `-` for stdin, or an inline literal.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// The invariant X(x; t) of a directed graph.
    Chromatic {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Descent rule used by the theorem method.
        #[arg(long, value_enum, default_value_t = RuleArg::Balanced)]
        rule: RuleArg,
    },
    /// Whether every t-coefficient of X is signed symmetric (exit 1 if not).
    Symmetry { input: String },
    /// Chambers of the graph's arrangement, one per line.
    Chambers { input: String },
    /// Compares the three methods for X (exit 1 on mismatch).
    VerifyTheorem {
        input: String,
        #[arg(long, value_enum, default_value_t = RuleArg::Balanced)]
        rule: RuleArg,
    },
    /// Compares chambers with acyclic orientations (exit 1 on mismatch).
    VerifyZaslavsky { input: String },
    /// Dimensions of the graded pieces in degrees 0..=max.
    Dims {
        #[arg(long)]
        max: usize,
    },
    /// Product of two expressions (monomial, fundamental or polynomial in t).
    Product { left: String, right: String },
    /// Rewrites fundamental functions over minimal indices.
    Reduce { input: String },
    /// Prints a named graph as a JSON document.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
        /// Add an introverted negative loop at every vertex.
        #[arg(long, global = true)]
        negative_loops: bool,
    },
    /// Number of proper colorings with values in [-m, m], weighted by t^asc.
    Count {
        input: String,
        #[arg(long)]
        m: u64,
        /// A rational such as 1, -2 or 3/4.
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Partition enumerator of a labelled signed poset.
    Gamma { input: String },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Arcs i -> i+p mod d for 1 <= p <= k.
    Circulant { d: usize, k: usize },
    /// The circulant switched at the listed vertices.
    CirculantSwitched {
        d: usize,
        k: usize,
        #[arg(required = true, num_args = 1..)]
        switched: Vec<usize>,
    },
    /// The two-vertex example with an arc, a negative edge and a negative loop.
    Example2,
    /// A seeded random directed signed graph.
    Random {
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Output text plus exit status.
struct Outcome {
    text: String,
    status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: 0 }
    }

    fn verdict(text: String, holds: bool) -> Self {
        Outcome {
            text,
            status: if holds { 0 } else { 1 },
        }
    }
}

struct Context<'a> {
    format: Format,
    limits: Limits,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn load(&mut self, source: &str) -> Result<Document> {
        load_document(source, self.stdin, &self.limits)
    }

    fn directed(&mut self, source: &str) -> Result<DirectedSignedGraph> {
        match self.load(source)? {
            Document::DirectedGraph(g) => Ok(g),
            Document::Graph(g) if g.edges().is_empty() => Ok(DirectedSignedGraph::edgeless(g.d())),
            other => Err(Error::Parse(format!(
                "expected a directed graph (edges with tau_u, tau_v), got a {} document",
                other.kind()
            ))),
        }
    }

    fn any_graph(&mut self, source: &str) -> Result<(SignedGraph, Option<DirectedSignedGraph>)> {
        match self.load(source)? {
            Document::DirectedGraph(g) => Ok((g.underlying(), Some(g))),
            Document::Graph(g) => Ok((g, None)),
            other => Err(Error::Parse(format!("expected a graph, got a {} document", other.kind()))),
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn report(fields: &[(&'static str, Value)]) -> String {
    io::render_report(fields.iter().cloned().collect::<BTreeMap<_, _>>())
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let mut ctx = Context {
        format,
        limits: Limits::with_max_vertices(cli.max_vertices),
        stdin,
    };
    match cli.command {
        Command::Chromatic { input, method, rule } => {
            let g = ctx.directed(&input)?;
            let x = match method {
                Method::Oracle => chromatic_oracle(&g, &ctx.limits)?,
                Method::Chambers => chromatic_chambers(&g, &ctx.limits)?,
                Method::Theorem => chromatic_theorem_with(&g, rule.into(), &ctx.limits)?,
            };
            Ok(Outcome::ok(io::render_tpoly(&x, format)))
        }
        Command::Symmetry { input } => {
            let g = ctx.directed(&input)?;
            let x = chromatic_oracle(&g, &ctx.limits)?;
            let holds = is_invariant_symmetric(&x);
            let top = g.edges().len();
            let failing: Vec<u32> = x
                .coeffs()
                .iter()
                .filter(|(_, e)| !e.is_signed_symmetric())
                .map(|(&t, _)| t)
                .collect();
            let text = if ctx.json() {
                report(&[
                    ("signed_symmetric", json!(holds)),
                    ("t_degrees", json!([0, top])),
                    ("asymmetric_t_degrees", json!(failing)),
                ])
            } else if holds {
                format!("signed-symmetric: {holds} (t-degrees 0..{top})")
            } else {
                let list: Vec<String> = failing.iter().map(u32::to_string).collect();
                format!("signed-symmetric: {holds} (t-degrees 0..{top}; asymmetric at {})", list.join(", "))
            };
            Ok(Outcome::verdict(text, holds))
        }
        Command::Chambers { input } => {
            let (g, directed) = ctx.any_graph(&input)?;
            let list = match &directed {
                Some(d) => chambers_directed(d, &ctx.limits)?,
                None => chambers(&g, &ctx.limits)?,
            };
            Ok(Outcome::ok(render_chambers(&list, directed.is_some(), format)))
        }
        Command::VerifyTheorem { input, rule } => {
            let g = ctx.directed(&input)?;
            let oracle = chromatic_oracle(&g, &ctx.limits)?;
            let cham = chromatic_chambers(&g, &ctx.limits)?;
            let theorem = chromatic_theorem_with(&g, rule.into(), &ctx.limits)?;
            let holds = oracle == cham && oracle == theorem;
            let (degrees, terms) = (oracle.coeffs().len(), oracle.term_count());
            let text = if ctx.json() {
                report(&[
                    ("oracle_equals_chambers", json!(oracle == cham)),
                    ("oracle_equals_theorem", json!(oracle == theorem)),
                    ("t_degrees", json!(degrees)),
                    ("m_terms", json!(terms)),
                ])
            } else if holds {
                format!("oracle == chambers == theorem: OK ({degrees} t-degrees, {terms} M-terms)")
            } else {
                format!(
                    "MISMATCH\noracle:   {oracle}\nchambers: {cham}\ntheorem:  {theorem}"
                )
            };
            Ok(Outcome::verdict(text, holds))
        }
        Command::VerifyZaslavsky { input } => {
            let (g, _) = ctx.any_graph(&input)?;
            let r = verify_zaslavsky(&g, &ctx.limits)?;
            let text = if ctx.json() {
                report(&[
                    ("chambers", json!(r.chambers)),
                    ("acyclic_orientations", json!(r.acyclic)),
                    ("region_map_consistent", json!(r.region_map_consistent)),
                    ("holds", json!(r.holds())),
                ])
            } else {
                format!(
                    "chambers: {}, acyclic orientations: {}, region map consistent: {}: {}",
                    r.chambers,
                    r.acyclic,
                    r.region_map_consistent,
                    if r.holds() { "OK" } else { "MISMATCH" }
                )
            };
            Ok(Outcome::verdict(text, r.holds()))
        }
        Command::Dims { max } => {
            let series = dimension_series(max);
            let text = if ctx.json() {
                let values: Vec<String> = series.iter().map(|a| a.to_string()).collect();
                serde_json::to_string(&values)?
            } else {
                series.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
            };
            Ok(Outcome::ok(text))
        }
        Command::Product { left, right } => {
            let (a, b) = (ctx.load(&left)?, ctx.load(&right)?);
            Ok(Outcome::ok(product(a, b, format)?))
        }
        Command::Reduce { input } => match ctx.load(&input)? {
            Document::FExpression(e) => {
                let mut out = FExpr::new();
                for (fi, c) in &e {
                    for (g, k) in fi.reduce_to_minimal() {
                        fexpr_add(&mut out, g, c * k);
                    }
                }
                Ok(Outcome::ok(io::render_fexpr(&out, format)))
            }
            other => Err(Error::Parse(format!("reduce expects F terms, got a {} document", other.kind()))),
        },
        Command::Gen { which, negative_loops } => {
            let named = match which {
                GenCommand::Circulant { d, k } => NamedGraph::Circulant { d, k },
                GenCommand::CirculantSwitched { d, k, switched } => NamedGraph::SwitchedCirculant { d, k, switched },
                GenCommand::Example2 => NamedGraph::Example2,
                GenCommand::Random { d, seed } => NamedGraph::Random { d, seed },
            };
            let mut g = build_named(&named)?;
            if negative_loops {
                g = with_negative_loops(&g)?;
            }
            Ok(Outcome::ok(io::render_graph(&g)))
        }
        Command::Count { input, m, t } => {
            let t_value = BigRational::from_str(t.trim())
                .map_err(|_| Error::Parse(format!("--t {t:?} is not a rational p/q")))?;
            let g = ctx.directed(&input)?;
            let x = chromatic_oracle(&g, &ctx.limits)?;
            let n = specialize_count(&x, m, &t_value);
            let text = if ctx.json() {
                report(&[("m", json!(m)), ("t", json!(t_value.to_string())), ("count", json!(n.to_string()))])
            } else {
                n.to_string()
            };
            Ok(Outcome::ok(text))
        }
        Command::Gamma { input } => match ctx.load(&input)? {
            Document::Poset { poset, labeling } => {
                let e = poset.gamma_enumerator(&labeling, &ctx.limits)?;
                Ok(Outcome::ok(io::render_expr(&e, format)))
            }
            other => Err(Error::Parse(format!("gamma expects a poset, got a {} document", other.kind()))),
        },
    }
}

fn as_monomial(doc: Document) -> Result<TPoly> {
    match doc {
        Document::Expression(e) => Ok(TPoly::constant(e)),
        Document::FExpression(e) => Ok(TPoly::constant(fexpr_to_monomial(&e))),
        Document::TPoly(x) => Ok(x),
        other => Err(Error::Parse(format!("product expects expressions, got a {} document", other.kind()))),
    }
}

/// F times F stays in the fundamental family; anything else is expanded
/// into monomials first.
fn product(a: Document, b: Document, format: Format) -> Result<String> {
    match (a, b) {
        (Document::FExpression(x), Document::FExpression(y)) => {
            let mut out = FExpr::new();
            for (f1, c1) in &x {
                for (f2, c2) in &y {
                    let coef = c1 * c2;
                    for (g, k) in f_product(f1, f2)?.to_fexpr() {
                        fexpr_add(&mut out, g, &coef * k);
                    }
                }
            }
            Ok(io::render_fexpr(&out, format))
        }
        (Document::Expression(x), Document::Expression(y)) => Ok(io::render_expr(&x.product(&y), format)),
        (a, b) => {
            let x = as_monomial(a)?.product(&as_monomial(b)?);
            match x.coeffs().len() {
                0 => Ok(io::render_expr(&SqsExpr::zero(), format)),
                1 if x.coeffs().contains_key(&0) => Ok(io::render_expr(&x.coefficient(0), format)),
                _ => Ok(io::render_tpoly(&x, format)),
            }
        }
    }
}

fn render_chambers(list: &[Chamber], directed: bool, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = list
                .iter()
                .map(|c| {
                    json!({
                        "region": c.name().word(),
                        "size": c.regions.len(),
                        "asc": if directed { json!(c.asc) } else { Value::Null },
                        "orientation": c.fingerprint(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        }
        Format::Text => list
            .iter()
            .map(|c| {
                let asc = if directed { format!(" asc={}", c.asc) } else { String::new() };
                format!("{} size={}{} orientation=[{}]", c.name(), c.regions.len(), asc, c.fingerprint())
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit status: 0 on success, 1 when a verification
/// fails, 2 on bad input or a refused size.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli, stdin) {
        Ok(outcome) => {
            let _ = writeln!(stdout, "{}", outcome.text);
            outcome.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
