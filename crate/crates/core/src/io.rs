//! JSON documents and deterministic text/JSON rendering.
//!
//! A document is recognised by its keys: `edges` (graph), `covers` (poset),
//! `coeffs` (polynomial in `t`) or `terms` (combination of `M` or `F`
//! functions). A literal starting with `F[` is a single fundamental index.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fundamental::{fexpr_add, FExpr, FundamentalIndex};
use crate::graph::{DirectedEdge, DirectedSignedGraph, SignedEdge, SignedGraph};
use crate::limits::Limits;
use crate::poset::{Labeling, SignedPoset};
use crate::sign::{parse_sign_string, sign_string, Sign};
use crate::sqsym::{MonomialIndex, SqsExpr, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub sign: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_u: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_v: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphRecord {
    pub d: usize,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialTerm {
    pub k: u32,
    pub lam: Vec<[u32; 2]>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FIndexRecord {
    pub d: usize,
    #[serde(rename = "S")]
    pub strict: Vec<usize>,
    pub eps: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FTerm {
    #[serde(rename = "F")]
    pub index: FIndexRecord,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExprRecord<T> {
    pub terms: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TLayer {
    pub t: u32,
    pub terms: Vec<MonomialTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TPolyRecord {
    pub coeffs: Vec<TLayer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetRecord {
    pub d: usize,
    pub covers: Vec<[i32; 2]>,
    /// Covers whose labeling is strict; when absent every cover is strict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<Vec<[i32; 2]>>,
    /// Explicit `ω(1), …, ω(d)`; overrides `strict`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Graph(SignedGraph),
    DirectedGraph(DirectedSignedGraph),
    Poset { poset: SignedPoset, labeling: Labeling },
    Expression(SqsExpr),
    FExpression(FExpr),
    TPoly(TPoly),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Graph(_) => "graph",
            Document::DirectedGraph(_) => "directed-graph",
            Document::Poset { .. } => "poset",
            Document::Expression(_) | Document::FExpression(_) => "expression",
            Document::TPoly(_) => "t-polynomial",
        }
    }
}

fn parse_sign(s: &str, what: &str, idx: usize) -> Result<Sign> {
    Sign::parse(s).map_err(|_| Error::Parse(format!("edge {idx}: field {what}: expected \"+\" or \"-\", got {s:?}")))
}

fn parse_coef(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::Parse(format!("coefficient {s:?} is not a rational p/q")))
}

impl GraphRecord {
    /// Directed when every edge carries incidence signs, undirected when none
    /// does.
    pub fn into_document(self) -> Result<Document> {
        let with_taus = self.edges.iter().filter(|e| e.tau_u.is_some() || e.tau_v.is_some()).count();
        if with_taus == 0 {
            let edges = self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| Ok(SignedEdge::new(e.u, e.v, parse_sign(&e.sign, "sign", i)?)))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Document::Graph(SignedGraph::new(self.d, edges)?));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let (Some(tu), Some(tv)) = (&e.tau_u, &e.tau_v) else {
                return Err(Error::Parse(format!(
                    "edge {i}: tau_u and tau_v must both be given when any edge is directed"
                )));
            };
            edges.push(DirectedEdge {
                u: e.u,
                v: e.v,
                sign: parse_sign(&e.sign, "sign", i)?,
                tau_u: parse_sign(tu, "tau_u", i)?,
                tau_v: parse_sign(tv, "tau_v", i)?,
            });
        }
        Ok(Document::DirectedGraph(DirectedSignedGraph::new(self.d, edges)?))
    }
}

pub fn graph_record(g: &SignedGraph) -> GraphRecord {
    GraphRecord {
        d: g.d(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                sign: e.sign.to_string(),
                tau_u: None,
                tau_v: None,
            })
            .collect(),
    }
}

pub fn directed_graph_record(g: &DirectedSignedGraph) -> GraphRecord {
    GraphRecord {
        d: g.d(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                sign: e.sign.to_string(),
                tau_u: Some(e.tau_u.to_string()),
                tau_v: Some(e.tau_v.to_string()),
            })
            .collect(),
    }
}

fn monomial_terms(e: &SqsExpr) -> Vec<MonomialTerm> {
    e.terms()
        .iter()
        .map(|(m, c)| MonomialTerm {
            k: m.k,
            lam: m.lam.columns().iter().map(|&(a, b)| [a, b]).collect(),
            coef: c.to_string(),
        })
        .collect()
}

fn expr_from_terms(terms: &[MonomialTerm]) -> Result<SqsExpr> {
    let mut e = SqsExpr::zero();
    for t in terms {
        let m = MonomialIndex::new(t.k, t.lam.iter().map(|&[a, b]| (a, b)).collect())?;
        e.add_term(m, parse_coef(&t.coef)?);
    }
    Ok(e)
}

pub fn expr_record(e: &SqsExpr) -> ExprRecord<MonomialTerm> {
    ExprRecord { terms: monomial_terms(e) }
}

pub fn tpoly_record(x: &TPoly) -> TPolyRecord {
    TPolyRecord {
        coeffs: x
            .coeffs()
            .iter()
            .map(|(&t, e)| TLayer {
                t,
                terms: monomial_terms(e),
            })
            .collect(),
    }
}

pub fn fexpr_record(e: &FExpr) -> ExprRecord<FTerm> {
    ExprRecord {
        terms: e
            .iter()
            .map(|(fi, c)| FTerm {
                index: FIndexRecord {
                    d: fi.d(),
                    strict: fi.strict().iter().copied().collect(),
                    eps: sign_string(fi.signs()),
                },
                coef: c.to_string(),
            })
            .collect(),
    }
}

pub fn poset_record(p: &SignedPoset, omega: &Labeling) -> PosetRecord {
    PosetRecord {
        d: p.d(),
        covers: p.covers().into_iter().map(|(x, y)| [x, y]).collect(),
        strict: None,
        labeling: Some(omega.values().to_vec()),
    }
}

fn poset_document(r: PosetRecord, limits: &Limits) -> Result<Document> {
    let rel: Vec<(i32, i32)> = r.covers.iter().map(|&[x, y]| (x, y)).collect();
    let poset = SignedPoset::new(r.d, &rel)?;
    let labeling = match (r.labeling, r.strict) {
        (Some(values), _) => {
            let omega = Labeling::new(values)?;
            if omega.d() != r.d {
                return Err(Error::InvalidLabeling(format!("labeling has {} values but d = {}", omega.d(), r.d)));
            }
            omega
        }
        (None, Some(strict)) => {
            let strict: Vec<(i32, i32)> = strict.iter().map(|&[x, y]| (x, y)).collect();
            Labeling::realizing(&poset, &strict, limits)?
        }
        (None, None) => Labeling::dual_natural(&poset, limits)?,
    };
    Ok(Document::Poset { poset, labeling })
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Parses a JSON or `F[...]` document from text.
pub fn parse_document(text: &str, limits: &Limits) -> Result<Document> {
    let trimmed = text.trim();
    if trimmed.starts_with("F[") {
        let mut e = FExpr::new();
        fexpr_add(&mut e, FundamentalIndex::from_str(trimmed)?, BigRational::one());
        return Ok(Document::FExpression(e));
    }
    let value: Value = serde_json::from_str(trimmed)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("document must be a JSON object".into()))?;
    if obj.contains_key("edges") {
        from_value::<GraphRecord>(value, "graph")?.into_document()
    } else if obj.contains_key("covers") {
        poset_document(from_value(value, "poset")?, limits)
    } else if obj.contains_key("coeffs") {
        let r: TPolyRecord = from_value(value, "t-polynomial")?;
        let mut x = TPoly::zero();
        for layer in &r.coeffs {
            x.add_at(layer.t, &expr_from_terms(&layer.terms)?);
        }
        Ok(Document::TPoly(x))
    } else if let Some(terms) = obj.get("terms").and_then(Value::as_array) {
        if terms.iter().any(|t| t.get("F").is_some()) {
            let r: ExprRecord<FTerm> = from_value(value, "F expression")?;
            let mut e = FExpr::new();
            for t in r.terms {
                let signs = parse_sign_string(&t.index.eps)?;
                if signs.len() != t.index.d {
                    return Err(Error::Parse(format!("eps has {} signs but d = {}", signs.len(), t.index.d)));
                }
                let fi = FundamentalIndex::new(t.index.strict.into_iter().collect(), signs)?;
                fexpr_add(&mut e, fi, parse_coef(&t.coef)?);
            }
            Ok(Document::FExpression(e))
        } else {
            let r: ExprRecord<MonomialTerm> = from_value(value, "expression")?;
            Ok(Document::Expression(expr_from_terms(&r.terms)?))
        }
    } else {
        Err(Error::Parse(
            "unrecognised document: expected one of the keys edges, covers, coeffs, terms".into(),
        ))
    }
}

/// Loads from `-` (stdin), an inline literal (`{...}` or `F[...]`), or a path.
pub fn load_document(source: &str, stdin: &mut dyn Read, limits: &Limits) -> Result<Document> {
    let text = if source == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else if source.trim_start().starts_with('{') || source.trim_start().starts_with("F[") {
        source.to_string()
    } else {
        std::fs::read_to_string(Path::new(source))
            .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?
    };
    parse_document(&text, limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize")
}

pub fn render_expr(e: &SqsExpr, format: Format) -> String {
    match format {
        Format::Text => e.to_string(),
        Format::Json => json(&expr_record(e)),
    }
}

pub fn render_tpoly(x: &TPoly, format: Format) -> String {
    match format {
        Format::Text => x.to_string(),
        Format::Json => json(&tpoly_record(x)),
    }
}

/// Text form in the style of monomial expressions: `F[...] - 2*F[...]`, or `0`.
pub fn render_fexpr(e: &FExpr, format: Format) -> String {
    if format == Format::Json {
        return json(&fexpr_record(e));
    }
    if e.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (fi, c)) in e.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(&fi.to_string());
    }
    out
}

/// Graphs always render as JSON so that the output is itself a document.
pub fn render_graph(g: &DirectedSignedGraph) -> String {
    json(&directed_graph_record(g))
}

pub fn render_document(doc: &Document, format: Format) -> String {
    match doc {
        Document::Graph(g) => json(&graph_record(g)),
        Document::DirectedGraph(g) => render_graph(g),
        Document::Poset { poset, labeling } => json(&poset_record(poset, labeling)),
        Document::Expression(e) => render_expr(e, format),
        Document::FExpression(e) => render_fexpr(e, format),
        Document::TPoly(x) => render_tpoly(x, format),
    }
}

/// Groups rendered lines into one string with a trailing newline.
pub fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    let mut out: String = items.into_iter().map(|l| l + "\n").collect();
    if out.is_empty() {
        out.push('\n');
    }
    out
}

/// Deterministic JSON for ad hoc reports.
pub fn render_report(fields: BTreeMap<&str, Value>) -> String {
    json(&fields)
}
