//! The `MatrixBundleFile` format: generators plus four vector or momentum
//! matrices, serialized as canonical JSON.

use std::fmt::Write as _;

use poincare_rep::{
    classify_case, CaseTag, DenseMatrix, FreeParams, GaussianRational, GeneratorSet, RadicalScalar, Rational, SpinSum,
    VectorKind, VectorSet,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;

pub const SCHEMA_VERSION: u64 = 1;

pub const LAYOUT: &str = "block (A,B) first, then (C,D); inside (X,Y) row index (X-x)(2Y+1)+(Y-y), x and y descending";

const AXES: [&str; 3] = ["x", "y", "z"];
const COMPONENTS: [&str; 4] = ["x", "y", "z", "t"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    #[value(name = "appendixA")]
    ClosedForm,
    Recursion,
    Lyubarskii,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::ClosedForm => "appendixA",
            Source::Recursion => "recursion",
            Source::Lyubarskii => "lyubarskii",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        [Source::ClosedForm, Source::Recursion, Source::Lyubarskii].into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Block {
    Keep12,
    Keep21,
    Both,
}

impl Block {
    pub fn name(self) -> &'static str {
        match self {
            Block::Keep12 => "keep12",
            Block::Keep21 => "keep21",
            Block::Both => "both",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        [Block::Keep12, Block::Keep21, Block::Both].into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    ExactJson,
    FloatJson,
    Plain,
}

/// A generated representation together with its provenance flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixBundle {
    pub source: Source,
    pub block: Block,
    pub generators: GeneratorSet,
    /// `P_μ` when `block` keeps one block, otherwise `V_μ`.
    pub vectors: VectorSet,
}

impl MatrixBundle {
    pub fn sum(&self) -> SpinSum {
        self.vectors.sum
    }

    fn vector_prefix(&self) -> &'static str {
        match self.block {
            Block::Both => "V",
            _ => "P",
        }
    }

    fn named_matrices(&self) -> Vec<(String, &DenseMatrix)> {
        let mut out = Vec::with_capacity(10);
        for (axis, m) in AXES.iter().zip(&self.generators.j) {
            out.push((format!("J{axis}"), m));
        }
        for (axis, m) in AXES.iter().zip(&self.generators.k) {
            out.push((format!("K{axis}"), m));
        }
        let p = self.vector_prefix();
        for (c, m) in COMPONENTS.iter().zip(&self.vectors.components) {
            out.push((format!("{p}{c}"), m));
        }
        out
    }

    fn header(&self) -> Map<String, Value> {
        let mut map = Map::new();
        map.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
        map.insert("spins".into(), json!(self.sum().twice()));
        map.insert("caseTag".into(), json!(self.vectors.case.name()));
        map.insert("source".into(), json!(self.source.name()));
        map.insert("block".into(), json!(self.block.name()));
        map.insert(
            "params".into(),
            json!({
                "t12": scalar_to_json(&self.vectors.params.t12),
                "t21": scalar_to_json(&self.vectors.params.t21),
            }),
        );
        map.insert("layout".into(), json!(LAYOUT));
        map.insert("dimension".into(), json!(self.vectors.dimension()));
        map
    }

    fn with_matrices(&self, entry: impl Fn(&RadicalScalar) -> Value) -> Value {
        let mut map = self.header();
        let matrices: Map<String, Value> = self
            .named_matrices()
            .into_iter()
            .map(|(name, m)| {
                let rows = (0..m.rows())
                    .map(|r| Value::Array((0..m.cols()).map(|c| entry(&m[(r, c)])).collect()))
                    .collect();
                (name, Value::Array(rows))
            })
            .collect();
        map.insert("matrices".into(), Value::Object(matrices));
        Value::Object(map)
    }

    pub fn to_json(&self) -> Value {
        self.with_matrices(scalar_to_json)
    }

    /// Canonical exact form: sorted keys, two-space indentation, trailing newline.
    pub fn to_exact_json(&self) -> String {
        pretty(&self.to_json())
    }

    pub fn to_float_json(&self) -> String {
        pretty(&self.with_matrices(|x| {
            let z = x.to_complex64();
            json!([z.re, z.im])
        }))
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let sum = self.sum();
        let _ = writeln!(out, "spins {sum}  case {}  source {}  block {}", self.vectors.case, self.source.name(), self.block.name());
        let _ = writeln!(out, "t12 = {}  t21 = {}", self.vectors.params.t12, self.vectors.params.t21);
        for (name, m) in self.named_matrices() {
            let _ = writeln!(out, "\n{name}:\n{m}");
        }
        out
    }

    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self, CliError> {
        let field = |name: &str| value.get(name).ok_or_else(|| parse_err(format!("missing field `{name}`")));
        let version = field("schemaVersion")?.as_u64();
        if version != Some(SCHEMA_VERSION) {
            return Err(parse_err(format!("unsupported schemaVersion {}", field("schemaVersion")?)));
        }
        let spins: Vec<u32> = field("spins")?
            .as_array()
            .ok_or_else(|| parse_err("`spins` must be an array"))?
            .iter()
            .map(|v| v.as_u64().and_then(|x| u32::try_from(x).ok()))
            .collect::<Option<_>>()
            .ok_or_else(|| parse_err("`spins` must hold non-negative integers"))?;
        let spins: [u32; 4] = spins.try_into().map_err(|_| parse_err("`spins` must have four entries"))?;
        let sum = SpinSum::from_twice(spins);

        let case_name = field("caseTag")?.as_str().ok_or_else(|| parse_err("`caseTag` must be a string"))?;
        let case = CaseTag::from_name(case_name).ok_or_else(|| parse_err(format!("unknown caseTag `{case_name}`")))?;
        if case != classify_case(sum) {
            return Err(parse_err(format!("caseTag {case} does not match spins {sum}")));
        }
        let source = field("source")?
            .as_str()
            .and_then(Source::from_name)
            .ok_or_else(|| parse_err("unknown `source`"))?;
        let block = field("block")?
            .as_str()
            .and_then(Block::from_name)
            .ok_or_else(|| parse_err("unknown `block`"))?;
        let params = field("params")?;
        let param = |name: &str| {
            params
                .get(name)
                .ok_or_else(|| parse_err(format!("missing params.{name}")))
                .and_then(scalar_from_json)
        };
        let params = FreeParams::new(param("t12")?, param("t21")?);

        let dimension = field("dimension")?.as_u64().ok_or_else(|| parse_err("`dimension` must be an integer"))?;
        if dimension as usize != sum.dimension() {
            return Err(parse_err(format!("dimension {dimension} does not match spins {sum}")));
        }
        let n = sum.dimension();
        let matrices = field("matrices")?.as_object().ok_or_else(|| parse_err("`matrices` must be an object"))?;
        let matrix = |name: String| {
            let m = matrices.get(&name).ok_or_else(|| parse_err(format!("missing matrix `{name}`")))?;
            matrix_from_json(m, n).map_err(|e| parse_err(format!("matrix `{name}`: {e}")))
        };
        let prefix = if block == Block::Both { "V" } else { "P" };
        let j = [matrix("Jx".into())?, matrix("Jy".into())?, matrix("Jz".into())?];
        let k = [matrix("Kx".into())?, matrix("Ky".into())?, matrix("Kz".into())?];
        let components = [
            matrix(format!("{prefix}x"))?,
            matrix(format!("{prefix}y"))?,
            matrix(format!("{prefix}z"))?,
            matrix(format!("{prefix}t"))?,
        ];
        let expected = 10;
        if matrices.len() != expected {
            return Err(parse_err(format!("expected {expected} matrices, found {}", matrices.len())));
        }
        let kind = match block {
            Block::Both => VectorKind::Vector,
            Block::Keep12 => VectorKind::Momentum(poincare_rep::BlockChoice::Keep12),
            Block::Keep21 => VectorKind::Momentum(poincare_rep::BlockChoice::Keep21),
        };
        Ok(MatrixBundle {
            source,
            block,
            generators: GeneratorSet {
                spins: vec![sum.first, sum.second],
                j,
                k,
            },
            vectors: VectorSet {
                sum,
                case,
                params,
                kind,
                components,
            },
        })
    }
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// A scalar as a list of `{"d": radicand, "re": "p/q", "im": "p/q"}`, sorted by `d`.
pub fn scalar_to_json(x: &RadicalScalar) -> Value {
    Value::Array(
        x.terms()
            .map(|(d, c)| json!({ "d": d, "re": c.re.to_string(), "im": c.im.to_string() }))
            .collect(),
    )
}

pub fn scalar_from_json(v: &Value) -> Result<RadicalScalar, CliError> {
    let terms = v.as_array().ok_or_else(|| parse_err("scalar must be an array of terms"))?;
    let mut out = RadicalScalar::zero();
    let mut last = 0u64;
    for t in terms {
        let d = t
            .get("d")
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .ok_or_else(|| parse_err("term needs a positive integer `d`"))?;
        if d <= last {
            return Err(parse_err("terms must be sorted by strictly increasing `d`"));
        }
        last = d;
        let part = |name: &str| -> Result<Rational, CliError> {
            let s = t.get(name).and_then(Value::as_str).ok_or_else(|| parse_err(format!("term needs string `{name}`")))?;
            s.parse().map_err(|_| parse_err(format!("bad rational `{s}`")))
        };
        out += &RadicalScalar::term(GaussianRational::new(part("re")?, part("im")?), d);
    }
    if scalar_to_json(&out) != *v {
        return Err(parse_err(format!("scalar {v} is not in canonical form")));
    }
    Ok(out)
}

fn matrix_from_json(v: &Value, n: usize) -> Result<DenseMatrix, CliError> {
    let rows = v.as_array().filter(|r| r.len() == n).ok_or_else(|| parse_err(format!("expected {n} rows")))?;
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| parse_err(format!("expected {n} columns")))?;
        for x in row {
            entries.push(scalar_from_json(x)?);
        }
    }
    Ok(DenseMatrix::from_row_major(n, n, entries).expect("entry count checked"))
}
