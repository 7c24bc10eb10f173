//! JSON wire formats.
//!
//! Polynomials in `u, v` travel as their canonical text form (`"1 + u*v"`),
//! rationals as `"p/q"` strings.

use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use plethora_core::chromgraph::WeightedGraph;
use plethora_core::exactalg::{BiPoly, TSeries};
use plethora_core::hodge::{AbcPoly, HodgeDiamond};
use plethora_core::symfun::{Partition, SymFun};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed polynomial {text:?}: {reason}")]
    Poly { text: String, reason: String },
    #[error("malformed rational {0:?}")]
    Rational(String),
    #[error(transparent)]
    Core(#[from] plethora_core::Error),
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

pub fn parse_poly(text: &str) -> Result<BiPoly> {
    text.parse().map_err(|e: plethora_core::exactalg::ParsePolyError| FormatError::Poly {
        text: text.to_string(),
        reason: e.to_string(),
    })
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    text.trim().parse().map_err(|_| FormatError::Rational(text.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesJson {
    pub fn from_series(s: &TSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    /// Missing trailing coefficients are zero; extra ones are an error.
    pub fn to_series(&self) -> Result<TSeries> {
        if self.coeffs.len() > self.order + 1 {
            return Err(FormatError::Poly {
                text: self.coeffs[self.order + 1].clone(),
                reason: format!("coefficient beyond truncation order {}", self.order),
            });
        }
        let coeffs = self.coeffs.iter().map(|c| parse_poly(c)).collect::<Result<Vec<_>>>()?;
        Ok(TSeries::from_coeffs(self.order, coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFunJson {
    pub terms: Vec<TermJson>,
}

impl SymFunJson {
    pub fn from_symfun(f: &SymFun) -> Self {
        SymFunJson {
            terms: f
                .terms()
                .map(|(lambda, c)| TermJson {
                    partition: lambda.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_symfun(&self) -> Result<SymFun> {
        let mut out = SymFun::zero();
        for t in &self.terms {
            out.add_term(Partition::new(t.partition.clone())?, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

pub fn coefficient_map_json(map: &BTreeMap<Partition, BigRational>) -> Vec<TermJson> {
    map.iter()
        .map(|(lambda, c)| TermJson {
            partition: lambda.parts().to_vec(),
            coeff: c.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
}

impl GraphJson {
    pub fn from_graph(g: &WeightedGraph) -> Self {
        let weights = g.weights().iter().any(|&w| w != 1).then(|| g.weights().to_vec());
        GraphJson {
            n: g.n_vertices(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            weights,
        }
    }

    pub fn to_graph(&self) -> Result<WeightedGraph> {
        Ok(WeightedGraph::new(
            self.n,
            self.edges.iter().map(|&[a, b]| (a, b)),
            self.weights.clone(),
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondJson {
    pub dim: u32,
    pub h: Vec<[u32; 3]>,
}

impl DiamondJson {
    pub fn from_diamond(d: &HodgeDiamond) -> Self {
        DiamondJson {
            dim: d.dim(),
            h: d.entries().map(|((p, q), m)| [p, q, m]).collect(),
        }
    }

    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        Ok(HodgeDiamond::new(self.dim, self.h.iter().map(|&[p, q, m]| (p, q, m)))?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcTermJson {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub coeff: String,
}

pub fn abc_json(f: &AbcPoly) -> Vec<AbcTermJson> {
    f.terms()
        .map(|((a, b, c), x)| AbcTermJson {
            a,
            b,
            c,
            coeff: x.to_string(),
        })
        .collect()
}

/// `K<n>`, `P<n>`, `C<n>` (n ≥ 3) or `E<n>`: complete, path, cycle or
/// edgeless graphs.
pub fn builtin_graph(name: &str) -> Option<WeightedGraph> {
    let (kind, rest) = name.split_at(1.min(name.len()));
    let n: usize = rest.parse().ok().filter(|&n| n >= 1)?;
    match kind {
        "K" => Some(WeightedGraph::complete(n)),
        "P" => Some(WeightedGraph::path(n)),
        "C" if n >= 3 => Some(WeightedGraph::cycle(n)),
        "E" => Some(WeightedGraph::edgeless(n)),
        _ => None,
    }
}

/// Inline JSON (leading `{` or `[`) or the contents of a file.
pub fn load_json_text(source: &str) -> Result<String> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    std::fs::read_to_string(Path::new(source)).map_err(|e| FormatError::Io {
        path: source.to_string(),
        source: e,
    })
}

pub fn load_graph(source: &str) -> Result<WeightedGraph> {
    if let Some(g) = builtin_graph(source) {
        return Ok(g);
    }
    let stem = Path::new(source).file_stem().and_then(|s| s.to_str());
    if !Path::new(source).exists() {
        if let Some(g) = stem.and_then(builtin_graph) {
            return Ok(g);
        }
    }
    let json: GraphJson = serde_json::from_str(&load_json_text(source)?)?;
    json.to_graph()
}

pub fn load_diamond(source: &str) -> Result<HodgeDiamond> {
    if let Some(d) = HodgeDiamond::builtin(source) {
        return Ok(d);
    }
    let json: DiamondJson = serde_json::from_str(&load_json_text(source)?)?;
    json.to_diamond()
}

pub fn load_series(source: &str) -> Result<TSeries> {
    let json: SeriesJson = serde_json::from_str(&load_json_text(source)?)?;
    json.to_series()
}

/// `paths`, `complete`, or a JSON list of graphs (entry `k` has `k + 1` vertices).
pub fn load_family(source: &str, n: usize) -> Result<Vec<WeightedGraph>> {
    match source {
        "paths" | "path" => Ok((1..=n).map(WeightedGraph::path).collect()),
        "complete" => Ok((1..=n).map(WeightedGraph::complete).collect()),
        _ => {
            let list: Vec<GraphJson> = serde_json::from_str(&load_json_text(source)?)?;
            list.iter().map(GraphJson::to_graph).collect()
        }
    }
}
