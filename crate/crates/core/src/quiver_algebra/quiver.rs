use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(name, source, target)` with endpoints given by vertex name.
    pub fn new<V, A, N, S, T>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (N, S, T)>,
        N: Into<String>,
        S: Into<String>,
        T: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let mut names = HashSet::new();
        let mut out = Vec::new();
        for (name, source, target) in arrows {
            let (name, source, target): (String, String, String) = (name.into(), source.into(), target.into());
            if !names.insert(name.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name:?}")));
            }
            let find = |v: &str| {
                vertices
                    .iter()
                    .position(|x| x == v)
                    .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name:?} uses undeclared vertex {v:?}")))
            };
            let (source, target) = (find(&source)?, find(&target)?);
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// `counts[i][j]` = number of arrows from vertex `i` to vertex `j`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut counts = vec![vec![0; n]; n];
        for a in &self.arrows {
            counts[a.source][a.target] += 1;
        }
        counts
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with_labels(name, |v| v.to_string())
    }

    pub fn to_dot_with_labels(&self, name: &str, label: impl Fn(&str) -> String) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", dot_id(name)).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        for v in &self.vertices {
            writeln!(out, "  {} [label={}];", dot_id(v), dot_id(&label(v))).unwrap();
        }
        for a in &self.arrows {
            writeln!(
                out,
                "  {} -> {} [label={}];",
                dot_id(&self.vertices[a.source]),
                dot_id(&self.vertices[a.target]),
                dot_id(&a.name)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A linear combination of parallel paths. Each path lists arrow names in
/// traversal order: `["b", "a"]` is the composite `a∘b`, which walks `b` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Q, Vec<String>)>) -> Self {
        Relation { terms }
    }

    /// A single path set to zero.
    pub fn zero_path<S: Into<String>>(path: impl IntoIterator<Item = S>) -> Self {
        Relation { terms: vec![(Q::from_integer(1.into()), path.into_iter().map(Into::into).collect())] }
    }

    /// `lhs − rhs`.
    pub fn equal_paths<S: Into<String>>(lhs: impl IntoIterator<Item = S>, rhs: impl IntoIterator<Item = S>) -> Self {
        let one = Q::from_integer(1.into());
        Relation {
            terms: vec![
                (one.clone(), lhs.into_iter().map(Into::into).collect()),
                (-one, rhs.into_iter().map(Into::into).collect()),
            ],
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// The JSON file form of a quiver with relations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<Value>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: Value,
    pub target: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: Value,
    pub path: Vec<String>,
}

fn id_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("vertex identifiers must be strings or integers, got {other}"))),
    }
}

impl QuiverSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("quiver spec: {e}")))
    }

    pub fn to_parts(&self) -> Result<(Quiver, Vec<Relation>)> {
        let vertices = self.vertices.iter().map(id_text).collect::<Result<Vec<_>>>()?;
        let arrows = self
            .arrows
            .iter()
            .map(|a| Ok((a.name.clone(), id_text(&a.source)?, id_text(&a.target)?)))
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver::new(vertices, arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|terms| {
                let terms = terms
                    .iter()
                    .map(|t| {
                        let text = match &t.coeff {
                            Value::String(s) => s.clone(),
                            Value::Number(n) => n.to_string(),
                            other => return Err(Error::Parse(format!("bad coefficient {other}"))),
                        };
                        let c = parse_q(&text).ok_or_else(|| Error::Parse(format!("bad coefficient {text:?}")))?;
                        Ok((c, t.path.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Relation::new(terms))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((quiver, relations))
    }

    pub fn from_parts(quiver: &Quiver, relations: &[Relation]) -> Self {
        QuiverSpec {
            vertices: quiver.vertices.iter().map(|v| Value::String(v.clone())).collect(),
            arrows: quiver
                .arrows
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    source: Value::String(quiver.vertices[a.source].clone()),
                    target: Value::String(quiver.vertices[a.target].clone()),
                })
                .collect(),
            relations: relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| TermSpec { coeff: Value::String(format_q(c)), path: p.clone() })
                        .collect()
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_quivers() {
        let dup = Quiver::new(["a", "a"], Vec::<(&str, &str, &str)>::new());
        assert!(matches!(dup, Err(Error::InvalidQuiver(_))));
        let undeclared = Quiver::new(["a"], [("x", "a", "b")]);
        assert!(matches!(undeclared, Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn spec_file_with_integer_vertices() {
        let text = r#"{"vertices":[1,2],"arrows":[{"name":"a","source":1,"target":2}],
                       "relations":[[{"coeff":"1/2","path":["a"]}]]}"#;
        let (q, rels) = QuiverSpec::from_json(text).unwrap().to_parts().unwrap();
        assert_eq!(q.vertices(), ["1", "2"]);
        assert_eq!(q.arrows()[0].target, 1);
        assert_eq!(rels[0].terms[0].0, crate::linalg::q_frac(1, 2));
    }

    #[test]
    fn dot_lists_every_arrow() {
        let q = Quiver::new(["0", "1"], [("a", "0", "1")]).unwrap();
        let dot = q.to_dot("Q");
        assert!(dot.starts_with("digraph \"Q\" {"));
        assert!(dot.contains("\"0\" -> \"1\" [label=\"a\"];"));
    }
}
