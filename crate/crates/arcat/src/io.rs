//! JSON conventions for the input files the command-line surface
//! accepts — algebras, representations, mesh windows, subcategory
//! lists — and the matching emitters. Anything wrong with an input
//! document is reported as `Malformed`, keeping "your file is broken"
//! distinct from "the computation refused".
//!
//! Rational entries are integers or `"p/q"` strings; matrices are
//! row-major arrays of rows; paths are arrow-name lists read
//! source-to-target.

use std::str::FromStr;

use num_traits::One;
use serde_json::Value;

use crate::algebra::{BoundQuiverAlgebra, Relation};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rat};
use crate::mesh::MeshVertex;
use crate::quiver::{Path, Quiver};
use crate::rep::Representation;

fn malformed(reason: impl Into<String>) -> Error {
    Error::Malformed {
        reason: reason.into(),
    }
}

/// Accept an integer or a `"p/q"` / `"p"` string.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| malformed(format!("non-integer numeric literal `{n}`")))?;
            Ok(crate::linalg::rat(i))
        }
        Value::String(s) => {
            Rat::from_str(s.trim()).map_err(|_| malformed(format!("bad rational literal `{s}`")))
        }
        other => Err(malformed(format!("expected a rational, got {other}"))),
    }
}

/// Emit a rational as a JSON number when integral (and small enough),
/// as a `"p/q"` string otherwise.
pub fn rat_to_json(r: &Rat) -> Value {
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return Value::from(i);
        }
    }
    Value::from(r.to_string())
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v serde_json::Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| malformed(format!("{what} must be a JSON object")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| malformed(format!("{what} must be a JSON array")))
}

fn as_label(v: &Value, what: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(malformed(format!("{what} must be a string, got {other}"))),
    }
}

/// Parse `{"vertices":[...], "arrows":[{"name","from","to"}],
/// "relations":[[{"coeff","path":["a","b"]}, ...], ...]}`.
pub fn algebra_from_json(text: &str) -> Result<BoundQuiverAlgebra> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let obj = as_object(&doc, "the algebra document")?;

    let mut quiver = Quiver::new();
    for v in as_array(
        obj.get("vertices")
            .ok_or_else(|| malformed("missing `vertices`"))?,
        "`vertices`",
    )? {
        quiver
            .add_vertex(as_label(v, "a vertex label")?)
            .map_err(|e| malformed(e.to_string()))?;
    }
    for a in as_array(
        obj.get("arrows")
            .ok_or_else(|| malformed("missing `arrows`"))?,
        "`arrows`",
    )? {
        let a = as_object(a, "an arrow entry")?;
        let name = as_label(
            a.get("name").ok_or_else(|| malformed("arrow missing `name`"))?,
            "an arrow name",
        )?;
        let from = as_label(
            a.get("from").ok_or_else(|| malformed("arrow missing `from`"))?,
            "`from`",
        )?;
        let to = as_label(
            a.get("to").ok_or_else(|| malformed("arrow missing `to`"))?,
            "`to`",
        )?;
        let src = quiver
            .vertex_by_label(&from)
            .map_err(|_| malformed(format!("arrow `{name}` leaves unknown vertex `{from}`")))?;
        let dst = quiver
            .vertex_by_label(&to)
            .map_err(|_| malformed(format!("arrow `{name}` enters unknown vertex `{to}`")))?;
        quiver
            .add_arrow(name, src, dst)
            .map_err(|e| malformed(e.to_string()))?;
    }

    let mut relations = Vec::new();
    if let Some(rels) = obj.get("relations") {
        for rel in as_array(rels, "`relations`")? {
            let mut terms = Vec::new();
            for term in as_array(rel, "a relation")? {
                let term = as_object(term, "a relation term")?;
                let coeff = match term.get("coeff") {
                    Some(c) => rat_from_json(c)?,
                    None => Rat::one(),
                };
                let names = as_array(
                    term.get("path")
                        .ok_or_else(|| malformed("relation term missing `path`"))?,
                    "`path`",
                )?;
                if names.is_empty() {
                    return Err(malformed("relation paths need at least one arrow"));
                }
                let mut arrows = Vec::new();
                for name in names {
                    let name = as_label(name, "an arrow name in a path")?;
                    arrows.push(
                        quiver
                            .arrow_by_name(&name)
                            .map_err(|_| malformed(format!("unknown arrow `{name}` in a path")))?,
                    );
                }
                let path = Path {
                    source: quiver.arrow(arrows[0]).source,
                    arrows,
                };
                if !path.is_valid(&quiver) {
                    return Err(malformed(format!(
                        "path `{}` does not compose",
                        quiver.path_name(&path)
                    )));
                }
                terms.push((coeff, path));
            }
            if terms.is_empty() {
                return Err(malformed("a relation needs at least one term"));
            }
            relations.push(Relation { terms });
        }
    }

    BoundQuiverAlgebra::new(quiver, relations)
}

/// Emit an algebra in the same shape `algebra_from_json` accepts.
pub fn algebra_to_json(alg: &BoundQuiverAlgebra) -> Value {
    let q = alg.quiver();
    let vertices: Vec<Value> = (0..q.vertex_count())
        .map(|v| Value::from(q.vertex_label(v)))
        .collect();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| {
            serde_json::json!({
                "name": a.name,
                "from": q.vertex_label(a.source),
                "to": q.vertex_label(a.target),
            })
        })
        .collect();
    let relations: Vec<Value> = alg
        .relations()
        .iter()
        .map(|rel| {
            Value::from(
                rel.terms
                    .iter()
                    .map(|(c, p)| {
                        serde_json::json!({
                            "coeff": rat_to_json(c),
                            "path": p.arrows.iter()
                                .map(|&a| Value::from(q.arrow(a).name.as_str()))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    serde_json::json!({
        "vertices": vertices,
        "arrows": arrows,
        "relations": relations,
    })
}

/// Parse `{"dims":{vertex:n}, "maps":{arrow:[[...]]}}`. Vertices and
/// arrows not mentioned get dimension zero / the zero map; a matrix
/// with a zero dimension may be written simply as `[]`; the result is
/// fully validated against the algebra's relations.
pub fn representation_from_json(alg: &BoundQuiverAlgebra, text: &str) -> Result<Representation> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let obj = as_object(&doc, "the representation document")?;
    let q = alg.quiver();

    let mut dims = vec![0usize; q.vertex_count()];
    if let Some(dv) = obj.get("dims") {
        for (label, n) in as_object(dv, "`dims`")? {
            let v = q
                .vertex_by_label(label)
                .map_err(|_| malformed(format!("unknown vertex `{label}` in `dims`")))?;
            dims[v] = n
                .as_u64()
                .ok_or_else(|| malformed(format!("dimension of `{label}` must be a count")))?
                as usize;
        }
    }

    let mut maps: Vec<ExactMatrix> = (0..q.arrow_count())
        .map(|a| ExactMatrix::zero(dims[q.arrow(a).target], dims[q.arrow(a).source]))
        .collect();
    if let Some(mv) = obj.get("maps") {
        for (name, rows) in as_object(mv, "`maps`")? {
            let a = q
                .arrow_by_name(name)
                .map_err(|_| malformed(format!("unknown arrow `{name}` in `maps`")))?;
            let rows = as_array(rows, "a matrix")?;
            let nrows = rows.len();
            let ncols = rows
                .first()
                .map(|r| as_array(r, "a matrix row").map(|r| r.len()))
                .transpose()?
                .unwrap_or(0);
            let mut m = ExactMatrix::zero(nrows, ncols);
            for (i, row) in rows.iter().enumerate() {
                let row = as_array(row, "a matrix row")?;
                if row.len() != ncols {
                    return Err(malformed(format!("matrix for `{name}` is ragged")));
                }
                for (j, entry) in row.iter().enumerate() {
                    m.set(i, j, rat_from_json(entry)?);
                }
            }
            // every matrix without entries denotes the same unique map,
            // so accept `[]` (or any row count of empty rows) wherever
            // the expected shape has a zero dimension
            let (tr, tc) = (dims[q.arrow(a).target], dims[q.arrow(a).source]);
            if (m.rows() == 0 || m.cols() == 0) && (tr == 0 || tc == 0) {
                m = ExactMatrix::zero(tr, tc);
            }
            maps[a] = m;
        }
    }

    Representation::new(alg, dims, maps)
}

/// Emit a representation sparsely: only nonzero dimensions and only
/// maps between nonzero spaces.
pub fn representation_to_json(alg: &BoundQuiverAlgebra, m: &Representation) -> Value {
    let q = alg.quiver();
    let mut dims = serde_json::Map::new();
    for v in 0..q.vertex_count() {
        if m.dims()[v] > 0 {
            dims.insert(q.vertex_label(v).to_string(), Value::from(m.dims()[v]));
        }
    }
    let mut maps = serde_json::Map::new();
    for (a, mat) in m.maps().iter().enumerate() {
        if mat.rows() == 0 || mat.cols() == 0 {
            continue;
        }
        let rows: Vec<Value> = (0..mat.rows())
            .map(|i| {
                Value::from(
                    (0..mat.cols())
                        .map(|j| rat_to_json(mat.at(i, j)))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        maps.insert(q.arrow(a).name.clone(), Value::from(rows));
    }
    serde_json::json!({ "dims": dims, "maps": maps })
}

/// A mesh build request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshSpec {
    pub n: usize,
    pub window: (i64, i64),
}

/// Parse `{"type":"A","n":3,"window":[-6,6]}`.
pub fn mesh_spec_from_json(text: &str) -> Result<MeshSpec> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let obj = as_object(&doc, "the mesh document")?;
    match obj.get("type").and_then(|t| t.as_str()) {
        Some("A") => {}
        Some(other) => return Err(malformed(format!("unsupported mesh type `{other}`"))),
        None => return Err(malformed("missing `type` (only \"A\" is supported)")),
    }
    let n = obj
        .get("n")
        .and_then(|n| n.as_u64())
        .ok_or_else(|| malformed("`n` must be a positive integer"))? as usize;
    let w = as_array(
        obj.get("window")
            .ok_or_else(|| malformed("missing `window`"))?,
        "`window`",
    )?;
    if w.len() != 2 {
        return Err(malformed("`window` must be a pair [lo, hi]"));
    }
    let lo = w[0]
        .as_i64()
        .ok_or_else(|| malformed("window bounds must be integers"))?;
    let hi = w[1]
        .as_i64()
        .ok_or_else(|| malformed("window bounds must be integers"))?;
    Ok(MeshSpec { n, window: (lo, hi) })
}

/// One entry of a subcategory file: a mesh coordinate or a module name
/// to be resolved against a labeled slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectLabel {
    Coord(MeshVertex),
    Name(String),
}

/// Parse a subcategory file: a JSON list whose entries are `[i, j]`
/// pairs, `"(i, j)"` strings, or module names like `"3/2/1"`.
pub fn labels_from_json(text: &str) -> Result<Vec<ObjectLabel>> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let entries = as_array(&doc, "the subcategory document")?;
    let mut out = Vec::new();
    for entry in entries {
        match entry {
            Value::Array(pair) => {
                if pair.len() != 2 {
                    return Err(malformed("coordinate entries must be pairs [i, j]"));
                }
                let i = pair[0]
                    .as_i64()
                    .ok_or_else(|| malformed("coordinates must be integers"))?;
                let j = pair[1]
                    .as_i64()
                    .ok_or_else(|| malformed("coordinates must be integers"))?;
                out.push(ObjectLabel::Coord(MeshVertex::new(i, j)));
            }
            Value::String(s) => match parse_vertex(s) {
                Ok(v) => out.push(ObjectLabel::Coord(v)),
                Err(_) => out.push(ObjectLabel::Name(s.clone())),
            },
            other => {
                return Err(malformed(format!(
                    "subcategory entries must be pairs or strings, got {other}"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(malformed("the subcategory list is empty"));
    }
    Ok(out)
}

/// Parse a vertex written `(i, j)` or `i,j`.
pub fn parse_vertex(s: &str) -> Result<MeshVertex> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| malformed(format!("`{s}` is not a vertex; write (i, j)")))?;
    let i = a
        .trim()
        .parse::<i64>()
        .map_err(|_| malformed(format!("`{s}` is not a vertex; write (i, j)")))?;
    let j = b
        .trim()
        .parse::<i64>()
        .map_err(|_| malformed(format!("`{s}` is not a vertex; write (i, j)")))?;
    Ok(MeshVertex::new(i, j))
}

/// Parse a window written `lo..hi` (e.g. `-6..6`).
pub fn parse_window(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .trim()
        .split_once("..")
        .ok_or_else(|| malformed(format!("`{s}` is not a window; write lo..hi")))?;
    let lo = a
        .trim()
        .parse::<i64>()
        .map_err(|_| malformed(format!("bad window bound `{a}`")))?;
    let hi = b
        .trim()
        .parse::<i64>()
        .map_err(|_| malformed(format!("bad window bound `{b}`")))?;
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_an;
    use crate::rep::hom_dim;

    #[test]
    fn algebra_round_trips_through_json() {
        let text = r#"{
            "vertices": ["1", "2", "3"],
            "arrows": [
                {"name": "a32", "from": "3", "to": "2"},
                {"name": "a21", "from": "2", "to": "1"}
            ],
            "relations": [[{"coeff": 1, "path": ["a32", "a21"]}]]
        }"#;
        let alg = algebra_from_json(text).unwrap();
        assert_eq!(alg.quiver().vertex_count(), 3);
        // the composite 3 -> 1 dies, so the basis is lazies + arrows
        assert_eq!(alg.dim(), 5);
        let again = algebra_from_json(&algebra_to_json(&alg).to_string()).unwrap();
        assert_eq!(again.dim(), alg.dim());
        assert_eq!(again.quiver().arrow_count(), alg.quiver().arrow_count());
        assert_eq!(again.relations().len(), 1);
    }

    #[test]
    fn bad_algebra_documents_are_malformed() {
        for text in [
            "[1, 2]",
            r#"{"vertices": ["1"]}"#,
            r#"{"vertices": ["1", "1"], "arrows": []}"#,
            r#"{"vertices": ["1", "2"],
                "arrows": [{"name": "a", "from": "2", "to": "9"}]}"#,
            r#"{"vertices": ["1", "2"],
                "arrows": [{"name": "a", "from": "2", "to": "1"}],
                "relations": [[{"path": ["nope"]}]]}"#,
            r#"{"vertices": ["1", "2", "3"],
                "arrows": [{"name": "a", "from": "2", "to": "1"},
                           {"name": "b", "from": "3", "to": "2"}],
                "relations": [[{"path": ["a", "b"]}]]}"#,
        ] {
            assert!(
                matches!(algebra_from_json(text), Err(Error::Malformed { .. })),
                "accepted: {text}"
            );
        }
    }

    #[test]
    fn cyclic_input_is_an_engine_error_not_a_parse_error() {
        let text = r#"{
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "a", "from": "1", "to": "2"},
                {"name": "b", "from": "2", "to": "1"}
            ]
        }"#;
        assert!(matches!(
            algebra_from_json(text),
            Err(Error::CycleDetected { .. })
        ));
    }

    #[test]
    fn representation_round_trips_and_validates() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap();
        let text = r#"{
            "dims": {"1": 1, "2": 1},
            "maps": {"a21": [["1"]]}
        }"#;
        let m = representation_from_json(&alg, text).unwrap();
        assert_eq!(alg.module_name(&m), "2/1");
        let again =
            representation_from_json(&alg, &representation_to_json(&alg, &m).to_string()).unwrap();
        assert_eq!(again, m);
        // fractional entries survive the round trip
        let text = r#"{"dims": {"1": 1, "2": 1}, "maps": {"a21": [["-7/3"]]}}"#;
        let tw = representation_from_json(&alg, text).unwrap();
        let back =
            representation_from_json(&alg, &representation_to_json(&alg, &tw).to_string()).unwrap();
        assert_eq!(back, tw);
        assert_eq!(hom_dim(&alg, &tw, &m).unwrap(), 1);
    }

    #[test]
    fn empty_matrices_may_be_written_flat() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap();
        // a32 is the 1x0 map out of the zero space at 3: `[]`, `[[]]`,
        // and omission all spell it
        for maps in [
            r#"{"a21": [["1"]], "a32": []}"#,
            r#"{"a21": [["1"]], "a32": [[]]}"#,
            r#"{"a21": [["1"]]}"#,
        ] {
            let text = format!(r#"{{"dims": {{"1": 1, "2": 1, "3": 0}}, "maps": {maps}}}"#);
            let m = representation_from_json(&alg, &text).unwrap();
            assert_eq!(alg.module_name(&m), "2/1");
        }
        // but an empty matrix cannot stand in for one with entries
        let err = representation_from_json(
            &alg,
            r#"{"dims": {"1": 1, "2": 1, "3": 0}, "maps": {"a21": []}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Mismatch { .. }), "got {err:?}");
    }

    #[test]
    fn representation_against_relations_is_rejected_after_parsing() {
        // over kA3 with the composite relation, a faithful chain of
        // isos violates the relation: that is an engine error
        let alg = algebra_from_json(
            r#"{
                "vertices": ["1", "2", "3"],
                "arrows": [
                    {"name": "a32", "from": "3", "to": "2"},
                    {"name": "a21", "from": "2", "to": "1"}
                ],
                "relations": [[{"path": ["a32", "a21"]}]]
            }"#,
        )
        .unwrap();
        let text = r#"{
            "dims": {"1": 1, "2": 1, "3": 1},
            "maps": {"a32": [["1"]], "a21": [["1"]]}
        }"#;
        let err = representation_from_json(&alg, text).unwrap_err();
        assert!(!matches!(err, Error::Malformed { .. }), "got {err:?}");
        // while an unknown arrow name is a parse error
        let err =
            representation_from_json(&alg, r#"{"dims": {}, "maps": {"zz": []}}"#).unwrap_err();
        assert!(matches!(err, Error::Malformed { .. }));
    }

    #[test]
    fn mesh_spec_and_labels_parse() {
        let spec = mesh_spec_from_json(r#"{"type":"A","n":3,"window":[-6,6]}"#).unwrap();
        assert_eq!(spec, MeshSpec { n: 3, window: (-6, 6) });
        assert!(matches!(
            mesh_spec_from_json(r#"{"type":"D","n":4,"window":[-6,6]}"#),
            Err(Error::Malformed { .. })
        ));
        let labels = labels_from_json(r#"[[0, 1], "(0, 2)", "2/1"]"#).unwrap();
        assert_eq!(
            labels,
            vec![
                ObjectLabel::Coord(MeshVertex::new(0, 1)),
                ObjectLabel::Coord(MeshVertex::new(0, 2)),
                ObjectLabel::Name("2/1".into()),
            ]
        );
        assert!(labels_from_json("[]").is_err());
    }

    #[test]
    fn vertex_and_window_literals_parse() {
        assert_eq!(parse_vertex("(0,1)").unwrap(), MeshVertex::new(0, 1));
        assert_eq!(parse_vertex(" (-3, 2) ").unwrap(), MeshVertex::new(-3, 2));
        assert_eq!(parse_vertex("4,1").unwrap(), MeshVertex::new(4, 1));
        assert!(parse_vertex("nope").is_err());
        assert_eq!(parse_window("-6..6").unwrap(), (-6, 6));
        assert_eq!(parse_window(" -8..9 ").unwrap(), (-8, 9));
        assert!(parse_window("6").is_err());
    }
}
