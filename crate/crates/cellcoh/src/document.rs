//! JSON documents for complexes and chain maps.
//!
//! A complex document is either the boundary form
//!
//! ```json
//! {"name": "klein", "cells": [1, 2, 1], "basepoint": 0,
//!  "boundaries": {"1": [[0, 0]], "2": [[2], [0]]}}
//! ```
//!
//! where `boundaries.n` is row-major with one row per `(n-1)`-cell and one
//! column per `n`-cell, or the presentation form
//!
//! ```json
//! {"name": "torus", "vertices": 1, "edges": [[0, 0], [0, 0]], "faces": [[1, 2, -1, -2]]}
//! ```
//!
//! A map document has `source` and `target` (inline complex documents or file
//! paths relative to the map file) and `maps`, keyed by dimension from `"0"`.
//! Missing dimensions are zero. Integers of any size are accepted.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use cellcoh_core::complex::{self, EdgePresentation};
use cellcoh_core::{BigInt, ChainMap, CwComplex, IntMatrix};
use serde_json::{Map, Number, Value};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] cellcoh_core::Error),
}

impl DocumentError {
    fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// 2 for anything that stops the document from being read, 1 for a
    /// well-formed document describing an invalid object.
    pub fn exit_code(&self) -> i32 {
        match self {
            DocumentError::Core(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, DocumentError>;

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{}.{}", path, key)
    }
}

fn integer(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| DocumentError::schema(path, "expected an integer"))
        }
        _ => Err(DocumentError::schema(path, "expected an integer")),
    }
}

fn small(v: &Value, path: &str) -> Result<i64> {
    i64::try_from(integer(v, path)?).map_err(|_| DocumentError::schema(path, "integer out of range"))
}

fn count(v: &Value, path: &str) -> Result<usize> {
    let k = small(v, path)?;
    usize::try_from(k).map_err(|_| DocumentError::schema(path, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| DocumentError::schema(path, "expected an array"))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| DocumentError::schema(path, "expected an object"))
}

fn matrix(v: &Value, path: &str, rows: usize, cols: usize) -> Result<IntMatrix> {
    let rs = array(v, path)?;
    // a matrix with no columns may be written as [] regardless of its row count
    if cols == 0 && rs.is_empty() {
        return Ok(IntMatrix::zeros(rows, 0));
    }
    if rs.len() != rows {
        return Err(DocumentError::schema(
            path,
            format!("expected {} rows, found {}", rows, rs.len()),
        ));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, r) in rs.iter().enumerate() {
        let rp = format!("{}[{}]", path, i);
        let r = array(r, &rp)?;
        if r.len() != cols {
            return Err(DocumentError::schema(
                &rp,
                format!("expected {} columns, found {}", cols, r.len()),
            ));
        }
        for (j, e) in r.iter().enumerate() {
            entries.push(integer(e, &format!("{}[{}]", rp, j))?);
        }
    }
    Ok(IntMatrix::from_vec(rows, cols, entries)?)
}

fn check_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(DocumentError::schema(join(path, k), "unknown field"));
        }
    }
    Ok(())
}

/// Dimension-keyed matrices `"lo".."hi"`; anything outside is rejected.
fn dimension_keys<'a>(obj: &'a Map<String, Value>, path: &str, lo: usize, hi: usize) -> Result<BTreeMap<usize, &'a Value>> {
    let mut out = BTreeMap::new();
    for (k, v) in obj {
        let n: usize = k
            .parse()
            .ok()
            .filter(|n: &usize| k == &n.to_string())
            .ok_or_else(|| DocumentError::schema(join(path, k), "dimension keys are decimal integers"))?;
        if n < lo || n > hi {
            return Err(DocumentError::schema(
                join(path, k),
                format!("dimension out of range {}..{}", lo, hi),
            ));
        }
        out.insert(n, v);
    }
    Ok(out)
}

/// Reads a complex from a JSON value. Shapes are checked here; the chain
/// condition and augmentation are left to [`CwComplex::validate`].
pub fn complex_from_value(v: &Value, path: &str) -> Result<CwComplex> {
    let obj = object(v, path)?;
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(DocumentError::schema(join(path, "name"), "expected a string")),
        None => "unnamed".to_string(),
    };
    let has_boundaries = obj.contains_key("cells") || obj.contains_key("boundaries");
    let has_presentation = ["vertices", "edges", "faces"].iter().any(|k| obj.contains_key(*k));
    match (has_boundaries, has_presentation) {
        (true, true) => Err(DocumentError::schema(
            path.to_string(),
            "give either cells/boundaries or vertices/edges/faces, not both",
        )),
        (false, false) => Err(DocumentError::schema(join(path, "cells"), "missing field")),
        (true, false) => boundary_form(obj, path, name),
        (false, true) => presentation_form(obj, path, name),
    }
}

fn basepoint(obj: &Map<String, Value>, path: &str) -> Result<usize> {
    obj.get("basepoint")
        .map(|b| count(b, &join(path, "basepoint")))
        .transpose()
        .map(|b| b.unwrap_or(0))
}

fn boundary_form(obj: &Map<String, Value>, path: &str, name: String) -> Result<CwComplex> {
    check_keys(obj, path, &["name", "cells", "basepoint", "boundaries"])?;
    let cells_path = join(path, "cells");
    let cells = array(obj.get("cells").ok_or_else(|| DocumentError::schema(&cells_path, "missing field"))?, &cells_path)?
        .iter()
        .enumerate()
        .map(|(i, c)| count(c, &format!("{}[{}]", cells_path, i)))
        .collect::<Result<Vec<_>>>()?;
    if cells.is_empty() {
        return Err(DocumentError::schema(cells_path, "at least one dimension is required"));
    }
    let bp = basepoint(obj, path)?;
    if bp >= cells[0] {
        return Err(DocumentError::schema(join(path, "basepoint"), "not a vertex"));
    }
    let dim = cells.len() - 1;
    let bpath = join(path, "boundaries");
    let given = match obj.get("boundaries") {
        Some(b) => dimension_keys(object(b, &bpath)?, &bpath, 1, dim.max(1))?,
        None => BTreeMap::new(),
    };
    if dim == 0 && !given.is_empty() {
        return Err(DocumentError::schema(join(&bpath, "1"), "a 0-dimensional complex has no boundaries"));
    }
    let mut boundaries = Vec::with_capacity(dim);
    for n in 1..=dim {
        let b = match given.get(&n) {
            Some(m) => matrix(m, &join(&bpath, &n.to_string()), cells[n - 1], cells[n])?,
            None => IntMatrix::zeros(cells[n - 1], cells[n]),
        };
        boundaries.push(b);
    }
    Ok(CwComplex::from_parts(name, cells, boundaries, bp))
}

fn presentation_form(obj: &Map<String, Value>, path: &str, name: String) -> Result<CwComplex> {
    check_keys(obj, path, &["name", "vertices", "basepoint", "edges", "faces"])?;
    let vpath = join(path, "vertices");
    let vertices = count(obj.get("vertices").ok_or_else(|| DocumentError::schema(&vpath, "missing field"))?, &vpath)?;
    let epath = join(path, "edges");
    let mut edges = Vec::new();
    if let Some(es) = obj.get("edges") {
        for (i, e) in array(es, &epath)?.iter().enumerate() {
            let ep = format!("{}[{}]", epath, i);
            let pair = array(e, &ep)?;
            if pair.len() != 2 {
                return Err(DocumentError::schema(ep, "an edge is a pair of vertices"));
            }
            edges.push((count(&pair[0], &format!("{}[0]", ep))?, count(&pair[1], &format!("{}[1]", ep))?));
        }
    }
    let fpath = join(path, "faces");
    let mut faces = Vec::new();
    if let Some(fs) = obj.get("faces") {
        for (i, f) in array(fs, &fpath)?.iter().enumerate() {
            let fp = format!("{}[{}]", fpath, i);
            let word = array(f, &fp)?
                .iter()
                .enumerate()
                .map(|(j, l)| small(l, &format!("{}[{}]", fp, j)))
                .collect::<Result<Vec<_>>>()?;
            faces.push(word);
        }
    }
    let p = EdgePresentation {
        vertices,
        basepoint: basepoint(obj, path)?,
        edges,
        faces,
    };
    p.check().map_err(|e| DocumentError::schema(path.to_string(), e.to_string()))?;
    Ok(complex::from_presentation(name, &p)?)
}

fn number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integers are valid JSON numbers"))
}

fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(number).collect())).collect())
}

/// Boundary-form value of a complex.
pub fn complex_to_value(x: &CwComplex) -> Value {
    let mut boundaries = Map::new();
    for (n, b) in x.boundaries().iter().enumerate() {
        boundaries.insert((n + 1).to_string(), matrix_value(b));
    }
    let mut obj = Map::new();
    obj.insert("name".into(), Value::String(x.name().to_string()));
    obj.insert("cells".into(), Value::Array(x.cells().iter().map(|&c| Value::from(c)).collect()));
    obj.insert("basepoint".into(), Value::from(x.basepoint()));
    obj.insert("boundaries".into(), Value::Object(boundaries));
    Value::Object(obj)
}

/// Where a map document's `source` and `target` strings are looked up.
fn resolve(base: Option<&Path>, rel: &str) -> PathBuf {
    match base {
        Some(dir) if Path::new(rel).is_relative() => dir.join(rel),
        _ => PathBuf::from(rel),
    }
}

fn endpoint(v: &Value, path: &str, base: Option<&Path>) -> Result<CwComplex> {
    match v {
        Value::String(file) => read_complex(&resolve(base, file)),
        _ => complex_from_value(v, path),
    }
}

/// Reads a chain map. File references are resolved against `base`.
pub fn map_from_value(v: &Value, base: Option<&Path>) -> Result<ChainMap> {
    let obj = object(v, "")?;
    check_keys(obj, "", &["source", "target", "maps"])?;
    let get = |k: &str| obj.get(k).ok_or_else(|| DocumentError::schema(k, "missing field"));
    let source = endpoint(get("source")?, "source", base)?;
    let target = endpoint(get("target")?, "target", base)?;
    let top = source.dim().max(target.dim());
    let given = dimension_keys(object(get("maps")?, "maps")?, "maps", 0, top)?;
    let mut maps = Vec::with_capacity(top + 1);
    for n in 0..=top as i64 {
        let (r, c) = (target.cell_count(n), source.cell_count(n));
        let m = match given.get(&(n as usize)) {
            Some(m) => matrix(m, &format!("maps.{}", n), r, c)?,
            None => IntMatrix::zeros(r, c),
        };
        maps.push(m);
    }
    Ok(ChainMap::from_parts(source, target, maps))
}

pub fn map_to_value(f: &ChainMap) -> Value {
    let mut maps = Map::new();
    for (n, m) in f.maps().iter().enumerate() {
        maps.insert(n.to_string(), matrix_value(m));
    }
    let mut obj = Map::new();
    obj.insert("source".into(), complex_to_value(f.source()));
    obj.insert("target".into(), complex_to_value(f.target()));
    obj.insert("maps".into(), Value::Object(maps));
    Value::Object(obj)
}

fn is_scalar(v: &Value) -> bool {
    !(v.is_array() || v.is_object())
}

fn write_value(v: &Value, indent: usize, s: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            let items: Vec<String> = xs.iter().map(|x| serde_json::to_string(x).expect("scalars serialize")).collect();
            s.push('[');
            s.push_str(&items.join(", "));
            s.push(']');
        }
        Value::Array(xs) => {
            s.push('[');
            for (i, x) in xs.iter().enumerate() {
                s.push_str(if i == 0 { "\n" } else { ",\n" });
                s.push_str(&pad);
                write_value(x, indent + 1, s);
            }
            s.push('\n');
            s.push_str(&"  ".repeat(indent));
            s.push(']');
        }
        Value::Object(m) if m.is_empty() => s.push_str("{}"),
        Value::Object(m) => {
            s.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                s.push_str(if i == 0 { "\n" } else { ",\n" });
                s.push_str(&pad);
                s.push_str(&serde_json::to_string(k).expect("strings serialize"));
                s.push_str(": ");
                write_value(x, indent + 1, s);
            }
            s.push('\n');
            s.push_str(&"  ".repeat(indent));
            s.push('}');
        }
        _ => s.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

/// Canonical text: sorted keys, one matrix row per line, trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = String::new();
    write_value(v, 0, &mut s);
    s.push('\n');
    s
}

pub fn parse_value(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_complex(text: &str) -> Result<CwComplex> {
    complex_from_value(&parse_value(text)?, "")
}

pub fn serialize_complex(x: &CwComplex) -> String {
    to_text(&complex_to_value(x))
}

pub fn parse_map(text: &str, base: Option<&Path>) -> Result<ChainMap> {
    map_from_value(&parse_value(text)?, base)
}

pub fn serialize_map(f: &ChainMap) -> String {
    to_text(&map_to_value(f))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_complex(path: &Path) -> Result<CwComplex> {
    parse_complex(&read_text(path)?)
}

pub fn read_map(path: &Path) -> Result<ChainMap> {
    parse_map(&read_text(path)?, path.parent())
}

/// A document of either kind.
pub enum Document {
    Complex(CwComplex),
    Map(ChainMap),
}

/// Reads a file and decides by the presence of `maps` which kind it is.
pub fn read_document(path: &Path) -> Result<Document> {
    let v = parse_value(&read_text(path)?)?;
    if v.get("maps").is_some() {
        Ok(Document::Map(map_from_value(&v, path.parent())?))
    } else {
        Ok(Document::Complex(complex_from_value(&v, "")?))
    }
}
