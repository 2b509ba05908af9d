//! JSON input for algebras:
//!
//! ```json
//! {"field": {"kind": "gf", "p": 7}, "matrix": [["a1","b1"],["a2","b2"],["a3","b3"],["a4","b4"]]}
//! {"field": {"kind": "q"}, "s": ["p","q","a","b","c","d"]}
//! ```
//!
//! Scalars are strings (`"3"`, `"-1/2"`); bare JSON integers are accepted too.
//! Errors carry a JSON-path location such as `$.s[2]`.

use serde_json::{json, Value};

use crate::algebra::{StraightParams, StructureMatrix};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, Gf, Rationals};

/// An algebra over a concrete field; `straight` is set when it was given in
/// straight form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraOver<F: Field> {
    pub matrix: StructureMatrix<F>,
    pub straight: Option<StraightParams<F::Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedAlgebra {
    Gf(AlgebraOver<Gf>),
    Q(AlgebraOver<Rationals>),
}

impl ParsedAlgebra {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            ParsedAlgebra::Gf(a) => a.matrix.field().descriptor(),
            ParsedAlgebra::Q(_) => FieldDescriptor::Rationals,
        }
    }

    /// Canonical JSON; the straight form is preserved when present.
    pub fn to_json(&self) -> Value {
        match self {
            ParsedAlgebra::Gf(a) => algebra_json(a),
            ParsedAlgebra::Q(a) => algebra_json(a),
        }
    }
}

fn algebra_json<F: Field>(a: &AlgebraOver<F>) -> Value {
    let f = a.matrix.field();
    let field = serde_json::to_value(f.descriptor()).expect("descriptor serialises");
    match &a.straight {
        Some(s) => json!({
            "field": field,
            "s": s.to_array().iter().map(|x| f.format(x)).collect::<Vec<_>>(),
        }),
        None => json!({
            "field": field,
            "matrix": a.matrix.rows().iter()
                .map(|r| vec![f.format(&r[0]), f.format(&r[1])])
                .collect::<Vec<_>>(),
        }),
    }
}

fn scalar<F: Field>(field: &F, v: &Value, loc: &str) -> Result<F::Elem> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => {
            return Err(Error::parse(
                loc,
                format!("expected a scalar string, got {other}"),
            ))
        }
    };
    field
        .parse(&text)
        .map_err(|e| Error::parse(loc, e.to_string()))
}

fn array<'a>(v: &'a Value, len: usize, loc: &str) -> Result<&'a Vec<Value>> {
    match v.as_array() {
        Some(a) if a.len() == len => Ok(a),
        Some(a) => Err(Error::parse(
            loc,
            format!("expected {len} entries, got {}", a.len()),
        )),
        None => Err(Error::parse(loc, "expected an array")),
    }
}

fn parse_over<F: Field>(field: F, root: &Value, source: &str) -> Result<AlgebraOver<F>> {
    let at = |path: &str| format!("{source}:$.{path}");
    match (root.get("s"), root.get("matrix")) {
        (Some(_), Some(_)) => Err(Error::parse(
            at(""),
            "give either \"s\" or \"matrix\", not both",
        )),
        (Some(s), None) => {
            let items = array(s, 6, &at("s"))?;
            let vals: Vec<F::Elem> = items
                .iter()
                .enumerate()
                .map(|(i, v)| scalar(&field, v, &at(&format!("s[{i}]"))))
                .collect::<Result<_>>()?;
            let s = StraightParams::from_array(vals.try_into().expect("six entries"));
            Ok(AlgebraOver {
                matrix: StructureMatrix::straight(field, &s),
                straight: Some(s),
            })
        }
        (None, Some(m)) => {
            let rows = array(m, 4, &at("matrix"))?;
            let mut entries = Vec::with_capacity(8);
            for (i, row) in rows.iter().enumerate() {
                let row = array(row, 2, &at(&format!("matrix[{i}]")))?;
                for (j, v) in row.iter().enumerate() {
                    entries.push(scalar(&field, v, &at(&format!("matrix[{i}][{j}]")))?);
                }
            }
            Ok(AlgebraOver {
                matrix: StructureMatrix::from_entries(
                    field,
                    entries.try_into().expect("eight entries"),
                ),
                straight: None,
            })
        }
        (None, None) => Err(Error::parse(at(""), "missing \"s\" or \"matrix\"")),
    }
}

/// Parses one algebra; `source` names the input in error locations.
pub fn parse_algebra(text: &str, source: &str) -> Result<ParsedAlgebra> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("{source}:{}:{}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let field_value = root
        .get("field")
        .ok_or_else(|| Error::parse(format!("{source}:$"), "missing \"field\""))?;
    let descriptor: FieldDescriptor = serde_json::from_value(field_value.clone())
        .map_err(|e| Error::parse(format!("{source}:$.field"), e.to_string()))?;
    match descriptor {
        FieldDescriptor::Prime { p } => {
            let gf = Gf::new(p)
                .map_err(|e| Error::parse(format!("{source}:$.field.p"), e.to_string()))?;
            parse_over(gf, &root, source).map(ParsedAlgebra::Gf)
        }
        FieldDescriptor::Rationals => parse_over(Rationals, &root, source).map(ParsedAlgebra::Q),
    }
}
