//! Rendering of results as JSON, CSV or markdown.
//!
//! Field elements are always written as strings (`"3"`, `"-1/2"`), so JSON
//! output is exact for both prime fields and Q. Every collection is emitted
//! in a fixed order, which makes output byte-identical across runs.

use std::fmt::{self, Display};
use std::str::FromStr;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::algebra::{Element, StraightParams, StructureMatrix, TransformMatrix};
use crate::ec::EcVerdict;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::iso::IsoWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" | "markdown" => Ok(OutputFormat::Md),
            other => Err(Error::parse(
                "--format",
                format!("unknown format {other:?}"),
            )),
        }
    }
}

pub(crate) fn ser_scalar<S: Serializer, T: Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn ser_scalars<S: Serializer, T: Display>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

struct Str<'a, T>(&'a T);

impl<T: Display> Serialize for Str<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self.0)
    }
}

impl<E: Display> Serialize for Element<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_scalars(&[&self.alpha, &self.beta], s)
    }
}

impl<E: Display> Serialize for StraightParams<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_scalars(&[&self.p, &self.q, &self.a, &self.b, &self.c, &self.d], s)
    }
}

impl<E: Display> Serialize for TransformMatrix<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TransformMatrix", 4)?;
        st.serialize_field("x", &Str(&self.x))?;
        st.serialize_field("y", &Str(&self.y))?;
        st.serialize_field("z", &Str(&self.z))?;
        st.serialize_field("w", &Str(&self.w))?;
        st.end()
    }
}

impl<E: Display> Serialize for IsoWitness<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IsoWitness", 3)?;
        st.serialize_field("found", &self.found)?;
        st.serialize_field("transform", &self.transform)?;
        st.serialize_field("method", &self.method)?;
        st.end()
    }
}

impl<E: Display> Serialize for EcVerdict<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EcVerdict", 4)?;
        st.serialize_field("is_ec", &self.is_ec)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("failing_equation", &self.failing_equation)?;
        st.serialize_field("counterexample", &self.counterexample)?;
        st.end()
    }
}

/// A titled table of already-formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I, T>(&mut self, row: I)
    where
        I: IntoIterator<Item = T>,
        T: ToString,
    {
        self.rows
            .push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_markdown(&self) -> String {
        let esc = |c: &String| c.replace('|', "\\|");
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("### {}\n\n", self.title));
        }
        out.push_str(&format!(
            "| {} |\n",
            self.headers.iter().map(esc).collect::<Vec<_>>().join(" | ")
        ));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for row in &self.rows {
            out.push_str(&format!(
                "| {} |\n",
                row.iter().map(esc).collect::<Vec<_>>().join(" | ")
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let cell = |c: &String| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        };
        let line = |r: &[String]| r.iter().map(cell).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("# {}\n", self.title));
        }
        out.push_str(&line(&self.headers));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

/// Anything that can be written in all three output formats.
pub trait Render: Serialize {
    fn tables(&self) -> Vec<Table>;

    /// One-line conclusions printed ahead of the tables.
    fn summary(&self) -> Vec<String> {
        Vec::new()
    }

    fn render(&self, format: OutputFormat) -> Result<String> {
        Ok(match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self)
                    .map_err(|e| Error::InvariantViolation(format!("serialisation failed: {e}")))?;
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let head: String = self.summary().iter().map(|l| format!("# {l}\n")).collect();
                head + &join_tables(self.tables(), Table::to_csv)
            }
            OutputFormat::Md => {
                let head: String = self.summary().iter().map(|l| format!("{l}\n\n")).collect();
                head + &join_tables(self.tables(), Table::to_markdown)
            }
        })
    }
}

fn join_tables(tables: Vec<Table>, f: fn(&Table) -> String) -> String {
    tables.iter().map(f).collect::<Vec<_>>().join("\n")
}

/// `αe + βf` with zero terms and unit coefficients dropped.
pub fn format_element<F: Field>(field: &F, u: &Element<F::Elem>) -> String {
    let term = |c: &F::Elem, basis: &str| -> Option<String> {
        if field.is_zero(c) {
            None
        } else if *c == field.one() {
            Some(basis.to_string())
        } else {
            let s = field.format(c);
            Some(if s.contains('/') || s.starts_with('-') {
                format!("({s}){basis}")
            } else {
                format!("{s}{basis}")
            })
        }
    };
    match (term(&u.alpha, "e"), term(&u.beta, "f")) {
        (None, None) => "0".into(),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (Some(a), Some(b)) => format!("{a} + {b}"),
    }
}

/// The products of basis vectors, e.g. `| e | f | 0 |` / `| f | 0 | 2e |` for
/// `S(2, 0, 0, 0, 0, 0)`.
pub fn multiplication_table<F: Field>(m: &StructureMatrix<F>, title: impl Into<String>) -> Table {
    let f = m.field();
    let (e, fb) = (Element::e(f), Element::f(f));
    let mut t = Table::new(title, &["·", "e", "f"]);
    for (name, u) in [("e", &e), ("f", &fb)] {
        t.push([
            name.to_string(),
            format_element(f, &m.multiply(u, &e)),
            format_element(f, &m.multiply(u, &fb)),
        ]);
    }
    t
}

pub(crate) struct Joined<'a, T>(pub &'a [T], pub &'a str);

impl<T: Display> Display for Joined<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(self.1)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub(crate) fn format_transform(x: &TransformMatrix<u64>) -> String {
    format!("[[{}, {}], [{}, {}]]", x.x, x.y, x.z, x.w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use num_rational::BigRational;

    #[test]
    fn type_one_multiplication_table() {
        let f = Gf::new(7).unwrap();
        let m = StructureMatrix::straight(f, &StraightParams::type_one(&f, 2));
        let t = multiplication_table(&m, "");
        assert_eq!(t.rows, vec![vec!["e", "f", "0"], vec!["f", "0", "2e"]]);
        let md = t.to_markdown();
        assert!(md.contains("| f | 0 | 2e |"));
    }

    #[test]
    fn elements_format() {
        let q = Rationals;
        let half = BigRational::new(1.into(), 2.into());
        let u = Element::new(half, q.from_i64(-3));
        assert_eq!(format_element(&q, &u), "(1/2)e + (-3)f");
        assert_eq!(format_element(&q, &Element::zero(&q)), "0");
    }

    #[test]
    fn scalars_serialise_as_strings() {
        let x = TransformMatrix::new(0u64, 4, 1, 0);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"x":"0","y":"4","z":"1","w":"0"}"#
        );
        let s = StraightParams::from_array([1u64, 0, 0, 0, 0, 0]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"["1","0","0","0","0","0"]"#
        );
    }

    #[test]
    fn csv_quotes_cells() {
        let mut t = Table::new("t", &["a", "b"]);
        t.push(["x,y", "z"]);
        assert_eq!(t.to_csv(), "# t\na,b\n\"x,y\",z\n");
        assert_eq!("md".parse::<OutputFormat>().unwrap(), OutputFormat::Md);
        assert!(matches!(
            "xml".parse::<OutputFormat>(),
            Err(Error::Parse { .. })
        ));
    }
}
