//! JSON input bundles.

use gl2q::scalar::{Scalar, ScalarMatrix};
use gl2q::Error;
use serde::Deserialize;

pub type Rows = Vec<Vec<String>>;

/// Every command reads the same shape; each uses the fields it needs.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub n: Option<usize>,
    pub m: Option<usize>,
    #[serde(rename = "A")]
    pub a: Option<Rows>,
    #[serde(rename = "B")]
    pub b: Option<Rows>,
    #[serde(rename = "C")]
    pub c: Option<Rows>,
    #[serde(rename = "D")]
    pub d: Option<Rows>,
    #[serde(rename = "E")]
    pub e: Option<Rows>,
    #[serde(rename = "P")]
    pub p: Option<Rows>,
    #[serde(rename = "Q")]
    pub q: Option<Rows>,
    #[serde(rename = "M")]
    pub m_witness: Option<Rows>,
    #[serde(rename = "C2")]
    pub c2: Option<Rows>,
    #[serde(rename = "D2")]
    pub d2: Option<Rows>,
    pub orientation: Option<String>,
    #[serde(default)]
    pub with_d_inv: bool,
}

impl Bundle {
    pub fn parse(src: &str) -> Result<Bundle, Error> {
        serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Loads `input` as inline JSON when it starts with `{`, else as a path.
    pub fn load(input: &str) -> Result<Bundle, Error> {
        if input.trim_start().starts_with('{') {
            return Bundle::parse(input);
        }
        let src = std::fs::read_to_string(input)
            .map_err(|e| Error::Invalid(format!("cannot read {input}: {e}")))?;
        Bundle::parse(&src)
    }

    fn matrix(rows: &Option<Rows>, name: &str) -> Result<Option<ScalarMatrix>, Error> {
        rows.as_ref()
            .map(|r| ScalarMatrix::parse(r).map_err(|e| in_field(name, e)))
            .transpose()
    }

    pub fn get(&self, name: &str) -> Result<Option<ScalarMatrix>, Error> {
        let rows = match name {
            "A" => &self.a,
            "B" => &self.b,
            "C" => &self.c,
            "D" => &self.d,
            "E" => &self.e,
            "P" => &self.p,
            "Q" => &self.q,
            "M" => &self.m_witness,
            "C2" => &self.c2,
            "D2" => &self.d2,
            _ => unreachable!("unknown bundle field {name}"),
        };
        Self::matrix(rows, name)
    }

    pub fn require(&self, name: &str) -> Result<ScalarMatrix, Error> {
        self.get(name)?
            .ok_or_else(|| Error::Invalid(format!("bundle needs field {name}")))
    }

    /// `(A, B, C, D)` with `C`, `D` defaulting to `A`, `B`; checks `n`, `m`
    /// when given.
    pub fn gabcd(&self) -> Result<[ScalarMatrix; 4], Error> {
        let a = self.require("A")?;
        let b = self.require("B")?;
        let c = self.get("C")?.unwrap_or_else(|| a.clone());
        let d = self.get("D")?.unwrap_or_else(|| b.clone());
        if let Some(n) = self.n {
            if a.rows() != n {
                return Err(Error::ShapeMismatch(format!("n = {n} but A has {} rows", a.rows())));
            }
        }
        if let Some(m) = self.m {
            if c.rows() != m {
                return Err(Error::ShapeMismatch(format!("m = {m} but C has {} rows", c.rows())));
            }
        }
        Ok([a, b, c, d])
    }
}

fn in_field(name: &str, e: Error) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("in {name}: {message}"),
        },
        other => other,
    }
}

/// `q` when `M = [[0,1],[−q,0]]`.
pub fn a_q_parameter(m: &ScalarMatrix) -> Option<Scalar> {
    if m.rows() != 2 || !m.is_square() {
        return None;
    }
    let q = m.get(1, 0).neg();
    (*m == gl2q::scalar::a_q(&q)).then_some(q)
}
