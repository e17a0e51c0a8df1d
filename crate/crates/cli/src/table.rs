//! Count tables and their CSV/JSON forms.
//!
//! JSON schema (keys in this order):
//!
//! ```text
//! {"family": "full"|"path", "m": int, "coefficients"?: [string], "rows": [{"n": int, "count": string}]}
//! ```
//!
//! Counts and coefficients are decimal strings so no precision is lost.
//! `coefficients` is a zero-based array: element `0` multiplies `C_{n+1}`,
//! element `j` multiplies `C_{n+1-j}`. CSV output has the columns `n,count`.

use cayley_polygons::full_count::{full_count_series, gen_vector_full};
use cayley_polygons::path_count::{gen_vector_path, path_count_series};
use cayley_polygons::{Count, Family};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Full,
    Path,
}

impl From<FamilyName> for Family {
    fn from(f: FamilyName) -> Self {
        match f {
            FamilyName::Full => Family::Full,
            FamilyName::Path => Family::Path,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub family: FamilyName,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    pub rows: Vec<Row>,
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error(transparent)]
    Count(#[from] cayley_polygons::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("rows must be strictly increasing in n")]
    Unordered,
    #[error("count {0:?} is not a decimal integer")]
    BadCount(String),
}

/// Generating vector of a family as signed integers.
pub fn coefficients(family: FamilyName, m: usize) -> cayley_polygons::Result<Vec<Count>> {
    Ok(match family {
        FamilyName::Full => gen_vector_full::<Count>(m)?.into_coeffs(),
        FamilyName::Path => gen_vector_path::<Count>(m)?.into_coeffs(),
    })
}

/// Exact counts for `n_from..=n_to`, taken from the convolution route.
pub fn counts(family: FamilyName, m: usize, n_from: usize, n_to: usize) -> cayley_polygons::Result<Vec<(usize, Count)>> {
    if n_from > n_to {
        return Ok(Vec::new());
    }
    let series = match family {
        FamilyName::Full => full_count_series::<Count>(m, n_to)?,
        FamilyName::Path => path_count_series::<Count>(m, n_to)?,
    };
    Ok(series.into_iter().enumerate().skip(n_from).collect())
}

impl CountTable {
    pub fn build(
        family: FamilyName,
        m: usize,
        n_from: usize,
        n_to: usize,
        with_coefficients: bool,
    ) -> Result<Self, TableError> {
        let rows = counts(family, m, n_from, n_to)?
            .into_iter()
            .map(|(n, c)| Row { n, count: c.to_string() })
            .collect();
        let coefficients = if with_coefficients {
            Some(coefficients(family, m)?.iter().map(ToString::to_string).collect())
        } else {
            None
        };
        Ok(CountTable { family, m, coefficients, rows })
    }

    /// Rows as exact integers, checking the table invariants.
    pub fn exact_rows(&self) -> Result<Vec<(usize, Count)>, TableError> {
        if self.rows.windows(2).any(|w| w[0].n >= w[1].n) {
            return Err(TableError::Unordered);
        }
        self.rows
            .iter()
            .map(|r| {
                r.count
                    .parse::<Count>()
                    .map(|c| (r.n, c))
                    .map_err(|_| TableError::BadCount(r.count.clone()))
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String, TableError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let t: CountTable = serde_json::from_str(text)?;
        t.exact_rows()?;
        Ok(t)
    }

    /// CSV body with the header `n,count`.
    pub fn to_csv(&self) -> Result<String, TableError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "count"])?;
        for r in &self.rows {
            w.write_record([r.n.to_string().as_str(), r.count.as_str()])?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Parse CSV rows back into a table; family and `m` are not part of the
    /// CSV form and must be supplied.
    pub fn from_csv(family: FamilyName, m: usize, text: &str) -> Result<Self, TableError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let rows = r.deserialize().collect::<Result<Vec<Row>, _>>()?;
        let t = CountTable { family, m, coefficients: None, rows };
        t.exact_rows()?;
        Ok(t)
    }
}

/// JSON text for a table.
pub fn emit_json(table: &CountTable) -> Result<String, TableError> {
    table.to_json()
}
