use std::io::Read;
use std::path::Path;

use super::DataSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Reads one point per row, `k` comma-separated columns, no header.
/// Ragged rows are rejected.
pub fn read_csv<S: Scalar>(path: impl AsRef<Path>) -> Result<DataSet<S>> {
    let f = std::fs::File::open(path)?;
    read_csv_from(f)
}

pub fn read_csv_from<S: Scalar, R: Read>(reader: R) -> Result<DataSet<S>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut points = Vec::new();
    for (row, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let mut p = Vec::with_capacity(rec.len());
        for (column, field) in rec.iter().enumerate() {
            let v: f64 = field.parse().map_err(|_| Error::Parse {
                row,
                column,
                value: field.to_string(),
            })?;
            p.push(S::from_f64(v).ok_or_else(|| Error::Parse {
                row,
                column,
                value: field.to_string(),
            })?);
        }
        points.push(p);
    }
    DataSet::new(points)
}
