//! File ingestion for the CLI and for scripting against the library.
//!
//! Two formats everywhere, sniffed from the first non-blank byte: JSON
//! when it starts with `[` or `{`, headerless CSV otherwise. Matrices
//! are row-major rows; vectors are one row or one column; grids are
//! rows of coordinates (consecutive rows adjacent) or a JSON object
//! with explicit structure; sampled values are one vector per grid
//! point. All numbers must be finite, and every diagnostic names the
//! file plus the row or field that broke.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::sampled::Grid;

/// What can go wrong turning a file into library input. Distinct from
/// [`crate::error::Error`] so callers can tell bad files from bad math.
#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {detail}")]
    Parse { path: String, detail: String },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        #[source]
        source: Error,
    },
}

pub type ReadResult<T> = std::result::Result<T, ReadError>;

fn read_text(path: &Path) -> ReadResult<String> {
    std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_err(path: &Path, detail: impl Into<String>) -> ReadError {
    ReadError::Parse { path: path.display().to_string(), detail: detail.into() }
}

fn invalid(path: &Path, source: Error) -> ReadError {
    ReadError::Invalid { path: path.display().to_string(), source }
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('[') | Some('{'))
}

fn json_number(v: &serde_json::Value, path: &Path, at: &str) -> ReadResult<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| parse_err(path, format!("{at}: expected a number, found {v}")))?;
    if !x.is_finite() {
        return Err(parse_err(path, format!("{at}: non-finite value")));
    }
    Ok(x)
}

fn json_number_row(v: &serde_json::Value, path: &Path, at: &str) -> ReadResult<Vec<f64>> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(path, format!("{at}: expected an array, found {v}")))?;
    arr.iter()
        .enumerate()
        .map(|(j, e)| json_number(e, path, &format!("{at}[{j}]")))
        .collect()
}

/// Rows of numbers from headerless CSV; every row must parse fully.
fn csv_rows(text: &str, path: &Path) -> ReadResult<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_err(path, format!("row {}: {e}", i + 1)))?;
        if record.len() == 1 && record[0].is_empty() {
            continue; // blank line
        }
        let mut row = Vec::with_capacity(record.len());
        for (j, field) in record.iter().enumerate() {
            let v: f64 = field.parse().map_err(|_| {
                parse_err(path, format!("row {}, field {}: not a number: {field:?}", i + 1, j + 1))
            })?;
            if !v.is_finite() {
                return Err(parse_err(path, format!("row {}, field {}: non-finite value", i + 1, j + 1)));
            }
            row.push(v);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(path, "no data rows"));
    }
    Ok(rows)
}

fn uniform_width(rows: &[Vec<f64>], path: &Path) -> ReadResult<usize> {
    let width = rows[0].len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(parse_err(
                path,
                format!("row {} has {} fields, expected {width}", i + 1, r.len()),
            ));
        }
    }
    Ok(width)
}

/// Reads a vector: a JSON array of numbers, or CSV as one row or one
/// value per line.
pub fn read_vector(path: &Path) -> ReadResult<Vec<f64>> {
    let text = read_text(path)?;
    if looks_like_json(&text) {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| parse_err(path, e.to_string()))?;
        return json_number_row(&v, path, "vector");
    }
    let rows = csv_rows(&text, path)?;
    if rows.len() == 1 {
        Ok(rows.into_iter().next().unwrap())
    } else if rows.iter().all(|r| r.len() == 1) {
        Ok(rows.into_iter().map(|r| r[0]).collect())
    } else {
        Err(parse_err(path, "a vector file needs a single row or a single column"))
    }
}

/// Reads a matrix: JSON nested arrays, or row-major headerless CSV.
pub fn read_matrix(path: &Path) -> ReadResult<Matrix> {
    let text = read_text(path)?;
    let rows = if looks_like_json(&text) {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| parse_err(path, e.to_string()))?;
        let outer = v
            .as_array()
            .ok_or_else(|| parse_err(path, "expected an array of rows"))?;
        outer
            .iter()
            .enumerate()
            .map(|(i, r)| json_number_row(r, path, &format!("row {i}")))
            .collect::<ReadResult<Vec<_>>>()?
    } else {
        csv_rows(&text, path)?
    };
    if rows.is_empty() {
        return Err(parse_err(path, "no rows"));
    }
    uniform_width(&rows, path)?;
    Matrix::from_rows(&rows).map_err(|e| invalid(path, e))
}

/// Reads a grid.
///
/// CSV, or a JSON array of points, lists coordinates one point per row
/// and gets the path adjacency (consecutive points are neighbors). A
/// JSON object makes the structure explicit:
/// `{"points": [[..]..], "edges": [[i,j],..], "antipodes": [j,..]}`,
/// with `edges` and `antipodes` optional; omitted edges again mean the
/// path adjacency.
pub fn read_grid(path: &Path) -> ReadResult<Grid> {
    let text = read_text(path)?;
    if looks_like_json(&text) {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| parse_err(path, e.to_string()))?;
        if let Some(obj) = v.as_object() {
            for key in obj.keys() {
                if key != "points" && key != "edges" && key != "antipodes" {
                    return Err(parse_err(path, format!("unknown grid field {key:?}")));
                }
            }
            let points_v = obj
                .get("points")
                .ok_or_else(|| parse_err(path, "grid object needs a \"points\" field"))?;
            let points = points_rows(points_v, path)?;
            let edges = match obj.get("edges") {
                Some(e) => index_pairs(e, path)?,
                None => path_edges(points.len()),
            };
            let antipodes = obj
                .get("antipodes")
                .map(|a| index_list(a, path))
                .transpose()?;
            return Grid::from_parts(points, &edges, antipodes).map_err(|e| invalid(path, e));
        }
        let points = points_rows(&v, path)?;
        let edges = path_edges(points.len());
        return Grid::from_parts(points, &edges, None).map_err(|e| invalid(path, e));
    }
    let points = csv_rows(&text, path)?;
    uniform_width(&points, path)?;
    let edges = path_edges(points.len());
    Grid::from_parts(points, &edges, None).map_err(|e| invalid(path, e))
}

fn points_rows(v: &serde_json::Value, path: &Path) -> ReadResult<Vec<Vec<f64>>> {
    let outer = v
        .as_array()
        .ok_or_else(|| parse_err(path, "expected an array of points"))?;
    let rows: Vec<Vec<f64>> = outer
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.is_number() {
                // 1-D convenience: a flat list of coordinates.
                Ok(vec![json_number(r, path, &format!("point {i}"))?])
            } else {
                json_number_row(r, path, &format!("point {i}"))
            }
        })
        .collect::<ReadResult<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(parse_err(path, "no points"));
    }
    uniform_width(&rows, path)?;
    Ok(rows)
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn index_pairs(v: &serde_json::Value, path: &Path) -> ReadResult<Vec<(usize, usize)>> {
    let outer = v
        .as_array()
        .ok_or_else(|| parse_err(path, "\"edges\" must be an array of [i, j] pairs"))?;
    outer
        .iter()
        .enumerate()
        .map(|(k, pair)| {
            let arr = pair.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                parse_err(path, format!("edge {k}: expected a two-element array"))
            })?;
            let i = arr[0]
                .as_u64()
                .ok_or_else(|| parse_err(path, format!("edge {k}: indices must be nonnegative integers")))?;
            let j = arr[1]
                .as_u64()
                .ok_or_else(|| parse_err(path, format!("edge {k}: indices must be nonnegative integers")))?;
            Ok((i as usize, j as usize))
        })
        .collect()
}

fn index_list(v: &serde_json::Value, path: &Path) -> ReadResult<Vec<usize>> {
    let outer = v
        .as_array()
        .ok_or_else(|| parse_err(path, "\"antipodes\" must be an array of indices"))?;
    outer
        .iter()
        .enumerate()
        .map(|(k, e)| {
            e.as_u64().map(|i| i as usize).ok_or_else(|| {
                parse_err(path, format!("antipodes[{k}]: indices must be nonnegative integers"))
            })
        })
        .collect()
}

/// Reads sampled-function values, one vector per grid point: JSON
/// nested arrays or CSV rows. Scalar-valued functions may use a flat
/// JSON array or a single CSV column.
pub fn read_values(path: &Path) -> ReadResult<Vec<Vec<f64>>> {
    let text = read_text(path)?;
    let rows = if looks_like_json(&text) {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| parse_err(path, e.to_string()))?;
        points_rows(&v, path)?
    } else {
        let rows = csv_rows(&text, path)?;
        uniform_width(&rows, path)?;
        rows
    };
    Ok(rows)
}

/// Reads the combined one-file form of a sampled function: each row is
/// the grid coordinates followed by the value entries, split at
/// `grid_dim`. The grid gets the path adjacency.
pub fn read_sampled(path: &Path, grid_dim: usize) -> ReadResult<(Grid, Vec<Vec<f64>>)> {
    let text = read_text(path)?;
    let rows = if looks_like_json(&text) {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| parse_err(path, e.to_string()))?;
        points_rows(&v, path)?
    } else {
        let rows = csv_rows(&text, path)?;
        uniform_width(&rows, path)?;
        rows
    };
    let width = rows[0].len();
    if grid_dim == 0 || grid_dim >= width {
        return Err(parse_err(
            path,
            format!("rows have {width} fields, cannot split {grid_dim} grid coordinates from them"),
        ));
    }
    let mut points = Vec::with_capacity(rows.len());
    let mut values = Vec::with_capacity(rows.len());
    for row in rows {
        points.push(row[..grid_dim].to_vec());
        values.push(row[grid_dim..].to_vec());
    }
    let edges = path_edges(points.len());
    let grid = Grid::from_parts(points, &edges, None).map_err(|e| invalid(path, e))?;
    Ok((grid, values))
}

/// Renders a profile `lambda -> value` table as CSV, for `--dump-profile`.
pub fn profile_csv(samples: &[(f64, f64)]) -> String {
    let mut out = String::with_capacity(samples.len() * 48 + 16);
    out.push_str("lambda,value\n");
    for (l, v) in samples {
        let _ = writeln!(out, "{l:.17e},{v:.17e}");
    }
    out
}
