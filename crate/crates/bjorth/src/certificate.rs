//! Machine-checkable verdicts.
//!
//! Every orthogonality check in this crate returns an [`OrthCertificate`]:
//! the verdict plus enough evidence to re-check it without rerunning the
//! decision procedure. Orthogonal verdicts carry witnesses (a maximizing
//! direction, a pair, grid points) and residuals measuring how well the
//! witness does its job; non-orthogonal verdicts carry the minimizing
//! `lambda_star` and the value `|x + lambda y|` drops to there.
//!
//! Certificates render to JSON with a fixed key order and fixed float
//! formatting (17 significant digits), so identical inputs produce
//! byte-identical output.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Orthogonal,
    NotOrthogonal,
}

/// A grid point identified by index, with its coordinates echoed so the
/// certificate stands on its own.
#[derive(Debug, Clone, PartialEq)]
pub struct GridWitness {
    pub index: usize,
    pub point: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A single maximizing direction, as in the spectral-norm check.
    Vector(Vec<f64>),
    /// A maximizing pair for a bilinear form.
    Pair { x: Vec<f64>, y: Vec<f64> },
    /// Unit-sphere points carrying the two one-sided conditions.
    SpherePoints { plus: Vec<f64>, minus: Vec<f64> },
    /// Grid points carrying the two one-sided conditions.
    GridPoints { plus: GridWitness, minus: GridWitness },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Minimizer of the norm profile; present on NotOrthogonal.
    pub lambda_star: Option<f64>,
    /// Profile value at `lambda_star`; present on NotOrthogonal.
    pub min_value: Option<f64>,
    /// Set when a zero input forced the verdict by convention.
    pub degenerate: bool,
    /// Named scalar evidence, e.g. the witness pairing residual. A
    /// `BTreeMap` so the JSON key order is fixed.
    pub residuals: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl OrthCertificate {
    pub fn orthogonal() -> Self {
        OrthCertificate {
            verdict: Verdict::Orthogonal,
            witness: None,
            lambda_star: None,
            min_value: None,
            degenerate: false,
            residuals: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn not_orthogonal(lambda_star: f64, min_value: f64) -> Self {
        OrthCertificate {
            verdict: Verdict::NotOrthogonal,
            witness: None,
            lambda_star: Some(lambda_star),
            min_value: Some(min_value),
            degenerate: false,
            residuals: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    /// Orthogonal by convention (a zero input), with the reason recorded.
    pub fn degenerate_orthogonal(note: &str) -> Self {
        let mut c = Self::orthogonal();
        c.degenerate = true;
        c.notes.push(note.into());
        c
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_residual(mut self, key: &str, value: f64) -> Self {
        self.residuals.insert(key.into(), value);
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_orthogonal(&self) -> bool {
        self.verdict == Verdict::Orthogonal
    }

    /// Canonical JSON object for this certificate.
    ///
    /// `check` names the operation that produced it (`"vec-orth"`,
    /// `"mat-orth"`, ...). Key order is fixed: schema, check, verdict,
    /// degenerate, witness, lambda_star, min_value, residuals, notes.
    pub fn to_json(&self, check: &str) -> String {
        let mut out = String::with_capacity(256);
        out.push_str("{\"schema\":\"bjorth/1\",\"check\":");
        out.push_str(&json::string(check));
        out.push(',');
        self.push_json_fields(&mut out);
        out.push('}');
        out
    }

    /// The certificate fields without the surrounding braces or schema
    /// header, for callers that append their own keys (the CLI adds an
    /// oracle block).
    pub fn push_json_fields(&self, out: &mut String) {
        out.push_str("\"verdict\":");
        out.push_str(match self.verdict {
            Verdict::Orthogonal => "\"orthogonal\"",
            Verdict::NotOrthogonal => "\"not_orthogonal\"",
        });
        out.push_str(",\"degenerate\":");
        out.push_str(if self.degenerate { "true" } else { "false" });

        out.push_str(",\"witness\":");
        match &self.witness {
            None => out.push_str("null"),
            Some(Witness::Vector(v)) => {
                out.push_str("{\"vector\":");
                out.push_str(&json::float_array(v));
                out.push('}');
            }
            Some(Witness::Pair { x, y }) => {
                out.push_str("{\"x\":");
                out.push_str(&json::float_array(x));
                out.push_str(",\"y\":");
                out.push_str(&json::float_array(y));
                out.push('}');
            }
            Some(Witness::SpherePoints { plus, minus }) => {
                out.push_str("{\"plus\":");
                out.push_str(&json::float_array(plus));
                out.push_str(",\"minus\":");
                out.push_str(&json::float_array(minus));
                out.push('}');
            }
            Some(Witness::GridPoints { plus, minus }) => {
                out.push_str("{\"plus\":");
                push_grid_witness(out, plus);
                out.push_str(",\"minus\":");
                push_grid_witness(out, minus);
                out.push('}');
            }
        }

        out.push_str(",\"lambda_star\":");
        out.push_str(&json::opt_float(self.lambda_star));
        out.push_str(",\"min_value\":");
        out.push_str(&json::opt_float(self.min_value));

        out.push_str(",\"residuals\":{");
        let mut first = true;
        for (k, v) in &self.residuals {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&json::string(k));
            out.push(':');
            out.push_str(&json::float(*v));
        }
        out.push('}');

        out.push_str(",\"notes\":[");
        let mut first = true;
        for n in &self.notes {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&json::string(n));
        }
        out.push(']');
    }
}

fn push_grid_witness(out: &mut String, w: &GridWitness) {
    out.push_str("{\"index\":");
    out.push_str(&w.index.to_string());
    out.push_str(",\"point\":");
    out.push_str(&json::float_array(&w.point));
    out.push('}');
}

/// Deterministic JSON fragments. Floats print in scientific notation with
/// 17 significant digits, which round-trips `f64` exactly and never
/// depends on locale or shortest-representation heuristics.
pub mod json {
    pub fn float(v: f64) -> String {
        if v.is_finite() {
            format!("{v:.16e}")
        } else {
            // Certificates should never carry non-finite values; render as
            // null rather than emitting invalid JSON.
            "null".into()
        }
    }

    pub fn opt_float(v: Option<f64>) -> String {
        match v {
            Some(v) => float(v),
            None => "null".into(),
        }
    }

    pub fn float_array(xs: &[f64]) -> String {
        let mut out = String::with_capacity(xs.len() * 24 + 2);
        out.push('[');
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&float(*x));
        }
        out.push(']');
        out
    }

    pub fn string(s: &str) -> String {
        let mut out = String::with_capacity(s.len() + 2);
        out.push('"');
        for c in s.chars() {
            match c {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                '\t' => out.push_str("\\t"),
                c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                c => out.push(c),
            }
        }
        out.push('"');
        out
    }
}
