use std::io::{self, Write};

use indexmap::IndexMap;
use serde::Serialize;

use crate::numfmt::{round_sig, shortest, sig};

/// Significant digits used for error estimates in every format.
pub const ERROR_DIGITS: usize = 3;

/// One evaluated shape: the inputs as given, their canonical ordering, the
/// results and an error estimate per result.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub axes: Vec<f64>,
    pub canonical_axes: Vec<f64>,
    /// Input position of each canonical axis.
    pub permutation: Vec<usize>,
    pub parameters: IndexMap<&'static str, f64>,
    pub outputs: IndexMap<&'static str, f64>,
    pub error_estimates: IndexMap<&'static str, f64>,
    pub method: String,
}

fn join(v: &[f64]) -> String {
    v.iter().map(|&x| shortest(x)).collect::<Vec<_>>().join(" ")
}

impl OutputRecord {
    /// The record with outputs rounded to `digits` and error estimates to
    /// [`ERROR_DIGITS`] significant digits.
    pub fn rounded(&self, digits: usize) -> Self {
        let mut r = self.clone();
        r.outputs.values_mut().for_each(|v| *v = round_sig(*v, digits));
        r.error_estimates
            .values_mut()
            .for_each(|v| *v = round_sig(*v, ERROR_DIGITS));
        r
    }

    pub fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = ["axes", "canonical_axes", "permutation"].map(String::from).to_vec();
        h.extend(self.parameters.keys().map(|k| k.to_string()));
        h.extend(self.outputs.keys().map(|k| k.to_string()));
        h.extend(self.error_estimates.keys().map(|k| format!("{k}_error")));
        h.push("method".into());
        h
    }

    pub fn csv_row(&self, digits: usize) -> Vec<String> {
        let perm = self
            .permutation
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let mut row = vec![join(&self.axes), join(&self.canonical_axes), perm];
        row.extend(self.parameters.values().map(|&v| shortest(v)));
        row.extend(self.outputs.values().map(|&v| sig(v, digits)));
        row.extend(self.error_estimates.values().map(|&v| sig(v, ERROR_DIGITS)));
        row.push(self.method.clone());
        row
    }

    pub fn write_text(&self, out: &mut impl Write, digits: usize) -> io::Result<()> {
        writeln!(out, "{} {}", self.command, join(&self.axes))?;
        let perm = self
            .permutation
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(
            out,
            "  canonical axes: {} (input positions {perm})",
            join(&self.canonical_axes)
        )?;
        for (k, &v) in &self.parameters {
            writeln!(out, "  {k}: {}", shortest(v))?;
        }
        let width = self.outputs.keys().map(|k| k.len()).max().unwrap_or(0);
        for (k, &v) in &self.outputs {
            match self.error_estimates.get(k) {
                Some(&e) => writeln!(
                    out,
                    "  {k:<width$} = {}  (error {})",
                    sig(v, digits),
                    sig(e, ERROR_DIGITS)
                )?,
                None => writeln!(out, "  {k:<width$} = {}", sig(v, digits))?,
            }
        }
        writeln!(out, "  method: {}", self.method)
    }

    pub fn write_json(&self, out: &mut impl Write, digits: usize) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, &self.rounded(digits))?;
        writeln!(out)
    }
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out)
}
