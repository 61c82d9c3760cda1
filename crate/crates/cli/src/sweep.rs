use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use ellipsoid_core::{capacitance, demagnetizing_factors, surface_area, EllipsoidShape, Tolerance};

use crate::numfmt::{round_sig, shortest, sig};
use crate::record::{csv_writer, ERROR_DIGITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Quantity {
    /// C/a
    #[value(name = "cap")]
    #[serde(rename = "cap")]
    Cap,
    /// n_a = L/(2πκ)
    #[value(name = "L")]
    #[serde(rename = "L")]
    L,
    /// n_b = M/(2πκ)
    #[value(name = "M")]
    #[serde(rename = "M")]
    M,
    /// n_c = N/(2πκ)
    #[value(name = "N")]
    #[serde(rename = "N")]
    N,
    /// area/a²
    #[value(name = "area")]
    #[serde(rename = "area")]
    Area,
}

/// A list `0.1,0.5,1` or an inclusive evenly spaced range `start:stop:count`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("not a number: {t:?}"));
        if let Some((start, rest)) = s.split_once(':') {
            let (stop, count) = rest.split_once(':').ok_or("range must be start:stop:count")?;
            let (start, stop) = (num(start)?, num(stop)?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("bad point count: {count:?}"))?;
            return match count {
                0 => Err("range needs at least one point".into()),
                1 => Ok(Grid(vec![start])),
                _ => Ok(Grid(
                    (0..count)
                        .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                        .collect(),
                )),
            };
        }
        let v = s.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
        Ok(Grid(v))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Warning,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub quantity: Quantity,
    pub b_over_a: f64,
    pub c_over_a: f64,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
    pub method: Option<String>,
    pub status: Status,
    pub message: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub quantity: Quantity,
    pub rows: Vec<SweepRow>,
}

pub const CSV_HEADER: [&str; 8] = [
    "quantity",
    "b_over_a",
    "c_over_a",
    "value",
    "error_estimate",
    "method",
    "status",
    "message",
];

fn evaluate(quantity: Quantity, b: f64, c: f64, tol: Tolerance) -> SweepRow {
    let mut row = SweepRow {
        quantity,
        b_over_a: b,
        c_over_a: c,
        value: None,
        error_estimate: None,
        method: None,
        status: Status::Ok,
        message: None,
    };
    let in_range = |r: f64| r > 0.0 && r <= 1.0;
    let problem = if !(in_range(b) && in_range(c)) {
        Some("ratios must lie in (0, 1]".to_string())
    } else if c > b {
        Some("c/a exceeds b/a".to_string())
    } else {
        None
    };
    if let Some(msg) = problem {
        row.status = Status::Warning;
        row.message = Some(format!("skipped: {msg}"));
        return row;
    }
    let result = EllipsoidShape::new(1.0, b, c).and_then(|s| match quantity {
        Quantity::Cap => capacitance(&s, tol).map(|r| (r.value, r.abs_error_estimate, r.method)),
        Quantity::Area => surface_area(&s, tol).map(|r| (r.value, r.abs_error_estimate, r.method)),
        Quantity::L | Quantity::M | Quantity::N => {
            let k = match quantity {
                Quantity::L => 0,
                Quantity::M => 1,
                _ => 2,
            };
            demagnetizing_factors(&s, 2.0, tol).map(|d| (d.coefficients()[k], d.abs_error_estimate, d.method))
        }
    });
    match result {
        Ok((v, e, m)) => {
            row.value = Some(v);
            row.error_estimate = Some(e);
            row.method = Some(m.to_string());
        }
        Err(e) => {
            row.status = Status::Error;
            row.message = Some(e.to_string());
        }
    }
    row
}

/// Evaluates every `(b/a, c/a)` point in parallel; rows come back in grid
/// order with `c/a` varying fastest.
pub fn run(quantity: Quantity, b_over_a: &[f64], c_over_a: &[f64], tol: Tolerance) -> SweepReport {
    let points: Vec<(f64, f64)> = b_over_a
        .iter()
        .flat_map(|&b| c_over_a.iter().map(move |&c| (b, c)))
        .collect();
    let rows = points.par_iter().map(|&(b, c)| evaluate(quantity, b, c, tol)).collect();
    SweepReport { quantity, rows }
}

impl SweepReport {
    /// The first evaluation failure that was not a skipped grid point.
    pub fn first_error(&self) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.status == Status::Error)
    }

    fn rounded(&self, digits: usize) -> Self {
        let mut r = self.clone();
        for row in &mut r.rows {
            row.value = row.value.map(|v| round_sig(v, digits));
            row.error_estimate = row.error_estimate.map(|v| round_sig(v, ERROR_DIGITS));
        }
        r
    }

    fn cells(&self, row: &SweepRow, digits: usize) -> [String; 8] {
        let status = match row.status {
            Status::Ok => "ok",
            Status::Warning => "warning",
            Status::Error => "error",
        };
        let quantity = self
            .quantity
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        [
            quantity,
            shortest(row.b_over_a),
            shortest(row.c_over_a),
            row.value.map(|v| sig(v, digits)).unwrap_or_default(),
            row.error_estimate.map(|v| sig(v, ERROR_DIGITS)).unwrap_or_default(),
            row.method.clone().unwrap_or_default(),
            status.to_string(),
            row.message.clone().unwrap_or_default(),
        ]
    }

    pub fn write_csv(&self, out: &mut impl Write, digits: usize) -> io::Result<()> {
        let mut w = csv_writer(out);
        w.write_record(CSV_HEADER)?;
        for row in &self.rows {
            w.write_record(self.cells(row, digits))?;
        }
        w.flush()
    }

    pub fn write_json(&self, out: &mut impl Write, digits: usize) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, &self.rounded(digits))?;
        writeln!(out)
    }

    pub fn write_text(&self, out: &mut impl Write, digits: usize) -> io::Result<()> {
        let table: Vec<[String; 8]> = self.rows.iter().map(|r| self.cells(r, digits)).collect();
        let mut widths = CSV_HEADER.map(str::len);
        for cells in &table {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.len());
            }
        }
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(CSV_HEADER.to_vec()))?;
        for cells in &table {
            writeln!(out, "{}", line(cells.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }
}
