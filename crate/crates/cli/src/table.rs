//! Parameter tables: one row per degree with `m`, `H` and `delta_r` cells.

use std::fmt::Write as _;

use clap::ValueEnum;
use rmghw::evalcode::{build_code, regularity, EvalCode};
use rmghw::gf::FieldSpec;
use rmghw::oracle::{Hierarchy, Method};
use rmghw::varieties::{projective_space, projective_torus};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::variety::{enum_classes, enumerate, hierarchy, Kind, Variety};

/// Enumeration budget inside tables; `ghw --method oracle` uses the full limit.
const TABLE_ENUM_CLASSES: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    #[value(name = "f8-p2")]
    F8P2,
    F8VeroneseK2,
    F5Torus,
    F5VeroneseTorus,
}

/// Published values a fixture is checked against.
pub struct Expected {
    pub m: usize,
    pub h: &'static [usize],
    pub deltas: &'static [&'static [u64]],
    pub regularity: u32,
}

impl Fixture {
    pub fn variety(self) -> Result<Variety, CliError> {
        let (q, kind, k) = match self {
            Fixture::F8P2 => (8, Kind::Projective, 1),
            Fixture::F8VeroneseK2 => (8, Kind::Projective, 2),
            Fixture::F5Torus => (5, Kind::Torus, 1),
            Fixture::F5VeroneseTorus => (5, Kind::Torus, 2),
        };
        let field = FieldSpec::of_order(q)?;
        let base = match kind {
            Kind::Projective => projective_space(&field, 3)?,
            _ => projective_torus(&field, 3)?,
        };
        Ok(Variety::new(field, kind, base, k))
    }

    pub fn expected(self) -> Expected {
        match self {
            Fixture::F8P2 => Expected {
                m: 73,
                h: &[3, 6, 10, 15, 21, 28, 36, 45, 52, 58, 63, 67, 70, 72, 73],
                deltas: &[&[64, 56, 48, 40, 32, 24, 16, 8, 7, 6, 5, 4, 3, 2, 1]],
                regularity: 15,
            },
            Fixture::F8VeroneseK2 => Expected {
                m: 73,
                h: &[6, 15, 28, 45, 58, 67, 72, 73],
                deltas: &[&[56, 40, 24, 8, 6, 4, 2, 1]],
                regularity: 8,
            },
            Fixture::F5Torus => Expected {
                m: 16,
                h: &[3, 6, 10, 13, 15, 16],
                deltas: &[&[12, 8, 4, 3, 2, 1], &[15, 11, 7, 4, 3, 2], &[16, 12, 8, 6, 4, 3]],
                regularity: 6,
            },
            Fixture::F5VeroneseTorus => {
                Expected { m: 16, h: &[6, 13, 16], deltas: &[&[8, 3, 1], &[11, 4, 2], &[12, 6, 3]], regularity: 3 }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub r: usize,
    pub value: Option<u64>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub d: u32,
    pub m: usize,
    #[serde(rename = "H")]
    pub h: Option<usize>,
    pub delta: Vec<Cell>,
}

/// Table-level code description; `d` and `kappa` vary by row and are null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCode {
    pub q: u32,
    pub e: u32,
    pub s: usize,
    pub kind: String,
    pub d: Option<u32>,
    pub m: usize,
    pub kappa: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub schema: u32,
    pub code: TableCode,
    pub regularity: Option<u32>,
    pub rows: Vec<Row>,
}

fn unavailable(r: usize) -> Cell {
    Cell { r, value: None, method: Method::Unavailable }
}

/// `delta_r` by the first exact method that fits: subset rank on short codes,
/// then closed form, footprint, and codeword enumeration for `r = 1`.
fn cell(v: &Variety, code: &EvalCode, r: usize, h: Option<&Hierarchy>) -> Cell {
    let d = code.degree();
    if let Some(h) = h {
        return Cell { r, value: Some(h.weights[r - 1]), method: Method::SubsetRank };
    }
    if let Ok(value) = v.formula(d, r) {
        return Cell { r, value: Some(value), method: Method::ClosedForm };
    }
    if let Ok(value) = v.footprint(d, r) {
        return Cell { r, value: Some(value), method: Method::Footprint };
    }
    if r == 1 && enum_classes(v.field.q() as u64, code.dim()) <= TABLE_ENUM_CLASSES {
        if let Ok((value, _)) = enumerate(code) {
            return Cell { r, value: Some(value), method: Method::CodewordEnum };
        }
    }
    unavailable(r)
}

pub fn compute(v: &Variety, dmax: Option<u32>, rmax: usize) -> Result<Table, CliError> {
    let reg = regularity(&v.points).ok().map(|r| r.index);
    let dmax = match (dmax, reg) {
        (Some(d), _) => d,
        (None, Some(r)) => r.max(1),
        (None, None) => return Err(CliError::Guard("regularity out of reach; pass --dmax".into())),
    };
    let q = v.field.q();
    let mut rows = Vec::with_capacity(dmax as usize);
    for d in 1..=dmax {
        let m = v.points.len();
        let Ok(code) = build_code(&v.points, d) else {
            rows.push(Row { d, m, h: None, delta: (1..=rmax).map(unavailable).collect() });
            continue;
        };
        let kappa = code.dim();
        let h = if v.subset_rank_fits() { hierarchy(&code).ok() } else { None };
        let delta = (1..=rmax.min(kappa)).map(|r| cell(v, &code, r, h.as_ref())).collect();
        rows.push(Row { d, m, h: Some(kappa), delta });
    }
    let code = TableCode {
        q,
        e: v.field.e(),
        s: v.points.s(),
        kind: v.points.kind().tag(),
        d: None,
        m: v.points.len(),
        kappa: None,
    };
    Ok(Table { schema: 1, code, regularity: reg, rows })
}

/// Cell-by-cell comparison with the fixture's published values.
pub fn check(table: &Table, expected: &Expected) -> Vec<String> {
    let mut problems = Vec::new();
    if table.rows.len() != expected.h.len() {
        problems.push(format!("{} rows, expected {}", table.rows.len(), expected.h.len()));
    }
    if table.regularity != Some(expected.regularity) {
        problems.push(format!("regularity {:?}, expected {}", table.regularity, expected.regularity));
    }
    for (i, row) in table.rows.iter().enumerate().take(expected.h.len()) {
        if row.m != expected.m {
            problems.push(format!("d={}: m={}, expected {}", row.d, row.m, expected.m));
        }
        if row.h != Some(expected.h[i]) {
            problems.push(format!("d={}: H={:?}, expected {}", row.d, row.h, expected.h[i]));
        }
        for (r, col) in expected.deltas.iter().enumerate() {
            let got = row.delta.get(r).and_then(|c| c.value);
            if got != Some(col[i]) {
                problems.push(format!("d={}: delta_{}={:?}, expected {}", row.d, r + 1, got, col[i]));
            }
        }
    }
    problems
}

fn rmax_of(table: &Table) -> usize {
    table.rows.iter().map(|r| r.delta.len()).max().unwrap_or(0)
}

fn methods(cells: &[&Cell]) -> String {
    let mut seen: Vec<Method> = Vec::new();
    for c in cells {
        if !seen.contains(&c.method) {
            seen.push(c.method);
        }
    }
    seen.iter().map(|m| format!("{m:?}")).collect::<Vec<_>>().join(";")
}

pub fn to_csv(table: &Table) -> String {
    let rmax = rmax_of(table);
    let mut out = String::from("d,m,H");
    for r in 1..=rmax {
        let _ = write!(out, ",delta_{r}");
    }
    out.push_str(",method\n");
    for row in &table.rows {
        let _ = write!(out, "{},{},{}", row.d, row.m, row.h.map(|h| h.to_string()).unwrap_or_default());
        for r in 0..rmax {
            let v = row.delta.get(r).and_then(|c| c.value).map(|v| v.to_string()).unwrap_or_default();
            let _ = write!(out, ",{v}");
        }
        let _ = writeln!(out, ",{}", methods(&row.delta.iter().collect::<Vec<_>>()));
    }
    out
}

/// Transposed layout: one line per quantity, one column per degree.
pub fn to_pretty(table: &Table) -> String {
    let rmax = rmax_of(table);
    let mut lines: Vec<(String, Vec<String>)> = vec![
        ("d".into(), table.rows.iter().map(|r| r.d.to_string()).collect()),
        ("m".into(), table.rows.iter().map(|r| r.m.to_string()).collect()),
        ("H".into(), table.rows.iter().map(|r| r.h.map(|h| h.to_string()).unwrap_or("-".into())).collect()),
    ];
    for r in 0..rmax {
        let cells = table
            .rows
            .iter()
            .map(|row| row.delta.get(r).and_then(|c| c.value).map(|v| v.to_string()).unwrap_or("-".into()))
            .collect();
        lines.push((format!("delta_{}", r + 1), cells));
    }
    let label_w = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let cell_w = lines.iter().flat_map(|(_, c)| c.iter().map(String::len)).max().unwrap_or(1);
    let mut out = format!("{} q={} s={} m={}\n", table.code.kind, table.code.q, table.code.s, table.code.m);
    for (label, cells) in &lines {
        let _ = write!(out, "{label:<label_w$} |");
        for c in cells {
            let _ = write!(out, " {c:>cell_w$}");
        }
        out.push('\n');
    }
    if let Some(reg) = table.regularity {
        let _ = writeln!(out, "regularity {reg}");
    }
    let all: Vec<&Cell> = table.rows.iter().flat_map(|r| r.delta.iter()).collect();
    let _ = writeln!(out, "methods {}", methods(&all));
    out
}
