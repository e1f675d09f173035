//! Point sets named on the command line and the exact methods that apply to them.

use clap::{Args, ValueEnum};
use rmghw::evalcode::EvalCode;
use rmghw::formulas::{
    cartesian_ghw, cartesian_min_distance, footprint_ghw, prm_min_distance, torus_ghw, torus_min_distance,
    CartesianParams, FormulaError,
};
use rmghw::gf::{FieldElem, FieldSpec};
use rmghw::oracle::{min_distance_enum, weight_hierarchy, Hierarchy, OracleError, MAX_ORACLE_LENGTH};
use rmghw::varieties::{cartesian_set, projective_space, projective_torus, veronese_embed, PointSet};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Projective,
    Torus,
    Cartesian,
}

#[derive(Debug, Clone, Args)]
pub struct VarietyArgs {
    /// Field order (a prime power).
    #[arg(long)]
    pub q: Option<u64>,
    /// Number of homogeneous coordinates; the points live in P^{s-1}.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// Cartesian factors as field-element indices, e.g. "0,1,2;0,1".
    #[arg(long)]
    pub factors: Option<String>,
    /// Veronese degree; values above 1 replace the set by its image.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
}

/// A base point set and, for `k > 1`, its Veronese image.
pub struct Variety {
    pub field: FieldSpec,
    pub kind: Kind,
    pub base: PointSet,
    pub k: u32,
    pub points: PointSet,
    pub cartesian: Option<CartesianParams>,
}

fn parse_factors(field: &FieldSpec, text: &str) -> Result<Vec<Vec<FieldElem>>, CliError> {
    text.split(';')
        .map(|factor| {
            factor
                .split(',')
                .map(|tok| {
                    let v: u64 =
                        tok.trim().parse().map_err(|_| CliError::BadArgs(format!("bad factor element {tok:?}")))?;
                    Ok(field.elem(v)?)
                })
                .collect()
        })
        .collect()
}

impl VarietyArgs {
    pub fn build(&self) -> Result<Variety, CliError> {
        let q = self.q.ok_or_else(|| CliError::BadArgs("--q is required".into()))?;
        let kind = self.kind.ok_or_else(|| CliError::BadArgs("--kind is required".into()))?;
        if self.k == 0 {
            return Err(CliError::BadArgs("--k must be at least 1".into()));
        }
        let field = FieldSpec::of_order(q)?;
        if kind != Kind::Cartesian && self.factors.is_some() {
            return Err(CliError::BadArgs("--factors only applies to --kind cartesian".into()));
        }
        let base = match kind {
            Kind::Projective => projective_space(&field, self.need_s()?)?,
            Kind::Torus => projective_torus(&field, self.need_s()?)?,
            Kind::Cartesian => {
                let text = self.factors.as_deref().ok_or_else(|| CliError::BadArgs("--factors is required".into()))?;
                let set = cartesian_set(&field, &parse_factors(&field, text)?)?;
                if let Some(s) = self.s {
                    if s != set.s() {
                        return Err(CliError::BadArgs(format!("--s {s} but the factors give s = {}", set.s())));
                    }
                }
                set
            }
        };
        Ok(Variety::new(field, kind, base, self.k))
    }

    fn need_s(&self) -> Result<usize, CliError> {
        self.s.ok_or_else(|| CliError::BadArgs("--s is required".into()))
    }
}

impl Variety {
    pub fn new(field: FieldSpec, kind: Kind, base: PointSet, k: u32) -> Self {
        let cartesian = match kind {
            Kind::Projective => None,
            Kind::Torus => CartesianParams::torus(field.q() as u64, base.s()).ok(),
            Kind::Cartesian => base.kind().cartesian_sizes().and_then(|sizes| CartesianParams::new(sizes).ok()),
        };
        let points = if k > 1 { veronese_embed(&base, k).0 } else { base.clone() };
        Variety { field, kind, base, k, points, cartesian }
    }

    /// Degree on the base set matching degree `d` on the image.
    fn base_degree(&self, d: u32) -> u64 {
        self.k as u64 * d as u64
    }

    /// Closed form for `delta_r` at degree `d`.
    pub fn formula(&self, d: u32, r: usize) -> Result<u64, CliError> {
        let q = self.field.q() as u64;
        let s = self.base.s();
        let dd = self.base_degree(d);
        let value = match (self.kind, r) {
            (Kind::Projective, 1) => prm_min_distance(q, s, dd)?,
            (Kind::Projective, _) => return Err(FormulaError::RankOutOfTheoremRange { r, max: 1 }.into()),
            (Kind::Torus, 1) => torus_min_distance(q, s, dd)?,
            (Kind::Torus, _) => torus_ghw(q, s, dd, r)?,
            (Kind::Cartesian, 1) => cartesian_min_distance(self.params()?, dd)?,
            (Kind::Cartesian, _) => cartesian_ghw(self.params()?, dd, r)?,
        };
        Ok(value)
    }

    /// Footprint evaluator for `delta_r` at degree `d` (cartesian sets and tori).
    pub fn footprint(&self, d: u32, r: usize) -> Result<u64, CliError> {
        Ok(footprint_ghw(self.params()?, self.base_degree(d), r)?)
    }

    fn params(&self) -> Result<&CartesianParams, CliError> {
        self.cartesian
            .as_ref()
            .ok_or_else(|| CliError::Guard("the footprint evaluator applies to cartesian sets and tori only".into()))
    }

    pub fn subset_rank_fits(&self) -> bool {
        self.points.len() <= MAX_ORACLE_LENGTH
    }
}

/// Oracle hierarchy of a code, or the guard that refused it.
pub fn hierarchy(code: &EvalCode) -> Result<Hierarchy, OracleError> {
    weight_hierarchy(code.gen_basis())
}

/// Number of projective message classes `(q^kappa - 1)/(q - 1)`, saturating.
pub fn enum_classes(q: u64, kappa: usize) -> u128 {
    (0..kappa).fold(0u128, |acc, _| acc.saturating_mul(q as u128).saturating_add(1))
}

/// `delta_1` by codeword enumeration with its support.
pub fn enumerate(code: &EvalCode) -> Result<(u64, Vec<usize>), OracleError> {
    let (w, cw) = min_distance_enum(code)?;
    Ok((w, (0..cw.len()).filter(|&j| !cw[j].is_zero()).collect()))
}
