//! Reed-Muller-type evaluation codes `C_X(d)`.
//!
//! Points are stored in standard form and the normalizer at `P_i` is
//! `t_j^d` with `j` the pivot of `P_i`, so `h_i(P_i) = 1` and the evaluation
//! matrix holds plain values `M_j(P_i)`.

use rayon::prelude::*;
use thiserror::Error;

use crate::gf::{FieldElem, FieldSpec};
use crate::linalg::{LinalgError, MatGF};
use crate::varieties::{
    eval_unchecked, monomial_count, monomials_of_degree, veronese_embed, Monomial, PointSet, ProjPoint, VarietyError,
};

/// Largest number of degree-`d` monomials (evaluation matrix rows) accepted.
pub const MAX_MONOMIALS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("code degree must be at least 1")]
    DegreeZero,
    #[error("degree {d} in {s} variables gives too many monomials (limit {MAX_MONOMIALS})")]
    DegreeTooLarge { s: usize, d: u32 },
    #[error("scaling coordinate {0} is zero")]
    ZeroScale(usize),
    #[error("representative {0} is not a nonzero multiple of its point")]
    BadRepresentative(usize),
    #[error("normalizer {0} has the wrong degree or vanishes at its point")]
    BadNormalizer(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
    #[error(transparent)]
    Oracle(#[from] Box<crate::oracle::OracleError>),
}

impl From<crate::oracle::OracleError> for CodeError {
    fn from(e: crate::oracle::OracleError) -> Self {
        CodeError::Oracle(Box::new(e))
    }
}

/// A code `C_X(d)` with its evaluation matrix and reduced generator basis.
#[derive(Debug, Clone)]
pub struct EvalCode {
    points: PointSet,
    d: u32,
    eval_matrix: MatGF,
    gen_basis: MatGF,
}

impl EvalCode {
    pub fn field(&self) -> &FieldSpec {
        self.points.field()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Code length `m = |X|`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Dimension `kappa = H_X(d)`.
    pub fn dim(&self) -> usize {
        self.gen_basis.nrows()
    }

    /// One row per degree-`d` monomial (descending lex), one column per point.
    pub fn eval_matrix(&self) -> &MatGF {
        &self.eval_matrix
    }

    /// Nonzero rows of the reduced row echelon form of the evaluation matrix.
    pub fn gen_basis(&self) -> &MatGF {
        &self.gen_basis
    }

    /// Header `q s d m kappa`, then one generator row per line.
    pub fn to_text(&self) -> String {
        let f = self.field();
        let mut out = format!("{} {} {} {} {}\n", f.q(), self.points.s(), self.d, self.len(), self.dim());
        for row in self.gen_basis.rows() {
            let line: Vec<String> = row.iter().map(|c| c.index().to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn check_degree(s: usize, d: u32) -> Result<(), CodeError> {
    match monomial_count(s, d) {
        Some(n) if n <= MAX_MONOMIALS => Ok(()),
        _ => Err(CodeError::DegreeTooLarge { s, d }),
    }
}

/// Evaluation matrix of all degree-`d` monomials at `x` (`d = 0` allowed).
pub fn evaluation_matrix(x: &PointSet, d: u32) -> Result<MatGF, CodeError> {
    check_degree(x.s(), d)?;
    let field = x.field();
    let monomials = monomials_of_degree(x.s(), d);
    let columns: Vec<Vec<FieldElem>> = x
        .points()
        .par_iter()
        .map(|p| monomials.iter().map(|m| eval_unchecked(field, m, p.coords())).collect())
        .collect();
    Ok(assemble_columns(field, monomials.len(), &columns))
}

fn assemble_columns(field: &FieldSpec, nrows: usize, columns: &[Vec<FieldElem>]) -> MatGF {
    let mut data = Vec::with_capacity(nrows * columns.len());
    for j in 0..nrows {
        data.extend(columns.iter().map(|col| col[j]));
    }
    MatGF::new(field.clone(), nrows, columns.len(), data).expect("dimensions agree")
}

/// Builds `C_X(d)` for `d >= 1`.
pub fn build_code(x: &PointSet, d: u32) -> Result<EvalCode, CodeError> {
    if d == 0 {
        return Err(CodeError::DegreeZero);
    }
    let eval_matrix = evaluation_matrix(x, d)?;
    let gen_basis = eval_matrix.row_basis();
    Ok(EvalCode { points: x.clone(), d, eval_matrix, gen_basis })
}

/// Alternative representatives and normalizers for the points of a set.
///
/// Column `i` of the resulting code is `(M_j(R_i) / h_i(R_i))_j` where `R_i`
/// is `representatives[i]` and `h_i` is `normalizers[i]`.
#[derive(Debug, Clone)]
pub struct Normalization {
    pub representatives: Vec<Vec<FieldElem>>,
    pub normalizers: Vec<Monomial>,
}

/// Builds `C_X(d)` with a caller-supplied normalization.
pub fn build_code_normalized(x: &PointSet, d: u32, norm: &Normalization) -> Result<EvalCode, CodeError> {
    if d == 0 {
        return Err(CodeError::DegreeZero);
    }
    check_degree(x.s(), d)?;
    let m = x.len();
    if norm.representatives.len() != m || norm.normalizers.len() != m {
        return Err(LinalgError::LengthMismatch { expected: m, got: norm.representatives.len() }.into());
    }
    let field = x.field();
    let monomials = monomials_of_degree(x.s(), d);
    let mut columns = Vec::with_capacity(m);
    for (i, p) in x.points().iter().enumerate() {
        let rep = &norm.representatives[i];
        if ProjPoint::standardize(field, rep).ok().as_ref() != Some(p) {
            return Err(CodeError::BadRepresentative(i));
        }
        let h = &norm.normalizers[i];
        if h.arity() != x.s() || h.degree() != d as u64 {
            return Err(CodeError::BadNormalizer(i));
        }
        let hv = eval_unchecked(field, h, rep);
        let inv = field.inv(hv).map_err(|_| CodeError::BadNormalizer(i))?;
        columns.push(monomials.iter().map(|mon| field.mul(eval_unchecked(field, mon, rep), inv)).collect::<Vec<_>>());
    }
    let eval_matrix = assemble_columns(field, monomials.len(), &columns);
    let gen_basis = eval_matrix.row_basis();
    Ok(EvalCode { points: x.clone(), d, eval_matrix, gen_basis })
}

/// `H_X(d)`: the dimension of `C_X(d)`, with `H_X(0) = 1`.
pub fn hilbert_function(x: &PointSet, d: u32) -> Result<usize, CodeError> {
    Ok(evaluation_matrix(x, d)?.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regularity {
    /// Smallest `d >= 0` with `H_X(d) = |X|`.
    pub index: u32,
    pub a_invariant: i64,
}

pub fn regularity(x: &PointSet) -> Result<Regularity, CodeError> {
    let m = x.len();
    let mut d = 0u32;
    loop {
        if hilbert_function(x, d)? == m {
            return Ok(Regularity { index: d, a_invariant: d as i64 - 1 });
        }
        d += 1;
    }
}

/// The dual code `C^perp`, as a basis of the right nullspace of the generators.
#[derive(Debug, Clone)]
pub struct DualCode {
    pub basis: MatGF,
}

impl DualCode {
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }
}

pub fn dual_code(c: &EvalCode) -> DualCode {
    let basis = c.gen_basis.nullspace();
    debug_assert_eq!(basis.nrows() + c.dim(), c.len());
    DualCode { basis }
}

/// Coordinatewise scaling `lambda . a` of every row.
pub fn scale_code(basis: &MatGF, lambda: &[FieldElem]) -> Result<MatGF, CodeError> {
    if let Some(i) = lambda.iter().position(|l| l.is_zero()) {
        return Err(CodeError::ZeroScale(i));
    }
    Ok(basis.scale_columns(lambda)?)
}

/// True iff `a` and `b` span the same row space.
pub fn codes_equal(a: &MatGF, b: &MatGF) -> Result<bool, CodeError> {
    if a.ncols() != b.ncols() {
        return Err(LinalgError::LengthMismatch { expected: a.ncols(), got: b.ncols() }.into());
    }
    let ra = a.rank();
    if ra != b.rank() {
        return Ok(false);
    }
    Ok(a.vstack(b)?.rank() == ra)
}

/// Scaling with `C_X(kd) = lambda . C_{rho_k(X)}(d)` under the canonical
/// normalizers: `lambda_i = c_i^d` with `c_i` the raw Veronese scale.
pub fn veronese_lambda(x: &PointSet, k: u32, d: u32) -> Vec<FieldElem> {
    let (_, scales) = veronese_embed(x, k);
    let f = x.field();
    scales.into_iter().map(|c| f.pow(c, d as u64)).collect()
}

#[derive(Debug, Clone)]
pub struct VeroneseReport {
    pub k: u32,
    pub d: u32,
    pub length: usize,
    /// `dim C_X(kd)`.
    pub dim_base: usize,
    /// `dim C_{rho_k(X)}(d)`.
    pub dim_veronese: usize,
    pub lengths_equal: bool,
    pub dims_equal: bool,
    /// `C_X(kd) = lambda . C_{rho_k(X)}(d)`.
    pub primal_equivalence: bool,
    /// `C^perp_{rho_k(X)}(d) = lambda . C^perp_X(kd)`.
    pub dual_equivalence: bool,
    pub lambda: Vec<FieldElem>,
}

impl VeroneseReport {
    pub fn passed(&self) -> bool {
        self.lengths_equal && self.dims_equal && self.primal_equivalence && self.dual_equivalence
    }
}

/// Builds both codes and checks length, dimension, and the primal and dual
/// equivalences with the constructed `lambda`.
pub fn verify_veronese_theorem(x: &PointSet, k: u32, d: u32) -> Result<VeroneseReport, CodeError> {
    if k == 0 || d == 0 {
        return Err(CodeError::DegreeZero);
    }
    let base = build_code(x, k * d)?;
    let (image, _) = veronese_embed(x, k);
    let ver = build_code(&image, d)?;
    let lambda = veronese_lambda(x, k, d);

    let primal_equivalence = codes_equal(base.gen_basis(), &scale_code(ver.gen_basis(), &lambda)?)?;
    let dual_base = dual_code(&base);
    let dual_ver = dual_code(&ver);
    let dual_equivalence = codes_equal(&dual_ver.basis, &scale_code(&dual_base.basis, &lambda)?)?;

    Ok(VeroneseReport {
        k,
        d,
        length: x.len(),
        dim_base: base.dim(),
        dim_veronese: ver.dim(),
        lengths_equal: base.len() == ver.len(),
        dims_equal: base.dim() == ver.dim(),
        primal_equivalence,
        dual_equivalence,
        lambda,
    })
}

/// Generator of the code the dual of `C_{V_k}(d)` is compared with, where
/// `V_k = rho_k(P^{s-1})`: `C_{P^{s-1}}((q-1)(s-1) - kd)`, with the all-ones
/// vector adjoined when `kd ≡ 0 mod q-1`. Rows follow the point order of
/// `projective_space`.
pub fn veronese_dual_candidate(field: &FieldSpec, s: usize, k: u32, d: u32) -> Result<MatGF, CodeError> {
    let q = field.q() as u64;
    let kd = k as u64 * d as u64;
    let top = (q - 1) * (s as u64 - 1);
    if k == 0 || d == 0 {
        return Err(CodeError::DegreeZero);
    }
    if kd > top {
        return Err(CodeError::DegreeTooLarge { s, d });
    }
    let x = crate::varieties::projective_space(field, s)?;
    let mut g = evaluation_matrix(&x, (top - kd) as u32)?.row_basis();
    if kd.is_multiple_of(q - 1) {
        g.push_row(&vec![FieldElem::ONE; x.len()])?;
        g = g.row_basis();
    }
    Ok(g)
}
