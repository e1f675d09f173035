//! Exact generalized Hamming weights by exhaustive search.
//!
//! Two independent routes:
//!
//! * **subset rank**: for a generator matrix `G` of dimension `kappa`,
//!   `dim{c in C : supp(c) ⊆ S} = kappa - rank(G_T)` with `T` the columns
//!   outside `S`, so `delta_r = m - max{|T| : rank(G_T) <= kappa - r}`. The
//!   search walks column subsets depth first and always includes a column
//!   that already lies in the span of the chosen ones, which visits every
//!   closed column set (the only candidates for the maximum).
//! * **codeword enumeration**: minimum weight over one message per
//!   projective class, stepping through messages in q-ary Gray code order so
//!   every step adds a single scaled generator row.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::evalcode::{build_code, dual_code, veronese_dual_candidate, CodeError, EvalCode};
use crate::gf::{FieldElem, FieldSpec};
use crate::linalg::{LinalgError, MatGF};
use crate::varieties::{projective_space, veronese_embed};

/// Largest code length accepted by the subset-rank search.
pub const MAX_ORACLE_LENGTH: usize = 24;
/// Largest number of projective message classes for codeword enumeration.
pub const MAX_ENUM_CLASSES: u64 = 200_000_000;

/// Depth at which the subset search is split into parallel work units.
const SPLIT_DEPTH: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("rank {r} outside 1..={kappa}")]
    RankOutOfRange { r: usize, kappa: usize },
    #[error("code length {0} exceeds the subset-search limit {MAX_ORACLE_LENGTH}")]
    LengthTooLargeForOracle(usize),
    #[error("{classes} message classes exceed the enumeration limit {MAX_ENUM_CLASSES}")]
    DimensionTooLargeForOracle { classes: u128 },
    #[error("subcode basis rows are linearly dependent")]
    DependentRows,
    #[error("the code is zero")]
    ZeroCode,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    SubsetRank,
    CodewordEnum,
    ClosedForm,
    Footprint,
    /// No exact method fits within the guards.
    Unavailable,
}

/// Identifies the code a report belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeId {
    pub q: u32,
    pub e: u32,
    pub s: usize,
    pub d: u32,
    pub kind: String,
    pub m: usize,
    pub kappa: usize,
}

impl CodeId {
    pub fn of(code: &EvalCode) -> Self {
        let f = code.field();
        CodeId {
            q: f.q(),
            e: f.e(),
            s: code.points().s(),
            d: code.degree(),
            kind: code.points().kind().tag(),
            m: code.len(),
            kappa: code.dim(),
        }
    }
}

/// Generalized Hamming weights of one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhwReport {
    pub code: CodeId,
    pub method: Method,
    /// `(r, delta_r)` pairs in increasing `r`.
    pub weights: Vec<(usize, u64)>,
    /// `(r, support)` pairs for the ranks that carry a witness.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_support: Vec<(usize, Vec<usize>)>,
}

impl GhwReport {
    pub fn weight(&self, r: usize) -> Option<u64> {
        self.weights.iter().find(|(rr, _)| *rr == r).map(|&(_, w)| w)
    }

    pub fn values(&self) -> Vec<u64> {
        self.weights.iter().map(|&(_, w)| w).collect()
    }
}

/// An `r`-dimensional subcode attaining `delta_r`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub support: Vec<usize>,
    pub basis: MatGF,
}

/// Columns on which some row of `basis` is nonzero.
pub fn support(basis: &MatGF) -> Result<Vec<usize>, OracleError> {
    if basis.rank() != basis.nrows() {
        return Err(OracleError::DependentRows);
    }
    Ok((0..basis.ncols()).filter(|&j| basis.rows().any(|row| !row[j].is_zero())).collect())
}

/// Field arithmetic on raw element indices, through tables when present.
#[derive(Clone, Copy)]
struct Arith<'a> {
    field: &'a FieldSpec,
    q: usize,
    add: Option<&'a [u32]>,
    mul: Option<&'a [u32]>,
}

impl<'a> Arith<'a> {
    fn new(field: &'a FieldSpec) -> Self {
        Arith { field, q: field.q() as usize, add: field.add_table(), mul: field.mul_table() }
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        match self.add {
            Some(t) => t[a as usize * self.q + b as usize],
            None => self.field.add(elem(a), elem(b)).index(),
        }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        match self.mul {
            Some(t) => t[a as usize * self.q + b as usize],
            None => self.field.mul(elem(a), elem(b)).index(),
        }
    }

    fn neg(&self, a: u32) -> u32 {
        self.field.neg(elem(a)).index()
    }

    fn inv(&self, a: u32) -> u32 {
        self.field.inv(elem(a)).expect("nonzero").index()
    }
}

// indices handed to Arith always come from elements of its own field
#[inline]
fn elem(v: u32) -> FieldElem {
    FieldElem::from_index_unchecked(v)
}

/// Incrementally maintained echelon basis of column vectors.
#[derive(Clone)]
struct Echelon {
    vecs: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { vecs: Vec::new(), pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.vecs.len()
    }

    /// Reduces `v` against the basis; returns the pivot of the remainder or
    /// `None` if `v` lies in the span.
    fn reduce(&self, ar: &Arith, v: &mut [u32]) -> Option<usize> {
        for (b, &p) in self.vecs.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                let neg = ar.neg(c);
                for (x, &y) in v.iter_mut().zip(b) {
                    if y != 0 {
                        *x = ar.add(*x, ar.mul(neg, y));
                    }
                }
            }
        }
        v.iter().position(|&x| x != 0)
    }

    fn push(&mut self, ar: &Arith, mut v: Vec<u32>, pivot: usize) {
        let inv = ar.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = ar.mul(*x, inv);
        }
        self.vecs.push(v);
        self.pivots.push(pivot);
    }

    fn pop(&mut self) {
        self.vecs.pop();
        self.pivots.pop();
    }
}

/// Largest closed column set per rank: `(size, mask)`, larger size first,
/// then smaller mask.
#[derive(Clone, Debug)]
struct Best(Vec<Option<(usize, u64)>>);

impl Best {
    fn new(kappa: usize) -> Self {
        Best(vec![None; kappa + 1])
    }

    #[inline]
    fn offer(&mut self, rank: usize, size: usize, mask: u64) {
        let slot = &mut self.0[rank];
        let better = match *slot {
            None => true,
            Some((s, m)) => size > s || (size == s && mask < m),
        };
        if better {
            *slot = Some((size, mask));
        }
    }

    fn merge(mut self, other: Best) -> Best {
        for (rank, v) in other.0.into_iter().enumerate() {
            if let Some((size, mask)) = v {
                self.offer(rank, size, mask);
            }
        }
        self
    }
}

struct Search<'a> {
    ar: Arith<'a>,
    cols: Vec<Vec<u32>>,
    kappa: usize,
}

impl Search<'_> {
    fn dfs(&self, j: usize, size: usize, mask: u64, basis: &mut Echelon, best: &mut Best) {
        let m = self.cols.len();
        if basis.rank() == self.kappa {
            // every remaining column is in the span
            let rest = ((1u64 << m) - 1) & !((1u64 << j) - 1);
            best.offer(self.kappa, size + (m - j), mask | rest);
            return;
        }
        if j == m {
            best.offer(basis.rank(), size, mask);
            return;
        }
        let mut v = self.cols[j].clone();
        match basis.reduce(&self.ar, &mut v) {
            None => self.dfs(j + 1, size + 1, mask | (1 << j), basis, best),
            Some(pivot) => {
                basis.push(&self.ar, v, pivot);
                self.dfs(j + 1, size + 1, mask | (1 << j), basis, best);
                basis.pop();
                self.dfs(j + 1, size, mask, basis, best);
            }
        }
    }

    /// Same walk as `dfs`, stopping at `depth` and collecting the states.
    fn frontier(
        &self,
        j: usize,
        size: usize,
        mask: u64,
        basis: &mut Echelon,
        depth: usize,
        out: &mut Vec<(usize, usize, u64, Echelon)>,
    ) {
        if j == depth || j == self.cols.len() || basis.rank() == self.kappa {
            out.push((j, size, mask, basis.clone()));
            return;
        }
        let mut v = self.cols[j].clone();
        match basis.reduce(&self.ar, &mut v) {
            None => self.frontier(j + 1, size + 1, mask | (1 << j), basis, depth, out),
            Some(pivot) => {
                basis.push(&self.ar, v, pivot);
                self.frontier(j + 1, size + 1, mask | (1 << j), basis, depth, out);
                basis.pop();
                self.frontier(j + 1, size, mask, basis, depth, out);
            }
        }
    }
}

/// The full weight hierarchy `delta_1..delta_kappa` of the row space of `g`.
#[derive(Debug, Clone)]
pub struct Hierarchy {
    pub length: usize,
    pub dim: usize,
    /// `weights[r-1] = delta_r`.
    pub weights: Vec<u64>,
    /// Column set `T` whose complement supports an optimal `r`-subcode.
    masks: Vec<u64>,
    basis: MatGF,
}

impl Hierarchy {
    pub fn weight(&self, r: usize) -> Result<u64, OracleError> {
        self.check_rank(r)?;
        Ok(self.weights[r - 1])
    }

    fn check_rank(&self, r: usize) -> Result<(), OracleError> {
        if r == 0 || r > self.dim {
            return Err(OracleError::RankOutOfRange { r, kappa: self.dim });
        }
        Ok(())
    }

    /// Support set and basis of an `r`-dimensional subcode of weight `delta_r`.
    pub fn witness(&self, r: usize) -> Result<Witness, OracleError> {
        self.check_rank(r)?;
        let mask = self.masks[r - 1];
        let inside: Vec<usize> = (0..self.length).filter(|&j| mask >> j & 1 == 1).collect();
        // messages x with x * G_T = 0
        let messages = self.basis.select_columns(&inside).transpose().nullspace();
        let f = self.basis.field().clone();
        let mut sub = MatGF::zeros(f, 0, self.length);
        for x in messages.rows().take(r) {
            sub.push_row(&self.basis.left_mul_vec(x))?;
        }
        let supp = support(&sub)?;
        debug_assert_eq!(supp.len() as u64, self.weights[r - 1]);
        Ok(Witness { support: supp, basis: sub })
    }
}

/// Computes every generalized Hamming weight of the code spanned by `g`.
pub fn weight_hierarchy(g: &MatGF) -> Result<Hierarchy, OracleError> {
    let m = g.ncols();
    if m > MAX_ORACLE_LENGTH {
        return Err(OracleError::LengthTooLargeForOracle(m));
    }
    let basis = g.row_basis();
    let kappa = basis.nrows();
    let field = basis.field().clone();
    let ar = Arith::new(&field);
    let cols: Vec<Vec<u32>> = (0..m).map(|j| basis.column(j).iter().map(|e| e.index()).collect()).collect();
    let search = Search { ar, cols, kappa };

    let mut states = Vec::new();
    search.frontier(0, 0, 0, &mut Echelon::new(), SPLIT_DEPTH.min(m), &mut states);
    let best = states
        .into_par_iter()
        .map(|(j, size, mask, mut ech)| {
            let mut best = Best::new(kappa);
            search.dfs(j, size, mask, &mut ech, &mut best);
            best
        })
        .reduce(|| Best::new(kappa), Best::merge);

    let mut weights = Vec::with_capacity(kappa);
    let mut masks = Vec::with_capacity(kappa);
    for r in 1..=kappa {
        let (size, mask) = best.0[..=kappa - r]
            .iter()
            .flatten()
            .copied()
            .fold(None::<(usize, u64)>, |acc, (s, mk)| match acc {
                Some((bs, bm)) if bs > s || (bs == s && bm <= mk) => Some((bs, bm)),
                _ => Some((s, mk)),
            })
            .expect("the empty set has rank 0");
        weights.push((m - size) as u64);
        masks.push(mask);
    }
    Ok(Hierarchy { length: m, dim: kappa, weights, masks, basis })
}

/// `delta_r(C)` by subset rank, with a witness subcode.
pub fn ghw_subset_rank(code: &EvalCode, r: usize) -> Result<(u64, Witness), OracleError> {
    if r == 0 || r > code.dim() {
        return Err(OracleError::RankOutOfRange { r, kappa: code.dim() });
    }
    let h = weight_hierarchy(code.gen_basis())?;
    Ok((h.weight(r)?, h.witness(r)?))
}

fn enum_classes(q: u64, kappa: usize) -> u128 {
    let q = q as u128;
    let mut total: u128 = 0;
    for _ in 0..kappa {
        total = total.saturating_mul(q).saturating_add(1);
    }
    // (q^kappa - 1)/(q - 1) = 1 + q + ... + q^{kappa-1}
    total
}

/// Minimum weight of the row space of `g` by codeword enumeration.
pub fn min_weight_enum(g: &MatGF) -> Result<(u64, Vec<FieldElem>), OracleError> {
    let basis = g.row_basis();
    let kappa = basis.nrows();
    if kappa == 0 {
        return Err(OracleError::ZeroCode);
    }
    let field = basis.field().clone();
    let classes = enum_classes(field.q() as u64, kappa);
    if classes > MAX_ENUM_CLASSES as u128 {
        return Err(OracleError::DimensionTooLargeForOracle { classes });
    }
    if field.q() <= 256 {
        Ok(GrayEnum::new(&field, &basis).run())
    } else {
        Ok(min_weight_plain(&field, &basis))
    }
}

/// Straightforward enumeration over all normalized messages.
fn min_weight_plain(field: &FieldSpec, basis: &MatGF) -> (u64, Vec<FieldElem>) {
    let kappa = basis.nrows();
    let q = field.q() as u64;
    let mut best: Option<(u64, Vec<FieldElem>)> = None;
    for lead in 0..kappa {
        let tail = kappa - lead - 1;
        for n in 0..q.pow(tail as u32) {
            let mut x = vec![FieldElem::ZERO; kappa];
            x[lead] = FieldElem::ONE;
            let mut rest = n;
            for slot in x[lead + 1..].iter_mut().rev() {
                *slot = field.elem(rest % q).expect("digit below q");
                rest /= q;
            }
            let cw = basis.left_mul_vec(&x);
            let w = cw.iter().filter(|c| !c.is_zero()).count() as u64;
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, cw));
            }
        }
    }
    best.expect("kappa >= 1")
}

/// Gray-code enumeration with byte-sized elements (`q <= 256`).
struct GrayEnum {
    q: usize,
    m: usize,
    kappa: usize,
    xor: bool,
    add: Vec<u8>,
    rows: Vec<Vec<u8>>,
    /// `step[row][v]` = `(e(v+1) - e(v)) * row`, indices mod q.
    step: Vec<Vec<Vec<u8>>>,
    /// `scaled[row][a]` = `a * row`.
    scaled: Vec<Vec<Vec<u8>>>,
}

impl GrayEnum {
    fn new(field: &FieldSpec, basis: &MatGF) -> Self {
        let q = field.q() as usize;
        let (m, kappa) = (basis.ncols(), basis.nrows());
        let add: Vec<u8> = field.add_table().expect("tables for q <= 256").iter().map(|&v| v as u8).collect();
        let rows: Vec<Vec<u8>> = basis.rows().map(|r| r.iter().map(|e| e.index() as u8).collect()).collect();
        let scale = |row: &[FieldElem], a: FieldElem| -> Vec<u8> {
            row.iter().map(|&x| field.mul(a, x).index() as u8).collect()
        };
        let mut step = Vec::with_capacity(kappa);
        let mut scaled = Vec::with_capacity(kappa);
        for row in basis.rows() {
            let mut per_v = Vec::with_capacity(q);
            let mut per_a = Vec::with_capacity(q);
            for v in 0..q {
                let a = field.elem(v as u64).unwrap();
                let next = field.elem(((v + 1) % q) as u64).unwrap();
                per_v.push(scale(row, field.sub(next, a)));
                per_a.push(scale(row, a));
            }
            step.push(per_v);
            scaled.push(per_a);
        }
        GrayEnum { q, m, kappa, xor: field.p() == 2, add, rows, step, scaled }
    }

    #[inline]
    fn add_into(&self, cw: &mut [u8], delta: &[u8]) {
        if self.xor {
            for (c, &d) in cw.iter_mut().zip(delta) {
                *c ^= d;
            }
        } else {
            for (c, &d) in cw.iter_mut().zip(delta) {
                *c = self.add[*c as usize * self.q + d as usize];
            }
        }
    }

    /// Work units: leading row, plus fixed values for up to two following rows.
    fn units(&self) -> Vec<(usize, Vec<usize>)> {
        let mut units = Vec::new();
        for lead in 0..self.kappa {
            let fixed = (self.kappa - lead - 1).min(2);
            let count = self.q.pow(fixed as u32);
            for n in 0..count {
                let mut digits = Vec::with_capacity(fixed);
                let mut rest = n;
                for _ in 0..fixed {
                    digits.push(rest % self.q);
                    rest /= self.q;
                }
                digits.reverse();
                units.push((lead, digits));
            }
        }
        units
    }

    fn run_unit(&self, lead: usize, fixed: &[usize]) -> (u64, Vec<u8>) {
        let mut cw = self.rows[lead].clone();
        for (i, &a) in fixed.iter().enumerate() {
            let row = lead + 1 + i;
            self.add_into(&mut cw, &self.scaled[row][a]);
        }
        let free_rows: Vec<usize> = (lead + 1 + fixed.len()..self.kappa).collect();
        let weight = |cw: &[u8]| cw.iter().filter(|&&b| b != 0).count() as u64;
        let mut best = (weight(&cw), cw.clone());
        // counter digits (least significant first) and current Gray digits
        let mut counter = vec![0usize; free_rows.len()];
        let mut gray = vec![0usize; free_rows.len()];
        loop {
            let mut pos = 0;
            while pos < counter.len() && counter[pos] == self.q - 1 {
                counter[pos] = 0;
                pos += 1;
            }
            if pos == counter.len() {
                break;
            }
            counter[pos] += 1;
            let row = free_rows[free_rows.len() - 1 - pos];
            self.add_into(&mut cw, &self.step[row][gray[pos]]);
            gray[pos] = (gray[pos] + 1) % self.q;
            let w = weight(&cw);
            if w < best.0 {
                best = (w, cw.clone());
            }
        }
        best
    }

    fn run(&self) -> (u64, Vec<FieldElem>) {
        let units = self.units();
        let results: Vec<(u64, Vec<u8>)> = units.par_iter().map(|(lead, fixed)| self.run_unit(*lead, fixed)).collect();
        // first minimum in unit order
        let (w, cw) = results.into_iter().reduce(|a, b| if b.0 < a.0 { b } else { a }).expect("at least one unit");
        debug_assert_eq!(cw.len(), self.m);
        (w, cw.into_iter().map(|b| elem(b as u32)).collect())
    }
}

/// `delta_1(C)` by codeword enumeration.
pub fn min_distance_enum(code: &EvalCode) -> Result<(u64, Vec<FieldElem>), OracleError> {
    min_weight_enum(code.gen_basis())
}

fn check_hierarchy(h: &Hierarchy) {
    assert!(h.weights.windows(2).all(|w| w[0] < w[1]), "weights must increase strictly: {:?}", h.weights);
}

/// `delta_1..delta_rmax` by the cheapest exact method that applies.
pub fn ghw_spectrum(code: &EvalCode, rmax: usize) -> Result<GhwReport, OracleError> {
    let kappa = code.dim();
    if rmax == 0 || rmax > kappa {
        return Err(OracleError::RankOutOfRange { r: rmax, kappa });
    }
    let id = CodeId::of(code);
    if code.len() <= MAX_ORACLE_LENGTH {
        let h = weight_hierarchy(code.gen_basis())?;
        check_hierarchy(&h);
        assert_eq!(h.weights[kappa - 1], code.len() as u64, "delta_kappa must equal the length");
        let mut witness_support = Vec::with_capacity(rmax);
        for r in 1..=rmax {
            witness_support.push((r, h.witness(r)?.support));
        }
        return Ok(GhwReport {
            code: id,
            method: Method::SubsetRank,
            weights: (1..=rmax).map(|r| (r, h.weights[r - 1])).collect(),
            witness_support,
        });
    }
    if rmax == 1 {
        let (w, cw) = min_distance_enum(code)?;
        let supp = (0..cw.len()).filter(|&j| !cw[j].is_zero()).collect();
        return Ok(GhwReport {
            code: id,
            method: Method::CodewordEnum,
            weights: vec![(1, w)],
            witness_support: vec![(1, supp)],
        });
    }
    Err(OracleError::LengthTooLargeForOracle(code.len()))
}

/// Wei duality: `{delta_r(C)} ∪ {m + 1 - delta_r(C^perp)} = {1..m}`.
pub fn wei_duality_check(code: &EvalCode) -> Result<bool, OracleError> {
    let dual = dual_code(code);
    wei_duality_of(code.gen_basis(), &dual.basis)
}

/// Wei duality for a generator matrix and a basis of its dual.
pub fn wei_duality_of(g: &MatGF, dual: &MatGF) -> Result<bool, OracleError> {
    let m = g.ncols();
    let primal = weight_hierarchy(g)?;
    let mut seen = vec![false; m + 1];
    let mut mark = |v: u64| -> bool {
        if v == 0 || v as usize > m || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
        true
    };
    for &w in &primal.weights {
        if !mark(w) {
            return Ok(false);
        }
    }
    if dual.rank() > 0 {
        for &w in &weight_hierarchy(dual)?.weights {
            if !mark(m as u64 + 1 - w) {
                return Ok(false);
            }
        }
    }
    Ok(seen[1..].iter().all(|&b| b))
}

/// Parameter-level comparison between the dual of `C_{V_k}(d)` and its
/// candidate from [`veronese_dual_candidate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorollaryReport {
    pub length: usize,
    pub dual_dim: usize,
    pub candidate_dim: usize,
    pub dual_weights: Vec<u64>,
    pub candidate_weights: Vec<u64>,
}

impl DualCorollaryReport {
    pub fn passed(&self) -> bool {
        self.dual_dim == self.candidate_dim && self.dual_weights == self.candidate_weights
    }
}

pub fn dual_corollary_check(field: &FieldSpec, s: usize, k: u32, d: u32) -> Result<DualCorollaryReport, CodeError> {
    let x = projective_space(field, s)?;
    let (image, _) = veronese_embed(&x, k);
    let code = build_code(&image, d)?;
    let dual = dual_code(&code).basis;
    let candidate = veronese_dual_candidate(field, s, k, d)?;
    let weights = |g: &MatGF| -> Result<Vec<u64>, CodeError> {
        if g.rank() == 0 {
            return Ok(Vec::new());
        }
        Ok(weight_hierarchy(g)?.weights)
    };
    Ok(DualCorollaryReport {
        length: x.len(),
        dual_dim: dual.rank(),
        candidate_dim: candidate.rank(),
        dual_weights: weights(&dual)?,
        candidate_weights: weights(&candidate)?,
    })
}
