//! Closed forms for minimum distances and generalized Hamming weights, and
//! the footprint evaluator for affine cartesian codes.
//!
//! Cartesian sets are described by their factor sizes `d_1 <= ... <= d_n`
//! (`n = s - 1`); every degree `1 <= d <= c0 = sum (d_i - 1)` splits uniquely
//! as `d = sum_{i<=k} (d_i - 1) + l` with `1 <= l <= d_{k+1} - 1`.

use thiserror::Error;

use crate::varieties::Monomial;

/// Largest footprint box (`prod d_i`) enumerated by the footprint evaluator.
pub const MAX_FOOTPRINT_BOX: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("degree {d} is outside the valid range")]
    DegreeOutOfRange { d: u64 },
    #[error("rank {r} is outside the closed form's range 1..={max}")]
    RankOutOfTheoremRange { r: usize, max: usize },
    #[error("rank {r} is outside 1..={max}")]
    RankOutOfRange { r: usize, max: usize },
    #[error("field of order {0} is too small")]
    FieldTooSmall(u64),
    #[error("invalid cartesian parameters: {0}")]
    InvalidParams(String),
    #[error("arithmetic overflow")]
    Overflow,
}

type Result<T> = std::result::Result<T, FormulaError>;

/// Factor sizes of a projective cartesian set, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianParams {
    sizes: Vec<u64>,
}

impl CartesianParams {
    /// Sorts `sizes`; every size must be at least 2.
    pub fn new(mut sizes: Vec<u64>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(FormulaError::InvalidParams("no factors".into()));
        }
        if let Some(&bad) = sizes.iter().find(|&&x| x < 2) {
            return Err(FormulaError::InvalidParams(format!("factor size {bad} < 2")));
        }
        sizes.sort_unstable();
        Ok(CartesianParams { sizes })
    }

    /// All `n` factors of size `q - 1` (the projective torus in `P^n`).
    pub fn torus(q: u64, s: usize) -> Result<Self> {
        if q < 3 {
            return Err(FormulaError::FieldTooSmall(q));
        }
        Self::new(vec![q - 1; s.saturating_sub(1)])
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn n(&self) -> usize {
        self.sizes.len()
    }

    /// `c0 = sum (d_i - 1)`.
    pub fn c0(&self) -> u64 {
        self.sizes.iter().map(|d| d - 1).sum()
    }

    /// `prod d_i`, the code length.
    pub fn length(&self) -> Result<u64> {
        checked_product(&self.sizes)
    }

    /// `d_i * ... * d_j` with 1-based indices; 1 when the range is empty.
    fn product(&self, i: usize, j: usize) -> Result<u64> {
        if i > j || i < 1 {
            return Ok(1);
        }
        checked_product(&self.sizes[i - 1..j])
    }

    /// 1-based factor size.
    fn size(&self, i: usize) -> u64 {
        self.sizes[i - 1]
    }
}

fn checked_product(xs: &[u64]) -> Result<u64> {
    xs.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x).ok_or(FormulaError::Overflow))
}

/// `d = sum_{i<=k} (d_i - 1) + ell` with `1 <= ell <= d_{k+1} - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDecomposition {
    pub k: usize,
    pub ell: u64,
}

/// Greedy decomposition. Accepts `1 <= d <= c0`; at `d = c0` the result is
/// `k = n - 1`, `ell = d_n - 1`.
pub fn decompose_degree(params: &CartesianParams, d: u64) -> Result<DegreeDecomposition> {
    if d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    let mut rest = d;
    for (k, &dk) in params.sizes.iter().enumerate() {
        if rest < dk {
            return Ok(DegreeDecomposition { k, ell: rest });
        }
        rest -= dk - 1;
    }
    Err(FormulaError::DegreeOutOfRange { d })
}

/// `delta_r` of the cartesian code of degree `d`, for `1 <= r <= n - k`.
pub fn cartesian_ghw(params: &CartesianParams, d: u64, r: usize) -> Result<u64> {
    let DegreeDecomposition { k, ell } = decompose_degree(params, d)?;
    let n = params.n();
    let max = n - k;
    if r < 1 || r > max {
        return Err(FormulaError::RankOutOfTheoremRange { r, max });
    }
    let lead = params.size(k + 1) - ell + 1;
    if r < max {
        let inner = lead.checked_mul(params.product(k + 2, k + r)?).ok_or(FormulaError::Overflow)? - 1;
        params.product(k + r + 1, n)?.checked_mul(inner).ok_or(FormulaError::Overflow)
    } else {
        Ok(lead.checked_mul(params.product(k + 2, n)?).ok_or(FormulaError::Overflow)? - 1)
    }
}

/// Minimum distance of the cartesian code: `(d_{k+1} - ell) d_{k+2} ... d_n`
/// below `c0`, and 1 from `c0` on.
pub fn cartesian_min_distance(params: &CartesianParams, d: u64) -> Result<u64> {
    if d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    if d >= params.c0() {
        return Ok(1);
    }
    let DegreeDecomposition { k, ell } = decompose_degree(params, d)?;
    (params.size(k + 1) - ell).checked_mul(params.product(k + 2, params.n())?).ok_or(FormulaError::Overflow)
}

/// Regularity of a cartesian set: `c0`.
pub fn cartesian_regularity(params: &CartesianParams) -> u64 {
    params.c0()
}

fn checked_pow(base: u64, exp: u64) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| FormulaError::Overflow)?;
    base.checked_pow(exp).ok_or(FormulaError::Overflow)
}

/// `delta_r` of the projective torus code:
/// `[(q-1)^{r-1}(q-ell) - 1](q-1)^{s-k-r-1}` with `d = k(q-2) + ell`,
/// `1 <= ell <= q-2`, for `1 <= r <= s-k-1`.
pub fn torus_ghw(q: u64, s: usize, d: u64, r: usize) -> Result<u64> {
    if q < 3 {
        return Err(FormulaError::FieldTooSmall(q));
    }
    if d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    let k = (d - 1) / (q - 2);
    let ell = d - k * (q - 2);
    if s < 2 || k as u128 + 1 > s as u128 - 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    let max = s - k as usize - 1;
    if r < 1 || r > max {
        return Err(FormulaError::RankOutOfTheoremRange { r, max });
    }
    let head = checked_pow(q - 1, r as u64 - 1)?.checked_mul(q - ell).ok_or(FormulaError::Overflow)? - 1;
    head.checked_mul(checked_pow(q - 1, (max - r) as u64)?).ok_or(FormulaError::Overflow)
}

/// Regularity of the projective torus: `(q-2)(s-1)`.
pub fn torus_regularity(q: u64, s: usize) -> u64 {
    (q - 2) * (s as u64 - 1)
}

/// Minimum distance of the projective torus code.
pub fn torus_min_distance(q: u64, s: usize, d: u64) -> Result<u64> {
    if q < 3 {
        return Err(FormulaError::FieldTooSmall(q));
    }
    if s < 2 || d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    if d >= torus_regularity(q, s) {
        return Ok(1);
    }
    let k = (d - 1) / (q - 2);
    let ell = d - k * (q - 2);
    checked_pow(q - 1, s as u64 - (k + 2))?.checked_mul(q - 1 - ell).ok_or(FormulaError::Overflow)
}

/// Length `(q^s - 1)/(q - 1)` of the projective Reed-Muller code.
pub fn prm_length(q: u64, s: usize) -> Result<u64> {
    Ok((checked_pow(q, s as u64)? - 1) / (q - 1))
}

/// Regularity `(s-1)(q-1) + 1` of projective space.
pub fn prm_regularity(q: u64, s: usize) -> u64 {
    (s as u64 - 1) * (q - 1) + 1
}

/// Minimum distance of the projective Reed-Muller code `C_{P^{s-1}}(d)`:
/// `(q - ell + 1) q^{s-k-2}` with `d = k(q-1) + ell`, `1 <= ell <= q-1`, and 1
/// from the regularity on.
pub fn prm_min_distance(q: u64, s: usize, d: u64) -> Result<u64> {
    if q < 2 {
        return Err(FormulaError::FieldTooSmall(q));
    }
    if s < 2 || d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    if d >= prm_regularity(q, s) {
        return Ok(1);
    }
    let k = (d - 1) / (q - 1);
    let ell = d - k * (q - 1);
    (q - ell + 1).checked_mul(checked_pow(q, s as u64 - k - 2)?).ok_or(FormulaError::Overflow)
}

/// Which footprint ordering [`footprint_rth_monomial`] walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexDirection {
    /// Standard monomials of degree `>= c0 - d`, ascending lex.
    AscendingInHighDegrees,
    /// Standard monomials of degree `<= d`, descending lex.
    DescendingInLowDegrees,
}

/// Standard monomials `0 <= a_i <= d_i - 1` of the requested degree range,
/// sorted in the requested direction.
fn footprint_set(params: &CartesianParams, d: u64, dir: LexDirection) -> Result<Vec<Vec<u32>>> {
    let total = params.length()?;
    if total > MAX_FOOTPRINT_BOX {
        return Err(FormulaError::Overflow);
    }
    let n = params.n();
    let c0 = params.c0() as i64;
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    for _ in 0..total {
        let deg: i64 = a.iter().map(|&x| x as i64).sum();
        let keep = match dir {
            LexDirection::AscendingInHighDegrees => deg >= c0 - d as i64,
            LexDirection::DescendingInLowDegrees => deg <= d as i64,
        };
        if keep {
            out.push(a.clone());
        }
        // mixed-radix increment, last coordinate fastest: ascending lex
        for i in (0..n).rev() {
            a[i] += 1;
            if (a[i] as u64) < params.sizes[i] {
                break;
            }
            a[i] = 0;
        }
    }
    if dir == LexDirection::DescendingInLowDegrees {
        out.reverse();
    }
    Ok(out)
}

/// Number of standard monomials of degree `>= c0 - d`, i.e. `H_X(d)`.
pub fn footprint_dimension(params: &CartesianParams, d: u64) -> Result<usize> {
    Ok(footprint_set(params, d, LexDirection::AscendingInHighDegrees)?.len())
}

/// Exponents of the `r`-th monomial (1-based) in the requested ordering.
///
/// Where the degree decomposition exists and `2 <= r <= n - k`, the result
/// is checked against the explicit monomial
/// `t_{k+1}^{d_{k+1}-ell} t_{k+2}^{d_{k+2}-1} ... t_{k+r}^{d_{k+r}-2} ... t_n^{d_n-1}`
/// (ascending) or `t_1^{d_1-1} ... t_k^{d_k-1} t_{k+1}^{ell-1} t_{k+r}`
/// (descending).
pub fn footprint_rth_monomial(params: &CartesianParams, d: u64, r: usize, dir: LexDirection) -> Result<Monomial> {
    if d < 1 {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    let set = footprint_set(params, d, dir)?;
    if r < 1 || r > set.len() {
        return Err(FormulaError::RankOutOfRange { r, max: set.len() });
    }
    let found = set[r - 1].clone();
    if let Ok(dec) = decompose_degree(params, d) {
        if r >= 2 && r <= params.n() - dec.k {
            let expected = proof_monomial(params, dec, r, dir);
            assert_eq!(found, expected, "footprint monomial disagrees with the explicit form");
        }
    }
    Ok(Monomial::new(found))
}

/// Explicit `r`-th footprint monomial for `2 <= r <= n - k`.
pub fn proof_monomial(params: &CartesianParams, dec: DegreeDecomposition, r: usize, dir: LexDirection) -> Vec<u32> {
    let n = params.n();
    let DegreeDecomposition { k, ell } = dec;
    let mut a = vec![0u32; n];
    match dir {
        LexDirection::AscendingInHighDegrees => {
            a[k] = (params.size(k + 1) - ell) as u32;
            for i in k + 2..=n {
                a[i - 1] = (params.size(i) - 1) as u32;
            }
            a[k + r - 1] = (params.size(k + r) - 2) as u32;
        }
        LexDirection::DescendingInLowDegrees => {
            for i in 1..=k {
                a[i - 1] = (params.size(i) - 1) as u32;
            }
            a[k] = (ell - 1) as u32;
            a[k + r - 1] += 1;
        }
    }
    a
}

/// `delta_r = 1 + sum_i a_{r,i} prod_{j>i} d_j` over the `r`-th ascending
/// monomial of degree `>= c0 - d`. Defined for every `1 <= r <= H_X(d)`.
pub fn footprint_ghw(params: &CartesianParams, d: u64, r: usize) -> Result<u64> {
    let mono = footprint_rth_monomial(params, d, r, LexDirection::AscendingInHighDegrees)?;
    let n = params.n();
    let mut total = 1u64;
    for (i, &a) in mono.exponents().iter().enumerate() {
        let tail = params.product(i + 2, n)?;
        total = (a as u64).checked_mul(tail).and_then(|v| v.checked_add(total)).ok_or(FormulaError::Overflow)?;
    }
    Ok(total)
}

/// Degree `(q-1)(s-1) - kd` of the code dual to `C_{V_k}(d)`, and whether
/// the all-ones vector is adjoined (`kd ≡ 0 mod q-1`).
pub fn veronese_dual_degree(q: u64, s: usize, k: u64, d: u64) -> Result<(u64, bool)> {
    if q < 2 {
        return Err(FormulaError::FieldTooSmall(q));
    }
    let kd = k.checked_mul(d).ok_or(FormulaError::Overflow)?;
    let top = (q - 1) * (s as u64).saturating_sub(1);
    if k < 1 || d < 1 || kd > top {
        return Err(FormulaError::DegreeOutOfRange { d });
    }
    Ok((top - kd, kd % (q - 1) == 0))
}
