//! Point sets in projective space, the Veronese embedding, and monomials.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElem, FieldSpec, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("arity must be at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("factor {index} has {size} element(s); at least 2 are required")]
    FactorTooSmall { index: usize, size: usize },
    #[error("factor {0} contains repeated elements")]
    RepeatedFactorElement(usize),
    #[error("the projective torus over GF({0}) is a single point")]
    FieldTooSmall(u32),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("point set contains a repeated point")]
    DuplicatePoint,
    #[error("point set is empty")]
    Empty,
    #[error("malformed point-set text: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A projective point in standard form (first nonzero coordinate is 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElem>,
}

impl ProjPoint {
    /// Rescales `coords` so that its first nonzero entry is 1.
    pub fn standardize(field: &FieldSpec, coords: &[FieldElem]) -> Result<Self, VarietyError> {
        let lead = coords.iter().copied().find(|c| !c.is_zero()).ok_or(VarietyError::ZeroPoint)?;
        let inv = field.inv(lead)?;
        Ok(ProjPoint { coords: coords.iter().map(|&c| field.mul(c, inv)).collect() })
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    /// Index of the leading (unit) coordinate.
    pub fn pivot(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("standard form has a nonzero entry")
    }
}

/// Canonical order: pivot position first, then coordinates lexicographically
/// by integer encoding.
impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pivot().cmp(&other.pivot()).then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// How a point set was constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointKind {
    FullProjective,
    /// `factors` are sorted by size; `order[i]` is the caller's index of
    /// the factor placed in coordinate `i`.
    Cartesian {
        factors: Vec<Vec<FieldElem>>,
        order: Vec<usize>,
    },
    Torus,
    VeroneseImage {
        base: Box<PointKind>,
        k: u32,
    },
    Custom,
}

impl PointKind {
    /// Short tag used in headers and reports.
    pub fn tag(&self) -> String {
        match self {
            PointKind::FullProjective => "projective".into(),
            PointKind::Cartesian { factors, .. } => {
                let sizes: Vec<String> = factors.iter().map(|a| a.len().to_string()).collect();
                format!("cartesian({})", sizes.join(","))
            }
            PointKind::Torus => "torus".into(),
            PointKind::VeroneseImage { base, k } => format!("veronese{k}({})", base.tag()),
            PointKind::Custom => "custom".into(),
        }
    }

    /// Factor sizes `d_1 <= ... <= d_n` of a cartesian set.
    pub fn cartesian_sizes(&self) -> Option<Vec<u64>> {
        match self {
            PointKind::Cartesian { factors, .. } => Some(factors.iter().map(|a| a.len() as u64).collect()),
            _ => None,
        }
    }
}

/// An ordered set of distinct projective points over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: FieldSpec,
    s: usize,
    points: Vec<ProjPoint>,
    kind: PointKind,
}

impl PointSet {
    /// Arbitrary set of points; sorted canonically, duplicates rejected.
    pub fn custom(field: FieldSpec, s: usize, points: Vec<ProjPoint>) -> Result<Self, VarietyError> {
        Self::assemble(field, s, points, PointKind::Custom, true)
    }

    fn assemble(
        field: FieldSpec,
        s: usize,
        mut points: Vec<ProjPoint>,
        kind: PointKind,
        sort: bool,
    ) -> Result<Self, VarietyError> {
        if points.is_empty() {
            return Err(VarietyError::Empty);
        }
        for p in &points {
            if p.arity() != s {
                return Err(VarietyError::ArityMismatch { expected: s, got: p.arity() });
            }
        }
        let mut seen = HashSet::with_capacity(points.len());
        if !points.iter().all(|p| seen.insert(p)) {
            return Err(VarietyError::DuplicatePoint);
        }
        if sort {
            points.sort();
        }
        Ok(PointSet { field, s, points, kind })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Number of homogeneous coordinates (points live in P^{s-1}).
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn kind(&self) -> &PointKind {
        &self.kind
    }

    /// Same points regardless of order or kind tag.
    pub fn same_points(&self, other: &PointSet) -> bool {
        if self.s != other.s || self.len() != other.len() {
            return false;
        }
        let a: HashSet<_> = self.points.iter().collect();
        other.points.iter().all(|p| a.contains(p))
    }

    /// Line-oriented text: header `q s m kind`, then one point per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.field.q(), self.s, self.len(), self.kind.tag());
        for p in &self.points {
            let line: Vec<String> = p.coords.iter().map(|c| c.index().to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`PointSet::to_text`] output. Point order is kept; the kind is
    /// restored for `projective` and `torus` and is `Custom` otherwise.
    pub fn from_text(text: &str) -> Result<Self, VarietyError> {
        let bad = |msg: &str| VarietyError::Parse(msg.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("missing header"))?.split_whitespace().collect();
        if header.len() != 4 {
            return Err(bad("header must be `q s m kind`"));
        }
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad("expected an integer"));
        let field = FieldSpec::of_order(num(header[0])?)?;
        let s = num(header[1])? as usize;
        let m = num(header[2])? as usize;
        let kind = match header[3] {
            "projective" => PointKind::FullProjective,
            "torus" => PointKind::Torus,
            _ => PointKind::Custom,
        };
        let mut points = Vec::with_capacity(m);
        for line in lines {
            let coords = line
                .split_whitespace()
                .map(|t| field.elem(num(t)?).map_err(VarietyError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let p = ProjPoint::standardize(&field, &coords)?;
            if p.coords != coords {
                return Err(bad("point not in standard form"));
            }
            points.push(p);
        }
        if points.len() != m {
            return Err(bad("point count does not match header"));
        }
        Self::assemble(field, s, points, kind, false)
    }
}

/// Calls `visit` on every vector of `len` elements drawn from `alphabet`,
/// first coordinate most significant.
fn for_each_tuple(alphabets: &[&[FieldElem]], mut visit: impl FnMut(&[FieldElem])) {
    if alphabets.iter().any(|a| a.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; alphabets.len()];
    let mut cur: Vec<FieldElem> = alphabets.iter().map(|a| a[0]).collect();
    loop {
        visit(&cur);
        let mut pos = alphabets.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < alphabets[pos].len() {
                cur[pos] = alphabets[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            cur[pos] = alphabets[pos][0];
        }
    }
}

/// All points of P^{s-1}(GF(q)), in canonical order.
pub fn projective_space(field: &FieldSpec, s: usize) -> Result<PointSet, VarietyError> {
    if s < 2 {
        return Err(VarietyError::ArityTooSmall(s));
    }
    let all = field.elements();
    let mut points = Vec::new();
    for pivot in 0..s {
        let alphabets: Vec<&[FieldElem]> = vec![&all[..]; s - pivot - 1];
        for_each_tuple(&alphabets, |tail| {
            let mut coords = vec![FieldElem::ZERO; pivot];
            coords.push(FieldElem::ONE);
            coords.extend_from_slice(tail);
            points.push(ProjPoint { coords });
        });
    }
    PointSet::assemble(field.clone(), s, points, PointKind::FullProjective, false)
}

/// The projective cartesian set `[A_1 x ... x A_n x {1}]`.
///
/// Factors are stably sorted by size so that `|A_1| <= ... <= |A_n|`; the
/// permutation is recorded in the kind.
pub fn cartesian_set(field: &FieldSpec, factors: &[Vec<FieldElem>]) -> Result<PointSet, VarietyError> {
    if factors.is_empty() {
        return Err(VarietyError::ArityTooSmall(1));
    }
    let mut cleaned = Vec::with_capacity(factors.len());
    for (i, a) in factors.iter().enumerate() {
        if a.len() < 2 {
            return Err(VarietyError::FactorTooSmall { index: i, size: a.len() });
        }
        if let Some(&bad) = a.iter().find(|&&x| !field.contains(x)) {
            return Err(GfError::FieldMismatch { value: bad.index() as u64, q: field.q() }.into());
        }
        let mut sorted = a.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != a.len() {
            return Err(VarietyError::RepeatedFactorElement(i));
        }
        cleaned.push(sorted);
    }
    let mut order: Vec<usize> = (0..cleaned.len()).collect();
    order.sort_by_key(|&i| cleaned[i].len());
    let sorted: Vec<Vec<FieldElem>> = order.iter().map(|&i| cleaned[i].clone()).collect();

    let s = sorted.len() + 1;
    let alphabets: Vec<&[FieldElem]> = sorted.iter().map(|a| a.as_slice()).collect();
    let mut points = Vec::new();
    for_each_tuple(&alphabets, |tuple| {
        let mut coords = tuple.to_vec();
        coords.push(FieldElem::ONE);
        points.push(ProjPoint::standardize(field, &coords).expect("last coordinate is 1"));
    });
    PointSet::assemble(field.clone(), s, points, PointKind::Cartesian { factors: sorted, order }, true)
}

/// Points of P^{s-1} with every coordinate nonzero.
pub fn projective_torus(field: &FieldSpec, s: usize) -> Result<PointSet, VarietyError> {
    if s < 2 {
        return Err(VarietyError::ArityTooSmall(s));
    }
    if field.q() < 3 {
        return Err(VarietyError::FieldTooSmall(field.q()));
    }
    let units = field.nonzero_elements();
    let alphabets: Vec<&[FieldElem]> = vec![&units[..]; s - 1];
    let mut points = Vec::new();
    for_each_tuple(&alphabets, |tail| {
        let mut coords = vec![FieldElem::ONE];
        coords.extend_from_slice(tail);
        points.push(ProjPoint { coords });
    });
    PointSet::assemble(field.clone(), s, points, PointKind::Torus, false)
}

/// Exponent vector of a monomial in `s` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    /// Lex order: `self > other` iff the first nonzero entry of
    /// `self - other` is positive.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => continue,
                1 => write!(f, "t{}", i + 1)?,
                _ => write!(f, "t{}^{}", i + 1, e)?,
            }
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `binom(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of monomials of degree `d` in `s` variables.
pub fn monomial_count(s: usize, d: u32) -> Option<u64> {
    if s == 0 {
        return Some(u64::from(d == 0));
    }
    binomial(d as u64 + s as u64 - 1, s as u64 - 1)
}

/// All degree-`d` monomials in `s` variables, descending lex.
pub fn monomials_of_degree(s: usize, d: u32) -> Vec<Monomial> {
    fn fill(rest: u32, prefix: &mut Vec<u32>, s: usize, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == s {
            prefix.push(rest);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e);
            fill(rest - e, prefix, s, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    fill(d, &mut Vec::with_capacity(s), s, &mut out);
    out
}

/// Evaluates a monomial at a coordinate vector (`0^0 = 1`).
pub fn eval_monomial(field: &FieldSpec, m: &Monomial, coords: &[FieldElem]) -> Result<FieldElem, VarietyError> {
    if m.arity() != coords.len() {
        return Err(VarietyError::ArityMismatch { expected: m.arity(), got: coords.len() });
    }
    Ok(eval_unchecked(field, m, coords))
}

pub(crate) fn eval_unchecked(field: &FieldSpec, m: &Monomial, coords: &[FieldElem]) -> FieldElem {
    let mut acc = FieldElem::ONE;
    for (&e, &c) in m.exponents.iter().zip(coords) {
        if e == 0 {
            continue;
        }
        if c.is_zero() {
            return FieldElem::ZERO;
        }
        acc = field.mul(acc, field.pow(c, e as u64));
    }
    acc
}

/// The `k`-th Veronese embedding of `x`.
///
/// Output points follow the order of `x` so column `i` of a code on the image
/// corresponds to column `i` of a code on `x`. The second component holds the
/// raw scales `c_i`: the first nonzero entry of `(M_1(P_i), ..., M_N(P_i))`.
pub fn veronese_embed(x: &PointSet, k: u32) -> (PointSet, Vec<FieldElem>) {
    assert!(k >= 1, "Veronese degree must be positive");
    let field = &x.field;
    let monomials = monomials_of_degree(x.s, k);
    let mut points = Vec::with_capacity(x.len());
    let mut scales = Vec::with_capacity(x.len());
    for p in &x.points {
        let raw: Vec<FieldElem> = monomials.iter().map(|m| eval_unchecked(field, m, &p.coords)).collect();
        let c = raw.iter().copied().find(|v| !v.is_zero()).expect("t_j^k is nonzero at the pivot");
        points.push(ProjPoint::standardize(field, &raw).expect("nonzero image"));
        scales.push(c);
    }
    let kind = PointKind::VeroneseImage { base: Box::new(x.kind.clone()), k };
    let image = PointSet::assemble(field.clone(), monomials.len(), points, kind, false)
        .expect("the Veronese embedding is injective");
    (image, scales)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn ints(p: &ProjPoint) -> Vec<u32> {
        p.coords().iter().map(|c| c.index()).collect()
    }

    #[test]
    fn projective_line_over_f2() {
        let f = make_field(2, 1).unwrap();
        let x = projective_space(&f, 2).unwrap();
        let pts: Vec<_> = x.points().iter().map(ints).collect();
        assert_eq!(pts, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn projective_space_sizes() {
        assert_eq!(projective_space(&make_field(2, 3).unwrap(), 3).unwrap().len(), 73);
        assert_eq!(projective_space(&make_field(5, 1).unwrap(), 2).unwrap().len(), 6);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldSpec::of_order(q).unwrap();
            for s in 2..=4usize {
                let expected = (q.pow(s as u32) - 1) / (q - 1);
                let x = projective_space(&f, s).unwrap();
                assert_eq!(x.len() as u64, expected);
                let mut sorted = x.points().to_vec();
                sorted.sort();
                assert_eq!(sorted, x.points());
            }
        }
        assert_eq!(projective_space(&make_field(2, 1).unwrap(), 1), Err(VarietyError::ArityTooSmall(1)));
    }

    #[test]
    fn torus_examples() {
        let f3 = make_field(3, 1).unwrap();
        let t = projective_torus(&f3, 2).unwrap();
        assert_eq!(t.points().iter().map(ints).collect::<Vec<_>>(), vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(projective_torus(&make_field(2, 3).unwrap(), 2).unwrap().len(), 7);
        assert_eq!(projective_torus(&make_field(5, 1).unwrap(), 3).unwrap().len(), 16);
        assert_eq!(projective_torus(&make_field(2, 1).unwrap(), 3), Err(VarietyError::FieldTooSmall(2)));
    }

    #[test]
    fn cartesian_examples() {
        let f3 = make_field(3, 1).unwrap();
        let a = vec![f3.from_int(0), f3.from_int(1)];
        let x = cartesian_set(&f3, &[a.clone(), a]).unwrap();
        assert_eq!(x.len(), 4);
        assert_eq!(x.kind().cartesian_sizes(), Some(vec![2, 2]));

        let f2 = make_field(2, 1).unwrap();
        assert_eq!(cartesian_set(&f2, &[vec![f2.zero()]]), Err(VarietyError::FactorTooSmall { index: 0, size: 1 }));

        let f5 = make_field(5, 1).unwrap();
        let units = f5.nonzero_elements();
        let c = cartesian_set(&f5, &[units.clone(), units]).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.same_points(&projective_torus(&f5, 3).unwrap()));
    }

    #[test]
    fn cartesian_factors_are_sorted_by_size() {
        let f5 = make_field(5, 1).unwrap();
        let big: Vec<_> = (0..4).map(|v| f5.from_int(v)).collect();
        let small = vec![f5.from_int(1), f5.from_int(3)];
        let x = cartesian_set(&f5, &[big, small]).unwrap();
        match x.kind() {
            PointKind::Cartesian { factors, order } => {
                assert_eq!(factors[0].len(), 2);
                assert_eq!(order, &vec![1, 0]);
            }
            other => panic!("unexpected kind {other:?}"),
        }
        assert_eq!(x.len(), 8);
    }

    #[test]
    fn torus_equals_cartesian_over_units() {
        for q in [3u64, 4, 5, 7, 8] {
            let f = FieldSpec::of_order(q).unwrap();
            for s in 2..=3usize {
                let units = f.nonzero_elements();
                let c = cartesian_set(&f, &vec![units; s - 1]).unwrap();
                assert!(c.same_points(&projective_torus(&f, s).unwrap()), "q={q} s={s}");
            }
        }
    }

    #[test]
    fn monomial_enumeration() {
        let m = monomials_of_degree(3, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0].exponents(), &[2, 0, 0]);
        assert_eq!(m[5].exponents(), &[0, 0, 2]);
        let lin: Vec<_> = monomials_of_degree(3, 1).iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(lin, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomials_of_degree(3, 15).len(), 136);
        assert!(m.windows(2).all(|w| w[0].lex_cmp(&w[1]) == Ordering::Greater));
        assert_eq!(monomial_count(3, 15), Some(136));
    }

    #[test]
    fn monomial_evaluation() {
        let f = make_field(5, 1).unwrap();
        let ones = [f.one(); 3];
        assert_eq!(eval_monomial(&f, &Monomial::new(vec![1, 1, 0]), &ones), Ok(f.one()));
        let e1 = [f.one(), f.zero(), f.zero()];
        assert_eq!(eval_monomial(&f, &Monomial::new(vec![0, 0, 2]), &e1), Ok(f.zero()));
        assert_eq!(eval_monomial(&f, &Monomial::new(vec![0, 0, 0]), &e1), Ok(f.one()));
        assert_eq!(
            eval_monomial(&f, &Monomial::new(vec![1, 1]), &e1),
            Err(VarietyError::ArityMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn veronese_examples() {
        let f8 = make_field(2, 3).unwrap();
        let p2 = projective_space(&f8, 3).unwrap();
        let (v, c) = veronese_embed(&p2, 2);
        assert_eq!(v.len(), 73);
        assert_eq!(v.s(), 6);
        assert!(c.iter().all(|&x| x == f8.one()));

        let (same, ones) = veronese_embed(&p2, 1);
        assert_eq!(same.points(), p2.points());
        assert!(ones.iter().all(|&x| x == f8.one()));

        let f5 = make_field(5, 1).unwrap();
        let t = projective_torus(&f5, 3).unwrap();
        let (vt, _) = veronese_embed(&t, 2);
        assert_eq!(vt.len(), 16);
    }

    #[test]
    fn veronese_is_injective_on_small_spaces() {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let f = FieldSpec::of_order(q).unwrap();
            for s in 2..=3usize {
                let x = projective_space(&f, s).unwrap();
                for k in 1..=3u32 {
                    // assemble() rejects duplicate points, so success means injective
                    let (v, _) = veronese_embed(&x, k);
                    assert_eq!(v.len(), x.len());
                }
            }
        }
    }

    #[test]
    fn veronese_is_well_defined() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let f = make_field(7, 1).unwrap();
        let x = projective_space(&f, 3).unwrap();
        let monomials = monomials_of_degree(3, 2);
        for p in x.points() {
            let mu = f.from_int(rng.gen_range(1..7));
            let scaled: Vec<_> = p.coords().iter().map(|&c| f.mul(mu, c)).collect();
            let raw_a: Vec<_> = monomials.iter().map(|m| eval_unchecked(&f, m, p.coords())).collect();
            let raw_b: Vec<_> = monomials.iter().map(|m| eval_unchecked(&f, m, &scaled)).collect();
            assert_eq!(ProjPoint::standardize(&f, &raw_a), ProjPoint::standardize(&f, &raw_b));
        }
    }

    #[test]
    fn text_format_round_trips() {
        let f4 = make_field(2, 2).unwrap();
        let x = projective_space(&f4, 3).unwrap();
        let text = x.to_text();
        assert!(text.starts_with("4 3 21 projective\n"));
        let back = PointSet::from_text(&text).unwrap();
        assert_eq!(back, x);
        assert!(PointSet::from_text("4 3 2 custom\n2 1 0\n").is_err());
    }
}
