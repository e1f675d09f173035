//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rmghw::evalcode::{
    build_code, build_code_normalized, hilbert_function, regularity, verify_veronese_theorem, Normalization,
};
use rmghw::formulas::{
    cartesian_ghw, decompose_degree, footprint_ghw, prm_min_distance, prm_regularity, CartesianParams,
};
use rmghw::gf::{FieldElem, FieldSpec};
use rmghw::oracle::{dual_corollary_check, ghw_spectrum, min_distance_enum, wei_duality_check, weight_hierarchy};
use rmghw::varieties::{
    cartesian_set, eval_monomial, monomials_of_degree, projective_space, projective_torus, veronese_embed, Monomial,
    PointSet, ProjPoint,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {:.1?}, limit {:?}", t, limit))
}

fn field(q: u32) -> FieldSpec {
    FieldSpec::of_order(q as u64).expect("prime power")
}

/// `H(d)`, `delta_1..delta_3` and the regularity index of `x` against a table.
fn check_table(x: &PointSet, h: &[usize], deltas: [&[u64]; 3], reg: u32) -> Result<(), String> {
    for (i, &want_h) in h.iter().enumerate() {
        let d = i as u32 + 1;
        let code = build_code(x, d).map_err(|e| e.to_string())?;
        ensure(code.len() == x.len(), || format!("d={d}: length {}", code.len()))?;
        ensure(code.dim() == want_h, || format!("d={d}: H={} want {want_h}", code.dim()))?;
        let rmax = code.dim().min(3);
        let report = ghw_spectrum(&code, rmax).map_err(|e| e.to_string())?;
        for r in 1..=rmax {
            let want = deltas[r - 1][i];
            let got = report.weight(r).unwrap();
            ensure(got == want, || format!("d={d}: delta_{r}={got} want {want}"))?;
        }
    }
    let got = regularity(x).map_err(|e| e.to_string())?;
    ensure(got.index == reg, || format!("regularity {} want {reg}", got.index))
}

fn criterion_torus() -> Outcome {
    let start = Instant::now();
    let t = projective_torus(&field(5), 3).map_err(|e| e.to_string())?;
    ensure(t.len() == 16, || format!("|T| = {}", t.len()))?;
    check_table(&t, &[3, 6, 10, 13, 15, 16], [&[12, 8, 4, 3, 2, 1], &[15, 11, 7, 4, 3, 2], &[16, 12, 8, 6, 4, 3]], 6)?;
    within(start, Duration::from_secs(30))?;
    Ok("projective torus over F5 in P^2, d=1..6".into())
}

fn criterion_veronese_torus() -> Outcome {
    let start = Instant::now();
    let t = projective_torus(&field(5), 3).map_err(|e| e.to_string())?;
    let (v, _) = veronese_embed(&t, 2);
    ensure(v.len() == 16 && v.s() == 6, || format!("|rho_2(T)| = {}, s = {}", v.len(), v.s()))?;
    check_table(&v, &[6, 13, 16], [&[8, 3, 1], &[11, 4, 2], &[12, 6, 3]], 3)?;
    within(start, Duration::from_secs(30))?;
    Ok("Veronese image rho_2 of the F5 torus, d=1..3".into())
}

fn criterion_prm() -> Outcome {
    let f = field(8);
    let p2 = projective_space(&f, 3).map_err(|e| e.to_string())?;
    ensure(p2.len() == 73, || format!("|P^2(F8)| = {}", p2.len()))?;

    let start = Instant::now();
    let h = [3, 6, 10, 15, 21, 28, 36, 45, 52, 58, 63, 67, 70, 72, 73];
    let delta = [64, 56, 48, 40, 32, 24, 16, 8, 7, 6, 5, 4, 3, 2, 1];
    for d in 1..=15u32 {
        let i = d as usize - 1;
        let got = hilbert_function(&p2, d).map_err(|e| e.to_string())?;
        ensure(got == h[i], || format!("H({d})={got} want {}", h[i]))?;
        let got = prm_min_distance(8, 3, d as u64).map_err(|e| e.to_string())?;
        ensure(got == delta[i], || format!("delta({d})={got} want {}", delta[i]))?;
    }
    let reg = regularity(&p2).map_err(|e| e.to_string())?;
    ensure(reg.index == 15 && reg.a_invariant == 14, || format!("regularity {:?}", reg))?;
    ensure(prm_regularity(8, 3) == 15, || "closed-form regularity".into())?;
    within(start, Duration::from_secs(10))?;

    for d in 1..=3u32 {
        let code = build_code(&p2, d).map_err(|e| e.to_string())?;
        let (w, _) = min_distance_enum(&code).map_err(|e| e.to_string())?;
        let want = delta[d as usize - 1];
        ensure(w == want, || format!("enumerated delta({d})={w} want {want}"))?;
    }
    Ok("P^2 over F8: H, delta, regularity for d=1..15; enumeration for d=1..3".into())
}

fn criterion_veronese_theorem() -> Outcome {
    let start = Instant::now();
    let p2 = projective_space(&field(8), 3).map_err(|e| e.to_string())?;
    let dims = [6, 15, 28, 45, 58, 67, 72, 73];
    for d in 1..=8u32 {
        let rep = verify_veronese_theorem(&p2, 2, d).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || {
            format!("d={d}: {:?}", (rep.lengths_equal, rep.dims_equal, rep.primal_equivalence, rep.dual_equivalence))
        })?;
        let want = dims[d as usize - 1];
        ensure(rep.dim_veronese == want, || format!("d={d}: dim {} want {want}", rep.dim_veronese))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("Veronese equivalence on P^2(F8), k=2, d=1..8".into())
}

fn cartesian_size_tuples() -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for a in 2..=4u64 {
        for b in a..=4 {
            out.push(vec![a, b]);
            for c in b..=4 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

fn criterion_cartesian_grid() -> Outcome {
    let start = Instant::now();
    let f = field(5);
    let (mut cells, mut oracle_cells) = (0usize, 0usize);
    for sizes in cartesian_size_tuples() {
        let params = CartesianParams::new(sizes.clone()).map_err(|e| e.to_string())?;
        let factors: Vec<Vec<FieldElem>> =
            sizes.iter().map(|&n| (0..n as i64).map(|i| f.from_int(i)).collect()).collect();
        let x = cartesian_set(&f, &factors).map_err(|e| e.to_string())?;
        let m = x.len();
        for d in 1..params.c0() {
            let dec = decompose_degree(&params, d).map_err(|e| e.to_string())?;
            let rmax = params.n() - dec.k;
            let hierarchy = if m <= 20 {
                let code = build_code(&x, d as u32).map_err(|e| e.to_string())?;
                Some(weight_hierarchy(code.gen_basis()).map_err(|e| e.to_string())?)
            } else {
                None
            };
            for r in 1..=rmax {
                let closed = cartesian_ghw(&params, d, r).map_err(|e| e.to_string())?;
                let foot = footprint_ghw(&params, d, r).map_err(|e| e.to_string())?;
                ensure(closed == foot, || format!("{sizes:?} d={d} r={r}: closed {closed} footprint {foot}"))?;
                if let Some(h) = &hierarchy {
                    let brute = h.weights[r - 1];
                    ensure(closed == brute, || format!("{sizes:?} d={d} r={r}: closed {closed} oracle {brute}"))?;
                    oracle_cells += 1;
                }
                cells += 1;
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("cartesian grid over F5: {cells} cells, {oracle_cells} checked by the oracle"))
}

/// Small codes on which the full hierarchy is computed.
fn oracle_scale_codes() -> Result<Vec<(String, PointSet, u32)>, String> {
    let mut out = Vec::new();
    for q in [3u32, 4, 5] {
        let t = projective_torus(&field(q), 3).map_err(|e| e.to_string())?;
        for d in 1..=2 * (q - 2) {
            out.push((format!("torus q={q} d={d}"), t.clone(), d));
        }
    }
    for q in [2u32, 3] {
        let p = projective_space(&field(q), 3).map_err(|e| e.to_string())?;
        for d in 1..=2 * (q - 1) {
            out.push((format!("P^2 q={q} d={d}"), p.clone(), d));
        }
    }
    for q in [2u32, 3, 4, 5, 7] {
        let p = projective_space(&field(q), 2).map_err(|e| e.to_string())?;
        for d in 1..q {
            out.push((format!("P^1 q={q} d={d}"), p.clone(), d));
        }
    }
    Ok(out)
}

fn random_normalization(rng: &mut ChaCha8Rng, x: &PointSet, d: u32) -> Normalization {
    let f = x.field();
    let units = f.nonzero_elements();
    let monomials = monomials_of_degree(x.s(), d);
    let mut representatives = Vec::with_capacity(x.len());
    let mut normalizers = Vec::with_capacity(x.len());
    for p in x.points() {
        let c = units[rng.gen_range(0..units.len())];
        let rep: Vec<FieldElem> = p.coords().iter().map(|&a| f.mul(a, c)).collect();
        let usable: Vec<&Monomial> =
            monomials.iter().filter(|m| !eval_monomial(f, m, &rep).unwrap().is_zero()).collect();
        normalizers.push(usable[rng.gen_range(0..usable.len())].clone());
        representatives.push(rep);
    }
    Normalization { representatives, normalizers }
}

fn veronese_injective(q: u32, s: usize, k: u32) -> Result<(), String> {
    let x = projective_space(&field(q), s).map_err(|e| e.to_string())?;
    let (image, _) = veronese_embed(&x, k);
    let mut pts: Vec<ProjPoint> = image.points().to_vec();
    pts.sort();
    pts.dedup();
    ensure(pts.len() == x.len(), || format!("q={q} s={s} k={k}: {} images of {} points", pts.len(), x.len()))
}

fn criterion_properties() -> Outcome {
    let codes = oracle_scale_codes()?;
    let mut wei = 0;
    for (name, x, d) in &codes {
        let code = build_code(x, *d).map_err(|e| e.to_string())?;
        let h = weight_hierarchy(code.gen_basis()).map_err(|e| e.to_string())?;
        ensure(h.weights.windows(2).all(|w| w[0] < w[1]), || {
            format!("{name}: not strictly increasing {:?}", h.weights)
        })?;
        ensure(*h.weights.last().unwrap() == code.len() as u64, || format!("{name}: delta_kappa != m"))?;
        if code.len() <= 16 {
            ensure(wei_duality_check(&code).map_err(|e| e.to_string())?, || format!("{name}: Wei duality fails"))?;
            wei += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let (name, x, d) = &codes[rng.gen_range(0..codes.len())];
        let base = build_code(x, *d).map_err(|e| e.to_string())?;
        let norm = random_normalization(&mut rng, x, *d);
        let renorm = build_code_normalized(x, *d, &norm).map_err(|e| e.to_string())?;
        ensure(renorm.dim() == base.dim(), || format!("trial {trial} ({name}): dimension changed"))?;
        let a = weight_hierarchy(base.gen_basis()).map_err(|e| e.to_string())?.weights;
        let b = weight_hierarchy(renorm.gen_basis()).map_err(|e| e.to_string())?.weights;
        ensure(a == b, || format!("trial {trial} ({name}): spectrum {a:?} became {b:?}"))?;
    }

    for q in [2u32, 3, 4, 5, 7, 8] {
        for s in 2..=3 {
            for k in 1..=3 {
                veronese_injective(q, s, k)?;
            }
        }
    }
    Ok(format!("{} codes monotone, {wei} Wei checks, 20 renormalizations, Veronese injective", codes.len()))
}

fn criterion_dual_corollary() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for q in [2u32, 3, 4] {
        let f = field(q);
        for s in 2..=3usize {
            let top = (q - 1) * (s as u32 - 1);
            for k in 1..=top {
                for d in 1..=top / k {
                    let rep = dual_corollary_check(&f, s, k, d).map_err(|e| e.to_string())?;
                    ensure(rep.passed(), || {
                        format!(
                            "q={q} s={s} k={k} d={d}: dims {} vs {}, weights {:?} vs {:?}",
                            rep.dual_dim, rep.candidate_dim, rep.dual_weights, rep.candidate_weights
                        )
                    })?;
                    checked += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("dual of C_(V_k)(d) matches its projective Reed-Muller counterpart in {checked} cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 torus table", criterion_torus),
        ("2 veronese torus table", criterion_veronese_torus),
        ("3 projective Reed-Muller table", criterion_prm),
        ("4 veronese equivalence", criterion_veronese_theorem),
        ("5 cartesian closed form", criterion_cartesian_grid),
        ("6 structural properties", criterion_properties),
        ("7 veronese dual", criterion_dual_corollary),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{t:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{t:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
